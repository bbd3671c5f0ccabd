//! The amazing matrix: descent-count transitions of repeated `b`-shuffles,
//! equivalently Holte's carries chain for adding `n` base-`b` numbers.
//!
//! Entries are kept unnormalized, as integers with row sums `b^n`. State `i`
//! (1-based) is "`i - 1` descents" or "carry `i - 1`".

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{binomial_int, eulerian_row, factorial, superfactorial};
use crate::eulerian::{foulkes_matrix, worpitzky_matrix};
use crate::matrix::Matrix;
use crate::report::{Check, Report};
use crate::{Error, Result};

/// Signature of an entry formula `(n, b, i, j) -> P_ij(b)`.
///
/// Verification routines accept any formula so that a deliberately broken
/// one can be shown to fail.
pub type EntryFormula = fn(usize, u64, usize, usize) -> BigInt;

fn check_params(n: usize, b: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if b == 0 {
        return Err(Error::InvalidParameter("b must be at least 1".into()));
    }
    Ok(())
}

fn check_state(what: &'static str, idx: usize, n: usize) -> Result<()> {
    if idx == 0 || idx > n {
        return Err(Error::OutOfRange { what, value: idx as i64, lo: 1, hi: n as i64 });
    }
    Ok(())
}

/// `sum_{r=0}^{j} (-1)^r C(n+1,r) C(n + b(j-r) - i, n)` without range checks.
pub fn amazing_formula(n: usize, b: u64, i: usize, j: usize) -> BigInt {
    let n_i = n as i64;
    (0..=j).fold(BigInt::zero(), |acc, r| {
        let top = n_i + (b as i64) * (j - r) as i64 - i as i64;
        let term = binomial_int(n_i + 1, r as u64) * binomial_int(top, n as u64);
        if r % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// Unnormalized transition count `P_ij(b)`, out of `b^n`.
pub fn amazing_entry(n: usize, b: u64, i: usize, j: usize) -> Result<BigInt> {
    check_params(n, b)?;
    check_state("row index i", i, n)?;
    check_state("column index j", j, n)?;
    Ok(amazing_formula(n, b, i, j))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmazingMatrix {
    n: usize,
    b: u64,
    entries: Matrix<BigInt>,
    normalizer: BigInt,
}

impl AmazingMatrix {
    pub fn new(n: usize, b: u64) -> Result<Self> {
        Self::with_formula(n, b, amazing_formula)
    }

    pub fn with_formula(n: usize, b: u64, formula: EntryFormula) -> Result<Self> {
        check_params(n, b)?;
        Ok(AmazingMatrix {
            n,
            b,
            entries: Matrix::from_fn(n, n, |i, j| formula(n, b, i + 1, j + 1)),
            normalizer: BigInt::from(b).pow(n as u32),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn entries(&self) -> &Matrix<BigInt> {
        &self.entries
    }

    /// `b^n`, the common row sum.
    pub fn normalizer(&self) -> &BigInt {
        &self.normalizer
    }

    /// Entry at 1-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        self.entries.get(i - 1, j - 1)
    }

    pub fn normalized(&self) -> Matrix<BigRational> {
        self.entries.map(|x| BigRational::new(x.clone(), self.normalizer.clone()))
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        (0..self.n).map(|i| self.entries.row(i).iter().sum()).collect()
    }
}

pub fn amazing_matrix(n: usize, b: u64) -> Result<AmazingMatrix> {
    AmazingMatrix::new(n, b)
}

/// Row `i` (1-based) of the stochastic matrix.
pub fn normalized_row(m: &AmazingMatrix, i: usize) -> Result<Vec<BigRational>> {
    check_state("row index i", i, m.n)?;
    Ok(m.entries.row(i - 1).iter().map(|x| BigRational::new(x.clone(), m.normalizer.clone())).collect())
}

fn params(n: usize, b: u64) -> String {
    format!("n={n} b={b}")
}

/// Row sums equal `b^n` and every entry is nonnegative.
pub fn stochastic_report(m: &AmazingMatrix) -> Report {
    let mut report = Report::new();
    for (i, sum) in m.row_sums().into_iter().enumerate() {
        let p = format!("{} i={}", params(m.n, m.b), i + 1);
        report.push(Check::from_bool("row sum = b^n", p.clone(), &sum == m.normalizer(), || format!("row sum {sum}")));
        let negatives: Vec<String> = m.entries.row(i).iter().filter(|x| x.is_negative()).map(ToString::to_string).collect();
        report.push(Check::from_bool("entries nonnegative", p, negatives.is_empty(), || format!("negative entries {negatives:?}")));
    }
    report
}

/// Checks `P w_j = b^j w_j` for the Worpitzky columns and
/// `f_i P = b^i f_i` for the Foulkes rows, exactly.
pub fn spectrum_report(m: &AmazingMatrix) -> Report {
    let n = m.n;
    let p = m.entries.to_rational();
    let w = worpitzky_matrix(n).entries;
    let f = foulkes_matrix(n).entries;
    let mut report = Report::new();
    let mut eigenvalue = BigRational::one();
    let b = BigRational::from_integer(m.b.into());
    for k in 1..=n {
        eigenvalue *= &b;
        let column = w.column(k - 1);
        let image = p.mul_vec(&column).expect("square");
        let expected: Vec<BigRational> = column.iter().map(|x| x * &eigenvalue).collect();
        report.push(Check::from_bool(
            "right eigenvector P w_j = b^j w_j",
            format!("{} j={k}", params(n, m.b)),
            image == expected,
            || "image differs from scaled column".into(),
        ));

        let row = f.row(k - 1);
        let image = p.vec_mul(row).expect("square");
        let expected: Vec<BigRational> = row.iter().map(|x| x * &eigenvalue).collect();
        report.push(Check::from_bool(
            "left eigenvector f_i P = b^i f_i",
            format!("{} i={k}", params(n, m.b)),
            image == expected,
            || "image differs from scaled row".into(),
        ));
    }
    report
}

pub fn verify_spectrum(n: usize, b: u64) -> Result<Report> {
    Ok(spectrum_report(&AmazingMatrix::new(n, b)?))
}

/// `(A(n,k) / n!)_k`: the descent distribution of a uniform permutation.
pub fn stationary_distribution(n: usize) -> Result<Vec<BigRational>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let total = BigInt::from(factorial(n as u64));
    Ok(eulerian_row(n).into_iter().map(|a| BigRational::new(a.into(), total.clone())).collect())
}

pub fn stationary_report(m: &AmazingMatrix) -> Result<Report> {
    let pi = stationary_distribution(m.n)?;
    let image = m.entries.to_rational().vec_mul(&pi)?;
    let scale = BigRational::from_integer(m.normalizer.clone());
    let expected: Vec<BigRational> = pi.iter().map(|x| x * &scale).collect();
    Ok(Report::from_iter([Check::from_bool(
        "stationary pi P = b^n pi",
        params(m.n, m.b),
        image == expected,
        || "pi P differs from b^n pi".into(),
    )]))
}

pub fn verify_stationary(n: usize, b: u64) -> Result<Report> {
    stationary_report(&AmazingMatrix::new(n, b)?)
}

/// `P(b1) P(b2) = P(b1 b2)` on unnormalized entries.
pub fn multiplicativity_report(n: usize, b1: u64, b2: u64, formula: EntryFormula) -> Result<Report> {
    let p1 = AmazingMatrix::with_formula(n, b1, formula)?;
    let p2 = AmazingMatrix::with_formula(n, b2, formula)?;
    let p12 = AmazingMatrix::with_formula(n, b1 * b2, formula)?;
    let prod = p1.entries.mul(&p2.entries)?;
    Ok(Report::from_iter([Check::from_bool(
        "P(b1) P(b2) = P(b1 b2)",
        format!("n={n} b1={b1} b2={b2}"),
        prod == p12.entries,
        || format!("product {:?} vs {:?}", prod.to_rows(), p12.entries.to_rows()),
    )]))
}

pub fn verify_multiplicativity(n: usize, b1: u64, b2: u64) -> Result<Report> {
    multiplicativity_report(n, b1, b2, amazing_formula)
}

/// Exact determinant of the Foulkes matrix; equals `1! 2! ... n!`.
pub fn foulkes_determinant(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let det = foulkes_matrix(n).entries.determinant()?;
    if !det.is_integer() {
        return Err(Error::IdentityFailed {
            identity: "Foulkes determinant is an integer".into(),
            params: format!("n={n}"),
            detail: det.to_string(),
        });
    }
    Ok(det.to_integer())
}

pub fn determinant_report(n: usize) -> Result<Report> {
    let det = foulkes_determinant(n)?;
    let expected = BigInt::from(superfactorial(n as u64));
    Ok(Report::from_iter([Check::from_bool(
        "det F = superfactorial(n)",
        format!("n={n}"),
        det == expected,
        || format!("det {det}, expected {expected}"),
    )]))
}

/// Descent generating polynomial of an `m`-shuffle of `n` cards, `m = b^r`.
///
/// `coeffs[k-1]` counts shuffle outcomes (with multiplicity) having `k - 1`
/// descents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentPolynomial {
    pub n: usize,
    pub base: BigUint,
    pub coeffs: Vec<BigUint>,
}

impl DescentPolynomial {
    pub fn from_counts(n: usize, base: BigUint, coeffs: Vec<BigUint>) -> Result<Self> {
        if coeffs.len() != n {
            return Err(Error::Shape(format!("{} coefficients for n={n}", coeffs.len())));
        }
        Ok(DescentPolynomial { n, base, coeffs })
    }

    pub fn mass(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    pub fn expected_mass(&self) -> BigUint {
        self.base.pow(self.n as u32)
    }
}

/// `[t^k] (1-t)^(n+1) sum_{p>=1} t^p C(m p + n - 1, n)` for `k = 0..=n`.
fn descent_coefficient(n: usize, m: &BigInt, k: usize) -> BigInt {
    (0..=k).fold(BigInt::zero(), |acc, i| {
        let top = m * BigInt::from(k - i) + BigInt::from(n) - 1;
        let term = binomial_int(n as i64 + 1, i as u64) * big_binomial(&top, n);
        if i % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// `C(a, k)` for a big upper argument; zero when `a < k`.
fn big_binomial(a: &BigInt, k: usize) -> BigInt {
    if a < &BigInt::from(k) {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for step in 0..k {
        acc *= a - BigInt::from(step);
    }
    acc / BigInt::from(factorial(k as u64))
}

pub fn descent_polynomial(n: usize, b: u64, r: u32) -> Result<DescentPolynomial> {
    check_params(n, b)?;
    if r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    let m = BigInt::from(b).pow(r);
    let constant = descent_coefficient(n, &m, 0);
    if !constant.is_zero() {
        return Err(Error::IdentityFailed {
            identity: "descent polynomial has no constant term".into(),
            params: format!("n={n} b={b} r={r}"),
            detail: constant.to_string(),
        });
    }
    let coeffs = (1..=n)
        .map(|k| {
            let c = descent_coefficient(n, &m, k);
            c.to_biguint().ok_or_else(|| Error::IdentityFailed {
                identity: "descent polynomial coefficients are nonnegative".into(),
                params: format!("n={n} b={b} r={r} k={k}"),
                detail: c.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    DescentPolynomial::from_counts(n, m.to_biguint().expect("positive base"), coeffs)
}
