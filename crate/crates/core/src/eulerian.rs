//! The commutative Eulerian subalgebra of degree `n`.
//!
//! Elements are stored by their coordinates on the orthogonal idempotents
//! `E[1], ..., E[n]`, where the internal product is coordinatewise. The two
//! other bases in use are
//!
//! * the powers `S[k] = sum_i k^i E[i]` (the `k`-shuffle elements), and
//! * the descent classes `A(n,k)`, the sum of all ribbons with `k` parts,
//!   i.e. of all permutations with `k - 1` descents.
//!
//! The Worpitzky matrix converts idempotent coordinates into class
//! coordinates and the Foulkes matrix goes back.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{binomial, binomial_int, compositions, factorial, Composition};
use crate::matrix::Matrix;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EulerianElement {
    n: usize,
    coords: Vec<BigRational>,
}

impl EulerianElement {
    pub fn from_coords(coords: Vec<BigRational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidParameter("Eulerian elements need degree n >= 1".into()));
        }
        Ok(EulerianElement { n: coords.len(), coords })
    }

    pub fn zero(n: usize) -> Self {
        EulerianElement { n, coords: vec![BigRational::zero(); n] }
    }

    /// `S_n = E[1] + ... + E[n]`, the unit of the internal product.
    pub fn unit(n: usize) -> Self {
        EulerianElement { n, coords: vec![BigRational::one(); n] }
    }

    pub fn idempotent(n: usize, k: usize) -> Result<Self> {
        check_index("idempotent index k", k, n)?;
        let mut e = Self::zero(n);
        e.coords[k - 1] = BigRational::one();
        Ok(e)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        same_degree(self, other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        same_degree(self, other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        EulerianElement { n: self.n, coords: self.coords.iter().map(|x| x * c).collect() }
    }

    /// Coordinates on the class basis `A(n,1), ..., A(n,n)`.
    pub fn class_coords(&self) -> Vec<BigRational> {
        worpitzky_matrix(self.n)
            .entries
            .mul_vec(&self.coords)
            .expect("square matrix of matching degree")
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        EulerianElement { n: self.n, coords: self.coords.iter().zip(&other.coords).map(|(a, b)| f(a, b)).collect() }
    }
}

fn same_degree(u: &EulerianElement, v: &EulerianElement) -> Result<()> {
    if u.n != v.n {
        return Err(Error::DegreeMismatch { left: u.n, right: v.n });
    }
    Ok(())
}

fn check_index(what: &'static str, k: usize, n: usize) -> Result<()> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::OutOfRange { what, value: k as i64, lo: 1, hi: n as i64 });
    }
    Ok(())
}

fn rational(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

/// `S_n[k] = sum_i k^i E[i]`. For `k = 0` this is the zero element.
pub fn spow_element(n: usize, k: u64) -> EulerianElement {
    let base = BigInt::from(k);
    let mut power = BigInt::one();
    let coords = (1..=n)
        .map(|_| {
            power *= &base;
            BigRational::from_integer(power.clone())
        })
        .collect();
    EulerianElement { n, coords }
}

/// The descent class `A(n,p)`, expanded through
/// `A(n,p) = sum_{i=0}^{p} (-1)^i C(n+1,i) S_n[p-i]`.
pub fn class_element(n: usize, p: usize) -> Result<EulerianElement> {
    check_index("class index p", p, n)?;
    let mut acc = EulerianElement::zero(n);
    for i in 0..=p {
        let c = binomial_int(n as i64 + 1, i as u64);
        let c = if i % 2 == 0 { c } else { -c };
        // S_n[0] vanishes in positive degree, so i = p adds nothing.
        let term = spow_element(n, (p - i) as u64).scale(&BigRational::from_integer(c));
        acc = acc.checked_add(&term)?;
    }
    Ok(acc)
}

/// The internal product restricted to the Eulerian subalgebra: coordinatewise
/// in the idempotent basis.
pub fn internal_product(u: &EulerianElement, v: &EulerianElement) -> Result<EulerianElement> {
    same_degree(u, v)?;
    Ok(u.zip_with(v, |a, b| a * b))
}

/// The bilinear form for which the idempotents are orthonormal.
pub fn pairing(u: &EulerianElement, v: &EulerianElement) -> Result<BigRational> {
    same_degree(u, v)?;
    Ok(u.coords.iter().zip(&v.coords).fold(BigRational::zero(), |acc, (a, b)| acc + a * b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Eulerian idempotents `E[k]`.
    Idempotent,
    /// Shuffle elements `S[k]`.
    Power,
    /// Descent classes `A(n,k)`.
    Class,
}

/// Change of basis: column `j` holds the `to`-coordinates of the `j`-th
/// element of the `from` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMatrix {
    pub n: usize,
    pub entries: Matrix<BigRational>,
    pub from: Basis,
    pub to: Basis,
}

/// Coefficients of `C(x + shift, n)` as a polynomial in `x`, constant term first.
///
/// Multiplies out `(x + shift)(x + shift - 1)...(x + shift - n + 1)` over the
/// integers and divides by `n!` at the end.
pub(crate) fn binomial_polynomial(shift: i64, n: usize) -> Vec<BigRational> {
    let mut poly = vec![BigInt::one()];
    for m in 0..n as i64 {
        let root = BigInt::from(shift - m);
        let mut next = vec![BigInt::zero(); poly.len() + 1];
        for (deg, c) in poly.iter().enumerate() {
            next[deg + 1] += c;
            next[deg] += c * &root;
        }
        poly = next;
    }
    let denom = BigInt::from(factorial(n as u64));
    poly.into_iter().map(|c| BigRational::new(c, denom.clone())).collect()
}

/// `W(i,j) = [x^j] C(x+n-i, n)`, so that `E[j] = sum_i W(i,j) A(n,i)`.
///
/// Columns are right eigenvectors of the amazing matrix.
pub fn worpitzky_matrix(n: usize) -> BasisMatrix {
    let polys: Vec<Vec<BigRational>> = (1..=n).map(|i| binomial_polynomial((n - i) as i64, n)).collect();
    BasisMatrix {
        n,
        entries: Matrix::from_fn(n, n, |i, j| polys[i][j + 1].clone()),
        from: Basis::Idempotent,
        to: Basis::Class,
    }
}

/// `F(i,j) = sum_{r=0}^{j} (-1)^r C(n+1,r) (j-r)^i`, so that
/// `A(n,j) = sum_i F(i,j) E[i]`.
///
/// Rows are left eigenvectors of the amazing matrix. The exponent `i` is at
/// least 1, so `0^i = 0` throughout.
pub fn foulkes_matrix(n: usize) -> BasisMatrix {
    let entry = |i: usize, j: usize| -> BigInt {
        (0..=j).fold(BigInt::zero(), |acc, r| {
            let term = binomial_int(n as i64 + 1, r as u64) * BigInt::from(j - r).pow(i as u32);
            if r % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        })
    };
    BasisMatrix {
        n,
        entries: Matrix::from_fn(n, n, |i, j| BigRational::from_integer(entry(i + 1, j + 1))),
        from: Basis::Class,
        to: Basis::Idempotent,
    }
}

/// A linear combination of complete-function words `S^I`, all of weight `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SWordExpansion {
    n: usize,
    terms: BTreeMap<Composition, BigRational>,
}

impl SWordExpansion {
    pub fn new(n: usize, terms: BTreeMap<Composition, BigRational>) -> Result<Self> {
        if let Some(bad) = terms.keys().find(|c| c.weight() != n) {
            return Err(Error::InvalidParameter(format!("word {bad} does not have weight {n}")));
        }
        Ok(SWordExpansion { n, terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Composition, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, word: &Composition) -> BigRational {
        self.terms.get(word).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn checked_add(&self, other: &SWordExpansion) -> Result<SWordExpansion> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch { left: self.n, right: other.n });
        }
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            *terms.entry(w.clone()).or_insert_with(BigRational::zero) += c;
        }
        SWordExpansion::new(self.n, terms)
    }
}

/// Truncated series of S-words; keys may have any weight up to the bound.
type WordSeries = BTreeMap<Composition, BigRational>;

/// Concatenation product of two word series, dropping weights above `max`.
fn concat_product(u: &WordSeries, v: &WordSeries, max: usize) -> WordSeries {
    let mut out = WordSeries::new();
    for (a, ca) in u {
        let wa = a.weight();
        for (b, cb) in v {
            if wa + b.weight() > max {
                continue;
            }
            *out.entry(a.concat(b)).or_insert_with(BigRational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `log(sigma_1) = sum_I (-1)^(l(I)-1) / l(I) S^I` over nonempty words of
/// weight at most `max`.
fn log_series(max: usize) -> WordSeries {
    (1..=max)
        .flat_map(compositions)
        .map(|c| {
            let len = c.length() as i64;
            let sign = if len % 2 == 1 { 1 } else { -1 };
            (c, BigRational::new(sign.into(), len.into()))
        })
        .collect()
}

/// Expansion of the idempotent `E_n[k]` on S-words, as the degree-`n` part
/// of `(log sigma_1)^k / k!`.
pub fn idempotent_s_expansion(n: usize, k: usize) -> Result<SWordExpansion> {
    check_index("idempotent index k", k, n)?;
    let log = log_series(n);
    let mut power = log.clone();
    for _ in 1..k {
        power = concat_product(&power, &log, n);
    }
    let k_fact = rational(factorial(k as u64));
    let terms = power.into_iter().filter(|(w, _)| w.weight() == n).map(|(w, c)| (w, c / &k_fact)).collect();
    SWordExpansion::new(n, terms)
}

/// Value of the fundamental quasi-symmetric function `F_I` at `N` equal
/// variables: `C(N + n - l(I), n)`.
pub fn fundamental_evaluation(composition: &Composition, big_n: u64) -> num_bigint::BigUint {
    let n = composition.weight();
    binomial(big_n as i64 + n as i64 - composition.length() as i64, n as u64)
}

impl BasisMatrix {
    /// Product `self * other` as a change of basis; the bases must chain.
    pub fn then(&self, other: &BasisMatrix) -> Result<Matrix<BigRational>> {
        if self.from != other.to {
            return Err(Error::InvalidParameter(format!("cannot chain {:?}->{:?} after {:?}->{:?}", self.from, self.to, other.from, other.to)));
        }
        self.entries.mul(&other.entries)
    }

    pub fn is_identity(m: &Matrix<BigRational>) -> bool {
        m.is_square()
            && (0..m.rows()).all(|i| (0..m.cols()).all(|j| m.get(i, j) == &if i == j { BigRational::one() } else { BigRational::zero() }))
    }
}
