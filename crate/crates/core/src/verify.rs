//! Every exact identity of the crate, swept over a parameter grid.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::amazing::{
    amazing_formula, descent_polynomial, determinant_report, multiplicativity_report, spectrum_report, stationary_report,
    stochastic_report, AmazingMatrix, EntryFormula,
};
use crate::combinatorics::binomial;
use crate::eulerian::{class_element, foulkes_matrix, spow_element, worpitzky_matrix, BasisMatrix, EulerianElement};
use crate::oracle::group_algebra::{group_product, idempotent_group, shuffle_element_from_words, GroupAlgebraElement, PRODUCT_MAX_N};
use crate::oracle::shuffles::{enumerate_b_shuffles, oracle_descent_polynomial, transition_report, CHAIN_MAX_N};
use crate::report::{Check, Report};
use crate::Result;

type Cell<'a> = Box<dyn Fn() -> Result<Report> + Send + Sync + 'a>;

/// Parameter grid for [`Suite::run`].
#[derive(Clone, Copy, Debug)]
pub struct Suite {
    pub max_n: usize,
    pub formula: EntryFormula,
}

impl Suite {
    pub fn new(max_n: usize) -> Self {
        Suite { max_n, formula: amazing_formula }
    }

    /// Uses `formula` in place of the amazing-matrix entries.
    pub fn with_formula(max_n: usize, formula: EntryFormula) -> Self {
        Suite { max_n, formula }
    }

    fn cells(&self) -> Vec<Cell<'_>> {
        let f = self.formula;
        let oracle_n = self.max_n.min(CHAIN_MAX_N).min(PRODUCT_MAX_N);
        let mut cells: Vec<Cell<'_>> = Vec::new();
        for n in 1..=self.max_n {
            for b in [2u64, 3, 10] {
                cells.push(Box::new(move || Ok(stochastic_report(&AmazingMatrix::with_formula(n, b, f)?))));
            }
            for b in [2u64, 3, 5] {
                cells.push(Box::new(move || Ok(spectrum_report(&AmazingMatrix::with_formula(n, b, f)?))));
            }
            for b in [2u64, 3] {
                cells.push(Box::new(move || stationary_report(&AmazingMatrix::with_formula(n, b, f)?)));
            }
            for b1 in 1..=4u64 {
                for b2 in 1..=4u64 {
                    cells.push(Box::new(move || multiplicativity_report(n, b1, b2, f)));
                }
            }
            cells.push(Box::new(move || determinant_report(n)));
            cells.push(Box::new(move || Ok(inverse_report(n))));
            cells.push(Box::new(move || Ok(worpitzky_report(n))));
            cells.push(Box::new(move || triangularity_report(n)));
            cells.push(Box::new(move || mass_report(n)));
        }
        for n in 1..=oracle_n {
            for b in [2u64, 3] {
                cells.push(Box::new(move || Ok(transition_report(&AmazingMatrix::with_formula(n, b, f)?))));
            }
            cells.push(Box::new(move || idempotent_report(n)));
            for b in 1..=4u64 {
                cells.push(Box::new(move || shuffle_element_report(n, b)));
            }
            for (b, r) in [(2u64, 1u32), (2, 2), (2, 3), (3, 1), (4, 1), (5, 1), (6, 1), (7, 1), (8, 1)] {
                cells.push(Box::new(move || descent_polynomial_report(n, b, r)));
            }
        }
        cells
    }

    /// Runs every cell, in parallel, reporting checks in a fixed order.
    pub fn run(&self) -> Report {
        let reports: Vec<Report> = self
            .cells()
            .par_iter()
            .map(|cell| cell().unwrap_or_else(|e| Report::from_iter([Check::fail("evaluation", "", e.to_string())])))
            .collect();
        let mut out = Report::new();
        reports.into_iter().for_each(|r| out.extend(r));
        out
    }
}

/// `F W = W F = I`.
pub fn inverse_report(n: usize) -> Report {
    let f = foulkes_matrix(n);
    let w = worpitzky_matrix(n);
    let ok = f.then(&w).map(|m| BasisMatrix::is_identity(&m)).unwrap_or(false)
        && w.then(&f).map(|m| BasisMatrix::is_identity(&m)).unwrap_or(false);
    Report::from_iter([Check::from_bool("F W = identity", format!("n={n}"), ok, || "product is not the identity".into())])
}

/// `sum_i F(k,i) C(x+n-i, n) = x^k` for integers `x` in `1..=10`.
pub fn worpitzky_report(n: usize) -> Report {
    let f = foulkes_matrix(n).entries;
    let mut ok = true;
    let mut detail = String::new();
    for x in 1..=10i64 {
        let binoms: Vec<BigRational> =
            (1..=n).map(|i| BigRational::from_integer(binomial(x + (n - i) as i64, n as u64).into())).collect();
        for k in 1..=n {
            let lhs: BigRational = f.row(k - 1).iter().zip(&binoms).map(|(a, c)| a * c).sum();
            let rhs = BigRational::from_integer(BigInt::from(x).pow(k as u32));
            if lhs != rhs {
                ok = false;
                detail = format!("x={x} k={k}: {lhs} != {rhs}");
            }
        }
    }
    Report::from_iter([Check::from_bool("sum_i F(k,i) C(x+n-i,n) = x^k", format!("n={n}"), ok, || detail)])
}

/// `A(n,i) - S[i] = sum_{r=1}^{i} (-1)^r C(n+1,r) S[i-r]`, checked by
/// solving for the `S`-coordinates of the difference.
pub fn triangularity_report(n: usize) -> Result<Report> {
    let mut report = Report::new();
    for i in 1..=n {
        let diff = class_element(n, i)?.checked_sub(&spow_element(n, i as u64))?;
        let coords = solve_in_power_basis(n, &diff)?;
        let ok = coords.iter().enumerate().all(|(m, c)| {
            let m = m + 1;
            if m >= i {
                c == &BigRational::from_integer(0.into())
            } else {
                let r = (i - m) as u64;
                let b = BigRational::from_integer(binomial(n as i64 + 1, r).into());
                c == &if r.is_multiple_of(2) { b } else { -b }
            }
        });
        report.push(Check::from_bool(
            "A(n,i) - S[i] in span of S[m], m < i",
            format!("n={n} i={i}"),
            ok,
            || format!("power coordinates {coords:?}"),
        ));
    }
    Ok(report)
}

/// Coordinates of `u` on `S[1], ..., S[n]`.
fn solve_in_power_basis(n: usize, u: &EulerianElement) -> Result<Vec<BigRational>> {
    // Rows of the system: coordinate j of sum_m c_m S[m] is sum_m m^j c_m.
    let mut aug: Vec<Vec<BigRational>> = (1..=n)
        .map(|j| {
            let mut row: Vec<BigRational> =
                (1..=n).map(|m| BigRational::from_integer(BigInt::from(m).pow(j as u32))).collect();
            row.push(u.coords()[j - 1].clone());
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| aug[r][col] != BigRational::from_integer(0.into())).ok_or(crate::Error::Singular)?;
        aug.swap(col, pivot);
        let p = aug[col][col].clone();
        for v in aug[col].iter_mut() {
            *v /= &p;
        }
        for r in 0..n {
            if r != col {
                let factor = aug[r][col].clone();
                for c in col..=n {
                    let sub = &factor * &aug[col][c];
                    aug[r][c] -= sub;
                }
            }
        }
    }
    Ok(aug.into_iter().map(|mut row| row.pop().expect("augmented column")).collect())
}

pub fn mass_report(n: usize) -> Result<Report> {
    let mut report = Report::new();
    for (b, r) in [(2u64, 1u32), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1), (5, 1), (6, 1), (7, 1), (8, 1), (9, 1)] {
        let p = descent_polynomial(n, b, r)?;
        report.push(Check::from_bool("descent polynomial mass = (b^r)^n", format!("n={n} b={b} r={r}"), p.mass() == p.expected_mass(), || {
            format!("mass {}", p.mass())
        }));
    }
    Ok(report)
}

pub fn descent_polynomial_report(n: usize, b: u64, r: u32) -> Result<Report> {
    let closed = descent_polynomial(n, b, r)?;
    let brute = oracle_descent_polynomial(n, b.pow(r))?;
    Ok(Report::from_iter([Check::from_bool(
        "descent polynomial = enumeration",
        format!("n={n} b={b} r={r}"),
        closed.coeffs == brute.coeffs,
        || format!("closed {:?} vs enumerated {:?}", closed.coeffs, brute.coeffs),
    )]))
}

/// Idempotency, orthogonality and completeness of the group-algebra idempotents.
pub fn idempotent_report(n: usize) -> Result<Report> {
    let es: Vec<GroupAlgebraElement> = (1..=n).map(|k| idempotent_group(n, k)).collect::<Result<_>>()?;
    let mut report = Report::new();
    for (k, ek) in es.iter().enumerate() {
        for (l, el) in es.iter().enumerate().skip(k) {
            let prod = group_product(ek, el)?;
            let params = format!("n={n} k={} l={}", k + 1, l + 1);
            if k == l {
                report.push(Check::from_bool("E_k E_k = E_k", params, &prod == ek, || "not idempotent".into()));
            } else {
                let reverse = group_product(el, ek)?;
                report.push(Check::from_bool("E_k E_l = 0", params, prod.is_zero() && reverse.is_zero(), || "nonzero product".into()));
            }
        }
    }
    let total = es.iter().try_fold(GroupAlgebraElement::zero(n), |acc, e| acc.checked_add(e))?;
    report.push(Check::from_bool(
        "sum_k E_k = identity",
        format!("n={n}"),
        total == GroupAlgebraElement::identity(n),
        || "sum is not the identity permutation".into(),
    ));
    Ok(report)
}

/// Enumerated shuffles against the S-word realization of `S_n[b]`, plus the
/// support and multiplicity rules.
pub fn shuffle_element_report(n: usize, b: u64) -> Result<Report> {
    let shuffles = enumerate_b_shuffles(n, b)?;
    let mut report = shuffles.structure_report();
    let words = shuffle_element_from_words(n, b)?;
    report.push(Check::from_bool(
        "sum_w tau_w = sum_I C(b,l(I)) S^I",
        format!("n={n} b={b}"),
        shuffles.inverse_element() == words,
        || "group elements differ".into(),
    ));
    Ok(report)
}
