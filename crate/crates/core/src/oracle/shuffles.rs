//! Exhaustive enumeration of Gilbert–Shannon–Reeds `b`-shuffles.
//!
//! A digit word `w` in `{0..b-1}^n` labels each position with a packet. The
//! inverse shuffle `tau_w` lists the positions stably sorted by digit, and the
//! shuffle outcome is `sigma_w = tau_w^{-1}`. Every outcome satisfies
//! `d(sigma_w^{-1}) <= b - 1`, and a chain step moves a permutation `s` to
//! `sigma_w o s`. This orientation is the one under which descent counts lump
//! into the amazing matrix (already visible at `n = 4`).

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::amazing::{AmazingMatrix, DescentPolynomial};
use crate::combinatorics::{permutations, Permutation};
use crate::eulerian::fundamental_evaluation;
use crate::matrix::Matrix;
use crate::oracle::group_algebra::GroupAlgebraElement;
use crate::report::{Check, Report};
use crate::{Error, Result};

/// Maximum number of digit words enumerated.
pub const WORD_BUDGET: u64 = 10_000_000;
/// Largest `n` for which the transition oracle sweeps all of `S_n`.
pub const CHAIN_MAX_N: usize = 6;

/// `tau_w`: positions `1..=n` stably sorted by digit.
pub fn inverse_shuffle(word: &[u64]) -> Permutation {
    let mut positions: Vec<usize> = (1..=word.len()).collect();
    positions.sort_by_key(|&p| word[p - 1]);
    Permutation::from_images_unchecked(positions)
}

/// `sigma_w = tau_w^{-1}`: position `p` goes to its rank in the stable sort.
pub fn shuffle_outcome(word: &[u64]) -> Permutation {
    inverse_shuffle(word).inverse()
}

/// Outcomes of all `b^n` digit words, with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShuffleMultiset {
    pub n: usize,
    pub b: u64,
    pub multiplicity: BTreeMap<Permutation, BigUint>,
}

fn word_count(n: usize, b: u64) -> Result<u64> {
    let total = (b as u128).checked_pow(n as u32).filter(|&t| t <= WORD_BUDGET as u128);
    total.map(|t| t as u64).ok_or_else(|| Error::BudgetExceeded {
        what: format!("{b}^{n} digit words"),
        limit: WORD_BUDGET.to_string(),
    })
}

/// Calls `f` on every word of `{0..b-1}^n` in lexicographic order.
fn for_each_word(n: usize, b: u64, mut f: impl FnMut(&[u64])) {
    let mut word = vec![0u64; n];
    loop {
        f(&word);
        let Some(pos) = (0..n).rev().find(|&p| word[p] + 1 < b) else {
            return;
        };
        word[pos] += 1;
        for later in &mut word[pos + 1..] {
            *later = 0;
        }
    }
}

pub fn enumerate_b_shuffles(n: usize, b: u64) -> Result<ShuffleMultiset> {
    if b == 0 {
        return Err(Error::InvalidParameter("b must be at least 1".into()));
    }
    word_count(n, b)?;
    let mut counts: BTreeMap<Permutation, u64> = BTreeMap::new();
    for_each_word(n, b, |w| *counts.entry(shuffle_outcome(w)).or_default() += 1);
    Ok(ShuffleMultiset { n, b, multiplicity: counts.into_iter().map(|(p, c)| (p, BigUint::from(c))).collect() })
}

impl ShuffleMultiset {
    pub fn total(&self) -> BigUint {
        self.multiplicity.values().sum()
    }

    /// `sum_w tau_w`, the group-algebra image of `S_n[b]`.
    pub fn inverse_element(&self) -> GroupAlgebraElement {
        GroupAlgebraElement::from_terms(
            self.n,
            self.multiplicity.iter().map(|(p, c)| (p.inverse(), BigRational::from_integer(BigInt::from(c.clone())))),
        )
        .expect("all outcomes have degree n")
    }

    /// Support rule, total mass, and the multiplicity `F_I(b)` of each outcome
    /// whose inverse has descent composition `I`.
    pub fn structure_report(&self) -> Report {
        let params = format!("n={} b={}", self.n, self.b);
        let mut report = Report::new();
        let total = self.total();
        let expected_total = BigUint::from(self.b).pow(self.n as u32);
        report.push(Check::from_bool("shuffle mass = b^n", params.clone(), total == expected_total, || format!("mass {total}")));

        let mut support_ok = true;
        let mut mult_ok = true;
        let mut detail = String::new();
        for sigma in permutations(self.n) {
            let inv = sigma.inverse();
            let allowed = (inv.descent_count() as u64) < self.b;
            let got = self.multiplicity.get(&sigma).cloned().unwrap_or_else(BigUint::zero);
            if allowed == got.is_zero() {
                support_ok = false;
                detail = format!("support rule broken at {sigma}");
            }
            let expected = fundamental_evaluation(&inv.descent_composition(), self.b);
            if got != expected {
                mult_ok = false;
                detail = format!("multiplicity of {sigma} is {got}, expected {expected}");
            }
        }
        report.push(Check::from_bool("support = {s : d(s^-1) <= b-1}", params.clone(), support_ok, || detail.clone()));
        report.push(Check::from_bool("multiplicity = F_I(b)", params, mult_ok, || detail.clone()));
        report
    }
}

/// Descent-count transition matrix of the shuffle chain, by sweeping every
/// starting permutation of each descent class.
///
/// Fails with [`Error::LumpingViolated`] if two permutations with the same
/// number of descents lead to different rows.
pub fn oracle_transition_matrix(n: usize, b: u64) -> Result<Matrix<BigRational>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if n > CHAIN_MAX_N {
        return Err(Error::BudgetExceeded { what: format!("transition oracle at n={n}"), limit: format!("n <= {CHAIN_MAX_N}") });
    }
    let shuffles = enumerate_b_shuffles(n, b)?;
    let outcomes: Vec<(Permutation, u64)> =
        shuffles.multiplicity.iter().map(|(p, c)| (p.clone(), c.to_u64().expect("within word budget"))).collect();
    let mut rows: Vec<Option<(Permutation, Vec<u64>)>> = vec![None; n];
    for start in permutations(n) {
        let mut row = vec![0u64; n];
        for (sigma, mult) in &outcomes {
            row[sigma.compose(&start).descent_count()] += mult;
        }
        let class = start.descent_count();
        match &rows[class] {
            None => rows[class] = Some((start, row)),
            Some((first, seen)) if seen != &row => {
                return Err(Error::LumpingViolated {
                    params: format!("n={n} b={b} class={}", class + 1),
                    detail: format!("{first} gives {seen:?} but {start} gives {row:?}"),
                });
            }
            Some(_) => {}
        }
    }
    let total = BigInt::from(b).pow(n as u32);
    let rows: Vec<Vec<u64>> = rows.into_iter().map(|r| r.expect("every class is inhabited").1).collect();
    Ok(Matrix::from_fn(n, n, |i, j| BigRational::new(rows[i][j].into(), total.clone())))
}

/// Compares the transition oracle with a (possibly perturbed) amazing matrix.
pub fn transition_report(m: &AmazingMatrix) -> Report {
    let params = format!("n={} b={}", m.n(), m.b());
    let check = match oracle_transition_matrix(m.n(), m.b()) {
        Ok(oracle) => {
            let exact = m.normalized();
            Check::from_bool("oracle transition = normalized P", params, oracle == exact, || "matrices differ".into())
        }
        Err(e) => Check::fail("oracle transition = normalized P", params, e.to_string()),
    };
    Report::from_iter([check])
}

/// Histogram of `d(sigma) + 1` over the `m`-shuffle outcomes.
pub fn oracle_descent_polynomial(n: usize, m: u64) -> Result<DescentPolynomial> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let shuffles = enumerate_b_shuffles(n, m)?;
    let mut coeffs = vec![BigUint::zero(); n];
    for (sigma, c) in &shuffles.multiplicity {
        coeffs[sigma.descent_count()] += c;
    }
    DescentPolynomial::from_counts(n, BigUint::from(m), coeffs)
}
