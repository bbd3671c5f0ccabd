//! Integer helpers and the basic combinatorial objects: binomials,
//! compositions, permutations and their descent statistics.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Binomial coefficient `C(a, k)` for any integer `a`.
///
/// Follows the lattice-point convention: zero whenever `a < k`, including
/// every negative `a`.
pub fn binomial(a: i64, k: u64) -> BigUint {
    if a < 0 || (a as u64) < k {
        return BigUint::zero();
    }
    let a = a as u64;
    let k = k.min(a - k);
    let mut acc = BigUint::one();
    for step in 1..=k {
        // acc * (a - k + step) is always divisible by step at this point.
        acc = acc * (a - k + step) / step;
    }
    acc
}

/// [`binomial`] promoted to a signed integer, for use in alternating sums.
pub(crate) fn binomial_int(a: i64, k: u64) -> BigInt {
    BigInt::from(binomial(a, k))
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, m| acc * m)
}

/// `1! * 2! * ... * n!`.
pub fn superfactorial(n: u64) -> BigUint {
    let mut running = BigUint::one();
    let mut acc = BigUint::one();
    for m in 1..=n {
        running *= m;
        acc *= &running;
    }
    acc
}

/// An ordered tuple of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// The one-part composition `(n)`, or the empty one when `n == 0`.
    pub fn single(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Composition(vec![n])
        }
    }

    /// The composition of `n` whose partial sums are `set`.
    ///
    /// Elements of `set` must lie in `1..n`.
    pub fn from_descent_set(n: usize, set: &BTreeSet<usize>) -> Result<Self> {
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut last = 0;
        for &d in set {
            if d == 0 || d >= n {
                return Err(Error::InvalidDescentSet { n, position: d });
            }
            parts.push(d - last);
            last = d;
        }
        if n > 0 {
            parts.push(n - last);
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// Partial sums `i1, i1+i2, ...`, excluding the total.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        out
    }

    /// Concatenation `I . J`, the index of the product `S^I S^J`.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// Whether `self` is coarser than or equal to `other` (its descent set is
    /// contained in the descent set of `other`). Both must have equal weight.
    pub fn is_coarsening_of(&self, other: &Composition) -> bool {
        self.weight() == other.weight() && self.descent_set().is_subset(&other.descent_set())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, p) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All compositions of `n` in lexicographic order of their parts.
///
/// There are `2^(n-1)` of them for `n >= 1`; for `n == 0` the result is the
/// single empty composition.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn extend(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            extend(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(if n == 0 { 1 } else { 1 << (n - 1) });
    extend(n, &mut Vec::new(), &mut out);
    out
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::NotAPermutation(images));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation(images)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (pos, &x) in self.0.iter().enumerate() {
            inv[x - 1] = pos + 1;
        }
        Permutation(inv)
    }

    /// Functional composition: `(self.compose(other))(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        Permutation(other.0.iter().map(|&x| self.0[x - 1]).collect())
    }

    pub fn descent_count(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] > w[1]).count()
    }

    pub fn descent_set(&self) -> BTreeSet<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn descent_composition(&self) -> Composition {
        Composition::from_descent_set(self.n(), &self.descent_set())
            .expect("descent positions lie in 1..n")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Composition(self.0.clone()).fmt(f)
    }
}

/// All permutations of `{1..n}` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Permutation> {
    let mut current: Vec<usize> = (1..=n).collect();
    let mut out = vec![Permutation(current.clone())];
    // Standard next-permutation walk.
    loop {
        let Some(pivot) = (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let swap = (pivot..current.len()).rev().find(|&j| current[j] > current[pivot - 1]).unwrap();
        current.swap(pivot - 1, swap);
        current[pivot..].reverse();
        out.push(Permutation(current.clone()));
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentStatistics {
    pub descent_set: BTreeSet<usize>,
    pub descent_count: usize,
    pub descent_composition: Composition,
}

pub fn descent_statistics(p: &Permutation) -> DescentStatistics {
    let descent_set = p.descent_set();
    DescentStatistics {
        descent_count: descent_set.len(),
        descent_composition: Composition::from_descent_set(p.n(), &descent_set)
            .expect("descent positions lie in 1..n"),
        descent_set,
    }
}

/// Number of permutations of `n` with exactly `k - 1` descents.
///
/// Uses `A(n,k) = k A(n-1,k) + (n-k+1) A(n-1,k-1)` with `A(1,1) = 1`.
pub fn eulerian_number(n: usize, k: usize) -> Result<BigUint> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::OutOfRange { what: "eulerian index k", value: k as i64, lo: 1, hi: n as i64 });
    }
    Ok(eulerian_row(n).swap_remove(k - 1))
}

/// `[A(n,1), ..., A(n,n)]`.
pub fn eulerian_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for m in 2..=n {
        let mut next = vec![BigUint::zero(); m];
        for k in 1..=m {
            let mut v = BigUint::zero();
            if k < m {
                v += &row[k - 1] * k;
            }
            if k >= 2 {
                v += &row[k - 2] * (m - k + 1);
            }
            next[k - 1] = v;
        }
        row = next;
    }
    if n == 0 {
        Vec::new()
    } else {
        row
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(1, 2), big(0));
        assert_eq!(binomial(-3, 2), big(0));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(-1, 0), big(0));
        assert_eq!(binomial(60, 30), big(118264581564861424));
    }

    #[test]
    fn pascal_rule() {
        for a in 1..=64i64 {
            for k in 1..=(a as u64 + 2) {
                assert_eq!(binomial(a, k), binomial(a - 1, k - 1) + binomial(a - 1, k), "a={a} k={k}");
            }
        }
    }

    #[test]
    fn compositions_of_three() {
        let got: Vec<Vec<usize>> = compositions(3).into_iter().map(|c| c.parts().to_vec()).collect();
        assert_eq!(got, vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]);
        assert_eq!(compositions(0), vec![Composition::empty()]);
        assert_eq!(compositions(5).len(), 16);
        for n in 1..=12 {
            assert_eq!(compositions(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn composition_rejects_zero_part() {
        assert!(Composition::new(vec![1, 0, 2]).is_err());
        assert_eq!(Composition::new(vec![]).unwrap().weight(), 0);
    }

    #[test]
    fn descent_examples() {
        let s = descent_statistics(&Permutation::identity(4));
        assert!(s.descent_set.is_empty());
        assert_eq!(s.descent_count, 0);
        assert_eq!(s.descent_composition.parts(), &[4]);

        let s = descent_statistics(&Permutation::new(vec![1, 3, 2]).unwrap());
        assert_eq!(s.descent_set, BTreeSet::from([2]));
        assert_eq!(s.descent_count, 1);
        assert_eq!(s.descent_composition.parts(), &[2, 1]);

        let s = descent_statistics(&Permutation::new(vec![4, 3, 2, 1]).unwrap());
        assert_eq!(s.descent_set, BTreeSet::from([1, 2, 3]));
        assert_eq!(s.descent_count, 3);
        assert_eq!(s.descent_composition.parts(), &[1, 1, 1, 1]);

        let s = descent_statistics(&Permutation::identity(0));
        assert_eq!(s.descent_composition, Composition::empty());
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![2, 3]).is_err());
        let p = Permutation::new(vec![2, 4, 1, 3]).unwrap();
        assert_eq!(p.inverse().images(), &[3, 1, 4, 2]);
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(4));
    }

    #[test]
    fn permutations_are_exhaustive() {
        assert_eq!(permutations(0).len(), 1);
        for n in 1..=6 {
            let all = permutations(n);
            assert_eq!(BigUint::from(all.len()), factorial(n as u64));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn eulerian_examples() {
        assert_eq!(eulerian_number(1, 1).unwrap(), big(1));
        assert_eq!(eulerian_number(3, 2).unwrap(), big(4));
        let total: BigUint = (1..=4).map(|k| eulerian_number(4, k).unwrap()).sum();
        assert_eq!(total, big(24));
        assert!(eulerian_number(3, 0).is_err());
        assert!(eulerian_number(3, 4).is_err());
    }

    #[test]
    fn eulerian_matches_enumeration() {
        for n in 1..=7 {
            let mut counts = vec![0u64; n];
            for p in permutations(n) {
                counts[p.descent_count()] += 1;
            }
            let row: Vec<BigUint> = counts.into_iter().map(BigUint::from).collect();
            assert_eq!(eulerian_row(n), row, "n={n}");
        }
    }

    #[test]
    fn eulerian_sum_and_symmetry() {
        for n in 1..=20 {
            let row = eulerian_row(n);
            assert_eq!(row.iter().sum::<BigUint>(), factorial(n as u64));
            for k in 1..=n {
                assert_eq!(row[k - 1], row[n - k]);
            }
        }
    }

    #[test]
    fn superfactorial_examples() {
        assert_eq!(superfactorial(1), big(1));
        assert_eq!(superfactorial(2), big(2));
        assert_eq!(superfactorial(4), big(288));
    }

    proptest! {
        #[test]
        fn descent_composition_round_trip(perm in (0usize..=10).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())) {
            let p = Permutation::new(perm).unwrap();
            let stats = descent_statistics(&p);
            prop_assert_eq!(stats.descent_composition.descent_set(), stats.descent_set.clone());
            prop_assert_eq!(stats.descent_composition.weight(), p.n());
            prop_assert_eq!(stats.descent_count + usize::from(p.n() > 0), stats.descent_composition.length());
        }
    }
}
