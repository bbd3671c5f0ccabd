//! Rational group algebra of a small symmetric group.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{compositions, permutations, Composition, Permutation};
use crate::eulerian::idempotent_s_expansion;
use crate::{Error, Result};

/// Largest degree for which ribbon sums and S-words are materialized.
pub const RIBBON_MAX_N: usize = 8;
/// Largest degree for group-algebra products and idempotents.
pub const PRODUCT_MAX_N: usize = 6;

fn check_bound(n: usize, limit: usize, what: &str) -> Result<()> {
    if n > limit {
        return Err(Error::BudgetExceeded { what: format!("{what} at n={n}"), limit: format!("n <= {limit}") });
    }
    Ok(())
}

/// A finite rational combination of permutations of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, BigRational>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_terms(n, [(Permutation::identity(n), BigRational::one())]).expect("degree matches")
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, BigRational)>) -> Result<Self> {
        let mut out = Self::zero(n);
        for (p, c) in terms {
            if p.n() != n {
                return Err(Error::DegreeMismatch { left: n, right: p.n() });
            }
            out.add_term(p, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, p: Permutation, c: BigRational) {
        match self.terms.entry(p) {
            Entry::Vacant(slot) => {
                if !c.is_zero() {
                    slot.insert(c);
                }
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, p: &Permutation) -> BigRational {
        self.terms.get(p).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch { left: self.n, right: other.n });
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        GroupAlgebraElement { n: self.n, terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect() }
    }

    /// Common denominator and integer numerators.
    fn integral_parts(&self) -> (BigInt, Vec<(&Permutation, BigInt)>) {
        let denom = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let numerators = self.terms.iter().map(|(p, c)| (p, c.numer() * (&denom / c.denom()))).collect();
        (denom, numerators)
    }
}

/// Product in the group algebra: `(sum a_p p)(sum b_q q) = sum a_p b_q (p o q)`
/// where `(p o q)(i) = p(q(i))`.
pub fn group_product(u: &GroupAlgebraElement, v: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
    if u.n != v.n {
        return Err(Error::DegreeMismatch { left: u.n, right: v.n });
    }
    check_bound(u.n, PRODUCT_MAX_N, "group product")?;
    let (du, nu) = u.integral_parts();
    let (dv, nv) = v.integral_parts();
    let mut acc: HashMap<Permutation, BigInt> = HashMap::new();
    for (p, a) in &nu {
        for (q, b) in &nv {
            *acc.entry(p.compose(q)).or_insert_with(BigInt::zero) += a * b;
        }
    }
    let denom = du * dv;
    let terms = acc
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| (p, BigRational::new(c, denom.clone())))
        .collect();
    Ok(GroupAlgebraElement { n: u.n, terms })
}

/// Sum of all permutations whose descent composition is `composition`.
pub fn ribbon_sum(composition: &Composition) -> Result<GroupAlgebraElement> {
    let n = composition.weight();
    check_bound(n, RIBBON_MAX_N, "ribbon sum")?;
    let target = composition.descent_set();
    let terms = permutations(n).into_iter().filter(|p| p.descent_set() == target).map(|p| (p, BigRational::one()));
    GroupAlgebraElement::from_terms(n, terms)
}

/// `S^I` as the sum of all permutations whose descent set is contained in
/// the descent set of `I`.
pub fn s_word_to_group(composition: &Composition) -> Result<GroupAlgebraElement> {
    let n = composition.weight();
    check_bound(n, RIBBON_MAX_N, "S-word")?;
    let allowed = composition.descent_set();
    let terms = permutations(n)
        .into_iter()
        .filter(|p| p.descent_set().is_subset(&allowed))
        .map(|p| (p, BigRational::one()));
    GroupAlgebraElement::from_terms(n, terms)
}

/// Pushes a combination of S-words into the group algebra.
pub fn s_expansion_to_group(n: usize, terms: &BTreeMap<Composition, BigRational>) -> Result<GroupAlgebraElement> {
    check_bound(n, RIBBON_MAX_N, "S-word")?;
    let words: Vec<(BTreeSet<usize>, &BigRational)> =
        terms.iter().map(|(w, c)| (w.descent_set(), c)).collect();
    let mut out = GroupAlgebraElement::zero(n);
    for p in permutations(n) {
        let d = p.descent_set();
        let c = words.iter().filter(|(set, _)| d.is_subset(set)).fold(BigRational::zero(), |acc, (_, c)| acc + *c);
        if !c.is_zero() {
            out.terms.insert(p, c);
        }
    }
    Ok(out)
}

/// The Eulerian idempotent `E_n[k]` realized in the group algebra.
pub fn idempotent_group(n: usize, k: usize) -> Result<GroupAlgebraElement> {
    check_bound(n, PRODUCT_MAX_N, "idempotent")?;
    let expansion = idempotent_s_expansion(n, k)?;
    s_expansion_to_group(n, expansion.terms())
}

/// `S_n[b] = sum_{I |= n} C(b, l(I)) S^I` realized in the group algebra.
pub fn shuffle_element_from_words(n: usize, b: u64) -> Result<GroupAlgebraElement> {
    let terms = compositions(n)
        .into_iter()
        .map(|c| {
            let coef = crate::combinatorics::binomial(b as i64, c.length() as u64);
            (c, BigRational::from_integer(coef.into()))
        })
        .filter(|(_, c)| !c.is_zero())
        .collect();
    s_expansion_to_group(n, &terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn support(e: &GroupAlgebraElement) -> Vec<Vec<usize>> {
        e.terms().keys().map(|p| p.images().to_vec()).collect()
    }

    #[test]
    fn ribbon_examples() {
        for n in 1..=5 {
            assert_eq!(support(&ribbon_sum(&Composition::single(n)).unwrap()), vec![(1..=n).collect::<Vec<_>>()]);
        }
        assert_eq!(support(&ribbon_sum(&comp(&[1, 1])).unwrap()), vec![vec![2, 1]]);
        assert_eq!(support(&ribbon_sum(&comp(&[2, 1])).unwrap()), vec![vec![1, 3, 2], vec![2, 3, 1]]);
        assert!(ribbon_sum(&comp(&[9])).is_err());
    }

    #[test]
    fn ribbons_partition_the_group() {
        for n in 1..=6 {
            let total = compositions(n).iter().fold(GroupAlgebraElement::zero(n), |acc, c| acc.checked_add(&ribbon_sum(c).unwrap()).unwrap());
            assert_eq!(total.terms().len(), permutations(n).len());
            assert!(total.terms().values().all(|c| c == &q(1, 1)));
        }
    }

    #[test]
    fn s_word_examples() {
        assert_eq!(s_word_to_group(&comp(&[2])).unwrap(), GroupAlgebraElement::identity(2));
        assert_eq!(support(&s_word_to_group(&comp(&[1, 1])).unwrap()), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(s_word_to_group(&comp(&[1, 1, 1])).unwrap().terms().len(), 6);
        // S^I is the sum of R_J over J coarser than I.
        for n in 1..=5 {
            for i in compositions(n) {
                let via_ribbons = compositions(n)
                    .iter()
                    .filter(|j| j.is_coarsening_of(&i))
                    .fold(GroupAlgebraElement::zero(n), |acc, j| acc.checked_add(&ribbon_sum(j).unwrap()).unwrap());
                assert_eq!(s_word_to_group(&i).unwrap(), via_ribbons);
            }
        }
    }

    #[test]
    fn product_examples() {
        let id = GroupAlgebraElement::identity(3);
        let v = s_word_to_group(&comp(&[2, 1])).unwrap();
        assert_eq!(group_product(&id, &v).unwrap(), v);
        assert_eq!(group_product(&v, &id).unwrap(), v);

        let swap = perm(&[2, 1]);
        let e1 = GroupAlgebraElement::from_terms(2, [(Permutation::identity(2), q(1, 2)), (swap.clone(), q(-1, 2))]).unwrap();
        let e2 = GroupAlgebraElement::from_terms(2, [(Permutation::identity(2), q(1, 2)), (swap, q(1, 2))]).unwrap();
        assert_eq!(group_product(&e1, &e1).unwrap(), e1);
        assert!(group_product(&e1, &e2).unwrap().is_zero());
        assert!(group_product(&e1, &id).is_err());
        assert!(group_product(&GroupAlgebraElement::identity(7), &GroupAlgebraElement::identity(7)).is_err());
    }

    #[test]
    fn idempotent_examples() {
        let swap = perm(&[2, 1]);
        let e21 = idempotent_group(2, 1).unwrap();
        assert_eq!(e21.coefficient(&Permutation::identity(2)), q(1, 2));
        assert_eq!(e21.coefficient(&swap), q(-1, 2));
        let e22 = idempotent_group(2, 2).unwrap();
        assert_eq!(e22.coefficient(&Permutation::identity(2)), q(1, 2));
        assert_eq!(e22.coefficient(&swap), q(1, 2));
        let total = (1..=3).fold(GroupAlgebraElement::zero(3), |acc, k| acc.checked_add(&idempotent_group(3, k).unwrap()).unwrap());
        assert_eq!(total, GroupAlgebraElement::identity(3));
        assert!(idempotent_group(7, 1).is_err());
    }

    #[test]
    fn idempotents_orthogonal_up_to_five() {
        for n in 1..=5 {
            let es: Vec<_> = (1..=n).map(|k| idempotent_group(n, k).unwrap()).collect();
            for (k, ek) in es.iter().enumerate() {
                for (l, el) in es.iter().enumerate() {
                    let prod = group_product(ek, el).unwrap();
                    if k == l {
                        assert_eq!(&prod, ek, "n={n} k={}", k + 1);
                    } else {
                        assert!(prod.is_zero(), "n={n} k={} l={}", k + 1, l + 1);
                    }
                }
            }
        }
    }

    fn sparse_element(n: usize) -> impl Strategy<Value = GroupAlgebraElement> {
        let perms = permutations(n);
        prop::collection::vec((0..perms.len(), -5i64..=5, 1i64..=3), 0..6).prop_map(move |terms| {
            GroupAlgebraElement::from_terms(n, terms.into_iter().map(|(idx, a, b)| (perms[idx].clone(), q(a, b)))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn product_associative((u, v, w) in (1usize..=5).prop_flat_map(|n| (sparse_element(n), sparse_element(n), sparse_element(n)))) {
            let left = group_product(&group_product(&u, &v).unwrap(), &w).unwrap();
            let right = group_product(&u, &group_product(&v, &w).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
