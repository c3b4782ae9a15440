//! Brute-force ground truth over finitely many variables.
//!
//! Functions in superspace are expanded literally over `N` noncommuting
//! `x`-variables and `N` anticommuting `θ`-variables. A monomial is stored in
//! normal form `θ_{a_1}…θ_{a_m} x_{b_1}…x_{b_n}` with the θ-indices strictly
//! increasing; reordering signs are tracked on insertion and `θ_i^2 = 0`.
//!
//! Every symbolic identity in the crate is checked against expansions
//! produced here. With `N ≥ n + m + 1` variables the expansion of a bidegree
//! `(n, m)` symmetric function determines it uniquely, and the coefficient of
//! a basis element `m_I` can be read off a single canonical monomial.

use crate::combinat::{
    comp_factorial, meet, super_compositions, SetSuperpartition, SuperComposition,
};
use crate::{rat_zero, Rat};
use num::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// A normal-form monomial: strictly increasing θ-indices followed by a word
/// of x-indices (all 1-based).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub thetas: Vec<u32>,
    pub word: Vec<u32>,
}

/// Sort a θ-index list into strictly increasing order, returning the sign of
/// the permutation, or `None` when an index repeats (the monomial vanishes).
pub(crate) fn normalize_thetas(thetas: &[u32]) -> Option<(Vec<u32>, i32)> {
    let mut sorted = thetas.to_vec();
    let mut inv = 0usize;
    for i in 0..sorted.len() {
        for j in i + 1..sorted.len() {
            match sorted[i].cmp(&sorted[j]) {
                std::cmp::Ordering::Greater => inv += 1,
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    sorted.sort_unstable();
    Some((sorted, if inv % 2 == 0 { 1 } else { -1 }))
}

/// A polynomial in the concrete variables, with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rat> {
        &self.terms
    }

    /// Add `coeff · θ_{thetas} x_{word}`, normalizing the θ-part.
    pub fn add_term(&mut self, thetas: &[u32], word: &[u32], coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let Some((sorted, sign)) = normalize_thetas(thetas) else {
            return;
        };
        let mono = Monomial {
            thetas: sorted,
            word: word.to_vec(),
        };
        let signed = if sign < 0 { -coeff } else { coeff };
        let entry = self.terms.entry(mono).or_insert_with(rat_zero);
        *entry += signed;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn coeff(&self, mono: &Monomial) -> Rat {
        self.terms.get(mono).cloned().unwrap_or_else(rat_zero)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(&mono.thetas, &mono.word, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-crate::rat_one()))
    }

    pub fn scale(&self, q: &Rat) -> Poly {
        if q.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(mono, c)| (mono.clone(), c * q))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let mut thetas = u.thetas.clone();
                thetas.extend_from_slice(&v.thetas);
                let mut word = u.word.clone();
                word.extend_from_slice(&v.word);
                out.add_term(&thetas, &word, cu * cv);
            }
        }
        out
    }

    /// Diagonal action of a permutation of the variables: `perm[i-1]` is the
    /// image of variable `i`, applied to x- and θ-indices simultaneously.
    pub fn apply_perm(&self, perm: &[u32]) -> Poly {
        let mut out = Poly::zero();
        for (mono, c) in &self.terms {
            let thetas: Vec<u32> = mono.thetas.iter().map(|&i| perm[(i - 1) as usize]).collect();
            let word: Vec<u32> = mono.word.iter().map(|&i| perm[(i - 1) as usize]).collect();
            out.add_term(&thetas, &word, c.clone());
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mono, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for t in &mono.thetas {
                write!(f, " t{t}")?;
            }
            for x in &mono.word {
                write!(f, " x{x}")?;
            }
        }
        Ok(())
    }
}

/// Number of variables sufficient to faithfully represent bidegree `(n, m)`.
pub fn default_vars(n: u32, m: usize) -> u32 {
    n + m as u32 + 1
}

/// Iterate over all functions `slots → [1, N]`.
fn for_each_assignment(slots: usize, n_vars: u32, mut f: impl FnMut(&[u32])) {
    let mut a = vec![1u32; slots];
    loop {
        f(&a);
        let mut i = 0;
        loop {
            if i == slots {
                return;
            }
            if a[i] < n_vars {
                a[i] += 1;
                break;
            }
            a[i] = 1;
            i += 1;
        }
    }
}

/// Build the monomial of a per-block value assignment: θ-indices are the
/// values of the fermionic blocks in tuple order, and position `j` of the
/// x-word takes the value of the block containing `j`.
fn monomial_of_assignment(k: &SuperComposition, values: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let thetas: Vec<u32> = values[..k.df()].to_vec();
    let mut word = vec![0u32; k.degree() as usize];
    for (b, block) in k.blocks().iter().enumerate() {
        for &e in block.positive() {
            word[(e - 1) as usize] = values[b];
        }
    }
    (thetas, word)
}

/// Expansion of the monomial function `m_K` over `n_vars` variables: blocks
/// with nonzero elements take pairwise distinct values, and the value of a
/// `{0}` block differs from all of those.
pub fn expand_m(k: &SuperComposition, n_vars: u32) -> Poly {
    let mut out = Poly::zero();
    let q = k.len();
    for_each_assignment(q, n_vars, |values| {
        for (b1, block) in k.blocks().iter().enumerate() {
            for b2 in 0..q {
                if b1 == b2 {
                    continue;
                }
                let other_positive = !k.blocks()[b2].positive().is_empty();
                if block.positive().is_empty() {
                    // {0} block: must avoid values of positive-bearing blocks
                    if other_positive && values[b1] == values[b2] {
                        return;
                    }
                } else if other_positive && values[b1] == values[b2] {
                    return;
                }
            }
        }
        let (thetas, word) = monomial_of_assignment(k, values);
        out.add_term(&thetas, &word, crate::rat_one());
    });
    out
}

/// Expansion of the power sum function `p_K`: every block takes an arbitrary
/// value, independently.
pub fn expand_p(k: &SuperComposition, n_vars: u32) -> Poly {
    let mut out = Poly::zero();
    for_each_assignment(k.len(), n_vars, |values| {
        let (thetas, word) = monomial_of_assignment(k, values);
        out.add_term(&thetas, &word, crate::rat_one());
    });
    out
}

/// Expansion of the elementary function `e_K`: every position takes its own
/// value, distinct within a block, and the θ-value of a fermionic block
/// differs from the values of its own positive positions.
pub fn expand_e(k: &SuperComposition, n_vars: u32) -> Poly {
    let n = k.degree() as usize;
    let m = k.df();
    let mut out = Poly::zero();
    for_each_assignment(m + n, n_vars, |av| {
        let (a, b) = av.split_at(m);
        for (i, block) in k.blocks().iter().enumerate() {
            let pos = block.positive();
            for (s, &x) in pos.iter().enumerate() {
                for &y in &pos[s + 1..] {
                    if b[(x - 1) as usize] == b[(y - 1) as usize] {
                        return;
                    }
                }
                if i < m && a[i] == b[(x - 1) as usize] {
                    return;
                }
            }
        }
        out.add_term(a, b, crate::rat_one());
    });
    out
}

/// Expansion of the complete homogeneous function
/// `h_K = Σ_L (K ⊓ L)! · m_L` over the partial set supercompositions `L` of
/// the same bidegree.
pub fn expand_h(k: &SuperComposition, n_vars: u32) -> Poly {
    let mut out = Poly::zero();
    for l in super_compositions(k.degree(), k.df()) {
        let factor = Rat::from(comp_factorial(&meet(k, &l).unwrap()));
        out = out.add(&expand_m(&l, n_vars).scale(&factor));
    }
    out
}

/// The canonical monomial `u_I ∈ M(I)`: block `j` (1-based tuple position)
/// takes the value `j`. It lies in `M(I)` for exactly this `I`, so its
/// coefficient in a symmetric function is the coefficient of `m_I`.
pub fn canonical_monomial(i: &SetSuperpartition) -> Monomial {
    let values: Vec<u32> = (1..=i.blocks().len() as u32).collect();
    let (thetas, word) = monomial_of_assignment(i.as_comp(), &values);
    Monomial { thetas, word }
}

/// Coefficient of `m_I` in a symmetric polynomial expanded over at least
/// `ℓ(I)` variables.
pub fn coeff_of_index(poly: &Poly, i: &SetSuperpartition) -> Rat {
    poly.coeff(&canonical_monomial(i))
}

/// Full reconstruction of the monomial-basis coefficients of a symmetric
/// polynomial of bidegree `(n, m)`.
pub fn from_concrete(
    poly: &Poly,
    n: u32,
    m: usize,
) -> BTreeMap<SetSuperpartition, Rat> {
    let mut out = BTreeMap::new();
    for i in crate::combinat::set_superpartitions(n, m) {
        let c = coeff_of_index(poly, &i);
        if !c.is_zero() {
            out.insert(i, c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{is_strongly_coarser, set_superpartitions};
    use crate::{rat_int, rat_one};

    fn sc(s: &str) -> SuperComposition {
        SuperComposition::parse(s).unwrap()
    }

    fn sp(s: &str) -> SetSuperpartition {
        SetSuperpartition::parse(s).unwrap()
    }

    fn mono(thetas: &[u32], word: &[u32]) -> Monomial {
        Monomial {
            thetas: thetas.to_vec(),
            word: word.to_vec(),
        }
    }

    #[test]
    fn theta_normalization() {
        assert_eq!(normalize_thetas(&[2, 1]), Some((vec![1, 2], -1)));
        assert_eq!(normalize_thetas(&[1, 2, 3]), Some((vec![1, 2, 3], 1)));
        assert_eq!(normalize_thetas(&[3, 1, 2]), Some((vec![1, 2, 3], 1)));
        assert_eq!(normalize_thetas(&[1, 1]), None);
        let mut p = Poly::zero();
        p.add_term(&[2, 1], &[1], rat_one());
        assert_eq!(p.coeff(&mono(&[1, 2], &[1])), rat_int(-1));
        p.add_term(&[1, 2], &[1], rat_one());
        assert!(p.is_zero());
    }

    #[test]
    fn monomial_expansion_terms() {
        // m_K for K = ({0,2},{0,1,3},{4}): the displayed monomials
        // θ2θ1 x1x2x1x3 and θ1θ2 x2x1x2x3 occur with coefficient 1
        let p = expand_m(&sc("({0,2},{0,1,3},{4})"), 4);
        assert_eq!(p.coeff(&mono(&[1, 2], &[1, 2, 1, 3])), rat_int(-1)); // θ2θ1 reordered
        assert_eq!(p.coeff(&mono(&[1, 2], &[2, 1, 2, 3])), rat_one());
        // value of each block distinct: no monomial with repeated block value
        assert_eq!(p.coeff(&mono(&[1, 1], &[1, 1, 1, 2])), rat_int(0));
    }

    #[test]
    fn trivial_indices_vanish() {
        assert!(expand_m(&sc("({0},{0},{1})"), 4).is_zero());
        assert!(expand_m(&sc("({0},{0},{1,2})"), 4).is_zero());
    }

    #[test]
    fn expansions_are_symmetric() {
        // swapping variables 1 and 2 leaves each expansion invariant
        let perm = [2u32, 1, 3, 4];
        for k in ["({0},{0,2},{1,3})", "({0,1},{2})", "({0,2},{0,1})"] {
            let k = sc(k);
            for f in [expand_m, expand_p, expand_e, expand_h] {
                let p = f(&k, 4);
                assert_eq!(p, p.apply_perm(&perm));
            }
        }
    }

    #[test]
    fn power_sum_is_sum_over_coarser() {
        for (n, m) in [(2, 1), (2, 2), (3, 1)] {
            let nv = default_vars(n, m);
            let all = super_compositions(n, m);
            for k in &all {
                let mut sum = Poly::zero();
                for l in &all {
                    if is_strongly_coarser(k, l) {
                        sum = sum.add(&expand_m(l, nv));
                    }
                }
                assert_eq!(expand_p(k, nv), sum, "K={k}");
            }
        }
    }

    #[test]
    fn homogeneous_displayed_coefficients() {
        // h_I for I = ({0},{0,2},{1,3}): θ1θ2 x2x2x2 and θ1θ2 x1x2x1 have
        // coefficient 2; θ2θ1 x1x1x2 has coefficient 1
        let h = expand_h(sp("({0},{0,2},{1,3})").as_comp(), 6);
        assert_eq!(h.coeff(&mono(&[1, 2], &[2, 2, 2])), rat_int(2));
        assert_eq!(h.coeff(&mono(&[1, 2], &[1, 2, 1])), rat_int(2));
        assert_eq!(h.coeff(&mono(&[1, 2], &[1, 1, 2])), rat_int(-1)); // θ2θ1 reordered
    }

    #[test]
    fn elementary_monomial_expansion() {
        // e_I = m_({0,1,2},{0,3}) - m_({0},{0,1,2},{3}) - m_({0,1},{0,2,3})
        //       - m_({0},{0,2,3},{1}) - m_({0},{0,2},{1},{3})
        //       - m_({0,1},{0,2},{3}) + m_({0,2},{0,3},{1})
        let e = expand_e(sp("({0},{0,2},{1,3})").as_comp(), 6);
        let expected = [
            ("({0,1,2},{0,3})", 1),
            ("({0},{0,1,2},{3})", -1),
            ("({0,1},{0,2,3})", -1),
            ("({0},{0,2,3},{1})", -1),
            ("({0},{0,2},{1},{3})", -1),
            ("({0,1},{0,2},{3})", -1),
            ("({0,2},{0,3},{1})", 1),
        ];
        let coeffs = from_concrete(&e, 3, 2);
        assert_eq!(coeffs.len(), expected.len());
        for (s, c) in expected {
            assert_eq!(coeffs.get(&sp(s)), Some(&rat_int(c)), "index {s}");
        }
    }

    #[test]
    fn homogeneous_monomial_expansion() {
        // the displayed 10-term m-expansion of h_I for I = ({0},{0,2},{1,3})
        let h = expand_h(sp("({0},{0,2},{1,3})").as_comp(), 6);
        let expected = [
            ("({0},{0,1,2,3})", 2),
            ("({0,1,2},{0,3})", -1),
            ("({0,1,3},{0,2})", 2),
            ("({0,1},{0,2,3})", 1),
            ("({0},{0,1,2},{3})", 1),
            ("({0},{0,2,3},{1})", 1),
            ("({0},{0,2},{1,3})", 2),
            ("({0},{0,2},{1},{3})", 1),
            ("({0,1},{0,2},{3})", 1),
            ("({0,2},{0,3},{1})", -1),
        ];
        let coeffs = from_concrete(&h, 3, 2);
        assert_eq!(coeffs.len(), expected.len());
        for (s, c) in expected {
            assert_eq!(coeffs.get(&sp(s)), Some(&rat_int(c)), "index {s}");
        }
    }

    #[test]
    fn reconstruction_round_trip() {
        for (n, m) in [(2, 1), (3, 2)] {
            let nv = default_vars(n, m);
            for i in set_superpartitions(n, m) {
                let h = expand_h(i.as_comp(), nv);
                let coeffs = from_concrete(&h, n, m);
                let mut rebuilt = Poly::zero();
                for (j, c) in &coeffs {
                    rebuilt = rebuilt.add(&expand_m(j.as_comp(), nv).scale(c));
                }
                assert_eq!(rebuilt, h, "I={i}");
            }
        }
    }

    #[test]
    fn product_of_expansions() {
        // m_({0,1}) · m_({0,1}) expands with enough variables to degree (2,2)
        let a = expand_m(&sc("({0,1})"), 5);
        let prod = a.mul(&a);
        let coeffs = from_concrete(&prod, 2, 2);
        assert!(!coeffs.is_empty());
        // the product of a function with itself in odd fermionic degree is
        // not forced to vanish; sanity: bidegrees add up
        for mono_ in prod.terms().keys() {
            assert_eq!(mono_.thetas.len(), 2);
            assert_eq!(mono_.word.len(), 2);
        }
    }
}
