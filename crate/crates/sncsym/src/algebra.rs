//! Symbolic elements of sNCSym in the monomial (`m`), power sum (`p`),
//! elementary (`e`) and complete homogeneous (`h`) bases.
//!
//! An element is a finite rational combination of basis functions of a fixed
//! basis and bidegree, indexed by canonical set superpartitions. Terms
//! supplied with non-canonical indices are collapsed on insertion: repeated
//! `{0}` blocks make the function vanish, and reordering the fermionic blocks
//! contributes the sign of the sorting permutation.

use crate::combinat::{
    comp_factorial, comp_sign, is_coarser, meet, mobius_zero, permutations, set_superpartitions,
    sigma_perm, wedge_sigma, Block, SetSuperpartition, SuperComposition,
};
use crate::{rat_one, rat_zero, Error, Rat, Result};
use num::{BigInt, One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// The four multiplicative structures of sNCSym handled symbolically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    M,
    P,
    E,
    H,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::P => 'p',
            Basis::E => 'e',
            Basis::H => 'h',
        }
    }

    pub fn from_letter(s: &str) -> Result<Basis> {
        match s {
            "m" => Ok(Basis::M),
            "p" => Ok(Basis::P),
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            other => Err(Error::UnsupportedBasis(other.to_string())),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A homogeneous element of sNCSym of fixed basis and bidegree `(n, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    basis: Basis,
    degree: u32,
    df: usize,
    terms: BTreeMap<SetSuperpartition, Rat>,
}

impl Element {
    pub fn zero(basis: Basis, degree: u32, df: usize) -> Self {
        Element {
            basis,
            degree,
            df,
            terms: BTreeMap::new(),
        }
    }

    /// The basis function `b_K` for an arbitrary partial set supercomposition
    /// `K`: zero when `K` is trivial, otherwise `±b_{K̄}`.
    pub fn basis_fn(basis: Basis, index: &SuperComposition) -> Self {
        let mut el = Element::zero(basis, index.degree(), index.df());
        el.add_term(index, rat_one());
        el
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn df(&self) -> usize {
        self.df
    }

    pub fn terms(&self) -> &BTreeMap<SetSuperpartition, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: &SetSuperpartition) -> Rat {
        self.terms.get(i).cloned().unwrap_or_else(rat_zero)
    }

    /// Add `c · b_K`, collapsing `K` to its canonical form.
    pub fn add_term(&mut self, index: &SuperComposition, c: Rat) {
        assert_eq!(
            (index.degree(), index.df()),
            (self.degree, self.df),
            "term bidegree mismatch"
        );
        if c.is_zero() || index.is_trivial() {
            return;
        }
        let (canon, sign) = index.bar();
        let signed = if sign < 0 { -c } else { c };
        let entry = self.terms.entry(canon).or_insert_with(rat_zero);
        *entry += signed;
        if entry.is_zero() {
            self.terms.retain(|_, q| !q.is_zero());
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        if self.basis != other.basis {
            return Err(Error::Invalid(format!(
                "cannot add {}-basis and {}-basis elements",
                self.basis, other.basis
            )));
        }
        if (self.degree, self.df) != (other.degree, other.df) {
            return Err(Error::BidegreeMismatch(
                self.degree,
                self.df,
                other.degree,
                other.df,
            ));
        }
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(i.as_comp(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, q: &Rat) -> Element {
        if q.is_zero() {
            return Element::zero(self.basis, self.degree, self.df);
        }
        Element {
            basis: self.basis,
            degree: self.degree,
            df: self.df,
            terms: self.terms.iter().map(|(i, c)| (i.clone(), c * q)).collect(),
        }
    }

    pub fn negate(&self) -> Element {
        self.scale(&-rat_one())
    }

    /// Rewrite in another basis.
    pub fn convert(&self, target: Basis) -> Element {
        if self.basis == target {
            return self.clone();
        }
        let in_m = self.to_m();
        if target == Basis::M {
            return in_m;
        }
        in_m.m_to(target)
    }

    /// Expansion in the monomial basis.
    fn to_m(&self) -> Element {
        if self.basis == Basis::M {
            return self.clone();
        }
        let mut out = Element::zero(Basis::M, self.degree, self.df);
        for (i, c) in &self.terms {
            let exp = basis_fn_in_m(self.basis, i, self.degree, self.df);
            for (j, q) in exp.terms {
                out.add_term(j.as_comp(), q * c);
            }
        }
        out
    }

    /// Rewrite a monomial-basis element in the basis `target` by solving the
    /// cached transition system exactly.
    fn m_to(&self, target: Basis) -> Element {
        debug_assert_eq!(self.basis, Basis::M);
        let indices = set_superpartitions(self.degree, self.df);
        let inv = inverse_transition(target, self.degree, self.df, &indices);
        let k = indices.len();
        let b: Vec<Rat> = indices.iter().map(|i| self.coeff(i)).collect();
        let mut out = Element::zero(target, self.degree, self.df);
        for (row, i) in indices.iter().enumerate() {
            let mut acc = rat_zero();
            for col in 0..k {
                if !b[col].is_zero() {
                    acc += &inv[row][col] * &b[col];
                }
            }
            if !acc.is_zero() {
                out.add_term(i.as_comp(), acc);
            }
        }
        out
    }

    /// Product. Equal non-monomial bases multiply index-wise via the over
    /// product; anything else goes through the monomial basis and the
    /// shuffle formula.
    pub fn product(&self, other: &Element) -> Element {
        if self.basis == other.basis && self.basis != Basis::M {
            let mut out = Element::zero(self.basis, self.degree + other.degree, self.df + other.df);
            for (i, c) in &self.terms {
                for (j, q) in &other.terms {
                    out.add_term(&i.as_comp().over(j.as_comp()), c * q);
                }
            }
            return out;
        }
        let a = self.convert(Basis::M);
        let b = other.convert(Basis::M);
        let mut out = Element::zero(Basis::M, a.degree + b.degree, a.df + b.df);
        for (i, c) in &a.terms {
            for (j, q) in &b.terms {
                for k in shuffle_indices(i, j) {
                    out.add_term(&k, c * q);
                }
            }
        }
        out
    }

    /// The involution ω: swaps the elementary and complete homogeneous bases,
    /// acts by the sign `(-1)^I` on power sums, and is extended linearly.
    pub fn omega(&self) -> Element {
        match self.basis {
            Basis::E => {
                let mut out = self.clone();
                out.basis = Basis::H;
                out
            }
            Basis::H => {
                let mut out = self.clone();
                out.basis = Basis::E;
                out
            }
            Basis::P => {
                let mut out = Element::zero(Basis::P, self.degree, self.df);
                for (i, c) in &self.terms {
                    let s = comp_sign(i.as_comp());
                    out.add_term(i.as_comp(), if s < 0 { -c.clone() } else { c.clone() });
                }
                out
            }
            Basis::M => self.convert(Basis::E).omega().convert(Basis::M),
        }
    }

    /// The inner product `⟨·,·⟩` with `⟨m_I, h_J⟩ = (-1)^(m choose 2) n! δ`.
    pub fn inner(&self, other: &Element) -> Result<Rat> {
        if (self.degree, self.df) != (other.degree, other.df) {
            return Err(Error::BidegreeMismatch(
                self.degree,
                self.df,
                other.degree,
                other.df,
            ));
        }
        let a = self.convert(Basis::M);
        let b = other.convert(Basis::H);
        let mut acc = rat_zero();
        for (i, c) in &a.terms {
            acc += c * b.coeff(i);
        }
        let scale = crate::rat_factorial(self.degree as usize);
        if fermionic_sign(self.df) < 0 {
            return Ok(-(acc * scale));
        }
        Ok(acc * scale)
    }
}

/// The monomial-basis expansion of a single basis function indexed by a
/// canonical set superpartition.
fn basis_fn_in_m(basis: Basis, i: &SetSuperpartition, n: u32, m: usize) -> Element {
    let mut out = Element::zero(Basis::M, n, m);
    match basis {
        Basis::M => out.add_term(i.as_comp(), rat_one()),
        Basis::P => {
            // p_I = Σ_{J ⪰ I} (-1)^{inv(I,J)} m_J
            for j in set_superpartitions(n, m) {
                if let Some((_, inv)) = sigma_perm(i, &j) {
                    let c = if inv % 2 == 0 { rat_one() } else { -rat_one() };
                    out.add_term(j.as_comp(), c);
                }
            }
        }
        Basis::E => {
            // e_I = Σ_{I ⊓ L = 0̂} m_L over partial set supercompositions L
            let zero = SuperComposition::zero_hat(n, m);
            for l in crate::combinat::super_compositions(n, m) {
                if meet(i.as_comp(), &l).unwrap() == zero {
                    out.add_term(&l, rat_one());
                }
            }
        }
        Basis::H => {
            // h_I = Σ_{σ, J} (I ∧_σ J)! (-1)^{inv σ} m_J
            for sigma in permutations(m) {
                let sign = crate::combinat::inversions(&sigma) % 2;
                for j in set_superpartitions(n, m) {
                    let w = wedge_sigma(i, &j, &sigma);
                    let c = Rat::from(comp_factorial(&w));
                    out.add_term(j.as_comp(), if sign == 1 { -c } else { c });
                }
            }
        }
    }
    out
}

/// Cached inverse of the `target`-basis-to-monomial transition matrix on
/// bidegree `(n, m)`, rows and columns indexed by `indices`.
fn inverse_transition(
    target: Basis,
    n: u32,
    m: usize,
    indices: &[SetSuperpartition],
) -> Vec<Vec<Rat>> {
    static CACHE: OnceLock<Mutex<HashMap<(Basis, u32, usize), Vec<Vec<Rat>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(inv) = cache.lock().unwrap().get(&(target, n, m)) {
        return inv.clone();
    }
    let k = indices.len();
    let pos: BTreeMap<&SetSuperpartition, usize> =
        indices.iter().enumerate().map(|(p, i)| (i, p)).collect();
    // T[row j][col i] = coefficient of m_j in target_i
    let mut t: Vec<Vec<Rat>> = vec![vec![rat_zero(); k]; k];
    for (col, i) in indices.iter().enumerate() {
        let exp = basis_fn_in_m(target, i, n, m);
        for (j, c) in exp.terms() {
            t[pos[j]][col] = c.clone();
        }
    }
    let inv = invert_matrix(t);
    cache.lock().unwrap().insert((target, n, m), inv.clone());
    inv
}

/// Exact inverse of a square rational matrix by Gauss-Jordan elimination.
pub(crate) fn invert_matrix(t: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    let k = t.len();
    let mut aug: Vec<Vec<Rat>> = t
        .into_iter()
        .enumerate()
        .map(|(row, mut r)| {
            r.extend((0..k).map(|c| if c == row { rat_one() } else { rat_zero() }));
            r
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k)
            .find(|&r| !aug[r][col].is_zero())
            .expect("transition matrix is invertible");
        aug.swap(col, pivot);
        let p = aug[col][col].clone();
        for x in &mut aug[col] {
            *x /= &p;
        }
        for r in 0..k {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c2 in 0..2 * k {
                    let sub = &aug[col][c2] * &f;
                    aug[r][c2] -= sub;
                }
            }
        }
    }
    aug.into_iter().map(|row| row[k..].to_vec()).collect()
}

/// All terms of the shuffle product `m_I · m_J`: partial matchings of the
/// blocks of `I` with the blocks of `J[n]` in which no matched pair is
/// doubly fermionic, each matching contributing the merged tuple with the
/// fermionic order inherited from `I/J`.
pub fn shuffle_indices(i: &SetSuperpartition, j: &SetSuperpartition) -> Vec<SuperComposition> {
    let n = i.degree();
    let iblocks = i.blocks();
    let jshift = j.as_comp().shift(n);
    let h = iblocks.len();
    let k = jshift.len();
    let mut out = Vec::new();
    let mut matched_j = vec![usize::MAX; k]; // j-block -> i-block
    fn rec(
        a: usize,
        h: usize,
        k: usize,
        iblocks: &[Block],
        jshift: &[Block],
        i_df: usize,
        j_df: usize,
        matched_j: &mut Vec<usize>,
        out: &mut Vec<SuperComposition>,
    ) {
        if a == h {
            // assemble: I-fermionic slots, then J-fermionic slots, then rest
            let mut blocks: Vec<Block> = Vec::new();
            let merged_into_i: Vec<Option<usize>> = (0..h)
                .map(|ib| matched_j.iter().position(|&x| x == ib))
                .collect();
            for (ib, block) in iblocks.iter().enumerate().take(i_df) {
                let mut b = block.clone();
                if let Some(jb) = merged_into_i[ib] {
                    if jb >= j_df {
                        b = b.oplus(&jshift[jb]).unwrap();
                    }
                }
                blocks.push(b);
            }
            for (jb, block) in jshift.iter().enumerate().take(j_df) {
                let mut b = block.clone();
                if matched_j[jb] != usize::MAX {
                    b = b.oplus(&iblocks[matched_j[jb]]).unwrap();
                }
                blocks.push(b);
            }
            for (ib, block) in iblocks.iter().enumerate().skip(i_df) {
                match merged_into_i[ib] {
                    Some(jb) if jb >= j_df => blocks.push(block.oplus(&jshift[jb]).unwrap()),
                    Some(_) => {} // already merged into a fermionic J slot
                    None => blocks.push(block.clone()),
                }
            }
            for (jb, block) in jshift.iter().enumerate().skip(j_df) {
                if matched_j[jb] == usize::MAX {
                    blocks.push(block.clone());
                }
            }
            out.push(SuperComposition::new(blocks).unwrap());
            return;
        }
        // I-block `a` unmatched
        rec(a + 1, h, k, iblocks, jshift, i_df, j_df, matched_j, out);
        for jb in 0..k {
            if matched_j[jb] != usize::MAX {
                continue;
            }
            if a < i_df && jb < j_df {
                continue; // both fermionic
            }
            matched_j[jb] = a;
            rec(a + 1, h, k, iblocks, jshift, i_df, j_df, matched_j, out);
            matched_j[jb] = usize::MAX;
        }
    }
    rec(
        0,
        h,
        k,
        iblocks,
        &jshift,
        i.df(),
        j.df(),
        &mut matched_j,
        &mut out,
    );
    out
}

// ---------------------------------------------------------------------------
// Text and JSON forms
// ---------------------------------------------------------------------------

pub(crate) fn fmt_coeff(c: &Rat) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (i, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if pos == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag.is_one() {
                write!(f, "{}[{}]", self.basis, i)?;
            } else {
                write!(f, "{}*{}[{}]", fmt_coeff(&mag), self.basis, i)?;
            }
        }
        Ok(())
    }
}

pub(crate) fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim().parse::<BigInt>().map_err(|_| Error::Parse {
            pos: 0,
            expected: "integer".into(),
        })
    };
    if let Some((a, b)) = s.split_once('/') {
        let denom = parse_int(b)?;
        if denom.is_zero() {
            return Err(Error::Invalid("zero denominator".into()));
        }
        Ok(Rat::new(parse_int(a)?, denom))
    } else {
        Ok(Rat::from(parse_int(s)?))
    }
}

impl Element {
    /// Parse a linear expression such as
    /// `3/2*m[({0},{0,2},{1,3})] - m[({0,1},{0,2})]`. All terms must use the
    /// same basis and have the same bidegree. The literal `0` denotes the
    /// zero element of bidegree `(0, 0)` in the monomial basis.
    pub fn parse_expression(s: &str) -> Result<Element> {
        let s = s.trim();
        if s == "0" {
            return Ok(Element::zero(Basis::M, 0, 0));
        }
        let bytes = s.as_bytes();
        let mut pos = 0usize;
        let mut element: Option<Element> = None;
        let mut first = true;
        while pos < bytes.len() {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if pos >= bytes.len() {
                break;
            }
            let mut negative = false;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                negative = bytes[pos] == b'-';
                pos += 1;
            } else if !first {
                return Err(Error::Parse {
                    pos,
                    expected: "'+' or '-'".into(),
                });
            }
            first = false;
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            // optional coefficient followed by '*'
            let mut coeff = rat_one();
            let num_start = pos;
            while pos < bytes.len()
                && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/')
            {
                pos += 1;
            }
            if pos > num_start {
                coeff = parse_rat(&s[num_start..pos])?;
                while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                    pos += 1;
                }
                if pos < bytes.len() && bytes[pos] == b'*' {
                    pos += 1;
                } else {
                    return Err(Error::Parse {
                        pos,
                        expected: "'*'".into(),
                    });
                }
                while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                    pos += 1;
                }
            }
            if pos >= bytes.len() {
                return Err(Error::Parse {
                    pos,
                    expected: "basis letter".into(),
                });
            }
            let basis = Basis::from_letter(&s[pos..pos + 1])?;
            pos += 1;
            if pos >= bytes.len() || bytes[pos] != b'[' {
                return Err(Error::Parse {
                    pos,
                    expected: "'['".into(),
                });
            }
            pos += 1;
            let close = s[pos..].find(']').ok_or(Error::Parse {
                pos,
                expected: "']'".into(),
            })? + pos;
            let index = SuperComposition::parse(&s[pos..close])?;
            pos = close + 1;
            if negative {
                coeff = -coeff;
            }
            let mut term = Element::zero(basis, index.degree(), index.df());
            term.add_term(&index, coeff);
            element = Some(match element {
                None => term,
                Some(acc) => acc.add(&term)?,
            });
        }
        element.ok_or(Error::Parse {
            pos: 0,
            expected: "expression".into(),
        })
    }

    /// JSON form: `{"basis": "m", "degree": n, "df": m, "terms":
    /// [{"index": "({0},{1})", "coeff": "3/2"}, …]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "basis": self.basis.to_string(),
            "degree": self.degree,
            "df": self.df,
            "terms": self.terms.iter().map(|(i, c)| serde_json::json!({
                "index": i.to_string(),
                "coeff": fmt_coeff(c),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Element> {
        let get = |key: &str| -> Result<&serde_json::Value> {
            v.get(key)
                .ok_or_else(|| Error::Invalid(format!("missing JSON key {key}")))
        };
        let basis = Basis::from_letter(get("basis")?.as_str().unwrap_or(""))?;
        let degree = get("degree")?
            .as_u64()
            .ok_or_else(|| Error::Invalid("degree must be an integer".into()))? as u32;
        let df = get("df")?
            .as_u64()
            .ok_or_else(|| Error::Invalid("df must be an integer".into()))? as usize;
        let mut el = Element::zero(basis, degree, df);
        for term in get("terms")?
            .as_array()
            .ok_or_else(|| Error::Invalid("terms must be an array".into()))?
        {
            let index = SuperComposition::parse(
                term.get("index").and_then(|x| x.as_str()).ok_or_else(|| {
                    Error::Invalid("term index must be a string".into())
                })?,
            )?;
            let coeff = parse_rat(term.get("coeff").and_then(|x| x.as_str()).ok_or_else(
                || Error::Invalid("term coeff must be a string".into()),
            )?)?;
            if (index.degree(), index.df()) != (degree, df) {
                return Err(Error::BidegreeMismatch(
                    degree,
                    df,
                    index.degree(),
                    index.df(),
                ));
            }
            el.add_term(&index, coeff);
        }
        Ok(el)
    }

    /// Concrete expansion over `n_vars` variables, via the oracle layer.
    pub fn expand(&self, n_vars: u32) -> crate::oracle::Poly {
        let f = match self.basis {
            Basis::M => crate::oracle::expand_m,
            Basis::P => crate::oracle::expand_p,
            Basis::E => crate::oracle::expand_e,
            Basis::H => crate::oracle::expand_h,
        };
        let mut out = crate::oracle::Poly::zero();
        for (i, c) in &self.terms {
            out = out.add(&f(i.as_comp(), n_vars).scale(c));
        }
        out
    }
}

/// Möbius-normalized sign `(-1)^(m choose 2)` appearing in inner products.
pub fn fermionic_sign(m: usize) -> i32 {
    if (m * (m.saturating_sub(1)) / 2) % 2 == 1 {
        -1
    } else {
        1
    }
}

/// `⟨p_I, p_J⟩` closed form: diagonal with value
/// `(-1)^(m choose 2) n! / |μ(0̂, I)|`.
pub fn power_inner_closed_form(i: &SetSuperpartition, j: &SetSuperpartition) -> Rat {
    if i != j {
        return rat_zero();
    }
    let n = i.degree() as usize;
    let m = i.df();
    let mu = mobius_zero(i.as_comp());
    let denom = Rat::from(mu.abs());
    let mut out = crate::rat_factorial(n) / denom;
    if fermionic_sign(m) < 0 {
        out = -out;
    }
    out
}

/// `⟨h_I, h_J⟩` closed form:
/// `(-1)^(m choose 2) n! Σ_σ (I ∧_σ J)! (-1)^{inv σ}`.
pub fn homogeneous_inner_closed_form(i: &SetSuperpartition, j: &SetSuperpartition) -> Rat {
    let m = i.df();
    let mut acc = BigInt::from(0);
    for sigma in permutations(m) {
        let w = comp_factorial(&wedge_sigma(i, j, &sigma));
        if crate::combinat::inversions(&sigma) % 2 == 1 {
            acc -= w;
        } else {
            acc += w;
        }
    }
    let mut out = Rat::from(acc) * crate::rat_factorial(i.degree() as usize);
    if fermionic_sign(m) < 0 {
        out = -out;
    }
    out
}

/// Check `I ⪯ J` on canonical indices (re-exported convenience).
pub fn coarser(i: &SetSuperpartition, j: &SetSuperpartition) -> bool {
    is_coarser(i.as_comp(), j.as_comp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::rat_int;

    fn sp(s: &str) -> SetSuperpartition {
        SetSuperpartition::parse(s).unwrap()
    }

    fn sc(s: &str) -> SuperComposition {
        SuperComposition::parse(s).unwrap()
    }

    const SMALL: [(u32, usize); 5] = [(2, 0), (2, 1), (2, 2), (3, 0), (3, 1)];

    #[test]
    fn transitions_match_oracle() {
        for (n, m) in SMALL {
            let nv = oracle::default_vars(n, m);
            for i in set_superpartitions(n, m) {
                for basis in [Basis::P, Basis::E, Basis::H] {
                    let el = Element::basis_fn(basis, i.as_comp());
                    let symbolic = el.convert(Basis::M);
                    let concrete = oracle::from_concrete(&el.expand(nv), n, m);
                    let got: BTreeMap<_, _> = symbolic.terms().clone();
                    assert_eq!(got, concrete, "basis {basis} I={i}");
                }
            }
        }
    }

    #[test]
    fn conversions_round_trip() {
        for (n, m) in [(2, 1), (2, 2), (3, 1)] {
            for i in set_superpartitions(n, m) {
                let el = Element::basis_fn(Basis::M, i.as_comp());
                for basis in [Basis::P, Basis::E, Basis::H] {
                    let back = el.convert(basis).convert(Basis::M);
                    assert_eq!(back, el, "basis {basis} I={i}");
                }
                // chained conversions agree with direct ones
                let p = el.convert(Basis::P);
                assert_eq!(p.convert(Basis::E).convert(Basis::H).convert(Basis::P), p);
            }
        }
    }

    #[test]
    fn monomial_in_other_bases_example() {
        // m_I for I = ({0},{0,1},{2}) in the p, e and h bases
        let m_i = Element::basis_fn(Basis::M, &sc("({0},{0,1},{2})"));
        let p = m_i.convert(Basis::P);
        assert_eq!(p.coeff(&sp("({0},{0,1},{2})")), rat_int(1));
        assert_eq!(p.coeff(&sp("({0},{0,1,2})")), rat_int(-1));
        assert_eq!(p.coeff(&sp("({0,1},{0,2})")), rat_int(1));
        assert_eq!(p.terms().len(), 3);
        let e = m_i.convert(Basis::E);
        assert_eq!(e.coeff(&sp("({0},{0,1},{2})")), Rat::new(1.into(), 2.into()));
        assert_eq!(e.coeff(&sp("({0},{0,2},{1})")), Rat::new((-1).into(), 2.into()));
        assert_eq!(e.coeff(&sp("({0},{0,1,2})")), Rat::new((-1).into(), 2.into()));
        assert_eq!(e.coeff(&sp("({0,1},{0,2})")), rat_int(1));
        assert_eq!(e.terms().len(), 4);
        let h = m_i.convert(Basis::H);
        assert_eq!(h.coeff(&sp("({0},{0,1},{2})")), Rat::new(5.into(), 2.into()));
        assert_eq!(h.coeff(&sp("({0},{0,2},{1})")), Rat::new((-1).into(), 2.into()));
        assert_eq!(h.coeff(&sp("({0},{0,1,2})")), Rat::new((-1).into(), 2.into()));
        assert_eq!(h.coeff(&sp("({0,1},{0,2})")), rat_int(1));
        assert_eq!(h.terms().len(), 4);
    }

    #[test]
    fn monomial_product_matches_oracle() {
        let pairs = [
            ("({0,1})", "({0,1})"),
            ("({0},{1})", "({0,1})"),
            ("({0,1},{2})", "({0,2},{1})"),
            ("({0},{0,1})", "({1,2})"),
            ("({1,2})", "({0,1},{0,2})"),
        ];
        for (a, b) in pairs {
            let i = sp(a);
            let j = sp(b);
            let el = Element::basis_fn(Basis::M, i.as_comp())
                .product(&Element::basis_fn(Basis::M, j.as_comp()));
            let n = i.degree() + j.degree();
            let m = i.df() + j.df();
            let nv = oracle::default_vars(n, m);
            let want = oracle::expand_m(i.as_comp(), nv).mul(&oracle::expand_m(j.as_comp(), nv));
            assert_eq!(el.expand(nv), want, "I={a} J={b}");
            let got = oracle::from_concrete(&el.expand(nv), n, m);
            assert_eq!(got, oracle::from_concrete(&want, n, m));
        }
    }

    #[test]
    fn shuffle_example_support() {
        // m_I · m_J for I = ({0},{0,3},{1,2}), J = ({0,2},{1}) has exactly
        // seven distinct terms, all with coefficient ±1
        let i = sp("({0},{0,3},{1,2})");
        let j = sp("({0,2},{1})");
        let el = Element::basis_fn(Basis::M, i.as_comp())
            .product(&Element::basis_fn(Basis::M, j.as_comp()));
        assert_eq!(el.terms().len(), 7);
        for (k, c) in el.terms() {
            assert!(c.abs().is_one(), "K={k} coeff {c}");
        }
        assert_eq!(el.coeff(&sp("({0},{0,3},{0,5},{1,2},{4})")), rat_int(1));
        assert_eq!(el.coeff(&sp("({0,3},{0,4},{0,5},{1,2})")).abs(), rat_int(1));
        // agrees with the oracle
        let nv = oracle::default_vars(5, 3);
        let want = oracle::expand_m(i.as_comp(), nv).mul(&oracle::expand_m(j.as_comp(), nv));
        assert_eq!(el.expand(nv), want);
    }

    #[test]
    fn multiplicative_bases_match_oracle() {
        let i = sp("({0},{0,2},{1})");
        let j = sp("({0,1})");
        for (basis, f) in [
            (Basis::P, oracle::expand_p as fn(&SuperComposition, u32) -> oracle::Poly),
            (Basis::E, oracle::expand_e),
            (Basis::H, oracle::expand_h),
        ] {
            let el = Element::basis_fn(basis, i.as_comp())
                .product(&Element::basis_fn(basis, j.as_comp()));
            assert_eq!(el.basis(), basis);
            let nv = oracle::default_vars(3, 3);
            let want = f(i.as_comp(), nv).mul(&f(j.as_comp(), nv));
            assert_eq!(el.expand(nv), want, "basis {basis}");
        }
    }

    #[test]
    fn fermionic_reordering_sign() {
        for basis in [Basis::M, Basis::P, Basis::E, Basis::H] {
            let a = Element::basis_fn(basis, &sc("({0,1},{0,2})"));
            let b = Element::basis_fn(basis, &sc("({0,2},{0,1})"));
            assert_eq!(b, a.negate(), "basis {basis}");
        }
        // trivial index gives zero
        assert!(Element::basis_fn(Basis::M, &sc("({0},{0},{1})")).is_zero());
    }

    #[test]
    fn omega_involution() {
        let i = sp("({0},{0,2},{1})");
        let e = Element::basis_fn(Basis::E, i.as_comp());
        assert_eq!(e.omega(), Element::basis_fn(Basis::H, i.as_comp()));
        let p = Element::basis_fn(Basis::P, i.as_comp());
        // (-1)^I for I = ({0},{0,2},{1}) is (-1)^{0+1+0} = -1
        assert_eq!(p.omega(), p.negate());
        for (n, m) in [(2, 1), (3, 1), (2, 2)] {
            for i in set_superpartitions(n, m) {
                let el = Element::basis_fn(Basis::M, i.as_comp());
                assert_eq!(el.omega().omega(), el, "I={i}");
            }
        }
    }

    #[test]
    fn omega_is_algebra_morphism() {
        let a = Element::basis_fn(Basis::M, &sc("({0,1})"));
        let b = Element::basis_fn(Basis::M, &sc("({1},{2})"));
        let lhs = a.product(&b).omega();
        let rhs = a.omega().product(&b.omega());
        assert_eq!(lhs.convert(Basis::M), rhs.convert(Basis::M));
    }

    #[test]
    fn inner_product_duality() {
        for (n, m) in [(2, 1), (2, 2), (3, 1)] {
            let scale = crate::rat_factorial(n as usize);
            for i in set_superpartitions(n, m) {
                for j in set_superpartitions(n, m) {
                    let mi = Element::basis_fn(Basis::M, i.as_comp());
                    let hj = Element::basis_fn(Basis::H, j.as_comp());
                    let want = if i == j {
                        let v = scale.clone();
                        if fermionic_sign(m) < 0 {
                            -v
                        } else {
                            v
                        }
                    } else {
                        rat_zero()
                    };
                    assert_eq!(mi.inner(&hj).unwrap(), want, "I={i} J={j}");
                }
            }
        }
    }

    #[test]
    fn inner_product_closed_forms() {
        for (n, m) in [(2, 1), (2, 2), (3, 1)] {
            for i in set_superpartitions(n, m) {
                for j in set_superpartitions(n, m) {
                    let pi = Element::basis_fn(Basis::P, i.as_comp());
                    let pj = Element::basis_fn(Basis::P, j.as_comp());
                    assert_eq!(
                        pi.inner(&pj).unwrap(),
                        power_inner_closed_form(&i, &j),
                        "p I={i} J={j}"
                    );
                    let hi = Element::basis_fn(Basis::H, i.as_comp());
                    let hj = Element::basis_fn(Basis::H, j.as_comp());
                    let got = hi.inner(&hj).unwrap();
                    assert_eq!(got, homogeneous_inner_closed_form(&i, &j), "h I={i} J={j}");
                    assert_eq!(got, hj.inner(&hi).unwrap(), "symmetry I={i} J={j}");
                }
            }
        }
    }

    #[test]
    fn expression_round_trip() {
        let s = "3/2*m[({0},{0,2},{1,3})] - m[({0,1},{0,2},{3})]";
        let el = Element::parse_expression(s).unwrap();
        assert_eq!(el.to_string(), s);
        assert_eq!(Element::parse_expression("0").unwrap().to_string(), "0");
        assert_eq!(
            Element::parse_expression("-p[({0,1})] + 2*p[({0},{1})]")
                .unwrap()
                .to_string(),
            "2*p[({0},{1})] - p[({0,1})]"
        );
        // non-canonical index collapses with a sign
        assert_eq!(
            Element::parse_expression("m[({0,2},{0,1})]").unwrap().to_string(),
            "-m[({0,1},{0,2})]"
        );
        assert!(Element::parse_expression("q[({1})]").is_err());
        assert!(Element::parse_expression("m[({1})] + p[({1})]").is_err());
        assert!(Element::parse_expression("m[({1})] + m[({1,2})]").is_err());
        assert!(Element::parse_expression("3 m[({1})]").is_err());
    }

    #[test]
    fn json_round_trip() {
        let el = Element::parse_expression("3/2*m[({0},{0,2},{1,3})] - m[({0,1},{0,2},{3})]")
            .unwrap();
        let v = el.to_json();
        assert_eq!(Element::from_json(&v).unwrap(), el);
        let txt = serde_json::to_string(&v).unwrap();
        let back: serde_json::Value = serde_json::from_str(&txt).unwrap();
        assert_eq!(Element::from_json(&back).unwrap(), el);
    }
}
