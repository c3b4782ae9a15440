//! The commuting-variable side: the algebra sSym, the projection ρ that makes
//! the x-variables commute, and its right inverse, the lifting ρ̃.
//!
//! sSym elements are linear combinations of superpartition-indexed basis
//! functions. The monomial basis is expanded by distinct-orbit enumeration;
//! the power sum, elementary and complete homogeneous bases are built
//! multiplicatively from their generators, and all transition matrices between
//! them are derived on the fly by expanding concretely and solving the exact
//! linear system — nothing is transcribed from classical tables.

use crate::algebra::{fmt_coeff, invert_matrix, parse_rat, Basis, Element};
use crate::combinat::{set_superpartitions, SetSuperpartition, Superpartition};
use crate::oracle::{self, normalize_thetas};
use crate::{rat_factorial, rat_one, rat_zero, Error, Rat, Result};
use num::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

// ---------------------------------------------------------------------------
// Concrete commuting polynomials
// ---------------------------------------------------------------------------

/// A normal-form commuting monomial: strictly increasing θ-indices and an
/// exponent map on x-variables with no zero entries (all indices 1-based).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CMono {
    pub thetas: Vec<u32>,
    pub exps: BTreeMap<u32, u32>,
}

/// A polynomial in commuting x-variables and anticommuting θ-variables.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CPoly {
    terms: BTreeMap<CMono, Rat>,
}

impl CPoly {
    pub fn zero() -> Self {
        CPoly::default()
    }

    pub fn one() -> Self {
        let mut p = CPoly::zero();
        p.add_term(&[], BTreeMap::new(), rat_one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<CMono, Rat> {
        &self.terms
    }

    /// Add `coeff · θ_{thetas} x^{exps}`, normalizing the θ-part and dropping
    /// zero exponents.
    pub fn add_term(&mut self, thetas: &[u32], exps: BTreeMap<u32, u32>, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let Some((sorted, sign)) = normalize_thetas(thetas) else {
            return;
        };
        let mono = CMono {
            thetas: sorted,
            exps: exps.into_iter().filter(|&(_, e)| e > 0).collect(),
        };
        let signed = if sign < 0 { -coeff } else { coeff };
        let entry = self.terms.entry(mono).or_insert_with(rat_zero);
        *entry += signed;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn coeff(&self, mono: &CMono) -> Rat {
        self.terms.get(mono).cloned().unwrap_or_else(rat_zero)
    }

    pub fn add(&self, other: &CPoly) -> CPoly {
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(&mono.thetas, mono.exps.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &CPoly) -> CPoly {
        self.add(&other.scale(&-rat_one()))
    }

    pub fn scale(&self, q: &Rat) -> CPoly {
        if q.is_zero() {
            return CPoly::zero();
        }
        CPoly {
            terms: self
                .terms
                .iter()
                .map(|(mono, c)| (mono.clone(), c * q))
                .collect(),
        }
    }

    pub fn mul(&self, other: &CPoly) -> CPoly {
        let mut out = CPoly::zero();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let mut thetas = u.thetas.clone();
                thetas.extend_from_slice(&v.thetas);
                let mut exps = u.exps.clone();
                for (&x, &e) in &v.exps {
                    *exps.entry(x).or_insert(0) += e;
                }
                out.add_term(&thetas, exps, cu * cv);
            }
        }
        out
    }

    /// Diagonal action of a permutation of the variables: `perm[i-1]` is the
    /// image of variable `i`.
    pub fn apply_perm(&self, perm: &[u32]) -> CPoly {
        let mut out = CPoly::zero();
        for (mono, c) in &self.terms {
            let thetas: Vec<u32> = mono.thetas.iter().map(|&i| perm[(i - 1) as usize]).collect();
            let exps: BTreeMap<u32, u32> = mono
                .exps
                .iter()
                .map(|(&i, &e)| (perm[(i - 1) as usize], e))
                .collect();
            out.add_term(&thetas, exps, c.clone());
        }
        out
    }
}

impl fmt::Display for CPoly {
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
            for (x, e) in &mono.exps {
                if *e == 1 {
                    write!(f, " x{x}")?;
                } else {
                    write!(f, " x{x}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// The projection ρ at the concrete level: sort each x-word into an exponent
/// map (no sign; x-variables commute), keep the θ-word as is.
pub fn project_concrete(f: &oracle::Poly) -> CPoly {
    let mut out = CPoly::zero();
    for (mono, c) in f.terms() {
        let mut exps: BTreeMap<u32, u32> = BTreeMap::new();
        for &x in &mono.word {
            *exps.entry(x).or_insert(0) += 1;
        }
        out.add_term(&mono.thetas, exps, c.clone());
    }
    out
}

// ---------------------------------------------------------------------------
// Concrete expansions of the sSym bases
// ---------------------------------------------------------------------------

/// The monomial function `m_Λ` over `n_vars` variables: one term per distinct
/// assignment of the components of Λ to distinct variables, fermionic
/// components carrying a θ in component order.
pub fn cexpand_m(lam: &Superpartition, n_vars: u32) -> CPoly {
    let m = lam.df();
    let exps: Vec<u32> = lam
        .antisym()
        .iter()
        .chain(lam.sym().iter())
        .copied()
        .collect();
    let k = exps.len();
    let mut out = CPoly::zero();
    if k as u32 > n_vars {
        return out;
    }
    let mut seen: BTreeSet<(Vec<u32>, BTreeMap<u32, u32>)> = BTreeSet::new();
    let mut vars: Vec<u32> = Vec::with_capacity(k);
    let mut used = vec![false; n_vars as usize + 1];
    assign(
        &exps, m, n_vars, &mut vars, &mut used, &mut seen, &mut out,
    );
    out
}

fn assign(
    exps: &[u32],
    m: usize,
    n_vars: u32,
    vars: &mut Vec<u32>,
    used: &mut [bool],
    seen: &mut BTreeSet<(Vec<u32>, BTreeMap<u32, u32>)>,
    out: &mut CPoly,
) {
    if vars.len() == exps.len() {
        let ferm = vars[..m].to_vec();
        let mut emap: BTreeMap<u32, u32> = BTreeMap::new();
        for (pos, &v) in vars.iter().enumerate() {
            if exps[pos] > 0 {
                emap.insert(v, exps[pos]);
            }
        }
        if seen.insert((ferm.clone(), emap.clone())) {
            out.add_term(&ferm, emap, rat_one());
        }
        return;
    }
    for v in 1..=n_vars {
        if !used[v as usize] {
            used[v as usize] = true;
            vars.push(v);
            assign(exps, m, n_vars, vars, used, seen, out);
            vars.pop();
            used[v as usize] = false;
        }
    }
}

/// The fermionic power sum generator `p̃_k = Σ_i θ_i x_i^k`.
pub fn p_tilde(k: u32, n_vars: u32) -> CPoly {
    let mut out = CPoly::zero();
    for i in 1..=n_vars {
        let mut exps = BTreeMap::new();
        if k > 0 {
            exps.insert(i, k);
        }
        out.add_term(&[i], exps, rat_one());
    }
    out
}

/// The classical power sum `p_r = Σ_i x_i^r`.
pub fn p_classic(r: u32, n_vars: u32) -> CPoly {
    let mut out = CPoly::zero();
    for i in 1..=n_vars {
        out.add_term(&[], BTreeMap::from([(i, r)]), rat_one());
    }
    out
}

/// The fermionic elementary generator `ẽ_k = m_{(0; 1^k)}`.
pub fn e_tilde(k: u32, n_vars: u32) -> CPoly {
    let lam = Superpartition::new(vec![0], vec![1; k as usize]).unwrap();
    cexpand_m(&lam, n_vars)
}

/// The classical elementary `e_r = m_{(; 1^r)}`.
pub fn e_classic(r: u32, n_vars: u32) -> CPoly {
    let lam = Superpartition::new(vec![], vec![1; r as usize]).unwrap();
    cexpand_m(&lam, n_vars)
}

/// The fermionic complete homogeneous generator
/// `h̃_k = Σ_{deg Λ = k, df Λ = 1} (Λ_1 + 1) m_Λ`.
pub fn h_tilde(k: u32, n_vars: u32) -> CPoly {
    let mut out = CPoly::zero();
    for lam in Superpartition::enumerate(k, 1) {
        let c = Rat::from(num::BigInt::from(lam.antisym()[0] + 1));
        out = out.add(&cexpand_m(&lam, n_vars).scale(&c));
    }
    out
}

/// The classical complete homogeneous `h_r = Σ_{deg Λ = r, df Λ = 0} m_Λ`.
pub fn h_classic(r: u32, n_vars: u32) -> CPoly {
    let mut out = CPoly::zero();
    for lam in Superpartition::enumerate(r, 0) {
        out = out.add(&cexpand_m(&lam, n_vars));
    }
    out
}

/// Concrete expansion of a classical sSym basis function over `n_vars`
/// variables; p/e/h are products of their generators in component order.
pub fn cexpand(basis: Basis, lam: &Superpartition, n_vars: u32) -> CPoly {
    if basis == Basis::M {
        return cexpand_m(lam, n_vars);
    }
    let (tilde, classic): (fn(u32, u32) -> CPoly, fn(u32, u32) -> CPoly) = match basis {
        Basis::P => (p_tilde, p_classic),
        Basis::E => (e_tilde, e_classic),
        Basis::H => (h_tilde, h_classic),
        Basis::M => unreachable!(),
    };
    let mut out = CPoly::one();
    for &a in lam.antisym() {
        out = out.mul(&tilde(a, n_vars));
    }
    for &r in lam.sym() {
        out = out.mul(&classic(r, n_vars));
    }
    out
}

// ---------------------------------------------------------------------------
// Symbolic sSym elements
// ---------------------------------------------------------------------------

/// Basis tag for sSym elements. The Schur-type tags are carried for display;
/// conversions are defined between the four classical bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SBasis {
    M,
    P,
    E,
    H,
    S,
    SBar,
}

impl SBasis {
    pub fn letter(self) -> &'static str {
        match self {
            SBasis::M => "m",
            SBasis::P => "p",
            SBasis::E => "e",
            SBasis::H => "h",
            SBasis::S => "s",
            SBasis::SBar => "sb",
        }
    }

    pub fn from_letter(s: &str) -> Result<SBasis> {
        match s {
            "m" => Ok(SBasis::M),
            "p" => Ok(SBasis::P),
            "e" => Ok(SBasis::E),
            "h" => Ok(SBasis::H),
            "s" => Ok(SBasis::S),
            "sb" => Ok(SBasis::SBar),
            other => Err(Error::UnsupportedBasis(other.to_string())),
        }
    }

    /// The corresponding classical basis, if any.
    pub fn classical(self) -> Option<Basis> {
        match self {
            SBasis::M => Some(Basis::M),
            SBasis::P => Some(Basis::P),
            SBasis::E => Some(Basis::E),
            SBasis::H => Some(Basis::H),
            _ => None,
        }
    }

    fn require_classical(self) -> Result<Basis> {
        self.classical()
            .ok_or_else(|| Error::UnsupportedBasis(self.letter().to_string()))
    }
}

impl fmt::Display for SBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A homogeneous element of sSym: a rational linear combination of basis
/// functions indexed by superpartitions of a fixed bidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SElement {
    basis: SBasis,
    degree: u32,
    df: usize,
    terms: BTreeMap<Superpartition, Rat>,
}

impl SElement {
    pub fn zero(basis: SBasis, degree: u32, df: usize) -> Self {
        SElement {
            basis,
            degree,
            df,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_fn(basis: SBasis, lam: &Superpartition) -> Self {
        let mut el = SElement::zero(basis, lam.degree(), lam.df());
        el.add_term(lam, rat_one());
        el
    }

    pub fn basis(&self) -> SBasis {
        self.basis
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn df(&self) -> usize {
        self.df
    }

    pub fn terms(&self) -> &BTreeMap<Superpartition, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lam: &Superpartition) -> Rat {
        self.terms.get(lam).cloned().unwrap_or_else(rat_zero)
    }

    pub fn add_term(&mut self, lam: &Superpartition, c: Rat) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!((lam.degree(), lam.df()), (self.degree, self.df));
        let entry = self.terms.entry(lam.clone()).or_insert_with(rat_zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, q| !q.is_zero());
        }
    }

    pub fn add(&self, other: &SElement) -> Result<SElement> {
        if self.basis != other.basis {
            return Err(Error::UnsupportedBasis(format!(
                "cannot add {} to {}",
                other.basis, self.basis
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
        for (lam, c) in &other.terms {
            out.add_term(lam, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, q: &Rat) -> SElement {
        if q.is_zero() {
            return SElement::zero(self.basis, self.degree, self.df);
        }
        SElement {
            basis: self.basis,
            degree: self.degree,
            df: self.df,
            terms: self
                .terms
                .iter()
                .map(|(lam, c)| (lam.clone(), c * q))
                .collect(),
        }
    }

    pub fn negate(&self) -> SElement {
        self.scale(&-rat_one())
    }

    /// Change of basis among the classical bases, via transition matrices
    /// derived from concrete expansions.
    pub fn convert(&self, target: SBasis) -> Result<SElement> {
        if self.basis == target {
            return Ok(self.clone());
        }
        let src = self.basis.require_classical()?;
        let tgt = target.require_classical()?;
        let lams = Superpartition::enumerate(self.degree, self.df);
        let pos: BTreeMap<&Superpartition, usize> =
            lams.iter().enumerate().map(|(p, l)| (l, p)).collect();
        // coordinates in the monomial basis
        let mut coords: Vec<Rat> = vec![rat_zero(); lams.len()];
        if src == Basis::M {
            for (lam, c) in &self.terms {
                coords[pos[lam]] = c.clone();
            }
        } else {
            let fwd = transition(src, self.degree, self.df);
            for (lam, c) in &self.terms {
                let col = pos[lam];
                for (row, coord) in coords.iter_mut().enumerate() {
                    *coord += &fwd[row][col] * c;
                }
            }
        }
        let mut out = SElement::zero(target, self.degree, self.df);
        if tgt == Basis::M {
            for (row, lam) in lams.iter().enumerate() {
                out.add_term(lam, coords[row].clone());
            }
            return Ok(out);
        }
        let inv = inverse_ssym_transition(tgt, self.degree, self.df);
        for (row, lam) in lams.iter().enumerate() {
            let mut acc = rat_zero();
            for (col, coord) in coords.iter().enumerate() {
                if !coord.is_zero() {
                    acc += &inv[row][col] * coord;
                }
            }
            out.add_term(lam, acc);
        }
        Ok(out)
    }

    /// Product of elements in the same multiplicative basis (p, e or h):
    /// concatenate components and sort, with the sign of the permutation
    /// reordering the fermionic generators; a repeated fermionic component
    /// kills the term.
    pub fn product(&self, other: &SElement) -> Result<SElement> {
        if self.basis != other.basis || !matches!(self.basis, SBasis::P | SBasis::E | SBasis::H) {
            return Err(Error::UnsupportedBasis(format!(
                "product requires a common multiplicative basis, got {} and {}",
                self.basis, other.basis
            )));
        }
        let mut out = SElement::zero(
            self.basis,
            self.degree + other.degree,
            self.df + other.df,
        );
        for (la, ca) in &self.terms {
            for (lb, cb) in &other.terms {
                let antisym: Vec<u32> = la
                    .antisym()
                    .iter()
                    .chain(lb.antisym().iter())
                    .copied()
                    .collect();
                let sym: Vec<u32> =
                    la.sym().iter().chain(lb.sym().iter()).copied().collect();
                if let Some((lam, eps)) = Superpartition::sort(&antisym, &sym) {
                    let c = ca * cb;
                    out.add_term(&lam, if eps % 2 == 1 { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Concrete expansion over `n_vars` variables.
    pub fn expand(&self, n_vars: u32) -> Result<CPoly> {
        let basis = self.basis.require_classical()?;
        let mut out = CPoly::zero();
        for (lam, c) in &self.terms {
            out = out.add(&cexpand(basis, lam, n_vars).scale(c));
        }
        Ok(out)
    }
}

/// Monomial-basis coordinates of a concrete polynomial of bidegree `(n, m)`:
/// the coefficient of `m_Λ` is read off the canonical monomial that puts the
/// θs on variables `1..m` with the fermionic exponents in component order.
pub fn m_coords_ssym(p: &CPoly, n: u32, m: usize) -> BTreeMap<Superpartition, Rat> {
    let mut out = BTreeMap::new();
    for lam in Superpartition::enumerate(n, m) {
        let mono = canonical_cmono(&lam);
        let c = p.coeff(&mono);
        if !c.is_zero() {
            out.insert(lam, c);
        }
    }
    out
}

/// The canonical monomial of `m_Λ`: θ-variables `1..m`, variable `i` carrying
/// the `i`th fermionic exponent, symmetric exponents on the next variables.
pub fn canonical_cmono(lam: &Superpartition) -> CMono {
    let m = lam.df();
    let mut exps = BTreeMap::new();
    for (i, &a) in lam.antisym().iter().enumerate() {
        if a > 0 {
            exps.insert(i as u32 + 1, a);
        }
    }
    for (j, &r) in lam.sym().iter().enumerate() {
        exps.insert((m + j) as u32 + 1, r);
    }
    CMono {
        thetas: (1..=m as u32).collect(),
        exps,
    }
}

/// Number of variables sufficient to separate all superpartitions of
/// bidegree `(n, m)`.
fn ssym_vars(n: u32, m: usize) -> u32 {
    (n + m as u32).max(1)
}

/// Cached transition matrix on bidegree `(n, m)`: entry `[row Ω][col Λ]` is
/// the coefficient of `m_Ω` in `basis_Λ`, derived by concrete expansion.
fn transition(basis: Basis, n: u32, m: usize) -> Vec<Vec<Rat>> {
    static CACHE: OnceLock<Mutex<HashMap<(Basis, u32, usize), Vec<Vec<Rat>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&(basis, n, m)) {
        return t.clone();
    }
    let lams = Superpartition::enumerate(n, m);
    let pos: BTreeMap<&Superpartition, usize> =
        lams.iter().enumerate().map(|(p, l)| (l, p)).collect();
    let nv = ssym_vars(n, m);
    let mut t = vec![vec![rat_zero(); lams.len()]; lams.len()];
    for (col, lam) in lams.iter().enumerate() {
        for (omega, c) in m_coords_ssym(&cexpand(basis, lam, nv), n, m) {
            t[pos[&omega]][col] = c;
        }
    }
    cache.lock().unwrap().insert((basis, n, m), t.clone());
    t
}

/// Cached inverse of [`transition`].
fn inverse_ssym_transition(basis: Basis, n: u32, m: usize) -> Vec<Vec<Rat>> {
    static CACHE: OnceLock<Mutex<HashMap<(Basis, u32, usize), Vec<Vec<Rat>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(inv) = cache.lock().unwrap().get(&(basis, n, m)) {
        return inv.clone();
    }
    let inv = invert_matrix(transition(basis, n, m));
    cache.lock().unwrap().insert((basis, n, m), inv.clone());
    inv
}

// ---------------------------------------------------------------------------
// The projection ρ and the lifting ρ̃
// ---------------------------------------------------------------------------

/// The projection ρ : sNCSym → sSym on a symbolic element: per index,
/// `m_I ↦ (-1)^{ε(I)} (Λ(I)^s)^! m_{Λ(I)}`, `p_I ↦ (-1)^{ε(I)} p_{Λ(I)}`,
/// `e_I, h_I ↦ (-1)^{ε(I)} Λ(I)! e/h_{Λ(I)}`; indices with two fermionic
/// blocks of equal size map to zero.
pub fn rho(el: &Element) -> SElement {
    let basis = match el.basis() {
        Basis::M => SBasis::M,
        Basis::P => SBasis::P,
        Basis::E => SBasis::E,
        Basis::H => SBasis::H,
    };
    let mut out = SElement::zero(basis, el.degree(), el.df());
    for (i, c) in el.terms() {
        let (Some(lam), Some(eps)) = (i.lambda(), i.epsilon()) else {
            continue;
        };
        let factor = match el.basis() {
            Basis::M => Rat::from(lam.sym_mult_factorial()),
            Basis::P => rat_one(),
            Basis::E | Basis::H => Rat::from(lam.factorial()),
        };
        let q = factor * c;
        out.add_term(&lam, if eps % 2 == 1 { -q } else { q });
    }
    out
}

/// The lifting ρ̃ : sSym → sNCSym, a right inverse of ρ:
/// `ρ̃(m_Λ) = (Λ!/n!) Σ_{Λ(I)=Λ} (-1)^{ε(I)} m_I`, extended to the other
/// bases by converting to the monomial basis first.
pub fn lift(el: &SElement) -> Result<Element> {
    let em = el.convert(SBasis::M)?;
    let n = em.degree;
    let m = em.df;
    let mut out = Element::zero(Basis::M, n, m);
    let n_fact = rat_factorial(n as usize);
    let indices = set_superpartitions(n, m);
    for (lam, c) in &em.terms {
        let scale = Rat::from(lam.factorial()) / &n_fact * c;
        for i in &indices {
            if i.lambda().as_ref() == Some(lam) {
                let eps = i.epsilon().unwrap();
                let q = if eps % 2 == 1 {
                    -scale.clone()
                } else {
                    scale.clone()
                };
                out.add_term(i.as_comp(), q);
            }
        }
    }
    Ok(out)
}

/// `H_Λ = Σ_{Λ(I)=Λ} (-1)^{ε(I)} h_I`, as an sNCSym element; satisfies
/// `ρ̃(h_Λ) = ((Λ^s)^!/n!) H_Λ` and `ρ(H_Λ) = (n!/(Λ^s)^!) h_Λ`.
pub fn capital_h(lam: &Superpartition) -> Element {
    typed_signed_sum(Basis::H, lam)
}

/// `P_Λ = Σ_{Λ(I)=Λ} (-1)^{ε(I)} p_I`; satisfies `ρ̃(p_Λ) = binom(n,Λ)⁻¹ P_Λ`.
pub fn capital_p(lam: &Superpartition) -> Element {
    typed_signed_sum(Basis::P, lam)
}

fn typed_signed_sum(basis: Basis, lam: &Superpartition) -> Element {
    let mut out = Element::zero(basis, lam.degree(), lam.df());
    for i in set_superpartitions(lam.degree(), lam.df()) {
        if i.lambda().as_ref() == Some(lam) {
            let eps = i.epsilon().unwrap();
            let c = if eps % 2 == 1 { -rat_one() } else { rat_one() };
            out.add_term(i.as_comp(), c);
        }
    }
    out
}

/// The sSym inner product: bilinear with `⟨m_Λ, h_Ω⟩ = (-1)^(m choose 2) δ`.
pub fn inner_product_ssym(f: &SElement, g: &SElement) -> Result<Rat> {
    if (f.degree, f.df) != (g.degree, g.df) {
        return Err(Error::BidegreeMismatch(f.degree, f.df, g.degree, g.df));
    }
    let a = f.convert(SBasis::M)?;
    let b = g.convert(SBasis::H)?;
    let mut acc = rat_zero();
    for (lam, c) in &a.terms {
        acc += c * b.coeff(lam);
    }
    if crate::algebra::fermionic_sign(f.df) < 0 {
        acc = -acc;
    }
    Ok(acc)
}

/// The involution ω̂ on sSym: `ω̂(p_Λ) = (-1)^{deg(Λ) - ℓ(Λ^s)} p_Λ`, routed
/// through the power sum basis.
pub fn omega_hat(el: &SElement) -> Result<SElement> {
    let p = el.convert(SBasis::P)?;
    let mut out = SElement::zero(SBasis::P, p.degree, p.df);
    for (lam, c) in &p.terms {
        let sign = (lam.degree() as usize + lam.sym().len()) % 2;
        out.add_term(lam, if sign == 1 { -c.clone() } else { c.clone() });
    }
    out.convert(el.basis)
}

// ---------------------------------------------------------------------------
// Text and JSON forms
// ---------------------------------------------------------------------------

impl fmt::Display for SElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (lam, c)) in self.terms.iter().enumerate() {
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
                write!(f, "{}[{}]", self.basis, lam)?;
            } else {
                write!(f, "{}*{}[{}]", fmt_coeff(&mag), self.basis, lam)?;
            }
        }
        Ok(())
    }
}

impl SElement {
    /// Parse a linear expression such as `2*h[(0;1)] - h[(1;)]`. All terms
    /// must use the same basis and bidegree; the literal `0` denotes the zero
    /// element of bidegree `(0, 0)` in the monomial basis.
    pub fn parse_expression(s: &str) -> Result<SElement> {
        let s = s.trim();
        if s == "0" {
            return Ok(SElement::zero(SBasis::M, 0, 0));
        }
        let bytes = s.as_bytes();
        let mut pos = 0usize;
        let mut element: Option<SElement> = None;
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
            let mut coeff = rat_one();
            let num_start = pos;
            while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
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
            let letter_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_alphabetic() {
                pos += 1;
            }
            let basis = SBasis::from_letter(&s[letter_start..pos])?;
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
            let lam = Superpartition::parse(&s[pos..close])?;
            pos = close + 1;
            if negative {
                coeff = -coeff;
            }
            let mut term = SElement::zero(basis, lam.degree(), lam.df());
            term.add_term(&lam, coeff);
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

    /// JSON form mirroring the sNCSym one: `{"algebra": "ssym", "basis": "m",
    /// "degree": n, "df": m, "terms": [{"index": "(0;1)", "coeff": "2"}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "algebra": "ssym",
            "basis": self.basis.to_string(),
            "degree": self.degree,
            "df": self.df,
            "terms": self.terms.iter().map(|(lam, c)| serde_json::json!({
                "index": lam.to_string(),
                "coeff": fmt_coeff(c),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<SElement> {
        let get = |key: &str| -> Result<&serde_json::Value> {
            v.get(key)
                .ok_or_else(|| Error::Invalid(format!("missing JSON key {key}")))
        };
        let basis = SBasis::from_letter(get("basis")?.as_str().unwrap_or(""))?;
        let degree = get("degree")?
            .as_u64()
            .ok_or_else(|| Error::Invalid("degree must be an integer".into()))?
            as u32;
        let df = get("df")?
            .as_u64()
            .ok_or_else(|| Error::Invalid("df must be an integer".into()))?
            as usize;
        let mut el = SElement::zero(basis, degree, df);
        for term in get("terms")?
            .as_array()
            .ok_or_else(|| Error::Invalid("terms must be an array".into()))?
        {
            let lam = Superpartition::parse(
                term.get("index")
                    .and_then(|x| x.as_str())
                    .ok_or_else(|| Error::Invalid("term index must be a string".into()))?,
            )?;
            let coeff = parse_rat(
                term.get("coeff")
                    .and_then(|x| x.as_str())
                    .ok_or_else(|| Error::Invalid("term coeff must be a string".into()))?,
            )?;
            if (lam.degree(), lam.df()) != (degree, df) {
                return Err(Error::BidegreeMismatch(degree, df, lam.degree(), lam.df()));
            }
            el.add_term(&lam, coeff);
        }
        Ok(el)
    }
}

/// Used by tests and the verifier: the two-path check
/// `project_concrete(expand(el)) = expand_ssym(rho(el))` for a single basis
/// function of sNCSym.
pub fn rho_two_path_holds(basis: Basis, i: &SetSuperpartition, n_vars: u32) -> bool {
    let el = Element::basis_fn(basis, i.as_comp());
    let lhs = project_concrete(&el.expand(n_vars));
    let rhs = match rho(&el).expand(n_vars) {
        Ok(p) => p,
        Err(_) => return false,
    };
    lhs == rhs
}
