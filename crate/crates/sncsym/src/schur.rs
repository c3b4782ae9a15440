//! Super Young diagrams, super semistandard Young tableaux of both kinds,
//! the signed Kostka-type coefficients K and K̄, and the Schur-type functions
//! S_Λ and S̄_Λ with their monomial expansions, projections and duality.
//!
//! A tableau is stored as its defining chain of superpartitions, with circles
//! carrying persistent identities so that the inversion statistic of the
//! circle-label word is well defined. The box-filling picture is derived
//! output for display only.
//!
//! Second-kind circle migration follows the rule validated here against two
//! independent constraints (symmetry of the resulting polynomials in the
//! underlying variables, and the duality pairing with the first kind): a
//! circle in a touched row may stay at the new end of its row only when the
//! cell above its landing spot predates the strip, and may drop one row only
//! when it lands directly below its old cell. Under the inner product
//! implemented in this crate the duality normalization is
//! ⟨ω(S̄_{Λ'}), S_Ω⟩ = n!²·δ_{Λ,Ω}, with no extra sign.

use crate::algebra::{Basis, Element};
use crate::combinat::{set_superpartitions, Superpartition};
use crate::oracle;
use crate::ssym::{SBasis, SElement};
use crate::{rat_one, Error, Rat, Result};
use itertools::Itertools;
use std::fmt;

/// Which family of tableaux: the first kind defines S_Λ and K, the second
/// kind defines S̄_Λ and K̄.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    First,
    Second,
}

impl Kind {
    pub fn from_num(k: u32) -> Result<Kind> {
        match k {
            1 => Ok(Kind::First),
            2 => Ok(Kind::Second),
            other => Err(Error::Invalid(format!("kind must be 1 or 2, got {other}"))),
        }
    }
}

/// A weight entry: a box count, barred when the step also creates a circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Entry {
    pub value: u32,
    pub barred: bool,
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "{}b", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// An intermediate diagram of a chain: the partition of boxes plus the row of
/// each circle, indexed by creation order.
#[derive(Clone, Debug, PartialEq, Eq)]
struct State {
    rows: Vec<u32>,
    circles: Vec<u32>,
}

/// Part `r` (1-based) of a partition, zero past the end.
fn row(v: &[u32], r: u32) -> u32 {
    if r >= 1 && (r as usize) <= v.len() {
        v[r as usize - 1]
    } else {
        0
    }
}

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Conjugate (transpose) of a partition.
pub fn conjugate_partition(lam: &[u32]) -> Vec<u32> {
    let cols = lam.first().copied().unwrap_or(0);
    (1..=cols)
        .map(|c| lam.iter().filter(|&&x| x >= c).count() as u32)
        .collect()
}

/// The conjugate superpartition: conjugate both `Λ^⊕` and `Λ^+` and read the
/// circle rows back off the pair.
pub fn conjugate(lam: &Superpartition) -> Superpartition {
    let plus = conjugate_partition(&lam.lambda_plus());
    let oplus = conjugate_partition(&lam.lambda_oplus());
    let mut antisym = Vec::new();
    let mut sym = Vec::new();
    for r in 1..=oplus.len() as u32 {
        let p = row(&plus, r);
        if row(&oplus, r) > p {
            antisym.push(p);
        } else {
            sym.push(p);
        }
    }
    Superpartition::sort(&antisym, &sym)
        .expect("conjugate of a valid superpartition is valid")
        .0
}

impl State {
    fn empty() -> State {
        State {
            rows: Vec::new(),
            circles: Vec::new(),
        }
    }

    fn of(lam: &Superpartition) -> State {
        let plus = trim(lam.lambda_plus());
        let oplus = lam.lambda_oplus();
        let mut circles = Vec::new();
        for r in 1..=oplus.len() as u32 {
            if row(&oplus, r) > row(&plus, r) {
                circles.push(r);
            }
        }
        State {
            rows: plus,
            circles,
        }
    }

    fn oplus(&self) -> Vec<u32> {
        let maxr = self
            .circles
            .iter()
            .copied()
            .chain(std::iter::once(self.rows.len() as u32))
            .max()
            .unwrap_or(0);
        (1..=maxr)
            .map(|r| row(&self.rows, r) + u32::from(self.circles.contains(&r)))
            .collect()
    }

    /// A super Young diagram: at most one circle per row and per column, and
    /// `Λ^⊕` is a partition.
    fn valid(&self) -> bool {
        for (i, &r) in self.circles.iter().enumerate() {
            for &s in &self.circles[i + 1..] {
                if r == s || row(&self.rows, r) == row(&self.rows, s) {
                    return false;
                }
            }
        }
        let op = self.oplus();
        op.windows(2).all(|w| w[0] >= w[1]) && !op.contains(&0)
    }

    fn matches(&self, target: &State) -> bool {
        let mut a = self.circles.clone();
        let mut b = target.circles.clone();
        a.sort_unstable();
        b.sort_unstable();
        self.rows == target.rows && a == b
    }

    fn to_superpartition(&self) -> Superpartition {
        let antisym: Vec<u32> = self.circles.iter().map(|&r| row(&self.rows, r)).collect();
        let sym: Vec<u32> = (1..=self.rows.len() as u32)
            .filter(|r| !self.circles.contains(r))
            .map(|r| row(&self.rows, r))
            .collect();
        Superpartition::sort(&antisym, &sym)
            .expect("valid diagram yields a superpartition")
            .0
    }
}

/// All partitions `μ ⊇ λ` with `μ/λ` a horizontal `a`-strip.
fn horizontal_strips(lam: &[u32], a: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut acc = Vec::new();
    fn rec(lam: &[u32], r: u32, remaining: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if r as usize > lam.len() + 1 {
            if remaining == 0 {
                out.push(trim(acc.clone()));
            }
            return;
        }
        let lo = row(lam, r);
        let cap = if r == 1 { u32::MAX } else { row(lam, r - 1) };
        let hi = cap.min(lo.saturating_add(remaining));
        for v in lo..=hi {
            acc.push(v);
            rec(lam, r + 1, remaining - (v - lo), acc, out);
            acc.pop();
        }
    }
    rec(lam, 1, a, &mut acc, &mut out);
    out
}

fn is_horizontal_strip(inner: &[u32], outer: &[u32], a: u32) -> bool {
    let len = outer.len().max(inner.len()) as u32;
    let mut diff = 0;
    for r in 1..=len {
        let (i, o) = (row(inner, r), row(outer, r));
        if o < i || (r > 1 && o > row(inner, r - 1)) {
            return false;
        }
        diff += o - i;
    }
    diff == a
}

/// First-kind circle migration is forced: a circle in row `r` moves to row
/// `r+1` exactly when the new boxes touch row `r`.
fn migrate_forced(state: &State, mu: &[u32]) -> Vec<u32> {
    state
        .circles
        .iter()
        .map(|&r| {
            if row(mu, r) > row(&state.rows, r) {
                r + 1
            } else {
                r
            }
        })
        .collect()
}

/// Second-kind circle migration branches. A circle in an untouched row keeps
/// its place. A circle in a touched row may stay, sliding to the new end of
/// its row, provided the cell above its landing spot was filled before the
/// strip; it may instead drop one row provided it lands directly below its
/// old cell.
fn migrate_branches(state: &State, mu: &[u32]) -> Vec<Vec<u32>> {
    let mut options: Vec<Vec<u32>> = vec![Vec::new()];
    for &r in &state.circles {
        let touched = row(mu, r) > row(&state.rows, r);
        let choices: Vec<u32> = if !touched {
            vec![r]
        } else {
            let mut c = Vec::new();
            if r == 1 || row(mu, r) < row(&state.rows, r - 1) {
                c.push(r);
            }
            if row(mu, r + 1) == row(&state.rows, r) {
                c.push(r + 1);
            }
            c
        };
        options = options
            .into_iter()
            .cartesian_product(choices)
            .map(|(mut v, c)| {
                v.push(c);
                v
            })
            .collect();
    }
    options
}

/// All successor states of `state` for one weight entry.
fn step(state: &State, e: Entry, kind: Kind) -> Vec<State> {
    let mut out = Vec::new();
    for mu in horizontal_strips(&state.rows, e.value) {
        match (e.barred, kind) {
            (false, Kind::First) => {
                let next = State {
                    circles: migrate_forced(state, &mu),
                    rows: mu,
                };
                if next.valid() {
                    out.push(next);
                }
            }
            (false, Kind::Second) => {
                for circles in migrate_branches(state, &mu) {
                    let next = State {
                        circles,
                        rows: mu.clone(),
                    };
                    if next.valid() {
                        out.push(next);
                    }
                }
            }
            (true, Kind::First) => {
                // the new circle sits in the first column not touched by the
                // strip, on the topmost row of the matching length
                let mut c = 1u32;
                while (1..=mu.len() as u32).any(|i| row(&state.rows, i) < c && c <= row(&mu, i)) {
                    c += 1;
                }
                let t = if c == 1 {
                    mu.len() as u32 + 1
                } else {
                    match (1..=mu.len() as u32).find(|&i| row(&mu, i) == c - 1) {
                        Some(t) => t,
                        None => continue,
                    }
                };
                let mut circles = migrate_forced(state, &mu);
                circles.push(t);
                let next = State { circles, rows: mu };
                if next.valid() {
                    out.push(next);
                }
            }
            (true, Kind::Second) => {
                let op_old = state.oplus();
                for circles in migrate_branches(state, &mu) {
                    for t in 1..=mu.len() as u32 + 1 {
                        let mut circles = circles.clone();
                        circles.push(t);
                        let next = State {
                            circles,
                            rows: mu.clone(),
                        };
                        if !next.valid() {
                            continue;
                        }
                        // the θ-strip Λ⊕/Λ⊕ must be a horizontal
                        // (a+1)-strip whose rightmost box is the new circle
                        let op_new = next.oplus();
                        if !is_horizontal_strip(&op_old, &op_new, e.value + 1) {
                            continue;
                        }
                        let rightmost = (1..=op_new.len() as u32)
                            .filter(|&r| row(&op_new, r) > row(&op_old, r))
                            .max_by_key(|&r| row(&op_new, r));
                        if rightmost == Some(t) && row(&op_new, t) == row(&mu, t) + 1 {
                            out.push(next);
                        }
                    }
                }
            }
        }
    }
    out
}

/// A super semistandard Young tableau, stored as its chain of diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperTableau {
    shape: Superpartition,
    weight: Vec<Entry>,
    kind: Kind,
    states: Vec<State>,
}

impl SuperTableau {
    pub fn shape(&self) -> &Superpartition {
        &self.shape
    }

    pub fn weight(&self) -> &[Entry] {
        &self.weight
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// The defining chain `Λ_(0), …, Λ_(r)` as superpartitions.
    pub fn chain(&self) -> Vec<Superpartition> {
        self.states.iter().map(State::to_superpartition).collect()
    }

    /// Labels of the circles read from top to bottom; the `j`th circle is
    /// labelled by the step that created it.
    pub fn circle_word(&self) -> Vec<u32> {
        let barred_steps: Vec<u32> = self
            .weight
            .iter()
            .enumerate()
            .filter(|(_, e)| e.barred)
            .map(|(i, _)| i as u32 + 1)
            .collect();
        let last = self.states.last().unwrap();
        let mut by_row: Vec<(u32, usize)> = last
            .circles
            .iter()
            .enumerate()
            .map(|(j, &r)| (r, j))
            .collect();
        by_row.sort_unstable();
        by_row.into_iter().map(|(_, j)| barred_steps[j]).collect()
    }

    /// Inversions of the circle-label word.
    pub fn inversions(&self) -> usize {
        let w = self.circle_word();
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// The summand `[θx]^T`: the θ-word of circle labels times the sum over
    /// all orderings of the box-label word (labels act as variable indices).
    pub fn theta_x(&self) -> oracle::Poly {
        theta_x(&self.weight, &self.states)
    }

    /// ASCII picture: box labels row by row, `O` for circles.
    pub fn ascii(&self) -> String {
        let last = self.states.last().unwrap();
        let mut grid: Vec<Vec<String>> = last
            .rows
            .iter()
            .map(|&len| vec![String::new(); len as usize])
            .collect();
        for i in 1..self.states.len() {
            let (prev, next) = (&self.states[i - 1], &self.states[i]);
            for r in 1..=next.rows.len() as u32 {
                for c in row(&prev.rows, r)..row(&next.rows, r) {
                    grid[r as usize - 1][c as usize] = i.to_string();
                }
            }
        }
        let maxr = last
            .circles
            .iter()
            .copied()
            .chain(std::iter::once(last.rows.len() as u32))
            .max()
            .unwrap_or(0);
        let mut lines = Vec::new();
        for r in 1..=maxr {
            let mut cells: Vec<String> = if (r as usize) <= grid.len() {
                grid[r as usize - 1].clone()
            } else {
                Vec::new()
            };
            if last.circles.contains(&r) {
                cells.push("O".to_string());
            }
            lines.push(cells.join(" "));
        }
        lines.join("\n")
    }
}

impl fmt::Display for SuperTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[]")?;
        for lam in self.chain().iter().skip(1) {
            write!(f, " -> {lam}")?;
        }
        Ok(())
    }
}

fn theta_x(weight: &[Entry], states: &[State]) -> oracle::Poly {
    let mut word: Vec<u32> = Vec::new();
    for i in 1..states.len() {
        let (prev, next) = (&states[i - 1], &states[i]);
        for r in 1..=next.rows.len() as u32 {
            for _ in row(&prev.rows, r)..row(&next.rows, r) {
                word.push(i as u32);
            }
        }
    }
    let barred_steps: Vec<u32> = weight
        .iter()
        .enumerate()
        .filter(|(_, e)| e.barred)
        .map(|(i, _)| i as u32 + 1)
        .collect();
    let last = states.last().unwrap();
    let mut by_row: Vec<(u32, usize)> = last
        .circles
        .iter()
        .enumerate()
        .map(|(j, &r)| (r, j))
        .collect();
    by_row.sort_unstable();
    let thetas: Vec<u32> = by_row.into_iter().map(|(_, j)| barred_steps[j]).collect();
    let mut out = oracle::Poly::zero();
    let n = word.len();
    for perm in (0..n).permutations(n) {
        let w: Vec<u32> = perm.into_iter().map(|p| word[p]).collect();
        out.add_term(&thetas, &w, rat_one());
    }
    out
}

/// All tableaux of the given shape, weight and kind; empty when none exist.
pub fn enumerate_tableaux(
    shape: &Superpartition,
    weight: &[Entry],
    kind: Kind,
) -> Vec<SuperTableau> {
    let target = State::of(shape);
    let mut out = Vec::new();
    let mut chain = vec![State::empty()];
    dfs(shape, weight, kind, &target, &mut chain, &mut out);
    out
}

fn dfs(
    shape: &Superpartition,
    weight: &[Entry],
    kind: Kind,
    target: &State,
    chain: &mut Vec<State>,
    out: &mut Vec<SuperTableau>,
) {
    let depth = chain.len() - 1;
    if depth == weight.len() {
        if chain.last().unwrap().matches(target) {
            out.push(SuperTableau {
                shape: shape.clone(),
                weight: weight.to_vec(),
                kind,
                states: chain.clone(),
            });
        }
        return;
    }
    let current = chain.last().unwrap().clone();
    for next in step(&current, weight[depth], kind) {
        // prune branches that already overflow the target shape
        let fits = (1..=next.rows.len() as u32)
            .all(|r| row(&next.rows, r) <= row(&target.rows, r))
            && next.circles.len() <= target.circles.len();
        if fits {
            chain.push(next);
            dfs(shape, weight, kind, target, chain, out);
            chain.pop();
        }
    }
}

/// The weight `(Ω̄_1,…,Ω̄_m,Ω_{m+1},…,Ω_k)` attached to a superpartition.
pub fn weight_of(omega: &Superpartition) -> Vec<Entry> {
    omega
        .antisym()
        .iter()
        .map(|&v| Entry {
            value: v,
            barred: true,
        })
        .chain(omega.sym().iter().map(|&v| Entry {
            value: v,
            barred: false,
        }))
        .collect()
}

/// The signed Kostka-type coefficient `K_{Λ,Ω}` (kind 1) or `K̄_{Λ,Ω}`
/// (kind 2): `Σ_T (-1)^{inv(T)}` over tableaux of shape Λ and weight Ω.
pub fn kostka(shape: &Superpartition, omega: &Superpartition, kind: Kind) -> i64 {
    enumerate_tableaux(shape, &weight_of(omega), kind)
        .iter()
        .map(|t| if t.inversions() % 2 == 1 { -1 } else { 1 })
        .sum()
}

/// The Schur function `S_Λ` (kind 1) or `S̄_Λ` (kind 2) in the monomial basis
/// of sNCSym: `Σ_Ω K_{Λ,Ω} Ω! Σ_{Λ(I)=Ω} (-1)^{ε(I)} m_I`.
pub fn schur(lam: &Superpartition, kind: Kind) -> Element {
    let (n, m) = (lam.degree(), lam.df());
    let mut out = Element::zero(Basis::M, n, m);
    let indices = set_superpartitions(n, m);
    for omega in Superpartition::enumerate(n, m) {
        let k = kostka(lam, &omega, kind);
        if k == 0 {
            continue;
        }
        let c = Rat::from(omega.factorial()) * Rat::from(num::BigInt::from(k));
        for i in &indices {
            if i.lambda().as_ref() == Some(&omega) {
                let eps = i.epsilon().unwrap();
                out.add_term(i.as_comp(), if eps % 2 == 1 { -c.clone() } else { c.clone() });
            }
        }
    }
    out
}

/// The Schur function `s_Λ` or `s̄_Λ` of sSym in its monomial basis:
/// `Σ_Ω K_{Λ,Ω} m_Ω`.
pub fn schur_ssym(lam: &Superpartition, kind: Kind) -> SElement {
    let mut out = SElement::zero(SBasis::M, lam.degree(), lam.df());
    for omega in Superpartition::enumerate(lam.degree(), lam.df()) {
        let k = kostka(lam, &omega, kind);
        if k != 0 {
            out.add_term(&omega, Rat::from(num::BigInt::from(k)));
        }
    }
    out
}

/// Direct oracle expansion `Σ_T [θx]^T` over `n_vars` variables, summing over
/// all tableaux of shape Λ with labels in `1..=n_vars`.
pub fn schur_oracle(lam: &Superpartition, kind: Kind, n_vars: u32) -> oracle::Poly {
    let target = State::of(lam);
    let mut out = oracle::Poly::zero();
    let mut weight = Vec::new();
    let mut chain = vec![State::empty()];
    oracle_dfs(
        lam.degree(),
        lam.df(),
        kind,
        &target,
        n_vars,
        &mut weight,
        &mut chain,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn oracle_dfs(
    rem_n: u32,
    rem_m: usize,
    kind: Kind,
    target: &State,
    slots: u32,
    weight: &mut Vec<Entry>,
    chain: &mut Vec<State>,
    out: &mut oracle::Poly,
) {
    if slots == 0 {
        if rem_n == 0 && rem_m == 0 && chain.last().unwrap().matches(target) {
            *out = out.add(&theta_x(weight, chain));
        }
        return;
    }
    let current = chain.last().unwrap().clone();
    for barred in [false, true] {
        if barred && rem_m == 0 {
            continue;
        }
        for value in 0..=rem_n {
            let e = Entry { value, barred };
            for next in step(&current, e, kind) {
                let fits = (1..=next.rows.len() as u32)
                    .all(|r| row(&next.rows, r) <= row(&target.rows, r))
                    && next.circles.len() <= target.circles.len();
                if fits {
                    weight.push(e);
                    chain.push(next);
                    oracle_dfs(
                        rem_n - value,
                        rem_m - usize::from(barred),
                        kind,
                        target,
                        slots - 1,
                        weight,
                        chain,
                        out,
                    );
                    chain.pop();
                    weight.pop();
                }
            }
        }
    }
}

/// The duality pairing `⟨ω(S̄_{Λ'}), S_Ω⟩`, which equals
/// `n!² (-1)^(m choose 2) δ_{Λ,Ω}`.
pub fn check_duality(lam: &Superpartition, omega: &Superpartition) -> Result<Rat> {
    let left = schur(&conjugate(lam), Kind::Second).omega();
    let right = schur(omega, Kind::First);
    left.inner(&right)
}
