//! Index-object combinatorics: blocks, partial set supercompositions, set
//! superpartitions, superpartitions, the strong-coarsening and coarsening
//! orders, meets, Möbius values, type maps and counting formulas.
//!
//! Conventions used throughout:
//!
//! * a block is a finite set of nonnegative integers containing at most one
//!   `0`; it is *fermionic* iff it contains `0`;
//! * in a partial set supercomposition the fermionic blocks come first, in a
//!   significant tuple order, followed by the nonfermionic blocks sorted by
//!   their minimum;
//! * permutations of `[m]` are stored as words `perm[0..m]` with values in
//!   `0..m`, so `perm[i]` is the (0-based) image of position `i`.

use crate::{Error, Result};
use num::BigInt;
use std::collections::BTreeSet;
use std::fmt;

// ---------------------------------------------------------------------------
// Blocks
// ---------------------------------------------------------------------------

/// A nonempty set of nonnegative integers with at most one occurrence of 0.
/// Stored sorted ascending, so a fermionic block starts with 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block {
    elems: Vec<u32>,
}

impl Block {
    pub fn new(mut elems: Vec<u32>) -> Result<Self> {
        if elems.is_empty() {
            return Err(Error::Invalid("block must be nonempty".into()));
        }
        elems.sort_unstable();
        elems.dedup();
        Ok(Block { elems })
    }

    /// Block from a slice, panicking on emptiness. Convenient in tests and
    /// internal construction where nonemptiness is guaranteed.
    pub fn of(elems: &[u32]) -> Self {
        Block::new(elems.to_vec()).expect("nonempty block")
    }

    pub fn elems(&self) -> &[u32] {
        &self.elems
    }

    pub fn is_fermionic(&self) -> bool {
        self.elems[0] == 0
    }

    /// The elements of the block without 0.
    pub fn positive(&self) -> &[u32] {
        if self.is_fermionic() {
            &self.elems[1..]
        } else {
            &self.elems
        }
    }

    /// `min(B \ {0})`, with the convention `min(∅) = 0`.
    pub fn min_positive(&self) -> u32 {
        self.positive().first().copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    /// `A ⊕ B`: union, undefined (`None`) when both blocks are fermionic.
    pub fn oplus(&self, other: &Block) -> Option<Block> {
        if self.is_fermionic() && other.is_fermionic() {
            return None;
        }
        let mut elems = self.elems.clone();
        elems.extend_from_slice(&other.elems);
        Some(Block::new(elems).unwrap())
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

// ---------------------------------------------------------------------------
// Partial set supercompositions
// ---------------------------------------------------------------------------

/// A partial set supercomposition of bidegree `(n, m)`: a tuple of blocks
/// whose nonzero elements partition `[n]`, with the `m` fermionic blocks
/// first (in significant order) and the nonfermionic blocks sorted by
/// minimum.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperComposition {
    blocks: Vec<Block>,
    degree: u32,
    fermionic: usize,
}

impl SuperComposition {
    /// Build from blocks in any order. The relative order of the fermionic
    /// blocks is preserved; nonfermionic blocks are sorted by minimum.
    pub fn new(blocks: Vec<Block>) -> Result<Self> {
        let mut fermi: Vec<Block> = Vec::new();
        let mut plain: Vec<Block> = Vec::new();
        for b in blocks {
            if b.is_fermionic() {
                fermi.push(b);
            } else {
                plain.push(b);
            }
        }
        plain.sort_by_key(|b| b.elems[0]);
        let m = fermi.len();
        fermi.extend(plain);
        let blocks = fermi;
        let mut seen = BTreeSet::new();
        let mut max = 0u32;
        let mut count = 0u32;
        for b in &blocks {
            for &e in b.positive() {
                if !seen.insert(e) {
                    return Err(Error::Invalid(format!("element {e} repeated")));
                }
                max = max.max(e);
                count += 1;
            }
        }
        if count != max {
            return Err(Error::Invalid(format!(
                "nonzero elements must cover [1..{max}] exactly"
            )));
        }
        Ok(SuperComposition {
            blocks,
            degree: max,
            fermionic: m,
        })
    }

    /// Parse the bit-exact text form `({0},{0,2},{1,3})`.
    pub fn parse(s: &str) -> Result<Self> {
        let (comp, rest) = parse_composition(s.trim(), 0)?;
        if !s.trim()[rest..].trim().is_empty() {
            return Err(Error::Parse {
                pos: rest,
                expected: "end of input".into(),
            });
        }
        Ok(comp)
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The fermionic degree `m`.
    pub fn df(&self) -> usize {
        self.fermionic
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn fermionic_blocks(&self) -> &[Block] {
        &self.blocks[..self.fermionic]
    }

    pub fn nonfermionic_blocks(&self) -> &[Block] {
        &self.blocks[self.fermionic..]
    }

    /// Trivial = contains at least two blocks equal to `{0}`. The basis
    /// functions indexed by trivial compositions all vanish.
    pub fn is_trivial(&self) -> bool {
        self.blocks.iter().filter(|b| b.elems == [0]).count() >= 2
    }

    /// `0̂_{n,m}`: all blocks singletons.
    pub fn zero_hat(n: u32, m: usize) -> Self {
        let mut blocks = vec![Block::of(&[0]); m];
        for e in 1..=n {
            blocks.push(Block::of(&[e]));
        }
        SuperComposition::new(blocks).unwrap()
    }

    /// The underlying set partition `K⁺` of `[n]`: the nonempty positive
    /// parts of the blocks, sorted by minimum.
    pub fn underlying(&self) -> Vec<Vec<u32>> {
        let mut parts: Vec<Vec<u32>> = self
            .blocks
            .iter()
            .filter(|b| !b.positive().is_empty())
            .map(|b| b.positive().to_vec())
            .collect();
        parts.sort_by_key(|p| p[0]);
        parts
    }

    /// σ ▷ K: permute the fermionic blocks, `new_i = old_{perm[i]}`.
    pub fn permute_fermionic(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.fermionic);
        let mut blocks: Vec<Block> = perm.iter().map(|&i| self.blocks[i].clone()).collect();
        blocks.extend_from_slice(self.nonfermionic_blocks());
        SuperComposition {
            blocks,
            degree: self.degree,
            fermionic: self.fermionic,
        }
    }

    /// δ ∘ K: relabel the elements of `[n]` by the permutation `delta`
    /// (`delta[e-1] + 1` is the image of `e`).
    pub fn relabel(&self, delta: &[u32]) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                Block::new(
                    b.elems
                        .iter()
                        .map(|&e| if e == 0 { 0 } else { delta[(e - 1) as usize] })
                        .collect(),
                )
                .unwrap()
            })
            .collect();
        SuperComposition::new(blocks).unwrap()
    }

    /// The `r`-shift `K[r]`: add `r` to every nonzero element of every block.
    /// The result is a raw block list, not a supercomposition.
    pub fn shift(&self, r: u32) -> Vec<Block> {
        self.blocks
            .iter()
            .map(|b| {
                Block::new(
                    b.elems
                        .iter()
                        .map(|&e| if e == 0 { 0 } else { e + r })
                        .collect(),
                )
                .unwrap()
            })
            .collect()
    }

    /// `K \ A`: remove the elements of `A` from every block, dropping blocks
    /// that become empty.
    pub fn restrict(&self, a: &BTreeSet<u32>) -> Vec<Block> {
        self.blocks
            .iter()
            .filter_map(|b| {
                let kept: Vec<u32> = b.elems.iter().copied().filter(|e| !a.contains(e)).collect();
                if kept.is_empty() {
                    None
                } else {
                    Some(Block::new(kept).unwrap())
                }
            })
            .collect()
    }

    /// Standardization into the set partitions of `[n+m]`: shift by `m`, then
    /// renumber the zeros `1..m` in fermionic-block order.
    pub fn standardize(&self) -> SuperComposition {
        let m = self.fermionic as u32;
        let mut blocks = self.shift(m);
        for (i, b) in blocks.iter_mut().enumerate().take(self.fermionic) {
            debug_assert_eq!(b.elems[0], 0);
            let mut elems = b.elems.clone();
            elems[0] = (i + 1) as u32;
            *b = Block::new(elems).unwrap();
        }
        SuperComposition::new(blocks).unwrap()
    }

    /// `K̄` with the parity of the fermionic sorting permutation:
    /// removes repeated `{0}` blocks and sorts the fermionic blocks by
    /// `min(B\{0})`. Returns `(canonical, sign)` with `sign = ±1`; the sign is
    /// only meaningful for nontrivial `K`.
    pub fn bar(&self) -> (SetSuperpartition, i32) {
        let mut fermi: Vec<Block> = Vec::new();
        for b in self.fermionic_blocks() {
            if b.elems == [0] && fermi.iter().any(|f| f.elems == [0]) {
                continue;
            }
            fermi.push(b.clone());
        }
        // parity of sorting by min-positive key
        let keys: Vec<u32> = fermi.iter().map(|b| b.min_positive()).collect();
        let mut inv = 0usize;
        for i in 0..keys.len() {
            for j in i + 1..keys.len() {
                if keys[i] > keys[j] {
                    inv += 1;
                }
            }
        }
        fermi.sort_by_key(|b| b.min_positive());
        let mut blocks = fermi;
        blocks.extend_from_slice(self.nonfermionic_blocks());
        let comp = SuperComposition::new(blocks).unwrap();
        let sign = if inv % 2 == 0 { 1 } else { -1 };
        (SetSuperpartition(comp), sign)
    }

    /// The over product `K/L = K ∪ L[n]`, `n = deg(K)`: fermionic blocks of
    /// `K` first, then those of `L`, then the nonfermionic blocks.
    pub fn over(&self, other: &SuperComposition) -> SuperComposition {
        let mut fermi: Vec<Block> = self.fermionic_blocks().to_vec();
        let shifted = SuperComposition {
            blocks: other.shift(self.degree),
            degree: other.degree,
            fermionic: other.fermionic,
        };
        fermi.extend_from_slice(&shifted.blocks[..other.fermionic]);
        let m = fermi.len();
        let mut blocks = fermi;
        blocks.extend_from_slice(self.nonfermionic_blocks());
        blocks.extend_from_slice(&shifted.blocks[other.fermionic..]);
        blocks[m..].sort_by_key(|b| b.elems[0]);
        SuperComposition {
            blocks,
            degree: self.degree + other.degree,
            fermionic: m,
        }
    }

    /// Blocks as plain lists of integers (JSON form).
    pub fn as_lists(&self) -> Vec<Vec<u32>> {
        self.blocks.iter().map(|b| b.elems.clone()).collect()
    }

    pub fn from_lists(lists: &[Vec<u32>]) -> Result<Self> {
        let blocks = lists
            .iter()
            .map(|l| Block::new(l.clone()))
            .collect::<Result<Vec<_>>>()?;
        SuperComposition::new(blocks)
    }
}

impl fmt::Display for SuperComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

fn parse_composition(s: &str, start: usize) -> Result<(SuperComposition, usize)> {
    let bytes = s.as_bytes();
    let mut pos = start;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let expect = |pos: &mut usize, c: u8, what: &str| -> Result<()> {
        if *pos < bytes.len() && bytes[*pos] == c {
            *pos += 1;
            Ok(())
        } else {
            Err(Error::Parse {
                pos: *pos,
                expected: what.into(),
            })
        }
    };
    skip_ws(&mut pos);
    expect(&mut pos, b'(', "'('")?;
    let mut blocks = Vec::new();
    skip_ws(&mut pos);
    if pos < bytes.len() && bytes[pos] == b')' {
        pos += 1;
        return Ok((SuperComposition::new(blocks)?, pos));
    }
    loop {
        skip_ws(&mut pos);
        expect(&mut pos, b'{', "'{'")?;
        let mut elems = Vec::new();
        loop {
            skip_ws(&mut pos);
            let num_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == num_start {
                return Err(Error::Parse {
                    pos,
                    expected: "digit".into(),
                });
            }
            elems.push(s[num_start..pos].parse::<u32>().unwrap());
            skip_ws(&mut pos);
            if pos < bytes.len() && bytes[pos] == b',' {
                pos += 1;
                continue;
            }
            expect(&mut pos, b'}', "'}' or ','")?;
            break;
        }
        blocks.push(Block::new(elems)?);
        skip_ws(&mut pos);
        if pos < bytes.len() && bytes[pos] == b',' {
            pos += 1;
            continue;
        }
        expect(&mut pos, b')', "')' or ','")?;
        break;
    }
    Ok((SuperComposition::new(blocks)?, pos))
}

// ---------------------------------------------------------------------------
// Set superpartitions
// ---------------------------------------------------------------------------

/// A canonical partial set supercomposition: all blocks distinct, fermionic
/// blocks sorted by `min(B\{0})` (so `{0}` first when present).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetSuperpartition(SuperComposition);

impl SetSuperpartition {
    pub fn new(comp: SuperComposition) -> Result<Self> {
        let fermi = comp.fermionic_blocks();
        if fermi.iter().filter(|b| b.elems == [0]).count() > 1 {
            return Err(Error::Invalid("more than one {0} block".into()));
        }
        for w in fermi.windows(2) {
            if w[0].min_positive() >= w[1].min_positive() {
                return Err(Error::Invalid(format!(
                    "fermionic blocks out of canonical order in {comp}"
                )));
            }
        }
        Ok(SetSuperpartition(comp))
    }

    pub fn parse(s: &str) -> Result<Self> {
        SetSuperpartition::new(SuperComposition::parse(s)?)
    }

    pub fn as_comp(&self) -> &SuperComposition {
        &self.0
    }

    pub fn into_comp(self) -> SuperComposition {
        self.0
    }

    pub fn blocks(&self) -> &[Block] {
        self.0.blocks()
    }

    pub fn degree(&self) -> u32 {
        self.0.degree()
    }

    pub fn df(&self) -> usize {
        self.0.df()
    }

    /// The type `Λ(I)`: defined when the fermionic blocks have pairwise
    /// distinct sizes.
    pub fn lambda(&self) -> Option<Superpartition> {
        let sizes: Vec<u32> = self
            .0
            .fermionic_blocks()
            .iter()
            .map(|b| (b.len() - 1) as u32)
            .collect();
        let mut sorted = sizes.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        let mut sym: Vec<u32> = self
            .0
            .nonfermionic_blocks()
            .iter()
            .map(|b| b.len() as u32)
            .collect();
        sym.sort_unstable_by(|a, b| b.cmp(a));
        Some(Superpartition::new(sorted, sym).unwrap())
    }

    /// `ε(I)`: minimal number of transpositions sorting the fermionic size
    /// word into `Λ(I)^a`. Defined exactly when `Λ(I)` is.
    pub fn epsilon(&self) -> Option<usize> {
        let sizes: Vec<u32> = self
            .0
            .fermionic_blocks()
            .iter()
            .map(|b| (b.len() - 1) as u32)
            .collect();
        let mut sorted = sizes.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        // permutation sending position i to the rank of sizes[i]; the minimal
        // number of transpositions is m minus the number of cycles
        let m = sizes.len();
        let perm: Vec<usize> = sizes
            .iter()
            .map(|s| sorted.iter().position(|t| t == s).unwrap())
            .collect();
        let mut seen = vec![false; m];
        let mut cycles = 0;
        for i in 0..m {
            if !seen[i] {
                cycles += 1;
                let mut j = i;
                while !seen[j] {
                    seen[j] = true;
                    j = perm[j];
                }
            }
        }
        Some(m - cycles)
    }
}

impl fmt::Display for SetSuperpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// All set partitions of `[n]` in restricted-growth-string order, as plain
/// block lists (blocks sorted by minimum).
pub fn set_partitions(n: u32) -> Vec<Vec<Vec<u32>>> {
    let n = n as usize;
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(rgs: &mut Vec<usize>, i: usize, max: usize, n: usize, out: &mut Vec<Vec<Vec<u32>>>) {
        if i == n {
            let k = max;
            let mut blocks = vec![Vec::new(); k];
            for (e, &b) in rgs.iter().enumerate() {
                blocks[b].push((e + 1) as u32);
            }
            out.push(blocks);
            return;
        }
        for b in 0..=max {
            rgs[i] = b;
            rec(rgs, i + 1, max.max(b + 1), n, out);
        }
    }
    if n == 0 {
        out.push(Vec::new());
    } else {
        rec(&mut rgs, 0, 0, n, &mut out);
    }
    out
}

/// All set superpartitions of bidegree `(n, m)`, generated by optionally
/// inserting 0 into blocks of each set partition of `[n]` (lexicographic
/// over insertion masks) and optionally prepending `{0}`.
pub fn set_superpartitions(n: u32, m: usize) -> Vec<SetSuperpartition> {
    let mut out = Vec::new();
    for partition in set_partitions(n) {
        let k = partition.len();
        for mask in 0u64..(1u64 << k) {
            let count = mask.count_ones() as usize;
            for prepend in [false, true] {
                let fermi = count + prepend as usize;
                if fermi != m {
                    continue;
                }
                let mut blocks = Vec::new();
                if prepend {
                    blocks.push(Block::of(&[0]));
                }
                for (i, part) in partition.iter().enumerate() {
                    let mut elems = part.clone();
                    if mask & (1 << i) != 0 {
                        elems.push(0);
                    }
                    blocks.push(Block::new(elems).unwrap());
                }
                let comp = SuperComposition::new(blocks).unwrap();
                let (sp, _) = comp.bar();
                out.push(sp);
            }
        }
    }
    out
}

/// All partial set supercompositions of bidegree `(n, m)`, via the inverse of
/// the standardization map: set partitions of `[n+m]` with the elements of
/// `[m]` in distinct blocks.
pub fn super_compositions(n: u32, m: usize) -> Vec<SuperComposition> {
    let mut out = Vec::new();
    'outer: for partition in set_partitions(n + m as u32) {
        // blocks indexed by which small element 1..m they contain
        let mut fermi: Vec<Option<Vec<u32>>> = vec![None; m];
        let mut plain: Vec<Vec<u32>> = Vec::new();
        for part in &partition {
            let smalls: Vec<u32> = part.iter().copied().filter(|&e| e <= m as u32).collect();
            match smalls.len() {
                0 => plain.push(part.clone()),
                1 => fermi[(smalls[0] - 1) as usize] = Some(part.clone()),
                _ => continue 'outer,
            }
        }
        let unshift = |part: &[u32]| -> Vec<u32> {
            part.iter()
                .map(|&e| if e <= m as u32 { 0 } else { e - m as u32 })
                .collect()
        };
        let mut blocks: Vec<Block> = fermi
            .into_iter()
            .map(|p| Block::new(unshift(&p.unwrap())).unwrap())
            .collect();
        blocks.extend(plain.iter().map(|p| Block::new(unshift(p)).unwrap()));
        out.push(SuperComposition::new(blocks).unwrap());
    }
    out
}

// ---------------------------------------------------------------------------
// Orders, meet, Möbius
// ---------------------------------------------------------------------------

/// `K ⊑ L`: the ith fermionic block of `L` is the ith fermionic block of `K`
/// joined with some nonfermionic blocks of `K`, and each nonfermionic block
/// of `L` is a union of nonfermionic blocks of `K`.
pub fn is_strongly_coarser(k: &SuperComposition, l: &SuperComposition) -> bool {
    if k.degree() != l.degree() || k.df() != l.df() {
        return false;
    }
    // map each element to its (nonfermionic-)block in K; fermionic positives
    // tracked separately
    for (ki, li) in k.fermionic_blocks().iter().zip(l.fermionic_blocks()) {
        if !ki.elems().iter().all(|&e| li.contains(e)) {
            return false;
        }
    }
    // every element of L_i \ K_i (i fermionic) and of each nonfermionic L
    // block must be covered by whole nonfermionic K blocks lying inside that
    // L block
    for kb in k.nonfermionic_blocks() {
        let e = kb.elems()[0];
        // find the L block containing e
        let lb = match l.blocks().iter().find(|b| b.contains(e)) {
            Some(b) => b,
            None => return false,
        };
        if !kb.elems().iter().all(|&x| lb.contains(x)) {
            return false;
        }
        // if lb is fermionic, it must be the block paired with a fermionic
        // K block whose positive part does not claim e; that is automatic
        // since fermionic positives of K sit inside the paired L block and
        // blocks of L are disjoint on positives.
    }
    // finally, a fermionic K positive must not leak into a *different*
    // fermionic L block: already enforced by the zip above plus disjointness.
    // Check that nonfermionic L blocks contain no fermionic K positives.
    for lb in l.nonfermionic_blocks() {
        for (i, ki) in k.fermionic_blocks().iter().enumerate() {
            let _ = i;
            if ki.positive().iter().any(|&e| lb.contains(e)) {
                return false;
            }
        }
    }
    true
}

/// `I ⪯ J`: every block of `J` is an ⊕-combination of blocks of `I`, each
/// combination using at most one fermionic block, with every block of `I`
/// used exactly once.
pub fn is_coarser(i: &SuperComposition, j: &SuperComposition) -> bool {
    if i.degree() != j.degree() || i.df() != j.df() {
        return false;
    }
    let mut fermi_used = vec![false; j.len()]; // J block has absorbed a fermionic I block
    let mut zero_blocks = 0usize;
    for ib in i.blocks() {
        if ib.elems() == [0] {
            zero_blocks += 1;
            continue;
        }
        let e = ib.positive()[0];
        let pos = match j.blocks().iter().position(|b| b.contains(e)) {
            Some(p) => p,
            None => return false,
        };
        let jb = &j.blocks()[pos];
        if !ib.positive().iter().all(|&x| jb.contains(x)) {
            return false;
        }
        if ib.is_fermionic() {
            if !jb.is_fermionic() || fermi_used[pos] {
                return false;
            }
            fermi_used[pos] = true;
        }
    }
    let unfilled = j
        .blocks()
        .iter()
        .enumerate()
        .filter(|(p, b)| b.is_fermionic() && !fermi_used[*p])
        .count();
    unfilled == zero_blocks
}

/// Meet of two families of disjoint positive-element sets (common
/// refinement by pairwise intersection), blocks sorted by minimum.
fn partition_meet(a: &[Block], b: &[Block]) -> Vec<Block> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            let common: Vec<u32> = x.elems().iter().copied().filter(|e| y.contains(*e)).collect();
            if !common.is_empty() {
                out.push(Block::new(common).unwrap());
            }
        }
    }
    out.sort_by_key(|b| b.elems()[0]);
    out
}

/// `K ⊓ L`, the ⊑-infimum: intersect fermionic blocks pairwise, then take
/// the common refinement of the remaining positive elements.
pub fn meet(k: &SuperComposition, l: &SuperComposition) -> Result<SuperComposition> {
    if k.degree() != l.degree() || k.df() != l.df() {
        return Err(Error::BidegreeMismatch(
            k.degree(),
            k.df(),
            l.degree(),
            l.df(),
        ));
    }
    let mut blocks: Vec<Block> = Vec::new();
    let mut absorbed: BTreeSet<u32> = BTreeSet::new();
    for (ki, li) in k.fermionic_blocks().iter().zip(l.fermionic_blocks()) {
        let common: Vec<u32> = ki.elems().iter().copied().filter(|e| li.contains(*e)).collect();
        debug_assert!(common.contains(&0));
        for &e in &common {
            if e > 0 {
                absorbed.insert(e);
            }
        }
        blocks.push(Block::new(common).unwrap());
    }
    let ku: Vec<Block> = k
        .underlying()
        .iter()
        .filter_map(|p| {
            let kept: Vec<u32> = p.iter().copied().filter(|e| !absorbed.contains(e)).collect();
            (!kept.is_empty()).then(|| Block::new(kept).unwrap())
        })
        .collect();
    let lu: Vec<Block> = l
        .underlying()
        .iter()
        .filter_map(|p| {
            let kept: Vec<u32> = p.iter().copied().filter(|e| !absorbed.contains(e)).collect();
            (!kept.is_empty()).then(|| Block::new(kept).unwrap())
        })
        .collect();
    blocks.extend(partition_meet(&ku, &lu));
    Ok(SuperComposition {
        blocks,
        degree: k.degree(),
        fermionic: k.df(),
    })
}

/// `I ∧_σ J = I ⊓ (σ ▷ J)` for set superpartitions of equal bidegree.
pub fn wedge_sigma(
    i: &SetSuperpartition,
    j: &SetSuperpartition,
    sigma: &[usize],
) -> SuperComposition {
    meet(i.as_comp(), &j.as_comp().permute_fermionic(sigma)).expect("equal bidegree")
}

/// `μ(0̂_{n,m}, K)` as the product over blocks of `(-1)^{|B|-1}(|B|-1)!`.
pub fn mobius_zero(k: &SuperComposition) -> BigInt {
    let mut acc = BigInt::from(1);
    for b in k.blocks() {
        let s = b.len() - 1;
        let mut f = BigInt::from(1);
        for t in 2..=s {
            f *= BigInt::from(t);
        }
        if s % 2 == 1 {
            f = -f;
        }
        acc *= f;
    }
    acc
}

/// The sign `(-1)^K = ∏ (-1)^{|B|-1}`.
pub fn comp_sign(k: &SuperComposition) -> i32 {
    let parity: usize = k.blocks().iter().map(|b| b.len() - 1).sum();
    if parity % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `K!`: product of the block-size factorials.
pub fn comp_factorial(k: &SuperComposition) -> BigInt {
    let mut acc = BigInt::from(1);
    for b in k.blocks() {
        for t in 2..=b.len() {
            acc *= BigInt::from(t);
        }
    }
    acc
}

/// `μ(K, L)` on `(sC_{n,m}, ⊑)` in closed form: each block of `L` splits
/// into some number `b` of blocks of `K`, contributing `(-1)^{b-1}(b-1)!`.
/// Returns 0 when `K ⋢ L`.
pub fn mobius(k: &SuperComposition, l: &SuperComposition) -> BigInt {
    if !is_strongly_coarser(k, l) {
        return BigInt::from(0);
    }
    let mut acc = BigInt::from(1);
    for (pos, lb) in l.blocks().iter().enumerate() {
        let mut parts = 0usize;
        if pos < l.df() {
            // the paired fermionic K block plus the nonfermionic K blocks
            // absorbed into lb
            parts += 1;
            let kf = &k.blocks()[pos];
            for kb in k.nonfermionic_blocks() {
                if lb.contains(kb.elems()[0]) && !kf.contains(kb.elems()[0]) {
                    parts += 1;
                }
            }
        } else {
            for kb in k.nonfermionic_blocks() {
                if lb.contains(kb.elems()[0]) {
                    parts += 1;
                }
            }
        }
        let mut f = BigInt::from(1);
        for t in 2..parts {
            f *= BigInt::from(t);
        }
        if (parts - 1) % 2 == 1 {
            f = -f;
        }
        acc *= f;
    }
    acc
}

/// For `I ⪯ J` with equal fermionic degree: the permutation σ with
/// `I_i ⊆ J_{σ(i)}` (0-based word) and its inversion count.
pub fn sigma_perm(i: &SetSuperpartition, j: &SetSuperpartition) -> Option<(Vec<usize>, usize)> {
    if !is_coarser(i.as_comp(), j.as_comp()) {
        return None;
    }
    let m = i.df();
    let mut perm = vec![usize::MAX; m];
    let mut used = vec![false; m];
    for (a, ib) in i.as_comp().fermionic_blocks().iter().enumerate() {
        if let Some(&e) = ib.positive().first() {
            let b = j
                .as_comp()
                .fermionic_blocks()
                .iter()
                .position(|jb| jb.contains(e))
                .unwrap();
            perm[a] = b;
            used[b] = true;
        }
    }
    // at most one {0} block in a set superpartition
    if let Some(slot) = perm.iter().position(|&p| p == usize::MAX) {
        let free = used.iter().position(|&u| !u).unwrap();
        perm[slot] = free;
    }
    let mut inv = 0;
    for a in 0..m {
        for b in a + 1..m {
            if perm[a] > perm[b] {
                inv += 1;
            }
        }
    }
    Some((perm, inv))
}

/// Inversions of a permutation word.
pub fn inversions(perm: &[usize]) -> usize {
    let mut inv = 0;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                inv += 1;
            }
        }
    }
    inv
}

/// All permutations of `0..m` as words, in lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    if m == 0 {
        return vec![Vec::new()];
    }
    (0..m).permutations(m).collect()
}

// ---------------------------------------------------------------------------
// Superpartitions
// ---------------------------------------------------------------------------

/// A superpartition `Λ = (Λ^a; Λ^s)`: a strictly decreasing list of distinct
/// nonnegative integers and a weakly decreasing list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Superpartition {
    antisym: Vec<u32>,
    sym: Vec<u32>,
}

impl Superpartition {
    pub fn new(antisym: Vec<u32>, sym: Vec<u32>) -> Result<Self> {
        if antisym.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Invalid(
                "fermionic components must be strictly decreasing".into(),
            ));
        }
        if sym.windows(2).any(|w| w[0] < w[1]) || sym.contains(&0) {
            return Err(Error::Invalid(
                "symmetric components must be weakly decreasing and positive".into(),
            ));
        }
        Ok(Superpartition { antisym, sym })
    }

    /// Sort an arbitrary pair of component lists into a superpartition,
    /// reporting the parity-relevant minimal transposition count for the
    /// fermionic side. Returns `None` when fermionic components repeat.
    pub fn sort(antisym: &[u32], sym: &[u32]) -> Option<(Self, usize)> {
        let mut a = antisym.to_vec();
        a.sort_unstable_by(|x, y| y.cmp(x));
        if a.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        let m = antisym.len();
        let perm: Vec<usize> = antisym
            .iter()
            .map(|s| a.iter().position(|t| t == s).unwrap())
            .collect();
        let mut seen = vec![false; m];
        let mut cycles = 0;
        for i in 0..m {
            if !seen[i] {
                cycles += 1;
                let mut j = i;
                while !seen[j] {
                    seen[j] = true;
                    j = perm[j];
                }
            }
        }
        let mut s: Vec<u32> = sym.iter().copied().filter(|&x| x > 0).collect();
        s.sort_unstable_by(|x, y| y.cmp(x));
        Some((Superpartition { antisym: a, sym: s }, m - cycles))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse {
                pos: 0,
                expected: "'(' ... ')'".into(),
            })?;
        let (a, b) = inner.split_once(';').ok_or_else(|| Error::Parse {
            pos: 1,
            expected: "';'".into(),
        })?;
        let parse_side = |side: &str| -> Result<Vec<u32>> {
            let side = side.trim();
            if side.is_empty() {
                return Ok(Vec::new());
            }
            side.split(',')
                .map(|t| {
                    t.trim().parse::<u32>().map_err(|_| Error::Parse {
                        pos: 0,
                        expected: "integer".into(),
                    })
                })
                .collect()
        };
        Superpartition::new(parse_side(a)?, parse_side(b)?)
    }

    pub fn antisym(&self) -> &[u32] {
        &self.antisym
    }

    pub fn sym(&self) -> &[u32] {
        &self.sym
    }

    pub fn degree(&self) -> u32 {
        self.antisym.iter().sum::<u32>() + self.sym.iter().sum::<u32>()
    }

    pub fn df(&self) -> usize {
        self.antisym.len()
    }

    pub fn len(&self) -> usize {
        self.antisym.len() + self.sym.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `Λ⁺`: all components sorted decreasingly (zeros dropped, as a
    /// partition shape).
    pub fn lambda_plus(&self) -> Vec<u32> {
        let mut all: Vec<u32> = self
            .antisym
            .iter()
            .chain(self.sym.iter())
            .copied()
            .filter(|&x| x > 0)
            .collect();
        all.sort_unstable_by(|x, y| y.cmp(x));
        all
    }

    /// `Λ^⊕ = sort(Λ_1+1, …, Λ_m+1, Λ_{m+1}, …)`.
    pub fn lambda_oplus(&self) -> Vec<u32> {
        let mut all: Vec<u32> = self
            .antisym
            .iter()
            .map(|&x| x + 1)
            .chain(self.sym.iter().copied())
            .collect();
        all.sort_unstable_by(|x, y| y.cmp(x));
        all
    }

    /// `Λ! = ∏ Λ_i!` over all components.
    pub fn factorial(&self) -> BigInt {
        let mut acc = BigInt::from(1);
        for &x in self.antisym.iter().chain(self.sym.iter()) {
            for t in 2..=x {
                acc *= BigInt::from(t);
            }
        }
        acc
    }

    /// `(Λ^s)^!`: product of the multiplicity factorials of the symmetric
    /// part.
    pub fn sym_mult_factorial(&self) -> BigInt {
        mult_factorial(&self.sym)
    }

    /// `(Λ⁺)^!` with `Λ⁺` including zero components from the fermionic side.
    pub fn plus_mult_factorial(&self) -> BigInt {
        let mut all: Vec<u32> = self.antisym.iter().chain(self.sym.iter()).copied().collect();
        all.sort_unstable_by(|x, y| y.cmp(x));
        mult_factorial(&all)
    }

    /// `binom(n, Λ) = n!/(Λ!·(Λ^s)^!)`: the number of set superpartitions of
    /// type `Λ`.
    pub fn super_binomial(&self) -> BigInt {
        let n = self.degree() as usize;
        let mut num = BigInt::from(1);
        for t in 2..=n {
            num *= BigInt::from(t);
        }
        let den = self.factorial() * self.sym_mult_factorial();
        debug_assert_eq!(&num % &den, BigInt::from(0));
        num / den
    }

    /// All superpartitions of bidegree `(n, m)`.
    pub fn enumerate(n: u32, m: usize) -> Vec<Superpartition> {
        let mut out = Vec::new();
        let mut antisym = Vec::new();
        gen_antisym(n, m, u32::MAX, &mut antisym, &mut out);
        out.sort();
        out
    }
}

fn gen_antisym(
    remaining: u32,
    slots: usize,
    bound: u32,
    acc: &mut Vec<u32>,
    out: &mut Vec<Superpartition>,
) {
    if slots == 0 {
        for sym in partitions_of(remaining) {
            out.push(Superpartition {
                antisym: acc.clone(),
                sym,
            });
        }
        return;
    }
    // strictly decreasing, so the next entry is below `bound`; the remaining
    // slots need at least 0+1+..+(slots-1)
    let floor: u32 = (0..slots as u32 - 1).sum();
    let hi = bound.min(remaining.saturating_sub(floor).min(remaining));
    if bound == 0 {
        return;
    }
    for v in (0..=hi.min(bound - 1)).rev() {
        if v + floor > remaining {
            continue;
        }
        acc.push(v);
        gen_antisym(remaining - v, slots - 1, v, acc, out);
        acc.pop();
    }
}

/// All integer partitions of `n` as weakly decreasing lists.
pub fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for v in (1..=max.min(n)).rev() {
            acc.push(v);
            rec(n - v, v, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Product of multiplicity factorials of a sorted list.
fn mult_factorial(sorted: &[u32]) -> BigInt {
    let mut acc = BigInt::from(1);
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        for t in 2..=(j - i) {
            acc *= BigInt::from(t);
        }
        i = j;
    }
    acc
}

impl fmt::Display for Superpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.antisym.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ";")?;
        for (i, x) in self.sym.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(s: &str) -> SuperComposition {
        SuperComposition::parse(s).unwrap()
    }

    fn sp(s: &str) -> SetSuperpartition {
        SetSuperpartition::parse(s).unwrap()
    }

    /// Independent recursive Möbius function of (sC_{n,m}, ⊑), from the
    /// defining recurrence over the interval [K, L].
    fn mobius_recursive(k: &SuperComposition, l: &SuperComposition) -> BigInt {
        if !is_strongly_coarser(k, l) {
            return BigInt::from(0);
        }
        if k == l {
            return BigInt::from(1);
        }
        let mut acc = BigInt::from(0);
        for m in super_compositions(k.degree(), k.df()) {
            if m != *l && is_strongly_coarser(k, &m) && is_strongly_coarser(&m, l) {
                acc += mobius_recursive(k, &m);
            }
        }
        -acc
    }

    /// Refinement order on plain set partitions given as sorted block lists.
    fn refines(fine: &[Vec<u32>], coarse: &[Vec<u32>]) -> bool {
        fine.iter().all(|fb| {
            coarse
                .iter()
                .any(|cb| fb.iter().all(|e| cb.contains(e)))
        })
    }

    #[test]
    fn block_basics() {
        let b = Block::of(&[2, 0, 5]);
        assert_eq!(b.elems(), &[0, 2, 5]);
        assert!(b.is_fermionic());
        assert_eq!(b.positive(), &[2, 5]);
        assert_eq!(b.min_positive(), 2);
        assert_eq!(Block::of(&[0]).min_positive(), 0);
        assert!(Block::new(vec![]).is_err());
        assert!(Block::of(&[0, 1]).oplus(&Block::of(&[0, 2])).is_none());
        assert_eq!(
            Block::of(&[0, 1]).oplus(&Block::of(&[2])).unwrap(),
            Block::of(&[0, 1, 2])
        );
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["({0},{0,2},{1,3})", "({0,1},{0,2})", "({1,2})", "()"] {
            let k = sc(s);
            assert_eq!(k.to_string(), s);
        }
        assert_eq!(sc(" ( {1 , 3} , {2} ) ").to_string(), "({1,3},{2})");
        assert!(SuperComposition::parse("({1},{1})").is_err());
        assert!(SuperComposition::parse("({1},{3})").is_err());
        assert!(SuperComposition::parse("({1}").is_err());
        // fermionic order is preserved, nonfermionic blocks are sorted
        assert_eq!(sc("({0,3},{0,1},{2})").to_string(), "({0,3},{0,1},{2})");
        assert_eq!(sc("({2},{0,3},{1})").to_string(), "({0,3},{1},{2})");
    }

    #[test]
    fn bidegree_and_triviality() {
        let k = sc("({0},{0,2},{1,3})");
        assert_eq!((k.degree(), k.df()), (3, 2));
        assert!(!k.is_trivial());
        assert!(sc("({0},{0},{1})").is_trivial());
        assert!(!sc("({0},{1})").is_trivial());
        assert_eq!(
            SuperComposition::zero_hat(2, 2).to_string(),
            "({0},{0},{1},{2})"
        );
    }

    #[test]
    fn set_superpartition_validation() {
        assert!(SetSuperpartition::parse("({0},{0,2},{1,3})").is_ok());
        // fermionic blocks out of canonical order
        assert!(SetSuperpartition::parse("({0,2},{0,1})").is_err());
        assert!(SetSuperpartition::parse("({0,2},{0},{1})").is_err());
        assert!(SetSuperpartition::parse("({0},{0},{1})").is_err());
    }

    #[test]
    fn bell_numbers() {
        let bell = [1usize, 1, 2, 5, 15, 52];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(set_partitions(n as u32).len(), b);
        }
    }

    #[test]
    fn set_superpartition_counts() {
        // degree 2: 2 + 5 + 4 + 1 = 12 in fermionic degrees 0..=3
        assert_eq!(set_superpartitions(2, 0).len(), 2);
        assert_eq!(set_superpartitions(2, 1).len(), 5);
        assert_eq!(set_superpartitions(2, 2).len(), 4);
        assert_eq!(set_superpartitions(2, 3).len(), 1);
        assert_eq!(set_superpartitions(2, 4).len(), 0);
        assert_eq!(set_superpartitions(0, 1).len(), 1);
        assert_eq!(set_superpartitions(0, 0).len(), 1);
        for m in 0..4 {
            for i in set_superpartitions(3, m) {
                assert_eq!((i.degree(), i.df()), (3, m));
            }
        }
    }

    #[test]
    fn super_composition_counts() {
        assert_eq!(super_compositions(2, 2).len(), 10);
        assert_eq!(super_compositions(1, 2).len(), 3);
        for n in 0..5 {
            assert_eq!(
                super_compositions(n, 0).len(),
                set_partitions(n).len(),
                "sC_(n,0) is the partition lattice"
            );
        }
        // psc = set superpartitions with fermionic orderings and repeated {0}
        // blocks; every enumerated element round-trips through bar
        for k in super_compositions(2, 2) {
            let (b, sign) = k.bar();
            assert!(sign == 1 || sign == -1);
            assert_eq!(b.degree(), 2);
        }
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(
            sc("({0},{0,2},{1,3})").standardize().to_string(),
            "({1},{2,4},{3,5})"
        );
        assert_eq!(sc("({0,1})").standardize().to_string(), "({1,2})");
        // standardization is injective on sC_{2,2}
        let all = super_compositions(2, 2);
        let images: BTreeSet<String> =
            all.iter().map(|k| k.standardize().to_string()).collect();
        assert_eq!(images.len(), all.len());
    }

    #[test]
    fn bar_signs() {
        let (b, sign) = sc("({0,2},{0},{1})").bar();
        assert_eq!(b.to_string(), "({0},{0,2},{1})");
        assert_eq!(sign, -1);
        let (b, sign) = sc("({0,2},{0,3},{0,1})").bar();
        assert_eq!(b.to_string(), "({0,1},{0,2},{0,3})");
        assert_eq!(sign, 1); // 2 inversions
        // repeated {0} blocks collapse
        let (b, _) = sc("({0},{0},{1})").bar();
        assert_eq!(b.to_string(), "({0},{1})");
    }

    #[test]
    fn shift_restrict_over() {
        let k = sc("({0,2},{1})");
        let shifted = k.shift(3);
        assert_eq!(shifted[0], Block::of(&[0, 5]));
        assert_eq!(shifted[1], Block::of(&[4]));
        let a: BTreeSet<u32> = [2].into_iter().collect();
        let r = k.restrict(&a);
        assert_eq!(r, vec![Block::of(&[0]), Block::of(&[1])]);
        let l = sc("({0,1})");
        assert_eq!(k.over(&l).to_string(), "({0,2},{0,3},{1})");
        assert_eq!(l.over(&k).to_string(), "({0,1},{0,3},{2})");
    }

    #[test]
    fn strong_coarsening_matches_standardized_refinement() {
        for (n, m) in [(3, 0), (2, 1), (3, 1), (2, 2)] {
            let all = super_compositions(n, m);
            for k in &all {
                for l in &all {
                    let lhs = is_strongly_coarser(k, l);
                    let rhs = refines(
                        &k.standardize().underlying(),
                        &l.standardize().underlying(),
                    );
                    assert_eq!(lhs, rhs, "K={k} L={l}");
                }
            }
        }
    }

    #[test]
    fn coarsening_via_strong_coarsening() {
        // I ⪯ J iff some fermionic reordering of I is strongly finer than J
        for (n, m) in [(2, 1), (3, 1), (2, 2), (1, 3)] {
            let all = super_compositions(n, m);
            for i in &all {
                for j in &all {
                    let brute = permutations(m)
                        .iter()
                        .any(|s| is_strongly_coarser(&i.permute_fermionic(s), j));
                    assert_eq!(is_coarser(i, j), brute, "I={i} J={j}");
                }
            }
        }
    }

    #[test]
    fn meet_is_infimum() {
        for (n, m) in [(3, 0), (2, 1), (3, 1), (2, 2)] {
            let all = super_compositions(n, m);
            for k in &all {
                for l in &all {
                    let g = meet(k, l).unwrap();
                    assert!(is_strongly_coarser(&g, k));
                    assert!(is_strongly_coarser(&g, l));
                    for c in &all {
                        if is_strongly_coarser(c, k) && is_strongly_coarser(c, l) {
                            assert!(is_strongly_coarser(c, &g), "C={c} K={k} L={l}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn meet_example() {
        let k = sc("({0,1},{0,2},{3,4})");
        let l = sc("({0,1,3},{0,4},{2})");
        assert_eq!(meet(&k, &l).unwrap().to_string(), "({0,1},{0},{2},{3},{4})");
    }

    #[test]
    fn mobius_closed_form_matches_recursive() {
        for (n, m) in [(3, 0), (2, 1), (3, 1), (2, 2)] {
            let all = super_compositions(n, m);
            for k in &all {
                for l in &all {
                    assert_eq!(mobius(k, l), mobius_recursive(k, l), "K={k} L={l}");
                }
            }
        }
    }

    #[test]
    fn mobius_zero_agrees_and_sums_to_factorial() {
        for (n, m) in [(3, 0), (3, 1), (2, 2)] {
            let zero = SuperComposition::zero_hat(n, m);
            let all = super_compositions(n, m);
            for l in &all {
                assert_eq!(mobius_zero(l), mobius(&zero, l));
                let total: BigInt = all
                    .iter()
                    .filter(|k| is_strongly_coarser(k, l))
                    .map(|k| {
                        let v = mobius_zero(k);
                        if v < BigInt::from(0) {
                            -v
                        } else {
                            v
                        }
                    })
                    .sum();
                assert_eq!(total, comp_factorial(l), "L={l}");
            }
        }
    }

    #[test]
    fn mobius_values() {
        assert_eq!(mobius_zero(&sc("({0,1},{0,2})")), BigInt::from(1));
        assert_eq!(mobius_zero(&sc("({1,2,3})")), BigInt::from(2));
        assert_eq!(mobius_zero(&sc("({0,1,2,3})")), BigInt::from(-6));
        assert_eq!(comp_sign(&sc("({0,1},{0,2})")), 1);
        assert_eq!(comp_sign(&sc("({0,1,2},{3})")), 1);
        assert_eq!(comp_sign(&sc("({1,2},{3})")), -1);
        assert_eq!(comp_factorial(&sc("({0,1,2},{3,4})")), BigInt::from(12));
    }

    #[test]
    fn sigma_perm_examples() {
        let i = sp("({0},{0,2},{1})");
        let j = sp("({0,1},{0,2})");
        // I_1={0} takes the free slot J_1; I_2={0,2} sits in J_2: identity
        let (perm, inv) = sigma_perm(&i, &j).unwrap();
        assert_eq!(perm, vec![0, 1]);
        assert_eq!(inv, 0);
        let i2 = sp("({0},{0,1},{2})");
        // now I_2={0,1} sits in J_1 and {0} takes slot J_2: a transposition
        let (perm, inv) = sigma_perm(&i2, &j).unwrap();
        assert_eq!(perm, vec![1, 0]);
        assert_eq!(inv, 1);
        assert!(sigma_perm(&sp("({0,1},{2})"), &sp("({0,2},{1})")).is_none());
        // consistency: I_a ⊆ J_{perm[a]} over an exhaustive range
        for (n, m) in [(2, 2), (3, 2)] {
            for i in set_superpartitions(n, m) {
                for j in set_superpartitions(n, m) {
                    if let Some((perm, _)) = sigma_perm(&i, &j) {
                        for (a, ib) in i.as_comp().fermionic_blocks().iter().enumerate() {
                            let jb = &j.as_comp().fermionic_blocks()[perm[a]];
                            assert!(ib.elems().iter().all(|&e| jb.contains(e)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lambda_and_epsilon() {
        let i = sp("({0,1},{0,2,3},{4})");
        assert_eq!(i.lambda().unwrap().to_string(), "(2,1;1)");
        assert_eq!(i.epsilon(), Some(1));
        let i = sp("({0,1},{0,2})");
        assert!(i.lambda().is_none());
        assert!(i.epsilon().is_none());
        let i = sp("({0},{0,1},{0,2,3})");
        assert_eq!(i.lambda().unwrap().to_string(), "(2,1,0;)");
        assert_eq!(i.epsilon(), Some(1)); // reversal of 3 = one 3-cycle? no: (0,1,2)->(2,1,0)
        let i = sp("({0,1,2},{3})");
        assert_eq!(i.lambda().unwrap().to_string(), "(2;1)");
        assert_eq!(i.epsilon(), Some(0));
    }

    #[test]
    fn superpartition_parse_display() {
        for s in ["(2,1;2,1,1)", "(;)", "(0;)", "(;3,1)", "(3,1,0;2,2)"] {
            assert_eq!(Superpartition::parse(s).unwrap().to_string(), s);
        }
        assert!(Superpartition::parse("(1,1;)").is_err());
        assert!(Superpartition::parse("(;1,2)").is_err());
        assert!(Superpartition::parse("(;0)").is_err());
        assert!(Superpartition::parse("2,1;1").is_err());
    }

    #[test]
    fn superpartition_shapes_and_factorials() {
        let l = Superpartition::parse("(2,1;2,1,1)").unwrap();
        assert_eq!((l.degree(), l.df(), l.len()), (7, 2, 5));
        assert_eq!(l.lambda_plus(), vec![2, 2, 1, 1, 1]);
        assert_eq!(l.lambda_oplus(), vec![3, 2, 2, 1, 1]);
        assert_eq!(l.factorial(), BigInt::from(4));
        assert_eq!(l.sym_mult_factorial(), BigInt::from(2));
        assert_eq!(l.plus_mult_factorial(), BigInt::from(12));
        assert_eq!(l.super_binomial(), BigInt::from(630));
        let e = Superpartition::parse("(;)").unwrap();
        assert_eq!(e.super_binomial(), BigInt::from(1));
    }

    #[test]
    fn superpartition_sort() {
        let (l, eps) = Superpartition::sort(&[1, 2], &[1, 3]).unwrap();
        assert_eq!(l.to_string(), "(2,1;3,1)");
        assert_eq!(eps, 1);
        assert!(Superpartition::sort(&[1, 1], &[]).is_none());
        let (_, eps) = Superpartition::sort(&[0, 1, 2], &[]).unwrap();
        assert_eq!(eps, 1); // one transposition of the outer pair
    }

    #[test]
    fn superpartition_enumeration() {
        assert_eq!(Superpartition::enumerate(2, 1).len(), 4);
        assert_eq!(Superpartition::enumerate(2, 2).len(), 2);
        assert_eq!(
            Superpartition::enumerate(3, 0)
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>(),
            vec!["(;1,1,1)", "(;2,1)", "(;3)"]
        );
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partitions_of(0), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn super_binomial_counts_types() {
        for (n, m) in [(3, 1), (3, 2), (4, 1)] {
            let all = set_superpartitions(n, m);
            for lam in Superpartition::enumerate(n, m) {
                let count = all
                    .iter()
                    .filter(|i| i.lambda().as_ref() == Some(&lam))
                    .count();
                assert_eq!(BigInt::from(count), lam.super_binomial(), "Λ={lam}");
            }
        }
    }

    #[test]
    fn wedge_sigma_runs() {
        let i = sp("({0,1},{0,2})");
        let k = sp("({0,1},{0,2})");
        let w = wedge_sigma(&i, &k, &[1, 0]);
        assert_eq!(w.to_string(), "({0},{0},{1},{2})");
        let w = wedge_sigma(&i, &k, &[0, 1]);
        assert_eq!(w.to_string(), "({0,1},{0,2})");
    }
}
