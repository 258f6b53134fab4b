//! The band-generator Garside structure on the braid group: simple elements
//! are non-crossing partitions of the punctures arranged on a circle, and
//! the Garside element is the rotation δ = a_{m,m−1} ⋯ a_{2,1}.
//!
//! A block {i_1 < i_2 < ⋯ < i_k} stands for the polygonal braid rotating its
//! punctures one step counterclockwise, i.e. the product
//! a_{i_k,i_{k−1}} a_{i_{k−1},i_{k−2}} ⋯ a_{i_2,i_1}; disjoint polygons
//! commute. On permutations, a block is an increasing cycle, so a simple
//! element is stored as the permutation whose nontrivial cycles are the
//! blocks.

use super::{ConjStep, NormalForm, Structure};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::{ArtinWord, BandLetter, BandWord};
use std::fmt;

/// A simple element of the band structure: a non-crossing partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ncp {
    perm: Permutation,
}

impl Ncp {
    pub fn identity(m: usize) -> Self {
        Ncp {
            perm: Permutation::identity(m),
        }
    }

    /// The one-block partition {1..m}, i.e. δ.
    pub fn delta(m: usize) -> Self {
        let images: Vec<u32> = (0..m as u32).map(|i| (i + 1) % m as u32).collect();
        Ncp {
            perm: Permutation::from_raw(images),
        }
    }

    /// The band generator a_{ts}: the two-element block {s, t}.
    pub fn band_generator(m: usize, t: usize, s: usize) -> Self {
        debug_assert!(1 <= s && s < t && t <= m);
        Ncp {
            perm: Permutation::transposition(m, s, t),
        }
    }

    /// Build from explicit blocks (1-indexed; singletons may be omitted).
    pub fn from_blocks(m: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut sorted: Vec<Vec<usize>> = Vec::with_capacity(blocks.len());
        let mut seen = vec![false; m];
        for block in blocks {
            let mut b = block.clone();
            b.sort_unstable();
            b.dedup();
            if b.len() != block.len() {
                return Err(Error::InvalidPartition {
                    reason: "repeated index inside a block".to_string(),
                });
            }
            for &p in &b {
                if p < 1 || p > m {
                    return Err(Error::InvalidPartition {
                        reason: format!("index {p} out of range for {m} points"),
                    });
                }
                if seen[p - 1] {
                    return Err(Error::InvalidPartition {
                        reason: format!("index {p} appears in two blocks"),
                    });
                }
                seen[p - 1] = true;
            }
            if b.len() >= 2 {
                sorted.push(b);
            }
        }
        let ncp = Ncp {
            perm: Permutation::from_cycles(m, &sorted).expect("validated blocks"),
        };
        if !ncp.is_valid() {
            return Err(Error::InvalidPartition {
                reason: "blocks cross".to_string(),
            });
        }
        Ok(ncp)
    }

    pub fn points(&self) -> usize {
        self.perm.size()
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    pub fn is_delta(&self) -> bool {
        let m = self.perm.size();
        (0..m).all(|i| self.perm.images()[i] == ((i + 1) % m) as u32)
    }

    /// Nontrivial blocks in canonical order: sorted by minimum, elements
    /// ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.perm.cycles()
    }

    /// Block identifier (minimum member, 0-based) for every point.
    fn block_ids(&self) -> Vec<u32> {
        let m = self.perm.size();
        let mut ids: Vec<u32> = (0..m as u32).collect();
        let mut seen = vec![false; m];
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut cur = start;
            loop {
                seen[cur] = true;
                ids[cur] = start as u32;
                cur = self.perm.images()[cur] as usize;
                if cur == start {
                    break;
                }
            }
        }
        ids
    }

    /// Whether the stored permutation really is a non-crossing partition:
    /// every nontrivial cycle is increasing and the blocks are pairwise
    /// non-crossing.
    pub fn is_valid(&self) -> bool {
        let m = self.perm.size();
        for cycle in self.perm.cycles() {
            if cycle.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
        }
        // Non-crossing test: scan the circle once keeping a stack of open
        // blocks; a block must close before anything opened after it.
        let ids = self.block_ids();
        let mut last = vec![0usize; m];
        let mut size = vec![0usize; m];
        for (p, &id) in ids.iter().enumerate() {
            last[id as usize] = p;
            size[id as usize] += 1;
        }
        let mut stack: Vec<usize> = Vec::new();
        for (p, &id) in ids.iter().enumerate() {
            let b = id as usize;
            if size[b] < 2 {
                continue;
            }
            if b == p {
                stack.push(b);
            } else if stack.last() != Some(&b) {
                return false;
            }
            if last[b] == p {
                if stack.last() == Some(&b) {
                    stack.pop();
                } else {
                    return false;
                }
            }
        }
        true
    }

    /// Greatest lower bound in the non-crossing-partition lattice: the
    /// blockwise intersection (which is again non-crossing).
    pub fn meet(&self, other: &Ncp) -> Ncp {
        debug_assert_eq!(self.points(), other.points());
        let m = self.points();
        let a = self.block_ids();
        let b = other.block_ids();
        let mut pairs: Vec<(u64, u32)> = (0..m)
            .map(|i| (((a[i] as u64) << 32) | b[i] as u64, i as u32))
            .collect();
        pairs.sort_unstable();
        let mut images: Vec<u32> = (0..m as u32).collect();
        let mut start = 0;
        while start < m {
            let mut end = start + 1;
            while end < m && pairs[end].0 == pairs[start].0 {
                end += 1;
            }
            for w in start..end {
                let next = if w + 1 < end { w + 1 } else { start };
                images[pairs[w].1 as usize] = pairs[next].1;
            }
            start = end;
        }
        Ncp {
            perm: Permutation::from_raw(images),
        }
    }

    /// x⁻¹δ, the simple element completing x to δ on the right.
    pub fn right_complement(&self) -> Ncp {
        let m = self.points();
        let inv = self.perm.inverse();
        let mut images = vec![0u32; m];
        for (i, slot) in images.iter_mut().enumerate() {
            *slot = (inv.images()[i] + 1) % m as u32;
        }
        Ncp {
            perm: Permutation::from_raw(images),
        }
    }

    /// Letter length: each block of size d contributes d−1 band generators.
    pub fn letter_len(&self) -> usize {
        self.blocks().iter().map(|b| b.len() - 1).sum()
    }

    /// The canonical band word: per block the descending product
    /// a_{i_k,i_{k−1}} ⋯ a_{i_2,i_1}, blocks in canonical order.
    pub fn to_band_word(&self) -> BandWord {
        let mut w = BandWord::identity(self.points());
        for block in self.blocks() {
            for pair in block.windows(2).rev() {
                w.push(BandLetter {
                    t: pair[1],
                    s: pair[0],
                    positive: true,
                });
            }
        }
        w
    }
}

impl fmt::Display for Ncp {
    /// Canonical block text: `{1,2,3}{4,6}`; singletons are implicit.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in self.blocks() {
            write!(f, "{{")?;
            for (i, p) in block.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// The band structure on m punctures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Band {
    m: usize,
}

impl Band {
    pub fn new(m: usize) -> Self {
        Band { m }
    }

    pub fn points(&self) -> usize {
        self.m
    }
}

impl Structure for Band {
    type Simple = Ncp;

    fn points(&self) -> usize {
        self.m
    }

    fn delta_simple(&self) -> Ncp {
        Ncp::delta(self.m)
    }

    fn is_identity(&self, s: &Ncp) -> bool {
        s.is_identity()
    }

    fn is_delta(&self, s: &Ncp) -> bool {
        s.is_delta()
    }

    fn tau_pow(&self, s: &Ncp, k: i64) -> Ncp {
        // Conjugation by δ rotates the base points, increasing each index by
        // one, so τ^k shifts every block by k (mod m).
        let m = self.m;
        let shift = k.rem_euclid(m as i64) as usize;
        if shift == 0 {
            return s.clone();
        }
        let images = s.perm.images();
        let mut out = vec![0u32; m];
        for i in 0..m {
            out[(i + shift) % m] = (images[i] + shift as u32) % m as u32;
        }
        Ncp {
            perm: Permutation::from_raw(out),
        }
    }

    fn left_complement(&self, s: &Ncp) -> Ncp {
        // lc(x) = δx⁻¹, so π_lc(j) = π_x⁻¹(π_δ(j)).
        let m = self.m;
        let inv = s.perm.inverse();
        let mut out = vec![0u32; m];
        for (j, slot) in out.iter_mut().enumerate() {
            *slot = inv.images()[(j + 1) % m];
        }
        Ncp {
            perm: Permutation::from_raw(out),
        }
    }

    fn left_weight_pair(&self, x: &mut Ncp, y: &mut Ncp) -> bool {
        // The pair is left-weighted exactly when rc(x) ∧ y is trivial;
        // otherwise the whole meet transfers at once.
        let t = x.right_complement().meet(y);
        if t.is_identity() {
            return false;
        }
        x.perm = x.perm.then(&t.perm);
        y.perm = t.perm.inverse().then(&y.perm);
        debug_assert!(x.is_valid() && y.is_valid());
        true
    }

    fn pair_is_left_weighted(&self, x: &Ncp, y: &Ncp) -> bool {
        x.right_complement().meet(y).is_identity()
    }

    fn delta_letter_len(&self) -> usize {
        self.m - 1
    }

    fn simple_letter_len(&self, s: &Ncp) -> usize {
        s.letter_len()
    }

    fn delta_symbol(&self) -> char {
        'd'
    }

    fn render_factor(&self, s: &Ncp) -> String {
        s.to_string()
    }
}

/// Left normal form in the band structure.
pub type NormalFormB = NormalForm<Band>;

/// The single-block partition δ; errors below two points.
pub fn band_delta(m: usize) -> Result<Ncp> {
    if m < 2 {
        return Err(Error::TooFewStrands { got: m, min: 2 });
    }
    Ok(Ncp::delta(m))
}

/// Lattice meet with a point-count check.
pub fn ncp_meet(p: &Ncp, q: &Ncp) -> Result<Ncp> {
    if p.points() != q.points() {
        return Err(Error::StrandMismatch {
            left: p.points(),
            right: q.points(),
        });
    }
    Ok(p.meet(q))
}

/// Left normal form of the braid represented by a band word.
pub fn normal_form(w: &BandWord) -> NormalFormB {
    let g = Band::new(w.points());
    let mut nf = NormalForm::identity(g);
    for l in w.letters() {
        let atom = Ncp::band_generator(w.points(), l.t, l.s);
        if l.positive {
            nf.mul_simple(atom);
        } else {
            nf.mul_delta_pow(-1);
            nf.mul_simple(g.left_complement(&atom));
        }
    }
    nf
}

/// Expand a normal form back into a band word (canonical spelling).
pub fn to_word(nf: &NormalFormB) -> BandWord {
    let m = nf.structure().points();
    let delta_word = Ncp::delta(m).to_band_word();
    let mut out = BandWord::identity(m);
    let p = nf.inf();
    for _ in 0..p.unsigned_abs() {
        let piece = if p >= 0 {
            delta_word.clone()
        } else {
            delta_word.inverse()
        };
        out = out.concat(&piece).expect("same point count");
    }
    for f in nf.factors() {
        out = out.concat(&f.to_band_word()).expect("same point count");
    }
    out
}

fn step_to_band_word(m: usize, step: &ConjStep<Ncp>) -> BandWord {
    match step {
        ConjStep::Identity => BandWord::identity(m),
        ConjStep::Simple(s) => s.to_band_word(),
        ConjStep::InverseSimple(s) => s.to_band_word().inverse(),
    }
}

/// Cycling in the band structure, with the conjugating band word.
pub fn cycling(nf: &NormalFormB) -> (NormalFormB, BandWord) {
    let m = nf.structure().points();
    let (out, step) = nf.cycling();
    (out, step_to_band_word(m, &step))
}

/// Decycling in the band structure, with the conjugating band word.
pub fn decycling(nf: &NormalFormB) -> (NormalFormB, BandWord) {
    let m = nf.structure().points();
    let (out, step) = nf.decycling();
    (out, step_to_band_word(m, &step))
}

/// The isomorphism onto the Artin presentation, letter by letter:
/// a_{ts} ↦ (σ_{t−1} ⋯ σ_{s+1}) σ_s (σ_{s+1}⁻¹ ⋯ σ_{t−1}⁻¹).
pub fn phi_translate(w: &BandWord) -> ArtinWord {
    let n = w.points();
    let mut out = ArtinWord::identity(n);
    for l in w.letters() {
        let image = phi_letter(n, l.t, l.s);
        let piece = if l.positive { image } else { image.inverse() };
        out = out.concat(&piece).expect("same strand count");
    }
    out
}

pub(crate) fn phi_letter(n: usize, t: usize, s: usize) -> ArtinWord {
    let mut w = ArtinWord::identity(n);
    for i in (s + 1..t).rev() {
        w.push(i as i32);
    }
    w.push(s as i32);
    for i in s + 1..t {
        w.push(-(i as i32));
    }
    w
}

/// The inverse isomorphism, σ_i ↦ a_{i+1,i}.
pub fn phi_inverse(w: &ArtinWord) -> BandWord {
    let mut out = BandWord::identity(w.strands());
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize;
        out.push(BandLetter {
            t: i + 1,
            s: i,
            positive: l > 0,
        });
    }
    out
}
