//! The translation network behind the ε-power conjugacy solver.
//!
//! Three isomorphic groups are in play: the subgroup P_{n,2} of braids
//! fixing puncture 2, the Artin-Tits group of type B with n−1 generators,
//! and the symmetric braids on 2n−2 punctures (the centralizer of the half
//! rotation in the band-generator group, i.e. braids invariant under
//! rotation by 180 degrees). This module implements the generator maps in
//! both directions, the rewriting of a word in the ambient Artin generators
//! into band generators via coset-representative tracking, the splitting of
//! a symmetric braid into δ-power and polygonal pieces, and the translation
//! of those pieces back into Artin generators.

use crate::error::{Error, Result};
use crate::garside::band::{self, Band, NormalFormB};
use crate::garside::classical::{normal_form, NormalFormA};
use crate::garside::Structure;
use crate::word::{ArtinWord, BandLetter, BandWord, TypeBWord};
use std::fmt;

/// Image of the type-B generators in the braid group on `rank + 1` strands:
/// s_1 ↦ σ1², s_2 ↦ σ1 σ2 σ1⁻¹, s_i ↦ σ_i for i > 2. The image fixes
/// puncture 2.
pub fn rho_apply(w: &TypeBWord) -> ArtinWord {
    let n = w.rank() + 1;
    let mut out = ArtinWord::identity(n);
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize;
        let image = match i {
            1 => ArtinWord::new(n, vec![1, 1]).expect("in range"),
            2 => ArtinWord::new(n, vec![1, 2, -1]).expect("in range"),
            _ => ArtinWord::new(n, vec![i as i32]).expect("in range"),
        };
        let piece = if l > 0 { image } else { image.inverse() };
        out = out.concat(&piece).expect("same strand count");
    }
    out
}

/// Image of the type-B generators among symmetric braids on 2·rank
/// punctures: s_1 ↦ a_{n,1}, s_i ↦ a_{i,i−1} a_{i+n−1,i+n−2} for i > 1.
pub fn theta_prime_apply(w: &TypeBWord) -> BandWord {
    let n = w.rank() + 1;
    let m = 2 * n - 2;
    let mut out = BandWord::identity(m);
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize;
        let mut letters = Vec::new();
        if i == 1 {
            letters.push(BandLetter {
                t: n,
                s: 1,
                positive: true,
            });
        } else {
            letters.push(BandLetter {
                t: i,
                s: i - 1,
                positive: true,
            });
            letters.push(BandLetter {
                t: i + n - 1,
                s: i + n - 2,
                positive: true,
            });
        }
        if l < 0 {
            letters.reverse();
            for letter in letters.iter_mut() {
                *letter = letter.inverse();
            }
        }
        for letter in letters {
            out.push(letter);
        }
    }
    out
}

/// Coset bookkeeping for the rewriting of an ambient Artin word into the
/// subgroup fixing puncture 2: the representative of a braid's coset is
/// chosen by where it sends puncture 2, with R_1 = σ1, R_2 = 1 and
/// R_k = σ2⁻¹ ⋯ σ_{k−1}⁻¹ for k > 2.
#[derive(Debug, Clone)]
pub struct CosetState {
    n: usize,
    position: usize,
}

impl CosetState {
    pub fn new(n: usize) -> Self {
        CosetState { n, position: 2 }
    }

    /// Current position of puncture 2.
    pub fn position(&self) -> usize {
        self.position
    }

    /// Track one letter σ_μ^{±1}.
    pub fn apply_letter(&mut self, mu: usize) {
        if mu == self.position {
            self.position += 1;
        } else if mu + 1 == self.position {
            self.position -= 1;
        }
    }

    /// The chosen representative R_k of the current coset.
    pub fn representative(&self) -> ArtinWord {
        match self.position {
            1 => ArtinWord::new(self.n, vec![1]).expect("in range"),
            2 => ArtinWord::identity(self.n),
            k => ArtinWord::new(self.n, (2..k).map(|i| -(i as i32)).collect()).expect("in range"),
        }
    }
}

/// Rewrite a word representing a braid that fixes puncture 2 into band
/// generators on 2n−2 punctures, letter by letter. Each letter σ_μ^{±1} is
/// replaced according to the position k of puncture 2 before the letter;
/// the output represents the symmetric-braid image of the element and has
/// at most twice as many letters as the input.
pub fn artin_to_sym(w: &ArtinWord) -> Result<BandWord> {
    let n = w.strands();
    let m = 2 * n - 2;
    let mut out = BandWord::identity(m);
    let mut state = CosetState::new(n);
    let pos = |t: usize, s: usize| BandLetter {
        t,
        s,
        positive: true,
    };
    let neg = |t: usize, s: usize| BandLetter {
        t,
        s,
        positive: false,
    };
    for &l in w.letters() {
        let mu = l.unsigned_abs() as usize;
        let k = state.position();
        if l > 0 {
            if mu + 1 < k {
                out.push(pos(mu + 1, mu));
                out.push(pos(mu + n, mu + n - 1));
            } else if mu + 1 == k {
                // absorbed into the coset representative
            } else if mu == k {
                out.push(pos(mu + n - 1, mu));
            } else {
                out.push(pos(mu, mu - 1));
                out.push(pos(mu + n - 1, mu + n - 2));
            }
        } else if mu + 1 < k {
            out.push(neg(mu + n, mu + n - 1));
            out.push(neg(mu + 1, mu));
        } else if mu + 1 == k {
            out.push(neg(mu + n - 1, mu));
        } else if mu == k {
            // absorbed into the coset representative
        } else {
            out.push(neg(mu + n - 1, mu + n - 2));
            out.push(neg(mu, mu - 1));
        }
        state.apply_letter(mu);
    }
    if state.position() != 2 {
        return Err(Error::NotFixingSecondPuncture);
    }
    Ok(out)
}

/// One piece of the polygonal splitting of a symmetric simple element:
/// either a single polygon invariant under the half rotation, or a pair of
/// polygons swapped by it. Both are recorded through the index set
/// j_1 < ⋯ < j_d < n; a symmetric polygon has vertex set
/// {j_•} ∪ {j_• + n−1}, a mirror pair has vertex sets {j_• + offset} and
/// its half-rotation image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolygonalItem {
    SymmetricPolygon { js: Vec<usize> },
    MirrorPair { js: Vec<usize>, offset: usize },
}

/// A symmetric braid written as δ^t p_1 ⋯ p_k with each p_i a symmetric
/// polygon or a mirror pair, grouped from the factors of its left normal
/// form (symmetric polygon first, then mirror pairs by minimum vertex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonalDecomposition {
    points: usize,
    delta_power: i64,
    items: Vec<PolygonalItem>,
}

impl PolygonalDecomposition {
    pub fn points(&self) -> usize {
        self.points
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn items(&self) -> &[PolygonalItem] {
        &self.items
    }

    fn bridge_strands(&self) -> usize {
        self.points / 2 + 1
    }
}

impl fmt::Display for PolygonalDecomposition {
    /// Debug rendering: `d^t [S{1,5}] [M{1,2}+off0] …`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d^{}", self.delta_power)?;
        let shift = self.points / 2;
        for item in &self.items {
            match item {
                PolygonalItem::SymmetricPolygon { js } => {
                    let mut block: Vec<usize> = js.iter().flat_map(|&j| [j, j + shift]).collect();
                    block.sort_unstable();
                    write!(f, " [S{{{}}}]", join_commas(&block))?;
                }
                PolygonalItem::MirrorPair { js, offset } => {
                    write!(f, " [M{{{}}}+off{}]", join_commas(js), offset)?;
                }
            }
        }
        Ok(())
    }
}

fn join_commas(v: &[usize]) -> String {
    v.iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn shift_block(block: &[usize], shift: usize, m: usize) -> Vec<usize> {
    let mut out: Vec<usize> = block.iter().map(|&p| (p - 1 + shift) % m + 1).collect();
    out.sort_unstable();
    out
}

/// Normalize one polygon pair: find the minimal rotation offset k whose
/// upward shift ζ_i ↦ ζ_{i+k} carries one of the two blocks inside
/// {1..n−1}; the pair is then δ^k (normalized pair) δ^{−k}.
fn normalize_pair(b1: &[usize], b2: &[usize], n: usize, m: usize) -> Result<(Vec<usize>, usize)> {
    for offset in 0..n - 1 {
        for block in [b1, b2] {
            let shifted = shift_block(block, offset, m);
            if *shifted.last().expect("nonempty block") < n {
                return Ok((shifted, offset));
            }
        }
    }
    Err(Error::ContractViolation {
        what: "polygon pair does not fit inside a half circle".to_string(),
    })
}

/// Split a symmetric braid, given by its band normal form, into
/// δ^t p_1 ⋯ p_k. Errors when some normal-form factor is not invariant
/// under the half rotation (the input was not symmetric).
pub fn decompose_polygonal_nf(nf: &NormalFormB) -> Result<PolygonalDecomposition> {
    let m = nf.structure().points();
    debug_assert!(m.is_multiple_of(2) && m >= 4);
    let n = m / 2 + 1;
    let shift = n - 1;
    let g = Band::new(m);
    let mut items = Vec::new();
    for factor in nf.factors() {
        if g.tau_pow(factor, shift as i64) != *factor {
            return Err(Error::NotSymmetric);
        }
        let blocks = factor.blocks();
        let mut symmetric: Vec<PolygonalItem> = Vec::new();
        let mut pairs: Vec<PolygonalItem> = Vec::new();
        let mut used = vec![false; blocks.len()];
        for (i, block) in blocks.iter().enumerate() {
            if used[i] {
                continue;
            }
            used[i] = true;
            let image = shift_block(block, shift, m);
            if image == *block {
                // Invariant under the half rotation; at most one such block
                // exists in a non-crossing partition.
                let js: Vec<usize> = block.iter().copied().filter(|&p| p <= shift).collect();
                symmetric.push(PolygonalItem::SymmetricPolygon { js });
            } else {
                let partner = blocks
                    .iter()
                    .position(|b| *b == image)
                    .ok_or(Error::NotSymmetric)?;
                used[partner] = true;
                let (js, offset) = normalize_pair(block, &image, n, m)?;
                pairs.push(PolygonalItem::MirrorPair { js, offset });
            }
        }
        debug_assert!(symmetric.len() <= 1);
        items.extend(symmetric);
        items.extend(pairs);
    }
    Ok(PolygonalDecomposition {
        points: m,
        delta_power: nf.inf(),
        items,
    })
}

/// Split a symmetric braid given as a band word.
pub fn decompose_polygonal(w: &BandWord) -> Result<PolygonalDecomposition> {
    let m = w.points();
    if !m.is_multiple_of(2) || m < 4 {
        return Err(Error::TooFewStrands { got: m, min: 4 });
    }
    decompose_polygonal_nf(&band::normal_form(w))
}

/// Letters of the shared core of both translation formulas:
/// (∏_{i=j_1+1, i∉js}^{j_d−1} σ_i⁻¹) (σ_{j_d} σ_{j_d−1} ⋯ σ_{j_1+1}).
fn push_gap_and_run(letters: &mut Vec<i32>, js: &[usize]) {
    let j1 = js[0];
    let jd = *js.last().expect("nonempty");
    for i in j1 + 1..jd {
        if !js.contains(&i) {
            letters.push(-(i as i32));
        }
    }
    for i in (j1 + 1..=jd).rev() {
        letters.push(i as i32);
    }
}

/// Translation of a mirror pair into Artin generators:
/// ε^k σ1 (∏ σ_i⁻¹) (σ_{j_d} ⋯ σ_{j_1+1}) σ1⁻¹ ε^{−k}.
fn mirror_pair_word(n: usize, js: &[usize], offset: usize) -> ArtinWord {
    let mut letters = vec![1i32];
    push_gap_and_run(&mut letters, js);
    letters.push(-1);
    let core = ArtinWord::new(n, letters).expect("in range");
    let eps = ArtinWord::epsilon(n).power(offset as i64);
    eps.concat(&core)
        .and_then(|w| w.concat(&eps.inverse()))
        .expect("same strand count")
}

/// Translation of a symmetric polygon into Artin generators:
/// σ1 (∏ σ_i⁻¹) (σ_{j_d} ⋯ σ_{j_1+1}) (σ_{j_1} ⋯ σ_2) σ1² (σ2⁻¹ ⋯ σ_{j_1}⁻¹) σ1⁻¹.
fn symmetric_polygon_word(n: usize, js: &[usize]) -> ArtinWord {
    let j1 = js[0];
    let mut letters = vec![1i32];
    push_gap_and_run(&mut letters, js);
    for i in (2..=j1).rev() {
        letters.push(i as i32);
    }
    letters.push(1);
    letters.push(1);
    for i in 2..=j1 {
        letters.push(-(i as i32));
    }
    letters.push(-1);
    ArtinWord::new(n, letters).expect("in range")
}

/// Translate a polygonal decomposition back into the Artin generators of
/// the braid group on n = points/2 + 1 strands; δ maps to ε, and every item
/// lands in the subgroup fixing puncture 2.
pub fn sym_to_artin(d: &PolygonalDecomposition) -> ArtinWord {
    let n = d.bridge_strands();
    let mut out = ArtinWord::epsilon(n).power(d.delta_power);
    for item in &d.items {
        let piece = match item {
            PolygonalItem::SymmetricPolygon { js } => symmetric_polygon_word(n, js),
            PolygonalItem::MirrorPair { js, offset } => mirror_pair_word(n, js, *offset),
        };
        out = out.concat(&piece).expect("same strand count");
    }
    out
}

/// Normal-form cache for ε powers, shared across the many item translations
/// the solver performs.
pub(crate) struct EpsilonPowers {
    n: usize,
    positive: Vec<NormalFormA>,
}

impl EpsilonPowers {
    pub(crate) fn new(n: usize) -> Self {
        EpsilonPowers {
            n,
            positive: vec![normal_form(&ArtinWord::identity(n))],
        }
    }

    pub(crate) fn get(&mut self, k: i64) -> NormalFormA {
        let abs = k.unsigned_abs() as usize;
        while self.positive.len() <= abs {
            let eps = normal_form(&ArtinWord::epsilon(self.n));
            let next = self.positive.last().expect("nonempty").mul(&eps);
            self.positive.push(next);
        }
        if k >= 0 {
            self.positive[abs].clone()
        } else {
            self.positive[abs].inverse()
        }
    }
}

/// Normal form of [`sym_to_artin`] computed piecewise, avoiding the long
/// ε^{±k} expansions in the intermediate words.
pub(crate) fn sym_to_artin_nf(d: &PolygonalDecomposition, eps: &mut EpsilonPowers) -> NormalFormA {
    let n = d.bridge_strands();
    let mut out = eps.get(d.delta_power);
    for item in &d.items {
        match item {
            PolygonalItem::SymmetricPolygon { js } => {
                out = out.mul(&normal_form(&symmetric_polygon_word(n, js)));
            }
            PolygonalItem::MirrorPair { js, offset } => {
                let mut letters = vec![1i32];
                push_gap_and_run(&mut letters, js);
                letters.push(-1);
                let core = normal_form(&ArtinWord::new(n, letters).expect("in range"));
                let e = eps.get(*offset as i64);
                out = out.mul(&e).mul(&core).mul(&e.inverse());
            }
        }
    }
    out
}

/// The unique puncture fixed by the braid's permutation.
pub fn fixed_puncture(w: &ArtinWord) -> Result<usize> {
    let fixed = w.permutation().fixed_points();
    if fixed.len() == 1 {
        Ok(fixed[0])
    } else {
        Err(Error::FixedPointCount { count: fixed.len() })
    }
}
