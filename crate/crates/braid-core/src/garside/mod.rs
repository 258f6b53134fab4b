//! A Garside normal-form engine shared by the two structures on the braid
//! group: the classical one (simple elements are permutation braids, Garside
//! element Δ) and the band-generator one (simple elements are non-crossing
//! partitions, Garside element δ).
//!
//! Elements are kept in left normal form Δ^p x_1 ⋯ x_r where p is maximal
//! and each x_i is the maximal simple prefix of x_i ⋯ x_r; equivalently,
//! every adjacent pair (x_i, x_{i+1}) is left-weighted. Since the form is
//! unique, structural equality of [`NormalForm`] values is equality of group
//! elements, and all algebra here (products, inverses, powers, cycling,
//! decycling, summit reduction) works directly on normal forms.

pub mod band;
pub mod classical;

use crate::error::{Error, Result};
use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;

/// One Garside structure: a family of simple elements with the operations
/// the normal-form engine needs.
pub trait Structure: Clone + PartialEq + Eq + Hash + fmt::Debug {
    type Simple: Clone + PartialEq + Eq + Hash + Ord + fmt::Debug;

    fn points(&self) -> usize;
    fn delta_simple(&self) -> Self::Simple;
    fn is_identity(&self, s: &Self::Simple) -> bool;
    fn is_delta(&self, s: &Self::Simple) -> bool;

    /// τ^k(s) = Δ^{-k} s Δ^k. τ has order 2 in the classical structure and
    /// order m (rotation of the base points) in the band structure.
    fn tau_pow(&self, s: &Self::Simple, k: i64) -> Self::Simple;

    /// The simple element Δ s⁻¹ completing `s` to Δ on the left.
    fn left_complement(&self, s: &Self::Simple) -> Self::Simple;

    /// Make the pair (x, y) left-weighted in place, preserving the product
    /// x·y. Returns true when anything moved.
    fn left_weight_pair(&self, x: &mut Self::Simple, y: &mut Self::Simple) -> bool;

    /// Left-weightedness test without mutation.
    fn pair_is_left_weighted(&self, x: &Self::Simple, y: &Self::Simple) -> bool;

    /// Letter length of Δ in the structure's atoms.
    fn delta_letter_len(&self) -> usize;

    /// Letter length (atom count) of a simple element.
    fn simple_letter_len(&self, s: &Self::Simple) -> usize;

    /// Rendering hooks for the text form of a normal form.
    fn delta_symbol(&self) -> char;
    fn render_factor(&self, s: &Self::Simple) -> String;
}

/// A group element in left normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm<G: Structure> {
    structure: G,
    inf: i64,
    factors: Vec<G::Simple>,
}

/// The conjugating element of one cycling or decycling step: cycling
/// conjugates by a simple element, decycling by the inverse of one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConjStep<S> {
    Identity,
    Simple(S),
    InverseSimple(S),
}

impl<G: Structure> NormalForm<G> {
    pub fn identity(structure: G) -> Self {
        NormalForm {
            structure,
            inf: 0,
            factors: Vec::new(),
        }
    }

    pub fn delta_power(structure: G, k: i64) -> Self {
        NormalForm {
            structure,
            inf: k,
            factors: Vec::new(),
        }
    }

    pub fn from_simple(structure: G, s: G::Simple) -> Self {
        let mut nf = NormalForm::identity(structure);
        nf.mul_simple(s);
        nf
    }

    /// Normalize an arbitrary factor sequence Δ^inf s_1 ⋯ s_k.
    pub fn from_factors(structure: G, inf: i64, factors: Vec<G::Simple>) -> Self {
        let mut fs: Vec<G::Simple> = factors
            .into_iter()
            .filter(|s| !structure.is_identity(s))
            .collect();
        let mut nf = NormalForm {
            structure,
            inf,
            factors: Vec::new(),
        };
        if fs.is_empty() {
            return nf;
        }
        let seeds: Vec<usize> = (0..fs.len().saturating_sub(1)).collect();
        sweep(&nf.structure, &mut fs, seeds);
        nf.factors = fs;
        nf.strip_leading_deltas();
        nf
    }

    pub fn structure(&self) -> &G {
        &self.structure
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    /// Canonical length: the number of non-Δ factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[G::Simple] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// Some(p) when the element is exactly Δ^p.
    pub fn as_delta_power(&self) -> Option<i64> {
        if self.factors.is_empty() {
            Some(self.inf)
        } else {
            None
        }
    }

    /// The same factor sequence with the Δ-power prefix replaced; the
    /// factors stay left-weighted, so the result is again a normal form
    /// (of a different element unless `new_inf` equals the current one).
    pub fn with_inf(&self, new_inf: i64) -> Self {
        NormalForm {
            structure: self.structure.clone(),
            inf: new_inf,
            factors: self.factors.clone(),
        }
    }

    /// Letter length of the canonical word spelling this normal form.
    pub fn letter_len(&self) -> usize {
        let g = &self.structure;
        self.inf.unsigned_abs() as usize * g.delta_letter_len()
            + self
                .factors
                .iter()
                .map(|s| g.simple_letter_len(s))
                .sum::<usize>()
    }

    fn strip_leading_deltas(&mut self) {
        let mut lead = 0;
        while lead < self.factors.len() && self.structure.is_delta(&self.factors[lead]) {
            lead += 1;
        }
        if lead > 0 {
            self.factors.drain(..lead);
            self.inf += lead as i64;
        }
    }

    /// Right-multiply by a simple element.
    pub fn mul_simple(&mut self, s: G::Simple) {
        if self.structure.is_identity(&s) {
            return;
        }
        if self.structure.is_delta(&s) {
            self.mul_delta_pow(1);
            return;
        }
        self.factors.push(s);
        let len = self.factors.len();
        if len >= 2 {
            sweep(&self.structure, &mut self.factors, vec![len - 2]);
        }
        self.strip_leading_deltas();
    }

    /// Right-multiply by Δ^k: the power commutes to the front, twisting every
    /// factor by τ^k.
    pub fn mul_delta_pow(&mut self, k: i64) {
        if k == 0 {
            return;
        }
        for f in self.factors.iter_mut() {
            *f = self.structure.tau_pow(f, k);
        }
        self.inf += k;
    }

    pub fn mul(&self, other: &NormalForm<G>) -> NormalForm<G> {
        debug_assert_eq!(self.structure, other.structure);
        let mut out = self.clone();
        out.mul_delta_pow(other.inf);
        for f in &other.factors {
            out.mul_simple(f.clone());
        }
        out
    }

    pub fn inverse(&self) -> NormalForm<G> {
        let g = &self.structure;
        let r = self.factors.len() as i64;
        let mut fs = Vec::with_capacity(self.factors.len());
        // (Δ^p x_1⋯x_r)⁻¹ = Δ^{-(r+p)} τ^{-(r-1)-p}(A_r) ⋯ τ^{-p}(A_1)
        // with A_i the left complement of x_i.
        for i in (0..self.factors.len()).rev() {
            let a = g.left_complement(&self.factors[i]);
            fs.push(g.tau_pow(&a, -(i as i64) - self.inf));
        }
        NormalForm::from_factors(self.structure.clone(), -r - self.inf, fs)
    }

    pub fn pow(&self, k: i64) -> NormalForm<G> {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = NormalForm::identity(self.structure.clone());
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// c⁻¹ · self · c.
    pub fn conjugate_by(&self, c: &NormalForm<G>) -> NormalForm<G> {
        c.inverse().mul(self).mul(c)
    }

    /// Cycling: Δ^p x_2 ⋯ x_r τ^{-p}(x_1), conjugating by τ^{-p}(x_1).
    /// Elements of canonical length 0 are returned unchanged.
    pub fn cycling(&self) -> (NormalForm<G>, ConjStep<G::Simple>) {
        if self.factors.is_empty() {
            return (self.clone(), ConjStep::Identity);
        }
        let first = self.factors[0].clone();
        let conj = self.structure.tau_pow(&first, -self.inf);
        let mut out = NormalForm {
            structure: self.structure.clone(),
            inf: self.inf,
            factors: self.factors[1..].to_vec(),
        };
        out.mul_simple(conj.clone());
        (out, ConjStep::Simple(conj))
    }

    /// Decycling: Δ^p τ^p(x_r) x_1 ⋯ x_{r-1}, conjugating by x_r⁻¹.
    /// Elements of canonical length 0 are returned unchanged.
    pub fn decycling(&self) -> (NormalForm<G>, ConjStep<G::Simple>) {
        if self.factors.is_empty() {
            return (self.clone(), ConjStep::Identity);
        }
        let last = self.factors[self.factors.len() - 1].clone();
        let mut fs = Vec::with_capacity(self.factors.len());
        fs.push(self.structure.tau_pow(&last, self.inf));
        fs.extend_from_slice(&self.factors[..self.factors.len() - 1]);
        let out = NormalForm::from_factors(self.structure.clone(), self.inf, fs);
        (out, ConjStep::InverseSimple(last))
    }

    /// Check the normal-form invariants; used by tests.
    pub fn is_left_weighted(&self) -> bool {
        let g = &self.structure;
        if self
            .factors
            .iter()
            .any(|f| g.is_identity(f) || g.is_delta(f))
        {
            return false;
        }
        self.factors
            .windows(2)
            .all(|w| g.pair_is_left_weighted(&w[0], &w[1]))
    }
}

impl<G: Structure> fmt::Display for NormalForm<G> {
    /// `D^p | f1 | f2` style rendering; a bare `D^p |` for length zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{} |", self.structure.delta_symbol(), self.inf)?;
        let mut first = true;
        for s in &self.factors {
            if first {
                write!(f, " {}", self.structure.render_factor(s))?;
                first = false;
            } else {
                write!(f, " | {}", self.structure.render_factor(s))?;
            }
        }
        Ok(())
    }
}

/// Worklist left-weighting sweep over a factor list. `seeds` are pair
/// indices (i, i+1) to examine; every change re-enqueues the neighbouring
/// pairs, so a fixpoint is left-weighted everywhere the seeds could reach.
/// Factors that become trivial are removed on the spot.
fn sweep<G: Structure>(g: &G, factors: &mut Vec<G::Simple>, seeds: Vec<usize>) {
    let mut stack = seeds;
    while let Some(i) = stack.pop() {
        if i + 1 >= factors.len() {
            continue;
        }
        let changed = {
            let (left, right) = factors.split_at_mut(i + 1);
            g.left_weight_pair(&mut left[i], &mut right[0])
        };
        if changed {
            if g.is_identity(&factors[i + 1]) {
                factors.remove(i + 1);
            } else {
                stack.push(i + 1);
            }
            stack.push(i);
            if i > 0 {
                stack.push(i - 1);
            }
        }
    }
}

/// Outcome of an iterated cycling/decycling reduction, with the conjugating
/// steps in application order and the step counts the complexity arguments
/// bound.
#[derive(Debug, Clone)]
pub struct Reduction<G: Structure> {
    pub nf: NormalForm<G>,
    pub steps: Vec<ConjStep<G::Simple>>,
    pub cyclings: usize,
    pub decyclings: usize,
}

/// Accumulates conjugating steps into a normal form.
pub struct ConjugatorBuilder<G: Structure> {
    nf: NormalForm<G>,
}

impl<G: Structure> ConjugatorBuilder<G> {
    pub fn new(structure: G) -> Self {
        ConjugatorBuilder {
            nf: NormalForm::identity(structure),
        }
    }

    pub fn push(&mut self, step: &ConjStep<G::Simple>) {
        match step {
            ConjStep::Identity => {}
            ConjStep::Simple(s) => self.nf.mul_simple(s.clone()),
            ConjStep::InverseSimple(s) => {
                // s⁻¹ = Δ⁻¹ · (Δ s⁻¹)
                self.nf.mul_delta_pow(-1);
                let lc = self.nf.structure().left_complement(s);
                self.nf.mul_simple(lc);
            }
        }
    }

    pub fn finish(self) -> NormalForm<G> {
        self.nf
    }
}

/// Iterated cycling and decycling until the canonical length is minimal
/// over the conjugacy class.
///
/// Each phase probes consecutive steps of one move; if the phase quantity
/// (inf for cycling, sup for decycling) fails to improve before the probe
/// trajectory revisits an element — the moves are deterministic, so a
/// revisit proves nothing further can happen — or before the
/// `|Δ| · letter-length` window runs out, the quantity is extremal and the
/// probed steps are rolled back. The returned conjugator therefore contains
/// only productive steps.
pub fn reduce_to_summit<G: Structure>(
    start: &NormalForm<G>,
    hard_cap: usize,
) -> Result<Reduction<G>> {
    let g = start.structure().clone();
    let mut nf = start.clone();
    let mut steps: Vec<ConjStep<G::Simple>> = Vec::new();
    let mut cyclings = 0usize;
    let mut decyclings = 0usize;
    let mut total = 0usize;
    loop {
        let mut progressed = false;
        for use_cycling in [true, false] {
            'phase: loop {
                if nf.canonical_length() == 0 {
                    break;
                }
                let window = g.delta_letter_len() * nf.letter_len().max(1) + 1;
                let before = nf.clone();
                let mut cur = nf.clone();
                let mut seen: HashSet<NormalForm<G>> = HashSet::new();
                seen.insert(cur.clone());
                let mut tentative: Vec<ConjStep<G::Simple>> = Vec::new();
                for _ in 0..window {
                    total += 1;
                    if total > hard_cap {
                        return Err(Error::BudgetExceeded {
                            what: format!("summit reduction exceeded {hard_cap} steps"),
                        });
                    }
                    let (next, c) = if use_cycling {
                        cur.cycling()
                    } else {
                        cur.decycling()
                    };
                    tentative.push(c);
                    let better = next.inf() > before.inf()
                        || next.canonical_length() < before.canonical_length();
                    cur = next;
                    if better {
                        if use_cycling {
                            cyclings += tentative.len();
                        } else {
                            decyclings += tentative.len();
                        }
                        steps.append(&mut tentative);
                        nf = cur.clone();
                        progressed = true;
                        continue 'phase;
                    }
                    if !seen.insert(cur.clone()) {
                        break;
                    }
                }
                // Orbit closed or window exhausted without improvement: the
                // phase quantity is extremal. Discard the probe.
                break;
            }
        }
        if !progressed {
            break;
        }
    }
    Ok(Reduction {
        nf,
        steps,
        cyclings,
        decyclings,
    })
}

/// Iterated cycling/decycling of an element conjugate to Δ^`target_inf`,
/// stopping exactly when that power is reached. This is the search loop of
/// the periodic conjugacy solvers; `budget` is the proven step bound.
pub fn reduce_to_delta_power<G: Structure>(
    start: &NormalForm<G>,
    target_inf: i64,
    budget: usize,
) -> Result<Reduction<G>> {
    let mut nf = start.clone();
    let mut steps = Vec::new();
    let mut cyclings = 0usize;
    let mut decyclings = 0usize;
    loop {
        if nf.canonical_length() == 0 {
            if nf.inf() == target_inf {
                return Ok(Reduction {
                    nf,
                    steps,
                    cyclings,
                    decyclings,
                });
            }
            return Err(Error::ContractViolation {
                what: format!(
                    "reduced to Garside power {} instead of {target_inf}; \
                     input was not in the expected conjugacy class",
                    nf.inf()
                ),
            });
        }
        if nf.inf() > target_inf {
            return Err(Error::ContractViolation {
                what: format!(
                    "infimum {} overshot the target {target_inf}; \
                     input was not in the expected conjugacy class",
                    nf.inf()
                ),
            });
        }
        if cyclings + decyclings >= budget {
            return Err(Error::BudgetExceeded {
                what: format!("cycling/decycling budget {budget} exhausted"),
            });
        }
        // Raise inf by cycling while it is below the target, then shorten
        // by decycling; both moves keep inf non-decreasing and the
        // canonical length non-increasing.
        let (next, c) = if nf.inf() < target_inf {
            cyclings += 1;
            nf.cycling()
        } else {
            decyclings += 1;
            nf.decycling()
        };
        steps.push(c);
        nf = next;
    }
}

/// Follow the cycling trajectory until it closes, returning the first
/// element of the limit cycle with the conjugator steps that reach it. Every
/// element of that cycle lies in the ultra summit set of the start element
/// (once the start has minimal canonical length).
#[allow(clippy::type_complexity)]
pub fn cycle_to_periodic_orbit<G: Structure>(
    start: &NormalForm<G>,
    max_steps: usize,
) -> Result<(NormalForm<G>, Vec<ConjStep<G::Simple>>)> {
    let mut trajectory: Vec<NormalForm<G>> = vec![start.clone()];
    let mut steps: Vec<ConjStep<G::Simple>> = Vec::new();
    loop {
        if steps.len() >= max_steps {
            return Err(Error::BudgetExceeded {
                what: format!("cycling orbit did not close within {max_steps} steps"),
            });
        }
        let (next, c) = trajectory.last().unwrap().cycling();
        steps.push(c);
        if let Some(pos) = trajectory.iter().position(|t| *t == next) {
            let entry = trajectory[pos].clone();
            steps.truncate(pos);
            return Ok((entry, steps));
        }
        trajectory.push(next);
    }
}
