//! The classical Garside structure on the braid group: simple elements are
//! permutation braids (positive braids in which any two strands cross at
//! most once), the Garside element is the half twist Δ.

use super::{
    cycle_to_periodic_orbit, reduce_to_summit, ConjStep, ConjugatorBuilder, NormalForm, Reduction,
    Structure,
};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::ArtinWord;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::time::Instant;

/// A simple element of the classical structure, determined by the
/// permutation it induces on punctures: strands i < j cross exactly when
/// π(i) > π(j).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermBraid {
    perm: Permutation,
}

impl PermBraid {
    pub fn identity(n: usize) -> Self {
        PermBraid {
            perm: Permutation::identity(n),
        }
    }

    /// The half twist Δ, the permutation i ↦ n+1−i.
    pub fn half_twist(n: usize) -> Self {
        PermBraid {
            perm: Permutation::from_raw((0..n as u32).rev().collect()),
        }
    }

    /// The atom σ_i.
    pub fn atom(n: usize, i: usize) -> Self {
        debug_assert!(1 <= i && i < n);
        PermBraid {
            perm: Permutation::transposition(n, i, i + 1),
        }
    }

    /// Every permutation determines exactly one simple braid.
    pub fn from_permutation(perm: Permutation) -> Self {
        PermBraid { perm }
    }

    pub fn strands(&self) -> usize {
        self.perm.size()
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    pub fn is_half_twist(&self) -> bool {
        let n = self.perm.size();
        (1..=n).all(|i| self.perm.image(i) == n + 1 - i)
    }

    /// Whether strands starting at punctures i < j cross.
    pub fn strands_cross(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < j);
        self.perm.image(i) > self.perm.image(j)
    }

    /// Number of crossings, i.e. the letter length of the positive word.
    pub fn crossings(&self) -> usize {
        self.perm.inversions()
    }

    /// Atoms that are prefixes: {i : π(i) > π(i+1)}.
    pub fn starting_set(&self) -> Vec<usize> {
        let n = self.perm.size();
        (1..n)
            .filter(|&i| self.perm.image(i) > self.perm.image(i + 1))
            .collect()
    }

    /// Atoms that are suffixes: {i : π⁻¹(i) > π⁻¹(i+1)}.
    pub fn finishing_set(&self) -> Vec<usize> {
        let inv = self.perm.inverse();
        let n = self.perm.size();
        (1..n)
            .filter(|&i| inv.image(i) > inv.image(i + 1))
            .collect()
    }

    /// The canonical positive word: repeatedly emit the lowest descent.
    pub fn to_positive_word(&self) -> ArtinWord {
        let n = self.perm.size();
        let mut images: Vec<u32> = self.perm.images().to_vec();
        let mut word = ArtinWord::identity(n);
        loop {
            let mut descent = None;
            for i in 0..n - 1 {
                if images[i] > images[i + 1] {
                    descent = Some(i);
                    break;
                }
            }
            match descent {
                Some(i) => {
                    images.swap(i, i + 1);
                    word.push((i + 1) as i32);
                }
                None => return word,
            }
        }
    }
}

impl fmt::Display for PermBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.perm)
    }
}

/// The classical structure on n strands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Classical {
    n: usize,
}

impl Classical {
    pub fn new(n: usize) -> Self {
        Classical { n }
    }

    pub fn strands(&self) -> usize {
        self.n
    }
}

impl Structure for Classical {
    type Simple = PermBraid;

    fn points(&self) -> usize {
        self.n
    }

    fn delta_simple(&self) -> PermBraid {
        PermBraid::half_twist(self.n)
    }

    fn is_identity(&self, s: &PermBraid) -> bool {
        s.is_identity()
    }

    fn is_delta(&self, s: &PermBraid) -> bool {
        s.is_half_twist()
    }

    fn tau_pow(&self, s: &PermBraid, k: i64) -> PermBraid {
        if k.rem_euclid(2) == 0 {
            return s.clone();
        }
        // τ(x) = Δ⁻¹xΔ flips both puncture numberings: π'(i) = n+1−π(n+1−i).
        let n = self.n;
        let images = s.perm.images();
        let mut out = vec![0u32; n];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = (n as u32 - 1) - images[n - 1 - i];
        }
        PermBraid {
            perm: Permutation::from_raw(out),
        }
    }

    fn left_complement(&self, s: &PermBraid) -> PermBraid {
        // lc(x) = Δx⁻¹, so π_lc(j) = π_x⁻¹(π_Δ(j)).
        let n = self.n;
        let inv = s.perm.inverse();
        let mut out = vec![0u32; n];
        for (j, slot) in out.iter_mut().enumerate() {
            *slot = inv.images()[n - 1 - j];
        }
        PermBraid {
            perm: Permutation::from_raw(out),
        }
    }

    fn left_weight_pair(&self, x: &mut PermBraid, y: &mut PermBraid) -> bool {
        // Transfer every atom in S(y) \ F(x) from the front of y to the back
        // of x until S(y) ⊆ F(x); the result is the left-weighted
        // factorization of the product.
        let n = self.n;
        let mut x_inv: Vec<u32> = x.perm.inverse().images().to_vec();
        let xi = x.perm.images_mut();
        let yi = y.perm.images_mut();
        let mut changed = false;
        loop {
            let mut moved = false;
            for i in 0..n - 1 {
                // atom σ_{i+1}: descent of y at position i, non-descent of
                // x⁻¹ at value i.
                if yi[i] > yi[i + 1] && x_inv[i] < x_inv[i + 1] {
                    let (p, q) = (x_inv[i] as usize, x_inv[i + 1] as usize);
                    xi.swap(p, q);
                    x_inv.swap(i, i + 1);
                    yi.swap(i, i + 1);
                    moved = true;
                    changed = true;
                }
            }
            if !moved {
                return changed;
            }
        }
    }

    fn pair_is_left_weighted(&self, x: &PermBraid, y: &PermBraid) -> bool {
        let x_inv = x.perm.inverse();
        let n = self.n;
        (0..n - 1).all(|i| {
            y.perm.images()[i] <= y.perm.images()[i + 1]
                || x_inv.images()[i] > x_inv.images()[i + 1]
        })
    }

    fn delta_letter_len(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    fn simple_letter_len(&self, s: &PermBraid) -> usize {
        s.crossings()
    }

    fn delta_symbol(&self) -> char {
        'D'
    }

    fn render_factor(&self, s: &PermBraid) -> String {
        s.perm.to_string()
    }
}

/// Left normal form in the classical structure.
pub type NormalFormA = NormalForm<Classical>;

/// The half twist as a simple element; errors below two strands.
pub fn half_twist(n: usize) -> Result<PermBraid> {
    if n < 2 {
        return Err(Error::TooFewStrands { got: n, min: 2 });
    }
    Ok(PermBraid::half_twist(n))
}

/// Left normal form of the braid represented by an Artin word.
pub fn normal_form(w: &ArtinWord) -> NormalFormA {
    let g = Classical::new(w.strands());
    let mut nf = NormalForm::identity(g);
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize;
        let atom = PermBraid::atom(w.strands(), i);
        if l > 0 {
            nf.mul_simple(atom);
        } else {
            // σ_i⁻¹ = Δ⁻¹ · (Δ σ_i⁻¹)
            nf.mul_delta_pow(-1);
            nf.mul_simple(g.left_complement(&atom));
        }
    }
    nf
}

/// Expand a normal form back into an Artin word (canonical spelling).
pub fn to_word(nf: &NormalFormA) -> ArtinWord {
    let n = nf.structure().strands();
    let delta_word = PermBraid::half_twist(n).to_positive_word();
    let mut out = ArtinWord::identity(n);
    let p = nf.inf();
    for _ in 0..p.unsigned_abs() {
        let piece = if p >= 0 {
            delta_word.clone()
        } else {
            delta_word.inverse()
        };
        out = out.concat(&piece).expect("same strand count");
    }
    for f in nf.factors() {
        out = out
            .concat(&f.to_positive_word())
            .expect("same strand count");
    }
    out
}

/// τ = conjugation by Δ, an involution on simple elements.
pub fn tau(x: &PermBraid) -> PermBraid {
    Classical::new(x.strands()).tau_pow(x, 1)
}

/// The permutation induced by the element of a normal form.
pub fn permutation_of(nf: &NormalFormA) -> Permutation {
    let n = nf.structure().strands();
    let delta = PermBraid::half_twist(n);
    let mut p = Permutation::identity(n);
    if nf.inf().rem_euclid(2) == 1 {
        p = p.then(delta.permutation());
    }
    for f in nf.factors() {
        p = p.then(f.permutation());
    }
    p
}

fn step_to_word(n: usize, step: &ConjStep<PermBraid>) -> ArtinWord {
    match step {
        ConjStep::Identity => ArtinWord::identity(n),
        ConjStep::Simple(s) => s.to_positive_word(),
        ConjStep::InverseSimple(s) => s.to_positive_word().inverse(),
    }
}

fn steps_to_word(n: usize, steps: &[ConjStep<PermBraid>]) -> ArtinWord {
    let mut out = ArtinWord::identity(n);
    for step in steps {
        out = out
            .concat(&step_to_word(n, step))
            .expect("same strand count");
    }
    out
}

pub(crate) fn steps_to_nf(g: Classical, steps: &[ConjStep<PermBraid>]) -> NormalFormA {
    let mut b = ConjugatorBuilder::new(g);
    for s in steps {
        b.push(s);
    }
    b.finish()
}

/// Cycling with the conjugating word: C⁻¹ · w · C equals the result.
pub fn cycling(nf: &NormalFormA) -> (NormalFormA, ArtinWord) {
    let n = nf.structure().strands();
    let (out, step) = nf.cycling();
    (out, step_to_word(n, &step))
}

/// Decycling with the conjugating word.
pub fn decycling(nf: &NormalFormA) -> (NormalFormA, ArtinWord) {
    let n = nf.structure().strands();
    let (out, step) = nf.decycling();
    (out, step_to_word(n, &step))
}

fn summit_cap(nf: &NormalFormA) -> usize {
    let g = nf.structure();
    64 + 8 * g.delta_letter_len() * nf.letter_len().max(1)
}

/// A conjugate of minimal canonical length, with a conjugating word C such
/// that C⁻¹ · w · C equals the returned form.
pub fn min_length_representative(w: &ArtinWord) -> Result<(NormalFormA, ArtinWord)> {
    let nf = normal_form(w);
    let red = reduce_to_summit(&nf, summit_cap(&nf))?;
    let word = steps_to_word(w.strands(), &red.steps);
    Ok((red.nf, word))
}

pub(crate) fn min_length_nf(nf: &NormalFormA) -> Result<Reduction<Classical>> {
    reduce_to_summit(nf, summit_cap(nf))
}

/// Resource limits for the ultra-summit-set closure, which is exponential in
/// the strand count and intended for desk scale only.
#[derive(Debug, Clone)]
pub struct UssBudget {
    pub max_members: usize,
    pub deadline: Option<Instant>,
}

impl Default for UssBudget {
    fn default() -> Self {
        UssBudget {
            max_members: 1 << 14,
            deadline: None,
        }
    }
}

impl UssBudget {
    fn check(&self, members: usize) -> Result<()> {
        if members > self.max_members {
            return Err(Error::DeskScaleExceeded {
                what: format!("ultra summit set grew past {} members", self.max_members),
            });
        }
        if let Some(d) = self.deadline {
            if Instant::now() > d {
                return Err(Error::BudgetExceeded {
                    what: "ultra summit set computation timed out".to_string(),
                });
            }
        }
        Ok(())
    }
}

/// Lexicographic permutation stream used to enumerate candidate simple
/// conjugators without materializing n! tables.
struct PermStream {
    current: Option<Vec<u32>>,
}

impl PermStream {
    fn new(n: usize) -> Self {
        PermStream {
            current: Some((0..n as u32).collect()),
        }
    }
}

impl Iterator for PermStream {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.as_mut()?;
        let item = Permutation::from_raw(cur.clone());
        // Advance to the next permutation in lexicographic order.
        let n = cur.len();
        let mut i = n.wrapping_sub(1);
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            self.current = None;
        } else {
            let mut j = n - 1;
            while cur[j] <= cur[i - 1] {
                j -= 1;
            }
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        Some(item)
    }
}

fn orbit_of(
    seed: &NormalFormA,
    cap: usize,
) -> Result<Vec<(NormalFormA, Vec<ConjStep<PermBraid>>)>> {
    let mut out = vec![(seed.clone(), Vec::new())];
    let mut cur = seed.clone();
    let mut steps = Vec::new();
    loop {
        let (next, c) = cur.cycling();
        steps.push(c);
        if next == *seed {
            return Ok(out);
        }
        if out.len() >= cap {
            return Err(Error::BudgetExceeded {
                what: "cycling orbit exceeded the member cap".to_string(),
            });
        }
        out.push((next.clone(), steps.clone()));
        cur = next;
    }
}

/// Whether iterated cycling returns to `nf` (membership test for the ultra
/// summit set among minimal-length conjugates).
fn is_cycling_periodic(nf: &NormalFormA, cap: usize) -> bool {
    let mut cur = nf.clone();
    for _ in 0..cap {
        let (next, _) = cur.cycling();
        if next == *nf {
            return true;
        }
        // Once the length or infimum moves we are outside the summit set.
        if next.inf() != nf.inf() || next.canonical_length() != nf.canonical_length() {
            return false;
        }
        cur = next;
    }
    false
}

/// The full ultra summit set of the braid represented by `w`, computed by
/// orbit closure: seed with a minimal-length conjugate driven into its
/// cycling orbit, then repeatedly conjugate members by simple elements,
/// keeping the results of the same minimal length that are cycling-periodic.
/// Complete because any two members are connected through members by simple
/// conjugations.
pub fn ultra_summit_set(w: &ArtinWord, budget: &UssBudget) -> Result<BTreeSet<NormalFormA>> {
    Ok(uss_closure(w, None, budget)?.members)
}

struct UssClosure {
    members: BTreeSet<NormalFormA>,
    /// Conjugator from the original braid to each member.
    conjugators: BTreeMap<NormalFormA, NormalFormA>,
    hit: Option<NormalFormA>,
}

fn uss_closure(
    w: &ArtinWord,
    target: Option<&NormalFormA>,
    budget: &UssBudget,
) -> Result<UssClosure> {
    let g = Classical::new(w.strands());
    let nf = normal_form(w);
    let summit = min_length_nf(&nf)?;
    let (entry, entry_steps) =
        cycle_to_periodic_orbit(&summit.nf, budget.max_members.max(1 << 12))?;
    let mut base = steps_to_nf(g, &summit.steps);
    base = base.mul(&steps_to_nf(g, &entry_steps));

    let mut members = BTreeSet::new();
    let mut conjugators = BTreeMap::new();
    let mut queue = VecDeque::new();
    for (member, steps) in orbit_of(&entry, budget.max_members)? {
        let conj = base.mul(&steps_to_nf(g, &steps));
        if members.insert(member.clone()) {
            conjugators.insert(member.clone(), conj);
            queue.push_back(member);
        }
    }
    if let Some(t) = target {
        if let Some(found) = members.iter().find(|m| *m == t) {
            return Ok(UssClosure {
                hit: Some(found.clone()),
                members,
                conjugators,
            });
        }
    }

    let min_len = entry.canonical_length();
    let min_inf = entry.inf();
    while let Some(y) = queue.pop_front() {
        let y_conj = conjugators.get(&y).cloned().expect("member conjugator");
        for perm in PermStream::new(w.strands()) {
            budget.check(members.len())?;
            if perm.is_identity() {
                continue;
            }
            let s = PermBraid::from_permutation(perm);
            let c = NormalForm::from_simple(g, s);
            let z = y.conjugate_by(&c);
            if z.canonical_length() != min_len || z.inf() != min_inf {
                continue;
            }
            if members.contains(&z) {
                continue;
            }
            if !is_cycling_periodic(&z, budget.max_members) {
                continue;
            }
            let z_conj = y_conj.mul(&c);
            for (member, steps) in orbit_of(&z, budget.max_members)? {
                let conj = z_conj.mul(&steps_to_nf(g, &steps));
                if members.insert(member.clone()) {
                    budget.check(members.len())?;
                    conjugators.insert(member.clone(), conj.clone());
                    if let Some(t) = target {
                        if member == *t {
                            return Ok(UssClosure {
                                hit: Some(member),
                                members,
                                conjugators,
                            });
                        }
                    }
                    queue.push_back(member);
                }
            }
        }
    }
    Ok(UssClosure {
        members,
        conjugators,
        hit: None,
    })
}

/// Conjugacy search through ultra summit sets (the exponential baseline):
/// returns C with C⁻¹ · x · C = target, or None when the braids are not
/// conjugate.
pub fn uss_conjugacy_search(
    x: &ArtinWord,
    target: &ArtinWord,
    budget: &UssBudget,
) -> Result<Option<ArtinWord>> {
    if x.strands() != target.strands() {
        return Err(Error::StrandMismatch {
            left: x.strands(),
            right: target.strands(),
        });
    }
    let g = Classical::new(x.strands());
    let t_nf = normal_form(target);
    let t_summit = min_length_nf(&t_nf)?;
    let (t_entry, t_steps) =
        cycle_to_periodic_orbit(&t_summit.nf, budget.max_members.max(1 << 12))?;
    let mut t_conj = steps_to_nf(g, &t_summit.steps);
    t_conj = t_conj.mul(&steps_to_nf(g, &t_steps));

    let closure = uss_closure(x, Some(&t_entry), budget)?;
    match closure.hit {
        Some(member) => {
            let c_x = closure.conjugators.get(&member).expect("hit conjugator");
            let c = c_x.mul(&t_conj.inverse());
            Ok(Some(to_word(&c)))
        }
        None => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf_of(text: &str, n: usize) -> NormalFormA {
        normal_form(&ArtinWord::parse(text, n).unwrap())
    }

    #[test]
    fn half_twist_permutations() {
        assert_eq!(half_twist(3).unwrap().permutation().to_string(), "3 2 1");
        assert_eq!(half_twist(2).unwrap().permutation().to_string(), "2 1");
        assert!(half_twist(1).is_err());
    }

    #[test]
    fn half_twist_word_normalizes_to_delta() {
        let nf = nf_of("1 2 1", 3);
        assert_eq!(nf.inf(), 1);
        assert_eq!(nf.canonical_length(), 0);
    }

    #[test]
    fn empty_word_normal_form() {
        let nf = nf_of("", 3);
        assert!(nf.is_trivial());
    }

    #[test]
    fn square_of_atom_normal_form() {
        let nf = nf_of("1 1", 3);
        assert_eq!(nf.inf(), 0);
        assert_eq!(nf.canonical_length(), 2);
        assert_eq!(
            nf.factors(),
            &[PermBraid::atom(3, 1), PermBraid::atom(3, 1)]
        );
    }

    #[test]
    fn rendering_is_bit_exact() {
        assert_eq!(nf_of("1 2 1", 3).to_string(), "D^1 |");
        assert_eq!(nf_of("1 1", 3).to_string(), "D^0 | 2 1 3 | 2 1 3");
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&PermBraid::atom(4, 1)), PermBraid::atom(4, 3));
        assert_eq!(tau(&PermBraid::half_twist(4)), PermBraid::half_twist(4));
        assert_eq!(tau(&PermBraid::identity(4)), PermBraid::identity(4));
        // τ is an involution on simples.
        for i in 1..6 {
            let a = PermBraid::atom(7, i);
            assert_eq!(tau(&tau(&a)), a);
        }
    }

    #[test]
    fn normal_form_respects_relations() {
        // Braid relation and far commutation give identical records.
        assert_eq!(nf_of("1 2 1", 4), nf_of("2 1 2", 4));
        assert_eq!(nf_of("1 3", 4), nf_of("3 1", 4));
        // Free cancellation.
        assert_eq!(nf_of("1 -1", 4), nf_of("", 4));
        assert_eq!(nf_of("-2 2", 4), nf_of("", 4));
    }

    #[test]
    fn exponent_sum_is_preserved_by_normal_form() {
        for (text, n) in [("1 -2 1 1 3 -1", 4), ("-1 -1 -2 3 3", 4), ("2 1", 3)] {
            let w = ArtinWord::parse(text, n).unwrap();
            let nf = normal_form(&w);
            let e = nf.inf() * (n as i64) * (n as i64 - 1) / 2
                + nf.factors()
                    .iter()
                    .map(|f| f.crossings() as i64)
                    .sum::<i64>();
            assert_eq!(e, w.exponent_sum());
        }
    }

    #[test]
    fn to_word_round_trips() {
        for (text, n) in [("1 -2 1 1 3 -1", 4), ("", 3), ("2 1 2 1", 3), ("-1 -2", 5)] {
            let nf = nf_of(text, n);
            assert_eq!(normal_form(&to_word(&nf)), nf);
        }
    }

    #[test]
    fn multiplication_matches_concatenation() {
        let a = ArtinWord::parse("1 -2 3", 4).unwrap();
        let b = ArtinWord::parse("-3 2 2 1", 4).unwrap();
        let prod = normal_form(&a.concat(&b).unwrap());
        assert_eq!(normal_form(&a).mul(&normal_form(&b)), prod);
    }

    #[test]
    fn inverse_cancels() {
        for text in ["1 -2 3 3", "2 2 1 -3", ""] {
            let nf = nf_of(text, 4);
            assert!(nf.mul(&nf.inverse()).is_trivial());
            assert!(nf.inverse().mul(&nf).is_trivial());
        }
    }

    #[test]
    fn powers_match_repeated_words() {
        let w = ArtinWord::parse("2 -1", 4).unwrap();
        let nf = normal_form(&w);
        assert_eq!(nf.pow(3), normal_form(&w.power(3)));
        assert_eq!(nf.pow(-2), normal_form(&w.power(-2)));
        assert!(nf.pow(0).is_trivial());
    }

    #[test]
    fn cycling_on_zero_length_is_identity_step() {
        let nf = nf_of("1 2 1", 3); // Δ
        let (out, conj) = cycling(&nf);
        assert_eq!(out, nf);
        assert!(conj.is_empty());
        let (out, conj) = decycling(&nf);
        assert_eq!(out, nf);
        assert!(conj.is_empty());
    }

    #[test]
    fn cycling_of_atom_square() {
        let nf = nf_of("1 1", 3);
        let (out, conj) = cycling(&nf);
        assert_eq!(out, nf);
        assert_eq!(conj.to_string(), "1");
    }

    #[test]
    fn cycling_and_decycling_conjugate_correctly() {
        for (text, n) in [("1 1", 3), ("1 -2 3 1 2", 4), ("-1 -1 2", 3)] {
            let w = ArtinWord::parse(text, n).unwrap();
            let nf = normal_form(&w);
            let (c_out, c_word) = cycling(&nf);
            assert_eq!(normal_form(&w.conjugate_by(&c_word).unwrap()), c_out);
            let (d_out, d_word) = decycling(&nf);
            assert_eq!(normal_form(&w.conjugate_by(&d_word).unwrap()), d_out);
        }
    }

    #[test]
    fn min_length_examples() {
        // δ_4 is already minimal.
        let delta = ArtinWord::delta(4);
        let (nf, conj) = min_length_representative(&delta).unwrap();
        assert_eq!(nf, normal_form(&delta));
        assert!(conj.is_empty());

        // Δ² in B_3 is central: canonical length 0, no conjugation needed.
        let full = ArtinWord::parse("1 2 1 1 2 1", 3).unwrap();
        let (nf, conj) = min_length_representative(&full).unwrap();
        assert_eq!(nf.inf(), 2);
        assert_eq!(nf.canonical_length(), 0);
        assert!(conj.is_empty());

        // A conjugate of δ_4 comes back to canonical length 1, with receipt.
        let w = ArtinWord::delta(4)
            .conjugate_by(&ArtinWord::parse("1", 4).unwrap())
            .unwrap();
        let (nf, conj) = min_length_representative(&w).unwrap();
        assert_eq!(nf.canonical_length(), 1);
        assert_eq!(normal_form(&w.conjugate_by(&conj).unwrap()), nf);
    }

    #[test]
    fn uss_of_rotation_braids() {
        let budget = UssBudget::default();
        let uss = ultra_summit_set(&ArtinWord::delta(4), &budget).unwrap();
        assert_eq!(uss.len(), 4);
        let uss = ultra_summit_set(&ArtinWord::epsilon(4), &budget).unwrap();
        assert_eq!(uss.len(), 4);
        // Central elements have a singleton ultra summit set.
        let full_twist = ArtinWord::parse("1 2 1 1 2 1", 3).unwrap();
        let uss = ultra_summit_set(&full_twist, &budget).unwrap();
        assert_eq!(uss.len(), 1);
        let full_twist_b5 = ArtinWord::delta(5).power(5); // Δ² on five strands
        let uss = ultra_summit_set(&full_twist_b5, &budget).unwrap();
        assert_eq!(uss.len(), 1);
        assert_eq!(uss.first().unwrap().as_delta_power(), Some(2));
    }

    #[test]
    fn uss_members_share_length_and_recur_under_cycling() {
        // Not just the counts: every member has the common canonical length
        // and infimum and comes back to itself under iterated cycling.
        let budget = UssBudget::default();
        for word in [
            ArtinWord::epsilon(5),
            ArtinWord::delta(4).power(2),
            ArtinWord::epsilon(4).power(-1),
        ] {
            let uss = ultra_summit_set(&word, &budget).unwrap();
            let sample = uss.first().expect("nonempty");
            let (len, inf) = (sample.canonical_length(), sample.inf());
            for member in &uss {
                assert_eq!(member.canonical_length(), len);
                assert_eq!(member.inf(), inf);
                let mut cur = member.clone();
                let mut returned = false;
                for _ in 0..=uss.len() {
                    cur = cur.cycling().0;
                    if cur == *member {
                        returned = true;
                        break;
                    }
                }
                assert!(returned, "member does not recur under cycling");
            }
        }
    }

    #[test]
    fn uss_search_between_two_random_conjugates() {
        // Neither side is the standard representative.
        let x = ArtinWord::delta(5)
            .conjugate_by(&ArtinWord::parse("2 -4 1", 5).unwrap())
            .unwrap();
        let y = ArtinWord::delta(5)
            .conjugate_by(&ArtinWord::parse("-3 3 4 1 1", 5).unwrap())
            .unwrap();
        let c = uss_conjugacy_search(&x, &y, &UssBudget::default())
            .unwrap()
            .expect("conjugate");
        assert_eq!(normal_form(&x.conjugate_by(&c).unwrap()), normal_form(&y));
    }

    #[test]
    fn uss_search_finds_conjugator() {
        let x = ArtinWord::delta(4)
            .conjugate_by(&ArtinWord::parse("1 -3 2", 4).unwrap())
            .unwrap();
        let c = uss_conjugacy_search(&x, &ArtinWord::delta(4), &UssBudget::default())
            .unwrap()
            .expect("conjugate");
        assert_eq!(
            normal_form(&x.conjugate_by(&c).unwrap()),
            normal_form(&ArtinWord::delta(4))
        );
        // Non-conjugate pair.
        let r = uss_conjugacy_search(
            &ArtinWord::parse("1", 3).unwrap(),
            &ArtinWord::parse("2 2", 3).unwrap(),
            &UssBudget::default(),
        )
        .unwrap();
        assert!(r.is_none());
    }

    #[test]
    fn emitted_forms_are_left_weighted() {
        for (text, n) in [
            ("1 -2 3 1 2 -1 3 3", 4),
            ("2 2 2 1 1", 3),
            ("-1 -2 -3 -1", 4),
        ] {
            let nf = nf_of(text, n);
            assert!(nf.is_left_weighted());
        }
    }
}
