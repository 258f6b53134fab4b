//! Polynomial-time conjugacy search for periodic braids.
//!
//! The two rotation classes are handled through Garside structures whose
//! Garside element is the target: conjugates of δ^k are reduced by cycling
//! and decycling in the band structure on the same strands (where δ is the
//! Garside element), while conjugates of ε^k are first moved into the
//! subgroup fixing puncture 2, rewritten as symmetric braids on 2n−2
//! punctures, reduced in that band structure (where the target becomes a
//! power of its Garside element δ), and the conjugating element is
//! translated back through the polygonal decomposition.
//!
//! Inputs are pre-reduced to minimal canonical length and central full
//! twists are discarded before translation, which bounds the translated
//! word independently of the input length. Every certificate is re-verified
//! by normal form before it is returned.

use crate::bridge::{self, EpsilonPowers};
use crate::error::{Error, Result};
use crate::garside::band::{self, Band, Ncp, NormalFormB};
use crate::garside::classical::{self, normal_form, Classical, NormalFormA};
use crate::garside::{reduce_to_delta_power, ConjStep, ConjugatorBuilder, NormalForm};
use crate::periodic::{classify, PeriodicClass};
use crate::word::ArtinWord;
use std::collections::HashMap;
use std::fmt;

/// Proof of conjugacy to a periodic target: the class (δ^k or ε^k), a
/// conjugating word C, and the result of the normal-form recheck
/// normal_form(C⁻¹ · X · C) = normal_form(target).
#[derive(Debug, Clone)]
pub struct ConjugacyCertificate {
    pub target: PeriodicClass,
    pub conjugator: ArtinWord,
    pub verified: bool,
}

/// Step counts of the band-structure reduction, for bound checking.
#[derive(Debug, Clone, Copy, Default)]
pub struct SolveStats {
    pub cyclings: usize,
    pub decyclings: usize,
    pub step_bound: usize,
    /// Whether the translated conjugator part fixes puncture 2 (ε case with
    /// a nontrivial bridge only).
    pub bridge_fixes_puncture_two: Option<bool>,
}

/// Outcome of the two-sided conjugacy search.
#[derive(Debug, Clone)]
pub enum ConjugacyOutcome {
    Conjugate(ConjugacyCertificate),
    Fail(FailReason),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailReason {
    NotPeriodic,
    DifferentClasses(PeriodicClass, PeriodicClass),
}

impl fmt::Display for FailReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailReason::NotPeriodic => write!(f, "input is not periodic"),
            FailReason::DifferentClasses(a, b) => {
                write!(f, "inputs lie in different classes ({a} vs {b})")
            }
        }
    }
}

fn verified_certificate(
    x_nf: &NormalFormA,
    conjugator: NormalFormA,
    target: PeriodicClass,
) -> Result<ConjugacyCertificate> {
    let n = x_nf.structure().strands();
    let target_word = target.target_word(n).ok_or(Error::ContractViolation {
        what: "certificates exist only for periodic classes".to_string(),
    })?;
    let target_nf = normal_form(&target_word);
    let check = x_nf.conjugate_by(&conjugator);
    if check != target_nf {
        return Err(Error::VerificationFailed {
            what: format!("conjugate does not normalize to {target}"),
        });
    }
    Ok(ConjugacyCertificate {
        target,
        conjugator: classical::to_word(&conjugator),
        verified: true,
    })
}

/// Drop the central part Δ^{2q}: returns the remainder (infimum 0 or 1)
/// and q.
fn strip_full_twists(nf: &NormalFormA) -> (NormalFormA, i64) {
    let p0 = nf.inf().rem_euclid(2);
    let q = (nf.inf() - p0) / 2;
    (nf.with_inf(p0), q)
}

/// Normal forms of the images of band generators under the letterwise
/// isomorphism into the Artin presentation, cached per pair.
struct PhiLetterCache {
    n: usize,
    map: HashMap<(usize, usize), NormalFormA>,
}

impl PhiLetterCache {
    fn new(n: usize) -> Self {
        PhiLetterCache {
            n,
            map: HashMap::new(),
        }
    }

    fn get(&mut self, t: usize, s: usize) -> NormalFormA {
        let n = self.n;
        self.map
            .entry((t, s))
            .or_insert_with(|| normal_form(&band::phi_letter(n, t, s)))
            .clone()
    }
}

fn phi_simple_nf(cache: &mut PhiLetterCache, s: &Ncp) -> NormalFormA {
    let mut out = NormalForm::identity(Classical::new(cache.n));
    for block in s.blocks() {
        for pair in block.windows(2).rev() {
            out = out.mul(&cache.get(pair[1], pair[0]));
        }
    }
    out
}

/// Translate the accumulated band conjugator into the Artin presentation,
/// one simple factor at a time.
fn translate_band_steps(n: usize, steps: &[ConjStep<Ncp>]) -> NormalFormA {
    let mut cache = PhiLetterCache::new(n);
    let mut out = NormalForm::identity(Classical::new(n));
    for step in steps {
        match step {
            ConjStep::Identity => {}
            ConjStep::Simple(s) => out = out.mul(&phi_simple_nf(&mut cache, s)),
            ConjStep::InverseSimple(s) => out = out.mul(&phi_simple_nf(&mut cache, s).inverse()),
        }
    }
    out
}

fn band_steps_to_nf(m: usize, steps: &[ConjStep<Ncp>]) -> NormalFormB {
    let mut b = ConjugatorBuilder::new(Band::new(m));
    for s in steps {
        b.push(s);
    }
    b.finish()
}

fn trivial_target_certificate(
    x_nf: &NormalFormA,
    target: PeriodicClass,
) -> Result<ConjugacyCertificate> {
    let n = x_nf.structure().strands();
    verified_certificate(x_nf, NormalForm::identity(Classical::new(n)), target).map_err(|_| {
        Error::ContractViolation {
            what: format!("braid is not conjugate to {target}"),
        }
    })
}

/// Find C with C⁻¹ · w · C = δ^k, for w conjugate to δ^k (k ≠ 0 unless w is
/// trivial). The word is rewritten into band generators (σ_i ↦ a_{i+1,i}),
/// reduced to δ^k by at most |δ|·l cyclings and decyclings in the band
/// structure, and the conjugating element is translated back.
pub fn solve_delta_power(w: &ArtinWord, k: i64) -> Result<ConjugacyCertificate> {
    solve_delta_power_with_stats(w, k).map(|(c, _)| c)
}

pub fn solve_delta_power_with_stats(
    w: &ArtinWord,
    k: i64,
) -> Result<(ConjugacyCertificate, SolveStats)> {
    let n = w.strands();
    let x_nf = normal_form(w);
    if k == 0 {
        let cert = trivial_target_certificate(&x_nf, PeriodicClass::DeltaPower(0))?;
        return Ok((cert, SolveStats::default()));
    }
    // Pre-reduction: minimal canonical length, then discard central twists.
    let summit = classical::min_length_nf(&x_nf)?;
    let c_pre = classical::steps_to_nf(Classical::new(n), &summit.steps);
    let (y0, q) = strip_full_twists(&summit.nf);
    let k_band = k - q * n as i64;

    let band_word = band::phi_inverse(&classical::to_word(&y0));
    let z_nf = band::normal_form(&band_word);
    let step_bound = (n - 1) * band_word.len().max(1);
    let red = reduce_to_delta_power(&z_nf, k_band, step_bound).map_err(inherit_class_error)?;

    let c_bridge = translate_band_steps(n, &red.steps);
    let conjugator = c_pre.mul(&c_bridge);
    let cert = verified_certificate(&x_nf, conjugator, PeriodicClass::DeltaPower(k))?;
    let stats = SolveStats {
        cyclings: red.cyclings,
        decyclings: red.decyclings,
        step_bound,
        bridge_fixes_puncture_two: None,
    };
    Ok((cert, stats))
}

fn inherit_class_error(e: Error) -> Error {
    match e {
        Error::BudgetExceeded { what } => Error::ContractViolation {
            what: format!("{what}; input was not conjugate to the stated target"),
        },
        other => other,
    }
}

/// Find C with C⁻¹ · w · C = ε^k, for w conjugate to ε^k (k ≠ 0 unless w is
/// trivial). Multiples of n−1 are central and need no conjugation; otherwise
/// the braid is moved into the subgroup fixing puncture 2, rewritten as a
/// symmetric braid on 2n−2 punctures, reduced to δ^k there by at most
/// (2n−3)·l cyclings and decyclings, and the conjugator is translated back
/// through its polygonal decomposition.
pub fn solve_epsilon_power(w: &ArtinWord, k: i64) -> Result<ConjugacyCertificate> {
    solve_epsilon_power_with_stats(w, k).map(|(c, _)| c)
}

pub fn solve_epsilon_power_with_stats(
    w: &ArtinWord,
    k: i64,
) -> Result<(ConjugacyCertificate, SolveStats)> {
    let n = w.strands();
    let x_nf = normal_form(w);
    if k == 0 {
        let cert = trivial_target_certificate(&x_nf, PeriodicClass::EpsilonPower(0))?;
        return Ok((cert, SolveStats::default()));
    }
    if k.rem_euclid(n as i64 - 1) == 0 {
        // ε^k is a power of the full twist, hence central: the only
        // conjugate is the element itself and the empty word certifies it.
        let cert = trivial_target_certificate(&x_nf, PeriodicClass::EpsilonPower(k))?;
        return Ok((cert, SolveStats::default()));
    }

    let summit = classical::min_length_nf(&x_nf)?;
    let c_pre = classical::steps_to_nf(Classical::new(n), &summit.steps);
    let (y0, q) = strip_full_twists(&summit.nf);
    let k_band = k - q * (n as i64 - 1);

    // Move the unique fixed puncture to position 2.
    let y0_word = classical::to_word(&y0);
    let a = bridge::fixed_puncture(&y0_word)?;
    let c1_word = ArtinWord::sigma_run(a, 2, n).expect("in range");
    let y1_word = y0_word.conjugate_by(&c1_word).expect("same strand count");

    let z_word = bridge::artin_to_sym(&y1_word)?;
    let z_nf = band::normal_form(&z_word);
    let step_bound = (2 * n - 3) * z_word.len().max(1);
    let red = reduce_to_delta_power(&z_nf, k_band, step_bound).map_err(inherit_class_error)?;

    // Translate the symmetric conjugator through its polygonal pieces.
    let c0_nf = band_steps_to_nf(2 * n - 2, &red.steps);
    let decomp = bridge::decompose_polygonal_nf(&c0_nf)?;
    let mut eps_cache = EpsilonPowers::new(n);
    let c_bridge = bridge::sym_to_artin_nf(&decomp, &mut eps_cache);
    let bridge_fixes_two = classical::permutation_of(&c_bridge).image(2) == 2;

    let conjugator = c_pre.mul(&normal_form(&c1_word)).mul(&c_bridge);
    let cert = verified_certificate(&x_nf, conjugator, PeriodicClass::EpsilonPower(k))?;
    let stats = SolveStats {
        cyclings: red.cyclings,
        decyclings: red.decyclings,
        step_bound,
        bridge_fixes_puncture_two: Some(bridge_fixes_two),
    };
    Ok((cert, stats))
}

/// Decide conjugacy of two braids and produce a conjugating element when
/// they are conjugate periodic braids: classify both, fail on non-periodic
/// input or distinct classes, otherwise solve each side to the common
/// target and compose. The returned certificate satisfies
/// C⁻¹ · X · C = Y, rechecked by normal form.
pub fn solve_conjugacy(wx: &ArtinWord, wy: &ArtinWord) -> Result<ConjugacyOutcome> {
    if wx.strands() != wy.strands() {
        return Err(Error::StrandMismatch {
            left: wx.strands(),
            right: wy.strands(),
        });
    }
    let cx = classify(wx);
    let cy = classify(wy);
    if !cx.is_periodic() || !cy.is_periodic() {
        return Ok(ConjugacyOutcome::Fail(FailReason::NotPeriodic));
    }
    if cx != cy {
        return Ok(ConjugacyOutcome::Fail(FailReason::DifferentClasses(cx, cy)));
    }
    let (c1, c2) = match cx {
        PeriodicClass::DeltaPower(k) => (
            solve_delta_power(wx, k)?.conjugator,
            solve_delta_power(wy, k)?.conjugator,
        ),
        PeriodicClass::EpsilonPower(k) => (
            solve_epsilon_power(wx, k)?.conjugator,
            solve_epsilon_power(wy, k)?.conjugator,
        ),
        PeriodicClass::NonPeriodic => unreachable!("checked above"),
    };
    let conjugator = normal_form(&c1).mul(&normal_form(&c2).inverse());
    let check = normal_form(wx).conjugate_by(&conjugator);
    if check != normal_form(wy) {
        return Err(Error::VerificationFailed {
            what: "composed conjugator does not carry the first braid to the second".to_string(),
        });
    }
    Ok(ConjugacyOutcome::Conjugate(ConjugacyCertificate {
        target: cx,
        conjugator: classical::to_word(&conjugator),
        verified: true,
    }))
}
