//! Deterministic instance generation and the benchmark harness.
//!
//! Random braids are products of uniformly random simple elements drawn
//! from a fixed, documented generator (splitmix64 with rejection sampling
//! and Fisher-Yates), so a seed pins the instance set on every platform.
//! The harness builds conjugates of δ^k and ε^k, then times the ultra
//! summit baseline against the periodic solvers with a per-instance time
//! budget, emitting one CSV row per algorithm.

use crate::error::Result;
use crate::garside::classical::{normal_form, uss_conjugacy_search, PermBraid, UssBudget};
use crate::perm::Permutation;
use crate::solver::{solve_delta_power, solve_epsilon_power, ConjugacyCertificate};
use crate::word::ArtinWord;
use std::fmt;
use std::time::{Duration, Instant};

/// splitmix64: state advances by the golden-gamma constant, output is the
/// finalizer of the new state. Fixed here so seeds mean the same thing on
/// every platform and build.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform value in 0..bound via rejection sampling (no modulo bias).
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let r = self.next_u64();
            if r < zone {
                return r % bound;
            }
        }
    }

    /// Uniformly random permutation by Fisher-Yates.
    pub fn permutation(&mut self, n: usize) -> Permutation {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for i in (1..n).rev() {
            let j = self.next_below(i as u64 + 1) as usize;
            images.swap(i, j);
        }
        Permutation::from_raw(images)
    }
}

/// Product of `c` uniformly random simple elements, spelled as a positive
/// word; the same (n, c, seed) always yields the same word.
pub fn random_braid(n: usize, c: usize, seed: u64) -> ArtinWord {
    let mut rng = SplitMix64::new(seed);
    let mut out = ArtinWord::identity(n);
    for _ in 0..c {
        let simple = PermBraid::from_permutation(rng.permutation(n));
        out = out
            .concat(&simple.to_positive_word())
            .expect("same strand count");
    }
    out
}

/// Per-instance seed: decorrelates instances within a sample while staying
/// a pure function of the base seed.
pub fn instance_seed(base: u64, index: usize) -> u64 {
    base ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// One benchmark cell: sample construction and timing parameters.
#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub n: usize,
    pub k: i64,
    pub c: usize,
    pub samples: usize,
    pub seed: u64,
    /// Per-instance time budget; `None` disables timing entirely, which
    /// also makes the CSV output byte-identical across runs.
    pub budget: Option<Duration>,
    /// Advisory cap for the summit-set closure, in members.
    pub uss_member_cap: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            n: 4,
            k: 1,
            c: 10,
            samples: 100,
            seed: 0xB41D_5EED,
            budget: Some(Duration::from_secs(30)),
            uss_member_cap: 1 << 14,
        }
    }
}

/// Which solver a record measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgoTag {
    UssDelta,
    UssEpsilon,
    DeltaSolver,
    EpsilonSolver,
}

impl fmt::Display for AlgoTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgoTag::UssDelta => write!(f, "U-delta"),
            AlgoTag::UssEpsilon => write!(f, "U-epsilon"),
            AlgoTag::DeltaSolver => write!(f, "B"),
            AlgoTag::EpsilonSolver => write!(f, "C"),
        }
    }
}

/// Per-instance result status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceStatus {
    Ok,
    Timeout,
    Budget,
}

/// Aggregate of one (algorithm, n, k, c) cell. `total_time` counts only the
/// conjugator-search step, not sample construction.
#[derive(Debug, Clone)]
pub struct BenchRecord {
    pub algo: AlgoTag,
    pub n: usize,
    pub k: i64,
    pub c: usize,
    pub samples: usize,
    pub statuses: Vec<InstanceStatus>,
    pub total_time: Duration,
}

impl BenchRecord {
    pub fn ok_count(&self) -> usize {
        self.statuses
            .iter()
            .filter(|s| **s == InstanceStatus::Ok)
            .count()
    }

    pub fn failed_count(&self) -> usize {
        self.samples - self.ok_count()
    }
}

/// Exact CSV header for bench output.
pub const CSV_HEADER: &str = "algo,n,k,c,samples,ok,timeout,total_ms";

/// One CSV row; the timeout column counts every instance that missed its
/// time or size budget.
pub fn csv_row(r: &BenchRecord) -> String {
    format!(
        "{},{},{},{},{},{},{},{}",
        r.algo,
        r.n,
        r.k,
        r.c,
        r.samples,
        r.ok_count(),
        r.failed_count(),
        r.total_time.as_millis()
    )
}

pub fn write_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&csv_row(r));
        out.push('\n');
    }
    out
}

/// Independent certificate recheck: reduces C⁻¹ · x · C and the target to
/// normal form and compares, sharing nothing with the solver internals.
pub fn verify_certificate(x: &ArtinWord, cert: &ConjugacyCertificate) -> bool {
    let Some(target_word) = cert.target.target_word(x.strands()) else {
        return false;
    };
    match x.conjugate_by(&cert.conjugator) {
        Ok(conj) => normal_form(&conj) == normal_form(&target_word),
        Err(_) => false,
    }
}

/// The instance words of one sample: conjugates of target^k by random
/// braids, stored in left normal form (spelled canonically), so the timed
/// step is the conjugator search rather than the initial normalization.
pub fn build_sample(cfg: &BenchConfig, target: &ArtinWord) -> Vec<ArtinWord> {
    let power = target.power(cfg.k);
    (0..cfg.samples)
        .map(|i| {
            let z = random_braid(cfg.n, cfg.c, instance_seed(cfg.seed, i));
            let x = power.conjugate_by(&z).expect("same strand count");
            crate::garside::classical::to_word(&normal_form(&x))
        })
        .collect()
}

fn deadline_of(cfg: &BenchConfig) -> Option<Duration> {
    cfg.budget
}

fn run_uss_instances(
    cfg: &BenchConfig,
    algo: AlgoTag,
    instances: &[ArtinWord],
    target: &ArtinWord,
) -> BenchRecord {
    let timing = cfg.budget.is_some();
    let target_pow = target.power(cfg.k);
    let mut statuses = Vec::with_capacity(instances.len());
    let mut total = Duration::ZERO;
    for x in instances {
        let started = Instant::now();
        let budget = UssBudget {
            max_members: cfg.uss_member_cap,
            deadline: deadline_of(cfg).map(|d| started + d),
        };
        let outcome = uss_conjugacy_search(x, &target_pow, &budget);
        if timing {
            total += started.elapsed();
        }
        let status = match outcome {
            Ok(Some(c)) => {
                debug_assert_eq!(
                    normal_form(&x.conjugate_by(&c).expect("same strands")),
                    normal_form(&target_pow)
                );
                InstanceStatus::Ok
            }
            Ok(None) => InstanceStatus::Budget,
            Err(crate::error::Error::BudgetExceeded { .. }) => InstanceStatus::Timeout,
            Err(crate::error::Error::DeskScaleExceeded { .. }) => InstanceStatus::Budget,
            Err(_) => InstanceStatus::Budget,
        };
        statuses.push(status);
    }
    BenchRecord {
        algo,
        n: cfg.n,
        k: cfg.k,
        c: cfg.c,
        samples: cfg.samples,
        statuses,
        total_time: total,
    }
}

fn run_solver_instances(cfg: &BenchConfig, algo: AlgoTag, instances: &[ArtinWord]) -> BenchRecord {
    let timing = cfg.budget.is_some();
    let mut statuses = Vec::with_capacity(instances.len());
    let mut total = Duration::ZERO;
    for x in instances {
        let started = Instant::now();
        let outcome: Result<ConjugacyCertificate> = match algo {
            AlgoTag::DeltaSolver => solve_delta_power(x, cfg.k),
            AlgoTag::EpsilonSolver => solve_epsilon_power(x, cfg.k),
            _ => unreachable!("solver runner"),
        };
        let elapsed = started.elapsed();
        if timing {
            total += elapsed;
        }
        let status = match outcome {
            Ok(cert) => {
                debug_assert!(verify_certificate(x, &cert));
                match deadline_of(cfg) {
                    Some(budget) if elapsed > budget => InstanceStatus::Timeout,
                    _ => InstanceStatus::Ok,
                }
            }
            Err(_) => InstanceStatus::Budget,
        };
        statuses.push(status);
    }
    BenchRecord {
        algo,
        n: cfg.n,
        k: cfg.k,
        c: cfg.c,
        samples: cfg.samples,
        statuses,
        total_time: total,
    }
}

/// Run the protocol for one (n, k, c) cell restricted to the given
/// algorithms; samples are rebuilt identically from the seed per family.
pub fn bench_run_algos(cfg: &BenchConfig, algos: &[AlgoTag]) -> Vec<BenchRecord> {
    let delta = ArtinWord::delta(cfg.n);
    let epsilon = ArtinWord::epsilon(cfg.n);
    let mut delta_sample: Option<Vec<ArtinWord>> = None;
    let mut epsilon_sample: Option<Vec<ArtinWord>> = None;
    let mut records = Vec::new();
    for algo in algos {
        let record = match algo {
            AlgoTag::UssDelta | AlgoTag::DeltaSolver => {
                let sample = delta_sample.get_or_insert_with(|| build_sample(cfg, &delta));
                match algo {
                    AlgoTag::UssDelta => run_uss_instances(cfg, *algo, sample, &delta),
                    _ => run_solver_instances(cfg, *algo, sample),
                }
            }
            AlgoTag::UssEpsilon | AlgoTag::EpsilonSolver => {
                let sample = epsilon_sample.get_or_insert_with(|| build_sample(cfg, &epsilon));
                match algo {
                    AlgoTag::UssEpsilon => run_uss_instances(cfg, *algo, sample, &epsilon),
                    _ => run_solver_instances(cfg, *algo, sample),
                }
            }
        };
        records.push(record);
    }
    records
}

/// Run the full protocol for one (n, k, c) cell: build the δ^k and ε^k
/// samples, then measure the summit-set baseline and the periodic solvers
/// on each. Only the search step is timed. Instances that exceed the time
/// budget are recorded and the run continues.
pub fn bench_run(cfg: &BenchConfig) -> Vec<BenchRecord> {
    bench_run_algos(
        cfg,
        &[
            AlgoTag::UssDelta,
            AlgoTag::DeltaSolver,
            AlgoTag::UssEpsilon,
            AlgoTag::EpsilonSolver,
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::periodic::PeriodicClass;

    #[test]
    fn rng_is_stable() {
        // Frozen outputs of the documented generator.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        let mut rng = SplitMix64::new(42);
        assert_eq!(rng.next_u64(), 0xBDD7_3226_2FEB_6E95);
    }

    #[test]
    fn random_braid_is_deterministic() {
        let a = random_braid(6, 10, 12345);
        let b = random_braid(6, 10, 12345);
        assert_eq!(a, b);
        let c = random_braid(6, 10, 12346);
        assert_ne!(a, c);
    }

    #[test]
    fn random_braid_degenerate_and_bounds() {
        assert!(random_braid(5, 0, 7).is_empty());
        for seed in 0..20 {
            let n = 6;
            let c = 4;
            let w = random_braid(n, c, seed);
            assert!(w.len() <= c * n * (n - 1) / 2);
        }
    }

    #[test]
    fn certificate_verification_is_independent() {
        let x = ArtinWord::delta(4)
            .conjugate_by(&ArtinWord::parse("2 -1", 4).unwrap())
            .unwrap();
        let cert = solve_delta_power(&x, 1).unwrap();
        assert!(verify_certificate(&x, &cert));
        // Corrupt one letter: the recheck must fail.
        let mut letters: Vec<i32> = cert.conjugator.letters().to_vec();
        letters.push(1);
        let bad = ConjugacyCertificate {
            target: cert.target,
            conjugator: ArtinWord::new(4, letters).unwrap(),
            verified: true,
        };
        assert!(!verify_certificate(&x, &bad));
        // A wrong target class also fails.
        let wrong = ConjugacyCertificate {
            target: PeriodicClass::EpsilonPower(1),
            conjugator: cert.conjugator.clone(),
            verified: true,
        };
        assert!(!verify_certificate(&x, &wrong));
    }

    #[test]
    fn bench_cell_at_desk_scale() {
        let cfg = BenchConfig {
            n: 4,
            k: 1,
            c: 5,
            samples: 4,
            seed: 99,
            budget: None,
            ..BenchConfig::default()
        };
        let records = bench_run(&cfg);
        assert_eq!(records.len(), 4);
        for r in &records {
            assert_eq!(r.ok_count(), cfg.samples, "algo {} failed", r.algo);
        }
    }

    #[test]
    fn csv_format_is_exact() {
        assert_eq!(CSV_HEADER, "algo,n,k,c,samples,ok,timeout,total_ms");
        let rec = BenchRecord {
            algo: AlgoTag::DeltaSolver,
            n: 5,
            k: 2,
            c: 10,
            samples: 3,
            statuses: vec![
                InstanceStatus::Ok,
                InstanceStatus::Timeout,
                InstanceStatus::Ok,
            ],
            total_time: Duration::from_millis(7),
        };
        assert_eq!(csv_row(&rec), "B,5,2,10,3,2,1,7");
    }

    #[test]
    fn untimed_bench_output_is_reproducible() {
        let cfg = BenchConfig {
            n: 4,
            k: 1,
            c: 3,
            samples: 3,
            seed: 5,
            budget: None,
            ..BenchConfig::default()
        };
        let a = write_csv(&bench_run(&cfg));
        let b = write_csv(&bench_run(&cfg));
        assert_eq!(a, b);
    }
}
