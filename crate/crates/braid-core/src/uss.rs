//! Closed-form descriptions of the ultra summit sets of the rotation braids
//! δ and ε, read off the permutations of their simple conjugates.
//!
//! A simple element lies in USS(δ) exactly when its permutation is a cycle
//! (1 u_1 ⋯ u_r n d_t ⋯ d_1) with u_1 < ⋯ < u_r and d_t > ⋯ > d_1, and then
//! α = σ_{[d_1→1]} σ_{[d_2→1]} ⋯ σ_{[d_t→1]} conjugates it to δ. For ε the
//! permutation has in addition a single fixed point a ∉ {1, n}, and the
//! conjugator gains a final run σ_{[b→2]} with b = a + t − max{i : d_i < a}
//! (the maximum over the empty set being 0). Membership is decided purely on
//! the permutation; these predicates also count the sets: #USS(δ) = 2^{n−2}
//! and #USS(ε) = (n−2)·2^{n−3}.

use crate::error::{Error, Result};
use crate::garside::classical::PermBraid;
use crate::perm::Permutation;
use crate::word::ArtinWord;

/// The u/d-pattern of a member of USS(δ): the cycle
/// (1 u_1 ⋯ u_r n d_t ⋯ d_1) with ascending u's and descending d's,
/// r + t + 2 = n. `ds` is stored as d_1 < d_2 < ⋯ < d_t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaUssPattern {
    pub n: usize,
    pub us: Vec<usize>,
    pub ds: Vec<usize>,
}

/// The pattern of a member of USS(ε): a fixed point a ∉ {1, n} together
/// with the (n−1)-cycle (1 u_1 ⋯ u_r n d_t ⋯ d_1), r + t + 3 = n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonUssPattern {
    pub n: usize,
    pub fixed: usize,
    pub us: Vec<usize>,
    pub ds: Vec<usize>,
}

/// Split the cycle through 1 into the ascending run before n and the
/// descending run after it. The cycle is walked from 1; it must visit n.
fn split_cycle(
    perm: &Permutation,
    n: usize,
    expected_len: usize,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut walk = Vec::with_capacity(expected_len);
    let mut cur = 1;
    loop {
        walk.push(cur);
        cur = perm.image(cur);
        if cur == 1 {
            break;
        }
        if walk.len() > expected_len {
            return None;
        }
    }
    if walk.len() != expected_len {
        return None;
    }
    let pos_n = walk.iter().position(|&p| p == n)?;
    let us = walk[1..pos_n].to_vec();
    // After n the cycle reads d_t, d_{t−1}, …, d_1.
    let mut ds = walk[pos_n + 1..].to_vec();
    if !us.windows(2).all(|w| w[0] < w[1]) {
        return None;
    }
    if !ds.windows(2).all(|w| w[0] > w[1]) {
        return None;
    }
    ds.reverse(); // store ascending: d_1 < ⋯ < d_t
    Some((us, ds))
}

/// Pattern of a member of USS(δ), or None when `s` is not one.
pub fn uss_delta_member(s: &PermBraid) -> Option<DeltaUssPattern> {
    let n = s.strands();
    let perm = s.permutation();
    if n < 2 || perm.image(1) == 1 {
        return None;
    }
    let (us, ds) = split_cycle(perm, n, n)?;
    Some(DeltaUssPattern { n, us, ds })
}

/// Pattern of a member of USS(ε), or None when `s` is not one. The fixed
/// point must be unique and different from 1 and n.
pub fn uss_epsilon_member(s: &PermBraid) -> Option<EpsilonUssPattern> {
    let n = s.strands();
    let perm = s.permutation();
    if n < 3 {
        return None;
    }
    let fixed = perm.fixed_points();
    if fixed.len() != 1 {
        return None;
    }
    let a = fixed[0];
    if a == 1 || a == n {
        return None;
    }
    let (us, ds) = split_cycle(perm, n, n - 1)?;
    Some(EpsilonUssPattern {
        n,
        fixed: a,
        us,
        ds,
    })
}

/// α = σ_{[d_1→1]} σ_{[d_2→1]} ⋯ σ_{[d_t→1]}; it satisfies α⁻¹ s α = δ and
/// is itself a simple element.
pub fn conjugator_to_delta(p: &DeltaUssPattern) -> ArtinWord {
    let mut w = ArtinWord::identity(p.n);
    for &d in &p.ds {
        w = w
            .concat(&ArtinWord::sigma_run(d, 1, p.n).expect("in range"))
            .expect("same strand count");
    }
    w
}

/// The landing point of the fixed puncture after the d-runs:
/// b = a + t − max{i : d_i < a}, an empty maximum counting as 0.
pub fn epsilon_landing_point(p: &EpsilonUssPattern) -> usize {
    let t = p.ds.len();
    let below = p.ds.iter().filter(|&&d| d < p.fixed).count();
    p.fixed + t - below
}

/// β = σ_{[d_1→1]} ⋯ σ_{[d_t→1]} σ_{[b→2]}; it satisfies β⁻¹ s β = ε and is
/// a product of at most two simple elements.
pub fn conjugator_to_epsilon(p: &EpsilonUssPattern) -> ArtinWord {
    let n = p.n;
    let mut w = ArtinWord::identity(n);
    for &d in &p.ds {
        w = w
            .concat(&ArtinWord::sigma_run(d, 1, n).expect("in range"))
            .expect("same strand count");
    }
    let b = epsilon_landing_point(p);
    w.concat(&ArtinWord::sigma_run(b, 2, n).expect("in range"))
        .expect("same strand count")
}

/// Which of the two rotation-braid families to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RotationFamily {
    Delta,
    Epsilon,
}

impl std::str::FromStr for RotationFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "delta" => Ok(RotationFamily::Delta),
            "epsilon" => Ok(RotationFamily::Epsilon),
            other => Err(Error::MalformedToken {
                token: other.to_string(),
            }),
        }
    }
}

fn delta_member_from_choice(n: usize, us: &[usize]) -> PermBraid {
    // Cycle (1 u_1 ⋯ u_r n d_t ⋯ d_1) with the d's the complement of the
    // u's in {2..n−1}, read descending after n.
    let ds_desc: Vec<usize> = (2..n).rev().filter(|p| !us.contains(p)).collect();
    let mut cycle = Vec::with_capacity(n);
    cycle.push(1);
    cycle.extend_from_slice(us);
    cycle.push(n);
    cycle.extend_from_slice(&ds_desc);
    PermBraid::from_permutation(Permutation::from_cycles(n, &[cycle]).expect("disjoint"))
}

fn epsilon_member_from_choice(n: usize, a: usize, us: &[usize]) -> PermBraid {
    let ds_desc: Vec<usize> = (2..n)
        .rev()
        .filter(|p| *p != a && !us.contains(p))
        .collect();
    let mut cycle = Vec::with_capacity(n - 1);
    cycle.push(1);
    cycle.extend_from_slice(us);
    cycle.push(n);
    cycle.extend_from_slice(&ds_desc);
    PermBraid::from_permutation(Permutation::from_cycles(n, &[cycle]).expect("disjoint"))
}

/// Enumerate the full ultra summit set of δ or ε by walking the pattern
/// choices: subsets of {2..n−1} for the ascending run, plus the fixed point
/// for the ε family. Combinatorial in the pattern, not in n! permutations;
/// capped at desk scale.
pub fn enumerate_uss(n: usize, family: RotationFamily) -> Result<Vec<PermBraid>> {
    const MAX_N: usize = 12;
    if n > MAX_N {
        return Err(Error::DeskScaleExceeded {
            what: format!("pattern enumeration is capped at {MAX_N} strands, got {n}"),
        });
    }
    let min = match family {
        RotationFamily::Delta => 2,
        RotationFamily::Epsilon => 3,
    };
    if n < min {
        return Err(Error::TooFewStrands { got: n, min });
    }
    let interior: Vec<usize> = (2..n).collect();
    let mut out = Vec::new();
    match family {
        RotationFamily::Delta => {
            for mask in 0u64..(1 << interior.len()) {
                let us: Vec<usize> = interior
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                out.push(delta_member_from_choice(n, &us));
            }
        }
        RotationFamily::Epsilon => {
            for &a in &interior {
                let rest: Vec<usize> = interior.iter().copied().filter(|&p| p != a).collect();
                for mask in 0u64..(1 << rest.len()) {
                    let us: Vec<usize> = rest
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &p)| p)
                        .collect();
                    out.push(epsilon_member_from_choice(n, a, &us));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}
