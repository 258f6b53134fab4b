//! Shared test oracles, deliberately independent of the production
//! normal-form machinery: a rewriting-closure normal form for tiny positive
//! words, exhaustive generators for permutations and non-crossing
//! partitions, and random relation rewriters.

#![allow(dead_code)]

use braid_core::garside::band::Ncp;
use braid_core::harness::SplitMix64;
use braid_core::perm::Permutation;
use braid_core::word::{ArtinWord, BandLetter, BandWord};
use std::collections::{BTreeSet, VecDeque};

/// All words obtainable from a positive word by the defining relations
/// (braid moves and far commutations). Exponential; keep inputs tiny.
pub fn positive_word_closure(word: &[usize], n: usize) -> BTreeSet<Vec<usize>> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    seen.insert(word.to_vec());
    queue.push_back(word.to_vec());
    while let Some(w) = queue.pop_front() {
        for i in 0..w.len().saturating_sub(1) {
            let (a, b) = (w[i], w[i + 1]);
            if a.abs_diff(b) > 1 {
                let mut next = w.clone();
                next.swap(i, i + 1);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        for i in 0..w.len().saturating_sub(2) {
            let (a, b, c) = (w[i], w[i + 1], w[i + 2]);
            if a == c && a.abs_diff(b) == 1 {
                let mut next = w.clone();
                next[i] = b;
                next[i + 1] = a;
                next[i + 2] = b;
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let _ = n;
    }
    seen
}

fn prefix_simple_len(word: &[usize], n: usize) -> usize {
    // Longest initial segment in which no pair of strands crosses twice.
    let mut crossed = vec![false; n * n];
    let mut perm: Vec<usize> = (0..n).collect(); // position -> strand
    for (idx, &letter) in word.iter().enumerate() {
        let i = letter - 1;
        let (a, b) = (perm[i], perm[i + 1]);
        let key = a.min(b) * n + a.max(b);
        if crossed[key] {
            return idx;
        }
        crossed[key] = true;
        perm.swap(i, i + 1);
    }
    word.len()
}

/// Left normal form of a positive word by brute force: over the whole
/// rewriting closure, take the longest simple literal prefix (the maximal
/// simple prefix is always realized literally), split it off, and recurse.
/// Returns the Δ-power and the factor permutations, 1-indexed image tables.
pub fn naive_normal_form(word: &[usize], n: usize) -> (i64, Vec<Vec<usize>>) {
    let mut rest: Vec<usize> = word.to_vec();
    let mut factors: Vec<Vec<usize>> = Vec::new();
    while !rest.is_empty() {
        let closure = positive_word_closure(&rest, n);
        let (best_len, best_word) = closure
            .iter()
            .map(|w| (prefix_simple_len(w, n), w))
            .max_by_key(|(len, _)| *len)
            .expect("nonempty closure");
        let head = &best_word[..best_len];
        let perm = artin_positive_permutation(head, n);
        factors.push(perm);
        rest = best_word[best_len..].to_vec();
    }
    // Leading Δ factors fold into the power.
    let delta: Vec<usize> = (1..=n).rev().collect();
    let mut p = 0i64;
    let mut tail = factors;
    while tail.first().is_some_and(|f| *f == delta) {
        p += 1;
        tail.remove(0);
    }
    (p, tail)
}

fn artin_positive_permutation(word: &[usize], n: usize) -> Vec<usize> {
    let mut images: Vec<usize> = (1..=n).collect();
    for &letter in word {
        for v in images.iter_mut() {
            if *v == letter {
                *v = letter + 1;
            } else if *v == letter + 1 {
                *v = letter;
            }
        }
    }
    images
}

/// All permutations of n points (n! of them; keep n small).
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (1..=n).collect();
    permute(&mut items, 0, &mut out);
    out
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Permutation>) {
    if k == items.len() {
        out.push(Permutation::from_one_based(items).expect("bijection"));
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

/// All non-crossing partitions on m points, via set-partition enumeration
/// filtered by the validity check of the public constructor.
pub fn all_ncps(m: usize) -> Vec<Ncp> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn recurse(p: usize, m: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Ncp>) {
        if p > m {
            if let Ok(ncp) = Ncp::from_blocks(m, blocks) {
                out.push(ncp);
            }
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(p);
            recurse(p + 1, m, blocks, out);
            blocks[i].pop();
        }
        blocks.push(vec![p]);
        recurse(p + 1, m, blocks, out);
        blocks.pop();
    }
    recurse(1, m, &mut blocks, &mut out);
    out
}

/// Apply `count` random defining-relation rewrites (far commutations at any
/// signs, braid moves on all-positive or all-negative triples). The result
/// spells the same group element.
pub fn rewrite_artin(w: &ArtinWord, rng: &mut SplitMix64, count: usize) -> ArtinWord {
    let mut letters: Vec<i32> = w.letters().to_vec();
    for _ in 0..count {
        let mut moves: Vec<(usize, bool)> = Vec::new();
        for i in 0..letters.len().saturating_sub(1) {
            let (a, b) = (letters[i], letters[i + 1]);
            if a.unsigned_abs().abs_diff(b.unsigned_abs()) > 1 {
                moves.push((i, false));
            }
        }
        for i in 0..letters.len().saturating_sub(2) {
            let (a, b, c) = (letters[i], letters[i + 1], letters[i + 2]);
            let same_sign = a.signum() == b.signum() && b.signum() == c.signum();
            if same_sign && a == c && a.unsigned_abs().abs_diff(b.unsigned_abs()) == 1 {
                moves.push((i, true));
            }
        }
        if moves.is_empty() {
            break;
        }
        let (i, braid_move) = moves[rng.next_below(moves.len() as u64) as usize];
        if braid_move {
            let (a, b) = (letters[i], letters[i + 1]);
            letters[i] = b;
            letters[i + 1] = a;
            letters[i + 2] = b;
        } else {
            letters.swap(i, i + 1);
        }
    }
    ArtinWord::new(w.strands(), letters).expect("letters stay in range")
}

/// Random band-word rewrites: far commutations (any signs, using the
/// four-corner disjointness test) and the positive triple rotations
/// a_{ts} a_{sr} → a_{tr} a_{ts} → a_{sr} a_{tr} → a_{ts} a_{sr}.
pub fn rewrite_band(w: &BandWord, rng: &mut SplitMix64, count: usize) -> BandWord {
    let commute = |x: BandLetter, y: BandLetter| -> bool {
        let (t, s, r, q) = (x.t as i64, x.s as i64, y.t as i64, y.s as i64);
        (t - r) * (t - q) * (s - r) * (s - q) > 0
    };
    let mut letters: Vec<BandLetter> = w.letters().to_vec();
    for _ in 0..count {
        let mut moves: Vec<(usize, usize)> = Vec::new();
        for i in 0..letters.len().saturating_sub(1) {
            let (x, y) = (letters[i], letters[i + 1]);
            if commute(x, y) {
                moves.push((i, 0));
            }
            if x.positive && y.positive {
                // a_{ts} a_{sr} with r < s < t rotates forward.
                if x.s == y.t {
                    moves.push((i, 1));
                }
                // a_{tr} a_{ts} with r < s rotates to a_{sr} a_{tr}.
                if x.t == y.t && x.s < y.s {
                    moves.push((i, 2));
                }
                // a_{sr} a_{tr} rotates back to a_{ts} a_{sr}.
                if x.s == y.s && x.t < y.t {
                    moves.push((i, 3));
                }
            }
        }
        if moves.is_empty() {
            break;
        }
        let (i, kind) = moves[rng.next_below(moves.len() as u64) as usize];
        let (x, y) = (letters[i], letters[i + 1]);
        let pos = |t: usize, s: usize| BandLetter {
            t,
            s,
            positive: true,
        };
        match kind {
            0 => letters.swap(i, i + 1),
            1 => {
                // (t,s)(s,r) → (t,r)(t,s)
                letters[i] = pos(x.t, y.s);
                letters[i + 1] = pos(x.t, x.s);
            }
            2 => {
                // (t,r)(t,s) → (s,r)(t,r)
                letters[i] = pos(y.s, x.s);
                letters[i + 1] = pos(x.t, x.s);
            }
            _ => {
                // (s,r)(t,r) → (t,s)(s,r)
                letters[i] = pos(y.t, x.t);
                letters[i + 1] = pos(x.t, x.s);
            }
        }
    }
    BandWord::new(w.points(), letters).expect("letters stay in range")
}

/// Uniformly random signed Artin word.
pub fn random_artin_word(n: usize, len: usize, rng: &mut SplitMix64) -> ArtinWord {
    let letters: Vec<i32> = (0..len)
        .map(|_| {
            let i = rng.next_below(n as u64 - 1) as i32 + 1;
            if rng.next_below(2) == 0 {
                i
            } else {
                -i
            }
        })
        .collect();
    ArtinWord::new(n, letters).expect("in range")
}

/// Uniformly random signed band word.
pub fn random_band_word(m: usize, len: usize, rng: &mut SplitMix64) -> BandWord {
    let letters: Vec<BandLetter> = (0..len)
        .map(|_| {
            let t = rng.next_below(m as u64 - 1) as usize + 2;
            let s = rng.next_below(t as u64 - 1) as usize + 1;
            BandLetter {
                t,
                s,
                positive: rng.next_below(2) == 0,
            }
        })
        .collect();
    BandWord::new(m, letters).expect("in range")
}
