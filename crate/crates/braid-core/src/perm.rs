//! Permutations of punctures.
//!
//! Braids act on punctures from the right: the word `σ1 σ2` first swaps
//! punctures 1 and 2, then punctures 2 and 3, so its permutation is the
//! cycle (1 3 2). Tables are stored 0-indexed; every public accessor and all
//! rendered text use the 1-indexed puncture numbering.

use crate::error::{Error, Result};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    /// Transposition of punctures `a` and `b` (1-indexed).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        debug_assert!(a != b && 1 <= a && a <= n && 1 <= b && b <= n);
        let mut images: Vec<u32> = (0..n as u32).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    /// Build from a 1-indexed image table: entry `i` holds π(i+1).
    pub fn from_one_based(table: &[usize]) -> Result<Self> {
        let n = table.len();
        let mut seen = vec![false; n];
        for &v in table {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation);
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: table.iter().map(|&v| (v - 1) as u32).collect(),
        })
    }

    /// Build from disjoint cycles written with 1-indexed punctures; points
    /// not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (idx, &p) in cycle.iter().enumerate() {
                if p < 1 || p > n {
                    return Err(Error::InvalidPermutation);
                }
                if seen[p - 1] {
                    return Err(Error::InvalidPermutation);
                }
                seen[p - 1] = true;
                let q = cycle[(idx + 1) % cycle.len()];
                images[p - 1] = (q - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// π(i), 1-indexed.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// Apply `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.size(), other.size());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&v| other.images[v as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u32;
        }
        Permutation { images }
    }

    /// Fixed punctures, 1-indexed ascending.
    pub fn fixed_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i as u32 == v)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Nontrivial cycles, each rotated to start at its minimum, ordered by
    /// that minimum. Punctures 1-indexed.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.images[cur] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Number of inversions: pairs i < j with π(i) > π(j).
    pub fn inversions(&self) -> usize {
        let n = self.size();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub(crate) fn images(&self) -> &[u32] {
        &self.images
    }

    pub(crate) fn images_mut(&mut self) -> &mut Vec<u32> {
        &mut self.images
    }

    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &v in &self.images {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_right_action() {
        // σ1 then σ2 gives the cycle (1 3 2).
        let s1 = Permutation::transposition(3, 1, 2);
        let s2 = Permutation::transposition(3, 2, 3);
        let p = s1.then(&s2);
        assert_eq!(p.image(1), 3);
        assert_eq!(p.image(3), 2);
        assert_eq!(p.image(2), 1);
    }

    #[test]
    fn inverse_round_trip() {
        let p = Permutation::from_one_based(&[3, 1, 4, 2]).unwrap();
        assert!(p.then(&p.inverse()).is_identity());
        assert!(p.inverse().then(&p).is_identity());
    }

    #[test]
    fn cycles_are_canonical() {
        let p = Permutation::from_one_based(&[2, 1, 3, 5, 4]).unwrap();
        assert_eq!(p.cycles(), vec![vec![1, 2], vec![4, 5]]);
        assert_eq!(p.fixed_points(), vec![3]);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_one_based(&[1, 1, 3]).is_err());
        assert!(Permutation::from_one_based(&[0, 1, 2]).is_err());
    }

    #[test]
    fn display_is_one_indexed() {
        let p = Permutation::from_one_based(&[3, 2, 1]).unwrap();
        assert_eq!(p.to_string(), "3 2 1");
    }
}
