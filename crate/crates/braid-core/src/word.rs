//! Free words over the three generating sets in play: Artin generators of
//! the braid group, band generators of its dual presentation, and the
//! standard generators of the type-B Artin-Tits group.
//!
//! Text formats are bit-exact contracts. Artin words are whitespace-separated
//! signed integers, `1 -2 1` meaning σ1 σ2⁻¹ σ1; rendering emits no leading
//! `+`, single spaces, and no trailing whitespace. Band words use `t:s`
//! tokens with an optional leading `-`, e.g. `3:1 -2:1`.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use std::fmt;

/// A word in the Artin generators σ1..σ_{n−1} and their inverses.
///
/// The empty word is the identity braid. Letters are stored as nonzero
/// signed indices: `i` for σ_i, `-i` for σ_i⁻¹.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArtinWord {
    strands: usize,
    letters: Vec<i32>,
}

impl ArtinWord {
    pub fn identity(strands: usize) -> Self {
        ArtinWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::IndexOutOfRange {
                    index: l as i64,
                    strands,
                });
            }
        }
        Ok(ArtinWord { strands, letters })
    }

    /// Parse the whitespace-separated signed-integer format.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let v: i32 = token.parse().map_err(|_| Error::MalformedToken {
                token: token.to_string(),
            })?;
            if v == 0 || v.unsigned_abs() as usize >= strands {
                return Err(Error::IndexOutOfRange {
                    index: v as i64,
                    strands,
                });
            }
            letters.push(v);
        }
        Ok(ArtinWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: i32) {
        debug_assert!(letter != 0 && (letter.unsigned_abs() as usize) < self.strands);
        self.letters.push(letter);
    }

    /// Concatenation; both words must live in the same braid group.
    pub fn concat(&self, other: &ArtinWord) -> Result<ArtinWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(ArtinWord {
            strands: self.strands,
            letters,
        })
    }

    /// Reversed sequence with flipped signs; `w · w.inverse()` is freely
    /// reducible to the empty word.
    pub fn inverse(&self) -> ArtinWord {
        ArtinWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// Cancel adjacent σ_i σ_i⁻¹ pairs until none remain.
    pub fn free_reduce(&self) -> ArtinWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        ArtinWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// Signed letter count. Invariant under the defining relations and under
    /// conjugation, so it is a conjugacy invariant of the braid.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// The permutation induced on punctures, letters acting left to right.
    pub fn permutation(&self) -> Permutation {
        let n = self.strands;
        let mut images: Vec<u32> = (0..n as u32).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            // σ_i and σ_i⁻¹ induce the same transposition of punctures.
            for v in images.iter_mut() {
                if *v == i as u32 {
                    *v = i as u32 + 1;
                } else if *v == i as u32 + 1 {
                    *v = i as u32;
                }
            }
        }
        Permutation::from_raw(images)
    }

    /// σ_{[i→j]}: the shortest positive braid sending puncture `from` to
    /// puncture `to`. Ascending σ_i σ_{i+1} ⋯ σ_{j−1} when `from < to`,
    /// descending σ_{j−1} σ_{j−2} ⋯ σ_i when `from > to`, and the empty word
    /// when the punctures coincide.
    pub fn sigma_run(from: usize, to: usize, strands: usize) -> Result<Self> {
        if from < 1 || from > strands || to < 1 || to > strands {
            return Err(Error::IndexOutOfRange {
                index: from.max(to) as i64,
                strands,
            });
        }
        let letters: Vec<i32> = if from < to {
            (from..to).map(|i| i as i32).collect()
        } else {
            (to..from).rev().map(|i| i as i32).collect()
        };
        Ok(ArtinWord { strands, letters })
    }

    /// The rotation braid δ = σ_{n−1} σ_{n−2} ⋯ σ1.
    pub fn delta(strands: usize) -> Self {
        ArtinWord {
            strands,
            letters: (1..strands).rev().map(|i| i as i32).collect(),
        }
    }

    /// The rotation braid ε = σ1 (σ_{n−1} σ_{n−2} ⋯ σ1); it fixes puncture 2.
    pub fn epsilon(strands: usize) -> Self {
        let mut letters = vec![1];
        letters.extend((1..strands).rev().map(|i| i as i32));
        ArtinWord { strands, letters }
    }

    /// `self` repeated `k` times (inverted first when `k < 0`).
    pub fn power(&self, k: i64) -> ArtinWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(self.letters.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        ArtinWord {
            strands: self.strands,
            letters,
        }
    }

    /// `c⁻¹ · self · c`.
    pub fn conjugate_by(&self, c: &ArtinWord) -> Result<ArtinWord> {
        c.inverse().concat(self)?.concat(c)
    }
}

impl fmt::Display for ArtinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// One band generator or its inverse: `a_{t s}` with 1 ≤ s < t ≤ m swaps
/// punctures s and t in front of all others.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BandLetter {
    pub t: usize,
    pub s: usize,
    pub positive: bool,
}

impl BandLetter {
    pub fn inverse(self) -> BandLetter {
        BandLetter {
            positive: !self.positive,
            ..self
        }
    }
}

/// A word in the band generators of the dual presentation on `m` punctures.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BandWord {
    points: usize,
    letters: Vec<BandLetter>,
}

impl BandWord {
    pub fn identity(points: usize) -> Self {
        BandWord {
            points,
            letters: Vec::new(),
        }
    }

    pub fn new(points: usize, letters: Vec<BandLetter>) -> Result<Self> {
        for l in &letters {
            if l.s < 1 || l.s >= l.t || l.t > points {
                return Err(Error::IndexOutOfRange {
                    index: l.t as i64,
                    strands: points,
                });
            }
        }
        Ok(BandWord { points, letters })
    }

    /// Parse the `t:s` token format, `-t:s` for an inverse letter.
    pub fn parse(text: &str, points: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let malformed = || Error::MalformedToken {
                token: token.to_string(),
            };
            let (positive, body) = match token.strip_prefix('-') {
                Some(rest) => (false, rest),
                None => (true, token),
            };
            let (t_str, s_str) = body.split_once(':').ok_or_else(malformed)?;
            let t: usize = t_str.parse().map_err(|_| malformed())?;
            let s: usize = s_str.parse().map_err(|_| malformed())?;
            if s < 1 || s >= t || t > points {
                return Err(Error::IndexOutOfRange {
                    index: t as i64,
                    strands: points,
                });
            }
            letters.push(BandLetter { t, s, positive });
        }
        Ok(BandWord { points, letters })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn letters(&self) -> &[BandLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: BandLetter) {
        debug_assert!(letter.s >= 1 && letter.s < letter.t && letter.t <= self.points);
        self.letters.push(letter);
    }

    pub fn concat(&self, other: &BandWord) -> Result<BandWord> {
        if self.points != other.points {
            return Err(Error::StrandMismatch {
                left: self.points,
                right: other.points,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BandWord {
            points: self.points,
            letters,
        })
    }

    pub fn inverse(&self) -> BandWord {
        BandWord {
            points: self.points,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Signed letter count.
    pub fn exponent_sum(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| if l.positive { 1i64 } else { -1 })
            .sum()
    }

    /// The permutation induced on punctures (each letter swaps s and t).
    pub fn permutation(&self) -> Permutation {
        let m = self.points;
        let mut images: Vec<u32> = (0..m as u32).collect();
        for l in &self.letters {
            let (a, b) = (l.s as u32 - 1, l.t as u32 - 1);
            for v in images.iter_mut() {
                if *v == a {
                    *v = b;
                } else if *v == b {
                    *v = a;
                }
            }
        }
        Permutation::from_raw(images)
    }

    /// The rotation word δ = a_{m,m−1} a_{m−1,m−2} ⋯ a_{2,1}.
    pub fn delta(points: usize) -> Self {
        BandWord {
            points,
            letters: (1..points)
                .rev()
                .map(|s| BandLetter {
                    t: s + 1,
                    s,
                    positive: true,
                })
                .collect(),
        }
    }
}

impl fmt::Display for BandWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            if !l.positive {
                write!(f, "-")?;
            }
            write!(f, "{}:{}", l.t, l.s)?;
            first = false;
        }
        Ok(())
    }
}

/// A word in the generators s_1..s_rank of the Artin-Tits group of type B.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TypeBWord {
    rank: usize,
    letters: Vec<i32>,
}

impl TypeBWord {
    pub fn identity(rank: usize) -> Self {
        TypeBWord {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn new(rank: usize, letters: Vec<i32>) -> Result<Self> {
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(Error::IndexOutOfRange {
                    index: l as i64,
                    strands: rank,
                });
            }
        }
        Ok(TypeBWord { rank, letters })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn inverse(&self) -> TypeBWord {
        TypeBWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }
}
