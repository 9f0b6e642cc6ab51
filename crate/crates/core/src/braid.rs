//! Braid words: `±i` stands for the generator `σ_i^{±1}` acting on strand
//! positions `i-1` and `i` (numbered from zero, left to right).

use itertools::Itertools;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strand_count: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Builds a word on `strand_count` strands. Letters must be nonzero and
    /// satisfy `|letter| < strand_count`.
    pub fn new(strand_count: usize, letters: Vec<i32>) -> Result<Self, ParseError> {
        if strand_count == 0 {
            return Err(ParseError::BraidLetter("zero strands".into()));
        }
        for &l in &letters {
            if l == 0 {
                return Err(ParseError::ZeroLetter);
            }
            if l.unsigned_abs() as usize >= strand_count {
                return Err(ParseError::BraidLetter(format!(
                    "{l} needs more than {strand_count} strands"
                )));
            }
        }
        Ok(BraidWord {
            strand_count,
            letters,
        })
    }

    /// The smallest strand count that fits `letters`.
    pub fn minimal(letters: Vec<i32>) -> Result<Self, ParseError> {
        let b = 1 + letters
            .iter()
            .map(|l| l.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        Self::new(b, letters)
    }

    pub fn strand_count(&self) -> usize {
        self.strand_count
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

    pub fn mirror(&self) -> Self {
        BraidWord {
            strand_count: self.strand_count,
            letters: self.letters.iter().map(|l| -l).collect(),
        }
    }

    /// Cyclic rotation by `k` letters (a conjugation).
    pub fn rotate(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let n = letters.len();
            letters.rotate_left(k % n);
        }
        BraidWord {
            strand_count: self.strand_count,
            letters,
        }
    }

    /// Markov stabilization: adds a strand on the right and the letter `±b`.
    pub fn stabilize(&self, positive: bool) -> Self {
        let b = self.strand_count as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { b } else { -b });
        BraidWord {
            strand_count: self.strand_count + 1,
            letters,
        }
    }

    /// Strand permutation: `perm[p]` is where the strand entering at the top of
    /// position `p` leaves the bottom.
    pub fn permutation(&self) -> Vec<usize> {
        permutation(self.strand_count, &self.letters)
    }

    pub fn component_count(&self) -> usize {
        cycle_count(&self.permutation())
    }
}

pub(crate) fn permutation(strands: usize, letters: &[i32]) -> Vec<usize> {
    // at[p] = original top position of the strand currently at p
    let mut at: Vec<usize> = (0..strands).collect();
    for &l in letters {
        let p = l.unsigned_abs() as usize - 1;
        at.swap(p, p + 1);
    }
    let mut perm = vec![0; strands];
    for (bottom, &top) in at.iter().enumerate() {
        perm[top] = bottom;
    }
    perm
}

pub(crate) fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut n = 0;
    for s in 0..perm.len() {
        if !seen[s] {
            n += 1;
            let mut p = s;
            while !seen[p] {
                seen[p] = true;
                p = perm[p];
            }
        }
    }
    n
}

/// Parses whitespace-separated signed integers. Empty text is the trivial
/// one-strand braid.
pub fn parse_braid(text: &str) -> Result<BraidWord, ParseError> {
    let letters = text
        .split_whitespace()
        .map(|t| {
            let l: i32 = t
                .parse()
                .map_err(|_| ParseError::BraidLetter(t.to_string()))?;
            if l == 0 {
                Err(ParseError::ZeroLetter)
            } else {
                Ok(l)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    BraidWord::minimal(letters)
}

impl FromStr for BraidWord {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_braid(s)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letters.iter().format(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let w = parse_braid("1 1 1").unwrap();
        assert_eq!((w.strand_count(), w.letters()), (2, &[1, 1, 1][..]));
        let w = parse_braid("1 -2").unwrap();
        assert_eq!((w.strand_count(), w.letters()), (3, &[1, -2][..]));
        let w = parse_braid("").unwrap();
        assert_eq!((w.strand_count(), w.len()), (1, 0));
    }

    #[test]
    fn rejects_bad_tokens() {
        assert_eq!(parse_braid("1 0"), Err(ParseError::ZeroLetter));
        assert!(matches!(
            parse_braid("1 x"),
            Err(ParseError::BraidLetter(_))
        ));
        assert!(BraidWord::new(2, vec![2]).is_err());
    }

    #[test]
    fn components() {
        assert_eq!(parse_braid("1 1 1").unwrap().component_count(), 1);
        assert_eq!(parse_braid("1 1").unwrap().component_count(), 2);
        assert_eq!(BraidWord::new(3, vec![]).unwrap().component_count(), 3);
        assert_eq!(parse_braid("1 -2 1 -2").unwrap().component_count(), 1);
    }
}
