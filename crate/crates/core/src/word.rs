//! Reduced words in the free group on the marked generators.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Reduced word as signed 1-based generator indices: letter `i` is the i-th
/// generator, `-i` its inverse. No adjacent cancelling pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<i32>,
}

impl Word {
    pub fn empty() -> Word {
        Word { letters: Vec::new() }
    }

    pub fn new(letters: Vec<i32>) -> Result<Word> {
        for (i, w) in letters.windows(2).enumerate() {
            if w[0] == -w[1] {
                return Err(Error::NotReduced(i));
            }
        }
        if letters.iter().any(|&l| l == 0) {
            return Err(Error::BadIndex { letter: 0, rank: 0 });
        }
        Ok(Word { letters })
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

    /// Word with the last letter removed.
    pub fn parent(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.pop();
        Word { letters }
    }

    pub fn push(&self, letter: i32) -> Result<Word> {
        let mut letters = self.letters.clone();
        letters.push(letter);
        Word::new(letters)
    }

    /// Concatenation with free reduction across the seam.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            if letters.last() == Some(&-l) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|&l| -l).collect() }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join("."))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let letters = s
            .split('.')
            .map(|p| p.parse::<i32>().map_err(|_| Error::BadIndex { letter: 0, rank: 0 }))
            .collect::<Result<Vec<i32>>>()?;
        Word::new(letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unreduced() {
        assert!(matches!(Word::new(vec![1, -1]), Err(Error::NotReduced(0))));
        assert!(Word::new(vec![1, 2, -1]).is_ok());
    }

    #[test]
    fn concat_reduces_across_seam() {
        let u = Word::new(vec![1, 2]).unwrap();
        let v = Word::new(vec![-2, -1, 3]).unwrap();
        assert_eq!(u.concat(&v), Word::new(vec![3]).unwrap());
        assert!(u.concat(&u.inverse()).is_empty());
    }

    #[test]
    fn display_round_trip() {
        let w = Word::new(vec![1, -2, 1]).unwrap();
        assert_eq!(w.to_string(), "1.-2.1");
        assert_eq!("1.-2.1".parse::<Word>().unwrap(), w);
        assert_eq!("".parse::<Word>().unwrap(), Word::empty());
    }
}
