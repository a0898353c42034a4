//! Strings over an abstract ranked alphabet `1 < 2 < ... < sigma`.

use std::fmt;

use crate::error::{Error, Result};

/// A character rank; `1` is the smallest character.
pub type Rank = u32;

/// Renders a rank as `a`..`z`, or as a decimal token beyond 26.
pub fn render_rank(r: Rank) -> String {
    if (1..=26).contains(&r) {
        char::from(b'a' + (r - 1) as u8).to_string()
    } else {
        r.to_string()
    }
}

/// A string of ranks. Ordering is lexicographic, so a proper prefix sorts first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Text(Vec<Rank>);

impl Text {
    pub fn from_ranks(ranks: Vec<Rank>) -> Result<Self> {
        if ranks.contains(&0) {
            return Err(Error::InvalidInput("ranks start at 1".into()));
        }
        Ok(Text(ranks))
    }

    /// Parses letters `a..z` as ranks `1..26`.
    pub fn from_letters(s: &str) -> Result<Self> {
        s.bytes()
            .map(|b| match b {
                b'a'..=b'z' => Ok(Rank::from(b - b'a' + 1)),
                _ => Err(Error::InvalidInput(format!(
                    "unexpected character {:?}; expected a..z",
                    char::from(b)
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Text)
    }

    pub fn ranks(&self) -> &[Rank] {
        &self.0
    }

    pub fn into_ranks(self) -> Vec<Rank> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_rank(&self) -> Rank {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Bytes `a..z`, available when every rank is at most 26.
    pub fn to_letter_bytes(&self) -> Option<Vec<u8>> {
        self.0
            .iter()
            .map(|&r| (1..=26).contains(&r).then(|| b'a' + (r - 1) as u8))
            .collect()
    }
}

impl fmt::Display for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(bytes) = self.to_letter_bytes() {
            // ascii by construction
            f.write_str(std::str::from_utf8(&bytes).unwrap())
        } else {
            let tokens: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
            f.write_str(&tokens.join(":"))
        }
    }
}

impl fmt::Debug for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Text({self})")
    }
}

impl PartialEq<&str> for Text {
    fn eq(&self, other: &&str) -> bool {
        self.0.len() == other.len()
            && self
                .0
                .iter()
                .zip(other.bytes())
                .all(|(&r, b)| b.is_ascii_lowercase() && r == Rank::from(b - b'a' + 1))
    }
}
