use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A symbol id: the position of the symbol in its [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl Letter {
    #[inline]
    pub fn id(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// An ordered list of distinct, nonempty symbol tokens.
///
/// The list position of a token is its canonical [`Letter`] id. The list
/// order carries no comparison meaning on its own; comparisons always go
/// through an [`OrderSchedule`](crate::order::OrderSchedule).
#[derive(Debug, Clone)]
pub struct Alphabet {
    symbols: Vec<String>,
    index: HashMap<String, Letter>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::usage("alphabet must contain at least one symbol"));
        }
        let mut index = HashMap::with_capacity(symbols.len());
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::usage("alphabet symbols must be nonempty"));
            }
            if s.contains([',', '(', ')', '^']) || s.chars().any(char::is_whitespace) {
                return Err(Error::usage(format!(
                    "alphabet symbol {s:?} contains a reserved character"
                )));
            }
            if index.insert(s.clone(), Letter(i as u32)).is_some() {
                return Err(Error::usage(format!("duplicate alphabet symbol {s:?}")));
            }
        }
        Ok(Alphabet { symbols, index })
    }

    /// The alphabet `{"0", "1"}`.
    pub fn binary() -> Self {
        Alphabet::new(["0", "1"]).expect("valid alphabet")
    }

    /// The alphabet `{"0", "1", ..., "k-1"}`.
    pub fn numeric(k: usize) -> Self {
        Alphabet::new((0..k).map(|i| i.to_string())).expect("valid alphabet")
    }

    /// Parses a comma-separated symbol list such as `0,1` or `a,b,n`.
    pub fn parse(spec: &str) -> Result<Self> {
        Alphabet::new(spec.split(',').map(str::trim))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.symbols.len() as u32).map(Letter)
    }

    pub fn letter(&self, token: &str) -> Option<Letter> {
        self.index.get(token).copied()
    }

    pub fn symbol(&self, letter: Letter) -> Option<&str> {
        self.symbols.get(letter.id()).map(String::as_str)
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.id() < self.symbols.len()
    }

    /// True when every token is a single character, so words can be
    /// written compactly without separators.
    pub fn is_compact(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    pub(crate) fn check(&self, letters: &[Letter]) -> Result<()> {
        match letters.iter().find(|l| !self.contains(**l)) {
            None => Ok(()),
            Some(l) => Err(Error::domain(format!(
                "letter {l} is outside the alphabet of size {}",
                self.len()
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empty() {
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        assert!(Alphabet::new(["a", ""]).is_err());
        assert!(Alphabet::new(["a(", "b"]).is_err());
    }

    #[test]
    fn ids_follow_list_position() {
        let a = Alphabet::parse("a, b ,n").unwrap();
        assert_eq!(a.letter("n"), Some(Letter(2)));
        assert_eq!(a.symbol(Letter(1)), Some("b"));
        assert!(a.is_compact());
        assert!(!Alphabet::parse("10,2").unwrap().is_compact());
    }
}
