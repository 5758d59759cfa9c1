//! Finite words, eventually periodic infinite words, and the shared text
//! syntax (`0110`, `a,b,n`, `010000100(1)^w`).

use std::fmt;
use std::ops::Deref;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::strings::primitive_root_len;

/// A finite sequence of letters. The empty word is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FiniteWord(Vec<Letter>);

impl FiniteWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        FiniteWord(letters)
    }

    pub fn empty() -> Self {
        FiniteWord(Vec::new())
    }

    pub fn from_ids(ids: &[u32]) -> Self {
        FiniteWord(ids.iter().copied().map(Letter).collect())
    }

    /// Parses a finite word in the shared syntax.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        parse_tokens(text, alphabet, 0).map(FiniteWord)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    /// 1-based inclusive slice `x[i, j]`; `None` unless `1 <= i <= j <= |x|`.
    pub fn slice(&self, i: usize, j: usize) -> Option<FiniteWord> {
        if i >= 1 && i <= j && j <= self.0.len() {
            Some(FiniteWord(self.0[i - 1..j].to_vec()))
        } else {
            None
        }
    }

    /// The rotation `vu` where `self = uv` and `|u| = k` (taken mod `|w|`).
    pub fn rotation(&self, k: usize) -> FiniteWord {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        let mut out = Vec::with_capacity(self.0.len());
        out.extend_from_slice(&self.0[k..]);
        out.extend_from_slice(&self.0[..k]);
        FiniteWord(out)
    }

    pub fn concat(&self, other: &FiniteWord) -> FiniteWord {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        FiniteWord(out)
    }

    pub fn power(&self, n: usize) -> FiniteWord {
        FiniteWord(self.0.repeat(n))
    }

    /// The word `self^ω`; `None` for the empty word.
    pub fn omega(&self) -> Option<EventuallyPeriodicWord> {
        EventuallyPeriodicWord::periodic(self.clone()).ok()
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        format_tokens(&self.0, alphabet)
    }
}

impl Deref for FiniteWord {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for FiniteWord {
    fn from(v: Vec<Letter>) -> Self {
        FiniteWord(v)
    }
}

impl From<&[Letter]> for FiniteWord {
    fn from(v: &[Letter]) -> Self {
        FiniteWord(v.to_vec())
    }
}

/// An infinite word `u·v^ω`, kept in canonical form: the period is
/// primitive and the preperiod cannot be shortened by rotating the period.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EventuallyPeriodicWord {
    preperiod: Vec<Letter>,
    period: Vec<Letter>,
}

impl EventuallyPeriodicWord {
    pub fn new(preperiod: FiniteWord, period: FiniteWord) -> Result<Self> {
        Self::from_letters(preperiod.0, period.0)
    }

    pub fn periodic(period: FiniteWord) -> Result<Self> {
        Self::from_letters(Vec::new(), period.0)
    }

    pub(crate) fn from_letters(mut preperiod: Vec<Letter>, mut period: Vec<Letter>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::usage("the period of an infinite word must be nonempty"));
        }
        period.truncate(primitive_root_len(&period));
        while let (Some(&a), Some(&b)) = (preperiod.last(), period.last()) {
            if a != b {
                break;
            }
            preperiod.pop();
            period.rotate_right(1);
        }
        Ok(EventuallyPeriodicWord { preperiod, period })
    }

    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        match Word::parse(text, alphabet)? {
            Word::Infinite(w) => Ok(w),
            Word::Finite(_) => Err(Error::parse(
                text.len(),
                "expected an infinite word of the form PREFIX(PERIOD)^w",
            )),
        }
    }

    pub fn preperiod(&self) -> &[Letter] {
        &self.preperiod
    }

    pub fn period(&self) -> &[Letter] {
        &self.period
    }

    pub fn preperiod_word(&self) -> FiniteWord {
        FiniteWord(self.preperiod.clone())
    }

    pub fn period_word(&self) -> FiniteWord {
        FiniteWord(self.period.clone())
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.preperiod.is_empty()
    }

    /// `|preperiod| + |period|`: the number of distinct suffix classes.
    pub fn size(&self) -> usize {
        self.preperiod.len() + self.period.len()
    }

    /// The 0-based letter at `index`.
    #[inline]
    pub(crate) fn at(&self, index: usize) -> Letter {
        let p = self.preperiod.len();
        if index < p {
            self.preperiod[index]
        } else {
            self.period[(index - p) % self.period.len()]
        }
    }

    /// The letter at 1-based position `n`, or `None` for `n = 0`.
    pub fn letter_at(&self, n: usize) -> Option<Letter> {
        if n == 0 {
            None
        } else {
            Some(self.at(n - 1))
        }
    }

    pub fn prefix(&self, n: usize) -> FiniteWord {
        FiniteWord((0..n).map(|i| self.at(i)).collect())
    }

    /// The suffix `w[index, ∞)` (1-based), canonicalized.
    pub fn suffix(&self, index: usize) -> EventuallyPeriodicWord {
        assert!(index >= 1, "suffix indices are 1-based");
        let start = index - 1;
        let p = self.preperiod.len();
        if start < p {
            Self::from_letters(self.preperiod[start..].to_vec(), self.period.clone())
                .expect("nonempty period")
        } else {
            let mut period = self.period.clone();
            period.rotate_left((start - p) % self.period.len());
            EventuallyPeriodicWord {
                preperiod: Vec::new(),
                period,
            }
        }
    }

    /// `x·self` for a finite word `x`.
    pub fn prepend(&self, x: &[Letter]) -> EventuallyPeriodicWord {
        let mut pre = x.to_vec();
        pre.extend_from_slice(&self.preperiod);
        Self::from_letters(pre, self.period.clone()).expect("nonempty period")
    }

    /// Number of letters after which agreement with `other` implies equality.
    pub fn equality_bound(&self, other: &EventuallyPeriodicWord) -> usize {
        self.preperiod.len().max(other.preperiod.len())
            + crate::strings::lcm(self.period.len(), other.period.len())
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        format!(
            "{}({})^w",
            format_tokens(&self.preperiod, alphabet),
            format_tokens(&self.period, alphabet)
        )
    }
}

/// Either kind of word, as accepted by the mixed-kind operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Word {
    Finite(FiniteWord),
    Infinite(EventuallyPeriodicWord),
}

impl Word {
    /// Parses the shared syntax: a finite token string, or `PREFIX(PERIOD)^w`.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Word> {
        let trimmed = text.trim_end();
        if let Some(body) = trimmed.strip_suffix("^w") {
            let open = body.rfind('(').ok_or_else(|| {
                Error::parse(0, "infinite word needs a parenthesized period before ^w")
            })?;
            if !body.ends_with(')') {
                return Err(Error::parse(body.len(), "expected ')' before ^w"));
            }
            let prefix = &body[..open];
            let period = &body[open + 1..body.len() - 1];
            if let Some(pos) = prefix.find(['(', ')']) {
                return Err(Error::parse(pos, "unexpected parenthesis in prefix"));
            }
            let prefix = prefix.strip_suffix(',').unwrap_or(prefix);
            let pre = parse_tokens(prefix, alphabet, 0)?;
            let per = parse_tokens(period, alphabet, open + 1)?;
            if per.is_empty() {
                return Err(Error::parse(open + 1, "period must be nonempty"));
            }
            return Ok(Word::Infinite(EventuallyPeriodicWord::from_letters(pre, per)?));
        }
        if let Some(pos) = trimmed.find(['(', ')', '^']) {
            return Err(Error::parse(pos, "unexpected character in finite word"));
        }
        Ok(Word::Finite(FiniteWord(parse_tokens(trimmed, alphabet, 0)?)))
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        match self {
            Word::Finite(w) => w.format(alphabet),
            Word::Infinite(w) => w.format(alphabet),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Word::Finite(_))
    }

    /// Letter length for finite words, `None` for infinite ones.
    pub fn len(&self) -> Option<usize> {
        match self {
            Word::Finite(w) => Some(w.len()),
            Word::Infinite(_) => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }

    /// The first `n` letters; finite words are truncated at their length.
    pub fn take(&self, n: usize) -> Vec<Letter> {
        match self {
            Word::Finite(w) => w[..n.min(w.len())].to_vec(),
            Word::Infinite(w) => w.prefix(n).into_letters(),
        }
    }
}

impl From<FiniteWord> for Word {
    fn from(w: FiniteWord) -> Self {
        Word::Finite(w)
    }
}

impl From<EventuallyPeriodicWord> for Word {
    fn from(w: EventuallyPeriodicWord) -> Self {
        Word::Infinite(w)
    }
}

/// Parses a token string: comma-separated, or compact when every symbol in
/// the alphabet is a single character. Without commas over a non-compact
/// alphabet the whole text is one token.
pub(crate) fn parse_tokens(text: &str, alphabet: &Alphabet, offset: usize) -> Result<Vec<Letter>> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let lookup = |tok: &str, pos: usize| {
        alphabet
            .letter(tok)
            .ok_or_else(|| Error::parse(offset + pos, format!("unknown symbol {tok:?}")))
    };
    if text.contains(',') {
        let mut out = Vec::new();
        let mut pos = 0;
        for tok in text.split(',') {
            let t = tok.trim();
            if t.is_empty() {
                return Err(Error::parse(offset + pos, "empty token"));
            }
            out.push(lookup(t, pos)?);
            pos += tok.len() + 1;
        }
        Ok(out)
    } else if alphabet.is_compact() {
        text.char_indices()
            .map(|(pos, c)| lookup(&text[pos..pos + c.len_utf8()], pos))
            .collect()
    } else {
        Ok(vec![lookup(text.trim(), 0)?])
    }
}

pub(crate) fn format_tokens(letters: &[Letter], alphabet: &Alphabet) -> String {
    let sym = |l: &Letter| alphabet.symbol(*l).map(str::to_owned).unwrap_or_else(|| l.to_string());
    if alphabet.is_compact() {
        letters.iter().map(sym).collect()
    } else {
        letters.iter().map(sym).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.0)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bin() -> Alphabet {
        Alphabet::binary()
    }

    fn ep(s: &str) -> EventuallyPeriodicWord {
        EventuallyPeriodicWord::parse(s, &bin()).unwrap()
    }

    #[test]
    fn canonical_form_absorbs_preperiod_and_reduces_period() {
        let w = ep("0(10)^w");
        assert!(w.is_purely_periodic());
        assert_eq!(w.format(&bin()), "(01)^w");
        assert_eq!(ep("(0101)^w"), ep("(01)^w"));
        assert_eq!(ep("11(1)^w").format(&bin()), "(1)^w");
        assert_eq!(ep("0111(1)^w").format(&bin()), "0(1)^w");
    }

    #[test]
    fn letters_and_suffixes() {
        let w = ep("10(1)^w");
        assert_eq!(w.letter_at(1), Some(Letter(1)));
        assert_eq!(w.letter_at(2), Some(Letter(0)));
        assert_eq!(w.letter_at(50), Some(Letter(1)));
        assert_eq!(w.letter_at(0), None);
        assert_eq!(w.suffix(2).format(&bin()), "0(1)^w");
        assert_eq!(w.suffix(3).format(&bin()), "(1)^w");
        assert_eq!(ep("(011)^w").suffix(3).format(&bin()), "(101)^w");
    }

    #[test]
    fn slices_are_one_based() {
        let w = FiniteWord::parse("01101", &bin()).unwrap();
        assert_eq!(w.slice(2, 4).unwrap().format(&bin()), "110");
        assert!(w.slice(0, 2).is_none());
        assert!(w.slice(3, 2).is_none());
        assert!(w.slice(1, 6).is_none());
        assert_eq!(w.rotation(2).format(&bin()), "10101");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let a = bin();
        assert!(matches!(Word::parse("012", &a), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(Word::parse("0()^w", &a), Err(Error::Parse { .. })));
        assert!(matches!(Word::parse("0(1^w", &a), Err(Error::Parse { .. })));
        assert!(matches!(Word::parse("0(1)", &a), Err(Error::Parse { .. })));
    }

    #[test]
    fn multi_character_tokens_use_commas() {
        let a = Alphabet::parse("1,2,10").unwrap();
        let w = Word::parse("1,10(2,1)^w", &a).unwrap();
        assert_eq!(w.format(&a), "1,10(2,1)^w");
        let single = Word::parse("10", &a).unwrap();
        assert_eq!(single, Word::Finite(FiniteWord::from_ids(&[2])));
        let empty_prefix = Word::parse("(10)^w", &a).unwrap();
        assert_eq!(empty_prefix.format(&a), "(10)^w");
    }

    #[test]
    fn digit_words_accept_commas_in_compact_alphabets() {
        let a = Alphabet::parse("1,2,3,4").unwrap();
        let w = Word::parse("1,2(2,1)^w", &a).unwrap();
        assert_eq!(w.format(&a), "12(21)^w");
    }
}
