//! Words over positive integers under the alternating order, and their
//! continued-fraction values.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::order::{cmp_ep_unchecked, OrderSchedule};
use crate::word::{EventuallyPeriodicWord, Word};

/// Cap on extra terms when separating two continued-fraction intervals.
pub const PHI_DEEPENING_CAP: usize = 8;

/// The alphabet `{"1", …, "d"}`; the symbol with value `k` has id `k - 1`.
pub fn digit_alphabet(d: u32) -> Alphabet {
    Alphabet::new((1..=d.max(1)).map(|k| k.to_string())).expect("valid alphabet")
}

/// An eventually periodic word over positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitWord {
    word: EventuallyPeriodicWord,
}

fn letters_of(values: &[u32]) -> Result<Vec<Letter>> {
    values
        .iter()
        .map(|&v| {
            if v == 0 {
                Err(Error::domain("continued-fraction letters must be at least 1"))
            } else {
                Ok(Letter(v - 1))
            }
        })
        .collect()
}

impl DigitWord {
    pub fn new(preperiod: &[u32], period: &[u32]) -> Result<Self> {
        let word = EventuallyPeriodicWord::from_letters(letters_of(preperiod)?, letters_of(period)?)?;
        Ok(DigitWord { word })
    }

    /// Parses the shared word syntax over the digits `1..=max_digit`, for
    /// example `1,2(2,1)^w`.
    pub fn parse(text: &str, max_digit: u32) -> Result<Self> {
        match Word::parse(text, &digit_alphabet(max_digit))? {
            Word::Infinite(word) => Ok(DigitWord { word }),
            Word::Finite(_) => Err(Error::parse(text.len(), "expected PREFIX(PERIOD)^w")),
        }
    }

    pub fn word(&self) -> &EventuallyPeriodicWord {
        &self.word
    }

    /// The largest letter value present.
    pub fn max_digit(&self) -> u32 {
        self.word
            .preperiod()
            .iter()
            .chain(self.word.period())
            .map(|l| l.0 + 1)
            .max()
            .unwrap_or(1)
    }

    /// The first `n` letter values.
    pub fn values(&self, n: usize) -> Vec<u32> {
        (0..n).map(|i| self.word.at(i).0 + 1).collect()
    }
}

impl fmt::Display for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |ls: &[Letter]| ls.iter().map(|l| (l.0 + 1).to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{}({})^w", join(self.word.preperiod()), join(self.word.period()))
    }
}

/// A closed interval with exact rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RationalInterval {
    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn is_within(&self, other: &RationalInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// `Less` if this interval lies strictly left of `other`, `Greater` if
    /// strictly right, `None` when they meet.
    pub fn separation(&self, other: &RationalInterval) -> Option<Ordering> {
        if self.hi < other.lo {
            Some(Ordering::Less)
        } else if other.hi < self.lo {
            Some(Ordering::Greater)
        } else {
            None
        }
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Value of the finite continued fraction `[x_1; x_2, …, x_n]`.
pub fn continued_fraction(terms: &[u32]) -> Result<BigRational> {
    let (last, rest) = terms
        .split_last()
        .ok_or_else(|| Error::domain("continued fraction with no terms"))?;
    if terms.contains(&0) {
        return Err(Error::domain("continued-fraction letters must be at least 1"));
    }
    let int = |v: u32| BigRational::from_integer(BigInt::from(v));
    let mut x = int(*last);
    for &t in rest.iter().rev() {
        x = int(t) + x.recip();
    }
    Ok(x)
}

/// Bounds on the continued-fraction value of every infinite word starting
/// with `prefix`: the values of `[x_1, …, x_n]` and `[x_1, …, x_n + 1]`.
pub fn phi_interval(prefix: &[u32]) -> Result<RationalInterval> {
    let a = continued_fraction(prefix)?;
    let mut bumped = prefix.to_vec();
    *bumped.last_mut().expect("nonempty") += 1;
    let b = continued_fraction(&bumped)?;
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    Ok(RationalInterval { lo, hi })
}

/// Orders two digit words by their continued-fraction values, deepening the
/// prefix intervals past the first mismatch until they separate.
pub fn compare_via_phi(w1: &DigitWord, w2: &DigitWord) -> Result<Ordering> {
    let d = w1.max_digit().max(w2.max_digit());
    let ord = OrderSchedule::standard(digit_alphabet(d));
    let c = cmp_ep_unchecked(&w1.word, &w2.word, &ord);
    if c.is_eq() {
        return Ok(Ordering::Equal);
    }
    for n in c.index + 1..=c.index + PHI_DEEPENING_CAP {
        let i1 = phi_interval(&w1.values(n))?;
        let i2 = phi_interval(&w2.values(n))?;
        if let Some(o) = i1.separation(&i2) {
            return Ok(o);
        }
    }
    Err(Error::invariant(format!(
        "intervals of {w1} and {w2} did not separate within {PHI_DEEPENING_CAP} terms"
    )))
}

/// Exact value of the golden ratio convergent `F_{k+1} / F_k`.
pub fn fibonacci_ratio(k: usize) -> BigRational {
    let (mut a, mut b) = (BigInt::one(), BigInt::one());
    for _ in 1..k {
        (a, b) = (b.clone(), a + b);
    }
    BigRational::new(b, a)
}
