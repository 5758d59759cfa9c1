//! Generalized lexicographic orders and the comparison primitives built on
//! them.
//!
//! An [`OrderSchedule`] assigns a total order on the alphabet to every
//! position `n >= 1`. Two words are compared at their first differing
//! position `p + 1` using the order in force there; a proper prefix is
//! smaller than any of its extensions.

use std::cmp::Ordering;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::strings::lcm;
use crate::word::{EventuallyPeriodicWord, FiniteWord, Word};

/// Outcome of a comparison together with the 1-based position where it was
/// decided. `index` is 0 when the words are equal or one is a proper prefix
/// of the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Comparison {
    pub ordering: Ordering,
    pub index: usize,
}

impl Comparison {
    pub const EQUAL: Comparison = Comparison {
        ordering: Ordering::Equal,
        index: 0,
    };

    pub fn reverse(self) -> Comparison {
        Comparison {
            ordering: self.ordering.reverse(),
            index: self.index,
        }
    }

    pub fn is_lt(&self) -> bool {
        self.ordering == Ordering::Less
    }

    pub fn is_gt(&self) -> bool {
        self.ordering == Ordering::Greater
    }

    pub fn is_eq(&self) -> bool {
        self.ordering == Ordering::Equal
    }
}

/// Short label used in reports: `LT`, `EQ` or `GT`.
pub fn ordering_label(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LT",
        Ordering::Equal => "EQ",
        Ordering::Greater => "GT",
    }
}

/// An eventually periodic family of total orders on a finite alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSchedule {
    alphabet: Alphabet,
    name: Option<String>,
    preperiod: Vec<Vec<Letter>>,
    period: Vec<Vec<Letter>>,
    // ranks[k][letter] for the k-th permutation (preperiod first).
    ranks: Vec<Vec<u32>>,
}

impl OrderSchedule {
    /// Builds a schedule from permutations listed smallest to largest.
    pub fn new(
        alphabet: Alphabet,
        preperiod: Vec<Vec<Letter>>,
        period: Vec<Vec<Letter>>,
    ) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::usage("order schedule period must be nonempty"));
        }
        let k = alphabet.len();
        let mut ranks = Vec::with_capacity(preperiod.len() + period.len());
        for perm in preperiod.iter().chain(period.iter()) {
            if perm.len() != k {
                return Err(Error::usage(format!(
                    "order permutation has {} entries, alphabet has {k}",
                    perm.len()
                )));
            }
            let mut rank = vec![u32::MAX; k];
            for (r, l) in perm.iter().enumerate() {
                if !alphabet.contains(*l) || rank[l.id()] != u32::MAX {
                    return Err(Error::usage(
                        "order permutation is not a bijection on the alphabet",
                    ));
                }
                rank[l.id()] = r as u32;
            }
            ranks.push(rank);
        }
        Ok(OrderSchedule {
            alphabet,
            name: None,
            preperiod,
            period,
            ranks,
        })
    }

    fn identity(alphabet: &Alphabet) -> Vec<Letter> {
        alphabet.letters().collect()
    }

    fn reversed(alphabet: &Alphabet) -> Vec<Letter> {
        let mut v = Self::identity(alphabet);
        v.reverse();
        v
    }

    /// The same schedule under a display name.
    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_owned());
        self
    }

    /// The alphabet's list order at every position.
    pub fn standard(alphabet: Alphabet) -> Self {
        let id = Self::identity(&alphabet);
        Self::new(alphabet, vec![], vec![id])
            .expect("identity permutation")
            .with_name("standard")
    }

    /// The reversed list order at every position.
    pub fn opposite(alphabet: Alphabet) -> Self {
        let rev = Self::reversed(&alphabet);
        Self::new(alphabet, vec![], vec![rev])
            .expect("reversed permutation")
            .with_name("opposite")
    }

    /// List order at odd positions, reversed order at even positions.
    pub fn alternating(alphabet: Alphabet) -> Self {
        let id = Self::identity(&alphabet);
        let rev = Self::reversed(&alphabet);
        Self::new(alphabet, vec![], vec![id, rev])
            .expect("valid permutations")
            .with_name("alternating")
    }

    /// Resolves `standard`, `opposite`, `alternating`, or `@path` to a
    /// schedule file.
    pub fn by_name(spec: &str, alphabet: Alphabet) -> Result<Self> {
        match spec {
            "standard" => Ok(Self::standard(alphabet)),
            "opposite" => Ok(Self::opposite(alphabet)),
            "alternating" => Ok(Self::alternating(alphabet)),
            _ => match spec.strip_prefix('@') {
                Some(path) => Self::from_file(path),
                None => Err(Error::usage(format!(
                    "unknown order {spec:?}; expected standard, opposite, alternating or @file"
                ))),
            },
        }
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path)
            .map_err(|e| Error::usage(format!("cannot read {}: {e}", path.display())))?;
        let mut s = Self::from_json(&text)?;
        s.name = Some(format!("@{}", path.display()));
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ScheduleFile = serde_json::from_str(text)
            .map_err(|e| Error::usage(format!("invalid order schedule JSON: {e}")))?;
        file.into_schedule()
    }

    pub fn to_file(&self) -> ScheduleFile {
        let names = |perms: &[Vec<Letter>]| {
            perms
                .iter()
                .map(|p| {
                    p.iter()
                        .map(|l| self.alphabet.symbol(*l).expect("valid letter").to_owned())
                        .collect()
                })
                .collect()
        };
        ScheduleFile {
            alphabet: self.alphabet.symbols().to_vec(),
            preperiod: names(&self.preperiod),
            period: names(&self.period),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Display name: the named constructor used, or `custom`.
    pub fn name(&self) -> &str {
        self.name.as_deref().unwrap_or("custom")
    }

    pub fn preperiod(&self) -> &[Vec<Letter>] {
        &self.preperiod
    }

    pub fn period(&self) -> &[Vec<Letter>] {
        &self.period
    }

    #[inline]
    fn slot(&self, n: usize) -> usize {
        debug_assert!(n >= 1);
        let p = self.preperiod.len();
        if n <= p {
            n - 1
        } else {
            p + (n - 1 - p) % self.period.len()
        }
    }

    /// The order at position `n >= 1`, smallest symbol first.
    pub fn order_at(&self, n: usize) -> &[Letter] {
        let s = self.slot(n);
        let p = self.preperiod.len();
        if s < p {
            &self.preperiod[s]
        } else {
            &self.period[s - p]
        }
    }

    /// Rank of `letter` in the order at position `n >= 1`.
    #[inline]
    pub fn rank(&self, n: usize, letter: Letter) -> u32 {
        self.ranks[self.slot(n)][letter.id()]
    }

    /// Compares two distinct letters at position `n`.
    #[inline]
    pub(crate) fn letter_order(&self, n: usize, a: Letter, b: Letter) -> Ordering {
        let r = &self.ranks[self.slot(n)];
        r[a.id()].cmp(&r[b.id()])
    }

    pub(crate) fn check(&self, letters: &[Letter]) -> Result<()> {
        self.alphabet.check(letters)
    }

    pub(crate) fn check_ep(&self, w: &EventuallyPeriodicWord) -> Result<()> {
        self.check(w.preperiod())?;
        self.check(w.period())
    }

    pub(crate) fn check_word(&self, w: &Word) -> Result<()> {
        match w {
            Word::Finite(f) => self.check(f),
            Word::Infinite(e) => self.check_ep(e),
        }
    }

    /// Compares two letter sequences of the same length, or decides at the
    /// first mismatch; the shorter one wins on a common prefix.
    #[inline]
    pub(crate) fn cmp_letters(&self, x: &[Letter], y: &[Letter]) -> Comparison {
        cmp_iters(self, x.iter().copied(), y.iter().copied(), x.len(), y.len())
    }
}

/// Comparison of two letter streams with known lengths.
#[inline]
pub(crate) fn cmp_iters(
    ord: &OrderSchedule,
    x: impl Iterator<Item = Letter>,
    y: impl Iterator<Item = Letter>,
    x_len: usize,
    y_len: usize,
) -> Comparison {
    for (p, (a, b)) in x.zip(y).enumerate() {
        if a != b {
            return Comparison {
                ordering: ord.letter_order(p + 1, a, b),
                index: p + 1,
            };
        }
    }
    Comparison {
        ordering: x_len.cmp(&y_len),
        index: 0,
    }
}

/// JSON form of an order schedule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScheduleFile {
    pub alphabet: Vec<String>,
    #[serde(default)]
    pub preperiod: Vec<Vec<String>>,
    pub period: Vec<Vec<String>>,
}

impl ScheduleFile {
    pub fn into_schedule(self) -> Result<OrderSchedule> {
        let alphabet = Alphabet::new(self.alphabet)?;
        let resolve = |perms: Vec<Vec<String>>| -> Result<Vec<Vec<Letter>>> {
            perms
                .into_iter()
                .map(|p| {
                    p.iter()
                        .map(|s| {
                            alphabet.letter(s).ok_or_else(|| {
                                Error::usage(format!("order mentions unknown symbol {s:?}"))
                            })
                        })
                        .collect()
                })
                .collect()
        };
        let pre = resolve(self.preperiod)?;
        let per = resolve(self.period)?;
        OrderSchedule::new(alphabet, pre, per)
    }
}

/// Compares two finite words.
pub fn compare_finite(x: &FiniteWord, y: &FiniteWord, ord: &OrderSchedule) -> Result<Comparison> {
    ord.check(x)?;
    ord.check(y)?;
    Ok(ord.cmp_letters(x, y))
}

/// Compares a finite word with an infinite one. A finite prefix of the
/// infinite word is smaller.
pub fn mixed_compare(
    x: &FiniteWord,
    w: &EventuallyPeriodicWord,
    ord: &OrderSchedule,
) -> Result<Comparison> {
    ord.check(x)?;
    ord.check_ep(w)?;
    let c = cmp_iters(ord, x.iter().copied(), (0..x.len()).map(|i| w.at(i)), x.len(), x.len());
    if c.is_eq() {
        Ok(Comparison {
            ordering: Ordering::Less,
            index: 0,
        })
    } else {
        Ok(c)
    }
}

pub(crate) fn cmp_ep_unchecked(
    a: &EventuallyPeriodicWord,
    b: &EventuallyPeriodicWord,
    ord: &OrderSchedule,
) -> Comparison {
    let bound = a.equality_bound(b);
    cmp_iters(ord, (0..bound).map(|i| a.at(i)), (0..bound).map(|i| b.at(i)), bound, bound)
}

/// Exact comparison of two eventually periodic words.
pub fn compare_eventually_periodic(
    a: &EventuallyPeriodicWord,
    b: &EventuallyPeriodicWord,
    ord: &OrderSchedule,
) -> Result<Comparison> {
    ord.check_ep(a)?;
    ord.check_ep(b)?;
    Ok(cmp_ep_unchecked(a, b, ord))
}

/// Compares `u^ω` with `v^ω` over a window of `|u| + |v|` letters.
pub(crate) fn omega_cmp_unchecked(u: &[Letter], v: &[Letter], ord: &OrderSchedule) -> Comparison {
    let window = u.len() + v.len();
    cmp_iters(
        ord,
        u.iter().copied().cycle().take(window),
        v.iter().copied().cycle().take(window),
        window,
        window,
    )
}

/// Compares `u^ω` with `v^ω`. Equal exactly when `u` and `v` are powers of
/// a common word.
pub fn omega_compare(u: &FiniteWord, v: &FiniteWord, ord: &OrderSchedule) -> Result<Comparison> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::domain("omega power of the empty word"));
    }
    ord.check(u)?;
    ord.check(v)?;
    Ok(omega_cmp_unchecked(u, v, ord))
}

/// Compares any two words under the generalized lexicographic order.
pub fn compare(x: &Word, y: &Word, ord: &OrderSchedule) -> Result<Comparison> {
    match (x, y) {
        (Word::Finite(a), Word::Finite(b)) => compare_finite(a, b, ord),
        (Word::Finite(a), Word::Infinite(b)) => mixed_compare(a, b, ord),
        (Word::Infinite(a), Word::Finite(b)) => mixed_compare(b, a, ord).map(Comparison::reverse),
        (Word::Infinite(a), Word::Infinite(b)) => compare_eventually_periodic(a, b, ord),
    }
}

/// Truncation length used by the `~` and `≲` chains: the shortest finite
/// length present, or the joint equality bound when every word is infinite.
fn chain_window(words: &[Word]) -> usize {
    let finite_min = words.iter().filter_map(Word::len).min();
    finite_min.unwrap_or_else(|| {
        let mut pre = 0;
        let mut per = 1;
        for w in words {
            if let Word::Infinite(e) = w {
                pre = pre.max(e.preperiod().len());
                per = lcm(per, e.period().len());
            }
        }
        pre + per
    })
}

/// True iff one word is a prefix of the other (`x ∼ y`).
pub fn prefix_compatible(x: &Word, y: &Word) -> bool {
    let n = chain_window(&[x.clone(), y.clone()]);
    x.take(n) == y.take(n)
}

/// The chain `w_1 ≲ w_2 ≲ ... ≲ w_n`: every word truncated to the common
/// window, then checked to be nondecreasing.
pub fn compare_weak_chain(words: &[Word], ord: &OrderSchedule) -> Result<bool> {
    if words.len() < 2 {
        return Err(Error::usage("a comparison chain needs at least two words"));
    }
    for w in words {
        ord.check_word(w)?;
    }
    let n = chain_window(words);
    let truncated: Vec<Vec<Letter>> = words.iter().map(|w| w.take(n)).collect();
    Ok(truncated
        .windows(2)
        .all(|p| !ord.cmp_letters(&p[0], &p[1]).is_gt()))
}
