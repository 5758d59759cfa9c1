//! Infinite generalized Lyndon words and factorizations of eventually
//! periodic words.

use std::cmp::Ordering;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::finite::{factorize_letters, is_gl, min_rotation_offset};
use crate::order::{cmp_ep_unchecked, omega_cmp_unchecked, OrderSchedule};
use crate::word::{EventuallyPeriodicWord, FiniteWord};

/// The term that ends an infinite factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tail {
    /// A single infinite generalized Lyndon word.
    Infinite(EventuallyPeriodicWord),
    /// A finite generalized Lyndon word repeated forever.
    Periodic(FiniteWord),
    /// Budgeted stream result: the factorization from 1-based position
    /// `residual_index` onward was not determined.
    Open { residual_index: usize },
}

impl Tail {
    pub fn kind(&self) -> &'static str {
        match self {
            Tail::Infinite(_) => "infinite",
            Tail::Periodic(_) => "periodic",
            Tail::Open { .. } => "open",
        }
    }
}

/// Nonincreasing factorization of an infinite word: finite generalized
/// Lyndon factors followed by a [`Tail`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfiniteFactorization {
    pub head: Vec<FiniteWord>,
    pub tail: Tail,
}

impl InfiniteFactorization {
    pub fn head_len(&self) -> usize {
        self.head.iter().map(|f| f.len()).sum()
    }

    /// The first `n` letters of the factorized word, or fewer for an open
    /// tail, which only determines the head.
    pub fn expand(&self, n: usize) -> Vec<Letter> {
        let mut out: Vec<Letter> = self.head.iter().flat_map(|f| f.iter().copied()).take(n).collect();
        let rest = n - out.len();
        match &self.tail {
            Tail::Infinite(w) => out.extend((0..rest).map(|i| w.at(i))),
            Tail::Periodic(ell) => out.extend(ell.iter().copied().cycle().take(rest)),
            Tail::Open { .. } => {}
        }
        out
    }

    pub fn format_head(&self, alphabet: &Alphabet) -> Vec<String> {
        self.head.iter().map(|f| f.format(alphabet)).collect()
    }

    /// Checks every structural invariant and letterwise agreement with
    /// `prefix`, a prefix of the source word.
    pub fn verify_prefix(&self, prefix: &[Letter], ord: &OrderSchedule) -> Result<()> {
        for (i, f) in self.head.iter().enumerate() {
            if !is_gl(f, ord) {
                return Err(Error::invariant(format!("head factor {} is not generalized Lyndon", i + 1)));
            }
        }
        for (i, p) in self.head.windows(2).enumerate() {
            if omega_cmp_unchecked(&p[0], &p[1], ord).is_lt() {
                return Err(Error::invariant(format!("head factors {} and {} increase", i + 1, i + 2)));
            }
        }
        let last = self.head.last();
        match &self.tail {
            Tail::Infinite(w) => {
                if !infinite_gl(w, ord) {
                    return Err(Error::invariant("infinite term is not generalized Lyndon"));
                }
                if let Some(l) = last {
                    let lw = EventuallyPeriodicWord::from_letters(Vec::new(), l.to_vec())?;
                    if cmp_ep_unchecked(&lw, w, ord).is_lt() {
                        return Err(Error::invariant("last head factor is below the infinite term"));
                    }
                }
            }
            Tail::Periodic(ell) => {
                if !is_gl(ell, ord) {
                    return Err(Error::invariant("periodic tail word is not generalized Lyndon"));
                }
                if let Some(l) = last {
                    if omega_cmp_unchecked(l, ell, ord).is_lt() {
                        return Err(Error::invariant("last head factor is below the periodic tail"));
                    }
                }
            }
            Tail::Open { residual_index } => {
                if *residual_index != self.head_len() + 1 {
                    return Err(Error::invariant("open tail does not start after the head"));
                }
            }
        }
        let n = match self.tail {
            Tail::Open { .. } => prefix.len().min(self.head_len()),
            _ => prefix.len(),
        };
        if let Some(i) = self.expand(n).iter().zip(prefix).position(|(a, b)| a != b) {
            return Err(Error::invariant(format!(
                "factorization disagrees with the source at position {}",
                i + 1
            )));
        }
        if self.expand(n).len() < n {
            return Err(Error::invariant("factorization is shorter than the source prefix"));
        }
        Ok(())
    }

    /// Checks the factorization of an eventually periodic word: all
    /// invariants, letterwise agreement on `10·size` letters past the head,
    /// and exact equality of the represented words.
    pub fn verify(&self, w: &EventuallyPeriodicWord, ord: &OrderSchedule) -> Result<()> {
        let window = self.head_len() + 10 * w.size();
        self.verify_prefix(&w.prefix(window), ord)?;
        let head: Vec<Letter> = self.head.iter().flat_map(|f| f.iter().copied()).collect();
        let rebuilt = match &self.tail {
            Tail::Infinite(t) => t.prepend(&head),
            Tail::Periodic(ell) => EventuallyPeriodicWord::from_letters(head, ell.to_vec())?,
            Tail::Open { .. } => {
                return Err(Error::invariant("open tail for an eventually periodic word"))
            }
        };
        if &rebuilt != w {
            return Err(Error::invariant("factorization does not reproduce the source word"));
        }
        Ok(())
    }
}

pub(crate) fn infinite_gl(w: &EventuallyPeriodicWord, ord: &OrderSchedule) -> bool {
    (2..=w.size() + 1).all(|k| cmp_ep_unchecked(w, &w.suffix(k), ord).is_lt())
}

/// True iff `w` is strictly smaller than each of its proper suffixes.
pub fn is_infinite_generalized_lyndon(w: &EventuallyPeriodicWord, ord: &OrderSchedule) -> Result<bool> {
    ord.check_ep(w)?;
    Ok(infinite_gl(w, ord))
}

/// The least 1-based index `k ≥ 2` whose suffix `w[k, ∞)` is not greater
/// than `w`. `None` when `w` is infinite generalized Lyndon.
pub fn witness_suffix(w: &EventuallyPeriodicWord, ord: &OrderSchedule) -> Result<Option<usize>> {
    ord.check_ep(w)?;
    Ok((2..=w.size() + 1).find(|&k| !cmp_ep_unchecked(w, &w.suffix(k), ord).is_lt()))
}

pub(crate) fn first_gl_suffix(w: &EventuallyPeriodicWord, ord: &OrderSchedule) -> Option<usize> {
    (1..=w.size()).find(|&m| infinite_gl(&w.suffix(m), ord))
}

/// The least 1-based index `m` such that `w[m, ∞)` is infinite generalized
/// Lyndon.
pub fn first_gl_suffix_index(w: &EventuallyPeriodicWord, ord: &OrderSchedule) -> Result<Option<usize>> {
    ord.check_ep(w)?;
    Ok(first_gl_suffix(w, ord))
}

/// Extra rounds allowed when absorbing copies of the periodic tail word.
pub const ABSORB_SLACK: usize = 64;

/// The unique nonincreasing factorization of an eventually periodic word.
pub fn factorize_eventually_periodic(
    w: &EventuallyPeriodicWord,
    ord: &OrderSchedule,
) -> Result<InfiniteFactorization> {
    ord.check_ep(w)?;
    let result = if let Some(m) = first_gl_suffix(w, ord) {
        let prefix = w.prefix(m - 1);
        let head = if m == 1 {
            Vec::new()
        } else {
            factorize_letters(&prefix, ord)?
                .into_iter()
                .map(|r| FiniteWord::from(&prefix[r]))
                .collect()
        };
        InfiniteFactorization {
            head,
            tail: Tail::Infinite(w.suffix(m)),
        }
    } else {
        periodic_tail_factorization(w, ord)?
    };
    if let Err(e) = result.verify(w, ord) {
        return Err(Error::invariant(format!("computed factorization fails: {e}")));
    }
    Ok(result)
}

fn periodic_tail_factorization(
    w: &EventuallyPeriodicWord,
    ord: &OrderSchedule,
) -> Result<InfiniteFactorization> {
    let period = w.period();
    let r = min_rotation_offset(period, ord);
    let ell: Vec<Letter> = period[r..].iter().chain(&period[..r]).copied().collect();
    let mut x = w.prefix(w.preperiod().len() + r).into_letters();
    let tail = Tail::Periodic(FiniteWord::from(ell.clone()));
    if x.is_empty() {
        return Ok(InfiniteFactorization { head: Vec::new(), tail });
    }
    let cap = x.len() + ell.len() + ABSORB_SLACK;
    for _ in 0..=cap {
        let ranges = factorize_letters(&x, ord)?;
        let last = ranges.last().expect("nonempty factorization").clone();
        if omega_cmp_unchecked(&x[last], &ell, ord).ordering != Ordering::Less {
            let head = ranges.into_iter().map(|r| FiniteWord::from(&x[r])).collect();
            return Ok(InfiniteFactorization { head, tail });
        }
        x.extend_from_slice(&ell);
    }
    Err(Error::invariant(format!(
        "periodic tail was not absorbed within {cap} rounds"
    )))
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

    fn fw(s: &str) -> FiniteWord {
        FiniteWord::parse(s, &bin()).unwrap()
    }

    fn alt() -> OrderSchedule {
        OrderSchedule::alternating(bin())
    }

    fn std2() -> OrderSchedule {
        OrderSchedule::standard(bin())
    }

    #[test]
    fn predicate_examples() {
        assert!(is_infinite_generalized_lyndon(&ep("010000100(1)^w"), &alt()).unwrap());
        assert!(!is_infinite_generalized_lyndon(&ep("01000010(0)^w"), &alt()).unwrap());
        assert!(!is_infinite_generalized_lyndon(&ep("01000010(1)^w"), &alt()).unwrap());
        assert!(!is_infinite_generalized_lyndon(&ep("(01)^w"), &alt()).unwrap());
        assert!(is_infinite_generalized_lyndon(&ep("0(1)^w"), &std2()).unwrap());
    }

    #[test]
    fn first_suffix_examples() {
        assert_eq!(first_gl_suffix_index(&ep("0(1)^w"), &std2()).unwrap(), Some(1));
        assert_eq!(first_gl_suffix_index(&ep("(01)^w"), &alt()).unwrap(), None);
        assert_eq!(first_gl_suffix_index(&ep("10(1)^w"), &std2()).unwrap(), Some(2));
    }

    #[test]
    fn witness_suffix_examples() {
        assert_eq!(witness_suffix(&ep("(01)^w"), &alt()).unwrap(), Some(3));
        assert_eq!(witness_suffix(&ep("0(1)^w"), &std2()).unwrap(), None);
        let w = ep("01000010(0)^w");
        let k = witness_suffix(&w, &alt()).unwrap().unwrap();
        assert!(!cmp_ep_unchecked(&w, &w.suffix(k), &alt()).is_lt());
    }

    #[test]
    fn factorization_examples() {
        let f = factorize_eventually_periodic(&ep("(01)^w"), &alt()).unwrap();
        assert_eq!(f.head, Vec::<FiniteWord>::new());
        assert_eq!(f.tail, Tail::Periodic(fw("01")));

        let w = ep("010000100(1)^w");
        let f = factorize_eventually_periodic(&w, &alt()).unwrap();
        assert!(f.head.is_empty());
        assert_eq!(f.tail, Tail::Infinite(w));

        let f = factorize_eventually_periodic(&ep("(0)^w"), &std2()).unwrap();
        assert!(f.head.is_empty());
        assert_eq!(f.tail, Tail::Periodic(fw("0")));

        let f = factorize_eventually_periodic(&ep("10(1)^w"), &std2()).unwrap();
        assert_eq!(f.head, vec![fw("1")]);
        assert_eq!(f.tail, Tail::Infinite(ep("0(1)^w")));
    }

    #[test]
    fn periodic_tail_absorbs_copies() {
        // Under the standard order 1 > 0, so the tail factors of 1(10)^ω
        // are copies of 01 after the head 1.
        let f = factorize_eventually_periodic(&ep("1(10)^w"), &std2()).unwrap();
        assert_eq!(f.head, vec![fw("1"), fw("1")]);
        assert_eq!(f.tail, Tail::Periodic(fw("01")));
        let f = factorize_eventually_periodic(&ep("0(10)^w"), &std2()).unwrap();
        assert!(f.head.is_empty());
        assert_eq!(f.tail, Tail::Periodic(fw("01")));
    }
}
