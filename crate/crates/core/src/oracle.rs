//! Brute-force oracles, kept independent of the fast algorithms they check,
//! and a bounded search for infinite extensions of finite words.

use std::cmp::Ordering;

use crate::alphabet::Letter;
use crate::error::{Error, Result};
use crate::finite::{is_gl, FiniteFactorization};
use crate::infinite::infinite_gl;
use crate::order::OrderSchedule;
use crate::word::{EventuallyPeriodicWord, FiniteWord};

/// Longest word accepted by [`enumerate_factorizations`].
pub const ENUMERATION_CAP: usize = 14;

/// Longest word accepted by [`gl_by_rotations_oracle`].
pub const ROTATION_CAP: usize = 1024;

fn literal_cmp(x: &[Letter], y: &[Letter], ord: &OrderSchedule) -> Ordering {
    for (i, (a, b)) in x.iter().zip(y).enumerate() {
        if a != b {
            let n = i + 1;
            return ord.rank(n, *a).cmp(&ord.rank(n, *b));
        }
    }
    x.len().cmp(&y.len())
}

fn rotations_strict_min(w: &[Letter], ord: &OrderSchedule) -> bool {
    if w.is_empty() {
        return false;
    }
    let mut rotations: Vec<Vec<Letter>> = (0..w.len())
        .map(|k| w[k..].iter().chain(&w[..k]).copied().collect())
        .collect();
    rotations.sort_by(|x, y| literal_cmp(x, y, ord));
    rotations[0] == w && (rotations.len() == 1 || rotations[1] != w)
}

/// Generalized Lyndon test by sorting every rotation.
pub fn gl_by_rotations_oracle(w: &FiniteWord, ord: &OrderSchedule) -> Result<bool> {
    if w.len() > ROTATION_CAP {
        return Err(Error::usage(format!("rotation oracle is capped at length {ROTATION_CAP}")));
    }
    ord.check(w)?;
    Ok(rotations_strict_min(w, ord))
}

/// `u^ω` against `v^ω` on an expansion of `4·(|u| + |v|)` letters.
fn literal_omega_cmp(u: &[Letter], v: &[Letter], ord: &OrderSchedule) -> Ordering {
    let n = 4 * (u.len() + v.len());
    let a: Vec<Letter> = u.iter().copied().cycle().take(n).collect();
    let b: Vec<Letter> = v.iter().copied().cycle().take(n).collect();
    literal_cmp(&a, &b, ord)
}

/// Every composition of `w` into generalized Lyndon factors whose
/// ω-powers do not increase.
pub fn enumerate_factorizations(w: &FiniteWord, ord: &OrderSchedule) -> Result<Vec<FiniteFactorization>> {
    let n = w.len();
    if n > ENUMERATION_CAP {
        return Err(Error::usage(format!(
            "factorization enumeration is capped at length {ENUMERATION_CAP}"
        )));
    }
    ord.check(w)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for cuts in 0u32..(1 << (n - 1)) {
        let mut factors: Vec<&[Letter]> = Vec::new();
        let mut start = 0;
        for i in 1..=n {
            if i == n || cuts >> (i - 1) & 1 == 1 {
                factors.push(&w[start..i]);
                start = i;
            }
        }
        let ok = factors.iter().all(|f| rotations_strict_min(f, ord))
            && factors
                .windows(2)
                .all(|p| literal_omega_cmp(p[0], p[1], ord) != Ordering::Less);
        if ok {
            out.push(FiniteFactorization {
                factors: factors.into_iter().map(FiniteWord::from).collect(),
            });
        }
    }
    Ok(out)
}

/// Infinite generalized Lyndon test by expanding the word and each of its
/// first `|preperiod| + |period|` proper suffixes to `3·size + 1` letters.
pub fn infinite_gl_oracle(w: &EventuallyPeriodicWord, ord: &OrderSchedule) -> Result<bool> {
    ord.check_ep(w)?;
    let size = w.size();
    let n = 3 * size + 1;
    let expanded = w.prefix(n + size).into_letters();
    Ok((1..=size).all(|k| literal_cmp(&expanded[..n], &expanded[k..k + n], ord) == Ordering::Less))
}

/// Limits for [`conjecture_search`]. The preperiod length counts the word
/// being extended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjectureBounds {
    pub max_period: usize,
    pub max_preperiod: usize,
}

impl Default for ConjectureBounds {
    fn default() -> Self {
        ConjectureBounds {
            max_period: 8,
            max_preperiod: 12,
        }
    }
}

fn words_of_length(k: usize, n: usize) -> impl Iterator<Item = Vec<Letter>> {
    let total = (k as u128).pow(n as u32);
    (0..total).map(move |mut code| {
        let mut out = vec![Letter(0); n];
        for slot in out.iter_mut().rev() {
            *slot = Letter((code % k as u128) as u32);
            code /= k as u128;
        }
        out
    })
}

/// Searches words `w·p·q^ω` by increasing `|w| + |p| + |q|` and returns the
/// first that is infinite generalized Lyndon. `None` means the bounded
/// search was exhausted.
pub fn conjecture_search(
    w: &FiniteWord,
    ord: &OrderSchedule,
    bounds: ConjectureBounds,
) -> Result<Option<EventuallyPeriodicWord>> {
    ord.check(w)?;
    if w.len() < 2 {
        return Err(Error::usage("the word to extend must have length at least 2"));
    }
    if !is_gl(w, ord) {
        return Err(Error::usage("the word to extend must be generalized Lyndon"));
    }
    let k = ord.alphabet().len();
    let max_extra = bounds.max_preperiod.saturating_sub(w.len());
    for total in 1..=max_extra + bounds.max_period {
        for plen in 0..=max_extra.min(total - 1) {
            let qlen = total - plen;
            if qlen > bounds.max_period {
                continue;
            }
            for p in words_of_length(k, plen) {
                for q in words_of_length(k, qlen) {
                    if crate::strings::primitive_root_len(&q) != qlen {
                        continue;
                    }
                    if p.last().is_some_and(|l| Some(l) == q.last()) {
                        continue;
                    }
                    let mut pre = w.to_vec();
                    pre.extend_from_slice(&p);
                    let x = EventuallyPeriodicWord::from_letters(pre, q)?;
                    if infinite_gl(&x, ord) {
                        return Ok(Some(x));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn fw(s: &str) -> FiniteWord {
        FiniteWord::parse(s, &Alphabet::binary()).unwrap()
    }

    fn alt() -> OrderSchedule {
        OrderSchedule::alternating(Alphabet::binary())
    }

    #[test]
    fn rotation_oracle_examples() {
        assert!(gl_by_rotations_oracle(&fw("01000010"), &alt()).unwrap());
        assert!(!gl_by_rotations_oracle(&fw("00"), &alt()).unwrap());
        assert!(!gl_by_rotations_oracle(&fw(""), &alt()).unwrap());
        // 0110 beats 0011 at the second letter, where 1 < 0.
        assert!(gl_by_rotations_oracle(&fw("0110"), &alt()).unwrap());
        assert!(!gl_by_rotations_oracle(&fw("0011"), &alt()).unwrap());
    }

    #[test]
    fn enumeration_examples() {
        let ab = Alphabet::parse("a,b").unwrap();
        let std = OrderSchedule::standard(ab.clone());
        let aba = FiniteWord::parse("aba", &ab).unwrap();
        let all = enumerate_factorizations(&aba, &std).unwrap();
        assert_eq!(all.len(), 1);
        let parts: Vec<String> = all[0].factors.iter().map(|f| f.format(&ab)).collect();
        assert_eq!(parts, ["ab", "a"]);
        assert_eq!(enumerate_factorizations(&fw("10"), &alt()).unwrap()[0].factors, vec![fw("1"), fw("0")]);
        assert_eq!(enumerate_factorizations(&fw("0"), &alt()).unwrap().len(), 1);
        assert!(enumerate_factorizations(&fw("010101010101010"), &alt()).is_err());
    }

    #[test]
    fn infinite_oracle_examples() {
        let a = Alphabet::binary();
        let ep = |s: &str| EventuallyPeriodicWord::parse(s, &a).unwrap();
        assert!(infinite_gl_oracle(&ep("010000100(1)^w"), &alt()).unwrap());
        assert!(!infinite_gl_oracle(&ep("01000010(0)^w"), &alt()).unwrap());
        assert!(!infinite_gl_oracle(&ep("(01)^w"), &alt()).unwrap());
    }

    #[test]
    fn conjecture_examples() {
        let a = Alphabet::binary();
        let x = conjecture_search(&fw("01000010"), &alt(), ConjectureBounds::default())
            .unwrap()
            .expect("a witness");
        assert!(infinite_gl_oracle(&x, &alt()).unwrap());
        assert_eq!(x.prefix(8), fw("01000010"));
        let std = OrderSchedule::standard(a.clone());
        let y = conjecture_search(&fw("01"), &std, ConjectureBounds::default()).unwrap().unwrap();
        assert_eq!(y.format(&a), "0(1)^w");
        assert!(matches!(
            conjecture_search(&fw("0"), &std, ConjectureBounds::default()),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            conjecture_search(&fw("10"), &std, ConjectureBounds::default()),
            Err(Error::Usage(_))
        ));
    }
}
