//! Randomized invariant suites with deterministic per-trial seeding.

use std::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::finite::{factorize_finite, is_gl};
use crate::galois::{compare_via_phi, digit_alphabet, DigitWord};
use crate::infinite::{factorize_eventually_periodic, first_gl_suffix, InfiniteFactorization, Tail};
use crate::oracle::{enumerate_factorizations, infinite_gl_oracle};
use crate::order::{
    cmp_ep_unchecked, compare_weak_chain, omega_cmp_unchecked, prefix_compatible, OrderSchedule,
};
use crate::stream::{factorize_stream, gl_prefix_census};
use crate::word::{EventuallyPeriodicWord, FiniteWord, Word};

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 8] = ["c1", "h", "j", "m", "phi", "uniqueness", "first-suffix", "ep-factorization"];

pub const DEFAULT_SEED: u64 = 20_240_601;

/// Outcome counts of one suite run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub trials: usize,
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    /// Trials whose hypothesis did not hold, so nothing was tested.
    pub vacuous: usize,
    /// Descriptions of the first few failures.
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// Outcome of a single trial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Trial {
    Pass,
    Fail(String),
    Vacuous,
}

/// Generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// A period-3 schedule with orders drawn from a fixed seed, chosen so that
/// not every position uses the same order.
pub fn fixed_random_schedule(alphabet: &Alphabet) -> OrderSchedule {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    loop {
        let period: Vec<Vec<Letter>> = (0..3)
            .map(|_| {
                let mut p: Vec<Letter> = alphabet.letters().collect();
                p.shuffle(&mut rng);
                p
            })
            .collect();
        if alphabet.len() < 2 || period.iter().any(|p| p != &period[0]) {
            let s = OrderSchedule::new(alphabet.clone(), Vec::new(), period).expect("valid schedule");
            return s.with_name("random3");
        }
    }
}

/// Standard, opposite, alternating and the fixed period-3 schedule.
pub fn reference_schedules(alphabet: &Alphabet) -> Vec<OrderSchedule> {
    vec![
        OrderSchedule::standard(alphabet.clone()),
        OrderSchedule::opposite(alphabet.clone()),
        OrderSchedule::alternating(alphabet.clone()),
        fixed_random_schedule(alphabet),
    ]
}

pub fn random_word(rng: &mut impl Rng, k: usize, len: usize) -> Vec<Letter> {
    (0..len).map(|_| Letter(rng.gen_range(0..k as u32))).collect()
}

pub fn random_word_in(rng: &mut impl Rng, k: usize, lens: std::ops::RangeInclusive<usize>) -> Vec<Letter> {
    let n = rng.gen_range(lens);
    random_word(rng, k, n)
}

pub fn random_ep(rng: &mut impl Rng, k: usize, max_pre: usize, max_per: usize) -> EventuallyPeriodicWord {
    let pre = rng.gen_range(0..=max_pre);
    let per = rng.gen_range(1..=max_per);
    EventuallyPeriodicWord::from_letters(random_word(rng, k, pre), random_word(rng, k, per))
        .expect("nonempty period")
}

fn pick_alphabet(rng: &mut impl Rng) -> Alphabet {
    if rng.gen_bool(0.5) {
        Alphabet::binary()
    } else {
        Alphabet::numeric(3)
    }
}

fn pick_schedule(rng: &mut impl Rng, alphabet: &Alphabet) -> OrderSchedule {
    let mut all = reference_schedules(alphabet);
    let i = rng.gen_range(0..all.len());
    all.swap_remove(i)
}

fn ids(w: &[Letter]) -> String {
    w.iter().map(|l| l.0.to_string()).collect()
}

fn ep_string(w: &EventuallyPeriodicWord) -> String {
    format!("{}({})^w", ids(w.preperiod()), ids(w.period()))
}

/// The four equivalent conditions on `u^ω` and `v^ω`.
pub fn c1_conditions(u: &[Letter], v: &[Letter], ord: &OrderSchedule) -> [bool; 4] {
    let uv: Vec<Letter> = u.iter().chain(v).copied().collect();
    let vu: Vec<Letter> = v.iter().chain(u).copied().collect();
    [
        omega_cmp_unchecked(u, v, ord).is_lt(),
        omega_cmp_unchecked(&uv, v, ord).is_lt(),
        omega_cmp_unchecked(u, &vu, ord).is_lt(),
        omega_cmp_unchecked(&uv, &vu, ord).is_lt(),
    ]
}

pub fn c1_trial(rng: &mut impl Rng) -> Trial {
    let a = pick_alphabet(rng);
    let ord = pick_schedule(rng, &a);
    let u = random_word_in(rng, a.len(), 1..=8);
    let v = random_word_in(rng, a.len(), 1..=8);
    let c = c1_conditions(&u, &v, &ord);
    if c.iter().all(|&b| b == c[0]) {
        Trial::Pass
    } else {
        Trial::Fail(format!("u={} v={} under {}: {c:?}", ids(&u), ids(&v), ord.name()))
    }
}

/// Compares `u^ω` with `v` and `u·v` with `v`.
pub fn h_orderings(u: &[Letter], v: &EventuallyPeriodicWord, ord: &OrderSchedule) -> (Ordering, Ordering) {
    let uw = EventuallyPeriodicWord::from_letters(Vec::new(), u.to_vec()).expect("nonempty");
    let a = cmp_ep_unchecked(&uw, v, ord).ordering;
    let b = cmp_ep_unchecked(&v.prepend(u), v, ord).ordering;
    (a, b)
}

pub fn h_trial(rng: &mut impl Rng) -> Trial {
    let a = pick_alphabet(rng);
    let ord = pick_schedule(rng, &a);
    let u = random_word_in(rng, a.len(), 1..=8);
    let v = if rng.gen_bool(0.2) {
        // Force long agreement with u^ω.
        let r = rng.gen_range(0..4);
        let mut pre: Vec<Letter> = u.iter().copied().cycle().take(u.len() * r).collect();
        pre.extend(random_word_in(rng, a.len(), 0..=3));
        EventuallyPeriodicWord::from_letters(pre, random_word_in(rng, a.len(), 1..=6)).unwrap()
    } else {
        random_ep(rng, a.len(), 6, 6)
    };
    let (x, y) = h_orderings(&u, &v, &ord);
    let gt = (x == Ordering::Greater) == (y == Ordering::Greater);
    let lt = (x == Ordering::Less) == (y == Ordering::Less);
    if gt && lt {
        Trial::Pass
    } else {
        Trial::Fail(format!("u={} v={} under {}: {x:?} vs {y:?}", ids(&u), ep_string(&v), ord.name()))
    }
}

pub fn j_trial(rng: &mut impl Rng) -> Trial {
    let a = pick_alphabet(rng);
    let ord = pick_schedule(rng, &a);
    let u = random_word_in(rng, a.len(), 1..=5);
    let v: Vec<Letter> = if rng.gen_bool(0.5) {
        let keep = rng.gen_range(0..=3 * u.len());
        let mut v: Vec<Letter> = u.iter().copied().cycle().take(keep).collect();
        v.extend(random_word_in(rng, a.len(), 0..=3));
        v
    } else {
        random_word_in(rng, a.len(), 0..=8)
    };
    let n = rng.gen_range(1..=4);
    let uw = Word::Infinite(EventuallyPeriodicWord::from_letters(Vec::new(), u.clone()).unwrap());
    let vw = Word::Finite(FiniteWord::from(v.clone()));
    let mut unv: Vec<Letter> = u.iter().copied().cycle().take(n * u.len()).collect();
    unv.extend_from_slice(&v);
    let unv = Word::Finite(unv.into());
    let forward = compare_weak_chain(&[uw.clone(), vw.clone(), unv.clone()], &ord).unwrap();
    let backward = compare_weak_chain(&[unv, vw.clone(), uw.clone()], &ord).unwrap();
    if !forward && !backward {
        return Trial::Vacuous;
    }
    if prefix_compatible(&vw, &uw) {
        Trial::Pass
    } else {
        Trial::Fail(format!("u={} v={} n={n} under {}", ids(&u), ids(&v), ord.name()))
    }
}

/// GL prefix lengths of `ℓ^ω` in `[2|ℓ|, 10|ℓ|]`.
pub fn m_violations(ell: &[Letter], ord: &OrderSchedule) -> Vec<usize> {
    let w = EventuallyPeriodicWord::from_letters(Vec::new(), ell.to_vec()).expect("nonempty");
    let report = gl_prefix_census(&w, 10 * ell.len(), ord).expect("budget is positive");
    report
        .gl_prefix_lengths
        .into_iter()
        .filter(|&t| t >= 2 * ell.len())
        .collect()
}

pub fn m_trial(rng: &mut impl Rng) -> Trial {
    let a = pick_alphabet(rng);
    let ord = pick_schedule(rng, &a);
    let ell = random_word_in(rng, a.len(), 1..=6);
    if is_gl(&ell, &ord) {
        return Trial::Vacuous;
    }
    let bad = m_violations(&ell, &ord);
    if bad.is_empty() {
        Trial::Pass
    } else {
        Trial::Fail(format!("ell={} under {}: GL prefixes {bad:?}", ids(&ell), ord.name()))
    }
}

pub fn random_digit_pair(rng: &mut impl Rng) -> (DigitWord, DigitWord) {
    fn draw(rng: &mut impl Rng, lens: std::ops::RangeInclusive<usize>) -> Vec<u32> {
        let n = rng.gen_range(lens);
        (0..n).map(|_| rng.gen_range(1..=4)).collect()
    }
    let pre1 = draw(rng, 0..=5);
    let per1 = draw(rng, 1..=4);
    let first = DigitWord::new(&pre1, &per1).unwrap();
    let second = if rng.gen_bool(0.4) {
        let keep = rng.gen_range(0..=8);
        let mut pre = first.values(keep);
        pre.extend(draw(rng, 0..=2));
        DigitWord::new(&pre, &draw(rng, 1..=4)).unwrap()
    } else {
        DigitWord::new(&draw(rng, 0..=5), &draw(rng, 1..=4)).unwrap()
    };
    (first, second)
}

/// Alternating-order comparison of two digit words over `{1..4}`.
pub fn alternating_digit_order(a: &DigitWord, b: &DigitWord) -> Ordering {
    let ord = OrderSchedule::alternating(digit_alphabet(4));
    cmp_ep_unchecked(a.word(), b.word(), &ord).ordering
}

pub fn phi_trial(rng: &mut impl Rng) -> Trial {
    let (a, b) = random_digit_pair(rng);
    match compare_via_phi(&a, &b) {
        Ok(o) if o == alternating_digit_order(&a, &b) => Trial::Pass,
        Ok(o) => Trial::Fail(format!("{a} vs {b}: phi gives {o:?}")),
        Err(e) => Trial::Fail(format!("{a} vs {b}: {e}")),
    }
}

/// Checks that exhaustive enumeration finds exactly the computed
/// factorization.
pub fn uniqueness_check(w: &FiniteWord, ord: &OrderSchedule) -> std::result::Result<(), String> {
    let fast = factorize_finite(w, ord).map_err(|e| e.to_string())?;
    let all = enumerate_factorizations(w, ord).map_err(|e| e.to_string())?;
    if all.len() != 1 {
        return Err(format!("{} under {}: {} factorizations", ids(w), ord.name(), all.len()));
    }
    if all[0] != fast {
        return Err(format!("{} under {}: enumeration disagrees", ids(w), ord.name()));
    }
    Ok(())
}

pub fn uniqueness_trial(rng: &mut impl Rng) -> Trial {
    let a = pick_alphabet(rng);
    let ord = pick_schedule(rng, &a);
    let w = FiniteWord::from(random_word_in(rng, a.len(), 1..=12));
    match uniqueness_check(&w, &ord) {
        Ok(()) => Trial::Pass,
        Err(e) => Trial::Fail(e),
    }
}

/// Checks that the infinite term of the factorization starts at the first
/// generalized Lyndon suffix and that no earlier suffix is one.
pub fn first_suffix_check(w: &EventuallyPeriodicWord, ord: &OrderSchedule) -> std::result::Result<bool, String> {
    let Some(m) = first_gl_suffix(w, ord) else {
        return Ok(false);
    };
    let f = factorize_eventually_periodic(w, ord).map_err(|e| e.to_string())?;
    let Tail::Infinite(t) = &f.tail else {
        return Err(format!("{}: expected an infinite term", ep_string(w)));
    };
    if f.head_len() + 1 != m || t != &w.suffix(m) {
        return Err(format!("{}: tail starts at {}, expected {m}", ep_string(w), f.head_len() + 1));
    }
    for k in 1..m {
        if infinite_gl_oracle(&w.suffix(k), ord).map_err(|e| e.to_string())? {
            return Err(format!("{}: suffix {k} is already generalized Lyndon", ep_string(w)));
        }
    }
    if !infinite_gl_oracle(t, ord).map_err(|e| e.to_string())? {
        return Err(format!("{}: oracle rejects the infinite term", ep_string(w)));
    }
    Ok(true)
}

pub fn first_suffix_trial(rng: &mut impl Rng) -> Trial {
    let a = pick_alphabet(rng);
    let ord = pick_schedule(rng, &a);
    let w = random_ep(rng, a.len(), 8, 6);
    match first_suffix_check(&w, &ord) {
        Ok(true) => Trial::Pass,
        Ok(false) => Trial::Vacuous,
        Err(e) => Trial::Fail(format!("{e} under {}", ord.name())),
    }
}

/// Checks a stream factorization against the exact factorization `exact`
/// of the same word: the stable factors continue the exact head, then
/// copies of the periodic tail word or a prefix of the infinite term, and
/// they cover at least the exact head.
pub fn stream_agreement(
    exact: &InfiniteFactorization,
    stream: &InfiniteFactorization,
) -> std::result::Result<(), String> {
    let head = &exact.head;
    let stable = &stream.head;
    if stable.len() < head.len() {
        return Err(format!("only {} of {} head factors stabilized", stable.len(), head.len()));
    }
    if &stable[..head.len()] != head.as_slice() {
        return Err("stable factors disagree with the exact head".into());
    }
    let extra = &stable[head.len()..];
    match &exact.tail {
        Tail::Periodic(ell) => {
            if let Some(i) = extra.iter().position(|f| f != ell) {
                return Err(format!("stable factor {} is not the tail word", head.len() + i + 1));
            }
        }
        Tail::Infinite(t) => {
            let letters: Vec<Letter> = extra.iter().flat_map(|f| f.iter().copied()).collect();
            if t.prefix(letters.len()).letters() != letters.as_slice() {
                return Err("stable factors beyond the head leave the infinite term".into());
            }
        }
        Tail::Open { .. } => return Err("exact factorization has an open tail".into()),
    }
    Ok(())
}

/// Full soundness check of the factorization of `w`, including agreement
/// with prefix stabilization at `budget`.
pub fn ep_factorization_check(w: &EventuallyPeriodicWord, ord: &OrderSchedule, budget: usize) -> std::result::Result<(), String> {
    let f = factorize_eventually_periodic(w, ord).map_err(|e| e.to_string())?;
    f.verify(w, ord).map_err(|e| e.to_string())?;
    let is_periodic_tail = matches!(f.tail, Tail::Periodic(_));
    if is_periodic_tail && first_gl_suffix(w, ord).is_some() {
        return Err("periodic tail although a generalized Lyndon suffix exists".into());
    }
    let s = factorize_stream(w, budget, ord).map_err(|e| e.to_string())?;
    s.verify_prefix(&w.prefix(budget).into_letters(), ord).map_err(|e| e.to_string())?;
    stream_agreement(&f, &s)
}

pub fn ep_factorization_trial(rng: &mut impl Rng, budget: usize) -> Trial {
    let a = pick_alphabet(rng);
    let ord = pick_schedule(rng, &a);
    let w = random_ep(rng, a.len(), 8, 6);
    match ep_factorization_check(&w, &ord, budget) {
        Ok(()) => Trial::Pass,
        Err(e) => Trial::Fail(format!("{} under {}: {e}", ep_string(&w), ord.name())),
    }
}

/// Runs `trials` trials of the named suite.
pub fn run_suite(name: &str, trials: usize, seed: u64) -> Result<SuiteReport> {
    let trial: fn(&mut ChaCha8Rng) -> Trial = match name {
        "c1" => |r| c1_trial(r),
        "h" => |r| h_trial(r),
        "j" => |r| j_trial(r),
        "m" => |r| m_trial(r),
        "phi" => |r| phi_trial(r),
        "uniqueness" => |r| uniqueness_trial(r),
        "first-suffix" => |r| first_suffix_trial(r),
        "ep-factorization" => |r| ep_factorization_trial(r, 1 << 10),
        _ => {
            return Err(Error::usage(format!(
                "unknown suite {name:?}; expected one of {}",
                SUITES.join(", ")
            )))
        }
    };
    let mut report = SuiteReport {
        suite: name.to_string(),
        trials,
        seed,
        passed: 0,
        failed: 0,
        vacuous: 0,
        failures: Vec::new(),
    };
    for t in 0..trials {
        match trial(&mut trial_rng(seed, t as u64)) {
            Trial::Pass => report.passed += 1,
            Trial::Vacuous => report.vacuous += 1,
            Trial::Fail(msg) => {
                report.failed += 1;
                if report.failures.len() < 5 {
                    report.failures.push(format!("trial {t}: {msg}"));
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeding_is_deterministic() {
        let a: Vec<u32> = (0..4).map(|_| trial_rng(7, 3).gen()).collect();
        let b: Vec<u32> = (0..4).map(|_| trial_rng(7, 3).gen()).collect();
        assert_eq!(a, b);
        assert_ne!(trial_rng(7, 3).gen::<u64>(), trial_rng(7, 4).gen::<u64>());
        assert_eq!(run_suite("c1", 50, 1).unwrap(), run_suite("c1", 50, 1).unwrap());
    }

    #[test]
    fn fixed_schedule_is_not_constant() {
        let s = fixed_random_schedule(&Alphabet::binary());
        assert_eq!(s.period().len(), 3);
        assert!(s.period().iter().any(|p| p != &s.period()[0]));
        assert_eq!(s.name(), "random3");
    }

    #[test]
    fn every_suite_passes_briefly() {
        for name in SUITES {
            let r = run_suite(name, 40, DEFAULT_SEED).unwrap();
            assert!(r.ok(), "{name}: {:?}", r.failures);
        }
        assert!(run_suite("zz", 1, 0).is_err());
    }
}
