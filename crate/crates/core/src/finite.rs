//! Finite generalized Lyndon words and the unique nonincreasing
//! factorization of finite words.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::Range;

use crate::alphabet::Letter;
use crate::error::{Error, Result};
use crate::order::{omega_cmp_unchecked, OrderSchedule};
use crate::strings::{primitive_root_len, z_function, Extension};
use crate::word::FiniteWord;

/// Rotation offset `k` whose rotation is not strictly greater than `w`, if
/// any. `w` must be nonempty.
///
/// Every rotation is compared with `w` letter by letter; the comparisons
/// share one Z-array over `ww`, so the first mismatch is found directly.
pub(crate) fn first_non_greater_rotation(w: &[Letter], ord: &OrderSchedule) -> Option<usize> {
    let n = w.len();
    debug_assert!(n > 0);
    let mut ww = Vec::with_capacity(2 * n);
    ww.extend_from_slice(w);
    ww.extend_from_slice(w);
    let z = z_function(&ww);
    (1..n).find(|&k| {
        let l = z[k].min(n);
        l >= n || ord.letter_order(l + 1, w[l], w[(k + l) % n]) != Ordering::Less
    })
}

pub(crate) fn is_gl(w: &[Letter], ord: &OrderSchedule) -> bool {
    !w.is_empty() && first_non_greater_rotation(w, ord).is_none()
}

/// True iff `w` is strictly smaller than each of its other rotations.
/// The empty word is not generalized Lyndon.
pub fn is_generalized_lyndon(w: &FiniteWord, ord: &OrderSchedule) -> Result<bool> {
    ord.check(w)?;
    Ok(is_gl(w, ord))
}

/// A rotation of `w` that is not greater than `w`, witnessing that `w` is
/// not generalized Lyndon. `None` when `w` is generalized Lyndon or empty.
pub fn witness_rotation(w: &FiniteWord, ord: &OrderSchedule) -> Result<Option<FiniteWord>> {
    ord.check(w)?;
    if w.is_empty() {
        return Ok(None);
    }
    Ok(first_non_greater_rotation(w, ord).map(|k| w.rotation(k)))
}

pub(crate) fn min_rotation_offset(w: &[Letter], ord: &OrderSchedule) -> usize {
    let n = w.len();
    let rot = |k: usize| (0..n).map(move |i| w[(k + i) % n]);
    let mut best = 0;
    for k in 1..n {
        let c = crate::order::cmp_iters(ord, rot(k), rot(best), n, n);
        if c.is_lt() {
            best = k;
        }
    }
    best
}

/// The unique generalized Lyndon rotation of a primitive word.
pub fn minimal_rotation(w: &FiniteWord, ord: &OrderSchedule) -> Result<FiniteWord> {
    ord.check(w)?;
    if w.is_empty() {
        return Err(Error::domain("the empty word has no generalized Lyndon rotation"));
    }
    if primitive_root_len(w) != w.len() {
        return Err(Error::domain("a non-primitive word has no generalized Lyndon rotation"));
    }
    Ok(w.rotation(min_rotation_offset(w, ord)))
}

/// The shortest `root` with `root^exponent = w`.
pub fn primitive_root(w: &FiniteWord) -> Result<(FiniteWord, usize)> {
    if w.is_empty() {
        return Err(Error::domain("the empty word has no primitive root"));
    }
    let p = primitive_root_len(w);
    Ok((FiniteWord::from(&w[..p]), w.len() / p))
}

/// Exponent `|w| / |base|` of a fractional power, kept as a pair of lengths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FractionalExponent {
    pub numerator: usize,
    pub denominator: usize,
}

impl FractionalExponent {
    pub fn is_integral(&self) -> bool {
        self.numerator.is_multiple_of(self.denominator)
    }
}

/// A word of the form `base^(length/|base|)`: the first `length` letters of
/// `base^ω`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalPower {
    base: FiniteWord,
    length: usize,
}

impl FractionalPower {
    pub fn new(base: FiniteWord, length: usize) -> Result<Self> {
        if base.is_empty() {
            return Err(Error::domain("fractional power of the empty word"));
        }
        if length == 0 {
            return Err(Error::domain("fractional power must have positive length"));
        }
        Ok(FractionalPower { base, length })
    }

    pub fn base(&self) -> &FiniteWord {
        &self.base
    }

    pub fn exponent(&self) -> FractionalExponent {
        FractionalExponent {
            numerator: self.length,
            denominator: self.base.len(),
        }
    }

    pub fn realize(&self) -> FiniteWord {
        self.base.iter().copied().cycle().take(self.length).collect::<Vec<_>>().into()
    }
}

/// `Some(|w| / |base|)` iff `w` is a prefix of `base^ω`.
pub fn fractional_power_of(w: &FiniteWord, base: &FiniteWord) -> Result<Option<FractionalExponent>> {
    if base.is_empty() {
        return Err(Error::domain("fractional powers need a nonempty base"));
    }
    let fits = w.iter().zip(base.iter().cycle()).all(|(a, b)| a == b);
    Ok(fits.then_some(FractionalExponent {
        numerator: w.len(),
        denominator: base.len(),
    }))
}

/// A nonincreasing factorization into generalized Lyndon words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteFactorization {
    pub factors: Vec<FiniteWord>,
}

impl FiniteFactorization {
    pub fn concat(&self) -> FiniteWord {
        self.factors
            .iter()
            .flat_map(|f| f.iter().copied())
            .collect::<Vec<_>>()
            .into()
    }

    pub fn last(&self) -> Option<&FiniteWord> {
        self.factors.last()
    }

    /// Checks the three defining properties against `source`.
    pub fn verify(&self, source: &[Letter], ord: &OrderSchedule) -> Result<()> {
        let ranges = ranges_of(&self.factors);
        if self.concat().letters() != source {
            return Err(Error::invariant("factors do not concatenate to the source word"));
        }
        check_ranges(source, &ranges, ord)
    }

    fn from_ranges(x: &[Letter], ranges: &[Range<usize>]) -> Self {
        FiniteFactorization {
            factors: ranges.iter().map(|r| FiniteWord::from(&x[r.clone()])).collect(),
        }
    }
}

fn ranges_of(factors: &[FiniteWord]) -> Vec<Range<usize>> {
    let mut pos = 0;
    factors
        .iter()
        .map(|f| {
            let r = pos..pos + f.len();
            pos += f.len();
            r
        })
        .collect()
}

fn check_ranges(x: &[Letter], ranges: &[Range<usize>], ord: &OrderSchedule) -> Result<()> {
    if ranges.is_empty() {
        return Err(Error::invariant("a factorization needs at least one factor"));
    }
    for r in ranges {
        if !is_gl(&x[r.clone()], ord) {
            return Err(Error::invariant(format!(
                "factor at {}..{} is not generalized Lyndon",
                r.start + 1,
                r.end
            )));
        }
    }
    for p in ranges.windows(2) {
        if omega_cmp_unchecked(&x[p[0].clone()], &x[p[1].clone()], ord).is_lt() {
            return Err(Error::invariant(format!(
                "factors ending at {} and {} increase",
                p[0].end, p[1].end
            )));
        }
    }
    Ok(())
}

/// Compares `a^ω` with `b^ω` for `a = x[i..m)` and `b = x[j..m)` by
/// comparing `ab` with `ba`, which orders the same way.
fn suffix_omega_order(ext: &Extension<'_>, i: usize, j: usize, m: usize, ord: &OrderSchedule) -> Ordering {
    let x = ext.word();
    let left = [(i, m - i), (j, m - j)];
    let right = [(j, m - j), (i, m - i)];
    let (mut sa, mut oa, mut sb, mut ob, mut pos) = (0, 0, 0, 0, 0);
    while sa < 2 && sb < 2 {
        let (ka, la) = left[sa];
        let (kb, lb) = right[sb];
        let step = (la - oa).min(lb - ob);
        let l = ext.lce(ka + oa, kb + ob, step);
        if l < step {
            let (a, b) = (x[ka + oa + l], x[kb + ob + l]);
            return ord.letter_order(pos + l + 1, a, b);
        }
        pos += step;
        oa += step;
        ob += step;
        if oa == la {
            sa += 1;
            oa = 0;
        }
        if ob == lb {
            sb += 1;
            ob = 0;
        }
    }
    Ordering::Equal
}

/// Strips longest generalized Lyndon suffixes from the right.
///
/// The longest generalized Lyndon suffix of `x[..m)` starts at the
/// rightmost `k` minimizing `x[k..m)^ω`. When the remaining prefix ends with
/// another copy of the factor just removed, that copy is the next factor.
fn strip_longest_suffixes(x: &[Letter], ord: &OrderSchedule) -> Vec<Range<usize>> {
    let ext = Extension::new(x);
    let mut out = Vec::new();
    let mut m = x.len();
    while m > 0 {
        let mut best = m - 1;
        for k in (0..m - 1).rev() {
            if suffix_omega_order(&ext, k, best, m, ord) == Ordering::Less {
                best = k;
            }
        }
        out.push(best..m);
        let len = m - best;
        m = best;
        while m >= len && ext.lce(m - len, best, len) == len {
            out.push(m - len..m);
            m -= len;
        }
    }
    out.reverse();
    out
}

/// Exhaustive right-to-left search, memoized on (prefix length, the factor
/// that must follow).
fn search_factorization(x: &[Letter], ord: &OrderSchedule) -> Option<Vec<Range<usize>>> {
    struct Search<'a> {
        x: &'a [Letter],
        ord: &'a OrderSchedule,
        gl: HashMap<(usize, usize), bool>,
        solved: HashMap<(usize, usize), Option<usize>>,
    }

    impl Search<'_> {
        fn gl(&mut self, i: usize, j: usize) -> bool {
            let (x, ord) = (self.x, self.ord);
            *self.gl.entry((i, j)).or_insert_with(|| is_gl(&x[i..j], ord))
        }

        // Start of the last factor of x[..m) when the next factor is
        // x[m..next_end); `next_end == m` means no constraint.
        fn solve(&mut self, m: usize, next_end: usize) -> Option<usize> {
            if let Some(r) = self.solved.get(&(m, next_end)) {
                return *r;
            }
            let mut found = None;
            for i in 0..m {
                if !self.gl(i, m) {
                    continue;
                }
                if next_end > m
                    && omega_cmp_unchecked(&self.x[i..m], &self.x[m..next_end], self.ord).is_lt()
                {
                    continue;
                }
                if i == 0 || self.solve(i, m).is_some() {
                    found = Some(i);
                    break;
                }
            }
            self.solved.insert((m, next_end), found);
            found
        }
    }

    let mut s = Search {
        x,
        ord,
        gl: HashMap::new(),
        solved: HashMap::new(),
    };
    let mut out = Vec::new();
    let (mut m, mut next_end) = (x.len(), x.len());
    while m > 0 {
        let i = s.solve(m, next_end)?;
        out.push(i..m);
        next_end = m;
        m = i;
    }
    out.reverse();
    Some(out)
}

pub(crate) fn factorize_letters(x: &[Letter], ord: &OrderSchedule) -> Result<Vec<Range<usize>>> {
    if x.is_empty() {
        return Err(Error::usage("cannot factorize the empty word"));
    }
    let fast = strip_longest_suffixes(x, ord);
    if check_ranges(x, &fast, ord).is_ok() {
        return Ok(fast);
    }
    let found = search_factorization(x, ord)
        .ok_or_else(|| Error::invariant("no nonincreasing generalized Lyndon factorization found"))?;
    check_ranges(x, &found, ord)?;
    Ok(found)
}

/// The unique nonincreasing factorization of a nonempty finite word into
/// generalized Lyndon words.
pub fn factorize_finite(w: &FiniteWord, ord: &OrderSchedule) -> Result<FiniteFactorization> {
    ord.check(w)?;
    let ranges = factorize_letters(w, ord)?;
    Ok(FiniteFactorization::from_ranges(w, &ranges))
}

/// Ascending 1-based start indices of the generalized Lyndon suffixes.
pub fn all_gl_suffixes(w: &FiniteWord, ord: &OrderSchedule) -> Result<Vec<usize>> {
    ord.check(w)?;
    Ok((0..w.len()).filter(|&i| is_gl(&w[i..], ord)).map(|i| i + 1).collect())
}
