//! Lazily generated infinite words, prefix censuses and budgeted
//! factorization by prefix stabilization.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::finite::factorize_letters;
use crate::infinite::{InfiniteFactorization, Tail};
use crate::order::OrderSchedule;
use crate::strings::{prefix_function, z_function};
use crate::word::{EventuallyPeriodicWord, FiniteWord};

/// Anything that can hand out arbitrarily long prefixes of one fixed
/// infinite word.
pub trait PrefixSource {
    fn prefix_letters(&self, n: usize) -> Vec<Letter>;
}

impl PrefixSource for EventuallyPeriodicWord {
    fn prefix_letters(&self, n: usize) -> Vec<Letter> {
        self.prefix(n).into_letters()
    }
}

/// Names accepted by [`StreamWord::builtin`].
pub const BUILTIN_STREAMS: [&str; 4] = [
    "thue_morse",
    "fibonacci_word",
    "period_doubling",
    "champernowne_binary",
];

#[derive(Debug, Clone)]
enum Generator {
    ThueMorse([Letter; 2]),
    Morphism { seed: Letter, rules: HashMap<Letter, Vec<Letter>> },
    Champernowne([Letter; 2]),
    Periodic(EventuallyPeriodicWord),
}

#[derive(Debug, Default)]
struct Cache {
    letters: Vec<Letter>,
    // Morphisms: number of cached letters whose image has been appended.
    expanded: usize,
    // Champernowne: next integer to write.
    next: u64,
}

/// An infinite word produced on demand and cached.
///
/// The cache only ever grows; concurrent readers share it behind a
/// read-write lock.
#[derive(Debug)]
pub struct StreamWord {
    name: String,
    generator: Generator,
    cache: RwLock<Cache>,
}

/// JSON form of a morphism fixed point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismFile {
    pub seed: String,
    pub rules: BTreeMap<String, String>,
}

fn binary_letters(alphabet: &Alphabet) -> Result<[Letter; 2]> {
    match (alphabet.letter("0"), alphabet.letter("1")) {
        (Some(a), Some(b)) => Ok([a, b]),
        _ => Err(Error::usage("built-in streams need the symbols 0 and 1 in the alphabet")),
    }
}

impl StreamWord {
    fn with(name: impl Into<String>, generator: Generator) -> Self {
        StreamWord {
            name: name.into(),
            generator,
            cache: RwLock::new(Cache::default()),
        }
    }

    /// `t(n)` = parity of the number of ones in the binary form of `n - 1`.
    pub fn thue_morse(alphabet: &Alphabet) -> Result<Self> {
        Ok(Self::with("thue_morse", Generator::ThueMorse(binary_letters(alphabet)?)))
    }

    /// Fixed point of `0 → 01, 1 → 0`.
    pub fn fibonacci_word(alphabet: &Alphabet) -> Result<Self> {
        let [a, b] = binary_letters(alphabet)?;
        Self::morphism("fibonacci_word", a, [(a, vec![a, b]), (b, vec![a])].into())
    }

    /// Fixed point of `0 → 01, 1 → 00`.
    pub fn period_doubling(alphabet: &Alphabet) -> Result<Self> {
        let [a, b] = binary_letters(alphabet)?;
        Self::morphism("period_doubling", a, [(a, vec![a, b]), (b, vec![a, a])].into())
    }

    /// Binary expansions of `1, 2, 3, …` written one after another.
    pub fn champernowne_binary(alphabet: &Alphabet) -> Result<Self> {
        Ok(Self::with("champernowne_binary", Generator::Champernowne(binary_letters(alphabet)?)))
    }

    pub fn eventually_periodic(w: EventuallyPeriodicWord, alphabet: &Alphabet) -> Self {
        Self::with(w.format(alphabet), Generator::Periodic(w))
    }

    pub fn constant(letter: Letter, alphabet: &Alphabet) -> Self {
        let w = EventuallyPeriodicWord::from_letters(Vec::new(), vec![letter]).expect("nonempty period");
        Self::eventually_periodic(w, alphabet)
    }

    /// Fixed point of a prolongable, non-erasing morphism starting at `seed`.
    pub fn morphism(
        name: impl Into<String>,
        seed: Letter,
        rules: HashMap<Letter, Vec<Letter>>,
    ) -> Result<Self> {
        let image = rules
            .get(&seed)
            .ok_or_else(|| Error::usage("the seed letter has no rule"))?;
        if image.len() < 2 || image[0] != seed {
            return Err(Error::usage("the seed image must start with the seed and be longer than it"));
        }
        for (l, img) in &rules {
            if img.is_empty() {
                return Err(Error::usage(format!("rule for {l} is erasing")));
            }
            if let Some(m) = img.iter().find(|m| !rules.contains_key(m)) {
                return Err(Error::usage(format!("letter {m} appears in an image but has no rule")));
            }
        }
        Ok(Self::with(name, Generator::Morphism { seed, rules }))
    }

    pub fn from_morphism_file(file: MorphismFile, alphabet: &Alphabet) -> Result<Self> {
        let resolve = |text: &str| crate::word::parse_tokens(text, alphabet, 0);
        let seed = match resolve(&file.seed)?.as_slice() {
            [s] => *s,
            _ => return Err(Error::usage("the morphism seed must be one letter")),
        };
        let mut rules = HashMap::new();
        for (k, v) in &file.rules {
            let key = match resolve(k)?.as_slice() {
                [s] => *s,
                _ => return Err(Error::usage(format!("rule key {k:?} must be one letter"))),
            };
            rules.insert(key, resolve(v)?);
        }
        Self::morphism("morphism", seed, rules)
    }

    pub fn from_morphism_json(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let file: MorphismFile = serde_json::from_str(text)
            .map_err(|e| Error::usage(format!("invalid morphism file: {e}")))?;
        Self::from_morphism_file(file, alphabet)
    }

    pub fn from_morphism_path(path: impl AsRef<Path>, alphabet: &Alphabet) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::usage(format!("cannot read {}: {e}", path.display())))?;
        let mut s = Self::from_morphism_json(&text, alphabet)?;
        s.name = path.display().to_string();
        Ok(s)
    }

    /// One of [`BUILTIN_STREAMS`].
    pub fn builtin(name: &str, alphabet: &Alphabet) -> Result<Self> {
        match name {
            "thue_morse" => Self::thue_morse(alphabet),
            "fibonacci_word" => Self::fibonacci_word(alphabet),
            "period_doubling" => Self::period_doubling(alphabet),
            "champernowne_binary" => Self::champernowne_binary(alphabet),
            _ => Err(Error::usage(format!(
                "unknown stream {name:?}; expected one of {}",
                BUILTIN_STREAMS.join(", ")
            ))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The letter at 1-based position `n`, or `None` for `n = 0`.
    pub fn letter_at(&self, n: usize) -> Option<Letter> {
        (n > 0).then(|| self.prefix_letters(n)[n - 1])
    }

    pub fn prefix(&self, n: usize) -> FiniteWord {
        self.prefix_letters(n).into()
    }

    fn extend(&self, cache: &mut Cache, n: usize) {
        match &self.generator {
            Generator::ThueMorse([a, b]) => {
                for i in cache.letters.len()..n {
                    cache.letters.push(if i.count_ones() % 2 == 0 { *a } else { *b });
                }
            }
            Generator::Periodic(w) => {
                for i in cache.letters.len()..n {
                    cache.letters.push(w.at(i));
                }
            }
            Generator::Champernowne([a, b]) => {
                while cache.letters.len() < n {
                    cache.next += 1;
                    let k = cache.next;
                    let bits = 64 - k.leading_zeros();
                    for j in (0..bits).rev() {
                        cache.letters.push(if (k >> j) & 1 == 1 { *b } else { *a });
                    }
                }
            }
            Generator::Morphism { seed, rules } => {
                if cache.letters.is_empty() {
                    cache.letters.extend_from_slice(&rules[seed]);
                    cache.expanded = 1;
                }
                while cache.letters.len() < n {
                    let l = cache.letters[cache.expanded];
                    cache.letters.extend_from_slice(&rules[&l]);
                    cache.expanded += 1;
                }
            }
        }
    }
}

impl PrefixSource for StreamWord {
    fn prefix_letters(&self, n: usize) -> Vec<Letter> {
        {
            let cache = self.cache.read().expect("stream cache lock");
            if cache.letters.len() >= n {
                return cache.letters[..n].to_vec();
            }
        }
        let mut cache = self.cache.write().expect("stream cache lock");
        if cache.letters.len() < n {
            self.extend(&mut cache, n);
        }
        cache.letters[..n].to_vec()
    }
}

/// Heuristic reading of a prefix census.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    LikelyGl,
    LikelyNotGl,
    Inconclusive,
}

/// Generalized Lyndon prefix lengths up to a budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub budget: usize,
    pub gl_prefix_lengths: Vec<usize>,
    pub verdict: Verdict,
}

/// Lengths `t` in `1..=|y|` for which `y[..t)` is generalized Lyndon.
///
/// A prefix fails as soon as some suffix `y[k..t)` beats `y` at a mismatch
/// inside the prefix; otherwise only rotations at its borders can compete,
/// and those are settled along the border chain.
pub(crate) fn gl_prefix_lengths(y: &[Letter], ord: &OrderSchedule) -> Vec<usize> {
    let n = y.len();
    if n == 0 {
        return Vec::new();
    }
    let z = z_function(y);
    let pi = prefix_function(y);
    let mut cutoff = n + 1;
    for k in 1..n {
        let e = k + z[k];
        if e < n && ord.letter_order(z[k] + 1, y[e], y[z[k]]).is_lt() {
            cutoff = cutoff.min(e + 1);
        }
    }
    let border_wins = |d: usize| {
        let e = d + z[d];
        e < n && ord.letter_order(e + 1, y[e], y[z[d]]).is_lt()
    };
    let mut good = vec![true; n + 1];
    let mut out = Vec::new();
    for t in 1..=n {
        let d = pi[t - 1];
        good[t] = d == 0 || (border_wins(d) && good[d]);
        let primitive = d == 0 || t % (t - d) != 0;
        if t < cutoff && primitive && good[t] {
            out.push(t);
        }
    }
    out
}

/// All generalized Lyndon prefix lengths up to `budget`, with a verdict:
/// likely GL if one lies in the top quarter of the budget, likely not GL if
/// none lies beyond a quarter of it.
pub fn gl_prefix_census(
    w: &(impl PrefixSource + ?Sized),
    budget: usize,
    ord: &OrderSchedule,
) -> Result<CensusReport> {
    if budget == 0 {
        return Err(Error::usage("census budget must be at least 1"));
    }
    let y = w.prefix_letters(budget);
    ord.check(&y)?;
    let lengths = gl_prefix_lengths(&y, ord);
    let verdict = if lengths.iter().any(|&t| 4 * t > 3 * budget) {
        Verdict::LikelyGl
    } else if lengths.iter().all(|&t| 4 * t <= budget) {
        Verdict::LikelyNotGl
    } else {
        Verdict::Inconclusive
    };
    Ok(CensusReport {
        budget,
        gl_prefix_lengths: lengths,
        verdict,
    })
}

/// Number of top ladder rungs that must agree on a factor.
pub const STABLE_RUNGS: usize = 3;

/// Prefix lengths `2, 4, 8, …` up to `budget`, ending at `budget`.
pub fn ladder(budget: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut n = 2;
    while n <= budget {
        out.push(n);
        n *= 2;
    }
    if out.last() != Some(&budget) {
        out.push(budget);
    }
    out
}

/// Leading factors on which the factorizations of the top rungs of the
/// prefix ladder agree, followed by an open tail.
pub fn factorize_stream(
    w: &(impl PrefixSource + ?Sized),
    budget: usize,
    ord: &OrderSchedule,
) -> Result<InfiniteFactorization> {
    if budget < 2 {
        return Err(Error::usage("stream factorization budget must be at least 2"));
    }
    let y = w.prefix_letters(budget);
    ord.check(&y)?;
    let rungs = ladder(budget);
    let top = &rungs[rungs.len().saturating_sub(STABLE_RUNGS)..];
    let mut stable: Option<Vec<std::ops::Range<usize>>> = None;
    for &n in top {
        let f = factorize_letters(&y[..n], ord)?;
        stable = Some(match stable {
            None => f,
            Some(s) => s.into_iter().zip(f).take_while(|(a, b)| a == b).map(|(a, _)| a).collect(),
        });
    }
    let head: Vec<FiniteWord> = stable
        .unwrap_or_default()
        .into_iter()
        .map(|r| FiniteWord::from(&y[r]))
        .collect();
    let residual_index = head.iter().map(|f| f.len()).sum::<usize>() + 1;
    Ok(InfiniteFactorization {
        head,
        tail: Tail::Open { residual_index },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::is_gl;

    fn bin() -> Alphabet {
        Alphabet::binary()
    }

    fn ids(w: &[Letter]) -> String {
        w.iter().map(|l| char::from(b'0' + l.0 as u8)).collect()
    }

    #[test]
    fn builtin_prefixes() {
        let a = bin();
        let s = |name: &str| ids(&StreamWord::builtin(name, &a).unwrap().prefix_letters(16));
        assert_eq!(s("thue_morse"), "0110100110010110");
        assert_eq!(s("fibonacci_word"), "0100101001001010");
        assert_eq!(s("period_doubling"), "0100010101000100");
        assert_eq!(s("champernowne_binary"), "1101110010111011");
        assert!(StreamWord::builtin("nope", &a).is_err());
    }

    #[test]
    fn cached_prefixes_agree() {
        let s = StreamWord::fibonacci_word(&bin()).unwrap();
        let long = s.prefix_letters(1000);
        assert_eq!(s.prefix_letters(10), long[..10]);
        assert_eq!(s.letter_at(1000), Some(long[999]));
        assert_eq!(s.letter_at(0), None);
    }

    #[test]
    fn morphism_files() {
        let a = bin();
        let s = StreamWord::from_morphism_json(r#"{"seed":"0","rules":{"0":"01","1":"10"}}"#, &a).unwrap();
        assert_eq!(ids(&s.prefix_letters(8)), "01101001");
        let bad = [
            r#"{"seed":"1","rules":{"0":"01","1":"0"}}"#,
            r#"{"seed":"0","rules":{"0":"01"}}"#,
            r#"{"seed":"0","rules":{"0":"01","1":""}}"#,
            r#"{"seed":"0","rules":{"0":"0","1":"1"}}"#,
        ];
        for b in bad {
            assert!(StreamWord::from_morphism_json(b, &a).is_err(), "{b}");
        }
    }

    #[test]
    fn census_matches_prefix_predicate() {
        let a = bin();
        let schedules = [
            OrderSchedule::standard(a.clone()),
            OrderSchedule::opposite(a.clone()),
            OrderSchedule::alternating(a.clone()),
        ];
        for ord in &schedules {
            for name in BUILTIN_STREAMS {
                let y = StreamWord::builtin(name, &a).unwrap().prefix_letters(300);
                let naive: Vec<usize> = (1..=y.len()).filter(|&t| is_gl(&y[..t], ord)).collect();
                assert_eq!(gl_prefix_lengths(&y, ord), naive, "{name}");
            }
            for bits in 0..(1u32 << 12) {
                let y: Vec<Letter> = (0..12).map(|i| Letter((bits >> i) & 1)).collect();
                let naive: Vec<usize> = (1..=12).filter(|&t| is_gl(&y[..t], ord)).collect();
                assert_eq!(gl_prefix_lengths(&y, ord), naive, "{}", ids(&y));
            }
        }
    }

    #[test]
    fn census_examples() {
        let a = bin();
        let alt = OrderSchedule::alternating(a.clone());
        let std = OrderSchedule::standard(a.clone());
        let w = EventuallyPeriodicWord::parse("(01)^w", &a).unwrap();
        let r = gl_prefix_census(&w, 101, &alt).unwrap();
        let mut expected: Vec<usize> = (1..=101).step_by(2).collect();
        expected.insert(1, 2);
        assert_eq!(r.gl_prefix_lengths, expected);
        let zero = StreamWord::constant(Letter(0), &a);
        let r = gl_prefix_census(&zero, 64, &std).unwrap();
        assert_eq!(r.gl_prefix_lengths, vec![1]);
        assert_eq!(r.verdict, Verdict::LikelyNotGl);
        let tm = StreamWord::thue_morse(&a).unwrap();
        let r = gl_prefix_census(&tm, 4096, &std).unwrap();
        assert!(r.gl_prefix_lengths.last().unwrap() * 4 <= 4096);
        assert!(gl_prefix_census(&tm, 0, &std).is_err());
    }

    #[test]
    fn ladder_shape() {
        assert_eq!(ladder(2), vec![2]);
        assert_eq!(ladder(16), vec![2, 4, 8, 16]);
        assert_eq!(ladder(20), vec![2, 4, 8, 16, 20]);
    }

    #[test]
    fn stream_factorization_examples() {
        let a = bin();
        let std = OrderSchedule::standard(a.clone());
        let zero = StreamWord::constant(Letter(0), &a);
        let f = factorize_stream(&zero, 16, &std).unwrap();
        assert!(!f.head.is_empty());
        assert!(f.head.iter().all(|x| x.letters() == [Letter(0)]));
        assert_eq!(f.tail, Tail::Open { residual_index: f.head.len() + 1 });

        let alt = OrderSchedule::alternating(a.clone());
        let w = StreamWord::eventually_periodic(EventuallyPeriodicWord::parse("(01)^w", &a).unwrap(), &a);
        let f = factorize_stream(&w, 1 << 10, &alt).unwrap();
        assert!(!f.head.is_empty());
        assert!(f.head.iter().all(|x| x.letters() == [Letter(0), Letter(1)]));
        assert!(factorize_stream(&zero, 1, &std).is_err());
    }
}
