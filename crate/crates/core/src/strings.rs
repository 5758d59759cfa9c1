//! Order-independent string kernels shared by the faster code paths.

use crate::alphabet::Letter;

/// `z[i]` is the length of the longest common prefix of `s` and `s[i..]`;
/// `z[0] = s.len()`.
pub(crate) fn z_function(s: &[Letter]) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0; n];
    if n == 0 {
        return z;
    }
    z[0] = n;
    let (mut l, mut r) = (0, 0);
    for i in 1..n {
        if i < r {
            z[i] = (r - i).min(z[i - l]);
        }
        while i + z[i] < n && s[z[i]] == s[i + z[i]] {
            z[i] += 1;
        }
        if i + z[i] > r {
            l = i;
            r = i + z[i];
        }
    }
    z
}

/// `pi[i]` is the length of the longest proper border of `s[..=i]`.
pub(crate) fn prefix_function(s: &[Letter]) -> Vec<usize> {
    let n = s.len();
    let mut pi = vec![0; n];
    for i in 1..n {
        let mut k = pi[i - 1];
        while k > 0 && s[i] != s[k] {
            k = pi[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        pi[i] = k;
    }
    pi
}

/// Length of the primitive root of a nonempty word.
pub(crate) fn primitive_root_len(s: &[Letter]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let p = n - prefix_function(s)[n - 1];
    if n.is_multiple_of(p) {
        p
    } else {
        n
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

const MOD: u64 = (1 << 61) - 1;
const BASE: u64 = 0x1f3a_5c77_9e2d_4b81 % MOD;

#[inline]
fn mul_mod(a: u64, b: u64) -> u64 {
    let p = (a as u128) * (b as u128);
    let lo = (p as u64) & MOD;
    let hi = (p >> 61) as u64;
    let s = lo + hi;
    if s >= MOD {
        s - MOD
    } else {
        s
    }
}

/// Prefix hashes over a fixed word, answering longest-common-extension
/// queries in `O(log n)`.
///
/// Hash equality is only a hint: callers that need certainty re-check their
/// final answers with exact letter comparisons.
pub(crate) struct Extension<'a> {
    word: &'a [Letter],
    prefix: Vec<u64>,
    powers: Vec<u64>,
}

impl<'a> Extension<'a> {
    pub(crate) fn new(word: &'a [Letter]) -> Self {
        let n = word.len();
        let mut prefix = Vec::with_capacity(n + 1);
        let mut powers = Vec::with_capacity(n + 1);
        prefix.push(0);
        powers.push(1);
        for (i, l) in word.iter().enumerate() {
            let h = mul_mod(prefix[i], BASE) + (l.0 as u64 + 1);
            prefix.push(if h >= MOD { h - MOD } else { h });
            powers.push(mul_mod(powers[i], BASE));
        }
        Extension {
            word,
            prefix,
            powers,
        }
    }

    #[inline]
    fn hash(&self, start: usize, len: usize) -> u64 {
        let a = self.prefix[start + len];
        let b = mul_mod(self.prefix[start], self.powers[len]);
        if a >= b {
            a - b
        } else {
            a + MOD - b
        }
    }

    /// Longest common prefix of `word[i..]` and `word[j..]`, capped at `cap`.
    pub(crate) fn lce(&self, i: usize, j: usize, cap: usize) -> usize {
        let n = self.word.len();
        let cap = cap.min(n - i).min(n - j);
        if i == j {
            return cap;
        }
        // Short extensions are common; scan a few letters before hashing.
        let quick = cap.min(8);
        for k in 0..quick {
            if self.word[i + k] != self.word[j + k] {
                return k;
            }
        }
        if quick == cap {
            return cap;
        }
        let (mut lo, mut hi) = (quick, cap);
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            if self.hash(i, mid) == self.hash(j, mid) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        lo
    }

    pub(crate) fn word(&self) -> &'a [Letter] {
        self.word
    }
}
