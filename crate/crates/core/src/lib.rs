//! Generalized lexicographic orders on words, generalized Lyndon words and
//! their unique nonincreasing factorizations.
//!
//! An [`OrderSchedule`] fixes a total order on the alphabet for every
//! position. Words are compared letter by letter, each position using its
//! own order, and a proper prefix is smaller than its extensions.

pub mod alphabet;
pub mod checks;
pub mod error;
pub mod finite;
pub mod galois;
pub mod infinite;
pub mod oracle;
pub mod order;
pub mod stream;
mod strings;
pub mod word;

pub use alphabet::{Alphabet, Letter};
pub use error::{Error, Result};
pub use finite::{
    all_gl_suffixes, factorize_finite, fractional_power_of, is_generalized_lyndon,
    minimal_rotation, primitive_root, witness_rotation, FiniteFactorization, FractionalExponent,
    FractionalPower,
};
pub use order::{
    compare, compare_eventually_periodic, compare_finite, compare_weak_chain, mixed_compare,
    omega_compare, prefix_compatible, Comparison, OrderSchedule, ScheduleFile,
};
pub use word::{EventuallyPeriodicWord, FiniteWord, Word};
pub use infinite::{
    factorize_eventually_periodic, first_gl_suffix_index, is_infinite_generalized_lyndon,
    witness_suffix, InfiniteFactorization, Tail,
};
pub use stream::{
    factorize_stream, gl_prefix_census, CensusReport, MorphismFile, PrefixSource, StreamWord,
    Verdict,
};
pub use galois::{compare_via_phi, phi_interval, DigitWord, RationalInterval};
pub use oracle::{
    conjecture_search, enumerate_factorizations, gl_by_rotations_oracle, infinite_gl_oracle,
    ConjectureBounds,
};
