//! Seed derivation and deterministic generators.
//!
//! Every randomized operation in this crate takes an explicit 64-bit seed.
//! Independent streams are derived by mixing the seed with a role tag (and
//! any further coordinates such as cell or trial indices) through the
//! SplitMix64 finalizer, then feeding the result to a counter-based ChaCha8
//! generator. Per-edge quantities (colors) are derived directly from the
//! mixed seed so they are a pure function of the edge, independent of
//! enumeration order.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Stream tags for the phases of one trial.
pub const TAG_HOST: u64 = 0x01;
pub const TAG_PERTURB: u64 = 0x02;
pub const TAG_COLOR: u64 = 0x03;
pub const TAG_FAMILY: u64 = 0x04;
pub const TAG_MERGE: u64 = 0x05;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 finalizer (Steele, Lea, Flood).
#[inline]
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(GOLDEN);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Mix an ordered sequence of words into one well-scrambled word.
#[inline]
pub fn mix(parts: &[u64]) -> u64 {
    let mut h = 0x243F_6A88_85A3_08D3; // pi fraction, arbitrary nonzero start
    for &p in parts {
        h = splitmix64(h ^ splitmix64(p));
    }
    h
}

/// Deterministic generator for a named substream of `seed`.
pub fn stream(seed: u64, tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix(&[seed, tag]))
}

/// Map a mixed word to `0..bound` without sampling bias worth caring about
/// (the bias is 2^-64 * bound; bound here is at most a few thousand).
#[inline]
pub fn bounded(word: u64, bound: u64) -> u64 {
    ((word as u128 * bound as u128) >> 64) as u64
}
