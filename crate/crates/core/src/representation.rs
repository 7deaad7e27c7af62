//! The bijection `R` between permutations of length `n` and vectors
//! `[a_0, .., a_{n-1}]` with `1 <= a_j <= j+1`.
//!
//! `R^{-1}(α) = κ_{n-2,a_1} ∘ κ_{n-3,a_2} ∘ .. ∘ κ_{0,a_{n-1}}`. Writing
//! `c = π^{-1}` for the positions of the symbols of `π`, component `a_i`
//! (for `i < n-1`) counts the symbols `>= n-1-i` met while walking cyclically
//! rightwards from symbol `n-1-i` up to (not including) symbol `n-2-i`, and
//! `a_{n-1} = n - c_0`.
//!
//! Two routes are provided for each direction: a quadratic reference built
//! literally from the definition, and an `O(n log n)` path built on
//! [`RankedSet`] / [`InsertableSequence`].

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::RepError;
use crate::perm::Permutation;
use crate::structures::{InsertableSequence, RankedSet};
use crate::text;

/// An element of `V_n`: `a_0 = 1` and `1 <= a_j <= j+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct RepVector {
    a: Vec<usize>,
}

impl RepVector {
    pub fn new(a: Vec<usize>) -> Result<Self, RepError> {
        if a.is_empty() {
            return Err(RepError::Empty);
        }
        for (index, &value) in a.iter().enumerate() {
            if value == 0 || value > index + 1 {
                return Err(RepError::InvalidRepVector {
                    index,
                    value,
                    max: index + 1,
                });
            }
        }
        Ok(RepVector { a })
    }

    pub(crate) fn from_vec_unchecked(a: Vec<usize>) -> Self {
        debug_assert!(RepVector::new(a.clone()).is_ok(), "{a:?} not in V_n");
        RepVector { a }
    }

    /// `[1, 2, .., n]`, the representation of the identity.
    pub fn identity(n: usize) -> Self {
        RepVector {
            a: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn components(&self) -> &[usize] {
        &self.a
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.a
    }

    /// Unreduced component sum.
    pub fn parity(&self) -> u64 {
        self.a.iter().map(|&x| x as u64).sum()
    }
}

impl fmt::Display for RepVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::join(&self.a))
    }
}

impl FromStr for RepVector {
    type Err = RepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RepVector::new(text::parse_list(s)?)
    }
}

/// The bits `b_1, .., b_{n-1}` of a permutation `ρ`: `b_{n-1-i}` is set when
/// the cyclic walk from symbol `i` to symbol `i-1` passes the largest symbol.
/// Symbol `-1` is a marker sitting just past the last position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitProfile {
    bits: Vec<bool>,
}

impl BitProfile {
    pub fn n(&self) -> usize {
        self.bits.len() + 1
    }

    /// `b_j` for `1 <= j <= n-1`.
    pub fn bit(&self, j: usize) -> bool {
        self.bits[j - 1]
    }

    /// `(b_1, .., b_{n-1})` as 0/1 values.
    pub fn to_vec(&self) -> Vec<u8> {
        self.bits.iter().map(|&b| b as u8).collect()
    }
}

/// Parities of the `n` reinsertion candidates: entry `i` is
/// `parity(R(κ_{n-i-1,1} ∘ ρ))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityProfile {
    parities: Vec<i64>,
}

impl ParityProfile {
    pub fn as_slice(&self) -> &[i64] {
        &self.parities
    }

    pub fn len(&self) -> usize {
        self.parities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parities.is_empty()
    }

    /// Indices whose entry is congruent to `t` modulo the profile length.
    pub fn residue_hits(&self, t: usize) -> Vec<usize> {
        let n = self.parities.len() as i64;
        let t = t as i64;
        self.parities
            .iter()
            .enumerate()
            .filter(|&(_, &p)| (p - t).rem_euclid(n) == 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// True when the sorted entries form `n` consecutive integers.
    pub fn is_consecutive_run(&self) -> bool {
        let mut sorted = self.parities.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[1] == w[0] + 1)
    }
}

/// `⟨x⟩_n`: the remainder of `x` modulo `n`, taken in `1..=n`.
pub fn mod_ceil(x: i64, n: usize) -> usize {
    let r = x.rem_euclid(n as i64) as usize;
    if r == 0 {
        n
    } else {
        r
    }
}

/// `R^{-1}` by composing the suffix block transpositions one at a time.
pub fn rep_inverse_naive(alpha: &RepVector) -> Permutation {
    let n = alpha.n();
    let mut p = Permutation::identity(n);
    for j in 1..n {
        let kappa = Permutation::kappa(n, n - 1 - j, alpha.a[j]).expect("α ∈ V_n");
        p = p.compose(&kappa).expect("equal lengths");
    }
    p
}

/// `R` by direct counting over the positions `c = ρ^{-1}`; `O(n^2)`.
pub fn rep_naive(rho: &Permutation) -> RepVector {
    let n = rho.len();
    let c = rho.inverse().into_vec();
    let mut a = vec![0; n];
    for i in 0..n - 1 {
        let start = c[n - 1 - i];
        let reach = (c[n - 2 - i] + n - start) % n;
        a[i] = (0..=i)
            .filter(|&k| (c[n - 1 - k] + n - start) % n <= reach)
            .count();
    }
    a[n - 1] = n - c[0];
    RepVector::from_vec_unchecked(a)
}

/// `R` in `O(n log n)`.
///
/// Symbols are visited in increasing order. For symbol `j` the walk from its
/// position to the position of `j-1` covers `D` cells; every cell holding a
/// smaller symbol (already inserted in the rank set) is discounted.
pub fn rep_fast(rho: &Permutation) -> RepVector {
    let n = rho.len();
    let c = rho.inverse().into_vec();
    let mut a = vec![0; n];
    let mut seen = RankedSet::new(n);
    a[n - 1] = n - c[0];
    seen.insert(c[0]).expect("positions are distinct");
    for j in 1..n {
        let start = c[j];
        let target = c[j - 1];
        let span = (target + n - start) % n;
        // Seen positions strictly between `start` and `target`, cyclically.
        let below_target = seen.count_less(target);
        let up_to_start = seen.count_less(start + 1);
        let passed = if start < target {
            below_target - up_to_start
        } else {
            seen.len() - up_to_start + below_target
        };
        a[n - 1 - j] = span - passed;
        seen.insert(start).expect("positions are distinct");
    }
    RepVector::from_vec_unchecked(a)
}

/// `R^{-1}` in `O(n log n)`.
///
/// Builds the cyclic order of the symbols from `n-1` downwards: symbol `j`
/// goes `a_{n-2-j}` cells after symbol `j+1`. The insertion indices depend
/// only on `α` and the current length, so they are computed first and then
/// replayed backwards, each symbol taking the free slot its index names.
/// The answer is the rotation that puts symbol 0 at position `n - a_{n-1}`.
pub fn rep_inverse_fast(alpha: &RepVector) -> Permutation {
    let n = alpha.n();
    if n == 1 {
        return Permutation::identity(1);
    }
    // (symbol, index at insertion time)
    let mut schedule = Vec::with_capacity(n);
    schedule.push((n - 1, 0));
    schedule.push((n - 2, 0));
    let mut cursor = 0usize;
    for j in (0..n - 2).rev() {
        let len = n - 1 - j;
        let mut at = cursor + alpha.a[n - 2 - j];
        if at > len {
            at -= len;
        }
        schedule.push((j, at));
        cursor = at;
    }
    let mut slots = RankedSet::new(n);
    let mut order = vec![0usize; n];
    for &(symbol, at) in schedule.iter().rev() {
        let slot = slots.select_absent(at).expect("index within length");
        slots.insert(slot).expect("slot is free");
        order[slot] = symbol;
    }
    let zero_at = n - alpha.a[n - 1];
    order.rotate_left((cursor + n - zero_at) % n);
    Permutation::from_vec_unchecked(order)
}

/// `R^{-1}` by maintaining the cyclic order explicitly, doubled so each
/// insertion is a plain index insert; `O(n log n)` expected, but with far
/// worse locality than [`rep_inverse_fast`].
pub fn rep_inverse_online(alpha: &RepVector) -> Permutation {
    let n = alpha.n();
    if n == 1 {
        return Permutation::identity(1);
    }
    let mut seq = InsertableSequence::with_capacity(2 * n);
    for (k, v) in [n - 2, n - 1, n - 2, n - 1].into_iter().enumerate() {
        seq.insert_at(k, v).expect("in range");
    }
    // `cursor` is the index, in the first copy, of the last symbol placed.
    let mut cursor = 0usize;
    for j in (0..n - 2).rev() {
        let half = n - 1 - j;
        let at = cursor + alpha.a[n - 2 - j];
        if at <= half {
            seq.insert_at(at, j).expect("in range");
            seq.insert_at(at + half + 1, j).expect("in range");
            cursor = at;
        } else {
            seq.insert_at(at, j).expect("in range");
            seq.insert_at(at - half, j).expect("in range");
            cursor = at - half;
        }
    }
    let zero_at = n - alpha.a[n - 1];
    let start = (cursor + n - zero_at) % n;
    let doubled = seq.to_vec();
    Permutation::from_vec_unchecked(doubled[start..start + n].to_vec())
}

/// Component sum of `α`.
pub fn parity(alpha: &RepVector) -> u64 {
    alpha.parity()
}

/// The bit profile of `ρ`.
///
/// With `c = ρ^{-1}`, `b_{n-1-i}` is 1 exactly when
/// `[c_i - c_{n-1} mod n] + [c_{i-1} - c_i mod n] > n`, where the `i = 0`
/// term uses the marker position `c_{-1} = n` and is not reduced.
pub fn b_sequence(rho: &Permutation) -> BitProfile {
    let c = rho.inverse().into_vec();
    bits_from_positions(&c)
}

fn bits_from_positions(c: &[usize]) -> BitProfile {
    let n = c.len();
    let top = c[n - 1];
    let mut bits = vec![false; n - 1];
    for i in 0..n - 1 {
        let to_symbol = (c[i] + n - top) % n;
        let walk = if i == 0 {
            n - c[0]
        } else {
            (c[i - 1] + n - c[i]) % n
        };
        bits[n - 2 - i] = to_symbol + walk > n;
    }
    BitProfile { bits }
}

/// Parities of all `n` reinsertions of the last symbol of `pi`.
///
/// `pi` is a received word with its missing symbol appended. One call to
/// [`rep_fast`] gives entry 0; the rest follow from the bit profile:
/// entry `i` is `p_0 + i(1 - b_i) - (b_1 + .. + b_i)`.
pub fn insertion_parities(pi: &Permutation) -> ParityProfile {
    let rho = pi.inverse();
    let base = rep_fast(&rho).parity() as i64;
    let bits = bits_from_positions(pi.as_slice());
    let n = pi.len();
    let mut parities = Vec::with_capacity(n);
    parities.push(base);
    let mut ones = 0i64;
    for i in 1..n {
        let b = bits.bit(i);
        ones += b as i64;
        let rise = if b { 0 } else { i as i64 };
        parities.push(base + rise - ones);
    }
    ParityProfile { parities }
}
