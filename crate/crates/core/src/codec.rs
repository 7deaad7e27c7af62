//! The codebooks `C_{T,n}`: encoding data digits, membership, and recovery
//! from a single stable deletion.
//!
//! A codeword is `(R^{-1}(α))^{-1}` for some `α` whose component sum is
//! congruent to `T` modulo `n`. Components `a_1, .., a_{n-2}` carry the data
//! and `a_{n-1}` is the check component.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::CodecError;
use crate::perm::{DeletedWord, Permutation};
use crate::representation::{insertion_parities, mod_ceil, rep_fast, rep_inverse_fast, RepVector};
use crate::text;

/// Identifies the codebook `C_{T,n}`; `t` is stored reduced into `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeParams {
    n: usize,
    t: usize,
}

impl CodeParams {
    /// Any integer `t` is accepted and reduced modulo `n`.
    pub fn new(n: usize, t: i64) -> Result<Self, CodecError> {
        if n < 2 {
            return Err(CodecError::InvalidLength(n));
        }
        Ok(CodeParams {
            n,
            t: t.rem_euclid(n as i64) as usize,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Number of user digits, `n - 2`.
    pub fn data_len(&self) -> usize {
        self.n - 2
    }
}

/// Data digits `a_1, .., a_{n-2}` with `1 <= a_j <= j+1`.
///
/// The digits are a little-endian factoradic numeral: the message value is
/// `Σ (a_j - 1)·j!`, which ranges over `0..(n-1)!`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitMessage {
    n: usize,
    digits: Vec<usize>,
}

impl DigitMessage {
    pub fn from_digits(n: usize, digits: Vec<usize>) -> Result<Self, CodecError> {
        if n < 2 {
            return Err(CodecError::InvalidLength(n));
        }
        check_digits(n, &digits)?;
        Ok(DigitMessage { n, digits })
    }

    pub fn from_value(n: usize, value: &BigUint) -> Result<Self, CodecError> {
        digits_from_message(n, value)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn digits(&self) -> &[usize] {
        &self.digits
    }

    /// The message integer. Costs `O(n^2 log n)` bit operations, so avoid it
    /// on hot paths at large `n`.
    pub fn value(&self) -> BigUint {
        value_of(&self.digits)
    }
}

impl std::fmt::Display for DigitMessage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&text::join(&self.digits))
    }
}

fn check_digits(n: usize, digits: &[usize]) -> Result<(), CodecError> {
    if digits.len() != n - 2 {
        return Err(CodecError::LengthMismatch {
            expected: n - 2,
            found: digits.len(),
        });
    }
    for (k, &value) in digits.iter().enumerate() {
        let index = k + 1;
        if value == 0 || value > index + 1 {
            return Err(CodecError::DigitOutOfRange {
                index,
                value,
                max: index + 1,
            });
        }
    }
    Ok(())
}

/// Groups consecutive radices `2, 3, ..` so each group's product fits a u64.
/// Yields `(first digit offset, digit count, product)`.
fn radix_groups(count: usize) -> Vec<(usize, usize, u64)> {
    let mut groups = Vec::new();
    let mut start = 0;
    while start < count {
        let mut product: u64 = 1;
        let mut len = 0;
        while start + len < count {
            let radix = (start + len + 2) as u64;
            match product.checked_mul(radix) {
                Some(p) => {
                    product = p;
                    len += 1;
                }
                None => break,
            }
        }
        groups.push((start, len, product));
        start += len;
    }
    groups
}

fn value_of(digits: &[usize]) -> BigUint {
    let mut value = BigUint::zero();
    for (start, len, product) in radix_groups(digits.len()).into_iter().rev() {
        let mut local: u64 = 0;
        for k in (start..start + len).rev() {
            local = local * (k as u64 + 2) + (digits[k] as u64 - 1);
        }
        value = value * product + local;
    }
    value
}

/// Little-endian factoradic expansion of `m`, peeling radices `2, 3, .., n-1`.
pub fn digits_from_message(n: usize, m: &BigUint) -> Result<DigitMessage, CodecError> {
    if n < 2 {
        return Err(CodecError::InvalidLength(n));
    }
    let count = n - 2;
    let mut rest = m.clone();
    let mut digits = Vec::with_capacity(count);
    for (start, len, product) in radix_groups(count) {
        let mut local = (&rest % product).to_u64().expect("remainder fits");
        rest /= product;
        for k in start..start + len {
            let radix = k as u64 + 2;
            digits.push((local % radix) as usize + 1);
            local /= radix;
        }
    }
    if !rest.is_zero() {
        return Err(CodecError::MessageOutOfRange {
            n,
            limit: factorial(n - 1).to_string(),
        });
    }
    Ok(DigitMessage { n, digits })
}

/// Inverse of [`digits_from_message`].
pub fn message_from_digits(n: usize, digits: &[usize]) -> Result<BigUint, CodecError> {
    if n < 2 {
        return Err(CodecError::InvalidLength(n));
    }
    check_digits(n, digits)?;
    Ok(value_of(digits))
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigUint {
    radix_groups(n.saturating_sub(1))
        .into_iter()
        .fold(BigUint::from(1u32), |f, (_, _, product)| f * product)
}

/// The full representation vector for `digits` in `C_{T,n}`:
/// `[1, a_1, .., a_{n-2}, ⟨T - 1 - Σ a_j⟩_n]`.
pub fn code_vector(params: CodeParams, d: &DigitMessage) -> Result<RepVector, CodecError> {
    let n = params.n;
    if d.n != n {
        return Err(CodecError::LengthMismatch {
            expected: n - 2,
            found: d.digits.len(),
        });
    }
    let sum: i64 = d.digits.iter().map(|&a| a as i64).sum();
    let check = mod_ceil(params.t as i64 - 1 - sum, n);
    let mut a = Vec::with_capacity(n);
    a.push(1);
    a.extend_from_slice(&d.digits);
    a.push(check);
    Ok(RepVector::new(a).expect("data digits and check component are in range"))
}

/// Maps data digits to their codeword in `C_{T,n}`.
pub fn encode(params: CodeParams, d: &DigitMessage) -> Result<Permutation, CodecError> {
    let alpha = code_vector(params, d)?;
    Ok(rep_inverse_fast(&alpha).inverse())
}

/// True iff `parity(R(p^{-1})) ≡ T (mod n)`.
pub fn membership(p: &Permutation, params: CodeParams) -> Result<bool, CodecError> {
    if p.len() != params.n {
        return Err(CodecError::WrongLength {
            n: params.n,
            found: p.len(),
        });
    }
    Ok(residue(p, params.n) == params.t as u64)
}

fn residue(p: &Permutation, n: usize) -> u64 {
    rep_fast(&p.inverse()).parity() % n as u64
}

/// Outcome of [`decode`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    pub codeword: Permutation,
    pub digits: DigitMessage,
    /// Position where the missing symbol was put back; `n-1` when nothing
    /// was deleted.
    pub insertion_index: usize,
}

fn data_of(codeword: &Permutation) -> (RepVector, DigitMessage) {
    let n = codeword.len();
    let alpha = rep_fast(&codeword.inverse());
    let digits = alpha.components()[1..n - 1].to_vec();
    (alpha, DigitMessage { n, digits })
}

/// Recovers the codeword and data from a received word of length `n` (no
/// deletion) or `n-1` (one deletion).
///
/// For a deletion, the missing symbol is appended and the parity profile of
/// all `n` reinsertions is computed at once; exactly one entry matches `T`.
pub fn decode(params: CodeParams, received: &[usize]) -> Result<DecodeResult, CodecError> {
    let n = params.n;
    if received.len() == n {
        let codeword = Permutation::validate(received, n)
            .map_err(|source| CodecError::InvalidSymbols { n, source })?;
        let (alpha, digits) = data_of(&codeword);
        let residue = alpha.parity() % n as u64;
        if residue != params.t as u64 {
            return Err(CodecError::NotACodeword {
                word: codeword.to_string(),
                residue,
                t: params.t,
                n,
            });
        }
        return Ok(DecodeResult {
            codeword,
            digits,
            insertion_index: n - 1,
        });
    }
    if received.len() + 1 != n {
        return Err(CodecError::WrongLength {
            n,
            found: received.len(),
        });
    }
    let word = DeletedWord::from_symbols(n, received.to_vec())
        .map_err(|source| CodecError::InvalidSymbols { n, source })?;
    let profile = insertion_parities(&word.with_missing_appended());
    let hits = profile.residue_hits(params.t);
    if hits.len() != 1 {
        return Err(CodecError::AmbiguousProfile {
            t: params.t,
            n,
            hits: hits.len(),
        });
    }
    let insertion_index = n - 1 - hits[0];
    let codeword = word.restore_at(insertion_index).expect("index in range");
    let (alpha, digits) = data_of(&codeword);
    debug_assert_eq!(alpha.parity() % n as u64, params.t as u64);
    Ok(DecodeResult {
        codeword,
        digits,
        insertion_index,
    })
}
