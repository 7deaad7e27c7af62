//! Perfect single-deletion-correcting permutation codes.
//!
//! The permutations of length `n` split into `n` codebooks `C_{T,n}`, each of
//! size `(n-1)!`, and every codebook corrects one stable deletion. Codewords
//! are described through a representation of permutations as products of
//! suffix block transpositions; encoding and decoding both run in
//! `O(n log n)`.
//!
//! ```
//! use permcode::{decode, encode, CodeParams, DigitMessage};
//!
//! let params = CodeParams::new(4, 0).unwrap();
//! let data = DigitMessage::from_digits(4, vec![1, 2]).unwrap();
//! let word = encode(params, &data).unwrap();
//! assert_eq!(word.to_string(), "0,2,1,3");
//!
//! let received = word.delete_at(1).unwrap();
//! let out = decode(params, received.symbols()).unwrap();
//! assert_eq!(out.codeword, word);
//! assert_eq!(out.digits, data);
//! ```

pub mod codec;
pub mod error;
pub mod oracle;
pub mod perm;
pub mod representation;
pub mod structures;
pub mod text;

pub use codec::{
    code_vector, decode, digits_from_message, encode, factorial, membership, message_from_digits,
    CodeParams, DecodeResult, DigitMessage,
};
pub use error::{CodecError, OracleError, ParseListError, PermError, RepError, StructureError};
pub use perm::{DeletedWord, Permutation};
pub use representation::{
    b_sequence, insertion_parities, mod_ceil, parity, rep_fast, rep_inverse_fast,
    rep_inverse_naive, rep_inverse_online, rep_naive, BitProfile, ParityProfile, RepVector,
};
pub use structures::{InsertableSequence, RankedSet};

pub use num_bigint::BigUint;
