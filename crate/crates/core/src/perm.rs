//! Permutations of `{0, .., n-1}` in vector form, the structured
//! permutations used by the code construction, and the deletion channel.
//!
//! Composition follows function composition: `p.compose(&q)` maps `x` to
//! `p(q(x))`. Composing on the right acts on positions, composing on the left
//! acts on symbol values.

use std::fmt;
use std::str::FromStr;

use crate::error::PermError;
use crate::text;

/// A bijection on `{0, .., n-1}` stored as `values[i] = π(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    /// Validates `seq` as a rearrangement of `0..n`.
    pub fn validate(seq: &[usize], n: usize) -> Result<Self, PermError> {
        if n == 0 {
            return Err(PermError::Empty);
        }
        if seq.len() != n {
            return Err(PermError::WrongLength {
                expected: n,
                found: seq.len(),
            });
        }
        let mut seen = vec![false; n];
        for (index, &value) in seq.iter().enumerate() {
            if value >= n {
                return Err(PermError::SymbolOutOfRange { index, value, n });
            }
            if std::mem::replace(&mut seen[value], true) {
                return Err(PermError::DuplicateSymbol { index, value });
            }
        }
        Ok(Permutation {
            values: seq.to_vec(),
        })
    }

    /// Validates a vector whose length is taken as `n`.
    pub fn new(values: Vec<usize>) -> Result<Self, PermError> {
        let n = values.len();
        Self::validate(&values, n)?;
        Ok(Permutation { values })
    }

    /// Wraps a vector the caller has already proven to be a permutation.
    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Self::validate(&values, values.len()).is_ok());
        Permutation { values }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutation length must be positive");
        Permutation {
            values: (0..n).collect(),
        }
    }

    /// Suffix block transposition `κ_{i,s}`:
    /// `(0, .., i-1, i+s, .., n-1, i, .., i+s-1)`.
    ///
    /// `κ_{i,n-i}` is the identity and `κ_{0,1}` is the right cyclic shift.
    pub fn kappa(n: usize, i: usize, s: usize) -> Result<Self, PermError> {
        if n == 0 || i >= n || s == 0 || s > n - i {
            return Err(PermError::ParamOutOfRange {
                what: "kappa",
                detail: format!("n={n}, i={i}, s={s}; need 0 <= i < n and 1 <= s <= n-i"),
            });
        }
        let mut values = Vec::with_capacity(n);
        values.extend(0..i);
        values.extend(i + s..n);
        values.extend(i..i + s);
        Ok(Permutation { values })
    }

    /// Transposition `σ_{i,j}` exchanging `i` and `j`.
    pub fn sigma(n: usize, i: usize, j: usize) -> Result<Self, PermError> {
        if i >= j || j >= n {
            return Err(PermError::ParamOutOfRange {
                what: "sigma",
                detail: format!("n={n}, i={i}, j={j}; need 0 <= i < j < n"),
            });
        }
        let mut values: Vec<usize> = (0..n).collect();
        values.swap(i, j);
        Ok(Permutation { values })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; a permutation has at least one symbol.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn as_slice(&self) -> &[usize] {
        &self.values
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.values
    }

    /// `π(i)`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.len() != other.len() {
            return Err(PermError::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Permutation {
            values: other.values.iter().map(|&x| self.values[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { values: inv }
    }

    /// Removes the symbol at position `i`.
    ///
    /// Equivalent to `self ∘ κ_{i,1}` with the last entry split off as the
    /// missing symbol.
    pub fn delete_at(&self, i: usize) -> Result<DeletedWord, PermError> {
        let n = self.len();
        if i >= n {
            return Err(PermError::ParamOutOfRange {
                what: "delete_at",
                detail: format!("position {i} outside 0..{n}"),
            });
        }
        let mut symbols = self.values.clone();
        let missing = symbols.remove(i);
        Ok(DeletedWord {
            n,
            symbols,
            missing,
        })
    }

    /// The radius-1 deletion ball `{π ∘ κ_{i,1} : 0 <= i < n}`, ordered by `i`.
    pub fn deletion_ball(&self) -> Vec<Permutation> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut values = self.values.clone();
                let moved = values.remove(i);
                values.push(moved);
                Permutation { values }
            })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::join(&self.values))
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values = text::parse_list(s)?;
        Permutation::new(values)
    }
}

impl AsRef<[usize]> for Permutation {
    fn as_ref(&self) -> &[usize] {
        &self.values
    }
}

/// Channel output after one stable deletion from a length-`n` permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeletedWord {
    n: usize,
    symbols: Vec<usize>,
    missing: usize,
}

impl DeletedWord {
    /// Checks that `symbols` are `n-1` distinct values from `0..n` and finds
    /// the absent one.
    pub fn from_symbols(n: usize, symbols: Vec<usize>) -> Result<Self, PermError> {
        if n == 0 {
            return Err(PermError::Empty);
        }
        if symbols.len() + 1 != n {
            return Err(PermError::WrongLength {
                expected: n - 1,
                found: symbols.len(),
            });
        }
        let mut seen = vec![false; n];
        for (index, &value) in symbols.iter().enumerate() {
            if value >= n {
                return Err(PermError::SymbolOutOfRange { index, value, n });
            }
            if std::mem::replace(&mut seen[value], true) {
                return Err(PermError::DuplicateSymbol { index, value });
            }
        }
        let missing = seen
            .iter()
            .position(|&s| !s)
            .expect("n-1 distinct symbols leave exactly one gap");
        Ok(DeletedWord {
            n,
            symbols,
            missing,
        })
    }

    /// Original length.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn symbols(&self) -> &[usize] {
        &self.symbols
    }

    pub fn missing(&self) -> usize {
        self.missing
    }

    /// The received word with the missing symbol appended: `π ∘ κ_{d,1}`.
    pub fn with_missing_appended(&self) -> Permutation {
        let mut values = Vec::with_capacity(self.n);
        values.extend_from_slice(&self.symbols);
        values.push(self.missing);
        Permutation::from_vec_unchecked(values)
    }

    /// Reinserts the missing symbol so that it lands at `position`.
    pub fn restore_at(&self, position: usize) -> Result<Permutation, PermError> {
        if position >= self.n {
            return Err(PermError::ParamOutOfRange {
                what: "restore_at",
                detail: format!("position {position} outside 0..{}", self.n),
            });
        }
        let mut values = Vec::with_capacity(self.n);
        values.extend_from_slice(&self.symbols[..position]);
        values.push(self.missing);
        values.extend_from_slice(&self.symbols[position..]);
        Ok(Permutation::from_vec_unchecked(values))
    }
}
