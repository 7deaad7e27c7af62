//! Brute-force ground truth for small `n`.
//!
//! Everything here recomputes the representation with the cyclic-rotation
//! procedure ([`scan_representation`]) and the bit profile by literally
//! walking the periodic sequence ([`walk_bits`]). Neither shares code with
//! the fast paths in [`crate::representation`]; only the permutation
//! primitives are common.

// The relations are stated index by index; loops over indices read closer
// to them than iterator chains.
#![allow(clippy::needless_range_loop)]

use std::collections::HashSet;
use std::fmt::Write as _;

use itertools::Itertools;
use serde::Serialize;

use crate::codec::{decode, CodeParams};
use crate::error::OracleError;
use crate::perm::Permutation;
use crate::representation::{b_sequence, insertion_parities};

/// Largest `n` for exhaustive codebook and decode checks.
pub const DEFAULT_EXHAUSTIVE_BOUND: usize = 8;
/// Largest `n` for exhaustive lemma checks.
pub const DEFAULT_LEMMA_BOUND: usize = 7;

const MARKER: usize = usize::MAX;

/// `R(π)` by rotation: for `j < n-1`, rotate `π` so symbol `n-1-j` leads and
/// count the larger symbols left of `n-2-j`; for `a_{n-1}`, append a marker,
/// rotate so 0 leads and count what precedes the marker.
pub fn scan_representation(pi: &Permutation) -> Vec<usize> {
    let n = pi.len();
    let v = pi.as_slice();
    let mut a = vec![0; n];
    for j in 0..n - 1 {
        let lead = n - 1 - j;
        let target = n - 2 - j;
        let at = v.iter().position(|&s| s == lead).expect("symbol present");
        a[j] = v
            .iter()
            .cycle()
            .skip(at)
            .take_while(|&&s| s != target)
            .filter(|&&s| s > target)
            .count();
    }
    let mut marked = v.to_vec();
    marked.push(MARKER);
    let zero = marked.iter().position(|&s| s == 0).expect("symbol present");
    a[n - 1] = marked
        .iter()
        .cycle()
        .skip(zero)
        .take_while(|&&s| s != MARKER)
        .count();
    a
}

/// `(b_1, .., b_{n-1})` of `ρ` by walking: `b_{n-1-i}` is 1 when the walk
/// rightwards from symbol `i` to symbol `i-1` meets symbol `n-1`. Symbol
/// `-1` is the end-of-period marker, so the walk from 0 stops at the end of
/// the vector.
pub fn walk_bits(rho: &Permutation) -> Vec<u8> {
    let n = rho.len();
    let v = rho.as_slice();
    let mut bits = vec![0u8; n.saturating_sub(1)];
    for i in 0..n.saturating_sub(1) {
        let from = v.iter().position(|&s| s == i).expect("symbol present");
        let hit = if i == 0 {
            v[from + 1..].contains(&(n - 1))
        } else {
            v.iter()
                .cycle()
                .skip(from + 1)
                .take_while(|&&s| s != i - 1)
                .any(|&s| s == n - 1)
        };
        bits[n - 2 - i] = hit as u8;
    }
    bits
}

fn scan_parity(pi: &Permutation) -> u64 {
    scan_representation(pi).iter().map(|&a| a as u64).sum()
}

/// Oracle membership: `parity(R(p^{-1})) ≡ T (mod n)`.
pub fn oracle_member(p: &Permutation, params: CodeParams) -> bool {
    scan_parity(&p.inverse()) % params.n() as u64 == params.t() as u64
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (0..n)
        .permutations(n)
        .map(|v| Permutation::new(v).expect("itertools yields permutations"))
}

fn check_bound(n: usize, bound: usize) -> Result<(), OracleError> {
    if n < 2 {
        return Err(OracleError::InvalidLength(n));
    }
    if n > bound {
        return Err(OracleError::BoundExceeded { n, bound });
    }
    Ok(())
}

/// Every codeword of `C_{T,n}`, sorted lexicographically.
pub fn enumerate_code(params: CodeParams, bound: usize) -> Result<Vec<Permutation>, OracleError> {
    check_bound(params.n(), bound)?;
    Ok(all_permutations(params.n())
        .filter(|p| oracle_member(p, params))
        .collect())
}

/// Outcome of a perfectness certification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerfectnessReport {
    pub n: usize,
    /// `sizes[t] = |C_{t,n}|`.
    pub sizes: Vec<usize>,
    pub sizes_ok: bool,
    pub partition: bool,
    pub ball_disjoint: bool,
    pub decode_exhaustive: bool,
    pub counterexamples: Vec<String>,
}

const MAX_COUNTEREXAMPLES: usize = 20;

impl PerfectnessReport {
    pub fn passed(&self) -> bool {
        self.sizes_ok
            && self.partition
            && self.ball_disjoint
            && self.decode_exhaustive
            && self.counterexamples.is_empty()
    }

    /// `key: value` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let sizes = self.sizes.iter().map(|s| s.to_string()).join(",");
        writeln!(out, "n: {}", self.n).unwrap();
        writeln!(out, "sizes: {sizes}").unwrap();
        writeln!(out, "sizes_ok: {}", self.sizes_ok).unwrap();
        writeln!(out, "partition: {}", self.partition).unwrap();
        writeln!(out, "ball_disjoint: {}", self.ball_disjoint).unwrap();
        writeln!(out, "decode_exhaustive: {}", self.decode_exhaustive).unwrap();
        writeln!(out, "counterexamples: {}", self.counterexamples.len()).unwrap();
        for c in &self.counterexamples {
            writeln!(out, "counterexample: {c}").unwrap();
        }
        out
    }

    fn note(&mut self, what: String) {
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(what);
        }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Certifies the `n` codebooks of length `n` (entry `t` is `C_{t,n}`):
/// sizes, partition of `S_n`, disjoint deletion balls, and exhaustive
/// decoding of every single deletion.
pub fn certify_codebooks(n: usize, books: &[Vec<Permutation>]) -> PerfectnessReport {
    let mut report = PerfectnessReport {
        n,
        sizes: books.iter().map(Vec::len).collect(),
        sizes_ok: true,
        partition: true,
        ball_disjoint: true,
        decode_exhaustive: true,
        counterexamples: Vec::new(),
    };
    let expected = factorial(n - 1);
    if books.len() != n {
        report.sizes_ok = false;
        report.partition = false;
        report.note(format!("expected {n} codebooks, got {}", books.len()));
    }
    for (t, book) in books.iter().enumerate() {
        if book.len() != expected {
            report.sizes_ok = false;
            report.note(format!(
                "C_{{{t},{n}}} has {} codewords, expected {expected}",
                book.len()
            ));
        }
    }

    let mut owner: std::collections::HashMap<&Permutation, usize> = Default::default();
    for (t, book) in books.iter().enumerate() {
        for word in book {
            if word.len() != n {
                report.partition = false;
                report.note(format!("codeword {word} in T={t} has wrong length"));
            } else if let Some(&other) = owner.get(word) {
                report.partition = false;
                report.note(format!("{word} appears in T={other} and T={t}"));
            } else {
                owner.insert(word, t);
            }
        }
    }
    if owner.len() != factorial(n) {
        report.partition = false;
        report.note(format!(
            "codebooks cover {} of {} permutations",
            owner.len(),
            factorial(n)
        ));
    }

    for (t, book) in books.iter().enumerate() {
        let mut ball_owner: std::collections::HashMap<Permutation, &Permutation> =
            Default::default();
        for word in book.iter().filter(|w| w.len() == n) {
            for member in word.deletion_ball() {
                if let Some(prev) = ball_owner.insert(member.clone(), word) {
                    if prev != word {
                        report.ball_disjoint = false;
                        report.note(format!("T={t}: balls of {prev} and {word} share {member}"));
                    }
                }
            }
        }
    }

    for (t, book) in books.iter().enumerate() {
        let params = CodeParams::new(n, t as i64).expect("n >= 2");
        for word in book.iter().filter(|w| w.len() == n) {
            match decode(params, word.as_slice()) {
                Ok(out) if &out.codeword == word => {}
                Ok(out) => {
                    report.decode_exhaustive = false;
                    report.note(format!("T={t}: {word} decoded as {}", out.codeword));
                }
                Err(e) => {
                    report.decode_exhaustive = false;
                    report.note(format!("T={t}: {word} rejected: {e}"));
                }
            }
            for position in 0..n {
                let received = word.delete_at(position).expect("position in range");
                match decode(params, received.symbols()) {
                    Ok(out) if &out.codeword == word && out.insertion_index == position => {}
                    Ok(out) => {
                        report.decode_exhaustive = false;
                        report.note(format!(
                            "T={t}: {word} with position {position} deleted decoded as {}",
                            out.codeword
                        ));
                    }
                    Err(e) => {
                        report.decode_exhaustive = false;
                        report.note(format!(
                            "T={t}: {word} with position {position} deleted failed: {e}"
                        ));
                    }
                }
            }
        }
    }
    report
}

/// Enumerates all `n` codebooks by brute force and certifies them.
pub fn check_perfect(n: usize, bound: usize) -> Result<PerfectnessReport, OracleError> {
    check_bound(n, bound)?;
    let mut books = vec![Vec::new(); n];
    for p in all_permutations(n) {
        let t = (scan_parity(&p.inverse()) % n as u64) as usize;
        books[t].push(p);
    }
    Ok(certify_codebooks(n, &books))
}

/// The signature identity `Σ ã_j + Σ j·b̃_j ≡ 0 (mod n)`, with `ã` the
/// reversed `R(ρ)` and `b̃_j = [c_j > c_{j-1}]` over `c = ρ^{-1}`.
pub fn vt_signature_check(rho: &Permutation) -> bool {
    vt_signature_terms(rho).2
}

/// `(Σ ã_j, Σ j·b̃_j, identity holds)`.
pub fn vt_signature_terms(rho: &Permutation) -> (u64, u64, bool) {
    let n = rho.len() as u64;
    let rep_sum = scan_parity(rho);
    let c = rho.inverse();
    let c = c.as_slice();
    let weighted: u64 = (1..c.len())
        .filter(|&j| c[j] > c[j - 1])
        .map(|j| j as u64)
        .sum();
    (rep_sum, weighted, (rep_sum + weighted).is_multiple_of(n))
}

/// A failed relation in [`check_parity_lemmas`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaViolation {
    pub rule: &'static str,
    pub index: usize,
    pub detail: String,
}

impl std::fmt::Display for LemmaViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} at i={}: {}", self.rule, self.index, self.detail)
    }
}

/// Representations of the reinsertion family of `ρ`, all computed by rotation.
#[derive(Debug, Clone)]
pub struct CandidateFamily {
    /// `alphas[i] = R(κ_{n-i-1,1} ∘ ρ)` for `0 <= i < n`.
    pub alphas: Vec<Vec<usize>>,
    /// Representation of the first `n-1` entries of `ρ^{-1}`, relabelled
    /// order-preservingly onto `0..n-1` and inverted back.
    pub auxiliary: Vec<usize>,
    /// `(b_1, .., b_{n-1})` by walking.
    pub bits: Vec<u8>,
}

pub fn candidate_family(rho: &Permutation) -> CandidateFamily {
    let n = rho.len();
    let alphas = (0..n)
        .map(|i| {
            let kappa = Permutation::kappa(n, n - i - 1, 1).expect("valid kappa");
            scan_representation(&kappa.compose(rho).expect("equal lengths"))
        })
        .collect();
    let c = rho.inverse();
    let delta = c.apply(n - 1);
    let relabelled: Vec<usize> = c.as_slice()[..n - 1]
        .iter()
        .map(|&s| if s > delta { s - 1 } else { s })
        .collect();
    let auxiliary = if n >= 2 {
        scan_representation(&Permutation::new(relabelled).expect("relabelled").inverse())
    } else {
        Vec::new()
    };
    CandidateFamily {
        alphas,
        auxiliary,
        bits: walk_bits(rho),
    }
}

/// Machine-checks the relations among the reinsertion family of `ρ`:
/// prefix and suffix stability, the auxiliary-vector and shift relations,
/// the pivot sum and recurrence, the closed pivot form, and the parity
/// formula (also against the fast [`insertion_parities`] and
/// [`b_sequence`]).
pub fn check_parity_lemmas(rho: &Permutation) -> Result<(), LemmaViolation> {
    let n = rho.len();
    if n < 2 {
        return Ok(());
    }
    let fam = candidate_family(rho);
    let al = &fam.alphas;
    let aux = &fam.auxiliary;
    let b = |j: usize| fam.bits[j - 1] as i64;
    let a = |k: usize, i: usize| al[k][i] as i64;
    let base = &al[0];
    let fail = |rule: &'static str, index: usize, detail: String| {
        Err(LemmaViolation {
            rule,
            index,
            detail,
        })
    };

    let fast_bits = b_sequence(rho).to_vec();
    if fast_bits != fam.bits {
        return fail(
            "bit formula",
            0,
            format!("formula {fast_bits:?} vs walk {:?}", fam.bits),
        );
    }

    for i in 2..n {
        if let Some(k) = (1..i).find(|&k| al[k][i] != al[0][i]) {
            return fail(
                "prefix stability",
                i,
                format!("a^({k})_{i} = {} != a^(0)_{i} = {}", al[k][i], al[0][i]),
            );
        }
    }
    for i in 0..n - 1 {
        if let Some(k) = (i + 2..n).find(|&k| al[k][i] != aux[i]) {
            return fail(
                "suffix stability",
                i,
                format!("a^({k})_{i} = {} != a^(n)_{i} = {}", al[k][i], aux[i]),
            );
        }
    }
    for i in 1..n {
        if a(0, i) != aux[i - 1] as i64 + b(i) {
            return fail(
                "auxiliary relation",
                i,
                format!(
                    "a_{i} = {} vs a^(n)_{} + b_{i} = {} + {}",
                    a(0, i),
                    i - 1,
                    aux[i - 1],
                    b(i)
                ),
            );
        }
    }
    for i in 1..n - 1 {
        if a(i + 1, i - 1) != a(i - 1, i) - b(i) {
            return fail(
                "shift relation",
                i,
                format!(
                    "a^({})_{} = {} vs a^({})_{i} - b_{i} = {} - {}",
                    i + 1,
                    i - 1,
                    a(i + 1, i - 1),
                    i - 1,
                    a(i - 1, i),
                    b(i)
                ),
            );
        }
    }
    for i in 0..n - 1 {
        if a(i, i) + a(i + 1, i) != i as i64 + 2 {
            return fail(
                "pivot sum",
                i,
                format!(
                    "a^({i})_{i} + a^({})_{i} = {} + {}",
                    i + 1,
                    a(i, i),
                    a(i + 1, i)
                ),
            );
        }
    }
    for i in 0..n - 1 {
        let rhs = a(i, i) + base[i + 1] as i64 - (i as i64 + 2) * b(i + 1);
        if a(i + 1, i + 1) != rhs {
            return fail(
                "pivot recurrence",
                i,
                format!("a^({0})_{0} = {1} vs {rhs}", i + 1, a(i + 1, i + 1)),
            );
        }
    }
    let mut closed = 1i64;
    for i in 0..n {
        if i > 0 {
            closed += base[i] as i64 - (i as i64 + 1) * b(i);
        }
        if a(i, i) != closed {
            return fail(
                "closed pivot form",
                i,
                format!("a^({i})_{i} = {} vs {closed}", a(i, i)),
            );
        }
    }

    let parities: Vec<i64> = al.iter().map(|v| v.iter().sum::<usize>() as i64).collect();
    let mut ones = 0i64;
    for i in 1..n {
        ones += b(i);
        let predicted = parities[0] + i as i64 * (1 - b(i)) - ones;
        if parities[i] != predicted {
            return fail(
                "parity formula",
                i,
                format!("parity {} vs predicted {predicted}", parities[i]),
            );
        }
    }
    let fast = insertion_parities(&rho.inverse());
    if fast.as_slice() != parities.as_slice() {
        return fail(
            "fast profile",
            0,
            format!("{:?} vs {:?}", fast.as_slice(), parities),
        );
    }
    Ok(())
}

/// Parities of the reinsertion family, by rotation.
pub fn oracle_profile(rho: &Permutation) -> Vec<i64> {
    let n = rho.len();
    (0..n)
        .map(|i| {
            let kappa = Permutation::kappa(n, n - i - 1, 1).expect("valid kappa");
            scan_parity(&kappa.compose(rho).expect("equal lengths")) as i64
        })
        .collect()
}

/// True when the reinsertion parities of `ρ` are `n` consecutive integers.
pub fn profile_is_consecutive(rho: &Permutation) -> bool {
    let mut p = oracle_profile(rho);
    p.sort_unstable();
    p.windows(2).all(|w| w[1] == w[0] + 1)
}

/// True when the deletion balls of the words in `book` are pairwise disjoint.
pub fn balls_disjoint(book: &[Permutation]) -> bool {
    let mut seen = HashSet::new();
    book.iter()
        .flat_map(|w| w.deletion_ball())
        .all(|m| seen.insert(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn scan_examples() {
        assert_eq!(
            scan_representation(&p(&[3, 4, 0, 1, 2])),
            vec![1, 2, 3, 4, 3]
        );
        assert_eq!(
            scan_representation(&p(&[0, 4, 1, 3, 2])),
            vec![1, 1, 2, 3, 5]
        );
        assert_eq!(scan_representation(&p(&[0])), vec![1]);
        assert_eq!(
            scan_representation(&p(&[1, 3, 4, 0, 5, 2])),
            vec![1, 2, 3, 1, 3, 3]
        );
    }

    #[test]
    fn walk_examples() {
        assert_eq!(walk_bits(&p(&[0, 4, 1, 3, 2])), vec![0, 1, 0, 1]);
        assert_eq!(walk_bits(&p(&[2, 1, 0])), vec![0, 0]);
    }

    #[test]
    fn table3_family() {
        let fam = candidate_family(&p(&[0, 4, 1, 3, 2]));
        let expected = [
            [1, 1, 2, 3, 5],
            [1, 2, 2, 3, 5],
            [1, 1, 1, 3, 5],
            [1, 1, 3, 4, 5],
            [1, 1, 3, 1, 4],
        ];
        for (i, col) in expected.iter().enumerate() {
            assert_eq!(fam.alphas[i], col.to_vec(), "column {i}");
        }
        assert_eq!(fam.auxiliary, vec![1, 1, 3, 4]);
        assert!(check_parity_lemmas(&p(&[0, 4, 1, 3, 2])).is_ok());
    }

    #[test]
    fn signature_example() {
        assert_eq!(vt_signature_terms(&p(&[1, 3, 4, 0, 5, 2])), (13, 11, true));
        for n in 1..8 {
            assert!(vt_signature_check(&Permutation::identity(n)));
        }
    }

    #[test]
    fn bound_errors() {
        let params = CodeParams::new(9, 0).unwrap();
        assert_eq!(
            enumerate_code(params, DEFAULT_EXHAUSTIVE_BOUND),
            Err(OracleError::BoundExceeded { n: 9, bound: 8 })
        );
        assert!(check_perfect(9, DEFAULT_EXHAUSTIVE_BOUND).is_err());
    }

    #[test]
    fn length_two_codebooks() {
        for t in 0..2 {
            let book = enumerate_code(CodeParams::new(2, t).unwrap(), 8).unwrap();
            assert_eq!(book.len(), 1);
        }
    }

    #[test]
    fn perturbation_is_reported() {
        let n = 4;
        let mut books: Vec<Vec<Permutation>> = (0..n)
            .map(|t| enumerate_code(CodeParams::new(n, t as i64).unwrap(), 8).unwrap())
            .collect();
        assert!(certify_codebooks(n, &books).passed());
        let stolen = books[1][0].clone();
        books[0][0] = stolen;
        let report = certify_codebooks(n, &books);
        assert!(!report.passed());
        assert!(!report.partition);
        assert!(!report.decode_exhaustive);
        assert!(!report.counterexamples.is_empty());
    }
}
