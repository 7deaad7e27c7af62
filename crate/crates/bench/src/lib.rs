//! Seeded inputs shared by the criterion benchmarks.

use permcode::{encode, rep_fast, CodeParams, DigitMessage, Permutation, RepVector};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// One random instance of every input the fast paths take, at length `n`.
pub struct Workload {
    pub rho: Permutation,
    pub alpha: RepVector,
    pub params: CodeParams,
    pub message: DigitMessage,
    pub codeword: Permutation,
    /// `codeword` with one random position deleted.
    pub received: Vec<usize>,
}

impl Workload {
    pub fn new(n: usize, seed: u64) -> Self {
        assert!(n >= 2, "code length must be at least 2");
        let mut rng = StdRng::seed_from_u64(seed);
        let mut v: Vec<usize> = (0..n).collect();
        v.shuffle(&mut rng);
        let rho = Permutation::new(v).expect("shuffled identity");
        let alpha = rep_fast(&rho);
        let params = CodeParams::new(n, rng.gen_range(0..n as i64)).expect("n >= 2");
        let digits = (1..n - 1).map(|j| rng.gen_range(1..=j + 1)).collect();
        let message = DigitMessage::from_digits(n, digits).expect("digits in range");
        let codeword = encode(params, &message).expect("valid message");
        let received = codeword
            .delete_at(rng.gen_range(0..n))
            .expect("position in range")
            .symbols()
            .to_vec();
        Workload {
            rho,
            alpha,
            params,
            message,
            codeword,
            received,
        }
    }
}
