use std::fmt::Write;
use std::str::FromStr;
use std::time::Instant;

use permcode::oracle::{
    all_permutations, check_parity_lemmas, check_perfect, enumerate_code, vt_signature_check,
    DEFAULT_EXHAUSTIVE_BOUND,
};
use permcode::text::parse_list;
use permcode::{
    decode as decode_word, encode as encode_word, rep_fast, rep_inverse_fast, BigUint, CodeParams,
    CodecError, DigitMessage, Permutation, RepVector,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::json;

use crate::{
    BenchArgs, CodeArgs, DecodeArgs, EncodeArgs, Failure, RepArgs, SelftestArgs, TableFormat,
    TablesArgs, TextFormat,
};

type Output = Result<String, Failure>;

fn input(flag: &str, e: impl std::fmt::Display) -> Failure {
    Failure::Input(format!("--{flag}: {e}"))
}

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn params(code: &CodeArgs) -> Result<CodeParams, Failure> {
    CodeParams::new(code.n, code.t).map_err(|e| input("n", e))
}

pub fn encode(args: EncodeArgs) -> Output {
    let params = params(&args.code)?;
    let n = params.n();
    let msg = match (&args.digits, &args.message) {
        (Some(d), _) => {
            let digits = parse_list(d).map_err(|e| input("digits", e))?;
            DigitMessage::from_digits(n, digits).map_err(|e| input("digits", e))?
        }
        (None, Some(m)) => {
            let value = BigUint::from_str(m.trim())
                .map_err(|_| input("message", format!("{m:?} is not a non-negative integer")))?;
            DigitMessage::from_value(n, &value).map_err(|e| input("message", e))?
        }
        (None, None) => {
            return Err(Failure::Input(
                "one of --digits or --message is required".into(),
            ))
        }
    };
    let word = encode_word(params, &msg).map_err(|e| input("digits", e))?;
    Ok(match args.format {
        TextFormat::Text => format!("{word}\n"),
        TextFormat::Json => to_json(&json!({
            "n": n,
            "t": params.t(),
            "digits": msg.to_string(),
            "codeword": word.to_string(),
        })),
    })
}

pub fn decode(args: DecodeArgs) -> Output {
    let params = params(&args.code)?;
    let received = parse_list(&args.received).map_err(|e| input("received", e))?;
    let out = decode_word(params, &received).map_err(|e| match e {
        CodecError::WrongLength { .. } | CodecError::InvalidSymbols { .. } => input("received", e),
        other => Failure::Decode(other.to_string()),
    })?;
    let message = out.digits.value();
    Ok(match args.format {
        TextFormat::Text => format!(
            "codeword: {}\ndigits: {}\nmessage: {message}\ninsertion_index: {}\n",
            out.codeword, out.digits, out.insertion_index
        ),
        TextFormat::Json => to_json(&json!({
            "codeword": out.codeword.to_string(),
            "digits": out.digits.to_string(),
            "message": message.to_string(),
            "insertion_index": out.insertion_index,
        })),
    })
}

pub fn rep(args: RepArgs) -> Output {
    let p: Permutation = args.perm.parse().map_err(|e| input("perm", e))?;
    let alpha = rep_fast(&p);
    Ok(match args.format {
        TextFormat::Text => format!("{alpha}\nparity: {}\n", alpha.parity()),
        TextFormat::Json => to_json(&json!({
            "perm": p.to_string(),
            "rep": alpha,
            "parity": alpha.parity(),
        })),
    })
}

#[derive(Serialize)]
struct Row {
    perm: String,
    rep: String,
}

#[derive(Serialize)]
struct Codebook {
    t: usize,
    codewords: Vec<Row>,
}

#[derive(Serialize)]
struct Tables {
    n: usize,
    representation: Vec<Row>,
    codebooks: Vec<Codebook>,
}

/// All of `V_n`, `a_1` varying fastest.
fn rep_vectors(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![1]];
    for j in 1..n {
        out = (1..=j + 1)
            .flat_map(|top| {
                out.iter().map(move |v| {
                    let mut w = v.clone();
                    w.push(top);
                    w
                })
            })
            .collect();
    }
    out
}

fn build_tables(n: usize) -> Result<Tables, Failure> {
    if !(2..=DEFAULT_EXHAUSTIVE_BOUND).contains(&n) {
        return Err(input(
            "n",
            format!("must be in 2..={DEFAULT_EXHAUSTIVE_BOUND}, got {n}"),
        ));
    }
    let representation = rep_vectors(n)
        .into_iter()
        .map(|a| {
            let alpha = RepVector::new(a).expect("generated inside V_n");
            Row {
                perm: rep_inverse_fast(&alpha).to_string(),
                rep: alpha.to_string(),
            }
        })
        .collect();
    let mut codebooks = Vec::with_capacity(n);
    for t in 0..n {
        let params = CodeParams::new(n, t as i64).map_err(|e| input("n", e))?;
        let book = enumerate_code(params, DEFAULT_EXHAUSTIVE_BOUND).map_err(|e| input("n", e))?;
        // Listed by the vector of the codeword's inverse.
        let mut rows: Vec<(RepVector, Permutation)> = book
            .into_iter()
            .map(|w| (rep_fast(&w.inverse()), w))
            .collect();
        rows.sort_by(|x, y| x.0.components().cmp(y.0.components()));
        codebooks.push(Codebook {
            t,
            codewords: rows
                .into_iter()
                .map(|(alpha, w)| Row {
                    perm: w.to_string(),
                    rep: alpha.to_string(),
                })
                .collect(),
        });
    }
    Ok(Tables {
        n,
        representation,
        codebooks,
    })
}

pub fn tables(args: TablesArgs) -> Output {
    let tables = build_tables(args.n)?;
    Ok(match args.format {
        TableFormat::Json => to_json(&tables),
        TableFormat::Tsv => {
            let mut out = String::new();
            writeln!(out, "# representation n={}", tables.n).unwrap();
            writeln!(out, "perm\trep").unwrap();
            for row in &tables.representation {
                writeln!(out, "{}\t{}", row.perm, row.rep).unwrap();
            }
            for book in &tables.codebooks {
                writeln!(out).unwrap();
                writeln!(out, "# codebook t={} n={}", book.t, tables.n).unwrap();
                writeln!(out, "perm\trep_of_inverse").unwrap();
                for row in &book.codewords {
                    writeln!(out, "{}\t{}", row.perm, row.rep).unwrap();
                }
            }
            out
        }
    })
}

#[derive(Serialize)]
struct Check {
    check: &'static str,
    n: usize,
    passed: bool,
    detail: String,
}

pub fn selftest(args: SelftestArgs) -> Output {
    let max_n = args.max_n;
    if !(2..=DEFAULT_EXHAUSTIVE_BOUND).contains(&max_n) {
        return Err(input(
            "max-n",
            format!("must be in 2..={DEFAULT_EXHAUSTIVE_BOUND}, got {max_n}"),
        ));
    }
    let mut checks = Vec::new();
    for n in 2..=max_n {
        let report = check_perfect(n, DEFAULT_EXHAUSTIVE_BOUND).map_err(|e| input("max-n", e))?;
        let sizes = report
            .sizes
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let mut detail = format!("sizes {sizes}");
        if let Some(c) = report.counterexamples.first() {
            write!(detail, "; {c}").unwrap();
        }
        checks.push(Check {
            check: "perfect",
            n,
            passed: report.passed(),
            detail,
        });

        let bad = all_permutations(n).find(|p| !vt_signature_check(p));
        checks.push(Check {
            check: "vt-signature",
            n,
            passed: bad.is_none(),
            detail: bad.map_or_else(|| "all permutations".into(), |p| format!("fails on {p}")),
        });

        let violation =
            all_permutations(n).find_map(|p| check_parity_lemmas(&p).err().map(|v| (p, v)));
        checks.push(Check {
            check: "parity-lemmas",
            n,
            passed: violation.is_none(),
            detail: violation
                .map_or_else(|| "all permutations".into(), |(p, v)| format!("{p}: {v}")),
        });
    }
    let all_passed = checks.iter().all(|c| c.passed);
    let out = match args.format {
        TextFormat::Json => to_json(&json!({ "passed": all_passed, "checks": checks })),
        TextFormat::Text => {
            let mut out = String::new();
            for c in &checks {
                let verdict = if c.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{verdict} {} n={}: {}", c.check, c.n, c.detail).unwrap();
            }
            writeln!(out, "{}", if all_passed { "PASS" } else { "FAIL" }).unwrap();
            out
        }
    };
    if all_passed {
        Ok(out)
    } else {
        Err(Failure::SelfTest(out))
    }
}

fn median_ns<F: FnMut()>(iters: usize, mut f: F) -> f64 {
    f();
    let mut samples: Vec<u128> = (0..iters)
        .map(|_| {
            let start = Instant::now();
            f();
            start.elapsed().as_nanos()
        })
        .collect();
    samples.sort_unstable();
    samples[samples.len() / 2] as f64
}

/// Median nanoseconds for rep_fast, rep_inverse_fast, encode, decode at `n`.
fn time_ops(n: usize, iters: usize, rng: &mut StdRng) -> [f64; 4] {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    let rho = Permutation::new(v).expect("shuffled identity");
    let alpha = rep_fast(&rho);
    let params = CodeParams::new(n, rng.gen_range(0..n as i64)).expect("n >= 2");
    let digits = (1..n - 1).map(|j| rng.gen_range(1..=j + 1)).collect();
    let msg = DigitMessage::from_digits(n, digits).expect("digits in range");
    let word = encode_word(params, &msg).expect("valid message");
    let received = word.delete_at(rng.gen_range(0..n)).expect("in range");
    [
        median_ns(iters, || {
            std::hint::black_box(rep_fast(&rho));
        }),
        median_ns(iters, || {
            std::hint::black_box(rep_inverse_fast(&alpha));
        }),
        median_ns(iters, || {
            std::hint::black_box(encode_word(params, &msg).expect("valid message"));
        }),
        median_ns(iters, || {
            std::hint::black_box(decode_word(params, received.symbols()).expect("decodable"));
        }),
    ]
}

pub fn bench(args: BenchArgs) -> Output {
    if args.n < 2 {
        return Err(input("n", format!("must be at least 2, got {}", args.n)));
    }
    if args.iters == 0 {
        return Err(input("iters", "must be positive"));
    }
    let mut rng = StdRng::seed_from_u64(args.seed);
    let small = time_ops(args.n, args.iters, &mut rng);
    let large = time_ops(2 * args.n, args.iters, &mut rng);
    let names = ["rep_fast", "rep_inverse_fast", "encode", "decode"];
    let mut out = String::from("op\tn\tns_per_op\tns_per_element\tdoubling_ratio\n");
    for (k, name) in names.iter().enumerate() {
        for (n, ns) in [(args.n, small[k]), (2 * args.n, large[k])] {
            let ratio = if n == args.n {
                "-".to_string()
            } else {
                format!("{:.3}", large[k] / small[k])
            };
            writeln!(out, "{name}\t{n}\t{ns:.0}\t{:.2}\t{ratio}", ns / n as f64).unwrap();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rep_vectors_cover_vn() {
        assert_eq!(rep_vectors(4).len(), 24);
        assert_eq!(rep_vectors(4)[1], vec![1, 2, 1, 1]);
        assert_eq!(rep_vectors(1), vec![vec![1]]);
    }

    #[test]
    fn table_rows_follow_vector_order() {
        let t = build_tables(4).unwrap();
        assert_eq!(t.representation[0].perm, "3,2,1,0");
        assert_eq!(t.representation[23].perm, "0,1,2,3");
        assert_eq!(t.codebooks[0].codewords[1].perm, "0,2,1,3");
        assert!(build_tables(9).is_err());
    }
}
