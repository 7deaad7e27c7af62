use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(
    name = "permcode",
    version,
    about = "Perfect single-deletion permutation codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Encode data digits or a message integer into a codeword.
    Encode(EncodeArgs),
    /// Recover the codeword and data from a received word.
    Decode(DecodeArgs),
    /// Print the representation vector of a permutation and its parity.
    Rep(RepArgs),
    /// Dump the representation table of S_n and the n codebooks.
    Tables(TablesArgs),
    /// Run the brute-force certification up to a length bound.
    Selftest(SelftestArgs),
    /// Time the fast paths at n and 2n.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct CodeArgs {
    /// Code length.
    #[arg(long)]
    n: usize,
    /// Codebook index; any integer, taken mod n.
    #[arg(long, allow_negative_numbers = true)]
    t: i64,
}

#[derive(Args, Debug)]
struct EncodeArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Data digits a_1..a_{n-2}, comma separated, a_j in 1..=j+1.
    #[arg(long, conflicts_with = "message", required_unless_present = "message")]
    digits: Option<String>,
    /// Message integer in 0..(n-1)!.
    #[arg(long, allow_hyphen_values = true)]
    message: Option<String>,
    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    format: TextFormat,
}

#[derive(Args, Debug)]
struct DecodeArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Received symbols, comma separated; length n or n-1.
    #[arg(long, allow_hyphen_values = true)]
    received: String,
    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    format: TextFormat,
}

#[derive(Args, Debug)]
struct RepArgs {
    /// Permutation, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    perm: String,
    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    format: TextFormat,
}

#[derive(Args, Debug)]
struct TablesArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Tsv)]
    format: TableFormat,
}

#[derive(Args, Debug)]
struct SelftestArgs {
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    format: TextFormat,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, default_value_t = 100_000)]
    n: usize,
    #[arg(long, default_value_t = 5)]
    iters: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum TextFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum TableFormat {
    Tsv,
    Json,
}

/// Why a command did not succeed; each variant has its own exit status.
#[derive(Debug)]
enum Failure {
    Input(String),
    Decode(String),
    /// Carries the report, which still goes to stdout.
    SelfTest(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Decode(_) => 2,
            Failure::SelfTest(_) => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Encode(a) => commands::encode(a),
        Command::Decode(a) => commands::decode(a),
        Command::Rep(a) => commands::rep(a),
        Command::Tables(a) => commands::tables(a),
        Command::Selftest(a) => commands::selftest(a),
        Command::Bench(a) => commands::bench(a),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            match &failure {
                Failure::Input(msg) | Failure::Decode(msg) => eprintln!("error: {msg}"),
                Failure::SelfTest(report) => {
                    print!("{report}");
                    eprintln!("error: self-test failed");
                }
            }
            ExitCode::from(failure.code())
        }
    }
}
