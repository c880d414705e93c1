use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_complex::Complex64;

use dewrithe::braid::{braiding_element, BraidWord};
use dewrithe::category::hexagon_sweep;
use dewrithe::config::{
    braid_word_to_loop, loop_discriminant_winding, loop_to_braid_seeded, ConfigLoop, Configuration,
};
use dewrithe::garside::{braids_equal, dewrithed_conjugation_check, normal_form};
use dewrithe::steenrod::{
    graded_dimensions, kudo_araki_generator_degrees, milnor_generator_degrees, universal_coproduct,
    AdditiveSeries,
};
use dewrithe::{selftest, Error};

const FORMATS: &str = "\
Formats:
  braid word     \"B<n>: <letters>\", letters are nonzero integers with |e| < n,
                 e.g. \"B3: 1 2 -1\"
  configuration  file with one point per line, \"re im\"; '#' starts a comment
  loop           file with header \"n=<k> frames=<m>\", then frames separated by
                 blank lines
  series         \"K=<k>; a1=<c> a2=<c> ...\", coefficients 0, 1 or a polynomial
                 in parentheses such as (xi1^2*xi2 + 1)
  A file argument of \"-\" reads standard input.

Exit status: 0 success, 1 a check failed, 2 malformed input, 3 degenerate input.";

#[derive(Parser)]
#[command(name = "dewrithe", version, about = "Braids, configuration discriminants and additive power series over F2")]
#[command(after_help = FORMATS)]
struct Cli {
    /// Seed for every random choice (selftest inputs, sweep perturbation)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Braid words: braid nf|eq|writhe|perm|tensor|cnm|conjcheck <ARGS> (see braid --help)
    #[command(subcommand)]
    Braid(BraidCommand),
    /// Hexagon table of the abelianized braiding: hexagon --max <P>
    Hexagon {
        #[arg(long)]
        max: usize,
    },
    /// Discriminant of a configuration: disc <FILE>
    Disc { file: String },
    /// Anomaly point of a configuration: anomaly <FILE>
    Anomaly { file: String },
    /// Winding number of the discriminant along a loop: winding <FILE>
    Winding { file: String },
    /// Loop of configurations realizing a braid: realize --word <WORD> [--steps <S>]
    Realize {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 16)]
        steps: usize,
    },
    /// Braid word traced out by a loop: extract --loop <FILE>
    Extract {
        #[arg(long = "loop")]
        file: String,
    },
    /// Composite a∘b of two additive series: compose <A> <B>
    Compose { a: String, b: String },
    /// Compositional inverse of an additive series: invert <A>
    Invert { a: String },
    /// Coproduct of xi_n in the universal series: coproduct --n <N>
    Coproduct {
        #[arg(long)]
        n: u32,
    },
    /// Graded dimensions of F2[xi_i] and F2[x_i]: dims --max <N>
    Dims {
        #[arg(long)]
        max: usize,
    },
    /// Seeded property suite over every module: selftest [--seed <S>]
    Selftest,
}

#[derive(Subcommand)]
enum BraidCommand {
    /// Left-greedy normal form: braid nf <WORD>
    Nf {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Equality in the braid group: braid eq <WORD> <WORD>
    Eq {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Exponent sum: braid writhe <WORD>
    Writhe {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Underlying permutation: braid perm <WORD>
    Perm {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Side-by-side juxtaposition: braid tensor <WORD> <WORD>
    Tensor {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Braiding element c_{n,m}: braid cnm <N> <M>
    Cnm { n: usize, m: usize },
    /// Checks c_{n,1}·(β⊗1) = (1⊗β)·c_{n,1}: braid conjcheck <WORD>
    Conjcheck {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
}

/// Text to print and the exit status that goes with it.
struct Output {
    text: String,
    status: u8,
}

impl Output {
    fn ok(text: impl Into<String>) -> Self {
        Output { text: text.into(), status: 0 }
    }

    fn check(text: impl Into<String>, passed: bool) -> Self {
        Output { text: text.into(), status: if passed { 0 } else { 1 } }
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("error: invalid arguments");
            eprintln!("{line}");
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            let _ = writeln!(stdout, "{}", out.text.trim_end_matches('\n'));
            ExitCode::from(out.status)
        }
        Err(e) => {
            let msg = e.to_string();
            eprintln!("error: {}", msg.lines().collect::<Vec<_>>().join("; "));
            ExitCode::from(if e.is_domain() { 3 } else { 2 })
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Braid(cmd) => run_braid(cmd),
        Command::Hexagon { max } => {
            let mut lines = vec!["p q r diagram pathA pathB ok".to_string()];
            let mut all = true;
            for (first, second) in hexagon_sweep(*max) {
                for (diagram, h) in [(1, first), (2, second)] {
                    all &= h.commutes();
                    let ok = if h.commutes() { "ok" } else { "FAIL" };
                    lines.push(format!("{} {} {} {diagram} {} {} {ok}", h.p, h.q, h.r, h.path_a, h.path_b));
                }
            }
            Ok(Output::check(lines.join("\n"), all))
        }
        Command::Disc { file } => {
            let f: Configuration = read_input(file)?.parse()?;
            Ok(Output::ok(complex(f.discriminant())))
        }
        Command::Anomaly { file } => {
            let f: Configuration = read_input(file)?.parse()?;
            let a = f.anomaly();
            Ok(Output::ok(format!("{}\n{}", complex(a.delta()), complex(a.normalized_delta()))))
        }
        Command::Winding { file } => {
            let l: ConfigLoop = read_input(file)?.parse()?;
            Ok(Output::ok(loop_discriminant_winding(&l)?.to_string()))
        }
        Command::Realize { word, steps } => {
            let w: BraidWord = word.parse()?;
            Ok(Output::ok(braid_word_to_loop(&w, *steps)?.to_string()))
        }
        Command::Extract { file } => {
            let l: ConfigLoop = read_input(file)?.parse()?;
            Ok(Output::ok(loop_to_braid_seeded(&l, cli.seed)?.to_string()))
        }
        Command::Compose { a, b } => {
            let a: AdditiveSeries = a.parse()?;
            let b: AdditiveSeries = b.parse()?;
            Ok(Output::ok(a.compose(&b)?.to_string()))
        }
        Command::Invert { a } => {
            let a: AdditiveSeries = a.parse()?;
            Ok(Output::ok(a.invert().to_string()))
        }
        Command::Coproduct { n } => Ok(Output::ok(universal_coproduct(*n)?.to_string())),
        Command::Dims { max } => {
            let xi = graded_dimensions(&milnor_generator_degrees(*max as u64), *max)?;
            let x = graded_dimensions(&kudo_araki_generator_degrees(*max as u64), *max)?;
            let mut lines = vec!["degree xi x".to_string()];
            lines.extend((0..=*max).map(|d| format!("{d} {} {}", xi[d], x[d])));
            Ok(Output::check(lines.join("\n"), xi == x))
        }
        Command::Selftest => {
            let report = selftest::run(cli.seed);
            Ok(Output::check(report.to_string(), report.all_passed()))
        }
    }
}

fn run_braid(cmd: &BraidCommand) -> Result<Output, Error> {
    let parse = |s: &str| s.parse::<BraidWord>();
    let text = match cmd {
        BraidCommand::Nf { word } => normal_form(&parse(word)?).to_string(),
        BraidCommand::Eq { u, v } => {
            let equal = braids_equal(&parse(u)?, &parse(v)?)?;
            if equal { "equal" } else { "not equal" }.to_string()
        }
        BraidCommand::Writhe { word } => parse(word)?.writhe().to_string(),
        BraidCommand::Perm { word } => parse(word)?.underlying_permutation().to_string(),
        BraidCommand::Tensor { u, v } => parse(u)?.tensor(&parse(v)?).to_string(),
        BraidCommand::Cnm { n, m } => braiding_element(*n, *m).to_string(),
        BraidCommand::Conjcheck { word } => {
            let holds = dewrithed_conjugation_check(&parse(word)?);
            return Ok(Output::check(if holds { "holds" } else { "fails" }, holds));
        }
    };
    Ok(Output::ok(text))
}

fn read_input(path: &str) -> Result<String, Error> {
    let mut text = String::new();
    let read = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn complex(z: Complex64) -> String {
    // adding 0.0 turns -0 into 0
    format!("{} {}", z.re + 0.0, z.im + 0.0)
}
