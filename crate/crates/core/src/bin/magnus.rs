use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use magnus_core::derived::{derived_class, rewrite_to_b};
use magnus_core::fox::magnus_matrix;
use magnus_core::harness::{run_suite, ExperimentOptions, Suite};
use magnus_core::lcs::{collect, enumerate_basic};
use magnus_core::mcg::{generator_commutator, tau_disk, DiskMappingClass, Embedding};
use magnus_core::parse::{parse_braid, parse_endo, Conjugation, WordParser};
use magnus_core::Error;

#[derive(Parser)]
#[command(name = "magnus", about = "Free-group commutator calculus and Magnus homomorphisms")]
struct Cli {
    /// How `w^c` is read in word arguments.
    #[arg(long, value_enum, default_value_t = Side::Left, global = true)]
    conjugation: Side,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    /// `w^c = c w c^-1`
    Left,
    /// `w^c = c^-1 w c`
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Fox,
    Hall,
    Derived,
    Mcg,
    Thm53,
    Thm54,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Magnus matrix of an endomorphism file (`x<i> -> <word>` lines).
    MagnusMatrix {
        #[arg(long)]
        endo: std::path::PathBuf,
        /// Alphabet size; defaults to the largest index mentioned.
        #[arg(long)]
        rank: Option<u32>,
    },
    /// List the weight-k basic commutators on n letters in order.
    Hall {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: usize,
    },
    /// Class of a word in F_k / F_{k+1}.
    Collect {
        #[arg(long)]
        word: String,
        #[arg(long)]
        k: usize,
    },
    /// Rewrite a word of F' in the Tomaszewski basis.
    #[command(name = "rewriteB")]
    RewriteB {
        #[arg(long)]
        word: String,
    },
    /// Class of a word in F'_k / F'_{k+1}.
    DerivedClass {
        #[arg(long)]
        word: String,
        #[arg(long)]
        k: usize,
    },
    /// Johnson homomorphism of a braid on each arc.
    TauDisk {
        /// `A<i>,<n>` letters, or a word in x letters with --strands.
        #[arg(long)]
        braid: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        strands: Option<u32>,
    },
    /// Higher-order Magnus homomorphism of an embedded braid on [g_i, g_j].
    TauMagnus {
        /// `church-farb:n=<n>` or `block:g=<g>`.
        #[arg(long)]
        embedding: String,
        #[arg(long)]
        braid: String,
        #[arg(long)]
        k: usize,
        /// Two crossing generators, e.g. `c6,c2`.
        #[arg(long)]
        pair: String,
        /// Also evaluate the definition directly and compare.
        #[arg(long)]
        direct_check: bool,
    },
    /// Run verification suites; exits nonzero on any failure.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        direct_check: bool,
    },
}

fn parse_pair(s: &str) -> Result<(u32, u32), Error> {
    let gen = |t: &str| {
        t.trim()
            .trim_start_matches(|c: char| c.is_ascii_alphabetic())
            .parse::<u32>()
            .map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad generator {t:?} in pair"),
            })
    };
    let (a, b) = s.split_once(',').ok_or(Error::Parse {
        pos: 0,
        msg: "pair must be `<gen>,<gen>`".into(),
    })?;
    Ok((gen(a)?, gen(b)?))
}

fn run(cli: Cli) -> Result<bool, Box<dyn std::error::Error>> {
    let parser = WordParser::new(match cli.conjugation {
        Side::Left => Conjugation::Left,
        Side::Right => Conjugation::Right,
    });
    match cli.command {
        Command::MagnusMatrix { endo, rank } => {
            let f = parse_endo(&std::fs::read_to_string(endo)?, rank)?;
            print!("{}", magnus_matrix(&f));
        }
        Command::Hall { n, k } => {
            for t in enumerate_basic(n, k) {
                println!("{t}");
            }
        }
        Command::Collect { word, k } => println!("{}", collect(&parser.parse(&word)?, k)?),
        Command::RewriteB { word } => println!("{}", rewrite_to_b(&parser.parse(&word)?)?),
        Command::DerivedClass { word, k } => println!("{}", derived_class(&parser.parse(&word)?, k)?),
        Command::TauDisk { braid, k, strands } => {
            let f = DiskMappingClass::from_braid_word(&parse_braid(&braid, strands)?)?;
            for (j, c) in tau_disk(&f, k)?.iter().enumerate() {
                println!("A{}: {}", j + 1, c.to_string().replace('x', "y"));
            }
        }
        Command::TauMagnus {
            embedding,
            braid,
            k,
            pair,
            direct_check,
        } => {
            let e = Embedding::builtin(&embedding)?;
            let f = DiskMappingClass::from_braid_word(&parse_braid(&braid, Some(e.holes))?)?;
            let pair = parse_pair(&pair)?;
            let class = e.tau_magnus_formula(&f, k, pair)?;
            println!("{class}");
            if direct_check {
                let direct = e
                    .extend(&f)?
                    .tau_magnus_direct(k, &generator_commutator(pair.0, pair.1))?;
                let ok = direct == class;
                println!("direct check: {}", if ok { "agree" } else { "DISAGREE" });
                return Ok(ok);
            }
        }
        Command::Verify {
            suite,
            json,
            direct_check,
        } => {
            let suite = match suite {
                SuiteArg::Fox => Suite::Fox,
                SuiteArg::Hall => Suite::Hall,
                SuiteArg::Derived => Suite::Derived,
                SuiteArg::Mcg => Suite::Mcg,
                SuiteArg::Thm53 => Suite::Thm53,
                SuiteArg::Thm54 => Suite::Thm54,
                SuiteArg::All => Suite::All,
            };
            let opts = ExperimentOptions {
                direct_check,
                ..Default::default()
            };
            let reports = run_suite(suite, &opts);
            if json {
                println!("{}", serde_json::to_string_pretty(&reports)?);
            } else {
                for r in &reports {
                    println!("{}", r.line());
                }
            }
            return Ok(reports.iter().all(|r| r.pass));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
