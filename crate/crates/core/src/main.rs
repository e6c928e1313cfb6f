use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pgk::amalgam::BuildOptions;
use pgk::frontend::Session;
use pgk::parabolic::is_parabolic;
use pgk::{Error, Result};

#[derive(Parser)]
#[command(
    name = "pgk",
    version,
    about = "Normal forms and word problems for preGarside monoids of FC type"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Use a built-in presentation instead of FILE (B3, B4, B3B3, FREE2, RA2).
    #[arg(long, global = true)]
    preset: Option<String>,
    /// Longest candidate word tried when searching for a Garside element.
    #[arg(long, global = true)]
    max_garside_len: Option<usize>,
    /// Node budget for rewriting closures.
    #[arg(long, global = true, default_value_t = pgk::oracle::DEFAULT_BUDGET)]
    oracle_budget: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a presentation.
    Check { args: Vec<String> },
    /// Print the FC tree.
    Tree { args: Vec<String> },
    /// List the simple elements.
    Simples { args: Vec<String> },
    /// Decide whether a subset of atoms generates a parabolic submonoid.
    Parabolic {
        args: Vec<String>,
        #[arg(short = 'X')]
        subset: String,
    },
    /// Canonical form of a signed word.
    Nf {
        args: Vec<String>,
        #[arg(short = 'w')]
        word: String,
    },
    /// Decide whether two signed words are equal in the group.
    Eq { args: Vec<String> },
    /// Decide whether a signed word represents an element of the monoid.
    Member { args: Vec<String> },
    /// Decide whether a signed word lies in the parabolic subgroup G(P).
    Coset {
        args: Vec<String>,
        #[arg(short = 'P')]
        parabolic: String,
    },
    /// Check that w^k is nontrivial for 2 <= k <= K.
    Probe {
        args: Vec<String>,
        #[arg(short = 'k', default_value_t = 6)]
        k: usize,
    },
}

enum Outcome {
    True,
    False,
}

fn load(common: &Common, args: &[String], words: usize) -> Result<(Session, Vec<String>)> {
    let opts = BuildOptions {
        max_garside_len: common.max_garside_len,
        oracle_budget: common.oracle_budget,
    };
    let (session, rest) = match &common.preset {
        Some(name) => (Session::preset(name, opts)?, args),
        None => {
            let path: PathBuf = args
                .first()
                .ok_or_else(|| Error::InvalidInput("missing presentation FILE".into()))?
                .into();
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
            (Session::from_text(&text, opts)?, &args[1..])
        }
    };
    if rest.len() != words {
        return Err(Error::InvalidInput(format!(
            "expected {words} word argument(s), got {}",
            rest.len()
        )));
    }
    Ok((session, rest.to_vec()))
}

fn verdict(b: bool) -> Outcome {
    println!("{b}");
    if b {
        Outcome::True
    } else {
        Outcome::False
    }
}

fn run(command: Command, common: &Common) -> Result<Outcome> {
    match command {
        Command::Check { args } => {
            let (s, _) = load(common, &args, 0)?;
            print!("{}", s.check_report());
        }
        Command::Tree { args } => {
            let (s, _) = load(common, &args, 0)?;
            print!("{}", s.tree.render(&s.spec.atoms, &s.table));
        }
        Command::Simples { args } => {
            let (s, _) = load(common, &args, 0)?;
            for w in s.simples() {
                println!("{}", s.table.format_atoms(&w));
            }
        }
        Command::Parabolic { args, subset } => {
            let (s, _) = load(common, &args, 0)?;
            let x = s.spec.parse_subset(&subset)?;
            let parabolic = is_parabolic(x, &s.cp);
            println!("parabolic: {parabolic}");
            if parabolic {
                let handle = s.spherical.handles.iter().find(|h| h.atoms == x);
                match handle.and_then(|h| h.delta.as_ref()) {
                    Some(d) => println!("spherical: true\ndelta: {}", s.table.format_atoms(d)),
                    None => println!("spherical: false"),
                }
            }
        }
        Command::Nf { args, word } => {
            let (s, _) = load(common, &args, 0)?;
            let w = s.parse_word(&word)?;
            println!("{}", s.normal_form(&w).display(&s.table));
            println!(
                "{}",
                s.format(&s.atoms_of(&s.coset_rep(&w, Default::default())))
            );
        }
        Command::Eq { args } => {
            let (s, words) = load(common, &args, 2)?;
            let (w1, w2) = (s.parse_word(&words[0])?, s.parse_word(&words[1])?);
            return Ok(verdict(s.word_problem(&w1, &w2)));
        }
        Command::Member { args } => {
            let (s, words) = load(common, &args, 1)?;
            let w = s.parse_word(&words[0])?;
            return Ok(verdict(s.monoid_membership(&w)));
        }
        Command::Coset { args, parabolic } => {
            let (s, words) = load(common, &args, 1)?;
            let p = s.parse_parabolic(&parabolic)?;
            let w = s.parse_word(&words[0])?;
            return Ok(verdict(s.coset_membership(&w, p)));
        }
        Command::Probe { args, k } => {
            let (s, words) = load(common, &args, 1)?;
            let w = s.parse_word(&words[0])?;
            println!("{}", s.torsion_probe(&w, k)?);
        }
    }
    Ok(Outcome::True)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command, &cli.common) {
        Ok(Outcome::True) => ExitCode::SUCCESS,
        Ok(Outcome::False) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
