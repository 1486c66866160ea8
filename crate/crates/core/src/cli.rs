//! Batch command-line interface.
//!
//! Exit status is the machine contract: 0 for success (and for `member`, a
//! member), 1 for a negative answer or a failing suite, 2 for malformed
//! input or a violated precondition.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};

use crate::arith::{num_word, word_num, DyadicCode};
use crate::eval::{run_suite, SuiteName, SuiteParams};
use crate::logic::{
    flatten_ps0, parse_formula, print_formula, translate_plus, translate_star, translate_starstar, EqualityMode,
    Signature,
};
use crate::oracle::FiniteWordSet;
use crate::setcode::{adjoin, canonical_encode, classify, is_member, is_set, members, scan_frames, FrameKind};
use crate::word::{words_up_to, Word};

#[derive(Parser, Debug)]
#[command(name = "concatset", version, about = "Finite sets coded as words over {a, b}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the canonical code of a set literal such as '{a,ab}'.
    Encode {
        #[arg(long)]
        set: String,
    },
    /// Print the members of a set code.
    Decode { word: String },
    /// Exit 0 when Y is a member of the set coded by X, 1 otherwise.
    Member { y: String, x: String },
    /// Print the canonical code of members(X) with Y added.
    Adjoin { x: String, y: String },
    /// Print the classification flags and frames of a word.
    Classify { word: String },
    /// Print the translation of a formula.
    Translate {
        #[arg(long, value_enum)]
        map: MapKind,
        #[arg(long)]
        formula: String,
        /// How `starstar` carries `=`.
        #[arg(long, value_enum, default_value = "congruence")]
        equality: EqualityArg,
    },
    /// Run an axiom suite and print its report; exit 0 iff every statement holds.
    Check {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, default_value_t = 2)]
        member_len: usize,
        #[arg(long, default_value_t = 2)]
        set_size: usize,
        /// Quantifier instances allowed per statement.
        #[arg(long)]
        budget: Option<u64>,
        /// Decide existentials by search only.
        #[arg(long)]
        no_hints: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: ReportFormat,
    },
    /// Print every word up to a length, optionally only set codes or canonical codes.
    Enumerate {
        #[arg(long)]
        max_len: usize,
        #[arg(long, value_enum)]
        filter: Option<WordFilter>,
    },
    /// Convert between words and their dyadic numbers.
    Num {
        /// Word to convert to its number.
        #[arg(long, conflicts_with = "from", required_unless_present = "from")]
        to: Option<String>,
        /// Number to convert to its word.
        #[arg(long)]
        from: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MapKind {
    /// Set theory into set codes: `in` becomes `SetPlus(x) & Eps(x,y)`.
    Plus,
    /// Set theory into canonical codes, `=` as congruence.
    Star,
    /// Relational adjunction into canonical codes.
    Starstar,
    /// Functional adjunction `;` into the ternary relation `S`.
    Flatten,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EqualityArg {
    Congruence,
    Identity,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Table,
    Lines,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WordFilter {
    Set,
    Canonical,
}

/// Result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliOutput {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(stdout: String) -> CliOutput {
        CliOutput {
            status: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn status(status: i32, stdout: String) -> CliOutput {
        CliOutput {
            status,
            stdout,
            stderr: String::new(),
        }
    }

    fn malformed(message: impl std::fmt::Display) -> CliOutput {
        CliOutput {
            status: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

fn word_arg(text: &str) -> Result<Word, CliOutput> {
    text.parse::<Word>().map_err(|e| CliOutput::malformed(format!("{text:?}: {e}")))
}

/// Run one invocation; `argv[0]` is the program name.
pub fn run_cli<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput {
                    status: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CliOutput::ok(text)
            };
        }
    };
    dispatch(cli.command).unwrap_or_else(|e| e)
}

fn dispatch(command: Command) -> Result<CliOutput, CliOutput> {
    Ok(match command {
        Command::Encode { set } => {
            let set: FiniteWordSet = set.parse().map_err(CliOutput::malformed)?;
            CliOutput::ok(format!("{}\n", canonical_encode(&set)))
        }
        Command::Decode { word } => {
            let x = word_arg(&word)?;
            let m = members(&x).map_err(CliOutput::malformed)?;
            CliOutput::ok(format!("{m}\n"))
        }
        Command::Member { y, x } => {
            let (y, x) = (word_arg(&y)?, word_arg(&x)?);
            if !is_set(&x) {
                return Err(CliOutput::malformed(format!("{x} is not a set code")));
            }
            let yes = is_member(&y, &x);
            CliOutput::status(if yes { 0 } else { 1 }, format!("{}\n", if yes { "yes" } else { "no" }))
        }
        Command::Adjoin { x, y } => {
            let (x, y) = (word_arg(&x)?, word_arg(&y)?);
            CliOutput::ok(format!("{}\n", adjoin(&x, &y).map_err(CliOutput::malformed)?))
        }
        Command::Classify { word } => CliOutput::ok(classify_text(&word_arg(&word)?)),
        Command::Translate { map, formula, equality } => {
            let sig = match map {
                MapKind::Plus | MapKind::Star => Signature::set(),
                MapKind::Starstar => Signature::ps0_prime(),
                MapKind::Flatten => Signature::ps0(),
            };
            let f = parse_formula(&formula, &sig).map_err(CliOutput::malformed)?;
            let out = match map {
                MapKind::Plus => translate_plus(&f),
                MapKind::Star => translate_star(&f),
                MapKind::Starstar => translate_starstar(
                    &f,
                    match equality {
                        EqualityArg::Congruence => EqualityMode::Congruence,
                        EqualityArg::Identity => EqualityMode::Identity,
                    },
                ),
                MapKind::Flatten => flatten_ps0(&f),
            };
            CliOutput::ok(format!("{}\n", print_formula(&out)))
        }
        Command::Check {
            suite,
            max_len,
            member_len,
            set_size,
            budget,
            no_hints,
            format,
        } => {
            let name: SuiteName = suite.parse().map_err(CliOutput::malformed)?;
            let mut params = SuiteParams {
                max_len,
                member_len,
                set_size,
                use_hints: !no_hints,
                ..SuiteParams::default()
            };
            if let Some(b) = budget {
                params.budget = b;
            }
            let report = run_suite(name, &params).map_err(CliOutput::malformed)?;
            let text = match format {
                ReportFormat::Table => report.render_table(),
                ReportFormat::Lines => report.render_lines(),
            };
            let mut out = CliOutput::status(if report.all_hold() { 0 } else { 1 }, text);
            for o in report.failures() {
                let _ = writeln!(out.stderr, "{} {}: {} {}", report.suite, o.id, o.verdict, o.verdict.assignment_text());
            }
            out
        }
        Command::Enumerate { max_len, filter } => {
            let mut out = String::new();
            for w in words_up_to(max_len) {
                let keep = match filter {
                    None => true,
                    Some(WordFilter::Set) => is_set(&w),
                    Some(WordFilter::Canonical) => crate::setcode::is_canonical(&w),
                };
                if keep {
                    out.push_str(w.as_str());
                    out.push('\n');
                }
            }
            CliOutput::ok(out)
        }
        Command::Num { to, from } => match (to, from) {
            (Some(word), None) => CliOutput::ok(format!("{}\n", word_num(&word_arg(&word)?))),
            (None, Some(n)) => {
                let n: DyadicCode = n.parse().map_err(CliOutput::malformed)?;
                CliOutput::ok(format!("{}\n", num_word(&n)))
            }
            _ => return Err(CliOutput::malformed("give exactly one of --to or --from")),
        },
    })
}

fn classify_text(x: &Word) -> String {
    let c = classify(x);
    let mut out = String::new();
    let flag = |b: bool| if b { "yes" } else { "no" };
    let _ = writeln!(out, "set: {}", flag(c.is_set));
    let _ = writeln!(out, "minimal: {}", flag(c.is_min));
    let _ = writeln!(out, "lexicographic: {}", flag(c.is_lex));
    let _ = writeln!(out, "special: {}", flag(c.is_special));
    let _ = writeln!(out, "canonical: {}", flag(c.is_canonical));
    match c.envelope {
        Some(t) => {
            let _ = writeln!(out, "envelope: {t}");
        }
        None => {
            let _ = writeln!(out, "envelope: none");
        }
    }
    for f in scan_frames(x) {
        let kind = match &f.kind {
            FrameKind::First => "first".to_string(),
            FrameKind::Last => "last".to_string(),
            FrameKind::Sole => "sole".to_string(),
            FrameKind::Intermediate { preceding } => format!("intermediate after {preceding}"),
        };
        let _ = writeln!(
            out,
            "frame {}..{} {kind}: {} a {} a {}",
            f.span.start, f.span.end, f.initial, f.member, f.terminal
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> CliOutput {
        run_cli(std::iter::once("concatset").chain(args.iter().copied()))
    }

    #[test]
    fn encode_and_decode() {
        assert_eq!(run(&["encode", "--set", "{a,b}"]).stdout, "baaabbababb\n");
        assert_eq!(run(&["decode", "aa"]).stdout, "{}\n");
        assert_eq!(run(&["decode", "baaabbababb"]).stdout, "{a,b}\n");
        assert_eq!(run(&["decode", "bab"]).status, 2);
        assert_eq!(run(&["decode", "abc"]).status, 2);
        assert_eq!(run(&["encode", "--set", "a,b"]).status, 2);
    }

    #[test]
    fn membership_exit_codes() {
        assert_eq!(run(&["member", "a", "baaab"]).status, 0);
        assert_eq!(run(&["member", "b", "baaab"]).status, 1);
        assert_eq!(run(&["member", "b", "aa"]).status, 1);
    }

    #[test]
    fn adjunction() {
        assert_eq!(run(&["adjoin", "baaab", "b"]).stdout, "baaabbababb\n");
        assert_eq!(run(&["adjoin", "aa", "a"]).stdout, "baaab\n");
        assert_eq!(run(&["adjoin", "abab", "a"]).status, 2);
    }

    #[test]
    fn classification_lists_frames() {
        let out = run(&["classify", "baaabbababb"]).stdout;
        assert!(out.contains("canonical: yes"));
        assert!(out.contains("envelope: bb"));
        assert_eq!(out.lines().filter(|l| l.starts_with("frame")).count(), 2);
    }

    #[test]
    fn translations() {
        let out = run(&["translate", "--map", "plus", "--formula", "x in y"]);
        assert_eq!(out.stdout, "SetPlus(x) & Eps(x,y)\n");
        let out = run(&["translate", "--map", "star", "--formula", "x = y"]);
        assert_eq!(out.stdout, "forall z (Vss(z) -> (Eps(z,x) <-> Eps(z,y)))\n");
        let out = run(&["translate", "--map", "starstar", "--formula", "~S(0,x,0)"]);
        assert_eq!(out.stdout, "~Sigma(aa,x,aa)\n");
        let out = run(&["translate", "--map", "flatten", "--formula", "x;y = x"]);
        assert_eq!(out.stdout, "S(x,y,x)\n");
        let out = run(&["translate", "--map", "plus", "--formula", "x in"]);
        assert_eq!(out.status, 2);
        assert!(out.stderr.contains("column 5"), "{}", out.stderr);
    }

    #[test]
    fn check_exit_status() {
        let out = run(&["check", "--suite", "qt", "--max-len", "4"]);
        assert_eq!(out.status, 0, "{}", out.stdout);
        let out = run(&["check", "--suite", "qt", "--max-len", "3", "--format", "lines"]);
        assert_eq!(out.stdout.lines().count(), 8);
        assert!(out.stdout.lines().all(|l| l.starts_with("qt\t") && l.contains("\tholds\t")));
        assert_eq!(run(&["check", "--suite", "nope"]).status, 2);
        let out = run(&["check", "--suite", "qt", "--max-len", "3", "--budget", "10"]);
        assert_eq!(out.status, 1);
    }

    #[test]
    fn enumerate_and_numbers() {
        assert_eq!(run(&["enumerate", "--max-len", "2"]).stdout, "a\nb\naa\nab\nba\nbb\n");
        assert_eq!(run(&["enumerate", "--max-len", "5", "--filter", "canonical"]).stdout, "aa\nbaaab\n");
        assert_eq!(run(&["num", "--to", "baaab"]).stdout, "48\n");
        assert_eq!(run(&["num", "--from", "4"]).stdout, "ab\n");
        assert_eq!(run(&["num", "--from", "0"]).status, 2);
        assert_eq!(run(&["num"]).status, 2);
    }

    #[test]
    fn help_goes_to_stdout() {
        let out = run(&["--help"]);
        assert_eq!(out.status, 0);
        assert!(out.stdout.contains("encode"));
    }
}
