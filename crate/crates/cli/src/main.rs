//! Command-line front end. Every command prints one JSON object per line on
//! standard output.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use glyndon::checks::{run_suite, DEFAULT_SEED};
use glyndon::order::ordering_label;
use glyndon::*;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "glyndon", version, about = "Generalized lexicographic orders and generalized Lyndon words")]
struct Cli {
    /// standard, opposite, alternating, or @path to a schedule JSON file.
    #[arg(long, global = true, default_value = "standard")]
    order: String,

    /// Comma-separated alphabet symbols, smallest first under the standard order.
    #[arg(long, global = true, default_value = "0,1")]
    alphabet: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether a finite or eventually periodic word is generalized Lyndon.
    IsLyndon { word: String },
    /// Compare two words.
    Compare { w1: String, w2: String },
    /// Nonincreasing generalized Lyndon factorization.
    Factorize { word: String },
    /// Lengths of the generalized Lyndon prefixes of a stream.
    Census {
        stream: String,
        #[arg(long, default_value_t = 1024)]
        budget: usize,
    },
    /// Stable leading factors of a stream.
    FactorizeStream {
        stream: String,
        #[arg(long, default_value_t = 4096)]
        budget: usize,
    },
    /// Run a randomized check suite.
    Check {
        suite: String,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Search for an eventually periodic generalized Lyndon extension.
    Conjecture {
        word: String,
        #[arg(long, default_value_t = 8)]
        max_period: usize,
        #[arg(long, default_value_t = 12)]
        max_preperiod: usize,
    },
}

struct Context {
    ord: OrderSchedule,
}

impl Context {
    fn alphabet(&self) -> &Alphabet {
        self.ord.alphabet()
    }

    fn word(&self, text: &str) -> Result<Word> {
        Word::parse(text, self.alphabet())
    }

    fn finite(&self, text: &str) -> Result<FiniteWord> {
        match self.word(text)? {
            Word::Finite(w) => Ok(w),
            Word::Infinite(_) => Err(Error::Usage(format!("{text:?} must be a finite word"))),
        }
    }

    fn stream(&self, text: &str) -> Result<Box<dyn PrefixSource>> {
        if let Some(path) = text.strip_prefix('@') {
            return Ok(Box::new(StreamWord::from_morphism_path(path, self.alphabet())?));
        }
        if glyndon::stream::BUILTIN_STREAMS.contains(&text) {
            return Ok(Box::new(StreamWord::builtin(text, self.alphabet())?));
        }
        match self.word(text)? {
            Word::Infinite(w) => Ok(Box::new(w)),
            Word::Finite(_) => Err(Error::Usage(format!(
                "{text:?} is not a stream; expected a built-in name, @morphism.json or PREFIX(PERIOD)^w"
            ))),
        }
    }

    fn format(&self, w: &FiniteWord) -> String {
        w.format(self.alphabet())
    }
}

fn tail_json(ctx: &Context, f: &InfiniteFactorization) -> Value {
    match &f.tail {
        Tail::Infinite(t) => json!({"kind": "infinite", "value": t.format(ctx.alphabet())}),
        Tail::Periodic(ell) => json!({"kind": "periodic", "value": ctx.format(ell)}),
        Tail::Open { residual_index } => json!({"kind": "open", "residual_index": residual_index}),
    }
}

/// Runs a command and returns its report and exit code.
fn run(cli: &Cli) -> Result<(Value, u8)> {
    let alphabet = Alphabet::parse(&cli.alphabet)?;
    let ctx = Context {
        ord: OrderSchedule::by_name(&cli.order, alphabet)?,
    };
    let order = ctx.ord.name().to_string();
    match &cli.command {
        Command::IsLyndon { word } => match ctx.word(word)? {
            Word::Finite(w) => {
                let is_gl = is_generalized_lyndon(&w, &ctx.ord)?;
                let mut out = json!({"word": ctx.format(&w), "order": order, "is_gl": is_gl});
                if let Some(r) = witness_rotation(&w, &ctx.ord)? {
                    out["witness_rotation"] = json!(ctx.format(&r));
                }
                Ok((out, u8::from(!is_gl)))
            }
            Word::Infinite(w) => {
                let is_gl = is_infinite_generalized_lyndon(&w, &ctx.ord)?;
                let mut out = json!({"word": w.format(ctx.alphabet()), "order": order, "is_gl": is_gl});
                if let Some(k) = witness_suffix(&w, &ctx.ord)? {
                    out["witness_suffix"] = json!(k);
                }
                Ok((out, u8::from(!is_gl)))
            }
        },
        Command::Compare { w1, w2 } => {
            let c = compare(&ctx.word(w1)?, &ctx.word(w2)?, &ctx.ord)?;
            let index = (c.index > 0).then_some(c.index);
            Ok((json!({"ordering": ordering_label(c.ordering), "decision_index": index}), 0))
        }
        Command::Factorize { word } => match ctx.word(word)? {
            Word::Finite(w) => {
                let f = factorize_finite(&w, &ctx.ord)?;
                let factors: Vec<String> = f.factors.iter().map(|x| ctx.format(x)).collect();
                Ok((json!({"word": ctx.format(&w), "order": order, "factors": factors}), 0))
            }
            Word::Infinite(w) => {
                let f = factorize_eventually_periodic(&w, &ctx.ord)?;
                let out = json!({
                    "word": w.format(ctx.alphabet()),
                    "order": order,
                    "head": f.format_head(ctx.alphabet()),
                    "tail": tail_json(&ctx, &f),
                });
                Ok((out, 0))
            }
        },
        Command::Census { stream, budget } => {
            let s = ctx.stream(stream)?;
            let report = gl_prefix_census(s.as_ref(), *budget, &ctx.ord)?;
            let mut out = json!({"stream": stream, "order": order});
            let body = serde_json::to_value(&report).expect("serializable report");
            out.as_object_mut().expect("object").extend(body.as_object().expect("object").clone());
            Ok((out, 0))
        }
        Command::FactorizeStream { stream, budget } => {
            let s = ctx.stream(stream)?;
            let f = factorize_stream(s.as_ref(), *budget, &ctx.ord)?;
            let out = json!({
                "stream": stream,
                "order": order,
                "budget": budget,
                "head": f.format_head(ctx.alphabet()),
                "tail": tail_json(&ctx, &f),
            });
            Ok((out, 0))
        }
        Command::Check { suite, trials, seed } => {
            let report = run_suite(suite, *trials, *seed)?;
            let code = u8::from(!report.ok());
            Ok((serde_json::to_value(&report).expect("serializable report"), code))
        }
        Command::Conjecture {
            word,
            max_period,
            max_preperiod,
        } => {
            let w = ctx.finite(word)?;
            let bounds = ConjectureBounds {
                max_period: *max_period,
                max_preperiod: *max_preperiod,
            };
            let mut out = json!({"word": ctx.format(&w), "order": order});
            match conjecture_search(&w, &ctx.ord, bounds)? {
                Some(x) => {
                    out["status"] = json!("witness");
                    out["witness"] = json!(x.format(ctx.alphabet()));
                }
                None => out["status"] = json!("inconclusive"),
            }
            Ok((out, 0))
        }
    }
}

fn error_json(e: &Error) -> (Value, u8) {
    match e {
        Error::Parse { position, message } => (
            json!({"error": "parse", "detail": message, "position": position}),
            2,
        ),
        Error::Usage(m) => (json!({"error": "usage", "detail": m}), 2),
        Error::Domain(m) => (json!({"error": "domain", "detail": m}), 3),
        Error::Invariant(m) => (json!({"error": "invariant", "detail": m}), 4),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, code) = run(&cli).unwrap_or_else(|e| {
        eprintln!("glyndon: {e}");
        error_json(&e)
    });
    println!("{out}");
    ExitCode::from(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_error_kind() {
        let codes: Vec<u8> = [
            Error::Parse { position: 0, message: String::new() },
            Error::Usage(String::new()),
            Error::Domain(String::new()),
            Error::Invariant(String::new()),
        ]
        .iter()
        .map(|e| error_json(e).1)
        .collect();
        assert_eq!(codes, [2, 2, 3, 4]);
    }
}
