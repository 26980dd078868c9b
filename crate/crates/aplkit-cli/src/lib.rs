//! CLI front end for the aplkit kernel.

pub mod commands;
pub mod document;
pub mod output;

use clap::{Parser, Subcommand};
use commands::{CheckYbeArgs, ConstructArgs, VerifyArgs};
use output::OutputFormat;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "aplkit",
    about = "Exact verification and construction of transposed Poisson / anti-pre-Lie structures",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    OutputFormat::parse(s).ok_or_else(|| format!("unknown format {s:?} (text|structured)"))
}

#[derive(Subcommand)]
pub enum Command {
    /// Run a checker suite against a named object.
    Verify {
        file: PathBuf,
        /// Object the suite applies to (algebra, form or coproduct name).
        #[arg(long)]
        object: String,
        /// Suite: a class (comm-assoc, lie, transposed-poisson,
        /// anti-pre-lie, anti-pre-lie-alt, anti-pre-lie-poisson, zinbiel,
        /// pre-apl, pre-aplp, poisson-triviality), a form predicate
        /// (symmetric, nondegenerate, invariant-dot, invariant-bracket,
        /// comm-2-cocycle), derivation, apl-coalgebra, cocomm-coassoc,
        /// aplp-coalgebra, apl-bialgebra, comm-cocomm-inf, aplp-bialgebra,
        /// one-cocycle, manin-lie, manin-tpa, o-operator-forms,
        /// coboundary-apl or coboundary-aplp.
        #[arg(long)]
        suite: String,
        /// Context algebra for form predicates.
        #[arg(long)]
        algebra: Option<String>,
        /// Anti-pre-Lie coproduct name where the suite needs one.
        #[arg(long)]
        delta: Option<String>,
        /// Cocommutative comultiplication name where the suite needs one.
        #[arg(long)]
        comul: Option<String>,
        /// Linear map name (derivation checks).
        #[arg(long)]
        map: Option<String>,
        /// Product name (derivation checks, dualize).
        #[arg(long)]
        product: Option<String>,
        /// Two-tensor name (Yang-Baxter related suites).
        #[arg(long)]
        r: Option<String>,
        /// First-half dimension for Manin-triple suites.
        #[arg(long)]
        split: Option<usize>,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: OutputFormat,
        /// Also write the report to a file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a new object and write the extended workspace.
    Construct {
        file: PathBuf,
        /// Recipe: witt-lie, apl-from-derivation, pre-apl-from-zinbiel,
        /// pre-aplp-from-zinbiel, induce-from-2cocycle, commutator,
        /// pre-apl-sum, zinbiel-symmetrization, semidirect,
        /// double-from-matched-pair, canonical-r, coboundary-coproducts,
        /// dualize.
        #[arg(long)]
        recipe: String,
        /// Name of the constructed object.
        #[arg(long)]
        name: String,
        #[arg(long)]
        algebra: Option<String>,
        /// Second algebra (the dual-side structure) for doubles.
        #[arg(long)]
        dual: Option<String>,
        #[arg(long)]
        map: Option<String>,
        #[arg(long)]
        form: Option<String>,
        #[arg(long)]
        r: Option<String>,
        /// Structure kind: lie, comm-assoc, apl, tpa, aplp.
        #[arg(long)]
        kind: Option<String>,
        /// Representation choice for semidirect: adjoint or dual-adjoint.
        #[arg(long)]
        rep: Option<String>,
        /// Variant for canonical-r: from-pre-apl or from-pre-aplp.
        #[arg(long)]
        variant: Option<String>,
        #[arg(long)]
        product: Option<String>,
        #[arg(long)]
        coproduct: Option<String>,
        /// Output workspace file.
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: OutputFormat,
    },
    /// Evaluate the Yang-Baxter tensors of a two-tensor.
    CheckYbe {
        file: PathBuf,
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        r: String,
        /// apl (T(r)), aybe (A(r)) or aplp (both).
        #[arg(long)]
        kind: String,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: OutputFormat,
    },
    /// Dualize a product into a coproduct or vice versa.
    Dualize {
        file: PathBuf,
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long)]
        coproduct: Option<String>,
        /// Product slot to read from or write to.
        #[arg(long)]
        product: Option<String>,
        #[arg(long)]
        name: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: OutputFormat,
    },
    /// List the objects of a workspace file.
    Report {
        file: PathBuf,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: OutputFormat,
    },
}

/// Runs a parsed command; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let outcome = match cli.command {
        Command::Verify {
            file,
            object,
            suite,
            algebra,
            delta,
            comul,
            map,
            product,
            r,
            split,
            format,
            out,
        } => {
            let outcome = commands::cmd_verify(&VerifyArgs {
                file,
                object,
                suite,
                algebra,
                delta,
                comul,
                map,
                product,
                r,
                split,
                format,
            });
            if let Some(path) = out {
                if let Err(e) = std::fs::write(&path, &outcome.output) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return commands::EXIT_INPUT_ERROR;
                }
            }
            outcome
        }
        Command::Construct {
            file,
            recipe,
            name,
            algebra,
            dual,
            map,
            form,
            r,
            kind,
            rep,
            variant,
            product,
            coproduct,
            out,
            format,
        } => commands::cmd_construct(&ConstructArgs {
            file,
            recipe,
            name,
            algebra,
            dual,
            map,
            form,
            r,
            kind,
            rep,
            variant,
            product,
            coproduct,
            out,
            format,
        }),
        Command::CheckYbe {
            file,
            algebra,
            r,
            kind,
            format,
        } => commands::cmd_check_ybe(&CheckYbeArgs {
            file,
            algebra,
            r,
            kind,
            format,
        }),
        Command::Dualize {
            file,
            algebra,
            coproduct,
            product,
            name,
            out,
            format,
        } => commands::cmd_construct(&ConstructArgs {
            file,
            recipe: "dualize".into(),
            name,
            algebra,
            dual: None,
            map: None,
            form: None,
            r: None,
            kind: None,
            rep: None,
            variant: None,
            product,
            coproduct,
            out,
            format,
        }),
        Command::Report { file, format } => commands::cmd_report(&file, format),
    };
    print!("{}", outcome.output);
    outcome.exit_code
}
