//! Command-line front end for the Borsuk-Ulam decision procedures.
//!
//! Four subcommands: `decide` answers whether a class has the property,
//! `witness` prints the constructed braid pair with its per-condition
//! verification, `verify` runs the algebraic verification suites, and
//! `oracle` runs the brute-force audits. Exit status is 2 for malformed
//! input or invalid surface/involution pairings, 1 when any check fails or
//! a counterexample turns up, 0 otherwise.

use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use borsuk_core::bu::{
    decide_klein, decide_torus, tau2_construction_audit, verify_klein_witness,
    verify_torus_witness, Decision, InvolutionId, Witness,
};
use borsuk_core::freewords::Alphabet;
use borsuk_core::homclass::{KleinHom, NormalShape, TorusClass};
use borsuk_core::klein;
use borsuk_core::oracle::{
    check_palin2_small, check_palindrome_lemma, crosscheck_decisions, SearchBounds,
};
use borsuk_core::report::{all_hold, RelationCheck};
use borsuk_core::torus;

#[derive(Parser)]
#[command(
    name = "borsuk",
    version,
    about = "Decide the Borsuk-Ulam property for homotopy classes of self-maps of the \
             torus and the Klein bottle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output mode: human-readable text or one JSON document.
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Text)]
    output: OutputMode,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Text,
    Machine,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Surface {
    Torus,
    Klein,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a homotopy class has the Borsuk-Ulam property.
    Decide(ClassArgs),
    /// Construct and verify the witness pair for a class without the property.
    Witness(ClassArgs),
    /// Run the presentation, isomorphism, action, and rewriting suites.
    Verify,
    /// Run the brute-force audits: palindrome lemmas and decision crosschecks.
    Oracle(OracleArgs),
}

#[derive(Args)]
struct ClassArgs {
    /// Surface carrying the involution.
    #[arg(long, value_enum)]
    surface: Surface,
    /// Involution tag: tau1 and tau2 act on the torus, tau3 on the Klein bottle.
    #[arg(long)]
    involution: InvolutionId,
    /// Torus class as `b11,b12;b21,b22` (matrix rows).
    #[arg(long, allow_hyphen_values = true)]
    class: Option<String>,
    /// Klein bottle homomorphism as `(r1,s1),(r2,s2)`, the images of (1,0) and (0,1).
    #[arg(long, allow_hyphen_values = true)]
    hom: Option<String>,
}

#[derive(Args)]
struct OracleArgs {
    /// Maximum reduced word length in witness searches.
    #[arg(long, default_value_t = 3)]
    max_word_length: usize,
    /// Coordinate slack beyond each item's magnitude in witness searches.
    #[arg(long, default_value_t = 1)]
    coordinate_slack: i64,
    /// Entry range for the audited classes and normal forms.
    #[arg(long, default_value_t = 2)]
    class_range: i64,
    /// Word length bound for the palindrome check.
    #[arg(long, default_value_t = 12)]
    palindrome_length: usize,
    /// Word length bound for the twisted-palindrome pair check.
    #[arg(long, default_value_t = 6)]
    pair_length: usize,
}

enum ClassInput {
    Torus(TorusClass, InvolutionId),
    Klein(KleinHom),
}

impl ClassArgs {
    fn parse_input(&self) -> Result<ClassInput> {
        match self.surface {
            Surface::Torus => {
                if !self.involution.acts_on_torus() {
                    bail!("{} acts on the Klein bottle; the torus pairs with tau1 or tau2", self.involution);
                }
                if self.hom.is_some() {
                    bail!("--hom applies to the Klein bottle; use --class for the torus");
                }
                let text = self
                    .class
                    .as_deref()
                    .ok_or_else(|| anyhow!("--class is required for the torus"))?;
                let class =
                    text.parse().with_context(|| format!("invalid torus class `{text}`"))?;
                Ok(ClassInput::Torus(class, self.involution))
            }
            Surface::Klein => {
                if self.involution != InvolutionId::Tau3 {
                    bail!("{} acts on the torus; the Klein bottle pairs with tau3", self.involution);
                }
                if self.class.is_some() {
                    bail!("--class applies to the torus; use --hom for the Klein bottle");
                }
                let text = self
                    .hom
                    .as_deref()
                    .ok_or_else(|| anyhow!("--hom is required for the Klein bottle"))?;
                let hom =
                    text.parse().with_context(|| format!("invalid homomorphism `{text}`"))?;
                Ok(ClassInput::Klein(hom))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Decide(args) => run_decision(args, cli.output, "decide"),
        Command::Witness(args) => run_decision(args, cli.output, "witness"),
        Command::Verify => run_verify(cli.output),
        Command::Oracle(args) => run_oracle(args, cli.output),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(error) => {
            eprintln!("error: {error:#}");
            ExitCode::from(2)
        }
    }
}

fn shape_json(shape: &NormalShape) -> serde_json::Value {
    match *shape {
        NormalShape::A { r, i, s } => json!({"type": "A", "r": r, "i": i, "s": s}),
        NormalShape::B { r, s } => json!({"type": "B", "r": r, "s": s}),
    }
}

fn witness_json(witness: &Witness) -> serde_json::Value {
    match witness {
        Witness::Torus(w) => json!({"model": "torus", "a": w.a.to_string(), "b": w.b.to_string()}),
        Witness::Klein(w) => json!({"model": "klein", "a": w.a.to_string(), "b": w.b.to_string()}),
    }
}

fn run_decision(args: &ClassArgs, output: OutputMode, command: &str) -> Result<bool> {
    let input = args.parse_input()?;
    let (decision, conditions, subject): (Decision, Vec<RelationCheck>, serde_json::Value) =
        match &input {
            ClassInput::Torus(class, involution) => {
                let decision = decide_torus(*class, *involution);
                let conditions = match &decision.witness {
                    Some(Witness::Torus(w)) => verify_torus_witness(*class, w),
                    _ => Vec::new(),
                };
                let subject = json!({
                    "surface": "torus",
                    "involution": involution.name(),
                    "class": class.to_string(),
                });
                (decision, conditions, subject)
            }
            ClassInput::Klein(hom) => {
                let decision = decide_klein(hom);
                let conditions = match (&decision.witness, &decision.normal_form) {
                    (Some(Witness::Klein(w)), Some(nf)) => {
                        verify_klein_witness(&nf.shape.hom(), w)
                    }
                    _ => Vec::new(),
                };
                let subject = json!({
                    "surface": "klein",
                    "involution": "tau3",
                    "hom": hom.to_string(),
                });
                (decision, conditions, subject)
            }
        };
    let clean = conditions.is_empty() || all_hold(&conditions);
    match output {
        OutputMode::Machine => {
            let document = json!({
                "command": command,
                "subject": subject,
                "bu": decision.bu,
                "reason": decision.reason,
                "normal_form": decision.normal_form.as_ref().map(|nf| json!({
                    "shape": shape_json(&nf.shape),
                    "conjugator": nf.conjugator.to_string(),
                })),
                "witness": decision.witness.as_ref().map(witness_json),
                "conditions": conditions,
            });
            println!("{document}");
        }
        OutputMode::Text => {
            for (key, value) in subject.as_object().expect("subject is an object") {
                println!("{key}: {}", value.as_str().unwrap_or_default());
            }
            println!("bu: {}", decision.bu);
            println!("reason: {}", decision.reason);
            if let Some(nf) = &decision.normal_form {
                println!("normal form: {}", nf.shape);
                println!("conjugator: {}", nf.conjugator);
            }
            match &decision.witness {
                Some(witness) => {
                    let (a, b) = match witness {
                        Witness::Torus(w) => (w.a.to_string(), w.b.to_string()),
                        Witness::Klein(w) => (w.a.to_string(), w.b.to_string()),
                    };
                    println!("witness a: {a}");
                    println!("witness b: {b}");
                    for check in &conditions {
                        println!("condition [{}] {}", if check.holds { "ok" } else { "FAIL" }, check.name);
                    }
                }
                None => println!("witness: none (the class has the Borsuk-Ulam property)"),
            }
        }
    }
    Ok(clean)
}

struct Section {
    name: &'static str,
    checks: Vec<RelationCheck>,
}

fn run_verify(output: OutputMode) -> Result<bool> {
    let sections = vec![
        Section { name: "torus presentation", checks: torus::verify_presentation() },
        Section { name: "klein presentations", checks: klein::verify_presentations() },
        Section { name: "lambda/gamma round trip", checks: klein::lambda_gamma_audit() },
        Section { name: "theta closed forms", checks: klein::theta_closed_form_audit(8, 6) },
        Section {
            name: "sigma conjugation closed forms",
            checks: klein::lsigma_closed_form_audit(6),
        },
        Section { name: "index-2 rewriting", checks: klein::verify_pure_rewrite() },
        Section { name: "tau2 witness construction", checks: tau2_construction_audit(3) },
    ];
    let clean = sections.iter().all(|section| all_hold(&section.checks));
    match output {
        OutputMode::Machine => {
            let document = json!({
                "command": "verify",
                "sections": sections
                    .iter()
                    .map(|section| json!({"name": section.name, "checks": section.checks}))
                    .collect::<Vec<_>>(),
                "all_hold": clean,
            });
            println!("{document}");
        }
        OutputMode::Text => {
            for section in &sections {
                println!("== {} ==", section.name);
                for check in &section.checks {
                    println!("  [{}] {}", if check.holds { "ok" } else { "FAIL" }, check.name);
                }
            }
            println!("{}", if clean { "all checks hold" } else { "some checks FAILED" });
        }
    }
    Ok(clean)
}

fn run_oracle(args: &OracleArgs, output: OutputMode) -> Result<bool> {
    let bounds = SearchBounds::new(args.max_word_length, args.coordinate_slack);
    let palindromes = check_palindrome_lemma(args.palindrome_length);
    let pairs = check_palin2_small(SearchBounds::new(args.pair_length, 0));
    let report = crosscheck_decisions(bounds, args.class_range);
    let clean = palindromes.is_empty() && pairs.is_empty() && report.is_consistent();
    match output {
        OutputMode::Machine => {
            let document = json!({
                "command": "oracle",
                "palindrome_length": args.palindrome_length,
                "palindrome_counterexamples": palindromes
                    .iter()
                    .map(|w| w.display(Alphabet::XY).to_string())
                    .collect::<Vec<_>>(),
                "pair_length": args.pair_length,
                "pair_counterexamples": pairs
                    .iter()
                    .map(|(z, w)| json!({
                        "z": z.display(Alphabet::XY).to_string(),
                        "w": w.display(Alphabet::XY).to_string(),
                    }))
                    .collect::<Vec<_>>(),
                "items": report
                    .items
                    .iter()
                    .map(|item| json!({
                        "label": item.label,
                        "bu": item.bu,
                        "status": item.status,
                        "detail": item.detail,
                    }))
                    .collect::<Vec<_>>(),
                "counterexamples": report.counterexamples()
                    + palindromes.len()
                    + pairs.len(),
            });
            println!("{document}");
        }
        OutputMode::Text => {
            println!(
                "palindrome lemma up to length {}: {} counterexamples",
                args.palindrome_length,
                palindromes.len()
            );
            for word in &palindromes {
                println!("  COUNTEREXAMPLE {}", word.display(Alphabet::XY));
            }
            println!(
                "twisted palindrome pairs up to length {}: {} counterexamples",
                args.pair_length,
                pairs.len()
            );
            for (z, w) in &pairs {
                println!(
                    "  COUNTEREXAMPLE z = {}, w = {}",
                    z.display(Alphabet::XY),
                    w.display(Alphabet::XY)
                );
            }
            for item in &report.items {
                println!("{} {}: {}", item.status.label(), item.label, item.detail);
            }
            println!(
                "{} items checked, {} counterexamples",
                report.items.len(),
                report.counterexamples()
            );
        }
    }
    Ok(clean)
}
