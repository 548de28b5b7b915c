//! Command line front end: gallery checks, document analysis, DOT export,
//! and script replay. All heavy lifting lives in the library; this file is
//! argument parsing, IO, and exit codes.
//!
//! Exit codes: 0 on success (an Unknown Kodaira dimension is still
//! success, it is flagged in the report), 1 when the input or result
//! carries validation violations or a computation could not finish, 2 for
//! unusable input such as malformed JSON or bad references.

use std::fmt::Write as _;
use std::io::Read as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use kappar::docs::{from_document, replay, to_document, ScriptDocument, SurfaceDocument};
use kappar::dot::to_dot;
use kappar::gallery::{build, entries, expected, script, GallerySpec};
use kappar::homology::homology_report;
use kappar::kodaira::{kappa, kappa_real};
use kappar::pair::RealSNCPair;
use kappar::report::analyze;

#[derive(Parser)]
#[command(
    name = "kappar",
    version,
    about = "Exact Kodaira dimensions and homology invariants of real SNC surface pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a bundled example and check its invariants; "list" enumerates
    Gallery {
        /// Entry name, or "list"
        name: String,
        /// Integer parameters of a parametric family
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
        /// Print the surface document instead of the report
        #[arg(long, conflicts_with = "emit_script")]
        emit_surface: bool,
        /// Print the generating blow-up script instead of the report
        #[arg(long)]
        emit_script: bool,
    },
    /// Analyze a surface or script document and print a JSON report
    Analyze {
        /// Path to the document, or "-" for stdin
        input: String,
        /// Also report K + B_R classified before imaginary loop
        /// elimination; that number is not the real Kodaira dimension
        #[arg(long)]
        no_loop_elimination: bool,
    },
    /// Emit the weighted dual graph in DOT format
    Dot {
        /// Path to a document, or "-" for stdin
        #[arg(required_unless_present = "gallery", conflicts_with = "gallery")]
        input: Option<String>,
        /// Render a gallery entry: name followed by its parameters
        #[arg(long, num_args = 1.., value_name = "NAME [PARAMS]", allow_negative_numbers = true)]
        gallery: Option<Vec<String>>,
    },
    /// Replay a blow-up script and print the resulting surface document
    Script {
        /// Path to the script, or "-" for stdin
        input: String,
    },
}

enum Failure {
    /// Input could not be used at all.
    Usage(String),
    /// Output was produced but carries violations or incomplete results.
    Violations(String),
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| usage(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("reading {path}: {e}")))
    }
}

/// Loads either document flavor: scripts are replayed, surfaces
/// deserialized directly.
fn load_pair(text: &str) -> Result<RealSNCPair, Failure> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| usage(format!("JSON parse error: {e}")))?;
    if value.get("curves").is_some() || value.get("ops").is_some() {
        let doc: ScriptDocument =
            serde_json::from_str(text).map_err(|e| usage(format!("script document: {e}")))?;
        replay(&doc).map_err(|e| usage(format!("script replay: {e}")))
    } else {
        let doc: SurfaceDocument =
            serde_json::from_str(text).map_err(|e| usage(format!("surface document: {e}")))?;
        from_document(&doc).map_err(|e| usage(format!("surface document: {e}")))
    }
}

fn parse_gallery(name: &str, params: &[i64]) -> Result<GallerySpec, Failure> {
    GallerySpec::from_args(name, params).map_err(usage)
}

fn fmt_torsion<T: std::fmt::Display>(t: &[T]) -> String {
    let inner: Vec<String> = t.iter().map(|x| x.to_string()).collect();
    format!("[{}]", inner.join(", "))
}

fn gallery_list() {
    println!("{:<14}{:<44}{}", "name", "parameters", "summary");
    for e in entries() {
        let params = if e.parameters.is_empty() {
            "(none)"
        } else {
            e.parameters
        };
        println!("{:<14}{:<44}{}", e.name, params, e.summary);
    }
}

/// Prints the expected-versus-computed table for one entry. Disagreement
/// or validation violations turn into exit code 1.
fn gallery_table(spec: &GallerySpec) -> Result<(), Failure> {
    let pair = build(spec).map_err(usage)?;
    let exp = expected(spec);
    let violations = pair.validate();
    let k = kappa(&pair).value;
    let kr = kappa_real(&pair)
        .map_err(|e| Failure::Violations(format!("real Kodaira dimension: {e}")))?
        .result
        .value;
    let hom = homology_report(&pair).ok();

    let mut rows: Vec<(&str, String, String)> = vec![
        ("kappa", exp.kappa.to_string(), k.to_string()),
        ("kappa_real", exp.kappa_real.to_string(), kr.to_string()),
    ];
    if let Some(t) = &exp.torsion {
        let got = hom
            .as_ref()
            .map(|h| fmt_torsion(&h.torsion))
            .unwrap_or_else(|| "(no classes)".into());
        rows.push(("torsion", fmt_torsion(t), got));
    }
    if let Some(q) = exp.q_acyclic {
        let got = hom
            .as_ref()
            .map(|h| h.q_acyclic.to_string())
            .unwrap_or_else(|| "(no classes)".into());
        rows.push(("q_acyclic", q.to_string(), got));
    }
    if let Some(z) = exp.z_acyclic {
        let got = hom
            .as_ref()
            .map(|h| h.z_acyclic.to_string())
            .unwrap_or_else(|| "(no classes)".into());
        rows.push(("z_acyclic", z.to_string(), got));
    }
    if let Some(b) = exp.boundary_components {
        rows.push((
            "boundary_components",
            b.to_string(),
            pair.boundary().len().to_string(),
        ));
    }

    let mut out = String::new();
    let _ = writeln!(out, "{}", spec.display_name());
    let _ = writeln!(
        out,
        "  {:<21}{:<12}{:<12}{}",
        "invariant", "expected", "computed", "agree"
    );
    let mut all_agree = true;
    for (label, want, got) in &rows {
        let agree = want == got;
        all_agree &= agree;
        let _ = writeln!(
            out,
            "  {:<21}{:<12}{:<12}{}",
            label,
            want,
            got,
            if agree { "yes" } else { "NO" }
        );
    }
    for v in &violations {
        let _ = writeln!(out, "  violation: {v}");
    }
    print!("{out}");
    if all_agree && violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Violations("expected invariants disagree".into()))
    }
}

fn cmd_gallery(
    name: &str,
    params: &[i64],
    emit_surface: bool,
    emit_script: bool,
) -> Result<(), Failure> {
    if name == "list" {
        gallery_list();
        return Ok(());
    }
    let spec = parse_gallery(name, params)?;
    if emit_surface {
        let pair = build(&spec).map_err(usage)?;
        let doc = to_document(&pair);
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("documents serialize")
        );
        return Ok(());
    }
    if emit_script {
        let sc = script(&spec).map_err(usage)?;
        println!(
            "{}",
            serde_json::to_string_pretty(&sc).expect("scripts serialize")
        );
        return Ok(());
    }
    gallery_table(&spec)
}

fn cmd_analyze(input: &str, no_loop_elimination: bool) -> Result<(), Failure> {
    let pair = load_pair(&read_input(input)?)?;
    let report = analyze(&pair, no_loop_elimination);
    println!("{}", report.to_json());
    if !report.validate.is_empty() {
        return Err(Failure::Violations(format!(
            "{} validation violation(s)",
            report.validate.len()
        )));
    }
    if let Some(e) = &report.kappa_real_error {
        return Err(Failure::Violations(format!(
            "real Kodaira dimension not computed: {e}"
        )));
    }
    Ok(())
}

fn cmd_dot(input: Option<&str>, gallery: Option<&[String]>) -> Result<(), Failure> {
    let pair = match (input, gallery) {
        (Some(path), None) => load_pair(&read_input(path)?)?,
        (None, Some(args)) => {
            let params: Vec<i64> = args[1..]
                .iter()
                .map(|p| {
                    p.parse::<i64>()
                        .map_err(|_| usage(format!("parameter {p:?} is not an integer")))
                })
                .collect::<Result<_, _>>()?;
            build(&parse_gallery(&args[0], &params)?).map_err(usage)?
        }
        _ => return Err(usage("pass a document path or --gallery")),
    };
    print!("{}", to_dot(&pair));
    Ok(())
}

fn cmd_script(input: &str) -> Result<(), Failure> {
    let text = read_input(input)?;
    let doc: ScriptDocument =
        serde_json::from_str(&text).map_err(|e| usage(format!("script document: {e}")))?;
    let pair = replay(&doc).map_err(|e| usage(format!("script replay: {e}")))?;
    let out = to_document(&pair);
    println!(
        "{}",
        serde_json::to_string_pretty(&out).expect("documents serialize")
    );
    let violations = pair.validate();
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Violations(format!(
            "{} validation violation(s)",
            violations.len()
        )))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gallery {
            name,
            params,
            emit_surface,
            emit_script,
        } => cmd_gallery(&name, &params, emit_surface, emit_script),
        Command::Analyze {
            input,
            no_loop_elimination,
        } => cmd_analyze(&input, no_loop_elimination),
        Command::Dot { input, gallery } => cmd_dot(input.as_deref(), gallery.as_deref()),
        Command::Script { input } => cmd_script(&input),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violations(msg)) => {
            eprintln!("kappar: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("kappar: {msg}");
            ExitCode::from(2)
        }
    }
}
