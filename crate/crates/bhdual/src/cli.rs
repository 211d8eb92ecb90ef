//! Command-line front end.  Every subcommand is a thin shell over the
//! library with deterministic, newline-terminated output.
//!
//! Exit codes: `0` success, `1` bad input (unparsable polynomial,
//! classification failure, unknown name, bad flags), `2` a verification
//! run or golden-table diff found mismatches.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::atlas::{Atlas, AtlasEntry};
use crate::dynkin::t_graph;
use crate::invariants::{
    delta, dolgachev, gabrielov, gorenstein_parameter, milnor_number, orbit_invariants, Triple,
};
use crate::invertible::{classify, TypedForm};
use crate::poly::parse_polynomial;
use crate::series::{characteristic_function, monodromy_charpoly, saito_dual};
use crate::tables::{self, TableKind};
use crate::verify::{verify_all, CheckConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "bhdual",
    version,
    about = "Classification and strange duality of invertible polynomials in three variables"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Classify a polynomial into its normal form.
    Classify {
        /// Polynomial in x, y, z, e.g. "x^2+y^3+z^7".
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute the full invariant record of a polynomial or named class.
    Invariants {
        /// Polynomial or name (e.g. "E18", "A(2,3)").
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the Berglund–Hübsch transpose of a polynomial.
    Transpose {
        /// Polynomial in x, y, z.
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the name of the dual class of a name or polynomial.
    Dual {
        /// Polynomial or name.
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build the Coxeter–Dynkin graph T(γ₁,γ₂,γ₃), optionally extended
    /// by a named bimodal row's chain.
    Dynkin {
        /// Gabrielov numbers as "g1,g2,g3"; defaults to the extension
        /// row's stored triple.
        #[arg(long)]
        gamma: Option<String>,
        /// Name of a stored row carrying extension data (e.g. "E18").
        #[arg(long)]
        extend: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Enumerate all normal forms within a bound and check every
    /// duality identity on each of them.
    Verify {
        /// Parameter bound of the enumeration (≥ 2).
        #[arg(long, default_value_t = 4)]
        bound: u64,
        /// Expansion depth of the Poincaré-series oracle (default
        /// min(2d, 400) per form).
        #[arg(long)]
        depth: Option<usize>,
        /// Skip the cubic-cost graph-discriminant identities.
        #[arg(long)]
        skip_dynkin: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Render a golden table and diff every cell against values
    /// regenerated from the polynomials alone.
    Tables {
        /// One of: simple, elliptic, arnold, bimodal, series, orbits, phi.
        #[arg(long)]
        which: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Render an error in the requested format.
fn fail(format: Format, code: i32, message: &str) -> (i32, String) {
    match format {
        Format::Json => (
            code,
            format!("{}\n", serde_json::json!({"schema": 1, "error": message})),
        ),
        _ => (code, format!("error: {message}\n")),
    }
}

/// Parse a comma-separated positive triple like "2,3,12".
fn parse_triple_arg(text: &str) -> Result<[u64; 3], String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated numbers, got {text:?}"));
    }
    let mut out = [0u64; 3];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|_| format!("bad number {part:?} in {text:?}"))?;
        if *slot == 0 {
            return Err(format!("entries of {text:?} must be positive"));
        }
    }
    Ok(out)
}

/// The `invariants` record; `beta` is absent when the Gorenstein
/// parameter is not positive or some order does not admit an inverse.
#[derive(Serialize)]
struct InvariantsRecord {
    schema: u32,
    name: Option<String>,
    f: String,
    ft: String,
    #[serde(flatten)]
    form: TypedForm,
    weights: crate::invertible::WeightSystem,
    dual_weights: crate::invertible::WeightSystem,
    c_f: u64,
    c_ft: u64,
    alpha: [u64; 3],
    gamma: [u64; 3],
    #[serde(rename = "a_W")]
    a_w: i64,
    delta: i64,
    mu: u64,
    beta: Option<Vec<(u64, u64)>>,
    phi: String,
    phi_dual: String,
    char_poly: String,
    char_poly_level: u64,
}

fn invariants_record(tf: &TypedForm, name: Option<String>) -> Result<InvariantsRecord, String> {
    let ws = tf.canonical_weights();
    let dual_ws = tf.dual_weights();
    let alpha = dolgachev(tf);
    let gamma = gabrielov(tf);
    let a_w = gorenstein_parameter(&ws);
    let phi = characteristic_function(&ws, &alpha);
    let phi_dual = saito_dual(&phi, ws.d).map_err(|e| e.to_string())?;
    let mu = milnor_number(&ws).map_err(|e| e.to_string())?;
    // Present β against the sorted α order the record displays.
    let beta = if a_w > 0 {
        orbit_invariants(&Triple::new(alpha.sorted()), a_w as u64)
            .ok()
            .map(|o| o.pairs)
    } else {
        None
    };
    Ok(InvariantsRecord {
        schema: 1,
        name,
        f: tf.to_polynomial().to_string(),
        ft: tf.transpose_polynomial().to_string(),
        form: tf.clone(),
        weights: ws,
        dual_weights: dual_ws,
        c_f: ws.content(),
        c_ft: dual_ws.content(),
        alpha: alpha.sorted(),
        gamma: gamma.sorted(),
        a_w,
        delta: delta(&alpha),
        mu,
        beta,
        phi: phi.to_string(),
        phi_dual: phi_dual.to_string(),
        char_poly: monodromy_charpoly(tf).to_string(),
        char_poly_level: ws.d / dual_ws.content(),
    })
}

fn render_invariants_text(r: &InvariantsRecord) -> String {
    let mut out = String::new();
    let mut line = |key: &str, value: String| {
        out.push_str(&format!("{key:<16}{value}\n"));
    };
    if let Some(name) = &r.name {
        line("name:", name.clone());
    }
    line("f:", r.f.clone());
    line("ft:", r.ft.clone());
    line("type:", r.form.type_tag.to_string());
    line(
        "params:",
        format!("{},{},{}", r.form.params[0], r.form.params[1], r.form.params[2]),
    );
    line("perm:", r.form.perm.to_string());
    line("weights:", r.weights.to_string());
    line("dual_weights:", r.dual_weights.to_string());
    line("c_f:", r.c_f.to_string());
    line("c_ft:", r.c_ft.to_string());
    line("alpha:", format!("{},{},{}", r.alpha[0], r.alpha[1], r.alpha[2]));
    line("gamma:", format!("{},{},{}", r.gamma[0], r.gamma[1], r.gamma[2]));
    line("a_W:", r.a_w.to_string());
    line("delta:", r.delta.to_string());
    line("mu:", r.mu.to_string());
    if let Some(beta) = &r.beta {
        let text = beta
            .iter()
            .map(|(a, b)| format!("{a},{b}"))
            .collect::<Vec<_>>()
            .join(";");
        line("beta:", text);
    }
    line("phi:", r.phi.clone());
    line("phi_dual:", r.phi_dual.clone());
    line("char_poly:", r.char_poly.clone());
    line("char_poly_level:", r.char_poly_level.to_string());
    out
}

/// Resolve an `invariants` input: a stored/family name, else a
/// polynomial; returns the classified form and the class name when one
/// is stored.
fn resolve_input(atlas: &Atlas, input: &str) -> Result<(TypedForm, Option<String>), String> {
    match atlas.lookup(input) {
        Ok(AtlasEntry { name, f_text, .. }) => {
            let p = parse_polynomial(&f_text).map_err(|e| e.to_string())?;
            let tf = classify(&p).map_err(|e| e.to_string())?;
            return Ok((tf, Some(name)));
        }
        Err(crate::atlas::AtlasError::UnknownName(_)) => {}
        Err(e) => return Err(e.to_string()),
    }
    let p = parse_polynomial(input).map_err(|e| e.to_string())?;
    let tf = classify(&p).map_err(|e| e.to_string())?;
    Ok((tf, atlas.name_of(input).ok()))
}

fn run_classify(input: &str, format: Format) -> (i32, String) {
    let parsed = parse_polynomial(input)
        .map_err(|e| e.to_string())
        .and_then(|p| classify(&p).map_err(|e| e.to_string()));
    let tf = match parsed {
        Ok(tf) => tf,
        Err(e) => return fail(format, EXIT_INPUT, &e),
    };
    match format {
        Format::Text => (EXIT_OK, format!("{tf}\n")),
        Format::Json => {
            let mut v = serde_json::to_value(&tf).expect("forms serialize");
            v["schema"] = 1.into();
            (EXIT_OK, format!("{v}\n"))
        }
        Format::Dot => fail(format, EXIT_INPUT, "dot output applies to dynkin only"),
    }
}

fn run_invariants(input: &str, format: Format) -> (i32, String) {
    let record = resolve_input(Atlas::builtin(), input)
        .and_then(|(tf, name)| invariants_record(&tf, name));
    match record {
        Ok(r) => match format {
            Format::Text => (EXIT_OK, render_invariants_text(&r)),
            Format::Json => (
                EXIT_OK,
                format!("{}\n", serde_json::to_string(&r).expect("record serializes")),
            ),
            Format::Dot => fail(format, EXIT_INPUT, "dot output applies to dynkin only"),
        },
        Err(e) => fail(format, EXIT_INPUT, &e),
    }
}

fn run_transpose(input: &str, format: Format) -> (i32, String) {
    let result = parse_polynomial(input)
        .map_err(|e| e.to_string())
        .and_then(|p| {
            crate::invertible::transpose(&p)
                .map(|t| (p, t))
                .map_err(|e| e.to_string())
        });
    match result {
        Ok((p, t)) => match format {
            Format::Text => (EXIT_OK, format!("{t}\n")),
            Format::Json => (
                EXIT_OK,
                format!(
                    "{}\n",
                    serde_json::json!({"schema": 1, "f": p.to_string(), "transpose": t.to_string()})
                ),
            ),
            Format::Dot => fail(format, EXIT_INPUT, "dot output applies to dynkin only"),
        },
        Err(e) => fail(format, EXIT_INPUT, &e),
    }
}

fn run_dual(input: &str, format: Format) -> (i32, String) {
    match Atlas::builtin().dual_name(input) {
        Ok(dual) => match format {
            Format::Text => (EXIT_OK, format!("{dual}\n")),
            Format::Json => (
                EXIT_OK,
                format!("{}\n", serde_json::json!({"schema": 1, "input": input, "dual": dual})),
            ),
            Format::Dot => fail(format, EXIT_INPUT, "dot output applies to dynkin only"),
        },
        Err(e) => fail(format, EXIT_INPUT, &e.to_string()),
    }
}

fn run_dynkin(gamma: Option<&str>, extend: Option<&str>, format: Format) -> (i32, String) {
    let extension = match extend {
        Some(name) => match Atlas::builtin().lookup(name) {
            Ok(e) => Some(e),
            Err(e) => return fail(format, EXIT_INPUT, &e.to_string()),
        },
        None => None,
    };
    let gamma = match (gamma, &extension) {
        (Some(text), _) => match parse_triple_arg(text) {
            Ok(t) => Triple::new(t),
            Err(e) => return fail(format, EXIT_INPUT, &e),
        },
        (None, Some(entry)) => entry.gamma,
        (None, None) => {
            return fail(format, EXIT_INPUT, "pass --gamma g1,g2,g3 or --extend NAME")
        }
    };
    let mut graph = t_graph(&gamma);
    if let Some(entry) = &extension {
        if gamma != entry.gamma {
            return fail(
                format,
                EXIT_INPUT,
                &format!(
                    "--gamma {},{},{} does not match the stored triple of {}",
                    gamma.0[0], gamma.0[1], gamma.0[2], entry.name
                ),
            );
        }
        let Some(pairs) = entry.delta_pairs.as_ref() else {
            return fail(
                format,
                EXIT_INPUT,
                &format!("{} stores no graph extension data", entry.name),
            );
        };
        let pairs: [(u64, u64); 3] = pairs.clone().try_into().expect("validated as three pairs");
        if !matches!(entry.a_w, 2 | 3 | 5) {
            return fail(
                format,
                EXIT_INPUT,
                &format!("{} has no bimodal chain (a_W = {})", entry.name, entry.a_w),
            );
        }
        graph = match graph.extend_bimodal(entry.a_w as u64, &pairs) {
            Ok(g) => g,
            Err(e) => return fail(format, EXIT_INPUT, &e.to_string()),
        };
    }
    match format {
        Format::Dot => (EXIT_OK, graph.to_dot()),
        Format::Json => {
            let mut v = serde_json::to_value(&graph).expect("graphs serialize");
            v["schema"] = 1.into();
            (EXIT_OK, format!("{v}\n"))
        }
        Format::Text => {
            let mut out = format!("n: {}\n", graph.n);
            out.push_str(&format!("gram_determinant: {}\n", graph.gram_determinant()));
            out.push_str(&format!(
                "reduced_discriminant: {}\n",
                graph.reduced_discriminant()
            ));
            out.push_str(&format!("corank: {}\n", graph.corank()));
            out.push_str("edges:\n");
            for (i, j, w) in &graph.edges {
                let style = if *w == 1 { "" } else { "  (double)" };
                out.push_str(&format!("  {i} -- {j}{style}\n"));
            }
            (EXIT_OK, out)
        }
    }
}

fn run_verify(bound: u64, depth: Option<usize>, skip_dynkin: bool, format: Format) -> (i32, String) {
    if bound < 2 {
        return fail(format, EXIT_INPUT, "--bound must be at least 2");
    }
    let config = CheckConfig {
        depth,
        dynkin: !skip_dynkin,
    };
    let report = verify_all(bound, &config);
    let code = if report.is_clean() { EXIT_OK } else { EXIT_MISMATCH };
    match format {
        Format::Json => (code, report.render_json_lines()),
        _ => (code, report.render_text()),
    }
}

fn run_tables(which: &str, format: Format) -> (i32, String) {
    let kind: TableKind = match which.parse() {
        Ok(k) => k,
        Err(e) => return fail(format, EXIT_INPUT, &e),
    };
    let atlas = Atlas::builtin();
    let (table, diff) = match tables::table(kind, atlas).and_then(|t| {
        tables::diff(kind, atlas).map(|d| (t, d))
    }) {
        Ok(pair) => pair,
        Err(e) => return fail(format, EXIT_INPUT, &e.to_string()),
    };
    let code = if diff.is_empty() { EXIT_OK } else { EXIT_MISMATCH };
    match format {
        Format::Json => {
            let v = serde_json::json!({"schema": 1, "table": table, "diff": diff});
            (code, format!("{v}\n"))
        }
        _ => {
            let mut out = table.render_text();
            if !diff.is_empty() {
                out.push_str("diffs:\n");
                for line in &diff {
                    out.push_str(&format!("  {line}\n"));
                }
            }
            (code, out)
        }
    }
}

/// Parse and execute `argv` (including the program name); returns the
/// exit code and the full output.
pub fn run(argv: impl IntoIterator<Item = String>) -> (i32, String) {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version render through the error path but are not
            // usage errors.
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let mut text = e.to_string();
            if !text.ends_with('\n') {
                text.push('\n');
            }
            return (code, text);
        }
    };
    match cli.cmd {
        Cmd::Classify { input, format } => run_classify(&input, format),
        Cmd::Invariants { input, format } => run_invariants(&input, format),
        Cmd::Transpose { input, format } => run_transpose(&input, format),
        Cmd::Dual { input, format } => run_dual(&input, format),
        Cmd::Dynkin { gamma, extend, format } => {
            run_dynkin(gamma.as_deref(), extend.as_deref(), format)
        }
        Cmd::Verify { bound, depth, skip_dynkin, format } => {
            run_verify(bound, depth, skip_dynkin, format)
        }
        Cmd::Tables { which, format } => run_tables(&which, format),
    }
}
