//! Command-line front end. [`run_command`] is pure: it takes argv and
//! returns the exit code with both output streams, so tests drive it
//! without spawning a process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::brill_noether::{petri_chain, rho, series_count, serre_dual, BNParams};
use crate::certificate::{d15_2_class, verify_certificate, verify_general_type, BignessCertificate};
use crate::error::{Error, Result};
use crate::hilbert::{
    adjunction_curve, ideal_section_count, quotient_section_count, surface_invariants,
    GradedFreeResolution,
};
use crate::picard::{boundary_fiber_census, canonical_class_prym, degree_of_pi, slope_inequalities, PrymBasis, PrymDivisorClass};
use crate::porteous::{
    degeneration_correction, virtual_divisor_class, CorrectionStage, FactoredClass,
    SigmaPushforwardTable,
};
use crate::report::paper_report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "prymcalc",
    version,
    about = "Exact divisor-class calculator for the moduli space of Prym curves"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Brill–Noether number ρ(g, r, d) = g - (r+1)(g-d+r).
    #[command(allow_negative_numbers = true)]
    Rho { g: i64, r: i64, d: i64 },
    /// Number of g^r_d on a general curve when ρ = 0 (Castelnuovo count).
    #[command(allow_negative_numbers = true)]
    Count { g: i64, r: i64, d: i64 },
    /// Serre-dual series g^{g-d+r-1}_{2g-2-d}.
    #[command(allow_negative_numbers = true)]
    Dual { g: i64, r: i64, d: i64 },
    /// Dimension chain for a genus (k-1)(r+1) curve with a degree-k pencil.
    Chain { k: i64, r: i64 },
    /// Prym structures of each type over a one-nodal irreducible curve.
    Census { g: u32 },
    /// Canonical class of the Prym moduli space with its slope checks.
    Canonical { g: u32 },
    /// Virtual class of the genus-15 degeneracy divisor via Porteous.
    ClassD15 {
        /// Subtract this multiple of the δ0'' excess component.
        #[arg(long, value_name = "N")]
        correct_d0pp_order: Option<i64>,
        /// Apply the correction after pushing forward instead of before.
        #[arg(long, requires = "correct_d0pp_order")]
        downstairs: bool,
    },
    /// Invariants of the quotient of a graded free resolution.
    Hilbert {
        /// A resolution JSON file, or builtin:pfaffian_14_6.
        source: String,
    },
    /// Genus and degree of a hyperplane section of a canonical surface.
    Adjunction {
        /// Self-intersection K^2 of the surface.
        k_squared: i64,
    },
    /// Bigness certificate for the canonical class in genus 15.
    Certificate {
        /// First effective class (default: the Koszul divisor class).
        #[arg(long, value_name = "class.json")]
        d1: Option<String>,
        /// Second effective class (default: the degeneracy divisor class).
        #[arg(long, value_name = "class.json")]
        d2: Option<String>,
        /// Re-check a stored certificate instead of producing one.
        #[arg(long, value_name = "cert.json", conflicts_with_all = ["d1", "d2"])]
        verify: Option<String>,
    },
    /// Recompute every headline value and compare with the reference table.
    PaperReport,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        Self::with_code(EXIT_OK, stdout)
    }

    fn with_code(code: i32, mut stdout: String) -> Self {
        if !stdout.ends_with('\n') {
            stdout.push('\n');
        }
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }
}

pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                CommandOutput::ok(text)
            } else {
                CommandOutput {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(e) => CommandOutput {
            code: EXIT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)?)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &str) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
    Ok(serde_json::from_str(&text)?)
}

fn dispatch(cli: &Cli) -> Result<CommandOutput> {
    let json = cli.json;
    let text = match &cli.command {
        Command::Rho { g, r, d } => {
            let p = BNParams::new(*g, *r, *d)?;
            let v = rho(&p);
            if json {
                to_json(&json!({"g": g, "r": r, "d": d, "rho": v}))?
            } else {
                v.to_string()
            }
        }
        Command::Count { g, r, d } => {
            let n = series_count(&BNParams::new(*g, *r, *d)?)?;
            if json {
                to_json(&json!({"g": g, "r": r, "d": d, "count": n.to_string()}))?
            } else {
                n.to_string()
            }
        }
        Command::Dual { g, r, d } => {
            let q = serre_dual(&BNParams::new(*g, *r, *d)?)?;
            if json {
                to_json(&q)?
            } else {
                format!("{} {} {}", q.g, q.r, q.d)
            }
        }
        Command::Chain { k, r } => {
            let rep = petri_chain(*k, *r)?;
            if json {
                to_json(&rep)?
            } else {
                let chain: Vec<String> = rep.chain.iter().map(|(_, h)| h.to_string()).collect();
                let mut s = format!("g = {}\nchain: {}\n", rep.g_check, chain.join(", "));
                for st in &rep.steps {
                    writeln!(
                        s,
                        "j = {}: {} - {} = {} ({})",
                        st.j,
                        st.middle,
                        st.kernel,
                        st.target,
                        if st.balanced { "balanced" } else { "unbalanced" }
                    )
                    .expect("write to string");
                }
                s
            }
        }
        Command::Census { g } => {
            let c = boundary_fiber_census(*g)?;
            let deg = degree_of_pi(*g);
            if json {
                let mut v = serde_json::to_value(&c)?;
                v["distinct_total"] = Value::String(c.distinct_total().to_string());
                v["sheet_total"] = Value::String(c.sheet_total().to_string());
                v["degree"] = Value::String(deg.to_string());
                to_json(&v)?
            } else {
                format!(
                    "δ0': {}\nδ0'': {}\nδ0ram: {}\ndistinct: {}\nsheets: {}\ndegree: {}",
                    c.count_d0p,
                    c.count_d0pp,
                    c.count_d0ram,
                    c.distinct_total(),
                    c.sheet_total(),
                    deg
                )
            }
        }
        Command::Canonical { g } => {
            let k = canonical_class_prym(*g)?;
            if json {
                to_json(&k)?
            } else {
                k.to_string()
            }
        }
        Command::ClassD15 {
            correct_d0pp_order,
            downstairs,
        } => class_d15(*correct_d0pp_order, *downstairs, json)?,
        Command::Hilbert { source } => hilbert(source, json)?,
        Command::Adjunction { k_squared } => {
            let c = adjunction_curve(*k_squared)?;
            if json {
                to_json(&c)?
            } else {
                format!("genus {}, degree {}", c.curve_genus, c.embedding_degree)
            }
        }
        Command::Certificate { d1, d2, verify } => return certificate(d1, d2, verify, json),
        Command::PaperReport => {
            let rep = paper_report();
            let code = if rep.overall { EXIT_OK } else { EXIT_MISMATCH };
            let body = if json {
                to_json(&rep)?
            } else {
                let mut s = String::new();
                for e in &rep.entries {
                    let mark = if e.matches { "ok  " } else { "FAIL" };
                    writeln!(s, "{mark} {} = {} [{}]", e.name, e.computed, e.anchor).expect("write to string");
                    if !e.matches {
                        writeln!(s, "     expected {}", e.expected).expect("write to string");
                    }
                }
                write!(s, "overall: {}", rep.overall).expect("write to string");
                s
            };
            return Ok(CommandOutput::with_code(code, body));
        }
    };
    Ok(CommandOutput::ok(text))
}

fn class_d15(order: Option<i64>, downstairs: bool, json: bool) -> Result<String> {
    let mut v = virtual_divisor_class()?;
    if let Some(n) = order {
        let stage = if downstairs {
            CorrectionStage::AfterPushforward
        } else {
            CorrectionStage::BeforePushforward
        };
        let table = SigmaPushforwardTable::genus15()?;
        v = degeneration_correction(&v, PrymBasis::D0DoublePrime, n, stage, &table)?;
    }
    let factored = FactoredClass::from_virtual(&v)?;
    if !json {
        return Ok(format!("expanded: {v}\nfactored: {factored}"));
    }
    to_json(&json!({
        "expanded": v.numeric_part,
        "factored": {
            "scale": factored.scale,
            "lambda": factored.lambda,
            "d0p": factored.d0p,
            "d0pp": factored.d0pp,
            "d0ram": factored.d0ram,
        },
        "d_term": v.d_multiple,
    }))
}

fn hilbert(source: &str, json: bool) -> Result<String> {
    let res = match source.strip_prefix("builtin:") {
        Some(name) => GradedFreeResolution::builtin(name)?,
        None => read_json(source)?,
    };
    let inv = surface_invariants(&res)?;
    let h0_ideal_2 = ideal_section_count(&res, 2)?;
    let h0_quotient_2 = quotient_section_count(&res, 2)?;
    let opt = |x: Option<i64>| x.map_or_else(|| "unknown".to_string(), |v| v.to_string());
    if json {
        let mut v = serde_json::to_value(&inv)?;
        v["h0_ideal_2"] = Value::String(h0_ideal_2.to_string());
        v["h0_quotient_2"] = Value::String(h0_quotient_2.to_string());
        return to_json(&v);
    }
    Ok(format!(
        "P(t) = {}\ndegree: {}\nχ(O): {}\np_g: {}\nq: {}\nK^2: {}\nh0(I(2)): {}\nh0(O(2)): {}",
        inv.hilbert_poly,
        inv.degree,
        inv.chi_o,
        opt(inv.p_g),
        opt(inv.q),
        opt(inv.k_squared),
        h0_ideal_2,
        h0_quotient_2
    ))
}

fn certificate(
    d1: &Option<String>,
    d2: &Option<String>,
    verify: &Option<String>,
    json: bool,
) -> Result<CommandOutput> {
    if let Some(path) = verify {
        let cert: BignessCertificate = read_json(path)?;
        let outcome = verify_certificate(&cert);
        let code = if outcome.accepted() { EXIT_OK } else { EXIT_ERROR };
        let body = if json {
            to_json(&outcome)?
        } else {
            let mut s = format!("consistent: {}\nverdict: {}", outcome.consistent, outcome.verdict);
            for p in &outcome.problems {
                write!(s, "\nproblem: {p}").expect("write to string");
            }
            s
        };
        return Ok(CommandOutput::with_code(code, body));
    }
    let d1: PrymDivisorClass = match d1 {
        Some(p) => read_json(p)?,
        None => d15_2_class(),
    };
    let d2: PrymDivisorClass = match d2 {
        Some(p) => read_json(p)?,
        None => virtual_divisor_class()?.numeric_part,
    };
    let cert = verify_general_type(d1.genus(), &d1, &d2)?;
    let body = if json {
        to_json(&cert)?
    } else {
        let mut s = format!(
            "β = {}\nγ = {}\nε = {}\n13 - ε = {}\nverdict: {}",
            cert.beta, cert.gamma, cert.epsilon, cert.residual_lambda, cert.verdict
        );
        for (label, d) in [("d1", &cert.d1), ("d2", &cert.d2)] {
            for c in slope_inequalities(d).checks {
                if let Some(r) = c.ratio {
                    write!(s, "\n{label}: λ/{} = {r}", c.coefficient).expect("write to string");
                }
            }
        }
        for r in &cert.reasons {
            write!(s, "\nreason: {r}").expect("write to string");
        }
        s
    };
    Ok(CommandOutput::ok(body))
}
