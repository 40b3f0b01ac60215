//! Command-line front end: normalize expressions, compute PBW elements,
//! run verification suites, check the series identities, and specialize q.

mod expr;
mod jsonio;
mod latex;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::One;
use uaw::algebra::AlgebraElement;
use uaw::chebyshev::{check_series_identity, SeriesId};
use uaw::normalform::{normalize_pre, normalize_pre_expanding, to_main_basis};
use uaw::pbw::{DeltaMethod, PbwContext, RealFamily, RealMethod};

#[derive(Parser)]
#[command(name = "uaw", version, about = "Exact computation in the universal Askey-Wilson algebra over Q(q)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    Pre,
    Main,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Alpha0,
    Alpha1,
    Delta,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Automorphism/commutator recursion (for delta: the alpha1-flavoured one).
    Recursive,
    /// Delta only: the recursion written over the alpha0 family.
    RecursiveA0,
    /// Closed form.
    Closed,
    /// Real families only: the right-multiplied alternative closed form.
    Alt,
    /// Compute every applicable method and report whether they agree.
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse an expression (or JSON element) and print its normal form.
    Normalize {
        /// Expression such as "q^-2*B*A - A*B".
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
        /// Read the input from a file instead (JSON if it starts with `{`).
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Basis::Main)]
        basis: Basis,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compute the image of a q-Onsager PBW generator.
    Pbw {
        #[arg(value_enum)]
        family: Family,
        n: u32,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        /// One of: all, field, chebyshev, relations, automorphisms,
        /// closed-forms, delta-commute, tca.
        #[arg(default_value = "all")]
        suite: String,
        /// Cap the indices run by the suite (per-suite default otherwise).
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check the generating-function identities at a truncation order.
    Series {
        /// Identity name (gf, var-plus, var-minus, tbrack, sum-even,
        /// sum-ell, sum-ellsq, sum-binom) or "all".
        #[arg(default_value = "all")]
        id: String,
        #[arg(long, default_value_t = 20)]
        order: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Normalize an expression and specialize its coefficients at q = q0.
    EvalQ {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
        #[arg(long)]
        input: Option<PathBuf>,
        /// Rational specialization point, e.g. "3/2".
        #[arg(long)]
        q0: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// Exit code 2: usage, parse or input-data errors.
struct UsageError(String);

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), UsageError> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_input(
    expr: &Option<String>,
    input: &Option<PathBuf>,
) -> Result<AlgebraElement, UsageError> {
    let src = match (expr, input) {
        (Some(_), Some(_)) => {
            return Err(UsageError(
                "give either an expression or --input, not both".into(),
            ))
        }
        (Some(s), None) => s.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => return Err(UsageError("missing input expression".into())),
    };
    if src.trim_start().starts_with('{') {
        jsonio::parse(&src).map_err(|e| UsageError(e.to_string()))
    } else {
        expr::parse_element(&src).map_err(|e| UsageError(e.to_string()))
    }
}

fn render_element(el: &AlgebraElement, format: Format) -> String {
    match format {
        Format::Text => format!("{el}\n"),
        Format::Json => format!("{}\n", jsonio::render(el)),
        Format::Latex => format!("{}\n", latex::element_tex(el)),
    }
}

fn cmd_normalize(
    expr: Option<String>,
    input: Option<PathBuf>,
    basis: Basis,
    format: Format,
    output: Option<PathBuf>,
) -> Result<ExitCode, UsageError> {
    let el = read_input(&expr, &input)?;
    let normal = match basis {
        Basis::Pre => normalize_pre(&el).map_err(|e| UsageError(e.to_string()))?,
        Basis::Main => to_main_basis(&el).map_err(|e| UsageError(e.to_string()))?,
    };
    emit(&output, &render_element(&normal, format))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_pbw(
    family: Family,
    n: u32,
    method: Method,
    format: Format,
    output: Option<PathBuf>,
) -> Result<ExitCode, UsageError> {
    if family == Family::Delta && n == 0 {
        return Err(UsageError(
            "index out of range: the delta family starts at n = 1".into(),
        ));
    }
    let mut ctx = PbwContext::new();
    let values: Vec<AlgebraElement> = match family {
        Family::Alpha0 | Family::Alpha1 => {
            let fam = if family == Family::Alpha0 {
                RealFamily::Alpha0
            } else {
                RealFamily::Alpha1
            };
            match method {
                Method::Recursive => {
                    vec![ctx.pbw_real(fam, n, RealMethod::Recursive).value]
                }
                Method::Closed => vec![ctx.pbw_real(fam, n, RealMethod::Closed).value],
                Method::Alt => vec![uaw::pbw::pbw_real_alt(fam, n).value],
                Method::RecursiveA0 => {
                    return Err(UsageError(
                        "method recursive-a0 applies only to the delta family".into(),
                    ))
                }
                Method::All => vec![
                    ctx.pbw_real(fam, n, RealMethod::Closed).value,
                    ctx.pbw_real(fam, n, RealMethod::Recursive).value,
                    uaw::pbw::pbw_real_alt(fam, n).value,
                ],
            }
        }
        Family::Delta => match method {
            Method::Recursive => vec![ctx.pbw_delta(n, DeltaMethod::RecursiveA1).value],
            Method::RecursiveA0 => {
                vec![ctx.pbw_delta(n, DeltaMethod::RecursiveA0).value]
            }
            Method::Closed => vec![ctx.pbw_delta(n, DeltaMethod::Closed).value],
            Method::Alt => {
                return Err(UsageError(
                    "method alt applies only to the real families".into(),
                ))
            }
            Method::All => vec![
                ctx.pbw_delta(n, DeltaMethod::Closed).value,
                ctx.pbw_delta(n, DeltaMethod::RecursiveA1).value,
                ctx.pbw_delta(n, DeltaMethod::RecursiveA0).value,
            ],
        },
    };
    let mut text = render_element(&values[0], format);
    let mut code = ExitCode::SUCCESS;
    if method == Method::All {
        let agree = values.iter().all(|v| *v == values[0]);
        text.push_str(&format!(
            "methods agree: {}\n",
            if agree { "yes" } else { "no" }
        ));
        if !agree {
            code = ExitCode::FAILURE;
        }
    }
    emit(&output, &text)?;
    Ok(code)
}

fn cmd_verify(
    suite: String,
    max_n: Option<u32>,
    format: Format,
    output: Option<PathBuf>,
) -> Result<ExitCode, UsageError> {
    if let Some(n) = max_n {
        if n == 0 {
            return Err(UsageError("--max-n must be at least 1".into()));
        }
    }
    let report = verify::run_suite(&suite, max_n)
        .ok_or_else(|| UsageError(format!("unknown suite `{suite}`")))?;
    let text = match format {
        Format::Json => format!("{}\n", report.render_json()),
        _ => report.render_text(),
    };
    emit(&output, &text)?;
    Ok(if report.overall {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_series(
    id: String,
    order: u32,
    output: Option<PathBuf>,
) -> Result<ExitCode, UsageError> {
    let ids: Vec<SeriesId> = if id == "all" {
        SeriesId::ALL.to_vec()
    } else {
        vec![SeriesId::parse(&id)
            .ok_or_else(|| UsageError(format!("unknown series identity `{id}`")))?]
    };
    let mut text = String::new();
    let mut all_pass = true;
    for s in ids {
        let pass = check_series_identity(s, order);
        all_pass &= pass;
        text.push_str(&format!(
            "{}  {} (order {order})\n",
            if pass { "PASS" } else { "FAIL" },
            s.name()
        ));
    }
    emit(&output, &text)?;
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_eval_q(
    expr: Option<String>,
    input: Option<PathBuf>,
    q0: String,
    output: Option<PathBuf>,
) -> Result<ExitCode, UsageError> {
    let el = read_input(&expr, &input)?;
    let q0 = expr::parse_rational(&q0).map_err(UsageError)?;
    let normal = normalize_pre_expanding(&el);
    let mut text = String::new();
    let mut first = true;
    for ((w, cm), c) in normal.terms_desc() {
        let v = c
            .specialize(&q0)
            .map_err(|e| UsageError(e.to_string()))?;
        let neg = v < num_rational::BigRational::from_integer(0.into());
        let mag = if neg { -v.clone() } else { v.clone() };
        if first {
            if neg {
                text.push('-');
            }
            first = false;
        } else {
            text.push_str(if neg { " - " } else { " + " });
        }
        let trivial = w.is_empty() && cm.is_one();
        let mut mono = String::new();
        if !trivial {
            let dummy = AlgebraElement::term(w.clone(), *cm, uaw::qfield::RatFuncQ::one());
            mono = format!("{dummy}");
        }
        if mag.is_one() && !trivial {
            text.push_str(&mono);
        } else if trivial {
            text.push_str(&mag.to_string());
        } else {
            text.push_str(&format!("{mag}*{mono}"));
        }
    }
    if first {
        text.push('0');
    }
    text.push('\n');
    emit(&output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Normalize {
            expr,
            input,
            basis,
            format,
            output,
        } => cmd_normalize(expr, input, basis, format, output),
        Cmd::Pbw {
            family,
            n,
            method,
            format,
            output,
        } => cmd_pbw(family, n, method, format, output),
        Cmd::Verify {
            suite,
            max_n,
            format,
            output,
        } => cmd_verify(suite, max_n, format, output),
        Cmd::Series { id, order, output } => cmd_series(id, order, output),
        Cmd::EvalQ {
            expr,
            input,
            q0,
            output,
        } => cmd_eval_q(expr, input, q0, output),
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
