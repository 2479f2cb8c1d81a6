//! `mayachain`: enumerate cyclic Maya diagrams, build and verify rational
//! solutions of odd dressing chains and A_2n systems, and plot the zeros of
//! the special polynomial families.

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use mayachain::atlas::{family_polynomial, find_roots, render, RootFormat, WronskianFamilySpec};
use mayachain::chain::{chain_solution, verify_chain, ChainSolution};
use mayachain::cyclic::{
    admissible_shifts, build_cycle, enumerate_signatures, normalized_blocks, MayaCycle, Signature,
};
use mayachain::exact::{DetMethod, Poly, PolyRing, RatFn, Rational};
use mayachain::maya::xi;
use mayachain::painleve::{to_painleve, verify_painleve, PainleveSolution};
use mayachain::pseudo_wronskian::{
    hermite_label, normalization_constant, normalized_pseudo_wronskian, pseudo_wronskian_with,
};
use mayachain::report::Report;

#[derive(Parser)]
#[command(name = "mayachain", version, about = "Cyclic Maya diagrams and rational Painlevé solutions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Auto,
    Bareiss,
    Interpolation,
}

impl From<Method> for DetMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Auto => DetMethod::Auto,
            Method::Bareiss => DetMethod::Bareiss,
            Method::Interpolation => DetMethod::Interpolation,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List admissible shifts and signatures for an odd period.
    Enumerate {
        #[arg(long)]
        p: usize,
        /// Restrict to one shift.
        #[arg(long)]
        k: Option<usize>,
        /// Also count normalized diagrams with block coordinates ≤ BOUND.
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Build a cycle, its chain solution and the A_2n tuple as JSON.
    Solve {
        /// Signature, e.g. `1,1,3`.
        #[arg(long)]
        sig: String,
        /// The p−1 normalized parameters, e.g. `2,3,1,1`.
        #[arg(long)]
        n: String,
        /// Full 0-based permutation, e.g. `3,4,2,1,0`.
        #[arg(long)]
        perm: String,
        /// Run the symbolic checkers; exit 1 on any non-zero residual.
        #[arg(long)]
        verify: bool,
        /// Accept permutations that do not end in 0.
        #[arg(long)]
        allow_any_perm: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pseudo-Wronskian of a diagram given by block coordinates, or of a
    /// family member given by signature and parameters.
    Wronskian {
        #[arg(long, conflicts_with_all = ["sig", "n"])]
        beta: Option<String>,
        #[arg(long, requires = "n")]
        sig: Option<String>,
        #[arg(long, requires = "sig")]
        n: Option<String>,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
    },
    /// Zeros of a family polynomial as CSV, JSON or SVG.
    Roots {
        #[arg(long)]
        sig: String,
        #[arg(long)]
        n: String,
        #[arg(long, default_value_t = 128)]
        precision: usize,
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a stored `solve` output or a bare A_2n solution.
    Verify { input: PathBuf },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Verification(m) => f.write_str(m),
        }
    }
}

impl From<mayachain::Error> for Failure {
    fn from(e: mayachain::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(format!("{e:#}"))
    }
}

type CliResult<T> = Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> CliResult<Vec<T>> {
    s.split(',')
        .map(|x| x.trim())
        .filter(|x| !x.is_empty())
        .map(|x| x.parse().map_err(|_| usage(format!("invalid {what} entry {x:?}"))))
        .collect()
}

fn parse_signature(s: &str) -> CliResult<Signature> {
    Ok(Signature::new(parse_list(s, "signature")?)?)
}

fn parse_n4(s: &str) -> CliResult<[u64; 4]> {
    let v: Vec<u64> = parse_list(s, "parameter")?;
    v.try_into().map_err(|v: Vec<u64>| usage(format!("expected 4 parameters, got {}", v.len())))
}

fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i + 1) as u128;
    }
    Some(acc)
}

/// Normalized k-block coordinates with entries in `[0, bound]`: the first
/// block starts at 0, every block is strictly increasing.
fn count_normalized(sig: &Signature, bound: u64) -> Option<u128> {
    let parts = sig.parts();
    let mut total = binomial(bound, parts[0] as u64 - 1)?;
    for &len in &parts[1..] {
        total = total.checked_mul(binomial(bound + 1, len as u64)?)?;
    }
    Some(total)
}

fn cmd_enumerate(p: usize, k: Option<usize>, bound: Option<u64>) -> CliResult<()> {
    let shifts = admissible_shifts(p)?;
    let chosen: Vec<usize> = match k {
        Some(k) if shifts.contains(&k) => vec![k],
        Some(k) => return Err(usage(format!("k = {k} is not an admissible shift for p = {p}"))),
        None => shifts.clone(),
    };
    let list: Vec<String> = shifts.iter().map(usize::to_string).collect();
    println!("p = {p}: admissible shifts k ∈ {{{}}}", list.join(","));
    for k in chosen {
        let sigs = enumerate_signatures(p, k)?;
        let names: Vec<String> = sigs.iter().map(ToString::to_string).collect();
        println!("k = {k}: {}", names.join(" "));
        if let Some(b) = bound {
            for s in &sigs {
                let count = count_normalized(s, b)
                    .map_or_else(|| "overflow".to_string(), |c| c.to_string());
                println!("  {s}: {count} normalized diagrams with coordinates ≤ {b}");
            }
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct RatFnJson {
    num: Vec<String>,
    den: Vec<String>,
}

impl RatFnJson {
    fn from_ratfn(f: &RatFn) -> Self {
        RatFnJson { num: f.num().coefficient_strings(), den: f.den().coefficient_strings() }
    }

    fn to_ratfn(&self) -> anyhow::Result<RatFn> {
        let parse = |v: &[String]| -> anyhow::Result<Poly> {
            let coeffs = v
                .iter()
                .map(|s| s.parse::<Rational>().with_context(|| format!("bad coefficient {s:?}")))
                .collect::<anyhow::Result<Vec<_>>>()?;
            Ok(Poly::from_coeffs(&coeffs))
        };
        Ok(RatFn::new(parse(&self.num)?, parse(&self.den)?)?)
    }
}

#[derive(Serialize, Deserialize)]
struct ChainJson {
    w: Vec<RatFnJson>,
    a: Vec<String>,
    delta: String,
    hermite: Vec<String>,
    tau: Vec<Vec<String>>,
}

impl ChainJson {
    fn new(sol: &ChainSolution) -> Self {
        ChainJson {
            w: sol.w.iter().map(RatFnJson::from_ratfn).collect(),
            a: sol.a.iter().map(ToString::to_string).collect(),
            delta: sol.delta.to_string(),
            hermite: sol.hermite_labels(),
            tau: sol.taus.iter().map(|t| t.coefficient_strings()).collect(),
        }
    }
}

fn verification_json(chain: &Report, pain: &Report) -> Value {
    json!({ "chain": chain, "painleve": pain, "passed": chain.all_passed() && pain.all_passed() })
}

fn failure_names(reports: &[&Report]) -> Vec<String> {
    reports.iter().flat_map(|r| r.failures().map(|c| c.name.clone())).collect()
}

fn write_or_print(text: &str, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(Failure::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_solve(
    sig: &str,
    n: &str,
    perm: &str,
    verify: bool,
    allow_any_perm: bool,
    out: Option<&Path>,
) -> CliResult<()> {
    let signature = parse_signature(sig)?;
    let n: Vec<u64> = parse_list(n, "parameter")?;
    let perm: Vec<usize> = parse_list(perm, "permutation")?;
    if !allow_any_perm && perm.last() != Some(&0) {
        return Err(usage("normalized permutations end in 0; pass --allow-any-perm to override"));
    }
    let blocks = normalized_blocks(&signature, &n)?;
    let cycle = build_cycle(&blocks, &perm)?;
    let sol = chain_solution(&cycle)?;
    let ps = to_painleve(&sol)?;
    let mut doc = json!({
        "signature": signature.to_string(),
        "n": n,
        "perm": perm,
        "cycle": cycle,
        "chain": ChainJson::new(&sol),
        "painleve": ps,
    });
    let mut failed = Vec::new();
    if verify {
        let chain = verify_chain(&sol);
        let pain = verify_painleve(&ps);
        failed = failure_names(&[&chain, &pain]);
        doc["verification"] = verification_json(&chain, &pain);
    }
    let text = serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
    write_or_print(&text, out)?;
    if let Some(path) = out {
        println!("wrote {}", path.display());
    }
    if verify {
        if failed.is_empty() {
            eprintln!("verification passed");
        } else {
            return Err(Failure::Verification(format!("non-zero residuals: {}", failed.join(", "))));
        }
    }
    Ok(())
}

fn cmd_wronskian(beta: Option<&str>, sig: Option<&str>, n: Option<&str>, method: Method) -> CliResult<()> {
    let m = match (beta, sig, n) {
        (Some(b), _, _) => xi(&parse_list::<i64>(b, "block coordinate")?)?,
        (None, Some(s), Some(n)) => {
            let spec = WronskianFamilySpec::new(parse_signature(s)?, parse_n4(n)?)?;
            mayachain::cyclic::a4_blocks(&spec.signature, &spec.n)?.to_diagram()
        }
        _ => return Err(usage("pass --beta, or --sig together with --n")),
    };
    let pw = pseudo_wronskian_with(&m, method.into());
    println!("maya: {m}");
    println!("frobenius: {}", m.frobenius());
    println!("label: {}", hermite_label(&m));
    println!("size: {} ({} θ rows, {} Hermite rows)", pw.r + pw.q, pw.r, pw.q);
    println!("degree: {}", pw.poly.degree().map_or_else(|| "-".into(), |d| d.to_string()));
    println!("H: {}", pw.poly);
    println!("normalization: {}", normalization_constant(&m));
    println!("normalized: {}", normalized_pseudo_wronskian(&m));
    Ok(())
}

fn cmd_roots(sig: &str, n: &str, precision: usize, format: &str, out: Option<&Path>) -> CliResult<()> {
    let format: RootFormat = format.parse()?;
    let spec = WronskianFamilySpec::new(parse_signature(sig)?, parse_n4(n)?)?;
    let p = family_polynomial(&spec)?;
    let rs = find_roots(&p, precision)?;
    let text = render(&rs, format);
    write_or_print(&text, out)?;
    eprintln!(
        "{}: degree {}, origin multiplicity {}, residual bound {:e}",
        spec.label(),
        rs.len(),
        rs.origin_multiplicity,
        rs.residual_bound
    );
    Ok(())
}

/// Re-checks stored data. A `solve` document has its `w`, `a` and A_2n
/// tuple checked as stored, against potentials rebuilt from the cycle.
fn cmd_verify(input: &Path) -> CliResult<()> {
    let text = std::fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| usage(format!("invalid JSON: {e}")))?;
    let mut reports = Vec::new();
    if let Some(cycle) = doc.get("cycle") {
        let cycle: MayaCycle =
            serde_json::from_value(cycle.clone()).map_err(|e| usage(format!("invalid cycle: {e}")))?;
        let mut sol = chain_solution(&cycle)?;
        if let Some(chain) = doc.get("chain") {
            let stored: ChainJson =
                serde_json::from_value(chain.clone()).map_err(|e| usage(format!("invalid chain: {e}")))?;
            sol.w = stored.w.iter().map(RatFnJson::to_ratfn).collect::<anyhow::Result<Vec<_>>>()?;
            sol.a = stored
                .a
                .iter()
                .map(|s| s.parse::<Rational>().map_err(|_| usage(format!("bad weight {s:?}"))))
                .collect::<CliResult<Vec<_>>>()?;
            if sol.w.len() != sol.a.len() || sol.w.len() != cycle.period() {
                return Err(usage("stored chain does not match the cycle period"));
            }
        }
        reports.push(("chain", verify_chain(&sol)));
    }
    let pain = doc.get("painleve").unwrap_or(&doc);
    if pain.get("f").is_some() {
        let ps: PainleveSolution = serde_json::from_value(pain.clone())
            .map_err(|e| usage(format!("invalid A_2n solution: {e}")))?;
        reports.push(("painleve", verify_painleve(&ps)));
    }
    if reports.is_empty() {
        return Err(usage("input holds neither a cycle nor an A_2n solution"));
    }
    let mut failed = Vec::new();
    for (name, r) in &reports {
        let bad = r.failures().count();
        println!("{name}: {} checks, {bad} failed", r.checks.len());
        failed.extend(r.failures().map(|c| format!("{name}:{}", c.name)));
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("non-zero residuals: {}", failed.join(", "))))
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Enumerate { p, k, bound } => cmd_enumerate(p, k, bound),
        Command::Solve { sig, n, perm, verify, allow_any_perm, out } => {
            cmd_solve(&sig, &n, &perm, verify, allow_any_perm, out.as_deref())
        }
        Command::Wronskian { beta, sig, n, method } => {
            cmd_wronskian(beta.as_deref(), sig.as_deref(), n.as_deref(), method)
        }
        Command::Roots { sig, n, precision, format, out } => cmd_roots(&sig, &n, precision, &format, out.as_deref()),
        Command::Verify { input } => cmd_verify(&input),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
