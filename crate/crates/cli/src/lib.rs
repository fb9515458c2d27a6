//! Argument parsing, report assembly and rendering for the `dyckcells` binary.
//!
//! Every command produces a [`Report`]. JSON output has a fixed shape:
//! `{"command", "inputs", "outputs", "checks": [{"name", "status", "witness"}]}`,
//! with object keys sorted and polynomials written as ascending coefficient
//! arrays.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use dyckcells::chromatic::{self, Graph};
use dyckcells::flags::count_points;
use dyckcells::hessenberg::enumerate_hessenberg;
use dyckcells::orientations::{
    ascent_polynomial, descent_polynomial, enumerate_acyclic, linear_extensions,
    min_linear_extension, orientation_from_permutation,
};
use dyckcells::partition::partitions;
use dyckcells::symfunc::{self, modified_hall_littlewood, Basis};
use dyckcells::tymoczko::{
    enumerate_fillings, h_inversions, poincare_polynomial, poincare_product, Filling,
};
use dyckcells::{HessenbergFunction, Partition, Poly, SymF};

/// Largest `n` accepted by `verify --level full`.
pub const MAX_FULL_N: usize = 6;
/// Largest `n` accepted by `verify --level flags`.
pub const MAX_FLAGS_N: usize = 4;

#[derive(Parser, Debug)]
#[command(
    name = "dyckcells",
    version,
    about = "Chromatic quasisymmetric functions, Tymoczko cells and acyclic orientations of Dyck graphs"
)]
pub struct Cli {
    /// Print machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    pub json: bool,
    /// Name of the grading variable in human-readable output.
    #[arg(long, global = true, value_enum, default_value_t = Var::T)]
    pub var: Var,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Var {
    T,
    Q,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::Q => "q",
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute one quantity for a Hessenberg function.
    #[command(subcommand)]
    Compute(Compute),
    /// Cross-check all identities for every Hessenberg function of the given sizes.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
pub enum Compute {
    /// Chromatic quasisymmetric function X_G of the Dyck graph of h.
    Chromatic {
        #[arg(long)]
        h: HessenbergFunction,
        #[arg(long, value_enum, default_value_t = ChromaticBasis::M)]
        basis: ChromaticBasis,
    },
    /// Tymoczko cells of the nilpotent Hessenberg variety (h, mu) and their Poincaré polynomial.
    Poincare {
        #[arg(long)]
        h: HessenbergFunction,
        #[arg(long)]
        mu: Partition,
    },
    /// The product of [h(i) - i + 1]_t.
    Product {
        #[arg(long)]
        h: HessenbergFunction,
    },
    /// Acyclic orientations with their statistics.
    Orientations {
        #[arg(long)]
        h: HessenbergFunction,
    },
    /// Orientation, minimal linear extension and cell dimension, row by row.
    Bijection {
        #[arg(long)]
        h: HessenbergFunction,
    },
    /// Scalar product of omega X_G with the modified Hall-Littlewood function of mu.
    Hall {
        #[arg(long)]
        h: HessenbergFunction,
        #[arg(long)]
        mu: Partition,
    },
    /// Number of F_p-points of the nilpotent Hessenberg variety (h, mu).
    Flags {
        #[arg(long)]
        h: HessenbergFunction,
        #[arg(long)]
        mu: Partition,
        #[arg(long, default_value_t = 2)]
        prime: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ChromaticBasis {
    M,
    E,
    H,
    S,
    /// Monomial quasisymmetric expansion, before symmetrization.
    Qsym,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// A size such as `4`, or an inclusive range such as `2..5`.
    #[arg(long)]
    pub n: SizeRange,
    #[arg(long, value_enum, default_value_t = Level::Full)]
    pub level: Level,
    /// Primes for the flag-count check; repeat or separate with commas.
    #[arg(long = "prime", value_delimiter = ',', default_value = "2")]
    pub primes: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    /// Cell, chromatic, orientation and bijection identities.
    Full,
    /// Everything in `full` plus finite-field point counts.
    Flags,
}

/// Inclusive range of sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeRange {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for SizeRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad size `{x}`"));
        let (lo, hi) = if let Some((a, b)) = s.split_once("..=") {
            (parse(a)?, parse(b)?)
        } else if let Some((a, b)) = s.split_once("..") {
            (parse(a)?, parse(b)?)
        } else if let Some((a, b)) = s.split_once('-') {
            (parse(a)?, parse(b)?)
        } else {
            let n = parse(s)?;
            (n, n)
        };
        if lo == 0 || lo > hi {
            return Err(format!("empty or invalid size range `{s}`"));
        }
        Ok(SizeRange { lo, hi })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    /// Data reproducing a failure; `null` on success.
    pub witness: Value,
}

impl CheckResult {
    fn from_outcome(name: String, outcome: Result<(), Value>) -> Self {
        match outcome {
            Ok(()) => CheckResult { name, status: Status::Pass, witness: Value::Null },
            Err(witness) => CheckResult { name, status: Status::Fail, witness },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub checks: Vec<CheckResult>,
    /// Human-readable body; not part of the JSON form.
    #[serde(skip)]
    pub text: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for line in &self.text {
            let _ = writeln!(out, "{line}");
        }
        if !self.checks.is_empty() {
            for c in &self.checks {
                let tag = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                };
                let _ = writeln!(out, "{tag}  {}", c.name);
                if c.status == Status::Fail {
                    let _ = writeln!(out, "      witness: {}", c.witness);
                }
            }
            let failed = self.checks.iter().filter(|c| c.status == Status::Fail).count();
            let _ = writeln!(out, "{} checks, {} failed", self.checks.len(), failed);
        }
        out
    }
}

pub fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Compute(c) => compute(c, cli.var),
        Command::Verify(v) => verify(v, cli.var),
    }
}

fn perm_string(w: &[usize]) -> String {
    if w.iter().all(|&x| x <= 9) {
        w.iter().map(|x| x.to_string()).collect()
    } else {
        w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn check_weight(h: &HessenbergFunction, mu: &Partition) -> Result<()> {
    if mu.weight() != h.n() {
        bail!("partition ({mu}) has weight {}, but h has length {}", mu.weight(), h.n());
    }
    Ok(())
}

fn omega_chromatic(h: &HessenbergFunction) -> Result<SymF> {
    let x = chromatic::chromatic_sym(&Graph::from(&h.to_graph()))?;
    Ok(symfunc::omega(&x))
}

pub fn compute(cmd: &Compute, var: Var) -> Result<Report> {
    let v = var.name();
    let report = match cmd {
        Compute::Chromatic { h, basis } => {
            let q = chromatic::chromatic_qsym(&Graph::from(&h.to_graph()));
            let (outputs, text) = match basis {
                ChromaticBasis::Qsym => {
                    let terms: Vec<Value> = q
                        .terms()
                        .iter()
                        .map(|(a, c)| json!({ "composition": a, "coeffs": c }))
                        .collect();
                    let text = q
                        .terms()
                        .iter()
                        .map(|(a, c)| format!("M{}: {}", perm_string(a), c.display_with(v)))
                        .collect();
                    (json!({ "degree": q.degree(), "terms": terms }), text)
                }
                b => {
                    let target = match b {
                        ChromaticBasis::M => Basis::M,
                        ChromaticBasis::E => Basis::E,
                        ChromaticBasis::H => Basis::H,
                        _ => Basis::S,
                    };
                    let x = symfunc::convert(&symfunc::qsym_to_sym(&q)?, target);
                    let text = vec![format!("X_G = {}", x.display_with(v))];
                    (json!({ "x": x }), text)
                }
            };
            let basis_name = format!("{basis:?}").to_lowercase();
            Report {
                command: "compute chromatic".into(),
                inputs: json!({ "h": h.values(), "basis": basis_name }),
                outputs,
                checks: vec![],
                text,
            }
        }
        Compute::Poincare { h, mu } => {
            check_weight(h, mu)?;
            let fillings = enumerate_fillings(h, mu)?;
            let d = poincare_polynomial(h, mu)?;
            let rows: Vec<Value> = fillings
                .iter()
                .map(|f| json!({ "filling": f.to_string(), "dimension": h_inversions(f, h) }))
                .collect();
            let mut text: Vec<String> = fillings
                .iter()
                .map(|f| format!("{:<16} {}", f.to_string(), h_inversions(f, h)))
                .collect();
            text.push(format!("d_({})({v}) = {}", mu, d.display_with(v)));
            Report {
                command: "compute poincare".into(),
                inputs: json!({ "h": h.values(), "mu": mu.parts() }),
                outputs: json!({ "cells": rows, "poincare": d }),
                checks: vec![],
                text,
            }
        }
        Compute::Product { h } => {
            let p = poincare_product(h);
            Report {
                command: "compute product".into(),
                inputs: json!({ "h": h.values() }),
                text: vec![format!("{}", p.display_with(v))],
                outputs: json!({ "product": p }),
                checks: vec![],
            }
        }
        Compute::Orientations { h } => {
            let g = h.to_graph();
            let mut rows = Vec::new();
            let mut text = vec![format!("{:<12} {:>4} {:>5} {:>5}  min", "bits", "asc", "desc", "ext")];
            for o in enumerate_acyclic(&g) {
                let ext = linear_extensions(&o).len();
                let min = min_linear_extension(&o);
                text.push(format!(
                    "{:<12} {:>4} {:>5} {:>5}  {}",
                    o.to_bits(),
                    o.asc_arcs(),
                    o.desc_arcs(),
                    ext,
                    perm_string(&min)
                ));
                let arcs: Vec<[usize; 2]> = o.arcs().map(|(a, b)| [a, b]).collect();
                rows.push(json!({
                    "bits": o.to_bits(),
                    "arcs": arcs,
                    "ascending": o.asc_arcs(),
                    "descending": o.desc_arcs(),
                    "linear_extensions": ext,
                    "minimum": min,
                }));
            }
            let asc = ascent_polynomial(&g);
            let desc = descent_polynomial(&g);
            text.push(format!("ascents:  {}", asc.display_with(v)));
            text.push(format!("descents: {}", desc.display_with(v)));
            Report {
                command: "compute orientations".into(),
                inputs: json!({ "h": h.values(), "edges": g.edges() }),
                outputs: json!({ "orientations": rows, "ascent_polynomial": asc, "descent_polynomial": desc }),
                checks: vec![],
                text,
            }
        }
        Compute::Bijection { h } => {
            let g = h.to_graph();
            let mut rows = Vec::new();
            let mut dims = Vec::new();
            let mut text = vec![format!("{:<12} {:<10} dim", "orientation", "sigma")];
            for o in enumerate_acyclic(&g) {
                let sigma = min_linear_extension(&o);
                let dim = h_inversions(&Filling::row(&sigma)?, h);
                text.push(format!("{:<12} {:<10} {}", o.to_bits(), perm_string(&sigma), dim));
                dims.push(dim);
                rows.push(json!({ "orientation": o.to_bits(), "sigma": sigma, "dimension": dim }));
            }
            dims.sort_unstable();
            Report {
                command: "compute bijection".into(),
                inputs: json!({ "h": h.values() }),
                outputs: json!({ "rows": rows, "dimensions": dims }),
                checks: vec![],
                text,
            }
        }
        Compute::Hall { h, mu } => {
            check_weight(h, mu)?;
            let value = symfunc::hall_scalar(&omega_chromatic(h)?, &modified_hall_littlewood(mu))?;
            Report {
                command: "compute hall".into(),
                inputs: json!({ "h": h.values(), "mu": mu.parts() }),
                text: vec![format!("<omega X_G, Q'_({})> = {}", mu, value.display_with(v))],
                outputs: json!({ "scalar": value }),
                checks: vec![],
            }
        }
        Compute::Flags { h, mu, prime } => {
            check_weight(h, mu)?;
            let count = count_points(h, mu, *prime)?;
            let d = poincare_polynomial(h, mu)?.eval_u64(u64::from(*prime));
            Report {
                command: "compute flags".into(),
                inputs: json!({ "h": h.values(), "mu": mu.parts(), "prime": prime }),
                text: vec![
                    format!("F_{prime}-points: {count}"),
                    format!("d_({mu})({prime}) = {d}"),
                ],
                outputs: json!({ "points": count, "poincare_at_prime": d.to_string() }),
                checks: vec![],
            }
        }
    };
    Ok(report)
}

fn check_v1(h: &HessenbergFunction) -> Result<Result<(), Value>> {
    let n = h.n();
    let dg = h.to_graph();
    let g = Graph::from(&dg);
    let product = poincare_product(h);
    let hn = SymF::basis_element(Basis::H, Partition::row(n));
    let values: [(&str, Poly); 4] = [
        ("cells", poincare_polynomial(h, &Partition::row(n))?),
        ("descents", descent_polynomial(&dg)),
        ("e_coefficient_sum", chromatic::e_coefficient_sum(&g)?),
        ("hall_h_n", symfunc::hall_scalar(&omega_chromatic(h)?, &hn)?),
    ];
    for (name, value) in &values {
        if *value != product {
            return Ok(Err(json!({ "h": h.values(), "product": product, name.to_string(): value })));
        }
    }
    Ok(Ok(()))
}

fn check_v2(h: &HessenbergFunction) -> Result<Result<(), Value>> {
    let wx = omega_chromatic(h)?;
    for mu in partitions(h.n()) {
        let cells = poincare_polynomial(h, &mu)?;
        let hall = symfunc::hall_scalar(&wx, &modified_hall_littlewood(&mu))?;
        if cells != hall {
            return Ok(Err(json!({ "h": h.values(), "mu": mu.parts(), "cells": cells, "hall": hall })));
        }
    }
    Ok(Ok(()))
}

fn check_v3(h: &HessenbergFunction) -> Result<Result<(), Value>> {
    let g = h.to_graph();
    let cells: BTreeSet<Vec<usize>> = enumerate_fillings(h, &Partition::row(h.n()))?
        .iter()
        .map(Filling::reading_word)
        .collect();
    let mut image = BTreeSet::new();
    for o in enumerate_acyclic(&g) {
        let sigma = min_linear_extension(&o);
        let back = orientation_from_permutation(&g, &sigma)?;
        let dim = h_inversions(&Filling::row(&sigma)?, h);
        let fresh = image.insert(sigma.clone());
        if back != o || dim != o.desc_arcs() || !fresh || !cells.contains(&sigma) {
            return Ok(Err(json!({
                "h": h.values(),
                "orientation": o.to_bits(),
                "sigma": sigma,
                "round_trip": back.to_bits(),
                "dimension": dim,
                "descending": o.desc_arcs(),
                "injective": fresh,
                "is_cell": cells.contains(&sigma),
            })));
        }
    }
    if image != cells {
        let missing: Vec<&Vec<usize>> = cells.difference(&image).collect();
        return Ok(Err(json!({ "h": h.values(), "cells_not_reached": missing })));
    }
    Ok(Ok(()))
}

fn check_v4(h: &HessenbergFunction) -> Result<(), Value> {
    let g = h.to_graph();
    let n = h.n();
    let factorial: usize = (1..=n).product();
    let mut seen = BTreeSet::new();
    let mut total = 0;
    for o in enumerate_acyclic(&g) {
        for w in linear_extensions(&o) {
            total += 1;
            if !seen.insert(w.clone()) {
                return Err(json!({ "h": h.values(), "permutation": w, "second_orientation": o.to_bits() }));
            }
        }
    }
    if total != factorial {
        return Err(json!({ "h": h.values(), "covered": total, "expected": factorial }));
    }
    Ok(())
}

fn check_v5(h: &HessenbergFunction, primes: &[u32]) -> Result<Result<(), Value>> {
    for &p in primes {
        for mu in partitions(h.n()) {
            let count = count_points(h, &mu, p)?;
            let d = poincare_polynomial(h, &mu)?.eval_u64(u64::from(p));
            if d != count.into() {
                return Ok(Err(json!({
                    "h": h.values(),
                    "mu": mu.parts(),
                    "prime": p,
                    "points": count,
                    "poincare_at_prime": d.to_string(),
                })));
            }
        }
    }
    Ok(Ok(()))
}

pub fn verify(args: &VerifyArgs, _var: Var) -> Result<Report> {
    let SizeRange { lo, hi } = args.n;
    let limit = match args.level {
        Level::Full => MAX_FULL_N,
        Level::Flags => MAX_FLAGS_N,
    };
    if hi > limit {
        bail!("n = {hi} exceeds the limit {limit} for this level");
    }
    let mut checks = Vec::new();
    let mut covered = 0;
    for n in lo..=hi {
        for h in enumerate_hessenberg(n) {
            covered += 1;
            checks.push(CheckResult::from_outcome(format!("V1 regular sum h={h}"), check_v1(&h)?));
            checks.push(CheckResult::from_outcome(format!("V2 hall pairing h={h}"), check_v2(&h)?));
            checks.push(CheckResult::from_outcome(format!("V3 bijection h={h}"), check_v3(&h)?));
            checks.push(CheckResult::from_outcome(format!("V4 S_n partition h={h}"), check_v4(&h)));
            if args.level == Level::Flags {
                checks.push(CheckResult::from_outcome(
                    format!("V5 flag count h={h}"),
                    check_v5(&h, &args.primes)?,
                ));
            }
        }
    }
    let failed = checks.iter().filter(|c| c.status == Status::Fail).count();
    let level = format!("{:?}", args.level).to_lowercase();
    let mut inputs = json!({ "n": [lo, hi], "level": level });
    if args.level == Level::Flags {
        inputs["primes"] = json!(args.primes);
    }
    Ok(Report {
        command: "verify".into(),
        inputs,
        outputs: json!({
            "hessenberg_functions": covered,
            "checks": checks.len(),
            "failed": failed,
        }),
        text: vec![format!("{covered} Hessenberg functions, n = {lo}..{hi}")],
        checks,
    })
}
