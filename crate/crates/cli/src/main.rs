mod output;

use std::collections::BTreeMap;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use fc_core::depth::fmt_rational;
use fc_core::diagrams::{automorphism_group, twisted_local_index, DiagramJson};
use fc_core::endoscopy::{Factor, FactorKind};
use fc_core::fc_finite::{dim_fc_fq, FiniteCase, FiniteForm, Isogeny};
use fc_core::*;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use output::{Mode, Report, Row};

/// One prime in each unit class mod 60.
const DEFAULT_PRIMES: &str = "61,67,71,73,79,83,89,97,101,103,107,109,113,137,151,179";

#[derive(Parser)]
#[command(name = "fcg", version, about = "Dimensions of cuspidal nilpotent function spaces and their endoscopic transfer")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// dim FC, its endoscopic count and the Y total.
    Dim(CaseArgs),
    /// Stable dimension and the stable part of X.
    Stable(CaseArgs),
    /// The multiset X.
    Xset(CaseArgs),
    /// The set Y with dimensions and endoscopic references.
    Yset(CaseArgs),
    /// The graph of the bijection X -> Y.
    Phi(CaseArgs),
    /// Elliptic endoscopic data with verdicts and contributions.
    Endoscopy(CaseArgs),
    /// dim FC(g(F_q)) for a finite reductive group.
    FiniteDim(FiniteArgs),
    /// An affine or twisted affine diagram.
    Diagram(DiagramArgs),
    /// Depth r of a vertex and parabolic subset.
    Depth(DepthArgs),
    /// Sweep the transfer identity over a grid.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, conflicts_with = "tsv")]
    json: bool,
    #[arg(long)]
    tsv: bool,
}

impl OutputArgs {
    fn mode(&self) -> Mode {
        match (self.json, self.tsv) {
            (true, _) => Mode::Json,
            (_, true) => Mode::Tsv,
            _ => Mode::Table,
        }
    }
}

#[derive(Args)]
struct CaseArgs {
    /// Case id, e.g. B-split or E8.
    #[arg(long)]
    case: CaseId,
    /// Rank parameter; optional for the exceptional cases.
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    q: u64,
    #[command(flatten)]
    out: OutputArgs,
}

impl CaseArgs {
    fn resolve(&self) -> anyhow::Result<(GroupCase, QParam)> {
        let c = match self.n {
            Some(n) => GroupCase::new(self.case, n)?,
            None => GroupCase::fixed(self.case).context("--n is required for this case")?,
        };
        Ok((c, QParam::new(self.q)?))
    }
}

#[derive(Args)]
struct FiniteArgs {
    /// Dynkin type, e.g. A5.
    #[arg(long = "type")]
    ty: DynkinType,
    #[arg(long, default_value = "split")]
    form: FiniteForm,
    #[arg(long, default_value = "SC")]
    isogeny: Isogeny,
    #[arg(long)]
    q: u64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct DiagramArgs {
    #[arg(long = "type")]
    ty: DynkinType,
    #[arg(long, default_value_t = 1)]
    twist: u32,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct DepthArgs {
    #[arg(long = "type")]
    ty: DynkinType,
    #[arg(long, default_value_t = 1)]
    twist: u32,
    #[arg(long)]
    vertex: String,
    /// Comma-separated node labels.
    #[arg(long, value_delimiter = ',', default_value = "")]
    parabolic: Vec<String>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// `all`, a series letter, or comma-separated case ids.
    #[arg(long, default_value = "all")]
    family: String,
    #[arg(long, default_value_t = 60)]
    n_max: u32,
    #[arg(long, value_delimiter = ',', default_value = DEFAULT_PRIMES)]
    q: Vec<u64>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Serialize, Deserialize)]
struct CaseHeader {
    case: CaseId,
    n: u32,
    q: u64,
}

impl CaseHeader {
    fn new(c: GroupCase, q: QParam) -> Self {
        CaseHeader { case: c.id, n: c.n, q: q.get() }
    }

    fn row(&self, label: impl ToString, value: impl ToString, side: &'static str) -> Row {
        Row {
            case: self.case.to_string(),
            n: self.n.to_string(),
            q: self.q.to_string(),
            label: label.to_string(),
            value: value.to_string(),
            side,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct DimJson {
    #[serde(flatten)]
    head: CaseHeader,
    dim: u64,
    dim_endo: u64,
    dim_y: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    dim_st: Option<u64>,
}

fn dim(a: &CaseArgs) -> anyhow::Result<()> {
    let (c, q) = a.resolve()?;
    let head = CaseHeader::new(c, q);
    let d = dim_fc(c, q)?;
    let e = dim_fc_endo(c, q)?;
    let y = enumerate_Y(c, q)?.iter().map(|y| y.dim).sum();
    let st = c.info().is_quasi_split().then(|| dim_fc_st(c, q)).transpose()?;
    let mut rows = vec![head.row("dim", d, "X"), head.row("dim", e, "E"), head.row("dim", y, "Y")];
    let mut table = vec![format!("{c} q={q}"), format!("dim FC   {d}"), format!("dim FC^E {e}"), format!("sum Y    {y}")];
    if let Some(s) = st {
        rows.push(head.row("dim-st", s, "X"));
        table.push(format!("dim FC^st {s}"));
    }
    let json = DimJson { head, dim: d, dim_endo: e, dim_y: y, dim_st: st };
    Report { json, rows, table }.emit(a.out.mode())
}

#[derive(Serialize, Deserialize)]
struct EntriesJson<T> {
    #[serde(flatten)]
    head: CaseHeader,
    total: u64,
    entries: Vec<T>,
}

fn stable(a: &CaseArgs) -> anyhow::Result<()> {
    let (c, q) = a.resolve()?;
    let head = CaseHeader::new(c, q);
    let total = dim_fc_st(c, q)?;
    let entries = x_st(c, q)?;
    let rows = entries.iter().map(|x| head.row(&x.label, x.mult, "X-st")).collect();
    let mut table = vec![format!("{c} q={q}: dim FC^st = {total}")];
    table.extend(entries.iter().map(|x| format!("  {}  d={}", x.label, x.mult)));
    Report { json: EntriesJson { head, total, entries }, rows, table }.emit(a.out.mode())
}

fn xset(a: &CaseArgs) -> anyhow::Result<()> {
    let (c, q) = a.resolve()?;
    let head = CaseHeader::new(c, q);
    let entries = enumerate_X(c, q)?;
    let total = entries.iter().map(|x| x.mult).sum();
    let rows = entries.iter().map(|x| head.row(&x.label, x.mult, "X")).collect();
    let mut table = vec![format!("{c} q={q}: |X| = {}, total {total}", entries.len())];
    table.extend(entries.iter().map(|x| format!("  {}  d={}", x.label, x.mult)));
    Report { json: EntriesJson { head, total, entries }, rows, table }.emit(a.out.mode())
}

fn yset(a: &CaseArgs) -> anyhow::Result<()> {
    let (c, q) = a.resolve()?;
    let head = CaseHeader::new(c, q);
    let entries = enumerate_Y(c, q)?;
    let total = entries.iter().map(|y| y.dim).sum();
    let rows = entries.iter().map(|y| head.row(&y.label, y.dim, "Y")).collect();
    let mut table = vec![format!("{c} q={q}: |Y| = {}, total {total}", entries.len())];
    table.extend(entries.iter().map(|y| format!("  {}  dim={}  [{}]", y.label, y.dim, y.endo_ref.join(" "))));
    Report { json: EntriesJson { head, total, entries }, rows, table }.emit(a.out.mode())
}

#[derive(Serialize, Deserialize)]
struct PhiEdge {
    x: Label,
    y: Label,
    mult: u64,
}

fn phi_graph(a: &CaseArgs) -> anyhow::Result<()> {
    let (c, q) = a.resolve()?;
    let head = CaseHeader::new(c, q);
    let edges = enumerate_X(c, q)?
        .into_iter()
        .map(|x| Ok(PhiEdge { y: phi(c, q, &x.label)?, x: x.label, mult: x.mult }))
        .collect::<anyhow::Result<Vec<_>>>()?;
    let total = edges.iter().map(|e| e.mult).sum();
    let rows = edges.iter().map(|e| head.row(format!("{}=>{}", e.x, e.y), e.mult, "phi")).collect();
    let mut table = vec![format!("{c} q={q}")];
    table.extend(edges.iter().map(|e| format!("  {} -> {}  d={}", e.x, e.y, e.mult)));
    Report { json: EntriesJson { head, total, entries: edges }, rows, table }.emit(a.out.mode())
}

fn factor_name(f: &Factor) -> String {
    let kind = match f.kind {
        FactorKind::Group(id) => id.to_string(),
        k => serde_json::to_value(k).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default(),
    };
    let base = serde_json::to_value(f.base).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
    format!("{kind}({})/{base}", f.m)
}

fn endoscopy(a: &CaseArgs) -> anyhow::Result<()> {
    let (c, q) = a.resolve()?;
    let head = CaseHeader::new(c, q);
    let entries = enumerate_endo(c, q)?;
    let total = entries.iter().map(|d| d.contribution).sum();
    let rows = entries.iter().map(|d| head.row(&d.id, d.contribution, "E")).collect();
    let mut table = vec![format!("{c} q={q}: dim FC^E = {total}")];
    table.extend(entries.iter().map(|d| {
        let factors: Vec<String> = d.factors.iter().map(factor_name).collect();
        format!("  {}  {}  {}  [{}]", d.id, d.contribution, d.verdict, factors.join(" x "))
    }));
    Report { json: EntriesJson { head, total, entries }, rows, table }.emit(a.out.mode())
}

#[derive(Serialize, Deserialize)]
struct FiniteJson {
    #[serde(rename = "type")]
    ty: DynkinType,
    form: String,
    isogeny: String,
    q: u64,
    dim: u64,
}

fn finite_dim(a: &FiniteArgs) -> anyhow::Result<()> {
    let q = QParam::new(a.q)?;
    let d = dim_fc_fq(FiniteCase::new(a.ty, a.form, a.isogeny, q))?;
    let row = Row {
        case: a.ty.to_string(),
        n: a.ty.rank().to_string(),
        q: q.to_string(),
        label: format!("{}/{}", a.form, a.isogeny),
        value: d.to_string(),
        side: "finite",
    };
    let json = FiniteJson { ty: a.ty, form: a.form.to_string(), isogeny: a.isogeny.to_string(), q: q.get(), dim: d };
    let table = vec![format!("{} {} {} q={q}: {d}", a.ty, a.form, a.isogeny)];
    Report { json, rows: vec![row], table }.emit(a.out.mode())
}

#[derive(Serialize, Deserialize)]
struct DiagramOut {
    #[serde(rename = "type")]
    ty: DynkinType,
    #[serde(flatten)]
    diagram: DiagramJson,
    automorphisms: usize,
    omega: usize,
}

fn diagram(a: &DiagramArgs) -> anyhow::Result<()> {
    let d = twisted_local_index(a.ty, a.twist)?;
    let g = automorphism_group(&d);
    let json = DiagramOut { ty: a.ty, diagram: d.to_json(), automorphisms: g.order(), omega: g.omega.len() };
    let row = |label: &str, value: u64| Row {
        case: a.ty.to_string(),
        n: a.ty.rank().to_string(),
        q: "-".into(),
        label: label.to_string(),
        value: value.to_string(),
        side: "diagram",
    };
    let rows = d.nodes().iter().enumerate().map(|(i, n)| row(n, d.mark(i))).collect();
    let mut table = vec![format!("{} twist {}: |Aut| = {}, |Omega| = {}", a.ty, a.twist, json.automorphisms, json.omega)];
    table.extend(d.nodes().iter().enumerate().map(|(i, n)| {
        format!("  {n}  d={}  e={}", d.mark(i), d.twist_orders()[i])
    }));
    table.extend(json.diagram.edges.iter().map(|e| match &e.long {
        Some(l) => format!("  {} {} {} (long {l})", e.a, "=".repeat(e.bond as usize), e.b),
        None => format!("  {} {} {}", e.a, "-".repeat(e.bond as usize), e.b),
    }));
    Report { json, rows, table }.emit(a.out.mode())
}

#[derive(Serialize, Deserialize)]
struct DepthJson {
    #[serde(rename = "type")]
    ty: DynkinType,
    twist: u32,
    vertex: String,
    parabolic: Vec<String>,
    r: String,
    point: BTreeMap<String, String>,
}

fn depth(a: &DepthArgs) -> anyhow::Result<()> {
    let d = twisted_local_index(a.ty, a.twist)?;
    let parabolic: Vec<String> = a.parabolic.iter().filter(|s| !s.is_empty()).cloned().collect();
    let qr = DepthQuery::new(d, &a.vertex, &parabolic);
    let r = depth_r(&qr)?;
    let point: BTreeMap<String, String> =
        depth_point(&qr)?.into_iter().map(|(k, v)| (k, fmt_rational(v))).collect();
    let rows = point
        .iter()
        .map(|(k, v)| Row {
            case: a.ty.to_string(),
            n: a.ty.rank().to_string(),
            q: "-".into(),
            label: k.clone(),
            value: v.clone(),
            side: "depth",
        })
        .collect();
    let table = vec![fmt_rational(r)];
    let json = DepthJson { ty: a.ty, twist: a.twist, vertex: a.vertex.clone(), parabolic, r: fmt_rational(r), point };
    Report { json, rows, table }.emit(a.out.mode())
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
struct Counterexample {
    case: CaseId,
    n: u32,
    q: u64,
    lhs: u64,
    rhs: u64,
    side: String,
}

#[derive(Serialize, Deserialize)]
struct VerifyJson {
    points: usize,
    failures: Vec<Counterexample>,
}

fn family(arg: &str) -> anyhow::Result<Vec<CaseId>> {
    if arg.eq_ignore_ascii_case("all") {
        return Ok(CaseId::ALL.to_vec());
    }
    let mut out = Vec::new();
    for part in arg.split(',').map(str::trim) {
        let series: Vec<CaseId> =
            CaseId::ALL.iter().copied().filter(|c| part.len() == 1 && c.info().series.letter().to_string() == part).collect();
        if series.is_empty() {
            out.push(part.parse::<CaseId>()?);
        } else {
            out.extend(series);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Checks dim FC = dim FC^E = sum over Y at one grid point.
fn check_point(c: GroupCase, q: QParam) -> anyhow::Result<Option<Counterexample>> {
    let x = dim_fc(c, q)?;
    let e = dim_fc_endo(c, q)?;
    let y: u64 = enumerate_Y(c, q)?.iter().map(|y| y.dim).sum();
    let fail = |rhs, side: &str| Counterexample { case: c.id, n: c.n, q: q.get(), lhs: x, rhs, side: side.into() };
    Ok(if x != e {
        Some(fail(e, "endoscopy"))
    } else if x != y {
        Some(fail(y, "Y"))
    } else {
        None
    })
}

fn verify(a: &VerifyArgs) -> anyhow::Result<ExitCode> {
    let ids = family(&a.family)?;
    let qs = a.q.iter().map(|&p| QParam::new(p)).collect::<Result<Vec<_>, _>>()?;
    let grid: Vec<(GroupCase, QParam)> = ids
        .iter()
        .flat_map(|&id| id.info().rank.ranks(a.n_max).map(move |n| GroupCase::new(id, n)))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flat_map(|c| qs.iter().filter(move |q| c.id.exists(**q)).map(move |&q| (c, q)))
        .collect();
    let mut failures = grid
        .par_iter()
        .map(|&(c, q)| check_point(c, q))
        .collect::<anyhow::Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    failures.sort();
    let rows = failures
        .iter()
        .map(|f| Row {
            case: f.case.to_string(),
            n: f.n.to_string(),
            q: f.q.to_string(),
            label: format!("lhs={}", f.lhs),
            value: f.rhs.to_string(),
            side: "verify",
        })
        .collect();
    let table = match failures.first() {
        None => vec![format!("ok: {} points", grid.len())],
        Some(f) => vec![format!("counterexample: case={} n={} q={} lhs={} rhs={} ({})", f.case, f.n, f.q, f.lhs, f.rhs, f.side)],
    };
    let failed = !failures.is_empty();
    Report { json: VerifyJson { points: grid.len(), failures }, rows, table }.emit(a.out.mode())?;
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match &cli.cmd {
        Cmd::Dim(a) => dim(a)?,
        Cmd::Stable(a) => stable(a)?,
        Cmd::Xset(a) => xset(a)?,
        Cmd::Yset(a) => yset(a)?,
        Cmd::Phi(a) => phi_graph(a)?,
        Cmd::Endoscopy(a) => endoscopy(a)?,
        Cmd::FiniteDim(a) => finite_dim(a)?,
        Cmd::Diagram(a) => diagram(a)?,
        Cmd::Depth(a) => depth(a)?,
        Cmd::Verify(a) => return verify(a),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) if e.downcast_ref::<std::io::Error>().is_some_and(|e| e.kind() == std::io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

