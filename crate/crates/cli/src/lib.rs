//! Command-line front end for the g2cy engine.
//!
//! [`run`] turns a parsed [`Cli`] into an exit code plus rendered output, so
//! the binary and the tests share one dispatch path.

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use g2cy::classify::{self, TableDiff, TableRow};
use g2cy::cohomology::{Bwb, CohomologyTable};
use g2cy::invariants::{compute_invariants, validate_candidate, InvariantRecord};
use g2cy::reference::reference_table;
use g2cy::reps::render_grouped;
use g2cy::weight::parse_summands;
use g2cy::{Error, Execution, G2Parabolic, ParabolicData, RepSum, Root, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Md,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "g2cy", version, about = "Calabi-Yau complete intersections in G2 flag varieties")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Accepted and ignored; every computation is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Run on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positive roots, Weyl vector and Weyl group order of G2.
    Roots,
    /// Levi data, tangent representation and anticanonical weight.
    Parabolic { parabolic: G2Parabolic },
    /// Weights, ranks and determinants of a sum of irreducible bundles.
    Bundle { parabolic: G2Parabolic, summands: String },
    /// Borel-Weil-Bott cohomology of a bundle on G/P.
    Cohomology { parabolic: G2Parabolic, summands: String },
    /// Enumerate Calabi-Yau complete intersections of a given dimension.
    Classify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=5))]
        dim: u32,
        #[arg(long)]
        parabolic: Option<G2Parabolic>,
        /// Compare with the published table and set the exit code.
        #[arg(long)]
        check_paper: bool,
    },
    /// Hodge numbers, degree and c2·H of one candidate.
    Invariants { parabolic: G2Parabolic, summands: String },
    /// A published classification table.
    Table {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=4))]
        number: u32,
    },
}

/// Exit code and the text destined for standard output and standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn error(e: Error) -> Self {
        Outcome { code: 1, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsReport {
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<Root>,
    pub rho: Weight,
    pub weyl_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicReport {
    pub parabolic: String,
    /// Crossed nodes, numbered from 1.
    pub crossed: Vec<usize>,
    pub dim: usize,
    pub levi_rank: usize,
    pub tangent: Vec<Weight>,
    pub anticanonical: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandReport {
    pub highest: Weight,
    pub dim: u64,
    pub det: Weight,
    pub weights: Vec<(Weight, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleReport {
    pub parabolic: String,
    pub bundle: String,
    pub summands: Vec<SummandReport>,
    pub rank: u64,
    pub det: Weight,
    pub anticanonical: Weight,
    pub globally_generated: bool,
    pub calabi_yau: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub parabolic: String,
    pub bundle: String,
    pub summands: Vec<(Weight, Bwb)>,
    pub table: CohomologyTable,
    pub euler: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    #[serde(rename = "dim_X")]
    pub dim_x: usize,
    pub rows: Vec<TableRow>,
    pub invariants: Vec<InvariantRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub number: usize,
    #[serde(rename = "dim_X")]
    pub dim_x: usize,
    pub caption: String,
    pub rows: Vec<TableRow>,
}

pub fn run(cli: &Cli) -> Outcome {
    let exec = if cli.sequential { Execution::Sequential } else { Execution::default() };
    let result = match &cli.command {
        Command::Roots => Ok(render_roots(cli.format)),
        Command::Parabolic { parabolic } => Ok(render_parabolic(&parabolic.data(), cli.format)),
        Command::Bundle { parabolic, summands } => bundle(*parabolic, summands, cli.format),
        Command::Cohomology { parabolic, summands } => cohomology(*parabolic, summands, cli.format),
        Command::Classify { dim, parabolic, check_paper } => {
            let ps: Vec<G2Parabolic> = parabolic.map_or(G2Parabolic::ALL.to_vec(), |p| vec![p]);
            if *check_paper {
                return check(*dim as usize, &ps, exec, cli.format);
            }
            classify_rows(*dim as usize, &ps, exec, cli.format)
        }
        Command::Invariants { parabolic, summands } => invariants(*parabolic, summands, exec, cli.format),
        Command::Table { number } => Ok(table(*number as usize, cli.format)),
    };
    result.map_or_else(Outcome::error, Outcome::ok)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn parse(p: G2Parabolic, summands: &str) -> Result<(ParabolicData, Vec<Weight>), Error> {
    let data = p.data();
    let ws = parse_summands(summands)?;
    if let Some(bad) = ws.iter().find(|w| w.rank() != data.rank()) {
        return Err(Error::Parse(format!("weight {bad} has rank {}, expected {}", bad.rank(), data.rank())));
    }
    Ok((data, ws))
}

fn render_roots(format: Format) -> String {
    let rs = g2cy::g2_root_system();
    let report = RootsReport {
        cartan: rs.cartan().rows().to_vec(),
        positive_roots: rs.positive_roots().to_vec(),
        rho: rs.weyl_vector().clone(),
        weyl_order: rs.weyl_order(),
    };
    match format {
        Format::Json => json(&report),
        Format::Md => {
            let mut out = String::from("| root | simple | length |\n|---|---|---|\n");
            for r in &report.positive_roots {
                out.push_str(&format!("| {} | {:?} | {:?} |\n", r.weight, r.simple_coords, r.length));
            }
            out.push_str(&format!("\nρ = {}, |W| = {}\n", report.rho, report.weyl_order));
            out
        }
        Format::Text => {
            let mut out = format!("cartan {:?}\n", report.cartan);
            out.push_str(&format!("positive roots ({})\n", report.positive_roots.len()));
            for r in &report.positive_roots {
                out.push_str(&format!("  {:<8} simple {:?} {:?}\n", r.weight.to_string(), r.simple_coords, r.length));
            }
            out.push_str(&format!("rho {}\nweyl order {}\n", report.rho, report.weyl_order));
            out
        }
    }
}

fn render_parabolic(p: &ParabolicData, format: Format) -> String {
    let mut tangent = p.tangent().summands();
    p.canonical_order(&mut tangent);
    let report = ParabolicReport {
        parabolic: p.label().to_string(),
        crossed: p.spec().crossed().iter().map(|i| i + 1).collect(),
        dim: p.dim(),
        levi_rank: p.levi_rank(),
        tangent,
        anticanonical: p.anticanonical().clone(),
    };
    match format {
        Format::Json => json(&report),
        Format::Md => format!(
            "| P | crossed | dim | Levi rank | g/p | det |\n|---|---|---|---|---|---|\n| {} | {:?} | {} | {} | {} | {} |\n",
            report.parabolic,
            report.crossed,
            report.dim,
            report.levi_rank,
            render_grouped(report.tangent.clone()),
            report.anticanonical
        ),
        Format::Text => format!(
            "parabolic {}\ncrossed {:?}\ndim {}\nlevi rank {}\ng/p {}\nanticanonical {}\n",
            report.parabolic,
            report.crossed,
            report.dim,
            report.levi_rank,
            render_grouped(report.tangent.clone()),
            report.anticanonical
        ),
    }
}

fn bundle(p: G2Parabolic, summands: &str, format: Format) -> Result<String, Error> {
    let (data, ws) = parse(p, summands)?;
    let bundle: RepSum = ws.iter().cloned().collect();
    data.validate(&bundle)?;
    let mut parts = Vec::new();
    for w in &ws {
        parts.push(SummandReport {
            highest: w.clone(),
            dim: data.irrep_dim(w)?,
            det: data.irrep_det(w)?,
            weights: data.irrep_weights(w)?.iter().map(|(w, &m)| (w.clone(), m)).collect(),
        });
    }
    let det = data.det_of(&bundle);
    let report = BundleReport {
        parabolic: data.label().to_string(),
        bundle: data.render(&bundle),
        summands: parts,
        rank: data.rank_of(&bundle),
        calabi_yau: &det == data.anticanonical(),
        det,
        anticanonical: data.anticanonical().clone(),
        globally_generated: ws.iter().all(Weight::is_dominant),
    };
    Ok(match format {
        Format::Json => json(&report),
        Format::Md => {
            let mut out = String::from("| λ | dim | det | weights |\n|---|---|---|---|\n");
            for s in &report.summands {
                out.push_str(&format!("| {} | {} | {} | {} |\n", s.highest, s.dim, s.det, weight_list(&s.weights)));
            }
            out.push_str(&format!(
                "\nrank {}, det {}, anticanonical {}, globally generated {}, Calabi-Yau {}\n",
                report.rank, report.det, report.anticanonical, report.globally_generated, report.calabi_yau
            ));
            out
        }
        Format::Text => {
            let mut out = format!("{} on {}\n", report.bundle, report.parabolic);
            for s in &report.summands {
                out.push_str(&format!("  {}: dim {}, det {}, weights {}\n", s.highest, s.dim, s.det, weight_list(&s.weights)));
            }
            out.push_str(&format!(
                "rank {}\ndet {}\nanticanonical {}\nglobally generated {}\ncalabi-yau {}\n",
                report.rank, report.det, report.anticanonical, report.globally_generated, report.calabi_yau
            ));
            out
        }
    })
}

fn weight_list(ws: &[(Weight, u64)]) -> String {
    let parts: Vec<String> =
        ws.iter().map(|(w, m)| if *m == 1 { w.to_string() } else { format!("{m}·{w}") }).collect();
    parts.join(" ")
}

fn cohomology(p: G2Parabolic, summands: &str, format: Format) -> Result<String, Error> {
    let (data, ws) = parse(p, summands)?;
    let bundle: RepSum = ws.iter().cloned().collect();
    let per_summand = ws.iter().map(|w| Ok((w.clone(), data.bwb_irrep(w)?))).collect::<Result<Vec<_>, Error>>()?;
    let table = data.bundle_cohomology(&bundle)?;
    let report = CohomologyReport {
        parabolic: data.label().to_string(),
        bundle: data.render(&bundle),
        summands: per_summand,
        euler: table.euler(),
        table,
    };
    let bwb = |b: &Bwb| match b {
        Bwb::Vanishes => "vanishes".to_string(),
        Bwb::Nonzero { degree, highest } => format!("H^{degree} = V_{highest}"),
    };
    Ok(match format {
        Format::Json => json(&report),
        Format::Md => {
            let mut out = String::from("| q | H^q | dim |\n|---|---|---|\n");
            for q in 0..=report.table.dim_gp {
                let m = report.table.degrees.get(&q).cloned().unwrap_or_default();
                out.push_str(&format!("| {q} | {m} | {} |\n", m.dim));
            }
            out.push_str(&format!("\nχ = {}\n", report.euler));
            out
        }
        Format::Text => {
            let mut out = format!("{} on {}\n", report.bundle, report.parabolic);
            for (w, b) in &report.summands {
                out.push_str(&format!("  {w}: {}\n", bwb(b)));
            }
            out.push_str(&report.table.render_text());
            out.push_str(&format!("euler {}\n", report.euler));
            out
        }
    })
}

fn classify_rows(dim_x: usize, ps: &[G2Parabolic], exec: Execution, format: Format) -> Result<String, Error> {
    let rows = classify::classify(dim_x, ps, exec)?;
    Ok(match format {
        Format::Json => {
            let invariants = classify::table_invariants(&rows, exec)?;
            json(&ClassifyReport { dim_x, rows, invariants })
        }
        Format::Md => classify::render_markdown(&rows),
        Format::Text => classify::render_text(&rows),
    })
}

fn check(dim_x: usize, ps: &[G2Parabolic], exec: Execution, format: Format) -> Outcome {
    let diff: TableDiff = match classify::diff_against_reference(dim_x, ps, exec) {
        Ok(d) => d,
        Err(e) => return Outcome::error(e),
    };
    let stdout = match format {
        Format::Json => json(&diff),
        Format::Md | Format::Text => {
            let render = if format == Format::Md { classify::render_markdown } else { classify::render_text };
            let mut out = render(&diff.matched);
            out.push_str(&format!(
                "\nmatched {}, missing {}, extra {}\n",
                diff.matched.len(),
                diff.missing.len(),
                diff.extra.len()
            ));
            for row in &diff.missing {
                out.push_str(&format!("missing {row}\n"));
            }
            for (row, inv) in diff.extra.iter().zip(&diff.extra_invariants) {
                let h0q: Vec<String> =
                    inv.h0q.iter().map(|v| v.map_or_else(|| "?".to_string(), |v| v.to_string())).collect();
                out.push_str(&format!("extra {row}  (h0q = [{}])\n", h0q.join(", ")));
            }
            out
        }
    };
    Outcome { code: diff.exit_code(), stdout, stderr: String::new() }
}

fn invariants(p: G2Parabolic, summands: &str, exec: Execution, format: Format) -> Result<String, Error> {
    let (data, ws) = parse(p, summands)?;
    let candidate = validate_candidate(&data, &ws)?;
    let record = compute_invariants(&candidate, exec)?;
    let show = |v: Option<i64>| v.map_or_else(|| "n/a".to_string(), |v| v.to_string());
    let h0q: Vec<String> = record.h0q.iter().map(|v| show(*v)).collect();
    let fields = [
        ("bundle", format!("{} on {}", record.bundle, record.parabolic)),
        ("rank", record.rank.to_string()),
        ("dim X", record.dim_x.to_string()),
        ("split", record.split.to_string()),
        ("h0q", format!("[{}]", h0q.join(", "))),
        ("h11", show(record.h11)),
        ("h12", show(record.h12)),
        ("chi(Omega1)", record.chi_omega1.to_string()),
        ("deg", show(record.deg)),
        ("c2H", show(record.c2h)),
        ("euler", show(record.euler)),
    ];
    Ok(match format {
        Format::Json => json(&record),
        Format::Md => {
            let mut out = String::from("| invariant | value |\n|---|---|\n");
            for (k, v) in &fields {
                out.push_str(&format!("| {k} | {v} |\n"));
            }
            for d in &record.discrepancies {
                out.push_str(&format!("\ndiscrepancy: {d}\n"));
            }
            out
        }
        Format::Text => {
            let mut out: String = fields.iter().map(|(k, v)| format!("{k:<12} {v}\n")).collect();
            for d in &record.discrepancies {
                out.push_str(&format!("discrepancy  {d}\n"));
            }
            out
        }
    })
}

fn table(number: usize, format: Format) -> String {
    let t = reference_table(number).expect("clap restricts the table number");
    let rows: Vec<TableRow> = t
        .rows
        .iter()
        .map(|r| TableRow::new(&r.parabolic.data(), &r.summands).expect("published rows are valid"))
        .collect();
    let report = TableReport { number: t.number, dim_x: t.dim_x, caption: t.caption.to_string(), rows };
    match format {
        Format::Json => json(&report),
        Format::Md => format!("Table {}: {}\n\n{}", report.number, report.caption, classify::render_markdown(&report.rows)),
        Format::Text => format!("Table {}: {}\n{}", report.number, report.caption, classify::render_text(&report.rows)),
    }
}
