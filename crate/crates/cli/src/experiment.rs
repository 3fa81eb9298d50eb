use std::fmt::Write as _;
use std::io::Write;

use edge_drs::make_generalized_petersen;
use edge_drs::metric::{edge_metric_dimension, greedy_doubly_resolving, psi_edge, SearchResult};
use edge_drs::MetricError;
use serde::Serialize;

use crate::{ExperimentArgs, Failure, KRule, Outcome, EXIT_OK};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
enum Status {
    Exact,
    UpperBoundOnly,
    BudgetExceeded,
}

impl Status {
    fn marker(self, what: &str) -> String {
        match self {
            Status::Exact => String::new(),
            Status::UpperBoundOnly => format!("  [{what}: upper bound only]"),
            Status::BudgetExceeded => format!("  [{what}: budget exceeded]"),
        }
    }
}

#[derive(Debug, Serialize)]
struct Row {
    n: usize,
    k: usize,
    size: usize,
    dim_e: Option<usize>,
    dim_e_status: Status,
    psi_e: Option<usize>,
    psi_e_status: Status,
    psi_e_set: Vec<String>,
}

#[derive(Debug, Serialize)]
struct Table {
    command: &'static str,
    rows: Vec<Row>,
}

fn ks(n: usize, rule: KRule) -> Vec<usize> {
    let valid = |k: usize| k >= 1 && 2 * k < n;
    match rule {
        KRule::All => (1..n).filter(|&k| valid(k)).collect(),
        KRule::Fixed(k) if valid(k) => vec![k],
        KRule::Fixed(_) => Vec::new(),
    }
}

fn exact(r: Result<SearchResult, MetricError>) -> Result<Option<SearchResult>, Failure> {
    match r {
        Ok(r) => Ok(Some(r)),
        Err(MetricError::BudgetExceeded { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

pub(crate) fn run(a: &ExperimentArgs, out: &mut dyn Write) -> Outcome {
    let opts = a.limits.options(false);
    let mut rows = Vec::new();
    for n in a.n.clone().filter(|&n| n >= 3) {
        for k in ks(n, a.k) {
            let g = make_generalized_petersen(n, k)?;
            let dim = exact(edge_metric_dimension(&g.graph, &opts))?;
            let (psi_e, psi_e_status, set) = match exact(psi_edge(&g.graph, &opts))? {
                Some(r) => (r.cardinality, Status::Exact, r.best_set),
                None => {
                    let lm = greedy_doubly_resolving(g.graph.line_distances()?)?;
                    (lm.len(), Status::UpperBoundOnly, lm)
                }
            };
            rows.push(Row {
                n,
                k,
                size: g.graph.size(),
                dim_e: dim.as_ref().map(|r| r.cardinality),
                dim_e_status: if dim.is_some() {
                    Status::Exact
                } else {
                    Status::BudgetExceeded
                },
                psi_e: Some(psi_e),
                psi_e_status,
                psi_e_set: set.elements().iter().map(|&i| g.edge_name(i)).collect(),
            });
        }
    }

    if a.output.json {
        let table = Table {
            command: "experiment",
            rows,
        };
        writeln!(out, "{}", serde_json::to_string(&table)?)?;
        return Ok(EXIT_OK);
    }
    let mut text = String::from("n    k    |E|  dim_E    psi_E    set\n");
    for r in &rows {
        let dim = r.dim_e.map_or_else(|| "?".to_string(), |d| d.to_string());
        let psi = r.psi_e.map_or_else(|| "?".to_string(), |d| d.to_string());
        writeln!(
            text,
            "{:<4} {:<4} {:<4} {:<8} {:<8} {{{}}}{}{}",
            r.n,
            r.k,
            r.size,
            dim,
            psi,
            r.psi_e_set.join(", "),
            r.dim_e_status.marker("dim_E"),
            r.psi_e_status.marker("psi_E"),
        )
        .unwrap();
    }
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}
