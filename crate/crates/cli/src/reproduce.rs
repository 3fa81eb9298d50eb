use std::fmt::Write as _;
use std::io::Write;
use std::time::Instant;

use edge_drs::closed_form::{
    base_table, minimal_candidate, partition_mismatches, reproduce_coordinate_table,
    sunlet_two_set_rows, verify_instance, ClosedFamily, EdgeLabel,
};
use edge_drs::metric::{
    edge_metric_dimension, labeled_pair_doubly_resolved, check_labeled_set, psi_edge,
    SearchOptions,
};
use serde::Serialize;

use crate::{millis, Failure, Outcome, ReproduceArgs, EXIT_OK};

#[derive(Debug, Serialize)]
struct Check {
    name: String,
    ok: bool,
    detail: String,
}

#[derive(Debug, Serialize)]
struct Summary {
    command: &'static str,
    checks: Vec<Check>,
    failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
}

#[derive(Default)]
struct Report {
    md: String,
    checks: Vec<Check>,
}

impl Report {
    fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) -> bool {
        self.checks.push(Check {
            name: name.into(),
            ok,
            detail: detail.into(),
        });
        ok
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.md.push_str(s.as_ref());
        self.md.push('\n');
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "yes"
    } else {
        "**no**"
    }
}

fn join(labels: &[EdgeLabel]) -> String {
    labels
        .iter()
        .map(EdgeLabel::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn tuple(v: &[impl std::fmt::Display]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn fibers(r: &mut Report) -> Result<(), Failure> {
    r.line("## Distance classes of the base edge\n");
    for family in [ClosedFamily::Sunlet, ClosedFamily::Prism] {
        for n in [8, 9] {
            let table = base_table(family, n)?;
            let g = family.generate(n)?;
            let bad = partition_mismatches(&table, &g)?;
            r.line(format!("### {family} n={n}, base edge {}\n", family.base()));
            r.line("| i | edges at distance i |");
            r.line("|---|---|");
            for (i, labels) in table.fibers() {
                r.line(format!("| {i} | {} |", join(&labels)));
            }
            r.line("");
            let ok = r.check(
                format!("distance classes {family} n={n}"),
                bad.is_empty(),
                format!("{} edges misplaced", bad.len()),
            );
            r.line(format!("Matches BFS: {}\n", mark(ok)));
        }
    }
    Ok(())
}

fn two_sets(r: &mut Report) -> Result<(), Failure> {
    r.line("## Two-edge sets in the sunlet, n=8\n");
    let n = 8;
    let g = ClosedFamily::Sunlet.generate(n)?;
    r.line("| candidate sets | count | none doubly resolves | unresolved pair | pair unresolved by all |");
    r.line("|---|---|---|---|---|");
    for row in sunlet_two_set_rows(n)? {
        let [a, b] = row.witness.map(|l| l.reduced(n).to_string());
        let mut all_fail = true;
        let mut witness_holds = true;
        for cand in &row.candidates {
            let names: Vec<String> = cand.iter().map(|l| l.reduced(n).to_string()).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            all_fail &= !check_labeled_set(&g, &refs)?.ok;
            witness_holds &= !labeled_pair_doubly_resolved(&g, &refs, &a, &b)?;
        }
        r.check(
            format!("two-edge sets {}", row.condition),
            all_fail && witness_holds,
            format!("{} sets, pair {a}, {b}", row.candidates.len()),
        );
        r.line(format!(
            "| {} | {} | {} | {a}, {b} | {} |",
            row.condition,
            row.candidates.len(),
            mark(all_fail),
            mark(witness_holds)
        ));
    }
    r.line("");
    Ok(())
}

fn coordinates(r: &mut Report) -> Result<(), Failure> {
    r.line("## Representations with respect to the three-edge sets\n");
    for family in [ClosedFamily::Sunlet, ClosedFamily::Prism] {
        for n in [8, 9] {
            let t = reproduce_coordinate_table(family, n)?;
            r.line(format!(
                "### {family} n={n}, set {{{}}}\n",
                join(&t.landmarks)
            ));
            r.line("| class | edge | printed | corrected | computed | note |");
            r.line("|---|---|---|---|---|---|");
            for row in &t.rows {
                let printed = row
                    .printed
                    .as_deref()
                    .map_or_else(|| "illegible".to_string(), tuple);
                let mut class = row.fiber.to_string();
                if row.fiber != row.bfs_fiber {
                    write!(class, " (BFS {})", row.bfs_fiber).unwrap();
                }
                r.line(format!(
                    "| {class} | {} | {printed} | {} | {} | {} |",
                    row.label,
                    tuple(&row.expected),
                    tuple(&row.computed),
                    row.correction.unwrap_or("")
                ));
            }
            r.line("");
            let mismatches = t.mismatches().len();
            let distinct = t.rows_distinct() && t.covers_all_edges();
            let no_shift = t.no_constant_difference();
            r.check(
                format!("representations {family} n={n}"),
                mismatches == 0 && distinct && no_shift,
                format!(
                    "{mismatches} mismatches, {} corrections, distinct {distinct}, no constant shift {no_shift}",
                    t.corrections().len()
                ),
            );
            r.line(format!(
                "Rows match BFS: {}. All rows distinct: {}. No two rows differ by a constant vector: {}.\n",
                mark(mismatches == 0),
                mark(distinct),
                mark(no_shift)
            ));
        }
    }
    Ok(())
}

fn candidates(r: &mut Report) -> Result<(), Failure> {
    r.line("## Three-edge doubly resolving sets\n");
    r.line("| family | n | set | doubly resolving | every two-edge subset fails |");
    r.line("|---|---|---|---|---|");
    for (family, ns) in [
        (ClosedFamily::Sunlet, 4..=14),
        (ClosedFamily::Prism, 6..=13),
    ] {
        for n in ns {
            let g = family.generate(n)?;
            let set = minimal_candidate(family, n)?;
            let names: Vec<String> = set.iter().map(EdgeLabel::to_string).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let ok = check_labeled_set(&g, &refs)?.ok;
            let mut minimal = true;
            for skip in 0..refs.len() {
                let mut sub = refs.clone();
                sub.remove(skip);
                minimal &= !check_labeled_set(&g, &sub)?.ok;
            }
            r.check(
                format!("three-edge set {family} n={n}"),
                ok && minimal,
                names.join(", "),
            );
            r.line(format!(
                "| {family} | {n} | {{{}}} | {} | {} |",
                names.join(", "),
                mark(ok),
                mark(minimal)
            ));
        }
    }
    r.line("");
    Ok(())
}

fn sweeps(r: &mut Report, opts: &SearchOptions) -> Result<(), Failure> {
    r.line("## Exhaustive search\n");
    r.line("| family | n | edge dim | expected | edge psi | expected |");
    r.line("|---|---|---|---|---|---|");
    let cases = (4..=14)
        .map(|n| {
            (
                ClosedFamily::Sunlet,
                n,
                Some(if n % 2 == 0 { 2 } else { 3 }),
                Some(3),
            )
        })
        .chain((3..=12).map(|n| (ClosedFamily::Prism, n, Some(3), (n >= 6).then_some(3))));
    for (family, n, want_dim, want_psi) in cases {
        let g = match family {
            ClosedFamily::Sunlet => edge_drs::make_sunlet(n)?,
            ClosedFamily::Prism => edge_drs::make_prism(n)?,
        };
        let dim = edge_metric_dimension(&g.graph, opts)?.cardinality;
        let psi = psi_edge(&g.graph, opts)?.cardinality;
        let show = |w: Option<usize>| w.map_or_else(|| "n/a".to_string(), |w| w.to_string());
        let ok = want_dim.is_none_or(|w| w == dim) && want_psi.is_none_or(|w| w == psi);
        r.check(
            format!("search {family} n={n}"),
            ok,
            format!("dim {dim}, psi {psi}"),
        );
        r.line(format!(
            "| {family} | {n} | {dim} | {} | {psi} | {} |",
            show(want_dim),
            show(want_psi)
        ));
    }
    r.line("");
    Ok(())
}

fn closed_forms(r: &mut Report) -> Result<(), Failure> {
    r.line("## Closed-form distances against BFS\n");
    r.line("| family | n | pairs | deviations |");
    r.line("|---|---|---|---|");
    for (family, ns) in [
        (ClosedFamily::Sunlet, 4..=20),
        (ClosedFamily::Prism, 6..=20),
    ] {
        for n in ns {
            let v = verify_instance(family, n)?;
            r.check(
                format!("closed form {family} n={n}"),
                v.deviations.is_empty(),
                format!(
                    "{} pairs, {} deviations",
                    v.pairs_checked,
                    v.deviations.len()
                ),
            );
            r.line(format!(
                "| {family} | {n} | {} | {} |",
                v.pairs_checked,
                v.deviations.len()
            ));
        }
    }
    r.line("");
    Ok(())
}

pub(crate) fn run(a: &ReproduceArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let start = Instant::now();
    let opts = a.limits.options(false);
    let mut r = Report::default();
    r.line("# Edge doubly resolving sets: reproduction report\n");
    fibers(&mut r)?;
    two_sets(&mut r)?;
    coordinates(&mut r)?;
    candidates(&mut r)?;
    sweeps(&mut r, &opts)?;
    closed_forms(&mut r)?;

    let failures: Vec<&Check> = r.checks.iter().filter(|c| !c.ok).collect();
    r.md.push_str("## Summary\n\n");
    if failures.is_empty() {
        writeln!(r.md, "All {} checks passed.", r.checks.len()).unwrap();
    } else {
        writeln!(
            r.md,
            "{} of {} checks failed:\n",
            failures.len(),
            r.checks.len()
        )
        .unwrap();
        for c in &failures {
            writeln!(r.md, "- {}: {}", c.name, c.detail).unwrap();
        }
    }
    let failed = failures.len();

    match &a.out {
        Some(path) => {
            std::fs::write(path, &r.md)?;
            writeln!(err, "wrote {}", path.display())?;
        }
        None if !a.output.json => out.write_all(r.md.as_bytes())?,
        None => {}
    }
    if a.output.json {
        let summary = Summary {
            command: "reproduce",
            checks: r.checks,
            failures: failed,
            elapsed_ms: (!a.output.no_timing).then(|| millis(start.elapsed())),
        };
        writeln!(out, "{}", serde_json::to_string(&summary)?)?;
    } else if a.out.is_some() {
        writeln!(out, "{} checks, {failed} failed", r.checks.len())?;
    }
    Ok(EXIT_OK)
}
