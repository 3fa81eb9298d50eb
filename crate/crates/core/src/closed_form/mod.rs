//! Closed-form edge distances for sunlet and prism graphs, checked against BFS.
//!
//! Both families are edge-transitive enough that every edge distance follows
//! from the distances to a single base edge (`e_0` for the sunlet, `f_0` for
//! the prism) plus a translation rule per pair of edge classes. The base
//! distances come from the symbolic fiber rows in [`tables`], never from BFS,
//! so [`verify_instance`] is an honest comparison of the model against the
//! line-graph distances.

pub mod tables;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::ClosedFormError;
use crate::generators::{make_prism, make_sunlet, LabeledFamilyGraph};
use crate::metric::{Landmarks, Mode};

pub use tables::{coordinate_rows, minimal_candidate, sunlet_two_set_rows, TableRow, TwoSetRow};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeClass {
    E,
    F,
    G,
}

/// `e_i`, `f_i` or `g_i`, with the index reduced mod `n` where `n` is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeLabel {
    pub class: EdgeClass,
    pub index: usize,
}

impl EdgeLabel {
    pub fn e(index: usize) -> Self {
        EdgeLabel {
            class: EdgeClass::E,
            index,
        }
    }

    pub fn f(index: usize) -> Self {
        EdgeLabel {
            class: EdgeClass::F,
            index,
        }
    }

    pub fn g(index: usize) -> Self {
        EdgeLabel {
            class: EdgeClass::G,
            index,
        }
    }

    pub fn reduced(self, n: usize) -> Self {
        EdgeLabel {
            index: self.index % n,
            ..self
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.class {
            EdgeClass::E => 'e',
            EdgeClass::F => 'f',
            EdgeClass::G => 'g',
        };
        write!(f, "{c}{}", self.index)
    }
}

impl FromStr for EdgeLabel {
    type Err = ClosedFormError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ClosedFormError::InvalidLabel(s.to_string());
        let mut chars = s.chars();
        let class = match chars.next() {
            Some('e') => EdgeClass::E,
            Some('f') => EdgeClass::F,
            Some('g') => EdgeClass::G,
            _ => return Err(bad()),
        };
        let index = chars.as_str().parse().map_err(|_| bad())?;
        Ok(EdgeLabel { class, index })
    }
}

impl Serialize for EdgeLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The two families with a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClosedFamily {
    Sunlet,
    Prism,
}

impl ClosedFamily {
    pub fn name(self) -> &'static str {
        match self {
            ClosedFamily::Sunlet => "sunlet",
            ClosedFamily::Prism => "prism",
        }
    }

    /// Smallest `n` the closed form covers.
    pub fn min_n(self) -> usize {
        match self {
            ClosedFamily::Sunlet => 4,
            ClosedFamily::Prism => 6,
        }
    }

    pub fn base(self) -> EdgeLabel {
        match self {
            ClosedFamily::Sunlet => EdgeLabel::e(0),
            ClosedFamily::Prism => EdgeLabel::f(0),
        }
    }

    pub fn classes(self) -> &'static [EdgeClass] {
        match self {
            ClosedFamily::Sunlet => &[EdgeClass::E, EdgeClass::F],
            ClosedFamily::Prism => &[EdgeClass::E, EdgeClass::F, EdgeClass::G],
        }
    }

    /// Every label of the `n`-th member, class-major.
    pub fn labels(self, n: usize) -> Vec<EdgeLabel> {
        self.classes()
            .iter()
            .flat_map(|&class| (0..n).map(move |index| EdgeLabel { class, index }))
            .collect()
    }

    pub fn generate(self, n: usize) -> Result<LabeledFamilyGraph, ClosedFormError> {
        Ok(match self {
            ClosedFamily::Sunlet => make_sunlet(n)?,
            ClosedFamily::Prism => make_prism(n)?,
        })
    }

    pub(crate) fn check_n(self, n: usize) -> Result<(), ClosedFormError> {
        if n < self.min_n() {
            return Err(ClosedFormError::UnsupportedParameter {
                family: self.name(),
                n,
            });
        }
        Ok(())
    }
}

impl fmt::Display for ClosedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClosedFamily {
    type Err = ClosedFormError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sunlet" => Ok(ClosedFamily::Sunlet),
            "prism" => Ok(ClosedFamily::Prism),
            _ => Err(ClosedFormError::InvalidLabel(s.to_string())),
        }
    }
}

/// Distance from the base edge to every edge, read off the fiber rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseDistanceTable {
    family: ClosedFamily,
    n: usize,
    dist_to_base: BTreeMap<EdgeLabel, u32>,
}

/// Builds the base table for the `n`-th member from the symbolic fiber rows.
pub fn base_table(family: ClosedFamily, n: usize) -> Result<BaseDistanceTable, ClosedFormError> {
    family.check_n(n)?;
    let mut dist_to_base = BTreeMap::new();
    for (fiber, labels) in tables::fiber_rows(family, n) {
        for label in labels {
            let label = label.reduced(n);
            if let Some(&prev) = dist_to_base.get(&label) {
                if prev != fiber {
                    return Err(ClosedFormError::ConflictingBase(label.to_string()));
                }
            }
            dist_to_base.insert(label, fiber);
        }
    }
    let table = BaseDistanceTable {
        family,
        n,
        dist_to_base,
    };
    if let Some(missing) = family
        .labels(n)
        .into_iter()
        .find(|l| table.get(*l).is_none())
    {
        return Err(ClosedFormError::InvalidLabel(format!(
            "fiber rows never place {missing}"
        )));
    }
    Ok(table)
}

impl BaseDistanceTable {
    pub fn family(&self) -> ClosedFamily {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, label: EdgeLabel) -> Option<u32> {
        self.dist_to_base.get(&label.reduced(self.n)).copied()
    }

    /// Overrides one entry. Used to check that the harness notices bad tables.
    pub fn set(&mut self, label: EdgeLabel, value: u32) {
        self.dist_to_base.insert(label.reduced(self.n), value);
    }

    /// `S_i`: labels grouped by distance from the base edge.
    pub fn fibers(&self) -> BTreeMap<u32, Vec<EdgeLabel>> {
        let mut out: BTreeMap<u32, Vec<EdgeLabel>> = BTreeMap::new();
        for (&l, &d) in &self.dist_to_base {
            out.entry(d).or_default().push(l);
        }
        out
    }

    fn base(&self, label: EdgeLabel) -> i64 {
        i64::from(self.get(label).expect("base table covers every label"))
    }

    fn validate(&self, label: EdgeLabel) -> Result<EdgeLabel, ClosedFormError> {
        if !self.family.classes().contains(&label.class) {
            return Err(ClosedFormError::InvalidLabel(label.to_string()));
        }
        Ok(label.reduced(self.n))
    }

    /// Edge distance predicted by the closed form. Symmetric in its arguments.
    pub fn distance(&self, a: EdgeLabel, b: EdgeLabel) -> Result<u32, ClosedFormError> {
        let (a, b) = (self.validate(a)?, self.validate(b)?);
        let value = match self.family {
            ClosedFamily::Sunlet => self.sunlet(a, b),
            ClosedFamily::Prism => self.prism(a, b),
        };
        u32::try_from(value).map_err(|_| ClosedFormError::NegativeDistance {
            a: a.to_string(),
            b: b.to_string(),
            value,
        })
    }

    /// `m = |j - i|`, `k = floor(n/2)`; `near` is `m < k` for even `n` and
    /// `m <= k` for odd `n`.
    fn split(&self, i: usize, j: usize) -> (usize, usize, bool) {
        let m = i.abs_diff(j);
        let k = self.n / 2;
        let near = if self.n.is_multiple_of(2) {
            m < k
        } else {
            m <= k
        };
        (m, k, near)
    }

    fn sunlet(&self, a: EdgeLabel, b: EdgeLabel) -> i64 {
        use EdgeClass::{E, F};
        let (i, j) = (a.index, b.index);
        let (m, k, near) = self.split(i, j);
        let to_f = self.base(EdgeLabel::f(m));
        match (a.class, b.class) {
            (E, E) => self.base(EdgeLabel::e(m)),
            (F, F) if m == 0 => to_f - 1,
            (F, F) if near => to_f,
            (F, F) => to_f + 1,
            (E, F) if i <= j => to_f,
            // For even n the antipodal offset m = k is its own case.
            (E, F) if self.n.is_multiple_of(2) && m == k => to_f,
            (E, F) if near => to_f - 1,
            (E, F) => to_f + 1,
            (F, E) => self.sunlet(b, a),
            _ => unreachable!("validated sunlet labels"),
        }
    }

    fn prism(&self, a: EdgeLabel, b: EdgeLabel) -> i64 {
        use EdgeClass::{E, F, G};
        let (i, j) = (a.index, b.index);
        let (m, k, near) = self.split(i, j);
        let to_e = self.base(EdgeLabel::e(m));
        match (a.class, b.class) {
            (F, F) => self.base(EdgeLabel::f(m)),
            (E, E) | (G, G) if near => to_e - 1,
            (E, E) | (G, G) => to_e,
            (F, E) | (F, G) if i <= j => to_e,
            (F, E) | (F, G) if self.n.is_multiple_of(2) && m == k => to_e,
            (F, E) | (F, G) if near => to_e - 1,
            (F, E) | (F, G) => to_e + 1,
            (E, G) if m == 0 => to_e + 1,
            (E, G) if near => to_e,
            (E, G) => to_e + 1,
            (E, F) | (G, F) | (G, E) => self.prism(b, a),
        }
    }
}

/// Closed-form edge distance between two labels of the `n`-th family member.
pub fn closed_edge_distance(
    family: ClosedFamily,
    n: usize,
    a: EdgeLabel,
    b: EdgeLabel,
) -> Result<u32, ClosedFormError> {
    base_table(family, n)?.distance(a, b)
}

/// A pair where the closed form disagrees with BFS on the line graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaDeviation {
    pub family: ClosedFamily,
    pub n: usize,
    pub a: EdgeLabel,
    pub b: EdgeLabel,
    /// `None` when the closed form produced no distance (e.g. a negative value).
    pub formula_value: Option<i64>,
    pub bfs_value: u32,
}

/// Outcome of checking one family member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub family: ClosedFamily,
    pub n: usize,
    /// Unordered pairs of distinct edges. Self-pairs are checked but not counted.
    pub pairs_checked: usize,
    pub deviations: Vec<FormulaDeviation>,
}

/// Compares `table` with BFS distances on `graph` for every unordered pair of
/// labels, in both argument orders. Deviations come back sorted by label pair.
pub fn verify_table(
    table: &BaseDistanceTable,
    graph: &LabeledFamilyGraph,
) -> Result<VerifyReport, ClosedFormError> {
    let labels = table.family.labels(table.n);
    let dm = graph.graph.line_distances()?;
    let index = |l: EdgeLabel| {
        graph
            .line_index(&l.to_string())
            .ok_or_else(|| ClosedFormError::InvalidLabel(l.to_string()))
    };
    let indices = labels
        .iter()
        .map(|&l| index(l))
        .collect::<Result<Vec<_>, _>>()?;

    let mut deviations = Vec::new();
    let mut pairs_checked = 0;
    for (x, &a) in labels.iter().enumerate() {
        for (y, &b) in labels.iter().enumerate().skip(x) {
            if x != y {
                pairs_checked += 1;
            }
            let bfs = dm.get(indices[x], indices[y]);
            let orders: &[(EdgeLabel, EdgeLabel)] =
                if x == y { &[(a, b)] } else { &[(a, b), (b, a)] };
            for &(p, q) in orders {
                let formula = table.distance(p, q);
                if formula.as_ref().ok() != Some(&bfs) {
                    deviations.push(FormulaDeviation {
                        family: table.family,
                        n: table.n,
                        a: p,
                        b: q,
                        formula_value: match formula {
                            Ok(v) => Some(i64::from(v)),
                            Err(ClosedFormError::NegativeDistance { value, .. }) => Some(value),
                            Err(_) => None,
                        },
                        bfs_value: bfs,
                    });
                }
            }
        }
    }
    deviations.sort_by_key(|d| (d.a, d.b));
    Ok(VerifyReport {
        family: table.family,
        n: table.n,
        pairs_checked,
        deviations,
    })
}

pub fn verify_instance(family: ClosedFamily, n: usize) -> Result<VerifyReport, ClosedFormError> {
    let table = base_table(family, n)?;
    verify_table(&table, &family.generate(n)?)
}

/// All deviations over a range of `n`, in `n` order.
pub fn verify_family(
    family: ClosedFamily,
    ns: impl IntoIterator<Item = usize>,
) -> Result<Vec<FormulaDeviation>, ClosedFormError> {
    let mut out = Vec::new();
    for n in ns {
        out.extend(verify_instance(family, n)?.deviations);
    }
    Ok(out)
}

/// Labels whose BFS distance from the base edge differs from the base table:
/// `(label, table value, BFS value)`.
pub fn partition_mismatches(
    table: &BaseDistanceTable,
    graph: &LabeledFamilyGraph,
) -> Result<Vec<(EdgeLabel, u32, u32)>, ClosedFormError> {
    let base = table.family.base().to_string();
    let mut out = Vec::new();
    for label in table.family.labels(table.n) {
        let bfs = graph.labeled_edge_distance(&base, &label.to_string())?;
        let expected = table.get(label).expect("complete table");
        if bfs != expected {
            out.push((label, expected, bfs));
        }
    }
    Ok(out)
}

/// One row of a reproduced coordinate table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoordinateRow {
    /// Fiber index the symbolic row places the edge in.
    pub fiber: u32,
    /// Actual distance from the base edge.
    pub bfs_fiber: u32,
    pub label: EdgeLabel,
    /// Representation with respect to the candidate set, from BFS.
    pub computed: Vec<u32>,
    /// Symbolic row instantiated at `n` as printed, if a printed row covers it.
    pub printed: Option<Vec<i64>>,
    /// Symbolic row after corrections.
    pub expected: Vec<i64>,
    pub correction: Option<&'static str>,
}

impl CoordinateRow {
    pub fn matches(&self) -> bool {
        self.fiber == self.bfs_fiber
            && self
                .computed
                .iter()
                .map(|&c| i64::from(c))
                .eq(self.expected.iter().copied())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoordinateTable {
    pub family: ClosedFamily,
    pub n: usize,
    pub landmarks: Vec<EdgeLabel>,
    pub rows: Vec<CoordinateRow>,
}

impl CoordinateTable {
    /// Rows whose BFS values differ from the corrected symbolic row.
    pub fn mismatches(&self) -> Vec<&CoordinateRow> {
        self.rows.iter().filter(|r| !r.matches()).collect()
    }

    /// Rows where the printed row was corrected.
    pub fn corrections(&self) -> Vec<&CoordinateRow> {
        self.rows
            .iter()
            .filter(|r| r.correction.is_some())
            .collect()
    }

    /// Every edge of the family appears in exactly one row.
    pub fn covers_all_edges(&self) -> bool {
        let mut seen: Vec<EdgeLabel> = self.rows.iter().map(|r| r.label).collect();
        seen.sort();
        let mut all = self.family.labels(self.n);
        all.sort();
        seen == all
    }

    pub fn rows_distinct(&self) -> bool {
        let mut reps: Vec<&Vec<u32>> = self.rows.iter().map(|r| &r.computed).collect();
        reps.sort();
        reps.windows(2).all(|w| w[0] != w[1])
    }

    /// No two rows differ by a constant vector, i.e. the landmarks doubly
    /// resolve every pair. In particular no rows from fibers `i` and `j`
    /// differ by `(i - j, ..., i - j)`.
    pub fn no_constant_difference(&self) -> bool {
        let mut keys: Vec<Vec<i64>> = self
            .rows
            .iter()
            .map(|r| {
                let first = i64::from(r.computed[0]);
                r.computed.iter().map(|&c| i64::from(c) - first).collect()
            })
            .collect();
        keys.sort();
        keys.windows(2).all(|w| w[0] != w[1])
    }
}

/// Representations of every edge with respect to the family's minimal
/// candidate set, next to the symbolic rows instantiated at `n`.
pub fn reproduce_coordinate_table(
    family: ClosedFamily,
    n: usize,
) -> Result<CoordinateTable, ClosedFormError> {
    family.check_n(n)?;
    let graph = family.generate(n)?;
    let landmarks = minimal_candidate(family, n)?;
    let dm = graph.graph.line_distances()?;
    let index = |l: EdgeLabel| {
        graph
            .line_index(&l.to_string())
            .ok_or_else(|| ClosedFormError::InvalidLabel(l.to_string()))
    };
    let lm = Landmarks::new(
        landmarks
            .iter()
            .map(|&l| index(l))
            .collect::<Result<_, _>>()?,
        Mode::EdgeViaLineGraph,
    )
    .map_err(|e| ClosedFormError::InvalidLabel(e.to_string()))?;
    let base = index(family.base())?;

    let rows = coordinate_rows(family, n)?
        .into_iter()
        .map(|row| {
            let label = row.label.reduced(n);
            let at = index(label)?;
            Ok(CoordinateRow {
                fiber: row.fiber,
                bfs_fiber: dm.get(base, at),
                label,
                computed: lm.elements().iter().map(|&x| dm.get(at, x)).collect(),
                printed: row.printed.map(Vec::from),
                expected: row.expected.to_vec(),
                correction: row.correction,
            })
        })
        .collect::<Result<Vec<_>, ClosedFormError>>()?;
    Ok(CoordinateTable {
        family,
        n,
        landmarks,
        rows,
    })
}
