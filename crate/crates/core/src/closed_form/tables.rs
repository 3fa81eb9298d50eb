//! Symbolic table rows, instantiated at a concrete `n` (with `k = floor(n/2)`).
//!
//! Each coordinate row carries the printed template value and the corrected
//! value; they differ only where a correction note is attached. The
//! corrections are listed in `docs/table-corrections.md`.

use super::{ClosedFamily, EdgeLabel};
use crate::error::ClosedFormError;

/// Distance fibers `S_i` of the base edge.
pub(crate) fn fiber_rows(family: ClosedFamily, n: usize) -> Vec<(u32, Vec<EdgeLabel>)> {
    use EdgeLabel as L;
    let k = n / 2;
    let even = n.is_multiple_of(2);
    let mut rows = Vec::new();
    match family {
        ClosedFamily::Sunlet => {
            rows.push((0, vec![L::e(0)]));
            for i in 1..=k {
                rows.push((
                    i as u32,
                    vec![L::f(i - 1), L::e(i), L::f(n - i), L::e(n - i)],
                ));
            }
            if even {
                rows.push((k as u32, vec![L::f(k - 1), L::f(k), L::e(k)]));
            } else {
                rows.push((
                    k as u32,
                    vec![L::f(k - 1), L::e(k), L::f(k + 1), L::e(k + 1)],
                ));
                rows.push((k as u32 + 1, vec![L::f(k)]));
            }
        }
        ClosedFamily::Prism => {
            rows.push((0, vec![L::f(0)]));
            rows.push((1, vec![L::e(0), L::g(0), L::e(n - 1), L::g(n - 1)]));
            for i in 2..=k {
                rows.push((
                    i as u32,
                    vec![
                        L::f(i - 1),
                        L::e(i - 1),
                        L::g(i - 1),
                        L::f(n + 1 - i),
                        L::e(n - i),
                        L::g(n - i),
                    ],
                ));
            }
            if even {
                rows.push((k as u32 + 1, vec![L::f(k)]));
            } else {
                rows.push((k as u32 + 1, vec![L::f(k), L::e(k), L::g(k), L::f(k + 1)]));
            }
        }
    }
    rows
}

/// The three-element edge set shown to doubly resolve the `n`-th member.
pub fn minimal_candidate(
    family: ClosedFamily,
    n: usize,
) -> Result<Vec<EdgeLabel>, ClosedFormError> {
    use EdgeLabel as L;
    family.check_n(n)?;
    let k = n / 2;
    let even = n.is_multiple_of(2);
    let set = match (family, even) {
        (ClosedFamily::Sunlet, true) => vec![L::e(0), L::e(1), L::e(k)],
        (ClosedFamily::Sunlet, false) => vec![L::e(0), L::e(1), L::e(k + 1)],
        (ClosedFamily::Prism, true) => vec![L::e(0), L::e(k - 1), L::f(k + 1)],
        (ClosedFamily::Prism, false) => vec![L::e(0), L::e(k), L::g((k + 2) % n)],
    };
    Ok(set)
}

/// One row of a coordinate table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub fiber: u32,
    pub label: EdgeLabel,
    /// Printed template at this `n`; `None` when no printed case applies.
    pub printed: Option<[i64; 3]>,
    pub expected: [i64; 3],
    pub correction: Option<&'static str>,
}

fn row(fiber: usize, label: EdgeLabel, v: [i64; 3]) -> TableRow {
    TableRow {
        fiber: fiber as u32,
        label,
        printed: Some(v),
        expected: v,
        correction: None,
    }
}

impl TableRow {
    fn corrected(mut self, printed: Option<[i64; 3]>, note: &'static str) -> Self {
        self.printed = printed;
        self.correction = Some(note);
        self
    }
}

pub const SUNLET_F0_SECOND: &str =
    "second coordinate printed as i-1 = 0 at i = 1; f_0 meets e_1, so the distance is 1";
pub const SUNLET_E0_LETTER: &str = "first coordinate printed as the letter o; read as 0";
pub const SUNLET_ROW_LABEL: &str =
    "row label printed as e_{n-1} for every i; the values are those of e_{n-i}";
pub const PRISM_G_FIRST: &str =
    "first coordinate printed as i for i < k; g_{n-i} is at distance i+1 from e_0";
pub const PRISM_E_GUARD: &str =
    "printed as (2, k-i, k-2) under the guard k < 3, which never applies; for k > 3 the row is (2, k-1, k-2)";

/// Coordinate rows for the family's minimal candidate set, in table order.
pub fn coordinate_rows(family: ClosedFamily, n: usize) -> Result<Vec<TableRow>, ClosedFormError> {
    family.check_n(n)?;
    let k = n / 2;
    Ok(match (family, n.is_multiple_of(2)) {
        (ClosedFamily::Sunlet, true) => sunlet_even(n, k),
        (ClosedFamily::Sunlet, false) => sunlet_odd(n, k),
        (ClosedFamily::Prism, true) => prism_even(n, k),
        (ClosedFamily::Prism, false) => prism_odd(n, k),
    })
}

// Candidate {e_0, e_1, e_k}.
fn sunlet_even(n: usize, k: usize) -> Vec<TableRow> {
    use EdgeLabel as L;
    let ki = k as i64;
    let mut rows = vec![row(0, L::e(0), [0, 1, ki])];
    for i in 1..k {
        let ii = i as i64;
        let mut f = row(i, L::f(i - 1), [ii, ii - 1, ki + 1 - ii]);
        if i == 1 {
            f = TableRow {
                expected: [1, 1, ki],
                ..f
            }
            .corrected(Some([1, 0, ki]), SUNLET_F0_SECOND);
        }
        rows.push(f);
        rows.push(row(i, L::e(i), [ii, ii - 1, ki - ii]));
        rows.push(row(i, L::f(n - i), [ii, ii + 1, ki + 1 - ii]));
        rows.push(row(i, L::e(n - i), [ii, ii + 1, ki - ii]));
    }
    rows.push(row(k, L::f(k - 1), [ki, ki - 1, 1]));
    rows.push(row(k, L::f(k), [ki, ki, 1]));
    rows.push(row(k, L::e(k), [ki, ki - 1, 0]));
    rows
}

// Candidate {e_0, e_1, e_{k+1}}.
fn sunlet_odd(n: usize, k: usize) -> Vec<TableRow> {
    use EdgeLabel as L;
    let ki = k as i64;
    let mut rows = vec![row(0, L::e(0), [0, 1, ki]).corrected(None, SUNLET_E0_LETTER)];
    for i in 1..k {
        let ii = i as i64;
        let mut f = row(i, L::f(i - 1), [ii, ii - 1, ki + 2 - ii]);
        if i == 1 {
            f = TableRow {
                expected: [1, 1, ki + 1],
                ..f
            }
            .corrected(Some([1, 0, ki + 1]), SUNLET_F0_SECOND);
        }
        rows.push(f);
        rows.push(row(i, L::e(i), [ii, ii - 1, ki + 1 - ii]));
        rows.push(row(i, L::f(n - i), [ii, ii + 1, ki + 1 - ii]));
        let e = row(i, L::e(n - i), [ii, ii + 1, ki - ii]);
        rows.push(if i == 1 {
            e
        } else {
            let printed = e.printed;
            e.corrected(printed, SUNLET_ROW_LABEL)
        });
    }
    rows.push(row(k, L::f(k - 1), [ki, ki - 1, 2]));
    rows.push(row(k, L::e(k), [ki, ki - 1, 1]));
    rows.push(row(k, L::f(k + 1), [ki, ki + 1, 1]));
    rows.push(row(k, L::e(k + 1), [ki, ki, 0]));
    rows.push(row(k + 1, L::f(k), [ki + 1, ki, 1]));
    rows
}

// Candidate {e_0, e_{k-1}, f_{k+1}}.
fn prism_even(n: usize, k: usize) -> Vec<TableRow> {
    use EdgeLabel as L;
    let ki = k as i64;
    let mut rows = vec![
        row(0, L::f(0), [1, ki, ki]),
        row(1, L::e(0), [0, ki - 1, ki]),
        row(1, L::g(0), [2, ki, ki]),
        row(1, L::e(n - 1), [1, ki, ki - 1]),
        row(1, L::g(n - 1), [2, ki + 1, ki - 1]),
        row(2, L::f(1), [1, ki - 1, ki + 1]),
        row(2, L::e(1), [1, ki - 2, ki]),
        row(2, L::g(1), [2, ki - 1, ki]),
        row(2, L::f(n - 1), [2, ki, ki - 1]),
        row(2, L::e(n - 2), [2, ki - 1, ki - 2]),
        row(2, L::g(n - 2), [3, ki, ki - 2]),
    ];
    for i in 3..=k {
        let ii = i as i64;
        let last = i == k;
        rows.push(row(i, L::f(i - 1), [ii - 1, ki + 1 - ii, ki + 3 - ii]));
        rows.push(row(i, L::e(i - 1), [ii - 1, ki - ii, ki + 2 - ii]));
        rows.push(if last {
            row(i, L::g(i - 1), [ki, 2, 2])
        } else {
            row(i, L::g(i - 1), [ii, ki + 1 - ii, ki + 2 - ii])
        });
        rows.push(if last {
            row(i, L::f(n + 1 - i), [ki, 2, 0])
        } else {
            row(i, L::f(n + 1 - i), [ii, ki + 2 - ii, ki + 1 - ii])
        });
        rows.push(if last {
            row(i, L::e(n - i), [ki, 1, 1])
        } else {
            row(i, L::e(n - i), [ii, ki + 1 - ii, ki - ii])
        });
        rows.push(if last {
            row(i, L::g(n - i), [ki + 1, 2, 1])
        } else {
            row(i, L::g(n - i), [ii + 1, ki + 2 - ii, ki - ii])
                .corrected(Some([ii, ki + 2 - ii, ki - ii]), PRISM_G_FIRST)
        });
    }
    rows.push(row(k + 1, L::f(k), [ki, 1, 2]));
    rows
}

// Candidate {e_0, e_k, g_{k+2}}.
fn prism_odd(n: usize, k: usize) -> Vec<TableRow> {
    use EdgeLabel as L;
    let ki = k as i64;
    let e_n2 = if k == 3 {
        row(2, L::e(n - 2), [2, 2, 2])
    } else {
        row(2, L::e(n - 2), [2, ki - 1, ki - 2]).corrected(None, PRISM_E_GUARD)
    };
    let mut rows = vec![
        row(0, L::f(0), [1, ki + 1, ki - 1]),
        row(1, L::e(0), [0, ki, ki]),
        row(1, L::g(0), [2, ki + 1, ki - 1]),
        row(1, L::e(n - 1), [1, ki, ki - 1]),
        row(1, L::g(n - 1), [2, ki + 1, ki - 2]),
        row(2, L::f(1), [1, ki, ki]),
        row(2, L::e(1), [1, ki - 1, ki + 1]),
        row(2, L::g(1), [2, ki, ki]),
        row(2, L::f(n - 1), [2, ki, ki - 2]),
        e_n2,
        row(2, L::g(n - 2), [3, ki, ki - 3]),
    ];
    for i in 3..=k {
        let ii = i as i64;
        rows.push(row(i, L::f(i - 1), [ii - 1, ki + 2 - ii, ki + 4 - ii]));
        rows.push(row(i, L::e(i - 1), [ii - 1, ki + 1 - ii, ki + 4 - ii]));
        rows.push(row(i, L::g(i - 1), [ii, ki + 2 - ii, ki + 3 - ii]));
        rows.push(if i == k {
            row(i, L::f(n + 1 - i), [ki, 2, 1])
        } else {
            row(i, L::f(n + 1 - i), [ii, ki + 2 - ii, ki - ii])
        });
        rows.push(if i == k {
            row(i, L::e(n - i), [ki, 1, 2])
        } else if i + 1 == k {
            row(i, L::e(n - i), [ii, 2, 2])
        } else {
            row(i, L::e(n - i), [ii, ki + 1 - ii, ki - ii])
        });
        rows.push(if i == k {
            row(i, L::g(n - i), [ki + 1, 2, 1])
        } else {
            row(i, L::g(n - i), [ii + 1, ki + 2 - ii, ki - 1 - ii])
        });
    }
    rows.push(row(k + 1, L::f(k), [ki, 1, 3]));
    rows.push(row(k + 1, L::e(k), [ki, 0, 3]));
    rows.push(row(k + 1, L::g(k), [ki + 1, 2, 2]));
    rows.push(row(k + 1, L::f(k + 1), [ki + 1, 1, 2]));
    rows
}

/// A family of two-element candidate sets of the sunlet `S_{2k}` together with
/// one pair of edges none of them doubly resolves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSetRow {
    pub condition: &'static str,
    pub candidates: Vec<[EdgeLabel; 2]>,
    pub witness: [EdgeLabel; 2],
}

/// The seven parametric two-element candidate families for even `n`.
pub fn sunlet_two_set_rows(n: usize) -> Result<Vec<TwoSetRow>, ClosedFormError> {
    use EdgeLabel as L;
    if n < 4 || !n.is_multiple_of(2) {
        return Err(ClosedFormError::UnsupportedParameter {
            family: "sunlet (even n)",
            n,
        });
    }
    let k = n / 2;
    let r = |condition, candidates: Vec<[L; 2]>, witness| TwoSetRow {
        condition,
        candidates,
        witness,
    };
    Ok(vec![
        r(
            "{e0, ei}, 0 < i < k",
            (1..k).map(|i| [L::e(0), L::e(i)]).collect(),
            [L::e(0), L::e(n - 1)],
        ),
        r(
            "{e0, ei}, k < i <= n-1",
            (k + 1..n).map(|i| [L::e(0), L::e(i)]).collect(),
            [L::e(k), L::e(k + 1)],
        ),
        r(
            "{e0, fi}, 0 <= i < k",
            (0..k).map(|i| [L::e(0), L::f(i)]).collect(),
            [L::e(0), L::f(n - 1)],
        ),
        r(
            "{e0, fi}, k <= i <= n-1",
            (k..n).map(|i| [L::e(0), L::f(i)]).collect(),
            [L::e(0), L::f(0)],
        ),
        r(
            "{f0, fi}, 1 <= i < k",
            (1..k).map(|i| [L::f(0), L::f(i)]).collect(),
            [L::e(k), L::f(k)],
        ),
        r("{f0, fk}", vec![[L::f(0), L::f(k)]], [L::e(0), L::e(1)]),
        r(
            "{f0, fi}, k < i <= n-1",
            (k + 1..n).map(|i| [L::f(0), L::f(i)]).collect(),
            [L::e(1), L::f(1)],
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_cover_each_edge_once() {
        for n in 4..=20 {
            let rows = coordinate_rows(ClosedFamily::Sunlet, n).unwrap();
            assert_eq!(rows.len(), 2 * n);
        }
        for n in 6..=20 {
            let rows = coordinate_rows(ClosedFamily::Prism, n).unwrap();
            assert_eq!(rows.len(), 3 * n);
        }
    }

    #[test]
    fn fiber_rows_match_known_sets() {
        let rows = fiber_rows(ClosedFamily::Sunlet, 5);
        assert_eq!(rows.last().unwrap(), &(3, vec![EdgeLabel::f(2)]));
        let rows = fiber_rows(ClosedFamily::Prism, 6);
        assert_eq!(rows.last().unwrap(), &(4, vec![EdgeLabel::f(3)]));
    }

    #[test]
    fn two_set_rows_need_even_n() {
        assert!(sunlet_two_set_rows(9).is_err());
        assert!(sunlet_two_set_rows(2).is_err());
        let rows = sunlet_two_set_rows(8).unwrap();
        assert_eq!(rows.len(), 7);
        assert_eq!(rows[5].candidates, vec![[EdgeLabel::f(0), EdgeLabel::f(4)]]);
    }

    #[test]
    fn candidates() {
        let c = minimal_candidate(ClosedFamily::Prism, 9).unwrap();
        assert_eq!(c, vec![EdgeLabel::e(0), EdgeLabel::e(4), EdgeLabel::g(6)]);
        assert!(minimal_candidate(ClosedFamily::Sunlet, 3).is_err());
    }
}
