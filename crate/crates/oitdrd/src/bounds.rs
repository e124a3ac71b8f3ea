//! Evaluates every supported inequality on a given graph in exact rational
//! arithmetic and reports lhs / rhs / holds / tight per bound.
//!
//! Row semantics: `applicable` records whether the inequality's hypotheses
//! hold for the graph (triangle-free, minimum degree, regularity, existence
//! of a total co-independent dominating set); `preconditions_met` records
//! whether every needed quantity was computed exactly (a solver stopped by
//! its time budget leaves the row without a verdict). `holds` compares
//! `lhs <= rhs`; `tight` means exact equality.

use num_rational::Rational64;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{classify_vertices, Graph};
use crate::solver::{
    domination_number, matching_number, solve_oidrd, solve_oitdrd, total_coindependent_number,
    SolveError, SolveOptions,
};
use crate::tree_dp::{solve_tree, TreeDpError};

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("bound report needs a connected graph")]
    NotConnected,
    #[error("bound report needs at least {need} vertices, got {got}")]
    TooSmall { need: usize, got: usize },
    #[error("tree bound report needs a tree")]
    NotATree,
    #[error(transparent)]
    Solve(#[from] SolveError),
}

impl From<TreeDpError> for BoundsError {
    fn from(e: TreeDpError) -> Self {
        match e {
            TreeDpError::NotATree => BoundsError::NotATree,
            TreeDpError::RootOutOfRange { .. } => BoundsError::NotATree,
        }
    }
}

/// One evaluated inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRow {
    pub name: &'static str,
    pub lhs: Option<Rational64>,
    pub rhs: Option<Rational64>,
    pub holds: Option<bool>,
    pub tight: Option<bool>,
    pub applicable: bool,
    pub preconditions_met: bool,
}

impl BoundRow {
    fn evaluated(name: &'static str, lhs: Rational64, rhs: Rational64) -> Self {
        BoundRow {
            name,
            lhs: Some(lhs),
            rhs: Some(rhs),
            holds: Some(lhs <= rhs),
            tight: Some(lhs == rhs),
            applicable: true,
            preconditions_met: true,
        }
    }

    fn inapplicable(name: &'static str) -> Self {
        BoundRow {
            name,
            lhs: None,
            rhs: None,
            holds: None,
            tight: None,
            applicable: false,
            preconditions_met: true,
        }
    }

    fn unknown(name: &'static str) -> Self {
        BoundRow {
            name,
            lhs: None,
            rhs: None,
            holds: None,
            tight: None,
            applicable: true,
            preconditions_met: false,
        }
    }
}

/// All bound rows evaluated on one graph.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub graph_id: String,
    pub rows: Vec<BoundRow>,
}

fn rational_cell(r: &Option<Rational64>) -> String {
    match r {
        None => String::new(),
        Some(r) if *r.denom() == 1 => r.numer().to_string(),
        Some(r) => format!("{}/{}", r.numer(), r.denom()),
    }
}

fn flag_cell(b: &Option<bool>) -> String {
    b.map(|x| x.to_string()).unwrap_or_default()
}

#[derive(Serialize)]
struct RowWire {
    name: &'static str,
    lhs: Option<String>,
    rhs: Option<String>,
    holds: Option<bool>,
    tight: Option<bool>,
    applicable: bool,
    preconditions_met: bool,
}

#[derive(Serialize)]
struct ReportWire {
    graph_id: String,
    rows: Vec<RowWire>,
}

impl BoundReport {
    /// CSV with the fixed header `name,lhs,rhs,holds,tight,applicable`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,lhs,rhs,holds,tight,applicable\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                row.name,
                rational_cell(&row.lhs),
                rational_cell(&row.rhs),
                flag_cell(&row.holds),
                flag_cell(&row.tight),
                row.applicable,
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let wire = ReportWire {
            graph_id: self.graph_id.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| RowWire {
                    name: r.name,
                    lhs: r.lhs.map(|v| rational_cell(&Some(v))),
                    rhs: r.rhs.map(|v| rational_cell(&Some(v))),
                    holds: r.holds,
                    tight: r.tight,
                    applicable: r.applicable,
                    preconditions_met: r.preconditions_met,
                })
                .collect(),
        };
        serde_json::to_string(&wire).expect("report serialization cannot fail")
    }

    /// True when some applicable, fully evaluated row fails.
    pub fn any_violation(&self) -> bool {
        self.rows.iter().any(|r| r.holds == Some(false))
    }
}

fn int(x: usize) -> Rational64 {
    Rational64::from_integer(x as i64)
}

/// Evaluates the general-graph bounds on a connected graph of order at
/// least two:
///
/// * `order_plus_matching`: oitdr <= p + matching number;
/// * `three_matching_triangle_free`: oitdr <= 3 * matching number
///   (triangle-free, minimum degree >= 2);
/// * `three_halves_order`: oitdr <= 3p/2;
/// * `oidr_below`: oidr <= oitdr;
/// * `twice_oidr_minus_gamma`: oitdr <= 2 oidr - gamma;
/// * `tcoi_plus_gamma_below`: tcoi + gamma <= oitdr;
/// * `degree_weighted_below`: (2p + (max_deg - 2) tcoi + gamma) / max_deg
///   <= oitdr;
/// * `regular_girth8`: oitdr <= 2 (p - 2m^2 + 3m - 1) on m-regular graphs
///   of girth at least 8.
pub fn bound_report(g: &Graph, opts: &SolveOptions) -> Result<BoundReport, BoundsError> {
    if g.n() < 2 {
        return Err(BoundsError::TooSmall { need: 2, got: g.n() });
    }
    if !g.is_connected() {
        return Err(BoundsError::NotConnected);
    }
    let p = g.n();
    let max_deg = g.max_degree();
    let alpha = matching_number(g)?;
    let gamma = domination_number(g)?;
    let tcoi = total_coindependent_number(g)?;
    let oitdr_res = solve_oitdrd(g, opts);
    let oidr_res = solve_oidrd(g, opts);
    let oitdr = oitdr_res.optimal.then_some(oitdr_res.weight).flatten();
    let oidr = oidr_res.optimal.then_some(oidr_res.weight).flatten();

    let triangle_free_min2 = !g.has_triangle() && g.min_degree() >= 2;
    let regular_g8 = g
        .regular_degree()
        .filter(|_| g.girth().is_some_and(|gi| gi >= 8));

    let upper = |name, applicable: bool, rhs: Rational64| match (applicable, oitdr) {
        (false, _) => BoundRow::inapplicable(name),
        (true, Some(w)) => BoundRow::evaluated(name, int(w), rhs),
        (true, None) => BoundRow::unknown(name),
    };

    let mut rows = Vec::with_capacity(8);
    rows.push(upper("order_plus_matching", true, int(p + alpha)));
    rows.push(upper(
        "three_matching_triangle_free",
        triangle_free_min2,
        int(3 * alpha),
    ));
    rows.push(upper(
        "three_halves_order",
        true,
        Rational64::new(3 * p as i64, 2),
    ));
    rows.push(match (oidr, oitdr) {
        (Some(a), Some(b)) => BoundRow::evaluated("oidr_below", int(a), int(b)),
        _ => BoundRow::unknown("oidr_below"),
    });
    rows.push(match (oidr, oitdr) {
        (Some(a), Some(b)) => {
            BoundRow::evaluated("twice_oidr_minus_gamma", int(b), int(2 * a) - int(gamma))
        }
        _ => BoundRow::unknown("twice_oidr_minus_gamma"),
    });
    rows.push(match tcoi {
        None => BoundRow::inapplicable("tcoi_plus_gamma_below"),
        Some(t) => match oitdr {
            Some(w) => BoundRow::evaluated("tcoi_plus_gamma_below", int(t + gamma), int(w)),
            None => BoundRow::unknown("tcoi_plus_gamma_below"),
        },
    });
    rows.push(match tcoi {
        None => BoundRow::inapplicable("degree_weighted_below"),
        Some(t) => match oitdr {
            Some(w) => {
                // max_deg >= 2 whenever tcoi exists on a connected graph
                let lhs = Rational64::new(
                    (2 * p + max_deg.saturating_sub(2) * t + gamma) as i64,
                    max_deg as i64,
                );
                BoundRow::evaluated("degree_weighted_below", lhs, int(w))
            }
            None => BoundRow::unknown("degree_weighted_below"),
        },
    });
    rows.push(match regular_g8 {
        None => BoundRow::inapplicable("regular_girth8"),
        Some(m) => {
            let rhs = 2 * (p as i64 - 2 * (m as i64) * (m as i64) + 3 * m as i64 - 1);
            match oitdr {
                Some(w) => BoundRow::evaluated("regular_girth8", int(w), Rational64::from_integer(rhs)),
                None => BoundRow::unknown("regular_girth8"),
            }
        }
    });

    Ok(BoundReport {
        graph_id: format!("graph(n={},m={})", g.n(), g.m()),
        rows,
    })
}

/// Tree-specific report: the stem bound and the 3p/2 characterization.
#[derive(Debug, Clone)]
pub struct TreeBoundReport {
    pub report: BoundReport,
    /// Structural recognizer verdict: is the tree a corona of a tree?
    pub corona_recognized: bool,
    /// Does `oitdr = 3p/2` hold exactly?
    pub three_halves_tight: bool,
    /// `three_halves_tight` iff `corona_recognized` (the characterization).
    pub equivalence_holds: bool,
}

/// Evaluates the tree bounds on a tree with at least three vertices:
///
/// * `stem_bound`: oitdr <= (6p + 3s)/5 with `s` the number of stems;
/// * `three_halves_tree`: oitdr <= 3p/2, tight exactly on coronas of
///   trees.
pub fn tree_bound_report(t: &Graph, _opts: &SolveOptions) -> Result<TreeBoundReport, BoundsError> {
    if t.n() < 3 {
        return Err(BoundsError::TooSmall { need: 3, got: t.n() });
    }
    let dp = solve_tree(t, 0)?; // errors on non-trees
    let w = dp.weight.expect("trees with n >= 2 are feasible");
    let p = t.n();
    let stems = classify_vertices(t).stem_count;

    let stem_rhs = Rational64::new((6 * p + 3 * stems) as i64, 5);
    let halves_rhs = Rational64::new(3 * p as i64, 2);
    let rows = vec![
        BoundRow::evaluated("stem_bound", int(w), stem_rhs),
        BoundRow::evaluated("three_halves_tree", int(w), halves_rhs),
    ];
    let corona_recognized = is_corona_of_tree(t);
    let three_halves_tight = int(w) == halves_rhs;
    Ok(TreeBoundReport {
        report: BoundReport {
            graph_id: format!("tree(n={p})"),
            rows,
        },
        corona_recognized,
        three_halves_tight,
        equivalence_holds: corona_recognized == three_halves_tight,
    })
}

/// Structural recognizer: a tree is the corona of a tree exactly when
/// every vertex is a leaf or a stem with exactly one leaf neighbor, the
/// stems induce a connected subgraph, and leaves and stems are equinumerous.
/// The two-vertex path is the corona of the single vertex.
pub fn is_corona_of_tree(t: &Graph) -> bool {
    if !t.is_tree() || t.n() < 2 || !t.n().is_multiple_of(2) {
        return false;
    }
    if t.n() == 2 {
        return true;
    }
    let n = t.n();
    let stems: Vec<usize> = (0..n).filter(|&v| t.degree(v) >= 2).collect();
    let leaf_count = n - stems.len();
    if leaf_count != stems.len() {
        return false;
    }
    for &s in &stems {
        let leaf_neighbors = t.neighbors(s).iter().filter(|&&u| t.degree(u) == 1).count();
        if leaf_neighbors != 1 {
            return false;
        }
    }
    // stems must induce a connected subgraph
    let in_stems: Vec<bool> = (0..n).map(|v| t.degree(v) >= 2).collect();
    let mut seen = vec![false; n];
    let mut stack = vec![stems[0]];
    seen[stems[0]] = true;
    let mut reached = 0;
    while let Some(v) = stack.pop() {
        reached += 1;
        for &u in t.neighbors(v) {
            if in_stems[u] && !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    reached == stems.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn seq() -> SolveOptions {
        SolveOptions::sequential()
    }

    fn row<'a>(report: &'a BoundReport, name: &str) -> &'a BoundRow {
        report.rows.iter().find(|r| r.name == name).unwrap()
    }

    #[test]
    fn c5_degree_weighted_bound_is_tight() {
        let c5 = families::cycle(5).unwrap();
        let report = bound_report(&c5, &seq()).unwrap();
        let r = row(&report, "degree_weighted_below");
        // (2*5 + 0*4 + 2)/2 = 6 = oitdr(C5)
        assert_eq!(r.lhs, Some(Rational64::from_integer(6)));
        assert_eq!(r.rhs, Some(Rational64::from_integer(6)));
        assert_eq!((r.holds, r.tight), (Some(true), Some(true)));
        assert!(!report.any_violation());
    }

    #[test]
    fn p4_order_plus_matching_is_tight() {
        let p4 = families::path(4).unwrap();
        let report = bound_report(&p4, &seq()).unwrap();
        let r = row(&report, "order_plus_matching");
        assert_eq!(r.lhs, Some(Rational64::from_integer(6)));
        assert_eq!(r.rhs, Some(Rational64::from_integer(6)));
        assert_eq!(r.tight, Some(true));
    }

    #[test]
    fn c6_triangle_free_row_holds_but_not_tight() {
        let c6 = families::cycle(6).unwrap();
        let report = bound_report(&c6, &seq()).unwrap();
        let r = row(&report, "three_matching_triangle_free");
        assert_eq!(r.lhs, Some(Rational64::from_integer(8)));
        assert_eq!(r.rhs, Some(Rational64::from_integer(9)));
        assert_eq!((r.holds, r.tight), (Some(true), Some(false)));
    }

    #[test]
    fn inapplicable_rows_are_marked() {
        let k3 = families::cycle(3).unwrap(); // triangle
        let report = bound_report(&k3, &seq()).unwrap();
        assert!(!row(&report, "three_matching_triangle_free").applicable);
        assert!(!row(&report, "regular_girth8").applicable);
        let p5 = families::path(5).unwrap(); // min degree 1
        let report = bound_report(&p5, &seq()).unwrap();
        assert!(!row(&report, "three_matching_triangle_free").applicable);

        let k2 = families::path(2).unwrap(); // tcoi infeasible
        let report = bound_report(&k2, &seq()).unwrap();
        assert!(!row(&report, "tcoi_plus_gamma_below").applicable);
        assert!(!row(&report, "degree_weighted_below").applicable);
        assert!(!report.any_violation());
    }

    #[test]
    fn regular_girth8_row_on_c8() {
        let c8 = families::cycle(8).unwrap();
        let report = bound_report(&c8, &seq()).unwrap();
        let r = row(&report, "regular_girth8");
        assert_eq!(r.rhs, Some(Rational64::from_integer(10)));
        assert_eq!(r.tight, Some(true));
    }

    #[test]
    fn all_bounds_hold_on_small_connected_graphs() {
        for n in 2..=5 {
            for g in families::all_connected(n).unwrap() {
                let report = bound_report(&g, &seq()).unwrap();
                assert!(!report.any_violation(), "n={n} {:?}\n{}", g.edges(), report.to_csv());
            }
        }
    }

    #[test]
    fn tree_report_examples() {
        let ds = families::double_star(2, 3).unwrap();
        let rep = tree_bound_report(&ds, &seq()).unwrap();
        let r = row(&rep.report, "stem_bound");
        assert_eq!(r.lhs, Some(Rational64::from_integer(6)));
        assert_eq!(r.rhs, Some(Rational64::new(48, 5))); // 9.6
        assert_eq!(r.holds, Some(true));
        assert!(!rep.corona_recognized);

        let p4 = families::path(4).unwrap(); // Cor(P2)
        let rep = tree_bound_report(&p4, &seq()).unwrap();
        let r = row(&rep.report, "stem_bound");
        assert_eq!(r.lhs, Some(Rational64::from_integer(6)));
        assert_eq!(r.rhs, Some(Rational64::from_integer(6)));
        assert_eq!(r.tight, Some(true));
        assert!(rep.corona_recognized && rep.three_halves_tight && rep.equivalence_holds);

        let star = families::star(5).unwrap(); // K_{1,4}
        let rep = tree_bound_report(&star, &seq()).unwrap();
        let r = row(&rep.report, "stem_bound");
        assert_eq!(r.lhs, Some(Rational64::from_integer(4)));
        assert_eq!(r.rhs, Some(Rational64::new(33, 5))); // 6.6
        assert_eq!((r.holds, r.tight), (Some(true), Some(false)));
        assert!(!rep.corona_recognized && rep.equivalence_holds);
    }

    #[test]
    fn corona_recognizer_cases() {
        assert!(is_corona_of_tree(&families::path(2).unwrap()));
        assert!(is_corona_of_tree(&families::path(4).unwrap()));
        assert!(is_corona_of_tree(&families::corona(&families::path(3).unwrap())));
        assert!(is_corona_of_tree(&families::corona(&families::star(4).unwrap())));
        assert!(!is_corona_of_tree(&families::path(3).unwrap()));
        assert!(!is_corona_of_tree(&families::path(6).unwrap()));
        assert!(!is_corona_of_tree(&families::star(4).unwrap()));
        assert!(!is_corona_of_tree(&families::double_star(2, 2).unwrap()));
        assert!(!is_corona_of_tree(&families::cycle(4).unwrap()));
    }

    #[test]
    fn csv_shape_is_stable() {
        let c5 = families::cycle(5).unwrap();
        let report = bound_report(&c5, &seq()).unwrap();
        let csv = report.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "name,lhs,rhs,holds,tight,applicable");
        assert_eq!(report.rows.len(), 8);
        assert_eq!(csv.lines().count(), 9);
        let halves = csv.lines().find(|l| l.starts_with("three_halves_order")).unwrap();
        assert_eq!(halves, "three_halves_order,6,15/2,true,false,true");
    }

    #[test]
    fn preconditions_errors() {
        assert!(matches!(
            bound_report(&families::path(1).unwrap(), &seq()),
            Err(BoundsError::TooSmall { .. })
        ));
        let two_parts = crate::graph::Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            bound_report(&two_parts, &seq()),
            Err(BoundsError::NotConnected)
        ));
        assert!(matches!(
            tree_bound_report(&families::cycle(5).unwrap(), &seq()),
            Err(BoundsError::NotATree)
        ));
    }
}
