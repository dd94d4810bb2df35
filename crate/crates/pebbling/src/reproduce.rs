//! Tables that check every supported closed-form value against an
//! independent computation, one row per (family, parameters, quantity).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::certificate::{certify_rooted, ortho_chain_strategies, para_chain_strategies, Verdict};
use crate::error::{Error, Result};
use crate::families::{self, SquareKind};
use crate::formulas;
use crate::graph::Graph;
use crate::solver;

/// Fixed column order of the CSV emitted by [`rows`].
pub const CSV_HEADER: &str = "section,family,params,quantity,formula,computed,method,agree";

/// One comparison between a closed-form value and an independent computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    /// Table group: 2 = one-point gluings, 3 = chains, 4 = clusters and bounds.
    pub section: u8,
    pub family: String,
    /// Parameter assignments, `;`-separated so the CSV needs no quoting.
    pub params: String,
    /// Which invariant the row checks: `pi`, `pi_t`, `pi_star`, or `pi_star_2`.
    pub quantity: String,
    /// The closed-form prediction.
    pub formula: u64,
    /// The independently computed value.
    pub computed: u64,
    /// How `computed` was obtained: `search`, `certificate`, `formula`, `bound`.
    pub method: String,
    pub agree: bool,
}

impl Row {
    fn new(
        section: u8,
        family: &str,
        params: String,
        quantity: &str,
        formula: u64,
        computed: u64,
        method: &str,
    ) -> Row {
        Row {
            section,
            family: family.into(),
            params,
            quantity: quantity.into(),
            formula,
            computed,
            method: method.into(),
            agree: formula == computed,
        }
    }

    /// The row as one unquoted CSV line (no trailing newline).
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.section,
            self.family,
            self.params,
            self.quantity,
            self.formula,
            self.computed,
            self.method,
            self.agree
        )
    }
}

/// Which table sections to emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    Two,
    Three,
    Four,
    All,
}

impl Selection {
    fn wants(self, section: u8) -> bool {
        matches!(
            (self, section),
            (Selection::All, _) | (Selection::Two, 2) | (Selection::Three, 3) | (Selection::Four, 4)
        )
    }
}

impl FromStr for Selection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Selection> {
        match s {
            "2" => Ok(Selection::Two),
            "3" => Ok(Selection::Three),
            "4" => Ok(Selection::Four),
            "all" => Ok(Selection::All),
            other => Err(Error::InvalidParameter(format!(
                "unknown section {other:?}; expected 2, 3, 4, or all"
            ))),
        }
    }
}

impl fmt::Display for Selection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selection::Two => write!(f, "2"),
            Selection::Three => write!(f, "3"),
            Selection::Four => write!(f, "4"),
            Selection::All => write!(f, "all"),
        }
    }
}

fn searched_pi(g: &Graph, t: u32, budget: u64) -> Result<u64> {
    Ok(solver::pebbling_number(g, t, budget)?.value)
}

fn searched_opt(g: &Graph, cap: Option<u32>, budget: u64) -> Result<u64> {
    Ok(solver::optimal_pebbling(g, cap, budget)?.value)
}

/// Upper-meets-lower certification of one square chain at its canned root.
fn certified_chain_pi(n: usize, kind: SquareKind, budget: u64) -> Result<(u64, bool)> {
    let g = families::square_chain(n, kind, false, false)?;
    let (root, strategies) = match kind {
        SquareKind::Para => (0, para_chain_strategies(n)?),
        SquareKind::Ortho => (3, ortho_chain_strategies(n)?),
    };
    let cert = certify_rooted(&g, root, Some(strategies), None, budget)?;
    Ok((cert.upper, cert.verdict == Verdict::Exact))
}

/// Build the comparison table.
///
/// `max_n` caps the family size index `n` of the expensive search-backed
/// rows; ranges whose largest member is fast stay fixed. `budget` limits
/// every search; exceeding it aborts the table with a budget error.
pub fn rows(selection: Selection, max_n: usize, budget: u64) -> Result<Vec<Row>> {
    let mut out = Vec::new();
    if selection.wants(2) {
        section_two(&mut out, max_n, budget)?;
    }
    if selection.wants(3) {
        section_three(&mut out, max_n, budget)?;
    }
    if selection.wants(4) {
        section_four(&mut out, max_n, budget)?;
    }
    Ok(out)
}

/// Cycles and graphs glued at one shared vertex.
fn section_two(out: &mut Vec<Row>, max_n: usize, budget: u64) -> Result<()> {
    for m in 3..=8 {
        for t in 1..=2u32 {
            let g = families::cycle(m)?;
            out.push(Row::new(
                2,
                "cycle",
                format!("m={m};t={t}"),
                "pi_t",
                formulas::cycle_pi(m, t)?.value,
                searched_pi(&g, t, budget)?,
                "search",
            ));
        }
    }
    for n in 2..=3.min(max_n.max(2)) {
        let g = families::friendship(n, 3)?;
        out.push(Row::new(
            2,
            "friendship",
            format!("n={n};m=3"),
            "pi",
            formulas::friendship3_pi(n)?.value,
            searched_pi(&g, 1, budget)?,
            "search",
        ));
    }
    for n in 2..=3.min(max_n.max(2)) {
        let g = families::friendship(n, 4)?;
        out.push(Row::new(
            2,
            "friendship",
            format!("n={n};m=4"),
            "pi",
            formulas::fn4_suite(n)?.pi.value,
            searched_pi(&g, 1, budget)?,
            "search",
        ));
    }
    for n in 2..=4usize {
        let suite = formulas::fn4_suite(n)?;
        let g = families::friendship(n, 4)?;
        out.push(Row::new(
            2,
            "friendship",
            format!("n={n};m=4"),
            "pi_star",
            suite.pi_star.value,
            searched_opt(&g, None, budget)?,
            "search",
        ));
        out.push(Row::new(
            2,
            "friendship",
            format!("n={n};m=4"),
            "pi_star_2",
            suite.pi_star_2.value,
            searched_opt(&g, Some(2), budget)?,
            "search",
        ));
    }
    Ok(())
}

/// Chains of triangles and squares.
fn section_three(out: &mut Vec<Row>, max_n: usize, budget: u64) -> Result<()> {
    for n in 1..=3.min(max_n.max(1)) {
        let g = families::triangular_chain(n, false)?;
        out.push(Row::new(
            3,
            "tchain",
            format!("n={n}"),
            "pi",
            formulas::triangular_chain_pi(n, false)?.value,
            searched_pi(&g, 1, budget)?,
            "search",
        ));
    }
    for n in 1..=2.min(max_n.max(1)) {
        let g = families::triangular_chain(n, true)?;
        out.push(Row::new(
            3,
            "tchain",
            format!("n={n};pendant"),
            "pi",
            formulas::triangular_chain_pi(n, true)?.value,
            searched_pi(&g, 1, budget)?,
            "search",
        ));
    }
    for n in 1..=2.min(max_n.max(1)) {
        let g = families::square_chain(n, SquareKind::Para, false, false)?;
        out.push(Row::new(
            3,
            "sqchain",
            format!("n={n};kind=para"),
            "pi",
            formulas::square_chain_pi(n, SquareKind::Para, false)?.value,
            searched_pi(&g, 1, budget)?,
            "search",
        ));
    }
    {
        let g = families::square_chain(1, SquareKind::Para, true, false)?;
        out.push(Row::new(
            3,
            "sqchain",
            "n=1;kind=para;pendant".into(),
            "pi",
            formulas::square_chain_pi(1, SquareKind::Para, true)?.value,
            searched_pi(&g, 1, budget)?,
            "search",
        ));
    }
    if max_n >= 2 {
        let g = families::square_chain(2, SquareKind::Ortho, false, false)?;
        out.push(Row::new(
            3,
            "sqchain",
            "n=2;kind=ortho".into(),
            "pi",
            formulas::square_chain_pi(2, SquareKind::Ortho, false)?.value,
            searched_pi(&g, 1, budget)?,
            "search",
        ));
    }
    if max_n >= 3 {
        let (computed, exact) = certified_chain_pi(3, SquareKind::Ortho, budget)?;
        let mut row = Row::new(
            3,
            "sqchain",
            "n=3;kind=ortho".into(),
            "pi",
            formulas::square_chain_pi(3, SquareKind::Ortho, false)?.value,
            computed,
            "certificate",
        );
        row.agree &= exact;
        out.push(row);

        let (computed, exact) = certified_chain_pi(3, SquareKind::Para, budget)?;
        let mut row = Row::new(
            3,
            "sqchain",
            "n=3;kind=para".into(),
            "pi",
            formulas::square_chain_pi(3, SquareKind::Para, false)?.value,
            computed,
            "certificate",
        );
        row.agree &= exact;
        out.push(row);
    }
    Ok(())
}

/// Clique clusters and the composition bounds.
fn section_four(out: &mut Vec<Row>, max_n: usize, budget: u64) -> Result<()> {
    {
        let vals = formulas::qnm_pi(3, 3)?;
        let g = families::qnm(3, 3)?;
        out.push(Row::new(
            4,
            "qnm",
            "n=3;m=3".into(),
            "pi",
            vals.pi.value,
            searched_pi(&g, 1, budget)?,
            "search",
        ));
        out.push(Row::new(
            4,
            "qnm",
            "n=3;m=3".into(),
            "pi_star",
            vals.pi_star.value,
            searched_opt(&g, None, budget)?,
            "search",
        ));
    }
    {
        let vals = formulas::corona_complete_pi(3, 1)?;
        let g = families::corona(&families::complete(3)?, &families::complete(1)?)?;
        out.push(Row::new(
            4,
            "corona",
            "n=3;h=1".into(),
            "pi",
            vals.pi.value,
            searched_pi(&g, 1, budget)?,
            "search",
        ));
        out.push(Row::new(
            4,
            "corona",
            "n=3;h=1".into(),
            "pi_star",
            vals.pi_star.value,
            searched_opt(&g, None, budget)?,
            "search",
        ));
    }
    // Sharpness of the cut-vertex product bound on chains of squares.
    for n in 1..=2usize {
        let g = families::square_chain(n, SquareKind::Para, false, false)?;
        out.push(Row::new(
            4,
            "sqchain",
            format!("n={n};kind=para"),
            "pi",
            formulas::product_bound(&vec![4; n])?.value,
            searched_pi(&g, 1, budget)?,
            "search",
        ));
    }
    // Sharpness of the bridge-joined bound: for two squares joined by an
    // edge it meets the diameter lower bound, pinning the value exactly.
    {
        let g = families::square_chain(2, SquareKind::Para, false, true)?;
        out.push(Row::new(
            4,
            "sqchain",
            "n=2;kind=para;bridges".into(),
            "pi",
            formulas::link_bound(&[4, 4])?.value,
            formulas::lower_bounds(&g)?.value,
            "bound",
        ));
    }
    // Sharpness of the shared-vertex bound on bouquets of squares.
    for n in 2..=4.min(max_n.max(2)) {
        out.push(Row::new(
            4,
            "friendship",
            format!("n={n};m=4"),
            "pi",
            formulas::bouquet_bound(&vec![4; n])?.value,
            formulas::friendship_even_pi(n, 2)?.value,
            "formula",
        ));
    }
    Ok(())
}
