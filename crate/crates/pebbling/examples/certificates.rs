//! Prove pebbling-number bounds with weight functions instead of raw
//! search.
//!
//! A strategy is a subtree hung below the root whose weights at least
//! double toward the root (children of the root are exempt). Every
//! unsolvable configuration f obeys w(f) <= w(tree) for every valid
//! strategy, so maximizing w(f) subject to those inequalities over exact
//! rationals gives a certified upper bound: pi <= floor(optimum) + 1.
//! A searched unsolvable witness of matching weight pins the value.

use pebbling::certificate::{
    certify_rooted, decompose_nonbasic, lp_bound, ortho_chain_strategies, strategy_total,
    validate_strategy, Strategy, StrategyVerdict, Verdict,
};
use pebbling::families::{self, SquareKind};

const BUDGET: u64 = 10_000_000;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A hand-built strategy on the 6-cycle: one doubling path each way.
    let c6 = families::cycle(6)?;
    let left = Strategy::from_path(6, &[0, 1, 2, 3])?;
    let right = Strategy::from_path(6, &[0, 5, 4, 3])?;
    println!("two path strategies on C6, weights doubling toward the root:");
    for s in [&left, &right] {
        println!(
            "  verdict {:?}, total weight {}",
            validate_strategy(&c6, s),
            strategy_total(s)
        );
    }
    let bound = lp_bound(&c6, 0, &[left, right])?;
    println!(
        "  best unsolvable weight <= {}, so pi(C6, 0) <= {}",
        bound.lp_optimum, bound.upper
    );

    // Full certification = that upper bound + a searched witness.
    let cert = certify_rooted(&c6, 0, None, None, BUDGET)?;
    println!(
        "  certified: pi(C6, 0) in [{}, {}], verdict {:?}",
        cert.lower, cert.upper, cert.verdict
    );
    assert_eq!((cert.lower, cert.upper), (8, 8));
    assert_eq!(cert.verdict, Verdict::Exact);

    // The built-in strategies settle the ortho chain of 3 squares at 34.
    let o3 = families::square_chain(3, SquareKind::Ortho, false, false)?;
    let cert = certify_rooted(&o3, 3, Some(ortho_chain_strategies(3)?), None, BUDGET)?;
    println!("\northo chain of 3 squares, root 3:");
    println!(
        "  lp optimum {}, upper {}, witness weight {}, verdict {:?}",
        cert.lp_optimum,
        cert.upper,
        cert.lower_witness.as_ref().unwrap().weight,
        cert.verdict
    );
    assert_eq!(cert.upper, 34);

    // Certificates serialize to a stable JSON layout for diffing.
    let json = serde_json::to_string_pretty(&cert)?;
    println!("  certificate JSON is {} bytes", json.len());

    // Non-basic strategies (weights not a single doubling ladder) always
    // split into weighted basic ones that re-add to the original exactly.
    let strategies = ortho_chain_strategies(3)?;
    let parts = decompose_nonbasic(&o3, &strategies[0])?;
    println!("\ndecomposing the first ortho strategy:");
    for (coeff, part) in &parts {
        println!(
            "  {} x basic strategy of total {} ({} tree vertices)",
            coeff,
            strategy_total(part),
            part.tree_vertices().count()
        );
        assert_eq!(validate_strategy(&o3, part), StrategyVerdict::Basic);
    }
    Ok(())
}
