//! Compute pebbling numbers exactly and compare them with the closed
//! forms known for each family.
//!
//! The pebbling number is the least k such that every configuration of k
//! pebbles can deliver one to any requested root; the t-fold variant
//! demands t pebbles at the root.

use pebbling::families::{self, SquareKind};
use pebbling::formulas;
use pebbling::solver;

const BUDGET: u64 = 10_000_000;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Cycles: even ones cost t*2^n for C_{2n}; odd ones have their own form.
    println!("cycles, searched vs formula:");
    for m in [5, 6, 7] {
        for t in [1, 2] {
            let g = families::cycle(m)?;
            let searched = solver::pebbling_number(&g, t, BUDGET)?;
            let formula = formulas::cycle_pi(m, t)?;
            println!(
                "  pi_{t}(C{m}) = {} (formula {}), witness {:?}",
                searched.value,
                formula.value,
                searched.witness.counts()
            );
            assert_eq!(searched.value, formula.value);
        }
    }

    // Rooted values can differ by root: the friendship hub is the cheapest
    // root, the outer rim the dearest.
    let f = families::friendship(3, 4)?;
    let hub = solver::pebbling_number_rooted(&f, 0, 1, BUDGET)?;
    let global = solver::pebbling_number(&f, 1, BUDGET)?;
    println!("\nthree squares sharing a vertex (F_{{3,4}}):");
    println!("  rooted at the hub: {}", hub.value);
    println!(
        "  maximized over roots: {} (attained at vertex {})",
        global.value,
        global.root.unwrap()
    );
    assert_eq!(hub.value, formulas::friendship_hub_pi(3, 2)?.value);
    assert_eq!(global.value, formulas::fn4_suite(3)?.pi.value);

    // Chains of triangles and squares, against their closed forms.
    println!("\nchains:");
    for n in 1..=3 {
        let g = families::triangular_chain(n, false)?;
        let searched = solver::pebbling_number(&g, 1, BUDGET)?;
        println!(
            "  pi(T{n}) = {:<3} formula {}",
            searched.value,
            formulas::triangular_chain_pi(n, false)?.value
        );
        assert_eq!(searched.value, formulas::triangular_chain_pi(n, false)?.value);
    }
    for n in 1..=2 {
        let g = families::square_chain(n, SquareKind::Para, false, false)?;
        let searched = solver::pebbling_number(&g, 1, BUDGET)?;
        println!(
            "  pi(Q{n}) = {:<3} formula {}",
            searched.value,
            formulas::square_chain_pi(n, SquareKind::Para, false)?.value
        );
    }

    // Class 0 graphs attain the lower bound pi = |V|; others sit one above.
    println!("\nclassification:");
    let cube = families::hypercube(3)?;
    println!("  3-cube: pi = {}, order = {}, class = {:?}",
        solver::pebbling_number(&cube, 1, BUDGET)?.value,
        cube.order(),
        solver::classify(&cube, BUDGET)?
    );
    let f23 = families::friendship(2, 3)?;
    println!("  two triangles sharing a vertex: pi = {}, order = {}, class = {:?}",
        solver::pebbling_number(&f23, 1, BUDGET)?.value,
        f23.order(),
        solver::classify(&f23, BUDGET)?
    );
    Ok(())
}
