//! Decide whether configurations can deliver pebbles to a target, and
//! replay the witnessing move sequences.
//!
//! A move removes two pebbles from a vertex and places one on a chosen
//! neighbor; a configuration is t-solvable for a root when some sequence
//! of moves puts t pebbles there.

use pebbling::config::Configuration;
use pebbling::families;
use pebbling::solver::{is_solvable, is_solvable_all_targets, solve_with_moves};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p4 = families::path(4)?;

    // 8 pebbles on the far end of P4 are exactly enough to reach vertex 0.
    let enough = Configuration::from_pairs(4, &[(3, 8)])?;
    let short = Configuration::from_pairs(4, &[(3, 7)])?;
    println!("P4, 8 pebbles at distance 3:  solvable = {}", is_solvable(&p4, &enough, 0, 1)?);
    println!("P4, 7 pebbles at distance 3:  solvable = {}", is_solvable(&p4, &short, 0, 1)?);

    // The solver can produce the actual moves, each one (from, to), and
    // replay them with legality checks at every step.
    let moves = solve_with_moves(&p4, &enough, 0, 1)?.expect("solvable");
    println!("a witnessing sequence: {:?}", moves.0);
    let end = moves.replay(&p4, &enough)?;
    assert!(end.counts()[0] >= 1);
    println!("replay ends with {} pebble(s) on the root", end.counts()[0]);

    // Delivering two pebbles to a cycle's root: weight alone does not
    // decide it. A split pile of 8 fails where one more pebble succeeds.
    let c5 = families::cycle(5)?;
    let split_eight = Configuration::from_pairs(5, &[(2, 1), (3, 7)])?;
    let nine = Configuration::from_pairs(5, &[(2, 2), (3, 7)])?;
    println!(
        "\nC5, pebbles (1,7) on the far pair: 2-solvable = {}",
        is_solvable(&c5, &split_eight, 0, 2)?
    );
    println!(
        "C5, pebbles (2,7) on the far pair: 2-solvable = {}",
        is_solvable(&c5, &nine, 0, 2)?
    );
    assert!(!is_solvable(&c5, &split_eight, 0, 2)?);

    // A configuration can be solvable for every root at once.
    let two_twos = Configuration::from_pairs(5, &[(0, 2), (2, 2)])?;
    println!(
        "\nC5 with 2+2 pebbles on nearly antipodal vertices: every root reachable = {}",
        is_solvable_all_targets(&c5, &two_twos)?
    );
    Ok(())
}
