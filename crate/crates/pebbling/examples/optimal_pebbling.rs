//! The optimal pebbling number: instead of defending against the worst
//! configuration, pick the best one. Optionally cap how many pebbles any
//! single vertex may hold.

use pebbling::families;
use pebbling::formulas;
use pebbling::solver::optimal_pebbling;

const BUDGET: u64 = 10_000_000;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Four pebbles on one square's far corner cover a whole bouquet of
    // squares, however many there are.
    println!("bouquets of n squares sharing one vertex:");
    for n in 2..=4 {
        let g = families::friendship(n, 4)?;
        let free = optimal_pebbling(&g, None, BUDGET)?;
        let capped = optimal_pebbling(&g, Some(2), BUDGET)?;
        let suite = formulas::fn4_suite(n)?;
        println!(
            "  n={n}: unrestricted = {} (formula {}), per-vertex cap 2 = {} (formula {})",
            free.value, suite.pi_star.value, capped.value, suite.pi_star_2.value
        );
        println!(
            "        best configurations: {:?} and {:?}",
            free.witness.counts(),
            capped.witness.counts()
        );
        assert_eq!(free.value, suite.pi_star.value);
        assert_eq!(capped.value, suite.pi_star_2.value);
    }

    // The cap can never help: it only restricts the choices.
    let c4 = families::cycle(4)?;
    let free = optimal_pebbling(&c4, None, BUDGET)?;
    let capped = optimal_pebbling(&c4, Some(1), BUDGET)?;
    println!("\nC4: unrestricted = {}, all-distinct cap 1 = {}", free.value, capped.value);
    assert!(capped.value >= free.value);

    // Clique clusters: four pebbles always suffice once the core is K_3
    // or larger.
    let q = families::qnm(3, 3)?;
    let free = optimal_pebbling(&q, None, BUDGET)?;
    println!(
        "\nQ(3,3): optimal = {} (formula {}), configuration {:?}",
        free.value,
        formulas::qnm_pi(3, 3)?.pi_star.value,
        free.witness.counts()
    );
    Ok(())
}
