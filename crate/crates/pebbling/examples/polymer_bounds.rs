//! Compose block graphs into polymers and bound the composite's pebbling
//! number from its blocks': a product bound for chains glued at cut
//! vertices, a 2^(k-1)-inflated product when blocks are joined by bridge
//! edges, and a cheaper sum-style bound when all blocks share one vertex.

use pebbling::families::{self, SquareKind};
use pebbling::formulas;
use pebbling::polymer::{chain_spec, compose_polymer, point_attach};
use pebbling::solver;

const BUDGET: u64 = 10_000_000;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A chain of 3 triangles built as a polymer, sharing corner vertices.
    let triangle = families::cycle(3)?;
    let chain = compose_polymer(&chain_spec(&triangle, 3, 2, 0))?;
    let exact = solver::pebbling_number(&chain, 1, BUDGET)?.value;
    let product = formulas::product_bound(&[3, 3, 3])?.value;
    println!("chain of 3 triangles: exact pi = {exact}, block product bound = {product}");
    assert!(exact <= product);
    assert_eq!(exact, formulas::triangular_chain_pi(3, false)?.value);

    // The product bound is tight for chains of squares glued at opposite
    // corners: 4^n exactly.
    for n in 1..=2usize {
        let g = families::square_chain(n, SquareKind::Para, false, false)?;
        let exact = solver::pebbling_number(&g, 1, BUDGET)?.value;
        let bound = formulas::product_bound(&vec![4; n])?.value;
        println!("chain of {n} squares: exact pi = {exact}, product bound = {bound} (tight)");
        assert_eq!(exact, bound);
    }

    // Bridged blocks pay an extra factor 2 per bridge; for two squares
    // joined by an edge the bound meets the diameter lower bound at 32.
    let bridged = families::square_chain(2, SquareKind::Para, false, true)?;
    let upper = formulas::link_bound(&[4, 4])?.value;
    let lower = formulas::lower_bounds(&bridged)?.value;
    println!("two squares joined by a bridge: {lower} <= pi <= {upper}");
    assert_eq!((lower, upper), (32, 32));

    // Blocks sharing a single vertex: pi1*pi2 + sum of the rest minus one
    // each. Tight for bouquets of squares at 3n + 10.
    for n in 2..=4usize {
        let bound = formulas::bouquet_bound(&vec![4; n])?.value;
        let exact = formulas::friendship_even_pi(n, 2)?.value;
        println!("bouquet of {n} squares: bound {bound} = exact {exact}");
        assert_eq!(bound, exact);
    }

    // Ad-hoc compositions work too: pin a triangle to one end of a path.
    let p4 = families::path(4)?;
    let tadpole = point_attach(&p4, 3, &triangle, 0)?;
    let exact = solver::pebbling_number(&tadpole, 1, BUDGET)?.value;
    let bound = formulas::product_bound(&[8, 3])?.value;
    let floor = formulas::lower_bounds(&tadpole)?.value;
    println!("path P4 with a triangle at the end: {floor} <= pi = {exact} <= {bound}");
    assert!(floor <= exact && exact <= bound);
    Ok(())
}
