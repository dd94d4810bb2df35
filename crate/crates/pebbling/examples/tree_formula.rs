//! For trees the pebbling number has an exact closed form: direct every
//! edge toward the root, split the edges into the lexicographically
//! maximum set of directed paths, and charge t*2^l1 + sum 2^li - m + 1
//! over the path lengths l1 >= l2 >= ... >= lm.

use pebbling::families;
use pebbling::graph::Graph;
use pebbling::solver;
use pebbling::tree::{max_root_path_partition, tree_pebbling_number};

const BUDGET: u64 = 10_000_000;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A spider: three legs of lengths 3, 2, 2 meeting at vertex 0.
    let spider = families::spider(&[3, 2, 2])?;
    let partition = max_root_path_partition(&spider, 0)?;
    println!("spider with legs 3,2,2 rooted at the center:");
    println!("  path lengths: {:?}", partition.lengths);
    for path in &partition.paths {
        println!("  path {path:?}");
    }
    let formula = tree_pebbling_number(&spider, 0, 1)?;
    let searched = solver::pebbling_number_rooted(&spider, 0, 1, BUDGET)?;
    println!("  formula {} = searched {}", formula, searched.value);
    assert_eq!(formula, searched.value);

    // Re-rooting changes the partition and the value; a path rooted at one
    // end costs 2^(n-1).
    let p6 = families::path(6)?;
    for root in [0, 2] {
        let value = tree_pebbling_number(&p6, root, 1)?;
        let partition = max_root_path_partition(&p6, root)?;
        println!("\nP6 rooted at {root}: lengths {:?}, value {value}", partition.lengths);
        assert_eq!(value, solver::pebbling_number_rooted(&p6, root, 1, BUDGET)?.value);
    }

    // The t-fold demand scales only the longest path's term.
    let caterpillar = {
        let mut g = Graph::new(7);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5), (5, 6)] {
            g.add_edge(u, v)?;
        }
        g
    };
    println!("\ncaterpillar, 2-fold demand at each root, formula vs search:");
    for root in 0..caterpillar.order() {
        let formula = tree_pebbling_number(&caterpillar, root, 2)?;
        let searched = solver::pebbling_number_rooted(&caterpillar, root, 2, BUDGET)?;
        println!("  root {root}: {formula}");
        assert_eq!(formula, searched.value);
    }
    Ok(())
}
