//! Rebuild the full comparison table: every supported closed-form value
//! checked against an independent computation (exhaustive search where
//! feasible, upper-meets-lower certification for the larger chains).
//!
//! The same table is available from the command line as
//! `pebble reproduce --section all`.

use pebbling::reproduce::{rows, Selection, CSV_HEADER};

const BUDGET: u64 = 10_000_000;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let table = rows(Selection::All, 4, BUDGET)?;
    println!("{CSV_HEADER}");
    for row in &table {
        println!("{}", row.csv_line());
    }
    let disagreements = table.iter().filter(|r| !r.agree).count();
    println!(
        "\n{} rows, {} disagreements",
        table.len(),
        disagreements
    );
    assert_eq!(disagreements, 0, "a formula failed its independent check");
    Ok(())
}
