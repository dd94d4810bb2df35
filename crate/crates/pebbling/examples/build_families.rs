//! Construct every supported graph family and print its basic shape data,
//! then show the two serialization formats on one small example.

use pebbling::families::{self, SquareKind};
use pebbling::graph::Graph;
use pebbling::io::{export_graph, import_graph, Format};

fn describe(name: &str, g: &Graph) {
    println!(
        "{name:<28} order={:<3} edges={:<3} diameter={}",
        g.order(),
        g.size(),
        g.diameter().unwrap()
    );
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    describe("cycle C6", &families::cycle(6)?);
    describe("path P5", &families::path(5)?);
    describe("complete K5", &families::complete(5)?);
    describe("hypercube d=3", &families::hypercube(3)?);
    describe("friendship F_{3,3}", &families::friendship(3, 3)?);
    describe("friendship F_{3,4}", &families::friendship(3, 4)?);
    describe("triangle chain T3", &families::triangular_chain(3, false)?);
    describe("triangle chain T2+pendant", &families::triangular_chain(2, true)?);
    describe(
        "square chain Q3 (para)",
        &families::square_chain(3, SquareKind::Para, false, false)?,
    );
    describe(
        "square chain O3 (ortho)",
        &families::square_chain(3, SquareKind::Ortho, false, false)?,
    );
    describe(
        "bridged squares (n=2)",
        &families::square_chain(2, SquareKind::Para, false, true)?,
    );
    describe(
        "corona K3 with K2",
        &families::corona(&families::complete(3)?, &families::complete(2)?)?,
    );
    describe("clique cluster Q(3,3)", &families::qnm(3, 3)?);

    // Vertices carry optional labels; the friendship hub is pre-labeled.
    let f = families::friendship(2, 4)?;
    println!(
        "\nfriendship hub: vertex {} is labeled {:?}",
        f.vertex_by_label("hub").unwrap(),
        f.label(0).unwrap()
    );

    // Both formats round-trip exactly.
    let c4 = families::cycle(4)?;
    let json = export_graph(&c4, Format::Json);
    let dot = export_graph(&c4, Format::Dot);
    println!("\nC4 as JSON: {json}");
    println!("C4 as DOT:\n{dot}");
    let back = import_graph(&json, Format::Json)?;
    assert_eq!(back.edges(), c4.edges());
    let back = import_graph(&dot, Format::Dot)?;
    assert_eq!(back.order(), c4.order());
    println!("round-trips preserve the graph exactly");
    Ok(())
}
