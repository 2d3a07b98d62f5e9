//! Two different graphs on the vertices of a 4-diagram with the same
//! connected components describe the same diagram.

use partition_algebra::Diagram;

fn main() -> partition_algebra::Result<()> {
    // vertices 0..4 are 1..4 on top, 4..8 are 1'..4' on the bottom
    let first = [(0, 4), (4, 1), (5, 6), (6, 7), (7, 3)];
    let second = [(4, 0), (0, 1), (3, 6), (6, 7), (7, 3), (3, 5)];
    let a = Diagram::from_edges(4, &first)?;
    let b = Diagram::from_edges(4, &second)?;
    println!("first edge list  -> {a}");
    println!("second edge list -> {b}");
    println!("same diagram: {}", a == b);
    println!("restricted-growth string: {:?}", a.partition().rgs());

    let expected: Diagram = "1,2,1'|3|4,2',3',4'".parse()?;
    assert_eq!(a, expected);
    Ok(())
}
