//! Rectangular diagrams with no block confined to the top row, and their
//! composition.

use partition_algebra::{RectDiagram, RectProduct};

fn main() -> partition_algebra::Result<()> {
    let merge: RectDiagram = "1,2:1,1',2'".parse()?;
    let split: RectDiagram = "2,1:1,2,1'".parse()?;
    let fork: RectDiagram = "2,2:1,2,1'|2'".parse()?;

    for (a, b) in [
        (&split, &merge),
        (&merge, &split),
        (&fork, &fork),
        (&fork, &merge),
        (&merge, &merge),
    ] {
        match a.compose(b) {
            RectProduct::Diagram(c) => println!("{a}  ∘  {b}  =  {c}"),
            RectProduct::Zero => println!("{a}  ∘  {b}  =  0 (shapes do not match)"),
        }
    }

    match "1,1:1|1'".parse::<RectDiagram>() {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("rejected 1,1:1|1': {e}"),
    }
    Ok(())
}
