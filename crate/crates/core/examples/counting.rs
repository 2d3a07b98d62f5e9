//! Bell and Stirling counts next to explicit enumeration.

use partition_algebra::diagram::{enumerate_diagrams, DiagramFilter};
use partition_algebra::setpart::{
    bell_number, count_partitions, enumerate_partitions, stirling2_row,
};

fn main() -> partition_algebra::Result<()> {
    for g in 0..=8 {
        let row: Vec<String> = stirling2_row(g).iter().map(|s| s.to_string()).collect();
        println!(
            "B({g}) = {:<6} S({g},·) = [{}]",
            bell_number(g).to_string(),
            row.join(", ")
        );
    }
    println!("B(40) = {}", bell_number(40));

    println!(
        "\npartitions of [6] with at most 3 blocks: {} counted, {} enumerated",
        count_partitions(6, Some(3)),
        enumerate_partitions(6, Some(3))?.count()
    );

    for k in 1..=3 {
        let count = |f| enumerate_diagrams(k, f).count();
        println!(
            "k={k}: |D_k| = {}, |U_k| = {}, |TP_k| = {}, |BP_k| = {}",
            count(DiagramFilter::All),
            count(DiagramFilter::Uniform),
            count(DiagramFilter::TopPropagating),
            count(DiagramFilter::BottomPropagating)
        );
    }
    Ok(())
}
