//! Truncated operator norms and the three boundedness classifiers over
//! every 2-diagram.

use partition_algebra::diagram::{enumerate_diagrams, DiagramFilter};
use partition_algebra::poly::rational_to_string;
use partition_algebra::seqmodel::{
    classify_column_finite, classify_linf_bounded, classify_lp_bounded, GeometricWeights, NormKind,
    NormProfile,
};
use partition_algebra::Diagram;

fn main() -> partition_algebra::Result<()> {
    let w = GeometricWeights::default();
    let spread: Diagram = "2,1'|1|2'".parse()?;
    let p = NormProfile::compute(&spread, NormKind::WeightedL1(w.clone()), &[2, 4, 6, 8])?;
    let norms: Vec<String> = p.norms.iter().map(rational_to_string).collect();
    println!(
        "weighted l1 norms of {spread} at N = 2,4,6,8: {}",
        norms.join(", ")
    );

    println!(
        "\n{:<20} {:>7} {:>5} {:>5} | {:>3} {:>4} {:>4}",
        "diagram", "uniform", "BP", "TP", "l1", "linf", "c00"
    );
    for d in enumerate_diagrams(2, DiagramFilter::All) {
        println!(
            "{:<20} {:>7} {:>5} {:>5} | {:>3} {:>4} {:>4}",
            d.to_string(),
            d.is_uniform(),
            d.is_bottom_propagating(),
            d.is_top_propagating(),
            u8::from(classify_lp_bounded(&d, &w, 4, 8)?),
            u8::from(classify_linf_bounded(&d, 4, 8)?),
            u8::from(classify_column_finite(&d)),
        );
    }
    Ok(())
}
