//! Checks both halves of the duality between `S_n` and the partition
//! algebra at a few small sizes.

use partition_algebra::{verify_schur_weyl, Budget};

fn main() -> partition_algebra::Result<()> {
    let budget = Budget::default();
    println!(" n  k  centralizer  span  comm(S_n)  perms  comm(diagrams)  ok");
    for (n, k) in [(2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2), (5, 2)] {
        let r = verify_schur_weyl(n, k, &budget)?;
        println!(
            "{:>2} {:>2} {:>12} {:>5} {:>10} {:>6} {:>15}  {}",
            r.n,
            r.k,
            r.centralizer_dim,
            r.diagram_span_rank,
            r.commutant_of_perms_dim,
            r.perm_span_dim,
            r.commutant_of_diagrams_dim,
            r.all_pass()
        );
    }
    Ok(())
}
