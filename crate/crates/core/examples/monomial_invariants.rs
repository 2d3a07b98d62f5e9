//! The invariant vectors `m_π` and how diagrams act on them.

use partition_algebra::poly::rational_to_string;
use partition_algebra::seqmodel::{
    act_on_invariants, invariant_dim, monomial_rank, monomial_vector,
};
use partition_algebra::setpart::enumerate_partitions;
use partition_algebra::{Diagram, SetPartition};

fn main() -> partition_algebra::Result<()> {
    for (n, k) in [(2, 2), (3, 3), (2, 3), (5, 3)] {
        println!(
            "n={n} k={k}: invariant dimension {}, rank of the m_pi {}",
            invariant_dim(n, k),
            monomial_rank(n, k)?
        );
    }

    let pi: SetPartition = "1,3|2".parse()?;
    let m = monomial_vector(&pi, 2)?;
    println!("\nm[{pi}] over [2]^3 has {} nonzero entries", m.nnz());

    for text in ["1,2,1',2'", "1,1'|2|2'", "1,2'|2,1'", "1|2|1',2'"] {
        let d: Diagram = text.parse()?;
        for pi in enumerate_partitions(2, None)? {
            for n in [3, 4] {
                let terms: Vec<String> = act_on_invariants(&d, &pi, n)?
                    .iter()
                    .map(|t| format!("{} m[{}]", rational_to_string(&t.coeff), t.tau))
                    .collect();
                let shown = if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join(" + ")
                };
                println!("n={n}  {d} · m[{pi}] = {shown}");
            }
        }
    }
    Ok(())
}
