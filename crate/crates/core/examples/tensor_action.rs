//! The matrix of a diagram on `V^{⊗k}` and its action on basis tensors.

use num_rational::BigRational;
use num_traits::{One, Zero};
use partition_algebra::rep::{act, entry, matrix};
use partition_algebra::{Diagram, Tuple, TupleSpace};

fn show(space: &TupleSpace, v: &[BigRational]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(r, c)| {
            let idx: Vec<String> = space.unrank(r).iter().map(|i| i.to_string()).collect();
            format!("{c}·v({})", idx.join(","))
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn main() -> partition_algebra::Result<()> {
    let n = 3;
    let d: Diagram = "1,2|1',2'".parse()?;
    let space = TupleSpace::new(n, d.k());
    let m = matrix(&d, n);
    println!("matrix of {d} at n = {n}:\n{m}");

    for (i, j) in [(1, 1), (1, 2)] {
        let mut v = vec![BigRational::zero(); space.dim()];
        v[space.rank(&[i, j])] = BigRational::one();
        println!("{d} · v({i},{j}) = {}", show(&space, &act(&m, &v)?));
    }

    let t = Tuple::new(vec![2, 2])?;
    let b = Tuple::new(vec![1, 1])?;
    println!(
        "entry at top {:?}, bottom {:?}: {}",
        t.entries(),
        b.entries(),
        entry(&d, &t, &b)?
    );
    Ok(())
}
