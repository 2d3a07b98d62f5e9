//! Acceptance suite: one exact check per criterion, one PASS/FAIL line each.
//! Runs without the libtest harness so the lines always reach stdout.

use std::panic::{catch_unwind, AssertUnwindSafe};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use partition_algebra::centralizer::{
    centralizer_dimension, commutant_dimension, perm_span_dim, span_rank,
    symmetric_group_generators, verify_schur_weyl, Budget,
};
use partition_algebra::diagram::{enumerate_diagrams, DiagramFilter};
use partition_algebra::rep::{act, entry, perm_matrix};
use partition_algebra::seqmodel::{
    act_on_invariants, classify_column_finite, classify_linf_bounded, classify_lp_bounded,
    column_finite_by_counting, l1_truncated_norm, linf_matrix_norm, monomial_rank, monomial_vector,
    GeometricWeights,
};
use partition_algebra::setpart::{bell_number, enumerate_partitions, stirling2_row};
use partition_algebra::{
    matrix, AlgebraElement, Diagram, PermWord, Poly, RectDiagram, RectProduct, SetPartition,
    SparseMat, Tuple, TupleSpace,
};

type Check = std::result::Result<(), String>;
type Criterion = fn() -> Check;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn dg(text: &str) -> Diagram {
    text.parse().unwrap()
}

fn q(n: usize) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Orbits of all of `S_n` on `[n]^len`, by applying every permutation.
fn brute_orbits(n: usize, len: usize) -> usize {
    let space = TupleSpace::new(n, len);
    let perms: Vec<PermWord> = PermWord::all(n).collect();
    let mut seen = vec![false; space.dim()];
    let mut orbits = 0;
    for t in space.iter() {
        if seen[space.rank(&t)] {
            continue;
        }
        orbits += 1;
        for s in &perms {
            let image: Vec<usize> = t.iter().map(|&i| s.apply(i)).collect();
            seen[space.rank(&image)] = true;
        }
    }
    orbits
}

/// Dense matrix of a diagram built from individual entries.
fn dense_by_entries(d: &Diagram, n: usize) -> Vec<Vec<BigRational>> {
    let space = TupleSpace::new(n, d.k());
    space
        .iter()
        .map(|top| {
            let top = Tuple::new(top).unwrap();
            space
                .iter()
                .map(|bottom| q(entry(d, &top, &Tuple::new(bottom).unwrap()).unwrap().into()))
                .collect()
        })
        .collect()
}

fn dense_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let d = a.len();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).map(|l| &a[i][l] * &b[l][j]).sum())
                .collect()
        })
        .collect()
}

fn worked_product() -> Check {
    let d1 = dg("1,2|3|4,3',4'|1',2'");
    let d2 = dg("1|2|3,1'|4,2',3',4'");
    let product = AlgebraElement::from_diagram(d1)
        .multiply(&AlgebraElement::from_diagram(d2))
        .map_err(|e| e.to_string())?;
    let expected = AlgebraElement::term(dg("1,2|3|4,1',2',3',4'"), Poly::x_pow(1));
    ensure!(product == expected, "got {product}, expected {expected}");
    Ok(())
}

fn graph_equivalence() -> Check {
    // top vertex i is i-1, bottom vertex i' is 3+i
    let first = [(0, 4), (4, 1), (5, 6), (6, 7), (7, 3)];
    let second = [(4, 0), (0, 1), (3, 6), (6, 7), (7, 3), (3, 5)];
    let a = Diagram::from_edges(4, &first).map_err(|e| e.to_string())?;
    let b = Diagram::from_edges(4, &second).map_err(|e| e.to_string())?;
    let expected = Diagram::from_blocks(4, &[vec![0, 1, 4], vec![2], vec![3, 5, 6, 7]]).unwrap();
    ensure!(a == b, "{a} != {b}");
    ensure!(a.partition() == expected.partition(), "{a} != {expected}");
    Ok(())
}

fn triangle_entries() -> Check {
    let d = dg("1,1',2'|2");
    let t = |v: [usize; 2]| Tuple::new(v.to_vec()).unwrap();
    let cases = [
        ([3, 7], [3, 5], 0u8),
        ([3, 7], [3, 3], 1),
        ([4, 4], [4, 4], 1),
    ];
    for (top, bottom, want) in cases {
        let got = entry(&d, &t(top), &t(bottom)).map_err(|e| e.to_string())?;
        ensure!(
            got == want,
            "entry {top:?}/{bottom:?} = {got}, expected {want}"
        );
    }
    Ok(())
}

fn action_identities() -> Check {
    let n = 4;
    let space = TupleSpace::new(n, 2);
    let basis = |i: usize, j: usize| {
        let mut v = vec![BigRational::zero(); space.dim()];
        v[space.rank(&[i, j])] = BigRational::one();
        v
    };
    let sum = |vs: Vec<Vec<BigRational>>| {
        vs.into_iter()
            .fold(vec![BigRational::zero(); space.dim()], |acc, v| {
                acc.into_iter().zip(v).map(|(a, b)| a + b).collect()
            })
    };
    let zero = vec![BigRational::zero(); space.dim()];
    let all_connected = matrix(&dg("1,2,1',2'"), n);
    let swap = matrix(&dg("1,2'|2,1'"), n);
    let cup_cap = matrix(&dg("1,2|1',2'"), n);
    let one_edge = matrix(&dg("1|2,1'|2'"), n);
    for i in 1..=n {
        for j in 1..=n {
            let v = basis(i, j);
            let apply = |m: &SparseMat| act(m, &v).unwrap();
            let diag = if i == j { basis(i, i) } else { zero.clone() };
            ensure!(apply(&all_connected) == diag, "all-connected on v{i}v{j}");
            ensure!(apply(&swap) == basis(j, i), "swap on v{i}v{j}");
            let diag_sum = if i == j {
                sum((1..=n).map(|l| basis(l, l)).collect())
            } else {
                zero.clone()
            };
            ensure!(apply(&cup_cap) == diag_sum, "cup-cap on v{i}v{j}");
            ensure!(
                apply(&one_edge) == sum((1..=n).map(|l| basis(l, i)).collect()),
                "single edge on v{i}v{j}"
            );
        }
    }
    Ok(())
}

fn centralizer_part_one() -> Check {
    let budget = Budget::default();
    for (n, k, want) in [(4, 2, 15), (5, 2, 15), (2, 2, 8), (3, 2, 14)] {
        let oracle = brute_orbits(n, 2 * k);
        ensure!(
            oracle == want,
            "brute orbit count {oracle} at (n,k)=({n},{k}), expected {want}"
        );
        let diagrams: Vec<SparseMat> = enumerate_diagrams(k, DiagramFilter::All)
            .map(|d| matrix(&d, n))
            .collect();
        let rank = span_rank(&diagrams, &budget).map_err(|e| e.to_string())?;
        let gens: Vec<SparseMat> = symmetric_group_generators(n)
            .iter()
            .map(|s| perm_matrix(s, k))
            .collect();
        let comm = commutant_dimension(&gens, &budget).map_err(|e| e.to_string())?;
        let dim = centralizer_dimension(n, k);
        ensure!(
            rank == want && comm == want && dim == want,
            "(n,k)=({n},{k}): span {rank}, commutant {comm}, centralizer {dim}, expected {want}"
        );
        if n >= 2 * k {
            ensure!(
                BigUint::from(rank) == bell_number(2 * k),
                "rank {rank} != B(2k)"
            );
        }
    }
    Ok(())
}

fn centralizer_part_two() -> Check {
    let budget = Budget::default();
    for (n, k) in [(2, 1), (3, 1), (4, 1), (3, 2)] {
        let r = verify_schur_weyl(n, k, &budget).map_err(|e| e.to_string())?;
        let perms = perm_span_dim(n, k, &budget).map_err(|e| e.to_string())?;
        ensure!(
            r.commutant_of_diagrams_dim == perms && r.perm_span_dim == perms,
            "(n,k)=({n},{k}): commutant of diagrams {}, span of permutations {perms}",
            r.commutant_of_diagrams_dim
        );
        ensure!(r.all_pass(), "(n,k)=({n},{k}): {r:?}");
        if (n, k) == (3, 1) {
            ensure!(perms == 5, "expected 5 at (3,1), got {perms}");
        }
    }
    Ok(())
}

fn representation_property() -> Check {
    let d2: Vec<Diagram> = enumerate_diagrams(2, DiagramFilter::All).collect();
    ensure!(d2.len() == 15, "|D_2| = {}", d2.len());
    for n in [2, 3] {
        let mats: Vec<SparseMat> = d2.iter().map(|d| matrix(d, n)).collect();
        let dense: Vec<_> = d2.iter().map(|d| dense_by_entries(d, n)).collect();
        let mut pairs = 0;
        for (i, a) in d2.iter().enumerate() {
            for (j, b) in d2.iter().enumerate() {
                let (c, m) = a.concat(b).map_err(|e| e.to_string())?;
                let scale = q(n.pow(m as u32));
                let lhs = mats[i].mul(&mats[j]).map_err(|e| e.to_string())?;
                let rhs = matrix(&c, n).scale(&scale);
                ensure!(lhs == rhs, "{a} * {b} at n={n}");
                let oracle: Vec<Vec<BigRational>> = dense_by_entries(&c, n)
                    .into_iter()
                    .map(|row| row.into_iter().map(|v| v * &scale).collect())
                    .collect();
                ensure!(
                    dense_mul(&dense[i], &dense[j]) == oracle,
                    "dense oracle {a} * {b} at n={n}"
                );
                pairs += 1;
            }
        }
        ensure!(pairs == 225, "{pairs} pairs");
    }
    Ok(())
}

fn counting() -> Check {
    let count = |k, f| enumerate_diagrams(k, f).count();
    // uniform: choose the block of top vertex 1 (j-1 more top, j bottom)
    let mut uniform = vec![BigUint::one()];
    let binom = |a: usize, b: usize| -> BigUint {
        (0..b).fold(BigUint::one(), |acc, i| acc * (a - i) / (i + 1))
    };
    for k in 1..=3 {
        let next = (1..=k)
            .map(|j| binom(k - 1, j - 1) * binom(k, j) * &uniform[k - j])
            .sum();
        uniform.push(next);
    }
    for (k, d, u) in [(1, 2, 1), (2, 15, 3), (3, 203, 16)] {
        let all = count(k, DiagramFilter::All);
        let uni = count(k, DiagramFilter::Uniform);
        ensure!(
            all == d && BigUint::from(all) == bell_number(2 * k),
            "|D_{k}| = {all}"
        );
        ensure!(
            uni == u && BigUint::from(uni) == uniform[k],
            "|U_{k}| = {uni}"
        );
        // each bottom vertex joins one of the j blocks of the top row
        let propagating: BigUint = stirling2_row(k)
            .iter()
            .enumerate()
            .map(|(j, s)| s * BigUint::from(j).pow(k as u32))
            .sum();
        let top = count(k, DiagramFilter::TopPropagating);
        let bottom = count(k, DiagramFilter::BottomPropagating);
        ensure!(
            BigUint::from(top) == propagating && BigUint::from(bottom) == propagating,
            "|TP_{k}| = {top}, |BP_{k}| = {bottom}, expected {propagating}"
        );
        if k == 2 {
            ensure!(top == 5 && bottom == 5, "|TP_2| = {top}, |BP_2| = {bottom}");
        }
    }
    Ok(())
}

fn lp_shadow() -> Check {
    let w = GeometricWeights::default();
    for d in enumerate_diagrams(2, DiagramFilter::All) {
        let bounded = classify_lp_bounded(&d, &w, 4, 8).map_err(|e| e.to_string())?;
        ensure!(bounded == d.is_uniform(), "{d}: bounded {bounded}");
        if d.is_uniform() {
            for n in 1..=8 {
                let norm = l1_truncated_norm(&d, n, &w).map_err(|e| e.to_string())?;
                ensure!(norm.is_one(), "{d} at N={n}: {norm}");
            }
        }
    }
    let spread = dg("2,1'|1|2'");
    let norms = [4, 8].map(|n| l1_truncated_norm(&spread, n, &w).unwrap());
    ensure!(norms == [q(15), q(255)], "{spread}: {norms:?}");
    Ok(())
}

fn linf_shadow() -> Check {
    let mut cases: Vec<Diagram> = enumerate_diagrams(2, DiagramFilter::All).collect();
    cases.push(dg("1,2|3|4,3',4'|1',2'"));
    cases.push(dg("1|2|3,1'|4,2',3',4'"));
    for d in &cases {
        let bounded = classify_linf_bounded(d, 4, 8).map_err(|e| e.to_string())?;
        ensure!(
            bounded == d.is_bottom_propagating(),
            "{d}: bounded {bounded}"
        );
        if d.is_bottom_propagating() {
            for n in [1, 4, 8] {
                let norm = linf_matrix_norm(d, n).map_err(|e| e.to_string())?;
                ensure!(norm.is_one(), "{d} at N={n}: {norm}");
            }
        }
    }
    Ok(())
}

fn random_rect(rng: &mut StdRng, top: usize, bottom: usize) -> RectDiagram {
    loop {
        let labels: Vec<usize> = (0..top + bottom)
            .map(|_| rng.gen_range(0..top + bottom))
            .collect();
        if let Ok(r) = RectDiagram::new(top, bottom, SetPartition::from_labels(&labels)) {
            return r;
        }
    }
}

fn column_finite_shadow() -> Check {
    for d in enumerate_diagrams(2, DiagramFilter::All) {
        ensure!(classify_column_finite(&d) == d.is_top_propagating(), "{d}");
        ensure!(
            column_finite_by_counting(&d, 3) == d.is_top_propagating(),
            "{d} by counting"
        );
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut matched = 0;
    for _ in 0..2000 {
        let shape = |rng: &mut StdRng| rng.gen_range(1..=4);
        let (a_top, a_bottom, b_bottom) = (shape(&mut rng), shape(&mut rng), shape(&mut rng));
        let b_top = if rng.gen_bool(0.5) {
            a_bottom
        } else {
            shape(&mut rng)
        };
        let a = random_rect(&mut rng, a_top, a_bottom);
        let b = random_rect(&mut rng, b_top, b_bottom);
        match (a.compose(&b), a.compose_counting(&b)) {
            (RectProduct::Zero, None) => {
                ensure!(a_bottom != b_top, "zero on matching shapes {a} {b}")
            }
            (RectProduct::Diagram(c), Some((c2, middle))) => {
                matched += 1;
                ensure!(a_bottom == b_top, "product on mismatched shapes {a} {b}");
                ensure!(middle == 0, "{a} ∘ {b} has {middle} middle components");
                ensure!(
                    c == c2 && c.top() == a_top && c.bottom() == b_bottom,
                    "{a} ∘ {b} = {c}"
                );
            }
            _ => return Err(format!("compose and compose_counting disagree on {a} {b}")),
        }
    }
    ensure!(matched > 0, "no matching shapes drawn");
    Ok(())
}

fn invariant_basis() -> Check {
    for (k, n) in [(2, 2), (2, 4), (3, 3), (3, 5)] {
        let rank = monomial_rank(n, k).map_err(|e| e.to_string())?;
        ensure!(
            BigUint::from(rank) == bell_number(k),
            "(k,n)=({k},{n}): rank {rank}"
        );
        let orbits = brute_orbits(n, k);
        ensure!(
            orbits == rank,
            "(k,n)=({k},{n}): {orbits} orbits, rank {rank}"
        );
        for a in 1..n {
            let s = perm_matrix(&PermWord::transposition(n, a, a + 1).unwrap(), k);
            for pi in enumerate_partitions(k, None).unwrap() {
                let v = monomial_vector(&pi, n)
                    .map_err(|e| e.to_string())?
                    .to_vector();
                ensure!(
                    act(&s, &v).unwrap() == v,
                    "m[{pi}] moved by ({a} {})",
                    a + 1
                );
            }
        }
    }
    Ok(())
}

fn invariant_action() -> Check {
    let partitions: Vec<SetPartition> = enumerate_partitions(2, None).unwrap().collect();
    for d in enumerate_diagrams(2, DiagramFilter::BottomPropagating) {
        for pi in &partitions {
            let at3 = act_on_invariants(&d, pi, 3).map_err(|e| e.to_string())?;
            let at4 = act_on_invariants(&d, pi, 4).map_err(|e| e.to_string())?;
            ensure!(at3 == at4, "{d} on m[{pi}] changes between n=3 and n=4");
        }
    }
    let mut differs = false;
    for d in enumerate_diagrams(2, DiagramFilter::All).filter(|d| !d.is_bottom_propagating()) {
        for pi in &partitions {
            differs |=
                act_on_invariants(&d, pi, 3).unwrap() != act_on_invariants(&d, pi, 4).unwrap();
        }
    }
    ensure!(differs, "no diagram outside BP_2 depends on n");
    let singletons = SetPartition::singletons(2);
    for n in [3, 4] {
        let out = act_on_invariants(&dg("1,1'|2|2'"), &singletons, n).unwrap();
        ensure!(
            out.len() == 1 && out[0].tau == singletons && out[0].coeff == q(n),
            "1,1'|2|2' on m[1|2] at n={n}"
        );
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, Criterion); 13] = [
        (
            "worked product equals x times the result diagram",
            worked_product,
        ),
        ("two edge lists give the same partition", graph_equivalence),
        ("triangle diagram entries 0, 1, 1", triangle_entries),
        ("four action identities at n = 4", action_identities),
        (
            "diagram span = commutant of S_n = centralizer dimension",
            centralizer_part_one,
        ),
        (
            "commutant of diagrams = span of permutations",
            centralizer_part_two,
        ),
        (
            "matrix(d1) matrix(d2) = n^m matrix(d1 * d2) on D_2",
            representation_property,
        ),
        ("diagram and subalgebra counts", counting),
        ("weighted l1 boundedness is uniformity", lp_shadow),
        ("l-infinity boundedness is bottom propagation", linf_shadow),
        (
            "finite columns and rectangular composition",
            column_finite_shadow,
        ),
        (
            "monomial invariants form a basis of the invariants",
            invariant_basis,
        ),
        (
            "bottom-propagating action is independent of n",
            invariant_action,
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
