use partition_algebra::cli::run;
use partition_algebra::diagram::TermRecord;
use partition_algebra::seqmodel::NormProfileRecord;
use partition_algebra::{AlgebraElement, Diagram, SparseMat, VerificationReport};

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn partalg(args: &[&str]) -> Outcome {
    let argv = std::iter::once("partalg").chain(args.iter().copied());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

const LHS: &str = "1,2|3|4,3',4'|1',2'";
const RHS: &str = "1|2|3,1'|4,2',3',4'";

#[test]
fn multiply_emits_x_times_concatenation() {
    let o = partalg(&[
        "diagrams", "multiply", "--k", "4", "--lhs", LHS, "--rhs", RHS, "--json",
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(
        o.stdout,
        "{\"coeff\":[\"0/1\",\"1/1\"],\"diagram\":\"1,2|3|4,1',2',3',4'\"}\n"
    );
    let records: Vec<TermRecord> = o
        .stdout
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let e = AlgebraElement::from_records(4, &records).unwrap();
    let expected = AlgebraElement::from_diagram(LHS.parse().unwrap())
        .multiply(&AlgebraElement::from_diagram(RHS.parse().unwrap()))
        .unwrap();
    assert_eq!(e, expected);
}

#[test]
fn short_rgs_is_rejected_with_usage_code() {
    let o = partalg(&[
        "diagrams",
        "multiply",
        "--k",
        "2",
        "--lhs",
        "rgs:0,0,1",
        "--rhs",
        "1,1'|2,2'",
    ]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("--lhs"), "{}", o.stderr);
    assert!(o.stdout.is_empty());
}

#[test]
fn unknown_flags_and_subcommands_are_usage_errors() {
    assert_eq!(
        partalg(&["diagrams", "enumerate", "--k", "2", "--bogus"]).code,
        2
    );
    assert_eq!(partalg(&["diagrams", "shuffle"]).code, 2);
    assert_eq!(
        partalg(&["rep", "matrix", "--n", "2", "--diagram", "1,x"]).code,
        2
    );
    assert_eq!(
        partalg(&["rep", "matrix", "--n", "40", "--diagram", "1,1'|2,2'"]).code,
        2
    );
    assert_eq!(
        partalg(&[
            "invariants",
            "act",
            "--n",
            "1",
            "--diagram",
            "1,1'|2,2'",
            "--pi",
            "1|2"
        ])
        .code,
        2
    );
    let help = partalg(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("diagrams"));
}

#[test]
fn schur_weyl_report_round_trips() {
    let o = partalg(&["verify", "schur-weyl", "--n", "2", "--k", "2", "--json"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let r: VerificationReport = serde_json::from_str(o.stdout.trim()).unwrap();
    assert_eq!(
        (
            r.centralizer_dim,
            r.diagram_span_rank,
            r.commutant_of_perms_dim
        ),
        (8, 8, 8)
    );
    assert!(r.all_pass());

    let human = partalg(&["verify", "schur-weyl", "--n", "4", "--k", "2"]);
    assert_eq!(human.code, 0);
    assert!(human.stdout.contains("(n,k) = (4, 2)"));
}

#[test]
fn verify_closure_and_classification_pass() {
    let o = partalg(&["verify", "closure", "--k", "2", "--json"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.stdout.lines().count(), 3);
    let o = partalg(&[
        "verify",
        "classification",
        "--k",
        "2",
        "--trunc",
        "3,6",
        "--ratio",
        "1/3",
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.contains("ok"));
}

#[test]
fn lp_norm_of_spreading_diagram() {
    let o = partalg(&[
        "norms",
        "lp",
        "--k",
        "2",
        "--diagram",
        "2,1'|1|2'",
        "--trunc",
        "4",
        "--ratio",
        "1/2",
        "--json",
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let rec: NormProfileRecord = serde_json::from_str(o.stdout.trim()).unwrap();
    assert_eq!(rec.norms, vec!["15/1"]);
    assert_eq!(rec.r.as_deref(), Some("1/2"));
    assert!(rec.divergent);

    let o = partalg(&[
        "norms",
        "linf",
        "--diagram",
        "1,1'|2|2'",
        "--trunc",
        "2,3,5",
        "--json",
    ]);
    let rec: NormProfileRecord = serde_json::from_str(o.stdout.trim()).unwrap();
    assert_eq!(rec.norms, vec!["2/1", "3/1", "5/1"]);
    assert!(rec.r.is_none());
}

#[test]
fn printed_diagrams_reparse() {
    let o = partalg(&["diagrams", "enumerate", "--k", "3", "--filter", "bottom"]);
    assert_eq!(o.code, 0);
    let parsed: Vec<Diagram> = o
        .stdout
        .lines()
        .map(|l| partition_algebra::text::parse_diagram(l, Some(3)).unwrap())
        .collect();
    assert_eq!(parsed.len(), 52);
    assert!(parsed.iter().all(|d| d.is_bottom_propagating()));
    for line in o.stdout.lines() {
        assert_eq!(
            partition_algebra::text::parse_diagram(line, Some(3))
                .unwrap()
                .to_string(),
            line
        );
    }
}

#[test]
fn rep_outputs() {
    let o = partalg(&[
        "rep",
        "matrix",
        "--n",
        "2",
        "--diagram",
        "1,2'|2,1'",
        "--json",
    ]);
    let m = SparseMat::from_json(o.stdout.trim()).unwrap();
    assert_eq!(m.dim(), 4);
    assert_eq!(m.nnz(), 4);
    let o = partalg(&[
        "rep",
        "entry",
        "--diagram",
        "1,2,1'|2'",
        "--top",
        "2,2",
        "--bottom",
        "2,1",
    ]);
    assert_eq!(o.stdout.trim(), "1");
    let o = partalg(&[
        "rep",
        "entry",
        "--diagram",
        "1,2,1'|2'",
        "--top",
        "1,2",
        "--bottom",
        "1,1",
    ]);
    assert_eq!(o.stdout.trim(), "0");
}

#[test]
fn invariant_outputs() {
    let o = partalg(&["invariants", "dim", "--n", "3", "--k", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(o.stdout.trim()).unwrap();
    assert_eq!(v["dim"], 5);
    assert_eq!(v["orbit_count"], 5);
    let o = partalg(&[
        "invariants",
        "vector",
        "--pi",
        "1,2,3",
        "--n",
        "3",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(o.stdout.trim()).unwrap();
    assert_eq!(v["nnz"], 3);
    let o = partalg(&[
        "invariants",
        "act",
        "--n",
        "5",
        "--diagram",
        "1,1'|2|2'",
        "--pi",
        "1|2",
        "--json",
    ]);
    assert_eq!(o.stdout.trim(), r#"{"tau":"1|2","coeff":"5/1"}"#);
}

#[test]
fn counts() {
    assert_eq!(partalg(&["count", "bell", "--g", "6"]).stdout.trim(), "203");
    assert_eq!(
        partalg(&["count", "partitions", "--g", "4", "--max-blocks", "2"])
            .stdout
            .trim(),
        "8"
    );
    let o = partalg(&["count", "bell", "--g", "30", "--json"]);
    assert_eq!(
        o.stdout.trim(),
        r#"{"bell":"846749014511809332450147","g":30}"#
    );
}
