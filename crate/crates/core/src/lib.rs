//! Exact computations with partition algebras and their actions on tensor
//! powers of the permutation module.
//!
//! * [`setpart`]: set partitions in restricted-growth form, enumeration,
//!   Bell and Stirling counts.
//! * [`diagram`]: partition diagrams, the algebra product with its `x`
//!   factors, the uniform / top / bottom propagating subalgebras and
//!   rectangular diagrams.
//! * [`rep`]: the matrices of diagrams and permutations on `(ℚ^n)^{⊗k}`.
//! * [`centralizer`]: ranks and commutants that check the duality between
//!   `S_n` and the partition algebra.
//! * [`seqmodel`]: truncated sequence-space norms and symmetric invariants.
//! * [`cli`]: the `partalg` command line.
//!
//! All arithmetic is exact (`BigInt` / `BigRational`).
//!
//! ```
//! use partition_algebra::{AlgebraElement, Diagram};
//!
//! let d1: Diagram = "1,2|3|4,3',4'|1',2'".parse().unwrap();
//! let d2: Diagram = "1|2|3,1'|4,2',3',4'".parse().unwrap();
//! let (product, loops) = d1.concat(&d2).unwrap();
//! assert_eq!(product.to_string(), "1,2|3|4,1',2',3',4'");
//! assert_eq!(loops, 1);
//!
//! let e = AlgebraElement::from_diagram(d1).multiply(&AlgebraElement::from_diagram(d2)).unwrap();
//! assert_eq!(e.to_json(), r#"[{"coeff":["0/1","1/1"],"diagram":"1,2|3|4,1',2',3',4'"}]"#);
//! ```

pub mod centralizer;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod linalg;
pub mod poly;
pub mod rep;
pub mod seqmodel;
pub mod setpart;
pub mod text;

pub use centralizer::{verify_schur_weyl, Budget, VerificationReport};
pub use diagram::{AlgebraElement, Diagram, DiagramFilter, RectDiagram, RectProduct};
pub use error::{Error, Result};
pub use poly::Poly;
pub use rep::{matrix, PermWord, SparseMat, TupleSpace};
pub use setpart::{SetPartition, Tuple};
