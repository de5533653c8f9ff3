//! Exact evaluation of binomial determinants.
//!
//! `B` is the infinite matrix with entry `(i, j)` equal to `C(i, j)` (zero
//! when `j > i`, indexed from zero), and `b^I_J` is the determinant of the
//! square submatrix picked out by strictly increasing index sets `I` (rows)
//! and `J` (columns). This crate evaluates `b^I_J` by a family of closed
//! formulas (size reduction, consecutive or almost-consecutive rows and
//! columns, the two-interval product form) and cross-validates each of them
//! against a fraction-free (Bareiss) determinant oracle. It also computes
//! left nullspace generators of the d x (d-1) families and exposes the
//! row/column interchange identities. All arithmetic is exact.
//!
//! Modules follow the evaluation pipeline: [`indexsets`] defines the index
//! machinery, [`binomial`] the coefficients and scalar quotients,
//! [`oracle`] the ground truth, [`formulas`] the closed forms and their
//! dispatcher, [`mod@nullspace`] and [`mod@interchange`] the derived
//! constructions, and [`mod@verify`] the seeded identity-check harness.
//!
//! ```
//! use bindet::{det, IndexSet};
//!
//! let rows: IndexSet = "3,5,7,8".parse()?;
//! let cols: IndexSet = "0,3,5,7".parse()?;
//! let report = det(&rows, &cols, None)?;
//! assert_eq!(report.value.to_string(), "791");
//! assert_eq!(report.method.name(), "size_reduction");
//! # Ok::<(), bindet::Error>(())
//! ```

pub mod binomial;
pub mod error;
pub mod formulas;
pub mod indexsets;
pub mod interchange;
pub mod nullspace;
pub mod oracle;
pub mod verify;

pub use binomial::{binom, pi, q_quotient, submatrix, BinMatrix, ExactInt, ExactRat};
pub use error::{Error, Result};
pub use formulas::{det, EvalReport, ExpansionTerm, Method};
pub use indexsets::{derived_chain, derived_pair, DerivedPair, IndexSet, IntervalSpec};
pub use interchange::{interchange, InterchangeResult, PiProductReport};
pub use nullspace::{nullspace_cramer, nullspace_lambda, LambdaForm, NullVector};
pub use oracle::{det_bareiss, det_cofactor, rank, SquareExactMatrix};
pub use verify::{run_suite, InstanceGen, Shape, SuiteReport};
