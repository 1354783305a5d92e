//! Spectral radii of k-uniform hypergraphs under the adjacency, ABC
//! (atom-bond connectivity) and Randić weightings.
//!
//! The tensors are never materialized. [`tensor::Operator`] caches one weight
//! per edge and contracts against a vector edge by edge, and
//! [`spectral::spectral_radius`] runs a shifted power iteration whose
//! Collatz-Wielandt ratios give a certified enclosure of the Perron root.
//!
//! ```
//! use hyperabc::{generators, spectral_radius, SolveOptions, Weighting};
//!
//! let star = generators::hyperstar(5, 3).unwrap();
//! let est = spectral_radius(&star, Weighting::Abc, &SolveOptions::default()).unwrap();
//! assert!((est.rho - 4f64.cbrt()).abs() < 1e-9);
//! ```

pub mod closed_forms;
pub mod generators;
pub mod hypergraph;
pub mod spectral;
pub mod tensor;
pub mod verify;

pub use closed_forms::{largest_real_root, ClosedFormError, PolynomialSpec, RootError};
pub use generators::GenError;
pub use hypergraph::{
    parse_uhg, write_uhg, BuildError, CanonicalCode, DegreeVector, Girth, Kind, StructureReport, UhgError,
    UniformHypergraph, Vertex,
};
pub use spectral::{residual, spectral_radius, InitialVector, SolveError, SolveOptions, SpectralEstimate};
pub use tensor::{abc_index, edge_weight, omega, Operator, Weighting};
pub use verify::{CheckResult, Status, VerifyError};
