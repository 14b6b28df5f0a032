//! Finite-dimensional calculus of linear relations (multivalued operators).
//!
//! Relations are subspaces of C^n ⊕ C^n held through orthonormal bases. The
//! crate covers the relation algebra (adjoints, sums, products, operator and
//! multivalued parts), dissipativity and symmetry classification, deficiency
//! spaces, Cayley and Z transforms, von Neumann type extension theory with
//! contraction parameters, relation spectra via matrix pencils, and two
//! worked applications: truncated Jacobi matrices and polynomial de Branges
//! spaces.

pub mod debranges;
pub mod error;
pub mod extensions;
pub mod io;
pub mod jacobi;
pub mod linalg;
pub mod poly;
pub mod random;
pub mod relation;
pub mod spectra;
pub mod subspace;
pub mod tolerance;
pub mod transforms;

pub use num_complex::Complex64 as C64;

pub use error::{RelError, Result};
pub use linalg::{CMat, CVec};
pub use relation::{ClassificationReport, LinearRelation, RelationParts};
pub use subspace::Subspace;
pub use tolerance::ToleranceProfile;
