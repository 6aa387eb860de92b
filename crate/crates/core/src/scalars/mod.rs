//! Exact arithmetic in `Q(sqrt d)(i)` together with polynomials, matrices, and
//! subspaces over it.

pub mod eigen;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod roots;
pub mod subspace;

pub use eigen::{is_real_semisimple, matrix_min_poly, real_eigenspace_sum, CertificateMode};
pub use field::{FieldDescriptor, FieldElement, Q};
pub use matrix::{MatF, VecF};
pub use poly::{sturm_real_root_count, PolyF};
pub use roots::real_roots_in_field;
pub use subspace::{QuotientSpace, SubspaceF};
