//! Exact integer linear algebra: Smith normal form, cokernels, signatures
//! of symmetric forms and kernels modulo 2.

mod abelian;
mod matrix;
mod mod2;
mod signature;
mod smith;

pub use abelian::{cokernel, cokernel_from_smith, FinAbGroup};
pub use matrix::IntMatrix;
pub use mod2::{kernel_mod2, rank_mod2};
pub use signature::{inertia, signature, Inertia};
pub use smith::{smith_normal_form, SmithDecomposition};
