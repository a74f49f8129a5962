//! Kernels, Fourier multipliers and operator-norm estimates for discrete
//! Riesz transforms on Z^d: the Calderón–Zygmund lattice kernels, the
//! probabilistic transforms built from the Doob h-process, and the
//! method-of-rotations variants.

pub mod cli;
pub mod error;
pub mod kernels;
pub mod lattice;
pub mod mc;
pub mod multipliers;
pub mod numerics;
pub mod poisson;
pub mod transforms;

pub use error::{Error, Result};
pub use kernels::{ConstantMatrix, KernelKind};
pub use lattice::{LatticePoint, Sequence};
pub use numerics::{QuadConfig, QuadResult};
pub use poisson::{HalfSpacePoint, PeriodicPoissonEvaluator};
