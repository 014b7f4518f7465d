//! Exact five-vertex Yang–Baxter algebras and torus-equivariant Schubert
//! calculus of Grassmannians, verified as polynomial identities over ℚ.
//!
//! Everything is computed symbolically: coefficients live in the ring
//! ℚ[t1..tN, x, x1, x2, y, q] localized at the pairwise differences
//! `t_a - t_b`, so every check is an exact zero test, never a numeric one.

pub mod exactalg;
pub mod convolution;
pub mod gkmschubert;
pub mod perm;
pub mod quantumcoha;
pub mod report;
pub mod spinspace;
pub mod suites;
pub mod vertexmodel;
pub mod ybops;

pub use exactalg::{AlgError, Coeff, MultiPoly, RatFunc, VarSet};
pub use convolution::{ChernRestriction, FlagFixedPoint};
pub use gkmschubert::{Family, GKMClass, TwistOrder};
pub use perm::Permutation;
pub use quantumcoha::{CurrentGenerator, GammaSign, GlBase, QuantumOperator};
pub use report::{Mismatch, Report};
pub use spinspace::{OperatorPoly, SparseOperator, SpinWord, TensorVector};
pub use suites::{Suite, SuiteOptions};
pub use vertexmodel::{CrossingWeights, Model, OpTag, RowLattice};
pub use ybops::{BetheIndex, SemiOp};
