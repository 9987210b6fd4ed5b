//! Exact rational computational Lie theory.
//!
//! Graded commutative algebras and their Looijenga–Lunts–Verbitsky (LLV) Lie
//! algebras, group algebras and algebras with involution, spinor
//! representations on exterior algebras, Clifford algebras and GSpin, and
//! equivariant Witt cancellation. All arithmetic is exact over ℚ.

mod error;
pub mod clifford;
pub mod exact;
pub mod graded;
pub mod involution;
pub mod groupalg;
pub mod lie;
pub mod linalg;
pub mod llv;
pub mod quadform;
pub mod semisimple;
pub mod spinor;

pub use error::{Error, Result};
pub use exact::{q, qi, DualScalar, Poly, Rational};
pub use linalg::{Mat, Matrix, Subspace};
