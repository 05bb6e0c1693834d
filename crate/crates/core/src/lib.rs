//! Exact construction and certification of unexpected plane curves built
//! from syzygies of powers of the Jacobian ideal of a line arrangement.
//!
//! Everything is computed over cyclotomic fields `Q(zeta_n)`, so every rank,
//! dimension count, and divisibility test is exact.

pub mod arrangements;
pub mod curve;
pub mod error;
pub mod fatpoint;
pub mod forms;
pub mod linalg;
mod parse;
pub mod poly;
pub mod reproduce;
pub mod scalar;
pub mod splitting;
pub mod syzygy;
pub mod unexpected;

pub use arrangements::{Arrangement, GenericLine, PointConfig};
pub use error::{Error, ErrorKind, Result};
pub use forms::{BinaryForm, MultiIndex, ProjPoint, TernaryForm};
pub use linalg::ExactMatrix;
pub use poly::{BiForm, Poly};
pub use scalar::CycloScalar;
