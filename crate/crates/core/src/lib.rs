//! Gröbner bases, syzygies and free resolutions for finitely generated
//! submodules of free OI- and FI-modules over the polynomial algebras
//! `P^{OI,c}` and `P^{FI,c}`, plus width-wise specialization, minimization
//! and exactness checks.

pub mod error;
pub mod field;
pub mod free;
pub mod groebner;
pub mod linalg;
pub mod maps;
pub mod poly;
pub mod resolution;
pub mod session;
pub mod syzygy;
pub mod widthwise;

pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use free::{Category, FreeElement, FreePresentation, ModuleMonomial, ModuleOrder, Summand};
pub use maps::{FiMap, Injection, OiMap, SymPerm};
pub use poly::{Monomial, Polynomial, Var};
