//! Finite BCK-algebras: validation, standard constructions, equations over
//! the term language `. & | ~ 0 1`, exact degrees of satisfiability and
//! exhaustive enumeration of small orders.
//!
//! ```
//! use bck_core::{constructions::pi, degree::cd, degree::Degree};
//!
//! assert_eq!(cd(&pi()), Degree::new(7, 9));
//! ```

pub mod algebra;
pub mod constructions;
pub mod degree;
pub mod enumeration;
pub mod error;
pub mod term;

pub use algebra::{BckAlgebra, Element, Properties};
pub use degree::{ds, Degree, DegreeKind};
pub use error::{Error, Result};
pub use term::{parse, Equation, Term};
