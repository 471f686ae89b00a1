//! Exact computations with monomial ideals and generalized mixed product
//! ideals: construction from a base ideal and a substitution family,
//! the exchange (polymatroidal) test, linear quotients, graded Betti
//! numbers through upper Koszul complexes, and integral closure through
//! exact rational feasibility on the Newton polyhedron.

pub mod betti;
pub mod closure;
pub mod constructors;
pub mod error;
pub mod gmpi;
pub mod ideal;
pub mod linquot;
pub mod polymatroid;
pub mod ring;

pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use ring::{Monomial, VariableContext};
