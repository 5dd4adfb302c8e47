//! relkit-core: a finite heterogeneous relation-algebra engine.
//!
//! Relations are Boolean matrices between labeled finite sets
//! ([`Universe`]).  The crate provides the lattice and composition
//! operations with residuals and symmetric quotients, powerset liftings
//! (membership, inclusion orders, least upper bounds, existential images,
//! power relators), direct products and sums with their pairing
//! combinators, binary operations as relations, and the lifted Boolean
//! algebra on a powerset.  Every fast path has an independent pointwise
//! oracle, and [`laws`] packages the algebraic facts as a runnable,
//! seeded law catalog.

pub mod binop;
pub mod boolalg;
pub mod images;
pub mod laws;
pub mod oracle;
pub mod powerset;
pub mod prodsum;
pub mod relation;
pub mod samples;
pub mod universe;

mod bitmat;
mod error;

pub use binop::BinOp;
pub use boolalg::LiftedAlgebra;
pub use error::{Error, Result};
pub use images::ImageBundle;
pub use laws::{run_laws, Config, LawReport, Selection, Suite};
pub use powerset::{membership, MembershipBundle, QuotientBundle};
pub use prodsum::{ProductWitness, SumPowerIso, SumWitness};
pub use relation::Relation;
pub use universe::Universe;
