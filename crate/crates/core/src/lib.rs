//! Computational preradical theory over finite rings.
//!
//! The engine represents a finite ring by structure constants, enumerates a
//! finite universe of module representatives closed under submodules,
//! quotients and injective hulls, and manipulates preradicals as explicit
//! tables of fully invariant submodules. On top of that sit linear filters,
//! relative purity and injectivity, localization, and a registry of
//! machine-checkable claims.

pub mod arith;
pub mod checks;
pub mod error;
pub mod expr;
pub mod filters;
pub mod hom;
pub mod hull;
pub mod io;
pub mod module;
pub mod preradical;
pub mod present;
pub mod relative;
pub mod ring;
pub mod submodule;
pub mod universe;

pub use error::{Error, Result};
pub use hom::ModuleHom;
pub use module::FinModule;
pub use ring::FiniteRing;
pub use submodule::Submodule;
