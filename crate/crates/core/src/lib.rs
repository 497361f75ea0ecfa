//! Exact computation of six resolvability invariants of small connected
//! graphs: metric dimension (`dim`), local metric dimension (`ldim`),
//! multiset dimension (`md`), outer multiset dimension (`dim_ms`), local
//! multiset dimension (`lmd`) and local outer multiset dimension
//! (`ldim_ms`).
//!
//! The crate is organised as:
//!
//! - [`graph`]: graphs, edge-list and graph6 ingestion, BFS distances,
//!   exact clique/chromatic numbers, 2-core and K-end structure;
//! - [`multiset`]: representations and the resolving predicate per variant;
//! - [`solver`]: exact dimensions by ordered subset enumeration;
//! - [`generators`]: graph families (wheels, amalgamations, coronas, ...);
//! - [`bounds`]: lower/upper bounds and infiniteness certificates;
//! - [`verify`]: closed-form values per family and a theorem harness;
//! - [`cli`]: the `multires` command-line front end.
//!
//! ```
//! use multires::{generators::FamilySpec, solver, Variant};
//!
//! let c7 = "cycle:7".parse::<FamilySpec>().unwrap().generate().unwrap();
//! let r = solver::dimension(&c7, Variant::Lmd, &Default::default()).unwrap();
//! assert_eq!(r.value, solver::DimensionValue::Finite(3));
//! ```

pub mod bounds;
pub mod cli;
pub mod error;
pub mod generators;
pub mod graph;
pub mod multiset;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Caps, DistMatrix, Graph};
pub use multiset::{Multiset, Variant};
pub use solver::{DimensionResult, DimensionValue, SolverOptions};
