//! Proper vertex connection numbers of graph joins and products.
//!
//! The crate builds the join and the Cartesian, lexicographic, strong and
//! direct products, decides proper vertex k-connectivity and strong proper
//! vertex-connectivity of colored graphs, evaluates the closed-form values and
//! constructive colorings known for these operations, and cross-checks all of it
//! against exhaustive search on small graphs.
//!
//! ```
//! use pvclab::oracle::{brute_pvc_k, generate, Family, OracleConfig};
//! use pvclab::products::strong;
//! use pvclab::theorems::strong_pvc2;
//!
//! let c4 = generate(Family::Cycle { n: 4 })?;
//! let c5 = generate("cycle:5".parse()?)?;
//!
//! let report = strong_pvc2(&c5, &c5)?;
//! assert!(report.verified);
//! println!("pvc2 = {} using {:?}", report.predicted, report.coloring);
//!
//! let p = strong(&c4, &c4).into_graph();
//! let found = brute_pvc_k(&p, 2, &OracleConfig::default().with_max_order(16))?;
//! assert_eq!(found.value, 1);
//! # Ok::<(), pvclab::Error>(())
//! ```

pub mod bitset;
pub mod colorverify;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod io;
pub mod oracle;
pub mod parameter;
pub mod products;
pub mod suite;
pub mod theorems;

pub use colorverify::{SearchBudget, VertexColoring, Witness, WitnessMode};
pub use error::{Error, Result};
pub use graph::{Distance, Graph, Parity, ParityDistance};
pub use parameter::Parameter;
pub use products::{ProductGraph, ProductKind};
