//! Bistellar moves on closed oriented triangulated manifolds, their exchange
//! matrices, and the cluster algebras built from middle-move classes.
//!
//! Complexes use positive integer vertex labels. Faces are ordered by size,
//! then lexicographically, and this order indexes every exchange matrix.
//!
//! ```
//! use bistellar_core::{exchange::exchange_matrix, fixtures, graph};
//!
//! let k = fixtures::bipyramid_s2();
//! assert!(exchange_matrix(&k).is_skew_symmetric());
//! let g = graph::enumerate_class(&k, graph::DEFAULT_NODE_CAP).unwrap();
//! assert_eq!(g.node_count(), 10);
//! ```

pub mod error;
pub mod simplex;
pub mod complex;
pub mod bistellar;
pub mod exchange;
pub mod io;
pub mod fixtures;
pub mod poly;
pub mod semifield;
pub mod graph;
pub mod cluster;
pub mod pl;
pub mod reference;
