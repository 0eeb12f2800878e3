//! Exact proper connection numbers for small graphs.
//!
//! An edge coloring makes a graph *properly connected* when every pair of
//! vertices is joined by a path whose consecutive edges differ in color. The
//! proper connection number `pc(G)` is the fewest colors that achieve this.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: the immutable [`Graph`] type, graph6 and edge-list I/O, join and
//!   disjoint union, the named extremal families and canonical forms.
//! - [`structure`]: bridges, the bridge tree, Hamiltonian paths and exact
//!   longest path / longest cycle.
//! - [`coloring`]: proper-path checking, constructive colorings and the exact
//!   `pc` search.
//! - [`bounds`]: closed-form edge-count thresholds.
//! - [`harness`]: exhaustive enumeration and theorem replay over corpora.
//! - [`cli`]: the `pcgraph` command line front end.

pub mod bounds;
pub mod cli;
pub mod coloring;
mod error;
pub mod graph;
pub mod harness;
pub mod structure;

pub use error::{Error, Result};
pub use graph::Graph;
