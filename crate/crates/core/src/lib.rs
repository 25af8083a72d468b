//! Toolkit for the odd chromatic number of simple undirected graphs.
//!
//! An *odd coloring* is a proper vertex coloring in which every vertex has
//! some color that appears an odd number of times in its open neighborhood.
//! The smallest palette size admitting one is the odd chromatic number.
//!
//! The crate bundles:
//! - a graph model with DIMACS / edge-list I/O and an odd-coloring verifier
//!   ([`graph`], [`coloring`]),
//! - an exhaustive backtracking oracle for the plain, odd, strong and
//!   strong-odd chromatic numbers ([`oracle`]),
//! - a kernelization for instances that are a clique plus few extra
//!   vertices ([`kernel`]),
//! - fixed-parameter solvers for small modulators to cluster and
//!   co-cluster graphs and for small neighborhood diversity ([`cluster`],
//!   [`cocluster`], [`nd`]),
//! - polynomial-time algorithms for cographs, split graphs and interval
//!   graphs ([`cograph`], [`split`], [`interval`]),
//! - hardness-reduction instance generators with executable equivalence
//!   checks ([`reductions`]),
//! - a dispatcher that routes a graph to the cheapest applicable solver
//!   ([`dispatch`]).
//!
//! Every solver re-verifies its witness through [`coloring::verify_odd_coloring`]
//! before returning it.

pub mod cluster;
pub mod cocluster;
pub mod cograph;
pub mod coloring;
pub mod dispatch;
pub mod gen;
pub mod graph;
pub mod interval;
pub mod kernel;
pub mod nd;
pub mod oracle;
pub mod reductions;
pub mod split;

pub use coloring::{Coloring, OddCertificate, Parity, Value};
pub use graph::{Graph, GraphFormat, ParseError};
pub use oracle::{ExtendMode, Oracle, OracleError, OracleResult};
