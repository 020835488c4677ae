//! Exact counts of lattice rectangles, tilted ones included, in an `n x n`
//! grid of points.

pub mod algo;
pub mod allvalues;
pub mod arith;
pub mod asymptotics;
pub mod error;
pub mod golden;
pub mod kernels;
pub mod onevalue;
pub mod oracle;
pub mod sieves;

pub use algo::{compute, AlgoResult, Algorithm};
pub use allvalues::compute_table;
pub use arith::ExactInt;
pub use error::{ArithError, Error, Result};
pub use onevalue::{f0, f_baseline, f_cuberoot, f_divisorlayer, f_sqrt, f_tenmoment};
