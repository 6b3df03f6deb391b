//! Gate synthesis from the intrinsic Hamiltonians of a switched device.
//!
//! The crate answers three questions about a small set of device
//! Hamiltonians: can they generate every N-qubit gate (Lie-algebra
//! closure), how many evolution steps does a gate need (orthogonal pairs:
//! three; non-orthogonal SU(2) pairs: the Lowenthal bracket), and what are
//! the step durations (closed form for one qubit, multi-start gradient
//! descent on the gate-distance objective for two).
//!
//! `no_std` + `alloc`; all I/O, file formats and the CLI live in the
//! companion binary crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod control;
pub mod device;
pub mod eig;
pub mod error;
pub mod gates;
mod math;
pub mod matrix;
pub mod rng;
pub mod su2;
pub mod synth;
pub mod tol;

pub use error::Error;

pub type Result<T> = core::result::Result<T, Error>;
