#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod counterexample;
pub mod error;
pub mod field;
pub mod form;
pub mod global;
pub mod local;
pub mod numfield;
pub mod pencil;
pub mod poly;
pub mod witt;

pub use error::{Error, Result};
