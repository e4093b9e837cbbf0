#![no_std]
extern crate alloc;

pub mod action_operad;
pub mod braid;
pub mod error;
pub mod g_operad;
pub mod monad;
pub mod perm;
pub mod pseudocomm;
pub mod report;

pub use error::{Error, Result};
