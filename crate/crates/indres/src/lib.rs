pub mod blocks;
pub mod chartab;
pub mod classfun;
pub mod cli_io;
pub mod correspondence;
pub mod error;
pub mod fixtures;
pub mod groupcore;
pub mod lattice;
pub mod modp;

pub use error::{Error, Result};
