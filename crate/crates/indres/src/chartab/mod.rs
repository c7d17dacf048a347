//! Exact cyclotomic arithmetic and ordinary character tables.

pub mod brute;
pub mod cyclotomic;
mod dixon;
pub mod io;
pub mod linalg;
pub mod table;

pub use cyclotomic::{BigIntString, Cyclotomic, CyclotomicJson};
pub use dixon::character_table;
pub use io::{load_table, parse_table, reconcile, save_table, TableJson};
pub use table::{CharTable, ClassInfo};

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// (1/|G|) Σ_C |C| a(C) conj(b(C)) for class functions on the classes of `t`.
pub fn inner_product(t: &CharTable, a: &[Cyclotomic], b: &[Cyclotomic]) -> Result<Cyclotomic> {
    let k = t.num_classes();
    if a.len() != k || b.len() != k {
        return Err(Error::Domain(format!(
            "class functions of length {} and {} on a table with {} classes",
            a.len(),
            b.len(),
            k
        )));
    }
    let mut acc = Cyclotomic::zero(1);
    for c in 0..k {
        let term = a[c].mul(&b[c].conj()).scale(&BigInt::from(t.classes()[c].size));
        acc = acc.add(&term);
    }
    acc.div_exact(&BigInt::from(t.order()))
        .ok_or_else(|| Error::Domain("inner product is not integral".into()))
}
