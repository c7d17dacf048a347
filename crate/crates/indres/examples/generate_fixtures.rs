//! Regenerates the shipped fixture files: the order-1000 group 5^(1+2):Q8 as
//! generators on 125 points, and the virtual character μ of G × N_G(P)
//! (p = 2, P Sylow) that witnesses property (G) for the block with faithful
//! central character. The group is checked structurally before writing.
//!
//!     cargo run --release --example generate_fixtures [-- DIR]

use std::path::PathBuf;

use indres::classfun::GroupData;
use indres::correspondence::{extraspecial_witness, property_g, Instance};
use indres::fixtures::{check_extraspecial_by_quaternion, extraspecial_by_quaternion};
use indres::groupcore::io::{load_group, save_group};
use indres::groupcore::{Budget, FiniteGroup};

fn main() -> indres::Result<()> {
    let dir: PathBuf = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures"));
    std::fs::create_dir_all(&dir)?;
    let budget = Budget::default();

    let group_path = dir.join("extraspecial_q8.json");
    save_group(&extraspecial_by_quaternion(), &group_path)?;
    // reload through the file format, which asserts the recorded order
    let g = FiniteGroup::from_perm_group(&load_group(&group_path)?, &budget)?;
    check_extraspecial_by_quaternion(&g)?;

    let inst = Instance::sylow("extraspecial_q8", GroupData::compute(g, &budget)?, 2, &budget)?;
    let (b, mu) = extraspecial_witness(&inst)?;
    let check = property_g(&inst, b, &mu)?;
    if !check.holds {
        return Err(indres::Error::Integrity(format!("witness fails: {:?}", check.failures)));
    }
    std::fs::write(dir.join("extraspecial_q8_witness.json"), serde_json::to_string_pretty(&mu)? + "\n")?;
    println!("wrote {} (block {b} witness checked)", dir.display());
    Ok(())
}
