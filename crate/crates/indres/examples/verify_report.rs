//! Runs the property checks for (G, p) with P Sylow and H = N_G(P) and prints
//! the JSON report.
//!
//!     cargo run --release --example verify_report -- PSU3(3) 3 all,in

use indres::cli_io::{parse_props, to_json, JobSpec};

fn main() -> indres::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut job = JobSpec::new(args.first().map(String::as_str).unwrap_or("A5"), args.get(1).and_then(|s| s.parse().ok()).unwrap_or(2));
    job.props = parse_props(args.get(2).map(String::as_str).unwrap_or("all,in"))?;
    let report = job.verify()?;
    eprintln!("{}", report.table_row());
    print!("{}", to_json(&report)?);
    Ok(())
}
