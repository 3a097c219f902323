use std::env;

use vglab::bundle::catalog::CaseId;
use vglab::verify::{run_case, RunOptions};

fn main() -> vglab::Result<()> {
    let id: CaseId = env::args().nth(1).unwrap_or_else(|| "4c".into()).parse()?;
    let report = run_case(id, &RunOptions::with_samples(3, 100));
    println!("{report}");
    println!("{}", report.to_json());
    Ok(())
}
