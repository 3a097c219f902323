use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vglab::algebra::ProjPoint;
use vglab::bundle::catalog::{self, Case, CaseId};
use vglab::bundle::restrict_to_line;

fn main() -> vglab::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for case in [Case::C1b, Case::C2, Case::C4a, Case::C4d] {
        let pres = catalog::presentation(CaseId::plane(case))?;
        let mut seen = BTreeMap::new();
        for _ in 0..30 {
            let (p, q) = (
                ProjPoint::random(&mut rng, 2),
                ProjPoint::random(&mut rng, 2),
            );
            if let Ok(st) = restrict_to_line(&pres, &p, &q) {
                *seen.entry(st.to_string()).or_insert(0) += 1;
            }
        }
        println!("{:<4} {seen:?}", case.label());
    }

    let toy = catalog::jumping_line_toy()?;
    let on = restrict_to_line(&toy, &"1:0:0".parse()?, &"0:1:0".parse()?)?;
    let off = restrict_to_line(&toy, &"1:0:1".parse()?, &"0:1:1".parse()?)?;
    println!("jumping toy: {on} on x2 = 0, {off} elsewhere");
    Ok(())
}
