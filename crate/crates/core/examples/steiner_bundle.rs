use vglab::bundle::catalog::{self, Case, CaseId};
use vglab::bundle::{h0_basis, is_globally_generated, resolution_type_M36};
use vglab::plucker::{plucker_symbolic_det, verify_plucker_relations};

fn main() -> vglab::Result<()> {
    let pres = catalog::presentation(CaseId::plane(Case::C4a))?;
    println!("{pres}");
    println!("{}", pres.chern_data());

    let sections = h0_basis(&pres)?;
    println!("h0 = {}", sections.len());
    let gg = is_globally_generated(&pres, 100, &pres.degeneracy_probes(4, 7), 7)?;
    println!(
        "globally generated at {} points: {}",
        gg.points_checked, gg.generated
    );
    println!("stratum: {:?}", resolution_type_M36(&pres)?);

    // each coordinate is a 3x3 minor of the linear matrix
    let map = plucker_symbolic_det(&pres, &sections)?;
    print!("{map}");
    println!("relations vanish: {}", verify_plucker_relations(&map));
    Ok(())
}
