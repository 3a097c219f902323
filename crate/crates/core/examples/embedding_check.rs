use vglab::bundle::catalog::{self, Case, CaseId};
use vglab::bundle::h0_basis;
use vglab::plucker::{check_embedding, plucker_symbolic_det};

fn main() -> vglab::Result<()> {
    for case in [Case::C3, Case::C4d, Case::Neg33] {
        let pres = catalog::presentation(CaseId::plane(case))?;
        let map = plucker_symbolic_det(&pres, &h0_basis(&pres)?)?;
        println!(
            "{} -> Gr(1,{})\n{}\n",
            case.label(),
            map.target,
            check_embedding(&map, 200, 100, 50, 9)
        );
    }

    // three cyclic-invariant cubics: x and its coordinate shift have the same image
    let pres = catalog::cyclic_cubic_quotient()?;
    let map = plucker_symbolic_det(&pres, &h0_basis(&pres)?)?;
    println!(
        "cyclic quotient -> Gr(1,{})\n{}",
        map.target,
        check_embedding(&map, 200, 200, 50, 9)
    );
    Ok(())
}
