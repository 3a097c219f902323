use vglab::algebra::ProjPoint;
use vglab::bundle::catalog::{self, Case, CaseId};
use vglab::bundle::h0_basis;
use vglab::plucker::{plucker_interpolated, plucker_symbolic_det, quotient_line_at};

fn main() -> vglab::Result<()> {
    let pres = catalog::presentation(CaseId::plane(Case::C4b))?;
    let sections = h0_basis(&pres)?;
    let det = plucker_symbolic_det(&pres, &sections)?;
    let fit = plucker_interpolated(&pres, &sections, 3)?;
    println!(
        "scale between the two maps: {:?}",
        det.proportional_to(&fit).map(|s| s.to_string())
    );

    let x: ProjPoint = "(2:-1:5)".parse()?;
    let line = quotient_line_at(&pres, &sections, &x)?;
    println!("line at {x}: {line}");
    println!(
        "plucker vector {:?}",
        line.plucker_vector()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
    );

    // Omega(1) presentations have no determinant formula; interpolation still applies
    let alt = catalog::omega_alternate(Case::C4c)?.expand()?;
    let m = plucker_interpolated(&alt, &h0_basis(&alt)?, 3)?;
    println!(
        "4c via Omega(1): target Gr(1,{}), {} nonzero cubics",
        m.target,
        m.nonzero_count()
    );
    Ok(())
}
