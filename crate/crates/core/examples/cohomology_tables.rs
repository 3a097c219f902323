use vglab::bundle::catalog::{self, Case, CaseId};
use vglab::bundle::cohomology_table;
use vglab::chow::euler_char_p2;

fn main() -> vglab::Result<()> {
    for case in [Case::C2, Case::C3, Case::C4c, Case::Neg33] {
        let pres = catalog::presentation(CaseId::plane(case))?;
        let cd = pres.chern_data();
        let table = cohomology_table(&pres, -4..=3)?;
        println!("{} ({cd})", case.label());
        print!("{table}");
        let rr = table
            .rows
            .iter()
            .all(|r| r.euler_characteristic() == euler_char_p2(cd.c1, cd.c2, r.twist));
        println!("Riemann-Roch agrees: {rr}\n");
    }

    // the Omega(1) presentation of 4b has a length-two resolution
    let alt = catalog::omega_alternate(Case::C4b)?.expand()?;
    println!(
        "4b via Omega(1): F2 = {:?}, F1 = {:?}, F0 = {:?}",
        alt.f2(),
        alt.f1(),
        alt.f0()
    );
    print!("{}", cohomology_table(&alt, -2..=1)?);
    Ok(())
}
