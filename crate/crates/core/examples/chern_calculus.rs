use vglab::bundle::catalog::{self, CaseId};
use vglab::chow::{
    chern_sym2_omega1_p2, chow_inv, chow_mul, euler_char_p2, euler_char_p3, ChowClass,
};

fn main() -> vglab::Result<()> {
    let c = ChowClass::from_i64(2, &[1, 3, 6]);
    println!("({c})^-1 = {}", chow_inv(&c)?);
    println!("c(S^2(Omega(1))) = {}", chern_sym2_omega1_p2());

    // 1 + 2t times the geometric series in t, up to t^3
    let q = chow_mul(
        &ChowClass::linear(3, 2),
        &chow_inv(&ChowClass::linear(3, -1))?,
    )?;
    println!("(1+2t)/(1-t) = {q}");

    for id in CaseId::all() {
        println!("{id:<12} c = {}", catalog::symbolic_chern(id));
    }

    println!("chi(E) for (c1,c2) = (3,6): {}", euler_char_p2(3, 6, 0));
    for m in -2..=2 {
        println!(
            "P3, (c1,c2) = (1,2), chi(E({m})) = {}",
            euler_char_p3(1, 2, m)
        );
    }
    Ok(())
}
