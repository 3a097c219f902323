use vglab::bundle::{h0_basis, FreePresentation};
use vglab::plucker::{join_map, plucker_symbolic_det};

fn main() -> vglab::Result<()> {
    for n in 1..=3 {
        for a in [0u32, 1] {
            let join = join_map(n, a, 3)?;
            let split = FreePresentation::split(n, &[a as i64, 3 - a as i64]);
            let det = plucker_symbolic_det(&split, &h0_basis(&split)?)?;
            println!(
                "P{n}, O({a})+O({}): Gr(1,{}), {} nonzero coordinates, equal to determinant map: {}",
                3 - a,
                join.target,
                join.nonzero_count(),
                join == det
            );
        }
    }
    print!("{}", join_map(1, 1, 3)?);
    Ok(())
}
