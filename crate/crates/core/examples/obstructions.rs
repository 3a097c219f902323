use vglab::verify::{abc_solutions, obstructions, omega_filter, unions_with_chi};

fn main() {
    println!("{}\n", obstructions());

    let all = unions_with_chi(6, 3);
    for z in &all {
        println!(
            "{z} p_a = {} omega = O(-1): {}",
            z.arithmetic_genus(),
            z.omega_minus_one()
        );
    }
    println!(
        "after the canonical-sheaf filter: {:?}",
        omega_filter(&all)
            .iter()
            .map(|z| z.to_string())
            .collect::<Vec<_>>()
    );
    println!("p_a = -3, b + c = 4: {:?}", abc_solutions(-3, 4));
}
