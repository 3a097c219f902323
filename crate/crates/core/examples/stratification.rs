use vglab::verify::stratify;

fn main() {
    let s = stratify(200, 1);
    println!("{}", s.report());
    println!("share of the open stratum: {:.3}", s.type4_fraction());
}
