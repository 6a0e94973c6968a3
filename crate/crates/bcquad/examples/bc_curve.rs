//! Burchnall-Chaundy curves of commuting pairs, with verification.
use bcquad::bccurve::{bc_curve, bc_vanishing_suite};
use bcquad::parse::parse_elem;
use bcquad::qalgebra::AlgebraSpec;

fn main() {
    let qp = AlgebraSpec::quantum_plane_symbolic();
    let f = parse_elem(&qp, "x^2*y^2 + x*y").unwrap();
    let g = parse_elem(&qp, "x*y").unwrap();
    let c = bc_curve(&f, &g).unwrap();
    println!("raw:     {}", c.raw);
    println!("reduced: {}", c.reduced);
    println!("residue: {}", c.residue);

    // y^2 is central in Q(a,-1,c), so this pair commutes too
    let m1 = AlgebraSpec::minus_one_symbolic();
    let f = parse_elem(&m1, "y^2").unwrap();
    let g = parse_elem(&m1, "x^2*y^2 + x^2*y").unwrap();
    for level in bc_vanishing_suite(&f, &g, &[0, 1]).unwrap() {
        println!(
            "level {}: {} (vanishes: {})",
            level.level,
            level.reduced,
            level.vanishes()
        );
    }
}
