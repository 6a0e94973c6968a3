//! Resultant of the sequence f, yf, ..., g, yg, ... and its subresultants.
use bcquad::parse::parse_elem;
use bcquad::qalgebra::AlgebraSpec;
use bcquad::resultants::{resultant_sequence, subresultant};

fn main() {
    let alg = AlgebraSpec::minus_one_symbolic();
    let f = parse_elem(&alg, "y^2 + x").unwrap();
    let g = parse_elem(&alg, "x*y^2 + 1").unwrap();
    let r = resultant_sequence(&f, &g).unwrap();
    println!("Res(f, g) = {}", r.value);
    println!("swapped: {}", r.swapped);
    println!("sRes_1 = {}", subresultant(&f, &g, 1).unwrap().value);
}
