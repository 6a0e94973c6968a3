//! Sylvester matrix and homogeneous resultant of two homogeneous elements.
use bcquad::parse::parse_elem;
use bcquad::qalgebra::{AlgebraSpec, GradedSlice};
use bcquad::resultants::sylvester_homogeneous;

fn main() {
    let alg = AlgebraSpec::minus_one_symbolic();
    let f = GradedSlice::new(parse_elem(&alg, "x^2 + y^2").unwrap()).unwrap();
    let g = GradedSlice::new(parse_elem(&alg, "x*y").unwrap()).unwrap();
    let m = sylvester_homogeneous(&f, &g).unwrap();
    for row in m.to_strings() {
        println!("[{}]", row.join(", "));
    }
    println!("Res = {}", m.determinant().unwrap());
}
