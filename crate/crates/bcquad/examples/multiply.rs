//! Normal forms in Q(a,-1,c): products, commutation and the homogeneous split.
use bcquad::parse::parse_elem;
use bcquad::qalgebra::{commutes, homogeneous_components, AlgebraSpec};

fn main() {
    let alg = AlgebraSpec::minus_one_symbolic();
    let yx = parse_elem(&alg, "y*x").unwrap();
    println!("y*x = {}", yx);

    let f = parse_elem(&alg, "y^2").unwrap();
    let g = parse_elem(&alg, "x^2*y^2 + x^2*y").unwrap();
    println!("({}) * ({}) = {}", f, g, &f * &g);
    println!("({}) * ({}) = {}", g, f, &g * &f);
    // y^2 is central when b = -1
    println!("commute: {}", commutes(&f, &g).unwrap());

    let h = parse_elem(&alg, "(x + y)^3 + x*y + 1").unwrap();
    for s in homogeneous_components(&h) {
        println!("degree {}: {}", s.degree, s.element);
    }
}
