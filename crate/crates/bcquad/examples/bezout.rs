//! Certificate F1*f + F2*g = Res(f, g), checked by recomputing the left side.
use bcquad::parse::parse_elem;
use bcquad::qalgebra::AlgebraSpec;
use bcquad::resultants::bezout_certificate;

fn main() {
    let alg = AlgebraSpec::quantum_plane_symbolic();
    let f = parse_elem(&alg, "x^2*y^2 + x*y - s").unwrap();
    let g = parse_elem(&alg, "x*y - t").unwrap();
    let cert = bezout_certificate(&f, &g).unwrap();
    println!("F1 = {}", cert.f1);
    println!("F2 = {}", cert.f2);
    println!("Res = {}", cert.resultant);
    let lhs = &(&cert.f1 * &f) + &(&cert.f2 * &g);
    assert_eq!(lhs, cert.resultant);
    println!("identity holds");
}
