//! Right factors of homogeneous elements and common right factors of pairs.
use bcquad::coeffs::{ParamScalar, SymbolTable};
use bcquad::factor::{common_right_factor, right_factors};
use bcquad::parse::parse_elem;
use bcquad::qalgebra::AlgebraSpec;

fn main() {
    let m1 = AlgebraSpec::minus_one_symbolic();
    let f = parse_elem(&m1, "x^2").unwrap();
    let q = right_factors(&f, 1).unwrap();
    for s in &q.solutions {
        println!(
            "{} = ({}) * ({}) / ({})",
            f, s.quotient, s.divisor, s.denominator
        );
    }
    for c in &q.conditions {
        println!("  {}", c);
    }

    let qp = AlgebraSpec::quantum_plane_symbolic();
    let f = parse_elem(&qp, "x^2 + (1 - b)*x*y - y^2").unwrap();
    let g = parse_elem(&qp, "x^2 + (1 + b)*x*y + y^2").unwrap();
    let r = common_right_factor(&f, &g, 1).unwrap();
    match r.factor() {
        Some(p) => println!("common right factor: {}", p),
        None => println!("no common right factor of degree <= 1"),
    }

    // zero divisors in Q(a,0,0): x - lambda*y right-divides y^2 - 3xy for almost every lambda
    let t = SymbolTable::standard();
    let n = |k| ParamScalar::from_int(&t, k);
    let a00 = AlgebraSpec::infer(n(3), n(0), n(0)).unwrap();
    let q = right_factors(&parse_elem(&a00, "y^2 - 3*x*y").unwrap(), 1).unwrap();
    if let Some(den) = &q.lambda_family {
        println!("x - lambda*y right-divides {} unless {} = 0", q.target, den);
    }
}
