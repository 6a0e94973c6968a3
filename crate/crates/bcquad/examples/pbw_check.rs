//! Powers of the companion matrix [[b, a], [-c, 1]] as a PBW test.
use bcquad::coeffs::{ParamScalar, SymbolTable};
use bcquad::pbw::pbw_check;

fn main() {
    let t = SymbolTable::standard();
    let n = |k| ParamScalar::from_int(&t, k);
    for (a, b, c) in [(1, -1, 1), (0, 1, 0), (2, -1, 3)] {
        let r = pbw_check(&n(a), &n(b), &n(c), 16);
        println!("({}, {}, {}): {}", a, b, c, r.verdict);
    }

    let (a, b, c) = (
        ParamScalar::var(&t, 0),
        ParamScalar::var(&t, 1),
        ParamScalar::var(&t, 2),
    );
    let r = pbw_check(&a, &b, &c, 4);
    for (l, e) in r.lower_right_entries.iter().enumerate() {
        println!("l = {}: {}", l + 1, e);
    }
    for note in &r.notes {
        println!("note: {}", note);
    }
}
