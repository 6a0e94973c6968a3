//! PBW detection through powers of the companion matrix `[[b, a], [-c, 1]]`.
//!
//! The monomials `xᵐyⁿ` form a PBW basis when the lower-right entry of `Mˡ`
//! never vanishes. Only finitely many powers can be checked, so a passing
//! report says "up to depth L", never "PBW".

use std::fmt;

use crate::coeffs::ParamScalar;

pub const DEFAULT_DEPTH: u32 = 64;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompanionMatrix {
    pub entries: [[ParamScalar; 2]; 2],
}

impl CompanionMatrix {
    pub fn new(a: &ParamScalar, b: &ParamScalar, c: &ParamScalar) -> Self {
        CompanionMatrix {
            entries: [[b.clone(), a.clone()], [-c, ParamScalar::one(a.table())]],
        }
    }

    pub fn mul(&self, other: &CompanionMatrix) -> CompanionMatrix {
        let e = |i: usize, j: usize| {
            &(&self.entries[i][0] * &other.entries[0][j])
                + &(&self.entries[i][1] * &other.entries[1][j])
        };
        CompanionMatrix {
            entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }

    pub fn lower_right(&self) -> &ParamScalar {
        &self.entries[1][1]
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// No checked entry vanished.
    PassUpToDepth,
    /// The entry of `Mˡ` vanished (1-based).
    FailAt(u32),
    /// `yx = ax²` or `yx = cy²`, both known to have a PBW basis.
    DegenerateKnownPBW,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::PassUpToDepth => write!(f, "PassUpToDepth"),
            Verdict::FailAt(l) => write!(f, "FailAt({})", l),
            Verdict::DegenerateKnownPBW => write!(f, "DegenerateKnownPBW"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PBWReport {
    pub depth: u32,
    /// Lower-right entry of `Mˡ` for `l = 1, 2, …` (stops at the first zero).
    pub lower_right_entries: Vec<ParamScalar>,
    pub verdict: Verdict,
    /// Caveats: symbolic entries, the `b + ac ≠ 0` refinement.
    pub notes: Vec<String>,
}

pub fn pbw_check(a: &ParamScalar, b: &ParamScalar, c: &ParamScalar, depth: u32) -> PBWReport {
    let m = CompanionMatrix::new(a, b, c);
    let mut power = m.clone();
    let mut entries = Vec::new();
    let mut verdict = Verdict::PassUpToDepth;
    for l in 1..=depth {
        if l > 1 {
            power = m.mul(&power);
        }
        let e = power.lower_right().clone();
        let zero = e.is_zero();
        entries.push(e);
        if zero {
            verdict = Verdict::FailAt(l);
            break;
        }
    }
    let degenerate = (b.is_zero() && c.is_zero()) || (a.is_zero() && b.is_zero());
    if degenerate && verdict == Verdict::PassUpToDepth {
        verdict = Verdict::DegenerateKnownPBW;
    }
    let mut notes = Vec::new();
    if entries.iter().any(|e| !e.is_constant()) {
        notes.push(
            "entries are nonzero as polynomials; special parameter values may still vanish".into(),
        );
    }
    let bac = b + &(a * c);
    if !bac.is_zero() {
        let value = if bac.is_constant() {
            format!(" = {}", bac)
        } else {
            String::new()
        };
        notes.push(format!(
            "b + a*c{} is nonzero: a sharper criterion applies in this case",
            value
        ));
    }
    PBWReport {
        depth,
        lower_right_entries: entries,
        verdict,
        notes,
    }
}
