use std::fmt;

use serde::Serialize;

use super::algebra::{Algebra, Gen, UEElement};
use super::identities::{pq, PqKind};
use crate::admissible::AdmissiblePair;
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MffKind {
    F1,
    F2,
}

impl fmt::Display for MffKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MffKind::F1 => "F1",
            MffKind::F2 => "F2",
        })
    }
}

/// A letter of an MFF word: `y(0)` or `e(−1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Letter {
    Y0,
    EMinus1,
}

impl Letter {
    pub fn base(self) -> Gen {
        match self {
            Letter::Y0 => Gen::Y,
            Letter::EMinus1 => Gen::E,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Projection {
    /// `a(n) ↦ a` into U(g).
    Pi,
    /// Into U(L₀), `y(0) ↦ T_y`, `e(−1) ↦ T_e`.
    Pi1,
}

impl Projection {
    pub fn algebra(self) -> Algebra {
        match self {
            Projection::Pi => Algebra::G,
            Projection::Pi1 => Algebra::L0,
        }
    }
}

/// An alternating product of `y(0)`- and `e(−1)`-powers with rational
/// exponents. `y(0)(y(0)²)^A` is stored consolidated as `y(0)^{2A+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MffWord {
    pub p: i64,
    pub q: i64,
    pub m: i64,
    pub s: i64,
    pub kind: MffKind,
    pub factors: Vec<(Letter, Rational)>,
}

pub fn mff_word(pair: &AdmissiblePair, m: i64, s: i64, kind: MffKind) -> Result<MffWord> {
    pair.weight(m, s)?;
    let l = pair.shifted_level();
    let mut factors = Vec::new();
    match kind {
        MffKind::F1 => {
            for k in 0..=s {
                factors.push((Letter::Y0, q!(m) + &l * q!(2 * (s - 2 * k))));
                if k < s {
                    factors.push((Letter::EMinus1, q!(m, 2) + &l * q!(s - 1 - 2 * k)));
                }
            }
        }
        MffKind::F2 => {
            let (mm, ss) = (pair.p - m, pair.q - s);
            for k in 0..ss {
                factors.push((Letter::EMinus1, q!(mm, 2) + &l * q!(ss - 1 - 2 * k)));
                if k < ss - 1 {
                    factors.push((Letter::Y0, q!(mm) + &l * q!(2 * (ss - 2 - 2 * k))));
                }
            }
        }
    }
    Ok(MffWord { p: pair.p, q: pair.q, m, s, kind, factors })
}

impl MffWord {
    /// All exponents are nonnegative integers.
    pub fn integer_instance(&self) -> bool {
        self.factors.iter().all(|(_, e)| e.is_integer() && !e.is_negative())
    }

    /// Integer exponents with zero powers dropped; `FractionalInstance`
    /// otherwise.
    pub fn integer_factors(&self) -> Result<Vec<(Letter, u32)>> {
        if !self.integer_instance() {
            return Err(Error::FractionalInstance);
        }
        Ok(self.factors.iter().map(|(l, e)| (*l, e.to_i64().unwrap() as u32)).filter(|(_, e)| *e > 0).collect())
    }

    pub fn letter_total(&self, letter: Letter) -> Rational {
        self.factors.iter().filter(|(l, _)| *l == letter).map(|(_, e)| e.clone()).sum()
    }

    /// Image of the word under a projection, normal-ordered.
    pub fn project(&self, target: Projection) -> Result<UEElement> {
        let alg = target.algebra();
        let mut out = UEElement::one(alg);
        for (l, e) in self.integer_factors()? {
            out = &out * &UEElement::gen(alg, l.base()).pow(e);
        }
        Ok(out)
    }
}

impl fmt::Display for MffWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(l, e)| match l {
                Letter::Y0 => format!("y(0)^({e})"),
                Letter::EMinus1 => format!("e(-1)^({e})"),
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `θ·∏ P/Q(α) · tail^power`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PqWord {
    pub factors: Vec<(PqKind, Rational)>,
    pub tail: Gen,
    pub tail_power: u32,
    pub theta: i64,
}

impl PqWord {
    pub fn to_element(&self, alg: Algebra) -> UEElement {
        let mut out = UEElement::one(alg);
        for (k, a) in &self.factors {
            out = &out * &pq(a, *k, alg);
        }
        out = &out * &UEElement::gen(alg, self.tail).pow(self.tail_power);
        out.scale(&q!(self.theta))
    }
}

impl fmt::Display for PqWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.theta < 0 {
            f.write_str("-")?;
        }
        for (k, a) in &self.factors {
            write!(f, "{k:?}({a})")?;
        }
        write!(f, "{}^{}", self.tail, self.tail_power)
    }
}

/// `θ_{(m,s)} = (−1)^{(m(1+(−1)^m) + s(1+(−1)^s))/4}`.
pub fn theta(m: i64, s: i64) -> i64 {
    let part = |n: i64| if n % 2 == 0 { 2 * n } else { 0 };
    let exp = (part(m) + part(s)) / 4;
    if exp.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Closed P/Q form of the projected MFF word.
///
/// For F₁ the factor at `(i, j)` is `P(i/2 + jl)` when `i+j` is odd and
/// `Q(−(i−1)/2 − jl)` when it is even. For F₂ it is `Q(i/2 + jl)` when `i+j`
/// is even and `P(−(i−1)/2 − jl)` when odd. Under π₁ the product carries θ.
pub fn closed_form_projection(
    pair: &AdmissiblePair,
    m: i64,
    s: i64,
    kind: MffKind,
    target: Projection,
) -> Result<PqWord> {
    pair.weight(m, s)?;
    let l = pair.shifted_level();
    let mut factors = Vec::new();
    let (jmax, imax, tail, th) = match kind {
        MffKind::F1 => (s, m, Gen::Y, theta(m, s)),
        MffKind::F2 => (pair.q - s - 1, pair.p - m, Gen::X, theta(pair.p - m, pair.q - s)),
    };
    for j in 1..=jmax {
        for i in 1..=imax {
            let jl = &l * q!(j);
            let up = q!(i, 2) + &jl;
            let down = -q!(i - 1, 2) - &jl;
            let even = (i + j) % 2 == 0;
            factors.push(match (kind, even) {
                (MffKind::F1, false) => (PqKind::P, up),
                (MffKind::F1, true) => (PqKind::Q, down),
                (MffKind::F2, true) => (PqKind::Q, up),
                (MffKind::F2, false) => (PqKind::P, down),
            });
        }
    }
    Ok(PqWord { factors, tail, tail_power: imax as u32, theta: if target == Projection::Pi1 { th } else { 1 } })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProjectionStatus {
    Pass,
    Fail,
    /// Fractional exponents: outside the computable range, not checked.
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProjectionCheck {
    pub p: i64,
    pub q: i64,
    pub m: i64,
    pub s: i64,
    pub kind: MffKind,
    pub target: Projection,
    pub status: ProjectionStatus,
    pub word: String,
    pub closed_form: String,
    pub detail: Option<String>,
}

pub fn verify_projection(
    pair: &AdmissiblePair,
    m: i64,
    s: i64,
    kind: MffKind,
    target: Projection,
) -> Result<ProjectionCheck> {
    let word = mff_word(pair, m, s, kind)?;
    let closed = closed_form_projection(pair, m, s, kind, target)?;
    let mut check = ProjectionCheck {
        p: pair.p,
        q: pair.q,
        m,
        s,
        kind,
        target,
        status: ProjectionStatus::Skipped,
        word: word.to_string(),
        closed_form: closed.to_string(),
        detail: None,
    };
    if !word.integer_instance() {
        return Ok(check);
    }
    let alg = target.algebra();
    let lhs = word.project(target)?;
    let rhs = closed.to_element(alg);
    if lhs == rhs {
        check.status = ProjectionStatus::Pass;
    } else {
        check.status = ProjectionStatus::Fail;
        check.detail = Some(format!("word = {lhs}; closed form = {rhs}"));
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(p: i64, q: i64) -> AdmissiblePair {
        AdmissiblePair::new(p, q).unwrap()
    }

    #[test]
    fn word_exponents() {
        let w = mff_word(&pair(8, 2), 4, 1, MffKind::F1).unwrap();
        assert_eq!(w.factors, vec![(Letter::Y0, q!(8)), (Letter::EMinus1, q!(2)), (Letter::Y0, q!(0))]);
        assert!(w.integer_instance());
        assert_eq!(w.integer_factors().unwrap(), vec![(Letter::Y0, 8), (Letter::EMinus1, 2)]);

        let w = mff_word(&pair(5, 1), 1, 0, MffKind::F2).unwrap();
        assert_eq!(w.factors, vec![(Letter::EMinus1, q!(2))]);

        let w = mff_word(&pair(5, 3), 2, 1, MffKind::F1).unwrap();
        assert!(!w.integer_instance());
        assert!(matches!(w.project(Projection::Pi), Err(Error::FractionalInstance)));
    }

    #[test]
    fn s_zero_is_pure_y_power() {
        let w = mff_word(&pair(7, 1), 5, 0, MffKind::F1).unwrap();
        assert_eq!(w.factors, vec![(Letter::Y0, q!(5))]);
        let c = closed_form_projection(&pair(7, 1), 5, 0, MffKind::F1, Projection::Pi).unwrap();
        assert!(c.factors.is_empty());
    }

    #[test]
    fn worked_closed_form() {
        let c = closed_form_projection(&pair(8, 2), 4, 1, MffKind::F1, Projection::Pi).unwrap();
        assert_eq!(c.factors, vec![(PqKind::Q, q!(-2)), (PqKind::P, q!(3)), (PqKind::Q, q!(-3)), (PqKind::P, q!(4))]);
        assert_eq!(c.to_string(), "Q(-2)P(3)Q(-3)P(4)y^4");
        let check = verify_projection(&pair(8, 2), 4, 1, MffKind::F1, Projection::Pi).unwrap();
        assert_eq!(check.status, ProjectionStatus::Pass, "{:?}", check.detail);
    }

    #[test]
    fn theta_values() {
        assert_eq!(theta(2, 1), -1);
        for m in (1..20).step_by(2) {
            assert_eq!(theta(m, 0), 1);
        }
        assert_eq!(theta(4, 0), 1);
        assert_eq!(theta(2, 2), 1);
    }
}
