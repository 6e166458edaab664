use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::Rational;

/// Basis element of osp(1|2). The declaration order is the PBW normal
/// order `f y h x e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Gen {
    F,
    Y,
    H,
    X,
    E,
}

impl Gen {
    pub const ALL: [Gen; 5] = [Gen::F, Gen::Y, Gen::H, Gen::X, Gen::E];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Gen::X | Gen::Y)
    }

    pub fn parity(self) -> u8 {
        self.is_odd() as u8
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::F => "f",
            Gen::Y => "y",
            Gen::H => "h",
            Gen::X => "x",
            Gen::E => "e",
        }
    }

    /// ad(h)-eigenvalue in U(g): `[h, g] = weight·g`.
    pub fn h_weight(self) -> i64 {
        match self {
            Gen::E => 2,
            Gen::X => 1,
            Gen::H => 0,
            Gen::Y => -1,
            Gen::F => -2,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Gen {
    type Err = Error;
    fn from_str(s: &str) -> Result<Gen> {
        match s.trim().trim_start_matches("T_") {
            "f" => Ok(Gen::F),
            "y" => Ok(Gen::Y),
            "h" => Ok(Gen::H),
            "x" => Ok(Gen::X),
            "e" => Ok(Gen::E),
            _ => Err(Error::UnknownGenerator(s.to_string())),
        }
    }
}

/// Which enveloping algebra the engine works in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Algebra {
    /// U(osp(1|2)).
    G,
    /// U(L₀), generated by `T_h, T_e, T_f, T_x, T_y`.
    L0,
}

impl Algebra {
    pub fn letter(self, g: Gen) -> String {
        match self {
            Algebra::G => g.name().to_string(),
            Algebra::L0 => format!("T_{}", g.name()),
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algebra::G => "U(g)",
            Algebra::L0 => "U(L0)",
        })
    }
}

/// Super bracket as a linear combination of generators with integer
/// coefficients. Only the listed relations are data; the reversed pairs follow
/// from super-antisymmetry `[b,a] = -(-1)^{|a||b|}[a,b]`.
pub fn bracket(alg: Algebra, a: Gen, b: Gen) -> Vec<(Gen, i64)> {
    if let Some(v) = listed(alg, a, b) {
        return v;
    }
    if let Some(v) = listed(alg, b, a) {
        let sign = if a.is_odd() && b.is_odd() { -1 } else { 1 };
        return v.into_iter().map(|(g, c)| (g, -sign * c)).collect();
    }
    // [g, g] for even g
    Vec::new()
}

fn listed(alg: Algebra, a: Gen, b: Gen) -> Option<Vec<(Gen, i64)>> {
    use Gen::*;
    let g = alg == Algebra::G;
    let v = match (a, b) {
        (E, F) => vec![(H, 1)],
        (H, E) => vec![(E, if g { 2 } else { -2 })],
        (H, F) => vec![(F, if g { -2 } else { 2 })],
        (H, X) => vec![(X, if g { 1 } else { -1 })],
        (E, X) => vec![],
        (F, X) => vec![(Y, if g { -1 } else { 1 })],
        (H, Y) => vec![(Y, if g { -1 } else { 1 })],
        (E, Y) => vec![(X, -1)],
        (F, Y) => vec![],
        (X, X) => vec![(E, if g { 2 } else { -2 })],
        (X, Y) => vec![(H, 1)],
        (Y, Y) => vec![(F, -2)],
        _ => return None,
    };
    Some(v)
}

/// PBW monomial `f^a y^ε h^c x^δ e^b`, exponents indexed by [`Gen::index`].
/// Odd exponents are always 0 or 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono(pub [u32; 5]);

impl Mono {
    pub const ONE: Mono = Mono([0; 5]);

    pub fn exp(&self, g: Gen) -> u32 {
        self.0[g.index()]
    }

    pub fn parity(&self) -> u8 {
        ((self.exp(Gen::Y) + self.exp(Gen::X)) % 2) as u8
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The letters of the monomial, left to right.
    pub fn word(&self) -> Vec<Gen> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for g in Gen::ALL {
            for _ in 0..self.exp(g) {
                w.push(g);
            }
        }
        w
    }

    fn first(&self) -> Option<Gen> {
        Gen::ALL.into_iter().find(|g| self.exp(*g) > 0)
    }

    fn without_first(&self, g: Gen) -> Mono {
        let mut m = *self;
        m.0[g.index()] -= 1;
        m
    }

    fn with_prepended(&self, g: Gen) -> Mono {
        let mut m = *self;
        m.0[g.index()] += 1;
        m
    }

    pub fn render(&self, alg: Algebra) -> String {
        let parts: Vec<String> = Gen::ALL
            .into_iter()
            .filter(|g| self.exp(*g) > 0)
            .map(|g| match self.exp(g) {
                1 => alg.letter(g),
                n => format!("{}^{n}", alg.letter(g)),
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

type Terms = Arc<Vec<(Mono, Rational)>>;

/// Left multiplication of a normal-ordered monomial by one generator, with a
/// shared memo table. Values are deterministic, so concurrent fills are
/// idempotent.
struct Engine {
    alg: Algebra,
    memo: RwLock<HashMap<(Gen, Mono), Terms>>,
}

impl Engine {
    fn get(alg: Algebra) -> &'static Engine {
        static ENGINES: OnceLock<[Engine; 2]> = OnceLock::new();
        let engines = ENGINES
            .get_or_init(|| [Algebra::G, Algebra::L0].map(|alg| Engine { alg, memo: RwLock::new(HashMap::new()) }));
        &engines[alg as usize]
    }

    fn lmul(&self, g: Gen, m: Mono) -> Terms {
        if let Some(hit) = self.memo.read().unwrap().get(&(g, m)) {
            return hit.clone();
        }
        let out = Arc::new(self.lmul_uncached(g, m));
        self.memo.write().unwrap().insert((g, m), out.clone());
        out
    }

    fn lmul_uncached(&self, g: Gen, m: Mono) -> Vec<(Mono, Rational)> {
        let mut acc = BTreeMap::new();
        match m.first() {
            Some(u) if u < g => {
                // g u rest = ± u (g rest) + [g,u] rest
                let rest = m.without_first(u);
                let sign = if g.is_odd() && u.is_odd() { -1 } else { 1 };
                for (mm, c) in self.lmul(g, rest).iter() {
                    for (m2, c2) in self.lmul(u, *mm).iter() {
                        add_into(&mut acc, *m2, c * c2 * Rational::from(sign));
                    }
                }
                for (k, v) in bracket(self.alg, g, u) {
                    for (mm, c) in self.lmul(k, rest).iter() {
                        add_into(&mut acc, *mm, c * Rational::from(v));
                    }
                }
            }
            Some(u) if u == g && g.is_odd() => {
                // g g = [g,g]/2
                let rest = m.without_first(u);
                for (k, v) in bracket(self.alg, g, g) {
                    for (mm, c) in self.lmul(k, rest).iter() {
                        add_into(&mut acc, *mm, c * Rational::new(v, 2));
                    }
                }
            }
            _ => {
                acc.insert(m.with_prepended(g), Rational::one());
            }
        }
        acc.into_iter().collect()
    }
}

fn add_into(acc: &mut BTreeMap<Mono, Rational>, m: Mono, c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(m).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&m);
    }
}

/// Element of U(g) or U(L₀): a finite sum of PBW monomials, stored sorted and
/// without zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UEElement {
    alg: Algebra,
    terms: BTreeMap<Mono, Rational>,
}

impl UEElement {
    pub fn zero(alg: Algebra) -> Self {
        UEElement { alg, terms: BTreeMap::new() }
    }

    pub fn one(alg: Algebra) -> Self {
        UEElement::scalar(alg, Rational::one())
    }

    pub fn scalar(alg: Algebra, c: Rational) -> Self {
        UEElement::term(alg, Mono::ONE, c)
    }

    pub fn term(alg: Algebra, m: Mono, c: Rational) -> Self {
        let mut out = UEElement::zero(alg);
        add_into(&mut out.terms, m, c);
        out
    }

    pub fn gen(alg: Algebra, g: Gen) -> Self {
        UEElement::term(alg, Mono::ONE.with_prepended(g), Rational::one())
    }

    /// Product of a word of generators, normal-ordered.
    pub fn from_word(alg: Algebra, word: &[Gen]) -> Self {
        let mut out = UEElement::one(alg);
        for g in word.iter().rev() {
            out = out.left_mul_gen(*g);
        }
        out
    }

    pub fn algebra(&self) -> Algebra {
        self.alg
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Mono) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Parity when every term has the same parity; `None` for mixed elements
    /// and for zero.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(Mono::parity);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = UEElement::zero(self.alg);
        for (m, v) in &self.terms {
            add_into(&mut out.terms, *m, v * c);
        }
        out
    }

    pub fn left_mul_gen(&self, g: Gen) -> Self {
        let engine = Engine::get(self.alg);
        let mut out = UEElement::zero(self.alg);
        for (m, c) in &self.terms {
            for (m2, c2) in engine.lmul(g, *m).iter() {
                add_into(&mut out.terms, *m2, c * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = UEElement::one(self.alg);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Supercommutator `ab - (-1)^{|a||b|} ba` for homogeneous operands;
    /// plain commutator otherwise.
    pub fn supercommutator(&self, other: &UEElement) -> Self {
        let sign = match (self.parity(), other.parity()) {
            (Some(1), Some(1)) => -1,
            _ => 1,
        };
        &(self * other) - &(other * self).scale(&Rational::from(sign))
    }
}

/// PBW product of two elements of the same algebra.
pub fn nf_mul(a: &UEElement, b: &UEElement) -> UEElement {
    assert_eq!(a.alg, b.alg, "operands live in different algebras");
    let mut out = UEElement::zero(a.alg);
    for (m, c) in &a.terms {
        let mut cur = b.clone();
        for g in m.word().into_iter().rev() {
            cur = cur.left_mul_gen(g);
        }
        for (m2, c2) in cur.terms {
            add_into(&mut out.terms, m2, c * &c2);
        }
    }
    out
}

impl fmt::Display for UEElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // highest-degree terms first, scalar last
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if *m == Mono::ONE {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.render(self.alg))?;
            } else {
                write!(f, "{abs}*{}", m.render(self.alg))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UEElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.alg, self)
    }
}

impl Mul<&UEElement> for &UEElement {
    type Output = UEElement;
    fn mul(self, rhs: &UEElement) -> UEElement {
        nf_mul(self, rhs)
    }
}

impl Add<&UEElement> for &UEElement {
    type Output = UEElement;
    fn add(self, rhs: &UEElement) -> UEElement {
        assert_eq!(self.alg, rhs.alg, "operands live in different algebras");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            add_into(&mut out.terms, *m, c.clone());
        }
        out
    }
}

impl Sub<&UEElement> for &UEElement {
    type Output = UEElement;
    fn sub(self, rhs: &UEElement) -> UEElement {
        self + &-rhs
    }
}

impl Neg for &UEElement {
    type Output = UEElement;
    fn neg(self) -> UEElement {
        self.scale(&-Rational::one())
    }
}
