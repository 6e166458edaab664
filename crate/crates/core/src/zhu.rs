//! The Zhu algebra `ℂ[t]/⟨f(t)⟩` and the bimodule presentations of
//! `A(L(𝓁,j))` inside `ℂ[t₁,t₂]`.

use serde::Serialize;

use crate::admissible::{vacuum_polynomial, AdmissiblePair, AdmissibleWeight};
use crate::error::Result;
use crate::exactmath::{BiPoly, Rational, UniPoly};
use crate::q;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZhuAlgebra {
    pub pair: AdmissiblePair,
    pub modulus: UniPoly,
}

pub fn zhu_build(pair: &AdmissiblePair) -> ZhuAlgebra {
    ZhuAlgebra { pair: *pair, modulus: vacuum_polynomial(pair) }
}

impl ZhuAlgebra {
    pub fn reduce(&self, a: &UniPoly) -> UniPoly {
        a.rem(&self.modulus).expect("modulus is nonzero")
    }

    pub fn mul(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        self.reduce(&(a * b))
    }

    pub fn dim(&self) -> usize {
        self.modulus.degree().unwrap_or(0) as usize
    }

    /// `gcd(f, f′) = 1`.
    pub fn is_semisimple(&self) -> bool {
        self.modulus.is_squarefree()
    }
}

pub fn zhu_mul(a_alg: &ZhuAlgebra, a: &UniPoly, b: &UniPoly) -> UniPoly {
    a_alg.mul(a, b)
}

/// `A(M)` as a quotient space of `ℂ[t₁,t₂]` with the biaction
/// `t ∗ v = (t₁ + j − t₂∂/∂t₂)v`, `v ∗ t = t₁v`.
///
/// The finite presentations (for `L(𝓁,j)`) quotient by
/// `ℂ[t₁,t₂]t₂^m + Σₙ ℂ[t₁]gₙ(t₁)t₂ⁿ`; the universal one (for `M(𝓁,j)`) has
/// no relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BimodulePresentation {
    pub j: Rational,
    pub weight: Option<AdmissibleWeight>,
    /// `None` for the universal presentation.
    reducers: Option<Vec<UniPoly>>,
}

/// A normal-form representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BimodElement(pub BiPoly);

impl BimodElement {
    pub fn value(&self) -> &BiPoly {
        &self.0
    }
}

/// `gₙ(t₁) = ∏ (t₁ − (i+n)/2 + j′l)` over `0 ≤ i ≤ p−m−1`, `0 ≤ j′ ≤ q−s−1`,
/// `i+n+j′` even.
pub fn reducer(pair: &AdmissiblePair, m: i64, s: i64, n: i64) -> UniPoly {
    let l = pair.shifted_level();
    let mut roots = Vec::new();
    for jp in 0..(pair.q - s) {
        for i in 0..(pair.p - m) {
            if (i + n + jp) % 2 == 0 {
                roots.push(q!(i + n, 2) - &l * q!(jp));
            }
        }
    }
    UniPoly::from_roots(&roots)
}

pub fn bimodule_build(pair: &AdmissiblePair, w: &AdmissibleWeight) -> Result<BimodulePresentation> {
    let w = pair.weight(w.m, w.s)?;
    let reducers = (0..w.m).map(|n| reducer(pair, w.m, w.s, n)).collect();
    Ok(BimodulePresentation { j: w.j.clone(), weight: Some(w), reducers: Some(reducers) })
}

impl BimodulePresentation {
    /// `A(M(𝓁,j)) ≅ ℂ[t₁,t₂]` with no relations.
    pub fn universal(j: Rational) -> Self {
        BimodulePresentation { j, weight: None, reducers: None }
    }

    pub fn is_universal(&self) -> bool {
        self.reducers.is_none()
    }

    pub fn reducers(&self) -> &[UniPoly] {
        self.reducers.as_deref().unwrap_or(&[])
    }

    /// Truncation degree `m`; `None` stands for `m = ∞`.
    pub fn truncation(&self) -> Option<u32> {
        self.reducers.as_ref().map(|r| r.len() as u32)
    }

    pub fn nf(&self, v: &BiPoly) -> BimodElement {
        let Some(reducers) = &self.reducers else {
            return BimodElement(v.clone());
        };
        let mut out = BiPoly::zero();
        for (n, stratum) in v.strata() {
            let Some(g) = reducers.get(n as usize) else { continue };
            let r = stratum.rem(g).expect("reducers are monic");
            out = &out + &BiPoly::from_stratum(&r, n);
        }
        BimodElement(out)
    }

    pub fn left(&self, v: &BimodElement) -> BimodElement {
        let shifted = &(&v.0.mul_t1() + &v.0.scale(&self.j)) - &v.0.euler_t2();
        self.nf(&shifted)
    }

    pub fn right(&self, v: &BimodElement) -> BimodElement {
        self.nf(&v.0.mul_t1())
    }

    /// `Σₙ deg gₙ`; `None` for the universal presentation.
    pub fn dim(&self) -> Option<usize> {
        self.reducers.as_ref().map(|r| r.iter().map(|g| g.degree().unwrap_or(0) as usize).sum())
    }

    /// Basis monomials `t₁^a t₂^n` with `a < deg gₙ`, by `(n, a)`.
    pub fn basis(&self) -> Vec<(u32, u32)> {
        self.reducers()
            .iter()
            .enumerate()
            .flat_map(|(n, g)| (0..g.degree().unwrap_or(0)).map(move |a| (a, n as u32)))
            .collect()
    }
}

pub fn bimodule_nf(p: &BimodulePresentation, v: &BiPoly) -> BimodElement {
    p.nf(v)
}

pub fn bimodule_left(p: &BimodulePresentation, v: &BimodElement) -> BimodElement {
    p.left(v)
}

pub fn bimodule_right(p: &BimodulePresentation, v: &BimodElement) -> BimodElement {
    p.right(v)
}

pub fn bimodule_dim(p: &BimodulePresentation) -> Option<usize> {
    p.dim()
}
