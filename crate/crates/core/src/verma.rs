//! Truncated Verma modules `M(𝓁,j)` and generalized Verma modules `V(𝓁,ℂ)`
//! over affine osp(1|2), with exact mode actions and singular-vector checks.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::admissible::{enumerate_weights, valid_pairs_up_to_product, AdmissiblePair};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::pbw::{bracket, mff_word, Algebra, Gen, Letter, MffKind, ProjectionStatus};
use crate::q;

/// `a ⊗ tⁿ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AffGen {
    pub base: Gen,
    pub mode: i64,
}

impl AffGen {
    pub fn new(base: Gen, mode: i64) -> Self {
        AffGen { base, mode }
    }

    /// Sort key inside PBW monomials: modes descending, then `f y h x e`.
    fn key(self) -> (i64, Gen) {
        (-self.mode, self.base)
    }

    pub fn is_odd(self) -> bool {
        self.base.is_odd()
    }
}

impl fmt::Display for AffGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.base, self.mode)
    }
}

/// The invariant form: `(e,f)=(f,e)=1, (h,h)=2, (x,y)=−(y,x)=2`.
pub fn invariant_form(a: Gen, b: Gen) -> i64 {
    match (a, b) {
        (Gen::E, Gen::F) | (Gen::F, Gen::E) => 1,
        (Gen::H, Gen::H) => 2,
        (Gen::X, Gen::Y) => 2,
        (Gen::Y, Gen::X) => -2,
        _ => 0,
    }
}

/// `[a(m), b(n)] = [a,b](m+n) + m·δ_{m+n,0}·(a,b)·k`, returned as the loop
/// part and the coefficient of `k`.
pub fn affine_bracket(a: AffGen, b: AffGen) -> (Vec<(AffGen, i64)>, i64) {
    let mode = a.mode + b.mode;
    let loop_part = bracket(Algebra::G, a.base, b.base).into_iter().map(|(g, c)| (AffGen::new(g, mode), c)).collect();
    let central = if mode == 0 { a.mode * invariant_form(a.base, b.base) } else { 0 };
    (loop_part, central)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleKind {
    /// `M(𝓁,j)`, freely generated by `N₋ = ℂf ⊕ ℂy ⊕ g⊗t⁻¹ℂ[t⁻¹]`.
    Verma,
    /// `V(𝓁,ℂ)`: all of `g` and `g⊗tℂ[t]` annihilate the vacuum.
    Generalized,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VermaConfig {
    pub level: Rational,
    pub j: Rational,
    pub kind: ModuleKind,
    pub depth_bound: u32,
}

pub const DEFAULT_DEPTH: u32 = 6;

impl VermaConfig {
    pub fn verma(level: Rational, j: Rational) -> Self {
        VermaConfig { level, j, kind: ModuleKind::Verma, depth_bound: DEFAULT_DEPTH }
    }

    pub fn generalized(level: Rational) -> Self {
        VermaConfig { level, j: Rational::zero(), kind: ModuleKind::Generalized, depth_bound: DEFAULT_DEPTH }
    }

    pub fn with_depth(mut self, depth_bound: u32) -> Self {
        self.depth_bound = depth_bound;
        self
    }

    /// Whether `g` is a free (creation) letter on the highest-weight vector.
    pub fn creates(&self, g: AffGen) -> bool {
        match self.kind {
            ModuleKind::Verma => g.mode < 0 || (g.mode == 0 && matches!(g.base, Gen::F | Gen::Y)),
            ModuleKind::Generalized => g.mode < 0,
        }
    }
}

/// A PBW monomial in creation letters, stored letter by letter in normal
/// order (odd letters appear at most once per mode).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VMono(Vec<AffGen>);

impl VMono {
    pub fn letters(&self) -> &[AffGen] {
        &self.0
    }

    /// Total t-degree `Σ −mode`.
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|g| -g.mode).sum()
    }

    /// How far the monomial lowers the h-weight.
    pub fn drop(&self) -> i64 {
        -self.0.iter().map(|g| g.base.h_weight()).sum::<i64>()
    }

    fn prepend(&self, g: AffGen) -> VMono {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(g);
        v.extend_from_slice(&self.0);
        VMono(v)
    }
}

impl fmt::Display for VMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let g = self.0[i];
            let mut k = 1;
            while i + k < self.0.len() && self.0[i + k] == g {
                k += 1;
            }
            parts.push(if k == 1 { g.to_string() } else { format!("{g}^{k}") });
            i += k;
        }
        parts.push("v".to_string());
        f.write_str(&parts.join("*"))
    }
}

/// A finite combination of PBW monomials applied to the highest-weight
/// vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VermaVector {
    terms: BTreeMap<VMono, Rational>,
}

impl VermaVector {
    pub fn zero() -> Self {
        VermaVector::default()
    }

    pub fn highest_weight() -> Self {
        VermaVector::basis(VMono::default())
    }

    pub fn basis(m: VMono) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, Rational::one());
        VermaVector { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&VMono, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &VMono) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: VMono, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &VermaVector) -> VermaVector {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> VermaVector {
        let mut out = VermaVector::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// `(t-degree, drop)` when every term shares it.
    pub fn bidegree(&self) -> Option<(i64, i64)> {
        let mut it = self.terms.keys().map(|m| (m.degree(), m.drop()));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }
}

impl fmt::Display for VermaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let abs = c.abs();
            if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

type Terms = Arc<Vec<(VMono, Rational)>>;

type SliceCache = HashMap<(u32, i64), Arc<Vec<VMono>>>;

/// A module with its memo tables: the mode action on basis monomials and the
/// slice bases. Both are filled idempotently and may be shared across
/// threads.
pub struct VermaModule {
    cfg: VermaConfig,
    act_memo: RwLock<HashMap<(AffGen, VMono), Terms>>,
    slices: RwLock<SliceCache>,
}

impl fmt::Debug for VermaModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("VermaModule").field("cfg", &self.cfg).finish_non_exhaustive()
    }
}

impl VermaModule {
    pub fn new(cfg: VermaConfig) -> Result<Self> {
        if cfg.kind == ModuleKind::Generalized && !cfg.j.is_zero() {
            return Err(Error::Invalid("a generalized Verma module has j = 0".into()));
        }
        Ok(VermaModule { cfg, act_memo: RwLock::default(), slices: RwLock::default() })
    }

    pub fn config(&self) -> &VermaConfig {
        &self.cfg
    }

    /// Basis of the `(d, drop)` slice, in normal-order sorted order.
    pub fn slice_basis(&self, d: u32, drop: &Rational) -> Result<Arc<Vec<VMono>>> {
        if d > self.cfg.depth_bound {
            return Err(Error::DepthOverflow { needed: d as i64, bound: self.cfg.depth_bound });
        }
        let Some(drop) = drop.to_i64() else {
            return Ok(Arc::new(Vec::new()));
        };
        if let Some(hit) = self.slices.read().unwrap().get(&(d, drop)) {
            return Ok(hit.clone());
        }
        let mut out = Vec::new();
        let mut tail = Vec::new();
        self.fill_slice(1, d as i64, drop, &mut tail, &mut out);
        out.sort();
        let out = Arc::new(out);
        self.slices.write().unwrap().insert((d, drop), out.clone());
        Ok(out)
    }

    /// Chooses letters of mode `−n, −n−1, …` with total degree `left`, then
    /// completes with the unique mode-0 part of the remaining drop.
    fn fill_slice(&self, n: i64, left: i64, drop: i64, acc: &mut Vec<AffGen>, out: &mut Vec<VMono>) {
        if left == 0 {
            let rest: i64 = drop + acc.iter().map(|g| g.base.h_weight()).sum::<i64>();
            let mut letters: Vec<AffGen> = match self.cfg.kind {
                ModuleKind::Generalized if rest == 0 => Vec::new(),
                ModuleKind::Verma if rest >= 0 => {
                    let eps = rest % 2;
                    let mut v = vec![AffGen::new(Gen::F, 0); ((rest - eps) / 2) as usize];
                    if eps == 1 {
                        v.push(AffGen::new(Gen::Y, 0));
                    }
                    v
                }
                _ => return,
            };
            letters.extend(acc.iter().copied());
            out.push(VMono(letters));
            return;
        }
        if n > left {
            return;
        }
        // odometer over the exponents of f,y,h,x,e at mode −n, odd ones capped at 1
        let max = left / n;
        let mut exps = [0i64; 5];
        loop {
            let used: i64 = exps.iter().sum::<i64>() * n;
            if used <= left {
                let start = acc.len();
                for g in Gen::ALL {
                    for _ in 0..exps[g.index()] {
                        acc.push(AffGen::new(g, -n));
                    }
                }
                self.fill_slice(n + 1, left - used, drop, acc, out);
                acc.truncate(start);
            }
            let mut i = 0;
            loop {
                if i == 5 {
                    return;
                }
                let cap = if Gen::ALL[i].is_odd() { 1 } else { max };
                if exps[i] < cap {
                    exps[i] += 1;
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }

    /// Applies `g` to `v`. Errors when the result would exceed the depth bound.
    pub fn act(&self, g: AffGen, v: &VermaVector) -> Result<VermaVector> {
        let mut out = VermaVector::zero();
        for (m, c) in &v.terms {
            let needed = m.degree() - g.mode;
            if needed > self.cfg.depth_bound as i64 {
                return Err(Error::DepthOverflow { needed, bound: self.cfg.depth_bound });
            }
            for (m2, c2) in self.act_mono(g, m).iter() {
                out.add_term(m2.clone(), c * c2);
            }
        }
        Ok(out)
    }

    fn act_mono(&self, g: AffGen, m: &VMono) -> Terms {
        if let Some(hit) = self.act_memo.read().unwrap().get(&(g, m.clone())) {
            return hit.clone();
        }
        let out = Arc::new(self.act_uncached(g, m));
        self.act_memo.write().unwrap().insert((g, m.clone()), out.clone());
        out
    }

    fn act_uncached(&self, g: AffGen, m: &VMono) -> Vec<(VMono, Rational)> {
        let mut acc = VermaVector::zero();
        let creates = self.cfg.creates(g);
        match m.0.first() {
            None => {
                if creates {
                    acc.add_term(m.prepend(g), Rational::one());
                } else if g == AffGen::new(Gen::H, 0) {
                    acc.add_term(m.clone(), self.cfg.j.clone());
                }
            }
            Some(&u) if creates && (g.key() < u.key() || (g == u && !g.is_odd())) => {
                acc.add_term(m.prepend(g), Rational::one());
            }
            Some(&u) => {
                let rest = VMono(m.0[1..].to_vec());
                let (loop_part, central) = affine_bracket(g, u);
                if g == u {
                    // odd square: g g = [g,g]/2
                    for (k, c) in loop_part {
                        for (m2, c2) in self.act_mono(k, &rest).iter() {
                            acc.add_term(m2.clone(), c2 * &q!(c, 2));
                        }
                    }
                    acc.add_term(rest, &self.cfg.level * &q!(central, 2));
                } else {
                    // g u rest = ± u (g rest) + [g,u] rest
                    let sign = if g.is_odd() && u.is_odd() { q!(-1) } else { q!(1) };
                    for (m2, c2) in self.act_mono(g, &rest).iter() {
                        for (m3, c3) in self.act_mono(u, m2).iter() {
                            acc.add_term(m3.clone(), &sign * c2 * c3);
                        }
                    }
                    for (k, c) in loop_part {
                        for (m2, c2) in self.act_mono(k, &rest).iter() {
                            acc.add_term(m2.clone(), c2 * &q!(c));
                        }
                    }
                    acc.add_term(rest, &self.cfg.level * &q!(central));
                }
            }
        }
        acc.terms.into_iter().collect()
    }

    /// Applies a word of generators (rightmost first).
    pub fn apply_word(&self, word: &[AffGen], v: &VermaVector) -> Result<VermaVector> {
        let mut out = v.clone();
        for g in word.iter().rev() {
            out = self.act(*g, &out)?;
        }
        Ok(out)
    }

    /// True iff `e(0), x(0), f(1), y(1), h(1)` all annihilate `v`.
    pub fn is_singular(&self, v: &VermaVector) -> Result<bool> {
        for g in annihilator_generators() {
            if !self.act(g, v)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Basis of the singular vectors in the `(d, drop)` slice: the common
    /// kernel of the annihilator generators, in reduced echelon form.
    pub fn singular_subspace(&self, d: u32, drop: &Rational) -> Result<Vec<VermaVector>> {
        let basis = self.slice_basis(d, drop)?;
        let images = basis
            .iter()
            .map(|b| {
                let v = VermaVector::basis(b.clone());
                annihilator_generators().iter().map(|g| self.act(*g, &v)).collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let keys: BTreeSet<(usize, &VMono)> = images
            .iter()
            .flat_map(|im| im.iter().enumerate().flat_map(|(i, v)| v.terms().map(move |(k, _)| (i, k))))
            .collect();
        let mut rows: Vec<Vec<Rational>> =
            keys.iter().map(|(i, k)| images.iter().map(|im| im[*i].coeff(k)).collect()).collect();
        let n = basis.len();
        let mut pivots = Vec::new();
        for c in 0..n {
            let r = pivots.len();
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
            rows.swap(r, p);
            let inv = rows[r][c].recip()?;
            rows[r] = rows[r].iter().map(|x| x * &inv).collect();
            for i in 0..rows.len() {
                if i != r && !rows[i][c].is_zero() {
                    let f = rows[i][c].clone();
                    let pivot_row = rows[r].clone();
                    for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                        *x = &*x - &(y * &f);
                    }
                }
            }
            pivots.push(c);
        }
        Ok((0..n)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = VermaVector::basis(basis[free].clone());
                for (r, &pc) in pivots.iter().enumerate() {
                    v = v.add(&VermaVector::basis(basis[pc].clone()).scale(&-rows[r][free].clone()));
                }
                v
            })
            .collect())
    }

    /// `h(0)`-eigenvalue of a monomial: `j − drop`.
    pub fn h_weight(&self, m: &VMono) -> Rational {
        &self.cfg.j - &q!(m.drop())
    }
}

/// The finite set checked for singularity; it generates `N₊`.
pub fn annihilator_generators() -> [AffGen; 5] {
    [
        AffGen::new(Gen::E, 0),
        AffGen::new(Gen::X, 0),
        AffGen::new(Gen::F, 1),
        AffGen::new(Gen::Y, 1),
        AffGen::new(Gen::H, 1),
    ]
}

/// Basis elements `a(n)` reached by iterated brackets of `gens`, keeping
/// modes in `0..=max_mode`. Every bracket of two basis elements is a single
/// basis element (up to a scalar), so this is the spanned subalgebra.
pub fn bracket_closure(gens: &[AffGen], max_mode: i64) -> BTreeSet<AffGen> {
    let mut seen: BTreeSet<AffGen> = gens.iter().copied().collect();
    loop {
        let current: Vec<AffGen> = seen.iter().copied().collect();
        let mut grew = false;
        for a in &current {
            for b in &current {
                let (loop_part, _) = affine_bracket(*a, *b);
                for (g, c) in loop_part {
                    if c != 0 && (0..=max_mode).contains(&g.mode) && seen.insert(g) {
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return seen;
        }
    }
}

/// Letters of `mff_word` as affine generators.
pub fn word_letters(pair: &AdmissiblePair, m: i64, s: i64, kind: MffKind) -> Result<Vec<AffGen>> {
    let word = mff_word(pair, m, s, kind)?;
    let mut out = Vec::new();
    for (l, e) in word.integer_factors()? {
        let g = match l {
            Letter::Y0 => AffGen::new(Gen::Y, 0),
            Letter::EMinus1 => AffGen::new(Gen::E, -1),
        };
        out.extend(std::iter::repeat_n(g, e as usize));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub enum SingularOutcome {
    Vector(SingularVector),
    /// The MFF word has fractional exponents.
    Fractional,
}

#[derive(Clone, Debug)]
pub struct SingularVector {
    pub vector: VermaVector,
    pub degree: i64,
    /// h-weight drop predicted by the word's exponent sums.
    pub expected_drop: i64,
}

/// `F(m,s)·v` for an integer-instance MFF word.
pub fn singular_vector(
    module: &VermaModule,
    pair: &AdmissiblePair,
    m: i64,
    s: i64,
    kind: MffKind,
) -> Result<SingularOutcome> {
    let w = pair.weight(m, s)?;
    let cfg = module.config();
    if cfg.kind == ModuleKind::Verma && cfg.j != w.j {
        return Err(Error::Invalid(format!("module highest weight {} differs from j={} of {w}", cfg.j, w.j)));
    }
    let word = mff_word(pair, m, s, kind)?;
    if !word.integer_instance() {
        return Ok(SingularOutcome::Fractional);
    }
    let letters = word_letters(pair, m, s, kind)?;
    let y = word.letter_total(Letter::Y0).to_i64().expect("integer instance");
    let e = word.letter_total(Letter::EMinus1).to_i64().expect("integer instance");
    let vector = module.apply_word(&letters, &VermaVector::highest_weight())?;
    Ok(SingularOutcome::Vector(SingularVector { vector, degree: e, expected_drop: y - 2 * e }))
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularCheck {
    pub p: i64,
    pub q: i64,
    pub m: i64,
    pub s: i64,
    pub kind: MffKind,
    pub status: ProjectionStatus,
    pub degree: Option<i64>,
    pub detail: Option<String>,
}

/// Builds `F(m,s)·v` in `M(𝓁,j)` and checks that it is a nonzero singular
/// vector of the predicted bidegree. Fractional words and words deeper than
/// `depth` are skipped.
pub fn check_singular(pair: &AdmissiblePair, m: i64, s: i64, kind: MffKind, depth: u32) -> Result<SingularCheck> {
    let w = pair.weight(m, s)?;
    let word = mff_word(pair, m, s, kind)?;
    let mut check = SingularCheck {
        p: pair.p,
        q: pair.q,
        m,
        s,
        kind,
        status: ProjectionStatus::Skipped,
        degree: None,
        detail: None,
    };
    if !word.integer_instance() {
        check.detail = Some("fractional".into());
        return Ok(check);
    }
    let degree = word.letter_total(Letter::EMinus1).to_i64().expect("integer instance");
    check.degree = Some(degree);
    if degree > depth as i64 {
        check.detail = Some(format!("degree {degree} exceeds depth {depth}"));
        return Ok(check);
    }
    let module = VermaModule::new(VermaConfig::verma(pair.level(), w.j).with_depth(depth))?;
    let SingularOutcome::Vector(sv) = singular_vector(&module, pair, m, s, kind)? else {
        unreachable!("integer instance")
    };
    let failing: Vec<String> = if sv.vector.is_zero() {
        vec!["vector is zero".into()]
    } else {
        let mut out = Vec::new();
        if sv.vector.bidegree() != Some((sv.degree, sv.expected_drop)) {
            out.push("bidegree mismatch".into());
        }
        for g in annihilator_generators() {
            if !module.act(g, &sv.vector)?.is_zero() {
                out.push(format!("{g} does not annihilate"));
            }
        }
        out
    };
    if failing.is_empty() {
        check.status = ProjectionStatus::Pass;
    } else {
        check.status = ProjectionStatus::Fail;
        check.detail = Some(failing.join("; "));
    }
    Ok(check)
}

/// `check_singular` over every weight and both words of every valid pair
/// with `p·q ≤ max_pq`.
pub fn singular_sweep(max_pq: i64, depth: u32) -> Result<Vec<SingularCheck>> {
    let jobs: Vec<(AdmissiblePair, i64, i64, MffKind)> = valid_pairs_up_to_product(max_pq)
        .into_iter()
        .flat_map(|pr| {
            enumerate_weights(&pr).into_iter().flat_map(move |w| [MffKind::F1, MffKind::F2].map(|k| (pr, w.m, w.s, k)))
        })
        .collect();
    jobs.par_iter().map(|(pr, m, s, k)| check_singular(pr, *m, *s, *k, depth)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalSubmoduleReport {
    pub p: i64,
    pub q: i64,
    /// `F₁(1,0)𝟙 = y(0)𝟙 = 0` in `V(𝓁,ℂ)`.
    pub f1_vanishes: bool,
    /// `F₂(1,0)𝟙` is singular; `None` when the word is fractional.
    pub f2_singular: Option<bool>,
    pub f2_degree: Option<i64>,
}

impl MaximalSubmoduleReport {
    pub fn passed(&self) -> bool {
        self.f1_vanishes && self.f2_singular != Some(false)
    }
}

pub fn maximal_submodule_check(pair: &AdmissiblePair) -> Result<MaximalSubmoduleReport> {
    let word = mff_word(pair, 1, 0, MffKind::F2)?;
    let depth = word.letter_total(Letter::EMinus1).to_i64().unwrap_or(0).max(0) as u32;
    let module = VermaModule::new(VermaConfig::generalized(pair.level()).with_depth(depth.max(DEFAULT_DEPTH)))?;
    let vac = VermaVector::highest_weight();
    let f1 = module.apply_word(&word_letters(pair, 1, 0, MffKind::F1)?, &vac)?;
    let (f2_singular, f2_degree) = match singular_vector(&module, pair, 1, 0, MffKind::F2)? {
        SingularOutcome::Fractional => (None, None),
        SingularOutcome::Vector(sv) => (Some(!sv.vector.is_zero() && module.is_singular(&sv.vector)?), Some(sv.degree)),
    };
    Ok(MaximalSubmoduleReport { p: pair.p, q: pair.q, f1_vanishes: f1.is_zero(), f2_singular, f2_degree })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(base: Gen, mode: i64) -> AffGen {
        AffGen::new(base, mode)
    }

    fn pair(p: i64, q: i64) -> AdmissiblePair {
        AdmissiblePair::new(p, q).unwrap()
    }

    #[test]
    fn slices() {
        let m = VermaModule::new(VermaConfig::verma(q!(1), q!(1))).unwrap();
        let b = m.slice_basis(0, &q!(2)).unwrap();
        assert_eq!(b.as_slice(), &[VMono(vec![g(Gen::F, 0)])]);
        let b = m.slice_basis(1, &q!(-2)).unwrap();
        assert_eq!(b.as_slice(), &[VMono(vec![g(Gen::E, -1)])]);
        let gen = VermaModule::new(VermaConfig::generalized(q!(1))).unwrap();
        assert!(gen.slice_basis(0, &q!(1)).unwrap().is_empty());
        assert!(m.slice_basis(7, &q!(0)).is_err());
    }

    #[test]
    fn slice_sizes_match_brute_force_counts() {
        // every monomial reachable by creation letters lands in exactly one slice
        let m = VermaModule::new(VermaConfig::verma(q!(1), q!(0))).unwrap();
        for d in 0..=3u32 {
            for drop in -2 * d as i64..=6 {
                for mono in m.slice_basis(d, &q!(drop)).unwrap().iter() {
                    assert_eq!(mono.degree(), d as i64);
                    assert_eq!(mono.drop(), drop);
                    let mut sorted = mono.0.clone();
                    sorted.sort_by_key(|a| a.key());
                    assert_eq!(sorted, mono.0);
                }
            }
        }
        // degree 1, drop 0: h(−1), f(0)e(−1), y(0)x(−1)
        assert_eq!(m.slice_basis(1, &q!(0)).unwrap().len(), 3);
    }

    #[test]
    fn worked_actions() {
        let gen = VermaModule::new(VermaConfig::generalized(q!(1))).unwrap();
        let e2 = gen.apply_word(&[g(Gen::E, -1), g(Gen::E, -1)], &VermaVector::highest_weight()).unwrap();
        assert!(gen.act(g(Gen::F, 1), &e2).unwrap().is_zero());
        assert!(gen.act(g(Gen::Y, 1), &e2).unwrap().is_zero());
        assert!(gen.is_singular(&e2).unwrap());

        let m = VermaModule::new(VermaConfig::verma(q!(1), q!(1))).unwrap();
        let vac = VermaVector::highest_weight();
        assert!(m.act(g(Gen::X, 0), &vac).unwrap().is_zero());
        let y1 = m.act(g(Gen::Y, 0), &vac).unwrap();
        assert_eq!(m.act(g(Gen::X, 0), &y1).unwrap(), vac);
        assert!(!m.is_singular(&y1).unwrap());
        let y3 = m.apply_word(&[g(Gen::Y, 0); 3], &vac).unwrap();
        assert!(m.is_singular(&y3).unwrap());
    }

    #[test]
    fn f1_e_minus_one_power() {
        // f(1) e(−1)^n v = n(𝓁 − j − n + 1) e(−1)^{n−1} v
        let (level, j) = (q!(3, 2), q!(1, 3));
        let m = VermaModule::new(VermaConfig::verma(level.clone(), j.clone())).unwrap();
        for n in 1..=4i64 {
            let v = m.apply_word(&vec![g(Gen::E, -1); n as usize], &VermaVector::highest_weight()).unwrap();
            let got = m.act(g(Gen::F, 1), &v).unwrap();
            let lower = m.apply_word(&vec![g(Gen::E, -1); n as usize - 1], &VermaVector::highest_weight()).unwrap();
            let coeff = q!(n) * (&level - &j - q!(n) + q!(1));
            assert_eq!(got, lower.scale(&coeff));
        }
    }

    #[test]
    fn depth_overflow() {
        let m = VermaModule::new(VermaConfig::verma(q!(1), q!(0)).with_depth(1)).unwrap();
        let v = m.act(g(Gen::E, -1), &VermaVector::highest_weight()).unwrap();
        assert!(matches!(m.act(g(Gen::E, -1), &v), Err(Error::DepthOverflow { .. })));
    }

    #[test]
    fn annihilators_generate_positive_part() {
        let depth = DEFAULT_DEPTH as i64;
        let closure = bracket_closure(&annihilator_generators(), depth);
        for n in 1..=depth {
            for base in Gen::ALL {
                assert!(closure.contains(&g(base, n)), "{base}({n})");
            }
        }
        assert!(closure.contains(&g(Gen::E, 0)) && closure.contains(&g(Gen::X, 0)));
        for zero_mode in [Gen::F, Gen::Y, Gen::H] {
            assert!(!closure.contains(&g(zero_mode, 0)));
        }
    }

    #[test]
    fn singular_examples() {
        let pr = pair(5, 1);
        let m = VermaModule::new(VermaConfig::verma(pr.level(), q!(1))).unwrap();
        let SingularOutcome::Vector(sv) = singular_vector(&m, &pr, 3, 0, MffKind::F1).unwrap() else {
            panic!("integer instance")
        };
        // y(0)³ = −f(0)y(0) after the odd-square collapse
        assert_eq!(sv.vector.to_string(), "-f(0)*y(0)*v");
        assert_eq!(sv.degree, 0);
        assert!(m.is_singular(&sv.vector).unwrap());

        let pr = pair(8, 2);
        let j = pr.weight(4, 1).unwrap().j;
        let m = VermaModule::new(VermaConfig::verma(pr.level(), j)).unwrap();
        let SingularOutcome::Vector(sv) = singular_vector(&m, &pr, 4, 1, MffKind::F1).unwrap() else {
            panic!("integer instance")
        };
        assert_eq!(sv.degree, 2);
        assert_eq!(sv.vector.bidegree(), Some((2, sv.expected_drop)));
        assert_eq!(sv.expected_drop, 4);
        // the consolidated word y(0)⁸e(−1)² is not singular: x(0) acts by −4 on
        // y(0)⁸ applied to the highest weight vector e(−1)²v of weight 7/2
        assert!(!m.is_singular(&sv.vector).unwrap());
        let sing = m.singular_subspace(2, &q!(4)).unwrap();
        assert_eq!(sing.len(), 1);
        assert!(m.is_singular(&sing[0]).unwrap());
    }

    #[test]
    fn singular_subspace_recovers_known_vectors() {
        let m = VermaModule::new(VermaConfig::verma(q!(1), q!(1))).unwrap();
        let sing = m.singular_subspace(0, &q!(3)).unwrap();
        assert_eq!(sing.len(), 1);
        assert_eq!(sing[0].to_string(), "f(0)*y(0)*v");
        assert!(m.singular_subspace(0, &q!(1)).unwrap().is_empty());
    }

    #[test]
    fn maximal_submodule_examples() {
        for (p, depth) in [(5, 2), (3, 1), (7, 3)] {
            let r = maximal_submodule_check(&pair(p, 1)).unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.f2_degree, Some(depth));
        }
    }
}
