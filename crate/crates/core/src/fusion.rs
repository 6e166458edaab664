//! Fusion rules: the closed window formula, the bimodule-quotient oracle, and
//! table-level consistency checks.

use rayon::prelude::*;
use serde::Serialize;

use crate::admissible::{enumerate_weights, unique_ms, AdmissiblePair, AdmissibleWeight};
use crate::error::{Error, Result};
use crate::exactmath::{BiPoly, Rational, UniPoly};
use crate::q;
use crate::zhu::bimodule_build;

/// A multiset of admissible weights, sorted by `(s, m)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct FusionResult {
    pub summands: Vec<AdmissibleWeight>,
}

impl FusionResult {
    fn from_unsorted(mut summands: Vec<AdmissibleWeight>) -> Self {
        summands.sort_by_key(|w| (w.s, w.m));
        FusionResult { summands }
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.summands.windows(2).all(|w| w[0] != w[1])
    }

    pub fn contains(&self, m: i64, s: i64) -> bool {
        self.summands.iter().any(|w| w.m == m && w.s == s)
    }

    pub fn labels(&self) -> Vec<(i64, i64)> {
        self.summands.iter().map(|w| (w.m, w.s)).collect()
    }
}

fn identify(pair: &AdmissiblePair, j: &Rational, context: impl FnOnce() -> String) -> Result<AdmissibleWeight> {
    unique_ms(pair, j).ok_or_else(|| Error::ClosureViolation { value: j.to_string(), context: context() })
}

/// The range of `n` in the window formula, or `None` when the side
/// condition `s₂ ≤ q − s₁ − 1` fails.
pub fn fusion_window(
    pair: &AdmissiblePair,
    w1: &AdmissibleWeight,
    w2: &AdmissibleWeight,
) -> Option<std::ops::RangeInclusive<i64>> {
    if w2.s > pair.q - w1.s - 1 {
        return None;
    }
    Some((w1.m + w2.m - pair.p).max(0)..=(w1.m - 1).min(w2.m - 1))
}

/// `L(j₁) ⊠ L(j₂) = Σₙ L(j₁+j₂−n)` for `max(0, m₁+m₂−p) ≤ n ≤ min(m₁,m₂)−1`
/// when `s₂ ≤ q−s₁−1`, else zero.
pub fn fuse_closed(pair: &AdmissiblePair, w1: &AdmissibleWeight, w2: &AdmissibleWeight) -> Result<FusionResult> {
    let w1 = pair.weight(w1.m, w1.s)?;
    let w2 = pair.weight(w2.m, w2.s)?;
    let Some(window) = fusion_window(pair, &w1, &w2) else {
        return Ok(FusionResult::default());
    };
    let mut out = Vec::new();
    for n in window {
        let j = &(&w1.j + &w2.j) - &q!(n);
        out.push(identify(pair, &j, || format!("{pair} {w1}x{w2} closed n={n}"))?);
    }
    Ok(FusionResult::from_unsorted(out))
}

/// The row data of the oracle for a fixed `j₁`: the reducers `gₙ` of
/// `A(L(j₁))` and the left action of `t` on each stratum `t₂ⁿ`.
pub struct OracleRow {
    pair: AdmissiblePair,
    w1: AdmissibleWeight,
    strata: Vec<(UniPoly, UniPoly)>,
}

impl OracleRow {
    pub fn new(pair: &AdmissiblePair, w1: &AdmissibleWeight) -> Result<Self> {
        let pres = bimodule_build(pair, w1)?;
        let mut strata = Vec::new();
        for (n, g) in pres.reducers().iter().enumerate() {
            let n = n as u32;
            let image = pres.left(&pres.nf(&BiPoly::monomial(Rational::one(), 0, n)));
            let stratum = image.value().stratum(n);
            if image.value() != &BiPoly::from_stratum(&stratum, n) {
                return Err(Error::Invalid(format!("left action left stratum {n} in {pair} {w1}")));
            }
            strata.push((g.clone(), stratum));
        }
        Ok(OracleRow { pair: *pair, w1: w1.clone(), strata })
    }

    /// Stratum `t₂ⁿ` survives the right-action relation `t₁ = j₂` iff
    /// `gcd(gₙ, t₁ − j₂)` is linear, i.e. `gₙ(j₂) = 0`; the left action then
    /// scales it by an eigenvalue that must be an admissible weight.
    pub fn fuse(&self, w2: &AdmissibleWeight) -> Result<FusionResult> {
        let pair = &self.pair;
        let w2 = pair.weight(w2.m, w2.s)?;
        let mut out = Vec::new();
        for (n, (g, stratum)) in self.strata.iter().enumerate() {
            if !g.eval(&w2.j).is_zero() {
                continue;
            }
            let eigen = stratum.eval(&w2.j);
            out.push(identify(pair, &eigen, || format!("{pair} {}x{w2} oracle n={n}", self.w1))?);
        }
        Ok(FusionResult::from_unsorted(out))
    }
}

/// Fusion read off from `A(L(j₁)) ⊗ ℂv_{j₂}` (see [`OracleRow`]).
pub fn fuse_oracle(pair: &AdmissiblePair, w1: &AdmissibleWeight, w2: &AdmissibleWeight) -> Result<FusionResult> {
    OracleRow::new(pair, w1)?.fuse(w2)
}

/// Integrable fusion at positive integer level: `|j₁−j₂| ≤ j ≤ j₁+j₂` with
/// `j + j₁ + j₂ ≤ 2𝓁 + 1`.
pub fn integrable_fuse(level: i64, j1: i64, j2: i64) -> Result<Vec<i64>> {
    if level < 1 {
        return Err(Error::WeightOutOfRange(format!("level {level} is not a positive integer")));
    }
    for j in [j1, j2] {
        if !(0..=level).contains(&j) {
            return Err(Error::WeightOutOfRange(format!("j={j} outside [0, {level}]")));
        }
    }
    Ok(((j1 - j2).abs()..=j1 + j2).filter(|j| j + j1 + j2 <= 2 * level + 1).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionCell {
    pub closed: FusionResult,
    pub oracle: FusionResult,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionTable {
    pub pair: AdmissiblePair,
    pub weights: Vec<AdmissibleWeight>,
    /// `cells[a][b]` is `weights[a] ⊠ weights[b]`.
    pub cells: Vec<Vec<FusionCell>>,
}

impl FusionTable {
    pub fn get(&self, a: usize, b: usize) -> &FusionResult {
        &self.cells[a][b].closed
    }
}

/// Every cell computed both ways (in parallel, collected in weight order).
/// Cells are kept even when the two computations disagree.
pub fn fusion_cells(pair: &AdmissiblePair) -> Result<FusionTable> {
    let weights = enumerate_weights(pair);
    let cells = weights
        .par_iter()
        .map(|w1| {
            let row = OracleRow::new(pair, w1)?;
            weights
                .iter()
                .map(|w2| {
                    let closed = fuse_closed(pair, w1, w2)?;
                    let oracle = row.fuse(w2)?;
                    let agree = closed == oracle;
                    Ok(FusionCell { closed, oracle, agree })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FusionTable { pair: *pair, weights, cells })
}

/// Like [`fusion_cells`], but any closed/oracle disagreement is an error
/// naming the pair and weights.
pub fn fusion_table(pair: &AdmissiblePair) -> Result<FusionTable> {
    let table = fusion_cells(pair)?;
    for (a, row) in table.cells.iter().enumerate() {
        for (b, c) in row.iter().enumerate() {
            if !c.agree {
                return Err(Error::OracleMismatch(format!(
                    "{} {}x{}: closed {:?} oracle {:?}",
                    pair,
                    table.weights[a],
                    table.weights[b],
                    c.closed.labels(),
                    c.oracle.labels()
                )));
            }
        }
    }
    Ok(table)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingReport {
    pub commutative: bool,
    pub vacuum_unit: bool,
    pub closure: bool,
    pub multiplicity_free: bool,
    pub associative: bool,
    /// Associativity is asserted only for `q = 1`.
    pub associativity_asserted: bool,
    pub associativity_failures: usize,
    pub triples: usize,
}

impl RingReport {
    pub fn passed(&self) -> bool {
        self.commutative
            && self.vacuum_unit
            && self.closure
            && self.multiplicity_free
            && (self.associative || !self.associativity_asserted)
    }
}

/// Multiset product extended linearly over the table.
fn fuse_many(table: &FusionTable, left: &[usize], right: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for &a in left {
        for &b in right {
            for w in &table.get(a, b).summands {
                out.push(index_of(table, w));
            }
        }
    }
    out.sort_unstable();
    out
}

fn index_of(table: &FusionTable, w: &AdmissibleWeight) -> usize {
    table.weights.iter().position(|v| v == w).expect("summand is a table weight")
}

pub fn ring_checks(pair: &AdmissiblePair) -> Result<RingReport> {
    let table = fusion_table(pair)?;
    Ok(ring_checks_on(&table))
}

pub fn ring_checks_on(table: &FusionTable) -> RingReport {
    let pair = &table.pair;
    let k = table.weights.len();
    let vac = table.weights.iter().position(|w| w.m == 1 && w.s == 0).expect("vacuum weight");

    let mut commutative = true;
    let mut vacuum_unit = true;
    let mut closure = true;
    let mut multiplicity_free = true;
    for a in 0..k {
        let wa = &table.weights[a];
        let unit = FusionResult { summands: vec![wa.clone()] };
        vacuum_unit &= *table.get(vac, a) == unit && *table.get(a, vac) == unit;
        for b in 0..k {
            let wb = &table.weights[b];
            let r = table.get(a, b);
            commutative &= r == table.get(b, a);
            multiplicity_free &= r.is_multiplicity_free();
            let expect: Vec<(i64, i64)> = match fusion_window(pair, wa, wb) {
                None => Vec::new(),
                Some(window) => window.map(|n| (wa.m + wb.m - 1 - 2 * n, wa.s + wb.s)).collect(),
            };
            let mut got = r.labels();
            let mut expect_sorted = expect.clone();
            got.sort_unstable();
            expect_sorted.sort_unstable();
            closure &= got == expect_sorted && expect.iter().all(|(m, s)| pair.weight(*m, *s).is_ok());
        }
    }

    let mut failures = 0;
    for a in 0..k {
        for b in 0..k {
            let ab = fuse_many(table, &[a], &[b]);
            for c in 0..k {
                let bc = fuse_many(table, &[b], &[c]);
                if fuse_many(table, &ab, &[c]) != fuse_many(table, &[a], &bc) {
                    failures += 1;
                }
            }
        }
    }
    RingReport {
        commutative,
        vacuum_unit,
        closure,
        multiplicity_free,
        associative: failures == 0,
        associativity_asserted: pair.q == 1,
        associativity_failures: failures,
        triples: k * k * k,
    }
}
