//! The invariants `de`, `Λ`, `Λ∞` and the functions `s_{i,a}` on `σ(g)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use crate::affine_base::SigmaPoint;
use crate::affine_base::{AffineData, AffineType};
use crate::denominators::DenomTable;
use crate::error::{Error, Result};
use crate::scalars::SpectralScalar;

/// Half-width of the window of dual shifts summed over.
pub const WINDOW: i64 = 6;

pub type AffineWeightList = Vec<SigmaPoint>;

/// An integer-valued function on `σ(g)`, invariant under `(j, b) ↦ (j, b·p̃)`.
///
/// Values are stored on representatives with `0 ≤ q6 < q6(p̃)`.
#[derive(Clone, Default)]
pub struct SigmaFunction {
    values: BTreeMap<SigmaPoint, i64>,
    provenance: Option<BTreeMap<SigmaPoint, i64>>,
}

impl SigmaFunction {
    pub fn zero() -> Self {
        Self {
            values: BTreeMap::new(),
            provenance: Some(BTreeMap::new()),
        }
    }

    /// A function given by raw values on canonical representatives, with no generator decomposition.
    pub fn from_values(values: BTreeMap<SigmaPoint, i64>) -> Self {
        let values = values.into_iter().filter(|(_, v)| *v != 0).collect();
        Self {
            values,
            provenance: None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Nonzero values on canonical representatives.
    pub fn support(&self) -> impl Iterator<Item = (SigmaPoint, i64)> + '_ {
        self.values.iter().map(|(p, v)| (*p, *v))
    }

    pub fn support_len(&self) -> usize {
        self.values.len()
    }

    /// The decomposition `Σ c_{j,b} s_{j,b}` this function was built from, if known.
    pub fn provenance(&self) -> Option<&BTreeMap<SigmaPoint, i64>> {
        self.provenance.as_ref()
    }

    pub fn forget_provenance(mut self) -> Self {
        self.provenance = None;
        self
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        let mut values = self.values.clone();
        for (p, v) in &other.values {
            *values.entry(*p).or_insert(0) += sign * v;
        }
        values.retain(|_, v| *v != 0);
        let provenance = match (&self.provenance, &other.provenance) {
            (Some(a), Some(b)) => {
                let mut c = a.clone();
                for (p, v) in b {
                    *c.entry(*p).or_insert(0) += sign * v;
                }
                c.retain(|_, v| *v != 0);
                Some(c)
            }
            _ => None,
        };
        Self { values, provenance }
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self {
            values: self.values.iter().map(|(p, v)| (*p, v * c)).collect(),
            provenance: self
                .provenance
                .as_ref()
                .map(|m| m.iter().map(|(p, v)| (*p, v * c)).collect()),
        }
    }
}

impl PartialEq for SigmaFunction {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
    }
}

impl Eq for SigmaFunction {}

impl fmt::Debug for SigmaFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for SigmaFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .values
            .iter()
            .map(|(p, v)| format!("{}: {}", p, v))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

impl Add for &SigmaFunction {
    type Output = SigmaFunction;
    fn add(self, rhs: &SigmaFunction) -> SigmaFunction {
        self.combine(rhs, 1)
    }
}

impl Sub for &SigmaFunction {
    type Output = SigmaFunction;
    fn sub(self, rhs: &SigmaFunction) -> SigmaFunction {
        self.combine(rhs, -1)
    }
}

impl Add for SigmaFunction {
    type Output = SigmaFunction;
    fn add(self, rhs: SigmaFunction) -> SigmaFunction {
        &self + &rhs
    }
}

impl Sub for SigmaFunction {
    type Output = SigmaFunction;
    fn sub(self, rhs: SigmaFunction) -> SigmaFunction {
        &self - &rhs
    }
}

impl Neg for SigmaFunction {
    type Output = SigmaFunction;
    fn neg(self) -> SigmaFunction {
        self.scale(-1)
    }
}

impl Mul<&SigmaFunction> for i64 {
    type Output = SigmaFunction;
    fn mul(self, rhs: &SigmaFunction) -> SigmaFunction {
        rhs.scale(self)
    }
}

impl std::iter::Sum for SigmaFunction {
    fn sum<I: Iterator<Item = SigmaFunction>>(iter: I) -> Self {
        iter.fold(SigmaFunction::zero(), |a, b| &a + &b)
    }
}

/// Affine data together with its denominators.
#[derive(Clone, Debug)]
pub struct TypeContext {
    pub data: AffineData,
    pub denoms: DenomTable,
}

impl TypeContext {
    pub fn new(ty: AffineType) -> Result<Self> {
        let data = AffineData::build(ty)?;
        let denoms = DenomTable::build(&data)?;
        Ok(Self { data, denoms })
    }

    pub fn rank(&self) -> usize {
        self.data.rank()
    }

    pub fn check_point(&self, p: SigmaPoint) -> Result<()> {
        self.data.check_node(p.node)
    }

    /// The representative of `p` modulo `∼` and `p̃`.
    pub fn key(&self, p: SigmaPoint) -> SigmaPoint {
        let c = self.data.canonical(p);
        let period = self.data.ptilde.q6();
        SigmaPoint::new(
            c.node,
            SpectralScalar::from_parts(c.param.phase() as i64, c.param.q6().rem_euclid(period)),
        )
    }

    pub fn de(&self, p1: SigmaPoint, p2: SigmaPoint) -> u32 {
        let (i, a) = (p1.node, p1.param);
        let (j, b) = (p2.node, p2.param);
        self.denoms.get(i, j).zero_order(b / a) + self.denoms.get(j, i).zero_order(a / b)
    }

    /// `𝒟^k` applied to `p`.
    pub fn dual_shift(&self, p: SigmaPoint, k: i64) -> SigmaPoint {
        SigmaPoint::new(
            self.data.istar_pow(p.node, k),
            p.param * self.data.pstar.pow(k),
        )
    }

    fn window_centre(&self, p1: SigmaPoint, p2: SigmaPoint) -> i64 {
        let diff = p2.param.q6() - p1.param.q6();
        let scale = 6 * self.data.hvee;
        -((2 * diff + scale).div_euclid(2 * scale))
    }

    fn alternating(
        &self,
        p1: SigmaPoint,
        p2: SigmaPoint,
        sign: impl Fn(i64) -> i64,
    ) -> Result<i64> {
        let k0 = self.window_centre(p1, p2);
        let mut total = 0i64;
        for k in k0 - WINDOW..=k0 + WINDOW {
            let v = self.de(p1, self.dual_shift(p2, k)) as i64;
            if v != 0 && (k - k0).abs() >= WINDOW - 1 {
                return Err(Error::SumNotStabilized { k });
            }
            total += sign(k) * v;
        }
        Ok(total)
    }

    /// `Λ∞(V(ϖ_i)_a, V(ϖ_j)_b) = Σ_k (-1)^k de(p1, 𝒟^k p2)`.
    pub fn lambda_inf(&self, p1: SigmaPoint, p2: SigmaPoint) -> Result<i64> {
        self.alternating(p1, p2, |k| if k.rem_euclid(2) == 0 { 1 } else { -1 })
    }

    /// `Λ(V(ϖ_i)_a, V(ϖ_j)_b) = Σ_k (-1)^{k+δ(k<0)} de(p1, 𝒟^k p2)`.
    pub fn lambda(&self, p1: SigmaPoint, p2: SigmaPoint) -> Result<i64> {
        self.alternating(p1, p2, |k| {
            if (k + (k < 0) as i64).rem_euclid(2) == 0 {
                1
            } else {
                -1
            }
        })
    }

    /// Points `(j, b)` where `s_{i,a}` may be nonzero, one per class modulo `p̃`.
    fn candidates(&self, p: SigmaPoint) -> Vec<SigmaPoint> {
        let mut out = Vec::new();
        for j in 1..=self.rank() {
            let fwd = self.denoms.get(p.node, j).iter().map(|(r, _)| p.param * r);
            let bwd = self.denoms.get(j, p.node).iter().map(|(r, _)| p.param / r);
            for b in fwd.chain(bwd) {
                for k in 0..2 {
                    out.push(self.key(self.dual_shift(SigmaPoint::new(j, b), -k)));
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// `s_{i,a} = E(V(ϖ_i)_a)`, the function `(j, b) ↦ Λ∞(V(ϖ_i)_a, V(ϖ_j)_b)`.
    pub fn s_func(&self, p: SigmaPoint) -> Result<SigmaFunction> {
        self.check_point(p)?;
        let mut values = BTreeMap::new();
        for c in self.candidates(p) {
            let v = self.lambda_inf(p, c)?;
            if v != 0 {
                values.insert(c, v);
            }
        }
        let provenance = BTreeMap::from([(self.data.canonical(p), 1)]);
        Ok(SigmaFunction {
            values,
            provenance: Some(provenance),
        })
    }

    /// `E` of a module with the given affine weight.
    pub fn e_of(&self, w: &[SigmaPoint]) -> Result<SigmaFunction> {
        let mut acc = SigmaFunction::zero();
        for p in w {
            acc = &acc + &self.s_func(*p)?;
        }
        Ok(acc)
    }

    pub fn eval(&self, f: &SigmaFunction, p: SigmaPoint) -> i64 {
        f.values.get(&self.key(p)).copied().unwrap_or(0)
    }

    /// `(f, g)`, extended bilinearly from `(s_{i,a}, s_{j,b}) = -Λ∞`.
    pub fn pairing(&self, f: &SigmaFunction, g: &SigmaFunction) -> Result<i64> {
        let (raw, gens) = match (&g.provenance, &f.provenance) {
            (Some(pg), _) => (f, pg),
            (None, Some(pf)) => (g, pf),
            (None, None) => return Err(Error::DecompositionUnavailable),
        };
        Ok(-gens
            .iter()
            .map(|(p, c)| c * self.eval(raw, *p))
            .sum::<i64>())
    }

    pub fn pairing_points(&self, p1: SigmaPoint, p2: SigmaPoint) -> Result<i64> {
        Ok(-self.lambda_inf(p1, p2)?)
    }
}
