//! Gram matrices, the lattice map onto `W₀`, block labels and block partitions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;

use crate::affine_base::{AffineData, AffineType, Family, SigmaPoint};
use crate::error::{Error, Result};
use crate::finite_roots::invert;
use crate::invariants::{SigmaFunction, TypeContext};
use crate::qdata::{default_qdatum, sigma0_branches, PhiQ, QDatum};
use crate::scalars::SpectralScalar;

/// The Gram matrix of `s_{φ_Q(α_i)}` next to the Cartan matrix it should equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramResult {
    pub matrix: Vec<Vec<i64>>,
    pub expected: Vec<Vec<i64>>,
    pub mismatches: Vec<(usize, usize)>,
}

impl GramResult {
    pub fn is_equal(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Coordinates of a module list, one vector per connected component of `σ(g)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockLabel {
    pub components: BTreeMap<SpectralScalar, Vec<i64>>,
}

impl BlockLabel {
    pub fn is_trivial(&self) -> bool {
        self.components.is_empty()
    }
}

impl fmt::Display for BlockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(t, c)| {
                let coords: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("t={}: [{}]", t, coords.join(", "))
            })
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Everything needed to compute block data for one affine type.
#[derive(Clone, Debug)]
pub struct BlockContext {
    pub ctx: TypeContext,
    pub q: QDatum,
    pub phi: PhiQ,
    simple: Vec<SigmaFunction>,
    cartan_inv: Vec<Vec<Ratio<i64>>>,
}

impl BlockContext {
    pub fn new(ty: AffineType) -> Result<Self> {
        let ctx = TypeContext::new(ty)?;
        let q = default_qdatum(&ctx.data)?;
        let phi = PhiQ::build(&ctx.data, &q);
        let simple = (1..=q.rank())
            .map(|i| ctx.s_func(phi.simple(i)))
            .collect::<Result<Vec<_>>>()?;
        let cartan_inv = invert(q.gfin.cartan());
        Ok(Self {
            ctx,
            q,
            phi,
            simple,
            cartan_inv,
        })
    }

    pub fn data(&self) -> &AffineData {
        &self.ctx.data
    }

    /// `s_{φ_Q(α_i)}`.
    pub fn simple_function(&self, i: usize) -> &SigmaFunction {
        &self.simple[i - 1]
    }

    pub fn gram(&self) -> Result<GramResult> {
        let r = self.q.rank();
        let mut matrix = vec![vec![0; r]; r];
        for i in 1..=r {
            for j in 1..=r {
                matrix[i - 1][j - 1] = self
                    .ctx
                    .pairing_points(self.phi.simple(i), self.phi.simple(j))?;
            }
        }
        let expected = self.q.gfin.cartan().to_vec();
        let mut mismatches = Vec::new();
        for i in 0..r {
            for j in 0..r {
                if matrix[i][j] != expected[i][j] {
                    mismatches.push((i + 1, j + 1));
                }
            }
        }
        Ok(GramResult {
            matrix,
            expected,
            mismatches,
        })
    }

    /// `Σ n_i s_{φ_Q(α_i)}`.
    pub fn expand(&self, n: &[i64]) -> SigmaFunction {
        n.iter().zip(&self.simple).map(|(c, s)| s.scale(*c)).sum()
    }

    /// The coordinates `n` with `Σ n_i s_{φ_Q(α_i)} = f`.
    pub fn psi_lattice(&self, f: &SigmaFunction) -> Result<Vec<i64>> {
        let r = self.q.rank();
        let mut v = Vec::with_capacity(r);
        for s in &self.simple {
            v.push(self.ctx.pairing(s, f)?);
        }
        let mut n = Vec::with_capacity(r);
        for row in &self.cartan_inv {
            let x: Ratio<i64> = row
                .iter()
                .zip(&v)
                .fold(Ratio::zero(), |acc, (a, b)| acc + a * b);
            if !x.is_integer() {
                return Err(Error::NotInW0(format!("non-integral coordinate {}", x)));
            }
            n.push(x.to_integer());
        }
        if self.expand(&n) != *f {
            return Err(Error::NotInW0(format!(
                "{} is not a combination of the simple functions",
                f
            )));
        }
        Ok(n)
    }

    /// The canonical translate `t` with `p ∈ (σ₀)_t`.
    pub fn component_of(&self, p: SigmaPoint) -> Result<SpectralScalar> {
        let d = self.data();
        d.check_node(p.node)?;
        let b = sigma0_branches(d, p.node);
        let m = d.m(p.node) as i64;
        let g = b.step.q6();
        let mut best: Option<SpectralScalar> = None;
        for c in &b.offsets {
            for k in 0..m {
                let t = p.param * SpectralScalar::zeta(k * 24 / m) / *c;
                let t = t / b.step.pow(t.q6().div_euclid(g));
                best = Some(best.map_or(t, |x| x.min(t)));
            }
        }
        best.ok_or_else(|| Error::UnclassifiablePoint(p.to_string()))
    }

    pub fn block_label(&self, w: &[SigmaPoint]) -> Result<BlockLabel> {
        let mut groups: BTreeMap<SpectralScalar, Vec<SigmaPoint>> = BTreeMap::new();
        for &p in w {
            let t = self.component_of(p)?;
            groups.entry(t).or_default().push(p.shift(t.inv()));
        }
        let mut components = BTreeMap::new();
        for (t, pts) in groups {
            let f = self.ctx.e_of(&pts)?;
            let n = self.psi_lattice(&f)?;
            if n.iter().any(|&x| x != 0) {
                components.insert(t, n);
            }
        }
        Ok(BlockLabel { components })
    }

    /// `Δ₀`: the distinct functions `s_{i,a}` for `(i, a) ∈ σ₀`.
    pub fn delta0(&self) -> Result<Vec<SigmaFunction>> {
        let mut seen: BTreeSet<Vec<(SigmaPoint, i64)>> = BTreeSet::new();
        let mut out = Vec::new();
        for &p in &self.phi.points {
            for k in 0..2 {
                let f = self.ctx.s_func(self.ctx.dual_shift(p, k))?;
                if seen.insert(f.support().collect()) {
                    out.push(f);
                }
            }
        }
        Ok(out)
    }

    /// Groups module lists by block label, in order of first appearance.
    pub fn partition_blocks(
        &self,
        modules: &[Vec<SigmaPoint>],
    ) -> Result<Vec<(BlockLabel, Vec<usize>)>> {
        let mut out: Vec<(BlockLabel, Vec<usize>)> = Vec::new();
        for (k, w) in modules.iter().enumerate() {
            let label = self.block_label(w)?;
            match out.iter_mut().find(|(l, _)| *l == label) {
                Some((_, idx)) => idx.push(k),
                None => out.push((label, vec![k])),
            }
        }
        Ok(out)
    }
}

/// Leading principal minors of an integer matrix.
#[allow(clippy::needless_range_loop)]
pub fn leading_minors(m: &[Vec<i64>]) -> Vec<Ratio<i64>> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .map(|r| r.iter().map(|&x| Ratio::from_integer(x)).collect())
        .collect();
    let mut out = Vec::with_capacity(n);
    let mut det = Ratio::from_integer(1);
    for k in 0..n {
        if a[k][k].is_zero() {
            out.extend(std::iter::repeat_n(Ratio::zero(), n - k));
            break;
        }
        det *= a[k][k];
        out.push(det);
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            for j in k..n {
                let v = a[k][j];
                a[i][j] -= f * v;
            }
        }
    }
    out
}

/// Generators of the kernel of `P_S → W` for untwisted types, translated by `t`.
pub fn kernel_generators(d: &AffineData, t: SpectralScalar) -> Vec<Vec<SigmaPoint>> {
    let n = d.rank();
    let q = SpectralScalar::q_pow;
    let at = |i: usize, exps: &[i64]| -> Vec<SigmaPoint> {
        exps.iter().map(|&e| SigmaPoint::new(i, t * q(e))).collect()
    };
    let ni = n as i64;
    match d.family() {
        Family::A1 => vec![at(1, &(0..=ni).map(|k| 2 * k).collect::<Vec<_>>())],
        Family::B1 => vec![at(n, &[0, 2 * ni - 1])],
        Family::C1 => vec![at(1, &[0, ni + 1])],
        Family::D1 if n % 2 == 1 => vec![at(n, &[0, 2, 2 * ni - 2, 2 * ni])],
        Family::D1 => {
            let mut first = at(n - 1, &[0, 2]);
            first.extend(at(n, &[2 * ni - 2, 2 * ni]));
            vec![first, at(n - 1, &[0, 2 * ni - 2]), at(n, &[0, 2 * ni - 2])]
        }
        Family::E6_1 => vec![at(1, &[0, 8, 16]), at(1, &[0, 2, 4, 12, 14, 16])],
        Family::E7_1 => vec![at(7, &[0, 18]), at(7, &[0, 2, 12, 14, 24, 26])],
        Family::E8_1 => vec![
            at(8, &[0, 30]),
            at(8, &[0, 20, 40]),
            at(8, &[0, 12, 24, 36, 48]),
        ],
        Family::F4_1 => vec![at(4, &[0, 9]), at(4, &[0, 6, 12])],
        Family::G2_1 => {
            let nqt = SpectralScalar::NEG_QT;
            vec![
                at(2, &[0, 4]),
                [0, 8, 16]
                    .iter()
                    .map(|&e| SigmaPoint::new(2, t * nqt.pow(e)))
                    .collect(),
            ]
        }
        _ => Vec::new(),
    }
}
