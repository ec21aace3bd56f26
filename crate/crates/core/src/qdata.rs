//! Q-data, the bijection `ψ_Q`, the sets `I_Q`, `σ_Q` and the map `φ_Q`.

use std::collections::HashMap;
use std::fmt;

use crate::affine_base::{AffineData, Family, SigmaPoint};
use crate::error::{Error, Result};
use crate::finite_roots::{invert, mat_vec, FinRootSystem, FinType, FinWeight, Letter, Root};
use crate::quantum_cartan::standard_heights;
use crate::scalars::SpectralScalar;

/// Which clause of the height-function definition failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    /// Adjacent nodes with equal orbit size.
    EqualOrbits,
    /// Adjacent nodes of orbit sizes `1 < ord(ϱ)`.
    UniqueRepresentative,
    /// `ξ_{ϱ^k(i°)} = ξ_{i°} - 2k` along every orbit.
    OrbitDescent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    pub nodes: (usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} at nodes ({}, {})",
            self.condition, self.nodes.0, self.nodes.1
        )
    }
}

/// A Q-datum `(Δ_fin, ϱ, ξ)`.
#[derive(Clone, Debug)]
pub struct QDatum {
    pub gfin: FinRootSystem,
    pub rho: Vec<usize>,
    pub xi: Vec<i64>,
    pub d: Vec<usize>,
    pub ord_rho: usize,
    pub is_default: bool,
    tau: Vec<Letter>,
    tau_mat: Vec<Vec<i64>>,
    tau_inv: Vec<Vec<i64>>,
    gamma: Vec<Root>,
}

fn orbit(rho: &[usize], i: usize) -> Vec<usize> {
    let mut out = vec![i];
    let mut j = rho[i - 1];
    while j != i {
        out.push(j);
        j = rho[j - 1];
    }
    out
}

impl QDatum {
    /// Builds the datum without validating it; see [`QDatum::validate`].
    pub fn new(gfin: FinRootSystem, rho: Vec<usize>, xi: Vec<i64>) -> Result<Self> {
        let n = gfin.rank();
        if rho.len() != n || xi.len() != n || !gfin.is_automorphism(&rho) {
            return Err(Error::InvalidQDatum(
                "ϱ must be a diagram automorphism and ξ a function on the nodes".into(),
            ));
        }
        let d: Vec<usize> = (1..=n).map(|i| orbit(&rho, i).len()).collect();
        let ord_rho = d.iter().copied().fold(1, num_integer::lcm);
        let mut q = Self {
            gfin,
            rho,
            xi,
            d,
            ord_rho,
            is_default: false,
            tau: Vec::new(),
            tau_mat: Vec::new(),
            tau_inv: Vec::new(),
            gamma: Vec::new(),
        };
        q.tau = q.compute_tau();
        q.tau_mat = q.gfin.word_matrix(&q.tau);
        q.tau_inv = invert(&q.tau_mat)
            .iter()
            .map(|row| row.iter().map(|x| x.to_integer()).collect())
            .collect();
        q.gamma = (1..=n).map(|i| q.compute_gamma(i)).collect();
        Ok(q)
    }

    pub fn rank(&self) -> usize {
        self.gfin.rank()
    }

    pub fn orbit(&self, i: usize) -> Vec<usize> {
        orbit(&self.rho, i)
    }

    /// The node of the orbit of `i` with the largest height.
    pub fn top(&self, i: usize) -> usize {
        let o = self.orbit(i);
        *o.iter()
            .max_by_key(|&&j| (self.xi[j - 1], std::cmp::Reverse(j)))
            .unwrap()
    }

    /// Orbit representatives `i°`, one per orbit, ascending.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps: Vec<usize> = (1..=self.rank()).map(|i| self.top(i)).collect();
        reps.sort();
        reps.dedup();
        reps
    }

    fn compute_tau(&self) -> Vec<Letter> {
        let mut reps = self.representatives();
        reps.sort_by_key(|&i| (-self.xi[i - 1], i));
        let mut word: Vec<Letter> = reps.into_iter().map(Letter::S).collect();
        if self.ord_rho > 1 {
            word.push(Letter::Auto(self.rho.clone()));
        }
        word
    }

    fn compute_gamma(&self, i: usize) -> Root {
        let lam = self.gfin.fund_weight(i);
        let mut img = lam.clone();
        for _ in 0..self.d[i - 1] {
            img = self.gfin.apply_word(&self.tau, &img);
        }
        let diff = FinWeight {
            coords: lam
                .coords
                .iter()
                .zip(&img.coords)
                .map(|(a, b)| a - b)
                .collect(),
        };
        self.gfin
            .weight_to_root(&diff)
            .expect("(1 - τ^d)Λ lies in the root lattice")
    }

    /// `τ_Q` as a word, rightmost letter acting first.
    pub fn tau_q(&self) -> &[Letter] {
        &self.tau
    }

    /// `γ^Q_i = (1 - τ_Q^{d_i})Λ_i`.
    pub fn gamma(&self, i: usize) -> &Root {
        &self.gamma[i - 1]
    }

    /// `τ_Q^k β`.
    pub fn tau_pow(&self, k: i64, beta: &[i64]) -> Root {
        let m = if k >= 0 { &self.tau_mat } else { &self.tau_inv };
        let mut v = beta.to_vec();
        for _ in 0..k.unsigned_abs() {
            v = mat_vec(m, &v);
        }
        v
    }

    /// Every violated clause of the height-function conditions.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.rank();
        let xi = |i: usize| self.xi[i - 1];
        let mut out = Vec::new();
        let descends = |j0: usize| {
            let mut j = j0;
            for k in 0..self.d[j0 - 1] as i64 {
                if xi(j) != xi(j0) - 2 * k {
                    return false;
                }
                j = self.rho[j - 1];
            }
            true
        };
        for i in 1..=n {
            for j in self.gfin.diagram().neighbours(i) {
                let (di, dj) = (self.d[i - 1], self.d[j - 1]);
                if di == dj && i < j && (xi(i) - xi(j)).unsigned_abs() as usize != di {
                    out.push(Violation {
                        condition: Condition::EqualOrbits,
                        nodes: (i, j),
                    });
                }
                if di == 1 && dj == self.ord_rho && dj > 1 {
                    let good = self
                        .orbit(j)
                        .into_iter()
                        .filter(|&j0| (xi(i) - xi(j0)).abs() == 1 && descends(j0))
                        .count();
                    if good != 1 {
                        out.push(Violation {
                            condition: Condition::UniqueRepresentative,
                            nodes: (i, j),
                        });
                    }
                }
            }
        }
        for i0 in self.representatives() {
            if !descends(i0) {
                out.push(Violation {
                    condition: Condition::OrbitDescent,
                    nodes: (i0, i0),
                });
            }
        }
        out
    }

    pub fn in_hat_iq(&self, i: usize, p: i64) -> bool {
        (1..=self.rank()).contains(&i)
            && (p - self.xi[i - 1]).rem_euclid(2 * self.d[i - 1] as i64) == 0
    }

    /// `ψ_Q(i, p) = (β, m)` with `β` a positive root.
    pub fn psi_q(&self, i: usize, p: i64) -> Result<(Root, i64)> {
        if !self.in_hat_iq(i, p) {
            return Err(Error::NotInHatIQ { node: i, p });
        }
        let di = self.d[i - 1] as i64;
        let steps = (p - self.xi[i - 1]) / (2 * di);
        let dir = if steps >= 0 { -di } else { di };
        let dm = if steps >= 0 { 1 } else { -1 };
        let mut beta = self.gamma[i - 1].clone();
        let mut m = 0;
        for _ in 0..steps.abs() {
            beta = self.tau_pow(dir, &beta);
            if !self.gfin.is_positive_root(&beta) {
                beta = beta.iter().map(|x| -x).collect();
                m += dm;
            }
        }
        Ok((beta, m))
    }

    /// `I_Q = ψ_Q⁻¹(Δ⁺ × {0})`, found by walking down from each `ξ_i`.
    pub fn i_q(&self) -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        for i in 1..=self.rank() {
            let step = 2 * self.d[i - 1] as i64;
            let mut p = self.xi[i - 1];
            while self.psi_q(i, p).map(|(_, m)| m == 0).unwrap_or(false) {
                out.push((i, p));
                p -= step;
            }
        }
        out
    }

    /// `ψ_Q⁻¹(β, 0)` for every positive root `β`.
    pub fn psi_inverse(&self) -> HashMap<Root, (usize, i64)> {
        self.i_q()
            .into_iter()
            .map(|(i, p)| (self.psi_q(i, p).unwrap().0, (i, p)))
            .collect()
    }
}

/// The Q-datum fixed for each family.
pub fn default_qdatum(d: &AffineData) -> Result<QDatum> {
    let n = d.rank();
    let ni = n as i64;
    let (ty, rho, xi): (FinType, Vec<usize>, Vec<i64>) = match d.family() {
        Family::B1 => {
            let m = 2 * n - 1;
            let xi = (1..=m as i64)
                .map(|k| match k {
                    k if k < ni => 2 * ni - 1 - 2 * k,
                    k if k == ni => 0,
                    k => 2 * k - 2 * ni - 3,
                })
                .collect();
            (FinType::A(m), (1..=m).map(|k| 2 * n - k).collect(), xi)
        }
        Family::C1 => {
            let xi = (1..=ni + 1)
                .map(|k| match k {
                    k if k <= ni => 1 - k,
                    _ => -ni - 1,
                })
                .collect();
            let rho = (1..=n + 1)
                .map(|k| match k {
                    k if k == n => n + 1,
                    k if k == n + 1 => n,
                    k => k,
                })
                .collect();
            (FinType::D(n + 1), rho, xi)
        }
        Family::F4_1 => (
            FinType::E(6),
            vec![6, 2, 5, 4, 3, 1],
            vec![0, -2, -2, -3, -4, -2],
        ),
        Family::G2_1 => (FinType::D(4), vec![3, 2, 4, 1], vec![-1, 0, -3, -5]),
        _ => {
            let ty = d.gfin;
            (ty, (1..=ty.rank()).collect(), standard_heights(ty))
        }
    };
    let mut q = QDatum::new(FinRootSystem::new(ty)?, rho, xi)?;
    q.is_default = true;
    let v = q.validate();
    if let Some(first) = v.first() {
        return Err(Error::InvalidQDatum(first.to_string()));
    }
    Ok(q)
}

/// A simply-laced datum with a custom height function.
pub fn ade_with_heights(ty: FinType, xi: Vec<i64>) -> Result<QDatum> {
    let rs = FinRootSystem::new(ty)?;
    let n = rs.rank();
    let q = QDatum::new(rs, (1..=n).collect(), xi)?;
    if let Some(first) = q.validate().first() {
        return Err(Error::InvalidQDatum(first.to_string()));
    }
    Ok(q)
}

/// The projection `π : I_fin → I₀`.
pub fn pi(d: &AffineData, q: &QDatum, i: usize) -> usize {
    match d.family() {
        Family::F4_1 => match i {
            1 | 6 => 1,
            3 | 5 => 2,
            4 => 3,
            _ => 4,
        },
        _ if d.family().is_twisted() => i,
        _ => *q.orbit(i).iter().min().unwrap(),
    }
}

/// `(i, a)^⋆` for a point of the untwisted type of `gfin`.
pub fn twist_star(d: &AffineData, i: usize, a: SpectralScalar) -> SigmaPoint {
    let minus = SpectralScalar::MINUS_ONE;
    let sqrt_m1 = SpectralScalar::I;
    match d.family() {
        Family::A2_even | Family::A2_odd => {
            let big_n = d.gfin.rank();
            if i <= big_n.div_ceil(2) {
                SigmaPoint::new(i, a)
            } else {
                SigmaPoint::new(big_n + 1 - i, minus.pow(big_n as i64) * a)
            }
        }
        Family::D2 => {
            let n = d.rank();
            if i < n {
                SigmaPoint::new(i, sqrt_m1.pow((n + 1 - i) as i64) * a)
            } else {
                SigmaPoint::new(n, minus.pow(i as i64) * a)
            }
        }
        Family::E6_2 => match i {
            1 => SigmaPoint::new(1, a),
            3 => SigmaPoint::new(2, a),
            5 => SigmaPoint::new(2, minus * a),
            6 => SigmaPoint::new(1, minus * a),
            4 => SigmaPoint::new(3, sqrt_m1 * a),
            _ => SigmaPoint::new(4, sqrt_m1 * a),
        },
        _ => SigmaPoint::new(i, a),
    }
}

/// `(i, a)^†` for a point of type `D₄^{(1)}`.
pub fn twist_dagger(i: usize, a: SpectralScalar) -> SigmaPoint {
    let w = SpectralScalar::OMEGA;
    match i {
        2 => SigmaPoint::new(2, a),
        1 => SigmaPoint::new(1, a),
        3 => SigmaPoint::new(1, w * a),
        _ => SigmaPoint::new(1, w * w * a),
    }
}

/// `ε(i, p)`, followed by `⋆` or `†` for twisted families.
pub fn esig(d: &AffineData, q: &QDatum, i: usize, p: i64) -> SigmaPoint {
    let n = d.rank() as i64;
    let minus = SpectralScalar::MINUS_ONE;
    match d.family() {
        Family::C1 => SigmaPoint::new(pi(d, q, i), SpectralScalar::NEG_QS.pow(p)),
        Family::G2_1 => SigmaPoint::new(pi(d, q, i), SpectralScalar::NEG_QT.pow(p)),
        Family::B1 => SigmaPoint::new(
            pi(d, q, i),
            minus.pow(i as i64 + n) * SpectralScalar::QS.pow(p),
        ),
        Family::F4_1 => {
            let j = pi(d, q, i);
            SigmaPoint::new(j, minus.pow(j as i64) * SpectralScalar::QS.pow(p))
        }
        Family::D4_3 => twist_dagger(i, SpectralScalar::NEG_Q.pow(p)),
        f if f.is_twisted() => twist_star(d, i, SpectralScalar::NEG_Q.pow(p)),
        _ => SigmaPoint::new(i, SpectralScalar::NEG_Q.pow(p)),
    }
}

/// `φ_Q : Δ⁺_fin → σ_Q`, with `Δ⁺` in the order of [`FinRootSystem::positive_roots`].
#[derive(Clone, Debug)]
pub struct PhiQ {
    pub roots: Vec<Root>,
    pub points: Vec<SigmaPoint>,
    pub indices: Vec<(usize, i64)>,
}

impl PhiQ {
    pub fn build(d: &AffineData, q: &QDatum) -> Self {
        let inv = q.psi_inverse();
        let roots = q.gfin.positive_roots().to_vec();
        let indices: Vec<(usize, i64)> = roots.iter().map(|b| inv[b]).collect();
        let points = indices.iter().map(|&(i, p)| esig(d, q, i, p)).collect();
        Self {
            roots,
            points,
            indices,
        }
    }

    pub fn get(&self, beta: &[i64]) -> Option<SigmaPoint> {
        self.roots
            .iter()
            .position(|r| r == beta)
            .map(|k| self.points[k])
    }

    /// `φ_Q(α_i)`.
    pub fn simple(&self, i: usize) -> SigmaPoint {
        let n = self.roots[0].len();
        let mut e = vec![0; n];
        e[i - 1] = 1;
        self.get(&e).unwrap()
    }
}

pub fn phi_q(d: &AffineData, q: &QDatum, beta: &[i64]) -> Result<SigmaPoint> {
    let inv = q.psi_inverse();
    let &(i, p) = inv
        .get(beta)
        .ok_or_else(|| Error::InvalidArgument(format!("{:?} is not a positive root", beta)))?;
    Ok(esig(d, q, i, p))
}

/// The branches of `σ₀` at node `i`: `x = c·g^m` for some offset `c` and integer `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sigma0Branches {
    pub offsets: Vec<SpectralScalar>,
    pub step: SpectralScalar,
}

pub fn sigma0_branches(d: &AffineData, i: usize) -> Sigma0Branches {
    let n = d.rank();
    let ii = i as i64;
    let neg_q = SpectralScalar::NEG_Q;
    let minus = SpectralScalar::MINUS_ONE;
    let q2 = SpectralScalar::q_pow(2);
    let both = |c: SpectralScalar| vec![c, minus * c];
    let (offsets, step) = match d.family() {
        Family::A1 | Family::D1 | Family::E6_1 | Family::E7_1 | Family::E8_1 => {
            (vec![neg_q.pow(d.dd(1, i) as i64)], q2)
        }
        Family::B1 if i < n => (
            vec![minus.pow((n + i) as i64) * SpectralScalar::QS],
            SpectralScalar::Q,
        ),
        Family::B1 => (vec![SpectralScalar::ONE], SpectralScalar::Q),
        Family::C1 => (
            vec![SpectralScalar::NEG_QS.pow(d.dd(1, i) as i64)],
            SpectralScalar::Q,
        ),
        Family::F4_1 => (
            vec![minus.pow(ii) * SpectralScalar::QS.pow(-((i == 3) as i64))],
            SpectralScalar::Q,
        ),
        Family::G2_1 => (
            vec![SpectralScalar::NEG_QT.pow(d.dd(2, i) as i64)],
            SpectralScalar::QT.pow(2),
        ),
        Family::A2_even => (vec![SpectralScalar::ONE, SpectralScalar::NEG_Q], q2),
        Family::A2_odd if i < n => (both(neg_q.pow(ii + 1)), q2),
        Family::A2_odd => (vec![neg_q.pow(ii + 1)], q2),
        Family::D2 if i < n => (
            vec![SpectralScalar::I.pow((n + 1 - i) as i64) * neg_q.pow(ii + 1)],
            q2,
        ),
        Family::D2 => (both(neg_q.pow(ii + 1)), q2),
        Family::E6_2 if i <= 2 => (both(SpectralScalar::q_pow(ii + 1)), q2),
        Family::E6_2 => (vec![SpectralScalar::I * neg_q.pow(ii + 1)], q2),
        Family::D4_3 if i == 1 => (
            vec![
                SpectralScalar::ONE,
                SpectralScalar::OMEGA,
                SpectralScalar::OMEGA.pow(2),
            ],
            q2,
        ),
        Family::D4_3 => (vec![minus * SpectralScalar::Q], q2),
    };
    Sigma0Branches { offsets, step }
}

/// Whether `p` lies in the chosen component `σ₀`.
pub fn in_sigma0(d: &AffineData, p: SigmaPoint) -> bool {
    if d.check_node(p.node).is_err() {
        return false;
    }
    let b = sigma0_branches(d, p.node);
    b.offsets.iter().any(|&c| {
        let y = p.param / c;
        y.q6() % b.step.q6() == 0
            && d.sigma_eq(
                p,
                SigmaPoint::new(p.node, c * b.step.pow(y.q6() / b.step.q6())),
            )
    })
}

fn range2(lo: i64, hi: i64) -> impl Iterator<Item = i64> {
    (lo..=hi).step_by(2)
}

fn untwisted_sigma_q(ty: FinType) -> Vec<(usize, i64)> {
    let rs = FinRootSystem::new(ty).expect("valid type");
    let n = ty.rank() as i64;
    let dd = |i: usize| rs.dd(1, i) as i64;
    let mut out = Vec::new();
    for i in 1..=ty.rank() {
        let ii = i as i64;
        let delta = 2 * (i == 2) as i64;
        let (lo, hi) = match ty {
            FinType::A(_) => (ii - 2 * n + 1, -ii + 1),
            FinType::D(_) => (-dd(i) - 2 * n + 4, -dd(i)),
            FinType::E(6) => (dd(i) - 14, -dd(i) + delta),
            FinType::E(7) => (-dd(i) - 16 + delta, -dd(i) + delta),
            FinType::E(_) => (-dd(i) - 28 + delta, -dd(i) + delta),
        };
        out.extend(range2(lo, hi).map(|k| (i, k)));
    }
    out
}

/// The set `σ_Q` written out in closed form for the default Q-datum.
pub fn sigma_q_explicit(d: &AffineData) -> Vec<SigmaPoint> {
    let n = d.rank();
    let ni = n as i64;
    let minus = SpectralScalar::MINUS_ONE;
    let neg_q = SpectralScalar::NEG_Q;
    let mut out = Vec::new();
    match d.family() {
        Family::A1 | Family::D1 | Family::E6_1 | Family::E7_1 | Family::E8_1 => {
            for (i, k) in untwisted_sigma_q(d.gfin) {
                out.push(SigmaPoint::new(i, neg_q.pow(k)));
            }
        }
        Family::B1 => {
            for i in 1..n {
                let ii = i as i64;
                for k in range2(-2 * ni - 2 * ii + 3, 2 * ni - 2 * ii - 1) {
                    out.push(SigmaPoint::new(
                        i,
                        minus.pow(ni + ii) * SpectralScalar::QS.pow(k),
                    ));
                }
            }
            for k in -2 * ni + 2..=0 {
                out.push(SigmaPoint::new(n, SpectralScalar::q_pow(k)));
            }
        }
        Family::C1 => {
            for i in 1..=n {
                let dd = d.dd(1, i) as i64;
                for k in range2(-dd - 2 * ni, -dd) {
                    out.push(SigmaPoint::new(i, SpectralScalar::NEG_QS.pow(k)));
                }
            }
        }
        Family::F4_1 => {
            for i in 1..=4 {
                let (dd, delta) = (d.dd(i, 3) as i64, (i == 3) as i64);
                for k2 in range2(2 * dd - 20 + delta, 2 * dd - 4 + delta) {
                    out.push(SigmaPoint::new(
                        i,
                        minus.pow(i as i64) * SpectralScalar::QS.pow(k2),
                    ));
                }
            }
        }
        Family::G2_1 => {
            for i in 1..=2 {
                let dd = d.dd(2, i) as i64;
                for k in range2(-dd - 10, -dd) {
                    out.push(SigmaPoint::new(i, SpectralScalar::NEG_QT.pow(k)));
                }
            }
        }
        Family::D4_3 => {
            for (i, k) in untwisted_sigma_q(d.gfin) {
                out.push(twist_dagger(i, neg_q.pow(k)));
            }
        }
        _ => {
            for (i, k) in untwisted_sigma_q(d.gfin) {
                out.push(twist_star(d, i, neg_q.pow(k)));
            }
        }
    }
    out
}
