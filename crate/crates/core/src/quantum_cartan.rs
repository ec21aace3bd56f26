//! Coefficients of the inverse quantum Cartan matrix in simply-laced type.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::finite_roots::{invert, FinRootSystem, FinType, Letter, Root};

/// Height function, Coxeter element and the roots `γ_i` of the standard quiver.
#[derive(Clone, Debug)]
pub struct AdeQuiverData {
    pub rs: FinRootSystem,
    pub xi: Vec<i64>,
    pub tau_word: Vec<Letter>,
    pub gamma: Vec<Root>,
    pub h: i64,
}

/// The standard height function on an ADE diagram.
pub fn standard_heights(ty: FinType) -> Vec<i64> {
    let n = ty.rank() as i64;
    (1..=n)
        .map(|i| match ty {
            FinType::A(_) => 1 - i,
            FinType::D(_) => {
                if i < n - 1 {
                    1 - i
                } else {
                    2 - n
                }
            }
            FinType::E(_) => match i {
                1 => 0,
                2 => -1,
                _ => 2 - i,
            },
        })
        .collect()
}

impl AdeQuiverData {
    pub fn new(ty: FinType) -> Result<Self> {
        let rs = FinRootSystem::new(ty)?;
        Ok(Self::with_heights(rs, standard_heights(ty)))
    }

    /// Builds the data for an arbitrary height function compatible with the diagram.
    pub fn with_heights(rs: FinRootSystem, xi: Vec<i64>) -> Self {
        let n = rs.rank();
        let mut order: Vec<usize> = (1..=n).collect();
        order.sort_by_key(|&i| (-xi[i - 1], i));
        let tau_word = order.iter().map(|&i| Letter::S(i)).collect();
        let gamma = (1..=n)
            .map(|i| {
                let mut v = vec![0; n];
                for j in ancestors(&rs, &xi, i) {
                    v[j - 1] = 1;
                }
                v
            })
            .collect();
        let h = rs.fin_type().coxeter_number();
        Self {
            rs,
            xi,
            tau_word,
            gamma,
            h,
        }
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn arrow(&self, i: usize, j: usize) -> bool {
        self.rs.diagram().adjacent(i, j) && self.xi[j - 1] == self.xi[i - 1] - 1
    }

    /// `τ^m β` for any integer `m`.
    pub fn tau_pow(&self, m: i64, beta: &[i64]) -> Root {
        let mut v = beta.to_vec();
        if m >= 0 {
            for _ in 0..m {
                v = self.rs.apply_word_root(&self.tau_word, &v);
            }
        } else {
            let inv: Vec<Letter> = self.tau_word.iter().rev().cloned().collect();
            for _ in 0..(-m) {
                v = self.rs.apply_word_root(&inv, &v);
            }
        }
        v
    }
}

fn ancestors(rs: &FinRootSystem, xi: &[i64], i: usize) -> Vec<usize> {
    let mut seen = vec![false; rs.rank()];
    let mut stack = vec![i];
    seen[i - 1] = true;
    while let Some(v) = stack.pop() {
        for u in rs.diagram().neighbours(v) {
            if !seen[u - 1] && xi[u - 1] == xi[v - 1] + 1 {
                seen[u - 1] = true;
                stack.push(u);
            }
        }
    }
    (1..=rs.rank()).filter(|&j| seen[j - 1]).collect()
}

/// `c̃_{i,j}(k)` via the Coxeter element.
pub fn ctilde_formula(d: &AdeQuiverData, i: usize, j: usize, k: i64) -> i64 {
    let t = k + d.xi[i - 1] - d.xi[j - 1] - 1;
    if t.rem_euclid(2) != 0 {
        return 0;
    }
    d.tau_pow(t / 2, &d.gamma[i - 1])[j - 1]
}

/// Table of `c̃_{i,j}(k)` for `0 ≤ k ≤ order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CTildeTable {
    n: usize,
    order: usize,
    values: Vec<Vec<Vec<i64>>>,
}

impl CTildeTable {
    pub fn from_formula(d: &AdeQuiverData, order: usize) -> Self {
        let n = d.rank();
        let mut values = vec![vec![vec![0; n]; n]; order + 1];
        for (k, mat) in values.iter_mut().enumerate().skip(1) {
            for i in 1..=n {
                for j in 1..=n {
                    mat[i - 1][j - 1] = ctilde_formula(d, i, j, k as i64);
                }
            }
        }
        Self { n, order, values }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Zero outside the computed range.
    pub fn get(&self, i: usize, j: usize, k: i64) -> i64 {
        if k < 0 || k as usize > self.order {
            return 0;
        }
        self.values[k as usize][i - 1][j - 1]
    }
}

type QMat = Vec<Vec<Ratio<i64>>>;

fn mat_mul(a: &QMat, b: &QMat) -> QMat {
    let n = a.len();
    let mut out = vec![vec![Ratio::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

/// Inverts `Σ_a M_a z^a` as a matrix power series up to `z^order`.
fn invert_series(coeffs: &[QMat], order: usize) -> Vec<QMat> {
    let n = coeffs[0].len();
    let m0: Vec<Vec<i64>> = coeffs[0]
        .iter()
        .map(|r| r.iter().map(|x| x.to_integer()).collect())
        .collect();
    let m0_inv = invert(&m0);
    let mut xs: Vec<QMat> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = vec![vec![Ratio::zero(); n]; n];
        if k == 0 {
            for (i, row) in acc.iter_mut().enumerate() {
                row[i] = Ratio::one();
            }
        }
        for (a, ma) in coeffs.iter().enumerate().skip(1) {
            if a > k {
                break;
            }
            let prod = mat_mul(ma, &xs[k - a]);
            for i in 0..n {
                for j in 0..n {
                    acc[i][j] -= prod[i][j];
                }
            }
        }
        xs.push(mat_mul(&m0_inv, &acc));
    }
    xs
}

/// `c̃_{i,j}(k)` by inverting `C(z)` as a power series in `z`.
pub fn ctilde_oracle(cartan: &[Vec<i64>], order: usize) -> CTildeTable {
    let n = cartan.len();
    let id: QMat = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Ratio::from_integer((i == j) as i64))
                .collect()
        })
        .collect();
    let off: QMat = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Ratio::from_integer(if i == j { 0 } else { cartan[i][j] }))
                .collect()
        })
        .collect();
    // z·C(z) = I + z·(C - 2I) + z²·I, and C(z)⁻¹ = z·(z·C(z))⁻¹.
    let series = invert_series(&[id.clone(), off, id], order);
    let mut values = vec![vec![vec![0; n]; n]; order + 1];
    for k in 1..=order {
        for i in 0..n {
            for j in 0..n {
                let v = series[k - 1][i][j];
                assert!(v.is_integer());
                values[k][i][j] = v.to_integer();
            }
        }
    }
    CTildeTable { n, order, values }
}
