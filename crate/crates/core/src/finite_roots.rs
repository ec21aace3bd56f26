//! Simply-laced finite root systems of types A, D and E.
//!
//! Nodes are labelled `1..=n` in the public API. Roots are integer vectors
//! in simple-root coordinates and weights are integer vectors in the
//! fundamental-weight basis; all inner products go through the Cartan matrix.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A vector in simple-root coordinates.
pub type Root = Vec<i64>;

/// A simply-laced finite type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FinType {
    A(usize),
    D(usize),
    E(usize),
}

impl FinType {
    pub fn rank(self) -> usize {
        match self {
            FinType::A(n) | FinType::D(n) | FinType::E(n) => n,
        }
    }

    pub fn coxeter_number(self) -> i64 {
        match self {
            FinType::A(n) => n as i64 + 1,
            FinType::D(n) => 2 * n as i64 - 2,
            FinType::E(6) => 12,
            FinType::E(7) => 18,
            FinType::E(_) => 30,
        }
    }

    /// Number of positive roots.
    pub fn num_positive_roots(self) -> usize {
        match self {
            FinType::A(n) => n * (n + 1) / 2,
            FinType::D(n) => n * (n - 1),
            FinType::E(6) => 36,
            FinType::E(7) => 63,
            FinType::E(_) => 120,
        }
    }

    fn validate(self) -> Result<()> {
        let ok = match self {
            FinType::A(n) => n >= 1,
            FinType::D(n) => n >= 4,
            FinType::E(n) => (6..=8).contains(&n),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "no simply-laced type {}",
                self
            )))
        }
    }

    /// Edges of the Dynkin diagram with the standard labelling.
    pub fn edges(self) -> Vec<(usize, usize)> {
        match self {
            FinType::A(n) => (1..n).map(|i| (i, i + 1)).collect(),
            FinType::D(n) => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
                e.push((n - 2, n));
                e
            }
            FinType::E(n) => {
                let mut e = vec![(1, 3), (2, 4)];
                e.extend((3..n).map(|i| (i, i + 1)));
                e
            }
        }
    }
}

impl fmt::Display for FinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FinType::A(n) => write!(f, "A{}", n),
            FinType::D(n) => write!(f, "D{}", n),
            FinType::E(n) => write!(f, "E{}", n),
        }
    }
}

/// An undirected graph on nodes `1..=n`, used for Dynkin diagram distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    adj: Vec<Vec<usize>>,
}

impl Diagram {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            adj[a - 1].push(b - 1);
            adj[b - 1].push(a - 1);
        }
        Self { adj }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[i - 1].iter().map(|j| j + 1)
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i - 1].contains(&(j - 1))
    }

    /// Graph distance between two nodes.
    pub fn dd(&self, i: usize, j: usize) -> usize {
        let mut dist = vec![usize::MAX; self.adj.len()];
        let mut queue = VecDeque::new();
        dist[i - 1] = 0;
        queue.push_back(i - 1);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist[j - 1]
    }
}

/// A weight in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinWeight {
    pub coords: Vec<i64>,
}

/// One letter of a word in the Weyl group extended by diagram automorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Letter {
    /// The simple reflection `s_i`.
    S(usize),
    /// A diagram automorphism, `perm[i-1]` being the image of node `i`.
    Auto(Vec<usize>),
}

#[derive(Clone, Debug)]
pub struct FinRootSystem {
    ty: FinType,
    cartan: Vec<Vec<i64>>,
    diagram: Diagram,
    inv_cartan: Vec<Vec<Ratio<i64>>>,
    positive: Vec<Root>,
    positive_set: HashSet<Root>,
    star: Vec<usize>,
}

impl FinRootSystem {
    pub fn new(ty: FinType) -> Result<Self> {
        ty.validate()?;
        let n = ty.rank();
        let edges = ty.edges();
        let diagram = Diagram::new(n, &edges);
        let mut cartan = vec![vec![0i64; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b) in &edges {
            cartan[a - 1][b - 1] = -1;
            cartan[b - 1][a - 1] = -1;
        }
        let inv_cartan = invert(&cartan);
        let mut rs = Self {
            ty,
            cartan,
            diagram,
            inv_cartan,
            positive: Vec::new(),
            positive_set: HashSet::new(),
            star: Vec::new(),
        };
        rs.positive = rs.enumerate_positive_roots();
        rs.positive_set = rs.positive.iter().cloned().collect();
        rs.star = rs.compute_star();
        Ok(rs)
    }

    pub fn fin_type(&self) -> FinType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn is_positive_root(&self, beta: &[i64]) -> bool {
        self.positive_set.contains(beta)
    }

    pub fn is_root(&self, beta: &[i64]) -> bool {
        let neg: Root = beta.iter().map(|x| -x).collect();
        self.positive_set.contains(beta) || self.positive_set.contains(&neg)
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut r = vec![0; self.rank()];
        r[i - 1] = 1;
        r
    }

    pub fn fund_weight(&self, i: usize) -> FinWeight {
        let mut w = vec![0; self.rank()];
        w[i - 1] = 1;
        FinWeight { coords: w }
    }

    /// `(β, γ)` for root-lattice vectors.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (row, &ai) in self.cartan.iter().zip(a) {
            if ai != 0 {
                s += ai * row.iter().zip(b).map(|(c, bj)| c * bj).sum::<i64>();
            }
        }
        s
    }

    /// `(λ, μ)` for weights, as an exact rational.
    pub fn inner_weights(&self, a: &FinWeight, b: &FinWeight) -> Ratio<i64> {
        let n = self.rank();
        let mut s = Ratio::zero();
        for i in 0..n {
            for j in 0..n {
                s += self.inv_cartan[i][j] * (a.coords[i] * b.coords[j]);
            }
        }
        s
    }

    /// `(λ, ϖ_j)` for a root-lattice vector: its `α_j` coefficient.
    pub fn pair_fund(&self, beta: &[i64], j: usize) -> i64 {
        beta[j - 1]
    }

    pub fn root_to_weight(&self, beta: &[i64]) -> FinWeight {
        let n = self.rank();
        let coords = (0..n)
            .map(|i| (0..n).map(|j| self.cartan[i][j] * beta[j]).sum())
            .collect();
        FinWeight { coords }
    }

    /// The root-lattice coordinates of a weight, if it lies in the root lattice.
    pub fn weight_to_root(&self, w: &FinWeight) -> Option<Root> {
        let n = self.rank();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut s = Ratio::zero();
            for j in 0..n {
                s += self.inv_cartan[i][j] * w.coords[j];
            }
            if !s.is_integer() {
                return None;
            }
            out.push(s.to_integer());
        }
        Some(out)
    }

    /// `s_i(λ) = λ − ⟨h_i, λ⟩ α_i`.
    pub fn reflect(&self, i: usize, lam: &FinWeight) -> FinWeight {
        let c = lam.coords[i - 1];
        let coords = lam
            .coords
            .iter()
            .enumerate()
            .map(|(k, x)| x - c * self.cartan[k][i - 1])
            .collect();
        FinWeight { coords }
    }

    /// `s_i(β)` in root coordinates.
    pub fn reflect_root(&self, i: usize, beta: &[i64]) -> Root {
        let c: i64 = (0..self.rank())
            .map(|j| self.cartan[i - 1][j] * beta[j])
            .sum();
        let mut out = beta.to_vec();
        out[i - 1] -= c;
        out
    }

    /// Checks that `perm` is an automorphism of the Dynkin diagram.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.rank();
        if perm.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p == 0 || p > n || seen[p - 1] {
                return false;
            }
            seen[p - 1] = true;
        }
        (1..=n).all(|i| {
            (1..=n)
                .all(|j| self.cartan[i - 1][j - 1] == self.cartan[perm[i - 1] - 1][perm[j - 1] - 1])
        })
    }

    fn apply_letter(&self, letter: &Letter, v: &[i64], roots: bool) -> Vec<i64> {
        match letter {
            Letter::S(i) => {
                if roots {
                    self.reflect_root(*i, v)
                } else {
                    self.reflect(*i, &FinWeight { coords: v.to_vec() }).coords
                }
            }
            Letter::Auto(perm) => {
                let mut out = vec![0; v.len()];
                for (k, x) in v.iter().enumerate() {
                    out[perm[k] - 1] = *x;
                }
                out
            }
        }
    }

    /// Applies `w = L₁ L₂ ⋯ L_m` to a weight; the rightmost letter acts first.
    pub fn apply_word(&self, word: &[Letter], lam: &FinWeight) -> FinWeight {
        let mut v = lam.coords.clone();
        for letter in word.iter().rev() {
            v = self.apply_letter(letter, &v, false);
        }
        FinWeight { coords: v }
    }

    /// Same as [`apply_word`](Self::apply_word) on a root-lattice vector.
    pub fn apply_word_root(&self, word: &[Letter], beta: &[i64]) -> Root {
        let mut v = beta.to_vec();
        for letter in word.iter().rev() {
            v = self.apply_letter(letter, &v, true);
        }
        v
    }

    /// The matrix of a word acting on root coordinates (columns are images of simple roots).
    pub fn word_matrix(&self, word: &[Letter]) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut m = vec![vec![0; n]; n];
        for j in 1..=n {
            let img = self.apply_word_root(word, &self.simple_root(j));
            for i in 0..n {
                m[i][j - 1] = img[i];
            }
        }
        m
    }

    /// All positive roots, simple roots first, then by height.
    pub fn enumerate_positive_roots(&self) -> Vec<Root> {
        let n = self.rank();
        let mut seen: HashSet<Root> = HashSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for i in 1..=n {
            let a = self.simple_root(i);
            seen.insert(a.clone());
            queue.push_back(a);
        }
        while let Some(b) = queue.pop_front() {
            for i in 1..=n {
                let ai = self.simple_root(i);
                if self.inner(&b, &ai) == -1 {
                    let mut c = b.clone();
                    c[i - 1] += 1;
                    if seen.insert(c.clone()) {
                        queue.push_back(c);
                    }
                }
            }
            out.push(b);
        }
        out.sort_by_key(|r| {
            (
                r.iter().sum::<i64>(),
                r.iter().map(|x| -x).collect::<Vec<_>>(),
            )
        });
        out
    }

    fn compute_star(&self) -> Vec<usize> {
        let n = self.rank();
        let mut lam = FinWeight { coords: vec![1; n] };
        let mut word = Vec::new();
        while let Some(i) = (1..=n).find(|&i| lam.coords[i - 1] > 0) {
            lam = self.reflect(i, &lam);
            word.push(Letter::S(i));
        }
        word.reverse();
        (1..=n)
            .map(|i| {
                let img = self.apply_word_root(&word, &self.simple_root(i));
                let neg: Root = img.iter().map(|x| -x).collect();
                neg.iter().position(|&x| x == 1).map(|p| p + 1).unwrap()
            })
            .collect()
    }

    /// The involution `i ↦ i*` given by `α_{i*} = −w₀ α_i`.
    pub fn star(&self, i: usize) -> usize {
        self.star[i - 1]
    }

    pub fn dd(&self, i: usize, j: usize) -> usize {
        self.diagram.dd(i, j)
    }
}

/// Exact inverse of an invertible integer matrix.
pub fn invert(m: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .map(|r| r.iter().map(|&x| Ratio::from_integer(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Ratio::one() } else { Ratio::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("singular matrix");
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col];
        for k in 0..n {
            a[col][k] /= p;
            inv[col][k] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for k in 0..n {
                    let x = a[col][k];
                    a[r][k] -= f * x;
                    let y = inv[col][k];
                    inv[r][k] -= f * y;
                }
            }
        }
    }
    inv
}

/// Matrix-vector product.
pub fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}
