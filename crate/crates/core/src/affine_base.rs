//! Static data attached to each affine family.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::finite_roots::{Diagram, FinType};
use crate::scalars::{parse_scalar, SpectralScalar};

/// The fourteen affine families.
#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A1,
    B1,
    C1,
    D1,
    E6_1,
    E7_1,
    E8_1,
    F4_1,
    G2_1,
    /// `A_{2n}^{(2)}`
    A2_even,
    /// `A_{2n-1}^{(2)}`
    A2_odd,
    /// `D_{n+1}^{(2)}`
    D2,
    E6_2,
    D4_3,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::A1,
        Family::B1,
        Family::C1,
        Family::D1,
        Family::E6_1,
        Family::E7_1,
        Family::E8_1,
        Family::F4_1,
        Family::G2_1,
        Family::A2_even,
        Family::A2_odd,
        Family::D2,
        Family::E6_2,
        Family::D4_3,
    ];

    /// Smallest legal rank parameter.
    pub fn min_rank(self) -> usize {
        match self {
            Family::A1 | Family::A2_even => 1,
            Family::B1 | Family::A2_odd => 2,
            Family::C1 | Family::D2 => 3,
            Family::D1 => 4,
            _ => self.fixed_rank().unwrap(),
        }
    }

    /// `|I₀|` for the exceptional families.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::E6_1 => Some(6),
            Family::E7_1 => Some(7),
            Family::E8_1 => Some(8),
            Family::F4_1 | Family::E6_2 => Some(4),
            Family::G2_1 | Family::D4_3 => Some(2),
            _ => None,
        }
    }

    pub fn is_twisted(self) -> bool {
        matches!(
            self,
            Family::A2_even | Family::A2_odd | Family::D2 | Family::E6_2 | Family::D4_3
        )
    }

    /// Families whose denominators are given by the ADE formula.
    pub fn is_simply_laced_untwisted(self) -> bool {
        matches!(
            self,
            Family::A1 | Family::D1 | Family::E6_1 | Family::E7_1 | Family::E8_1
        )
    }
}

/// A family together with its rank parameter `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineType {
    pub family: Family,
    pub n: usize,
}

impl AffineType {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        if let Some(r) = family.fixed_rank() {
            if n != r {
                return Err(Error::RankOutOfRange {
                    family: format!("{:?}", family),
                    n,
                    min: r,
                });
            }
        } else if n < family.min_rank() {
            return Err(Error::RankOutOfRange {
                family: format!("{:?}", family),
                n,
                min: family.min_rank(),
            });
        }
        Ok(Self { family, n })
    }

    /// The exceptional type of a fixed-rank family.
    pub fn exceptional(family: Family) -> Self {
        Self {
            family,
            n: family.fixed_rank().expect("fixed-rank family"),
        }
    }

    /// `|I₀|`.
    pub fn rank(self) -> usize {
        self.n
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        match self.family {
            Family::A1 => write!(f, "A{}-1", n),
            Family::B1 => write!(f, "B{}-1", n),
            Family::C1 => write!(f, "C{}-1", n),
            Family::D1 => write!(f, "D{}-1", n),
            Family::E6_1 => write!(f, "E6-1"),
            Family::E7_1 => write!(f, "E7-1"),
            Family::E8_1 => write!(f, "E8-1"),
            Family::F4_1 => write!(f, "F4-1"),
            Family::G2_1 => write!(f, "G2-1"),
            Family::A2_even => write!(f, "A{}-2", 2 * n),
            Family::A2_odd => write!(f, "A{}-2", 2 * n - 1),
            Family::D2 => write!(f, "D{}-2", n + 1),
            Family::E6_2 => write!(f, "E6-2"),
            Family::D4_3 => write!(f, "D4-3"),
        }
    }
}

impl FromStr for AffineType {
    type Err = Error;

    /// Parses `<family><N>-<twist>`, e.g. `A5-1`, `D5-2`, `D4-3`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownType(s.to_string());
        let t = s.trim();
        let (head, twist) = t.split_once('-').ok_or_else(bad)?;
        let mut chars = head.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let big_n: usize = chars.as_str().parse().map_err(|_| bad())?;
        let twist: u8 = twist.parse().map_err(|_| bad())?;
        let (family, n) = match (letter, big_n, twist) {
            ('A', n, 1) => (Family::A1, n),
            ('B', n, 1) => (Family::B1, n),
            ('C', n, 1) => (Family::C1, n),
            ('D', n, 1) => (Family::D1, n),
            ('E', 6, 1) => (Family::E6_1, 6),
            ('E', 7, 1) => (Family::E7_1, 7),
            ('E', 8, 1) => (Family::E8_1, 8),
            ('F', 4, 1) => (Family::F4_1, 4),
            ('G', 2, 1) => (Family::G2_1, 2),
            ('A', n, 2) if n >= 2 && n % 2 == 0 => (Family::A2_even, n / 2),
            ('A', n, 2) if n >= 3 => (Family::A2_odd, n.div_ceil(2)),
            ('D', n, 2) if n >= 1 => (Family::D2, n - 1),
            ('E', 6, 2) => (Family::E6_2, 4),
            ('D', 4, 3) => (Family::D4_3, 2),
            _ => return Err(bad()),
        };
        AffineType::new(family, n)
    }
}

/// A pair `(i, x)` of a node and a spectral parameter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SigmaPoint {
    pub node: usize,
    pub param: SpectralScalar,
}

impl SigmaPoint {
    pub fn new(node: usize, param: SpectralScalar) -> Self {
        Self { node, param }
    }

    /// Multiplies the parameter by `t`.
    pub fn shift(self, t: SpectralScalar) -> Self {
        Self {
            node: self.node,
            param: self.param * t,
        }
    }
}

impl fmt::Display for SigmaPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.node, self.param)
    }
}

impl fmt::Debug for SigmaPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for SigmaPoint {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (node, scalar) = s.split_once('@').ok_or(Error::Parse {
            offset: 0,
            message: "expected `<node>@<scalar>`".into(),
        })?;
        let node = node.trim().parse().map_err(|_| Error::Parse {
            offset: 0,
            message: format!("bad node `{}`", node.trim()),
        })?;
        let offset = s.find('@').unwrap() + 1;
        let param = parse_scalar(scalar).map_err(|e| match e {
            Error::Parse { offset: o, message } => Error::Parse {
                offset: o + offset,
                message,
            },
            other => other,
        })?;
        Ok(SigmaPoint { node, param })
    }
}

/// Parses a comma-separated list of points `i@scalar`.
pub fn parse_points(s: &str) -> Result<Vec<SigmaPoint>> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut base = 0;
    for part in t.split(',') {
        let p = part.parse::<SigmaPoint>().map_err(|e| match e {
            Error::Parse { offset, message } => Error::Parse {
                offset: offset + base,
                message,
            },
            other => other,
        })?;
        out.push(p);
        base += part.len() + 1;
    }
    Ok(out)
}

/// Per-type constants.
#[derive(Clone, Debug)]
pub struct AffineData {
    pub ty: AffineType,
    pub i0: Vec<usize>,
    m: Vec<u32>,
    pub pstar: SpectralScalar,
    pub ptilde: SpectralScalar,
    istar: Vec<usize>,
    pub gfin: FinType,
    pub hvee: i64,
    g0: Diagram,
}

impl AffineData {
    pub fn build(ty: AffineType) -> Result<Self> {
        let ty = AffineType::new(ty.family, ty.n)?;
        let n = ty.n;
        let ni = n as i64;
        let q = SpectralScalar::q_pow;
        let neg = SpectralScalar::MINUS_ONE;
        use Family::*;
        let pstar = match ty.family {
            A1 => SpectralScalar::NEG_Q.pow(ni + 1),
            B1 => q(2 * ni - 1),
            C1 => q(ni + 1),
            D1 => q(2 * ni - 2),
            A2_even => neg * q(2 * ni + 1),
            A2_odd => neg * q(2 * ni),
            D2 => neg.pow(ni + 1) * q(2 * ni),
            E6_1 => q(12),
            E7_1 => q(18),
            E8_1 => q(30),
            F4_1 => q(9),
            G2_1 => q(4),
            E6_2 => neg * q(12),
            D4_3 => q(6),
        };
        let m: Vec<u32> = (1..=n)
            .map(|i| match ty.family {
                A2_odd if i == n => 2,
                D2 if i < n => 2,
                E6_2 if i >= 3 => 2,
                D4_3 if i == 2 => 3,
                _ => 1,
            })
            .collect();
        let istar: Vec<usize> = (1..=n)
            .map(|i| match ty.family {
                A1 => n + 1 - i,
                D1 if n % 2 == 1 && i >= n - 1 => 2 * n - 1 - i,
                E6_1 => [6, 2, 5, 4, 3, 1][i - 1],
                _ => i,
            })
            .collect();
        let gfin = match ty.family {
            A1 => FinType::A(n),
            B1 => FinType::A(2 * n - 1),
            C1 => FinType::D(n + 1),
            D1 => FinType::D(n),
            A2_even => FinType::A(2 * n),
            A2_odd => FinType::A(2 * n - 1),
            D2 => FinType::D(n + 1),
            E6_1 | F4_1 | E6_2 => FinType::E(6),
            E7_1 => FinType::E(7),
            E8_1 => FinType::E(8),
            G2_1 | D4_3 => FinType::D(4),
        };
        let path: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        let g0 = match ty.family {
            D1 => Diagram::new(n, &FinType::D(n).edges()),
            E6_1 | E7_1 | E8_1 => Diagram::new(n, &FinType::E(n).edges()),
            _ => Diagram::new(n, &path),
        };
        let hvee = pstar.q6() / 6;
        Ok(Self {
            ty,
            i0: (1..=n).collect(),
            m,
            pstar,
            ptilde: pstar.pow(2),
            istar,
            gfin,
            hvee,
            g0,
        })
    }

    pub fn family(&self) -> Family {
        self.ty.family
    }

    pub fn rank(&self) -> usize {
        self.ty.n
    }

    pub fn m(&self, i: usize) -> u32 {
        self.m[i - 1]
    }

    pub fn istar(&self, i: usize) -> usize {
        self.istar[i - 1]
    }

    /// `i^{*k}`: `i` for even `k`, `i*` for odd `k`.
    pub fn istar_pow(&self, i: usize, k: i64) -> usize {
        if k.rem_euclid(2) == 0 {
            i
        } else {
            self.istar(i)
        }
    }

    /// Distance in the Dynkin diagram of `g₀`.
    pub fn dd(&self, i: usize, j: usize) -> usize {
        self.g0.dd(i, j)
    }

    pub fn check_node(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            Err(Error::InvalidNode {
                node: i,
                max: self.rank(),
            })
        } else {
            Ok(())
        }
    }

    /// Whether `V(ϖ_i)_x ≅ V(ϖ_j)_y`.
    pub fn sigma_eq(&self, p1: SigmaPoint, p2: SigmaPoint) -> bool {
        if p1.node != p2.node || p1.param.q6() != p2.param.q6() {
            return false;
        }
        let diff = p1.param.phase() as i64 - p2.param.phase() as i64;
        (self.m(p1.node) as i64 * diff).rem_euclid(24) == 0
    }

    /// The canonical representative of the class of `p`.
    pub fn canonical(&self, p: SigmaPoint) -> SigmaPoint {
        let modulus = 24 / self.m(p.node) as i64;
        let phase = p.param.phase() as i64 % modulus;
        SigmaPoint::new(p.node, SpectralScalar::from_parts(phase, p.param.q6()))
    }
}
