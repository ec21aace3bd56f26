//! Denominators `d_{i,j}(z)` of normalized R-matrices between fundamental modules.

use std::collections::BTreeMap;
use std::fmt;

use crate::affine_base::{AffineData, Family};
use crate::error::Result;
use crate::quantum_cartan::{AdeQuiverData, CTildeTable};
use crate::scalars::{parse_scalar, SpectralScalar};

/// The monic polynomial `∏ (z - r)` stored as a multiset of roots.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootMultiset {
    roots: BTreeMap<SpectralScalar, u32>,
}

impl RootMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, r: SpectralScalar, mult: u32) {
        if mult > 0 {
            *self.roots.entry(r).or_insert(0) += mult;
        }
    }

    pub fn degree(&self) -> u32 {
        self.roots.values().sum()
    }

    /// Roots with multiplicities, in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = (SpectralScalar, u32)> + '_ {
        self.roots.iter().map(|(r, m)| (*r, *m))
    }

    pub fn zero_order(&self, x: SpectralScalar) -> u32 {
        self.roots.get(&x).copied().unwrap_or(0)
    }
}

impl FromIterator<SpectralScalar> for RootMultiset {
    fn from_iter<T: IntoIterator<Item = SpectralScalar>>(iter: T) -> Self {
        let mut m = Self::new();
        for r in iter {
            m.insert(r, 1);
        }
        m
    }
}

pub fn zero_order(p: &RootMultiset, x: SpectralScalar) -> u32 {
    p.zero_order(x)
}

/// A factor `(z^deg - c)^mult`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Factor {
    pub deg: u32,
    pub c: SpectralScalar,
    pub mult: u32,
}

impl Factor {
    pub fn linear(c: SpectralScalar) -> Self {
        Self { deg: 1, c, mult: 1 }
    }

    pub fn roots(&self) -> Result<Vec<SpectralScalar>> {
        if self.deg == 1 {
            Ok(vec![self.c])
        } else {
            self.c.nth_roots(self.deg)
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = if self.deg == 1 {
            "z".to_string()
        } else {
            format!("z^{}", self.deg)
        };
        let neg = SpectralScalar::MINUS_ONE * self.c;
        let body = if self.c.phase() == 12 {
            format!("({} + {})", z, neg)
        } else {
            format!("({} - {})", z, self.c)
        };
        if self.mult == 1 {
            write!(f, "{}", body)
        } else {
            write!(f, "{}^{}", body, self.mult)
        }
    }
}

/// Reads a product such as `(z-q^2)(z^3+q^9)^2`.
fn parse_factors(text: &str) -> Vec<Factor> {
    let mut out = Vec::new();
    for chunk in text.split('(').map(str::trim).filter(|c| !c.is_empty()) {
        let (inner, tail) = chunk.split_once(')').expect("closing parenthesis");
        let rest = inner.strip_prefix('z').expect("factor starts with z");
        let sign_at = rest.find(['+', '-']).expect("sign");
        let deg = match rest[..sign_at].strip_prefix('^') {
            Some(d) => d.parse().expect("degree"),
            None => 1,
        };
        let value = parse_scalar(&rest[sign_at + 1..]).expect("scalar");
        let c = if rest.as_bytes()[sign_at] == b'-' {
            value
        } else {
            SpectralScalar::MINUS_ONE * value
        };
        let mult = match tail.trim().strip_prefix('^') {
            Some(m) => m.parse().expect("multiplicity"),
            None => 1,
        };
        out.push(Factor { deg, c, mult });
    }
    out
}

fn exceptional(family: Family, i: usize, j: usize) -> &'static str {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    match (family, i, j) {
        (Family::G2_1, 1, 1) => "(z-qt^6)(z-qt^8)(z-qt^10)(z-qt^12)",
        (Family::G2_1, 1, 2) => "(z+qt^7)(z+qt^11)",
        (Family::G2_1, 2, 2) => "(z-qt^2)(z-qt^8)(z-qt^12)",
        (Family::F4_1, 1, 1) => "(z-qs^4)(z-qs^10)(z-qs^12)(z-qs^18)",
        (Family::F4_1, 1, 2) => "(z+qs^6)(z+qs^8)(z+qs^10)(z+qs^12)(z+qs^14)(z+qs^16)",
        (Family::F4_1, 1, 3) => "(z-qs^7)(z-qs^9)(z-qs^13)(z-qs^15)",
        (Family::F4_1, 1, 4) => "(z+qs^8)(z+qs^14)",
        (Family::F4_1, 2, 2) => {
            "(z-qs^4)(z-qs^6)(z-qs^8)^2(z-qs^10)^2(z-qs^12)^2(z-qs^14)^2(z-qs^16)(z-qs^18)"
        }
        (Family::F4_1, 2, 3) => "(z+qs^5)(z+qs^7)(z+qs^9)(z+qs^11)^2(z+qs^13)(z+qs^15)(z+qs^17)",
        (Family::F4_1, 2, 4) => "(z-qs^6)(z-qs^10)(z-qs^12)(z-qs^16)",
        (Family::F4_1, 3, 3) => "(z-qs^2)(z-qs^6)(z-qs^8)(z-qs^10)(z-qs^12)^2(z-qs^16)(z-qs^18)",
        (Family::F4_1, 3, 4) => "(z+qs^3)(z+qs^7)(z+qs^11)(z+qs^13)(z+qs^17)",
        (Family::F4_1, 4, 4) => "(z-qs^2)(z-qs^8)(z-qs^12)(z-qs^18)",
        (Family::D4_3, 1, 1) => "(z-q^2)(z-q^6)(z-w*q^4)(z-w2*q^4)",
        (Family::D4_3, 1, 2) => "(z^3+q^9)(z^3+q^15)",
        (Family::D4_3, 2, 2) => "(z^3-q^6)(z^3-q^12)^2(z^3-q^18)",
        (Family::E6_2, 1, 1) => "(z-q^2)(z+q^6)(z-q^8)(z+q^12)",
        (Family::E6_2, 1, 2) => "(z+q^3)(z-q^5)(z-q^7)(z+q^7)(z+q^9)(z-q^11)",
        (Family::E6_2, 1, 3) => "(z^2+q^8)(z^2+q^12)(z^2+q^16)(z^2+q^20)",
        (Family::E6_2, 1, 4) => "(z^2+q^10)(z^2+q^18)",
        (Family::E6_2, 2, 2) => {
            "(z-q^2)(z-q^4)(z-q^6)(z-q^8)^2(z-q^10)(z+q^4)(z+q^6)^2(z+q^8)(z+q^10)(z+q^12)"
        }
        (Family::E6_2, 2, 3) => "(z^2+q^6)(z^2+q^10)^2(z^2+q^14)^2(z^2+q^18)^2(z^2+q^22)",
        (Family::E6_2, 2, 4) => "(z^2+q^8)(z^2+q^12)(z^2+q^16)(z^2+q^20)",
        (Family::E6_2, 3, 3) => {
            "(z^2-q^4)(z^2-q^8)^2(z^2-q^12)^3(z^2-q^16)^3(z^2-q^20)^2(z^2-q^24)"
        }
        (Family::E6_2, 3, 4) => "(z^2-q^6)(z^2-q^10)(z^2-q^14)^2(z^2-q^18)^2(z^2-q^22)",
        (Family::E6_2, 4, 4) => "(z^2-q^4)(z^2-q^12)(z^2-q^16)(z^2-q^24)",
        _ => unreachable!("no exceptional list for {:?} ({}, {})", family, i, j),
    }
}

fn classical(d: &AffineData, k: usize, l: usize) -> Vec<Factor> {
    let n = d.rank() as i64;
    let (k, l) = (k as i64, l as i64);
    let mn = k.min(l);
    let diff = (k - l).abs();
    let neg_q = |e: i64| SpectralScalar::NEG_Q.pow(e);
    let minus = |x: SpectralScalar| SpectralScalar::MINUS_ONE * x;
    let mqs = |e: i64| (SpectralScalar::MINUS_ONE * SpectralScalar::q_pow(2)).pow(e);
    let mut out = Vec::new();
    match d.family() {
        Family::B1 => {
            if k < n && l < n {
                for s in 1..=mn {
                    out.push(Factor::linear(neg_q(diff + 2 * s)));
                    out.push(Factor::linear(minus(neg_q(2 * n - k - l - 1 + 2 * s))));
                }
            } else if k == n && l == n {
                for s in 1..=n {
                    out.push(Factor::linear(SpectralScalar::QS.pow(4 * s - 2)));
                }
            } else {
                for s in 1..=mn {
                    let c = SpectralScalar::MINUS_ONE.pow(n + mn)
                        * SpectralScalar::QS.pow(2 * n - 2 * mn - 1 + 4 * s);
                    out.push(Factor::linear(c));
                }
            }
        }
        Family::C1 => {
            let neg_qs = |e: i64| SpectralScalar::NEG_QS.pow(e);
            for s in 1..=mn.min(n - k).min(n - l) {
                out.push(Factor::linear(neg_qs(diff + 2 * s)));
            }
            for s in 1..=mn {
                out.push(Factor::linear(neg_qs(2 * n + 2 - k - l + 2 * s)));
            }
        }
        Family::A2_odd => {
            for s in 1..=mn {
                out.push(Factor::linear(neg_q(diff + 2 * s)));
                out.push(Factor::linear(minus(neg_q(2 * n - k - l + 2 * s))));
            }
        }
        Family::A2_even => {
            for s in 1..=mn {
                out.push(Factor::linear(neg_q(diff + 2 * s)));
                out.push(Factor::linear(neg_q(2 * n + 1 - k - l + 2 * s)));
            }
        }
        Family::D2 => {
            if k < n && l < n {
                for s in 1..=mn {
                    out.push(Factor {
                        deg: 2,
                        c: mqs(diff + 2 * s),
                        mult: 1,
                    });
                    out.push(Factor {
                        deg: 2,
                        c: mqs(2 * n - k - l + 2 * s),
                        mult: 1,
                    });
                }
            } else if k == n && l == n {
                for s in 1..=n {
                    out.push(Factor::linear(minus(mqs(s))));
                }
            } else {
                for s in 1..=mn {
                    out.push(Factor {
                        deg: 2,
                        c: minus(mqs(n - mn + 2 * s)),
                        mult: 1,
                    });
                }
            }
        }
        _ => unreachable!(),
    }
    out
}

fn ade(table: &CTildeTable, h: i64, i: usize, j: usize) -> Vec<Factor> {
    (1..h)
        .filter_map(|k| {
            let c = table.get(i, j, k);
            (c > 0).then(|| Factor {
                deg: 1,
                c: SpectralScalar::NEG_Q.pow(k + 1),
                mult: c as u32,
            })
        })
        .collect()
}

fn expand(factors: &[Factor]) -> RootMultiset {
    let mut m = RootMultiset::new();
    for f in factors {
        for r in f
            .roots()
            .expect("denominator factor splits over the scalar domain")
        {
            m.insert(r, f.mult);
        }
    }
    m
}

/// All denominators of one affine type, in factored and expanded form.
#[derive(Clone, Debug)]
pub struct DenomTable {
    n: usize,
    factors: Vec<Vec<Vec<Factor>>>,
    roots: Vec<Vec<RootMultiset>>,
}

impl DenomTable {
    pub fn build(d: &AffineData) -> Result<Self> {
        let n = d.rank();
        let ade_table = if d.family().is_simply_laced_untwisted() {
            let quiver = AdeQuiverData::new(d.gfin)?;
            let h = quiver.h;
            Some((CTildeTable::from_formula(&quiver, h as usize), h))
        } else {
            None
        };
        let mut factors = vec![vec![Vec::new(); n]; n];
        for i in 1..=n {
            for j in 1..=n {
                factors[i - 1][j - 1] = match (&ade_table, d.family()) {
                    (Some((t, h)), _) => ade(t, *h, i, j),
                    (None, Family::G2_1 | Family::F4_1 | Family::D4_3 | Family::E6_2) => {
                        parse_factors(exceptional(d.family(), i, j))
                    }
                    (None, _) => classical(d, i, j),
                };
            }
        }
        let roots = factors
            .iter()
            .map(|row| row.iter().map(|f| expand(f)).collect())
            .collect();
        Ok(Self { n, factors, roots })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &RootMultiset {
        &self.roots[i - 1][j - 1]
    }

    pub fn factors(&self, i: usize, j: usize) -> &[Factor] {
        &self.factors[i - 1][j - 1]
    }
}

/// `d_{i,j}(z)` as a multiset of roots.
pub fn denominator(d: &AffineData, i: usize, j: usize) -> Result<RootMultiset> {
    d.check_node(i)?;
    d.check_node(j)?;
    Ok(DenomTable::build(d)?.get(i, j).clone())
}
