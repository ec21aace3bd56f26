//! Spectral parameters `ζ₂₄^a · q^(p/6)` with exact arithmetic.
//!
//! `q` is an indeterminate, so two scalars are equal exactly when both the
//! phase and the exponent agree.

use std::fmt;
use std::ops::{Div, Mul};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};

const PHASES: i64 = 24;
const QDEN: i64 = 6;

/// An element `ζ₂₄^phase · q^(q6/6)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SpectralScalar {
    phase: u8,
    q6: i64,
}

impl SpectralScalar {
    pub const ONE: Self = Self { phase: 0, q6: 0 };
    pub const MINUS_ONE: Self = Self { phase: 12, q6: 0 };
    pub const I: Self = Self { phase: 6, q6: 0 };
    pub const OMEGA: Self = Self { phase: 8, q6: 0 };
    pub const Q: Self = Self { phase: 0, q6: 6 };
    pub const QS: Self = Self { phase: 0, q6: 3 };
    pub const QT: Self = Self { phase: 0, q6: 2 };
    pub const NEG_Q: Self = Self { phase: 12, q6: 6 };
    pub const NEG_QS: Self = Self { phase: 12, q6: 3 };
    pub const NEG_QT: Self = Self { phase: 12, q6: 2 };

    /// Builds `ζ₂₄^phase · q^(q6/6)`; the phase is reduced modulo 24.
    pub fn from_parts(phase: i64, q6: i64) -> Self {
        Self {
            phase: phase.rem_euclid(PHASES) as u8,
            q6,
        }
    }

    /// Builds `ζ₂₄^phase · q^(num/den)`, rejecting denominators that do not divide 6.
    pub fn new(phase: i64, num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidArgument(
                "zero denominator in q-exponent".into(),
            ));
        }
        let r = Ratio::new(num, den);
        if QDEN % r.denom() != 0 {
            return Err(Error::RootOutsideDomain {
                value: format!("q^({}/{})", num, den),
                n: 1,
            });
        }
        Ok(Self::from_parts(phase, r.numer() * (QDEN / r.denom())))
    }

    /// `ζ₂₄^a`.
    pub fn zeta(a: i64) -> Self {
        Self::from_parts(a, 0)
    }

    /// `q^n` for an integer `n`.
    pub fn q_pow(n: i64) -> Self {
        Self::from_parts(0, 6 * n)
    }

    pub fn phase(self) -> u8 {
        self.phase
    }

    /// The q-exponent multiplied by 6.
    pub fn q6(self) -> i64 {
        self.q6
    }

    pub fn qexp(self) -> Ratio<i64> {
        Ratio::new(self.q6, QDEN)
    }

    pub fn is_one(self) -> bool {
        self == Self::ONE
    }

    pub fn inv(self) -> Self {
        Self::from_parts(-(self.phase as i64), -self.q6)
    }

    pub fn pow(self, n: i64) -> Self {
        Self::from_parts(self.phase as i64 * n, self.q6 * n)
    }

    /// All `n`-th roots (`n` = 2 or 3), sorted.
    pub fn nth_roots(self, n: u32) -> Result<Vec<Self>> {
        if n != 2 && n != 3 {
            return Err(Error::InvalidArgument(format!(
                "root degree {} is not 2 or 3",
                n
            )));
        }
        let n = n as i64;
        let outside = || Error::RootOutsideDomain {
            value: self.to_string(),
            n: n as u32,
        };
        if self.q6 % n != 0 || (self.phase as i64) % n != 0 {
            return Err(outside());
        }
        let base = self.phase as i64 / n;
        let step = PHASES / n;
        let mut roots: Vec<Self> = (0..n)
            .map(|k| Self::from_parts(base + k * step, self.q6 / n))
            .collect();
        roots.sort();
        Ok(roots)
    }
}

impl Mul for SpectralScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::from_parts(self.phase as i64 + rhs.phase as i64, self.q6 + rhs.q6)
    }
}

impl Div for SpectralScalar {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl std::iter::Product for SpectralScalar {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ONE, |a, b| a * b)
    }
}

impl fmt::Display for SpectralScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.phase != 0 {
            parts.push(format!("z24^{}", self.phase));
        }
        if self.q6 != 0 {
            let r = self.qexp();
            if r.is_integer() {
                if *r.numer() == 1 {
                    parts.push("q".to_string());
                } else {
                    parts.push(format!("q^{}", r.numer()));
                }
            } else {
                parts.push(format!("q^({}/{})", r.numer(), r.denom()));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Debug for SpectralScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for SpectralScalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_scalar(s)
    }
}

/// Parses a scalar literal such as `(-q)^3`, `i*q^2` or `w*q^(4/3)`.
pub fn parse_scalar(text: &str) -> Result<SpectralScalar> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
    };
    let v = p.scalar()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

/// Canonical printed form; inverse of [`parse_scalar`].
pub fn print_scalar(a: SpectralScalar) -> String {
    a.to_string()
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, message: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, tok: &str) -> bool {
        if self.s[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn scalar(&mut self) -> Result<SpectralScalar> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                acc = acc * self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<SpectralScalar> {
        self.skip_ws();
        if self.eat("-") {
            return Ok(SpectralScalar::MINUS_ONE * self.factor()?);
        }
        if self.eat("z24^") {
            let a = self.int()?;
            return Ok(SpectralScalar::zeta(a));
        }
        if self.eat("w2") {
            return Ok(SpectralScalar::OMEGA.pow(2));
        }
        if self.eat("w") {
            return Ok(SpectralScalar::OMEGA);
        }
        if self.eat("i") {
            return Ok(SpectralScalar::I);
        }
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let start = self.pos;
            let n = self.int()?;
            if n != 1 {
                self.pos = start;
                return Err(self.err("only the integer literal 1 is a scalar"));
            }
            return Ok(SpectralScalar::ONE);
        }
        let base = self.base()?;
        self.skip_ws();
        if self.eat("^") {
            let (num, den) = self.exp()?;
            let phase_num = base.phase as i64 * num;
            if den != 1 && base.phase != 0 {
                return Err(self.err("fractional power of a negative base is ambiguous"));
            }
            let q6_num = base.q6 * num;
            if q6_num % den != 0 {
                return Err(self.err("q-exponent denominator must divide 6"));
            }
            return Ok(SpectralScalar::from_parts(phase_num / den, q6_num / den));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<SpectralScalar> {
        for (tok, v) in [
            ("(-qs)", SpectralScalar::NEG_QS),
            ("(-qt)", SpectralScalar::NEG_QT),
            ("(-q)", SpectralScalar::NEG_Q),
            ("qs", SpectralScalar::QS),
            ("qt", SpectralScalar::QT),
            ("q", SpectralScalar::Q),
        ] {
            if self.eat(tok) {
                return Ok(v);
            }
        }
        Err(self.err("expected a scalar factor"))
    }

    fn exp(&mut self) -> Result<(i64, i64)> {
        self.skip_ws();
        if self.eat("(") {
            let num = self.int()?;
            self.skip_ws();
            if !self.eat("/") {
                return Err(self.err("expected `/`"));
            }
            let den = self.int()?;
            self.skip_ws();
            if !self.eat(")") {
                return Err(self.err("expected `)`"));
            }
            if den <= 0 {
                return Err(self.err("denominator must be positive"));
            }
            let g = num.gcd(&den);
            Ok((num / g, den / g))
        } else {
            Ok((self.int()?, 1))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse {
                offset: start,
                message: "integer overflow".into(),
            })
    }
}
