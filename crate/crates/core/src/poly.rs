//! Univariate polynomials with arbitrary-precision rational coefficients.
//!
//! The coefficient vector is kept trimmed: the leading coefficient is nonzero
//! unless the polynomial is zero (empty vector), so equality is canonical.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{format_rat, Int, Rat};
use crate::error::Error;

/// Polynomial a_0 + a_1 x + ... + a_n x^n; `coeffs[i]` is the coefficient of x^i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalPoly {
    coeffs: Vec<Rat>,
}

impl RationalPoly {
    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// c * x^degree.
    pub fn monomial(c: Rat, degree: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// The polynomial x.
    pub fn x() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    /// Build from an ascending coefficient vector, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rat::from_integer(Int::from(c)))
                .collect(),
        )
    }

    /// (x - r_1)(x - r_2)...(x - r_k) for the given rational roots.
    pub fn from_roots(roots: &[Rat]) -> Self {
        let mut p = Self::one();
        for r in roots {
            p = &p * &Self::from_coeffs(vec![-r.clone(), Rat::one()]);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, a)| a * Rat::from_integer(Int::from(i as u64 + 1)))
                .collect(),
        )
    }

    pub fn evaluate(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// f(a*x + b), expanded by Horner over the polynomial ring.
    pub fn compose_linear(&self, a: &Rat, b: &Rat) -> Self {
        let inner = Self::from_coeffs(vec![b.clone(), a.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// x^d * f(1/x) for a declared degree d >= deg f: the coefficient vector
    /// reversed within length d + 1.
    pub fn reverse(&self, declared_degree: usize) -> Result<Self, Error> {
        if let Some(actual) = self.degree() {
            if actual > declared_degree {
                return Err(Error::DegreeTooSmall {
                    declared: declared_degree,
                    actual,
                });
            }
        }
        let mut coeffs = vec![Rat::zero(); declared_degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs[declared_degree - i] = a.clone();
        }
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: self = q * d + r with deg r < deg d.
    /// Panics if d is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let dl = d.leading_coeff().unwrap();
        let mut r = self.clone();
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let t = r.leading_coeff().unwrap() / dl;
            let shift = dr - dd;
            q[shift] = t.clone();
            // r -= t * x^shift * d, with the leading term cancelling exactly
            let mut coeffs = r.coeffs;
            for (i, a) in d.coeffs.iter().enumerate() {
                coeffs[shift + i] -= a * &t;
            }
            r = Self::from_coeffs(coeffs);
        }
        (Self::from_coeffs(q), r)
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd (the zero polynomial if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading_coeff() {
            Some(l) => {
                let inv = Rat::one() / l;
                a.scale(&inv)
            }
            None => a,
        }
    }

    /// The product of the distinct irreducible factors: self / gcd(self, self').
    pub fn squarefree_part(&self) -> Self {
        match self.degree() {
            None | Some(0) => self.clone(),
            Some(_) => {
                let g = self.gcd(&self.derivative());
                self.div_exact(&g)
            }
        }
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None | Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Squarefree decomposition (Yun): pairs (f_i, i) with
    /// self = lc * prod f_i^i, each f_i squarefree and monic, deg f_i > 0.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let monic = self.scale(&(Rat::one() / self.leading_coeff().unwrap()));
        let deriv = monic.derivative();
        let mut out = Vec::new();
        let a0 = monic.gcd(&deriv);
        let mut b = monic.div_exact(&a0);
        let mut d = &deriv.div_exact(&a0) - &b.derivative();
        let mut i = 1;
        while b.degree() != Some(0) {
            let ai = b.gcd(&d);
            if ai.degree() != Some(0) {
                out.push((ai.clone(), i));
            }
            b = b.div_exact(&ai);
            d = &d.div_exact(&ai) - &b.derivative();
            i += 1;
        }
        out
    }

    /// Coefficients as exact "p/q" strings, ascending.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rat).collect()
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        RationalPoly::from_coeffs(coeffs)
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        RationalPoly::from_coeffs(coeffs)
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RationalPoly::from_coeffs(coeffs)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            if first {
                if a.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if a.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{}", format_rat(&mag))?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", format_rat(&mag))?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
