//! Univariate polynomials over a field, with Sturm-sequence root isolation.

use std::ops::{Add, Mul, Neg, Sub};

use crate::Scalar;

/// Polynomial with coefficients in ascending degree; no trailing zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_count(i))
                .collect(),
        )
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// Quotient and remainder of polynomial long division.
    ///
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let factor = rem.last().cloned().expect("nonempty") / lead.clone();
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = rem[shift + i].clone() - factor.clone() * c.clone();
            }
            quot[shift] = factor;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(T::one() / self.leading()))
    }

    /// Splits off the root at zero: returns `(k, q)` with `self = x^k q`, `q(0) != 0`.
    pub fn strip_zero_root(&self) -> (usize, Self) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (k, Self::new(self.coeffs[k.min(self.coeffs.len())..].to_vec()))
    }

    /// Same roots, each with multiplicity one.
    pub fn square_free(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    /// Unique polynomial of degree below `points.len()` through the given
    /// `(x, y)` pairs (Newton divided differences). The `x` must be distinct.
    pub fn interpolate(points: &[(T, T)]) -> Self {
        let n = points.len();
        let xs: Vec<T> = points.iter().map(|p| p.0.clone()).collect();
        let mut dd: Vec<T> = points.iter().map(|p| p.1.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                dd[i] = (dd[i].clone() - dd[i - 1].clone()) / (xs[i].clone() - xs[i - level].clone());
            }
        }
        let mut result = Self::zero();
        for i in (0..n).rev() {
            result = result * (Self::x() - Self::constant(xs[i].clone())) + Self::constant(dd[i].clone());
        }
        result
    }

    /// Standard Sturm chain `p, p', -rem(p, p'), ...`.
    pub fn sturm_sequence(&self) -> Vec<Self> {
        let mut seq = vec![self.clone()];
        if self.is_zero() {
            return seq;
        }
        let mut next = self.derivative();
        while !next.is_zero() {
            let rem = seq.last().expect("nonempty").div_rem(&next).1;
            seq.push(next);
            next = -rem;
        }
        seq
    }

    /// Distinct real roots in the half-open interval `(lo, hi]` by Sturm's
    /// theorem. Requires a square-free polynomial and `lo` not a root.
    pub fn count_roots(&self, lo: &T, hi: &T) -> usize {
        let seq = self.sturm_sequence();
        sign_changes(&seq, lo).saturating_sub(sign_changes(&seq, hi))
    }

    /// Lower bound on the smallest root in `(0, cap]`, certified: the
    /// polynomial has no root in `(0, bound]`. Returns `cap` when there is
    /// no root in `(0, cap]`, and `None` for the zero polynomial. Bisection
    /// stops once the isolating interval is narrower than `tolerance`.
    pub fn smallest_positive_root_lower_bound(&self, cap: &T, tolerance: &T) -> Option<T> {
        if self.is_zero() {
            return None;
        }
        let core = self.strip_zero_root().1.square_free();
        let seq = core.sturm_sequence();
        let count = |lo: &T, hi: &T| sign_changes(&seq, lo).saturating_sub(sign_changes(&seq, hi));
        let zero = T::zero();
        if count(&zero, cap) == 0 {
            return Some(cap.clone());
        }
        let two = T::from_ratio(2, 1);
        let (mut lo, mut hi) = (zero, cap.clone());
        for _ in 0..4096 {
            if hi.clone() - lo.clone() <= *tolerance && lo.is_positive() {
                break;
            }
            let mid = (lo.clone() + hi.clone()) / two.clone();
            if count(&lo, &mid) > 0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Some(lo)
    }
}

fn sign_changes<T: Scalar>(seq: &[Polynomial<T>], x: &T) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

impl<T: Scalar> Add for Polynomial<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &Self, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(T::zero);
        Self::new((0..n).map(|i| get(&self, i) + get(&rhs, i)).collect())
    }
}

impl<T: Scalar> Neg for Polynomial<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<T: Scalar> Sub for Polynomial<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Mul for Polynomial<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}
