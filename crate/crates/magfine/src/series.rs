//! Truncated formal power series over the exact rationals.
//!
//! A series carries an interpretation flag — ordinary or exponential
//! generating function — and arithmetic refuses to mix the two; the
//! conversions multiply or divide by factorials explicitly. On top of the
//! arithmetic sit the closed forms for the Catalan and Fine counting
//! series and the identities relating them: the functional equation
//! `F(x - x^3/(1-x)^2) = x`, the composition `f_As ∘ F = f_Mag`, and the
//! dimension counts for the pre-Lie quotient and the Sabinin primitives.

use crate::trees::catalan;
use crate::Error;
use num::traits::Pow;
use num::{BigInt, BigRational, One, Zero};
use std::fmt;

/// Ordinary or exponential generating function.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesKind {
    Ogf,
    Egf,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesKind::Ogf => f.write_str("ordinary"),
            SeriesKind::Egf => f.write_str("exponential"),
        }
    }
}

/// A power series truncated at a fixed order, with exact coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    kind: SeriesKind,
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Wraps a coefficient list `c_0..=c_N`.
    pub fn new(kind: SeriesKind, coeffs: Vec<BigRational>) -> TruncatedSeries {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        TruncatedSeries { kind, coeffs }
    }

    pub fn zero(kind: SeriesKind, order: usize) -> TruncatedSeries {
        TruncatedSeries::new(kind, vec![BigRational::zero(); order + 1])
    }

    pub fn constant(kind: SeriesKind, order: usize, c: BigRational) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(kind, order);
        s.coeffs[0] = c;
        s
    }

    /// The series `x`.
    pub fn identity(kind: SeriesKind, order: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(kind, order);
        if order >= 1 {
            s.coeffs[1] = BigRational::one();
        }
        s
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncated(&self, order: usize) -> TruncatedSeries {
        let order = order.min(self.order());
        TruncatedSeries::new(self.kind, self.coeffs[..=order].to_vec())
    }

    fn check_kind(&self, rhs: &TruncatedSeries) -> Result<(), Error> {
        if self.kind != rhs.kind {
            return Err(Error::KindMismatch {
                left: self.kind,
                right: rhs.kind,
            });
        }
        Ok(())
    }

    /// Sum, truncated at the smaller order.
    pub fn add(&self, rhs: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
        self.check_kind(rhs)?;
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
            .collect();
        Ok(TruncatedSeries::new(self.kind, coeffs))
    }

    pub fn sub(&self, rhs: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
        self.check_kind(rhs)?;
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
            .collect();
        Ok(TruncatedSeries::new(self.kind, coeffs))
    }

    pub fn scale(&self, c: &BigRational) -> TruncatedSeries {
        TruncatedSeries::new(self.kind, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Cauchy product, truncated at the smaller order.
    pub fn mul(&self, rhs: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
        self.check_kind(rhs)?;
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(TruncatedSeries::new(self.kind, coeffs))
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<TruncatedSeries, Error> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ConstantTerm {
                expected: "a nonzero value".into(),
                found: "0".into(),
            });
        }
        let order = self.order();
        let mut b = vec![BigRational::zero(); order + 1];
        b[0] = a0.recip();
        for n in 1..=order {
            let mut s = BigRational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    s += &self.coeffs[k] * &b[n - k];
                }
            }
            b[n] = -s / a0;
        }
        Ok(TruncatedSeries::new(self.kind, b))
    }

    /// Composition `self ∘ inner`; the inner series must have zero
    /// constant term.
    pub fn compose(&self, inner: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
        self.check_kind(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm {
                expected: "0".into(),
                found: inner.coeffs[0].to_string(),
            });
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncated(order);
        let mut acc = TruncatedSeries::constant(self.kind, order, self.coeffs[order].clone());
        for k in (0..order).rev() {
            acc = acc.mul(&inner)?;
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse: the series `g` with `self(g(x)) = x`.
    /// Requires zero constant term and a nonzero linear coefficient.
    pub fn reversion(&self) -> Result<TruncatedSeries, Error> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm {
                expected: "0".into(),
                found: self.coeffs[0].to_string(),
            });
        }
        if self.order() < 1 || self.coeffs[1].is_zero() {
            return Err(Error::NotRevertible);
        }
        let order = self.order();
        let inv_c1 = self.coeffs[1].recip();
        let x = TruncatedSeries::identity(self.kind, order);
        let mut tail = self.clone();
        tail.coeffs[1] = BigRational::zero();
        // g = (x - tail(g)) / c1 gains one correct order per pass.
        let mut g = x.scale(&inv_c1);
        for _ in 0..order {
            g = x.sub(&tail.compose(&g)?)?.scale(&inv_c1);
        }
        Ok(g)
    }

    /// Square root by Newton iteration `y ← (y + self/y)/2`; needs
    /// constant term 1. Each pass doubles the number of exact
    /// coefficients.
    pub fn sqrt(&self) -> Result<TruncatedSeries, Error> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm {
                expected: "1".into(),
                found: self.coeffs[0].to_string(),
            });
        }
        let order = self.order();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut y = TruncatedSeries::constant(self.kind, order, BigRational::one());
        let passes = usize::BITS - order.leading_zeros() + 1;
        for _ in 0..passes {
            y = y.add(&self.mul(&y.inverse()?)?)?.scale(&half);
        }
        Ok(y)
    }

    fn derivative(&self) -> TruncatedSeries {
        if self.order() == 0 {
            return TruncatedSeries::zero(self.kind, 0);
        }
        let coeffs = (1..=self.order())
            .map(|n| &self.coeffs[n] * BigRational::from_integer(n.into()))
            .collect();
        TruncatedSeries::new(self.kind, coeffs)
    }

    /// Logarithm via `g' = f'/f`; needs constant term 1.
    pub fn log(&self) -> Result<TruncatedSeries, Error> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm {
                expected: "1".into(),
                found: self.coeffs[0].to_string(),
            });
        }
        let order = self.order();
        let mut coeffs = vec![BigRational::zero(); order + 1];
        if order >= 1 {
            let q = self.derivative().mul(&self.inverse()?)?;
            for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
                *c = &q.coeffs[n - 1] / BigRational::from_integer(n.into());
            }
        }
        Ok(TruncatedSeries::new(self.kind, coeffs))
    }

    /// Exponential via `y' = f'·y`; needs constant term 0.
    pub fn exp(&self) -> Result<TruncatedSeries, Error> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm {
                expected: "0".into(),
                found: self.coeffs[0].to_string(),
            });
        }
        let order = self.order();
        let mut y = vec![BigRational::zero(); order + 1];
        y[0] = BigRational::one();
        for n in 1..=order {
            let mut s = BigRational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    s += &self.coeffs[k] * BigRational::from_integer(k.into()) * &y[n - k];
                }
            }
            y[n] = s / BigRational::from_integer(n.into());
        }
        Ok(TruncatedSeries::new(self.kind, y))
    }

    /// Reinterprets as an exponential generating function, dividing the
    /// `n`-th coefficient by `n!`.
    pub fn to_egf(&self) -> TruncatedSeries {
        match self.kind {
            SeriesKind::Egf => self.clone(),
            SeriesKind::Ogf => {
                let mut factorial = BigInt::one();
                let coeffs = self
                    .coeffs
                    .iter()
                    .enumerate()
                    .map(|(n, c)| {
                        if n > 0 {
                            factorial *= BigInt::from(n);
                        }
                        c / BigRational::from_integer(factorial.clone())
                    })
                    .collect();
                TruncatedSeries::new(SeriesKind::Egf, coeffs)
            }
        }
    }

    /// Reinterprets as an ordinary generating function, multiplying the
    /// `n`-th coefficient by `n!`.
    pub fn to_ogf(&self) -> TruncatedSeries {
        match self.kind {
            SeriesKind::Ogf => self.clone(),
            SeriesKind::Egf => {
                let mut factorial = BigInt::one();
                let coeffs = self
                    .coeffs
                    .iter()
                    .enumerate()
                    .map(|(n, c)| {
                        if n > 0 {
                            factorial *= BigInt::from(n);
                        }
                        c * BigRational::from_integer(factorial.clone())
                    })
                    .collect();
                TruncatedSeries::new(SeriesKind::Ogf, coeffs)
            }
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| format!("{c}·x^{n}"))
            .collect();
        if parts.is_empty() {
            write!(f, "0 + O(x^{})", self.order() + 1)
        } else {
            write!(f, "{} + O(x^{})", parts.join(" + "), self.order() + 1)
        }
    }
}

fn ogf_poly(order: usize, coeffs: &[i64]) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(SeriesKind::Ogf, order);
    for (i, c) in coeffs.iter().enumerate().take(order + 1) {
        s.coeffs[i] = BigRational::from_integer((*c).into());
    }
    s
}

/// The Fine counting series `Σ F(n-1) x^n = (1 + 2x - sqrt(1-4x)) / (2(2+x))`;
/// coefficients `0, 1, 0, 1, 2, 6, 18, 57, ...`.
pub fn fine_series(order: usize) -> TruncatedSeries {
    let root = ogf_poly(order, &[1, -4]).sqrt().expect("constant term is 1");
    let numerator = ogf_poly(order, &[1, 2]).sub(&root).expect("same kind");
    let denominator = ogf_poly(order, &[4, 2]).inverse().expect("nonzero constant");
    numerator.mul(&denominator).expect("same kind")
}

/// The Catalan counting series `Σ C(n-1) x^n = (1 - sqrt(1-4x))/2`.
pub fn mag_series(order: usize) -> TruncatedSeries {
    let root = ogf_poly(order, &[1, -4]).sqrt().expect("constant term is 1");
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    ogf_poly(order, &[1]).sub(&root).expect("same kind").scale(&half)
}

/// The series `x/(1-x)` — every coefficient from `x` on is 1.
pub fn as_series(order: usize) -> TruncatedSeries {
    let geometric = ogf_poly(order, &[1, -1]).inverse().expect("nonzero constant");
    ogf_poly(order, &[0, 1]).mul(&geometric).expect("same kind")
}

fn koszul_inner(order: usize) -> TruncatedSeries {
    // x - x^3/(1-x)^2
    let geom = ogf_poly(order, &[1, -2, 1]).inverse().expect("nonzero constant");
    let cubic = ogf_poly(order, &[0, 0, 0, 1]).mul(&geom).expect("same kind");
    ogf_poly(order, &[0, 1]).sub(&cubic).expect("same kind")
}

/// Checks the functional equation `F(x - x^3/(1-x)^2) = x` up to the
/// given order.
pub fn vallette_check(order: usize) -> bool {
    let composed = fine_series(order)
        .compose(&koszul_inner(order))
        .expect("inner series has zero constant term");
    composed == TruncatedSeries::identity(SeriesKind::Ogf, order)
}

fn integer_coefficient(value: &BigRational, index: usize) -> Result<BigInt, Error> {
    if value.denom().is_one() {
        Ok(value.numer().clone())
    } else {
        Err(Error::NonIntegerCoefficient {
            index,
            value: value.to_string(),
        })
    }
}

/// Dimensions of the quotient of the primitive operad by the pre-Lie
/// relation, degrees `1..=order`: starts `1, 0, 3, 16, 165`.
///
/// Derived from `f_preLie = f_As ∘ g` for exponential Poincaré series,
/// i.e. `g = f/(1+f)` with `f = Σ n^{n-1} x^n / n!`.
pub fn prelie_quotient_dims(order: usize) -> Result<Vec<BigInt>, Error> {
    let mut coeffs = vec![BigRational::zero(); order + 1];
    let mut factorial = BigInt::one();
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        factorial *= BigInt::from(n);
        let dim: BigInt = BigInt::from(n).pow(n as u32 - 1);
        *c = BigRational::new(dim, factorial.clone());
    }
    let f = TruncatedSeries::new(SeriesKind::Egf, coeffs);
    let one_plus = f
        .add(&TruncatedSeries::constant(SeriesKind::Egf, order, BigRational::one()))
        .expect("same kind");
    let g = f.mul(&one_plus.inverse()?)?;
    let mut dims = Vec::with_capacity(order);
    let mut factorial = BigInt::one();
    for n in 1..=order {
        factorial *= BigInt::from(n);
        let value = g.coeff(n) * BigRational::from_integer(factorial.clone());
        dims.push(integer_coefficient(&value, n)?);
    }
    Ok(dims)
}

/// The Log-Catalan sequence `1, 1, 4, 13, 46, 166, 610, 2269, ...` in
/// degrees `1..=order`: with `g = log(1 + Σ C(n-1) x^n)`, the `n`-th
/// entry is `n·[x^n] g`.
pub fn sabinin_dims(order: usize) -> Result<Vec<BigInt>, Error> {
    let mut coeffs = vec![BigRational::zero(); order + 1];
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = BigRational::from_integer(catalan(n - 1));
    }
    let f = TruncatedSeries::new(SeriesKind::Egf, coeffs);
    let one_plus = f
        .add(&TruncatedSeries::constant(SeriesKind::Egf, order, BigRational::one()))
        .expect("same kind");
    let g = one_plus.log()?;
    let mut dims = Vec::with_capacity(order);
    for n in 1..=order {
        let value = g.coeff(n) * BigRational::from_integer(BigInt::from(n));
        dims.push(integer_coefficient(&value, n)?);
    }
    Ok(dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{enumerate_fine, fine_number};
    use crate::{rat, ratio};

    #[test]
    fn compose_with_identity() {
        let f = as_series(10);
        let x = TruncatedSeries::identity(SeriesKind::Ogf, 10);
        assert_eq!(f.compose(&x).unwrap(), f);
    }

    #[test]
    fn sqrt_of_one_minus_four_x_is_catalan() {
        let root = ogf_poly(12, &[1, -4]).sqrt().unwrap();
        assert_eq!(root.coeff(0), &rat(1));
        for n in 1..=12 {
            let expected = BigRational::from_integer(catalan(n - 1)) * rat(-2);
            assert_eq!(root.coeff(n), &expected, "n = {n}");
        }
        // cross-check Newton against the direct coefficient recurrence
        // y_n = (u_n − Σ y_i y_{n−i}) / 2.
        let u = ogf_poly(12, &[1, -4]);
        let mut y = vec![rat(1)];
        for n in 1..=12usize {
            let mut s = u.coeff(n).clone();
            for i in 1..n {
                s -= &y[i] * &y[n - i];
            }
            y.push(s / rat(2));
        }
        assert_eq!(root.coeffs(), &y[..]);
    }

    #[test]
    fn sqrt_squares_back() {
        let f = ogf_poly(10, &[1, 3, -2, 5]);
        let root = f.sqrt().unwrap();
        assert_eq!(root.mul(&root).unwrap(), f);
        assert!(ogf_poly(5, &[2, 1]).sqrt().is_err());
    }

    #[test]
    fn reversion_is_a_compositional_inverse() {
        let h = koszul_inner(12);
        let g = h.reversion().unwrap();
        let x = TruncatedSeries::identity(SeriesKind::Ogf, 12);
        assert_eq!(g.compose(&h).unwrap(), x);
        assert_eq!(h.compose(&g).unwrap(), x);
        // and the inverse is exactly the Fine series
        assert_eq!(g, fine_series(12));

        assert!(ogf_poly(5, &[1, 1]).reversion().is_err());
        assert!(ogf_poly(5, &[0, 0, 1]).reversion().is_err());
    }

    #[test]
    fn fine_series_coefficients() {
        let f = fine_series(12);
        assert_eq!(f.coeff(0), &rat(0));
        assert_eq!(f.coeff(1), &rat(1));
        assert_eq!(f.coeff(2), &rat(0));
        assert_eq!(f.coeff(8), &rat(186));
        for n in 1..=12 {
            assert_eq!(
                f.coeff(n),
                &BigRational::from_integer(fine_number(n - 1)),
                "n = {n}"
            );
        }
        for n in 1..=9 {
            let count = enumerate_fine(n).unwrap().len();
            assert_eq!(f.coeff(n), &rat(count as i64), "n = {n}");
        }
    }

    #[test]
    fn mag_and_as_series_coefficients() {
        let m = mag_series(8);
        assert_eq!(m.coeff(4), &rat(5));
        for n in 1..=8 {
            assert_eq!(m.coeff(n), &BigRational::from_integer(catalan(n - 1)));
        }
        let a = as_series(8);
        assert_eq!(a.coeff(0), &rat(0));
        for n in 1..=8 {
            assert_eq!(a.coeff(n), &rat(1));
        }
    }

    #[test]
    fn composition_identity_of_the_structure_theorem() {
        let lhs = as_series(12).compose(&fine_series(12)).unwrap();
        assert_eq!(lhs, mag_series(12));
    }

    #[test]
    fn vallette_functional_equation() {
        assert!(vallette_check(3));
        assert!(vallette_check(12));

        // sensitivity: bumping one Fine coefficient must break it
        let mut fine = fine_series(12);
        fine.coeffs[6] += rat(1);
        let composed = fine.compose(&koszul_inner(12)).unwrap();
        assert_ne!(composed, TruncatedSeries::identity(SeriesKind::Ogf, 12));
    }

    #[test]
    fn prelie_quotient_dimensions() {
        let dims = prelie_quotient_dims(5).unwrap();
        let expected: Vec<BigInt> = [1i64, 0, 3, 16, 165].iter().map(|&v| v.into()).collect();
        assert_eq!(dims, expected);
        for (i, d) in prelie_quotient_dims(8).unwrap().iter().enumerate() {
            assert!(d >= &BigInt::from(0), "n = {}", i + 1);
        }
    }

    #[test]
    fn sabinin_dimensions() {
        let dims = sabinin_dims(8).unwrap();
        let expected: Vec<BigInt> = [1i64, 1, 4, 13, 46, 166, 610, 2269]
            .iter()
            .map(|&v| v.into())
            .collect();
        assert_eq!(dims, expected);
    }

    #[test]
    fn exp_and_log_are_inverse() {
        let mut coeffs = vec![BigRational::zero(); 11];
        for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
            *c = BigRational::from_integer(catalan(n - 1));
        }
        let f = TruncatedSeries::new(SeriesKind::Egf, coeffs);
        let one_plus = f
            .add(&TruncatedSeries::constant(SeriesKind::Egf, 10, rat(1)))
            .unwrap();
        let g = one_plus.log().unwrap();
        assert_eq!(g.exp().unwrap(), one_plus);
        assert_eq!(g.exp().unwrap().log().unwrap(), g);
    }

    #[test]
    fn egf_ogf_round_trip() {
        let f = ogf_poly(9, &[0, 1, 5, 2, 7, 1, 1, 3, 9, 4]).scale(&ratio(1, 3));
        assert_eq!(f.to_egf().to_ogf(), f);
        assert_eq!(f.to_egf().kind(), SeriesKind::Egf);
        let e = f.to_egf();
        assert_eq!(e.coeff(3), &(f.coeff(3) / rat(6)));
    }

    #[test]
    fn kind_mixing_is_rejected() {
        let o = ogf_poly(5, &[0, 1]);
        let e = o.to_egf();
        assert!(matches!(o.add(&e), Err(Error::KindMismatch { .. })));
        assert!(matches!(o.mul(&e), Err(Error::KindMismatch { .. })));
        assert!(matches!(o.compose(&e), Err(Error::KindMismatch { .. })));
    }

    #[test]
    fn compose_rejects_nonzero_constant_term() {
        let f = ogf_poly(5, &[0, 1]);
        let g = ogf_poly(5, &[1, 1]);
        assert!(matches!(f.compose(&g), Err(Error::ConstantTerm { .. })));
    }

    #[test]
    fn inverse_multiplies_to_one() {
        let f = ogf_poly(10, &[3, 1, -4, 2]);
        let product = f.mul(&f.inverse().unwrap()).unwrap();
        assert_eq!(product, TruncatedSeries::constant(SeriesKind::Ogf, 10, rat(1)));
        assert!(ogf_poly(4, &[0, 1]).inverse().is_err());
    }
}
