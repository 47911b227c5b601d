//! Truncated formal power series with exact rational coefficients.
//!
//! A series of order `M` stores `c_0..c_M` and stands for
//! `c_0 + c_1 t + ⋯ + c_M t^M + O(t^{M+1})`. Binary operations truncate to
//! the smaller order; the derivative loses one order and the Hasse–Teichmüller
//! operator of order `n` loses `n`.

mod generating;
mod hasse;

pub use generating::*;
pub use hasse::{product_rule_sum, quotient_rule_binomial, quotient_rule_compositions};

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Panics on an empty coefficient vector; a series always has order >= 0.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least c_0");
        TruncatedSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| Rational::zero())
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// `c · t^k`, truncated at `order`.
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Series whose coefficients are `values[n] / n!`.
    pub fn from_egf(values: &[Rational]) -> Self {
        Self::new(
            values
                .iter()
                .enumerate()
                .map(|(n, v)| v / factorial(n))
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k`. Panics past the truncation order, where the
    /// coefficient is unknown.
    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    /// `n! · c_n` for every stored `n`.
    pub fn egf_values(&self) -> Vec<Rational> {
        let mut fact = Rational::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact *= Rational::from(n);
                }
                c * &fact
            })
            .collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise truncation order");
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let m = self.order().min(other.order());
        Self::from_fn(m, |k| &self.coeffs[k] + &other.coeffs[k])
    }

    pub fn sub(&self, other: &Self) -> Self {
        let m = self.order().min(other.order());
        Self::from_fn(m, |k| &self.coeffs[k] - &other.coeffs[k])
    }

    pub fn scale(&self, k: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let m = self.order().min(other.order());
        let mut out = vec![Rational::zero(); m + 1];
        for (i, a) in self.coeffs.iter().take(m + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(m + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse by forward substitution:
    /// `r_0 = 1/c_0`, `r_n = -(1/c_0) Σ_{k=1}^n c_k r_{n-k}`.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].recip().ok_or(Error::ZeroConstantTerm)?;
        let mut r: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        r.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &r[n - k];
                }
            }
            r.push(-(acc * &inv0));
        }
        Ok(TruncatedSeries { coeffs: r })
    }

    /// Formal derivative; the result has order one less (order 0 stays 0,
    /// with value 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::from_fn(self.order() - 1, |k| {
            &self.coeffs[k + 1] * Rational::from(k + 1)
        })
    }

    /// `n`-fold derivative.
    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |s, _| s.derivative())
    }

    /// Multiplication by `t`. Gains one order.
    pub fn mul_t(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        TruncatedSeries { coeffs }
    }

    /// Multiplication by `t^k`. Gains `k` orders.
    pub fn mul_t_pow(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |s, _| s.mul_t())
    }

    /// Hasse–Teichmüller derivative `H^{(n)}`: `c_m z^m ↦ c_m C(m, n) z^{m-n}`.
    /// Order drops by `n`.
    ///
    /// Panics when `n > order`: no coefficient of the result is determined.
    pub fn hasse_teichmuller(&self, n: usize) -> Self {
        assert!(
            n <= self.order(),
            "H^({n}) of an order-{} series is undetermined",
            self.order()
        );
        Self::from_fn(self.order() - n, |k| {
            &self.coeffs[k + n] * binomial(k + n, n as i64)
        })
    }

    /// Value at `t = 0`.
    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::add(self, rhs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::sub(self, rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    fn arb_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec((-20i64..20, 1i64..6), order + 1).prop_map(|v| {
            TruncatedSeries::new(v.into_iter().map(|(p, q)| Rational::new(p, q)).collect())
        })
    }

    #[test]
    fn order_is_min_of_operands() {
        let a = TruncatedSeries::one(5);
        let b = TruncatedSeries::one(3);
        assert_eq!(a.add(&b).order(), 3);
        assert_eq!(a.mul(&b).order(), 3);
        assert_eq!(a.sub(&b).order(), 3);
    }

    #[test]
    fn add_negation_is_zero() {
        let c = gen_cosh(12);
        assert!(c.add(&c.neg()).is_zero());
        assert_eq!(c.scale(&Rational::one()), c);
    }

    #[test]
    fn mul_identity() {
        let s = TruncatedSeries::new(ints(&[3, -1, 4, 1, -5, 9]));
        assert_eq!(TruncatedSeries::one(5).mul(&s), s);
    }

    #[test]
    fn geometric_reciprocal() {
        let s = TruncatedSeries::new(ints(&[1, -1, 0, 0, 0, 0, 0, 0]));
        assert_eq!(s.reciprocal().unwrap().coeffs(), ints(&[1; 8]).as_slice());
    }

    #[test]
    fn reciprocal_of_cosh_gives_euler_numbers() {
        let e = gen_f(0, 14).unwrap().reciprocal().unwrap().egf_values();
        let expected = ints(&[
            1, 0, -1, 0, 5, 0, -61, 0, 1385, 0, -50521, 0, 2702765, 0, -199360981,
        ]);
        assert_eq!(e, expected);
    }

    #[test]
    fn reciprocal_of_sinh_over_t() {
        // t / sinh t = 1 - t^2/6 + 7 t^4/360 - ⋯ ; EGF values 1, 0, -1/3, 0, 7/15
        let r = gen_f_hat(0, 4).unwrap().reciprocal().unwrap();
        assert_eq!(r.coeffs()[2], Rational::new(-1, 6));
        assert_eq!(r.coeffs()[4], Rational::new(7, 360));
        assert_eq!(
            r.egf_values(),
            vec![
                Rational::one(),
                Rational::zero(),
                Rational::new(-1, 3),
                Rational::zero(),
                Rational::new(7, 15)
            ]
        );
    }

    #[test]
    fn zero_constant_term_has_no_reciprocal() {
        let s = TruncatedSeries::new(ints(&[0, 1, 2]));
        assert_eq!(s.reciprocal(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn derivative_basics() {
        assert!(TruncatedSeries::one(6).derivative().is_zero());
        assert_eq!(TruncatedSeries::one(6).derivative().order(), 5);
        let sinh = gen_sinh_over_t(10).mul_t();
        assert_eq!(gen_cosh(10).derivative(), sinh.truncate(9));
    }

    #[test]
    fn f_derivative_relation_at_n3() {
        // 2N F + t F' = 2N F*
        let n = 3;
        let f = gen_f(n, 20).unwrap();
        let two_n = Rational::from(2 * n);
        let lhs = f.scale(&two_n).add(&f.derivative().mul_t());
        let rhs = gen_f_star(n, 20).unwrap().scale(&two_n);
        assert_eq!(lhs.order(), 20);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn hasse_teichmuller_basics() {
        let s = TruncatedSeries::new(ints(&[2, 7, 1, 8, 2, 8]));
        assert_eq!(s.hasse_teichmuller(0), s);
        let t3 = TruncatedSeries::monomial(Rational::one(), 3, 5);
        assert_eq!(
            t3.hasse_teichmuller(2),
            TruncatedSeries::monomial(Rational::from(3), 1, 3)
        );
    }

    #[test]
    #[should_panic]
    fn hasse_teichmuller_past_order_panics() {
        TruncatedSeries::one(2).hasse_teichmuller(3);
    }

    #[test]
    fn reciprocal_of_product_coefficients_vanish() {
        // Σ t^{2n}/(2n+2N)! times the EGF of E_{N,·} is 1/(2N)!
        for n in 0..5 {
            let f = gen_f(n, 24).unwrap();
            let e = f.reciprocal().unwrap();
            let prod = f.mul(&e);
            assert_eq!(prod, TruncatedSeries::one(24));
        }
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_series(12), b in arb_series(12), c in arb_series(12)) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }

        #[test]
        fn hasse_teichmuller_is_divided_derivative(s in arb_series(10), n in 0usize..=10) {
            let oracle = s.nth_derivative(n).scale(&factorial(n).recip().unwrap());
            prop_assert_eq!(s.hasse_teichmuller(n), oracle);
        }

        #[test]
        fn reciprocal_inverts(s in arb_series(10)) {
            prop_assume!(!s.constant_term().is_zero());
            let r = s.reciprocal().unwrap();
            prop_assert_eq!(s.mul(&r), TruncatedSeries::one(10));
        }
    }
}
