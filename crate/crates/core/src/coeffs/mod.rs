//! Exact coefficient arithmetic: Gaussian rationals, rational functions in
//! s (= q^(1/2)) and lambda, and truncated power series in t or lambda.
//!
//! Everything here is immutable and pure; values are safe to share across
//! concurrent verification tasks.

pub mod gauss;
pub mod poly;
pub mod ratfunc;
pub mod series;

pub use gauss::GaussianRational;
pub use poly::Poly;
pub use ratfunc::RationalFunction;
pub use series::{SeriesVar, TruncSeries};

use crate::error::CoeffError;
use std::fmt;

/// A coefficient: either an exact rational function in s and lambda, or a
/// truncated power series in one deformation variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rat(RationalFunction),
    Ser(TruncSeries),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(RationalFunction::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(RationalFunction::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(RationalFunction::from_int(n))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Scalar::Rat(RationalFunction::from_frac(n, d))
    }

    pub fn i() -> Self {
        Scalar::Rat(RationalFunction::i())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Ser(s) => s.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Ser(s) => s.is_one(),
        }
    }

    /// Promote both operands into a common ring.
    fn coerce(a: &Scalar, b: &Scalar) -> Result<(Scalar, Scalar), CoeffError> {
        match (a, b) {
            (Scalar::Rat(_), Scalar::Rat(_)) => Ok((a.clone(), b.clone())),
            (Scalar::Ser(x), Scalar::Ser(y)) => {
                if x.var != y.var {
                    return Err(CoeffError::RingMismatch);
                }
                Ok((a.clone(), b.clone()))
            }
            (Scalar::Rat(r), Scalar::Ser(s)) => {
                let lifted = TruncSeries::from_ratfunc(s.var, s.order(), r)?;
                Ok((Scalar::Ser(lifted), b.clone()))
            }
            (Scalar::Ser(s), Scalar::Rat(r)) => {
                let lifted = TruncSeries::from_ratfunc(s.var, s.order(), r)?;
                Ok((a.clone(), Scalar::Ser(lifted)))
            }
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Result<Scalar, CoeffError> {
        let (a, b) = Scalar::coerce(self, rhs)?;
        match (a, b) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Ok(Scalar::Rat(x.add(&y))),
            (Scalar::Ser(x), Scalar::Ser(y)) => Ok(Scalar::Ser(x.add(&y)?)),
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Result<Scalar, CoeffError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r.neg()),
            Scalar::Ser(s) => Scalar::Ser(s.neg()),
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Result<Scalar, CoeffError> {
        let (a, b) = Scalar::coerce(self, rhs)?;
        match (a, b) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Ok(Scalar::Rat(x.mul(&y))),
            (Scalar::Ser(x), Scalar::Ser(y)) => Ok(Scalar::Ser(x.mul(&y)?)),
            _ => unreachable!(),
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar, CoeffError> {
        let (a, b) = Scalar::coerce(self, rhs)?;
        match (a, b) {
            (Scalar::Rat(x), Scalar::Rat(y)) => x.div(&y).map(Scalar::Rat).ok_or(CoeffError::DivisionByZero),
            (Scalar::Ser(x), Scalar::Ser(y)) => Ok(Scalar::Ser(x.div(&y)?)),
            _ => unreachable!(),
        }
    }

    /// Antilinear conjugation: i -> -i; s, lambda, t are real.
    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r.conj()),
            Scalar::Ser(s) => Scalar::Ser(s.conj()),
        }
    }

    pub fn pow(&self, k: u32) -> Result<Scalar, CoeffError> {
        let mut out = Scalar::one();
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", r),
            Scalar::Ser(s) => write!(f, "{}", s),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// The coefficient ring a presentation works over. Series rings carry the
/// truncation order and, for t, the convention q = e^(kappa t).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ScalarRing {
    /// rational functions in s and lambda
    Exact,
    /// truncated series in t; kappa = (num, den) with q = e^(kappa t)
    TAdic { order: usize, kappa_num: i64, kappa_den: i64 },
    /// truncated series in lambda
    LambdaAdic { order: usize },
}

impl ScalarRing {
    pub fn t_adic(order: usize) -> Self {
        ScalarRing::TAdic { order, kappa_num: 1, kappa_den: 2 }
    }

    pub fn t_adic_kappa(order: usize, kappa_num: i64, kappa_den: i64) -> Self {
        ScalarRing::TAdic { order, kappa_num, kappa_den }
    }

    pub fn lambda_adic(order: usize) -> Self {
        ScalarRing::LambdaAdic { order }
    }

    pub fn one(&self) -> Scalar {
        match self {
            ScalarRing::Exact => Scalar::one(),
            ScalarRing::TAdic { order, .. } => Scalar::Ser(TruncSeries::one(SeriesVar::T, *order)),
            ScalarRing::LambdaAdic { order } => Scalar::Ser(TruncSeries::one(SeriesVar::Lambda, *order)),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            ScalarRing::Exact => Scalar::zero(),
            ScalarRing::TAdic { order, .. } => Scalar::Ser(TruncSeries::zero(SeriesVar::T, *order)),
            ScalarRing::LambdaAdic { order } => Scalar::Ser(TruncSeries::zero(SeriesVar::Lambda, *order)),
        }
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.lift(&RationalFunction::from_int(n))
    }

    pub fn from_frac(&self, n: i64, d: i64) -> Scalar {
        self.lift(&RationalFunction::from_frac(n, d))
    }

    pub fn lift(&self, rf: &RationalFunction) -> Scalar {
        match self {
            ScalarRing::Exact => Scalar::Rat(rf.clone()),
            ScalarRing::TAdic { order, .. } => {
                Scalar::Ser(TruncSeries::from_ratfunc(SeriesVar::T, *order, rf).expect("t-lift"))
            }
            ScalarRing::LambdaAdic { order } => Scalar::Ser(
                TruncSeries::from_ratfunc(SeriesVar::Lambda, *order, rf)
                    .expect("lambda-lift of a non-regular rational function"),
            ),
        }
    }

    /// q^(k/2), i.e. s^k: exact as a monomial, t-adic as exp(kappa k t / 2).
    pub fn q_half_pow(&self, k: i64) -> Scalar {
        match self {
            ScalarRing::Exact => Scalar::Rat(RationalFunction::s_pow(k)),
            ScalarRing::TAdic { order, kappa_num, kappa_den } => {
                let c = RationalFunction::from_frac(kappa_num * k, kappa_den * 2);
                Scalar::Ser(TruncSeries::exp_linear(SeriesVar::T, *order, &c))
            }
            ScalarRing::LambdaAdic { .. } => {
                panic!("q-powers are not defined in a lambda-adic ring")
            }
        }
    }

    /// q^k = s^(2k).
    pub fn q_pow(&self, k: i64) -> Scalar {
        self.q_half_pow(2 * k)
    }

    /// mu = 1 - q^-2.
    pub fn mu(&self) -> Scalar {
        self.one().sub(&self.q_pow(-2)).expect("mu")
    }

    /// q - q^-1.
    pub fn q_minus_qinv(&self) -> Scalar {
        self.q_pow(1).sub(&self.q_pow(-1)).expect("q-q^-1")
    }

    pub fn series_var(&self) -> Option<SeriesVar> {
        match self {
            ScalarRing::Exact => None,
            ScalarRing::TAdic { .. } => Some(SeriesVar::T),
            ScalarRing::LambdaAdic { .. } => Some(SeriesVar::Lambda),
        }
    }

    pub fn order(&self) -> Option<usize> {
        match self {
            ScalarRing::Exact => None,
            ScalarRing::TAdic { order, .. } | ScalarRing::LambdaAdic { order } => Some(*order),
        }
    }
}

/// Expansion of a symbolic q-power q^c (c rational) to a truncated series in
/// t under q = e^(kappa t), kappa in {1/2, 1}.
pub fn expand_q(c_num: i64, c_den: i64, kappa_num: i64, kappa_den: i64, order: usize) -> TruncSeries {
    let exponent = RationalFunction::from_frac(c_num * kappa_num, c_den * kappa_den);
    TruncSeries::exp_linear(SeriesVar::T, order, &exponent)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_minus_qinv_series() {
        // with q = e^(t/2): q - q^-1 = t + t^3/24 + O(t^4)
        let ring = ScalarRing::t_adic(3);
        match ring.q_minus_qinv() {
            Scalar::Ser(s) => {
                assert!(s.coeffs[0].is_zero());
                assert!(s.coeffs[1].is_one());
                assert!(s.coeffs[2].is_zero());
                assert_eq!(s.coeffs[3], RationalFunction::from_frac(1, 24));
            }
            _ => panic!("expected series"),
        }
    }

    #[test]
    fn expand_q_examples() {
        // q^1 at kappa=1/2, N=2: 1 + t/2 + t^2/8
        let s = expand_q(1, 1, 1, 2, 2);
        assert_eq!(s.coeffs[1], RationalFunction::from_frac(1, 2));
        assert_eq!(s.coeffs[2], RationalFunction::from_frac(1, 8));
        // q^-2 at kappa=1/2, N=1: 1 - t
        let s = expand_q(-2, 1, 1, 2, 1);
        assert!(s.coeffs[0].is_one());
        assert_eq!(s.coeffs[1], RationalFunction::from_int(-1));
        // 1 - q^-2 at kappa=1/2, N=2: t - t^2/2
        let one = TruncSeries::one(SeriesVar::T, 2);
        let m = one.sub(&expand_q(-2, 1, 1, 2, 2)).unwrap();
        assert!(m.coeffs[0].is_zero());
        assert!(m.coeffs[1].is_one());
        assert_eq!(m.coeffs[2], RationalFunction::from_frac(-1, 2));
    }

    #[test]
    fn mixed_ring_coercion() {
        let ring = ScalarRing::t_adic(4);
        let a = ring.mu();
        let b = Scalar::from_int(3);
        let c = a.mul(&b).unwrap();
        match c {
            Scalar::Ser(s) => assert_eq!(s.coeffs[1], RationalFunction::from_int(3)),
            _ => panic!(),
        }
    }

    #[test]
    fn series_vs_exact_consistency() {
        // t-adic value of mu agrees with substituting q = e^(t/2) into the
        // exact rational function
        let exact = ScalarRing::Exact.mu();
        let _ = exact; // exact mu is (s^4-1)/s^4; its t-adic image is checked via expand_q
        let ring = ScalarRing::t_adic(4);
        let mu_series = ring.mu();
        let direct = TruncSeries::one(SeriesVar::T, 4).sub(&expand_q(-2, 1, 1, 2, 4)).unwrap();
        assert_eq!(mu_series, Scalar::Ser(direct));
    }
}
