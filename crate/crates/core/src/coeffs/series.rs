//! Truncated power series in a single deformation variable (t or lambda)
//! with rational-function coefficients. Arithmetic is exact modulo
//! var^(order+1); division below the valuation bound is refused rather than
//! extended to Laurent series.

use super::ratfunc::RationalFunction;
use crate::error::CoeffError;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum SeriesVar {
    T,
    Lambda,
}

impl SeriesVar {
    pub fn name(&self) -> &'static str {
        match self {
            SeriesVar::T => "t",
            SeriesVar::Lambda => "lambda",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruncSeries {
    pub var: SeriesVar,
    /// coefficients[k] multiplies var^k; len = order + 1
    pub coeffs: Vec<RationalFunction>,
}

impl TruncSeries {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn zero(var: SeriesVar, order: usize) -> Self {
        TruncSeries { var, coeffs: vec![RationalFunction::zero(); order + 1] }
    }

    pub fn constant(var: SeriesVar, order: usize, c: RationalFunction) -> Self {
        let mut s = TruncSeries::zero(var, order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(var: SeriesVar, order: usize) -> Self {
        TruncSeries::constant(var, order, RationalFunction::one())
    }

    /// The variable itself, or zero if order is 0.
    pub fn var_term(var: SeriesVar, order: usize) -> Self {
        let mut s = TruncSeries::zero(var, order);
        if order >= 1 {
            s.coeffs[1] = RationalFunction::one();
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        TruncSeries { var: self.var, coeffs: self.coeffs[..=n].to_vec() }
    }

    fn common_order(&self, rhs: &Self) -> usize {
        self.order().min(rhs.order())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, CoeffError> {
        if self.var != rhs.var {
            return Err(CoeffError::RingMismatch);
        }
        let n = self.common_order(rhs);
        let coeffs = (0..=n).map(|k| self.coeffs[k].add(&rhs.coeffs[k])).collect();
        Ok(TruncSeries { var: self.var, coeffs })
    }

    pub fn neg(&self) -> Self {
        TruncSeries { var: self.var, coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, CoeffError> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, CoeffError> {
        if self.var != rhs.var {
            return Err(CoeffError::RingMismatch);
        }
        let n = self.common_order(rhs);
        let mut coeffs = vec![RationalFunction::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > n {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Ok(TruncSeries { var: self.var, coeffs })
    }

    /// Division with the valuation precondition: the divisor's lowest nonzero
    /// order must not exceed the dividend's.
    pub fn div(&self, rhs: &Self) -> Result<Self, CoeffError> {
        if self.var != rhs.var {
            return Err(CoeffError::RingMismatch);
        }
        let vb = match rhs.valuation() {
            None => return Err(CoeffError::DivisionByZero),
            Some(v) => v,
        };
        if self.is_zero() {
            return Ok(TruncSeries::zero(self.var, self.common_order(rhs)));
        }
        let va = self.valuation().unwrap();
        if vb > va {
            return Err(CoeffError::SeriesValuation);
        }
        // shift both down by vb, then invert a unit series
        let n = self.common_order(rhs);
        let res_order = n - vb;
        let a: Vec<_> = self.coeffs[vb..=n].to_vec();
        let b: Vec<_> = rhs.coeffs[vb..=n].to_vec();
        let b0_inv = b[0].inv().ok_or(CoeffError::DivisionByZero)?;
        let mut out = vec![RationalFunction::zero(); res_order + 1];
        for k in 0..=res_order {
            let mut acc = a[k].clone();
            for j in 0..k {
                acc = acc.sub(&out[j].mul(&b[k - j]));
            }
            out[k] = acc.mul(&b0_inv);
        }
        Ok(TruncSeries { var: self.var, coeffs: out })
    }

    pub fn conj(&self) -> Self {
        TruncSeries { var: self.var, coeffs: self.coeffs.iter().map(|c| c.conj()).collect() }
    }

    /// exp(c * var) truncated: 1 + c t + c^2 t^2/2! + ...
    pub fn exp_linear(var: SeriesVar, order: usize, c: &RationalFunction) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = RationalFunction::one();
        coeffs.push(term.clone());
        for k in 1..=order {
            term = term.mul(c).mul(&RationalFunction::from_frac(1, k as i64));
            coeffs.push(term.clone());
        }
        TruncSeries { var, coeffs }
    }

    /// Substitute a rational function of s and lambda into the series ring:
    /// for the lambda variable, lambda-degrees shift into series orders; the
    /// denominator must have an invertible series image.
    pub fn from_ratfunc(var: SeriesVar, order: usize, rf: &RationalFunction) -> Result<Self, CoeffError> {
        match var {
            SeriesVar::T => Ok(TruncSeries::constant(var, order, rf.clone())),
            SeriesVar::Lambda => {
                let num = poly_to_lambda_series(var, order, &rf.num);
                let den = poly_to_lambda_series(var, order, &rf.den);
                num.div(&den)
            }
        }
    }
}

fn poly_to_lambda_series(var: SeriesVar, order: usize, p: &super::poly::Poly) -> TruncSeries {
    let mut s = TruncSeries::zero(var, order);
    for (e, c) in &p.terms {
        let k = e.1 as usize;
        if k <= order {
            let mono = RationalFunction::from_poly(super::poly::Poly::monomial(c.clone(), e.0, 0));
            s.coeffs[k] = s.coeffs[k].add(&mono);
        }
    }
    s
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.var.name();
        let mut pieces = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let piece = match k {
                0 => cs,
                1 if c.is_one() => v.to_string(),
                1 => format!("{}*{}", cs, v),
                _ if c.is_one() => format!("{}^{}", v, k),
                _ => format!("{}*{}^{}", cs, v, k),
            };
            pieces.push(piece);
        }
        if pieces.is_empty() {
            write!(f, "0")?;
        } else {
            write!(f, "{}", pieces.join(" + "))?;
        }
        write!(f, " + O({}^{})", v, self.order() + 1)
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_expansion() {
        // e^(t/2) to order 2: 1 + t/2 + t^2/8
        let e = TruncSeries::exp_linear(SeriesVar::T, 2, &RationalFunction::from_frac(1, 2));
        assert_eq!(e.coeffs[0], RationalFunction::one());
        assert_eq!(e.coeffs[1], RationalFunction::from_frac(1, 2));
        assert_eq!(e.coeffs[2], RationalFunction::from_frac(1, 8));
    }

    #[test]
    fn division_valuation() {
        // (e^(t/2) - e^(-t/2)) / (t-series) works; reverse order is refused
        let a = TruncSeries::exp_linear(SeriesVar::T, 4, &RationalFunction::from_frac(1, 2));
        let b = TruncSeries::exp_linear(SeriesVar::T, 4, &RationalFunction::from_frac(-1, 2));
        let diff = a.sub(&b).unwrap();
        let t = TruncSeries::var_term(SeriesVar::T, 4);
        let q = diff.div(&t).unwrap();
        assert_eq!(q.coeffs[0], RationalFunction::one());
        assert!(matches!(t.div(&diff.mul(&diff).unwrap()), Err(CoeffError::SeriesValuation)));
    }

    #[test]
    fn lambda_substitution() {
        // (lambda^2 + lambda) / lambda = 1 + lambda as a series
        let rf = RationalFunction::lambda_pow(2)
            .add(&RationalFunction::lambda_pow(1))
            .div(&RationalFunction::lambda_pow(1))
            .unwrap();
        let s = TruncSeries::from_ratfunc(SeriesVar::Lambda, 3, &rf).unwrap();
        assert!(s.coeffs[0].is_one());
        assert!(s.coeffs[1].is_one());
        assert!(s.coeffs[2].is_zero());
    }
}

impl TruncSeries {
    /// Substitute s = e^(kappa t / 2) into an exact rational function,
    /// producing its t-adic image (lambda stays a coefficient variable).
    pub fn from_ratfunc_q(
        order: usize,
        rf: &RationalFunction,
        kappa_num: i64,
        kappa_den: i64,
    ) -> Result<Self, CoeffError> {
        let subst = |p: &super::poly::Poly| -> TruncSeries {
            let mut acc = TruncSeries::zero(SeriesVar::T, order);
            for (e, c) in &p.terms {
                // s^a lambda^b -> e^(kappa a t / 2) * lambda^b * c
                let expo = RationalFunction::from_frac(kappa_num * e.0 as i64, kappa_den * 2);
                let mut term = TruncSeries::exp_linear(SeriesVar::T, order, &expo);
                let scale = RationalFunction::from_poly(super::poly::Poly::monomial(c.clone(), 0, e.1));
                for coeff in term.coeffs.iter_mut() {
                    *coeff = coeff.mul(&scale);
                }
                acc = acc.add(&term).unwrap();
            }
            acc
        };
        let num = subst(&rf.num);
        let den = subst(&rf.den);
        num.div(&den)
    }
}
