//! Rational functions in s and lambda over the Gaussian rationals, with the
//! convention q = s^2. Always stored gcd-reduced with a lex-monic denominator.

use super::gauss::GaussianRational;
use super::poly::Poly;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalFunction {
    pub num: Poly,
    pub den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut rf = RationalFunction { num, den };
        rf.reduce();
        rf
    }

    pub fn zero() -> Self {
        RationalFunction { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RationalFunction { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    pub fn from_gauss(c: GaussianRational) -> Self {
        RationalFunction::from_poly(Poly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        RationalFunction::from_gauss(GaussianRational::from_int(n))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        RationalFunction::from_gauss(GaussianRational::from_frac(num, den))
    }

    pub fn i() -> Self {
        RationalFunction::from_gauss(GaussianRational::i())
    }

    /// s^k for any integer k (negative powers land in the denominator).
    pub fn s_pow(k: i64) -> Self {
        if k >= 0 {
            RationalFunction::from_poly(Poly::monomial(GaussianRational::one(), k as u32, 0))
        } else {
            RationalFunction {
                num: Poly::one(),
                den: Poly::monomial(GaussianRational::one(), (-k) as u32, 0),
            }
        }
    }

    /// lambda^k for any integer k.
    pub fn lambda_pow(k: i64) -> Self {
        if k >= 0 {
            RationalFunction::from_poly(Poly::monomial(GaussianRational::one(), 0, k as u32))
        } else {
            RationalFunction {
                num: Poly::one(),
                den: Poly::monomial(GaussianRational::one(), 0, (-k) as u32),
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn involves_lambda(&self) -> bool {
        self.num.degree_lambda() > 0 || self.den.degree_lambda() > 0
    }

    pub fn as_gauss(&self) -> Option<GaussianRational> {
        if !self.is_constant() {
            return None;
        }
        if self.num.is_zero() {
            return Some(GaussianRational::zero());
        }
        let n = self.num.terms.get(&(0, 0)).cloned().unwrap();
        let d = self.den.terms.get(&(0, 0)).cloned().unwrap();
        Some(&n / &d)
    }

    fn normalize_lead(&mut self) {
        let lead = self.den.leading().unwrap().1.clone();
        if !lead.is_one() {
            let inv = lead.inv();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        if self.den.is_monomial() {
            // monomial denominator: cancel shared exponents, no gcd needed
            let (de, dc) = self.den.leading().map(|(e, c)| (e, c.clone())).unwrap();
            let min_s = self.num.terms.keys().map(|e| e.0).min().unwrap().min(de.0);
            let min_l = self.num.terms.keys().map(|e| e.1).min().unwrap().min(de.1);
            if min_s > 0 || min_l > 0 {
                self.num = Poly {
                    terms: self
                        .num
                        .terms
                        .iter()
                        .map(|(e, c)| ((e.0 - min_s, e.1 - min_l), c.clone()))
                        .collect(),
                };
                self.den = Poly::monomial(dc.clone(), de.0 - min_s, de.1 - min_l);
            }
            let lead = self.den.leading().unwrap().1.clone();
            if !lead.is_one() {
                let inv = lead.inv();
                self.num = self.num.scale(&inv);
                self.den = self.den.scale(&inv);
            }
            return;
        }
        let g = Poly::gcd(&self.num, &self.den);
        if !g.is_one() {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
        let lead = self.den.leading().unwrap().1.clone();
        if !lead.is_one() {
            let inv = lead.inv();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::new(self.num.add(&rhs.num), self.den.clone());
        }
        // lcm denominators: reduces the final gcd to smaller inputs
        let g = Poly::gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
            // coprime denominators: result is already reduced
            let mut rf = RationalFunction { num, den: self.den.mul(&rhs.den) };
            rf.normalize_lead();
            return rf;
        }
        let da = self.den.div_exact(&g);
        let db = rhs.den.div_exact(&g);
        RationalFunction::new(self.num.mul(&db).add(&rhs.num.mul(&da)), self.den.mul(&db))
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        // operands are reduced, so only cross factors can cancel
        let g1 = Poly::gcd(&self.num, &rhs.den);
        let g2 = Poly::gcd(&rhs.num, &self.den);
        let n1 = if g1.is_one() { self.num.clone() } else { self.num.div_exact(&g1) };
        let d2 = if g1.is_one() { rhs.den.clone() } else { rhs.den.div_exact(&g1) };
        let n2 = if g2.is_one() { rhs.num.clone() } else { rhs.num.div_exact(&g2) };
        let d1 = if g2.is_one() { self.den.clone() } else { self.den.div_exact(&g2) };
        let mut rf = RationalFunction { num: n1.mul(&n2), den: d1.mul(&d2) };
        rf.normalize_lead();
        rf
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(RationalFunction::new(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Option<Self> {
        Some(self.mul(&rhs.inv()?))
    }

    pub fn conj(&self) -> Self {
        RationalFunction::new(self.num.conj(), self.den.conj())
    }

    /// Substitute s -> 1 (classical limit of q-dependence). None if the
    /// denominator vanishes there.
    pub fn eval_s_one(&self) -> Option<Self> {
        let d = self.den.eval_s_one();
        if d.is_zero() {
            return None;
        }
        Some(RationalFunction::new(self.num.eval_s_one(), d))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            if self.num.terms.len() > 1 {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "(({})/({}))", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RationalFunction {
        RationalFunction::s_pow(2)
    }

    /// mu = 1 - q^-2
    fn mu() -> RationalFunction {
        RationalFunction::one().sub(&RationalFunction::s_pow(-4))
    }

    #[test]
    fn mu_canonical_form() {
        // 1 - q^-2 = (s^4-1)/s^4
        let m = mu();
        let s4m1 = Poly::monomial(GaussianRational::one(), 4, 0).sub(&Poly::one());
        assert_eq!(m.num, s4m1);
        assert_eq!(m.den, Poly::monomial(GaussianRational::one(), 4, 0));
    }

    #[test]
    fn field_inverse() {
        // (q - q^-1) * (q - q^-1)^-1 = 1
        let x = q().sub(&RationalFunction::s_pow(-2));
        let y = x.mul(&x.inv().unwrap());
        assert!(y.is_one());
    }

    #[test]
    fn reduction_cancels() {
        // (s^4-1)/(s^2-1) = s^2+1
        let s4m1 = RationalFunction::from_poly(
            Poly::monomial(GaussianRational::one(), 4, 0).sub(&Poly::one()),
        );
        let s2m1 = RationalFunction::from_poly(
            Poly::monomial(GaussianRational::one(), 2, 0).sub(&Poly::one()),
        );
        let r = s4m1.div(&s2m1).unwrap();
        assert_eq!(
            r,
            RationalFunction::from_poly(
                Poly::monomial(GaussianRational::one(), 2, 0).add(&Poly::one())
            )
        );
    }

    #[test]
    fn gcd_is_posthoc_trivial() {
        // after any operation num/den share no factor
        let a = q().sub(&RationalFunction::s_pow(-2));
        let b = mu();
        let c = a.mul(&b).add(&a.div(&b).unwrap());
        let g = Poly::gcd(&c.num, &c.den);
        assert!(g.is_one());
    }
}
