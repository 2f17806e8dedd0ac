//! Polynomials in the variables s (= q^(1/2)) and lambda over the Gaussian
//! rationals. Only non-negative exponents live here; negative powers are the
//! business of `RationalFunction`.

use super::gauss::GaussianRational;
use std::collections::BTreeMap;
use std::fmt;

/// Monomial exponents (s_exp, lambda_exp).
pub type Expo = (u32, u32);

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    /// monomial -> nonzero coefficient
    pub terms: BTreeMap<Expo, GaussianRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert((0, 0), c);
        }
        Poly { terms: t }
    }

    pub fn monomial(c: GaussianRational, s_exp: u32, l_exp: u32) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert((s_exp, l_exp), c);
        }
        Poly { terms: t }
    }

    pub fn var_s() -> Self {
        Poly::monomial(GaussianRational::one(), 1, 0)
    }

    pub fn var_lambda() -> Self {
        Poly::monomial(GaussianRational::one(), 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map_or(false, |c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&(0, 0)))
    }

    /// Single-term test (unit monomial denominators get a cheap reduction path).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn degree_s(&self) -> u32 {
        self.terms.keys().map(|e| e.0).max().unwrap_or(0)
    }

    pub fn degree_lambda(&self) -> u32 {
        self.terms.keys().map(|e| e.1).max().unwrap_or(0)
    }

    /// Leading term in lexicographic order with s > lambda.
    pub fn leading(&self) -> Option<(Expo, &GaussianRational)> {
        self.terms
            .iter()
            .max_by_key(|(e, _)| **e)
            .map(|(e, c)| (*e, c))
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let mut out = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = out.entry(*e).or_insert_with(GaussianRational::zero);
            *entry = &*entry + c;
            if entry.is_zero() {
                out.remove(e);
            }
        }
        Poly { terms: out }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        let mut out: BTreeMap<Expo, GaussianRational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = (e1.0 + e2.0, e1.1 + e2.1);
                let prod = c1 * c2;
                let entry = out.entry(e).or_insert_with(GaussianRational::zero);
                *entry = &*entry + &prod;
                if entry.is_zero() {
                    out.remove(&e);
                }
            }
        }
        Poly { terms: out }
    }

    pub fn scale(&self, c: &GaussianRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn conj(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, c.conj())).collect(),
        }
    }

    /// Exact division; panics if not divisible (internal use by gcd reduction).
    pub fn div_exact(&self, rhs: &Poly) -> Poly {
        let (q, r) = self.div_rem_lex(rhs);
        assert!(r.is_zero(), "div_exact: not divisible");
        q
    }

    /// Multivariate division by a single divisor using lex order s > lambda.
    /// Returns (quotient, remainder). Only used where remainder 0 is expected
    /// or for monomial divisors.
    pub fn div_rem_lex(&self, rhs: &Poly) -> (Poly, Poly) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let (lead_e, lead_c) = rhs.leading().unwrap();
        let mut rem = self.clone();
        let mut quo = Poly::zero();
        loop {
            // find a remainder term divisible by the leading monomial
            let target = rem
                .terms
                .iter()
                .rev()
                .find(|(e, _)| e.0 >= lead_e.0 && e.1 >= lead_e.1)
                .map(|(e, c)| (*e, c.clone()));
            match target {
                None => break,
                Some((e, c)) => {
                    let me = (e.0 - lead_e.0, e.1 - lead_e.1);
                    let mc = &c / lead_c;
                    let mono = Poly::monomial(mc, me.0, me.1);
                    quo = quo.add(&mono);
                    rem = rem.sub(&mono.mul(rhs));
                }
            }
        }
        (quo, rem)
    }

    /// Substitute s -> 1 and return the resulting polynomial in lambda alone.
    pub fn eval_s_one(&self) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            out = out.add(&Poly::monomial(c.clone(), 0, e.1));
        }
        out
    }

    /// Coefficients as a dense vector in one variable, each entry a polynomial
    /// in the other variable. `by_s = true` groups by s-degree.
    fn to_dense(&self, by_s: bool) -> Vec<Poly> {
        let deg = if by_s { self.degree_s() } else { self.degree_lambda() } as usize;
        let mut out = vec![Poly::zero(); deg + 1];
        for (e, c) in &self.terms {
            let (k, rest) = if by_s { (e.0, (0, e.1)) } else { (e.1, (e.0, 0)) };
            out[k as usize] = out[k as usize].add(&Poly::monomial(c.clone(), rest.0, rest.1));
        }
        out
    }

    fn from_dense(coeffs: Vec<Poly>, by_s: bool) -> Poly {
        let mut out = Poly::zero();
        for (k, p) in coeffs.into_iter().enumerate() {
            for (e, c) in p.terms {
                let e2 = if by_s {
                    (e.0 + k as u32, e.1)
                } else {
                    (e.0, e.1 + k as u32)
                };
                out = out.add(&Poly::monomial(c, e2.0, e2.1));
            }
        }
        out
    }

    fn involves_s(&self) -> bool {
        self.terms.keys().any(|e| e.0 > 0)
    }

    fn involves_lambda(&self) -> bool {
        self.terms.keys().any(|e| e.1 > 0)
    }

    /// Normalize so the lex-leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// gcd with a single-term polynomial: the shared monomial part.
    fn gcd_with_monomial(p: &Poly, mono: Expo) -> Poly {
        let mut min_s = mono.0;
        let mut min_l = mono.1;
        for e in p.terms.keys() {
            min_s = min_s.min(e.0);
            min_l = min_l.min(e.1);
            if min_s == 0 && min_l == 0 {
                break;
            }
        }
        Poly::monomial(GaussianRational::one(), min_s, min_l)
    }

    /// Polynomial gcd, monic-normalized.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.is_constant() || b.is_constant() {
            return Poly::one();
        }
        if a == b {
            return a.monic();
        }
        if a.is_monomial() {
            return Poly::gcd_with_monomial(b, *a.terms.keys().next().unwrap());
        }
        if b.is_monomial() {
            return Poly::gcd_with_monomial(a, *b.terms.keys().next().unwrap());
        }
        let s_in = a.involves_s() || b.involves_s();
        let l_in = a.involves_lambda() || b.involves_lambda();
        if s_in && !l_in {
            gcd_univar(a, b, true)
        } else if l_in && !s_in {
            gcd_univar(a, b, false)
        } else {
            gcd_bivar(a, b)
        }
    }
}

/// Euclidean gcd for polynomials in a single variable over Q(i).
fn gcd_univar(a: &Poly, b: &Poly, by_s: bool) -> Poly {
    let mut r0 = a.to_dense(by_s).iter().map(|p| constant_of(p)).collect::<Vec<_>>();
    let mut r1 = b.to_dense(by_s).iter().map(|p| constant_of(p)).collect::<Vec<_>>();
    trim(&mut r0);
    trim(&mut r1);
    while !r1.is_empty() {
        let r = poly_rem(&r0, &r1);
        r0 = r1;
        r1 = r;
    }
    // make monic
    let lead = r0.last().cloned().unwrap_or_else(GaussianRational::one);
    let inv = lead.inv();
    let coeffs: Vec<Poly> = r0.iter().map(|c| Poly::constant(&*c * &inv)).collect();
    Poly::from_dense(coeffs, by_s)
}

fn constant_of(p: &Poly) -> GaussianRational {
    p.terms.get(&(0, 0)).cloned().unwrap_or_else(GaussianRational::zero)
}

fn trim(v: &mut Vec<GaussianRational>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

fn poly_rem(a: &[GaussianRational], b: &[GaussianRational]) -> Vec<GaussianRational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        let q = &lr / lb;
        for (k, bc) in b.iter().enumerate() {
            let idx = shift + k;
            r[idx] = &r[idx] - &(&q * bc);
        }
        trim(&mut r);
        if r.len() <= shift {
            continue;
        }
    }
    r
}

/// Primitive-PRS gcd for genuinely bivariate inputs, viewing polynomials in s
/// with coefficients in Q(i)[lambda].
fn gcd_bivar(a: &Poly, b: &Poly) -> Poly {
    let ca = content_s(a);
    let cb = content_s(b);
    let cont = Poly::gcd(&ca, &cb);
    let pa = divide_coeffs_s(a, &ca);
    let pb = divide_coeffs_s(b, &cb);
    let mut r0 = pa;
    let mut r1 = pb;
    if r0.degree_s() < r1.degree_s() {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_zero() {
        if r1.degree_s() == 0 {
            // common s-primitive part is trivial
            r0 = Poly::one();
            break;
        }
        let r = pseudo_rem_s(&r0, &r1);
        r0 = r1;
        r1 = if r.is_zero() {
            Poly::zero()
        } else {
            let c = content_s(&r);
            divide_coeffs_s(&r, &c)
        };
    }
    let prim = if r0.degree_s() == 0 { Poly::one() } else { r0 };
    cont.mul(&prim).monic()
}

/// gcd of the lambda-polynomial coefficients of `p` seen in the variable s.
fn content_s(p: &Poly) -> Poly {
    let dense = p.to_dense(true);
    let mut g = Poly::zero();
    for c in dense.iter().filter(|c| !c.is_zero()) {
        g = Poly::gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        Poly::one()
    } else {
        g
    }
}

fn divide_coeffs_s(p: &Poly, c: &Poly) -> Poly {
    if c.is_one() {
        return p.clone();
    }
    let dense = p.to_dense(true);
    let divided: Vec<Poly> = dense
        .iter()
        .map(|q| if q.is_zero() { Poly::zero() } else { q.div_exact(c) })
        .collect();
    Poly::from_dense(divided, true)
}

/// lc(b)^(da-db+1) * a mod b, in the variable s.
fn pseudo_rem_s(a: &Poly, b: &Poly) -> Poly {
    let da = a.degree_s();
    let db = b.degree_s();
    assert!(db <= da && db > 0);
    let b_dense = b.to_dense(true);
    let lb = b_dense.last().unwrap().clone();
    let mut r = a.to_dense(true);
    while r.len() > db as usize {
        let lr = r.last().unwrap().clone();
        if lr.is_zero() {
            r.pop();
            continue;
        }
        // scale the whole remainder by lb, then subtract lr * x^shift * b
        let shift = r.len() - 1 - db as usize;
        for item in r.iter_mut() {
            *item = item.mul(&lb);
        }
        for (k, bc) in b_dense.iter().enumerate() {
            r[shift + k] = r[shift + k].sub(&lr.mul(bc));
        }
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
        if r.is_empty() {
            break;
        }
    }
    Poly::from_dense(r, true)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest terms first for readability
        for (e, c) in self.terms.iter().rev() {
            let mut piece = String::new();
            let coeff_str = c.to_string();
            let needs_parens = coeff_str.contains('+') || (coeff_str.contains('-') && !coeff_str.starts_with('-'));
            let is_unit_mono = e.0 > 0 || e.1 > 0;
            if !is_unit_mono {
                piece.push_str(&coeff_str);
            } else {
                if c.is_one() {
                    // drop the 1
                } else if needs_parens {
                    piece.push_str(&format!("({})", coeff_str));
                    piece.push('*');
                } else {
                    piece.push_str(&coeff_str);
                    piece.push('*');
                }
                let mut vars = Vec::new();
                if e.0 == 1 {
                    vars.push("s".to_string());
                } else if e.0 > 1 {
                    vars.push(format!("s^{}", e.0));
                }
                if e.1 == 1 {
                    vars.push("lambda".to_string());
                } else if e.1 > 1 {
                    vars.push(format!("lambda^{}", e.1));
                }
                piece.push_str(&vars.join("*"));
            }
            if first {
                write!(f, "{}", piece)?;
                first = false;
            } else if let Some(stripped) = piece.strip_prefix('-') {
                write!(f, " - {}", stripped)?;
            } else {
                write!(f, " + {}", piece)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> Poly {
        Poly::var_s()
    }

    #[test]
    fn arithmetic() {
        // (s^2-1)(s^2+1) = s^4 - 1
        let a = s().mul(&s()).sub(&Poly::one());
        let b = s().mul(&s()).add(&Poly::one());
        let p = a.mul(&b);
        let s4 = Poly::monomial(GaussianRational::one(), 4, 0);
        assert_eq!(p, s4.sub(&Poly::one()));
    }

    #[test]
    fn gcd_univariate() {
        // gcd(s^4-1, s^2-1) = s^2-1
        let s2m1 = s().mul(&s()).sub(&Poly::one());
        let s4m1 = Poly::monomial(GaussianRational::one(), 4, 0).sub(&Poly::one());
        let g = Poly::gcd(&s4m1, &s2m1);
        assert_eq!(g, s2m1);
    }

    #[test]
    fn gcd_bivariate() {
        // gcd((s+lambda)*s, (s+lambda)*lambda) = s+lambda
        let sp = s().add(&Poly::var_lambda());
        let a = sp.mul(&s());
        let b = sp.mul(&Poly::var_lambda());
        let g = Poly::gcd(&a, &b);
        assert_eq!(g, sp);
    }

    #[test]
    fn division() {
        let s2m1 = s().mul(&s()).sub(&Poly::one());
        let s4m1 = Poly::monomial(GaussianRational::one(), 4, 0).sub(&Poly::one());
        let q = s4m1.div_exact(&s2m1);
        assert_eq!(q, s().mul(&s()).add(&Poly::one()));
    }
}
