//! Basis charts: registered substitutions from convention generators into a
//! base presentation. A chart evaluates new-basis expressions exactly inside
//! the base model (and therefore verifies the displayed relation tables of
//! the rotated bases).

use crate::coeffs::{RationalFunction, Scalar};
use crate::error::AlgError;
use crate::hopf::HopfRef;
use crate::ncalg::{NCElement, Word};
use std::collections::BTreeMap;

#[derive(Clone)]
pub struct Chart {
    pub name: String,
    pub base: HopfRef,
    pub map: BTreeMap<String, NCElement>,
}

impl Chart {
    pub fn resolve(&self, symbol: &str) -> Option<&NCElement> {
        self.map.get(symbol)
    }
}

fn i_scalar() -> Scalar {
    Scalar::Rat(RationalFunction::i())
}

fn inv_lambda() -> Scalar {
    Scalar::Rat(RationalFunction::lambda_pow(-1))
}

fn lambda_s() -> Scalar {
    Scalar::Rat(RationalFunction::lambda_pow(1))
}

/// Rotation and momentum generators on the classical double:
/// H = 2 J0, X_pm = J1 pm i J2, a - d = i lambda P0, b + c = i lambda P1,
/// b - c = lambda P2.
pub fn chart_double_convention(double_0: &HopfRef) -> Chart {
    let p = &double_0.alg;
    let ring = p.ring;
    let l = |n: &str| p.letter_by_name(n).unwrap();
    let nc = |n: &str, c: Scalar| NCElement::from_term(Word::letter(l(n)), c);
    let mut map = BTreeMap::new();
    map.insert("J0".into(), nc("H", ring.from_frac(1, 2)));
    let mut j1 = nc("X_+", ring.from_frac(1, 2));
    j1 = j1.add(&nc("X_-", ring.from_frac(1, 2))).unwrap();
    map.insert("J1".into(), j1);
    // J2 = -i/2 (X_+ - X_-)
    let half_i = i_scalar().mul(&ring.from_frac(-1, 2)).unwrap();
    let mut j2 = nc("X_+", half_i.clone());
    j2 = j2.add(&nc("X_-", half_i.neg())).unwrap();
    map.insert("J2".into(), j2);
    // P0 = -i (a - d)/lambda, P1 = -i (b + c)/lambda, P2 = (b - c)/lambda
    let mi_over_l = i_scalar().neg().mul(&inv_lambda()).unwrap();
    let mut p0 = nc("a", mi_over_l.clone());
    p0 = p0.add(&nc("d", mi_over_l.neg())).unwrap();
    map.insert("P0".into(), p0);
    let mut p1 = nc("b", mi_over_l.clone());
    p1 = p1.add(&nc("c", mi_over_l.clone())).unwrap();
    map.insert("P1".into(), p1);
    let mut p2 = nc("b", inv_lambda());
    p2 = p2.add(&nc("c", inv_lambda().neg())).unwrap();
    map.insert("P2".into(), p2);
    Chart { name: "double_convention".into(), base: double_0.clone(), map }
}

/// Boost, rotation, and spatial momenta on the classical bicrossproduct:
/// H = 2M, X_pm = N2 mp i N1, beta = lambda (p2 + i p1), gamma = lambda (p2 - i p1).
pub fn chart_limit_gen(bicross_0: &HopfRef) -> Chart {
    let p = &bicross_0.alg;
    let ring = p.ring;
    let l = |n: &str| p.letter_by_name(n).unwrap();
    let nc = |n: &str, c: Scalar| NCElement::from_term(Word::letter(l(n)), c);
    let mut map = BTreeMap::new();
    map.insert("M".into(), nc("H", ring.from_frac(1, 2)));
    // N2 = (X_+ + X_-)/2, N1 = i (X_+ - X_-)/2
    let mut n2 = nc("X_+", ring.from_frac(1, 2));
    n2 = n2.add(&nc("X_-", ring.from_frac(1, 2))).unwrap();
    map.insert("N2".into(), n2);
    let half_i = i_scalar().mul(&ring.from_frac(1, 2)).unwrap();
    let mut n1 = nc("X_+", half_i.clone());
    n1 = n1.add(&nc("X_-", half_i.neg())).unwrap();
    map.insert("N1".into(), n1);
    // P+ = beta/lambda, P- = gamma/lambda; p2 = (P+ + P-)/2, p1 = (P+ - P-)/(2i)
    map.insert("P+".into(), nc("beta", inv_lambda()));
    map.insert("P-".into(), nc("gamma", inv_lambda()));
    let mut p2 = nc("beta", inv_lambda().mul(&ring.from_frac(1, 2)).unwrap());
    p2 = p2
        .add(&nc("gamma", inv_lambda().mul(&ring.from_frac(1, 2)).unwrap()))
        .unwrap();
    map.insert("p2".into(), p2);
    let mi_half = i_scalar().neg().mul(&ring.from_frac(1, 2)).unwrap();
    let mut p1 = nc("beta", inv_lambda().mul(&mi_half).unwrap());
    p1 = p1
        .add(&nc("gamma", inv_lambda().mul(&mi_half.neg()).unwrap()))
        .unwrap();
    map.insert("p1".into(), p1);
    Chart { name: "limit_gen".into(), base: bicross_0.clone(), map }
}

/// The spin-model spacetime chart on U(su2): x0 = lambda H/2,
/// x1 = lambda (X_+ + X_-)/2, x2 = -i lambda (X_+ - X_-)/2.
pub fn chart_spin_spacetime(u_su2: &HopfRef) -> Chart {
    let p = &u_su2.alg;
    let ring = p.ring;
    let l = |n: &str| p.letter_by_name(n).unwrap();
    let nc = |n: &str, c: Scalar| NCElement::from_term(Word::letter(l(n)), c);
    let mut map = BTreeMap::new();
    map.insert("x0".into(), nc("H", lambda_s().mul(&ring.from_frac(1, 2)).unwrap()));
    let half_l = lambda_s().mul(&ring.from_frac(1, 2)).unwrap();
    let mut x1 = nc("X_+", half_l.clone());
    x1 = x1.add(&nc("X_-", half_l.clone())).unwrap();
    map.insert("x1".into(), x1);
    let mi_half_l = i_scalar().neg().mul(&half_l).unwrap();
    let mut x2 = nc("X_+", mi_half_l.clone());
    x2 = x2.add(&nc("X_-", mi_half_l.neg())).unwrap();
    map.insert("x2".into(), x2);
    Chart { name: "spin_spacetime".into(), base: u_su2.clone(), map }
}

/// The bicrossproduct-model spacetime chart on U(su2*): x0 = i lambda z,
/// x1 = -i lambda (x_+ + x_-), x2 = lambda (x_+ - x_-).
pub fn chart_bicross_spacetime(u_su2_star: &HopfRef) -> Chart {
    let p = &u_su2_star.alg;
    let l = |n: &str| p.letter_by_name(n).unwrap();
    let nc = |n: &str, c: Scalar| NCElement::from_term(Word::letter(l(n)), c);
    let mut map = BTreeMap::new();
    let il = i_scalar().mul(&lambda_s()).unwrap();
    map.insert("x0".into(), nc("z", il.clone()));
    let mut x1 = nc("x_+", il.neg());
    x1 = x1.add(&nc("x_-", il.neg())).unwrap();
    map.insert("x1".into(), x1);
    let mut x2 = nc("x_+", lambda_s());
    x2 = x2.add(&nc("x_-", lambda_s().neg())).unwrap();
    map.insert("x2".into(), x2);
    Chart { name: "bicross_spacetime".into(), base: u_su2_star.clone(), map }
}

/// The scaled-generator chart on the quantum double: qz = a,
/// x_- = b / (q^(1/2) mu), x_+ = c / (q^(3/2) mu), qzb = d.
pub fn chart_double_zx(double_q: &HopfRef) -> Chart {
    let p = &double_q.alg;
    let ring = p.ring;
    let l = |n: &str| p.letter_by_name(n).unwrap();
    let nc = |n: &str, c: Scalar| NCElement::from_term(Word::letter(l(n)), c);
    let mu = ring.mu();
    let mut map = BTreeMap::new();
    map.insert("qz".into(), nc("a", ring.one()));
    map.insert("qzb".into(), nc("d", ring.one()));
    map.insert(
        "x_-".into(),
        nc("b", ring.one().div(&ring.q_half_pow(1).mul(&mu).unwrap()).unwrap()),
    );
    map.insert(
        "x_+".into(),
        nc("c", ring.one().div(&ring.q_half_pow(3).mul(&mu).unwrap()).unwrap()),
    );
    Chart { name: "double_zx".into(), base: double_q.clone(), map }
}

/// Evaluate a chart expression: a formal word in chart symbols.
pub fn chart_eval(chart: &Chart, symbols: &[&str]) -> Result<NCElement, AlgError> {
    let mut acc = NCElement::one(&chart.base.alg.ring);
    for s in symbols {
        let e = chart
            .resolve(s)
            .ok_or_else(|| AlgError::UnknownChart(format!("{} in {}", s, chart.name)))?;
        acc = chart.base.alg.mul(&acc, e)?;
    }
    Ok(acc)
}

/// Commutator through a chart.
pub fn chart_bracket(chart: &Chart, a: &str, b: &str) -> Result<NCElement, AlgError> {
    let x = chart.resolve(a).ok_or_else(|| AlgError::UnknownChart(a.into()))?;
    let y = chart.resolve(b).ok_or_else(|| AlgError::UnknownChart(b.into()))?;
    let xy = chart.base.alg.mul(x, y)?;
    let yx = chart.base.alg.mul(y, x)?;
    xy.sub(&yx)
}
