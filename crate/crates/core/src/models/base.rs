//! The base presentations: the q-deformed enveloping algebra in its two
//! descriptions, the matrix function algebras, and their classical limits.

use super::{elem, qh, word};
use crate::coeffs::{Scalar, ScalarRing};
use crate::hopf::{Coalgebra, HopfPresentation, HopfRef, PairingTable};
use crate::ncalg::{NCElement, PresentationBuilder, Word};
use std::collections::BTreeMap;
use std::sync::Arc;

/// U_q(su2) with group-like K = q^(H/2). Alphabet K^-1 < K < X_+ < X_-.
pub fn uq_su2() -> HopfRef {
    let ring = ScalarRing::Exact;
    let mut b = PresentationBuilder::new("uq_su2", ring);
    let kinv = b.letter("K^-1");
    let k = b.letter("K");
    let xp = b.letter("X_+");
    let xm = b.letter("X_-");
    b.inverse_pair(k, kinv);
    // X_+ K = q^-1 K X_+, X_+ K^-1 = q K^-1 X_+
    b.rule(xp, k, NCElement::from_term(Word::concat(&[&[(k, 1), (xp, 1)]]), qh(&ring, -2)));
    b.rule(xp, kinv, NCElement::from_term(Word::concat(&[&[(kinv, 1), (xp, 1)]]), qh(&ring, 2)));
    // X_- K = q K X_-, X_- K^-1 = q^-1 K^-1 X_-
    b.rule(xm, k, NCElement::from_term(Word::concat(&[&[(k, 1), (xm, 1)]]), qh(&ring, 2)));
    b.rule(xm, kinv, NCElement::from_term(Word::concat(&[&[(kinv, 1), (xm, 1)]]), qh(&ring, -2)));
    // X_- X_+ = X_+ X_- - (K^2 - K^-2)/(q - q^-1)
    let c = ring.one().div(&ring.q_minus_qinv()).unwrap();
    let mut rhs = NCElement::from_term(Word::concat(&[&[(xp, 1), (xm, 1)]]), ring.one());
    rhs.add_term(Word::letter_pow(k, 2), c.neg()).unwrap();
    rhs.add_term(Word::letter_pow(kinv, 2), c).unwrap();
    b.rule(xm, xp, rhs);
    let alg = b.finish();

    let mut delta = BTreeMap::new();
    delta.insert(k, vec![(Word::letter(k), Word::letter(k), ring.one())]);
    delta.insert(kinv, vec![(Word::letter(kinv), Word::letter(kinv), ring.one())]);
    for x in [xp, xm] {
        delta.insert(
            x,
            vec![
                (Word::letter(kinv), Word::letter(x), ring.one()),
                (Word::letter(x), Word::letter(k), ring.one()),
            ],
        );
    }
    let mut counit = BTreeMap::new();
    counit.insert(k, ring.one());
    counit.insert(kinv, ring.one());
    counit.insert(xp, ring.zero());
    counit.insert(xm, ring.zero());
    let mut antipode = BTreeMap::new();
    antipode.insert(k, NCElement::from_term(Word::letter(kinv), ring.one()));
    antipode.insert(kinv, NCElement::from_term(Word::letter(k), ring.one()));
    antipode.insert(xp, NCElement::from_term(Word::letter(xp), qh(&ring, 2).neg()));
    antipode.insert(xm, NCElement::from_term(Word::letter(xm), qh(&ring, -2).neg()));
    let mut star = BTreeMap::new();
    star.insert(k, NCElement::from_term(Word::letter(k), ring.one()));
    star.insert(kinv, NCElement::from_term(Word::letter(kinv), ring.one()));
    star.insert(xp, NCElement::from_term(Word::letter(xm), ring.one()));
    star.insert(xm, NCElement::from_term(Word::letter(xp), ring.one()));

    HopfPresentation::new(alg, Some(Coalgebra { delta, counit, antipode }), Some(star))
}

/// The t-adic form of U_q(su2) with primitive-deformed generators H, X_+, X_-.
pub fn uq_su2_t(order: usize, kappa_num: i64, kappa_den: i64) -> HopfRef {
    let ring = ScalarRing::t_adic_kappa(order, kappa_num, kappa_den);
    let mut b = PresentationBuilder::new("uq_su2_t", ring);
    let h = b.letter("H");
    let xp = b.letter("X_+");
    let xm = b.letter("X_-");
    // X_+ H = H X_+ - 2 X_+, X_- H = H X_- + 2 X_-
    b.rule(xp, h, elem_swap_shift(&ring, h, xp, -2));
    b.rule(xm, h, elem_swap_shift(&ring, h, xm, 2));
    // X_- X_+ = X_+ X_- - (q^H - q^-H)/(q - q^-1)
    let mut rhs = NCElement::from_term(Word::concat(&[&[(xp, 1), (xm, 1)]]), ring.one());
    let qmq = ring.q_minus_qinv();
    for (wk, ck) in exp_h_minus_exp_h(&ring, h, order) {
        rhs.add_term(wk, ck.div(&qmq).unwrap().neg()).unwrap();
    }
    b.rule(xm, xp, rhs);
    let alg = b.finish();

    let mut delta = BTreeMap::new();
    delta.insert(
        h,
        vec![
            (Word::letter(h), Word::one(), ring.one()),
            (Word::one(), Word::letter(h), ring.one()),
        ],
    );
    for x in [xp, xm] {
        // q^(-H/2) (x) X + X (x) q^(H/2)
        let mut entry = Vec::new();
        for (wk, ck) in exp_h(&ring, h, order, -1, 4) {
            entry.push((wk, Word::letter(x), ck));
        }
        for (wk, ck) in exp_h(&ring, h, order, 1, 4) {
            entry.push((Word::letter(x), wk, ck));
        }
        delta.insert(x, entry);
    }
    let mut counit = BTreeMap::new();
    for l in [h, xp, xm] {
        counit.insert(l, ring.zero());
    }
    let mut antipode = BTreeMap::new();
    antipode.insert(h, NCElement::from_term(Word::letter(h), ring.one().neg()));
    antipode.insert(xp, NCElement::from_term(Word::letter(xp), qh(&ring, 2).neg()));
    antipode.insert(xm, NCElement::from_term(Word::letter(xm), qh(&ring, -2).neg()));
    let mut star = BTreeMap::new();
    star.insert(h, NCElement::from_term(Word::letter(h), ring.one()));
    star.insert(xp, NCElement::from_term(Word::letter(xm), ring.one()));
    star.insert(xm, NCElement::from_term(Word::letter(xp), ring.one()));
    HopfPresentation::new(alg, Some(Coalgebra { delta, counit, antipode }), Some(star))
}

/// x l = l x + shift * x
fn elem_swap_shift(ring: &ScalarRing, l: crate::ncalg::LetterId, x: crate::ncalg::LetterId, shift: i64) -> NCElement {
    let mut rhs = NCElement::from_term(Word::concat(&[&[(l, 1), (x, 1)]]), ring.one());
    rhs.add_term(Word::letter(x), ring.from_int(shift)).unwrap();
    rhs
}

/// Terms of q^(sign * H) ... actually e^(sign*kappa*t*H): word H^k with scalar (sign*kappa)^k t^k / k!
/// times denom_scale in the exponent: exponent = sign * kappa * t * H / denom.
fn exp_h(ring: &ScalarRing, h: crate::ncalg::LetterId, order: usize, sign: i64, denom: i64) -> Vec<(Word, Scalar)> {
    // q^(sign*H/2) = e^(sign*kappa*t*H/2); with denom=4 we get q^(sign*H/4)? No:
    // exp coefficient per power of H is (sign*kappa/denom_factor)^k t^k / k!.
    // Here denom encodes: q^(sign*H/2) -> factor kappa*sign/2; expressed via denom=4 when kappa=1/2.
    let (kn, kd) = match ring {
        ScalarRing::TAdic { kappa_num, kappa_den, .. } => (*kappa_num, *kappa_den),
        _ => panic!("exp_h needs a t-adic ring"),
    };
    let mut out = Vec::new();
    let mut coeff_num = 1i64;
    let mut coeff_den = 1i64;
    let mut fact = 1i64;
    for k in 0..=order {
        if k > 0 {
            coeff_num *= sign * kn * 2;
            coeff_den *= kd * denom;
            fact *= k as i64;
        }
        let c = t_power_scalar(ring, k, coeff_num, coeff_den * fact);
        out.push((Word::letter_pow(h, k as u32), c));
    }
    out
}

/// q^H - q^-H as H-power terms with series scalars.
fn exp_h_minus_exp_h(ring: &ScalarRing, h: crate::ncalg::LetterId, order: usize) -> Vec<(Word, Scalar)> {
    let plus = exp_h(ring, h, order, 1, 2);
    let minus = exp_h(ring, h, order, -1, 2);
    plus.into_iter()
        .zip(minus)
        .filter_map(|((w, a), (_, b))| {
            let c = a.sub(&b).unwrap();
            if c.is_zero() {
                None
            } else {
                Some((w, c))
            }
        })
        .collect()
}

/// c * t^k as a series scalar.
fn t_power_scalar(ring: &ScalarRing, k: usize, num: i64, den: i64) -> Scalar {
    use crate::coeffs::{RationalFunction, SeriesVar, TruncSeries};
    let order = ring.order().unwrap();
    let mut s = TruncSeries::zero(SeriesVar::T, order);
    if k <= order {
        s.coeffs[k] = RationalFunction::from_frac(num, den);
    }
    Scalar::Ser(s)
}

/// The matrix quantum group C_q[SU2]. Alphabet b < c < a < d so the
/// determinant relation pairs adjacent letters.
pub fn cq_su2() -> HopfRef {
    cq_su2_at(ScalarRing::Exact, true)
}

/// Classical C[SU2]: commutative, q = 1.
pub fn c_su2() -> HopfRef {
    cq_su2_at(ScalarRing::Exact, false)
}

fn cq_su2_at(ring: ScalarRing, deformed: bool) -> HopfRef {
    let name = if deformed { "cq_su2" } else { "c_su2" };
    let mut bl = PresentationBuilder::new(name, ring);
    let b = bl.letter("b");
    let c = bl.letter("c");
    let a = bl.letter("a");
    let d = bl.letter("d");
    bl.set_weight(a, 2);
    bl.set_weight(d, 2);
    let q1 = if deformed { qh(&ring, 2) } else { ring.one() };
    let q1i = if deformed { qh(&ring, -2) } else { ring.one() };
    // cb = bc; ab = q^-1 ba; ac = q^-1 ca; db = q bd; dc = q cd
    bl.rule(c, b, NCElement::from_term(Word::concat(&[&[(b, 1), (c, 1)]]), ring.one()));
    bl.rule(a, b, NCElement::from_term(Word::concat(&[&[(b, 1), (a, 1)]]), q1i.clone()));
    bl.rule(a, c, NCElement::from_term(Word::concat(&[&[(c, 1), (a, 1)]]), q1i.clone()));
    bl.rule(d, b, NCElement::from_term(Word::concat(&[&[(b, 1), (d, 1)]]), q1.clone()));
    bl.rule(d, c, NCElement::from_term(Word::concat(&[&[(c, 1), (d, 1)]]), q1.clone()));
    // determinant: ad = 1 + q^-1 bc, and da = 1 + q bc
    let mut det = NCElement::from_term(Word::one(), ring.one());
    det.add_term(Word::concat(&[&[(b, 1), (c, 1)]]), q1i.clone()).unwrap();
    bl.rule(a, d, det);
    let mut det2 = NCElement::from_term(Word::one(), ring.one());
    det2.add_term(Word::concat(&[&[(b, 1), (c, 1)]]), q1.clone()).unwrap();
    bl.rule(d, a, det2);
    let alg = bl.finish();

    let mut delta = BTreeMap::new();
    delta.insert(
        a,
        vec![
            (Word::letter(a), Word::letter(a), ring.one()),
            (Word::letter(b), Word::letter(c), ring.one()),
        ],
    );
    delta.insert(
        b,
        vec![
            (Word::letter(a), Word::letter(b), ring.one()),
            (Word::letter(b), Word::letter(d), ring.one()),
        ],
    );
    delta.insert(
        c,
        vec![
            (Word::letter(c), Word::letter(a), ring.one()),
            (Word::letter(d), Word::letter(c), ring.one()),
        ],
    );
    delta.insert(
        d,
        vec![
            (Word::letter(c), Word::letter(b), ring.one()),
            (Word::letter(d), Word::letter(d), ring.one()),
        ],
    );
    let mut counit = BTreeMap::new();
    counit.insert(a, ring.one());
    counit.insert(d, ring.one());
    counit.insert(b, ring.zero());
    counit.insert(c, ring.zero());
    let mut antipode = BTreeMap::new();
    antipode.insert(a, NCElement::from_term(Word::letter(d), ring.one()));
    antipode.insert(d, NCElement::from_term(Word::letter(a), ring.one()));
    antipode.insert(b, NCElement::from_term(Word::letter(b), q1.neg()));
    antipode.insert(c, NCElement::from_term(Word::letter(c), q1i.neg()));
    let mut star = BTreeMap::new();
    star.insert(a, NCElement::from_term(Word::letter(d), ring.one()));
    star.insert(d, NCElement::from_term(Word::letter(a), ring.one()));
    star.insert(b, NCElement::from_term(Word::letter(c), q1i.neg()));
    star.insert(c, NCElement::from_term(Word::letter(b), q1.neg()));
    HopfPresentation::new(alg, Some(Coalgebra { delta, counit, antipode }), Some(star))
}

/// The braided-matrix description C_q[SU2*] (alpha, beta, gamma with alpha
/// invertible and delta eliminated by the braided determinant). `cop` flips
/// the coproduct, which is the form entering the mirror product.
pub fn cq_su2_star(cop: bool) -> HopfRef {
    let ring = ScalarRing::Exact;
    let name = if cop { "cq_su2_star_cop" } else { "cq_su2_star" };
    let mut bl = PresentationBuilder::new(name, ring);
    let ai = bl.letter("alpha^-1");
    let al = bl.letter("alpha");
    let be = bl.letter("beta");
    let ga = bl.letter("gamma");
    bl.inverse_pair(al, ai);
    // beta alpha = q^2 alpha beta; gamma alpha = q^-2 alpha gamma
    bl.rule(be, al, NCElement::from_term(Word::concat(&[&[(al, 1), (be, 1)]]), qh(&ring, 4)));
    bl.rule(be, ai, NCElement::from_term(Word::concat(&[&[(ai, 1), (be, 1)]]), qh(&ring, -4)));
    bl.rule(ga, al, NCElement::from_term(Word::concat(&[&[(al, 1), (ga, 1)]]), qh(&ring, -4)));
    bl.rule(ga, ai, NCElement::from_term(Word::concat(&[&[(ai, 1), (ga, 1)]]), qh(&ring, 4)));
    // gamma beta = q^-2 beta gamma + q^-2 mu (alpha^2 - 1)
    let mu = ring.mu();
    let mut rhs = NCElement::from_term(Word::concat(&[&[(be, 1), (ga, 1)]]), qh(&ring, -4));
    rhs.add_term(Word::letter_pow(al, 2), qh(&ring, -4).mul(&mu).unwrap()).unwrap();
    rhs.add_term(Word::one(), qh(&ring, -4).mul(&mu).unwrap().neg()).unwrap();
    bl.rule(ga, be, rhs);
    let alg = bl.finish();

    let mut delta = BTreeMap::new();
    delta.insert(al, vec![(Word::letter(al), Word::letter(al), ring.one())]);
    delta.insert(ai, vec![(Word::letter(ai), Word::letter(ai), ring.one())]);
    for x in [be, ga] {
        let entry = if cop {
            vec![
                (Word::letter(x), Word::one(), ring.one()),
                (Word::letter(al), Word::letter(x), ring.one()),
            ]
        } else {
            vec![
                (Word::one(), Word::letter(x), ring.one()),
                (Word::letter(x), Word::letter(al), ring.one()),
            ]
        };
        delta.insert(x, entry);
    }
    let mut counit = BTreeMap::new();
    counit.insert(al, ring.one());
    counit.insert(ai, ring.one());
    counit.insert(be, ring.zero());
    counit.insert(ga, ring.zero());
    let mut antipode = BTreeMap::new();
    antipode.insert(al, NCElement::from_term(Word::letter(ai), ring.one()));
    antipode.insert(ai, NCElement::from_term(Word::letter(al), ring.one()));
    if cop {
        // S_cop = S^-1: beta -> -alpha^-1 beta, gamma -> -alpha^-1 gamma
        antipode.insert(
            be,
            NCElement::from_term(Word::concat(&[&[(ai, 1), (be, 1)]]), ring.one().neg()),
        );
        antipode.insert(
            ga,
            NCElement::from_term(Word::concat(&[&[(ai, 1), (ga, 1)]]), ring.one().neg()),
        );
    } else {
        // S beta = -q^-2 alpha^-1 beta, S gamma = -q^2 alpha^-1 gamma
        antipode.insert(
            be,
            NCElement::from_term(Word::concat(&[&[(ai, 1), (be, 1)]]), qh(&ring, -4).neg()),
        );
        antipode.insert(
            ga,
            NCElement::from_term(Word::concat(&[&[(ai, 1), (ga, 1)]]), qh(&ring, 4).neg()),
        );
    }
    let mut star = BTreeMap::new();
    star.insert(al, NCElement::from_term(Word::letter(al), ring.one()));
    star.insert(ai, NCElement::from_term(Word::letter(ai), ring.one()));
    star.insert(be, NCElement::from_term(Word::letter(ga), ring.one()));
    star.insert(ga, NCElement::from_term(Word::letter(be), ring.one()));
    HopfPresentation::new(alg, Some(Coalgebra { delta, counit, antipode }), Some(star))
}

/// U_q(su2*): C_q[SU2] in the scaled generators qz = a, x_- = b/(q^(1/2) mu),
/// x_+ = c/(q^(3/2) mu), with qzb the scaled d. Alphabet x_+ < x_- < qz < qzb.
pub fn uq_su2_star() -> HopfRef {
    let ring = ScalarRing::Exact;
    let mut bl = PresentationBuilder::new("uq_su2_star", ring);
    let xp = bl.letter("x_+");
    let xm = bl.letter("x_-");
    let qz = bl.letter("qz");
    let qzb = bl.letter("qzb");
    bl.set_weight(qz, 2);
    bl.set_weight(qzb, 2);
    let mu = ring.mu();
    let mu2 = mu.mul(&mu).unwrap();
    // x_- x_+ = x_+ x_-
    bl.rule(xm, xp, NCElement::from_term(Word::concat(&[&[(xp, 1), (xm, 1)]]), ring.one()));
    // qz x_{\pm} = q^-1 x_{\pm} qz ; qzb x_{\pm} = q x_{\pm} qzb
    bl.rule(qz, xp, NCElement::from_term(Word::concat(&[&[(xp, 1), (qz, 1)]]), qh(&ring, -2)));
    bl.rule(qz, xm, NCElement::from_term(Word::concat(&[&[(xm, 1), (qz, 1)]]), qh(&ring, -2)));
    bl.rule(qzb, xp, NCElement::from_term(Word::concat(&[&[(xp, 1), (qzb, 1)]]), qh(&ring, 2)));
    bl.rule(qzb, xm, NCElement::from_term(Word::concat(&[&[(xm, 1), (qzb, 1)]]), qh(&ring, 2)));
    // qzb qz = qz qzb + q^3 mu^3 x_+ x_- ; qz qzb = 1 + q mu^2 x_+ x_-
    let mu3 = mu2.mul(&mu).unwrap();
    let mut r1 = NCElement::from_term(Word::concat(&[&[(qz, 1), (qzb, 1)]]), ring.one());
    r1.add_term(Word::concat(&[&[(xp, 1), (xm, 1)]]), qh(&ring, 6).mul(&mu3).unwrap()).unwrap();
    bl.rule(qzb, qz, r1);
    let mut r2 = NCElement::from_term(Word::one(), ring.one());
    r2.add_term(Word::concat(&[&[(xp, 1), (xm, 1)]]), qh(&ring, 2).mul(&mu2).unwrap()).unwrap();
    bl.rule(qz, qzb, r2);
    let alg = bl.finish();

    let q2mu2 = qh(&ring, 4).mul(&mu2).unwrap();
    let mut delta = BTreeMap::new();
    delta.insert(
        qz,
        vec![
            (Word::letter(qz), Word::letter(qz), ring.one()),
            (Word::letter(xm), Word::letter(xp), q2mu2.clone()),
        ],
    );
    delta.insert(
        qzb,
        vec![
            (Word::letter(qzb), Word::letter(qzb), ring.one()),
            (Word::letter(xp), Word::letter(xm), q2mu2.clone()),
        ],
    );
    delta.insert(
        xp,
        vec![
            (Word::letter(xp), Word::letter(qz), ring.one()),
            (Word::letter(qzb), Word::letter(xp), ring.one()),
        ],
    );
    delta.insert(
        xm,
        vec![
            (Word::letter(qz), Word::letter(xm), ring.one()),
            (Word::letter(xm), Word::letter(qzb), ring.one()),
        ],
    );
    let mut counit = BTreeMap::new();
    counit.insert(qz, ring.one());
    counit.insert(qzb, ring.one());
    counit.insert(xp, ring.zero());
    counit.insert(xm, ring.zero());
    let mut antipode = BTreeMap::new();
    antipode.insert(qz, NCElement::from_term(Word::letter(qzb), ring.one()));
    antipode.insert(qzb, NCElement::from_term(Word::letter(qz), ring.one()));
    antipode.insert(xp, NCElement::from_term(Word::letter(xp), qh(&ring, -2).neg()));
    antipode.insert(xm, NCElement::from_term(Word::letter(xm), qh(&ring, 2).neg()));
    let mut star = BTreeMap::new();
    star.insert(qz, NCElement::from_term(Word::letter(qzb), ring.one()));
    star.insert(qzb, NCElement::from_term(Word::letter(qz), ring.one()));
    star.insert(xp, NCElement::from_term(Word::letter(xm), ring.one().neg()));
    star.insert(xm, NCElement::from_term(Word::letter(xp), ring.one().neg()));
    HopfPresentation::new(alg, Some(Coalgebra { delta, counit, antipode }), Some(star))
}

/// Classical U(su2). Alphabet H < X_+ < X_-.
pub fn u_su2() -> HopfRef {
    let ring = ScalarRing::Exact;
    let mut b = PresentationBuilder::new("u_su2", ring);
    let h = b.letter("H");
    let xp = b.letter("X_+");
    let xm = b.letter("X_-");
    b.rule(xp, h, elem_swap_shift(&ring, h, xp, -2));
    b.rule(xm, h, elem_swap_shift(&ring, h, xm, 2));
    let mut rhs = NCElement::from_term(Word::concat(&[&[(xp, 1), (xm, 1)]]), ring.one());
    rhs.add_term(Word::letter(h), ring.one().neg()).unwrap();
    b.rule(xm, xp, rhs);
    let alg = b.finish();
    let mut delta = BTreeMap::new();
    let mut counit = BTreeMap::new();
    let mut antipode = BTreeMap::new();
    for l in [h, xp, xm] {
        delta.insert(
            l,
            vec![
                (Word::letter(l), Word::one(), ring.one()),
                (Word::one(), Word::letter(l), ring.one()),
            ],
        );
        counit.insert(l, ring.zero());
        antipode.insert(l, NCElement::from_term(Word::letter(l), ring.one().neg()));
    }
    let mut star = BTreeMap::new();
    star.insert(h, NCElement::from_term(Word::letter(h), ring.one()));
    star.insert(xp, NCElement::from_term(Word::letter(xm), ring.one()));
    star.insert(xm, NCElement::from_term(Word::letter(xp), ring.one()));
    HopfPresentation::new(alg, Some(Coalgebra { delta, counit, antipode }), Some(star))
}

/// Classical U(su2*): [x_pm, z] = x_pm, [x_+, x_-] = 0. Alphabet z < x_+ < x_-.
pub fn u_su2_star() -> HopfRef {
    let ring = ScalarRing::Exact;
    let mut b = PresentationBuilder::new("u_su2_star", ring);
    let z = b.letter("z");
    let xp = b.letter("x_+");
    let xm = b.letter("x_-");
    // x_pm z = z x_pm + x_pm
    for x in [xp, xm] {
        let mut rhs = NCElement::from_term(Word::concat(&[&[(z, 1), (x, 1)]]), ring.one());
        rhs.add_term(Word::letter(x), ring.one()).unwrap();
        b.rule(x, z, rhs);
    }
    b.rule(xm, xp, NCElement::from_term(Word::concat(&[&[(xp, 1), (xm, 1)]]), ring.one()));
    let alg = b.finish();
    let mut delta = BTreeMap::new();
    let mut counit = BTreeMap::new();
    let mut antipode = BTreeMap::new();
    for l in [z, xp, xm] {
        delta.insert(
            l,
            vec![
                (Word::letter(l), Word::one(), ring.one()),
                (Word::one(), Word::letter(l), ring.one()),
            ],
        );
        counit.insert(l, ring.zero());
        antipode.insert(l, NCElement::from_term(Word::letter(l), ring.one().neg()));
    }
    let mut star = BTreeMap::new();
    star.insert(z, NCElement::from_term(Word::letter(z), ring.one().neg()));
    star.insert(xp, NCElement::from_term(Word::letter(xm), ring.one().neg()));
    star.insert(xm, NCElement::from_term(Word::letter(xp), ring.one().neg()));
    HopfPresentation::new(alg, Some(Coalgebra { delta, counit, antipode }), Some(star))
}

/// Classical C[SU2*]^cop: commutative alpha, beta, gamma with the flipped
/// matrix coalgebra.
pub fn c_su2_star_cop() -> HopfRef {
    let ring = ScalarRing::Exact;
    let mut bl = PresentationBuilder::new("c_su2_star_cop", ring);
    let ai = bl.letter("alpha^-1");
    let al = bl.letter("alpha");
    let be = bl.letter("beta");
    let ga = bl.letter("gamma");
    bl.inverse_pair(al, ai);
    for (hi, lo) in [(be, al), (be, ai), (ga, al), (ga, ai), (ga, be)] {
        bl.rule(hi, lo, NCElement::from_term(Word::concat(&[&[(lo, 1), (hi, 1)]]), ring.one()));
    }
    let alg = bl.finish();
    let mut delta = BTreeMap::new();
    delta.insert(al, vec![(Word::letter(al), Word::letter(al), ring.one())]);
    delta.insert(ai, vec![(Word::letter(ai), Word::letter(ai), ring.one())]);
    for x in [be, ga] {
        delta.insert(
            x,
            vec![
                (Word::letter(x), Word::one(), ring.one()),
                (Word::letter(al), Word::letter(x), ring.one()),
            ],
        );
    }
    let mut counit = BTreeMap::new();
    counit.insert(al, ring.one());
    counit.insert(ai, ring.one());
    counit.insert(be, ring.zero());
    counit.insert(ga, ring.zero());
    let mut antipode = BTreeMap::new();
    antipode.insert(al, NCElement::from_term(Word::letter(ai), ring.one()));
    antipode.insert(ai, NCElement::from_term(Word::letter(al), ring.one()));
    for x in [be, ga] {
        antipode.insert(
            x,
            NCElement::from_term(Word::concat(&[&[(ai, 1), (x, 1)]]), ring.one().neg()),
        );
    }
    let mut star = BTreeMap::new();
    star.insert(al, NCElement::from_term(Word::letter(al), ring.one()));
    star.insert(ai, NCElement::from_term(Word::letter(ai), ring.one()));
    star.insert(be, NCElement::from_term(Word::letter(ga), ring.one()));
    star.insert(ga, NCElement::from_term(Word::letter(be), ring.one()));
    HopfPresentation::new(alg, Some(Coalgebra { delta, counit, antipode }), Some(star))
}

/// Duality pairing between U_q(su2) and C_q[SU2] on generators (extended by
/// the duality axioms).
pub fn pairing_q(uq: &HopfRef, cq: &HopfRef) -> Arc<PairingTable> {
    let ring = uq.alg.ring;
    let k = uq.alg.letter_by_name("K").unwrap();
    let kinv = uq.alg.letter_by_name("K^-1").unwrap();
    let xp = uq.alg.letter_by_name("X_+").unwrap();
    let xm = uq.alg.letter_by_name("X_-").unwrap();
    let a = cq.alg.letter_by_name("a").unwrap();
    let b = cq.alg.letter_by_name("b").unwrap();
    let c = cq.alg.letter_by_name("c").unwrap();
    let d = cq.alg.letter_by_name("d").unwrap();
    let mut entries = BTreeMap::new();
    entries.insert((k, a), qh(&ring, 1));
    entries.insert((k, d), qh(&ring, -1));
    entries.insert((kinv, a), qh(&ring, -1));
    entries.insert((kinv, d), qh(&ring, 1));
    entries.insert((xp, b), ring.one());
    entries.insert((xm, c), ring.one());
    PairingTable::new(uq.clone(), cq.clone(), entries)
}

/// The classical pairing between U(su2) and C(SU2).
pub fn pairing_0(u: &HopfRef, cs: &HopfRef) -> Arc<PairingTable> {
    let ring = u.alg.ring;
    let h = u.alg.letter_by_name("H").unwrap();
    let xp = u.alg.letter_by_name("X_+").unwrap();
    let xm = u.alg.letter_by_name("X_-").unwrap();
    let a = cs.alg.letter_by_name("a").unwrap();
    let b = cs.alg.letter_by_name("b").unwrap();
    let c = cs.alg.letter_by_name("c").unwrap();
    let d = cs.alg.letter_by_name("d").unwrap();
    let mut entries = BTreeMap::new();
    entries.insert((h, a), ring.one());
    entries.insert((h, d), ring.one().neg());
    entries.insert((xp, b), ring.one());
    entries.insert((xm, c), ring.one());
    PairingTable::new(u.clone(), cs.clone(), entries)
}

// keep the helper imports alive for submodules that build elements
#[allow(unused_imports)]
use super::ModelConfig;
#[allow(dead_code)]
fn _helpers_used(p: &crate::ncalg::Presentation) {
    let _ = word(p, &[]);
    let _ = elem(p, &[]);
}
