//! The distinguished twists and R-matrices, the structure maps between the
//! double and the bicrossproduct, and the exact twisted-coproduct check via
//! the q-exponential conjugation identity.

use super::rep::{algebra_map, l_matrices, KillingInverse};
use super::Models;
use crate::coeffs::{Scalar, ScalarRing};
use crate::constructions::{self, map_elem, Cocycle, MirrorView};
use crate::error::AlgError;
use crate::hopf::{HopfRef, TensorElement};
use crate::ncalg::{LetterId, NCElement, Word};
use crate::report::Check;
use std::collections::BTreeMap;

fn letter(h: &HopfRef, n: &str) -> LetterId {
    h.alg.letter_by_name(n).unwrap_or_else(|| panic!("no letter {} in {}", n, h.alg.name))
}

fn nc(h: &HopfRef, n: &str) -> NCElement {
    NCElement::from_letter(letter(h, n), &h.alg.ring)
}

/// q^(j H/2) as a series element of the t-adic enveloping algebra.
pub fn k_series(h: &HopfRef, j: i64) -> NCElement {
    let ring = h.alg.ring;
    let order = ring.order().expect("series ring");
    let (kn, kd) = match ring {
        ScalarRing::TAdic { kappa_num, kappa_den, .. } => (kappa_num, kappa_den),
        _ => panic!("k_series needs a t-adic ring"),
    };
    let hh = letter(h, "H");
    let mut out = NCElement::zero();
    let mut num = 1i64;
    let mut den = 1i64;
    let mut fact = 1i64;
    for k in 0..=order {
        if k > 0 {
            num *= j * kn;
            den *= 2 * kd;
            fact *= k as i64;
        }
        let mut s = crate::coeffs::TruncSeries::zero(crate::coeffs::SeriesVar::T, order);
        s.coeffs[k] = crate::coeffs::RationalFunction::from_frac(num, den * fact);
        out.add_term(Word::letter_pow(hh, k as u32), Scalar::Ser(s)).unwrap();
    }
    out
}

/// exp(c * A (x) B) for tensor legs of a series presentation.
fn exp_simple(
    legs: &[HopfRef],
    a: &NCElement,
    b: &NCElement,
    c: Scalar,
) -> Result<TensorElement, AlgError> {
    let ta = TensorElement::embed(a, legs.to_vec(), 0)?;
    let tb = TensorElement::embed(b, legs.to_vec(), 1)?;
    constructions::tensor_exp(&ta.mul(&tb)?.scale(&c)?)
}

/// The Drinfeld twist of the t-adic mirror product:
/// chi_B = e_{q^2}^(-mu K X_+ (x) K~^-1 X~_-) q^(-H (x) H~ / 2).
pub fn chi_b_t(m: &Models) -> Result<Cocycle, AlgError> {
    let mt = &m.mirror_t;
    let ring = mt.alg.ring;
    let legs = vec![mt.clone(), mt.clone()];
    let kxp = mt.alg.mul(&k_series(mt, 1), &nc(mt, "X_+"))?;
    let ktxm = mt.alg.mul(&k_series_t(mt, -1), &nc(mt, "X_-~"))?;
    let arg = TensorElement::embed(&kxp, legs.clone(), 0)?
        .mul(&TensorElement::embed(&ktxm, legs.clone(), 1)?)?;
    let mu = ring.mu();
    let e_part = constructions::tensor_q_exp(&arg.scale(&mu.neg())?, 1)?;
    let e_part_inv = constructions::tensor_q_exp(&arg.scale(&mu)?, -1)?;
    let gauss = exp_hh(mt, "H", "H~", (-1, 4))?;
    let gauss_inv = exp_hh(mt, "H", "H~", (1, 4))?;
    Ok(Cocycle { chi: e_part.mul(&gauss)?, chi_inv: gauss_inv.mul(&e_part_inv)? })
}

/// tilde-copy K-series q^(j H~ / 2).
fn k_series_t(h: &HopfRef, j: i64) -> NCElement {
    let ring = h.alg.ring;
    let order = ring.order().expect("series ring");
    let (kn, kd) = match ring {
        ScalarRing::TAdic { kappa_num, kappa_den, .. } => (kappa_num, kappa_den),
        _ => panic!(),
    };
    let hh = letter(h, "H~");
    let mut out = NCElement::zero();
    let mut num = 1i64;
    let mut den = 1i64;
    let mut fact = 1i64;
    for k in 0..=order {
        if k > 0 {
            num *= j * kn;
            den *= 2 * kd;
            fact *= k as i64;
        }
        let mut s = crate::coeffs::TruncSeries::zero(crate::coeffs::SeriesVar::T, order);
        s.coeffs[k] = crate::coeffs::RationalFunction::from_frac(num, den * fact);
        out.add_term(Word::letter_pow(hh, k as u32), Scalar::Ser(s)).unwrap();
    }
    out
}

/// exp(sign/denom * kappa * t * A (x) B) where A, B are single H-type letters:
/// the q^(c H (x) H') factors.
fn exp_hh(h: &HopfRef, n1: &str, n2: &str, c: (i64, i64)) -> Result<TensorElement, AlgError> {
    let ring = h.alg.ring;
    let (kn, kd) = match ring {
        ScalarRing::TAdic { kappa_num, kappa_den, .. } => (kappa_num, kappa_den),
        _ => panic!(),
    };
    let legs = vec![h.clone(), h.clone()];
    // q^(c H H') = e^(kappa c t H H')
    let a = nc(h, n1);
    let b = nc(h, n2);
    let ta = TensorElement::embed(&a, legs.clone(), 0)?;
    let tb = TensorElement::embed(&b, legs.clone(), 1)?;
    let mut tcoef = crate::coeffs::TruncSeries::zero(crate::coeffs::SeriesVar::T, ring.order().unwrap());
    if ring.order().unwrap() >= 1 {
        tcoef.coeffs[1] = crate::coeffs::RationalFunction::from_frac(2 * kn * c.0, kd * c.1);
    }
    constructions::tensor_exp(&ta.mul(&tb)?.scale(&Scalar::Ser(tcoef))?)
}

/// The limiting twist chi_B0 as exponential factors (A_i, B_i) over the exact
/// classical bicrossproduct: chi_B0 = e^(-X_+ (x) alpha^-1 beta)
/// e^(-H/2 (x) log alpha), with log alpha acting as the primitive derivation
/// dual to the group-like letter. The exact model represents that leg as an
/// operator rather than an algebra element.
pub fn chi_b0_factors(m: &Models) -> Vec<(NCElement, constructions::TwistLeg)> {
    let b0 = &m.bicross_0;
    let u_star = &m.u_su2_star;
    let ring = b0.alg.ring;
    let ai = letter(b0, "alpha^-1");
    let be = letter(b0, "beta");
    let a1 = nc(b0, "X_+").neg();
    let b1 = constructions::TwistLeg::Elem(NCElement::from_term(
        Word::concat(&[&[(ai, 1), (be, 1)]]),
        ring.one(),
    ));
    let a2 = nc(b0, "H").scale(&ring.from_frac(-1, 2)).unwrap();
    // log(alpha) acts as a derivation: z -> -1, x_pm -> 0
    let mut table = BTreeMap::new();
    table.insert(
        u_star.alg.letter_by_name("z").unwrap(),
        NCElement::from_term(Word::one(), ring.from_int(-1)),
    );
    let b2 = constructions::TwistLeg::Derivation(table);
    vec![(a1, b1), (a2, b2)]
}

/// chi_B0^-1 = e^(H/2 (x) log alpha) e^(X_+ (x) alpha^-1 beta).
pub fn chi_b0_inv_factors(m: &Models) -> Vec<(NCElement, constructions::TwistLeg)> {
    chi_b0_factors(m)
        .into_iter()
        .rev()
        .map(|(a, b)| (a.neg(), b))
        .collect()
}

/// The lambda-adic chi_B0 with alpha = e^(lambda p0), beta = lambda P+. The
/// group-like factor enters through the primitive logarithm lambda p0 of
/// alpha: only that reading satisfies the 2-cocycle identity (the naive
/// alpha - 1 leg leaves a lambda^2 H (x) p0 (x) p0 residual).
pub fn chi_b0_lambda(m: &Models) -> Result<Cocycle, AlgError> {
    let b = &m.bicross_0_l;
    let ring = b.alg.ring;
    let legs = vec![b.clone(), b.clone()];
    let order = ring.order().unwrap();
    // alpha^-1 beta = lambda P+ e^(-lambda p0)
    let a1b = lambda_pexp(b, "P+", -1, order)?;
    let f1 = exp_simple(&legs, &nc(b, "X_+").neg(), &a1b, ring.one())?;
    let lp0 = lambda_p0(b, order)?;
    let f2 = exp_simple(&legs, &nc(b, "H").scale(&ring.from_frac(-1, 2))?, &lp0, ring.one())?;
    let chi = f1.mul(&f2)?;
    let f2i = exp_simple(&legs, &nc(b, "H").scale(&ring.from_frac(1, 2))?, &lp0, ring.one())?;
    let f1i = exp_simple(&legs, &nc(b, "X_+"), &a1b, ring.one())?;
    Ok(Cocycle { chi, chi_inv: f2i.mul(&f1i)? })
}

/// lambda * p0 as a series element.
fn lambda_p0(b: &HopfRef, order: usize) -> Result<NCElement, AlgError> {
    let p0 = letter(b, "p0");
    let mut s = crate::coeffs::TruncSeries::zero(crate::coeffs::SeriesVar::Lambda, order);
    if order >= 1 {
        s.coeffs[1] = crate::coeffs::RationalFunction::from_int(1);
    }
    Ok(NCElement::from_term(Word::letter(p0), Scalar::Ser(s)))
}

/// e^(sign lambda p0) as an element of the lambda-adic bicrossproduct.
fn exp_p0_elem(b: &HopfRef, sign: i64, order: usize) -> Result<NCElement, AlgError> {
    let p0 = letter(b, "p0");
    let mut out = NCElement::zero();
    let mut num = 1i64;
    let mut fact = 1i64;
    for k in 0..=order {
        if k > 0 {
            num *= sign;
            fact *= k as i64;
        }
        let mut s = crate::coeffs::TruncSeries::zero(crate::coeffs::SeriesVar::Lambda, order);
        s.coeffs[k] = crate::coeffs::RationalFunction::from_frac(num, fact);
        out.add_term(Word::letter_pow(p0, k as u32), Scalar::Ser(s))?;
    }
    Ok(out)
}

/// lambda * P{pm} * e^(sign lambda p0).
fn lambda_pexp(b: &HopfRef, p: &str, sign: i64, order: usize) -> Result<NCElement, AlgError> {
    let e = exp_p0_elem(b, sign, order)?;
    let mut lam = crate::coeffs::TruncSeries::zero(crate::coeffs::SeriesVar::Lambda, order);
    if order >= 1 {
        lam.coeffs[1] = crate::coeffs::RationalFunction::from_int(1);
    }
    b.alg.mul(&nc(b, p), &e)?.scale(&Scalar::Ser(lam))
}

/// R_BD on the t-adic mirror: assembled as a four-leg product over the
/// enveloping algebra, the inverse antipode applied to the second slot, then
/// the pairs (1,2) and (3,4) multiplied down into the mirror.
pub fn r_bd(m: &Models) -> Result<TensorElement, AlgError> {
    let uq = &m.uq_su2_t;
    let ring = uq.alg.ring;
    let mu = ring.mu();
    let legs4: Vec<HopfRef> = vec![uq.clone(), uq.clone(), uq.clone(), uq.clone()];
    let kxp = uq.alg.mul(&k_series(uq, 1), &nc(uq, "X_+"))?;
    let kinv_xm = uq.alg.mul(&k_series(uq, -1), &nc(uq, "X_-"))?;
    let qh = k_series(uq, 2);
    let h = nc(uq, "H");

    let emb = |x: &NCElement, i: usize| TensorElement::embed(x, legs4.clone(), i);
    // q^(1/2 * 1 (x) H (x) H (x) 1)
    let f1 = constructions::tensor_exp(&emb(&h, 1)?.mul(&emb(&h, 2)?)?.scale(&t_half(ring, 1)?)?)?;
    let f2 = constructions::tensor_q_exp(
        &emb(&kxp, 0)?.mul(&emb(&qh, 1)?)?.mul(&emb(&kinv_xm, 2)?)?.scale(&mu.neg())?,
        1,
    )?;
    let f3 = constructions::tensor_q_exp(
        &emb(&qh, 0)?.mul(&emb(&kxp, 1)?)?.mul(&emb(&kinv_xm, 2)?)?.scale(&mu)?,
        -1,
    )?;
    let f4 = constructions::tensor_q_exp(&emb(&kxp, 0)?.mul(&emb(&kinv_xm, 2)?)?.scale(&mu)?, -1)?;
    let f5 = constructions::tensor_q_exp(&emb(&kxp, 0)?.mul(&emb(&kinv_xm, 3)?)?.scale(&mu.neg())?, 1)?;
    let f6 = constructions::tensor_q_exp(
        &emb(&qh, 0)?.mul(&emb(&kxp, 1)?)?.mul(&emb(&kinv_xm, 3)?)?.scale(&mu.neg())?,
        1,
    )?;
    let f7a = constructions::tensor_exp(&emb(&h, 0)?.mul(&emb(&h, 3)?)?.scale(&t_half(ring, -1)?)?)?;
    let f7b = constructions::tensor_exp(&emb(&h, 1)?.mul(&emb(&h, 3)?)?.scale(&t_half(ring, -1)?)?)?;

    let prod = f1.mul(&f2)?.mul(&f3)?.mul(&f4)?.mul(&f5)?.mul(&f6)?.mul(&f7a)?.mul(&f7b)?;
    let with_s = prod.apply_antipode_at(1, true)?;
    fold_into_mirror(m, &with_s)
}

/// R_BL on the t-adic mirror.
pub fn r_bl(m: &Models) -> Result<TensorElement, AlgError> {
    let uq = &m.uq_su2_t;
    let ring = uq.alg.ring;
    let mu = ring.mu();
    let legs4: Vec<HopfRef> = vec![uq.clone(), uq.clone(), uq.clone(), uq.clone()];
    let kxp = uq.alg.mul(&k_series(uq, 1), &nc(uq, "X_+"))?;
    let kinv_xm = uq.alg.mul(&k_series(uq, -1), &nc(uq, "X_-"))?;
    let h = nc(uq, "H");
    let emb = |x: &NCElement, i: usize| TensorElement::embed(x, legs4.clone(), i);

    let f1 = constructions::tensor_exp(&emb(&h, 0)?.mul(&emb(&h, 2)?)?.scale(&t_half(ring, 1)?)?)?;
    let f2 = constructions::tensor_q_exp(&emb(&kinv_xm, 0)?.mul(&emb(&kxp, 2)?)?.scale(&mu)?, -1)?;
    let f3 = constructions::tensor_exp(&emb(&h, 1)?.mul(&emb(&h, 2)?)?.scale(&t_half(ring, 1)?)?)?;
    let f4 = constructions::tensor_q_exp(&emb(&kxp, 1)?.mul(&emb(&kinv_xm, 2)?)?.scale(&mu)?, -1)?;
    let f5 = constructions::tensor_exp(&emb(&h, 0)?.mul(&emb(&h, 2)?)?.scale(&t_half(ring, 1)?)?)?;
    let f6 = constructions::tensor_q_exp(&emb(&kxp, 0)?.mul(&emb(&kinv_xm, 2)?)?.scale(&mu)?, -1)?;
    let f7 = constructions::tensor_q_exp(&emb(&kxp, 0)?.mul(&emb(&kinv_xm, 3)?)?.scale(&mu.neg())?, 1)?;
    let f8 = constructions::tensor_exp(&emb(&h, 0)?.mul(&emb(&h, 3)?)?.scale(&t_half(ring, -1)?)?)?;
    let f9 = constructions::tensor_q_exp(&emb(&kxp, 1)?.mul(&emb(&kinv_xm, 3)?)?.scale(&mu.neg())?, 1)?;
    let f10 = constructions::tensor_exp(&emb(&h, 1)?.mul(&emb(&h, 3)?)?.scale(&t_half(ring, -1)?)?)?;

    let prod = f1
        .mul(&f2)?
        .mul(&f3)?
        .mul(&f4)?
        .mul(&f5)?
        .mul(&f6)?
        .mul(&f7)?
        .mul(&f8)?
        .mul(&f9)?
        .mul(&f10)?;
    let with_s = prod.apply_antipode_at(1, true)?;
    fold_into_mirror(m, &with_s)
}

/// scalar kappa * t * sign / 2 (exponent of q^(sign H H'/2)).
fn t_half(ring: ScalarRing, sign: i64) -> Result<Scalar, AlgError> {
    let (kn, kd, order) = match ring {
        ScalarRing::TAdic { kappa_num, kappa_den, order } => (kappa_num, kappa_den, order),
        _ => panic!(),
    };
    let mut s = crate::coeffs::TruncSeries::zero(crate::coeffs::SeriesVar::T, order);
    if order >= 1 {
        s.coeffs[1] = crate::coeffs::RationalFunction::from_frac(sign * kn, 2 * kd);
    }
    Ok(Scalar::Ser(s))
}

/// Interpret a four-leg tensor over the enveloping algebra as an element of
/// mirror (x) mirror: legs (1,2) -> tilde(w1) w2, legs (3,4) -> tilde(w3) w4.
fn fold_into_mirror(m: &Models, x: &TensorElement) -> Result<TensorElement, AlgError> {
    let mt = &m.mirror_t;
    let uq = &m.uq_su2_t;
    let view = MirrorView::new(mt, uq, "~");
    let legs = vec![mt.clone(), mt.clone()];
    let mut out = TensorElement::zero(legs);
    for (ws, c) in &x.terms {
        let w_left = map_word_ref(&ws[0], &view.t_map).mul(&map_word_ref(&ws[1], &view.u_map));
        let w_right = map_word_ref(&ws[2], &view.t_map).mul(&map_word_ref(&ws[3], &view.u_map));
        out.add_term(vec![w_left, w_right], c.clone())?;
    }
    out.normalize()
}

fn map_word_ref(w: &Word, f: &BTreeMap<LetterId, LetterId>) -> Word {
    Word(w.0.iter().map(|(l, e)| (f[l], *e)).collect())
}

/// R_B0 on the lambda-adic bicrossproduct, constructed from the canonical
/// quasitriangular structure of the classical-limit double transported
/// through theta and untwisted by chi_B0. The double's canonical element is
/// the ordered exponential over second-kind coordinates, whose theta-images
/// are exact lambda-series: theta(b/d) = -lambda P+ e^(-lambda p0),
/// theta(c d) = -lambda P- e^(lambda p0), theta(-ln d) = -lambda p0.
pub fn r_b0(m: &Models) -> Result<TensorElement, AlgError> {
    let b = &m.bicross_0_l;
    let ring = b.alg.ring;
    let order = ring.order().unwrap();
    let legs = vec![b.clone(), b.clone()];
    let bhat = lambda_pexp(b, "P+", -1, order)?.neg();
    let chat = lambda_pexp(b, "P-", 1, order)?.neg();
    let what = lambda_p0(b, order)?.neg();
    let f1 = exp_simple(&legs, &bhat, &nc(b, "X_+"), ring.one())?;
    let f2 = exp_simple(&legs, &chat, &nc(b, "X_-"), ring.one())?;
    let f3 = exp_simple(&legs, &what, &nc(b, "H"), ring.one())?;
    let theta_r = f1.mul(&f2)?.mul(&f3)?;
    // untwist: R_B0 = (chi_21)^-1 (theta (x) theta)(R_D) chi
    let chi = chi_b0_lambda(m)?;
    let chi21_inv = chi.chi_inv.permute_legs(&[1, 0])?;
    chi21_inv.mul(&theta_r)?.mul(&chi.chi)
}

/// The transported canonical double R-matrix itself (before untwisting).
pub fn theta_r_double_0(m: &Models) -> Result<TensorElement, AlgError> {
    let b = &m.bicross_0_l;
    let ring = b.alg.ring;
    let order = ring.order().unwrap();
    let legs = vec![b.clone(), b.clone()];
    let bhat = lambda_pexp(b, "P+", -1, order)?.neg();
    let chat = lambda_pexp(b, "P-", 1, order)?.neg();
    let what = lambda_p0(b, order)?.neg();
    let f1 = exp_simple(&legs, &bhat, &nc(b, "X_+"), ring.one())?;
    let f2 = exp_simple(&legs, &chat, &nc(b, "X_-"), ring.one())?;
    let f3 = exp_simple(&legs, &what, &nc(b, "H"), ring.one())?;
    f1.mul(&f2)?.mul(&f3)
}

/// theta on the quantum double: the identity on the enveloping letters and
/// the L-matrix combination on the function-algebra letters.
pub fn theta_q_images(m: &Models) -> Result<BTreeMap<LetterId, NCElement>, AlgError> {
    let uq = &m.uq_su2;
    let d = &m.double_q;
    let bq = &m.bicross_q;
    let star_plain = &m.cq_su2_star;
    let ki = KillingInverse::new(star_plain, uq);
    let lm = l_matrices(uq);
    // M = L- S(L+) computed in the enveloping algebra
    let mut mmat = vec![vec![NCElement::zero(), NCElement::zero()], vec![NCElement::zero(), NCElement::zero()]];
    for i in 0..2 {
        for k in 0..2 {
            let mut acc = NCElement::zero();
            for mm in 0..2 {
                let s = uq.antipode(&lm.lplus[mm][k])?;
                acc = acc.add(&uq.alg.mul(&lm.lminus[i][mm], &s)?)?;
            }
            mmat[i][k] = uq.alg.normal_form(&acc)?;
        }
    }
    // theta(t^i_j) = sum_k iota^-1(M^i_k) . L+^k_j in the bicrossproduct
    let mut images = BTreeMap::new();
    let names = [["a", "b"], ["c", "d"]];
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = NCElement::zero();
            for k in 0..2 {
                if mmat[i][k].is_zero() || lm.lplus[k][j].is_zero() {
                    continue;
                }
                let first = ki.inverse(&mmat[i][k])?;
                // move into bicross letters
                let first_b = rename_into(&first, star_plain, bq)?;
                let second_b = rename_into(&lm.lplus[k][j], uq, bq)?;
                acc = acc.add(&bq.alg.mul(&first_b, &second_b)?)?;
            }
            images.insert(letter(d, names[i][j]), bq.alg.normal_form(&acc)?);
        }
    }
    for n in ["K", "K^-1", "X_+", "X_-"] {
        images.insert(letter(d, n), nc(bq, n));
    }
    Ok(images)
}

/// Move an element to another presentation by matching letter names.
pub fn rename_into(x: &NCElement, src: &HopfRef, dst: &HopfRef) -> Result<NCElement, AlgError> {
    let mut map = BTreeMap::new();
    for l in src.alg.letter_ids() {
        let name = src.alg.letter_name(l);
        let tgt = dst
            .alg
            .letter_by_name(name)
            .ok_or_else(|| AlgError::UnknownLetter(name.to_string()))?;
        map.insert(l, tgt);
    }
    Ok(map_elem(x, &map))
}

/// theta in the classical limit: a -> delta, b -> -beta, c -> -gamma,
/// d -> alpha, identity on the enveloping letters.
pub fn theta_0_images(m: &Models) -> Result<BTreeMap<LetterId, NCElement>, AlgError> {
    let d = &m.double_0;
    let b0 = &m.bicross_0;
    let ring = b0.alg.ring;
    let ai = letter(b0, "alpha^-1");
    let be = letter(b0, "beta");
    let ga = letter(b0, "gamma");
    let mut images = BTreeMap::new();
    // delta = alpha^-1 (1 + beta gamma)
    let mut delta = NCElement::from_term(Word::letter(ai), ring.one());
    delta.add_term(Word::concat(&[&[(ai, 1), (be, 1), (ga, 1)]]), ring.one())?;
    images.insert(letter(d, "a"), delta);
    images.insert(letter(d, "b"), nc(b0, "beta").neg());
    images.insert(letter(d, "c"), nc(b0, "gamma").neg());
    images.insert(letter(d, "d"), nc(b0, "alpha"));
    for n in ["H", "X_+", "X_-"] {
        images.insert(letter(d, n), nc(b0, n));
    }
    Ok(images)
}

/// Check that a generator map sends every source relation to zero in the
/// target.
pub fn verify_hom(
    src: &HopfRef,
    dst: &HopfRef,
    images: &BTreeMap<LetterId, NCElement>,
    label: &str,
) -> Result<Vec<Check>, AlgError> {
    let mut checks = Vec::new();
    for ((l1, l2), rhs) in src.alg.rules() {
        let lhs = NCElement::from_term(Word::letter(*l1).mul(&Word::letter(*l2)), src.alg.ring.one());
        let img_l = algebra_map(src, dst, images, &lhs)?;
        let img_r = algebra_map(src, dst, images, rhs)?;
        let res = img_l.sub(&img_r)?;
        checks.push(Check::from_residual(
            &format!(
                "image of rule {}{}",
                src.alg.letter_name(*l1),
                src.alg.letter_name(*l2)
            ),
            label,
            dst.alg.render(&img_l),
            dst.alg.render(&img_r),
            if res.is_zero() { "0".into() } else { dst.alg.render(&res) },
        ));
    }
    Ok(checks)
}

/// Letter-image tables for the inner automorphism Ad(q^(-H (x) H~ / 2)) of
/// the bicross tensor square, with H~ read through alpha = q^(H~). Weight
/// letters dress with group-like powers; the ladder letters close with a
/// finite q-number correction.
pub struct HhConjugation {
    pub legs: Vec<HopfRef>,
    img1: BTreeMap<LetterId, TensorElement>,
    img2: BTreeMap<LetterId, TensorElement>,
}

impl HhConjugation {
    /// `sign` = -1 gives Ad(q^(-H (x) H~/2)), +1 the inverse.
    pub fn new(m: &Models, sign: i64) -> Result<Self, AlgError> {
        let bq = &m.bicross_q;
        let ring = bq.alg.ring;
        let legs = vec![bq.clone(), bq.clone()];
        let simple = |n: &str, i: usize| -> Result<TensorElement, AlgError> {
            TensorElement::embed(&nc(bq, n), legs.clone(), i)
        };
        let dressed = |n: &str, i: usize, dress: &str, power: i64| -> Result<TensorElement, AlgError> {
            let base = nc(bq, n);
            let dress_el = NCElement::from_term(
                bq.alg.letter_ipow(letter(bq, dress), power)?,
                ring.one(),
            );
            let (e1, e2) = if i == 0 { (base, dress_el) } else { (dress_el, base) };
            TensorElement::embed(&e1, legs.clone(), 0)?.mul(&TensorElement::embed(&e2, legs.clone(), 1)?)
        };
        // leg 1: u (x) alpha^(sign * w_u / 2), with w the H-adjoint weight
        let mut img1 = BTreeMap::new();
        for (n, w) in [
            ("alpha", 0i64),
            ("alpha^-1", 0),
            ("beta", -2),
            ("gamma", 2),
            ("K", 0),
            ("K^-1", 0),
            ("X_+", 2),
            ("X_-", -2),
        ] {
            let l = letter(bq, n);
            let img = if w == 0 {
                simple(n, 0)?
            } else {
                dressed(n, 0, "alpha", sign * w / 2)?
            };
            img1.insert(l, img);
        }
        // leg 2: K^(sign * w~_v) (x) v for the weight letters, where w~ is the
        // adjoint alpha-weight (K carries half a power of q^H, hence the full
        // weight in the exponent)
        let mut img2 = BTreeMap::new();
        for (n, w) in [("alpha", 0i64), ("alpha^-1", 0), ("beta", -2), ("gamma", 2), ("K", 0), ("K^-1", 0)] {
            let l = letter(bq, n);
            let img = if w == 0 {
                simple(n, 1)?
            } else {
                dressed(n, 1, "K", sign * w)?
            };
            img2.insert(l, img);
        }
        // leg-2 ladder letters: conj(1 (x) X_+) = 1 (x) X_+
        //   + q^(7/2)/(q^2-1) (K^(-2 sign) - 1) (x) alpha^-1 gamma K, and the
        // mirrored form for X_-.
        {
            let xp = letter(bq, "X_+");
            let base = simple("X_+", 1)?;
            let coeff = ring
                .q_half_pow(7)
                .div(&ring.q_pow(1).sub(&ring.one())?.mul(&ring.q_pow(1).add(&ring.one())?)?)?;
            // K^(2 sign) - 1 in leg 1
            let mut kpow = NCElement::from_term(
                bq.alg.letter_ipow(letter(bq, "K"), 2 * sign)?,
                ring.one(),
            );
            kpow.add_term(Word::one(), ring.from_int(-1))?;
            let ai = letter(bq, "alpha^-1");
            let ga = letter(bq, "gamma");
            let kk = letter(bq, "K");
            let corr2 = NCElement::from_term(
                Word::concat(&[&[(ai, 1), (ga, 1), (kk, 1)]]),
                ring.one(),
            );
            let corr = TensorElement::embed(&kpow.scale(&coeff)?, legs.clone(), 0)?
                .mul(&TensorElement::embed(&corr2, legs.clone(), 1)?)?;
            img2.insert(xp, base.add(&corr)?);
        }
        {
            let xm = letter(bq, "X_-");
            let base = simple("X_-", 1)?;
            // - q^(-3/2)/(q^-2 - 1) (K^(-2 sign) - 1) (x) alpha^-1 beta K
            let denom = ring.q_pow(-2).sub(&ring.one())?;
            let coeff = ring.q_half_pow(-3).div(&denom)?.neg();
            let mut kpow = NCElement::from_term(
                bq.alg.letter_ipow(letter(bq, "K"), -2 * sign)?,
                ring.one(),
            );
            kpow.add_term(Word::one(), ring.from_int(-1))?;
            let ai = letter(bq, "alpha^-1");
            let be = letter(bq, "beta");
            let kk = letter(bq, "K");
            let corr2 = NCElement::from_term(
                Word::concat(&[&[(ai, 1), (be, 1), (kk, 1)]]),
                ring.one(),
            );
            let corr = TensorElement::embed(&kpow.scale(&coeff)?, legs.clone(), 0)?
                .mul(&TensorElement::embed(&corr2, legs.clone(), 1)?)?;
            img2.insert(xm, base.add(&corr)?);
        }
        Ok(HhConjugation { legs, img1, img2 })
    }

    pub fn apply(&self, x: &TensorElement) -> Result<TensorElement, AlgError> {
        let mut out = TensorElement::zero(self.legs.clone());
        for (ws, c) in &x.terms {
            let mut acc = TensorElement::unit(self.legs.clone());
            for (l, e) in &ws[0].0 {
                for _ in 0..*e {
                    acc = acc.mul(&self.img1[l])?;
                }
            }
            for (l, e) in &ws[1].0 {
                for _ in 0..*e {
                    acc = acc.mul(&self.img2[l])?;
                }
            }
            out = out.add(&acc.scale(c)?)?;
        }
        Ok(out)
    }
}

/// The exact twisted-coproduct check: chi_B (Delta_M theta(x)) chi_B^-1
/// compared with (theta (x) theta) Delta_D(x). For the group-like generator
/// the q-exponential conjugation chain closes and the identity is verified in
/// closed form; for the remaining generators the conjugation has no finite
/// closed form (the chains are geometric), and the identity is verified
/// word by word through E Y = Theta E, exact on every component up to the
/// stated ladder degree: a word whose first-leg ladder degree is at most D
/// receives contributions only from the first D + 4 exponential orders, so
/// each compared coefficient is complete.
pub fn twisted_coproduct_check(m: &Models, gen: &str) -> Result<Check, AlgError> {
    let bq = &m.bicross_q;
    let dq = &m.double_q;
    let ring = bq.alg.ring;
    let theta = theta_q_images(m)?;
    let legs = vec![bq.clone(), bq.clone()];
    // A = -q^(-1/2) K X_+ (x) alpha^-1 beta
    let k = letter(bq, "K");
    let xp = letter(bq, "X_+");
    let ai = letter(bq, "alpha^-1");
    let be = letter(bq, "beta");
    let a_left = NCElement::from_term(Word::concat(&[&[(k, 1), (xp, 1)]]), ring.q_half_pow(-1).neg());
    let a_right = NCElement::from_term(Word::concat(&[&[(ai, 1), (be, 1)]]), ring.one());
    let a = TensorElement::embed(&a_left, legs.clone(), 0)?
        .mul(&TensorElement::embed(&a_right, legs.clone(), 1)?)?;

    let g = letter(dq, gen);
    let theta_x = &theta[&g];
    let d_theta = bq.coproduct(theta_x)?;
    let conj = HhConjugation::new(m, -1)?;
    let dressed = conj.apply(&d_theta)?;
    // rhs: (theta (x) theta) Delta_D(x)
    let d_x = dq.coproduct(&NCElement::from_letter(g, &ring))?;
    let mut rhs = TensorElement::zero(legs.clone());
    for (ws, c) in &d_x.terms {
        let img0 = algebra_map(dq, bq, &theta, &NCElement::from_term(ws[0].clone(), ring.one()))?;
        let img1 = algebra_map(dq, bq, &theta, &NCElement::from_term(ws[1].clone(), ring.one()))?;
        let t = TensorElement::embed(&img0, legs.clone(), 0)?
            .mul(&TensorElement::embed(&img1, legs.clone(), 1)?)?;
        rhs = rhs.add(&t.scale(c)?)?;
    }
    let (ok, how) = if gen == "d" {
        let lhs = constructions::q_exp_conjugate(&a, &dressed, 1)?;
        (lhs.sub(&rhs)?.is_zero(), "closed form")
    } else {
        (verify_conj_bounded(&a, &dressed, &rhs, 1, 6)?, "all components to ladder degree 6")
    };
    Ok(Check::from_residual(
        &format!("twisted coproduct agrees on {} ({})", gen, how),
        "qtwist",
        "chi Delta_M(theta x) chi^-1".into(),
        "(theta (x) theta) Delta_D(x)".into(),
        if ok { "0".into() } else { "nonzero".into() },
    ))
}

/// First-leg ladder degree (weighted letter degree).
fn ladder1(legs: &[HopfRef], ws: &[Word]) -> u64 {
    ws[0]
        .0
        .iter()
        .map(|(l, e)| legs[0].alg.letter_info(*l).weight * *e as u64)
        .sum()
}

/// Verify E Y = Theta E on every tensor word of first-leg ladder degree at
/// most `bound`. A carries first-leg ladder degree >= 1 per power and Y,
/// Theta at most 2, so orders beyond bound + 4 cannot touch the compared
/// components.
pub fn verify_conj_bounded(
    a: &TensorElement,
    y: &TensorElement,
    theta: &TensorElement,
    sign: i64,
    bound: u64,
) -> Result<bool, AlgError> {
    let ring = a.legs[0].alg.ring;
    let mmax = (bound + 4) as usize;
    let mut lhs = TensorElement::zero(a.legs.clone());
    let mut rhs = TensorElement::zero(a.legs.clone());
    let mut apow = TensorElement::unit(a.legs.clone());
    let mut fact = ring.one();
    for mm in 0..=mmax {
        if mm > 0 {
            apow = apow.mul(a)?;
            let qm = ring
                .one()
                .sub(&ring.q_pow(2 * sign * mm as i64))?
                .div(&ring.one().sub(&ring.q_pow(2 * sign))?)?;
            fact = fact.mul(&qm)?;
        }
        let inv = ring.one().div(&fact)?;
        let scaled = apow.scale(&inv)?;
        lhs = lhs.add(&scaled.mul(y)?)?;
        rhs = rhs.add(&theta.mul(&scaled)?)?;
    }
    let diff = lhs.sub(&rhs)?;
    for (ws, c) in &diff.terms {
        if ladder1(&a.legs, ws) <= bound && !c.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Native t-adic theta images on the series mirror: the L-matrix combination
/// with q^(H/2) expanded, the dual factor landing in the tilde copy.
pub fn theta_t_images(m: &Models) -> Result<BTreeMap<LetterId, NCElement>, AlgError> {
    let mt = &m.mirror_t;
    let dq = &m.double_q;
    let ring = mt.alg.ring;
    let mu = ring.mu();
    let nc_mt = |n: &str| nc(mt, n);
    // L+ = [[K, 0], [q^(1/2) mu X_+, K^-1]], L- = [[K^-1, -q^(3/2) mu X_-], [0, K]]
    let lplus = [
        [k_series(mt, 1), NCElement::zero()],
        [nc_mt("X_+").scale(&ring.q_half_pow(1).mul(&mu)?)?, k_series(mt, -1)],
    ];
    let lminus = [
        [k_series(mt, -1), nc_mt("X_-").scale(&ring.q_half_pow(3).mul(&mu)?.neg())?],
        [NCElement::zero(), k_series(mt, 1)],
    ];
    // S on the series enveloping copy: S(H) = -H, S(X_pm) = -q^(pm 1) X_pm
    let s_map = |x: &NCElement| -> Result<NCElement, AlgError> {
        let mut out = NCElement::zero();
        let h = letter(mt, "H");
        let xp = letter(mt, "X_+");
        let xm = letter(mt, "X_-");
        for (w, c) in &x.terms {
            let mut acc = NCElement::one(&ring);
            for (l, e) in w.0.iter().rev() {
                let img = if *l == h {
                    NCElement::from_term(Word::letter(h), ring.one().neg())
                } else if *l == xp {
                    NCElement::from_term(Word::letter(xp), ring.q_pow(1).neg())
                } else if *l == xm {
                    NCElement::from_term(Word::letter(xm), ring.q_pow(-1).neg())
                } else {
                    return Err(AlgError::UnknownLetter(mt.alg.letter_name(*l).into()));
                };
                acc = mt.alg.mul(&acc, &mt.alg.pow(&img, *e)?)?;
            }
            out = out.add(&acc.scale(c)?)?;
        }
        Ok(out)
    };
    // tilde a plain-letter element
    let tilde = |x: &NCElement| -> Result<NCElement, AlgError> {
        let mut out = NCElement::zero();
        for (w, c) in &x.terms {
            let tw = Word(
                w.0
                    .iter()
                    .map(|(l, e)| {
                        let n = format!("{}~", mt.alg.letter_name(*l));
                        (mt.alg.letter_by_name(&n).unwrap(), *e)
                    })
                    .collect(),
            );
            out.add_term(tw, c.clone())?;
        }
        Ok(out)
    };
    let mut mmat = vec![vec![NCElement::zero(), NCElement::zero()], vec![NCElement::zero(), NCElement::zero()]];
    for i in 0..2 {
        for kk in 0..2 {
            let mut acc = NCElement::zero();
            for mmi in 0..2 {
                if lplus[mmi][kk].is_zero() || lminus[i][mmi].is_zero() {
                    continue;
                }
                let s = s_map(&lplus[mmi][kk])?;
                acc = acc.add(&mt.alg.mul(&lminus[i][mmi], &s)?)?;
            }
            mmat[i][kk] = mt.alg.normal_form(&acc)?;
        }
    }
    let mut images = BTreeMap::new();
    let names = [["a", "b"], ["c", "d"]];
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = NCElement::zero();
            for kk in 0..2 {
                if mmat[i][kk].is_zero() || lplus[kk][j].is_zero() {
                    continue;
                }
                let first = tilde(&mmat[i][kk])?;
                acc = acc.add(&mt.alg.mul(&first, &lplus[kk][j])?)?;
            }
            images.insert(letter(dq, names[i][j]), mt.alg.normal_form(&acc)?);
        }
    }
    images.insert(letter(dq, "K"), k_series(mt, 1));
    images.insert(letter(dq, "K^-1"), k_series(mt, -1));
    images.insert(letter(dq, "X_+"), nc_mt("X_+"));
    images.insert(letter(dq, "X_-"), nc_mt("X_-"));
    Ok(images)
}

/// Series-mode twisted-coproduct check at the working t order.
pub fn twisted_coproduct_check_t(m: &Models, gen: &str) -> Result<Check, AlgError> {
    let mt = &m.mirror_t;
    let dq = &m.double_q;
    let ring = mt.alg.ring;
    let theta = theta_t_images(m)?;
    let legs = vec![mt.clone(), mt.clone()];
    let chi = chi_b_t(m)?;
    let g = letter(dq, gen);
    let d_theta = mt.coproduct(&theta[&g])?;
    let lhs = chi.chi.mul(&d_theta)?.mul(&chi.chi_inv)?;
    let d_x = dq.coproduct(&NCElement::from_letter(g, &dq.alg.ring))?;
    let mut rhs = TensorElement::zero(legs.clone());
    for (ws, c) in &d_x.terms {
        // Delta_D legs are words in the double letters with integer
        // coefficients; map each letter through theta
        let img = |w: &Word| -> Result<NCElement, AlgError> {
            let mut acc = NCElement::one(&ring);
            for (l, e) in &w.0 {
                acc = mt.alg.mul(&acc, &mt.alg.pow(&theta[l], *e)?)?;
            }
            Ok(acc)
        };
        let t = TensorElement::embed(&img(&ws[0])?, legs.clone(), 0)?
            .mul(&TensorElement::embed(&img(&ws[1])?, legs.clone(), 1)?)?;
        rhs = rhs.add(&t.scale(c)?)?;
    }
    let res = lhs.sub(&rhs)?;
    Ok(Check::from_residual(
        &format!("twisted coproduct agrees on {} (series mode)", gen),
        "qtwist",
        "chi Delta_M(theta x) chi^-1".into(),
        "(theta (x) theta) Delta_D(x)".into(),
        if res.is_zero() { "0".into() } else { res.render() },
    ))
}

/// Weighted ladder grade of a tensor term.
fn term_grade(legs: &[HopfRef], ws: &[Word]) -> u64 {
    ws.iter()
        .zip(legs)
        .map(|(w, leg)| {
            w.0.iter()
                .map(|(l, e)| leg.alg.letter_info(*l).weight * *e as u64)
                .sum::<u64>()
        })
        .sum()
}

fn grade_split(x: &TensorElement) -> std::collections::BTreeMap<u64, TensorElement> {
    let mut out: std::collections::BTreeMap<u64, TensorElement> = std::collections::BTreeMap::new();
    for (ws, c) in &x.terms {
        let g = term_grade(&x.legs, ws);
        out.entry(g)
            .or_insert_with(|| TensorElement::zero(x.legs.clone()))
            .add_term(ws.clone(), c.clone())
            .unwrap();
    }
    out
}

/// Verify e_{q^(2 sign)}^A . Y = Theta . e_{q^(2 sign)}^A grade by grade up to
/// margin grades beyond both operands (A carries grade 2; the identity is
/// equivalent to the conjugation identity and finite per grade).
pub fn verify_graded_conjugation(
    a: &TensorElement,
    y: &TensorElement,
    theta: &TensorElement,
    sign: i64,
    margin: u64,
) -> Result<bool, AlgError> {
    let ring = a.legs[0].alg.ring;
    let y_parts = grade_split(y);
    let t_parts = grade_split(theta);
    let gmax = y_parts.keys().max().copied().unwrap_or(0).max(t_parts.keys().max().copied().unwrap_or(0));
    let bound = gmax + 2 * margin;
    // powers A^k / [k; q^2]!
    let kmax = (bound / 2 + 1) as usize;
    let mut apows = vec![TensorElement::unit(a.legs.clone())];
    let mut fact = ring.one();
    for k in 1..=kmax {
        let next = apows[k - 1].mul(a)?;
        let qk = ring
            .one()
            .sub(&ring.q_pow(2 * sign * k as i64))?
            .div(&ring.one().sub(&ring.q_pow(2 * sign))?)?;
        fact = fact.mul(&qk)?;
        let _ = &fact;
        apows.push(next);
    }
    // recompute scaled powers a_k = A^k / [k]!
    let mut scaled = vec![TensorElement::unit(a.legs.clone())];
    let mut fact = ring.one();
    for k in 1..=kmax {
        let qk = ring
            .one()
            .sub(&ring.q_pow(2 * sign * k as i64))?
            .div(&ring.one().sub(&ring.q_pow(2 * sign))?)?;
        fact = fact.mul(&qk)?;
        let inv = ring.one().div(&fact)?;
        scaled.push(apows[k].scale(&inv)?);
    }
    for grade in 0..=bound {
        let mut lhs = TensorElement::zero(a.legs.clone());
        let mut rhs = TensorElement::zero(a.legs.clone());
        for k in 0..=(grade / 2) as usize {
            let rest = grade - 2 * k as u64;
            if let Some(yp) = y_parts.get(&rest) {
                lhs = lhs.add(&scaled[k].mul(yp)?)?;
            }
            if let Some(tp) = t_parts.get(&rest) {
                rhs = rhs.add(&tp.mul(&scaled[k])?)?;
            }
        }
        if !lhs.sub(&rhs)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
