//! Composite models: the quantum double, the mirror bicrossproduct in its
//! braided-matrix description, their classical limits, and the covariant
//! actions.

use super::rep::KillingInverse;
use crate::coeffs::ScalarRing;
use crate::constructions::{self, map_elem, map_word, MirrorView};
use crate::error::AlgError;
use crate::hopf::{ActionTable, Coalgebra, DeltaEntry, HopfPresentation, HopfRef, PairingTable, Side};
use crate::ncalg::{LetterId, NCElement, PresentationBuilder, Word};
use std::collections::BTreeMap;
use std::sync::Arc;

pub use crate::constructions::build_double;
pub use crate::constructions::double_action;

/// The mirror product of the t-adic enveloping algebra.
pub fn build_mirror_t(uq_t: &HopfRef) -> Result<HopfRef, AlgError> {
    constructions::build_mirror(uq_t, "~")
}

/// The mirror presentation at exact q (both factors on K, X letters); used
/// internally to derive the braided-matrix bicrossproduct.
pub fn build_mirror_exact(uq: &HopfRef) -> Result<HopfRef, AlgError> {
    constructions::build_mirror(uq, "~")
}

/// The bicrossproduct with dual factor in the alpha, beta, gamma letters.
/// Cross relations, coproduct, and antipode are derived mechanically from the
/// mirror product through the Killing identification of the first factor.
pub fn build_bicross_q(uq: &HopfRef, star_cop: &HopfRef) -> Result<HopfRef, AlgError> {
    let ring = uq.alg.ring;
    let mirror = build_mirror_exact(uq)?;
    let view = MirrorView::new(&mirror, uq, "~");
    let star_plain = super::base::cq_su2_star(false);
    let ki = KillingInverse::new(&star_plain, uq);

    let mut b = PresentationBuilder::new("bicross_q", ring);
    // deep q-exponential conjugation checks need far more rewrite steps
    // than ordinary normalization
    b.set_budget(200_000_000);
    let dual_map = constructions::import_letters(&mut b, &star_cop.alg, &|n| n.to_string());
    constructions::import_rules(&mut b, &star_cop.alg, &dual_map);
    let u_map = constructions::import_letters(&mut b, &uq.alg, &|n| n.to_string());
    constructions::import_rules(&mut b, &uq.alg, &u_map);

    // name-aligned map from the plain star presentation into the bicross
    let star_to_bicross: BTreeMap<LetterId, LetterId> = star_plain
        .alg
        .letter_ids()
        .map(|l| (l, dual_map[&star_cop.alg.letter_by_name(star_plain.alg.letter_name(l)).unwrap()]))
        .collect();

    // a mirror word splits as (tilde part, untilde part); convert the tilde
    // part through the inverse Killing identification
    let tilde_count = uq.alg.n_letters() as u32;
    let convert_mirror_elem = |x: &NCElement| -> Result<NCElement, AlgError> {
        let mut out = NCElement::zero();
        for (w, c) in &x.terms {
            let mut tilde_part: Vec<(LetterId, u32)> = Vec::new();
            let mut plain_part: Vec<(LetterId, u32)> = Vec::new();
            for (l, e) in &w.0 {
                if l.0 < tilde_count {
                    tilde_part.push((LetterId(l.0), *e));
                } else {
                    plain_part.push((LetterId(l.0 - tilde_count), *e));
                }
            }
            // tilde part mapped back to uq letters, then inverted
            let uq_elem = NCElement::from_term(Word(tilde_part), ring.one());
            let star_elem = ki.inverse(&uq_elem)?;
            for (sw, sc) in &star_elem.terms {
                let word = map_word(sw, &star_to_bicross)
                    .mul(&map_word(&Word(plain_part.clone()), &u_map));
                out.add_term(word, c.mul(sc)?.mul(&ring.one())?)?;
            }
        }
        Ok(out)
    };

    // cross rules g . phi: compute g * iota(phi)~ inside the mirror
    for g in uq.alg.letter_ids() {
        for phi in star_cop.alg.letter_ids() {
            let phi_plain = star_plain
                .alg
                .letter_by_name(star_cop.alg.letter_name(phi))
                .unwrap();
            let iota_phi = ki.forward(&NCElement::from_letter(phi_plain, &ring))?;
            let iota_phi_tilde = map_elem(&iota_phi, &view.t_map);
            let g_elem = NCElement::from_term(Word::letter(view.u_map[&g]), ring.one());
            let prod = mirror.alg.mul(&g_elem, &iota_phi_tilde)?;
            let rhs = convert_mirror_elem(&prod)?;
            b.rule(u_map[&g], dual_map[&phi], rhs);
        }
    }

    // coalgebra: dual letters keep the flipped matrix coproduct; the
    // enveloping letters get the mirror coproduct with converted legs
    let mut delta: BTreeMap<LetterId, DeltaEntry> = BTreeMap::new();
    let mut counit = BTreeMap::new();
    let sc = star_cop.coalg.as_ref().unwrap();
    for l in star_cop.alg.letter_ids() {
        let entry: DeltaEntry = sc.delta[&l]
            .iter()
            .map(|(w1, w2, c)| (map_word(w1, &dual_map), map_word(w2, &dual_map), c.clone()))
            .collect();
        delta.insert(dual_map[&l], entry);
        counit.insert(dual_map[&l], sc.counit[&l].clone());
    }
    for g in uq.alg.letter_ids() {
        let dm = mirror.delta_word(&Word::letter(view.u_map[&g]))?;
        let mut entry: BTreeMap<(Word, Word), crate::coeffs::Scalar> = BTreeMap::new();
        for (w1, w2, c) in dm {
            // each leg is a mirror word; convert both
            let e1 = convert_mirror_elem(&NCElement::from_term(w1, ring.one()))?;
            let e2 = convert_mirror_elem(&NCElement::from_term(w2, ring.one()))?;
            for (a, ca) in &e1.terms {
                for (bb, cb) in &e2.terms {
                    let coeff = c.mul(ca)?.mul(cb)?;
                    let key = (a.clone(), bb.clone());
                    match entry.get_mut(&key) {
                        Some(acc) => {
                            *acc = acc.add(&coeff)?;
                            if acc.is_zero() {
                                entry.remove(&key);
                            }
                        }
                        None => {
                            entry.insert(key, coeff);
                        }
                    }
                }
            }
        }
        delta.insert(u_map[&g], entry.into_iter().map(|((a, bb), c)| (a, bb, c)).collect());
        counit.insert(u_map[&g], uq.coalg.as_ref().unwrap().counit[&g].clone());
    }
    let alg = b.finish();
    let antipode = constructions::solve_antipode(&alg, &delta, &counit, BTreeMap::new())?;
    Ok(HopfPresentation::new(alg, Some(Coalgebra { delta, counit, antipode }), None))
}

/// The scaled classical-limit bicrossproduct, entered from its displayed
/// limit tables (the series modes cross-check the leading orders).
pub fn bicross_0() -> HopfRef {
    let ring = ScalarRing::Exact;
    let mut b = PresentationBuilder::new("bicross_0", ring);
    let ai = b.letter("alpha^-1");
    let al = b.letter("alpha");
    let be = b.letter("beta");
    let ga = b.letter("gamma");
    let h = b.letter("H");
    let xp = b.letter("X_+");
    let xm = b.letter("X_-");
    b.inverse_pair(al, ai);
    let one = ring.one();
    // commutative dual sector
    for (hi, lo) in [(be, al), (be, ai), (ga, al), (ga, ai), (ga, be)] {
        b.rule(hi, lo, NCElement::from_term(Word::concat(&[&[(lo, 1), (hi, 1)]]), one.clone()));
    }
    // [H, alpha] = 0, [H, beta] = -2 beta, [H, gamma] = 2 gamma
    for (lo, shift) in [(al, 0i64), (ai, 0), (be, -2), (ga, 2)] {
        let mut rhs = NCElement::from_term(Word::concat(&[&[(lo, 1), (h, 1)]]), one.clone());
        if shift != 0 {
            rhs.add_term(Word::letter(lo), ring.from_int(shift)).unwrap();
        }
        b.rule(h, lo, rhs);
    }
    // delta - alpha = alpha^-1 + alpha^-1 beta gamma - alpha
    let dma = |sign: i64| {
        let mut e = NCElement::from_term(Word::letter(ai), ring.from_int(sign));
        e.add_term(Word::concat(&[&[(ai, 1), (be, 1), (ga, 1)]]), ring.from_int(sign)).unwrap();
        e.add_term(Word::letter(al), ring.from_int(-sign)).unwrap();
        e
    };
    // X_+ alpha = alpha X_+ - gamma ; X_+ alpha^-1 = alpha^-1 X_+ + alpha^-2 gamma
    let mut rhs = NCElement::from_term(Word::concat(&[&[(al, 1), (xp, 1)]]), one.clone());
    rhs.add_term(Word::letter(ga), ring.from_int(-1)).unwrap();
    b.rule(xp, al, rhs);
    let mut rhs = NCElement::from_term(Word::concat(&[&[(ai, 1), (xp, 1)]]), one.clone());
    rhs.add_term(Word::concat(&[&[(ai, 2), (ga, 1)]]), one.clone()).unwrap();
    b.rule(xp, ai, rhs);
    // X_+ beta = beta X_+ - (delta - alpha)
    let mut rhs = NCElement::from_term(Word::concat(&[&[(be, 1), (xp, 1)]]), one.clone());
    rhs = rhs.add(&dma(-1)).unwrap();
    b.rule(xp, be, rhs);
    // X_+ gamma = gamma X_+
    b.rule(xp, ga, NCElement::from_term(Word::concat(&[&[(ga, 1), (xp, 1)]]), one.clone()));
    // X_- alpha = alpha X_- + beta ; X_- alpha^-1 = alpha^-1 X_- - alpha^-2 beta
    let mut rhs = NCElement::from_term(Word::concat(&[&[(al, 1), (xm, 1)]]), one.clone());
    rhs.add_term(Word::letter(be), one.clone()).unwrap();
    b.rule(xm, al, rhs);
    let mut rhs = NCElement::from_term(Word::concat(&[&[(ai, 1), (xm, 1)]]), one.clone());
    rhs.add_term(Word::concat(&[&[(ai, 2), (be, 1)]]), ring.from_int(-1)).unwrap();
    b.rule(xm, ai, rhs);
    // X_- beta = beta X_-
    b.rule(xm, be, NCElement::from_term(Word::concat(&[&[(be, 1), (xm, 1)]]), one.clone()));
    // X_- gamma = gamma X_- + (delta - alpha)
    let mut rhs = NCElement::from_term(Word::concat(&[&[(ga, 1), (xm, 1)]]), one.clone());
    rhs = rhs.add(&dma(1)).unwrap();
    b.rule(xm, ga, rhs);
    // su2 factor
    let mut rhs = NCElement::from_term(Word::concat(&[&[(h, 1), (xp, 1)]]), one.clone());
    rhs.add_term(Word::letter(xp), ring.from_int(-2)).unwrap();
    b.rule(xp, h, rhs);
    let mut rhs = NCElement::from_term(Word::concat(&[&[(h, 1), (xm, 1)]]), one.clone());
    rhs.add_term(Word::letter(xm), ring.from_int(2)).unwrap();
    b.rule(xm, h, rhs);
    let mut rhs = NCElement::from_term(Word::concat(&[&[(xp, 1), (xm, 1)]]), one.clone());
    rhs.add_term(Word::letter(h), ring.from_int(-1)).unwrap();
    b.rule(xm, xp, rhs);
    let alg = b.finish();

    let mut delta: BTreeMap<LetterId, DeltaEntry> = BTreeMap::new();
    let mut counit = BTreeMap::new();
    delta.insert(al, vec![(Word::letter(al), Word::letter(al), one.clone())]);
    delta.insert(ai, vec![(Word::letter(ai), Word::letter(ai), one.clone())]);
    for x in [be, ga] {
        delta.insert(
            x,
            vec![
                (Word::letter(x), Word::one(), one.clone()),
                (Word::letter(al), Word::letter(x), one.clone()),
            ],
        );
    }
    delta.insert(
        h,
        vec![
            (Word::letter(h), Word::one(), one.clone()),
            (Word::one(), Word::letter(h), one.clone()),
        ],
    );
    // Delta X_+ = 1 (x) X_+ + X_+ (x) alpha^-1 + H/2 (x) gamma alpha^-1
    delta.insert(
        xp,
        vec![
            (Word::one(), Word::letter(xp), one.clone()),
            (Word::letter(xp), Word::letter(ai), one.clone()),
            (Word::letter(h), Word::concat(&[&[(ai, 1), (ga, 1)]]), ring.from_frac(1, 2)),
        ],
    );
    delta.insert(
        xm,
        vec![
            (Word::one(), Word::letter(xm), one.clone()),
            (Word::letter(xm), Word::letter(ai), one.clone()),
            (Word::letter(h), Word::concat(&[&[(ai, 1), (be, 1)]]), ring.from_frac(1, 2)),
        ],
    );
    for (l, e) in [(al, 1), (ai, 1), (be, 0), (ga, 0), (h, 0), (xp, 0), (xm, 0)] {
        counit.insert(l, ring.from_int(e));
    }
    let antipode = constructions::solve_antipode(&alg, &delta, &counit, BTreeMap::new()).unwrap();
    HopfPresentation::new(alg, Some(Coalgebra { delta, counit, antipode }), None)
}

/// The canonical right action of the bicrossproduct on the opposite function
/// algebra: a <| phi = <iota(phi), a1> a2 and a <| g = <g1, a1> a2 <S g2, a3>.
/// It is a module algebra for the opposite product; the left covariant action
/// on the straight product is its flip through the inverse antipode.
pub fn bicross_right_action_q(bicross: &HopfRef, cq: &HopfRef) -> Result<Arc<ActionTable>, AlgError> {
    let uq = super::base::uq_su2();
    let pairing = super::base::pairing_q(&uq, cq);
    let star_plain = super::base::cq_su2_star(false);
    let ki = KillingInverse::new(&star_plain, &uq);
    let ring = uq.alg.ring;
    let mut entries = BTreeMap::new();
    for bl in bicross.alg.letter_ids() {
        let name = bicross.alg.letter_name(bl).to_string();
        for tl in cq.alg.letter_ids() {
            let img = if let Some(g) = uq.alg.letter_by_name(&name) {
                let mut acc = NCElement::zero();
                let mut trip = Vec::new();
                for (x1, x2, cc) in cq.delta_word(&Word::letter(tl))? {
                    for (x2a, x3, cc2) in cq.delta_word(&x2)? {
                        trip.push((x1.clone(), x2a, x3, cc.mul(&cc2)?));
                    }
                }
                for (h1, h2, ch) in uq.delta_word(&Word::letter(g))? {
                    let sh2 = uq.antipode(&NCElement::from_term(h2, ring.one()))?;
                    for (x1, x2, x3, cx) in &trip {
                        let p1 = pairing.pair_words(&h1, x1)?;
                        if p1.is_zero() {
                            continue;
                        }
                        let p2 = pairing.pair(&sh2, &NCElement::from_term(x3.clone(), ring.one()))?;
                        if p2.is_zero() {
                            continue;
                        }
                        acc.add_term(x2.clone(), p1.mul(&p2)?.mul(&ch)?.mul(cx)?)?;
                    }
                }
                acc
            } else {
                let phi_plain = star_plain.alg.letter_by_name(&name).unwrap();
                let iota = ki.forward(&NCElement::from_letter(phi_plain, &ring))?;
                let mut acc = NCElement::zero();
                for (x1, x2, cc) in cq.delta_word(&Word::letter(tl))? {
                    let p = pairing.pair(&iota, &NCElement::from_term(x1, ring.one()))?;
                    if p.is_zero() {
                        continue;
                    }
                    acc.add_term(x2, p.mul(&cc)?)?;
                }
                acc
            };
            entries.insert((bl, tl), cq.alg.normal_form(&img)?);
        }
    }
    Ok(ActionTable::new(bicross.clone(), cq.clone(), Side::Right, entries))
}

/// Left action of the bicrossproduct on U_q(su2*): the flip of the canonical
/// right action, rescaled into the z, x generators.
pub fn bicross_action_q(bicross: &HopfRef, target: &HopfRef) -> Result<Arc<ActionTable>, AlgError> {
    let cq = super::base::cq_su2();
    let right = bicross_right_action_q(bicross, &cq)?;
    let left_cq = right.flip()?;
    let ring = ScalarRing::Exact;

    // scaled-letter correspondence between the function algebra and the
    // target: a = qz, b = q^(1/2) mu x_-, c = q^(3/2) mu x_+, d = qzb
    let a = cq.alg.letter_by_name("a").unwrap();
    let bb = cq.alg.letter_by_name("b").unwrap();
    let c = cq.alg.letter_by_name("c").unwrap();
    let d = cq.alg.letter_by_name("d").unwrap();
    let qz = target.alg.letter_by_name("qz").unwrap();
    let qzb = target.alg.letter_by_name("qzb").unwrap();
    let xp_t = target.alg.letter_by_name("x_+").unwrap();
    let xm_t = target.alg.letter_by_name("x_-").unwrap();
    let mu = ring.mu();
    let mut to_target: BTreeMap<LetterId, NCElement> = BTreeMap::new();
    to_target.insert(a, NCElement::from_term(Word::letter(qz), ring.one()));
    to_target.insert(d, NCElement::from_term(Word::letter(qzb), ring.one()));
    to_target.insert(
        bb,
        NCElement::from_term(Word::letter(xm_t), ring.q_half_pow(1).mul(&mu)?),
    );
    to_target.insert(
        c,
        NCElement::from_term(Word::letter(xp_t), ring.q_half_pow(3).mul(&mu)?),
    );
    let cq_to_target = |x: &NCElement| -> Result<NCElement, AlgError> {
        let mut out = NCElement::zero();
        for (w, coeff) in &x.terms {
            let mut acc = NCElement::one(&ring);
            for (l, e) in &w.0 {
                acc = target.alg.mul(&acc, &target.alg.pow(&to_target[l], *e)?)?;
            }
            out = out.add(&acc.scale(coeff)?)?;
        }
        target.alg.normal_form(&out)
    };
    // target letters as cq elements with inverse scaling
    let mut from_target: BTreeMap<LetterId, (LetterId, crate::coeffs::Scalar)> = BTreeMap::new();
    from_target.insert(qz, (a, ring.one()));
    from_target.insert(qzb, (d, ring.one()));
    from_target.insert(xm_t, (bb, ring.one().div(&ring.q_half_pow(1).mul(&mu)?)?));
    from_target.insert(xp_t, (c, ring.one().div(&ring.q_half_pow(3).mul(&mu)?)?));

    let mut entries = BTreeMap::new();
    for bl in bicross.alg.letter_ids() {
        for tl in target.alg.letter_ids() {
            let (cl, scale) = from_target[&tl].clone();
            let h = NCElement::from_letter(bl, &bicross.alg.ring);
            let img_cq = left_cq.act(&h, &NCElement::from_letter(cl, &ring))?;
            let img = cq_to_target(&img_cq)?.scale(&scale)?;
            entries.insert((bl, tl), target.alg.normal_form(&img)?);
        }
    }
    Ok(ActionTable::new(bicross.clone(), target.clone(), Side::Left, entries))
}

/// The displayed limit action of the classical bicrossproduct on U(su2*).
pub fn bicross_action_0(bicross: &HopfRef, target: &HopfRef) -> Result<Arc<ActionTable>, AlgError> {
    let ring = ScalarRing::Exact;
    let z = target.alg.letter_by_name("z").unwrap();
    let xp = target.alg.letter_by_name("x_+").unwrap();
    let xm = target.alg.letter_by_name("x_-").unwrap();
    let b = |n: &str| bicross.alg.letter_by_name(n).unwrap();
    let t = |l: LetterId, c: i64| NCElement::from_term(Word::letter(l), ring.from_int(c));
    let const_term = |c: i64| NCElement::from_term(Word::one(), ring.from_int(c));
    let mut entries = BTreeMap::new();
    // H |> z = 0, H |> x_pm = pm 2 x_pm
    entries.insert((b("H"), z), NCElement::zero());
    entries.insert((b("H"), xp), t(xp, 2));
    entries.insert((b("H"), xm), t(xm, -2));
    // X_pm |> z = mp 2 x_pm, X_pm |> x_pm = 0, X_pm |> x_mp = pm z
    entries.insert((b("X_+"), z), t(xp, -2));
    entries.insert((b("X_+"), xp), NCElement::zero());
    entries.insert((b("X_+"), xm), t(z, 1));
    entries.insert((b("X_-"), z), t(xm, 2));
    entries.insert((b("X_-"), xm), NCElement::zero());
    entries.insert((b("X_-"), xp), t(z, -1));
    // alpha^{pm 1} |> z = z mp 1, alpha^{pm 1} |> x_pm = x_pm
    let mut zm1 = t(z, 1);
    zm1 = zm1.add(&const_term(-1))?;
    entries.insert((b("alpha"), z), zm1);
    let mut zp1 = t(z, 1);
    zp1 = zp1.add(&const_term(1))?;
    entries.insert((b("alpha^-1"), z), zp1);
    for g in ["alpha", "alpha^-1"] {
        entries.insert((b(g), xp), t(xp, 1));
        entries.insert((b(g), xm), t(xm, 1));
    }
    // beta |> x_+ = -1, gamma |> x_- = -1, all else zero
    entries.insert((b("beta"), z), NCElement::zero());
    entries.insert((b("beta"), xp), const_term(-1));
    entries.insert((b("beta"), xm), NCElement::zero());
    entries.insert((b("gamma"), z), NCElement::zero());
    entries.insert((b("gamma"), xp), NCElement::zero());
    entries.insert((b("gamma"), xm), const_term(-1));
    Ok(ActionTable::new(bicross.clone(), target.clone(), Side::Left, entries))
}
