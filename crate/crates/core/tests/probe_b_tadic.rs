use hopflab_core::hopf::TensorElement;
use hopflab_core::models::rep::algebra_map;
use hopflab_core::models::{twists, ModelConfig, Models};
use hopflab_core::ncalg::{LetterId, NCElement};
use std::collections::BTreeMap;

#[test]
fn b_identity_t_adic() {
    let cfg = ModelConfig { t_order: 3, ..ModelConfig::default() };
    let m = Models::new(cfg).unwrap();
    let mt = &m.mirror_t;
    let bq = &m.bicross_q;
    let dq = &m.double_q;
    let ring = mt.alg.ring;
    // bicross_q -> mirror_t conversion on letters
    let mut conv: BTreeMap<LetterId, NCElement> = BTreeMap::new();
    let kt = |j: i64| twists::k_series(mt, j); // q^(j H/2)
    let ktt = |j: i64| {
        // q^(j H~/2)
        let h = mt.alg.letter_by_name("H~").unwrap();
        let mut out = NCElement::zero();
        let order = ring.order().unwrap();
        let mut num = 1i64;
        let mut den = 1i64;
        let mut fact = 1i64;
        for k in 0..=order {
            if k > 0 {
                num *= j;
                den *= 4;
                fact *= k as i64;
            }
            let mut s = hopflab_core::coeffs::TruncSeries::zero(hopflab_core::coeffs::SeriesVar::T, order);
            s.coeffs[k] = hopflab_core::coeffs::RationalFunction::from_frac(num, den * fact);
            out.add_term(hopflab_core::ncalg::Word::letter_pow(h, k as u32), hopflab_core::coeffs::Scalar::Ser(s)).unwrap();
        }
        out
    };
    let mu = ring.mu();
    let nc = |n: &str| NCElement::from_letter(mt.alg.letter_by_name(n).unwrap(), &ring);
    conv.insert(bq.alg.letter_by_name("alpha").unwrap(), ktt(2));
    conv.insert(bq.alg.letter_by_name("alpha^-1").unwrap(), ktt(-2));
    conv.insert(
        bq.alg.letter_by_name("beta").unwrap(),
        mt.alg.mul(&ktt(1), &nc("X_-~")).unwrap().scale(&ring.q_half_pow(1).mul(&mu).unwrap()).unwrap(),
    );
    conv.insert(
        bq.alg.letter_by_name("gamma").unwrap(),
        mt.alg.mul(&ktt(1), &nc("X_+~")).unwrap().scale(&ring.q_half_pow(-1).mul(&mu).unwrap()).unwrap(),
    );
    conv.insert(bq.alg.letter_by_name("K").unwrap(), kt(1));
    conv.insert(bq.alg.letter_by_name("K^-1").unwrap(), kt(-1));
    conv.insert(bq.alg.letter_by_name("X_+").unwrap(), nc("X_+"));
    conv.insert(bq.alg.letter_by_name("X_-").unwrap(), nc("X_-"));
    let to_mt = |x: &NCElement| {
        // substitute s = e^(t/4)... i.e. q = e^(t/2) into exact coefficients
        let mut y = NCElement::zero();
        for (w, c) in &x.terms {
            let c2 = match c {
                hopflab_core::coeffs::Scalar::Rat(rf) => hopflab_core::coeffs::Scalar::Ser(
                    hopflab_core::coeffs::TruncSeries::from_ratfunc_q(ring.order().unwrap(), rf, 1, 2).unwrap(),
                ),
                o => o.clone(),
            };
            y.add_term(w.clone(), c2).unwrap();
        }
        algebra_map(bq, mt, &conv, &y).unwrap()
    };

    let theta = twists::theta_q_images(&m).unwrap();
    // sanity: the converted theta must stay an algebra map t-adically
    for ((l1, l2), rhs) in dq.alg.rules() {
        let lhs_w = hopflab_core::ncalg::Word::letter(*l1).mul(&hopflab_core::ncalg::Word::letter(*l2));
        let img_l = {
            let x = algebra_map(dq, bq, &theta, &NCElement::from_term(lhs_w, dq.alg.ring.one())).unwrap();
            to_mt(&x)
        };
        let img_r = {
            let x = algebra_map(dq, bq, &theta, rhs).unwrap();
            to_mt(&x)
        };
        let res = img_l.sub(&img_r).unwrap();
        assert!(
            res.is_zero(),
            "converted theta breaks {}{}: {}",
            dq.alg.letter_name(*l1),
            dq.alg.letter_name(*l2),
            mt.alg.render(&res)
        );
    }
    println!("converted theta is an algebra map");
    let chi = twists::chi_b_t(&m).unwrap();
    let legs = vec![mt.clone(), mt.clone()];
    for gen in ["d", "b", "c", "a"] {
        let g = dq.alg.letter_by_name(gen).unwrap();
        let theta_mt = to_mt(&theta[&g]);
        let d_theta = mt.coproduct(&theta_mt).unwrap();
        let lhs = chi.chi.mul(&d_theta).unwrap().mul(&chi.chi_inv).unwrap();
        let d_x = dq.coproduct(&NCElement::from_letter(g, &dq.alg.ring)).unwrap();
        let mut rhs = TensorElement::zero(legs.clone());
        for (ws, c) in &d_x.terms {
            let img0 = to_mt(&algebra_map(dq, bq, &theta, &NCElement::from_term(ws[0].clone(), dq.alg.ring.one())).unwrap());
            let img1 = to_mt(&algebra_map(dq, bq, &theta, &NCElement::from_term(ws[1].clone(), dq.alg.ring.one())).unwrap());
            let t = TensorElement::embed(&img0, legs.clone(), 0).unwrap()
                .mul(&TensorElement::embed(&img1, legs.clone(), 1).unwrap()).unwrap();
            rhs = rhs.add(&t.scale(c).unwrap()).unwrap();
        }
        let res = lhs.sub(&rhs).unwrap();
        println!("{}: residual zero = {}", gen, res.is_zero());
        if !res.is_zero() {
            for (ws, c) in res.terms.iter().take(4) {
                println!("  {} (x) {} : {}", mt.alg.render_word(&ws[0]), mt.alg.render_word(&ws[1]), c);
            }
        }
    }
}
