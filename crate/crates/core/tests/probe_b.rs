use hopflab_core::hopf::TensorElement;
use hopflab_core::models::rep::algebra_map;
use hopflab_core::models::{twists, ModelConfig, Models};
use hopflab_core::ncalg::{NCElement, Word};

#[test]
fn localize_b_failure() {
    let m = Models::new(ModelConfig::default()).unwrap();
    let bq = &m.bicross_q;
    let dq = &m.double_q;
    let ring = bq.alg.ring;
    let theta = twists::theta_q_images(&m).unwrap();
    let legs = vec![bq.clone(), bq.clone()];
    let k = bq.alg.letter_by_name("K").unwrap();
    let xp = bq.alg.letter_by_name("X_+").unwrap();
    let ai = bq.alg.letter_by_name("alpha^-1").unwrap();
    let be = bq.alg.letter_by_name("beta").unwrap();
    let a_left = NCElement::from_term(Word::concat(&[&[(k, 1), (xp, 1)]]), ring.q_half_pow(-1).neg());
    let a_right = NCElement::from_term(Word::concat(&[&[(ai, 1), (be, 1)]]), ring.one());
    let a = TensorElement::embed(&a_left, legs.clone(), 0).unwrap()
        .mul(&TensorElement::embed(&a_right, legs.clone(), 1).unwrap()).unwrap();
    let g = dq.alg.letter_by_name("b").unwrap();
    let d_theta = bq.coproduct(&theta[&g]).unwrap();
    let conj = twists::HhConjugation::new(&m, -1).unwrap();
    let dressed = conj.apply(&d_theta).unwrap();
    println!("dressed = {}", dressed.render());
    let d_x = dq.coproduct(&NCElement::from_letter(g, &ring)).unwrap();
    let mut rhs = TensorElement::zero(legs.clone());
    for (ws, c) in &d_x.terms {
        let img0 = algebra_map(dq, bq, &theta, &NCElement::from_term(ws[0].clone(), ring.one())).unwrap();
        let img1 = algebra_map(dq, bq, &theta, &NCElement::from_term(ws[1].clone(), ring.one())).unwrap();
        let t = TensorElement::embed(&img0, legs.clone(), 0).unwrap()
            .mul(&TensorElement::embed(&img1, legs.clone(), 1).unwrap()).unwrap();
        rhs = rhs.add(&t.scale(c).unwrap()).unwrap();
    }
    println!("theta-rhs = {}", rhs.render());
    // E.Y - Theta.E by grade
    let kmax = 8usize;
    let mut scaled = vec![TensorElement::unit(legs.clone())];
    let mut fact = ring.one();
    for kk in 1..=kmax {
        let qk = ring.one().sub(&ring.q_pow(2 * kk as i64)).unwrap()
            .div(&ring.one().sub(&ring.q_pow(2)).unwrap()).unwrap();
        fact = fact.mul(&qk).unwrap();
        let inv = ring.one().div(&fact).unwrap();
        scaled.push(scaled[kk - 1].mul(&a).unwrap().scale(&inv).unwrap());
    }
    // brute total up to k = kmax
    let mut lhs_total = TensorElement::zero(legs.clone());
    let mut rhs_total = TensorElement::zero(legs.clone());
    for kk in 0..=kmax {
        lhs_total = lhs_total.add(&scaled[kk].mul(&dressed).unwrap()).unwrap();
        rhs_total = rhs_total.add(&rhs.mul(&scaled[kk]).unwrap()).unwrap();
    }
    let res = lhs_total.sub(&rhs_total).unwrap();
    println!("residual terms: {}", res.terms.len());
    for (ws, c) in res.terms.iter().take(8) {
        println!("  {} (x) {} : {}", bq.alg.render_word(&ws[0]), bq.alg.render_word(&ws[1]), c);
    }
}
