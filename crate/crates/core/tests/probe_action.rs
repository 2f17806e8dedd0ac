use hopflab_core::models::{ModelConfig, Models};
use hopflab_core::ncalg::NCElement;

#[test]
fn debug_action() {
    let m = Models::new(ModelConfig::default()).unwrap();
    let bq = &m.bicross_q;
    let t = &m.uq_su2_star;
    let ring = t.alg.ring;
    // print the full single-letter action table
    for actor in ["K", "K^-1", "X_+", "X_-", "alpha", "alpha^-1", "beta", "gamma"] {
        for target in ["qz", "qzb", "x_+", "x_-"] {
            let h = NCElement::from_letter(bq.alg.letter_by_name(actor).unwrap(), &ring);
            let a = NCElement::from_letter(t.alg.letter_by_name(target).unwrap(), &ring);
            let got = m.bicross_action_q.act(&h, &a).unwrap();
            println!("{} |> {} = {}", actor, target, t.alg.render(&got));
        }
    }
    // the failing case: X_+ |> (qz x_+)
    let xp = NCElement::from_letter(bq.alg.letter_by_name("X_+").unwrap(), &ring);
    let qz = NCElement::from_letter(t.alg.letter_by_name("qz").unwrap(), &ring);
    let xpt = NCElement::from_letter(t.alg.letter_by_name("x_+").unwrap(), &ring);
    let prod = t.alg.mul(&qz, &xpt).unwrap();
    let lhs = m.bicross_action_q.act(&xp, &prod).unwrap();
    println!("X_+ |> (qz x_+) = {}", t.alg.render(&lhs));
    // manual Sweedler: Delta X_+ then piecewise
    let d = bq.coproduct(&xp).unwrap();
    println!("Delta_bicross(X_+) = {}", d.render());
    let mut rhs = NCElement::zero();
    for (ws, c) in &d.terms {
        let h1 = NCElement::from_term(ws[0].clone(), ring.one());
        let h2 = NCElement::from_term(ws[1].clone(), ring.one());
        let p1 = m.bicross_action_q.act(&h1, &qz).unwrap();
        let p2 = m.bicross_action_q.act(&h2, &xpt).unwrap();
        rhs = rhs.add(&t.alg.mul(&p1, &p2).unwrap().scale(c).unwrap()).unwrap();
    }
    println!("sum (h1|>qz)(h2|>x_+) = {}", t.alg.render(&rhs));
}
