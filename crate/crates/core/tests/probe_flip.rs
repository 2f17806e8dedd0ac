//! Derive the canonical right action of the bicrossproduct on the function
//! algebra, check the right module-algebra law, flip it through the inverse
//! antipode, and compare with the displayed left action.

use hopflab_core::hopf::{ActionTable, Side, verify_module_algebra};
use hopflab_core::models::rep::KillingInverse;
use hopflab_core::models::{base, ModelConfig, Models};
use hopflab_core::ncalg::{NCElement, Word};
use std::collections::BTreeMap;

#[test]
fn right_action_and_flip() {
    let m = Models::new(ModelConfig::default()).unwrap();
    let bq = &m.bicross_q;
    let uq = &m.uq_su2;
    let cq = &m.cq_su2;
    let pairing = &m.pairing_q;
    let star_plain = base::cq_su2_star(false);
    let ki = KillingInverse::new(&star_plain, uq);
    let ring = uq.alg.ring;

    // right action on C_q[SU2] letters: a <| phi = <phi, a1> a2,
    // a <| g = <g1, a1> a2 <S g2, a3>
    let mut entries = BTreeMap::new();
    for bl in bq.alg.letter_ids() {
        let name = bq.alg.letter_name(bl).to_string();
        for tl in cq.alg.letter_ids() {
            let img = if let Some(g) = uq.alg.letter_by_name(&name) {
                let mut acc = NCElement::zero();
                let mut trip = Vec::new();
                for (x1, x2, cc) in cq.delta_word(&Word::letter(tl)).unwrap() {
                    for (x2a, x3, cc2) in cq.delta_word(&x2).unwrap() {
                        trip.push((x1.clone(), x2a, x3, cc.mul(&cc2).unwrap()));
                    }
                }
                for (h1, h2, ch) in uq.delta_word(&Word::letter(g)).unwrap() {
                    let sh2 = uq.antipode(&NCElement::from_term(h2, ring.one())).unwrap();
                    for (x1, x2, x3, cx) in &trip {
                        let p1 = pairing.pair_words(&h1, x1).unwrap();
                        if p1.is_zero() { continue; }
                        let p2 = pairing.pair(&sh2, &NCElement::from_term(x3.clone(), ring.one())).unwrap();
                        if p2.is_zero() { continue; }
                        acc.add_term(x2.clone(), p1.mul(&p2).unwrap().mul(&ch).unwrap().mul(cx).unwrap()).unwrap();
                    }
                }
                acc
            } else {
                // dual letter phi: a <| phi = <iota(phi), a1> a2
                let phi_plain = star_plain.alg.letter_by_name(&name).unwrap();
                let iota = ki.forward(&NCElement::from_letter(phi_plain, &ring)).unwrap();
                let mut acc = NCElement::zero();
                for (x1, x2, cc) in cq.delta_word(&Word::letter(tl)).unwrap() {
                    let p = pairing.pair(&iota, &NCElement::from_term(x1, ring.one())).unwrap();
                    if p.is_zero() { continue; }
                    acc.add_term(x2, p.mul(&cc).unwrap()).unwrap();
                }
                acc
            };
            entries.insert((bl, tl), cq.alg.normal_form(&img).unwrap());
        }
    }
    let right = ActionTable::new(bq.clone(), cq.clone(), Side::Right, entries);
    let checks = verify_module_algebra(&right, 2).unwrap();
    let fails = checks.iter().filter(|c| !c.pass).count();
    println!("right action: {} failures of {}", fails, checks.len());

    // flip through the machine-computed inverse antipode
    let left = right.flip().unwrap();
    let checks = verify_module_algebra(&left, 2).unwrap();
    let fails = checks.iter().filter(|c| !c.pass).count();
    println!("flipped left action: {} failures of {}", fails, checks.len());
    for name in ["X_+", "X_-", "beta", "gamma", "alpha", "K"] {
        for t in ["a", "b", "c", "d"] {
            let h = NCElement::from_letter(bq.alg.letter_by_name(name).unwrap(), &ring);
            let a = NCElement::from_letter(cq.alg.letter_by_name(t).unwrap(), &ring);
            let img = left.act(&h, &a).unwrap();
            println!("{} |> {} = {}", name, t, cq.alg.render(&img));
        }
    }
}
