//! One-off probe: does the reference cross-relation display correspond to the
//! double built over the flipped coproduct? Documents why the derived table
//! is the consistent one.

use hopflab_core::coeffs::ScalarRing;
use hopflab_core::hopf::{Coalgebra, HopfPresentation, PairingTable};
use hopflab_core::models::{base, goldens};
use hopflab_core::constructions::build_double;
use std::collections::BTreeMap;

#[test]
fn double_with_flipped_coproduct() {
    // flip the coproduct of the enveloping algebra (antipode becomes S^-1)
    let uq = base::uq_su2();
    let ring = ScalarRing::Exact;
    let coalg = uq.coalg.as_ref().unwrap();
    let mut delta = BTreeMap::new();
    for (l, entry) in &coalg.delta {
        delta.insert(*l, entry.iter().map(|(a, b, c)| (b.clone(), a.clone(), c.clone())).collect());
    }
    let mut antipode = BTreeMap::new();
    for l in uq.alg.letter_ids() {
        antipode.insert(l, uq.antipode_inverse_letter(l).unwrap());
    }
    let uq_cop = HopfPresentation::new(
        uq.alg.clone(),
        Some(Coalgebra { delta, counit: coalg.counit.clone(), antipode }),
        None,
    );
    let cq = base::cq_su2();
    let k = uq_cop.alg.letter_by_name("K").unwrap();
    let kinv = uq_cop.alg.letter_by_name("K^-1").unwrap();
    let xp = uq_cop.alg.letter_by_name("X_+").unwrap();
    let xm = uq_cop.alg.letter_by_name("X_-").unwrap();
    let a = cq.alg.letter_by_name("a").unwrap();
    let b = cq.alg.letter_by_name("b").unwrap();
    let c = cq.alg.letter_by_name("c").unwrap();
    let d = cq.alg.letter_by_name("d").unwrap();
    let mut entries = BTreeMap::new();
    entries.insert((k, a), ring.q_half_pow(1));
    entries.insert((k, d), ring.q_half_pow(-1));
    entries.insert((kinv, a), ring.q_half_pow(-1));
    entries.insert((kinv, d), ring.q_half_pow(1));
    entries.insert((xp, b), ring.one());
    entries.insert((xm, c), ring.one());
    let pairing = PairingTable::new(uq_cop.clone(), cq.clone(), entries);
    let dq = build_double(&uq_cop, &cq, &pairing).unwrap();
    let checks = goldens::compare_rules(&dq, &goldens::qdouble_display(&dq)).unwrap();
    for ch in &checks {
        println!("[{}] {} derived: {}  vs  {}", if ch.pass { "ok" } else { "DIFF" }, ch.name, ch.lhs, ch.rhs);
    }
}
