use hopflab_core::constructions::{embed_pair, verify_cocycle};
use hopflab_core::models::{twists, ModelConfig, Models};

#[test]
fn chi_b_low_order() {
    let cfg = ModelConfig { t_order: 2, ..ModelConfig::default() };
    let m = Models::new(cfg).unwrap();
    let chi = twists::chi_b_t(&m).unwrap();
    let checks = verify_cocycle(&chi, "qtwist").unwrap();
    for c in &checks {
        println!("[{}] {}", if c.pass { "ok" } else { "FAIL" }, c.name);
    }
}

#[test]
fn chi_b0_low_order_residual() {
    let cfg = ModelConfig { lambda_order: 2, ..ModelConfig::default() };
    let m = Models::new(cfg).unwrap();
    let chi = twists::chi_b0_lambda(&m).unwrap();
    // print the residual of the cocycle identity
    let chi12 = embed_pair(&chi.chi, 3, 0, 1).unwrap();
    let chi23 = embed_pair(&chi.chi, 3, 1, 2).unwrap();
    let lhs = chi12.mul(&chi.chi.apply_delta_at(0).unwrap()).unwrap();
    let rhs = chi23.mul(&chi.chi.apply_delta_at(1).unwrap()).unwrap();
    let res = lhs.sub(&rhs).unwrap();
    println!("residual terms: {}", res.terms.len());
    for (ws, c) in res.terms.iter().take(10) {
        let legs: Vec<String> = ws
            .iter()
            .map(|w| chi.chi.legs[0].alg.render_word(w))
            .collect();
        println!("  {} : {}", legs.join(" (x) "), c);
    }
    // also: reversed-side identity (Delta (x) id)chi . chi12 = (id (x) Delta)chi . chi23
    let lhs2 = chi.chi.apply_delta_at(0).unwrap().mul(&chi12).unwrap();
    let rhs2 = chi.chi.apply_delta_at(1).unwrap().mul(&chi23).unwrap();
    let res2 = lhs2.sub(&rhs2).unwrap();
    println!("reversed-side residual terms: {}", res2.terms.len());
}
