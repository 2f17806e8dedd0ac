use hopflab_core::constructions::verify_cocycle;
use hopflab_core::models::{twists, ModelConfig, Models};

#[test]
fn chi_b_cocycle_order3() {
    let cfg = ModelConfig { t_order: 3, ..ModelConfig::default() };
    let m = Models::new(cfg).unwrap();
    let chi = twists::chi_b_t(&m).unwrap();
    for c in verify_cocycle(&chi, "qtwist").unwrap() {
        println!("[{}] {}", if c.pass { "ok" } else { "FAIL" }, c.name);
    }
}
