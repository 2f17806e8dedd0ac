use hopflab_core::models::{twists, ModelConfig, Models};
use std::time::Instant;

#[test]
fn all_generators_both_routes() {
    let m = Models::new(ModelConfig::default()).unwrap();
    for gen in ["d", "b", "c", "a"] {
        let t0 = Instant::now();
        let c = twists::twisted_coproduct_check(&m, gen).unwrap();
        println!("[{}] {} ({:?})", if c.pass { "ok" } else { "FAIL" }, c.name, t0.elapsed());
    }
    let cfg = ModelConfig { t_order: 4, ..ModelConfig::default() };
    let m4 = Models::new(cfg).unwrap();
    for gen in ["d", "b", "c", "a"] {
        let t0 = Instant::now();
        let c = twists::twisted_coproduct_check_t(&m4, gen).unwrap();
        println!("[{}] {} ({:?})", if c.pass { "ok" } else { "FAIL" }, c.name, t0.elapsed());
    }
}
