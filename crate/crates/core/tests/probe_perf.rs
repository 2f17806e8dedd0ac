use hopflab_core::hopf::verify_hopf_axioms;
use hopflab_core::models::{ModelConfig, Models};
use std::time::Instant;

#[test]
fn probe() {
    let t0 = Instant::now();
    let m = Models::new(ModelConfig::default()).unwrap();
    println!("models build: {:?}", t0.elapsed());
    for (name, h) in [
        ("mirror_t", m.mirror_t.clone()),
        ("bicross_0_l", m.bicross_0_l.clone()),
        ("double_q", m.double_q.clone()),
        ("bicross_q", m.bicross_q.clone()),
    ] {
        let t = Instant::now();
        match verify_hopf_axioms(&h, 3) {
            Ok(checks) => println!("{}: {} checks, {:?}", name, checks.len(), t.elapsed()),
            Err(e) => println!("{}: ERROR {} after {:?}", name, e, t.elapsed()),
        }
    }
}
