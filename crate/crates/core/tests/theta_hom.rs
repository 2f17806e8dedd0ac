use hopflab_core::models::{twists, ModelConfig, Models};

#[test]
fn theta_q_is_algebra_map() {
    let m = Models::new(ModelConfig::default()).unwrap();
    let images = twists::theta_q_images(&m).unwrap();
    let checks = twists::verify_hom(&m.double_q, &m.bicross_q, &images, "theta").unwrap();
    let fails: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
    for f in &fails {
        println!("FAIL {}: {} vs {}", f.name, f.lhs, f.rhs);
    }
    assert!(fails.is_empty(), "{} of {} relations break", fails.len(), checks.len());
    println!("theta preserves all {} double relations", checks.len());
}

#[test]
fn theta_0_is_algebra_map() {
    let m = Models::new(ModelConfig::default()).unwrap();
    let images = twists::theta_0_images(&m).unwrap();
    let checks = twists::verify_hom(&m.double_0, &m.bicross_0, &images, "theta0").unwrap();
    let fails: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
    for f in &fails {
        println!("FAIL {}: {} vs {}", f.name, f.lhs, f.rhs);
    }
    assert!(fails.is_empty());
    println!("theta_0 preserves all {} double relations", checks.len());
}
