//! Covariant-action, pairing, and star verification across the models.

use hopflab_core::hopf::{verify_module_algebra, verify_star};
use hopflab_core::models::{ModelConfig, Models};

#[test]
fn pairing_duality_axioms() {
    let m = Models::new(ModelConfig::default()).unwrap();
    for (name, p) in [("pairing_q", &m.pairing_q), ("pairing_0", &m.pairing_0)] {
        let checks = p.verify_duality(3).unwrap();
        let fails: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
        for f in fails.iter().take(3) {
            println!("FAIL {}: {} -> {} vs {}", name, f.name, f.lhs, f.rhs);
        }
        assert!(fails.is_empty(), "{}: {} failures", name, fails.len());
        println!("{}: {} checks", name, checks.len());
    }
}

#[test]
fn module_algebra_laws() {
    let m = Models::new(ModelConfig::default()).unwrap();
    for (name, t) in [
        ("double_q on uq_su2", &m.double_action_q),
        ("double_0 on u_su2", &m.double_action_0),
        ("bicross_q on uq_su2_star", &m.bicross_action_q),
        ("bicross_0 on u_su2_star", &m.bicross_action_0),
    ] {
        let checks = verify_module_algebra(t, 2).unwrap();
        let fails: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
        for f in fails.iter().take(5) {
            println!("FAIL {}: {}\n  lhs {}\n  rhs {}", name, f.name, f.lhs, f.rhs);
        }
        assert!(fails.is_empty(), "{}: {} failures of {}", name, fails.len(), checks.len());
        println!("{}: {} checks", name, checks.len());
    }
}

#[test]
fn star_structures() {
    let m = Models::new(ModelConfig::default()).unwrap();
    for (name, h) in m.hopf_presentations() {
        if h.star.is_none() {
            continue;
        }
        let checks = verify_star(&h, 3).unwrap();
        let fails: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
        for f in fails.iter().take(3) {
            println!("FAIL {}: {} {} vs {}", name, f.name, f.lhs, f.rhs);
        }
        assert!(fails.is_empty(), "{}: {} failures", name, fails.len());
        println!("{}: {} star checks", name, checks.len());
    }
}
