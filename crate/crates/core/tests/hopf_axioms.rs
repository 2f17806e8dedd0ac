//! Hopf-axiom verification across every shipped presentation.

use hopflab_core::hopf::verify_hopf_axioms;
use hopflab_core::models::{ModelConfig, Models};

#[test]
fn all_presentations_pass_degree_two() {
    let m = Models::new(ModelConfig::default()).unwrap();
    let list = m.hopf_presentations();
    for (name, h) in list {
        let checks = verify_hopf_axioms(&h, 3).unwrap();
        let fails: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
        for f in fails.iter().take(4) {
            println!("FAIL {}: {}\n  lhs {}\n  rhs {}", name, f.name, f.lhs, f.rhs);
        }
        assert!(fails.is_empty(), "{}: {} axiom failures of {}", name, fails.len(), checks.len());
        println!("{}: {} checks pass", name, checks.len());
    }
}

#[test]
fn series_presentations_pass_degree_two() {
    let m = Models::new(ModelConfig::default()).unwrap();
    for (name, h) in [
        ("mirror_t", m.mirror_t.clone()),
        ("bicross_0_l", m.bicross_0_l.clone()),
        ("uq_su2_t", m.uq_su2_t.clone()),
        ("cq_su2_star", m.cq_su2_star.clone()),
    ] {
        let checks = verify_hopf_axioms(&h, 2).unwrap();
        let fails: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
        assert!(fails.is_empty(), "{}: {} axiom failures of {}", name, fails.len(), checks.len());
        println!("{}: {} checks pass", name, checks.len());
    }
}
