use hopflab_core::hopf::verify_hopf_axioms;
use hopflab_core::models::{ModelConfig, Models};

#[test]
fn mirror_t_degree3_error() {
    let m = Models::new(ModelConfig::default()).unwrap();
    match verify_hopf_axioms(&m.mirror_t, 3) {
        Ok(checks) => {
            let fails = checks.iter().filter(|c| !c.pass).count();
            println!("mirror_t ok: {} checks, {} fails", checks.len(), fails);
        }
        Err(e) => println!("mirror_t ERROR: {}", e),
    }
}
