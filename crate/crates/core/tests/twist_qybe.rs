//! Cocycle conditions, Yang-Baxter checks, and the R-matrices.

use hopflab_core::constructions::{verify_cocycle, verify_qybe, verify_quasitriangular};
use hopflab_core::models::rep::SpinHalf;
use hopflab_core::models::{twists, ModelConfig, Models};
use std::time::Instant;

#[test]
fn chi_b_is_a_cocycle_t_adic() {
    let m = Models::new(ModelConfig::default()).unwrap();
    let t0 = Instant::now();
    let chi = twists::chi_b_t(&m).unwrap();
    let checks = verify_cocycle(&chi, "qtwist").unwrap();
    for c in &checks {
        println!("[{}] {} ({:?})", if c.pass { "ok" } else { "FAIL" }, c.name, t0.elapsed());
    }
    assert!(checks.iter().all(|c| c.pass));
}

#[test]
fn chi_b0_is_a_cocycle_lambda_adic() {
    let m = Models::new(ModelConfig::default()).unwrap();
    let chi = twists::chi_b0_lambda(&m).unwrap();
    let checks = verify_cocycle(&chi, "qto1twist").unwrap();
    for c in &checks {
        println!("[{}] {}", if c.pass { "ok" } else { "FAIL" }, c.name);
    }
    assert!(checks.iter().all(|c| c.pass));
}

#[test]
fn spin_half_r_matrix_qybe_exact() {
    let m = Models::new(ModelConfig::default()).unwrap();
    let rep = SpinHalf::new(&m.uq_su2);
    let r = rep.r_matrix().unwrap();
    let rinv = rep.r_matrix_inv().unwrap();
    let prod = r.mul(&rinv).unwrap();
    assert!(prod.sub(&hopflab_core::models::rep::RepMatrix::identity(4)).unwrap().is_zero());
    // QYBE on 8x8 exact matrices
    let id2 = hopflab_core::models::rep::RepMatrix::identity(2);
    let r12 = r.kron(&id2).unwrap();
    let r23 = id2.kron(&r).unwrap();
    // r13 = (1 (x) swap)(r (x) 1)(1 (x) swap)
    let mut swap = hopflab_core::models::rep::RepMatrix::zero(4);
    swap.entries[0][0] = hopflab_core::coeffs::Scalar::one();
    swap.entries[1][2] = hopflab_core::coeffs::Scalar::one();
    swap.entries[2][1] = hopflab_core::coeffs::Scalar::one();
    swap.entries[3][3] = hopflab_core::coeffs::Scalar::one();
    let sw23 = id2.kron(&swap).unwrap();
    let r13 = sw23.mul(&r12).unwrap().mul(&sw23).unwrap();
    let lhs = r12.mul(&r13).unwrap().mul(&r23).unwrap();
    let rhs = r23.mul(&r13).unwrap().mul(&r12).unwrap();
    assert!(lhs.sub(&rhs).unwrap().is_zero(), "QYBE fails in the representation");
}

#[test]
fn r_bd_qybe_t_adic() {
    let m = Models::new(ModelConfig::default()).unwrap();
    let t0 = Instant::now();
    let r = twists::r_bd(&m).unwrap();
    println!("r_bd built: {:?}, {} terms", t0.elapsed(), r.terms.len());
    let check = verify_qybe(&r, "RBD").unwrap();
    println!("[{}] {} ({:?})", if check.pass { "ok" } else { "FAIL" }, check.name, t0.elapsed());
    assert!(check.pass, "residual: {}", check.residual);
}

#[test]
fn r_bl_qybe_t_adic() {
    let m = Models::new(ModelConfig::default()).unwrap();
    let t0 = Instant::now();
    let r = twists::r_bl(&m).unwrap();
    println!("r_bl built: {:?}, {} terms", t0.elapsed(), r.terms.len());
    let check = verify_qybe(&r, "RBL").unwrap();
    println!("[{}] {} ({:?})", if check.pass { "ok" } else { "FAIL" }, check.name, t0.elapsed());
    assert!(check.pass, "residual: {}", check.residual);
}

#[test]
fn r_b0_qybe_lambda_adic() {
    let cfg = ModelConfig { lambda_order: 3, ..ModelConfig::default() };
    let m = Models::new(cfg).unwrap();
    let t0 = Instant::now();
    let r = twists::r_b0(&m).unwrap();
    println!("r_b0 built: {:?}, {} terms", t0.elapsed(), r.terms.len());
    let check = verify_qybe(&r, "qto1RBD").unwrap();
    println!("[{}] {} ({:?})", if check.pass { "ok" } else { "FAIL" }, check.name, t0.elapsed());
    assert!(check.pass, "residual: {}", check.residual);
}

#[test]
fn r_bd_quasitriangular_axioms() {
    // the coproduct laws at a reduced order keep the runtime sane
    let cfg = ModelConfig { t_order: 2, ..ModelConfig::default() };
    let m = Models::new(cfg).unwrap();
    let r = twists::r_bd(&m).unwrap();
    let checks = verify_quasitriangular(&r, "RBD").unwrap();
    for c in &checks {
        println!("[{}] {}", if c.pass { "ok" } else { "FAIL" }, c.name);
    }
    assert!(checks.iter().all(|c| c.pass));
}
