//! The exact twisted-coproduct identity and the module-algebra twist that
//! turns the bicrossproduct spacetime into the spin-model spacetime.

use hopflab_core::constructions::twisted_product;
use hopflab_core::models::{twists, ModelConfig, Models};
use hopflab_core::ncalg::NCElement;

#[test]
fn twisted_coproduct_on_generators() {
    let m = Models::new(ModelConfig::default()).unwrap();
    for gen in ["d", "b", "c", "a"] {
        let check = twists::twisted_coproduct_check(&m, gen).unwrap();
        println!("[{}] {}", if check.pass { "ok" } else { "FAIL" }, check.name);
        assert!(check.pass, "residual {}", check.residual);
    }
}

#[test]
fn twisted_product_table() {
    let m = Models::new(ModelConfig::default()).unwrap();
    let t = &m.u_su2_star;
    let ring = t.alg.ring;
    let act = &m.bicross_action_0;
    let chi_inv = twists::chi_b0_inv_factors(&m);
    let z = NCElement::from_letter(t.alg.letter_by_name("z").unwrap(), &ring);
    let xp = NCElement::from_letter(t.alg.letter_by_name("x_+").unwrap(), &ring);
    let xm = NCElement::from_letter(t.alg.letter_by_name("x_-").unwrap(), &ring);
    let star = |a: &NCElement, b: &NCElement| twisted_product(act, &chi_inv, a, b, 50).unwrap();

    // z *_chi x_+ = z x_+ + 2 x_+
    let got = star(&z, &xp);
    let want = t.alg.mul(&z, &xp).unwrap().add(&xp.scale(&ring.from_int(2)).unwrap()).unwrap();
    assert!(got.sub(&want).unwrap().is_zero(), "z *x_+ = {}", t.alg.render(&got));
    // x_+ *_chi z = x_+ z - x_+
    let got = star(&xp, &z);
    let want = t.alg.mul(&xp, &z).unwrap().sub(&xp).unwrap();
    assert!(got.sub(&want).unwrap().is_zero(), "x_+*z = {}", t.alg.render(&got));
    // twisted commutators: [x_+, x_-]_chi = z, [x_pm, z]_chi = mp 2 x_pm
    let comm = |a: &NCElement, b: &NCElement| star(a, b).sub(&star(b, a)).unwrap();
    let c1 = comm(&xp, &xm);
    assert!(c1.sub(&z).unwrap().is_zero(), "[x+,x-]_chi = {}", t.alg.render(&c1));
    let c2 = comm(&xp, &z);
    assert!(
        c2.sub(&xp.scale(&ring.from_int(-2)).unwrap()).unwrap().is_zero(),
        "[x+,z]_chi = {}",
        t.alg.render(&c2)
    );
    let c3 = comm(&xm, &z);
    assert!(
        c3.sub(&xm.scale(&ring.from_int(2)).unwrap()).unwrap().is_zero(),
        "[x-,z]_chi = {}",
        t.alg.render(&c3)
    );
    println!("twisted product table matches");
}

#[test]
fn twisted_product_associativity() {
    // associativity of the twisted product on generator triples is the
    // action-level cocycle property of chi_B0
    let m = Models::new(ModelConfig::default()).unwrap();
    let t = &m.u_su2_star;
    let ring = t.alg.ring;
    let act = &m.bicross_action_0;
    let chi_inv = twists::chi_b0_inv_factors(&m);
    let star = |a: &NCElement, b: &NCElement| twisted_product(act, &chi_inv, a, b, 50).unwrap();
    let gens: Vec<NCElement> = ["z", "x_+", "x_-"]
        .iter()
        .map(|n| NCElement::from_letter(t.alg.letter_by_name(n).unwrap(), &ring))
        .collect();
    for a in &gens {
        for b in &gens {
            for c in &gens {
                let lhs = star(&star(a, b), c);
                let rhs = star(a, &star(b, c));
                assert!(
                    lhs.sub(&rhs).unwrap().is_zero(),
                    "associativity fails: {} vs {}",
                    t.alg.render(&lhs),
                    t.alg.render(&rhs)
                );
            }
        }
    }
    println!("twisted product associative on all generator triples");
}

#[test]
fn phi_is_isomorphism_and_covariant() {
    let m = Models::new(ModelConfig::default()).unwrap();
    let t = &m.u_su2_star;
    let u = &m.u_su2;
    let ring = t.alg.ring;
    let act = &m.bicross_action_0;
    let chi_inv = twists::chi_b0_inv_factors(&m);
    let star = |a: &NCElement, b: &NCElement| twisted_product(act, &chi_inv, a, b, 50).unwrap();
    let z = NCElement::from_letter(t.alg.letter_by_name("z").unwrap(), &ring);
    let xp = NCElement::from_letter(t.alg.letter_by_name("x_+").unwrap(), &ring);
    let xm = NCElement::from_letter(t.alg.letter_by_name("x_-").unwrap(), &ring);
    // Phi: H -> z, X_pm -> x_pm intertwines the relations with the twisted product
    // [Phi(X_+), Phi(X_-)]_chi = Phi(H), [Phi(H), Phi(X_pm)]_chi = pm 2 Phi(X_pm)
    let comm = |a: &NCElement, b: &NCElement| star(a, b).sub(&star(b, a)).unwrap();
    assert!(comm(&xp, &xm).sub(&z).unwrap().is_zero());
    assert!(comm(&z, &xp).sub(&xp.scale(&ring.from_int(2)).unwrap()).unwrap().is_zero());
    assert!(comm(&z, &xm).sub(&xm.scale(&ring.from_int(-2)).unwrap()).unwrap().is_zero());

    // the three displayed covariance checks
    let theta = twists::theta_0_images(&m).unwrap();
    let d0 = &m.double_0;
    let b0 = &m.bicross_0;
    // theta(X_+) |> Phi(H) = Phi(X_+ |> H): X_+ |> z = -2x_+ and X_+ |> H = -2X_+
    let tx = &theta[&d0.alg.letter_by_name("X_+").unwrap()];
    let tx_b = hopflab_core::models::twists::rename_into(tx, b0, b0).unwrap();
    let lhs = act.act(&tx_b, &z).unwrap();
    let want = xp.scale(&ring.from_int(-2)).unwrap();
    assert!(lhs.sub(&want).unwrap().is_zero(), "theta(X_+) |> Phi(H) = {}", t.alg.render(&lhs));
    let hx = u.alg.letter_by_name("H").unwrap();
    let xpu = NCElement::from_letter(u.alg.letter_by_name("X_+").unwrap(), &u.alg.ring);
    let xpd = NCElement::from_letter(m.double_0.alg.letter_by_name("X_+").unwrap(), &m.double_0.alg.ring);
    let act_d = &m.double_action_0;
    let dh = act_d
        .act(&xpd, &NCElement::from_letter(hx, &u.alg.ring))
        .unwrap();
    // X_+ |> H in the double action is -2 X_+; Phi sends it to -2 x_+
    assert!(
        dh.sub(&xpu.scale(&ring.from_int(-2)).unwrap()).unwrap().is_zero(),
        "double action X_+ |> H = {}",
        u.alg.render(&dh)
    );
    // theta(a) |> Phi(H) = delta |> z = z + 1 = Phi(1 + H) = Phi(a |> H)
    let ta = &theta[&d0.alg.letter_by_name("a").unwrap()];
    let lhs = act.act(ta, &z).unwrap();
    let mut want = z.clone();
    want.add_term(hopflab_core::ncalg::Word::one(), ring.one()).unwrap();
    assert!(lhs.sub(&want).unwrap().is_zero(), "theta(a) |> Phi(H) = {}", t.alg.render(&lhs));
    // theta(d) |> Phi(X_-) = alpha |> x_- = x_- = Phi(d |> X_-)
    let td = &theta[&d0.alg.letter_by_name("d").unwrap()];
    let lhs = act.act(td, &xm).unwrap();
    assert!(lhs.sub(&xm).unwrap().is_zero());
    println!("Phi isomorphism and the three covariance checks pass");
}
