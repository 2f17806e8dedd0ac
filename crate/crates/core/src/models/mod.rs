//! The concrete models: presentations, pairings, actions, representations,
//! structure maps between them, twists, and R-matrices.

pub mod base;
pub mod charts;
pub mod composite;
pub mod goldens;
pub mod rep;
pub mod series;
pub mod twists;

use crate::coeffs::{Scalar, ScalarRing};
use crate::error::AlgError;
use crate::hopf::{ActionTable, HopfRef, PairingTable};
use crate::ncalg::{LetterId, NCElement, Presentation, Word};
use std::sync::Arc;

/// Configuration for the series modes.
#[derive(Clone, Copy, Debug)]
pub struct ModelConfig {
    pub t_order: usize,
    pub lambda_order: usize,
    /// q = e^(kappa t); kappa = kappa_num / kappa_den
    pub kappa_num: i64,
    pub kappa_den: i64,
}

impl Default for ModelConfig {
    fn default() -> Self {
        ModelConfig { t_order: 4, lambda_order: 4, kappa_num: 1, kappa_den: 2 }
    }
}

/// Every object the verification suites need, built once and shared.
pub struct Models {
    pub cfg: ModelConfig,
    // exact q-level
    pub uq_su2: HopfRef,
    pub cq_su2: HopfRef,
    pub cq_su2_star: HopfRef,
    pub cq_su2_star_cop: HopfRef,
    pub uq_su2_star: HopfRef,
    // classical limits
    pub u_su2: HopfRef,
    pub c_su2: HopfRef,
    pub u_su2_star: HopfRef,
    pub c_su2_star_cop: HopfRef,
    // t-adic
    pub uq_su2_t: HopfRef,
    // pairings
    pub pairing_q: Arc<PairingTable>,
    pub pairing_0: Arc<PairingTable>,
    // composites (quantum double, mirror bicrossproduct) and their actions
    pub double_q: HopfRef,
    pub bicross_q: HopfRef,
    pub double_0: HopfRef,
    pub bicross_0: HopfRef,
    pub mirror_t: HopfRef,
    pub bicross_0_l: HopfRef,
    pub double_action_q: Arc<ActionTable>,
    pub double_action_0: Arc<ActionTable>,
    pub bicross_action_q: Arc<ActionTable>,
    pub bicross_action_0: Arc<ActionTable>,
}

impl Models {
    pub fn new(cfg: ModelConfig) -> Result<Self, AlgError> {
        let uq_su2 = base::uq_su2();
        let cq_su2 = base::cq_su2();
        let cq_su2_star = base::cq_su2_star(false);
        let cq_su2_star_cop = base::cq_su2_star(true);
        let uq_su2_star = base::uq_su2_star();
        let u_su2 = base::u_su2();
        let c_su2 = base::c_su2();
        let u_su2_star = base::u_su2_star();
        let c_su2_star_cop = base::c_su2_star_cop();
        let uq_su2_t = base::uq_su2_t(cfg.t_order, cfg.kappa_num, cfg.kappa_den);
        let pairing_q = base::pairing_q(&uq_su2, &cq_su2);
        let pairing_0 = base::pairing_0(&u_su2, &c_su2);
        let double_q = composite::build_double(&uq_su2, &cq_su2, &pairing_q)?;
        let double_0 = composite::build_double(&u_su2, &c_su2, &pairing_0)?;
        let bicross_q = composite::build_bicross_q(&uq_su2, &cq_su2_star_cop)?;
        let bicross_0 = composite::bicross_0();
        let mirror_t = composite::build_mirror_t(&uq_su2_t)?;
        let bicross_0_l = series::bicross_0_lambda(cfg.lambda_order);
        let double_action_q = composite::double_action(&double_q, &uq_su2, &pairing_q)?;
        let double_action_0 = composite::double_action(&double_0, &u_su2, &pairing_0)?;
        let bicross_action_q = composite::bicross_action_q(&bicross_q, &uq_su2_star)?;
        let bicross_action_0 = composite::bicross_action_0(&bicross_0, &u_su2_star)?;
        Ok(Models {
            cfg,
            uq_su2,
            cq_su2,
            cq_su2_star,
            cq_su2_star_cop,
            uq_su2_star,
            u_su2,
            c_su2,
            u_su2_star,
            c_su2_star_cop,
            uq_su2_t,
            pairing_q,
            pairing_0,
            double_q,
            bicross_q,
            double_0,
            bicross_0,
            mirror_t,
            bicross_0_l,
            double_action_q,
            double_action_0,
            bicross_action_q,
            bicross_action_0,
        })
    }

    /// The twelve presentations carrying a full Hopf structure.
    pub fn hopf_presentations(&self) -> Vec<(&'static str, HopfRef)> {
        vec![
            ("uq_su2", self.uq_su2.clone()),
            ("cq_su2", self.cq_su2.clone()),
            ("uq_su2_star", self.uq_su2_star.clone()),
            ("cq_su2_star_cop", self.cq_su2_star_cop.clone()),
            ("double_q", self.double_q.clone()),
            ("bicross_q", self.bicross_q.clone()),
            ("u_su2", self.u_su2.clone()),
            ("c_su2", self.c_su2.clone()),
            ("u_su2_star", self.u_su2_star.clone()),
            ("c_su2_star_cop", self.c_su2_star_cop.clone()),
            ("double_0", self.double_0.clone()),
            ("bicross_0", self.bicross_0.clone()),
        ]
    }

    pub fn by_name(&self, name: &str) -> Option<HopfRef> {
        let extra: Vec<(&str, HopfRef)> = vec![
            ("cq_su2_star", self.cq_su2_star.clone()),
            ("uq_su2_t", self.uq_su2_t.clone()),
            ("mirror_t", self.mirror_t.clone()),
            ("bicross_0_l", self.bicross_0_l.clone()),
            ("spacetime_spin", self.u_su2.clone()),
            ("spacetime_bicross", self.u_su2_star.clone()),
        ];
        self.hopf_presentations()
            .into_iter()
            .chain(extra)
            .find(|(n, _)| *n == name)
            .map(|(_, h)| h)
    }

    pub fn model_names() -> Vec<&'static str> {
        vec![
            "uq_su2",
            "cq_su2",
            "uq_su2_star",
            "cq_su2_star",
            "cq_su2_star_cop",
            "double_q",
            "bicross_q",
            "u_su2",
            "c_su2",
            "u_su2_star",
            "c_su2_star_cop",
            "double_0",
            "bicross_0",
            "uq_su2_t",
            "mirror_t",
            "bicross_0_l",
            "spacetime_spin",
            "spacetime_bicross",
        ]
    }
}

// ---- small element-building helpers shared by the model constructors ----

/// Word from letters with signed exponents (negative = inverse letter).
pub(crate) fn word(p: &Presentation, letters: &[(LetterId, i64)]) -> Word {
    let mut parts: Vec<Word> = Vec::new();
    for &(l, e) in letters {
        parts.push(p.letter_ipow(l, e).expect("inverse letter missing"));
    }
    let slices: Vec<&[(LetterId, u32)]> = parts.iter().map(|w| w.0.as_slice()).collect();
    Word::concat(&slices)
}

/// Element from (coefficient, word-spec) pairs.
pub(crate) fn elem(p: &Presentation, terms: &[(Scalar, &[(LetterId, i64)])]) -> NCElement {
    let mut out = NCElement::zero();
    for (c, ls) in terms {
        out.add_term(word(p, ls), c.clone()).expect("elem");
    }
    out
}

/// q^(k/2) in the given ring.
pub(crate) fn qh(ring: &ScalarRing, k: i64) -> Scalar {
    ring.q_half_pow(k)
}
