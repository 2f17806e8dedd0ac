//! The defining representation of the q-deformed enveloping algebra, the
//! L-matrices obtained by evaluating one leg of the R-matrix, and the quantum
//! Killing form identifying the braided function algebra with the enveloping
//! algebra.

use crate::coeffs::Scalar;
use crate::error::AlgError;
use crate::hopf::{HopfRef, TensorElement};
use crate::ncalg::{LetterId, NCElement, Word};
use std::collections::BTreeMap;

/// Exact matrix over scalars.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMatrix {
    pub dim: usize,
    pub entries: Vec<Vec<Scalar>>,
}

impl RepMatrix {
    pub fn zero(dim: usize) -> Self {
        RepMatrix { dim, entries: vec![vec![Scalar::zero(); dim]; dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = RepMatrix::zero(dim);
        for i in 0..dim {
            m.entries[i][i] = Scalar::one();
        }
        m
    }

    pub fn mul(&self, rhs: &RepMatrix) -> Result<RepMatrix, AlgError> {
        assert_eq!(self.dim, rhs.dim);
        let mut out = RepMatrix::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut acc = Scalar::zero();
                for k in 0..self.dim {
                    if self.entries[i][k].is_zero() || rhs.entries[k][j].is_zero() {
                        continue;
                    }
                    acc = acc.add(&self.entries[i][k].mul(&rhs.entries[k][j])?)?;
                }
                out.entries[i][j] = acc;
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &RepMatrix) -> Result<RepMatrix, AlgError> {
        assert_eq!(self.dim, rhs.dim);
        let mut out = RepMatrix::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.entries[i][j] = self.entries[i][j].add(&rhs.entries[i][j])?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Result<RepMatrix, AlgError> {
        let mut out = RepMatrix::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.entries[i][j] = self.entries[i][j].mul(c)?;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &RepMatrix) -> Result<RepMatrix, AlgError> {
        self.add(&rhs.scale(&Scalar::from_int(-1))?)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|row| row.iter().all(|c| c.is_zero()))
    }

    pub fn kron(&self, rhs: &RepMatrix) -> Result<RepMatrix, AlgError> {
        let d = self.dim * rhs.dim;
        let mut out = RepMatrix::zero(d);
        for i in 0..self.dim {
            for j in 0..self.dim {
                if self.entries[i][j].is_zero() {
                    continue;
                }
                for k in 0..rhs.dim {
                    for l in 0..rhs.dim {
                        out.entries[i * rhs.dim + k][j * rhs.dim + l] =
                            self.entries[i][j].mul(&rhs.entries[k][l])?;
                    }
                }
            }
        }
        Ok(out)
    }
}

/// The spin-1/2 representation of the exact-q enveloping algebra:
/// rho(K) = diag(s, 1/s), rho(X_+) = E12, rho(X_-) = E21.
pub struct SpinHalf {
    pub h: HopfRef,
    images: BTreeMap<LetterId, RepMatrix>,
}

impl SpinHalf {
    pub fn new(uq: &HopfRef) -> Self {
        let ring = uq.alg.ring;
        let mut images = BTreeMap::new();
        let mut m = RepMatrix::zero(2);
        m.entries[0][0] = ring.q_half_pow(1);
        m.entries[1][1] = ring.q_half_pow(-1);
        images.insert(uq.alg.letter_by_name("K").unwrap(), m);
        let mut m = RepMatrix::zero(2);
        m.entries[0][0] = ring.q_half_pow(-1);
        m.entries[1][1] = ring.q_half_pow(1);
        images.insert(uq.alg.letter_by_name("K^-1").unwrap(), m);
        let mut m = RepMatrix::zero(2);
        m.entries[0][1] = ring.one();
        images.insert(uq.alg.letter_by_name("X_+").unwrap(), m);
        let mut m = RepMatrix::zero(2);
        m.entries[1][0] = ring.one();
        images.insert(uq.alg.letter_by_name("X_-").unwrap(), m);
        SpinHalf { h: uq.clone(), images }
    }

    pub fn rho_word(&self, w: &Word) -> Result<RepMatrix, AlgError> {
        let mut acc = RepMatrix::identity(2);
        for (l, e) in &w.0 {
            let img = self
                .images
                .get(l)
                .ok_or_else(|| AlgError::UnknownLetter(self.h.alg.letter_name(*l).into()))?;
            for _ in 0..*e {
                acc = acc.mul(img)?;
            }
        }
        Ok(acc)
    }

    pub fn rho(&self, x: &NCElement) -> Result<RepMatrix, AlgError> {
        let mut acc = RepMatrix::zero(2);
        for (w, c) in &x.terms {
            acc = acc.add(&self.rho_word(w)?.scale(c)?)?;
        }
        Ok(acc)
    }

    /// Evaluate every leg of a tensor element, Kronecker style.
    pub fn rho_tensor(&self, x: &TensorElement) -> Result<RepMatrix, AlgError> {
        let n = x.n_legs();
        let dim = 1usize << n;
        let mut acc = RepMatrix::zero(dim);
        for (ws, c) in &x.terms {
            let mut m = self.rho_word(&ws[0])?;
            for w in &ws[1..] {
                m = m.kron(&self.rho_word(w)?)?;
            }
            acc = acc.add(&m.scale(c)?)?;
        }
        Ok(acc)
    }

    /// The R-matrix in the representation: rho (x) rho of
    /// q^(H(x)H/2) e_{q^-2}^(mu K X_+ (x) K^-1 X_-), which truncates exactly
    /// because rho(X_pm)^2 = 0.
    pub fn r_matrix(&self) -> Result<RepMatrix, AlgError> {
        let ring = self.h.alg.ring;
        let s = ring.q_half_pow(1);
        let sinv = ring.q_half_pow(-1);
        let mut gauss = RepMatrix::zero(4);
        gauss.entries[0][0] = s.clone();
        gauss.entries[1][1] = sinv.clone();
        gauss.entries[2][2] = sinv.clone();
        gauss.entries[3][3] = s.clone();
        let k = self.h.alg.letter_by_name("K").unwrap();
        let kinv = self.h.alg.letter_by_name("K^-1").unwrap();
        let xp = self.h.alg.letter_by_name("X_+").unwrap();
        let xm = self.h.alg.letter_by_name("X_-").unwrap();
        let kxp = self.rho_word(&Word::concat(&[&[(k, 1), (xp, 1)]]))?;
        let kxm = self.rho_word(&Word::concat(&[&[(kinv, 1), (xm, 1)]]))?;
        let nil = kxp.kron(&kxm)?.scale(&ring.mu())?;
        gauss.mul(&RepMatrix::identity(4).add(&nil)?)
    }

    /// Inverse R-matrix: e_{q^2}^(-mu K X_+ (x) K^-1 X_-) q^(-H(x)H/2).
    pub fn r_matrix_inv(&self) -> Result<RepMatrix, AlgError> {
        let ring = self.h.alg.ring;
        let s = ring.q_half_pow(1);
        let sinv = ring.q_half_pow(-1);
        let mut gauss = RepMatrix::zero(4);
        gauss.entries[0][0] = sinv.clone();
        gauss.entries[1][1] = s.clone();
        gauss.entries[2][2] = s.clone();
        gauss.entries[3][3] = sinv.clone();
        let k = self.h.alg.letter_by_name("K").unwrap();
        let kinv = self.h.alg.letter_by_name("K^-1").unwrap();
        let xp = self.h.alg.letter_by_name("X_+").unwrap();
        let xm = self.h.alg.letter_by_name("X_-").unwrap();
        let kxp = self.rho_word(&Word::concat(&[&[(k, 1), (xp, 1)]]))?;
        let kxm = self.rho_word(&Word::concat(&[&[(kinv, 1), (xm, 1)]]))?;
        let nil = kxp.kron(&kxm)?.scale(&ring.mu().neg())?;
        RepMatrix::identity(4).add(&nil)?.mul(&gauss)
    }
}

/// The L-matrices with universal entries:
/// L+ = [[K, 0], [q^(1/2) mu X_+, K^-1]], L- = [[K^-1, -q^(3/2) mu X_-], [0, K]].
pub struct LMatrices {
    pub lplus: [[NCElement; 2]; 2],
    pub lminus: [[NCElement; 2]; 2],
}

pub fn l_matrices(uq: &HopfRef) -> LMatrices {
    let ring = uq.alg.ring;
    let k = uq.alg.letter_by_name("K").unwrap();
    let kinv = uq.alg.letter_by_name("K^-1").unwrap();
    let xp = uq.alg.letter_by_name("X_+").unwrap();
    let xm = uq.alg.letter_by_name("X_-").unwrap();
    let mu = ring.mu();
    let lplus = [
        [NCElement::from_term(Word::letter(k), ring.one()), NCElement::zero()],
        [
            NCElement::from_term(Word::letter(xp), ring.q_half_pow(1).mul(&mu).unwrap()),
            NCElement::from_term(Word::letter(kinv), ring.one()),
        ],
    ];
    let lminus = [
        [
            NCElement::from_term(Word::letter(kinv), ring.one()),
            NCElement::from_term(Word::letter(xm), ring.q_half_pow(3).mul(&mu).unwrap().neg()),
        ],
        [NCElement::zero(), NCElement::from_term(Word::letter(k), ring.one())],
    ];
    LMatrices { lplus, lminus }
}

/// Extend a generator table multiplicatively to an algebra map.
pub fn algebra_map(
    src: &HopfRef,
    dst: &HopfRef,
    images: &BTreeMap<LetterId, NCElement>,
    x: &NCElement,
) -> Result<NCElement, AlgError> {
    let mut out = NCElement::zero();
    for (w, c) in &x.terms {
        let mut acc = NCElement::one(&dst.alg.ring);
        for (l, e) in &w.0 {
            let img = images
                .get(l)
                .ok_or_else(|| AlgError::UnknownLetter(src.alg.letter_name(*l).into()))?;
            acc = dst.alg.mul(&acc, &dst.alg.pow(img, *e)?)?;
        }
        out = out.add(&acc.scale(c)?)?;
    }
    dst.alg.normal_form(&out)
}

/// The quantum Killing identification of the braided function algebra with
/// the enveloping algebra: alpha -> q^H, beta -> q^(1/2) mu q^(H/2) X_-,
/// gamma -> q^(1/2) mu X_+ q^(H/2).
pub fn killing_q_images(star: &HopfRef, uq: &HopfRef) -> BTreeMap<LetterId, NCElement> {
    let ring = uq.alg.ring;
    let k = uq.alg.letter_by_name("K").unwrap();
    let kinv = uq.alg.letter_by_name("K^-1").unwrap();
    let xp = uq.alg.letter_by_name("X_+").unwrap();
    let xm = uq.alg.letter_by_name("X_-").unwrap();
    let mu = ring.mu();
    let mut images = BTreeMap::new();
    images.insert(
        star.alg.letter_by_name("alpha").unwrap(),
        NCElement::from_term(Word::letter_pow(k, 2), ring.one()),
    );
    images.insert(
        star.alg.letter_by_name("alpha^-1").unwrap(),
        NCElement::from_term(Word::letter_pow(kinv, 2), ring.one()),
    );
    images.insert(
        star.alg.letter_by_name("beta").unwrap(),
        NCElement::from_term(
            Word::concat(&[&[(k, 1), (xm, 1)]]),
            ring.q_half_pow(1).mul(&mu).unwrap(),
        ),
    );
    // gamma = q^(1/2) mu X_+ K = q^(-1/2) mu K X_+
    images.insert(
        star.alg.letter_by_name("gamma").unwrap(),
        NCElement::from_term(
            Word::concat(&[&[(k, 1), (xp, 1)]]),
            ring.q_half_pow(-1).mul(&mu).unwrap(),
        ),
    );
    images
}

/// Killing-form images of the U_q(su2*) generators: qz -> q^H, x_- -> K X_-,
/// x_+ -> q^-1 X_+ K, and the d-letter image K^-2 + q mu^2 X_+ X_-.
pub fn killing_q_star_images(star: &HopfRef, uq: &HopfRef) -> BTreeMap<LetterId, NCElement> {
    let ring = uq.alg.ring;
    let k = uq.alg.letter_by_name("K").unwrap();
    let kinv = uq.alg.letter_by_name("K^-1").unwrap();
    let xp = uq.alg.letter_by_name("X_+").unwrap();
    let xm = uq.alg.letter_by_name("X_-").unwrap();
    let mu = ring.mu();
    let mut images = BTreeMap::new();
    images.insert(
        star.alg.letter_by_name("qz").unwrap(),
        NCElement::from_term(Word::letter_pow(k, 2), ring.one()),
    );
    images.insert(
        star.alg.letter_by_name("x_-").unwrap(),
        NCElement::from_term(Word::concat(&[&[(k, 1), (xm, 1)]]), ring.one()),
    );
    images.insert(
        star.alg.letter_by_name("x_+").unwrap(),
        NCElement::from_term(Word::concat(&[&[(k, 1), (xp, 1)]]), ring.q_pow(-2)),
    );
    let mut qzb = NCElement::from_term(Word::letter_pow(kinv, 2), ring.one());
    qzb.add_term(
        Word::concat(&[&[(xp, 1), (xm, 1)]]),
        ring.q_pow(1).mul(&mu).unwrap().mul(&mu).unwrap(),
    )
    .unwrap();
    images.insert(star.alg.letter_by_name("qzb").unwrap(), qzb);
    images
}

/// Inverse of the Killing identification on the even subalgebra of the
/// enveloping algebra, by triangular elimination against the images of the
/// sorted monomials alpha^i beta^j gamma^k.
pub struct KillingInverse {
    star: HopfRef,
    uq: HopfRef,
    images: BTreeMap<LetterId, NCElement>,
    k: LetterId,
    kinv: LetterId,
    xp: LetterId,
    xm: LetterId,
}

impl KillingInverse {
    pub fn new(star: &HopfRef, uq: &HopfRef) -> Self {
        KillingInverse {
            star: star.clone(),
            uq: uq.clone(),
            images: killing_q_images(star, uq),
            k: uq.alg.letter_by_name("K").unwrap(),
            kinv: uq.alg.letter_by_name("K^-1").unwrap(),
            xp: uq.alg.letter_by_name("X_+").unwrap(),
            xm: uq.alg.letter_by_name("X_-").unwrap(),
        }
    }

    pub fn forward(&self, x: &NCElement) -> Result<NCElement, AlgError> {
        algebra_map(&self.star, &self.uq, &self.images, x)
    }

    fn monomial(&self, i: i64, j: u32, kk: u32) -> NCElement {
        let al = self.star.alg.letter_by_name("alpha").unwrap();
        let be = self.star.alg.letter_by_name("beta").unwrap();
        let ga = self.star.alg.letter_by_name("gamma").unwrap();
        let aw = self.star.alg.letter_ipow(al, i).unwrap();
        let w = Word::concat(&[&aw.0, &Word::letter_pow(be, j).0, &Word::letter_pow(ga, kk).0]);
        NCElement::from_term(w, self.star.alg.ring.one())
    }

    fn word_profile(&self, w: &Word) -> Option<(i64, u32, u32)> {
        let mut kdeg = 0i64;
        let mut m = 0u32;
        let mut n = 0u32;
        for (l, e) in &w.0 {
            if *l == self.k {
                kdeg += *e as i64;
            } else if *l == self.kinv {
                kdeg -= *e as i64;
            } else if *l == self.xp {
                m += e;
            } else if *l == self.xm {
                n += e;
            } else {
                return None;
            }
        }
        Some((kdeg, m, n))
    }

    /// Express an even element of the enveloping algebra in the braided
    /// function-algebra letters.
    pub fn inverse(&self, x: &NCElement) -> Result<NCElement, AlgError> {
        let mut residue = self.uq.alg.normal_form(x)?;
        let mut out = NCElement::zero();
        let mut guard = 0usize;
        while !residue.is_zero() {
            guard += 1;
            if guard > 10_000 {
                return Err(AlgError::NonPolynomialCrossRelation(
                    "killing inverse did not terminate".into(),
                ));
            }
            let (w, c) = residue
                .terms
                .iter()
                .max_by_key(|(w, _)| {
                    let (_, m, n) = self.word_profile(w).unwrap_or((0, 0, 0));
                    (m + n, (*w).clone())
                })
                .map(|(w, c)| (w.clone(), c.clone()))
                .unwrap();
            let (a, m, n) = self
                .word_profile(&w)
                .ok_or_else(|| AlgError::NonPolynomialCrossRelation("foreign letter".into()))?;
            let par = a - m as i64 - n as i64;
            if par % 2 != 0 {
                return Err(AlgError::NonPolynomialCrossRelation(format!(
                    "odd parity word {}",
                    self.uq.alg.render_word(&w)
                )));
            }
            let i = par / 2;
            let cand = self.monomial(i, n, m);
            let img = self.forward(&cand)?;
            let lead = img
                .terms
                .get(&w)
                .ok_or_else(|| AlgError::NonPolynomialCrossRelation("leading term mismatch".into()))?;
            let f = c.div(lead)?;
            out = out.add(&cand.scale(&f)?)?;
            residue = residue.sub(&img.scale(&f)?)?;
        }
        self.star.alg.normal_form(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::base;

    #[test]
    fn rho_respects_relations() {
        let uq = base::uq_su2();
        let rep = SpinHalf::new(&uq);
        for ((l1, l2), rhs) in uq.alg.rules() {
            let lhs =
                NCElement::from_term(Word::letter(*l1).mul(&Word::letter(*l2)), uq.alg.ring.one());
            let a = rep.rho(&lhs).unwrap();
            let b = rep.rho(rhs).unwrap();
            assert!(a.sub(&b).unwrap().is_zero(), "rho breaks a defining relation");
        }
    }

    #[test]
    fn rho_of_k_is_diagonal() {
        let uq = base::uq_su2();
        let rep = SpinHalf::new(&uq);
        let k = uq.alg.letter_by_name("K").unwrap();
        let m = rep.rho(&NCElement::from_letter(k, &uq.alg.ring)).unwrap();
        assert_eq!(m.entries[0][0], uq.alg.ring.q_half_pow(1));
        assert_eq!(m.entries[1][1], uq.alg.ring.q_half_pow(-1));
        assert!(m.entries[0][1].is_zero() && m.entries[1][0].is_zero());
    }

    #[test]
    fn killing_inverse_round_trip() {
        let uq = base::uq_su2();
        let star = base::cq_su2_star(false);
        let ki = KillingInverse::new(&star, &uq);
        let al = star.alg.letter_by_name("alpha").unwrap();
        let be = star.alg.letter_by_name("beta").unwrap();
        let ga = star.alg.letter_by_name("gamma").unwrap();
        for x in [
            NCElement::from_letter(al, &star.alg.ring),
            NCElement::from_letter(be, &star.alg.ring),
            star.alg
                .mul(
                    &NCElement::from_letter(ga, &star.alg.ring),
                    &NCElement::from_letter(be, &star.alg.ring),
                )
                .unwrap(),
        ] {
            let fwd = ki.forward(&x).unwrap();
            let back = ki.inverse(&fwd).unwrap();
            let nf = star.alg.normal_form(&x).unwrap();
            assert!(back.sub(&nf).unwrap().is_zero());
        }
    }
}
