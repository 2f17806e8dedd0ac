//! Lambda-adic presentation of the classical-limit bicrossproduct in the
//! momentum basis, with alpha = e^(lambda p0) expanded as a series. This is
//! the arena for the order-by-order cocycle and Yang-Baxter checks.

use crate::coeffs::{RationalFunction, Scalar, ScalarRing, SeriesVar, TruncSeries};
use crate::hopf::{Coalgebra, DeltaEntry, HopfPresentation, HopfRef};
use crate::ncalg::{LetterId, NCElement, PresentationBuilder, Word};
use std::collections::BTreeMap;

/// lambda^power * num/den as a series scalar.
fn lam(order: usize, power: usize, num: i64, den: i64) -> Scalar {
    let mut s = TruncSeries::zero(SeriesVar::Lambda, order);
    if power <= order {
        s.coeffs[power] = RationalFunction::from_frac(num, den);
    }
    Scalar::Ser(s)
}

/// Terms of e^(sign lambda p0): word p0^k with coefficient sign^k lambda^k / k!.
fn exp_p0(order: usize, p0: LetterId, sign: i64) -> Vec<(Word, Scalar)> {
    let mut out = Vec::new();
    let mut num = 1i64;
    let mut fact = 1i64;
    for k in 0..=order {
        if k > 0 {
            num *= sign;
            fact *= k as i64;
        }
        out.push((Word::letter_pow(p0, k as u32), lam(order, k, num, fact)));
    }
    out
}

/// The bicrossproduct in the basis p0, P+, P-, H, X_+, X_- with
/// alpha = e^(lambda p0), beta = lambda P+, gamma = lambda P-.
pub fn bicross_0_lambda(order: usize) -> HopfRef {
    bicross_0_lambda_at(order, false)
}

/// The same vector space carrying the tensor-product algebra: momentum and
/// rotation sectors commute. Products of exponentials in the displayed
/// R-matrix are taken here, then reinterpreted on the shared basis.
pub fn bicross_0_lambda_tensor(order: usize) -> HopfRef {
    bicross_0_lambda_at(order, true)
}

fn bicross_0_lambda_at(order: usize, tensor_product: bool) -> HopfRef {
    let ring = ScalarRing::lambda_adic(order);
    let name = if tensor_product { "bicross_0_l_tensor" } else { "bicross_0_l" };
    let mut b = PresentationBuilder::new(name, ring);
    let p0 = b.letter("p0");
    let pp = b.letter("P+");
    let pm = b.letter("P-");
    let h = b.letter("H");
    let xp = b.letter("X_+");
    let xm = b.letter("X_-");
    b.set_weight(p0, 0);
    let one = ring.one();

    // momentum sector commutes
    for (hi, lo) in [(pp, p0), (pm, p0), (pm, pp)] {
        b.rule(hi, lo, NCElement::from_term(Word::concat(&[&[(lo, 1), (hi, 1)]]), one.clone()));
    }
    // H p0 = p0 H; H P+- = P+- H -+ 2 P+-
    b.rule(h, p0, NCElement::from_term(Word::concat(&[&[(p0, 1), (h, 1)]]), one.clone()));
    for (lo, shift) in [(pp, -2i64), (pm, 2)] {
        let mut rhs = NCElement::from_term(Word::concat(&[&[(lo, 1), (h, 1)]]), one.clone());
        rhs.add_term(Word::letter(lo), ring.from_int(shift)).unwrap();
        b.rule(h, lo, rhs);
    }
    if tensor_product {
        for x in [xp, xm] {
            for lo in [p0, pp, pm] {
                b.rule(x, lo, NCElement::from_term(Word::concat(&[&[(lo, 1), (x, 1)]]), one.clone()));
            }
        }
    } else {
        // X_+ p0 = p0 X_+ - e^(-lambda p0) P-; X_- p0 = p0 X_- + e^(-lambda p0) P+
        for (x, pcorr, sign) in [(xp, pm, -1i64), (xm, pp, 1)] {
            let mut rhs = NCElement::from_term(Word::concat(&[&[(p0, 1), (x, 1)]]), one.clone());
            for (w, c) in exp_p0(order, p0, -1) {
                rhs.add_term(w.mul(&Word::letter(pcorr)), c.mul(&ring.from_int(sign)).unwrap())
                    .unwrap();
            }
            b.rule(x, p0, rhs);
        }
        // [X_+, P-] = 0, [X_-, P+] = 0
        b.rule(xp, pm, NCElement::from_term(Word::concat(&[&[(pm, 1), (xp, 1)]]), one.clone()));
        b.rule(xm, pp, NCElement::from_term(Word::concat(&[&[(pp, 1), (xm, 1)]]), one.clone()));
        // [X_+, P+] = (e^(lambda p0) - e^(-lambda p0))/lambda - lambda e^(-lambda p0) P+ P-
        // [X_-, P-] = the negative
        for (x, plo, sign) in [(xp, pp, 1i64), (xm, pm, -1)] {
            let mut rhs = NCElement::from_term(Word::concat(&[&[(plo, 1), (x, 1)]]), one.clone());
            let mut fact = 1i64;
            for k in 1..=order + 1 {
                fact *= k as i64;
                if k % 2 == 1 && k - 1 <= order {
                    rhs.add_term(Word::letter_pow(p0, k as u32), lam(order, k - 1, 2 * sign, fact))
                        .unwrap();
                }
            }
            for (w, c) in exp_p0(order, p0, -1) {
                let word = w.mul(&Word::concat(&[&[(pp, 1), (pm, 1)]]));
                rhs.add_term(word, c.mul(&lam(order, 1, -sign, 1)).unwrap()).unwrap();
            }
            b.rule(x, plo, rhs);
        }
    }
    // su2 sector
    let mut rhs = NCElement::from_term(Word::concat(&[&[(h, 1), (xp, 1)]]), one.clone());
    rhs.add_term(Word::letter(xp), ring.from_int(-2)).unwrap();
    b.rule(xp, h, rhs);
    let mut rhs = NCElement::from_term(Word::concat(&[&[(h, 1), (xm, 1)]]), one.clone());
    rhs.add_term(Word::letter(xm), ring.from_int(2)).unwrap();
    b.rule(xm, h, rhs);
    let mut rhs = NCElement::from_term(Word::concat(&[&[(xp, 1), (xm, 1)]]), one.clone());
    rhs.add_term(Word::letter(h), ring.from_int(-1)).unwrap();
    b.rule(xm, xp, rhs);
    let alg = b.finish();

    let mut delta: BTreeMap<LetterId, DeltaEntry> = BTreeMap::new();
    let mut counit = BTreeMap::new();
    for l in [p0, h] {
        delta.insert(
            l,
            vec![
                (Word::letter(l), Word::one(), one.clone()),
                (Word::one(), Word::letter(l), one.clone()),
            ],
        );
    }
    // Delta P+- = P+- (x) 1 + e^(lambda p0) (x) P+-
    for p in [pp, pm] {
        let mut entry = vec![(Word::letter(p), Word::one(), one.clone())];
        for (w, c) in exp_p0(order, p0, 1) {
            entry.push((w, Word::letter(p), c));
        }
        delta.insert(p, entry);
    }
    // Delta X_pm = 1 (x) X_pm + X_pm (x) e^(-lambda p0)
    //            + H/2 (x) lambda P_mp e^(-lambda p0)
    for (x, pcorr) in [(xp, pm), (xm, pp)] {
        let mut entry = vec![(Word::one(), Word::letter(x), one.clone())];
        for (w, c) in exp_p0(order, p0, -1) {
            entry.push((Word::letter(x), w, c));
        }
        for (w, c) in exp_p0(order, p0, -1) {
            entry.push((
                Word::letter(h),
                w.mul(&Word::letter(pcorr)),
                c.mul(&lam(order, 1, 1, 2)).unwrap(),
            ));
        }
        delta.insert(x, entry);
    }
    for l in [p0, pp, pm, h, xp, xm] {
        counit.insert(l, ring.zero());
    }
    let antipode =
        crate::constructions::solve_antipode(&alg, &delta, &counit, BTreeMap::new()).unwrap();
    HopfPresentation::new(alg, Some(Coalgebra { delta, counit, antipode }), None)
}
