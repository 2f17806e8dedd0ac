//! Presentation-to-presentation constructors and verifiers: the quantum
//! double, the mirror bicrossproduct, 2-cocycle twisting of Hopf algebras and
//! module algebras, quasitriangularity and Yang-Baxter checks, and the
//! q-exponential conjugation identity.

use crate::coeffs::{Scalar, ScalarRing};
use crate::error::AlgError;
use crate::hopf::{ActionTable, Coalgebra, DeltaEntry, HopfPresentation, HopfRef, PairingTable, Side, TensorElement};
use crate::ncalg::{LetterId, NCElement, PresRef, Presentation, PresentationBuilder, Word};
use crate::report::Check;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Map every letter of a word through a substitution table.
pub fn map_word(w: &Word, f: &BTreeMap<LetterId, LetterId>) -> Word {
    Word(w.0.iter().map(|(l, e)| (f[l], *e)).collect())
}

pub fn map_elem(x: &NCElement, f: &BTreeMap<LetterId, LetterId>) -> NCElement {
    NCElement { terms: x.terms.iter().map(|(w, c)| (map_word(w, f), c.clone())).collect() }
}

/// Copy letters of `src` into the builder (under `rename`), preserving order,
/// inverse pairs, and weights. Returns old-id -> new-id.
pub fn import_letters(
    b: &mut PresentationBuilder,
    src: &Presentation,
    rename: &dyn Fn(&str) -> String,
) -> BTreeMap<LetterId, LetterId> {
    let mut map = BTreeMap::new();
    for l in src.letter_ids() {
        let new = b.letter(&rename(src.letter_name(l)));
        map.insert(l, new);
    }
    for l in src.letter_ids() {
        if let Some(inv) = src.inverse_of(l) {
            if l < inv {
                b.inverse_pair(map[&l], map[&inv]);
            }
        }
        b.set_weight(map[&l], src.letter_info(l).weight);
    }
    map
}

pub fn import_rules(b: &mut PresentationBuilder, src: &Presentation, map: &BTreeMap<LetterId, LetterId>) {
    for ((l1, l2), rhs) in src.rules() {
        b.rule(map[l1], map[l2], map_elem(rhs, map));
    }
}

/// Copy letters and rules of `src` reversed, producing the opposite algebra:
/// reversed alphabet order, reversed rule words. A sorted word in the image
/// then denotes the reversed product, which matches the opposite algebra's
/// PBW basis.
pub fn import_opposite(
    b: &mut PresentationBuilder,
    src: &Presentation,
    rename: &dyn Fn(&str) -> String,
) -> BTreeMap<LetterId, LetterId> {
    let n = src.n_letters() as u32;
    let mut map = BTreeMap::new();
    for i in (0..n).rev() {
        let l = LetterId(i);
        let new = b.letter(&rename(src.letter_name(l)));
        map.insert(l, new);
    }
    for l in src.letter_ids() {
        if let Some(inv) = src.inverse_of(l) {
            if l < inv {
                b.inverse_pair(map[&l], map[&inv]);
            }
        }
        b.set_weight(map[&l], src.letter_info(l).weight);
    }
    for ((l1, l2), rhs) in src.rules() {
        // pattern l1 l2 reverses to l2 l1; every rhs word reverses too
        let new_rhs = NCElement {
            terms: rhs
                .terms
                .iter()
                .map(|(w, c)| (map_word(&w.reversed(), &map), c.clone()))
                .collect(),
        };
        b.rule(map[l2], map[l1], new_rhs);
    }
    map
}

/// Embed an element of the opposite factor: basis words reverse.
pub fn map_elem_rev(x: &NCElement, f: &BTreeMap<LetterId, LetterId>) -> NCElement {
    NCElement {
        terms: x.terms.iter().map(|(w, c)| (map_word(&w.reversed(), f), c.clone())).collect(),
    }
}

/// Invert an element: either a single invertible monomial, or a unit plus a
/// term of positive series valuation (Neumann series up to the truncation
/// order).
pub fn invert_element(p: &PresRef, x: &NCElement) -> Result<NCElement, AlgError> {
    if x.terms.len() == 1 {
        let (w, c) = x.terms.iter().next().unwrap();
        let ok = w.0.iter().all(|(l, _)| p.inverse_of(*l).is_some());
        if ok {
            let mut inv_word_parts: Vec<(LetterId, u32)> = Vec::new();
            for (l, e) in w.0.iter().rev() {
                inv_word_parts.push((p.inverse_of(*l).unwrap(), *e));
            }
            let cinv = p.ring.one().div(c)?;
            return Ok(NCElement::from_term(Word(inv_word_parts.as_slice().into()), cinv));
        }
    }
    // series route: x = c(1 - y), val(y) >= 1
    let order = p
        .ring
        .order()
        .ok_or_else(|| AlgError::ModeUnsupported("inverse of a non-monomial element needs a series ring".into()))?;
    let c = x
        .terms
        .get(&Word::one())
        .cloned()
        .ok_or_else(|| AlgError::ModeUnsupported("inverse: no unit component".into()))?;
    let cinv = p.ring.one().div(&c)?;
    let y = NCElement::one(&p.ring).sub(&x.scale(&cinv)?)?;
    for coeff in y.terms.values() {
        let val = match coeff {
            Scalar::Ser(s) => s.valuation().unwrap_or(usize::MAX),
            Scalar::Rat(_) => 0,
        };
        if val == 0 {
            return Err(AlgError::ModeUnsupported("inverse: correction has order-0 part".into()));
        }
    }
    let mut acc = NCElement::one(&p.ring);
    let mut pow = NCElement::one(&p.ring);
    for _ in 0..=order {
        pow = p.mul(&pow, &y)?;
        if pow.is_zero() {
            break;
        }
        acc = acc.add(&pow)?;
    }
    acc.scale(&cinv)
}

/// Solve the antipode law m(S (x) id) Delta(l) = eps(l) letter by letter,
/// starting from the `known` entries.
pub fn solve_antipode(
    alg: &PresRef,
    delta: &BTreeMap<LetterId, DeltaEntry>,
    counit: &BTreeMap<LetterId, Scalar>,
    known: BTreeMap<LetterId, NCElement>,
) -> Result<BTreeMap<LetterId, NCElement>, AlgError> {
    let mut table = known;
    let all: Vec<LetterId> = alg.letter_ids().collect();
    loop {
        let mut progress = false;
        for &l in &all {
            if table.contains_key(&l) {
                continue;
            }
            let entry = &delta[&l];
            // split into the diagonal part (left leg = the letter itself) and
            // the rest, whose left legs must already have known antipodes
            let mut diag = NCElement::zero();
            let mut rest_ok = true;
            let mut rest = NCElement::zero();
            for (w1, w2, c) in entry {
                if *w1 == Word::letter(l) {
                    diag.add_term(w2.clone(), c.clone())?;
                } else if w1.0.iter().all(|(m, _)| table.contains_key(m)) {
                    // S(w1) * w2
                    let mut s_acc = NCElement::one(&alg.ring);
                    for (m, e) in w1.0.iter().rev() {
                        s_acc = alg.mul(&s_acc, &alg.pow(&table[m], *e)?)?;
                    }
                    let prod = alg.mul(&s_acc, &NCElement::from_term(w2.clone(), alg.ring.one()))?;
                    rest = rest.add(&prod.scale(c)?)?;
                } else {
                    rest_ok = false;
                    break;
                }
            }
            if !rest_ok || diag.is_zero() {
                continue;
            }
            let diag_inv = match invert_element(alg, &diag) {
                Ok(v) => v,
                Err(_) => continue,
            };
            // S(l) * diag + rest = eps(l) => S(l) = (eps(l) - rest) * diag^-1
            let eps = NCElement::from_term(Word::one(), counit[&l].clone());
            let sl = alg.mul(&eps.sub(&rest)?, &diag_inv)?;
            table.insert(l, sl);
            progress = true;
        }
        if table.len() == all.len() {
            return Ok(table);
        }
        if !progress {
            let missing: Vec<String> = all
                .iter()
                .filter(|l| !table.contains_key(l))
                .map(|l| alg.letter_name(*l).to_string())
                .collect();
            return Err(AlgError::AntipodeUndefined(missing.join(",")));
        }
    }
}

/// Triple coproduct of a word, as (w1, w2, w3, coeff) tuples.
fn delta3(h: &HopfRef, w: &Word) -> Result<Vec<(Word, Word, Word, Scalar)>, AlgError> {
    let mut out = Vec::new();
    for (a, b, c1) in h.delta_word(w)? {
        for (x, y, c2) in h.delta_word(&a)? {
            out.push((x, y, b.clone(), c1.mul(&c2)?));
        }
    }
    Ok(out)
}

/// Quadruple coproduct.
fn delta4(h: &HopfRef, w: &Word) -> Result<Vec<(Word, Word, Word, Word, Scalar)>, AlgError> {
    let mut out = Vec::new();
    for (x, y, b, c1) in delta3(h, w)? {
        for (u, v, c2) in h.delta_word(&b)? {
            out.push((x.clone(), y.clone(), u, v, c1.mul(&c2)?));
        }
    }
    Ok(out)
}

/// The quantum double H |><| H^{*op}: dual letters first (reversed order so
/// sorted words are the opposite algebra's basis), then the letters of H.
/// Cross relations are derived by evaluating the double-product formula on
/// generator pairs and solving triangularly for the out-of-order products.
pub fn build_double(h: &HopfRef, dual: &HopfRef, pairing: &PairingTable) -> Result<HopfRef, AlgError> {
    let ring = h.alg.ring;
    let name = format!("double({})", h.alg.name);
    let mut b = PresentationBuilder::new(&name, ring);
    let dual_map = import_opposite(&mut b, &dual.alg, &|n| n.to_string());
    let h_map = import_letters(&mut b, &h.alg, &|n| n.to_string());
    import_rules(&mut b, &h.alg, &h_map);

    // cross products a.g = sum <g1,a1><S g3,a3> g2 (x) a2, to be solved for
    // the rules g.a -> ... ; process H-letters by increasing weight so the
    // corrections (whose H-part lost weight to the pairing) are already
    // expressible.
    let mut h_letters: Vec<LetterId> = h.alg.letter_ids().collect();
    h_letters.sort_by_key(|l| h.alg.letter_info(*l).weight);
    let dual_letters: Vec<LetterId> = dual.alg.letter_ids().collect();

    let mut cross: BTreeMap<(LetterId, LetterId), NCElement> = BTreeMap::new();
    for &g in &h_letters {
        let trip_g = delta3(h, &Word::letter(g))?;
        for &al in &dual_letters {
            let trip_a = delta3(dual, &Word::letter(al))?;
            // assemble E = sum c * [h-word g2][dual-word a2] and split off the
            // diagonal term g2 = g, a2 = al
            let mut diag = ring.zero();
            let mut others: Vec<(Word, Word, Scalar)> = Vec::new();
            for (g1, g2, g3, cg) in &trip_g {
                let sg3 = h.antipode(&NCElement::from_term(g3.clone(), ring.one()))?;
                for (a1, a2, a3, ca) in &trip_a {
                    let p1 = pairing.pair_words(g1, a1)?;
                    if p1.is_zero() {
                        continue;
                    }
                    let p2 = pairing.pair(&sg3, &NCElement::from_term(a3.clone(), ring.one()))?;
                    if p2.is_zero() {
                        continue;
                    }
                    let c = p1.mul(&p2)?.mul(cg)?.mul(ca)?;
                    if c.is_zero() {
                        continue;
                    }
                    if *g2 == Word::letter(g) && *a2 == Word::letter(al) {
                        diag = diag.add(&c)?;
                    } else {
                        others.push((g2.clone(), a2.clone(), c));
                    }
                }
            }
            if diag.is_zero() {
                return Err(AlgError::NonPolynomialCrossRelation(format!(
                    "no diagonal term for ({}, {})",
                    h.alg.letter_name(g),
                    dual.alg.letter_name(al)
                )));
            }
            // normalize the correction terms into dual-first form using the
            // rules derived so far
            let solver = assemble_partial(&b_spec(&name, ring, &dual.alg, &h.alg, &dual_map, &h_map, &cross))?;
            let mut corr = NCElement::zero();
            for (g2, a2, c) in others {
                let w = map_word(&g2, &h_map).mul(&map_word(&a2.reversed(), &dual_map));
                corr.add_term(w, c)?;
            }
            let corr_nf = solver.normal_form(&corr)?;
            // check dual-first
            let boundary = dual.alg.n_letters() as u32;
            for w in corr_nf.terms.keys() {
                let mut seen_h = false;
                for (l, _) in &w.0 {
                    if l.0 >= boundary {
                        seen_h = true;
                    } else if seen_h {
                        return Err(AlgError::NonPolynomialCrossRelation(format!(
                            "correction for ({}, {}) not reducible to dual-first form",
                            h.alg.letter_name(g),
                            dual.alg.letter_name(al)
                        )));
                    }
                }
            }
            // a.g = diag * (g.a) + corr  =>  g.a = (a.g - corr)/diag
            let lhs_word = Word::letter(dual_map[&al]).mul(&Word::letter(h_map[&g]));
            let mut rhs = NCElement::from_term(lhs_word, ring.one());
            rhs = rhs.sub(&corr_nf)?;
            let diag_inv = ring.one().div(&diag)?;
            rhs = rhs.scale(&diag_inv)?;
            cross.insert((h_map[&g], dual_map[&al]), rhs);
        }
    }
    for ((g, al), rhs) in &cross {
        b.rule(*g, *al, rhs.clone());
    }

    // coalgebra: tensor of the factors; the dual factor keeps its coproduct
    // and counit, with the inverse antipode
    let mut delta = BTreeMap::new();
    let mut counit = BTreeMap::new();
    let mut antipode = BTreeMap::new();
    let hc = h.coalg.as_ref().unwrap();
    let dc = dual.coalg.as_ref().unwrap();
    for l in h.alg.letter_ids() {
        let entry: DeltaEntry = hc.delta[&l]
            .iter()
            .map(|(w1, w2, c)| (map_word(w1, &h_map), map_word(w2, &h_map), c.clone()))
            .collect();
        delta.insert(h_map[&l], entry);
        counit.insert(h_map[&l], hc.counit[&l].clone());
        antipode.insert(h_map[&l], map_elem(&hc.antipode[&l], &h_map));
    }
    for l in dual.alg.letter_ids() {
        let entry: DeltaEntry = dc.delta[&l]
            .iter()
            .map(|(w1, w2, c)| {
                (map_word(&w1.reversed(), &dual_map), map_word(&w2.reversed(), &dual_map), c.clone())
            })
            .collect();
        delta.insert(dual_map[&l], entry);
        counit.insert(dual_map[&l], dc.counit[&l].clone());
        let sinv = dual.antipode_inverse_letter(l)?;
        antipode.insert(dual_map[&l], map_elem_rev(&sinv, &dual_map));
    }
    let alg = b.finish();
    Ok(HopfPresentation::new(alg, Some(Coalgebra { delta, counit, antipode }), None))
}

/// Helper: a throwaway presentation holding the factor rules plus the cross
/// rules derived so far (used while solving).
struct PartialSpec<'a> {
    name: &'a str,
    ring: ScalarRing,
    dual: &'a Presentation,
    h: &'a Presentation,
    dual_map: &'a BTreeMap<LetterId, LetterId>,
    h_map: &'a BTreeMap<LetterId, LetterId>,
    cross: &'a BTreeMap<(LetterId, LetterId), NCElement>,
}

fn b_spec<'a>(
    name: &'a str,
    ring: ScalarRing,
    dual: &'a Presentation,
    h: &'a Presentation,
    dual_map: &'a BTreeMap<LetterId, LetterId>,
    h_map: &'a BTreeMap<LetterId, LetterId>,
    cross: &'a BTreeMap<(LetterId, LetterId), NCElement>,
) -> PartialSpec<'a> {
    PartialSpec { name, ring, dual, h, dual_map, h_map, cross }
}

fn assemble_partial(spec: &PartialSpec<'_>) -> Result<PresRef, AlgError> {
    let mut b = PresentationBuilder::new(&format!("{}#partial", spec.name), spec.ring);
    let dm = import_opposite(&mut b, spec.dual, &|n| n.to_string());
    let hm = import_letters(&mut b, spec.h, &|n| n.to_string());
    import_rules(&mut b, spec.h, &hm);
    debug_assert_eq!(&dm, spec.dual_map);
    debug_assert_eq!(&hm, spec.h_map);
    for ((g, al), rhs) in spec.cross {
        b.rule(*g, *al, rhs.clone());
    }
    Ok(b.finish())
}

/// The canonical left action of the double on H: the H-factor acts by the
/// adjoint action, the dual factor by evaluation against the first coproduct
/// leg.
pub fn double_action(
    double: &HopfRef,
    h: &HopfRef,
    pairing: &PairingTable,
) -> Result<Arc<ActionTable>, AlgError> {
    let ring = h.alg.ring;
    let mut entries = BTreeMap::new();
    for dl in double.alg.letter_ids() {
        let name = double.alg.letter_name(dl).to_string();
        for target in h.alg.letter_ids() {
            let phi = Word::letter(target);
            let img = if let Some(g) = h.alg.letter_by_name(&name) {
                // Ad_g(phi) = g1 phi S(g2)
                let mut acc = NCElement::zero();
                for (g1, g2, c) in h.delta_word(&Word::letter(g))? {
                    let s = h.antipode(&NCElement::from_term(g2, ring.one()))?;
                    let prod = h.alg.mul_many(&[
                        &NCElement::from_term(g1, ring.one()),
                        &NCElement::from_term(phi.clone(), ring.one()),
                        &s,
                    ])?;
                    acc = acc.add(&prod.scale(&c)?)?;
                }
                acc
            } else {
                // dual letter: a |> phi = <phi1, a> phi2
                let al = pairing
                    .right
                    .alg
                    .letter_by_name(&name)
                    .ok_or_else(|| AlgError::UnknownLetter(name.clone()))?;
                let mut acc = NCElement::zero();
                for (p1, p2, c) in h.delta_word(&phi)? {
                    let val = pairing.pair_words(&p1, &Word::letter(al))?;
                    if val.is_zero() {
                        continue;
                    }
                    acc.add_term(p2, val.mul(&c)?)?;
                }
                acc
            };
            entries.insert((dl, target), h.alg.normal_form(&img)?);
        }
    }
    Ok(ActionTable::new(double.clone(), h.clone(), Side::Left, entries))
}

/// The mirror product M(H) = H^cop |>< H: a tilde copy of H (carrying the
/// flipped coproduct) crossed with H via the adjoint action.
pub fn build_mirror(h: &HopfRef, tilde_suffix: &str) -> Result<HopfRef, AlgError> {
    let ring = h.alg.ring;
    let name = format!("mirror({})", h.alg.name);
    let mut b = PresentationBuilder::new(&name, ring);
    let t_map = import_letters(&mut b, &h.alg, &|n| format!("{}{}", n, tilde_suffix));
    import_rules(&mut b, &h.alg, &t_map);
    let u_map = import_letters(&mut b, &h.alg, &|n| n.to_string());
    import_rules(&mut b, &h.alg, &u_map);

    // cross rules: g . phi~ = sum (Ad_{g1} phi)~ . g2
    for g in h.alg.letter_ids() {
        for phi in h.alg.letter_ids() {
            let mut rhs = NCElement::zero();
            for (g1, g2, c) in h.delta_word(&Word::letter(g))? {
                let ad = adjoint(h, &g1, &Word::letter(phi))?;
                let ad_t = map_elem(&ad, &t_map);
                let prod = ad_t.mul_raw(&NCElement::from_term(map_word(&g2, &u_map), ring.one()))?;
                rhs = rhs.add(&prod.scale(&c)?)?;
            }
            b.rule(u_map[&g], t_map[&phi], rhs);
        }
    }

    // coalgebra
    let hc = h.coalg.as_ref().unwrap();
    let mut delta = BTreeMap::new();
    let mut counit = BTreeMap::new();
    for l in h.alg.letter_ids() {
        // tilde letters: flipped coproduct
        let entry: DeltaEntry = hc.delta[&l]
            .iter()
            .map(|(w1, w2, c)| (map_word(w2, &t_map), map_word(w1, &t_map), c.clone()))
            .collect();
        delta.insert(t_map[&l], entry);
        counit.insert(t_map[&l], hc.counit[&l].clone());
        // untilde letters: Delta(g) = (1 (x) g2) (x) ((g1 S g3)~ g4)
        let mut entry: BTreeMap<(Word, Word), Scalar> = BTreeMap::new();
        for (g1, g2, g3, g4, c) in delta4(h, &Word::letter(l))? {
            let s3 = h.antipode(&NCElement::from_term(g3, ring.one()))?;
            let coact = h.alg.mul(&NCElement::from_term(g1, ring.one()), &s3)?;
            for (cw, cc) in &coact.terms {
                let left = map_word(&g2, &u_map);
                let right = map_word(cw, &t_map).mul(&map_word(&g4, &u_map));
                let coeff = c.mul(cc)?;
                let key = (left, right);
                match entry.get_mut(&key) {
                    Some(acc) => {
                        *acc = acc.add(&coeff)?;
                        if acc.is_zero() {
                            entry.remove(&key);
                        }
                    }
                    None => {
                        entry.insert(key, coeff);
                    }
                }
            }
        }
        delta.insert(u_map[&l], entry.into_iter().map(|((a, b2), c)| (a, b2, c)).collect());
        counit.insert(u_map[&l], hc.counit[&l].clone());
    }
    let alg = b.finish();
    let antipode = solve_antipode(&alg, &delta, &counit, BTreeMap::new())?;
    Ok(HopfPresentation::new(alg, Some(Coalgebra { delta, counit, antipode }), None))
}

/// Ad_w(phi) = w1 phi S(w2) inside H.
pub fn adjoint(h: &HopfRef, w: &Word, phi: &Word) -> Result<NCElement, AlgError> {
    let ring = h.alg.ring;
    let mut acc = NCElement::zero();
    for (w1, w2, c) in h.delta_word(w)? {
        let s = h.antipode(&NCElement::from_term(w2, ring.one()))?;
        let prod = h.alg.mul_many(&[
            &NCElement::from_term(w1, ring.one()),
            &NCElement::from_term(phi.clone(), ring.one()),
            &s,
        ])?;
        acc = acc.add(&prod.scale(&c)?)?;
    }
    Ok(acc)
}

/// theta_1(phi (x) h) = phi S(h1) (x) h2 from the tensor-product Hopf algebra
/// H^cop (x) H to the mirror, computed inside the mirror presentation. The
/// input is given as (tilde word, untilde word, coeff) triples; `factor`
/// recovers the untilde word in H.
pub struct MirrorView {
    pub mirror: HopfRef,
    pub h: HopfRef,
    pub t_map: BTreeMap<LetterId, LetterId>,
    pub u_map: BTreeMap<LetterId, LetterId>,
}

impl MirrorView {
    pub fn new(mirror: &HopfRef, h: &HopfRef, tilde_suffix: &str) -> Self {
        let mut t_map = BTreeMap::new();
        let mut u_map = BTreeMap::new();
        for l in h.alg.letter_ids() {
            let tn = format!("{}{}", h.alg.letter_name(l), tilde_suffix);
            t_map.insert(l, mirror.alg.letter_by_name(&tn).unwrap());
            u_map.insert(l, mirror.alg.letter_by_name(h.alg.letter_name(l)).unwrap());
        }
        MirrorView { mirror: mirror.clone(), h: h.clone(), t_map, u_map }
    }

    /// theta_1 on phi (x) h; `inverse` uses phi h1 (x) h2 instead.
    pub fn theta1(&self, phi: &Word, hw: &Word, inverse: bool) -> Result<NCElement, AlgError> {
        let ring = self.h.alg.ring;
        let mut out = NCElement::zero();
        for (h1, h2, c) in self.h.delta_word(hw)? {
            let left_h = if inverse {
                NCElement::from_term(h1, ring.one())
            } else {
                self.h.antipode(&NCElement::from_term(h1, ring.one()))?
            };
            for (lw, lc) in &left_h.terms {
                let word = map_word(phi, &self.t_map)
                    .mul(&map_word(lw, &self.t_map))
                    .mul(&map_word(&h2, &self.u_map));
                out.add_term(word, c.mul(lc)?)?;
            }
        }
        self.mirror.alg.normal_form(&out)
    }
}

/// q-number [k; q^(2 sign)] = (1 - q^(2 sign k)) / (1 - q^(2 sign)).
fn q_number(ring: &ScalarRing, k: i64, sign: i64) -> Scalar {
    let num = ring.one().sub(&ring.q_pow(sign * k)).unwrap();
    let den = ring.one().sub(&ring.q_pow(sign)).unwrap();
    num.div(&den).unwrap()
}

/// Exponential series sum_k A^k / k! for a tensor element of positive series
/// valuation; truncation bounds the sum.
pub fn tensor_exp(a: &TensorElement) -> Result<TensorElement, AlgError> {
    let order = a.legs[0]
        .alg
        .ring
        .order()
        .ok_or_else(|| AlgError::ModeUnsupported("exponential needs a series ring".into()))?;
    let mut acc = TensorElement::unit(a.legs.clone());
    let mut pow = TensorElement::unit(a.legs.clone());
    let mut fact = 1i64;
    for k in 1..=(order as i64 + 1) {
        pow = pow.mul(a)?;
        if pow.is_zero() {
            break;
        }
        fact *= k;
        acc = acc.add(&pow.scale(&Scalar::from_frac(1, fact))?)?;
    }
    Ok(acc)
}

/// q-exponential e^A_{q^(2 sign)} = sum_k A^k / [k; q^(2 sign)]!.
pub fn tensor_q_exp(a: &TensorElement, sign: i64) -> Result<TensorElement, AlgError> {
    let ring = a.legs[0].alg.ring;
    let order = ring
        .order()
        .ok_or_else(|| AlgError::ModeUnsupported("q-exponential needs a series ring".into()))?;
    let mut acc = TensorElement::unit(a.legs.clone());
    let mut pow = TensorElement::unit(a.legs.clone());
    let mut fact = ring.one();
    for k in 1..=(order as i64 + 1) {
        pow = pow.mul(a)?;
        if pow.is_zero() {
            break;
        }
        fact = fact.mul(&q_number(&ring, k, sign))?;
        let inv = ring.one().div(&fact)?;
        acc = acc.add(&pow.scale(&inv)?)?;
    }
    Ok(acc)
}

/// Inverse of a tensor element with invertible unit part: Neumann series.
pub fn tensor_inverse(x: &TensorElement) -> Result<TensorElement, AlgError> {
    let ring = x.legs[0].alg.ring;
    let order = ring
        .order()
        .ok_or_else(|| AlgError::ModeUnsupported("tensor inverse needs a series ring".into()))?;
    let n = x.n_legs();
    let unit_key = vec![Word::one(); n];
    let c = x
        .terms
        .get(&unit_key)
        .cloned()
        .ok_or_else(|| AlgError::NotUnital)?;
    let cinv = ring.one().div(&c)?;
    let y = TensorElement::unit(x.legs.clone()).sub(&x.scale(&cinv)?)?;
    for coeff in y.terms.values() {
        let val = match coeff {
            Scalar::Ser(s) => s.valuation().unwrap_or(usize::MAX),
            Scalar::Rat(_) => 0,
        };
        if val == 0 {
            return Err(AlgError::NotUnital);
        }
    }
    let mut acc = TensorElement::unit(x.legs.clone());
    let mut pow = TensorElement::unit(x.legs.clone());
    for _ in 0..=order {
        pow = pow.mul(&y)?;
        if pow.is_zero() {
            break;
        }
        acc = acc.add(&pow)?;
    }
    acc.scale(&cinv)
}

/// R_ij embeddings of a 2-leg element into n legs.
pub fn embed_pair(r: &TensorElement, n: usize, i: usize, j: usize) -> Result<TensorElement, AlgError> {
    assert!(i != j && i < n && j < n);
    let leg = r.legs[0].clone();
    let legs = vec![leg; n];
    let mut out = TensorElement::zero(legs);
    for (ws, c) in &r.terms {
        let mut words = vec![Word::one(); n];
        words[i] = ws[0].clone();
        words[j] = ws[1].clone();
        out.add_term(words, c.clone())?;
    }
    Ok(out)
}

/// Residual of the quantum Yang-Baxter equation R12 R13 R23 - R23 R13 R12.
pub fn qybe_residual(r: &TensorElement) -> Result<TensorElement, AlgError> {
    let r12 = embed_pair(r, 3, 0, 1)?;
    let r13 = embed_pair(r, 3, 0, 2)?;
    let r23 = embed_pair(r, 3, 1, 2)?;
    let lhs = r12.mul(&r13)?.mul(&r23)?;
    let rhs = r23.mul(&r13)?.mul(&r12)?;
    lhs.sub(&rhs)
}

pub fn verify_qybe(r: &TensorElement, label: &str) -> Result<Check, AlgError> {
    let res = qybe_residual(r)?;
    Ok(Check::from_residual(
        "quantum Yang-Baxter equation",
        label,
        "R12 R13 R23".into(),
        "R23 R13 R12".into(),
        if res.is_zero() { "0".into() } else { res.render() },
    ))
}

/// Quasitriangularity axioms for R over its presentation: the two coproduct
/// laws and the intertwining of Delta with its flip on generators.
pub fn verify_quasitriangular(r: &TensorElement, label: &str) -> Result<Vec<Check>, AlgError> {
    let mut checks = Vec::new();
    let h = r.legs[0].clone();
    // (Delta (x) id) R = R13 R23
    let lhs = r.apply_delta_at(0)?;
    let r13 = embed_pair(r, 3, 0, 2)?;
    let r23 = embed_pair(r, 3, 1, 2)?;
    let rhs = r13.mul(&r23)?;
    let res1 = lhs.sub(&rhs)?;
    checks.push(Check::from_residual(
        "(Delta (x) id) R = R13 R23",
        label,
        "(Delta (x) id) R".into(),
        "R13 R23".into(),
        if res1.is_zero() { "0".into() } else { res1.render() },
    ));
    // (id (x) Delta) R = R13 R12
    let lhs = r.apply_delta_at(1)?;
    let r12 = embed_pair(r, 3, 0, 1)?;
    let rhs = r13.mul(&r12)?;
    let res2 = lhs.sub(&rhs)?;
    checks.push(Check::from_residual(
        "(id (x) Delta) R = R13 R12",
        label,
        "(id (x) Delta) R".into(),
        "R13 R12".into(),
        if res2.is_zero() { "0".into() } else { res2.render() },
    ));
    // intertwining on generators: R Delta(g) = Delta^cop(g) R
    let rinv_exists = tensor_inverse(r).is_ok();
    let _ = rinv_exists;
    for l in h.alg.letter_ids() {
        let d = h.coproduct(&NCElement::from_letter(l, &h.alg.ring))?;
        let dcop = d.permute_legs(&[1, 0])?;
        let lhs = r.mul(&d)?;
        let rhs = dcop.mul(r)?;
        let res = lhs.sub(&rhs)?;
        checks.push(Check::from_residual(
            &format!("R Delta({}) = Delta^cop({}) R", h.alg.letter_name(l), h.alg.letter_name(l)),
            label,
            "R Delta".into(),
            "Delta^cop R".into(),
            if res.is_zero() { "0".into() } else { res.render() },
        ));
    }
    Ok(checks)
}

/// A twisting 2-cocycle with its inverse.
pub struct Cocycle {
    pub chi: TensorElement,
    pub chi_inv: TensorElement,
}

/// Residuals of chi12 (Delta (x) id) chi = chi23 (id (x) Delta) chi and of
/// the counital conditions.
pub fn verify_cocycle(chi: &Cocycle, label: &str) -> Result<Vec<Check>, AlgError> {
    let mut checks = Vec::new();
    // invertibility at working order
    let prod = chi.chi.mul(&chi.chi_inv)?;
    let unit = TensorElement::unit(chi.chi.legs.clone());
    let res0 = prod.sub(&unit)?;
    checks.push(Check::from_residual(
        "chi chi^-1 = 1",
        label,
        "chi chi^-1".into(),
        "1".into(),
        if res0.is_zero() { "0".into() } else { res0.render() },
    ));
    let chi12 = embed_pair(&chi.chi, 3, 0, 1)?;
    let chi23 = embed_pair(&chi.chi, 3, 1, 2)?;
    let lhs = chi12.mul(&chi.chi.apply_delta_at(0)?)?;
    let rhs = chi23.mul(&chi.chi.apply_delta_at(1)?)?;
    let res = lhs.sub(&rhs)?;
    checks.push(Check::from_residual(
        "chi12 (Delta (x) id) chi = chi23 (id (x) Delta) chi",
        label,
        "chi12 (Delta (x) id) chi".into(),
        "chi23 (id (x) Delta) chi".into(),
        if res.is_zero() { "0".into() } else { res.render() },
    ));
    // (eps (x) id) chi = 1 = (id (x) eps) chi
    let e1 = chi.chi.apply_counit_at(0)?.into_nc();
    let e2 = chi.chi.apply_counit_at(1)?.into_nc();
    let one = NCElement::one(&chi.chi.legs[0].alg.ring);
    let ok = e1.sub(&one)?.is_zero() && e2.sub(&one)?.is_zero();
    checks.push(Check::from_residual(
        "(eps (x) id) chi = 1",
        label,
        chi.chi.legs[0].alg.render(&e1),
        "1".into(),
        if ok { "0".into() } else { "nonzero".into() },
    ));
    Ok(checks)
}

/// Twisted coproduct table: Delta_chi(g) = chi Delta(g) chi^-1 per generator.
pub fn twist_hopf(h: &HopfRef, chi: &Cocycle) -> Result<BTreeMap<LetterId, TensorElement>, AlgError> {
    let mut out = BTreeMap::new();
    for l in h.alg.letter_ids() {
        let d = h.coproduct(&NCElement::from_letter(l, &h.alg.ring))?;
        let tw = chi.chi.mul(&d)?.mul(&chi.chi_inv)?;
        out.insert(l, tw);
    }
    Ok(out)
}

/// R_chi = chi21 R chi^-1.
pub fn twist_r(r: &TensorElement, chi: &Cocycle) -> Result<TensorElement, AlgError> {
    let chi21 = chi.chi.permute_legs(&[1, 0])?;
    chi21.mul(r)?.mul(&chi.chi_inv)
}

/// One leg of a factored twist exponent: either an element of the acting
/// presentation, or a primitive derivation of the target given on letters
/// and extended by the Leibniz rule (the logarithm of a group-like letter).
#[derive(Clone)]
pub enum TwistLeg {
    Elem(NCElement),
    Derivation(BTreeMap<LetterId, NCElement>),
}

impl TwistLeg {
    fn apply(&self, action: &ActionTable, x: &NCElement) -> Result<NCElement, AlgError> {
        match self {
            TwistLeg::Elem(e) => action.act(e, x),
            TwistLeg::Derivation(table) => {
                let tring = action.target.alg.ring;
                let mut out = NCElement::zero();
                for (w, c) in &x.terms {
                    // Leibniz over the letters of the word
                    for pos in 0..w.0.len() {
                        let (l, e) = w.0[pos];
                        let img = table
                            .get(&l)
                            .cloned()
                            .unwrap_or_else(NCElement::zero);
                        if img.is_zero() {
                            continue;
                        }
                        for rep in 0..e {
                            let prefix = crate::ncalg::Word(
                                w.0[..pos]
                                    .iter()
                                    .cloned()
                                    .chain(std::iter::once((l, rep)))
                                    .filter(|(_, k)| *k > 0)
                                    .collect(),
                            );
                            let suffix = crate::ncalg::Word(
                                std::iter::once((l, e - rep - 1))
                                    .filter(|(_, k)| *k > 0)
                                    .chain(w.0[pos + 1..].iter().cloned())
                                    .collect(),
                            );
                            let mut term = NCElement::from_term(prefix, c.clone());
                            term = action.target.alg.mul(&term, &img)?;
                            term = action.target.alg.mul(
                                &term,
                                &NCElement::from_term(suffix, tring.one()),
                            )?;
                            out = out.add(&term)?;
                        }
                    }
                }
                action.target.alg.normal_form(&out)
            }
        }
    }
}

/// Twisted module-algebra product a ._chi b = . (chi^-1 |> (a (x) b)), where
/// chi^-1 is given as a product of exponentials of simple tensors A_i (x) B_i
/// over the acting presentation (B_i possibly a primitive derivation). The
/// action series terminates when the B-powers annihilate the right argument.
pub fn twisted_product(
    action: &ActionTable,
    chi_inv_factors: &[(NCElement, TwistLeg)],
    a: &NCElement,
    b: &NCElement,
    budget: usize,
) -> Result<NCElement, AlgError> {
    // expand pairs (left-acting element, right-acting element, coeff)
    let mut pairs: Vec<(NCElement, NCElement, Scalar)> =
        vec![(a.clone(), b.clone(), action.actor.alg.ring.one())];
    for (ai, bi) in chi_inv_factors.iter().rev() {
        // apply exp(A_i (x) B_i): sum_k 1/k! (A_i^k |> x)(B_i^k |> y)
        let mut next = Vec::new();
        for (x, y, c) in &pairs {
            let mut apow = NCElement::one(&action.actor.alg.ring);
            let mut yb = y.clone();
            let mut fact = 1i64;
            for k in 0..=budget {
                if k > 0 {
                    apow = action.actor.alg.mul(&apow, ai)?;
                    yb = bi.apply(action, &yb)?;
                    fact *= k as i64;
                }
                let xa = action.act(&apow, x)?;
                if k > 0 && (xa.is_zero() || yb.is_zero()) {
                    break;
                }
                if k == budget {
                    return Err(AlgError::NonTerminatingActionSeries);
                }
                next.push((xa, yb.clone(), c.mul(&Scalar::from_frac(1, fact))?));
            }
        }
        pairs = next;
    }
    let mut out = NCElement::zero();
    for (x, y, c) in pairs {
        let prod = action.target.alg.mul(&x, &y)?;
        out = out.add(&prod.scale(&c)?)?;
    }
    action.target.alg.normal_form(&out)
}

/// e_{q^2}^A B e_{q^-2}^{-A}, evaluated through the terminating recursion
/// F_0 = B, F_m = (A F_{m-1} - q^(2(m-1)) F_{m-1} A) / [m; q^2], whose sum is
/// the conjugate whenever the chain closes. When A B = q^2 B A + C with
/// [A, C] = 0 this terminates at depth two and reproduces the closed form
/// B + (q^2 - 1) B A + C. A chain that fails to terminate is refused rather
/// than truncated (sign = -1 swaps q^2 for q^-2 throughout).
pub fn q_exp_conjugate(
    a: &TensorElement,
    b: &TensorElement,
    sign: i64,
) -> Result<TensorElement, AlgError> {
    let ring = a.legs[0].alg.ring;
    let budget = 24usize;
    let mut total = b.clone();
    let mut fm = b.clone();
    for m in 1..=budget {
        let qpow = ring.q_pow(2 * sign * (m as i64 - 1));
        let afm = a.mul(&fm)?;
        let fma = fm.mul(a)?.scale(&qpow)?;
        let num = afm.sub(&fma)?;
        if num.is_zero() {
            return Ok(total);
        }
        let qm = q_number(&ring, m as i64, sign);
        let inv = ring.one().div(&qm)?;
        fm = num.scale(&inv)?;
        if fm.is_zero() {
            return Ok(total);
        }
        total = total.add(&fm)?;
    }
    Err(AlgError::RelationNotSatisfied(
        "q-exponential conjugation chain did not terminate".into(),
    ))
}
