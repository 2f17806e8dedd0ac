//! Hopf-algebra structure over presentations: coproduct, counit, antipode,
//! star, tensor powers, dual pairings, covariant actions, and the axiom
//! verifiers. Structure maps extend from generators by (anti)multiplicative
//! structural recursion with memoization keyed on normal-form words.

use crate::coeffs::Scalar;
use crate::error::AlgError;
use crate::ncalg::{LetterId, NCElement, PresRef, Word};
use crate::report::Check;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

/// Coproduct of a single letter: finite sum of (left word, right word, coeff),
/// both words in normal form.
pub type DeltaEntry = Vec<(Word, Word, Scalar)>;

pub struct Coalgebra {
    pub delta: BTreeMap<LetterId, DeltaEntry>,
    pub counit: BTreeMap<LetterId, Scalar>,
    /// May be partial; antipode() fails with AntipodeUndefined on gaps.
    pub antipode: BTreeMap<LetterId, NCElement>,
}

pub struct HopfPresentation {
    pub alg: PresRef,
    pub coalg: Option<Coalgebra>,
    pub star: Option<BTreeMap<LetterId, NCElement>>,
    delta_cache: RwLock<HashMap<Word, DeltaEntry>>,
    antipode_cache: RwLock<HashMap<Word, NCElement>>,
}

pub type HopfRef = Arc<HopfPresentation>;

impl HopfPresentation {
    pub fn new(alg: PresRef, coalg: Option<Coalgebra>, star: Option<BTreeMap<LetterId, NCElement>>) -> HopfRef {
        Arc::new(HopfPresentation {
            alg,
            coalg,
            star,
            delta_cache: RwLock::new(HashMap::new()),
            antipode_cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn name(&self) -> &str {
        &self.alg.name
    }

    fn coalg(&self) -> Result<&Coalgebra, AlgError> {
        self.coalg
            .as_ref()
            .ok_or_else(|| AlgError::ModeUnsupported(format!("{} carries no coalgebra", self.alg.name)))
    }

    /// Coproduct of a normal-form word, memoized.
    pub fn delta_word(self: &Arc<Self>, w: &Word) -> Result<DeltaEntry, AlgError> {
        if let Some(hit) = self.delta_cache.read().unwrap().get(w) {
            return Ok(hit.clone());
        }
        let coalg = self.coalg()?;
        let mut acc: BTreeMap<(Word, Word), Scalar> = BTreeMap::new();
        acc.insert((Word::one(), Word::one()), self.alg.ring.one());
        for (l, e) in &w.0 {
            let dl = coalg
                .delta
                .get(l)
                .ok_or_else(|| AlgError::UnknownLetter(self.alg.letter_name(*l).to_string()))?;
            for _ in 0..*e {
                let mut next: BTreeMap<(Word, Word), Scalar> = BTreeMap::new();
                for ((a, b), c) in &acc {
                    for (x, y, k) in dl {
                        // multiply legwise, then renormalize each leg
                        let left = self.alg.normal_form(&NCElement::from_term(a.mul(x), c.mul(k)?))?;
                        for (wl, cl) in &left.terms {
                            let right =
                                self.alg.normal_form(&NCElement::from_term(b.mul(y), cl.clone()))?;
                            for (wr, cr) in &right.terms {
                                let key = (wl.clone(), wr.clone());
                                match next.get_mut(&key) {
                                    Some(acc_c) => {
                                        *acc_c = acc_c.add(cr)?;
                                        if acc_c.is_zero() {
                                            next.remove(&key);
                                        }
                                    }
                                    None => {
                                        next.insert(key, cr.clone());
                                    }
                                }
                            }
                        }
                    }
                }
                acc = next;
            }
        }
        let entry: DeltaEntry = acc.into_iter().map(|((a, b), c)| (a, b, c)).collect();
        self.delta_cache.write().unwrap().insert(w.clone(), entry.clone());
        Ok(entry)
    }

    pub fn coproduct(self: &Arc<Self>, x: &NCElement) -> Result<TensorElement, AlgError> {
        let mut out = TensorElement::zero(vec![self.clone(), self.clone()]);
        for (w, c) in &x.terms {
            for (a, b, k) in self.delta_word(w)? {
                out.add_term(vec![a, b], c.mul(&k)?)?;
            }
        }
        Ok(out)
    }

    pub fn counit_word(&self, w: &Word) -> Result<Scalar, AlgError> {
        let coalg = self.coalg()?;
        let mut acc = self.alg.ring.one();
        for (l, e) in &w.0 {
            let el = coalg
                .counit
                .get(l)
                .ok_or_else(|| AlgError::UnknownLetter(self.alg.letter_name(*l).to_string()))?;
            acc = acc.mul(&el.pow(*e)?)?;
        }
        Ok(acc)
    }

    pub fn counit(&self, x: &NCElement) -> Result<Scalar, AlgError> {
        let mut acc = self.alg.ring.zero();
        for (w, c) in &x.terms {
            acc = acc.add(&c.mul(&self.counit_word(w)?)?)?;
        }
        Ok(acc)
    }

    pub fn antipode_word(&self, w: &Word) -> Result<NCElement, AlgError> {
        if let Some(hit) = self.antipode_cache.read().unwrap().get(w) {
            return Ok(hit.clone());
        }
        let coalg = self.coalg()?;
        let mut acc = NCElement::one(&self.alg.ring);
        // anti-multiplicative: reverse the word
        for (l, e) in w.0.iter().rev() {
            let sl = coalg
                .antipode
                .get(l)
                .ok_or_else(|| AlgError::AntipodeUndefined(self.alg.letter_name(*l).to_string()))?;
            let sl_pow = self.alg.pow(sl, *e)?;
            acc = self.alg.mul(&acc, &sl_pow)?;
        }
        self.antipode_cache.write().unwrap().insert(w.clone(), acc.clone());
        Ok(acc)
    }

    pub fn antipode(&self, x: &NCElement) -> Result<NCElement, AlgError> {
        let mut out = NCElement::zero();
        for (w, c) in &x.terms {
            out = out.add(&self.antipode_word(w)?.scale(c)?)?;
        }
        self.alg.normal_form(&out)
    }

    /// Whether S is defined on every letter of the word.
    pub fn antipode_defined_on(&self, w: &Word) -> bool {
        match &self.coalg {
            None => false,
            Some(c) => w.0.iter().all(|(l, _)| c.antipode.contains_key(l)),
        }
    }

    /// Star: antilinear anti-homomorphism from the per-letter table.
    pub fn star(&self, x: &NCElement) -> Result<NCElement, AlgError> {
        let table = self
            .star
            .as_ref()
            .ok_or_else(|| AlgError::ModeUnsupported(format!("{} has no star structure", self.alg.name)))?;
        let mut out = NCElement::zero();
        for (w, c) in &x.terms {
            let mut acc = NCElement::one(&self.alg.ring);
            for (l, e) in w.0.iter().rev() {
                let sl = table
                    .get(l)
                    .ok_or_else(|| AlgError::UnknownLetter(self.alg.letter_name(*l).to_string()))?;
                acc = self.alg.mul(&acc, &self.alg.pow(sl, *e)?)?;
            }
            out = out.add(&acc.scale(&c.conj())?)?;
        }
        self.alg.normal_form(&out)
    }

    /// Inverse antipode on a letter. Tries a direct table inversion first
    /// (works when S sends letters to scalar multiples of letters), then a
    /// linear solve over normal words of bounded degree.
    pub fn antipode_inverse_letter(&self, m: LetterId) -> Result<NCElement, AlgError> {
        let coalg = self.coalg()?;
        // direct scan: S(l) = c * [m]
        for (l, sl) in &coalg.antipode {
            if sl.terms.len() == 1 {
                let (w, c) = sl.terms.iter().next().unwrap();
                if *w == Word::letter(m) {
                    let inv = self.alg.ring.one().div(c)?;
                    return Ok(NCElement::from_term(Word::letter(*l), inv));
                }
            }
        }
        // linear solve: find x with S(x) = m over words of degree <= 3
        let target = NCElement::from_letter(m, &self.alg.ring);
        for deg in 1..=3u64 {
            let basis = self.alg.normal_words(deg);
            if let Some(sol) = self.solve_linear_antipode(&basis, &target)? {
                return Ok(sol);
            }
        }
        Err(AlgError::AntipodeNotInvertible(self.alg.letter_name(m).to_string()))
    }

    fn solve_linear_antipode(
        &self,
        basis: &[Word],
        target: &NCElement,
    ) -> Result<Option<NCElement>, AlgError> {
        // columns: S(basis word); solve sum x_i S(w_i) = target
        let mut images = Vec::new();
        for w in basis {
            if !self.antipode_defined_on(w) {
                return Ok(None);
            }
            images.push(self.antipode(&NCElement::from_term(w.clone(), self.alg.ring.one()))?);
        }
        // collect row index (words occurring anywhere)
        let mut rows: BTreeMap<Word, usize> = BTreeMap::new();
        for img in images.iter().chain(std::iter::once(target)) {
            for w in img.terms.keys() {
                let n = rows.len();
                rows.entry(w.clone()).or_insert(n);
            }
        }
        let nrows = rows.len();
        let ncols = images.len();
        let zero = self.alg.ring.zero();
        let mut mat = vec![vec![zero.clone(); ncols + 1]; nrows];
        for (j, img) in images.iter().enumerate() {
            for (w, c) in &img.terms {
                mat[rows[w]][j] = c.clone();
            }
        }
        for (w, c) in &target.terms {
            mat[rows[w]][ncols] = c.clone();
        }
        // gaussian elimination over the scalar field
        let mut pivot_row = 0usize;
        let mut pivots = Vec::new();
        for col in 0..ncols {
            let find = (pivot_row..nrows).find(|&r| !mat[r][col].is_zero());
            let r = match find {
                None => continue,
                Some(r) => r,
            };
            mat.swap(pivot_row, r);
            let inv = self.alg.ring.one().div(&mat[pivot_row][col].clone())?;
            for c in col..=ncols {
                mat[pivot_row][c] = mat[pivot_row][c].mul(&inv)?;
            }
            for r in 0..nrows {
                if r != pivot_row && !mat[r][col].is_zero() {
                    let f = mat[r][col].clone();
                    for c in col..=ncols {
                        let delta = mat[pivot_row][c].mul(&f)?;
                        mat[r][c] = mat[r][c].sub(&delta)?;
                    }
                }
            }
            pivots.push((pivot_row, col));
            pivot_row += 1;
            if pivot_row == nrows {
                break;
            }
        }
        // consistency: rows beyond pivots must have zero rhs
        for r in pivot_row..nrows {
            if !mat[r][ncols].is_zero() {
                return Ok(None);
            }
        }
        let mut sol = NCElement::zero();
        for (r, col) in &pivots {
            let coef = mat[*r][ncols].clone();
            if !coef.is_zero() {
                sol.add_term(basis[*col].clone(), coef)?;
            }
        }
        // verify
        let check = self.antipode(&sol)?.sub(target)?;
        if check.is_zero() {
            Ok(Some(sol))
        } else {
            Ok(None)
        }
    }

    pub fn antipode_inverse(&self, x: &NCElement) -> Result<NCElement, AlgError> {
        // S^-1 anti-multiplicative
        let mut out = NCElement::zero();
        for (w, c) in &x.terms {
            let mut acc = NCElement::one(&self.alg.ring);
            for (l, e) in w.0.iter().rev() {
                let sl = self.antipode_inverse_letter(*l)?;
                acc = self.alg.mul(&acc, &self.alg.pow(&sl, *e)?)?;
            }
            out = out.add(&acc.scale(c)?)?;
        }
        self.alg.normal_form(&out)
    }
}

impl fmt::Debug for HopfPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HopfPresentation({})", self.alg.name)
    }
}

/// Element of an n-fold tensor power of (possibly distinct) presentations.
#[derive(Clone)]
pub struct TensorElement {
    pub legs: Vec<HopfRef>,
    pub terms: BTreeMap<Vec<Word>, Scalar>,
}

impl TensorElement {
    pub fn zero(legs: Vec<HopfRef>) -> Self {
        TensorElement { legs, terms: BTreeMap::new() }
    }

    pub fn unit(legs: Vec<HopfRef>) -> Self {
        let ring = legs[0].alg.ring;
        let n = legs.len();
        let mut t = TensorElement::zero(legs);
        t.terms.insert(vec![Word::one(); n], ring.one());
        t
    }

    pub fn n_legs(&self) -> usize {
        self.legs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, words: Vec<Word>, c: Scalar) -> Result<(), AlgError> {
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(&words) {
            Some(acc) => {
                *acc = acc.add(&c)?;
                if acc.is_zero() {
                    self.terms.remove(&words);
                }
            }
            None => {
                self.terms.insert(words, c);
            }
        }
        Ok(())
    }

    pub fn add(&self, rhs: &TensorElement) -> Result<TensorElement, AlgError> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> TensorElement {
        TensorElement {
            legs: self.legs.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, rhs: &TensorElement) -> Result<TensorElement, AlgError> {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Result<TensorElement, AlgError> {
        let mut out = TensorElement::zero(self.legs.clone());
        for (w, k) in &self.terms {
            out.add_term(w.clone(), k.mul(c)?)?;
        }
        Ok(out)
    }

    /// Componentwise product in the tensor-product algebra.
    pub fn mul(&self, rhs: &TensorElement) -> Result<TensorElement, AlgError> {
        assert_eq!(self.n_legs(), rhs.n_legs(), "tensor leg count mismatch");
        let mut out = TensorElement::zero(self.legs.clone());
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                // concatenate legwise, normalize each leg, expand products
                let mut partials: Vec<(Vec<Word>, Scalar)> = vec![(Vec::new(), c1.mul(c2)?)];
                for (i, leg) in self.legs.iter().enumerate() {
                    let cat = w1[i].mul(&w2[i]);
                    let nf = leg.alg.normal_form(&NCElement::from_term(cat, leg.alg.ring.one()))?;
                    let mut next = Vec::with_capacity(partials.len() * nf.terms.len());
                    for (words, c) in &partials {
                        for (w, k) in &nf.terms {
                            let mut ws = words.clone();
                            ws.push(w.clone());
                            next.push((ws, c.mul(k)?));
                        }
                    }
                    partials = next;
                }
                for (ws, c) in partials {
                    out.add_term(ws, c)?;
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<TensorElement, AlgError> {
        let mut acc = TensorElement::unit(self.legs.clone());
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Renormalize every leg word (after embedding raw words).
    pub fn normalize(&self) -> Result<TensorElement, AlgError> {
        TensorElement::unit(self.legs.clone()).mul(self)
    }

    /// Tensor with another element on the right: legs concatenate.
    pub fn outer(&self, rhs: &TensorElement) -> Result<TensorElement, AlgError> {
        let mut legs = self.legs.clone();
        legs.extend(rhs.legs.iter().cloned());
        let mut out = TensorElement::zero(legs);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                let mut ws = w1.clone();
                ws.extend(w2.iter().cloned());
                out.add_term(ws, c1.mul(c2)?)?;
            }
        }
        Ok(out)
    }

    /// Embed an NCElement as leg `i` of an n-leg unit tensor.
    pub fn embed(x: &NCElement, legs: Vec<HopfRef>, i: usize) -> Result<TensorElement, AlgError> {
        let n = legs.len();
        let mut out = TensorElement::zero(legs);
        for (w, c) in &x.terms {
            let mut ws = vec![Word::one(); n];
            ws[i] = w.clone();
            out.add_term(ws, c.clone())?;
        }
        out.normalize()
    }

    pub fn permute_legs(&self, perm: &[usize]) -> Result<TensorElement, AlgError> {
        assert_eq!(perm.len(), self.n_legs());
        let legs: Vec<HopfRef> = perm.iter().map(|&i| self.legs[i].clone()).collect();
        let mut out = TensorElement::zero(legs);
        for (ws, c) in &self.terms {
            let new_ws: Vec<Word> = perm.iter().map(|&i| ws[i].clone()).collect();
            out.add_term(new_ws, c.clone())?;
        }
        Ok(out)
    }

    /// Apply the coproduct to leg `i`, producing n+1 legs.
    pub fn apply_delta_at(&self, i: usize) -> Result<TensorElement, AlgError> {
        let mut legs = self.legs.clone();
        legs.insert(i + 1, self.legs[i].clone());
        let mut out = TensorElement::zero(legs);
        for (ws, c) in &self.terms {
            let dl = self.legs[i].delta_word(&ws[i])?;
            for (a, b, k) in dl {
                let mut new_ws = ws.clone();
                new_ws[i] = a;
                new_ws.insert(i + 1, b);
                out.add_term(new_ws, c.mul(&k)?)?;
            }
        }
        Ok(out)
    }

    /// Apply the counit to leg `i`, removing it.
    pub fn apply_counit_at(&self, i: usize) -> Result<TensorElement, AlgError> {
        let mut legs = self.legs.clone();
        legs.remove(i);
        let mut out = TensorElement::zero(legs);
        for (ws, c) in &self.terms {
            let e = self.legs[i].counit_word(&ws[i])?;
            let mut new_ws = ws.clone();
            new_ws.remove(i);
            out.add_term(new_ws, c.mul(&e)?)?;
        }
        Ok(out)
    }

    /// Apply the antipode (or its inverse) to leg `i`.
    pub fn apply_antipode_at(&self, i: usize, inverse: bool) -> Result<TensorElement, AlgError> {
        let mut out = TensorElement::zero(self.legs.clone());
        let leg = &self.legs[i];
        for (ws, c) in &self.terms {
            let x = NCElement::from_term(ws[i].clone(), leg.alg.ring.one());
            let img = if inverse { leg.antipode_inverse(&x)? } else { leg.antipode(&x)? };
            for (w, k) in &img.terms {
                let mut new_ws = ws.clone();
                new_ws[i] = w.clone();
                out.add_term(new_ws, c.mul(k)?)?;
            }
        }
        Ok(out)
    }

    /// Multiply legs i and i+1 together (they must share a presentation),
    /// contracting to n-1 legs.
    pub fn multiply_adjacent(&self, i: usize) -> Result<TensorElement, AlgError> {
        let mut legs = self.legs.clone();
        legs.remove(i + 1);
        let mut out = TensorElement::zero(legs);
        let leg = &self.legs[i];
        for (ws, c) in &self.terms {
            let prod = leg
                .alg
                .normal_form(&NCElement::from_term(ws[i].mul(&ws[i + 1]), leg.alg.ring.one()))?;
            for (w, k) in &prod.terms {
                let mut new_ws = ws.clone();
                new_ws[i] = w.clone();
                new_ws.remove(i + 1);
                out.add_term(new_ws, c.mul(k)?)?;
            }
        }
        Ok(out)
    }

    /// Collapse a single-leg tensor back to an NCElement.
    pub fn into_nc(&self) -> NCElement {
        assert_eq!(self.n_legs(), 1);
        let mut out = NCElement::zero();
        for (ws, c) in &self.terms {
            out.terms.insert(ws[0].clone(), c.clone());
        }
        out
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(ws, c)| {
                let legs: Vec<String> = ws
                    .iter()
                    .enumerate()
                    .map(|(i, w)| self.legs[i].alg.render_word(w))
                    .collect();
                format!("{}*({})", c, legs.join(" (x) "))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Verify coassociativity, counit laws, antipode laws, and compatibility of
/// the structure maps with every rewrite rule, on all normal-form words up to
/// `max_degree`.
pub fn verify_hopf_axioms(h: &HopfRef, max_degree: u64) -> Result<Vec<Check>, AlgError> {
    let mut checks = Vec::new();
    let p = &h.alg;
    let label = format!("hopf-axioms:{}", p.name);

    // structure maps must respect the rewrite rules
    for ((l1, l2), rhs) in p.rules() {
        let lhs = NCElement::from_term(Word::letter(*l1).mul(&Word::letter(*l2)), p.ring.one());
        let name = format!("rule {}{}", p.letter_name(*l1), p.letter_name(*l2));
        let d_l = h.coproduct(&lhs)?;
        let d_r = h.coproduct(rhs)?;
        checks.push(residual_check(
            &format!("{}: coproduct respects rule", name),
            &label,
            d_l.sub(&d_r)?.is_zero(),
            d_l.render(),
            d_r.render(),
        ));
        let e_l = h.counit(&lhs)?;
        let e_r = h.counit(rhs)?;
        checks.push(residual_check(
            &format!("{}: counit respects rule", name),
            &label,
            e_l.sub(&e_r)?.is_zero(),
            format!("{}", e_l),
            format!("{}", e_r),
        ));
        if h.antipode_defined_on(&Word::letter(*l1).mul(&Word::letter(*l2)))
            && rhs.terms.keys().all(|w| h.antipode_defined_on(w))
        {
            let s_l = h.antipode(&lhs)?;
            let s_r = h.antipode(rhs)?;
            checks.push(residual_check(
                &format!("{}: antipode respects rule", name),
                &label,
                s_l.sub(&s_r)?.is_zero(),
                p.render(&s_l),
                p.render(&s_r),
            ));
        }
    }

    for w in p.normal_words(max_degree) {
        let x = NCElement::from_term(w.clone(), p.ring.one());
        let wname = p.render_word(&w);
        let d = h.coproduct(&x)?;

        // coassociativity
        let left = d.apply_delta_at(0)?;
        let right = d.apply_delta_at(1)?;
        checks.push(residual_check(
            &format!("coassociativity on {}", wname),
            &label,
            left.sub(&right)?.is_zero(),
            left.render(),
            right.render(),
        ));

        // counit laws
        let cl = d.apply_counit_at(0)?.into_nc();
        let cr = d.apply_counit_at(1)?.into_nc();
        checks.push(residual_check(
            &format!("counit laws on {}", wname),
            &label,
            cl.sub(&x)?.is_zero() && cr.sub(&x)?.is_zero(),
            p.render(&cl),
            p.render(&x),
        ));

        // antipode laws, where S is defined
        if h.antipode_defined_on(&w) {
            let eps = h.counit(&x)?;
            let unit = NCElement::from_term(Word::one(), eps);
            let sa = d.apply_antipode_at(0, false)?.multiply_adjacent(0)?.into_nc();
            let sb = d.apply_antipode_at(1, false)?.multiply_adjacent(0)?.into_nc();
            checks.push(residual_check(
                &format!("antipode law on {}", wname),
                &label,
                sa.sub(&unit)?.is_zero() && sb.sub(&unit)?.is_zero(),
                p.render(&sa),
                p.render(&unit),
            ));
        }
    }
    Ok(checks)
}

fn residual_check(name: &str, label: &str, pass: bool, lhs: String, rhs: String) -> Check {
    Check {
        name: name.to_string(),
        label: label.to_string(),
        pass,
        lhs,
        rhs,
        residual: if pass { "0".into() } else { "nonzero".into() },
    }
}

/// Dual pairing between two presentations, extended from generator entries by
/// the duality axioms.
pub struct PairingTable {
    pub left: HopfRef,
    pub right: HopfRef,
    entries: BTreeMap<(LetterId, LetterId), Scalar>,
    cache: RwLock<HashMap<(Word, Word), Scalar>>,
}

impl PairingTable {
    pub fn new(left: HopfRef, right: HopfRef, entries: BTreeMap<(LetterId, LetterId), Scalar>) -> Arc<Self> {
        Arc::new(PairingTable { left, right, entries, cache: RwLock::new(HashMap::new()) })
    }

    pub fn pair_words(&self, hw: &Word, aw: &Word) -> Result<Scalar, AlgError> {
        if let Some(hit) = self.cache.read().unwrap().get(&(hw.clone(), aw.clone())) {
            return Ok(hit.clone());
        }
        let ring = self.left.alg.ring;
        let result = if hw.is_one() {
            self.right.counit_word(aw)?
        } else if aw.is_one() {
            self.left.counit_word(hw)?
        } else if hw.degree() == 1 && aw.degree() == 1 {
            let hl = hw.0[0].0;
            let al = aw.0[0].0;
            self.entries.get(&(hl, al)).cloned().unwrap_or_else(|| ring.zero())
        } else if hw.degree() >= 2 {
            // <l. rest, a> = <l, a1><rest, a2>
            let (l, e) = hw.0[0];
            let head = Word::letter(l);
            let tail = Word::concat(&[&[(l, e - 1)], &hw.0[1..]]);
            let da = self.right.delta_word(aw)?;
            let mut acc = ring.zero();
            for (a1, a2, k) in da {
                let p1 = self.pair_words(&head, &a1)?;
                if p1.is_zero() {
                    continue;
                }
                let p2 = self.pair_words(&tail, &a2)?;
                acc = acc.add(&p1.mul(&p2)?.mul(&k)?)?;
            }
            acc
        } else {
            // h single letter, a of degree >= 2: <h, m.rest> = <h1, m><h2, rest>
            let (m, e) = aw.0[0];
            let head = Word::letter(m);
            let tail = Word::concat(&[&[(m, e - 1)], &aw.0[1..]]);
            let dh = self.left.delta_word(hw)?;
            let mut acc = ring.zero();
            for (h1, h2, k) in dh {
                let p1 = self.pair_words(&h1, &head)?;
                if p1.is_zero() {
                    continue;
                }
                let p2 = self.pair_words(&h2, &tail)?;
                acc = acc.add(&p1.mul(&p2)?.mul(&k)?)?;
            }
            acc
        };
        self.cache
            .write()
            .unwrap()
            .insert((hw.clone(), aw.clone()), result.clone());
        Ok(result)
    }

    pub fn pair(&self, h: &NCElement, a: &NCElement) -> Result<Scalar, AlgError> {
        let mut acc = self.left.alg.ring.zero();
        for (hw, hc) in &h.terms {
            for (aw, ac) in &a.terms {
                let p = self.pair_words(hw, aw)?;
                acc = acc.add(&p.mul(hc)?.mul(ac)?)?;
            }
        }
        Ok(acc)
    }

    /// Duality axioms on random-ish low-degree pairs:
    /// <h, ab> = <h1,a><h2,b>, <hg, a> = <h,a1><g,a2>, <Sh, a> = <h, Sa>.
    pub fn verify_duality(&self, max_degree: u64) -> Result<Vec<Check>, AlgError> {
        let mut checks = Vec::new();
        let label = format!("pairing:{}|{}", self.left.alg.name, self.right.alg.name);
        let hws = self.left.alg.normal_words(max_degree);
        let aws = self.right.alg.normal_words(max_degree);
        let ring = self.left.alg.ring;
        for hw in hws.iter().filter(|w| !w.is_one()) {
            for aw in aws.iter().filter(|w| !w.is_one()) {
                // antipode compatibility
                if self.left.antipode_defined_on(hw) && self.right.antipode_defined_on(aw) {
                    let sh = self.left.antipode(&NCElement::from_term(hw.clone(), ring.one()))?;
                    let sa = self.right.antipode(&NCElement::from_term(aw.clone(), ring.one()))?;
                    let lhs = self.pair(&sh, &NCElement::from_term(aw.clone(), ring.one()))?;
                    let rhs = self.pair(&NCElement::from_term(hw.clone(), ring.one()), &sa)?;
                    checks.push(residual_check(
                        &format!(
                            "<S {}, {}> = <{}, S {}>",
                            self.left.alg.render_word(hw),
                            self.right.alg.render_word(aw),
                            self.left.alg.render_word(hw),
                            self.right.alg.render_word(aw)
                        ),
                        &label,
                        lhs.sub(&rhs)?.is_zero(),
                        format!("{}", lhs),
                        format!("{}", rhs),
                    ));
                }
            }
        }
        // product laws on letter pairs
        for h1 in self.left.alg.letter_ids() {
            for h2 in self.left.alg.letter_ids() {
                for aw in aws.iter() {
                    let prod = self.left.alg.mul(
                        &NCElement::from_letter(h1, &ring),
                        &NCElement::from_letter(h2, &ring),
                    )?;
                    let lhs = self.pair(&prod, &NCElement::from_term(aw.clone(), ring.one()))?;
                    let da = self.right.delta_word(aw)?;
                    let mut rhs = ring.zero();
                    for (a1, a2, k) in da {
                        let p1 = self.pair_words(&Word::letter(h1), &a1)?;
                        if p1.is_zero() {
                            continue;
                        }
                        let p2 = self.pair_words(&Word::letter(h2), &a2)?;
                        rhs = rhs.add(&p1.mul(&p2)?.mul(&k)?)?;
                    }
                    checks.push(residual_check(
                        &format!(
                            "<{}*{}, {}> multiplicativity",
                            self.left.alg.letter_name(h1),
                            self.left.alg.letter_name(h2),
                            self.right.alg.render_word(aw)
                        ),
                        &label,
                        lhs.sub(&rhs)?.is_zero(),
                        format!("{}", lhs),
                        format!("{}", rhs),
                    ));
                }
            }
        }
        Ok(checks)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// Covariant action of one presentation on another, extended from generator
/// entries by the module-algebra law.
pub struct ActionTable {
    pub actor: HopfRef,
    pub target: HopfRef,
    pub side: Side,
    entries: BTreeMap<(LetterId, LetterId), NCElement>,
    cache: RwLock<HashMap<(Word, Word), NCElement>>,
}

impl ActionTable {
    pub fn new(
        actor: HopfRef,
        target: HopfRef,
        side: Side,
        entries: BTreeMap<(LetterId, LetterId), NCElement>,
    ) -> Arc<Self> {
        Arc::new(ActionTable { actor, target, side, entries, cache: RwLock::new(HashMap::new()) })
    }

    pub fn entry(&self, actor_letter: LetterId, target_letter: LetterId) -> Option<&NCElement> {
        self.entries.get(&(actor_letter, target_letter))
    }

    /// h |> (target word) for a left action, word-level with memoization.
    fn act_words(&self, hw: &Word, tw: &Word) -> Result<NCElement, AlgError> {
        assert_eq!(self.side, Side::Left);
        if let Some(hit) = self.cache.read().unwrap().get(&(hw.clone(), tw.clone())) {
            return Ok(hit.clone());
        }
        let tring = self.target.alg.ring;
        let result: NCElement = if tw.is_one() {
            // h |> 1 = eps(h) 1
            let eps = self.actor.counit_word(hw)?;
            NCElement::from_term(Word::one(), eps)
        } else if hw.is_one() {
            NCElement::from_term(tw.clone(), tring.one())
        } else if hw.degree() >= 2 {
            // (l rest) |> a = l |> (rest |> a)
            let (l, e) = hw.0[0];
            let head = Word::letter(l);
            let tail = Word::concat(&[&[(l, e - 1)], &hw.0[1..]]);
            let inner = self.act_words(&tail, tw)?;
            self.act(&NCElement::from_term(head, self.actor.alg.ring.one()), &inner)?
        } else if tw.degree() == 1 {
            let l = hw.0[0].0;
            let m = tw.0[0].0;
            self.entries
                .get(&(l, m))
                .cloned()
                .ok_or_else(|| {
                    AlgError::UnregisteredLetter(format!(
                        "{} |> {}",
                        self.actor.alg.letter_name(l),
                        self.target.alg.letter_name(m)
                    ))
                })?
        } else {
            // single-letter actor on a product: h |> (m rest) = (h1 |> m)(h2 |> rest)
            let (m, e) = tw.0[0];
            let head = Word::letter(m);
            let tail = Word::concat(&[&[(m, e - 1)], &tw.0[1..]]);
            let dh = self.actor.delta_word(hw)?;
            let mut acc = NCElement::zero();
            for (h1, h2, k) in dh {
                let part1 = self.act_words(&h1, &head)?;
                if part1.is_zero() {
                    continue;
                }
                let part2 = self.act_words(&h2, &tail)?;
                let prod = self.target.alg.mul(&part1, &part2)?;
                acc = acc.add(&prod.scale(&k)?)?;
            }
            acc
        };
        let result = self.target.alg.normal_form(&result)?;
        self.cache
            .write()
            .unwrap()
            .insert((hw.clone(), tw.clone()), result.clone());
        Ok(result)
    }

    /// (target word) <| h for a right action.
    fn act_words_right(&self, tw: &Word, hw: &Word) -> Result<NCElement, AlgError> {
        assert_eq!(self.side, Side::Right);
        if let Some(hit) = self.cache.read().unwrap().get(&(hw.clone(), tw.clone())) {
            return Ok(hit.clone());
        }
        let tring = self.target.alg.ring;
        let result: NCElement = if tw.is_one() {
            let eps = self.actor.counit_word(hw)?;
            NCElement::from_term(Word::one(), eps)
        } else if hw.is_one() {
            NCElement::from_term(tw.clone(), tring.one())
        } else if hw.degree() >= 2 {
            // a <| (l rest) = (a <| l) <| rest
            let (l, e) = hw.0[0];
            let head = Word::letter(l);
            let tail = Word::concat(&[&[(l, e - 1)], &hw.0[1..]]);
            let inner_nc = self.act_words_right(tw, &head)?;
            let mut acc = NCElement::zero();
            for (w, c) in &inner_nc.terms {
                acc = acc.add(&self.act_words_right(w, &tail)?.scale(c)?)?;
            }
            acc
        } else if tw.degree() == 1 {
            let l = hw.0[0].0;
            let m = tw.0[0].0;
            self.entries
                .get(&(l, m))
                .cloned()
                .ok_or_else(|| {
                    AlgError::UnregisteredLetter(format!(
                        "{} <| {}",
                        self.target.alg.letter_name(m),
                        self.actor.alg.letter_name(l)
                    ))
                })?
        } else {
            // (m rest) <| h = (m <| h1)(rest <| h2)
            let (m, e) = tw.0[0];
            let head = Word::letter(m);
            let tail = Word::concat(&[&[(m, e - 1)], &tw.0[1..]]);
            let dh = self.actor.delta_word(hw)?;
            let mut acc = NCElement::zero();
            for (h1, h2, k) in dh {
                let part1 = self.act_words_right(&head, &h1)?;
                if part1.is_zero() {
                    continue;
                }
                let part2 = self.act_words_right(&tail, &h2)?;
                let prod = self.target.alg.mul(&part1, &part2)?;
                acc = acc.add(&prod.scale(&k)?)?;
            }
            acc
        };
        let result = self.target.alg.normal_form(&result)?;
        self.cache
            .write()
            .unwrap()
            .insert((hw.clone(), tw.clone()), result.clone());
        Ok(result)
    }

    /// Apply the action; for Side::Left this is h |> a, for Side::Right a <| h.
    pub fn act(&self, h: &NCElement, a: &NCElement) -> Result<NCElement, AlgError> {
        let mut out = NCElement::zero();
        for (hw, hc) in &h.terms {
            for (aw, ac) in &a.terms {
                let part = match self.side {
                    Side::Left => self.act_words(hw, aw)?,
                    Side::Right => self.act_words_right(aw, hw)?,
                };
                out = out.add(&part.scale(&hc.mul(ac)?)?)?;
            }
        }
        self.target.alg.normal_form(&out)
    }

    /// Turn a right action into a left action on the opposite algebra:
    /// h |> a := a <| S^-1 h. Entries are computed on generators.
    pub fn flip(&self) -> Result<Arc<ActionTable>, AlgError> {
        assert_eq!(self.side, Side::Right, "flip starts from a right action");
        let mut entries = BTreeMap::new();
        for l in self.actor.alg.letter_ids() {
            let sinv = self.actor.antipode_inverse_letter(l)?;
            for m in self.target.alg.letter_ids() {
                let img = self.act(&sinv, &NCElement::from_letter(m, &self.target.alg.ring))?;
                entries.insert((l, m), img);
            }
        }
        Ok(ActionTable::new(self.actor.clone(), self.target.clone(), Side::Left, entries))
    }
}

/// Check the module-algebra law and the representation property on words up
/// to `max_degree`.
pub fn verify_module_algebra(t: &ActionTable, max_degree: u64) -> Result<Vec<Check>, AlgError> {
    let mut checks = Vec::new();
    let label = format!("module-algebra:{}|{}", t.actor.alg.name, t.target.alg.name);
    let aring = t.actor.alg.ring;
    let tring = t.target.alg.ring;
    let target_words = t.target.alg.normal_words(max_degree);

    // unit law: h |> 1 = eps(h) 1
    for l in t.actor.alg.letter_ids() {
        let h = NCElement::from_letter(l, &aring);
        let got = t.act(&h, &NCElement::one(&tring))?;
        let want = NCElement::from_term(Word::one(), t.actor.counit(&h)?);
        checks.push(residual_check(
            &format!("{} |> 1 = eps", t.actor.alg.letter_name(l)),
            &label,
            got.sub(&want)?.is_zero(),
            t.target.alg.render(&got),
            t.target.alg.render(&want),
        ));
    }

    // module-algebra law: h |> (ab) = (h1 |> a)(h2 |> b)
    for l in t.actor.alg.letter_ids() {
        let h = NCElement::from_letter(l, &aring);
        for aw in target_words.iter().filter(|w| !w.is_one() && w.degree() <= max_degree / 2 + 1) {
            for bw in target_words.iter().filter(|w| !w.is_one() && w.degree() + aw.degree() <= max_degree) {
                let a = NCElement::from_term(aw.clone(), tring.one());
                let b = NCElement::from_term(bw.clone(), tring.one());
                let ab = t.target.alg.mul(&a, &b)?;
                let lhs = t.act(&h, &ab)?;
                let dh = t.actor.delta_word(&Word::letter(l))?;
                let mut rhs = NCElement::zero();
                for (h1, h2, k) in dh {
                    let pa = t.act(&NCElement::from_term(h1, aring.one()), &a)?;
                    let pb = t.act(&NCElement::from_term(h2, aring.one()), &b)?;
                    let (x, y) = match t.side {
                        Side::Left => (pa, pb),
                        Side::Right => (pa, pb),
                    };
                    rhs = rhs.add(&t.target.alg.mul(&x, &y)?.scale(&k)?)?;
                }
                checks.push(residual_check(
                    &format!(
                        "{} |> ({} * {})",
                        t.actor.alg.letter_name(l),
                        t.target.alg.render_word(aw),
                        t.target.alg.render_word(bw)
                    ),
                    &label,
                    lhs.sub(&rhs)?.is_zero(),
                    t.target.alg.render(&lhs),
                    t.target.alg.render(&rhs),
                ));
            }
        }
    }

    // representation property: (hg) |> a = h |> (g |> a) (left) or mirror
    let actor_letters: Vec<LetterId> = t.actor.alg.letter_ids().collect();
    for &h in &actor_letters {
        for &g in &actor_letters {
            for aw in target_words.iter().filter(|w| !w.is_one() && w.degree() <= 2) {
                let a = NCElement::from_term(aw.clone(), tring.one());
                let he = NCElement::from_letter(h, &aring);
                let ge = NCElement::from_letter(g, &aring);
                let hg = t.actor.alg.mul(&he, &ge)?;
                let (lhs, rhs) = match t.side {
                    Side::Left => (t.act(&hg, &a)?, t.act(&he, &t.act(&ge, &a)?)?),
                    Side::Right => (t.act(&hg, &a)?, t.act(&ge, &t.act(&he, &a)?)?),
                };
                checks.push(residual_check(
                    &format!(
                        "({}{}) acting on {}",
                        t.actor.alg.letter_name(h),
                        t.actor.alg.letter_name(g),
                        t.target.alg.render_word(aw)
                    ),
                    &label,
                    lhs.sub(&rhs)?.is_zero(),
                    t.target.alg.render(&lhs),
                    t.target.alg.render(&rhs),
                ));
            }
        }
    }
    Ok(checks)
}

/// Star-structure verification: every relation maps to a derivable relation
/// and star is involutive on words up to `max_degree`.
pub fn verify_star(h: &HopfRef, max_degree: u64) -> Result<Vec<Check>, AlgError> {
    let mut checks = Vec::new();
    let p = &h.alg;
    let label = format!("star:{}", p.name);
    if h.star.is_none() {
        return Ok(checks);
    }
    for ((l1, l2), rhs) in p.rules() {
        let lhs = NCElement::from_term(Word::letter(*l1).mul(&Word::letter(*l2)), p.ring.one());
        let sl = h.star(&lhs)?;
        let sr = h.star(rhs)?;
        checks.push(residual_check(
            &format!("star preserves rule {}{}", p.letter_name(*l1), p.letter_name(*l2)),
            &label,
            sl.sub(&sr)?.is_zero(),
            p.render(&sl),
            p.render(&sr),
        ));
    }
    for w in p.normal_words(max_degree) {
        let x = NCElement::from_term(w.clone(), p.ring.one());
        let ss = h.star(&h.star(&x)?)?;
        checks.push(residual_check(
            &format!("star involutive on {}", p.render_word(&w)),
            &label,
            ss.sub(&x)?.is_zero(),
            p.render(&ss),
            p.render(&x),
        ));
    }
    Ok(checks)
}
