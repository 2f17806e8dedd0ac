//! Noncommutative polynomial arithmetic over `Scalar` coefficients with a
//! rewriting engine that straightens words to a PBW-style normal form.
//!
//! A presentation fixes an ordered alphabet and a set of two-letter rewrite
//! rules. Normal-form words are sorted in the alphabet order with inverse
//! pairs cancelled; rules whose left side is an in-order pair (determinant
//! style eliminations) must pair alphabet-adjacent letters so that sorting
//! brings the redex together.

use crate::coeffs::{Scalar, ScalarRing};
use crate::error::AlgError;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LetterId(pub u32);

#[derive(Clone, Debug)]
pub struct LetterInfo {
    pub name: String,
    pub inverse_of: Option<LetterId>,
    /// Termination weight. Group-like letters weigh 0; ladder-type letters 1.
    pub weight: u64,
}

/// A word: sequence of (letter, positive exponent) with distinct adjacent
/// letters. The empty word is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<(LetterId, u32)>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: LetterId) -> Self {
        Word(vec![(l, 1)])
    }

    pub fn letter_pow(l: LetterId, e: u32) -> Self {
        if e == 0 {
            Word::one()
        } else {
            Word(vec![(l, e)])
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|(_, e)| *e as u64).sum()
    }

    /// Concatenate several segments, merging equal adjacent letters.
    pub fn concat(parts: &[&[(LetterId, u32)]]) -> Word {
        let mut out: Vec<(LetterId, u32)> = Vec::new();
        for part in parts {
            for &(l, e) in *part {
                if e == 0 {
                    continue;
                }
                match out.last_mut() {
                    Some((l0, e0)) if *l0 == l => *e0 += e,
                    _ => out.push((l, e)),
                }
            }
        }
        Word(out)
    }

    pub fn mul(&self, rhs: &Word) -> Word {
        Word::concat(&[&self.0, &rhs.0])
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().cloned().collect())
    }

    fn inversions(&self) -> u64 {
        let mut inv = 0u64;
        for i in 0..self.0.len() {
            for j in (i + 1)..self.0.len() {
                if self.0[i].0 > self.0[j].0 {
                    inv += self.0[i].1 as u64 * self.0[j].1 as u64;
                }
            }
        }
        inv
    }

    fn exp_profile(&self, n_letters: usize) -> Vec<u64> {
        let mut v = vec![0u64; n_letters];
        for (l, e) in &self.0 {
            v[l.0 as usize] += *e as u64;
        }
        v
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W[")?;
        for (l, e) in &self.0 {
            write!(f, " {}^{}", l.0, e)?;
        }
        write!(f, " ]")
    }
}

/// Termination measure: (weighted degree, inversion count, exponent profile
/// read from the largest letter down). Rule right-hand sides must be strictly
/// smaller than the left-hand side; in series rings the check is waived for
/// terms whose coefficient has positive valuation, since truncation kills
/// their descendants.
fn word_measure(w: &Word, letters: &[LetterInfo]) -> (u64, u64, Vec<u64>) {
    let weighted: u64 = w.0.iter().map(|(l, e)| letters[l.0 as usize].weight * *e as u64).sum();
    let mut prof = w.exp_profile(letters.len());
    prof.reverse();
    (weighted, w.inversions(), prof)
}

fn scalar_valuation(c: &Scalar) -> usize {
    match c {
        Scalar::Rat(_) => 0,
        Scalar::Ser(s) => s.valuation().unwrap_or(usize::MAX),
    }
}

#[derive(Clone, PartialEq)]
pub struct NCElement {
    pub terms: BTreeMap<Word, Scalar>,
}

impl NCElement {
    pub fn zero() -> Self {
        NCElement { terms: BTreeMap::new() }
    }

    pub fn one(ring: &ScalarRing) -> Self {
        NCElement::from_term(Word::one(), ring.one())
    }

    pub fn from_term(w: Word, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCElement { terms }
    }

    pub fn from_letter(l: LetterId, ring: &ScalarRing) -> Self {
        NCElement::from_term(Word::letter(l), ring.one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &NCElement) -> Result<NCElement, AlgError> {
        let mut out = self.terms.clone();
        for (w, c) in &rhs.terms {
            match out.get_mut(w) {
                Some(acc) => {
                    *acc = acc.add(c)?;
                    if acc.is_zero() {
                        out.remove(w);
                    }
                }
                None => {
                    out.insert(w.clone(), c.clone());
                }
            }
        }
        Ok(NCElement { terms: out })
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) -> Result<(), AlgError> {
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(&w) {
            Some(acc) => {
                *acc = acc.add(&c)?;
                if acc.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
        Ok(())
    }

    pub fn neg(&self) -> NCElement {
        NCElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, rhs: &NCElement) -> Result<NCElement, AlgError> {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Result<NCElement, AlgError> {
        if c.is_zero() {
            return Ok(NCElement::zero());
        }
        let mut out = NCElement::zero();
        for (w, k) in &self.terms {
            out.add_term(w.clone(), k.mul(c)?)?;
        }
        Ok(out)
    }

    /// Raw concatenation product without normalization.
    pub fn mul_raw(&self, rhs: &NCElement) -> Result<NCElement, AlgError> {
        let mut out = NCElement::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(w1.mul(w2), c1.mul(c2)?)?;
            }
        }
        Ok(out)
    }

    pub fn max_degree(&self) -> u64 {
        self.terms.keys().map(|w| w.degree()).max().unwrap_or(0)
    }

    /// Conjugate all coefficients (antilinear part of a star operation).
    pub fn conj_coeffs(&self) -> NCElement {
        NCElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.conj())).collect() }
    }
}

impl fmt::Debug for NCElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({:?})*{:?}", c, w))
            .collect();
        write!(f, "{}", strs.join(" + "))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// An immutable finitely presented algebra: ordered alphabet plus oriented
/// two-letter rewrite rules over a fixed coefficient ring.
pub struct Presentation {
    pub name: String,
    pub ring: ScalarRing,
    letters: Vec<LetterInfo>,
    by_name: BTreeMap<String, LetterId>,
    rules: BTreeMap<(LetterId, LetterId), NCElement>,
    pub budget: u64,
    nf_cache: std::sync::RwLock<std::collections::HashMap<Word, NCElement>>,
}

pub type PresRef = Arc<Presentation>;

impl Presentation {
    pub fn n_letters(&self) -> usize {
        self.letters.len()
    }

    pub fn letter_ids(&self) -> impl Iterator<Item = LetterId> + '_ {
        (0..self.letters.len() as u32).map(LetterId)
    }

    pub fn letter_info(&self, l: LetterId) -> &LetterInfo {
        &self.letters[l.0 as usize]
    }

    pub fn letter_name(&self, l: LetterId) -> &str {
        &self.letters[l.0 as usize].name
    }

    pub fn letter_by_name(&self, name: &str) -> Option<LetterId> {
        self.by_name.get(name).copied()
    }

    pub fn inverse_of(&self, l: LetterId) -> Option<LetterId> {
        self.letters[l.0 as usize].inverse_of
    }

    pub fn rules(&self) -> impl Iterator<Item = (&(LetterId, LetterId), &NCElement)> {
        self.rules.iter()
    }

    pub fn rule(&self, first: LetterId, second: LetterId) -> Option<&NCElement> {
        self.rules.get(&(first, second))
    }

    /// Letter power with sign: negative exponents use the inverse letter.
    pub fn letter_ipow(&self, l: LetterId, e: i64) -> Result<Word, AlgError> {
        if e == 0 {
            return Ok(Word::one());
        }
        if e > 0 {
            Ok(Word::letter_pow(l, e as u32))
        } else {
            let inv = self
                .inverse_of(l)
                .ok_or_else(|| AlgError::UnknownLetter(format!("{}^-1", self.letter_name(l))))?;
            Ok(Word::letter_pow(inv, (-e) as u32))
        }
    }

    fn find_redex(&self, w: &Word, strategy: Strategy) -> Option<usize> {
        let n = w.0.len();
        if n < 2 {
            return None;
        }
        let positions: Box<dyn Iterator<Item = usize>> = match strategy {
            Strategy::Leftmost => Box::new(0..n - 1),
            Strategy::Rightmost => Box::new((0..n - 1).rev()),
        };
        for i in positions {
            let (l1, _) = w.0[i];
            let (l2, _) = w.0[i + 1];
            if self.inverse_of(l1) == Some(l2) || self.rules.contains_key(&(l1, l2)) {
                return Some(i);
            }
        }
        None
    }

    /// One rewrite step at redex position i; returns the replacement terms.
    fn step(&self, w: &Word, i: usize, c: &Scalar) -> Result<Vec<(Word, Scalar)>, AlgError> {
        let (l1, e1) = w.0[i];
        let (l2, e2) = w.0[i + 1];
        let prefix = &w.0[..i];
        let suffix = &w.0[i + 2..];
        if self.inverse_of(l1) == Some(l2) {
            let m = e1.min(e2);
            let mid: Vec<(LetterId, u32)> = [(l1, e1 - m), (l2, e2 - m)]
                .into_iter()
                .filter(|(_, e)| *e > 0)
                .collect();
            return Ok(vec![(Word::concat(&[prefix, &mid, suffix]), c.clone())]);
        }
        let rhs = self.rules.get(&(l1, l2)).expect("redex without rule");
        let left: Vec<(LetterId, u32)> = [(l1, e1 - 1)].into_iter().filter(|(_, e)| *e > 0).collect();
        let right: Vec<(LetterId, u32)> = [(l2, e2 - 1)].into_iter().filter(|(_, e)| *e > 0).collect();
        let mut out = Vec::with_capacity(rhs.terms.len());
        for (rw, rc) in &rhs.terms {
            let w_new = Word::concat(&[prefix, &left, &rw.0, &right, suffix]);
            out.push((w_new, c.mul(rc)?));
        }
        Ok(out)
    }

    pub fn normal_form(&self, x: &NCElement) -> Result<NCElement, AlgError> {
        let mut out = NCElement::zero();
        for (w, c) in &x.terms {
            if self.find_redex(w, Strategy::Leftmost).is_none() {
                out.add_term(w.clone(), c.clone())?;
                continue;
            }
            let nf = self.normal_form_word(w)?;
            for (nw, nc) in &nf.terms {
                out.add_term(nw.clone(), nc.mul(c)?)?;
            }
        }
        Ok(out)
    }

    /// Normal form of a single word, cached per presentation.
    fn normal_form_word(&self, w: &Word) -> Result<NCElement, AlgError> {
        if let Some(hit) = self.nf_cache.read().unwrap().get(w) {
            return Ok(hit.clone());
        }
        let x = NCElement::from_term(w.clone(), self.ring.one());
        let nf = self.normal_form_with(&x, Strategy::Leftmost)?;
        self.nf_cache.write().unwrap().insert(w.clone(), nf.clone());
        Ok(nf)
    }

    pub fn normal_form_with(&self, x: &NCElement, strategy: Strategy) -> Result<NCElement, AlgError> {
        let mut out = NCElement::zero();
        let mut work: Vec<(Word, Scalar)> =
            x.terms.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut steps: u64 = 0;
        let use_cache = strategy == Strategy::Leftmost;
        while let Some((w, c)) = work.pop() {
            if c.is_zero() {
                continue;
            }
            if use_cache {
                if let Some(hit) = self.nf_cache.read().unwrap().get(&w) {
                    for (nw, nc) in &hit.terms {
                        out.add_term(nw.clone(), nc.mul(&c)?)?;
                    }
                    continue;
                }
            }
            match self.find_redex(&w, strategy) {
                None => out.add_term(w, c)?,
                Some(i) => {
                    steps += 1;
                    if steps > self.budget {
                        return Err(AlgError::NonTerminating { budget: self.budget });
                    }
                    work.extend(self.step(&w, i, &c)?);
                }
            }
        }
        Ok(out)
    }

    /// Product with normalization.
    pub fn mul(&self, x: &NCElement, y: &NCElement) -> Result<NCElement, AlgError> {
        self.normal_form(&x.mul_raw(y)?)
    }

    pub fn mul_many(&self, xs: &[&NCElement]) -> Result<NCElement, AlgError> {
        let mut acc = NCElement::one(&self.ring);
        for x in xs {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, x: &NCElement, k: u32) -> Result<NCElement, AlgError> {
        let mut acc = NCElement::one(&self.ring);
        for _ in 0..k {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// All normal-form words of total degree <= max_degree, unit included.
    pub fn normal_words(&self, max_degree: u64) -> Vec<Word> {
        let mut out = vec![Word::one()];
        let mut layer = vec![Word::one()];
        for _ in 0..max_degree {
            let mut next = Vec::new();
            for w in &layer {
                let min_letter = w.0.last().map(|(l, _)| l.0).unwrap_or(0);
                for l in min_letter..self.letters.len() as u32 {
                    let cand = w.mul(&Word::letter(LetterId(l)));
                    if self.find_redex(&cand, Strategy::Leftmost).is_none() {
                        next.push(cand);
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Pretty-print an element using letter names.
    pub fn render_word(&self, w: &Word) -> String {
        if w.is_one() {
            return "1".to_string();
        }
        w.0.iter()
            .map(|(l, e)| {
                let name = self.letter_name(*l);
                if *e == 1 {
                    name.to_string()
                } else {
                    format!("{}^{}", name, e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn render(&self, x: &NCElement) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        x.terms
            .iter()
            .map(|(w, c)| {
                if w.is_one() {
                    format!("{}", c)
                } else if c.is_one() {
                    self.render_word(w)
                } else {
                    format!("{}*{}", c, self.render_word(w))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Incremental construction of a presentation.
pub struct PresentationBuilder {
    name: String,
    ring: ScalarRing,
    letters: Vec<LetterInfo>,
    by_name: BTreeMap<String, LetterId>,
    rules: BTreeMap<(LetterId, LetterId), NCElement>,
    budget: u64,
}

impl PresentationBuilder {
    pub fn new(name: &str, ring: ScalarRing) -> Self {
        PresentationBuilder {
            name: name.to_string(),
            ring,
            letters: Vec::new(),
            by_name: BTreeMap::new(),
            rules: BTreeMap::new(),
            budget: 1_000_000,
        }
    }

    pub fn ring(&self) -> ScalarRing {
        self.ring
    }

    /// Append a letter; order of insertion is the alphabet (PBW) order.
    pub fn letter(&mut self, name: &str) -> LetterId {
        assert!(
            !self.by_name.contains_key(name),
            "duplicate letter {} in {}",
            name,
            self.name
        );
        let id = LetterId(self.letters.len() as u32);
        self.letters.push(LetterInfo { name: name.to_string(), inverse_of: None, weight: 1 });
        self.by_name.insert(name.to_string(), id);
        id
    }

    /// Declare an inverse pair (symmetric). Invertible letters are group-like
    /// for termination purposes and get weight 0.
    pub fn inverse_pair(&mut self, a: LetterId, b: LetterId) {
        self.letters[a.0 as usize].inverse_of = Some(b);
        self.letters[b.0 as usize].inverse_of = Some(a);
        self.letters[a.0 as usize].weight = 0;
        self.letters[b.0 as usize].weight = 0;
    }

    pub fn set_weight(&mut self, l: LetterId, w: u64) {
        self.letters[l.0 as usize].weight = w;
    }

    /// Register the rule `first second -> rhs`.
    pub fn rule(&mut self, first: LetterId, second: LetterId, rhs: NCElement) {
        assert!(first != second, "rule on a repeated letter in {}", self.name);
        assert!(
            !self.rules.contains_key(&(first, second)),
            "duplicate rule {}{} in {}",
            self.letters[first.0 as usize].name,
            self.letters[second.0 as usize].name,
            self.name
        );
        self.rules.insert((first, second), rhs);
    }

    pub fn set_budget(&mut self, budget: u64) {
        self.budget = budget;
    }

    pub fn finish(self) -> PresRef {
        for ((first, second), rhs) in &self.rules {
            let lhs = Word::concat(&[&[(*first, 1)], &[(*second, 1)]]);
            let lm = word_measure(&lhs, &self.letters);
            for (w, c) in &rhs.terms {
                if scalar_valuation(c) > 0 {
                    continue;
                }
                let wm = word_measure(w, &self.letters);
                assert!(
                    wm < lm,
                    "rule {}{} in {} does not decrease the termination order (rhs word {:?})",
                    self.letters[first.0 as usize].name,
                    self.letters[second.0 as usize].name,
                    self.name,
                    w
                );
            }
            // in-order rules must pair alphabet-adjacent letters, otherwise
            // sorted words can hide the redex
            if first < second {
                assert!(
                    second.0 == first.0 + 1,
                    "in-order rule {}{} in {} pairs non-adjacent letters",
                    self.letters[first.0 as usize].name,
                    self.letters[second.0 as usize].name,
                    self.name
                );
            }
        }
        Arc::new(Presentation {
            name: self.name,
            ring: self.ring,
            letters: self.letters,
            by_name: self.by_name,
            rules: self.rules,
            budget: self.budget,
            nf_cache: std::sync::RwLock::new(std::collections::HashMap::new()),
        })
    }
}

/// One confluence-probe finding: a word whose two reduction strategies
/// disagree.
#[derive(Debug, Clone)]
pub struct ConfluenceFailure {
    pub word: String,
    pub left: String,
    pub right: String,
}

/// Reduce every normal-word-extension up to `max_degree` under two
/// strategies and compare the results. The exhaustive reduction-path
/// comparison is its own oracle.
pub fn confluence_probe(p: &Presentation, max_degree: u64) -> Result<Vec<ConfluenceFailure>, AlgError> {
    let mut failures = Vec::new();
    // enumerate all words (not just normal ones) up to the degree bound
    let mut layer: Vec<Word> = vec![Word::one()];
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for w in &layer {
            for l in p.letter_ids() {
                next.push(w.mul(&Word::letter(l)));
            }
        }
        for w in &next {
            let x = NCElement::from_term(w.clone(), p.ring.one());
            let a = p.normal_form_with(&x, Strategy::Leftmost)?;
            let b = p.normal_form_with(&x, Strategy::Rightmost)?;
            if a.sub(&b)?.is_zero() == false {
                failures.push(ConfluenceFailure {
                    word: p.render_word(w),
                    left: p.render(&a),
                    right: p.render(&b),
                });
            }
        }
        layer = next;
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::ScalarRing;

    /// Two q-commuting letters: y x -> q^2 x y.
    fn q_plane() -> PresRef {
        let ring = ScalarRing::Exact;
        let mut b = PresentationBuilder::new("qplane", ring);
        let x = b.letter("x");
        let y = b.letter("y");
        let rhs = NCElement::from_term(
            Word::concat(&[&[(x, 1)], &[(y, 1)]]),
            ring.q_pow(1),
        );
        b.rule(y, x, rhs);
        b.finish()
    }

    #[test]
    fn straighten_q_plane() {
        let p = q_plane();
        let x = p.letter_by_name("x").unwrap();
        let y = p.letter_by_name("y").unwrap();
        let yx = NCElement::from_term(Word::concat(&[&[(y, 1)], &[(x, 1)]]), p.ring.one());
        let nf = p.normal_form(&yx).unwrap();
        let expect = NCElement::from_term(Word::concat(&[&[(x, 1)], &[(y, 1)]]), p.ring.q_pow(1));
        assert!(nf.sub(&expect).unwrap().is_zero());
        // idempotence
        let nf2 = p.normal_form(&nf).unwrap();
        assert!(nf2.sub(&nf).unwrap().is_zero());
    }

    #[test]
    fn inverse_cancellation() {
        let ring = ScalarRing::Exact;
        let mut b = PresentationBuilder::new("group", ring);
        let kinv = b.letter("K^-1");
        let k = b.letter("K");
        b.inverse_pair(k, kinv);
        let p = b.finish();
        let w = Word::concat(&[&[(k, 2)], &[(kinv, 3)]]);
        let nf = p.normal_form(&NCElement::from_term(w, ring.one())).unwrap();
        let expect = NCElement::from_term(Word::letter(kinv), ring.one());
        assert!(nf.sub(&expect).unwrap().is_zero());
        // K^-1 K -> 1 even though the pair is sorted
        let w2 = Word::concat(&[&[(kinv, 1)], &[(k, 1)]]);
        let nf2 = p.normal_form(&NCElement::from_term(w2, ring.one())).unwrap();
        assert!(nf2.sub(&NCElement::one(&ring)).unwrap().is_zero());
    }

    #[test]
    fn confluence_of_q_plane() {
        let p = q_plane();
        let fails = confluence_probe(&p, 3).unwrap();
        assert!(fails.is_empty());
    }

    #[test]
    fn normal_words_enumeration() {
        let p = q_plane();
        // degree <= 2 over {x,y}: 1, x, y, x^2, xy, y^2
        let words = p.normal_words(2);
        assert_eq!(words.len(), 6);
    }

    #[test]
    fn degree_never_raised_by_swaps() {
        let p = q_plane();
        let x = p.letter_by_name("x").unwrap();
        let y = p.letter_by_name("y").unwrap();
        let w = Word::concat(&[&[(y, 2)], &[(x, 2)]]);
        let nf = p.normal_form(&NCElement::from_term(w, p.ring.one())).unwrap();
        assert!(nf.terms.keys().all(|w| w.degree() <= 4));
    }
}
