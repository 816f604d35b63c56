//! Degree-bounded completion of homogeneous noncommutative relations.
//!
//! Completion runs degree by degree. At degree `d` the input relations of
//! degree `d` and every overlap ambiguity of composite length `d` are reduced
//! by the rules found so far (all of lower degree), then Gauss-eliminated
//! into monic, inter-reduced rules. Once degree `D` is done, every word of
//! length at most `D` has a unique normal form.

use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::linalg::EchelonBasis;
use crate::linalg::SVec;
use crate::poly::{Poly, Word};
use crate::scalar::Field;

impl Borrow<[u8]> for Word {
    fn borrow(&self) -> &[u8] {
        &self.0
    }
}

/// `lhs -> rhs`, every word of `rhs` smaller than `lhs`.
#[derive(Clone, Debug)]
pub struct RewriteRule<F> {
    pub lhs: Word,
    pub rhs: Poly<F>,
}

impl<F: Field> RewriteRule<F> {
    /// The rule as the polynomial `lhs - rhs`.
    pub fn as_poly(&self) -> Poly<F> {
        Poly::word(self.lhs.clone()).sub(&self.rhs)
    }

    pub fn degree(&self) -> usize {
        self.lhs.len()
    }
}

pub struct RewriteSystem<F> {
    ngens: usize,
    rules: Vec<RewriteRule<F>>,
    index: HashMap<Word, usize>,
    lens: BTreeSet<usize>,
    complete_through: usize,
    cache: RwLock<HashMap<Word, Poly<F>>>,
}

impl<F: Field> Clone for RewriteSystem<F> {
    fn clone(&self) -> Self {
        RewriteSystem {
            ngens: self.ngens,
            rules: self.rules.clone(),
            index: self.index.clone(),
            lens: self.lens.clone(),
            complete_through: self.complete_through,
            cache: RwLock::new(HashMap::new()),
        }
    }
}

impl<F: Field> std::fmt::Debug for RewriteSystem<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RewriteSystem")
            .field("ngens", &self.ngens)
            .field("rules", &self.rules.len())
            .field("complete_through", &self.complete_through)
            .finish()
    }
}

/// Proper overlaps: `k` with `0 < k < min(|a|, |b|)` and the last `k`
/// letters of `a` equal to the first `k` of `b`.
fn overlaps<'a>(a: &'a [u8], b: &'a [u8]) -> impl Iterator<Item = usize> + 'a {
    let m = a.len().min(b.len());
    (1..m).filter(move |&k| a[a.len() - k..] == b[..k])
}

impl<F: Field> RewriteSystem<F> {
    /// Complete `relations` in the free algebra on `ngens` generators through
    /// degree `bound`. Generator index order is the precedence: the highest
    /// index is the largest letter.
    pub fn complete(ngens: usize, relations: &[Poly<F>], bound: usize) -> Result<Self> {
        let mut by_degree: BTreeMap<usize, Vec<Poly<F>>> = BTreeMap::new();
        for r in relations {
            if r.is_zero() {
                continue;
            }
            if let Some(g) = r.max_letter() {
                if g as usize >= ngens {
                    return Err(Error::Format(format!(
                        "relation uses generator index {g} but only {ngens} generators exist"
                    )));
                }
            }
            let d = r
                .homogeneous_degree()
                .ok_or_else(|| Error::Inhomogeneous(format!("{r:?}")))?;
            if d == 0 {
                return Err(Error::Collapse);
            }
            by_degree.entry(d).or_default().push(r.clone());
        }
        let mut sys = RewriteSystem {
            ngens,
            rules: Vec::new(),
            index: HashMap::new(),
            lens: BTreeSet::new(),
            complete_through: 0,
            cache: RwLock::new(HashMap::new()),
        };
        for d in 1..=bound {
            let mut candidates: Vec<Poly<F>> = Vec::new();
            if let Some(rs) = by_degree.get(&d) {
                for r in rs {
                    candidates.push(sys.reduce_unbounded(r));
                }
            }
            for s in sys.overlap_polys(d) {
                candidates.push(sys.reduce_unbounded(&s));
            }
            sys.complete_through = d;
            sys.absorb(candidates);
        }
        sys.cache.write().unwrap().clear();
        Ok(sys)
    }

    /// S-polynomials of all overlaps of composite length `d`.
    fn overlap_polys(&self, d: usize) -> Vec<Poly<F>> {
        let mut out = Vec::new();
        for r1 in &self.rules {
            for r2 in &self.rules {
                let (a, b) = (r1.lhs.letters(), r2.lhs.letters());
                for k in overlaps(a, b) {
                    if a.len() + b.len() - k != d {
                        continue;
                    }
                    // W = A B C, L1 = A B, L2 = B C.
                    let pre = Word(a[..a.len() - k].to_vec());
                    let post = Word(b[k..].to_vec());
                    let left = r1.rhs.mul(&Poly::word(post));
                    let right = Poly::word(pre).mul(&r2.rhs);
                    let s = left.sub(&right);
                    if !s.is_zero() {
                        out.push(s);
                    }
                }
            }
        }
        out
    }

    /// Turn reduced degree-`d` polynomials into new rules.
    fn absorb(&mut self, candidates: Vec<Poly<F>>) {
        let words: BTreeSet<Word> = candidates
            .iter()
            .flat_map(|p| p.terms().map(|(w, _)| w.clone()))
            .collect();
        if words.is_empty() {
            return;
        }
        let words: Vec<Word> = words.into_iter().collect();
        let pos: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut ech = EchelonBasis::new();
        for p in &candidates {
            let v = SVec::from_entries(p.terms().map(|(w, c)| (pos[w], c.clone())));
            ech.insert(&v);
        }
        for row in ech.rref() {
            let (p, _) = *row.leading().unwrap();
            let lhs = words[p].clone();
            let rhs = Poly::from_terms(
                row.iter()
                    .filter(|(i, _)| *i != p)
                    .map(|(i, c)| (words[*i].clone(), -c.clone())),
            );
            self.lens.insert(lhs.len());
            self.index.insert(lhs.clone(), self.rules.len());
            self.rules.push(RewriteRule { lhs, rhs });
        }
        self.cache.write().unwrap().clear();
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn rules(&self) -> &[RewriteRule<F>] {
        &self.rules
    }

    pub fn complete_through(&self) -> usize {
        self.complete_through
    }

    /// Leftmost rule occurrence in `w`: (start, rule index).
    fn find_lhs(&self, w: &[u8]) -> Option<(usize, usize)> {
        for i in 0..w.len() {
            for &l in &self.lens {
                if i + l > w.len() {
                    break;
                }
                if let Some(&r) = self.index.get(&w[i..i + l]) {
                    return Some((i, r));
                }
            }
        }
        None
    }

    /// All rule occurrences in `w`.
    fn all_lhs(&self, w: &[u8]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..w.len() {
            for &l in &self.lens {
                if i + l > w.len() {
                    break;
                }
                if let Some(&r) = self.index.get(&w[i..i + l]) {
                    out.push((i, r));
                }
            }
        }
        out
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.find_lhs(w.letters()).is_none()
    }

    fn nf_word(&self, w: &Word) -> Poly<F> {
        if let Some(p) = self.cache.read().unwrap().get(w) {
            return p.clone();
        }
        let out = match self.find_lhs(w.letters()) {
            None => Poly::word(w.clone()),
            Some((i, r)) => {
                let rule = &self.rules[r];
                let pre = &w.letters()[..i];
                let post = &w.letters()[i + rule.lhs.len()..];
                let mut acc = Poly::zero();
                for (m, c) in rule.rhs.terms() {
                    let mut v = Vec::with_capacity(w.len());
                    v.extend_from_slice(pre);
                    v.extend_from_slice(m.letters());
                    v.extend_from_slice(post);
                    acc = acc.add(&self.nf_word(&Word(v)).scale(c));
                }
                acc
            }
        };
        self.cache.write().unwrap().insert(w.clone(), out.clone());
        out
    }

    fn reduce_unbounded(&self, p: &Poly<F>) -> Poly<F> {
        let mut acc = Poly::zero();
        for (w, c) in p.terms() {
            acc = acc.add(&self.nf_word(w).scale(c));
        }
        acc
    }

    /// Normal form of `p`. Errors if `p` has degree above the completion
    /// bound, where uniqueness is not guaranteed.
    pub fn normal_form(&self, p: &Poly<F>) -> Result<Poly<F>> {
        if let Some(d) = p.degree() {
            if d > self.complete_through {
                return Err(Error::DegreeBound {
                    requested: d,
                    bound: self.complete_through,
                });
            }
        }
        Ok(self.reduce_unbounded(p))
    }

    pub fn normal_form_word(&self, w: &Word) -> Result<Poly<F>> {
        self.normal_form(&Poly::word(w.clone()))
    }

    /// Reduce without memoization, letting `pick(n)` choose which of the `n`
    /// current rule occurrences (over all terms) to rewrite next.
    pub fn reduce_with(&self, p: &Poly<F>, pick: &mut dyn FnMut(usize) -> usize) -> Poly<F> {
        let mut cur = p.clone();
        loop {
            let mut sites: Vec<(Word, usize, usize)> = Vec::new();
            for (w, _) in cur.terms() {
                for (i, r) in self.all_lhs(w.letters()) {
                    sites.push((w.clone(), i, r));
                }
            }
            if sites.is_empty() {
                return cur;
            }
            let (w, i, r) = sites.swap_remove(pick(sites.len()) % sites.len());
            let c = cur.coeff(&w);
            let rule = &self.rules[r];
            let pre = Word(w.letters()[..i].to_vec());
            let post = Word(w.letters()[i + rule.lhs.len()..].to_vec());
            let replacement = Poly::word(pre).mul(&rule.rhs).mul(&Poly::word(post));
            cur = cur
                .sub(&Poly::monomial(w, c.clone()))
                .add(&replacement.scale(&c));
        }
    }

    /// Normal words of degree `d`, in increasing order.
    pub fn basis(&self, d: usize) -> Result<Vec<Word>> {
        if d > self.complete_through {
            return Err(Error::DegreeBound {
                requested: d,
                bound: self.complete_through,
            });
        }
        let mut cur = vec![Word::empty()];
        for _ in 0..d {
            let mut next = Vec::new();
            for w in &cur {
                for g in 0..self.ngens as u8 {
                    let mut v = w.0.clone();
                    v.push(g);
                    // Only suffixes can contain a new occurrence.
                    let fresh = self.lens.iter().all(|&l| {
                        l > v.len() || !self.index.contains_key(&v[v.len() - l..])
                    });
                    if fresh {
                        next.push(Word(v));
                    }
                }
            }
            cur = next;
        }
        cur.sort();
        Ok(cur)
    }

    /// Check that every overlap of composite length at most `d` resolves.
    /// Returns the first unresolved overlap word.
    pub fn check_overlaps(&self, d: usize) -> std::result::Result<(), Word> {
        for r1 in &self.rules {
            for r2 in &self.rules {
                let (a, b) = (r1.lhs.letters(), r2.lhs.letters());
                for k in overlaps(a, b) {
                    if a.len() + b.len() - k > d {
                        continue;
                    }
                    let pre = Word(a[..a.len() - k].to_vec());
                    let post = Word(b[k..].to_vec());
                    let s = r1
                        .rhs
                        .mul(&Poly::word(post.clone()))
                        .sub(&Poly::word(pre.clone()).mul(&r2.rhs));
                    if !self.reduce_unbounded(&s).is_zero() {
                        return Err(pre.concat(&Word(b.to_vec())));
                    }
                }
            }
        }
        Ok(())
    }
}
