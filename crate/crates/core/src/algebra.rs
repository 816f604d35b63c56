//! Graded algebras presented by homogeneous relations: skew quotients of
//! `k<u,v>`, Ore extensions `A[t; sigma]`, and their degree-wise bases and
//! multiplication.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{rank, Accum, Matrix, SVec, SparseMatrix};
use crate::poly::{parse_poly, Poly, Word};
use crate::rewrite::RewriteSystem;
use crate::scalar::{Field, Scalar};

/// Largest degree the brute-force ideal oracle accepts.
pub const ORACLE_CAP: usize = 6;

/// Graded automorphism data for an Ore extension: `sigma` acts on the span
/// of the base generators, column `j` being the image of generator `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct OreData<F> {
    pub sigma: Matrix<F>,
    pub name: char,
}

impl<F: Field> OreData<F> {
    pub fn new(sigma: Matrix<F>) -> Self {
        OreData { sigma, name: 't' }
    }
}

/// Generators (in increasing precedence) and relations.
#[derive(Clone, Debug, PartialEq)]
pub struct Presentation<F> {
    pub names: Vec<char>,
    pub relations: Vec<Poly<F>>,
}

impl<F: Scalar> Presentation<F> {
    pub fn new(names: &[char], relations: Vec<Poly<F>>) -> Self {
        Presentation {
            names: names.to_vec(),
            relations,
        }
    }

    /// Parse relations written in the generators `names`.
    pub fn from_strs(names: &[char], relations: &[&str]) -> Result<Self> {
        let rels = relations
            .iter()
            .map(|r| parse_poly(r, names))
            .collect::<Result<Vec<_>>>()?;
        Ok(Presentation::new(names, rels))
    }

    /// Text format:
    ///
    /// ```text
    /// generators: u < v < t
    /// relation: u*v - i*v*u
    /// relation: t*u - w*u*t
    /// ```
    ///
    /// Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut names: Option<Vec<char>> = None;
        let mut rel_src: Vec<String> = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| Error::Format(format!("expected 'key: value', got '{line}'")))?;
            match key.trim() {
                "generators" => {
                    let mut gens = Vec::new();
                    for g in value.split('<') {
                        let g = g.trim();
                        let mut chars = g.chars();
                        match (chars.next(), chars.next()) {
                            (Some(c), None) if c.is_ascii_alphabetic() => gens.push(c),
                            _ => {
                                return Err(Error::Format(format!(
                                    "generator names are single letters, got '{g}'"
                                )))
                            }
                        }
                    }
                    names = Some(gens);
                }
                "relation" => rel_src.push(value.trim().to_string()),
                other => return Err(Error::Format(format!("unknown key '{other}'"))),
            }
        }
        let names = names.ok_or_else(|| Error::Format("missing 'generators' line".into()))?;
        let refs: Vec<&str> = rel_src.iter().map(String::as_str).collect();
        Presentation::from_strs(&names, &refs)
    }

    pub fn render(&self) -> String {
        let gens: Vec<String> = self.names.iter().map(char::to_string).collect();
        let mut out = format!("generators: {}\n", gens.join(" < "));
        for r in &self.relations {
            out.push_str(&format!("relation: {}\n", r.render(&self.names)));
        }
        out
    }

    /// The presentation of `A[t; sigma]`: the base relations plus
    /// `t g - sigma(g) t` for each base generator `g`.
    pub fn with_ore(&self, ore: &OreData<F>) -> Self {
        let n = self.names.len();
        let t = n as u8;
        let mut p = self.clone();
        p.names.push(ore.name);
        for (g, img) in sigma_images(ore, n).iter().enumerate() {
            let lhs = Poly::word(Word(vec![t, g as u8]));
            p.relations.push(lhs.sub(&img.mul(&Poly::gen(t))));
        }
        p
    }
}

/// Expected dimension of degree `d` for an AS regular algebra of global
/// dimension `n` generated in degree one (n = 2 or 3).
pub fn regular_dim(n: usize, d: usize) -> usize {
    match n {
        2 => d + 1,
        3 => (d + 1) * (d + 2) / 2,
        _ => binomial(d + n - 1, n - 1),
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// A homogeneous element: degree plus coordinates in the normal-word basis.
#[derive(Clone, PartialEq)]
pub struct Elem<F> {
    pub degree: usize,
    pub vec: SVec<F>,
}

impl<F: Field> fmt::Debug for Elem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Elem(deg {}, {:?})", self.degree, self.vec)
    }
}

/// A graded algebra with normal-form bases and multiplication tables through
/// a degree bound.
pub struct AlgebraHandle<F> {
    presentation: Presentation<F>,
    ore: Option<OreData<F>>,
    sys: RewriteSystem<F>,
    bound: usize,
    bases: Vec<Vec<Word>>,
    index: Vec<HashMap<Word, usize>>,
    /// `lmul[d][g]`: left multiplication by generator `g`, `A_d -> A_{d+1}`.
    lmul: Vec<Vec<SparseMatrix<F>>>,
}

impl<F: Field> fmt::Debug for AlgebraHandle<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgebraHandle")
            .field("names", &self.presentation.names)
            .field("bound", &self.bound)
            .field("rules", &self.sys.rules().len())
            .finish()
    }
}

/// Build and validate: `sigma` must be an invertible automorphism of the
/// base and every degree must have the AS regular dimension.
pub fn build_algebra<F: Scalar>(
    base: &Presentation<F>,
    ore: Option<OreData<F>>,
    bound: usize,
) -> Result<AlgebraHandle<F>> {
    if let Some(o) = &ore {
        check_ore(base, o)?;
    }
    let a = build_algebra_unchecked(base, ore, bound)?;
    let n = a.ngens();
    for d in 0..=bound {
        let got = a.dim(d);
        let want = regular_dim(n, d);
        if got != want {
            return Err(Error::NotRegular(format!(
                "not the expected regular Hilbert series: dim A_{d} = {got}, expected {want}"
            )));
        }
    }
    Ok(a)
}

/// `sigma` must be an invertible linear map preserving the base relations.
pub fn check_ore<F: Scalar>(base: &Presentation<F>, ore: &OreData<F>) -> Result<()> {
    let n = base.names.len();
    if ore.sigma.nrows() != n || ore.sigma.ncols() != n {
        return Err(Error::Ore(format!(
            "sigma must be {n}x{n}, got {}x{}",
            ore.sigma.nrows(),
            ore.sigma.ncols()
        )));
    }
    if ore.sigma.inverse().is_none() {
        return Err(Error::Ore("sigma is not invertible".into()));
    }
    if base.names.contains(&ore.name) {
        return Err(Error::Ore(format!("Ore generator '{}' clashes", ore.name)));
    }
    // sigma must map the relation space to itself.
    let images = sigma_images(ore, n);
    let span: Vec<Poly<F>> = base.relations.clone();
    for r in &base.relations {
        let s = r.substitute(&images);
        if !in_span(&span, &s) {
            return Err(Error::Ore(format!(
                "sigma does not preserve the relation {}",
                r.render(&base.names)
            )));
        }
    }
    Ok(())
}

fn sigma_images<F: Field>(ore: &OreData<F>, n: usize) -> Vec<Poly<F>> {
    (0..n)
        .map(|j| {
            Poly::from_terms(
                (0..n).map(|i| (Word::letter(i as u8), ore.sigma.get(i, j).clone())),
            )
        })
        .collect()
}

fn in_span<F: Field>(span: &[Poly<F>], p: &Poly<F>) -> bool {
    let mut words: Vec<Word> = span
        .iter()
        .chain(std::iter::once(p))
        .flat_map(|q| q.terms().map(|(w, _)| w.clone()))
        .collect();
    words.sort();
    words.dedup();
    let pos: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let to_vec = |q: &Poly<F>| SVec::from_entries(q.terms().map(|(w, c)| (pos[w], c.clone())));
    let vs: Vec<SVec<F>> = span.iter().map(to_vec).collect();
    let r0 = rank(&vs);
    let mut with = vs;
    with.push(to_vec(p));
    rank(&with) == r0
}

/// Build without the automorphism and Hilbert-series checks.
pub fn build_algebra_unchecked<F: Scalar>(
    base: &Presentation<F>,
    ore: Option<OreData<F>>,
    bound: usize,
) -> Result<AlgebraHandle<F>> {
    let presentation = match &ore {
        Some(o) => base.with_ore(o),
        None => base.clone(),
    };
    let n = presentation.names.len();
    let sys = RewriteSystem::complete(n, &presentation.relations, bound)?;
    let mut bases = Vec::with_capacity(bound + 1);
    let mut index = Vec::with_capacity(bound + 1);
    for d in 0..=bound {
        let b = sys.basis(d)?;
        index.push(b.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect());
        bases.push(b);
    }
    let mut a = AlgebraHandle {
        presentation,
        ore,
        sys,
        bound,
        bases,
        index,
        lmul: Vec::new(),
    };
    a.lmul = (0..bound)
        .map(|d| {
            (0..n as u8)
                .map(|g| {
                    let cols = a.bases[d]
                        .iter()
                        .map(|w| {
                            let p = a.sys.normal_form_word(&Word::letter(g).concat(w))?;
                            Ok(a.coords(d + 1, &p))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok(SparseMatrix {
                        nrows: a.bases[d + 1].len(),
                        cols,
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(a)
}

impl<F: Field> AlgebraHandle<F> {
    pub fn names(&self) -> &[char] {
        &self.presentation.names
    }

    pub fn presentation(&self) -> &Presentation<F> {
        &self.presentation
    }

    pub fn ore(&self) -> Option<&OreData<F>> {
        self.ore.as_ref()
    }

    pub fn system(&self) -> &RewriteSystem<F> {
        &self.sys
    }

    pub fn ngens(&self) -> usize {
        self.presentation.names.len()
    }

    /// Number of generators, used as the GK dimension in the regularity
    /// surrogate.
    pub fn gk_generators(&self) -> usize {
        self.ngens()
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn dim(&self, d: usize) -> usize {
        self.bases.get(d).map_or(0, Vec::len)
    }

    pub fn hilbert(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    pub fn basis(&self, d: usize) -> &[Word] {
        &self.bases[d]
    }

    pub fn word_index(&self, d: usize, w: &Word) -> Option<usize> {
        self.index.get(d)?.get(w).copied()
    }

    fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.bound {
            Err(Error::DegreeBound {
                requested: d,
                bound: self.bound,
            })
        } else {
            Ok(())
        }
    }

    /// Coordinates of a normal-form polynomial of degree `d`.
    fn coords(&self, d: usize, p: &Poly<F>) -> SVec<F> {
        SVec::from_entries(p.terms().map(|(w, c)| {
            let i = self.index[d]
                .get(w)
                .unwrap_or_else(|| panic!("{w:?} is not a normal word of degree {d}"));
            (*i, c.clone())
        }))
    }

    /// Normal form of an arbitrary polynomial.
    pub fn normal_form(&self, p: &Poly<F>) -> Result<Poly<F>> {
        self.sys.normal_form(p)
    }

    /// Homogeneous element from a polynomial (reduced first).
    pub fn elem(&self, p: &Poly<F>) -> Result<Elem<F>> {
        let q = self.normal_form(p)?;
        let degree = match q.homogeneous_degree() {
            Some(d) => d,
            None if q.is_zero() => p.degree().unwrap_or(0),
            None => {
                if q.as_constant().is_some() {
                    0
                } else {
                    return Err(Error::Inhomogeneous(q.render(self.names())));
                }
            }
        };
        self.check_degree(degree)?;
        Ok(Elem {
            degree,
            vec: self.coords(degree, &q),
        })
    }

    pub fn elem_to_poly(&self, e: &Elem<F>) -> Poly<F> {
        self.vec_to_poly(e.degree, &e.vec)
    }

    pub fn vec_to_poly(&self, d: usize, v: &SVec<F>) -> Poly<F> {
        Poly::from_terms(v.iter().map(|(i, c)| (self.bases[d][*i].clone(), c.clone())))
    }

    pub fn render(&self, d: usize, v: &SVec<F>) -> String {
        self.vec_to_poly(d, v).render(self.names())
    }

    /// Left multiplication by generator `g` on `A_d`.
    pub fn lmul(&self, d: usize, g: usize) -> &SparseMatrix<F> {
        &self.lmul[d][g]
    }

    /// Product of a normal word of degree `dw` with an element of `A_d`.
    pub fn word_times(&self, w: &Word, d: usize, v: &SVec<F>) -> SVec<F> {
        let mut cur = v.clone();
        let mut deg = d;
        for &g in w.letters().iter().rev() {
            cur = self.lmul[deg][g as usize].apply(&cur);
            deg += 1;
        }
        cur
    }

    /// Product of homogeneous elements given by coordinates.
    pub fn mul_vec(&self, da: usize, a: &SVec<F>, db: usize, b: &SVec<F>) -> Result<SVec<F>> {
        self.check_degree(da + db)?;
        let mut acc = Accum::new(self.dim(da + db));
        for (i, c) in a.iter() {
            let w = &self.bases[da][*i];
            acc.add_scaled(c, &self.word_times(w, db, b));
        }
        Ok(acc.take())
    }

    pub fn mul_elem(&self, a: &Elem<F>, b: &Elem<F>) -> Result<Elem<F>> {
        Ok(Elem {
            degree: a.degree + b.degree,
            vec: self.mul_vec(a.degree, &a.vec, b.degree, &b.vec)?,
        })
    }

    /// Normal form of `p * q`.
    pub fn multiply(&self, p: &Poly<F>, q: &Poly<F>) -> Result<Poly<F>> {
        let d = p.degree().unwrap_or(0) + q.degree().unwrap_or(0);
        self.check_degree(d)?;
        self.normal_form(&p.mul(q))
    }

    /// Matrices of the algebra automorphism extending `m1` (acting on `A_1`,
    /// column convention) to `A_0..=A_bound`.
    pub fn automorphism(&self, m1: &Matrix<F>) -> Vec<SparseMatrix<F>> {
        let n = self.ngens();
        let mut out: Vec<SparseMatrix<F>> = vec![SparseMatrix {
            nrows: 1,
            cols: vec![SVec::unit(0)],
        }];
        for d in 1..=self.bound {
            let prev = &out[d - 1];
            let cols = self.bases[d]
                .iter()
                .map(|w| {
                    let (a, rest) = w.letters().split_first().unwrap();
                    let j = self.index[d - 1][&Word(rest.to_vec())];
                    let tail = &prev.cols[j];
                    let mut acc = Accum::new(self.dim(d));
                    for k in 0..n {
                        let c = m1.get(k, *a as usize);
                        if !c.is_zero() {
                            acc.add_scaled(c, &self.lmul[d - 1][k].apply(tail));
                        }
                    }
                    acc.take()
                })
                .collect();
            out.push(SparseMatrix {
                nrows: self.dim(d),
                cols,
            });
        }
        out
    }

    /// Dimension of degree `d` of the free algebra modulo the span of
    /// `w1 r w2`, computed without the rewrite system.
    pub fn ideal_quotient_oracle(&self, d: usize) -> Result<usize> {
        if d > ORACLE_CAP {
            return Err(Error::DegreeBound {
                requested: d,
                bound: ORACLE_CAP,
            });
        }
        let n = self.ngens();
        let total = n.pow(d as u32);
        let word_id = |w: &[u8]| w.iter().fold(0usize, |acc, &g| acc * n + g as usize);
        let all_words = |len: usize| -> Vec<Vec<u8>> {
            let mut ws = vec![Vec::new()];
            for _ in 0..len {
                ws = ws
                    .into_iter()
                    .flat_map(|w| {
                        (0..n as u8).map(move |g| {
                            let mut v = w.clone();
                            v.push(g);
                            v
                        })
                    })
                    .collect();
            }
            ws
        };
        let mut gens = Vec::new();
        for r in &self.presentation.relations {
            let Some(e) = r.homogeneous_degree() else {
                continue;
            };
            if e > d {
                continue;
            }
            for l in 0..=d - e {
                for w1 in all_words(l) {
                    for w2 in all_words(d - e - l) {
                        let v = SVec::from_entries(r.terms().map(|(w, c)| {
                            let mut full = w1.clone();
                            full.extend_from_slice(w.letters());
                            full.extend_from_slice(&w2);
                            (word_id(&full), c.clone())
                        }));
                        gens.push(v);
                    }
                }
            }
        }
        Ok(total - rank(&gens))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CyclotomicField;
    use crate::Cyc;
    use num_traits::{One, Zero};

    fn two(rel: &str, d: usize) -> AlgebraHandle<Cyc> {
        let p = Presentation::from_strs(&['u', 'v'], &[rel]).unwrap();
        build_algebra(&p, None, d).unwrap()
    }

    #[test]
    fn skew_plane_dims() {
        let a = two("uv - i*vu", 6);
        assert_eq!(&a.hilbert()[..5], &[1, 2, 3, 4, 5]);
    }

    #[test]
    fn ore_extension_dims_and_rule() {
        let p = Presentation::from_strs(&['u', 'v'], &["uv + vu"]).unwrap();
        let alpha = Cyc::root(1);
        let sigma = Matrix::diag(vec![alpha.clone(), -alpha.clone()]);
        let a = build_algebra(&p, Some(OreData::new(sigma)), 6).unwrap();
        assert_eq!(a.dim(3), 10);
        let names = a.names().to_vec();
        let tu = parse_poly::<Cyc>("t", &names).unwrap();
        let u = parse_poly::<Cyc>("u", &names).unwrap();
        assert_eq!(
            a.multiply(&tu, &u).unwrap(),
            parse_poly("w*u*t", &names).unwrap()
        );
    }

    #[test]
    fn minus_one_plane_product() {
        let a = two("uv + vu", 4);
        let uv = parse_poly::<Cyc>("uv", &['u', 'v']).unwrap();
        assert_eq!(
            a.multiply(&uv, &uv).unwrap(),
            parse_poly("-u^2*v^2", &['u', 'v']).unwrap()
        );
    }

    #[test]
    fn oracle_matches() {
        assert_eq!(two("uv - vu", 4).ideal_quotient_oracle(3).unwrap(), 4);
        assert_eq!(two("u^2 + v^2", 4).ideal_quotient_oracle(4).unwrap(), 5);
        assert!(two("uv - vu", 8).ideal_quotient_oracle(7).is_err());
    }

    #[test]
    fn singular_sigma_rejected() {
        let p = Presentation::from_strs(&['u', 'v'], &["uv - vu"]).unwrap();
        let sigma = Matrix::from_rows(vec![
            vec![Cyc::one(), Cyc::one()],
            vec![Cyc::one(), Cyc::one()],
        ]);
        assert!(matches!(
            build_algebra(&p, Some(OreData::new(sigma)), 4),
            Err(Error::Ore(_))
        ));
    }

    #[test]
    fn non_automorphism_rejected() {
        // sigma(u) = v, sigma(v) = i u does not preserve u^2 - v^2.
        let p = Presentation::from_strs(&['u', 'v'], &["u^2 - v^2"]).unwrap();
        let sigma = Matrix::from_rows(vec![
            vec![Cyc::zero(), Cyc::imag()],
            vec![Cyc::one(), Cyc::zero()],
        ]);
        assert!(matches!(
            build_algebra(&p, Some(OreData::new(sigma)), 4),
            Err(Error::Ore(_))
        ));
    }

    #[test]
    fn wrong_hilbert_series_rejected() {
        let p = Presentation::<Cyc>::from_strs(&['u', 'v'], &["uv", "vu"]).unwrap();
        assert!(matches!(build_algebra(&p, None, 4), Err(Error::NotRegular(_))));
    }

    #[test]
    fn presentation_text_roundtrip() {
        let text = "# skew plane\ngenerators: u < v\nrelation: u*v - i*v*u\n";
        let p = Presentation::<Cyc>::parse(text).unwrap();
        assert_eq!(Presentation::parse(&p.render()).unwrap(), p);
        assert!(Presentation::<Cyc>::parse("relation: uv").is_err());
        assert!(Presentation::<Cyc>::parse("generators: uv").is_err());
    }

    #[test]
    fn automorphism_is_multiplicative() {
        // u -> w v, v -> w^3 u preserves u^2 - i v^2 up to the scalar i.
        let names = ['u', 'v'];
        let a = two("u^2 - i*v^2", 6);
        let m = Matrix::from_rows(vec![
            vec![Cyc::zero(), Cyc::root(3)],
            vec![Cyc::root(1), Cyc::zero()],
        ]);
        let rel = parse_poly::<Cyc>("u^2 - i*v^2", &names).unwrap();
        let img = rel.substitute(&[
            parse_poly("w*v", &names).unwrap(),
            parse_poly("w^3*u", &names).unwrap(),
        ]);
        assert!(a.normal_form(&img).unwrap().is_zero());
        let auto = a.automorphism(&m);
        let x = a.elem(&parse_poly("u*v", &names).unwrap()).unwrap();
        let y = a.elem(&parse_poly("v^2*u", &names).unwrap()).unwrap();
        let xy = a.mul_elem(&x, &y).unwrap();
        let lhs = auto[5].apply(&xy.vec);
        let rhs = a
            .mul_vec(2, &auto[2].apply(&x.vec), 3, &auto[3].apply(&y.vec))
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}
