//! Invariant subrings, computed degree by degree.
//!
//! `A_d^H` is the joint fixed space of the Hopf generators: they generate
//! `H` as an algebra and the counit is 1 on each of them.

use std::fmt;

use rayon::prelude::*;

use crate::algebra::AlgebraHandle;
use crate::error::{Error, Result};
use crate::hopf::ActionAssignment;
use crate::linalg::{kernel, EchelonBasis, SVec};
use crate::poly::{Poly, Word};
use crate::scalar::Scalar;

/// Dimension of every catalog Hopf algebra.
pub const HOPF_DIM: u64 = 16;

/// Reduced echelon basis of `A_d^H`.
pub fn invariant_subspace<F: Scalar>(assign: &ActionAssignment<F>, d: usize) -> Vec<SVec<F>> {
    let a = assign.algebra();
    let n = a.dim(d);
    let ngens = assign.spec().ngens();
    let cols: Vec<SVec<F>> = (0..n)
        .map(|j| {
            let e = SVec::unit(j);
            let mut entries = Vec::new();
            for h in 0..ngens {
                let img = assign.table(h, d).apply(&e).sub(&e);
                entries.extend(img.iter().map(|(i, c)| (h * n + i, c.clone())));
            }
            SVec::from_entries(entries)
        })
        .collect();
    kernel(&cols)
}

/// Invariant bases for `d = 0..=bound`.
pub struct InvariantRing<'a, F> {
    pub assign: &'a ActionAssignment<F>,
    pub bound: usize,
    pub bases: Vec<Vec<SVec<F>>>,
}

impl<'a, F: Scalar> InvariantRing<'a, F> {
    pub fn compute(assign: &'a ActionAssignment<F>, bound: usize) -> Result<Self> {
        let top = assign.algebra().bound();
        if bound > top {
            return Err(Error::DegreeBound {
                requested: bound,
                bound: top,
            });
        }
        let bases = (0..=bound)
            .into_par_iter()
            .map(|d| invariant_subspace(assign, d))
            .collect();
        Ok(InvariantRing {
            assign,
            bound,
            bases,
        })
    }

    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    pub fn algebra(&self) -> &AlgebraHandle<F> {
        self.assign.algebra()
    }

    pub fn polys(&self, d: usize) -> Vec<Poly<F>> {
        self.bases[d]
            .iter()
            .map(|v| self.algebra().vec_to_poly(d, v))
            .collect()
    }

    /// Whether a homogeneous element is fixed by every Hopf generator.
    pub fn is_invariant(&self, d: usize, v: &SVec<F>) -> bool {
        (0..self.assign.spec().ngens()).all(|h| self.assign.table(h, d).apply(v) == *v)
    }
}

/// Degree-wise spans of the subalgebra generated by homogeneous elements.
pub fn subalgebra_spans<F: Scalar>(
    a: &AlgebraHandle<F>,
    gens: &[(usize, SVec<F>)],
    bound: usize,
) -> Result<Vec<EchelonBasis<F>>> {
    let mut spans: Vec<EchelonBasis<F>> = Vec::with_capacity(bound + 1);
    let mut one = EchelonBasis::new();
    one.insert(&SVec::unit(0));
    spans.push(one);
    for d in 1..=bound {
        spans.push(span_in_degree(a, gens, &spans, d)?);
    }
    Ok(spans)
}

fn span_in_degree<F: Scalar>(
    a: &AlgebraHandle<F>,
    gens: &[(usize, SVec<F>)],
    lower: &[EchelonBasis<F>],
    d: usize,
) -> Result<EchelonBasis<F>> {
    let products: Vec<SVec<F>> = gens
        .par_iter()
        .filter(|(e, _)| *e >= 1 && *e <= d)
        .map(|(e, g)| {
            lower[d - e]
                .rows()
                .map(|s| a.mul_vec(*e, g, d - e, s))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(EchelonBasis::from_vectors(&products))
}

/// Generator-count test for AS regularity of the invariant ring: a
/// regular invariant ring of a two-generated `A` needs exactly 2
/// generators, of a three-generated `A` at most 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Surrogate {
    RegularCandidate,
    NotRegular,
    Inconclusive,
}

impl fmt::Display for Surrogate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Surrogate::RegularCandidate => "regular-candidate",
            Surrogate::NotRegular => "not-regular",
            Surrogate::Inconclusive => "inconclusive",
        })
    }
}

pub fn surrogate(ngens: usize, degrees: &[usize], bound: usize) -> Surrogate {
    let limit = if ngens <= 2 { 2 } else { ngens };
    let top = degrees.iter().copied().max().unwrap_or(0);
    if degrees.len() > limit {
        Surrogate::NotRegular
    } else if top + 2 > bound || degrees.len() < ngens {
        Surrogate::Inconclusive
    } else {
        Surrogate::RegularCandidate
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorReport<F> {
    pub bound: usize,
    /// `dim A_d^H` for `d = 0..=bound`.
    pub dims: Vec<usize>,
    pub degrees: Vec<usize>,
    pub representatives: Vec<Poly<F>>,
    pub degree_product: u64,
    pub surrogate: Surrogate,
    /// `degree_product <= dim H`, evaluated for regular candidates only.
    pub conjecture_holds: Option<bool>,
}

/// Minimal homogeneous generators through the bound, chosen as the echelon
/// complement of the generated subalgebra inside each `A_d^H`.
pub fn minimal_generators<F: Scalar>(ring: &InvariantRing<'_, F>) -> Result<GeneratorReport<F>> {
    let a = ring.algebra();
    let mut gens: Vec<(usize, SVec<F>)> = Vec::new();
    let mut spans: Vec<EchelonBasis<F>> = Vec::new();
    let mut one = EchelonBasis::new();
    one.insert(&SVec::unit(0));
    spans.push(one);
    for d in 1..=ring.bound {
        let mut span = span_in_degree(a, &gens, &spans, d)?;
        for v in &ring.bases[d] {
            if span.insert(v).is_some() {
                gens.push((d, v.clone()));
            }
        }
        spans.push(span);
    }
    let degrees: Vec<usize> = gens.iter().map(|(d, _)| *d).collect();
    let degree_product = degrees.iter().map(|&d| d as u64).product();
    let surrogate = surrogate(a.ngens(), &degrees, ring.bound);
    Ok(GeneratorReport {
        bound: ring.bound,
        dims: ring.dims(),
        representatives: gens.iter().map(|(d, v)| a.vec_to_poly(*d, v)).collect(),
        degrees,
        degree_product,
        surrogate,
        conjecture_holds: (surrogate == Surrogate::RegularCandidate)
            .then_some(degree_product <= HOPF_DIM),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimCheck {
    pub claimed_degrees: Vec<usize>,
    /// `(degree, span of the claimed subalgebra, dim A_d^H)` at the first
    /// degree where they differ.
    pub first_failure: Option<(usize, usize, usize)>,
}

impl ClaimCheck {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Check that `claimed` generates `A^H` in every degree through the bound.
pub fn verify_claimed_generators<F: Scalar>(
    ring: &InvariantRing<'_, F>,
    claimed: &[Poly<F>],
) -> Result<ClaimCheck> {
    let a = ring.algebra();
    let mut gens = Vec::new();
    for p in claimed {
        let e = a.elem(p)?;
        if e.vec.is_zero() || !ring.is_invariant(e.degree, &e.vec) {
            return Err(Error::NotInvariant(p.render(a.names())));
        }
        gens.push((e.degree, e.vec));
    }
    let spans = subalgebra_spans(a, &gens, ring.bound)?;
    let first_failure = (0..=ring.bound)
        .find(|&d| spans[d].rank() != ring.bases[d].len())
        .map(|d| (d, spans[d].rank(), ring.bases[d].len()));
    Ok(ClaimCheck {
        claimed_degrees: gens.iter().map(|(d, _)| *d).collect(),
        first_failure,
    })
}

/// Check that every invariant lies in the span of
/// `u^{2j} ((uv)^{2k} + s(j,k,m) (vu)^{2k}) t^{2m}` (generators `u, v, t`).
pub fn check_invariant_form<F: Scalar>(
    ring: &InvariantRing<'_, F>,
    sign: impl Fn(usize, usize, usize) -> bool,
) -> Result<bool> {
    let a = ring.algebra();
    for d in 0..=ring.bound {
        if ring.bases[d].is_empty() {
            continue;
        }
        let mut span = EchelonBasis::new();
        for k in 0..=d / 4 {
            for m in 0..=(d - 4 * k) / 2 {
                let rest = d - 4 * k - 2 * m;
                if rest % 2 == 1 {
                    continue;
                }
                let j = rest / 2;
                let uv: Vec<u8> = [0u8, 1].repeat(2 * k);
                let vu: Vec<u8> = [1u8, 0].repeat(2 * k);
                let frame = |mid: Vec<u8>| {
                    let mut w = vec![0u8; 2 * j];
                    w.extend(mid);
                    w.extend(std::iter::repeat_n(2u8, 2 * m));
                    Word(w)
                };
                let s = if sign(j, k, m) { -F::one() } else { F::one() };
                let p = Poly::from_terms([(frame(uv), F::one()), (frame(vu), s)]);
                let e = a.elem(&p)?;
                if !e.vec.is_zero() {
                    span.insert(&e.vec);
                }
            }
        }
        if ring.bases[d].iter().any(|v| !span.contains(v)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sign rule `(-1)^{...}` of the invariant form for `#1..#4` acting through
/// `pi_i (+) T` on `k<u,v>/(u^2 - (-1)^n v^2)[t; sigma]`; `true` is `-1`.
pub fn invariant_form_sign(hopf: u32, i: usize, n: usize) -> impl Fn(usize, usize, usize) -> bool {
    move |j, k, m| {
        let e = match hopf {
            1 => (i + n + 1) * j + k,
            2 => (i + n + 1) * j,
            3 => n * j + m,
            _ => n * j + m + k,
        };
        e % 2 == 1
    }
}

/// `dim A_d^H` against `dim B_d^H` for a twisted pair.
pub fn twist_invariance_check<F: Scalar>(
    base: &InvariantRing<'_, F>,
    twisted: &InvariantRing<'_, F>,
) -> Vec<(usize, usize, usize)> {
    base.dims()
        .into_iter()
        .zip(twisted.dims())
        .enumerate()
        .filter(|(_, (x, y))| x != y)
        .map(|(d, (x, y))| (d, x, y))
        .collect()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{build_algebra, Presentation};
    use crate::hopf::catalog::catalog_get;
    use crate::poly::parse_poly;
    use crate::Cyc;

    fn k5() -> ActionAssignment<Cyc> {
        let h = Arc::new(catalog_get::<Cyc>(5).unwrap());
        let base = Presentation::from_strs(&['u', 'v'], &["uv - i vu"]).unwrap();
        let a = Arc::new(build_algebra(&base, None, 8).unwrap());
        let m = h.simple("pi1").unwrap().matrices.clone();
        ActionAssignment::new(h, a, m).unwrap()
    }

    #[test]
    fn k5_low_degrees() {
        let act = k5();
        let ring = InvariantRing::compute(&act, 8).unwrap();
        assert_eq!(&ring.dims()[..5], &[1, 0, 0, 0, 2]);
        let report = minimal_generators(&ring).unwrap();
        assert_eq!(report.degrees, vec![4, 4]);
        assert_eq!(report.degree_product, 16);
        assert_eq!(report.surrogate, Surrogate::RegularCandidate);
        assert_eq!(report.conjecture_holds, Some(true));
    }

    #[test]
    fn under_claim_fails_at_degree_four() {
        let act = k5();
        let ring = InvariantRing::compute(&act, 8).unwrap();
        let p = |s: &str| parse_poly::<Cyc>(s, &['u', 'v']).unwrap();
        let full = verify_claimed_generators(&ring, &[p("u^2 v^2"), p("u^4 - v^4")]).unwrap();
        assert!(full.passed());
        let part = verify_claimed_generators(&ring, &[p("u^2 v^2")]).unwrap();
        assert_eq!(part.first_failure, Some((4, 1, 2)));
        assert!(matches!(
            verify_claimed_generators(&ring, &[p("u^4")]),
            Err(Error::NotInvariant(_))
        ));
    }

    #[test]
    fn surrogate_rules() {
        assert_eq!(surrogate(2, &[4, 4], 12), Surrogate::RegularCandidate);
        assert_eq!(surrogate(2, &[4, 8, 8], 12), Surrogate::NotRegular);
        assert_eq!(surrogate(3, &[2, 4, 2], 12), Surrogate::RegularCandidate);
        assert_eq!(surrogate(3, &[2, 2, 4, 4], 12), Surrogate::NotRegular);
        assert_eq!(surrogate(2, &[4, 4], 5), Surrogate::Inconclusive);
        assert_eq!(surrogate(2, &[4], 12), Surrogate::Inconclusive);
    }
}
