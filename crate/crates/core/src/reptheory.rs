//! Finite-dimensional modules over a catalog Hopf algebra: tensor products,
//! decomposition into simples and inner-faithfulness.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hopf::{HopfSpec, SimpleRep};
use crate::linalg::{rank, Matrix, SVec};
use crate::poly::Word;
use crate::scalar::Scalar;

/// Closure iterations allowed before giving up on a fixpoint.
pub const CLOSURE_CAP: usize = 32;

/// A module given by one matrix per Hopf generator.
#[derive(Clone, Debug, PartialEq)]
pub struct RepHandle<F> {
    pub matrices: Vec<Matrix<F>>,
}

impl<F: Scalar> RepHandle<F> {
    pub fn new(matrices: Vec<Matrix<F>>) -> Self {
        RepHandle { matrices }
    }

    pub fn from_simple(s: &SimpleRep<F>) -> Self {
        RepHandle::new(s.matrices.clone())
    }

    /// The counit as a one-dimensional module.
    pub fn trivial(spec: &HopfSpec<F>) -> Self {
        RepHandle::new(
            spec.counit
                .iter()
                .map(|e| Matrix::from_rows(vec![vec![e.clone()]]))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.matrices.first().map_or(0, Matrix::nrows)
    }

    pub fn direct_sum(&self, other: &RepHandle<F>) -> Self {
        RepHandle::new(
            self.matrices
                .iter()
                .zip(&other.matrices)
                .map(|(a, b)| a.direct_sum(b))
                .collect(),
        )
    }

    /// `V (x) W` through the coproduct; basis `v_i (x) w_j` at `i dim W + j`.
    pub fn tensor(spec: &HopfSpec<F>, v: &RepHandle<F>, w: &RepHandle<F>) -> Result<Self> {
        let n = spec.ngens();
        if v.matrices.len() != n || w.matrices.len() != n {
            return Err(Error::Dimension(format!(
                "modules over #{} need {n} matrices",
                spec.id
            )));
        }
        Ok(RepHandle::new(
            (0..n)
                .map(|h| spec.coproduct_matrix(h, &v.matrices, &w.matrices))
                .collect(),
        ))
    }
}

/// Dimension of `{M : M s(h) = v(h) M for all h}`.
pub fn intertwiner_dim<F: Scalar>(s: &[Matrix<F>], v: &[Matrix<F>]) -> usize {
    let ds = s.first().map_or(0, Matrix::nrows);
    let dv = v.first().map_or(0, Matrix::nrows);
    let block = dv * ds;
    let mut cols = Vec::with_capacity(block);
    for r in 0..dv {
        for c in 0..ds {
            // image of the matrix unit E_{rc}
            let mut entries = Vec::new();
            for (h, (a, b)) in s.iter().zip(v).enumerate() {
                let mut img = vec![F::zero(); block];
                for j in 0..ds {
                    img[r * ds + j] = img[r * ds + j].add_ref(a.get(c, j));
                }
                for i in 0..dv {
                    img[i * ds + c] = img[i * ds + c].sub_ref(b.get(i, r));
                }
                entries.extend(
                    img.into_iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(k, x)| (h * block + k, x)),
                );
            }
            cols.push(SVec::from_entries(entries));
        }
    }
    block - rank(&cols)
}

/// Irreducible iff the commutant consists of scalars.
pub fn is_irreducible<F: Scalar>(mats: &[Matrix<F>]) -> bool {
    intertwiner_dim(mats, mats) == 1
}

/// Multiplicities of the catalog simples, in catalog order, zeros omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub parts: Vec<(String, usize)>,
}

impl Decomposition {
    pub fn multiplicity(&self, label: &str) -> usize {
        self.parts
            .iter()
            .find(|(l, _)| l == label)
            .map_or(0, |(_, m)| *m)
    }

    pub fn labels(&self) -> Vec<String> {
        self.parts.iter().map(|(l, _)| l.clone()).collect()
    }

    /// The multiset as a sorted label list, repeated by multiplicity.
    pub fn multiset(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .parts
            .iter()
            .flat_map(|(l, m)| std::iter::repeat_n(l.clone(), *m))
            .collect();
        out.sort();
        out
    }
}

impl std::fmt::Display for Decomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|(l, m)| if *m == 1 { l.clone() } else { format!("{m}*{l}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn decompose<F: Scalar>(spec: &HopfSpec<F>, v: &RepHandle<F>) -> Result<Decomposition> {
    if spec.external {
        return Err(Error::Unsupported(spec.id, spec.notes.clone()));
    }
    let mut parts = Vec::new();
    let mut total = 0;
    for s in &spec.simples {
        let m = intertwiner_dim(&s.matrices, &v.matrices);
        if m > 0 {
            total += m * s.dim();
            parts.push((s.label.clone(), m));
        }
    }
    if total != v.dim() {
        return Err(Error::Decomposition(format!(
            "simples account for {total} of {} dimensions in #{}",
            v.dim(),
            spec.id
        )));
    }
    Ok(Decomposition { parts })
}

/// Result of the tensor-power closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerFaithfulness {
    pub inner_faithful: bool,
    /// First tensor power in which each reached simple occurs.
    pub first_power: Vec<(String, usize)>,
    /// Simples never reached (empty when inner-faithful).
    pub missing: Vec<String>,
}

/// Every simple must occur in some `V^{(x) n}`. The constituents of
/// `V^{(x) n+1}` are those of `S (x) C` over constituents `S` of `V^{(x) n}`
/// and `C` of `V`; the sequence of constituent sets is eventually periodic.
pub fn is_inner_faithful<F: Scalar>(
    spec: &HopfSpec<F>,
    v: &RepHandle<F>,
) -> Result<InnerFaithfulness> {
    let base: BTreeSet<usize> = constituents(spec, v)?;
    let simples: Vec<RepHandle<F>> = spec.simples.iter().map(RepHandle::from_simple).collect();
    let mut products: HashMap<(usize, usize), BTreeSet<usize>> = HashMap::new();
    let mut first: BTreeMap<usize, usize> = base.iter().map(|&s| (s, 1)).collect();
    let mut seen: Vec<BTreeSet<usize>> = vec![base.clone()];
    let mut current = base.clone();
    for n in 2..=CLOSURE_CAP {
        if first.len() == spec.simples.len() {
            break;
        }
        let pending: Vec<(usize, usize)> = current
            .iter()
            .flat_map(|&s| base.iter().map(move |&c| (s, c)))
            .filter(|k| !products.contains_key(k))
            .collect();
        let fresh: Vec<((usize, usize), Result<BTreeSet<usize>>)> = pending
            .par_iter()
            .map(|&(s, c)| {
                let t = RepHandle::tensor(spec, &simples[s], &simples[c]);
                ((s, c), t.and_then(|t| constituents(spec, &t)))
            })
            .collect();
        for (k, r) in fresh {
            products.insert(k, r?);
        }
        let next: BTreeSet<usize> = current
            .iter()
            .flat_map(|&s| base.iter().map(move |&c| (s, c)))
            .flat_map(|k| products[&k].iter().copied().collect::<Vec<_>>())
            .collect();
        for &s in &next {
            first.entry(s).or_insert(n);
        }
        if seen.contains(&next) {
            break;
        }
        seen.push(next.clone());
        current = next;
    }
    let first_power = first
        .iter()
        .map(|(&s, &n)| (spec.simples[s].label.clone(), n))
        .collect();
    let missing: Vec<String> = (0..spec.simples.len())
        .filter(|s| !first.contains_key(s))
        .map(|s| spec.simples[s].label.clone())
        .collect();
    Ok(InnerFaithfulness {
        inner_faithful: missing.is_empty(),
        first_power,
        missing,
    })
}

fn constituents<F: Scalar>(spec: &HopfSpec<F>, v: &RepHandle<F>) -> Result<BTreeSet<usize>> {
    let d = decompose(spec, v)?;
    Ok(spec
        .simples
        .iter()
        .enumerate()
        .filter(|(_, s)| d.multiplicity(&s.label) > 0)
        .map(|(k, _)| k)
        .collect())
}

/// A nontrivial grouplike acting as the identity on `V`. Such a `g` puts
/// the Hopf ideal generated by `1 - g` in the annihilator.
pub fn grouplike_kernel_witness<F: Scalar>(spec: &HopfSpec<F>, v: &RepHandle<F>) -> Option<Word> {
    let id = Matrix::identity(v.dim());
    spec.grouplikes
        .iter()
        .filter(|g| !g.is_empty())
        .find(|g| spec.eval_word(&v.matrices, g) == id)
        .cloned()
}
