//! Hopf algebra presentations and their actions on graded algebras.
//!
//! A non-grouplike generator acts on a product through its coproduct,
//! `h.(a w') = sum c (L.a)(R.w')`, which determines the action on every
//! degree from the matrices on `A_1`.

pub mod catalog;

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::{check_ore, AlgebraHandle, OreData, Presentation};
use crate::error::{Error, Result};
use crate::linalg::{Accum, EchelonBasis, Matrix, SVec, SparseMatrix};
use crate::poly::{parse_poly, Poly, Word};
use crate::scalar::{Field, Scalar};
use crate::twist::{TwistElement, TwistedAlgebra};

#[derive(Clone, Debug, PartialEq)]
pub struct HopfGen {
    pub name: char,
    pub grouplike: bool,
}

/// One summand `coeff * left (x) right` of a coproduct; legs are words in
/// the Hopf generators.
#[derive(Clone, Debug, PartialEq)]
pub struct CoproductTerm<F> {
    pub coeff: F,
    pub left: Word,
    pub right: Word,
}

/// An irreducible representation given by one matrix per Hopf generator.
#[derive(Clone, Debug, PartialEq)]
pub struct SimpleRep<F> {
    pub label: String,
    pub matrices: Vec<Matrix<F>>,
}

impl<F: Field> SimpleRep<F> {
    pub fn dim(&self) -> usize {
        self.matrices.first().map_or(0, Matrix::nrows)
    }
}

/// A dual cocycle on an abelian subgroup, with the subgroup elements written
/// as words in the Hopf generators.
#[derive(Clone, PartialEq)]
pub struct TwistSpec<F> {
    pub elements: Vec<Word>,
    pub omega: TwistElement<F>,
}

#[derive(Clone, PartialEq)]
pub struct HopfSpec<F> {
    pub id: u32,
    pub name: String,
    /// Data lives outside this catalog; only the identification is stored.
    pub external: bool,
    pub notes: String,
    pub gens: Vec<HopfGen>,
    /// Each relation is an element of the free algebra that vanishes in `H`.
    pub relations: Vec<Poly<F>>,
    pub coproducts: Vec<Vec<CoproductTerm<F>>>,
    pub counit: Vec<F>,
    /// The group of grouplike elements, identity first.
    pub grouplikes: Vec<Word>,
    pub simples: Vec<SimpleRep<F>>,
    pub twist: Option<TwistSpec<F>>,
}

impl<F: Field> fmt::Debug for TwistSpec<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TwistSpec")
            .field("elements", &self.elements)
            .field("omega", &self.omega)
            .finish()
    }
}

impl<F: Field> fmt::Debug for HopfSpec<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HopfSpec")
            .field("id", &self.id)
            .field("name", &self.name)
            .field("external", &self.external)
            .field("gens", &self.gens)
            .field("relations", &self.relations)
            .field("coproducts", &self.coproducts)
            .field("simples", &self.simples)
            .field("twist", &self.twist)
            .finish()
    }
}

impl<F: Scalar> HopfSpec<F> {
    pub fn names(&self) -> Vec<char> {
        self.gens.iter().map(|g| g.name).collect()
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn gen_index(&self, name: char) -> Result<usize> {
        self.gens
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::Format(format!("unknown Hopf generator '{name}' in #{}", self.id)))
    }

    fn require_data(&self) -> Result<()> {
        if self.external {
            Err(Error::Unsupported(self.id, self.notes.clone()))
        } else {
            Ok(())
        }
    }

    /// Parse a monomial such as `x*y*w` or `a^4*b`; `1` is the empty word.
    pub fn parse_word(&self, src: &str) -> Result<Word> {
        let p: Poly<F> = parse_poly(src, &self.names())?;
        let word = match p.terms().next() {
            Some((w, c)) if p.num_terms() == 1 && c.is_one() => Some(w.clone()),
            _ => None,
        };
        word.ok_or_else(|| Error::Format(format!("'{src}' is not a word in the Hopf generators")))
    }

    pub fn render_word(&self, w: &Word) -> String {
        if w.is_empty() {
            "1".into()
        } else {
            w.render(&self.names())
        }
    }

    pub fn word_counit(&self, w: &Word) -> F {
        w.letters()
            .iter()
            .fold(F::one(), |acc, &g| acc.mul_ref(&self.counit[g as usize]))
    }

    /// `(eps (x) id) Delta(h) = h` and `(id (x) eps) Delta(h) = h` as
    /// elements of the free algebra.
    pub fn counit_axiom(&self, h: usize) -> bool {
        let mut left = Poly::zero();
        let mut right = Poly::zero();
        for t in &self.coproducts[h] {
            left.add_term(t.right.clone(), &t.coeff.mul_ref(&self.word_counit(&t.left)));
            right.add_term(t.left.clone(), &t.coeff.mul_ref(&self.word_counit(&t.right)));
        }
        let target = Poly::gen(h as u8);
        left == target && right == target
    }

    /// Matrix of a word under one matrix per generator.
    pub fn eval_word(&self, mats: &[Matrix<F>], w: &Word) -> Matrix<F> {
        let n = mats.first().map_or(0, Matrix::nrows);
        w.letters()
            .iter()
            .fold(Matrix::identity(n), |acc, &g| acc.mul(&mats[g as usize]))
    }

    pub fn eval_poly(&self, mats: &[Matrix<F>], p: &Poly<F>) -> Matrix<F> {
        let n = mats.first().map_or(0, Matrix::nrows);
        let mut out = Matrix::zeros(n, n);
        for (w, c) in p.terms() {
            out = out.add(&self.eval_word(mats, w).scale(c));
        }
        out
    }

    /// The first relation of `H` that the matrices violate.
    pub fn violated_relation(&self, mats: &[Matrix<F>]) -> Option<String> {
        self.relations
            .iter()
            .find(|r| !self.eval_poly(mats, r).is_zero())
            .map(|r| r.render(&self.names()))
    }

    /// `Delta(h)` on `V (x) W`, given matrices for `V` and `W`.
    pub fn coproduct_matrix(&self, h: usize, v: &[Matrix<F>], w: &[Matrix<F>]) -> Matrix<F> {
        let dv = v.first().map_or(0, Matrix::nrows);
        let dw = w.first().map_or(0, Matrix::nrows);
        let mut out = Matrix::zeros(dv * dw, dv * dw);
        for t in &self.coproducts[h] {
            let k = self.eval_word(v, &t.left).kron(&self.eval_word(w, &t.right));
            out = out.add(&k.scale(&t.coeff));
        }
        out
    }

    pub fn simple(&self, label: &str) -> Result<&SimpleRep<F>> {
        self.simples
            .iter()
            .find(|s| s.label == label)
            .ok_or_else(|| Error::Format(format!("#{} has no simple module {label}", self.id)))
    }

    /// Matrices of the twisting subgroup elements on a representation.
    pub fn twist_action(&self, mats: &[Matrix<F>]) -> Result<Vec<Matrix<F>>> {
        let tw = self
            .twist
            .as_ref()
            .ok_or_else(|| Error::Twist(format!("#{} carries no twist", self.id)))?;
        Ok(tw.elements.iter().map(|w| self.eval_word(mats, w)).collect())
    }
}

/// An action of `H` on a graded algebra, tabulated degree by degree.
pub struct ActionAssignment<F> {
    spec: Arc<HopfSpec<F>>,
    algebra: Arc<AlgebraHandle<F>>,
    degree_one: Vec<Matrix<F>>,
    /// `tables[h][d]`: the action of generator `h` on `A_d`.
    tables: Vec<Vec<SparseMatrix<F>>>,
}

impl<F: Field> fmt::Debug for ActionAssignment<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ActionAssignment")
            .field("hopf", &self.spec.id)
            .field("algebra", &self.algebra)
            .finish()
    }
}

impl<F: Scalar> ActionAssignment<F> {
    /// Extend the degree-one matrices to every degree through the coproduct.
    /// Does not check the module-algebra axioms; see [`check_module_algebra`].
    pub fn new(
        spec: Arc<HopfSpec<F>>,
        algebra: Arc<AlgebraHandle<F>>,
        degree_one: Vec<Matrix<F>>,
    ) -> Result<Self> {
        spec.require_data()?;
        let n = algebra.ngens();
        if degree_one.len() != spec.ngens()
            || degree_one.iter().any(|m| m.nrows() != n || m.ncols() != n)
        {
            return Err(Error::Dimension(format!(
                "need {} matrices of size {n}x{n} for #{}",
                spec.ngens(),
                spec.id
            )));
        }
        let mut tables: Vec<Vec<SparseMatrix<F>>> = (0..spec.ngens())
            .map(|h| {
                let e = spec.counit[h].clone();
                vec![
                    SparseMatrix {
                        nrows: 1,
                        cols: vec![SVec::from_entries([(0, e)])],
                    },
                    SparseMatrix::from_matrix(&degree_one[h]),
                ]
            })
            .collect();
        for d in 2..=algebra.bound() {
            let next: Vec<SparseMatrix<F>> = (0..spec.ngens())
                .map(|h| {
                    let cols = algebra
                        .basis(d)
                        .par_iter()
                        .map(|w| {
                            let (g, rest) = w.letters().split_first().unwrap();
                            let j = algebra
                                .word_index(d - 1, &Word(rest.to_vec()))
                                .expect("suffix of a normal word is normal");
                            coproduct_column(
                                &spec,
                                &algebra,
                                &degree_one,
                                &tables,
                                h,
                                *g as usize,
                                d - 1,
                                &SVec::unit(j),
                            )
                        })
                        .collect();
                    SparseMatrix {
                        nrows: algebra.dim(d),
                        cols,
                    }
                })
                .collect();
            for (t, m) in tables.iter_mut().zip(next) {
                t.push(m);
            }
        }
        Ok(ActionAssignment {
            spec,
            algebra,
            degree_one,
            tables,
        })
    }

    /// The same linear maps carried to the twisted algebra through
    /// `phi: B -> A_Omega`.
    pub fn transported(&self, tw: &TwistedAlgebra<F>) -> Result<Self> {
        let b = tw.twisted.clone();
        if b.bound() > self.algebra.bound() {
            return Err(Error::DegreeBound {
                requested: b.bound(),
                bound: self.algebra.bound(),
            });
        }
        let tables: Vec<Vec<SparseMatrix<F>>> = self
            .tables
            .iter()
            .map(|t| (0..=b.bound()).map(|d| tw.transport(d, &t[d])).collect())
            .collect();
        let degree_one = tables.iter().map(|t| t[1].to_matrix()).collect();
        Ok(ActionAssignment {
            spec: self.spec.clone(),
            algebra: b,
            degree_one,
            tables,
        })
    }

    pub fn spec(&self) -> &Arc<HopfSpec<F>> {
        &self.spec
    }

    pub fn algebra(&self) -> &Arc<AlgebraHandle<F>> {
        &self.algebra
    }

    pub fn degree_one(&self) -> &[Matrix<F>] {
        &self.degree_one
    }

    /// Action of generator `h` on `A_d`.
    pub fn table(&self, h: usize, d: usize) -> &SparseMatrix<F> {
        &self.tables[h][d]
    }

    /// Apply a word in the Hopf generators to an element of `A_d`.
    pub fn apply_word(&self, w: &Word, d: usize, v: &SVec<F>) -> SVec<F> {
        w.letters()
            .iter()
            .rev()
            .fold(v.clone(), |acc, &g| self.tables[g as usize][d].apply(&acc))
    }

    /// `h.p` for a word `h` in the Hopf generators (for example `x*y*w`).
    pub fn act(&self, h: &str, p: &Poly<F>) -> Result<Poly<F>> {
        let w = self.spec.parse_word(h)?;
        let e = self.algebra.elem(p)?;
        Ok(self.algebra.vec_to_poly(e.degree, &self.apply_word(&w, e.degree, &e.vec)))
    }

    /// `h.(a b)` computed from the coproduct of generator `h` and the
    /// tabulated action on the factors, for any split of the product.
    pub fn act_on_product(
        &self,
        h: usize,
        da: usize,
        a: &SVec<F>,
        db: usize,
        b: &SVec<F>,
    ) -> Result<SVec<F>> {
        let mut acc = SVec::zero();
        for t in &self.spec.coproducts[h] {
            let l = self.apply_word(&t.left, da, a);
            let r = self.apply_word(&t.right, db, b);
            if l.is_zero() || r.is_zero() {
                continue;
            }
            acc = acc.add_scaled(&t.coeff, &self.algebra.mul_vec(da, &l, db, &r)?);
        }
        Ok(acc)
    }
}

/// Column of `h` on the basis word `g w'`: `sum c (L.g)(R.w')`, the left
/// leg evaluated on `A_1` and the right leg on `A_{d}` through the tables.
#[allow(clippy::too_many_arguments)]
fn coproduct_column<F: Scalar>(
    spec: &HopfSpec<F>,
    algebra: &AlgebraHandle<F>,
    degree_one: &[Matrix<F>],
    tables: &[Vec<SparseMatrix<F>>],
    h: usize,
    g: usize,
    d: usize,
    tail: &SVec<F>,
) -> SVec<F> {
    let mut acc = Accum::new(algebra.dim(d + 1));
    for t in &spec.coproducts[h] {
        let left = spec.eval_word(degree_one, &t.left).column(g);
        let right = t
            .right
            .letters()
            .iter()
            .rev()
            .fold(tail.clone(), |v, &k| tables[k as usize][d].apply(&v));
        if right.is_zero() {
            continue;
        }
        for (k, c) in left.iter() {
            let x = t.coeff.mul_ref(c);
            acc.add_scaled(&x, &algebra.lmul(d, *k).apply(&right));
        }
    }
    acc.take()
}

/// What went wrong in a module-algebra check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// Matrices of the wrong size.
    Shape,
    /// A defining relation of `H` fails on `A_1`.
    HopfRelation,
    /// The coproduct is not counital.
    Counit,
    /// `sigma` is not an automorphism of the base algebra.
    Ore,
    /// A generator moves a degree-two relation out of the relation span.
    RelationSpan,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub generator: Option<char>,
    pub relation: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ViolationKind::Shape => "shape",
            ViolationKind::HopfRelation => "Hopf relation fails on A_1",
            ViolationKind::Counit => "coproduct is not counital",
            ViolationKind::Ore => "Ore data",
            ViolationKind::RelationSpan => "relation span not stable",
        };
        write!(f, "{what}")?;
        if let Some(g) = self.generator {
            write!(f, " (generator {g})")?;
        }
        write!(f, ": {}", self.relation)
    }
}

/// Outcome of [`check_module_algebra`]: empty means the action is valid.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ModuleReport {
    pub violations: Vec<Violation>,
}

impl ModuleReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        match self.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::NotModuleAlgebra(v.to_string())),
        }
    }
}

/// Check that `degree_one` (matrices on the generators of `base`, then `t`
/// when `ore` is given) defines an `H`-module algebra structure.
pub fn check_module_algebra<F: Scalar>(
    spec: &HopfSpec<F>,
    base: &Presentation<F>,
    ore: Option<&OreData<F>>,
    degree_one: &[Matrix<F>],
) -> ModuleReport {
    let mut report = ModuleReport::default();
    if spec.external {
        report.violations.push(Violation {
            kind: ViolationKind::Shape,
            generator: None,
            relation: format!("#{} has no catalog data", spec.id),
        });
        return report;
    }
    let full = match ore {
        Some(o) => base.with_ore(o),
        None => base.clone(),
    };
    let n = full.names.len();
    if degree_one.len() != spec.ngens()
        || degree_one.iter().any(|m| m.nrows() != n || m.ncols() != n)
    {
        report.violations.push(Violation {
            kind: ViolationKind::Shape,
            generator: None,
            relation: format!("expected {} matrices of size {n}x{n}", spec.ngens()),
        });
        return report;
    }
    for (h, g) in spec.gens.iter().enumerate() {
        if !spec.counit_axiom(h) {
            report.violations.push(Violation {
                kind: ViolationKind::Counit,
                generator: Some(g.name),
                relation: "(eps (x) id) Delta(h) = h".into(),
            });
        }
    }
    if let Some(o) = ore {
        if let Err(e) = check_ore(base, o) {
            report.violations.push(Violation {
                kind: ViolationKind::Ore,
                generator: Some(o.name),
                relation: e.to_string(),
            });
        }
    }
    if let Some(r) = spec.violated_relation(degree_one) {
        report.violations.push(Violation {
            kind: ViolationKind::HopfRelation,
            generator: None,
            relation: r,
        });
    }
    let rel_vecs: Vec<SVec<F>> = full.relations.iter().map(|r| quadratic_vec(r, n)).collect();
    let span = EchelonBasis::from_vectors(&rel_vecs);
    for (h, g) in spec.gens.iter().enumerate() {
        let m = spec.coproduct_matrix(h, degree_one, degree_one);
        for (r, v) in full.relations.iter().zip(&rel_vecs) {
            if !span.contains(&m.apply(v)) {
                report.violations.push(Violation {
                    kind: ViolationKind::RelationSpan,
                    generator: Some(g.name),
                    relation: r.render(&full.names),
                });
            }
        }
    }
    report
}

/// The module-algebra check for `H^J` acting on a twisted algebra: the
/// relations of `B` must be stable under `J^-1 Delta(h) J`.
pub fn check_twisted_module_algebra<F: Scalar>(
    spec: &HopfSpec<F>,
    degree_one: &[Matrix<F>],
    base: &AlgebraHandle<F>,
    tw: &TwistedAlgebra<F>,
) -> Result<ModuleReport> {
    let mut report = ModuleReport::default();
    let n = base.ngens();
    let group_mats = spec.twist_action(degree_one)?;
    let omega = tw.omega();
    let mut jv = Matrix::zeros(n * n, n * n);
    for (g1, g2, c) in omega.terms() {
        jv = jv.add(&group_mats[g1].kron(&group_mats[g2]).scale(c));
    }
    let jv_inv = jv
        .inverse()
        .ok_or_else(|| Error::Twist("twist acts singularly on A_1 (x) A_1".into()))?;
    let p = tw.new_basis.kron(&tw.new_basis);
    let b = &tw.twisted;
    let rels: Vec<SVec<F>> = b
        .presentation()
        .relations
        .iter()
        .map(|r| p.apply(&quadratic_vec(r, n)))
        .collect();
    // Relations of B hold in A_J.
    let words: Vec<Word> = (0..n * n)
        .map(|k| Word(vec![(k / n) as u8, (k % n) as u8]))
        .collect();
    for (r, v) in b.presentation().relations.iter().zip(&rels) {
        let jr = jv.apply(v);
        let poly = Poly::from_terms(jr.iter().map(|(k, c)| (words[*k].clone(), c.clone())));
        if !base.normal_form(&poly)?.is_zero() {
            report.violations.push(Violation {
                kind: ViolationKind::RelationSpan,
                generator: None,
                relation: format!("{} does not vanish in A_J", r.render(b.names())),
            });
        }
    }
    let span = EchelonBasis::from_vectors(&rels);
    for (h, g) in spec.gens.iter().enumerate() {
        let m = jv_inv
            .mul(&spec.coproduct_matrix(h, degree_one, degree_one))
            .mul(&jv);
        for (r, v) in b.presentation().relations.iter().zip(&rels) {
            if !span.contains(&m.apply(v)) {
                report.violations.push(Violation {
                    kind: ViolationKind::RelationSpan,
                    generator: Some(g.name),
                    relation: r.render(b.names()),
                });
            }
        }
    }
    Ok(report)
}

/// Coordinates of a quadratic relation in `V (x) V`, word `ij` at `i n + j`.
fn quadratic_vec<F: Field>(r: &Poly<F>, n: usize) -> SVec<F> {
    SVec::from_entries(r.terms().map(|(w, c)| {
        let l = w.letters();
        (l[0] as usize * n + l[1] as usize, c.clone())
    }))
}
