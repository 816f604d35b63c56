//! Cocycle twists of graded algebras by a finite abelian group of
//! automorphisms: `a * b = sum Omega1.a Omega2.b` for
//! `Omega in k[F] (x) k[F]`.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{build_algebra, AlgebraHandle, Presentation};
use crate::error::{Error, Result};
use crate::linalg::{kernel, Matrix, SVec, SparseMatrix};
use crate::poly::{Poly, Word};
use crate::scalar::{Field, Scalar};

/// A finite group given by its multiplication table; element 0 is the
/// identity.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::Twist("group table has the wrong shape".into()));
        }
        if (0..n).any(|g| table[0][g] != g || table[g][0] != g) {
            return Err(Error::Twist("element 0 is not the identity".into()));
        }
        Ok(FiniteGroup { labels, table })
    }

    /// `C2 x C2` with generators `p`, `q`: elements `1, p, q, pq`.
    pub fn klein(p: &str, q: &str) -> Self {
        let labels = vec!["1".into(), p.into(), q.into(), format!("{p}{q}")];
        // index bits: bit0 = p, bit1 = q
        let table = (0..4)
            .map(|a| (0..4).map(|b| a ^ b).collect())
            .collect();
        FiniteGroup { labels, table }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// `Omega = sum c(g1, g2) g1 (x) g2`, stored densely.
#[derive(Clone, PartialEq)]
pub struct TwistElement<F> {
    group: FiniteGroup,
    coeffs: Vec<F>,
}

impl<F: Field> fmt::Debug for TwistElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.group.order();
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                format!("({c})*{}(x){}", self.group.label(k / n), self.group.label(k % n))
            })
            .collect();
        write!(f, "TwistElement[{}]", terms.join(" + "))
    }
}

impl<F: Scalar> TwistElement<F> {
    pub fn from_terms(group: FiniteGroup, terms: &[(usize, usize, F)]) -> Self {
        let n = group.order();
        let mut coeffs = vec![F::zero(); n * n];
        for (a, b, c) in terms {
            coeffs[a * n + b] = coeffs[a * n + b].add_ref(c);
        }
        TwistElement { group, coeffs }
    }

    pub fn one(group: FiniteGroup) -> Self {
        TwistElement::from_terms(group, &[(0, 0, F::one())])
    }

    /// `sum_{s,t} table[s][t] delta_s (x) delta_t` where
    /// `delta_s = sum_g idem[s][g] g`.
    pub fn from_idempotents(group: FiniteGroup, idem: &[Vec<F>], table: &[Vec<F>]) -> Self {
        let n = group.order();
        let mut terms = Vec::new();
        for (s, row) in table.iter().enumerate() {
            for (t, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for g1 in 0..n {
                    for g2 in 0..n {
                        let x = c.mul_ref(&idem[s][g1]).mul_ref(&idem[t][g2]);
                        terms.push((g1, g2, x));
                    }
                }
            }
        }
        TwistElement::from_terms(group, &terms)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn coeff(&self, a: usize, b: usize) -> &F {
        &self.coeffs[a * self.group.order() + b]
    }

    /// Nonzero terms `(g1, g2, c)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
        let n = self.group.order();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (k / n, k % n, c))
    }

    pub fn mul(&self, rhs: &TwistElement<F>) -> TwistElement<F> {
        let n = self.group.order();
        let mut coeffs = vec![F::zero(); n * n];
        for (a, b, x) in self.terms() {
            for (c, d, y) in rhs.terms() {
                let k = self.group.mul(a, c) * n + self.group.mul(b, d);
                coeffs[k] = coeffs[k].add_ref(&x.mul_ref(y));
            }
        }
        TwistElement {
            group: self.group.clone(),
            coeffs,
        }
    }

    /// Inverse in `k[F] (x) k[F]`, found by solving the linear system for
    /// right multiplication by `self`.
    pub fn inverse(&self) -> Option<TwistElement<F>> {
        let n = self.group.order();
        let nn = n * n;
        // Column k: self * basis_k.
        let mut m = Matrix::zeros(nn, nn);
        for k in 0..nn {
            let mut e = vec![F::zero(); nn];
            e[k] = F::one();
            let basis = TwistElement {
                group: self.group.clone(),
                coeffs: e,
            };
            let p = self.mul(&basis);
            for (r, c) in p.coeffs.into_iter().enumerate() {
                m.set(r, k, c);
            }
        }
        let inv = m.inverse()?;
        Some(TwistElement {
            group: self.group.clone(),
            coeffs: (0..nn).map(|r| inv.get(r, 0).clone()).collect(),
        })
    }

    /// `(eps (x) id)(Omega) = (id (x) eps)(Omega) = 1` with `eps(g) = 1`.
    pub fn is_normal(&self) -> bool {
        let n = self.group.order();
        let mut left = vec![F::zero(); n];
        let mut right = vec![F::zero(); n];
        for (a, b, c) in self.terms() {
            left[b] = left[b].add_ref(c);
            right[a] = right[a].add_ref(c);
        }
        let is_one = |v: &[F]| v.iter().enumerate().all(|(g, c)| {
            if g == 0 {
                c.is_one()
            } else {
                c.is_zero()
            }
        });
        is_one(&left) && is_one(&right)
    }

    /// `[(Delta (x) id)(Omega)](Omega (x) 1) = [(id (x) Delta)(Omega)](1 (x) Omega)`
    /// in `k[F]^{(x)3}`, with `Delta(g) = g (x) g`.
    pub fn is_dual_cocycle(&self) -> bool {
        let n = self.group.order();
        let idx = |a: usize, b: usize, c: usize| (a * n + b) * n + c;
        let mut lhs = vec![F::zero(); n * n * n];
        let mut rhs = vec![F::zero(); n * n * n];
        for (a, b, x) in self.terms() {
            for (c, d, y) in self.terms() {
                // (a (x) a (x) b)(c (x) d (x) 1)
                let k = idx(self.group.mul(a, c), self.group.mul(a, d), b);
                lhs[k] = lhs[k].add_ref(&x.mul_ref(y));
                // (a (x) b (x) b)(1 (x) c (x) d)
                let k = idx(a, self.group.mul(b, c), self.group.mul(b, d));
                rhs[k] = rhs[k].add_ref(&x.mul_ref(y));
            }
        }
        lhs == rhs
    }
}

/// `x * y = sum c (g1.x)(g2.y)` on `A`, given per-degree matrices `rho[g][d]`
/// of the group action and the untwisted product `mul`.
pub fn twisted_mul<F: Scalar>(
    omega: &TwistElement<F>,
    rho: &[Vec<SparseMatrix<F>>],
    mul: &dyn Fn(usize, &SVec<F>, usize, &SVec<F>) -> Result<SVec<F>>,
    da: usize,
    x: &SVec<F>,
    db: usize,
    y: &SVec<F>,
) -> Result<SVec<F>> {
    let mut out = SVec::zero();
    for (g1, g2, c) in omega.terms() {
        let gx = rho[g1][da].apply(x);
        let gy = rho[g2][db].apply(y);
        if gx.is_zero() || gy.is_zero() {
            continue;
        }
        out = out.add_scaled(c, &mul(da, &gx, db, &gy)?);
    }
    Ok(out)
}

/// The twisted algebra `A_Omega`, re-presented in new degree-one generators
/// as an ordinary handle `B`, with the isomorphism `phi: B -> A_Omega`.
pub struct TwistedAlgebra<F> {
    pub twisted: Arc<AlgebraHandle<F>>,
    /// Columns: the new generators in coordinates of `A_1`.
    pub new_basis: Matrix<F>,
    omega: TwistElement<F>,
    rho: Vec<Vec<SparseMatrix<F>>>,
    phi: Vec<Matrix<F>>,
    phi_inv: Vec<Matrix<F>>,
}

impl<F: Field> fmt::Debug for TwistedAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TwistedAlgebra")
            .field("twisted", &self.twisted)
            .finish()
    }
}

impl<F: Scalar> AlgebraHandle<F> {
    /// Whether the linear map `m1` on `A_1` respects the relations.
    pub fn is_automorphism(&self, m1: &Matrix<F>) -> Result<bool> {
        let n = self.ngens();
        if m1.nrows() != n || m1.ncols() != n || m1.inverse().is_none() {
            return Ok(false);
        }
        let images: Vec<Poly<F>> = (0..n)
            .map(|j| Poly::from_terms((0..n).map(|i| (Word::letter(i as u8), m1.get(i, j).clone()))))
            .collect();
        for r in &self.presentation().relations {
            if !self.normal_form(&r.substitute(&images))?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Twist `a` by `omega`, where group element `g` acts on `A_1` by
/// `action[g]`. The new generators are the columns of `new_basis` (default:
/// the old generators) named `names`.
pub fn twist_algebra<F: Scalar>(
    a: &AlgebraHandle<F>,
    action: &[Matrix<F>],
    omega: &TwistElement<F>,
    new_basis: Option<Matrix<F>>,
    names: &[char],
    bound: usize,
) -> Result<TwistedAlgebra<F>> {
    let n = a.ngens();
    if action.len() != omega.group().order() {
        return Err(Error::Twist(format!(
            "{} action matrices for a group of order {}",
            action.len(),
            omega.group().order()
        )));
    }
    if !omega.is_normal() {
        return Err(Error::Twist("twist element is not normal".into()));
    }
    if omega.inverse().is_none() {
        return Err(Error::Twist("twist element is not invertible".into()));
    }
    for (g, m) in action.iter().enumerate() {
        if !a.is_automorphism(m)? {
            return Err(Error::Twist(format!(
                "group element {} does not act by an automorphism",
                omega.group().label(g)
            )));
        }
    }
    if bound > a.bound() {
        return Err(Error::DegreeBound {
            requested: bound,
            bound: a.bound(),
        });
    }
    let p = new_basis.unwrap_or_else(|| Matrix::identity(n));
    if p.nrows() != n || p.ncols() != n || p.inverse().is_none() || names.len() != n {
        return Err(Error::Twist("new basis must be an invertible change of generators".into()));
    }
    let rho: Vec<Vec<SparseMatrix<F>>> = action.iter().map(|m| a.automorphism(m)).collect();
    let mul = |da: usize, x: &SVec<F>, db: usize, y: &SVec<F>| a.mul_vec(da, x, db, y);
    let gens: Vec<SVec<F>> = p.columns();

    // Twisted degree-2 products of the new generators.
    let mut cols = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            cols.push(twisted_mul(omega, &rho, &mul, 1, &gens[i], 1, &gens[j])?);
        }
    }
    let ker = kernel(&cols);
    let expected = n * n - a.dim(2);
    if ker.len() != expected {
        return Err(Error::Twist(format!(
            "twisted degree-2 kernel has dimension {}, expected {expected}",
            ker.len()
        )));
    }
    let relations: Vec<Poly<F>> = ker
        .iter()
        .map(|v| {
            Poly::from_terms(
                v.iter()
                    .map(|(k, c)| (Word(vec![(k / n) as u8, (k % n) as u8]), c.clone())),
            )
            .monic()
        })
        .collect();
    let b = build_algebra(&Presentation::new(names, relations), None, bound)
        .map_err(|e| Error::Twist(format!("twisted algebra fails validation: {e}")))?;

    // phi(g w') = X_g * phi(w')
    let mut phi: Vec<Matrix<F>> = vec![Matrix::identity(1)];
    let mut phi_cols: Vec<Vec<SVec<F>>> = vec![vec![SVec::unit(0)]];
    for d in 1..=bound {
        let mut cols = Vec::with_capacity(b.dim(d));
        for w in b.basis(d) {
            let (g, rest) = w.letters().split_first().unwrap();
            let j = b.word_index(d - 1, &Word(rest.to_vec())).expect("suffix is normal");
            let tail = &phi_cols[d - 1][j];
            cols.push(twisted_mul(omega, &rho, &mul, 1, &gens[*g as usize], d - 1, tail)?);
        }
        phi.push(Matrix::from_columns(a.dim(d), &cols));
        phi_cols.push(cols);
    }
    let phi_inv = phi
        .iter()
        .enumerate()
        .map(|(d, m)| {
            m.inverse()
                .ok_or_else(|| Error::Twist(format!("phi is singular in degree {d}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TwistedAlgebra {
        twisted: Arc::new(b),
        new_basis: p,
        omega: omega.clone(),
        rho,
        phi,
        phi_inv,
    })
}

impl<F: Scalar> TwistedAlgebra<F> {
    pub fn omega(&self) -> &TwistElement<F> {
        &self.omega
    }

    /// `B_d -> A_d`.
    pub fn phi(&self, d: usize) -> &Matrix<F> {
        &self.phi[d]
    }

    pub fn phi_inv(&self, d: usize) -> &Matrix<F> {
        &self.phi_inv[d]
    }

    /// Group action on `A_d`.
    pub fn rho(&self, g: usize, d: usize) -> &SparseMatrix<F> {
        &self.rho[g][d]
    }

    /// Twisted product on the underlying space of `A`.
    pub fn star(
        &self,
        base: &AlgebraHandle<F>,
        da: usize,
        x: &SVec<F>,
        db: usize,
        y: &SVec<F>,
    ) -> Result<SVec<F>> {
        let mul = |da: usize, x: &SVec<F>, db: usize, y: &SVec<F>| base.mul_vec(da, x, db, y);
        twisted_mul(&self.omega, &self.rho, &mul, da, x, db, y)
    }

    /// Transport a linear map on `A_d` to `B_d`: `phi^-1 m phi`.
    pub fn transport(&self, d: usize, m: &SparseMatrix<F>) -> SparseMatrix<F> {
        let cols = self.phi[d]
            .columns()
            .iter()
            .map(|c| self.phi_inv[d].apply(&m.apply(c)))
            .collect();
        SparseMatrix {
            nrows: self.phi[d].nrows(),
            cols,
        }
    }

    /// Image in `A` of an element of `B`.
    pub fn to_base(&self, d: usize, v: &SVec<F>) -> SVec<F> {
        self.phi[d].apply(v)
    }

    pub fn from_base(&self, d: usize, v: &SVec<F>) -> SVec<F> {
        self.phi_inv[d].apply(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Cyc;

    #[test]
    fn klein_table() {
        let g = FiniteGroup::klein("c", "b");
        assert_eq!(g.mul(1, 2), 3);
        assert_eq!(g.mul(3, 3), 0);
        assert_eq!(g.label(3), "cb");
    }

    #[test]
    fn trivial_twist_is_normal_cocycle() {
        let t = TwistElement::<Cyc>::one(FiniteGroup::klein("c", "b"));
        assert!(t.is_normal());
        assert!(t.is_dual_cocycle());
        assert_eq!(t.inverse().unwrap(), t);
    }

    #[test]
    fn non_normal_detected() {
        let g = FiniteGroup::klein("c", "b");
        let t = TwistElement::from_terms(g, &[(0, 0, Cyc::from_int(2))]);
        assert!(!t.is_normal());
    }
}
