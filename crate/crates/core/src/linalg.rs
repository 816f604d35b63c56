//! Exact linear algebra over a [`Field`]: sparse vectors, incremental
//! echelon bases, kernels and small dense matrices.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Field;

/// Sparse vector, entries sorted by index, no stored zeros.
#[derive(Clone, PartialEq)]
pub struct SVec<F> {
    entries: Vec<(usize, F)>,
}

impl<F: Field> Default for SVec<F> {
    fn default() -> Self {
        SVec::zero()
    }
}

impl<F: Field> SVec<F> {
    pub fn zero() -> Self {
        SVec {
            entries: Vec::new(),
        }
    }

    pub fn unit(i: usize) -> Self {
        SVec {
            entries: vec![(i, F::one())],
        }
    }

    /// Build from unsorted entries; repeated indices are summed.
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, F)>) -> Self {
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        for (i, c) in entries {
            let slot = acc.entry(i).or_insert_with(F::zero);
            *slot = slot.add_ref(&c);
        }
        SVec {
            entries: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn from_dense(v: &[F]) -> Self {
        SVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, n: usize) -> Vec<F> {
        let mut out = vec![F::zero(); n];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, F)> {
        self.entries.iter()
    }

    pub fn get(&self, i: usize) -> F {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => F::zero(),
        }
    }

    /// Entry with the largest index.
    pub fn leading(&self) -> Option<&(usize, F)> {
        self.entries.last()
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return SVec::zero();
        }
        SVec {
            entries: self
                .entries
                .iter()
                .map(|(i, x)| (*i, x.mul_ref(c)))
                .collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &F, other: &SVec<F>) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y.mul_ref(c)));
                        b.next();
                    } else {
                        let s = x.add_ref(&y.mul_ref(c));
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y.mul_ref(c)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SVec { entries: out }
    }

    pub fn add(&self, other: &SVec<F>) -> Self {
        self.add_scaled(&F::one(), other)
    }

    pub fn sub(&self, other: &SVec<F>) -> Self {
        self.add_scaled(&-F::one(), other)
    }

    /// Scale so that the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero lead")),
            None => self.clone(),
        }
    }

    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> Self {
        SVec::from_entries(self.entries.iter().map(|(i, c)| (f(*i), c.clone())))
    }
}

impl<F: fmt::Debug> fmt::Debug for SVec<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.entries.iter().map(|(i, c)| (i, c)))
            .finish()
    }
}

/// Dense accumulator for sums of sparse vectors of a known length.
pub struct Accum<F> {
    vals: Vec<F>,
    touched: Vec<usize>,
    flag: Vec<bool>,
}

impl<F: Field> Accum<F> {
    pub fn new(n: usize) -> Self {
        Accum {
            vals: vec![F::zero(); n],
            touched: Vec::new(),
            flag: vec![false; n],
        }
    }

    pub fn add_at(&mut self, i: usize, c: &F) {
        if !self.flag[i] {
            self.flag[i] = true;
            self.touched.push(i);
        }
        self.vals[i] = self.vals[i].add_ref(c);
    }

    pub fn add_scaled(&mut self, c: &F, v: &SVec<F>) {
        for (i, x) in v.iter() {
            self.add_at(*i, &x.mul_ref(c));
        }
    }

    /// Drain into a sparse vector, leaving the accumulator empty.
    pub fn take(&mut self) -> SVec<F> {
        self.touched.sort_unstable();
        let mut entries = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            let v = std::mem::replace(&mut self.vals[i], F::zero());
            self.flag[i] = false;
            if !v.is_zero() {
                entries.push((i, v));
            }
        }
        self.touched.clear();
        SVec { entries }
    }
}

/// Row-echelon basis of a subspace, keyed by pivot (largest index of each
/// row). Rows are monic.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F> {
    rows: BTreeMap<usize, SVec<F>>,
}

impl<F: Field> Default for EchelonBasis<F> {
    fn default() -> Self {
        EchelonBasis::new()
    }
}

fn reduce_map<F: Field>(
    acc: &mut BTreeMap<usize, F>,
    rows: &BTreeMap<usize, SVec<F>>,
    mut track: impl FnMut(usize, &F),
) {
    let mut bound = usize::MAX;
    loop {
        let Some((&k, c)) = acc.range(..bound).next_back() else {
            break;
        };
        bound = k;
        if let Some(row) = rows.get(&k) {
            let c = c.clone();
            track(k, &c);
            for (j, r) in row.iter() {
                let slot = acc.entry(*j).or_insert_with(F::zero);
                *slot = slot.sub_ref(&r.mul_ref(&c));
                if slot.is_zero() {
                    acc.remove(j);
                }
            }
        }
    }
}

impl<F: Field> EchelonBasis<F> {
    pub fn new() -> Self {
        EchelonBasis {
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SVec<F>> {
        self.rows.values()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.rows.contains_key(&i)
    }

    /// Remainder of `v` modulo the span.
    pub fn reduce(&self, v: &SVec<F>) -> SVec<F> {
        let mut acc: BTreeMap<usize, F> = v.iter().cloned().collect();
        reduce_map(&mut acc, &self.rows, |_, _| {});
        SVec {
            entries: acc.into_iter().collect(),
        }
    }

    pub fn contains(&self, v: &SVec<F>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Add `v` to the span. Returns the new pivot if `v` was independent.
    pub fn insert(&mut self, v: &SVec<F>) -> Option<usize> {
        let r = self.reduce(v);
        let (p, _) = *r.leading()?;
        self.rows.insert(p, r.monic());
        Some(p)
    }

    /// Reduced row-echelon rows in increasing pivot order: each row has a
    /// zero in every other row's pivot column.
    pub fn rref(&self) -> Vec<SVec<F>> {
        let mut done: BTreeMap<usize, SVec<F>> = BTreeMap::new();
        for (&p, row) in &self.rows {
            let tail = SVec {
                entries: row.entries[..row.entries.len() - 1].to_vec(),
            };
            let mut acc: BTreeMap<usize, F> = tail.iter().cloned().collect();
            reduce_map(&mut acc, &done, |_, _| {});
            acc.insert(p, F::one());
            done.insert(
                p,
                SVec {
                    entries: acc.into_iter().collect(),
                },
            );
        }
        done.into_values().collect()
    }

    pub fn from_vectors<'a>(vs: impl IntoIterator<Item = &'a SVec<F>>) -> Self {
        let mut b = EchelonBasis::new();
        for v in vs {
            b.insert(v);
        }
        b
    }
}

/// Basis of `{x : sum_j x_j cols[j] = 0}` in reduced echelon form.
pub fn kernel<F: Field>(cols: &[SVec<F>]) -> Vec<SVec<F>> {
    // Image rows with the combination of columns that produced them.
    let mut image: BTreeMap<usize, SVec<F>> = BTreeMap::new();
    let mut combos: BTreeMap<usize, SVec<F>> = BTreeMap::new();
    let mut ker = EchelonBasis::new();
    for (j, col) in cols.iter().enumerate() {
        let mut acc: BTreeMap<usize, F> = col.iter().cloned().collect();
        let mut combo = SVec::unit(j);
        let mut used: Vec<(usize, F)> = Vec::new();
        reduce_map(&mut acc, &image, |k, c| used.push((k, c.clone())));
        for (k, c) in used {
            combo = combo.add_scaled(&-c, &combos[&k]);
        }
        match acc.iter().next_back() {
            None => {
                ker.insert(&combo);
            }
            Some((&p, lead)) => {
                let inv = lead.inv().expect("nonzero lead");
                let row = SVec {
                    entries: acc.into_iter().collect(),
                };
                image.insert(p, row.scale(&inv));
                combos.insert(p, combo.scale(&inv));
            }
        }
    }
    ker.rref()
}

/// Rank of the span of the given vectors.
pub fn rank<F: Field>(vs: &[SVec<F>]) -> usize {
    EchelonBasis::from_vectors(vs.iter()).rank()
}

/// Small dense matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn scalar(n: usize, c: F) -> Self {
        Matrix::identity(n).scale(&c)
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn diag(entries: Vec<F>) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> SVec<F> {
        SVec::from_entries((0..self.rows).map(|r| (r, self.get(r, c).clone())))
    }

    pub fn columns(&self) -> Vec<SVec<F>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn from_columns(rows: usize, cols: &[SVec<F>]) -> Self {
        let mut m = Matrix::zeros(rows, cols.len());
        for (c, v) in cols.iter().enumerate() {
            for (r, x) in v.iter() {
                m.set(*r, c, x.clone());
            }
        }
        m
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut out = Matrix::<F>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add_ref(&a.mul_ref(b));
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix<F>) -> Matrix<F> {
        self.add(&rhs.scale(&-F::one()))
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    pub fn apply(&self, v: &SVec<F>) -> SVec<F> {
        let mut acc = Accum::new(self.rows);
        for (c, x) in v.iter() {
            for r in 0..self.rows {
                let a = self.get(r, *c);
                if !a.is_zero() {
                    acc.add_at(r, &a.mul_ref(x));
                }
            }
        }
        acc.take()
    }

    /// Kronecker product; basis `(i, j)` of the result is `i * rhs.dim + j`.
    pub fn kron(&self, rhs: &Matrix<F>) -> Matrix<F> {
        let (r, c) = (self.rows * rhs.rows, self.cols * rhs.cols);
        let mut out = Matrix::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.set(i * rhs.rows + k, j * rhs.cols + l, a.mul_ref(b));
                        }
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, rhs: &Matrix<F>) -> Matrix<F> {
        let mut out = Matrix::zeros(self.rows + rhs.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..rhs.rows {
            for j in 0..rhs.cols {
                out.set(self.rows + i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Matrix<F>> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::<F>::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if piv != col {
                for j in 0..n {
                    a.data.swap(piv * n + j, col * n + j);
                    inv.data.swap(piv * n + j, col * n + j);
                }
            }
            let s = a.get(col, col).inv()?;
            for j in 0..n {
                let x = a.get(col, j).mul_ref(&s);
                a.set(col, j, x);
                let y = inv.get(col, j).mul_ref(&s);
                inv.set(col, j, y);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let x = a.get(r, j).sub_ref(&f.mul_ref(a.get(col, j)));
                    a.set(r, j, x);
                    let y = inv.get(r, j).sub_ref(&f.mul_ref(inv.get(col, j)));
                    inv.set(r, j, y);
                }
            }
        }
        Some(inv)
    }

    /// Kernel of the linear map `x -> self * x`.
    pub fn kernel(&self) -> Vec<SVec<F>> {
        kernel(&self.columns())
    }

    pub fn rank(&self) -> usize {
        rank(&self.columns())
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.data[r * self.cols..(r + 1) * self.cols]
                .iter()
                .map(|x| format!("{x:?}"))
                .collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Sparse matrix stored by columns.
#[derive(Clone, Debug)]
pub struct SparseMatrix<F> {
    pub nrows: usize,
    pub cols: Vec<SVec<F>>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn apply(&self, v: &SVec<F>) -> SVec<F> {
        let mut acc = Accum::new(self.nrows);
        for (j, x) in v.iter() {
            acc.add_scaled(x, &self.cols[*j]);
        }
        acc.take()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            nrows: n,
            cols: (0..n).map(SVec::unit).collect(),
        }
    }

    pub fn from_matrix(m: &Matrix<F>) -> Self {
        SparseMatrix {
            nrows: m.nrows(),
            cols: m.columns(),
        }
    }

    pub fn to_matrix(&self) -> Matrix<F> {
        Matrix::from_columns(self.nrows, &self.cols)
    }

    pub fn is_identity(&self) -> bool {
        self.nrows == self.cols.len()
            && self
                .cols
                .iter()
                .enumerate()
                .all(|(j, c)| c.nnz() == 1 && c.get(j).is_one())
    }
}
