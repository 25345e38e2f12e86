//! Dense exact linear algebra: matrices and canonical subspaces.
//!
//! Vectors are plain `Vec<F::Elem>`. A [`Matrix`] used as a linear map acts
//! on column vectors, so an `m x n` matrix maps `F^n -> F^m`. A [`Subspace`]
//! stores its basis as the rows of a matrix in reduced row echelon form with
//! no zero rows; that form is unique, so subspace equality is equality of the
//! stored bases.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::field::Field;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    /// Builds a matrix from row-major entries, rejecting non-reduced entries.
    pub fn new(field: F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        if let Some(pos) = data.iter().position(|a| !field.is_canonical(a)) {
            return Err(Error::NonCanonicalEntry {
                row: pos / cols.max(1),
                col: pos % cols.max(1),
            });
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub(crate) fn from_data(field: F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    /// Stacks the given vectors as rows; every row must have length `cols`.
    pub fn from_rows(field: F, cols: usize, rows: &[Vec<F::Elem>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().cloned());
        }
        Self::new(field, rows.len(), cols, data)
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(field: F, rows: usize, columns: &[Vec<F::Elem>]) -> Result<Self> {
        Ok(Self::from_rows(field, rows, columns)?.transpose())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: F::Elem) {
        debug_assert!(self.field.is_canonical(&value));
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| self.field.is_zero(a))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix::from_data(self.field.clone(), self.cols, self.rows, data)
    }

    pub fn mul(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let f = &self.field;
        let mut data = vec![f.zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let slot = &mut data[i * other.cols + j];
                    *slot = f.mul_add(slot, a, other.get(k, j));
                }
            }
        }
        Ok(Matrix::from_data(f.clone(), self.rows, other.cols, data))
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !f.is_zero(x) {
                        acc = f.mul_add(&acc, a, x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        self.zip_with(other, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        self.zip_with(other, |f, a, b| f.sub(a, b))
    }

    fn zip_with(
        &self,
        other: &Matrix<F>,
        op: impl Fn(&F, &F::Elem, &F::Elem) -> F::Elem,
    ) -> Result<Matrix<F>> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| op(&self.field, a, b))
            .collect();
        Ok(Matrix::from_data(self.field.clone(), self.rows, self.cols, data))
    }

    pub fn scale(&self, c: &F::Elem) -> Matrix<F> {
        let data = self.data.iter().map(|a| self.field.mul(c, a)).collect();
        Matrix::from_data(self.field.clone(), self.rows, self.cols, data)
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &Matrix<F>) -> Result<Matrix<F>> {
        if self.cols != below.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: below.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Ok(Matrix::from_data(
            self.field.clone(),
            self.rows + below.rows,
            self.cols,
            data,
        ))
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix<F>) -> Matrix<F> {
        let f = &self.field;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = vec![f.zero(); rows * cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        data[(i * other.rows + k) * cols + j * other.cols + l] =
                            f.mul(a, other.get(k, l));
                    }
                }
            }
        }
        Matrix::from_data(f.clone(), rows, cols, data)
    }

    /// Reduced row echelon form with leftmost pivoting, zero rows dropped.
    /// Returns the reduced rows and the pivot column of each.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let f = &self.field;
        let mut rows: Vec<Vec<F::Elem>> = self.row_vectors();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(found) = (rank..rows.len()).find(|&r| !f.is_zero(&rows[r][col])) else {
                continue;
            };
            rows.swap(rank, found);
            let inv = f.inv(&rows[rank][col]).expect("pivot is nonzero");
            if !f.is_one(&inv) {
                for a in rows[rank].iter_mut() {
                    *a = f.mul(a, &inv);
                }
            }
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == rank || f.is_zero(&row[col]) {
                    continue;
                }
                let factor = f.neg(&row[col]);
                for (a, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    if !f.is_zero(p) {
                        *a = f.mul_add(a, &factor, p);
                    }
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rows.truncate(rank);
        let data = rows.into_iter().flatten().collect();
        (
            Matrix::from_data(f.clone(), rank, self.cols, data),
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// `{v : self * v = 0}`.
    pub fn kernel(&self) -> Subspace<F> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        Subspace::from_vectors_unchecked(f.clone(), self.cols, basis)
    }

    /// The column space.
    pub fn image(&self) -> Subspace<F> {
        Subspace::from_matrix(&self.transpose())
    }

    /// The row space.
    pub fn row_space(&self) -> Subspace<F> {
        Subspace::from_matrix(self)
    }

    pub fn inverse(&self) -> Result<Matrix<F>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let f = &self.field;
        let mut aug = Vec::with_capacity(n * 2 * n);
        for i in 0..n {
            aug.extend(self.row(i).iter().cloned());
            for j in 0..n {
                aug.push(if i == j { f.one() } else { f.zero() });
            }
        }
        let (r, pivots) = Matrix::from_data(f.clone(), n, 2 * n, aug).rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            data.extend(r.row(i)[n..].iter().cloned());
        }
        Ok(Matrix::from_data(f.clone(), n, n, data))
    }

    pub fn pow(&self, e: u32) -> Result<Matrix<F>> {
        let mut acc = Matrix::identity(self.field.clone(), self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows as u32).map(|m| m.is_zero()).unwrap_or(false)
    }
}

/// A subspace of `F^n` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<F: Field> {
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    /// The canonical span of the rows of `m`.
    pub fn from_matrix(m: &Matrix<F>) -> Self {
        let (basis, pivots) = m.rref();
        Subspace { basis, pivots }
    }

    /// The canonical span of `rows`, each of length `ambient_dim`.
    pub fn from_rows(field: F, ambient_dim: usize, rows: &[Vec<F::Elem>]) -> Result<Self> {
        Ok(Self::from_matrix(&Matrix::from_rows(field, ambient_dim, rows)?))
    }

    pub(crate) fn from_vectors_unchecked(
        field: F,
        ambient_dim: usize,
        rows: Vec<Vec<F::Elem>>,
    ) -> Self {
        let n = rows.len();
        let data: Vec<F::Elem> = rows.into_iter().flatten().collect();
        Self::from_matrix(&Matrix::from_data(field, n, ambient_dim, data))
    }

    pub fn zero(field: F, ambient_dim: usize) -> Self {
        Subspace {
            basis: Matrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: F, ambient_dim: usize) -> Self {
        Subspace {
            basis: Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F::Elem>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots; the matching unit vectors span a
    /// complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim()).filter(|&c| !is_pivot[c]).collect()
    }

    /// Remainder of `v` after clearing every pivot column.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.ambient_dim(), "vector length must match ambient dimension");
        let f = self.field();
        let mut out = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            if f.is_zero(&out[pc]) {
                continue;
            }
            let factor = f.neg(&out[pc]);
            for (a, b) in out.iter_mut().zip(self.basis.row(i)).skip(pc) {
                if !f.is_zero(b) {
                    *a = f.mul_add(a, &factor, b);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let f = self.field();
        self.reduce(v).iter().all(|a| f.is_zero(a))
    }

    /// Coordinates of `v` with respect to the canonical basis, if `v` lies
    /// in the subspace. For RREF bases these are the entries at the pivots.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given coordinates in the canonical basis.
    pub fn combination(&self, coords: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(coords.len(), self.dim());
        let f = self.field();
        let mut out = vec![f.zero(); self.ambient_dim()];
        for (c, i) in coords.iter().zip(0..) {
            if f.is_zero(c) {
                continue;
            }
            for (a, b) in out.iter_mut().zip(self.basis.row(i)) {
                *a = f.mul_add(a, c, b);
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace<F>) -> bool {
        self.ambient_dim() == other.ambient_dim()
            && self.dim() <= other.dim()
            && (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    fn check_ambient(&self, other: &Subspace<F>) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: other.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_ambient(other)?;
        Ok(Subspace::from_matrix(&self.basis.stack(&other.basis)?))
    }

    pub fn intersect(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_ambient(other)?;
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        // a ∩ b is cut out by the functionals vanishing on a or on b.
        let cut = self.orthogonal().basis.stack(&other.orthogonal().basis)?;
        Ok(cut.kernel())
    }

    /// The functionals vanishing on this subspace, as a subspace of the
    /// dual coordinate space under the standard pairing.
    pub fn orthogonal(&self) -> Subspace<F> {
        self.basis.kernel()
    }

    /// Image of this subspace under the column-vector map `map`.
    pub fn image_under(&self, map: &Matrix<F>) -> Result<Subspace<F>> {
        if map.cols() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: map.cols(),
                found: self.ambient_dim(),
            });
        }
        let images: Vec<Vec<F::Elem>> = (0..self.dim())
            .map(|i| map.apply(self.basis.row(i)))
            .collect();
        Ok(Subspace::from_vectors_unchecked(
            map.field().clone(),
            map.rows(),
            images,
        ))
    }

    /// `{v : map * v ∈ self}`.
    pub fn preimage_under(&self, map: &Matrix<F>) -> Result<Subspace<F>> {
        if map.rows() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: map.rows(),
                found: self.ambient_dim(),
            });
        }
        if self.is_full() {
            return Ok(Subspace::full(map.field().clone(), map.cols()));
        }
        let cut = self.orthogonal().basis.mul(map)?;
        Ok(cut.kernel())
    }

    /// Smallest subspace containing `gens` and stable under every matrix in
    /// `actions`.
    pub fn invariant_span(
        field: F,
        ambient_dim: usize,
        gens: &[Vec<F::Elem>],
        actions: &[Matrix<F>],
    ) -> Result<Subspace<F>> {
        for g in gens {
            if g.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: g.len(),
                });
            }
        }
        let mut span = Subspace::from_vectors_unchecked(field.clone(), ambient_dim, gens.to_vec());
        loop {
            let mut rows = span.basis_vectors();
            for a in actions {
                for v in span.basis_vectors() {
                    rows.push(a.apply(&v));
                }
            }
            let next = Subspace::from_vectors_unchecked(field.clone(), ambient_dim, rows);
            if next.dim() == span.dim() {
                return Ok(span);
            }
            span = next;
        }
    }

    /// Whether every matrix in `actions` maps the subspace into itself.
    pub fn is_invariant_under(&self, actions: &[Matrix<F>]) -> bool {
        actions
            .iter()
            .all(|a| (0..self.dim()).all(|i| self.contains(&a.apply(self.basis.row(i)))))
    }

    /// Every vector of the subspace, for finite fields; zero comes first.
    pub fn elements(&self) -> Result<Vec<Vec<F::Elem>>> {
        let scalars = self.field().elements().ok_or(Error::InfiniteField)?;
        let mut out = Vec::new();
        let mut coords = vec![0usize; self.dim()];
        loop {
            let c: Vec<F::Elem> = coords.iter().map(|&i| scalars[i].clone()).collect();
            out.push(self.combination(&c));
            // odometer, last coordinate fastest
            let mut k = self.dim();
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                coords[k] += 1;
                if coords[k] < scalars.len() {
                    break;
                }
                coords[k] = 0;
            }
        }
    }
}

impl<F: Field> PartialOrd for Subspace<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical enumeration order: dimension, then pivot columns, then the
/// basis entries lexicographically.
impl<F: Field> Ord for Subspace<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient_dim()
            .cmp(&other.ambient_dim())
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.pivots.cmp(&other.pivots))
            .then_with(|| self.basis.data.cmp(&other.basis.data))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn mat(p: u32, rows: &[&[u32]]) -> Matrix<PrimeField> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
        Matrix::from_rows(gf(p), cols, &rows).unwrap()
    }

    #[test]
    fn duplicate_rows_collapse() {
        let s = Subspace::from_matrix(&mat(2, &[&[1, 1], &[1, 1]]));
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis_vectors(), vec![vec![1, 1]]);
    }

    #[test]
    fn empty_span_is_zero() {
        let s = Subspace::from_rows(gf(2), 3, &[]).unwrap();
        assert_eq!(s.dim(), 0);
        assert_eq!(s.ambient_dim(), 3);
        assert_eq!(s, Subspace::zero(gf(2), 3));
    }

    #[test]
    fn three_row_elimination() {
        let s = Subspace::from_matrix(&mat(2, &[&[0, 1, 0], &[1, 0, 1], &[1, 1, 1]]));
        assert_eq!(s.basis_vectors(), vec![vec![1, 0, 1], vec![0, 1, 0]]);
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let s = Subspace::from_matrix(&mat(3, &[&[2, 1, 0], &[1, 1, 1]]));
        let again = Subspace::from_matrix(s.basis());
        assert_eq!(s, again);
    }

    #[test]
    fn non_canonical_entry_is_rejected() {
        let err = Matrix::new(gf(2), 1, 2, vec![0, 2]).unwrap_err();
        assert_eq!(err, Error::NonCanonicalEntry { row: 0, col: 1 });
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(gf(2), 2).kernel().is_zero());
        assert!(Matrix::zeros(gf(2), 2, 3).kernel().is_full());
        let k = mat(2, &[&[1, 1]]).kernel();
        assert_eq!(k.basis_vectors(), vec![vec![1, 1]]);
    }

    #[test]
    fn image_examples() {
        assert!(Matrix::identity(gf(3), 3).image().is_full());
        assert!(Matrix::zeros(gf(3), 2, 2).image().is_zero());
        let im = mat(2, &[&[1, 0], &[1, 0]]).image();
        assert_eq!(im.basis_vectors(), vec![vec![1, 1]]);
    }

    #[test]
    fn sum_and_intersection_of_axes() {
        let a = Subspace::from_rows(gf(2), 2, &[vec![1, 0]]).unwrap();
        let b = Subspace::from_rows(gf(2), 2, &[vec![0, 1]]).unwrap();
        assert!(a.sum(&b).unwrap().is_full());
        assert!(a.intersect(&b).unwrap().is_zero());
        let zero = Subspace::zero(gf(2), 2);
        assert_eq!(a.sum(&zero).unwrap(), a);
        assert_eq!(a.intersect(&Subspace::full(gf(2), 2)).unwrap(), a);
    }

    #[test]
    fn mismatched_ambient_dims_error() {
        let a = Subspace::zero(gf(2), 2);
        let b = Subspace::zero(gf(2), 3);
        assert!(a.sum(&b).is_err());
        assert!(a.intersect(&b).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = mat(3, &[&[1, 2], &[0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(gf(3), 2));
        assert_eq!(mat(2, &[&[1, 1], &[1, 1]]).inverse(), Err(Error::Singular));
    }

    #[test]
    fn preimage_of_line() {
        // map (a, b) -> (a + b); preimage of 0 is span{(1, 1)} over GF(2)
        let m = mat(2, &[&[1, 1]]);
        let pre = Subspace::zero(gf(2), 1).preimage_under(&m).unwrap();
        assert_eq!(pre.basis_vectors(), vec![vec![1, 1]]);
    }

    #[test]
    fn elements_enumerates_all() {
        let s = Subspace::from_rows(gf(3), 3, &[vec![1, 0, 2], vec![0, 1, 1]]).unwrap();
        let els = s.elements().unwrap();
        assert_eq!(els.len(), 9);
        assert!(els.iter().all(|v| s.contains(v)));
        assert_eq!(els[0], vec![0, 0, 0]);
    }

    #[test]
    fn coordinates_round_trip() {
        let s = Subspace::from_rows(gf(3), 3, &[vec![1, 0, 2], vec![0, 1, 1]]).unwrap();
        let v = s.combination(&[2, 1]);
        assert_eq!(s.coordinates(&v), Some(vec![2, 1]));
        assert_eq!(s.coordinates(&[0, 0, 1]), None);
    }
}
