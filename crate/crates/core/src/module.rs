//! Finite-length modules over a [`LocalAlgebra`], given by one action matrix
//! per ring variable, together with submodules, maps and the usual
//! constructions: quotients, colons, annihilators, Hom, tensor products,
//! free covers and injective embeddings.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::LocalAlgebra;
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::{Error, Result};

struct ModuleData<F: Field> {
    ring: LocalAlgebra<F>,
    dim: usize,
    actions: Vec<Matrix<F>>,
    /// Action of each basis monomial of the ring.
    monomial_actions: Vec<Matrix<F>>,
}

/// A finite-length module. Cheap to clone.
#[derive(Clone)]
pub struct FLModule<F: Field>(Arc<ModuleData<F>>);

impl<F: Field> core::fmt::Debug for FLModule<F> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("FLModule")
            .field("dim", &self.0.dim)
            .field("actions", &self.0.actions)
            .finish()
    }
}

impl<F: Field> PartialEq for FLModule<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.dim == other.0.dim
                && self.0.actions == other.0.actions
                && self.0.ring == other.0.ring)
    }
}

impl<F: Field> Eq for FLModule<F> {}

/// A submodule, stored as its canonical subspace of the ambient coordinate
/// space. The ambient module is passed alongside wherever it matters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Submodule<F: Field> {
    space: Subspace<F>,
}

impl<F: Field> Submodule<F> {
    pub fn space(&self) -> &Subspace<F> {
        &self.space
    }

    pub fn into_space(self) -> Subspace<F> {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.space.ambient_dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.space.contains(v)
    }

    pub fn is_submodule_of(&self, other: &Submodule<F>) -> bool {
        self.space.is_subspace_of(&other.space)
    }

    pub fn sum(&self, other: &Submodule<F>) -> Result<Submodule<F>> {
        Ok(Submodule {
            space: self.space.sum(&other.space)?,
        })
    }

    pub fn intersect(&self, other: &Submodule<F>) -> Result<Submodule<F>> {
        Ok(Submodule {
            space: self.space.intersect(&other.space)?,
        })
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F::Elem>> {
        self.space.basis_vectors()
    }
}

impl<F: Field> FLModule<F> {
    /// Builds a module from one action matrix per ring variable, checking
    /// that the actions commute and satisfy the ring's multiplication table.
    pub fn new(ring: &LocalAlgebra<F>, actions: Vec<Matrix<F>>) -> Result<Self> {
        if actions.len() != ring.nvars() {
            return Err(Error::InvalidModule(alloc::format!(
                "expected {} action matrices, found {}",
                ring.nvars(),
                actions.len()
            )));
        }
        let dim = actions.first().map_or(0, |a| a.rows());
        for a in &actions {
            if a.rows() != dim || a.cols() != dim || a.field() != ring.field() {
                return Err(Error::InvalidModule(
                    "action matrices must be square of equal size over the ring's field".into(),
                ));
            }
        }
        let m = Self::build(ring, dim, actions);
        m.check_relations()?;
        Ok(m)
    }

    /// Like [`FLModule::new`] without the module-axiom checks. For actions
    /// that are module structures by construction.
    pub(crate) fn new_unchecked(ring: &LocalAlgebra<F>, dim: usize, actions: Vec<Matrix<F>>) -> Self {
        Self::build(ring, dim, actions)
    }

    fn build(ring: &LocalAlgebra<F>, dim: usize, actions: Vec<Matrix<F>>) -> Self {
        let field = ring.field().clone();
        let monomial_actions = ring
            .basis()
            .iter()
            .map(|b| {
                let mut acc = Matrix::identity(field.clone(), dim);
                for (v, &e) in b.iter().enumerate() {
                    for _ in 0..e {
                        acc = actions[v].mul(&acc).expect("square actions");
                    }
                }
                acc
            })
            .collect();
        FLModule(Arc::new(ModuleData {
            ring: ring.clone(),
            dim,
            actions,
            monomial_actions,
        }))
    }

    fn check_relations(&self) -> Result<()> {
        let ring = &self.0.ring;
        let f = ring.field();
        let acts = &self.0.actions;
        for (i, a) in acts.iter().enumerate() {
            for b in acts.iter().skip(i + 1) {
                if a.mul(b)? != b.mul(a)? {
                    return Err(Error::InvalidModule("actions do not commute".into()));
                }
            }
        }
        for (v, a) in acts.iter().enumerate() {
            let table = ring.action(v);
            for (bi, mb) in self.0.monomial_actions.iter().enumerate() {
                let lhs = a.mul(mb)?;
                let mut rhs = Matrix::zeros(f.clone(), self.0.dim, self.0.dim);
                for (ci, mc) in self.0.monomial_actions.iter().enumerate() {
                    let c = table.get(ci, bi);
                    if !f.is_zero(c) {
                        rhs = rhs.add(&mc.scale(c))?;
                    }
                }
                if lhs != rhs {
                    return Err(Error::InvalidModule(alloc::format!(
                        "action violates the relation for {} * {}",
                        ring.vars()[v],
                        ring.basis_names()[bi]
                    )));
                }
            }
        }
        Ok(())
    }

    /// `R^n`, with `R` acting block-diagonally.
    pub fn free(ring: &LocalAlgebra<F>, n: usize) -> Self {
        let actions = ring
            .actions()
            .iter()
            .map(|a| block_diagonal(a, n))
            .collect();
        Self::new_unchecked(ring, n * ring.dim(), actions)
    }

    pub fn regular(ring: &LocalAlgebra<F>) -> Self {
        Self::free(ring, 1)
    }

    /// The residue field `k = R/m`.
    pub fn residue_field(ring: &LocalAlgebra<F>) -> Self {
        let field = ring.field().clone();
        let actions = (0..ring.nvars())
            .map(|_| Matrix::zeros(field.clone(), 1, 1))
            .collect();
        Self::new_unchecked(ring, 1, actions)
    }

    pub fn zero(ring: &LocalAlgebra<F>) -> Self {
        Self::free(ring, 0)
    }

    /// `R/I` for an ideal `I`, given as a subspace of `R`.
    pub fn cyclic(ring: &LocalAlgebra<F>, ideal: &Subspace<F>) -> Result<Self> {
        let r = Self::regular(ring);
        let i = r.submodule(ideal.clone())?;
        Ok(r.quotient(&i)?.module)
    }

    /// The contragredient module: same coordinates, transposed actions.
    pub fn dual(&self) -> Self {
        let actions = self.0.actions.iter().map(|a| a.transpose()).collect();
        Self::new_unchecked(&self.0.ring, self.0.dim, actions)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.0.ring != other.0.ring {
            return Err(Error::RingMismatch);
        }
        let actions = self
            .0
            .actions
            .iter()
            .zip(&other.0.actions)
            .map(|(a, b)| direct_sum_matrix(a, b))
            .collect();
        Ok(Self::new_unchecked(
            &self.0.ring,
            self.0.dim + other.0.dim,
            actions,
        ))
    }

    pub fn ring(&self) -> &LocalAlgebra<F> {
        &self.0.ring
    }

    pub fn field(&self) -> &F {
        self.0.ring.field()
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn actions(&self) -> &[Matrix<F>] {
        &self.0.actions
    }

    pub fn action(&self, v: usize) -> &Matrix<F> {
        &self.0.actions[v]
    }

    pub fn monomial_action(&self, b: usize) -> &Matrix<F> {
        &self.0.monomial_actions[b]
    }

    /// Action of the ring element with coordinates `r`.
    pub fn element_action(&self, r: &[F::Elem]) -> Matrix<F> {
        let f = self.field();
        let mut acc = Matrix::zeros(f.clone(), self.0.dim, self.0.dim);
        for (b, c) in r.iter().enumerate() {
            if !f.is_zero(c) {
                acc = acc
                    .add(&self.0.monomial_actions[b].scale(c))
                    .expect("square actions");
            }
        }
        acc
    }

    pub fn act(&self, r: &[F::Elem], u: &[F::Elem]) -> Vec<F::Elem> {
        self.element_action(r).apply(u)
    }

    pub fn same_ring(&self, other: &Self) -> Result<()> {
        if self.0.ring == other.0.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn check_sub(&self, s: &Submodule<F>) -> Result<()> {
        if s.ambient_dim() != self.0.dim {
            return Err(Error::DimensionMismatch {
                expected: self.0.dim,
                found: s.ambient_dim(),
            });
        }
        Ok(())
    }

    fn check_ideal(&self, j: &Subspace<F>) -> Result<()> {
        if j.ambient_dim() != self.0.ring.dim() {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Wraps an invariant subspace.
    pub fn submodule(&self, space: Subspace<F>) -> Result<Submodule<F>> {
        if space.ambient_dim() != self.0.dim {
            return Err(Error::DimensionMismatch {
                expected: self.0.dim,
                found: space.ambient_dim(),
            });
        }
        if !space.is_invariant_under(&self.0.actions) {
            return Err(Error::NotASubmodule);
        }
        Ok(Submodule { space })
    }

    pub(crate) fn submodule_unchecked(&self, space: Subspace<F>) -> Submodule<F> {
        debug_assert!(space.is_invariant_under(&self.0.actions));
        Submodule { space }
    }

    /// The submodule generated by `gens`.
    pub fn span(&self, gens: &[Vec<F::Elem>]) -> Result<Submodule<F>> {
        let space = Subspace::invariant_span(self.field().clone(), self.0.dim, gens, &self.0.actions)?;
        Ok(Submodule { space })
    }

    pub fn full(&self) -> Submodule<F> {
        Submodule {
            space: Subspace::full(self.field().clone(), self.0.dim),
        }
    }

    pub fn zero_submodule(&self) -> Submodule<F> {
        Submodule {
            space: Subspace::zero(self.field().clone(), self.0.dim),
        }
    }

    /// `M/N` with its projection and a coset-representative section.
    ///
    /// Quotient coordinates are the entries of the reduced representative at
    /// the non-pivot columns of `N`.
    pub fn quotient(&self, n: &Submodule<F>) -> Result<Quotient<F>> {
        self.check_sub(n)?;
        let f = self.field();
        let free = n.space.free_columns();
        let qdim = free.len();
        let project = |v: &[F::Elem]| -> Vec<F::Elem> {
            let r = n.space.reduce(v);
            free.iter().map(|&c| r[c].clone()).collect()
        };
        let proj_cols: Vec<Vec<F::Elem>> = (0..self.0.dim)
            .map(|j| {
                let mut e = vec![f.zero(); self.0.dim];
                e[j] = f.one();
                project(&e)
            })
            .collect();
        let projection = Matrix::from_columns(f.clone(), qdim, &proj_cols)?;
        let section_cols: Vec<Vec<F::Elem>> = free
            .iter()
            .map(|&c| {
                let mut e = vec![f.zero(); self.0.dim];
                e[c] = f.one();
                e
            })
            .collect();
        let section = Matrix::from_columns(f.clone(), self.0.dim, &section_cols)?;
        let actions = self
            .0
            .actions
            .iter()
            .map(|a| projection.mul(a)?.mul(&section))
            .collect::<Result<Vec<_>>>()?;
        let module = Self::new_unchecked(&self.0.ring, qdim, actions);
        Ok(Quotient {
            projection: ModuleMap {
                source: self.clone(),
                target: module.clone(),
                matrix: projection,
            },
            module,
            section,
        })
    }

    /// `N` as a module in its own right, with the inclusion into `self`.
    /// Coordinates on `N` are the entries at its pivot columns.
    pub fn restrict(&self, n: &Submodule<F>) -> Result<(FLModule<F>, ModuleMap<F>)> {
        self.check_sub(n)?;
        let basis = n.space.basis_vectors();
        let actions = self
            .0
            .actions
            .iter()
            .map(|a| {
                let cols: Vec<Vec<F::Elem>> = basis
                    .iter()
                    .map(|u| {
                        n.space
                            .coordinates(&a.apply(u))
                            .ok_or(Error::NotASubmodule)
                    })
                    .collect::<Result<_>>()?;
                Matrix::from_columns(self.field().clone(), basis.len(), &cols)
            })
            .collect::<Result<Vec<_>>>()?;
        let sub = Self::new_unchecked(&self.0.ring, basis.len(), actions);
        let inclusion = Matrix::from_columns(self.field().clone(), self.0.dim, &basis)?;
        Ok((
            sub.clone(),
            ModuleMap {
                source: sub,
                target: self.clone(),
                matrix: inclusion,
            },
        ))
    }

    /// `(L :_M J) = {u : J u ⊆ L}`.
    pub fn colon(&self, l: &Submodule<F>, j: &Subspace<F>) -> Result<Submodule<F>> {
        self.check_sub(l)?;
        self.check_ideal(j)?;
        let mut acc = Subspace::full(self.field().clone(), self.0.dim);
        for g in j.basis_vectors() {
            acc = acc.intersect(&l.space.preimage_under(&self.element_action(&g))?)?;
        }
        Ok(self.submodule_unchecked(acc))
    }

    /// `J L`.
    pub fn scale(&self, j: &Subspace<F>, l: &Submodule<F>) -> Result<Submodule<F>> {
        self.check_sub(l)?;
        self.check_ideal(j)?;
        let mut rows = Vec::new();
        for g in j.basis_vectors() {
            let a = self.element_action(&g);
            for u in l.space.basis_vectors() {
                rows.push(a.apply(&u));
            }
        }
        let space = Subspace::from_vectors_unchecked(self.field().clone(), self.0.dim, rows);
        Ok(self.submodule_unchecked(space))
    }

    /// `ann_R(N)` as an ideal of the ring.
    pub fn annihilator(&self, n: &Submodule<F>) -> Result<Subspace<F>> {
        self.check_sub(n)?;
        let f = self.field();
        let rdim = self.0.ring.dim();
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        for u in n.space.basis_vectors() {
            let images: Vec<Vec<F::Elem>> = self
                .0
                .monomial_actions
                .iter()
                .map(|a| a.apply(&u))
                .collect();
            for i in 0..self.0.dim {
                rows.push(images.iter().map(|col| col[i].clone()).collect());
            }
        }
        let m = Matrix::from_rows(f.clone(), rdim, &rows)?;
        Ok(m.kernel())
    }

    /// `(0 :_M m)`.
    pub fn socle(&self) -> Submodule<F> {
        self.colon(&self.zero_submodule(), self.0.ring.maximal_ideal())
            .expect("maximal ideal lives in the ring")
    }

    /// `m M`.
    pub fn radical(&self) -> Submodule<F> {
        self.scale(self.0.ring.maximal_ideal(), &self.full())
            .expect("maximal ideal lives in the ring")
    }

    /// Whether `u` generates `self`.
    pub fn generates(&self, u: &[F::Elem]) -> bool {
        self.span(&[u.to_vec()]).map(|s| s.space.is_full()).unwrap_or(false)
    }

    /// A basis of `Hom_R(self, target)`.
    pub fn hom(&self, target: &FLModule<F>) -> Result<Vec<ModuleMap<F>>> {
        self.same_ring(target)?;
        let f = self.field();
        let (m, n) = (self.0.dim, target.0.dim);
        let unknowns = n * m;
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        for (a, b) in self.0.actions.iter().zip(&target.0.actions) {
            // (B X - X A)[i][j] = 0, with X[k][l] at index k*m + l
            for i in 0..n {
                for j in 0..m {
                    let mut row = vec![f.zero(); unknowns];
                    for k in 0..n {
                        let c = b.get(i, k);
                        if !f.is_zero(c) {
                            row[k * m + j] = f.add(&row[k * m + j], c);
                        }
                    }
                    for k in 0..m {
                        let c = a.get(k, j);
                        if !f.is_zero(c) {
                            row[i * m + k] = f.sub(&row[i * m + k], c);
                        }
                    }
                    rows.push(row);
                }
            }
        }
        let solutions = Matrix::from_rows(f.clone(), unknowns, &rows)?.kernel();
        solutions
            .basis_vectors()
            .into_iter()
            .map(|x| {
                Ok(ModuleMap {
                    source: self.clone(),
                    target: target.clone(),
                    matrix: Matrix::new(f.clone(), n, m, x)?,
                })
            })
            .collect()
    }

    /// `self ⊗_R other`.
    pub fn tensor(&self, other: &FLModule<F>) -> Result<Tensor<F>> {
        self.same_ring(other)?;
        let f = self.field();
        let (m, n) = (self.0.dim, other.0.dim);
        let id_m = Matrix::identity(f.clone(), m);
        let id_n = Matrix::identity(f.clone(), n);
        let outer_actions: Vec<Matrix<F>> =
            self.0.actions.iter().map(|a| a.kron(&id_n)).collect();
        let outer = Self::new_unchecked(&self.0.ring, m * n, outer_actions);
        let mut rows = Vec::new();
        for (a, b) in self.0.actions.iter().zip(&other.0.actions) {
            let d = a.kron(&id_n).sub(&id_m.kron(b))?;
            rows.extend(d.transpose().row_vectors());
        }
        let relations = Subspace::from_vectors_unchecked(f.clone(), m * n, rows);
        let quotient = outer.quotient(&outer.submodule_unchecked(relations))?;
        Ok(Tensor {
            left_dim: m,
            right_dim: n,
            module: quotient.module,
            projection: quotient.projection.matrix,
        })
    }

    /// Every submodule, ordered by dimension, pivot columns, then entries.
    pub fn enumerate_submodules(&self, limit: usize) -> Result<Vec<Submodule<F>>> {
        let f = self.field();
        let scalars = f.elements().ok_or(Error::InfiniteField)?;
        let mut found: BTreeSet<Subspace<F>> = BTreeSet::new();
        let zero = Subspace::zero(f.clone(), self.0.dim);
        found.insert(zero.clone());
        let mut frontier = vec![zero];
        while !frontier.is_empty() {
            let mut next = BTreeSet::new();
            for s in &frontier {
                let free = s.free_columns();
                for v in projective_points(f, &scalars, free.len()) {
                    let mut gen = vec![f.zero(); self.0.dim];
                    for (c, x) in free.iter().zip(v) {
                        gen[*c] = x;
                    }
                    let mut gens = s.basis_vectors();
                    gens.push(gen);
                    let t = Subspace::invariant_span(f.clone(), self.0.dim, &gens, &self.0.actions)?;
                    if !found.contains(&t) {
                        found.insert(t.clone());
                        if found.len() > limit {
                            return Err(Error::LimitExceeded {
                                limit,
                                found: found.len(),
                            });
                        }
                        next.insert(t);
                    }
                }
            }
            frontier = next.into_iter().collect();
        }
        Ok(found.into_iter().map(|space| Submodule { space }).collect())
    }

    /// Lexicographically first unit vectors completing a basis of `M/mM`.
    pub fn minimal_generators(&self) -> Vec<Vec<F::Elem>> {
        let f = self.field();
        let mut span = self.radical().space;
        let mut gens = Vec::new();
        for j in 0..self.0.dim {
            if span.is_full() {
                break;
            }
            let mut e = vec![f.zero(); self.0.dim];
            e[j] = f.one();
            if !span.contains(&e) {
                span = span
                    .sum(&Subspace::from_vectors_unchecked(f.clone(), self.0.dim, vec![e.clone()]))
                    .expect("same ambient");
                gens.push(e);
            }
        }
        gens
    }

    /// The minimal free cover `R^n ↠ M`, sending the `i`-th free generator
    /// to the `i`-th of [`FLModule::minimal_generators`].
    pub fn free_cover(&self) -> Result<(FLModule<F>, ModuleMap<F>)> {
        let gens = self.minimal_generators();
        let free = Self::free(&self.0.ring, gens.len());
        let mut cols = Vec::with_capacity(free.dim());
        for g in &gens {
            for a in &self.0.monomial_actions {
                cols.push(a.apply(g));
            }
        }
        let matrix = Matrix::from_columns(self.field().clone(), self.0.dim, &cols)?;
        Ok((
            free.clone(),
            ModuleMap {
                source: free,
                target: self.clone(),
                matrix,
            },
        ))
    }

    /// An embedding `M ↪ E^n` with `n = dim soc M`, the transpose of a free
    /// cover of the dual.
    pub fn injective_embed(&self) -> Result<(FLModule<F>, ModuleMap<F>)> {
        let (free, cover) = self.dual().free_cover()?;
        let hull = free.dual();
        Ok((
            hull.clone(),
            ModuleMap {
                source: self.clone(),
                target: hull,
                matrix: cover.matrix.transpose(),
            },
        ))
    }

    pub fn identity_map(&self) -> ModuleMap<F> {
        ModuleMap {
            source: self.clone(),
            target: self.clone(),
            matrix: Matrix::identity(self.field().clone(), self.0.dim),
        }
    }
}

fn block_diagonal<F: Field>(a: &Matrix<F>, n: usize) -> Matrix<F> {
    Matrix::identity(a.field().clone(), n).kron(a)
}

fn direct_sum_matrix<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let f = a.field();
    let (ra, ca, rb, cb) = (a.rows(), a.cols(), b.rows(), b.cols());
    let mut m = Matrix::zeros(f.clone(), ra + rb, ca + cb);
    for i in 0..ra {
        for j in 0..ca {
            m.set(i, j, a.get(i, j).clone());
        }
    }
    for i in 0..rb {
        for j in 0..cb {
            m.set(ra + i, ca + j, b.get(i, j).clone());
        }
    }
    m
}

/// Nonzero vectors of length `n` whose first nonzero entry is one.
fn projective_points<F: Field>(f: &F, scalars: &[F::Elem], n: usize) -> Vec<Vec<F::Elem>> {
    let mut out = Vec::new();
    for lead in 0..n {
        let tail = n - lead - 1;
        let mut idx = vec![0usize; tail];
        'odometer: loop {
            let mut v = vec![f.zero(); n];
            v[lead] = f.one();
            for (k, &i) in idx.iter().enumerate() {
                v[lead + 1 + k] = scalars[i].clone();
            }
            out.push(v);
            let mut k = tail;
            loop {
                if k == 0 {
                    break 'odometer;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < scalars.len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
    out
}

/// An `R`-linear map, acting on column coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap<F: Field> {
    source: FLModule<F>,
    target: FLModule<F>,
    matrix: Matrix<F>,
}

impl<F: Field> ModuleMap<F> {
    pub fn new(source: &FLModule<F>, target: &FLModule<F>, matrix: Matrix<F>) -> Result<Self> {
        source.same_ring(target)?;
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: target.dim() * source.dim(),
                found: matrix.rows() * matrix.cols(),
            });
        }
        for (a, b) in source.actions().iter().zip(target.actions()) {
            if b.mul(&matrix)? != matrix.mul(a)? {
                return Err(Error::NotAModuleMap);
            }
        }
        Ok(ModuleMap {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    pub fn source(&self) -> &FLModule<F> {
        &self.source
    }

    pub fn target(&self) -> &FLModule<F> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.matrix.apply(v)
    }

    pub fn image(&self, s: &Submodule<F>) -> Result<Submodule<F>> {
        self.source.check_sub(s)?;
        Ok(Submodule {
            space: s.space.image_under(&self.matrix)?,
        })
    }

    pub fn preimage(&self, s: &Submodule<F>) -> Result<Submodule<F>> {
        self.target.check_sub(s)?;
        Ok(Submodule {
            space: s.space.preimage_under(&self.matrix)?,
        })
    }

    pub fn kernel(&self) -> Submodule<F> {
        Submodule {
            space: self.matrix.kernel(),
        }
    }

    pub fn image_of_source(&self) -> Submodule<F> {
        Submodule {
            space: self.matrix.image(),
        }
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ModuleMap<F>) -> Result<ModuleMap<F>> {
        if first.target.dim() != self.source.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.source.dim(),
                found: first.target.dim(),
            });
        }
        Ok(ModuleMap {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&first.matrix)?,
        })
    }
}

/// Result of [`FLModule::quotient`].
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    pub module: FLModule<F>,
    pub projection: ModuleMap<F>,
    /// Columns are the chosen coset representatives of the quotient basis.
    pub section: Matrix<F>,
}

/// Result of [`FLModule::tensor`].
#[derive(Clone, Debug)]
pub struct Tensor<F: Field> {
    left_dim: usize,
    right_dim: usize,
    pub module: FLModule<F>,
    /// From `M ⊗_k N` (index `i * dim N + j`) onto the tensor module.
    pub projection: Matrix<F>,
}

impl<F: Field> Tensor<F> {
    /// The class of `u ⊗ w`.
    pub fn simple(&self, u: &[F::Elem], w: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(u.len(), self.left_dim);
        assert_eq!(w.len(), self.right_dim);
        let f = self.module.field();
        let mut t = Vec::with_capacity(u.len() * w.len());
        for a in u {
            for b in w {
                t.push(f.mul(a, b));
            }
        }
        self.projection.apply(&t)
    }

    /// The image of `L ⊗ N'` for a submodule `N'` of the right factor.
    pub fn image_of_right(&self, n: &Submodule<F>) -> Submodule<F> {
        let f = self.module.field();
        let mut rows = Vec::new();
        for i in 0..self.left_dim {
            let mut e = vec![f.zero(); self.left_dim];
            e[i] = f.one();
            for w in n.basis_vectors() {
                rows.push(self.simple(&e, &w));
            }
        }
        Submodule {
            space: Subspace::from_vectors_unchecked(f.clone(), self.module.dim(), rows),
        }
    }
}
