//! Artinian local algebras `k[x_1..x_n]/I` with a standard-monomial basis.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::poly::{
    basis_order, degree, format_monomial, monomials_below, term_order, Monomial, PolyExpr,
};
use crate::{Error, Result};

/// Largest truncated monomial space the construction will build.
pub const MAX_MONOMIALS: usize = 4096;

struct AlgebraData<F: Field> {
    field: F,
    vars: Vec<String>,
    nil_bound: u32,
    basis: Vec<Monomial>,
    unit_index: usize,
    /// Multiplication by each variable, acting on coordinate columns.
    actions: Vec<Matrix<F>>,
    /// Multiplication by each basis monomial.
    monomial_actions: Vec<Matrix<F>>,
    maximal_ideal: Subspace<F>,
    relations: Vec<PolyExpr<F>>,
}

/// A finite-dimensional commutative local algebra. Cheap to clone.
#[derive(Clone)]
pub struct LocalAlgebra<F: Field>(Arc<AlgebraData<F>>);

impl<F: Field> core::fmt::Debug for LocalAlgebra<F> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let basis: Vec<String> = self.basis_names();
        f.debug_struct("LocalAlgebra")
            .field("field", &self.0.field)
            .field("vars", &self.0.vars)
            .field("basis", &basis)
            .finish()
    }
}

impl<F: Field> PartialEq for LocalAlgebra<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field
                && self.0.vars == other.0.vars
                && self.0.basis == other.0.basis
                && self.0.actions == other.0.actions)
    }
}

impl<F: Field> Eq for LocalAlgebra<F> {}

/// Builds `k[vars]/(relations + m^nil_bound)` and checks that `m^nil_bound`
/// already lies in the ideal generated by the relations locally.
pub fn build_local_algebra<F: Field>(
    field: F,
    vars: &[&str],
    relations: &[PolyExpr<F>],
    nil_bound: u32,
) -> Result<LocalAlgebra<F>> {
    if nil_bound == 0 {
        return Err(Error::InvalidAlgebra("nil_bound must be positive".into()));
    }
    let vars: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
    for f in relations {
        if f.vars() != vars.as_slice() {
            return Err(Error::InvalidAlgebra(
                "relation variables differ from the algebra variables".into(),
            ));
        }
        if *f.field() != field {
            return Err(Error::FieldMismatch("relation coefficients".into()));
        }
    }
    let n = vars.len();

    let truncated = TruncatedIdeal::new(&field, n, relations, nil_bound)?;
    if truncated.span.contains(&truncated.unit_vector(&field)) {
        return Err(Error::ZeroRing);
    }

    // Nakayama: m^N ⊆ I locally iff m^N ⊆ I + m^(N+1).
    let above = TruncatedIdeal::new(&field, n, relations, nil_bound + 1)?;
    for (m, &col) in &above.columns {
        if degree(m) == nil_bound {
            let mut e = vec![field.zero(); above.monomials.len()];
            e[col] = field.one();
            if !above.span.contains(&e) {
                return Err(Error::NotLocal {
                    nil_bound,
                    detail: alloc::format!(
                        "{} is not in the ideal",
                        format_monomial(&vars, m)
                    ),
                });
            }
        }
    }

    let mut basis: Vec<Monomial> = truncated
        .span
        .free_columns()
        .into_iter()
        .map(|c| truncated.monomial_at(c).clone())
        .collect();
    basis.sort_by(|a, b| basis_order(a, b));
    let position: BTreeMap<&Monomial, usize> =
        basis.iter().enumerate().map(|(i, m)| (m, i)).collect();

    let normal_form = |m: &Monomial| -> Vec<F::Elem> {
        let mut out = vec![field.zero(); basis.len()];
        if degree(m) >= nil_bound {
            return out;
        }
        let mut e = vec![field.zero(); truncated.monomials.len()];
        e[truncated.columns[m]] = field.one();
        let r = truncated.span.reduce(&e);
        for (col, c) in r.into_iter().enumerate() {
            if !field.is_zero(&c) {
                out[position[truncated.monomial_at(col)]] = c;
            }
        }
        out
    };

    let mut actions = Vec::with_capacity(n);
    for v in 0..n {
        let columns: Vec<Vec<F::Elem>> = basis
            .iter()
            .map(|b| {
                let mut m = b.clone();
                m[v] += 1;
                normal_form(&m)
            })
            .collect();
        actions.push(Matrix::from_columns(field.clone(), basis.len(), &columns)?);
    }

    let algebra = LocalAlgebra::assemble(
        field,
        vars,
        nil_bound,
        basis,
        actions,
        relations.to_vec(),
    )?;
    let report = algebra.validate();
    if !report.is_ok() {
        return Err(Error::InvalidAlgebra(report.to_string()));
    }
    Ok(algebra)
}

/// The span of `u * f` for relations `f`, truncated below degree `bound`.
/// Columns run by descending degree, then lex with earlier variables
/// larger, so pivots are leading terms.
struct TruncatedIdeal<F: Field> {
    monomials: Vec<Monomial>,
    by_column: Vec<Monomial>,
    columns: BTreeMap<Monomial, usize>,
    span: Subspace<F>,
}

impl<F: Field> TruncatedIdeal<F> {
    fn new(field: &F, n: usize, relations: &[PolyExpr<F>], bound: u32) -> Result<Self> {
        let monomials = monomials_below(n, bound);
        if monomials.len() > MAX_MONOMIALS {
            return Err(Error::IterationBudget(MAX_MONOMIALS));
        }
        let len = monomials.len();
        let mut by_column = monomials.clone();
        by_column.sort_by(|a, b| term_order(a, b));
        let columns: BTreeMap<Monomial, usize> = by_column
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let mut rows = Vec::new();
        for f in relations {
            for u in &monomials {
                let g = f.mul_monomial(u);
                let mut row = vec![field.zero(); len];
                let mut any = false;
                for (c, m) in g.terms() {
                    if let Some(&col) = columns.get(&m) {
                        row[col] = c;
                        any = true;
                    }
                }
                if any {
                    rows.push(row);
                }
            }
        }
        let span = Subspace::from_vectors_unchecked(field.clone(), len, rows);
        Ok(TruncatedIdeal {
            monomials,
            by_column,
            columns,
            span,
        })
    }

    fn monomial_at(&self, col: usize) -> &Monomial {
        &self.by_column[col]
    }

    fn unit_vector(&self, field: &F) -> Vec<F::Elem> {
        let mut e = vec![field.zero(); self.monomials.len()];
        e[self.monomials.len() - 1] = field.one();
        e
    }
}

impl<F: Field> LocalAlgebra<F> {
    /// Wraps a hand-written multiplication table without validating it.
    /// `actions[v]` multiplies by the `v`-th variable on coordinate columns.
    pub fn from_table_unchecked(
        field: F,
        vars: &[&str],
        basis: Vec<Monomial>,
        actions: Vec<Matrix<F>>,
    ) -> Result<Self> {
        let nil_bound = basis.iter().map(|m| degree(m)).max().unwrap_or(0) + 1;
        let vars = vars.iter().map(|v| v.to_string()).collect();
        Self::assemble(field, vars, nil_bound, basis, actions, Vec::new())
    }

    fn assemble(
        field: F,
        vars: Vec<String>,
        nil_bound: u32,
        basis: Vec<Monomial>,
        actions: Vec<Matrix<F>>,
        relations: Vec<PolyExpr<F>>,
    ) -> Result<Self> {
        let dim = basis.len();
        if actions.len() != vars.len() {
            return Err(Error::DimensionMismatch {
                expected: vars.len(),
                found: actions.len(),
            });
        }
        for a in &actions {
            if a.rows() != dim || a.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: a.rows().max(a.cols()),
                });
            }
        }
        let unit_index = basis
            .iter()
            .position(|m| m.len() == vars.len() && degree(m) == 0)
            .ok_or_else(|| Error::InvalidAlgebra("basis lacks the monomial 1".into()))?;
        let mut monomial_actions = Vec::with_capacity(dim);
        for b in &basis {
            if b.len() != vars.len() {
                return Err(Error::DimensionMismatch {
                    expected: vars.len(),
                    found: b.len(),
                });
            }
            let mut acc = Matrix::identity(field.clone(), dim);
            for (v, &e) in b.iter().enumerate() {
                for _ in 0..e {
                    acc = actions[v].mul(&acc)?;
                }
            }
            monomial_actions.push(acc);
        }
        let gens: Vec<Vec<F::Elem>> = actions
            .iter()
            .map(|a| a.column(unit_index))
            .collect();
        let maximal_ideal = Subspace::invariant_span(field.clone(), dim, &gens, &actions)?;
        Ok(LocalAlgebra(Arc::new(AlgebraData {
            field,
            vars,
            nil_bound,
            basis,
            unit_index,
            actions,
            monomial_actions,
            maximal_ideal,
            relations,
        })))
    }

    pub fn field(&self) -> &F {
        &self.0.field
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn nil_bound(&self) -> u32 {
        self.0.nil_bound
    }

    pub fn dim(&self) -> usize {
        self.0.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.0.basis
    }

    pub fn basis_names(&self) -> Vec<String> {
        self.0
            .basis
            .iter()
            .map(|m| format_monomial(&self.0.vars, m))
            .collect()
    }

    pub fn unit_index(&self) -> usize {
        self.0.unit_index
    }

    pub fn relations(&self) -> &[PolyExpr<F>] {
        &self.0.relations
    }

    /// Multiplication by the `v`-th variable.
    pub fn action(&self, v: usize) -> &Matrix<F> {
        &self.0.actions[v]
    }

    pub fn actions(&self) -> &[Matrix<F>] {
        &self.0.actions
    }

    /// Multiplication by the `b`-th basis monomial.
    pub fn monomial_action(&self, b: usize) -> &Matrix<F> {
        &self.0.monomial_actions[b]
    }

    pub fn maximal_ideal(&self) -> &Subspace<F> {
        &self.0.maximal_ideal
    }

    pub fn same_as(&self, other: &Self) -> bool {
        self == other
    }

    pub fn zero_vector(&self) -> Vec<F::Elem> {
        vec![self.0.field.zero(); self.dim()]
    }

    pub fn unit_vector(&self) -> Vec<F::Elem> {
        self.basis_vector(self.0.unit_index)
    }

    pub fn basis_vector(&self, b: usize) -> Vec<F::Elem> {
        let mut v = self.zero_vector();
        v[b] = self.0.field.one();
        v
    }

    pub fn variable_vector(&self, v: usize) -> Vec<F::Elem> {
        self.0.actions[v].column(self.0.unit_index)
    }

    /// Multiplication by the element with coordinates `r`.
    pub fn element_action(&self, r: &[F::Elem]) -> Matrix<F> {
        let f = &self.0.field;
        let dim = self.dim();
        let mut acc = Matrix::zeros(f.clone(), dim, dim);
        for (b, c) in r.iter().enumerate() {
            if !f.is_zero(c) {
                acc = acc
                    .add(&self.0.monomial_actions[b].scale(c))
                    .expect("monomial actions are square of size dim");
            }
        }
        acc
    }

    pub fn multiply_coords(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        self.element_action(a).apply(b)
    }

    pub fn power_coords(&self, a: &[F::Elem], e: u64) -> Vec<F::Elem> {
        let mut acc = self.unit_vector();
        for _ in 0..e {
            acc = self.multiply_coords(a, &acc);
            if acc.iter().all(|c| self.0.field.is_zero(c)) {
                break;
            }
        }
        acc
    }

    pub fn is_unit(&self, a: &[F::Elem]) -> bool {
        !self.0.maximal_ideal.contains(a)
    }

    /// Coordinates of a polynomial in the algebra.
    pub fn normal_form(&self, p: &PolyExpr<F>) -> Result<Vec<F::Elem>> {
        if p.vars() != self.vars() {
            return Err(Error::InvalidAlgebra(
                "polynomial variables differ from the algebra variables".into(),
            ));
        }
        let f = &self.0.field;
        let mut out = self.zero_vector();
        for (c, m) in p.terms() {
            if degree(&m) >= self.0.nil_bound {
                continue;
            }
            let mut v = self.unit_vector();
            for (var, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    v = self.0.actions[var].apply(&v);
                }
            }
            for (o, x) in out.iter_mut().zip(&v) {
                *o = f.mul_add(o, &c, x);
            }
        }
        Ok(out)
    }

    pub fn parse_element(&self, text: &str) -> Result<RingElement<F>> {
        let p = PolyExpr::parse(self.0.field.clone(), &self.0.vars, text)?;
        RingElement::new(self.clone(), self.normal_form(&p)?)
    }

    /// The ideal generated by coordinate vectors.
    pub fn ideal(&self, gens: &[Vec<F::Elem>]) -> Result<Subspace<F>> {
        Subspace::invariant_span(self.0.field.clone(), self.dim(), gens, &self.0.actions)
    }

    pub fn ideal_from_polys(&self, gens: &[PolyExpr<F>]) -> Result<Subspace<F>> {
        let vs = gens
            .iter()
            .map(|g| self.normal_form(g))
            .collect::<Result<Vec<_>>>()?;
        self.ideal(&vs)
    }

    /// Renders coordinates as a polynomial in the basis monomials.
    pub fn format_coords(&self, a: &[F::Elem]) -> String {
        let f = &self.0.field;
        let terms = self
            .0
            .basis
            .iter()
            .zip(a)
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(m, c)| (c.clone(), m.clone()));
        PolyExpr::from_terms(f.clone(), self.0.vars.clone(), terms)
            .map(|p| p.to_string())
            .unwrap_or_else(|_| "?".into())
    }

    /// Checks the algebra axioms on basis elements, reporting the first
    /// violation of each kind.
    pub fn validate(&self) -> ValidationReport {
        let f = &self.0.field;
        let dim = self.dim();
        let names = self.basis_names();
        let product = |i: usize, j: usize| self.0.monomial_actions[i].column(j);
        let mut report = ValidationReport::default();

        for i in 0..dim {
            if product(i, self.0.unit_index) != self.basis_vector(i) {
                report.unit = Some(names[i].clone());
                break;
            }
        }

        'comm: for i in 0..dim {
            for j in i + 1..dim {
                if product(i, j) != product(j, i) {
                    report.commutativity = Some((names[i].clone(), names[j].clone()));
                    break 'comm;
                }
            }
        }
        if report.commutativity.is_none() {
            'vars: for (a, x) in self.0.actions.iter().enumerate() {
                for (b, y) in self.0.actions.iter().enumerate().skip(a + 1) {
                    if x.mul(y).ok() != y.mul(x).ok() {
                        report.commutativity =
                            Some((self.0.vars[a].clone(), self.0.vars[b].clone()));
                        break 'vars;
                    }
                }
            }
        }

        'assoc: for i in 0..dim {
            for j in 0..dim {
                let ij = product(i, j);
                for k in 0..dim {
                    let left = self.multiply_coords(&ij, &self.basis_vector(k));
                    let right = self.0.monomial_actions[i].apply(&product(j, k));
                    if left != right {
                        report.associativity =
                            Some((names[i].clone(), names[j].clone(), names[k].clone()));
                        break 'assoc;
                    }
                }
            }
        }

        for (v, a) in self.0.actions.iter().enumerate() {
            if !a.is_nilpotent() {
                report.nilpotence = Some(self.0.vars[v].clone());
                break;
            }
        }

        let m = &self.0.maximal_ideal;
        if dim == 0 || m.dim() + 1 != dim || m.contains(&self.unit_vector()) {
            report.locality = Some(alloc::format!(
                "dim R/m = {}",
                dim.saturating_sub(m.dim())
            ));
        }
        let _ = f;
        report
    }
}

/// Outcome of [`LocalAlgebra::validate`]; each field holds the first
/// witness found, if any.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub unit: Option<String>,
    pub commutativity: Option<(String, String)>,
    pub associativity: Option<(String, String, String)>,
    pub nilpotence: Option<String>,
    pub locality: Option<String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        *self == ValidationReport::default()
    }
}

impl core::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let mut parts = Vec::new();
        if let Some(b) = &self.unit {
            parts.push(alloc::format!("1 * {b} != {b}"));
        }
        if let Some((a, b)) = &self.commutativity {
            parts.push(alloc::format!("{a} and {b} do not commute"));
        }
        if let Some((a, b, c)) = &self.associativity {
            parts.push(alloc::format!("associativity fails on ({a}, {b}, {c})"));
        }
        if let Some(v) = &self.nilpotence {
            parts.push(alloc::format!(
                "{v} is not nilpotent; raise nil_bound or check the relations"
            ));
        }
        if let Some(l) = &self.locality {
            parts.push(alloc::format!("not local: {l}"));
        }
        if parts.is_empty() {
            f.write_str("ok")
        } else {
            f.write_str(&parts.join("; "))
        }
    }
}

/// An element of a [`LocalAlgebra`] in basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement<F: Field> {
    algebra: LocalAlgebra<F>,
    coords: Vec<F::Elem>,
}

impl<F: Field> RingElement<F> {
    pub fn new(algebra: LocalAlgebra<F>, coords: Vec<F::Elem>) -> Result<Self> {
        if coords.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: coords.len(),
            });
        }
        if let Some(i) = coords.iter().position(|c| !algebra.field().is_canonical(c)) {
            return Err(Error::NonCanonicalEntry { row: 0, col: i });
        }
        Ok(RingElement { algebra, coords })
    }

    pub fn one(algebra: &LocalAlgebra<F>) -> Self {
        RingElement {
            coords: algebra.unit_vector(),
            algebra: algebra.clone(),
        }
    }

    pub fn zero(algebra: &LocalAlgebra<F>) -> Self {
        RingElement {
            coords: algebra.zero_vector(),
            algebra: algebra.clone(),
        }
    }

    pub fn variable(algebra: &LocalAlgebra<F>, v: usize) -> Self {
        RingElement {
            coords: algebra.variable_vector(v),
            algebra: algebra.clone(),
        }
    }

    pub fn algebra(&self) -> &LocalAlgebra<F> {
        &self.algebra
    }

    pub fn coords(&self) -> &[F::Elem] {
        &self.coords
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(Error::RingMismatch);
        }
        Ok(RingElement {
            coords: self.algebra.multiply_coords(&self.coords, &other.coords),
            algebra: self.algebra.clone(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(Error::RingMismatch);
        }
        let f = self.algebra.field();
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| f.add(a, b))
            .collect();
        Ok(RingElement {
            coords,
            algebra: self.algebra.clone(),
        })
    }

    pub fn is_unit(&self) -> bool {
        self.algebra.is_unit(&self.coords)
    }
}

impl<F: Field> core::fmt::Display for RingElement<F> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.algebra.format_coords(&self.coords))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn rels<F: Field>(field: F, vars: &[&str], texts: &[&str]) -> Vec<PolyExpr<F>> {
        let vars: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
        texts
            .iter()
            .map(|t| PolyExpr::parse(field.clone(), &vars, t).unwrap())
            .collect()
    }

    #[test]
    fn builds_the_four_fixtures() {
        let r1 = build_local_algebra(gf(2), &["x"], &rels(gf(2), &["x"], &["x^2"]), 2).unwrap();
        assert_eq!(r1.basis_names(), ["1", "x"]);
        let r2 = build_local_algebra(
            gf(2),
            &["x", "y"],
            &rels(gf(2), &["x", "y"], &["x^2", "x*y", "y^2"]),
            2,
        )
        .unwrap();
        assert_eq!(r2.basis_names(), ["1", "x", "y"]);
        let r3 = build_local_algebra(
            gf(2),
            &["x", "y"],
            &rels(gf(2), &["x", "y"], &["x^2", "y^2"]),
            4,
        )
        .unwrap();
        assert_eq!(r3.basis_names(), ["1", "x", "y", "x*y"]);
        let r4 = build_local_algebra(gf(3), &["x"], &rels(gf(3), &["x"], &["x^3"]), 3).unwrap();
        assert_eq!(r4.basis_names(), ["1", "x", "x^2"]);
    }

    #[test]
    fn products_in_r3_and_r1() {
        let r3 = build_local_algebra(
            gf(2),
            &["x", "y"],
            &rels(gf(2), &["x", "y"], &["x^2", "y^2"]),
            4,
        )
        .unwrap();
        let x = RingElement::variable(&r3, 0);
        let y = RingElement::variable(&r3, 1);
        assert_eq!(x.multiply(&y).unwrap().to_string(), "x*y");
        assert_eq!(x.multiply(&x).unwrap().to_string(), "0");
        let one = RingElement::one(&r3);
        assert_eq!(one.multiply(&y).unwrap(), y);
        assert_eq!(r3.maximal_ideal().dim(), 3);

        let r1 = build_local_algebra(gf(2), &["x"], &rels(gf(2), &["x"], &["x^2"]), 2).unwrap();
        let x1 = RingElement::variable(&r1, 0);
        assert_eq!(x1.multiply(&x1).unwrap(), RingElement::zero(&r1));
        assert!(x.multiply(&x1).is_err());
    }

    #[test]
    fn non_monomial_relations_reduce() {
        // x^2 = y^2, x*y = 0 in three-dimensional socle-one algebra
        let vars = ["x", "y"];
        let r = build_local_algebra(gf(3), &vars, &rels(gf(3), &vars, &["x^2 + 2*y^2", "x*y"]), 3)
            .unwrap();
        assert_eq!(r.basis_names(), ["1", "x", "y", "y^2"]);
        let x2 = r.parse_element("x^2").unwrap();
        assert_eq!(x2.to_string(), "y^2");
    }

    #[test]
    fn relations_with_unit_factor_localize() {
        // x^2 (1 + x) generates (x^2) in the local ring.
        let r = build_local_algebra(gf(2), &["x"], &rels(gf(2), &["x"], &["x^2 + x^3"]), 3)
            .unwrap();
        assert_eq!(r.basis_names(), ["1", "x"]);
    }

    #[test]
    fn too_small_nil_bound_is_rejected() {
        let err = build_local_algebra(gf(2), &["x"], &rels(gf(2), &["x"], &["x^3"]), 2)
            .unwrap_err();
        assert!(matches!(err, Error::NotLocal { nil_bound: 2, .. }));
        assert!(err.to_string().contains("raise nil_bound"));
    }

    #[test]
    fn unit_relation_is_the_zero_ring() {
        let err = build_local_algebra(gf(2), &["x"], &rels(gf(2), &["x"], &["1 + x"]), 2)
            .unwrap_err();
        assert_eq!(err, Error::ZeroRing);
    }

    #[test]
    fn corrupted_table_reports_associativity() {
        let f = gf(2);
        let basis = vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]];
        // x acts as in R3, except x * y is sent to x
        let ax = Matrix::from_columns(
            f,
            4,
            &[vec![0, 1, 0, 0], vec![0, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 0, 0]],
        )
        .unwrap();
        let ay = Matrix::from_columns(
            f,
            4,
            &[vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![0, 0, 0, 0], vec![0, 0, 0, 0]],
        )
        .unwrap();
        let r = LocalAlgebra::from_table_unchecked(f, &["x", "y"], basis, vec![ax, ay]).unwrap();
        let report = r.validate();
        let (a, b, c) = report.associativity.clone().unwrap();
        let idx = |s: &str| r.basis_names().iter().position(|n| n == s).unwrap();
        let (i, j, k) = (idx(&a), idx(&b), idx(&c));
        let left = r.multiply_coords(
            &r.multiply_coords(&r.basis_vector(i), &r.basis_vector(j)),
            &r.basis_vector(k),
        );
        let right = r.multiply_coords(
            &r.basis_vector(i),
            &r.multiply_coords(&r.basis_vector(j), &r.basis_vector(k)),
        );
        assert_ne!(left, right);
        assert!(!report.is_ok());
    }

    #[test]
    fn idempotent_variable_fails_nilpotence() {
        let f = gf(2);
        let ax = Matrix::from_columns(f, 2, &[vec![0, 1], vec![0, 1]]).unwrap();
        let r =
            LocalAlgebra::from_table_unchecked(f, &["x"], vec![vec![0], vec![1]], vec![ax]).unwrap();
        let report = r.validate();
        assert_eq!(report.nilpotence.as_deref(), Some("x"));
    }

    #[test]
    fn construction_is_deterministic() {
        let vars = ["x", "y"];
        let a = build_local_algebra(gf(2), &vars, &rels(gf(2), &vars, &["x^2", "y^2"]), 4).unwrap();
        let b = build_local_algebra(gf(2), &vars, &rels(gf(2), &vars, &["x^2", "y^2"]), 4).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.actions(), b.actions());
    }
}
