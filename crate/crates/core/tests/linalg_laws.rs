use num_bigint::BigInt;
use num_rational::BigRational;
use pairops_core::{Field, Matrix, PrimeField, Rationals, Subspace};
use proptest::prelude::*;

fn gf(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

/// A `rows x cols` matrix over `GF(p)` with entries in `[0, p)`.
fn matrix(p: u32, rows: usize, cols: usize) -> impl Strategy<Value = Matrix<PrimeField>> {
    prop::collection::vec(0..p, rows * cols)
        .prop_map(move |data| Matrix::new(gf(p), rows, cols, data).unwrap())
}

fn shaped(p: u32) -> impl Strategy<Value = Matrix<PrimeField>> {
    (1usize..5, 1usize..6).prop_flat_map(move |(r, c)| matrix(p, r, c))
}

/// A subspace of `GF(p)^n` spanned by up to three random vectors.
fn span(p: u32, n: usize) -> impl Strategy<Value = Subspace<PrimeField>> {
    (0usize..4)
        .prop_flat_map(move |k| matrix(p, k, n))
        .prop_map(move |m| Subspace::from_rows(gf(p), n, &m.row_vectors()).unwrap())
}

/// Three subspaces of one ambient `GF(p)^n`.
fn triple(p: u32) -> impl Strategy<Value = [Subspace<PrimeField>; 3]> {
    (1usize..6).prop_flat_map(move |n| {
        (span(p, n), span(p, n), span(p, n)).prop_map(|(a, b, c)| [a, b, c])
    })
}

fn all_vectors(p: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..p).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

proptest! {
    #[test]
    fn rank_plus_nullity(m in shaped(3)) {
        prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kernel_vectors_are_killed(m in shaped(5)) {
        for v in m.kernel().basis_vectors() {
            prop_assert!(m.apply(&v).iter().all(|x| *x == 0));
        }
    }

    #[test]
    fn kernel_matches_enumeration(m in shaped(2)) {
        let k = m.kernel();
        let brute: Vec<Vec<u32>> = all_vectors(2, m.cols())
            .into_iter()
            .filter(|v| m.apply(v).iter().all(|x| *x == 0))
            .collect();
        prop_assert_eq!(brute.len(), 1usize << k.dim());
        for v in &brute {
            prop_assert!(k.contains(v));
        }
    }

    #[test]
    fn image_matches_enumeration(m in shaped(3)) {
        let im = m.image();
        let mut brute: Vec<Vec<u32>> = all_vectors(3, m.cols()).iter().map(|v| m.apply(v)).collect();
        brute.sort();
        brute.dedup();
        prop_assert_eq!(brute.len() as u64, 3u64.pow(im.dim() as u32));
        for v in &brute {
            prop_assert!(im.contains(v));
        }
    }

    #[test]
    fn rref_is_canonical(m in shaped(7), scale in 1u32..7) {
        let (r, pivots) = m.rref();
        prop_assert_eq!(r.rref().1, pivots.clone());
        prop_assert_eq!(r.rref().0, r.clone());
        // Scaling and reversing the rows does not change the row space.
        let f = gf(7);
        let mut rows: Vec<Vec<u32>> = m
            .row_vectors()
            .into_iter()
            .map(|v| v.iter().map(|x| f.mul(x, &scale)).collect())
            .collect();
        rows.reverse();
        let again = Subspace::from_rows(f, m.cols(), &rows).unwrap();
        prop_assert_eq!(again, m.row_space());
    }

    #[test]
    fn dimension_formula([a, b, _] in triple(3)) {
        let s = a.sum(&b).unwrap();
        let i = a.intersect(&b).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
        prop_assert!(i.is_subspace_of(&a) && i.is_subspace_of(&b));
        prop_assert!(a.is_subspace_of(&s) && b.is_subspace_of(&s));
    }

    #[test]
    fn modular_law([a, b, c] in triple(2)) {
        // Force a ⊆ c.
        let a = a.intersect(&c).unwrap();
        let left = a.sum(&b.intersect(&c).unwrap()).unwrap();
        let right = a.sum(&b).unwrap().intersect(&c).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn lattice_absorption([a, b, _] in triple(5)) {
        prop_assert_eq!(a.sum(&a.intersect(&b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(a.intersect(&a.sum(&b).unwrap()).unwrap(), a);
    }

    #[test]
    fn orthogonal_is_an_involution([a, b, _] in triple(3)) {
        let n = a.ambient_dim();
        prop_assert_eq!(a.orthogonal().dim() + a.dim(), n);
        prop_assert_eq!(a.orthogonal().orthogonal(), a.clone());
        // (a + b)^⊥ = a^⊥ ∩ b^⊥.
        prop_assert_eq!(
            a.sum(&b).unwrap().orthogonal(),
            a.orthogonal().intersect(&b.orthogonal()).unwrap()
        );
    }

    #[test]
    fn quotient_coordinates_round_trip([a, _, _] in triple(5), seed in prop::collection::vec(0u32..5, 6)) {
        let n = a.ambient_dim();
        let v: Vec<u32> = seed[..n].to_vec();
        let r = a.reduce(&v);
        let f = gf(5);
        let diff: Vec<u32> = v.iter().zip(&r).map(|(x, y)| f.sub(x, y)).collect();
        prop_assert!(a.contains(&diff));
        prop_assert_eq!(a.reduce(&r), r.clone());
        for &p in a.pivots() {
            prop_assert_eq!(r[p], 0);
        }
        if let Some(c) = a.coordinates(&diff) {
            prop_assert_eq!(a.combination(&c), diff);
        } else {
            prop_assert!(false, "difference lies in the subspace");
        }
    }

    #[test]
    fn preimage_and_image_adjoint(m in matrix(3, 3, 4), a in span(3, 3)) {
        let pre = a.preimage_under(&m).unwrap();
        for v in all_vectors(3, 4) {
            prop_assert_eq!(pre.contains(&v), a.contains(&m.apply(&v)));
        }
        prop_assert!(pre.image_under(&m).unwrap().is_subspace_of(&a));
    }

    #[test]
    fn invertible_matrices_round_trip(m in matrix(5, 3, 3)) {
        match m.inverse() {
            Ok(inv) => {
                prop_assert_eq!(m.rank(), 3);
                prop_assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(gf(5), 3));
            }
            Err(_) => prop_assert!(m.rank() < 3),
        }
    }

    #[test]
    fn rational_rank_nullity(data in prop::collection::vec(-4i64..5, 12)) {
        let q = Rationals;
        let entries: Vec<BigRational> = data.iter().map(|x| q.from_i64(*x)).collect();
        let m = Matrix::new(q, 3, 4, entries).unwrap();
        prop_assert_eq!(m.rank() + m.kernel().dim(), 4);
        let zero = BigRational::from_integer(BigInt::from(0));
        for v in m.kernel().basis_vectors() {
            prop_assert!(m.apply(&v).iter().all(|x| *x == zero));
        }
    }
}

#[test]
fn subspace_count_of_gf2_cubed() {
    // 1 + 7 + 7 + 1 subspaces of GF(2)^3, by enumerating spanning sets.
    let mut seen = std::collections::BTreeSet::new();
    let vs = all_vectors(2, 3);
    for a in &vs {
        for b in &vs {
            for c in &vs {
                seen.insert(
                    Subspace::from_rows(gf(2), 3, &[a.clone(), b.clone(), c.clone()]).unwrap(),
                );
            }
        }
    }
    assert_eq!(seen.len(), 16);
    let dims: Vec<usize> = (0..=3)
        .map(|d| seen.iter().filter(|s| s.dim() == d).count())
        .collect();
    assert_eq!(dims, [1, 7, 7, 1]);
}
