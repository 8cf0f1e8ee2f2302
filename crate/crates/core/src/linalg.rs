//! Exact linear algebra over any [`Field`]: reduced row echelon form,
//! kernels, linear and affine solving, and row-space comparisons.
//!
//! Everything returns canonical data (RREF bases), so subspace equality is
//! plain `==` on the output.

use num_traits::{One, Zero};

use crate::scalar::Field;

/// Reduced row echelon form of `rows`; zero rows are dropped, so the result
/// is the canonical basis of the row space.
pub fn rref<F: Field>(mut rows: Vec<Vec<F>>) -> Vec<Vec<F>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().expect("pivot is nonzero");
        for x in rows[rank].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for j in 0..ncols {
                    let delta = f.clone() * rows[rank][j].clone();
                    rows[r][j] = rows[r][j].clone() - delta;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    rows
}

/// Rank of the matrix with the given rows.
pub fn rank<F: Field>(rows: Vec<Vec<F>>) -> usize {
    rref(rows).len()
}

/// Do two sets of rows span the same subspace?
pub fn row_space_eq<F: Field>(a: Vec<Vec<F>>, b: Vec<Vec<F>>) -> bool {
    rref(a) == rref(b)
}

/// Is `v` in the span of `basis`?
pub fn in_span<F: Field>(basis: &[Vec<F>], v: &[F]) -> bool {
    coords_in_basis(basis, v).is_some()
}

/// Coordinates of `v` in terms of `basis` (treated as column vectors of a
/// system), or `None` if `v` is outside the span. The basis need not be
/// independent; one valid coordinate vector is returned.
pub fn coords_in_basis<F: Field>(basis: &[Vec<F>], v: &[F]) -> Option<Vec<F>> {
    if basis.is_empty() {
        return v.iter().all(Zero::is_zero).then(Vec::new);
    }
    let n = v.len();
    let a: Vec<Vec<F>> = (0..n)
        .map(|i| basis.iter().map(|b| b[i].clone()).collect())
        .collect();
    solve(&a, v).map(|(particular, _)| particular)
}

/// Solve `A x = b` where `a` holds the rows of `A`. Returns a particular
/// solution together with a basis of the kernel of `A`, or `None` if the
/// system is inconsistent.
pub fn solve<F: Field>(a: &[Vec<F>], b: &[F]) -> Option<(Vec<F>, Vec<Vec<F>>)> {
    assert_eq!(a.len(), b.len());
    let ncols = a.first().map_or(0, Vec::len);
    // Eliminate on the augmented matrix.
    let mut aug: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..aug.len()).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(rank, p);
        let inv = aug[rank][col].inv().expect("pivot is nonzero");
        for x in aug[rank].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..aug.len() {
            if r != rank && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for j in 0..=ncols {
                    let delta = f.clone() * aug[rank][j].clone();
                    aug[r][j] = aug[r][j].clone() - delta;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == aug.len() {
            break;
        }
    }
    // Inconsistent iff some zero row has nonzero right-hand side.
    for row in aug.iter().skip(rank) {
        if !row[ncols].is_zero() {
            return None;
        }
    }
    let mut particular = vec![F::zero(); ncols];
    for (r, &col) in pivots.iter().enumerate() {
        particular[col] = aug[r][ncols].clone();
    }
    // Kernel basis: one vector per free column.
    let mut kernel = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![F::zero(); ncols];
        v[free] = F::one();
        for (r, &col) in pivots.iter().enumerate() {
            v[col] = F::zero() - aug[r][free].clone();
        }
        kernel.push(v);
    }
    Some((particular, kernel))
}

/// Basis of the kernel `{x : A x = 0}` of the matrix with rows `a`.
pub fn kernel<F: Field>(a: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    if a.is_empty() {
        return (0..ncols)
            .map(|i| {
                let mut v = vec![F::zero(); ncols];
                v[i] = F::one();
                v
            })
            .collect();
    }
    let zero = vec![F::zero(); a.len()];
    solve(a, &zero).expect("homogeneous system is consistent").1
}

/// Basis of the intersection of the row spaces of `a` and `b`.
pub fn intersect<F: Field>(a: &[Vec<F>], b: &[Vec<F>], dim: usize) -> Vec<Vec<F>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // Solve Σ s_i a_i − Σ t_j b_j = 0; the a-parts of kernel vectors span
    // the intersection.
    let rows: Vec<Vec<F>> = (0..dim)
        .map(|i| {
            let mut row: Vec<F> = a.iter().map(|v| v[i].clone()).collect();
            row.extend(b.iter().map(|v| F::zero() - v[i].clone()));
            row
        })
        .collect();
    let combos = kernel(&rows, a.len() + b.len());
    let vecs: Vec<Vec<F>> = combos
        .iter()
        .map(|c| {
            let mut v = vec![F::zero(); dim];
            for (s, av) in c.iter().take(a.len()).zip(a) {
                for (x, y) in v.iter_mut().zip(av) {
                    *x = x.clone() + s.clone() * y.clone();
                }
            }
            v
        })
        .collect();
    rref(vecs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_bigint::BigInt;
    use num_traits::Zero;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn rv(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rref_canonicalizes() {
        let a = vec![rv(&[2, 4, 0]), rv(&[1, 2, 1])];
        let b = vec![rv(&[1, 2, 0]), rv(&[0, 0, 1]), rv(&[3, 6, 2])];
        assert!(row_space_eq(a, b));
    }

    #[test]
    fn solve_and_kernel() {
        // x + y = 3, x − y = 1 → x = 2, y = 1
        let a = vec![rv(&[1, 1]), rv(&[1, -1])];
        let (sol, ker) = solve(&a, &rv(&[3, 1])).unwrap();
        assert_eq!(sol, rv(&[2, 1]));
        assert!(ker.is_empty());
        // Inconsistent system
        let a = vec![rv(&[1, 1]), rv(&[2, 2])];
        assert!(solve(&a, &rv(&[1, 3])).is_none());
        // Underdetermined: kernel of [1, 1, 1]
        let k = kernel(&[rv(&[1, 1, 1])], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(v.iter().fold(Rational::zero(), |s, x| s + x).is_zero());
        }
    }

    #[test]
    fn span_membership_and_intersection() {
        let basis = vec![rv(&[1, 0, 1]), rv(&[0, 1, 1])];
        assert!(in_span(&basis, &rv(&[2, 3, 5])));
        assert!(!in_span(&basis, &rv(&[1, 0, 0])));
        assert_eq!(coords_in_basis(&basis, &rv(&[2, 3, 5])), Some(rv(&[2, 3])));

        let a = vec![rv(&[1, 0, 0]), rv(&[0, 1, 0])];
        let b = vec![rv(&[0, 1, 0]), rv(&[0, 0, 1])];
        let i = intersect(&a, &b, 3);
        assert_eq!(i, vec![rv(&[0, 1, 0])]);
    }
}
