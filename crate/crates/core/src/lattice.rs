//! Integer lattices spanned by finitely many vectors, kept in row Hermite
//! normal form so that membership is a single forward-substitution pass.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("vector of length {got} in a lattice of ambient dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("integer overflow during row reduction")]
    Overflow,
}

/// A sublattice of `Z^n` given by a basis in row Hermite normal form: pivot
/// columns strictly increase, pivots are positive, and entries above a pivot
/// are reduced into `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    ambient: usize,
    rows: Vec<Vec<i64>>,
    pivots: Vec<usize>,
}

impl Lattice {
    pub fn from_generators<I, V>(ambient: usize, generators: I) -> Result<Lattice, LatticeError>
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[i64]>,
    {
        let mut rows = Vec::new();
        for g in generators {
            let g = g.as_ref();
            if g.len() != ambient {
                return Err(LatticeError::DimensionMismatch { expected: ambient, got: g.len() });
            }
            if g.iter().any(|&x| x != 0) {
                rows.push(g.to_vec());
            }
        }
        let (rows, pivots) = hermite_normal_form(rows, ambient)?;
        Ok(Lattice { ambient, rows, pivots })
    }

    pub fn ambient_dimension(&self) -> usize {
        self.ambient
    }

    /// Rank of the lattice as a free abelian group.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// Integer coordinates of `x` against the basis, when `x` lies in the
    /// lattice.
    pub fn solve(&self, x: &[i64]) -> Result<Option<Vec<i64>>, LatticeError> {
        if x.len() != self.ambient {
            return Err(LatticeError::DimensionMismatch { expected: self.ambient, got: x.len() });
        }
        let mut residual = x.to_vec();
        let mut coeffs = Vec::with_capacity(self.rows.len());
        let mut next_col = 0;
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            // Columns skipped between pivots can no longer be cleared.
            if residual[next_col..col].iter().any(|&r| r != 0) {
                return Ok(None);
            }
            let pivot = row[col];
            if residual[col] % pivot != 0 {
                return Ok(None);
            }
            let c = residual[col] / pivot;
            if c != 0 {
                for (r, &b) in residual.iter_mut().zip(row).skip(col) {
                    *r = c.checked_mul(b).and_then(|m| r.checked_sub(m)).ok_or(LatticeError::Overflow)?;
                }
            }
            coeffs.push(c);
            next_col = col + 1;
        }
        if residual[next_col..].iter().any(|&r| r != 0) {
            return Ok(None);
        }
        Ok(Some(coeffs))
    }

    pub fn contains(&self, x: &[i64]) -> Result<bool, LatticeError> {
        Ok(self.solve(x)?.is_some())
    }
}

/// Row-reduces `rows` over the integers. Returns the nonzero rows of the
/// Hermite normal form and their pivot columns.
pub fn hermite_normal_form(mut rows: Vec<Vec<i64>>, ncols: usize) -> Result<(Vec<Vec<i64>>, Vec<usize>), LatticeError> {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == rows.len() {
            break;
        }
        // Euclid on the column until a single nonzero entry remains at `top`.
        loop {
            let candidate = (top..rows.len())
                .filter(|&r| rows[r][col] != 0)
                .min_by_key(|&r| rows[r][col].unsigned_abs());
            let Some(best) = candidate else { break };
            rows.swap(top, best);
            let mut reduced_any = false;
            for r in top + 1..rows.len() {
                if rows[r][col] != 0 {
                    let q = rows[r][col].div_euclid(rows[top][col]);
                    let (pivot_row, other) = split_pair(&mut rows, top, r);
                    axpy(other, pivot_row, q)?;
                    reduced_any = true;
                }
            }
            if !reduced_any || (top + 1..rows.len()).all(|r| rows[r][col] == 0) {
                break;
            }
        }
        if rows[top][col] == 0 {
            continue;
        }
        if rows[top][col] < 0 {
            for x in rows[top].iter_mut() {
                *x = x.checked_neg().ok_or(LatticeError::Overflow)?;
            }
        }
        let pivot = rows[top][col];
        for r in 0..top {
            let q = rows[r][col].div_euclid(pivot);
            if q != 0 {
                let (pivot_row, other) = split_pair(&mut rows, top, r);
                axpy(other, pivot_row, q)?;
            }
        }
        pivots.push(col);
        top += 1;
    }
    rows.truncate(top);
    Ok((rows, pivots))
}

fn split_pair(rows: &mut [Vec<i64>], a: usize, b: usize) -> (&Vec<i64>, &mut Vec<i64>) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = rows.split_at_mut(b);
        (&lo[a], &mut hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(a);
        (&hi[0], &mut lo[b])
    }
}

/// `target -= q * source`.
fn axpy(target: &mut [i64], source: &[i64], q: i64) -> Result<(), LatticeError> {
    for (t, &s) in target.iter_mut().zip(source) {
        *t = q.checked_mul(s).and_then(|m| t.checked_sub(m)).ok_or(LatticeError::Overflow)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn triangle_edge_lattice_is_even_sum_vectors() {
        let lat = Lattice::from_generators(3, [[1, 1, 0], [0, 1, 1], [1, 0, 1]]).unwrap();
        assert_eq!(lat.rank(), 3);
        assert!(lat.contains(&[2, 0, 0]).unwrap());
        assert!(!lat.contains(&[1, 0, 0]).unwrap());
        assert!(lat.contains(&[1, 1, 2]).unwrap());
    }

    #[test]
    fn four_cycle_has_rank_three() {
        let lat = Lattice::from_generators(4, [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [1, 0, 0, 1]]).unwrap();
        assert_eq!(lat.rank(), 3);
        // Bipartition balance: x0 + x2 = x1 + x3.
        assert!(!lat.contains(&[2, 0, 0, 0]).unwrap());
        assert!(lat.contains(&[1, 1, 0, 0]).unwrap());
    }

    #[test]
    fn hnf_shape() {
        let (rows, pivots) = hermite_normal_form(vec![vec![4, 6], vec![6, 9]], 2).unwrap();
        assert_eq!(pivots, vec![0]);
        assert_eq!(rows, vec![vec![2, 3]]);
        let (rows, pivots) = hermite_normal_form(vec![vec![2, 5], vec![0, 3], vec![0, 0]], 2).unwrap();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(rows, vec![vec![2, 2], vec![0, 3]]);
    }

    #[test]
    fn empty_and_mismatch() {
        let lat = Lattice::from_generators::<_, [i64; 2]>(2, []).unwrap();
        assert_eq!(lat.rank(), 0);
        assert!(lat.contains(&[0, 0]).unwrap());
        assert!(!lat.contains(&[0, 1]).unwrap());
        assert_eq!(lat.contains(&[0]), Err(LatticeError::DimensionMismatch { expected: 2, got: 1 }));
    }

    proptest! {
        // Integer combinations of the generators are always members, and the
        // returned coordinates reproduce the vector.
        #[test]
        fn combinations_are_members(
            gens in prop::collection::vec(prop::collection::vec(-4i64..5, 4), 1..5),
            coeffs in prop::collection::vec(-3i64..4, 5),
        ) {
            let lat = Lattice::from_generators(4, &gens).unwrap();
            let mut x = vec![0i64; 4];
            for (g, c) in gens.iter().zip(&coeffs) {
                for (xi, gi) in x.iter_mut().zip(g) {
                    *xi += c * gi;
                }
            }
            let sol = lat.solve(&x).unwrap();
            prop_assert!(sol.is_some());
            let sol = sol.unwrap();
            let mut back = vec![0i64; 4];
            for (row, c) in lat.basis().iter().zip(&sol) {
                for (bi, ri) in back.iter_mut().zip(row) {
                    *bi += c * ri;
                }
            }
            prop_assert_eq!(back, x);
            prop_assert!(lat.rank() <= gens.len());
        }
    }
}
