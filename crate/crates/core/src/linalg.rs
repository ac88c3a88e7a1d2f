//! Exact linear algebra over `Q` and `Z` for the small matrices this crate needs.
//!
//! Rational routines work on row lists; the integer routines implement the
//! column-style Hermite reduction used to split off lineality lattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::vector::IntVector;

pub(crate) type QVec = Vec<BigRational>;

pub(crate) fn to_q(v: &IntVector) -> QVec {
    v.iter().map(|a| BigRational::from_integer(a.clone())).collect()
}

pub(crate) fn dot_q(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn is_zero_q(v: &[BigRational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub(crate) fn rref(rows: &[QVec], ncols: usize) -> (Vec<QVec>, Vec<usize>) {
    let mut m: Vec<QVec> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub(crate) fn rank_q(rows: &[QVec], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of `{x : row · x = 0 for every row}`.
#[cfg(test)]
pub(crate) fn nullspace_q(rows: &[QVec], ncols: usize) -> Vec<QVec> {
    let (m, pivots) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Orthogonal projection of `v` onto the complement of `span(basis)`.
/// `basis` must be linearly independent.
pub(crate) fn project_away(v: &[BigRational], basis: &[QVec]) -> QVec {
    if basis.is_empty() {
        return v.to_vec();
    }
    let k = basis.len();
    // Solve (B B^T) c = B v, then return v - B^T c.
    let mut aug: Vec<QVec> = (0..k)
        .map(|i| {
            let mut row: QVec = (0..k).map(|j| dot_q(&basis[i], &basis[j])).collect();
            row.push(dot_q(&basis[i], v));
            row
        })
        .collect();
    let (red, pivots) = rref(&aug, k + 1);
    debug_assert_eq!(pivots.len(), k, "projection basis is dependent");
    aug = red;
    let mut out = v.to_vec();
    for (i, b) in basis.iter().enumerate() {
        let c = &aug[i][k];
        for (o, x) in out.iter_mut().zip(b) {
            *o -= c * x;
        }
    }
    out
}

/// Positive rescaling of a rational vector to a primitive integer vector.
pub(crate) fn primitive(v: &[BigRational]) -> IntVector {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    primitive_int(ints)
}

pub(crate) fn primitive_int(ints: Vec<BigInt>) -> IntVector {
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return IntVector::new(ints);
    }
    IntVector::new(ints.into_iter().map(|x| x / &g).collect())
}

/// Result of reducing an integer matrix `E` (rows) by unimodular column
/// operations: `E · unimodular = [H | 0]` with `H` of full column rank.
pub(crate) struct ColumnReduction {
    pub rank: usize,
    /// Columns of the unimodular transform, stored as rows (`columns[j]` is column `j`).
    pub columns: Vec<Vec<BigInt>>,
    /// Rows of the inverse transform.
    pub inverse_rows: Vec<Vec<BigInt>>,
}

impl ColumnReduction {
    /// Z-basis of the integer kernel of `E`.
    pub fn kernel_basis(&self) -> Vec<IntVector> {
        self.columns[self.rank..]
            .iter()
            .map(|c| IntVector::new(c.clone()))
            .collect()
    }

    /// Surjection `Z^n → Z^rank` whose kernel is the integer kernel of `E`.
    pub fn quotient_rows(&self) -> Vec<IntVector> {
        self.inverse_rows[..self.rank]
            .iter()
            .map(|r| IntVector::new(r.clone()))
            .collect()
    }
}

pub(crate) fn column_reduce(rows: &[IntVector], ncols: usize) -> ColumnReduction {
    let mut e: Vec<Vec<BigInt>> = rows.iter().map(|r| r.entries().to_vec()).collect();
    // u holds columns of U; uinv holds rows of U^{-1}.
    let mut u: Vec<Vec<BigInt>> = identity(ncols);
    let mut uinv: Vec<Vec<BigInt>> = identity(ncols);

    let swap = |e: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, uinv: &mut Vec<Vec<BigInt>>, j: usize, k: usize| {
        for row in e.iter_mut() {
            row.swap(j, k);
        }
        u.swap(j, k);
        uinv.swap(j, k);
    };
    // col_k -= q * col_j
    let axpy = |e: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, uinv: &mut Vec<Vec<BigInt>>, q: &BigInt, j: usize, k: usize| {
        for row in e.iter_mut() {
            let d = q * &row[j];
            row[k] -= d;
        }
        let uj = u[j].clone();
        for (x, y) in u[k].iter_mut().zip(&uj) {
            *x -= q * y;
        }
        let vk = uinv[k].clone();
        for (x, y) in uinv[j].iter_mut().zip(&vk) {
            *x += q * y;
        }
    };

    let mut pc = 0;
    for i in 0..e.len() {
        if pc == ncols {
            break;
        }
        loop {
            // smallest nonzero magnitude among columns pc.. moves to pc
            let best = (pc..ncols)
                .filter(|&j| !e[i][j].is_zero())
                .min_by(|&a, &b| e[i][a].abs().cmp(&e[i][b].abs()));
            let Some(best) = best else { break };
            if best != pc {
                swap(&mut e, &mut u, &mut uinv, pc, best);
            }
            let mut done = true;
            for k in pc + 1..ncols {
                if e[i][k].is_zero() {
                    continue;
                }
                let q = e[i][k].div_floor(&e[i][pc]);
                axpy(&mut e, &mut u, &mut uinv, &q, pc, k);
                if !e[i][k].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !e[i][pc].is_zero() {
            pc += 1;
        }
    }
    ColumnReduction {
        rank: pc,
        columns: u,
        inverse_rows: uinv,
    }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// Row Hermite normal form: positive pivots, entries above each pivot reduced
/// into `[0, pivot)`, zero rows dropped. Canonical for the row lattice.
pub(crate) fn row_hermite(rows: &[IntVector], ncols: usize) -> Vec<IntVector> {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.entries().to_vec()).collect();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        loop {
            let best = (r..m.len())
                .filter(|&i| !m[i][c].is_zero())
                .min_by(|&a, &b| m[a][c].abs().cmp(&m[b][c].abs()));
            let Some(best) = best else { break };
            m.swap(r, best);
            let mut done = true;
            for i in r + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let q = m[i][c].div_floor(&m[r][c]);
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
                if !m[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < m.len() && !m[r][c].is_zero() {
            if m[r][c].is_negative() {
                for x in m[r].iter_mut() {
                    *x = -&*x;
                }
            }
            let pivot_row = m[r].clone();
            for row in m.iter_mut().take(r) {
                let q = row[c].div_floor(&pivot_row[c]);
                if !q.is_zero() {
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x -= &q * y;
                    }
                }
            }
            r += 1;
        }
    }
    m.truncate(r);
    m.into_iter().map(IntVector::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IntVector {
        IntVector::from_i64s(v)
    }

    fn q(v: &[i64]) -> QVec {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn nullspace_of_single_row() {
        let ns = nullspace_q(&[q(&[1, 1, 0])], 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(dot_q(v, &q(&[1, 1, 0])).is_zero());
        }
        assert_eq!(rank_q(&ns, 3), 2);
    }

    #[test]
    fn projection_is_orthogonal() {
        let p = project_away(&q(&[3, 1]), &[q(&[1, 1])]);
        assert!(dot_q(&p, &q(&[1, 1])).is_zero());
        assert_eq!(primitive(&p), iv(&[1, -1]));
    }

    #[test]
    fn column_reduction_kernel_and_quotient() {
        let e = vec![iv(&[2, 4, 6]), iv(&[1, 1, 1])];
        let red = column_reduce(&e, 3);
        assert_eq!(red.rank, 2);
        let ker = red.kernel_basis();
        assert_eq!(ker.len(), 1);
        for row in &e {
            assert!(row.dot(&ker[0]).is_zero());
        }
        assert_eq!(primitive_int(ker[0].entries().to_vec()).max_norm(), ker[0].max_norm());
        // quotient rows kill the kernel and the transform is unimodular
        for r in red.quotient_rows() {
            assert!(r.dot(&ker[0]).is_zero());
        }
        for (i, row) in red.inverse_rows.iter().enumerate() {
            for (j, col) in red.columns.iter().enumerate() {
                let v: BigInt = row.iter().zip(col).map(|(a, b)| a * b).sum();
                assert_eq!(v, BigInt::from((i == j) as i64));
            }
        }
    }

    #[test]
    fn hermite_is_canonical() {
        let a = row_hermite(&[iv(&[2, 4]), iv(&[3, 5])], 2);
        let b = row_hermite(&[iv(&[5, 9]), iv(&[3, 5]), iv(&[0, 0])], 2);
        assert_eq!(a, b);
        assert_eq!(a, vec![iv(&[1, 1]), iv(&[0, 2])]);
    }
}
