//! Hermite and Smith normal forms with unimodular certificates, and the
//! integer solving built on them.

use super::matrix::Matrix;
use super::scalar::IntegerScalar;
use super::LinalgError;

/// `U · M · V = S` with `U`, `V` unimodular and `S` diagonal.
///
/// The first `rank` diagonal entries are positive and each divides the next;
/// the remaining ones are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf<T> {
    pub s: Matrix<T>,
    pub u: Matrix<T>,
    pub v: Matrix<T>,
    pub rank: usize,
}

impl<T: IntegerScalar> Snf<T> {
    /// The nonzero diagonal entries `s_1 | s_2 | ... | s_rank`.
    pub fn elementary_divisors(&self) -> Vec<T> {
        (0..self.rank).map(|i| self.s[(i, i)].clone()).collect()
    }
}

/// Column-style Hermite form: `M · U = H` with `U` unimodular.
///
/// `H` is in lower echelon form. Pivot `k` sits at `(pivot_rows[k], k)`, is
/// positive, has only zeros to its right, and every entry to its left in the
/// same row lies in `[0, pivot)`. Columns `rank..` of `H` are zero, so the
/// matching columns of `U` are a basis of the integer kernel of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hnf<T> {
    pub h: Matrix<T>,
    pub u: Matrix<T>,
    pub pivot_rows: Vec<usize>,
}

impl<T: IntegerScalar> Hnf<T> {
    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }

    /// Basis of `{x ∈ Z^n : M x = 0}` as columns.
    pub fn kernel(&self) -> Matrix<T> {
        self.u.select_columns(self.rank()..self.u.cols())
    }

    /// The nonzero columns of `H`, a basis of the column span of `M`.
    pub fn image(&self) -> Matrix<T> {
        self.h.select_columns(0..self.rank())
    }
}

fn min_abs_nonzero<T: IntegerScalar>(
    cells: impl Iterator<Item = ((usize, usize), T)>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), T)> = None;
    for (pos, value) in cells {
        if value.is_zero() {
            continue;
        }
        let a = value.abs();
        match &best {
            Some((_, b)) if *b <= a => {}
            _ => best = Some((pos, a)),
        }
    }
    best.map(|(pos, _)| pos)
}

/// Smith normal form of an arbitrary integer matrix.
pub fn snf<T: IntegerScalar>(m: &Matrix<T>) -> Snf<T> {
    let (rows, cols) = m.shape();
    let mut a = m.clone();
    let mut u = Matrix::identity(rows);
    let mut v = Matrix::identity(cols);
    let mut t = 0;

    while t < rows.min(cols) {
        let cells = (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j)));
        let Some((pi, pj)) = min_abs_nonzero(cells.map(|p| (p, a[p].clone()))) else {
            break;
        };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let pivot = a[(t, t)].clone();
            let mut residue = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&pivot);
                a.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                residue |= !a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&pivot);
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                residue |= !a[(t, j)].is_zero();
            }

            if residue {
                // A remainder smaller than the pivot is left in row or column t.
                let cross = (t..rows)
                    .map(|i| (i, t))
                    .chain((t + 1..cols).map(|j| (t, j)));
                let (pi, pj) = min_abs_nonzero(cross.map(|p| (p, a[p].clone())))
                    .expect("residue implies a nonzero entry");
                a.swap_rows(t, pi);
                u.swap_rows(t, pi);
                a.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }

            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = T::one();
                    a.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    Snf {
        s: a,
        u,
        v,
        rank: t,
    }
}

/// Column-style Hermite normal form.
pub fn hnf<T: IntegerScalar>(m: &Matrix<T>) -> Hnf<T> {
    let (rows, cols) = m.shape();
    let mut h = m.clone();
    let mut u = Matrix::identity(cols);
    let mut pivot_rows = Vec::new();
    let mut k = 0;

    for i in 0..rows {
        if k == cols {
            break;
        }
        loop {
            let cells = (k..cols).map(|j| ((i, j), h[(i, j)].clone()));
            let Some((_, pj)) = min_abs_nonzero(cells) else {
                break;
            };
            h.swap_cols(k, pj);
            u.swap_cols(k, pj);
            let pivot = h[(i, k)].clone();
            let mut done = true;
            for j in k + 1..cols {
                if h[(i, j)].is_zero() {
                    continue;
                }
                let q = -h[(i, j)].div_floor(&pivot);
                h.add_col_multiple(j, k, &q);
                u.add_col_multiple(j, k, &q);
                done &= h[(i, j)].is_zero();
            }
            if done {
                break;
            }
        }
        if h[(i, k)].is_zero() {
            continue;
        }
        if h[(i, k)].is_negative() {
            h.negate_col(k);
            u.negate_col(k);
        }
        let pivot = h[(i, k)].clone();
        for j in 0..k {
            let q = -h[(i, j)].div_floor(&pivot);
            h.add_col_multiple(j, k, &q);
            u.add_col_multiple(j, k, &q);
        }
        pivot_rows.push(i);
        k += 1;
    }

    Hnf { h, u, pivot_rows }
}

/// Rank over the rationals.
pub fn rank<T: IntegerScalar>(m: &Matrix<T>) -> usize {
    hnf(m).rank()
}

/// Finds an integer `x` with `M · x = b`, or `None` if there is none.
pub fn solve_in_lattice<T: IntegerScalar>(
    m: &Matrix<T>,
    b: &[T],
) -> Result<Option<Vec<T>>, LinalgError> {
    if b.len() != m.rows() {
        return Err(LinalgError::Dimension {
            context: "right-hand side of integer solve",
            expected: m.rows(),
            found: b.len(),
        });
    }
    let snf = snf(m);
    solve_with_snf(&snf, b)
}

/// Same as [`solve_in_lattice`], reusing a precomputed Smith form of `M`.
pub fn solve_with_snf<T: IntegerScalar>(
    snf: &Snf<T>,
    b: &[T],
) -> Result<Option<Vec<T>>, LinalgError> {
    // M x = b  <=>  S y = U b  with  x = V y
    let c = snf.u.mul_vec(b)?;
    let cols = snf.v.rows();
    let mut y = vec![T::zero(); cols];
    for (i, ci) in c.iter().enumerate() {
        if i < snf.rank {
            let s = &snf.s[(i, i)];
            if !ci.is_multiple_of(s) {
                return Ok(None);
            }
            y[i] = ci.clone() / s.clone();
        } else if !ci.is_zero() {
            return Ok(None);
        }
    }
    Ok(Some(snf.v.mul_vec(&y)?))
}
