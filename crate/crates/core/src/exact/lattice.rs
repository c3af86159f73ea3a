//! Integer matrices, Hermite normal form and integer kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{common_denominator, Rational};

/// A dense integer matrix stored as a list of rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

/// Row-style Hermite normal form `H = U·A` with `U` unimodular.
#[derive(Clone, Debug)]
pub struct Hermite {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub rank: usize,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn from_i64(rows: &[Vec<i64>], cols: usize) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            cols,
        )
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        if r == c {
                            BigInt::one()
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        IntMatrix {
            rows: n,
            cols: n,
            data,
        }
    }

    /// Scales a rational matrix by the lcm of all its denominators. The
    /// kernel is unchanged because the whole matrix is scaled uniformly.
    pub fn from_rational_cleared(rows: &[Vec<Rational>], cols: usize) -> Self {
        let l = common_denominator(rows.iter().flatten());
        let data = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|q| {
                        let scaled = q * &Rational::from_bigint(l.clone());
                        scaled.numer().clone()
                    })
                    .collect()
            })
            .collect();
        Self::from_rows(data, cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r][c]
    }

    pub fn into_rows(self) -> Vec<Vec<BigInt>> {
        self.data
    }

    pub fn transpose(&self) -> Self {
        let data = (0..self.cols)
            .map(|c| (0..self.rows).map(|r| self.data[r][c].clone()).collect())
            .collect();
        IntMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let data = self
            .data
            .iter()
            .map(|row| {
                (0..other.cols)
                    .map(|c| {
                        row.iter()
                            .enumerate()
                            .map(|(k, a)| a * &other.data[k][c])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        IntMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    /// Row-style Hermite normal form with transform.
    pub fn hermite(&self) -> Hermite {
        let (h, u, rank) = hermite_rows(self.data.clone(), self.cols, true);
        Hermite {
            h: IntMatrix {
                rows: self.rows,
                cols: self.cols,
                data: h,
            },
            u: IntMatrix {
                rows: self.rows,
                cols: self.rows,
                data: u.expect("tracked"),
            },
            rank,
        }
    }

    /// Hermite normal form without the transform; zero rows dropped.
    pub fn hermite_form(&self) -> IntMatrix {
        let (mut h, _, rank) = hermite_rows(self.data.clone(), self.cols, false);
        h.truncate(rank);
        IntMatrix {
            rows: rank,
            cols: self.cols,
            data: h,
        }
    }
}

fn sub_multiple(target: &mut [BigInt], src: &[BigInt], q: &BigInt) {
    for (t, s) in target.iter_mut().zip(src) {
        if !s.is_zero() {
            *t -= q * s;
        }
    }
}

fn negate(row: &mut [BigInt]) {
    for x in row.iter_mut() {
        *x = -std::mem::take(x);
    }
}

/// Reduced rows, the transform if tracked, and the rank.
type Reduced = (Vec<Vec<BigInt>>, Option<Vec<Vec<BigInt>>>, usize);

/// Euclidean row reduction: pivots are chosen with minimal magnitude so
/// that unit entries are used first and coefficients stay small.
fn hermite_rows(mut a: Vec<Vec<BigInt>>, cols: usize, track: bool) -> Reduced {
    let n = a.len();
    let mut u: Option<Vec<Vec<BigInt>>> = track.then(|| IntMatrix::identity(n).data);
    let mut row = 0;
    for col in 0..cols {
        if row == n {
            break;
        }
        loop {
            let best = (row..n)
                .filter(|&r| !a[r][col].is_zero())
                .min_by(|&x, &y| a[x][col].abs().cmp(&a[y][col].abs()).then(x.cmp(&y)));
            let Some(p) = best else { break };
            a.swap(row, p);
            if let Some(u) = u.as_mut() {
                u.swap(row, p);
            }
            let mut done = true;
            for r in row + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let q = &a[r][col] / &a[row][col];
                let (head, tail) = a.split_at_mut(r);
                sub_multiple(&mut tail[0], &head[row], &q);
                if let Some(u) = u.as_mut() {
                    let (head, tail) = u.split_at_mut(r);
                    sub_multiple(&mut tail[0], &head[row], &q);
                }
                if !a[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if row == n || a[row][col].is_zero() {
            continue;
        }
        if a[row][col].is_negative() {
            negate(&mut a[row]);
            if let Some(u) = u.as_mut() {
                negate(&mut u[row]);
            }
        }
        for r in 0..row {
            if a[r][col].is_zero() {
                continue;
            }
            let q = a[r][col].div_floor(&a[row][col]);
            if q.is_zero() {
                continue;
            }
            let (head, tail) = a.split_at_mut(row);
            sub_multiple(&mut head[r], &tail[0], &q);
            if let Some(u) = u.as_mut() {
                let (head, tail) = u.split_at_mut(row);
                sub_multiple(&mut head[r], &tail[0], &q);
            }
        }
        row += 1;
    }
    (a, u, row)
}

/// A basis of the integer kernel `{v ∈ Z^n : A·v = 0}` in Hermite normal
/// form. The basis has `n - rank(A)` vectors.
pub fn hnf_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let n = a.cols();
    let herm = a.transpose().hermite();
    let kernel_rows: Vec<Vec<BigInt>> = herm.u.into_rows().into_iter().skip(herm.rank).collect();
    if kernel_rows.is_empty() {
        return Vec::new();
    }
    IntMatrix::from_rows(kernel_rows, n)
        .hermite_form()
        .into_rows()
}
