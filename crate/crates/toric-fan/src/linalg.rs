//! Exact linear algebra over the integers and prime fields.
//!
//! All rank computations stay in `BigInt` (rows are rescaled by their gcd
//! after every elimination step, which keeps entries small for the sparse
//! incidence matrices this crate produces) or in `u64` arithmetic mod p.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

/// Dense integer matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged matrix rows");
            data.extend(row);
        }
        IntMatrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn reduce_row_by_gcd(&mut self, r: usize) {
        let mut g = BigInt::zero();
        for c in 0..self.cols {
            g = g.gcd(self.get(r, c));
            if g.is_one() {
                return;
            }
        }
        if g.is_zero() || g.is_one() {
            return;
        }
        for c in 0..self.cols {
            let v = self.get(r, c) / &g;
            self.set(r, c, v);
        }
    }

    /// Rank over the rationals via integer row elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m.cols {
            // pick the absolutely smallest nonzero pivot to limit growth
            let mut pivot: Option<usize> = None;
            for r in row..m.rows {
                if !m.get(r, col).is_zero() {
                    match pivot {
                        None => pivot = Some(r),
                        Some(p) => {
                            if m.get(r, col).abs() < m.get(p, col).abs() {
                                pivot = Some(r);
                            }
                        }
                    }
                }
            }
            let Some(p) = pivot else { continue };
            m.swap_rows(row, p);
            m.reduce_row_by_gcd(row);
            let pv = m.get(row, col).clone();
            for r in row + 1..m.rows {
                let v = m.get(r, col).clone();
                if v.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let new = m.get(r, c) * &pv - m.get(row, c) * &v;
                    m.set(r, c, new);
                }
                m.reduce_row_by_gcd(r);
            }
            rank += 1;
            row += 1;
            if row == m.rows {
                break;
            }
        }
        rank
    }

    /// Rank over the prime field F_p.
    pub fn rank_mod(&self, p: u64) -> usize {
        let cols = self.cols;
        let mut m: Vec<Vec<u64>> = (0..self.rows)
            .map(|r| (0..cols).map(|c| mod_p(self.get(r, c), p)).collect())
            .collect();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..cols {
            let Some(pivot) = (row..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(row, pivot);
            let inv = mod_inv(m[row][col], p);
            for c in col..cols {
                m[row][c] = mod_mul(m[row][c], inv, p);
            }
            for r in 0..m.len() {
                if r != row && m[r][col] != 0 {
                    let f = m[r][col];
                    for c in col..cols {
                        let sub = mod_mul(f, m[row][c], p);
                        m[r][c] = (m[r][c] + p - sub) % p;
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == m.len() {
                break;
            }
        }
        rank
    }

    /// Basis of the rational kernel {x : M x = 0}, returned as primitive
    /// integer vectors in a deterministic (reduced row echelon) form.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        let rows = self.rows;
        let cols = self.cols;
        let mut m: Vec<Vec<BigRational>> = (0..rows)
            .map(|r| {
                (0..cols)
                    .map(|c| BigRational::from(self.get(r, c).clone()))
                    .collect()
            })
            .collect();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let pv = m[row][col].clone();
            for c in col..cols {
                m[row][c] = &m[row][c] / &pv;
            }
            for r in 0..rows {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..cols {
                        let v = &m[r][c] - &f * &m[row][c];
                        m[r][c] = v;
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
            if row == rows {
                break;
            }
        }
        let pivot_set: std::collections::BTreeSet<usize> = pivot_cols.iter().copied().collect();
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !pivot_set.contains(c)) {
            let mut v = vec![BigRational::zero(); cols];
            v[free] = BigRational::one();
            for (i, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -m[i][free].clone();
            }
            basis.push(clear_denominators(&v));
        }
        basis
    }
}

fn mod_p(v: &BigInt, p: u64) -> u64 {
    let m = v.mod_floor(&BigInt::from(p));
    let (_, digits) = m.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat: p is prime and a != 0 mod p.
    mod_pow(a, p - 2, p)
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, p);
        }
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Scale a rational vector to a primitive integer vector with a
/// deterministic sign (first nonzero entry positive... kept as computed;
/// callers wanting a canonical sign normalize separately).
fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.iter().map(|x| x / &g).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_of_identity_and_singular() {
        assert_eq!(big(&[&[1, 0], &[0, 1]]).rank(), 2);
        assert_eq!(big(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(big(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(big(&[&[2, 3, 5], &[4, 6, 10], &[1, 1, 1]]).rank(), 2);
    }

    #[test]
    fn rank_mod_two_differs_from_rational_rank() {
        // det = 2: invertible over Q, singular over F_2
        let m = big(&[&[1, 1], &[1, -1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_mod(2), 1);
        assert_eq!(m.rank_mod(3), 2);
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let m = big(&[&[1, 2, 3]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            let s: BigInt = v[0].clone() + 2 * v[1].clone() + 3 * v[2].clone();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn kernel_of_full_rank_is_empty() {
        assert!(big(&[&[1, 0], &[0, 1]]).kernel_basis().is_empty());
        // empty matrix: kernel is the whole space
        let m = IntMatrix::zero(0, 3);
        assert_eq!(m.kernel_basis().len(), 3);
    }

    #[test]
    fn negative_entries_mod_p() {
        assert_eq!(mod_p(&BigInt::from(-1), 5), 4);
        assert_eq!(mod_p(&BigInt::from(-10), 5), 0);
    }
}
