//! Small square integer matrices and the standard symplectic pairing.
//!
//! Everything here works with `i128` entries; the matrices are at most 8x8
//! with entries bounded by small prime powers, so there is plenty of
//! headroom, and the Smith reduction checks its arithmetic anyway.

use std::fmt;

/// Row-major square matrix.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Matrix {
    size: usize,
    data: Vec<i128>,
}

impl Matrix {
    pub fn zero(size: usize) -> Matrix {
        Matrix {
            size,
            data: vec![0; size * size],
        }
    }

    pub fn identity(size: usize) -> Matrix {
        let mut m = Matrix::zero(size);
        for i in 0..size {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[&[i128]]) -> Matrix {
        let size = rows.len();
        assert!(rows.iter().all(|r| r.len() == size), "matrix must be square");
        Matrix {
            size,
            data: rows.iter().flat_map(|r| r.iter().copied()).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> i128 {
        self.data[row * self.size + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: i128) {
        self.data[row * self.size + col] = value;
    }

    pub fn row(&self, row: usize) -> &[i128] {
        &self.data[row * self.size..(row + 1) * self.size]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.size);
        for r in 0..self.size {
            for c in 0..self.size {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.size, rhs.size);
        let mut out = Matrix::zero(self.size);
        for r in 0..self.size {
            for c in 0..self.size {
                let mut acc: i128 = 0;
                for k in 0..self.size {
                    acc += self.get(r, k) * rhs.get(k, c);
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.size).all(|r| (0..r).all(|c| self.get(r, c) == 0))
    }

    pub fn diagonal_product(&self) -> i128 {
        (0..self.size).map(|i| self.get(i, i)).product()
    }

    /// The symplectic pairing of two rows, `sum over i of
    /// u_i v_{n+i} - u_{n+i} v_i` where `n` is half the size.
    pub fn symplectic_pairing(&self, row_a: usize, row_b: usize) -> i128 {
        let n = self.size / 2;
        let u = self.row(row_a);
        let v = self.row(row_b);
        (0..n).map(|i| u[i] * v[n + i] - u[n + i] * v[i]).sum()
    }

    /// Whether this matrix satisfies `M J tM = mu J` for some `mu > 0`, the
    /// defining property of a symplectic similitude (with respect to rows).
    pub fn similitude_multiplier(&self) -> Option<i128> {
        let n = self.size / 2;
        if self.size % 2 != 0 {
            return None;
        }
        let mu = self.symplectic_pairing(0, n);
        if mu <= 0 {
            return None;
        }
        for a in 0..self.size {
            for b in 0..self.size {
                let expected = if b == a + n {
                    mu
                } else if a == b + n {
                    -mu
                } else {
                    0
                };
                if self.symplectic_pairing(a, b) != expected {
                    return None;
                }
            }
        }
        Some(mu)
    }

    /// Whether this is a reduced representative of a similitude coset: upper
    /// triangular with prime-power diagonal multiplying to `p^(n*delta)`,
    /// column entries reduced modulo the diagonal, and every row pairing
    /// divisible by `p^delta`.
    pub fn is_similitude_hnf_rep(&self, genus: usize, p: i128, delta: u32) -> bool {
        let modulus = p.pow(delta);
        if self.size != 2 * genus || !self.is_upper_triangular() {
            return false;
        }
        for c in 0..self.size {
            let d = self.get(c, c);
            if d <= 0 || !is_power_of(d, p) {
                return false;
            }
            for r in 0..c {
                let e = self.get(r, c);
                if e < 0 || e >= d {
                    return false;
                }
            }
        }
        if self.diagonal_product() != p.pow(genus as u32 * delta) {
            return false;
        }
        (0..self.size).all(|a| {
            (a + 1..self.size).all(|b| self.symplectic_pairing(a, b) % modulus == 0)
        })
    }

    /// One line, entries row-major separated by single spaces.
    pub fn dump_line(&self) -> String {
        self.data
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn is_power_of(mut value: i128, p: i128) -> bool {
    while value % p == 0 {
        value /= p;
    }
    value == 1
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.size {
            if r > 0 {
                writeln!(f)?;
            }
            write!(
                f,
                "[{}]",
                self.row(r)
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )?;
        }
        Ok(())
    }
}
