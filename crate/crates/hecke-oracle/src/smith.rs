//! Smith normal form over the integers, used to sort coset representatives
//! into double-coset classes by their elementary divisor chain.

use std::fmt;

use crate::error::OracleError;
use crate::matrix::Matrix;

/// Elementary divisors of an integer matrix, each dividing the next.
pub fn smith_diagonal(mat: &Matrix) -> Vec<i128> {
    let n = mat.size();
    let mut a: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| mat.get(i, j)).collect())
        .collect();
    for k in 0..n {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut piv: Option<(usize, usize)> = None;
            for i in k..n {
                for j in k..n {
                    if a[i][j] != 0
                        && piv.map_or(true, |(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                    {
                        piv = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = piv else { break };
            a.swap(k, pi);
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
            let mut cleared = true;
            for i in k + 1..n {
                let q = a[i][k] / a[k][k];
                if q != 0 {
                    for j in k..n {
                        a[i][j] -= q * a[k][j];
                    }
                }
                if a[i][k] != 0 {
                    cleared = false;
                }
            }
            for j in k + 1..n {
                let q = a[k][j] / a[k][k];
                if q != 0 {
                    for i in k..n {
                        a[i][j] -= q * a[i][k];
                    }
                }
                if a[k][j] != 0 {
                    cleared = false;
                }
            }
            if !cleared {
                continue;
            }
            // Pivot must divide the rest of the block; fold in an offending
            // row and keep reducing if it does not.
            let pivot = a[k][k];
            let offender = (k + 1..n).find(|&i| {
                (k + 1..n).any(|j| a[i][j] % pivot != 0)
            });
            match offender {
                Some(i) => {
                    for j in k..n {
                        a[k][j] += a[i][j];
                    }
                }
                None => break,
            }
        }
    }
    (0..n).map(|k| a[k][k].abs()).collect()
}

/// Elementary divisor chain of a similitude coset representative. The
/// divisors pair up around the similitude norm: `d_i * d_(2n+1-i) = p^delta`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct DivisorChain {
    divisors: Vec<i128>,
}

impl DivisorChain {
    /// Classifies `mat`, checking that its divisors are powers of `p` with
    /// the complementary pairing a similitude of norm `p^delta` must show.
    pub fn classify(mat: &Matrix, p: i128, delta: u32) -> Result<DivisorChain, OracleError> {
        let divisors = smith_diagonal(mat);
        let m = divisors.len();
        let norm = p.checked_pow(delta).ok_or(OracleError::Overflow("p^delta"))?;
        for (i, &d) in divisors.iter().enumerate() {
            let mut r = d;
            while r % p == 0 {
                r /= p;
            }
            if r != 1 {
                return Err(OracleError::InvalidChain(format!(
                    "divisor {d} is not a power of {p}"
                )));
            }
            if i + 1 < m && divisors[i + 1] % d != 0 {
                return Err(OracleError::InvalidChain(format!(
                    "divisor {d} does not divide its successor {}",
                    divisors[i + 1]
                )));
            }
        }
        for i in 0..m / 2 {
            let prod = divisors[i] * divisors[m - 1 - i];
            if prod != norm {
                return Err(OracleError::InvalidChain(format!(
                    "divisors {} and {} multiply to {prod}, expected {norm}",
                    divisors[i],
                    divisors[m - 1 - i]
                )));
            }
        }
        Ok(DivisorChain { divisors })
    }

    pub fn divisors(&self) -> &[i128] {
        &self.divisors
    }
}

impl fmt::Display for DivisorChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.divisors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}
