//! Exact integer matrices and polynomials.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    pub rows: Vec<Vec<i64>>,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Self {
        Self { rows }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: (0..n)
                .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
                .collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            rows: vec![vec![0; n]; n],
        }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        Self {
            rows: (0..n)
                .map(|i| (0..n).map(|j| self.rows[j][i]).collect())
                .collect(),
        }
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        let n = self.size();
        let mut rows = vec![vec![0; n]; n];
        for i in 0..n {
            for k in 0..n {
                let a = self.rows[i][k];
                if a != 0 {
                    for j in 0..n {
                        rows[i][j] += a * o.rows[k][j];
                    }
                }
            }
        }
        IntMatrix { rows }
    }

    /// Characteristic polynomial `det(tI - A)` by Berkowitz's algorithm,
    /// which uses no division.
    pub fn charpoly(&self) -> IntPolynomial {
        let n = self.size();
        let a = &self.rows;
        // descending coefficients
        let mut c: Vec<i64> = vec![1];
        for r in 0..n {
            // leading block is r x r; new row/column index r
            let mut col = vec![1i64, -a[r][r]];
            // v = S, then A_r v, A_r^2 v, ...
            let mut v: Vec<i64> = (0..r).map(|i| a[i][r]).collect();
            for _ in 0..r {
                let rv: i64 = (0..r).map(|j| a[r][j] * v[j]).sum();
                col.push(-rv);
                v = (0..r)
                    .map(|i| (0..r).map(|j| a[i][j] * v[j]).sum())
                    .collect();
            }
            // Toeplitz (r + 2) x (r + 1) times c
            let mut next = vec![0i64; r + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, &cj) in c.iter().enumerate() {
                    if i >= j {
                        *slot += col[i - j] * cj;
                    }
                }
            }
            c = next;
        }
        c.reverse();
        IntPolynomial::new(c)
    }

    pub fn det(&self) -> i64 {
        let c0 = self.charpoly().coeffs.first().copied().unwrap_or(0);
        if self.size() % 2 == 0 {
            c0
        } else {
            -c0
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let s: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", s.join(" "))?;
        }
        Ok(())
    }
}

/// Integer polynomial with ascending coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    pub coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Strips factors of `t` and makes the lowest coefficient positive.
    pub fn normalized(&self) -> Self {
        let lo = self.coeffs.iter().position(|&c| c != 0).unwrap_or(0);
        let mut c = self.coeffs[lo..].to_vec();
        if c.first().is_some_and(|&x| x < 0) {
            c.iter_mut().for_each(|x| *x = -*x);
        }
        Self::new(c)
    }

    /// Equality up to multiplication by `±t^k`.
    pub fn equivalent(&self, o: &IntPolynomial) -> Result<bool> {
        let (a, b) = (self.normalized(), o.normalized());
        if a.degree() != b.degree() {
            return Err(Error::DegreeMismatch(a.degree(), b.degree()));
        }
        Ok(a == b)
    }

    /// Coefficients read the same backwards, up to an overall sign.
    pub fn is_palindromic(&self) -> bool {
        let c = &self.normalized().coeffs;
        let r: Vec<i64> = c.iter().rev().copied().collect();
        *c == r || c.iter().zip(&r).all(|(x, y)| *x == -*y)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let coeffs = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Error::Invalid(format!("bad coefficient `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if coeffs.is_empty() {
            return Err(Error::Invalid("empty polynomial".into()));
        }
        Ok(Self::new(coeffs))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Cofactor expansion, for cross-checking.
    fn det_slow(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det_slow(&minor)
            })
            .sum()
    }

    #[test]
    fn charpoly_of_small_matrices() {
        let m = IntMatrix::new(vec![vec![0, -1], vec![1, 1]]);
        assert_eq!(m.charpoly().coeffs, [1, -1, 1]);
        assert_eq!(IntMatrix::identity(3).charpoly().coeffs, [-1, 3, -3, 1]);
    }

    #[test]
    fn equivalence_up_to_units() {
        let p = IntPolynomial::new(vec![0, -1, 1, -1]);
        let q = IntPolynomial::new(vec![1, -1, 1]);
        assert!(p.equivalent(&q).unwrap());
        assert!(matches!(
            p.equivalent(&IntPolynomial::new(vec![1, 1])),
            Err(Error::DegreeMismatch(2, 1))
        ));
    }

    proptest! {
        #[test]
        fn det_matches_cofactor_expansion(v in proptest::collection::vec(-3i64..4, 16)) {
            let rows: Vec<Vec<i64>> = v.chunks(4).map(|c| c.to_vec()).collect();
            let m = IntMatrix::new(rows.clone());
            prop_assert_eq!(m.det(), det_slow(&rows));
            // Cayley-Hamilton in the trace: coefficient of t^3 is -trace
            let tr: i64 = (0..4).map(|i| rows[i][i]).sum();
            prop_assert_eq!(m.charpoly().coeffs[3], -tr);
        }
    }
}
