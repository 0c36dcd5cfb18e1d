use super::{Field, PolyError};

/// Dense square matrix over a field, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<C> {
    n: usize,
    data: Vec<C>,
}

impl<C: Field> Matrix<C> {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![C::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = C::one();
        }
        Matrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Result<Self, PolyError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(PolyError::DimensionMismatch {
                expected: n,
                found: rows.iter().map(Vec::len).find(|&l| l != n).unwrap_or(0),
            });
        }
        Ok(Matrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, PolyError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| C::from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[C] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn mul(&self, other: &Matrix<C>) -> Result<Matrix<C>, PolyError> {
        if self.n != other.n {
            return Err(PolyError::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = C::zero();
                for k in 0..n {
                    acc = acc + self.get(i, k).clone() * other.get(k, j).clone();
                }
                data.push(acc);
            }
        }
        Ok(Matrix { n, data })
    }

    pub fn determinant(&self) -> C {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = C::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return C::zero();
            };
            if pivot != col {
                for k in 0..n {
                    a.swap(pivot * n + k, col * n + k);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det = det * p.clone();
            let pinv = p.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                let factor = a[r * n + col].clone() * pinv.clone();
                if factor.is_zero() {
                    continue;
                }
                for k in col..n {
                    let v = a[r * n + k].clone() - factor.clone() * a[col * n + k].clone();
                    a[r * n + k] = v;
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        !self.determinant().is_zero()
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Matrix<C>, PolyError> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut inv = Matrix::<C>::identity(n).data;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r * n + col].is_zero())
                .ok_or(PolyError::SingularMatrix)?;
            if pivot != col {
                for k in 0..n {
                    a.swap(pivot * n + k, col * n + k);
                    inv.swap(pivot * n + k, col * n + k);
                }
            }
            let pinv = a[col * n + col].inv().expect("pivot is nonzero");
            for k in 0..n {
                a[col * n + k] = a[col * n + k].clone() * pinv.clone();
                inv[col * n + k] = inv[col * n + k].clone() * pinv.clone();
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let factor = a[r * n + col].clone();
                for k in 0..n {
                    a[r * n + k] = a[r * n + k].clone() - factor.clone() * a[col * n + k].clone();
                    inv[r * n + k] =
                        inv[r * n + k].clone() - factor.clone() * inv[col * n + k].clone();
                }
            }
        }
        Ok(Matrix { n, data: inv })
    }
}
