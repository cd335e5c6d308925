use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

/// Dense integer matrix with arbitrary-precision entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self, AlgebraError> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(AlgebraError::BadMatrixShape {
                    rows: rows.len(),
                    cols,
                    got: rows.iter().map(|r| r.len()).sum(),
                });
            }
            entries.extend(r.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix { rows: rows.len(), cols, entries })
    }

    pub fn from_diagonal(diag: &[i64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, BigInt::from(d));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn push_row<T: Into<BigInt> + Clone>(&mut self, row: &[T]) -> Result<(), AlgebraError> {
        if self.rows > 0 && row.len() != self.cols {
            return Err(AlgebraError::BadMatrixShape {
                rows: self.rows + 1,
                cols: self.cols,
                got: self.entries.len() + row.len(),
            });
        }
        if self.rows == 0 {
            self.cols = row.len();
        }
        self.entries.extend(row.iter().cloned().map(Into::into));
        self.rows += 1;
        Ok(())
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::BadMatrixShape { rows: other.rows, cols: other.cols, got: self.cols });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.entries.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.entries.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[target] -= k * row[source]
    fn sub_row(&mut self, target: usize, source: usize, k: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(target, c) - k * self.get(source, c);
            self.set(target, c, v);
        }
    }

    /// col[target] -= k * col[source]
    fn sub_col(&mut self, target: usize, source: usize, k: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, target) - k * self.get(r, source);
            self.set(r, target, v);
        }
    }
}

/// Smith normal form of a relation matrix.
///
/// Rows are relations and columns generators, so the presented group is
/// `ℤ^cols / rowspace ≅ ℤ^(cols − rank) ⊕ ⊕ ℤ/d_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Non-zero diagonal entries `d₁ | d₂ | … | d_rank`, all positive.
    pub invariants: Vec<BigInt>,
    pub rank: usize,
    pub cokernel_free_rank: usize,
}

impl SmithForm {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariants.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let mut m = a.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = smallest_entry(&m, (t..rows).flat_map(|r| (t..cols).map(move |c| (r, c)))) else {
            break;
        };
        m.swap_rows(t, pr);
        m.swap_cols(t, pc);

        loop {
            // smallest entry of row t and column t becomes the pivot
            let line = (t..rows).map(|r| (r, t)).chain((t + 1..cols).map(|c| (t, c)));
            let (pr, pc) = smallest_entry(&m, line).expect("pivot position is non-zero");
            m.swap_rows(t, pr);
            m.swap_cols(t, pc);
            let p = m.get(t, t).clone();
            let mut clean = true;
            for r in t + 1..rows {
                if !m.get(r, t).is_zero() {
                    let q = nearest_quotient(m.get(r, t), &p);
                    m.sub_row(r, t, &q);
                    clean &= m.get(r, t).is_zero();
                }
            }
            for c in t + 1..cols {
                if !m.get(t, c).is_zero() {
                    let q = nearest_quotient(m.get(t, c), &p);
                    m.sub_col(c, t, &q);
                    clean &= m.get(t, c).is_zero();
                }
            }
            if !clean {
                continue;
            }
            // divisibility of the remaining block by the pivot
            let offender = (t + 1..rows)
                .find(|&r| (t + 1..cols).any(|c| !m.get(r, c).is_multiple_of(&p)));
            match offender {
                Some(r) => {
                    for c in t + 1..cols {
                        let v = m.get(t, c) + m.get(r, c);
                        m.set(t, c, v);
                    }
                }
                None => break,
            }
        }
        if m.get(t, t).is_negative() {
            let v = -m.get(t, t);
            m.set(t, t, v);
        }
        t += 1;
    }
    let invariants: Vec<BigInt> = (0..t).map(|i| m.get(i, i).clone()).collect();
    SmithForm { rank: invariants.len(), cokernel_free_rank: cols - invariants.len(), invariants }
}

fn smallest_entry(m: &IntMatrix, positions: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
    positions
        .filter(|&(r, c)| !m.get(r, c).is_zero())
        .min_by(|&(r1, c1), &(r2, c2)| m.get(r1, c1).abs().cmp(&m.get(r2, c2).abs()))
}

/// `x / p` rounded to a nearest integer, so the remainder has magnitude at
/// most `|p| / 2`.
fn nearest_quotient(x: &BigInt, p: &BigInt) -> BigInt {
    let (q, r) = x.div_mod_floor(p);
    let twice: BigInt = r.abs() * 2;
    if twice > p.abs() {
        // r and p share a sign, so r − p is the smaller remainder
        q + 1
    } else {
        q
    }
}
