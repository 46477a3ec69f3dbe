//! Reduced Burau representation over `Z[t, t^-1]`.

use num_traits::{One, Zero};

use super::laurent::{Coefficient, LaurentPolynomial};
use super::BraidWord;

/// Square matrix with Laurent polynomial entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix<C: Coefficient> {
    dim: usize,
    entries: Vec<LaurentPolynomial<C>>,
}

impl<C: Coefficient> LaurentMatrix<C> {
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, LaurentPolynomial::one());
        }
        m
    }

    pub fn zeros(dim: usize) -> Self {
        LaurentMatrix {
            dim,
            entries: vec![LaurentPolynomial::zero(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPolynomial<C> {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: LaurentPolynomial<C>) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let sum = out.get(i, j) + &(a * b);
                    out.set(i, j, sum);
                }
            }
        }
        out
    }

    pub fn sub_identity(&self) -> Self {
        let mut m = self.clone();
        for i in 0..self.dim {
            let v = m.get(i, i) - &LaurentPolynomial::one();
            m.set(i, i, v);
        }
        m
    }

    /// Determinant by fraction-free (Bareiss) elimination; every division is exact.
    pub fn determinant(&self) -> LaurentPolynomial<C> {
        let n = self.dim;
        if n == 0 {
            return LaurentPolynomial::one();
        }
        let mut a = self.entries.clone();
        let idx = |r: usize, c: usize| r * n + c;
        let mut sign_flip = false;
        let mut prev = LaurentPolynomial::<C>::one();
        for k in 0..n - 1 {
            if a[idx(k, k)].is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !a[idx(r, k)].is_zero()) else {
                    return LaurentPolynomial::zero();
                };
                for c in 0..n {
                    a.swap(idx(k, c), idx(swap, c));
                }
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[idx(i, j)] * &a[idx(k, k)]) - &(&a[idx(i, k)] * &a[idx(k, j)]);
                    a[idx(i, j)] = num.div_exact(&prev).expect("Bareiss step divides exactly");
                }
                a[idx(i, k)] = LaurentPolynomial::zero();
            }
            prev = a[idx(k, k)].clone();
        }
        let det = a[idx(n - 1, n - 1)].clone();
        if sign_flip {
            -det
        } else {
            det
        }
    }
}

/// Image of `sigma_k^{+-1}` (1-based `k`) in the `(strands - 1)`-dimensional reduced Burau representation.
///
/// `sigma_k` fills rows `k-2..=k` around the diagonal entry `(k-1, k-1) = -t`:
/// `(k-2, k-2) = 1`, `(k-2, k-1) = t`, `(k, k-1) = 1`, `(k, k) = 1`, clipped to the matrix.
/// The inverse uses `1, 1, -t^-1, t^-1, 1` in the same slots.
pub fn generator_matrix<C: Coefficient>(strands: usize, letter: i64) -> LaurentMatrix<C> {
    let dim = strands - 1;
    let k = letter.unsigned_abs() as usize;
    debug_assert!(k >= 1 && k < strands);
    let mut m = LaurentMatrix::identity(dim);
    let one = LaurentPolynomial::<C>::one();
    let t = LaurentPolynomial::<C>::t();
    let t_inv = LaurentPolynomial::monomial(C::one(), -1);
    let mid = k - 1;
    let (upper_right, diag, lower_left) = if letter > 0 {
        (t.clone(), -&t, one.clone())
    } else {
        (one.clone(), -&t_inv, t_inv.clone())
    };
    m.set(mid, mid, diag);
    if mid >= 1 {
        m.set(mid - 1, mid, upper_right);
    }
    if mid + 1 < dim {
        m.set(mid + 1, mid, lower_left);
    }
    m
}

/// Product of generator matrices, left to right.
pub fn reduced_burau<C: Coefficient>(braid: &BraidWord) -> LaurentMatrix<C> {
    let dim = braid.strands() - 1;
    braid.letters().iter().fold(LaurentMatrix::identity(dim), |acc, &l| {
        acc.mul(&generator_matrix(braid.strands(), l))
    })
}
