//! Toeplitz lower-Hessenberg determinants, the Trudi expansion, and the
//! determinant-duality inverse of unit lower-triangular Toeplitz matrices.
//!
//! A [`HessenbergSpec`] with first column `a_1..a_m` is the `m × m` matrix
//! whose `(i, j)` entry is `a_{i-j+1}` for `i >= j`, with a constant on the
//! superdiagonal (1 unless set) and zeros above it. Its determinant obeys
//! `D_0 = 1`, `D_m = Σ_{k=1}^m (-s)^{k-1} a_k D_{m-k}` where `s` is the
//! superdiagonal constant.

use crate::exact::{multinomial, partition_multiplicities, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessenbergSpec {
    entries: Vec<Rational>,
    superdiagonal: Rational,
}

impl HessenbergSpec {
    /// Panics on an empty column.
    pub fn new(entries: Vec<Rational>) -> Self {
        assert!(!entries.is_empty(), "Hessenberg matrix needs m >= 1");
        HessenbergSpec {
            entries,
            superdiagonal: Rational::one(),
        }
    }

    pub fn with_superdiagonal(mut self, value: Rational) -> Self {
        self.superdiagonal = value;
        self
    }

    pub fn from_fn(m: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Self::new((1..=m).map(f).collect())
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn superdiagonal(&self) -> &Rational {
        &self.superdiagonal
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let m = self.dim();
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        if i >= j {
                            self.entries[i - j].clone()
                        } else if j == i + 1 {
                            self.superdiagonal.clone()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

/// Leading principal minors `D_0..=D_m`.
pub fn hessenberg_minors(spec: &HessenbergSpec) -> Vec<Rational> {
    let neg_s = -spec.superdiagonal();
    let mut d: Vec<Rational> = Vec::with_capacity(spec.dim() + 1);
    d.push(Rational::one());
    for m in 1..=spec.dim() {
        let mut acc = Rational::zero();
        let mut coeff = Rational::one();
        for k in 1..=m {
            if !spec.entries[k - 1].is_zero() {
                acc += &coeff * &spec.entries[k - 1] * &d[m - k];
            }
            coeff *= &neg_s;
        }
        d.push(acc);
    }
    d
}

/// Determinant in `O(m²)` rational operations.
pub fn hessenberg_det(spec: &HessenbergSpec) -> Rational {
    hessenberg_minors(spec).pop().expect("m >= 1")
}

/// Trudi's expansion
/// `Σ_{t_1 + 2t_2 + ⋯ + m t_m = m} (Σt)!/Πt_k! · (-a_0)^{m - Σt} · Π a_k^{t_k}`
/// of the Hessenberg determinant with first column `a_1..a_m` and
/// superdiagonal `a_0`. Brioschi's formula is the case `a_0 = 1`.
pub fn trudi_expand(entries: &[Rational], a0: &Rational) -> Rational {
    let m = entries.len();
    assert!(m >= 1, "Trudi expansion needs m >= 1");
    let neg_a0 = -a0;
    partition_multiplicities(m)
        .map(|t| {
            let ts = t.multiplicities();
            let mut term = multinomial(ts) * neg_a0.pow((m - t.part_count()) as u32);
            for (a, &tk) in entries.iter().zip(ts) {
                if tk > 0 {
                    term *= a.pow(tk as u32);
                }
            }
            term
        })
        .sum()
}

/// Unit lower-triangular Toeplitz data `α_1..α_n` below a unit diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitLowerToeplitz {
    column: Vec<Rational>,
}

impl UnitLowerToeplitz {
    pub fn new(column: Vec<Rational>) -> Self {
        UnitLowerToeplitz { column }
    }

    /// `α_1..α_n`; `α_0 = 1` is implicit.
    pub fn column(&self) -> &[Rational] {
        &self.column
    }

    pub fn len(&self) -> usize {
        self.column.len()
    }

    pub fn is_empty(&self) -> bool {
        self.column.is_empty()
    }

    /// `α_k` with `α_0 = 1`.
    pub fn get(&self, k: usize) -> Rational {
        if k == 0 {
            Rational::one()
        } else {
            self.column[k - 1].clone()
        }
    }

    /// The `(n+1) × (n+1)` matrix with entry `α_{i-j}` at `i >= j`.
    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        self.dense_with(|k| self.get(k))
    }

    /// The matrix with entry `(-1)^{i-j} α_{i-j}` at `i >= j`.
    pub fn to_dense_alternating(&self) -> Vec<Vec<Rational>> {
        self.dense_with(|k| Rational::sign_power(k) * self.get(k))
    }

    fn dense_with(&self, entry: impl Fn(usize) -> Rational) -> Vec<Vec<Rational>> {
        let n = self.len() + 1;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i >= j {
                            entry(i - j)
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Flip the sign of every odd-indexed entry.
    pub fn alternate(&self) -> Self {
        UnitLowerToeplitz::new(
            self.column
                .iter()
                .enumerate()
                .map(|(i, a)| Rational::sign_power(i + 1) * a)
                .collect(),
        )
    }
}

/// The dual column `R(1)..R(n)` defined by
/// `Σ_{k=0}^n (-1)^{n-k} α_k R(n-k) = 0` (`n >= 1`, `α_0 = R(0) = 1`),
/// computed by forward substitution.
///
/// `R(n)` is the Hessenberg determinant of `α_1..α_n` and vice versa, the
/// map is an involution, and `R` is the first column of the inverse of the
/// matrix with column `(-1)^k α_k` (see [`UnitLowerToeplitz::to_dense_alternating`]).
pub fn toeplitz_inverse(a: &UnitLowerToeplitz) -> UnitLowerToeplitz {
    let n = a.len();
    let mut r: Vec<Rational> = Vec::with_capacity(n + 1);
    r.push(Rational::one());
    for m in 1..=n {
        let mut acc = Rational::zero();
        for k in 1..=m {
            let alpha = &a.column[k - 1];
            if !alpha.is_zero() {
                let term = alpha * &r[m - k];
                if k % 2 == 1 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
        }
        r.push(acc);
    }
    r.remove(0);
    UnitLowerToeplitz::new(r)
}

/// First column of the ordinary matrix inverse, from
/// `Σ_{k=0}^n α_k R(n-k) = 0`. Equivalent to a series reciprocal.
pub fn toeplitz_plain_inverse(a: &UnitLowerToeplitz) -> UnitLowerToeplitz {
    toeplitz_inverse(&a.alternate())
}

/// Dense reference routines for cross-checking the structured algorithms.
pub mod dense {
    use crate::exact::Rational;

    pub type Matrix = Vec<Vec<Rational>>;

    /// Bareiss fraction-free elimination with row pivoting.
    pub fn det_bareiss(matrix: &Matrix) -> Rational {
        let n = matrix.len();
        if n == 0 {
            return Rational::one();
        }
        let mut a = matrix.clone();
        let mut sign = Rational::one();
        let mut prev = Rational::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        sign = -sign;
                    }
                    None => return Rational::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
        let n = a.len();
        let p = b[0].len();
        (0..n)
            .map(|i| {
                (0..p)
                    .map(|j| (0..b.len()).map(|k| &a[i][k] * &b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    pub fn identity(n: usize) -> Matrix {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    }
}
