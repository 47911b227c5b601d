//! Factorials, binomials and the index sets the closed-form routes sum over.

use num_bigint::BigInt;
use num_traits::One;

use super::Rational;

pub fn factorial(n: usize) -> Rational {
    Rational::from_integer(factorial_int(n))
}

pub(crate) fn factorial_int(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: usize, k: i64) -> Rational {
    if k < 0 || k as usize > n {
        return Rational::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    Rational::from_integer(acc)
}

/// `(Σ t_i)! / Π t_i!`.
pub fn multinomial(ts: &[usize]) -> Rational {
    let total: usize = ts.iter().sum();
    let denom = ts
        .iter()
        .fold(BigInt::one(), |acc, &t| acc * factorial_int(t));
    Rational::from_integer(factorial_int(total) / denom)
}

/// Pochhammer symbol `x (x+1) ⋯ (x+n-1)`; `(x)^(0) = 1`.
pub fn rising_factorial(x: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// An ordered tuple of parts with a fixed sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Lexicographic stream of compositions of `total` into exactly `length`
/// parts, each at least `min_part`.
#[derive(Clone, Debug)]
pub struct Compositions {
    current: Option<Vec<usize>>,
    min_part: usize,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let parts = self.current.take()?;
        let len = parts.len();
        // Advance: the rightmost non-final position with slack to its right
        // takes one unit; everything after it resets to the minimum.
        let mut suffix = parts[len - 1];
        let mut succ = None;
        for i in (0..len - 1).rev() {
            let right_len = len - 1 - i;
            if suffix > right_len * self.min_part {
                let mut next = parts.clone();
                next[i] += 1;
                let rest = suffix - 1 - (right_len - 1) * self.min_part;
                for p in next.iter_mut().take(len - 1).skip(i + 1) {
                    *p = self.min_part;
                }
                next[len - 1] = rest;
                succ = Some(next);
                break;
            }
            suffix += parts[i];
        }
        self.current = succ;
        Some(Composition { parts })
    }
}

pub fn compositions(total: usize, min_part: usize, length: usize) -> Compositions {
    let current = if length == 0 || min_part * length > total {
        None
    } else {
        let mut first = vec![min_part; length];
        first[length - 1] = total - (length - 1) * min_part;
        Some(first)
    };
    Compositions { current, min_part }
}

/// Compositions of `total` into positive parts, all lengths, shortest first.
pub fn compositions_all_lengths(total: usize) -> impl Iterator<Item = Composition> {
    (1..=total).flat_map(move |len| compositions(total, 1, len))
}

/// Multiplicity vector `t_1..t_m` of a partition of `m`: `Σ k·t_k = m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionMultiplicity {
    multiplicities: Vec<usize>,
}

impl PartitionMultiplicity {
    /// `t_1..t_m`; index 0 holds the count of parts equal to 1.
    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn order(&self) -> usize {
        self.multiplicities.len()
    }

    /// Number of parts, `t_1 + ⋯ + t_m`.
    pub fn part_count(&self) -> usize {
        self.multiplicities.iter().sum()
    }
}

/// All partitions of `m`, largest `t_1` first, then largest `t_2`, and so on.
pub fn partition_multiplicities(m: usize) -> impl Iterator<Item = PartitionMultiplicity> {
    let mut out = Vec::new();
    if m > 0 {
        let mut ts = vec![0; m];
        fill_partitions(m, 1, &mut ts, &mut out);
    }
    out.into_iter()
}

fn fill_partitions(
    remaining: usize,
    part: usize,
    ts: &mut Vec<usize>,
    out: &mut Vec<PartitionMultiplicity>,
) {
    if remaining == 0 {
        out.push(PartitionMultiplicity {
            multiplicities: ts.clone(),
        });
        return;
    }
    if part > ts.len() {
        return;
    }
    for count in (0..=remaining / part).rev() {
        ts[part - 1] = count;
        fill_partitions(remaining - count * part, part + 1, ts, out);
    }
    ts[part - 1] = 0;
}

/// `Σ w[i_1] ⋯ w[i_len]` over compositions `i_1 + ⋯ + i_len = total` with
/// parts `>= min_part`, evaluated by repeated truncated convolution. Equal
/// to enumerating [`compositions`] and summing products, without the
/// combinatorial blow-up when zero parts are allowed.
pub fn composition_product_sum(
    weights: &[Rational],
    total: usize,
    min_part: usize,
    length: usize,
) -> Rational {
    convolution_powers(weights, total, min_part, length)
        .pop()
        .unwrap_or_else(Rational::zero)
}

/// `[x^total] W(x)^r` for `r = 0..=max_len`, where `W = Σ_{i >= min_part} w[i] x^i`.
pub fn convolution_powers(
    weights: &[Rational],
    total: usize,
    min_part: usize,
    max_len: usize,
) -> Vec<Rational> {
    let weight = |i: usize| -> Rational {
        if i < min_part {
            Rational::zero()
        } else {
            weights.get(i).cloned().unwrap_or_else(Rational::zero)
        }
    };
    let w: Vec<Rational> = (0..=total).map(weight).collect();
    let mut power = vec![Rational::zero(); total + 1];
    power[0] = Rational::one();
    let mut out = Vec::with_capacity(max_len + 1);
    out.push(power[total].clone());
    for _ in 0..max_len {
        let mut next = vec![Rational::zero(); total + 1];
        for (a, pa) in power.iter().enumerate() {
            if pa.is_zero() {
                continue;
            }
            for (b, wb) in w.iter().enumerate().take(total + 1 - a) {
                if !wb.is_zero() {
                    next[a + b] += pa * wb;
                }
            }
        }
        power = next;
        out.push(power[total].clone());
    }
    out
}
