//! Expansions of Hasse–Teichmüller derivatives of products and reciprocals
//! in terms of the derivatives of the factors.

use super::TruncatedSeries;
use crate::error::Result;
use crate::exact::{binomial, Rational};

/// `H^{(0)}(f), …, H^{(n)}(f)`.
fn ladder(f: &TruncatedSeries, n: usize) -> Vec<TruncatedSeries> {
    (0..=n).map(|i| f.hasse_teichmuller(i)).collect()
}

/// `Σ_{i_1+⋯+i_k=n} H^{(i_1)}(f_1)⋯H^{(i_k)}(f_k)` over parts `>= 0`.
pub fn product_rule_sum(factors: &[TruncatedSeries], n: usize) -> TruncatedSeries {
    let order = factors
        .iter()
        .map(TruncatedSeries::order)
        .min()
        .unwrap_or(0)
        - n;
    let ladders: Vec<Vec<TruncatedSeries>> = factors.iter().map(|f| ladder(f, n)).collect();
    let refs: Vec<&[TruncatedSeries]> = ladders.iter().map(Vec::as_slice).collect();
    split_sums(&refs, n, order)[n].clone()
}

/// `Σ_{k=1}^n (-1)^k f^{-k-1} Σ_{i_1+⋯+i_k=n, i_j >= 1} Π H^{(i_j)}(f)`.
pub fn quotient_rule_compositions(f: &TruncatedSeries, n: usize) -> Result<TruncatedSeries> {
    quotient_rule(f, n, 1, |_| Rational::one())
}

/// `Σ_{k=1}^n C(n+1, k+1) (-1)^k f^{-k-1} Σ_{i_1+⋯+i_k=n, i_j >= 0} Π H^{(i_j)}(f)`.
pub fn quotient_rule_binomial(f: &TruncatedSeries, n: usize) -> Result<TruncatedSeries> {
    quotient_rule(f, n, 0, |k| binomial(n + 1, k as i64 + 1))
}

/// Entry `j` is `Σ Π_t d_t[i_t]` over `i_1+⋯+i_k = j`, accumulated one
/// factor at a time.
fn split_sums(ladders: &[&[TruncatedSeries]], n: usize, order: usize) -> Vec<TruncatedSeries> {
    let mut acc = vec![TruncatedSeries::zero(order); n + 1];
    acc[0] = TruncatedSeries::one(order);
    for d in ladders {
        let mut next = vec![TruncatedSeries::zero(order); n + 1];
        for (j, slot) in next.iter_mut().enumerate() {
            for i in 0..=j {
                if !acc[j - i].is_zero() {
                    *slot = slot.add(&acc[j - i].mul(&d[i]));
                }
            }
        }
        acc = next;
    }
    acc
}

fn quotient_rule(
    f: &TruncatedSeries,
    n: usize,
    min_part: usize,
    weight: impl Fn(usize) -> Rational,
) -> Result<TruncatedSeries> {
    let inv = f.reciprocal()?;
    let derivs = ladder(f, n);
    let order = f.order() - n;
    let mut acc = TruncatedSeries::zero(order);
    let mut inv_pow = inv.clone();
    // sums[j]: the k-part composition sum with total j
    let mut sums = vec![TruncatedSeries::zero(order); n + 1];
    sums[0] = TruncatedSeries::one(order);
    for k in 1..=n {
        inv_pow = inv_pow.mul(&inv);
        sums = (0..=n)
            .map(|j| {
                (min_part..=j).fold(TruncatedSeries::zero(order), |s, i| {
                    s.add(&sums[j - i].mul(&derivs[i]))
                })
            })
            .collect();
        let w = weight(k) * Rational::sign_power(k);
        acc = acc.add(&inv_pow.mul(&sums[n]).scale(&w));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::compositions;

    fn poly(cs: &[i64], order: usize) -> TruncatedSeries {
        TruncatedSeries::from_fn(order, |k| {
            cs.get(k).map_or(Rational::zero(), |&c| Rational::from(c))
        })
    }

    #[test]
    fn product_rule_two_factors() {
        let f = poly(&[1, 2, 0, 3], 10);
        let g = poly(&[2, -1, 1], 10);
        for n in 0..=5 {
            let lhs = f.mul(&g).hasse_teichmuller(n);
            assert_eq!(product_rule_sum(&[f.clone(), g.clone()], n), lhs);
        }
    }

    /// The quotient rules summed term by term over enumerated compositions.
    fn quotient_by_enumeration(f: &TruncatedSeries, n: usize, min_part: usize) -> TruncatedSeries {
        let inv = f.reciprocal().unwrap();
        let order = f.order() - n;
        let mut acc = TruncatedSeries::zero(order);
        for k in 1..=n {
            let mut inner = TruncatedSeries::zero(order);
            for comp in compositions(n, min_part, k) {
                let term = comp
                    .parts()
                    .iter()
                    .fold(TruncatedSeries::one(order), |t, &i| {
                        t.mul(&f.hasse_teichmuller(i))
                    });
                inner = inner.add(&term);
            }
            let w = if min_part == 0 {
                binomial(n + 1, k as i64 + 1)
            } else {
                Rational::one()
            };
            acc = acc.add(
                &inv.pow(k as u32 + 1)
                    .mul(&inner)
                    .scale(&(w * Rational::sign_power(k))),
            );
        }
        acc
    }

    #[test]
    fn convolution_matches_enumeration() {
        let f = poly(&[2, -1, 3, 0, 1], 14);
        let g = poly(&[1, 1, -2], 14);
        let h = poly(&[-3, 0, 0, 5], 14);
        for n in 0..=5 {
            let by_enum = compositions(n, 0, 3)
                .map(|c| {
                    let p = c.parts();
                    f.hasse_teichmuller(p[0])
                        .mul(&g.hasse_teichmuller(p[1]))
                        .mul(&h.hasse_teichmuller(p[2]))
                })
                .fold(TruncatedSeries::zero(14 - n), |a, t| a.add(&t));
            assert_eq!(
                product_rule_sum(&[f.clone(), g.clone(), h.clone()], n),
                by_enum
            );
        }
        for n in 1..=5 {
            assert_eq!(
                quotient_rule_compositions(&f, n).unwrap(),
                quotient_by_enumeration(&f, n, 1)
            );
            assert_eq!(
                quotient_rule_binomial(&f, n).unwrap(),
                quotient_by_enumeration(&f, n, 0)
            );
        }
    }

    #[test]
    fn quotient_rules_on_one_minus_t() {
        // 1/(1-t) = Σ t^m, so H^{(n)} has coefficients C(m+n, n)
        let f = poly(&[1, -1], 12);
        for n in 1..=5 {
            let expected = TruncatedSeries::from_fn(12 - n, |m| binomial(m + n, n as i64));
            assert_eq!(quotient_rule_compositions(&f, n).unwrap(), expected);
            assert_eq!(quotient_rule_binomial(&f, n).unwrap(), expected);
        }
    }
}
