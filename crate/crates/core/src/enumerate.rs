//! Enumeration of artinian monomial ideals of `k[x, y]` by their staircases.
//!
//! An artinian monomial ideal is determined by the column heights
//! `c_0 >= c_1 >= ... >= c_{k-1} >= 1`: `x^i y^j` is a standard monomial iff
//! `i < k` and `j < c_i`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ideal::{Monomial2, MonomialIdeal2};

/// The ideal whose standard monomials are `x^i y^j` with `j < heights[i]`.
/// `heights` must be nonincreasing and positive.
pub fn from_column_heights(heights: &[u32]) -> MonomialIdeal2 {
    debug_assert!(heights.windows(2).all(|w| w[0] >= w[1]));
    let k = heights.len();
    let mut gens = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let c = heights.get(i).copied().unwrap_or(0);
        if i == 0 || c < heights[i - 1] {
            gens.push(Monomial2::new(i as u32, c));
        }
    }
    MonomialIdeal2::new(gens)
}

/// Column heights of an artinian ideal.
pub fn column_heights(ideal: &MonomialIdeal2) -> Option<Vec<u32>> {
    let a = ideal.x_power()?;
    ideal.y_power()?;
    Some(
        (0..a)
            .map(|i| {
                (0..)
                    .find(|&j| ideal.contains(Monomial2::new(i, j)))
                    .unwrap_or(0)
            })
            .collect(),
    )
}

fn extend(
    prefix: &mut Vec<u32>,
    max_height: &dyn Fn(usize) -> u32,
    max_cols: usize,
    out: &mut Vec<MonomialIdeal2>,
) {
    if !prefix.is_empty() {
        out.push(from_column_heights(prefix));
    }
    let i = prefix.len();
    if i == max_cols {
        return;
    }
    let cap = prefix
        .last()
        .copied()
        .unwrap_or(u32::MAX)
        .min(max_height(i));
    for c in 1..=cap {
        prefix.push(c);
        extend(prefix, max_height, max_cols, out);
        prefix.pop();
    }
}

/// Every artinian monomial ideal with `reg(R/I) <= max_reg`, excluding the unit
/// ideal. There are `Catalan(max_reg + 2) - 1` of them.
pub fn all_artinian_ideals(max_reg: u32) -> Vec<MonomialIdeal2> {
    let n = max_reg as usize;
    // the top standard monomial of column i has degree i + c_i - 1
    let max_height = move |i: usize| (n + 1 - i) as u32;
    let mut out = Vec::new();
    extend(&mut Vec::new(), &max_height, n + 1, &mut out);
    out
}

/// Every proper artinian monomial ideal containing `x^n` and `y^n`.
pub fn ideals_in_box(n: u32) -> Vec<MonomialIdeal2> {
    let max_height = move |_: usize| n;
    let mut out = Vec::new();
    extend(&mut Vec::new(), &max_height, n as usize, &mut out);
    out
}

/// A pseudo-random artinian monomial ideal with `reg(R/I) <= max_reg`.
pub fn random_artinian_ideal<R: Rng>(rng: &mut R, max_reg: u32) -> MonomialIdeal2 {
    let n = max_reg + 1;
    let cols = rng.random_range(1..=n);
    let mut heights = Vec::with_capacity(cols as usize);
    let mut cap = n;
    for i in 0..cols {
        cap = cap.min(n - i);
        let c = rng.random_range(1..=cap);
        heights.push(c);
        cap = c;
    }
    from_column_heights(&heights)
}

/// `count` seeded pseudo-random artinian ideals with `reg(R/I) <= max_reg`.
pub fn random_artinian_ideals(count: usize, max_reg: u32, seed: u64) -> Vec<MonomialIdeal2> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_artinian_ideal(&mut rng, max_reg))
        .collect()
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn catalan(n: u64) -> u64 {
        (0..n).fold(1u64, |c, k| c * 2 * (2 * k + 1) / (k + 2))
    }

    #[test]
    fn heights_round_trip() {
        let i = from_column_heights(&[5, 4, 4, 1, 1, 1]);
        assert_eq!(i, "y^5, xy^4, x^3y, x^6".parse().unwrap());
        assert_eq!(column_heights(&i).unwrap(), vec![5, 4, 4, 1, 1, 1]);
        assert_eq!(from_column_heights(&[1]), "x, y".parse().unwrap());
    }

    #[test]
    fn counts() {
        for n in 0..7 {
            let all = all_artinian_ideals(n);
            assert_eq!(all.len() as u64, catalan(n as u64 + 2) - 1, "n={n}");
            let distinct: HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            assert!(all.iter().all(|i| i.regularity().unwrap() <= n));
        }
        // (x,y) is the only ideal with regularity 0
        assert_eq!(all_artinian_ideals(0).len(), 1);
        // binomial(2n, n) staircases fit in an n x n box; one of them is the unit ideal
        assert_eq!(ideals_in_box(3).len(), 19);
    }

    #[test]
    fn random_is_reproducible() {
        let a = random_artinian_ideals(50, 12, 7);
        let b = random_artinian_ideals(50, 12, 7);
        assert_eq!(a, b);
        assert!(a.iter().all(|i| i.regularity().unwrap() <= 12));
    }
}
