//! Bivariate monomials and monomial ideals of `k[x, y]`.
//!
//! Monomials are ordered by degree and then by the exponent of `x`, which is
//! the lexicographic order with `x > y` restricted to a fixed degree. Every
//! ordered collection in this crate is ascending in that order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::parse;

/// The monomial `x^x * y^y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial2 {
    pub x: u32,
    pub y: u32,
}

impl Monomial2 {
    pub const ONE: Monomial2 = Monomial2 { x: 0, y: 0 };

    pub const fn new(x: u32, y: u32) -> Self {
        Monomial2 { x, y }
    }

    /// The degree-`d` monomial with `x`-exponent `i`.
    pub fn in_degree(d: u32, i: u32) -> Self {
        debug_assert!(i <= d);
        Monomial2 { x: i, y: d - i }
    }

    pub fn degree(self) -> u32 {
        self.x + self.y
    }

    pub fn divides(self, other: Monomial2) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(self, other: Monomial2) -> Option<Monomial2> {
        self.divides(other)
            .then(|| Monomial2::new(other.x - self.x, other.y - self.y))
    }

    pub fn lcm(self, other: Monomial2) -> Monomial2 {
        Monomial2::new(self.x.max(other.x), self.y.max(other.y))
    }

    pub fn swap(self) -> Monomial2 {
        Monomial2::new(self.y, self.x)
    }
}

impl std::ops::Mul for Monomial2 {
    type Output = Monomial2;

    fn mul(self, other: Monomial2) -> Monomial2 {
        Monomial2::new(self.x + other.x, self.y + other.y)
    }
}

impl Ord for Monomial2 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        parse::write_monomial(f, &[('x', self.x), ('y', self.y)])
    }
}

impl FromStr for Monomial2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let e = parse::parse_monomial(s, &['x', 'y'])?;
        Ok(Monomial2::new(e[0], e[1]))
    }
}

impl Serialize for Monomial2 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Monomial2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A monomial ideal of `k[x, y]`, stored by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MonomialIdeal2 {
    /// Minimal generators, ascending.
    generators: Vec<Monomial2>,
    /// The same generators sorted by `x`-exponent; `y`-exponents then strictly decrease.
    staircase: Vec<Monomial2>,
}

impl MonomialIdeal2 {
    /// The ideal generated by `raw`, reduced to its minimal generators.
    pub fn new(raw: impl IntoIterator<Item = Monomial2>) -> Self {
        let mut staircase: Vec<Monomial2> = raw.into_iter().collect();
        staircase.sort_by_key(|m| (m.x, m.y));
        staircase.dedup();
        // keep a generator iff its y-exponent beats every one with smaller x
        let mut minimal: Vec<Monomial2> = Vec::with_capacity(staircase.len());
        for m in staircase {
            match minimal.last() {
                Some(last) if last.y <= m.y => {}
                _ => minimal.push(m),
            }
        }
        let mut generators = minimal.clone();
        generators.sort();
        MonomialIdeal2 {
            generators,
            staircase: minimal,
        }
    }

    pub fn zero() -> Self {
        MonomialIdeal2::default()
    }

    pub fn unit() -> Self {
        MonomialIdeal2::new([Monomial2::ONE])
    }

    /// `(x^a, y^b)`.
    pub fn complete_intersection(a: u32, b: u32) -> Self {
        MonomialIdeal2::new([Monomial2::new(a, 0), Monomial2::new(0, b)])
    }

    /// `(x, y)^d`.
    pub fn maximal_power(d: u32) -> Self {
        MonomialIdeal2::new((0..=d).map(|i| Monomial2::in_degree(d, i)))
    }

    pub fn generators(&self) -> &[Monomial2] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.first() == Some(&Monomial2::ONE)
    }

    pub fn contains(&self, m: Monomial2) -> bool {
        let idx = self.staircase.partition_point(|g| g.x <= m.x);
        idx > 0 && self.staircase[idx - 1].y <= m.y
    }

    /// Sum of ideals.
    pub fn sum(&self, other: &MonomialIdeal2) -> MonomialIdeal2 {
        MonomialIdeal2::new(self.generators.iter().chain(&other.generators).copied())
    }

    pub fn swap_xy(&self) -> MonomialIdeal2 {
        MonomialIdeal2::new(self.generators.iter().map(|m| m.swap()))
    }

    /// Smallest `a` with `x^a` in the ideal.
    pub fn x_power(&self) -> Option<u32> {
        self.staircase.last().filter(|g| g.y == 0).map(|g| g.x)
    }

    /// Smallest `b` with `y^b` in the ideal.
    pub fn y_power(&self) -> Option<u32> {
        self.staircase.first().filter(|g| g.x == 0).map(|g| g.y)
    }

    pub fn is_artinian(&self) -> bool {
        self.x_power().is_some() && self.y_power().is_some()
    }

    /// Smallest degree of a minimal generator; `None` for the zero ideal.
    pub fn indeg(&self) -> Option<u32> {
        self.generators.first().map(|m| m.degree())
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.generators.last().map(|m| m.degree())
    }

    /// The degree-`d` monomials of the ideal, ascending.
    pub fn degree_slice(&self, d: u32) -> Vec<Monomial2> {
        (0..=d)
            .map(|i| Monomial2::in_degree(d, i))
            .filter(|&m| self.contains(m))
            .collect()
    }

    /// The degree-`d` monomials outside the ideal, ascending.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial2> {
        (0..=d)
            .map(|i| Monomial2::in_degree(d, i))
            .filter(|&m| !self.contains(m))
            .collect()
    }

    /// `x`-exponents of the standard monomials of degree `d`, ascending.
    pub fn standard_x_exponents(&self, d: u32) -> Vec<u32> {
        self.standard_monomials(d)
            .into_iter()
            .map(|m| m.x)
            .collect()
    }

    fn slice_len(&self, d: u32) -> u32 {
        (0..=d)
            .filter(|&i| self.contains(Monomial2::in_degree(d, i)))
            .count() as u32
    }

    /// `dim_k [R/I]_d`, defined for any ideal.
    pub fn hilbert_at(&self, d: u32) -> u32 {
        d + 1 - self.slice_len(d)
    }

    /// The lexicographic span `c - b + 1` of the degree-`d` monomials in the ideal.
    pub fn width_at(&self, d: u32) -> u32 {
        let mut lo = u32::MAX;
        let mut hi = 0u32;
        for g in &self.staircase {
            if g.degree() <= d {
                lo = lo.min(g.x);
                hi = hi.max(d - g.y);
            }
        }
        if lo == u32::MAX {
            0
        } else {
            hi - lo + 1
        }
    }

    /// Width function on degrees `0..=max_d`; works for non-artinian ideals.
    pub fn width_upto(&self, max_d: u32) -> Vec<u32> {
        (0..=max_d).map(|d| self.width_at(d)).collect()
    }

    /// Regularity of `R/I`: the top degree with a nonzero component.
    pub fn regularity(&self) -> Result<u32> {
        self.hilbert_function().map(|h| h.reg)
    }

    pub fn hilbert_function(&self) -> Result<HilbertFunction> {
        let (a, b) = self.artinian_powers()?;
        // standard monomials x^i y^j have i < a and j < b
        let top = a + b - 2;
        let mut values: Vec<u32> = (0..=top).map(|d| self.hilbert_at(d)).collect();
        while values.last() == Some(&0) {
            values.pop();
        }
        let reg = values.len() as u32 - 1;
        Ok(HilbertFunction {
            values,
            reg,
            indeg: self.indeg(),
        })
    }

    pub fn width_function(&self) -> Result<WidthFunction> {
        let reg = self.regularity()?;
        let values = self.width_upto(reg);
        let m = self.indeg().unwrap_or(0);
        Ok(WidthFunction { values, m })
    }

    fn artinian_powers(&self) -> Result<(u32, u32)> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        match (self.x_power(), self.y_power()) {
            (Some(a), Some(b)) => Ok((a, b)),
            (None, _) => Err(Error::NotArtinian(format!("no power of x in ({self})"))),
            (_, None) => Err(Error::NotArtinian(format!("no power of y in ({self})"))),
        }
    }

    pub fn is_lexsegment_in_degree(&self, d: u32) -> bool {
        let slice = self.degree_slice(d);
        slice.windows(2).all(|w| w[1].x == w[0].x + 1)
    }

    /// Lexsegment in every degree. Beyond the largest generator degree each
    /// slice is the shift of the previous one, so only finitely many degrees matter.
    pub fn is_lexsegment(&self) -> bool {
        let top = self.max_generator_degree().unwrap_or(0);
        (0..=top).all(|d| self.is_lexsegment_in_degree(d))
    }

    /// Initial lexsegment: lexsegment and `x^d` in every nonzero slice.
    pub fn is_initial_lexsegment(&self) -> bool {
        let top = self.max_generator_degree().unwrap_or(0);
        self.is_lexsegment()
            && (0..=top).all(|d| self.slice_len(d) == 0 || self.contains(Monomial2::new(d, 0)))
    }

    /// Number of degree-`d` monomials outside the ideal lying strictly
    /// between its smallest and largest degree-`d` monomials.
    pub fn lex_defect(&self, d: u32) -> u32 {
        self.width_at(d) + self.hilbert_at(d) - (d + 1)
    }
}

impl fmt::Display for MonomialIdeal2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return f.write_str("0");
        }
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for MonomialIdeal2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let gens = parse::parse_monomial_list(s, &['x', 'y'])?;
        Ok(MonomialIdeal2::new(
            gens.into_iter().map(|e| Monomial2::new(e[0], e[1])),
        ))
    }
}

impl Serialize for MonomialIdeal2 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The h-vector `(h(0), ..., h(reg))` of an artinian quotient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertFunction {
    pub values: Vec<u32>,
    pub reg: u32,
    /// `None` only for the zero ideal.
    pub indeg: Option<u32>,
}

impl HilbertFunction {
    /// `h(d)`, zero past the regularity.
    pub fn at(&self, d: u32) -> u32 {
        self.values.get(d as usize).copied().unwrap_or(0)
    }
}

/// The w-vector `(w(0), ..., w(reg))` of an artinian quotient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthFunction {
    pub values: Vec<u32>,
    /// First degree with nonzero width (the initial degree).
    pub m: u32,
}

impl WidthFunction {
    /// `w(d)`; past the regularity every slice is full, so `w(d) = d + 1`.
    pub fn at(&self, d: u32) -> u32 {
        self.values.get(d as usize).copied().unwrap_or(d + 1)
    }

    pub fn reg(&self) -> u32 {
        self.values.len() as u32 - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(s: &str) -> MonomialIdeal2 {
        s.parse().unwrap()
    }

    fn mons(s: &str) -> Vec<Monomial2> {
        ideal(s).generators().to_vec()
    }

    #[test]
    fn minimalize_drops_multiples() {
        assert_eq!(ideal("x^2, x^3, y^2"), ideal("x^2, y^2"));
        assert_eq!(ideal("x^6, x^3y, xy^5, y^5").generators().len(), 3);
        assert_eq!(ideal("x^6, x^3y, xy^5, y^5"), ideal("x^6, x^3y, y^5"));
        assert!(MonomialIdeal2::new([]).is_zero());
        assert!(ideal("x, 1").is_unit());
    }

    #[test]
    fn generators_ascend() {
        let i = ideal("x^6, y^5, x^3y");
        let g = i.generators();
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(g[0], Monomial2::new(3, 1));
        assert_eq!(i.to_string(), "x^3y, y^5, x^6");
    }

    #[test]
    fn slices_of_worked_example() {
        let i = ideal("x^6, x^3y, xy^4, y^5");
        let s5 = i.degree_slice(5);
        let mut expected = mons("y^5, xy^4, x^3y^2, x^4y");
        expected.sort();
        assert_eq!(s5, expected);
        assert_eq!(i.degree_slice(4), vec![Monomial2::new(3, 1)]);
        // with xy^5 in place of xy^4 the slice loses xy^4
        assert_eq!(ideal("x^6, x^3y, xy^5, y^5").degree_slice(5).len(), 3);
        assert!(MonomialIdeal2::zero().degree_slice(7).is_empty());
    }

    #[test]
    fn hilbert_examples() {
        let h = ideal("x^6, x^3y, xy^4, y^5").hilbert_function().unwrap();
        assert_eq!(h.values, vec![1, 2, 3, 4, 4, 2]);
        assert_eq!((h.reg, h.indeg), (5, Some(4)));
        let h = ideal("x^6, x^3y, xy^5, y^5").hilbert_function().unwrap();
        assert_eq!(h.values, vec![1, 2, 3, 4, 4, 3, 1]);
        let h = ideal("x, y").hilbert_function().unwrap();
        assert_eq!((h.values, h.reg), (vec![1], 0));
        assert_eq!(
            ideal("x^3, y^3").hilbert_function().unwrap().values,
            vec![1, 2, 3, 2, 1]
        );
        assert!(matches!(
            ideal("x^3, xy").hilbert_function(),
            Err(Error::NotArtinian(_))
        ));
        assert_eq!(
            MonomialIdeal2::unit().hilbert_function(),
            Err(Error::UnitIdeal)
        );
    }

    #[test]
    fn width_examples() {
        let w = ideal("x^6, x^3y, xy^4, y^5").width_function().unwrap();
        assert_eq!(w.values, vec![0, 0, 0, 0, 1, 5]);
        assert_eq!(w.m, 4);
        assert_eq!(ideal("x^10, y^7").width_at(10), 11);
        assert_eq!(
            ideal("x^2, xy^2, y^4").width_function().unwrap().values,
            vec![0, 0, 1, 3]
        );
        // degree 4 lies past the regularity, where the slice is full
        assert_eq!(ideal("x^2, xy^2, y^4").width_upto(4), vec![0, 0, 1, 3, 5]);
    }

    #[test]
    fn lexsegment_and_defect() {
        let i = ideal("x^6, x^3y, xy^4, y^5");
        assert!(!i.is_lexsegment_in_degree(5));
        assert_eq!(i.lex_defect(5), 1);
        let j = ideal("x^2, xy^2, y^4");
        assert!((0..12).all(|d| j.is_lexsegment_in_degree(d)));
        assert!(j.is_lexsegment());
        assert_eq!(j.lex_defect(3), 0);
        assert!(i.is_lexsegment_in_degree(2));
        assert_eq!(i.lex_defect(2), 0);
        assert!(ideal("x^3, x^2y, xy^3, y^5").is_initial_lexsegment());
        assert!(!ideal("y, x^2").is_initial_lexsegment());
        assert!(ideal("y, x^2").is_lexsegment());
    }

    #[test]
    fn pure_powers() {
        let i = ideal("x^6, x^3y, xy^4, y^5");
        assert_eq!((i.x_power(), i.y_power()), (Some(6), Some(5)));
        assert!(!ideal("x^2y").is_artinian());
    }
}
