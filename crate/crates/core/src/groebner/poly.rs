//! Polynomials in `x, y` under the lexicographic order with `x > y`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ideal::Monomial2;
use crate::parse::Term;

use super::field::Field;

/// Terms keyed by `(x-exponent, y-exponent)`, whose natural order is lex with
/// `x > y`; the leading term is the last entry. No stored coefficient is zero.
#[derive(Debug, Clone, PartialEq)]
pub struct BivariatePoly<E> {
    terms: BTreeMap<(u32, u32), E>,
}

impl<E: Clone + PartialEq> BivariatePoly<E> {
    pub fn zero() -> Self {
        BivariatePoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<F: Field<Elem = E>>(
        field: &F,
        terms: impl IntoIterator<Item = (Monomial2, E)>,
    ) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(field, m, &c);
        }
        p
    }

    /// Converts parsed rational terms into the field.
    pub fn from_parsed<F: Field<Elem = E>>(field: &F, terms: &[Term]) -> Result<Self> {
        let mut out = Vec::with_capacity(terms.len());
        for (q, exps) in terms {
            let m = match exps.as_slice() {
                [x, y] => Monomial2::new(*x, *y),
                _ => {
                    return Err(Error::PreconditionFailed(
                        "polynomials must be in the variables x and y".into(),
                    ))
                }
            };
            out.push((m, field.embed(q)?));
        }
        Ok(Self::from_terms(field, out))
    }

    pub fn monomial<F: Field<Elem = E>>(field: &F, m: Monomial2) -> Self {
        Self::from_terms(field, [(m, field.one())])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(Monomial2, &E)> {
        self.terms
            .iter()
            .next_back()
            .map(|(&(x, y), c)| (Monomial2::new(x, y), c))
    }

    pub fn leading_monomial(&self) -> Option<Monomial2> {
        self.leading().map(|(m, _)| m)
    }

    /// Terms in descending lex order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial2, &E)> {
        self.terms
            .iter()
            .rev()
            .map(|(&(x, y), c)| (Monomial2::new(x, y), c))
    }

    pub fn coefficient(&self, m: Monomial2) -> Option<&E> {
        self.terms.get(&(m.x, m.y))
    }

    /// The common degree of all terms, if the polynomial is homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|&(x, y)| x + y);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    fn add_term<F: Field<Elem = E>>(&mut self, field: &F, m: Monomial2, c: &E) {
        if field.is_zero(c) {
            return;
        }
        let key = (m.x, m.y);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v = field.add(v, c);
                if field.is_zero(v) {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    /// `self - c * m * other`.
    pub fn sub_scaled<F: Field<Elem = E>>(
        &self,
        field: &F,
        c: &E,
        m: Monomial2,
        other: &Self,
    ) -> Self {
        let mut out = self.clone();
        for (n, v) in other.terms() {
            out.add_term(field, m * n, &field.neg(&field.mul(c, v)));
        }
        out
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        Self::from_terms(field, self.terms().map(|(m, v)| (m, field.mul(c, v))))
    }

    pub fn monic<F: Field<Elem = E>>(&self, field: &F) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(field, &field.inv(c)),
            None => self.clone(),
        }
    }

    pub fn render<F: Field<Elem = E>>(&self, field: &F) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let (neg, abs) = field.render(c);
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let unit = abs == "1";
            if !unit {
                s.push_str(&abs);
            }
            if m != Monomial2::ONE || unit {
                s.push_str(&m.to_string());
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;
    use crate::groebner::field::{PrimeField, Rationals};
    use crate::parse::parse_polynomial_list;

    #[test]
    fn lex_leading_terms() {
        let q = Rationals;
        let parsed = parse_polynomial_list("y^3 - x y^2, 2x^2 + y^2 - 1/3").unwrap();
        let f = BivariatePoly::from_parsed(&q, &parsed[0]).unwrap();
        assert_eq!(f.leading_monomial(), Some(Monomial2::new(1, 2)));
        assert_eq!(f.render(&q), "-xy^2 + y^3");
        assert_eq!(f.monic(&q).render(&q), "xy^2 - y^3");
        let g = BivariatePoly::from_parsed(&q, &parsed[1]).unwrap();
        assert_eq!(g.render(&q), "2x^2 + y^2 - 1/3");
        assert_eq!(g.homogeneous_degree(), None);
        assert_eq!(f.homogeneous_degree(), Some(3));
        let h = f.sub_scaled(
            &q,
            &BigRational::from_integer((-1).into()),
            Monomial2::ONE,
            &f,
        );
        assert!(h
            .sub_scaled(&q, &BigRational::from_integer(2.into()), Monomial2::ONE, &f)
            .is_zero());
    }

    #[test]
    fn prime_coefficients() {
        let f5 = PrimeField::new(5).unwrap();
        let parsed = parse_polynomial_list("x^2 - y^2").unwrap();
        let f = BivariatePoly::from_parsed(&f5, &parsed[0]).unwrap();
        assert_eq!(f.render(&f5), "x^2 - y^2");
        let parsed = parse_polynomial_list("5x + y").unwrap();
        let g = BivariatePoly::from_parsed(&f5, &parsed[0]).unwrap();
        assert_eq!(g.render(&f5), "y");
    }
}
