//! Reduced lexicographic Gröbner bases by Buchberger's algorithm.

use crate::error::{Error, Result};
use crate::ideal::{Monomial2, MonomialIdeal2};

use super::field::Field;
use super::poly::BivariatePoly;

type Poly<F> = BivariatePoly<<F as Field>::Elem>;

#[derive(Debug, Clone)]
pub struct GroebnerBasis2<F: Field> {
    pub field: F,
    /// Monic elements by descending leading monomial.
    pub basis: Vec<Poly<F>>,
}

/// Remainder of `f` on division by `divisors`, reducing every term.
pub fn normal_form<F: Field>(field: &F, f: &Poly<F>, divisors: &[Poly<F>]) -> Poly<F> {
    let mut rest = f.clone();
    let mut rem = Poly::<F>::zero();
    while let Some((m, c)) = rest.leading() {
        let c = c.clone();
        let hit = divisors.iter().find_map(|g| {
            let (lm, lc) = g.leading()?;
            Some((lm.quotient_of(m)?, lc, g))
        });
        match hit {
            Some((q, lc, g)) => {
                let factor = field.mul(&c, &field.inv(lc));
                rest = rest.sub_scaled(field, &factor, q, g);
            }
            None => {
                let lead = Poly::<F>::from_terms(field, [(m, c)]);
                rest = rest.sub_scaled(field, &field.one(), Monomial2::ONE, &lead);
                rem = rem.sub_scaled(field, &field.neg(&field.one()), Monomial2::ONE, &lead);
            }
        }
    }
    rem
}

fn s_polynomial<F: Field>(field: &F, f: &Poly<F>, g: &Poly<F>) -> Poly<F> {
    let (lf, cf) = f.leading().expect("nonzero");
    let (lg, cg) = g.leading().expect("nonzero");
    let l = lf.lcm(lg);
    let a = Poly::<F>::zero().sub_scaled(
        field,
        &field.neg(&field.inv(cf)),
        lf.quotient_of(l).unwrap(),
        f,
    );
    a.sub_scaled(field, &field.inv(cg), lg.quotient_of(l).unwrap(), g)
}

fn coprime(a: Monomial2, b: Monomial2) -> bool {
    (a.x == 0 || b.x == 0) && (a.y == 0 || b.y == 0)
}

/// The reduced Gröbner basis of the ideal generated by `gens`, checked to be
/// reduced and closed under S-polynomial reduction before it is returned.
pub fn buchberger<F: Field>(gens: &[Poly<F>], field: &F) -> Result<GroebnerBasis2<F>> {
    let mut g: Vec<Poly<F>> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.monic(field))
        .collect();
    let mut pairs: Vec<(usize, usize)> = (0..g.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let (li, lj) = (
            g[i].leading_monomial().unwrap(),
            g[j].leading_monomial().unwrap(),
        );
        if coprime(li, lj) {
            continue;
        }
        let r = normal_form(field, &s_polynomial(field, &g[i], &g[j]), &g);
        if !r.is_zero() {
            let k = g.len();
            g.push(r.monic(field));
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }

    // keep one element per minimal leading monomial, then reduce tails
    let mut minimal: Vec<Poly<F>> = Vec::new();
    for (k, p) in g.iter().enumerate() {
        let lm = p.leading_monomial().unwrap();
        let redundant = g.iter().enumerate().any(|(l, q)| {
            let lq = q.leading_monomial().unwrap();
            l != k && lq.divides(lm) && (lq != lm || l < k)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut reduced: Vec<Poly<F>> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Poly<F>> = minimal
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, q)| q.clone())
                .collect();
            normal_form(field, &minimal[k], &others).monic(field)
        })
        .collect();
    reduced.sort_by_key(|p| {
        let m = p.leading_monomial().unwrap();
        std::cmp::Reverse((m.x, m.y))
    });
    let basis = GroebnerBasis2 {
        field: field.clone(),
        basis: reduced,
    };
    basis.verify()?;
    Ok(basis)
}

impl<F: Field> GroebnerBasis2<F> {
    pub fn is_unit(&self) -> bool {
        self.basis
            .iter()
            .any(|p| p.leading_monomial() == Some(Monomial2::ONE))
    }

    /// Monic, no term divisible by another element's leading monomial, and
    /// every S-polynomial reduces to zero.
    pub fn verify(&self) -> Result<()> {
        let f = &self.field;
        for (k, p) in self.basis.iter().enumerate() {
            let (_, lc) = p
                .leading()
                .ok_or_else(|| Error::InvariantViolation("zero element in basis".into()))?;
            if *lc != f.one() {
                return Err(Error::InvariantViolation(format!(
                    "{} is not monic",
                    p.render(f)
                )));
            }
            for (l, q) in self.basis.iter().enumerate() {
                let lq = q.leading_monomial().unwrap();
                if l != k && p.terms().any(|(m, _)| lq.divides(m)) {
                    return Err(Error::InvariantViolation(format!(
                        "{} is not reduced with respect to {}",
                        p.render(f),
                        q.render(f)
                    )));
                }
            }
        }
        for j in 0..self.basis.len() {
            for i in 0..j {
                let s = s_polynomial(f, &self.basis[i], &self.basis[j]);
                if !normal_form(f, &s, &self.basis).is_zero() {
                    return Err(Error::InvariantViolation(format!(
                        "S-polynomial of {} and {} does not reduce to zero",
                        self.basis[i].render(f),
                        self.basis[j].render(f)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn normal_form(&self, p: &Poly<F>) -> Poly<F> {
        normal_form(&self.field, p, &self.basis)
    }

    pub fn initial_ideal(&self) -> MonomialIdeal2 {
        MonomialIdeal2::new(self.basis.iter().filter_map(|p| p.leading_monomial()))
    }

    /// Standard monomials of degree `d`, ascending in `x`.
    pub fn quotient_basis(&self, d: u32) -> Vec<Monomial2> {
        self.initial_ideal().standard_monomials(d)
    }

    /// The initial ideal contains pure powers of both variables.
    pub fn is_artinian(&self) -> bool {
        self.initial_ideal().is_artinian()
    }

    pub fn render(&self) -> Vec<String> {
        self.basis.iter().map(|p| p.render(&self.field)).collect()
    }
}
