//! Lattice paths through the staircase of a monomial ideal and families of
//! non-intersecting paths between the degree-`d` and degree-`(d+t)`
//! standard monomials.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::ideal::{Monomial2, MonomialIdeal2};
use crate::maps::{build_matrix, det_exact};

pub const DEFAULT_CAP: u64 = 10_000_000;

pub type Point = (i64, i64);

/// The points `(i, j)` with `x^i y^j ∉ I`, with the standard monomials of
/// degree `d` as sources and of degree `d + t` as sinks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StaircaseLattice {
    pub d: u32,
    pub t: u32,
    pub points: BTreeSet<Point>,
    /// `A_i = (a_i, d - a_i)`, ascending `a_i`.
    pub sources: Vec<Point>,
    /// `E_j = (b_j, d + t - b_j)`, ascending `b_j`.
    pub sinks: Vec<Point>,
}

impl StaircaseLattice {
    pub fn contains(&self, p: Point) -> bool {
        self.points.contains(&p)
    }
}

pub fn build_lattice(ideal: &MonomialIdeal2, d: u32, t: u32) -> Result<StaircaseLattice> {
    let reg = ideal.regularity()?;
    if t == 0 {
        return Err(Error::PreconditionFailed("t must be positive".into()));
    }
    let points = (0..=reg)
        .flat_map(|e| ideal.standard_monomials(e))
        .map(|m| (m.x as i64, m.y as i64))
        .collect();
    let on_line = |e: u32| -> Vec<Point> {
        ideal
            .standard_x_exponents(e)
            .into_iter()
            .map(|a| (a as i64, e as i64 - a as i64))
            .collect()
    };
    Ok(StaircaseLattice {
        d,
        t,
        points,
        sources: on_line(d),
        sinks: on_line(d + t),
    })
}

/// Number of right/up lattice paths in `Z^2` from `a` to `e`.
pub fn path_count(a: Point, e: Point) -> BigUint {
    let (dx, dy) = (e.0 - a.0, e.1 - a.1);
    if dx < 0 || dy < 0 {
        return BigUint::zero();
    }
    binomial(dx + dy, dx)
}

/// Number of right/up paths from `a` to `e` visiting only points of `allowed`.
pub fn count_paths_within(allowed: &BTreeSet<Point>, a: Point, e: Point) -> BigUint {
    if !allowed.contains(&a) {
        return BigUint::zero();
    }
    let mut memo: HashMap<Point, BigUint> = HashMap::new();
    paths_from(allowed, a, e, &mut memo)
}

fn paths_from(
    allowed: &BTreeSet<Point>,
    p: Point,
    e: Point,
    memo: &mut HashMap<Point, BigUint>,
) -> BigUint {
    if p == e {
        return BigUint::from(1u32);
    }
    if p.0 > e.0 || p.1 > e.1 {
        return BigUint::zero();
    }
    if let Some(v) = memo.get(&p) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for q in [(p.0 + 1, p.1), (p.0, p.1 + 1)] {
        if allowed.contains(&q) {
            total += paths_from(allowed, q, e, memo);
        }
    }
    memo.insert(p, total.clone());
    total
}

/// A path from level `d` to level `d + t` stored by its `x`-coordinate on each
/// anti-diagonal `x + y = d + k`.
type Profile = Vec<i64>;

struct Enumerator<'a> {
    lattice: &'a StaircaseLattice,
    memo: HashMap<(usize, Profile), BigUint>,
    states: u64,
    cap: u64,
}

impl Enumerator<'_> {
    fn tick(&mut self) -> Result<()> {
        self.states += 1;
        if self.states > self.cap {
            return Err(Error::ExplosionGuard { cap: self.cap });
        }
        Ok(())
    }

    /// Families for paths `i..` given the previous path's profile.
    fn families(&mut self, i: usize, prev: &Profile) -> Result<BigUint> {
        if i == self.lattice.sources.len() {
            return Ok(BigUint::from(1u32));
        }
        let key = (i, prev.clone());
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let mut paths = Vec::new();
        let mut current = vec![self.lattice.sources[i].0];
        self.paths(i, prev, &mut current, &mut paths)?;
        let mut total = BigUint::zero();
        for path in paths {
            total += self.families(i + 1, &path)?;
        }
        self.memo.insert(key, total.clone());
        Ok(total)
    }

    /// Every path from source `i` to sink `i` inside the lattice lying strictly
    /// right of `prev` on every anti-diagonal.
    fn paths(
        &mut self,
        i: usize,
        prev: &Profile,
        current: &mut Profile,
        out: &mut Vec<Profile>,
    ) -> Result<()> {
        self.tick()?;
        let k = current.len() - 1;
        let x = current[k];
        let level = self.lattice.d as i64 + k as i64;
        let sink = self.lattice.sinks[i];
        if k == self.lattice.t as usize {
            if x == sink.0 {
                out.push(current.clone());
            }
            return Ok(());
        }
        // up keeps x, right increases it
        for nx in [x, x + 1] {
            let next = (nx, level + 1 - nx);
            if nx > sink.0 || next.1 > sink.1 || !self.lattice.contains(next) {
                continue;
            }
            if !prev.is_empty() && nx <= prev[k + 1] {
                continue;
            }
            current.push(nx);
            self.paths(i, prev, current, out)?;
            current.pop();
        }
        Ok(())
    }
}

/// Vertex-disjoint families of paths `A_i -> E_i` inside the lattice, by
/// depth-first enumeration path by path.
///
/// Paths are built in ascending source order; on a common anti-diagonal a
/// later path must lie strictly right of the previous one, since right/up
/// paths that swap order share a vertex. Counts for the remaining paths are
/// memoized on the previous path. `cap` bounds the number of partial paths
/// explored.
pub fn count_nilp_families(lattice: &StaircaseLattice, cap: u64) -> Result<BigUint> {
    if lattice.sources.len() != lattice.sinks.len() {
        return Err(Error::SizeMismatch {
            sources: lattice.sources.len(),
            sinks: lattice.sinks.len(),
        });
    }
    let mut e = Enumerator {
        lattice,
        memo: HashMap::new(),
        states: 0,
        cap,
    };
    e.families(0, &Vec::new())
}

/// `|det N(d, d+t)|` and the number of non-intersecting families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LgvComparison {
    pub determinant: BigInt,
    pub families: BigUint,
}

impl LgvComparison {
    pub fn agree(&self) -> bool {
        self.determinant.abs().to_biguint() == Some(self.families.clone())
    }
}

pub fn lgv_compare(ideal: &MonomialIdeal2, d: u32, t: u32, cap: u64) -> Result<LgvComparison> {
    let matrix = build_matrix(ideal, d, t)?;
    let lattice = build_lattice(ideal, d, t)?;
    Ok(LgvComparison {
        determinant: det_exact(&matrix),
        families: count_nilp_families(&lattice, cap)?,
    })
}

/// `|det N(d, d+t)|` equals the number of non-intersecting families.
pub fn lgv_verify(ideal: &MonomialIdeal2, d: u32, t: u32, cap: u64) -> Result<bool> {
    Ok(lgv_compare(ideal, d, t, cap)?.agree())
}

/// The staircase as a text grid, top row first: `A` and `E` mark sources and
/// sinks, `.` other standard monomials, `#` monomials of the ideal.
pub struct LatticeGrid<'a>(pub &'a StaircaseLattice);

impl fmt::Display for LatticeGrid<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.0;
        let width = l.points.iter().map(|p| p.0).max().unwrap_or(0) + 2;
        let height = l.points.iter().map(|p| p.1).max().unwrap_or(0) + 2;
        for y in (0..height).rev() {
            let row: String = (0..width)
                .map(|x| {
                    let p = (x, y);
                    if l.sources.contains(&p) {
                        'A'
                    } else if l.sinks.contains(&p) {
                        'E'
                    } else if l.contains(p) {
                        '.'
                    } else {
                        '#'
                    }
                })
                .collect();
            writeln!(f, "{y:>3} {}", row.trim_end())?;
        }
        Ok(())
    }
}

/// Whether `x^i y^j` lies in the ideal; the lattice's complement.
pub fn in_ideal(ideal: &MonomialIdeal2, p: Point) -> bool {
    p.0 >= 0 && p.1 >= 0 && ideal.contains(Monomial2::new(p.0 as u32, p.1 as u32))
}
