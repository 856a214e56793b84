//! Exact rational polyhedral geometry: lattice vectors, pointed cones and
//! the conversions between their generator and halfspace descriptions.

mod dd;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num::bigint::BigInt;
use num::{Integer, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

pub use dd::double_description;

/// An integer vector in the ambient lattice Z^d.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector {
    coords: Vec<BigInt>,
}

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticeVector { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        LatticeVector {
            coords: coords.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn zero(dim: usize) -> Self {
        LatticeVector {
            coords: vec![BigInt::zero(); dim],
        }
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coords[i] = BigInt::from(1);
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &LatticeVector) -> BigInt {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> LatticeVector {
        LatticeVector {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scaled(&self, k: &BigInt) -> LatticeVector {
        LatticeVector {
            coords: self.coords.iter().map(|a| a * k).collect(),
        }
    }

    /// Divides by the gcd of the coordinates; the zero vector is unchanged.
    pub fn primitive(&self) -> LatticeVector {
        let mut g = BigInt::zero();
        for c in &self.coords {
            g = g.gcd(c);
        }
        if g.is_zero() || g == BigInt::from(1) {
            self.clone()
        } else {
            LatticeVector {
                coords: self.coords.iter().map(|c| c / &g).collect(),
            }
        }
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && *self == self.primitive()
    }

    /// Flips the sign so the first nonzero coordinate is positive.
    pub fn sign_normalized(&self) -> LatticeVector {
        match self.coords.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn as_i64(&self) -> Option<Vec<i64>> {
        self.coords.iter().map(i64::try_from).collect::<std::result::Result<_, _>>().ok()
    }

    /// Appends `extra` zero coordinates.
    pub fn extended(&self, extra: usize) -> LatticeVector {
        let mut coords = self.coords.clone();
        coords.extend(std::iter::repeat_with(BigInt::zero).take(extra));
        LatticeVector { coords }
    }

    /// Sum of absolute values, used for graded orderings.
    pub fn l1_norm(&self) -> BigInt {
        self.coords.iter().map(Signed::abs).sum()
    }
}

impl From<&[i64]> for LatticeVector {
    fn from(coords: &[i64]) -> Self {
        LatticeVector::from_i64(coords)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for LatticeVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coords.len()))?;
        for c in &self.coords {
            match i64::try_from(c) {
                Ok(v) => seq.serialize_element(&v)?,
                Err(_) => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

/// The finite lattice window [-R, R]^d used to verify conditions that
/// quantify over infinitely many lattice points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeBox {
    radius: u32,
}

impl LatticeBox {
    pub fn new(radius: u32) -> Result<Self> {
        if radius == 0 {
            return Err(Error::Parse("box radius must be at least 1".into()));
        }
        Ok(LatticeBox { radius })
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    /// All points of [-R, R]^dim in ascending lexicographic order.
    pub fn points(&self, dim: usize) -> BoxPoints {
        BoxPoints {
            radius: self.radius as i64,
            current: vec![-(self.radius as i64); dim],
            done: false,
            first: true,
        }
    }

    pub fn contains_i64(&self, point: &[i64]) -> bool {
        point.iter().all(|&c| c.unsigned_abs() <= self.radius as u64)
    }
}

pub struct BoxPoints {
    radius: i64,
    current: Vec<i64>,
    done: bool,
    first: bool,
}

impl Iterator for BoxPoints {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        if self.done {
            return None;
        }
        if self.first {
            self.first = false;
            return Some(self.current.clone());
        }
        let mut i = self.current.len();
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.current[i] < self.radius {
                self.current[i] += 1;
                for c in &mut self.current[i + 1..] {
                    *c = -self.radius;
                }
                return Some(self.current.clone());
            }
        }
    }
}

/// A rational pointed cone with both generator (extreme rays) and halfspace
/// (span equations + facet inequalities) descriptions.
///
/// Generators are primitive and sorted, so structural equality of two
/// `Cone` values is equality of the underlying point sets.
#[derive(Clone)]
pub struct Cone {
    ambient_dim: usize,
    generators: Vec<LatticeVector>,
    equations: Vec<LatticeVector>,
    inequalities: Vec<LatticeVector>,
    dim: usize,
    eq_i64: Option<Vec<Vec<i64>>>,
    ineq_i64: Option<Vec<Vec<i64>>>,
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.generators == other.generators
    }
}

impl Eq for Cone {}

impl PartialOrd for Cone {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cone {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim
            .cmp(&other.dim)
            .then_with(|| self.generators.cmp(&other.generators))
            .then_with(|| self.ambient_dim.cmp(&other.ambient_dim))
    }
}

impl std::hash::Hash for Cone {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ambient_dim.hash(state);
        self.generators.hash(state);
    }
}

impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cone{:?}", self.generators)
    }
}

impl Cone {
    /// Builds the pointed cone spanned by `gens` in R^ambient_dim.
    ///
    /// The empty generator list yields the zero cone. Fails with
    /// `NotPointed` if the positive hull contains a line.
    pub fn from_generators(ambient_dim: usize, gens: &[LatticeVector]) -> Result<Cone> {
        for g in gens {
            if g.dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: g.dim(),
                });
            }
        }
        let mut prim: Vec<LatticeVector> = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(LatticeVector::primitive)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();

        if prim.is_empty() {
            let equations = (0..ambient_dim)
                .map(|i| LatticeVector::unit(ambient_dim, i))
                .collect();
            return Ok(Cone::assemble(ambient_dim, Vec::new(), equations, Vec::new(), 0));
        }

        let gen_matrix = IntMatrix::from_rows(prim.iter().map(|g| g.coords().to_vec()).collect());
        let equations: Vec<LatticeVector> = gen_matrix
            .kernel_basis()
            .into_iter()
            .map(|row| LatticeVector::new(row).sign_normalized())
            .collect();
        let dim = ambient_dim - equations.len();

        let (_, dual_rays) = double_description(ambient_dim, &prim);
        let mut inequalities: Vec<LatticeVector> = dual_rays;
        inequalities.sort();

        // pointed <=> nothing is orthogonal to every facet normal and span
        // equation, i.e. the lineality space is trivial
        let mut stacked: Vec<Vec<BigInt>> = Vec::new();
        stacked.extend(equations.iter().map(|e| e.coords().to_vec()));
        stacked.extend(inequalities.iter().map(|n| n.coords().to_vec()));
        let lineality = IntMatrix::from_rows(stacked).kernel_basis();
        if let Some(line) = lineality.into_iter().next() {
            return Err(Error::NotPointed {
                direction: LatticeVector::new(line),
            });
        }

        // keep only the extreme rays among the input generators
        if prim.len() > 1 {
            prim.retain(|g| {
                let mut rows: Vec<Vec<BigInt>> =
                    equations.iter().map(|e| e.coords().to_vec()).collect();
                rows.extend(
                    inequalities
                        .iter()
                        .filter(|n| n.dot(g).is_zero())
                        .map(|n| n.coords().to_vec()),
                );
                IntMatrix::from_rows(rows).rank() == ambient_dim - 1
            });
        }
        debug_assert!(!prim.is_empty());
        debug_assert!(prim
            .iter()
            .all(|g| equations.iter().all(|e| e.dot(g).is_zero())
                && inequalities.iter().all(|n| !n.dot(g).is_negative())));

        Ok(Cone::assemble(ambient_dim, prim, equations, inequalities, dim))
    }

    fn assemble(
        ambient_dim: usize,
        generators: Vec<LatticeVector>,
        equations: Vec<LatticeVector>,
        inequalities: Vec<LatticeVector>,
        dim: usize,
    ) -> Cone {
        let eq_i64 = equations.iter().map(LatticeVector::as_i64).collect();
        let ineq_i64 = inequalities.iter().map(LatticeVector::as_i64).collect();
        Cone {
            ambient_dim,
            generators,
            equations,
            inequalities,
            dim,
            eq_i64,
            ineq_i64,
        }
    }

    pub fn zero(ambient_dim: usize) -> Cone {
        Cone::from_generators(ambient_dim, &[]).expect("zero cone")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero_cone(&self) -> bool {
        self.dim == 0
    }

    /// Primitive extreme rays, sorted lexicographically.
    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    /// Integer equations of the linear span.
    pub fn equations(&self) -> &[LatticeVector] {
        &self.equations
    }

    /// Irredundant facet normals (relative to the span).
    pub fn inequalities(&self) -> &[LatticeVector] {
        &self.inequalities
    }

    pub fn contains(&self, a: &LatticeVector) -> bool {
        debug_assert_eq!(a.dim(), self.ambient_dim);
        self.equations.iter().all(|e| e.dot(a).is_zero())
            && self.inequalities.iter().all(|n| !n.dot(a).is_negative())
    }

    /// True iff `a` satisfies all span equations and every facet inequality
    /// strictly; for the zero cone this means a = 0.
    pub fn relint_contains(&self, a: &LatticeVector) -> bool {
        debug_assert_eq!(a.dim(), self.ambient_dim);
        self.equations.iter().all(|e| e.dot(a).is_zero())
            && self.inequalities.iter().all(|n| n.dot(a).is_positive())
    }

    pub fn contains_i64(&self, point: &[i64]) -> bool {
        match (&self.eq_i64, &self.ineq_i64) {
            (Some(eqs), Some(ineqs)) => {
                eqs.iter().all(|e| dot_i64(e, point) == 0)
                    && ineqs.iter().all(|n| dot_i64(n, point) >= 0)
            }
            _ => self.contains(&LatticeVector::from_i64(point)),
        }
    }

    pub fn relint_contains_i64(&self, point: &[i64]) -> bool {
        match (&self.eq_i64, &self.ineq_i64) {
            (Some(eqs), Some(ineqs)) => {
                eqs.iter().all(|e| dot_i64(e, point) == 0)
                    && ineqs.iter().all(|n| dot_i64(n, point) > 0)
            }
            _ => self.relint_contains(&LatticeVector::from_i64(point)),
        }
    }

    /// All faces including the zero cone and the cone itself, sorted by
    /// (dimension, generators). Every face is spanned by the extreme rays
    /// lying on it, so faces are exactly the ray sets closed under
    /// intersecting facet ray sets.
    pub fn faces(&self) -> Vec<Cone> {
        if self.dim == 0 {
            return vec![self.clone()];
        }
        let nrays = self.generators.len();
        let full: BTreeSet<usize> = (0..nrays).collect();
        let mut sets: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        sets.insert(full);
        let facet_sets: Vec<BTreeSet<usize>> = self
            .inequalities
            .iter()
            .map(|n| {
                (0..nrays)
                    .filter(|&i| n.dot(&self.generators[i]).is_zero())
                    .collect()
            })
            .collect();
        let mut queue: Vec<BTreeSet<usize>> = facet_sets.clone();
        while let Some(s) = queue.pop() {
            if sets.insert(s.clone()) {
                for f in &facet_sets {
                    let meet: BTreeSet<usize> = s.intersection(f).copied().collect();
                    if !sets.contains(&meet) {
                        queue.push(meet);
                    }
                }
            }
        }
        let mut faces: Vec<Cone> = sets
            .into_iter()
            .map(|s| {
                let gens: Vec<LatticeVector> =
                    s.iter().map(|&i| self.generators[i].clone()).collect();
                Cone::from_generators(self.ambient_dim, &gens)
                    .expect("a face of a pointed cone is pointed")
            })
            .collect();
        faces.sort();
        faces.dedup();
        faces
    }

    /// The cone generated by this cone together with the extra point `w`.
    pub fn join_point(&self, w: &LatticeVector) -> Result<Cone> {
        let mut gens = self.generators.clone();
        gens.push(w.clone());
        Cone::from_generators(self.ambient_dim, &gens)
    }

    /// Intersection, re-extracted as a canonical cone record.
    pub fn intersection(&self, other: &Cone) -> Result<Cone> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        let mut constraints: Vec<LatticeVector> = Vec::new();
        for e in self.equations.iter().chain(&other.equations) {
            constraints.push(e.clone());
            constraints.push(e.neg());
        }
        constraints.extend(self.inequalities.iter().cloned());
        constraints.extend(other.inequalities.iter().cloned());
        let (lineality, rays) = double_description(self.ambient_dim, &constraints);
        debug_assert!(lineality.is_empty(), "intersection of pointed cones is pointed");
        Cone::from_generators(self.ambient_dim, &rays)
    }

    /// Lattice points of the cone (or of its relative interior) inside the
    /// window, in ascending lexicographic order.
    pub fn lattice_points(&self, window: &LatticeBox, relint_only: bool) -> Vec<LatticeVector> {
        let mut out = Vec::new();
        for p in window.points(self.ambient_dim) {
            let hit = if relint_only {
                self.relint_contains_i64(&p)
            } else {
                self.contains_i64(&p)
            };
            if hit {
                out.push(LatticeVector::from_i64(&p));
            }
        }
        out
    }

    /// The same cone viewed in R^(d + extra), embedded on the first d
    /// coordinates.
    pub fn extended(&self, extra: usize) -> Cone {
        let gens: Vec<LatticeVector> =
            self.generators.iter().map(|g| g.extended(extra)).collect();
        Cone::from_generators(self.ambient_dim + extra, &gens).expect("embedding preserves pointedness")
    }

    /// The point sum of all generators: an interior lattice point whenever
    /// the cone is nonzero.
    pub fn relint_point(&self) -> LatticeVector {
        let mut acc = LatticeVector::zero(self.ambient_dim);
        for g in &self.generators {
            acc = acc.add(g);
        }
        acc
    }
}

fn dot_i64(row: &[i64], point: &[i64]) -> i128 {
    row.iter()
        .zip(point)
        .map(|(&a, &b)| a as i128 * b as i128)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn lv(coords: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(coords)
    }

    pub(crate) fn cone2(rays: &[&[i64]]) -> Cone {
        let gens: Vec<LatticeVector> = rays.iter().map(|r| lv(r)).collect();
        Cone::from_generators(rays[0].len(), &gens).unwrap()
    }

    /// Independent face oracle: enumerate subsets of the halfspaces, turn
    /// each subset into equations and collect the distinct resulting cones.
    fn faces_by_tight_subsets(cone: &Cone) -> BTreeSet<Cone> {
        let ineqs = cone.inequalities();
        let mut found = BTreeSet::new();
        for mask in 0..(1u32 << ineqs.len()) {
            let mut constraints: Vec<LatticeVector> = Vec::new();
            for e in cone.equations() {
                constraints.push(e.clone());
                constraints.push(e.neg());
            }
            for (i, n) in ineqs.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    constraints.push(n.clone());
                    constraints.push(n.neg());
                } else {
                    constraints.push(n.clone());
                }
            }
            let (lin, rays) = double_description(cone.ambient_dim(), &constraints);
            assert!(lin.is_empty());
            found.insert(Cone::from_generators(cone.ambient_dim(), &rays).unwrap());
        }
        found
    }

    #[test]
    fn empty_generators_give_zero_cone() {
        let z = Cone::from_generators(2, &[]).unwrap();
        assert_eq!(z.dim(), 0);
        assert!(z.generators().is_empty());
        assert!(z.contains(&lv(&[0, 0])));
        assert!(!z.contains(&lv(&[1, 0])));
    }

    #[test]
    fn paper_cone_has_expected_rays() {
        let c = cone2(&[&[0, 1], &[2, 1]]);
        assert_eq!(c.dim(), 2);
        assert_eq!(c.generators(), &[lv(&[0, 1]), lv(&[2, 1])]);
    }

    #[test]
    fn opposite_rays_are_rejected() {
        let err = Cone::from_generators(2, &[lv(&[1, 0]), lv(&[-1, 0])]);
        assert!(matches!(err, Err(Error::NotPointed { .. })));
    }

    #[test]
    fn interior_generators_are_dropped() {
        let c = Cone::from_generators(2, &[lv(&[1, 0]), lv(&[1, 1]), lv(&[1, 2])]).unwrap();
        assert_eq!(c.generators(), &[lv(&[1, 0]), lv(&[1, 2])]);
    }

    #[test]
    fn faces_of_zero_cone() {
        let z = Cone::zero(3);
        assert_eq!(z.faces(), vec![z.clone()]);
    }

    #[test]
    fn faces_of_paper_cone_match_brute_force() {
        let c = cone2(&[&[0, 1], &[2, 1]]);
        let faces = c.faces();
        assert_eq!(faces.len(), 4);
        let oracle = faces_by_tight_subsets(&c);
        assert_eq!(faces.iter().cloned().collect::<BTreeSet<_>>(), oracle);
    }

    #[test]
    fn faces_of_cone_over_square_match_brute_force() {
        let c = cone2(&[&[1, 1, 1], &[-1, 1, 1], &[-1, -1, 1], &[1, -1, 1]]);
        assert_eq!(c.dim(), 3);
        let faces = c.faces();
        assert_eq!(faces.len(), 10); // 1 + 4 + 4 + 1
        let oracle = faces_by_tight_subsets(&c);
        assert_eq!(faces.iter().cloned().collect::<BTreeSet<_>>(), oracle);
    }

    #[test]
    fn relint_membership() {
        let z = Cone::zero(2);
        assert!(z.relint_contains(&lv(&[0, 0])));
        let c = cone2(&[&[0, 1], &[2, 1]]);
        assert!(c.relint_contains(&lv(&[1, 1])));
        assert!(!c.relint_contains(&lv(&[0, 1])));
        assert!(c.contains(&lv(&[0, 1])));
    }

    #[test]
    fn intersection_examples() {
        let c1 = cone2(&[&[0, 1], &[2, 1]]);
        assert_eq!(c1.intersection(&c1).unwrap(), c1);

        let c2 = cone2(&[&[0, 1], &[-2, 1]]);
        let shared = c1.intersection(&c2).unwrap();
        assert_eq!(shared, cone2(&[&[0, 1]]));

        let e1 = cone2(&[&[1, 0]]);
        let e2 = cone2(&[&[0, 1]]);
        assert_eq!(e1.intersection(&e2).unwrap(), Cone::zero(2));
    }

    #[test]
    fn join_examples() {
        let z = Cone::zero(3);
        let j = z.join_point(&lv(&[0, 0, 1])).unwrap();
        assert_eq!(j, cone2(&[&[0, 0, 1]]));

        let ray = Cone::from_generators(3, &[lv(&[1, 0, 0])]).unwrap();
        let j = ray.join_point(&lv(&[0, 0, 1])).unwrap();
        assert_eq!(j.dim(), 2);
        assert_eq!(j, cone2(&[&[1, 0, 0], &[0, 0, 1]]));

        let quad = cone2(&[&[1, 0, 0], &[0, 1, 0]]);
        let j = quad.join_point(&lv(&[0, 0, 1])).unwrap();
        assert_eq!(j.dim(), 3);
        // the base cone stays a face of the join
        assert!(j.faces().contains(&quad));
    }

    #[test]
    fn lattice_point_examples() {
        let window = LatticeBox::new(3).unwrap();
        let z = Cone::zero(2);
        assert_eq!(z.lattice_points(&window, false), vec![lv(&[0, 0])]);

        let ray = cone2(&[&[0, 1]]);
        let window2 = LatticeBox::new(2).unwrap();
        assert_eq!(
            ray.lattice_points(&window2, false),
            vec![lv(&[0, 0]), lv(&[0, 1]), lv(&[0, 2])]
        );

        let c = cone2(&[&[0, 1], &[2, 1]]);
        assert_eq!(
            c.lattice_points(&window2, true),
            vec![lv(&[1, 1]), lv(&[1, 2]), lv(&[2, 2])]
        );
    }

    #[test]
    fn relint_lattice_points_lie_in_cone() {
        let c = cone2(&[&[0, 1], &[2, 1]]);
        let window = LatticeBox::new(4).unwrap();
        let open: BTreeSet<_> = c.lattice_points(&window, true).into_iter().collect();
        let closed: BTreeSet<_> = c.lattice_points(&window, false).into_iter().collect();
        assert!(open.is_subset(&closed));
        for p in closed.difference(&open) {
            // boundary points lie on a proper face
            assert!(c
                .faces()
                .iter()
                .any(|f| f.dim() < c.dim() && f.contains(p)));
        }
    }

    #[test]
    fn round_trip_from_extreme_rays() {
        for cone in [
            cone2(&[&[0, 1], &[2, 1]]),
            cone2(&[&[1, 1, 1], &[-1, 1, 1], &[-1, -1, 1], &[1, -1, 1]]),
            cone2(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
        ] {
            let again = Cone::from_generators(cone.ambient_dim(), cone.generators()).unwrap();
            assert_eq!(cone, again);
        }
    }

    #[test]
    fn box_iteration_is_lexicographic() {
        let window = LatticeBox::new(1).unwrap();
        let pts: Vec<Vec<i64>> = window.points(2).collect();
        assert_eq!(pts.len(), 9);
        assert_eq!(pts[0], vec![-1, -1]);
        assert_eq!(pts[8], vec![1, 1]);
        let mut sorted = pts.clone();
        sorted.sort();
        assert_eq!(pts, sorted);
    }
}
