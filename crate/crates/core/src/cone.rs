//! Polyhedral cones with both descriptions kept in sync.
//!
//! A [`Cone`] is always stored with its V-description (extreme rays plus a
//! lineality basis) and its H-description (irredundant facet normals plus a
//! basis of implicit equalities). Conversion uses the incremental double
//! description method, inserting one inequality at a time; the dual
//! conversion runs the same routine on the polar cone.
//!
//! Both lists are canonical for the underlying set: lineality and equality
//! bases are in reduced row echelon form, rays are projected orthogonally to
//! the lineality space, every vector is a primitive integer vector, and the
//! lists are sorted lexicographically.

use std::collections::BTreeSet;

use crate::error::{check_len, Result};
use crate::linalg;
use crate::lp::{solve_lp, LinearProgram};
use crate::rational::{RatVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
struct Description {
    lines: Vec<RatVector>,
    rays: Vec<RatVector>,
}

impl Description {
    fn as_list(&self) -> Vec<RatVector> {
        let mut all: Vec<RatVector> = self.rays.clone();
        for l in &self.lines {
            all.push(l.clone());
            all.push(-l);
        }
        all.sort();
        all.dedup();
        all
    }

    fn canonical(self, rank: usize) -> Description {
        let lines = linalg::rref(&self.lines, rank)
            .iter()
            .map(RatVector::primitive)
            .collect::<Vec<_>>();
        let rays: BTreeSet<RatVector> = self
            .rays
            .iter()
            .map(|r| linalg::project_out(r, &lines).primitive())
            .filter(|r| !r.is_zero())
            .collect();
        Description {
            lines,
            rays: rays.into_iter().collect(),
        }
    }
}

/// Generators of `{x : f·x ≥ 0 for all f in inequalities}`.
fn double_description(rank: usize, inequalities: &[RatVector]) -> Description {
    let mut lines: Vec<RatVector> = (0..rank).map(|i| RatVector::unit(rank, i)).collect();
    let mut rays: Vec<RatVector> = Vec::new();
    let mut inserted: Vec<RatVector> = Vec::new();

    for f in inequalities.iter().filter(|f| !f.is_zero()) {
        inserted.push(f.clone());

        if let Some(idx) = lines.iter().position(|l| !f.dot(l).is_zero()) {
            let mut pivot = lines.remove(idx);
            if f.dot(&pivot).is_negative() {
                pivot = -&pivot;
            }
            let fp = f.dot(&pivot);
            let push_off = |v: &RatVector| v.add_scaled(&-(f.dot(v) / &fp), &pivot);
            lines = lines.iter().map(push_off).collect();
            rays = rays.iter().map(push_off).collect();
            rays.push(pivot);
            continue;
        }

        let values: Vec<Rational> = rays.iter().map(|r| f.dot(r)).collect();
        let mut next: Vec<RatVector> = rays
            .iter()
            .zip(&values)
            .filter(|(_, v)| !v.is_negative())
            .map(|(r, _)| r.clone())
            .collect();
        let target_rank = rank - lines.len() - 1;
        let mut seen: BTreeSet<Vec<usize>> = next.iter().map(|r| tight_set(&inserted, r)).collect();
        for (p, vp) in rays.iter().zip(&values).filter(|(_, v)| v.is_positive()) {
            for (n, vn) in rays.iter().zip(&values).filter(|(_, v)| v.is_negative()) {
                let candidate = n.scale(vp).add_scaled(&-vn, p);
                let tight = tight_set(&inserted, &candidate);
                let tight_rank = linalg::rank(tight.iter().map(|&i| &inserted[i]), rank);
                if tight_rank == target_rank && seen.insert(tight) {
                    next.push(candidate.primitive());
                }
            }
        }
        rays = next;
    }
    Description { lines, rays }
}

fn tight_set(inequalities: &[RatVector], x: &RatVector) -> Vec<usize> {
    inequalities
        .iter()
        .enumerate()
        .filter(|(_, f)| f.dot(x).is_zero())
        .map(|(i, _)| i)
        .collect()
}

/// A polyhedral cone `{x : f·x ≥ 0 for every facet f}`, equivalently the set
/// of nonnegative combinations of its generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    rank: usize,
    generators: Description,
    facets: Description,
}

impl Cone {
    /// The cone generated by `generators` (empty list gives `{0}`).
    pub fn from_generators(rank: usize, generators: &[RatVector]) -> Result<Cone> {
        for g in generators {
            check_len("cone generator", rank, g.len())?;
        }
        let facets = double_description(rank, generators).canonical(rank);
        let gens = double_description(rank, &facets.as_list()).canonical(rank);
        Ok(Cone {
            rank,
            generators: gens,
            facets,
        })
    }

    /// The cone cut out by `f·x ≥ 0` for each `f` (empty list gives all of ℚⁿ).
    pub fn from_facets(rank: usize, facets: &[RatVector]) -> Result<Cone> {
        for f in facets {
            check_len("cone facet", rank, f.len())?;
        }
        let gens = double_description(rank, facets).canonical(rank);
        let facets = double_description(rank, &gens.as_list()).canonical(rank);
        Ok(Cone {
            rank,
            generators: gens,
            facets,
        })
    }

    pub fn whole(rank: usize) -> Cone {
        Cone::from_facets(rank, &[]).expect("no vectors to mismatch")
    }

    pub fn zero(rank: usize) -> Cone {
        Cone::from_generators(rank, &[]).expect("no vectors to mismatch")
    }

    /// `{(x, 0)}` for `x` in this cone, one rank higher.
    pub fn lift_with_zero(&self) -> Cone {
        let gens: Vec<RatVector> = self
            .generators()
            .iter()
            .map(|g| g.extended(Rational::zero()))
            .collect();
        Cone::from_generators(self.rank + 1, &gens).expect("lifted generators share a rank")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Extreme rays, plus `±` each lineality basis vector.
    pub fn generators(&self) -> Vec<RatVector> {
        self.generators.as_list()
    }

    /// Irredundant facet normals, plus `±` each implicit equality.
    pub fn facets(&self) -> Vec<RatVector> {
        self.facets.as_list()
    }

    pub fn extreme_rays(&self) -> &[RatVector] {
        &self.generators.rays
    }

    pub fn lineality(&self) -> &[RatVector] {
        &self.generators.lines
    }

    /// Whether the cone contains no line.
    pub fn is_salient(&self) -> bool {
        self.generators.lines.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.facets.lines.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.rank - self.facets.lines.len()
    }

    /// Both representations populated. Construction already does the
    /// conversion, so this is a copy and trivially idempotent.
    pub fn dual_description(&self) -> Cone {
        self.clone()
    }

    /// Membership by the facet inequalities.
    pub fn contains(&self, x: &RatVector) -> Result<bool> {
        check_len("cone membership", self.rank, x.len())?;
        Ok(self.facets().iter().all(|f| !f.dot(x).is_negative()))
    }

    /// Membership by an LP over nonnegative combinations of the generators.
    pub fn contains_by_generators(&self, x: &RatVector) -> Result<bool> {
        check_len("cone membership", self.rank, x.len())?;
        let gens = self.generators();
        let mut lp = LinearProgram::new(RatVector::zeros(gens.len()));
        for coord in 0..self.rank {
            let row: RatVector = gens.iter().map(|g| g[coord].clone()).collect();
            lp = lp.eq(row, x[coord].clone());
        }
        Ok(solve_lp(&lp)?.is_feasible())
    }

    /// Strict interior relative to the whole ambient space; always false for
    /// cones that are not full-dimensional.
    pub fn contains_interior(&self, x: &RatVector) -> Result<bool> {
        check_len("cone interior", self.rank, x.len())?;
        if !self.is_full_dimensional() {
            return Ok(false);
        }
        Ok(self.facets.rays.iter().all(|f| f.dot(x).is_positive()))
    }

    /// Minkowski sum.
    pub fn sum(&self, other: &Cone) -> Result<Cone> {
        check_len("cone sum", self.rank, other.rank)?;
        let mut gens = self.generators();
        gens.extend(other.generators());
        Cone::from_generators(self.rank, &gens)
    }

    pub fn intersection(&self, other: &Cone) -> Result<Cone> {
        check_len("cone intersection", self.rank, other.rank)?;
        let mut facets = self.facets();
        facets.extend(other.facets());
        Cone::from_facets(self.rank, &facets)
    }

    /// `self ⊆ other`, by generator membership.
    pub fn is_subset_of(&self, other: &Cone) -> Result<bool> {
        check_len("cone containment", self.rank, other.rank)?;
        for g in self.generators() {
            if !other.contains(&g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Set equality via mutual generator containment.
    pub fn equals(&self, other: &Cone) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }
}
