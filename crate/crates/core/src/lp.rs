//! Exact two-phase simplex with mandatory certificates.
//!
//! Programs are stated as
//!
//! ```text
//! minimize c·x  subject to  a_i·x ≥ b_i  or  a_i·x = b_i,   x_j ≥ 0 for masked j
//! ```
//!
//! and every outcome carries a witness that [`verify_certificate`] checks by
//! substitution alone: a primal/dual pair with zero gap, a Farkas vector, or a
//! feasible point plus an improving ray. Pivoting follows Bland's least-index
//! rule, so the solver terminates on every rational input and is deterministic.

use serde::{Deserialize, Serialize};

use crate::error::{check_len, Result};
use crate::rational::{RatVector, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub coeffs: RatVector,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearProgram {
    /// Minimized.
    pub objective: RatVector,
    pub constraints: Vec<Constraint>,
    /// `nonneg[j]` constrains `x_j ≥ 0`; other variables are free.
    pub nonneg: Vec<bool>,
}

impl LinearProgram {
    /// A program over `objective.len()` variables, all nonnegative.
    pub fn new(objective: RatVector) -> Self {
        let n = objective.len();
        LinearProgram {
            objective,
            constraints: Vec::new(),
            nonneg: vec![true; n],
        }
    }

    pub fn with_free(mut self, var: usize) -> Self {
        self.nonneg[var] = false;
        self
    }

    pub fn ge(mut self, coeffs: RatVector, rhs: Rational) -> Self {
        self.constraints.push(Constraint {
            coeffs,
            relation: Relation::Ge,
            rhs,
        });
        self
    }

    pub fn eq(mut self, coeffs: RatVector, rhs: Rational) -> Self {
        self.constraints.push(Constraint {
            coeffs,
            relation: Relation::Eq,
            rhs,
        });
        self
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.num_vars();
        check_len("nonnegativity mask", n, self.nonneg.len())?;
        for row in &self.constraints {
            check_len("constraint row", n, row.coeffs.len())?;
        }
        Ok(())
    }

    fn is_feasible_point(&self, x: &RatVector) -> bool {
        if x.len() != self.num_vars() {
            return false;
        }
        let signs = self
            .nonneg
            .iter()
            .zip(x.iter())
            .all(|(&nn, v)| !nn || !v.is_negative());
        signs
            && self.constraints.iter().all(|row| {
                let lhs = row.coeffs.dot(x);
                match row.relation {
                    Relation::Ge => lhs >= row.rhs,
                    Relation::Eq => lhs == row.rhs,
                }
            })
    }

    /// `Aᵀy`, one entry per variable.
    fn transpose_times(&self, y: &RatVector) -> RatVector {
        (0..self.num_vars())
            .map(|j| {
                self.constraints
                    .iter()
                    .zip(y.iter())
                    .map(|(row, yi)| &row.coeffs[j] * yi)
                    .sum()
            })
            .collect()
    }

    /// Sign conditions on multipliers: `y_i ≥ 0` on `≥` rows, free on `=` rows.
    fn multipliers_have_valid_signs(&self, y: &RatVector) -> bool {
        y.len() == self.constraints.len()
            && self
                .constraints
                .iter()
                .zip(y.iter())
                .all(|(row, yi)| row.relation == Relation::Eq || !yi.is_negative())
    }

    fn rhs_dot(&self, y: &RatVector) -> Rational {
        self.constraints
            .iter()
            .zip(y.iter())
            .map(|(row, yi)| &row.rhs * yi)
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LpOutcome {
    Optimal {
        value: Rational,
        primal: RatVector,
        dual: RatVector,
    },
    /// `farkas` is normalized so that `b·y = 1`.
    Infeasible {
        farkas: RatVector,
    },
    Unbounded {
        point: RatVector,
        ray: RatVector,
    },
}

impl LpOutcome {
    pub fn status(&self) -> &'static str {
        match self {
            LpOutcome::Optimal { .. } => "optimal",
            LpOutcome::Infeasible { .. } => "infeasible",
            LpOutcome::Unbounded { .. } => "unbounded",
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible { .. })
    }
}

/// Checks the certificate in `out` against `lp` by exact substitution.
///
/// * optimal: `x` primal feasible, `y` dual feasible (`y_i ≥ 0` on `≥` rows,
///   `(Aᵀy)_j ≤ c_j` on nonnegative variables and `= c_j` on free ones), and
///   `c·x = value = b·y`;
/// * infeasible: `y` has the same sign pattern, `(Aᵀy)_j ≤ 0` on nonnegative
///   variables, `= 0` on free ones, and `b·y > 0`;
/// * unbounded: the point is feasible, the ray lies in the recession cone and
///   `c·ray < 0`.
pub fn verify_certificate(lp: &LinearProgram, out: &LpOutcome) -> bool {
    if lp.validate().is_err() {
        return false;
    }
    let n = lp.num_vars();
    match out {
        LpOutcome::Optimal {
            value,
            primal,
            dual,
        } => {
            if primal.len() != n || !lp.multipliers_have_valid_signs(dual) {
                return false;
            }
            if !lp.is_feasible_point(primal) || &lp.objective.dot(primal) != value {
                return false;
            }
            let aty = lp.transpose_times(dual);
            let dual_feasible = (0..n).all(|j| {
                if lp.nonneg[j] {
                    aty[j] <= lp.objective[j]
                } else {
                    aty[j] == lp.objective[j]
                }
            });
            dual_feasible && &lp.rhs_dot(dual) == value
        }
        LpOutcome::Infeasible { farkas } => {
            if !lp.multipliers_have_valid_signs(farkas) {
                return false;
            }
            let aty = lp.transpose_times(farkas);
            let combination_vanishes = (0..n).all(|j| {
                if lp.nonneg[j] {
                    !aty[j].is_positive()
                } else {
                    aty[j].is_zero()
                }
            });
            combination_vanishes && lp.rhs_dot(farkas).is_positive()
        }
        LpOutcome::Unbounded { point, ray } => {
            if ray.len() != n || !lp.is_feasible_point(point) {
                return false;
            }
            let ray_signs = (0..n).all(|j| !lp.nonneg[j] || !ray[j].is_negative());
            let recedes = lp.constraints.iter().all(|row| {
                let d = row.coeffs.dot(ray);
                match row.relation {
                    Relation::Ge => !d.is_negative(),
                    Relation::Eq => d.is_zero(),
                }
            });
            ray_signs && recedes && lp.objective.dot(ray).is_negative()
        }
    }
}

/// Solves `lp` exactly.
///
/// Errors only on malformed dimensions; infeasibility and unboundedness are
/// outcomes, not errors.
pub fn solve_lp(lp: &LinearProgram) -> Result<LpOutcome> {
    lp.validate()?;
    let sf = StandardForm::build(lp);
    Ok(sf.solve(lp))
}

/// `A'x' = b'`, `x' ≥ 0`, `b' ≥ 0` with an artificial identity appended.
struct StandardForm {
    /// Structural column count; artificial columns follow.
    structural: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    /// Row `i` of the original program was multiplied by `sign[i]` (±1).
    sign: Vec<Rational>,
    /// Original variable `j` is `x'[pos[j]] - x'[neg[j]]`.
    pos: Vec<usize>,
    neg: Vec<Option<usize>>,
    cost: Vec<Rational>,
    basis: Vec<usize>,
}

enum PhaseEnd {
    Optimal,
    Unbounded(usize),
}

impl StandardForm {
    fn build(lp: &LinearProgram) -> Self {
        let n = lp.num_vars();
        let m = lp.constraints.len();
        let mut pos = Vec::with_capacity(n);
        let mut neg = Vec::with_capacity(n);
        let mut next = 0;
        for &nn in &lp.nonneg {
            pos.push(next);
            next += 1;
            if nn {
                neg.push(None);
            } else {
                neg.push(Some(next));
                next += 1;
            }
        }
        let mut surplus = vec![None; m];
        for (i, row) in lp.constraints.iter().enumerate() {
            if row.relation == Relation::Ge {
                surplus[i] = Some(next);
                next += 1;
            }
        }
        let structural = next;

        let mut cost = vec![Rational::zero(); structural + m];
        for j in 0..n {
            cost[pos[j]] = lp.objective[j].clone();
            if let Some(k) = neg[j] {
                cost[k] = -&lp.objective[j];
            }
        }

        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut sign = Vec::with_capacity(m);
        for (i, row) in lp.constraints.iter().enumerate() {
            let s = if row.rhs.is_negative() {
                Rational::from_int(-1)
            } else {
                Rational::one()
            };
            let mut t = vec![Rational::zero(); structural + m];
            for j in 0..n {
                let a = &row.coeffs[j] * &s;
                if let Some(k) = neg[j] {
                    t[k] = -&a;
                }
                t[pos[j]] = a;
            }
            if let Some(k) = surplus[i] {
                t[k] = -&s;
            }
            t[structural + i] = Rational::one();
            rows.push(t);
            rhs.push(&row.rhs * &s);
            sign.push(s);
        }

        StandardForm {
            structural,
            rows,
            rhs,
            sign,
            pos,
            neg,
            cost,
            basis: (structural..structural + m).collect(),
        }
    }

    fn width(&self) -> usize {
        self.structural + self.rows.len()
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        if p != Rational::one() {
            for v in self.rows[r].iter_mut() {
                *v = &*v / &p;
            }
            self.rhs[r] = &self.rhs[r] / &p;
        }
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r {
                continue;
            }
            let f = self.rows[i][c].clone();
            if f.is_zero() {
                continue;
            }
            for (v, pv) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &(&f * pv);
                }
            }
            self.rhs[i] -= &(&f * &pivot_rhs);
        }
        self.basis[r] = c;
    }

    /// `c_B · B⁻¹ A'_j`, i.e. the cost of column `j` expressed in the basis.
    fn priced(&self, cost: &[Rational], j: usize) -> Rational {
        self.basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| !cost[b].is_zero())
            .map(|(i, &b)| &cost[b] * &self.rows[i][j])
            .sum()
    }

    fn run_phase(&mut self, cost: &[Rational], enterable: usize) -> PhaseEnd {
        loop {
            let mut in_basis = vec![false; self.width()];
            for &b in &self.basis {
                in_basis[b] = true;
            }
            // Bland: least index with negative reduced cost enters.
            let entering = (0..enterable)
                .filter(|&j| !in_basis[j])
                .find(|&j| (&cost[j] - self.priced(cost, j)).is_negative());
            let Some(j) = entering else {
                return PhaseEnd::Optimal;
            };
            // Bland: among minimum ratios, the least basic index leaves.
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][j];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leave {
                    None => true,
                    Some((k, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*k])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                None => return PhaseEnd::Unbounded(j),
                Some((i, _)) => self.pivot(i, j),
            }
        }
    }

    fn standard_point(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.width()];
        for (i, &b) in self.basis.iter().enumerate() {
            x[b] = self.rhs[i].clone();
        }
        x
    }

    fn to_original(&self, x: &[Rational]) -> RatVector {
        self.pos
            .iter()
            .zip(&self.neg)
            .map(|(&p, n)| match n {
                Some(k) => &x[p] - &x[*k],
                None => x[p].clone(),
            })
            .collect()
    }

    /// Row multipliers `c_B B⁻¹`, mapped back through the row sign flips.
    fn multipliers(&self, cost: &[Rational]) -> RatVector {
        (0..self.rows.len())
            .map(|k| &self.priced(cost, self.structural + k) * &self.sign[k])
            .collect()
    }

    fn solve(mut self, lp: &LinearProgram) -> LpOutcome {
        let m = self.rows.len();
        let mut phase_one = vec![Rational::zero(); self.width()];
        for c in phase_one.iter_mut().skip(self.structural) {
            *c = Rational::one();
        }
        // Phase one is bounded below by zero; only Optimal can come back.
        let enterable = self.width();
        let _ = self.run_phase(&phase_one, enterable);
        let infeasibility: Rational = self
            .basis
            .iter()
            .zip(&self.rhs)
            .filter(|(&b, _)| b >= self.structural)
            .map(|(_, v)| v.clone())
            .sum();
        if infeasibility.is_positive() {
            let y = self.multipliers(&phase_one);
            let scale = infeasibility.recip();
            return LpOutcome::Infeasible {
                farkas: y.scale(&scale),
            };
        }

        // Drive zero-level artificials out of the basis; rows where that is
        // impossible are redundant and keep their artificial at zero.
        for r in 0..m {
            if self.basis[r] >= self.structural {
                if let Some(c) = (0..self.structural).find(|&c| !self.rows[r][c].is_zero()) {
                    self.pivot(r, c);
                }
            }
        }

        let cost = self.cost.clone();
        match self.run_phase(&cost, self.structural) {
            PhaseEnd::Optimal => {
                let x = self.to_original(&self.standard_point());
                let value = lp.objective.dot(&x);
                LpOutcome::Optimal {
                    value,
                    primal: x,
                    dual: self.multipliers(&cost),
                }
            }
            PhaseEnd::Unbounded(j) => {
                let point = self.to_original(&self.standard_point());
                let mut d = vec![Rational::zero(); self.width()];
                d[j] = Rational::one();
                for (i, &b) in self.basis.iter().enumerate() {
                    d[b] = -&self.rows[i][j];
                }
                LpOutcome::Unbounded {
                    point,
                    ray: self.to_original(&d),
                }
            }
        }
    }
}
