//! Random instance generators and independent oracles shared by the
//! integration tests.
//!
//! The oracles deliberately avoid the crate's simplex and double description
//! code: LPs are solved by enumerating basic solutions, multiplicities by
//! bisection over `t` with feasibility decided by Fourier-Motzkin elimination.

#![allow(dead_code)]

use cutkosky_core::{
    BaseGeometry, BundleClass, BundleModel, Cone, LinearProgram, LpOutcome, RatVector, Rational,
    Relation, Stratum,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational `p/q` with `|p/q| ≤ bound` and `1 ≤ q ≤ max_den`.
pub fn rat(rng: &mut TestRng, bound: i64, max_den: i64) -> Rational {
    let d = rng.gen_range(1..=max_den);
    let p = rng.gen_range(-bound * d..=bound * d);
    Rational::new(p, d)
}

pub fn nonneg_rat(rng: &mut TestRng, bound: i64, max_den: i64) -> Rational {
    rat(rng, bound, max_den).abs()
}

pub fn int_vec(rng: &mut TestRng, len: usize, bound: i64) -> RatVector {
    (0..len)
        .map(|_| Rational::from_int(rng.gen_range(-bound..=bound)))
        .collect()
}

pub fn rat_vec(rng: &mut TestRng, len: usize, bound: i64, max_den: i64) -> RatVector {
    (0..len).map(|_| rat(rng, bound, max_den)).collect()
}

/// Curve base, `r + 1` line bundles with `1 ≤ r ≤ max_r`.
pub fn curve_model(rng: &mut TestRng, max_r: usize, bound: i64, max_den: i64) -> BundleModel {
    let r = rng.gen_range(1..=max_r);
    let degrees: Vec<Rational> = (0..=r).map(|_| rat(rng, bound, max_den)).collect();
    BundleModel::over_curve(None, &degrees).expect("curve models are valid")
}

/// A random salient full-dimensional cone in `ℚ²`.
pub fn plane_cone(rng: &mut TestRng) -> Cone {
    loop {
        let a = int_vec(rng, 2, 3);
        let b = int_vec(rng, 2, 3);
        let det = &a[0] * &b[1] - &a[1] * &b[0];
        if !det.is_zero() {
            return Cone::from_generators(2, &[a, b]).unwrap();
        }
    }
}

/// Rank-2 base with a random simplicial nef cone, `1 ≤ r ≤ max_r`.
pub fn surface_model(rng: &mut TestRng, max_r: usize, bound: i64, max_den: i64) -> BundleModel {
    let base = BaseGeometry::new(2, 2, plane_cone(rng), true, None).unwrap();
    let r = rng.gen_range(1..=max_r);
    let fibers = (0..=r).map(|_| rat_vec(rng, 2, bound, max_den)).collect();
    BundleModel::new(base, fibers).unwrap()
}

pub fn any_model(rng: &mut TestRng, max_den: i64) -> BundleModel {
    if rng.gen_bool(0.5) {
        curve_model(rng, 4, 5, max_den)
    } else {
        surface_model(rng, 2, 4, max_den)
    }
}

/// A point of `cone` (rays weighted, lines with arbitrary sign). With
/// `interior`, every generator gets positive weight.
pub fn cone_point(rng: &mut TestRng, cone: &Cone, max_den: i64, interior: bool) -> RatVector {
    let mut p = RatVector::zeros(cone.rank());
    for g in cone.extreme_rays() {
        let w = if interior {
            Rational::new(rng.gen_range(1..=4 * max_den), max_den)
        } else if rng.gen_bool(0.3) {
            Rational::zero()
        } else {
            nonneg_rat(rng, 4, max_den)
        };
        p = p.add_scaled(&w, g);
    }
    for l in cone.lineality() {
        p = p.add_scaled(&rat(rng, 3, max_den), l);
    }
    p
}

/// Simplex weights, some of them zero unless `positive`.
pub fn simplex(rng: &mut TestRng, len: usize, max_den: i64, positive: bool) -> Vec<Rational> {
    loop {
        let raw: Vec<Rational> = (0..len)
            .map(|_| {
                if !positive && rng.gen_bool(0.3) {
                    Rational::zero()
                } else {
                    Rational::new(rng.gen_range(1..=max_den), max_den)
                }
            })
            .collect();
        let total: Rational = raw.iter().cloned().sum();
        if total.is_positive() {
            return raw.iter().map(|x| x / &total).collect();
        }
    }
}

/// `π*n + λ Σ t_i d_i` with `n ∈ N_Y`: psef by construction, big when `big`.
pub fn psef_class(rng: &mut TestRng, model: &BundleModel, max_den: i64, big: bool) -> BundleClass {
    let n = cone_point(rng, model.base().nef_cone(), max_den, big);
    let lambda = if big {
        Rational::new(rng.gen_range(1..=3 * max_den), max_den)
    } else {
        nonneg_rat(rng, 3, max_den)
    };
    let t = simplex(rng, model.fibers().len(), max_den, big);
    let beta = model
        .fibers()
        .iter()
        .zip(&t)
        .fold(n, |acc, (l, ti)| acc.add_scaled(&-(&lambda * ti), l));
    BundleClass::new(beta, lambda)
}

pub fn big_class(rng: &mut TestRng, model: &BundleModel, max_den: i64) -> BundleClass {
    psef_class(rng, model, max_den, true)
}

/// A class with unconstrained coefficients.
pub fn raw_class(rng: &mut TestRng, model: &BundleModel, max_den: i64) -> BundleClass {
    BundleClass::new(
        rat_vec(rng, model.base().rank(), 4, max_den),
        rat(rng, 3, max_den),
    )
}

/// A point of the nef cone of `X`, on the boundary about a third of the time.
pub fn nef_class(rng: &mut TestRng, model: &BundleModel, max_den: i64) -> BundleClass {
    let cone = model.nef_cone();
    let interior = rng.gen_bool(0.5);
    BundleClass::from_vector(&cone_point(rng, &cone, max_den, interior))
}

pub fn random_stratum(rng: &mut TestRng, r: usize) -> Stratum {
    let all = Stratum::all_proper(r);
    all.choose(rng).expect("r ≥ 1 has proper strata").clone()
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

// ---------------------------------------------------------------------------
// Linear algebra, kept separate from the crate's own.

/// Row-reduces `rows` in place; returns pivot columns.
fn row_reduce(rows: &mut Vec<Vec<Rational>>, width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..rows[i].len() {
                    let delta = &f * &rows[r][j];
                    rows[i][j] -= &delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn matrix_rank(rows: &[RatVector], width: usize) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.entries().to_vec()).collect();
    row_reduce(&mut m, width).len()
}

pub fn null_space(rows: &[RatVector], width: usize) -> Vec<RatVector> {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.entries().to_vec()).collect();
    let pivots = row_reduce(&mut m, width);
    (0..width)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); width];
            v[free] = Rational::one();
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = -&row[free];
            }
            RatVector::new(v)
        })
        .collect()
}

/// Unique solution of `rows · x = rhs` when the rows have full column rank.
pub fn unique_solution(rows: &[RatVector], rhs: &[Rational], width: usize) -> Option<RatVector> {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut v = r.entries().to_vec();
            v.push(b.clone());
            v
        })
        .collect();
    let pivots = row_reduce(&mut m, width + 1);
    if pivots.len() != width || pivots.contains(&width) {
        return None;
    }
    Some(m.iter().map(|row| row[width].clone()).collect())
}

// ---------------------------------------------------------------------------
// LP oracle.

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    Infeasible,
    Unbounded,
    Optimal(Rational),
}

pub fn outcome_kind(out: &LpOutcome) -> OracleOutcome {
    match out {
        LpOutcome::Optimal { value, .. } => OracleOutcome::Optimal(value.clone()),
        LpOutcome::Infeasible { .. } => OracleOutcome::Infeasible,
        LpOutcome::Unbounded { .. } => OracleOutcome::Unbounded,
    }
}

/// Solves `lp` by enumerating vertices and extreme rays of the feasible
/// region intersected with the orthogonal complement of its lineality space.
pub fn lp_by_enumeration(lp: &LinearProgram) -> OracleOutcome {
    let n = lp.num_vars();
    let mut rows: Vec<(RatVector, Rational)> = Vec::new();
    for c in &lp.constraints {
        rows.push((c.coeffs.clone(), c.rhs.clone()));
        if c.relation == Relation::Eq {
            rows.push((-&c.coeffs, -c.rhs.clone()));
        }
    }
    for j in 0..n {
        if lp.nonneg[j] {
            rows.push((RatVector::unit(n, j), Rational::zero()));
        }
    }
    let g: Vec<RatVector> = rows.iter().map(|(a, _)| a.clone()).collect();
    let lineality = null_space(&g, n);
    for l in &lineality {
        rows.push((l.clone(), Rational::zero()));
        rows.push((-l, Rational::zero()));
    }
    rows.dedup();
    let feasible = |x: &RatVector| rows.iter().all(|(a, b)| &a.dot(x) >= b);

    if n == 0 {
        return if feasible(&RatVector::zeros(0)) {
            OracleOutcome::Optimal(Rational::zero())
        } else {
            OracleOutcome::Infeasible
        };
    }

    let mut best: Option<Rational> = None;
    for subset in combinations(rows.len(), n) {
        let a: Vec<RatVector> = subset.iter().map(|&i| rows[i].0.clone()).collect();
        let b: Vec<Rational> = subset.iter().map(|&i| rows[i].1.clone()).collect();
        if let Some(x) = unique_solution(&a, &b, n) {
            if feasible(&x) {
                let v = lp.objective.dot(&x);
                if best.as_ref().is_none_or(|cur| &v < cur) {
                    best = Some(v);
                }
            }
        }
    }
    let Some(best) = best else {
        return OracleOutcome::Infeasible;
    };
    if lineality.iter().any(|l| !lp.objective.dot(l).is_zero()) {
        return OracleOutcome::Unbounded;
    }
    for subset in combinations(rows.len(), n - 1) {
        let a: Vec<RatVector> = subset.iter().map(|&i| rows[i].0.clone()).collect();
        if matrix_rank(&a, n) != n - 1 {
            continue;
        }
        let d = null_space(&a, n).pop().expect("corank one");
        for dir in [d.clone(), -&d] {
            let recedes = rows.iter().all(|(a, _)| !a.dot(&dir).is_negative());
            if recedes && lp.objective.dot(&dir).is_negative() {
                return OracleOutcome::Unbounded;
            }
        }
    }
    OracleOutcome::Optimal(best)
}

// ---------------------------------------------------------------------------
// Multiplicity oracle.

/// `coeffs · w + t_coeff · t ≥ rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Ineq {
    coeffs: Vec<Rational>,
    t_coeff: Rational,
    rhs: Rational,
}

impl Ineq {
    fn normalized(mut self) -> Ineq {
        let scale = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.t_coeff))
            .find(|x| !x.is_zero())
            .map(Rational::abs);
        if let Some(s) = scale {
            let inv = s.recip();
            for c in self.coeffs.iter_mut() {
                *c = &*c * &inv;
            }
            self.t_coeff = &self.t_coeff * &inv;
            self.rhs = &self.rhs * &inv;
        }
        self
    }
}

fn eliminate(rows: Vec<Ineq>, k: usize) -> Vec<Ineq> {
    let (mut pos, mut neg, mut out) = (Vec::new(), Vec::new(), Vec::new());
    for r in rows {
        if r.coeffs[k].is_positive() {
            pos.push(r);
        } else if r.coeffs[k].is_negative() {
            neg.push(r);
        } else {
            out.push(r);
        }
    }
    for p in &pos {
        for q in &neg {
            let a = p.coeffs[k].clone();
            let b = -q.coeffs[k].clone();
            let combined = Ineq {
                coeffs: p
                    .coeffs
                    .iter()
                    .zip(&q.coeffs)
                    .map(|(x, y)| &b * x + &a * y)
                    .collect(),
                t_coeff: &b * &p.t_coeff + &a * &q.t_coeff,
                rhs: &b * &p.rhs + &a * &q.rhs,
            };
            out.push(combined);
        }
    }
    let mut uniq: Vec<Ineq> = Vec::new();
    for r in out {
        let r = r.normalized();
        let trivial =
            r.coeffs.iter().all(Rational::is_zero) && r.t_coeff.is_zero() && !r.rhs.is_positive();
        if !trivial && !uniq.contains(&r) {
            uniq.push(r);
        }
    }
    uniq
}

/// Constraints `c·t ≥ b` describing `{t : ∃ w ≥ 0, Σw = λ, β + Σ w_i l_i ∈ N_Y,
/// Σ_{i∈I} w_i ≤ t}`.
fn projected_constraints(
    model: &BundleModel,
    alpha: &BundleClass,
    s: &Stratum,
) -> Vec<(Rational, Rational)> {
    let m = model.fibers().len();
    let facets = model.base().nef_cone().facets();
    let mut rows = Vec::new();
    for j in 0..m {
        rows.push(Ineq {
            coeffs: RatVector::unit(m, j).into_entries(),
            t_coeff: Rational::zero(),
            rhs: Rational::zero(),
        });
    }
    for f in &facets {
        rows.push(Ineq {
            coeffs: model.fibers().iter().map(|l| f.dot(l)).collect(),
            t_coeff: Rational::zero(),
            rhs: -f.dot(&alpha.beta),
        });
    }
    rows.push(Ineq {
        coeffs: (0..m)
            .map(|i| {
                if s.contains(i) {
                    -Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect(),
        t_coeff: Rational::one(),
        rhs: Rational::zero(),
    });
    // Substitute w_0 = λ − Σ_{i≥1} w_i.
    let rows: Vec<Ineq> = rows
        .into_iter()
        .map(|r| {
            let c0 = r.coeffs[0].clone();
            Ineq {
                coeffs: std::iter::once(Rational::zero())
                    .chain(r.coeffs[1..].iter().map(|c| c - &c0))
                    .collect(),
                t_coeff: r.t_coeff,
                rhs: &r.rhs - &(&c0 * &alpha.lambda),
            }
        })
        .collect();
    let rows = (1..m).fold(rows, eliminate);
    rows.into_iter().map(|r| (r.t_coeff, r.rhs)).collect()
}

/// The simplest rational (least denominator, then least numerator) in
/// `[lo, hi]`, `0 ≤ lo ≤ hi`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    let ceil = -(-lo).floor();
    if &ceil <= hi {
        return ceil;
    }
    let fl = lo.floor();
    let inner = simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

/// `ν(α, V_I)` by bisection over `t ∈ [0, λ]`; `None` when `α` is not psef.
pub fn nu_by_bisection(model: &BundleModel, alpha: &BundleClass, s: &Stratum) -> Option<Rational> {
    let cons = projected_constraints(model, alpha, s);
    let holds = |t: &Rational| cons.iter().all(|(c, b)| &(c * t) >= b);
    let lambda = alpha.lambda.clone();
    if lambda.is_negative() || !holds(&lambda) {
        return None;
    }
    if holds(&Rational::zero()) {
        return Some(Rational::zero());
    }
    let (mut lo, mut hi) = (Rational::zero(), lambda);
    let step = Rational::new(1, 1 << 40);
    let eps = &step * &step;
    while &hi - &lo > eps {
        let mid = (&lo + &hi) * Rational::new(1, 2);
        if holds(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let nu = simplest_between(&lo, &hi);
    assert!(
        holds(&nu),
        "simplest rational in the final bracket must be feasible"
    );
    Some(nu)
}

// ---------------------------------------------------------------------------
// Reference certificate checker, written from the LP optimality and Farkas
// conditions without reusing the crate's verifier.

pub fn reference_check(lp: &LinearProgram, out: &LpOutcome) -> bool {
    let n = lp.num_vars();
    let m = lp.constraints.len();
    let primal_ok = |x: &RatVector| {
        x.len() == n
            && (0..n).all(|j| !lp.nonneg[j] || !x[j].is_negative())
            && lp.constraints.iter().all(|c| {
                let v = c.coeffs.dot(x);
                match c.relation {
                    Relation::Ge => v >= c.rhs,
                    Relation::Eq => v == c.rhs,
                }
            })
    };
    let multiplier_ok = |y: &RatVector| {
        y.len() == m
            && lp
                .constraints
                .iter()
                .zip(y.iter())
                .all(|(c, yi)| c.relation == Relation::Eq || !yi.is_negative())
    };
    let column = |j: usize, y: &RatVector| -> Rational {
        lp.constraints
            .iter()
            .zip(y.iter())
            .map(|(c, yi)| &c.coeffs[j] * yi)
            .sum()
    };
    let rhs_dot = |y: &RatVector| -> Rational {
        lp.constraints
            .iter()
            .zip(y.iter())
            .map(|(c, yi)| &c.rhs * yi)
            .sum()
    };
    match out {
        LpOutcome::Optimal {
            value,
            primal,
            dual,
        } => {
            primal_ok(primal)
                && multiplier_ok(dual)
                && &lp.objective.dot(primal) == value
                && &rhs_dot(dual) == value
                && (0..n).all(|j| {
                    let col = column(j, dual);
                    if lp.nonneg[j] {
                        col <= lp.objective[j]
                    } else {
                        col == lp.objective[j]
                    }
                })
        }
        LpOutcome::Infeasible { farkas } => {
            multiplier_ok(farkas)
                && rhs_dot(farkas).is_positive()
                && (0..n).all(|j| {
                    let col = column(j, farkas);
                    if lp.nonneg[j] {
                        !col.is_positive()
                    } else {
                        col.is_zero()
                    }
                })
        }
        LpOutcome::Unbounded { point, ray } => {
            primal_ok(point)
                && ray.len() == n
                && (0..n).all(|j| !lp.nonneg[j] || !ray[j].is_negative())
                && lp.constraints.iter().all(|c| {
                    let v = c.coeffs.dot(ray);
                    match c.relation {
                        Relation::Ge => !v.is_negative(),
                        Relation::Eq => v.is_zero(),
                    }
                })
                && lp.objective.dot(ray).is_negative()
        }
    }
}

/// Every single-entry perturbation of a certificate by `delta`.
pub fn mutations(out: &LpOutcome, delta: &Rational) -> Vec<LpOutcome> {
    fn bump(v: &RatVector, i: usize, delta: &Rational) -> RatVector {
        let mut w = v.clone();
        w[i] = &w[i] + delta;
        w
    }
    let mut res = Vec::new();
    match out {
        LpOutcome::Optimal {
            value,
            primal,
            dual,
        } => {
            res.push(LpOutcome::Optimal {
                value: value + delta,
                primal: primal.clone(),
                dual: dual.clone(),
            });
            for i in 0..primal.len() {
                res.push(LpOutcome::Optimal {
                    value: value.clone(),
                    primal: bump(primal, i, delta),
                    dual: dual.clone(),
                });
            }
            for i in 0..dual.len() {
                res.push(LpOutcome::Optimal {
                    value: value.clone(),
                    primal: primal.clone(),
                    dual: bump(dual, i, delta),
                });
            }
        }
        LpOutcome::Infeasible { farkas } => {
            for i in 0..farkas.len() {
                res.push(LpOutcome::Infeasible {
                    farkas: bump(farkas, i, delta),
                });
            }
        }
        LpOutcome::Unbounded { point, ray } => {
            for i in 0..point.len() {
                res.push(LpOutcome::Unbounded {
                    point: bump(point, i, delta),
                    ray: ray.clone(),
                });
            }
            for i in 0..ray.len() {
                res.push(LpOutcome::Unbounded {
                    point: point.clone(),
                    ray: bump(ray, i, delta),
                });
            }
        }
    }
    res
}

/// A random LP with up to four variables and four constraints.
pub fn small_lp(rng: &mut TestRng) -> LinearProgram {
    let n = rng.gen_range(1..=4);
    let m = rng.gen_range(1..=4);
    let mut lp = LinearProgram::new(int_vec(rng, n, 3));
    for _ in 0..m {
        let coeffs = rat_vec(rng, n, 3, 2);
        let rhs = rat(rng, 4, 2);
        lp = if rng.gen_bool(0.25) {
            lp.eq(coeffs, rhs)
        } else {
            lp.ge(coeffs, rhs)
        };
    }
    for j in 0..n {
        if rng.gen_bool(0.2) {
            lp = lp.with_free(j);
        }
    }
    lp
}
