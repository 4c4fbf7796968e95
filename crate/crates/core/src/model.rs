//! The split projective bundle `X = P(L_0 ⊕ … ⊕ L_r) → Y` and the positivity
//! invariants of classes on it.
//!
//! The class lattice of `X` is `N¹(Y) ⊕ ℚh`, so a class is a pair `(β, λ)`
//! standing for `π*β + λh`. Writing `l_i = c₁(L_i)` and `d_i` for the class of
//! the coordinate hypersurface `D_i`, the relation `d_i + l_i = h` gives
//! `d_i = (−l_i, 1)`.
//!
//! With `N_Y` the nef cone of the base (assumed equal to its psef cone):
//!
//! * `α` is nef iff `λ ≥ 0` and `β + λ l_i ∈ N_Y` for every `i`;
//! * `α` is psef iff `λ ≥ 0` and `β + λ Σ t_i l_i ∈ N_Y` for some simplex
//!   weights `t`;
//! * the generic minimal multiplicity along the stratum `V_I = ⋂_{i∈I} D_i`
//!   is the least `t ≥ 0` such that `β + t·conv(l_i : i∈I) + (λ−t)·conv(l_j : j∉I)`
//!   meets `N_Y`.
//!
//! The last condition is bilinear in `t` and the convex weights. Substituting
//! `u_i = t·a_i` and `v_j = (λ−t)·b_j` turns it into the linear program
//!
//! ```text
//! minimize Σ_{i∈I} w_i   over w ≥ 0,   Σ w = λ,   β + Σ w_i l_i ∈ N_Y
//! ```
//!
//! solved exactly with certificates by [`crate::lp`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cone::Cone;
use crate::error::{check_len, Error, Result, Violation};
use crate::lp::{solve_lp, verify_certificate, LinearProgram, LpOutcome};
use crate::rational::{RatVector, Rational};

/// The base `Y`: its class lattice rank, dimension and nef cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseGeometry {
    rank: usize,
    dim: usize,
    nef_cone: Cone,
    canonical: Option<RatVector>,
}

impl BaseGeometry {
    /// Validates the standing assumptions: positive rank and dimension, a
    /// salient full-dimensional nef cone, and nef cone equal to psef cone.
    pub fn new(
        rank: usize,
        dim: usize,
        nef_cone: Cone,
        nef_equals_psef: bool,
        canonical: Option<RatVector>,
    ) -> Result<BaseGeometry> {
        if rank == 0 {
            return Err(Error::Validation(Violation::ZeroRank));
        }
        if dim == 0 {
            return Err(Error::Validation(Violation::ZeroDimension));
        }
        if !nef_equals_psef {
            return Err(Error::Validation(Violation::NefNotPsef));
        }
        if nef_cone.rank() != rank {
            return Err(Error::Validation(Violation::RankMismatch {
                what: "nef cone".into(),
                expected: rank,
                found: nef_cone.rank(),
            }));
        }
        if !nef_cone.is_salient() {
            return Err(Error::Validation(Violation::NonSalientNefCone));
        }
        if !nef_cone.is_full_dimensional() {
            return Err(Error::Validation(Violation::NefConeNotFullDimensional));
        }
        if let Some(k) = &canonical {
            if k.len() != rank {
                return Err(Error::Validation(Violation::RankMismatch {
                    what: "canonical class".into(),
                    expected: rank,
                    found: k.len(),
                }));
            }
        }
        Ok(BaseGeometry {
            rank,
            dim,
            nef_cone,
            canonical,
        })
    }

    /// A smooth curve; classes are identified with their degree.
    pub fn curve(canonical_degree: Option<Rational>) -> BaseGeometry {
        let nef = Cone::from_generators(1, &[RatVector::from_ints(&[1])]).expect("rank-one ray");
        BaseGeometry::new(
            1,
            1,
            nef,
            true,
            canonical_degree.map(|k| RatVector::new(vec![k])),
        )
        .expect("curve base is valid")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nef_cone(&self) -> &Cone {
        &self.nef_cone
    }

    pub fn canonical(&self) -> Option<&RatVector> {
        self.canonical.as_ref()
    }

    /// Rank one, dimension one and nef cone `{x ≥ 0}`.
    pub fn is_curve(&self) -> bool {
        self.rank == 1
            && self.dim == 1
            && self
                .nef_cone
                .contains(&RatVector::from_ints(&[1]))
                .unwrap_or(false)
    }
}

/// A class `π*β + λh` on `X`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BundleClass {
    pub beta: RatVector,
    pub lambda: Rational,
}

impl BundleClass {
    pub fn new(beta: RatVector, lambda: Rational) -> BundleClass {
        BundleClass { beta, lambda }
    }

    /// Coordinates `(β, λ)` in the rank `ρ + 1` class lattice.
    pub fn to_vector(&self) -> RatVector {
        self.beta.extended(self.lambda.clone())
    }

    pub fn from_vector(v: &RatVector) -> BundleClass {
        let (last, init) = v
            .entries()
            .split_last()
            .expect("class vector has a λ entry");
        BundleClass {
            beta: RatVector::new(init.to_vec()),
            lambda: last.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> BundleClass {
        BundleClass {
            beta: self.beta.scale(c),
            lambda: &self.lambda * c,
        }
    }

    pub fn add(&self, other: &BundleClass) -> BundleClass {
        BundleClass {
            beta: &self.beta + &other.beta,
            lambda: &self.lambda + &other.lambda,
        }
    }

    pub fn sub(&self, other: &BundleClass) -> BundleClass {
        BundleClass {
            beta: &self.beta - &other.beta,
            lambda: &self.lambda - &other.lambda,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.beta.is_zero() && self.lambda.is_zero()
    }
}

impl fmt::Display for BundleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(beta = {}, lambda = {})", self.beta, self.lambda)
    }
}

/// `V_I`, the intersection of the coordinate hypersurfaces `D_i`, `i ∈ I`.
///
/// `I` is a proper subset of `{0, …, r}`; the empty set stands for `X`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Stratum(Vec<usize>);

impl Stratum {
    /// Sorts `indices`; rejects duplicates, indices above `r`, and the full set.
    pub fn new(indices: impl IntoIterator<Item = usize>, r: usize) -> Result<Stratum> {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        if idx.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidStratum(format!("repeated index in {idx:?}")));
        }
        if let Some(&bad) = idx.iter().find(|&&i| i > r) {
            return Err(Error::InvalidStratum(format!(
                "index {bad} out of range 0..={r}"
            )));
        }
        if idx.len() == r + 1 {
            return Err(Error::InvalidStratum(
                "the hypersurfaces D_0, …, D_r have empty common intersection".into(),
            ));
        }
        Ok(Stratum(idx))
    }

    pub fn whole() -> Stratum {
        Stratum(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn codim(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &Stratum) -> bool {
        self.0.iter().all(|&i| other.contains(i))
    }

    /// `J = {0, …, r} ∖ I`.
    pub fn complement(&self, r: usize) -> Vec<usize> {
        (0..=r).filter(|&i| !self.contains(i)).collect()
    }

    /// Every proper nonempty stratum, by codimension then lexicographically.
    pub fn all_proper(r: usize) -> Vec<Stratum> {
        let mut out = Vec::new();
        for size in 1..=r {
            let mut combo: Vec<usize> = (0..size).collect();
            loop {
                out.push(Stratum(combo.clone()));
                // next combination of `size` elements from 0..=r
                let Some(pos) = (0..size).rev().find(|&p| combo[p] < r + 1 - size + p) else {
                    break;
                };
                combo[pos] += 1;
                for p in pos + 1..size {
                    combo[p] = combo[p - 1] + 1;
                }
            }
        }
        out
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// An LP together with its solver outcome; checkable without re-solving.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub program: LinearProgram,
    pub outcome: LpOutcome,
}

impl Certificate {
    pub fn verify(&self) -> bool {
        verify_certificate(&self.program, &self.outcome)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PsefResult {
    Psef {
        /// Convex weights `t_i` with `β + λ Σ t_i l_i ∈ N_Y`.
        simplex_weights: Vec<Rational>,
        nef_point: RatVector,
        certificate: Certificate,
    },
    NotPsef {
        certificate: Certificate,
    },
}

impl PsefResult {
    pub fn is_psef(&self) -> bool {
        matches!(self, PsefResult::Psef { .. })
    }

    pub fn certificate(&self) -> &Certificate {
        match self {
            PsefResult::Psef { certificate, .. } | PsefResult::NotPsef { certificate } => {
                certificate
            }
        }
    }
}

/// Optimal multiplicity LP solution: `weights[i]` is `u_i` for `i ∈ I` and
/// `v_i` otherwise; they sum to `λ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityWitness {
    pub weights: Vec<Rational>,
    /// `β + Σ w_i l_i`, a point of `N_Y`.
    pub nef_point: RatVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum MultiplicityResult {
    Value {
        nu: Rational,
        witness: MultiplicityWitness,
        certificate: Certificate,
    },
    NotPsef {
        certificate: Certificate,
    },
}

impl MultiplicityResult {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            MultiplicityResult::Value { nu, .. } => Some(nu),
            MultiplicityResult::NotPsef { .. } => None,
        }
    }

    pub fn certificate(&self) -> &Certificate {
        match self {
            MultiplicityResult::Value { certificate, .. }
            | MultiplicityResult::NotPsef { certificate } => certificate,
        }
    }
}

/// Largest `k` such that the class is nef in codimension `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NefCodim {
    Codim(usize),
    NotPsef,
}

impl fmt::Display for NefCodim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NefCodim::Codim(k) => write!(f, "{k}"),
            NefCodim::NotPsef => f.write_str("not psef"),
        }
    }
}

/// `α = Z + N` with `N = Σ ν_i d_i` over the hypersurfaces `D_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZariskiDecomposition {
    /// `ν(α, D_i)` for `i = 0, …, r`.
    pub coefficients: Vec<Rational>,
    pub negative_part: BundleClass,
    pub projection: BundleClass,
    #[serde(skip)]
    pub certificates: Vec<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleModel {
    base: BaseGeometry,
    fibers: Vec<RatVector>,
    psef_cone: Cone,
}

impl BundleModel {
    /// `fibers` are `l_0, …, l_r`.
    pub fn new(base: BaseGeometry, fibers: Vec<RatVector>) -> Result<BundleModel> {
        if fibers.is_empty() {
            return Err(Error::Validation(Violation::NoFibers));
        }
        for (i, l) in fibers.iter().enumerate() {
            if l.len() != base.rank {
                return Err(Error::Validation(Violation::RankMismatch {
                    what: format!("fiber l_{i}"),
                    expected: base.rank,
                    found: l.len(),
                }));
            }
        }
        let all: Vec<usize> = (0..fibers.len()).collect();
        let psef_cone = projected_cone(&base, &fibers, &all);
        Ok(BundleModel {
            base,
            fibers,
            psef_cone,
        })
    }

    /// A curve base with the given fiber degrees.
    pub fn over_curve(
        canonical_degree: Option<Rational>,
        degrees: &[Rational],
    ) -> Result<BundleModel> {
        BundleModel::new(
            BaseGeometry::curve(canonical_degree),
            degrees
                .iter()
                .map(|d| RatVector::new(vec![d.clone()]))
                .collect(),
        )
    }

    pub fn base(&self) -> &BaseGeometry {
        &self.base
    }

    pub fn fibers(&self) -> &[RatVector] {
        &self.fibers
    }

    /// The bundle has rank `r + 1`.
    pub fn r(&self) -> usize {
        self.fibers.len() - 1
    }

    /// `dim X = m + r`.
    pub fn n(&self) -> usize {
        self.base.dim + self.r()
    }

    pub fn class_rank(&self) -> usize {
        self.base.rank + 1
    }

    /// `d_i = h − π*l_i`, the class of `D_i`.
    pub fn hypersurface_class(&self, i: usize) -> BundleClass {
        BundleClass::new(-&self.fibers[i], Rational::one())
    }

    /// `h`, the tautological class.
    pub fn tautological(&self) -> BundleClass {
        BundleClass::new(RatVector::zeros(self.base.rank), Rational::one())
    }

    fn check_class(&self, alpha: &BundleClass) -> Result<()> {
        check_len("class beta", self.base.rank, alpha.beta.len())
    }

    fn check_stratum(&self, s: &Stratum) -> Result<()> {
        Stratum::new(s.indices().iter().copied(), self.r()).map(|_| ())
    }

    /// The multiplicity LP for `α` along `V_I` (objective zero when `I = ∅`).
    pub fn multiplicity_program(&self, alpha: &BundleClass, s: &Stratum) -> Result<LinearProgram> {
        self.check_class(alpha)?;
        self.check_stratum(s)?;
        let count = self.fibers.len();
        let objective: RatVector = (0..count)
            .map(|i| {
                if s.contains(i) {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        let mut lp = LinearProgram::new(objective).eq(
            RatVector::new(vec![Rational::one(); count]),
            alpha.lambda.clone(),
        );
        for f in self.base.nef_cone.facets() {
            let row: RatVector = self.fibers.iter().map(|l| f.dot(l)).collect();
            lp = lp.ge(row, -f.dot(&alpha.beta));
        }
        Ok(lp)
    }

    fn solve_weights(&self, alpha: &BundleClass, s: &Stratum) -> Result<Certificate> {
        let program = self.multiplicity_program(alpha, s)?;
        let outcome = solve_lp(&program)?;
        debug_assert!(verify_certificate(&program, &outcome));
        Ok(Certificate { program, outcome })
    }

    fn nef_point(&self, alpha: &BundleClass, weights: &RatVector) -> RatVector {
        self.fibers
            .iter()
            .zip(weights.iter())
            .fold(alpha.beta.clone(), |acc, (l, w)| acc.add_scaled(w, l))
    }

    pub fn is_psef(&self, alpha: &BundleClass) -> Result<PsefResult> {
        let certificate = self.solve_weights(alpha, &Stratum::whole())?;
        Ok(match &certificate.outcome {
            LpOutcome::Optimal { primal, .. } => {
                let nef_point = self.nef_point(alpha, primal);
                let simplex_weights = if alpha.lambda.is_zero() {
                    let mut t = vec![Rational::zero(); self.fibers.len()];
                    t[0] = Rational::one();
                    t
                } else {
                    primal.iter().map(|w| w / &alpha.lambda).collect()
                };
                PsefResult::Psef {
                    simplex_weights,
                    nef_point,
                    certificate,
                }
            }
            LpOutcome::Infeasible { .. } => PsefResult::NotPsef { certificate },
            LpOutcome::Unbounded { .. } => unreachable!("feasibility LP has a zero objective"),
        })
    }

    /// Vertex test: `λ ≥ 0` and `β + λ l_i ∈ N_Y` for every `i`.
    pub fn is_nef(&self, alpha: &BundleClass) -> Result<bool> {
        Ok(self.nef_violation(alpha)?.is_none())
    }

    /// The first failing vertex test, as `(i, facet)` with `facet·(β + λ l_i) < 0`.
    /// A negative `λ` is reported as `i = None` with the `λ ≥ 0` facet.
    pub fn nef_violation(&self, alpha: &BundleClass) -> Result<Option<(Option<usize>, RatVector)>> {
        self.check_class(alpha)?;
        if alpha.lambda.is_negative() {
            return Ok(Some((
                None,
                RatVector::unit(self.class_rank(), self.base.rank),
            )));
        }
        let facets = self.base.nef_cone.facets();
        for (i, l) in self.fibers.iter().enumerate() {
            let point = alpha.beta.add_scaled(&alpha.lambda, l);
            if let Some(f) = facets.iter().find(|f| f.dot(&point).is_negative()) {
                return Ok(Some((Some(i), f.clone())));
            }
        }
        Ok(None)
    }

    /// The psef cone of `X`, `(N_Y × {0}) + cone{d_i}`.
    pub fn psef_cone(&self) -> &Cone {
        &self.psef_cone
    }

    /// The nef cone of `X`: `λ ≥ 0` and `f·β + λ f·l_i ≥ 0` for every facet `f`
    /// of `N_Y` and every `i`.
    pub fn nef_cone(&self) -> Cone {
        let rank = self.class_rank();
        let mut facets = vec![RatVector::unit(rank, self.base.rank)];
        for f in self.base.nef_cone.facets() {
            for l in &self.fibers {
                facets.push(f.extended(f.dot(l)));
            }
        }
        Cone::from_facets(rank, &facets).expect("facets built at class rank")
    }

    /// Interior of the psef cone.
    pub fn is_big(&self, alpha: &BundleClass) -> Result<bool> {
        self.check_class(alpha)?;
        self.psef_cone.contains_interior(&alpha.to_vector())
    }

    /// Generic minimal multiplicity of `α` along `V_I`.
    pub fn min_multiplicity(&self, alpha: &BundleClass, s: &Stratum) -> Result<MultiplicityResult> {
        let certificate = self.solve_weights(alpha, s)?;
        Ok(match &certificate.outcome {
            LpOutcome::Optimal { value, primal, .. } => MultiplicityResult::Value {
                nu: value.clone(),
                witness: MultiplicityWitness {
                    weights: primal.entries().to_vec(),
                    nef_point: self.nef_point(alpha, primal),
                },
                certificate,
            },
            LpOutcome::Infeasible { .. } => MultiplicityResult::NotPsef { certificate },
            LpOutcome::Unbounded { .. } => unreachable!("objective is bounded below by zero"),
        })
    }

    /// Multiplicities on every proper nonempty stratum, by codimension then
    /// lexicographically; `Err(NotPsef)` when `α` is not psef.
    pub fn non_nef_sweep(&self, alpha: &BundleClass) -> Result<Vec<(Stratum, MultiplicityResult)>> {
        if !self.is_psef(alpha)?.is_psef() {
            return Err(Error::NotPsef);
        }
        Stratum::all_proper(self.r())
            .into_iter()
            .map(|s| {
                let res = self.min_multiplicity(alpha, &s)?;
                Ok((s, res))
            })
            .collect()
    }

    pub fn non_nef_table(&self, alpha: &BundleClass) -> Result<Vec<(Stratum, Rational)>> {
        Ok(self
            .non_nef_sweep(alpha)?
            .into_iter()
            .map(|(s, res)| {
                let nu = res
                    .value()
                    .expect("psef class has finite multiplicities")
                    .clone();
                (s, nu)
            })
            .collect())
    }

    /// Strata with positive multiplicity, i.e. the components of the non-nef locus.
    pub fn non_nef_locus(&self, alpha: &BundleClass) -> Result<Vec<Stratum>> {
        Ok(self
            .non_nef_table(alpha)?
            .into_iter()
            .filter(|(_, nu)| nu.is_positive())
            .map(|(s, _)| s)
            .collect())
    }

    /// `n` when every stratum has multiplicity zero, otherwise one less than
    /// the smallest codimension of a stratum with positive multiplicity.
    pub fn nef_codim(&self, alpha: &BundleClass) -> Result<NefCodim> {
        let table = match self.non_nef_table(alpha) {
            Ok(t) => t,
            Err(Error::NotPsef) => return Ok(NefCodim::NotPsef),
            Err(e) => return Err(e),
        };
        Ok(match table.iter().find(|(_, nu)| nu.is_positive()) {
            Some((s, _)) => NefCodim::Codim(s.codim() - 1),
            None => NefCodim::Codim(self.n()),
        })
    }

    /// Divisorial Zariski decomposition along `D_0, …, D_r`.
    pub fn zariski(&self, alpha: &BundleClass) -> Result<ZariskiDecomposition> {
        self.check_class(alpha)?;
        if !self.is_psef(alpha)?.is_psef() {
            return Err(Error::NotPsef);
        }
        let mut coefficients = Vec::with_capacity(self.fibers.len());
        let mut certificates = Vec::with_capacity(self.fibers.len());
        let mut negative_part =
            BundleClass::new(RatVector::zeros(self.base.rank), Rational::zero());
        // With r = 0 no D_i is a proper stratum (D_0 is empty).
        if self.r() > 0 {
            for i in 0..self.fibers.len() {
                let res = self.min_multiplicity(alpha, &Stratum(vec![i]))?;
                let nu = res.value().ok_or(Error::NotPsef)?.clone();
                negative_part = negative_part.add(&self.hypersurface_class(i).scale(&nu));
                coefficients.push(nu);
                certificates.push(res.certificate().clone());
            }
        } else {
            coefficients.push(Rational::zero());
        }
        let projection = alpha.sub(&negative_part);
        Ok(ZariskiDecomposition {
            coefficients,
            negative_part,
            projection,
            certificates,
        })
    }

    /// The cone `N_k` of classes nef in codimension `k`: psef classes with
    /// multiplicity zero along every stratum of codimension at most `k`.
    ///
    /// `N_0` is the psef cone and `N_n` the nef cone.
    pub fn positivity_cone(&self, k: usize) -> Result<Cone> {
        if k > self.n() {
            return Err(Error::Domain(format!(
                "codimension {k} out of range 0..={}",
                self.n()
            )));
        }
        let depth = k.min(self.r());
        let mut facets = self.psef_cone.facets();
        for s in Stratum::all_proper(self.r())
            .iter()
            .filter(|s| s.codim() <= depth)
        {
            let cone = projected_cone(&self.base, &self.fibers, &s.complement(self.r()));
            facets.extend(cone.facets());
        }
        Cone::from_facets(self.class_rank(), &facets)
    }

    /// `−K_X = (−K_Y − Σ l_i, r + 1)`.
    pub fn anticanonical(&self) -> Result<BundleClass> {
        let k = self
            .base
            .canonical
            .as_ref()
            .ok_or_else(|| Error::Domain("base canonical class is not given".into()))?;
        let beta = self.fibers.iter().fold(-k, |acc, l| &acc - l);
        Ok(BundleClass::new(
            beta,
            Rational::from_int(self.fibers.len() as i64),
        ))
    }

    /// `αⁿ` over a curve base: `λ^{r+1} Σ deg l_i + (r+1) λ^r deg β`.
    pub fn top_degree(&self, alpha: &BundleClass) -> Result<Rational> {
        if !self.base.is_curve() {
            return Err(Error::Domain(
                "top degree is only available over a curve base".into(),
            ));
        }
        self.check_class(alpha)?;
        let rank_e = self.fibers.len();
        let lambda_r = (0..self.r()).fold(Rational::one(), |acc, _| acc * &alpha.lambda);
        let det: Rational = self.fibers.iter().map(|l| l[0].clone()).sum();
        Ok(&lambda_r * &alpha.lambda * det
            + lambda_r * Rational::from_int(rank_e as i64) * &alpha.beta[0])
    }
}

/// `(N_Y × {0}) + cone{(−l_j, 1) : j ∈ J}`: classes with `(β + λ C_J) ∩ N_Y ≠ ∅`.
fn projected_cone(base: &BaseGeometry, fibers: &[RatVector], support: &[usize]) -> Cone {
    let mut gens: Vec<RatVector> = base
        .nef_cone
        .generators()
        .iter()
        .map(|g| g.extended(Rational::zero()))
        .collect();
    gens.extend(
        support
            .iter()
            .map(|&j| (-&fibers[j]).extended(Rational::one())),
    );
    Cone::from_generators(base.rank + 1, &gens).expect("generators built at class rank")
}
