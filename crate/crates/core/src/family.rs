use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arc::{substitute_arc, ArcCurve};
use crate::error::{Error, Result};
use crate::exec::{self, ExecMode};
use crate::extint::{ExtInt, Gap};
use crate::field::{Field, Rat, RatFuncA, RatFuncT};
use crate::groebner::radical_member;
use crate::poly::{Polynomial, RingRef};
use crate::singularity::Germ;
use crate::unipoly::UniPoly;

/// A one-parameter deformation F(z,t) = f(z) + Σ_{k≥1} t^k g_k(z). Every
/// stored deformation coefficient is nonzero and vanishes at the origin, so
/// each member germ F(·,t₀) is singular at 0.
#[derive(Debug, Clone)]
pub struct Family<F: Field> {
    ring: RingRef,
    zt_ring: RingRef,
    f: Germ<F>,
    defs: BTreeMap<u32, Germ<F>>,
}

impl<F: Field> Family<F> {
    pub fn new(
        ring: &RingRef,
        f: Polynomial<F>,
        deformations: BTreeMap<u32, Polynomial<F>>,
    ) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::TDegreeZeroMissing);
        }
        if !f.vanishes_at_origin() {
            return Err(Error::DoesNotVanishAtOrigin);
        }
        let mut defs = BTreeMap::new();
        for (k, g) in deformations {
            assert!(k >= 1, "deformation powers start at t^1");
            if g.is_zero() {
                continue;
            }
            if !g.vanishes_at_origin() {
                return Err(Error::DeformationConstantTerm { k });
            }
            defs.insert(k, Germ::new(g)?);
        }
        let t_name = ring.fresh_var("t");
        debug_assert_eq!(t_name, "t", "ring must not already contain t");
        Ok(Family {
            ring: ring.clone(),
            zt_ring: ring.extended(&t_name),
            f: Germ::new(f)?,
            defs,
        })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn zt_ring(&self) -> &RingRef {
        &self.zt_ring
    }

    pub fn base_germ(&self) -> &Germ<F> {
        &self.f
    }

    pub fn deformations(&self) -> impl Iterator<Item = (u32, &Germ<F>)> {
        self.defs.iter().map(|(k, g)| (*k, g))
    }

    pub fn deformation(&self, k: u32) -> Option<&Germ<F>> {
        self.defs.get(&k)
    }

    pub fn support(&self) -> Vec<u32> {
        self.defs.keys().copied().collect()
    }

    /// m = m(f).
    pub fn m(&self) -> u32 {
        self.f.multiplicity()
    }

    /// m₁ = min_k m(g_k); infinity when there are no deformations.
    pub fn m1(&self) -> ExtInt {
        self.defs
            .values()
            .map(|g| ExtInt::Finite(g.multiplicity() as u64))
            .min()
            .unwrap_or(ExtInt::Infinity)
    }

    fn embed_z(&self, p: &Polynomial<F>) -> Polynomial<F> {
        let positions: Vec<usize> = (0..self.ring.nvars()).collect();
        p.embed(&self.zt_ring, &positions)
    }

    fn t_power(&self, k: u32) -> Polynomial<F> {
        Polynomial::var(&self.zt_ring, self.zt_ring.nvars() - 1).pow(k)
    }

    /// F(z,t) as a polynomial in the extended (z, t) ring.
    pub fn total_polynomial(&self) -> Polynomial<F> {
        let mut acc = self.embed_z(self.f.poly());
        for (k, g) in &self.defs {
            acc = acc.add(&self.embed_z(g.poly()).mul(&self.t_power(*k)));
        }
        acc
    }

    /// ∂F/∂t = Σ k t^{k−1} g_k in the (z, t) ring.
    pub fn t_derivative(&self) -> Polynomial<F> {
        let mut acc = Polynomial::zero(&self.zt_ring);
        for (k, g) in &self.defs {
            acc = acc.add(
                &self
                    .embed_z(g.poly())
                    .mul(&self.t_power(k - 1))
                    .scale(&F::from_int(*k as i64)),
            );
        }
        acc
    }

    /// The gradient (∂F/∂z₁, …, ∂F/∂zₙ) in the (z, t) ring.
    pub fn z_partials(&self) -> Vec<Polynomial<F>> {
        let total = self.total_polynomial();
        (0..self.ring.nvars()).map(|i| total.partial(i)).collect()
    }

    /// Canonical `F:` text form.
    pub fn to_text(&self) -> String {
        let mut out = self.f.poly().to_text();
        for (k, g) in &self.defs {
            if *k == 1 {
                out.push_str(&format!(" + t*({})", g.poly().to_text()));
            } else {
                out.push_str(&format!(" + t^{k}*({})", g.poly().to_text()));
            }
        }
        out
    }

    /// View as a Greuel-form family with λ_k = t^k.
    pub fn as_greuel(&self) -> GreuelFamily<F> {
        GreuelFamily {
            ring: self.ring.clone(),
            f: self.f.clone(),
            pairs: self
                .defs
                .iter()
                .map(|(k, g)| (UniPoly::monomial(F::one(), *k as usize), g.clone()))
                .collect(),
        }
    }

    /// Necessary multiplicity bounds for μ-constancy: m(g_k) ≥ m − k + 1
    /// for every stored k. Any violation certifies that the family is not
    /// μ-constant.
    pub fn check_necessary_bounds(&self) -> BoundsReport {
        let m = self.m() as i64;
        let checks: Vec<BoundCheck> = self
            .defs
            .iter()
            .map(|(k, g)| {
                let threshold = m - *k as i64 + 1;
                let m_gk = g.multiplicity();
                BoundCheck {
                    k: *k,
                    m_gk,
                    threshold,
                    pass: (m_gk as i64) >= threshold,
                }
            })
            .collect();
        let all_pass = checks.iter().all(|c| c.pass);
        BoundsReport { m: self.m(), checks, all_pass }
    }
}

/// One necessary-bound verdict: m(g_k) against m − k + 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub k: u32,
    pub m_gk: u32,
    pub threshold: i64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub m: u32,
    pub checks: Vec<BoundCheck>,
    pub all_pass: bool,
}

/// Valuation data of one arc probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    pub v_ft: ExtInt,
    pub min_v_fz: ExtInt,
    pub gap: Gap,
}

/// Which arc construction produced a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateRule {
    /// Generic line (u·z₀, 0); refutes when m(g₁) < m.
    LinearArcZ,
    /// Generic line (u·z₀, u·t₀).
    LinearArcZT,
    /// Non-generic line through a point of the singular locus of the
    /// tangent cone.
    ConeSingularArc,
}

impl CertificateRule {
    pub fn id(&self) -> &'static str {
        match self {
            CertificateRule::LinearArcZ => "linear_arc_z",
            CertificateRule::LinearArcZT => "linear_arc_zt",
            CertificateRule::ConeSingularArc => "cone_singular_locus_arc",
        }
    }
}

/// A constructive witness of non-μ-constancy: an arc along which the
/// valuation gap V(F_t) − min V(F_{z_i}) fails to be positive, refuting the
/// Lê–Saito–Teissier criterion. Re-verifiable by direct substitution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub arc: ArcCurve,
    pub v_ft: ExtInt,
    pub min_v_fz: ExtInt,
    pub gap: Gap,
    pub rule: CertificateRule,
}

impl Certificate {
    pub fn explanation(&self) -> String {
        format!(
            "V(F_t) = {} and min V(F_z_i) = {} along the arc, so the gap {} is not positive \
             and |F_t|/||F_z|| does not tend to 0",
            self.v_ft, self.min_v_fz, self.gap
        )
    }
}

/// Options steering the randomized searches; the seed is part of the input,
/// so results are reproducible under any execution schedule.
#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub seed: u64,
    /// Coordinate bound for random arc draws.
    pub height: i64,
    /// Random draws per search stage.
    pub retries: u32,
    /// Coordinate bound for the Σ-witness enumeration.
    pub witness_height: u32,
    pub mode: ExecMode,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            seed: 0,
            height: 10,
            retries: 25,
            witness_height: 5,
            mode: ExecMode::default(),
        }
    }
}

// Distinct deterministic RNG streams per search stage.
const STREAM_ARC_Z: u64 = 1;
const STREAM_ARC_ZT: u64 = 2;
const STREAM_ARC_SIGMA: u64 = 3;
const STREAM_PROFILE: u64 = 4;

fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn random_point(rng: &mut ChaCha8Rng, n: usize, height: i64) -> Vec<Rat> {
    loop {
        let p: Vec<i64> = (0..n).map(|_| rng.random_range(-height..=height)).collect();
        if p.iter().any(|&c| c != 0) {
            return p.iter().map(|&c| <Rat as Field>::from_int(c)).collect();
        }
    }
}

fn random_nonzero(rng: &mut ChaCha8Rng, height: i64) -> Rat {
    loop {
        let c = rng.random_range(-height..=height);
        if c != 0 {
            return <Rat as Field>::from_int(c);
        }
    }
}

impl Family<Rat> {
    /// The member germ z ↦ F(z, t₀) (possibly the zero polynomial for
    /// degenerate parameter values).
    pub fn member_at(&self, t0: &Rat) -> Polynomial<Rat> {
        let mut acc = self.f.poly().clone();
        let mut tp = <Rat as Field>::one();
        let mut last_k = 0u32;
        for (k, g) in &self.defs {
            for _ in last_k..*k {
                tp = tp.mul(t0);
            }
            last_k = *k;
            acc = acc.add(&g.poly().scale(&tp));
        }
        acc
    }

    /// Milnor number of the member at t₀; infinity signals a non-isolated
    /// (or identically zero) member.
    pub fn mu_at(&self, t0: &Rat) -> Result<ExtInt> {
        let member = self.member_at(t0);
        if member.is_zero() {
            return Ok(ExtInt::Infinity);
        }
        Germ::new(member)?.milnor_number()
    }

    /// Milnor number of F viewed over the rational function field ℚ(t): by
    /// upper semicontinuity this is μ(t) for all but finitely many t.
    pub fn mu_generic(&self) -> Result<ExtInt> {
        if self.defs.is_empty() {
            return self.mu_at(&<Rat as Field>::zero());
        }
        let mut p: Polynomial<RatFuncT> = self.f.poly().map_coeffs(RatFuncT::from_rat);
        for (k, g) in &self.defs {
            let tk = RatFuncT::from_poly(UniPoly::monomial(<Rat as Field>::one(), *k as usize));
            p = p.add(&g.poly().map_coeffs(|c| RatFuncT::from_rat(c).mul(&tk)));
        }
        Germ::new(p)?.milnor_number()
    }

    /// Arc-valuation gap V(F_t ∘ γ) − min_i V(F_{z_i} ∘ γ). When F_t is the
    /// zero polynomial (no deformations) the probe carries no information
    /// and the gap is undefined, as it is when both valuations are infinite.
    pub fn lst_gap(&self, arc: &ArcCurve) -> Result<GapReport> {
        if arc.nz() != self.ring.nvars() {
            return Err(Error::InvalidArc(format!(
                "arc has {} z-components but the family has {} variables",
                arc.nz(),
                self.ring.nvars()
            )));
        }
        self.gap_along(&self.t_derivative(), &self.z_partials(), arc)
    }

    fn gap_along(
        &self,
        ft: &Polynomial<Rat>,
        fz: &[Polynomial<Rat>],
        arc: &ArcCurve,
    ) -> Result<GapReport> {
        let v_ft = substitute_arc(ft, arc)?.u_order();
        let mut min_v_fz = ExtInt::Infinity;
        for p in fz {
            min_v_fz = min_v_fz.min(substitute_arc(p, arc)?.u_order());
        }
        let gap = if ft.is_zero() {
            Gap::Undefined
        } else {
            Gap::difference(v_ft, min_v_fz)
        };
        Ok(GapReport { v_ft, min_v_fz, gap })
    }

    /// Searches for a non-μ-constancy certificate. Tries, in order: generic
    /// lines (u·z₀, 0), generic lines (u·z₀, u·t₀), and non-generic lines
    /// through a rational point of Σ avoiding the tangent cone of each g_k.
    /// Candidate arcs are drawn up-front from the seeded generator, so the
    /// first hit (in draw order) is deterministic under any execution mode.
    pub fn certificate_search(&self, opts: &SearchOptions) -> Option<Certificate> {
        if self.defs.is_empty() {
            return None;
        }
        let ft = self.t_derivative();
        let fz = self.z_partials();
        let n = self.ring.nvars();
        let probe = |arc: &ArcCurve, rule: CertificateRule| -> Option<Certificate> {
            let report = self.gap_along(&ft, &fz, arc).ok()?;
            report.gap.refutes().then(|| Certificate {
                arc: arc.clone(),
                v_ft: report.v_ft,
                min_v_fz: report.min_v_fz,
                gap: report.gap,
                rule,
            })
        };

        // Stage 1: lines in the t = 0 slice.
        let mut rng = seeded_rng(opts.seed, STREAM_ARC_Z);
        let zero = <Rat as Field>::zero();
        let candidates: Vec<ArcCurve> = (0..opts.retries)
            .filter_map(|_| {
                ArcCurve::linear(&random_point(&mut rng, n, opts.height), &zero).ok()
            })
            .collect();
        if let Some(c) = exec::find_first_map(opts.mode, &candidates, |arc| {
            probe(arc, CertificateRule::LinearArcZ)
        }) {
            return Some(c);
        }

        // Stage 2: lines with moving parameter.
        let mut rng = seeded_rng(opts.seed, STREAM_ARC_ZT);
        let candidates: Vec<ArcCurve> = (0..opts.retries)
            .filter_map(|_| {
                let z0 = random_point(&mut rng, n, opts.height);
                let t0 = random_nonzero(&mut rng, opts.height);
                ArcCurve::linear(&z0, &t0).ok()
            })
            .collect();
        if let Some(c) = exec::find_first_map(opts.mode, &candidates, |arc| {
            probe(arc, CertificateRule::LinearArcZT)
        }) {
            return Some(c);
        }

        // Stage 3: lines through the singular locus of the tangent cone,
        // chosen off the tangent cone of the deformation coefficient.
        let mut rng = seeded_rng(opts.seed, STREAM_ARC_SIGMA);
        for (_k, g) in &self.defs {
            let excluded = g.initial_form().clone();
            let witness = match self.f.sigma_witness(&excluded, opts.witness_height) {
                Some(w) => w,
                None => continue,
            };
            let candidates: Vec<ArcCurve> = (0..opts.retries)
                .filter_map(|_| {
                    let t0 = random_nonzero(&mut rng, opts.height);
                    ArcCurve::linear(&witness, &t0).ok()
                })
                .collect();
            if let Some(c) = exec::find_first_map(opts.mode, &candidates, |arc| {
                probe(arc, CertificateRule::ConeSingularArc)
            }) {
                return Some(c);
            }
        }
        None
    }

    /// Decides μ-constancy exactly: μ over ℚ(t) equals μ at t = 0. The
    /// sampled parameter values are corroboration for display only.
    pub fn mu_constancy(&self, samples: &[Rat], mode: ExecMode) -> Result<MuConstancy> {
        let mu_zero = self.mu_at(&<Rat as Field>::zero())?;
        if !mu_zero.is_finite() {
            return Err(Error::NonIsolatedAtZero);
        }
        let mu_gen = self.mu_generic()?;
        let sample_values = exec::map_items(mode, samples, |t0| MuSample {
            t0: t0.clone(),
            mu: self.mu_at(t0).unwrap_or(ExtInt::Infinity),
        });
        Ok(MuConstancy {
            mu_zero,
            mu_generic: mu_gen,
            constant: mu_zero == mu_gen,
            samples: sample_values,
            caveats: vec![
                "the verdict certifies mu(t) = mu(0) for all but finitely many t; for \
                 polynomial families the finitely many exceptional parameters cannot \
                 accumulate at 0, so constancy holds on a punctured neighbourhood of 0 \
                 together with 0 itself"
                    .to_string(),
                "sampled parameter values are corroboration only; a sample may land on an \
                 exceptional parameter (shown as a deviating or infinite value)"
                    .to_string(),
            ],
        })
    }

    /// Sufficient equimultiplicity checks, applicable only to families
    /// already known μ-constant. Route 1: the tangent cone of f has an
    /// isolated singularity. Route 2 (families f + tg + t²h): Σ, the
    /// singular locus of the tangent cone of f, is not contained in the
    /// tangent cone of h. Strengthened bounds m(g_k) ≥ m − k + 2 are
    /// recorded for every k whose tangent cone does not contain Σ.
    pub fn check_equimultiplicity(&self, mu_constant: bool) -> EquimultReport {
        if !mu_constant {
            return EquimultReport {
                verdict: EquimultVerdict::NotApplicable,
                rule: None,
                reason: "the family is not known to be mu-constant".to_string(),
                strengthened_bounds: Vec::new(),
            };
        }
        let m = self.m() as i64;
        let sigma_ideal = self.f.cone_singular_ideal();
        let mut strengthened = Vec::new();
        for (k, g) in &self.defs {
            let contained = radical_member(g.initial_form(), sigma_ideal);
            if !contained {
                let threshold = m - *k as i64 + 2;
                strengthened.push(StrengthenedBound {
                    k: *k,
                    m_gk: g.multiplicity(),
                    threshold,
                    pass: (g.multiplicity() as i64) >= threshold,
                });
            }
        }

        if self.defs.is_empty() {
            return EquimultReport {
                verdict: EquimultVerdict::Equimultiple,
                rule: Some(EquimultRule::ConstantFamily),
                reason: "the family does not depend on t".to_string(),
                strengthened_bounds: strengthened,
            };
        }
        if self.f.cone_has_isolated_singularity() {
            return EquimultReport {
                verdict: EquimultVerdict::Equimultiple,
                rule: Some(EquimultRule::IsolatedTangentCone),
                reason: "the tangent cone of f has an isolated singularity, so the \
                         mu-constant family is equimultiple (semi-quasihomogeneous case)"
                    .to_string(),
                strengthened_bounds: strengthened,
            };
        }
        let support = self.support();
        if support.iter().all(|&k| k <= 2) && self.defs.contains_key(&2) {
            let h = &self.defs[&2];
            if !radical_member(h.initial_form(), sigma_ideal) {
                return EquimultReport {
                    verdict: EquimultVerdict::Equimultiple,
                    rule: Some(EquimultRule::SigmaOffDeformationCone),
                    reason: "the singular locus of the tangent cone of f is not contained \
                             in the tangent cone of the t^2 coefficient"
                        .to_string(),
                    strengthened_bounds: strengthened,
                };
            }
            return EquimultReport {
                verdict: EquimultVerdict::Inconclusive,
                rule: None,
                reason: "the tangent cone of f is not isolated and the singular locus of \
                         the cone is contained in the tangent cone of the t^2 coefficient"
                    .to_string(),
                strengthened_bounds: strengthened,
            };
        }
        EquimultReport {
            verdict: EquimultVerdict::Inconclusive,
            rule: None,
            reason: "the tangent cone of f is not isolated and the family is not of the \
                     shape f + t*g + t^2*h required by the cone-exclusion route"
                .to_string(),
            strengthened_bounds: strengthened,
        }
    }

    /// Multiplicity bookkeeping: m, m₁, the predicted generic member
    /// multiplicity min(m, m₁), and sampled member multiplicities (retried
    /// on coincidental cancellation).
    pub fn multiplicity_profile(&self, opts: &SearchOptions) -> MultiplicityProfile {
        let m = self.m();
        let m1 = self.m1();
        let predicted = ExtInt::Finite(m as u64).min(m1);
        let deformation_multiplicities: Vec<(u32, u32)> = self
            .defs
            .iter()
            .map(|(k, g)| (*k, g.multiplicity()))
            .collect();
        let mut rng = seeded_rng(opts.seed, STREAM_PROFILE);
        let mut samples = Vec::new();
        let mut verified = self.defs.is_empty();
        for _round in 0..3 {
            if verified {
                break;
            }
            for _ in 0..3 {
                let num = random_nonzero(&mut rng, opts.height);
                let den = <Rat as Field>::from_int(rng.random_range(1..=2));
                let t0 = num.div(&den);
                let mult = self.member_at(&t0).order();
                if mult == predicted {
                    verified = true;
                }
                samples.push(MultiplicitySample { t0, multiplicity: mult });
            }
        }
        MultiplicityProfile {
            m,
            m1,
            deformation_multiplicities,
            generic_multiplicity: predicted,
            samples,
            verified,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuSample {
    pub t0: Rat,
    pub mu: ExtInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuConstancy {
    pub mu_zero: ExtInt,
    pub mu_generic: ExtInt,
    pub constant: bool,
    pub samples: Vec<MuSample>,
    pub caveats: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquimultVerdict {
    Equimultiple,
    Inconclusive,
    NotApplicable,
}

impl EquimultVerdict {
    pub fn id(&self) -> &'static str {
        match self {
            EquimultVerdict::Equimultiple => "equimultiple",
            EquimultVerdict::Inconclusive => "inconclusive",
            EquimultVerdict::NotApplicable => "not_applicable",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquimultRule {
    /// Deformation-free family; multiplicity trivially constant.
    ConstantFamily,
    /// Tangent cone of f has an isolated singularity.
    IsolatedTangentCone,
    /// Σ not contained in the tangent cone of the t² coefficient.
    SigmaOffDeformationCone,
}

impl EquimultRule {
    pub fn id(&self) -> &'static str {
        match self {
            EquimultRule::ConstantFamily => "constant_in_t",
            EquimultRule::IsolatedTangentCone => "isolated_tangent_cone",
            EquimultRule::SigmaOffDeformationCone => "sigma_off_deformation_cone",
        }
    }
}

/// Bound m(g_k) ≥ m − k + 2, recorded when Σ is not contained in the
/// tangent cone of g_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrengthenedBound {
    pub k: u32,
    pub m_gk: u32,
    pub threshold: i64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquimultReport {
    pub verdict: EquimultVerdict,
    pub rule: Option<EquimultRule>,
    pub reason: String,
    pub strengthened_bounds: Vec<StrengthenedBound>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicitySample {
    pub t0: Rat,
    pub multiplicity: ExtInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityProfile {
    pub m: u32,
    pub m1: ExtInt,
    pub deformation_multiplicities: Vec<(u32, u32)>,
    pub generic_multiplicity: ExtInt,
    pub samples: Vec<MultiplicitySample>,
    pub verified: bool,
}

/// A family in Greuel form F(z,t) = f(z) + Σ_j λ_j(t) g_j(z) with nonzero
/// λ_j vanishing at t = 0.
#[derive(Debug, Clone)]
pub struct GreuelFamily<F: Field> {
    ring: RingRef,
    f: Germ<F>,
    pairs: Vec<(UniPoly<F>, Germ<F>)>,
}

impl<F: Field> GreuelFamily<F> {
    pub fn new(
        ring: &RingRef,
        f: Polynomial<F>,
        pairs: Vec<(UniPoly<F>, Polynomial<F>)>,
    ) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if f.is_zero() {
            return Err(Error::TDegreeZeroMissing);
        }
        if !f.vanishes_at_origin() {
            return Err(Error::DoesNotVanishAtOrigin);
        }
        let mut built = Vec::with_capacity(pairs.len());
        for (j, (lambda, g)) in pairs.into_iter().enumerate() {
            if lambda.is_zero() {
                return Err(Error::Unsupported(format!(
                    "lambda[{}] must be nonzero",
                    j + 1
                )));
            }
            if !lambda.coeff(0).is_zero() {
                return Err(Error::Unsupported(format!(
                    "lambda[{}] must vanish at t = 0",
                    j + 1
                )));
            }
            if g.is_zero() {
                return Err(Error::Unsupported(format!("g[{}] must be nonzero", j + 1)));
            }
            if !g.vanishes_at_origin() {
                return Err(Error::DeformationConstantTerm { k: (j + 1) as u32 });
            }
            built.push((lambda, Germ::new(g)?));
        }
        Ok(GreuelFamily {
            ring: ring.clone(),
            f: Germ::new(f)?,
            pairs: built,
        })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn base_germ(&self) -> &Germ<F> {
        &self.f
    }

    pub fn pairs(&self) -> &[(UniPoly<F>, Germ<F>)] {
        &self.pairs
    }

    /// ν(λ_j): order of λ_j in t.
    pub fn nu(&self, j: usize) -> u64 {
        self.pairs[j].0.u_order().expect_finite("order of nonzero lambda")
    }

    /// Collects coefficients of equal powers of t, producing the standard
    /// form f + Σ t^k g'_k with g'_k = Σ_j coeff(λ_j, t^k)·g_j; zero results
    /// are dropped. The total polynomial F(z,t) is preserved exactly.
    pub fn regroup(&self) -> Result<Family<F>> {
        let mut defs: BTreeMap<u32, Polynomial<F>> = BTreeMap::new();
        for (lambda, g) in &self.pairs {
            for (k, c) in lambda.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let entry = defs
                    .entry(k as u32)
                    .or_insert_with(|| Polynomial::zero(&self.ring));
                *entry = entry.add(&g.poly().scale(c));
            }
        }
        Family::new(&self.ring, self.f.poly().clone(), defs)
    }

    /// Greuel's criterion: under ℂ-linear independence of the initial forms
    /// of the g_j, μ-constancy forces ν(λ_j) + m(g_j) > m(f) for all j. If
    /// the initial forms are dependent the criterion is not applicable and
    /// the offending combination is reported; the per-j sums are reported
    /// either way.
    pub fn check(&self) -> GreuelReport<F> {
        let m_f = self.f.multiplicity();
        let items: Vec<GreuelCheckItem> = self
            .pairs
            .iter()
            .enumerate()
            .map(|(j, (_, g))| {
                let nu = self.nu(j);
                let m_gj = g.multiplicity();
                GreuelCheckItem {
                    j: j + 1,
                    nu,
                    m_gj,
                    pass: nu + m_gj as u64 > m_f as u64,
                }
            })
            .collect();
        // Initial forms of distinct degrees are automatically independent;
        // a dependency must live inside one degree class.
        let mut by_degree: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (j, (_, g)) in self.pairs.iter().enumerate() {
            by_degree.entry(g.multiplicity()).or_default().push(j);
        }
        let mut applicability = GreuelApplicability::Applicable;
        'outer: for (deg, indices) in &by_degree {
            if indices.len() < 2 {
                continue;
            }
            let forms: Vec<&Polynomial<F>> = indices
                .iter()
                .map(|&j| self.pairs[j].1.initial_form())
                .collect();
            if let Some(combo) = linear_dependency(&forms) {
                applicability = GreuelApplicability::NotApplicable {
                    degree: *deg,
                    combination: combo
                        .into_iter()
                        .map(|(i, c)| (indices[i] + 1, c))
                        .collect(),
                };
                break 'outer;
            }
        }
        let any_violation = matches!(applicability, GreuelApplicability::Applicable)
            && items.iter().any(|i| !i.pass);
        GreuelReport {
            m_f,
            applicability,
            items,
            any_violation,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = self.f.poly().to_text();
        for (lambda, g) in &self.pairs {
            out.push_str(&format!(
                " + ({})*({})",
                lambda.to_string_with_var("t"),
                g.poly().to_text()
            ));
        }
        out
    }
}

impl GreuelFamily<RatFuncA> {
    /// Drops to ℚ coefficients when no pair actually uses the parameter a.
    pub fn lower(&self) -> Option<GreuelFamily<Rat>> {
        let lower_poly = |p: &Polynomial<RatFuncA>| -> Option<Polynomial<Rat>> {
            let mut terms = Vec::new();
            for (m, c) in p.terms() {
                terms.push((m.clone(), c.to_rat()?));
            }
            Some(Polynomial::from_terms(p.ring(), terms))
        };
        let f = lower_poly(self.f.poly())?;
        let mut pairs = Vec::new();
        for (lambda, g) in &self.pairs {
            let mut lam = Vec::new();
            for c in lambda.coeffs() {
                lam.push(c.to_rat()?);
            }
            pairs.push((UniPoly::new(lam), lower_poly(g.poly())?));
        }
        GreuelFamily::new(&self.ring, f, pairs).ok()
    }
}

impl Family<RatFuncA> {
    /// Drops to ℚ coefficients when the parameter a does not occur.
    pub fn lower(&self) -> Option<Family<Rat>> {
        let lower_poly = |p: &Polynomial<RatFuncA>| -> Option<Polynomial<Rat>> {
            let mut terms = Vec::new();
            for (m, c) in p.terms() {
                terms.push((m.clone(), c.to_rat()?));
            }
            Some(Polynomial::from_terms(p.ring(), terms))
        };
        let f = lower_poly(self.f.poly())?;
        let mut defs = BTreeMap::new();
        for (k, g) in &self.defs {
            defs.insert(*k, lower_poly(g.poly())?);
        }
        Family::new(&self.ring, f, defs).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GreuelApplicability<F: Field> {
    Applicable,
    /// The initial forms of the listed g_j (1-based indices, with the
    /// witnessing coefficients) are linearly dependent in one degree.
    NotApplicable {
        degree: u32,
        combination: Vec<(usize, F)>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreuelCheckItem {
    pub j: usize,
    pub nu: u64,
    pub m_gj: u32,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreuelReport<F: Field> {
    pub m_f: u32,
    pub applicability: GreuelApplicability<F>,
    pub items: Vec<GreuelCheckItem>,
    pub any_violation: bool,
}

/// Finds a nontrivial vanishing combination Σ c_i p_i = 0 by Gaussian
/// elimination over the coefficient field, or `None` if independent.
fn linear_dependency<F: Field>(polys: &[&Polynomial<F>]) -> Option<Vec<(usize, F)>> {
    use crate::monomial::Monomial;
    let mut columns: Vec<Monomial> = Vec::new();
    for p in polys {
        for (m, _) in p.terms() {
            if !columns.contains(m) {
                columns.push(m.clone());
            }
        }
    }
    columns.sort();
    // Pivot rows: (reduced coefficient row, combination over the inputs).
    let mut pivots: Vec<(Vec<F>, Vec<F>)> = Vec::new();
    for (i, p) in polys.iter().enumerate() {
        let mut row: Vec<F> = columns.iter().map(|m| p.coeff(m)).collect();
        let mut combo: Vec<F> = vec![F::zero(); polys.len()];
        combo[i] = F::one();
        for (prow, pcombo) in &pivots {
            let lead = prow.iter().position(|c| !c.is_zero()).unwrap();
            if row[lead].is_zero() {
                continue;
            }
            let factor = row[lead].div(&prow[lead]);
            for (r, pr) in row.iter_mut().zip(prow) {
                *r = r.sub(&factor.mul(pr));
            }
            for (c, pc) in combo.iter_mut().zip(pcombo) {
                *c = c.sub(&factor.mul(pc));
            }
        }
        if row.iter().all(|c| c.is_zero()) {
            return Some(
                combo
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect(),
            );
        }
        pivots.push((row, combo));
    }
    None
}
