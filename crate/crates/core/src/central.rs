//! The centre of the Hecke algebra: norms `b_α`, class elements `Γ_λ`, the
//! transition coefficients between them, and projections onto parabolic
//! subalgebras.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combin::{
    class_size_in_parabolic, compositions_of, factorial, lambda_minus_one, multipartitions_of,
    multipartitions_of_shape, perm_character, refinement_leq, table_order, Composition,
    Multipartition, Partition,
};
use crate::error::{Error, Result};
use crate::hecke::{
    format_term, AlgebraConfig, GroupAlgebraElement, HeckeAlgebra, HeckeElement, Memo,
};
use crate::polyring::frac::{invert_matrix, RatXiFrac};
use crate::polyring::XiPoly;
use crate::symcore::{canonical_coxeter, conjugacy_class, min_length_class_elements, Permutation};

/// Default largest `n` for which [`Centre::verify_main_theorem`] runs.
pub const DEFAULT_VERIFY_BOUND: usize = 5;

/// How `Γ`-coordinates of a norm are obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Permutation character times a power of `ξ`.
    Formula,
    /// Build `b_α` and read its coefficients at the `w_λ`.
    Direct,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "formula" => Ok(Method::Formula),
            "direct" => Ok(Method::Direct),
            other => Err(Error::OutOfRange(format!("unknown method {other:?}"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Formula => "formula",
            Method::Direct => "direct",
        })
    }
}

/// `(1_{S_λ})^{S_n}(w_α)·ξ^{l_λ−l_α}`, the coefficient of `Γ_λ` in `b_α`.
///
/// When `l_λ < l_α` the character value must vanish; a nonzero value there
/// is reported as an invariant violation.
pub fn formula_coeff(alpha: &Partition, lam: &Partition) -> Result<XiPoly> {
    let n = alpha.total();
    if lam.total() != n {
        return Err(Error::SizeMismatch(format!(
            "{alpha} and {lam} have different sizes"
        )));
    }
    let chi = perm_character(n, lam.as_composition(), alpha)?;
    if lam.l() < alpha.l() {
        if !chi.is_zero() {
            return Err(Error::Invariant(format!(
                "character of {lam} at {alpha} is {chi} although l_λ < l_α"
            )));
        }
        return Ok(XiPoly::zero());
    }
    Ok(XiPoly::monomial(chi, lam.l() - alpha.l()))
}

/// `q`-form of a coefficient: `ξ ↦ q^{1/2} − q^{−1/2}` followed by the
/// factor `q^{(from − to)/2}`.
pub fn q_coeff(r: &XiPoly, from_l: usize, to_l: usize) -> crate::polyring::QHalfLaurent {
    r.to_q_half(from_l as i64 - to_l as i64)
}

/// Coordinates of a central element on the `Γ_λ` basis, in table order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralExpansion {
    n: usize,
    coeffs: Vec<(Partition, XiPoly)>,
}

impl CentralExpansion {
    pub fn new(n: usize, coeffs: Vec<(Partition, XiPoly)>) -> Self {
        CentralExpansion { n, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[(Partition, XiPoly)] {
        &self.coeffs
    }

    pub fn coeff(&self, lam: &Partition) -> XiPoly {
        self.coeffs
            .iter()
            .find(|(p, _)| p == lam)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    /// `Σ_λ r_λ Γ_λ`.
    pub fn reconstruct(&self, centre: &Centre) -> Result<HeckeElement> {
        let mut out = HeckeElement::zero(self.n);
        for (lam, c) in &self.coeffs {
            if !c.is_zero() {
                out.add_scaled(&centre.gamma(lam)?, c)?;
            }
        }
        Ok(out)
    }

    /// `G(2,1) + G(3) * x`, with a caller-supplied coefficient format.
    pub fn to_text_with(&self, coeff_text: impl Fn(&Partition, &XiPoly) -> String) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(lam, c)| format_term(&format!("G{lam}"), &coeff_text(lam, c)))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    pub fn to_text(&self) -> String {
        self.to_text_with(|_, c| c.to_string())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("expansion serializes")
    }
}

impl fmt::Display for CentralExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Serialize, Deserialize)]
struct JsonExpansion {
    n: usize,
    coeffs: Vec<JsonCoeff>,
}

#[derive(Serialize, Deserialize)]
struct JsonCoeff {
    lambda: Partition,
    coeff: XiPoly,
}

impl Serialize for CentralExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonExpansion {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .map(|(lambda, coeff)| JsonCoeff {
                    lambda: lambda.clone(),
                    coeff: coeff.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CentralExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = JsonExpansion::deserialize(d)?;
        Ok(CentralExpansion {
            n: raw.n,
            coeffs: raw
                .coeffs
                .into_iter()
                .map(|c| (c.lambda, c.coeff))
                .collect(),
        })
    }
}

/// One summand of the projection of `b_α` onto `H_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionTerm {
    pub theta: Multipartition,
    pub coeff: BigInt,
    /// `N_{S_λ,S_θ}(η_θ)`.
    pub norm: HeckeElement,
}

/// Sum of `coeff·norm` over the terms.
pub fn sum_projection(n: usize, terms: &[ProjectionTerm]) -> Result<HeckeElement> {
    let mut out = HeckeElement::zero(n);
    for t in terms {
        out.add_scaled(&t.norm, &XiPoly::constant(t.coeff.clone()))?;
    }
    Ok(out)
}

/// A coefficient where the two sides of an identity disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub check: &'static str,
    pub alpha: String,
    pub lambda: String,
    pub perm: Permutation,
    pub expected: XiPoly,
    pub got: XiPoly,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: alpha={} lambda={} at T[{}]: expected {} got {}",
            self.check, self.alpha, self.lambda, self.perm, self.expected, self.got
        )
    }
}

/// Outcome of [`Centre::verify_main_theorem`].
#[derive(Clone, Debug, Default)]
pub struct MainTheoremReport {
    pub n: usize,
    /// Number of `b_α` compared against their formula expansion.
    pub norms_checked: usize,
    /// Number of `(λ, μ)` pairs compared in the parabolic version.
    pub parabolic_pairs_checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl MainTheoremReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for MainTheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "n={}: {} norm expansions, {} parabolic pairs, {} mismatches",
            self.n,
            self.norms_checked,
            self.parabolic_pairs_checked,
            self.mismatches.len()
        )?;
        for m in &self.mismatches {
            writeln!(f, "  {m}")?;
        }
        Ok(())
    }
}

fn record_diff(
    out: &mut Vec<Mismatch>,
    check: &'static str,
    alpha: String,
    lambda: String,
    expected: &HeckeElement,
    got: &HeckeElement,
) {
    let support: BTreeSet<Permutation> = expected.support().chain(got.support()).copied().collect();
    for w in support {
        let (e, g) = (expected.coeff(&w), got.coeff(&w));
        if e != g {
            out.push(Mismatch {
                check,
                alpha: alpha.clone(),
                lambda: lambda.clone(),
                perm: w,
                expected: e,
                got: g,
            });
        }
    }
}

/// The pieces of `μ` lying in each block of `λ`; requires `μ ≤ λ`.
fn split_refinement(mu: &Composition, lam: &Composition) -> Result<Vec<Composition>> {
    if !refinement_leq(mu, lam)? {
        return Err(Error::NotRefinement {
            sub: mu.to_string(),
            sup: lam.to_string(),
        });
    }
    let mut parts = mu.parts().iter().copied();
    lam.parts()
        .iter()
        .map(|&target| {
            let mut piece = Vec::new();
            let mut acc = 0;
            while acc < target {
                let p = parts.next().expect("refinement covers every block");
                acc += p;
                piece.push(p);
            }
            Composition::new(piece)
        })
        .collect()
}

/// Norms, class elements and their caches over a shared [`HeckeAlgebra`].
pub struct Centre {
    algebra: HeckeAlgebra,
    verify_bound: usize,
    eta_blocks: Memo<usize, HeckeElement>,
    norms: Memo<Partition, HeckeElement>,
    gammas: Memo<usize, Vec<(Partition, HeckeElement)>>,
}

impl Default for Centre {
    fn default() -> Self {
        Centre::new(AlgebraConfig::default())
    }
}

impl Centre {
    pub fn new(config: AlgebraConfig) -> Self {
        Centre {
            algebra: HeckeAlgebra::new(config),
            verify_bound: DEFAULT_VERIFY_BOUND,
            eta_blocks: Memo::new(),
            norms: Memo::new(),
            gammas: Memo::new(),
        }
    }

    pub fn with_verify_bound(mut self, bound: usize) -> Self {
        self.verify_bound = bound;
        self
    }

    pub fn verify_bound(&self) -> usize {
        self.verify_bound
    }

    pub fn algebra(&self) -> &HeckeAlgebra {
        &self.algebra
    }

    pub fn clear_caches(&self) {
        self.algebra.clear_caches();
        self.eta_blocks.clear();
        self.norms.clear();
        self.gammas.clear();
    }

    fn budget(&self) -> usize {
        self.algebra.config().cache_budget
    }

    fn cached<K, V>(
        &self,
        memo: &Memo<K, V>,
        key: K,
        make: impl FnOnce() -> Result<V>,
    ) -> Result<Arc<V>>
    where
        K: Eq + std::hash::Hash + Clone,
    {
        let enabled = self.algebra.config().cache_enabled;
        if enabled {
            if let Some(hit) = memo.get(&key) {
                return Ok(hit);
            }
        }
        let value = Arc::new(make()?);
        if enabled {
            return Ok(memo.insert(key, value, self.budget()));
        }
        Ok(value)
    }

    /// `N_{S_sup,S_sub}(h) = Σ_d T̃_{d⁻¹} h T̃_d` over distinguished right
    /// coset representatives `d` of `S_sub` in `S_sup`.
    pub fn relative_norm(
        &self,
        sup: &Composition,
        sub: &Composition,
        h: &HeckeElement,
    ) -> Result<HeckeElement> {
        let n = h.degree();
        if sup.total() != n {
            return Err(Error::DegreeMismatch {
                left: sup.total(),
                right: n,
            });
        }
        let reps = self.algebra.coset_reps(sub, sup)?;
        if self.algebra.config().parallel && reps.len() > 1 {
            reps.par_iter()
                .map(|d| self.algebra.conjugate(h, d))
                .try_reduce(
                    || HeckeElement::zero(n),
                    |mut a, b| {
                        a.add_assign_ref(&b);
                        Ok(a)
                    },
                )
        } else {
            let mut out = HeckeElement::zero(n);
            for d in reps.iter() {
                out.add_assign_ref(&self.algebra.conjugate(h, d)?);
            }
            Ok(out)
        }
    }

    /// `η_λ = N_{S_{λ−1},1}(T̃_{w_λ})` computed as a single norm.
    pub fn eta_monolithic(&self, lam: &Composition) -> Result<HeckeElement> {
        let n = lam.total();
        let w = canonical_coxeter(n, lam)?;
        self.relative_norm(
            &lambda_minus_one(lam),
            &Composition::trivial(n),
            &HeckeElement::basis(w),
        )
    }

    /// `η_{(p)}` in `H_p`.
    fn eta_block(&self, p: usize) -> Result<Arc<HeckeElement>> {
        self.cached(&self.eta_blocks, p, || {
            self.eta_monolithic(&Composition::full(p))
        })
    }

    /// `η_λ`, as the product of the single-block elements `η_{(λ_i)}`
    /// placed on consecutive positions.
    pub fn eta(&self, lam: &Composition) -> Result<HeckeElement> {
        let n = lam.total();
        let mut out = HeckeElement::one(n);
        for (o, &p) in lam.offsets().into_iter().zip(lam.parts()) {
            if p > 1 {
                out = self.algebra.mul(&out, &self.eta_block(p)?.embed(o, n))?;
            }
        }
        Ok(out)
    }

    /// `b_α = N_{S_n,S_α}(η_α)`, keyed by the sorted partition.
    pub fn norm_b(&self, alpha: &Composition) -> Result<Arc<HeckeElement>> {
        let key = alpha.sorted();
        self.cached(&self.norms, key.clone(), || {
            self.norm_b_raw(key.as_composition())
        })
    }

    /// `b_α` computed for the composition exactly as given, bypassing the cache.
    pub fn norm_b_raw(&self, alpha: &Composition) -> Result<HeckeElement> {
        let n = alpha.total();
        self.relative_norm(&Composition::full(n), alpha, &self.eta(alpha)?)
    }

    /// All `Γ_λ` for `λ ⊢ n`, in table order.
    pub fn gammas(&self, n: usize) -> Result<Arc<Vec<(Partition, HeckeElement)>>> {
        self.cached(&self.gammas, n, || self.solve_gammas(n))
    }

    pub fn gamma(&self, lam: &Partition) -> Result<HeckeElement> {
        let all = self.gammas(lam.total())?;
        Ok(all
            .iter()
            .find(|(p, _)| p == lam)
            .map(|(_, g)| g.clone())
            .expect("every partition has a class element"))
    }

    /// Solves `b_α = Σ_μ ⟨b_α, T̃_{w_μ}⟩ Γ_μ` for the `Γ_μ` over `ℚ(ξ)` and
    /// checks each result against its defining properties.
    fn solve_gammas(&self, n: usize) -> Result<Vec<(Partition, HeckeElement)>> {
        let parts = table_order(n);
        let bs = parts
            .iter()
            .map(|a| self.norm_b(a.as_composition()))
            .collect::<Result<Vec<_>>>()?;
        let ws = parts
            .iter()
            .map(|m| canonical_coxeter(n, m.as_composition()))
            .collect::<Result<Vec<_>>>()?;
        let matrix: Vec<Vec<RatXiFrac>> = bs
            .iter()
            .map(|b| ws.iter().map(|w| RatXiFrac::from(&b.coeff(w))).collect())
            .collect();
        let inv = invert_matrix(&matrix)
            .ok_or_else(|| Error::Invariant(format!("transition matrix for n={n} is singular")))?;
        let support: BTreeSet<Permutation> = bs.iter().flat_map(|b| b.support().copied()).collect();
        let minimal: Vec<Vec<Permutation>> = parts
            .iter()
            .map(|p| min_length_class_elements(n, p))
            .collect::<Result<_>>()?;

        let mut out = Vec::with_capacity(parts.len());
        for (li, lam) in parts.iter().enumerate() {
            let mut terms = Vec::new();
            for w in &support {
                let mut acc = RatXiFrac::zero();
                for (ai, b) in bs.iter().enumerate() {
                    let c = b.coeff(w);
                    if !c.is_zero() && !inv[li][ai].is_zero() {
                        acc = &acc + &(&inv[li][ai] * &RatXiFrac::from(&c));
                    }
                }
                if !acc.is_zero() {
                    let p = acc.to_xi_poly().ok_or_else(|| {
                        Error::Invariant(format!(
                            "class element {lam} has coefficient {acc} at {w}"
                        ))
                    })?;
                    terms.push((*w, p));
                }
            }
            let g = HeckeElement::from_terms(n, terms)?;
            self.check_gamma(n, li, &parts, &minimal, &g)?;
            out.push((lam.clone(), g));
        }
        Ok(out)
    }

    fn check_gamma(
        &self,
        n: usize,
        li: usize,
        parts: &[Partition],
        minimal: &[Vec<Permutation>],
        g: &HeckeElement,
    ) -> Result<()> {
        let lam = &parts[li];
        if !self.algebra.is_central(g) {
            return Err(Error::Invariant(format!(
                "class element {lam} is not central"
            )));
        }
        for (mi, mins) in minimal.iter().enumerate() {
            let want = if mi == li {
                XiPoly::one()
            } else {
                XiPoly::zero()
            };
            if let Some(w) = mins.iter().find(|w| g.coeff(w) != want) {
                return Err(Error::Invariant(format!(
                    "class element {lam} has coefficient {} at shortest element {w} of {}",
                    g.coeff(w),
                    parts[mi]
                )));
            }
        }
        let class = conjugacy_class(n, lam)?;
        if g.specialize_zero() != GroupAlgebraElement::sum_of(n, &class, BigInt::from(1)) {
            return Err(Error::Invariant(format!(
                "class element {lam} does not specialize to its class sum"
            )));
        }
        Ok(())
    }

    /// `⟨h, T̃_{w_λ}⟩`, the `Γ_λ`-coordinate of a central `h`.
    pub fn gamma_coeff(&self, h: &HeckeElement, lam: &Partition) -> Result<XiPoly> {
        if lam.total() != h.degree() {
            return Err(Error::SizeMismatch(format!(
                "{lam} is not a partition of {}",
                h.degree()
            )));
        }
        if !self.algebra.is_central(h) {
            return Err(Error::NotCentral);
        }
        let w = canonical_coxeter(h.degree(), lam.as_composition())?;
        h.inner(&HeckeElement::basis(w))
    }

    /// `Γ`-coordinates of a central element.
    pub fn expand_central(&self, h: &HeckeElement) -> Result<CentralExpansion> {
        if !self.algebra.is_central(h) {
            return Err(Error::NotCentral);
        }
        let n = h.degree();
        let coeffs = table_order(n)
            .into_iter()
            .map(|lam| {
                let w = canonical_coxeter(n, lam.as_composition())?;
                Ok((lam, h.coeff(&w)))
            })
            .collect::<Result<_>>()?;
        Ok(CentralExpansion::new(n, coeffs))
    }

    /// `Γ`-coordinates of `b_α`; compositions are sorted first.
    pub fn expand_norm(&self, alpha: &Composition, method: Method) -> Result<CentralExpansion> {
        let alpha = alpha.sorted();
        let n = alpha.total();
        match method {
            Method::Formula => {
                let coeffs = table_order(n)
                    .into_iter()
                    .map(|lam| {
                        let c = formula_coeff(&alpha, &lam)?;
                        Ok((lam, c))
                    })
                    .collect::<Result<_>>()?;
                Ok(CentralExpansion::new(n, coeffs))
            }
            Method::Direct => self.expand_central(&*self.norm_b(alpha.as_composition())?),
        }
    }

    /// `π_λ(b_α)` as `Σ_θ c_θ·N_{S_λ,S_θ}(η_θ)` over `θ ∈ Λ_λ(α)`, with
    /// `c_θ = n!·|C_θ|_{S_λ} / (|S_λ|·|C_α|)`.
    pub fn project_norm_general(
        &self,
        alpha: &Partition,
        lam: &Composition,
    ) -> Result<Vec<ProjectionTerm>> {
        let n = alpha.total();
        if lam.total() != n {
            return Err(Error::SizeMismatch(format!(
                "{alpha} and {lam} have different sizes"
            )));
        }
        let denominator = lam.parabolic_order() * alpha.class_size();
        multipartitions_of(lam, alpha)?
            .into_iter()
            .map(|theta| {
                let numerator = factorial(n) * class_size_in_parabolic(lam, &theta)?;
                let (coeff, r) = numerator.div_rem(&denominator);
                if !r.is_zero() {
                    return Err(Error::Invariant(format!(
                        "projection coefficient for {theta} is not an integer"
                    )));
                }
                let derived = theta.derived();
                let norm = self.relative_norm(lam, &derived, &self.eta(&derived)?)?;
                Ok(ProjectionTerm { theta, coeff, norm })
            })
            .collect()
    }

    /// `Γ_θ`: the product of the block class elements `Γ_{θ_i}` placed on
    /// the blocks of the shape of `θ`.
    pub fn gamma_multi(&self, theta: &Multipartition) -> Result<HeckeElement> {
        let shape = theta.shape();
        let n = shape.total();
        let mut out = HeckeElement::one(n);
        for ((o, &p), block) in shape
            .offsets()
            .into_iter()
            .zip(shape.parts())
            .zip(theta.blocks())
        {
            if p > 1 {
                out = self.algebra.mul(&out, &self.gamma(block)?.embed(o, n))?;
            }
        }
        Ok(out)
    }

    /// Coefficient of `Γ_θ` in `N_{S_λ,S_μ}(η_μ)`:
    /// `(1_{S_θ})^{S_λ}(w_μ)·ξ^{l_θ−l_μ}`, the character factoring over blocks.
    pub fn parabolic_formula_coeff(
        &self,
        mu: &Composition,
        theta: &Multipartition,
    ) -> Result<XiPoly> {
        let lam = theta.shape();
        let pieces = split_refinement(mu, &lam)?;
        let mut chi = BigInt::from(1);
        for (block, piece) in theta.blocks().iter().zip(&pieces) {
            chi *= perm_character(block.total(), block.as_composition(), &piece.sorted())?;
            if chi.is_zero() {
                return Ok(XiPoly::zero());
            }
        }
        if theta.l() < mu.l() {
            return Err(Error::Invariant(format!(
                "character of {theta} at {mu} is {chi} although l_θ < l_μ"
            )));
        }
        Ok(XiPoly::monomial(chi, theta.l() - mu.l()))
    }

    /// Checks `b_α = Σ_λ formula_coeff(α,λ)·Γ_λ` for every `α ⊢ n`, and
    /// `N_{S_λ,S_μ}(η_μ) = Σ_{θ ∈ Λ_λ} (1_{S_θ})^{S_λ}(w_μ) ξ^{l_θ−l_μ} Γ_θ`
    /// for every `μ ≤ λ ⊨ n`.
    pub fn verify_main_theorem(&self, n: usize) -> Result<MainTheoremReport> {
        if n > self.verify_bound {
            return Err(Error::BoundExceeded {
                n,
                bound: self.verify_bound,
            });
        }
        let mut report = MainTheoremReport {
            n,
            ..Default::default()
        };
        let gammas = self.gammas(n)?;
        for alpha in table_order(n) {
            let mut expected = HeckeElement::zero(n);
            for (lam, g) in gammas.iter() {
                let c = formula_coeff(&alpha, lam)?;
                if !c.is_zero() {
                    expected.add_scaled(g, &c)?;
                }
            }
            let got = self.norm_b(alpha.as_composition())?;
            record_diff(
                &mut report.mismatches,
                "norm expansion",
                alpha.to_string(),
                "*".into(),
                &expected,
                &got,
            );
            report.norms_checked += 1;
        }

        let comps = compositions_of(n);
        for lam in &comps {
            let thetas = multipartitions_of_shape(lam)
                .into_iter()
                .map(|t| {
                    let g = self.gamma_multi(&t)?;
                    Ok((t, g))
                })
                .collect::<Result<Vec<_>>>()?;
            for mu in &comps {
                if !refinement_leq(mu, lam)? {
                    continue;
                }
                let mut expected = HeckeElement::zero(n);
                for (theta, g) in &thetas {
                    let c = self.parabolic_formula_coeff(mu, theta)?;
                    if !c.is_zero() {
                        expected.add_scaled(g, &c)?;
                    }
                }
                let got = self.relative_norm(lam, mu, &self.eta(mu)?)?;
                record_diff(
                    &mut report.mismatches,
                    "parabolic norm expansion",
                    mu.to_string(),
                    lam.to_string(),
                    &expected,
                    &got,
                );
                report.parabolic_pairs_checked += 1;
            }
        }
        Ok(report)
    }
}

/// All `(λ, coefficient)` pairs for a map keyed by partition, in table order.
pub fn in_table_order(n: usize, map: &BTreeMap<Partition, XiPoly>) -> Vec<(Partition, XiPoly)> {
    table_order(n)
        .into_iter()
        .map(|p| {
            let c = map.get(&p).cloned().unwrap_or_default();
            (p, c)
        })
        .collect()
}
