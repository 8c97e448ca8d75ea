//! The Iwahori–Hecke algebra of `S_n` over `ℤ[ξ]` in the normalized basis
//! `T̃_w`, where `T̃_s² = T̃_1 + ξ·T̃_s`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::combin::Composition;
use crate::cosets::{dist_right_coset_reps, ParabolicSpec};
use crate::error::{Error, Result};
use crate::polyring::XiPoly;
use crate::symcore::Permutation;

/// Which side a generator multiplies from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// `Σ r_w T̃_w` with finitely many nonzero `r_w ∈ ℤ[ξ]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Permutation, XiPoly>,
}

fn degree_check(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DegreeMismatch { left: a, right: b });
    }
    Ok(())
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        HeckeElement::basis(Permutation::identity(n))
    }

    /// `T̃_w`.
    pub fn basis(w: Permutation) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, XiPoly::one());
        HeckeElement {
            n: w.degree(),
            terms,
        }
    }

    /// `c·T̃_w`.
    pub fn monomial(w: Permutation, c: XiPoly) -> Self {
        let mut out = HeckeElement::zero(w.degree());
        out.add_term(w, &c);
        out
    }

    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Permutation, XiPoly)>,
    ) -> Result<Self> {
        let mut out = HeckeElement::zero(n);
        for (w, c) in terms {
            degree_check(n, w.degree())?;
            out.add_term(w, &c);
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Terms in map order (one-line lexicographic).
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &XiPoly)> {
        self.terms.iter()
    }

    /// Terms ordered by length, then by canonical reduced word.
    pub fn sorted_terms(&self) -> Vec<(&Permutation, &XiPoly)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(w, c)| (w.term_key(), w, c))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v.into_iter().map(|(_, w, c)| (w, c)).collect()
    }

    pub fn support(&self) -> impl Iterator<Item = &Permutation> {
        self.terms.keys()
    }

    /// `r_w`.
    pub fn coeff(&self, w: &Permutation) -> XiPoly {
        self.terms.get(w).cloned().unwrap_or_else(XiPoly::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, w: Permutation, c: &XiPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    fn add_scaled_term(&mut self, w: Permutation, a: &XiPoly, b: &XiPoly) {
        match self.terms.get_mut(&w) {
            Some(slot) => {
                slot.add_scaled(a, b);
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                let c = a * b;
                if !c.is_zero() {
                    self.terms.insert(w, c);
                }
            }
        }
    }

    pub fn try_add(&self, other: &HeckeElement) -> Result<HeckeElement> {
        degree_check(self.n, other.n)?;
        let mut out = self.clone();
        out.add_assign_ref(other);
        Ok(out)
    }

    pub(crate) fn add_assign_ref(&mut self, other: &HeckeElement) {
        for (w, c) in &other.terms {
            self.add_term(*w, c);
        }
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, other: &HeckeElement, c: &XiPoly) -> Result<()> {
        degree_check(self.n, other.n)?;
        for (w, r) in &other.terms {
            self.add_scaled_term(*w, r, c);
        }
        Ok(())
    }

    pub fn scale(&self, c: &XiPoly) -> HeckeElement {
        let mut out = HeckeElement::zero(self.n);
        for (w, r) in &self.terms {
            out.add_term(*w, &(r * c));
        }
        out
    }

    /// `T̃_x` multiplied by `s_i`, on the given side.
    pub fn mul_gen(&self, i: usize, side: Side) -> Result<HeckeElement> {
        if i == 0 || i >= self.n {
            return Err(Error::GeneratorOutOfRange {
                n: self.n,
                index: i,
            });
        }
        let mut out = HeckeElement::zero(self.n);
        for (w, c) in &self.terms {
            let (moved, descent) = match side {
                Side::Right => (w.mul_simple_right(i), w.has_right_descent(i)),
                Side::Left => (w.mul_simple_left(i), w.has_left_descent(i)),
            };
            out.add_term(moved, c);
            if descent {
                let mut xc = c.clone();
                xc.mul_xi_in_place();
                out.add_term(*w, &xc);
            }
        }
        Ok(out)
    }

    /// Right multiplication by the generators of `word` in order.
    pub fn mul_word_right(&self, word: &[usize]) -> Result<HeckeElement> {
        word.iter()
            .try_fold(self.clone(), |h, &i| h.mul_gen(i, Side::Right))
    }

    /// `⟨a, b⟩ = Σ_w r_w r'_w`.
    pub fn inner(&self, other: &HeckeElement) -> Result<XiPoly> {
        degree_check(self.n, other.n)?;
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = XiPoly::zero();
        for (w, r) in &small.terms {
            if let Some(r2) = large.terms.get(w) {
                acc.add_scaled(r, r2);
            }
        }
        Ok(acc)
    }

    /// Keeps the terms supported on `S_λ`.
    pub fn project(&self, lam: &Composition) -> Result<HeckeElement> {
        if lam.total() != self.n {
            return Err(Error::SizeMismatch(format!(
                "{lam} is not a composition of {}",
                self.n
            )));
        }
        Ok(HeckeElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.lies_in(lam))
                .map(|(w, c)| (*w, c.clone()))
                .collect(),
        })
    }

    /// `h|_{ξ=0}`.
    pub fn specialize_zero(&self) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(*w, c.constant_term());
        }
        out
    }

    /// Every coefficient lies in `ℕ[ξ]`.
    pub fn is_nonneg(&self) -> bool {
        self.terms.values().all(XiPoly::is_nonneg)
    }

    /// `b − a ∈ H⁺`.
    pub fn leq(&self, other: &HeckeElement) -> Result<bool> {
        Ok((other.try_sub(self)?).is_nonneg())
    }

    /// `a ≤ b` and `a ≠ b`.
    pub fn lt(&self, other: &HeckeElement) -> Result<bool> {
        Ok(self.leq(other)? && self != other)
    }

    pub fn try_sub(&self, other: &HeckeElement) -> Result<HeckeElement> {
        degree_check(self.n, other.n)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(*w, &-c);
        }
        Ok(out)
    }

    /// The image under `S_k → S_n` acting on positions `offset+1 ..`.
    pub fn embed(&self, offset: usize, n: usize) -> HeckeElement {
        HeckeElement {
            n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.embed(offset, n), c.clone()))
                .collect(),
        }
    }

    /// `T[2 1 3] + T[3 2 1] * (1 + x^2)`, terms by length then reduced word.
    pub fn to_text(&self) -> String {
        self.render(|c| c.to_string())
    }

    /// Text rendering with a caller-supplied coefficient format.
    pub fn to_text_with(&self, coeff_text: impl Fn(&Permutation, &XiPoly) -> String) -> String {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return "0".into();
        }
        terms
            .into_iter()
            .map(|(w, c)| format_term(&format!("T[{w}]"), &coeff_text(w, c)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    fn render(&self, coeff_text: impl Fn(&XiPoly) -> String) -> String {
        self.to_text_with(|_, c| coeff_text(c))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("hecke element serializes")
    }
}

/// `label` alone for coefficient `1`, `label * c` for a single positive
/// term, `label * (c)` otherwise.
pub(crate) fn format_term(label: &str, coeff: &str) -> String {
    if coeff == "1" {
        label.to_string()
    } else if coeff.contains(' ') || coeff.starts_with('-') {
        format!("{label} * ({coeff})")
    } else {
        format!("{label} * {coeff}")
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElement(n={}, {})", self.n, self.to_text())
    }
}

impl Add<&HeckeElement> for &HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        self.try_add(rhs).expect("degree mismatch in sum")
    }
}

impl Sub<&HeckeElement> for &HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        self.try_sub(rhs).expect("degree mismatch in difference")
    }
}

impl Neg for &HeckeElement {
    type Output = HeckeElement;
    fn neg(self) -> HeckeElement {
        HeckeElement {
            n: self.n,
            terms: self.terms.iter().map(|(w, c)| (*w, -c)).collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    perm: Permutation,
    coeff: XiPoly,
}

#[derive(Serialize, Deserialize)]
struct JsonElement {
    n: usize,
    terms: Vec<JsonTerm>,
}

impl Serialize for HeckeElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonElement {
            n: self.n,
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(w, c)| JsonTerm {
                    perm: *w,
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HeckeElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = JsonElement::deserialize(d)?;
        HeckeElement::from_terms(raw.n, raw.terms.into_iter().map(|t| (t.perm, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

/// An element of `ℤS_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, BigInt>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `Σ_{w ∈ set} c·w`.
    pub fn sum_of(n: usize, set: &[Permutation], c: BigInt) -> Self {
        let mut out = GroupAlgebraElement::zero(n);
        for w in set {
            out.add_term(*w, c.clone());
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    fn add_term(&mut self, w: Permutation, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Permutation) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(w, _)| w.term_key());
        let parts: Vec<String> = v
            .into_iter()
            .map(|(w, c)| {
                let c = c.to_string();
                let label = format!("[{w}]");
                if c.starts_with('-') {
                    format!("{label} * ({c})")
                } else {
                    format_term(&label, &c)
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupAlgebraElement(n={}, {})", self.n, self)
    }
}

/// Cache and threading settings for a [`HeckeAlgebra`].
#[derive(Clone, Debug)]
pub struct AlgebraConfig {
    pub cache_enabled: bool,
    /// Maximum number of memoized entries per table; a full table is cleared.
    pub cache_budget: usize,
    pub parallel: bool,
}

impl Default for AlgebraConfig {
    fn default() -> Self {
        AlgebraConfig {
            cache_enabled: true,
            cache_budget: 1 << 20,
            parallel: true,
        }
    }
}

/// A concurrent memo with idempotent insertion and whole-table reset.
pub(crate) struct Memo<K, V> {
    map: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo {
            map: RwLock::new(HashMap::new()),
        }
    }

    pub(crate) fn get(&self, k: &K) -> Option<Arc<V>> {
        self.map.read().expect("memo lock").get(k).cloned()
    }

    pub(crate) fn insert(&self, k: K, v: Arc<V>, budget: usize) -> Arc<V> {
        let mut map = self.map.write().expect("memo lock");
        if let Some(existing) = map.get(&k) {
            return existing.clone();
        }
        if map.len() >= budget {
            map.clear();
        }
        map.insert(k, v.clone());
        v
    }

    pub(crate) fn len(&self) -> usize {
        self.map.read().expect("memo lock").len()
    }

    pub(crate) fn clear(&self) {
        self.map.write().expect("memo lock").clear();
    }
}

/// Products and coset data shared across computations, with memoization.
pub struct HeckeAlgebra {
    config: AlgebraConfig,
    products: Memo<(Permutation, Permutation), HeckeElement>,
    reps: Memo<(Composition, Composition), Vec<Permutation>>,
}

impl Default for HeckeAlgebra {
    fn default() -> Self {
        HeckeAlgebra::new(AlgebraConfig::default())
    }
}

impl HeckeAlgebra {
    pub fn new(config: AlgebraConfig) -> Self {
        HeckeAlgebra {
            config,
            products: Memo::new(),
            reps: Memo::new(),
        }
    }

    pub fn config(&self) -> &AlgebraConfig {
        &self.config
    }

    pub fn cached_products(&self) -> usize {
        self.products.len()
    }

    pub fn clear_caches(&self) {
        self.products.clear();
        self.reps.clear();
    }

    /// `T̃_x·T̃_y`, by folding the reduced word of `y` onto `T̃_x`.
    pub fn basis_product(&self, x: &Permutation, y: &Permutation) -> Result<Arc<HeckeElement>> {
        degree_check(x.degree(), y.degree())?;
        if self.config.cache_enabled {
            if let Some(hit) = self.products.get(&(*x, *y)) {
                return Ok(hit);
            }
        }
        let prod = Arc::new(HeckeElement::basis(*x).mul_word_right(&y.reduced_word())?);
        if self.config.cache_enabled {
            return Ok(self
                .products
                .insert((*x, *y), prod, self.config.cache_budget));
        }
        Ok(prod)
    }

    pub fn mul(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        degree_check(a.n, b.n)?;
        let mut out = HeckeElement::zero(a.n);
        for (x, rx) in &a.terms {
            for (y, ry) in &b.terms {
                let coeff = rx * ry;
                let p = self.basis_product(x, y)?;
                out.add_scaled(&p, &coeff)?;
            }
        }
        Ok(out)
    }

    /// `f_{xyz}`, the coefficient of `T̃_z` in `T̃_x·T̃_y`.
    pub fn structure_constant(
        &self,
        x: &Permutation,
        y: &Permutation,
        z: &Permutation,
    ) -> Result<XiPoly> {
        Ok(self.basis_product(x, y)?.coeff(z))
    }

    /// `T̃_{d⁻¹}·h·T̃_d`.
    pub fn conjugate(&self, h: &HeckeElement, d: &Permutation) -> Result<HeckeElement> {
        degree_check(h.n, d.degree())?;
        let word = d.reduced_word();
        let mut out = h.mul_word_right(&word)?;
        // T̃_{d⁻¹} = T̃_{s_r}…T̃_{s_1}, so s_1 is applied on the left first
        for &i in &word {
            out = out.mul_gen(i, Side::Left)?;
        }
        Ok(out)
    }

    /// `h·T̃_s = T̃_s·h` for each listed generator.
    pub fn commutes_with_generators(&self, h: &HeckeElement, gens: &[usize]) -> Result<bool> {
        for &i in gens {
            if h.mul_gen(i, Side::Right)? != h.mul_gen(i, Side::Left)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Central in the parabolic subalgebra `H_λ`.
    pub fn commutes_with_parabolic(&self, h: &HeckeElement, lam: &Composition) -> Result<bool> {
        if lam.total() != h.n {
            return Err(Error::SizeMismatch(format!(
                "{lam} is not a composition of {}",
                h.n
            )));
        }
        self.commutes_with_generators(h, &lam.generators())
    }

    pub fn is_central(&self, h: &HeckeElement) -> bool {
        let gens: Vec<usize> = (1..h.n).collect();
        self.commutes_with_generators(h, &gens)
            .expect("generators are in range")
    }

    /// Distinguished right coset representatives of `S_sub` in `S_sup`,
    /// memoized.
    pub fn coset_reps(
        &self,
        sub: &Composition,
        sup: &Composition,
    ) -> Result<Arc<Vec<Permutation>>> {
        let key = (sub.clone(), sup.clone());
        if self.config.cache_enabled {
            if let Some(hit) = self.reps.get(&key) {
                return Ok(hit);
            }
        }
        let reps = Arc::new(dist_right_coset_reps(
            &ParabolicSpec::new(sub.clone()),
            &ParabolicSpec::new(sup.clone()),
        )?);
        if self.config.cache_enabled {
            return Ok(self.reps.insert(key, reps, self.config.cache_budget));
        }
        Ok(reps)
    }
}
