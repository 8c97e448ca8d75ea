//! Young subgroups, their distinguished coset and double coset
//! representatives, and the involutions `d_m` for maximal parabolics.

use itertools::Itertools;
use num_bigint::BigInt;

use crate::combin::{refinement_leq, Composition};
use crate::error::{Error, Result};
use crate::symcore::Permutation;

/// The Young subgroup `S_λ ≤ S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParabolicSpec {
    shape: Composition,
}

impl ParabolicSpec {
    pub fn new(shape: Composition) -> Self {
        ParabolicSpec { shape }
    }

    pub fn full(n: usize) -> Self {
        ParabolicSpec::new(Composition::full(n))
    }

    pub fn trivial(n: usize) -> Self {
        ParabolicSpec::new(Composition::trivial(n))
    }

    pub fn n(&self) -> usize {
        self.shape.total()
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn generators(&self) -> Vec<usize> {
        self.shape.generators()
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        w.lies_in(&self.shape)
    }

    pub fn order(&self) -> BigInt {
        self.shape.parabolic_order()
    }

    /// All elements, as products of per-block permutations, in
    /// lexicographic one-line order.
    pub fn elements(&self) -> Vec<Permutation> {
        let n = self.n();
        let mut out: Vec<Permutation> = self
            .shape
            .offsets()
            .into_iter()
            .zip(self.shape.parts())
            .map(|(o, &p)| {
                Permutation::all(p)
                    .into_iter()
                    .map(|w| w.embed(o, n))
                    .collect::<Vec<_>>()
            })
            .multi_cartesian_product()
            .map(|factors| {
                factors
                    .iter()
                    .fold(Permutation::identity(n), |acc, f| &acc * f)
            })
            .collect();
        out.sort();
        out
    }
}

fn by_length_then_one_line(v: &mut [Permutation]) {
    v.sort_by_key(|w| (w.length(), *w));
}

/// The minimal-length element of each right coset `S_μ·d` inside `S_λ`,
/// ordered by length then one-line notation.
///
/// `d` is minimal in `S_μ d` exactly when no generator of `S_μ` is a left
/// descent of `d`.
pub fn dist_right_coset_reps(sub: &ParabolicSpec, sup: &ParabolicSpec) -> Result<Vec<Permutation>> {
    if !refinement_leq(sub.shape(), sup.shape())? {
        return Err(Error::NotRefinement {
            sub: sub.shape().to_string(),
            sup: sup.shape().to_string(),
        });
    }
    let gens = sub.generators();
    let mut reps: Vec<Permutation> = sup
        .elements()
        .into_iter()
        .filter(|d| gens.iter().all(|&i| !d.has_left_descent(i)))
        .collect();
    by_length_then_one_line(&mut reps);
    Ok(reps)
}

/// The minimal-length element of each double coset `S_λ d S_μ`, ordered by
/// length then one-line notation.
pub fn dist_double_coset_reps(a: &ParabolicSpec, b: &ParabolicSpec) -> Result<Vec<Permutation>> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(format!(
            "{} and {} have different sizes",
            a.shape(),
            b.shape()
        )));
    }
    let left = a.generators();
    let right = b.generators();
    let mut reps: Vec<Permutation> = Permutation::all(a.n())
        .into_iter()
        .filter(|d| {
            left.iter().all(|&i| !d.has_left_descent(i))
                && right.iter().all(|&i| !d.has_right_descent(i))
        })
        .collect();
    by_length_then_one_line(&mut reps);
    Ok(reps)
}

fn check_d_range(n: usize, k: usize, m: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::OutOfRange(format!(
            "k = {k} outside 1..{}",
            n.saturating_sub(1)
        )));
    }
    if m > k.min(n - k) {
        return Err(Error::OutOfRange(format!(
            "m = {m} exceeds min(k, n-k) = {}",
            k.min(n - k)
        )));
    }
    Ok(())
}

/// `d_m = (k k+m)(k−1 k+m−1)…(k−m+1 k+1)`, the distinguished
/// `S_(k,n−k)` double coset representative with `m` crossings.
pub fn d_element(n: usize, k: usize, m: usize) -> Result<Permutation> {
    check_d_range(n, k, m)?;
    let mut images: Vec<usize> = (1..=n).collect();
    for j in 0..m {
        images.swap(k - j - 1, k + m - j - 1);
    }
    Permutation::from_images(&images)
}

/// Shape of `P_m = S_(k−m, m, m, n−k−m)`, zero parts dropped.
pub fn p_m_shape(n: usize, k: usize, m: usize) -> Result<Composition> {
    check_d_range(n, k, m)?;
    Composition::new_dropping_zeros(vec![k - m, m, m, n - k - m])
}

/// Shape of `d⁻¹ S_λ d ∩ S_μ` for a distinguished double coset
/// representative `d`. Position `i` is labelled by its `μ`-block and the
/// `λ`-block of `d(i)`; the intersection permutes each run of equal labels.
pub fn intersection_shape(
    lam: &Composition,
    d: &Permutation,
    mu: &Composition,
) -> Result<Composition> {
    let n = d.degree();
    if lam.total() != n || mu.total() != n {
        return Err(Error::SizeMismatch(format!(
            "{lam} and {mu} must both have size {n}"
        )));
    }
    let labels: Vec<(usize, usize)> = (1..=n)
        .map(|i| (mu.block_of(i), lam.block_of(d.image(i))))
        .collect();
    let runs = labels.iter().dedup_with_count().map(|(c, _)| c).collect();
    Composition::new(runs)
}

/// `d S d⁻¹`, where `S` is a subset closed under the operation.
pub fn conjugate_set(d: &Permutation, set: &[Permutation]) -> Vec<Permutation> {
    let di = d.inverse();
    let mut out: Vec<Permutation> = set.iter().map(|x| (d * x) * di).collect();
    out.sort();
    out
}

/// Elements of `S_within` normalizing `S_θ`, found by testing each element
/// against the generators of `S_θ`.
pub fn normalizer(within: &ParabolicSpec, theta: &ParabolicSpec) -> Result<Vec<Permutation>> {
    if within.n() != theta.n() {
        return Err(Error::SizeMismatch(format!(
            "{} and {} have different sizes",
            within.shape(),
            theta.shape()
        )));
    }
    let n = theta.n();
    let gens: Vec<Permutation> = theta
        .generators()
        .into_iter()
        .map(|i| Permutation::simple(n, i).expect("generator in range"))
        .collect();
    Ok(within
        .elements()
        .into_iter()
        .filter(|g| {
            let gi = g.inverse();
            gens.iter().all(|s| theta.contains(&((g * s) * gi)))
        })
        .collect())
}

/// `[N_{S_n}(S_θ) : S_θ]` by enumeration.
pub fn normalizer_index(theta: &ParabolicSpec) -> Result<BigInt> {
    let norm = normalizer(&ParabolicSpec::full(theta.n()), theta)?;
    Ok(BigInt::from(norm.len()) / theta.order())
}
