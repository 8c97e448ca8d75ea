//! Compositions, partitions and multipartitions, the refinement order, and
//! permutation characters induced from the trivial character of a Young
//! subgroup.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symcore::{canonical_coxeter, Permutation};

/// Largest degree for which [`perm_character_oracle`] will enumerate `S_n`.
pub const DEFAULT_ORACLE_BOUND: usize = 7;

/// An ordered, nonempty sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "{parts:?} has a zero part"
            )));
        }
        Ok(Composition { parts })
    }

    /// Drops zero parts first; `(0, …, 0)` is rejected.
    pub fn new_dropping_zeros(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts.into_iter().filter(|&p| p > 0).collect())
    }

    /// `(n)`.
    pub fn full(n: usize) -> Self {
        Composition { parts: vec![n] }
    }

    /// `(1, …, 1)`.
    pub fn trivial(n: usize) -> Self {
        Composition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// The partition with the same parts.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(Composition { parts })
    }

    /// Zero-based starting position of each block.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.parts
            .iter()
            .map(|p| {
                let o = acc;
                acc += p;
                o
            })
            .collect()
    }

    /// Block index of the one-based position `pos`.
    pub fn block_of(&self, pos: usize) -> usize {
        let mut acc = 0;
        for (b, p) in self.parts.iter().enumerate() {
            acc += p;
            if pos <= acc {
                return b;
            }
        }
        panic!("position {pos} outside a composition of {}", self.total());
    }

    /// Simple reflections `s_i` generating the Young subgroup `S_λ`.
    pub fn generators(&self) -> Vec<usize> {
        self.offsets()
            .into_iter()
            .zip(&self.parts)
            .flat_map(|(o, &p)| (o + 1)..(o + p))
            .collect()
    }

    /// `|S_λ| = ∏ λ_i!`.
    pub fn parabolic_order(&self) -> BigInt {
        self.parts.iter().map(|&p| factorial(p)).product()
    }

    /// `l_λ = Σ (λ_i − 1)`, the length of the canonical Coxeter element.
    pub fn l(&self) -> usize {
        self.total() - self.parts.len()
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

/// `(3,2,2,1,1,1)`.
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

/// Accepts `3,2,1`, `(3,2,1)` or `3 2 1`.
impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidComposition(format!("`{s}`: bad part `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// A composition whose parts are weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Composition);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let c = Composition::new(parts)?;
        if !c.is_partition() {
            return Err(Error::NotPartition(c.to_string()));
        }
        Ok(Partition(c))
    }

    pub fn full(n: usize) -> Self {
        Partition(Composition::full(n))
    }

    pub fn trivial(n: usize) -> Self {
        Partition(Composition::trivial(n))
    }

    pub fn as_composition(&self) -> &Composition {
        &self.0
    }

    /// Part size → multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        self.0.parts.iter().copied().counts().into_iter().collect()
    }

    /// `∏ i^{m_i} m_i!`, the order of the centralizer of an element of
    /// cycle type `self`.
    pub fn centralizer_order(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .map(|(i, m)| BigInt::from(i).pow(m as u32) * factorial(m))
            .product()
    }

    /// `|C_λ| = n! / z_λ`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.total()) / self.centralizer_order()
    }
}

impl Deref for Partition {
    type Target = Composition;
    fn deref(&self) -> &Composition {
        &self.0
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl TryFrom<Composition> for Partition {
    type Error = Error;
    fn try_from(c: Composition) -> Result<Self> {
        if c.is_partition() {
            Ok(Partition(c))
        } else {
            Err(Error::NotPartition(c.to_string()))
        }
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::try_from(s.parse::<Composition>()?)
    }
}

/// An ordered sequence of partitions; block `i` is a partition of `shape()[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multipartition {
    blocks: Vec<Partition>,
}

impl Multipartition {
    pub fn new(blocks: Vec<Partition>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidComposition(
                "multipartition with no blocks".into(),
            ));
        }
        Ok(Multipartition { blocks })
    }

    pub fn blocks(&self) -> &[Partition] {
        &self.blocks
    }

    /// The composition obtained by erasing the inner parentheses.
    pub fn derived(&self) -> Composition {
        Composition {
            parts: self
                .blocks
                .iter()
                .flat_map(|b| b.parts().iter().copied())
                .collect(),
        }
    }

    /// Sizes of the blocks.
    pub fn shape(&self) -> Composition {
        Composition {
            parts: self.blocks.iter().map(|b| b.total()).collect(),
        }
    }

    /// `l_θ`, the sum of the block lengths.
    pub fn l(&self) -> usize {
        self.blocks.iter().map(|b| b.l()).sum()
    }
}

/// `((2,1),(3,1,1),(2))`.
impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.blocks.iter().join(","))
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn require_same_total(a: &Composition, b: &Composition) -> Result<()> {
    if a.total() != b.total() {
        return Err(Error::SizeMismatch(format!(
            "{a} has size {} but {b} has size {}",
            a.total(),
            b.total()
        )));
    }
    Ok(())
}

/// `μ ≤ λ`: `λ` arises from `μ` by adding adjacent parts.
pub fn refinement_leq(mu: &Composition, lam: &Composition) -> Result<bool> {
    require_same_total(mu, lam)?;
    let mut it = mu.parts().iter();
    for &target in lam.parts() {
        let mut acc = 0;
        while acc < target {
            match it.next() {
                Some(p) => acc += p,
                None => return Ok(false),
            }
        }
        if acc != target {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Splits each part `p > 1` into `(p − 1, 1)`.
pub fn lambda_minus_one(lam: &Composition) -> Composition {
    let parts = lam
        .parts()
        .iter()
        .flat_map(|&p| if p > 1 { vec![p - 1, 1] } else { vec![1] })
        .collect();
    Composition { parts }
}

pub fn l_lambda(lam: &Composition) -> usize {
    lam.l()
}

/// Same multiset of parts.
pub fn conjugate_compositions(a: &Composition, b: &Composition) -> bool {
    a.sorted() == b.sorted()
}

/// All compositions of `n`, lexicographically decreasing.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest).rev() {
            cur.push(p);
            rec(rest - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

/// All partitions of `n`, lexicographically decreasing (`(n)` first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(Composition { parts: cur.clone() }));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Partitions of `n` in coefficient-table order: by `l_λ` ascending, ties
/// broken lexicographically decreasing. Starts at `(1^n)`, ends at `(n)`.
pub fn table_order(n: usize) -> Vec<Partition> {
    let mut ps = partitions_of(n);
    // partitions_of is lexicographically decreasing, and the sort is stable
    ps.sort_by_key(|p| p.l());
    ps
}

/// `Λ_λ`: every sequence of partitions `θ_i ⊢ λ_i`.
pub fn multipartitions_of_shape(lam: &Composition) -> Vec<Multipartition> {
    lam.parts()
        .iter()
        .map(|&p| partitions_of(p))
        .multi_cartesian_product()
        .map(|blocks| Multipartition { blocks })
        .collect()
}

/// `Λ_λ(α)`: the `λ`-multipartitions whose parts, taken together, are the
/// parts of `α`. Each block is generated in canonical (weakly decreasing)
/// order, trying larger parts first, so no deduplication is needed.
pub fn multipartitions_of(lam: &Composition, alpha: &Partition) -> Result<Vec<Multipartition>> {
    require_same_total(lam, alpha)?;
    let mut counts = vec![0usize; alpha.total() + 1];
    for &p in alpha.parts() {
        counts[p] += 1;
    }
    let mut out = Vec::new();
    let mut blocks = Vec::with_capacity(lam.len());
    distribute(lam.parts(), &mut counts, &mut blocks, &mut out);
    Ok(out)
}

fn distribute(
    sizes: &[usize],
    counts: &mut [usize],
    blocks: &mut Vec<Partition>,
    out: &mut Vec<Multipartition>,
) {
    let Some((&size, rest)) = sizes.split_first() else {
        out.push(Multipartition {
            blocks: blocks.clone(),
        });
        return;
    };
    let mut block = Vec::new();
    fill_block(size, size, counts, &mut block, &mut |counts, block| {
        blocks.push(Partition(Composition {
            parts: block.to_vec(),
        }));
        distribute(rest, counts, blocks, out);
        blocks.pop();
    });
}

fn fill_block(
    rest: usize,
    max: usize,
    counts: &mut [usize],
    block: &mut Vec<usize>,
    emit: &mut dyn FnMut(&mut [usize], &[usize]),
) {
    if rest == 0 {
        let snapshot = block.clone();
        emit(counts, &snapshot);
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        if counts[p] == 0 {
            continue;
        }
        counts[p] -= 1;
        block.push(p);
        fill_block(rest - p, p, counts, block, emit);
        block.pop();
        counts[p] += 1;
    }
}

/// `|C_θ|_{S_λ}`: the product over blocks of the class sizes in `S_{λ_i}`.
pub fn class_size_in_parabolic(lam: &Composition, theta: &Multipartition) -> Result<BigInt> {
    if &theta.shape() != lam {
        return Err(Error::SizeMismatch(format!(
            "{theta} has shape {} not {lam}",
            theta.shape()
        )));
    }
    Ok(theta.blocks().iter().map(Partition::class_size).product())
}

/// The permutation character `(1_{S_λ})^{S_n}` at an element of cycle type
/// `α`, computed as `n!/(|S_λ|·|C_α|) · Σ_{θ ∈ Λ_λ(α)} |C_θ|_{S_λ}`.
///
/// The division must be exact; a remainder means the enumeration is wrong
/// and is reported as an invariant violation.
pub fn perm_character(n: usize, lam: &Composition, alpha: &Partition) -> Result<BigInt> {
    if lam.total() != n || alpha.total() != n {
        return Err(Error::SizeMismatch(format!(
            "{lam} and {alpha} must both have size {n}"
        )));
    }
    let thetas = multipartitions_of(lam, alpha)?;
    if thetas.is_empty() {
        return Ok(BigInt::zero());
    }
    let mut sum = BigInt::zero();
    for theta in &thetas {
        sum += class_size_in_parabolic(lam, theta)?;
    }
    let numerator = factorial(n) * sum;
    let denominator = lam.parabolic_order() * alpha.class_size();
    let (q, r) = numerator.div_rem(&denominator);
    if !r.is_zero() {
        return Err(Error::Invariant(format!(
            "permutation character for {lam} at {alpha} is not an integer"
        )));
    }
    Ok(q)
}

/// Independent check of [`perm_character`]: the number of cosets `x·S_λ`
/// fixed by `w_α`, found by enumerating `S_n`.
pub fn perm_character_oracle(n: usize, lam: &Composition, alpha: &Partition) -> Result<BigInt> {
    perm_character_oracle_bounded(n, lam, alpha, DEFAULT_ORACLE_BOUND)
}

pub fn perm_character_oracle_bounded(
    n: usize,
    lam: &Composition,
    alpha: &Partition,
    bound: usize,
) -> Result<BigInt> {
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    if lam.total() != n || alpha.total() != n {
        return Err(Error::SizeMismatch(format!(
            "{lam} and {alpha} must both have size {n}"
        )));
    }
    let w = canonical_coxeter(n, alpha)?;
    // x S_λ is fixed by w iff x^{-1} w x ∈ S_λ; each coset has |S_λ| members
    let fixing = Permutation::all(n)
        .into_iter()
        .filter(|x| (&(x.inverse() * w) * x).lies_in(lam))
        .count();
    let order = lam.parabolic_order();
    let (q, r) = BigInt::from(fixing).div_rem(&order);
    if !r.is_zero() {
        return Err(Error::Invariant(
            "fixed-point count not a union of cosets".into(),
        ));
    }
    Ok(q)
}

/// `[S_n : S_λ]`.
pub fn parabolic_index(lam: &Composition) -> BigInt {
    factorial(lam.total()) / lam.parabolic_order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mp(blocks: &[&[usize]]) -> Multipartition {
        Multipartition::new(blocks.iter().map(|b| p(b)).collect()).unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(Composition::new(vec![]).is_err());
        assert!(Composition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(
            Composition::new_dropping_zeros(vec![2, 0, 2, 0]).unwrap(),
            c(&[2, 2])
        );
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(
            "3,2,2,1,1,1".parse::<Partition>().unwrap(),
            p(&[3, 2, 2, 1, 1, 1])
        );
        assert_eq!("(1, 2)".parse::<Composition>().unwrap(), c(&[1, 2]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a,b".parse::<Composition>().is_err());
        assert_eq!(p(&[3, 2, 2, 1, 1, 1]).to_string(), "(3,2,2,1,1,1)");
        assert_eq!(
            mp(&[&[2, 1], &[3, 1, 1], &[2]]).to_string(),
            "((2,1),(3,1,1),(2))"
        );
    }

    #[test]
    fn refinement_examples() {
        assert!(refinement_leq(&c(&[2, 1]), &c(&[2, 1])).unwrap());
        assert!(refinement_leq(&c(&[2, 1, 1]), &c(&[3, 1])).unwrap());
        assert!(!refinement_leq(&c(&[2, 2]), &c(&[3, 1])).unwrap());
        assert!(refinement_leq(&c(&[2, 2]), &c(&[3])).is_err());
    }

    #[test]
    fn refinement_is_a_partial_order() {
        for n in 1..=6 {
            let comps = compositions_of(n);
            assert_eq!(comps.len(), 1 << (n - 1));
            for a in &comps {
                assert!(refinement_leq(a, a).unwrap());
                for b in &comps {
                    let ab = refinement_leq(a, b).unwrap();
                    if ab && refinement_leq(b, a).unwrap() {
                        assert_eq!(a, b);
                    }
                    for d in &comps {
                        if ab && refinement_leq(b, d).unwrap() {
                            assert!(refinement_leq(a, d).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lambda_minus_one_examples() {
        assert_eq!(
            lambda_minus_one(&c(&[3, 4, 1, 7])),
            c(&[2, 1, 3, 1, 1, 6, 1])
        );
        assert_eq!(lambda_minus_one(&c(&[1, 1])), c(&[1, 1]));
        assert_eq!(lambda_minus_one(&c(&[2])), c(&[1, 1]));
    }

    #[test]
    fn l_lambda_examples() {
        assert_eq!(l_lambda(&c(&[1, 1, 1])), 0);
        assert_eq!(l_lambda(&c(&[5, 3, 2])), 7);
        assert_eq!(l_lambda(&c(&[3, 2, 2, 1, 1, 1])), 4);
    }

    #[test]
    fn conjugate_examples() {
        assert!(conjugate_compositions(&c(&[2, 1]), &c(&[1, 2])));
        assert!(!conjugate_compositions(&c(&[3]), &c(&[2, 1])));
        assert!(conjugate_compositions(&c(&[2, 1, 1]), &c(&[1, 2, 1])));
    }

    #[test]
    fn partition_counts_and_orders() {
        let counts: Vec<usize> = (1..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let order: Vec<String> = table_order(5).iter().map(ToString::to_string).collect();
        assert_eq!(
            order,
            [
                "(1,1,1,1,1)",
                "(2,1,1,1)",
                "(3,1,1)",
                "(2,2,1)",
                "(4,1)",
                "(3,2)",
                "(5)"
            ]
        );
        let order4: Vec<String> = table_order(4).iter().map(ToString::to_string).collect();
        assert_eq!(order4, ["(1,1,1,1)", "(2,1,1)", "(3,1)", "(2,2)", "(4)"]);
    }

    #[test]
    fn multipartitions_of_shape_examples() {
        assert_eq!(multipartitions_of_shape(&c(&[5])).len(), 7);
        assert_eq!(
            multipartitions_of_shape(&c(&[2, 1])),
            vec![mp(&[&[2], &[1]]), mp(&[&[1, 1], &[1]])]
        );
        assert_eq!(multipartitions_of_shape(&c(&[2, 2])).len(), 4);
    }

    #[test]
    fn multipartitions_of_examples() {
        assert!(multipartitions_of(&c(&[3, 2]), &p(&[4, 1]))
            .unwrap()
            .is_empty());
        let found = multipartitions_of(&c(&[3, 5, 2]), &p(&[3, 2, 2, 1, 1, 1])).unwrap();
        assert!(found.contains(&mp(&[&[2, 1], &[3, 1, 1], &[2]])));
        let listed = multipartitions_of(&c(&[5, 3, 2]), &p(&[3, 2, 2, 1, 1, 1])).unwrap();
        assert_eq!(
            listed,
            vec![
                mp(&[&[3, 2], &[2, 1], &[1, 1]]),
                mp(&[&[3, 2], &[1, 1, 1], &[2]]),
                mp(&[&[3, 1, 1], &[2, 1], &[2]]),
                mp(&[&[2, 2, 1], &[3], &[1, 1]]),
                mp(&[&[2, 1, 1, 1], &[3], &[2]]),
            ]
        );
        assert!(multipartitions_of(&c(&[3]), &p(&[2, 1, 1])).is_err());
    }

    #[test]
    fn multipartition_counts_sum_to_shape_count() {
        for n in 1..=6 {
            for lam in compositions_of(n) {
                let total: usize = partitions_of(n)
                    .iter()
                    .map(|a| multipartitions_of(&lam, a).unwrap().len())
                    .sum();
                assert_eq!(total, multipartitions_of_shape(&lam).len(), "{lam}");
            }
        }
    }

    #[test]
    fn class_sizes_in_parabolic() {
        let lam = c(&[5, 3, 2]);
        let sizes: Vec<BigInt> = multipartitions_of(&lam, &p(&[3, 2, 2, 1, 1, 1]))
            .unwrap()
            .iter()
            .map(|t| class_size_in_parabolic(&lam, t).unwrap())
            .collect();
        // |C_(2,2,1)| in S_5 is 15, so the fourth entry is 15·2
        assert_eq!(sizes, [60, 20, 60, 30, 20].map(BigInt::from));
        assert_eq!(
            class_size_in_parabolic(&lam, &mp(&[&[1; 5], &[1; 3], &[1, 1]])).unwrap(),
            BigInt::one()
        );
        assert!(class_size_in_parabolic(&c(&[3, 2]), &mp(&[&[2], &[1]])).is_err());
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(p(&[2, 1]).centralizer_order(), BigInt::from(2));
        assert_eq!(p(&[1, 1, 1]).centralizer_order(), BigInt::from(6));
        let alpha = p(&[3, 2, 2, 1, 1, 1]);
        // 3·(2²·2!)·(1³·3!); the two 2-cycles may be swapped
        assert_eq!(alpha.centralizer_order(), BigInt::from(144));
        let class = BigInt::from(10 * 9 * 8 * 7 * 6 * 5 * 4 / (3 * 2 * 2 * 2));
        assert_eq!(alpha.class_size(), class);
    }

    #[test]
    fn perm_character_examples() {
        assert_eq!(
            perm_character(4, &c(&[1, 1, 1, 1]), &p(&[1, 1, 1, 1])).unwrap(),
            factorial(4)
        );
        // 19 assignments of the cycles (3,2,2,1,1,1) to blocks of sizes 5, 3, 2
        assert_eq!(
            perm_character(10, &c(&[5, 3, 2]), &p(&[3, 2, 2, 1, 1, 1])).unwrap(),
            BigInt::from(19)
        );
        assert_eq!(
            perm_character(4, &c(&[2, 2]), &p(&[3, 1])).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            perm_character(4, &c(&[2, 2]), &p(&[2, 1, 1])).unwrap(),
            BigInt::from(2)
        );
        assert!(perm_character(4, &c(&[2, 2]), &p(&[3])).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            perm_character_oracle(3, &c(&[2, 1]), &p(&[2, 1])).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            perm_character_oracle(3, &c(&[2, 1]), &p(&[1, 1, 1])).unwrap(),
            BigInt::from(3)
        );
        assert_eq!(
            perm_character_oracle(4, &c(&[2, 2]), &p(&[2, 1, 1])).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            perm_character_oracle(8, &c(&[8]), &p(&[8])),
            Err(Error::BoundExceeded { n: 8, bound: 7 })
        );
    }

    #[test]
    fn perm_character_special_values() {
        for n in 1..=7 {
            for alpha in partitions_of(n) {
                assert_eq!(perm_character(n, &c(&[n]), &alpha).unwrap(), BigInt::one());
            }
            for lam in compositions_of(n) {
                assert_eq!(
                    perm_character(n, &lam, &Partition::trivial(n)).unwrap(),
                    parabolic_index(&lam)
                );
                for alpha in partitions_of(n) {
                    assert_eq!(
                        perm_character(n, &lam, &alpha).unwrap(),
                        perm_character(n, lam.sorted().as_composition(), &alpha).unwrap(),
                        "conjugate invariance {lam} at {alpha}"
                    );
                }
            }
        }
    }
}
