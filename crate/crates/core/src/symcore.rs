//! Permutations in one-line notation and their word combinatorics.
//!
//! `images[i]` holds `w(i+1)`. Products compose as functions,
//! `(u*v)(i) = u(v(i))`, so right multiplication by `s_i` swaps the entries
//! in positions `i` and `i+1` and a word `[i1, …, ir]` denotes
//! `s_{i1}·…·s_{ir}`.

use std::fmt;
use std::ops::Mul;

use itertools::Itertools;
use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combin::{Composition, Partition};
use crate::error::{Error, Result};

/// Largest supported degree.
pub const MAX_DEGREE: usize = 16;

/// An element of `S_n`, `n ≤ MAX_DEGREE`.
///
/// The derived ordering compares degree, then one-line notation
/// lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: u8,
    images: [u8; MAX_DEGREE],
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_DEGREE, "degree {n} exceeds {MAX_DEGREE}");
        let mut images = [0u8; MAX_DEGREE];
        for (i, slot) in images.iter_mut().enumerate().take(n) {
            *slot = (i + 1) as u8;
        }
        Permutation { n: n as u8, images }
    }

    /// From one-line notation, e.g. `[3, 4, 1, 2]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!(
                "degree {n} exceeds {MAX_DEGREE}"
            )));
        }
        let mut seen = [false; MAX_DEGREE + 1];
        let mut out = [0u8; MAX_DEGREE];
        for (i, &v) in images.iter().enumerate() {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a permutation of 1..{n}"
                )));
            }
            seen[v] = true;
            out[i] = v as u8;
        }
        Ok(Permutation {
            n: n as u8,
            images: out,
        })
    }

    /// `s_i` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::GeneratorOutOfRange { n, index: i });
        }
        Ok(Permutation::identity(n).mul_simple_right(i))
    }

    /// The product `s_{i1}·…·s_{ir}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = Permutation::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::GeneratorOutOfRange { n, index: i });
            }
            w = w.mul_simple_right(i);
        }
        Ok(w)
    }

    pub fn degree(&self) -> usize {
        self.n as usize
    }

    /// `w(i)` for one-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    fn slice(&self) -> &[u8] {
        &self.images[..self.n as usize]
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.slice().iter().map(|&v| v as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.slice()
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }

    pub fn try_mul(&self, rhs: &Permutation) -> Result<Permutation> {
        if self.n != rhs.n {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: rhs.degree(),
            });
        }
        Ok(self.compose(rhs))
    }

    fn compose(&self, rhs: &Permutation) -> Permutation {
        let mut images = [0u8; MAX_DEGREE];
        let n = self.n as usize;
        for (slot, &r) in images.iter_mut().zip(&rhs.images[..n]) {
            *slot = self.images[r as usize - 1];
        }
        Permutation { n: self.n, images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = [0u8; MAX_DEGREE];
        for i in 0..self.n as usize {
            images[self.images[i] as usize - 1] = (i + 1) as u8;
        }
        Permutation { n: self.n, images }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let s = self.slice();
        let mut count = 0;
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if s[i] > s[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `ℓ(w·s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// `ℓ(s_i·w) < ℓ(w)`, i.e. `i+1` appears before `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let s = self.slice();
        let pos = |v: usize| s.iter().position(|&x| x as usize == v).unwrap();
        pos(i) > pos(i + 1)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.degree())
            .filter(|&i| self.has_right_descent(i))
            .collect()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        self.inverse().right_descents()
    }

    /// `w·s_i`: swaps positions `i` and `i+1`.
    pub fn mul_simple_right(&self, i: usize) -> Permutation {
        let mut out = *self;
        out.images.swap(i - 1, i);
        out
    }

    /// `s_i·w`: swaps the values `i` and `i+1`.
    pub fn mul_simple_left(&self, i: usize) -> Permutation {
        let mut out = *self;
        for v in out.images[..self.n as usize].iter_mut() {
            if *v as usize == i {
                *v += 1;
            } else if *v as usize == i + 1 {
                *v -= 1;
            }
        }
        out
    }

    /// Canonical reduced word: repeatedly strip the leftmost right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = *self;
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.degree()).find(|&i| w.has_right_descent(i)) {
            w = w.mul_simple_right(i);
            word.push(i);
        }
        word.reverse();
        word
    }

    /// Bruhat order via the sorted-prefix criterion: `v ≤ w` iff for every
    /// `k` the sorted values `v(1..k)` are dominated entrywise by those of `w`.
    pub fn bruhat_leq(&self, w: &Permutation) -> Result<bool> {
        if self.n != w.n {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: w.degree(),
            });
        }
        let n = self.degree();
        let mut a = Vec::with_capacity(n);
        let mut b = Vec::with_capacity(n);
        for k in 0..n {
            let pa = a.partition_point(|&x| x < self.images[k]);
            a.insert(pa, self.images[k]);
            let pb = b.partition_point(|&x| x < w.images[k]);
            b.insert(pb, w.images[k]);
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Cycle lengths including fixed points, weakly decreasing.
    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j] as usize - 1;
                len += 1;
            }
            lens.push(len);
        }
        Composition::new(lens)
            .expect("cycle lengths are positive")
            .sorted()
    }

    /// `|w({1..k}) ∩ {k+1..n}|`, the least number of occurrences of `s_k`
    /// in a reduced word for `w`.
    pub fn hash_count(&self, k: usize) -> Result<usize> {
        let n = self.degree();
        if k == 0 || k >= n {
            return Err(Error::OutOfRange(format!(
                "k = {k} outside 1..{}",
                n.saturating_sub(1)
            )));
        }
        Ok(self.slice()[..k]
            .iter()
            .filter(|&&v| v as usize > k)
            .count())
    }

    /// The image of `self` in `S_n` acting on positions `offset+1 ..`.
    pub fn embed(&self, offset: usize, n: usize) -> Permutation {
        assert!(
            offset + self.degree() <= n,
            "embedding overflows degree {n}"
        );
        let mut out = Permutation::identity(n);
        for i in 0..self.degree() {
            out.images[offset + i] = self.images[i] + offset as u8;
        }
        out
    }

    /// Membership in the Young subgroup `S_λ`.
    pub fn lies_in(&self, lam: &Composition) -> bool {
        if lam.total() != self.degree() {
            return false;
        }
        let mut start = 0;
        for &p in lam.parts() {
            let range = (start + 1) as u8..=(start + p) as u8;
            if !self.images[start..start + p]
                .iter()
                .all(|v| range.contains(v))
            {
                return false;
            }
            start += p;
        }
        true
    }

    /// All of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        (1..=n)
            .permutations(n)
            .map(|p| Permutation::from_images(&p).expect("valid"))
            .collect()
    }

    /// Sort key used to list terms: length first, then canonical reduced
    /// word lexicographically.
    pub fn term_key(&self) -> (usize, Vec<usize>) {
        (self.length(), self.reduced_word())
    }

    /// `[1,2,1]`.
    pub fn word_string(&self) -> String {
        format!("[{}]", self.reduced_word().iter().join(","))
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.try_mul(rhs)
            .expect("degree mismatch in permutation product")
    }
}

impl Mul for Permutation {
    type Output = Permutation;
    fn mul(self, rhs: Permutation) -> Permutation {
        Mul::mul(&self, &rhs)
    }
}

/// `1 3 2`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.slice().iter().join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_images(&v).map_err(serde::de::Error::custom)
    }
}

fn check_partition_of(n: usize, lam: &Composition) -> Result<()> {
    if lam.total() != n {
        return Err(Error::SizeMismatch(format!(
            "{lam} is not a composition of {n}"
        )));
    }
    Ok(())
}

/// `C_λ`, in lexicographic one-line order.
pub fn conjugacy_class(n: usize, lam: &Partition) -> Result<Vec<Permutation>> {
    check_partition_of(n, lam)?;
    Ok(Permutation::all(n)
        .into_iter()
        .filter(|w| &w.cycle_type() == lam)
        .collect())
}

/// The elements of `C_λ` of minimal length.
pub fn min_length_class_elements(n: usize, lam: &Partition) -> Result<Vec<Permutation>> {
    let class = conjugacy_class(n, lam)?;
    let min = class.iter().map(Permutation::length).min().unwrap_or(0);
    Ok(class.into_iter().filter(|w| w.length() == min).collect())
}

/// `w_λ`: the product of the runs `s_{o+1}…s_{o+λ_i−1}` over the blocks.
pub fn canonical_coxeter(n: usize, lam: &Composition) -> Result<Permutation> {
    check_partition_of(n, lam)?;
    let word: Vec<usize> = lam
        .offsets()
        .into_iter()
        .zip(lam.parts())
        .flat_map(|(o, &p)| (o + 1)..(o + p))
        .collect();
    Permutation::from_word(n, &word)
}

/// `|C_{S_n}(w_α)|`.
pub fn centralizer_order(n: usize, alpha: &Partition) -> Result<BigInt> {
    check_partition_of(n, alpha)?;
    Ok(alpha.centralizer_order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::{compositions_of, factorial, partitions_of};
    use std::collections::{BTreeSet, HashMap, VecDeque};

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_images(v).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Every reduced word for `w`, by breadth-first search down right descents.
    fn all_reduced_words(w: &Permutation) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut queue = VecDeque::from([(*w, Vec::new())]);
        while let Some((v, suffix)) = queue.pop_front() {
            if v.is_identity() {
                out.push(suffix);
                continue;
            }
            for i in v.right_descents() {
                let mut s = vec![i];
                s.extend(&suffix);
                queue.push_back((v.mul_simple_right(i), s));
            }
        }
        out
    }

    /// Products of subwords of one reduced word of `w`.
    fn subword_products(w: &Permutation) -> BTreeSet<Permutation> {
        let word = w.reduced_word();
        let n = w.degree();
        (0..1u32 << word.len())
            .map(|mask| {
                let sub: Vec<usize> = word
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| mask >> j & 1 == 1)
                    .map(|(_, &i)| i)
                    .collect();
                Permutation::from_word(n, &sub).unwrap()
            })
            .collect()
    }

    #[test]
    fn from_word_examples() {
        assert_eq!(
            Permutation::from_word(3, &[1, 2, 1]).unwrap(),
            perm(&[3, 2, 1])
        );
        assert_eq!(
            Permutation::from_word(3, &[]).unwrap(),
            Permutation::identity(3)
        );
        let d2 = Permutation::from_word(4, &[2, 1, 3, 2]).unwrap();
        assert_eq!(d2, perm(&[3, 4, 1, 2]));
        assert_eq!(d2.length(), 4);
        assert_eq!(
            Permutation::from_word(3, &[1, 2]).unwrap(),
            perm(&[2, 3, 1])
        );
        assert_eq!(
            Permutation::from_word(3, &[3]),
            Err(Error::GeneratorOutOfRange { n: 3, index: 3 })
        );
    }

    #[test]
    fn simple_multiplication_sides() {
        let w = perm(&[2, 3, 1]);
        assert_eq!(
            w.mul_simple_right(1),
            w * Permutation::simple(3, 1).unwrap()
        );
        assert_eq!(w.mul_simple_left(1), Permutation::simple(3, 1).unwrap() * w);
        for w in Permutation::all(4) {
            for i in 1..4 {
                assert_eq!(w.has_left_descent(i), w.inverse().has_right_descent(i));
                assert_eq!(
                    w.has_left_descent(i),
                    w.mul_simple_left(i).length() < w.length()
                );
            }
        }
    }

    #[test]
    fn length_examples() {
        assert_eq!(Permutation::identity(5).length(), 0);
        assert_eq!(perm(&[3, 2, 1]).length(), 3);
    }

    #[test]
    fn reduced_word_examples() {
        assert!(Permutation::identity(3).reduced_word().is_empty());
        assert_eq!(perm(&[2, 1, 3]).reduced_word(), vec![1]);
        assert_eq!(perm(&[3, 2, 1]).reduced_word(), vec![1, 2, 1]);
        assert_eq!(all_reduced_words(&perm(&[3, 2, 1])).len(), 2);
    }

    #[test]
    fn reduced_words_round_trip() {
        for n in 1..=6 {
            for w in Permutation::all(n) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                assert_eq!(Permutation::from_word(n, &word).unwrap(), w);
            }
        }
    }

    #[test]
    fn bruhat_examples() {
        let w0 = perm(&[3, 2, 1]);
        let s1 = Permutation::simple(3, 1).unwrap();
        let s2 = Permutation::simple(3, 2).unwrap();
        assert!(Permutation::identity(3).bruhat_leq(&w0).unwrap());
        assert!(s2.bruhat_leq(&w0).unwrap());
        assert!(!(s1 * s2).bruhat_leq(&(s2 * s1)).unwrap());
        assert!(s1.bruhat_leq(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn bruhat_matches_subword_definition() {
        for n in 1..=4 {
            let all = Permutation::all(n);
            for w in &all {
                let below = subword_products(w);
                for v in &all {
                    assert_eq!(v.bruhat_leq(w).unwrap(), below.contains(v), "{v} ≤ {w}");
                }
            }
        }
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(Permutation::identity(4).cycle_type(), part(&[1, 1, 1, 1]));
        assert_eq!(
            Permutation::from_word(3, &[1, 2]).unwrap().cycle_type(),
            part(&[3])
        );
        assert_eq!(
            Permutation::from_word(4, &[1, 3]).unwrap().cycle_type(),
            part(&[2, 2])
        );
    }

    #[test]
    fn class_examples() {
        let c21 = conjugacy_class(3, &part(&[2, 1])).unwrap();
        let want: BTreeSet<_> = [vec![1], vec![2], vec![1, 2, 1]]
            .iter()
            .map(|w| Permutation::from_word(3, w).unwrap())
            .collect();
        assert_eq!(c21.into_iter().collect::<BTreeSet<_>>(), want);
        assert_eq!(
            conjugacy_class(3, &part(&[1, 1, 1])).unwrap(),
            vec![Permutation::identity(3)]
        );
        assert_eq!(conjugacy_class(4, &part(&[2, 2])).unwrap().len(), 3);
        assert!(conjugacy_class(4, &part(&[2, 1])).is_err());
    }

    #[test]
    fn minimal_class_elements() {
        let got: BTreeSet<_> = min_length_class_elements(3, &part(&[3]))
            .unwrap()
            .into_iter()
            .collect();
        let want: BTreeSet<_> = [vec![1, 2], vec![2, 1]]
            .iter()
            .map(|w| Permutation::from_word(3, w).unwrap())
            .collect();
        assert_eq!(got, want);
        assert_eq!(
            min_length_class_elements(4, &part(&[2, 2])).unwrap(),
            vec![Permutation::from_word(4, &[1, 3]).unwrap()]
        );
    }

    #[test]
    fn canonical_coxeter_examples() {
        let c = |v: &[usize]| Composition::new(v.to_vec()).unwrap();
        assert_eq!(
            canonical_coxeter(3, &c(&[1, 1, 1])).unwrap(),
            Permutation::identity(3)
        );
        assert_eq!(
            canonical_coxeter(3, &c(&[3])).unwrap(),
            Permutation::from_word(3, &[1, 2]).unwrap()
        );
        assert_eq!(
            canonical_coxeter(4, &c(&[2, 2])).unwrap(),
            Permutation::from_word(4, &[1, 3]).unwrap()
        );
        assert!(canonical_coxeter(4, &c(&[2, 1])).is_err());
        for n in 1..=6 {
            for lam in compositions_of(n) {
                assert_eq!(canonical_coxeter(n, &lam).unwrap().length(), lam.l());
            }
            for lam in partitions_of(n) {
                let w = canonical_coxeter(n, &lam).unwrap();
                assert!(min_length_class_elements(n, &lam).unwrap().contains(&w));
                assert!(min_length_class_elements(n, &lam)
                    .unwrap()
                    .iter()
                    .all(|v| v.length() == lam.l()));
            }
        }
    }

    #[test]
    fn class_sizes_match_enumeration() {
        for n in 1..=6 {
            let mut total = BigInt::from(0);
            for lam in partitions_of(n) {
                let size = BigInt::from(conjugacy_class(n, &lam).unwrap().len());
                assert_eq!(size, lam.class_size());
                total += size;
            }
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn centralizer_examples() {
        assert_eq!(
            centralizer_order(3, &part(&[2, 1])).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            centralizer_order(3, &part(&[1, 1, 1])).unwrap(),
            BigInt::from(6)
        );
    }

    #[test]
    fn hash_count_examples() {
        assert_eq!(Permutation::identity(5).hash_count(2).unwrap(), 0);
        for k in 1..5 {
            assert_eq!(Permutation::simple(5, k).unwrap().hash_count(k).unwrap(), 1);
        }
        assert!(Permutation::identity(3).hash_count(3).is_err());
    }

    #[test]
    fn hash_count_is_minimal_occurrence_count() {
        for n in 2..=5 {
            for w in Permutation::all(n) {
                let words = all_reduced_words(&w);
                for k in 1..n {
                    let min = words
                        .iter()
                        .map(|wd| wd.iter().filter(|&&i| i == k).count())
                        .min();
                    assert_eq!(Some(w.hash_count(k).unwrap()), min, "{w}, k = {k}");
                }
            }
        }
    }

    #[test]
    fn hash_count_matches_descent_recursion() {
        // f(w) = min over right descents i of f(w·s_i) + [i = k]
        for n in 2..=6 {
            let mut all = Permutation::all(n);
            all.sort_by_key(Permutation::length);
            for k in 1..n {
                let mut f: HashMap<Permutation, usize> = HashMap::new();
                for w in &all {
                    let v = w
                        .right_descents()
                        .into_iter()
                        .map(|i| f[&w.mul_simple_right(i)] + usize::from(i == k))
                        .min()
                        .unwrap_or(0);
                    f.insert(*w, v);
                    assert_eq!(w.hash_count(k).unwrap(), v);
                }
            }
        }
    }

    #[test]
    fn embedding_and_membership() {
        let s1 = Permutation::simple(2, 1).unwrap();
        let e = s1.embed(2, 4);
        assert_eq!(e, Permutation::simple(4, 3).unwrap());
        let lam = Composition::new(vec![2, 2]).unwrap();
        assert!(e.lies_in(&lam));
        assert!(!Permutation::simple(4, 2).unwrap().lies_in(&lam));
    }

    #[test]
    fn rendering_and_json() {
        let w = perm(&[1, 3, 2]);
        assert_eq!(w.to_string(), "1 3 2");
        assert_eq!(perm(&[3, 2, 1]).word_string(), "[1,2,1]");
        assert_eq!(serde_json::to_string(&w).unwrap(), "[1,3,2]");
        assert_eq!(serde_json::from_str::<Permutation>("[1,3,2]").unwrap(), w);
        assert!(serde_json::from_str::<Permutation>("[1,1,2]").is_err());
    }

    #[test]
    fn group_laws() {
        let all = Permutation::all(4);
        for u in &all {
            assert!((u * &u.inverse()).is_identity());
            for v in &all {
                assert_eq!((u * v).inverse(), v.inverse() * u.inverse());
            }
        }
        assert!(Permutation::identity(3)
            .try_mul(&Permutation::identity(4))
            .is_err());
    }
}
