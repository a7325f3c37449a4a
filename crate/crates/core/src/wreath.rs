//! Elements of the wreath product `G(n,d) = Z/dZ ≀ S_n` in one-line notation.
//!
//! An element `g = (γ, w)` is the sequence `(ζ^γ₁ w₁, …, ζ^γₙ wₙ)` obtained by
//! letting `g` act on `(1, …, n)`, where the generators act on sequences by
//! `s_i` (swap positions `i`, `i+1`) and `t` (multiply the first entry by `ζ`).
//!
//! The product is fixed by `(g·h) ∘ σ = g ∘ (h ∘ σ)`. A general element acts by
//! `g ∘ (a₁, …, aₙ) = (ζ^γ₁ a_{w₁}, …, ζ^γₙ a_{wₙ})`, so the one-line notation
//! of `g·h` is `(ζ^γᵢ · h_{wᵢ})ᵢ`. For uncolored elements this is composition
//! of permutations in diagram order: `(g·h)ᵢ = h(g(i))`.
//!
//! With this product the set of blockwise-increasing uncolored elements
//! ([`YoungSubgroupSpec::min_coset_reps`]) is a transversal of the right cosets
//! `G_λ·v`; the inverses of those elements form a left transversal
//! ([`YoungSubgroupSpec::left_transversal`]).

use std::fmt;

use itertools::Itertools;

use crate::combinatorics::{ordered_set_partitions, DPartition};
use crate::error::{Error, Result};

/// One entry `ζ^twist · letter` of a one-line notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistedLetter {
    pub letter: usize,
    pub twist: u32,
}

impl fmt::Display for TwistedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twist == 0 {
            write!(f, "{}", self.letter)
        } else {
            write!(f, "{}@{}", self.letter, self.twist)
        }
    }
}

/// An element `(γ, w)` of `G(n,d)`.
///
/// Ordering compares the permutation first and the color vector second.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElement {
    d: u32,
    w: Vec<usize>,
    gamma: Vec<u32>,
}

fn check_permutation(w: &[usize]) -> Result<()> {
    let n = w.len();
    let mut seen = vec![false; n];
    for &x in w {
        if x == 0 || x > n || seen[x - 1] {
            return Err(Error::NotAPermutation(n));
        }
        seen[x - 1] = true;
    }
    Ok(())
}

impl WreathElement {
    pub fn identity(n: usize, d: u32) -> Self {
        assert!(d > 0, "d must be positive");
        WreathElement {
            d,
            w: (1..=n).collect(),
            gamma: vec![0; n],
        }
    }

    /// Builds `(γ, w)`; colors are reduced modulo `d`.
    pub fn new(gamma: Vec<u32>, w: Vec<usize>, d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroOrder);
        }
        if gamma.len() != w.len() {
            return Err(Error::SizeMismatch {
                expected: w.len(),
                got: gamma.len(),
            });
        }
        check_permutation(&w)?;
        Ok(WreathElement {
            d,
            w,
            gamma: gamma.into_iter().map(|g| g % d).collect(),
        })
    }

    pub fn from_permutation(w: Vec<usize>, d: u32) -> Result<Self> {
        let n = w.len();
        Self::new(vec![0; n], w, d)
    }

    pub fn from_one_line(entries: &[TwistedLetter], d: u32) -> Result<Self> {
        Self::new(
            entries.iter().map(|e| e.twist).collect(),
            entries.iter().map(|e| e.letter).collect(),
            d,
        )
    }

    /// Parses whitespace-separated tokens `m` or `m@k` (for `ζ^k·m`).
    pub fn parse_one_line(text: &str, d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut entries = Vec::new();
        for token in text.split_whitespace() {
            let bad = || Error::InvalidToken(token.to_string());
            let (letter, twist) = match token.split_once('@') {
                Some((m, k)) => (m.parse::<usize>().map_err(|_| bad())?, k.parse::<u32>().map_err(|_| bad())?),
                None => (token.parse::<usize>().map_err(|_| bad())?, 0),
            };
            if letter == 0 {
                return Err(bad());
            }
            entries.push(TwistedLetter {
                letter,
                twist: twist % d,
            });
        }
        if entries.is_empty() {
            return Err(Error::InvalidToken(text.to_string()));
        }
        Self::from_one_line(&entries, d)
    }

    pub fn n(&self) -> usize {
        self.w.len()
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn gamma(&self) -> &[u32] {
        &self.gamma
    }

    /// The permutation `w` in one-line notation (letters `1..=n`).
    pub fn perm(&self) -> &[usize] {
        &self.w
    }

    /// Entry at 1-based position `i`.
    pub fn entry(&self, i: usize) -> TwistedLetter {
        TwistedLetter {
            letter: self.w[i - 1],
            twist: self.gamma[i - 1],
        }
    }

    pub fn one_line(&self) -> Vec<TwistedLetter> {
        (1..=self.n()).map(|i| self.entry(i)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.gamma.iter().all(|&g| g == 0) && self.w.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn is_uncolored(&self) -> bool {
        self.gamma.iter().all(|&g| g == 0)
    }

    /// `γ₁ + ⋯ + γₙ` reduced modulo `d`.
    pub fn twist_sum(&self) -> u32 {
        (self.gamma.iter().map(|&g| g as u64).sum::<u64>() % self.d as u64) as u32
    }

    fn check_same_group(&self, other: &Self) -> Result<()> {
        if self.n() != other.n() || self.d != other.d {
            return Err(Error::GroupMismatch(self.n(), self.d, other.n(), other.d));
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        let mut w = Vec::with_capacity(self.n());
        let mut gamma = Vec::with_capacity(self.n());
        for (&wi, &gi) in self.w.iter().zip(&self.gamma) {
            w.push(other.w[wi - 1]);
            gamma.push((gi + other.gamma[wi - 1]) % self.d);
        }
        Ok(WreathElement { d: self.d, w, gamma })
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut w = vec![0; n];
        let mut gamma = vec![0; n];
        for (i, (&wi, &gi)) in self.w.iter().zip(&self.gamma).enumerate() {
            w[wi - 1] = i + 1;
            gamma[wi - 1] = (self.d - gi) % self.d;
        }
        WreathElement { d: self.d, w, gamma }
    }

    /// `self · other · self⁻¹`
    pub fn conjugate(&self, other: &Self) -> Self {
        &(self * other) * &self.inverse()
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n(), self.d);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// `s_i` swaps the letters in positions `i` and `i+1`, `1 <= i < n`.
    pub fn generator_s(n: usize, d: u32, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::GeneratorIndex { index: i, n });
        }
        let mut g = Self::identity(n, d);
        g.w.swap(i - 1, i);
        Ok(g)
    }

    /// `t` multiplies the first letter by `ζ`.
    pub fn generator_t(n: usize, d: u32) -> Self {
        let mut g = Self::identity(n, d);
        if n > 0 {
            g.gamma[0] = 1 % d;
        }
        g
    }

    /// `t_i = s_{i-1} ⋯ s₁ t s₁ ⋯ s_{i-1}`, `1 <= i <= n`.
    pub fn generator_t_i(n: usize, d: u32, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::GeneratorIndex { index: i, n });
        }
        let mut g = Self::generator_t(n, d);
        for j in 1..i {
            let s = Self::generator_s(n, d, j)?;
            g = &(&s * &g) * &s;
        }
        Ok(g)
    }
}

impl std::ops::Mul<&WreathElement> for &WreathElement {
    type Output = WreathElement;

    fn mul(self, rhs: &WreathElement) -> WreathElement {
        self.multiply(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_line().iter().join(" "))
    }
}

impl fmt::Debug for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

/// Number of inversions (Coxeter length) of a permutation in one-line notation.
pub fn inversions(w: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                count += 1;
            }
        }
    }
    count
}

/// `|G(n,d)| = dⁿ·n!`, if it fits.
pub fn group_order(n: usize, d: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for i in 1..=n {
        acc = acc.checked_mul(i as u128)?.checked_mul(d as u128)?;
    }
    Some(acc)
}

/// All elements of `G(n,d)`, `n >= 1`; permutations in lexicographic order, colors
/// lexicographically within each permutation.
pub fn all_elements(n: usize, d: u32) -> impl Iterator<Item = WreathElement> + Clone {
    (1..=n).permutations(n).flat_map(move |w| {
        std::iter::repeat_n(0..d, n)
            .multi_cartesian_product()
            .map(move |gamma| WreathElement {
                d,
                w: w.clone(),
                gamma,
            })
    })
}

/// One block `K^k_i` of the interval partition `K(λ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Block {
    /// Index `k` of the d-partition component the block belongs to.
    pub component: usize,
    /// Consecutive 1-based positions.
    pub positions: Vec<usize>,
}

/// The Young subgroup `G_λ` described by the interval blocks `K(λ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct YoungSubgroupSpec {
    dpartition: DPartition,
    blocks: Vec<Block>,
}

/// An element of `G_λ` with its factorization `y = y₀ ⋯ y_{d-1}`, `y_k ∈ G_{λ,k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungElement {
    pub element: WreathElement,
    pub factors: Vec<WreathElement>,
}

impl YoungSubgroupSpec {
    /// Use [`crate::combinatorics::k_intervals`] to build one from a d-partition.
    pub(crate) fn from_parts(dpartition: DPartition, blocks: Vec<Block>) -> Self {
        YoungSubgroupSpec { dpartition, blocks }
    }

    pub fn dpartition(&self) -> &DPartition {
        &self.dpartition
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.dpartition.size()
    }

    pub fn d(&self) -> u32 {
        self.dpartition.d() as u32
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.positions.len()).collect()
    }

    /// `|G_λ| = Π d^m · m!` over block sizes `m`.
    pub fn order(&self) -> u128 {
        self.blocks
            .iter()
            .map(|b| group_order(b.positions.len(), self.d()).expect("Young subgroup order overflow"))
            .product()
    }

    /// Block index of each 1-based position, stored at `position - 1`.
    fn block_of_position(&self) -> Vec<usize> {
        let mut out = vec![0; self.n()];
        for (bi, b) in self.blocks.iter().enumerate() {
            for &p in &b.positions {
                out[p - 1] = bi;
            }
        }
        out
    }

    /// Membership by block support: letters of every block stay in that block.
    pub fn contains(&self, g: &WreathElement) -> bool {
        if g.n() != self.n() || g.d() != self.d() {
            return false;
        }
        let block = self.block_of_position();
        g.perm()
            .iter()
            .enumerate()
            .all(|(i, &letter)| block[i] == block[letter - 1])
    }

    /// The factorization `g = g₀ ⋯ g_{d-1}` with `g_k ∈ G_{λ,k}`, if `g ∈ G_λ`.
    pub fn factor(&self, g: &WreathElement) -> Option<Vec<WreathElement>> {
        if !self.contains(g) {
            return None;
        }
        let d = self.d();
        let mut factors: Vec<WreathElement> = (0..d).map(|_| WreathElement::identity(self.n(), d)).collect();
        for b in &self.blocks {
            let f = &mut factors[b.component];
            for &p in &b.positions {
                f.w[p - 1] = g.w[p - 1];
                f.gamma[p - 1] = g.gamma[p - 1];
            }
        }
        Some(factors)
    }

    /// All of `G_λ`, each element with its component factorization.
    pub fn elements(&self) -> YoungElements {
        YoungElements::new(self.clone(), self.blocks.clone())
    }

    /// The factor `G_{λ,k}` of `G_λ`, embedded in `G(n,d)`.
    pub fn component_elements(&self, k: usize) -> YoungElements {
        let blocks = self.blocks.iter().filter(|b| b.component == k).cloned().collect();
        YoungElements::new(self.clone(), blocks)
    }

    /// `G_λ^-`: uncolored elements whose one-line notation increases within
    /// each block of positions `K(λ)`. There are `n!/Π m!` of them.
    pub fn min_coset_reps(&self) -> impl Iterator<Item = WreathElement> + '_ {
        let n = self.n();
        let d = self.d();
        ordered_set_partitions(n, &self.block_sizes())
            .expect("block sizes sum to n")
            .map(move |osp| {
                let mut w = vec![0; n];
                for (b, letters) in self.blocks.iter().zip(osp.blocks()) {
                    for (&p, &l) in b.positions.iter().zip(letters) {
                        w[p - 1] = l;
                    }
                }
                WreathElement {
                    d,
                    w,
                    gamma: vec![0; n],
                }
            })
    }

    /// Left coset transversal `{v⁻¹ : v ∈ G_λ^-}` of `G_λ` in `G(n,d)`.
    pub fn left_transversal(&self) -> Vec<WreathElement> {
        self.min_coset_reps().map(|v| v.inverse()).collect()
    }
}

/// Restartable, index-addressable enumeration of a product of block-local
/// wreath products. Element `i` is the mixed-radix decoding of `i`, first block
/// most significant; within a block the permutation is more significant than
/// the colors.
#[derive(Debug, Clone)]
pub struct YoungElements {
    spec: YoungSubgroupSpec,
    blocks: Vec<Block>,
    radices: Vec<u128>,
    total: u128,
    next: u128,
}

impl YoungElements {
    fn new(spec: YoungSubgroupSpec, blocks: Vec<Block>) -> Self {
        let d = spec.d();
        let radices: Vec<u128> = blocks
            .iter()
            .map(|b| group_order(b.positions.len(), d).expect("block group order overflow"))
            .collect();
        let total = radices.iter().product();
        YoungElements {
            spec,
            blocks,
            radices,
            total,
            next: 0,
        }
    }

    pub fn total(&self) -> u128 {
        self.total
    }

    /// Element with the given index, or `None` past the end.
    pub fn element_at(&self, index: u128) -> Option<YoungElement> {
        if index >= self.total {
            return None;
        }
        let n = self.spec.n();
        let d = self.spec.d();
        let mut g = WreathElement::identity(n, d);
        let mut rest = index;
        for (b, &radix) in self.blocks.iter().zip(&self.radices).rev() {
            let local = rest % radix;
            rest /= radix;
            let m = b.positions.len();
            let colors = (d as u128).pow(m as u32);
            let (perm_idx, mut color_idx) = (local / colors, local % colors);
            let letters = unrank_permutation(&b.positions, perm_idx);
            for (&p, l) in b.positions.iter().zip(letters).rev() {
                g.w[p - 1] = l;
                g.gamma[p - 1] = (color_idx % d as u128) as u32;
                color_idx /= d as u128;
            }
        }
        let factors = self.spec.factor(&g).expect("enumerated element lies in G_λ");
        Some(YoungElement { element: g, factors })
    }
}

impl Iterator for YoungElements {
    type Item = YoungElement;

    fn next(&mut self) -> Option<YoungElement> {
        let item = self.element_at(self.next)?;
        self.next += 1;
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.total - self.next.min(self.total);
        let left = usize::try_from(left).unwrap_or(usize::MAX);
        (left, Some(left))
    }
}

/// The `rank`-th arrangement (lexicographic) of the sorted `letters`.
fn unrank_permutation(letters: &[usize], mut rank: u128) -> Vec<usize> {
    let mut pool = letters.to_vec();
    let m = pool.len();
    let mut fact: u128 = (1..m as u128).product();
    let mut out = Vec::with_capacity(m);
    for i in (1..=m).rev() {
        let idx = (rank / fact) as usize;
        rank %= fact;
        out.push(pool.remove(idx));
        if i > 1 {
            fact /= (i - 1) as u128;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{d_partitions, k_intervals};
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn el(s: &str, d: u32) -> WreathElement {
        WreathElement::parse_one_line(s, d).unwrap()
    }

    fn dp(s: &str, d: usize) -> DPartition {
        DPartition::parse(s, d).unwrap()
    }

    #[test]
    fn identity_one_line() {
        assert_eq!(WreathElement::identity(3, 2).to_string(), "1 2 3");
        assert_eq!(WreathElement::identity(1, 1).to_string(), "1");
        assert_eq!(WreathElement::identity(6, 3), el("1 2 3 4 5 6", 3));
    }

    #[test]
    fn parsing() {
        let g = el("6 2 3 4@1 5 1@1", 3);
        assert_eq!(g.perm(), &[6, 2, 3, 4, 5, 1]);
        assert_eq!(g.gamma(), &[0, 0, 0, 1, 0, 1]);
        assert_eq!(g.to_string(), "6 2 3 4@1 5 1@1");
        assert_eq!(el("2@4 1", 3).gamma(), &[1, 0]);
        assert_eq!(
            WreathElement::parse_one_line("1 x@2", 3),
            Err(Error::InvalidToken("x@2".into()))
        );
        assert_eq!(
            WreathElement::parse_one_line("1 1", 3),
            Err(Error::NotAPermutation(2))
        );
        assert!(WreathElement::parse_one_line("", 3).is_err());
        assert!(WreathElement::parse_one_line("0 1", 3).is_err());
    }

    #[test]
    fn generators() {
        let t = WreathElement::generator_t(2, 3);
        assert_eq!(WreathElement::generator_t_i(2, 3, 1).unwrap(), t);
        // s₁ t s₁ ∘ (1,2) = s₁ ∘ (t ∘ (2,1)) = s₁ ∘ (ζ2, 1) = (1, ζ2)
        assert_eq!(WreathElement::generator_t_i(2, 3, 2).unwrap().to_string(), "1 2@1");
        let s1 = WreathElement::generator_s(3, 2, 1).unwrap();
        assert!((&s1 * &s1).is_identity());
        assert!(WreathElement::generator_s(3, 2, 3).is_err());
        assert!(WreathElement::generator_s(3, 2, 0).is_err());
        assert!(WreathElement::generator_t_i(3, 2, 4).is_err());
    }

    fn relations_hold(n: usize, d: u32) {
        let e = WreathElement::identity(n, d);
        let t = WreathElement::generator_t(n, d);
        let s: Vec<_> = (1..n).map(|i| WreathElement::generator_s(n, d, i).unwrap()).collect();
        assert_eq!(t.pow(d as u64), e);
        for si in &s {
            assert_eq!(si * si, e);
        }
        if n >= 2 {
            let lhs = &(&(&t * &s[0]) * &t) * &s[0];
            let rhs = &(&(&s[0] * &t) * &s[0]) * &t;
            assert_eq!(lhs, rhs);
        }
        for i in 0..s.len() {
            for j in 0..s.len() {
                let gap = i.abs_diff(j);
                if gap >= 2 {
                    assert_eq!(&s[i] * &s[j], &s[j] * &s[i]);
                }
                if gap == 1 {
                    assert_eq!(&(&s[i] * &s[j]) * &s[i], &(&s[j] * &s[i]) * &s[j]);
                }
            }
            if i >= 1 {
                assert_eq!(&t * &s[i], &s[i] * &t);
            }
        }
    }

    #[test]
    fn presentation_relations() {
        for n in 1..=4 {
            for d in 1..=4 {
                relations_hold(n, d);
            }
        }
    }

    #[test]
    fn group_is_closed_under_generators() {
        for n in 1..=4 {
            for d in 1..=3 {
                let mut gens = vec![WreathElement::generator_t(n, d)];
                gens.extend((1..n).map(|i| WreathElement::generator_s(n, d, i).unwrap()));
                let mut seen = HashSet::new();
                let mut frontier = vec![WreathElement::identity(n, d)];
                seen.insert(frontier[0].clone());
                while let Some(g) = frontier.pop() {
                    for s in &gens {
                        let h = &g * s;
                        if seen.insert(h.clone()) {
                            frontier.push(h);
                        }
                    }
                }
                let expected = group_order(n, d).unwrap() as usize;
                assert_eq!(seen.len(), expected);
                let all: HashSet<_> = all_elements(n, d).collect();
                assert_eq!(all, seen);
            }
        }
    }

    #[test]
    fn enumeration_is_sorted() {
        let v: Vec<_> = all_elements(3, 2).collect();
        assert_eq!(v.len(), 48);
        assert!(v.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(v[0], WreathElement::identity(3, 2));
    }

    #[test]
    fn product_examples() {
        // t·s₁ has one-line t acting on (2,1): (ζ2, 1)
        let t = WreathElement::generator_t(2, 3);
        let s = WreathElement::generator_s(2, 3, 1).unwrap();
        assert_eq!((&t * &s).to_string(), "2@1 1");
        assert_eq!((&s * &t).to_string(), "2 1@1");
        let diag = el("1@2 2@1 3", 3);
        assert_eq!(diag.inverse().to_string(), "1@1 2@2 3");
        assert!(WreathElement::identity(3, 2).inverse().is_identity());
        let a = WreathElement::identity(2, 3);
        let b = WreathElement::identity(3, 3);
        assert!(a.multiply(&b).is_err());
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(inversions(&[1, 2, 3, 4, 5, 6]), 0);
        assert_eq!(inversions(&[2, 1, 3]), 1);
        assert_eq!(inversions(&[3, 2, 1]), 3);
    }

    #[test]
    fn inverses_on_all_elements() {
        for g in all_elements(3, 3) {
            assert!((&g * &g.inverse()).is_identity());
            assert!((&g.inverse() * &g).is_identity());
        }
    }

    #[test]
    fn young_subgroup_counts() {
        let whole = k_intervals(&dp("3/-", 2));
        let v: Vec<_> = whole.elements().collect();
        assert_eq!(v.len(), 48);
        let all: HashSet<_> = all_elements(3, 2).collect();
        assert_eq!(v.iter().map(|y| y.element.clone()).collect::<HashSet<_>>(), all);

        let diag = k_intervals(&dp("1,1,1,1", 1));
        assert_eq!(diag.elements().count(), 1);
        let diag = k_intervals(&dp("1,1,1/-/-", 3));
        assert_eq!(diag.elements().count(), 27);
        assert!(diag.elements().all(|y| y.element.perm() == [1, 2, 3]));

        let spec = k_intervals(&dp("2,1/1/2", 3));
        // (9·2)·3·3·(9·2)
        assert_eq!(spec.order(), 2916);
        let elems: HashSet<_> = spec.elements().map(|y| y.element).collect();
        assert_eq!(elems.len(), 2916);
        assert!(elems.iter().all(|g| spec.contains(g)));
    }

    #[test]
    fn young_factorization() {
        let spec = k_intervals(&dp("2,1/1/2", 3));
        for y in spec.elements().step_by(7) {
            assert_eq!(y.factors.len(), 3);
            let prod = y
                .factors
                .iter()
                .fold(WreathElement::identity(6, 3), |acc, f| &acc * f);
            assert_eq!(prod, y.element);
            for (k, f) in y.factors.iter().enumerate() {
                for b in spec.blocks().iter().filter(|b| b.component != k) {
                    for &p in &b.positions {
                        assert_eq!(f.entry(p), TwistedLetter { letter: p, twist: 0 });
                    }
                }
            }
        }
        assert_eq!(spec.component_elements(0).count(), 9 * 2 * 3);
        assert_eq!(spec.component_elements(1).count(), 3);
        assert_eq!(spec.component_elements(2).count(), 18);
    }

    #[test]
    fn membership_matches_enumeration() {
        for d in 1..=2u32 {
            for lam in d_partitions(3, d as usize) {
                let spec = k_intervals(&lam);
                let members: HashSet<_> = spec.elements().map(|y| y.element).collect();
                for g in all_elements(3, d) {
                    assert_eq!(spec.contains(&g), members.contains(&g));
                }
            }
        }
    }

    #[test]
    fn coset_representatives() {
        assert_eq!(k_intervals(&dp("4", 1)).min_coset_reps().collect::<Vec<_>>(), vec![WreathElement::identity(4, 1)]);
        assert_eq!(k_intervals(&dp("3/1/2", 3)).min_coset_reps().count(), 60);
        let all: Vec<_> = k_intervals(&dp("1,1,1,1/-", 2)).min_coset_reps().collect();
        assert_eq!(all.len(), 24);
        assert!(all.iter().all(|g| g.is_uncolored()));
    }

    #[test]
    fn unique_right_coset_decomposition() {
        for n in 1..=4 {
            for d in 1..=2u32 {
                for lam in d_partitions(n, d as usize) {
                    let spec = k_intervals(&lam);
                    let reps: Vec<_> = spec.min_coset_reps().collect();
                    for g in all_elements(n, d) {
                        // g = y·v with v ∈ G_λ^-, y ∈ G_λ, for exactly one v
                        let hits = reps
                            .iter()
                            .filter(|v| spec.contains(&(&g * &v.inverse())))
                            .count();
                        assert_eq!(hits, 1, "λ={lam} g={g}");
                        // and g = u·y for exactly one u in the left transversal
                        let hits = spec
                            .left_transversal()
                            .iter()
                            .filter(|u| spec.contains(&(&u.inverse() * &g)))
                            .count();
                        assert_eq!(hits, 1);
                    }
                }
            }
        }
    }

    #[test]
    fn unranking() {
        let perms: Vec<_> = (0..6).map(|r| unrank_permutation(&[4, 5, 6], r)).collect();
        let expected: Vec<_> = [4, 5, 6].into_iter().permutations(3).collect();
        assert_eq!(perms, expected);
        assert_eq!(unrank_permutation(&[], 0), Vec::<usize>::new());
    }

    fn arb_element(n: usize, d: u32) -> impl Strategy<Value = WreathElement> {
        (
            Just((1..=n).collect::<Vec<_>>()).prop_shuffle(),
            prop::collection::vec(0..d, n),
        )
            .prop_map(move |(w, gamma)| WreathElement::new(gamma, w, d).unwrap())
    }

    fn arb_triple() -> impl Strategy<Value = (WreathElement, WreathElement, WreathElement)> {
        (1usize..=6, 1u32..=4).prop_flat_map(|(n, d)| (arb_element(n, d), arb_element(n, d), arb_element(n, d)))
    }

    proptest! {
        #[test]
        fn associativity((a, b, c) in arb_triple()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn action_convention((a, b, _) in arb_triple()) {
            // (a·b) acting on any sequence equals a acting on (b acting on it)
            let act = |g: &WreathElement, seq: &[TwistedLetter]| -> Vec<TwistedLetter> {
                g.one_line().iter().map(|e| {
                    let src = seq[e.letter - 1];
                    TwistedLetter { letter: src.letter, twist: (src.twist + e.twist) % g.d() }
                }).collect()
            };
            let base = WreathElement::identity(a.n(), a.d()).one_line();
            prop_assert_eq!(act(&(&a * &b), &base), act(&a, &act(&b, &base)));
            prop_assert_eq!(act(&(&a * &b), &base), (&a * &b).one_line());
        }

        #[test]
        fn parse_display_round_trip((a, _, _) in arb_triple()) {
            prop_assert_eq!(WreathElement::parse_one_line(&a.to_string(), a.d()).unwrap(), a);
        }
    }
}
