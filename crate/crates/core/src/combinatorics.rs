//! Integer partitions, d-partitions and ordered set partitions with
//! prescribed block sizes (empty blocks allowed).

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::wreath::{Block, WreathElement, YoungSubgroupSpec};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts.iter().join(",")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Parses `2,1` style text; `-` or the empty string is the empty partition.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "-" {
            return Ok(Self::empty());
        }
        let parts = text
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidToken(p.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts).map_err(|_| Error::InvalidPartition(text.to_string()))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("-")
        } else {
            write!(f, "{}", self.0.iter().join(","))
        }
    }
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Partitions {
    Partitions {
        current: if n == 0 { Some(Vec::new()) } else { Some(vec![n]) },
    }
}

#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let out = self.current.take()?;
        let mut next = out.clone();
        // strip trailing ones, decrement the last part > 1, refill greedily
        let mut rest = 0;
        while next.last() == Some(&1) {
            next.pop();
            rest += 1;
        }
        if let Some(last) = next.pop() {
            let q = last - 1;
            rest += last;
            while rest >= q {
                next.push(q);
                rest -= q;
            }
            if rest > 0 {
                next.push(rest);
            }
            self.current = Some(next);
        }
        Some(Partition(out))
    }
}

/// A sequence `(λ⁰, …, λ^{d-1})` of possibly empty partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DPartition {
    components: Vec<Partition>,
}

impl DPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::ComponentCount { expected: 1, got: 0 });
        }
        Ok(DPartition { components })
    }

    /// Parses `2,1/1/2` style text (components separated by `/`, `-` for empty).
    pub fn parse(text: &str, d: usize) -> Result<Self> {
        let components = text.trim().split('/').map(Partition::parse).collect::<Result<Vec<_>>>()?;
        if components.len() != d {
            return Err(Error::ComponentCount {
                expected: d,
                got: components.len(),
            });
        }
        Self::new(components)
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn d(&self) -> usize {
        self.components.len()
    }

    /// `n = Σ |λ^k|`
    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// `(a₀, …, a_{d-1})` with `a_k = |λ^k|`.
    pub fn component_sizes(&self) -> Vec<usize> {
        self.components.iter().map(Partition::size).collect()
    }

    /// `(r₀, …, r_{d-1})` with `r_k = ℓ(λ^k)`.
    pub fn lengths(&self) -> Vec<usize> {
        self.components.iter().map(Partition::len).collect()
    }

    /// All parts, component by component.
    pub fn flattened_type(&self) -> Vec<usize> {
        self.components.iter().flat_map(|c| c.parts().iter().copied()).collect()
    }
}

impl fmt::Display for DPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.components.iter().join("/"))
    }
}

/// Weak compositions of `n` into `parts` parts, lexicographically decreasing.
pub fn weak_compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(n);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=n).rev() {
            prefix.push(first);
            go(n - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, parts, &mut Vec::new(), &mut out);
    out
}

/// All d-partitions of `n`: component sizes in the order of
/// [`weak_compositions`], partitions of each size in the order of [`partitions`].
pub fn d_partitions(n: usize, d: usize) -> impl Iterator<Item = DPartition> {
    weak_compositions(n, d).into_iter().flat_map(|sizes| {
        sizes
            .into_iter()
            .map(|a| partitions(a).collect::<Vec<_>>())
            .multi_cartesian_product()
            .map(|components| DPartition { components })
    })
}

/// `n! / Π sᵢ!` for block sizes summing to `n`.
pub fn multinomial(sizes: &[usize]) -> u128 {
    let mut acc: u128 = 1;
    let mut total = 0u128;
    for &s in sizes {
        for i in 1..=s as u128 {
            total += 1;
            acc = acc * total / i;
        }
    }
    acc
}

/// A sequence of pairwise disjoint subsets of `[n]` covering `[n]`; blocks are
/// sorted and may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for b in &mut blocks {
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || x > n || seen[x - 1] {
                    return Err(Error::InvalidToken(x.to_string()));
                }
                seen[x - 1] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::SizeMismatch {
                expected: n,
                got: seen.iter().filter(|s| **s).count(),
            });
        }
        Ok(OrderedSetPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn type_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks = self.blocks.iter().map(|b| {
            if b.is_empty() {
                "-".to_string()
            } else {
                b.iter().join("")
            }
        });
        write!(f, "({})", blocks.format(","))
    }
}

/// Ordered set partitions of `[n]` with the given block sizes, in
/// lexicographic order of `(J₁, J₂, …)`.
pub fn ordered_set_partitions(n: usize, sizes: &[usize]) -> Result<OrderedSetPartitions> {
    let total: usize = sizes.iter().sum();
    if total != n {
        return Err(Error::SizeMismatch { expected: n, got: total });
    }
    Ok(OrderedSetPartitions {
        n,
        sizes: sizes.to_vec(),
        combos: sizes.iter().map(|&s| (0..s).collect()).collect(),
        done: false,
    })
}

/// Lazy enumerator behind [`ordered_set_partitions`]. Block `b` is stored as a
/// combination of indices into the letters not used by blocks before it.
#[derive(Debug, Clone)]
pub struct OrderedSetPartitions {
    n: usize,
    sizes: Vec<usize>,
    combos: Vec<Vec<usize>>,
    done: bool,
}

fn next_combination(c: &mut [usize], pool: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < pool - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

impl OrderedSetPartitions {
    fn materialize(&self) -> OrderedSetPartition {
        let mut avail: Vec<usize> = (1..=self.n).collect();
        let mut blocks = Vec::with_capacity(self.sizes.len());
        for combo in &self.combos {
            let block: Vec<usize> = combo.iter().map(|&i| avail[i]).collect();
            for &i in combo.iter().rev() {
                avail.remove(i);
            }
            blocks.push(block);
        }
        OrderedSetPartition { n: self.n, blocks }
    }

    fn advance(&mut self) -> bool {
        let mut pools = Vec::with_capacity(self.sizes.len());
        let mut left = self.n;
        for &s in &self.sizes {
            pools.push(left);
            left -= s;
        }
        for b in (0..self.sizes.len()).rev() {
            if next_combination(&mut self.combos[b], pools[b]) {
                for later in b + 1..self.sizes.len() {
                    self.combos[later] = (0..self.sizes[later]).collect();
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for OrderedSetPartitions {
    type Item = OrderedSetPartition;

    fn next(&mut self) -> Option<OrderedSetPartition> {
        if self.done {
            return None;
        }
        let out = self.materialize();
        self.done = !self.advance();
        Some(out)
    }
}

/// The interval partition `K(λ)`: consecutive blocks sized by the parts of
/// `λ⁰`, then `λ¹`, and so on; empty components contribute no blocks.
pub fn k_intervals(lambda: &DPartition) -> YoungSubgroupSpec {
    let mut blocks = Vec::new();
    let mut next = 1;
    for (k, comp) in lambda.components().iter().enumerate() {
        for &part in comp.parts() {
            blocks.push(Block {
                component: k,
                positions: (next..next + part).collect(),
            });
            next += part;
        }
    }
    YoungSubgroupSpec::from_parts(lambda.clone(), blocks)
}

/// The element `u(J)` whose one-line notation carries the consecutive letters
/// `K^k_i` (in increasing order) in the positions `J^k_i`.
///
/// `u(J)⁻¹` is the blockwise-increasing coset representative with the letters
/// of `J^k_i` in the positions `K^k_i`; `J ↦ u(J)⁻¹` is a bijection onto
/// [`YoungSubgroupSpec::min_coset_reps`].
pub fn u_of_j(lambda: &DPartition, j: &OrderedSetPartition) -> Result<WreathElement> {
    let expected = lambda.flattened_type();
    let got = j.type_sizes();
    if expected != got || j.n() != lambda.size() {
        return Err(Error::TypeMismatch { expected, got });
    }
    let spec = k_intervals(lambda);
    let mut w = vec![0; j.n()];
    for (k_block, j_block) in spec.blocks().iter().zip(j.blocks()) {
        for (&letter, &pos) in k_block.positions.iter().zip(j_block) {
            w[pos - 1] = letter;
        }
    }
    WreathElement::from_permutation(w, lambda.d() as u32)
}
