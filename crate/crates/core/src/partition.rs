//! Partitions, multipartitions, hooks, and the abacus.
//!
//! All enumerations are in reverse lexicographic order, so `(n)` comes first
//! and `(1^n)` last.
//!
//! The `ℓ`-abacus uses the beta-set of first-column hook lengths padded to
//! the least multiple of `ℓ` that is at least the number of parts. Runner `j`
//! holds the beta-numbers `≡ j (mod ℓ)` and carries quotient component `j`
//! (0-based). Because the bead count is a multiple of `ℓ`, adding zero parts
//! never relabels the runners.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest partition size accepted by the checked constructors.
pub const MAX_PARTITION_SIZE: usize = 60;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HookCell {
    /// 1-based row index.
    pub row: usize,
    /// 1-based column index.
    pub col: usize,
    pub hook_length: usize,
    pub leg_length: usize,
}

impl HookCell {
    pub fn arm_length(&self) -> usize {
        self.hook_length - self.leg_length - 1
    }
}

/// Result of sliding all `ℓ`-hooks off a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreQuotient {
    pub core: Partition,
    pub quotient: MultiPartition,
    /// `(-1)` to the total leg length of any complete `ℓ`-hook stripping.
    pub strip_sign: i32,
}

impl Partition {
    /// Checked constructor: parts must be positive and weakly decreasing,
    /// with total size at most [`MAX_PARTITION_SIZE`].
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        let size = parts
            .iter()
            .try_fold(0usize, |acc, &p| acc.checked_add(p))
            .unwrap_or(usize::MAX);
        if size > MAX_PARTITION_SIZE {
            return Err(Error::InvalidPartition(format!(
                "size {size} exceeds {MAX_PARTITION_SIZE}"
            )));
        }
        Ok(Partition { parts })
    }

    // Internal constructor; strips trailing zeros.
    pub(crate) fn from_parts(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_parts(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row `i` (0-based), zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let cols = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts: cols }
    }

    /// Multiplicity of each part size: entry `k` counts the parts equal to `k`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// One entry per cell, row-major.
    pub fn hook_data(&self) -> Vec<HookCell> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = conj.part(c) - r - 1;
                out.push(HookCell {
                    row: r + 1,
                    col: c + 1,
                    hook_length: arm + leg + 1,
                    leg_length: leg,
                });
            }
        }
        out
    }

    /// Removes the rim hook anchored at `cell`, returning the smaller
    /// partition and the leg length of the hook.
    pub fn remove_hook(&self, cell: &HookCell) -> Result<(Partition, usize)> {
        let bad = || Error::InvalidCell {
            partition: self.to_string(),
            row: cell.row,
            col: cell.col,
        };
        if cell.row == 0 || cell.col == 0 || cell.col > self.part(cell.row - 1) {
            return Err(bad());
        }
        let (i, j) = (cell.row - 1, cell.col - 1);
        let leg = self.conjugate().part(j) - i - 1;
        let arm = self.parts[i] - j - 1;
        if arm + leg + 1 != cell.hook_length || leg != cell.leg_length {
            return Err(bad());
        }
        Ok((self.strip_rim(i, j, leg), leg))
    }

    // Walk the rim from the end of row i down to the bottom of column j:
    // each row of the hook drops to the next row's length minus one, and the
    // last row is cut back to column j.
    fn strip_rim(&self, i: usize, j: usize, leg: usize) -> Partition {
        let mut parts = self.parts.clone();
        for r in i..i + leg {
            parts[r] = self.parts[r + 1] - 1;
        }
        parts[i + leg] = j;
        Self::from_parts(parts)
    }

    /// All partitions obtained by removing a rim hook of length `k`, with
    /// the leg length of each removed hook.
    pub fn removable_hooks(&self, k: usize) -> Vec<(Partition, usize)> {
        self.hook_data()
            .into_iter()
            .filter(|h| h.hook_length == k)
            .map(|h| (self.strip_rim(h.row - 1, h.col - 1, h.leg_length), h.leg_length))
            .collect()
    }

    /// Beta-set of first-column hook lengths with `beads` beads, descending.
    pub fn beta_set(&self, beads: usize) -> Vec<usize> {
        assert!(beads >= self.len(), "too few beads");
        (0..beads).map(|i| self.part(i) + beads - 1 - i).collect()
    }

    pub fn from_beta_set(beads: &BTreeSet<usize>) -> Partition {
        let n = beads.len();
        let parts = beads
            .iter()
            .rev()
            .enumerate()
            .map(|(i, &b)| b + i + 1 - n)
            .collect();
        Self::from_parts(parts)
    }

    fn abacus_beads(&self, ell: usize) -> usize {
        self.len().div_ceil(ell) * ell
    }

    /// `ℓ`-core, `ℓ`-quotient (length `ℓ`) and the stripping sign.
    pub fn ell_core_quotient(&self, ell: usize) -> Result<CoreQuotient> {
        if ell < 2 {
            return Err(Error::EllTooSmall(ell as u64));
        }
        let nbeads = self.abacus_beads(ell);
        let beta = self.beta_set(nbeads);

        let mut quotient = Vec::with_capacity(ell);
        for j in 0..ell {
            let levels: Vec<usize> = beta
                .iter()
                .filter(|&&b| b % ell == j)
                .map(|&b| (b - j) / ell)
                .collect();
            let cnt = levels.len();
            let parts = levels
                .iter()
                .enumerate()
                .map(|(t, &q)| q - (cnt - 1 - t))
                .collect();
            quotient.push(Self::from_parts(parts));
        }

        let mut beads: BTreeSet<usize> = beta.into_iter().collect();
        let mut legs = 0usize;
        // Move the largest movable bead one position up its runner until
        // nothing moves.
        while let Some(b) = beads
            .iter()
            .rev()
            .copied()
            .find(|&b| b >= ell && !beads.contains(&(b - ell)))
        {
            legs += beads.range(b - ell + 1..b).count();
            beads.remove(&b);
            beads.insert(b - ell);
        }
        Ok(CoreQuotient {
            core: Self::from_beta_set(&beads),
            quotient: MultiPartition::from_components(quotient),
            strip_sign: if legs % 2 == 0 { 1 } else { -1 },
        })
    }

    pub fn ell_core(&self, ell: usize) -> Result<Partition> {
        Ok(self.ell_core_quotient(ell)?.core)
    }

    /// Inverse of [`Partition::ell_core_quotient`] (ignoring the sign).
    pub fn from_core_quotient(core: &Partition, quotient: &MultiPartition, ell: usize) -> Result<Self> {
        if ell < 2 {
            return Err(Error::EllTooSmall(ell as u64));
        }
        if quotient.len() != ell {
            return Err(Error::SizeMismatch(format!(
                "quotient has {} components, expected {ell}",
                quotient.len()
            )));
        }
        if core.hook_data().iter().any(|h| h.hook_length % ell == 0) {
            return Err(Error::InvalidPartition(format!("{core} is not an {ell}-core")));
        }
        let depth = quotient.components().iter().map(Partition::len).max().unwrap_or(0);
        let nbeads = (core.len().div_ceil(ell) + depth) * ell;
        let core_beta = core.beta_set(nbeads);
        let mut beads = BTreeSet::new();
        for (j, comp) in quotient.components().iter().enumerate() {
            let cnt = core_beta.iter().filter(|&&b| b % ell == j).count();
            for t in 0..cnt {
                beads.insert(j + ell * (comp.part(t) + cnt - 1 - t));
            }
        }
        Ok(Self::from_beta_set(&beads))
    }

    /// `Π_k a_k!·k^{a_k}`, the centralizer order in `S_n` of an element of
    /// this cycle type.
    pub fn centralizer_order(&self) -> BigUint {
        let mut out = BigUint::one();
        for (k, &a) in self.multiplicities().iter().enumerate().skip(1) {
            for i in 1..=a {
                out *= BigUint::from(i) * BigUint::from(k);
            }
        }
        out
    }

    /// Sign of a permutation of this cycle type.
    pub fn permutation_sign(&self) -> i32 {
        if (self.size() - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let parts: Vec<usize> = serde_json::from_str(s)?;
        Self::new(parts)
    }
}

pub fn centralizer_order_sym(rho: &Partition) -> BigUint {
    rho.centralizer_order()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, reverse lexicographic.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill_partitions(n, n, &mut cur, &mut out);
    out
}

fn fill_partitions(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=max.min(rem)).rev() {
        cur.push(p);
        fill_partitions(rem - p, p, cur, out);
        cur.pop();
    }
}

/// A fixed-length tuple of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPartition {
    components: Vec<Partition>,
    total: usize,
}

impl MultiPartition {
    pub fn from_components(components: Vec<Partition>) -> Self {
        let total = components.iter().map(Partition::size).sum();
        MultiPartition { components, total }
    }

    /// `(∅, …, ∅)` with `r` components.
    pub fn empty(r: usize) -> Self {
        Self::from_components(vec![Partition::empty(); r])
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i]
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn size(&self) -> usize {
        self.total
    }

    /// Copy with component `i` replaced.
    pub fn with_component(&self, i: usize, p: Partition) -> Self {
        let mut components = self.components.clone();
        components[i] = p;
        Self::from_components(components)
    }

    /// Indices of nonempty components.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.components
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_empty())
            .map(|(i, _)| i)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let comps: Vec<Partition> = serde_json::from_str(s)?;
        let total: usize = comps.iter().map(Partition::size).sum();
        if total > MAX_PARTITION_SIZE {
            return Err(Error::InvalidPartition(format!(
                "total size {total} exceeds {MAX_PARTITION_SIZE}"
            )));
        }
        Ok(Self::from_components(comps))
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for MultiPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.components.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let comps = Vec::<Partition>::deserialize(d)?;
        Ok(MultiPartition::from_components(comps))
    }
}

/// All `r`-tuples of partitions of total size `w`. Component sizes run
/// through compositions of `w` in reverse lexicographic order (mass on the
/// first component first); within a composition, each component runs through
/// its partitions in reverse lexicographic order, earlier components slowest.
pub fn enumerate_multipartitions(w: usize, r: usize) -> Vec<MultiPartition> {
    assert!(r >= 1, "multipartitions need at least one component");
    let mut out = Vec::new();
    let mut sizes = Vec::with_capacity(r);
    compositions(w, r, &mut sizes, &mut |sizes| {
        let lists: Vec<Vec<Partition>> = sizes.iter().map(|&s| enumerate_partitions(s)).collect();
        let mut idx = vec![0usize; r];
        loop {
            out.push(MultiPartition::from_components(
                idx.iter().zip(&lists).map(|(&i, l)| l[i].clone()).collect(),
            ));
            let mut pos = r;
            loop {
                if pos == 0 {
                    return;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < lists[pos].len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    });
    out
}

fn compositions(rem: usize, slots: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if slots == 1 {
        cur.push(rem);
        f(cur);
        cur.pop();
        return;
    }
    for a in (0..=rem).rev() {
        cur.push(a);
        compositions(rem - a, slots - 1, cur, f);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    // Partition counts by the standard "parts at most k" recurrence.
    fn count_partitions_dp(n: usize) -> usize {
        let mut ways = vec![0usize; n + 1];
        ways[0] = 1;
        for k in 1..=n {
            for m in k..=n {
                ways[m] += ways[m - k];
            }
        }
        ways[n]
    }

    #[test]
    fn constructor_validates() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![61]).is_err());
        assert!(Partition::new(vec![]).unwrap().is_empty());
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(
            enumerate_partitions(3),
            vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]
        );
        assert_eq!(enumerate_partitions(7).len(), 15);
        for n in 0..=20 {
            let all = enumerate_partitions(n);
            assert_eq!(all.len(), count_partitions_dp(n));
            assert!(all.windows(2).all(|w| w[0] > w[1]), "not strictly reverse-lex");
        }
    }

    #[test]
    fn hooks() {
        assert!(Partition::empty().hook_data().is_empty());
        let h = p(&[2, 1]).hook_data();
        let mut lens: Vec<_> = h.iter().map(|c| c.hook_length).collect();
        lens.sort();
        assert_eq!(lens, vec![1, 1, 3]);
        assert_eq!(h[0].leg_length, 1);

        // Arms and legs counted cell by cell.
        let lam = p(&[4, 2, 1]);
        let mut oracle = Vec::new();
        for r in 0..lam.len() {
            for c in 0..lam.part(r) {
                let arm = lam.part(r) - c - 1;
                let leg = (r + 1..lam.len()).filter(|&rr| lam.part(rr) > c).count();
                oracle.push(arm + leg + 1);
            }
        }
        assert_eq!(oracle, vec![6, 4, 2, 1, 3, 1, 1]);
        let got: Vec<_> = lam.hook_data().iter().map(|c| c.hook_length).collect();
        assert_eq!(got, oracle);
    }

    #[test]
    fn hook_removal() {
        let cell = |lam: &Partition, r, c| {
            *lam.hook_data()
                .iter()
                .find(|h| h.row == r && h.col == c)
                .unwrap()
        };
        let a = p(&[2, 1]);
        assert_eq!(a.remove_hook(&cell(&a, 1, 1)).unwrap(), (Partition::empty(), 1));
        let b = p(&[3]);
        assert_eq!(b.remove_hook(&cell(&b, 1, 2)).unwrap(), (p(&[1]), 0));
        let c = p(&[4, 2, 1]);
        assert_eq!(c.remove_hook(&cell(&c, 1, 1)).unwrap(), (p(&[1]), 2));

        let bogus = HookCell {
            row: 2,
            col: 2,
            hook_length: 1,
            leg_length: 0,
        };
        assert!(matches!(a.remove_hook(&bogus), Err(Error::InvalidCell { .. })));
        let wrong_len = HookCell {
            hook_length: 2,
            ..cell(&a, 1, 1)
        };
        assert!(a.remove_hook(&wrong_len).is_err());
    }

    #[test]
    fn conjugation() {
        assert_eq!(p(&[2]).conjugate(), p(&[1, 1]));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
    }

    #[test]
    fn cores_and_quotients() {
        for ell in 2..7 {
            for w in 0..3 {
                for r in 0..ell {
                    let cq = Partition::row(ell * w + r).ell_core_quotient(ell).unwrap();
                    assert_eq!(cq.core, Partition::row(r));
                }
            }
        }
        let cq = p(&[2, 1]).ell_core_quotient(3).unwrap();
        assert_eq!(cq.core, Partition::empty());
        assert_eq!(cq.quotient.size(), 1);
        assert_eq!(cq.strip_sign, -1);

        let cq = Partition::empty().ell_core_quotient(4).unwrap();
        assert_eq!(cq.core, Partition::empty());
        assert_eq!(cq.quotient, MultiPartition::empty(4));
        assert_eq!(cq.strip_sign, 1);

        assert!(matches!(p(&[1]).ell_core_quotient(1), Err(Error::EllTooSmall(1))));
    }

    #[test]
    fn centralizers() {
        assert_eq!(p(&[3]).centralizer_order(), BigUint::from(3u32));
        assert_eq!(p(&[1, 1, 1]).centralizer_order(), BigUint::from(6u32));
        assert_eq!(p(&[2, 2, 1]).centralizer_order(), BigUint::from(8u32));
        for n in 0..=9usize {
            let fact: BigUint = (1..=n).map(BigUint::from).product();
            let total: BigUint = enumerate_partitions(n)
                .iter()
                .map(|rho| &fact / rho.centralizer_order())
                .sum();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn multipartitions() {
        assert_eq!(enumerate_multipartitions(0, 3), vec![MultiPartition::empty(3)]);
        let one = enumerate_multipartitions(1, 2);
        assert_eq!(
            one,
            vec![
                MultiPartition::from_components(vec![p(&[1]), Partition::empty()]),
                MultiPartition::from_components(vec![Partition::empty(), p(&[1])]),
            ]
        );
        for r in 1..6 {
            assert_eq!(enumerate_multipartitions(2, r).len(), 2 * r + r * (r - 1) / 2);
        }
    }

    #[test]
    fn json() {
        let lam = Partition::from_json_str("[4,2,1]").unwrap();
        assert_eq!(lam, p(&[4, 2, 1]));
        assert_eq!(serde_json::to_string(&lam).unwrap(), "[4,2,1]");
        assert!(Partition::from_json_str("[1,2]").is_err());
        assert!(Partition::from_json_str("[-1]").is_err());
        let mp = MultiPartition::from_json_str("[[2],[],[1,1]]").unwrap();
        assert_eq!(mp.size(), 4);
        assert_eq!(serde_json::to_string(&mp).unwrap(), "[[2],[],[1,1]]");
        assert!(MultiPartition::from_json_str("[[40],[40]]").is_err());
    }

    // Every order of stripping ell-hooks, collected as (core, sign).
    fn all_strippings(lam: &Partition, ell: usize) -> BTreeSet<(Partition, i32)> {
        let hooks = lam.removable_hooks(ell);
        if hooks.is_empty() {
            return BTreeSet::from([(lam.clone(), 1)]);
        }
        let mut out = BTreeSet::new();
        for (mu, leg) in hooks {
            let s = if leg % 2 == 0 { 1 } else { -1 };
            for (core, t) in all_strippings(&mu, ell) {
                out.insert((core, s * t));
            }
        }
        out
    }

    fn small_partition() -> impl Strategy<Value = Partition> {
        (0usize..=10).prop_flat_map(|n| {
            let all = enumerate_partitions(n);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn strip_sign_is_order_independent(lam in small_partition(), ell in 2usize..=6) {
            let cq = lam.ell_core_quotient(ell).unwrap();
            let all = all_strippings(&lam, ell);
            prop_assert_eq!(all.len(), 1);
            prop_assert_eq!(all.into_iter().next().unwrap(), (cq.core, cq.strip_sign));
        }

        #[test]
        fn abacus_round_trip(lam in small_partition(), ell in 2usize..=6) {
            let cq = lam.ell_core_quotient(ell).unwrap();
            prop_assert_eq!(lam.size(), cq.core.size() + ell * cq.quotient.size());
            prop_assert!(cq.core.hook_data().iter().all(|h| h.hook_length % ell != 0));
            let back = Partition::from_core_quotient(&cq.core, &cq.quotient, ell).unwrap();
            prop_assert_eq!(back, lam);
        }

        #[test]
        fn conjugate_is_involution(lam in small_partition()) {
            prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
            prop_assert_eq!(lam.conjugate().size(), lam.size());
        }

        #[test]
        fn hook_removal_sizes(lam in small_partition(), k in 1usize..=5) {
            for (mu, leg) in lam.removable_hooks(k) {
                prop_assert_eq!(mu.size() + k, lam.size());
                prop_assert!(leg < k);
            }
        }
    }

    #[test]
    fn quotients_are_a_bijection() {
        for ell in 2..=4 {
            for core in [Partition::empty(), p(&[1]), p(&[2])] {
                if core.hook_data().iter().any(|h| h.hook_length % ell == 0) {
                    continue;
                }
                for w in 0..=3 {
                    let images: BTreeSet<Partition> = enumerate_multipartitions(w, ell)
                        .iter()
                        .map(|q| Partition::from_core_quotient(&core, q, ell).unwrap())
                        .collect();
                    let with_core = enumerate_partitions(core.size() + ell * w)
                        .into_iter()
                        .filter(|l| l.ell_core(ell).unwrap() == core)
                        .collect::<BTreeSet<_>>();
                    assert_eq!(images, with_core);
                }
            }
        }
    }
}
