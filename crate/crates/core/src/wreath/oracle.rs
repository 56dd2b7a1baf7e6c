//! Brute-force model of `H ≀ S_w` for small groups.
//!
//! Elements are `(h_1,…,h_w; γ)` acting on `{0..d} × {0..w}` by
//! `g·(x, j) = (h_{γ(j)}(x), γ(j))`. Classes come from explicit conjugation
//! and characters from induction off the Young subgroup
//! `H ≀ S_{n_1} × … × H ≀ S_{n_r}`; nothing here uses the recursion in the
//! parent module.

use std::collections::{BTreeSet, HashMap};

use num_bigint::{BigInt, BigUint};

use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::normalizer::{build_normalizer, NormalizerElement};
use crate::partition::{MultiPartition, Partition};
use crate::symmetric::MnEvaluator;
use crate::table::{CharacterTable, GroupData, Label};

/// Largest `|H|^w·w!` the oracle will enumerate.
pub const MAX_ORACLE_ORDER: u64 = 10_000;

pub type Perm = Vec<usize>;

/// `H` as explicit permutations of `{0..degree}`, with the class of every
/// element and the character data in matching class order.
#[derive(Clone, Debug)]
pub struct ExplicitGroup {
    pub degree: usize,
    pub elements: Vec<Perm>,
    pub class_of: Vec<usize>,
    pub data: GroupData,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElement {
    /// Indices into [`ExplicitGroup::elements`].
    pub components: Vec<usize>,
    pub permutation: Perm,
}

fn compose(p: &[usize], q: &[usize]) -> Perm {
    q.iter().map(|&x| p[x]).collect()
}

fn invert(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (x, &y) in p.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

fn all_perms(n: usize) -> Vec<Perm> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for q in all_perms(n - 1) {
        for pos in 0..n {
            let mut v = q.clone();
            v.insert(pos, n - 1);
            out.push(v);
        }
    }
    out.sort();
    out
}

/// Cycles of a permutation, each starting at its smallest point.
pub fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            cyc.push(x);
            x = p[x];
        }
        out.push(cyc);
    }
    out
}

fn cycle_type(p: &[usize]) -> Partition {
    let mut lens: Vec<usize> = cycles(p).iter().map(Vec::len).collect();
    lens.sort_unstable_by(|a, b| b.cmp(a));
    Partition::from_parts(lens)
}

impl ExplicitGroup {
    fn index_of(&self, p: &[usize]) -> usize {
        self.elements
            .iter()
            .position(|e| e == p)
            .expect("closed under multiplication")
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.index_of(&compose(&self.elements[a], &self.elements[b]))
    }

    fn identity(&self) -> usize {
        self.index_of(&(0..self.degree).collect::<Vec<_>>())
    }

    /// `Z_ℓ` as rotations, classes ordered `ω^1,…,ω^ℓ`.
    pub fn cyclic(ell: u64) -> Result<Self> {
        let data = crate::normalizer::cyclic_group_data(ell)?;
        let n = ell as usize;
        let elements = (1..=n).map(|i| (0..n).map(|x| (x + i) % n).collect()).collect();
        Ok(ExplicitGroup {
            degree: n,
            elements,
            class_of: (0..n).collect(),
            data,
        })
    }

    /// `N_{S_ℓ}(Z_ℓ)` as affine maps, with the table in ψ-ordering.
    pub fn normalizer(ell: u64) -> Result<Self> {
        let n = build_normalizer(ell)?;
        let elements: Vec<Perm> = n
            .elements()
            .iter()
            .map(|e| {
                (0..ell)
                    .map(|x| ((e.twist * x + e.shift) % ell) as usize)
                    .collect()
            })
            .collect();
        let class_of = n
            .elements()
            .iter()
            .map(|&e: &NormalizerElement| n.class_of(e))
            .collect();
        Ok(ExplicitGroup {
            degree: ell as usize,
            elements,
            class_of,
            data: n.group_data(),
        })
    }

    /// `h_j·h_{γ⁻¹j}·h_{γ⁻²j}⋯` along the cycle of `γ` through `cycle[0]`.
    pub fn cycle_product(&self, g: &WreathElement, cycle: &[usize]) -> Result<usize> {
        let ok = !cycle.is_empty()
            && cycle.iter().all(|&j| j < g.permutation.len())
            && (0..cycle.len()).all(|i| g.permutation[cycle[i]] == cycle[(i + 1) % cycle.len()]);
        if !ok {
            return Err(Error::InvalidArgument(format!(
                "{cycle:?} is not a cycle of {:?}",
                g.permutation
            )));
        }
        let inv = invert(&g.permutation);
        let mut acc = g.components[cycle[0]];
        let mut j = inv[cycle[0]];
        for _ in 1..cycle.len() {
            acc = self.mul(acc, g.components[j]);
            j = inv[j];
        }
        Ok(acc)
    }

    /// Class label of an explicit element: the multipartition of cycle
    /// lengths coloured by the class of the cycle product.
    pub fn cycle_structure(&self, g: &WreathElement) -> MultiPartition {
        let r = self.data.table.num_classes();
        let mut parts = vec![Vec::new(); r];
        for cyc in cycles(&g.permutation) {
            let c = self.cycle_product(g, &cyc).expect("own cycle");
            parts[self.class_of[c]].push(cyc.len());
        }
        MultiPartition::from_components(
            parts
                .into_iter()
                .map(|mut v| {
                    v.sort_unstable_by(|a, b| b.cmp(a));
                    Partition::from_parts(v)
                })
                .collect(),
        )
    }

    /// The element as a permutation of `degree·w` points, `(x, j) ↦ j·degree + x`.
    pub fn imbed(&self, g: &WreathElement) -> Perm {
        let d = self.degree;
        let w = g.permutation.len();
        let mut out = vec![0; d * w];
        for j in 0..w {
            let gj = g.permutation[j];
            let h = &self.elements[g.components[gj]];
            for x in 0..d {
                out[j * d + x] = gj * d + h[x];
            }
        }
        out
    }
}

/// Explicit `H ≀ S_w` with its multiplication.
pub struct ExplicitWreath<'a> {
    pub base: &'a ExplicitGroup,
    pub w: usize,
    pub elements: Vec<WreathElement>,
    index: HashMap<WreathElement, usize>,
}

impl<'a> ExplicitWreath<'a> {
    pub fn new(base: &'a ExplicitGroup, w: usize) -> Result<Self> {
        let order = (base.elements.len() as u64)
            .checked_pow(w as u32)
            .and_then(|x| x.checked_mul((1..=w as u64).product()))
            .unwrap_or(u64::MAX);
        if order > MAX_ORACLE_ORDER {
            return Err(Error::OverBound {
                what: "|H|^w w!",
                value: order,
                bound: MAX_ORACLE_ORDER,
                hint: "the oracle is for small groups only",
            });
        }
        let nh = base.elements.len();
        let mut elements = Vec::new();
        let count = nh.pow(w as u32);
        for gamma in all_perms(w) {
            for code in 0..count {
                let mut rest = code;
                let components = (0..w)
                    .map(|_| {
                        let c = rest % nh;
                        rest /= nh;
                        c
                    })
                    .collect();
                elements.push(WreathElement {
                    components,
                    permutation: gamma.clone(),
                });
            }
        }
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Ok(ExplicitWreath {
            base,
            w,
            elements,
            index,
        })
    }

    /// `(h;γ)(h';γ') = (i ↦ h_i·h'_{γ⁻¹(i)}; γγ')`.
    pub fn mul(&self, a: &WreathElement, b: &WreathElement) -> WreathElement {
        let inv = invert(&a.permutation);
        WreathElement {
            components: (0..self.w)
                .map(|i| self.base.mul(a.components[i], b.components[inv[i]]))
                .collect(),
            permutation: compose(&a.permutation, &b.permutation),
        }
    }

    pub fn inverse(&self, a: &WreathElement) -> WreathElement {
        let e = self.base.identity();
        let inv_perm = invert(&a.permutation);
        // Solve a·b = 1: h_i·h'_{γ⁻¹i} = 1.
        let mut comps = vec![e; self.w];
        for i in 0..self.w {
            let hinv = self.base.index_of(&invert(&self.base.elements[a.components[i]]));
            comps[inv_perm[i]] = hinv;
        }
        WreathElement {
            components: comps,
            permutation: inv_perm,
        }
    }

    fn idx(&self, g: &WreathElement) -> usize {
        self.index[g]
    }

    /// Conjugacy classes by explicit conjugation; each is returned with its
    /// cycle-structure label, which must be constant on the class and
    /// distinct across classes.
    pub fn classes(&self) -> Result<Vec<(MultiPartition, Vec<usize>)>> {
        let n = self.elements.len();
        let inverses: Vec<WreathElement> = self.elements.iter().map(|g| self.inverse(g)).collect();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut orbit = BTreeSet::new();
            for (g, ginv) in self.elements.iter().zip(&inverses) {
                let y = self.mul(&self.mul(g, &self.elements[x]), ginv);
                orbit.insert(self.idx(&y));
            }
            let labels: BTreeSet<MultiPartition> = orbit
                .iter()
                .map(|&i| self.base.cycle_structure(&self.elements[i]))
                .collect();
            if labels.len() != 1 {
                return Err(Error::Consistency(format!(
                    "class of {:?} carries {} cycle structures",
                    self.elements[x],
                    labels.len()
                )));
            }
            for &i in &orbit {
                seen[i] = true;
            }
            out.push((labels.into_iter().next().unwrap(), orbit.into_iter().collect()));
        }
        let distinct: BTreeSet<&MultiPartition> = out.iter().map(|(l, _)| l).collect();
        if distinct.len() != out.len() {
            return Err(Error::Consistency("two classes share a cycle structure".into()));
        }
        Ok(out)
    }

    /// Value at `g` of the character of the Young subgroup attached to `α`,
    /// or `None` if `g` is outside the Young subgroup. Block `i` occupies
    /// the positions `offset_i .. offset_i + |αⁱ|`.
    fn young_value(
        &self,
        alpha: &MultiPartition,
        g: &WreathElement,
        mn: &mut MnEvaluator,
    ) -> Option<Cyclotomic> {
        let mut block = vec![0usize; self.w];
        let mut start = 0;
        for (i, a) in alpha.components().iter().enumerate() {
            for b in block.iter_mut().skip(start).take(a.size()) {
                *b = i;
            }
            start += a.size();
        }
        if (0..self.w).any(|j| block[g.permutation[j]] != block[j]) {
            return None;
        }
        let table = &self.base.data.table;
        let mut value = Cyclotomic::one();
        let mut types = vec![Vec::new(); alpha.len()];
        for cyc in cycles(&g.permutation) {
            let i = block[cyc[0]];
            let c = self.base.cycle_product(g, &cyc).expect("own cycle");
            value = &value * table.value(i, self.base.class_of[c]);
            types[i].push(cyc.len());
        }
        for (i, mut t) in types.into_iter().enumerate() {
            t.sort_unstable_by(|a, b| b.cmp(a));
            let rho = Partition::from_parts(t);
            let phi = mn.value(alpha.component(i), &rho).expect("sizes agree");
            value = &value * &Cyclotomic::from(phi);
        }
        Some(value)
    }

    /// Induced character `(Π ψ̂_i ⊗ φ_{αⁱ})↑` at every class representative.
    pub fn induced_character(
        &self,
        alpha: &MultiPartition,
        reps: &[usize],
    ) -> Vec<Cyclotomic> {
        let mut mn = MnEvaluator::new();
        let young_order: BigUint = alpha
            .components()
            .iter()
            .map(|a| {
                crate::symmetric::factorial(a.size())
                    * BigUint::from(self.base.elements.len()).pow(a.size() as u32)
            })
            .product();
        let scale = Rational::new(BigInt::from(1), BigInt::from(young_order));
        let inverses: Vec<WreathElement> = self.elements.iter().map(|g| self.inverse(g)).collect();
        reps.iter()
            .map(|&x| {
                let mut acc = Cyclotomic::zero();
                for (g, ginv) in self.elements.iter().zip(&inverses) {
                    let y = self.mul(&self.mul(g, &self.elements[x]), ginv);
                    if let Some(v) = self.young_value(alpha, &y, &mut mn) {
                        acc += &v;
                    }
                }
                acc.scale(&scale)
            })
            .collect()
    }
}

/// Oracle table of `H ≀ S_w` with rows and columns in the given label order
/// (normally [`crate::partition::enumerate_multipartitions`]).
pub fn brute_force_wreath_oracle(
    base: &ExplicitGroup,
    w: usize,
    labels: &[MultiPartition],
) -> Result<CharacterTable> {
    let wr = ExplicitWreath::new(base, w)?;
    let classes = wr.classes()?;
    if classes.len() != labels.len() {
        return Err(Error::Consistency(format!(
            "oracle found {} classes, expected {}",
            classes.len(),
            labels.len()
        )));
    }
    let mut reps = Vec::new();
    let mut centralizers = Vec::new();
    for lab in labels {
        let (_, members) = classes
            .iter()
            .find(|(l, _)| l == lab)
            .ok_or_else(|| Error::Consistency(format!("no class with structure {lab}")))?;
        reps.push(members[0]);
        centralizers.push(BigUint::from(wr.elements.len() / members.len()));
    }
    let values = labels
        .iter()
        .map(|alpha| wr.induced_character(alpha, &reps))
        .collect();
    let r = base.data.table.num_classes();
    let trivial_label =
        MultiPartition::empty(r).with_component(base.data.table.trivial(), Partition::row(w));
    let trivial = labels
        .iter()
        .position(|l| l == &trivial_label)
        .ok_or_else(|| Error::Consistency("trivial label missing".into()))?;
    CharacterTable::new(
        BigUint::from(wr.elements.len()),
        labels.iter().cloned().map(Label::Multi).collect(),
        centralizers,
        labels.iter().cloned().map(Label::Multi).collect(),
        values,
        Vec::new(),
        trivial,
    )
}

/// Cycle type in `S_{dw}` predicted from the cycle products: each `m`-cycle
/// of the product along a `k`-cycle of `γ` becomes one cycle of length `mk`.
pub fn predicted_imbedded_type(base: &ExplicitGroup, g: &WreathElement) -> Partition {
    let mut lens = Vec::new();
    for cyc in cycles(&g.permutation) {
        let c = base.cycle_product(g, &cyc).expect("own cycle");
        for m in cycle_type(&base.elements[c]).parts() {
            lens.push(m * cyc.len());
        }
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    Partition::from_parts(lens)
}

pub fn imbedded_type(base: &ExplicitGroup, g: &WreathElement) -> Partition {
    cycle_type(&base.imbed(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::gcd;
    use crate::partition::enumerate_multipartitions;
    use crate::wreath::{centralizer_order, wreath_table};

    fn oracle_vs_engine(base: &ExplicitGroup, w: usize) {
        let labels = enumerate_multipartitions(w, base.data.table.num_classes());
        let oracle = brute_force_wreath_oracle(base, w, &labels).unwrap();
        oracle.check_orthogonality().unwrap();
        let engine = wreath_table(&base.data, w).unwrap();
        assert_eq!(oracle.centralizers(), engine.centralizers());
        assert_eq!(oracle.values(), engine.values());
        for (i, lab) in labels.iter().enumerate() {
            assert_eq!(
                oracle.centralizers()[i],
                centralizer_order(&base.data.table, lab)
            );
        }
    }

    #[test]
    fn z2_wreath_s2_is_d4() {
        let z2 = ExplicitGroup::cyclic(2).unwrap();
        let wr = ExplicitWreath::new(&z2, 2).unwrap();
        assert_eq!(wr.elements.len(), 8);
        assert_eq!(wr.classes().unwrap().len(), 5);
        oracle_vs_engine(&z2, 2);
    }

    #[test]
    fn small_wreaths_match() {
        oracle_vs_engine(&ExplicitGroup::cyclic(3).unwrap(), 2);
        oracle_vs_engine(&ExplicitGroup::normalizer(2).unwrap(), 2);
        oracle_vs_engine(&ExplicitGroup::normalizer(3).unwrap(), 2);
        oracle_vs_engine(&ExplicitGroup::normalizer(4).unwrap(), 2);
        oracle_vs_engine(&ExplicitGroup::cyclic(2).unwrap(), 3);
    }

    #[test]
    fn guard() {
        let z3 = ExplicitGroup::cyclic(3).unwrap();
        assert!(matches!(
            ExplicitWreath::new(&z3, 6),
            Err(Error::OverBound { .. })
        ));
    }

    #[test]
    fn cycle_products() {
        let z4 = ExplicitGroup::cyclic(4).unwrap();
        // Element i of the cyclic group is ω^{i+1}; index 3 is the identity.
        let id = 3;
        let g = WreathElement {
            components: vec![id, id],
            permutation: vec![1, 0],
        };
        assert_eq!(z4.cycle_product(&g, &[0, 1]).unwrap(), id);
        let g = WreathElement {
            components: vec![0, id],
            permutation: vec![1, 0],
        };
        assert_eq!(z4.cycle_product(&g, &[0, 1]).unwrap(), 0);
        let g = WreathElement {
            components: vec![0, 1],
            permutation: vec![1, 0],
        };
        // ω·ω² = ω³.
        assert_eq!(z4.cycle_product(&g, &[0, 1]).unwrap(), 2);
        assert!(z4.cycle_product(&g, &[0]).is_err());
    }

    #[test]
    fn imbedding_cycle_lengths() {
        for ell in 2..=4 {
            for base in [
                ExplicitGroup::cyclic(ell).unwrap(),
                ExplicitGroup::normalizer(ell).unwrap(),
            ] {
                for w in 1..=2 {
                    let wr = ExplicitWreath::new(&base, w).unwrap();
                    for g in &wr.elements {
                        assert_eq!(predicted_imbedded_type(&base, g), imbedded_type(&base, g));
                    }
                }
            }
        }
    }

    // The gcd/lcm count differs from the true cycle type as soon as a cycle
    // length of the product shares a factor with the cycle of γ.
    #[test]
    fn gcd_lcm_count_fails_on_shared_factors() {
        let z2 = ExplicitGroup::cyclic(2).unwrap();
        let wr = ExplicitWreath::new(&z2, 2).unwrap();
        let mut saw_failure = false;
        for g in &wr.elements {
            let mut lens = Vec::new();
            let mut shared = false;
            for cyc in cycles(&g.permutation) {
                let k = cyc.len();
                let c = z2.cycle_product(g, &cyc).unwrap();
                for &m in cycle_type(&z2.elements[c]).parts() {
                    let gd = gcd(m as u64, k as u64) as usize;
                    shared |= gd > 1;
                    lens.extend(std::iter::repeat(m * k / gd).take(gd));
                }
            }
            lens.sort_unstable_by(|a, b| b.cmp(a));
            let agrees = Partition::from_parts(lens) == imbedded_type(&z2, g);
            assert_eq!(agrees, !shared);
            saw_failure |= !agrees;
        }
        assert!(saw_failure);
        // γ = (1 2), h = (ω, 1) is a 4-cycle on 4 points.
        let g = WreathElement {
            components: vec![0, 1],
            permutation: vec![1, 0],
        };
        assert_eq!(imbedded_type(&z2, &g), Partition::row(4));
    }
}
