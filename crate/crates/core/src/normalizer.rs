//! The normalizer `N = N_{S_ℓ}(L) ≅ L ⋊ Aut(L)` of a cyclic group `L = ⟨ω⟩`
//! of order `ℓ`, with its Clifford-theoretic character table.
//!
//! Elements are pairs `(a, k)` acting as `x ↦ kx + a` on `Z/ℓ`, so that
//! `ω = (1, 1)` and `(a,k)·(b,m) = (a + kb, km)`.
//!
//! The irreducible characters are `ψ_{d,θ}` for `d | ℓ` and `θ` a linear
//! character of the stabilizer `K_[d] = {k : k ≡ 1 mod ℓ/d}`, induced from
//! `(a,k) ↦ ζ_ℓ^{da}·θ(k)` on `L ⋊ K_[d]`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};

use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::numtheory::{divisors, euler_phi, gcd, lcm, mobius, mod_inverse};
use crate::table::{CharacterTable, GroupData, Label};

pub const DEFAULT_MAX_NORMALIZER_ELL: u64 = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalizerElement {
    pub shift: u64,
    pub twist: u64,
}

impl NormalizerElement {
    pub fn mul(self, other: Self, ell: u64) -> Self {
        NormalizerElement {
            shift: (self.shift + self.twist * other.shift) % ell,
            twist: (self.twist * other.twist) % ell,
        }
    }

    pub fn inverse(self, ell: u64) -> Self {
        let kinv = mod_inverse(self.twist, ell).expect("twist is a unit");
        NormalizerElement {
            shift: (ell - (kinv * self.shift) % ell) % ell,
            twist: kinv,
        }
    }

    /// `g·self·g⁻¹`.
    pub fn conjugate_by(self, g: Self, ell: u64) -> Self {
        g.mul(self, ell).mul(g.inverse(ell), ell)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizerClass {
    pub representative: NormalizerElement,
    pub elements: Vec<NormalizerElement>,
    pub centralizer_order: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliffordLabel {
    pub d: u64,
    pub theta: usize,
}

/// A linear character of `K_[d]`, as `k ↦ ζ_e^{exponents[k]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerCharacter {
    pub exponent: u64,
    pub values: BTreeMap<u64, u64>,
}

#[derive(Clone, Debug)]
pub struct Normalizer {
    ell: u64,
    units: Vec<u64>,
    elements: Vec<NormalizerElement>,
    classes: Vec<NormalizerClass>,
    labels: Vec<CliffordLabel>,
    thetas: BTreeMap<u64, Vec<StabilizerCharacter>>,
    /// Rows follow `labels`.
    table: CharacterTable,
}

pub fn build_normalizer(ell: u64) -> Result<Normalizer> {
    build_normalizer_bounded(ell, DEFAULT_MAX_NORMALIZER_ELL)
}

pub fn build_normalizer_bounded(ell: u64, max_ell: u64) -> Result<Normalizer> {
    if ell < 2 {
        return Err(Error::EllTooSmall(ell));
    }
    if ell > max_ell {
        return Err(Error::OverBound {
            what: "ell",
            value: ell,
            bound: max_ell,
            hint: "raise the bound (ELLBLOCK_MAX_NORMALIZER_ELL) to build larger normalizers",
        });
    }
    let units: Vec<u64> = (1..ell).filter(|&k| gcd(k, ell) == 1).collect();
    let elements: Vec<NormalizerElement> = units
        .iter()
        .flat_map(|&twist| (0..ell).map(move |shift| NormalizerElement { shift, twist }))
        .collect();
    let classes = conjugacy_classes(&elements, ell);

    let mut thetas = BTreeMap::new();
    let mut labels = Vec::new();
    for d in divisors(ell) {
        let chars = stabilizer_characters(&stabilizer(ell, d), ell);
        for theta in 0..chars.len() {
            labels.push(CliffordLabel { d, theta });
        }
        thetas.insert(d, chars);
    }
    if labels.len() != classes.len() {
        return Err(Error::Consistency(format!(
            "{} Clifford labels but {} classes for ell = {ell}",
            labels.len(),
            classes.len()
        )));
    }

    let mut values = Vec::with_capacity(labels.len());
    for lab in &labels {
        let theta = &thetas[&lab.d][lab.theta];
        check_extension(ell, lab.d, theta)?;
        values.push(
            classes
                .iter()
                .map(|c| induced_value(ell, lab.d, theta, c.representative, &elements))
                .collect::<Vec<_>>(),
        );
    }

    let order = ell * units.len() as u64;
    let omega = class_of(&classes, NormalizerElement { shift: 1, twist: 1 });
    let trivial = labels
        .iter()
        .position(|l| l.d == ell && l.theta == 0)
        .expect("trivial label present");
    let table = CharacterTable::new(
        BigUint::from(order),
        classes
            .iter()
            .map(|c| Label::Affine {
                shift: c.representative.shift,
                twist: c.representative.twist,
            })
            .collect(),
        classes.iter().map(|c| BigUint::from(c.centralizer_order)).collect(),
        labels
            .iter()
            .map(|l| Label::Clifford { d: l.d, theta: l.theta })
            .collect(),
        values,
        vec![omega],
        trivial,
    )?;
    table.check_orthogonality()?;

    let n = Normalizer {
        ell,
        units,
        elements,
        classes,
        labels,
        thetas,
        table,
    };
    n.check_restrictions()?;
    Ok(n)
}

fn conjugacy_classes(elements: &[NormalizerElement], ell: u64) -> Vec<NormalizerClass> {
    let mut seen = BTreeSet::new();
    let mut classes = Vec::new();
    for &x in elements {
        if seen.contains(&x) {
            continue;
        }
        let orbit: BTreeSet<_> =
            elements.iter().map(|&g| x.conjugate_by(g, ell)).collect();
        seen.extend(orbit.iter().copied());
        classes.push(NormalizerClass {
            representative: x,
            centralizer_order: elements.len() as u64 / orbit.len() as u64,
            elements: orbit.into_iter().collect(),
        });
    }
    classes
}

fn class_of(classes: &[NormalizerClass], x: NormalizerElement) -> usize {
    classes
        .iter()
        .position(|c| c.elements.contains(&x))
        .expect("every element lies in a class")
}

/// `K_[d] = {k ∈ (Z/ℓ)^× : k·d ≡ d mod ℓ}`, ascending.
pub fn stabilizer(ell: u64, d: u64) -> Vec<u64> {
    let q = ell / d;
    (1..ell)
        .filter(|&k| gcd(k, ell) == 1 && k % q == 1 % q)
        .collect()
}

fn group_exponent(group: &[u64], ell_mod: u64) -> u64 {
    group
        .iter()
        .map(|&k| {
            let mut x = k;
            let mut o = 1;
            while x != 1 % ell_mod {
                x = x * k % ell_mod;
                o += 1;
            }
            o
        })
        .fold(1, lcm)
}

/// Linear characters of an abelian unit group mod `modulus`, by exhaustive
/// search over values on a greedily chosen generating set. Ordered by
/// exponent vector, so index 0 is the trivial character.
pub fn stabilizer_characters(group: &[u64], modulus: u64) -> Vec<StabilizerCharacter> {
    let one = 1 % modulus;
    let e = group_exponent(group, modulus);
    // Greedy generators: add the smallest element not yet generated.
    let mut gens = Vec::new();
    let mut span: BTreeSet<u64> = [one].into();
    for &k in group {
        if !span.contains(&k) {
            gens.push(k);
            span = closure(&gens, modulus);
        }
    }
    let mut out = Vec::new();
    let t = gens.len();
    let mut expo = vec![0u64; t];
    loop {
        if let Some(values) = extend_hom(&gens, &expo, e, modulus) {
            out.push(StabilizerCharacter { exponent: e, values });
        }
        // Next exponent vector in lexicographic order, last entry fastest.
        let mut pos = t;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            expo[pos] += 1;
            if expo[pos] < e {
                break;
            }
            expo[pos] = 0;
        }
    }
}

fn closure(gens: &[u64], modulus: u64) -> BTreeSet<u64> {
    let mut span: BTreeSet<u64> = [1 % modulus].into();
    let mut frontier = vec![1 % modulus];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = x * g % modulus;
            if span.insert(y) {
                frontier.push(y);
            }
        }
    }
    span
}

// Propagates generator values over the group; None if inconsistent.
fn extend_hom(gens: &[u64], expo: &[u64], e: u64, modulus: u64) -> Option<BTreeMap<u64, u64>> {
    let mut values = BTreeMap::new();
    values.insert(1 % modulus, 0);
    let mut frontier = vec![1 % modulus];
    while let Some(x) = frontier.pop() {
        let vx = values[&x];
        for (&g, &eg) in gens.iter().zip(expo) {
            let y = x * g % modulus;
            let vy = (vx + eg) % e;
            match values.get(&y) {
                Some(&v) if v != vy => return None,
                Some(_) => {}
                None => {
                    values.insert(y, vy);
                    frontier.push(y);
                }
            }
        }
    }
    Some(values)
}

// The extension (a,k) ↦ ζ_ℓ^{da}·θ(k) must be a homomorphism on L ⋊ K_[d].
fn check_extension(ell: u64, d: u64, theta: &StabilizerCharacter) -> Result<()> {
    let ks: Vec<u64> = theta.values.keys().copied().collect();
    let m = lcm(ell, theta.exponent);
    let val = |x: NormalizerElement| -> u64 {
        (d * x.shift % ell * (m / ell) + theta.values[&x.twist] * (m / theta.exponent)) % m
    };
    for &k in &ks {
        for a in 0..ell {
            let x = NormalizerElement { shift: a, twist: k };
            for &k2 in &ks {
                for b in 0..ell {
                    let y = NormalizerElement { shift: b, twist: k2 };
                    if val(x.mul(y, ell)) != (val(x) + val(y)) % m {
                        return Err(Error::Consistency(format!(
                            "extension of chi[{d}] is not a homomorphism at {x:?}, {y:?}"
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

// (1/|I|)·Σ_{g∈N} φ°(g x g⁻¹), collected as a histogram of root exponents.
fn induced_value(
    ell: u64,
    d: u64,
    theta: &StabilizerCharacter,
    x: NormalizerElement,
    elements: &[NormalizerElement],
) -> Cyclotomic {
    let Some(&tk) = theta.values.get(&x.twist) else {
        return Cyclotomic::zero();
    };
    let m = lcm(ell, theta.exponent);
    let mut counts = vec![0i64; m as usize];
    for &g in elements {
        let y = x.conjugate_by(g, ell);
        let e = (d * y.shift % ell * (m / ell) + tk * (m / theta.exponent)) % m;
        counts[e as usize] += 1;
    }
    let inertia = ell * theta.values.len() as u64;
    Cyclotomic::from_root_counts(m, &counts)
        .scale(&Rational::new(BigInt::from(1), BigInt::from(inertia)))
}

impl Normalizer {
    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn units(&self) -> &[u64] {
        &self.units
    }

    pub fn elements(&self) -> &[NormalizerElement] {
        &self.elements
    }

    pub fn classes(&self) -> &[NormalizerClass] {
        &self.classes
    }

    pub fn labels(&self) -> &[CliffordLabel] {
        &self.labels
    }

    pub fn stabilizer_characters(&self, d: u64) -> &[StabilizerCharacter] {
        &self.thetas[&d]
    }

    /// Rows in Clifford order (`d` ascending, then `θ`).
    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    pub fn class_of(&self, x: NormalizerElement) -> usize {
        class_of(&self.classes, x)
    }

    pub fn omega_class(&self) -> usize {
        self.class_of(NormalizerElement { shift: 1, twist: 1 })
    }

    pub fn label_index(&self, d: u64, theta: usize) -> Option<usize> {
        self.labels.iter().position(|l| l.d == d && l.theta == theta)
    }

    /// `d ↦ {χ_[m] : m ∈ orbit of χ_[d]}`, with characters of `L` indexed
    /// by `m ∈ {1,…,ℓ}`.
    pub fn orbit_partition(&self) -> BTreeMap<u64, Vec<u64>> {
        let ell = self.ell;
        divisors(ell)
            .into_iter()
            .map(|d| {
                let orbit: BTreeSet<u64> = self
                    .units
                    .iter()
                    .map(|&k| match k * d % ell {
                        0 => ell,
                        m => m,
                    })
                    .collect();
                (d, orbit.into_iter().collect())
            })
            .collect()
    }

    /// Classes meeting `{ω^k : gcd(k, ℓ) = 1}`.
    pub fn singular_classes(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .units
            .iter()
            .map(|&k| self.class_of(NormalizerElement { shift: k, twist: 1 }))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn check_restrictions(&self) -> Result<()> {
        let ell = self.ell;
        let orbits = self.orbit_partition();
        for (i, lab) in self.labels.iter().enumerate() {
            for a in 0..ell {
                let c = self.class_of(NormalizerElement { shift: a, twist: 1 });
                let expected: Cyclotomic = orbits[&lab.d]
                    .iter()
                    .map(|&m| Cyclotomic::root_of_unity(ell, (m * a) as i64).expect("ell > 0"))
                    .sum();
                if self.table.value(i, c) != &expected {
                    return Err(Error::Consistency(format!(
                        "restriction of psi[{},{}] to L is wrong at w^{a}",
                        lab.d, lab.theta
                    )));
                }
            }
        }
        Ok(())
    }

    /// `ψ₁,…,ψ_r`: the characters with value `-1` at `ω`, then those with
    /// value `+1` ending with the trivial character, then the rest. Within
    /// a band the Clifford order is kept. Returns indices into
    /// [`Normalizer::labels`] and the size `m` of the first band.
    pub fn irr_ordering(&self) -> (Vec<usize>, usize) {
        let w = self.omega_class();
        let at = |i: usize| self.table.value(i, w).clone();
        let n = self.labels.len();
        let minus: Vec<usize> = (0..n).filter(|&i| at(i) == Cyclotomic::from(-1)).collect();
        let trivial = self.table.trivial();
        let mut plus: Vec<usize> = (0..n)
            .filter(|&i| i != trivial && at(i).is_one())
            .collect();
        plus.push(trivial);
        let zero: Vec<usize> = (0..n).filter(|&i| at(i).is_zero()).collect();
        let m = minus.len();
        let mut order = minus;
        order.extend(plus);
        order.extend(zero);
        assert_eq!(order.len(), n, "psi(omega) outside {{-1, 0, 1}}");
        (order, m)
    }

    /// The table with rows in [`Normalizer::irr_ordering`] order and `g₁`
    /// the class of `ω`; this is the form consumed by the wreath engine.
    pub fn group_data(&self) -> GroupData {
        let (order, _) = self.irr_ordering();
        let t = &self.table;
        let table = CharacterTable::new(
            t.order().clone(),
            t.class_labels().to_vec(),
            t.centralizers().to_vec(),
            order.iter().map(|&i| t.char_labels()[i].clone()).collect(),
            order.iter().map(|&i| t.row(i).to_vec()).collect(),
            t.singular().to_vec(),
            self.ell as usize - 1,
        )
        .expect("permuted table is valid");
        GroupData {
            table,
            marked_class: self.omega_class(),
        }
    }

    /// `|I_[d] / L| = φ(ℓ)/φ(ℓ/d)`.
    pub fn inertia_quotient_order(&self, d: u64) -> u64 {
        euler_phi(self.ell) / euler_phi(self.ell / d)
    }

    /// `μ(ℓ/d)` for the label at Clifford index `i`.
    pub fn mu_of(&self, i: usize) -> i64 {
        mobius(self.ell / self.labels[i].d)
    }
}

/// Order-`ℓ` cyclic group `L = ⟨ω⟩` with classes `ω^1,…,ω^ℓ = 1` and
/// characters `χ_[s](ω^i) = ζ_ℓ^{si}` for `s = 1,…,ℓ`. The marked class is
/// the identity and the singular set is `{identity}`.
pub fn cyclic_group_data(ell: u64) -> Result<GroupData> {
    if ell < 2 {
        return Err(Error::EllTooSmall(ell));
    }
    let mut values = Vec::new();
    for s in 1..=ell {
        values.push(
            (1..=ell)
                .map(|i| Cyclotomic::root_of_unity(ell, ((s * i) % ell) as i64))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let idx = (ell - 1) as usize;
    let table = CharacterTable::new(
        BigUint::from(ell),
        (1..=ell).map(Label::Power).collect(),
        vec![BigUint::from(ell); ell as usize],
        (1..=ell).map(Label::Linear).collect(),
        values,
        vec![idx],
        idx,
    )?;
    Ok(GroupData {
        table,
        marked_class: idx,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_classes() {
        let n2 = build_normalizer(2).unwrap();
        assert_eq!((n2.order(), n2.classes().len()), (2, 2));
        let n4 = build_normalizer(4).unwrap();
        assert_eq!((n4.order(), n4.classes().len()), (8, 5));
        let n6 = build_normalizer(6).unwrap();
        assert_eq!((n6.order(), n6.classes().len()), (12, 6));
        assert!(matches!(build_normalizer(1), Err(Error::EllTooSmall(1))));
        assert!(matches!(build_normalizer(31), Err(Error::OverBound { .. })));
    }

    // Class count by direct conjugation over explicit permutations of Z/ℓ.
    fn class_count_oracle(ell: u64) -> usize {
        let perms: Vec<Vec<u64>> = (0..ell)
            .flat_map(|a| {
                (1..ell.max(2))
                    .filter(move |&k| gcd(k, ell) == 1)
                    .map(move |k| (0..ell).map(|x| (k * x + a) % ell).collect())
            })
            .collect();
        let compose = |p: &Vec<u64>, q: &Vec<u64>| -> Vec<u64> {
            (0..ell as usize).map(|x| p[q[x] as usize]).collect()
        };
        let inverse = |p: &Vec<u64>| -> Vec<u64> {
            let mut inv = vec![0; p.len()];
            for (x, &y) in p.iter().enumerate() {
                inv[y as usize] = x as u64;
            }
            inv
        };
        let mut seen = BTreeSet::new();
        let mut count = 0;
        for x in &perms {
            if seen.contains(x) {
                continue;
            }
            count += 1;
            for g in &perms {
                seen.insert(compose(&compose(g, x), &inverse(g)));
            }
        }
        count
    }

    #[test]
    fn classes_match_oracle() {
        for ell in 2..=12 {
            assert_eq!(build_normalizer(ell).unwrap().classes().len(), class_count_oracle(ell));
        }
    }

    #[test]
    fn orbits() {
        let n4 = build_normalizer(4).unwrap();
        let o = n4.orbit_partition();
        assert_eq!(o[&4], vec![4]);
        assert_eq!(o[&2], vec![2]);
        assert_eq!(o[&1], vec![1, 3]);
        for ell in 2..=30 {
            let n = build_normalizer(ell).unwrap();
            let o = n.orbit_partition();
            let mut all: Vec<u64> = o.values().flatten().copied().collect();
            all.sort_unstable();
            assert_eq!(all, (1..=ell).collect::<Vec<_>>());
            for (d, orb) in &o {
                assert_eq!(orb.len() as u64, euler_phi(ell / d));
                assert_eq!(n.stabilizer_characters(*d).len() as u64, n.inertia_quotient_order(*d));
            }
        }
        let n7 = build_normalizer(7).unwrap();
        let sizes: Vec<usize> = n7.orbit_partition().values().map(Vec::len).collect();
        assert_eq!(sizes, vec![6, 1]);
    }

    #[test]
    fn degrees_and_values_at_omega() {
        let n4 = build_normalizer(4).unwrap();
        let t = n4.table();
        let id = n4.class_of(NormalizerElement { shift: 0, twist: 1 });
        let mut degs: Vec<String> = (0..5).map(|i| t.value(i, id).to_string()).collect();
        degs.sort();
        assert_eq!(degs, vec!["1", "1", "1", "1", "2"]);
        for ell in 2..=24 {
            let n = build_normalizer(ell).unwrap();
            let w = n.omega_class();
            let id = n.class_of(NormalizerElement { shift: 0, twist: 1 });
            let mut sq = 0i64;
            for i in 0..n.labels().len() {
                assert_eq!(n.table().value(i, w), &Cyclotomic::from(n.mu_of(i)));
                let deg = n.table().value(i, id).as_rational().unwrap();
                sq += (&deg * &deg).to_integer().to_string().parse::<i64>().unwrap();
            }
            assert_eq!(sq as u64, ell * euler_phi(ell));
        }
    }

    #[test]
    fn singular_classes() {
        assert_eq!(build_normalizer(2).unwrap().singular_classes().len(), 1);
        for ell in [4, 6] {
            let n = build_normalizer(ell).unwrap();
            let s = n.singular_classes();
            assert_eq!(s.len(), 1);
            let c = &n.classes()[s[0]];
            let expect: Vec<u64> = vec![1, ell - 1];
            assert_eq!(c.elements.iter().map(|e| e.shift).collect::<Vec<_>>(), expect);
            assert!(c.elements.iter().all(|e| e.twist == 1));
        }
        for ell in 2..=24 {
            let n = build_normalizer(ell).unwrap();
            let total: usize = n
                .singular_classes()
                .iter()
                .map(|&c| n.classes()[c].elements.len())
                .sum();
            assert_eq!(total as u64, euler_phi(ell));
        }
    }

    #[test]
    fn ordering_bands() {
        let n2 = build_normalizer(2).unwrap();
        let (o, m) = n2.irr_ordering();
        assert_eq!(m, 1);
        assert_eq!(o[1], n2.table().trivial());

        let n4 = build_normalizer(4).unwrap();
        let (o, m) = n4.irr_ordering();
        assert_eq!((m, o.len()), (2, 5));
        let w = n4.omega_class();
        let bands: Vec<String> = o.iter().map(|&i| n4.table().value(i, w).to_string()).collect();
        assert_eq!(bands, vec!["-1", "-1", "1", "1", "0"]);

        // d ∈ {2, 3} have μ(6/d) = -1 and contribute φ(6)/φ(3) + φ(6)/φ(2)
        // = 1 + 2 characters; in D₆ these are the two linear characters
        // sending the rotation to -1 and the 2-dimensional one with trace
        // 2cos(2π/3) = -1 there.
        let n6 = build_normalizer(6).unwrap();
        let (_, m6) = n6.irr_ordering();
        assert_eq!(m6, 3);
        let ratio: u64 = [2, 3]
            .iter()
            .map(|&d| n6.inertia_quotient_order(d))
            .sum();
        assert_eq!(ratio, 3);

        for ell in 2..=24 {
            let n = build_normalizer(ell).unwrap();
            let gd = n.group_data();
            assert_eq!(gd.table.trivial(), ell as usize - 1);
            assert!(gd.table.row(ell as usize - 1).iter().all(Cyclotomic::is_one));
        }
    }

    #[test]
    fn cyclic_tables() {
        for ell in 2..=8 {
            let g = cyclic_group_data(ell).unwrap();
            g.table.check_orthogonality().unwrap();
            assert_eq!(g.table.trivial(), ell as usize - 1);
        }
    }

    #[test]
    fn stabilizers() {
        assert_eq!(stabilizer(12, 12), vec![1, 5, 7, 11]);
        assert_eq!(stabilizer(12, 1), vec![1]);
        assert_eq!(stabilizer(12, 6), vec![1, 5, 7, 11]);
        assert_eq!(stabilizer(12, 4), vec![1, 7]);
    }
}
