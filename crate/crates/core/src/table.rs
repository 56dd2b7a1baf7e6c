//! Group-agnostic character tables.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::Serialize;

use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::partition::{MultiPartition, Partition};

/// Label of a class or a character.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum Label {
    Partition(Partition),
    Multi(MultiPartition),
    /// `ψ_{d,θ}` of the normalizer.
    Clifford { d: u64, theta: usize },
    /// Class of the element `x ↦ kx + a` of the normalizer.
    Affine { shift: u64, twist: u64 },
    /// `ω^i` in a cyclic group.
    Power(u64),
    /// `χ_[s]` of a cyclic group.
    Linear(u64),
    Pair(Box<Label>, Box<Label>),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Partition(p) => write!(f, "{p}"),
            Label::Multi(m) => write!(f, "{m}"),
            Label::Clifford { d, theta } => write!(f, "psi[{d},{theta}]"),
            Label::Affine { shift, twist } => write!(f, "({shift},{twist})"),
            Label::Power(i) => write!(f, "w^{i}"),
            Label::Linear(s) => write!(f, "chi[{s}]"),
            Label::Pair(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    order: BigUint,
    class_labels: Vec<Label>,
    class_sizes: Vec<BigUint>,
    centralizers: Vec<BigUint>,
    char_labels: Vec<Label>,
    /// `values[i][c]` is character `i` at class `c`.
    values: Vec<Vec<Cyclotomic>>,
    singular: Vec<usize>,
    trivial: usize,
}

/// A character table together with the distinguished class `g₁`.
#[derive(Clone, Debug)]
pub struct GroupData {
    pub table: CharacterTable,
    pub marked_class: usize,
}

impl CharacterTable {
    /// Validates shapes, `size·centralizer = order`, and that row `trivial`
    /// is all ones. Orthogonality is checked separately.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        order: BigUint,
        class_labels: Vec<Label>,
        centralizers: Vec<BigUint>,
        char_labels: Vec<Label>,
        values: Vec<Vec<Cyclotomic>>,
        mut singular: Vec<usize>,
        trivial: usize,
    ) -> Result<Self> {
        let k = class_labels.len();
        if centralizers.len() != k || values.len() != char_labels.len() {
            return Err(Error::SizeMismatch("table dimensions disagree".into()));
        }
        if values.iter().any(|row| row.len() != k) {
            return Err(Error::SizeMismatch("ragged value matrix".into()));
        }
        let mut class_sizes = Vec::with_capacity(k);
        for (c, z) in centralizers.iter().enumerate() {
            if z.is_zero() || !(&order % z).is_zero() {
                return Err(Error::Consistency(format!(
                    "centralizer {z} of class {} does not divide {order}",
                    class_labels[c]
                )));
            }
            class_sizes.push(&order / z);
        }
        if trivial >= values.len() || !values[trivial].iter().all(Cyclotomic::is_one) {
            return Err(Error::Consistency("designated trivial row is not all ones".into()));
        }
        singular.sort_unstable();
        singular.dedup();
        if singular.iter().any(|&c| c >= k) {
            return Err(Error::InvalidArgument("singular class index out of range".into()));
        }
        Ok(CharacterTable {
            order,
            class_labels,
            class_sizes,
            centralizers,
            char_labels,
            values,
            singular,
            trivial,
        })
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn num_classes(&self) -> usize {
        self.class_labels.len()
    }

    pub fn num_chars(&self) -> usize {
        self.char_labels.len()
    }

    pub fn class_labels(&self) -> &[Label] {
        &self.class_labels
    }

    pub fn class_sizes(&self) -> &[BigUint] {
        &self.class_sizes
    }

    pub fn centralizers(&self) -> &[BigUint] {
        &self.centralizers
    }

    pub fn char_labels(&self) -> &[Label] {
        &self.char_labels
    }

    pub fn values(&self) -> &[Vec<Cyclotomic>] {
        &self.values
    }

    pub fn value(&self, chi: usize, class: usize) -> &Cyclotomic {
        &self.values[chi][class]
    }

    pub fn row(&self, chi: usize) -> &[Cyclotomic] {
        &self.values[chi]
    }

    pub fn singular(&self) -> &[usize] {
        &self.singular
    }

    /// Complement of the singular set.
    pub fn regular(&self) -> Vec<usize> {
        complement(&self.singular, self.num_classes())
    }

    pub fn trivial(&self) -> usize {
        self.trivial
    }

    pub fn char_index(&self, label: &Label) -> Option<usize> {
        self.char_labels.iter().position(|l| l == label)
    }

    pub fn class_index(&self, label: &Label) -> Option<usize> {
        self.class_labels.iter().position(|l| l == label)
    }

    /// Row/column orthogonality, checked exactly.
    pub fn check_orthogonality(&self) -> Result<()> {
        let n = self.num_chars();
        let k = self.num_classes();
        if n != k {
            return Err(Error::Consistency(format!("{n} characters but {k} classes")));
        }
        let order = Rational::from_integer(BigInt::from(self.order.clone()));
        let sizes: Vec<Rational> = self
            .class_sizes
            .iter()
            .map(|s| Rational::from_integer(BigInt::from(s.clone())))
            .collect();
        let conj: Vec<Vec<Cyclotomic>> = self
            .values
            .iter()
            .map(|row| row.iter().map(Cyclotomic::conj).collect())
            .collect();
        for i in 0..n {
            for j in i..n {
                let s: Cyclotomic = (0..k)
                    .map(|c| (&self.values[i][c] * &conj[j][c]).scale(&sizes[c]))
                    .sum();
                let want = if i == j { order.clone() } else { Rational::zero() };
                if s != Cyclotomic::from_rational(want) {
                    return Err(Error::Consistency(format!(
                        "rows {} and {} have inner product {s}",
                        self.char_labels[i], self.char_labels[j]
                    )));
                }
            }
        }
        for a in 0..k {
            for b in a..k {
                let s: Cyclotomic = (0..n).map(|i| &self.values[i][a] * &conj[i][b]).sum();
                let want = if a == b {
                    Rational::from_integer(BigInt::from(self.centralizers[a].clone()))
                } else {
                    Rational::zero()
                };
                if s != Cyclotomic::from_rational(want) {
                    return Err(Error::Consistency(format!(
                        "columns {} and {} have inner product {s}",
                        self.class_labels[a], self.class_labels[b]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Table of `self × other`. Rows and columns are in Kronecker order
    /// (`i·n_other + j`); the singular set is `singular(self) × all classes`.
    pub fn direct_product(&self, other: &CharacterTable) -> CharacterTable {
        let kb = other.num_classes();
        let nb = other.num_chars();
        let mut class_labels = Vec::new();
        let mut centralizers = Vec::new();
        for (la, za) in self.class_labels.iter().zip(&self.centralizers) {
            for (lb, zb) in other.class_labels.iter().zip(&other.centralizers) {
                class_labels.push(Label::Pair(Box::new(la.clone()), Box::new(lb.clone())));
                centralizers.push(za * zb);
            }
        }
        let mut char_labels = Vec::new();
        let mut values = Vec::new();
        for (i, la) in self.char_labels.iter().enumerate() {
            for (j, lb) in other.char_labels.iter().enumerate() {
                char_labels.push(Label::Pair(Box::new(la.clone()), Box::new(lb.clone())));
                let mut row = Vec::with_capacity(self.num_classes() * kb);
                for a in 0..self.num_classes() {
                    for b in 0..kb {
                        row.push(&self.values[i][a] * &other.values[j][b]);
                    }
                }
                values.push(row);
            }
        }
        let singular = self
            .singular
            .iter()
            .flat_map(|&a| (0..kb).map(move |b| a * kb + b))
            .collect();
        CharacterTable::new(
            &self.order * &other.order,
            class_labels,
            centralizers,
            char_labels,
            values,
            singular,
            self.trivial * nb + other.trivial,
        )
        .expect("product of valid tables is valid")
    }

    /// Same table with a different singular set.
    pub fn with_singular(mut self, mut singular: Vec<usize>) -> Self {
        singular.sort_unstable();
        singular.dedup();
        assert!(singular.iter().all(|&c| c < self.num_classes()));
        self.singular = singular;
        self
    }
}

pub(crate) fn complement(subset: &[usize], n: usize) -> Vec<usize> {
    (0..n).filter(|c| !subset.contains(c)).collect()
}
