//! Classes and characters of `H ≀ S_w` from the class/character data of `H`.
//!
//! Both are labelled by `r`-tuples of partitions of `w`, where `r` is the
//! class number of `H`: class component `i` collects the cycles whose cycle
//! product lies in class `i` of `H`, and character component `s` is attached
//! to row `s` of the table of `H`.

pub mod oracle;

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::partition::{enumerate_multipartitions, MultiPartition, Partition};
use crate::table::{CharacterTable, GroupData, Label};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathClass {
    pub label: MultiPartition,
    pub size: BigUint,
    pub centralizer_order: BigUint,
}

/// `|H|^w · w!`.
pub fn wreath_order(h: &CharacterTable, w: usize) -> BigUint {
    let mut out = BigUint::one();
    for i in 1..=w {
        out *= h.order() * BigUint::from(i);
    }
    out
}

/// `Π_{i,k} a_ik!·(k·|C_H(g_i)|)^{a_ik}`.
pub fn centralizer_order(h: &CharacterTable, class: &MultiPartition) -> BigUint {
    let mut out = BigUint::one();
    for (i, pi) in class.components().iter().enumerate() {
        let zi = &h.centralizers()[i];
        for (k, &a) in pi.multiplicities().iter().enumerate().skip(1) {
            for j in 1..=a {
                out *= BigUint::from(j) * BigUint::from(k) * zi;
            }
        }
    }
    out
}

pub fn wreath_classes(h: &GroupData, w: usize) -> Vec<WreathClass> {
    let t = &h.table;
    let order = wreath_order(t, w);
    enumerate_multipartitions(w, t.num_classes())
        .into_iter()
        .map(|label| {
            let z = centralizer_order(t, &label);
            WreathClass {
                size: &order / &z,
                centralizer_order: z,
                label,
            }
        })
        .collect()
}

/// Splits class indices into (regular, singular): a class is singular when
/// its `marker` component is nonempty.
pub fn wreath_singular_split(
    classes: &[MultiPartition],
    marker: usize,
) -> (Vec<usize>, Vec<usize>) {
    (0..classes.len()).partition(|&i| classes[i].component(marker).is_empty())
}

/// All ways to remove a `k`-hook from component `s`, with leg lengths.
pub fn hook_removals(alpha: &MultiPartition, s: usize, k: usize) -> Vec<(MultiPartition, usize)> {
    alpha
        .component(s)
        .removable_hooks(k)
        .into_iter()
        .map(|(p, leg)| (alpha.with_component(s, p), leg))
        .collect()
}

/// Memoized evaluator for the wreath Murnaghan–Nakayama rule.
pub struct WreathEngine<'a> {
    h: &'a GroupData,
    memo: HashMap<(MultiPartition, MultiPartition), Cyclotomic>,
}

impl<'a> WreathEngine<'a> {
    pub fn new(h: &'a GroupData) -> Self {
        WreathEngine {
            h,
            memo: HashMap::new(),
        }
    }

    pub fn group(&self) -> &GroupData {
        self.h
    }

    pub fn value(&mut self, alpha: &MultiPartition, class: &MultiPartition) -> Result<Cyclotomic> {
        let r = self.h.table.num_classes();
        if alpha.len() != r || class.len() != r {
            return Err(Error::SizeMismatch(format!(
                "expected {r} components, got {} and {}",
                alpha.len(),
                class.len()
            )));
        }
        if self.h.table.num_chars() != r {
            return Err(Error::SizeMismatch("table of H is not square".into()));
        }
        if alpha.size() != class.size() {
            return Err(Error::SizeMismatch(format!(
                "|{alpha}| = {} but |{class}| = {}",
                alpha.size(),
                class.size()
            )));
        }
        Ok(self.eval(alpha, class))
    }

    // Marker-coloured cycles are consumed first, largest first; otherwise
    // the largest cycle of the first nonempty component.
    fn eval(&mut self, alpha: &MultiPartition, class: &MultiPartition) -> Cyclotomic {
        if class.size() == 0 {
            return Cyclotomic::one();
        }
        let key = (alpha.clone(), class.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let marker = self.h.marked_class;
        let t = if class.component(marker).is_empty() {
            class.support().next().expect("nonempty class")
        } else {
            marker
        };
        let k = class.component(t).part(0);
        let rho = class.with_component(t, drop_part(class.component(t), k));
        let mut total = Cyclotomic::zero();
        for s in 0..alpha.len() {
            let psi = self.h.table.value(s, t).clone();
            if psi.is_zero() {
                continue;
            }
            let mut inner = Cyclotomic::zero();
            for (beta, leg) in hook_removals(alpha, s, k) {
                let v = self.eval(&beta, &rho);
                inner = if leg % 2 == 0 { &inner + &v } else { &inner - &v };
            }
            if !inner.is_zero() {
                total += &(&psi * &inner);
            }
        }
        self.memo.insert(key, total.clone());
        total
    }

    /// `η(α)·χ^{α*}(class)` with the first `m` components conjugated.
    pub fn chi0_value(
        &mut self,
        alpha: &MultiPartition,
        class: &MultiPartition,
        m: usize,
    ) -> Result<Cyclotomic> {
        let v = self.value(&star_transform(alpha, m), class)?;
        Ok(if eta_sign(alpha, m) == 1 { v } else { -v })
    }
}

/// Removes one part equal to `k`.
pub(crate) fn drop_part(p: &Partition, k: usize) -> Partition {
    let mut parts = p.parts().to_vec();
    let i = parts.iter().position(|&x| x == k).expect("part present");
    parts.remove(i);
    Partition::from_parts(parts)
}

pub fn wreath_char_value(
    alpha: &MultiPartition,
    class: &MultiPartition,
    h: &GroupData,
) -> Result<Cyclotomic> {
    WreathEngine::new(h).value(alpha, class)
}

/// Conjugates the first `m` components.
pub fn star_transform(alpha: &MultiPartition, m: usize) -> MultiPartition {
    MultiPartition::from_components(
        alpha
            .components()
            .iter()
            .enumerate()
            .map(|(i, p)| if i < m { p.conjugate() } else { p.clone() })
            .collect(),
    )
}

/// `(-1)^{Σ_{n≤m} |αⁿ|}`.
pub fn eta_sign(alpha: &MultiPartition, m: usize) -> i32 {
    let s: usize = alpha.components().iter().take(m).map(Partition::size).sum();
    if s % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Full table of `H ≀ S_w`; rows and columns follow
/// [`enumerate_multipartitions`]. The singular set is the classes with a
/// nonempty marked component and the trivial character is `(w)` on the
/// trivial row of `H`.
pub fn wreath_table(h: &GroupData, w: usize) -> Result<CharacterTable> {
    let t = &h.table;
    let r = t.num_classes();
    let labels = enumerate_multipartitions(w, r);
    let mut engine = WreathEngine::new(h);
    let mut values = Vec::with_capacity(labels.len());
    for alpha in &labels {
        values.push(
            labels
                .iter()
                .map(|c| engine.value(alpha, c))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let (_, singular) = wreath_singular_split(&labels, h.marked_class);
    let trivial_label = MultiPartition::empty(r).with_component(t.trivial(), Partition::row(w));
    let trivial = labels
        .iter()
        .position(|a| a == &trivial_label)
        .expect("trivial label enumerated");
    CharacterTable::new(
        wreath_order(t, w),
        labels.iter().cloned().map(Label::Multi).collect(),
        labels.iter().map(|c| centralizer_order(t, c)).collect(),
        labels.iter().cloned().map(Label::Multi).collect(),
        values,
        singular,
        trivial,
    )
}
