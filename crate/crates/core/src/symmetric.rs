//! Characters of `S_n` by the Murnaghan–Nakayama rule.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::table::{CharacterTable, Label};

/// Default bound on `n` for full table builds (`p(14) = 135`).
pub const DEFAULT_MAX_SYM_N: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymClass {
    pub cycle_type: Partition,
    pub size: BigUint,
    pub centralizer_order: BigUint,
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Classes of `S_n` in reverse lexicographic order of cycle type.
pub fn sym_classes(n: usize) -> Vec<SymClass> {
    let fact = factorial(n);
    enumerate_partitions(n)
        .into_iter()
        .map(|rho| {
            let z = rho.centralizer_order();
            SymClass {
                size: &fact / &z,
                centralizer_order: z,
                cycle_type: rho,
            }
        })
        .collect()
}

/// Memoized Murnaghan–Nakayama evaluator. The memo is keyed on the
/// partition and the remaining cycle lengths.
#[derive(Default)]
pub struct MnEvaluator {
    memo: HashMap<(Partition, Vec<usize>), i64>,
}

impl MnEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn value(&mut self, lambda: &Partition, rho: &Partition) -> Result<i64> {
        if lambda.size() != rho.size() {
            return Err(Error::SizeMismatch(format!(
                "|{lambda}| = {} but |{rho}| = {}",
                lambda.size(),
                rho.size()
            )));
        }
        Ok(self.eval(lambda, rho.parts()))
    }

    // Consumes the largest remaining cycle first.
    fn eval(&mut self, lambda: &Partition, rho: &[usize]) -> i64 {
        let Some((&k, rest)) = rho.split_first() else {
            return 1;
        };
        let key = (lambda.clone(), rho.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for (mu, leg) in lambda.removable_hooks(k) {
            let v = self.eval(&mu, rest);
            total += if leg % 2 == 0 { v } else { -v };
        }
        self.memo.insert(key, total);
        total
    }
}

pub fn mn_char_value(lambda: &Partition, rho: &Partition) -> Result<i64> {
    MnEvaluator::new().value(lambda, rho)
}

pub fn is_ell_regular_class(rho: &Partition, ell: usize) -> bool {
    rho.parts().iter().all(|&p| p % ell != 0)
}

/// Indices (in [`enumerate_partitions`] order) of classes with a cycle
/// length divisible by `ell`.
pub fn ell_singular_classes(n: usize, ell: usize) -> Vec<usize> {
    enumerate_partitions(n)
        .iter()
        .enumerate()
        .filter(|(_, rho)| !is_ell_regular_class(rho, ell))
        .map(|(i, _)| i)
        .collect()
}

pub fn sn_character_table(n: usize) -> Result<CharacterTable> {
    sn_character_table_bounded(n, DEFAULT_MAX_SYM_N)
}

/// Rows and columns both follow [`enumerate_partitions`]. The singular set
/// is empty; see [`CharacterTable::with_singular`].
pub fn sn_character_table_bounded(n: usize, max_n: usize) -> Result<CharacterTable> {
    if n > max_n {
        return Err(Error::OverBound {
            what: "n",
            value: n as u64,
            bound: max_n as u64,
            hint: "raise the bound (ELLBLOCK_MAX_SYM_N or --max-n) to build larger tables",
        });
    }
    let parts = enumerate_partitions(n);
    let mut mn = MnEvaluator::new();
    let mut values = Vec::with_capacity(parts.len());
    for lambda in &parts {
        let row = parts
            .iter()
            .map(|rho| mn.value(lambda, rho).map(Cyclotomic::from))
            .collect::<Result<Vec<_>>>()?;
        values.push(row);
    }
    CharacterTable::new(
        factorial(n),
        parts.iter().cloned().map(Label::Partition).collect(),
        parts.iter().map(Partition::centralizer_order).collect(),
        parts.iter().cloned().map(Label::Partition).collect(),
        values,
        Vec::new(),
        0,
    )
}
