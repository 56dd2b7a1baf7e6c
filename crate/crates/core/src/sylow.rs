//! Shape of the generalized Sylow `ℓ`-subgroup of `S_n`: with
//! `n = Σ a_i ℓ^i` in base `ℓ`, it is `Π L_i^{a_i}` where `L_0 = 1` and
//! `L_i = L_{i-1} ≀ Z_ℓ`.

use num_bigint::BigUint;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SylowFactor {
    pub level: usize,
    pub multiplicity: u64,
    #[serde(serialize_with = "as_string")]
    pub order: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SylowStructure {
    pub n: u64,
    pub ell: u64,
    /// Base-`ℓ` digits `a_0, a_1, …`, least significant first.
    pub digits: Vec<u64>,
    /// One entry per nonzero digit above level 0.
    pub factors: Vec<SylowFactor>,
    #[serde(serialize_with = "as_string")]
    pub order: BigUint,
    pub abelian: bool,
    pub cyclic: bool,
}

fn as_string<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn sylow_ell_structure(n: u64, ell: u64) -> Result<SylowStructure> {
    if ell < 2 {
        return Err(Error::EllTooSmall(ell));
    }
    let mut digits = Vec::new();
    let mut rest = n;
    while rest > 0 {
        digits.push(rest % ell);
        rest /= ell;
    }
    // |L_i| = |L_{i-1}|^ℓ · ℓ.
    let mut level_orders = vec![BigUint::one()];
    for i in 1..digits.len() {
        let prev: &BigUint = &level_orders[i - 1];
        level_orders.push(Pow::pow(prev, ell) * BigUint::from(ell));
    }
    let factors: Vec<SylowFactor> = digits
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, &a)| a > 0)
        .map(|(i, &a)| SylowFactor {
            level: i,
            multiplicity: a,
            order: level_orders[i].clone(),
        })
        .collect();
    let order = factors
        .iter()
        .map(|f| Pow::pow(&f.order, f.multiplicity))
        .product();
    let abelian = digits.iter().skip(2).all(|&a| a == 0);
    let cyclic = abelian && digits.get(1).copied().unwrap_or(0) <= 1;
    Ok(SylowStructure {
        n,
        ell,
        digits,
        factors,
        order,
        abelian,
        cyclic,
    })
}

impl SylowStructure {
    /// `Z3^2`, `L2^1 x Z2^1`, or `1`.
    pub fn describe(&self) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        self.factors
            .iter()
            .rev()
            .map(|f| {
                if f.level == 1 {
                    format!("Z{}^{}", self.ell, f.multiplicity)
                } else {
                    format!("L{}^{}", f.level, f.multiplicity)
                }
            })
            .collect::<Vec<_>>()
            .join(" x ")
    }
}
