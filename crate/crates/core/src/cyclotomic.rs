//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! An element is stored in the power basis `1, ζ_n, …, ζ_n^{φ(n)-1}` modulo
//! the cyclotomic polynomial `Φ_n`. The order `n` is always the conductor of
//! the element: the smallest `n` with the element in `Q(ζ_n)`, never
//! `≡ 2 (mod 4)`, and `1` for rationals. With that normalization two elements
//! are equal exactly when their orders and coefficient vectors agree, so
//! `PartialEq`/`Hash` are structural.

use std::collections::HashMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numtheory::{euler_phi, factorize, lcm, mod_inverse};

pub type Rational = BigRational;

/// Largest order accepted when decoding a serialized element.
pub const MAX_DECODED_ORDER: u64 = 4096;

struct FieldData {
    phi: usize,
    /// Row `k - phi` holds the coefficients of `x^k mod Φ_n` for `phi <= k < n`.
    rows: Vec<Vec<i64>>,
}

fn field(n: u64) -> Arc<FieldData> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<FieldData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = cache.read().expect("field cache poisoned").get(&n) {
        return f.clone();
    }
    let data = Arc::new(build_field(n));
    cache
        .write()
        .expect("field cache poisoned")
        .entry(n)
        .or_insert(data)
        .clone()
}

/// Coefficients (ascending) of `Φ_n`, computed as `(x^n - 1) / Π_{d | n, d < n} Φ_d`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().expect("poly cache poisoned").get(&n) {
        return p.clone();
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in crate::numtheory::divisors(n) {
        if d == n {
            continue;
        }
        num = exact_div(&num, &cyclotomic_polynomial(d));
    }
    cache
        .write()
        .expect("poly cache poisoned")
        .insert(n, num.clone());
    num
}

// Exact division by a monic integer polynomial.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let qlen = rem.len() - dd;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem[..dd].iter().all(|&r| r == 0), "inexact division");
    q
}

fn build_field(n: u64) -> FieldData {
    let poly = cyclotomic_polynomial(n);
    let phi = poly.len() - 1;
    let mut rows = Vec::with_capacity(n as usize - phi);
    if (n as usize) > phi {
        let mut row: Vec<i64> = poly[..phi].iter().map(|c| -c).collect();
        rows.push(row.clone());
        for _ in phi + 1..n as usize {
            let top = row[phi - 1];
            let mut next = vec![0i64; phi];
            for i in (1..phi).rev() {
                next[i] = row[i - 1];
            }
            if top != 0 {
                for i in 0..phi {
                    next[i] = next[i]
                        .checked_sub(top.checked_mul(poly[i]).expect("overflow"))
                        .expect("overflow");
                }
            }
            row = next;
            rows.push(row.clone());
        }
    }
    FieldData { phi, rows }
}

/// Reduce `Σ c·x^e` (exponents taken mod `n`) to the power basis mod `Φ_n`.
fn reduce_terms(n: u64, terms: impl IntoIterator<Item = (i64, Rational)>) -> Vec<Rational> {
    let f = field(n);
    let mut acc: Vec<Rational> = vec![Rational::zero(); n as usize];
    for (e, c) in terms {
        if c.is_zero() {
            continue;
        }
        let idx = e.rem_euclid(n as i64) as usize;
        acc[idx] += c;
    }
    let mut out: Vec<Rational> = acc.drain(..f.phi).collect();
    for (k, c) in acc.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (o, &r) in out.iter_mut().zip(&f.rows[k]) {
            if r != 0 {
                *o += &c * Rational::from_integer(BigInt::from(r));
            }
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// `ζ_n^k`; `k` is taken modulo `n`.
    pub fn root_of_unity(n: u64, k: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(Self::from_terms(n, [(k, Rational::one())]))
    }

    /// Builds `Σ c·ζ_n^e` from arbitrary exponent/coefficient pairs.
    pub fn from_terms(n: u64, terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        assert!(n > 0, "cyclotomic order must be positive");
        if n % 4 == 2 {
            // ζ_{2m} = -ζ_m^{(m+1)/2} for odd m.
            let m = n / 2;
            let half = ((m + 1) / 2) as i64;
            let terms: Vec<(i64, Rational)> = terms
                .into_iter()
                .map(|(e, c)| {
                    let e = e.rem_euclid(n as i64);
                    let c = if e % 2 == 1 { -c } else { c };
                    (e * half, c)
                })
                .collect();
            return Self::from_terms(m, terms);
        }
        let coeffs = reduce_terms(n, terms);
        let mut out = Cyclotomic { order: n, coeffs };
        out.shrink();
        out
    }

    /// Builds `Σ_e counts[e]·ζ_n^e` for an integer histogram of exponents
    /// of length `n`.
    pub fn from_root_counts(n: u64, counts: &[i64]) -> Self {
        debug_assert_eq!(counts.len() as u64, n);
        Self::from_terms(
            n,
            counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(e, &c)| (e as i64, Rational::from_integer(BigInt::from(c)))),
        )
    }

    /// The conductor: the smallest `n` with this element in `Q(ζ_n)`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Coefficients in the power basis of `Q(ζ_order)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1
    }

    pub fn as_rational(&self) -> Result<Rational> {
        if self.is_rational() {
            Ok(self.coeffs[0].clone())
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in the current order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64, c))
    }

    /// Coefficients of this element written in `Q(ζ_n)`; `n` must be a
    /// multiple of the conductor.
    pub fn embed(&self, n: u64) -> Result<Vec<Rational>> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        if n % self.order != 0 {
            return Err(Error::InvalidArgument(format!(
                "cannot embed order {} into order {n}",
                self.order
            )));
        }
        let s = (n / self.order) as i64;
        Ok(reduce_terms(
            n,
            self.terms().map(|(e, c)| (e * s, c.clone())),
        ))
    }

    /// Complex conjugation, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        self.galois(-1)
    }

    /// The Galois automorphism `ζ ↦ ζ^k`; `k` must be prime to the order.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.order;
        debug_assert_eq!(crate::numtheory::gcd(k.rem_euclid(n as i64) as u64, n), 1);
        Self::from_terms(n, self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Floating point value, for diagnostics only.
    pub fn approx(&self) -> (f64, f64) {
        let n = self.order as f64;
        self.terms().fold((0.0, 0.0), |(re, im), (e, c)| {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let t = std::f64::consts::TAU * e as f64 / n;
            (re + c * t.cos(), im + c * t.sin())
        })
    }

    fn shrink(&mut self) {
        'outer: loop {
            if self.order == 1 {
                return;
            }
            for (p, e) in factorize(self.order) {
                if e >= 2 {
                    if self.shrink_square(p) {
                        continue 'outer;
                    }
                } else if p != 2 && self.shrink_simple(p) {
                    continue 'outer;
                }
            }
            return;
        }
    }

    // p^2 | n: Φ_n(x) = Φ_{n/p}(x^p), so Q(ζ_{n/p}) is spanned by the
    // basis vectors at exponents divisible by p.
    fn shrink_square(&mut self, p: u64) -> bool {
        let p = p as usize;
        if self
            .coeffs
            .iter()
            .enumerate()
            .any(|(i, c)| i % p != 0 && !c.is_zero())
        {
            return false;
        }
        let m = self.order / p as u64;
        let coeffs: Vec<Rational> = self.coeffs.iter().step_by(p).cloned().collect();
        if m % 4 == 2 {
            let terms: Vec<(i64, Rational)> = coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| (i as i64, c))
                .collect();
            *self = Self::from_terms(m, terms);
        } else {
            self.order = m;
            self.coeffs = coeffs;
        }
        true
    }

    // p || n, p odd: Q(ζ_n) = Q(ζ_m)(ζ_p) with m = n/p and basis
    // 1, ζ_p, …, ζ_p^{p-2} over Q(ζ_m). The element lies in Q(ζ_m) iff all
    // coordinates but the first vanish.
    fn shrink_simple(&mut self, p: u64) -> bool {
        let n = self.order;
        let m = n / p;
        let u = mod_inverse(p % m.max(1), m).unwrap_or(0) as i64;
        let v = mod_inverse(m % p, p).expect("coprime") as i64;
        let pl = p as usize;
        let mut parts: Vec<Vec<(i64, Rational)>> = vec![Vec::new(); pl - 1];
        for (i, c) in self.terms() {
            let e = (i * u).rem_euclid(m as i64);
            let j = (i * v).rem_euclid(p as i64) as usize;
            if j < pl - 1 {
                parts[j].push((e, c.clone()));
            } else {
                for part in parts.iter_mut() {
                    part.push((e, -c.clone()));
                }
            }
        }
        for part in &parts[1..] {
            if reduce_terms(m, part.iter().cloned()).iter().any(|c| !c.is_zero()) {
                return false;
            }
        }
        let base = std::mem::take(&mut parts[0]);
        self.order = m;
        self.coeffs = reduce_terms(m, base);
        true
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        if self.order == other.order {
            let coeffs = self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect();
            let mut out = Cyclotomic {
                order: self.order,
                coeffs,
            };
            out.shrink();
            return out;
        }
        let n = lcm(self.order, other.order);
        let sa = (n / self.order) as i64;
        let sb = (n / other.order) as i64;
        let terms = self
            .terms()
            .map(|(e, c)| (e * sa, c.clone()))
            .chain(other.terms().map(|(e, c)| {
                (e * sb, if negate { -c.clone() } else { c.clone() })
            }));
        Self::from_terms(n, terms.collect::<Vec<_>>())
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_rational() {
            return other.scale(&self.coeffs[0]);
        }
        if other.is_rational() {
            return self.scale(&other.coeffs[0]);
        }
        let n = lcm(self.order, other.order);
        let sa = (n / self.order) as i64;
        let sb = (n / other.order) as i64;
        let b: Vec<(i64, &Rational)> = other.terms().collect();
        let mut terms = Vec::with_capacity(b.len() * self.coeffs.len());
        for (ea, ca) in self.terms() {
            for (eb, cb) in &b {
                terms.push((ea * sa + eb * sb, ca * *cb));
            }
        }
        Self::from_terms(n, terms)
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl Add<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.combine(rhs, false)
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        self.combine(&rhs, false)
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.combine(rhs, false);
    }
}

impl Sub<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.combine(rhs, true)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        self.combine(&rhs, true)
    }
}

impl Mul<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.product(rhs)
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        self.product(&rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Cyclotomic> for Cyclotomic {
    fn sum<I: Iterator<Item = &'a Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| &acc + x)
    }
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return f.write_str(&format_rational(&self.coeffs[0]));
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            if e == 0 {
                f.write_str(&format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "ζ{}^{}", self.order, e)?;
            } else {
                write!(f, "{}*ζ{}^{}", format_rational(&abs), self.order, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCyclotomic {
    order: u64,
    coeffs: Vec<(String, String)>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawCyclotomic {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| (c.numer().to_string(), c.denom().to_string()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawCyclotomic::deserialize(d)?;
        Cyclotomic::try_from_raw(raw).map_err(serde::de::Error::custom)
    }
}

impl Cyclotomic {
    fn try_from_raw(raw: RawCyclotomic) -> Result<Self> {
        if raw.order == 0 {
            return Err(Error::ZeroOrder);
        }
        if raw.order > MAX_DECODED_ORDER {
            return Err(Error::Parse(format!(
                "order {} exceeds {MAX_DECODED_ORDER}",
                raw.order
            )));
        }
        let phi = euler_phi(raw.order) as usize;
        if raw.coeffs.len() != phi {
            return Err(Error::Parse(format!(
                "order {} needs {phi} coefficients, got {}",
                raw.order,
                raw.coeffs.len()
            )));
        }
        let mut terms = Vec::with_capacity(phi);
        for (i, (p, q)) in raw.coeffs.iter().enumerate() {
            let p: BigInt = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad numerator {p:?}")))?;
            let q: BigInt = q
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator {q:?}")))?;
            if q.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            terms.push((i as i64, Rational::new(p, q)));
        }
        Ok(Self::from_terms(raw.order, terms))
    }

    /// Decodes the JSON form `{"order": n, "coeffs": [["p","q"], …]}`.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: RawCyclotomic = serde_json::from_str(s)?;
        Self::try_from_raw(raw)
    }
}
