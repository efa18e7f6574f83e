//! Exact integer bookkeeping: knot types, component labels and the
//! congruences that place intersection points on the reducible line.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Complex;

const MAX_ENTRY: i64 = 1_000_000;

/// Extended Euclid: returns `(g, x, y)` with `a·x + b·y = g = gcd(a, b) ≥ 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a as i128, b as i128);
    let (mut old_x, mut x) = (1i128, 0i128);
    let (mut old_y, mut y) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_x, x) = (x, old_x - q * x);
        (old_y, y) = (y, old_y - q * y);
    }
    if old_r < 0 {
        (old_r, old_x, old_y) = (-old_r, -old_x, -old_y);
    }
    (old_r as i64, old_x as i64, old_y as i64)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    ext_gcd(a, b).0
}

/// Inverse of `a` modulo `modulus`, in `[0, modulus)`.
pub fn mod_inverse(a: i64, modulus: i64) -> Result<i64> {
    if modulus <= 0 {
        return Err(Error::NotInvertible { a, modulus });
    }
    let (g, x, _) = ext_gcd(a.rem_euclid(modulus), modulus);
    if g != 1 {
        return Err(Error::NotInvertible { a, modulus });
    }
    Ok(x.rem_euclid(modulus))
}

/// Solves `x ≡ r1 (mod m1)`, `x ≡ r2 (mod m2)` for possibly non-coprime
/// moduli. The result is the representative in `[0, lcm(m1, m2))`.
pub fn crt(r1: i64, m1: i64, r2: i64, m2: i64) -> Result<i64> {
    let inconsistent = Error::Inconsistent { r1, m1, r2, m2 };
    if m1 <= 0 || m2 <= 0 {
        return Err(inconsistent);
    }
    let (g, p, _) = ext_gcd(m1, m2);
    let diff = r2 as i128 - r1 as i128;
    if diff.rem_euclid(g as i128) != 0 {
        return Err(inconsistent);
    }
    let lcm = m1 as i128 / g as i128 * m2 as i128;
    let step = (m2 / g) as i128;
    // m1·p ≡ g (mod m2), so x = r1 + m1·p·(diff/g) works
    let k = ((diff / g as i128) * p as i128).rem_euclid(step);
    let x = (r1 as i128 + m1 as i128 * k).rem_euclid(lcm);
    Ok(x as i64)
}

/// A torus knot type: coprime positive `(m, n)`, each at most 10⁶.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawKnot", into = "RawKnot")]
pub struct KnotType {
    m: u64,
    n: u64,
}

#[derive(Serialize, Deserialize)]
struct RawKnot {
    m: i64,
    n: i64,
}

impl TryFrom<RawKnot> for KnotType {
    type Error = Error;

    fn try_from(raw: RawKnot) -> Result<Self> {
        KnotType::new(raw.m, raw.n)
    }
}

impl From<KnotType> for RawKnot {
    fn from(kt: KnotType) -> Self {
        RawKnot {
            m: kt.m as i64,
            n: kt.n as i64,
        }
    }
}

impl KnotType {
    pub fn new(m: i64, n: i64) -> Result<Self> {
        if m < 1 || n < 1 {
            return Err(Error::NonPositive { m, n });
        }
        if m > MAX_ENTRY || n > MAX_ENTRY {
            return Err(Error::TooLarge { m, n });
        }
        if gcd(m, n) != 1 {
            return Err(Error::NotCoprime { m, n });
        }
        Ok(KnotType {
            m: m as u64,
            n: n as u64,
        })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn mn(&self) -> u64 {
        self.m * self.n
    }

    /// `(m−1)(n−1)/2`, the number of irreducible lines.
    pub fn irreducible_count(&self) -> u64 {
        (self.m - 1) * (self.n - 1) / 2
    }

    /// `(m−1)(n−1)`, the number of points where they meet the reducible line.
    pub fn intersection_count(&self) -> u64 {
        (self.m - 1) * (self.n - 1)
    }

    /// Bézout pair `(u, v)` with `u·n + v·m = 1` and `|u|` minimal,
    /// positive `u` on ties.
    pub fn bezout(&self) -> (i64, i64) {
        let (m, n) = (self.m as i64, self.n as i64);
        let u0 = mod_inverse(n, m).expect("coprime by construction");
        let u = if u0 == 0 || u0 <= m - u0 { u0 } else { u0 - m };
        let v = (1 - u as i128 * n as i128) / m as i128;
        (u, v as i64)
    }

    /// The interior indices `{ l ∈ (0, mn) : m ∤ l, n ∤ l }`.
    pub fn admissible_indices(&self) -> Vec<u64> {
        (1..self.mn())
            .filter(|l| l % self.m != 0 && l % self.n != 0)
            .collect()
    }

    pub fn irr(&self, k: i64, kp: i64) -> Result<IrrComponent> {
        IrrComponent::new(*self, k, kp)
    }
}

impl fmt::Display for KnotType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

pub fn validate_knot(m: i64, n: i64) -> Result<KnotType> {
    KnotType::new(m, n)
}

/// Label `(k, k′)` of an irreducible line: `0 < k < m`, `0 < k′ < n`,
/// `k ≡ k′ (mod 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrComponent {
    k: u64,
    kp: u64,
}

impl IrrComponent {
    pub fn new(kt: KnotType, k: i64, kp: i64) -> Result<Self> {
        let ok = k > 0
            && kp > 0
            && (k as u64) < kt.m
            && (kp as u64) < kt.n
            && (k - kp).rem_euclid(2) == 0;
        if !ok {
            return Err(Error::InvalidComponent {
                m: kt.m,
                n: kt.n,
                k,
                kp,
            });
        }
        Ok(IrrComponent {
            k: k as u64,
            kp: kp as u64,
        })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn kp(&self) -> u64 {
        self.kp
    }

    /// `λ = e^{iπk/m}`.
    pub fn lambda(&self, kt: KnotType) -> Complex {
        Complex::from_polar(1.0, PI * self.k as f64 / kt.m as f64)
    }

    /// `μ = e^{iπk′/n}`.
    pub fn mu(&self, kt: KnotType) -> Complex {
        Complex::from_polar(1.0, PI * self.kp as f64 / kt.n as f64)
    }
}

impl fmt::Display for IrrComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.kp)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentId {
    Red,
    Irr(IrrComponent),
}

impl fmt::Display for ComponentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentId::Red => f.write_str("Red"),
            ComponentId::Irr(c) => write!(f, "Irr{c}"),
        }
    }
}

/// `[Red, Irr(k, k′)…]`, irreducible labels in lexicographic order.
pub fn enumerate_components(kt: KnotType) -> Vec<ComponentId> {
    let mut out = vec![ComponentId::Red];
    for k in 1..kt.m {
        for kp in (1..kt.n).filter(|kp| (k + kp) % 2 == 0) {
            out.push(ComponentId::Irr(IrrComponent { k, kp }));
        }
    }
    out
}

/// Index `l` of the point `t_l = e^{iπl/(mn)}`, together with its fold
/// `min(l, 2mn − l)` under `t ↦ t⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntersectionIndex {
    raw: u64,
    folded: u64,
}

impl IntersectionIndex {
    pub fn new(kt: KnotType, raw: u64) -> Self {
        let period = 2 * kt.mn();
        let raw = raw % period;
        IntersectionIndex {
            raw,
            folded: raw.min(period - raw),
        }
    }

    pub fn raw(&self) -> u64 {
        self.raw
    }

    pub fn folded(&self) -> u64 {
        self.folded
    }

    /// `t_l = e^{iπl/(mn)}` for the raw index.
    pub fn t(&self, kt: KnotType) -> Complex {
        Complex::from_polar(1.0, PI * self.raw as f64 / kt.mn() as f64)
    }

    /// `s_l = 2cos(π·folded/(mn))`.
    pub fn s(&self, kt: KnotType) -> f64 {
        2.0 * (PI * self.folded as f64 / kt.mn() as f64).cos()
    }
}

/// Endpoints `(l0, l1)` of an irreducible line on the reducible line:
/// `r = 0` lands at `t^n = λ, t^m = μ⁻¹`, `r = 1` at `t^n = λ, t^m = μ`.
///
/// With `t = e^{iπl/(mn)}` these read `l ≡ k (mod 2m)` together with
/// `l ≡ −k′` resp. `l ≡ k′ (mod 2n)`, which is consistent because `k ≡ k′ (mod 2)`.
pub fn intersection_indices(
    kt: KnotType,
    c: IrrComponent,
) -> (IntersectionIndex, IntersectionIndex) {
    let (m2, n2) = (2 * kt.m as i64, 2 * kt.n as i64);
    let (k, kp) = (c.k as i64, c.kp as i64);
    let l1 = crt(k, m2, kp, n2).expect("parity invariant makes the system consistent");
    let l0 = crt(k, m2, n2 - kp, n2).expect("parity invariant makes the system consistent");
    (
        IntersectionIndex::new(kt, l0 as u64),
        IntersectionIndex::new(kt, l1 as u64),
    )
}
