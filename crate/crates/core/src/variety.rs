//! The character variety in trace coordinates `(tr A, tr B, tr AB)`.
//!
//! The reducible line maps by
//! `Ψ₀(t) = (tⁿ + t⁻ⁿ, tᵐ + t⁻ᵐ, t^{n+m} + t^{−(n+m)})` and every irreducible
//! line `(k, k′)` maps to an affine line parallel to the third axis.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::{Complex, ONE};
use crate::modular::{
    enumerate_components, intersection_indices, ComponentId, IntersectionIndex, IrrComponent,
    KnotType,
};
use crate::reps::{IrredParam, RepPair};
use crate::Tolerances;

/// A point of ℂ³ in trace coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharPoint {
    pub a: Complex,
    pub b: Complex,
    pub c: Complex,
}

impl CharPoint {
    pub fn new(a: Complex, b: Complex, c: Complex) -> Self {
        CharPoint { a, b, c }
    }

    pub fn real(a: f64, b: f64, c: f64) -> Self {
        CharPoint::new(
            Complex::new(a, 0.0),
            Complex::new(b, 0.0),
            Complex::new(c, 0.0),
        )
    }

    pub fn coords(&self) -> [Complex; 3] {
        [self.a, self.b, self.c]
    }

    /// Max modulus of the coordinate differences.
    pub fn dist(&self, other: &CharPoint) -> f64 {
        (self.a - other.a)
            .norm()
            .max((self.b - other.b).norm())
            .max((self.c - other.c).norm())
    }

    pub fn add_scaled(&self, dir: &CharPoint, r: Complex) -> CharPoint {
        CharPoint::new(self.a + dir.a * r, self.b + dir.b * r, self.c + dir.c * r)
    }
}

impl fmt::Display for CharPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::matrix::fmt_complex;
        write!(
            f,
            "({}, {}, {})",
            fmt_complex(self.a),
            fmt_complex(self.b),
            fmt_complex(self.c)
        )
    }
}

fn sym_power(t: Complex, j: u64) -> Complex {
    let p = t.powi(j as i32);
    p + p.inv()
}

pub fn psi_of_pair(p: &RepPair) -> CharPoint {
    CharPoint::new(p.a.trace(), p.b.trace(), (*p.a.mat() * *p.b.mat()).trace())
}

pub fn psi_red(kt: KnotType, t: Complex) -> Result<CharPoint> {
    if t.norm() == 0.0 || !t.is_finite() {
        return Err(Error::ZeroParameter);
    }
    let (m, n) = (kt.m(), kt.n());
    Ok(CharPoint::new(
        sym_power(t, n),
        sym_power(t, m),
        sym_power(t, n + m),
    ))
}

/// `(λ + λ⁻¹, μ + μ⁻¹, λμ⁻¹ + λ⁻¹μ + r(λ − λ⁻¹)(μ − μ⁻¹))`.
pub fn psi_irr(p: &IrredParam) -> CharPoint {
    let (base, dir) = irr_line(p.lambda, p.mu);
    base.add_scaled(&dir, p.r)
}

/// Base point (`r = 0`) and un-normalised direction of an irreducible line.
fn irr_line(lambda: Complex, mu: Complex) -> (CharPoint, CharPoint) {
    let zero = Complex::new(0.0, 0.0);
    let base = CharPoint::new(
        lambda + lambda.inv(),
        mu + mu.inv(),
        lambda * mu.inv() + lambda.inv() * mu,
    );
    let dir = CharPoint::new(zero, zero, (lambda - lambda.inv()) * (mu - mu.inv()));
    (base, dir)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    R0,
    R1,
}

impl Endpoint {
    pub fn r(&self) -> Complex {
        match self {
            Endpoint::R0 => Complex::new(0.0, 0.0),
            Endpoint::R1 => ONE,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Endpoint::R0 => "r0",
            Endpoint::R1 => "r1",
        }
    }
}

/// Where an irreducible line meets the reducible one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntersectionRecord {
    pub component: IrrComponent,
    pub endpoint: Endpoint,
    pub index: IntersectionIndex,
    pub s: f64,
    pub point: CharPoint,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IrrLine {
    pub component: IrrComponent,
    pub lambda: Complex,
    pub mu: Complex,
    pub psi_base: CharPoint,
    pub psi_dir: CharPoint,
    /// `[r0, r1]`.
    pub intersections: Vec<IntersectionRecord>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ComponentEntry {
    Red,
    Irr(IrrLine),
}

impl ComponentEntry {
    pub fn id(&self) -> ComponentId {
        match self {
            ComponentEntry::Red => ComponentId::Red,
            ComponentEntry::Irr(line) => ComponentId::Irr(line.component),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counts {
    pub irr_lines: u64,
    pub intersection_points: u64,
}

/// Every component of the variety with its trace-coordinate data.
#[derive(Debug, Clone, PartialEq)]
pub struct VarietyDescription {
    pub kt: KnotType,
    pub components: Vec<ComponentEntry>,
    pub counts: Counts,
}

impl VarietyDescription {
    pub fn irr_lines(&self) -> impl Iterator<Item = &IrrLine> {
        self.components.iter().filter_map(|c| match c {
            ComponentEntry::Irr(line) => Some(line),
            ComponentEntry::Red => None,
        })
    }

    pub fn intersections(&self) -> impl Iterator<Item = &IntersectionRecord> {
        self.irr_lines().flat_map(|l| l.intersections.iter())
    }
}

pub fn enumerate_variety(kt: KnotType) -> Result<VarietyDescription> {
    let mut components = Vec::new();
    for id in enumerate_components(kt) {
        let ComponentId::Irr(c) = id else {
            components.push(ComponentEntry::Red);
            continue;
        };
        let (lambda, mu) = (c.lambda(kt), c.mu(kt));
        let (psi_base, psi_dir) = irr_line(lambda, mu);
        let (l0, l1) = intersection_indices(kt, c);
        let intersections = [(Endpoint::R0, l0), (Endpoint::R1, l1)]
            .into_iter()
            .map(|(endpoint, index)| {
                Ok(IntersectionRecord {
                    component: c,
                    endpoint,
                    index,
                    s: index.s(kt),
                    point: psi_red(kt, index.t(kt))?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        components.push(ComponentEntry::Irr(IrrLine {
            component: c,
            lambda,
            mu,
            psi_base,
            psi_dir,
            intersections,
        }));
    }
    let irr_lines = components.len() as u64 - 1;
    let intersection_points = 2 * irr_lines;
    if irr_lines != kt.irreducible_count() {
        return Err(Error::CountMismatch {
            what: "irreducible lines",
            expected: kt.irreducible_count(),
            found: irr_lines,
        });
    }
    if intersection_points != kt.intersection_count() {
        return Err(Error::CountMismatch {
            what: "intersection points",
            expected: kt.intersection_count(),
            found: intersection_points,
        });
    }
    Ok(VarietyDescription {
        kt,
        components,
        counts: Counts {
            irr_lines,
            intersection_points,
        },
    })
}

/// `Σ_{i<j} t^{2i}`, i.e. `(t^{2j} − 1)/(t² − 1)` with the removable
/// singularity at `t = ±1` filled in.
fn q(t: Complex, j: u64) -> Complex {
    let t2 = t * t;
    let mut acc = Complex::new(0.0, 0.0);
    let mut term = ONE;
    for _ in 0..j {
        acc += term;
        term *= t2;
    }
    acc
}

/// `dΨ₀/ds` at `s = t + t⁻¹`.
pub fn tangent_red(kt: KnotType, t: Complex) -> Result<[Complex; 3]> {
    if t.norm() == 0.0 || !t.is_finite() {
        return Err(Error::ZeroParameter);
    }
    let entry = |j: u64| t.powi(1 - j as i32) * q(t, j) * j as f64;
    let (m, n) = (kt.m(), kt.n());
    Ok([entry(n), entry(m), entry(n + m)])
}

/// Whether the reducible line's tangent at `t` leaves the third axis.
///
/// Irreducible lines run along `(0, 0, 1)`, so a tangent with a first or
/// second entry above `tol` crosses them transversally.
pub fn is_transverse_at(kt: KnotType, t: Complex, tol: f64) -> bool {
    match tangent_red(kt, t) {
        Ok([x, y, _]) => x.norm() > tol || y.norm() > tol,
        Err(_) => false,
    }
}

pub fn nodal_check(kt: KnotType, rec: &IntersectionRecord, tol: f64) -> bool {
    is_transverse_at(kt, rec.index.t(kt), tol)
}

/// `p_j(s)` with `p_j(t + t⁻¹) = tʲ + t⁻ʲ`.
pub fn trace_poly(j: u64, s: Complex) -> Complex {
    let (mut prev, mut cur) = (Complex::new(2.0, 0.0), s);
    if j == 0 {
        return prev;
    }
    for _ in 1..j {
        (prev, cur) = (cur, s * cur - prev);
    }
    cur
}

/// A component through a point, with the point's parameter on it:
/// `s = t + t⁻¹` for the reducible line, `r` for an irreducible one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointMatch {
    pub component: ComponentId,
    pub param: Complex,
}

/// Every component of the variety that contains `q` within `tol.membership`.
///
/// An empty result means `q` is off the curve. Nodal points come back with
/// two matches.
pub fn classify_point(kt: KnotType, q: &CharPoint, tol: &Tolerances) -> Vec<PointMatch> {
    let mut out: Vec<PointMatch> = Vec::new();

    // reducible line: tⁿ is a root of w² − a·w + 1
    let root = (q.a * q.a - 4.0).sqrt();
    let n = kt.n();
    for w in [(q.a + root) * 0.5, (q.a - root) * 0.5] {
        if w.norm() == 0.0 {
            continue;
        }
        let base = w.powf(1.0 / n as f64);
        for i in 0..n {
            let t =
                base * Complex::from_polar(1.0, 2.0 * std::f64::consts::PI * i as f64 / n as f64);
            let Ok(p) = psi_red(kt, t) else { continue };
            if p.dist(q) > tol.membership {
                continue;
            }
            let s = t + t.inv();
            let dup = out
                .iter()
                .any(|m| m.component == ComponentId::Red && (m.param - s).norm() <= tol.dedup);
            if !dup {
                out.push(PointMatch {
                    component: ComponentId::Red,
                    param: s,
                });
            }
        }
    }

    for id in enumerate_components(kt) {
        let ComponentId::Irr(c) = id else { continue };
        let (base, dir) = irr_line(c.lambda(kt), c.mu(kt));
        if (q.a - base.a).norm() > tol.membership || (q.b - base.b).norm() > tol.membership {
            continue;
        }
        let r = (q.c - base.c) / dir.c;
        out.push(PointMatch {
            component: id,
            param: r,
        });
    }
    out
}
