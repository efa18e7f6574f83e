//! Representations `ρ = (A, B)` of `⟨x, y | xᵐ = yⁿ⟩` in SL(2,ℂ).
//!
//! Two explicit families cover every character: the diagonal (reducible)
//! pairs indexed by `t ∈ ℂ*`, and for each irreducible label `(k, k′)` the
//! pairs with `A = diag(λ, λ⁻¹)` and `B` diagonal in the basis
//! `f₁ = (1, 1)`, `f₂ = (r − 1, r)`. The classifier and the two inverse maps
//! ([`semisimplify`] and [`double_ratio`]) work on arbitrary conjugates.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::{bracket, eigen, eigenvalue_on, Complex, EigenResult, Mat2, UniMat, Vec2, ONE};
use crate::modular::{IrrComponent, KnotType};
use crate::Tolerances;

/// A pair of unimodular matrices for the knot type `kt`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepPair {
    pub a: UniMat,
    pub b: UniMat,
    pub kt: KnotType,
}

impl RepPair {
    /// Checks the relation, see [`check_relation`].
    pub fn new(kt: KnotType, a: UniMat, b: UniMat, tol: &Tolerances) -> Result<Self> {
        let pair = RepPair { a, b, kt };
        check_relation(&pair, tol)?;
        Ok(pair)
    }

    /// No relation check; [`classify_reducibility`] rejects bad pairs later.
    pub fn new_unchecked(kt: KnotType, a: UniMat, b: UniMat) -> Self {
        RepPair { a, b, kt }
    }

    /// `(P⁻¹AP, P⁻¹BP)`.
    pub fn conjugate(&self, p: &UniMat) -> RepPair {
        RepPair {
            a: self.a.conjugate(p),
            b: self.b.conjugate(p),
            kt: self.kt,
        }
    }
}

impl fmt::Display for RepPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A = {}\nB = {}", self.a, self.b)
    }
}

/// A point `(λ, μ, r)` on an irreducible line, with `λ = e^{iπk/m}` and
/// `μ = e^{iπk′/n}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IrredParam {
    pub component: IrrComponent,
    pub lambda: Complex,
    pub mu: Complex,
    pub r: Complex,
}

impl IrredParam {
    pub fn new(kt: KnotType, component: IrrComponent, r: Complex) -> Self {
        IrredParam {
            component,
            lambda: component.lambda(kt),
            mu: component.mu(kt),
            r,
        }
    }
}

/// `A = diag(tⁿ, t⁻ⁿ)`, `B = diag(tᵐ, t⁻ᵐ)`.
pub fn build_reducible(kt: KnotType, t: Complex) -> Result<RepPair> {
    if t.norm() == 0.0 || !t.is_finite() {
        return Err(Error::ZeroParameter);
    }
    let a = UniMat::diag(t.powi(kt.n() as i32))?;
    let b = UniMat::diag(t.powi(kt.m() as i32))?;
    Ok(RepPair::new_unchecked(kt, a, b))
}

/// `A = diag(λ, λ⁻¹)` and `B = F·diag(μ, μ⁻¹)·F⁻¹` with `F = [[1, r−1], [1, r]]`.
///
/// `r = 0` and `r = 1` are allowed; they give the two reducible endpoints.
pub fn build_irreducible(kt: KnotType, p: &IrredParam) -> Result<RepPair> {
    let tol = Tolerances::default();
    let (lambda, mu, r) = (p.lambda, p.mu, p.r);
    let gap = mu - mu.inv();
    let b = Mat2::new(r * gap + mu.inv(), (ONE - r) * gap, r * gap, mu - r * gap);
    let a = UniMat::diag(lambda)?;
    let b = UniMat::new(b, &tol)?;
    Ok(RepPair::new_unchecked(kt, a, b))
}

/// `‖Aᵐ − Bⁿ‖_max`, with the powers taken through [`Mat2::power_by_trace`].
pub fn relation_defect(p: &RepPair) -> f64 {
    let am = p.a.mat().power_by_trace(p.kt.m());
    let bn = p.b.mat().power_by_trace(p.kt.n());
    am.dist(&bn)
}

/// Accepts `‖Aᵐ − Bⁿ‖_max ≤ tol.relation · max(1, ‖A‖_max, ‖B‖_max)²`.
///
/// For unit-modulus eigenvalues `Bʲ = U_{j−1}(τ)·B − U_{j−2}(τ)·Id` with
/// bounded coefficients, so the rounding error in `Bⁿ` grows like `‖B‖²`.
/// Conjugating by an ill-conditioned matrix inflates `‖B‖` without changing
/// the representation.
pub fn check_relation(p: &RepPair, tol: &Tolerances) -> Result<()> {
    let defect = relation_defect(p);
    let bound = tol.relation * power_scale(p);
    if defect.is_nan() || defect > bound {
        return Err(Error::RelationViolated { defect, tol: bound });
    }
    Ok(())
}

/// `max(1, ‖A‖_max, ‖B‖_max)²`, the growth of rounding error in `Aᵐ` and `Bⁿ`.
fn power_scale(p: &RepPair) -> f64 {
    let scale = p.a.mat().max_norm().max(p.b.mat().max_norm()).max(1.0);
    scale * scale
}

/// Which branch of the reducibility argument applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReducibleReason {
    /// Both eigenbases share a line although `Aᵐ = ±Id`.
    SharedEigenvectorGeneric,
    /// `Aᵐ = Bⁿ ≠ ±Id`.
    CaseAPowerNotCentral,
    /// `A = ±Id` or `B = ±Id`.
    CaseBCentralGenerator,
    /// `A` or `B` is not diagonalizable.
    CaseCNonDiagonalizable,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ReducibilityVerdict {
    Irreducible,
    Reducible {
        reason: ReducibleReason,
        common_line: Vec2,
    },
}

impl ReducibilityVerdict {
    pub fn is_reducible(&self) -> bool {
        matches!(self, ReducibilityVerdict::Reducible { .. })
    }
}

fn any_eigenline(e: &EigenResult) -> Vec2 {
    match *e {
        EigenResult::Distinct { v1, .. } => v1,
        EigenResult::NonDiagonalizable { v, .. } => v,
        EigenResult::Scalar(_) => Vec2::real(1.0, 0.0),
    }
}

fn is_eigenvector(m: &Mat2, v: Vec2, tol: f64) -> bool {
    let image = m.apply(v);
    let scale = image.norm() * v.norm();
    scale == 0.0 || bracket(image, v).norm() <= tol * scale
}

/// Decides whether `A` and `B` share an eigenvector.
///
/// The degenerate situations are tested first, in the order
/// central generator, non-diagonalizable generator, non-central power,
/// and only then are `A`'s two eigenlines tested against `B`.
pub fn classify_reducibility(p: &RepPair, tol: &Tolerances) -> Result<ReducibilityVerdict> {
    check_relation(p, tol)?;
    let ea = eigen(&p.a, tol);
    let eb = eigen(&p.b, tol);
    let reducible = |reason, common_line| ReducibilityVerdict::Reducible {
        reason,
        common_line,
    };

    if let EigenResult::Scalar(_) = ea {
        return Ok(reducible(
            ReducibleReason::CaseBCentralGenerator,
            any_eigenline(&eb),
        ));
    }
    if let EigenResult::Scalar(_) = eb {
        return Ok(reducible(
            ReducibleReason::CaseBCentralGenerator,
            any_eigenline(&ea),
        ));
    }
    if let EigenResult::NonDiagonalizable { v, .. } = ea {
        return Ok(reducible(ReducibleReason::CaseCNonDiagonalizable, v));
    }
    if let EigenResult::NonDiagonalizable { v, .. } = eb {
        return Ok(reducible(ReducibleReason::CaseCNonDiagonalizable, v));
    }
    let EigenResult::Distinct { v1, v2, .. } = ea else {
        unreachable!("degenerate cases handled above");
    };
    let am = p.a.mat().power_by_trace(p.kt.m());
    let entry = tol.entry * power_scale(p);
    let central = [1.0, -1.0]
        .iter()
        .any(|&sign| am.approx_eq(&Mat2::scalar(Complex::new(sign, 0.0)), entry));
    if !central {
        // B commutes with Aᵐ, which has distinct eigenvalues, so both lines are shared
        return Ok(reducible(ReducibleReason::CaseAPowerNotCentral, v1));
    }
    for v in [v1, v2] {
        if is_eigenvector(p.b.mat(), v, tol.eigenline) {
            return Ok(reducible(ReducibleReason::SharedEigenvectorGeneric, v));
        }
    }
    Ok(ReducibilityVerdict::Irreducible)
}

/// Coordinate `s = t + t⁻¹` of the semisimplification of a reducible pair.
///
/// Reads the eigenvalues `λ`, `μ` of `A` and `B` on their common line and
/// solves `tⁿ = λ`, `tᵐ = μ` through the Bézout identity `u·n + v·m = 1`:
/// `t = λᵘ μᵛ`.
pub fn semisimplify(p: &RepPair, tol: &Tolerances) -> Result<Complex> {
    let ReducibilityVerdict::Reducible { common_line, .. } = classify_reducibility(p, tol)? else {
        return Err(Error::NotReducible);
    };
    let lambda = eigenvalue_on(p.a.mat(), common_line);
    let mu = eigenvalue_on(p.b.mat(), common_line);
    let (u, v) = p.kt.bezout();
    let t = lambda.powi(u as i32) * mu.powi(v as i32);
    Ok(t + t.inv())
}

/// Cross-ratio of four points of ℙ¹, normalised so that
/// `e₁ = (1, 0)`, `e₂ = (0, 1)`, `f₁ = (1, 1)`, `f₂ = (r − 1, r)` gives `r`.
///
/// Swapping `e₁, e₂` (or `f₁, f₂`) maps `r` to `1 − r`.
pub fn cross_ratio(e1: Vec2, e2: Vec2, f1: Vec2, f2: Vec2) -> Complex {
    let z = (bracket(f2, e2) * bracket(f1, e1)) / (bracket(f2, e1) * bracket(f1, e2));
    (ONE - z).inv()
}

/// Puts an eigenvalue with argument in `(0, π)` first.
fn canonical_order(lambda: Complex, v1: Vec2, v2: Vec2) -> (Complex, Vec2, Vec2) {
    let upper = lambda.im > 0.0 || (lambda.im == 0.0 && lambda.norm() > 1.0);
    if upper {
        (lambda, v1, v2)
    } else {
        (lambda.inv(), v2, v1)
    }
}

fn root_index(z: Complex, order: u64, tol: f64) -> Result<u64> {
    let not_root = Error::EigenvalueNotRootOfUnity { re: z.re, im: z.im };
    let k = (z.arg() * order as f64 / std::f64::consts::PI).round();
    if !(k >= 1.0 && k < order as f64) {
        return Err(not_root);
    }
    let k = k as u64;
    let exact = Complex::from_polar(1.0, std::f64::consts::PI * k as f64 / order as f64);
    if (z - exact).norm() > tol {
        return Err(not_root);
    }
    Ok(k)
}

/// Canonical `(k, k′, r)` of an irreducible pair.
///
/// Eigenvalues are ordered so that `arg λ, arg μ ∈ (0, π)`; each reordering
/// is the `ℤ₂` action `r ↦ 1 − r`, which the ordered cross-ratio realises
/// directly.
pub fn double_ratio(p: &RepPair, tol: &Tolerances) -> Result<IrredParam> {
    if classify_reducibility(p, tol)?.is_reducible() {
        return Err(Error::NotIrreducible);
    }
    let (
        EigenResult::Distinct {
            lambda,
            v1: e1,
            v2: e2,
            ..
        },
        EigenResult::Distinct {
            lambda: mu,
            v1: f1,
            v2: f2,
            ..
        },
    ) = (eigen(&p.a, tol), eigen(&p.b, tol))
    else {
        return Err(Error::NotIrreducible);
    };
    let (lambda, e1, e2) = canonical_order(lambda, e1, e2);
    let (mu, f1, f2) = canonical_order(mu, f1, f2);
    let k = root_index(lambda, p.kt.m(), tol.root_of_unity)?;
    let kp = root_index(mu, p.kt.n(), tol.root_of_unity)?;
    let component = IrrComponent::new(p.kt, k as i64, kp as i64)?;
    let r = cross_ratio(e1, e2, f1, f2);
    Ok(IrredParam::new(p.kt, component, r))
}

/// A letter of a word in the generators: `x`, `x⁻¹`, `y`, `y⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    X,
    XInv,
    Y,
    YInv,
}

/// Word in `x, y` and their inverses. Parses from strings over `xXyY`,
/// capitals meaning inverses.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word(pub Vec<Letter>);

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'x' => Ok(Letter::X),
                'X' => Ok(Letter::XInv),
                'y' => Ok(Letter::Y),
                'Y' => Ok(Letter::YInv),
                other => Err(Error::InvalidWord(other)),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::X => "x",
                Letter::XInv => "X",
                Letter::Y => "y",
                Letter::YInv => "Y",
            })?;
        }
        Ok(())
    }
}

/// `χ_ρ(w) = tr ρ(w)`.
pub fn character_eval(p: &RepPair, w: &Word) -> Complex {
    let (a_inv, b_inv) = (p.a.inverse(), p.b.inverse());
    w.0.iter()
        .fold(Mat2::IDENTITY, |acc, l| {
            acc * *match l {
                Letter::X => p.a.mat(),
                Letter::XInv => a_inv.mat(),
                Letter::Y => p.b.mat(),
                Letter::YInv => b_inv.mat(),
            }
        })
        .trace()
}
