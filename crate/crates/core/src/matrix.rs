//! Complex 2×2 linear algebra over double precision.
//!
//! Everything here is small and `Copy`. [`UniMat`] is the only type carrying
//! an invariant (determinant one, within the construction tolerance).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::Tolerances;

pub type Complex = num_complex::Complex64;

pub(crate) const ZERO: Complex = Complex::new(0.0, 0.0);
pub(crate) const ONE: Complex = Complex::new(1.0, 0.0);

/// Row-major complex 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub a: Complex,
    pub b: Complex,
    pub c: Complex,
    pub d: Complex,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2::new(ONE, ZERO, ZERO, ONE);

    pub const fn new(a: Complex, b: Complex, c: Complex, d: Complex) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn diag(x: Complex, y: Complex) -> Self {
        Mat2::new(x, ZERO, ZERO, y)
    }

    pub fn scalar(x: Complex) -> Self {
        Mat2::diag(x, x)
    }

    /// Matrix with the given columns.
    pub fn from_columns(v: Vec2, w: Vec2) -> Self {
        Mat2::new(v.x, w.x, v.y, w.y)
    }

    pub fn trace(&self) -> Complex {
        self.a + self.d
    }

    pub fn det(&self) -> Complex {
        self.a * self.d - self.b * self.c
    }

    pub fn scale(&self, k: Complex) -> Self {
        Mat2::new(self.a * k, self.b * k, self.c * k, self.d * k)
    }

    pub fn apply(&self, v: Vec2) -> Vec2 {
        Vec2::new(self.a * v.x + self.b * v.y, self.c * v.x + self.d * v.y)
    }

    /// Adjugate; equals the inverse when `det = 1`.
    pub fn adjugate(&self) -> Self {
        Mat2::new(self.d, -self.b, -self.c, self.a)
    }

    /// `self^e` by binary exponentiation.
    pub fn power(&self, mut e: u64) -> Self {
        let mut acc = Mat2::IDENTITY;
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            e >>= 1;
            if e > 0 {
                base = base * base;
            }
        }
        acc
    }

    /// `self^e` as `a·M + b·Id`, exponentiating in `ℂ[M]/(M² − τM + δ)`.
    ///
    /// Only the scalars `a`, `b` are multiplied, so the rounding error grows
    /// with `‖M‖²` instead of compounding through `e` matrix products.
    pub fn power_by_trace(&self, mut e: u64) -> Self {
        let (tau, delta) = (self.trace(), self.det());
        let mul = |(a1, b1): (Complex, Complex), (a2, b2): (Complex, Complex)| {
            (a1 * a2 * tau + a1 * b2 + a2 * b1, b1 * b2 - a1 * a2 * delta)
        };
        let (mut acc, mut base) = ((ZERO, ONE), (ONE, ZERO));
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = mul(base, base);
            }
        }
        self.scale(acc.0) + Mat2::scalar(acc.1)
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> f64 {
        [self.a, self.b, self.c, self.d]
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Max-entry distance to `other`.
    pub fn dist(&self, other: &Mat2) -> f64 {
        (*self - *other).max_norm()
    }

    pub fn approx_eq(&self, other: &Mat2, tol: f64) -> bool {
        self.dist(other) <= tol
    }

    /// `P⁻¹ · self · P`.
    pub fn conjugate(&self, p: &UniMat) -> Mat2 {
        p.inverse().0 * *self * p.0
    }

    pub fn is_finite(&self) -> bool {
        [self.a, self.b, self.c, self.d]
            .iter()
            .all(|z| z.is_finite())
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, o: Mat2) -> Mat2 {
        Mat2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

impl Add for Mat2 {
    type Output = Mat2;

    fn add(self, o: Mat2) -> Mat2 {
        Mat2::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl Sub for Mat2 {
    type Output = Mat2;

    fn sub(self, o: Mat2) -> Mat2 {
        Mat2::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }
}

impl Neg for Mat2 {
    type Output = Mat2;

    fn neg(self) -> Mat2 {
        Mat2::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            fmt_complex(self.a),
            fmt_complex(self.b),
            fmt_complex(self.c),
            fmt_complex(self.d)
        )
    }
}

/// `a+bi` with 12 decimals; parts that round to zero print unsigned.
pub fn fmt_complex(z: Complex) -> String {
    let unsign = |x: f64| if x.abs() < 5e-13 { 0.0 } else { x };
    let (re, im) = (unsign(z.re), unsign(z.im));
    if im < 0.0 {
        format!("{re:.12}-{:.12}i", -im)
    } else {
        format!("{re:.12}+{im:.12}i")
    }
}

/// A matrix in SL(2,ℂ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniMat(Mat2);

impl UniMat {
    pub const IDENTITY: UniMat = UniMat(Mat2::IDENTITY);

    /// Accepts `m` when `|det m − 1| ≤ tol.construct`.
    pub fn new(m: Mat2, tol: &Tolerances) -> Result<Self> {
        let defect = (m.det() - ONE).norm();
        if !m.is_finite() || defect.is_nan() || defect > tol.construct {
            return Err(Error::NotUnimodular { defect });
        }
        Ok(UniMat(m))
    }

    pub fn diag(x: Complex) -> Result<Self> {
        if x == ZERO || !x.is_finite() {
            return Err(Error::ZeroParameter);
        }
        Ok(UniMat(Mat2::diag(x, x.inv())))
    }

    pub fn mat(&self) -> &Mat2 {
        &self.0
    }

    pub fn into_mat(self) -> Mat2 {
        self.0
    }

    pub fn inverse(&self) -> UniMat {
        UniMat(self.0.adjugate())
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn powi(&self, e: i64) -> UniMat {
        if e >= 0 {
            UniMat(self.0.power(e as u64))
        } else {
            UniMat(self.inverse().0.power(e.unsigned_abs()))
        }
    }

    pub fn conjugate(&self, p: &UniMat) -> UniMat {
        UniMat(self.0.conjugate(p))
    }

    pub fn trace(&self) -> Complex {
        self.0.trace()
    }
}

impl Mul for UniMat {
    type Output = UniMat;

    fn mul(self, o: UniMat) -> UniMat {
        UniMat(self.0 * o.0)
    }
}

impl fmt::Display for UniMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Column vector in ℂ², mostly used as a point of ℙ¹.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec2 {
    pub x: Complex,
    pub y: Complex,
}

impl Vec2 {
    pub const fn new(x: Complex, y: Complex) -> Self {
        Vec2 { x, y }
    }

    pub fn real(x: f64, y: f64) -> Self {
        Vec2::new(Complex::new(x, 0.0), Complex::new(y, 0.0))
    }

    pub fn norm(&self) -> f64 {
        self.x.norm().hypot(self.y.norm())
    }

    /// Hermitian product `⟨self, w⟩ = conj(self) · w`.
    pub fn inner(&self, w: Vec2) -> Complex {
        self.x.conj() * w.x + self.y.conj() * w.y
    }

    /// Whether `self` and `w` span the same line, up to a relative `tol`.
    pub fn same_line(&self, w: Vec2, tol: f64) -> bool {
        bracket(*self, w).norm() <= tol * self.norm() * w.norm()
    }
}

/// Determinant of the matrix with columns `v`, `w`.
pub fn bracket(v: Vec2, w: Vec2) -> Complex {
    v.x * w.y - v.y * w.x
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EigenResult {
    /// Eigenpairs `(λ, v₁)` and `(λ⁻¹, v₂)` with `λ ≠ ±1`.
    Distinct {
        lambda: Complex,
        v1: Vec2,
        lambda_inv: Complex,
        v2: Vec2,
    },
    /// `M ≈ ±Id`; holds the sign.
    Scalar(f64),
    /// Single eigenvalue `±1` with a one-dimensional eigenspace.
    NonDiagonalizable { lambda: f64, v: Vec2 },
}

impl EigenResult {
    pub fn is_distinct(&self) -> bool {
        matches!(self, EigenResult::Distinct { .. })
    }
}

/// Eigen-decomposition of a unimodular matrix.
///
/// `|τ² − 4| > tol.degenerate` decides between two distinct eigenvalues and
/// the degenerate cases. Eigenvectors are taken from the kernel of `M − λ`
/// using the row of larger magnitude and are left unnormalized.
pub fn eigen(m: &UniMat, tol: &Tolerances) -> EigenResult {
    let m = m.mat();
    let tau = m.trace();
    let disc = tau * tau - 4.0;
    if disc.norm() > tol.degenerate {
        let root = disc.sqrt();
        let plus = (tau + root) * 0.5;
        let minus = (tau - root) * 0.5;
        // the smaller root loses digits to cancellation; recover it from det = 1
        let (lambda, lambda_inv) = if plus.norm() >= minus.norm() {
            (plus, plus.inv())
        } else {
            (minus.inv(), minus)
        };
        EigenResult::Distinct {
            lambda,
            v1: kernel_vector(m, lambda),
            lambda_inv,
            v2: kernel_vector(m, lambda_inv),
        }
    } else {
        let sign = if tau.re >= 0.0 { 1.0 } else { -1.0 };
        if m.approx_eq(&Mat2::scalar(Complex::new(sign, 0.0)), tol.entry) {
            EigenResult::Scalar(sign)
        } else {
            EigenResult::NonDiagonalizable {
                lambda: sign,
                v: kernel_vector(m, Complex::new(sign, 0.0)),
            }
        }
    }
}

fn kernel_vector(m: &Mat2, lambda: Complex) -> Vec2 {
    let (p1, q1) = (m.a - lambda, m.b);
    let (p2, q2) = (m.c, m.d - lambda);
    let n1 = p1.norm_sqr() + q1.norm_sqr();
    let n2 = p2.norm_sqr() + q2.norm_sqr();
    let (p, q) = if n1 >= n2 { (p1, q1) } else { (p2, q2) };
    if p == ZERO && q == ZERO {
        return Vec2::real(1.0, 0.0);
    }
    Vec2::new(-q, p)
}

/// Eigenvalue of `m` on the line spanned by `v` (Rayleigh quotient).
pub fn eigenvalue_on(m: &Mat2, v: Vec2) -> Complex {
    v.inner(m.apply(v)) / v.inner(v)
}

const RANDOM_ATTEMPTS: usize = 100;

/// Random element of SL(2,ℂ) with `a, b, c` drawn from the standard complex
/// Gaussian and `d = (1 + bc)/a`.
pub fn random_unimodular<R: Rng + ?Sized>(rng: &mut R) -> Result<UniMat> {
    for _ in 0..RANDOM_ATTEMPTS {
        let a = complex_gaussian(rng);
        let b = complex_gaussian(rng);
        let c = complex_gaussian(rng);
        if a.norm() < 1e-6 {
            continue;
        }
        let d = (ONE + b * c) / a;
        return Ok(UniMat(Mat2::new(a, b, c, d)));
    }
    Err(Error::SamplingFailed {
        attempts: RANDOM_ATTEMPTS,
    })
}

/// [`random_unimodular`] redrawn until every entry has modulus at most
/// `max_entry`.
///
/// Round-trip checks through `P⁻¹ρP` lose about `ε·κ(P)²` of accuracy, and the
/// Gaussian sampler has a heavy tail in `|d| ~ 1/|a|`; bounding the entries
/// bounds `κ(P) ≤ 4·max_entry²`.
pub fn random_conjugator<R: Rng + ?Sized>(rng: &mut R, max_entry: f64) -> Result<UniMat> {
    for _ in 0..RANDOM_ATTEMPTS {
        let p = random_unimodular(rng)?;
        if p.mat().max_norm() <= max_entry {
            return Ok(p);
        }
    }
    Err(Error::SamplingFailed {
        attempts: RANDOM_ATTEMPTS,
    })
}

/// Standard complex Gaussian: real and imaginary parts `N(0, 1/2)`.
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn cis(theta: f64) -> Complex {
        Complex::from_polar(1.0, theta)
    }

    #[test]
    fn products() {
        assert_eq!(Mat2::IDENTITY * Mat2::IDENTITY, Mat2::IDENTITY);
        let j = Mat2::diag(c(0.0, 1.0), c(0.0, -1.0));
        assert_eq!(j * j, Mat2::diag(c(-1.0, 0.0), c(-1.0, 0.0)));
    }

    #[test]
    fn inverses() {
        assert_eq!(UniMat::IDENTITY.inverse(), UniMat::IDENTITY);
        let t = c(2.0, 1.0);
        let d = UniMat::diag(t).unwrap();
        assert!(d.inverse().mat().approx_eq(&Mat2::diag(t.inv(), t), 1e-15));
        let u = UniMat::new(Mat2::new(ONE, ONE, ZERO, ONE), &tol()).unwrap();
        assert_eq!(*u.inverse().mat(), Mat2::new(ONE, -ONE, ZERO, ONE));
        assert_eq!(*(u * u.inverse()).mat(), Mat2::IDENTITY);
    }

    #[test]
    fn powers() {
        let j = Mat2::diag(c(0.0, 1.0), c(0.0, -1.0));
        assert_eq!(j.power(2), -Mat2::IDENTITY);
        assert_eq!(j.power(0), Mat2::IDENTITY);
        let u = Mat2::new(ONE, ONE, ZERO, ONE);
        for m in 0..20u64 {
            assert_eq!(u.power(m), Mat2::new(ONE, c(m as f64, 0.0), ZERO, ONE));
        }
        let r = Mat2::diag(cis(PI / 6.0), cis(-PI / 6.0));
        assert!(r.power(6).approx_eq(&-Mat2::IDENTITY, 1e-14));
    }

    #[test]
    fn negative_powers() {
        let u = UniMat::new(Mat2::new(ONE, ONE, ZERO, ONE), &tol()).unwrap();
        assert_eq!(*u.powi(-3).mat(), Mat2::new(ONE, c(-3.0, 0.0), ZERO, ONE));
    }

    #[test]
    fn trace_and_det() {
        assert_eq!(Mat2::IDENTITY.trace(), c(2.0, 0.0));
        let t = c(0.3, -1.2);
        let d = Mat2::diag(t, t.inv());
        assert!((d.trace() - (t + t.inv())).norm() < 1e-15);
        assert_eq!(Mat2::diag(c(0.0, 1.0), c(0.0, -1.0)).det(), ONE);
    }

    #[test]
    fn conjugation() {
        let m = Mat2::new(c(1.0, 2.0), c(0.5, 0.0), c(-1.0, 1.0), c(3.0, 0.0));
        assert_eq!(m.conjugate(&UniMat::IDENTITY), m);
        let lambda = cis(0.7);
        // basis swap
        let swap = UniMat::new(Mat2::new(ZERO, -ONE, ONE, ZERO), &tol()).unwrap();
        let d = Mat2::diag(lambda, lambda.inv());
        assert!(d
            .conjugate(&swap)
            .approx_eq(&Mat2::diag(lambda.inv(), lambda), 1e-15));
    }

    #[test]
    fn eigen_identity_and_unipotent() {
        assert_eq!(eigen(&UniMat::IDENTITY, &tol()), EigenResult::Scalar(1.0));
        let minus = UniMat::new(-Mat2::IDENTITY, &tol()).unwrap();
        assert_eq!(eigen(&minus, &tol()), EigenResult::Scalar(-1.0));
        let u = UniMat::new(Mat2::new(ONE, ONE, ZERO, ONE), &tol()).unwrap();
        match eigen(&u, &tol()) {
            EigenResult::NonDiagonalizable { lambda, v } => {
                assert_eq!(lambda, 1.0);
                assert!(v.same_line(Vec2::real(1.0, 0.0), 1e-15));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn eigen_diagonal() {
        let lambda = cis(PI / 3.0);
        let m = UniMat::diag(lambda).unwrap();
        match eigen(&m, &tol()) {
            EigenResult::Distinct {
                lambda: l,
                v1,
                lambda_inv,
                v2,
            } => {
                assert!((l - lambda).norm() < 1e-15);
                assert!((lambda_inv - lambda.inv()).norm() < 1e-15);
                assert!(v1.same_line(Vec2::real(1.0, 0.0), 1e-15));
                assert!(v2.same_line(Vec2::real(0.0, 1.0), 1e-15));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bracket_values() {
        assert_eq!(bracket(Vec2::real(1.0, 0.0), Vec2::real(0.0, 1.0)), ONE);
        let v = Vec2::new(c(0.3, 1.0), c(-2.0, 0.5));
        assert_eq!(bracket(v, v), ZERO);
        let r = c(2.5, -0.75);
        let got = bracket(Vec2::new(r - 1.0, r), Vec2::new(ZERO, ONE));
        assert_eq!(got, r - 1.0);
    }

    #[test]
    fn random_unimodular_is_deterministic() {
        let a = random_unimodular(&mut ChaCha8Rng::seed_from_u64(42)).unwrap();
        let b = random_unimodular(&mut ChaCha8Rng::seed_from_u64(42)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn random_unimodular_sweep() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..1000 {
            let p = random_unimodular(&mut rng).unwrap();
            assert!((p.mat().det() - ONE).norm() <= 1e-12);
            UniMat::new(*p.mat(), &tol()).unwrap();
        }
    }

    #[test]
    fn power_by_trace_agrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for e in 0..40 {
            let m = *random_unimodular(&mut rng).unwrap().mat();
            let d = m.power(e).dist(&m.power_by_trace(e));
            assert!(d <= 1e-9 * m.power(e).max_norm().max(1.0), "e = {e}: {d}");
        }
        let u = Mat2::new(ONE, ONE, ZERO, ONE);
        assert!(u
            .power_by_trace(7)
            .approx_eq(&Mat2::new(ONE, Complex::new(7.0, 0.0), ZERO, ONE), 1e-13));
        let n = Mat2::new(ONE, ONE, ONE, ZERO);
        assert_eq!(
            n.power_by_trace(10),
            Mat2::new(
                Complex::new(89.0, 0.0),
                Complex::new(55.0, 0.0),
                Complex::new(55.0, 0.0),
                Complex::new(34.0, 0.0),
            )
        );
    }

    #[test]
    fn complex_formatting() {
        assert_eq!(
            fmt_complex(Complex::new(-3f64.sqrt(), -1e-17)),
            "-1.732050807569+0.000000000000i"
        );
        assert_eq!(
            fmt_complex(Complex::new(-0.0, 0.5)),
            "0.000000000000+0.500000000000i"
        );
        assert_eq!(
            fmt_complex(Complex::new(1.0, -0.25)),
            "1.000000000000-0.250000000000i"
        );
    }

    #[test]
    fn bounded_conjugators() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..1000 {
            let p = random_conjugator(&mut rng, 10.0).unwrap();
            assert!(p.mat().max_norm() <= 10.0);
            assert!((p.mat().det() - ONE).norm() <= 1e-12);
        }
    }

    #[test]
    fn rejects_non_unimodular() {
        let m = Mat2::diag(c(2.0, 0.0), c(2.0, 0.0));
        assert!(matches!(
            UniMat::new(m, &tol()),
            Err(Error::NotUnimodular { .. })
        ));
    }

    fn seeded_unimodular() -> impl Strategy<Value = UniMat> {
        any::<u64>().prop_map(|s| random_unimodular(&mut ChaCha8Rng::seed_from_u64(s)).unwrap())
    }

    fn seeded_vec() -> impl Strategy<Value = Vec2> {
        (-3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64)
            .prop_map(|(a, b, c_, d)| Vec2::new(c(a, b), c(c_, d)))
    }

    proptest! {
        #[test]
        fn power_adds_exponents(m in seeded_unimodular(), e1 in 0u64..=32, e2 in 0u64..=32) {
            let lhs = m.mat().power(e1) * m.mat().power(e2);
            let rhs = m.mat().power(e1 + e2);
            let scale = 1.0f64.max(rhs.max_norm());
            prop_assert!(lhs.dist(&rhs) <= 1e-8 * scale);
        }

        #[test]
        fn eigen_reconstructs(m in seeded_unimodular()) {
            if let EigenResult::Distinct { lambda, v1, lambda_inv, v2 } = eigen(&m, &tol()) {
                let p = Mat2::from_columns(v1, v2);
                let p_inv = p.adjugate().scale(p.det().inv());
                let rebuilt = p * Mat2::diag(lambda, lambda_inv) * p_inv;
                prop_assert!(rebuilt.dist(m.mat()) <= 1e-8);
            } else {
                prop_assert!(false, "random matrix should have distinct eigenvalues");
            }
        }

        #[test]
        fn conjugation_preserves_trace(m in seeded_unimodular(), p in seeded_unimodular()) {
            let conj = m.mat().conjugate(&p);
            prop_assert!((conj.trace() - m.trace()).norm() <= 1e-10);
        }

        #[test]
        fn bracket_is_antisymmetric(v in seeded_vec(), w in seeded_vec()) {
            prop_assert_eq!(bracket(v, w), -bracket(w, v));
        }
    }
}
