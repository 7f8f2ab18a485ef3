use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::algebra::{CVector3, ComplexScalar, Paravector};

/// Probability of replacing a uniform draw with a structured corner case.
pub const CORNER_PROBABILITY: f64 = 0.1;

/// Deterministic per-trial random source.
///
/// Trial `t` of a campaign with seed `s` uses ChaCha8 (8 rounds) keyed by
/// `rand_core`'s `seed_from_u64(s)` and switched to stream `t`. Reals are
/// taken from the top 53 bits of `next_u64` as `(x >> 11) · 2⁻⁵³`, so any
/// implementation of ChaCha8 reproduces the same draws.
pub struct TrialRng {
    rng: ChaCha8Rng,
}

impl TrialRng {
    pub fn for_trial(seed: u64, trial: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        TrialRng { rng }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }

    /// A paravector component, uniform in `[-2, 2)`.
    pub fn component(&mut self) -> f64 {
        self.uniform(-2.0, 2.0)
    }

    pub fn complex(&mut self) -> ComplexScalar {
        ComplexScalar::new(self.component(), self.component())
    }

    pub fn real3(&mut self) -> [f64; 3] {
        [self.component(), self.component(), self.component()]
    }

    pub fn cvector(&mut self) -> CVector3 {
        CVector3::from_parts(self.real3(), self.real3())
    }

    /// All eight components uniform in `[-2, 2)`.
    pub fn uniform_paravector(&mut self) -> Paravector {
        let c: [f64; 8] = std::array::from_fn(|_| self.component());
        Paravector::from_components(c).expect("finite by construction")
    }

    /// Uniform paravector, replaced by a corner case with probability
    /// [`CORNER_PROBABILITY`].
    pub fn paravector(&mut self) -> Paravector {
        if self.unit() < CORNER_PROBABILITY {
            let corners = corner_corpus();
            corners[(self.next_u64() % corners.len() as u64) as usize]
        } else {
            self.uniform_paravector()
        }
    }

    /// A pair that is a scaled pair `(a, λa)` with probability
    /// [`CORNER_PROBABILITY`].
    pub fn pair(&mut self) -> (Paravector, Paravector) {
        let a = self.paravector();
        if self.unit() < CORNER_PROBABILITY {
            let k = self.complex();
            (a, a.scale(k))
        } else {
            (a, self.paravector())
        }
    }

    /// Real unit vector by rejection sampling in the unit ball.
    pub fn unit_vector(&mut self) -> [f64; 3] {
        loop {
            let v = [self.uniform(-1.0, 1.0), self.uniform(-1.0, 1.0), self.uniform(-1.0, 1.0)];
            let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            if (0.1..=1.0).contains(&n) {
                return [v[0] / n, v[1] / n, v[2] / n];
            }
        }
    }

    /// Orthogonal paravector `±B·R`: a real boost `{cosh η | m sinh η}`
    /// times a spatial rotation `{cos θ | i n sin θ}`.
    pub fn orthogonal(&mut self) -> Paravector {
        let m = self.unit_vector();
        let eta = self.uniform(-1.0, 1.0);
        let n = self.unit_vector();
        let theta = self.uniform(-std::f64::consts::PI, std::f64::consts::PI);
        let boost = Paravector::raw(
            ComplexScalar::new(eta.cosh(), 0.0),
            CVector3::real([m[0] * eta.sinh(), m[1] * eta.sinh(), m[2] * eta.sinh()]),
        );
        let rotation = Paravector::raw(
            ComplexScalar::new(theta.cos(), 0.0),
            CVector3::imaginary([n[0] * theta.sin(), n[1] * theta.sin(), n[2] * theta.sin()]),
        );
        let l = boost * rotation;
        if self.unit() < 0.5 {
            -l
        } else {
            l
        }
    }

    /// Proper paravector: positive real multiple of an orthogonal one.
    pub fn proper(&mut self) -> Paravector {
        let s = self.uniform(0.25, 2.0);
        self.orthogonal() * s
    }

    /// Special paravector `{a | ic}` with real `a` and `c`.
    pub fn special(&mut self) -> Paravector {
        Paravector::raw(ComplexScalar::new(self.component(), 0.0), CVector3::imaginary(self.real3()))
    }

    /// Singular paravector `{|x| | x}` on the light cone.
    pub fn sphere_point(&mut self) -> Paravector {
        let x = self.real3();
        let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
        Paravector::raw(ComplexScalar::new(r, 0.0), CVector3::real(x))
    }
}

/// Structured inputs that uniform sampling essentially never produces.
pub fn corner_corpus() -> Vec<Paravector> {
    let c = |v: [f64; 8]| Paravector::from_components(v).expect("finite");
    let t: f64 = 0.3;
    let theta: f64 = 0.7;
    vec![
        Paravector::ZERO,
        Paravector::ONE,
        -Paravector::ONE,
        c([0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]),
        // singular {1|e1}
        c([1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]),
        // singular {i|ie1}
        c([0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0]),
        // isotropic vector e1 + ie2
        c([0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0]),
        // proper {2|e1}
        c([2.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]),
        c([1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]),
        // special
        c([0.5, 0.0, 0.0, 0.0, 0.0, 0.3, -0.2, 1.0]),
        // unitar
        c([t.cos(), 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, t.sin()]),
        c([theta.cos(), theta.sin(), 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]),
    ]
}
