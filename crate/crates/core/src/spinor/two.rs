//! Two-spinors, their duals and conjugates, and the ε forms.
//!
//! Components are always taken in the fixed basis `(ζ_A)` of `U`, its dual
//! basis `(ζ^A)` of `U*`, and the conjugate bases of `Ū` and `Ū*`.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::scalar::{cr, Cx, Real, Scale};

macro_rules! two_component {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
        #[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
        pub struct $name<T: Real> {
            pub c: [Cx<T>; 2],
            #[serde(default)]
            pub scale: Scale,
        }

        impl<T: Real> $name<T> {
            pub fn new(c0: Cx<T>, c1: Cx<T>) -> Self {
                Self { c: [c0, c1], scale: Scale::ZERO }
            }

            pub fn with_scale(mut self, scale: Scale) -> Self {
                self.scale = scale;
                self
            }

            pub fn zero() -> Self {
                Self::new(Cx::new(T::zero(), T::zero()), Cx::new(T::zero(), T::zero()))
            }

            /// `e_index`, the `index`-th basis element (0-based).
            pub fn basis(index: usize) -> Self {
                let mut s = Self::zero();
                s.c[index] = cr(T::one());
                s
            }

            pub fn norm_sqr(&self) -> T {
                self.c[0].norm_sqr() + self.c[1].norm_sqr()
            }

            pub fn is_finite(&self) -> bool {
                self.c.iter().all(|z| z.re.is_finite() && z.im.is_finite())
            }

            pub fn scaled(&self, z: Cx<T>) -> Self {
                Self { c: [self.c[0] * z, self.c[1] * z], scale: self.scale }
            }
        }

        impl<T: Real> Add for $name<T> {
            type Output = Self;
            fn add(self, rhs: Self) -> Self {
                Self { c: [self.c[0] + rhs.c[0], self.c[1] + rhs.c[1]], scale: self.scale }
            }
        }

        impl<T: Real> Sub for $name<T> {
            type Output = Self;
            fn sub(self, rhs: Self) -> Self {
                Self { c: [self.c[0] - rhs.c[0], self.c[1] - rhs.c[1]], scale: self.scale }
            }
        }

        impl<T: Real> Neg for $name<T> {
            type Output = Self;
            fn neg(self) -> Self {
                Self { c: [-self.c[0], -self.c[1]], scale: self.scale }
            }
        }

        impl<T: Real> Mul<Cx<T>> for $name<T> {
            type Output = Self;
            fn mul(self, z: Cx<T>) -> Self {
                self.scaled(z)
            }
        }
    };
}

two_component!(
    /// Element `u = u^A ζ_A` of the two-spinor space `U`.
    TwoSpinor
);
two_component!(
    /// Element `λ = λ_A ζ^A` of the dual space `U*`.
    CoSpinor
);
two_component!(
    /// Element `ū` of the conjugate space `Ū`.
    ConjSpinor
);
two_component!(
    /// Element `λ̄` of `Ū*`.
    ConjCoSpinor
);

impl<T: Real> TwoSpinor<T> {
    pub fn conj(&self) -> ConjSpinor<T> {
        ConjSpinor { c: [self.c[0].conj(), self.c[1].conj()], scale: self.scale }
    }
}

impl<T: Real> ConjSpinor<T> {
    pub fn conj(&self) -> TwoSpinor<T> {
        TwoSpinor { c: [self.c[0].conj(), self.c[1].conj()], scale: self.scale }
    }
}

impl<T: Real> CoSpinor<T> {
    pub fn conj(&self) -> ConjCoSpinor<T> {
        ConjCoSpinor { c: [self.c[0].conj(), self.c[1].conj()], scale: self.scale }
    }

    /// Contraction `⟨λ, u⟩ = λ_A u^A`.
    pub fn pair(&self, u: &TwoSpinor<T>) -> Cx<T> {
        self.c[0] * u.c[0] + self.c[1] * u.c[1]
    }
}

impl<T: Real> ConjCoSpinor<T> {
    pub fn conj(&self) -> CoSpinor<T> {
        CoSpinor { c: [self.c[0].conj(), self.c[1].conj()], scale: self.scale }
    }

    /// Contraction `⟨λ̄, s̄⟩`.
    pub fn pair(&self, s: &ConjSpinor<T>) -> Cx<T> {
        self.c[0] * s.c[0] + self.c[1] * s.c[1]
    }
}

/// A normalised symplectic form `ε ∈ ∧²U*`, determined up to a phase.
///
/// Components are `ε_AB = phase · s_AB` with `s_12 = 1 = −s_21`.
///
/// Index convention: `λ^# ∈ U` is the unique spinor with
/// `ε(x, λ^#) = ⟨λ, x⟩` for all `x`. Then `ε(λ^#, ·) = −λ`, so
/// `sharp ∘ flat = flat ∘ sharp = −id`. All contractions used by the
/// library involve `#`/`♭` in conjugate pairs, so results do not depend on
/// this sign.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct EpsilonForm<T: Real> {
    pub phase: Cx<T>,
}

impl<T: Real> Default for EpsilonForm<T> {
    fn default() -> Self {
        Self { phase: cr(T::one()) }
    }
}

impl<T: Real> EpsilonForm<T> {
    /// The ε form with phase `e^{iθ}`.
    pub fn new(theta: T) -> Self {
        Self { phase: Cx::new(theta.cos(), theta.sin()) }
    }

    /// Component `ε_AB` (0-based indices).
    pub fn component(&self, a: usize, b: usize) -> Cx<T> {
        match (a, b) {
            (0, 1) => self.phase,
            (1, 0) => -self.phase,
            _ => cr(T::zero()),
        }
    }

    /// Component of the conjugate form `ε̄_ȦḂ`.
    pub fn conj_component(&self, a: usize, b: usize) -> Cx<T> {
        self.component(a, b).conj()
    }

    /// `ε(u, r)`.
    pub fn eval(&self, u: &TwoSpinor<T>, r: &TwoSpinor<T>) -> Cx<T> {
        self.phase * (u.c[0] * r.c[1] - u.c[1] * r.c[0])
    }

    /// `ε̄(v̄, s̄)`.
    pub fn eval_conj(&self, v: &ConjSpinor<T>, s: &ConjSpinor<T>) -> Cx<T> {
        self.phase.conj() * (v.c[0] * s.c[1] - v.c[1] * s.c[0])
    }

    /// `u^♭ = ε(u, ·)`.
    pub fn flat(&self, u: &TwoSpinor<T>) -> CoSpinor<T> {
        // (u♭)_B = ε_AB u^A
        CoSpinor { c: [-self.phase * u.c[1], self.phase * u.c[0]], scale: u.scale }
    }

    /// `λ^#`, defined by `ε(x, λ^#) = ⟨λ, x⟩`.
    pub fn sharp(&self, lam: &CoSpinor<T>) -> TwoSpinor<T> {
        let inv = self.phase.inv();
        TwoSpinor { c: [-lam.c[1] * inv, lam.c[0] * inv], scale: lam.scale }
    }

    /// `s̄^♭ = ε̄(s̄, ·)`.
    pub fn flat_conj(&self, s: &ConjSpinor<T>) -> ConjCoSpinor<T> {
        self.flat(&s.conj()).conj()
    }

    /// `λ̄^#`, the conjugate of `λ^#`.
    pub fn sharp_conj(&self, lam: &ConjCoSpinor<T>) -> ConjSpinor<T> {
        self.sharp(&lam.conj()).conj()
    }
}
