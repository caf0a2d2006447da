//! `dU/dt = −i𝔥(t)U`: RK4 integration and the second-order Dyson series.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::hamiltonian::SparseTimeOperator;
use crate::error::{Error, Result};
use crate::scalar::{cr, Cx, Real};

/// A time-dependent linear operator on `ℂⁿ`.
pub trait TimeDependentOperator<T: Real> {
    fn dim(&self) -> usize;
    /// `out = 𝔥(t) x`.
    fn apply(&self, t: T, x: &[Cx<T>], out: &mut [Cx<T>]);
}

impl<T: Real> TimeDependentOperator<T> for SparseTimeOperator<T> {
    fn dim(&self) -> usize {
        self.energies.len()
    }

    fn apply(&self, t: T, x: &[Cx<T>], out: &mut [Cx<T>]) {
        let phase = |e: T| {
            let a = e * t;
            Cx::new(a.cos(), a.sin())
        };
        let y: Vec<Cx<T>> = x.iter().zip(&self.energies).map(|(v, &e)| *v * phase(e).conj()).collect();
        out.iter_mut().for_each(|o| *o = cr(T::zero()));
        for &(r, c, v) in &self.entries {
            out[r] += v * y[c];
        }
        for (o, &e) in out.iter_mut().zip(&self.energies) {
            *o *= phase(e);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct EvolutionOperator<T: Real> {
    pub matrix: DMatrix<Cx<T>>,
    pub t0: T,
    pub t1: T,
}

impl<T: Real> EvolutionOperator<T> {
    /// `‖U†U − 𝟙‖`.
    pub fn unitarity_residual(&self) -> T {
        let n = self.matrix.ncols();
        (self.matrix.adjoint() * &self.matrix - DMatrix::identity(n, n)).norm()
    }
}

/// Classical RK4 for `ψ' = −i𝔥(t)ψ`.
pub fn evolve_state<T: Real, H: TimeDependentOperator<T> + ?Sized>(
    h: &H,
    psi0: &[Cx<T>],
    t0: T,
    t1: T,
    steps: usize,
) -> Result<Vec<Cx<T>>> {
    if steps == 0 {
        return Err(Error::NoSteps);
    }
    let n = h.dim();
    if psi0.len() != n {
        return Err(Error::DimensionMismatch(format!("state has {} components, operator {n}", psi0.len())));
    }
    let dt = (t1 - t0) / T::lit(steps as f64);
    let mi = Cx::new(T::zero(), -T::one());
    let half = T::lit(0.5);
    let mut psi = psi0.to_vec();
    let mut k = [vec![cr(T::zero()); n], vec![cr(T::zero()); n], vec![cr(T::zero()); n], vec![cr(T::zero()); n]];
    let mut tmp = vec![cr(T::zero()); n];
    let rhs = |t: T, x: &[Cx<T>], out: &mut [Cx<T>]| {
        h.apply(t, x, out);
        out.iter_mut().for_each(|o| *o *= mi);
    };
    for s in 0..steps {
        let t = t0 + dt * T::lit(s as f64);
        rhs(t, &psi, &mut k[0]);
        for i in 0..n {
            tmp[i] = psi[i] + k[0][i] * (dt * half);
        }
        rhs(t + dt * half, &tmp, &mut k[1]);
        for i in 0..n {
            tmp[i] = psi[i] + k[1][i] * (dt * half);
        }
        rhs(t + dt * half, &tmp, &mut k[2]);
        for i in 0..n {
            tmp[i] = psi[i] + k[2][i] * dt;
        }
        rhs(t + dt, &tmp, &mut k[3]);
        let sixth = dt / T::lit(6.0);
        for i in 0..n {
            psi[i] += (k[0][i] + (k[1][i] + k[2][i]) * T::lit(2.0) + k[3][i]) * sixth;
        }
    }
    Ok(psi)
}

/// `U(t₁, t₀)` column by column.
pub fn evolve<T: Real, H: TimeDependentOperator<T> + ?Sized>(
    h: &H,
    t0: T,
    t1: T,
    steps: usize,
) -> Result<EvolutionOperator<T>> {
    let n = h.dim();
    let mut matrix = DMatrix::zeros(n, n);
    for j in 0..n {
        let mut e = vec![cr(T::zero()); n];
        e[j] = cr(T::one());
        let col = evolve_state(h, &e, t0, t1, steps)?;
        for i in 0..n {
            matrix[(i, j)] = col[i];
        }
    }
    Ok(EvolutionOperator { matrix, t0, t1 })
}

/// `φ(x) = (e^{ix} − 1)/(ix) = ∫₀¹ e^{ixs} ds`.
pub fn phi<T: Real>(x: T) -> Cx<T> {
    if x.abs() < T::one() {
        let ix = Cx::new(T::zero(), x);
        let mut term = cr(T::one());
        let mut sum = term;
        for n in 1..24 {
            term = term * ix / T::lit((n + 1) as f64);
            sum += term;
        }
        sum
    } else {
        (Cx::new(x.cos(), x.sin()) - cr(T::one())) / Cx::new(T::zero(), x)
    }
}

/// `∫_{t₀}^{t₁} e^{iωt} dt`.
pub fn time_integral<T: Real>(omega: T, t0: T, t1: T) -> Cx<T> {
    let span = t1 - t0;
    let a = omega * t0;
    Cx::new(a.cos(), a.sin()) * phi(omega * span) * span
}

const GL_X: [f64; 8] = [
    -0.960_289_856_497_536_2,
    -0.796_666_477_413_626_7,
    -0.525_532_409_916_329,
    -0.183_434_642_495_649_8,
    0.183_434_642_495_649_8,
    0.525_532_409_916_329,
    0.796_666_477_413_626_7,
    0.960_289_856_497_536_2,
];
const GL_W: [f64; 8] = [
    0.101_228_536_290_376_26,
    0.222_381_034_453_374_47,
    0.313_706_645_877_887_3,
    0.362_683_783_378_362,
    0.362_683_783_378_362,
    0.313_706_645_877_887_3,
    0.222_381_034_453_374_47,
    0.101_228_536_290_376_26,
];

/// `∫₀¹ e^{ias} ∫₀ˢ e^{ibr} dr ds`.
fn nested_unit<T: Real>(a: T, b: T) -> Cx<T> {
    if b.abs() >= T::lit(0.5) {
        return (phi(a + b) - phi(a)) / Cx::new(T::zero(), b);
    }
    // s·φ(bs) is the inner integral; composite Gauss–Legendre on the outer one.
    let panels = ((a.abs() + b.abs()).to_f64_lossy() / 2.0).ceil() as usize + 1;
    let width = T::one() / T::lit(panels as f64);
    let mut sum = cr(T::zero());
    for p in 0..panels {
        let mid = width * (T::lit(p as f64) + T::lit(0.5));
        for (x, w) in GL_X.iter().zip(GL_W) {
            let s = mid + width * T::lit(0.5 * x);
            let e = Cx::new((a * s).cos(), (a * s).sin());
            sum += e * phi(b * s) * (s * T::lit(w) * width * T::lit(0.5));
        }
    }
    sum
}

/// `∫_{t₀}^{t₁} dt e^{iω_a t} ∫_{t₀}^{t} dt′ e^{iω_b t′}`.
pub fn nested_time_integral<T: Real>(omega_a: T, omega_b: T, t0: T, t1: T) -> Cx<T> {
    let span = t1 - t0;
    let a = (omega_a + omega_b) * t0;
    Cx::new(a.cos(), a.sin()) * nested_unit(omega_a * span, omega_b * span) * (span * span)
}

/// `𝟙 − i∫𝔥 + (−i)²∫∫_{t′<t} 𝔥(t)𝔥(t′)`, with the time integrals in closed form.
pub fn dyson_second_order<T: Real>(h: &SparseTimeOperator<T>, t0: T, t1: T) -> EvolutionOperator<T> {
    let n = h.dim();
    let e = &h.energies;
    let mut m = DMatrix::<Cx<T>>::identity(n, n);
    let mi = Cx::new(T::zero(), -T::one());
    let mut by_col: Vec<Vec<(usize, Cx<T>)>> = vec![Vec::new(); n];
    for &(r, c, v) in &h.entries {
        m[(r, c)] += mi * v * time_integral(e[r] - e[c], t0, t1);
        by_col[c].push((r, v));
    }
    // Second order: |j⟩ → |k⟩ → |i⟩.
    for j in 0..n {
        for &(k, v1) in &by_col[j] {
            let wb = e[k] - e[j];
            for &(i, v2) in &by_col[k] {
                let wa = e[i] - e[k];
                m[(i, j)] -= v2 * v1 * nested_time_integral(wa, wb, t0, t1);
            }
        }
    }
    EvolutionOperator { matrix: m, t0, t1 }
}
