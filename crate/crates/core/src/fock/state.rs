//! Occupation-number configurations and ladder operators.
//!
//! Modes carry a global index; fermionic signs follow the canonical mode
//! order, i.e. `|…⟩ = (a†_{m₁})^{n₁} (a†_{m₂})^{n₂} ⋯ |0⟩` with `m₁ < m₂ < ⋯`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::scalar::{Cx, Real};

pub type ModeIndex = u32;

/// Tells the ladder algebra which modes are fermionic.
pub trait Statistics {
    fn is_fermion(&self, mode: ModeIndex) -> bool;
}

impl<F: Fn(ModeIndex) -> bool> Statistics for F {
    fn is_fermion(&self, mode: ModeIndex) -> bool {
        self(mode)
    }
}

/// Sorted list of occupied modes with their counts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FockConfig(pub Vec<(ModeIndex, u32)>);

impl FockConfig {
    pub fn vacuum() -> Self {
        Self(Vec::new())
    }

    /// Configuration from a list of modes (repeats allowed), built by
    /// creation in canonical order; returns `None` for a doubly occupied
    /// fermionic mode.
    pub fn from_modes(modes: &[ModeIndex], stats: &impl Statistics) -> Option<Self> {
        let mut counts: BTreeMap<ModeIndex, u32> = BTreeMap::new();
        for &m in modes {
            *counts.entry(m).or_default() += 1;
        }
        if counts.iter().any(|(&m, &c)| c > 1 && stats.is_fermion(m)) {
            return None;
        }
        Some(Self(counts.into_iter().collect()))
    }

    pub fn count(&self, mode: ModeIndex) -> u32 {
        self.0.binary_search_by_key(&mode, |e| e.0).map(|i| self.0[i].1).unwrap_or(0)
    }

    pub fn particles(&self) -> usize {
        self.0.iter().map(|e| e.1 as usize).sum()
    }

    fn fermions_before(&self, mode: ModeIndex, stats: &impl Statistics) -> u32 {
        self.0.iter().take_while(|e| e.0 < mode).filter(|e| stats.is_fermion(e.0)).map(|e| e.1).sum()
    }

    fn sign(&self, mode: ModeIndex, stats: &impl Statistics) -> f64 {
        if stats.is_fermion(mode) && self.fermions_before(mode, stats) % 2 == 1 {
            -1.0
        } else {
            1.0
        }
    }

    /// `a†_m |self⟩ = factor |result⟩`.
    pub fn create(&self, mode: ModeIndex, stats: &impl Statistics) -> Option<(Self, f64)> {
        let n = self.count(mode);
        if n > 0 && stats.is_fermion(mode) {
            return None;
        }
        let sign = self.sign(mode, stats);
        let mut out = self.0.clone();
        match out.binary_search_by_key(&mode, |e| e.0) {
            Ok(i) => out[i].1 += 1,
            Err(i) => out.insert(i, (mode, 1)),
        }
        Some((Self(out), sign * f64::from(n + 1).sqrt()))
    }

    /// `a_m |self⟩ = factor |result⟩`.
    pub fn annihilate(&self, mode: ModeIndex, stats: &impl Statistics) -> Option<(Self, f64)> {
        let i = self.0.binary_search_by_key(&mode, |e| e.0).ok()?;
        let n = self.0[i].1;
        let sign = self.sign(mode, stats);
        let mut out = self.0.clone();
        if n == 1 {
            out.remove(i);
        } else {
            out[i].1 -= 1;
        }
        Some((Self(out), sign * f64::from(n).sqrt()))
    }
}

/// A ladder operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ladder {
    Create(ModeIndex),
    Annihilate(ModeIndex),
}

/// Applies an operator string (leftmost acts last) to a configuration.
pub fn apply_string(ops: &[Ladder], config: &FockConfig, stats: &impl Statistics) -> Option<(FockConfig, f64)> {
    let mut cur = config.clone();
    let mut factor = 1.0;
    for op in ops.iter().rev() {
        let (next, f) = match *op {
            Ladder::Create(m) => cur.create(m, stats)?,
            Ladder::Annihilate(m) => cur.annihilate(m, stats)?,
        };
        cur = next;
        factor *= f;
    }
    Some((cur, factor))
}

/// Finite superposition of configurations.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct FockState<T: Real> {
    pub amplitudes: BTreeMap<FockConfig, Cx<T>>,
}

impl<T: Real> FockState<T> {
    pub fn vacuum() -> Self {
        Self::basis(FockConfig::vacuum())
    }

    pub fn basis(config: FockConfig) -> Self {
        let mut amplitudes = BTreeMap::new();
        amplitudes.insert(config, Cx::new(T::one(), T::zero()));
        Self { amplitudes }
    }

    pub fn add(&mut self, config: FockConfig, amp: Cx<T>) {
        *self.amplitudes.entry(config).or_insert_with(|| Cx::new(T::zero(), T::zero())) += amp;
    }

    pub fn get(&self, config: &FockConfig) -> Cx<T> {
        self.amplitudes.get(config).copied().unwrap_or_else(|| Cx::new(T::zero(), T::zero()))
    }

    pub fn norm_sqr(&self) -> T {
        self.amplitudes.values().map(|a| a.norm_sqr()).fold(T::zero(), |x, y| x + y)
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Cx<T> {
        self.amplitudes.iter().map(|(c, a)| a.conj() * other.get(c)).fold(Cx::new(T::zero(), T::zero()), |x, y| x + y)
    }

    pub fn apply(&self, op: Ladder, stats: &impl Statistics) -> Self {
        let mut out = Self::default();
        for (c, a) in &self.amplitudes {
            if let Some((next, f)) = apply_string(&[op], c, stats) {
                out.add(next, *a * T::lit(f));
            }
        }
        out
    }

    /// Drops exact zeros left by cancellations.
    pub fn prune(mut self) -> Self {
        self.amplitudes.retain(|_, a| a.re != T::zero() || a.im != T::zero());
        self
    }
}
