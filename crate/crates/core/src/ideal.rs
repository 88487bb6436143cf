//! Relative ideals of a numerical semigroup and the canonical trace.
//!
//! A relative ideal `I` is stored as its minimum `base` together with a
//! membership window over `[base, base + c)`, where `c` is the conductor
//! number of the parent semigroup. Everything from `base + c` on belongs to
//! `I`: if `x - base ≥ c` then `x - base ∈ H`, so `x ∈ base + H ⊆ I`.
//! With that representation sums and duals are finite bitwise operations.

use serde::Serialize;
use thiserror::Error;

use crate::bits::Bits;
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("an ideal needs at least one generator")]
    EmptyGenerators,
    #[error("ideals belong to different semigroups")]
    ParentMismatch,
}

#[derive(Clone)]
pub struct RelativeIdeal<'a> {
    parent: &'a NumericalSemigroup,
    base: i64,
    window: Bits,
}

impl std::fmt::Debug for RelativeIdeal<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RelativeIdeal")
            .field("parent", &self.parent.to_string())
            .field("generators", &self.minimal_generators())
            .finish()
    }
}

impl PartialEq for RelativeIdeal<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.base == other.base && self.window == other.window
    }
}

impl Eq for RelativeIdeal<'_> {}

impl<'a> RelativeIdeal<'a> {
    /// `∪ (g + H)` over the given generators.
    pub fn from_generators(h: &'a NumericalSemigroup, gens: &[i64]) -> Result<Self, IdealError> {
        let base = *gens.iter().min().ok_or(IdealError::EmptyGenerators)?;
        let c = h.conductor() as usize;
        let mut window = Bits::zeros(c);
        // base + t ∈ g + H  <=>  t - (g - base) ∈ H, and t - (g - base) < c
        for &g in gens {
            window.or_shifted_up(h.members(), g - base);
        }
        Ok(RelativeIdeal {
            parent: h,
            base,
            window,
        })
    }

    /// The semigroup itself, `0 + H`.
    pub fn whole(h: &'a NumericalSemigroup) -> Self {
        Self::from_generators(h, &[0]).expect("nonempty")
    }

    /// `M = H ∖ {0}`.
    pub fn maximal(h: &'a NumericalSemigroup) -> Self {
        Self::from_generators(h, h.generators()).expect("nonempty")
    }

    /// The conductor ideal `C_H = {x ∈ H : x ≥ c(H)}`.
    pub fn conductor(h: &'a NumericalSemigroup) -> Self {
        let c = h.conductor();
        RelativeIdeal {
            parent: h,
            base: c,
            window: Bits::ones(c as usize),
        }
    }

    /// The canonical ideal `Ω_H`, generated by the negated pseudo-Frobenius
    /// numbers.
    pub fn canonical(h: &'a NumericalSemigroup) -> Self {
        let gens: Vec<i64> = h.pseudo_frobenius().iter().map(|f| -f).collect();
        Self::from_generators(h, &gens).expect("pseudo-Frobenius set is never empty")
    }

    pub fn parent(&self) -> &'a NumericalSemigroup {
        self.parent
    }

    /// The least element.
    pub fn min(&self) -> i64 {
        self.base
    }

    pub fn contains(&self, x: i64) -> bool {
        let t = x - self.base;
        t >= 0 && (t as usize >= self.window.len() || self.window.get(t as usize))
    }

    /// `I + k`.
    pub fn translate(&self, k: i64) -> Self {
        RelativeIdeal {
            parent: self.parent,
            base: self.base + k,
            window: self.window.clone(),
        }
    }

    /// Elements of `I` that are not in `I + M`, increasing. All of them lie
    /// below `min + c`.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let mut reducible = Bits::zeros(self.window.len());
        for &n in self.parent.generators() {
            reducible.or_shifted_up(&self.window, n);
        }
        let mut gens = self.window.clone();
        gens.and_not(&reducible);
        gens.iter_ones().map(|t| self.base + t as i64).collect()
    }

    /// `H − I = {z : z + I ⊆ H}`.
    ///
    /// Only the minimal generators of `I` need checking. The result lies in
    /// `[-min, ∞)` and contains `[c - min, ∞)`, so one window of length `c`
    /// starting at `-min` decides everything.
    pub fn dual(&self) -> Self {
        let h = self.parent;
        let c = self.window.len();
        let mut w = Bits::ones(c);
        for g in self.minimal_generators() {
            // z = -base + t; z + g = t + (g - base), a member once it reaches c
            w.and_shifted_down_fill(h.members(), g - self.base);
        }
        match w.first_one() {
            Some(f) => RelativeIdeal {
                parent: h,
                base: -self.base + f as i64,
                window: w.shifted_down_fill(f),
            },
            None => RelativeIdeal {
                parent: h,
                base: c as i64 - self.base,
                window: Bits::ones(c),
            },
        }
    }

    /// `I + J = {i + j}`.
    pub fn add(&self, other: &RelativeIdeal<'a>) -> Result<Self, IdealError> {
        if self.parent != other.parent {
            return Err(IdealError::ParentMismatch);
        }
        let mut window = Bits::zeros(self.window.len());
        // x ∈ I + J  <=>  x - g ∈ J for some minimal generator g of I
        for g in self.minimal_generators() {
            window.or_shifted_up(&other.window, g - self.base);
        }
        Ok(RelativeIdeal {
            parent: self.parent,
            base: self.base + other.base,
            window,
        })
    }

    /// `tr(I) = I + (H − I)`. Always sits between the conductor ideal and `H`.
    pub fn trace(&self) -> Self {
        let t = self.add(&self.dual()).expect("same parent");
        assert!(
            RelativeIdeal::conductor(self.parent).is_subset(&t)
                && t.is_subset(&RelativeIdeal::whole(self.parent)),
            "trace of {self:?} escapes [C_H, H]"
        );
        t
    }

    pub fn is_subset(&self, other: &RelativeIdeal<'_>) -> bool {
        let c = self.window.len() as i64;
        let end = self.base.max(other.base) + c;
        (self.base..end).all(|x| !self.contains(x) || other.contains(x))
    }

    /// Membership of `[0, c)` as a bitset; only meaningful when `min ≥ 0`.
    fn bits_from_zero(&self) -> Bits {
        let mut b = Bits::zeros(self.window.len());
        b.or_shifted_up(&self.window, self.base);
        b
    }

    /// Number of elements of `H` outside `I`, for an ideal `I ⊆ H`.
    pub fn colength(&self) -> usize {
        debug_assert!(self.base >= 0);
        let mut missing = self.parent.members().clone();
        missing.and_not(&self.bits_from_zero());
        missing.count_ones()
    }
}

/// Canonical ideal, its dual and their sum for one semigroup.
#[derive(Clone, Debug)]
pub struct CanonicalTrace<'a> {
    pub canonical: RelativeIdeal<'a>,
    pub anticanonical: RelativeIdeal<'a>,
    pub trace: RelativeIdeal<'a>,
    /// `|H ∖ tr(H)|`.
    pub residue: usize,
    /// `M ⊆ tr(H)`.
    pub nearly_gorenstein: bool,
}

pub fn canonical_trace(h: &NumericalSemigroup) -> CanonicalTrace<'_> {
    let canonical = RelativeIdeal::canonical(h);
    let anticanonical = canonical.dual();
    let trace = canonical.add(&anticanonical).expect("same parent");
    // the conductor ideal sits inside the trace, so only [0, c) matters
    let residue = trace.colength();
    let nearly_gorenstein = h.generators().iter().all(|&g| trace.contains(g));
    CanonicalTrace {
        canonical,
        anticanonical,
        trace,
        residue,
        nearly_gorenstein,
    }
}

/// Residue and the bounds around it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NgReport {
    pub residue: i64,
    pub n_of_h: i64,
    pub genus: i64,
    pub nearly_gorenstein: bool,
    /// `res ≤ n(H)`; always holds.
    pub bound_n_ok: bool,
    /// `res = n(H)`, which happens exactly when the trace is the conductor ideal.
    pub trace_is_conductor: bool,
    /// `res ≤ g(H) − n(H)`; an open question, reported but never enforced.
    pub question_gn_ok: bool,
    /// `C_H ⊆ tr(H) ⊆ H`, and `tr(H) ⊆ M` when `H` is not symmetric.
    pub containment_ok: bool,
}

pub fn ng_report(h: &NumericalSemigroup) -> NgReport {
    let ct = canonical_trace(h);
    let inv = h.invariants();
    let residue = ct.residue as i64;
    let conductor = RelativeIdeal::conductor(h);
    let whole = RelativeIdeal::whole(h);
    let mut containment_ok = conductor.is_subset(&ct.trace) && ct.trace.is_subset(&whole);
    if !h.classify().symmetric {
        containment_ok &= ct.trace.is_subset(&RelativeIdeal::maximal(h));
    }
    NgReport {
        residue,
        n_of_h: inv.n_of_h,
        genus: inv.genus,
        nearly_gorenstein: ct.nearly_gorenstein,
        bound_n_ok: residue <= inv.n_of_h,
        trace_is_conductor: ct.trace == conductor,
        question_gn_ok: residue <= inv.genus - inv.n_of_h,
        containment_ok,
    }
}
