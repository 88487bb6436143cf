//! Exhaustive enumeration of numerical semigroups with small Frobenius
//! number.
//!
//! Semigroups are nodes of the tree rooted at ℕ in which the children of `H`
//! are `H ∖ {x}` for the minimal generators `x > Fr(H)`. Each node is a
//! 128-bit membership mask (every integer from 128 on is a member), so the
//! Frobenius number is limited to [`MAX_SWEEP_FROBENIUS`].

use serde::Serialize;
use thiserror::Error;

use crate::semigroup::{NumericalSemigroup, SemigroupError};

pub const MAX_SWEEP_FROBENIUS: i64 = 63;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SweepError {
    #[error("Frobenius bound {0} is outside 0..={MAX_SWEEP_FROBENIUS}")]
    BoundOutOfRange(i64),
}

fn check_bound(max_frobenius: i64) -> Result<(), SweepError> {
    if (0..=MAX_SWEEP_FROBENIUS).contains(&max_frobenius) {
        Ok(())
    } else {
        Err(SweepError::BoundOutOfRange(max_frobenius))
    }
}

/// A numerical semigroup with `Fr ≤ 63`, as a membership mask of `0..128`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SmallSemigroup {
    bits: u128,
    frobenius: i64,
    multiplicity: i64,
}

impl SmallSemigroup {
    pub fn naturals() -> Self {
        SmallSemigroup {
            bits: u128::MAX,
            frobenius: -1,
            multiplicity: 1,
        }
    }

    /// Rebuilds from a membership mask; `None` if the mask is not closed
    /// under addition, misses 0, or has a gap at or above 64.
    pub fn from_bits(bits: u128) -> Option<Self> {
        if bits & 1 == 0 || (!bits) >> 64 != 0 {
            return None;
        }
        let frobenius = 127 - (!bits).leading_zeros() as i64;
        let multiplicity = (bits & !1).trailing_zeros() as i64;
        let s = SmallSemigroup {
            bits,
            frobenius,
            multiplicity,
        };
        let positive = bits & !1;
        let closed = (1..64).all(|y| bits >> y & 1 == 0 || (positive << y) & !bits == 0);
        closed.then_some(s)
    }

    pub fn from_semigroup(h: &NumericalSemigroup) -> Option<Self> {
        if h.frobenius() > MAX_SWEEP_FROBENIUS {
            return None;
        }
        let bits = (0..128u32)
            .filter(|&x| h.contains(x as i64))
            .fold(0u128, |acc, x| acc | 1 << x);
        Some(SmallSemigroup {
            bits,
            frobenius: h.frobenius(),
            multiplicity: h.multiplicity(),
        })
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn multiplicity(&self) -> i64 {
        self.multiplicity
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 128 || (x >= 0 && self.bits >> x & 1 == 1)
    }

    pub fn genus(&self) -> i64 {
        (!self.bits).count_ones() as i64
    }

    /// Elements below the Frobenius number.
    pub fn n_of_h(&self) -> i64 {
        self.frobenius + 1 - self.genus()
    }

    fn is_decomposable(&self, y: u32) -> bool {
        let pos = self.bits & !1;
        pos & (pos.reverse_bits() >> (127 - y)) != 0
    }

    /// `y` is a positive element that is not a sum of two positive elements.
    pub fn is_minimal_generator(&self, y: i64) -> bool {
        (1..128).contains(&y) && self.contains(y) && !self.is_decomposable(y as u32)
    }

    pub fn generators(&self) -> Vec<i64> {
        // minimal generators lie below conductor + multiplicity ≤ 128
        (1..=(self.frobenius + 1 + self.multiplicity).min(127))
            .filter(|&y| self.is_minimal_generator(y))
            .collect()
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators().len()
    }

    pub fn to_semigroup(&self) -> Result<NumericalSemigroup, SemigroupError> {
        NumericalSemigroup::from_generators(&self.generators())
    }

    /// Gaps `f` with `f + h` a member for every positive member `h`.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        if self.frobenius < 0 {
            return vec![-1];
        }
        let positive = self.bits & !1;
        (0..=self.frobenius)
            .filter(|&f| !self.contains(f) && (positive << f) & !self.bits == 0)
            .collect()
    }

    /// Trace of the canonical ideal, as a mask valid on `0..128 − Fr`:
    /// `x` is in it iff for some `f ∈ PF` every `x + f − f'` (`f' ∈ PF`)
    /// is a member.
    pub fn trace_mask(&self, pf: &[i64]) -> u128 {
        if self.frobenius < 0 {
            return u128::MAX;
        }
        let mut trace = 0u128;
        for &f in pf {
            let mut acc = u128::MAX;
            for &g in pf {
                let delta = f - g;
                acc &= if delta >= 0 {
                    self.bits >> delta
                } else {
                    self.bits << -delta
                };
            }
            trace |= acc;
        }
        trace & self.trace_window()
    }

    /// Positions where [`trace_mask`](Self::trace_mask) is exact.
    pub fn trace_window(&self) -> u128 {
        let valid = 128 - self.frobenius.max(0) as u32;
        if valid >= 128 {
            u128::MAX
        } else {
            (1u128 << valid) - 1
        }
    }

    /// `|H ∖ tr(H)|`, counted below the conductor.
    pub fn residue(&self) -> u32 {
        let pf = self.pseudo_frobenius();
        self.residue_with(&pf)
    }

    pub fn residue_with(&self, pf: &[i64]) -> u32 {
        let below = (1u128 << (self.frobenius + 1)) - 1;
        (self.bits & !self.trace_mask(pf) & below).count_ones()
    }

    /// Children in the tree: remove each minimal generator `x` with
    /// `Fr < x ≤ max_frobenius`.
    pub fn children(&self, max_frobenius: i64) -> impl Iterator<Item = SmallSemigroup> + '_ {
        ((self.frobenius + 1)..=max_frobenius).filter_map(move |y| {
            if !self.is_minimal_generator(y) {
                return None;
            }
            let bits = self.bits & !(1u128 << y);
            let multiplicity = if y == self.multiplicity {
                (bits & !1).trailing_zeros() as i64
            } else {
                self.multiplicity
            };
            Some(SmallSemigroup {
                bits,
                frobenius: y,
                multiplicity,
            })
        })
    }
}

/// Visits every semigroup below `root` in the tree (root included) with
/// `Fr ≤ max_frobenius`. Subtrees whose root fails `keep` are skipped.
pub fn walk_tree(
    root: SmallSemigroup,
    max_frobenius: i64,
    mut keep: impl FnMut(&SmallSemigroup) -> bool,
    mut visit: impl FnMut(&SmallSemigroup),
) {
    let mut stack = vec![root];
    while let Some(h) = stack.pop() {
        if !keep(&h) {
            continue;
        }
        visit(&h);
        stack.extend(h.children(max_frobenius));
    }
}

/// Every numerical semigroup with `Fr ≤ max_frobenius`, ℕ included.
pub fn for_each_semigroup(
    max_frobenius: i64,
    visit: impl FnMut(&SmallSemigroup),
) -> Result<(), SweepError> {
    check_bound(max_frobenius)?;
    walk_tree(SmallSemigroup::naturals(), max_frobenius, |_| true, visit);
    Ok(())
}

/// Roots of disjoint subtrees covering the tree, for splitting work: every
/// semigroup with `Fr ≤ max_frobenius` lies below exactly one root, and the
/// roots of `Fr < split_at` are single nodes.
pub fn subtree_roots(max_frobenius: i64, split_at: i64) -> Result<Vec<(SmallSemigroup, bool)>, SweepError> {
    check_bound(max_frobenius)?;
    let mut out = Vec::new();
    let mut stack = vec![SmallSemigroup::naturals()];
    while let Some(h) = stack.pop() {
        if h.frobenius < split_at.min(max_frobenius) {
            out.push((h, false));
            stack.extend(h.children(max_frobenius));
        } else {
            out.push((h, true));
        }
    }
    Ok(out)
}

/// Every semigroup of minimal multiplicity `m ≥ 2` with `Fr ≤ max_frobenius`.
///
/// These are exactly `{0} ∪ (m + T)` for a numerical semigroup `T` and
/// `m ∈ T ∖ {0, 1}`, with `Fr = m + Fr(T)` (or `m − 1` when `T = ℕ`). The
/// walk over `T` stops once `mult(T) + Fr(T)` exceeds the bound.
pub fn for_each_minimal_multiplicity(
    max_frobenius: i64,
    mut visit: impl FnMut(&SmallSemigroup),
) -> Result<(), SweepError> {
    check_bound(max_frobenius)?;
    walk_tree(
        SmallSemigroup::naturals(),
        max_frobenius,
        |t| has_minimal_multiplicity_lifts(t, max_frobenius),
        |t| minimal_multiplicity_lifts(t, max_frobenius, &mut visit),
    );
    Ok(())
}

/// Whether `T` or anything below it in the tree lifts to a semigroup of
/// minimal multiplicity with `Fr ≤ max_frobenius`.
pub fn has_minimal_multiplicity_lifts(t: &SmallSemigroup, max_frobenius: i64) -> bool {
    t.frobenius < 0 || t.multiplicity + t.frobenius <= max_frobenius
}

/// The semigroups `{0} ∪ (m + T)`, `m ∈ T`, `m ≥ 2`, with `Fr ≤ max_frobenius`.
pub fn minimal_multiplicity_lifts(
    t: &SmallSemigroup,
    max_frobenius: i64,
    mut visit: impl FnMut(&SmallSemigroup),
) {
    // Fr(H) = m + Fr(T), which is m − 1 for T = ℕ
    let top = (max_frobenius - t.frobenius.max(-1)).min(MAX_SWEEP_FROBENIUS + 1);
    for m in 2..=top {
        if !t.contains(m) {
            continue;
        }
        let frobenius = if t.frobenius < 0 { m - 1 } else { m + t.frobenius };
        if frobenius > max_frobenius {
            continue;
        }
        visit(&SmallSemigroup {
            bits: (t.bits << m) | 1,
            frobenius,
            multiplicity: m,
        });
    }
}

/// Both sides of the minimal-multiplicity equivalence for one semigroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinimalMultiplicityRecord {
    /// `res ≤ 1`, from the trace mask.
    pub nearly_gorenstein: bool,
    /// Nari pairing on the pseudo-Frobenius numbers.
    pub almost_symmetric: bool,
    /// `nᵢ + n_{e−i+1} = n₁ + n_e` on the minimal generators.
    pub generator_pairing: bool,
    /// `PF = {nᵢ − n₁ : i ≥ 2}`.
    pub pf_formula_ok: bool,
}

impl MinimalMultiplicityRecord {
    pub fn all_ok(&self) -> bool {
        self.nearly_gorenstein == self.almost_symmetric
            && self.almost_symmetric == self.generator_pairing
            && self.pf_formula_ok
    }
}

pub fn minimal_multiplicity_record(h: &SmallSemigroup) -> MinimalMultiplicityRecord {
    let pf = h.pseudo_frobenius();
    let n = h.generators();
    let e = n.len();
    let expected: Vec<i64> = n[1..].iter().map(|x| x - n[0]).collect();
    MinimalMultiplicityRecord {
        nearly_gorenstein: h.residue_with(&pf) <= 1,
        almost_symmetric: nari_almost_symmetric(&pf),
        generator_pairing: (2..=e.div_ceil(2)).all(|i| n[i - 1] + n[e - i] == n[0] + n[e - 1]),
        pf_formula_ok: pf == expected,
    }
}

/// Per-semigroup results of the trace checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceRecord {
    pub frobenius: i64,
    pub genus: i64,
    pub n_of_h: i64,
    pub residue: u32,
    pub symmetric: bool,
    /// `C_H ⊆ tr(H) ⊆ H`, and `tr(H) ⊆ M` unless symmetric.
    pub containments_ok: bool,
    /// `res(H) ≤ n(H)`.
    pub bound_n_ok: bool,
    /// `res(H) ≤ g(H) − n(H)`, an open question.
    pub question_gn_ok: bool,
}

pub fn trace_record(h: &SmallSemigroup) -> TraceRecord {
    let pf = h.pseudo_frobenius();
    let trace = h.trace_mask(&pf);
    let residue = h.residue_with(&pf);
    let symmetric = pf.len() == 1;
    let c = h.frobenius + 1;
    // the conductor ideal is generated by c, …, c + m − 1
    let conductor_ok = (c..c + h.multiplicity).all(|x| trace >> x & 1 == 1);
    let window = h.trace_window();
    let inside_h = trace & !h.bits & window == 0;
    let inside_m = symmetric || trace & 1 == 0;
    let genus = h.genus();
    let n_of_h = h.n_of_h();
    TraceRecord {
        frobenius: h.frobenius,
        genus,
        n_of_h,
        residue,
        symmetric,
        containments_ok: conductor_ok && inside_h && inside_m,
        bound_n_ok: residue as i64 <= n_of_h.max(0),
        question_gn_ok: residue as i64 <= genus - n_of_h,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EnumerateSummary {
    pub max_frobenius: i64,
    pub semigroups: u64,
    pub symmetric: u64,
    pub nearly_gorenstein: u64,
    pub max_residue: u32,
    /// `residue_histogram[r]`: semigroups with residue `r`.
    pub residue_histogram: Vec<u64>,
    pub containment_failures: u64,
    pub bound_n_failures: u64,
    pub question_gn_violations: u64,
    /// Generators of the first few violations of `res ≤ g − n`.
    pub question_gn_examples: Vec<Vec<i64>>,
}

impl EnumerateSummary {
    pub fn new(max_frobenius: i64) -> Self {
        EnumerateSummary {
            max_frobenius,
            ..Default::default()
        }
    }

    pub fn record(&mut self, h: &SmallSemigroup) {
        let r = trace_record(h);
        self.semigroups += 1;
        self.symmetric += r.symmetric as u64;
        self.nearly_gorenstein += (r.residue <= 1) as u64;
        self.max_residue = self.max_residue.max(r.residue);
        let slot = r.residue as usize;
        if self.residue_histogram.len() <= slot {
            self.residue_histogram.resize(slot + 1, 0);
        }
        self.residue_histogram[slot] += 1;
        self.containment_failures += (!r.containments_ok) as u64;
        self.bound_n_failures += (!r.bound_n_ok) as u64;
        if !r.question_gn_ok {
            self.question_gn_violations += 1;
            if self.question_gn_examples.len() < 10 {
                self.question_gn_examples.push(h.generators());
            }
        }
    }

    pub fn merge(&mut self, other: EnumerateSummary) {
        self.semigroups += other.semigroups;
        self.symmetric += other.symmetric;
        self.nearly_gorenstein += other.nearly_gorenstein;
        self.max_residue = self.max_residue.max(other.max_residue);
        if self.residue_histogram.len() < other.residue_histogram.len() {
            self.residue_histogram.resize(other.residue_histogram.len(), 0);
        }
        for (a, b) in self.residue_histogram.iter_mut().zip(other.residue_histogram) {
            *a += b;
        }
        self.containment_failures += other.containment_failures;
        self.bound_n_failures += other.bound_n_failures;
        self.question_gn_violations += other.question_gn_violations;
        let room = 10usize.saturating_sub(self.question_gn_examples.len());
        self.question_gn_examples
            .extend(other.question_gn_examples.into_iter().take(room));
    }
}

/// Trace statistics over every semigroup with `Fr ≤ max_frobenius`.
pub fn enumerate_summary(max_frobenius: i64) -> Result<EnumerateSummary, SweepError> {
    let mut s = EnumerateSummary::new(max_frobenius);
    for_each_semigroup(max_frobenius, |h| s.record(h))?;
    Ok(s)
}

/// Nari pairing `f_i + f_{τ−i} = Fr` on sorted pseudo-Frobenius numbers.
pub fn nari_almost_symmetric(pf: &[i64]) -> bool {
    let fr = *pf.last().unwrap_or(&-1);
    let tau = pf.len();
    (1..=tau / 2).all(|i| pf[i - 1] + pf[tau - 1 - i] == fr)
}
