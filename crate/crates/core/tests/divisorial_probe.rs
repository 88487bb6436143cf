//! Probe: is the canonical ideal equal to its double dual? Reported, not
//! asserted.

use trace_toolkit::sweep::{for_each_semigroup, SmallSemigroup};
use trace_toolkit::{canonical_trace, NumericalSemigroup};

/// `H − I` for `I ⊆ ℕ` containing 0, both as masks on `0..128`.
fn colon(h: &SmallSemigroup, ideal: u128) -> u128 {
    let c = h.frobenius() + 1;
    (0..c)
        .filter(|&k| ideal >> k & 1 == 1)
        .fold(u128::MAX, |acc, k| acc & (h.bits() >> k))
}

/// Whether `Fr + Ω = ⋃ (Fr − f + H)` equals `H − (H − (Fr + Ω))` below the
/// conductor.
fn double_dual_holds(h: &SmallSemigroup) -> bool {
    if h.frobenius() < 0 {
        return true;
    }
    let fr = h.frobenius();
    let k = h
        .pseudo_frobenius()
        .iter()
        .fold(0u128, |acc, &f| acc | (h.bits() << (fr - f)));
    let again = colon(h, colon(h, k));
    let below = (1u128 << (fr + 1)) - 1;
    k & below == again & below
}

#[test]
fn bitset_probe_matches_relative_ideals() {
    for_each_semigroup(16, |small| {
        let h = small.to_semigroup().unwrap();
        let ct = canonical_trace(&h);
        let twice = ct.anticanonical.dual();
        assert_eq!(twice == ct.canonical, double_dual_holds(small), "{h}");
    })
    .unwrap();
}

#[test]
fn canonical_ideal_double_dual_probe() {
    let (mut total, mut differ, mut off_pattern) = (0u64, 0u64, 0u64);
    let mut examples = Vec::new();
    for_each_semigroup(40, |h| {
        total += 1;
        let holds = double_dual_holds(h);
        if !holds {
            differ += 1;
            if examples.len() < 5 {
                examples.push(h.generators());
            }
        }
        off_pattern += (holds != (h.pseudo_frobenius().len() == 1)) as u64;
    })
    .unwrap();
    println!("semigroups where equality and symmetry disagree: {off_pattern}");
    println!(
        "double dual of the canonical ideal: {differ} of {total} semigroups with Fr <= 40 differ"
    );
    for g in &examples {
        println!("  {}", NumericalSemigroup::from_generators(g).unwrap());
    }
}
