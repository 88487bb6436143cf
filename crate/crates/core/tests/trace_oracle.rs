//! The trace computed three ways: relative-ideal bitsets, 128-bit masks,
//! and plain set arithmetic on a wide window.

use std::collections::BTreeSet;

use trace_toolkit::sweep::{for_each_semigroup, trace_record, SmallSemigroup};
use trace_toolkit::{canonical_trace, NumericalSemigroup, RelativeIdeal};

/// `Ω`, `H − Ω` and `Ω + (H − Ω)` as finite sets on `[lo, hi)`, with
/// membership past `hi` read as true.
struct SetOracle {
    trace: BTreeSet<i64>,
}

impl SetOracle {
    fn new(h: &NumericalSemigroup) -> Self {
        let c = h.conductor();
        let (lo, hi) = (-3 * c - 2, 3 * c + 2);
        let in_h = |x: i64| x >= hi || h.contains(x);
        let pf = h.pseudo_frobenius().to_vec();
        let omega: BTreeSet<i64> = (lo..hi)
            .filter(|&x| pf.iter().any(|&f| in_h(x + f)))
            .collect();
        // z + Ω ⊆ H; −Fr ∈ Ω forces z ≥ Fr, so members of Ω past the
        // window only land on members of H
        let anti: BTreeSet<i64> = (lo..hi)
            .filter(|&z| omega.iter().all(|&w| in_h(z + w)))
            .collect();
        let trace = omega
            .iter()
            .flat_map(|&a| anti.iter().map(move |&b| a + b))
            .filter(|&x| (lo..hi).contains(&x))
            .collect();
        SetOracle { trace }
    }
}

#[test]
fn three_trace_computations_agree() {
    let mut checked = 0;
    for_each_semigroup(20, |small| {
        let h = small.to_semigroup().unwrap();
        let oracle = SetOracle::new(&h);
        let ct = canonical_trace(&h);
        let c = h.conductor();
        let mask = small.trace_mask(&small.pseudo_frobenius());
        for x in -2 * c - 2..2 * c + 2 {
            let want = oracle.trace.contains(&x);
            assert_eq!(ct.trace.contains(x), want, "{h} at {x}");
            if (0..128).contains(&x) {
                assert_eq!(mask >> x & 1 == 1, want, "{h} mask at {x}");
            }
        }
        let residue = (0..c)
            .filter(|&x| h.contains(x) && !oracle.trace.contains(&x))
            .count();
        assert_eq!(ct.residue, residue, "{h}");
        assert_eq!(small.residue() as usize, residue, "{h}");
        checked += 1;
    })
    .unwrap();
    assert_eq!(checked, 3516);
}

#[test]
fn bitset_records_match_generic_reports() {
    for_each_semigroup(22, |small| {
        let h = small.to_semigroup().unwrap();
        let generic = trace_toolkit::ng_report(&h);
        let fast = trace_record(small);
        assert_eq!(fast.residue as i64, generic.residue, "{h}");
        assert_eq!(fast.containments_ok, generic.containment_ok, "{h}");
        assert_eq!(fast.question_gn_ok, generic.question_gn_ok, "{h}");
        assert_eq!(fast.n_of_h, generic.n_of_h);
        assert_eq!(fast.genus, generic.genus);
        assert_eq!(SmallSemigroup::from_semigroup(&h), Some(*small));
    })
    .unwrap();
}

#[test]
fn residue_zero_iff_symmetric() {
    for_each_semigroup(24, |small| {
        let h = small.to_semigroup().unwrap();
        let ct = canonical_trace(&h);
        assert_eq!(ct.residue == 0, h.classify().symmetric, "{h}");
        assert_eq!(ct.nearly_gorenstein, ct.residue <= 1, "{h}");
    })
    .unwrap();
}

#[test]
fn conductor_lies_in_every_trace() {
    // the maximal ideal, the conductor, and ideals generated by pairs
    for_each_semigroup(12, |small| {
        let h = small.to_semigroup().unwrap();
        let conductor = RelativeIdeal::conductor(&h);
        let mut ideals = vec![RelativeIdeal::maximal(&h), conductor.clone()];
        let elems: Vec<i64> = (1..=h.conductor() + 2).filter(|&x| h.contains(x)).collect();
        for (i, &x) in elems.iter().enumerate() {
            for &y in &elems[i..] {
                ideals.push(RelativeIdeal::from_generators(&h, &[x, y]).unwrap());
            }
        }
        for i in &ideals {
            let t = i.trace();
            assert!(conductor.is_subset(&t), "{h}: {i:?}");
            assert!(t.is_subset(&RelativeIdeal::whole(&h)), "{h}: {i:?}");
        }
    })
    .unwrap();
}

#[test]
fn trace_examples() {
    let h = NumericalSemigroup::from_generators(&[5, 6, 7]).unwrap();
    let ct = canonical_trace(&h);
    assert_eq!(ct.canonical.minimal_generators(), vec![-9, -8]);
    assert_eq!(ct.trace.minimal_generators(), vec![5, 6, 7]);
    assert_eq!(ct.residue, 1);

    let h = NumericalSemigroup::from_generators(&[3, 7, 8]).unwrap();
    let ct = canonical_trace(&h);
    assert_eq!(ct.trace, RelativeIdeal::conductor(&h));
    assert_eq!(ct.residue, 2);
}
