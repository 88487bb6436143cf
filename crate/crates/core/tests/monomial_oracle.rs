//! Canonical and anti-canonical generators of squarefree Veronese algebras
//! and Segre products, recomputed by searching boxes of exponent vectors.

use std::collections::BTreeSet;

use trace_toolkit::monomial::{p_set, squarefree_vectors, SegreMonomial};
use trace_toolkit::{segre_trace, ExponentVector, SqVeronese};

/// Nonincreasing integer vectors of length `n` with entries in `lo..=hi`.
fn sorted_box(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn go(n: usize, lo: i64, hi: i64, p: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if p.len() == n {
            out.push(p.clone());
            return;
        }
        let top = p.last().copied().unwrap_or(hi);
        for v in (lo..=top).rev() {
            p.push(v);
            go(n, lo, hi, p, out);
            p.pop();
        }
    }
    let mut out = Vec::new();
    go(n, lo, hi, &mut Vec::new(), &mut out);
    out
}

fn in_algebra(v: &[i64], d: i64) -> bool {
    let s: i64 = v.iter().sum();
    v.iter().all(|&a| a >= 0) && s % d == 0 && v.iter().all(|&a| d * a <= s)
}

fn in_interior(v: &[i64], d: i64) -> bool {
    let s: i64 = v.iter().sum();
    s % d == 0 && v.iter().all(|&a| a >= 1 && d * a < s)
}

fn sorted_desc(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn to_i64(e: &ExponentVector) -> Vec<i64> {
    e.entries().iter().map(|&x| x as i64).collect()
}

/// Sorted representatives of the minimal interior points, entries ≤ `n`.
fn brute_omega(n: usize, d: usize) -> BTreeSet<Vec<i64>> {
    let gens: Vec<Vec<i64>> = squarefree_vectors(n, d).iter().map(to_i64).collect();
    sorted_box(n, 1, n as i64)
        .into_iter()
        .filter(|v| in_interior(v, d as i64))
        .filter(|v| {
            !gens.iter().any(|w| {
                let r: Vec<i64> = v.iter().zip(w).map(|(a, b)| a - b).collect();
                in_interior(&r, d as i64)
            })
        })
        .collect()
}

#[test]
fn omega_generators_match_brute_force() {
    for n in 4..=8 {
        for d in 2..=n / 2 {
            let r = SqVeronese::new(n, d).unwrap();
            let og = r.omega_generators().unwrap();
            let got: BTreeSet<Vec<i64>> = og
                .generators
                .iter()
                .map(|g| sorted_desc(to_i64(g)))
                .collect();
            let want = brute_omega(n, d);
            assert_eq!(got, want, "n={n} d={d}");
            for w in &want {
                assert!(w[0] < n as i64, "box too small for n={n} d={d}");
            }
            // each orbit appears with all its permutations
            let orbit_total: usize = want
                .iter()
                .map(|w| {
                    ExponentVector::new(w.iter().map(|&x| x as u32).collect())
                        .permutations()
                        .count()
                })
                .sum();
            assert_eq!(og.generators.len(), orbit_total);
            assert!(og.pre_prune >= og.generators.len());
        }
    }
}

/// Sorted minimal Laurent vectors `v` with `v + ω ⊆ R`, entries in
/// `-1..=top`. Returned as numerators `v + (1,…,1)`.
fn brute_anticanonical(n: usize, d: usize, top: i64) -> BTreeSet<Vec<i64>> {
    let omega: Vec<Vec<i64>> = SqVeronese::new(n, d)
        .unwrap()
        .omega_generators()
        .unwrap()
        .generators
        .iter()
        .map(to_i64)
        .collect();
    let member = |v: &[i64]| {
        omega.iter().all(|g| {
            let s: Vec<i64> = v.iter().zip(g).map(|(a, b)| a + b).collect();
            in_algebra(&s, d as i64)
        })
    };
    let gens: Vec<Vec<i64>> = squarefree_vectors(n, d).iter().map(to_i64).collect();
    sorted_box(n, -1, top)
        .into_iter()
        .filter(|v| member(v))
        .filter(|v| {
            !gens.iter().any(|w| {
                let r: Vec<i64> = v.iter().zip(w).map(|(a, b)| a - b).collect();
                r.iter().all(|&x| x >= -1) && member(&r)
            })
        })
        .map(|v| v.iter().map(|x| x + 1).collect())
        .collect()
}

#[test]
fn anticanonical_generators_match_brute_force() {
    for (n, d) in [(5, 2), (6, 2), (7, 2), (8, 2), (7, 3), (8, 3)] {
        let r = SqVeronese::new(n, d).unwrap();
        let anti = r.anticanonical_generators().unwrap();
        let mut got: BTreeSet<Vec<i64>> = anti.p_set.iter().map(to_i64).collect();
        got.insert(sorted_desc(to_i64(&anti.squarefree_part[0])));
        let top = (n - 2 * d) as i64;
        let want = brute_anticanonical(n, d, top);
        assert_eq!(got, want, "n={n} d={d}");
        for w in &want {
            assert!(w[0] <= top, "box too small for n={n} d={d}");
        }
    }
}

#[test]
fn omega_times_anticanonical_lands_in_algebra() {
    for n in 5..=8 {
        for d in 2..=(n - 1) / 2 {
            let r = SqVeronese::new(n, d).unwrap();
            let omega = r.omega_generators().unwrap().generators;
            let anti = r.anticanonical_generators().unwrap();
            let numerators: Vec<ExponentVector> = anti.numerators().collect();
            for m in &omega {
                for u in &numerators {
                    let prod: Vec<i64> = to_i64(m)
                        .iter()
                        .zip(to_i64(u))
                        .map(|(a, b)| a + b - 1)
                        .collect();
                    assert!(in_algebra(&prod, d as i64), "n={n} d={d} {m:?} {u:?}");
                }
            }
        }
    }
}

#[test]
fn p_set_shape() {
    for n in 5..=12 {
        for d in 2..=(n - 1) / 2 {
            for v in p_set(n, d) {
                let e = v.entries();
                let c = e[0];
                assert!(e.iter().filter(|&&x| x == c).count() > d);
                assert!(e.iter().filter(|&&x| x == 0).count() >= d + c as usize - 1);
                let tail: u32 = e[d + 1..].iter().sum();
                assert_eq!(tail as usize, n - 2 * d - c as usize);
            }
            assert_eq!(p_set(n, d).is_empty(), n == 2 * d + 1, "n={n} d={d}");
        }
    }
}

/// `ω⁻¹` of the Segre product by search: Laurent `(p, q)` with equal
/// degrees and `(p, q) + g` in the product for each canonical generator.
#[test]
fn segre_trace_against_search() {
    for r in 2..=4 {
        for s in 2..=r {
            let t = segre_trace(r, s).unwrap();
            let p = (r - s) as i64;
            for g in &t.omega_generators {
                for f in &t.anticanonical_generators {
                    assert!(g.mul(f).in_product());
                }
            }
            // every degree-p-box Laurent pair that multiplies ω into T is
            // divisible by one of the listed generators
            let boxes = |n: usize| sorted_free(n, -p, p);
            for x in boxes(r) {
                for y in boxes(s) {
                    let z = SegreMonomial { x: x.clone(), y };
                    if z.x_degree() != z.y_degree() {
                        continue;
                    }
                    let ok = t.omega_generators.iter().all(|g| g.mul(&z).in_product());
                    let listed = t
                        .anticanonical_generators
                        .iter()
                        .any(|f| f.divides_in_product(&z));
                    assert_eq!(ok, listed, "r={r} s={s} {z:?}");
                }
            }
        }
    }
}

/// All integer vectors of length `n` with entries in `lo..=hi`.
fn sorted_free(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}
