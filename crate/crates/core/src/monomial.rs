//! Exponent-vector computations for graded monomial algebras: squarefree
//! Veronese subalgebras, Segre products of two polynomial rings and the
//! Veronese submodules of a polynomial ring.
//!
//! No coordinate ring is ever built. A monomial is its exponent vector and
//! every membership question reduces to integer inequalities.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonomialError {
    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("unsupported range: {0}")]
    RangeUnsupported(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

/// Exponents of a monomial `x₁^{a₁}⋯xₙ^{aₙ}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector {
    entries: Vec<u32>,
    degree: u32,
}

impl std::fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.entries)
    }
}

impl Serialize for ExponentVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(entries: Vec<u32>) -> Self {
        ExponentVector::new(entries)
    }
}

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        let degree = entries.iter().sum();
        ExponentVector { entries, degree }
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector::new(vec![0; n])
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Componentwise `self ≤ other`, i.e. divisibility of monomials.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// `self − other` when `other` divides `self`.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector::new)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Entries sorted nonincreasingly: the representative of the orbit under
    /// permuting variables.
    pub fn sorted_desc(&self) -> ExponentVector {
        let mut e = self.entries.clone();
        e.sort_unstable_by(|a, b| b.cmp(a));
        ExponentVector::new(e)
    }

    /// Nonzero entries of the sorted representative.
    pub fn support_pattern(&self) -> Vec<u32> {
        self.sorted_desc()
            .entries
            .into_iter()
            .filter(|&x| x > 0)
            .collect()
    }

    /// All distinct rearrangements of the entries, lazily, in lexicographic
    /// order.
    pub fn permutations(&self) -> impl Iterator<Item = ExponentVector> {
        let mut cur = self.entries.clone();
        cur.sort_unstable();
        let mut first = true;
        std::iter::from_fn(move || {
            if first {
                first = false;
                return Some(ExponentVector::new(cur.clone()));
            }
            // next lexicographic permutation
            let i = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i])?;
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1])?;
            cur.swap(i - 1, j);
            cur[i..].reverse();
            Some(ExponentVector::new(cur.clone()))
        })
    }
}

/// Vectors of length `n` with entries in `0..=max` and the given sum,
/// nonincreasing.
fn nonincreasing(n: usize, sum: u32, max: u32) -> Vec<Vec<u32>> {
    fn go(n: usize, sum: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            if sum == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let slots = (n - prefix.len()) as u32;
        for v in (0..=max.min(sum)).rev() {
            if v * slots < sum {
                break;
            }
            prefix.push(v);
            go(n, sum - v, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, sum, max, &mut Vec::new(), &mut out);
    out
}

/// All 0/1 vectors of length `n` with `k` ones.
pub fn squarefree_vectors(n: usize, k: usize) -> Vec<ExponentVector> {
    if k > n {
        return Vec::new();
    }
    let mut base = vec![0u32; n];
    for x in base.iter_mut().take(k) {
        *x = 1;
    }
    ExponentVector::new(base).permutations().collect()
}

/// The squarefree Veronese subalgebra `R_{n,d}`, generated by the
/// squarefree monomials of degree `d` in `n` variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SqVeronese {
    pub n: usize,
    pub d: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaGenerators {
    /// Number of vectors passing the three generator conditions.
    pub pre_prune: usize,
    /// The minimal generators among them.
    pub generators: Vec<ExponentVector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Anticanonical {
    /// Products of `n − d` distinct variables.
    pub squarefree_part: Vec<ExponentVector>,
    /// Sorted representatives of the remaining numerators; every
    /// rearrangement is also a numerator.
    pub p_set: Vec<ExponentVector>,
}

impl Anticanonical {
    /// Every numerator `u` of a generator `u / x₁⋯xₙ`, permutations expanded.
    pub fn numerators(&self) -> impl Iterator<Item = ExponentVector> + '_ {
        self.squarefree_part
            .iter()
            .cloned()
            .chain(self.p_set.iter().flat_map(|p| p.permutations()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TraceGapWitness {
    /// The pair `(n, d)` the products were computed for; `d` is replaced
    /// by `n − d` when `d > n/2`.
    pub computed_on: (usize, usize),
    pub min_product_degree: u32,
    /// `n − d`, which exceeds the degree `d` of the algebra generators.
    pub required: u32,
    pub holds: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SqVeroClassification {
    pub gorenstein: bool,
    pub nearly_gorenstein: bool,
    pub trace_gap_witness: Option<TraceGapWitness>,
}

impl SqVeronese {
    pub fn new(n: usize, d: usize) -> Result<Self, MonomialError> {
        if d == 0 || d > n {
            return Err(MonomialError::PreconditionViolated(format!(
                "need 1 <= d <= n, got n={n}, d={d}"
            )));
        }
        Ok(SqVeronese { n, d })
    }

    fn check_len(&self, v: &ExponentVector) -> Result<(), MonomialError> {
        if v.len() != self.n {
            return Err(MonomialError::LengthMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// `Σaᵢ ≡ 0 (mod d)` and `d·aᵢ ≤ Σaⱼ` for every `i`.
    pub fn contains(&self, v: &ExponentVector) -> Result<bool, MonomialError> {
        self.check_len(v)?;
        Ok(self.contains_unchecked(v))
    }

    fn contains_unchecked(&self, v: &ExponentVector) -> bool {
        let (d, s) = (self.d as u32, v.degree());
        s % d == 0 && v.entries().iter().all(|&a| d * a <= s)
    }

    /// Monomials of the canonical ideal: lattice points of the algebra with
    /// every defining inequality strict.
    pub fn in_omega(&self, v: &ExponentVector) -> bool {
        let (d, s) = (self.d as u32, v.degree());
        s % d == 0 && v.entries().iter().all(|&a| a >= 1 && d * a < s)
    }

    fn require_bvv_range(&self) -> Result<(), MonomialError> {
        if self.n < 2 * self.d || self.d < 2 {
            return Err(MonomialError::RangeUnsupported(format!(
                "needs n >= 2d >= 4, got n={}, d={}",
                self.n, self.d
            )));
        }
        Ok(())
    }

    /// Generators of the canonical ideal for `n ≥ 2d ≥ 4`: vectors with
    /// `aᵢ ≥ 1`, `d·aᵢ ≤ Σ − 1`, `Σ ≡ 0 (mod d)` and at most `d − 1` entries
    /// above 1, pruned to a minimal generating set.
    pub fn omega_generators(&self) -> Result<OmegaGenerators, MonomialError> {
        self.require_bvv_range()?;
        let (n, d) = (self.n, self.d);
        // d·a_max ≤ Σ − 1 ≤ (d−1)·a_max + (n−d+1) − 1 forces a_max ≤ n − d
        let max = (n - d) as u32;
        let mut candidates = Vec::new();
        let mut cur = vec![1u32; n];
        fn fill(
            pos: usize,
            big_left: usize,
            max: u32,
            cur: &mut Vec<u32>,
            out: &mut Vec<ExponentVector>,
        ) {
            if pos == cur.len() {
                out.push(ExponentVector::new(cur.clone()));
                return;
            }
            cur[pos] = 1;
            fill(pos + 1, big_left, max, cur, out);
            if big_left > 0 {
                for v in 2..=max {
                    cur[pos] = v;
                    fill(pos + 1, big_left - 1, max, cur, out);
                }
                cur[pos] = 1;
            }
        }
        fill(0, d - 1, max, &mut cur, &mut candidates);
        candidates.retain(|v| self.in_omega(v));
        let pre_prune = candidates.len();
        let generators = self.minimal_in_omega(candidates);
        Ok(OmegaGenerators {
            pre_prune,
            generators,
        })
    }

    /// Drops every `v` with `v − w` still in the canonical ideal for some
    /// algebra generator `w`.
    pub fn minimal_in_omega(&self, vs: Vec<ExponentVector>) -> Vec<ExponentVector> {
        let gens = squarefree_vectors(self.n, self.d);
        vs.into_iter()
            .filter(|v| {
                !gens
                    .iter()
                    .any(|w| v.checked_sub(w).is_some_and(|r| self.in_omega(&r)))
            })
            .collect()
    }

    /// Generators `u / x₁⋯xₙ` of the anti-canonical ideal for `n > 2d ≥ 4`.
    pub fn anticanonical_generators(&self) -> Result<Anticanonical, MonomialError> {
        self.require_bvv_range()?;
        let (n, d) = (self.n, self.d);
        if n == 2 * d {
            return Err(MonomialError::RangeUnsupported(format!(
                "needs n > 2d, got n={n}, d={d}"
            )));
        }
        Ok(Anticanonical {
            squarefree_part: squarefree_vectors(n, n - d),
            p_set: p_set(n, d),
        })
    }

    /// Gorenstein exactly for `d = 1`, `d = n − 1`, `n = 2d`, and the
    /// one-generator algebra `d = n`. Nearly Gorenstein only when Gorenstein;
    /// otherwise the witness shows the trace sits in degrees `≥ n − d > d`.
    pub fn classify(&self) -> SqVeroClassification {
        let (n, d) = (self.n, self.d);
        let gorenstein = d == 1 || d + 1 == n || n == 2 * d || d == n;
        let trace_gap_witness = if gorenstein {
            None
        } else {
            // R_{n,d} ≅ R_{n,n−d}
            let dd = d.min(n - d);
            SqVeronese { n, d: dd }.trace_gap_witness().ok()
        };
        SqVeroClassification {
            gorenstein,
            nearly_gorenstein: gorenstein,
            trace_gap_witness,
        }
    }

    /// Least degree of `m · u / x₁⋯xₙ` over canonical generators `m` and
    /// anti-canonical numerators `u`.
    pub fn trace_gap_witness(&self) -> Result<TraceGapWitness, MonomialError> {
        let omega = self.omega_generators()?;
        let anti = self.anticanonical_generators()?;
        let n = self.n as u32;
        let min_m = omega.generators.iter().map(|m| m.degree()).min().unwrap_or(0);
        let min_u = anti.numerators().map(|u| u.degree()).min().unwrap_or(0);
        let min_product_degree = min_m + min_u - n;
        let required = (self.n - self.d) as u32;
        Ok(TraceGapWitness {
            computed_on: (self.n, self.d),
            min_product_degree,
            required,
            holds: min_product_degree >= required && required > self.d as u32,
        })
    }
}

/// Sorted numerators `(c,…,c, b_{d+2},…, 0,…,0)`: `d + 1` copies of
/// `c ∈ [2, n−2d]`, then a nonincreasing `b` bounded by `c` with
/// `Σb = n − 2d − c`, then `d + c − 1` zeros.
pub fn p_set(n: usize, d: usize) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    if n < 2 * d + 2 {
        return out;
    }
    for c in 2..=(n - 2 * d) {
        let slots = n - 2 * d - c;
        for b in nonincreasing(slots, slots as u32, c as u32) {
            let mut v = vec![c as u32; d + 1];
            v.extend(b);
            v.resize(n, 0);
            out.push(ExponentVector::new(v));
        }
    }
    out.sort();
    out
}

/// A monomial `x^u y^v` of the Segre product `K[x₁..x_r] # K[y₁..y_s]`,
/// with Laurent exponents allowed for fractions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SegreMonomial {
    pub x: Vec<i64>,
    pub y: Vec<i64>,
}

impl SegreMonomial {
    pub fn x_degree(&self) -> i64 {
        self.x.iter().sum()
    }

    pub fn y_degree(&self) -> i64 {
        self.y.iter().sum()
    }

    /// Lies in the Segre product: nonnegative with equal bidegrees.
    pub fn in_product(&self) -> bool {
        self.x.iter().chain(&self.y).all(|&e| e >= 0) && self.x_degree() == self.y_degree()
    }

    pub fn mul(&self, other: &SegreMonomial) -> SegreMonomial {
        SegreMonomial {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            y: self.y.iter().zip(&other.y).map(|(a, b)| a + b).collect(),
        }
    }

    /// `other = self · t` for some monomial `t` of the product.
    pub fn divides_in_product(&self, other: &SegreMonomial) -> bool {
        SegreMonomial {
            x: other.x.iter().zip(&self.x).map(|(a, b)| a - b).collect(),
            y: other.y.iter().zip(&self.y).map(|(a, b)| a - b).collect(),
        }
        .in_product()
    }
}

/// Exponent vectors of length `n` and total degree `k`.
pub fn monomials_of_degree(n: usize, k: u32) -> Vec<Vec<i64>> {
    fn go(n: usize, k: u32, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() + 1 == n {
            prefix.push(k as i64);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for v in (0..=k).rev() {
            prefix.push(v as i64);
            go(n, k - v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, k, &mut Vec::new(), &mut out);
    }
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegreTrace {
    /// Variables of the two factors, ordered so that `r ≥ s`.
    pub r: usize,
    pub s: usize,
    pub omega_generators: Vec<SegreMonomial>,
    pub anticanonical_generators: Vec<SegreMonomial>,
    /// Minimal generators of the product ideal `ω · ω⁻¹`.
    pub trace_generators: Vec<SegreMonomial>,
    /// `p` with `tr(ω) = m^p`, when the trace is a power of the maximal ideal.
    pub trace_equals_power: Option<u32>,
    /// `dim T / tr(ω)`.
    pub colength: u64,
}

/// Trace of the canonical module of the Segre product of polynomial rings
/// in `r` and `s` variables (`r, s ≥ 2`).
pub fn segre_trace(r: usize, s: usize) -> Result<SegreTrace, MonomialError> {
    if r < 2 || s < 2 {
        return Err(MonomialError::PreconditionViolated(format!(
            "both factors need at least 2 variables, got {r} and {s}"
        )));
    }
    let (r, s) = (r.max(s), r.min(s));
    let p = (r - s) as u32;
    let mut x1 = vec![0i64; r];
    x1[0] = p as i64;
    // ω ≅ (x₁^{r−s} y^β : |β| = r − s)
    let omega_generators: Vec<SegreMonomial> = monomials_of_degree(s, p)
        .into_iter()
        .map(|beta| SegreMonomial {
            x: x1.clone(),
            y: beta,
        })
        .collect();
    // ω⁻¹ = (x^α / x₁^{r−s} : |α| = r − s)
    let anticanonical_generators: Vec<SegreMonomial> = monomials_of_degree(r, p)
        .into_iter()
        .map(|mut alpha| {
            alpha[0] -= p as i64;
            SegreMonomial {
                x: alpha,
                y: vec![0; s],
            }
        })
        .collect();

    let mut products: Vec<SegreMonomial> = omega_generators
        .iter()
        .flat_map(|g| anticanonical_generators.iter().map(move |f| g.mul(f)))
        .collect();
    debug_assert!(products.iter().all(SegreMonomial::in_product));
    products.sort();
    products.dedup();
    let trace_generators: Vec<SegreMonomial> = products
        .iter()
        .filter(|q| {
            !products
                .iter()
                .any(|o| o != *q && o.divides_in_product(q))
        })
        .cloned()
        .collect();

    let trace_equals_power = trace_generators
        .iter()
        .map(|g| g.x_degree())
        .min()
        .and_then(|k| {
            let k = k as u32;
            let mut power: Vec<SegreMonomial> = monomials_of_degree(r, k)
                .into_iter()
                .flat_map(|x| {
                    monomials_of_degree(s, k)
                        .into_iter()
                        .map(move |y| SegreMonomial { x: x.clone(), y })
                })
                .collect();
            power.sort();
            (power == trace_generators).then_some(k)
        });
    // monomials of bidegree (k, k) for k below the power
    let colength = (0..p as u64)
        .map(|k| binomial(k + r as u64 - 1, k) * binomial(k + s as u64 - 1, k))
        .sum();
    Ok(SegreTrace {
        r,
        s,
        omega_generators,
        anticanonical_generators,
        trace_generators,
        trace_equals_power,
        colength,
    })
}

/// Checks that every degree-`d` monomial `x^α` of the polynomial ring in `n`
/// variables factors as `(x₁^{d−j} x^β) · (x^γ / x₁^{d−j})` with `|β| = j`,
/// the first factor in `x₁^{d−j} M_j` and the second in its dual. Then the
/// maximal ideal of the Veronese ring lies in the trace of `M_j`.
pub fn veronese_trace_witness(n: usize, d: usize, j: usize) -> Result<bool, MonomialError> {
    if n == 0 || d == 0 || j >= d {
        return Err(MonomialError::PreconditionViolated(format!(
            "need n >= 1, d >= 1 and 0 <= j < d, got n={n}, d={d}, j={j}"
        )));
    }
    let (d, j) = (d as i64, j as i64);
    let in_veronese = |v: &[i64]| v.iter().all(|&e| e >= 0) && v.iter().sum::<i64>() % d == 0;
    let module_gens = monomials_of_degree(n, j as u32);
    let shift = d - j;
    for alpha in monomials_of_degree(n, d as u32) {
        // greedy β ≤ α with |β| = j
        let mut beta = vec![0i64; n];
        let mut left = j;
        for (b, &a) in beta.iter_mut().zip(&alpha) {
            let take = a.min(left);
            *b = take;
            left -= take;
        }
        let gamma: Vec<i64> = alpha.iter().zip(&beta).map(|(a, b)| a - b).collect();
        let mut first = beta.clone();
        first[0] += shift;
        let mut fraction = gamma.clone();
        fraction[0] -= shift;

        let first_ok = first.iter().all(|&e| e >= 0) && first.iter().sum::<i64>() == d;
        // the fraction maps every generator x₁^{d−j} g of x₁^{d−j} M_j into R^{(d)}
        let dual_ok = module_gens.iter().all(|g| {
            let mut prod: Vec<i64> = fraction.iter().zip(g).map(|(f, e)| f + e).collect();
            prod[0] += shift;
            in_veronese(&prod)
        });
        let recombines = first
            .iter()
            .zip(&fraction)
            .map(|(a, b)| a + b)
            .eq(alpha.iter().copied());
        if !(first_ok && dual_ok && recombines) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn patterns(v: &[ExponentVector]) -> Vec<Vec<u32>> {
        v.iter().map(|e| e.support_pattern()).collect()
    }

    #[test]
    fn sqvero_membership() {
        let r = SqVeronese::new(5, 2).unwrap();
        assert_eq!(r.contains(&ev(&[1, 1, 1, 1, 0])), Ok(true));
        assert_eq!(r.contains(&ev(&[3, 1, 0, 0, 0])), Ok(false));
        assert_eq!(r.contains(&ExponentVector::zeros(5)), Ok(true));
        assert_eq!(
            r.contains(&ev(&[1, 1])),
            Err(MonomialError::LengthMismatch { expected: 5, got: 2 })
        );
    }

    #[test]
    fn permutations_are_distinct() {
        assert_eq!(ev(&[2, 1, 1]).permutations().count(), 3);
        assert_eq!(ev(&[1, 1, 0, 0]).permutations().count(), 6);
        assert_eq!(ev(&[]).permutations().count(), 1);
        assert_eq!(squarefree_vectors(5, 2).len(), 10);
    }

    #[test]
    fn omega_of_5_2() {
        let og = SqVeronese::new(5, 2).unwrap().omega_generators().unwrap();
        let mut got = og.generators.clone();
        got.sort();
        let mut want: Vec<_> = ev(&[2, 1, 1, 1, 1]).permutations().collect();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(og.pre_prune, 5);
    }

    #[test]
    fn omega_of_6_2_starts_in_degree_6() {
        let og = SqVeronese::new(6, 2).unwrap().omega_generators().unwrap();
        let min = og.generators.iter().map(|g| g.degree()).min().unwrap();
        assert_eq!(min, 6);
        assert!(og.generators.contains(&ev(&[1, 1, 1, 1, 1, 1])));
    }

    #[test]
    fn extreme_candidate_is_in_omega() {
        for (n, d) in [(5, 2), (7, 2), (8, 3), (9, 4)] {
            let r = SqVeronese::new(n, d).unwrap();
            let mut v = vec![(n - 2 * d + 1) as u32; d - 1];
            v.extend(std::iter::repeat(1).take(n - d + 1));
            assert!(r.in_omega(&ev(&v)), "{n} {d}");
        }
    }

    #[test]
    fn small_p_sets() {
        assert!(p_set(5, 2).is_empty());
        assert_eq!(patterns(&p_set(6, 2)), vec![vec![2, 2, 2]]);
        let mut p8 = patterns(&p_set(8, 2));
        p8.sort();
        assert_eq!(
            p8,
            vec![vec![2, 2, 2, 1, 1], vec![2, 2, 2, 2], vec![3, 3, 3, 1], vec![4, 4, 4]]
        );
        for v in p_set(11, 3) {
            assert_eq!(v.len(), 11);
        }
        assert!(SqVeronese::new(4, 2).unwrap().anticanonical_generators().is_err());
    }

    #[test]
    fn classification() {
        assert!(SqVeronese::new(6, 3).unwrap().classify().gorenstein);
        assert!(SqVeronese::new(4, 1).unwrap().classify().gorenstein);
        let c = SqVeronese::new(5, 2).unwrap().classify();
        assert!(!c.gorenstein && !c.nearly_gorenstein);
        let w = c.trace_gap_witness.unwrap();
        assert_eq!((w.min_product_degree, w.required), (4, 3));
        assert!(w.holds);
        // R_{5,3} ≅ R_{5,2}
        let w = SqVeronese::new(5, 3).unwrap().classify().trace_gap_witness.unwrap();
        assert_eq!(w.computed_on, (5, 2));
    }

    #[test]
    fn segre_examples() {
        let t = segre_trace(3, 2).unwrap();
        assert_eq!(t.trace_equals_power, Some(1));
        assert_eq!(t.colength, 1);
        let t = segre_trace(2, 2).unwrap();
        assert_eq!(t.trace_equals_power, Some(0));
        assert_eq!(t.colength, 0);
        let t = segre_trace(2, 4).unwrap();
        assert_eq!((t.r, t.s), (4, 2));
        assert_eq!(t.trace_equals_power, Some(2));
        assert_eq!(t.colength, 9);
        assert!(segre_trace(1, 3).is_err());
    }

    #[test]
    fn veronese_witness() {
        assert_eq!(veronese_trace_witness(2, 2, 1), Ok(true));
        assert_eq!(veronese_trace_witness(4, 3, 0), Ok(true));
        assert_eq!(veronese_trace_witness(3, 3, 2), Ok(true));
        assert!(veronese_trace_witness(3, 3, 3).is_err());
    }
}
