//! Three-generated numerical semigroups.
//!
//! A non-symmetric `H = ⟨n₁, n₂, n₃⟩` is described by its structure matrix
//!
//! ```text
//!     ( x₁^a₁  x₂^a₂  x₃^a₃ )
//!     ( x₂^b₂  x₃^b₃  x₁^b₁ )
//! ```
//!
//! whose entries come from the minimal relations
//! `c₁n₁ = b₂n₂ + a₃n₃`, `c₂n₂ = a₁n₁ + b₃n₃`, `c₃n₃ = b₁n₁ + a₂n₂`
//! with `cᵢ = aᵢ + bᵢ`. The trace of the canonical ideal is generated by
//! `dᵢnᵢ`, `dᵢ = min(aᵢ, bᵢ)`, which gives the residue `d₁d₂d₃`.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::ideal::{canonical_trace, RelativeIdeal};
use crate::semigroup::{gcd, NumericalSemigroup, SemigroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ThreeGenError {
    #[error("{0:?} is not a minimal generating triple of a numerical semigroup")]
    NotMinimalTriple(Vec<i64>),
    #[error("the structure matrix is only defined for non-symmetric semigroups")]
    SymmetricInput,
    #[error("structure matrix invariant violated: {0}")]
    Inconsistent(String),
    #[error("coprimality precondition fails: {0}")]
    CoprimalityViolated(String),
    #[error("degenerate triple {gens:?}: {reason}")]
    DegenerateTriple { gens: Vec<i64>, reason: String },
    #[error("invalid shift range: {0}")]
    InvalidRange(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// Membership in `⟨p, q⟩` for positive `p`, `q`.
fn in_two_generated(x: i64, p: i64, q: i64) -> bool {
    x >= 0 && (0..=x / p).any(|i| (x - i * p) % q == 0)
}

fn check_triple(gens: [i64; 3]) -> Result<NumericalSemigroup, ThreeGenError> {
    let h = NumericalSemigroup::from_generators(&gens)
        .map_err(|_| ThreeGenError::NotMinimalTriple(gens.to_vec()))?;
    if h.embedding_dimension() != 3 {
        return Err(ThreeGenError::NotMinimalTriple(gens.to_vec()));
    }
    Ok(h)
}

/// Herzog's criterion: up to permutation, `d = gcd(n₁, n₂) > 1` and
/// `n₃ ∈ ⟨n₁/d, n₂/d⟩`.
pub fn is_symmetric_3gen(n1: i64, n2: i64, n3: i64) -> Result<bool, ThreeGenError> {
    check_triple([n1, n2, n3])?;
    let n = [n1, n2, n3];
    Ok((0..3).any(|k| {
        let (p, q) = (n[(k + 1) % 3], n[(k + 2) % 3]);
        let d = gcd(p, q);
        d > 1 && in_two_generated(n[k], p / d, q / d)
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructureMatrix {
    /// Generators in increasing order; `a`, `b`, `c` are indexed the same way.
    pub generators: [i64; 3],
    pub a: [i64; 3],
    pub b: [i64; 3],
    pub c: [i64; 3],
}

/// The unique `(u, v)` with `x = u·p + v·q`, both positive.
fn positive_split(x: i64, p: i64, q: i64) -> Result<(i64, i64), ThreeGenError> {
    let splits: Vec<(i64, i64)> = (0..=x / p)
        .filter(|&u| (x - u * p) % q == 0)
        .map(|u| (u, (x - u * p) / q))
        .collect();
    match splits[..] {
        [(u, v)] if u > 0 && v > 0 => Ok((u, v)),
        _ => Err(ThreeGenError::Inconsistent(format!(
            "{x} = u*{p} + v*{q} has splits {splits:?}, expected one positive"
        ))),
    }
}

impl StructureMatrix {
    pub fn of(h: &NumericalSemigroup) -> Result<Self, ThreeGenError> {
        let &[n1, n2, n3] = h.generators() else {
            return Err(ThreeGenError::NotMinimalTriple(h.generators().to_vec()));
        };
        if h.classify().symmetric {
            return Err(ThreeGenError::SymmetricInput);
        }
        let n = [n1, n2, n3];
        let least = |i: usize| {
            let (p, q) = (n[(i + 1) % 3], n[(i + 2) % 3]);
            (1..).find(|&c| in_two_generated(c * n[i], p, q)).unwrap()
        };
        let c = [least(0), least(1), least(2)];
        // c₁n₁ = b₂n₂ + a₃n₃
        let (b2, a3) = positive_split(c[0] * n1, n2, n3)?;
        // c₂n₂ = a₁n₁ + b₃n₃
        let (a1, b3) = positive_split(c[1] * n2, n1, n3)?;
        // c₃n₃ = b₁n₁ + a₂n₂
        let (b1, a2) = positive_split(c[2] * n3, n1, n2)?;
        let m = StructureMatrix {
            generators: n,
            a: [a1, a2, a3],
            b: [b1, b2, b3],
            c,
        };
        m.verify()?;
        Ok(m)
    }

    /// Checks `cᵢ = aᵢ + bᵢ`, the three relations and the reconstruction of
    /// the generators from the exponents.
    pub fn verify(&self) -> Result<(), ThreeGenError> {
        let [n1, n2, n3] = self.generators;
        let [a1, a2, a3] = self.a;
        let [b1, b2, b3] = self.b;
        let [c1, c2, c3] = self.c;
        let checks = [
            ("c = a + b", (0..3).all(|i| self.c[i] == self.a[i] + self.b[i])),
            ("c1 n1 = b2 n2 + a3 n3", c1 * n1 == b2 * n2 + a3 * n3),
            ("c2 n2 = a1 n1 + b3 n3", c2 * n2 == a1 * n1 + b3 * n3),
            ("c3 n3 = b1 n1 + a2 n2", c3 * n3 == b1 * n1 + a2 * n2),
            ("n1 from matrix", n1 == a2 * a3 + b2 * a3 + b2 * b3),
            ("n2 from matrix", n2 == a1 * a3 + a1 * b3 + b1 * b3),
            ("n3 from matrix", n3 == a1 * a2 + b1 * a2 + b1 * b2),
        ];
        match checks.iter().find(|(_, ok)| !ok) {
            Some((name, _)) => Err(ThreeGenError::Inconsistent(format!(
                "{name} fails for {self:?}"
            ))),
            None => Ok(()),
        }
    }

    /// `min(aᵢ, bᵢ)`.
    pub fn d(&self) -> [i64; 3] {
        [0, 1, 2].map(|i| self.a[i].min(self.b[i]))
    }

    /// `d₁d₂d₃`.
    pub fn residue(&self) -> i64 {
        self.d().iter().product()
    }

    /// `max{c₁n₁ + b₃n₃, c₂n₂ + a₃n₃} − (n₁ + n₂ + n₃)`.
    ///
    /// The sum of the generators has to be subtracted; without it the
    /// maximum overshoots (14 instead of 2 on ⟨3,4,5⟩).
    pub fn frobenius(&self) -> i64 {
        let [n1, n2, n3] = self.generators;
        let raw = (self.c[0] * n1 + self.b[2] * n3).max(self.c[1] * n2 + self.a[2] * n3);
        raw - (n1 + n2 + n3)
    }

    /// `a₁b₁c₁` and `a₂b₂c₂`, sometimes quoted as the two candidates for
    /// `2g − (Fr + 1)`. They are not: ⟨3,4,5⟩ has `2g − (Fr + 1) = 1`
    /// against 6 and 2. See [`row_products`](Self::row_products).
    pub fn genus_candidates(&self) -> [i64; 2] {
        [0, 1].map(|i| self.a[i] * self.b[i] * self.c[i])
    }

    /// `a₁a₂a₃` and `b₁b₂b₃`; the smaller one is `2g − (Fr + 1) = g − n`.
    pub fn row_products(&self) -> [i64; 2] {
        [self.a.iter().product(), self.b.iter().product()]
    }
}

/// Matrix formulas next to the brute-force values they must reproduce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixInvariants {
    pub matrix: StructureMatrix,
    pub residue_formula: i64,
    pub residue_brute: i64,
    pub frobenius_from_matrix: i64,
    pub frobenius_brute: i64,
    /// `2g − (Fr + 1) = min{a₁a₂a₃, b₁b₂b₃}`.
    pub genus_identity_ok: bool,
    /// `2g − (Fr + 1) ∈ {a₁b₁c₁, a₂b₂c₂}`, reported only; false in general.
    pub genus_candidates_ok: bool,
    /// `res ≤ g − n`, proved for three generators.
    pub residue_bound_ok: bool,
}

impl MatrixInvariants {
    pub fn all_ok(&self) -> bool {
        self.residue_formula == self.residue_brute
            && self.frobenius_from_matrix == self.frobenius_brute
            && self.genus_identity_ok
            && self.residue_bound_ok
    }
}

pub fn matrix_invariants(h: &NumericalSemigroup) -> Result<MatrixInvariants, ThreeGenError> {
    let matrix = StructureMatrix::of(h)?;
    let inv = h.invariants();
    let residue_brute = canonical_trace(h).residue as i64;
    let lhs = 2 * inv.genus - (inv.frobenius + 1);
    Ok(MatrixInvariants {
        matrix,
        residue_formula: matrix.residue(),
        residue_brute,
        frobenius_from_matrix: matrix.frobenius(),
        frobenius_brute: inv.frobenius,
        genus_identity_ok: lhs == *matrix.row_products().iter().min().unwrap(),
        genus_candidates_ok: matrix.genus_candidates().contains(&lhs),
        residue_bound_ok: residue_brute <= inv.genus - inv.n_of_h,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MaxTraceCase {
    /// `⟨ab+b+1, b+c+1, ac+a+c⟩`
    I,
    /// `⟨bc+b+1, ca+c+1, ab+a+1⟩`, the pseudo-symmetric family.
    II,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxTraceFamily {
    pub case: MaxTraceCase,
    /// The triple in the family's own order.
    pub generators: [i64; 3],
    pub predicted_frobenius: i64,
    pub frobenius: i64,
    pub trace_is_maximal: bool,
    pub verified: bool,
}

/// Builds a member of one of the two families whose trace is the maximal
/// ideal and checks it against the trace engine.
pub fn max_trace_family(
    case: MaxTraceCase,
    a: i64,
    b: i64,
    c: i64,
) -> Result<MaxTraceFamily, ThreeGenError> {
    if a < 1 || b < 1 || c < 1 {
        return Err(ThreeGenError::CoprimalityViolated(format!(
            "parameters must be positive, got ({a}, {b}, {c})"
        )));
    }
    let (generators, predicted_frobenius) = match case {
        MaxTraceCase::I => {
            if gcd(b + c - 1, a * b - c) != 1 {
                return Err(ThreeGenError::CoprimalityViolated(format!(
                    "gcd(b+c-1, ab-c) = gcd({}, {}) != 1",
                    b + c - 1,
                    a * b - c
                )));
            }
            (
                [a * b + b + 1, b + c + 1, a * c + a + c],
                a * b * c + b * c - b - 1 + (a * b - c).max(0),
            )
        }
        MaxTraceCase::II => {
            if gcd(b * c + b + 1, c * a + c + 1) != 1 {
                return Err(ThreeGenError::CoprimalityViolated(format!(
                    "gcd(bc+b+1, ca+c+1) = gcd({}, {}) != 1",
                    b * c + b + 1,
                    c * a + c + 1
                )));
            }
            ([b * c + b + 1, c * a + c + 1, a * b + a + 1], 2 * a * b * c - 2)
        }
    };
    let degenerate = |reason: String| ThreeGenError::DegenerateTriple {
        gens: generators.to_vec(),
        reason,
    };
    let h = NumericalSemigroup::from_generators(&generators).map_err(|e| degenerate(e.to_string()))?;
    if h.embedding_dimension() != 3 {
        return Err(degenerate(format!("minimally generated by {h}")));
    }
    let trace = canonical_trace(&h).trace;
    let trace_is_maximal = trace == RelativeIdeal::maximal(&h);
    let frobenius = h.frobenius();
    Ok(MaxTraceFamily {
        case,
        generators,
        predicted_frobenius,
        frobenius,
        trace_is_maximal,
        verified: trace_is_maximal && frobenius == predicted_frobenius,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConductorClassification {
    /// Generators are `{3, 3a+1, 3a+2}`.
    pub by_formula: bool,
    /// `tr(H) = C_H` by direct comparison.
    pub by_trace: bool,
}

pub fn trace_conductor_classifier(
    h: &NumericalSemigroup,
) -> Result<ConductorClassification, ThreeGenError> {
    let &[n1, n2, n3] = h.generators() else {
        return Err(ThreeGenError::NotMinimalTriple(h.generators().to_vec()));
    };
    if h.classify().symmetric {
        return Err(ThreeGenError::SymmetricInput);
    }
    let by_formula = n1 == 3 && n2 % 3 == 1 && n3 == n2 + 1;
    let by_trace = canonical_trace(h).trace == RelativeIdeal::conductor(h);
    Ok(ConductorClassification { by_formula, by_trace })
}

/// `∏ p^{ν_p(b)}` over the primes with `ν_p(a) < ν_p(b)`.
pub fn symmetry_period(a: i64, b: i64) -> i64 {
    let valuation = |mut x: i64, p: i64| {
        let mut v = 0;
        while x % p == 0 {
            x /= p;
            v += 1;
        }
        v
    };
    let mut t = 1;
    let mut rest = b;
    let mut p = 2;
    while rest > 1 {
        if rest % p == 0 {
            let vb = valuation(b, p);
            if valuation(a, p) < vb {
                t *= p.pow(vb);
            }
            while rest % p == 0 {
                rest /= p;
            }
        }
        p += 1;
    }
    t
}

/// `k_{a,b} = max{b((b−a)/D − 1), ba/D}` with `D = gcd(a, b)`.
pub fn shift_threshold(a: i64, b: i64) -> i64 {
    let d = gcd(a, b);
    (b * ((b - a) / d - 1)).max(b * a / d)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftRecord {
    pub j: i64,
    /// Minimal generators of `⟨j, j+a, j+b⟩` divided by their gcd.
    pub generators: Vec<i64>,
    pub residue: i64,
    pub symmetric: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftReport {
    pub a: i64,
    pub b: i64,
    pub gcd: i64,
    pub threshold: i64,
    pub period: i64,
    pub records: Vec<ShiftRecord>,
    /// `res(H_j) = res(H_{j+b})` for every reported `j > 2k`.
    pub periodicity_ok: bool,
    /// Symmetric exactly when `T | j`, for reported `j > k`.
    pub symmetry_period_ok: bool,
    /// Non-symmetric residues are multiples of `(b−a)a/D²`.
    pub divisibility_ok: bool,
    /// `27 D³ res < 8 b³`.
    pub bound_ok: bool,
    pub failures: Vec<String>,
}

impl ShiftReport {
    pub fn all_ok(&self) -> bool {
        self.periodicity_ok && self.symmetry_period_ok && self.divisibility_ok && self.bound_ok
    }
}

fn shifted_record(j: i64, a: i64, b: i64) -> Result<ShiftRecord, ThreeGenError> {
    let d = gcd(gcd(j, a), b);
    let h = NumericalSemigroup::from_generators(&[j / d, (j + a) / d, (j + b) / d])?;
    Ok(ShiftRecord {
        j,
        generators: h.generators().to_vec(),
        residue: canonical_trace(&h).residue as i64,
        symmetric: h.classify().symmetric,
    })
}

/// Residues along the shifted family `H_j = ⟨j, j+a, j+b⟩` for `j` in
/// `range` (inclusive), checked against the periodicity statements. When
/// `range` is `None` it is `(2k, 2k + 5b]`.
pub fn shift_analysis(
    a: i64,
    b: i64,
    range: Option<(i64, i64)>,
) -> Result<ShiftReport, ThreeGenError> {
    if !(0 < a && a < b) {
        return Err(ThreeGenError::InvalidRange(format!("need 0 < a < b, got a={a}, b={b}")));
    }
    let d = gcd(a, b);
    let k = shift_threshold(a, b);
    let period = symmetry_period(a, b);
    let (lo, hi) = range.unwrap_or((2 * k + 1, 2 * k + 5 * b));
    if lo < 1 || lo > hi {
        return Err(ThreeGenError::InvalidRange(format!("bad j range [{lo}, {hi}]")));
    }
    // one extra period so every reported j has a partner j + b
    let all: Vec<ShiftRecord> = (lo..=hi + b)
        .into_par_iter()
        .map(|j| shifted_record(j, a, b))
        .collect::<Result<_, _>>()?;
    let by_j = |j: i64| &all[(j - lo) as usize];

    let mut failures = Vec::new();
    let (mut periodicity_ok, mut symmetry_period_ok) = (true, true);
    let (mut divisibility_ok, mut bound_ok) = (true, true);
    let unit = (b - a) * a / (d * d);
    for j in lo..=hi {
        let r = by_j(j);
        if j > 2 * k && r.residue != by_j(j + b).residue {
            periodicity_ok = false;
            failures.push(format!(
                "res(H_{j}) = {} but res(H_{}) = {}",
                r.residue,
                j + b,
                by_j(j + b).residue
            ));
        }
        if j > k && r.symmetric != (j % period == 0) {
            symmetry_period_ok = false;
            failures.push(format!("H_{j}: symmetric = {}, T = {period}", r.symmetric));
        }
        if j > 2 * k && !r.symmetric {
            if r.residue % unit != 0 {
                divisibility_ok = false;
                failures.push(format!("res(H_{j}) = {} not divisible by {unit}", r.residue));
            }
            if 27 * d.pow(3) * r.residue >= 8 * b.pow(3) {
                bound_ok = false;
                failures.push(format!("res(H_{j}) = {} violates the cubic bound", r.residue));
            }
        }
    }
    let mut records = all;
    records.truncate((hi - lo + 1) as usize);
    Ok(ShiftReport {
        a,
        b,
        gcd: d,
        threshold: k,
        period,
        records,
        periodicity_ok,
        symmetry_period_ok,
        divisibility_ok,
        bound_ok,
        failures,
    })
}
