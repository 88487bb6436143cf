//! Numerical semigroups and their elementary invariants.
//!
//! A [`NumericalSemigroup`] is built once from a list of generators. All the
//! tables every other module leans on (the Apéry set of the multiplicity,
//! the membership bitset below the conductor, gaps and pseudo-Frobenius
//! numbers) are computed at construction, after which the value is
//! immutable and can be shared freely between threads.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;
use thiserror::Error;

use crate::bits::Bits;

/// Largest Frobenius number accepted by [`NumericalSemigroup::from_generators`].
pub const DEFAULT_MAX_FROBENIUS: i64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("no generators given")]
    EmptyInput,
    #[error("generator {0} is not positive")]
    NonPositive(i64),
    #[error("generators have gcd {0}; the semigroup is not numerical")]
    NonCoprime(i64),
    #[error("Frobenius number is at least {at_least}, above the bound {bound}")]
    FrobeniusTooLarge { at_least: i64, bound: i64 },
    #[error("{0} is not a positive element of the semigroup")]
    NotAMember(i64),
}

pub fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least element of `⟨gens⟩` in each residue class modulo `gens[0]`
/// (`None` for classes the generators never reach).
///
/// Shortest paths on the residue graph; the generators need not be coprime.
fn apery_table(gens: &[i64]) -> Vec<Option<i64>> {
    let m = gens[0] as usize;
    let mut dist: Vec<Option<i64>> = vec![None; m];
    dist[0] = Some(0);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if dist[r] != Some(d) {
            continue;
        }
        for &g in &gens[1..] {
            let Some(nd) = d.checked_add(g) else { continue };
            let nr = (r + (g as usize % m)) % m;
            if dist[nr].map_or(true, |old| nd < old) {
                dist[nr] = Some(nd);
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

#[derive(Clone)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    removed: Vec<i64>,
    frobenius: i64,
    /// `apery[r]` is the least element congruent to `r` modulo the multiplicity.
    apery: Vec<i64>,
    /// Membership of `0..conductor`.
    members: Bits,
    gaps: Vec<i64>,
    pf: Vec<i64>,
}

impl std::fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

/// Elementary numbers attached to a semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub frobenius: i64,
    pub gaps: Vec<i64>,
    pub genus: i64,
    /// Number of elements below the Frobenius number.
    pub n_of_h: i64,
    pub conductor_number: i64,
    pub multiplicity: i64,
    pub embedding_dimension: usize,
    pub has_minimal_multiplicity: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Symmetry {
    pub symmetric: bool,
    pub pseudo_symmetric: bool,
    pub almost_symmetric: bool,
}

impl NumericalSemigroup {
    /// Builds `⟨raw⟩`, keeping only the minimal generators, with the default
    /// Frobenius bound.
    pub fn from_generators(raw: &[i64]) -> Result<Self, SemigroupError> {
        Self::with_max_frobenius(raw, DEFAULT_MAX_FROBENIUS)
    }

    /// Like [`from_generators`](Self::from_generators) but rejects semigroups
    /// whose Frobenius number exceeds `bound`.
    pub fn with_max_frobenius(raw: &[i64], bound: i64) -> Result<Self, SemigroupError> {
        if raw.is_empty() {
            return Err(SemigroupError::EmptyInput);
        }
        if let Some(&bad) = raw.iter().find(|&&g| g < 1) {
            return Err(SemigroupError::NonPositive(bad));
        }
        let mut gens = raw.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(SemigroupError::NonCoprime(g));
        }
        let m = gens[0];
        // m - 1 is always a gap when m > 1
        if m - 1 > bound {
            return Err(SemigroupError::FrobeniusTooLarge {
                at_least: m - 1,
                bound,
            });
        }
        let apery: Vec<i64> = apery_table(&gens)
            .into_iter()
            .map(|d| d.expect("coprime generators reach every residue"))
            .collect();
        let frobenius = apery.iter().max().copied().unwrap_or(0) - m;
        if frobenius > bound {
            return Err(SemigroupError::FrobeniusTooLarge {
                at_least: frobenius,
                bound,
            });
        }
        let member = |x: i64| x >= 0 && x >= apery[(x % m) as usize];

        // An element below g is generated without g, so g is redundant
        // exactly when g - g' lies in the semigroup for a smaller g'.
        let mut generators = Vec::new();
        let mut removed = Vec::new();
        for (i, &gi) in gens.iter().enumerate() {
            if gens[..i].iter().any(|&gj| member(gi - gj)) {
                removed.push(gi);
            } else {
                generators.push(gi);
            }
        }

        let c = (frobenius + 1) as usize;
        let mut members = Bits::zeros(c);
        let mut gaps = Vec::new();
        for x in 0..c as i64 {
            if member(x) {
                members.set(x as usize);
            } else {
                gaps.push(x);
            }
        }

        // f is pseudo-Frobenius iff f + m is an Apéry element maximal for
        // the order x <= y  <=>  y - x in H.
        let mut pf: Vec<i64> = apery
            .iter()
            .filter(|&&w| {
                generators
                    .iter()
                    .all(|&g| apery[((w + g) % m) as usize] != w + g)
            })
            .map(|&w| w - m)
            .collect();
        pf.sort_unstable();

        Ok(NumericalSemigroup {
            generators,
            removed,
            frobenius,
            apery,
            members,
            gaps,
            pf,
        })
    }

    /// The minimal generators, increasing.
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Input generators dropped because they were sums of the others.
    pub fn removed_generators(&self) -> &[i64] {
        &self.removed
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Largest integer outside the semigroup; `-1` for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// `frobenius + 1`, the start of the all-member tail.
    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn genus(&self) -> i64 {
        self.gaps.len() as i64
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && x >= self.apery[(x % self.multiplicity()) as usize]
    }

    pub(crate) fn members(&self) -> &Bits {
        &self.members
    }

    /// `Ap(a, H) = {h ∈ H : h − a ∉ H}`, increasing.
    pub fn apery(&self, a: i64) -> Result<Vec<i64>, SemigroupError> {
        if a <= 0 || !self.contains(a) {
            return Err(SemigroupError::NotAMember(a));
        }
        let mut out: Vec<i64> = (0..a)
            .map(|r| {
                let mut x = r;
                while !self.contains(x) {
                    x += a;
                }
                x
            })
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// The Apéry set of the multiplicity, indexed by residue.
    pub fn apery_of_multiplicity(&self) -> &[i64] {
        &self.apery
    }

    /// Elements of the semigroup below the Frobenius number.
    pub fn small_elements(&self) -> impl Iterator<Item = i64> + '_ {
        self.members
            .iter_ones()
            .map(|x| x as i64)
            .filter(move |&x| x < self.frobenius)
    }

    pub fn invariants(&self) -> Invariants {
        let conductor_number = self.conductor();
        let genus = self.genus();
        Invariants {
            frobenius: self.frobenius,
            gaps: self.gaps.clone(),
            genus,
            n_of_h: self.small_elements().count() as i64,
            conductor_number,
            multiplicity: self.multiplicity(),
            embedding_dimension: self.embedding_dimension(),
            has_minimal_multiplicity: self.multiplicity() == self.embedding_dimension() as i64,
        }
    }

    /// Pseudo-Frobenius numbers, increasing. ℕ gets `[-1]`, so that its
    /// type is 1 like every other symmetric semigroup.
    pub fn pseudo_frobenius(&self) -> &[i64] {
        &self.pf
    }

    /// Cohen–Macaulay type of the semigroup ring: the number of
    /// pseudo-Frobenius numbers.
    pub fn type_number(&self) -> usize {
        self.pf.len()
    }

    pub fn classify(&self) -> Symmetry {
        let fr = self.frobenius;
        let pf = &self.pf;
        let tau = pf.len();
        let symmetric = tau == 1;
        let pseudo_symmetric = fr > 0 && fr % 2 == 0 && pf[..] == [fr / 2, fr];
        // f_i + f_{τ-i} = Fr for i = 1..⌊τ/2⌋ (1-based, f_τ = Fr)
        let almost_symmetric = (1..=tau / 2).all(|i| pf[i - 1] + pf[tau - i - 1] == fr);
        Symmetry {
            symmetric,
            pseudo_symmetric,
            almost_symmetric,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    /// Reachability by dynamic programming, independent of the Apéry table.
    fn reachable(gens: &[i64], limit: usize) -> Vec<bool> {
        let mut r = vec![false; limit + 1];
        r[0] = true;
        for x in 1..=limit {
            r[x] = gens.iter().any(|&g| g as usize <= x && r[x - g as usize]);
        }
        r
    }

    #[test]
    fn minimal_generators_are_extracted() {
        assert_eq!(sg(&[5, 6, 7]).generators(), &[5, 6, 7]);
        let h = sg(&[4, 6, 9, 10]);
        assert_eq!(h.generators(), &[4, 6, 9]);
        assert_eq!(h.removed_generators(), &[10]);
        assert_eq!(sg(&[7, 5, 6, 5, 12]).generators(), &[5, 6, 7]);
    }

    #[test]
    fn rejects_bad_input() {
        use SemigroupError::*;
        assert_eq!(NumericalSemigroup::from_generators(&[2, 4]), Err(NonCoprime(2)));
        assert_eq!(NumericalSemigroup::from_generators(&[]), Err(EmptyInput));
        assert_eq!(NumericalSemigroup::from_generators(&[3, 0]), Err(NonPositive(0)));
        assert!(matches!(
            NumericalSemigroup::with_max_frobenius(&[100, 101], 50),
            Err(FrobeniusTooLarge { .. })
        ));
        assert!(matches!(
            NumericalSemigroup::with_max_frobenius(&[10, 11], 50),
            Err(FrobeniusTooLarge { at_least: 89, .. })
        ));
    }

    #[test]
    fn membership_matches_reachability() {
        let h = sg(&[5, 6, 7]);
        assert!(!h.contains(8));
        assert!(h.contains(0));
        assert!(h.contains(13));
        assert!(!h.contains(-5));
        let r = reachable(&[5, 6, 7], 40);
        for (x, &reach) in r.iter().enumerate() {
            assert_eq!(h.contains(x as i64), reach, "x = {x}");
        }
    }

    #[test]
    fn apery_sets() {
        assert_eq!(sg(&[5, 6, 7]).apery(5).unwrap(), vec![0, 6, 7, 13, 14]);
        assert_eq!(sg(&[4, 5, 6, 7]).apery(4).unwrap(), vec![0, 5, 6, 7]);
        assert_eq!(sg(&[2, 3]).apery(2).unwrap(), vec![0, 3]);
        assert_eq!(sg(&[2, 3]).apery(1), Err(SemigroupError::NotAMember(1)));
        assert_eq!(sg(&[2, 3]).apery(0), Err(SemigroupError::NotAMember(0)));
    }

    #[test]
    fn invariants_of_examples() {
        let i = sg(&[5, 6, 7]).invariants();
        assert_eq!((i.frobenius, i.genus, i.n_of_h), (9, 6, 4));
        let i = sg(&[3, 7, 8]).invariants();
        assert_eq!((i.frobenius, i.genus, i.n_of_h), (5, 4, 2));
        assert_eq!(i.conductor_number, 6);
        let i = sg(&[2, 3]).invariants();
        assert_eq!((i.frobenius, i.genus, i.n_of_h), (1, 1, 1));
        assert!(i.has_minimal_multiplicity);
    }

    #[test]
    fn pseudo_frobenius_examples() {
        assert_eq!(sg(&[5, 6, 7]).pseudo_frobenius(), &[8, 9]);
        assert_eq!(sg(&[4, 5, 6, 7]).pseudo_frobenius(), &[1, 2, 3]);
        assert_eq!(sg(&[3, 4, 5]).pseudo_frobenius(), &[1, 2]);
        assert_eq!(sg(&[5, 6, 7]).type_number(), 2);
    }

    #[test]
    fn classification_examples() {
        assert!(sg(&[4, 5, 6]).classify().symmetric);
        let c = sg(&[3, 4, 5]).classify();
        assert!(c.pseudo_symmetric && c.almost_symmetric && !c.symmetric);
        assert!(!sg(&[5, 6, 7]).classify().almost_symmetric);
    }

    #[test]
    fn natural_numbers_are_admitted() {
        let n = sg(&[1, 5]);
        assert_eq!(n.generators(), &[1]);
        assert_eq!(n.frobenius(), -1);
        assert!(n.gaps().is_empty());
        assert_eq!(n.pseudo_frobenius(), &[-1]);
        assert!(n.classify().symmetric);
        assert_eq!(n.invariants().n_of_h, 0);
    }
}
