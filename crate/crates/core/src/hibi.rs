//! Finite posets and the Gorenstein / nearly Gorenstein criteria for their
//! Hibi rings, which are purely combinatorial.
//!
//! Path lengths are counted along cover relations. A maximal chain runs from
//! a minimal element to a maximal one, so purity only needs the shortest and
//! longest such paths, computed in one pass over a topological order.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("cover relation has a cycle through {0:?}")]
    CycleDetected(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("malformed poset input: {0}")]
    MalformedInput(String),
    #[error("the poset is empty")]
    EmptyPoset,
    #[error("more than {0} poset ideals")]
    CapExceeded(u64),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoset {
    elements: Vec<String>,
    covers: Vec<(String, String)>,
}

/// A poset stored as its Hasse diagram. Elements are indexed `0..len` in a
/// topological order of the input; labels are kept for display.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    /// `up[x]`: elements covering `x`.
    up: Vec<Vec<usize>>,
    /// `down[x]`: elements covered by `x`.
    down: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedPoset {
    pub poset: FinitePoset,
    pub warnings: Vec<String>,
}

/// Reads `{"elements": [...], "covers": [[lower, upper], ...]}`.
pub fn parse_poset(input: &str) -> Result<ParsedPoset, PosetError> {
    let raw: RawPoset =
        serde_json::from_str(input).map_err(|e| PosetError::MalformedInput(e.to_string()))?;
    let pairs: Vec<(&str, &str)> = raw
        .covers
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    FinitePoset::from_relations(&raw.elements, &pairs)
}

impl FinitePoset {
    /// Builds the poset generated by `lower < upper` for each pair. Covers
    /// implied by others are dropped and reported in the warnings.
    pub fn from_relations<S: AsRef<str>>(
        elements: &[S],
        relations: &[(&str, &str)],
    ) -> Result<ParsedPoset, PosetError> {
        let mut index = BTreeMap::new();
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.as_ref().to_string(), i).is_some() {
                return Err(PosetError::DuplicateLabel(e.as_ref().to_string()));
            }
        }
        let n = elements.len();
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| PosetError::MalformedInput(format!("unknown label {s:?}")))
        };
        let mut warnings = Vec::new();
        let mut edges = BTreeSet::new();
        for &(a, b) in relations {
            let (i, j) = (lookup(a)?, lookup(b)?);
            if i == j {
                return Err(PosetError::CycleDetected(a.to_string()));
            }
            if !edges.insert((i, j)) {
                warnings.push(format!("repeated cover {a} < {b}"));
            }
        }
        let mut succ = vec![Vec::new(); n];
        for &(i, j) in &edges {
            succ[i].push(j);
        }
        let order = topological_order(&succ).map_err(|x| {
            PosetError::CycleDetected(elements[x].as_ref().to_string())
        })?;

        // reach[x][y]: y > x
        let mut reach = vec![vec![false; n]; n];
        for &x in order.iter().rev() {
            for &y in &succ[x] {
                reach[x][y] = true;
                let (row_x, row_y) = if x < y {
                    let (lo, hi) = reach.split_at_mut(y);
                    (&mut lo[x], &hi[0])
                } else {
                    let (lo, hi) = reach.split_at_mut(x);
                    (&mut hi[0], &lo[y])
                };
                for (r, &s) in row_x.iter_mut().zip(row_y.iter()) {
                    *r |= s;
                }
            }
        }
        let mut kept = Vec::new();
        for &(i, j) in &edges {
            if succ[i].iter().any(|&k| k != j && reach[k][j]) {
                warnings.push(format!(
                    "cover {} < {} is implied by others and was dropped",
                    elements[i].as_ref(),
                    elements[j].as_ref()
                ));
            } else {
                kept.push((i, j));
            }
        }

        // renumber along the topological order
        let mut pos = vec![0; n];
        for (p, &x) in order.iter().enumerate() {
            pos[x] = p;
        }
        let labels = order.iter().map(|&x| elements[x].as_ref().to_string()).collect();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for (i, j) in kept {
            up[pos[i]].push(pos[j]);
            down[pos[j]].push(pos[i]);
        }
        for v in up.iter_mut().chain(down.iter_mut()) {
            v.sort_unstable();
        }
        Ok(ParsedPoset {
            poset: FinitePoset { labels, up, down },
            warnings,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Hasse diagram edges as label pairs.
    pub fn covers(&self) -> Vec<(&str, &str)> {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(i, ups)| {
                ups.iter()
                    .map(move |&j| (self.labels[i].as_str(), self.labels[j].as_str()))
            })
            .collect()
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    pub fn minimal_elements(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&x| self.down[x].is_empty())
    }

    pub fn maximal_elements(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&x| self.up[x].is_empty())
    }

    /// Disjoint union; labels of `other` get `suffix` appended.
    pub fn disjoint_union(&self, other: &FinitePoset, suffix: &str) -> FinitePoset {
        let shift = self.len();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|l| format!("{l}{suffix}")));
        let bump = |v: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            v.iter()
                .map(|xs| xs.iter().map(|x| x + shift).collect())
                .collect()
        };
        let mut up = self.up.clone();
        up.extend(bump(&other.up));
        let mut down = self.down.clone();
        down.extend(bump(&other.down));
        FinitePoset { labels, up, down }
    }

    /// Shortest and longest cover paths from a minimal element to each `x`.
    fn depth_from_below(&self) -> Vec<(usize, usize)> {
        // indices are already topologically sorted
        let mut d = vec![(0, 0); self.len()];
        for x in 0..self.len() {
            if let Some(lo) = self.down[x].iter().map(|&y| d[y].0 + 1).min() {
                let hi = self.down[x].iter().map(|&y| d[y].1 + 1).max().unwrap();
                d[x] = (lo, hi);
            }
        }
        d
    }

    fn depth_from_above(&self) -> Vec<(usize, usize)> {
        let mut d = vec![(0, 0); self.len()];
        for x in (0..self.len()).rev() {
            if let Some(lo) = self.up[x].iter().map(|&y| d[y].0 + 1).min() {
                let hi = self.up[x].iter().map(|&y| d[y].1 + 1).max().unwrap();
                d[x] = (lo, hi);
            }
        }
        d
    }

    /// Component index of each element, numbered by first appearance.
    fn component_ids(&self) -> (Vec<usize>, usize) {
        let mut id = vec![usize::MAX; self.len()];
        let mut count = 0;
        for start in 0..self.len() {
            if id[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            id[start] = count;
            while let Some(x) = stack.pop() {
                for &y in self.up[x].iter().chain(&self.down[x]) {
                    if id[y] == usize::MAX {
                        id[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        (id, count)
    }
}

fn topological_order(succ: &[Vec<usize>]) -> Result<Vec<usize>, usize> {
    let n = succ.len();
    let mut indeg = vec![0; n];
    for s in succ {
        for &y in s {
            indeg[y] += 1;
        }
    }
    let mut ready: Vec<usize> = (0..n).rev().filter(|&x| indeg[x] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(x) = ready.pop() {
        order.push(x);
        for &y in succ[x].iter().rev() {
            indeg[y] -= 1;
            if indeg[y] == 0 {
                ready.push(y);
            }
        }
    }
    if order.len() < n {
        return Err((0..n).find(|&x| indeg[x] > 0).unwrap());
    }
    Ok(order)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PosetStructure {
    /// Labels of each connected component.
    pub components: Vec<Vec<String>>,
    pub rank: usize,
    pub is_pure: bool,
    pub component_ranks: Vec<usize>,
    pub components_pure: Vec<bool>,
    /// Every `[−∞, a]` and `[a, +∞]` of the poset with a bottom and top
    /// adjoined is pure.
    pub interval_purity_ok: bool,
}

pub fn poset_structure(p: &FinitePoset) -> PosetStructure {
    let below = p.depth_from_below();
    let above = p.depth_from_above();
    let (id, count) = p.component_ids();
    let mut components = vec![Vec::new(); count];
    let mut ranks = vec![0; count];
    let mut pure = vec![true; count];
    let mut chain_lengths = vec![(usize::MAX, 0); count];
    for x in 0..p.len() {
        components[id[x]].push(p.labels[x].clone());
        ranks[id[x]] = ranks[id[x]].max(below[x].1);
        if p.up[x].is_empty() {
            let c = &mut chain_lengths[id[x]];
            c.0 = c.0.min(below[x].0);
            c.1 = c.1.max(below[x].1);
        }
    }
    for (c, &(lo, hi)) in chain_lengths.iter().enumerate() {
        pure[c] = lo == hi;
    }
    let rank = ranks.iter().copied().max().unwrap_or(0);
    let is_pure = pure.iter().all(|&b| b) && ranks.iter().all(|&r| r == rank);
    let interval_purity_ok = below.iter().all(|&(lo, hi)| lo == hi)
        && above.iter().all(|&(lo, hi)| lo == hi);
    PosetStructure {
        components,
        rank,
        is_pure,
        component_ranks: ranks,
        components_pure: pure,
        interval_purity_ok,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HibiClassification {
    pub gorenstein: bool,
    pub nearly_gorenstein: bool,
    pub a_invariant: i64,
}

/// Gorenstein iff pure; nearly Gorenstein iff every component is pure and
/// component ranks differ by at most one.
pub fn hibi_classify(p: &FinitePoset) -> Result<HibiClassification, PosetError> {
    if p.is_empty() {
        return Err(PosetError::EmptyPoset);
    }
    let s = poset_structure(p);
    let lo = s.component_ranks.iter().min().unwrap();
    let hi = s.component_ranks.iter().max().unwrap();
    let nearly_gorenstein = s.components_pure.iter().all(|&b| b) && hi - lo <= 1;
    let gorenstein = s.is_pure;
    assert!(!gorenstein || nearly_gorenstein);
    assert!(!nearly_gorenstein || s.interval_purity_ok);
    Ok(HibiClassification {
        gorenstein,
        nearly_gorenstein,
        a_invariant: -(s.rank as i64 + 2),
    })
}

/// Number of down-closed subsets, the empty one included.
pub fn count_poset_ideals(p: &FinitePoset, cap: u64) -> Result<u64, PosetError> {
    // decide elements in topological order; x may join only above its lower covers
    fn go(p: &FinitePoset, x: usize, chosen: &mut Vec<bool>, count: &mut u64, cap: u64) -> bool {
        if x == p.len() {
            *count += 1;
            return *count <= cap;
        }
        if !go(p, x + 1, chosen, count, cap) {
            return false;
        }
        if p.down[x].iter().all(|&y| chosen[y]) {
            chosen[x] = true;
            let ok = go(p, x + 1, chosen, count, cap);
            chosen[x] = false;
            return ok;
        }
        true
    }
    let mut count = 0;
    if go(p, 0, &mut vec![false; p.len()], &mut count, cap) {
        Ok(count)
    } else {
        Err(PosetError::CapExceeded(cap))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poset(elements: &[&str], covers: &[(&str, &str)]) -> FinitePoset {
        FinitePoset::from_relations(elements, covers).unwrap().poset
    }

    #[test]
    fn parse_and_reduce() {
        let p = parse_poset(r#"{"elements":["a","b","c"],"covers":[["a","b"],["b","c"]]}"#)
            .unwrap();
        assert!(p.warnings.is_empty());
        assert_eq!(poset_structure(&p.poset).rank, 2);

        let p = parse_poset(
            r#"{"elements":["a","b","c"],"covers":[["a","b"],["b","c"],["a","c"]]}"#,
        )
        .unwrap();
        assert_eq!(p.warnings.len(), 1);
        assert_eq!(p.poset.covers(), vec![("a", "b"), ("b", "c")]);
    }

    #[test]
    fn parse_errors() {
        let cyc = parse_poset(r#"{"elements":["a","b"],"covers":[["a","b"],["b","a"]]}"#);
        assert!(matches!(cyc, Err(PosetError::CycleDetected(_))));
        let dup = parse_poset(r#"{"elements":["a","a"],"covers":[]}"#);
        assert_eq!(dup, Err(PosetError::DuplicateLabel("a".into())));
        for bad in [
            r#"{"elements":["a"],"covers":[["a","z"]]}"#,
            r#"{"elements":["a"]}"#,
            r#"[1,2]"#,
            r#"{"elements":["a"],"covers":[],"extra":1}"#,
        ] {
            assert!(matches!(parse_poset(bad), Err(PosetError::MalformedInput(_))), "{bad}");
        }
    }

    #[test]
    fn structure_examples() {
        let two = poset(&["a", "b", "c", "d", "e"], &[("a", "b"), ("b", "c"), ("d", "e")]);
        let s = poset_structure(&two);
        assert_eq!(s.components.len(), 2);
        assert_eq!(s.component_ranks, vec![2, 1]);
        assert!(!s.is_pure && s.components_pure == vec![true, true]);
        let c = hibi_classify(&two).unwrap();
        assert!(c.nearly_gorenstein && !c.gorenstein);
        assert_eq!(c.a_invariant, -4);

        let n = poset(&["a", "b", "c", "d"], &[("a", "c"), ("b", "c"), ("b", "d")]);
        let s = poset_structure(&n);
        assert!(s.is_pure && s.rank == 1 && s.components.len() == 1);

        let gap = poset(
            &["a", "b", "c", "x", "d", "e"],
            &[("a", "b"), ("b", "c"), ("c", "x"), ("d", "e")],
        );
        assert!(!hibi_classify(&gap).unwrap().nearly_gorenstein);

        let anti = poset(&["a", "b", "c"], &[]);
        let c = hibi_classify(&anti).unwrap();
        assert!(c.gorenstein && c.a_invariant == -2);
        assert_eq!(hibi_classify(&poset(&[], &[])), Err(PosetError::EmptyPoset));
    }

    #[test]
    fn impure_interval() {
        // a < b < d and a < d' … : two paths of different length into d
        let p = poset(&["a", "b", "c", "d"], &[("a", "b"), ("b", "d"), ("c", "d")]);
        let s = poset_structure(&p);
        assert!(!s.is_pure && !s.interval_purity_ok);
        assert!(!hibi_classify(&p).unwrap().nearly_gorenstein);
    }

    #[test]
    fn ideal_counts() {
        let chain = poset(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert_eq!(count_poset_ideals(&chain, 100), Ok(4));
        assert_eq!(count_poset_ideals(&poset(&["a", "b", "c"], &[]), 100), Ok(8));
        let mixed = poset(&["a", "b", "c"], &[("a", "b")]);
        assert_eq!(count_poset_ideals(&mixed, 100), Ok(6));
        assert_eq!(count_poset_ideals(&mixed, 5), Err(PosetError::CapExceeded(5)));
        assert_eq!(count_poset_ideals(&poset(&[], &[]), 1), Ok(1));
    }
}
