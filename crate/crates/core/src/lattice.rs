//! Finite posets and lattices: order queries, joins and meets, intervals,
//! product-decomposition tests, Cartesian and free products, atoms.
//!
//! Elements are opaque string labels; all algorithms work on indices. The
//! order relation is stored as a precomputed reachability bitset per element,
//! which is fine at the few-hundred-element scale this crate targets.

use crate::util::Bits;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("cycle in cover relations")]
    CycleInCovers,
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("poset has no unique bottom or top element")]
    NoBottomOrTop,
    #[error("not a lattice: elements {0} and {1} lack a unique least upper bound or greatest lower bound")]
    NotALattice(String, String),
    #[error("elements {0} and {1} are not comparable")]
    NotComparable(String, String),
    #[error("part {0} is not below {1}")]
    PartNotBelowY(String, String),
}

/// A finite poset given by labels and a transitively reduced cover relation.
#[derive(Clone, Debug)]
pub struct FinitePoset {
    pub labels: Vec<String>,
    pub covers: Vec<(usize, usize)>,
    /// below[i] = { j : j <= i } (including i itself)
    below: Vec<Bits>,
}

impl FinitePoset {
    /// Builds a poset from arbitrary (acyclic) relation pairs; the stored
    /// cover relation is the transitive reduction.
    pub fn from_relations(
        labels: Vec<String>,
        relations: &[(usize, usize)],
    ) -> Result<FinitePoset, LatticeError> {
        let n = labels.len();
        // Transitive closure over bitsets of strict successors.
        let mut up: Vec<Bits> = vec![Bits::new(n); n];
        for &(a, b) in relations {
            if a == b {
                return Err(LatticeError::CycleInCovers);
            }
            up[a].set(b);
        }
        loop {
            let mut changed = false;
            for i in 0..n {
                let succ: Vec<usize> = up[i].iter().collect();
                let before = up[i].count();
                for s in succ {
                    let other = up[s].clone();
                    up[i].or_with(&other);
                }
                if up[i].count() != before {
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for (i, u) in up.iter().enumerate() {
            if u.get(i) {
                return Err(LatticeError::CycleInCovers);
            }
        }
        let mut below = vec![Bits::new(n); n];
        for i in 0..n {
            below[i].set(i);
        }
        for (i, u) in up.iter().enumerate() {
            for j in u.iter() {
                below[j].set(i);
            }
        }
        FinitePoset::from_below(labels, below)
    }

    /// Builds a poset from precomputed reflexive down-sets, deriving the
    /// cover relation.
    pub fn from_below(labels: Vec<String>, below: Vec<Bits>) -> Result<FinitePoset, LatticeError> {
        let n = labels.len();
        {
            let mut seen = BTreeSet::new();
            for l in &labels {
                if !seen.insert(l) {
                    return Err(LatticeError::DuplicateLabel(l.clone()));
                }
            }
        }
        let mut above = vec![Bits::new(n); n];
        for (b, bel) in below.iter().enumerate() {
            for a in bel.iter() {
                above[a].set(b);
            }
        }
        // a is covered by b iff a < b and nothing in below[b] sits strictly
        // between them: above[a] meet below[b] = {a, b}.
        let mut covers = Vec::new();
        for b in 0..n {
            for a in below[b].iter() {
                if a != b && above[a].intersection_count(&below[b]) == 2 {
                    covers.push((a, b));
                }
            }
        }
        covers.sort_unstable();
        Ok(FinitePoset { labels, covers, below })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b].get(a)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn index_of(&self, label: &str) -> Result<usize, LatticeError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| LatticeError::UnknownLabel(label.to_string()))
    }

    pub fn down_set(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.below[a].iter()
    }

    pub fn minimals(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.below[i].count() == 1).collect()
    }

    pub fn maximals(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| !self.lt(i, j)))
            .collect()
    }

    /// Maximal elements of a subset of element indices.
    pub fn max_of(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set
            .iter()
            .copied()
            .filter(|&i| !set.iter().any(|&j| self.lt(i, j)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Brute-force poset isomorphism test with degree/level invariants.
    /// Intended for small posets (tests and certification).
    pub fn is_isomorphic(&self, other: &FinitePoset) -> bool {
        if self.len() != other.len() || self.covers.len() != other.covers.len() {
            return false;
        }
        let n = self.len();
        let inv = |p: &FinitePoset| -> Vec<(usize, usize, usize)> {
            (0..n)
                .map(|i| {
                    let down = p.below[i].count();
                    let up = (0..n).filter(|&j| p.leq(i, j)).count();
                    let cov = p.covers.iter().filter(|&&(a, b)| a == i || b == i).count();
                    (down, up, cov)
                })
                .collect()
        };
        let ia = inv(self);
        let ib = inv(other);
        {
            let mut sa = ia.clone();
            let mut sb = ib.clone();
            sa.sort_unstable();
            sb.sort_unstable();
            if sa != sb {
                return false;
            }
        }
        // Backtracking on candidates grouped by invariant.
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn extend(
            i: usize,
            n: usize,
            a: &FinitePoset,
            b: &FinitePoset,
            ia: &[(usize, usize, usize)],
            ib: &[(usize, usize, usize)],
            map: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            if i == n {
                return true;
            }
            for cand in 0..n {
                if used[cand] || ia[i] != ib[cand] {
                    continue;
                }
                let ok = (0..i).all(|j| {
                    a.leq(j, i) == b.leq(map[j], cand) && a.leq(i, j) == b.leq(cand, map[j])
                });
                if ok {
                    map[i] = cand;
                    used[cand] = true;
                    if extend(i + 1, n, a, b, ia, ib, map, used) {
                        return true;
                    }
                    used[cand] = false;
                    map[i] = usize::MAX;
                }
            }
            false
        }
        extend(0, n, self, other, &ia, &ib, &mut map, &mut used)
    }
}

/// A finite lattice: a poset in which every pair of elements has a unique
/// least upper bound and greatest lower bound, with global bottom and top.
#[derive(Clone, Debug)]
pub struct FiniteLattice {
    pub poset: FinitePoset,
    pub bottom: usize,
    pub top: usize,
    join: Vec<u32>,
    meet: Vec<u32>,
}

impl FiniteLattice {
    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.poset.lt(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.poset.comparable(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b] as usize
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b] as usize
    }

    pub fn join_all<I: IntoIterator<Item = usize>>(&self, it: I) -> usize {
        it.into_iter().fold(self.bottom, |a, b| self.join(a, b))
    }

    pub fn label(&self, i: usize) -> &str {
        &self.poset.labels[i]
    }

    /// Elements covering the bottom.
    pub fn atoms(&self) -> Vec<usize> {
        self.poset
            .covers
            .iter()
            .filter(|&&(a, _)| a == self.bottom)
            .map(|&(_, b)| b)
            .collect()
    }

    /// Atoms below `x`; empty for the bottom element.
    pub fn atoms_below(&self, x: usize) -> Vec<usize> {
        self.atoms().into_iter().filter(|&a| self.leq(a, x)).collect()
    }

    pub fn is_atomic(&self) -> bool {
        (0..self.len()).all(|x| x == self.bottom || self.join_all(self.atoms_below(x)) == x)
    }
}

/// Validates labels/covers as a finite lattice.
pub fn from_covers(
    labels: Vec<String>,
    covers: &[(usize, usize)],
) -> Result<FiniteLattice, LatticeError> {
    let poset = FinitePoset::from_relations(labels, covers)?;
    lattice_from_poset(poset)
}

pub fn from_labelled_covers(
    labels: Vec<String>,
    covers: &[(String, String)],
) -> Result<FiniteLattice, LatticeError> {
    let idx: BTreeMap<&str, usize> =
        labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let mut pairs = Vec::new();
    for (a, b) in covers {
        let &ia = idx.get(a.as_str()).ok_or_else(|| LatticeError::UnknownLabel(a.clone()))?;
        let &ib = idx.get(b.as_str()).ok_or_else(|| LatticeError::UnknownLabel(b.clone()))?;
        pairs.push((ia, ib));
    }
    from_covers(labels, &pairs)
}

pub fn lattice_from_poset(poset: FinitePoset) -> Result<FiniteLattice, LatticeError> {
    let n = poset.len();
    if n == 0 {
        return Err(LatticeError::NoBottomOrTop);
    }
    let mins = poset.minimals();
    let maxs = poset.maximals();
    if mins.len() != 1 || maxs.len() != 1 {
        return Err(LatticeError::NoBottomOrTop);
    }
    let (bottom, top) = (mins[0], maxs[0]);
    let mut join = vec![0u32; n * n];
    let mut meet = vec![0u32; n * n];
    for a in 0..n {
        for b in a..n {
            let uppers: Vec<usize> =
                (0..n).filter(|&c| poset.leq(a, c) && poset.leq(b, c)).collect();
            let min_uppers = minimal_of(&poset, &uppers);
            let lowers: Vec<usize> =
                (0..n).filter(|&c| poset.leq(c, a) && poset.leq(c, b)).collect();
            let max_lowers = poset.max_of(&lowers);
            if min_uppers.len() != 1 || max_lowers.len() != 1 {
                return Err(LatticeError::NotALattice(
                    poset.labels[a].clone(),
                    poset.labels[b].clone(),
                ));
            }
            join[a * n + b] = min_uppers[0] as u32;
            join[b * n + a] = min_uppers[0] as u32;
            meet[a * n + b] = max_lowers[0] as u32;
            meet[b * n + a] = max_lowers[0] as u32;
        }
    }
    Ok(FiniteLattice { poset, bottom, top, join, meet })
}

fn minimal_of(poset: &FinitePoset, set: &[usize]) -> Vec<usize> {
    set.iter().copied().filter(|&i| !set.iter().any(|&j| poset.lt(j, i))).collect()
}

/// The unique least upper bound and greatest lower bound of a pair.
pub fn lub_glb(l: &FiniteLattice, x: usize, y: usize) -> (usize, usize) {
    (l.join(x, y), l.meet(x, y))
}

/// The induced lattice on `[x, y]`, with the element map back to `l`.
pub fn interval(
    l: &FiniteLattice,
    x: usize,
    y: usize,
) -> Result<(FiniteLattice, Vec<usize>), LatticeError> {
    if !l.leq(x, y) {
        return Err(LatticeError::NotComparable(
            l.label(x).to_string(),
            l.label(y).to_string(),
        ));
    }
    let elems: Vec<usize> = (0..l.len()).filter(|&z| l.leq(x, z) && l.leq(z, y)).collect();
    let sub = induced_lattice(l, &elems)?;
    Ok((sub, elems))
}

/// The induced sub-order on a set of elements, validated as a lattice.
pub fn induced_lattice(l: &FiniteLattice, elems: &[usize]) -> Result<FiniteLattice, LatticeError> {
    let labels: Vec<String> = elems.iter().map(|&e| l.label(e).to_string()).collect();
    let mut rels = Vec::new();
    for (i, &a) in elems.iter().enumerate() {
        for (j, &b) in elems.iter().enumerate() {
            if i != j && l.lt(a, b) {
                rels.push((i, j));
            }
        }
    }
    let poset = FinitePoset::from_relations(labels, &rels)?;
    lattice_from_poset(poset)
}

/// Checks the product decomposition of the lower interval below `y`: the join
/// map from the product of the lower intervals of the parts onto the lower
/// interval of `y` must be a bijection preserving and reflecting order.
pub fn product_decomposes(
    l: &FiniteLattice,
    y: usize,
    parts: &[usize],
) -> Result<bool, LatticeError> {
    for &b in parts {
        if !l.leq(b, y) {
            return Err(LatticeError::PartNotBelowY(
                l.label(b).to_string(),
                l.label(y).to_string(),
            ));
        }
    }
    let below_y: Vec<usize> = (0..l.len()).filter(|&z| l.leq(z, y)).collect();
    let factor: Vec<Vec<usize>> = parts
        .iter()
        .map(|&b| (0..l.len()).filter(|&z| l.leq(z, b)).collect())
        .collect();
    let size: usize = factor.iter().map(|f| f.len()).product();
    if size != below_y.len() {
        return Ok(false);
    }
    // Enumerate all tuples, computing joins.
    let mut tuples: Vec<(Vec<usize>, usize)> = Vec::with_capacity(size);
    let mut idx = vec![0usize; parts.len()];
    loop {
        let tuple: Vec<usize> = idx.iter().zip(&factor).map(|(&i, f)| f[i]).collect();
        let j = l.join_all(tuple.iter().copied());
        tuples.push((tuple, j));
        // advance
        let mut k = 0;
        loop {
            if k == parts.len() {
                break;
            }
            idx[k] += 1;
            if idx[k] < factor[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == parts.len() {
            break;
        }
    }
    // Bijectivity onto the lower interval of y.
    let mut seen = BTreeSet::new();
    for (_, j) in &tuples {
        if !l.leq(*j, y) || !seen.insert(*j) {
            return Ok(false);
        }
    }
    // Order isomorphism in both directions.
    for (ta, ja) in &tuples {
        for (tb, jb) in &tuples {
            let comp = ta.iter().zip(tb).all(|(&a, &b)| l.leq(a, b));
            if comp != l.leq(*ja, *jb) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Componentwise product lattice; labels are `(a|b)`.
pub fn cartesian_product(l: &FiniteLattice, m: &FiniteLattice) -> FiniteLattice {
    let mut labels = Vec::new();
    let mut rels = Vec::new();
    let index = |a: usize, b: usize| a * m.len() + b;
    for a in 0..l.len() {
        for b in 0..m.len() {
            labels.push(format!("({}|{})", l.label(a), m.label(b)));
        }
    }
    for a in 0..l.len() {
        for b in 0..m.len() {
            for a2 in 0..l.len() {
                for b2 in 0..m.len() {
                    if (a, b) != (a2, b2) && l.leq(a, a2) && m.leq(b, b2) {
                        rels.push((index(a, b), index(a2, b2)));
                    }
                }
            }
        }
    }
    let poset = FinitePoset::from_relations(labels, &rels).expect("product of posets is a poset");
    lattice_from_poset(poset).expect("product of lattices is a lattice")
}

/// Cartesian product of the lattices minus their tops, plus a new top.
pub fn free_product(l: &FiniteLattice, m: &FiniteLattice) -> FiniteLattice {
    let ls: Vec<usize> = (0..l.len()).filter(|&a| a != l.top).collect();
    let ms: Vec<usize> = (0..m.len()).filter(|&b| b != m.top).collect();
    let mut labels = Vec::new();
    let index = |ai: usize, bi: usize| ai * ms.len() + bi;
    for &a in &ls {
        for &b in &ms {
            labels.push(format!("({}|{})", l.label(a), m.label(b)));
        }
    }
    let top_idx = labels.len();
    labels.push("(top)".to_string());
    let mut rels = Vec::new();
    for (ai, &a) in ls.iter().enumerate() {
        for (bi, &b) in ms.iter().enumerate() {
            rels.push((index(ai, bi), top_idx));
            for (ai2, &a2) in ls.iter().enumerate() {
                for (bi2, &b2) in ms.iter().enumerate() {
                    if (ai, bi) != (ai2, bi2) && l.leq(a, a2) && m.leq(b, b2) {
                        rels.push((index(ai, bi), index(ai2, bi2)));
                    }
                }
            }
        }
    }
    let poset = FinitePoset::from_relations(labels, &rels).expect("free product poset");
    lattice_from_poset(poset).expect("free product of lattices is a lattice")
}

/// The boolean lattice on ground labels; element labels are subset renderings.
pub fn boolean_lattice(ground: &[String]) -> FiniteLattice {
    let n = ground.len();
    assert!(n <= 16, "boolean lattice materialization is for small grounds");
    let labels: Vec<String> = (0..1u64 << n)
        .map(|m| crate::util::Subset(m).label(ground))
        .map(|s| if s.is_empty() { "{}".to_string() } else { s })
        .collect();
    let mut covers = Vec::new();
    for m in 0..1u64 << n {
        for i in 0..n {
            if m >> i & 1 == 0 {
                covers.push((m as usize, (m | 1 << i) as usize));
            }
        }
    }
    from_covers(labels, &covers).expect("boolean lattice")
}

/// An order-preserving map between lattices, used for nested complex
/// embeddings.
#[derive(Clone, Debug)]
pub struct IntervalMap {
    pub source: FiniteLattice,
    pub target: FiniteLattice,
    pub mapping: Vec<usize>,
}

impl IntervalMap {
    pub fn new(source: FiniteLattice, target: FiniteLattice, mapping: Vec<usize>) -> IntervalMap {
        assert_eq!(mapping.len(), source.len());
        IntervalMap { source, target, mapping }
    }

    pub fn is_order_embedding(&self) -> bool {
        let n = self.source.len();
        let injective = {
            let mut seen = BTreeSet::new();
            self.mapping.iter().all(|&i| seen.insert(i))
        };
        injective
            && (0..n).all(|a| {
                (0..n).all(|b| {
                    self.source.leq(a, b) == self.target.leq(self.mapping[a], self.mapping[b])
                })
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(k: usize) -> FiniteLattice {
        let labels: Vec<String> = (0..k).map(|i| format!("c{i}")).collect();
        let covers: Vec<(usize, usize)> = (0..k - 1).map(|i| (i, i + 1)).collect();
        from_covers(labels, &covers).unwrap()
    }

    fn bool_on(labels: &[&str]) -> FiniteLattice {
        boolean_lattice(&labels.iter().map(|s| s.to_string()).collect::<Vec<_>>())
    }

    #[test]
    fn boolean_on_two_has_expected_shape() {
        let l = bool_on(&["1", "2"]);
        assert_eq!(l.len(), 4);
        assert_eq!(l.label(l.bottom), "{}");
        assert_eq!(l.label(l.top), "12");
        let a = l.poset.index_of("1").unwrap();
        let b = l.poset.index_of("2").unwrap();
        let (j, m) = lub_glb(&l, a, b);
        assert_eq!(l.label(j), "12");
        assert_eq!(m, l.bottom);
    }

    #[test]
    fn diamond_is_a_lattice_but_two_maxima_are_not() {
        let labels: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
        let covers = vec![(0, 1), (0, 2), (1, 3), (2, 3)];
        assert!(from_covers(labels.clone(), &covers).is_ok());
        let no_top = vec![(0, 1), (0, 2), (1, 3)];
        assert_eq!(from_covers(labels, &no_top).unwrap_err(), LatticeError::NoBottomOrTop);
    }

    #[test]
    fn bowtie_fails_lattice_validation() {
        // b and c have two minimal common upper bounds.
        let labels: Vec<String> =
            ["bot", "b", "c", "x", "y", "top"].iter().map(|s| s.to_string()).collect();
        let covers = vec![(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 5), (4, 5)];
        assert!(matches!(from_covers(labels, &covers), Err(LatticeError::NotALattice(_, _))));
    }

    #[test]
    fn idempotent_lub() {
        let l = bool_on(&["1", "2", "3"]);
        for x in 0..l.len() {
            assert_eq!(lub_glb(&l, x, x), (x, x));
        }
    }

    #[test]
    fn exm_rank_two_lattice_join_of_one_and_four() {
        // The four-cycle face lattice with pair faces 12, 23, 34, 14.
        let labels: Vec<String> = ["e", "1", "2", "3", "4", "12", "23", "34", "14", "1234"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let covers = vec![
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 5),
            (2, 5),
            (2, 6),
            (3, 6),
            (3, 7),
            (4, 7),
            (1, 8),
            (4, 8),
            (5, 9),
            (6, 9),
            (7, 9),
            (8, 9),
        ];
        let l = from_covers(labels, &covers).unwrap();
        let one = l.poset.index_of("1").unwrap();
        let four = l.poset.index_of("4").unwrap();
        assert_eq!(l.label(l.join(one, four)), "14");
    }

    #[test]
    fn interval_of_boolean_is_boolean() {
        let l = bool_on(&["1", "2", "3"]);
        let x = l.poset.index_of("{}").unwrap();
        let y = l.poset.index_of("12").unwrap();
        let (sub, _) = interval(&l, x, y).unwrap();
        assert!(sub.poset.is_isomorphic(&bool_on(&["1", "2"]).poset));
        let (whole, _) = interval(&l, l.bottom, l.top).unwrap();
        assert!(whole.poset.is_isomorphic(&l.poset));
        assert!(matches!(interval(&l, y, x), Err(LatticeError::NotComparable(_, _))));
    }

    #[test]
    fn product_decomposition_in_boolean() {
        let l = bool_on(&["1", "2", "3"]);
        let y = l.top;
        let p1 = l.poset.index_of("1").unwrap();
        let p23 = l.poset.index_of("23").unwrap();
        assert!(product_decomposes(&l, y, &[p1, p23]).unwrap());
        let y12 = l.poset.index_of("12").unwrap();
        assert!(!product_decomposes(&l, y12, &[p1]).unwrap());
        assert!(product_decomposes(&l, y12, &[y12]).unwrap());
        assert!(matches!(
            product_decomposes(&l, p1, &[y12]),
            Err(LatticeError::PartNotBelowY(_, _))
        ));
    }

    #[test]
    fn chain_product_is_diamond() {
        let c2 = chain(2);
        let prod = cartesian_product(&c2, &c2);
        assert!(prod.poset.is_isomorphic(&bool_on(&["1", "2"]).poset));
        let single = chain(1);
        let id = cartesian_product(&c2, &single);
        assert!(id.poset.is_isomorphic(&c2.poset));
    }

    #[test]
    fn free_product_smallest_cases() {
        let c2 = chain(2);
        let fp = free_product(&c2, &c2);
        assert!(fp.poset.is_isomorphic(&chain(2).poset));
        // Two two-element lattices: one interior point from each factor is
        // dropped, so only the pair of bottoms plus a new top survive.
        let b1 = bool_on(&["1"]);
        let b2 = bool_on(&["2"]);
        assert!(free_product(&b1, &b2).poset.is_isomorphic(&chain(2).poset));
    }

    #[test]
    fn atoms_below_boolean() {
        let l = bool_on(&["1", "2", "3"]);
        let x = l.poset.index_of("13").unwrap();
        let atoms: Vec<&str> = l.atoms_below(x).iter().map(|&a| l.label(a)).collect();
        assert_eq!(atoms, vec!["1", "3"]);
        assert!(l.atoms_below(l.bottom).is_empty());
        assert!(l.is_atomic());
    }

    #[test]
    fn commutativity_and_associativity_of_join() {
        let l = bool_on(&["1", "2", "3"]);
        for a in 0..l.len() {
            for b in 0..l.len() {
                assert_eq!(lub_glb(&l, a, b), lub_glb(&l, b, a));
                for c in 0..l.len() {
                    assert_eq!(l.join(l.join(a, b), c), l.join(a, l.join(b, c)));
                }
            }
        }
    }
}
