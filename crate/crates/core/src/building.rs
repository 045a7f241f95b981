//! Building sets over boolean and arbitrary finite lattices: building
//! closure, nested sets and nested complexes, restriction and contraction,
//! links, combinatorial blow-ups, and direct/free sums.
//!
//! Boolean building sets get a dedicated bitmask representation; the generic
//! lattice path doubles as the oracle for it on small grounds.

use crate::lattice::{self, FiniteLattice, FinitePoset, LatticeError};
use crate::util::Subset;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildingError {
    #[error("block `{0}` required for lattice-mode restriction/contraction")]
    BlockRequired(String),
    #[error("set is not a subset of the blocks")]
    NotASubsetOfBlocks,
    #[error("set is not nested")]
    NotNested,
    #[error("element `{0}` missing from the semilattice")]
    ElementMissing(String),
    #[error("blow-up sequence violates the larger-first ordering at position {0}")]
    BadOrder(usize),
    #[error("free sum requires connected building sets")]
    NotConnected,
    #[error("blocks must lie strictly above the bottom element")]
    BlockAtBottom,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

// ---------------------------------------------------------------------------
// Simplicial complexes
// ---------------------------------------------------------------------------

/// A simplicial complex on labelled vertices. All faces are stored, the
/// facets are derived; the empty face is always present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    pub vertices: Vec<String>,
    pub faces: BTreeSet<Vec<u16>>,
}

impl SimplicialComplex {
    pub fn new(vertices: Vec<String>, faces: BTreeSet<Vec<u16>>) -> SimplicialComplex {
        let mut faces = faces;
        faces.insert(Vec::new());
        let c = SimplicialComplex { vertices, faces };
        debug_assert!(c.is_closed_under_subsets());
        c
    }

    /// Builds from the family of faces given as vertex-label sets.
    pub fn from_label_faces(faces: &BTreeSet<BTreeSet<String>>) -> SimplicialComplex {
        let vertices: Vec<String> =
            faces.iter().flatten().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let index: BTreeMap<&String, u16> =
            vertices.iter().enumerate().map(|(i, v)| (v, i as u16)).collect();
        let mut out = BTreeSet::new();
        for f in faces {
            let mut v: Vec<u16> = f.iter().map(|l| index[l]).collect();
            v.sort_unstable();
            out.insert(v);
        }
        SimplicialComplex::new(vertices, out)
    }

    fn is_closed_under_subsets(&self) -> bool {
        self.faces.iter().all(|f| {
            (0..f.len()).all(|i| {
                let mut sub = f.clone();
                sub.remove(i);
                self.faces.contains(&sub)
            })
        })
    }

    pub fn facets(&self) -> Vec<Vec<u16>> {
        self.faces
            .iter()
            .filter(|f| {
                !(0..self.vertices.len() as u16).any(|v| {
                    if f.contains(&v) {
                        return false;
                    }
                    let mut bigger = (*f).clone();
                    bigger.push(v);
                    bigger.sort_unstable();
                    self.faces.contains(&bigger)
                })
            })
            .cloned()
            .collect()
    }

    pub fn dim(&self) -> i64 {
        self.faces.iter().map(|f| f.len() as i64 - 1).max().unwrap_or(-1)
    }

    /// Face counts by dimension, starting with the empty face at index 0.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut f = vec![0u64; (self.dim() + 2) as usize];
        for face in &self.faces {
            f[face.len()] += 1;
        }
        f
    }

    /// Faces as sets of vertex labels, for label-preserving comparisons.
    pub fn label_faces(&self) -> BTreeSet<BTreeSet<String>> {
        self.faces
            .iter()
            .map(|f| f.iter().map(|&v| self.vertices[v as usize].clone()).collect())
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        let f = self.f_vector();
        f.iter()
            .skip(1)
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn is_pure(&self) -> bool {
        let facets = self.facets();
        facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Every codimension-one face of a facet lies in exactly two facets
    /// (trivially true in dimension -1).
    pub fn is_pseudomanifold(&self) -> bool {
        if !self.is_pure() {
            return false;
        }
        let facets = self.facets();
        if self.dim() < 0 {
            return true;
        }
        let mut ridge_count: BTreeMap<Vec<u16>, usize> = BTreeMap::new();
        for f in &facets {
            for i in 0..f.len() {
                let mut r = f.clone();
                r.remove(i);
                *ridge_count.entry(r).or_insert(0) += 1;
            }
        }
        ridge_count.values().all(|&c| c == 2)
    }

    /// Euler characteristic test for a sphere of the complex's dimension.
    pub fn has_sphere_euler_characteristic(&self) -> bool {
        let d = self.dim();
        if d < 0 {
            return self.faces.len() == 1;
        }
        let expected = if d % 2 == 0 { 2 } else { 0 };
        self.euler_characteristic() == expected
    }

    /// The link of a face, on the same vertex labels.
    pub fn link(&self, face: &[u16]) -> Option<SimplicialComplex> {
        let f: Vec<u16> = {
            let mut v = face.to_vec();
            v.sort_unstable();
            v
        };
        if !self.faces.contains(&f) {
            return None;
        }
        let fs: BTreeSet<u16> = f.iter().copied().collect();
        let mut out = BTreeSet::new();
        for g in &self.faces {
            if g.iter().any(|v| fs.contains(v)) {
                continue;
            }
            let mut merged: Vec<u16> = g.iter().chain(f.iter()).copied().collect();
            merged.sort_unstable();
            if self.faces.contains(&merged) {
                out.insert(g.clone());
            }
        }
        Some(SimplicialComplex::new(self.vertices.clone(), out))
    }

    /// Join of two complexes on disjoint vertex label sets.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let mut vertices: Vec<String> = self.vertices.clone();
        vertices.extend(other.vertices.iter().cloned());
        let shift = self.vertices.len() as u16;
        let mut faces = BTreeSet::new();
        for a in &self.faces {
            for b in &other.faces {
                let mut f = a.clone();
                f.extend(b.iter().map(|&v| v + shift));
                faces.insert(f);
            }
        }
        SimplicialComplex::new(vertices, faces)
    }

    /// Isomorphism as abstract complexes: searches for a vertex bijection
    /// carrying faces onto faces, pruning with per-vertex face-size counts.
    pub fn is_isomorphic(&self, other: &SimplicialComplex) -> bool {
        if self.f_vector() != other.f_vector() {
            return false;
        }
        let va = self.active_vertices();
        let vb = other.active_vertices();
        if va.len() != vb.len() {
            return false;
        }
        let inv = |c: &SimplicialComplex, verts: &[u16]| -> Vec<Vec<usize>> {
            verts
                .iter()
                .map(|&v| {
                    let mut counts = vec![0usize; (c.dim() + 2) as usize];
                    for f in &c.faces {
                        if f.contains(&v) {
                            counts[f.len()] += 1;
                        }
                    }
                    counts
                })
                .collect()
        };
        let ia = inv(self, &va);
        let ib = inv(other, &vb);
        {
            let mut sa = ia.clone();
            let mut sb = ib.clone();
            sa.sort();
            sb.sort();
            if sa != sb {
                return false;
            }
        }
        let mut map: Vec<Option<u16>> = vec![None; va.len()];
        let mut used = vec![false; vb.len()];
        self.extend_iso(other, &va, &vb, &ia, &ib, 0, &mut map, &mut used)
    }

    fn active_vertices(&self) -> Vec<u16> {
        let mut seen: BTreeSet<u16> = BTreeSet::new();
        for f in &self.faces {
            seen.extend(f.iter().copied());
        }
        seen.into_iter().collect()
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_iso(
        &self,
        other: &SimplicialComplex,
        va: &[u16],
        vb: &[u16],
        ia: &[Vec<usize>],
        ib: &[Vec<usize>],
        i: usize,
        map: &mut Vec<Option<u16>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == va.len() {
            return true;
        }
        for (k, &cand) in vb.iter().enumerate() {
            if used[k] || ia[i] != ib[k] {
                continue;
            }
            map[i] = Some(cand);
            used[k] = true;
            // Faces fully inside the mapped vertex set must correspond.
            let mapped: BTreeMap<u16, u16> = (0..=i).map(|j| (va[j], map[j].unwrap())).collect();
            let ok = self.faces.iter().filter(|f| f.iter().all(|v| mapped.contains_key(v))).all(
                |f| {
                    let mut img: Vec<u16> = f.iter().map(|v| mapped[v]).collect();
                    img.sort_unstable();
                    other.faces.contains(&img)
                },
            );
            if ok && self.extend_iso(other, va, vb, ia, ib, i + 1, map, used) {
                return true;
            }
            map[i] = None;
            used[k] = false;
        }
        false
    }

    /// The face poset (including the empty face as bottom).
    pub fn face_poset(&self) -> FinitePoset {
        let faces: Vec<&Vec<u16>> = self.faces.iter().collect();
        let labels: Vec<String> = faces
            .iter()
            .map(|f| {
                let names: Vec<&str> =
                    f.iter().map(|&v| self.vertices[v as usize].as_str()).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        let mut rels = Vec::new();
        for (i, a) in faces.iter().enumerate() {
            for (j, b) in faces.iter().enumerate() {
                if i != j && a.iter().all(|v| b.contains(v)) {
                    rels.push((i, j));
                }
            }
        }
        FinitePoset::from_relations(labels, &rels).expect("face poset")
    }
}

/// Counts of faces by dimension, including the empty face at index -1.
pub fn f_vector(c: &SimplicialComplex) -> Vec<u64> {
    c.f_vector()
}

// ---------------------------------------------------------------------------
// Boolean building sets
// ---------------------------------------------------------------------------

/// A building set on a boolean lattice, stored as bitmask blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoolBuildingSet {
    pub ground: Vec<String>,
    pub blocks: BTreeSet<Subset>,
}

impl BoolBuildingSet {
    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn new(ground: Vec<String>, blocks: BTreeSet<Subset>) -> BoolBuildingSet {
        BoolBuildingSet { ground, blocks }
    }

    pub fn singletons(ground: Vec<String>) -> BoolBuildingSet {
        let blocks = (0..ground.len()).map(Subset::singleton).collect();
        BoolBuildingSet { ground, blocks }
    }

    pub fn complete(ground: Vec<String>) -> BoolBuildingSet {
        let n = ground.len();
        let blocks = (1..1u64 << n).map(Subset).collect();
        BoolBuildingSet { ground, blocks }
    }

    /// The graphical building set: all vertex sets inducing connected
    /// subgraphs of the given graph (edges as index pairs).
    pub fn graphical(ground: Vec<String>, edges: &[(usize, usize)]) -> BoolBuildingSet {
        let n = ground.len();
        let mut blocks = BTreeSet::new();
        for m in 1..1u64 << n {
            let s = Subset(m);
            if subset_connected(s, edges) {
                blocks.insert(s);
            }
        }
        BoolBuildingSet { ground, blocks }
    }

    /// Singleton containment plus intersecting-union closure.
    pub fn is_building_set(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| self.blocks.contains(&Subset::singleton(i)))
            && self
                .blocks
                .iter()
                .all(|&b| {
                    self.blocks
                        .iter()
                        .all(|&c| !b.intersects(c) || self.blocks.contains(&b.union(c)))
                })
            && !self.blocks.contains(&Subset::EMPTY)
    }

    /// Maximal blocks (the connected components of the building set).
    pub fn components(&self) -> Vec<Subset> {
        self.blocks
            .iter()
            .copied()
            .filter(|&b| !self.blocks.iter().any(|&c| b != c && b.is_subset_of(c)))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Smallest building set containing the given sets: singletons plus the
    /// closure under unions of intersecting members.
    pub fn closure(ground: Vec<String>, seeds: &BTreeSet<Subset>) -> BoolBuildingSet {
        let n = ground.len();
        let mut blocks: BTreeSet<Subset> = (0..n).map(Subset::singleton).collect();
        blocks.extend(seeds.iter().copied().filter(|s| !s.is_empty()));
        loop {
            let mut add = Vec::new();
            let items: Vec<Subset> = blocks.iter().copied().collect();
            for (i, &a) in items.iter().enumerate() {
                for &b in &items[i + 1..] {
                    if a.intersects(b) {
                        let u = a.union(b);
                        if !blocks.contains(&u) {
                            add.push(u);
                        }
                    }
                }
            }
            if add.is_empty() {
                break;
            }
            blocks.extend(add);
        }
        BoolBuildingSet { ground, blocks }
    }

    /// Restriction to `r`: blocks inside `r`, on the ground `r`.
    pub fn restrict(&self, r: Subset) -> BoolBuildingSet {
        let ground = r.iter().map(|i| self.ground[i].clone()).collect();
        let blocks = self
            .blocks
            .iter()
            .copied()
            .filter(|b| b.is_subset_of(r))
            .map(|b| reindex(b, r))
            .collect();
        BoolBuildingSet { ground, blocks }
    }

    /// Contraction of `r`: differences of blocks not inside `r`, on the
    /// complement ground.
    pub fn contract(&self, r: Subset) -> BoolBuildingSet {
        let keep = Subset::full(self.n()).minus(r);
        let ground = keep.iter().map(|i| self.ground[i].clone()).collect();
        let blocks = self
            .blocks
            .iter()
            .copied()
            .filter(|b| !b.is_subset_of(r))
            .map(|b| reindex(b.minus(r), keep))
            .collect();
        BoolBuildingSet { ground, blocks }
    }

    /// Nested set test: contains the components, members pairwise nested or
    /// disjoint, and no union of two or more pairwise disjoint members is a
    /// block.
    pub fn is_nested(&self, set: &BTreeSet<Subset>) -> Result<bool, BuildingError> {
        if !set.iter().all(|b| self.blocks.contains(b)) {
            return Err(BuildingError::NotASubsetOfBlocks);
        }
        Ok(self.is_nested_unchecked(set))
    }

    pub(crate) fn is_nested_unchecked(&self, set: &BTreeSet<Subset>) -> bool {
        for c in self.components() {
            if !set.contains(&c) {
                return false;
            }
        }
        let items: Vec<Subset> = set.iter().copied().collect();
        for (i, &a) in items.iter().enumerate() {
            for &b in &items[i + 1..] {
                if a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a) {
                    return false;
                }
            }
        }
        let comps: BTreeSet<Subset> = self.components().into_iter().collect();
        let free: Vec<Subset> = items.iter().copied().filter(|b| !comps.contains(b)).collect();
        !has_disjoint_union_block(&free, 0, Subset::EMPTY, 0, &self.blocks)
    }

    /// All faces of the nested complex (nested sets minus the components).
    pub fn nested_complex(&self) -> SimplicialComplex {
        self.nested_complex_filtered(|_| true)
    }

    /// Nested complex restricted to faces accepted by `keep`; the filter
    /// must be monotone (subsets of accepted faces accepted).
    pub fn nested_complex_filtered(
        &self,
        keep: impl Fn(&[Subset]) -> bool,
    ) -> SimplicialComplex {
        let comp_set: BTreeSet<Subset> = self.components().into_iter().collect();
        let verts: Vec<Subset> =
            self.blocks.iter().copied().filter(|b| !comp_set.contains(b)).collect();
        let labels: Vec<String> = verts.iter().map(|b| b.label(&self.ground)).collect();
        let mut faces: BTreeSet<Vec<u16>> = BTreeSet::new();
        let mut cur: Vec<u16> = Vec::new();
        self.extend_nested(&verts, 0, &mut cur, &mut faces, &keep);
        SimplicialComplex::new(labels, faces)
    }

    fn extend_nested(
        &self,
        verts: &[Subset],
        from: usize,
        cur: &mut Vec<u16>,
        out: &mut BTreeSet<Vec<u16>>,
        keep: &impl Fn(&[Subset]) -> bool,
    ) {
        out.insert(cur.clone());
        for i in from..verts.len() {
            let cand = verts[i];
            let members: Vec<Subset> = cur.iter().map(|&k| verts[k as usize]).collect();
            if self.extension_keeps_nested(&members, cand) {
                let mut with: Vec<Subset> = members.clone();
                with.push(cand);
                if keep(&with) {
                    cur.push(i as u16);
                    self.extend_nested(verts, i + 1, cur, out, keep);
                    cur.pop();
                }
            }
        }
    }

    fn extension_keeps_nested(&self, members: &[Subset], cand: Subset) -> bool {
        for &m in members {
            if m.intersects(cand) && !m.is_subset_of(cand) && !cand.is_subset_of(m) {
                return false;
            }
        }
        // Only unions involving the candidate need checking; older unions
        // were checked when their faces were accepted.
        let disjoint: Vec<Subset> =
            members.iter().copied().filter(|m| !m.intersects(cand)).collect();
        !has_disjoint_union_block(&disjoint, 0, cand, 1, &self.blocks)
    }

    /// The lattice form of this building set over the materialized boolean
    /// lattice; only sensible on small grounds.
    pub fn to_lattice(&self) -> BuildingSet {
        let lat = lattice::boolean_lattice(&self.ground);
        let blocks = self
            .blocks
            .iter()
            .map(|&b| {
                let lbl = if b.is_empty() { "{}".to_string() } else { b.label(&self.ground) };
                lat.poset.index_of(&lbl).expect("block in boolean lattice")
            })
            .collect();
        BuildingSet { lattice: lat, blocks }
    }

    /// Direct sum on the disjoint union of the grounds.
    pub fn direct_sum(&self, other: &BoolBuildingSet) -> BoolBuildingSet {
        let mut ground = self.ground.clone();
        ground.extend(other.ground.iter().cloned());
        let shift = self.n();
        let mut blocks = self.blocks.clone();
        blocks.extend(other.blocks.iter().map(|b| Subset(b.0 << shift)));
        BoolBuildingSet { ground, blocks }
    }
}

/// Recursively checks whether some union of >= 2 pairwise disjoint members
/// (drawn from `items[from..]`, all disjoint from `acc`) together with `acc`
/// is a block. `picked` counts members already merged into `acc`.
fn has_disjoint_union_block(
    items: &[Subset],
    from: usize,
    acc: Subset,
    picked: usize,
    blocks: &BTreeSet<Subset>,
) -> bool {
    if picked >= 2 && blocks.contains(&acc) {
        return true;
    }
    for i in from..items.len() {
        if !items[i].intersects(acc)
            && has_disjoint_union_block(items, i + 1, acc.union(items[i]), picked + 1, blocks)
        {
            return true;
        }
    }
    false
}

fn reindex(b: Subset, within: Subset) -> Subset {
    let order: Vec<usize> = within.iter().collect();
    Subset::from_indices(
        b.iter().map(|i| order.iter().position(|&j| j == i).expect("member of ground")),
    )
}

pub fn subset_connected(s: Subset, edges: &[(usize, usize)]) -> bool {
    let verts: Vec<usize> = s.iter().collect();
    if verts.is_empty() {
        return false;
    }
    let mut seen = Subset::singleton(verts[0]);
    let mut frontier = vec![verts[0]];
    while let Some(v) = frontier.pop() {
        for &(a, b) in edges {
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if s.contains(w) && !seen.contains(w) {
                seen = seen.insert(w);
                frontier.push(w);
            }
        }
    }
    seen == s
}

// ---------------------------------------------------------------------------
// Lattice building sets
// ---------------------------------------------------------------------------

/// A building set over an arbitrary finite lattice.
#[derive(Clone, Debug)]
pub struct BuildingSet {
    pub lattice: FiniteLattice,
    pub blocks: BTreeSet<usize>,
}

impl BuildingSet {
    pub fn new(
        lattice: FiniteLattice,
        blocks: BTreeSet<usize>,
    ) -> Result<BuildingSet, BuildingError> {
        if blocks.contains(&lattice.bottom) {
            return Err(BuildingError::BlockAtBottom);
        }
        Ok(BuildingSet { lattice, blocks })
    }

    pub fn maximal(lattice: FiniteLattice) -> BuildingSet {
        let blocks = (0..lattice.len()).filter(|&x| x != lattice.bottom).collect();
        BuildingSet { lattice, blocks }
    }

    pub fn components(&self) -> Vec<usize> {
        let items: Vec<usize> = self.blocks.iter().copied().collect();
        self.lattice.poset.max_of(&items)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn max_blocks_below(&self, y: usize) -> Vec<usize> {
        let below: Vec<usize> =
            self.blocks.iter().copied().filter(|&b| self.lattice.leq(b, y)).collect();
        self.lattice.poset.max_of(&below)
    }

    /// Every lower interval must factor as the product of the lower
    /// intervals of the maximal blocks it contains.
    pub fn is_building_set(&self) -> bool {
        let l = &self.lattice;
        (0..l.len()).filter(|&y| y != l.bottom).all(|y| {
            let parts = self.max_blocks_below(y);
            lattice::product_decomposes(l, y, &parts).unwrap_or(false)
        })
    }

    /// Nested-set test: contains the components and every antichain of two
    /// or more members outside the components joins outside the blocks.
    pub fn is_nested(&self, set: &BTreeSet<usize>) -> Result<bool, BuildingError> {
        if !set.iter().all(|x| self.blocks.contains(x)) {
            return Err(BuildingError::NotASubsetOfBlocks);
        }
        let comps: BTreeSet<usize> = self.components().into_iter().collect();
        if !comps.iter().all(|c| set.contains(c)) {
            return Ok(false);
        }
        Ok(self.antichains_avoid_blocks(set, &comps))
    }

    fn antichains_avoid_blocks(&self, set: &BTreeSet<usize>, comps: &BTreeSet<usize>) -> bool {
        let free: Vec<usize> = set.iter().copied().filter(|x| !comps.contains(x)).collect();
        fn rec(bs: &BuildingSet, items: &[usize], from: usize, chosen: &mut Vec<usize>) -> bool {
            if chosen.len() >= 2 {
                let j = bs.lattice.join_all(chosen.iter().copied());
                if bs.blocks.contains(&j) {
                    return false;
                }
            }
            for i in from..items.len() {
                let cand = items[i];
                if chosen.iter().all(|&c| !bs.lattice.comparable(c, cand)) {
                    chosen.push(cand);
                    if !rec(bs, items, i + 1, chosen) {
                        return false;
                    }
                    chosen.pop();
                }
            }
            true
        }
        rec(self, &free, 0, &mut Vec::new())
    }

    /// Recursive nested-set test through the factorization of the maximal
    /// members; used as a cross-check of the antichain test.
    pub fn is_nested_recursive(&self, set: &BTreeSet<usize>) -> Result<bool, BuildingError> {
        if !set.iter().all(|x| self.blocks.contains(x)) {
            return Err(BuildingError::NotASubsetOfBlocks);
        }
        let comps: BTreeSet<usize> = self.components().into_iter().collect();
        if !comps.iter().all(|c| set.contains(c)) {
            return Ok(false);
        }
        Ok(self.nested_rec(set, &comps))
    }

    fn nested_rec(&self, set: &BTreeSet<usize>, comps: &BTreeSet<usize>) -> bool {
        let free: Vec<usize> = set.iter().copied().filter(|x| !comps.contains(x)).collect();
        if free.is_empty() {
            return true;
        }
        let maxima = self.lattice.poset.max_of(&free);
        if maxima.len() >= 2 {
            let join = self.lattice.join_all(maxima.iter().copied());
            if self.max_blocks_below(join) != maxima {
                return false;
            }
        }
        for &m in &maxima {
            let inside: BTreeSet<usize> =
                free.iter().copied().filter(|&x| self.lattice.lt(x, m)).collect();
            let sub_comps: BTreeSet<usize> = [m].into_iter().collect();
            if !self.nested_rec(&inside, &sub_comps) {
                return false;
            }
        }
        true
    }

    /// Nested complex: all nested sets minus the components, vertices
    /// labelled by lattice element labels.
    pub fn nested_complex(&self) -> SimplicialComplex {
        self.nested_complex_filtered(|_| true)
    }

    pub fn nested_complex_filtered(
        &self,
        keep: impl Fn(&[usize]) -> bool,
    ) -> SimplicialComplex {
        let comps: BTreeSet<usize> = self.components().into_iter().collect();
        let verts: Vec<usize> =
            self.blocks.iter().copied().filter(|b| !comps.contains(b)).collect();
        let labels: Vec<String> =
            verts.iter().map(|&b| self.lattice.label(b).to_string()).collect();
        let mut faces = BTreeSet::new();
        let mut cur: Vec<u16> = Vec::new();
        self.extend_nested(&verts, 0, &mut cur, &mut faces, &keep);
        SimplicialComplex::new(labels, faces)
    }

    fn extend_nested(
        &self,
        verts: &[usize],
        from: usize,
        cur: &mut Vec<u16>,
        out: &mut BTreeSet<Vec<u16>>,
        keep: &impl Fn(&[usize]) -> bool,
    ) {
        out.insert(cur.clone());
        for i in from..verts.len() {
            let cand = verts[i];
            let members: Vec<usize> = cur.iter().map(|&k| verts[k as usize]).collect();
            if self.extension_keeps_nested(&members, cand) {
                let mut with = members.clone();
                with.push(cand);
                if keep(&with) {
                    cur.push(i as u16);
                    self.extend_nested(verts, i + 1, cur, out, keep);
                    cur.pop();
                }
            }
        }
    }

    fn extension_keeps_nested(&self, members: &[usize], cand: usize) -> bool {
        let incomp: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&m| !self.lattice.comparable(m, cand))
            .collect();
        fn rec_antichain(
            bs: &BuildingSet,
            items: &[usize],
            from: usize,
            chosen: &mut Vec<usize>,
            base: usize,
        ) -> bool {
            if !chosen.is_empty() {
                let join = bs
                    .lattice
                    .join_all(chosen.iter().copied().chain(std::iter::once(base)));
                if bs.blocks.contains(&join) {
                    return false;
                }
            }
            for i in from..items.len() {
                let cand = items[i];
                if chosen.iter().all(|&c| !bs.lattice.comparable(c, cand)) {
                    chosen.push(cand);
                    if !rec_antichain(bs, items, i + 1, chosen, base) {
                        return false;
                    }
                    chosen.pop();
                }
            }
            true
        }
        rec_antichain(self, &incomp, 0, &mut Vec::new(), cand)
    }

    /// Seminested complex: like the nested complex but with the components
    /// usable as ordinary vertices (no containment requirement).
    pub fn seminested_complex(&self) -> SimplicialComplex {
        let verts: Vec<usize> = self.blocks.iter().copied().collect();
        let labels: Vec<String> =
            verts.iter().map(|&b| self.lattice.label(b).to_string()).collect();
        let mut faces = BTreeSet::new();
        let mut cur: Vec<u16> = Vec::new();
        self.extend_nested(&verts, 0, &mut cur, &mut faces, &|_| true);
        SimplicialComplex::new(labels, faces)
    }

    /// Restriction to a block: blocks below `x` over the interval `[0, x]`.
    pub fn restrict(&self, x: usize) -> Result<BuildingSet, BuildingError> {
        if !self.blocks.contains(&x) {
            return Err(BuildingError::BlockRequired(self.lattice.label(x).to_string()));
        }
        let (lat, elems) = lattice::interval(&self.lattice, self.lattice.bottom, x)?;
        let blocks = self
            .blocks
            .iter()
            .copied()
            .filter(|&b| self.lattice.leq(b, x))
            .map(|b| elems.iter().position(|&e| e == b).expect("block in interval"))
            .collect();
        Ok(BuildingSet { lattice: lat, blocks })
    }

    /// Contraction of a block: joins `b v x` for blocks not below `x`, over
    /// the interval `[x, 1]`. On atomic lattices the elements are relabelled
    /// by removing the atoms below `x`.
    pub fn contract(&self, x: usize) -> Result<BuildingSet, BuildingError> {
        if !self.blocks.contains(&x) {
            return Err(BuildingError::BlockRequired(self.lattice.label(x).to_string()));
        }
        let (mut lat, elems) = lattice::interval(&self.lattice, x, self.lattice.top)?;
        if self.lattice.is_atomic() {
            let atoms = self.lattice.atoms();
            for (i, &e) in elems.iter().enumerate() {
                let kept: Vec<String> = self
                    .lattice
                    .atoms_below(e)
                    .into_iter()
                    .filter(|&a| !self.lattice.leq(a, x))
                    .map(|a| {
                        let pos = atoms.iter().position(|&z| z == a).unwrap();
                        self.lattice.label(atoms[pos]).to_string()
                    })
                    .collect();
                lat.poset.labels[i] = if kept.is_empty() {
                    "{}".to_string()
                } else if kept.iter().all(|p| p.chars().count() == 1) {
                    kept.concat()
                } else {
                    kept.join(",")
                };
            }
        }
        let blocks = self
            .blocks
            .iter()
            .copied()
            .filter(|&b| !self.lattice.leq(b, x))
            .map(|b| {
                let j = self.lattice.join(b, x);
                elems.iter().position(|&e| e == j).expect("join in interval")
            })
            .collect();
        Ok(BuildingSet { lattice: lat, blocks })
    }

    /// Link of a nested set as the join over its members of the nested
    /// complexes of the restriction-then-contraction data.
    pub fn link_by_join(
        &self,
        nested: &BTreeSet<usize>,
    ) -> Result<SimplicialComplex, BuildingError> {
        if !self.is_nested(nested)? {
            return Err(BuildingError::NotNested);
        }
        let mut acc: Option<SimplicialComplex> = None;
        for &x in nested {
            let restricted = self.restrict(x)?;
            // Contract the smaller nested members one at a time; their join
            // is reached by iterated block contractions.
            let mut datum = restricted;
            loop {
                let bot = datum.lattice.bottom;
                let next = nested
                    .iter()
                    .filter(|&&z| self.lattice.lt(z, x))
                    .filter_map(|&z| datum.lattice.poset.index_of(self.lattice.label(z)).ok())
                    .find(|&z| z != bot && datum.blocks.contains(&z));
                match next {
                    Some(z) => datum = datum.contract(z)?,
                    None => break,
                }
            }
            let complex = datum.nested_complex();
            acc = Some(match acc {
                None => complex,
                Some(a) => a.join(&complex),
            });
        }
        Ok(acc.unwrap_or_else(|| SimplicialComplex::new(Vec::new(), BTreeSet::new())))
    }
}

/// Smallest building set containing the seeds, built by repeatedly adding a
/// minimal element whose lower interval fails to factor over the maximal
/// seeds below it. `pick` chooses among the minimal violators, letting tests
/// randomize the choice.
pub fn building_closure_with(
    l: &FiniteLattice,
    seeds: &BTreeSet<usize>,
    mut pick: impl FnMut(usize) -> usize,
) -> BuildingSet {
    let mut x: BTreeSet<usize> = seeds.iter().copied().filter(|&s| s != l.bottom).collect();
    loop {
        let mut violators = Vec::new();
        for y in 0..l.len() {
            if y == l.bottom {
                continue;
            }
            let below: Vec<usize> = x.iter().copied().filter(|&b| l.leq(b, y)).collect();
            let parts = l.poset.max_of(&below);
            if !lattice::product_decomposes(l, y, &parts).unwrap_or(false) {
                violators.push(y);
            }
        }
        if violators.is_empty() {
            return BuildingSet { lattice: l.clone(), blocks: x };
        }
        let minima: Vec<usize> = violators
            .iter()
            .copied()
            .filter(|&v| !violators.iter().any(|&w| l.lt(w, v)))
            .collect();
        let choice = minima[pick(minima.len()) % minima.len()];
        x.insert(choice);
    }
}

pub fn building_closure(l: &FiniteLattice, seeds: &BTreeSet<usize>) -> BuildingSet {
    building_closure_with(l, seeds, |_| 0)
}

// ---------------------------------------------------------------------------
// Meet semilattices and combinatorial blow-ups
// ---------------------------------------------------------------------------

/// A finite meet semilattice: bottom present, all meets exist, joins partial.
#[derive(Clone, Debug)]
pub struct MeetSemilattice {
    pub poset: FinitePoset,
    pub bottom: usize,
}

impl MeetSemilattice {
    pub fn from_poset(poset: FinitePoset) -> Result<MeetSemilattice, BuildingError> {
        let mins = poset.minimals();
        if mins.len() != 1 {
            return Err(BuildingError::ElementMissing("bottom".to_string()));
        }
        let bottom = mins[0];
        let n = poset.len();
        for a in 0..n {
            for b in a + 1..n {
                let lowers: Vec<usize> =
                    (0..n).filter(|&c| poset.leq(c, a) && poset.leq(c, b)).collect();
                if poset.max_of(&lowers).len() != 1 {
                    return Err(BuildingError::Lattice(LatticeError::NotALattice(
                        poset.labels[a].clone(),
                        poset.labels[b].clone(),
                    )));
                }
            }
        }
        Ok(MeetSemilattice { poset, bottom })
    }

    pub fn from_lattice(l: &FiniteLattice) -> MeetSemilattice {
        MeetSemilattice { poset: l.poset.clone(), bottom: l.bottom }
    }

    /// Lattice minus its top, as a semilattice.
    pub fn from_lattice_without_top(l: &FiniteLattice) -> MeetSemilattice {
        let keep: Vec<usize> = (0..l.len()).filter(|&x| x != l.top).collect();
        let labels = keep.iter().map(|&x| l.label(x).to_string()).collect();
        let mut rels = Vec::new();
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                if i != j && l.lt(a, b) {
                    rels.push((i, j));
                }
            }
        }
        let poset = FinitePoset::from_relations(labels, &rels).expect("semilattice poset");
        MeetSemilattice::from_poset(poset).expect("lattice minus top is a meet semilattice")
    }

    /// The least upper bound of two elements, when some upper bound exists.
    pub fn partial_join(&self, a: usize, b: usize) -> Option<usize> {
        let n = self.poset.len();
        let uppers: Vec<usize> =
            (0..n).filter(|&c| self.poset.leq(a, c) && self.poset.leq(b, c)).collect();
        if uppers.is_empty() {
            return None;
        }
        let minima: Vec<usize> = uppers
            .iter()
            .copied()
            .filter(|&u| !uppers.iter().any(|&v| self.poset.lt(v, u)))
            .collect();
        if minima.len() == 1 {
            Some(minima[0])
        } else {
            None
        }
    }
}

/// Element of a blow-up poset: an original element together with the blocks
/// blown up beneath it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BlowupElement {
    pub blocks: BTreeSet<String>,
    pub residue: String,
}

/// A meet semilattice whose elements carry blow-up history labels.
#[derive(Clone, Debug)]
pub struct BlowupPoset {
    pub semilattice: MeetSemilattice,
    pub elements: Vec<BlowupElement>,
}

impl BlowupPoset {
    pub fn from_semilattice(s: &MeetSemilattice) -> BlowupPoset {
        let elements = s
            .poset
            .labels
            .iter()
            .map(|l| BlowupElement { blocks: BTreeSet::new(), residue: l.clone() })
            .collect();
        BlowupPoset { semilattice: s.clone(), elements }
    }

    /// The combinatorial blow-up at an original element `x`: keep the
    /// elements not above `x`, and add a pair `(x, y)` for every kept `y`
    /// whose join with `x` exists.
    pub fn blowup(&self, x_label: &str) -> Result<BlowupPoset, BuildingError> {
        let s = &self.semilattice;
        let x = s
            .poset
            .labels
            .iter()
            .position(|l| l == x_label)
            .ok_or_else(|| BuildingError::ElementMissing(x_label.to_string()))?;
        let kept: Vec<usize> = (0..s.poset.len()).filter(|&y| !s.poset.leq(x, y)).collect();
        let mut labels: Vec<String> = Vec::new();
        let mut elements: Vec<BlowupElement> = Vec::new();
        let mut kind: Vec<(bool, usize)> = Vec::new();
        for &y in &kept {
            labels.push(s.poset.labels[y].clone());
            elements.push(self.elements[y].clone());
            kind.push((false, y));
        }
        for &y in &kept {
            if s.partial_join(x, y).is_some() {
                labels.push(format!("({x_label}|{})", s.poset.labels[y]));
                let mut e = self.elements[y].clone();
                e.blocks.insert(x_label.to_string());
                elements.push(e);
                kind.push((true, y));
            }
        }
        let n = kind.len();
        let mut below = vec![crate::util::Bits::new(n); n];
        for (j, &(pj, yj)) in kind.iter().enumerate() {
            below[j].set(j);
            for (i, &(pi, yi)) in kind.iter().enumerate() {
                if i == j {
                    continue;
                }
                // i sits below j in the blow-up?
                let le = match (pi, pj) {
                    (false, false) | (true, true) => s.poset.lt(yi, yj),
                    (false, true) => s.poset.leq(yi, yj),
                    (true, false) => false,
                };
                if le {
                    below[j].set(i);
                }
            }
        }
        let poset = FinitePoset::from_below(labels, below)?;
        // The blow-up of a meet semilattice is again one; revalidated by the
        // downstream certificate rather than per step.
        let bottom = poset.minimals()[0];
        let semilattice = MeetSemilattice { poset, bottom };
        Ok(BlowupPoset { semilattice, elements })
    }
}

/// Iterated blow-up along a block sequence (labels of elements of `s`),
/// which must be ordered so that larger elements come first.
pub fn iterated_blowup(
    s: &MeetSemilattice,
    blocks: &[String],
) -> Result<BlowupPoset, BuildingError> {
    for (i, bi) in blocks.iter().enumerate() {
        let a = s.poset.index_of(bi)?;
        for bj in &blocks[..i] {
            let b = s.poset.index_of(bj)?;
            if s.poset.lt(b, a) {
                return Err(BuildingError::BadOrder(i));
            }
        }
    }
    let mut cur = BlowupPoset::from_semilattice(s);
    for b in blocks {
        cur = cur.blowup(b)?;
    }
    Ok(cur)
}

/// Certifies that an iterated blow-up is the face poset of the seminested
/// complex: each element must be uniquely determined by the blown blocks it
/// carries, the order must be containment of those block sets, and the block
/// sets must be exactly the complex's faces.
pub fn blowup_matches_complex(result: &BlowupPoset, complex: &SimplicialComplex) -> bool {
    let n = result.semilattice.poset.len();
    let face_of: Vec<BTreeSet<String>> =
        result.elements.iter().map(|e| e.blocks.clone()).collect();
    let mut seen = BTreeSet::new();
    for f in &face_of {
        if !seen.insert(f.clone()) {
            return false;
        }
    }
    for a in 0..n {
        for b in 0..n {
            let incl = face_of[a].is_subset(&face_of[b]);
            if result.semilattice.poset.leq(a, b) != incl {
                return false;
            }
        }
    }
    seen == complex.label_faces()
}

/// Direct or free sum of two lattice building sets.
pub enum SumMode {
    Direct,
    Free,
}

pub fn sum(a: &BuildingSet, b: &BuildingSet, mode: SumMode) -> Result<BuildingSet, BuildingError> {
    match mode {
        SumMode::Direct => {
            let prod = lattice::cartesian_product(&a.lattice, &b.lattice);
            let mut blocks = BTreeSet::new();
            for &x in &a.blocks {
                let lbl =
                    format!("({}|{})", a.lattice.label(x), b.lattice.label(b.lattice.bottom));
                blocks.insert(prod.poset.index_of(&lbl)?);
            }
            for &y in &b.blocks {
                let lbl =
                    format!("({}|{})", a.lattice.label(a.lattice.bottom), b.lattice.label(y));
                blocks.insert(prod.poset.index_of(&lbl)?);
            }
            Ok(BuildingSet { lattice: prod, blocks })
        }
        SumMode::Free => {
            if !a.is_connected() || !b.is_connected() {
                return Err(BuildingError::NotConnected);
            }
            let prod = lattice::free_product(&a.lattice, &b.lattice);
            let mut blocks = BTreeSet::new();
            for &x in &a.blocks {
                if x == a.lattice.top {
                    continue;
                }
                let lbl =
                    format!("({}|{})", a.lattice.label(x), b.lattice.label(b.lattice.bottom));
                blocks.insert(prod.poset.index_of(&lbl)?);
            }
            for &y in &b.blocks {
                if y == b.lattice.top {
                    continue;
                }
                let lbl =
                    format!("({}|{})", a.lattice.label(a.lattice.bottom), b.lattice.label(y));
                blocks.insert(prod.poset.index_of(&lbl)?);
            }
            blocks.insert(prod.top);
            Ok(BuildingSet { lattice: prod, blocks })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::Subset;

    fn ground6() -> Vec<String> {
        (1..=6).map(|i| i.to_string()).collect()
    }

    /// Parses "125"-style block names over single-character ground labels.
    pub(crate) fn blk(ground: &[String], name: &str) -> Subset {
        Subset::from_indices(
            name.chars()
                .map(|c| ground.iter().position(|g| g == &c.to_string()).expect("ground label")),
        )
    }

    pub(crate) fn b_circ() -> BoolBuildingSet {
        let g = ground6();
        let names = [
            "1", "2", "3", "4", "5", "6", "12", "14", "25", "123", "124", "125", "456", "1234",
            "1235", "1245", "1456", "2456", "12345", "12456", "123456",
        ];
        let blocks = names.iter().map(|n| blk(&g, n)).collect();
        BoolBuildingSet::new(g, blocks)
    }

    #[test]
    fn b_circ_is_a_building_set() {
        assert!(b_circ().is_building_set());
        assert_eq!(b_circ().components(), vec![Subset::full(6)]);
    }

    #[test]
    fn min_and_max_boolean_building_sets() {
        let g = ground6();
        assert!(BoolBuildingSet::singletons(g.clone()).is_building_set());
        let g3: Vec<String> = (1..=3).map(|i| i.to_string()).collect();
        assert!(BoolBuildingSet::complete(g3).is_building_set());
    }

    #[test]
    fn missing_singleton_is_not_a_building_set() {
        let g: Vec<String> = (1..=3).map(|i| i.to_string()).collect();
        let blocks = ["1", "2", "12", "23"].iter().map(|n| blk(&g, n)).collect();
        assert!(!BoolBuildingSet::new(g, blocks).is_building_set());
    }

    #[test]
    fn boolean_and_lattice_paths_agree() {
        let g: Vec<String> = (1..=4).map(|i| i.to_string()).collect();
        let cases: Vec<Vec<&str>> = vec![
            vec!["1", "2", "3", "4", "12", "34", "1234"],
            vec!["1", "2", "3", "4", "12", "34"],
            vec!["1", "2", "3", "4", "123", "1234"],
            vec!["1", "2", "3", "4", "12", "123", "1234"],
        ];
        for names in cases {
            let blocks = names.iter().map(|n| blk(&g, n)).collect();
            let b = BoolBuildingSet::new(g.clone(), blocks);
            assert_eq!(b.is_building_set(), b.to_lattice().is_building_set(), "{names:?}");
        }
    }

    #[test]
    fn closure_of_hypergraph_is_b_circ() {
        let g = ground6();
        let seeds: BTreeSet<Subset> =
            ["12", "14", "25", "123", "456"].iter().map(|n| blk(&g, n)).collect();
        let closed = BoolBuildingSet::closure(g, &seeds);
        assert_eq!(closed, b_circ());
    }

    #[test]
    fn closure_of_circuit_supports() {
        let g = ground6();
        let seeds: BTreeSet<Subset> = ["12", "1456", "2456"].iter().map(|n| blk(&g, n)).collect();
        let closed = BoolBuildingSet::closure(g.clone(), &seeds);
        let expected: BTreeSet<Subset> =
            ["1", "2", "3", "4", "5", "6", "12", "1456", "2456", "12456"]
                .iter()
                .map(|n| blk(&g, n))
                .collect();
        assert_eq!(closed.blocks, expected);
    }

    #[test]
    fn closure_of_empty_is_singletons() {
        let g = ground6();
        let closed = BoolBuildingSet::closure(g.clone(), &BTreeSet::new());
        assert_eq!(closed, BoolBuildingSet::singletons(g));
    }

    #[test]
    fn lattice_closure_of_empty_is_irreducibles() {
        let l = lattice::boolean_lattice(&["1".into(), "2".into(), "3".into()]);
        let closed = building_closure(&l, &BTreeSet::new());
        let labels: BTreeSet<&str> =
            closed.blocks.iter().map(|&b| l.label(b)).collect();
        assert_eq!(labels, ["1", "2", "3"].into_iter().collect());
        assert!(closed.is_building_set());
    }

    #[test]
    fn lattice_closure_is_independent_of_violator_choice() {
        use rand::prelude::*;
        let g: Vec<String> = (1..=4).map(|i| i.to_string()).collect();
        let l = lattice::boolean_lattice(&g);
        let seeds: BTreeSet<usize> = ["12", "23", "34"]
            .iter()
            .map(|n| l.poset.index_of(n).unwrap())
            .collect();
        let reference = building_closure(&l, &seeds);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let alt = building_closure_with(&l, &seeds, |n| rng.random_range(0..n));
            assert_eq!(alt.blocks, reference.blocks);
        }
        assert!(reference.is_building_set());
    }

    #[test]
    fn lattice_closure_matches_exhaustive_minimum() {
        // Exhaustive oracle: smallest building set containing the seeds.
        let g: Vec<String> = (1..=3).map(|i| i.to_string()).collect();
        let l = lattice::boolean_lattice(&g);
        let above: Vec<usize> = (0..l.len()).filter(|&x| x != l.bottom).collect();
        let seeds: BTreeSet<usize> = ["12", "23"]
            .iter()
            .map(|n| l.poset.index_of(n).unwrap())
            .collect();
        let closed = building_closure(&l, &seeds);
        let mut best: Option<BTreeSet<usize>> = None;
        for mask in 0u32..1 << above.len() {
            let cand: BTreeSet<usize> = above
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect();
            if !seeds.is_subset(&cand) {
                continue;
            }
            let bs = BuildingSet { lattice: l.clone(), blocks: cand.clone() };
            if bs.is_building_set() {
                match &best {
                    Some(b) if b.len() <= cand.len() => {}
                    _ => best = Some(cand),
                }
            }
        }
        assert_eq!(closed.blocks, best.unwrap());
    }

    #[test]
    fn restriction_and_contraction_of_b_circ() {
        let b = b_circ();
        let g = &b.ground.clone();
        let r = blk(g, "123");
        let restricted = b.restrict(r);
        let expected: BTreeSet<Subset> =
            ["1", "2", "3", "12", "123"].iter().map(|n| blk(&restricted.ground, n)).collect();
        assert_eq!(restricted.blocks, expected);
        let contracted = b.contract(r);
        let expected: BTreeSet<Subset> =
            ["4", "5", "6", "45", "456"].iter().map(|n| blk(&contracted.ground, n)).collect();
        assert_eq!(contracted.blocks, expected);
        let top = b.restrict(Subset::full(6));
        assert_eq!(top, b);
    }

    #[test]
    fn nested_set_classification_on_b_circ() {
        let b = b_circ();
        let g = &b.ground;
        let not_nested: BTreeSet<Subset> =
            ["14", "25", "3", "123456"].iter().map(|n| blk(g, n)).collect();
        assert!(!b.is_nested(&not_nested).unwrap());
        let missing_kappa: BTreeSet<Subset> = ["14", "25", "3"].iter().map(|n| blk(g, n)).collect();
        assert!(!b.is_nested(&missing_kappa).unwrap());
        let nested: BTreeSet<Subset> =
            ["3", "4", "25", "123456"].iter().map(|n| blk(g, n)).collect();
        assert!(b.is_nested(&nested).unwrap());
        let maximal: BTreeSet<Subset> =
            ["3", "4", "5", "25", "12345", "123456"].iter().map(|n| blk(g, n)).collect();
        assert!(b.is_nested(&maximal).unwrap());
        let kappa_alone: BTreeSet<Subset> = [blk(g, "123456")].into_iter().collect();
        assert!(b.is_nested(&kappa_alone).unwrap());
        let foreign: BTreeSet<Subset> = [blk(g, "13")].into_iter().collect();
        assert_eq!(b.is_nested(&foreign), Err(BuildingError::NotASubsetOfBlocks));
    }

    #[test]
    fn lattice_nested_recursion_agrees_with_antichain_test() {
        let b = b_circ().to_lattice();
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let blocks: Vec<usize> = b.blocks.iter().copied().collect();
        for _ in 0..200 {
            let k = rng.random_range(1..=5);
            let mut set: BTreeSet<usize> =
                (0..k).map(|_| blocks[rng.random_range(0..blocks.len())]).collect();
            set.insert(b.lattice.top);
            assert_eq!(b.is_nested(&set).unwrap(), b.is_nested_recursive(&set).unwrap());
        }
    }

    #[test]
    fn complete_building_set_on_three_gives_hexagon() {
        let g: Vec<String> = (1..=3).map(|i| i.to_string()).collect();
        let b = BoolBuildingSet::complete(g);
        let c = b.nested_complex();
        assert_eq!(c.f_vector(), vec![1, 6, 6]);
        assert!(c.is_pure() && c.is_pseudomanifold() && c.has_sphere_euler_characteristic());
    }

    #[test]
    fn b_circ_complex_contains_the_maximal_face_and_is_a_sphere() {
        let b = b_circ();
        let c = b.nested_complex();
        let face: BTreeSet<String> =
            ["3", "4", "5", "25", "12345"].iter().map(|s| s.to_string()).collect();
        assert!(c.label_faces().contains(&face));
        let face_ids: Vec<u16> = {
            let mut v: Vec<u16> = face
                .iter()
                .map(|l| c.vertices.iter().position(|x| x == l).unwrap() as u16)
                .collect();
            v.sort_unstable();
            v
        };
        assert!(c.facets().contains(&face_ids));
        assert!(c.is_pure());
        assert_eq!(c.dim(), 4);
        assert!(c.is_pseudomanifold() && c.has_sphere_euler_characteristic());
    }

    #[test]
    fn boolean_and_lattice_nested_complexes_agree() {
        let g: Vec<String> = (1..=4).map(|i| i.to_string()).collect();
        let b = BoolBuildingSet::graphical(g, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(b.is_building_set());
        let fast = b.nested_complex();
        let slow = b.to_lattice().nested_complex();
        assert_eq!(fast.label_faces(), slow.label_faces());
    }

    #[test]
    fn nested_complex_of_maximal_building_set_is_order_complex() {
        let l = lattice::boolean_lattice(&["1".into(), "2".into(), "3".into()]);
        let b = BuildingSet::maximal(l.clone());
        let c = b.nested_complex();
        let mut chains: BTreeSet<BTreeSet<String>> = BTreeSet::new();
        let elems: Vec<usize> = (0..l.len()).filter(|&x| x != l.bottom && x != l.top).collect();
        fn grow(
            l: &FiniteLattice,
            elems: &[usize],
            from: usize,
            cur: &mut Vec<usize>,
            out: &mut BTreeSet<BTreeSet<String>>,
        ) {
            out.insert(cur.iter().map(|&x| l.label(x).to_string()).collect());
            for i in from..elems.len() {
                if cur.iter().all(|&c| l.comparable(c, elems[i])) {
                    cur.push(elems[i]);
                    grow(l, elems, i + 1, cur, out);
                    cur.pop();
                }
            }
        }
        grow(&l, &elems, 0, &mut Vec::new(), &mut chains);
        assert_eq!(c.label_faces(), chains);
    }

    #[test]
    fn link_matches_simplicial_link() {
        // The vertex labels differ (restriction data relabel their grounds),
        // so the comparison is up to complex isomorphism.
        let b = b_circ();
        let c = b.nested_complex();
        let v25 = c.vertices.iter().position(|v| v == "25").unwrap() as u16;
        let direct = c.link(&[v25]).unwrap();
        let lat = b.to_lattice();
        let nested: BTreeSet<usize> = ["25", "123456"]
            .iter()
            .map(|n| lat.lattice.poset.index_of(n).unwrap())
            .collect();
        let joined = lat.link_by_join(&nested).unwrap();
        assert_eq!(direct.f_vector(), joined.f_vector());
        assert!(direct.is_isomorphic(&joined));
    }

    #[test]
    fn link_of_component_uses_restriction_only() {
        let b = b_circ().to_lattice();
        let kappa: BTreeSet<usize> = [b.lattice.top].into_iter().collect();
        let link = b.link_by_join(&kappa).unwrap();
        assert_eq!(link.label_faces(), b.nested_complex().label_faces());
    }

    #[test]
    fn link_of_facet_is_empty_complex() {
        let b = b_circ();
        let c = b.nested_complex();
        let facet = c.facets().into_iter().next().unwrap();
        let link = c.link(&facet).unwrap();
        assert_eq!(link.faces.len(), 1);
    }

    #[test]
    fn closure_idempotent_and_monotone() {
        let g = ground6();
        let seeds: BTreeSet<Subset> = ["12", "1456", "2456"].iter().map(|n| blk(&g, n)).collect();
        let once = BoolBuildingSet::closure(g.clone(), &seeds);
        let twice = BoolBuildingSet::closure(g.clone(), &once.blocks);
        assert_eq!(once, twice);
        let smaller: BTreeSet<Subset> = ["12", "1456"].iter().map(|n| blk(&g, n)).collect();
        let small_cl = BoolBuildingSet::closure(g, &smaller);
        assert!(small_cl.blocks.is_subset(&once.blocks));
    }

    #[test]
    fn blowup_of_boolean_semilattice_at_an_atom() {
        let l = lattice::boolean_lattice(&["1".into(), "2".into()]);
        let s = MeetSemilattice::from_lattice_without_top(&l);
        let b = BlowupPoset::from_semilattice(&s);
        let blown = b.blowup("1").unwrap();
        assert!(blown.semilattice.poset.is_isomorphic(&s.poset));
    }

    #[test]
    fn blowup_at_chain_atom_is_isomorphic() {
        let labels: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let poset = FinitePoset::from_relations(labels, &[(0, 1), (1, 2)]).unwrap();
        let s = MeetSemilattice::from_poset(poset).unwrap();
        let blown = BlowupPoset::from_semilattice(&s).blowup("b").unwrap();
        // b and c are replaced by (b|a) and (b|... ) pairs of the elements
        // below b; the result is a 2-chain with one extra pair element.
        assert_eq!(blown.semilattice.poset.len(), 2);
    }

    #[test]
    fn iterated_blowup_matches_hexagon_face_poset() {
        let g: Vec<String> = (1..=3).map(|i| i.to_string()).collect();
        let bb = BoolBuildingSet::complete(g);
        let latb = bb.to_lattice();
        let s = MeetSemilattice::from_lattice(&latb.lattice);
        let mut blocks: Vec<usize> = latb.blocks.iter().copied().collect();
        blocks.sort_by_key(|&b| std::cmp::Reverse(latb.lattice.atoms_below(b).len()));
        let labels: Vec<String> =
            blocks.iter().map(|&b| latb.lattice.label(b).to_string()).collect();
        let result = iterated_blowup(&s, &labels).unwrap();
        let complex = latb.seminested_complex();
        assert!(blowup_matches_complex(&result, &complex));
        let mut reversed = labels.clone();
        reversed.reverse();
        assert!(matches!(iterated_blowup(&s, &reversed), Err(BuildingError::BadOrder(_))));
    }

    #[test]
    fn iterated_blowup_of_b_circ_has_complex_f_vector() {
        let latb = b_circ().to_lattice();
        let s = MeetSemilattice::from_lattice(&latb.lattice);
        let mut blocks: Vec<usize> = latb.blocks.iter().copied().collect();
        blocks.sort_by_key(|&b| std::cmp::Reverse(latb.lattice.atoms_below(b).len()));
        let labels: Vec<String> =
            blocks.iter().map(|&b| latb.lattice.label(b).to_string()).collect();
        let result = iterated_blowup(&s, &labels).unwrap();
        let complex = latb.seminested_complex();
        assert!(blowup_matches_complex(&result, &complex));
        assert_eq!(result.semilattice.poset.len(), complex.faces.len());
    }

    #[test]
    fn direct_sum_of_singleton_building_sets() {
        let a = BoolBuildingSet::singletons(vec!["1".into(), "2".into()]);
        let b = BoolBuildingSet::singletons(vec!["3".into()]);
        let s = a.direct_sum(&b);
        assert_eq!(s, BoolBuildingSet::singletons(vec!["1".into(), "2".into(), "3".into()]));
    }

    #[test]
    fn free_sum_of_complete_pairs_gives_square_boundary() {
        let mk = |a: &str, b: &str| {
            BoolBuildingSet::complete(vec![a.to_string(), b.to_string()]).to_lattice()
        };
        let x = mk("1", "2");
        let y = mk("3", "4");
        let joined = x.nested_complex().join(&y.nested_complex());
        let s = sum(&x, &y, SumMode::Free).unwrap();
        assert!(s.is_building_set());
        let c = s.nested_complex();
        assert_eq!(c.f_vector(), vec![1, 4, 4]);
        assert!(c.is_isomorphic(&joined));
    }

    #[test]
    fn direct_sum_complex_is_join() {
        let x = BoolBuildingSet::complete(vec!["1".into(), "2".into()]).to_lattice();
        let y = BoolBuildingSet::singletons(vec!["3".into(), "4".into()]).to_lattice();
        let s = sum(&x, &y, SumMode::Direct).unwrap();
        assert!(s.is_building_set());
        let joined = x.nested_complex().join(&y.nested_complex());
        assert!(s.nested_complex().is_isomorphic(&joined));
    }

    #[test]
    fn disconnected_building_set_reduces_to_free_sum_of_restrictions() {
        // A disconnected boolean building set on {1,2}+{3,4}: its complex is
        // isomorphic to the complex of the free sum of its restrictions.
        let g: Vec<String> = (1..=4).map(|i| i.to_string()).collect();
        let blocks: BTreeSet<Subset> =
            ["1", "2", "3", "4", "12", "34"].iter().map(|n| blk(&g, n)).collect();
        let b = BoolBuildingSet::new(g.clone(), blocks);
        assert!(b.is_building_set());
        let x = b.restrict(blk(&g, "12")).to_lattice();
        let y = b.restrict(blk(&g, "34")).to_lattice();
        let free = sum(&x, &y, SumMode::Free).unwrap();
        assert!(b.nested_complex().is_isomorphic(&free.nested_complex()));
    }

    #[test]
    fn f_vector_of_tetrahedron_boundary() {
        let g: Vec<String> = (1..=4).map(|i| i.to_string()).collect();
        let faces: BTreeSet<Vec<u16>> = (0u64..16)
            .filter(|&m| m.count_ones() <= 3)
            .map(|m| Subset(m).iter().map(|i| i as u16).collect())
            .collect();
        let c = SimplicialComplex::new(g, faces);
        assert_eq!(c.f_vector(), vec![1, 4, 6, 4]);
        assert!(c.is_pseudomanifold() && c.has_sphere_euler_characteristic());
    }
}
