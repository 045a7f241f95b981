//! Oriented matroids: construction from exact-rational vector configurations
//! and from directed multigraphs; circuits, cocircuits, vectors, covectors;
//! acyclicity; the Las Vergnas face lattice; restriction and contraction;
//! connected components; direct and free sums; stellar subdivision; flats;
//! initial oriented matroids for weight vectors.

use crate::building::{BlowupPoset, MeetSemilattice};
use crate::lattice::{self, FiniteLattice, FinitePoset, LatticeError};
use crate::linalg::{dot, sub, Mat};
use crate::util::{rat, rat_abs, Rat, Subset};
use num::traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OmError {
    #[error("oriented matroid is not acyclic")]
    NotAcyclic,
    #[error("ground sets overlap")]
    GroundOverlap,
    #[error("`{0}` is not a proper face")]
    NotAProperFace(String),
    #[error("stellar subdivision certification failed after {0} attempts")]
    CertificationFailed(usize),
    #[error("oriented matroid has loops")]
    HasLoops,
    #[error("circuit axioms violated: {0}")]
    CircuitAxioms(String),
    #[error("unknown ground label `{0}`")]
    UnknownLabel(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Building(#[from] crate::building::BuildingError),
}

/// A signed subset of the ground set: disjoint positive and negative parts.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct SignedSet {
    pub plus: Subset,
    pub minus: Subset,
}

impl SignedSet {
    pub const ZERO: SignedSet = SignedSet { plus: Subset::EMPTY, minus: Subset::EMPTY };

    pub fn new(plus: Subset, minus: Subset) -> SignedSet {
        assert!(!plus.intersects(minus));
        SignedSet { plus, minus }
    }

    pub fn support(self) -> Subset {
        self.plus.union(self.minus)
    }

    pub fn negated(self) -> SignedSet {
        SignedSet { plus: self.minus, minus: self.plus }
    }

    pub fn is_zero(self) -> bool {
        self.support().is_empty()
    }

    /// The signature of a rational vector.
    pub fn signature(v: &[Rat]) -> SignedSet {
        let plus = Subset::from_indices(
            v.iter().enumerate().filter(|(_, x)| x.is_positive()).map(|(i, _)| i),
        );
        let minus = Subset::from_indices(
            v.iter().enumerate().filter(|(_, x)| x.is_negative()).map(|(i, _)| i),
        );
        SignedSet { plus, minus }
    }

    /// Composition X o Y, absorbing Y where X is zero.
    pub fn compose(self, o: SignedSet) -> SignedSet {
        SignedSet {
            plus: self.plus.union(o.plus.minus(self.minus)),
            minus: self.minus.union(o.minus.minus(self.plus)),
        }
    }

    /// Sign orthogonality: the agreeing and disagreeing overlaps are either
    /// both empty or both non-empty.
    pub fn orthogonal(self, o: SignedSet) -> bool {
        let agree = self.plus.intersects(o.plus) || self.minus.intersects(o.minus);
        let disagree = self.plus.intersects(o.minus) || self.minus.intersects(o.plus);
        agree == disagree
    }

    pub fn restrict(self, r: Subset) -> SignedSet {
        SignedSet { plus: self.plus.inter(r), minus: self.minus.inter(r) }
    }

    pub fn delete(self, r: Subset) -> SignedSet {
        SignedSet { plus: self.plus.minus(r), minus: self.minus.minus(r) }
    }

    pub fn reindex(self, within: Subset) -> SignedSet {
        let order: Vec<usize> = within.iter().collect();
        let map = |s: Subset| {
            Subset::from_indices(s.iter().map(|i| order.iter().position(|&j| j == i).unwrap()))
        };
        SignedSet { plus: map(self.plus), minus: map(self.minus) }
    }

    pub fn label(self, ground: &[String]) -> String {
        format!("({},{})", self.plus.label(ground), self.minus.label(ground))
    }
}

// ---------------------------------------------------------------------------
// Vector configurations
// ---------------------------------------------------------------------------

/// A finite configuration of exact rational vectors indexed by ground labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorConfig {
    pub ground: Vec<String>,
    pub columns: Vec<Vec<Rat>>,
}

impl VectorConfig {
    pub fn new(ground: Vec<String>, columns: Vec<Vec<Rat>>) -> VectorConfig {
        assert_eq!(ground.len(), columns.len());
        let d = columns.first().map_or(0, |c| c.len());
        assert!(columns.iter().all(|c| c.len() == d), "columns must share a dimension");
        VectorConfig { ground, columns }
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn dim(&self) -> usize {
        self.columns.first().map_or(0, |c| c.len())
    }

    pub fn matrix(&self) -> Mat {
        Mat::from_cols(self.columns.clone())
    }

    pub fn rank(&self) -> usize {
        self.matrix().rank()
    }

    /// The subconfiguration on `r`.
    pub fn restrict(&self, r: Subset) -> VectorConfig {
        VectorConfig {
            ground: r.iter().map(|i| self.ground[i].clone()).collect(),
            columns: r.iter().map(|i| self.columns[i].clone()).collect(),
        }
    }

    /// Contraction: project the remaining columns onto the orthogonal
    /// complement of the span of the columns in `r`.
    pub fn contract(&self, r: Subset) -> VectorConfig {
        let keep = Subset::full(self.n()).minus(r);
        let basis: Vec<Vec<Rat>> = {
            let m = Mat::from_cols(r.iter().map(|i| self.columns[i].clone()).collect());
            m.transpose().row_space_basis()
        };
        let mut ortho: Vec<Vec<Rat>> = Vec::new();
        for b in &basis {
            let mut w = b.clone();
            for u in &ortho {
                let c = dot(&w, u) / dot(u, u);
                w = sub(&w, &crate::linalg::scale(u, &c));
            }
            if !crate::linalg::is_zero_vec(&w) {
                ortho.push(w);
            }
        }
        let project = |v: &Vec<Rat>| -> Vec<Rat> {
            let mut out = v.clone();
            for u in &ortho {
                let c = dot(&out, u) / dot(u, u);
                out = sub(&out, &crate::linalg::scale(u, &c));
            }
            out
        };
        VectorConfig {
            ground: keep.iter().map(|i| self.ground[i].clone()).collect(),
            columns: keep.iter().map(|i| project(&self.columns[i])).collect(),
        }
    }

    pub fn index_of(&self, label: &str) -> Result<usize, OmError> {
        self.ground
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| OmError::UnknownLabel(label.to_string()))
    }
}

/// Support-minimal signatures of linear dependences, both orientations.
pub fn circuits_of(a: &VectorConfig) -> BTreeSet<SignedSet> {
    let n = a.n();
    let rank = a.rank();
    let mut circuits = BTreeSet::new();
    let mut supports: Vec<Subset> = Vec::new();
    for size in 1..=(rank + 1).min(n) {
        let mut sel: Vec<usize> = (0..size).collect();
        if sel.is_empty() {
            continue;
        }
        loop {
            let s = Subset::from_indices(sel.iter().copied());
            if !supports.iter().any(|&t| t.is_subset_of(s)) {
                let m = Mat::from_cols(sel.iter().map(|&i| a.columns[i].clone()).collect());
                if m.rank() == size - 1 {
                    let ker = m.kernel_basis();
                    if ker.len() == 1 && ker[0].iter().all(|x| !x.is_zero()) {
                        let mut full = vec![Rat::zero(); n];
                        for (k, &i) in sel.iter().enumerate() {
                            full[i] = ker[0][k].clone();
                        }
                        let c = SignedSet::signature(&full);
                        circuits.insert(c);
                        circuits.insert(c.negated());
                        supports.push(s);
                    }
                }
            }
            if !next_combination(&mut sel, n) {
                break;
            }
        }
    }
    circuits
}

/// The dependence vector realizing a circuit, scaled so the minimum nonzero
/// absolute entry is one.
pub fn circuit_dependence(a: &VectorConfig, c: SignedSet) -> Vec<Rat> {
    let sel: Vec<usize> = c.support().iter().collect();
    let m = Mat::from_cols(sel.iter().map(|&i| a.columns[i].clone()).collect());
    let ker = m.kernel_basis();
    assert_eq!(ker.len(), 1, "circuit must have a one-dimensional dependence");
    let mut full = vec![Rat::zero(); a.n()];
    for (k, &i) in sel.iter().enumerate() {
        full[i] = ker[0][k].clone();
    }
    let min_abs =
        full.iter().filter(|x| !x.is_zero()).map(rat_abs).min().expect("nonzero dependence");
    let mut scaled: Vec<Rat> = full.iter().map(|x| x / &min_abs).collect();
    if SignedSet::signature(&scaled) != c {
        scaled = scaled.iter().map(|x| -x).collect();
    }
    assert_eq!(SignedSet::signature(&scaled), c, "not a circuit of this configuration");
    scaled
}

/// Support-minimal signatures of linear evaluations, both orientations.
pub fn cocircuits_of(a: &VectorConfig) -> BTreeSet<SignedSet> {
    let n = a.n();
    let rank = a.rank();
    let mut out = BTreeSet::new();
    if rank == 0 {
        return out;
    }
    // Work in coordinates of the column span.
    let basis = Mat::from_rows(a.matrix().transpose().row_space_basis());
    let coords: Vec<Vec<Rat>> = (0..n)
        .map(|i| basis.transpose().solve(&a.columns[i]).expect("column lies in span"))
        .collect();
    if rank == 1 {
        let vals: Vec<Rat> = coords.iter().map(|c| c[0].clone()).collect();
        let c = SignedSet::signature(&vals);
        if !c.is_zero() {
            out.insert(c);
            out.insert(c.negated());
        }
        return out;
    }
    let mut sel: Vec<usize> = (0..rank - 1).collect();
    loop {
        let m = Mat::from_cols(sel.iter().map(|&i| coords[i].clone()).collect());
        if m.rank() == rank - 1 {
            let normals = m.transpose().kernel_basis();
            if normals.len() == 1 {
                let f = &normals[0];
                let vals: Vec<Rat> = coords.iter().map(|c| dot(f, c)).collect();
                let c = SignedSet::signature(&vals);
                if !c.is_zero() {
                    out.insert(c);
                    out.insert(c.negated());
                }
            }
        }
        if !next_combination(&mut sel, n) {
            break;
        }
    }
    out
}

fn next_combination(sel: &mut [usize], n: usize) -> bool {
    let k = sel.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if sel[i] != i + n - k {
            sel[i] += 1;
            for j in i + 1..k {
                sel[j] = sel[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Closure of a generator set under signed composition, with the zero signed
/// set always included.
pub fn span_signed(generators: &BTreeSet<SignedSet>) -> BTreeSet<SignedSet> {
    let mut out: BTreeSet<SignedSet> = generators.clone();
    out.insert(SignedSet::ZERO);
    loop {
        let items: Vec<SignedSet> = out.iter().copied().collect();
        let mut added = false;
        for &x in &items {
            for &y in &items {
                if out.insert(x.compose(y)) {
                    added = true;
                }
            }
        }
        if !added {
            return out;
        }
    }
}

/// The 3^n orthogonality filter: all sign vectors orthogonal to every
/// generator. Test oracle; gated to small grounds.
pub fn perp_filter(n: usize, against: &BTreeSet<SignedSet>) -> BTreeSet<SignedSet> {
    assert!(n <= 12, "orthogonality filter is for small grounds");
    let mut out = BTreeSet::new();
    let mut stack = vec![(0usize, SignedSet::ZERO)];
    while let Some((i, cur)) = stack.pop() {
        if i == n {
            if against.iter().all(|&c| c.orthogonal(cur)) {
                out.insert(cur);
            }
            continue;
        }
        stack.push((i + 1, cur));
        stack.push((i + 1, SignedSet { plus: cur.plus.insert(i), minus: cur.minus }));
        stack.push((i + 1, SignedSet { plus: cur.plus, minus: cur.minus.insert(i) }));
    }
    out
}

pub fn support_minimal(sets: &BTreeSet<SignedSet>) -> BTreeSet<SignedSet> {
    sets.iter()
        .copied()
        .filter(|s| !s.is_zero())
        .filter(|s| {
            !sets.iter().any(|t| {
                !t.is_zero() && t.support() != s.support() && t.support().is_subset_of(s.support())
            })
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Oriented matroids
// ---------------------------------------------------------------------------

/// An oriented matroid presented by its circuits, with an optional rational
/// realization used by the geometric operations.
#[derive(Clone, Debug)]
pub struct OrientedMatroid {
    pub ground: Vec<String>,
    pub circuits: BTreeSet<SignedSet>,
    pub rank: usize,
    pub realization: Option<VectorConfig>,
}

impl OrientedMatroid {
    pub fn from_config(a: &VectorConfig) -> OrientedMatroid {
        OrientedMatroid {
            ground: a.ground.clone(),
            circuits: circuits_of(a),
            rank: a.rank(),
            realization: Some(a.clone()),
        }
    }

    /// An abstract oriented matroid from circuits; the rank is the maximum
    /// size of a set containing no circuit support.
    pub fn from_circuits(ground: Vec<String>, circuits: BTreeSet<SignedSet>) -> OrientedMatroid {
        let n = ground.len();
        let supports: Vec<Subset> = circuits.iter().map(|c| c.support()).collect();
        let mut best = 0;
        let mut stack = vec![(0usize, Subset::EMPTY, 0usize)];
        while let Some((i, cur, size)) = stack.pop() {
            best = best.max(size);
            if i == n || size + (n - i) <= best {
                continue;
            }
            let with = cur.insert(i);
            if !supports.iter().any(|&s| s.is_subset_of(with)) {
                stack.push((i + 1, with, size + 1));
            }
            stack.push((i + 1, cur, size));
        }
        OrientedMatroid { ground, circuits, rank: best, realization: None }
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n())
    }

    /// Validates the four circuit axioms, reporting the first failure.
    pub fn check_circuit_axioms(&self) -> Result<(), OmError> {
        let cs: Vec<SignedSet> = self.circuits.iter().copied().collect();
        if cs.iter().any(|c| c.is_zero()) {
            return Err(OmError::CircuitAxioms("empty circuit".to_string()));
        }
        for c in &cs {
            if !self.circuits.contains(&c.negated()) {
                return Err(OmError::CircuitAxioms(format!(
                    "negation of {} missing",
                    c.label(&self.ground)
                )));
            }
        }
        for a in &cs {
            for b in &cs {
                if a.support().is_subset_of(b.support()) && *a != *b && *a != b.negated() {
                    return Err(OmError::CircuitAxioms(format!(
                        "incomparable-support condition fails for {} and {}",
                        a.label(&self.ground),
                        b.label(&self.ground)
                    )));
                }
            }
        }
        for a in &cs {
            for b in &cs {
                if *a == b.negated() {
                    continue;
                }
                for s in a.plus.inter(b.minus).iter() {
                    let found = cs.iter().any(|c| {
                        c.plus.is_subset_of(a.plus.union(b.plus).minus(Subset::singleton(s)))
                            && c.minus
                                .is_subset_of(a.minus.union(b.minus).minus(Subset::singleton(s)))
                    });
                    if !found {
                        return Err(OmError::CircuitAxioms(format!(
                            "elimination fails for {} and {} at {}",
                            a.label(&self.ground),
                            b.label(&self.ground),
                            self.ground[s]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Cocircuits: geometrically when realizable, otherwise by the
    /// orthogonality filter (small grounds only).
    pub fn cocircuits(&self) -> BTreeSet<SignedSet> {
        match &self.realization {
            Some(a) => cocircuits_of(a),
            None => support_minimal(&perp_filter(self.n(), &self.circuits)),
        }
    }

    /// All vectors: composition closure of the circuits.
    pub fn vectors(&self) -> BTreeSet<SignedSet> {
        span_signed(&self.circuits)
    }

    /// All covectors: composition closure of the cocircuits.
    pub fn covectors(&self) -> BTreeSet<SignedSet> {
        span_signed(&self.cocircuits())
    }

    /// No positive circuit.
    pub fn is_acyclic(&self) -> bool {
        !self.circuits.iter().any(|c| c.minus.is_empty())
    }

    /// Agreement of the four acyclicity characterizations: no positive
    /// circuit, no positive vector, the all-positive covector exists, and
    /// every element lies in some non-negative cocircuit.
    pub fn acyclicity_conditions_agree(&self) -> bool {
        let i = self.is_acyclic();
        let ii = !self.vectors().iter().any(|v| !v.is_zero() && v.minus.is_empty());
        let all_pos = SignedSet { plus: self.full(), minus: Subset::EMPTY };
        let iii = self.covectors().contains(&all_pos);
        let cocircuits = self.cocircuits();
        let iv =
            (0..self.n()).all(|s| cocircuits.iter().any(|c| c.minus.is_empty() && c.plus.contains(s)));
        i == ii && ii == iii && iii == iv
    }

    pub fn has_loops(&self) -> bool {
        self.circuits.iter().any(|c| c.support().len() == 1)
    }

    /// Faces: complements of non-negative covectors. Requires acyclicity.
    pub fn faces(&self) -> Result<BTreeSet<Subset>, OmError> {
        if !self.is_acyclic() {
            return Err(OmError::NotAcyclic);
        }
        Ok(self
            .covectors()
            .iter()
            .filter(|v| v.minus.is_empty())
            .map(|v| self.full().minus(v.plus))
            .collect())
    }

    pub fn face_label(&self, f: Subset) -> String {
        if f.is_empty() {
            "{}".to_string()
        } else {
            f.label(&self.ground)
        }
    }

    /// The Las Vergnas face lattice, labelled by ground subsets.
    pub fn face_lattice(&self) -> Result<FiniteLattice, OmError> {
        let faces: Vec<Subset> = self.faces()?.into_iter().collect();
        let labels: Vec<String> = faces.iter().map(|&f| self.face_label(f)).collect();
        let mut rels = Vec::new();
        for (i, &a) in faces.iter().enumerate() {
            for (j, &b) in faces.iter().enumerate() {
                if i != j && a.is_subset_of(b) {
                    rels.push((i, j));
                }
            }
        }
        let poset = FinitePoset::from_relations(labels, &rels)?;
        Ok(lattice::lattice_from_poset(poset)?)
    }

    /// The face semilattice: the face lattice without its top element.
    pub fn face_semilattice(&self) -> Result<MeetSemilattice, OmError> {
        let l = self.face_lattice()?;
        Ok(MeetSemilattice::from_lattice_without_top(&l))
    }

    /// The inclusion-minimal face containing `x`, grown by absorbing the
    /// supports of circuits whose negative part is already inside.
    pub fn smallest_face_containing(&self, x: Subset) -> Result<Subset, OmError> {
        if !self.is_acyclic() {
            return Err(OmError::NotAcyclic);
        }
        let mut f = x;
        loop {
            let grow =
                self.circuits.iter().find(|c| c.minus.is_subset_of(f) && !c.plus.is_subset_of(f));
            match grow {
                Some(c) => f = f.union(c.support()),
                None => return Ok(f),
            }
        }
    }

    /// Restriction to `r`: circuits with support inside `r`, reindexed.
    pub fn restrict(&self, r: Subset) -> OrientedMatroid {
        let circuits: BTreeSet<SignedSet> = self
            .circuits
            .iter()
            .filter(|c| c.support().is_subset_of(r))
            .map(|c| c.reindex(r))
            .collect();
        let ground: Vec<String> = r.iter().map(|i| self.ground[i].clone()).collect();
        match &self.realization {
            Some(a) => {
                let sub = a.restrict(r);
                OrientedMatroid { ground, circuits, rank: sub.rank(), realization: Some(sub) }
            }
            None => OrientedMatroid::from_circuits(ground, circuits),
        }
    }

    /// Contraction of `r`: support-minimal nonzero parts of circuits off `r`.
    pub fn contract(&self, r: Subset) -> OrientedMatroid {
        let keep = self.full().minus(r);
        let deleted: BTreeSet<SignedSet> =
            self.circuits.iter().map(|c| c.delete(r)).filter(|c| !c.is_zero()).collect();
        let circuits: BTreeSet<SignedSet> =
            support_minimal(&deleted).into_iter().map(|c| c.reindex(keep)).collect();
        let ground: Vec<String> = keep.iter().map(|i| self.ground[i].clone()).collect();
        match &self.realization {
            Some(a) => {
                let sub = a.contract(r);
                OrientedMatroid { ground, circuits, rank: sub.rank(), realization: Some(sub) }
            }
            None => OrientedMatroid::from_circuits(ground, circuits),
        }
    }

    /// Equivalence classes of circuit-support co-membership.
    pub fn connected_components(&self) -> Vec<Subset> {
        let n = self.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, i: usize) -> usize {
            if p[i] != i {
                let r = find(p, p[i]);
                p[i] = r;
            }
            p[i]
        }
        for c in &self.circuits {
            let mut it = c.support().iter();
            if let Some(first) = it.next() {
                for other in it {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, other));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let mut classes: BTreeMap<usize, Subset> = BTreeMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            let e = classes.entry(r).or_insert(Subset::EMPTY);
            *e = e.insert(i);
        }
        classes.into_values().collect()
    }

    /// Direct sum on disjoint grounds: circuits are the union of the two
    /// circuit sets.
    pub fn direct_sum(&self, other: &OrientedMatroid) -> Result<OrientedMatroid, OmError> {
        if self.ground.iter().any(|g| other.ground.contains(g)) {
            return Err(OmError::GroundOverlap);
        }
        let mut ground = self.ground.clone();
        ground.extend(other.ground.iter().cloned());
        let shift = self.n();
        let mut circuits = self.circuits.clone();
        circuits.extend(other.circuits.iter().map(|c| SignedSet {
            plus: Subset(c.plus.0 << shift),
            minus: Subset(c.minus.0 << shift),
        }));
        let realization = match (&self.realization, &other.realization) {
            (Some(a), Some(b)) => {
                let mut cols = Vec::new();
                for c in &a.columns {
                    let mut v = c.clone();
                    v.extend(vec![Rat::zero(); b.dim()]);
                    cols.push(v);
                }
                for c in &b.columns {
                    let mut v = vec![Rat::zero(); a.dim()];
                    v.extend(c.iter().cloned());
                    cols.push(v);
                }
                Some(VectorConfig::new(ground.clone(), cols))
            }
            _ => None,
        };
        Ok(OrientedMatroid { ground, circuits, rank: self.rank + other.rank, realization })
    }

    /// The flat lattice: complements of covector supports under inclusion.
    pub fn flat_lattice(&self) -> Result<FiniteLattice, OmError> {
        let flats: Vec<Subset> = self
            .covectors()
            .iter()
            .map(|v| self.full().minus(v.support()))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let labels: Vec<String> = flats.iter().map(|&f| self.face_label(f)).collect();
        let mut rels = Vec::new();
        for (i, &a) in flats.iter().enumerate() {
            for (j, &b) in flats.iter().enumerate() {
                if i != j && a.is_subset_of(b) {
                    rels.push((i, j));
                }
            }
        }
        let poset = FinitePoset::from_relations(labels, &rels)?;
        Ok(lattice::lattice_from_poset(poset)?)
    }

    /// The initial oriented matroid for a weight vector: each circuit is
    /// restricted to its minimum-weight elements, then the support-minimal
    /// members are kept. The circuit axioms are validated on the result.
    ///
    /// Minimum-weight parts pair with nested-fan rays built from
    /// characteristic vectors; keeping maximum-weight elements instead
    /// corresponds to negating the weights.
    pub fn initial_om(&self, w: &[Rat]) -> Result<OrientedMatroid, OmError> {
        assert_eq!(w.len(), self.n());
        let initials: BTreeSet<SignedSet> = self
            .circuits
            .iter()
            .map(|c| {
                let min = c.support().iter().map(|i| &w[i]).min().expect("nonempty support");
                let keep = Subset::from_indices(c.support().iter().filter(|&i| &w[i] == min));
                c.restrict(keep)
            })
            .collect();
        let circuits = support_minimal(&initials);
        let om = OrientedMatroid::from_circuits(self.ground.clone(), circuits);
        om.check_circuit_axioms()?;
        Ok(om)
    }
}

// ---------------------------------------------------------------------------
// Digraphs
// ---------------------------------------------------------------------------

/// A directed multigraph with labelled arcs; loops and parallel arcs are
/// allowed in general, though loops are rejected by the acyclic pipelines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    pub vertices: Vec<String>,
    /// (label, tail index, head index)
    pub arcs: Vec<(String, usize, usize)>,
}

impl Digraph {
    pub fn new(vertices: Vec<String>, arcs: Vec<(String, usize, usize)>) -> Digraph {
        let mut seen = BTreeSet::new();
        for (l, _, _) in &arcs {
            assert!(seen.insert(l.clone()), "duplicate arc label {l}");
        }
        Digraph { vertices, arcs }
    }

    pub fn n_arcs(&self) -> usize {
        self.arcs.len()
    }

    /// Incidence configuration: one column `b_tail - b_head` per arc.
    pub fn incidence_config(&self) -> VectorConfig {
        let d = self.vertices.len();
        let cols = self
            .arcs
            .iter()
            .map(|&(_, t, h)| {
                let mut v = vec![Rat::zero(); d];
                v[t] += rat(1);
                v[h] -= rat(1);
                v
            })
            .collect();
        VectorConfig::new(self.arcs.iter().map(|(l, _, _)| l.clone()).collect(), cols)
    }

    /// True when the digraph has no directed cycle (loops included).
    pub fn is_acyclic_digraph(&self) -> bool {
        if self.arcs.iter().any(|&(_, t, h)| t == h) {
            return false;
        }
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for &(_, _, h) in &self.arcs {
            indeg[h] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for &(_, t, h) in &self.arcs {
                if t == v {
                    indeg[h] -= 1;
                    if indeg[h] == 0 {
                        queue.push(h);
                    }
                }
            }
        }
        seen == n
    }

    /// Restriction to a set of arcs (keeping all vertices).
    pub fn restrict(&self, r: Subset) -> Digraph {
        Digraph {
            vertices: self.vertices.clone(),
            arcs: r.iter().map(|i| self.arcs[i].clone()).collect(),
        }
    }

    /// Contraction of a set of arcs: their endpoints merged.
    pub fn contract(&self, r: Subset) -> Digraph {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, i: usize) -> usize {
            if p[i] != i {
                let r = find(p, p[i]);
                p[i] = r;
            }
            p[i]
        }
        for i in r.iter() {
            let (_, t, h) = self.arcs[i];
            let (a, b) = (find(&mut parent, t), find(&mut parent, h));
            if a != b {
                parent[a] = b;
            }
        }
        let reps: Vec<usize> = {
            let mut set = BTreeSet::new();
            for v in 0..n {
                set.insert(find(&mut parent, v));
            }
            set.into_iter().collect()
        };
        let vert_labels: Vec<String> = reps
            .iter()
            .map(|&rep| {
                let members: Vec<&str> = (0..n)
                    .filter(|&v| find(&mut parent, v) == rep)
                    .map(|v| self.vertices[v].as_str())
                    .collect();
                members.join("+")
            })
            .collect();
        let arcs = self
            .arcs
            .iter()
            .enumerate()
            .filter(|(i, _)| !r.contains(*i))
            .map(|(_, (l, t, h))| {
                let rt = find(&mut parent, *t);
                let rh = find(&mut parent, *h);
                (
                    l.clone(),
                    reps.iter().position(|&x| x == rt).unwrap(),
                    reps.iter().position(|&x| x == rh).unwrap(),
                )
            })
            .collect();
        Digraph { vertices: vert_labels, arcs }
    }

    /// The line graph on arcs: edges between arcs sharing an endpoint.
    pub fn line_graph_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for i in 0..self.arcs.len() {
            for j in i + 1..self.arcs.len() {
                let (_, t1, h1) = self.arcs[i];
                let (_, t2, h2) = self.arcs[j];
                if t1 == t2 || t1 == h2 || h1 == t2 || h1 == h2 {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    /// Underlying-graph connectivity over the vertices touched by arcs.
    pub fn is_connected_underlying(&self) -> bool {
        let touched: BTreeSet<usize> = self.arcs.iter().flat_map(|&(_, t, h)| [t, h]).collect();
        let Some(&start) = touched.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(_, t, h) in &self.arcs {
                if t == v || h == v {
                    for w in [t, h] {
                        if seen.insert(w) {
                            stack.push(w);
                        }
                    }
                }
            }
        }
        seen == touched
    }
}

/// The graphical oriented matroid: one circuit pair per simple cycle of the
/// underlying multigraph, signs by traversal direction. Carries the
/// incidence realization.
pub fn om_from_digraph(d: &Digraph) -> OrientedMatroid {
    let mut circuits = BTreeSet::new();
    let m = d.n_arcs();
    for (i, &(_, t, h)) in d.arcs.iter().enumerate() {
        if t == h {
            let c = SignedSet::new(Subset::singleton(i), Subset::EMPTY);
            circuits.insert(c);
            circuits.insert(c.negated());
        }
    }
    // Grow arc-simple walks from each start arc (smallest index in its
    // cycle); a closed walk is a simple cycle when every met vertex has
    // degree two.
    for start in 0..m {
        let (_, st, sh) = d.arcs[start];
        if st == sh {
            continue;
        }
        let mut stack: Vec<(usize, Subset, Subset)> =
            vec![(sh, Subset::singleton(start), Subset::EMPTY)];
        while let Some((at, plus, minus)) = stack.pop() {
            for (i, &(_, t, h)) in d.arcs.iter().enumerate() {
                if i <= start || plus.union(minus).contains(i) || t == h {
                    continue;
                }
                for (from, next, fwd) in [(t, h, true), (h, t, false)] {
                    if from != at {
                        continue;
                    }
                    let (np, nm) =
                        if fwd { (plus.insert(i), minus) } else { (plus, minus.insert(i)) };
                    if next == st {
                        if cycle_is_simple(d, np.union(nm)) {
                            let c = SignedSet::new(np, nm);
                            circuits.insert(c);
                            circuits.insert(c.negated());
                        }
                    } else if !walk_visits(d, plus.union(minus), next, st) {
                        stack.push((next, np, nm));
                    }
                }
            }
        }
    }
    let config = d.incidence_config();
    OrientedMatroid {
        ground: config.ground.clone(),
        circuits,
        rank: config.rank(),
        realization: Some(config),
    }
}

fn cycle_is_simple(d: &Digraph, arcs: Subset) -> bool {
    let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
    for i in arcs.iter() {
        let (_, t, h) = d.arcs[i];
        *deg.entry(t).or_insert(0) += 1;
        *deg.entry(h).or_insert(0) += 1;
    }
    deg.values().all(|&v| v == 2)
}

fn walk_visits(d: &Digraph, arcs: Subset, v: usize, start: usize) -> bool {
    if v == start {
        return true;
    }
    arcs.iter().any(|i| {
        let (_, t, h) = d.arcs[i];
        t == v || h == v
    })
}

// ---------------------------------------------------------------------------
// Stellar subdivision and free sums of configurations
// ---------------------------------------------------------------------------

/// Result of a certified stellar subdivision.
#[derive(Clone, Debug)]
pub struct StellarSubdivision {
    pub config: VectorConfig,
    pub epsilon: Rat,
}

/// Appends `a_F = sum_{s in F} a_s - eps * sum_s a_s`, halving eps until the
/// face semilattice of the extended configuration is isomorphic to the
/// combinatorial blow-up of the face semilattice at `f`. The budget bounds
/// the number of halvings; running out is an explicit error.
pub fn stellar_subdivision(
    a: &VectorConfig,
    f: Subset,
    new_label: &str,
    budget: usize,
) -> Result<StellarSubdivision, OmError> {
    let om = OrientedMatroid::from_config(a);
    let faces = om.faces()?;
    if !faces.contains(&f) || f == om.full() {
        return Err(OmError::NotAProperFace(f.label(&a.ground)));
    }
    let expected = {
        let semi = om.face_semilattice()?;
        BlowupPoset::from_semilattice(&semi).blowup(&om.face_label(f))?
    };
    let total: Vec<Rat> =
        (0..a.dim()).map(|k| a.columns.iter().map(|c| c[k].clone()).sum()).collect();
    let f_sum: Vec<Rat> =
        (0..a.dim()).map(|k| f.iter().map(|i| a.columns[i][k].clone()).sum()).collect();
    let mut eps = crate::util::rat_frac(1, 2);
    for _ in 0..budget {
        let new_col = sub(&f_sum, &crate::linalg::scale(&total, &eps));
        let mut ground = a.ground.clone();
        ground.push(new_label.to_string());
        let mut cols = a.columns.clone();
        cols.push(new_col);
        let bigger = VectorConfig::new(ground, cols);
        let om2 = OrientedMatroid::from_config(&bigger);
        if om2.is_acyclic() {
            if let Ok(semi2) = om2.face_semilattice() {
                if semi2.poset.is_isomorphic(&expected.semilattice.poset) {
                    return Ok(StellarSubdivision { config: bigger, epsilon: eps });
                }
            }
        }
        eps /= rat(2);
    }
    Err(OmError::CertificationFailed(budget))
}

/// Free sum of two acyclic configurations: both are mapped into
/// complementary coordinate blocks sharing one axis, with their interior
/// vectors aligned along the shared axis.
pub fn free_sum_config(a: &VectorConfig, b: &VectorConfig) -> Result<VectorConfig, OmError> {
    let oa = OrientedMatroid::from_config(a);
    let ob = OrientedMatroid::from_config(b);
    if !oa.is_acyclic() || !ob.is_acyclic() {
        return Err(OmError::NotAcyclic);
    }
    if a.ground.iter().any(|g| b.ground.contains(g)) {
        return Err(OmError::GroundOverlap);
    }
    let ca = coords_interior_last(a);
    let cb = coords_interior_last(b);
    let ra = ca.first().map_or(0, |c| c.len());
    let rb = cb.first().map_or(0, |c| c.len());
    let dim = ra + rb - 1;
    let mut ground = a.ground.clone();
    ground.extend(b.ground.iter().cloned());
    let mut cols = Vec::new();
    for c in &ca {
        let mut v = c.clone();
        v.extend(vec![Rat::zero(); rb - 1]);
        cols.push(v);
    }
    for c in &cb {
        // The interior coordinate of b rides the shared axis ra - 1.
        let mut v = vec![Rat::zero(); dim];
        v[ra - 1] = c[rb - 1].clone();
        for (k, x) in c.iter().take(rb - 1).enumerate() {
            v[ra + k] = x.clone();
        }
        cols.push(v);
    }
    Ok(VectorConfig::new(ground, cols))
}

/// Coordinates of the columns in a basis of their span whose last vector is
/// the interior vector (the column sum).
fn coords_interior_last(cfg: &VectorConfig) -> Vec<Vec<Rat>> {
    let basis_rows = cfg.matrix().transpose().row_space_basis();
    let r = basis_rows.len();
    let in_span = Mat::from_rows(basis_rows).transpose();
    let coords: Vec<Vec<Rat>> =
        cfg.columns.iter().map(|c| in_span.solve(c).expect("column in span")).collect();
    let interior: Vec<Rat> = (0..r).map(|k| coords.iter().map(|c| c[k].clone()).sum()).collect();
    // Greedily extend {interior} to a basis by standard vectors, then put
    // the interior last.
    let mut rows: Vec<Vec<Rat>> = vec![interior.clone()];
    for k in 0..r {
        if rows.len() == r {
            break;
        }
        let mut e = vec![Rat::zero(); r];
        e[k] = rat(1);
        let mut trial = rows.clone();
        trial.push(e.clone());
        if Mat::from_rows(trial.clone()).rank() == rows.len() + 1 {
            rows.push(e);
        }
    }
    rows.rotate_left(1);
    let change = Mat::from_rows(rows).transpose();
    coords.iter().map(|c| change.solve(c).expect("basis change")).collect()
}

/// Certifies that the face lattice of the free sum is the free product of
/// the face lattices.
pub fn free_sum_face_lattice_certified(
    a: &VectorConfig,
    b: &VectorConfig,
) -> Result<(VectorConfig, FiniteLattice), OmError> {
    let joined = free_sum_config(a, b)?;
    let om = OrientedMatroid::from_config(&joined);
    let fl = om.face_lattice()?;
    let la = OrientedMatroid::from_config(a).face_lattice()?;
    let lb = OrientedMatroid::from_config(b).face_lattice()?;
    let expected = lattice::free_product(&la, &lb);
    if !fl.poset.is_isomorphic(&expected.poset) {
        return Err(OmError::CertificationFailed(0));
    }
    Ok((joined, fl))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::rat;

    fn label_set(om: &OrientedMatroid, sets: &BTreeSet<SignedSet>) -> BTreeSet<String> {
        sets.iter().map(|c| c.label(&om.ground)).collect()
    }

    use crate::verify::samples::{a_circ, d_circ};

    #[test]
    fn circuits_of_a_circ() {
        let om = OrientedMatroid::from_config(&a_circ());
        assert_eq!(om.circuits.len(), 6);
        let expected: BTreeSet<String> =
            ["(1,2)", "(2,1)", "(16,45)", "(45,16)", "(26,45)", "(45,26)"]
                .iter()
                .map(|s| s.to_string())
                .collect();
        assert_eq!(label_set(&om, &om.circuits), expected);
        om.check_circuit_axioms().unwrap();
    }

    #[test]
    fn cocircuits_of_a_circ() {
        let om = OrientedMatroid::from_config(&a_circ());
        let cocircuits = om.cocircuits();
        assert_eq!(cocircuits.len(), 14);
        let expected: BTreeSet<String> = [
            "(12,6)", "(6,12)", "(124,)", "(,124)", "(125,)", "(,125)", "(3,)", "(,3)", "(46,)",
            "(,46)", "(4,5)", "(5,4)", "(56,)", "(,56)",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        assert_eq!(label_set(&om, &cocircuits), expected);
    }

    #[test]
    fn vector_and_covector_counts_of_a_circ() {
        let om = OrientedMatroid::from_config(&a_circ());
        assert_eq!(om.vectors().len(), 13);
        assert_eq!(om.covectors().len(), 153);
    }

    #[test]
    fn independent_columns_have_no_circuits() {
        let ground: Vec<String> = (1..=3).map(|i| i.to_string()).collect();
        let cols = vec![
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(1)],
        ];
        let om = OrientedMatroid::from_config(&VectorConfig::new(ground, cols));
        assert!(om.circuits.is_empty());
        assert_eq!(om.rank, 3);
    }

    #[test]
    fn two_equal_columns_form_a_circuit_pair() {
        let ground = vec!["a".to_string(), "b".to_string()];
        let cols = vec![vec![rat(1), rat(1)], vec![rat(1), rat(1)]];
        let om = OrientedMatroid::from_config(&VectorConfig::new(ground, cols));
        assert_eq!(om.circuits.len(), 2);
        let c = om.circuits.iter().next().unwrap();
        assert_eq!(c.support().len(), 2);
        assert_eq!(c.plus.len(), 1);
    }

    #[test]
    fn single_nonzero_column_and_basis_cocircuits() {
        let om = OrientedMatroid::from_config(&VectorConfig::new(
            vec!["a".to_string()],
            vec![vec![rat(2)]],
        ));
        assert_eq!(om.cocircuits().len(), 2);
        let basis = VectorConfig::new(
            vec!["a".to_string(), "b".to_string()],
            vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]],
        );
        assert_eq!(OrientedMatroid::from_config(&basis).cocircuits().len(), 4);
    }

    #[test]
    fn span_by_composition_matches_perp_filter() {
        let om = OrientedMatroid::from_config(&a_circ());
        assert_eq!(om.vectors(), perp_filter(om.n(), &om.cocircuits()));
        assert_eq!(om.covectors(), perp_filter(om.n(), &om.circuits));
        assert_eq!(span_signed(&BTreeSet::new()).len(), 1);
    }

    #[test]
    fn graphical_om_matches_incidence_configuration() {
        let d = d_circ();
        let om_graph = om_from_digraph(&d);
        let om_cfg = OrientedMatroid::from_config(&d.incidence_config());
        assert_eq!(om_graph.circuits, om_cfg.circuits);
        let om_a = OrientedMatroid::from_config(&a_circ());
        assert_eq!(om_graph.circuits, om_a.circuits);
    }

    #[test]
    fn forest_has_no_circuits_and_two_cycle_has_one_pair() {
        let verts: Vec<String> = (1..=3).map(|i| i.to_string()).collect();
        let forest =
            Digraph::new(verts.clone(), vec![("a".to_string(), 0, 1), ("b".to_string(), 1, 2)]);
        assert!(om_from_digraph(&forest).circuits.is_empty());
        let two_cycle =
            Digraph::new(verts, vec![("a".to_string(), 0, 1), ("b".to_string(), 1, 0)]);
        let om = om_from_digraph(&two_cycle);
        assert_eq!(om.circuits.len(), 2);
        let expected = OrientedMatroid::from_config(&two_cycle.incidence_config());
        assert_eq!(om.circuits, expected.circuits);
        assert!(om.circuits.iter().any(|c| c.minus.is_empty()));
    }

    #[test]
    fn acyclicity_checks() {
        let om = OrientedMatroid::from_config(&a_circ());
        assert!(om.is_acyclic());
        assert!(om.acyclicity_conditions_agree());
        let cyc = Digraph::new(
            (1..=3).map(|i| i.to_string()).collect(),
            vec![("a".to_string(), 0, 1), ("b".to_string(), 1, 2), ("c".to_string(), 2, 0)],
        );
        let om_cyc = om_from_digraph(&cyc);
        assert!(!om_cyc.is_acyclic());
        assert!(om_cyc.acyclicity_conditions_agree());
        let free = OrientedMatroid::from_circuits(vec!["x".to_string()], BTreeSet::new());
        assert!(free.is_acyclic());
    }

    #[test]
    fn face_lattice_of_circuit_free_om_is_boolean() {
        let ground: Vec<String> = (1..=3).map(|i| i.to_string()).collect();
        let cols = vec![
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(1)],
        ];
        let om = OrientedMatroid::from_config(&VectorConfig::new(ground.clone(), cols));
        let fl = om.face_lattice().unwrap();
        assert!(fl.poset.is_isomorphic(&lattice::boolean_lattice(&ground).poset));
    }

    #[test]
    fn face_lattice_of_a_circ() {
        let om = OrientedMatroid::from_config(&a_circ());
        let fl = om.face_lattice().unwrap();
        assert_eq!(fl.label(fl.top), "123456");
        assert_eq!(fl.label(fl.bottom), "{}");
        let faces = om.faces().unwrap();
        let has = |name: &str| faces.iter().any(|f| f.label(&om.ground) == name);
        // The parallel elements 1 and 2 only appear together in faces.
        assert!(has("12") && has("3") && !has("1") && !has("2"));
    }

    #[test]
    fn graphical_face_lattice_matches_contraction_description() {
        // Faces of an acyclic digraph's oriented matroid are exactly the arc
        // sets whose contraction leaves an acyclic digraph.
        let d = d_circ();
        let om = om_from_digraph(&d);
        let faces = om.faces().unwrap();
        for m in 0..1u64 << d.n_arcs() {
            let arcs = Subset(m);
            let ok = d.contract(arcs).is_acyclic_digraph();
            assert_eq!(faces.contains(&arcs), ok, "{arcs:?}");
        }
    }

    #[test]
    fn smallest_face_containing_examples() {
        let om = OrientedMatroid::from_config(&a_circ());
        let faces = om.faces().unwrap();
        for &f in &faces {
            assert_eq!(om.smallest_face_containing(f).unwrap(), f);
        }
        let one = Subset::singleton(0);
        let f = om.smallest_face_containing(one).unwrap();
        assert_eq!(f.label(&om.ground), "12");
        assert_eq!(om.smallest_face_containing(om.full()).unwrap(), om.full());
        let smallest = faces
            .iter()
            .copied()
            .filter(|g| one.is_subset_of(*g))
            .min_by_key(|g| g.len())
            .unwrap();
        assert_eq!(f, smallest);
    }

    #[test]
    fn restriction_and_contraction_match_configurations() {
        let a = a_circ();
        let om = OrientedMatroid::from_config(&a);
        let r = Subset::from_indices([0, 1, 2]);
        assert_eq!(
            om.restrict(r).circuits,
            OrientedMatroid::from_config(&a.restrict(r)).circuits
        );
        assert_eq!(
            om.contract(r).circuits,
            OrientedMatroid::from_config(&a.contract(r)).circuits
        );
        assert!(om.restrict(Subset::EMPTY).circuits.is_empty());
    }

    #[test]
    fn graphical_restriction_contraction_commute_with_om() {
        let d = d_circ();
        let om = om_from_digraph(&d);
        let r = Subset::from_indices([0, 1, 2]);
        assert_eq!(om.restrict(r).circuits, om_from_digraph(&d.restrict(r)).circuits);
        assert_eq!(om.contract(r).circuits, om_from_digraph(&d.contract(r)).circuits);
    }

    #[test]
    fn connected_components_of_a_circ() {
        let om = OrientedMatroid::from_config(&a_circ());
        let labels: BTreeSet<String> =
            om.connected_components().iter().map(|c| c.label(&om.ground)).collect();
        assert_eq!(labels, ["12456", "3"].iter().map(|s| s.to_string()).collect());
        let free = OrientedMatroid::from_circuits(
            (1..=3).map(|i| i.to_string()).collect(),
            BTreeSet::new(),
        );
        assert_eq!(free.connected_components().len(), 3);
    }

    #[test]
    fn direct_sum_face_lattice_is_cartesian_product() {
        let seg = |a: &str, b: &str| {
            VectorConfig::new(
                vec![a.to_string(), b.to_string()],
                vec![vec![rat(-1), rat(1)], vec![rat(1), rat(1)]],
            )
        };
        let m1 = OrientedMatroid::from_config(&seg("1", "2"));
        let m2 = OrientedMatroid::from_config(&seg("3", "4"));
        let s = m1.direct_sum(&m2).unwrap();
        let fl = s.face_lattice().unwrap();
        let expected =
            lattice::cartesian_product(&m1.face_lattice().unwrap(), &m2.face_lattice().unwrap());
        assert!(fl.poset.is_isomorphic(&expected.poset));
        assert!(m1.direct_sum(&m1).is_err());
        let empty = OrientedMatroid::from_circuits(Vec::new(), BTreeSet::new());
        assert_eq!(m1.direct_sum(&empty).unwrap().circuits, m1.circuits);
    }

    #[test]
    fn om_decomposes_along_connected_components() {
        let om = OrientedMatroid::from_config(&a_circ());
        let comps = om.connected_components();
        let mut parts = comps.iter().map(|&c| om.restrict(c));
        let mut acc = parts.next().unwrap();
        for p in parts {
            acc = acc.direct_sum(&p).unwrap();
        }
        let lbl = |m: &OrientedMatroid| -> BTreeSet<String> {
            m.circuits.iter().map(|c| c.label(&m.ground)).collect()
        };
        assert_eq!(lbl(&acc), lbl(&om));
        let faces = om.faces().unwrap();
        for c in comps {
            assert!(faces.contains(&c));
        }
    }

    #[test]
    fn stellar_subdivision_of_triangle_edge() {
        let tri = VectorConfig::new(
            (1..=3).map(|i| i.to_string()).collect(),
            vec![
                vec![rat(0), rat(0), rat(1)],
                vec![rat(1), rat(0), rat(1)],
                vec![rat(0), rat(1), rat(1)],
            ],
        );
        let f = Subset::from_indices([0, 1]);
        let sd = stellar_subdivision(&tri, f, "e", 30).unwrap();
        let om2 = OrientedMatroid::from_config(&sd.config);
        let names: BTreeSet<String> =
            om2.faces().unwrap().iter().map(|s| s.label(&sd.config.ground)).collect();
        assert!(!names.contains("12"));
        assert!(names.contains("1e") && names.contains("2e"));
        assert!(matches!(
            stellar_subdivision(&tri, Subset::from_indices([0, 1, 2]), "x", 5),
            Err(OmError::NotAProperFace(_))
        ));
    }

    #[test]
    fn subdivided_vertex_leaves_all_faces() {
        // After subdividing at a vertex face, the original element is in no
        // face of the new oriented matroid.
        let seg = VectorConfig::new(
            vec!["1".to_string(), "2".to_string()],
            vec![vec![rat(-1), rat(1)], vec![rat(1), rat(1)]],
        );
        let om = OrientedMatroid::from_config(&seg);
        let vertex = om
            .faces()
            .unwrap()
            .into_iter()
            .find(|f| f.len() == 1)
            .unwrap();
        let sd = stellar_subdivision(&seg, vertex, "v", 30).unwrap();
        let om2 = OrientedMatroid::from_config(&sd.config);
        let elt = vertex.iter().next().unwrap();
        for f in om2.faces().unwrap() {
            assert!(f == om2.full() || !f.contains(elt));
        }
    }

    #[test]
    fn free_sum_of_segments_is_square() {
        let seg = |a: &str, b: &str| {
            VectorConfig::new(
                vec![a.to_string(), b.to_string()],
                vec![vec![rat(-1), rat(1)], vec![rat(1), rat(1)]],
            )
        };
        let (joined, fl) =
            free_sum_face_lattice_certified(&seg("1", "2"), &seg("3", "4")).unwrap();
        assert_eq!(joined.n(), 4);
        assert_eq!(fl.len(), 10);
    }

    #[test]
    fn free_sum_triangle_segment_is_bipyramid() {
        let tri = VectorConfig::new(
            (1..=3).map(|i| i.to_string()).collect(),
            vec![
                vec![rat(0), rat(0), rat(1)],
                vec![rat(1), rat(0), rat(1)],
                vec![rat(0), rat(1), rat(1)],
            ],
        );
        let seg = VectorConfig::new(
            vec!["4".to_string(), "5".to_string()],
            vec![vec![rat(-1), rat(1)], vec![rat(1), rat(1)]],
        );
        let (_, fl) = free_sum_face_lattice_certified(&tri, &seg).unwrap();
        assert_eq!(fl.len(), 22);
    }

    #[test]
    fn flats_of_circuit_free_om_form_boolean_lattice() {
        let ground: Vec<String> = (1..=3).map(|i| i.to_string()).collect();
        let cols = vec![
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(1)],
        ];
        let om = OrientedMatroid::from_config(&VectorConfig::new(ground.clone(), cols));
        let flats = om.flat_lattice().unwrap();
        assert!(flats.poset.is_isomorphic(&lattice::boolean_lattice(&ground).poset));
    }

    #[test]
    fn faces_are_flats() {
        let om = OrientedMatroid::from_config(&a_circ());
        let flats = om.flat_lattice().unwrap();
        let flat_labels: BTreeSet<String> =
            (0..flats.len()).map(|i| flats.label(i).to_string()).collect();
        for f in om.faces().unwrap() {
            assert!(flat_labels.contains(&om.face_label(f)));
        }
    }

    #[test]
    fn uniform_rank_two_flats() {
        let cols = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)], vec![rat(1), rat(1)]];
        let om = OrientedMatroid::from_config(&VectorConfig::new(
            (1..=3).map(|i| i.to_string()).collect(),
            cols,
        ));
        let flats = om.flat_lattice().unwrap();
        let labels: BTreeSet<String> =
            (0..flats.len()).map(|i| flats.label(i).to_string()).collect();
        assert_eq!(labels, ["{}", "1", "2", "3", "123"].iter().map(|s| s.to_string()).collect());
    }

    #[test]
    fn initial_om_for_constant_weights_is_identity() {
        let om = OrientedMatroid::from_config(&a_circ());
        let w = vec![rat(1); om.n()];
        assert_eq!(om.initial_om(&w).unwrap().circuits, om.circuits);
    }

    #[test]
    fn initial_om_keeps_extreme_weight_arcs() {
        let tri = Digraph::new(
            (1..=3).map(|i| i.to_string()).collect(),
            vec![("a".to_string(), 0, 1), ("b".to_string(), 1, 2), ("c".to_string(), 2, 0)],
        );
        let om = om_from_digraph(&tri);
        let w = vec![rat(0), rat(1), rat(2)];
        let init = om.initial_om(&w).unwrap();
        assert_eq!(init.circuits.len(), 2);
        for c in &init.circuits {
            assert_eq!(c.support(), Subset::singleton(0));
        }
    }

    #[test]
    fn circuit_dependence_is_normalized() {
        let a = a_circ();
        let om = OrientedMatroid::from_config(&a);
        for &c in &om.circuits {
            let dep = circuit_dependence(&a, c);
            let min = dep.iter().filter(|x| !x.is_zero()).map(rat_abs).min().unwrap();
            assert_eq!(min, rat(1));
            assert_eq!(SignedSet::signature(&dep), c);
            for k in 0..a.dim() {
                let s: Rat = (0..a.n()).map(|i| &dep[i] * &a.columns[i][k]).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn circuits_orthogonal_to_cocircuits() {
        let om = OrientedMatroid::from_config(&a_circ());
        for &c in &om.circuits {
            for &d in &om.cocircuits() {
                assert!(c.orthogonal(d));
            }
        }
    }
}
