//! Facial building sets over Las Vergnas face lattices, oriented building
//! sets, acyclic nested sets and complexes, the facial/acyclic
//! correspondence, and realization by iterated stellar subdivision.

use crate::building::{blowup_matches_complex, BoolBuildingSet, BuildingError, BuildingSet, SimplicialComplex};
use crate::lattice::FiniteLattice;
use crate::om::{om_from_digraph, stellar_subdivision, Digraph, OmError, OrientedMatroid, VectorConfig};
use crate::util::{Rat, Subset};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FacialError {
    #[error("ground sets do not match")]
    GroundMismatch,
    #[error("set is not nested on the building set")]
    NotNested,
    #[error("block is not a member of the nested set")]
    BlockNotInNestedSet,
    #[error("the pair is not an oriented building set")]
    NotOrientedBuildingSet,
    #[error("the blocks do not form a facial building set")]
    NotFacialBuildingSet,
    #[error("realization certification failed")]
    CertificationFailed,
    #[error(transparent)]
    Om(#[from] OmError),
    #[error(transparent)]
    Building(#[from] BuildingError),
}

// ---------------------------------------------------------------------------
// Oriented building sets
// ---------------------------------------------------------------------------

/// A boolean building set paired with an oriented matroid on the same
/// ground, every circuit support being a block.
#[derive(Clone, Debug)]
pub struct OrientedBuildingSet {
    pub building: BoolBuildingSet,
    pub om: OrientedMatroid,
}

impl OrientedBuildingSet {
    pub fn new(
        building: BoolBuildingSet,
        om: OrientedMatroid,
    ) -> Result<OrientedBuildingSet, FacialError> {
        if building.ground != om.ground {
            return Err(FacialError::GroundMismatch);
        }
        if !is_oriented_building_set(&building, &om) {
            return Err(FacialError::NotOrientedBuildingSet);
        }
        Ok(OrientedBuildingSet { building, om })
    }

    /// The graphical oriented building set of a digraph: the graphical
    /// building set of its line graph with its graphical oriented matroid.
    pub fn graphical(d: &Digraph) -> Result<OrientedBuildingSet, FacialError> {
        let om = om_from_digraph(d);
        let building = BoolBuildingSet::graphical(om.ground.clone(), &d.line_graph_edges());
        OrientedBuildingSet::new(building, om)
    }

    pub fn ground(&self) -> &[String] {
        &self.building.ground
    }

    /// Restriction datum of a block in a nested set: restrict to the block
    /// and contract the union of the strictly smaller members.
    pub fn restriction_datum(
        &self,
        nested: &BTreeSet<Subset>,
        block: Subset,
    ) -> Result<OrientedBuildingSet, FacialError> {
        if !nested.contains(&block) {
            return Err(FacialError::BlockNotInNestedSet);
        }
        if !self.building.is_nested(nested)? {
            return Err(FacialError::NotNested);
        }
        let union_smaller = nested
            .iter()
            .copied()
            .filter(|&c| c != block && c.is_subset_of(block))
            .fold(Subset::EMPTY, Subset::union);
        let b = self.building.restrict(block).contract(union_smaller.reindex_into(block));
        let m = self.om.restrict(block).contract(union_smaller.reindex_into(block));
        Ok(OrientedBuildingSet { building: b, om: m })
    }

    /// Acyclicity of a nested set: every sub-union of members must be a face
    /// of the oriented matroid.
    pub fn is_acyclic_nested(&self, nested: &BTreeSet<Subset>) -> Result<bool, FacialError> {
        if !self.building.is_nested(nested)? {
            return Err(FacialError::NotNested);
        }
        let faces = self.om.faces()?;
        Ok(sub_unions_are_faces(nested, &faces))
    }

    /// Circuit-based acyclicity test: no circuit has its negative part
    /// covered by a sub-union missing part of the positive part. Debug
    /// oracle for the face-membership route.
    pub fn is_acyclic_nested_by_circuits(
        &self,
        nested: &BTreeSet<Subset>,
    ) -> Result<bool, FacialError> {
        if !self.building.is_nested(nested)? {
            return Err(FacialError::NotNested);
        }
        let members: Vec<Subset> = nested.iter().copied().collect();
        let unions = all_sub_unions(&members);
        Ok(!self.om.circuits.iter().any(|c| {
            unions
                .iter()
                .any(|&u| c.minus.is_subset_of(u) && !c.plus.is_subset_of(u))
        }))
    }

    /// Restriction-data acyclicity: the contraction datum of every member is
    /// an acyclic oriented matroid. Another equivalent form, for tests.
    pub fn is_acyclic_nested_by_data(
        &self,
        nested: &BTreeSet<Subset>,
    ) -> Result<bool, FacialError> {
        if !self.building.is_nested(nested)? {
            return Err(FacialError::NotNested);
        }
        for &b in nested {
            if !self.restriction_datum(nested, b)?.om.is_acyclic() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The acyclic nested complex: nested sets all of whose sub-unions are
    /// faces, minus the building set components. Empty when the oriented
    /// matroid is not acyclic.
    pub fn acyclic_nested_complex(&self) -> AcyclicNestedComplex {
        let comps: Vec<Subset> = self.building.components();
        let Ok(faces) = self.om.faces() else {
            // Not acyclic: no nested set is acyclic, not even the components.
            return AcyclicNestedComplex {
                complex: SimplicialComplex::new(Vec::new(), BTreeSet::new()),
            };
        };
        // Also the component set itself must be acyclic for the complex to
        // be nonempty.
        let comp_set: BTreeSet<Subset> = comps.iter().copied().collect();
        if !sub_unions_are_faces(&comp_set, &faces) {
            return AcyclicNestedComplex {
                complex: SimplicialComplex::new(Vec::new(), BTreeSet::new()),
            };
        }
        let complex = self.building.nested_complex_filtered(|members| {
            // The filter sees the face members (components excluded); the
            // union condition must include the components.
            let mut with: Vec<Subset> = members.to_vec();
            with.extend(comps.iter().copied());
            let whole: BTreeSet<Subset> = with.iter().copied().collect();
            sub_unions_are_faces(&whole, &faces)
        });
        AcyclicNestedComplex { complex }
    }
}

impl Subset {
    /// Reinterprets this subset of the big ground as indices inside `within`.
    pub(crate) fn reindex_into(self, within: Subset) -> Subset {
        let order: Vec<usize> = within.iter().collect();
        Subset::from_indices(self.iter().map(|i| order.iter().position(|&j| j == i).unwrap()))
    }
}

fn all_sub_unions(members: &[Subset]) -> Vec<Subset> {
    let mut out = BTreeSet::new();
    let k = members.len();
    assert!(k <= 20, "sub-union enumeration is desk scale");
    for mask in 0..1u64 << k {
        let u = (0..k)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| members[i])
            .fold(Subset::EMPTY, Subset::union);
        out.insert(u);
    }
    out.into_iter().collect()
}

fn sub_unions_are_faces(nested: &BTreeSet<Subset>, faces: &BTreeSet<Subset>) -> bool {
    let members: Vec<Subset> = nested.iter().copied().collect();
    all_sub_unions(&members).iter().all(|u| faces.contains(u))
}

/// The pair is an oriented building set: a boolean building set whose blocks
/// include every circuit support.
pub fn is_oriented_building_set(b: &BoolBuildingSet, m: &OrientedMatroid) -> bool {
    b.is_building_set() && m.circuits.iter().all(|c| b.blocks.contains(&c.support()))
}

/// The minimal building set making the oriented matroid an oriented building
/// set: the boolean closure of the circuit supports (plus singletons).
pub fn minimal_oriented_building_set(m: &OrientedMatroid) -> BoolBuildingSet {
    let seeds: BTreeSet<Subset> = m.circuits.iter().map(|c| c.support()).collect();
    BoolBuildingSet::closure(m.ground.clone(), &seeds)
}

/// The acyclic nested complex of an oriented building set, with vertices
/// labelled by blocks.
#[derive(Clone, Debug)]
pub struct AcyclicNestedComplex {
    pub complex: SimplicialComplex,
}

// ---------------------------------------------------------------------------
// Facial building sets
// ---------------------------------------------------------------------------

/// A building set over the Las Vergnas face lattice of an acyclic oriented
/// matroid; blocks are faces, kept as ground subsets.
#[derive(Clone, Debug)]
pub struct FacialBuildingSet {
    pub om: OrientedMatroid,
    pub blocks: BTreeSet<Subset>,
    pub face_lattice: FiniteLattice,
}

impl FacialBuildingSet {
    pub fn new(om: OrientedMatroid, blocks: BTreeSet<Subset>) -> Result<FacialBuildingSet, FacialError> {
        let face_lattice = om.face_lattice()?;
        let fbs = FacialBuildingSet { om, blocks, face_lattice };
        if !fbs.as_lattice_building_set()?.is_building_set() {
            return Err(FacialError::NotFacialBuildingSet);
        }
        Ok(fbs)
    }

    /// The maximal facial building set: all nonempty faces.
    pub fn maximal(om: OrientedMatroid) -> Result<FacialBuildingSet, FacialError> {
        let blocks: BTreeSet<Subset> =
            om.faces()?.into_iter().filter(|f| !f.is_empty()).collect();
        FacialBuildingSet::new(om, blocks)
    }

    /// The minimal facial building set: the image of the minimal oriented
    /// building set under the facial projection.
    pub fn minimal(om: OrientedMatroid) -> Result<FacialBuildingSet, FacialError> {
        let b = minimal_oriented_building_set(&om);
        let ob = OrientedBuildingSet::new(b, om)?;
        facial_part(&ob)
    }

    pub fn element_of(&self, f: Subset) -> usize {
        self.face_lattice
            .poset
            .index_of(&self.om.face_label(f))
            .expect("face present in lattice")
    }

    pub fn as_lattice_building_set(&self) -> Result<BuildingSet, FacialError> {
        let blocks: BTreeSet<usize> = self.blocks.iter().map(|&f| self.element_of(f)).collect();
        Ok(BuildingSet::new(self.face_lattice.clone(), blocks)?)
    }

    /// The facial nested complex: the nested complex over the face lattice,
    /// with vertices relabelled by ground subsets.
    pub fn nested_complex(&self) -> Result<SimplicialComplex, FacialError> {
        let bs = self.as_lattice_building_set()?;
        Ok(bs.nested_complex())
    }

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
}

/// The facial part of an oriented building set: blocks that are faces.
pub fn facial_part(ob: &OrientedBuildingSet) -> Result<FacialBuildingSet, FacialError> {
    let faces = ob.om.faces()?;
    let blocks: BTreeSet<Subset> =
        ob.building.blocks.iter().copied().filter(|b| faces.contains(b)).collect();
    FacialBuildingSet::new(ob.om.clone(), blocks)
}

/// The minimal oriented preimage of a facial building set: the boolean
/// closure of the facial blocks together with the circuit supports.
pub fn minimal_oriented_preimage(fb: &FacialBuildingSet) -> Result<OrientedBuildingSet, FacialError> {
    let mut seeds: BTreeSet<Subset> = fb.blocks.clone();
    seeds.extend(fb.om.circuits.iter().map(|c| c.support()));
    let building = BoolBuildingSet::closure(fb.om.ground.clone(), &seeds);
    OrientedBuildingSet::new(building, fb.om.clone())
}

// ---------------------------------------------------------------------------
// Hyperoctahedral constructions
// ---------------------------------------------------------------------------

/// The homogenized cross-polytope configuration: columns `e_i + e_{n+1}` and
/// `-e_i + e_{n+1}`, labelled `i` and `i'`.
pub fn cross_polytope_config(n: usize) -> VectorConfig {
    use crate::util::rat;
    let mut ground = Vec::new();
    let mut cols = Vec::new();
    for i in 0..n {
        ground.push(format!("{}", i + 1));
        let mut v = vec![Rat::from_integer(0.into()); n + 1];
        v[i] = rat(1);
        v[n] = rat(1);
        cols.push(v);
    }
    for i in 0..n {
        ground.push(format!("{}'", i + 1));
        let mut v = vec![Rat::from_integer(0.into()); n + 1];
        v[i] = rat(-1);
        v[n] = rat(1);
        cols.push(v);
    }
    VectorConfig::new(ground, cols)
}

/// Three-condition test for hyperoctahedral building sets on the ground
/// `1..n, 1'..n'`: no proper block contains an antipodal pair, the top and
/// all singletons are present, and unions of intersecting pair-free blocks
/// stay in the family.
pub fn is_hyperoctahedral_building_set(n: usize, blocks: &BTreeSet<Subset>) -> bool {
    let full = Subset::full(2 * n);
    let pair = |i: usize| Subset::from_indices([i, i + n]);
    let pair_free = |f: Subset| (0..n).all(|i| !pair(i).is_subset_of(f));
    let cond1 = blocks.iter().all(|&f| f == full || pair_free(f));
    let cond2 = blocks.contains(&full)
        && (0..2 * n).all(|i| blocks.contains(&Subset::singleton(i)));
    let cond3 = blocks.iter().all(|&f| {
        blocks.iter().all(|&g| {
            !(pair_free(f.union(g)) && f.intersects(g)) || blocks.contains(&f.union(g))
        })
    });
    cond1 && cond2 && cond3
}

/// The design building set of a boolean building set: the original blocks,
/// one fresh square singleton per ground element, and the doubled top.
pub fn design_building_set(b: &BoolBuildingSet) -> (Vec<String>, BTreeSet<Subset>) {
    let n = b.n();
    let mut ground = b.ground.clone();
    ground.extend(b.ground.iter().map(|g| format!("{g}'")));
    let mut blocks: BTreeSet<Subset> = b.blocks.clone();
    for i in 0..n {
        blocks.insert(Subset::singleton(n + i));
    }
    blocks.insert(Subset::full(2 * n));
    (ground, blocks)
}

// ---------------------------------------------------------------------------
// Realization by iterated stellar subdivision
// ---------------------------------------------------------------------------

/// Result of a realization by stellar subdivisions: the configuration on the
/// block labels, the face semilattice, and the epsilon trail.
#[derive(Clone, Debug)]
pub struct SdRealization {
    pub config: VectorConfig,
    pub epsilons: Vec<Rat>,
}

/// Realizes the facial nested complex of a connected facial building set
/// on a realizable oriented matroid: stellar-subdivide the blocks other
/// than the ground in a largest-first order, then restrict to the new
/// elements. The face semilattice of the result must coincide with the
/// face poset of the facial nested complex, block labels matching.
pub fn sd_realization(fb: &FacialBuildingSet) -> Result<SdRealization, FacialError> {
    let a = fb
        .om
        .realization
        .clone()
        .ok_or(FacialError::CertificationFailed)?;
    if !fb.is_connected() {
        return Err(FacialError::NotFacialBuildingSet);
    }
    let ground_face = fb.om.full();
    let mut blocks: Vec<Subset> = fb.blocks.iter().copied().filter(|&b| b != ground_face).collect();
    // Largest first; containment order refined by size.
    blocks.sort_by_key(|b| std::cmp::Reverse(b.len()));
    let mut cur = a.clone();
    let mut epsilons = Vec::new();
    let n0 = a.n();
    for (step, &b) in blocks.iter().enumerate() {
        // The original face b keeps its element indices in the grown config.
        let face_now = b;
        let label = format!("F{}", step);
        let sd = stellar_subdivision(&cur, face_now, &label, 30)?;
        epsilons.push(sd.epsilon.clone());
        cur = sd.config;
    }
    // Restrict to the added elements, relabelled by their blocks.
    let added = Subset::from_indices(n0..cur.n());
    let mut config = cur.restrict(added);
    for (step, &b) in blocks.iter().enumerate() {
        config.ground[step] = fb.om.face_label(b);
    }
    // Certificate: the face semilattice of the result, with faces read as
    // block sets, must be exactly the face poset of the nested complex.
    let om2 = OrientedMatroid::from_config(&config);
    let complex = fb.nested_complex()?;
    let result_faces: BTreeSet<BTreeSet<String>> = om2
        .faces()?
        .into_iter()
        .filter(|&f| f != om2.full())
        .map(|f| f.iter().map(|i| config.ground[i].clone()).collect())
        .collect();
    let expected = complex.label_faces();
    if result_faces != expected {
        return Err(FacialError::CertificationFailed);
    }
    Ok(SdRealization { config, epsilons })
}

/// Checks that the blow-up route and the nested complex agree for a facial
/// building set: iterated combinatorial blow-ups of the face semilattice
/// along the blocks (largest first) give the face poset of the facial
/// nested complex joined with the component simplex.
pub fn blowup_certificate(fb: &FacialBuildingSet) -> Result<bool, FacialError> {
    let bs = fb.as_lattice_building_set()?;
    let semi = crate::building::MeetSemilattice::from_lattice_without_top(&fb.face_lattice);
    let mut blocks: Vec<usize> = bs
        .blocks
        .iter()
        .copied()
        .filter(|&b| b != fb.face_lattice.top)
        .collect();
    blocks.sort_by_key(|&b| {
        std::cmp::Reverse(fb.face_lattice.poset.down_set(b).count())
    });
    let labels: Vec<String> =
        blocks.iter().map(|&b| fb.face_lattice.label(b).to_string()).collect();
    let result = crate::building::iterated_blowup(&semi, &labels)?;
    // Blowing up the proper blocks of a connected facial building set in the
    // face semilattice realizes the face poset of its nested complex.
    let complex = fb.nested_complex()?;
    Ok(blowup_matches_complex(&result, &complex))
}
