//! Invariant suites over randomized and exhaustive corpora, shared between
//! the `verify` CLI command and the acceptance tests. Also hosts the named
//! sample inputs that the suites and tests build on.

pub mod samples {
    use crate::building::BoolBuildingSet;
    use crate::om::{Digraph, VectorConfig};
    use crate::util::{rat, Rat, Subset};
    use std::collections::BTreeSet;

    /// Parses a "125"-style block name over single-character ground labels.
    pub fn blk(ground: &[String], name: &str) -> Subset {
        Subset::from_indices(
            name.chars()
                .map(|c| ground.iter().position(|g| g == &c.to_string()).expect("ground label")),
        )
    }

    /// The running six-element vector configuration.
    pub fn a_circ() -> VectorConfig {
        let ground: Vec<String> = (1..=6).map(|i| i.to_string()).collect();
        let col = |v: [i64; 4]| v.iter().map(|&x| rat(x)).collect::<Vec<Rat>>();
        VectorConfig::new(
            ground,
            vec![
                col([0, 0, 0, 1]),
                col([0, 0, 0, 1]),
                col([0, 0, 1, 1]),
                col([1, 0, 0, 1]),
                col([0, 1, 0, 1]),
                col([1, 1, 0, 1]),
            ],
        )
    }

    /// The digraph whose incidence configuration is a linear image of the
    /// running configuration: arcs 1,2: u3->u1, 3: u5->u2, 4: u3->u2,
    /// 5: u4->u1, 6: u4->u2.
    pub fn d_circ() -> Digraph {
        let verts: Vec<String> = (1..=5).map(|i| format!("u{i}")).collect();
        let arcs = vec![
            ("1".to_string(), 2, 0),
            ("2".to_string(), 2, 0),
            ("3".to_string(), 4, 1),
            ("4".to_string(), 2, 1),
            ("5".to_string(), 3, 0),
            ("6".to_string(), 3, 1),
        ];
        Digraph::new(verts, arcs)
    }

    /// The running 21-block building set on six elements.
    pub fn b_circ() -> BoolBuildingSet {
        let g: Vec<String> = (1..=6).map(|i| i.to_string()).collect();
        let names = [
            "1", "2", "3", "4", "5", "6", "12", "14", "25", "123", "124", "125", "456", "1234",
            "1235", "1245", "1456", "2456", "12345", "12456", "123456",
        ];
        let blocks: BTreeSet<Subset> = names.iter().map(|n| blk(&g, n)).collect();
        BoolBuildingSet::new(g, blocks)
    }

    /// Homogenized triangle.
    pub fn triangle_config() -> VectorConfig {
        VectorConfig::new(
            (1..=3).map(|i| i.to_string()).collect(),
            vec![
                vec![rat(0), rat(0), rat(1)],
                vec![rat(1), rat(0), rat(1)],
                vec![rat(0), rat(1), rat(1)],
            ],
        )
    }

    /// Homogenized segment on custom labels.
    pub fn segment_config(a: &str, b: &str) -> VectorConfig {
        VectorConfig::new(
            vec![a.to_string(), b.to_string()],
            vec![vec![rat(-1), rat(1)], vec![rat(1), rat(1)]],
        )
    }

    /// The alternating acyclic orientation of the four-cycle (two sources,
    /// two sinks); its single circuit is (13, 24) up to sign.
    pub fn four_cycle_alternating() -> Digraph {
        Digraph::new(
            ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect(),
            vec![
                ("1".to_string(), 0, 1),
                ("2".to_string(), 2, 1),
                ("3".to_string(), 2, 3),
                ("4".to_string(), 0, 3),
            ],
        )
    }

    /// The diamond orientation of the four-cycle (one source, one sink);
    /// its single circuit is (12, 34) up to sign.
    pub fn four_cycle_diamond() -> Digraph {
        Digraph::new(
            ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect(),
            vec![
                ("1".to_string(), 0, 1),
                ("2".to_string(), 1, 2),
                ("3".to_string(), 0, 3),
                ("4".to_string(), 3, 2),
            ],
        )
    }

    /// Directed triangle (a directed cycle).
    pub fn directed_triangle() -> Digraph {
        Digraph::new(
            (1..=3).map(|i| i.to_string()).collect(),
            vec![("a".to_string(), 0, 1), ("b".to_string(), 1, 2), ("c".to_string(), 2, 0)],
        )
    }
}
