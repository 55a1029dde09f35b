//! Automorphism groups, flag-orbit partitions and symmetry type graphs.
//!
//! The automorphism group of a map acts freely on its flags, so an
//! automorphism is determined by the image of one flag and either extends
//! uniquely from `0 -> target` or runs into a contradiction. The group
//! partitions the flags into orbits of one common size; the quotient of
//! the flag graph by that partition is the symmetry type graph.

use crate::canon::extend_isomorphism;
use crate::par;
use crate::registry::{classify_name, NamedType};
use crate::system::{ColoredSystem, FlagMap, OrbitPartition};

/// A point permutation commuting with all three colour involutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    perm: Vec<usize>,
}

impl Automorphism {
    pub fn apply(&self, x: usize) -> usize {
        self.perm[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            perm: self.perm.iter().map(|&x| other.perm[x]).collect(),
        }
    }
}

/// The full automorphism group, one extension attempt per target flag,
/// ordered by the image of flag 0. The group order always divides the
/// flag count.
pub fn automorphism_group(m: &FlagMap) -> Vec<Automorphism> {
    par::filter_map_indexed(m.size(), |target| {
        extend_isomorphism(m.system(), m.system(), target).map(|perm| Automorphism { perm })
    })
}

/// Orbits of the flags under the full automorphism group, ordered by
/// least contained flag. The class count is the `k` of a k-orbit map.
pub fn flag_orbit_partition(m: &FlagMap) -> OrbitPartition {
    let perms: Vec<Vec<usize>> = automorphism_group(m)
        .into_iter()
        .map(|a| a.perm)
        .collect();
    OrbitPartition::from_permutation_orbits(m.size(), &perms)
}

/// A symmetry type graph, possibly still attached to the map it came from.
#[derive(Debug, Clone)]
pub struct SymmetryTypeGraph {
    pub graph: ColoredSystem,
    /// The flag-orbit partition of the source map; absent for
    /// free-standing graphs.
    pub orbit_classes: Option<OrbitPartition>,
    /// Registry name, when the canonical key resolves to one.
    pub name: Option<NamedType>,
}

impl SymmetryTypeGraph {
    /// Wraps a free-standing type graph (no source map attached).
    pub fn free_standing(graph: ColoredSystem) -> Self {
        let name = classify_name(&graph);
        SymmetryTypeGraph {
            graph,
            orbit_classes: None,
            name,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.size()
    }

    /// Components of the 2-factor on colours `i` and `j`; equals the
    /// number of orbits of l-faces (l the third colour) of any map with
    /// this type graph.
    pub fn two_factor_components(&self, i: usize, j: usize) -> usize {
        self.graph.two_factor_components(i, j)
    }
}

/// Quotient of the flag graph by the automorphism orbits. Two i-adjacent
/// flags in one orbit leave an i-semi-edge on the quotient.
pub fn symmetry_type_graph(m: &FlagMap) -> SymmetryTypeGraph {
    let orbits = flag_orbit_partition(m);
    let graph = m
        .system()
        .quotient(&orbits)
        .expect("orbit partitions of an automorphism group are adjacency-compatible");
    let name = classify_name(&graph);
    SymmetryTypeGraph {
        graph,
        orbit_classes: Some(orbits),
        name,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::builders::build_named;
    use crate::ops::truncate;
    use crate::system::COLOURS;

    #[test]
    fn automorphism_counts_for_reference_maps() {
        let tetra = build_named("tetrahedron").unwrap();
        assert_eq!(automorphism_group(&tetra).len(), 24);

        let cube = build_named("cube").unwrap();
        assert_eq!(automorphism_group(&cube).len(), 48);

        let torus = build_named("torus44(2,1)").unwrap();
        assert_eq!(automorphism_group(&torus).len(), 20);
    }

    #[test]
    fn automorphisms_commute_with_the_involutions() {
        let m = build_named("prism(3)").unwrap();
        let group = automorphism_group(&m);
        for a in &group {
            for c in COLOURS {
                for x in 0..m.size() {
                    assert_eq!(a.apply(m.apply(c, x)), m.apply(c, a.apply(x)));
                }
            }
        }
        // only the identity fixes a flag
        for a in &group {
            if (0..m.size()).any(|x| a.apply(x) == x) {
                assert!(a.is_identity());
            }
        }
    }

    #[test]
    fn orbit_counts_for_reference_maps() {
        let cube = build_named("cube").unwrap();
        assert_eq!(flag_orbit_partition(&cube).len(), 1);

        let tr = truncate(&cube).map;
        assert_eq!(flag_orbit_partition(&tr).len(), 3);

        let torus = build_named("torus44(2,1)").unwrap();
        assert_eq!(flag_orbit_partition(&torus).len(), 2);
    }

    #[test]
    fn group_order_times_orbit_count_is_the_flag_count() {
        for name in ["tetrahedron", "cube", "prism(3)", "prism(5)", "torus44(2,1)", "dihedron(6)"] {
            let m = build_named(name).unwrap();
            let order = automorphism_group(&m).len();
            let orbits = flag_orbit_partition(&m);
            assert_eq!(order * orbits.len(), m.size(), "{name}");
            assert!(
                orbits.classes().iter().all(|c| c.len() == order),
                "{name}: orbits must share one size"
            );
        }
    }

    #[test]
    fn type_graph_of_a_regular_map_is_one_vertex_three_semi_edges() {
        let cube = build_named("cube").unwrap();
        let stg = symmetry_type_graph(&cube);
        assert_eq!(stg.vertex_count(), 1);
        for c in COLOURS {
            assert!(stg.graph.is_semi_edge(c, 0));
        }
        assert_eq!(stg.name.as_ref().map(|n| n.label()), Some("1".to_string()));
    }

    #[test]
    fn type_graph_of_the_chiral_torus_map_has_no_semi_edges() {
        let torus = build_named("torus44(2,1)").unwrap();
        let stg = symmetry_type_graph(&torus);
        assert_eq!(stg.vertex_count(), 2);
        for c in COLOURS {
            for v in 0..2 {
                assert!(!stg.graph.is_semi_edge(c, v));
            }
        }
        assert_eq!(stg.name.as_ref().map(|n| n.label()), Some("2".to_string()));
    }

    #[test]
    fn type_graph_is_relaxed_valid_with_k_vertices() {
        for name in ["cube", "prism(3)", "prism(5)", "torus44(2,1)"] {
            let m = build_named(name).unwrap();
            let stg = symmetry_type_graph(&m);
            assert!(stg.graph.is_valid(false), "{name}");
            assert_eq!(
                stg.vertex_count(),
                flag_orbit_partition(&m).len(),
                "{name}"
            );
        }
    }

    #[test]
    fn face_orbits_match_two_factor_components() {
        let cube = build_named("cube").unwrap();
        let stg = symmetry_type_graph(&cube);
        assert_eq!(stg.two_factor_components(0, 1), 1);

        let tr = truncate(&cube).map;
        let stg = symmetry_type_graph(&tr);
        // a truncated regular map has two face orbits and one vertex orbit
        assert_eq!(stg.two_factor_components(0, 1), 2);
        assert_eq!(stg.two_factor_components(1, 2), 1);
    }

    #[test]
    fn vertex_orbit_count_equals_12_factor_components() {
        for name in ["cube", "prism(3)", "prism(5)", "torus44(2,1)", "dihedron(6)"] {
            let m = build_named(name).unwrap();
            let stg = symmetry_type_graph(&m);
            // independent count: act the group on the vertex classes
            let vertices = m.vertices();
            let group = automorphism_group(&m);
            let vperms: Vec<Vec<usize>> = group
                .iter()
                .map(|a| {
                    (0..vertices.len())
                        .map(|v| vertices.class_of(a.apply(vertices.classes()[v][0])))
                        .collect()
                })
                .collect();
            let vertex_orbits =
                OrbitPartition::from_permutation_orbits(vertices.len(), &vperms).len();
            assert_eq!(stg.two_factor_components(1, 2), vertex_orbits, "{name}");
        }
    }

    #[test]
    fn quotient_by_any_automorphism_subgroup_is_compatible() {
        let m = build_named("cube").unwrap();
        let group = automorphism_group(&m);
        for a in &group {
            let p = OrbitPartition::from_permutation_orbits(m.size(), &[a.as_slice().to_vec()]);
            assert!(m.system().quotient(&p).is_ok());
        }
    }
}
