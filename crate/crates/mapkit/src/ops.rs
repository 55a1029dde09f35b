//! Operations on maps and on type graphs: dual, truncation, leapfrog,
//! two-dimensional subdivision, truncation recognition, and the type-graph
//! expansion/assembly machinery behind the classification tables.
//!
//! Truncation splits every flag into three, tagged 0, 1 and 2. Writing
//! `s_i` for the involutions of the source and `r_i` for those of the
//! truncated map, the nine adjacencies are
//!
//! ```text
//! (f,0) r0 = (f s1, 0)   (f,0) r1 = (f s2, 0)   (f,0) r2 = (f, 2)
//! (f,1) r0 = (f s0, 1)   (f,1) r1 = (f, 2)      (f,1) r2 = (f s2, 1)
//! (f,2) r0 = (f s1, 2)   (f,2) r1 = (f, 1)      (f,2) r2 = (f, 0)
//! ```
//!
//! so the tag classes (A0, A2, A1) form a tripartition whose quotient is
//! always the three-vertex type graph `3^0`.

use thiserror::Error;

use crate::canon::canonical_key;
use crate::system::{ColoredSystem, FlagMap, OrbitPartition};

/// Word over the truncated map's colours that realizes the source's `s0`
/// on tag-0 flags. Derived once from the adjacency rules; a unit test
/// re-derives it.
pub const S0_WORD: [usize; 5] = [2, 1, 0, 1, 2];

/// The class automaton of the truncation tripartition, with points
/// ordered (A0, A2, A1). As a coloured system this is exactly the type
/// graph `3^0`.
pub fn tripartition_automaton() -> ColoredSystem {
    ColoredSystem::new(vec![0, 1, 2], vec![0, 2, 1], vec![1, 0, 2]).unwrap()
}

/// Result of truncating a map: the 3n-flag map, the ordered tripartition
/// (A0, A2, A1) of its flags, and for each new flag its source flag and
/// tag.
#[derive(Debug, Clone)]
pub struct TruncationResult {
    pub map: FlagMap,
    pub tripartition: OrbitPartition,
    pub origin: Vec<(usize, u8)>,
}

// new flag layout: (f, tag) lives at 3f + tag
fn trunc_index(f: usize, tag: usize) -> usize {
    3 * f + tag
}

/// Truncates every vertex of the map. The output has `3n` flags,
/// `2|E|` vertices and `3|E|` edges; its faces correspond to the
/// vertices and faces of the input.
pub fn truncate(m: &FlagMap) -> TruncationResult {
    let n = m.size();
    let nn = 3 * n;
    let mut t0 = vec![0; nn];
    let mut t1 = vec![0; nn];
    let mut t2 = vec![0; nn];
    for f in 0..n {
        let s0 = m.apply(0, f);
        let s1 = m.apply(1, f);
        let s2 = m.apply(2, f);
        t0[trunc_index(f, 0)] = trunc_index(s1, 0);
        t1[trunc_index(f, 0)] = trunc_index(s2, 0);
        t2[trunc_index(f, 0)] = trunc_index(f, 2);
        t0[trunc_index(f, 1)] = trunc_index(s0, 1);
        t1[trunc_index(f, 1)] = trunc_index(f, 2);
        t2[trunc_index(f, 1)] = trunc_index(s2, 1);
        t0[trunc_index(f, 2)] = trunc_index(s1, 2);
        t1[trunc_index(f, 2)] = trunc_index(f, 1);
        t2[trunc_index(f, 2)] = trunc_index(f, 0);
    }
    let sys = ColoredSystem::new(t0, t1, t2).unwrap();
    let map = FlagMap::try_new(sys).expect("truncation of a valid map is valid");
    let classes = vec![
        (0..n).map(|f| trunc_index(f, 0)).collect(),
        (0..n).map(|f| trunc_index(f, 2)).collect(),
        (0..n).map(|f| trunc_index(f, 1)).collect(),
    ];
    let tripartition = OrbitPartition::new(classes, nn).unwrap();
    let mut origin = vec![(0, 0); nn];
    for f in 0..n {
        for tag in 0..3 {
            origin[trunc_index(f, tag)] = (f, tag as u8);
        }
    }
    TruncationResult {
        map,
        tripartition,
        origin,
    }
}

/// The leapfrog map, built directly from its own nine adjacency rules.
/// Isomorphic to `truncate(dual(m))`; the two routes are checked against
/// each other in tests rather than trusting either transcription.
pub fn leapfrog(m: &FlagMap) -> FlagMap {
    let n = m.size();
    let nn = 3 * n;
    let mut t0 = vec![0; nn];
    let mut t1 = vec![0; nn];
    let mut t2 = vec![0; nn];
    for f in 0..n {
        let s0 = m.apply(0, f);
        let s1 = m.apply(1, f);
        let s2 = m.apply(2, f);
        t0[trunc_index(f, 0)] = trunc_index(s2, 0);
        t1[trunc_index(f, 0)] = trunc_index(f, 1);
        t2[trunc_index(f, 0)] = trunc_index(s0, 0);
        t0[trunc_index(f, 1)] = trunc_index(s1, 1);
        t1[trunc_index(f, 1)] = trunc_index(f, 0);
        t2[trunc_index(f, 1)] = trunc_index(f, 2);
        t0[trunc_index(f, 2)] = trunc_index(s1, 2);
        t1[trunc_index(f, 2)] = trunc_index(s0, 2);
        t2[trunc_index(f, 2)] = trunc_index(f, 1);
    }
    let sys = ColoredSystem::new(t0, t1, t2).unwrap();
    FlagMap::try_new(sys).expect("leapfrog of a valid map is valid")
}

/// The two-dimensional subdivision: dual of the truncation. All faces of
/// the result are triangles.
pub fn subdivide_2d(m: &FlagMap) -> FlagMap {
    truncate(m).map.dual()
}

/// Applies the truncation adjacency rules to a type graph, treating its
/// vertices as flags; semi-edges stay self-images. A k-vertex graph
/// expands to the 3k-vertex truncated type graph.
pub fn expand_truncation(g: &ColoredSystem) -> ColoredSystem {
    let n = g.size();
    let nn = 3 * n;
    let mut t0 = vec![0; nn];
    let mut t1 = vec![0; nn];
    let mut t2 = vec![0; nn];
    for f in 0..n {
        let s0 = g.apply(0, f);
        let s1 = g.apply(1, f);
        let s2 = g.apply(2, f);
        t0[trunc_index(f, 0)] = trunc_index(s1, 0);
        t1[trunc_index(f, 0)] = trunc_index(s2, 0);
        t2[trunc_index(f, 0)] = trunc_index(f, 2);
        t0[trunc_index(f, 1)] = trunc_index(s0, 1);
        t1[trunc_index(f, 1)] = trunc_index(f, 2);
        t2[trunc_index(f, 1)] = trunc_index(s2, 1);
        t0[trunc_index(f, 2)] = trunc_index(s1, 2);
        t1[trunc_index(f, 2)] = trunc_index(f, 1);
        t2[trunc_index(f, 2)] = trunc_index(f, 0);
    }
    ColoredSystem::new(t0, t1, t2).unwrap()
}

/// Leapfrog expansion of a type graph, via the leapfrog rules directly.
/// Equal to `expand_truncation(dual(g))` up to isomorphism.
pub fn expand_leapfrog(g: &ColoredSystem) -> ColoredSystem {
    let n = g.size();
    let nn = 3 * n;
    let mut t0 = vec![0; nn];
    let mut t1 = vec![0; nn];
    let mut t2 = vec![0; nn];
    for f in 0..n {
        let s0 = g.apply(0, f);
        let s1 = g.apply(1, f);
        let s2 = g.apply(2, f);
        t0[trunc_index(f, 0)] = trunc_index(s2, 0);
        t1[trunc_index(f, 0)] = trunc_index(f, 1);
        t2[trunc_index(f, 0)] = trunc_index(s0, 0);
        t0[trunc_index(f, 1)] = trunc_index(s1, 1);
        t1[trunc_index(f, 1)] = trunc_index(f, 0);
        t2[trunc_index(f, 1)] = trunc_index(f, 2);
        t0[trunc_index(f, 2)] = trunc_index(s1, 2);
        t1[trunc_index(f, 2)] = trunc_index(s0, 2);
        t2[trunc_index(f, 2)] = trunc_index(f, 1);
    }
    ColoredSystem::new(t0, t1, t2).unwrap()
}

/// Looks for a tripartition of the flags of `n` that quotients onto the
/// class automaton. Such an assignment is determined by the class of flag
/// 0, so at most three seeds need propagating. On success, reassembles the
/// source map on the A0 flags (`s1 := t0`, `s2 := t1`, `s0 :=` the
/// [`S0_WORD`] action) and confirms `truncate(source)` is isomorphic to
/// `n`; absence is a value, not an error.
pub fn recognize_truncation(n: &FlagMap) -> Option<(FlagMap, OrbitPartition)> {
    // every vertex of a truncated map has valency 3
    if n.orbits(&[1, 2]).classes().iter().any(|c| c.len() != 6) {
        return None;
    }
    let auto = tripartition_automaton();
    let size = n.size();
    'seed: for seed in 0..3usize {
        let mut class = vec![usize::MAX; size];
        class[0] = seed;
        let mut queue = vec![0usize];
        let mut cursor = 0;
        while cursor < queue.len() {
            let x = queue[cursor];
            cursor += 1;
            for c in 0..3 {
                let y = n.apply(c, x);
                let want = auto.apply(c, class[x]);
                if class[y] == usize::MAX {
                    class[y] = want;
                    queue.push(y);
                } else if class[y] != want {
                    continue 'seed;
                }
            }
        }
        let a0: Vec<usize> = (0..size).filter(|&x| class[x] == 0).collect();
        debug_assert_eq!(a0.len() * 3, size);
        let mut local = vec![usize::MAX; size];
        for (i, &x) in a0.iter().enumerate() {
            local[x] = i;
        }
        // A0 is closed under t0, t1 and the s0 word, so the images are set
        let s1: Vec<usize> = a0.iter().map(|&x| local[n.apply(0, x)]).collect();
        let s2: Vec<usize> = a0.iter().map(|&x| local[n.apply(1, x)]).collect();
        let s0: Vec<usize> = a0.iter().map(|&x| local[n.apply_word(x, &S0_WORD)]).collect();
        let sys = match ColoredSystem::new(s0, s1, s2) {
            Ok(sys) => sys,
            Err(_) => continue,
        };
        let source = match FlagMap::try_new(sys) {
            Ok(m) => m,
            Err(_) => continue,
        };
        if canonical_key(truncate(&source).map.system()) != canonical_key(n.system()) {
            continue;
        }
        let classes = (0..3)
            .map(|cls| (0..size).filter(|&x| class[x] == cls).collect())
            .collect();
        let tripartition = OrbitPartition::new(classes, size).unwrap();
        return Some((source, tripartition));
    }
    None
}

/// Shapes a (1,2) 2-factor component may take in the type graph of a
/// truncated map: the quotients of the colour-alternating hexagon by its
/// colour-preserving symmetries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HexQuotient {
    /// Six points, alternating 1- and 2-edges.
    Hexagon,
    /// Three points: a 1-semi-edge end, a middle, a 2-semi-edge end.
    Path,
    /// Two points joined by both a 1-edge and a 2-edge.
    Parallel,
    /// One point with 1- and 2-semi-edges.
    Point,
}

/// Classifies one `<t1,t2>`-orbit against the four hexagon quotients.
pub fn hex_quotient_shape(g: &ColoredSystem, orbit: &[usize]) -> Option<HexQuotient> {
    let fixed = |c: usize| orbit.iter().filter(|&&x| g.apply(c, x) == x).count();
    match orbit.len() {
        1 => Some(HexQuotient::Point),
        2 => {
            if fixed(1) == 0 && fixed(2) == 0 {
                Some(HexQuotient::Parallel)
            } else {
                None
            }
        }
        3 => {
            let relation = orbit
                .iter()
                .all(|&x| g.apply_word(x, &[1, 2, 1, 2, 1, 2]) == x);
            if relation && fixed(1) == 1 && fixed(2) == 1 {
                Some(HexQuotient::Path)
            } else {
                None
            }
        }
        6 => {
            let relation = orbit
                .iter()
                .all(|&x| g.apply_word(x, &[1, 2, 1, 2, 1, 2]) == x);
            if relation && fixed(1) == 0 && fixed(2) == 0 {
                Some(HexQuotient::Hexagon)
            } else {
                None
            }
        }
        _ => None,
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("graph is not truncation-admissible: the (1,2)-orbit of point {} has no hexagon-quotient shape", offending_orbit[0] + 1)]
pub struct AdmissibilityError {
    pub offending_orbit: Vec<usize>,
}

/// A type graph can be the symmetry type graph of a truncated map only if
/// every `<t1,t2>`-orbit is a quotient of the colour-alternating hexagon
/// (on top of relaxed validity, which it is assumed to satisfy).
pub fn check_truncation_admissible(g: &ColoredSystem) -> Result<(), AdmissibilityError> {
    for orbit in g.orbits(&[1, 2]).classes() {
        if hex_quotient_shape(g, orbit).is_none() {
            return Err(AdmissibilityError {
                offending_orbit: orbit.clone(),
            });
        }
    }
    Ok(())
}

pub fn is_truncation_admissible(g: &ColoredSystem) -> bool {
    check_truncation_admissible(g).is_ok()
}

/// The product of a type graph with the tripartition class automaton,
/// restricted to one connected component: the states are (vertex, class)
/// pairs and the per-colour transitions follow both factors at once.
#[derive(Debug, Clone)]
pub struct Assembly {
    /// States of the component, each a (type-graph vertex, class) pair
    /// with class 0 = A0, 1 = A2, 2 = A1.
    pub states: Vec<(usize, u8)>,
    /// Per-colour involutions on `states`, as indices into it.
    pub transitions: [Vec<usize>; 3],
    /// The candidate source graph carried by the A0 states.
    pub source: ColoredSystem,
}

/// Derives candidate source type graphs for maps whose truncation has
/// type graph `g`: one candidate per connected component of the product
/// of `g` with the class automaton. The candidate lives on the A0 states,
/// with `s1` the colour-0 transition, `s2` the colour-1 transition and
/// `s0` the [`S0_WORD`] action; candidates failing relaxed validation are
/// dropped and the rest deduplicated by canonical key.
pub fn assemble_source_types(
    g: &ColoredSystem,
) -> Result<Vec<(Assembly, ColoredSystem)>, AdmissibilityError> {
    check_truncation_admissible(g)?;
    let auto = tripartition_automaton();
    let n = g.size();
    let total = 3 * n;
    let state = |v: usize, cls: usize| v * 3 + cls;
    let step = |s: usize, c: usize| {
        let (v, cls) = (s / 3, s % 3);
        state(g.apply(c, v), auto.apply(c, cls))
    };

    let mut component = vec![usize::MAX; total];
    let mut n_components = 0;
    for start in 0..total {
        if component[start] != usize::MAX {
            continue;
        }
        let id = n_components;
        n_components += 1;
        let mut stack = vec![start];
        component[start] = id;
        while let Some(s) = stack.pop() {
            for c in 0..3 {
                let t = step(s, c);
                if component[t] == usize::MAX {
                    component[t] = id;
                    stack.push(t);
                }
            }
        }
    }

    let mut seen_keys = Vec::new();
    let mut out = Vec::new();
    for id in 0..n_components {
        let states_raw: Vec<usize> = (0..total).filter(|&s| component[s] == id).collect();
        let mut index_of = vec![usize::MAX; total];
        for (i, &s) in states_raw.iter().enumerate() {
            index_of[s] = i;
        }
        let transitions: [Vec<usize>; 3] = [0, 1, 2].map(|c| {
            states_raw.iter().map(|&s| index_of[step(s, c)]).collect()
        });

        let a0: Vec<usize> = states_raw.iter().copied().filter(|s| s % 3 == 0).collect();
        let mut a0_index = vec![usize::MAX; total];
        for (i, &s) in a0.iter().enumerate() {
            a0_index[s] = i;
        }
        let word_step = |s: usize| S0_WORD.iter().fold(s, |p, &c| step(p, c));
        let s0: Vec<usize> = a0.iter().map(|&s| a0_index[word_step(s)]).collect();
        let s1: Vec<usize> = a0.iter().map(|&s| a0_index[step(s, 0)]).collect();
        let s2: Vec<usize> = a0.iter().map(|&s| a0_index[step(s, 1)]).collect();
        let source = match ColoredSystem::new(s0, s1, s2) {
            Ok(sys) => sys,
            Err(_) => continue,
        };
        if !source.is_valid(false) {
            continue;
        }
        let key = canonical_key(&source);
        if seen_keys.contains(&key) {
            continue;
        }
        seen_keys.push(key);
        let states = states_raw.iter().map(|&s| (s / 3, (s % 3) as u8)).collect();
        out.push((
            Assembly {
                states,
                transitions,
                source: source.clone(),
            },
            source,
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{are_isomorphic, canonical_key};
    use crate::io::builders::build_named;

    #[test]
    fn s0_word_rederived_from_the_adjacency_rules() {
        // on tag-0 flags, the word must land on (f s0, 0) for every flag
        let m = build_named("cube").unwrap();
        let tr = truncate(&m);
        for f in 0..m.size() {
            let start = 3 * f;
            let end = tr.map.apply_word(start, &S0_WORD);
            assert_eq!(end, 3 * m.apply(0, f));
        }
        // and it is the shortest such word: no word of length < 5 works
        // for every flag of the cube
        let words: Vec<Vec<usize>> = (0..3)
            .flat_map(|a| (0..3).map(move |b| vec![a, b]))
            .chain((0..3).flat_map(|a| {
                (0..3).flat_map(move |b| (0..3).map(move |c| vec![a, b, c]))
            }))
            .collect();
        for w in words {
            let works = (0..m.size()).all(|f| tr.map.apply_word(3 * f, &w) == 3 * m.apply(0, f));
            assert!(!works, "shorter word {w:?} should not realize s0");
        }
    }

    #[test]
    fn truncated_cube_counts() {
        let cube = build_named("cube").unwrap();
        let tr = truncate(&cube);
        assert_eq!(tr.map.size(), 144);
        assert_eq!(tr.map.vertices().len(), 24);
        assert_eq!(tr.map.edges().len(), 36);
        assert_eq!(tr.map.faces().len(), 14);
        assert_eq!(tr.map.euler_characteristic(), 2);
    }

    #[test]
    fn truncation_face_set_splits_into_old_vertices_and_old_faces() {
        let cube = build_named("cube").unwrap();
        let tr = truncate(&cube);
        let faces = tr.map.faces();
        // faces inside A0 correspond to vertices of the source, the rest
        // to faces of the source
        let mut vertex_faces = 0;
        let mut face_faces = 0;
        for class in faces.classes() {
            let tags: Vec<u8> = class.iter().map(|&x| tr.origin[x].1).collect();
            if tags.iter().all(|&t| t == 0) {
                vertex_faces += 1;
            } else {
                assert!(tags.iter().all(|&t| t != 0));
                face_faces += 1;
            }
        }
        assert_eq!(vertex_faces, cube.vertices().len());
        assert_eq!(face_faces, cube.faces().len());
    }

    #[test]
    fn truncation_monodromy_relations() {
        for name in ["tetrahedron", "cube", "dihedron(3)", "torus44(2,1)"] {
            let m = build_named(name).unwrap();
            let tr = truncate(&m).map;
            for x in 0..tr.size() {
                assert_eq!(tr.apply_word(x, &[0, 2]), tr.apply_word(x, &[2, 0]));
                assert_eq!(tr.apply_word(x, &[1, 2, 1, 2, 1, 2]), x);
            }
            // every vertex of the truncation has valency 3
            assert!(tr.orbits(&[1, 2]).classes().iter().all(|c| c.len() == 6));
        }
    }

    #[test]
    fn truncating_the_square_dihedron_gives_the_cube() {
        let dih = build_named("dihedron(4)").unwrap();
        let cube = build_named("cube").unwrap();
        let tr = truncate(&dih);
        assert_eq!(tr.map.size(), 48);
        assert_eq!(
            canonical_key(tr.map.system()),
            canonical_key(cube.system())
        );
    }

    #[test]
    fn leapfrog_octahedron_is_the_truncated_cube() {
        let octa = build_named("octahedron").unwrap();
        let cube = build_named("cube").unwrap();
        assert_eq!(
            canonical_key(leapfrog(&octa).system()),
            canonical_key(truncate(&cube).map.system())
        );
    }

    #[test]
    fn leapfrog_is_truncation_of_the_dual() {
        for name in ["tetrahedron", "cube", "octahedron", "hosohedron(4)", "torus44(2,1)"] {
            let m = build_named(name).unwrap();
            assert_eq!(
                canonical_key(leapfrog(&m).system()),
                canonical_key(truncate(&m.dual()).map.system()),
                "{name}"
            );
        }
    }

    #[test]
    fn leapfrog_of_the_square_hosohedron_is_the_cube() {
        let hoso = build_named("hosohedron(4)").unwrap();
        let cube = build_named("cube").unwrap();
        assert_eq!(
            canonical_key(leapfrog(&hoso).system()),
            canonical_key(cube.system())
        );
    }

    #[test]
    fn subdivision_of_the_cube_is_all_triangles() {
        let cube = build_named("cube").unwrap();
        let sd = subdivide_2d(&cube);
        assert_eq!(sd.size(), 144);
        let faces = sd.faces();
        assert_eq!(faces.len(), 24);
        assert!(faces.classes().iter().all(|c| c.len() == 6));
        assert_eq!(sd.euler_characteristic(), cube.euler_characteristic());
        assert_eq!(
            canonical_key(subdivide_2d(&build_named("dihedron(4)").unwrap()).system()),
            canonical_key(build_named("octahedron").unwrap().system())
        );
    }

    #[test]
    fn tripartition_quotient_is_the_class_automaton() {
        for name in ["tetrahedron", "cube", "dihedron(2)"] {
            let m = build_named(name).unwrap();
            let tr = truncate(&m);
            let q = tr.map.quotient(&tr.tripartition).unwrap();
            assert_eq!(q, tripartition_automaton(), "{name}");
        }
    }

    #[test]
    fn recognize_inverts_truncation_on_builders() {
        for name in ["tetrahedron", "cube", "octahedron", "dihedron(5)", "torus44(1,1)"] {
            let m = build_named(name).unwrap();
            let tr = truncate(&m);
            let (source, _) = recognize_truncation(&tr.map).expect(name);
            assert_eq!(
                canonical_key(source.system()),
                canonical_key(m.system()),
                "{name}"
            );
        }
    }

    #[test]
    fn cube_is_recognized_as_a_truncation_of_the_square_dihedron() {
        let cube = build_named("cube").unwrap();
        let (source, tripartition) = recognize_truncation(&cube).unwrap();
        assert_eq!(tripartition.len(), 3);
        assert_eq!(
            canonical_key(source.system()),
            canonical_key(build_named("dihedron(4)").unwrap().system())
        );
    }

    #[test]
    fn tetrahedron_is_not_a_truncation() {
        let tetra = build_named("tetrahedron").unwrap();
        // valence-3 precheck passes but no consistent tripartition exists
        assert!(tetra.orbits(&[1, 2]).classes().iter().all(|c| c.len() == 6));
        assert!(recognize_truncation(&tetra).is_none());
    }

    #[test]
    fn expansion_commutes_with_realized_truncation_on_regular_maps() {
        // T(Tr(cube)) should equal the expansion of T(cube) = "1"
        let one = ColoredSystem::new(vec![0], vec![0], vec![0]).unwrap();
        let expanded = expand_truncation(&one);
        assert_eq!(expanded.size(), 3);
        assert!(are_isomorphic(&expanded, &tripartition_automaton()));
    }

    #[test]
    fn expansion_routes_agree() {
        let one = ColoredSystem::new(vec![0], vec![0], vec![0]).unwrap();
        assert!(are_isomorphic(
            &expand_leapfrog(&one),
            &expand_truncation(&one.dual())
        ));
    }

    #[test]
    fn hex_quotient_shapes_match_the_relation_test() {
        // a graph is admissible iff (t1 t2)^3 = id pointwise
        let samples = crate::enumerate::enumerate_type_graphs(
            4,
            crate::enumerate::EnumerationConstraint::All,
        )
        .unwrap();
        for g in &samples {
            let by_shape = is_truncation_admissible(g);
            let by_relation = (0..g.size()).all(|x| g.apply_word(x, &[1, 2, 1, 2, 1, 2]) == x);
            assert_eq!(by_shape, by_relation);
        }
    }

    #[test]
    fn inadmissible_graphs_are_rejected_with_the_offending_orbit() {
        // two points, t1 identity, t0 = t2 = swap: the (1,2)-orbit is a
        // 2-edge with 1-semi-edges, not a hexagon quotient
        let g = ColoredSystem::new(vec![1, 0], vec![0, 1], vec![1, 0]).unwrap();
        assert!(g.is_valid(false));
        let err = assemble_source_types(&g).unwrap_err();
        assert_eq!(err.offending_orbit, vec![0, 1]);
    }
}
