//! Edge-coloured involution systems: the shared representation for flag
//! graphs of maps and for symmetry type graphs.
//!
//! A system is a set of points `0..size` together with three involutions
//! `t0, t1, t2`, one per colour. A fixed point of `t_i` encodes a semi-edge
//! of colour `i`; there are no loops by construction.

use std::fmt;

use thiserror::Error;

/// Edge colours are always 0, 1 or 2.
pub const COLOURS: [usize; 3] = [0, 1, 2];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    #[error("colour {colour} mapping has {got} entries, expected {expected}")]
    Length {
        colour: usize,
        got: usize,
        expected: usize,
    },
    #[error("colour {colour} maps point {point} to {image}, outside 0..{size}")]
    Range {
        colour: usize,
        point: usize,
        image: usize,
        size: usize,
    },
    #[error("system must have at least one point")]
    Empty,
}

/// A single violated invariant, with an offending point as witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `t_colour(t_colour(point)) != point`.
    NotInvolution { colour: usize, point: usize },
    /// `point` is not reachable from point 0.
    Disconnected { point: usize },
    /// `(t0 t2)^2` does not fix `point`.
    FourCycleBroken { point: usize },
    /// Strict only: `t_colour` fixes `point` (a semi-edge).
    FixedPoint { colour: usize, point: usize },
    /// Strict only: `t0 t2` fixes `point`, so the edge through it would
    /// have fewer than four flags.
    DegenerateEdge { point: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotInvolution { colour, point } => {
                write!(f, "t{colour} is not an involution at point {}", point + 1)
            }
            Violation::Disconnected { point } => {
                write!(f, "point {} is not reachable from point 1", point + 1)
            }
            Violation::FourCycleBroken { point } => {
                write!(f, "(t0 t2)^2 does not fix point {}", point + 1)
            }
            Violation::FixedPoint { colour, point } => {
                write!(f, "t{colour} fixes point {} (semi-edge)", point + 1)
            }
            Violation::DegenerateEdge { point } => {
                write!(f, "t0 t2 fixes point {} (degenerate edge)", point + 1)
            }
        }
    }
}

/// Outcome of [`ColoredSystem::validate`]. Empty means every invariant of
/// the requested mode holds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            write!(f, "valid")
        } else {
            for (i, v) in self.violations.iter().enumerate() {
                if i > 0 {
                    writeln!(f)?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

/// Three total self-inverse point mappings indexed by colour.
///
/// Invariants (checked by [`validate`](Self::validate), not by construction):
/// each `t_i` is an involution, the system is connected, and
/// `(t0 t2)^2 = id` pointwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredSystem {
    t: [Vec<usize>; 3],
}

impl ColoredSystem {
    /// Builds a system from the three colour mappings. Only shape is
    /// checked here (equal lengths, images in range); the combinatorial
    /// invariants are the business of [`validate`](Self::validate).
    pub fn new(t0: Vec<usize>, t1: Vec<usize>, t2: Vec<usize>) -> Result<Self, ShapeError> {
        let n = t0.len();
        if n == 0 {
            return Err(ShapeError::Empty);
        }
        for (colour, t) in [&t0, &t1, &t2].into_iter().enumerate() {
            if t.len() != n {
                return Err(ShapeError::Length {
                    colour,
                    got: t.len(),
                    expected: n,
                });
            }
            for (point, &image) in t.iter().enumerate() {
                if image >= n {
                    return Err(ShapeError::Range {
                        colour,
                        point,
                        image,
                        size: n,
                    });
                }
            }
        }
        Ok(ColoredSystem { t: [t0, t1, t2] })
    }

    pub fn size(&self) -> usize {
        self.t[0].len()
    }

    /// Image of `x` under the colour-`c` involution.
    #[inline]
    pub fn apply(&self, colour: usize, x: usize) -> usize {
        self.t[colour][x]
    }

    /// Left-to-right action of a word of colours.
    pub fn apply_word(&self, x: usize, word: &[usize]) -> usize {
        word.iter().fold(x, |p, &c| self.t[c][p])
    }

    /// True when `t_colour` fixes `x`.
    #[inline]
    pub fn is_semi_edge(&self, colour: usize, x: usize) -> bool {
        self.t[colour][x] == x
    }

    pub fn mapping(&self, colour: usize) -> &[usize] {
        &self.t[colour]
    }

    /// Staged invariant check: involutions, connectivity, the 0-2
    /// four-cycle condition, then (in strict mode) fixed-point freeness of
    /// each `t_i` and of `t0 t2`. The staging makes reports deterministic.
    pub fn validate(&self, strict: bool) -> ValidationReport {
        let n = self.size();
        let mut violations = Vec::new();
        for c in COLOURS {
            for x in 0..n {
                if self.t[c][self.t[c][x]] != x {
                    violations.push(Violation::NotInvolution { colour: c, point: x });
                }
            }
        }
        if let Some(point) = self.first_unreachable() {
            violations.push(Violation::Disconnected { point });
        }
        for x in 0..n {
            if self.apply_word(x, &[0, 2, 0, 2]) != x {
                violations.push(Violation::FourCycleBroken { point: x });
            }
        }
        if strict {
            for c in COLOURS {
                for x in 0..n {
                    if self.t[c][x] == x {
                        violations.push(Violation::FixedPoint { colour: c, point: x });
                    }
                }
            }
            for x in 0..n {
                if self.apply_word(x, &[0, 2]) == x {
                    violations.push(Violation::DegenerateEdge { point: x });
                }
            }
        }
        ValidationReport { violations }
    }

    pub fn is_valid(&self, strict: bool) -> bool {
        self.validate(strict).is_valid()
    }

    pub fn is_connected(&self) -> bool {
        self.first_unreachable().is_none()
    }

    /// Least point not reachable from point 0 along any colour, if one exists.
    fn first_unreachable(&self) -> Option<usize> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for c in COLOURS {
                let y = self.t[c][x];
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    /// Orbits of the subgroup generated by the given colours, ordered by
    /// least contained point. `colours = {1,2}` yields vertices, `{0,2}`
    /// edges and `{0,1}` faces of a flag map.
    pub fn orbits(&self, colours: &[usize]) -> OrbitPartition {
        let n = self.size();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let idx = classes.len();
            let mut members = vec![start];
            class_of[start] = idx;
            let mut cursor = 0;
            while cursor < members.len() {
                let x = members[cursor];
                cursor += 1;
                for &c in colours {
                    let y = self.t[c][x];
                    if class_of[y] == usize::MAX {
                        class_of[y] = idx;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        OrbitPartition { classes, class_of }
    }

    /// Number of connected components of the 2-factor using colours `i`
    /// and `j`. Semi-edges count as incident but join nothing.
    pub fn two_factor_components(&self, i: usize, j: usize) -> usize {
        self.orbits(&[i, j]).len()
    }

    /// Colour swap 0 <-> 2 on the same point set. Applying it twice gives
    /// back an equal system.
    pub fn dual(&self) -> ColoredSystem {
        ColoredSystem {
            t: [self.t[2].clone(), self.t[1].clone(), self.t[0].clone()],
        }
    }

    /// Quotient by an adjacency-compatible partition: points become the
    /// partition classes. When a class maps to itself under a colour the
    /// quotient carries a semi-edge of that colour.
    pub fn quotient(&self, p: &OrbitPartition) -> Result<ColoredSystem, QuotientError> {
        assert_eq!(p.class_of.len(), self.size(), "partition covers the point set");
        let k = p.len();
        let mut t = [vec![0; k], vec![0; k], vec![0; k]];
        for c in COLOURS {
            for (idx, class) in p.classes.iter().enumerate() {
                let target = p.class_of[self.t[c][class[0]]];
                for &x in class {
                    let got = p.class_of[self.t[c][x]];
                    if got != target {
                        return Err(QuotientError {
                            colour: c,
                            class: idx,
                            other_class: got.min(target),
                        });
                    }
                }
                t[c][idx] = target;
            }
        }
        let [t0, t1, t2] = t;
        Ok(ColoredSystem { t: [t0, t1, t2] })
    }

    /// Relabels points by `perm`, where `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> ColoredSystem {
        let n = self.size();
        assert_eq!(perm.len(), n);
        let mut t = [vec![0; n], vec![0; n], vec![0; n]];
        for c in COLOURS {
            for x in 0..n {
                t[c][perm[x]] = perm[self.t[c][x]];
            }
        }
        let [t0, t1, t2] = t;
        ColoredSystem { t: [t0, t1, t2] }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("partition is not adjacency-compatible: colour {colour} sends class {class} into both class {other_class} and another class")]
pub struct QuotientError {
    pub colour: usize,
    pub class: usize,
    pub other_class: usize,
}

/// An ordered partition of the points of a system into disjoint, nonempty,
/// covering classes, with constant-time class lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl OrbitPartition {
    /// Builds a partition from explicit classes over `0..n`.
    pub fn new(classes: Vec<Vec<usize>>, n: usize) -> Result<Self, PartitionError> {
        let mut class_of = vec![usize::MAX; n];
        for (idx, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(PartitionError::EmptyClass(idx));
            }
            for &x in class {
                if x >= n {
                    return Err(PartitionError::OutOfRange(x));
                }
                if class_of[x] != usize::MAX {
                    return Err(PartitionError::Overlap(x));
                }
                class_of[x] = idx;
            }
        }
        if let Some(x) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(PartitionError::Uncovered(x));
        }
        let classes = classes
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        Ok(OrbitPartition { classes, class_of })
    }

    /// Partition with every point in its own class.
    pub fn singletons(n: usize) -> Self {
        OrbitPartition {
            classes: (0..n).map(|x| vec![x]).collect(),
            class_of: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// Joint refinement lookup is not needed; this merges partitions built
    /// from group orbits: the finest partition whose classes are unions of
    /// classes of `self` closed under `perms`.
    pub fn from_permutation_orbits(n: usize, perms: &[Vec<usize>]) -> Self {
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let idx = classes.len();
            let mut members = vec![start];
            class_of[start] = idx;
            let mut cursor = 0;
            while cursor < members.len() {
                let x = members[cursor];
                cursor += 1;
                for p in perms {
                    let y = p[x];
                    if class_of[y] == usize::MAX {
                        class_of[y] = idx;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        OrbitPartition { classes, class_of }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("class {0} is empty")]
    EmptyClass(usize),
    #[error("point {0} is out of range")]
    OutOfRange(usize),
    #[error("point {0} appears in more than one class")]
    Overlap(usize),
    #[error("point {0} is not covered by any class")]
    Uncovered(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapBuildError {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error("system fails strict validation: {0}")]
    Invalid(ValidationReport),
}

/// A strict involution system: all three involutions and `t0 t2` are
/// fixed-point free. This is exactly a map presented by its flags.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlagMap {
    sys: ColoredSystem,
}

impl FlagMap {
    pub fn try_new(sys: ColoredSystem) -> Result<Self, ValidationReport> {
        let report = sys.validate(true);
        if report.is_valid() {
            Ok(FlagMap { sys })
        } else {
            Err(report)
        }
    }

    pub fn from_involutions(
        t0: Vec<usize>,
        t1: Vec<usize>,
        t2: Vec<usize>,
    ) -> Result<Self, MapBuildError> {
        let sys = ColoredSystem::new(t0, t1, t2)?;
        Self::try_new(sys).map_err(MapBuildError::Invalid)
    }

    pub fn system(&self) -> &ColoredSystem {
        &self.sys
    }

    pub fn into_system(self) -> ColoredSystem {
        self.sys
    }

    pub fn vertices(&self) -> OrbitPartition {
        self.sys.orbits(&[1, 2])
    }

    pub fn edges(&self) -> OrbitPartition {
        self.sys.orbits(&[0, 2])
    }

    pub fn faces(&self) -> OrbitPartition {
        self.sys.orbits(&[0, 1])
    }

    /// `|V| - |E| + |F|`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices().len() as i64 - self.edges().len() as i64 + self.faces().len() as i64
    }

    /// True iff the points admit a 2-colouring swapped by every `t_i`
    /// (the flag graph is bipartite with respect to word parity).
    pub fn is_orientable(&self) -> bool {
        let n = self.size();
        let mut parity = vec![u8::MAX; n];
        parity[0] = 0;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for c in COLOURS {
                let y = self.sys.t[c][x];
                let want = 1 - parity[x];
                if parity[y] == u8::MAX {
                    parity[y] = want;
                    stack.push(y);
                } else if parity[y] != want {
                    return false;
                }
            }
        }
        true
    }

    /// Colour swap 0 <-> 2; strictness is preserved.
    pub fn dual(&self) -> FlagMap {
        FlagMap {
            sys: self.sys.dual(),
        }
    }

    pub fn relabel(&self, perm: &[usize]) -> FlagMap {
        FlagMap {
            sys: self.sys.relabel(perm),
        }
    }
}

impl std::ops::Deref for FlagMap {
    type Target = ColoredSystem;

    fn deref(&self) -> &ColoredSystem {
        &self.sys
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::builders::build_named;

    fn one_vertex_type_graph() -> ColoredSystem {
        ColoredSystem::new(vec![0], vec![0], vec![0]).unwrap()
    }

    #[test]
    fn single_point_identity_is_relaxed_only() {
        let g = one_vertex_type_graph();
        assert!(g.validate(false).is_valid());
        let report = g.validate(true);
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::FixedPoint { .. })));
    }

    #[test]
    fn four_cycle_violation_is_reported() {
        // t0 = (1 2), t2 = (2 3): t0 t2 is a 3-cycle, so (t0 t2)^2 != id.
        let t0 = vec![1, 0, 2, 3];
        let t2 = vec![0, 2, 1, 3];
        let t1 = vec![3, 1, 2, 0];
        let g = ColoredSystem::new(t0, t1, t2).unwrap();
        let report = g.validate(false);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::FourCycleBroken { .. })));
    }

    #[test]
    fn cube_is_strictly_valid_by_naive_axiom_scan() {
        let cube = build_named("cube").unwrap();
        // independent scan of every axiom, not relying on validate()
        let n = cube.size();
        assert_eq!(n, 48);
        for c in COLOURS {
            for x in 0..n {
                assert_eq!(cube.apply(c, cube.apply(c, x)), x);
                assert_ne!(cube.apply(c, x), x);
            }
        }
        for x in 0..n {
            let y = cube.apply(2, cube.apply(0, x));
            assert_ne!(y, x);
            assert_eq!(cube.apply(2, cube.apply(0, y)), x);
        }
        let mut reached = std::collections::HashSet::from([0usize]);
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for c in COLOURS {
                let y = cube.apply(c, x);
                if reached.insert(y) {
                    frontier.push(y);
                }
            }
        }
        assert_eq!(reached.len(), n);
        assert!(cube.validate(true).is_valid());
    }

    #[test]
    fn orbit_counts_on_builders() {
        let cube = build_named("cube").unwrap();
        let edges = cube.orbits(&[0, 2]);
        assert_eq!(edges.len(), 12);
        assert!(edges.classes().iter().all(|c| c.len() == 4));

        let tetra = build_named("tetrahedron").unwrap();
        assert_eq!(tetra.orbits(&[1, 2]).len(), 4);

        assert_eq!(cube.orbits(&[0, 1, 2]).len(), 1);
    }

    #[test]
    fn orbits_agree_with_union_find_oracle() {
        let map = build_named("cube").unwrap();
        for colours in [[0, 1], [0, 2], [1, 2]] {
            let fast = map.orbits(&colours);
            // naive closure: repeatedly merge until stable
            let n = map.size();
            let mut label: Vec<usize> = (0..n).collect();
            loop {
                let mut changed = false;
                for x in 0..n {
                    for &c in &colours {
                        let y = map.apply(c, x);
                        let (a, b) = (label[x], label[y]);
                        if a != b {
                            let m = a.min(b);
                            for l in label.iter_mut() {
                                if *l == a || *l == b {
                                    *l = m;
                                }
                            }
                            changed = true;
                        }
                    }
                }
                if !changed {
                    break;
                }
            }
            let mut reps: Vec<usize> = label.clone();
            reps.sort_unstable();
            reps.dedup();
            assert_eq!(fast.len(), reps.len());
            for x in 0..n {
                for y in 0..n {
                    assert_eq!(label[x] == label[y], fast.class_of(x) == fast.class_of(y));
                }
            }
        }
    }

    #[test]
    fn euler_characteristic_examples() {
        assert_eq!(build_named("cube").unwrap().euler_characteristic(), 2);
        assert_eq!(build_named("torus44(2,1)").unwrap().euler_characteristic(), 0);
        assert_eq!(build_named("dihedron(4)").unwrap().euler_characteristic(), 2);
    }

    #[test]
    fn apply_word_identities() {
        let cube = build_named("cube").unwrap();
        for x in 0..cube.size() {
            assert_eq!(cube.apply_word(x, &[]), x);
            for c in COLOURS {
                assert_eq!(cube.apply_word(x, &[c, c]), x);
            }
            assert_eq!(cube.apply_word(x, &[0, 2]), cube.apply_word(x, &[2, 0]));
            // cube vertices have valency 3, so (s1 s2)^3 fixes every flag
            assert_eq!(cube.apply_word(x, &[1, 2, 1, 2, 1, 2]), x);
        }
    }

    #[test]
    fn quotient_identity_and_collapse() {
        let cube = build_named("cube").unwrap();
        let singletons = OrbitPartition::singletons(cube.size());
        let same = cube.quotient(&singletons).unwrap();
        assert_eq!(&same, cube.system());

        let one = OrbitPartition::new(vec![(0..cube.size()).collect()], cube.size()).unwrap();
        let collapsed = cube.quotient(&one).unwrap();
        assert_eq!(collapsed.size(), 1);
        for c in COLOURS {
            assert!(collapsed.is_semi_edge(c, 0));
        }
    }

    #[test]
    fn incompatible_quotient_names_colour_and_class() {
        let cube = build_named("cube").unwrap();
        let n = cube.size();
        // pair {0,1} into one class, everything else singletons; t-images of
        // 0 and 1 land in different classes for some colour
        let mut classes = vec![vec![0, 1]];
        classes.extend((2..n).map(|x| vec![x]));
        let p = OrbitPartition::new(classes, n).unwrap();
        let err = cube.quotient(&p).unwrap_err();
        assert!(err.colour < 3);
        assert_eq!(err.class, 0);
    }

    #[test]
    fn flags_divisible_by_four() {
        for name in ["tetrahedron", "cube", "octahedron", "dihedron(5)", "torus44(2,1)"] {
            let m = build_named(name).unwrap();
            assert_eq!(m.size() % 4, 0, "{name}");
        }
    }

    #[test]
    fn orientability_examples() {
        assert!(build_named("cube").unwrap().is_orientable());
        assert!(build_named("torus44(2,1)").unwrap().is_orientable());
    }
}
