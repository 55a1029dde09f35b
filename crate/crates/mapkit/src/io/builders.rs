//! Named map constructions. Every builder returns a strictly valid
//! [`FlagMap`]; the documented vertex/edge/face counts are asserted in
//! tests rather than trusted.

use thiserror::Error;

use crate::io::rot::{from_rotation_system, RotationSystem};
use crate::system::FlagMap;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuilderError {
    #[error("unknown builder '{0}'")]
    UnknownName(String),
    #[error("invalid parameters for '{0}': {1}")]
    BadParams(&'static str, String),
}

/// Builds one of the named maps.
///
/// Accepted names: `tetrahedron`, `cube`, `octahedron`, `dodecahedron`,
/// `icosahedron`, `dihedron(n)`, `hosohedron(n)`, `prism(n)`,
/// `torus44(b,c)`.
pub fn build_named(name: &str) -> Result<FlagMap, BuilderError> {
    let name = name.trim();
    let (head, args) = match name.find('(') {
        Some(pos) if name.ends_with(')') => {
            let head = &name[..pos];
            let inner = &name[pos + 1..name.len() - 1];
            let args: Result<Vec<i64>, _> =
                inner.split(',').map(|a| a.trim().parse::<i64>()).collect();
            match args {
                Ok(v) => (head, v),
                Err(_) => {
                    return Err(BuilderError::BadParams(
                        "",
                        format!("could not parse arguments in '{name}'"),
                    ))
                }
            }
        }
        _ => (name, Vec::new()),
    };
    let positive = |tag: &'static str, args: &[i64]| -> Result<usize, BuilderError> {
        match args {
            [n] if *n >= 1 => Ok(*n as usize),
            _ => Err(BuilderError::BadParams(tag, "expected one integer >= 1".into())),
        }
    };
    match head {
        "tetrahedron" => Ok(tetrahedron()),
        "cube" => Ok(prism(4)),
        "octahedron" => Ok(octahedron()),
        "icosahedron" => Ok(icosahedron()),
        "dodecahedron" => Ok(icosahedron().dual()),
        "dihedron" => Ok(dihedron(positive("dihedron", &args)?)),
        "hosohedron" => Ok(hosohedron(positive("hosohedron", &args)?)),
        "prism" => Ok(prism(positive("prism", &args)?)),
        "torus44" => match args.as_slice() {
            [b, c] if (*b, *c) != (0, 0) => Ok(torus44(*b, *c)),
            _ => Err(BuilderError::BadParams(
                "torus44",
                "expected two integers, not both zero".into(),
            )),
        },
        other => Err(BuilderError::UnknownName(other.to_string())),
    }
}

/// All builder names exercised by the census, with small parameters.
pub fn census_builders() -> Vec<(String, FlagMap)> {
    let mut out = Vec::new();
    for name in ["tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"] {
        out.push((name.to_string(), build_named(name).unwrap()));
    }
    for n in 1..=6 {
        for family in ["dihedron", "hosohedron", "prism"] {
            let name = format!("{family}({n})");
            out.push((name.clone(), build_named(&name).unwrap()));
        }
    }
    for (b, c) in [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 1)] {
        let name = format!("torus44({b},{c})");
        out.push((name.clone(), build_named(&name).unwrap()));
    }
    out
}

/// Recovers the rotation system of a coherently oriented face list: every
/// directed edge must appear in exactly one face cycle. Only usable for
/// simple graphs (parallel edges would make directed pairs ambiguous).
fn rotation_from_faces(n_vertices: usize, faces: &[Vec<usize>]) -> RotationSystem {
    use std::collections::HashMap;

    // dart = directed edge (u, v); phi = next dart along its face
    let mut phi: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    let mut edge_id: HashMap<(usize, usize), usize> = HashMap::new();
    for face in faces {
        let len = face.len();
        for i in 0..len {
            let u = face[i];
            let v = face[(i + 1) % len];
            let w = face[(i + 2) % len];
            assert!(u != v, "face lists must not repeat consecutive vertices");
            let prev = phi.insert((u, v), (v, w));
            assert!(prev.is_none(), "directed edge ({u},{v}) appears twice");
            let key = (u.min(v), u.max(v));
            let next_id = edge_id.len();
            edge_id.entry(key).or_insert(next_id);
        }
    }
    let mut orderings = vec![Vec::new(); n_vertices];
    let mut seen: Vec<Option<usize>> = vec![None; n_vertices];
    for (&(u, v), _) in phi.iter() {
        if seen[u].is_none() || seen[u].unwrap() > v {
            seen[u] = Some(v);
        }
    }
    for u in 0..n_vertices {
        let first = seen[u].expect("every vertex appears in some face");
        let mut v = first;
        loop {
            orderings[u].push(edge_id[&(u.min(v), u.max(v))]);
            // rotation: next edge counterclockwise is phi applied to the
            // reversed dart
            let (_, w) = phi[&(v, u)];
            v = w;
            if v == first {
                break;
            }
        }
    }
    let total: usize = orderings.iter().map(Vec::len).sum();
    assert_eq!(total, 2 * edge_id.len(), "rotations must cover every dart");
    RotationSystem { orderings }
}

fn from_faces(n_vertices: usize, faces: &[Vec<usize>]) -> FlagMap {
    from_rotation_system(&rotation_from_faces(n_vertices, faces)).expect("coherent face list")
}

fn tetrahedron() -> FlagMap {
    from_faces(
        4,
        &[vec![0, 1, 2], vec![0, 3, 1], vec![0, 2, 3], vec![1, 3, 2]],
    )
}

fn octahedron() -> FlagMap {
    from_faces(
        6,
        &[
            vec![0, 1, 2],
            vec![0, 2, 3],
            vec![0, 3, 4],
            vec![0, 4, 1],
            vec![5, 2, 1],
            vec![5, 3, 2],
            vec![5, 4, 3],
            vec![5, 1, 4],
        ],
    )
}

fn icosahedron() -> FlagMap {
    // apex 0, upper ring 1..=5, lower ring 6..=10, apex 11
    let mut faces = Vec::with_capacity(20);
    for i in 0..5usize {
        let u = 1 + i;
        let u1 = 1 + (i + 1) % 5;
        let l = 6 + i;
        let l1 = 6 + (i + 1) % 5;
        faces.push(vec![0, u, u1]);
        faces.push(vec![u1, u, l]);
        faces.push(vec![l, l1, u1]);
        faces.push(vec![11, l1, l]);
    }
    from_faces(12, &faces)
}

/// The n-gonal prism; `prism(4)` is the cube. Valid for every n >= 1
/// (small n produce loops and digons, which are fine at flag level).
fn prism(n: usize) -> FlagMap {
    // edge ids: top cycle 0..n, bottom cycle n..2n, verticals 2n..3n
    let top = |i: usize| i % n;
    let bottom = |i: usize| n + i % n;
    let vert = |i: usize| 2 * n + i % n;
    let mut orderings = Vec::with_capacity(2 * n);
    for i in 0..n {
        orderings.push(vec![top(i), vert(i), top((i + n) - 1)]);
    }
    for i in 0..n {
        orderings.push(vec![bottom(i), bottom((i + n) - 1), vert(i)]);
    }
    from_rotation_system(&RotationSystem { orderings }).expect("prism is connected")
}

/// The map {n,2}: an n-cycle with two n-gon faces.
fn dihedron(n: usize) -> FlagMap {
    let mut orderings = Vec::with_capacity(n);
    for i in 0..n {
        orderings.push(vec![(i + n - 1) % n, i]);
    }
    from_rotation_system(&RotationSystem { orderings }).expect("dihedron is connected")
}

/// The map {2,n}: two vertices joined by n edges, n digon faces.
fn hosohedron(n: usize) -> FlagMap {
    let north: Vec<usize> = (0..n).collect();
    let south: Vec<usize> = (0..n).rev().collect();
    from_rotation_system(&RotationSystem {
        orderings: vec![north, south],
    })
    .expect("hosohedron is connected")
}

/// The toroidal map {4,4} with translation vector (b, c): the square
/// lattice modulo the lattice generated by (b, c) and (-c, b). Has
/// b^2 + c^2 vertices and 8(b^2 + c^2) flags.
fn torus44(b: i64, c: i64) -> FlagMap {
    let norm = b * b + c * c;
    debug_assert!(norm > 0);
    let in_lattice = |dx: i64, dy: i64| -> bool {
        (dx * b + dy * c) % norm == 0 && (dy * b - dx * c) % norm == 0
    };
    // collect one representative per residue class by breadth-first search
    let mut reps: Vec<(i64, i64)> = vec![(0, 0)];
    let mut cursor = 0;
    while cursor < reps.len() {
        let (x, y) = reps[cursor];
        cursor += 1;
        for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            let p = (x + dx, y + dy);
            if !reps.iter().any(|&(rx, ry)| in_lattice(p.0 - rx, p.1 - ry)) {
                reps.push(p);
            }
        }
    }
    assert_eq!(reps.len() as i64, norm);
    let rep_index = |x: i64, y: i64| -> usize {
        reps.iter()
            .position(|&(rx, ry)| in_lattice(x - rx, y - ry))
            .expect("residues cover the lattice")
    };
    // edge ids: 2v = east edge at v, 2v + 1 = north edge at v
    let mut orderings = Vec::with_capacity(reps.len());
    for &(x, y) in &reps {
        let east = 2 * rep_index(x, y);
        let north = 2 * rep_index(x, y) + 1;
        let west = 2 * rep_index(x - 1, y);
        let south = 2 * rep_index(x, y - 1) + 1;
        orderings.push(vec![east, north, west, south]);
    }
    from_rotation_system(&RotationSystem { orderings }).expect("torus is connected")
}
