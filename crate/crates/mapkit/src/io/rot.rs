//! Rotation systems: per-vertex cyclic orderings of half-edge identifiers.
//! Each identifier appears exactly twice overall (twice at one vertex makes
//! a loop edge). A rotation system determines an orientable map with
//! `4 x (number of edges)` flags.

use thiserror::Error;

use crate::system::{ColoredSystem, FlagMap};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    /// `orderings[v]` lists the edge ids around vertex `v` in cyclic order.
    pub orderings: Vec<Vec<usize>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RotError {
    #[error("edge id {0} appears {1} times, expected exactly 2")]
    BadPairing(usize, usize),
    #[error("rotation system has no half-edges")]
    Empty,
    #[error("underlying graph is disconnected")]
    Disconnected,
    #[error("line {0}: {1}")]
    Parse(usize, String),
}

impl RotationSystem {
    pub fn edge_count(&self) -> usize {
        self.orderings.iter().map(Vec::len).sum::<usize>() / 2
    }
}

/// Builds the flag map of the orientable embedding described by `rs`.
///
/// Flags are (half-edge occurrence, side) pairs: `t0` swaps the two
/// occurrences of an edge (crossing sides), `t1` follows the vertex cyclic
/// order, `t2` swaps sides in place.
pub fn from_rotation_system(rs: &RotationSystem) -> Result<FlagMap, RotError> {
    let mut occ_edge = Vec::new();
    let mut vertex_occs: Vec<Vec<usize>> = Vec::with_capacity(rs.orderings.len());
    for ordering in &rs.orderings {
        let mut occs = Vec::with_capacity(ordering.len());
        for &e in ordering {
            occs.push(occ_edge.len());
            occ_edge.push(e);
        }
        vertex_occs.push(occs);
    }
    let total = occ_edge.len();
    if total == 0 {
        return Err(RotError::Empty);
    }

    let max_edge = *occ_edge.iter().max().unwrap();
    let mut slots: Vec<Vec<usize>> = vec![Vec::new(); max_edge + 1];
    for (occ, &e) in occ_edge.iter().enumerate() {
        slots[e].push(occ);
    }
    let mut partner = vec![0; total];
    for (e, occs) in slots.iter().enumerate() {
        match occs.as_slice() {
            [] => {}
            [a, b] => {
                partner[*a] = *b;
                partner[*b] = *a;
            }
            other => return Err(RotError::BadPairing(e, other.len())),
        }
    }

    // flag layout: 2 * occurrence + side, side 0 = left, 1 = right
    let n = 2 * total;
    let mut t0 = vec![0; n];
    let mut t1 = vec![0; n];
    let mut t2 = vec![0; n];
    for occ in 0..total {
        for side in 0..2 {
            t0[2 * occ + side] = 2 * partner[occ] + (1 - side);
            t2[2 * occ + side] = 2 * occ + (1 - side);
        }
    }
    for occs in &vertex_occs {
        let d = occs.len();
        for (i, &h) in occs.iter().enumerate() {
            let next = occs[(i + 1) % d];
            t1[2 * h + 1] = 2 * next;
            t1[2 * next] = 2 * h + 1;
        }
    }

    let sys = ColoredSystem::new(t0, t1, t2).expect("layout is well-formed");
    FlagMap::try_new(sys).map_err(|_| RotError::Disconnected)
}

/// Parses the `rot` text format: a `rot` header line, then one
/// `v<i>: <ids>` line per vertex with whitespace-separated identifiers.
/// Identifiers are arbitrary tokens; `#` starts a comment.
pub fn parse_rot(text: &str) -> Result<RotationSystem, RotError> {
    let mut lines = meaningful_lines(text);
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| RotError::Parse(0, "empty input".into()))?;
    if header.trim() != "rot" {
        return Err(RotError::Parse(lineno, "expected 'rot' header".into()));
    }
    let mut names: Vec<String> = Vec::new();
    let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
    for (lineno, line) in lines {
        let (head, rest) = line
            .split_once(':')
            .ok_or_else(|| RotError::Parse(lineno, "expected 'v<i>: <ids>'".into()))?;
        let head = head.trim();
        let index: usize = head
            .strip_prefix('v')
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| RotError::Parse(lineno, format!("bad vertex label '{head}'")))?;
        if index == 0 {
            return Err(RotError::Parse(lineno, "vertex labels are 1-based".into()));
        }
        let ids = rest
            .split_whitespace()
            .map(|tok| match names.iter().position(|n| n == tok) {
                Some(i) => i,
                None => {
                    names.push(tok.to_string());
                    names.len() - 1
                }
            })
            .collect();
        rows.push((index, ids));
    }
    rows.sort_by_key(|(i, _)| *i);
    for (want, (got, _)) in rows.iter().enumerate() {
        if *got != want + 1 {
            return Err(RotError::Parse(
                0,
                format!("vertex lines must cover v1..v{} exactly", rows.len()),
            ));
        }
    }
    Ok(RotationSystem {
        orderings: rows.into_iter().map(|(_, ids)| ids).collect(),
    })
}

pub(crate) fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        };
        let line = line.trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}
