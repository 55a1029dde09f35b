//! Isomorph-free exhaustive generation of symmetry type graphs and of
//! maps, and the census that backs table verification.
//!
//! Generation normalizes the (0,2)-structure first: up to relabelling,
//! the restriction of a system to colours 0 and 2 is a disjoint union of
//! the five quotients of the colour-alternating 4-cycle, so it suffices
//! to enumerate those unions in a fixed layout and let `t1` range over
//! all involutions. Canonical-key deduplication removes the remaining
//! isomorph collisions.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::canon::{canonical_form, canonical_key, CanonicalKey};
use crate::io::builders::census_builders;
use crate::ops::{is_truncation_admissible, leapfrog, truncate};
use crate::par;
use crate::symmetry::flag_orbit_partition;
use crate::system::{ColoredSystem, FlagMap};

/// Largest type-graph vertex count the enumerator accepts.
pub const TYPE_GRAPH_BOUND: usize = 18;
/// Largest flag count the map enumerator accepts.
pub const MAP_FLAG_BOUND: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationConstraint {
    All,
    /// Every (1,2)-orbit must be a quotient of the colour-alternating
    /// hexagon, as in the type graph of any truncated map.
    TruncationAdmissible,
    /// Same filter: the leapfrog is the truncation of the dual, so its
    /// images satisfy the identical constraint.
    LeapfrogAdmissible,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("requested size {requested} exceeds the configured bound {bound}")]
    BoundExceeded { requested: usize, bound: usize },
    #[error("flag count {0} is not a multiple of four")]
    NotMultipleOfFour(usize),
}

/// Calls `f` with every involution of `0..n` (fixed points allowed when
/// `allow_fixed`), pairing the least unassigned point first.
fn for_each_involution(n: usize, allow_fixed: bool, f: &mut impl FnMut(&[usize])) {
    let mut t = vec![usize::MAX; n];
    fill(&mut t, allow_fixed, f);

    fn fill(t: &mut Vec<usize>, allow_fixed: bool, f: &mut impl FnMut(&[usize])) {
        let x = match t.iter().position(|&v| v == usize::MAX) {
            None => {
                f(t);
                return;
            }
            Some(x) => x,
        };
        if allow_fixed {
            t[x] = x;
            fill(t, allow_fixed, f);
            t[x] = usize::MAX;
        }
        for y in x + 1..t.len() {
            if t[y] == usize::MAX {
                t[x] = y;
                t[y] = x;
                fill(t, allow_fixed, f);
                t[x] = usize::MAX;
                t[y] = usize::MAX;
            }
        }
    }
}

/// All (t0, t2) pairs on `k` points with `(t0 t2)^2 = id`, one layout per
/// multiset of 4-cycle quotient shapes: full 4-cycles, parallel pairs,
/// 0-edge pairs, 2-edge pairs and bare points.
fn zero_two_structures(k: usize, strict: bool) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for quads in 0..=(k / 4) {
        let rest_after_quads = k - 4 * quads;
        for parallel in 0..=(rest_after_quads / 2) {
            for edge0 in 0..=((rest_after_quads - 2 * parallel) / 2) {
                for edge2 in 0..=((rest_after_quads - 2 * parallel - 2 * edge0) / 2) {
                    let singles = rest_after_quads - 2 * (parallel + edge0 + edge2);
                    if strict && (parallel > 0 || edge0 > 0 || edge2 > 0 || singles > 0) {
                        continue;
                    }
                    let mut t0: Vec<usize> = (0..k).collect();
                    let mut t2: Vec<usize> = (0..k).collect();
                    let mut p = 0;
                    for _ in 0..quads {
                        t0[p] = p + 1;
                        t0[p + 1] = p;
                        t0[p + 2] = p + 3;
                        t0[p + 3] = p + 2;
                        t2[p] = p + 2;
                        t2[p + 2] = p;
                        t2[p + 1] = p + 3;
                        t2[p + 3] = p + 1;
                        p += 4;
                    }
                    for _ in 0..parallel {
                        t0[p] = p + 1;
                        t0[p + 1] = p;
                        t2[p] = p + 1;
                        t2[p + 1] = p;
                        p += 2;
                    }
                    for _ in 0..edge0 {
                        t0[p] = p + 1;
                        t0[p + 1] = p;
                        p += 2;
                    }
                    for _ in 0..edge2 {
                        t2[p] = p + 1;
                        t2[p + 1] = p;
                        p += 2;
                    }
                    out.push((t0, t2));
                }
            }
        }
    }
    out
}

fn dedup_sorted(mut found: Vec<(CanonicalKey, ColoredSystem)>) -> Vec<ColoredSystem> {
    found.sort_by(|a, b| a.0.cmp(&b.0));
    found.dedup_by(|a, b| a.0 == b.0);
    found.into_iter().map(|(_, sys)| sys).collect()
}

/// All connected systems on `k` points passing relaxed validation and the
/// constraint, one canonical representative per isomorphism class, in
/// canonical key order.
pub fn enumerate_type_graphs(
    k: usize,
    constraint: EnumerationConstraint,
) -> Result<Vec<ColoredSystem>, EnumError> {
    if k > TYPE_GRAPH_BOUND {
        return Err(EnumError::BoundExceeded {
            requested: k,
            bound: TYPE_GRAPH_BOUND,
        });
    }
    let structures = zero_two_structures(k, false);
    let found = par::flat_map_indexed(structures.len(), |si| {
        let (t0, t2) = &structures[si];
        let mut local: BTreeMap<CanonicalKey, ColoredSystem> = BTreeMap::new();
        for_each_involution(k, true, &mut |t1| {
            let sys = ColoredSystem::new(t0.clone(), t1.to_vec(), t2.clone()).unwrap();
            if !sys.is_connected() {
                return;
            }
            let keep = match constraint {
                EnumerationConstraint::All => true,
                EnumerationConstraint::TruncationAdmissible
                | EnumerationConstraint::LeapfrogAdmissible => is_truncation_admissible(&sys),
            };
            if keep {
                let (form, _) = canonical_form(&sys);
                local.entry(canonical_key(&form)).or_insert(form);
            }
        });
        local.into_iter().collect::<Vec<_>>()
    });
    Ok(dedup_sorted(found))
}

/// Shorthand for the truncation-admissible enumeration.
pub fn enumerate_admissible(k: usize) -> Result<Vec<ColoredSystem>, EnumError> {
    enumerate_type_graphs(k, EnumerationConstraint::TruncationAdmissible)
}

/// All strict maps on `n_flags` flags up to isomorphism, in canonical key
/// order. The (0,2)-structure of a strict map is a union of full
/// 4-cycles, so only `t1` varies.
pub fn enumerate_maps(n_flags: usize) -> Result<Vec<FlagMap>, EnumError> {
    if n_flags > MAP_FLAG_BOUND {
        return Err(EnumError::BoundExceeded {
            requested: n_flags,
            bound: MAP_FLAG_BOUND,
        });
    }
    if n_flags % 4 != 0 || n_flags == 0 {
        return Err(EnumError::NotMultipleOfFour(n_flags));
    }
    let structures = zero_two_structures(n_flags, true);
    assert_eq!(structures.len(), 1);
    let (t0, t2) = structures.into_iter().next().unwrap();

    // parallelize over the partner of point 0 in t1
    let found = par::flat_map_indexed(n_flags - 1, |yi| {
        let first = yi + 1;
        let mut local: BTreeMap<CanonicalKey, ColoredSystem> = BTreeMap::new();
        let mut t1 = vec![usize::MAX; n_flags];
        t1[0] = first;
        t1[first] = 0;
        complete_matchings(&mut t1, &mut |t1| {
            let sys = ColoredSystem::new(t0.clone(), t1.to_vec(), t2.clone()).unwrap();
            if sys.is_connected() {
                let (form, _) = canonical_form(&sys);
                local.entry(canonical_key(&form)).or_insert(form);
            }
        });
        local.into_iter().collect::<Vec<_>>()
    });
    Ok(dedup_sorted(found)
        .into_iter()
        .map(|sys| FlagMap::try_new(sys).expect("generated maps are strict"))
        .collect())
}

fn complete_matchings(t: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    let x = match t.iter().position(|&v| v == usize::MAX) {
        None => {
            f(t);
            return;
        }
        Some(x) => x,
    };
    for y in x + 1..t.len() {
        if t[y] == usize::MAX {
            t[x] = y;
            t[y] = x;
            complete_matchings(t, f);
            t[x] = usize::MAX;
            t[y] = usize::MAX;
        }
    }
}

/// Per-map classification row of the census.
#[derive(Debug, Clone)]
pub struct CensusRecord {
    pub key: CanonicalKey,
    pub n_flags: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub chi: i64,
    pub orientable: bool,
    pub k: usize,
    pub type_key: CanonicalKey,
    pub tr_k: usize,
    pub tr_type_key: CanonicalKey,
    pub le_k: usize,
    pub le_type_key: CanonicalKey,
    /// Reduced fraction tr_k / k.
    pub tr_ratio: (usize, usize),
    /// Canonical key of the dual map; used to check the leapfrog columns
    /// against the dual record.
    pub dual_key: CanonicalKey,
}

impl CensusRecord {
    pub fn ratio_label(&self) -> String {
        if self.tr_ratio.1 == 1 {
            format!("{}", self.tr_ratio.0)
        } else {
            format!("{}/{}", self.tr_ratio.0, self.tr_ratio.1)
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn type_key_of(m: &FlagMap) -> (usize, CanonicalKey) {
    let orbits = flag_orbit_partition(m);
    let graph = m
        .system()
        .quotient(&orbits)
        .expect("orbit partition is compatible");
    (orbits.len(), canonical_key(&graph))
}

/// Classifies one map into a census record.
pub fn classify_map(m: &FlagMap) -> CensusRecord {
    let (k, type_key) = type_key_of(m);
    let tr = truncate(m).map;
    let (tr_k, tr_type_key) = type_key_of(&tr);
    let le = leapfrog(m);
    let (le_k, le_type_key) = type_key_of(&le);
    let g = gcd(tr_k, k);
    CensusRecord {
        key: canonical_key(m.system()),
        n_flags: m.size(),
        vertices: m.vertices().len(),
        edges: m.edges().len(),
        faces: m.faces().len(),
        chi: m.euler_characteristic(),
        orientable: m.is_orientable(),
        k,
        type_key,
        tr_k,
        tr_type_key,
        le_k,
        le_type_key,
        tr_ratio: (tr_k / g, k / g),
        dual_key: canonical_key(m.dual().system()),
    }
}

/// One record per map with at most `max_flags` flags, plus the named
/// builder maps and their duals. Deterministic order by flag count, then
/// canonical key.
pub fn census(max_flags: usize) -> Result<Vec<CensusRecord>, EnumError> {
    let mut pool: BTreeMap<CanonicalKey, FlagMap> = BTreeMap::new();
    let mut n = 4;
    while n <= max_flags {
        for m in enumerate_maps(n)? {
            pool.insert(canonical_key(m.system()), m);
        }
        n += 4;
    }
    for (_, m) in census_builders() {
        pool.insert(canonical_key(m.dual().system()), m.dual());
        pool.insert(canonical_key(m.system()), m);
    }
    let maps: Vec<FlagMap> = pool.into_values().collect();
    let mut records = par::map_slice(&maps, classify_map);
    records.sort_by(|a, b| (a.n_flags, &a.key).cmp(&(b.n_flags, &b.key)));
    Ok(records)
}

/// Delimited census export: a fixed 13-column header, one row per record,
/// keys in hex.
pub fn census_to_delimited(records: &[CensusRecord]) -> String {
    let mut out =
        String::from("key,n_flags,V,E,F,chi,orientable,k,type_key,tr_k,tr_type_key,le_k,le_type_key\n");
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.key.to_hex(),
            r.n_flags,
            r.vertices,
            r.edges,
            r.faces,
            r.chi,
            r.orientable,
            r.k,
            r.type_key.to_hex(),
            r.tr_k,
            r.tr_type_key.to_hex(),
            r.le_k,
            r.le_type_key.to_hex(),
        ));
    }
    out
}
