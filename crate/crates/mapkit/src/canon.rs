//! Canonical forms for coloured involution systems.
//!
//! The key is a breadth-first relabelling from each start point with fixed
//! colour order 0, 1, 2; the serialized transition table that is
//! lexicographically least over all start points is the key. Transitions
//! are deterministic per colour, so the relabelling from a given root is
//! unique and two systems are colour-isomorphic iff their keys are equal.

use std::fmt;

use crate::system::{ColoredSystem, COLOURS};

/// Total isomorphism invariant of a system, usable for dedup and ordering.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        let mut s = String::with_capacity(self.0.len() * 2);
        for b in &self.0 {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

/// BFS relabelling from `root`: points are numbered in discovery order,
/// exploring colours 0, 1, 2 at each point. Returns `perm[old] = new`.
fn bfs_labels(sys: &ColoredSystem, root: usize) -> Vec<usize> {
    let n = sys.size();
    let mut perm = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    perm[root] = 0;
    order.push(root);
    let mut cursor = 0;
    while cursor < order.len() {
        let x = order[cursor];
        cursor += 1;
        for c in COLOURS {
            let y = sys.apply(c, x);
            if perm[y] == usize::MAX {
                perm[y] = order.len();
                order.push(y);
            }
        }
    }
    debug_assert_eq!(order.len(), n, "system must be connected");
    perm
}

/// Serialized transition table under a relabelling, in label order.
fn table_bytes(sys: &ColoredSystem, perm: &[usize]) -> Vec<u8> {
    let n = sys.size();
    let wide = n > u8::MAX as usize;
    let mut inverse = vec![0; n];
    for (old, &new) in perm.iter().enumerate() {
        inverse[new] = old;
    }
    let mut bytes = Vec::with_capacity(2 + n * 3 * if wide { 2 } else { 1 });
    bytes.push(if wide { 2 } else { 1 });
    let push = |v: usize, bytes: &mut Vec<u8>| {
        if wide {
            bytes.extend_from_slice(&(v as u16).to_be_bytes());
        } else {
            bytes.push(v as u8);
        }
    };
    push(n, &mut bytes);
    for new in 0..n {
        let old = inverse[new];
        for c in COLOURS {
            push(perm[sys.apply(c, old)], &mut bytes);
        }
    }
    bytes
}

/// Lexicographically least serialized table over all BFS roots.
pub fn canonical_key(sys: &ColoredSystem) -> CanonicalKey {
    CanonicalKey(canonical_form_inner(sys).1)
}

/// The relabelled copy of `sys` realizing the canonical key, together with
/// the relabelling `perm[old] = new` that produced it.
pub fn canonical_form(sys: &ColoredSystem) -> (ColoredSystem, Vec<usize>) {
    let (perm, _) = canonical_form_inner(sys);
    (sys.relabel(&perm), perm)
}

fn canonical_form_inner(sys: &ColoredSystem) -> (Vec<usize>, Vec<u8>) {
    let mut best: Option<(Vec<usize>, Vec<u8>)> = None;
    for root in 0..sys.size() {
        let perm = bfs_labels(sys, root);
        let bytes = table_bytes(sys, &perm);
        match &best {
            Some((_, b)) if *b <= bytes => {}
            _ => best = Some((perm, bytes)),
        }
    }
    best.expect("nonempty system")
}

/// Colour-respecting isomorphism test by permutation search: for each
/// candidate image of point 0, propagate the unique colour-respecting
/// extension and accept if no contradiction arises. Independent of the
/// canonical key construction; kept as an oracle for it.
pub fn are_isomorphic(a: &ColoredSystem, b: &ColoredSystem) -> bool {
    if a.size() != b.size() {
        return false;
    }
    (0..b.size()).any(|target| extend_isomorphism(a, b, target).is_some())
}

/// Attempts the unique colour-respecting extension of `0 -> target`.
pub(crate) fn extend_isomorphism(
    a: &ColoredSystem,
    b: &ColoredSystem,
    target: usize,
) -> Option<Vec<usize>> {
    let n = a.size();
    let mut image = vec![usize::MAX; n];
    image[0] = target;
    let mut queue = vec![0];
    let mut cursor = 0;
    while cursor < queue.len() {
        let x = queue[cursor];
        cursor += 1;
        for c in COLOURS {
            let y = a.apply(c, x);
            let want = b.apply(c, image[x]);
            if image[y] == usize::MAX {
                image[y] = want;
                queue.push(y);
            } else if image[y] != want {
                return None;
            }
        }
    }
    // a is connected, so every point got an image; surjectivity onto a
    // same-sized set forces bijectivity, but be explicit for relaxed inputs
    let mut seen = vec![false; n];
    for &im in &image {
        if im == usize::MAX || seen[im] {
            return None;
        }
        seen[im] = true;
    }
    Some(image)
}
