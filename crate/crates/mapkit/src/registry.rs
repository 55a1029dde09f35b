//! The named-type registry: canonical keys of small symmetry type graphs
//! together with their conventional names.
//!
//! Everything here is derived, not transcribed from pictures:
//!
//! - `1` is the one-vertex graph with three semi-edges.
//! - The seven two-vertex graphs are named `2_I` by the set `I` of
//!   colours whose involution is the identity (`2` when `I` is empty).
//! - `3^0` is the quotient of any truncation by its tag tripartition;
//!   `3^2` is its colour-swap dual; `3^02` is the remaining three-vertex
//!   graph.
//! - `9_A`, `9_B`, `9_Cd` are the truncation expansions of `3^0`, `3^2`,
//!   `3^02`.
//! - Among the three truncation-admissible four-vertex graphs, `4_Dp` is
//!   the one with two face orbits, `4_Gd` the face-transitive one with a
//!   vertex whose 1- and 2-neighbours coincide, `4_D` the third.
//! - `5_Bd` is the unique admissible five-vertex graph.
//!
//! Names that are only constrained to a set (the asymmetric six-, seven-
//! and nine-vertex families) are stored as alias sets and never guessed.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::canon::{canonical_form, canonical_key, CanonicalKey};
use crate::enumerate::{enumerate_admissible, enumerate_type_graphs, EnumerationConstraint};
use crate::ops::{assemble_source_types, expand_truncation};
use crate::system::{ColoredSystem, COLOURS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PinStatus {
    /// The key determines the name.
    Pinned,
    /// The name is known only up to membership in this set.
    AliasSet(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedType {
    pub name: String,
    pub key: CanonicalKey,
    pub pin_status: PinStatus,
}

impl NamedType {
    pub fn is_pinned(&self) -> bool {
        matches!(self.pin_status, PinStatus::Pinned)
    }

    /// The pinned name, or a braced set for alias entries.
    pub fn label(&self) -> String {
        self.name.clone()
    }

    pub fn candidates(&self) -> Vec<&str> {
        match &self.pin_status {
            PinStatus::Pinned => vec![self.name.as_str()],
            PinStatus::AliasSet(set) => set.iter().map(String::as_str).collect(),
        }
    }
}

pub struct Registry {
    entries: HashMap<CanonicalKey, NamedType>,
    pinned_graphs: HashMap<String, ColoredSystem>,
}

impl Registry {
    pub fn classify(&self, g: &ColoredSystem) -> Option<NamedType> {
        self.entries.get(&canonical_key(g)).cloned()
    }

    pub fn pinned_graph(&self, name: &str) -> Option<&ColoredSystem> {
        self.pinned_graphs.get(name)
    }

    pub fn pinned_key(&self, name: &str) -> Option<CanonicalKey> {
        self.pinned_graphs.get(name).map(canonical_key)
    }

    fn pin(&mut self, name: &str, g: &ColoredSystem) {
        let (form, _) = canonical_form(g);
        let key = canonical_key(&form);
        let prev = self.entries.insert(
            key.clone(),
            NamedType {
                name: name.to_string(),
                key,
                pin_status: PinStatus::Pinned,
            },
        );
        assert!(prev.is_none(), "key for {name} already registered as {prev:?}");
        self.pinned_graphs.insert(name.to_string(), form);
    }

    fn alias(&mut self, set: &[&str], g: &ColoredSystem) {
        let key = canonical_key(g);
        if self.entries.contains_key(&key) {
            return;
        }
        let names: Vec<String> = set.iter().map(|s| s.to_string()).collect();
        self.entries.insert(
            key.clone(),
            NamedType {
                name: format!("{{{}}}", names.join("|")),
                key,
                pin_status: PinStatus::AliasSet(names),
            },
        );
    }

    /// Rebuilds the registry from scratch. Panics if any derivation step
    /// does not come out as expected; re-derivation is deterministic.
    pub fn derive() -> Registry {
        let mut reg = Registry {
            entries: HashMap::new(),
            pinned_graphs: HashMap::new(),
        };

        let one = ColoredSystem::new(vec![0], vec![0], vec![0]).unwrap();
        reg.pin("1", &one);

        let two = enumerate_type_graphs(2, EnumerationConstraint::All).unwrap();
        assert_eq!(two.len(), 7, "two-vertex enumeration");
        for g in &two {
            let identity_colours: Vec<usize> = COLOURS
                .into_iter()
                .filter(|&c| (0..2).all(|x| g.is_semi_edge(c, x)))
                .collect();
            let name = if identity_colours.is_empty() {
                "2".to_string()
            } else {
                format!(
                    "2_{}",
                    identity_colours
                        .iter()
                        .map(usize::to_string)
                        .collect::<String>()
                )
            };
            reg.pin(&name, g);
        }

        let three0 = expand_truncation(&one);
        let three2 = three0.dual();
        reg.pin("3^0", &three0);
        reg.pin("3^2", &three2);
        let threes = enumerate_type_graphs(3, EnumerationConstraint::All).unwrap();
        assert_eq!(threes.len(), 3, "three-vertex enumeration");
        let rest: Vec<&ColoredSystem> = threes
            .iter()
            .filter(|g| reg.classify(g).is_none())
            .collect();
        assert_eq!(rest.len(), 1, "exactly one unnamed three-vertex graph");
        reg.pin("3^02", rest[0]);

        for (name, base) in [("9_A", "3^0"), ("9_B", "3^2"), ("9_Cd", "3^02")] {
            let expanded = expand_truncation(reg.pinned_graph(base).unwrap());
            reg.pin(name, &expanded);
        }

        let adm4 = enumerate_admissible(4).unwrap();
        assert_eq!(adm4.len(), 3, "admissible four-vertex enumeration");
        let (two_face_orbits, face_transitive): (Vec<_>, Vec<_>) = adm4
            .iter()
            .partition(|g| g.two_factor_components(0, 1) == 2);
        assert_eq!(two_face_orbits.len(), 1, "one admissible 4-graph with two face orbits");
        assert_eq!(face_transitive.len(), 2);
        reg.pin("4_Dp", two_face_orbits[0]);
        // the face-transitive pair splits on whether some vertex has equal
        // 1- and 2-images, i.e. the base flag orbit meets its own 2,1-step
        let (gd, d): (Vec<_>, Vec<_>) = face_transitive.iter().partition(|g| {
            (0..g.size()).any(|v| g.apply(1, v) == g.apply(2, v) && g.apply(2, v) != v)
        });
        assert_eq!(gd.len(), 1, "the 2,1-step fingerprint splits the pair");
        reg.pin("4_Gd", gd[0]);
        reg.pin("4_D", d[0]);

        let adm5 = enumerate_admissible(5).unwrap();
        assert_eq!(adm5.len(), 1, "admissible five-vertex enumeration");
        reg.pin("5_Bd", &adm5[0]);

        let five_sources: Vec<ColoredSystem> = assemble_source_types(&adm5[0])
            .unwrap()
            .into_iter()
            .map(|(_, cand)| cand)
            .filter(|cand| cand.size() == 5)
            .collect();
        assert_eq!(five_sources.len(), 1, "five-vertex truncation source");
        reg.alias(&["5_Bp"], &five_sources[0]);

        let adm6 = enumerate_admissible(6).unwrap();
        assert_eq!(adm6.len(), 16, "admissible six-vertex enumeration");
        let mut profile_histogram: HashMap<Vec<usize>, usize> = HashMap::new();
        for g in &adm6 {
            let mut profile: Vec<usize> = g
                .orbits(&[0, 1])
                .classes()
                .iter()
                .map(Vec::len)
                .collect();
            profile.sort_unstable();
            *profile_histogram.entry(profile.clone()).or_insert(0) += 1;
            let set: &[&str] = match profile.as_slice() {
                [2, 2, 2] => &["6_B"],
                [1, 1, 4] => &["6_Pd"],
                [2, 4] => &["6_G", "6_H", "6_Md", "6_Nd", "6_Od"],
                [3, 3] => &["6_Hp"],
                [1, 5] => &["6_Jd"],
                [6] => &["6_Bp", "6_Fd", "6_Gp", "6_Mdp", "6_Ndp", "6_Odp", "6_Pdp"],
                other => panic!("unexpected face-orbit profile {other:?}"),
            };
            reg.alias(set, g);
        }
        let expected: [(&[usize], usize); 6] = [
            (&[2, 2, 2], 1),
            (&[1, 1, 4], 1),
            (&[2, 4], 5),
            (&[3, 3], 1),
            (&[1, 5], 1),
            (&[6], 7),
        ];
        for (profile, count) in expected {
            assert_eq!(
                profile_histogram.get(profile),
                Some(&count),
                "six-vertex face-orbit profile {profile:?}"
            );
        }

        let adm7 = enumerate_admissible(7).unwrap();
        assert_eq!(adm7.len(), 2, "admissible seven-vertex enumeration");
        for g in &adm7 {
            reg.alias(&["7_J", "7_Jp"], g);
        }

        let adm9 = enumerate_admissible(9).unwrap();
        assert_eq!(adm9.len(), 10, "admissible nine-vertex enumeration");
        let pinned_nine: Vec<CanonicalKey> = ["9_A", "9_B", "9_Cd"]
            .iter()
            .map(|n| reg.pinned_key(n).unwrap())
            .collect();
        let mut unnamed = 0;
        for g in &adm9 {
            let key = canonical_key(g);
            if pinned_nine.contains(&key) {
                continue;
            }
            unnamed += 1;
            reg.alias(
                &["9_Ap", "9_Bp", "9_Dd", "9_E", "9_Ep", "9_F", "9_Fp"],
                g,
            );
        }
        assert_eq!(unnamed, 7, "nine-vertex graphs beyond the three expansions");

        reg
    }
}

static REGISTRY: OnceLock<Registry> = OnceLock::new();

pub fn registry() -> &'static Registry {
    REGISTRY.get_or_init(Registry::derive)
}

/// Resolves the canonical key of `g` against the registry: a pinned name,
/// an alias set, or nothing for unregistered keys.
pub fn classify_name(g: &ColoredSystem) -> Option<NamedType> {
    let k = g.size();
    if !matches!(k, 1..=7 | 9) {
        return None;
    }
    registry().classify(g)
}
