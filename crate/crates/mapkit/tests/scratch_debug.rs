use mapkit::canon::canonical_key;
use mapkit::enumerate::enumerate_admissible;
use mapkit::io::build_named;
use mapkit::ops::{assemble_source_types, expand_truncation, recognize_truncation, truncate};
use mapkit::registry::classify_name;

#[test]
fn debug_dump() {
    // which of the dual pair truncates to the cube?
    let cube = build_named("cube").unwrap();
    let dih = build_named("dihedron(4)").unwrap();
    let hoso = build_named("hosohedron(4)").unwrap();
    let ck = canonical_key(cube.system());
    println!("Tr(dihedron(4)) == cube: {}", canonical_key(truncate(&dih).map.system()) == ck);
    println!("Tr(hosohedron(4)) == cube: {}", canonical_key(truncate(&hoso).map.system()) == ck);
    let tr_dih = truncate(&dih).map;
    let face_sizes: Vec<usize> = tr_dih.faces().classes().iter().map(|c| c.len() / 2).collect();
    println!("Tr(dihedron(4)) face sizes: {face_sizes:?}");
    match recognize_truncation(&cube) {
        Some((src, _)) => {
            println!(
                "recognize(cube): src size {}, == dihedron(4): {}, == hosohedron(4): {}",
                src.size(),
                canonical_key(src.system()) == canonical_key(dih.system()),
                canonical_key(src.system()) == canonical_key(hoso.system())
            );
        }
        None => println!("recognize(cube): none"),
    }

    // the 4 -> 6 three-halves rules: image profiles and candidate sources
    for img in enumerate_admissible(6).unwrap() {
        let mut profile: Vec<usize> = img.orbits(&[0, 1]).classes().iter().map(Vec::len).collect();
        profile.sort();
        let img_name = classify_name(&img).map(|n| n.label()).unwrap_or_default();
        for (_, cand) in assemble_source_types(&img).unwrap() {
            if cand.size() == 4 {
                let key = canonical_key(&cand);
                println!(
                    "4->6: image {img_name} profile {profile:?} source key {} sems {:?}",
                    &key.to_hex()[..16],
                    semi_profile(&cand)
                );
            }
        }
    }

    // expansion re-quotient failures for k in 1..=4
    use std::collections::BTreeSet;
    let ks: BTreeSet<usize> = [1usize, 2, 3, 4].into_iter().collect();
    let rules = mapkit::tables::derive_rules(&ks);
    match &rules {
        Ok(rules) => {
            for r in rules {
                let expanded = expand_truncation(&r.source_graph);
                let ok = admits_surjection(&expanded, &r.image_graph);
                if !ok {
                    println!(
                        "NO SURJECTION: rel {:?} source {} image {}",
                        r.relation,
                        r.source_name.as_ref().map(|n| n.label()).unwrap_or_else(|| r.source_key.to_hex()[..12].into()),
                        r.image_name.as_ref().map(|n| n.label()).unwrap_or_else(|| r.image_key.to_hex()[..12].into()),
                    );
                }
            }
        }
        Err(e) => println!("derive_rules error: {e}"),
    }
}

fn semi_profile(g: &mapkit::ColoredSystem) -> Vec<Vec<usize>> {
    (0..3)
        .map(|c| (0..g.size()).filter(|&x| g.is_semi_edge(c, x)).collect())
        .collect()
}

fn admits_surjection(from: &mapkit::ColoredSystem, onto: &mapkit::ColoredSystem) -> bool {
    'target: for target in 0..onto.size() {
        let mut image = vec![usize::MAX; from.size()];
        image[0] = target;
        let mut queue = vec![0usize];
        let mut cursor = 0;
        while cursor < queue.len() {
            let x = queue[cursor];
            cursor += 1;
            for c in 0..3 {
                let y = from.apply(c, x);
                let want = onto.apply(c, image[x]);
                if image[y] == usize::MAX {
                    image[y] = want;
                    queue.push(y);
                } else if image[y] != want {
                    continue 'target;
                }
            }
        }
        return true;
    }
    false
}
