use symmetry_atlas::particles::{ElementStatus, ParticleClass};
use symmetry_atlas::{HalfInt, Rational64, Registry};

#[test]
fn fermion_generations_share_charges() {
    let r = Registry::bundled();
    let third = |n, d| Rational64::new(n, d);
    for g in 1..=3 {
        let mut charges: Vec<Rational64> = r
            .particles()
            .iter()
            .filter(|p| p.class == ParticleClass::Fermion && p.generation == Some(g))
            .map(|p| {
                assert_eq!(p.spin, HalfInt::HALF, "{}", p.name);
                p.charge
            })
            .collect();
        charges.sort();
        assert_eq!(charges, vec![third(-1, 1), third(-1, 3), third(0, 1), third(2, 3)], "generation {g}");
    }
}

#[test]
fn superpartners_differ_by_half() {
    let r = Registry::bundled();
    assert!(!r.superpartners().is_empty());
    for s in r.superpartners() {
        assert_eq!((s.particle_spin - s.partner_spin).abs(), HalfInt::HALF, "{}", s.particle);
    }
    let photino = r.superpartner("photon").unwrap();
    assert_eq!((photino.partner.as_str(), photino.partner_spin), ("photino", HalfInt::HALF));
    assert_eq!(r.superpartner("quark").unwrap().partner_spin, HalfInt::ZERO);
    assert_eq!(r.superpartner("Higgs").unwrap().partner, "higgsino");
    assert!(r.superpartner("phlogiston").is_err());
}

#[test]
fn element_counts_never_decrease() {
    let counts = Registry::bundled().element_counts().to_vec();
    assert!(counts.windows(2).all(|w| w[0].year < w[1].year && w[0].count <= w[1].count));
    assert_eq!(Registry::bundled().elements_known(1865).unwrap(), 63);
    assert!(Registry::bundled().elements_known(1900).is_err());
}

#[test]
fn unobserved_elements_in_the_printed_range() {
    let r = Registry::bundled();
    let missing: Vec<u32> =
        r.elements().iter().filter(|e| e.z <= 116 && e.status == ElementStatus::NotObserved).map(|e| e.z).collect();
    assert_eq!(missing, vec![113, 115]);
    for z in [110, 111, 112, 114, 116] {
        let e = r.element(z).unwrap();
        assert_eq!((e.symbol.as_str(), e.status), ("/", ElementStatus::NotNamed));
    }
    assert_eq!(r.element(1).unwrap().name, "Hydrogen");
    assert!(r.element(119).is_err());
}

#[test]
fn long_range_forces() {
    let r = Registry::bundled();
    assert_eq!(r.interactions().len(), 4);
    let mut infinite: Vec<&str> =
        r.interactions().iter().filter(|i| i.range_cm.is_infinite()).map(|i| i.name.as_str()).collect();
    infinite.sort_unstable();
    assert_eq!(infinite, ["electromagnetic", "gravitational"]);
}

#[test]
fn higgs_is_neutral() {
    let r = Registry::bundled();
    let h = r.particles().iter().find(|p| p.class == ParticleClass::Higgs).unwrap();
    assert_eq!((h.spin, h.charge), (HalfInt::ZERO, Rational64::from_integer(0)));
}

#[test]
fn data_directory_override() {
    let dir = std::env::temp_dir().join(format!("atlas-registry-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    for f in ["elements.csv", "element_counts.csv", "particles.csv", "interactions.csv", "superpartners.csv"] {
        std::fs::copy(format!("{src}/{f}"), dir.join(f)).unwrap();
    }
    let r = Registry::from_dir(&dir).unwrap();
    assert_eq!(r.element(102).unwrap().name, "Nobelium");

    let broken = std::fs::read_to_string(dir.join("elements.csv")).unwrap().replacen("Z,symbol", "Z,sym", 1);
    std::fs::write(dir.join("elements.csv"), broken).unwrap();
    assert!(Registry::from_dir(&dir).is_err());
    std::fs::remove_dir_all(&dir).unwrap();
}
