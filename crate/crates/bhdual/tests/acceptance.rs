//! Acceptance suite: thirteen end-to-end criteria, one test each,
//! printing one pass line apiece (visible with `--nocapture`; the test
//! name itself carries the verdict in normal runs).  Heavy criteria
//! share a single full-strength verification sweep at bound 8.

use std::collections::BTreeSet;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use bhdual::atlas::Atlas;
use bhdual::invariants::{delta, milnor_number, Triple};
use bhdual::invertible::{classify, transpose, WeightSystem};
use bhdual::poly::parse_polynomial;
use bhdual::series::{as_polynomial, eig_mult, expand, milnor_algebra_oracle, monodromy_charpoly, poincare_series, saito_dual};
use bhdual::tables::{self, TableKind};
use bhdual::verify::{enumerate_forms, partition_count_oracle, verify_all, CheckConfig, VerifyReport};
use bhdual::{t_graph, TypeTag};

/// The shared exhaustive sweep: every form at bound 8, every check on
/// (all 1989 Type I–V parameter combinations, graph identities included).
fn bound8() -> &'static (VerifyReport, Duration) {
    static REPORT: OnceLock<(VerifyReport, Duration)> = OnceLock::new();
    REPORT.get_or_init(|| {
        let start = Instant::now();
        let report = verify_all(8, &CheckConfig::default());
        (report, start.elapsed())
    })
}

fn pass(n: u32, what: &str) {
    println!("criterion {n:02} ({what}): pass");
}

#[test]
fn criterion_01_golden_tables_regenerate() {
    let start = Instant::now();
    let atlas = Atlas::builtin();
    for kind in TableKind::ALL {
        let diff = tables::diff(kind, atlas).unwrap();
        assert!(diff.is_empty(), "{kind}: {diff:#?}");
    }
    // Row coverage: the selectors span the documented table sizes,
    // including the generated A(k,l) (k,l ≤ 5) and D(k) (k ≤ 10) rows.
    assert_eq!(tables::selection(TableKind::Simple, atlas).unwrap().len(), 35);
    assert_eq!(tables::selection(TableKind::Arnold, atlas).unwrap().len(), 10);
    assert_eq!(tables::selection(TableKind::Bimodal, atlas).unwrap().len(), 14);
    assert_eq!(tables::selection(TableKind::Series, atlas).unwrap().len(), 3);
    assert_eq!(tables::selection(TableKind::Orbits, atlas).unwrap().len(), 14);
    assert_eq!(tables::selection(TableKind::Phi, atlas).unwrap().len(), 44);
    // Every characteristic-function string in the data file is in
    // canonical form: parsing and re-rendering is the identity.
    let raw = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/atlas.txt")).unwrap();
    let mut phi_cells = 0;
    for line in raw.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('|').collect();
        for cell in [cols[13], cols[14]] {
            let parsed: bhdual::CycloProduct = cell.parse().unwrap();
            assert_eq!(parsed.to_string(), cell, "non-canonical phi in {}", cols[0]);
            phi_cells += 1;
        }
    }
    assert_eq!(phi_cells, 88);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    pass(1, "golden tables regenerate with zero diffs");
}

#[test]
fn criterion_02_strange_duality_full_enumeration() {
    let (report, elapsed) = bound8();
    assert_eq!(report.total, 1989);
    for r in &report.records {
        assert!(r.strange_duality, "{}: {:?}", r.form, r.failures);
    }
    assert!(*elapsed < Duration::from_secs(60), "took {elapsed:?}");
    pass(2, "strange duality at bound 8");
}

#[test]
fn criterion_03_delta_and_gorenstein_equalities() {
    let (report, _) = bound8();
    for r in &report.records {
        assert!(r.delta, "{}: {:?}", r.form, r.failures);
        assert!(r.gorenstein, "{}: {:?}", r.form, r.failures);
    }
    pass(3, "delta and Gorenstein-parameter equalities");
}

#[test]
fn criterion_04_cramer_weights() {
    let (report, _) = bound8();
    for r in &report.records {
        assert!(r.cramer, "{}: {:?}", r.form, r.failures);
    }
    pass(4, "Cramer's rule reproduces the closed-form weights");
}

#[test]
fn criterion_05_poincare_oracle_sampled() {
    // 50 deterministically sampled forms, ten per type: evenly spaced
    // indices within each type's slice of the bound-8 enumeration.
    let forms = enumerate_forms(8);
    let mut sample = Vec::new();
    for tag in TypeTag::ALL {
        let of_type: Vec<_> = forms.iter().filter(|f| f.type_tag == tag).collect();
        let step = of_type.len() / 10;
        sample.extend((0..10).map(|i| of_type[i * step].clone()));
    }
    assert_eq!(sample.len(), 50);
    let types: BTreeSet<_> = sample.iter().map(|f| f.type_tag).collect();
    assert_eq!(types.len(), 5);
    for tf in &sample {
        let ws = tf.canonical_weights();
        let depth = usize::try_from(2 * ws.d).unwrap().min(400);
        let coeffs = expand(&poincare_series(&ws), depth);
        for k in 0..=depth {
            assert_eq!(
                coeffs[k],
                BigInt::from(partition_count_oracle(&ws, k as u64)),
                "{tf} at coefficient {k}"
            );
        }
    }
    pass(5, "Poincaré series matches the lattice-point oracle");
}

#[test]
fn criterion_06_monodromy_for_reduced_weights() {
    let (report, _) = bound8();
    let mut reduced = 0;
    for r in &report.records {
        if r.form.canonical_weights().is_reduced() {
            assert_eq!(r.monodromy, Some(true), "{}: {:?}", r.form, r.failures);
            reduced += 1;
        } else {
            assert_eq!(r.monodromy, None, "{}", r.form);
        }
    }
    assert!(reduced > 100, "only {reduced} reduced forms at bound 8");
    pass(6, "Saito-dual eigenvalues equal the Milnor algebra");
}

#[test]
fn criterion_07_saito_duality() {
    let (report, _) = bound8();
    for r in &report.records {
        assert!(r.saito, "{}: {:?}", r.form, r.failures);
        if r.form.canonical_weights().is_reduced() {
            assert_eq!(r.power, Some(true), "{}: {:?}", r.form, r.failures);
        }
    }
    pass(7, "Saito duality and the power relation");
}

#[test]
fn criterion_08_worked_monodromy_case() {
    let entry = Atlas::builtin().get("E18").unwrap();
    let tf = classify(&parse_polynomial(&entry.f_text).unwrap()).unwrap();
    let d = tf.canonical_weights().d;
    let c = tf.dual_weights().content();
    assert_eq!((d, c), (30, 2));
    let eig = eig_mult(&monodromy_charpoly(&tf), d / c).unwrap();
    assert_eq!(
        eig.multiset(),
        vec![1, 2, 4, 5, 5, 7, 8, 10, 10, 11, 13, 14]
    );
    let oracle = milnor_algebra_oracle(&WeightSystem::new([5, 6, 3], 15)).unwrap();
    assert_eq!(eig, oracle);
    pass(8, "worked bimodal monodromy eigenvalues");
}

#[test]
fn criterion_09_polynomiality_flags() {
    let atlas = Atlas::builtin();
    let j30 = atlas.get("J3,0").unwrap();
    let d = classify(&parse_polynomial(&j30.f_text).unwrap())
        .unwrap()
        .canonical_weights()
        .d;
    assert!(as_polynomial(&j30.phi_f).is_some());
    assert_eq!(saito_dual(&j30.phi_f, d).unwrap(), j30.phi_ft);
    assert!(as_polynomial(&j30.phi_ft).is_none());
    let u10 = atlas.get("U1,0").unwrap();
    assert!(as_polynomial(&u10.phi_f).is_none());
    pass(9, "polynomiality flags of the series heads");
}

#[test]
fn criterion_10_dynkin_discriminant_sweep() {
    let start = Instant::now();
    for g1 in 2..=10 {
        for g2 in 2..=10 {
            for g3 in 2..=10 {
                let gamma = Triple::new([g1, g2, g3]);
                let graph = t_graph(&gamma);
                let n = graph.n;
                let want = if n % 2 == 0 { delta(&gamma) } else { -delta(&gamma) };
                assert_eq!(graph.reduced_discriminant(), want, "γ=({g1},{g2},{g3})");
                assert_eq!(graph.gram_determinant(), 0, "γ=({g1},{g2},{g3})");
                let want_corank = if delta(&gamma) == 0 { 2 } else { 1 };
                assert_eq!(graph.corank(), want_corank, "γ=({g1},{g2},{g3})");
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    pass(10, "graph discriminant identities over the triple sweep");
}

#[test]
fn criterion_11_bimodal_extensions() {
    let atlas = Atlas::builtin();
    for entry in tables::selection(TableKind::Bimodal, atlas).unwrap() {
        let pairs: [(u64, u64); 3] = entry
            .delta_pairs
            .clone()
            .expect("bimodal rows store extension data")
            .try_into()
            .unwrap();
        let graph = t_graph(&entry.gamma)
            .extend_bimodal(entry.a_w as u64, &pairs)
            .unwrap();
        let tf = classify(&parse_polynomial(&entry.f_text).unwrap()).unwrap();
        let mu = milnor_number(&tf.canonical_weights()).unwrap();
        assert_eq!(graph.n as u64, mu, "{}", entry.name);
        assert_eq!(entry.phi_ft.degree(), mu as i64, "{}", entry.name);
    }
    pass(11, "bimodal graph extensions have Milnor-number many vertices");
}

#[test]
fn criterion_12_cusp_support() {
    let (report, _) = bound8();
    for r in &report.records {
        assert!(r.cusp, "{}: {:?}", r.form, r.failures);
    }
    pass(12, "cusp-transform support over the full enumeration");
}

#[test]
fn criterion_13_involutions() {
    // Transposition is an involution on supports.
    for tf in enumerate_forms(4) {
        let p = tf.to_polynomial();
        let back = transpose(&transpose(&p).unwrap()).unwrap();
        let support = |q: &bhdual::Polynomial| -> BTreeSet<_> {
            q.terms_desc().map(|(m, _)| m).collect()
        };
        assert_eq!(support(&back), support(&p), "{tf}");
    }

    // Name-level duality is an involution away from the two one-way
    // class pointers, which are exactly E18 and J3,0.
    let atlas = Atlas::builtin();
    let mut one_way = Vec::new();
    for e in atlas.entries() {
        if atlas.one_way(e) {
            one_way.push(e.name.clone());
            continue;
        }
        assert_eq!(atlas.dual_name(&e.dual).unwrap(), e.name, "{}", e.name);
    }
    one_way.sort();
    assert_eq!(one_way, ["E18", "J3,0"]);
    for name in ["A(3,4)", "A(1,7)", "D(9)", "D(12)"] {
        let dual = atlas.dual_name(name).unwrap();
        assert_eq!(atlas.dual_name(&dual).unwrap(), name, "{name}");
    }

    // The Saito dual is an involution on characteristic functions.
    for tf in enumerate_forms(4) {
        let ws = tf.canonical_weights();
        let phi = bhdual::characteristic_function(&ws, &bhdual::dolgachev(&tf));
        let twice = saito_dual(&saito_dual(&phi, ws.d).unwrap(), ws.d).unwrap();
        assert_eq!(twice, phi, "{tf}");
    }
    pass(13, "transpose, name-duality, and Saito-dual involutions");
}
