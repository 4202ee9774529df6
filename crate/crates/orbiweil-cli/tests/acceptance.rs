//! End-to-end acceptance gate: one test per top-level guarantee, so the
//! suite's pass/fail lines double as the release checklist.

use std::process::Command;

use orbiweil::cwcore::{cw_multiplicity_general, RepInput};
use orbiweil::exactmath::CyclotomicNumber;
use orbiweil::groupcore::{
    character_table_dixon, generate_group, nk_profile, verify_orthogonality, EigenvalueProfile,
    FiniteGroup, GroupElement, Matrix2, DEFAULT_SIZE_CAP,
};
use orbiweil::modular::{cw_modular, genus_normal_subgroup, modular_cover, Psl2zRepData};
use orbiweil::{fermat, fixtures, psl2fp};

fn primes(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi)
        .filter(|&n| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
        .collect()
}

#[test]
fn crit_1_klein_quartic_via_cli() {
    let out = Command::new(env!("CARGO_BIN_EXE_orbiweil"))
        .args(["modular-level", "--p", "7", "--format", "json"])
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "exit: {:?}", out.status);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid json");
    let entries = doc["entries"].as_array().expect("entries array");
    assert_eq!(entries.len(), 6);
    let mut total = 0;
    for e in entries {
        let id = e["rep_id"].as_str().unwrap();
        let dim = e["dim"].as_u64().unwrap();
        let mult = e["multiplicity"].as_u64().unwrap();
        if id == "gamma_2" {
            assert_eq!(dim, 3);
            assert_eq!(mult, 1, "d(gamma_2)");
        } else {
            assert_eq!(mult, 0, "d({id})");
        }
        total += dim * mult;
    }
    assert_eq!(total, 3);
    assert_eq!(doc["total_dimension"].as_u64(), Some(3));
}

#[test]
fn crit_2_modular_closed_form_equals_direct() {
    for p in primes(5, 47) {
        let closed = psl2fp::multiplicities_closed_form(p).unwrap();
        let direct = psl2fp::multiplicities_direct(p).unwrap();
        assert_eq!(closed.entries.len(), direct.entries.len(), "p = {p}");
        for (c, d) in closed.entries.iter().zip(&direct.entries) {
            assert_eq!(c, d, "p = {p}, rep {}", c.rep_id);
        }
        let order = p * (p * p - 1) / 2;
        let genus = genus_normal_subgroup(order, p, 0, 0).unwrap();
        let cert = closed.genus_certificate.expect("certificate present");
        assert_eq!(cert.total, genus, "p = {p}");
        assert_eq!(cert.expected, cert.total, "p = {p}");
    }
    let spot = |p: u64| {
        psl2fp::multiplicities_closed_form(p)
            .unwrap()
            .total_dimension()
    };
    assert_eq!(spot(11), 26);
    assert_eq!(spot(13), 50);
}

#[test]
fn crit_3_fermat_closed_form_equals_direct() {
    for n in 3..=12u64 {
        let closed = fermat::multiplicities_closed_form(n).unwrap();
        let direct = fermat::multiplicities_direct(n).unwrap();
        assert_eq!(closed, direct, "N = {n}");
        let cert = closed.genus_certificate.expect("certificate present");
        assert_eq!(cert.total, (n - 1) * (n - 2) / 2, "N = {n}");
    }

    let nonzero = |n: u64| -> Vec<(String, u64, u64)> {
        fermat::multiplicities_closed_form(n)
            .unwrap()
            .entries
            .into_iter()
            .filter(|e| e.multiplicity > 0)
            .map(|e| (e.rep_id, e.dim, e.multiplicity))
            .collect()
    };
    assert_eq!(
        nonzero(7),
        vec![
            ("rho_minus_1".into(), 3, 1),
            ("rho_minus_2".into(), 3, 1),
            ("rho_minus_3".into(), 3, 1),
            ("rho_1_2".into(), 6, 1),
        ]
    );
    assert_eq!(
        nonzero(6),
        vec![
            ("rho2_2".into(), 1, 1),
            ("rho_minus_1".into(), 3, 1),
            ("rho_1_2".into(), 6, 1),
        ]
    );
}

fn table_invariants(label: &str, group: &FiniteGroup) {
    let table = character_table_dixon(group).unwrap();
    let orth = verify_orthogonality(&table).unwrap();
    assert!(orth.pass, "{label}: {:?}", orth.failures);
    let dim_sum: u64 = (0..table.values.len())
        .map(|i| table.dim(i) * table.dim(i))
        .sum();
    assert_eq!(dim_sum, group.order() as u64, "{label} dim squares");
}

#[test]
fn crit_4_dixon_oracle_agreement() {
    for p in [5u64, 7, 11, 13] {
        table_invariants(&format!("psl2fp p={p}"), &psl2fp::psl2fp_group(p).unwrap());
        psl2fp::dixon_cross_check(p).unwrap();
    }
    for n in 3..=8u64 {
        table_invariants(&format!("fermat N={n}"), &fermat::fermat_group(n).unwrap());
        fermat::dixon_cross_check(n).unwrap();
    }
    let gamma8 = fixtures::gamma8_group().unwrap();
    assert_eq!(gamma8.order(), 192);
    table_invariants("gamma8", &gamma8);
    let summands = fixtures::gamma8_canonical_summands().unwrap();
    let dims: Vec<u64> = summands.iter().map(|r| r.dim).collect();
    assert_eq!(dims, [2, 3], "level-8 constituents");
    assert_eq!(dims.iter().sum::<u64>(), 5, "total equals the genus");
}

#[test]
fn crit_5_matrix_fixtures() {
    let reports = fixtures::verify_all().unwrap();
    assert_eq!(reports.len(), 9);
    for (name, report) in &reports {
        assert!(report.pass, "{name}: {:?}", report.failures);
    }
}

#[test]
fn crit_6_class_numbers() {
    for p in primes(7, 163).into_iter().filter(|&p| p % 4 == 3) {
        assert_eq!(
            psl2fp::class_number(p).unwrap(),
            psl2fp::class_number_forms_oracle(p).unwrap(),
            "h({p})"
        );
    }
    assert_eq!(psl2fp::class_number(7).unwrap(), 1);
    assert_eq!(psl2fp::class_number(23).unwrap(), 3);
}

// Deterministic companion to the randomized suites in the library's
// properties target; both run under the same workspace invocation.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

fn random_cyclo(rng: &mut Lcg) -> CyclotomicNumber {
    const ORDERS: [u64; 15] = [1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30, 40, 60];
    let n = ORDERS[rng.below(15) as usize];
    let mut acc = CyclotomicNumber::zero();
    for _ in 0..=rng.below(3) {
        let z = CyclotomicNumber::root_of_unity(n, rng.below(n) as i64).unwrap();
        let c = rng.below(9) as i64 - 4;
        acc = acc
            .checked_add(&z.scaled(&orbiweil::exactmath::rat_int(c)))
            .unwrap();
    }
    acc
}

fn trivial_modular_rep(e: u64) -> RepInput {
    RepInput {
        id: "trivial".into(),
        dim: 1,
        is_trivial: true,
        ram_profiles: vec![EigenvalueProfile::trivial_action(e, 1)],
        orb_profiles: vec![
            EigenvalueProfile::trivial_action(2, 1),
            EigenvalueProfile::trivial_action(3, 1),
        ],
    }
}

fn psl27_multiplicities(h_seed: Option<u64>) -> Vec<u64> {
    let s = Matrix2::new(7, true, [0, -1, 1, 0]).unwrap();
    let t = Matrix2::new(7, true, [1, 1, 0, 1]).unwrap();
    let group = generate_group(
        &[GroupElement::Matrix(s), GroupElement::Matrix(t)],
        DEFAULT_SIZE_CAP,
    )
    .unwrap();
    let classes = group.conjugacy_classes();
    let table = character_table_dixon(&group).unwrap();
    let s_idx = group.index_of(&GroupElement::Matrix(s)).unwrap();
    let t_idx = group.index_of(&GroupElement::Matrix(t)).unwrap();
    let r_idx = group.mul_idx(s_idx, t_idx);
    let h = match h_seed {
        Some(seed) => seed as usize % group.order(),
        None => group.mul_idx(s_idx, group.inv_idx(s_idx)),
    };
    let conj = |x: usize| group.mul_idx(group.mul_idx(h, x), group.inv_idx(h));
    let class_of = |x: usize| classes.class_of[conj(x)];
    let one = CyclotomicNumber::one();
    (0..table.values.len())
        .map(|i| {
            if table.values[i].iter().all(|v| *v == one) {
                return cw_multiplicity_general(&modular_cover(7, 168), &trivial_modular_rep(7))
                    .unwrap();
            }
            let rep = Psl2zRepData {
                id: format!("row_{i}"),
                dim: table.dim(i),
                is_trivial: false,
                trace_s: table.values[i][class_of(s_idx)].clone(),
                trace_r: table.values[i][class_of(r_idx)].clone(),
                trace_rinv: table.values[i][class_of(group.inv_idx(r_idx))].clone(),
                t_profile: table.profiles[i][class_of(t_idx)].clone(),
            };
            cw_modular(&rep, 7).unwrap()
        })
        .collect()
}

#[test]
fn crit_7_property_suites() {
    // ring axioms, exact
    let mut rng = Lcg(0x5eed);
    for _ in 0..200 {
        let a = random_cyclo(&mut rng);
        let b = random_cyclo(&mut rng);
        let c = random_cyclo(&mut rng);
        let assoc_l = a.checked_add(&b).unwrap().checked_add(&c).unwrap();
        let assoc_r = a.checked_add(&b.checked_add(&c).unwrap()).unwrap();
        assert_eq!(assoc_l, assoc_r);
        let dist_l = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
        let dist_r = a
            .checked_mul(&b)
            .unwrap()
            .checked_add(&a.checked_mul(&c).unwrap())
            .unwrap();
        assert_eq!(dist_l, dist_r);
    }
    for _ in 0..100 {
        let a = random_cyclo(&mut rng);
        if a.is_zero() {
            continue;
        }
        assert_eq!(
            a.checked_mul(&a.inverse().unwrap()).unwrap(),
            CyclotomicNumber::one()
        );
    }

    // profile round-trips
    for n in 1..=20u64 {
        let counts: Vec<u64> = (0..n).map(|_| rng.below(4)).collect();
        if counts.iter().sum::<u64>() == 0 {
            continue;
        }
        let p = EigenvalueProfile::new(n, counts).unwrap();
        for s in -(2 * n as i64)..=(2 * n as i64) {
            assert_eq!(p.twist(s).twist(-s), p);
        }
        let values: Vec<CyclotomicNumber> = (0..n)
            .map(|j| p.character_on_power(j).unwrap())
            .collect();
        assert_eq!(nk_profile(&values, p.dim()).unwrap(), p);
    }

    // conjugation invariance of the multiplicities
    let baseline = psl27_multiplicities(None);
    let total: u64 = baseline.iter().sum();
    assert!(total > 0, "the level-7 cover has nonzero constituents");
    for seed in [3u64, 41, 97, 120, 166] {
        assert_eq!(psl27_multiplicities(Some(seed)), baseline);
    }

    // the trivial representation never appears over the modular base
    for e in 2..=60u64 {
        assert_eq!(
            cw_multiplicity_general(&modular_cover(e, 0), &trivial_modular_rep(e)).unwrap(),
            0,
            "cusp width {e}"
        );
    }
}
