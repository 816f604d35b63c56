//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! The process fails when a criterion fails for a reason other than a
//! documented misprint whose corrected form verifies (see `support::ERRATA`).

mod support;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use hopf16::algebra::{build_algebra, regular_dim, Presentation};
use hopf16::hopf::catalog::{catalog_get, FULL_IDS};
use hopf16::hopf::HopfSpec;
use hopf16::invariants::Surrogate;
use hopf16::linalg::SVec;
use hopf16::poly::{parse_poly, Word};
use hopf16::report::{oracle_entry, twist_check, verify_all, Entry, VerifyTableReport};
use hopf16::reptheory::{is_inner_faithful, RepHandle};
use hopf16::scalar::Scalar;
use hopf16::tables::{build, table_rows, Verdict};
use hopf16::Cyc;
use rayon::prelude::*;
use support::*;

const D: usize = 12;

enum Status {
    Pass,
    /// Failed, but every failing case is a documented misprint.
    Explained,
    Fail,
}

struct Outcome {
    status: Status,
    detail: String,
}

impl Outcome {
    fn check(ok: bool, detail: String) -> Self {
        Outcome {
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
        }
    }
}

fn hilbert_functions() -> Outcome {
    let mut seen = BTreeSet::new();
    let mut configs = Vec::new();
    for row in table_rows() {
        for c in row.configs {
            if seen.insert((c.relation.clone(), c.sigma.clone(), c.twist_from.clone(), c.extra.is_some())) {
                configs.push(c);
            }
        }
    }
    let failures: Vec<String> = configs
        .par_iter()
        .flat_map(|c| {
            let b = match build::<Cyc>(c, D) {
                Ok(b) => b,
                Err(e) => return vec![format!("{}: {e}", c.key())],
            };
            let mut algebras = vec![(c.key(), b.algebra().clone())];
            if let Some(u) = &b.untwisted {
                algebras.push((format!("{} (untwisted)", c.key()), u.algebra().clone()));
            }
            let mut bad = Vec::new();
            for (name, a) in algebras {
                let n = a.ngens();
                let expected: Vec<usize> = (0..=D)
                    .map(|d| if n == 2 { d + 1 } else { (d + 1) * (d + 2) / 2 })
                    .collect();
                if a.hilbert() != expected || (0..=D).any(|d| regular_dim(n, d) != expected[d]) {
                    bad.push(format!("{name}: {:?}", a.hilbert()));
                }
                match oracle_entry(&a) {
                    Ok(o) if o.pass => {}
                    Ok(o) => bad.push(format!("{name}: oracle {:?}", o.oracle)),
                    Err(e) => bad.push(format!("{name}: {e}")),
                }
            }
            bad
        })
        .collect();
    Outcome::check(
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} distinct algebras plus twisted bases, d <= {D}, oracle d <= 6", configs.len())
        } else {
            failures.join("; ")
        },
    )
}

fn normal_word_basis() -> Outcome {
    let mut bad = Vec::new();
    for rel in ["u^2-v^2", "u^2+v^2", "u^2-i.v^2"] {
        let p = Presentation::<Cyc>::from_strs(&['u', 'v'], &[rel]).unwrap();
        let a = build_algebra(&p, None, D).unwrap();
        for d in 0..=D {
            let mut expected = BTreeSet::new();
            for l in 0..=1usize.min(d) {
                for j in 0..=(d - l) / 2 {
                    let i = d - l - 2 * j;
                    let mut w = vec![0u8; i];
                    for _ in 0..j {
                        w.extend([1, 0]);
                    }
                    w.extend(std::iter::repeat_n(1, l));
                    expected.insert(Word(w));
                }
            }
            let got: BTreeSet<Word> = a.basis(d).iter().cloned().collect();
            if got != expected || a.basis(d).len() != expected.len() {
                bad.push(format!("{rel} d={d}"));
            }
        }
    }
    Outcome::check(bad.is_empty(), if bad.is_empty() { "c in {1, -1, i}, d <= 12".into() } else { bad.join(", ") })
}

fn faithful(spec: &HopfSpec<Cyc>, v: &RepHandle<Cyc>) -> bool {
    is_inner_faithful(spec, v).unwrap().inner_faithful
}

fn inner_faithfulness_matrix() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    let minus = z8(4);
    for id in FULL_IDS {
        let spec = catalog_get::<Cyc>(id).unwrap();
        let mut expect = |what: String, got: bool, want: bool| {
            checked += 1;
            if got != want {
                bad.push(format!("#{id} {what}: got {got}"));
            }
        };
        match id {
            12 | 13 => {
                for p in two_dims(&spec) {
                    expect(p.clone(), faithful(&spec, &rep(&spec, &p)), p != "pi2");
                }
                continue;
            }
            _ => {}
        }
        for p in two_dims(&spec) {
            let pi = rep(&spec, &p);
            expect(p.clone(), faithful(&spec, &pi), matches!(id, 5 | 7));
            for t in one_dims(&spec) {
                let want = match id {
                    1..=4 => entry(&spec, &t, 2) == minus,
                    6 | 10 | 11 => entry(&spec, &t, 1) == minus,
                    8 | 9 => {
                        let x = entry(&spec, &t, 0);
                        x == z8(2) || x == z8(-2)
                    }
                    15 if entry(&spec, &t, 2) == minus => true,
                    // not asserted elsewhere in the catalog
                    _ => continue,
                };
                expect(format!("{p}+{t}"), faithful(&spec, &pi.direct_sum(&rep(&spec, &t))), want);
            }
        }
    }
    Outcome::check(bad.is_empty(), if bad.is_empty() { format!("{checked} verdicts, 0 mismatches") } else { bad.join(", ") })
}

fn decomposition_tables() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    let mut expect = |what: String, got: Vec<String>, want: Vec<String>| {
        checked += 1;
        let want = sorted(&want);
        if got != want {
            bad.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    };
    let s = |xs: &[&str]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let m1 = z8(4);
    let p1 = z8(0);
    let sign = |k: usize| if k.is_multiple_of(2) { p1.clone() } else { m1.clone() };

    // #1..#4: squares of pi_i, and pi_i (x) T = T (x) pi_i = pi_j when z.t = -t.
    for id in 1..=4u32 {
        let spec = catalog_get::<Cyc>(id).unwrap();
        // #3 has no T_{-1,-1,1,+-1}; its uv +- vu summands carry x = y = -1, z = 1
        // and w = +-i like those of #1.
        let want = if id == 1 || id == 3 {
            s(&["T_{1,1,1,1}", "T_{1,1,1,-1}", "T_{-1,-1,1,-i}", "T_{-1,-1,1,i}"])
        } else {
            s(&["T_{1,1,1,1}", "T_{1,1,1,-1}", "T_{-1,-1,1,1}", "T_{-1,-1,1,-1}"])
        };
        for (p, q) in [("pi1", "pi2"), ("pi2", "pi1")] {
            let pi = rep(&spec, p);
            expect(format!("#{id} {p}^2"), tensor_multiset(&spec, &pi, &pi), want.clone());
            for t in one_dims(&spec) {
                if entry(&spec, &t, 2) != m1 {
                    continue;
                }
                let tt = rep(&spec, &t);
                expect(format!("#{id} {p}(x){t}"), tensor_multiset(&spec, &pi, &tt), s(&[q]));
                expect(format!("#{id} {t}(x){p}"), tensor_multiset(&spec, &tt, &pi), s(&[q]));
            }
        }
    }

    // #5, #7: z = [[0, w^b], [w^c, 0]].
    for id in [5u32, 7] {
        let spec = catalog_get::<Cyc>(id).unwrap();
        for p in two_dims(&spec) {
            let z = &spec.simple(&p).unwrap().matrices[2];
            let (b, c) = (log8(z.get(0, 1)) as i64, log8(z.get(1, 0)) as i64);
            let pi = rep(&spec, &p);
            let want = vec![
                one_dim(&[m1.clone(), p1.clone(), z8(2 * (b + 1))]),
                one_dim(&[m1.clone(), p1.clone(), z8(2 * (b + 1) + 4)]),
                one_dim(&[m1.clone(), m1.clone(), z8(2 + b + c)]),
                one_dim(&[m1.clone(), m1.clone(), z8(6 + b + c)]),
            ];
            expect(format!("#{id} {p}^2"), tensor_multiset(&spec, &pi, &pi), want);
        }
    }

    // #6, #10, #11: y = (-1)^a, z = [[0, i^c], [i^b, 0]], T = T_{e', (-1)^g, gamma}.
    for id in [6u32, 10, 11] {
        let spec = catalog_get::<Cyc>(id).unwrap();
        let pis = two_dims(&spec);
        for p in &pis {
            let m = &spec.simple(p).unwrap().matrices;
            let a = usize::from(*m[1].get(0, 0) == m1);
            let b = log8(m[2].get(1, 0)) / 2;
            let c = log8(m[2].get(0, 1)) / 2;
            let pi = rep(&spec, p);
            for t in one_dims(&spec) {
                let g = usize::from(entry(&spec, &t, 1) == m1);
                let gamma = entry(&spec, &t, 2);
                let ibc = z8(2 * (b + c) as i64);
                let partner = pis
                    .iter()
                    .find(|q| *spec.simple(q).unwrap().matrices[1].get(0, 0) == sign(a + g))
                    .unwrap();
                let mut want = vec![
                    one_dim(&[m1.clone(), p1.clone(), sign(a + b + 1)]),
                    one_dim(&[m1.clone(), p1.clone(), sign(a + b)]),
                    one_dim(&[p1.clone(), p1.clone(), sign(a) * ibc.clone()]),
                    one_dim(&[p1.clone(), p1.clone(), sign(a + 1) * ibc]),
                    one_dim(&[p1.clone(), p1.clone(), gamma.clone() * gamma]),
                ];
                want.extend([partner.clone(), partner.clone()]);
                let v = pi.direct_sum(&rep(&spec, &t));
                expect(format!("#{id} ({p}+{t})^2"), tensor_multiset(&spec, &v, &v), want);
            }
        }
    }

    // #8, #9: x = diag(i^a, -i^a), z = [[0, (-1)^b], [1, 0]], T = T_{i^c, 1, +-1}.
    for id in [8u32, 9] {
        let spec = catalog_get::<Cyc>(id).unwrap();
        let pis = two_dims(&spec);
        for p in &pis {
            let m = &spec.simple(p).unwrap().matrices;
            let a = log8(m[0].get(0, 0)) / 2;
            let b = usize::from(*m[2].get(0, 1) == m1);
            let pi = rep(&spec, p);
            for t in one_dims(&spec) {
                let c = log8(&entry(&spec, &t, 0)) / 2;
                let partner = pis
                    .iter()
                    .find(|q| log8(spec.simple(q).unwrap().matrices[0].get(0, 0)) / 2 % 2 == (a + c) % 2)
                    .unwrap();
                let mut want = vec![
                    one_dim(&[sign(a), p1.clone(), sign(a + 1)]),
                    one_dim(&[sign(a), p1.clone(), sign(a)]),
                    one_dim(&[sign(a + 1), p1.clone(), sign(a + b)]),
                    one_dim(&[sign(a + 1), p1.clone(), sign(a + b + 1)]),
                    one_dim(&[sign(c), p1.clone(), p1.clone()]),
                ];
                want.extend([partner.clone(), partner.clone()]);
                let v = pi.direct_sum(&rep(&spec, &t));
                expect(format!("#{id} ({p}+{t})^2"), tensor_multiset(&spec, &v, &v), want);
            }
        }
    }

    // Dihedral and semidihedral groups of order 16.
    let d16 = catalog_get::<Cyc>(12).unwrap();
    let sd16 = catalog_get::<Cyc>(13).unwrap();
    for p in ["pi1", "pi3"] {
        let r = rep(&d16, p);
        expect(format!("D16 {p}^2"), tensor_multiset(&d16, &r, &r), s(&["pi2", "T_{1,1}", "T_{1,-1}"]));
        let r = rep(&sd16, p);
        expect(format!("SD16 {p}^2"), tensor_multiset(&sd16, &r, &r), s(&["pi2", "T_{-1,1}", "T_{-1,-1}"]));
    }
    let r = rep(&d16, "pi2");
    expect(
        "D16 pi2^2".into(),
        tensor_multiset(&d16, &r, &r),
        s(&["T_{1,1}", "T_{1,-1}", "T_{-1,1}", "T_{-1,-1}"]),
    );
    expect(
        "SD16 pi1(x)pi3".into(),
        tensor_multiset(&sd16, &rep(&sd16, "pi1"), &rep(&sd16, "pi3")),
        s(&["pi2", "T_{1,1}", "T_{1,-1}"]),
    );

    // #15.
    let h = catalog_get::<Cyc>(15).unwrap();
    let squares = s(&["T_{1,1,1}", "T_{1,-1,1}", "T_{-1,1,1}", "T_{-1,-1,1}"]);
    for (p, q) in [("pi1", "pi2"), ("pi2", "pi1")] {
        let pi = rep(&h, p);
        expect(format!("#15 {p}^2"), tensor_multiset(&h, &pi, &pi), squares.clone());
        for t in one_dims(&h) {
            let tt = rep(&h, &t);
            let target = if entry(&h, &t, 2) == p1 { p } else { q };
            expect(format!("#15 {p}(x){t}"), tensor_multiset(&h, &pi, &tt), s(&[target]));
            expect(format!("#15 {t}(x){p}"), tensor_multiset(&h, &tt, &pi), s(&[target]));
        }
    }
    let vals = |t: &str| -> [Cyc; 3] { std::array::from_fn(|k| entry(&h, t, k)) };
    for s1 in one_dims(&h) {
        for s2 in one_dims(&h) {
            let [al, be, ga] = vals(&s1);
            let [al2, be2, ga2] = vals(&s2);
            let want = if ga == p1 {
                one_dim(&[al * al2, be * be2, ga2])
            } else {
                one_dim(&[al * be2, al2 * be, -ga2])
            };
            expect(format!("#15 {s1}(x){s2}"), tensor_multiset(&h, &rep(&h, &s1), &rep(&h, &s2)), vec![want]);
        }
    }
    Outcome::check(bad.is_empty(), if bad.is_empty() { format!("{checked} decompositions") } else { bad.join("; ") })
}

fn claims_failed(r: &VerifyTableReport) -> bool {
    !r.claims_ok || !r.degrees_match || r.error.is_some()
}

fn fixed_ring_tables(reports: &[VerifyTableReport]) -> Outcome {
    let failing: Vec<usize> = reports.iter().filter(|r| claims_failed(r)).map(|r| r.row).collect();
    if failing.is_empty() {
        return Outcome::check(true, format!("{} rows, D = {D}", reports.len()));
    }
    let unexplained: Vec<usize> = failing
        .iter()
        .copied()
        .filter(|&n| match corrected(n) {
            Some(c) => claims_failed(&verify_corrected(n, c, D)),
            None => true,
        })
        .collect();
    let degrees_ok = reports.iter().all(|r| r.degrees_match);
    let detail = format!(
        "printed generators fail on rows {failing:?}; degree multisets {}; {}",
        if degrees_ok { "all consistent" } else { "inconsistent" },
        if unexplained.is_empty() {
            "each failure is a misprint whose corrected generators verify".to_string()
        } else {
            format!("unexplained rows {unexplained:?}")
        }
    );
    Outcome {
        status: if unexplained.is_empty() { Status::Explained } else { Status::Fail },
        detail,
    }
}

fn twist_identities() -> Outcome {
    let mut bad = Vec::new();
    let mut rows = 0;
    for row in table_rows() {
        let c = row.primary();
        let Some(from) = &c.twist_from else { continue };
        rows += 1;
        let b = build::<Cyc>(c, D).unwrap();
        let tw = b.twist.as_ref().unwrap();
        let base = b.untwisted.as_ref().unwrap().algebra();
        let star = |x: &SVec<Cyc>, y: &SVec<Cyc>| tw.star(base, 1, x, 1, y).unwrap();
        let unit = |k: usize| SVec::<Cyc>::unit(k);
        let half = Cyc::from_ratio(1, 2);
        let x = unit(0).add(&unit(1)).scale(&half);
        let y = unit(0).sub(&unit(1)).scale(&half);
        // k[u,v]_J: XY + YX = 0; k_{-1}[u,v]_J: X^2 = Y^2.
        let rel = if from == "uv-vu" {
            star(&x, &y).add(&star(&y, &x))
        } else {
            star(&x, &x).sub(&star(&y, &y))
        };
        if !rel.is_zero() {
            bad.push(format!("{}: relation", c.key()));
        }
        if c.hopf == 12 {
            // twice the products u*u, u*v, v*u, v*v
            let formulas: [&str; 4] = if from == "uv-vu" {
                ["u^2+v^2", "2uv-i.u^2+i.v^2", "2uv+i.u^2-i.v^2", "u^2+v^2"]
            } else {
                ["u^2+v^2-2i.uv", "-i.u^2+i.v^2", "i.u^2-i.v^2", "u^2+v^2+2i.uv"]
            };
            for (k, f) in formulas.iter().enumerate() {
                let want = base.elem(&parse_poly::<Cyc>(f, &['u', 'v']).unwrap()).unwrap().vec;
                let got = star(&unit(k / 2), &unit(k % 2)).scale(&Cyc::from_ratio(2, 1));
                if got != want {
                    bad.push(format!("{}: product {k}", c.key()));
                }
            }
        }
        let t = twist_check(&b, D).unwrap();
        if !t.mismatched_degrees.is_empty() || t.dims != t.twisted_dims {
            bad.push(format!("{}: invariant dims differ in {:?}", c.key(), t.mismatched_degrees));
        }
    }
    Outcome::check(
        bad.is_empty() && rows == 4,
        if bad.is_empty() { format!("{rows} twisted rows, dims agree d <= {D}") } else { bad.join(", ") },
    )
}

fn conjecture_audit(reports: &[VerifyTableReport]) -> Outcome {
    let rows: BTreeMap<usize, Verdict> = table_rows().iter().map(|r| (r.number, r.verdict)).collect();
    let not_regular = Surrogate::NotRegular.to_string();
    let mut audited = 0;
    let mut bad = Vec::new();
    for r in reports {
        match rows[&r.row] {
            Verdict::Regular => {
                audited += 1;
                if r.degree_product != 16 {
                    bad.push(format!("row {} product {}", r.row, r.degree_product));
                }
            }
            Verdict::NotRegular => {
                audited += 1;
                if r.surrogate != not_regular {
                    bad.push(format!("row {} surrogate {}", r.row, r.surrogate));
                }
            }
            Verdict::Unstated => {}
        }
    }
    Outcome::check(bad.is_empty(), if bad.is_empty() { format!("{audited} rows, 0 exceptions") } else { bad.join(", ") })
}

fn property_suites() -> Outcome {
    let mut bad = Vec::new();
    let suites = properties::suites();
    for (name, f) in &suites {
        if let Err(e) = f() {
            bad.push(format!("{name}: {e}"));
        }
    }
    Outcome::check(bad.is_empty(), if bad.is_empty() { format!("{} suites", suites.len()) } else { bad.join("; ") })
}

fn main() {
    let verify: Vec<VerifyTableReport> = verify_all::<Cyc>(D)
        .into_iter()
        .filter_map(|e| match e {
            Entry::VerifyTable(r) => Some(r),
            _ => None,
        })
        .collect();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("Hilbert functions", Box::new(hilbert_functions)),
        ("normal-word basis of u^2 - c v^2", Box::new(normal_word_basis)),
        ("inner-faithfulness matrix", Box::new(inner_faithfulness_matrix)),
        ("tensor decomposition tables", Box::new(decomposition_tables)),
        ("fixed-ring tables", Box::new(|| fixed_ring_tables(&verify))),
        ("twist identities", Box::new(twist_identities)),
        ("conjecture audit", Box::new(|| conjecture_audit(&verify))),
        ("property suites", Box::new(property_suites)),
    ];
    let mut unexplained = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let tag = match o.status {
            Status::Pass => "PASS",
            Status::Explained | Status::Fail => "FAIL",
        };
        if matches!(o.status, Status::Fail) {
            unexplained += 1;
        }
        println!(
            "criterion {} {name}: {tag} ({}) [{:.1}s]",
            k + 1,
            o.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if unexplained > 0 {
        std::process::exit(1);
    }
}
