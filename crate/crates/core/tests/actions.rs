//! Module-algebra checks, including deliberately broken actions.

use std::sync::Arc;

use hopf16::algebra::{build_algebra, OreData, Presentation};
use hopf16::hopf::catalog::catalog_get;
use hopf16::hopf::{check_module_algebra, ActionAssignment, HopfSpec, ViolationKind};
use hopf16::linalg::Matrix;
use hopf16::poly::parse_poly;
use hopf16::Cyc;

fn spec(id: u32) -> HopfSpec<Cyc> {
    catalog_get(id).unwrap()
}

fn plane(rel: &str) -> Presentation<Cyc> {
    Presentation::from_strs(&['u', 'v'], &[rel]).unwrap()
}

fn kinds(h: &HopfSpec<Cyc>, rel: &str, ore: Option<&OreData<Cyc>>, mats: &[Matrix<Cyc>]) -> Vec<ViolationKind> {
    check_module_algebra(h, &plane(rel), ore, mats)
        .violations
        .into_iter()
        .map(|v| v.kind)
        .collect()
}

fn c(s: &str) -> Cyc {
    hopf16::poly::parse_scalar(s).unwrap()
}

#[test]
fn quantum_plane_actions_hold() {
    let h = spec(5);
    for p in ["pi1", "pi2"] {
        let mats = h.simple(p).unwrap().matrices.clone();
        assert!(kinds(&h, "uv-i.vu", None, &mats).is_empty(), "{p}");
    }
}

#[test]
fn perturbed_matrix_breaks_a_hopf_relation() {
    let h = spec(2);
    let mut mats = h.simple("pi1").unwrap().matrices.clone();
    // w = [[0, 1], [1, 0]] becomes [[0, 2], [1, 0]]
    mats[3] = Matrix::from_rows(vec![vec![c("0"), c("2")], vec![c("1"), c("0")]]);
    assert!(kinds(&h, "u^2-v^2", None, &mats).contains(&ViolationKind::HopfRelation));
}

#[test]
fn wrong_relation_is_not_stable() {
    // pi2 (x) pi2 for #15 contains u^2 +- i v^2 and uv -+ i vu only
    let h = spec(15);
    let mats = h.simple("pi2").unwrap().matrices.clone();
    assert!(kinds(&h, "u^2+i.v^2", None, &mats).is_empty());
    assert!(kinds(&h, "u^2-v^2", None, &mats).contains(&ViolationKind::RelationSpan));
    assert!(kinds(&h, "uv-vu", None, &mats).contains(&ViolationKind::RelationSpan));
    // #5 does not act on the commutative plane
    let h = spec(5);
    let mats = h.simple("pi1").unwrap().matrices.clone();
    assert!(kinds(&h, "uv-vu", None, &mats).contains(&ViolationKind::RelationSpan));
}

#[test]
fn non_automorphism_is_rejected_as_ore_data() {
    let h = spec(2);
    let pi = h.simple("pi1").unwrap();
    let t = h.simple("T_{1,1,-1,1}").unwrap();
    let mats: Vec<Matrix<Cyc>> = pi.matrices.iter().zip(&t.matrices).map(|(a, b)| a.direct_sum(b)).collect();
    let good = OreData::new(Matrix::diag(vec![c("1"), c("-1")]));
    assert!(kinds(&h, "u^2-v^2", Some(&good), &mats).is_empty());
    let bad = OreData::new(Matrix::diag(vec![c("1"), c("2")]));
    assert!(kinds(&h, "u^2-v^2", Some(&bad), &mats).contains(&ViolationKind::Ore));
}

#[test]
fn action_on_the_quantum_plane_by_hand() {
    // #5 through pi1: x = i, y = diag(1, -1), z = [[0, w], [w, 0]]
    let h = Arc::new(spec(5));
    let a = Arc::new(build_algebra(&plane("uv-i.vu"), None, 4).unwrap());
    let act = ActionAssignment::new(h, a, spec(5).simple("pi1").unwrap().matrices.clone()).unwrap();
    let p = |s: &str| parse_poly::<Cyc>(s, &['u', 'v']).unwrap();
    assert_eq!(act.act("x", &p("u")).unwrap(), p("i.u"));
    assert_eq!(act.act("y", &p("uv")).unwrap(), p("-uv"));
    assert_eq!(act.act("x", &p("u^2v^2")).unwrap(), p("u^2v^2"));
    assert_eq!(act.act("z", &p("u^4-v^4")).unwrap(), p("u^4-v^4"));
}
