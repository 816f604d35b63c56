//! Shared fixtures for the integration targets.
#![allow(dead_code)]

use hopf16::hopf::HopfSpec;
use hopf16::report::{verify_table, VerifyTableReport};
use hopf16::reptheory::{decompose, RepHandle};
use hopf16::scalar::CyclotomicField;
use hopf16::tables::{table_rows, TableRow};
use hopf16::Cyc;

/// Rows whose printed generators are not invariant, with the generating
/// sets the computation supports instead.
///
/// - `#3`/`#4` with `u^2 -+ v^2`: the signs of `(uv)^2 +- (vu)^2` are
///   exchanged. `#3` shares its coproduct and two-dimensional modules with
///   `#1` (likewise `#4` with `#2`), and `w.(uv)^2 = (vu)^2` there.
/// - `#7` with `uv - i vu`: the cubic generator is `u^2v^2(u^4 - v^4)`.
/// - `#12` with `X^2 - Y^2`: the printed degree-ten element has odd
///   `Y`-degree, so `b` negates it; the invariant is the image of
///   `uv(u^8 - v^8)/16`.
pub const ERRATA: &[(usize, &[&str])] = &[
    (8, &["u^2", "(uv)^2-(vu)^2", "((uv)^2+(vu)^2)t^2", "t^4"]),
    (
        9,
        &["u^4", "(uv)^2-(vu)^2", "((uv)^2+(vu)^2)t^2", "u^2((uv)^2+(vu)^2)", "u^2t^2", "t^4"],
    ),
    (11, &["u^2", "(uv)^2+(vu)^2", "((uv)^2-(vu)^2)t^2", "t^4"]),
    (
        12,
        &["u^4", "(uv)^2+(vu)^2", "u^2((uv)^2-(vu)^2)", "((uv)^2-(vu)^2)t^2", "u^2t^2", "t^4"],
    ),
    (15, &["u^4v^4", "u^4+v^4", "u^2v^2(u^4-v^4)"]),
    (
        46,
        &[
            "2X^4+(XY)^2+(YX)^2",
            "14X^8+(XY)^4+(YX)^4",
            "6X^7YXY-6X^6YXYX-X^3(YX)^3Y+X^2(YX)^4",
        ],
    ),
];

pub fn row(number: usize) -> TableRow {
    table_rows()
        .into_iter()
        .find(|r| r.number == number)
        .expect("table row")
}

/// Verify a row's primary configuration with its claims replaced.
pub fn verify_corrected(number: usize, claims: &[&str], bound: usize) -> VerifyTableReport {
    let r = row(number);
    let mut config = r.primary().clone();
    config.claimed = claims.iter().map(|s| s.to_string()).collect();
    verify_table::<Cyc>(&r, &config, bound)
}

pub fn corrected(number: usize) -> Option<&'static [&'static str]> {
    ERRATA.iter().find(|(n, _)| *n == number).map(|(_, c)| *c)
}

/// `k` with `x = zeta_8^k`.
pub fn log8(x: &Cyc) -> usize {
    (0..8).find(|&k| Cyc::zeta(k as i64) == *x).expect("root of unity")
}

/// `zeta_8^k` for a possibly negative exponent.
pub fn z8(k: i64) -> Cyc {
    Cyc::zeta(k.rem_euclid(8))
}

/// Catalog label of the one-dimensional module with these generator values.
pub fn one_dim(values: &[Cyc]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.unit_label()).collect();
    format!("T_{{{}}}", parts.join(","))
}

pub fn entry(spec: &HopfSpec<Cyc>, label: &str, h: usize) -> Cyc {
    spec.simple(label).unwrap().matrices[h].get(0, 0).clone()
}

pub fn rep(spec: &HopfSpec<Cyc>, label: &str) -> RepHandle<Cyc> {
    RepHandle::from_simple(spec.simple(label).unwrap())
}

pub fn two_dims(spec: &HopfSpec<Cyc>) -> Vec<String> {
    spec.simples.iter().filter(|s| s.dim() == 2).map(|s| s.label.clone()).collect()
}

pub fn one_dims(spec: &HopfSpec<Cyc>) -> Vec<String> {
    spec.simples.iter().filter(|s| s.dim() == 1).map(|s| s.label.clone()).collect()
}

/// Sorted label multiset of a module.
pub fn multiset(spec: &HopfSpec<Cyc>, v: &RepHandle<Cyc>) -> Vec<String> {
    decompose(spec, v).unwrap().multiset()
}

pub fn tensor_multiset(spec: &HopfSpec<Cyc>, a: &RepHandle<Cyc>, b: &RepHandle<Cyc>) -> Vec<String> {
    multiset(spec, &RepHandle::tensor(spec, a, b).unwrap())
}

pub fn sorted(v: &[String]) -> Vec<String> {
    let mut v = v.to_vec();
    v.sort();
    v
}
