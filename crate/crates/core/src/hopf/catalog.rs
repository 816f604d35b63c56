//! The sixteen-dimensional semisimple Hopf algebras, by catalog number.
//!
//! Ids 14 and 16 are stubs: their presentations are not carried here.

use serde::{Deserialize, Serialize};

use super::{CoproductTerm, HopfGen, HopfSpec, SimpleRep, TwistSpec};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{parse_poly, parse_scalar, Poly, Word};
use crate::scalar::{CyclotomicField, Scalar};
use crate::twist::{FiniteGroup, TwistElement};

/// Ids with complete data.
pub const FULL_IDS: [u32; 14] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15];

pub fn catalog_get<F: CyclotomicField>(id: u32) -> Result<HopfSpec<F>> {
    match id {
        1..=4 => Ok(family_1234(id)),
        5..=11 => Ok(family_5_11(id)),
        12 | 13 => Ok(group_d16(id)),
        15 => Ok(quaternion_15()),
        14 => Ok(external(14, "A_16", "presentation not included in this catalog")),
        16 => Ok(external(16, "B_16", "presentation not included in this catalog")),
        _ => Err(Error::UnknownHopf(id)),
    }
}

pub fn catalog_all<F: CyclotomicField>() -> Vec<HopfSpec<F>> {
    (1..=16).map(|id| catalog_get(id).expect("ids 1..=16")).collect()
}

fn external<F: CyclotomicField>(id: u32, name: &str, notes: &str) -> HopfSpec<F> {
    HopfSpec {
        id,
        name: name.into(),
        external: true,
        notes: notes.into(),
        gens: Vec::new(),
        relations: Vec::new(),
        coproducts: Vec::new(),
        counit: Vec::new(),
        grouplikes: Vec::new(),
        simples: Vec::new(),
        twist: None,
    }
}

fn c<F: Scalar>(s: &str) -> F {
    parse_scalar(s).expect("catalog scalar")
}

fn m2<F: Scalar>(a: &str, b: &str, cc: &str, d: &str) -> Matrix<F> {
    Matrix::from_rows(vec![vec![c(a), c(b)], vec![c(cc), c(d)]])
}

fn m1<F: Scalar>(x: F) -> Matrix<F> {
    Matrix::from_rows(vec![vec![x]])
}

fn gens(names: &str, grouplike: &str) -> Vec<HopfGen> {
    names
        .chars()
        .map(|n| HopfGen {
            name: n,
            grouplike: grouplike.contains(n),
        })
        .collect()
}

fn word(names: &[char], s: &str) -> Word {
    if s == "1" {
        return Word::empty();
    }
    Word(
        s.chars()
            .filter(|ch| !ch.is_whitespace())
            .map(|ch| names.iter().position(|&n| n == ch).expect("catalog letter") as u8)
            .collect(),
    )
}

fn term<F: Scalar>(names: &[char], coeff: &str, l: &str, r: &str) -> CoproductTerm<F> {
    CoproductTerm {
        coeff: c(coeff),
        left: word(names, l),
        right: word(names, r),
    }
}

fn grouplike_term<F: Scalar>(g: usize) -> Vec<CoproductTerm<F>> {
    vec![CoproductTerm {
        coeff: F::one(),
        left: Word::letter(g as u8),
        right: Word::letter(g as u8),
    }]
}

fn one_dim<F: CyclotomicField>(vals: Vec<F>) -> SimpleRep<F> {
    let label = vals.iter().map(|v| v.unit_label()).collect::<Vec<_>>().join(",");
    SimpleRep {
        label: format!("T_{{{label}}}"),
        matrices: vals.into_iter().map(m1).collect(),
    }
}

fn two_dim<F: Scalar>(label: &str, mats: Vec<Matrix<F>>) -> SimpleRep<F> {
    SimpleRep {
        label: label.into(),
        matrices: mats,
    }
}

fn sign<F: Scalar>(e: u32) -> F {
    if e.is_multiple_of(2) {
        F::one()
    } else {
        -F::one()
    }
}

fn relations<F: Scalar>(names: &[char], rels: &[&str]) -> Vec<Poly<F>> {
    rels.iter()
        .map(|r| parse_poly(r, names).expect("catalog relation"))
        .collect()
}

/// Grouplikes `x^a y^b z^c`; `w` satisfies `wx = yw`, `wy = xw`, `wz = zw`.
fn family_1234<F: CyclotomicField>(id: u32) -> HopfSpec<F> {
    let names = ['x', 'y', 'z', 'w'];
    let square = match id {
        1 => "w^2 - (1 + x + y - x y)/2",
        2 => "w^2 - 1",
        3 => "w^2 - (1 + x + y - x y) z/2",
        _ => "w^2 - z",
    };
    let rels = relations(
        &names,
        &[
            "x^2 - 1", "y^2 - 1", "z^2 - 1", "x y - y x", "x z - z x", "y z - z y",
            "w x - y w", "w y - x w", "w z - z w", square,
        ],
    );
    let dw: Vec<CoproductTerm<F>> = if id == 2 || id == 4 {
        vec![
            term(&names, "1/2", "w", "w"),
            term(&names, "1/2", "w", "xyw"),
            term(&names, "1/2", "zw", "w"),
            term(&names, "-1/2", "zw", "xyw"),
        ]
    } else {
        let mut out = Vec::new();
        for b in 0..2u32 {
            for cc in 0..2u32 {
                for al in 0..2u32 {
                    for be in 0..2u32 {
                        let mut l = "y".repeat(b as usize);
                        l.push_str(&"z".repeat(cc as usize));
                        l.push('w');
                        let mut r = "x".repeat(al as usize);
                        r.push_str(&"y".repeat(be as usize));
                        r.push('w');
                        let s = if (b * al + b * be + cc * be) % 2 == 0 { "1/4" } else { "-1/4" };
                        out.push(term(&names, s, &l, &r));
                    }
                }
            }
        }
        out
    };
    let i: F = F::imag();
    let mut simples = Vec::new();
    for a in 0..2u32 {
        for b in 0..2u32 {
            for cc in 0..2u32 {
                let gamma = match id {
                    1 => sign::<F>(cc) * ipow(&i, a),
                    2 => sign(cc),
                    3 => sign::<F>(cc) * ipow(&i, a + b),
                    _ => sign::<F>(cc) * ipow(&i, b),
                };
                simples.push(one_dim(vec![sign(a), sign(a), sign(b), gamma]));
            }
        }
    }
    let (x, y) = (m2("1", "0", "0", "-1"), m2("-1", "0", "0", "1"));
    simples.push(two_dim(
        "pi1",
        vec![x.clone(), y.clone(), m2("1", "0", "0", "1"), m2("0", "1", "1", "0")],
    ));
    let w2 = if id <= 2 { m2("0", "1", "1", "0") } else { m2("0", "i", "i", "0") };
    simples.push(two_dim("pi2", vec![x, y, m2("-1", "0", "0", "-1"), w2]));
    let mut grouplikes = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            for cc in 0..2 {
                grouplikes.push(Word(
                    [(0u8, a), (1, b), (2, cc)]
                        .iter()
                        .filter(|(_, e)| *e == 1)
                        .map(|(g, _)| *g)
                        .collect(),
                ));
            }
        }
    }
    grouplikes.sort();
    HopfSpec {
        id,
        name: format!("H_{id}"),
        external: false,
        notes: "grouplikes C2^3 generated by x, y, z; one non-grouplike w".into(),
        gens: gens("xyzw", "xyz"),
        relations: rels,
        coproducts: vec![grouplike_term(0), grouplike_term(1), grouplike_term(2), dw],
        counit: vec![F::one(); 4],
        grouplikes,
        simples,
        twist: None,
    }
}

fn ipow<F: Scalar>(i: &F, e: u32) -> F {
    (0..e).fold(F::one(), |acc, _| acc * i.clone())
}

/// Grouplikes `x^a y^b` (`x^4 = y^2 = 1`) and one non-grouplike `z` with
/// `Delta(z) = 1/2 (1(x)1 + y(x)1 + 1(x)x^2 - y(x)x^2)(z(x)z)`.
fn family_5_11<F: CyclotomicField>(id: u32) -> HopfSpec<F> {
    let names = ['x', 'y', 'z'];
    let rows: [&str; 3] = match id {
        5 => ["z x - x z", "z y - x^2 y z", "z^2 - (1+i)/2 - (1-i)/2 x^2"],
        7 => ["z x - x z", "z y - x^2 y z", "z^2 - (1+i)/2 x - (1-i)/2 x^3"],
        6 => ["z x - x^3 z", "z y - y z", "z^2 - 1"],
        10 => ["z x - x^3 z", "z y - y z", "z^2 - y"],
        11 => ["z x - x^3 z", "z y - y z", "z^2 - x^2 y"],
        8 => ["z x - x y z", "z y - y z", "z^2 - 1"],
        _ => ["z x - x y z", "z y - y z", "z^2 - y"],
    };
    let mut rel_src = vec!["x^4 - 1", "y^2 - 1", "x y - y x"];
    rel_src.extend(rows);
    let dz = vec![
        term(&names, "1/2", "z", "z"),
        term(&names, "1/2", "yz", "z"),
        term(&names, "1/2", "z", "xxz"),
        term(&names, "-1/2", "yz", "xxz"),
    ];
    let i: F = F::imag();
    let mut simples = Vec::new();
    match id {
        5 => {
            for a in 0..2 {
                for b in 0..2 {
                    for cc in 0..2 {
                        simples.push(one_dim(vec![sign(a), sign(b), sign(cc)]));
                    }
                }
            }
            let y = m2("1", "0", "0", "-1");
            let z = m2("0", "z", "z", "0");
            simples.push(two_dim("pi1", vec![m2("i", "0", "0", "i"), y.clone(), z.clone()]));
            simples.push(two_dim("pi2", vec![m2("-i", "0", "0", "-i"), y, z]));
        }
        7 => {
            for b in 0..2 {
                for cc in 0..2 {
                    simples.push(one_dim(vec![F::one(), sign(b), sign(cc)]));
                }
            }
            for b in 0..2 {
                for cc in 0..2 {
                    simples.push(one_dim(vec![-F::one(), sign(b), sign::<F>(cc) * i.clone()]));
                }
            }
            let y = m2("1", "0", "0", "-1");
            simples.push(two_dim("pi1", vec![m2("i", "0", "0", "i"), y.clone(), m2("0", "1", "-1", "0")]));
            simples.push(two_dim("pi2", vec![m2("-i", "0", "0", "-i"), y, m2("0", "1", "1", "0")]));
        }
        6 | 10 | 11 => {
            let eps = u32::from(id != 6);
            for e in 0..2 {
                for g in 0..2 {
                    for f in 0..2 {
                        simples.push(one_dim(vec![sign(e), sign(g), ipow(&i, 2 * f + eps * g)]));
                    }
                }
            }
            let x = m2("i", "0", "0", "-i");
            let (z1, z2) = match id {
                6 => (m2("0", "1", "1", "0"), m2("0", "1", "1", "0")),
                10 => (m2("0", "1", "1", "0"), m2("0", "i", "i", "0")),
                _ => (m2("0", "-1", "1", "0"), m2("0", "-i", "i", "0")),
            };
            simples.push(two_dim("pi1", vec![x.clone(), m2("1", "0", "0", "1"), z1]));
            simples.push(two_dim("pi2", vec![x, m2("-1", "0", "0", "-1"), z2]));
        }
        _ => {
            for cc in 0..4 {
                for d in 0..2 {
                    simples.push(one_dim(vec![ipow(&i, cc), F::one(), sign(d)]));
                }
            }
            let y = m2("-1", "0", "0", "-1");
            let z = if id == 8 { m2("0", "1", "1", "0") } else { m2("0", "-1", "1", "0") };
            simples.push(two_dim("pi1", vec![m2("i", "0", "0", "-i"), y.clone(), z.clone()]));
            simples.push(two_dim("pi2", vec![m2("1", "0", "0", "-1"), y, z]));
        }
    }
    let mut grouplikes = Vec::new();
    for b in 0..2 {
        for a in 0..4 {
            let mut w = vec![0u8; a];
            w.extend(std::iter::repeat_n(1u8, b));
            grouplikes.push(Word(w));
        }
    }
    grouplikes.sort();
    HopfSpec {
        id,
        name: format!("H_{id}"),
        external: false,
        notes: "grouplikes C4 x C2 generated by x, y; one non-grouplike z".into(),
        gens: gens("xyz", "xy"),
        relations: relations(&names, &rel_src),
        coproducts: vec![grouplike_term(0), grouplike_term(1), dz],
        counit: vec![F::one(); 3],
        grouplikes,
        simples,
        twist: None,
    }
}

/// The group algebras of `D16` (`ba = a^7 b`) and `SD16` (`ba = a^3 b`),
/// with the cotwist `J` supported on `{1, a^4, b, a^4 b}`.
fn group_d16<F: CyclotomicField>(id: u32) -> HopfSpec<F> {
    let names = ['a', 'b'];
    let conj = if id == 12 { "b a - a^7 b" } else { "b a - a^3 b" };
    let mut simples = Vec::new();
    for s in 0..2 {
        for t in 0..2 {
            simples.push(one_dim(vec![sign(s), sign(t)]));
        }
    }
    let swap = m2("0", "1", "1", "0");
    let diag = |p: i64, q: i64| {
        Matrix::diag(vec![F::zeta(p), F::zeta(q)])
    };
    let exps: [(i64, i64); 3] = if id == 12 {
        [(1, 7), (2, 6), (3, 5)]
    } else {
        [(1, 3), (2, 6), (7, 5)]
    };
    for (k, (p, q)) in exps.iter().enumerate() {
        simples.push(two_dim(&format!("pi{}", k + 1), vec![diag(*p, *q), swap.clone()]));
    }
    let mut grouplikes = Vec::new();
    for b in 0..2 {
        for a in 0..8 {
            let mut w = vec![0u8; a];
            w.extend(std::iter::repeat_n(1u8, b));
            grouplikes.push(Word(w));
        }
    }
    grouplikes.sort();
    let elements = vec![
        Word::empty(),
        word(&names, "aaaa"),
        word(&names, "b"),
        word(&names, "aaaab"),
    ];
    HopfSpec {
        id,
        name: if id == 12 { "kD16 cotwisted by J" } else { "kSD16 cotwisted by J" }.into(),
        external: false,
        notes: "stored as the group algebra; the Hopf algebra is its cotwist by J".into(),
        gens: gens("ab", "ab"),
        relations: relations(&names, &["a^8 - 1", "b^2 - 1", conj]),
        coproducts: vec![grouplike_term(0), grouplike_term(1)],
        counit: vec![F::one(); 2],
        grouplikes,
        simples,
        twist: Some(TwistSpec {
            elements,
            omega: cotwist_j(),
        }),
    }
}

/// `J = sum_{s,t} J(s,t) delta_s (x) delta_t` on the Klein group
/// `{1, c, b, cb}` with `c = a^4`.
pub fn cotwist_j<F: CyclotomicField>() -> TwistElement<F> {
    let group = FiniteGroup::klein("c", "b");
    let q = |s: [i64; 4]| -> Vec<F> { s.iter().map(|&e| F::from_ratio(e, 4)).collect() };
    let idem = vec![
        q([1, 1, 1, 1]),
        q([1, 1, -1, -1]),
        q([1, -1, 1, -1]),
        q([1, -1, -1, 1]),
    ];
    let i = F::imag();
    let one = F::one();
    let table = vec![
        vec![one.clone(), one.clone(), one.clone(), one.clone()],
        vec![one.clone(), one.clone(), i.clone(), -i.clone()],
        vec![one.clone(), -i.clone(), one.clone(), i.clone()],
        vec![one.clone(), i.clone(), -i.clone(), one],
    ];
    TwistElement::from_idempotents(group, &idem, &table)
}

/// Algebra `kQ8 (x) kC2`: `a`, `b` non-grouplike, `g` grouplike and central.
fn quaternion_15<F: CyclotomicField>() -> HopfSpec<F> {
    let names = ['a', 'b', 'g'];
    let rels = relations(
        &names,
        &["a^4 - 1", "b^2 - a^2", "b a - a^3 b", "g^2 - 1", "g a - a g", "g b - b g"],
    );
    let da = vec![
        term(&names, "1/2", "a", "a"),
        term(&names, "1/2", "ag", "a"),
        term(&names, "1/2", "a", "b"),
        term(&names, "-1/2", "ag", "b"),
    ];
    let db = vec![
        term(&names, "1/2", "b", "b"),
        term(&names, "1/2", "bg", "b"),
        term(&names, "1/2", "b", "a"),
        term(&names, "-1/2", "bg", "a"),
    ];
    let mut simples = Vec::new();
    for s in 0..2 {
        for t in 0..2 {
            for u in 0..2 {
                simples.push(one_dim(vec![sign(s), sign(t), sign(u)]));
            }
        }
    }
    let (a, b) = (m2("0", "i", "i", "0"), m2("0", "-1", "1", "0"));
    simples.push(two_dim("pi1", vec![a.clone(), b.clone(), m2("1", "0", "0", "1")]));
    simples.push(two_dim("pi2", vec![a, b, m2("-1", "0", "0", "-1")]));
    let mut grouplikes: Vec<Word> = ["1", "g", "aa", "aag"].iter().map(|s| word(&names, s)).collect();
    grouplikes.sort();
    HopfSpec {
        id: 15,
        name: "H_15".into(),
        external: false,
        notes: "algebra kQ8 (x) kC2; grouplikes {1, g, a^2, a^2 g}".into(),
        gens: gens("abg", "g"),
        relations: rels,
        coproducts: vec![da, db, grouplike_term(2)],
        counit: vec![F::one(); 3],
        grouplikes,
        simples,
        twist: None,
    }
}

/// Catalog data file: scalars and words in the text syntax.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogFile {
    pub hopf: Vec<HopfEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HopfEntry {
    pub id: u32,
    pub name: String,
    pub external: bool,
    pub notes: String,
    pub generators: String,
    pub grouplike: String,
    /// Each relation as `[coefficient, word]` pairs.
    pub relations: Vec<Vec<[String; 2]>>,
    /// Per generator, `[coefficient, left, right]` triples.
    pub coproducts: Vec<Vec<[String; 3]>>,
    pub counit: Vec<String>,
    pub grouplikes: Vec<String>,
    pub simples: Vec<SimpleEntry>,
    pub twist: Option<TwistEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimpleEntry {
    pub label: String,
    /// One row-major matrix per generator.
    pub matrices: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwistEntry {
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub elements: Vec<String>,
    /// `[g1, g2, coefficient]`, group elements by index.
    pub omega: Vec<(usize, usize, String)>,
}

fn plain_word(names: &[char], w: &Word) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.letters().iter().map(|&g| names[g as usize]).collect()
    }
}

impl<F: CyclotomicField> HopfSpec<F> {
    pub fn to_entry(&self) -> HopfEntry {
        let names = self.names();
        let pw = |w: &Word| plain_word(&names, w);
        HopfEntry {
            id: self.id,
            name: self.name.clone(),
            external: self.external,
            notes: self.notes.clone(),
            generators: names.iter().collect(),
            grouplike: self.gens.iter().filter(|g| g.grouplike).map(|g| g.name).collect(),
            relations: self
                .relations
                .iter()
                .map(|r| r.terms().map(|(w, c)| [c.to_string(), pw(w)]).collect())
                .collect(),
            coproducts: self
                .coproducts
                .iter()
                .map(|d| {
                    d.iter()
                        .map(|t| [t.coeff.to_string(), pw(&t.left), pw(&t.right)])
                        .collect()
                })
                .collect(),
            counit: self.counit.iter().map(|e| e.to_string()).collect(),
            grouplikes: self.grouplikes.iter().map(pw).collect(),
            simples: self
                .simples
                .iter()
                .map(|s| SimpleEntry {
                    label: s.label.clone(),
                    matrices: s
                        .matrices
                        .iter()
                        .map(|m| {
                            (0..m.nrows())
                                .map(|r| m.row(r).iter().map(|x| x.to_string()).collect())
                                .collect()
                        })
                        .collect(),
                })
                .collect(),
            twist: self.twist.as_ref().map(|t| {
                let g = t.omega.group();
                TwistEntry {
                    labels: g.labels().to_vec(),
                    table: (0..g.order())
                        .map(|a| (0..g.order()).map(|b| g.mul(a, b)).collect())
                        .collect(),
                    elements: t.elements.iter().map(pw).collect(),
                    omega: t.omega.terms().map(|(a, b, c)| (a, b, c.to_string())).collect(),
                }
            }),
        }
    }

    pub fn from_entry(e: &HopfEntry) -> Result<Self> {
        let names: Vec<char> = e.generators.chars().collect();
        let sc = |s: &str| parse_scalar::<F>(s);
        let wd = |s: &str| -> Result<Word> {
            if s == "1" {
                return Ok(Word::empty());
            }
            s.chars()
                .map(|ch| {
                    names
                        .iter()
                        .position(|&n| n == ch)
                        .map(|g| g as u8)
                        .ok_or_else(|| Error::Format(format!("unknown letter '{ch}' in #{}", e.id)))
                })
                .collect::<Result<Vec<u8>>>()
                .map(Word)
        };
        let mut relations = Vec::new();
        for r in &e.relations {
            let mut p = Poly::zero();
            for [cs, ws] in r {
                p.add_term(wd(ws)?, &sc(cs)?);
            }
            relations.push(p);
        }
        let mut coproducts = Vec::new();
        for d in &e.coproducts {
            let mut terms = Vec::new();
            for [cs, l, r] in d {
                terms.push(CoproductTerm {
                    coeff: sc(cs)?,
                    left: wd(l)?,
                    right: wd(r)?,
                });
            }
            coproducts.push(terms);
        }
        let mut simples = Vec::new();
        for s in &e.simples {
            let mut mats = Vec::new();
            for m in &s.matrices {
                let rows = m
                    .iter()
                    .map(|row| row.iter().map(|x| sc(x)).collect::<Result<Vec<F>>>())
                    .collect::<Result<Vec<_>>>()?;
                mats.push(Matrix::from_rows(rows));
            }
            simples.push(SimpleRep {
                label: s.label.clone(),
                matrices: mats,
            });
        }
        let twist = match &e.twist {
            None => None,
            Some(t) => {
                let group = FiniteGroup::new(t.labels.clone(), t.table.clone())?;
                let terms = t
                    .omega
                    .iter()
                    .map(|(a, b, cs)| Ok((*a, *b, sc(cs)?)))
                    .collect::<Result<Vec<_>>>()?;
                Some(TwistSpec {
                    elements: t.elements.iter().map(|s| wd(s)).collect::<Result<_>>()?,
                    omega: TwistElement::from_terms(group, &terms),
                })
            }
        };
        Ok(HopfSpec {
            id: e.id,
            name: e.name.clone(),
            external: e.external,
            notes: e.notes.clone(),
            gens: names
                .iter()
                .map(|&n| HopfGen {
                    name: n,
                    grouplike: e.grouplike.contains(n),
                })
                .collect(),
            relations,
            coproducts,
            counit: e.counit.iter().map(|s| sc(s)).collect::<Result<_>>()?,
            grouplikes: e.grouplikes.iter().map(|s| wd(s)).collect::<Result<_>>()?,
            simples,
            twist,
        })
    }
}

pub fn catalog_to_toml<F: CyclotomicField>(specs: &[HopfSpec<F>]) -> Result<String> {
    let file = CatalogFile {
        hopf: specs.iter().map(HopfSpec::to_entry).collect(),
    };
    toml::to_string(&file).map_err(|e| Error::Format(e.to_string()))
}

pub fn catalog_from_toml<F: CyclotomicField>(src: &str) -> Result<Vec<HopfSpec<F>>> {
    let file: CatalogFile = toml::from_str(src).map_err(|e| Error::Format(e.to_string()))?;
    file.hopf.iter().map(HopfSpec::from_entry).collect()
}
