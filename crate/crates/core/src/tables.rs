//! The fixed-ring tables: every (Hopf algebra, module, relation) row with
//! its claimed invariant generators, and the machinery to build the action.
//!
//! Keys have the form `K<id>/<rep>[+<one-dim>][/J]/r=<relation>`, for
//! example `K5/pi1/r=uv-i.vu` or `K15/pi1+T_{1,-1,-1}/r=uv+vu`.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{build_algebra, AlgebraHandle, OreData, Presentation};
use crate::error::{Error, Result};
use crate::hopf::catalog::catalog_get;
use crate::hopf::{
    check_module_algebra, check_twisted_module_algebra, ActionAssignment, HopfSpec,
    ModuleReport,
};
use crate::linalg::Matrix;
use crate::poly::{parse_poly, parse_scalar, Poly};
use crate::scalar::CyclotomicField;
use crate::twist::{twist_algebra, TwistedAlgebra};

/// Regularity of the invariant ring as asserted alongside the table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Regular,
    NotRegular,
    /// The table lists generators but says nothing about regularity.
    Unstated,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Regular => "regular",
            Verdict::NotRegular => "not-regular",
            Verdict::Unstated => "unstated",
        })
    }
}

/// One concrete action: `A_1 = rep (+ extra)` on `k<u,v>/(relation)`,
/// extended by `t` with `sigma` when `extra` is present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub hopf: u32,
    pub rep: String,
    pub extra: Option<String>,
    /// Relation of the algebra acted on, in key syntax. For twisted rows
    /// this is the relation of the twisted algebra in `X, Y`.
    pub relation: String,
    /// Row-major `2x2`; column `j` is the image of generator `j`.
    pub sigma: Option<[String; 4]>,
    /// Relation of the untwisted algebra for twisted rows.
    pub twist_from: Option<String>,
    pub claimed: Vec<String>,
}

impl Config {
    pub fn key(&self) -> String {
        let mut k = format!("K{}/{}", self.hopf, self.rep);
        if let Some(t) = &self.extra {
            k.push('+');
            k.push_str(t);
        }
        if self.twist_from.is_some() {
            k.push_str("/J");
        }
        k.push_str("/r=");
        k.push_str(&self.relation);
        k
    }

    pub fn names(&self) -> Vec<char> {
        match (&self.twist_from, &self.extra) {
            (Some(_), _) => vec!['X', 'Y'],
            (None, Some(_)) => vec!['u', 'v', 't'],
            (None, None) => vec!['u', 'v'],
        }
    }

    pub fn claimed_polys<F: CyclotomicField>(&self) -> Result<Vec<Poly<F>>> {
        let names = self.names();
        self.claimed.iter().map(|c| parse_poly(c, &names)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    /// Position in the full list, from 1.
    pub number: usize,
    /// Which table the row belongs to, by Hopf algebra ids.
    pub table: &'static str,
    pub verdict: Verdict,
    /// The first entry addresses the row; the rest are further parameter
    /// choices the row covers.
    pub configs: Vec<Config>,
}

impl TableRow {
    pub fn primary(&self) -> &Config {
        &self.configs[0]
    }
}

const DIAG: [&str; 4] = ["1", "0", "0", "-1"];
const IDENT: [&str; 4] = ["1", "0", "0", "1"];

fn sigma(s: [&str; 4]) -> Option<[String; 4]> {
    Some(s.map(String::from))
}

fn claims(c: &[&str]) -> Vec<String> {
    c.iter().map(|s| s.to_string()).collect()
}

struct RowBuilder {
    rows: Vec<TableRow>,
}

impl RowBuilder {
    fn push(&mut self, table: &'static str, verdict: Verdict, configs: Vec<Config>) {
        let number = self.rows.len() + 1;
        self.rows.push(TableRow {
            number,
            table,
            verdict,
            configs,
        });
    }
}

fn plain(hopf: u32, rep: &str, relation: &str, claimed: &[&str]) -> Config {
    Config {
        hopf,
        rep: rep.into(),
        extra: None,
        relation: relation.into(),
        sigma: None,
        twist_from: None,
        claimed: claims(claimed),
    }
}

fn ore(
    hopf: u32,
    rep: &str,
    extra: &str,
    relation: &str,
    s: [&str; 4],
    claimed: &[&str],
) -> Config {
    Config {
        hopf,
        rep: rep.into(),
        extra: Some(extra.into()),
        relation: relation.into(),
        sigma: sigma(s),
        twist_from: None,
        claimed: claims(claimed),
    }
}

fn twisted(hopf: u32, rep: &str, from: &str, relation: &str, claimed: &[&str]) -> Config {
    Config {
        hopf,
        rep: rep.into(),
        extra: None,
        relation: relation.into(),
        sigma: None,
        twist_from: Some(from.into()),
        claimed: claims(claimed),
    }
}

/// One-dimensional module of `#1..#4` with `x.t = y.t = (-1)^a t`,
/// `z.t = -t`, `w.t = gamma t`.
fn t_1234(hopf: u32, a: u32, c: u32) -> String {
    let s = if a == 0 { "1" } else { "-1" };
    // gamma = (-1)^c i^e
    let e = match hopf {
        1 => a,
        2 => 0,
        3 => a + 1,
        _ => 1,
    };
    let gamma = ["1", "i", "-1", "-i"][((e + 2 * c) % 4) as usize];
    format!("T_{{{s},{s},-1,{gamma}}}")
}

/// Every table row with its covered parameter choices.
pub fn table_rows() -> Vec<TableRow> {
    use Verdict::*;
    let mut b = RowBuilder { rows: Vec::new() };

    // #1..#4 on k<u,v>/(r)[t; sigma], A_1 = pi_i (+) T with z.t = -t.
    // Claims and relations below depend on i through (-1)^i.
    type Family = (u32, Verdict, fn(usize) -> (String, Vec<String>));
    let fam: Vec<Family> = vec![
        (1, Regular, |i| {
            let s = if i == 1 { "+" } else { "-" };
            ("uv-i.vu".into(), claims(&["u^2v^2", &format!("u^2{s}v^2"), "t^2"]))
        }),
        (1, NotRegular, |i| {
            let r = if i == 1 { "u^2+v^2" } else { "u^2-v^2" };
            (r.into(), claims(&["u^4", "(uv)^2-(vu)^2", "u^2((uv)^2+(vu)^2)", "t^2"]))
        }),
        (1, Regular, |i| {
            let r = if i == 1 { "u^2-v^2" } else { "u^2+v^2" };
            (r.into(), claims(&["u^2", "(uv)^2-(vu)^2", "t^2"]))
        }),
        (2, Regular, |i| {
            let s = if i == 1 { "+" } else { "-" };
            ("uv-vu".into(), claims(&["u^2v^2", &format!("u^2{s}v^2"), "t^2"]))
        }),
        (2, NotRegular, |i| {
            let r = if i == 1 { "u^2+v^2" } else { "u^2-v^2" };
            (r.into(), claims(&["u^4", "(uv)^2+(vu)^2", "u^2((uv)^2-(vu)^2)", "t^2"]))
        }),
        (2, Regular, |i| {
            let r = if i == 1 { "u^2-v^2" } else { "u^2+v^2" };
            (r.into(), claims(&["u^2", "(uv)^2+(vu)^2", "t^2"]))
        }),
        (3, NotRegular, |_| {
            ("uv-i.vu".into(), claims(&["u^2v^2", "u^2+v^2", "(u^2-v^2)t^2", "t^4"]))
        }),
        (3, NotRegular, |_| {
            (
                "u^2-v^2".into(),
                claims(&["u^2", "(uv)^2+(vu)^2", "((uv)^2-(vu)^2)t^2", "t^4"]),
            )
        }),
        (3, NotRegular, |_| {
            (
                "u^2+v^2".into(),
                claims(&[
                    "u^4",
                    "(uv)^2+(vu)^2",
                    "((uv)^2-(vu)^2)t^2",
                    "u^2((uv)^2-(vu)^2)",
                    "u^2t^2",
                    "t^4",
                ]),
            )
        }),
        (4, NotRegular, |_| {
            ("uv-vu".into(), claims(&["u^2v^2", "u^2+v^2", "(u^2-v^2)t^2", "t^4"]))
        }),
        (4, NotRegular, |_| {
            (
                "u^2-v^2".into(),
                claims(&["u^2", "(uv)^2-(vu)^2", "((uv)^2+(vu)^2)t^2", "t^4"]),
            )
        }),
        (4, NotRegular, |_| {
            (
                "u^2+v^2".into(),
                claims(&[
                    "u^4",
                    "(uv)^2-(vu)^2",
                    "u^2((uv)^2+(vu)^2)",
                    "((uv)^2+(vu)^2)t^2",
                    "u^2t^2",
                    "t^4",
                ]),
            )
        }),
    ];
    for (hopf, verdict, make) in fam {
        let mut configs = Vec::new();
        for i in 1..=2usize {
            let (rel, cl) = make(i);
            let mut rels = vec![rel.clone()];
            // uv - q vu rows cover both signs of q
            if rel.starts_with("uv-") {
                rels.push(rel.replacen("uv-", "uv+", 1));
            }
            for r in rels {
                for a in 0..2 {
                    for c in 0..2 {
                        // #1 and #3 twist the Ore automorphism with a
                        let s = if (hopf == 1 || hopf == 3) && a == 1 { IDENT } else { DIAG };
                        let cl: Vec<&str> = cl.iter().map(String::as_str).collect();
                        configs.push(ore(hopf, &format!("pi{i}"), &t_1234(hopf, a, c), &r, s, &cl));
                    }
                }
            }
        }
        b.push("1-4", verdict, configs);
    }

    // #5, #7 on k<u,v>/(r), A_1 = pi.
    let c57: [(u32, Verdict, &str, &[&str]); 4] = [
        (5, Regular, "uv-i.vu", &["u^2v^2", "u^4-v^4"]),
        (5, Regular, "u^2+i.v^2", &["u^4", "(uv)^2-(vu)^2"]),
        (7, NotRegular, "uv-i.vu", &["u^4v^4", "u^4+v^4", "u^2v^2(u^4+v^4)"]),
        (7, NotRegular, "u^2+i.v^2", &["u^8", "(uv)^2+(vu)^2", "u^4((uv)^2-(vu)^2)"]),
    ];
    for (hopf, verdict, rel, cl) in c57 {
        let configs = ["pi1", "pi2"].iter().map(|p| plain(hopf, p, rel, cl)).collect();
        b.push("5,7", verdict, configs);
    }

    // #6, #10, #11 on k<u,v>/(r)[t; diag(1,-1)], T with y.t = -t.
    let t61011 = |hopf: u32| -> Vec<String> {
        let mut out = Vec::new();
        for e in ["1", "-1"] {
            let gammas: [&str; 2] = if hopf == 6 { ["1", "-1"] } else { ["i", "-i"] };
            for g in gammas {
                out.push(format!("T_{{{e},-1,{g}}}"));
            }
        }
        out
    };
    let c61011: [(u32, &[&str], &[&str], Verdict, &[&str]); 12] = [
        (6, &["pi1"], &["uv-vu"], Regular, &["uv", "u^4+v^4", "t^2"]),
        (6, &["pi1"], &["uv+vu"], NotRegular, &["u^2v^2", "u^4+v^4", "uv(u^4-v^4)", "t^2"]),
        (6, &["pi2"], &["uv-vu"], NotRegular, &["u^2v^2", "u^4+v^4", "uv(u^4-v^4)", "t^2"]),
        (6, &["pi2"], &["uv+vu"], Regular, &["uv", "u^4+v^4", "t^2"]),
        (10, &["pi1", "pi2"], &["uv-vu"], NotRegular, &["uv", "u^4+v^4", "(u^4-v^4)t^2", "t^4"]),
        (
            10,
            &["pi1", "pi2"],
            &["uv+vu"],
            NotRegular,
            &["u^2v^2", "u^4+v^4", "uv(u^4-v^4)", "uvt^2", "(u^4-v^4)t^2", "t^4"],
        ),
        (
            11,
            &["pi1", "pi2"],
            &["uv-vu"],
            NotRegular,
            &["u^2v^2", "u^4+v^4", "uv(u^4-v^4)", "uvt^2", "(u^4-v^4)t^2", "t^4"],
        ),
        (11, &["pi1", "pi2"], &["uv+vu"], NotRegular, &["uv", "u^4+v^4", "(u^4-v^4)t^2", "t^4"]),
        (6, &["pi1"], &["u^2-v^2", "u^2+v^2"], Unstated, &["u^4", "uv+vu", "t^2"]),
        (6, &["pi2"], &["u^2-v^2", "u^2+v^2"], Unstated, &["u^4", "uv-vu", "t^2"]),
        (
            10,
            &["pi1", "pi2"],
            &["u^2-v^2", "u^2+v^2"],
            NotRegular,
            &["u^4", "uv+vu", "(uv-vu)t^2", "t^4"],
        ),
        (
            11,
            &["pi1", "pi2"],
            &["u^2-v^2", "u^2+v^2"],
            NotRegular,
            &["u^4", "uv-vu", "(uv+vu)t^2", "t^4"],
        ),
    ];
    for (hopf, reps, rels, verdict, cl) in c61011 {
        let mut configs = Vec::new();
        for rep in reps {
            for rel in rels {
                for t in t61011(hopf) {
                    configs.push(ore(hopf, rep, &t, rel, DIAG, cl));
                }
            }
        }
        b.push("6,10,11", verdict, configs);
    }

    // #8, #9 on k<u,v>/(r)[t; diag(1,-1)], T with x.t = +-i t, y.t = t.
    let c89: [(u32, &str, &str, &[&str]); 16] = [
        (8, "pi1", "uv-vu", &["u^2v^2", "u^4+v^4", "uv(u^4-v^4)", "uv(u^2+v^2)t^2", "(u^2-v^2)t^2", "t^4"]),
        (8, "pi1", "uv+vu", &["uv", "u^4+v^4", "(u^2-v^2)t^2", "t^4"]),
        (8, "pi1", "u^2-v^2", &["u^4", "uv-vu", "u^2(uv+vu)t^2", "t^4"]),
        (8, "pi1", "u^2+v^2", &["u^4", "uv-vu", "u^2t^2", "t^4"]),
        (8, "pi2", "uv-vu", &["u^2v^2", "u^2+v^2", "uvt^2", "t^4"]),
        (8, "pi2", "uv+vu", &["u^2v^2", "u^2+v^2", "uv(u^2-v^2)t^2", "t^4"]),
        (8, "pi2", "u^2-v^2", &["u^2", "(uv)^2+(vu)^2", "(uv+vu)t^2", "t^4"]),
        (8, "pi2", "u^2+v^2", &["u^4", "(uv)^2+(vu)^2", "u^2((uv)^2-(vu)^2)", "u^2(uv-vu)t^2", "(uv+vu)t^2", "t^4"]),
        (9, "pi1", "uv-vu", &["uv", "u^4+v^4", "(u^2-v^2)t^2", "t^4"]),
        (9, "pi1", "uv+vu", &["u^2v^2", "u^4+v^4", "uv(u^4-v^4)", "(u^2-v^2)t^2", "uv(u^2+v^2)t^2", "t^4"]),
        (9, "pi1", "u^2-v^2", &["u^4", "uv+vu", "u^2(uv-vu)t^2", "t^4"]),
        (9, "pi1", "u^2+v^2", &["u^4", "uv+vu", "u^2t^2", "t^4"]),
        (9, "pi2", "uv-vu", &["u^2v^2", "u^2+v^2", "uv(u^2-v^2)t^2", "t^4"]),
        (9, "pi2", "uv+vu", &["u^2v^2", "u^2+v^2", "uvt^2", "t^4"]),
        (9, "pi2", "u^2-v^2", &["u^2", "(uv)^2+(vu)^2", "(uv-vu)t^2", "t^4"]),
        (9, "pi2", "u^2+v^2", &["u^4", "(uv)^2+(vu)^2", "u^2((uv)^2-(vu)^2)", "u^2(uv+vu)t^2", "(uv-vu)t^2", "t^4"]),
    ];
    for (hopf, rep, rel, cl) in c89 {
        let configs = ["T_{i,1,1}", "T_{i,1,-1}", "T_{-i,1,1}", "T_{-i,1,-1}"]
            .iter()
            .map(|t| ore(hopf, rep, t, rel, DIAG, cl))
            .collect();
        b.push("8,9", NotRegular, configs);
    }

    // #12, #13: the twisted algebras B = A_J in X = (u+v)/2, Y = (u-v)/2.
    let c1213: [(u32, &str, &str, Verdict, &[&str]); 4] = [
        (12, "uv-vu", "XY+YX", Regular, &["X^2-Y^2", "X^2Y^2(X^2+Y^2)^2"]),
        (
            12,
            "uv+vu",
            "X^2-Y^2",
            NotRegular,
            &[
                "2X^4+(XY)^2+(YX)^2",
                "14X^8+(XY)^4+(YX)^4",
                "42X^8(XY+YX)-27X^4((XY)^3+(YX)^3)+((XY)^5+(YX)^5)",
            ],
        ),
        (
            13,
            "uv-vu",
            "XY+YX",
            NotRegular,
            &["(X^2-Y^2)^2", "X^2Y^2(X^2+Y^2)^2", "X^6-Y^6+5X^2Y^2(X^2-Y^2)"],
        ),
        (
            13,
            "uv+vu",
            "X^2-Y^2",
            NotRegular,
            &["2X^4+(XY)^2+(YX)^2", "14X^8+(XY)^4+(YX)^4", "X^2((XY)^2-(YX)^2)"],
        ),
    ];
    for (hopf, from, rel, verdict, cl) in c1213 {
        let table = if hopf == 12 { "12" } else { "13" };
        let configs = ["pi1", "pi3"].iter().map(|p| twisted(hopf, p, from, rel, cl)).collect();
        b.push(table, verdict, configs);
    }

    // #15 on k<u,v>/(r)[t; sigma], T = T_{(-1)^p,(-1)^q,-1}.
    let c15: [(&str, &str, bool, Verdict, &[&str]); 8] = [
        ("pi1", "uv-vu", true, NotRegular, &["u^2v^2", "u^4+v^4", "uv(u^4-v^4)", "t^2"]),
        (
            "pi1",
            "uv-vu",
            false,
            NotRegular,
            &["u^2v^2", "u^4+v^4", "uv(u^4-v^4)", "(u^4-v^4)t^2", "uvt^2", "t^4"],
        ),
        ("pi1", "uv+vu", true, Regular, &["uv", "u^4+v^4", "t^2"]),
        ("pi1", "uv+vu", false, NotRegular, &["uv", "u^4+v^4", "(u^4-v^4)t^2", "t^4"]),
        ("pi2", "u^2-i.v^2", true, Regular, &["u^2", "(uv)^2-(vu)^2", "t^2"]),
        (
            "pi2",
            "u^2-i.v^2",
            false,
            NotRegular,
            &["u^2", "(uv)^2-(vu)^2", "((uv)^2+(vu)^2)t^2", "t^4"],
        ),
        (
            "pi2",
            "u^2+i.v^2",
            true,
            NotRegular,
            &["u^4", "(uv)^2-(vu)^2", "u^2((uv)^2+(vu)^2)", "t^2"],
        ),
        (
            "pi2",
            "u^2+i.v^2",
            false,
            NotRegular,
            &["u^4", "(uv)^2-(vu)^2", "u^2((uv)^2+(vu)^2)", "u^2t^2", "((uv)^2+(vu)^2)t^2", "t^4"],
        ),
    ];
    for (rep, rel, same, verdict, cl) in c15 {
        let pq: [(u32, u32); 2] = if same { [(0, 0), (1, 1)] } else { [(0, 1), (1, 0)] };
        let configs = pq
            .iter()
            .map(|&(p, q)| {
                let sg = |e: u32| if e == 0 { "1" } else { "-1" };
                let t = format!("T_{{{},{},-1}}", sg(p), sg(q));
                // pi1: sigma(v) = i u; pi2: sigma(v) = (-1)^(p+q) i u
                let corner = if rep == "pi2" && (p + q) % 2 == 1 { "-i" } else { "i" };
                ore(15, rep, &t, rel, ["0", corner, "1", "0"], cl)
            })
            .collect();
        b.push("15", verdict, configs);
    }
    b.rows
}

/// A parsed key. Table keys carry `relation`; module-only keys such as
/// `K6/pi1+T_{1,-1,1}` do not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Key {
    pub hopf: u32,
    pub rep: String,
    pub extra: Option<String>,
    pub twisted: bool,
    pub relation: Option<String>,
}

impl Key {
    pub fn parse(src: &str) -> Result<Self> {
        let bad = || Error::UnknownKey(src.to_string());
        let rest = src.strip_prefix('K').ok_or_else(bad)?;
        let mut parts = rest.split('/');
        let hopf: u32 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let module = parts.next().ok_or_else(bad)?;
        let (rep, extra) = match module.split_once('+') {
            Some((r, t)) => (r, Some(t.to_string())),
            None => (module, None),
        };
        let rep = if rep == "pi" { "pi1" } else { rep };
        let mut twisted = false;
        let mut relation = None;
        for p in parts {
            match p {
                "J" if relation.is_none() && !twisted => twisted = true,
                _ => match p.strip_prefix("r=") {
                    Some(r) if relation.is_none() && !r.is_empty() => {
                        relation = Some(r.to_string())
                    }
                    _ => return Err(bad()),
                },
            }
        }
        Ok(Key {
            hopf,
            rep: rep.to_string(),
            extra,
            twisted,
            relation,
        })
    }

    /// The module named by the key, checked against the catalog.
    pub fn module<F: CyclotomicField>(&self) -> Result<(HopfSpec<F>, Vec<Matrix<F>>)> {
        let spec = catalog_get::<F>(self.hopf)?;
        if spec.external {
            return Err(Error::Unsupported(spec.id, spec.notes.clone()));
        }
        let unknown = |l: &str| Error::UnknownKey(format!("K{}/{l}", self.hopf));
        let mut mats = spec.simple(&self.rep).map_err(|_| unknown(&self.rep))?.matrices.clone();
        if let Some(t) = &self.extra {
            let tm = &spec.simple(t).map_err(|_| unknown(t))?.matrices;
            mats = mats.iter().zip(tm).map(|(a, b)| a.direct_sum(b)).collect();
        }
        Ok((spec, mats))
    }
}

/// The configuration with this key, with the row it belongs to.
pub fn find_config(key: &str) -> Result<(TableRow, Config)> {
    let parsed = Key::parse(key)?;
    let canonical = |c: &Config| Key::parse(&c.key()).ok() == Some(parsed.clone());
    for row in table_rows() {
        if let Some(c) = row.configs.iter().find(|c| canonical(c)) {
            let c = c.clone();
            return Ok((row, c));
        }
    }
    Err(Error::UnknownKey(key.to_string()))
}

/// A configuration turned into an action.
pub struct Built<F> {
    pub config: Config,
    pub spec: Arc<HopfSpec<F>>,
    pub degree_one: Vec<Matrix<F>>,
    pub module_report: ModuleReport,
    /// The action the invariants are computed for.
    pub assign: ActionAssignment<F>,
    /// For twisted rows: the group action on the untwisted algebra.
    pub untwisted: Option<ActionAssignment<F>>,
    pub twist: Option<TwistedAlgebra<F>>,
}

impl<F: CyclotomicField> Built<F> {
    pub fn algebra(&self) -> &Arc<AlgebraHandle<F>> {
        self.assign.algebra()
    }
}

fn scalar<F: CyclotomicField>(s: &str) -> Result<F> {
    parse_scalar(s)
}

/// Build the algebra through degree `bound` and the action on it. The
/// module-algebra check runs first; its violations are kept in the result
/// and the action is built regardless.
pub fn build<F: CyclotomicField>(config: &Config, bound: usize) -> Result<Built<F>> {
    let key = Key::parse(&config.key())?;
    let (spec, degree_one) = key.module::<F>()?;
    let spec = Arc::new(spec);
    match &config.twist_from {
        None => {
            let names = config.names();
            let base = Presentation::from_strs(&['u', 'v'], &[config.relation.as_str()])?;
            let ore = match &config.sigma {
                Some(s) => {
                    let e = s.iter().map(|x| scalar::<F>(x)).collect::<Result<Vec<F>>>()?;
                    Some(OreData::new(Matrix::from_rows(vec![
                        vec![e[0].clone(), e[1].clone()],
                        vec![e[2].clone(), e[3].clone()],
                    ])))
                }
                None => None,
            };
            debug_assert_eq!(names.len(), 2 + usize::from(ore.is_some()));
            let module_report = check_module_algebra(&spec, &base, ore.as_ref(), &degree_one);
            let a = Arc::new(build_algebra(&base, ore.clone(), bound)?);
            let assign = ActionAssignment::new(spec.clone(), a, degree_one.clone())?;
            Ok(Built {
                config: config.clone(),
                spec,
                degree_one,
                module_report,
                assign,
                untwisted: None,
                twist: None,
            })
        }
        Some(from) => {
            let base = Presentation::from_strs(&['u', 'v'], &[from.as_str()])?;
            let mut module_report = check_module_algebra(&spec, &base, None, &degree_one);
            let a = Arc::new(build_algebra(&base, None, bound)?);
            let untwisted = ActionAssignment::new(spec.clone(), a.clone(), degree_one.clone())?;
            let tw_spec = spec
                .twist
                .as_ref()
                .ok_or_else(|| Error::Twist(format!("#{} carries no twist", spec.id)))?;
            let action = spec.twist_action(&degree_one)?;
            let half = F::from_ratio(1, 2);
            let new_basis = Matrix::from_rows(vec![
                vec![half.clone(), half.clone()],
                vec![half.clone(), -half],
            ]);
            let tw = twist_algebra(&a, &action, &tw_spec.omega, Some(new_basis), &['X', 'Y'], bound)?;
            let expected = parse_poly::<F>(&config.relation, &['X', 'Y'])?;
            let got = &tw.twisted.presentation().relations;
            if got.len() != 1 || got[0].monic() != expected.monic() {
                return Err(Error::Twist(format!(
                    "twisted relation {} differs from {}",
                    got.iter().map(|r| r.render(&['X', 'Y'])).collect::<Vec<_>>().join(", "),
                    config.relation
                )));
            }
            let twisted_report = check_twisted_module_algebra(&spec, &degree_one, &a, &tw)?;
            module_report.violations.extend(twisted_report.violations);
            let assign = untwisted.transported(&tw)?;
            Ok(Built {
                config: config.clone(),
                spec,
                degree_one,
                module_report,
                assign,
                untwisted: Some(untwisted),
                twist: Some(tw),
            })
        }
    }
}
