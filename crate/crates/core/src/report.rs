//! Structured reports for the batch commands. Every report serializes to a
//! single JSON line with a fixed field order.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::AlgebraHandle;
use crate::error::Result;
use crate::hopf::ViolationKind;
use crate::linalg::SVec;
use crate::invariants::{
    minimal_generators, twist_invariance_check, verify_claimed_generators, InvariantRing, Surrogate,
};
use crate::reptheory::{decompose, grouplike_kernel_witness, is_inner_faithful, RepHandle};
use crate::scalar::CyclotomicField;
use crate::tables::{build, find_config, table_rows, Built, Config, Key, TableRow, Verdict};

/// First line of every report document.
pub const HEADER: &str = "hopf16-report 1";

/// Degrees checked against the ideal-quotient oracle.
pub const ORACLE_DEGREES: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Command {
    CheckAction,
    InnerFaithful,
    Decompose,
    Invariants,
    VerifyTable,
    TwistCheck,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CheckAction => "check-action",
            Command::InnerFaithful => "inner-faithful",
            Command::Decompose => "decompose",
            Command::Invariants => "invariants",
            Command::VerifyTable => "verify-table",
            Command::TwistCheck => "twist-check",
        }
    }

    /// Commands that only need the module, not a relation.
    pub fn module_only(self) -> bool {
        matches!(self, Command::InnerFaithful | Command::Decompose)
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ViolationEntry {
    pub kind: String,
    pub generator: Option<String>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct OracleEntry {
    pub degrees: usize,
    pub hilbert: Vec<usize>,
    pub oracle: Vec<usize>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CheckActionReport {
    pub command: &'static str,
    pub key: String,
    pub hilbert: Vec<usize>,
    pub violations: Vec<ViolationEntry>,
    pub oracle: Option<OracleEntry>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct InnerFaithfulReport {
    pub command: &'static str,
    pub key: String,
    pub inner_faithful: bool,
    /// `(simple, first tensor power containing it)`.
    pub certificate: Vec<(String, usize)>,
    pub missing: Vec<String>,
    /// A nontrivial grouplike acting trivially, when there is one.
    pub witness: Option<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct DecomposeReport {
    pub command: &'static str,
    pub key: String,
    pub module: Vec<String>,
    pub tensor_square: Vec<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct InvariantsReport {
    pub command: &'static str,
    pub key: String,
    pub bound: usize,
    pub dims: Vec<usize>,
    pub generator_degrees: Vec<usize>,
    pub generators: Vec<String>,
    pub degree_product: u64,
    pub surrogate: String,
    pub conjecture_holds: Option<bool>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct VerifyTableReport {
    pub command: &'static str,
    pub key: String,
    pub row: usize,
    pub table: String,
    pub bound: usize,
    pub module_ok: bool,
    pub dims: Vec<usize>,
    pub claimed: Vec<String>,
    pub claimed_degrees: Vec<usize>,
    /// `(degree, span of the claimed generators, dim A_d^H)`.
    pub first_failure: Option<(usize, usize, usize)>,
    /// The claimed elements are invariant and generate through the bound.
    pub claims_ok: bool,
    pub generator_degrees: Vec<usize>,
    pub degrees_match: bool,
    pub degree_product: u64,
    pub expected: String,
    pub surrogate: String,
    pub verdict_ok: bool,
    pub conjecture_holds: Option<bool>,
    pub error: Option<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct TwistCheckReport {
    pub command: &'static str,
    pub key: String,
    pub bound: usize,
    pub twisted_relation: String,
    /// Twisted products of degree-one basis elements, in the old basis.
    pub products: Vec<(String, String)>,
    pub dims: Vec<usize>,
    pub twisted_dims: Vec<usize>,
    pub mismatched_degrees: Vec<usize>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ErrorReport {
    pub command: &'static str,
    pub key: String,
    pub error: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Entry {
    CheckAction(CheckActionReport),
    InnerFaithful(InnerFaithfulReport),
    Decompose(DecomposeReport),
    Invariants(InvariantsReport),
    VerifyTable(VerifyTableReport),
    TwistCheck(TwistCheckReport),
    Error(ErrorReport),
}

impl Entry {
    pub fn pass(&self) -> bool {
        match self {
            Entry::CheckAction(r) => r.pass,
            Entry::InnerFaithful(r) => r.pass,
            Entry::Decompose(r) => r.pass,
            Entry::Invariants(r) => r.pass,
            Entry::VerifyTable(r) => r.pass,
            Entry::TwistCheck(r) => r.pass,
            Entry::Error(r) => r.pass,
        }
    }

    pub fn to_json(&self) -> String {
        let s = match self {
            Entry::CheckAction(r) => serde_json::to_string(r),
            Entry::InnerFaithful(r) => serde_json::to_string(r),
            Entry::Decompose(r) => serde_json::to_string(r),
            Entry::Invariants(r) => serde_json::to_string(r),
            Entry::VerifyTable(r) => serde_json::to_string(r),
            Entry::TwistCheck(r) => serde_json::to_string(r),
            Entry::Error(r) => serde_json::to_string(r),
        };
        s.expect("report fields serialize")
    }
}

/// Header plus one line per entry.
pub fn render(entries: &[Entry]) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    for e in entries {
        out.push_str(&e.to_json());
        out.push('\n');
    }
    out
}

fn violation_entries<F>(b: &Built<F>) -> Vec<ViolationEntry> {
    b.module_report
        .violations
        .iter()
        .map(|v| ViolationEntry {
            kind: match v.kind {
                ViolationKind::Shape => "shape",
                ViolationKind::HopfRelation => "hopf-relation",
                ViolationKind::Counit => "counit",
                ViolationKind::Ore => "ore",
                ViolationKind::RelationSpan => "relation-span",
            }
            .into(),
            generator: v.generator.map(String::from),
            detail: v.relation.clone(),
        })
        .collect()
}

pub fn oracle_entry<F: CyclotomicField>(a: &AlgebraHandle<F>) -> Result<OracleEntry> {
    let top = ORACLE_DEGREES.min(a.bound());
    let hilbert: Vec<usize> = (0..=top).map(|d| a.dim(d)).collect();
    let oracle = (0..=top)
        .map(|d| a.ideal_quotient_oracle(d))
        .collect::<Result<Vec<_>>>()?;
    Ok(OracleEntry {
        degrees: top,
        pass: hilbert == oracle,
        hilbert,
        oracle,
    })
}

pub fn check_action<F: CyclotomicField>(b: &Built<F>, oracle: bool) -> Result<CheckActionReport> {
    let violations = violation_entries(b);
    let oracle = if oracle {
        Some(oracle_entry(b.algebra())?)
    } else {
        None
    };
    Ok(CheckActionReport {
        command: Command::CheckAction.name(),
        key: b.config.key(),
        hilbert: b.algebra().hilbert(),
        pass: violations.is_empty() && oracle.as_ref().is_none_or(|o| o.pass),
        violations,
        oracle,
    })
}

pub fn inner_faithful<F: CyclotomicField>(key: &str) -> Result<InnerFaithfulReport> {
    let k = Key::parse(key)?;
    let (spec, mats) = k.module::<F>()?;
    let v = RepHandle::new(mats);
    let r = is_inner_faithful(&spec, &v)?;
    Ok(InnerFaithfulReport {
        command: Command::InnerFaithful.name(),
        key: key.to_string(),
        inner_faithful: r.inner_faithful,
        certificate: r.first_power,
        missing: r.missing,
        witness: grouplike_kernel_witness(&spec, &v).map(|w| spec.render_word(&w)),
        pass: true,
    })
}

pub fn decomposition<F: CyclotomicField>(key: &str) -> Result<DecomposeReport> {
    let k = Key::parse(key)?;
    let (spec, mats) = k.module::<F>()?;
    let v = RepHandle::new(mats);
    let module = decompose(&spec, &v)?.multiset();
    let tensor_square = decompose(&spec, &RepHandle::tensor(&spec, &v, &v)?)?.multiset();
    Ok(DecomposeReport {
        command: Command::Decompose.name(),
        key: key.to_string(),
        module,
        tensor_square,
        pass: true,
    })
}

pub fn invariants<F: CyclotomicField>(b: &Built<F>, bound: usize) -> Result<InvariantsReport> {
    let ring = InvariantRing::compute(&b.assign, bound)?;
    let g = minimal_generators(&ring)?;
    let names = b.algebra().names().to_vec();
    Ok(InvariantsReport {
        command: Command::Invariants.name(),
        key: b.config.key(),
        bound,
        dims: g.dims,
        generator_degrees: g.degrees,
        generators: g.representatives.iter().map(|p| p.render(&names)).collect(),
        degree_product: g.degree_product,
        surrogate: g.surrogate.to_string(),
        conjecture_holds: g.conjecture_holds,
        pass: b.module_report.is_ok() && g.conjecture_holds != Some(false),
    })
}

/// Whether the surrogate and degree product agree with the asserted
/// regularity of a row.
pub fn verdict_consistent(expected: Verdict, surrogate: Surrogate, product: u64) -> bool {
    match expected {
        Verdict::Regular => surrogate == Surrogate::RegularCandidate && product == 16,
        Verdict::NotRegular => surrogate == Surrogate::NotRegular,
        Verdict::Unstated => true,
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

pub fn verify_table<F: CyclotomicField>(
    row: &TableRow,
    config: &Config,
    bound: usize,
) -> VerifyTableReport {
    let mut report = VerifyTableReport {
        command: Command::VerifyTable.name(),
        key: config.key(),
        row: row.number,
        table: row.table.to_string(),
        bound,
        module_ok: false,
        dims: Vec::new(),
        claimed: config.claimed.clone(),
        claimed_degrees: Vec::new(),
        first_failure: None,
        claims_ok: false,
        generator_degrees: Vec::new(),
        degrees_match: false,
        degree_product: 0,
        expected: row.verdict.to_string(),
        surrogate: String::new(),
        verdict_ok: false,
        conjecture_holds: None,
        error: None,
        pass: false,
    };
    if let Err(e) = fill_verify::<F>(&mut report, row, config, bound) {
        report.error = Some(e.to_string());
        report.pass = false;
    }
    report
}

fn fill_verify<F: CyclotomicField>(
    report: &mut VerifyTableReport,
    row: &TableRow,
    config: &Config,
    bound: usize,
) -> Result<()> {
    let b = build::<F>(config, bound)?;
    report.module_ok = b.module_report.is_ok();
    if let Some(v) = b.module_report.violations.first() {
        report.error = Some(v.to_string());
    }
    let ring = InvariantRing::compute(&b.assign, bound)?;
    report.dims = ring.dims();
    let g = minimal_generators(&ring)?;
    report.generator_degrees = g.degrees.clone();
    report.degree_product = g.degree_product;
    report.surrogate = g.surrogate.to_string();
    report.verdict_ok = verdict_consistent(row.verdict, g.surrogate, g.degree_product);
    report.conjecture_holds = g.conjecture_holds;
    let claimed = config.claimed_polys::<F>()?;
    report.claimed_degrees = claimed
        .iter()
        .map(|p| p.homogeneous_degree().unwrap_or(0))
        .collect();
    report.degrees_match = sorted(g.degrees) == sorted(report.claimed_degrees.clone());
    match verify_claimed_generators(&ring, &claimed) {
        Ok(check) => {
            report.first_failure = check.first_failure;
            report.claims_ok = check.passed();
        }
        Err(e @ crate::Error::NotInvariant(_)) => report.error = Some(e.to_string()),
        Err(e) => return Err(e),
    }
    report.pass = report.module_ok
        && report.claims_ok
        && report.degrees_match
        && report.verdict_ok
        && g.conjecture_holds != Some(false);
    Ok(())
}

pub fn twist_check<F: CyclotomicField>(b: &Built<F>, bound: usize) -> Result<TwistCheckReport> {
    let (Some(tw), Some(untwisted)) = (&b.twist, &b.untwisted) else {
        return Err(crate::Error::Twist(format!("{} is not a twisted row", b.config.key())));
    };
    let base = untwisted.algebra();
    let uv = ['u', 'v'];
    let mut products = Vec::new();
    for x in 0..2u8 {
        for y in 0..2u8 {
            let p = tw.star(base, 1, &SVec::unit(x as usize), 1, &SVec::unit(y as usize))?;
            products.push((
                format!("{}*{}", uv[x as usize], uv[y as usize]),
                base.vec_to_poly(2, &p).render(&uv),
            ));
        }
    }
    let base_ring = InvariantRing::compute(untwisted, bound)?;
    let twisted_ring = InvariantRing::compute(&b.assign, bound)?;
    let mismatched: Vec<usize> = twist_invariance_check(&base_ring, &twisted_ring)
        .into_iter()
        .map(|(d, _, _)| d)
        .collect();
    Ok(TwistCheckReport {
        command: Command::TwistCheck.name(),
        key: b.config.key(),
        bound,
        twisted_relation: tw.twisted.presentation().relations[0].render(&['X', 'Y']),
        products,
        dims: base_ring.dims(),
        twisted_dims: twisted_ring.dims(),
        pass: mismatched.is_empty() && b.module_report.is_ok(),
        mismatched_degrees: mismatched,
    })
}

fn error_entry(command: Command, key: &str, e: impl ToString) -> Entry {
    Entry::Error(ErrorReport {
        command: command.name(),
        key: key.to_string(),
        error: e.to_string(),
        pass: false,
    })
}

/// Run `commands` on one key in dependency order. Failures become entries;
/// the remaining commands still run when they can.
pub fn run_key<F: CyclotomicField>(
    key: &str,
    commands: &[Command],
    bound: usize,
    oracle: bool,
) -> Vec<Entry> {
    let mut cmds = commands.to_vec();
    cmds.sort();
    cmds.dedup();
    let mut out = Vec::new();
    let parsed = match Key::parse(key).and_then(|k| k.module::<F>().map(|_| k)) {
        Ok(k) => k,
        Err(e) => return vec![error_entry(cmds.first().copied().unwrap_or(Command::CheckAction), key, e)],
    };
    let needs_relation = cmds.iter().any(|c| !c.module_only());
    let found = if needs_relation || parsed.relation.is_some() {
        Some(find_config(key))
    } else {
        None
    };
    let built = match &found {
        Some(Ok((_, c))) if needs_relation => Some(build::<F>(c, bound)),
        _ => None,
    };
    for cmd in cmds {
        let entry: std::result::Result<Entry, String> = match cmd {
            Command::InnerFaithful => {
                inner_faithful::<F>(key).map(Entry::InnerFaithful).map_err(|e| e.to_string())
            }
            Command::Decompose => {
                decomposition::<F>(key).map(Entry::Decompose).map_err(|e| e.to_string())
            }
            Command::VerifyTable => match &found {
                Some(Ok((row, c))) => Ok(Entry::VerifyTable(verify_table::<F>(row, c, bound))),
                Some(Err(e)) => Err(e.to_string()),
                None => unreachable!("relation commands resolve the key"),
            },
            _ => match (&found, &built) {
                (Some(Err(e)), _) => Err(e.to_string()),
                (_, Some(Err(e))) => Err(e.to_string()),
                (_, Some(Ok(b))) => match cmd {
                    Command::CheckAction => check_action(b, oracle).map(Entry::CheckAction),
                    Command::Invariants => invariants(b, bound).map(Entry::Invariants),
                    _ => twist_check(b, bound).map(Entry::TwistCheck),
                }
                .map_err(|e| e.to_string()),
                _ => unreachable!("relation commands build the action"),
            },
        };
        out.push(entry.unwrap_or_else(|e| error_entry(cmd, key, e)));
    }
    out
}

/// `verify-table` over the first configuration of every row, in row order.
pub fn verify_all<F: CyclotomicField>(bound: usize) -> Vec<Entry> {
    let rows = table_rows();
    rows.par_iter()
        .map(|r| Entry::VerifyTable(verify_table::<F>(r, r.primary(), bound)))
        .collect()
}

/// `verify-table` over every configuration of every row.
pub fn verify_all_configs<F: CyclotomicField>(bound: usize) -> Vec<Entry> {
    let jobs: Vec<(TableRow, Config)> = table_rows()
        .into_iter()
        .flat_map(|r| r.configs.clone().into_iter().map(move |c| (r.clone(), c)))
        .collect();
    jobs.par_iter()
        .map(|(r, c)| Entry::VerifyTable(verify_table::<F>(r, c, bound)))
        .collect()
}
