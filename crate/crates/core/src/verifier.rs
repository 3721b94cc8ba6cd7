//! Replays the classification rules for rainbow connection numbers of power
//! graphs over a catalog of small groups and reports pass/fail verdicts.
//!
//! Each catalog entry names a group, the classification rule governing it,
//! and the rc value that rule predicts. The verifier builds the group,
//! cross-checks the structural invariants (subgroup-count congruences,
//! pendant vertices vs maximal involutions, completeness vs cyclic prime
//! power), computes the exact rainbow connection number, and compares. A
//! family of cross-cutting implications is asserted on every entry
//! regardless of its governing rule.

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arith;
use crate::constructions::{pnq_structure, recognize_quaternion_product};
use crate::group::{Group, GroupSpec};
use crate::power_graph::PowerGraph;
use crate::solver::{rc_exact, Budget, RcReport, RcStatus};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("catalog line {line}: {message}")]
    Malformed { line: usize, message: String },
}

/// The classification rule an entry is verified against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    /// Groups with maximal involutions: rc is their count, floored at 3.
    InvolutionCount,
    /// Dihedral groups of order 2n: rc = n.
    DihedralInvolutions,
    /// Elementary abelian 2-groups of rank r: rc = 2^r - 1.
    ElementaryAbelian,
    /// Cyclic groups: rc = 1 for prime-power order, else 2.
    CyclicDichotomy,
    /// Noncyclic groups without maximal involutions: rc is 2 or 3.
    NoncyclicBracket,
    /// Q8 x Z_n with n odd: rc = 2.
    QuaternionProduct,
    /// Generalized quaternion groups of order 4n, n >= 3: rc = 3.
    GeneralizedQuaternion,
    /// Order p^n*q groups meeting the cyclic-Sylow conditions: rc = 2.
    PnqFamily,
    /// Noncyclic, no maximal involutions, some subgroup order repeats: rc = 3.
    NonuniqueSubgroup,
    /// Nilpotent noncyclic without maximal involutions: rc = 2 exactly for
    /// the Q8 x Z_odd groups, else 3.
    NilpotentClassification,
    Unclaimed,
}

impl Claim {
    pub fn token(self) -> &'static str {
        match self {
            Claim::InvolutionCount => "involution-count",
            Claim::DihedralInvolutions => "dihedral-involutions",
            Claim::ElementaryAbelian => "elementary-abelian",
            Claim::CyclicDichotomy => "cyclic-dichotomy",
            Claim::NoncyclicBracket => "noncyclic-bracket",
            Claim::QuaternionProduct => "quaternion-product",
            Claim::GeneralizedQuaternion => "generalized-quaternion",
            Claim::PnqFamily => "pnq-family",
            Claim::NonuniqueSubgroup => "nonunique-subgroup",
            Claim::NilpotentClassification => "nilpotent-classification",
            Claim::Unclaimed => "none",
        }
    }

    fn from_token(tok: &str) -> Option<Claim> {
        Some(match tok {
            "involution-count" => Claim::InvolutionCount,
            "dihedral-involutions" => Claim::DihedralInvolutions,
            "elementary-abelian" => Claim::ElementaryAbelian,
            "cyclic-dichotomy" => Claim::CyclicDichotomy,
            "noncyclic-bracket" => Claim::NoncyclicBracket,
            "quaternion-product" => Claim::QuaternionProduct,
            "generalized-quaternion" => Claim::GeneralizedQuaternion,
            "pnq-family" => Claim::PnqFamily,
            "nonunique-subgroup" => Claim::NonuniqueSubgroup,
            "nilpotent-classification" => Claim::NilpotentClassification,
            "none" => Claim::Unclaimed,
            _ => return None,
        })
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl Serialize for Claim {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.token())
    }
}

/// A predicted rc value: a single point or the 2-or-3 bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    Point(u32),
    Range(u32, u32),
}

impl Expected {
    pub fn contains(self, v: u32) -> bool {
        match self {
            Expected::Point(p) => v == p,
            Expected::Range(lo, hi) => lo <= v && v <= hi,
        }
    }

    /// Whether some value in `lo..=hi` is consistent with this prediction.
    pub fn overlaps(self, lo: u32, hi: u32) -> bool {
        match self {
            Expected::Point(p) => lo <= p && p <= hi,
            Expected::Range(a, b) => a <= hi && lo <= b,
        }
    }
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Point(p) => write!(f, "{p}"),
            Expected::Range(lo, hi) => write!(f, "{lo}..{hi}"),
        }
    }
}

impl Serialize for Expected {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Expected::Point(p) => s.serialize_u32(*p),
            Expected::Range(lo, hi) => {
                let mut seq = s.serialize_seq(Some(2))?;
                seq.serialize_element(lo)?;
                seq.serialize_element(hi)?;
                seq.end()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub spec: String,
    pub claim: Claim,
    pub expected: Option<u32>,
}

#[derive(Debug, Clone, Default)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// The catalog shipped with the crate.
    pub fn builtin() -> Catalog {
        Catalog::parse(include_str!("../data/default_catalog.txt"))
            .expect("builtin catalog parses")
    }

    /// Parses `spec | claim | expected` lines; `#` starts a comment and the
    /// expected field may be `-` for none.
    pub fn parse(text: &str) -> Result<Catalog, CatalogError> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = line.split('|').map(str::trim).collect();
            if parts.len() != 3 {
                return Err(CatalogError::Malformed {
                    line: i + 1,
                    message: format!("expected `spec | claim | expected`, got `{line}`"),
                });
            }
            let claim = Claim::from_token(parts[1]).ok_or_else(|| CatalogError::Malformed {
                line: i + 1,
                message: format!("unknown claim `{}`", parts[1]),
            })?;
            let expected = match parts[2] {
                "-" => None,
                v => Some(v.parse().map_err(|_| CatalogError::Malformed {
                    line: i + 1,
                    message: format!("bad expected value `{v}`"),
                })?),
            };
            entries.push(CatalogEntry {
                spec: parts[0].to_string(),
                claim,
                expected,
            });
        }
        Ok(Catalog { entries })
    }
}

/// Recovers the odd n if the group is Q8 x Z_n (n odd), via the structural
/// recognizer: order 8n with n odd, nilpotent, unique involution, exactly
/// three maximal cyclic subgroups of order 4n.
pub fn is_quaternion_times_odd_cyclic(group: &Group) -> Option<u64> {
    recognize_quaternion_product(group).map(|st| st.odd_part)
}

/// The rc value the classification predicts from the group's structure:
/// a point wherever the rules pin one down, the 2-or-3 bracket otherwise.
/// Groups of order < 3 are outside the rules and get no prediction.
pub fn structural_expected(group: &Group) -> Option<Expected> {
    if group.order() < 3 {
        return None;
    }
    let m = group.maximal_involutions().len() as u32;
    if m >= 3 {
        return Some(Expected::Point(m));
    }
    if m >= 1 {
        return Some(Expected::Point(3));
    }
    if group.is_cyclic() {
        return Some(Expected::Point(
            if arith::is_prime_power(group.order() as u64) { 1 } else { 2 },
        ));
    }
    if group.is_nilpotent() {
        return Some(Expected::Point(
            if is_quaternion_times_odd_cyclic(group).is_some() { 2 } else { 3 },
        ));
    }
    if group.subgroup_counts_by_prime().iter().any(|&(_, s)| s > 1) {
        return Some(Expected::Point(3));
    }
    if pnq_structure(group).is_ok() {
        return Some(Expected::Point(2));
    }
    Some(Expected::Range(2, 3))
}

/// The value a claim predicts from the spec parameters alone, where the
/// claim carries a closed formula.
pub fn claim_formula(claim: Claim, spec: &GroupSpec) -> Option<Expected> {
    match (claim, spec) {
        (Claim::DihedralInvolutions, GroupSpec::Dihedral(m)) => {
            Some(Expected::Point((m / 2) as u32))
        }
        (Claim::ElementaryAbelian, GroupSpec::ElementaryAbelian2(r)) => {
            Some(Expected::Point((1u32 << r) - 1))
        }
        (Claim::CyclicDichotomy, GroupSpec::Cyclic(n)) => Some(Expected::Point(
            if arith::is_prime_power(*n) { 1 } else { 2 },
        )),
        (Claim::GeneralizedQuaternion, GroupSpec::GeneralizedQuaternion(m)) if *m >= 12 => {
            Some(Expected::Point(3))
        }
        (Claim::QuaternionProduct, _) => Some(Expected::Point(2)),
        (Claim::PnqFamily, _) => Some(Expected::Point(2)),
        (Claim::NonuniqueSubgroup, _) => Some(Expected::Point(3)),
        (Claim::NoncyclicBracket, _) => Some(Expected::Range(2, 3)),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
    Skipped,
}

/// Everything the verifier learned about one catalog entry.
#[derive(Debug, Clone)]
pub struct EntryRecord {
    pub spec: String,
    pub claim: Claim,
    pub order: usize,
    pub m_g: usize,
    pub nilpotent: bool,
    pub cyclic: bool,
    /// (p, s_p) for each prime p dividing the order.
    pub subgroup_counts: Vec<(u64, u64)>,
    pub expected: Option<Expected>,
    pub report: Option<RcReport>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub records: Vec<EntryRecord>,
}

/// Builds, checks, and solves every catalog entry within `max_order` (when
/// given), asserting the cross-cutting implications on each. Failures never
/// abort the run; they become Fail verdicts.
pub fn verify_catalog(
    catalog: &Catalog,
    budget: &Budget,
    max_order: Option<usize>,
) -> VerificationReport {
    let mut records = Vec::new();
    let mut seen: BTreeSet<String> = BTreeSet::new();
    for entry in &catalog.entries {
        if !seen.insert(entry.spec.clone()) {
            continue;
        }
        if let Some(rec) = verify_entry(entry, budget, max_order) {
            records.push(rec);
        }
    }
    records.sort_by(|a, b| a.spec.cmp(&b.spec));
    VerificationReport { records }
}

fn verify_entry(
    entry: &CatalogEntry,
    budget: &Budget,
    max_order: Option<usize>,
) -> Option<EntryRecord> {
    let mut notes = Vec::new();
    let failed = |spec: &str, claim: Claim, notes: Vec<String>| EntryRecord {
        spec: spec.to_string(),
        claim,
        order: 0,
        m_g: 0,
        nilpotent: false,
        cyclic: false,
        subgroup_counts: Vec::new(),
        expected: None,
        report: None,
        verdict: Verdict::Fail,
        notes,
    };

    let spec = match GroupSpec::parse(&entry.spec) {
        Ok(s) => s,
        Err(e) => {
            notes.push(format!("cannot parse spec: {e}"));
            return Some(failed(&entry.spec, entry.claim, notes));
        }
    };
    let group = match spec.build() {
        Ok(g) => g,
        Err(e) => {
            notes.push(format!("cannot build group: {e}"));
            return Some(failed(&entry.spec, entry.claim, notes));
        }
    };
    if let Some(cap) = max_order {
        if group.order() > cap {
            return None;
        }
    }

    let subgroup_counts = group.subgroup_counts_by_prime();
    let m_g = group.maximal_involutions().len();
    let nilpotent = group.is_nilpotent();
    let cyclic = group.is_cyclic();

    if group.order() < 3 {
        return Some(EntryRecord {
            spec: entry.spec.clone(),
            claim: entry.claim,
            order: group.order(),
            m_g,
            nilpotent,
            cyclic,
            subgroup_counts,
            expected: None,
            report: None,
            verdict: Verdict::Skipped,
            notes: vec!["order below 3 is outside the classification".into()],
        });
    }

    // subgroup-count congruence s_p = 1 (mod p)
    let mut sound = true;
    for &(p, s) in &subgroup_counts {
        if s % p != 1 {
            sound = false;
            notes.push(format!("s_{p} = {s} violates s_p = 1 (mod p)"));
        }
    }

    let graph = PowerGraph::from_group(&group);

    // pendant vertices are exactly the maximal involutions
    if graph.pendant_vertices() != group.maximal_involutions() {
        sound = false;
        notes.push("pendant vertices differ from maximal involutions".into());
    }

    // the power graph is complete exactly for cyclic prime-power groups
    let complete = graph.is_complete();
    let cyclic_pp = cyclic && arith::is_prime_power(group.order() as u64);
    if complete != cyclic_pp {
        sound = false;
        notes.push(format!(
            "completeness {complete} does not match cyclic-prime-power {cyclic_pp}"
        ));
    }

    // reconcile the three sources of a prediction
    let structural = structural_expected(&group);
    let formula = claim_formula(entry.claim, &spec);
    if let (Some(f), Some(s)) = (formula, structural) {
        let agree = match (f, s) {
            (Expected::Point(a), Expected::Point(b)) => a == b,
            (Expected::Point(a), Expected::Range(lo, hi)) => lo <= a && a <= hi,
            (Expected::Range(lo, hi), Expected::Point(b)) => lo <= b && b <= hi,
            (Expected::Range(a, b), Expected::Range(c, d)) => (a, b) == (c, d),
        };
        if !agree {
            sound = false;
            notes.push(format!("claim formula {f} contradicts structural prediction {s}"));
        }
    }
    if let (Some(shipped), Some(f)) = (entry.expected, formula) {
        if !f.contains(shipped) {
            sound = false;
            notes.push(format!(
                "catalog expected {shipped} contradicts claim formula {f}"
            ));
        }
    }
    let expected = match (entry.expected, structural) {
        (Some(v), _) => Some(Expected::Point(v)),
        (None, s) => s,
    };

    let report = rc_exact(&graph, &group, budget, &entry.spec);

    let verdict = match report.status {
        RcStatus::Exact => {
            let exact = report.exact.expect("exact status carries a value");
            let matches_expected = expected.is_none_or(|e| e.contains(exact));
            if !matches_expected {
                notes.push(format!(
                    "exact rc {exact} does not match expected {}",
                    expected.expect("present")
                ));
            }
            let implications_ok = check_implications(
                &group,
                &subgroup_counts,
                m_g,
                nilpotent,
                cyclic,
                exact,
                &mut notes,
            );
            if sound && matches_expected && implications_ok {
                Verdict::Pass
            } else {
                Verdict::Fail
            }
        }
        RcStatus::Interval => {
            let consistent =
                expected.is_none_or(|e| e.overlaps(report.lower, report.upper));
            if consistent && sound {
                notes.push(format!(
                    "budget exhausted; rc in {}..{} is consistent with the prediction but unconfirmed",
                    report.lower, report.upper
                ));
                Verdict::Inconclusive
            } else {
                notes.push(format!(
                    "budget exhausted and interval {}..{} cannot meet the prediction",
                    report.lower, report.upper
                ));
                Verdict::Fail
            }
        }
    };

    Some(EntryRecord {
        spec: entry.spec.clone(),
        claim: entry.claim,
        order: group.order(),
        m_g,
        nilpotent,
        cyclic,
        subgroup_counts,
        expected,
        report: Some(report),
        verdict,
        notes,
    })
}

/// The cross-cutting implications asserted on every solved entry.
fn check_implications(
    group: &Group,
    subgroup_counts: &[(u64, u64)],
    m_g: usize,
    nilpotent: bool,
    cyclic: bool,
    exact: u32,
    notes: &mut Vec<String>,
) -> bool {
    let mut ok = true;
    let fail = |msg: String, ok: &mut bool, notes: &mut Vec<String>| {
        *ok = false;
        notes.push(msg);
    };

    // rc = 2 forces a unique subgroup of every prime order
    if exact == 2 {
        for &(p, s) in subgroup_counts {
            if s != 1 {
                fail(
                    format!("rc = 2 but s_{p} = {s} is not 1"),
                    &mut ok,
                    notes,
                );
            }
        }
    }
    // maximal involutions pin the value down exactly
    if m_g >= 1 {
        let want = (m_g as u32).max(3);
        if exact != want {
            fail(
                format!("{m_g} maximal involutions force rc = {want}, got {exact}"),
                &mut ok,
                notes,
            );
        }
    } else if cyclic {
        let want = if arith::is_prime_power(group.order() as u64) { 1 } else { 2 };
        if exact != want {
            fail(
                format!("cyclic group forces rc = {want}, got {exact}"),
                &mut ok,
                notes,
            );
        }
    } else {
        if !(2..=3).contains(&exact) {
            fail(
                format!("noncyclic group without maximal involutions must have rc in 2..3, got {exact}"),
                &mut ok,
                notes,
            );
        }
        if nilpotent {
            let is_qp = is_quaternion_times_odd_cyclic(group).is_some();
            if (exact == 2) != is_qp {
                fail(
                    format!(
                        "nilpotent classification violated: rc = {exact}, recognizer = {is_qp}"
                    ),
                    &mut ok,
                    notes,
                );
            }
        }
        if subgroup_counts.iter().any(|&(_, s)| s > 1) && exact != 3 {
            fail(
                format!("repeated prime-order subgroups force rc = 3, got {exact}"),
                &mut ok,
                notes,
            );
        }
    }
    ok
}

impl VerificationReport {
    pub fn count(&self, v: Verdict) -> usize {
        self.records.iter().filter(|r| r.verdict == v).count()
    }

    pub fn has_failures(&self) -> bool {
        self.count(Verdict::Fail) > 0
    }

    pub fn has_inconclusive(&self) -> bool {
        self.count(Verdict::Inconclusive) > 0
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct RecordJson<'a> {
            group: &'a str,
            order: usize,
            edges: Option<usize>,
            m_g: usize,
            lower: Option<u32>,
            lower_reason: Option<&'a crate::solver::LowerReason>,
            upper: Option<u32>,
            exact: Option<u32>,
            status: Option<RcStatus>,
            nodes: Option<u64>,
            claim: Claim,
            expected: Option<Expected>,
            nilpotent: bool,
            cyclic: bool,
            subgroup_counts: &'a [(u64, u64)],
            verdict: Verdict,
            notes: &'a [String],
        }
        let rows: Vec<RecordJson> = self
            .records
            .iter()
            .map(|r| RecordJson {
                group: &r.spec,
                order: r.order,
                edges: r.report.as_ref().map(|rep| rep.edges),
                m_g: r.m_g,
                lower: r.report.as_ref().map(|rep| rep.lower),
                lower_reason: r.report.as_ref().map(|rep| &rep.lower_reason),
                upper: r.report.as_ref().map(|rep| rep.upper),
                exact: r.report.as_ref().and_then(|rep| rep.exact),
                status: r.report.as_ref().map(|rep| rep.status),
                nodes: r.report.as_ref().map(|rep| rep.nodes),
                claim: r.claim,
                expected: r.expected,
                nilpotent: r.nilpotent,
                cyclic: r.cyclic,
                subgroup_counts: &r.subgroup_counts,
                verdict: r.verdict,
                notes: &r.notes,
            })
            .collect();
        serde_json::to_string_pretty(&rows).expect("report serializes")
    }

    /// Fixed-width table plus a summary line.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<12} {:>5} {:>4} {:>5} {:>6} {:>5} {:>5} {:>5} {:>8} {:<24} {}\n",
            "group", "order", "|M|", "nilp", "cyclic", "lower", "upper", "exact",
            "expected", "claim", "verdict"
        ));
        for r in &self.records {
            let (lower, upper, exact) = match &r.report {
                Some(rep) => (
                    rep.lower.to_string(),
                    rep.upper.to_string(),
                    rep.exact.map_or("-".into(), |v| v.to_string()),
                ),
                None => ("-".into(), "-".into(), "-".into()),
            };
            out.push_str(&format!(
                "{:<12} {:>5} {:>4} {:>5} {:>6} {:>5} {:>5} {:>5} {:>8} {:<24} {:?}\n",
                r.spec,
                r.order,
                r.m_g,
                r.nilpotent,
                r.cyclic,
                lower,
                upper,
                exact,
                r.expected.map_or("-".to_string(), |e| e.to_string()),
                r.claim.token(),
                r.verdict
            ));
            for note in &r.notes {
                out.push_str(&format!("    note: {note}\n"));
            }
        }
        out.push_str(&format!(
            "pass={} fail={} inconclusive={} skipped={}\n",
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.count(Verdict::Inconclusive),
            self.count(Verdict::Skipped),
        ));
        out
    }
}
