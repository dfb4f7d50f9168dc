//! Grid drivers. Each run evaluates independent records in parallel and
//! returns them sorted, so output does not depend on scheduling.

use std::time::Instant;

use rayon::prelude::*;
use wzcheck_core::congruence::{self, CongruenceSpec, Range, Statement, SumFamily, WeightKind};
use wzcheck_core::identities::{self, IdentityParams, Theorem};
use wzcheck_core::wz::{self, Certificate, CertificateId, Mutation, RecurrenceGrid, TermPoint};
use wzcheck_core::Error;

use crate::record::{sort_records, Outcome, RationalText, Record};
use crate::CliError;

/// Default cap on `p^r`, the number of terms in a full-range sum.
pub const DEFAULT_MAX_TERMS: u64 = 20_000;

fn timed<F: FnOnce() -> Record>(timing: bool, f: F) -> Record {
    let start = Instant::now();
    let mut r = f();
    if timing {
        r.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    r
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityRun {
    pub theorems: Vec<Theorem>,
    pub ell_max: i64,
    pub s_max: i64,
    pub m_extent: i64,
    pub replay: bool,
    pub special: bool,
    pub trace: bool,
    pub timing: bool,
}

impl IdentityRun {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.theorems.is_empty() {
            return Err(CliError::Config("no theorem selected".into()));
        }
        if self.ell_max < 1 || self.s_max < 0 || self.m_extent < 0 {
            return Err(CliError::Config(
                "need --lmax >= 1, --smax >= 0, --mextent >= 0".into(),
            ));
        }
        Ok(())
    }

    fn params(&self) -> Vec<(Theorem, IdentityParams)> {
        let mut out = Vec::new();
        for &t in &self.theorems {
            for ell in 1..=self.ell_max {
                for s in 0..=self.s_max {
                    for m in s..=s + self.m_extent {
                        out.push((t, IdentityParams::new(ell, s, m).expect("grid is valid")));
                    }
                }
            }
        }
        out
    }
}

fn param_list(p: &IdentityParams) -> [(&'static str, i64); 3] {
    [("l", p.ell()), ("s", p.s()), ("M", p.m())]
}

fn identity_record(t: Theorem, p: &IdentityParams, trace: bool) -> Record {
    let report = if trace {
        identities::verify_identity_traced(t, p)
    } else {
        identities::verify_identity(t, p)
    };
    let mut r = Record::new(
        "identity",
        t.to_string(),
        &param_list(p),
        Outcome::from_bool(report.equal),
    )
    .with_sides(&report.lhs, &report.rhs);
    r.trace = report
        .trace
        .map(|terms| terms.iter().map(RationalText::from).collect());
    r
}

fn replay_record(t: Theorem, p: &IdentityParams) -> Record {
    match identities::replay_telescoping_proof(t, p) {
        Ok(replay) => {
            let detail = format!(
                "multiplier={} termwise={} lhs_matches={} rhs_matches={} multiplier_consistent={} partial_sums={}",
                RationalText::from(&replay.multiplier),
                replay.termwise,
                replay.lhs_matches,
                replay.rhs_matches,
                replay.multiplier_consistent,
                replay.partial_sums
            );
            Record::new(
                "replay",
                t.to_string(),
                &param_list(p),
                Outcome::from_bool(replay.passed()),
            )
            .with_sides(&replay.report.lhs, &replay.report.rhs)
            .with_detail(detail)
        }
        Err(Error::Pole) => Record::new(
            "replay",
            t.to_string(),
            &param_list(p),
            Outcome::NotApplicable,
        )
        .with_detail("telescoping multiplier has a pole")
        .report_only(),
        Err(e) => Record::new("replay", t.to_string(), &param_list(p), Outcome::Fail)
            .with_detail(e.to_string()),
    }
}

pub fn run_identities(cfg: &IdentityRun) -> Result<Vec<Record>, CliError> {
    cfg.validate()?;
    let points = cfg.params();
    let mut records: Vec<Record> = points
        .par_iter()
        .map(|(t, p)| timed(cfg.timing, || identity_record(*t, p, cfg.trace)))
        .collect();
    if cfg.replay {
        records.par_extend(
            points
                .par_iter()
                .map(|(t, p)| timed(cfg.timing, || replay_record(*t, p))),
        );
    }
    if cfg.special {
        let cases: Vec<(Theorem, i64, i64)> = cfg
            .theorems
            .iter()
            .flat_map(|&t| {
                (1..=cfg.ell_max).flat_map(move |ell| (0..=cfg.m_extent).map(move |m| (t, ell, m)))
            })
            .collect();
        records.par_extend(cases.par_iter().map(|&(t, ell, m)| {
            timed(cfg.timing, || {
                let params = [("l", ell), ("M", m)];
                match identities::special_case_res(t, ell, m) {
                    Ok(rep) => Record::new(
                        "special-case",
                        t.to_string(),
                        &params,
                        Outcome::from_bool(rep.equal),
                    )
                    .with_sides(&rep.lhs, &rep.rhs),
                    Err(e) => Record::new("special-case", t.to_string(), &params, Outcome::Fail)
                        .with_detail(e.to_string()),
                }
            })
        }));
    }
    sort_records(&mut records);
    Ok(records)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WzRun {
    pub certificates: Vec<CertificateId>,
    pub symbolic: bool,
    pub grid: bool,
    pub ratios: bool,
    pub edges: bool,
    pub ell_max: i64,
    pub s_max: i64,
    pub n_extent: i64,
    /// Target number of ratio-consistency points per certificate.
    pub samples: usize,
    /// Test hook: double `G` before checking.
    pub mutate_g: bool,
    pub timing: bool,
}

impl WzRun {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.certificates.is_empty() {
            return Err(CliError::Config("no certificate selected".into()));
        }
        if self.ell_max < 1 || self.s_max < 0 || self.n_extent < 0 {
            return Err(CliError::Config(
                "need --lmax >= 1, --smax >= 0, --nextent >= 0".into(),
            ));
        }
        if !(self.symbolic || self.grid || self.ratios || self.edges) {
            return Err(CliError::Config("no check selected".into()));
        }
        Ok(())
    }

    fn grid(&self) -> RecurrenceGrid {
        RecurrenceGrid {
            ell_max: self.ell_max,
            s_max: self.s_max,
            n_extent: self.n_extent,
        }
    }

    fn certificate(&self, id: CertificateId) -> Certificate {
        let cert = Certificate::new(id);
        if self.mutate_g {
            cert.mutated(&Mutation::ScaleG(2))
        } else {
            cert
        }
    }
}

fn point_params(pt: &TermPoint) -> [(&'static str, i64); 4] {
    [("l", pt.ell), ("s", pt.s), ("n", pt.n), ("k", pt.k)]
}

fn symbolic_record(id: CertificateId) -> Record {
    let residual = wz::symbolic_residual(id, &wz::ratio_triple(id));
    let ok = residual.is_zero();
    let detail = if ok {
        "symbolic identity: ZERO polynomial".to_string()
    } else {
        format!("symbolic identity: nonzero residual {residual}")
    };
    Record::new("wz-symbolic", id.name(), &[], Outcome::from_bool(ok)).with_detail(detail)
}

fn recurrence_record(cert: &Certificate, pt: &TermPoint) -> Record {
    let params = point_params(pt);
    match cert.recurrence_sides(pt) {
        Ok((lhs, rhs)) => Record::new(
            "wz-recurrence",
            cert.id.name(),
            &params,
            Outcome::from_bool(lhs == rhs),
        )
        .with_sides(&lhs, &rhs),
        Err(e) => Record::new("wz-recurrence", cert.id.name(), &params, Outcome::Fail)
            .with_detail(e.to_string()),
    }
}

fn ratio_record(cert: &Certificate, triple: &wz::RatioTriple, pt: &TermPoint) -> Record {
    let params = point_params(pt);
    match wz::check_ratio_consistency_with(cert, triple, pt) {
        Ok(ok) => Record::new("wz-ratio", cert.id.name(), &params, Outcome::from_bool(ok)),
        Err(Error::SkippedPoint(why)) => {
            Record::new("wz-ratio", cert.id.name(), &params, Outcome::Skip).with_detail(why)
        }
        Err(e) => Record::new("wz-ratio", cert.id.name(), &params, Outcome::Fail)
            .with_detail(e.to_string()),
    }
}

/// Points just outside the certificate domain: `k = 0` and `n = k - 1`.
fn edge_points(cfg: &WzRun) -> Vec<TermPoint> {
    let mut out = Vec::new();
    for ell in 1..=cfg.ell_max {
        for s in 0..=cfg.s_max {
            for n in s..=s + cfg.n_extent {
                out.push(TermPoint::raw(ell, s, n, 0));
                out.push(TermPoint::raw(ell, s, n, n + 1));
            }
        }
    }
    out
}

fn edge_record(cert: &Certificate, pt: &TermPoint) -> Record {
    let params = point_params(pt);
    let r = match cert.recurrence_sides(pt) {
        Ok((lhs, rhs)) => Record::new(
            "wz-edge",
            cert.id.name(),
            &params,
            Outcome::from_bool(lhs == rhs),
        )
        .with_sides(&lhs, &rhs),
        Err(e) => Record::new("wz-edge", cert.id.name(), &params, Outcome::Skip)
            .with_detail(e.to_string()),
    };
    r.report_only()
}

/// Every `stride`-th grid point, giving about `samples` points.
fn sample_points(grid: &RecurrenceGrid, samples: usize) -> Vec<TermPoint> {
    let all: Vec<TermPoint> = grid.points().collect();
    if samples == 0 {
        return Vec::new();
    }
    let stride = all.len().div_ceil(samples).max(1);
    all.into_iter().step_by(stride).collect()
}

pub fn run_wz(cfg: &WzRun) -> Result<Vec<Record>, CliError> {
    cfg.validate()?;
    let grid = cfg.grid();
    let mut records = Vec::new();
    for &id in &cfg.certificates {
        let cert = cfg.certificate(id);
        if cfg.symbolic {
            records.push(timed(cfg.timing, || symbolic_record(id)));
        }
        if cfg.grid {
            let points: Vec<TermPoint> = grid.points().collect();
            records.par_extend(
                points
                    .par_iter()
                    .map(|pt| timed(cfg.timing, || recurrence_record(&cert, pt))),
            );
        }
        if cfg.ratios {
            let triple = wz::ratio_triple(id);
            let points = sample_points(&grid, cfg.samples);
            records.par_extend(
                points
                    .par_iter()
                    .map(|pt| timed(cfg.timing, || ratio_record(&cert, &triple, pt))),
            );
        }
        if cfg.edges {
            let points = edge_points(cfg);
            records.par_extend(
                points
                    .par_iter()
                    .map(|pt| timed(cfg.timing, || edge_record(&cert, pt))),
            );
        }
    }
    sort_records(&mut records);
    Ok(records)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceRun {
    pub primes: Vec<u64>,
    pub r_max: u32,
    pub families: Vec<SumFamily>,
    /// `None` selects every weight compatible with each family.
    pub weights: Option<Vec<WeightKind>>,
    /// `None` selects the half range for every weight and the full range
    /// where a congruence is stated for it.
    pub ranges: Option<Vec<Range>>,
    pub force_p3: bool,
    pub max_terms: u64,
    pub show_sum: bool,
    pub timing: bool,
}

impl CongruenceRun {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.primes.is_empty() || self.r_max == 0 {
            return Err(CliError::Config(
                "need at least one prime and --rmax >= 1".into(),
            ));
        }
        for &p in &self.primes {
            if p.is_multiple_of(2)
                || p >= wzcheck_core::exact::PRIME_BOUND
                || !wzcheck_core::exact::is_prime(p)
            {
                return Err(CliError::Config(format!(
                    "{p} is not an odd prime below 10^6"
                )));
            }
        }
        if self.families.is_empty() {
            return Err(CliError::Config("no family selected".into()));
        }
        Ok(())
    }

    fn weights_for(&self, family: SumFamily) -> Vec<WeightKind> {
        let compatible = |w: &WeightKind| match family {
            SumFamily::B => *w != WeightKind::MixedC,
            SumFamily::C => *w != WeightKind::MixedB,
        };
        match &self.weights {
            Some(ws) => ws.iter().copied().filter(compatible).collect(),
            None => [
                WeightKind::Linear,
                WeightKind::Cube,
                WeightKind::MixedB,
                WeightKind::MixedC,
            ]
            .into_iter()
            .filter(compatible)
            .collect(),
        }
    }

    fn ranges_for(&self, weight: WeightKind) -> Vec<Range> {
        match &self.ranges {
            Some(rs) => rs.clone(),
            None => match weight {
                WeightKind::MixedB | WeightKind::MixedC => vec![Range::Half, Range::Full],
                _ => vec![Range::Half],
            },
        }
    }
}

struct Task {
    family: SumFamily,
    weight: WeightKind,
    p: u64,
    r: u32,
    range: Range,
}

fn congruence_subject(family: SumFamily, weight: WeightKind, range: Range, what: &str) -> String {
    format!(
        "{}/{}/{}/{}",
        family.name(),
        weight.name(),
        range.name(),
        what
    )
}

fn congruence_records(task: &Task, cfg: &CongruenceRun) -> Vec<Record> {
    let params = [("p", task.p as i64), ("r", i64::from(task.r))];
    let skip = |why: String| {
        vec![Record::new(
            "congruence",
            congruence_subject(task.family, task.weight, task.range, "-"),
            &params,
            Outcome::Skip,
        )
        .with_detail(why)
        .report_only()]
    };
    let q = task.p.checked_pow(task.r);
    if q.is_none_or(|q| q > cfg.max_terms) {
        return skip(format!("p^r exceeds --max-terms {}", cfg.max_terms));
    }
    let built = if cfg.force_p3 {
        CongruenceSpec::forced(task.family, task.weight, task.p, task.r, task.range)
    } else {
        CongruenceSpec::new(task.family, task.weight, task.p, task.r, task.range)
    };
    let spec = match built {
        Ok(spec) => spec,
        Err(e) => return skip(e.to_string()),
    };
    let statements = congruence::statements(&spec);
    if statements.is_empty() {
        return skip("no congruence stated for this weight and range".into());
    }
    let start = Instant::now();
    let sum = congruence::exact_sum(&spec);
    let sum_ms = start.elapsed().as_secs_f64() * 1e3;
    statements
        .into_iter()
        .map(|st: Statement| {
            let start = Instant::now();
            let subject = congruence_subject(task.family, task.weight, task.range, st.label());
            let mut rec = match congruence::check_sum(&spec, st, sum.clone()) {
                Ok(rep) => {
                    let mut rec = Record::new(
                        "congruence",
                        subject,
                        &[
                            ("p", task.p as i64),
                            ("r", i64::from(task.r)),
                            ("e", i64::from(rep.modulus.exponent())),
                        ],
                        Outcome::from_bool(rep.pass),
                    );
                    rec.expected = Some(rep.expected.to_string());
                    rec.residue = Some(rep.residue.to_string());
                    rec.modulus = Some(rep.modulus.modulus().to_string());
                    rec.claim = Some(rep.status().name());
                    rec.asserted = rep.asserted();
                    if cfg.show_sum {
                        rec.sum = Some((&rep.sum).into());
                    }
                    if !rec.asserted {
                        rec.detail =
                            Some("prime below the stated range; reported, not asserted".into());
                    }
                    rec
                }
                Err(e) => Record::new("congruence", subject, &params, Outcome::Fail)
                    .with_detail(e.to_string()),
            };
            if cfg.timing {
                rec.elapsed_ms = Some(sum_ms + start.elapsed().as_secs_f64() * 1e3);
            }
            rec
        })
        .collect()
}

pub fn run_congruences(cfg: &CongruenceRun) -> Result<Vec<Record>, CliError> {
    cfg.validate()?;
    let mut tasks = Vec::new();
    for &family in &cfg.families {
        for weight in cfg.weights_for(family) {
            for range in cfg.ranges_for(weight) {
                for &p in &cfg.primes {
                    for r in 1..=cfg.r_max {
                        tasks.push(Task {
                            family,
                            weight,
                            p,
                            r,
                            range,
                        });
                    }
                }
            }
        }
    }
    let mut records: Vec<Record> = tasks
        .par_iter()
        .flat_map_iter(|t| congruence_records(t, cfg))
        .collect();
    sort_records(&mut records);
    Ok(records)
}
