//! Verification campaigns: exhaustive scans of enumerated families through
//! the per-instance verifiers, aggregated into a deterministic report.

use std::time::Instant;

use sek_core::enumerate::{enumerate_bipartite, enumerate_graphs};
use sek_core::extremal::{
    classify_cycle_extremal, classify_path_extremal, verify_edge_bound, verify_local_edge_bound,
    verify_spectral_bound, BoundMode, EqualityCase, ExtremalError, ForbiddenFamily,
};
use sek_core::graph::Graph;
use sek_core::graph6;

use crate::report::{fmt_value, CampaignReport};
use crate::Span;

/// Applies `f` to every item, fanning out over `jobs` threads in chunks;
/// results come back in input order.
pub fn par_map<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    if jobs <= 1 || items.len() <= 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(jobs);
    let mut out = Vec::with_capacity(items.len());
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| scope.spawn(|| part.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        for handle in handles {
            out.extend(handle.join().expect("campaign worker panicked"));
        }
    });
    out
}

/// Family scan behind the search subcommand: identical semantics to the
/// library's extremal search, with the eigenvalue pass fanned out over
/// `jobs` threads.
pub struct SearchOutcome {
    pub family_size: usize,
    pub min_value: f64,
    /// Canonical graph6 of every family member within `eps_eq` of the
    /// minimum, in enumeration (code) order.
    pub argmin: Vec<String>,
}

pub fn run_search(
    n: usize,
    t: usize,
    family: ForbiddenFamily,
    bipartite_only: bool,
    eps_eq: f64,
    jobs: usize,
) -> Result<SearchOutcome, String> {
    let min_t = if family == ForbiddenFamily::CycleFree { 3 } else { 2 };
    if t < min_t {
        return Err(format!("--t must be at least {min_t} for this family"));
    }
    let members = enumerate_graphs(n, |g| {
        if bipartite_only && !g.is_bipartite() {
            return false;
        }
        match family {
            ForbiddenFamily::CycleFree => !sek_core::forbidden::has_cycle(g, t).expect("t >= 3"),
            ForbiddenFamily::PathFree => !sek_core::forbidden::has_path(g, t),
        }
    })
    .map_err(|e| e.to_string())?;
    let values = par_map(&members, jobs, |g| {
        sek_core::spectral::least_eigenvalue(g).expect("n >= 1")
    });
    let min_value = values.iter().copied().fold(f64::INFINITY, f64::min);
    let argmin = members
        .iter()
        .zip(&values)
        .filter(|(_, &v)| v <= min_value + eps_eq)
        .map(|(g, _)| graph6::encode(g))
        .collect();
    Ok(SearchOutcome { family_size: members.len(), min_value, argmin })
}

pub struct SpectralCampaign {
    pub family: ForbiddenFamily,
    pub n: Span,
    pub t: Span,
    pub mode: BoundMode,
    pub eps_eq: f64,
    pub jobs: usize,
}

/// Scans every order in `n` and structure order in `t`: each family member
/// must respect the bound, and equality must coincide with the recognizer.
pub fn run_spectral_campaign(cfg: &SpectralCampaign) -> Result<CampaignReport, String> {
    let start = Instant::now();
    let campaign = match (cfg.family, cfg.mode) {
        (ForbiddenFamily::CycleFree, _) => "thm-cycle",
        (ForbiddenFamily::PathFree, _) => "thm-path",
    };
    let min_t = if cfg.family == ForbiddenFamily::CycleFree { 3 } else { 2 };
    if cfg.t.lo < min_t {
        return Err(format!("--t must be at least {min_t} for {campaign}"));
    }
    if cfg.n.lo < 1 || cfg.n.hi > 9 {
        return Err("--n must lie within 1..9 (exhaustive enumeration range)".into());
    }
    let mut report = CampaignReport::new(
        campaign,
        format!(
            "n={} t={} mode={} eps_eq={}",
            cfg.n,
            cfg.t,
            cfg.mode.as_str(),
            crate::report::fmt_f64(cfg.eps_eq)
        ),
    );

    for n in cfg.n.iter() {
        let graphs = enumerate_graphs(n, |g| {
            cfg.mode == BoundMode::LeastEigenvalue || g.is_bipartite()
        })
        .map_err(|e| e.to_string())?;
        for t in cfg.t.iter() {
            let outcomes = par_map(&graphs, cfg.jobs, |g| {
                let verdict =
                    verify_spectral_bound(g, t, cfg.family, cfg.mode, cfg.eps_eq).expect("valid instance");
                if !verdict.premise_ok {
                    return None;
                }
                let recognized = match cfg.family {
                    ForbiddenFamily::CycleFree => classify_cycle_extremal(g, t),
                    ForbiddenFamily::PathFree => classify_path_extremal(g, t),
                }
                .expect("order within the recognizer bound");
                Some((graph6::encode(g), verdict, recognized))
            });
            for (code, verdict, recognized) in outcomes.into_iter().flatten() {
                report.checked += 1;
                if verdict.violation {
                    report.violations.push(format!(
                        "graph6={code} n={n} t={t} lhs={} rhs={} slack={}",
                        fmt_value(verdict.lhs, false),
                        fmt_value(verdict.rhs, false),
                        fmt_value(verdict.slack, false),
                    ));
                }
                // The recognizer and the measured equality must agree.
                if verdict.equality != (recognized != EqualityCase::None) {
                    let detail = if verdict.equality {
                        "equality-without-recognized-shape"
                    } else {
                        "recognized-shape-without-equality"
                    };
                    report
                        .violations
                        .push(format!("graph6={code} n={n} t={t} detail={detail}"));
                }
                if verdict.equality {
                    report.equalities.push(format!(
                        "graph6={code} n={n} t={t} case={} value={}",
                        verdict.equality_case.as_str(),
                        fmt_value(verdict.lhs, false),
                    ));
                    report.record_case(verdict.equality_case);
                }
            }
        }
    }
    report.finalize();
    report.wall_time_ms = start.elapsed().as_millis();
    Ok(report)
}

pub struct EdgeBoundCampaign {
    pub x: Span,
    pub y: Span,
    pub k: Span,
    pub eps_eq: f64,
    pub jobs: usize,
    /// Check the bound per vertex neighborhood instead of per graph.
    pub local: bool,
}

/// Scans bipartite classes with distinguished sides over the requested
/// size and k ranges, through either the whole-graph edge bound or the
/// per-vertex neighborhood bound.
pub fn run_edge_bound_campaign(cfg: &EdgeBoundCampaign) -> Result<CampaignReport, String> {
    let start = Instant::now();
    let campaign = if cfg.local { "lemma2" } else { "lemma1" };
    if cfg.k.lo < 1 {
        return Err("--k must be at least 1".into());
    }
    if cfg.x.lo < 1 {
        return Err("--x must be at least 1".into());
    }
    if cfg.x.hi * cfg.y.hi > 25 {
        return Err("--x times --y must stay within 25 (bipartite enumeration range)".into());
    }
    let mut report = CampaignReport::new(
        campaign,
        format!(
            "x={} y={} k={} eps_eq={}",
            cfg.x,
            cfg.y,
            cfg.k,
            crate::report::fmt_f64(cfg.eps_eq)
        ),
    );
    let mut premise_filtered = 0usize;

    for x in cfg.x.iter() {
        for y in cfg.y.iter() {
            let classes = enumerate_bipartite(x, y, |_, _| true).map_err(|e| e.to_string())?;
            for k in cfg.k.iter() {
                if x < k || y + 1 < k {
                    continue;
                }
                if cfg.local {
                    scan_local(&classes, x, y, k, cfg.jobs, &mut report, &mut premise_filtered);
                } else {
                    scan_global(&classes, x, y, k, cfg.jobs, &mut report);
                }
            }
        }
    }
    if cfg.local {
        report.premise_filtered = Some(premise_filtered);
    }
    report.finalize();
    report.wall_time_ms = start.elapsed().as_millis();
    Ok(report)
}

fn scan_global(
    classes: &[(Graph, sek_core::graph::Bipartition)],
    x: usize,
    y: usize,
    k: usize,
    jobs: usize,
    report: &mut CampaignReport,
) {
    let outcomes = par_map(classes, jobs, |(g, bp)| {
        (graph6::encode(g), verify_edge_bound(g, bp, k).expect("valid bipartition"))
    });
    for (code, verdict) in outcomes {
        report.checked += 1;
        if verdict.violation {
            report.violations.push(format!(
                "graph6={code} x={x} y={y} k={k} lhs={} rhs={}",
                fmt_value(verdict.lhs, true),
                fmt_value(verdict.rhs, true),
            ));
        }
        if verdict.equality {
            if verdict.equality_case == EqualityCase::None {
                report.violations.push(format!(
                    "graph6={code} x={x} y={y} k={k} detail=equality-without-recognized-shape"
                ));
            }
            report.equalities.push(format!(
                "graph6={code} x={x} y={y} k={k} case={}",
                verdict.equality_case.as_str()
            ));
            report.record_case(verdict.equality_case);
        }
    }
}

fn scan_local(
    classes: &[(Graph, sek_core::graph::Bipartition)],
    x: usize,
    y: usize,
    k: usize,
    jobs: usize,
    report: &mut CampaignReport,
    premise_filtered: &mut usize,
) {
    enum GraphScan {
        Filtered,
        Checked(Vec<(usize, sek_core::extremal::BoundReport)>),
    }
    let outcomes = par_map(classes, jobs, |(g, _)| {
        let mut verdicts = Vec::new();
        for u in g.vertices() {
            match verify_local_edge_bound(g, u, k) {
                Ok(verdict) => verdicts.push((u, verdict)),
                Err(ExtremalError::PathPresent { .. })
                | Err(ExtremalError::ForbiddenComponent { .. }) => return (graph6::encode(g), GraphScan::Filtered),
                Err(other) => panic!("unexpected verifier error: {other}"),
            }
        }
        (graph6::encode(g), GraphScan::Checked(verdicts))
    });
    for (code, scan) in outcomes {
        let verdicts = match scan {
            GraphScan::Filtered => {
                *premise_filtered += 1;
                continue;
            }
            GraphScan::Checked(verdicts) => verdicts,
        };
        for (u, verdict) in verdicts {
            report.checked += 1;
            if verdict.violation {
                report.violations.push(format!(
                    "graph6={code} x={x} y={y} k={k} u={u} lhs={} rhs={}",
                    fmt_value(verdict.lhs, true),
                    fmt_value(verdict.rhs, true),
                ));
            }
            if verdict.equality {
                if verdict.equality_case == EqualityCase::None {
                    report.violations.push(format!(
                        "graph6={code} x={x} y={y} k={k} u={u} \
                         detail=equality-without-recognized-shape"
                    ));
                }
                report.equalities.push(format!(
                    "graph6={code} x={x} y={y} k={k} u={u} case={}",
                    verdict.equality_case.as_str()
                ));
                report.record_case(verdict.equality_case);
            }
        }
    }
}
