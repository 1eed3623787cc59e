//! Plain-text tables.

use qpb_core::bundle_calculus::Qpc;
use qpb_core::replicate::Report;
use qpb_core::solver::{CriticalPoint, Outcome, PointKind};
use qpb_core::verify::{GateReport, LawResult};
use qpb_core::{ApproxC, ExactC};

pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut w: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (i, c) in r.iter().enumerate() {
            w[i] = w[i].max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{c}{}", " ".repeat(w[i] - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(headers.to_vec());
    out += &line(w.iter().map(|n| "-".repeat(*n)).collect::<Vec<_>>().iter().map(|s| s.as_str()).collect());
    for r in rows {
        out += &line(r.iter().map(|s| s.as_str()).collect());
    }
    out
}

fn mark(ok: bool) -> String {
    if ok { "PASS" } else { "FAIL" }.to_string()
}

pub fn laws(rs: &[LawResult]) -> String {
    let rows: Vec<Vec<String>> = rs
        .iter()
        .map(|r| vec![r.suite.clone(), r.name.clone(), mark(r.passed), r.detail.clone()])
        .collect();
    let failed = rs.iter().filter(|r| !r.passed).count();
    format!("{}\n{} laws, {failed} failed\n", table(&["suite", "law", "result", "detail"], &rows), rs.len())
}

fn approx_pair(w: &Qpc<ApproxC>) -> String {
    format!("({:.6}, {:.6})", w.lambda0, w.lambda1)
}

fn exact_pair(w: &Qpc<ExactC>) -> String {
    format!("({}, {})", w.lambda0, w.lambda1)
}

fn kind(k: PointKind) -> &'static str {
    match k {
        PointKind::Flat => "flat",
        PointKind::YmNonflat => "ym_nonflat",
        PointKind::Matter => "matter",
    }
}

fn point_row(i: usize, p: &CriticalPoint) -> Vec<String> {
    let omega = p.omega.as_ref().map(exact_pair).unwrap_or_else(|| approx_pair(&p.approx_omega));
    let sections = match (&p.sections, &p.approx_sections) {
        (Some((a, b)), _) => format!("[{}, {}] [{}, {}]", a.p[0], a.p[1], b.p[0], b.p[1]),
        (None, Some((a, b))) => format!("[{:.6}, {:.6}] [{:.6}, {:.6}]", a.p[0], a.p[1], b.p[0], b.p[1]),
        _ => "-".into(),
    };
    let c = &p.classification;
    vec![
        i.to_string(),
        omega,
        sections,
        kind(c.kind).into(),
        c.action.as_ref().map(|a| a.to_string()).unwrap_or_else(|| format!("{:.6e}", c.action_approx)),
        c.orbit_fixed.map(|b| b.to_string()).unwrap_or_else(|| "-".into()),
        if p.certified { "exact" } else { "approximate" }.into(),
        p.iterations.to_string(),
    ]
}

pub fn outcomes(out: &[Outcome], with_sections: bool) -> String {
    let mut rows = Vec::new();
    let mut failed = Vec::new();
    for (i, o) in out.iter().enumerate() {
        match o {
            Outcome::Converged(p) => rows.push(point_row(i, p)),
            Outcome::Failed { seed, error } => failed.push(format!("seed {seed:?}: {error}")),
        }
    }
    let mut headers = vec!["#", "omega (l0, l1)", "T1 T2", "kind", "action", "orbit fixed", "certificate", "iter"];
    if !with_sections {
        headers.remove(2);
        for r in &mut rows {
            r.remove(2);
        }
    }
    let mut s = table(&headers, &rows);
    let certified = out.iter().filter_map(|o| o.point()).filter(|p| p.certified).count();
    s += &format!("\n{} seeds, {} converged, {certified} certified exactly\n", out.len(), rows.len());
    for f in failed {
        s += &format!("failed: {f}\n");
    }
    s
}

pub fn replicate(r: &Report) -> String {
    let rows: Vec<Vec<String>> = r
        .claims
        .iter()
        .map(|c| vec![c.id.clone(), mark(c.passed), c.published.clone(), c.computed.clone(), c.statement.clone()])
        .collect();
    let mut s = format!("calibration: {}\n", r.calibration);
    if !r.flipped.is_empty() {
        let f: Vec<String> = r.flipped.iter().map(|f| f.to_string()).collect();
        s += &format!("flipped: {}\n", f.join(", "));
    }
    s += "\n";
    s += &table(&["claim", "result", "published", "computed", "statement"], &rows);
    let failed = r.claims.iter().filter(|c| !c.passed).count();
    s += &format!("\n{} claims, {failed} failed\n", r.claims.len());
    for n in &r.notes {
        s += &format!("note: {n}\n");
    }
    s
}

pub fn gate(reports: &[GateReport]) -> String {
    let names: Vec<String> = reports[0].checks.iter().map(|c| c.0.clone()).collect();
    let mut headers = vec!["calibration", "gate"];
    let idx: Vec<String> = (1..=names.len()).map(|i| format!("c{i}")).collect();
    headers.extend(idx.iter().map(|s| s.as_str()));
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            let mut row = vec![r.calibration.to_string(), mark(r.passed)];
            row.extend(r.checks.iter().map(|c| if c.1 { "ok" } else { "x" }.to_string()));
            row
        })
        .collect();
    let mut s = table(&headers, &rows);
    s += "\n";
    for (i, n) in names.iter().enumerate() {
        s += &format!("c{}: {n}\n", i + 1);
    }
    s
}
