//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Expected values come from the brute-force helpers at the
//! bottom of this file, never from the library's own search code.

use std::process::Command;
use std::time::Instant;

use pollyanna_core::color::{color_thm5a, verify_thm5b, ColorOptions, TheoremId};
use pollyanna_core::decompose::decompose_auto;
use pollyanna_core::detect::is_isomorphic;
use pollyanna_core::edge_partition::{edge_clique_partition, fan_of_cliques, fan_structure};
use pollyanna_core::graph6::parse_graph6;
use pollyanna_core::harness::enumerate::enumerate_small;
use pollyanna_core::harness::run::{verify_run, RunConfig, RunReport, Source};
use pollyanna_core::oracle::{chromatic_number, clique_number, max_clique, ramsey_upper, OracleCaps};
use pollyanna_core::patterns::{self, PatternId, PatternInstance, PatternParams, StarConvention};
use pollyanna_core::properties::{check_property, PropertyId, PropertyParams, Status};
use pollyanna_core::Graph;

type Check = fn() -> Result<String, String>;

fn main() {
    let checks: [(&str, &str, Check); 10] = [
        ("AC-1", "diamond-free graphs with omega >= 3 have S empty", ac1),
        ("AC-2", "properties 4 to 8 hold on their hypothesis classes", ac2),
        ("AC-3", "fourth colorer within 2w + w*C(w,2) + 2", ac3),
        ("AC-4", "first colorer within 2w + w^2*C(w-1,2) + C at t = 2", ac4),
        ("AC-5", "sampled alpha-block lifting at s = t = k = 2", ac5),
        ("AC-6", "fan graphs: partition, D1, chi = omega, budgets", ac6),
        ("AC-7", "exact oracles agree with exhaustive checkers", ac7),
        ("AC-8", "Ramsey binomial bound values and symmetry", ac8),
        ("AC-9", "pattern constructor sizes", ac9),
        ("AC-10", "reproducible reports and exit codes", ac10),
    ];
    let mut failed = 0;
    for (id, title, check) in checks {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("{id} PASS {title} [{detail}] ({secs:.1}s)"),
            Err(detail) => {
                failed += 1;
                println!("{id} FAIL {title} [{detail}] ({secs:.1}s)");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(cfg: &RunConfig) -> Result<RunReport, String> {
    verify_run(cfg).map_err(|e| e.to_string())
}

fn enumerate_config(n_max: usize) -> RunConfig {
    let mut cfg = RunConfig::new(Source::Enumerate { n_max });
    cfg.caps = Some(OracleCaps::default());
    cfg
}

fn clean(report: &RunReport) -> Result<(), String> {
    let a = &report.aggregates;
    ensure(a.violations == 0 && report.violations.is_empty(), || format!("{} violations, first {:?}", a.violations, report.violations.first()))?;
    ensure(a.undecided == 0, || format!("{} undecided", a.undecided))?;
    ensure(a.errors == 0, || {
        let e = report.records.iter().find(|r| r.error.is_some()).unwrap();
        format!("{} errors, first on {}: {}", a.errors, e.graph6, e.error.as_ref().unwrap())
    })
}

fn ac1() -> Result<String, String> {
    let mut cfg = enumerate_config(8);
    cfg.class = Some("diamond-free".into());
    cfg.min_omega = Some(3);
    cfg.properties = vec![PropertyId::P1];
    let report = run(&cfg)?;
    clean(&report)?;
    let mut cliques_checked = 0;
    for r in &report.records {
        let m = matrix(&parse_graph6(&r.graph6).map_err(|e| e.to_string())?);
        ensure(!has_induced(&m, &matrix(&patterns::diamond())) && omega_brute(&m) >= 3, || format!("{} is not a member", r.graph6))?;
        ensure(r.properties[0].status == Status::Holds, || format!("checker fails on {}", r.graph6))?;
        // every maximum clique, not only the one the library picks
        for k in maximum_cliques(&m) {
            cliques_checked += 1;
            let s = (0..m.len())
                .filter(|&u| !k.contains(&u))
                .filter(|&u| k.iter().filter(|&&x| !m[u][x]).count() == 1)
                .count();
            ensure(s == 0, || format!("S nonempty on {} for K = {k:?}", r.graph6))?;
        }
    }
    ensure(report.aggregates.members > 0, || "no members".into())?;
    Ok(format!(
        "{} graphs, {} members, {} maximum cliques, 0 violations",
        report.aggregates.graphs_scanned, report.aggregates.members, cliques_checked
    ))
}

fn ac2() -> Result<String, String> {
    let params = PropertyParams::default();
    let mut parts = Vec::new();
    for p in [PropertyId::P4, PropertyId::P5, PropertyId::P6, PropertyId::P7, PropertyId::P8] {
        let mut cfg = enumerate_config(8);
        cfg.class = Some(p.to_string());
        cfg.properties = vec![p];
        cfg.cross_check = false;
        let report = run(&cfg)?;
        clean(&report)?;
        let counts = report.aggregates.properties[&p];
        ensure(counts.checked == report.aggregates.members && counts.holds == counts.checked, || format!("{p}: {counts:?}"))?;
        for r in &report.records {
            let g = parse_graph6(&r.graph6).map_err(|e| e.to_string())?;
            let dec = decompose_auto(&g, params.t).map_err(|e| e.to_string())?;
            let w = dec.omega() as u128;
            let (set, bound) = match p {
                PropertyId::P4 => (dec.t_prime, w),
                PropertyId::P5 => (dec.t, w * choose(w - 1, 2)),
                PropertyId::P6 => (dec.s_prime.union(&dec.s_t_overlap), 1),
                PropertyId::P7 => (dec.t_prime, 1),
                _ => (dec.t, w * w * choose(w - 1, 2)),
            };
            let chi = chi_of_set(&matrix(&g), &set.to_vec()) as u128;
            let rep = &r.properties[0];
            ensure(rep.measured == Some(chi) && rep.bound == Some(bound), || {
                format!("{p} on {}: report {:?}/{:?}, expected {chi}/{bound}", r.graph6, rep.measured, rep.bound)
            })?;
            ensure(chi <= bound, || format!("{p} violated on {}", r.graph6))?;
            ensure(rep.subclaims.iter().all(|s| s.holds), || format!("{p} sub-claim fails on {}", r.graph6))?;
        }
        ensure(report.aggregates.members > 0, || format!("{p} has no members"))?;
        parts.push(format!("{p} {}", report.aggregates.members));
    }
    Ok(format!("members {}, 0 violations, 0 undecided", parts.join(", ")))
}

fn theorem_sweep(th: TheoremId, min_omega: Option<usize>, bound: fn(u128, u128) -> u128) -> Result<String, String> {
    let mut cfg = enumerate_config(8);
    cfg.theorem = Some(th);
    cfg.min_omega = min_omega;
    let report = run(&cfg)?;
    clean(&report)?;
    let mut worst = (0u128, 1u128);
    for r in &report.records {
        let g = parse_graph6(&r.graph6).map_err(|e| e.to_string())?;
        let m = matrix(&g);
        let cert = r.certificate.as_ref().ok_or_else(|| format!("no certificate for {}", r.graph6))?;
        let w = omega_brute(&m);
        let expected = bound(w as u128, cert.c_value as u128);
        ensure(cert.ok && proper(&m, &cert.coloring), || format!("bad coloring on {}", r.graph6))?;
        ensure(cert.bound_value == expected, || format!("bound {} != {expected} on {}", cert.bound_value, r.graph6))?;
        ensure(cert.palette_used as u128 <= expected && cert.max_color as u128 <= expected, || format!("palette over bound on {}", r.graph6))?;
        let chi = chi_of_set(&m, &(0..m.len()).collect::<Vec<_>>()) as u128;
        ensure(chi <= expected, || format!("chi {chi} over bound on {}", r.graph6))?;
        if cert.max_color as u128 * worst.1 > worst.0 * expected {
            worst = (cert.max_color as u128, expected);
        }
    }
    ensure(report.aggregates.members > 0, || "no members".into())?;
    Ok(format!(
        "{} members of {} graphs, 0 violations, tightest max color {}/{}",
        report.aggregates.members, report.aggregates.graphs_scanned, worst.0, worst.1
    ))
}

fn ac3() -> Result<String, String> {
    theorem_sweep(TheoremId::Thm4, Some(3), |w, _| 2 * w + w * choose(w, 2) + 2)
}

fn ac4() -> Result<String, String> {
    theorem_sweep(TheoremId::Thm1, None, |w, c| 2 * w + w * w * choose(w.saturating_sub(1), 2) + c)
}

fn ac5() -> Result<String, String> {
    let cfg = RunConfig::from_json(
        r#"{"source":{"kind":"sample","n_min":8,"n_max":10,"edge_prob":0.25,"count":600},
            "theorem":"THM2","args":{"s":2,"t":2,"k":2},"seed":2024,
            "caps":{"chi":16,"chi_n":12}}"#,
    )
    .map_err(|e| e.to_string())?;
    let report = run(&cfg)?;
    clean(&report)?;
    ensure(report.aggregates.members >= 500, || format!("only {} members", report.aggregates.members))?;
    let mut lifted = 0;
    for r in &report.records {
        let g = parse_graph6(&r.graph6).map_err(|e| e.to_string())?;
        let m = matrix(&g);
        ensure((8..=10).contains(&m.len()), || format!("{} has {} vertices", r.graph6, m.len()))?;
        let cert = r.certificate.as_ref().ok_or_else(|| format!("no certificate for {}", r.graph6))?;
        ensure(cert.ok && proper(&m, &cert.coloring), || format!("bad coloring on {}", r.graph6))?;
        ensure(cert.findings.is_empty(), || format!("finding on {}: {:?}", r.graph6, cert.findings))?;
        let w = omega_brute(&m) as u128;
        let c = cert.c_value as u128;
        // alpha = R(w-1, 2) + w*C(w,1) with R(a, 2) = a, m(w) = w + C*w*C(w-1,2), g(w) = m(w)*alpha
        let alpha = w.saturating_sub(1) + w * w;
        let bound = alpha * (w + c * w * choose(w.saturating_sub(1), 2));
        ensure(cert.bound_value == bound, || format!("bound {} != {bound} on {}", cert.bound_value, r.graph6))?;
        ensure(cert.max_color as u128 <= bound, || format!("over bound on {}", r.graph6))?;
        lifted += (w >= 3) as usize;
    }
    // the sampled class rarely has omega >= 3, so every enumerated member is run too
    let mut cfg = enumerate_config(8);
    cfg.theorem = Some(TheoremId::Thm2);
    let all = run(&cfg)?;
    clean(&all)?;
    let enumerated_lifts = all.records.iter().filter(|r| r.omega >= 3).count();
    ensure(all.records.iter().all(|r| r.certificate.as_ref().is_some_and(|c| c.ok && c.findings.is_empty())), || {
        "enumerated certificate rejected".into()
    })?;
    Ok(format!(
        "{} sampled members, {} with omega >= 3 (lift exercised), 0 lift failures, 0 findings; \
         enumerated n <= 8: {} members, {} with omega >= 3, 0 failures",
        report.aggregates.members, lifted, all.aggregates.members, enumerated_lifts
    ))
}

fn ac6() -> Result<String, String> {
    // the largest fan has 1 + 4 * 5 = 21 vertices, above the default vertex cap
    let caps = OracleCaps { chi: 24, ..OracleCaps::default() };
    let opts = ColorOptions { caps, ..ColorOptions::default() };
    let mut instances = 0;
    for c in 4..=6 {
        for f in 1..=4 {
            let g = fan_of_cliques(c, f).map_err(|e| e.to_string())?;
            let m = matrix(&g);
            let tag = format!("c = {c}, f = {f}");
            let part = edge_clique_partition(&g).map_err(|e| format!("{tag}: {e}"))?;
            for (u, v) in g.edges() {
                let holders = part.cliques.iter().filter(|k| k.contains(u) && k.contains(v)).count();
                ensure(holders == 1, || format!("{tag}: edge {u}{v} in {holders} cliques"))?;
            }
            ensure(part.cliques.iter().all(|k| k.len() >= 4), || format!("{tag}: small clique"))?;
            ensure(part.cliques.len() == f, || format!("{tag}: {} cliques", part.cliques.len()))?;
            for v in 0..g.n() {
                ensure(fan_structure(&g, &part, v).anticomplete(), || format!("{tag}: blades at {v} joined"))?;
            }
            let dec = decompose_auto(&g, 2).map_err(|e| e.to_string())?;
            let d1 = check_property(&g, &dec, PropertyId::D1, &PropertyParams::default(), &caps)
                .map_err(|e| e.to_string())?;
            ensure(d1.hypothesis_met && d1.status == Status::Holds, || format!("{tag}: D1 {:?}", d1.status))?;

            let b = verify_thm5b(&g, &opts).map_err(|e| format!("{tag}: {e}"))?;
            let exact = chromatic_number(&g, caps.chi).map_err(|e| e.to_string())?.0;
            ensure(exact == c && clique_number(&g) == c, || format!("{tag}: chi {exact}"))?;
            ensure(b.ok && b.palette_used == c && proper(&m, &b.coloring), || format!("{tag}: thm5b palette {}", b.palette_used))?;
            ensure(b.findings.is_empty(), || format!("{tag}: {:?}", b.findings))?;

            let a = color_thm5a(&g, f + 1, &opts).map_err(|e| format!("{tag}: {e}"))?;
            let (w, k) = (c as u128, f as u128 + 1);
            let alpha = (w - 1) * (k - 1);
            let budget = ((alpha + 1) * w).max(w * alpha);
            ensure(a.ok && proper(&m, &a.coloring), || format!("{tag}: thm5a improper"))?;
            ensure(a.bound_value == budget && a.max_color as u128 <= budget, || format!("{tag}: thm5a {} of {budget}", a.max_color))?;
            instances += 1;
        }
    }
    Ok(format!("{instances} fan graphs, 0 violations"))
}

fn ac7() -> Result<String, String> {
    let mut chi_checked = 0;
    for n in 1..=6 {
        let graphs = pollyanna_core::harness::enumerate::enumerate_exact(n, 0).map_err(|e| e.to_string())?;
        if n == 6 {
            ensure(graphs.len() == 156, || format!("{} classes at n = 6", graphs.len()))?;
        }
        for g in &graphs {
            let m = matrix(g);
            let (x, col) = chromatic_number(g, 16).map_err(|e| e.to_string())?;
            ensure(x == chi_all_assignments(&m) && proper(&m, &col), || format!("chi disagrees on {n} vertices"))?;
            chi_checked += 1;
        }
    }
    let mut omega_checked = 0;
    for g in enumerate_small(7, 0).map_err(|e| e.to_string())? {
        let m = matrix(&g);
        let k = max_clique(&g);
        let w = omega_brute(&m);
        let kv = k.to_vec();
        ensure(k.len() == w && clique_number(&g) == w && kv.iter().all(|&a| kv.iter().all(|&b| a == b || m[a][b])), || {
            "max clique disagrees".into()
        })?;
        omega_checked += 1;
    }
    Ok(format!("chi on {chi_checked} graphs (n <= 6), omega on {omega_checked} graphs (n <= 7), 0 disagreements"))
}

fn ac8() -> Result<String, String> {
    let r = |s, t| ramsey_upper(s, t).map_err(|e| e.to_string());
    ensure(r(3, 3)? == 6, || "R(3,3) bound is not 6".into())?;
    let mut pairs = 0;
    for s in 2..=12u64 {
        ensure(r(s, 2)? == s as u128 && r(2, s)? == s as u128, || format!("R({s},2) or R(2,{s})"))?;
        for t in 2..=12u64 {
            let n = (s + t - 2) as u128;
            ensure(choose(n, (t - 1) as u128) == choose(n, (s - 1) as u128), || format!("symmetry at {s},{t}"))?;
            ensure(r(s, t)? == choose(n, (t - 1) as u128), || format!("R({s},{t}) bound"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs exact"))
}

fn c2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

fn ac9() -> Result<String, String> {
    let mut built = 0;
    for id in PatternId::ALL {
        for a in 1..=6usize {
            for b in 1..=6usize {
                for star in [StarConvention::Vertices, StarConvention::Leaves] {
                    let params = PatternParams {
                        s: Some(a),
                        t: Some(b),
                        k: Some(a),
                        l: Some(b),
                        star,
                    };
                    let leaves = if star == StarConvention::Vertices { a - 1 } else { a };
                    let expected = match id {
                        PatternId::Diamond => Some((4, 5)),
                        PatternId::Path => Some((b, b - 1)),
                        PatternId::Cycle => (b >= 3).then_some((b, b)),
                        PatternId::Complete => Some((b, c2(b))),
                        PatternId::Petersen => Some((10, 15)),
                        PatternId::Pineapple => Some((b + a, c2(b) + a)),
                        PatternId::Bowtie => Some((a + b + 1, c2(a) + c2(b) + a + b)),
                        PatternId::LollipopPath => Some((b + 2, c2(b) + 2)),
                        PatternId::Dumbbell => Some((a + b, c2(a) + c2(b) + 1)),
                        PatternId::LollipopStar => (b >= 2).then_some((b + 1 + leaves, c2(b) + b + leaves)),
                        PatternId::FanTriangles => Some((3 * b + 1, 6 * b)),
                        PatternId::HammerPlus => Some((b + 4, 3 + c2(b) + b)),
                        PatternId::F1 => Some((b + 2, c2(b) + 2 * b)),
                        PatternId::F2 => Some((b + 3, c2(b) + 3 * b)),
                        PatternId::Gem | PatternId::Flag => Some((5, 7)),
                        PatternId::Kite => Some((5, 6)),
                    };
                    match (PatternInstance::build(id, &params), expected) {
                        (Ok(p), Some(e)) => {
                            let got = (p.graph.n(), p.graph.edge_count());
                            ensure(got == e, || format!("{} has {got:?}, expected {e:?}", p.label()))?;
                            built += 1;
                        }
                        (Err(_), None) => {}
                        (Ok(p), None) => return Err(format!("{} should be rejected", p.label())),
                        (Err(e), Some(_)) => return Err(format!("{id} with {params:?}: {e}")),
                    }
                }
            }
        }
    }
    let f1 = patterns::f1(2).map_err(|e| e.to_string())?;
    ensure(is_isomorphic(&f1, &patterns::diamond()) && isomorphic_brute(&matrix(&f1), &matrix(&patterns::diamond())), || {
        "f1(2) is not a diamond".into()
    })?;
    Ok(format!("{built} instances match, f1(2) is a diamond"))
}

fn ac10() -> Result<String, String> {
    let bin = env!("CARGO_BIN_EXE_pollyanna");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).map(|_| p).map_err(|e| e.to_string())
    };
    let sampled = write(
        "sampled.json",
        r#"{"source":{"kind":"sample","n_min":7,"n_max":9,"edge_prob":0.3,"count":60},
            "theorem":"THM3","properties":["P5","P7"],"args":{"s":2,"t":2},"seed":99}"#,
    )?;
    let negative = write(
        "negative.json",
        r#"{"source":{"kind":"graph6","lines":["A_","Bw"]},"properties":["P-property"],"c":{"literal":1}}"#,
    )?;
    let invocation = |args: &[&str]| Command::new(bin).args(args).output().map_err(|e| e.to_string());
    let strip = |bytes: &[u8]| -> Result<String, String> {
        let text = String::from_utf8(bytes.to_vec()).map_err(|e| e.to_string())?;
        let cut = text.rfind("\"wall_time_ms\":").ok_or("report lacks wall_time_ms")?;
        Ok(text[..cut].to_string())
    };
    let a = invocation(&["verify", "--config", sampled.to_str().unwrap()])?;
    let b = invocation(&["--threads", "1", "verify", "--config", sampled.to_str().unwrap()])?;
    ensure(a.status.code() == Some(0) && b.status.code() == Some(0), || format!("clean run exited {:?}/{:?}", a.status, b.status))?;
    let (sa, sb) = (strip(&a.stdout)?, strip(&b.stdout)?);
    let sb = sb.replacen("\"threads\":1", "\"threads\":0", 1);
    ensure(sa == sb, || "reports differ beyond timing".into())?;

    let neg = invocation(&["verify", "--config", negative.to_str().unwrap()])?;
    ensure(neg.status.code() == Some(2), || format!("negative fixture exited {:?}", neg.status.code()))?;
    let report: serde_json::Value = serde_json::from_slice(&neg.stdout).map_err(|e| e.to_string())?;
    let first = &report["violations"][0];
    let g6 = first["graph6"].as_str().ok_or("violation lacks graph6")?.to_string();
    let one = write("witness.g6", &g6)?;
    let recheck = invocation(&["property", "PP", "--c", "1", "--in", one.to_str().unwrap()])?;
    ensure(recheck.status.code() == Some(2), || "witness does not re-verify".into())?;

    let sweep = invocation(&["sweep", "--theorem", "THM4", "--nmax", "7"])?;
    ensure(sweep.status.code() == Some(0), || format!("sweep exited {:?}", sweep.status.code()))?;
    let missing = invocation(&["verify", "--config", "/nonexistent/config.json"])?;
    let bad_flag = invocation(&["sweep", "--bogus"])?;
    ensure(missing.status.code() == Some(1) && bad_flag.status.code() == Some(1), || "operational errors must exit 1".into())?;
    let ramsey = invocation(&["ramsey", "3", "3"])?;
    ensure(String::from_utf8_lossy(&ramsey.stdout).trim() == "6", || "ramsey 3 3".into())?;
    Ok("identical reports across thread counts; exit codes 0/2/1 as specified; witness re-verifies".into())
}

// Brute-force references.

type Matrix = Vec<Vec<bool>>;

fn matrix(g: &Graph) -> Matrix {
    (0..g.n()).map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect()).collect()
}

fn choose(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn proper(m: &Matrix, c: &[usize]) -> bool {
    c.len() == m.len() && c.iter().all(|&x| x >= 1) && (0..m.len()).all(|u| (0..m.len()).all(|v| !m[u][v] || c[u] != c[v]))
}

fn cliques(m: &Matrix) -> impl Iterator<Item = Vec<usize>> + '_ {
    let n = m.len();
    (0u32..1 << n)
        .map(move |mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>())
        .filter(|vs| vs.iter().all(|&u| vs.iter().all(|&v| u == v || m[u][v])))
}

fn omega_brute(m: &Matrix) -> usize {
    cliques(m).map(|c| c.len()).max().unwrap_or(0)
}

fn maximum_cliques(m: &Matrix) -> Vec<Vec<usize>> {
    let w = omega_brute(m);
    cliques(m).filter(|c| c.len() == w).collect()
}

/// Every assignment in `{0..k}^n`, for increasing `k`.
fn chi_all_assignments(m: &Matrix) -> usize {
    let n = m.len();
    for k in 1..=n {
        let total = k.pow(n as u32);
        for code in 0..total {
            let col: Vec<usize> = (0..n).map(|i| code / k.pow(i as u32) % k).collect();
            if (0..n).all(|u| (0..n).all(|v| !m[u][v] || col[u] != col[v])) {
                return k;
            }
        }
    }
    0
}

/// Chromatic number of the subgraph induced by `set`, by plain backtracking in index order.
fn chi_of_set(m: &Matrix, set: &[usize]) -> usize {
    fn fits(m: &Matrix, set: &[usize], col: &mut Vec<usize>, k: usize) -> bool {
        let i = col.len();
        if i == set.len() {
            return true;
        }
        for c in 0..k {
            if (0..i).all(|j| !m[set[i]][set[j]] || col[j] != c) {
                col.push(c);
                if fits(m, set, col, k) {
                    return true;
                }
                col.pop();
            }
        }
        false
    }
    (0..=set.len()).find(|&k| fits(m, set, &mut Vec::new(), k)).unwrap_or(0)
}

fn has_induced(host: &Matrix, pat: &Matrix) -> bool {
    fn go(host: &Matrix, pat: &Matrix, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == pat.len() {
            return true;
        }
        for h in 0..host.len() {
            if !map.contains(&h) && (0..i).all(|j| host[map[j]][h] == pat[j][i]) {
                map.push(h);
                if go(host, pat, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    go(host, pat, &mut Vec::new())
}

fn isomorphic_brute(a: &Matrix, b: &Matrix) -> bool {
    a.len() == b.len() && has_induced(a, b)
}
