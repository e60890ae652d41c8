use crate::output::{CliError, Out, EXIT_DOMAIN};
use crate::{read_input, AdversaryArg, ChordRuleArg, Cli, Command, ListMode, PaintMode};
use brookskit::alon_tarsi::{at_certify_with, ChordRule};
use brookskit::brooks::{color_brooks, Outcome, Strategy, StrategyReport};
use brookskit::choosability::{brooks_list_color, degree_choose_color, gallai_bad_lists, kernel_orient, kernel_whittle};
use brookskit::families::{bounds_report, generate, FamilySpec};
use brookskit::graph_core::clique::{clique_number, max_independent_set};
use brookskit::graph_core::enumerate::{connected_labeled_graphs, graph_classes};
use brookskit::graph_core::format::to_graph6;
use brookskit::graph_core::structure::{classify, gallai, is_two_connected};
use brookskit::oracle::{chi_exact, is_f_choosable, is_list_colorable, oracle_report};
use brookskit::paintability::{chi_paint_exact, paint_game_solve, painter_kernel_strategy, Adversary};
use brookskit::{Error, Graph, ListAssignment};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::time::Instant;

pub fn run(cli: &Cli, out: &mut Out) -> Result<u8, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Color { strategy, trace } => color(&read_input(g)?, strategy, *trace, g.verify, out),
        Command::Oracle { list, paint } => {
            let r = oracle_report(&read_input(g)?, *list, *paint)?;
            out.json(&r);
            Ok(0)
        }
        Command::Classify => {
            let graph = read_input(g)?;
            let c = classify(&graph);
            out.json(&json!({
                "n": graph.n(),
                "connected": graph.is_connected(),
                "two_connected": is_two_connected(&graph),
                "gallai_tree": graph.is_connected() && gallai(&graph),
                "tag": c.tag,
                "witness": c.witness,
            }));
            Ok(0)
        }
        Command::Lists { mode, lists } => {
            let lists = match lists {
                Some(p) => {
                    let text = std::fs::read_to_string(p)
                        .map_err(|e| CliError::usage_msg("io", format!("{}: {e}", p.display())))?;
                    let raw: Vec<Vec<u32>> = serde_json::from_str(&text)
                        .map_err(|e| CliError::usage_msg("parse", format!("lists: {e}")))?;
                    Some(ListAssignment::new(raw))
                }
                None => None,
            };
            list_color(&read_input(g)?, *mode, lists, g.verify, out)
        }
        Command::AtCheck { chord_rule } => {
            let graph = read_input(g)?;
            let rule = match chord_rule {
                ChordRuleArg::AsCycle => ChordRule::AsCycle,
                ChordRuleArg::Reversed => ChordRule::Reversed,
            };
            let cert = at_certify_with(&graph, rule)?;
            let mut v = json!({
                "arcs": cert.arcs,
                "ee": cert.counts.ee,
                "eo": cert.counts.eo,
                "certified": cert.counts.ee != cert.counts.eo,
                "even_cycle": cert.even_cycle,
                "chord_rule": cert.chord_rule,
                "out_degrees": cert.out_degrees,
            });
            if g.verify {
                v["oracle_degree_choosable"] = skip_on_scale(out, is_f_choosable(&graph, &graph.degrees()).map(|c| c.is_choosable()))?
                    .map_or(Value::Null, Value::Bool);
                if v["oracle_degree_choosable"] == Value::Bool(false) {
                    return Err(CliError::domain("verification_failed", json!("oracle found bad degree lists")));
                }
            }
            out.json(&v);
            Ok(0)
        }
        Command::Paint { mode, tokens, adversary, seed } => paint(&read_input(g)?, *mode, *tokens, *adversary, *seed, g.verify, out),
        Command::Gen { family, n, m, t, seed } => {
            let family = family.parse().map_err(CliError::usage)?;
            let graph = generate(&FamilySpec { family, n: *n, m: *m, t: *t, seed: *seed })?;
            out.text(&to_graph6(&graph));
            Ok(0)
        }
        Command::CheckConjectures { max_n } => check_conjectures(*max_n, g.jobs, out),
        Command::Bench { strategies, max_n } => bench(strategies, *max_n, g.jobs, out),
    }
}

fn skip_on_scale<T>(out: &Out, r: brookskit::Result<T>) -> Result<Option<T>, CliError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_scale_refusal() => {
            out.log(format!("oracle check skipped: {e}"));
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

fn parse_strategies(s: &str) -> Result<Vec<Strategy>, CliError> {
    if s == "all" {
        return Ok(Strategy::ALL.to_vec());
    }
    s.split(',').map(|x| x.trim().parse().map_err(CliError::usage)).collect()
}

fn report_json(r: &StrategyReport, trace: bool) -> Value {
    let mut v = serde_json::to_value(r).expect("report serializes");
    if let Some(e) = &r.exception {
        v["exception"] = json!(e.kind);
        v["witness"] = json!(e.component);
    }
    if !trace {
        v.as_object_mut().unwrap().remove("trace");
    }
    v
}

fn color(g: &Graph, strategy: &str, trace: bool, verify: bool, out: &mut Out) -> Result<u8, CliError> {
    let strategies = parse_strategies(strategy)?;
    let chi = if verify { skip_on_scale(out, chi_exact(g).map(|c| c.0))? } else { None };
    let mut code = 0;
    for s in strategies {
        let r = color_brooks(g, s)?;
        let mut v = report_json(&r, trace);
        if verify {
            if !r.verify(g) {
                return Err(CliError::domain("verification_failed", json!(format!("{s} report failed its check"))));
            }
            if let Some(chi) = chi {
                let ok = match r.outcome {
                    Outcome::Colored => chi <= r.colors_used,
                    Outcome::Exceptional => chi == g.max_degree() + 1,
                };
                if !ok {
                    return Err(CliError::domain("verification_failed", json!(format!("{s} disagrees with χ = {chi}"))));
                }
                v["oracle_chi"] = json!(chi);
            }
            v["verified"] = json!(true);
        }
        if r.outcome == Outcome::Exceptional {
            code = EXIT_DOMAIN;
        }
        out.json(&v);
    }
    Ok(code)
}

fn list_color(g: &Graph, mode: ListMode, lists: Option<ListAssignment>, verify: bool, out: &mut Out) -> Result<u8, CliError> {
    if let Some(l) = &lists {
        if l.n() != g.n() {
            return Err(CliError::usage_msg("usage", format!("{} lists for {} vertices", l.n(), g.n())));
        }
    }
    match mode {
        ListMode::Bad => {
            let bad = gallai_bad_lists(g)?;
            let mut v = json!({ "lists": bad, "sizes": bad.sizes() });
            if verify {
                let colorable = skip_on_scale(out, is_list_colorable(g, &bad))?;
                if let Some(Some(_)) = colorable {
                    return Err(CliError::domain("verification_failed", json!("bad lists are colorable")));
                }
                v["oracle_colorable"] = colorable.map_or(Value::Null, |c| Value::Bool(c.is_some()));
            }
            out.json(&v);
            Ok(0)
        }
        ListMode::Brooks | ListMode::Degree => {
            let (coloring, lists, extra) = if mode == ListMode::Brooks {
                let k = 3.max(clique_number(g)?).max(g.max_degree());
                let lists = lists.unwrap_or_else(|| ListAssignment::uniform(g.n(), k));
                (Some(brooks_list_color(g, &lists)?), lists, Value::Null)
            } else {
                let lists = lists.unwrap_or_else(|| ListAssignment::new((0..g.n()).map(|v| (1..=g.degree(v) as u32).collect()).collect()));
                let outcome = degree_choose_color(g, &lists)?;
                (outcome.coloring().cloned(), lists, serde_json::to_value(&outcome).unwrap())
            };
            let mut v = json!({ "lists": lists, "coloring": coloring, "colored": coloring.is_some() });
            if !extra.is_null() {
                v["outcome"] = extra["outcome"].clone();
            }
            if verify {
                if let Some(c) = &coloring {
                    if !(c.is_proper_total(g) && c.respects(&lists)) {
                        return Err(CliError::domain("verification_failed", json!("coloring breaks the lists")));
                    }
                }
                v["verified"] = json!(true);
            }
            out.json(&v);
            Ok(if coloring.is_some() { 0 } else { EXIT_DOMAIN })
        }
    }
}

fn paint(g: &Graph, mode: PaintMode, tokens: Option<usize>, adversary: AdversaryArg, seed: u64, verify: bool, out: &mut Out) -> Result<u8, CliError> {
    match mode {
        PaintMode::Solve => {
            match tokens {
                Some(k) => {
                    let sol = paint_game_solve(g, &vec![k; g.n()])?;
                    out.json(&json!({ "tokens": k, "solution": sol }));
                }
                None => out.json(&json!({ "chi_paint": chi_paint_exact(g)? })),
            }
            Ok(0)
        }
        PaintMode::Play => {
            let a = max_independent_set(g)?;
            let core = kernel_whittle(g, &a)?;
            let (d, map) = kernel_orient(g, &core)?;
            let (h, _) = g.induced(&core.vertex_set(g.n()));
            let f: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
            let painter = painter_kernel_strategy(&d, &f)?;
            let adv = match adversary {
                AdversaryArg::RevealAll => Adversary::RevealAll,
                AdversaryArg::Lowest => Adversary::Lowest,
                AdversaryArg::Random => Adversary::Random { seed },
            };
            let trace = painter.play(adv)?;
            let mut v = json!({
                "core": map,
                "arcs": d.arcs(),
                "tokens": f,
                "adversary": adv,
                "rounds": trace.rounds,
            });
            if verify {
                let val = painter.validate()?;
                if !val.painter_wins {
                    return Err(CliError::domain("verification_failed", serde_json::to_value(&val).unwrap()));
                }
                v["validation"] = json!({ "painter_wins": true, "states": val.states, "reveals": val.reveals });
            }
            out.json(&v);
            Ok(0)
        }
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::usage_msg("usage", e.to_string()))
}

fn check_conjectures(max_n: usize, jobs: usize, out: &mut Out) -> Result<u8, CliError> {
    if max_n > 8 {
        return Err(Error::Scale { what: "max-n for check-conjectures", value: max_n, limit: 8 }.into());
    }
    let mut graphs = 0;
    let mut reed = 0;
    let mut bk = 0;
    for n in 1..=max_n {
        let classes = graph_classes(n);
        let reports: Vec<brookskit::Result<_>> = pool(jobs)?.install(|| classes.par_iter().map(bounds_report).collect());
        for (g, r) in classes.iter().zip(reports) {
            let r = r?;
            let violations = r.conjecture_violations();
            if !violations.is_empty() {
                out.log(format!("CONJECTURE VIOLATION {violations:?} on {}", to_graph6(g)));
                reed += violations.contains(&"reed") as usize;
                bk += violations.contains(&"borodin_kostochka") as usize;
            }
            let mut v = serde_json::to_value(&r).unwrap();
            v["graph6"] = json!(to_graph6(g));
            out.json(&v);
            graphs += 1;
        }
    }
    out.json(&json!({ "summary": { "max_n": max_n, "graphs": graphs, "reed_violations": reed, "bk_violations": bk } }));
    Ok(0)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Verdict {
    Colored,
    Exceptional,
    Failed,
}

fn judge(g: &Graph, s: Strategy) -> Verdict {
    let expected_exception = g.is_complete() || g.is_odd_cycle();
    match color_brooks(g, s) {
        Ok(r) if r.verify(g) => match r.outcome {
            Outcome::Colored if !expected_exception => Verdict::Colored,
            Outcome::Exceptional if expected_exception => Verdict::Exceptional,
            _ => Verdict::Failed,
        },
        _ => Verdict::Failed,
    }
}

fn bench(strategies: &str, max_n: usize, jobs: usize, out: &mut Out) -> Result<u8, CliError> {
    let strategies = parse_strategies(strategies)?;
    if max_n > 7 {
        return Err(Error::Scale { what: "max-n for bench", value: max_n, limit: 7 }.into());
    }
    let graphs: Vec<Graph> = (1..=max_n).flat_map(connected_labeled_graphs).collect();
    out.log(format!("{} connected labeled graphs", graphs.len()));
    let pool = pool(jobs)?;
    let mut verdicts = Vec::new();
    let mut timing = serde_json::Map::new();
    for &s in &strategies {
        let start = Instant::now();
        let v: Vec<Verdict> = pool.install(|| graphs.par_iter().map(|g| judge(g, s)).collect());
        timing.insert(s.name().to_string(), json!(start.elapsed().as_secs_f64() * 1e3));
        verdicts.push(v);
    }
    let k = strategies.len();
    let mut agreement = vec![vec![0usize; k]; k];
    for i in 0..k {
        for j in 0..k {
            agreement[i][j] = (0..graphs.len())
                .filter(|&x| verdicts[i][x] != Verdict::Failed && verdicts[i][x] == verdicts[j][x])
                .count();
        }
    }
    let failures: Vec<usize> = verdicts.iter().map(|v| v.iter().filter(|&&x| x == Verdict::Failed).count()).collect();
    let exceptional = verdicts.first().map_or(0, |v| v.iter().filter(|&&x| x == Verdict::Exceptional).count());
    let total = failures.iter().all(|&f| f == 0);
    out.json(&json!({
        "max_n": max_n,
        "graphs": graphs.len(),
        "exceptional": exceptional,
        "strategies": strategies.iter().map(|s| s.name()).collect::<Vec<_>>(),
        "failures": failures,
        "agreement": agreement,
        "total_agreement": total,
        "timing": timing,
    }));
    Ok(if total { 0 } else { EXIT_DOMAIN })
}
