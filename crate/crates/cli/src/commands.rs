use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use num_bigint::BigUint;

use polyclique::bound::{exponent_bound, planar_exponent};
use polyclique::clique::{audit_bound, enumerate_oracle, enumerate_supporting_line};
use polyclique::constructions::random::{random_scene, random_segment_scene, rng};
use polyclique::constructions::{
    gen_k33_segments, gen_kdir_multipartite, gen_ladder_2kgon, gen_n3, gen_regular_odd, gen_sun,
    GeneratedInstance, InstanceScene,
};
use polyclique::geom::{polygons_intersect, separating_line, DirectionSet};
use polyclique::{CliqueSet, Graph};

use crate::documents::{labelled_cliques, parse_document, to_json, GraphDocument, ResultDocument, SceneDocument};
use crate::{svg, Cli, CliError, Command, Method};

pub fn dispatch(cli: Cli) -> Result<(), CliError> {
    let quiet = cli.quiet;
    match cli.command {
        Command::Generate { family, params, out, graph_out, seed, inflate } => {
            generate(&family, &params, out.as_deref(), graph_out, seed, inflate, quiet)
        }
        Command::Cliques { scene, method, out } => cliques(&scene, method, out.as_deref()),
        Command::Verify { scene } => verify(&scene),
        Command::Render { scene, out, highlight } => render(&scene, out.as_deref(), &highlight),
        Command::Bound { k, d } => bound(k, d),
        Command::Bench { family, params, method, out, seed } => bench(&family, &params, method, out.as_deref(), seed),
    }
}

/// Parameter names and defaults of each family.
fn family_keys(family: &str) -> Option<&'static [(&'static str, u64)]> {
    Some(match family {
        "multipartite" => &[("n", 9), ("k", 3)],
        "ladder" => &[("k", 2), ("m", 2)],
        "regular-odd" => &[("k", 5), ("m", 2)],
        "n3" => &[("m", 5)],
        "sun" => &[("k", 2)],
        "k33" => &[("n", 3)],
        "random" | "random-segments" => &[("n", 8), ("k", 3)],
        _ => return None,
    })
}

/// Parses `key=v1,v2,...` arguments into one value grid per key.
fn parse_params(family: &str, raw: &[String]) -> Result<BTreeMap<&'static str, Vec<u64>>, CliError> {
    let keys = family_keys(family).ok_or_else(|| {
        CliError::Input(format!(
            "unknown family {family:?}; expected multipartite, ladder, regular-odd, n3, sun, k33, random or random-segments"
        ))
    })?;
    let mut grid: BTreeMap<&'static str, Vec<u64>> = keys.iter().map(|&(k, v)| (k, vec![v])).collect();
    for arg in raw {
        let (key, values) = arg
            .split_once('=')
            .ok_or_else(|| CliError::Input(format!("parameter {arg:?} is not key=value")))?;
        let &(name, _) = keys
            .iter()
            .find(|(k, _)| *k == key)
            .ok_or_else(|| CliError::Input(format!("family {family} has no parameter {key:?}")))?;
        let parsed = values
            .split(',')
            .map(|v| v.trim().parse::<u64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CliError::Input(format!("parameter {key} needs non-negative integers, got {values:?}")))?;
        grid.insert(name, parsed);
    }
    Ok(grid)
}

/// All combinations of a parameter grid, in key order.
fn combinations(grid: &BTreeMap<&'static str, Vec<u64>>) -> Vec<BTreeMap<&'static str, u64>> {
    let mut out = vec![BTreeMap::new()];
    for (&key, values) in grid {
        out = out
            .into_iter()
            .flat_map(|partial| {
                values.iter().map(move |&v| {
                    let mut next = partial.clone();
                    next.insert(key, v);
                    next
                })
            })
            .collect();
    }
    out
}

fn instance(family: &str, p: &BTreeMap<&str, u64>, seed: u64) -> Result<(InstanceScene, Graph), CliError> {
    let get = |k: &str| p[k] as usize;
    let generated = |g: polyclique::Result<GeneratedInstance>| g.map(|i| (i.scene, i.intended)).map_err(CliError::from);
    match family {
        "multipartite" => generated(gen_kdir_multipartite(get("n"), get("k"))),
        "ladder" => generated(gen_ladder_2kgon(get("k"), get("m"))),
        "regular-odd" => generated(gen_regular_odd(get("k"), get("m"))),
        "n3" => generated(gen_n3(get("m"))),
        "sun" => generated(gen_sun(get("k"))),
        "k33" => generated(gen_k33_segments(get("n"))),
        "random" | "random-segments" => {
            let k = get("k");
            if !(2..=12).contains(&k) {
                return Err(CliError::Input(format!("random scenes need 2 <= k <= 12, got {k}")));
            }
            let scene = if family == "random" {
                InstanceScene::Polygons(random_scene(&mut rng(seed), get("n"), k))
            } else {
                InstanceScene::Segments(random_segment_scene(&mut rng(seed), get("n"), k))
            };
            let g = scene.graph();
            Ok((scene, g))
        }
        _ => unreachable!("family checked by parse_params"),
    }
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_scene(path: &Path) -> Result<InstanceScene, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let raw = parse_document(&text)
        .and_then(|d| d.to_raw())
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    raw.build().map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn dirs_of(scene: &InstanceScene) -> &DirectionSet {
    match scene {
        InstanceScene::Polygons(s) => s.dirs(),
        InstanceScene::Segments(s) => s.dirs(),
    }
}

fn directions_used(scene: &InstanceScene) -> usize {
    let mut used: Vec<_> = match scene {
        InstanceScene::Polygons(s) => s.polygons().iter().flat_map(|(_, p)| p.edge_directions()).collect(),
        InstanceScene::Segments(s) => s.segments().iter().map(|(_, seg)| seg.direction()).collect(),
    };
    used.sort();
    used.dedup();
    used.len()
}

fn generate(
    family: &str,
    params: &[String],
    out: Option<&Path>,
    graph_out: Option<PathBuf>,
    seed: u64,
    inflate: bool,
    quiet: bool,
) -> Result<(), CliError> {
    let grid = parse_params(family, params)?;
    let single: BTreeMap<&str, u64> = grid
        .iter()
        .map(|(&k, v)| match v.as_slice() {
            [x] => Ok((k, *x)),
            _ => Err(CliError::Input(format!("parameter {k} takes a single value here"))),
        })
        .collect::<Result<_, _>>()?;
    let (mut scene, intended) = instance(family, &single, seed)?;
    if inflate {
        scene = InstanceScene::Polygons(scene.to_polygons()?);
    }
    write_output(out, &to_json(&SceneDocument::from_scene(&scene)))?;
    let graph_path = graph_out.or_else(|| out.map(|o| o.with_extension("graph.json")));
    if let Some(path) = &graph_path {
        write_output(Some(path), &to_json(&GraphDocument::from_graph(&intended)))?;
    }
    if !quiet {
        eprintln!(
            "{family}: {} items in {} directions, {} intended edges",
            scene.len(),
            dirs_of(&scene).len(),
            intended.edge_count()
        );
    }
    Ok(())
}

fn run_method(scene: &InstanceScene, method: Method) -> Result<CliqueSet, CliError> {
    match method {
        Method::SupportingLine => Ok(enumerate_supporting_line(&scene.to_polygons()?)),
        Method::Oracle => Ok(enumerate_oracle(&scene.graph())),
        Method::Both => unreachable!("expanded by callers"),
    }
}

fn methods(m: Method) -> Vec<Method> {
    match m {
        Method::Both => vec![Method::SupportingLine, Method::Oracle],
        single => vec![single],
    }
}

fn mismatch(labels: &[String], a: &CliqueSet, b: &CliqueSet) -> Option<String> {
    if a == b {
        return None;
    }
    let only_a = labelled_cliques(labels, a.iter().filter(|c| !b.contains(c)));
    let only_b = labelled_cliques(labels, b.iter().filter(|c| !a.contains(c)));
    Some(format!(
        "methods disagree; only supporting-line: {only_a:?}; only oracle: {only_b:?}"
    ))
}

fn cliques(path: &Path, method: Method, out: Option<&Path>) -> Result<(), CliError> {
    let scene = load_scene(path)?;
    let start = Instant::now();
    let results = methods(method)
        .into_iter()
        .map(|m| run_method(&scene, m))
        .collect::<Result<Vec<_>, _>>()?;
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let labels = match &scene {
        InstanceScene::Polygons(s) => s.labels(),
        InstanceScene::Segments(s) => s.labels(),
    };
    let n = scene.len();
    let k = dirs_of(&scene).len();
    let doc = ResultDocument {
        n,
        k,
        directions_used: directions_used(&scene),
        method: method.name().to_string(),
        clique_count: results[0].len(),
        bound: BigUint::from(n).pow(k as u32).to_string(),
        cliques: labelled_cliques(&labels, &results[0]),
        elapsed_ms,
    };
    write_output(out, &to_json(&doc))?;
    if let [a, b] = results.as_slice() {
        if let Some(msg) = mismatch(&labels, a, b) {
            return Err(CliError::Failure(msg));
        }
    }
    Ok(())
}

fn verify(path: &Path) -> Result<(), CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let raw = parse_document(&text)
        .and_then(|d| d.to_raw())
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let scene = match raw.build() {
        Ok(s) => s,
        Err(e) => {
            println!("directions: FAIL {e}");
            return Err(CliError::Failure(format!("{e}")));
        }
    };
    println!("directions: ok ({} items)", scene.len());

    let polygons = match &scene {
        InstanceScene::Segments(s) if s.dirs().len() < 2 => None,
        _ => Some(scene.to_polygons()?),
    };
    let Some(polygons) = polygons else {
        println!("separation: skipped (one direction)");
        return Ok(());
    };
    let dirs = polygons.dirs();
    let mut disjoint = 0usize;
    for i in 0..polygons.len() {
        for j in i + 1..polygons.len() {
            let (p, q) = (polygons.polygon(i), polygons.polygon(j));
            if polygons_intersect(p, q) {
                continue;
            }
            disjoint += 1;
            if separating_line(p, q, dirs).is_none() {
                println!("separation: FAIL pair ({i}, {j})");
                return Err(CliError::Failure(format!("no separating line for disjoint pair ({i}, {j})")));
            }
        }
    }
    println!("separation: ok ({disjoint} disjoint pairs)");

    let audit = audit_bound(&polygons);
    let verdict = if audit.pass { "ok" } else { "FAIL" };
    println!(
        "bound: {verdict} {} maximal cliques <= {}^{} = {} (declared k = {}, {} used)",
        audit.clique_count, audit.n, audit.k, audit.limit, audit.k, audit.directions_used
    );
    if !audit.pass {
        return Err(CliError::Failure("clique count exceeds n^k".into()));
    }
    Ok(())
}

fn render(path: &Path, out: Option<&Path>, highlight: &[usize]) -> Result<(), CliError> {
    let scene = load_scene(path)?;
    if let Some(&i) = highlight.iter().find(|&&i| i >= scene.len()) {
        return Err(CliError::Input(format!("highlight index {i} out of range for {} items", scene.len())));
    }
    write_output(out, &svg::render(&scene, highlight))
}

fn bound(k: u64, d: u64) -> Result<(), CliError> {
    let h = exponent_bound(k, d)?;
    if d == 2 {
        println!("planar exponent {}; general bound {h}", planar_exponent(k));
    } else {
        println!("general bound {h}");
    }
    Ok(())
}

fn bench(family: &str, params: &[String], method: Method, out: Option<&Path>, seed: u64) -> Result<(), CliError> {
    let grid = parse_params(family, params)?;
    let mut table = String::from("n\tk\tmethod\tcount\tms\n");
    let mut failures = Vec::new();
    for combo in combinations(&grid) {
        let (scene, _) = instance(family, &combo, seed)?;
        let (n, k) = (scene.len(), dirs_of(&scene).len());
        let mut found = Vec::new();
        for m in methods(method) {
            let start = Instant::now();
            let set = run_method(&scene, m)?;
            let ms = start.elapsed().as_secs_f64() * 1e3;
            table.push_str(&format!("{n}\t{k}\t{}\t{}\t{ms:.3}\n", m.name(), set.len()));
            found.push(set);
        }
        if let [a, b] = found.as_slice() {
            if a != b {
                failures.push(format!("{family} {combo:?}"));
            }
        }
    }
    write_output(out, &table)?;
    if !failures.is_empty() {
        return Err(CliError::Failure(format!("methods disagree on {}", failures.join(", "))));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids_expand_in_key_order() {
        let grid = parse_params("multipartite", &["n=6,9".into(), "k=3".into()]).unwrap();
        let combos = combinations(&grid);
        assert_eq!(combos.len(), 2);
        assert_eq!(combos[1]["n"], 9);
        assert_eq!(combos[1]["k"], 3);
    }

    #[test]
    fn defaults_fill_missing_parameters() {
        let grid = parse_params("ladder", &[]).unwrap();
        assert_eq!(grid["k"], vec![2]);
        assert_eq!(grid["m"], vec![2]);
    }

    #[test]
    fn bad_parameters_are_input_errors() {
        assert_eq!(parse_params("bogus", &[]).unwrap_err().code(), 2);
        assert_eq!(parse_params("sun", &["m=2".into()]).unwrap_err().code(), 2);
        assert_eq!(parse_params("sun", &["k".into()]).unwrap_err().code(), 2);
        assert_eq!(parse_params("sun", &["k=-1".into()]).unwrap_err().code(), 2);
    }
}
