use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};
use tightmorse::algorithms::{
    collapsible, nonevasive, sweep_perfect_morse, CollapsibilityResult, NonEvasiveResult, Strategy, SweepError,
    SweepOptions,
};
use tightmorse::constructions::spheres::shift_apart;
use tightmorse::constructions::{
    cone_sphere, convex_fixture, furch_ball, grid_ball, trefoil_path, wedge_thicken, LatticePath, TREFOIL_BOX,
};
use tightmorse::geometry::{check_tightness_sampled, is_pi_tight, GeometricRealization};
use tightmorse::homology::{betti as betti_of, betti_or_zero};
use tightmorse::io::{parse_facets, parse_geom, parse_morse, write_facets, write_geom, write_morse, IoError};
use tightmorse::morse::random_discrete_morse;
use tightmorse::rational::{parse_scalar, Scalar};
use tightmorse::{Execution, Face, MorseMatching, SimplicialComplex};

use crate::report::{complex_digest, Report};
use crate::{BuildCommand, CheckCommand, MorseCommand, OutArg, Status, StrategyArg, TightCommand};

type Outcome = Result<(Report, Status)>;

fn read(path: &Path, report: &mut Report) -> Result<String> {
    let bytes = std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    report.input(path, &bytes);
    String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))
}

fn read_complex(path: &Path, report: &mut Report) -> Result<SimplicialComplex> {
    let text = read(path, report)?;
    let header = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty());
    let parsed = match header {
        Some(l) if l.starts_with("geom") => parse_geom(&text).map(|g| g.complex().clone()),
        _ => parse_facets(&text),
    };
    parsed.with_context(|| format!("cannot parse {}", path.display()))
}

fn read_geom(path: &Path, report: &mut Report) -> Result<GeometricRealization> {
    let text = read(path, report)?;
    parse_geom(&text).with_context(|| format!("cannot parse {}", path.display()))
}

fn write_artifact(out: &OutArg, text: &str, report: &mut Report) -> Result<()> {
    if let Some(path) = &out.out {
        std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?;
        report.set("out", path.display().to_string());
    }
    Ok(())
}

fn face_json(f: &Face) -> Value {
    json!(f.vertices())
}

fn describe(report: &mut Report, c: &SimplicialComplex) {
    report
        .set("f_vector", json!(c.f_vector().0))
        .set("betti", json!(betti_or_zero(c).values))
        .set("complex_digest", complex_digest(c));
}

fn parse_direction(pi: &[String]) -> Result<Vec<Scalar>> {
    pi.iter().map(|s| parse_scalar(s).with_context(|| format!("bad direction component {s:?}"))).collect()
}

pub fn betti(file: &Path, reduced: bool) -> Outcome {
    let mut report = Report::new("betti", 0);
    let c = read_complex(file, &mut report)?;
    let b = betti_of(&c).context("Betti numbers of the empty complex")?;
    let b = if reduced { b.to_reduced() } else { b };
    report
        .set("betti", json!(b.values))
        .set("euler", c.euler_characteristic())
        .set("reduced", reduced)
        .set("complex_digest", complex_digest(&c));
    Ok((report, Status::Ok))
}

fn morse_summary(report: &mut Report, m: &MorseMatching) {
    let b = betti_or_zero(m.complex());
    let mv = m.morse_vector();
    report.set("morse_vector", json!(mv.0)).set("betti", json!(b.values)).set("perfect", mv.matches(&b));
}

fn matching_report(name: &str, complex: &Path, matching: &Path) -> Outcome {
    let mut report = Report::new(name, 0);
    let c = read_complex(complex, &mut report)?;
    let text = read(matching, &mut report)?;
    let m = match parse_morse(&text, c) {
        Ok(m) => m.validate().map(|_| m).map_err(|e| e.to_string()),
        Err(IoError::Morse(e)) => Err(e.to_string()),
        Err(e) => return Err(e).context(format!("cannot parse {}", matching.display())),
    };
    match m {
        Ok(m) => {
            report.set("valid", true);
            morse_summary(&mut report, &m);
            Ok((report, Status::Ok))
        }
        Err(e) => {
            report.set("valid", false).set("error", e);
            Ok((report, Status::AssertionFailed))
        }
    }
}

pub fn morse(cmd: MorseCommand) -> Outcome {
    match cmd {
        MorseCommand::Validate { complex, matching } => matching_report("morse validate", &complex, &matching),
        MorseCommand::Vector { complex, matching } => matching_report("morse vector", &complex, &matching),
        MorseCommand::Sweep { geom, pi, assume_tight, out } => {
            let mut report = Report::new("morse sweep", 0);
            let g = read_geom(&geom, &mut report)?;
            let direction = parse_direction(&pi)?;
            report.set("pi", json!(pi));
            match sweep_perfect_morse(&g, &direction, SweepOptions { assume_tight }) {
                Ok(r) => {
                    morse_summary(&mut report, &r.matching);
                    report.set("order", json!(r.order));
                    write_artifact(&out, &write_morse(&r.matching), &mut report)?;
                    Ok((report, Status::Ok))
                }
                Err(SweepError::PerfectnessAssertionFailed { morse_vector, betti }) => {
                    report
                        .set("morse_vector", json!(morse_vector.0))
                        .set("betti", json!(betti.values))
                        .set("perfect", false);
                    Ok((report, Status::AssertionFailed))
                }
                Err(e @ SweepError::LinkNotPlanarCollapsible { .. }) => {
                    report.set("perfect", false).set("error", e.to_string());
                    Ok((report, Status::AssertionFailed))
                }
                Err(e) => Err(e.into()),
            }
        }
        MorseCommand::Random { complex, seed, out } => {
            let mut report = Report::new("morse random", seed);
            let c = read_complex(&complex, &mut report)?;
            let m = random_discrete_morse(c, seed);
            morse_summary(&mut report, &m);
            write_artifact(&out, &write_morse(&m), &mut report)?;
            Ok((report, Status::Ok))
        }
    }
}

pub fn tight(cmd: TightCommand, exec: Execution) -> Outcome {
    let TightCommand::Check { geom, pi, samples, seed } = cmd;
    let mut report = Report::new("tight check", seed);
    let g = read_geom(&geom, &mut report)?;
    match (pi, samples) {
        (Some(pi), None) => {
            let direction = parse_direction(&pi)?;
            let r = is_pi_tight(&g, &direction)?;
            report
                .set("pi", json!(pi))
                .set("tight", r.tight)
                .set("checks", r.checks)
                .set("failures", serde_json::to_value(&r.failures)?);
        }
        (None, Some(n)) => {
            let r = check_tightness_sampled(&g, n, seed, exec)?;
            report
                .set("samples", r.samples)
                .set("tight", r.tight)
                .set("fraction", r.fraction)
                .set("failures", serde_json::to_value(&r.failures)?);
        }
        _ => bail!("give exactly one of --pi and --samples"),
    }
    Ok((report, Status::Ok))
}

pub fn check(cmd: CheckCommand, exec: Execution) -> Outcome {
    match cmd {
        CheckCommand::Collapsible { file, strategy, budget, seed, out } => {
            let mut report = Report::new("check collapsible", seed);
            let c = read_complex(&file, &mut report)?;
            let (strategy, name) = match strategy {
                StrategyArg::Greedy => (Strategy::Greedy, "greedy"),
                StrategyArg::Backtracking => (Strategy::Backtracking, "backtracking"),
            };
            report.set("strategy", name).set("budget", budget);
            let status = match collapsible(&c, strategy, budget, seed, exec) {
                CollapsibilityResult::Collapsible(seq) => {
                    report.set("result", "yes").set("steps", seq.len());
                    write_artifact(&out, &write_morse(&seq.to_matching()?), &mut report)?;
                    Status::Ok
                }
                CollapsibilityResult::NotCollapsible(reason) => {
                    report.set("result", "no").set("reason", serde_json::to_value(reason)?);
                    Status::Ok
                }
                CollapsibilityResult::BudgetExceeded { spent } => {
                    report.set("result", "unknown").set("spent", spent);
                    Status::BudgetExceeded
                }
            };
            Ok((report, status))
        }
        CheckCommand::Nonevasive { file, budget, out } => {
            let mut report = Report::new("check nonevasive", 0);
            let c = read_complex(&file, &mut report)?;
            report.set("budget", budget);
            let status = match nonevasive(&c, budget) {
                NonEvasiveResult::NonEvasive(cert) => {
                    report
                        .set("result", "yes")
                        .set("verified", cert.verify(&c))
                        .set("deletion_order", json!(cert.deletion_order()));
                    write_artifact(&out, &serde_json::to_string_pretty(&cert)?, &mut report)?;
                    Status::Ok
                }
                NonEvasiveResult::Evasive(reason) => {
                    report.set("result", "no").set("reason", serde_json::to_value(reason)?);
                    Status::Ok
                }
                NonEvasiveResult::BudgetExceeded { expanded } => {
                    report.set("result", "unknown").set("expanded", expanded);
                    Status::BudgetExceeded
                }
            };
            Ok((report, status))
        }
    }
}

pub fn build(cmd: BuildCommand) -> Outcome {
    match cmd {
        BuildCommand::Grid { n, out } => {
            let mut report = Report::new("build grid", 0);
            let g = grid_ball(n[0], n[1], n[2])?;
            report.set("n", json!(n));
            describe(&mut report, g.complex());
            write_artifact(&out, &write_geom(&g), &mut report)?;
            Ok((report, Status::Ok))
        }
        BuildCommand::Furch { n, path, out } => {
            let mut report = Report::new("build furch", 0);
            let n = n.unwrap_or_else(|| TREFOIL_BOX.to_vec());
            let lattice_path = match &path {
                Some(p) => LatticePath::parse(&read(p, &mut report)?)?,
                None => trefoil_path(),
            };
            let ball = furch_ball(n[0], n[1], n[2], &lattice_path)?;
            let c = ball.realization.complex();
            report
                .set("n", json!(n))
                .set("path_steps", lattice_path.steps())
                .set("removed_cubes", ball.removed_cubes)
                .set("spanning_edge", face_json(&ball.spanning_edge))
                .set("boundary_betti", json!(betti_or_zero(&c.boundary()).values));
            describe(&mut report, c);
            write_artifact(&out, &write_geom(&ball.realization), &mut report)?;
            Ok((report, Status::Ok))
        }
        BuildCommand::ConeSphere { file, out } => {
            let mut report = Report::new("build cone-sphere", 0);
            let b = read_complex(&file, &mut report)?;
            let s = cone_sphere(&b)?;
            report.set("apex", s.apex).set("apex_facet", face_json(&s.apex_facet()));
            describe(&mut report, &s.complex);
            write_artifact(&out, &write_facets(&s.complex), &mut report)?;
            Ok((report, Status::Ok))
        }
        BuildCommand::Wedge { first, second, t1, t2, out } => {
            let mut report = Report::new("build wedge", 0);
            let b1 = read_complex(&first, &mut report)?;
            let b2 = read_complex(&second, &mut report)?;
            let shifted = shift_apart(&b2, &b1);
            let offset = shifted.vertices()[0] - b2.vertices()[0];
            let t1 = [t1[0], t1[1], t1[2]];
            let t2 = [t2[0] + offset, t2[1] + offset, t2[2] + offset];
            let w = wedge_thicken(&b1, &shifted, t1, t2)?;
            report.set("second_offset", offset).set("apex", w.apex).set("wedge_point", w.wedge_point);
            describe(&mut report, &w.complex);
            write_artifact(&out, &write_facets(&w.complex), &mut report)?;
            Ok((report, Status::Ok))
        }
        BuildCommand::Fixture { name, out } => {
            let mut report = Report::new("build fixture", 0);
            let g = convex_fixture(&name)?;
            report.set("name", name);
            describe(&mut report, g.complex());
            write_artifact(&out, &write_geom(&g), &mut report)?;
            Ok((report, Status::Ok))
        }
        BuildCommand::TrefoilPath { out } => {
            let mut report = Report::new("build trefoil-path", 0);
            let path = trefoil_path();
            report.set("n", json!(TREFOIL_BOX)).set("steps", path.steps());
            write_artifact(&out, &path.to_text(), &mut report)?;
            Ok((report, Status::Ok))
        }
    }
}
