//! Round-trip pipelines: reduce a source instance, decide both sides,
//! translate witnesses in both directions and validate everything.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::bitstring::Mode;
use crate::crafting::{solve, verify_witness, CraftingInstance, Method, Witness};
use crate::error::{Error, Result};
use crate::graph::{validate_decomposition, validate_interval_model, ColoredGraph, Graph};
use crate::oracles::{embed_bf, intervalize_exact, mspd_exact, sat_bf, verify_embedding, x3c_bf};
use crate::oracles::{EmbeddingWitness, Relation, Shape};
use crate::reductions::{self as red, CnfFormula, Strictness, SubgraphVariant, X3cInstance};

/// Width used for the decomposition target.
pub const MSPD_WIDTH: usize = red::BASE_WIDTH;

/// Parses DIMACS CNF text.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    CnfFormula::parse_dimacs(text)
}

/// Parses the crafting instance text format.
pub fn parse_crafting(text: &str) -> Result<CraftingInstance> {
    CraftingInstance::parse(text)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Cnf(CnfFormula),
    Crafting(CraftingInstance),
    X3c(X3cInstance),
}

impl Source {
    /// Recognises the format from the first meaningful line: a DIMACS
    /// header or comment, a crafting mode tag, or an X3C `n m` header.
    pub fn parse(text: &str) -> Result<Source> {
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .unwrap_or("");
        if first.starts_with('p') || first.starts_with('c') {
            parse_dimacs(text).map(Source::Cnf)
        } else if first.starts_with(|c: char| c.is_ascii_digit()) {
            X3cInstance::parse(text).map(Source::X3c)
        } else {
            parse_crafting(text).map(Source::Crafting)
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Source::Cnf(_) => "cnf",
            Source::Crafting(i) if i.mode() == Mode::Domination => "sc",
            Source::Crafting(_) => "ovc",
            Source::X3c(_) => "x3c",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Target {
    Sc,
    Ovc,
    Subgraph,
    Mspd,
    Icg5,
    Icg,
}

impl Target {
    pub const ALL: [Target; 6] = [
        Target::Sc,
        Target::Ovc,
        Target::Subgraph,
        Target::Mspd,
        Target::Icg5,
        Target::Icg,
    ];
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Sc => "SC",
            Target::Ovc => "OVC",
            Target::Subgraph => "SUBGRAPH",
            Target::Mspd => "MSPD",
            Target::Icg5 => "ICG5",
            Target::Icg => "ICG",
        })
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Precondition(format!("unknown target {s:?}")))
    }
}

/// Oracle limits. Target graphs with more vertices than `vertices` skip the
/// exhaustive oracle; `states` caps every search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budgets {
    pub vertices: usize,
    pub states: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            vertices: 40,
            states: 2_000_000,
        }
    }
}

/// Settings for a round trip. `strictness` is handed to the generators;
/// `timings` adds wall-clock times, which makes reports non-reproducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Options {
    pub budgets: Budgets,
    pub strictness: Strictness,
    pub timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Yes,
    No,
    Valid,
    Invalid,
    Skipped,
    BudgetExceeded,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Yes => "yes",
            Status::No => "no",
            Status::Valid => "valid",
            Status::Invalid => "invalid",
            Status::Skipped => "SKIPPED(budget)",
            Status::BudgetExceeded => "BUDGET_EXCEEDED",
            Status::Error => "error",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stage {
    pub name: String,
    pub status: Status,
    /// Whether the stage answers the decision question of its side.
    pub decides: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Success,
    Inconclusive,
    Fail,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Success => 0,
            Verdict::Fail => 1,
            Verdict::Inconclusive => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Success => "SUCCESS",
            Verdict::Inconclusive => "INCONCLUSIVE",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineReport {
    pub source: String,
    pub target: Target,
    pub sizes: Vec<(String, usize)>,
    pub stages: Vec<Stage>,
    pub verdict: Verdict,
}

impl PipelineReport {
    pub fn stage(&self, name: &str) -> Option<&Stage> {
        self.stages.iter().find(|s| s.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }
}

impl fmt::Display for PipelineReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "source={}", self.source)?;
        writeln!(f, "target={}", self.target)?;
        for (k, v) in &self.sizes {
            writeln!(f, "size.{k}={v}")?;
        }
        for s in &self.stages {
            writeln!(f, "stage.{}={}", s.name, s.status)?;
            if let Some(d) = &s.detail {
                writeln!(f, "stage.{}.detail={d}", s.name)?;
            }
            if let Some(ms) = s.millis {
                writeln!(f, "time.{}_ms={ms}", s.name)?;
            }
        }
        writeln!(f, "verdict={}", self.verdict)
    }
}

struct Recorder {
    stages: Vec<Stage>,
    sizes: Vec<(String, usize)>,
    timings: bool,
}

impl Recorder {
    fn size(&mut self, key: &str, v: usize) {
        self.sizes.push((key.to_string(), v));
    }

    fn run<T>(
        &mut self,
        name: &str,
        decides: bool,
        f: impl FnOnce() -> Result<(Status, Option<String>, T)>,
    ) -> Option<T> {
        let t0 = Instant::now();
        let (status, detail, out) = match f() {
            Ok((status, detail, out)) => (status, detail, Some(out)),
            Err(Error::BudgetExceeded { budget, unit }) => (
                Status::BudgetExceeded,
                Some(format!("{budget} {unit}")),
                None,
            ),
            Err(e) => (Status::Error, Some(e.to_string()), None),
        };
        self.stages.push(Stage {
            name: name.to_string(),
            status,
            decides,
            detail,
            millis: self.timings.then(|| t0.elapsed().as_millis()),
        });
        out
    }

    fn skip(&mut self, name: &str, why: String) {
        self.stages.push(Stage {
            name: name.to_string(),
            status: Status::Skipped,
            decides: true,
            detail: Some(why),
            millis: None,
        });
    }

    fn verdict(&self) -> Verdict {
        let answers: Vec<Status> = self
            .stages
            .iter()
            .filter(|s| s.decides && matches!(s.status, Status::Yes | Status::No))
            .map(|s| s.status)
            .collect();
        let broken = self
            .stages
            .iter()
            .any(|s| matches!(s.status, Status::Invalid | Status::Error));
        if broken || answers.windows(2).any(|w| w[0] != w[1]) {
            Verdict::Fail
        } else if answers.len() < 2
            || self
                .stages
                .iter()
                .any(|s| s.status == Status::BudgetExceeded)
        {
            Verdict::Inconclusive
        } else {
            Verdict::Success
        }
    }
}

fn yes_no<T>(found: Option<T>) -> (Status, Option<String>, Option<T>) {
    let status = if found.is_some() {
        Status::Yes
    } else {
        Status::No
    };
    (status, None, found)
}

fn valid(ok: bool, detail: Option<String>) -> Result<(Status, Option<String>, ())> {
    Ok((if ok { Status::Valid } else { Status::Invalid }, detail, ()))
}

fn solve_stage(
    rec: &mut Recorder,
    name: &str,
    inst: &CraftingInstance,
    decides: bool,
) -> Option<Witness> {
    rec.run(name, decides, || Ok(yes_no(solve(inst, Method::HeldKarp))))
        .flatten()
}

/// Runs the full round trip from `source` to `target`.
pub fn roundtrip(source: &Source, target: Target, opts: &Options) -> Result<PipelineReport> {
    let mut rec = Recorder {
        stages: Vec::new(),
        sizes: Vec::new(),
        timings: opts.timings,
    };
    match source {
        Source::Cnf(cnf) => cnf_chain(&mut rec, cnf, target, opts)?,
        Source::Crafting(inst) => crafting_chain(&mut rec, inst, target, opts)?,
        Source::X3c(x) => x3c_chain(&mut rec, x, target, opts)?,
    }
    let verdict = rec.verdict();
    Ok(PipelineReport {
        source: source.kind().to_string(),
        target,
        sizes: rec.sizes,
        stages: rec.stages,
        verdict,
    })
}

fn cnf_chain(rec: &mut Recorder, cnf: &CnfFormula, target: Target, b: &Options) -> Result<()> {
    if target == Target::Icg {
        return Err(Error::Precondition("ICG targets take X3C sources".into()));
    }
    rec.size("source.vars", cnf.num_vars());
    rec.size("source.clauses", cnf.num_clauses());
    let assignment = rec
        .run("sat_bf", true, || Ok(yes_no(sat_bf(cnf))))
        .flatten();
    let (sc, map) = red::sat_to_sc(cnf);
    rec.size("sc.length", sc.s().len());
    rec.size("sc.strings", sc.n());
    let encoded = assignment.as_ref().and_then(|a| {
        rec.run("encode_assignment", false, || {
            let w = red::encode_assignment(&map, cnf, a)?;
            let (status, _, _) = valid(verify_witness(&sc, &w)?, None)?;
            Ok((status, Some(w.to_string()), w))
        })
    });
    let solved = solve_stage(rec, "solve_sc", &sc, true);
    if let Some(w) = &solved {
        rec.run("decode_assignment", false, || {
            let a = red::decode_assignment(&map, &sc, w)?;
            valid(cnf.is_satisfied_by(&a), None)
        });
    }
    let witness = solved.or(encoded);
    match target {
        Target::Sc => Ok(()),
        Target::Ovc => {
            let ovc = red::complement_to_ovc(&sc)?;
            solve_stage(rec, "solve_ovc", &ovc, true);
            if let Some(w) = &witness {
                rec.run("witness_on_ovc", false, || {
                    valid(verify_witness(&ovc, w)?, None)
                });
            }
            Ok(())
        }
        Target::Subgraph => subgraph_stages(rec, &sc, witness.as_ref(), b),
        Target::Mspd | Target::Icg5 => {
            let ovc = red::complement_to_ovc(&sc)?;
            graph_stages(rec, &ovc, witness.as_ref(), target, b)
        }
        Target::Icg => unreachable!("rejected above"),
    }
}

fn crafting_chain(
    rec: &mut Recorder,
    inst: &CraftingInstance,
    target: Target,
    b: &Options,
) -> Result<()> {
    if target == Target::Icg {
        return Err(Error::Precondition("ICG targets take X3C sources".into()));
    }
    rec.size("source.length", inst.s().len());
    rec.size("source.strings", inst.n());
    let witness = solve_stage(rec, "solve", inst, true);
    let flip = |mode| inst.with_host(inst.s().complement(), mode);
    let want = match target {
        Target::Sc | Target::Subgraph => Mode::Domination,
        _ => Mode::Orthogonality,
    };
    let mid = if inst.mode() == want {
        inst.clone()
    } else {
        flip(want)?
    };
    match target {
        Target::Sc | Target::Ovc => {
            let name = if want == Mode::Domination {
                "solve_sc"
            } else {
                "solve_ovc"
            };
            rec.run(name, true, || {
                let (found, stats) = crate::crafting::solve_with_stats(&mid, Method::Split);
                Ok((
                    if found.is_some() {
                        Status::Yes
                    } else {
                        Status::No
                    },
                    Some(format!("split states {}", stats.states)),
                    (),
                ))
            });
            if let Some(w) = &witness {
                rec.run("witness_transfer", false, || {
                    valid(verify_witness(&mid, w)?, None)
                });
            }
            Ok(())
        }
        Target::Subgraph => subgraph_stages(rec, &mid, witness.as_ref(), b),
        Target::Mspd | Target::Icg5 => graph_stages(rec, &mid, witness.as_ref(), target, b),
        Target::Icg => unreachable!("rejected above"),
    }
}

fn subgraph_stages(
    rec: &mut Recorder,
    sc: &CraftingInstance,
    witness: Option<&Witness>,
    opts: &Options,
) -> Result<()> {
    let b = &opts.budgets;
    let (g, p, map) = red::sc_to_subgraph(sc, SubgraphVariant::Caterpillar, opts.strictness)?;
    rec.size("target.host_vertices", g.n());
    rec.size("target.pattern_vertices", p.n());
    if let Some(w) = witness {
        rec.run("build_target_witness", true, || {
            let emb = red::build_subgraph_embedding(&map, sc, w)?;
            let ok = verify_embedding(
                &p,
                &g,
                Relation::Subgraph,
                &EmbeddingWitness::Map(emb.clone()),
            );
            let back = red::decode_perm_from_embedding(&map, &emb)?;
            let ok = ok && verify_witness(sc, &back)?;
            Ok((if ok { Status::Yes } else { Status::Invalid }, None, ()))
        });
    }
    if g.n() > b.vertices {
        rec.skip(
            "target_oracle",
            format!("{} host vertices > {}", g.n(), b.vertices),
        );
        return Ok(());
    }
    let found = rec
        .run("target_oracle", true, || {
            Ok(yes_no(embed_bf(&p, &g, Relation::Subgraph, b.states)?))
        })
        .flatten();
    if let Some(EmbeddingWitness::Map(emb)) = found {
        rec.run("decode_target_witness", false, || {
            let w = red::decode_perm_from_embedding(&map, &emb)?;
            valid(verify_witness(sc, &w)?, Some(w.to_string()))
        });
    }
    Ok(())
}

fn graph_stages(
    rec: &mut Recorder,
    ovc: &CraftingInstance,
    witness: Option<&Witness>,
    target: Target,
    opts: &Options,
) -> Result<()> {
    let b = &opts.budgets;
    if target == Target::Mspd {
        let (g, budget, map) = red::ovc_to_mspd(ovc, MSPD_WIDTH, opts.strictness)?;
        rec.size("target.vertices", g.n());
        rec.size("target.bag_budget", budget);
        if let Some(w) = witness {
            rec.run("build_target_witness", true, || {
                let d = red::build_mspd_witness(&map, ovc, w)?;
                let ok = validate_decomposition(&g, &d, MSPD_WIDTH, budget).is_ok();
                let back = red::decode_perm_from_decomposition(&map, &d)?;
                let ok = ok && verify_witness(ovc, &back)?;
                Ok((if ok { Status::Yes } else { Status::Invalid }, None, ()))
            });
        }
        if g.n() > b.vertices {
            rec.skip(
                "target_oracle",
                format!("{} vertices > {}", g.n(), b.vertices),
            );
            return Ok(());
        }
        let found = rec
            .run("target_oracle", true, || {
                Ok(yes_no(mspd_exact(
                    &g,
                    MSPD_WIDTH,
                    budget,
                    Shape::Path,
                    b.states,
                )?))
            })
            .flatten();
        if let Some(d) = found {
            rec.run("decode_target_witness", false, || {
                let w = red::decode_perm_from_decomposition(&map, &d)?;
                valid(verify_witness(ovc, &w)?, Some(w.to_string()))
            });
        }
        return Ok(());
    }
    let (cg, map) = red::ovc_to_icg5(ovc, opts.strictness)?;
    rec.size("target.vertices", cg.graph().n());
    if let Some(w) = witness {
        rec.run("build_target_witness", true, || {
            let m = red::build_icg5_witness(&map, ovc, w)?;
            let ok = validate_interval_model(&cg, &m).is_ok();
            let back = red::decode_perm_from_interval_model(&map, &m)?;
            let ok = ok && verify_witness(ovc, &back)?;
            Ok((if ok { Status::Yes } else { Status::Invalid }, None, ()))
        });
    }
    interval_oracle(rec, &cg, b, |m| {
        let w = red::decode_perm_from_interval_model(&map, m)?;
        valid(verify_witness(ovc, &w)?, Some(w.to_string()))
    });
    Ok(())
}

fn interval_oracle(
    rec: &mut Recorder,
    cg: &ColoredGraph,
    b: &Budgets,
    decode: impl FnOnce(&crate::graph::IntervalModel) -> Result<(Status, Option<String>, ())>,
) {
    let n = cg.graph().n();
    if n > b.vertices {
        rec.skip("target_oracle", format!("{n} vertices > {}", b.vertices));
        return;
    }
    let found = rec
        .run("target_oracle", true, || {
            Ok(yes_no(intervalize_exact(cg, b.states)?))
        })
        .flatten();
    if let Some(m) = found {
        rec.run("decode_target_witness", false, || decode(&m));
    }
}

fn x3c_chain(rec: &mut Recorder, x: &X3cInstance, target: Target, opts: &Options) -> Result<()> {
    let b = &opts.budgets;
    if target != Target::Icg {
        return Err(Error::Precondition("X3C sources only reduce to ICG".into()));
    }
    rec.size("source.elements", x.n());
    rec.size("source.sets", x.m());
    let cover = rec.run("x3c_bf", true, || Ok(yes_no(x3c_bf(x)))).flatten();
    let (cg, map) = red::x3c_to_icg(x)?;
    rec.size("target.vertices", cg.graph().n());
    rec.size("target.colours", cg.palette().len());
    if let Some(c) = &cover {
        rec.run("build_target_witness", true, || {
            let m = red::build_icg_witness_x3c(&map, x, c)?;
            let ok = validate_interval_model(&cg, &m).is_ok();
            let back = red::decode_cover_from_model(&map, &m);
            let ok = ok && x.is_exact_cover(&back);
            Ok((if ok { Status::Yes } else { Status::Invalid }, None, ()))
        });
    }
    interval_oracle(rec, &cg, b, |m| {
        let c = red::decode_cover_from_model(&map, m);
        valid(x.is_exact_cover(&c), Some(format!("{c:?}")))
    });
    Ok(())
}

/// The instance a source reduces to, ready to print.
#[derive(Debug, Clone)]
pub enum Reduced {
    Crafting(CraftingInstance),
    Subgraph {
        host: Graph,
        pattern: Graph,
    },
    Mspd {
        graph: Graph,
        width: usize,
        bags: usize,
    },
    Colored(ColoredGraph),
}

impl fmt::Display for Reduced {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reduced::Crafting(inst) => write!(f, "{inst}"),
            Reduced::Subgraph { host, pattern } => {
                writeln!(f, "# host")?;
                write!(f, "{host}")?;
                writeln!(f, "# pattern")?;
                write!(f, "{pattern}")
            }
            Reduced::Mspd { graph, width, bags } => {
                writeln!(f, "# width <= {width}, bags <= {bags}")?;
                write!(f, "{graph}")
            }
            Reduced::Colored(cg) => write!(f, "{cg}"),
        }
    }
}

/// Applies the generator chain from `source` to `target` without solving
/// anything. Crafting sources are complemented when the target needs the
/// other mode; `width` only matters for the decomposition target.
pub fn reduce(
    source: &Source,
    target: Target,
    variant: SubgraphVariant,
    width: usize,
    strictness: Strictness,
) -> Result<Reduced> {
    let inst = match source {
        Source::X3c(x) if target == Target::Icg => {
            return Ok(Reduced::Colored(red::x3c_to_icg(x)?.0))
        }
        Source::X3c(_) => return Err(Error::Precondition("X3C sources only reduce to ICG".into())),
        _ if target == Target::Icg => {
            return Err(Error::Precondition("ICG targets take X3C sources".into()))
        }
        Source::Cnf(cnf) => red::sat_to_sc(cnf).0,
        Source::Crafting(inst) => inst.clone(),
    };
    let want = match target {
        Target::Sc | Target::Subgraph => Mode::Domination,
        _ => Mode::Orthogonality,
    };
    let inst = if inst.mode() == want {
        inst
    } else {
        inst.with_host(inst.s().complement(), want)?
    };
    Ok(match target {
        Target::Sc | Target::Ovc => Reduced::Crafting(inst),
        Target::Subgraph => {
            let (host, pattern, _) = red::sc_to_subgraph(&inst, variant, strictness)?;
            Reduced::Subgraph { host, pattern }
        }
        Target::Mspd => {
            let (graph, bags, _) = red::ovc_to_mspd(&inst, width, strictness)?;
            Reduced::Mspd { graph, width, bags }
        }
        Target::Icg5 => Reduced::Colored(red::ovc_to_icg5(&inst, strictness)?.0),
        Target::Icg => unreachable!("rejected above"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn satisfiable_formula_to_sc() {
        let src = Source::parse("p cnf 3 1\n1 2 3 0\n").unwrap();
        let r = roundtrip(&src, Target::Sc, &Options::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Success, "{r}");
        assert_eq!(r.stage("sat_bf").unwrap().status, Status::Yes);
        assert_eq!(r.stage("solve_sc").unwrap().status, Status::Yes);
        assert!(r.to_string().ends_with("verdict=SUCCESS\n"));
    }

    #[test]
    fn non_palindromic_ovc_to_mspd() {
        let src = Source::parse("OVC\n10110\n01001\n").unwrap();
        assert!(roundtrip(&src, Target::Mspd, &Options::default()).is_err());
        let opts = Options {
            strictness: Strictness::Permissive,
            ..Options::default()
        };
        let r = roundtrip(&src, Target::Mspd, &opts).unwrap();
        assert_eq!(r.stage("target_oracle").unwrap().status, Status::Skipped);
        assert_eq!(r.stage("build_target_witness").unwrap().status, Status::Yes);
        assert_eq!(r.verdict, Verdict::Success, "{r}");
    }

    #[test]
    fn incompatible_pairs_are_rejected() {
        let src = Source::parse("3 1\n1 2 3\n").unwrap();
        assert!(roundtrip(&src, Target::Sc, &Options::default()).is_err());
        let src = Source::parse("SC\n1\n1\n").unwrap();
        assert!(roundtrip(&src, Target::Icg, &Options::default()).is_err());
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let src = Source::parse("SC\n1011101\n101\n1\n101\n").unwrap();
        let tight = Options {
            budgets: Budgets {
                vertices: 100,
                states: 3,
            },
            ..Options::default()
        };
        let r = roundtrip(&src, Target::Subgraph, &tight).unwrap();
        assert_eq!(
            r.stage("target_oracle").unwrap().status,
            Status::BudgetExceeded
        );
        assert_eq!(r.verdict, Verdict::Inconclusive);
        let r = roundtrip(&src, Target::Subgraph, &Options::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Success, "{r}");
    }
}
