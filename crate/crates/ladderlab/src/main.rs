//! Command-line workbench for finite normed lattices: skeleton forcing,
//! amalgamation, ladder growth, towers, closure systems, document
//! verification, corpus export, and the acceptance battery.
//!
//! Exit codes: 0 on success, 1 when a verified claim fails, 2 on bad
//! input or unusable parameters.

use clap::{Parser, Subcommand, ValueEnum};
use ladder_core::amalgam::{amalgamate, verify_lower_covers, AmalgamInput};
use ladder_core::closure::{build_semilattice, closure_from_f0, f0_linear};
use ladder_core::forcing::{full_dense_family, generic_filter, skeleton_from_generic};
use ladder_core::growth::{grow_2ladder, grow_3ladder, GrowthTrace, StepKind};
use ladder_core::ladders::is_k_ladder;
use ladder_core::morass::{
    base_lattice, build_truncated_morass_with_theta0, canonical_chain, check_mor2tree,
    direct_limit, morass_to_ladder, verify_axioms, verify_ladder_system, AxiomOutcome, BaseKind,
    DirectedSystem,
};
use ladder_core::poset::{ElementId, FinitePoset};
use ladderlab::failure::{Failure, LabResult};
use ladderlab::fixtures::{normed_fixtures, random_normed};
use ladderlab::json::{document_from_str, document_to_value, to_canonical_string, Document};
use ladderlab::{accept, dot};
use serde_json::{json, Value};
use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "ladderlab",
    version,
    about = "Workbench for finite normed lattices and their ladders"
)]
struct Cli {
    /// Seed for every randomized corpus.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Directory for written structure files; reports always go to stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Format for written structure files.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Base {
    Paper,
    Renormed,
}

impl Base {
    fn kind(self) -> BaseKind {
        match self {
            Base::Paper => BaseKind::Paper,
            Base::Renormed => BaseKind::Renormed,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run a full generic sequence over a normed lattice document and
    /// verify that the union of the stages is a skeleton.
    Skeleton {
        /// JSON document with elements, relations, and norms.
        file: PathBuf,
    },
    /// Amalgamate a transitive-normed 3-ladder document with a copy of
    /// itself above a cut and verify the result.
    Amalgamate {
        /// JSON document with elements, relations, and norms.
        file: PathBuf,
        /// The cut: glue below this norm, duplicate from it upward.
        #[arg(long)]
        delta: usize,
        /// Comma-separated element labels of a repeat-free cofinal chain
        /// starting at norm delta; the canonical chain when omitted.
        /// Labels containing commas are reassembled from the pieces.
        #[arg(long, value_delimiter = ',')]
        chain: Option<Vec<String>>,
    },
    /// Grow a ladder tower stage by stage and report every stage.
    Grow {
        /// Number of growth steps after the seed.
        #[arg(long, default_value_t = 4)]
        stages: usize,
        /// Ladder grade to maintain: 3 doubles along forced skeletons
        /// from the one-point seed, 2 adds fresh atoms to the diamond.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(2..=3))]
        ladder: u8,
    },
    /// Build a truncated tower, verify its axioms and tree coherence,
    /// attach the ladder system, and take the direct limit.
    Morass {
        /// Cut sizes of the tower steps, e.g. 1,2.
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        deltas: Vec<usize>,
        /// Base level width; defaults to the width matching the base.
        #[arg(long)]
        theta0: Option<usize>,
        /// Base lattice for the ladder system.
        #[arg(long, value_enum, default_value_t = Base::Renormed)]
        base: Base,
    },
    /// Build the closed-set semilattice of the below-max seed on subsets
    /// of a finite ground set.
    Closure {
        /// Ground set size (at most 12).
        #[arg(long)]
        ground: usize,
        /// Seed arity: the seed acts on subsets of this size plus one.
        #[arg(long)]
        n: usize,
    },
    /// Validate a poset document and report its invariants.
    Verify {
        /// JSON document with elements, relations, and optional norms.
        file: PathBuf,
        /// Additionally require the poset to be a lattice in which every
        /// element has at most this many lower covers.
        #[arg(long)]
        ladder: Option<usize>,
    },
    /// Write the named fixture corpus, or a seeded random corpus, as
    /// structure files.
    Export {
        /// Write this many seeded random normed lattices instead of the
        /// named corpus.
        #[arg(long)]
        random: Option<usize>,
    },
    /// Run the acceptance battery and print one line per criterion.
    Accept,
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(f) => {
            eprintln!("error: {}", f.message());
            std::process::exit(f.exit_code());
        }
    }
}

fn run(cli: &Cli) -> LabResult<i32> {
    match &cli.command {
        Command::Skeleton { file } => skeleton_cmd(cli, file),
        Command::Amalgamate { file, delta, chain } => {
            amalgamate_cmd(cli, file, *delta, chain.as_deref())
        }
        Command::Grow { stages, ladder } => grow_cmd(cli, *stages, *ladder),
        Command::Morass {
            deltas,
            theta0,
            base,
        } => morass_cmd(cli, deltas, *theta0, *base),
        Command::Closure { ground, n } => closure_cmd(cli, *ground, *n),
        Command::Verify { file, ladder } => verify_cmd(file, *ladder),
        Command::Export { random } => export_cmd(cli, *random),
        Command::Accept => accept_cmd(),
    }
}

fn read_document(file: &PathBuf) -> LabResult<Document> {
    let text = fs::read_to_string(file)?;
    document_from_str(&text)
}

/// Prints a JSON report to stdout with a trailing newline.
fn emit(report: &Value) {
    print!("{}", to_canonical_string(report));
}

/// Writes one structure file into `--out`, if set, and returns its path.
fn write_structure(
    cli: &Cli,
    name: &str,
    p: &FinitePoset,
    norm: Option<&[usize]>,
) -> LabResult<Option<String>> {
    let Some(dir) = &cli.out else {
        return Ok(None);
    };
    fs::create_dir_all(dir)?;
    let (text, ext) = match cli.format {
        Format::Json => (to_canonical_string(&document_to_value(p, norm)), "json"),
        Format::Dot => (dot::poset_to_dot(p, norm), "dot"),
    };
    let path = dir.join(format!("{name}.{ext}"));
    fs::write(&path, text)?;
    Ok(Some(path.display().to_string()))
}

fn skeleton_cmd(cli: &Cli, file: &PathBuf) -> LabResult<i32> {
    let k = read_document(file)?.normed()?;
    let targets = full_dense_family(&k);
    let stages = generic_filter(&k, &BTreeSet::new(), &targets)?;
    let sk = skeleton_from_generic(&k, &stages)?;
    let (sub, _) = k.poset().induced(&sk);
    let written = write_structure(cli, "skeleton", &sub, None)?;
    emit(&json!({
        "elements": k.len(),
        "stage_sizes": stages.iter().map(|s| s.len()).collect::<Vec<_>>(),
        "skeleton": sk.iter().map(|&x| k.label(x)).collect::<Vec<_>>(),
        "skeleton_size": sk.len(),
        "verified": true,
        "written": written,
    }));
    Ok(0)
}

/// Resolves comma-split label tokens against the element list, greedily
/// rejoining consecutive tokens when a label itself contains commas.
fn resolve_labels(
    k: &ladder_core::normed::NormedLattice,
    tokens: &[String],
) -> LabResult<Vec<ElementId>> {
    let labels = k.poset().labels();
    let mut ids = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        let mut candidate = tokens[i].clone();
        let mut j = i + 1;
        loop {
            if let Some(pos) = labels.iter().position(|l| *l == candidate) {
                ids.push(ElementId::new(pos));
                break;
            }
            if j < tokens.len() {
                candidate.push(',');
                candidate.push_str(&tokens[j]);
                j += 1;
            } else {
                return Err(Failure::Input(format!(
                    "chain label {:?} names no element",
                    tokens[i]
                )));
            }
        }
        i = j;
    }
    Ok(ids)
}

fn amalgamate_cmd(
    cli: &Cli,
    file: &PathBuf,
    delta: usize,
    chain: Option<&[String]>,
) -> LabResult<i32> {
    let k = read_document(file)?.normed()?;
    if !k.is_transitive() {
        return Err(Failure::Input(String::from(
            "the norm range must be an initial segment; renumber the norms first",
        )));
    }
    let chain_ids: Vec<ElementId> = match chain {
        Some(tokens) => resolve_labels(&k, tokens)?,
        None => canonical_chain(&k, delta)?,
    };
    let input = AmalgamInput::new(k, delta, &chain_ids)?;
    let result = amalgamate(&input)?;
    let report = verify_lower_covers(&result)?;
    let written = write_structure(cli, "amalgam", result.kbar.poset(), Some(result.kbar.norms()))?;
    emit(&json!({
        "base_elements": input.base().len(),
        "delta": delta,
        "chain": chain_ids
            .iter()
            .map(|&x| input.base().label(x))
            .collect::<Vec<_>>(),
        "elements": result.kbar.len(),
        "range": result.kbar.range_bound(),
        "pairs": result.pairs.len(),
        "max_lower_covers": report.max_lower_covers,
        "cover_mismatches": report.mismatches.len(),
        "verified": report.clean(),
        "written": written,
    }));
    Ok(if report.clean() { 0 } else { 1 })
}

fn grow_cmd(cli: &Cli, stages: usize, ladder: u8) -> LabResult<i32> {
    let trace: GrowthTrace = if ladder == 3 {
        grow_3ladder(stages)?
    } else {
        let diamond = base_lattice(BaseKind::Renormed)?.lattice().clone();
        grow_2ladder(stages, &diamond)?
    };
    let last = trace.last();
    let written = write_structure(cli, "grown", last.poset(), None)?;
    emit(&json!({
        "ladder": ladder,
        "stage_sizes": trace.stages.iter().map(|s| s.len()).collect::<Vec<_>>(),
        "kinds": trace
            .kinds
            .iter()
            .map(|k| match k {
                StepKind::Seed => "seed",
                StepKind::FreshAtomAndTop => "fresh-atom-and-top",
                StepKind::SkeletonDouble => "skeleton-double",
            })
            .collect::<Vec<_>>(),
        "verified": true,
        "written": written,
    }));
    Ok(0)
}

fn axiom_value(a: &AxiomOutcome) -> Value {
    match a {
        AxiomOutcome::Pass => json!("pass"),
        AxiomOutcome::Vacuous => json!("vacuous"),
        AxiomOutcome::Fail(why) => json!({ "fail": why }),
    }
}

fn morass_cmd(cli: &Cli, deltas: &[usize], theta0: Option<usize>, base: Base) -> LabResult<i32> {
    let kind = base.kind();
    let theta0 = theta0.unwrap_or_else(|| kind.theta0());
    let m = build_truncated_morass_with_theta0(theta0, deltas)?;
    let axioms = verify_axioms(&m);
    let tree = check_mor2tree(&m);
    let sys = morass_to_ladder(&m, kind, canonical_chain)?;
    let report = verify_ladder_system(&m, &sys);
    let limit = direct_limit(&DirectedSystem::from_ladder_system(&sys))?;
    let top = sys.levels.last().expect("systems have levels");
    let written = write_structure(cli, "tower-top", top.poset(), Some(top.norms()))?;
    let verified = tree.pass && report.all_hold();
    let mut axiom_map = serde_json::Map::new();
    axiom_map.insert("p0-base-width".into(), axiom_value(&axioms.p0));
    axiom_map.insert("p1-countability".into(), axiom_value(&axioms.p1));
    axiom_map.insert("p2-composition".into(), axiom_value(&axioms.p2));
    axiom_map.insert("p3-step".into(), axiom_value(&axioms.p3));
    axiom_map.insert("p4-limit-levels".into(), axiom_value(&axioms.p4));
    axiom_map.insert("p5-coverage".into(), axiom_value(&axioms.p5));
    emit(&json!({
        "thetas": m.thetas,
        "family_sizes": (0..m.levels())
            .flat_map(|a| (a + 1..m.levels()).map(move |b| (a, b)))
            .map(|(a, b)| json!([a, b, m.maps(a, b).len()]))
            .collect::<Vec<_>>(),
        "axioms": Value::Object(axiom_map),
        "tree_coherent": tree.pass,
        "level_sizes": sys.levels.iter().map(|l| l.len()).collect::<Vec<_>>(),
        "system_laws_hold": report.all_hold(),
        "base_amended": report.base_amended,
        "limit_object": limit.limit,
        "limit_size": sys.levels[limit.limit].len(),
        "verified": verified,
        "written": written,
    }));
    Ok(if verified { 0 } else { 1 })
}

fn closure_cmd(cli: &Cli, ground: usize, n: usize) -> LabResult<i32> {
    let seed = f0_linear(ground, n)?;
    let cl = closure_from_f0(&seed, ground, n)?;
    let sl = build_semilattice(&cl)?;
    let written = write_structure(cli, "closure", sl.lattice.poset(), None)?;
    emit(&json!({
        "ground": ground,
        "n": n,
        "elements": sl.lattice.len(),
        "generators": sl.generators.len(),
        "atomistic": sl.lattice.is_atomistic(),
        "breadth": sl.lattice.poset().breadth(),
        "certified_bound": n + 1,
        "verified": true,
        "written": written,
    }));
    Ok(0)
}

fn verify_cmd(file: &PathBuf, ladder: Option<usize>) -> LabResult<i32> {
    let doc = read_document(file)?;
    let p = &doc.poset;
    let is_lattice = doc.lattice().is_ok();
    let norm_report = match &doc.norm {
        Some(_) => {
            let k = doc.normed()?;
            json!({
                "max_compatible": true,
                "transitive": k.is_transitive(),
                "range": k.range_bound(),
            })
        }
        None => Value::Null,
    };
    let mut verified = true;
    let ladder_report = match ladder {
        Some(grade) => match doc.lattice() {
            Ok(l) => {
                let ok = is_k_ladder(&l, grade);
                verified = ok;
                json!({ "grade": grade, "holds": ok })
            }
            Err(_) => {
                verified = false;
                json!({ "grade": grade, "holds": false, "reason": "not a lattice" })
            }
        },
        None => Value::Null,
    };
    emit(&json!({
        "elements": p.len(),
        "breadth": p.breadth(),
        "join_breadth": p.join_breadth(),
        "is_lattice": is_lattice,
        "norm": norm_report,
        "ladder": ladder_report,
        "verified": verified,
    }));
    if !verified {
        return Err(Failure::Verify(String::from(
            "the document fails the requested ladder grade",
        )));
    }
    Ok(0)
}

fn export_cmd(cli: &Cli, random: Option<usize>) -> LabResult<i32> {
    let corpus: Vec<(String, ladder_core::normed::NormedLattice)> = match random {
        Some(count) => random_normed(count, 4, cli.seed)
            .into_iter()
            .enumerate()
            .map(|(i, k)| (format!("random-{i:03}"), k))
            .collect(),
        None => normed_fixtures(),
    };
    if cli.out.is_none() {
        return Err(Failure::Input(String::from(
            "export writes files; pass --out DIR",
        )));
    }
    let mut written = Vec::new();
    for (name, k) in &corpus {
        if let Some(path) = write_structure(cli, name, k.poset(), Some(k.norms()))? {
            written.push(path);
        }
    }
    emit(&json!({
        "count": written.len(),
        "seed": cli.seed,
        "written": written,
    }));
    Ok(0)
}

fn accept_cmd() -> LabResult<i32> {
    let outcomes = accept::run_all();
    for outcome in &outcomes {
        println!("{}", outcome.line());
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    if failed > 0 {
        eprintln!("{failed} of {} criteria failed", outcomes.len());
        return Ok(1);
    }
    Ok(0)
}
