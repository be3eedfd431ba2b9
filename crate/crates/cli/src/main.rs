//! `crystals`: compute with and verify Kashiwara crystals of gl_k.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage or
//! input errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use glk_crystals::any::{AnyElement, Model};
use glk_crystals::base::schur_bruteforce;
use glk_crystals::cactus::{inner_act, verify_cactus_relations, verify_reduced_braid, CactusWord, OuterAction};
use glk_crystals::crystal::{
    character, check_crystal_axioms, export_graph, verify_xi_properties, Schutzenberger,
};
use glk_crystals::gt::{
    beta, bk_move, bk_q, check_cgp_homomorphism, enumerate_k_lambda, gt_to_tableau,
    verify_bk_moves, GtCrystal, GtPattern,
};
use glk_crystals::matrix::{
    col_structure, from_col_structure, from_row_structure, row_structure, verify_commutation,
    verify_dual_implementations, BitMatrix, ColumnCrystal, FundamentalCrystal, RowCrystal,
    DEFAULT_BUDGET,
};
use glk_crystals::skew_howe::{
    duality_inv, duality_iso, verify_agreement, verify_corollary, verify_counting_identity,
    verify_duality, verify_tableau_maps,
};
use glk_crystals::suites::{self, Config, Suite};
use glk_crystals::tableau::{enumerate_b_lambda, Ssyt, TableauCrystal};
use glk_crystals::tensor::{tensor_profiles, TensorCrystal};
use glk_crystals::{Crystal, CrystalError, Interval, Partition, Report};

#[derive(Parser)]
#[command(
    name = "crystals",
    version,
    about = "Kashiwara crystals of gl_k: tableaux, Gelfand-Tsetlin patterns, tensor products, \
             0/1 matrices, cactus group actions and skew Howe duality",
    after_help = "Cactus words are written like \"s[1,3] s[2,4]\" and act left to right: \
                  the first generator is applied first."
)]
struct Cli {
    /// Worker threads for the exhaustive verifiers (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Largest instance, in elements, that is enumerated. A budget of 0
    /// makes `verify all` run the goldens only.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Enumerate instances over the budget anyway.
    #[arg(long, global = true)]
    force: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Tableau,
    Matrix,
    Tensor,
    Gt,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Tableau => Model::Tableau,
            ModelArg::Matrix => Model::Matrix,
            ModelArg::Tensor => Model::Tensor,
            ModelArg::Gt => Model::Gt,
        }
    }
}

/// Which crystal structure of a 0/1 matrix: `row` is the gl_m structure
/// read from the rows, `column` the gl_n structure read from the columns.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Structure {
    Row,
    Column,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Inner,
    Outer,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    E,
    F,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Goldens,
    Axioms,
    Xi,
    Cactus,
    Braid,
    Cgp,
    Oracles,
    Commutation,
    Duality,
    Agree,
    Corollary,
}

/// A whole crystal: `B_lambda` of gl_rank (tableau, gt), `B_lambda` to the
/// tensor power `--factors` (tensor), or `Λ^N B_{n,m}` (matrix).
#[derive(Args, Clone)]
struct InstanceArgs {
    #[arg(long, value_enum)]
    model: Option<ModelArg>,
    #[arg(long)]
    rank: Option<usize>,
    /// Comma-separated parts, e.g. 2,1,0.
    #[arg(long)]
    shape: Option<Partition>,
    /// Number of rows of the matrices.
    #[arg(long)]
    n: Option<usize>,
    /// Number of columns of the matrices.
    #[arg(long)]
    m: Option<usize>,
    /// Number of ones in the matrices.
    #[arg(long = "N", value_name = "N")]
    big_n: Option<usize>,
    #[arg(long, value_enum)]
    structure: Option<Structure>,
    /// Number of tensor factors.
    #[arg(long, default_value_t = 2)]
    factors: usize,
}

/// One element, from a file (`-` for standard input) or inline JSON.
#[derive(Args, Clone)]
struct InputArgs {
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
    #[arg(long, value_name = "JSON", conflicts_with = "input")]
    element: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Export a crystal graph.
    Graph {
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Weight multiplicities of a crystal.
    Character {
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Tensor rule data of a tensor of tableaux: profiles, strings, e_i, f_i.
    Tensor {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        rank: Option<usize>,
        /// Only this node (default: all).
        #[arg(long)]
        i: Option<usize>,
        /// Only this operator (default: both).
        #[arg(long, value_enum)]
        op: Option<Op>,
    },
    /// Act on an element by a cactus group word.
    Act {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = Mode::Inner)]
        mode: Mode,
        #[arg(long, value_enum)]
        structure: Option<Structure>,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Gelfand-Tsetlin patterns: enumerate K_lambda, or apply moves to one.
    Gt {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        shape: Option<Partition>,
        #[arg(long)]
        rank: Option<usize>,
        /// Moves t_j to apply in order, e.g. "1 2 1".
        #[arg(long)]
        moves: Option<String>,
        /// Apply q_i.
        #[arg(long)]
        q: Option<usize>,
    },
    /// Skew Howe duality of a matrix, or its inverse on a pair of tableaux.
    SkewHowe {
        #[command(flatten)]
        input: InputArgs,
        /// Read {"T_P": tableau, "T_Q": tableau} and print the matrix.
        #[arg(long)]
        inverse: bool,
    },
    /// Run verification suites, or one verifier on one instance.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

/// Output of a command: text to print and whether every verification passed.
struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

/// An error that is the user's: bad arguments or input.
fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow!(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli, &outcome.text) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing output"),
    }
}

fn budget(cli: &Cli) -> u128 {
    if cli.force {
        u128::MAX
    } else {
        cli.budget
    }
}

fn check_budget(cli: &Cli, size: u128) -> anyhow::Result<()> {
    let b = budget(cli);
    if size > b {
        return Err(CrystalError::BudgetExceeded { size, budget: b }.into());
    }
    Ok(())
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    if cli.format == Format::Dot && !matches!(cli.command, Command::Graph { .. }) {
        bail!(usage("--format dot is only available for graph"));
    }
    match &cli.command {
        Command::Graph { instance } => graph(cli, instance),
        Command::Character { instance } => character_cmd(cli, instance),
        Command::Tensor { input, rank, i, op } => tensor(cli, input, *rank, *i, *op),
        Command::Act { input, model, word, mode, structure, rank } => {
            act(cli, input, *model, word, *mode, *structure, *rank)
        }
        Command::Gt { input, shape, rank, moves, q } => gt(cli, input, shape, *rank, moves, *q),
        Command::SkewHowe { input, inverse } => skew_howe(cli, input, *inverse),
        Command::Verify { suite, instance, inject_fault } => verify(cli, *suite, instance, *inject_fault),
    }
}

fn read_json(input: &InputArgs) -> anyhow::Result<Value> {
    let text = match (&input.input, &input.element) {
        (_, Some(inline)) => inline.clone(),
        (Some(path), None) if path.as_os_str() == "-" => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            s
        }
        (Some(path), None) => {
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        }
        (None, None) => bail!(usage("an element is required: use --in PATH or --element JSON")),
    };
    serde_json::from_str(&text).context("malformed JSON input")
}

fn read_element(input: &InputArgs, model: Model, rank: Option<usize>) -> anyhow::Result<AnyElement> {
    Ok(AnyElement::from_json(read_json(input)?, Some(model), rank)?)
}

/// A materialized crystal.
enum Instance {
    Tableau(TableauCrystal, Vec<Ssyt>),
    Gt(GtCrystal, Vec<GtPattern>),
    Tensor(TensorCrystal<TableauCrystal>, Vec<Vec<Ssyt>>),
    Rows(RowCrystal, Vec<BitMatrix>),
    Columns(ColumnCrystal, Vec<BitMatrix>),
}

/// Runs `$body` with `$c` bound to the crystal and `$set` to its elements.
macro_rules! with_instance {
    ($inst:expr, |$c:ident, $set:ident| $body:expr) => {
        match $inst {
            Instance::Tableau($c, $set) => $body,
            Instance::Gt($c, $set) => $body,
            Instance::Tensor($c, $set) => $body,
            Instance::Rows($c, $set) => $body,
            Instance::Columns($c, $set) => $body,
        }
    };
}

fn need<T: Copy>(x: Option<T>, flag: &str, what: &str) -> anyhow::Result<T> {
    x.ok_or_else(|| usage(format!("{what} needs {flag}")))
}

fn matrix_dims(a: &InstanceArgs) -> anyhow::Result<(usize, usize)> {
    Ok((need(a.n, "--n", "a matrix instance")?, need(a.m, "--m", "a matrix instance")?))
}

fn build_instance(cli: &Cli, a: &InstanceArgs) -> anyhow::Result<Instance> {
    let model = need(a.model, "--model", "an instance")?;
    match model {
        ModelArg::Matrix => {
            let (n, m) = matrix_dims(a)?;
            let k = need(a.big_n, "--N", "a matrix instance")?;
            let set = BitMatrix::enumerate_within(n, m, k, budget(cli))?;
            Ok(match need(a.structure, "--structure", "a matrix instance")? {
                Structure::Row => Instance::Rows(RowCrystal::new(n, m), set),
                Structure::Column => Instance::Columns(ColumnCrystal::new(n, m), set),
            })
        }
        ModelArg::Tableau | ModelArg::Gt | ModelArg::Tensor => {
            let rank = need(a.rank, "--rank", "this instance")?;
            let shape = a.shape.clone().ok_or_else(|| usage("this instance needs --shape"))?;
            let set = enumerate_b_lambda(&shape, rank)?;
            match model {
                ModelArg::Tableau => {
                    check_budget(cli, set.len() as u128)?;
                    Ok(Instance::Tableau(TableauCrystal::new(rank), set))
                }
                ModelArg::Gt => {
                    check_budget(cli, set.len() as u128)?;
                    let patterns = enumerate_k_lambda(&shape, rank)?;
                    Ok(Instance::Gt(GtCrystal::new(rank), patterns))
                }
                _ => {
                    let size = (set.len() as u128).checked_pow(a.factors as u32).unwrap_or(u128::MAX);
                    check_budget(cli, size)?;
                    let mut power: Vec<Vec<Ssyt>> = vec![Vec::new()];
                    for _ in 0..a.factors {
                        power = power
                            .iter()
                            .flat_map(|t| set.iter().map(move |b| [t.clone(), vec![b.clone()]].concat()))
                            .collect();
                    }
                    Ok(Instance::Tensor(TensorCrystal::new(TableauCrystal::new(rank)), power))
                }
            }
        }
    }
}

fn graph(cli: &Cli, a: &InstanceArgs) -> anyhow::Result<Outcome> {
    let inst = build_instance(cli, a)?;
    let g = with_instance!(&inst, |c, set| export_graph(c, set, None)?);
    Ok(Outcome::ok(match cli.format {
        Format::Dot => g.to_dot(),
        Format::Json => serde_json::to_string_pretty(&g.to_json())?,
        Format::Text => g.to_text(),
    }))
}

fn character_cmd(cli: &Cli, a: &InstanceArgs) -> anyhow::Result<Outcome> {
    let inst = build_instance(cli, a)?;
    let ch = with_instance!(&inst, |c, set| character(c, set));
    let oracle = match (&inst, &a.shape, a.rank) {
        (Instance::Tableau(..) | Instance::Gt(..), Some(shape), Some(rank)) => {
            Some(schur_bruteforce(shape, rank)? == ch)
        }
        _ => None,
    };
    let size: usize = ch.values().sum();
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "size": size,
            "character": ch.iter().map(|(w, k)| json!({ "weight": w.entries(), "multiplicity": k })).collect::<Vec<_>>(),
            "matches_schur": oracle,
        }))?,
        _ => {
            let mut lines: Vec<String> = ch.iter().map(|(w, k)| format!("{w} {k}")).collect();
            lines.push(format!("size {size}"));
            if let Some(ok) = oracle {
                lines.push(format!("schur oracle {}", if ok { "matches" } else { "differs" }));
            }
            lines.join("\n")
        }
    };
    Ok(Outcome { text, passed: oracle != Some(false) })
}

fn tensor(cli: &Cli, input: &InputArgs, rank: Option<usize>, node: Option<usize>, op: Option<Op>) -> anyhow::Result<Outcome> {
    let AnyElement::Tensor { factors } = read_element(input, Model::Tensor, rank)? else {
        unreachable!("the model was requested")
    };
    let rank = match factors.first() {
        Some(t) => t.rank(),
        None => bail!(usage("a tensor needs at least one factor")),
    };
    if factors.iter().any(|t| t.rank() != rank) {
        return Err(CrystalError::RankMismatch { expected: rank, found: factors.iter().map(Ssyt::rank).max().unwrap_or(rank) }.into());
    }
    let nodes: Vec<usize> = match node {
        Some(i) if (1..rank).contains(&i) => vec![i],
        Some(i) => return Err(CrystalError::IndexOutOfRange { index: i, rank }.into()),
        None => (1..rank).collect(),
    };
    let base = TableauCrystal::new(rank);
    let tc = TensorCrystal::new(base);
    let show = |t: &Option<Vec<Ssyt>>| match t {
        Some(t) => json!(t.iter().map(Ssyt::label).collect::<Vec<_>>()),
        None => Value::Null,
    };
    let mut rows = Vec::new();
    for i in nodes {
        let (eps, phi) = tensor_profiles(&base, &factors, i);
        let mut row = json!({
            "i": i,
            "epsilon_profile": eps,
            "phi_profile": phi,
            "epsilon": tc.epsilon(i, &factors),
            "phi": tc.phi(i, &factors),
        });
        if op != Some(Op::F) {
            row["e"] = show(&tc.raise(i, &factors));
        }
        if op != Some(Op::E) {
            row["f"] = show(&tc.lower(i, &factors));
        }
        rows.push(row);
    }
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&json!({ "weight": tc.weight(&factors).entries(), "nodes": rows }))?,
        _ => {
            let mut lines = vec![format!("weight {}", tc.weight(&factors))];
            for r in &rows {
                let mut line = format!(
                    "i={} eps profile {} phi profile {} eps={} phi={}",
                    r["i"], r["epsilon_profile"], r["phi_profile"], r["epsilon"], r["phi"]
                );
                for key in ["e", "f"] {
                    if let Some(v) = r.get(key) {
                        let shown = match v.as_array() {
                            Some(parts) => parts.iter().filter_map(Value::as_str).collect::<Vec<_>>().join(" ⊗ "),
                            None => "null".into(),
                        };
                        line.push_str(&format!(" {key}_i: {shown}"));
                    }
                }
                lines.push(line);
            }
            lines.join("\n")
        }
    };
    Ok(Outcome::ok(text))
}

fn show_element(cli: &Cli, x: &AnyElement) -> anyhow::Result<String> {
    Ok(match cli.format {
        Format::Json => serde_json::to_string(&x.to_json())?,
        _ => x.to_string(),
    })
}

fn act(
    cli: &Cli,
    input: &InputArgs,
    model: ModelArg,
    word: &str,
    mode: Mode,
    structure: Option<Structure>,
    rank: Option<usize>,
) -> anyhow::Result<Outcome> {
    let x = read_element(input, model.into(), rank)?;
    let image = match (x, mode) {
        (AnyElement::Matrix(x), _) => {
            let structure = need(structure, "--structure", "acting on a matrix")?;
            let (n, m) = (x.n(), x.m());
            let out = match (mode, structure) {
                (Mode::Inner, Structure::Column) => {
                    let w = CactusWord::parse(word, n)?;
                    inner_act(&w, &Schutzenberger::new(ColumnCrystal::new(n, m)), &x)?
                }
                (Mode::Inner, Structure::Row) => {
                    let w = CactusWord::parse(word, m)?;
                    inner_act(&w, &Schutzenberger::new(RowCrystal::new(n, m)), &x)?
                }
                (Mode::Outer, Structure::Row) => {
                    let w = CactusWord::parse(word, n)?;
                    let factor = FundamentalCrystal::new(m);
                    from_row_structure(&OuterAction::new(&factor).act(&w, &row_structure(&x))?)?
                }
                (Mode::Outer, Structure::Column) => {
                    let w = CactusWord::parse(word, m)?;
                    let factor = FundamentalCrystal::new(n);
                    from_col_structure(&OuterAction::new(&factor).act(&w, &col_structure(&x))?)?
                }
            };
            AnyElement::Matrix(out)
        }
        (AnyElement::Tableau(t), Mode::Inner) => {
            let c = TableauCrystal::new(t.rank());
            AnyElement::Tableau(inner_act(&CactusWord::parse(word, t.rank())?, &Schutzenberger::new(c), &t)?)
        }
        (AnyElement::Gt(x), Mode::Inner) => {
            let c = GtCrystal::new(x.rank());
            AnyElement::Gt(inner_act(&CactusWord::parse(word, x.rank())?, &Schutzenberger::new(c), &x)?)
        }
        (AnyElement::Tensor { factors }, mode) => {
            let r = factors.first().map(Ssyt::rank).ok_or_else(|| usage("a tensor needs at least one factor"))?;
            let base = TableauCrystal::new(r);
            let out = match mode {
                Mode::Inner => {
                    let w = CactusWord::parse(word, r)?;
                    inner_act(&w, &Schutzenberger::new(TensorCrystal::new(base)), &factors)?
                }
                Mode::Outer => {
                    let w = CactusWord::parse(word, factors.len())?;
                    OuterAction::new(&base).act(&w, &factors)?
                }
            };
            AnyElement::Tensor { factors: out }
        }
        (other, Mode::Outer) => {
            bail!(usage(format!("the outer action needs a tensor product; a {} is not one", other.model())))
        }
    };
    Ok(Outcome::ok(show_element(cli, &image)?))
}

fn gt(
    cli: &Cli,
    input: &InputArgs,
    shape: &Option<Partition>,
    rank: Option<usize>,
    moves: &Option<String>,
    q: Option<usize>,
) -> anyhow::Result<Outcome> {
    if input.input.is_none() && input.element.is_none() {
        let shape = shape.clone().ok_or_else(|| usage("gt needs --in/--element, or --shape and --rank"))?;
        let rank = need(rank, "--rank", "enumerating patterns")?;
        let all = enumerate_k_lambda(&shape, rank)?;
        check_budget(cli, all.len() as u128)?;
        return Ok(Outcome::ok(match cli.format {
            Format::Json => serde_json::to_string_pretty(&all)?,
            _ => {
                let mut lines: Vec<String> = all.iter().map(ToString::to_string).collect();
                lines.push(format!("{} patterns", all.len()));
                lines.join("\n")
            }
        }));
    }
    let AnyElement::Gt(x) = read_element(input, Model::Gt, rank)? else {
        unreachable!("the model was requested")
    };
    let mut chain = vec![("x".to_string(), x.clone())];
    if let Some(moves) = moves {
        let mut y = x.clone();
        for tok in moves.split_whitespace() {
            let j: usize = tok.parse().map_err(|_| usage(format!("cannot read move {tok:?}")))?;
            y = bk_move(&y, j)?;
            chain.push((format!("t_{j}"), y.clone()));
        }
    }
    if let Some(i) = q {
        chain.push((format!("q_{i}(x)"), bk_q(&x, i)?));
    }
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(
            &chain
                .iter()
                .map(|(step, y)| {
                    json!({ "step": step, "pattern": y, "tableau": gt_to_tableau(y), "beta": beta(y).entries() })
                })
                .collect::<Vec<_>>(),
        )?,
        _ => chain
            .iter()
            .map(|(step, y)| format!("{step}: {y}  tableau {}  beta {}", gt_to_tableau(y).label(), beta(y)))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok(Outcome::ok(text))
}

fn skew_howe(cli: &Cli, input: &InputArgs, inverse: bool) -> anyhow::Result<Outcome> {
    if inverse {
        let v = read_json(input)?;
        let field = |k: &str| -> anyhow::Result<Ssyt> {
            let t = v.get(k).cloned().ok_or_else(|| usage(format!("missing field {k}")))?;
            serde_json::from_value(t).with_context(|| format!("field {k}"))
        };
        let x = duality_inv(&field("T_P")?, &field("T_Q")?)?;
        return Ok(Outcome::ok(show_element(cli, &AnyElement::Matrix(x))?));
    }
    let AnyElement::Matrix(x) = read_element(input, Model::Matrix, None)? else {
        unreachable!("the model was requested")
    };
    let pair = duality_iso(&x)?;
    let text = match cli.format {
        Format::Json => serde_json::to_string(&pair)?,
        _ => format!(
            "shape {}\nP   {}\nQ   {}\nT_P {}\nT_Q {}",
            pair.shape,
            pair.p,
            pair.q,
            pair.t_p.label(),
            pair.t_q.label()
        ),
    };
    Ok(Outcome::ok(text))
}

fn suite_of(s: SuiteArg) -> Option<Suite> {
    Some(match s {
        SuiteArg::All => return None,
        SuiteArg::Goldens => Suite::Goldens,
        SuiteArg::Axioms => Suite::Axioms,
        SuiteArg::Xi => Suite::Xi,
        SuiteArg::Cactus => Suite::Cactus,
        SuiteArg::Braid => Suite::Braid,
        SuiteArg::Cgp => Suite::Cgp,
        SuiteArg::Oracles => Suite::Oracles,
        SuiteArg::Commutation => Suite::Commutation,
        SuiteArg::Duality => Suite::Duality,
        SuiteArg::Agree => Suite::Agree,
        SuiteArg::Corollary => Suite::Corollary,
    })
}

fn has_instance(a: &InstanceArgs) -> bool {
    a.model.is_some() || a.n.is_some() || a.m.is_some() || a.shape.is_some()
}

/// One verifier on the instance given by the flags.
fn verify_instance(cli: &Cli, suite: Suite, a: &InstanceArgs) -> anyhow::Result<Vec<Report>> {
    let b = budget(cli);
    let per_n = |f: &dyn Fn(usize, usize, usize) -> glk_crystals::Result<Report>| -> anyhow::Result<Vec<Report>> {
        let (n, m) = matrix_dims(a)?;
        let range: Vec<usize> = match a.big_n {
            Some(k) if k <= n * m => vec![k],
            Some(k) => bail!(usage(format!("--N {k} exceeds n*m = {}", n * m))),
            None => (0..=n * m).collect(),
        };
        range.into_iter().map(|k| f(n, m, k).map_err(Into::into)).collect()
    };
    Ok(match suite {
        Suite::Goldens => vec![suites::goldens_suite()?],
        Suite::Agree => per_n(&|n, m, k| verify_agreement(n, m, k, b))?,
        Suite::Corollary => per_n(&|n, m, k| verify_corollary(n, m, k, b))?,
        Suite::Commutation => {
            let mut out = per_n(&|n, m, k| verify_commutation(n, m, k, b))?;
            out.extend(per_n(&|n, m, k| verify_dual_implementations(n, m, k, b))?);
            out
        }
        Suite::Duality => {
            let mut out = per_n(&|n, m, k| verify_duality(n, m, k, b))?;
            out.extend(per_n(&|n, m, k| verify_tableau_maps(n, m, k, b))?);
            let (n, m) = matrix_dims(a)?;
            out.push(verify_counting_identity(n, m)?);
            out
        }
        Suite::Cgp => {
            let shape = a.shape.clone().ok_or_else(|| usage("verify cgp needs --shape"))?;
            let rank = need(a.rank, "--rank", "verify cgp")?;
            check_budget(cli, enumerate_k_lambda(&shape, rank)?.len() as u128)?;
            vec![verify_bk_moves(&shape, rank)?, check_cgp_homomorphism(&shape, rank)?]
        }
        Suite::Oracles => {
            let shape = a.shape.clone().ok_or_else(|| usage("verify oracles needs --shape"))?;
            let rank = need(a.rank, "--rank", "verify oracles")?;
            let set = enumerate_b_lambda(&shape, rank)?;
            check_budget(cli, set.len() as u128)?;
            let mut r = Report::new("character equals Schur", json!({ "shape": shape.to_string(), "rank": rank }));
            r.tally("characters", 1);
            if character(&TableauCrystal::new(rank), &set) != schur_bruteforce(&shape, rank)? {
                r.fail(json!({ "property": "character differs from the Schur oracle" }));
            }
            vec![r]
        }
        Suite::Axioms | Suite::Xi | Suite::Cactus | Suite::Braid => {
            let inst = build_instance(cli, a)?;
            with_instance!(&inst, |c, set| vec![match suite {
                Suite::Axioms => check_crystal_axioms(c, set),
                Suite::Xi => verify_xi_properties(c, set, &Interval::all(c.rank())),
                Suite::Cactus => verify_cactus_relations(c, set),
                _ => verify_reduced_braid(c, set),
            }])
        }
    })
}

fn verify(cli: &Cli, which: SuiteArg, a: &InstanceArgs, inject_fault: bool) -> anyhow::Result<Outcome> {
    let config = Config { budget: budget(cli), inject_fault };
    let reports: Vec<Report> = match suite_of(which) {
        Some(suite) if has_instance(a) => verify_instance(cli, suite, a)?,
        Some(suite) => vec![suites::run(suite, &config)?],
        None if config.budget == 0 => vec![suites::goldens_suite()?],
        None => Suite::ALL.iter().map(|&s| suites::run(s, &config)).collect::<Result<_, _>>()?,
    };
    let passed = reports.iter().all(Report::passed);
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&reports.iter().map(Report::to_json).collect::<Vec<_>>())?,
        _ => {
            let mut lines: Vec<String> = reports.iter().map(ToString::to_string).collect();
            let ok = reports.iter().filter(|r| r.passed()).count();
            lines.push(format!("{ok} of {} passed", reports.len()));
            lines.join("\n")
        }
    };
    Ok(Outcome { text, passed })
}
