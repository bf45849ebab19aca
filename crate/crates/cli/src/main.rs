use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use apg_core::gadgets::{butterfly, outcome_exemplar, w_k};
use apg_core::poly22::solve22;
use apg_core::reductions::{
    mm_rank4_embed, parse_dimacs, parse_qdimacs, qbf_to_33, sat_to_23, sat_to_32, ReductionOutput,
};
use apg_core::solver::DEFAULT_NODE_LIMIT;
use apg_core::verify::{self, Check};
use apg_core::{
    disjoint_union, parse_apg, verify_union_cell, write_apg, Game, Outcome, Player, SolveError, Solver, SolverConfig,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_VERIFY: u8 = 2;
const EXIT_LIMIT: u8 = 3;
const EXIT_USAGE: u8 = 64;

/// Solve and analyse achievement positional games.
#[derive(Parser)]
#[command(name = "apg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Value of a game under optimal play for a given first player.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum)]
        first: Side,
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
        /// Append an optimal self-play line.
        #[arg(long)]
        trace: bool,
    },
    /// Outcome class: the results with Left and with Right moving first.
    Outcome { file: PathBuf },
    /// Passes the opponent can collect before the player fills an edge.
    Delay {
        file: PathBuf,
        #[arg(long, value_enum)]
        player: Side,
    },
    /// Outcome of a disjoint union and of both parts.
    Union {
        file1: PathBuf,
        file2: PathBuf,
        /// Check the union's outcome against the table of possible outcomes.
        #[arg(long = "check-table3")]
        check_table: bool,
    },
    /// Write a named gadget as an .apg file.
    Gadget {
        #[arg(value_enum)]
        kind: GadgetKind,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Color::Blue)]
        color: Color,
        /// Target outcome for `exemplar`: L, L-, N, D, R- or R.
        #[arg(long)]
        outcome: Option<Outcome>,
        #[arg(short)]
        o: PathBuf,
    },
    /// Compile a DIMACS formula into a game.
    Reduce {
        #[arg(value_enum)]
        kind: ReductionKind,
        cnf: PathBuf,
        #[arg(short)]
        o: PathBuf,
        /// Write the symbol-to-vertex map here.
        #[arg(long)]
        provenance: Option<PathBuf>,
    },
    /// Embed a game into a Maker-Maker game on a rank-4 hypergraph.
    Embed {
        #[arg(value_enum)]
        kind: EmbedKind,
        file: PathBuf,
        #[arg(short)]
        o: PathBuf,
    },
    /// Run a seeded verification battery.
    Verify(VerifyArgs),
    /// Time the solver on fixed gadgets and random games.
    Bench,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    target: Target,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Trials per randomized battery; each target has its own default.
    #[arg(long)]
    trials: Option<usize>,
    /// For `poly22`: also run the exhaustive checks on up to 5 vertices.
    #[arg(long)]
    exhaustive: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Left,
    Right,
}

impl From<Side> for Player {
    fn from(s: Side) -> Player {
        match s {
            Side::Left => Player::Left,
            Side::Right => Player::Right,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Color {
    Blue,
    Red,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Auto,
    Search,
    Poly22,
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetKind {
    Butterfly,
    Wk,
    Exemplar,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReductionKind {
    Sat23,
    Sat32,
    Qbf33,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmbedKind {
    Mm4,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Lemmas,
    #[value(name = "table3")]
    Unions,
    Poly22,
    Reductions,
    Delay,
    Legality,
    Embeddings,
}

enum Failure {
    Usage(String),
    Limit(String),
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Failure {
        match e {
            SolveError::ResourceLimit { .. } => Failure::Limit(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure::Usage(message.into())
}

/// Report text and whether every check passed.
type Report = (String, bool);

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok((out, ok)) => {
            print!("{out}");
            ExitCode::from(if ok { 0 } else { EXIT_VERIFY })
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Limit(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_LIMIT)
        }
    }
}

fn solver() -> Result<Solver, Failure> {
    let limit = match std::env::var("APG_NODE_LIMIT") {
        Ok(v) => v.trim().parse().map_err(|_| usage(format!("APG_NODE_LIMIT must be a node count, got `{v}`")))?,
        Err(_) => DEFAULT_NODE_LIMIT,
    };
    Ok(Solver::new(SolverConfig::default().with_node_limit(limit)))
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Game, Failure> {
    parse_apg(&read(path)?).map_err(|e| usage(format!("{}:{}: {}", path.display(), e.line, e.message)))
}

fn run(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Solve { file, first, algo, trace } => solve(&load(&file)?, first.into(), algo, trace),
        Command::Outcome { file } => {
            let g = load(&file)?;
            let mut s = solver()?;
            let o = s.outcome(&g)?;
            let out = format!(
                "outcome: {o}\nleft_first: {}\nright_first: {}\n{}",
                o.when_left_starts(),
                o.when_right_starts(),
                search_stats(&s)
            );
            Ok((out, true))
        }
        Command::Delay { file, player } => {
            let g = load(&file)?;
            let d = solver()?.delay(&g, player.into())?;
            Ok((format!("player: {}\ndelay: {d}\n", Player::from(player)), true))
        }
        Command::Union { file1, file2, check_table } => {
            let (g, h) = (load(&file1)?, load(&file2)?);
            let (u, renamed) = disjoint_union(&g, &h).map_err(|e| usage(e.to_string()))?;
            let mut s = solver()?;
            let (o, o2, ou) = (s.outcome(&g)?, s.outcome(&h)?, s.outcome(&u)?);
            let mut out = format!("outcome_1: {o}\noutcome_2: {o2}\noutcome_union: {ou}\n");
            for (from, to) in renamed {
                writeln!(out, "renamed: {from} -> {to}").unwrap();
            }
            let mut ok = true;
            if check_table {
                ok = verify_union_cell(o, o2, ou);
                writeln!(out, "union_table: {}", if ok { "consistent" } else { "violated" }).unwrap();
            }
            Ok((out, ok))
        }
        Command::Gadget { kind, k, color, outcome, o } => {
            let owner = match color {
                Color::Blue => Player::Left,
                Color::Red => Player::Right,
            };
            let g = match kind {
                GadgetKind::Butterfly => butterfly(owner),
                GadgetKind::Wk => w_k(k, owner).map_err(|e| usage(e.to_string()))?,
                GadgetKind::Exemplar => outcome_exemplar(outcome.ok_or_else(|| usage("`exemplar` needs --outcome"))?),
            };
            write(&o, &write_apg(&g))?;
            Ok((game_summary(&o, &g), true))
        }
        Command::Reduce { kind, cnf, o, provenance } => {
            let text = read(&cnf)?;
            let diag = |e: apg_core::reductions::DimacsError| usage(format!("{}:{e}", cnf.display()));
            let compiled: ReductionOutput = match kind {
                ReductionKind::Sat23 => sat_to_23(&parse_dimacs(&text).map_err(diag)?),
                ReductionKind::Sat32 => sat_to_32(&parse_dimacs(&text).map_err(diag)?),
                ReductionKind::Qbf33 => qbf_to_33(&parse_qdimacs(&text).map_err(diag)?),
            }
            .map_err(|e| usage(e.to_string()))?;
            write(&o, &write_apg(&compiled.game))?;
            if let Some(p) = &provenance {
                write(p, &compiled.provenance_report())?;
            }
            Ok((game_summary(&o, &compiled.game), true))
        }
        Command::Embed { kind: EmbedKind::Mm4, file, o } => {
            let g = load(&file)?;
            let emb = mm_rank4_embed(&g).map_err(|e| usage(e.to_string()))?;
            let sym = emb.symmetric_game();
            write(&o, &write_apg(&sym))?;
            let mut out = game_summary(&o, &sym);
            writeln!(out, "rank: {}\nu_left: {}\nu_right: {}", sym.rank(), sym.name(emb.u_left), sym.name(emb.u_right))
                .unwrap();
            Ok((out, true))
        }
        Command::Verify(args) => Ok(verify(&args)),
        Command::Bench => bench(),
    }
}

/// Search counters without wall-clock time, so reports are reproducible.
fn search_stats(s: &Solver) -> String {
    let st = s.stats();
    format!("nodes_expanded: {}\nmemo_hits: {}\nmax_depth: {}\n", st.nodes_expanded, st.memo_hits, st.max_depth)
}

fn game_summary(path: &Path, g: &Game) -> String {
    format!(
        "written: {}\nvertices: {}\nblue_edges: {}\nred_edges: {}\n",
        path.display(),
        g.num_vertices(),
        g.blue().len(),
        g.red().len()
    )
}

fn solve(g: &Game, first: Player, algo: Algo, trace: bool) -> Result<Report, Failure> {
    let small = g.max_edge(Player::Left) <= 2 && g.max_edge(Player::Right) <= 2;
    let use_poly = match algo {
        Algo::Auto => small,
        Algo::Search => false,
        Algo::Poly22 if small => true,
        Algo::Poly22 => return Err(usage("--algo poly22 needs every edge to have at most 2 vertices")),
    };
    let mut s = solver()?;
    let mut out = format!("first: {first}\n");
    if use_poly {
        let r = solve22(g, first).map_err(|e| usage(e.to_string()))?;
        writeln!(out, "algo: poly22\nresult: {r}").unwrap();
    } else {
        let r = s.solve(g, first)?;
        writeln!(out, "algo: search\nresult: {r}").unwrap();
        out.push_str(&search_stats(&s));
    }
    if trace {
        out.push_str(&s.self_play(g, first)?.report());
    }
    Ok((out, true))
}

fn verify(args: &VerifyArgs) -> Report {
    let trials = |default: usize| args.trials.unwrap_or(default);
    let seed = args.seed;
    let checks: Vec<Check> = match args.target {
        Target::Lemmas => verify::lemmas(seed, trials(1000)),
        Target::Unions => verify::union_batteries(seed, trials(2000)),
        Target::Poly22 => {
            let mut v = vec![verify::poly22_random(seed, trials(10_000))];
            if args.exhaustive {
                v.extend(verify::poly22_exhaustive());
            }
            v
        }
        Target::Reductions => verify::reductions(),
        Target::Delay => verify::delay_battery(seed, trials(500)),
        Target::Legality => verify::outcome_legality(seed, trials(5000)),
        Target::Embeddings => {
            vec![verify::maker_maker_embedding(seed, trials(200)), verify::transversal_embedding()]
        }
    };
    let ok = checks.iter().all(Check::passed);
    let mut out = format!("seed: {seed}\n");
    for c in &checks {
        out.push('\n');
        out.push_str(&c.report());
    }
    if let Some((_, v)) = checks.iter().flat_map(|c| &c.notes).find(|(k, _)| k == "agreement") {
        out = format!("agreement: {v}\n{out}");
    }
    writeln!(out, "\nverdict: {}", if ok { "pass" } else { "fail" }).unwrap();
    (out, ok)
}

fn bench() -> Result<Report, Failure> {
    let mut cases: Vec<(String, Game)> = vec![("butterfly".into(), butterfly(Player::Left))];
    for k in 2..=5 {
        cases.push((format!("w{k}"), w_k(k, Player::Left).expect("k in range")));
    }
    let both = disjoint_union(&butterfly(Player::Left), &butterfly(Player::Right)).expect("disjoint").0;
    cases.push(("butterfly_pair".into(), both));
    let mut out = String::new();
    for (name, g) in cases {
        let mut s = solver()?;
        let t = Instant::now();
        let o = s.outcome(&g)?;
        writeln!(
            out,
            "bench: {name} vertices={} outcome={o} nodes={} ms={}",
            g.num_vertices(),
            s.stats().nodes_expanded,
            t.elapsed().as_millis()
        )
        .unwrap();
    }
    Ok((out, true))
}
