//! `raag` command line: every subcommand is a thin wrapper around one library
//! operation.
//!
//! Exit codes: 0 success or affirmative answer, 1 well-formed negative
//! answer, 2 usage or input error, 3 resource limit. With `--porcelain`,
//! output is `key=value` lines.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use raag::automorphisms::{
    abelianization_matrix, enumerate_laurence_generators, finite_nonabelian_witness, height_order,
    nontrivial_graph_automorphism, verify_triangular_form,
};
use raag::dictionary::{self, Answer, DictionaryAnswer, Witness};
use raag::membership::{
    bounded_membership_with_limit, exponent_sum_membership, standard_subgroup_membership, FiberedPresentation,
    MembershipError, DEFAULT_STATE_LIMIT,
};
use raag::sharing::{
    deal, deal_bits, reconstruct, reconstruct_bits, Share, ShareError, DEFAULT_COEFFICIENT_BOUND,
    DEFAULT_MAX_VERTICES,
};
use raag::words::Choice;
use raag::{
    maximal_join_decomposition, parse_graph, ArtinGroup, SchemeParams, SimplicialGraph, SubgroupSpec, VertexSet, Word,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser)]
#[command(name = "raag", version, about = "Right-angled Artin groups from the command line")]
struct Cli {
    /// Print stable key=value lines instead of prose.
    #[arg(long, global = true)]
    porcelain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// Graph file (`v <label>` and `e <a> <b>` lines).
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Args)]
struct WordArgs {
    #[command(flatten)]
    graph: GraphArg,
    #[arg(long)]
    word: Option<String>,
    /// Word tokens such as `a b^-1`; joined with spaces.
    #[arg(allow_hyphen_values = true)]
    tokens: Vec<String>,
}

impl WordArgs {
    fn text(&self) -> String {
        self.word.clone().unwrap_or_else(|| self.tokens.join(" "))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Shortlex normal form.
    Nf(WordArgs),
    /// Word problem: exit 0 if trivial, 1 if not.
    Wp(WordArgs),
    /// Given c equal to a or to b, say which.
    Choice {
        #[command(flatten)]
        graph: GraphArg,
        a: String,
        b: String,
        c: String,
    },
    /// Geodesic length.
    Len(WordArgs),
    /// Conjugacy: exit 0 with a conjugator, or 1.
    Conj {
        #[command(flatten)]
        graph: GraphArg,
        u: String,
        w: String,
    },
    /// Maximal join decomposition, one factor per line.
    Decompose(GraphArg),
    #[command(subcommand)]
    Aut(AutCommand),
    #[command(subcommand)]
    Member(MemberCommand),
    #[command(subcommand)]
    Share(ShareCommand),
    #[command(subcommand)]
    Dict(DictCommand),
}

#[derive(Subcommand)]
enum AutCommand {
    /// A nontrivial graph automorphism, or exit 1.
    Find(GraphArg),
    /// Certified finite nonabelian subgroup of Out(A(Γ)), or exit 1.
    Witness(GraphArg),
    /// Triangular form of the abelianization action for asymmetric graphs.
    VerifyTriangular(GraphArg),
    /// Laurence generators, optionally with their matrices.
    Laurence {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        matrices: bool,
    },
}

#[derive(Subcommand)]
enum MemberCommand {
    /// Kernel of a map to Z given by generator weights, e.g. `x=0,y=0,t=1`.
    Fiber {
        #[arg(long)]
        weights: String,
        #[arg(long)]
        word: Option<String>,
        #[arg(allow_hyphen_values = true)]
        tokens: Vec<String>,
    },
    /// Undistorted subgroup ⟨--gen ...⟩ with distortion constant C.
    Bounded {
        #[command(flatten)]
        graph: GraphArg,
        /// Subgroup generator (repeatable).
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
        #[arg(long, default_value_t = 1)]
        distortion: u32,
        #[arg(long, default_value_t = DEFAULT_STATE_LIMIT)]
        max_states: usize,
        #[arg(long)]
        word: Option<String>,
        #[arg(allow_hyphen_values = true)]
        tokens: Vec<String>,
    },
    /// Standard subgroup on a vertex subset, e.g. `--subset a,b`.
    Standard {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        subset: String,
        #[arg(long)]
        word: Option<String>,
        #[arg(allow_hyphen_values = true)]
        tokens: Vec<String>,
    },
}

#[derive(Subcommand)]
enum ShareCommand {
    /// Deal shares into `--outdir` as `share<i>.txt`.
    Deal {
        #[arg(long)]
        secret: u64,
        #[arg(long)]
        n: usize,
        /// Defaults to n.
        #[arg(long)]
        threshold: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        outdir: PathBuf,
        #[arg(long, default_value_t = DEFAULT_COEFFICIENT_BOUND)]
        coefficient_bound: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
        /// Bit variant.
        #[arg(long)]
        bits: bool,
    },
    /// Recover the secret from exactly `--threshold` share files.
    Reconstruct {
        #[arg(long)]
        threshold: usize,
        #[arg(long)]
        bits: bool,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Number of join factors of a share (or its bit with `--bits`).
    Value {
        file: PathBuf,
        #[arg(long)]
        bits: bool,
    },
}

#[derive(Subcommand)]
enum DictCommand {
    Clique(GraphArg),
    Indep(GraphArg),
    /// Minimum vertex cover, or with `--k` whether one of exactly k vertices exists.
    Vc {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        k: Option<usize>,
    },
    Chrom(GraphArg),
    /// Induced copy of `--pattern` in `--graph`.
    Induced {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        pattern: PathBuf,
    },
    /// Adjacency-preserving map from `--graph` to `--target`.
    Hom {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        target: PathBuf,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Resource(String),
}

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Collects prose lines and porcelain fields side by side.
struct Output {
    porcelain: bool,
    text: String,
    code: i32,
}

impl Output {
    fn line(&mut self, s: impl Display) {
        if !self.porcelain {
            self.text.push_str(&format!("{s}\n"));
        }
    }

    fn field(&mut self, key: &str, value: impl Display) {
        if self.porcelain {
            self.text.push_str(&format!("{key}={value}\n"));
        }
    }

    fn negative(&mut self) {
        self.code = EXIT_NEGATIVE;
    }
}

/// Runs one command line (`argv[0]` is the program name).
pub fn dispatch<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), rendered)
            } else {
                (rendered, String::new())
            };
            return CommandResult { code, stdout, stderr };
        }
    };
    let mut out = Output {
        porcelain: cli.porcelain,
        text: String::new(),
        code: EXIT_OK,
    };
    match run(cli.command, &mut out) {
        Ok(()) => CommandResult {
            code: out.code,
            stdout: out.text,
            stderr: String::new(),
        },
        Err(Failure::Input(msg)) => CommandResult {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Resource(msg)) => CommandResult {
            code: EXIT_RESOURCE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn read_graph(path: &Path) -> Result<SimplicialGraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_share(path: &Path) -> Result<Share, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    text.parse::<Share>().map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn labels(g: &SimplicialGraph, s: &VertexSet) -> String {
    s.iter().map(|v| g.label(v).into_owned()).collect::<Vec<_>>().join(" ")
}

fn word_arg(word: &Option<String>, tokens: &[String]) -> String {
    word.clone().unwrap_or_else(|| tokens.join(" "))
}

fn run(command: Command, out: &mut Output) -> Result<(), Failure> {
    match command {
        Command::Nf(args) => {
            let g = read_graph(&args.graph.graph)?;
            let w = Word::parse(&g, &args.text())?;
            let nf = ArtinGroup::new(&g).normal_form(&w);
            out.line(nf.to_text(&g));
            out.field("normal_form", nf.to_text(&g));
            out.field("length", nf.len());
        }
        Command::Wp(args) => {
            let g = read_graph(&args.graph.graph)?;
            let w = Word::parse(&g, &args.text())?;
            let trivial = ArtinGroup::new(&g).is_trivial(&w);
            out.line(if trivial { "trivial" } else { "nontrivial" });
            out.field("trivial", trivial);
            if !trivial {
                out.negative();
            }
        }
        Command::Choice { graph, a, b, c } => {
            let g = read_graph(&graph.graph)?;
            let parse = |s: &str| Word::parse(&g, s);
            let choice = ArtinGroup::new(&g).word_choice(&parse(&a)?, &parse(&b)?, &parse(&c)?)?;
            let answer = match choice {
                Choice::A => "a",
                Choice::B => "b",
            };
            out.line(answer);
            out.field("choice", answer);
        }
        Command::Len(args) => {
            let g = read_graph(&args.graph.graph)?;
            let w = Word::parse(&g, &args.text())?;
            let l = ArtinGroup::new(&g).geodesic_length(&w);
            out.line(l);
            out.field("geodesic_length", l);
        }
        Command::Conj { graph, u, w } => {
            let g = read_graph(&graph.graph)?;
            let (u, w) = (Word::parse(&g, &u)?, Word::parse(&g, &w)?);
            match ArtinGroup::new(&g).conjugator(&u, &w) {
                Some(c) => {
                    out.line("conjugate");
                    out.line(format!("conjugator: {}", c.to_text(&g)));
                    out.field("conjugate", true);
                    out.field("conjugator", c.to_text(&g));
                }
                None => {
                    out.line("not conjugate");
                    out.field("conjugate", false);
                    out.negative();
                }
            }
        }
        Command::Decompose(graph) => {
            let g = read_graph(&graph.graph)?;
            let d = maximal_join_decomposition(&g)?;
            out.field("factors", d.len());
            for f in d.factors() {
                out.line(labels(&g, f));
                out.field("factor", labels(&g, f));
            }
        }
        Command::Aut(cmd) => run_aut(cmd, out)?,
        Command::Member(cmd) => run_member(cmd, out)?,
        Command::Share(cmd) => run_share(cmd, out)?,
        Command::Dict(cmd) => run_dict(cmd, out)?,
    }
    Ok(())
}

fn run_aut(cmd: AutCommand, out: &mut Output) -> Result<(), Failure> {
    match cmd {
        AutCommand::Find(graph) => {
            let g = read_graph(&graph.graph)?;
            match nontrivial_graph_automorphism(&g) {
                Some(p) => {
                    out.line(p.display(&g));
                    out.field("automorphism", p.display(&g));
                }
                None => {
                    out.line("none");
                    out.field("automorphism", "none");
                    out.negative();
                }
            }
        }
        AutCommand::Witness(graph) => {
            let g = read_graph(&graph.graph)?;
            match finite_nonabelian_witness(&g) {
                Some(w) => {
                    let (a, b) = (
                        abelianization_matrix(&w.graph_automorphism),
                        abelianization_matrix(&w.inversion),
                    );
                    out.line(w.graph_automorphism.describe(&g));
                    out.line(a.to_string().trim_end());
                    out.line(w.inversion.describe(&g));
                    out.line(b.to_string().trim_end());
                    out.line(format!(
                        "generated group: order {}, nonabelian {}, generator orders {} and {}",
                        w.order, w.nonabelian, w.generator_orders.0, w.generator_orders.1
                    ));
                    out.field("graph_automorphism", w.graph_automorphism.describe(&g));
                    out.field("inversion", w.inversion.describe(&g));
                    out.field("order", w.order);
                    out.field("nonabelian", w.nonabelian);
                }
                None => {
                    out.line("none: the graph has no nontrivial automorphism");
                    out.field("witness", "none");
                    out.negative();
                }
            }
        }
        AutCommand::VerifyTriangular(graph) => {
            let g = read_graph(&graph.graph)?;
            match verify_triangular_form(&g) {
                Ok(ok) => {
                    let order = height_order(&g)?;
                    let order: Vec<String> = order.iter().map(|&v| g.label(v).into_owned()).collect();
                    out.line(if ok { "triangular" } else { "not triangular" });
                    out.line(format!("height order: {}", order.join(" ")));
                    out.field("triangular", ok);
                    out.field("height_order", order.join(" "));
                    if !ok {
                        out.negative();
                    }
                }
                Err(raag::AutError::HasGraphAutomorphism) => {
                    out.line("not applicable: the graph has a nontrivial automorphism");
                    out.field("triangular", "not-applicable");
                    out.negative();
                }
                Err(e) => return Err(e.into()),
            }
        }
        AutCommand::Laurence { graph, matrices } => {
            let g = read_graph(&graph.graph)?;
            let gens = enumerate_laurence_generators(&g);
            out.field("count", gens.len());
            for aut in &gens {
                out.line(aut.describe(&g));
                out.field("generator", aut.describe(&g));
                if matrices {
                    out.line(abelianization_matrix(aut).to_string().trim_end());
                }
            }
        }
    }
    Ok(())
}

fn membership_failure(e: MembershipError) -> Failure {
    match e {
        MembershipError::ResourceLimit { .. } => Failure::Resource(e.to_string()),
        e => Failure::Input(e.to_string()),
    }
}

fn member_answer(out: &mut Output, member: bool) {
    out.line(if member { "member" } else { "not member" });
    out.field("member", member);
    if !member {
        out.negative();
    }
}

fn run_member(cmd: MemberCommand, out: &mut Output) -> Result<(), Failure> {
    match cmd {
        MemberCommand::Fiber { weights, word, tokens } => {
            let pairs = weights
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|item| {
                    let (label, w) = item
                        .split_once('=')
                        .ok_or_else(|| Failure::Input(format!("weight `{item}` is not label=integer")))?;
                    let w: i64 = w
                        .trim()
                        .parse()
                        .map_err(|_| Failure::Input(format!("weight `{item}` is not label=integer")))?;
                    Ok((label.trim().to_string(), w))
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            let p = FiberedPresentation::from_weights(pairs).map_err(membership_failure)?;
            let w = p.parse_word(&word_arg(&word, &tokens)).map_err(membership_failure)?;
            let sum = p.hom().evaluate(&w).map_err(membership_failure)?;
            out.field("exponent_sum", sum);
            member_answer(out, exponent_sum_membership(&p, &w).map_err(membership_failure)?);
        }
        MemberCommand::Bounded {
            graph,
            gens,
            distortion,
            max_states,
            word,
            tokens,
        } => {
            let g = read_graph(&graph.graph)?;
            let gens = gens.iter().map(|s| Word::parse(&g, s)).collect::<Result<Vec<_>, _>>()?;
            let w = Word::parse(&g, &word_arg(&word, &tokens))?;
            let spec = SubgroupSpec::new(g.clone(), gens, distortion).map_err(membership_failure)?;
            match bounded_membership_with_limit(&spec, &w, max_states).map_err(membership_failure)? {
                Some(e) => {
                    member_answer(out, true);
                    out.line(format!("expression: {}", e.to_text()));
                    out.field("expression", e.to_text());
                }
                None => member_answer(out, false),
            }
        }
        MemberCommand::Standard {
            graph,
            subset,
            word,
            tokens,
        } => {
            let g = read_graph(&graph.graph)?;
            let s = subset
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|l| !l.is_empty())
                .map(|l| g.vertex(l))
                .collect::<Result<VertexSet, _>>()?;
            let w = Word::parse(&g, &word_arg(&word, &tokens))?;
            member_answer(out, standard_subgroup_membership(&g, &s, &w));
        }
    }
    Ok(())
}

fn share_failure(e: ShareError) -> Failure {
    match e {
        ShareError::TooLarge { .. } => Failure::Resource(e.to_string()),
        e => Failure::Input(e.to_string()),
    }
}

fn run_share(cmd: ShareCommand, out: &mut Output) -> Result<(), Failure> {
    match cmd {
        ShareCommand::Deal {
            secret,
            n,
            threshold,
            seed,
            outdir,
            coefficient_bound,
            max_vertices,
            bits,
        } => {
            let mut params = SchemeParams::new(n, secret);
            params.threshold = threshold.unwrap_or(n);
            params.seed = seed;
            params.coefficient_bound = coefficient_bound;
            params.max_vertices = max_vertices;
            let shares = if bits { deal_bits(&params) } else { deal(&params) }.map_err(share_failure)?;
            fs::create_dir_all(&outdir).map_err(|e| Failure::Input(format!("{}: {e}", outdir.display())))?;
            out.field("shares", shares.len());
            for s in &shares {
                let path = outdir.join(format!("share{}.txt", s.participant));
                fs::write(&path, s.to_text()).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                out.line(format!(
                    "participant {}: {} ({} vertices)",
                    s.participant,
                    path.display(),
                    s.graph.vertex_count()
                ));
                out.field("file", path.display());
            }
        }
        ShareCommand::Reconstruct { threshold, bits, files } => {
            let shares = files.iter().map(|f| read_share(f)).collect::<Result<Vec<_>, _>>()?;
            let secret = if bits {
                let points = shares
                    .iter()
                    .map(|s| Ok((s.participant, s.bit()?)))
                    .collect::<Result<Vec<_>, ShareError>>()
                    .map_err(share_failure)?;
                reconstruct_bits(&points, threshold)
            } else {
                let points = shares
                    .iter()
                    .map(|s| Ok((s.participant, s.value()? as u64)))
                    .collect::<Result<Vec<_>, ShareError>>()
                    .map_err(share_failure)?;
                reconstruct(&points, threshold)
            }
            .map_err(share_failure)?;
            out.line(&secret);
            out.field("secret", secret);
        }
        ShareCommand::Value { file, bits } => {
            let s = read_share(&file)?;
            if bits {
                let b = s.bit().map_err(share_failure)?;
                out.line(b);
                out.field("participant", s.participant);
                out.field("bit", b);
            } else {
                let m = s.value().map_err(share_failure)?;
                out.line(m);
                out.field("participant", s.participant);
                out.field("value", m);
            }
        }
    }
    Ok(())
}

fn report(out: &mut Output, a: &DictionaryAnswer, g: &SimplicialGraph, other: Option<&SimplicialGraph>) {
    match a.answer {
        Answer::Number(k) => {
            out.line(k);
            out.field("value", k);
        }
        Answer::Decision(d) => {
            out.line(if d { "yes" } else { "no" });
            out.field("holds", d);
            if !d {
                out.negative();
            }
        }
    }
    match &a.witness {
        Witness::Vertices(s) => out.field("witness", labels(g, s)),
        Witness::Coloring(c) => {
            let parts: Vec<String> = c.iter().enumerate().map(|(v, k)| format!("{}:{k}", g.label(v))).collect();
            out.field("witness", parts.join(" "));
        }
        Witness::Map(m) => {
            let (source, target) = match other {
                // Induced: the map goes from the pattern into `g`.
                Some(p) if a.problem == dictionary::Problem::InducedSubgraph => (p, g),
                Some(t) => (g, t),
                None => (g, g),
            };
            let parts: Vec<String> = m
                .iter()
                .enumerate()
                .map(|(v, &x)| format!("{}->{}", source.label(v), target.label(x)))
                .collect();
            out.field("witness", parts.join(" "));
        }
        Witness::None => {}
    }
    out.line(&a.raag_statement);
}

fn run_dict(cmd: DictCommand, out: &mut Output) -> Result<(), Failure> {
    match cmd {
        DictCommand::Clique(graph) => {
            let g = read_graph(&graph.graph)?;
            report(out, &dictionary::clique_number(&g), &g, None);
        }
        DictCommand::Indep(graph) => {
            let g = read_graph(&graph.graph)?;
            report(out, &dictionary::independence_number(&g), &g, None);
        }
        DictCommand::Vc { graph, k } => {
            let g = read_graph(&graph.graph)?;
            let a = match k {
                Some(k) => dictionary::vertex_cover_exists(&g, k),
                None => dictionary::min_vertex_cover(&g),
            };
            report(out, &a, &g, None);
        }
        DictCommand::Chrom(graph) => {
            let g = read_graph(&graph.graph)?;
            report(out, &dictionary::chromatic_number(&g), &g, None);
        }
        DictCommand::Induced { graph, pattern } => {
            let host = read_graph(&graph.graph)?;
            let p = read_graph(&pattern)?;
            report(out, &dictionary::induced_subgraph_isomorphism(&p, &host), &host, Some(&p));
        }
        DictCommand::Hom { graph, target } => {
            let source = read_graph(&graph.graph)?;
            let t = read_graph(&target)?;
            if source.is_empty() || t.is_empty() {
                return Err(Failure::Input("homomorphism needs two nonempty graphs".into()));
            }
            report(out, &dictionary::graph_homomorphism_exists(&source, &t), &source, Some(&t));
        }
    }
    Ok(())
}
