//! Command-line front end for `braidmon`.
//!
//! Exit status: 0 on success or a true verdict, 1 on a false verdict,
//! 2 on usage or input errors, 3 when a resource cap is hit.

use std::path::PathBuf;

use braidmon::{
    enum_divisors_delta, enum_simple, graph_for, predicted_count, project, simple_centralizer,
    verify_all, verify_struc_decomposition, BraidEngine, BraidError, BraidWord, Family, Limits,
    SimpleBraid, VerifyOptions,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "braidmon", version, about = "Positive braid monoids, simple centralizers and commuting graphs")]
pub struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    /// Largest equivalence class the word-problem closure may build.
    #[arg(long, global = true, value_name = "N")]
    max_class_size: Option<usize>,

    /// Override every enumeration cap on n.
    #[arg(long, global = true, value_name = "N")]
    max_n: Option<usize>,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Sb,
    Ssigma,
    Sigma,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Sb => Family::Sb,
            FamilyArg::Ssigma => Family::Ssigma,
            FamilyArg::Sigma => Family::Sigma,
        }
    }
}

#[derive(Debug, Args)]
struct GraphArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Canonical (lexicographically least) form of a word, e.g. "5: 2 3 1 3 2".
    Canon { word: String },
    /// Whether two words represent the same braid.
    Eq { u: String, v: String },
    /// Whether G divides B (two-sided by default).
    Divides {
        g: String,
        b: String,
        #[arg(long, conflicts_with = "right")]
        left: bool,
        #[arg(long)]
        right: bool,
    },
    /// Simple braids of MB_n.
    EnumSimple {
        n: usize,
        #[arg(long)]
        count: bool,
    },
    /// Divisors of the Garside braid of MB_n.
    DeltaDivisors {
        n: usize,
        #[arg(long)]
        count: bool,
    },
    /// Image of a word in the symmetric group, one-line notation.
    Project { word: String },
    /// Simple centralizer of a simple braid.
    Centralizer {
        #[arg(long)]
        beta: String,
        #[arg(long)]
        strands: Option<usize>,
        /// Also compute C_{n+m}(beta) and check its factorization.
        #[arg(long, value_name = "M")]
        extend: Option<usize>,
    },
    /// Commuting graph of sb | ssigma | sigma.
    Graph {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Planarity verdict; exits 0 when planar, 1 otherwise.
    Planar {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Run the whole claim suite.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n_braids: usize,
        #[arg(long, default_value_t = 5)]
        max_n_perms: usize,
        #[arg(long, default_value_t = 7)]
        max_n_simple: usize,
        #[arg(long, default_value_t = 500)]
        lemma_cases: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(err: &BraidError) -> Self {
        let code = if err.is_resource_limit() {
            EXIT_RESOURCE
        } else {
            EXIT_USAGE
        };
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

struct Output {
    json: Value,
    text: String,
    code: i32,
}

fn parse_word(arg: &str, what: &str) -> Result<BraidWord, BraidError> {
    arg.parse().map_err(|e| match e {
        BraidError::Parse { column, message } => BraidError::Parse {
            column,
            message: format!("{what} `{arg}`: {message}"),
        },
        other => other,
    })
}

fn verdict(value: bool) -> Output {
    Output {
        json: json!(value),
        text: value.to_string(),
        code: if value { EXIT_OK } else { EXIT_FALSE },
    }
}

fn limits_for(cli: &Cli) -> Limits {
    let mut limits = Limits::default();
    if let Some(cap) = cli.max_class_size {
        limits.max_class_size = cap;
    }
    if let Some(n) = cli.max_n {
        limits.max_simple_n = n;
        limits.max_delta_n = n;
        limits.max_sym_n = n;
        limits.max_graph_braid_n = n;
        limits.max_graph_perm_n = n;
    }
    limits
}

fn execute(cli: &Cli, engine: &BraidEngine) -> Result<Output, BraidError> {
    match &cli.command {
        Command::Canon { word } => {
            let w = parse_word(word, "word")?;
            let c = engine.canonical(&w)?;
            Ok(Output {
                json: json!({ "word": c.to_string(), "label": c.label(), "canonical": c }),
                text: c.to_string(),
                code: EXIT_OK,
            })
        }
        Command::Eq { u, v } => {
            let (u, v) = (parse_word(u, "first word")?, parse_word(v, "second word")?);
            Ok(verdict(engine.braid_eq(&u, &v)?))
        }
        Command::Divides { g, b, left, right } => {
            let (g, b) = (parse_word(g, "divisor")?, parse_word(b, "word")?);
            let value = if *left {
                engine.left_divides(&g, &b)?
            } else if *right {
                engine.right_divides(&g, &b)?
            } else {
                engine.divides(&g, &b)?
            };
            Ok(verdict(value))
        }
        Command::EnumSimple { n, count } => {
            let all = enum_simple(engine, *n)?;
            if *count {
                Ok(Output {
                    json: json!(all.len()),
                    text: all.len().to_string(),
                    code: EXIT_OK,
                })
            } else {
                let words: Vec<String> = all.iter().map(|b| b.to_string()).collect();
                Ok(Output {
                    text: all.iter().map(|b| b.label()).collect::<Vec<_>>().join("\n"),
                    json: json!(words),
                    code: EXIT_OK,
                })
            }
        }
        Command::DeltaDivisors { n, count } => {
            let all = enum_divisors_delta(engine, *n)?;
            let mut sorted: Vec<_> = all.into_iter().collect();
            sorted.sort_by(|a, b| a.shortlex_cmp(b));
            if *count {
                Ok(Output {
                    json: json!(sorted.len()),
                    text: sorted.len().to_string(),
                    code: EXIT_OK,
                })
            } else {
                let words: Vec<String> = sorted.iter().map(|b| b.to_string()).collect();
                Ok(Output {
                    text: sorted.iter().map(|b| b.label()).collect::<Vec<_>>().join("\n"),
                    json: json!(words),
                    code: EXIT_OK,
                })
            }
        }
        Command::Project { word } => {
            let p = project(&parse_word(word, "word")?);
            Ok(Output {
                json: json!(p),
                text: format!("{p}  {}", p.cycles()),
                code: EXIT_OK,
            })
        }
        Command::Centralizer {
            beta,
            strands,
            extend,
        } => centralizer(engine, beta, *strands, *extend),
        Command::Graph { graph, dot, .. } => {
            let g = graph_for(engine, graph.family.into(), graph.n)?;
            if *dot {
                let text = g.to_dot();
                Ok(Output {
                    json: Value::String(text.clone()),
                    text,
                    code: EXIT_OK,
                })
            } else {
                let json: Value = serde_json::from_str(&g.to_json()).expect("graph JSON is valid");
                Ok(Output {
                    text: g.to_json_pretty(),
                    json,
                    code: EXIT_OK,
                })
            }
        }
        Command::Planar { graph } => {
            let g = graph_for(engine, graph.family.into(), graph.n)?;
            let v = g.is_planar();
            let mut text = format!(
                "{} vertices, {} edges: {}",
                g.vertex_count(),
                g.edge_count(),
                if v.planar { "planar" } else { "non-planar" }
            );
            if let Some(w) = &v.witness {
                text.push_str(&format!(
                    "\nwitness {:?} subdivision, branch vertices {}",
                    w.kind,
                    w.branch_vertices.join(" ")
                ));
                for [a, b] in &w.edges {
                    text.push_str(&format!("\n  {a} -- {b}"));
                }
            }
            Ok(Output {
                json: json!({
                    "vertices": g.vertex_count(),
                    "edges": g.edge_count(),
                    "planar": v.planar,
                    "witness": v.witness,
                }),
                text,
                code: if v.planar { EXIT_OK } else { EXIT_FALSE },
            })
        }
        Command::Verify {
            max_n_braids,
            max_n_perms,
            max_n_simple,
            lemma_cases,
            seed,
        } => {
            let opts = VerifyOptions {
                max_n_braids: *max_n_braids,
                max_n_perms: *max_n_perms,
                max_n_simple: *max_n_simple,
                lemma_cases: *lemma_cases,
                seed: *seed,
                ..VerifyOptions::default()
            };
            let report = verify_all(engine, &opts)?;
            Ok(Output {
                json: serde_json::to_value(&report).expect("report serializes"),
                text: report.to_string(),
                code: if report.all_passed() { EXIT_OK } else { EXIT_FALSE },
            })
        }
    }
}

fn centralizer(
    engine: &BraidEngine,
    beta: &str,
    strands: Option<usize>,
    extend: Option<usize>,
) -> Result<Output, BraidError> {
    let word = if beta.contains(':') {
        let w = parse_word(beta, "beta")?;
        match strands {
            Some(n) => w.embed(n)?,
            None => w,
        }
    } else {
        let n = strands.ok_or_else(|| {
            BraidError::Precondition("--strands is required when beta has no `n:` prefix".into())
        })?;
        braidmon::word::parse_letters_for(beta, n)?
    };
    let n = word.strands();
    let base = SimpleBraid::from_word(engine, &word)?;
    let c = simple_centralizer(engine, &base, n)?;
    let labels: Vec<String> = c.members.iter().map(|m| m.label()).collect();
    let mut json = json!({
        "base": base.label(),
        "strands": n,
        "members": labels,
        "count": c.count,
    });
    let mut text = format!("C_{n}({}) = {{{}}}\nc_{n} = {}", base.label(), labels.join(", "), c.count);

    if let Some(m) = extend {
        let big = simple_centralizer(engine, &base, n + m)?;
        let big_labels: Vec<String> = big.members.iter().map(|b| b.label()).collect();
        let mut ext = json!({
            "strands": n + m,
            "members": big_labels,
            "count": big.count,
        });
        text.push_str(&format!("\nc_{} = {}", n + m, big.count));
        if base.contains_letter(n - 1) && m >= 1 {
            let predicted = predicted_count(engine, &base, n, m)?;
            let d = verify_struc_decomposition(engine, &base, n, m)?;
            ext["predicted_count"] = json!(predicted);
            ext["decomposition_holds"] = json!(d.holds());
            text.push_str(&format!(
                "\npredicted c_{n} F_{} = {predicted}\nfactorization through C_{n} x E_{n}: {}",
                2 * m - 1,
                if d.holds() { "holds" } else { "FAILS" }
            ));
        }
        json["extended"] = ext;
    }
    Ok(Output {
        json,
        text,
        code: EXIT_OK,
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let engine = BraidEngine::new(limits_for(&cli));
    let out = match execute(&cli, &engine) {
        Ok(out) => out,
        Err(e) => return Outcome::error(&e),
    };
    let mut stdout = if cli.pretty {
        out.text
    } else {
        serde_json::to_string(&out.json).expect("output serializes")
    };
    if !stdout.ends_with('\n') {
        stdout.push('\n');
    }
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &stdout) {
            return Outcome {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            };
        }
        stdout.clear();
    }
    Outcome {
        code: out.code,
        stdout,
        stderr: String::new(),
    }
}
