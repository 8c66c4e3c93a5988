//! Command-line front end: argument parsing, certificate envelopes, the
//! result cache, and certificate verification.
//!
//! [`run`] is the whole program minus process I/O, so tests drive it
//! directly. Every subcommand prints one JSON envelope; exit code 0 means
//! success, 2 a bounded search that ran out of budget, 1 any other error.

pub mod cache;
pub mod commands;
pub mod envelope;
pub mod json;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use self::cache::{Cache, CacheStatus};
use self::commands::{execute, Checks, Context};
use self::envelope::{input_hash, sha256_hex, Envelope};
use self::json::{parse_matrix_text, parse_rat_matrix_value, poly, rat_matrix, rational};
use crate::error::{Error, Result};
use crate::exactpoly::rational::parse_rational;
use crate::exactpoly::IntPoly;
use crate::linalg::{BipartiteGraph, SymRatMatrix};
use crate::realize::StepOneSource;

pub const CACHE_ENV: &str = "BIPERRON_CACHE_DIR";

/// Commands whose envelopes are cached: the ones running bounded searches.
const CACHED: &[&str] = &["realize", "tree-realize", "generate"];

#[derive(Parser, Debug)]
#[command(name = "biperron", version, about = "Exact certificates for bi-Perron numbers")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    /// Re-check a certificate envelope from scratch.
    #[arg(long, value_name = "FILE")]
    pub verify: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Width `2^-bits` of the isolating intervals printed for algebraic numbers.
    #[arg(long, global = true, default_value_t = 64)]
    pub precision_bits: u32,

    /// Worker threads; output does not depend on it.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Result cache directory (default: $BIPERRON_CACHE_DIR, then the user cache).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Emit JSON (the only format; accepted for scripts).
    #[arg(long, global = true)]
    pub json: bool,

    /// Suppress warnings on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Args, Debug, Clone)]
pub struct SearchOpts {
    #[arg(long, default_value_t = 5)]
    pub max_dim: usize,
    #[arg(long, default_value_t = 3)]
    pub max_entry: u64,
    /// Padding exponents `e` to try, comma separated.
    #[arg(long, default_value = "0,1,2")]
    pub allow_e: String,
    #[arg(long, default_value_t = 12)]
    pub k_max: u32,
    #[arg(long, default_value_t = 200)]
    pub cayley_attempts: usize,
    /// Largest bipartite graph accepted from the Hoffman step.
    #[arg(long, default_value_t = 4096)]
    pub max_vertices: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum AtlasKind {
    Trees,
    Bipartite,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Perron, bi-Perron and Salem flags of the largest real root.
    Classify {
        #[arg(long)]
        poly: String,
    },
    /// Degrees of the fields generated by `lambda^k + lambda^-k`.
    Tracefield {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 4)]
        k_max: u32,
    },
    /// Minimal polynomial of `lambda^k`.
    Powermin {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        k: u32,
    },
    /// Realize a bi-Perron unit by a bipartite Coxeter transformation and a
    /// Thurston product.
    Realize {
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        search: SearchOpts,
        /// Step 1 matrix to use instead of searching, e.g. `2,1;1,-1`.
        #[arg(long)]
        q_matrix: Option<String>,
    },
    /// Coxeter transformation of a graph file or a built-in diagram.
    Coxeter {
        #[arg(long)]
        graph: String,
    },
    /// Product `(1 r; 0 1)(1 0; -r 1)` for `r` the largest root of the polynomial.
    Thurston {
        #[arg(long)]
        r_minpoly: String,
    },
    /// A tree whose Coxeter transformation has `lambda^2` as eigenvalue.
    TreeRealize {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 12)]
        max_vertices: usize,
    },
    /// Bi-Perron units below `1 + eps + sqrt(2 eps + eps^2)`.
    Generate {
        #[arg(long)]
        epsilon: String,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
        #[arg(long, default_value_t = 3)]
        max_height: u64,
    },
    /// Re-check a certificate envelope from scratch.
    Verify { file: PathBuf },
    /// Trees or connected bipartite graphs on `n` vertices.
    Atlas {
        #[arg(long, value_enum, default_value = "trees")]
        kind: AtlasKind,
        #[arg(long)]
        n: usize,
    },
}

/// Everything one invocation produced.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub code: i32,
    pub stdout: String,
    pub warnings: Vec<String>,
    pub cache: CacheStatus,
}

fn error_json(e: &Error) -> String {
    let mut v = json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
    if let Error::Inconclusive { step, detail } = e {
        v["error"]["step"] = json!(step);
        v["error"]["detail"] = json!(detail);
    }
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn exit_code(e: &Error) -> i32 {
    if e.is_inconclusive() {
        2
    } else {
        1
    }
}

fn read_graph(source: &str) -> Result<BipartiteGraph> {
    let path = Path::new(source);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        if text.trim_start().starts_with('{') {
            let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            BipartiteGraph::from_json(&v)
        } else {
            BipartiteGraph::parse(&text)
        }
    } else {
        crate::coxeter::named_graph(source)
    }
}

fn canonical_poly(s: &str) -> Result<Value> {
    Ok(poly(&IntPoly::parse(s)?))
}

/// `(command, canonical_input, config)` for a parsed subcommand.
fn canonicalize(cmd: &Command, bits: u32) -> Result<(&'static str, Value, Value)> {
    let base = json!({ "precision_bits": bits });
    let with = |extra: Value| {
        let mut c = base.clone();
        c.as_object_mut().unwrap().extend(extra.as_object().unwrap().clone());
        c
    };
    Ok(match cmd {
        Command::Classify { poly } => ("classify", json!({ "poly": canonical_poly(poly)? }), base.clone()),
        Command::Tracefield { poly, k_max } => {
            ("tracefield", json!({ "poly": canonical_poly(poly)? }), with(json!({ "k_max": k_max })))
        }
        Command::Powermin { poly, k } => ("powermin", json!({ "poly": canonical_poly(poly)? }), with(json!({ "k": k }))),
        Command::Realize { poly, search, q_matrix } => {
            let allow_e: Vec<u64> = search
                .allow_e
                .split(',')
                .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad --allow-e entry `{x}`"))))
                .collect::<Result<_>>()?;
            let q = match q_matrix {
                Some(s) => rat_matrix(parse_matrix_text(s)?.matrix()),
                None => Value::Null,
            };
            (
                "realize",
                json!({ "poly": canonical_poly(poly)?, "q_matrix": q }),
                with(json!({
                    "max_dim": search.max_dim,
                    "max_entry": search.max_entry,
                    "allow_e": allow_e,
                    "k_max": search.k_max,
                    "cayley_attempts": search.cayley_attempts,
                    "max_vertices": search.max_vertices,
                })),
            )
        }
        Command::Coxeter { graph } => ("coxeter", json!({ "graph": read_graph(graph)?.to_json() }), base.clone()),
        Command::Thurston { r_minpoly } => ("thurston", json!({ "r_minpoly": canonical_poly(r_minpoly)? }), base.clone()),
        Command::TreeRealize { poly, max_vertices } => (
            "tree-realize",
            json!({ "poly": canonical_poly(poly)? }),
            with(json!({ "max_vertices": max_vertices })),
        ),
        Command::Generate { epsilon, max_degree, max_height } => (
            "generate",
            json!({ "epsilon": rational(&parse_rational(epsilon)?) }),
            with(json!({ "max_degree": max_degree, "max_height": max_height })),
        ),
        Command::Atlas { kind, n } => {
            let kind = match kind {
                AtlasKind::Trees => "trees",
                AtlasKind::Bipartite => "bipartite",
            };
            ("atlas", json!({ "kind": kind, "n": n }), json!({}))
        }
        Command::Verify { .. } => unreachable!("verify is dispatched separately"),
    })
}

fn default_cache_dir() -> Option<PathBuf> {
    if let Some(d) = std::env::var_os(CACHE_ENV) {
        return Some(PathBuf::from(d));
    }
    if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(d).join("biperron"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("biperron"))
}

fn envelope_for(command: &str, input: Value, config: Value, outcome: (Value, Checks)) -> Envelope {
    Envelope::new(command, input, config, outcome.0, &outcome.1)
}

/// Run one subcommand through the envelope cache.
fn run_command(cmd: &Command, global: &GlobalOpts, out: &mut RunOutcome) -> Result<Envelope> {
    let (name, input, config) = canonicalize(cmd, global.precision_bits)?;
    let cache = if CACHED.contains(&name) {
        match global.cache_dir.clone().or_else(default_cache_dir) {
            Some(dir) => {
                let (c, warn) = Cache::open(&dir);
                out.warnings.extend(warn);
                c
            }
            None => Cache::disabled(),
        }
    } else {
        Cache::disabled()
    };
    let key = input_hash(name, &input, &config);
    if CACHED.contains(&name) {
        let (hit, status) = cache.get(&key);
        out.cache = status;
        if let Some(env) = hit.and_then(|v| serde_json::from_value::<Envelope>(v).ok()) {
            if env.input_hash == key {
                return Ok(env);
            }
            out.cache = CacheStatus::Corrupt;
        }
        if out.cache == CacheStatus::Corrupt {
            out.warnings.push(format!("cache entry {key} failed its hash check; recomputing"));
        }
    }
    let mut ctx = Context::new(&cache);
    let result = execute(name, &input, &config, &mut ctx);
    out.warnings.append(&mut ctx.warnings);
    let env = envelope_for(name, input, config, result?);
    if CACHED.contains(&name) && env.all_pass() {
        let payload = serde_json::to_value(&env).expect("envelopes serialize");
        out.warnings.extend(cache.put(&key, &payload));
    }
    Ok(env)
}

/// Recompute an envelope without any cache and compare.
pub fn verify_envelope(env: &Envelope) -> Result<Envelope> {
    let cache = Cache::disabled();
    let mut ctx = Context::new(&cache);
    if env.command == "realize" {
        // check the recorded Step 1 matrix instead of searching again
        let q = SymRatMatrix::new(parse_rat_matrix_value(&env.result["q"])?)?;
        let source = env.result["source"]
            .as_str()
            .and_then(StepOneSource::parse)
            .ok_or_else(|| Error::Parse("certificate lacks a Step 1 source".into()))?;
        ctx.step_one_override = Some((q, source));
    }
    let (result, checks) = execute(&env.command, &env.canonical_input, &env.config, &mut ctx)?;
    let fresh = Envelope::new(&env.command, env.canonical_input.clone(), env.config.clone(), result, &checks);
    let mut log: Checks = vec![
        ("schema version".into(), env.schema_version == envelope::SCHEMA_VERSION),
        ("input hash".into(), fresh.input_hash == env.input_hash),
        ("result reproduced".into(), fresh.result == env.result),
        ("check log reproduced".into(), fresh.check_log == env.check_log),
    ];
    log.extend(checks.into_iter().map(|(n, ok)| (format!("{}: {n}", env.command), ok)));
    let verified = log.iter().all(|(_, ok)| *ok);
    let raw = serde_json::to_string(env).expect("envelopes serialize");
    Ok(Envelope::new(
        "verify",
        json!({ "certificate_sha256": sha256_hex(raw.as_bytes()), "command": env.command }),
        json!({}),
        json!({ "verified": verified, "command": env.command, "input_hash": env.input_hash }),
        &log,
    ))
}

fn verify_file(path: &Path) -> Result<Envelope> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let env: Envelope =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("not a certificate envelope: {e}")))?;
    verify_envelope(&env)
}

fn dispatch(cli: &Cli, out: &mut RunOutcome) -> Result<Envelope> {
    match (&cli.verify, &cli.command) {
        (Some(path), None) | (None, Some(Command::Verify { file: path })) => verify_file(path),
        (None, Some(cmd)) => run_command(cmd, &cli.global, out),
        (Some(_), Some(_)) => Err(Error::InvalidArgument("--verify takes no subcommand".into())),
        (None, None) => Err(Error::InvalidArgument("a subcommand or --verify is required".into())),
    }
}

/// Run the program on `args` (including the program name).
pub fn run<I, T>(args: I) -> RunOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let mut out = RunOutcome {
        code: 0,
        stdout: String::new(),
        warnings: Vec::new(),
        cache: CacheStatus::NotUsed,
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            out.stdout = e.to_string();
            return out;
        }
        Err(e) => {
            out.code = 1;
            out.stdout = error_json(&Error::Parse(e.to_string().trim().to_string()));
            return out;
        }
    };
    let result = match cli.global.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(|| dispatch(&cli, &mut out)),
            Err(e) => Err(Error::InvalidArgument(format!("cannot start {n} workers: {e}"))),
        },
        None => dispatch(&cli, &mut out),
    };
    match result {
        Ok(env) => {
            out.code = if env.all_pass() { 0 } else { 1 };
            out.stdout = env.to_pretty();
        }
        Err(e) => {
            out.code = exit_code(&e);
            out.stdout = error_json(&e);
        }
    }
    if cli.global.quiet {
        out.warnings.clear();
    }
    out
}
