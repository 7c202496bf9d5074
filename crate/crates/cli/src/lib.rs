//! Command-line driver for the hook-module experiments: classification of
//! elementary abelian classes, Sylow characterization checks, Brauer
//! quotients, generic Jordan types, decomposition search, vertex evidence
//! and the trace audit. Output is one JSON line per experiment on stdout
//! (deterministic for a fixed seed); timings go to stderr.

pub mod experiments;
pub mod output;

use clap::{Parser, Subcommand, ValueEnum};

use output::ExperimentResult;
use spechtlab_core::permgrp::Flavor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupKind {
    Sym,
    Alt,
}

impl From<GroupKind> for Flavor {
    fn from(g: GroupKind) -> Flavor {
        match g {
            GroupKind::Sym => Flavor::Sym,
            GroupKind::Alt => Flavor::Alt,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Parser, Debug)]
#[command(
    name = "spechtlab",
    version,
    about = "Exact desk-scale computations with hook Specht modules: subgroup \
             classification, Brauer quotients, generic Jordan types"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Seed for all randomized subroutines; reruns reproduce byte-identical output
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,

    /// Output format: JSON lines (default) or tab-separated tables
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Worker thread cap (falls back to SPECHTLAB_THREADS, then all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the classes of maximal elementary abelian p-subgroups
    ElemAbelian {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = GroupKind::Sym)]
        group: GroupKind,
        /// Cross-check by exhaustive subgroup enumeration (within caps)
        #[arg(long)]
        brute_force: bool,
    },
    /// Verify that containing all elementary abelian classes characterizes Sylow subgroups
    SylowVerify {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = GroupKind::Sym)]
        group: GroupKind,
    },
    /// Brauer quotient of a hook module of degree k*p at a p-subgroup
    Brauer {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: usize,
        /// E(m1,..,mr) | F(..) | Sylow | Q9 | gens:<perm>;<perm>;..
        #[arg(long)]
        subgroup: String,
        /// hook:<r> (default hook:p)
        #[arg(long)]
        module: Option<String>,
    },
    /// Generic Jordan type of a hook module restricted to a subgroup
    Jordan {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        subgroup: String,
        #[arg(long, default_value_t = 12)]
        trials: usize,
    },
    /// Search for a direct-sum decomposition of a restricted hook module
    Decompose {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        subgroup: String,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// Per-class vertex evidence for the top hook module of degree k*p
    VertexEvidence {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: usize,
        /// Skip direct Jordan computations above this module dimension
        #[arg(long, default_value_t = 512)]
        max_dim: usize,
        #[arg(long, default_value_t = 12)]
        trials: usize,
    },
    /// Audit the fixed-vector and trace-coefficient machinery at the grid subgroup
    TraceAudit {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: usize,
    },
}

pub struct RunOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn configure_threads(requested: Option<usize>) {
    let n = requested.or_else(|| {
        std::env::var("SPECHTLAB_THREADS").ok().and_then(|v| v.parse().ok())
    });
    if let Some(n) = n {
        // the global pool can only be installed once per process; later
        // requests keep the existing pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

pub fn run(args: &[String]) -> RunOutput {
    let mut argv: Vec<String> = vec!["spechtlab".to_string()];
    argv.extend_from_slice(args);
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            // clap renders help/version on stdout with code 0
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                RunOutput { stdout: rendered, stderr: String::new(), code }
            } else {
                RunOutput { stdout: String::new(), stderr: rendered, code }
            };
        }
    };
    configure_threads(cli.threads);
    let started = std::time::Instant::now();
    let seed = cli.seed;
    let result: Result<ExperimentResult, String> = match &cli.command {
        Command::ElemAbelian { p, n, group, brute_force } => {
            experiments::elem_abelian(*p, *n, (*group).into(), *brute_force, seed)
        }
        Command::SylowVerify { p, n, group } => {
            experiments::sylow_verify(*p, *n, (*group).into(), seed)
        }
        Command::Brauer { p, k, subgroup, module } => {
            experiments::brauer_cmd(*p, *k, subgroup, module.as_deref(), seed)
        }
        Command::Jordan { p, n, r, subgroup, trials } => {
            experiments::jordan_cmd(*p, *n, *r, subgroup, *trials, seed)
        }
        Command::Decompose { p, n, r, subgroup, trials } => {
            experiments::decompose_cmd(*p, *n, *r, subgroup, *trials, seed)
        }
        Command::VertexEvidence { p, k, max_dim, trials } => {
            experiments::vertex_evidence(*p, *k, *max_dim, *trials, seed)
        }
        Command::TraceAudit { p, k } => experiments::trace_audit(*p, *k, seed),
    };
    match result {
        Ok(res) => {
            let stdout = match cli.format {
                Format::Json => res.to_json_line(),
                Format::Tsv => res.to_tsv(),
            };
            let stderr = format!(
                "{} finished in {} ms\n",
                res.experiment,
                started.elapsed().as_millis()
            );
            RunOutput { stdout, stderr, code: res.exit_code() }
        }
        Err(msg) => RunOutput {
            stdout: String::new(),
            stderr: format!("error: {}\n", msg),
            code: 2,
        },
    }
}
