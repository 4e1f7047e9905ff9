//! `backbone`: score edges, filter globally, and evaluate how well the
//! resulting backbones preserve network structure.
//!
//! Exit codes: 0 on success, 1 on i/o or data errors, 2 on usage errors.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use backbone_core::experiment::{
    aggregate, aggregate_csv, matrix_csv, records_csv, records_json, run_corpus_sweep, run_sweep,
    score_correlation_matrix, time_methods, timings_csv, SweepConfig,
};
use backbone_core::graph::{load_edge_list, write_edge_list, Graph, LoadedGraph};
use backbone_core::metrics::PageRankConfig;
use backbone_core::scoring::{
    read_scores, score_method, write_scores, FireParams, Method, ScoreParams,
};
use backbone_core::sparsify::filter_by_ratio;

#[derive(Debug, Parser)]
#[command(
    name = "backbone",
    about = "Edge scoring and global filtering for network sparsification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn parse_ratio(s: &str) -> Result<f64, String> {
    let value: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if !(0.0..=1.0).contains(&value) {
        return Err(format!("ratio {value} outside [0, 1]"));
    }
    Ok(value)
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse::<Method>().map_err(|e| e.to_string())
}

/// Knobs shared by every command: seeding, worker-pool size, and the
/// parameters of the seeded scorers.
#[derive(Debug, Args)]
struct CommonOpts {
    /// Seed for the randomized scorers (fixed default for reproducibility)
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Worker-pool size; falls back to $BACKBONE_THREADS, then all cores.
    /// Results are identical for every value.
    #[arg(long)]
    threads: Option<usize>,
    /// Forest-fire spread probability, in (0, 1)
    #[arg(long, default_value_t = 0.95)]
    eff_p: f64,
    /// Forest-fire target visits as a multiple of the edge count
    #[arg(long, default_value_t = 5.0)]
    eff_target: f64,
    /// PageRank damping factor
    #[arg(long, default_value_t = 0.85)]
    pr_damping: f64,
    /// PageRank L1 convergence tolerance
    #[arg(long, default_value_t = 1e-9)]
    pr_tol: f64,
}

impl CommonOpts {
    fn install_thread_pool(&self) -> Result<()> {
        let threads = self.threads.or_else(|| {
            std::env::var("BACKBONE_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        });
        if let Some(threads) = threads {
            if threads == 0 {
                bail!("--threads must be at least 1");
            }
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global()
                .context("thread pool already initialized")?;
        }
        Ok(())
    }

    fn score_params(&self) -> Result<ScoreParams> {
        let fire = FireParams {
            p: self.eff_p,
            target_visit_ratio: self.eff_target,
            seed: self.seed,
        };
        fire.validate().map_err(|e| anyhow::anyhow!(e))?;
        Ok(ScoreParams {
            seed: self.seed,
            fire,
        })
    }

    fn sweep_config(&self, methods: Vec<Method>, ratios: Vec<f64>) -> Result<SweepConfig> {
        let params = self.score_params()?;
        Ok(SweepConfig {
            methods,
            ratios,
            seed: self.seed,
            fire: params.fire,
            pagerank: PageRankConfig {
                damping: self.pr_damping,
                tolerance: self.pr_tol,
                ..PageRankConfig::default()
            },
        })
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Score every edge of a graph with one method
    Score {
        /// Edge-list file
        graph: PathBuf,
        #[arg(long, value_parser = parse_method)]
        method: Method,
        /// Output score file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Filter a graph down to its highest-scored edges
    Sparsify {
        /// Edge-list file
        graph: PathBuf,
        /// Scoring method (mutually exclusive with --scores)
        #[arg(long, value_parser = parse_method, conflicts_with = "scores")]
        method: Option<Method>,
        /// Precomputed score file (mutually exclusive with --method)
        #[arg(long)]
        scores: Option<PathBuf>,
        /// Fraction of edges to keep
        #[arg(long, value_parser = parse_ratio)]
        ratio: f64,
        /// Output edge-list file
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Run the full measure catalog for one method at one ratio
    Evaluate {
        /// Edge-list file
        graph: PathBuf,
        #[arg(long, value_parser = parse_method)]
        method: Method,
        #[arg(long, value_parser = parse_ratio)]
        ratio: f64,
        /// Output CSV (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Sweep methods over a ratio grid for every graph in a corpus
    Sweep {
        /// Directory of edge-list files
        corpus: PathBuf,
        /// Methods to sweep (default: all)
        #[arg(long, value_delimiter = ',', value_parser = parse_method)]
        methods: Vec<Method>,
        /// Kept-edge ratios (default: 0.05, 0.10, ..., 1.00)
        #[arg(long, value_delimiter = ',', value_parser = parse_ratio)]
        ratios: Vec<f64>,
        /// Output CSV with one row per (graph, method, ratio, measure)
        #[arg(long)]
        out: PathBuf,
        /// Also emit the records as a JSON array
        #[arg(long)]
        json: Option<PathBuf>,
        /// Also emit per-(method, ratio, measure) means over the corpus
        #[arg(long)]
        aggregate: Option<PathBuf>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Edge-score correlation matrix over a corpus (methods plus `mod`)
    Correlate {
        /// Directory of edge-list files
        corpus: PathBuf,
        #[arg(long, value_delimiter = ',', value_parser = parse_method)]
        methods: Vec<Method>,
        /// Output CSV matrix
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Wall-clock scoring times per (graph, method), best of three
    Time {
        /// Directory of edge-list files
        corpus: PathBuf,
        #[arg(long, value_delimiter = ',', value_parser = parse_method)]
        methods: Vec<Method>,
        /// Output CSV
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        common: CommonOpts,
    },
}

fn load_graph(path: &Path) -> Result<Graph> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    let loaded: LoadedGraph =
        load_edge_list(BufReader::new(file)).with_context(|| format!("{}", path.display()))?;
    if loaded.dropped_duplicates > 0 || loaded.dropped_self_loops > 0 {
        eprintln!(
            "{}: dropped {} duplicate edge(s) and {} self-loop(s)",
            path.display(),
            loaded.dropped_duplicates,
            loaded.dropped_self_loops
        );
    }
    Ok(loaded.graph)
}

/// Loads every regular file of a corpus directory, sorted by file name.
fn load_corpus(dir: &Path) -> Result<Vec<(String, Graph)>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .with_context(|| format!("cannot read {}", dir.display()))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    paths.sort();
    let mut corpus = Vec::new();
    for path in paths {
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        corpus.push((name, load_graph(&path)?));
    }
    if corpus.is_empty() {
        bail!("corpus directory {} holds no graph files", dir.display());
    }
    Ok(corpus)
}

fn write_output(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))
}

fn methods_or_all(methods: Vec<Method>) -> Vec<Method> {
    if methods.is_empty() {
        Method::ALL.to_vec()
    } else {
        methods
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Score {
            graph,
            method,
            out,
            common,
        } => {
            common.install_thread_pool()?;
            let g = load_graph(&graph)?;
            let scores = score_method(&g, method, &common.score_params()?);
            match out {
                Some(path) => {
                    let file = File::create(&path)
                        .with_context(|| format!("cannot write {}", path.display()))?;
                    write_scores(&g, &scores, BufWriter::new(file))?;
                    println!("wrote {} scores to {}", scores.len(), path.display());
                }
                None => {
                    let stdout = std::io::stdout();
                    write_scores(&g, &scores, stdout.lock())?;
                }
            }
            Ok(())
        }
        Command::Sparsify {
            graph,
            method,
            scores,
            ratio,
            out,
            common,
        } => {
            common.install_thread_pool()?;
            let g = load_graph(&graph)?;
            let edge_scores = match (method, scores) {
                (Some(method), None) => score_method(&g, method, &common.score_params()?),
                (None, Some(path)) => {
                    let file = File::open(&path)
                        .with_context(|| format!("cannot open {}", path.display()))?;
                    read_scores(&g, BufReader::new(file))
                        .with_context(|| format!("{}", path.display()))?
                }
                _ => bail!("exactly one of --method and --scores is required"),
            };
            let backbone = filter_by_ratio(&g, &edge_scores, ratio)?;
            let file =
                File::create(&out).with_context(|| format!("cannot write {}", out.display()))?;
            let mut writer = BufWriter::new(file);
            write_edge_list(&backbone.graph, &mut writer)?;
            writer.flush()?;
            println!(
                "kept={} of {}",
                backbone.graph.edge_count(),
                g.edge_count()
            );
            Ok(())
        }
        Command::Evaluate {
            graph,
            method,
            ratio,
            out,
            common,
        } => {
            common.install_thread_pool()?;
            let g = load_graph(&graph)?;
            let name = graph
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| graph.display().to_string());
            let config = common.sweep_config(vec![method], vec![ratio])?;
            let records = run_sweep(&g, &name, &config);
            let csv = records_csv(&records);
            match out {
                Some(path) => write_output(&path, &csv)?,
                None => print!("{csv}"),
            }
            Ok(())
        }
        Command::Sweep {
            corpus,
            methods,
            ratios,
            out,
            json,
            aggregate: aggregate_out,
            common,
        } => {
            common.install_thread_pool()?;
            let graphs = load_corpus(&corpus)?;
            let ratios = if ratios.is_empty() {
                backbone_core::experiment::default_ratio_grid()
            } else {
                ratios
            };
            let config = common.sweep_config(methods_or_all(methods), ratios)?;
            let records = run_corpus_sweep(&graphs, &config);
            write_output(&out, &records_csv(&records))?;
            if let Some(path) = json {
                write_output(&path, &records_json(&records))?;
            }
            if let Some(path) = aggregate_out {
                write_output(&path, &aggregate_csv(&aggregate(&records)))?;
            }
            println!("wrote {} records to {}", records.len(), out.display());
            Ok(())
        }
        Command::Correlate {
            corpus,
            methods,
            out,
            common,
        } => {
            common.install_thread_pool()?;
            let graphs = load_corpus(&corpus)?;
            let config = common.sweep_config(Vec::new(), Vec::new())?;
            let matrix = score_correlation_matrix(&graphs, &methods_or_all(methods), &config);
            for (i, row) in matrix.excluded.iter().enumerate() {
                for (j, &count) in row.iter().enumerate() {
                    if count > 0 && i < j {
                        eprintln!(
                            "pair ({}, {}): {count} graph(s) excluded (constant score vector)",
                            matrix.labels[i], matrix.labels[j]
                        );
                    }
                }
            }
            write_output(&out, &matrix_csv(&matrix))?;
            println!("wrote {}x{} matrix to {}", matrix.labels.len(), matrix.labels.len(), out.display());
            Ok(())
        }
        Command::Time {
            corpus,
            methods,
            out,
            common,
        } => {
            common.install_thread_pool()?;
            let graphs = load_corpus(&corpus)?;
            let config = common.sweep_config(Vec::new(), Vec::new())?;
            let records = time_methods(&graphs, &methods_or_all(methods), &config);
            write_output(&out, &timings_csv(&records))?;
            println!("timed {} (graph, method) pairs", records.len());
            Ok(())
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(err) => {
            eprintln!("backbone: {err:#}");
            std::process::exit(1);
        }
    }
}
