use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use twofactor::families::build_family;
use twofactor::forbidden::{find_induced_path_union, is_split};
use twofactor::format::{parse_graph6_corpus, parse_graph_auto, to_edge_list, to_graph6};
use twofactor::harness::{
    enumerate_labeled_graphs, verify_lemma5, verify_main_theorem, verify_sharpness, RecordPolicy, SharpnessOptions,
    TheoremOptions, VerificationReport,
};
use twofactor::toughness::{is_t_tough, toughness_exact};
use twofactor::two_factor::{eta_of, find_two_factor, odd_components, special_tutte_pair, Strength};
use twofactor::{Graph, Rational, VertexSet};

/// Worker count for the verification pipelines.
const WORKERS_ENV: &str = "TWOFACTOR_WORKERS";

#[derive(Parser)]
#[command(name = "twofactor", version, about = "Toughness, 2-factors and forbidden induced path unions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact toughness with a minimizing cut.
    Toughness { file: PathBuf },
    /// Exit 0 if the graph is t-tough, 1 otherwise (with a counter-witness).
    CheckTough {
        file: PathBuf,
        #[arg(long, value_parser = parse_rational)]
        t: Rational,
    },
    /// Exit 0 if the graph has no induced union of the two paths, 1 otherwise.
    CheckFree {
        file: PathBuf,
        /// e.g. `P4+P10` or `2P5`.
        #[arg(long, value_parser = parse_pattern)]
        pattern: (usize, usize),
    },
    /// Exit 0 if the graph is split, printing the partition.
    CheckSplit { file: PathBuf },
    /// Prints the cycles of a 2-factor, or NONE.
    TwoFactor {
        file: PathBuf,
        /// Also print the special Tutte pair when there is no 2-factor.
        #[arg(long)]
        certificate: bool,
    },
    /// η(S,T), h(S,T) and the component table.
    Eta {
        file: PathBuf,
        /// Comma-separated vertices.
        #[arg(long = "S", value_delimiter = ',', num_args = 0..)]
        s: Vec<usize>,
        #[arg(long = "T", value_delimiter = ',', num_args = 0..)]
        t: Vec<usize>,
    },
    /// Writes G(l, m).
    GenFamily {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
        /// Graph file; stdout if absent.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Write S, T, W and the classes as JSON, by default next to the output.
        #[arg(long, num_args = 0..=1, value_name = "PATH")]
        emit_witnesses: Option<Option<PathBuf>>,
    },
    /// Checks "t-tough and (Pa ∪ Pb)-free implies a 2-factor" on a corpus.
    VerifyTheorem {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, value_parser = parse_rational, default_value = "3/2")]
        t: Rational,
        #[arg(long, value_parser = parse_pattern, default_value = "P4+P10")]
        pattern: (usize, usize),
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Checks the sharpness example G(l, m).
    VerifySharpness {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        /// Largest order for the induced path-union searches.
        #[arg(long, default_value_t = SharpnessOptions::default().freeness_limit)]
        freeness_limit: usize,
    },
    /// Checks the special Tutte pair properties on every graph without a 2-factor.
    VerifyLemma5 {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
}

#[derive(clap::Args)]
struct CorpusArgs {
    /// graph6 file (one graph per line) instead of labeled enumeration.
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Records::Violations)]
    records: Records,
    /// Report file; stdout if absent.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Records {
    All,
    Violations,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edgelist,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

fn parse_pattern(s: &str) -> Result<(usize, usize), String> {
    let bad = || format!("expected a pattern like P4+P10 or 2P5, got {s:?}");
    let len = |p: &str| p.trim().strip_prefix('P').and_then(|k| k.parse::<usize>().ok()).filter(|&k| k >= 1);
    if let Some((a, b)) = s.split_once('+') {
        return Ok((len(a).ok_or_else(bad)?, len(b).ok_or_else(bad)?));
    }
    let k = s.strip_prefix('2').and_then(len).ok_or_else(bad)?;
    Ok((k, k))
}

fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph_auto(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn list(vs: &VertexSet) -> String {
    let items: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(fs::File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn configure_workers() -> Result<()> {
    if let Ok(v) = std::env::var(WORKERS_ENV) {
        let n: usize = v.parse().with_context(|| format!("{WORKERS_ENV}={v:?} is not a count"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn corpus_stream(n_min: usize, n_max: usize, corpus: &CorpusArgs) -> Result<(String, Box<dyn Iterator<Item = Graph>>)> {
    if let Some(path) = &corpus.corpus {
        let graphs = parse_graph6_corpus(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))?;
        return Ok((path.display().to_string(), Box::new(graphs.into_iter())));
    }
    if n_min > n_max {
        bail!("--n-min {n_min} exceeds --n-max {n_max}");
    }
    let mut parts = Vec::new();
    for n in n_min..=n_max {
        parts.push(enumerate_labeled_graphs(n)?);
    }
    Ok((format!("labeled n={n_min}..{n_max}"), Box::new(parts.into_iter().flatten())))
}

fn policy(r: Records) -> RecordPolicy {
    match r {
        Records::All => RecordPolicy::All,
        Records::Violations => RecordPolicy::Violations,
    }
}

fn finish(report: &VerificationReport, output: Option<&Path>) -> Result<ExitCode> {
    let mut out = sink(output)?;
    report.write_jsonl(&mut out)?;
    out.flush()?;
    let s = &report.summary;
    eprintln!(
        "{} graphs, {} checked, {} skipped, {} not applicable, {} violations ({} ms)",
        s.graphs, s.checked, s.skipped, s.not_applicable, s.violations, report.runtime_ms
    );
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Toughness { file } => {
            let g = read_graph(&file)?;
            let r = toughness_exact(&g)?;
            println!("toughness {}", r.value);
            match r.witness {
                Some(w) => println!("witness {} leaves {} components", list(&w), g.component_count(&w)),
                None => println!("complete graph, no separating set"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckTough { file, t } => {
            let g = read_graph(&file)?;
            let check = is_t_tough(&g, t)?;
            if check.tough {
                println!("{t}-tough");
                return Ok(ExitCode::SUCCESS);
            }
            println!("not {t}-tough");
            if let Some(w) = check.counter_witness {
                println!("counter-witness {} leaves {} components", list(&w), g.component_count(&w));
            }
            Ok(ExitCode::FAILURE)
        }
        Command::CheckFree { file, pattern: (a, b) } => {
            let g = read_graph(&file)?;
            match find_induced_path_union(&g, a, b) {
                None => {
                    println!("P{a}+P{b}-free");
                    Ok(ExitCode::SUCCESS)
                }
                Some(w) => {
                    println!("induced P{a}+P{b} found");
                    println!("P{a}: {:?}", w.path_a.vertices());
                    println!("P{b}: {:?}", w.path_b.vertices());
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::CheckSplit { file } => {
            let g = read_graph(&file)?;
            match is_split(&g) {
                Some(p) => {
                    println!("split");
                    println!("clique {}", list(&p.clique));
                    println!("independent {}", list(&p.independent));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("not split");
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::TwoFactor { file, certificate } => {
            let g = read_graph(&file)?;
            match find_two_factor(&g) {
                Some(f) => {
                    for c in &f.cycles {
                        let items: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                        println!("{}", items.join(" "));
                    }
                }
                None => {
                    println!("NONE");
                    if certificate {
                        let p = special_tutte_pair(&g)?.context("no 2-factor was found but no Tutte pair exists")?;
                        println!("S {}", list(&p.s));
                        println!("T {}", list(&p.t));
                        println!("eta {}", p.eta);
                        println!("h {}", p.h);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Eta { file, s, t } => {
            let g = read_graph(&file)?;
            let n = g.vertex_count();
            let (s, t) = (VertexSet::from_vertices(n, s), VertexSet::from_vertices(n, t));
            let pair = eta_of(&g, &s, &t)?;
            let report = odd_components(&g, &s, &t)?;
            println!("eta {}", pair.eta);
            println!("h {}", pair.h);
            println!("component\tedges_to_T\tclass");
            for c in &report.components {
                let class = match c.class {
                    Strength::Strong => "odd strong",
                    Strength::Weak => "odd weak",
                    Strength::NotApplicable => "even",
                };
                println!("{}\t{}\t{class}", list(&c.vertices), c.edges_to_t);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::GenFamily { l, m, format, output, emit_witnesses } => {
            let fw = build_family(l, m)?;
            let text = match format {
                GraphFormat::Graph6 => format!("{}\n", to_graph6(&fw.graph)),
                GraphFormat::Edgelist => to_edge_list(&fw.graph),
            };
            let mut out = sink(output.as_deref())?;
            out.write_all(text.as_bytes())?;
            out.flush()?;
            if let Some(path) = emit_witnesses {
                let path = path.unwrap_or_else(|| match &output {
                    Some(o) => o.with_extension("json"),
                    None => PathBuf::from(format!("family-l{l}-m{m}.json")),
                });
                fs::write(&path, serde_json::to_string(&fw)? + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
                eprintln!("witnesses written to {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyTheorem { n_max, n_min, t, pattern: (a, b), corpus } => {
            configure_workers()?;
            let (name, stream) = corpus_stream(n_min, n_max, &corpus)?;
            let options = TheoremOptions { t, a, b, records: policy(corpus.records), ..TheoremOptions::default() };
            let report = verify_main_theorem(&name, stream, &options);
            finish(&report, corpus.output.as_deref())
        }
        Command::VerifySharpness { l, m, freeness_limit } => {
            let r = verify_sharpness(l, m, &SharpnessOptions { freeness_limit })?;
            println!("{}", serde_json::to_string_pretty(&r)?);
            for c in &r.checks {
                eprintln!("{:?}\t{}\texpected {}\tobserved {}", c.status, c.name, c.expected, c.observed);
            }
            Ok(if r.violation { ExitCode::FAILURE } else { ExitCode::SUCCESS })
        }
        Command::VerifyLemma5 { n_max, n_min, corpus } => {
            configure_workers()?;
            let (name, stream) = corpus_stream(n_min, n_max, &corpus)?;
            let report = verify_lemma5(&name, stream, policy(corpus.records));
            finish(&report, corpus.output.as_deref())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
