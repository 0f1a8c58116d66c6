use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use minorprime::bench::{run_bench, DEFAULT_REPS};
use minorprime::corpus::{self, CorpusCase};
use minorprime::matrix::combinations;
use minorprime::{factorize_guan, factorize_mlp, verify, Decision, Error, MatrixDocument, PolyMatrix};

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_NO: u8 = 2;
const EXIT_INCOMPLETE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "minorprime",
    version,
    about = "MLP factorization of multivariate polynomial matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    New,
    Guan,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether F has an MLP factorization and compute one.
    Factorize {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "new")]
        algorithm: Algorithm,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// Verify F = G0 * F0 with F0 minor left prime.
    Check { f: PathBuf, g0: PathBuf, f0: PathBuf },
    /// Rank and a witnessing nonzero minor.
    Rank { file: PathBuf },
    /// All minors of the given size.
    Minors {
        file: PathBuf,
        #[arg(long)]
        size: usize,
    },
    /// Determinantal divisor d_i (default i = rank).
    Dr {
        file: PathBuf,
        #[arg(long)]
        size: Option<usize>,
    },
    /// Time both algorithms on a corpus.
    Bench {
        /// `appendix` or a directory of matrix documents.
        #[arg(long, default_value = "appendix")]
        corpus: String,
        #[arg(long, default_value_t = DEFAULT_REPS)]
        reps: usize,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
}

fn load(path: &Path) -> anyhow::Result<MatrixDocument> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    MatrixDocument::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn load_matrix(path: &Path) -> anyhow::Result<PolyMatrix> {
    load(path)?
        .parse_matrix()
        .with_context(|| format!("parsing {}", path.display()))
}

fn grid(m: &PolyMatrix) -> serde_json::Value {
    json!(MatrixDocument::from_matrix(m, None).rows)
}

fn factorize(file: &Path, algorithm: Algorithm, output: Output) -> anyhow::Result<u8> {
    let f = load_matrix(file)?;
    let (name, result) = match algorithm {
        Algorithm::New => ("new", factorize_mlp(&f)),
        Algorithm::Guan => ("guan", factorize_guan(&f)),
    };
    let decision = match result {
        Ok(d) => d,
        Err(Error::ExtractionIncomplete(why)) => {
            let msg = format!("module is free, so a factorization exists, but basis extraction stopped: {why}");
            match output {
                Output::Text => println!("decision: factorizable (construction incomplete)\n{msg}"),
                Output::Json => println!(
                    "{}",
                    json!({"algorithm": name, "decision": "mlp", "constructed": false, "message": msg})
                ),
            }
            return Ok(EXIT_INCOMPLETE);
        }
        Err(e) => bail!("factorize ({name}): {e}"),
    };
    match (&decision, output) {
        (Decision::Factorizable(fact), Output::Text) => {
            println!("decision: factorizable");
            println!("G0 =\n{}", fact.g0);
            println!("F0 =\n{}", fact.f0);
            println!("verified: {}", fact.verified);
        }
        (Decision::Factorizable(fact), Output::Json) => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "algorithm": name,
                "decision": "mlp",
                "vars": f.ring().vars(),
                "g0": grid(&fact.g0),
                "f0": grid(&fact.f0),
                "verified": fact.verified,
            }))?
        ),
        (Decision::NotFactorizable(cert), Output::Text) => {
            println!("decision: not factorizable");
            println!("H =\n{}", cert.h);
            let gb: Vec<String> = cert.gb.iter().map(ToString::to_string).collect();
            println!("Fitting ideal I_{}(H) basis: [{}]", cert.index, gb.join(", "));
        }
        (Decision::NotFactorizable(cert), Output::Json) => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "algorithm": name,
                "decision": "none",
                "vars": f.ring().vars(),
                "h": grid(&cert.h),
                "index": cert.index,
                "gb": cert.gb.iter().map(ToString::to_string).collect::<Vec<_>>(),
            }))?
        ),
    }
    Ok(if decision.is_factorizable() { EXIT_OK } else { EXIT_NO })
}

fn check(f: &Path, g0: &Path, f0: &Path) -> anyhow::Result<u8> {
    let fd = load(f)?;
    let ring = fd.ring()?;
    let f = fd.parse_in(&ring)?;
    let g0 = load(g0)?.parse_in(&ring).context("G0")?;
    let f0 = load(f0)?.parse_in(&ring).context("F0")?;
    let ok = verify(&f, &g0, &f0);
    println!("verified: {ok}");
    Ok(if ok { EXIT_OK } else { EXIT_NO })
}

fn one_based(ix: &[usize]) -> Vec<usize> {
    ix.iter().map(|i| i + 1).collect()
}

fn rank(file: &Path) -> anyhow::Result<u8> {
    let w = load_matrix(file)?.rank();
    println!("r = {}", w.rank);
    println!("rows = {:?}", one_based(&w.row_indices));
    println!("cols = {:?}", one_based(&w.col_indices));
    Ok(EXIT_OK)
}

fn minors(file: &Path, size: usize) -> anyhow::Result<u8> {
    let f = load_matrix(file)?;
    let values = f.minors(size)?;
    let labels = combinations(f.nrows(), size).into_iter().flat_map(|rs| {
        combinations(f.ncols(), size)
            .into_iter()
            .map(move |cs| (rs.clone(), cs))
    });
    for ((rs, cs), m) in labels.zip(values) {
        println!("rows {:?} cols {:?}: {m}", one_based(&rs), one_based(&cs));
    }
    Ok(EXIT_OK)
}

fn dr(file: &Path, size: Option<usize>) -> anyhow::Result<u8> {
    let f = load_matrix(file)?;
    let i = size.unwrap_or_else(|| f.rank().rank);
    println!("d_{i} = {}", f.determinantal_divisor(i)?);
    Ok(EXIT_OK)
}

fn load_corpus(spec: &str) -> anyhow::Result<Vec<CorpusCase>> {
    if spec == "appendix" {
        return Ok(corpus::appendix());
    }
    let mut paths: Vec<PathBuf> = fs::read_dir(spec)
        .with_context(|| format!("reading corpus directory {spec}"))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        bail!("no .json documents in {spec}");
    }
    paths
        .iter()
        .map(|p| {
            Ok(CorpusCase {
                name: p.file_stem().unwrap_or_default().to_string_lossy().into_owned(),
                document: load(p)?,
            })
        })
        .collect()
}

fn bench(spec: &str, reps: usize, output: Output) -> anyhow::Result<u8> {
    let cases = load_corpus(spec)?;
    let report = match run_bench(&cases, reps) {
        Ok(r) => r,
        Err(e @ Error::LabelMismatch { .. }) => {
            eprintln!("error: {e}; no timings reported");
            return Ok(EXIT_NO);
        }
        Err(e) => return Err(e.into()),
    };
    match output {
        Output::Text => print!("{}", report.to_text()),
        Output::Json => println!("{}", report.to_json()),
    }
    Ok(EXIT_OK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Factorize {
            file,
            algorithm,
            output,
        } => factorize(file, *algorithm, *output),
        Command::Check { f, g0, f0 } => check(f, g0, f0),
        Command::Rank { file } => rank(file),
        Command::Minors { file, size } => minors(file, *size),
        Command::Dr { file, size } => dr(file, *size),
        Command::Bench { corpus, reps, output } => bench(corpus, *reps, *output),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
