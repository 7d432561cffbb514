//! The `sparsedc` command line.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use crate::bench::{self, ExperimentConfig, Method, Scoring};
use crate::coder::{self, CompressedContainer};
use crate::estimators::{ideal_code_length, redundancy_bound, AnyModel, BoundKind, ModelKind};

#[derive(Debug, Parser)]
#[command(name = "sparsedc", version, about = "Sparse sequential Dirichlet coding")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compress a file, one symbol per byte.
    Compress {
        #[arg(long, value_enum)]
        model: ModelArg,
        /// Alphabet size; every input byte must be below it.
        #[arg(long, value_parser = clap::value_parser!(u16).range(2..=256))]
        alphabet: u16,
        input: PathBuf,
        output: PathBuf,
    },
    /// Restore a file written by `compress`.
    Decompress { input: PathBuf, output: PathBuf },
    /// Score the coding distributions on synthetic memoryless sources.
    Bench {
        /// Size of the alphabet the sources actually use.
        #[arg(long)]
        a: usize,
        /// Size of the alphabet the adaptive coders are told about.
        #[arg(long)]
        x: usize,
        #[arg(long, default_value_t = bench::DEFAULT_TRIALS)]
        trials: u64,
        #[arg(long = "len", default_value_t = bench::DEFAULT_SEQ_LEN)]
        seq_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the summary as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Comma-separated subset of methods.
        #[arg(long, value_enum, value_delimiter = ',')]
        methods: Option<Vec<MethodArg>>,
        /// Score with range-coded payload sizes instead of ideal code lengths.
        #[arg(long)]
        coded: bool,
    },
    /// Print the four redundancy bounds.
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        x: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModelArg {
    Sdc,
    Ssd,
    Ssa,
}

impl From<ModelArg> for ModelKind {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Sdc => ModelKind::Sdc,
            ModelArg::Ssd => ModelKind::Ssd,
            ModelArg::Ssa => ModelKind::Ssa,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MethodArg {
    Oracle,
    SdcA,
    SdcX,
    Ssd,
    Ssa,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Oracle => Method::Oracle,
            MethodArg::SdcA => Method::SdcA,
            MethodArg::SdcX => Method::SdcX,
            MethodArg::Ssd => Method::Ssd,
            MethodArg::Ssa => Method::Ssa,
        }
    }
}

pub fn run<W: Write>(cli: Cli, out: &mut W) -> Result<()> {
    match cli.command {
        Command::Compress {
            model,
            alphabet,
            input,
            output,
        } => cmd_compress(&input, &output, model.into(), alphabet as usize, out),
        Command::Decompress { input, output } => cmd_decompress(&input, &output, out),
        Command::Bench {
            a,
            x,
            trials,
            seq_len,
            seed,
            csv,
            methods,
            coded,
        } => {
            let mut config = ExperimentConfig::new(a, x)
                .with_trials(trials)
                .with_seq_len(seq_len)
                .with_seed(seed);
            if let Some(methods) = methods {
                let mut methods: Vec<Method> = methods.into_iter().map(Method::from).collect();
                methods.sort();
                methods.dedup();
                config.methods = methods;
            }
            if coded {
                config.scoring = Scoring::Coded;
            }
            cmd_bench(&config, csv.as_deref(), out)
        }
        Command::Bounds { n, a, x } => cmd_bounds(n, a, x, out),
    }
}

pub fn cmd_compress<W: Write>(
    input: &std::path::Path,
    output: &std::path::Path,
    kind: ModelKind,
    alphabet: usize,
    out: &mut W,
) -> Result<()> {
    if !(2..=256).contains(&alphabet) {
        bail!("alphabet size must be in [2, 256], got {alphabet}");
    }
    let data = fs::read(input).with_context(|| format!("reading {}", input.display()))?;
    if let Some(pos) = data.iter().position(|&b| b as usize >= alphabet) {
        bail!(
            "byte {} at offset {pos} does not fit an alphabet of {alphabet} symbols",
            data[pos]
        );
    }
    let symbols: Vec<usize> = data.iter().map(|&b| b as usize).collect();
    let ideal = ideal_code_length(&mut AnyModel::new(kind, alphabet)?, &symbols)?;
    let container = coder::encode_sequence(&mut AnyModel::new(kind, alphabet)?, &symbols)?;
    let bytes = container.to_bytes();
    fs::write(output, &bytes).with_context(|| format!("writing {}", output.display()))?;
    writeln!(out, "model: {}", kind.name())?;
    writeln!(out, "original bytes: {}", data.len())?;
    writeln!(out, "compressed bytes: {}", bytes.len())?;
    writeln!(out, "payload bytes: {}", container.payload.len())?;
    writeln!(out, "ideal bits: {ideal:.6}")?;
    Ok(())
}

pub fn cmd_decompress<W: Write>(
    input: &std::path::Path,
    output: &std::path::Path,
    out: &mut W,
) -> Result<()> {
    let bytes = fs::read(input).with_context(|| format!("reading {}", input.display()))?;
    let container = CompressedContainer::from_bytes(&bytes)?;
    if container.alphabet_size > 256 {
        bail!(
            "container alphabet of {} symbols cannot be written as bytes",
            container.alphabet_size
        );
    }
    let symbols = coder::decode_bytes(&bytes)?;
    let data: Vec<u8> = symbols.iter().map(|&s| s as u8).collect();
    fs::write(output, &data).with_context(|| format!("writing {}", output.display()))?;
    writeln!(out, "model: {}", container.model.name())?;
    writeln!(out, "decompressed bytes: {}", data.len())?;
    Ok(())
}

pub fn cmd_bench<W: Write>(
    config: &ExperimentConfig,
    csv: Option<&std::path::Path>,
    out: &mut W,
) -> Result<()> {
    config.validate()?;
    let report = bench::run_experiment(config)?;
    let rows = report.all_rows();
    writeln!(
        out,
        "a={} x={} trials={} len={} seed={}",
        config.sub_alphabet, config.full_alphabet, config.trials, config.seq_len, config.seed
    )?;
    write!(out, "{}", bench::format_table(&rows))?;
    if let Some(path) = csv {
        fs::write(path, bench::emit_csv(&rows))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

pub fn cmd_bounds<W: Write>(n: u64, a: u64, x: u64, out: &mut W) -> Result<()> {
    // validate everything before printing anything
    let values = BoundKind::ALL
        .iter()
        .map(|&k| redundancy_bound(k, n, a, x).map(|v| (k, v)))
        .collect::<Result<Vec<_>, _>>()?;
    for (k, v) in values {
        writeln!(out, "{:<10} {v:.6}", k.label())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<Cli, clap::Error> {
        Cli::try_parse_from(std::iter::once("sparsedc").chain(args.iter().copied()))
    }

    #[test]
    fn bounds_output() {
        let mut buf = Vec::new();
        cmd_bounds(100, 5, 26, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("SSD        49.433"), "{text}");
        assert!(text.contains("SSA        39.99"), "{text}");
        assert!(text.contains("SDC_FULL   108.04"), "{text}");
        assert!(text.contains("SDC_KNOWN  17.287"), "{text}");
    }

    #[test]
    fn bounds_full_occupancy() {
        let mut buf = Vec::new();
        cmd_bounds(16, 4, 4, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        // log2 4 + log2 C(4, 4) + 3/2 * 4 + 5
        assert!(text.contains("SSA        13.000000"), "{text}");
    }

    #[test]
    fn bounds_rejects_bad_parameters() {
        let mut buf = Vec::new();
        assert!(cmd_bounds(10, 6, 5, &mut buf).is_err());
        assert!(buf.is_empty());
    }

    #[test]
    fn parses_subcommands() {
        assert!(parse(&["compress", "--model", "ssd", "--alphabet", "256", "a", "b"]).is_ok());
        assert!(parse(&["compress", "--model", "ssd", "--alphabet", "257", "a", "b"]).is_err());
        assert!(parse(&["compress", "--model", "ssd", "--alphabet", "1", "a", "b"]).is_err());
        assert!(parse(&["compress", "--model", "ppm", "--alphabet", "4", "a", "b"]).is_err());
        assert!(parse(&["bench", "--a", "5", "--x", "26", "--methods", "ssd,ssa"]).is_ok());
        assert!(parse(&["bounds", "--n", "1", "--a", "1"]).is_err());
        assert!(parse(&[]).is_err());
    }

    #[test]
    fn bench_rejects_a_above_x() {
        let cli = parse(&["bench", "--a", "6", "--x", "5", "--trials", "1"]).unwrap();
        assert!(run(cli, &mut Vec::new()).is_err());
    }
}
