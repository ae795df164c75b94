//! `wfdkit` — enrich frame → synset profiles with distributional weights
//! and disambiguate word frames against them.
//!
//! Data always goes to `--output` (or stdout); diagnostics and one-line
//! summaries go to stderr. Exit status is 0 on success, 1 on bad input or
//! I/O failure, 2 on usage errors.

mod predictions;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use wfdkit::bow::StopwordSet;
use wfdkit::enrich::{enrich, DEFAULT_FLOOR};
use wfdkit::eval::{evaluate, polysemy_distribution};
use wfdkit::ingest;
use wfdkit::model::{Prediction, Profile};
use wfdkit::wfd::{ProfileIndex, Scorer};

#[derive(Parser)]
#[command(name = "wfdkit", version, about = "Frame profile enrichment and word frame disambiguation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScorerArg {
    /// Conditional probability of the frame given the synset.
    Cond,
    /// Related-synset count divided by the pair weight.
    Inv,
    /// Upper bound: pick the gold frame whenever it is a candidate.
    Oracle,
}

impl From<ScorerArg> for Scorer {
    fn from(arg: ScorerArg) -> Scorer {
        match arg {
            ScorerArg::Cond => Scorer::Cond,
            ScorerArg::Inv => Scorer::Inv,
            ScorerArg::Oracle => Scorer::Oracle,
        }
    }
}

fn parse_floor(s: &str) -> Result<f64, String> {
    let floor: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if !floor.is_finite() || floor < 0.0 {
        return Err("floor must be finite and >= 0".to_string());
    }
    Ok(floor)
}

#[derive(Subcommand)]
enum Command {
    /// Reweight a profile from a sense inventory, synsets and frame
    /// descriptions.
    Enrich {
        /// Frame profile to reweight (weighted or unweighted).
        #[arg(long)]
        profile: PathBuf,
        /// Sense inventory with BabelNet links.
        #[arg(long)]
        pcz: PathBuf,
        /// Synset file with senses and glosses.
        #[arg(long)]
        babelnet: PathBuf,
        /// Frame description file.
        #[arg(long)]
        frames: PathBuf,
        /// Stopword file; the built-in English list is used when absent.
        #[arg(long)]
        stopwords: Option<PathBuf>,
        /// Minimum weight assigned to pairs with no vocabulary overlap.
        #[arg(long, default_value_t = DEFAULT_FLOOR, value_parser = parse_floor)]
        floor: f64,
        /// Output file; stdout when absent.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Disambiguate annotated synsets against a profile.
    Wfd {
        #[arg(long)]
        profile: PathBuf,
        /// Silver-standard annotation file.
        #[arg(long)]
        annotations: PathBuf,
        /// Ranking function.
        #[arg(long, value_enum)]
        scorer: ScorerArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Score a prediction file against its gold frames.
    Eval {
        /// Prediction file produced by `wfd`.
        #[arg(long)]
        predictions: PathBuf,
        #[arg(long)]
        profile: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the candidate-count distribution of a profile.
    Stats {
        #[arg(long)]
        profile: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn write_output(output: Option<&Path>, content: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, content)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{content}"),
    }
    Ok(())
}

fn profile_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "profile".to_string())
}

fn load_profile(path: &Path) -> Result<Profile> {
    Ok(ingest::parse_profile(path, &profile_name(path))?)
}

fn load_stopwords(path: Option<&Path>) -> Result<StopwordSet> {
    match path {
        Some(path) => Ok(ingest::parse_stopwords(path)?),
        None => Ok(StopwordSet::default_english()),
    }
}

fn cmd_enrich(
    profile: &Path,
    pcz: &Path,
    babelnet: &Path,
    frames: &Path,
    stopwords: Option<&Path>,
    floor: f64,
    output: Option<&Path>,
) -> Result<()> {
    let profile = load_profile(profile)?;
    let inventory = ingest::parse_pcz(pcz)?;
    let synsets = ingest::parse_babelnet(babelnet)?;
    let frames = ingest::parse_frames(frames)?;
    let stop = load_stopwords(stopwords)?;

    let enrichment = enrich(&profile, &inventory, &synsets, &frames, &stop, floor);
    for frame in &enrichment.missing_descriptions {
        eprintln!("warning: no description for frame `{frame}`");
    }
    write_output(output, &ingest::render_profile(&enrichment.profile))?;
    eprintln!(
        "frames={} pairs={} floored={}",
        enrichment.profile.frame_count(),
        enrichment.pairs,
        enrichment.floored
    );
    Ok(())
}

fn cmd_wfd(
    profile: &Path,
    annotations: &Path,
    scorer: Scorer,
    output: Option<&Path>,
) -> Result<()> {
    let profile = load_profile(profile)?;
    let annotations = ingest::parse_annotations(annotations)?;
    let index = ProfileIndex::new(&profile);

    let mut rows: Vec<Prediction> = Vec::with_capacity(annotations.len());
    for annotation in &annotations {
        rows.push(index.predict(annotation, scorer)?);
    }
    write_output(output, &predictions::render_predictions(&rows))
}

fn cmd_eval(predictions: &Path, profile: &Path, output: Option<&Path>) -> Result<()> {
    let rows = predictions::parse_predictions(predictions)?;
    let profile = load_profile(profile)?;
    let index = ProfileIndex::new(&profile);
    let report = evaluate(&rows, &index);
    write_output(output, &report::render_report(&report))?;
    eprintln!("{}", report::render_summary(&report));
    Ok(())
}

fn cmd_stats(profile: &Path, output: Option<&Path>) -> Result<()> {
    let profile = load_profile(profile)?;
    let mut content = String::new();
    for (candidates, count) in polysemy_distribution(&profile) {
        content.push_str(&format!("{candidates}\t{count}\n"));
    }
    write_output(output, &content)
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Enrich {
            profile,
            pcz,
            babelnet,
            frames,
            stopwords,
            floor,
            output,
        } => cmd_enrich(
            &profile,
            &pcz,
            &babelnet,
            &frames,
            stopwords.as_deref(),
            floor,
            output.as_deref(),
        ),
        Command::Wfd {
            profile,
            annotations,
            scorer,
            output,
        } => cmd_wfd(&profile, &annotations, scorer.into(), output.as_deref()),
        Command::Eval {
            predictions,
            profile,
            output,
        } => cmd_eval(&predictions, &profile, output.as_deref()),
        Command::Stats { profile, output } => cmd_stats(&profile, output.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
