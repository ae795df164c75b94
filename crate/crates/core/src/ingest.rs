//! Parsing and serialization of the toolkit's tabular resource files.
//!
//! All formats are UTF-8, tab-separated, one record per line, with Unix
//! newlines. Lines whose first character is `#` are comments; blank lines
//! are ignored. Inner lists are comma-separated; weights are attached to a
//! token with `:`; glosses are separated by `||`.
//!
//! This is the only module that reads or writes resource data on disk.

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::bow::StopwordSet;
use crate::model::{
    Annotation, Frame, FrameId, ModelError, PczInventory, PczSense, PczSenseId, Profile, Synset,
    SynsetId,
};

/// A rejected input line, with the 1-based line number it came from.
#[derive(Debug, Clone, PartialEq, Error)]
pub struct ParseError {
    pub path: String,
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(path: &Path, line: usize, message: impl Into<String>) -> Self {
        ParseError {
            path: path.display().to_string(),
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.path, self.line, self.message)
    }
}

/// Any failure while reading or writing a resource file.
#[derive(Debug, Error)]
pub enum IngestError {
    /// The cause is part of the message rather than a source link, so the
    /// rendered error carries the path context exactly once.
    #[error("{path}: {cause}")]
    Io { path: String, cause: std::io::Error },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl IngestError {
    fn io(path: &Path, cause: std::io::Error) -> Self {
        IngestError::Io {
            path: path.display().to_string(),
            cause,
        }
    }
}

fn read(path: &Path) -> Result<String, IngestError> {
    fs::read_to_string(path).map_err(|e| IngestError::io(path, e))
}

/// Data lines with their 1-based line numbers; comments and blanks skipped.
fn data_lines(content: &str) -> impl Iterator<Item = (usize, &str)> {
    content
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line))
        .filter(|(_, line)| !line.trim().is_empty() && !line.starts_with('#'))
}

fn columns<'a>(
    path: &Path,
    line_no: usize,
    line: &'a str,
    expected: usize,
) -> Result<Vec<&'a str>, ParseError> {
    let fields: Vec<&str> = line.split('\t').collect();
    if fields.len() != expected {
        return Err(ParseError::new(
            path,
            line_no,
            format!("expected {expected} tab-separated columns, found {}", fields.len()),
        ));
    }
    Ok(fields)
}

/// Splits a comma-separated list field; an empty field is an empty list.
fn list_items(field: &str) -> Vec<&str> {
    if field.is_empty() {
        Vec::new()
    } else {
        field.split(',').collect()
    }
}

/// Parses a synset file: `synsetId<TAB>sense,sense,…<TAB>gloss||gloss||…`.
/// The gloss column may be empty. Duplicate synset ids are rejected.
pub fn parse_babelnet(path: &Path) -> Result<Vec<Synset>, IngestError> {
    let content = read(path)?;
    let mut synsets = Vec::new();
    let mut seen: BTreeSet<SynsetId> = BTreeSet::new();
    for (line_no, line) in data_lines(&content) {
        let err = |message: String| ParseError::new(path, line_no, message);
        let fields = columns(path, line_no, line, 3)?;
        let id: SynsetId = fields[0].parse().map_err(|e: ModelError| err(e.to_string()))?;
        if !seen.insert(id.clone()) {
            return Err(err(format!("duplicate synset id {id}")).into());
        }
        let senses: Vec<String> = list_items(fields[1]).iter().map(|s| s.to_string()).collect();
        let glosses: Vec<String> = if fields[2].is_empty() {
            Vec::new()
        } else {
            fields[2].split("||").map(str::to_string).collect()
        };
        let synset =
            Synset::new(id, senses, glosses).map_err(|e| err(e.to_string()))?;
        synsets.push(synset);
    }
    Ok(synsets)
}

/// Parses one `synset` or `synset:weight` token of a profile line.
fn parse_profile_token(token: &str) -> Result<(SynsetId, f64), String> {
    if let Ok(id) = token.parse::<SynsetId>() {
        return Ok((id, 1.0));
    }
    if let Some((left, right)) = token.rsplit_once(':') {
        if let Ok(id) = left.parse::<SynsetId>() {
            let weight: f64 = right
                .parse()
                .map_err(|_| format!("non-numeric weight `{right}` on `{token}`"))?;
            if !weight.is_finite() || weight < 0.0 {
                return Err(format!("negative or non-finite weight {weight} on `{token}`"));
            }
            return Ok((id, weight));
        }
    }
    Err(ModelError::BadSynsetId(token.to_string()).to_string())
}

/// Parses a profile file: `frameId<TAB>synset[:weight],synset[:weight],…`.
///
/// Tokens without a `:weight` suffix get weight 1.0. Multiple lines for the
/// same frame concatenate their synset lists; a synset repeated within one
/// frame is rejected.
pub fn parse_profile(path: &Path, name: &str) -> Result<Profile, IngestError> {
    let content = read(path)?;
    let mut profile = Profile::new(name);
    for (line_no, line) in data_lines(&content) {
        let err = |message: String| ParseError::new(path, line_no, message);
        let fields = columns(path, line_no, line, 2)?;
        let frame: FrameId = fields[0].parse().map_err(|e: ModelError| err(e.to_string()))?;
        let mut pairs = Vec::new();
        for token in list_items(fields[1]) {
            pairs.push(parse_profile_token(token).map_err(err)?);
        }
        profile
            .add_entries(frame, pairs)
            .map_err(|e| err(e.to_string()))?;
    }
    Ok(profile)
}

/// Formats a weight as its shortest round-trip decimal, with at least one
/// decimal place.
fn format_weight(weight: f64) -> String {
    let mut s = format!("{weight}");
    if !s.contains('.') {
        s.push_str(".0");
    }
    s
}

/// Serializes a profile deterministically: frames in ascending id order, one
/// per line; within a frame, synsets ordered by weight descending, then id
/// ascending; every weight written explicitly.
pub fn render_profile(profile: &Profile) -> String {
    let mut out = String::new();
    for (frame, pairs) in profile.frames() {
        let mut pairs = pairs.to_vec();
        crate::model::sort_pairs_canonical(&mut pairs);
        let tokens: Vec<String> = pairs
            .iter()
            .map(|(synset, weight)| format!("{synset}:{}", format_weight(*weight)))
            .collect();
        out.push_str(frame.as_str());
        out.push('\t');
        out.push_str(&tokens.join(","));
        out.push('\n');
    }
    out
}

/// Writes [`render_profile`] output to `path`.
pub fn write_profile(profile: &Profile, path: &Path) -> Result<(), IngestError> {
    fs::write(path, render_profile(profile)).map_err(|e| IngestError::io(path, e))
}

/// Parses a sense inventory file with four columns: sense id; linked synset
/// id or `-`; comma-separated `senseId:weight` related senses; and
/// comma-separated `clue:score` context clues.
///
/// Clue strings may contain `#` (e.g. `Track#NP#-vmod`), so the split
/// between clue and score happens at the last `:` of the token. The same
/// rule applies to related-sense tokens.
pub fn parse_pcz(path: &Path) -> Result<PczInventory, IngestError> {
    let content = read(path)?;
    let mut senses = Vec::new();
    let mut seen: BTreeSet<PczSenseId> = BTreeSet::new();
    for (line_no, line) in data_lines(&content) {
        let err = |message: String| ParseError::new(path, line_no, message);
        let fields = columns(path, line_no, line, 4)?;
        let id: PczSenseId = fields[0].parse().map_err(|e: ModelError| err(e.to_string()))?;
        if !seen.insert(id.clone()) {
            return Err(err(format!("duplicate PCZ sense id {id}")).into());
        }
        let synset: Option<SynsetId> = if fields[1] == "-" {
            None
        } else {
            Some(fields[1].parse().map_err(|e: ModelError| err(e.to_string()))?)
        };
        let mut related = Vec::new();
        for token in list_items(fields[2]) {
            let (rel, weight) = token
                .rsplit_once(':')
                .ok_or_else(|| err(format!("related entry `{token}` lacks a `:weight` suffix")))?;
            let rel: PczSenseId = rel.parse().map_err(|e: ModelError| err(e.to_string()))?;
            let weight: f64 = weight
                .parse()
                .map_err(|_| err(format!("non-numeric weight on related entry `{token}`")))?;
            related.push((rel, weight));
        }
        let mut clues = Vec::new();
        for token in list_items(fields[3]) {
            let (clue, score) = token
                .rsplit_once(':')
                .ok_or_else(|| err(format!("clue entry `{token}` lacks a `:score` suffix")))?;
            let score: f64 = score
                .parse()
                .map_err(|_| err(format!("non-numeric score on clue entry `{token}`")))?;
            clues.push((clue.to_string(), score));
        }
        let sense = PczSense::new(id, synset, related, clues).map_err(|e| err(e.to_string()))?;
        senses.push(sense);
    }
    Ok(PczInventory::from_senses(senses).expect("duplicate ids rejected during parsing"))
}

/// Parses a frame description file: `frameId<TAB>description`. The
/// description is everything after the first tab and may be empty.
/// Duplicate frame ids are rejected.
pub fn parse_frames(path: &Path) -> Result<Vec<Frame>, IngestError> {
    let content = read(path)?;
    let mut frames = Vec::new();
    let mut seen: BTreeSet<FrameId> = BTreeSet::new();
    for (line_no, line) in data_lines(&content) {
        let err = |message: String| ParseError::new(path, line_no, message);
        let (id, description) = line
            .split_once('\t')
            .ok_or_else(|| err("expected `frameId<TAB>description`".to_string()))?;
        let id: FrameId = id.parse().map_err(|e: ModelError| err(e.to_string()))?;
        if !seen.insert(id.clone()) {
            return Err(err(format!("duplicate frame id {id}")).into());
        }
        frames.push(Frame {
            id,
            description: description.to_string(),
        });
    }
    Ok(frames)
}

/// Parses a silver-standard annotation file with six columns: docId, start,
/// end, lemma, synsetId, goldFrame. Order is preserved and duplicate rows
/// are allowed.
pub fn parse_annotations(path: &Path) -> Result<Vec<Annotation>, IngestError> {
    let content = read(path)?;
    let mut annotations = Vec::new();
    for (line_no, line) in data_lines(&content) {
        let err = |message: String| ParseError::new(path, line_no, message);
        let fields = columns(path, line_no, line, 6)?;
        let start: usize = fields[1]
            .parse()
            .map_err(|_| err(format!("non-integer start offset `{}`", fields[1])))?;
        let end: usize = fields[2]
            .parse()
            .map_err(|_| err(format!("non-integer end offset `{}`", fields[2])))?;
        let synset: SynsetId = fields[4].parse().map_err(|e: ModelError| err(e.to_string()))?;
        let gold: FrameId = fields[5].parse().map_err(|e: ModelError| err(e.to_string()))?;
        let annotation = Annotation::new(fields[0], start, end, fields[3], synset, gold)
            .map_err(|e| err(e.to_string()))?;
        annotations.push(annotation);
    }
    Ok(annotations)
}

/// Parses a stopword file: one word per line, `#` comments and blank lines
/// ignored, entries lowercased.
pub fn parse_stopwords(path: &Path) -> Result<StopwordSet, IngestError> {
    let content = read(path)?;
    let mut words = Vec::new();
    for (line_no, line) in data_lines(&content) {
        let word = line.trim();
        if word.chars().any(char::is_whitespace) {
            return Err(ParseError::new(
                path,
                line_no,
                format!("stopword entry `{word}` contains whitespace"),
            )
            .into());
        }
        words.push(word.to_string());
    }
    Ok(StopwordSet::from_words(words).expect("entries validated during parsing"))
}
