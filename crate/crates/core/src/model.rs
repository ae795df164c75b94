//! Core domain types: synsets, frames, PCZ senses, profiles, bags of words,
//! annotations and evaluation records.
//!
//! All types are immutable after construction; constructors reject values
//! that violate their invariants.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Invariant violations raised by the constructors in this module.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("malformed synset id `{0}` (expected `bn:` + 8 digits + one of n/v/a/r)")]
    BadSynsetId(String),
    #[error("malformed frame id `{0}` (must be nonempty, no tabs or newlines)")]
    BadFrameId(String),
    #[error("malformed PCZ sense id `{0}` (expected word#POS#index)")]
    BadPczSenseId(String),
    #[error("synset {0} has no word senses")]
    EmptySenseList(String),
    #[error("synset {id} has an empty sense string")]
    EmptySense { id: String },
    #[error("duplicate lemma `{lemma}` in synset {id}")]
    DuplicateLemma { id: String, lemma: String },
    #[error("related weight {weight} for `{related}` is outside [0, 1]")]
    RelatedWeightOutOfRange { related: String, weight: f64 },
    #[error("duplicate related sense `{0}`")]
    DuplicateRelated(String),
    #[error("clue `{0}` is malformed (must be nonempty, no `,`, `:`, tab or newline)")]
    BadClue(String),
    #[error("clue score {score} for `{clue}` is negative or not finite")]
    BadClueScore { clue: String, score: f64 },
    #[error("duplicate clue `{0}`")]
    DuplicateClue(String),
    #[error("duplicate PCZ sense id `{0}`")]
    DuplicateSense(String),
    #[error("duplicate synset {synset} in frame {frame}")]
    DuplicateSynsetInFrame { frame: String, synset: String },
    #[error("weight {weight} for {synset} in frame {frame} is negative or not finite")]
    BadWeight {
        frame: String,
        synset: String,
        weight: f64,
    },
    #[error("stopword entry `{0}` is empty or contains whitespace")]
    BadStopword(String),
    #[error("annotation offsets {start}..{end} are not a valid span")]
    BadOffsets { start: usize, end: usize },
    #[error("ranked frame list is not sorted by score desc, then frame id asc")]
    UnsortedRanking,
    #[error("ranked list contains a non-finite score")]
    NonFiniteScore,
}

/// A BabelNet synset identifier: `bn:` followed by 8 decimal digits and one
/// part-of-speech letter (`n`, `v`, `a` or `r`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SynsetId(String);

impl SynsetId {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl FromStr for SynsetId {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, ModelError> {
        let rest = s.strip_prefix("bn:").unwrap_or("");
        let bytes = rest.as_bytes();
        let ok = bytes.len() == 9
            && bytes[..8].iter().all(u8::is_ascii_digit)
            && matches!(bytes[8], b'n' | b'v' | b'a' | b'r');
        if ok {
            Ok(SynsetId(s.to_string()))
        } else {
            Err(ModelError::BadSynsetId(s.to_string()))
        }
    }
}

impl fmt::Display for SynsetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A BabelNet synset: word senses plus glosses.
#[derive(Debug, Clone, PartialEq)]
pub struct Synset {
    id: SynsetId,
    senses: Vec<String>,
    glosses: Vec<String>,
}

impl Synset {
    pub fn new(id: SynsetId, senses: Vec<String>, glosses: Vec<String>) -> Result<Self, ModelError> {
        if senses.is_empty() {
            return Err(ModelError::EmptySenseList(id.to_string()));
        }
        let mut seen = BTreeSet::new();
        for sense in &senses {
            if sense.is_empty() {
                return Err(ModelError::EmptySense { id: id.to_string() });
            }
            if !seen.insert(sense.as_str()) {
                return Err(ModelError::DuplicateLemma {
                    id: id.to_string(),
                    lemma: sense.clone(),
                });
            }
        }
        Ok(Synset { id, senses, glosses })
    }

    pub fn id(&self) -> &SynsetId {
        &self.id
    }

    pub fn senses(&self) -> &[String] {
        &self.senses
    }

    pub fn glosses(&self) -> &[String] {
        &self.glosses
    }
}

/// A FrameNet frame name, e.g. `Communication`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FrameId(String);

impl FrameId {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl FromStr for FrameId {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, ModelError> {
        if s.is_empty() || s.contains(['\t', '\n', '\r']) {
            Err(ModelError::BadFrameId(s.to_string()))
        } else {
            Ok(FrameId(s.to_string()))
        }
    }
}

impl fmt::Display for FrameId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A frame together with its free-text description.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    pub id: FrameId,
    pub description: String,
}

/// A sense identifier in an induced sense inventory, rendered `word#POS#index`
/// (e.g. `quote#VB#0`).
///
/// `word` and `pos` may not contain `#`, `:`, `,`, tabs or newlines, which
/// keeps rendering and parsing inverse operations.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PczSenseId {
    word: String,
    pos: String,
    index: u32,
}

impl PczSenseId {
    pub fn new(word: &str, pos: &str, index: u32) -> Result<Self, ModelError> {
        let field_ok =
            |f: &str| !f.is_empty() && !f.contains(['#', ':', ',', '\t', '\n', '\r']);
        if field_ok(word) && field_ok(pos) {
            Ok(PczSenseId {
                word: word.to_string(),
                pos: pos.to_string(),
                index,
            })
        } else {
            Err(ModelError::BadPczSenseId(format!("{word}#{pos}#{index}")))
        }
    }

    pub fn word(&self) -> &str {
        &self.word
    }

    pub fn pos(&self) -> &str {
        &self.pos
    }

    pub fn index(&self) -> u32 {
        self.index
    }
}

impl FromStr for PczSenseId {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, ModelError> {
        let bad = || ModelError::BadPczSenseId(s.to_string());
        let mut parts = s.split('#');
        let (word, pos, index) = match (parts.next(), parts.next(), parts.next(), parts.next()) {
            (Some(w), Some(p), Some(i), None) => (w, p, i),
            _ => return Err(bad()),
        };
        let index: u32 = index.parse().map_err(|_| bad())?;
        PczSenseId::new(word, pos, index).map_err(|_| bad())
    }
}

impl fmt::Display for PczSenseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}#{}", self.word, self.pos, self.index)
    }
}

/// One entry of an induced sense inventory: an optional BabelNet link, a
/// weighted list of related senses and scored context clues.
#[derive(Debug, Clone, PartialEq)]
pub struct PczSense {
    id: PczSenseId,
    synset: Option<SynsetId>,
    related: Vec<(PczSenseId, f64)>,
    clues: Vec<(String, f64)>,
}

impl PczSense {
    pub fn new(
        id: PczSenseId,
        synset: Option<SynsetId>,
        related: Vec<(PczSenseId, f64)>,
        clues: Vec<(String, f64)>,
    ) -> Result<Self, ModelError> {
        let mut seen = BTreeSet::new();
        for (rel, weight) in &related {
            if !weight.is_finite() || *weight < 0.0 || *weight > 1.0 {
                return Err(ModelError::RelatedWeightOutOfRange {
                    related: rel.to_string(),
                    weight: *weight,
                });
            }
            if !seen.insert(rel) {
                return Err(ModelError::DuplicateRelated(rel.to_string()));
            }
        }
        let mut seen = BTreeSet::new();
        for (clue, score) in &clues {
            if clue.is_empty() || clue.contains([',', ':', '\t', '\n', '\r']) {
                return Err(ModelError::BadClue(clue.clone()));
            }
            if !score.is_finite() || *score < 0.0 {
                return Err(ModelError::BadClueScore {
                    clue: clue.clone(),
                    score: *score,
                });
            }
            if !seen.insert(clue.as_str()) {
                return Err(ModelError::DuplicateClue(clue.clone()));
            }
        }
        Ok(PczSense {
            id,
            synset,
            related,
            clues,
        })
    }

    pub fn id(&self) -> &PczSenseId {
        &self.id
    }

    pub fn synset(&self) -> Option<&SynsetId> {
        self.synset.as_ref()
    }

    pub fn related(&self) -> &[(PczSenseId, f64)] {
        &self.related
    }

    pub fn clues(&self) -> &[(String, f64)] {
        &self.clues
    }
}

/// An induced sense inventory with a synset → senses index.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PczInventory {
    senses: BTreeMap<PczSenseId, PczSense>,
    by_synset: BTreeMap<SynsetId, BTreeSet<PczSenseId>>,
}

impl PczInventory {
    pub fn from_senses(senses: Vec<PczSense>) -> Result<Self, ModelError> {
        let mut inventory = PczInventory::default();
        for sense in senses {
            if inventory.senses.contains_key(sense.id()) {
                return Err(ModelError::DuplicateSense(sense.id().to_string()));
            }
            if let Some(synset) = sense.synset() {
                inventory
                    .by_synset
                    .entry(synset.clone())
                    .or_default()
                    .insert(sense.id().clone());
            }
            inventory.senses.insert(sense.id().clone(), sense);
        }
        Ok(inventory)
    }

    pub fn get(&self, id: &PczSenseId) -> Option<&PczSense> {
        self.senses.get(id)
    }

    pub fn senses(&self) -> impl Iterator<Item = &PczSense> {
        self.senses.values()
    }

    pub fn len(&self) -> usize {
        self.senses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.senses.is_empty()
    }

    /// All senses linked to `synset`, in sense-id order.
    pub fn senses_for(&self, synset: &SynsetId) -> impl Iterator<Item = &PczSense> {
        self.by_synset
            .get(synset)
            .into_iter()
            .flat_map(|ids| ids.iter())
            .filter_map(|id| self.senses.get(id))
    }

    /// Rebuilds the synset index from scratch and compares it with the stored
    /// one. Intended for tests.
    pub fn index_is_consistent(&self) -> bool {
        let mut rebuilt: BTreeMap<SynsetId, BTreeSet<PczSenseId>> = BTreeMap::new();
        for sense in self.senses.values() {
            if let Some(synset) = sense.synset() {
                rebuilt
                    .entry(synset.clone())
                    .or_default()
                    .insert(sense.id().clone());
            }
        }
        rebuilt == self.by_synset
    }
}

/// A frame → related-synsets mapping, optionally weighted.
///
/// An unweighted profile carries weight 1.0 on every pair, so the same type
/// serves plain and enriched profiles.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    name: String,
    entries: BTreeMap<FrameId, Vec<(SynsetId, f64)>>,
}

impl Profile {
    pub fn new(name: impl Into<String>) -> Self {
        Profile {
            name: name.into(),
            entries: BTreeMap::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Appends `pairs` to the entry list of `frame`, rejecting duplicate
    /// synsets and negative or non-finite weights.
    pub fn add_entries(
        &mut self,
        frame: FrameId,
        pairs: impl IntoIterator<Item = (SynsetId, f64)>,
    ) -> Result<(), ModelError> {
        let entry = self.entries.entry(frame.clone()).or_default();
        let mut seen: BTreeSet<&SynsetId> = entry.iter().map(|(s, _)| s).collect();
        let mut accepted = Vec::new();
        for (synset, weight) in pairs {
            if !weight.is_finite() || weight < 0.0 {
                return Err(ModelError::BadWeight {
                    frame: frame.to_string(),
                    synset: synset.to_string(),
                    weight,
                });
            }
            if seen.contains(&synset) || accepted.iter().any(|(s, _): &(SynsetId, _)| *s == synset)
            {
                return Err(ModelError::DuplicateSynsetInFrame {
                    frame: frame.to_string(),
                    synset: synset.to_string(),
                });
            }
            accepted.push((synset, weight));
        }
        seen.clear();
        entry.extend(accepted);
        Ok(())
    }

    pub fn entry(&self, frame: &FrameId) -> Option<&[(SynsetId, f64)]> {
        self.entries.get(frame).map(Vec::as_slice)
    }

    /// Frames in ascending id order with their entry lists.
    pub fn frames(&self) -> impl Iterator<Item = (&FrameId, &[(SynsetId, f64)])> {
        self.entries.iter().map(|(f, e)| (f, e.as_slice()))
    }

    pub fn frame_count(&self) -> usize {
        self.entries.len()
    }

    pub fn pair_count(&self) -> usize {
        self.entries.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn distinct_synsets(&self) -> BTreeSet<&SynsetId> {
        self.entries
            .values()
            .flat_map(|pairs| pairs.iter().map(|(s, _)| s))
            .collect()
    }

    /// Re-sorts every entry list by weight descending, then synset id
    /// ascending — the canonical order of enriched and serialized profiles.
    pub fn sort_entries_canonical(&mut self) {
        for pairs in self.entries.values_mut() {
            sort_pairs_canonical(pairs);
        }
    }
}

/// Weight descending, then synset id ascending.
pub fn sort_pairs_canonical(pairs: &mut [(SynsetId, f64)]) {
    pairs.sort_by(|(sa, wa), (sb, wb)| wb.total_cmp(wa).then_with(|| sa.cmp(sb)));
}

/// Word → nonnegative weight. Absent words have weight 0; zero-weight entries
/// are never stored. Iteration is in ascending word order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct BagOfWords {
    weights: BTreeMap<String, f64>,
}

impl BagOfWords {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<S: Into<String>>(pairs: impl IntoIterator<Item = (S, f64)>) -> Self {
        let mut bag = BagOfWords::new();
        for (word, weight) in pairs {
            bag.add(word.into(), weight);
        }
        bag
    }

    /// Accumulates `weight` onto `word`. Zero contributions are dropped.
    pub fn add(&mut self, word: impl Into<String>, weight: f64) {
        assert!(
            weight.is_finite() && weight >= 0.0,
            "bag weights must be finite and nonnegative, got {weight}"
        );
        if weight == 0.0 {
            return;
        }
        *self.weights.entry(word.into()).or_insert(0.0) += weight;
    }

    /// The accessor `c(w)`: the stored weight of `word`, 0 when absent.
    pub fn weight(&self, word: &str) -> f64 {
        self.weights.get(word).copied().unwrap_or(0.0)
    }

    pub fn contains(&self, word: &str) -> bool {
        self.weights.contains_key(word)
    }

    /// Entries in ascending word order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> {
        self.weights.iter().map(|(w, c)| (w.as_str(), *c))
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// One gold row of the silver standard: a document span with its BabelNet
/// synset and gold frame.
#[derive(Debug, Clone, PartialEq)]
pub struct Annotation {
    doc_id: String,
    start: usize,
    end: usize,
    lemma: String,
    synset: SynsetId,
    gold_frame: FrameId,
}

impl Annotation {
    pub fn new(
        doc_id: impl Into<String>,
        start: usize,
        end: usize,
        lemma: impl Into<String>,
        synset: SynsetId,
        gold_frame: FrameId,
    ) -> Result<Self, ModelError> {
        if end <= start {
            return Err(ModelError::BadOffsets { start, end });
        }
        Ok(Annotation {
            doc_id: doc_id.into(),
            start,
            end,
            lemma: lemma.into(),
            synset,
            gold_frame,
        })
    }

    pub fn doc_id(&self) -> &str {
        &self.doc_id
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn lemma(&self) -> &str {
        &self.lemma
    }

    pub fn synset(&self) -> &SynsetId {
        &self.synset
    }

    pub fn gold_frame(&self) -> &FrameId {
        &self.gold_frame
    }
}

/// A scored disambiguation outcome for one annotation.
///
/// `chosen` is always the top of `ranked` (absent when the ranking is empty),
/// and `ranked` is sorted by score descending with ties broken by ascending
/// frame id.
#[derive(Debug, Clone, PartialEq)]
pub struct Prediction {
    annotation: Annotation,
    ranked: Vec<(FrameId, f64)>,
    chosen: Option<FrameId>,
}

impl Prediction {
    pub fn new(annotation: Annotation, ranked: Vec<(FrameId, f64)>) -> Result<Self, ModelError> {
        if ranked.iter().any(|(_, s)| !s.is_finite()) {
            return Err(ModelError::NonFiniteScore);
        }
        let sorted = ranked.windows(2).all(|pair| {
            let (fa, sa) = &pair[0];
            let (fb, sb) = &pair[1];
            sa > sb || (sa == sb && fa < fb)
        });
        if !sorted {
            return Err(ModelError::UnsortedRanking);
        }
        let chosen = ranked.first().map(|(f, _)| f.clone());
        Ok(Prediction {
            annotation,
            ranked,
            chosen,
        })
    }

    pub fn annotation(&self) -> &Annotation {
        &self.annotation
    }

    pub fn ranked(&self) -> &[(FrameId, f64)] {
        &self.ranked
    }

    pub fn chosen(&self) -> Option<&FrameId> {
        self.chosen.as_ref()
    }

    /// The score of the top-ranked frame, if any.
    pub fn top_score(&self) -> Option<f64> {
        self.ranked.first().map(|(_, s)| *s)
    }

    pub fn is_correct(&self) -> bool {
        self.chosen() == Some(self.annotation.gold_frame())
    }
}

/// Micro precision/recall/F1 over a prediction set, with per-category error
/// counts.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub total: usize,
    pub predicted: usize,
    pub correct: usize,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub error_counts: BTreeMap<String, usize>,
}

impl EvalReport {
    /// Derives the metrics from raw counts. Precision and recall fall back to
    /// 0 when their denominator is 0, and F1 to 0 when P + R = 0.
    pub fn from_counts(
        total: usize,
        predicted: usize,
        correct: usize,
        error_counts: BTreeMap<String, usize>,
    ) -> Self {
        debug_assert!(correct <= predicted && predicted <= total);
        let ratio = |num: usize, den: usize| if den == 0 { 0.0 } else { num as f64 / den as f64 };
        let precision = ratio(correct, predicted);
        let recall = ratio(correct, total);
        let f1 = if precision + recall == 0.0 {
            0.0
        } else {
            2.0 * precision * recall / (precision + recall)
        };
        EvalReport {
            total,
            predicted,
            correct,
            precision,
            recall,
            f1,
            error_counts,
        }
    }
}
