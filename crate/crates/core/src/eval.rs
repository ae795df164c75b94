//! Evaluation of predictions against gold frames: micro precision, recall
//! and F1, a mechanized error taxonomy, and the candidate-polysemy
//! distribution of a profile.

use std::collections::BTreeMap;

use crate::model::{EvalReport, Prediction, Profile};
use crate::wfd::ProfileIndex;

/// Mechanized categories for every annotation that was not answered
/// correctly. The categories are mutually exclusive and cover all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ErrorCategory {
    /// The synset triggers no candidate frame at all.
    NoCandidate,
    /// Candidates exist but the gold frame is not among them.
    CandidateMiss,
    /// The gold frame was a candidate but was not chosen.
    RankingError,
}

impl ErrorCategory {
    pub fn name(self) -> &'static str {
        match self {
            ErrorCategory::NoCandidate => "noCandidate",
            ErrorCategory::CandidateMiss => "candidateMiss",
            ErrorCategory::RankingError => "rankingError",
        }
    }
}

/// Error categories that require human judgment. They appear in every
/// report as zero-initialized placeholders so that manually annotated
/// counts can be merged in later.
pub const MANUAL_ERROR_CATEGORIES: &[&str] = &["misalignedAnnotations", "entityLinkingErrors"];

fn categorize(prediction: &Prediction, index: &ProfileIndex) -> ErrorCategory {
    let annotation = prediction.annotation();
    if !index.has_candidates(annotation.synset()) {
        ErrorCategory::NoCandidate
    } else if !index.is_candidate(annotation.gold_frame(), annotation.synset()) {
        ErrorCategory::CandidateMiss
    } else {
        ErrorCategory::RankingError
    }
}

/// Micro-averaged evaluation of `predictions` against their gold frames.
///
/// Precision counts only annotations with a chosen frame; recall counts all
/// annotations; incorrect or abstained annotations are partitioned into the
/// three mechanized error categories against `index`.
pub fn evaluate(predictions: &[Prediction], index: &ProfileIndex) -> EvalReport {
    let mut predicted = 0;
    let mut correct = 0;
    let mut error_counts: BTreeMap<String, usize> = BTreeMap::new();
    for category in [
        ErrorCategory::NoCandidate,
        ErrorCategory::CandidateMiss,
        ErrorCategory::RankingError,
    ] {
        error_counts.insert(category.name().to_string(), 0);
    }
    for category in MANUAL_ERROR_CATEGORIES {
        error_counts.insert((*category).to_string(), 0);
    }

    for prediction in predictions {
        if prediction.chosen().is_some() {
            predicted += 1;
        }
        if prediction.is_correct() {
            correct += 1;
        } else {
            let category = categorize(prediction, index);
            *error_counts.get_mut(category.name()).expect("seeded above") += 1;
        }
    }
    EvalReport::from_counts(predictions.len(), predicted, correct, error_counts)
}

/// For each distinct synset of `profile`, the number of candidate frames it
/// triggers; returned as a histogram `|CF(bs)| → synset count`.
pub fn polysemy_distribution(profile: &Profile) -> BTreeMap<usize, usize> {
    let mut frames_per_synset: BTreeMap<&crate::model::SynsetId, usize> = BTreeMap::new();
    for (_, entries) in profile.frames() {
        for (synset, _) in entries {
            *frames_per_synset.entry(synset).or_insert(0) += 1;
        }
    }
    let mut histogram = BTreeMap::new();
    for count in frames_per_synset.values() {
        *histogram.entry(*count).or_insert(0) += 1;
    }
    histogram
}
