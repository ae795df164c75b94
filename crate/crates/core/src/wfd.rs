//! Word frame disambiguation: candidate frame generation, the conditional
//! and inverse scoring functions, and oracle selection.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::model::{Annotation, FrameId, ModelError, Prediction, Profile, SynsetId};

/// How candidate frames are ranked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scorer {
    /// Conditional probability of the frame given the synset:
    /// `w(f,bs) / Σ_b w(f,b)`.
    Cond,
    /// Related-synset count over the pair weight: `|relatedSynsets(f)| /
    /// w(f,bs)`, promoting frames triggered by long-tail synsets.
    Inv,
    /// Upper bound: picks the gold frame whenever it is among the
    /// candidates, regardless of rank.
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WfdError {
    #[error("frame {0} is not in the profile")]
    UnknownFrame(String),
    #[error("synset {synset} is not a related synset of frame {frame}")]
    NotACandidate { frame: String, synset: String },
    #[error("frame {0} has zero total weight")]
    ZeroTotalWeight(String),
    #[error("synset {synset} has zero weight in frame {frame}")]
    ZeroWeight { frame: String, synset: String },
    #[error("the oracle scorer requires a gold frame")]
    MissingGold,
    #[error(transparent)]
    Model(#[from] ModelError),
}

struct FrameStats {
    weights: HashMap<SynsetId, f64>,
    /// Sum of the frame's weights, accumulated in entry-list order.
    total: f64,
    size: usize,
}

/// A profile prepared for scoring: an inverted synset → frames index plus
/// per-frame weight totals, both computed once at construction.
pub struct ProfileIndex {
    by_synset: HashMap<SynsetId, Vec<FrameId>>,
    frames: HashMap<FrameId, FrameStats>,
}

impl ProfileIndex {
    pub fn new(profile: &Profile) -> Self {
        let mut by_synset: HashMap<SynsetId, Vec<FrameId>> = HashMap::new();
        let mut frames = HashMap::new();
        for (frame, entries) in profile.frames() {
            let mut weights = HashMap::with_capacity(entries.len());
            let mut total = 0.0;
            for (synset, weight) in entries {
                by_synset.entry(synset.clone()).or_default().push(frame.clone());
                weights.insert(synset.clone(), *weight);
                total += weight;
            }
            frames.insert(
                frame.clone(),
                FrameStats {
                    weights,
                    total,
                    size: entries.len(),
                },
            );
        }
        // profile iteration is in ascending frame order, so every candidate
        // list is already sorted
        ProfileIndex { by_synset, frames }
    }

    /// CF(bs): every frame whose related synsets contain `bs`.
    pub fn candidate_frames(&self, synset: &SynsetId) -> BTreeSet<FrameId> {
        self.by_synset
            .get(synset)
            .map(|frames| frames.iter().cloned().collect())
            .unwrap_or_default()
    }

    pub fn has_candidates(&self, synset: &SynsetId) -> bool {
        self.by_synset.contains_key(synset)
    }

    pub fn is_candidate(&self, frame: &FrameId, synset: &SynsetId) -> bool {
        self.by_synset
            .get(synset)
            .is_some_and(|frames| frames.binary_search(frame).is_ok())
    }

    fn stats(&self, frame: &FrameId) -> Result<&FrameStats, WfdError> {
        self.frames
            .get(frame)
            .ok_or_else(|| WfdError::UnknownFrame(frame.to_string()))
    }

    fn pair_weight(&self, frame: &FrameId, synset: &SynsetId) -> Result<(&FrameStats, f64), WfdError> {
        let stats = self.stats(frame)?;
        let weight = stats
            .weights
            .get(synset)
            .copied()
            .ok_or_else(|| WfdError::NotACandidate {
                frame: frame.to_string(),
                synset: synset.to_string(),
            })?;
        Ok((stats, weight))
    }

    /// `score_cond(f, bs) = w(f,bs) / Σ_b w(f,b)`.
    ///
    /// `bs` must be a related synset of `f` and the frame's total weight must
    /// be positive.
    pub fn score_cond(&self, frame: &FrameId, synset: &SynsetId) -> Result<f64, WfdError> {
        let (stats, weight) = self.pair_weight(frame, synset)?;
        if stats.total <= 0.0 {
            return Err(WfdError::ZeroTotalWeight(frame.to_string()));
        }
        Ok(weight / stats.total)
    }

    /// `score_inv(f, bs) = |relatedSynsets(f)| / w(f,bs)`.
    ///
    /// `bs` must be a related synset of `f` with positive weight (guaranteed
    /// for enriched profiles by the weight floor).
    pub fn score_inv(&self, frame: &FrameId, synset: &SynsetId) -> Result<f64, WfdError> {
        let (stats, weight) = self.pair_weight(frame, synset)?;
        if weight <= 0.0 {
            return Err(WfdError::ZeroWeight {
                frame: frame.to_string(),
                synset: synset.to_string(),
            });
        }
        Ok(stats.size as f64 / weight)
    }

    /// Scores all candidate frames of `synset` and picks the top one.
    ///
    /// With `Cond` and `Inv` the candidates are ranked by score descending,
    /// ties broken by ascending frame id, and the first is chosen; an empty
    /// candidate set yields an empty ranking. The `Oracle` scorer instead
    /// selects `gold` whenever it is a candidate, wherever it would rank,
    /// and abstains otherwise.
    pub fn disambiguate(
        &self,
        synset: &SynsetId,
        scorer: Scorer,
        gold: Option<&FrameId>,
    ) -> Result<Ranking, WfdError> {
        let ranked = match scorer {
            Scorer::Oracle => {
                let gold = gold.ok_or(WfdError::MissingGold)?;
                if self.is_candidate(gold, synset) {
                    vec![(gold.clone(), 1.0)]
                } else {
                    Vec::new()
                }
            }
            Scorer::Cond | Scorer::Inv => {
                let candidates = self.by_synset.get(synset).map(Vec::as_slice).unwrap_or(&[]);
                let mut scored = Vec::with_capacity(candidates.len());
                for frame in candidates {
                    let score = match scorer {
                        Scorer::Cond => self.score_cond(frame, synset)?,
                        Scorer::Inv => self.score_inv(frame, synset)?,
                        Scorer::Oracle => unreachable!(),
                    };
                    scored.push((frame.clone(), score));
                }
                scored.sort_by(|(fa, sa), (fb, sb)| sb.total_cmp(sa).then_with(|| fa.cmp(fb)));
                scored
            }
        };
        Ok(Ranking { ranked })
    }

    /// Disambiguates `annotation`'s synset and pairs the result with it. The
    /// oracle uses the annotation's gold frame.
    pub fn predict(&self, annotation: &Annotation, scorer: Scorer) -> Result<Prediction, WfdError> {
        let ranking =
            self.disambiguate(annotation.synset(), scorer, Some(annotation.gold_frame()))?;
        Ok(Prediction::new(annotation.clone(), ranking.ranked)?)
    }
}

/// A sorted candidate ranking; the chosen frame is its top entry.
#[derive(Debug, Clone, PartialEq)]
pub struct Ranking {
    ranked: Vec<(FrameId, f64)>,
}

impl Ranking {
    pub fn ranked(&self) -> &[(FrameId, f64)] {
        &self.ranked
    }

    pub fn chosen(&self) -> Option<&FrameId> {
        self.ranked.first().map(|(frame, _)| frame)
    }

    pub fn top_score(&self) -> Option<f64> {
        self.ranked.first().map(|(_, score)| *score)
    }

    pub fn is_empty(&self) -> bool {
        self.ranked.is_empty()
    }
}
