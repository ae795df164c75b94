//! Profile enrichment: relatedness weights between frames and synsets,
//! computed from the overlap of their bag-of-words representations.

use std::collections::{BTreeMap, HashMap};

use crate::bow::{bow_frame, bow_pcz, bow_synset, StopwordSet};
use crate::model::{BagOfWords, Frame, FrameId, PczInventory, Profile, Synset, SynsetId};

/// The default weight floor: pairs whose bags share no vocabulary keep a
/// minimal weight of 1.0 so every attested frame–synset link stays alive.
pub const DEFAULT_FLOOR: f64 = 1.0;

/// Relatedness of a frame and a synset:
///
/// the sum over every word in the support of `bz` that also occurs in `bbn`
/// or `bf` of `bz.c(w) * (bf.c(w) + bbn.c(w))`.
///
/// Words are accumulated in ascending order, so equal inputs give
/// bit-identical results.
pub fn compute_weight(bz: &BagOfWords, bbn: &BagOfWords, bf: &BagOfWords) -> f64 {
    let mut total = 0.0;
    for (word, wz) in bz.iter() {
        if bbn.contains(word) || bf.contains(word) {
            total += wz * (bf.weight(word) + bbn.weight(word));
        }
    }
    total
}

/// An enriched profile plus bookkeeping about how it was produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Enrichment {
    pub profile: Profile,
    /// Number of (frame, synset) pairs weighted.
    pub pairs: usize,
    /// Pairs whose computed weight fell below the floor.
    pub floored: usize,
    /// Profile frames with no description in the frame file, in ascending
    /// order. They are processed with an empty frame bag.
    pub missing_descriptions: Vec<FrameId>,
}

/// Reweights every frame–synset pair of `profile` with
/// [`compute_weight`], flooring results at `floor`.
///
/// The output has exactly the same frame → synset structure as the input,
/// with each frame's entries re-sorted by weight descending, then synset id
/// ascending. Synsets absent from `synsets` contribute an empty synset bag;
/// frames absent from `frames` contribute an empty frame bag and are
/// reported in `missing_descriptions`.
pub fn enrich(
    profile: &Profile,
    inventory: &PczInventory,
    synsets: &[Synset],
    frames: &[Frame],
    stop: &StopwordSet,
    floor: f64,
) -> Enrichment {
    assert!(
        floor.is_finite() && floor >= 0.0,
        "floor must be finite and nonnegative, got {floor}"
    );

    let synset_by_id: HashMap<&SynsetId, &Synset> =
        synsets.iter().map(|s| (s.id(), s)).collect();
    let frame_by_id: HashMap<&FrameId, &Frame> = frames.iter().map(|f| (&f.id, f)).collect();

    // one bag per distinct synset, shared across frames
    let mut synset_bags: BTreeMap<&SynsetId, (BagOfWords, BagOfWords)> = BTreeMap::new();
    for bs in profile.distinct_synsets() {
        let bbn = synset_by_id
            .get(bs)
            .map(|s| bow_synset(s, stop))
            .unwrap_or_default();
        let bz = bow_pcz(inventory, bs, stop);
        synset_bags.insert(bs, (bz, bbn));
    }

    let mut enriched = Profile::new(profile.name());
    let mut pairs = 0;
    let mut floored = 0;
    let mut missing = Vec::new();
    for (frame_id, entries) in profile.frames() {
        let bf = match frame_by_id.get(frame_id) {
            Some(frame) => bow_frame(frame, stop),
            None => {
                missing.push(frame_id.clone());
                BagOfWords::new()
            }
        };
        let weighted: Vec<(SynsetId, f64)> = entries
            .iter()
            .map(|(bs, _)| {
                let (bz, bbn) = &synset_bags[bs];
                let raw = compute_weight(bz, bbn, &bf);
                pairs += 1;
                if raw < floor {
                    floored += 1;
                    (bs.clone(), floor)
                } else {
                    (bs.clone(), raw)
                }
            })
            .collect();
        enriched
            .add_entries(frame_id.clone(), weighted)
            .expect("input profile has no duplicate synsets per frame");
    }
    enriched.sort_entries_canonical();

    Enrichment {
        profile: enriched,
        pairs,
        floored,
        missing_descriptions: missing,
    }
}
