//! Enriches frame → synset profiles with distributional weights computed
//! from an induced sense inventory, and disambiguates word frames with the
//! enriched profiles.
//!
//! The pipeline has four stages, each usable on its own:
//!
//! 1. [`ingest`] parses the tabular resource files (synsets, profiles, sense
//!    inventories, frame descriptions, annotations) and serializes profiles.
//! 2. [`bow`] turns synsets, inventory entries and frame descriptions into
//!    bag-of-words representations over content words.
//! 3. [`enrich`] computes a relatedness weight for every frame–synset pair
//!    from the overlap of those bags and rewrites the profile with them.
//! 4. [`wfd`] ranks the candidate frames of an annotated synset with the
//!    conditional or inverse scorer (or an oracle upper bound), and [`eval`]
//!    reports micro precision/recall/F1 with an error breakdown.

pub mod bow;
pub mod enrich;
pub mod eval;
pub mod ingest;
pub mod model;
pub mod wfd;

pub use bow::StopwordSet;
pub use eval::ErrorCategory;
pub use ingest::{IngestError, ParseError};
pub use model::{
    Annotation, BagOfWords, EvalReport, Frame, FrameId, ModelError, PczInventory, PczSense,
    PczSenseId, Prediction, Profile, Synset, SynsetId,
};
pub use wfd::{ProfileIndex, Ranking, Scorer, WfdError};
