//! Acceptance suite: one test per release criterion, every tolerance pinned
//! in code. Run with `cargo test -p wfdkit-cli --test acceptance` for one
//! pass/fail line per criterion.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use wfdkit::enrich::{compute_weight, enrich};
use wfdkit::eval::{evaluate, polysemy_distribution};
use wfdkit::ingest::{self, render_profile};
use wfdkit::model::{
    Annotation, BagOfWords, EvalReport, Frame, FrameId, PczInventory, PczSense, PczSenseId,
    Profile, Synset, SynsetId,
};
use wfdkit::wfd::{ProfileIndex, Scorer};
use wfdkit::StopwordSet;

// ---------------------------------------------------------------------------
// helpers
// ---------------------------------------------------------------------------

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn synset_id(n: u32) -> SynsetId {
    format!("bn:{n:08}n").parse().unwrap()
}

fn frame_id(n: usize) -> FrameId {
    format!("Frame{n:02}").parse().unwrap()
}

/// The published weighted excerpt, loaded from the transcription fixture.
fn weighted_excerpt() -> Profile {
    ingest::parse_profile(&fixtures().join("profile_weighted.tsv"), "excerpt").unwrap()
}

/// A random profile over a pool of 12 synsets and up to 6 frames, with
/// integer weights (exactly representable, so scaling by 0.5/3/10 is exact).
fn random_profile(rng: &mut ChaCha8Rng) -> Profile {
    let mut profile = Profile::new("random");
    let frame_count = rng.gen_range(1..=6);
    for f in 0..frame_count {
        let mut pool: Vec<u32> = (0..12).collect();
        pool.shuffle(rng);
        let entry_count = rng.gen_range(1..=8);
        profile
            .add_entries(
                frame_id(f),
                pool[..entry_count]
                    .iter()
                    .map(|s| (synset_id(*s), f64::from(rng.gen_range(1u32..=50)))),
            )
            .unwrap();
    }
    profile
}

/// Annotations over a pool larger than the profile's, so some synsets have
/// no candidates and some gold frames are not in the profile.
fn random_annotations(rng: &mut ChaCha8Rng) -> Vec<Annotation> {
    let count = rng.gen_range(5..=30);
    (0..count)
        .map(|i| {
            Annotation::new(
                "doc",
                i * 10,
                i * 10 + 4,
                "w",
                synset_id(rng.gen_range(0..16)),
                frame_id(rng.gen_range(0..10)),
            )
            .unwrap()
        })
        .collect()
}

const VOCAB: &[&str] = &[
    "alder", "birch", "cedar", "dogwood", "elm", "fir", "ginkgo", "hazel", "juniper", "larch",
];

/// Unique-word pairs over the 10-word vocabulary.
fn random_pairs(rng: &mut ChaCha8Rng, integral: bool) -> Vec<(String, f64)> {
    let size = rng.gen_range(0..=VOCAB.len());
    let mut words: Vec<&str> = VOCAB.to_vec();
    words.shuffle(rng);
    let mut pairs: Vec<(String, f64)> = words[..size]
        .iter()
        .map(|w| {
            let weight = if integral {
                f64::from(rng.gen_range(1u32..=5))
            } else {
                f64::from(rng.gen_range(1u32..=300)) / 100.0
            };
            (w.to_string(), weight)
        })
        .collect();
    pairs.sort_by(|(a, _), (b, _)| a.cmp(b));
    pairs
}

/// Independent nested-loop evaluation of the weight formula over plain pair
/// lists, accumulated in ascending word order.
fn brute_force_weight(bz: &[(String, f64)], bbn: &[(String, f64)], bf: &[(String, f64)]) -> f64 {
    let mut words: Vec<&str> = bz
        .iter()
        .chain(bbn.iter())
        .chain(bf.iter())
        .map(|(w, _)| w.as_str())
        .collect();
    words.sort_unstable();
    words.dedup();
    let find =
        |pairs: &[(String, f64)], word: &str| pairs.iter().find(|(w, _)| w == word).map(|(_, c)| *c);
    let mut total = 0.0;
    for word in words {
        if find(bz, word).is_some() && (find(bbn, word).is_some() || find(bf, word).is_some()) {
            total += find(bz, word).unwrap()
                * (find(bf, word).unwrap_or(0.0) + find(bbn, word).unwrap_or(0.0));
        }
    }
    total
}

fn bag(pairs: &[(String, f64)]) -> BagOfWords {
    BagOfWords::from_pairs(pairs.iter().map(|(w, c)| (w.clone(), *c)))
}

fn run_scorer(profile: &Profile, annotations: &[Annotation], scorer: Scorer) -> EvalReport {
    let index = ProfileIndex::new(profile);
    let predictions: Vec<_> = annotations
        .iter()
        .map(|a| index.predict(a, scorer).unwrap())
        .collect();
    evaluate(&predictions, &index)
}

// ---------------------------------------------------------------------------
// criteria
// ---------------------------------------------------------------------------

/// Candidate frames of bn:00085007v on the transcribed excerpt are exactly
/// {Evidence, Telling, Communication}, in under a second.
#[test]
fn c01_candidate_frames_on_the_running_example() {
    let started = Instant::now();
    let index = ProfileIndex::new(&weighted_excerpt());
    let candidates = index.candidate_frames(&"bn:00085007v".parse().unwrap());
    let expected: BTreeSet<FrameId> = ["Communication", "Evidence", "Telling"]
        .iter()
        .map(|f| f.parse().unwrap())
        .collect();
    assert_eq!(candidates, expected);
    assert!(started.elapsed().as_secs_f64() < 1.0);
}

/// Closed-world scores on the excerpt weights: cond = (0.3095, 0.6000,
/// 0.4545) and inv = (0.1538, 0.1667, 0.1333) for (Evidence, Telling,
/// Communication), each within 1e-4; both scorers choose Telling.
#[test]
fn c02_cond_and_inv_scores_on_the_excerpt() {
    let index = ProfileIndex::new(&weighted_excerpt());
    let bs: SynsetId = "bn:00085007v".parse().unwrap();
    let expected = [
        ("Evidence", 0.3095, 0.1538),
        ("Telling", 0.6000, 0.1667),
        ("Communication", 0.4545, 0.1333),
    ];
    for (frame, cond, inv) in expected {
        let frame: FrameId = frame.parse().unwrap();
        assert!(
            (index.score_cond(&frame, &bs).unwrap() - cond).abs() <= 1e-4,
            "cond({frame})"
        );
        assert!(
            (index.score_inv(&frame, &bs).unwrap() - inv).abs() <= 1e-4,
            "inv({frame})"
        );
    }
    for scorer in [Scorer::Cond, Scorer::Inv] {
        let ranking = index.disambiguate(&bs, scorer, None).unwrap();
        assert_eq!(ranking.chosen().unwrap().as_str(), "Telling");
    }
}

/// The weight implementation is bit-identical to an independent brute-force
/// nested-loop oracle on 1,000 random bag triples over a 10-word
/// vocabulary, in under five seconds.
#[test]
fn c03_weight_formula_matches_the_brute_force_oracle() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for case in 0..1000 {
        let bz = random_pairs(&mut rng, false);
        let bbn = random_pairs(&mut rng, true);
        let bf = random_pairs(&mut rng, true);
        let implemented = compute_weight(&bag(&bz), &bag(&bbn), &bag(&bf));
        let reference = brute_force_weight(&bz, &bbn, &bf);
        assert_eq!(
            implemented.to_bits(),
            reference.to_bits(),
            "case {case}: {implemented} vs {reference}"
        );
    }
    assert!(started.elapsed().as_secs_f64() < 5.0);
}

/// Conditional scores of every frame sum to 1 within 1e-9, on 100 random
/// profiles.
#[test]
fn c04_cond_scores_normalize() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..100 {
        let profile = random_profile(&mut rng);
        let index = ProfileIndex::new(&profile);
        for (frame, entries) in profile.frames() {
            let sum: f64 = entries
                .iter()
                .map(|(s, _)| index.score_cond(frame, s).unwrap())
                .sum();
            assert!((sum - 1.0).abs() <= 1e-9, "frame {frame}: sum {sum}");
        }
    }
}

/// Scaling every profile weight by 0.5, 3 or 10 never changes any chosen
/// frame under either scorer.
#[test]
fn c05_argmax_is_invariant_under_weight_scaling() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for _ in 0..100 {
        let profile = random_profile(&mut rng);
        let index = ProfileIndex::new(&profile);
        for lambda in [0.5, 3.0, 10.0] {
            let mut scaled = Profile::new("scaled");
            for (frame, entries) in profile.frames() {
                scaled
                    .add_entries(
                        frame.clone(),
                        entries.iter().map(|(s, w)| (s.clone(), w * lambda)),
                    )
                    .unwrap();
            }
            let scaled_index = ProfileIndex::new(&scaled);
            for n in 0..16 {
                let bs = synset_id(n);
                for scorer in [Scorer::Cond, Scorer::Inv] {
                    assert_eq!(
                        index.disambiguate(&bs, scorer, None).unwrap().chosen(),
                        scaled_index.disambiguate(&bs, scorer, None).unwrap().chosen(),
                        "lambda={lambda}"
                    );
                }
            }
        }
    }
}

/// On 100 random (profile, annotation-set) fixtures the oracle's F1 is at
/// least that of both scorers, and its precision is exactly 1 whenever it
/// predicts.
#[test]
fn c06_oracle_dominates_both_scorers() {
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    for _ in 0..100 {
        let profile = random_profile(&mut rng);
        let annotations = random_annotations(&mut rng);
        let oracle = run_scorer(&profile, &annotations, Scorer::Oracle);
        if oracle.predicted > 0 {
            assert_eq!(oracle.precision, 1.0);
        }
        for scorer in [Scorer::Cond, Scorer::Inv] {
            let report = run_scorer(&profile, &annotations, scorer);
            assert!(
                oracle.f1 >= report.f1,
                "oracle {} < {:?} {}",
                oracle.f1,
                scorer,
                report.f1
            );
        }
    }
}

/// Enrichment preserves the frame → synset structure and floors every
/// weight at 1.0, on the running-example fixture and on random profiles
/// against a synthetic inventory.
#[test]
fn c07_enrichment_preserves_structure_and_floors() {
    let stop = StopwordSet::default_english();

    let check = |input: &Profile, output: &Profile| {
        assert_eq!(output.frame_count(), input.frame_count());
        for (frame, entries) in input.frames() {
            let enriched = output.entry(frame).unwrap();
            let before: BTreeSet<_> = entries.iter().map(|(s, _)| s).collect();
            let after: BTreeSet<_> = enriched.iter().map(|(s, _)| s).collect();
            assert_eq!(before, after, "frame {frame}");
            assert!(enriched.iter().all(|(_, w)| w.is_finite() && *w >= 1.0));
        }
    };

    // the running-example fixture
    let dir = fixtures();
    let profile = ingest::parse_profile(&dir.join("profile.tsv"), "fixture").unwrap();
    let inventory = ingest::parse_pcz(&dir.join("pcz.tsv")).unwrap();
    let synsets = ingest::parse_babelnet(&dir.join("babelnet.tsv")).unwrap();
    let frames = ingest::parse_frames(&dir.join("frames.tsv")).unwrap();
    let out = enrich(&profile, &inventory, &synsets, &frames, &stop, 1.0);
    check(&profile, &out.profile);

    // random profiles over a synthetic inventory covering part of the pool
    let mut rng = ChaCha8Rng::seed_from_u64(46);
    let synthetic_synsets: Vec<Synset> = (0..8u32)
        .map(|n| {
            Synset::new(
                synset_id(n),
                vec![VOCAB[n as usize].to_string()],
                vec![format!("{} {}", VOCAB[(n as usize + 1) % 10], VOCAB[(n as usize + 2) % 10])],
            )
            .unwrap()
        })
        .collect();
    let synthetic_senses: Vec<PczSense> = (0..8u32)
        .map(|n| {
            let related = vec![(
                PczSenseId::new(VOCAB[(n as usize + 1) % 10], "NN", 0).unwrap(),
                0.8,
            )];
            PczSense::new(
                PczSenseId::new(VOCAB[n as usize], "NN", n).unwrap(),
                Some(synset_id(n)),
                related,
                vec![],
            )
            .unwrap()
        })
        .collect();
    let synthetic_inventory = PczInventory::from_senses(synthetic_senses).unwrap();
    let synthetic_frames: Vec<Frame> = (0..6)
        .map(|n| Frame {
            id: frame_id(n),
            description: format!("{} {} {}", VOCAB[n % 10], VOCAB[(n + 3) % 10], VOCAB[(n + 5) % 10]),
        })
        .collect();
    for _ in 0..100 {
        let profile = random_profile(&mut rng);
        let out = enrich(
            &profile,
            &synthetic_inventory,
            &synthetic_synsets,
            &synthetic_frames,
            &stop,
            1.0,
        );
        check(&profile, &out.profile);
        assert_eq!(out.pairs, profile.pair_count());
    }
}

/// Writing then parsing returns the same profile, and re-serialization is
/// byte-identical, for 100 random profiles.
#[test]
fn c08_profile_serialization_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("profile.tsv");
    for _ in 0..100 {
        let mut profile = random_profile(&mut rng);
        profile.sort_entries_canonical();
        ingest::write_profile(&profile, &path).unwrap();
        let reparsed = ingest::parse_profile(&path, profile.name()).unwrap();
        assert_eq!(reparsed, profile);
        assert_eq!(render_profile(&reparsed), render_profile(&profile));
    }
}

/// The candidate-count histogram of the excerpt is {1: 3, 3: 1}, and its
/// counts always sum to the number of distinct synsets on random profiles.
#[test]
fn c09_polysemy_distribution() {
    let histogram = polysemy_distribution(&weighted_excerpt());
    assert_eq!(histogram, [(1, 3), (3, 1)].into_iter().collect());

    let mut rng = ChaCha8Rng::seed_from_u64(48);
    for _ in 0..100 {
        let profile = random_profile(&mut rng);
        let histogram = polysemy_distribution(&profile);
        let total: usize = histogram.values().sum();
        assert_eq!(total, profile.distinct_synsets().len());
    }
}

/// The four-annotation worked example scores P = 0.6667, R = 0.5000,
/// F1 = 0.5714 (within 1e-4) with errors {rankingError: 1, noCandidate: 1},
/// and correct + Σ errors = total holds on random fixtures.
#[test]
fn c10_evaluation_arithmetic() {
    let profile = weighted_excerpt();
    let annotations =
        ingest::parse_annotations(&fixtures().join("annotations.tsv")).unwrap();
    assert_eq!(annotations.len(), 4);
    let report = run_scorer(&profile, &annotations, Scorer::Inv);
    assert!((report.precision - 0.6667).abs() <= 1e-4);
    assert!((report.recall - 0.5000).abs() <= 1e-4);
    assert!((report.f1 - 0.5714).abs() <= 1e-4);
    assert_eq!(report.error_counts["rankingError"], 1);
    assert_eq!(report.error_counts["noCandidate"], 1);
    assert_eq!(report.error_counts["candidateMiss"], 0);

    let mut rng = ChaCha8Rng::seed_from_u64(49);
    for _ in 0..100 {
        let profile = random_profile(&mut rng);
        let annotations = random_annotations(&mut rng);
        for scorer in [Scorer::Cond, Scorer::Inv, Scorer::Oracle] {
            let report = run_scorer(&profile, &annotations, scorer);
            let errors: usize = report.error_counts.values().sum();
            assert_eq!(report.correct + errors, report.total);
        }
    }
}

/// Two consecutive runs of enrich → wfd → eval on the fixture produce
/// byte-identical outputs.
#[test]
fn c11_cli_pipeline_is_deterministic() {
    let fixtures = fixtures();
    let run_pipeline = |dir: &std::path::Path| -> (Vec<u8>, Vec<u8>, Vec<u8>) {
        let enriched = dir.join("enriched.tsv");
        let predictions = dir.join("predictions.tsv");
        let report = dir.join("report.txt");
        let run = |args: &[&str]| {
            let output = Command::new(env!("CARGO_BIN_EXE_wfdkit"))
                .current_dir(&fixtures)
                .args(args)
                .output()
                .expect("failed to spawn wfdkit");
            assert!(
                output.status.success(),
                "{args:?}: {}",
                String::from_utf8_lossy(&output.stderr)
            );
        };
        run(&[
            "enrich",
            "--profile",
            "profile.tsv",
            "--pcz",
            "pcz.tsv",
            "--babelnet",
            "babelnet.tsv",
            "--frames",
            "frames.tsv",
            "--output",
            enriched.to_str().unwrap(),
        ]);
        run(&[
            "wfd",
            "--profile",
            enriched.to_str().unwrap(),
            "--annotations",
            "annotations.tsv",
            "--scorer",
            "inv",
            "--output",
            predictions.to_str().unwrap(),
        ]);
        run(&[
            "eval",
            "--predictions",
            predictions.to_str().unwrap(),
            "--profile",
            enriched.to_str().unwrap(),
            "--output",
            report.to_str().unwrap(),
        ]);
        (
            fs::read(&enriched).unwrap(),
            fs::read(&predictions).unwrap(),
            fs::read(&report).unwrap(),
        )
    };

    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    let first = run_pipeline(dir_a.path());
    let second = run_pipeline(dir_b.path());
    assert_eq!(first, second);
    assert!(!first.0.is_empty() && !first.1.is_empty() && !first.2.is_empty());
}
