//! Seeded synthetic resource generators for benchmarking: profiles, sense
//! inventories, synsets with glosses, and annotation sets of configurable
//! size, all over a shared pseudo-word vocabulary.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use wfdkit::model::{
    Annotation, Frame, FrameId, PczInventory, PczSense, PczSenseId, Profile, Synset, SynsetId,
};

/// Shape of a generated workload.
#[derive(Debug, Clone, Copy)]
pub struct WorkloadSpec {
    pub frames: usize,
    pub synsets_per_frame: usize,
    pub synset_pool: usize,
    pub vocabulary: usize,
    pub annotations: usize,
    pub seed: u64,
}

impl Default for WorkloadSpec {
    fn default() -> Self {
        WorkloadSpec {
            frames: 100,
            synsets_per_frame: 25,
            synset_pool: 600,
            vocabulary: 800,
            annotations: 2000,
            seed: 7,
        }
    }
}

pub struct Workload {
    pub profile: Profile,
    pub inventory: PczInventory,
    pub synsets: Vec<Synset>,
    pub frames: Vec<Frame>,
    pub annotations: Vec<Annotation>,
}

fn word(n: usize) -> String {
    format!("word{n:04}")
}

fn synset_id(n: usize) -> SynsetId {
    format!("bn:{n:08}n").parse().unwrap()
}

fn frame_id(n: usize) -> FrameId {
    format!("Frame_{n:04}").parse().unwrap()
}

pub fn generate(spec: WorkloadSpec) -> Workload {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let pick_words = |rng: &mut ChaCha8Rng, count: usize| -> Vec<String> {
        (0..count).map(|_| word(rng.gen_range(0..spec.vocabulary))).collect()
    };

    let mut profile = Profile::new("synthetic");
    for f in 0..spec.frames {
        let mut pool: Vec<usize> = (0..spec.synset_pool).collect();
        pool.shuffle(&mut rng);
        profile
            .add_entries(
                frame_id(f),
                pool[..spec.synsets_per_frame]
                    .iter()
                    .map(|s| (synset_id(*s), f64::from(rng.gen_range(1u32..=50)))),
            )
            .expect("pool indices are unique");
    }

    let synsets: Vec<Synset> = (0..spec.synset_pool)
        .map(|n| {
            let sense_count = rng.gen_range(1..=3);
            let senses = pick_words(&mut rng, sense_count);
            let senses = senses
                .into_iter()
                .enumerate()
                .map(|(i, w)| format!("{w}_{i}"))
                .collect();
            let glosses = vec![pick_words(&mut rng, 12).join(" ")];
            Synset::new(synset_id(n), senses, glosses).expect("suffixed senses are unique")
        })
        .collect();

    let senses: Vec<PczSense> = (0..spec.synset_pool)
        .map(|n| {
            let head = PczSenseId::new(&word(rng.gen_range(0..spec.vocabulary)), "NN", n as u32)
                .unwrap();
            let related: Vec<(PczSenseId, f64)> = (0..rng.gen_range(3..=8))
                .map(|i| {
                    let id = PczSenseId::new(
                        &word(rng.gen_range(0..spec.vocabulary)),
                        "VB",
                        (n * 100 + i) as u32,
                    )
                    .unwrap();
                    (id, f64::from(rng.gen_range(1u32..=10)) / 10.0)
                })
                .collect();
            PczSense::new(head, Some(synset_id(n)), related, vec![])
                .expect("indices make related ids unique")
        })
        .collect();
    let inventory = PczInventory::from_senses(senses).expect("one sense per synset");

    let frames: Vec<Frame> = (0..spec.frames)
        .map(|n| Frame {
            id: frame_id(n),
            description: pick_words(&mut rng, 20).join(" "),
        })
        .collect();

    let annotations: Vec<Annotation> = (0..spec.annotations)
        .map(|i| {
            Annotation::new(
                format!("doc{}", i % 40),
                i * 10,
                i * 10 + 5,
                word(rng.gen_range(0..spec.vocabulary)),
                synset_id(rng.gen_range(0..spec.synset_pool + 50)),
                frame_id(rng.gen_range(0..spec.frames)),
            )
            .unwrap()
        })
        .collect();

    Workload {
        profile,
        inventory,
        synsets,
        frames,
        annotations,
    }
}
