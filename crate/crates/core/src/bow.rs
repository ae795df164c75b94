//! Content-word extraction and the three bag-of-words representations used
//! by profile enrichment: synset bags (senses + glosses), inventory bags
//! (senses linked to a synset plus their related senses) and frame bags
//! (frame descriptions).

use std::collections::BTreeSet;

use crate::model::{BagOfWords, Frame, ModelError, PczInventory, Synset, SynsetId};

/// Built-in English function words: articles, prepositions, conjunctions,
/// pronouns, auxiliaries and a few particles.
pub const DEFAULT_STOPWORDS: &[&str] = &[
    "a", "about", "above", "across", "after", "again", "against", "all", "along", "also",
    "although", "am", "among", "an", "and", "any", "are", "around", "as", "at", "be", "because",
    "been", "before", "behind", "being", "below", "beside", "between", "beyond", "both", "but",
    "by", "can", "could", "did", "do", "does", "doing", "down", "during", "each", "except", "few",
    "for", "from", "had", "has", "have", "having", "he", "her", "hers", "herself", "him",
    "himself", "his", "how", "i", "if", "in", "inside", "into", "is", "it", "its", "itself",
    "just", "many", "may", "me", "might", "mine", "more", "most", "much", "must", "my", "myself",
    "near", "no", "nor", "not", "of", "off", "on", "once", "only", "onto", "or", "our", "ours",
    "out", "outside", "over", "past", "shall", "she", "should", "since", "so", "some", "such",
    "than", "that", "the", "their", "theirs", "them", "themselves", "then", "there", "these",
    "they", "this", "those", "through", "till", "to", "too", "toward", "under", "until", "up",
    "upon", "us", "very", "was", "we", "were", "what", "when", "where", "whether", "which",
    "while", "who", "whom", "whose", "why", "will", "with", "within", "without", "would", "yet",
    "you", "your", "yours",
];

/// A lowercase stopword list applied during tokenization.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct StopwordSet {
    words: BTreeSet<String>,
}

impl StopwordSet {
    /// An empty set: no words are filtered.
    pub fn empty() -> Self {
        Self::default()
    }

    /// The built-in [`DEFAULT_STOPWORDS`] list.
    pub fn default_english() -> Self {
        Self::from_words(DEFAULT_STOPWORDS.iter().copied())
            .expect("built-in stopword list is valid")
    }

    /// Builds a set from arbitrary words, lowercasing each entry. Entries
    /// with internal whitespace are rejected.
    pub fn from_words<S: AsRef<str>>(
        words: impl IntoIterator<Item = S>,
    ) -> Result<Self, ModelError> {
        let mut set = BTreeSet::new();
        for word in words {
            let word = word.as_ref();
            if word.is_empty() || word.chars().any(char::is_whitespace) {
                return Err(ModelError::BadStopword(word.to_string()));
            }
            set.insert(word.to_lowercase());
        }
        Ok(StopwordSet { words: set })
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Splits `text` into content words: lowercased, split on every
/// non-alphanumeric character, tokens shorter than 2 characters and
/// stopwords dropped. Order and duplicates are preserved.
pub fn tokenize(text: &str, stop: &StopwordSet) -> Vec<String> {
    text.to_lowercase()
        .split(|c: char| !c.is_alphanumeric())
        .filter(|token| token.chars().count() >= 2 && !stop.contains(token))
        .map(str::to_string)
        .collect()
}

/// B_bn: occurrence counts of the content words in a synset's sense lemmas
/// and glosses. Multiword lemmas are tokenized like any other text.
pub fn bow_synset(synset: &Synset, stop: &StopwordSet) -> BagOfWords {
    let mut bag = BagOfWords::new();
    for sense in synset.senses() {
        for token in tokenize(sense, stop) {
            bag.add(token, 1.0);
        }
    }
    for gloss in synset.glosses() {
        for token in tokenize(gloss, stop) {
            bag.add(token, 1.0);
        }
    }
    bag
}

/// B_z: accumulated weights of the content words of every inventory sense
/// linked to `synset` and of their related senses.
///
/// Each linked sense contributes 1.0 per token of its word field; each
/// related sense contributes its similarity weight per token. Contributions
/// from different senses sum. POS tags and sense indices are not tokens.
pub fn bow_pcz(inventory: &PczInventory, synset: &SynsetId, stop: &StopwordSet) -> BagOfWords {
    let mut bag = BagOfWords::new();
    for sense in inventory.senses_for(synset) {
        for token in tokenize(sense.id().word(), stop) {
            bag.add(token, 1.0);
        }
        for (related, weight) in sense.related() {
            for token in tokenize(related.word(), stop) {
                bag.add(token, *weight);
            }
        }
    }
    bag
}

/// B_f: occurrence counts of the content words in a frame's description.
pub fn bow_frame(frame: &Frame, stop: &StopwordSet) -> BagOfWords {
    let mut bag = BagOfWords::new();
    for token in tokenize(&frame.description, stop) {
        bag.add(token, 1.0);
    }
    bag
}
