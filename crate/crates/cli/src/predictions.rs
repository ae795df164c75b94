//! The prediction file format written by `wfd` and read by `eval`: one
//! tab-separated line per annotation with docId, start, end, synsetId,
//! goldFrame, the chosen frame or `-`, and the top score or `-`.

use std::fs;
use std::path::Path;

use wfdkit::ingest::{IngestError, ParseError};
use wfdkit::model::{Annotation, FrameId, ModelError, Prediction, SynsetId};

/// Shortest decimal that round-trips to the same float.
pub fn format_score(score: f64) -> String {
    format!("{score}")
}

pub fn render_predictions(predictions: &[Prediction]) -> String {
    let mut out = String::new();
    for prediction in predictions {
        let annotation = prediction.annotation();
        let chosen = prediction
            .chosen()
            .map_or_else(|| "-".to_string(), ToString::to_string);
        let score = prediction
            .top_score()
            .map_or_else(|| "-".to_string(), format_score);
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            annotation.doc_id(),
            annotation.start(),
            annotation.end(),
            annotation.synset(),
            annotation.gold_frame(),
            chosen,
            score,
        ));
    }
    out
}

/// Reads a prediction file back. The lemma column is not part of the format,
/// so reconstructed annotations carry an empty lemma.
pub fn parse_predictions(path: &Path) -> Result<Vec<Prediction>, IngestError> {
    let content = fs::read_to_string(path).map_err(|cause| IngestError::Io {
        path: path.display().to_string(),
        cause,
    })?;
    let mut predictions = Vec::new();
    for (line_no, line) in content
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
    {
        let err = |message: String| ParseError {
            path: path.display().to_string(),
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 7 {
            return Err(err(format!(
                "expected 7 tab-separated columns, found {}",
                fields.len()
            ))
            .into());
        }
        let start: usize = fields[1]
            .parse()
            .map_err(|_| err(format!("non-integer start offset `{}`", fields[1])))?;
        let end: usize = fields[2]
            .parse()
            .map_err(|_| err(format!("non-integer end offset `{}`", fields[2])))?;
        let synset: SynsetId = fields[3]
            .parse()
            .map_err(|e: ModelError| err(e.to_string()))?;
        let gold: FrameId = fields[4]
            .parse()
            .map_err(|e: ModelError| err(e.to_string()))?;
        let annotation = Annotation::new(fields[0], start, end, "", synset, gold)
            .map_err(|e| err(e.to_string()))?;

        let ranked = match (fields[5], fields[6]) {
            ("-", "-") => Vec::new(),
            ("-", _) | (_, "-") => {
                return Err(err(
                    "chosen frame and top score must both be `-` or both be present".to_string(),
                )
                .into())
            }
            (chosen, score) => {
                let chosen: FrameId =
                    chosen.parse().map_err(|e: ModelError| err(e.to_string()))?;
                let score: f64 = score
                    .parse()
                    .map_err(|_| err(format!("non-numeric score `{score}`")))?;
                vec![(chosen, score)]
            }
        };
        let prediction =
            Prediction::new(annotation, ranked).map_err(|e| err(e.to_string()))?;
        predictions.push(prediction);
    }
    Ok(predictions)
}
