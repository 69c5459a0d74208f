//! Channel JSON serialization.
//!
//! Format: `{"label", "d_in", "d_out", "kraus"}` where `kraus` is a list of
//! row-major matrices and each entry is a two-element `[re, im]` array.
//! Loading validates CPTP at 1e−8 and rejects files with a diagnostic naming
//! the violated invariant.

use serde::{Deserialize, Serialize};
use std::path::Path;

use super::channel::Channel;
use crate::error::{Error, Result};
use crate::matcore::matrix::CMatrix;
use num_complex::Complex64;

#[derive(Debug, Serialize, Deserialize)]
struct ChannelFile {
    label: String,
    d_in: usize,
    d_out: usize,
    kraus: Vec<Vec<Vec<[f64; 2]>>>,
}

pub fn channel_to_json(channel: &Channel) -> String {
    let kraus = channel
        .kraus()
        .iter()
        .map(|k| {
            (0..k.nrows())
                .map(|r| (0..k.ncols()).map(|c| [k[(r, c)].re, k[(r, c)].im]).collect())
                .collect()
        })
        .collect();
    let file = ChannelFile {
        label: channel.label().to_string(),
        d_in: channel.d_in(),
        d_out: channel.d_out(),
        kraus,
    };
    serde_json::to_string_pretty(&file).expect("channel file serialization cannot fail")
}

pub fn channel_from_json(text: &str) -> Result<Channel> {
    let file: ChannelFile = serde_json::from_str(text)?;
    if file.kraus.is_empty() {
        return Err(Error::InvalidChannel("channel file has an empty Kraus list".into()));
    }
    let mut kraus = Vec::with_capacity(file.kraus.len());
    for (idx, rows) in file.kraus.iter().enumerate() {
        if rows.len() != file.d_out || rows.iter().any(|r| r.len() != file.d_in) {
            return Err(Error::InvalidChannel(format!(
                "Kraus operator {idx} does not match the declared {}x{} shape",
                file.d_out, file.d_in
            )));
        }
        kraus.push(CMatrix::from_fn(file.d_out, file.d_in, |r, c| {
            Complex64::new(rows[r][c][0], rows[r][c][1])
        }));
    }
    Channel::new(kraus, file.label)
}

pub fn save_channel(channel: &Channel, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, channel_to_json(channel))?;
    Ok(())
}

pub fn load_channel(path: impl AsRef<Path>) -> Result<Channel> {
    let text = std::fs::read_to_string(&path)?;
    channel_from_json(&text).map_err(|e| match e {
        Error::InvalidChannel(msg) => Error::InvalidChannel(format!(
            "{}: {msg}",
            path.as_ref().display()
        )),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::constructors::{random_channel, werner_holevo};

    #[test]
    fn round_trip_preserves_the_map() {
        let t = random_channel(2, 3, 2, 5).unwrap();
        let back = channel_from_json(&channel_to_json(&t)).unwrap();
        assert!(t.choi().max_abs_diff(&back.choi()) < 1e-12);
        assert_eq!(back.label(), t.label());
    }

    #[test]
    fn rejects_non_trace_preserving_file() {
        let t = werner_holevo(3);
        let mut text = channel_to_json(&t);
        // Double one entry; the Kraus sum no longer resolves the identity.
        text = text.replacen("0.7071067811865475", "1.4", 1);
        let err = channel_from_json(&text).unwrap_err();
        let msg = format!("{err}");
        assert!(msg.contains("trace preservation"), "diagnostic was: {msg}");
    }

    #[test]
    fn rejects_malformed_json_and_shape_mismatch() {
        assert!(channel_from_json("{not json").is_err());
        let bad_shape = r#"{"label":"x","d_in":2,"d_out":2,"kraus":[[[[1.0,0.0]]]]}"#;
        let err = channel_from_json(bad_shape).unwrap_err();
        assert!(format!("{err}").contains("shape"));
    }
}
