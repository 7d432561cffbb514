//! `SSDC` container layout, all integers little-endian:
//!
//! | offset | size | field          |
//! |--------|------|----------------|
//! | 0      | 4    | magic `SSDC`   |
//! | 4      | 1    | version (1)    |
//! | 5      | 1    | model id       |
//! | 6      | 4    | alphabet size  |
//! | 10     | 8    | symbol count   |
//! | 18     | ..   | payload        |

use super::CoderError;
use crate::estimators::ModelKind;

pub const MAGIC: [u8; 4] = *b"SSDC";
pub const VERSION: u8 = 1;
pub const HEADER_LEN: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompressedContainer {
    pub model: ModelKind,
    pub alphabet_size: u32,
    pub length: u64,
    pub payload: Vec<u8>,
}

impl CompressedContainer {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(HEADER_LEN + self.payload.len());
        out.extend_from_slice(&MAGIC);
        out.push(VERSION);
        out.push(self.model.id());
        out.extend_from_slice(&self.alphabet_size.to_le_bytes());
        out.extend_from_slice(&self.length.to_le_bytes());
        out.extend_from_slice(&self.payload);
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, CoderError> {
        if bytes.len() < 4 || bytes[..4] != MAGIC {
            return Err(if bytes.len() < 4 && MAGIC.starts_with(bytes) {
                CoderError::Truncated
            } else {
                CoderError::BadMagic
            });
        }
        if bytes.len() < HEADER_LEN {
            return Err(CoderError::Truncated);
        }
        if bytes[4] != VERSION {
            return Err(CoderError::UnsupportedVersion(bytes[4]));
        }
        let model = ModelKind::from_id(bytes[5]).ok_or(CoderError::UnknownModel(bytes[5]))?;
        let alphabet_size = u32::from_le_bytes(bytes[6..10].try_into().unwrap());
        let length = u64::from_le_bytes(bytes[10..18].try_into().unwrap());
        Ok(CompressedContainer {
            model,
            alphabet_size,
            length,
            payload: bytes[HEADER_LEN..].to_vec(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> CompressedContainer {
        CompressedContainer {
            model: ModelKind::Ssa,
            alphabet_size: 256,
            length: 0x0102_0304_0506,
            payload: vec![9, 8, 7],
        }
    }

    #[test]
    fn exact_layout() {
        let bytes = sample().to_bytes();
        assert_eq!(
            bytes,
            vec![
                b'S', b'S', b'D', b'C', 1, 2, 0, 1, 0, 0, 6, 5, 4, 3, 2, 1, 0, 0, 9, 8, 7
            ]
        );
        assert_eq!(CompressedContainer::from_bytes(&bytes).unwrap(), sample());
    }

    #[test]
    fn header_errors() {
        let good = sample().to_bytes();
        let mut bad = good.clone();
        bad[..4].copy_from_slice(b"XXXX");
        assert_eq!(CompressedContainer::from_bytes(&bad), Err(CoderError::BadMagic));
        let mut bad = good.clone();
        bad[4] = 2;
        assert_eq!(CompressedContainer::from_bytes(&bad), Err(CoderError::UnsupportedVersion(2)));
        let mut bad = good.clone();
        bad[5] = 7;
        assert_eq!(CompressedContainer::from_bytes(&bad), Err(CoderError::UnknownModel(7)));
        assert_eq!(CompressedContainer::from_bytes(&good[..10]), Err(CoderError::Truncated));
        assert_eq!(CompressedContainer::from_bytes(b"SS"), Err(CoderError::Truncated));
        assert_eq!(CompressedContainer::from_bytes(b""), Err(CoderError::Truncated));
    }
}
