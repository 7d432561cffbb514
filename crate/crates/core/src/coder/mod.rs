//! Arithmetic coding of symbol sequences under any [`SequentialModel`].
//!
//! At every step the model's conditional distribution is quantized to a
//! [`QuantizedCdf`] with total [`PRECISION_TOTAL`] and fed to a 64-bit range
//! coder. Encoder and decoder run identical model states, so the decoder
//! reconstructs the same CDFs. The payload costs at most
//! `-log2 p_q(x) + 64` bits, where `p_q` is the product of quantized
//! conditionals and the 64 bits are the flush.

mod container;
mod quantize;
mod range;

use thiserror::Error;

pub use container::{CompressedContainer, HEADER_LEN, MAGIC, VERSION};
pub use quantize::{quantize, quantize_linear, QuantizedCdf, MAX_ALPHABET};
pub use range::{RangeDecoder, RangeEncoder};

use crate::estimators::{
    check_symbol, AnyModel, ModelError, ModelKind, SdcState, SequentialModel, SsaState, SsdState,
    Symbol,
};

pub const PRECISION_BITS: u32 = 16;
pub const PRECISION_TOTAL: u32 = 1 << PRECISION_BITS;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoderError {
    #[error("alphabet of {size} symbols exceeds the coder limit of {max}")]
    AlphabetTooLarge { size: usize, max: usize },

    #[error("cannot quantize distribution: {0}")]
    BadDistribution(String),

    #[error("not an SSDC container (bad magic)")]
    BadMagic,

    #[error("unsupported container version {0}")]
    UnsupportedVersion(u8),

    #[error("unknown model id {0}")]
    UnknownModel(u8),

    #[error("container is truncated")]
    Truncated,

    #[error("payload has {0} trailing bytes")]
    TrailingBytes(usize),

    #[error(
        "container was written by {expected:?} over {expected_alphabet} symbols, \
         decoder model is {found:?} over {found_alphabet}"
    )]
    ModelMismatch {
        expected: ModelKind,
        expected_alphabet: u64,
        found: ModelKind,
        found_alphabet: u64,
    },

    #[error("model has already consumed {0} symbols")]
    ModelNotFresh(u64),

    #[error(transparent)]
    Model(#[from] ModelError),
}

/// A model that can be identified in a container header.
pub trait ContainerModel: SequentialModel {
    fn model_kind(&self) -> ModelKind;
}

impl ContainerModel for SdcState {
    fn model_kind(&self) -> ModelKind {
        ModelKind::Sdc
    }
}

impl ContainerModel for SsdState {
    fn model_kind(&self) -> ModelKind {
        ModelKind::Ssd
    }
}

impl ContainerModel for SsaState {
    fn model_kind(&self) -> ModelKind {
        ModelKind::Ssa
    }
}

impl ContainerModel for AnyModel {
    fn model_kind(&self) -> ModelKind {
        self.kind()
    }
}

/// Range-codes `seq`, advancing `model` past it. An empty sequence yields an
/// empty payload.
pub fn encode_payload<M: SequentialModel + ?Sized>(
    model: &mut M,
    seq: &[Symbol],
) -> Result<Vec<u8>, CoderError> {
    if seq.is_empty() {
        return Ok(Vec::new());
    }
    let x = model.alphabet_size();
    let mut enc = RangeEncoder::new();
    let mut dist = Vec::with_capacity(x);
    for &s in seq {
        check_symbol(s, x)?;
        model.distribution_into(&mut dist);
        let cdf = quantize_linear(&dist)?;
        enc.encode_symbol(&cdf, s);
        model.update(s)?;
    }
    Ok(enc.finish())
}

/// Decodes `length` symbols from `payload`, advancing `model` in step with
/// the encoder.
pub fn decode_payload<M: SequentialModel + ?Sized>(
    model: &mut M,
    payload: &[u8],
    length: u64,
) -> Result<Vec<Symbol>, CoderError> {
    if length == 0 {
        return match payload.len() {
            0 => Ok(Vec::new()),
            extra => Err(CoderError::TrailingBytes(extra)),
        };
    }
    let mut dec = RangeDecoder::new(payload)?;
    // a corrupt header must not trigger a huge allocation
    let mut out = Vec::with_capacity(length.min(1 << 20) as usize);
    let mut dist = Vec::with_capacity(model.alphabet_size());
    for _ in 0..length {
        model.distribution_into(&mut dist);
        let cdf = quantize_linear(&dist)?;
        let s = dec.decode(&cdf)?;
        model.update(s)?;
        out.push(s);
    }
    dec.finish()?;
    Ok(out)
}

/// Compresses `seq` with a fresh `model` into a container.
pub fn encode_sequence<M: ContainerModel + ?Sized>(
    model: &mut M,
    seq: &[Symbol],
) -> Result<CompressedContainer, CoderError> {
    if model.observed() != 0 {
        return Err(CoderError::ModelNotFresh(model.observed()));
    }
    let alphabet_size = u32::try_from(model.alphabet_size()).map_err(|_| {
        CoderError::AlphabetTooLarge {
            size: model.alphabet_size(),
            max: MAX_ALPHABET,
        }
    })?;
    let payload = encode_payload(model, seq)?;
    Ok(CompressedContainer {
        model: model.model_kind(),
        alphabet_size,
        length: seq.len() as u64,
        payload,
    })
}

/// Decompresses a container with a fresh `model` of the kind and alphabet
/// recorded in its header.
pub fn decode_sequence<M: ContainerModel + ?Sized>(
    container: &CompressedContainer,
    model: &mut M,
) -> Result<Vec<Symbol>, CoderError> {
    if model.model_kind() != container.model
        || model.alphabet_size() as u64 != container.alphabet_size as u64
    {
        return Err(CoderError::ModelMismatch {
            expected: container.model,
            expected_alphabet: container.alphabet_size as u64,
            found: model.model_kind(),
            found_alphabet: model.alphabet_size() as u64,
        });
    }
    if model.observed() != 0 {
        return Err(CoderError::ModelNotFresh(model.observed()));
    }
    decode_payload(model, &container.payload, container.length)
}

/// Parses and decodes a serialized container, building the model its header
/// names.
pub fn decode_bytes(bytes: &[u8]) -> Result<Vec<Symbol>, CoderError> {
    let container = CompressedContainer::from_bytes(bytes)?;
    let x = container.alphabet_size as usize;
    if x > MAX_ALPHABET {
        return Err(CoderError::AlphabetTooLarge {
            size: x,
            max: MAX_ALPHABET,
        });
    }
    let mut model = AnyModel::new(container.model, x)?;
    decode_sequence(&container, &mut model)
}
