//! Weakly-supervised temporal action localization with learned
//! segment-affinity graph convolutions.
//!
//! A video is a sequence of fixed-duration time segments, each represented by
//! a precomputed feature vector. Training sees only video-level action labels.
//! The model learns an affine segment embedding whose pairwise cosine
//! similarities define a per-video graph; a graph convolution mixes segment
//! features along strong edges before per-segment classification. Detections
//! come from thresholding the per-segment class scores and merging runs;
//! evaluation reports mAP@IoU, video classification mAP, and per-frame mAP.
//!
//! The numeric core ([`matrix`], [`tape`], [`adam`]) is generic over the
//! scalar type; the pipeline itself runs at `f64` via the aliases below.

pub mod adam;
pub mod checkpoint;
pub mod data;
pub mod error;
pub mod evaluate;
pub mod gradcheck;
pub mod graph;
pub mod localize;
pub mod losses;
pub mod matrix;
pub mod model;
pub mod scalar;
pub mod tape;
pub mod timeline;
pub mod trainer;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::Scalar;

/// Scalar type used by the training/evaluation pipeline.
pub type Real = f64;

/// Dense matrix at pipeline precision.
pub type Mat = Matrix<Real>;

/// Single-precision matrix, the storage precision of feature files.
pub type Mat32 = Matrix<f32>;

/// Reverse-mode tape at pipeline precision.
pub type Tape = tape::Tape<Real>;
