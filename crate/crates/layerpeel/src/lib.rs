//! Layer-wise vector graphics peeling.
//!
//! The pipeline decomposes a flat-color image into an ordered stack of
//! vector layers by repeatedly identifying the topmost non-occluded
//! regions, removing them, vectorizing the removed content, and feeding
//! the result back as the next source image. The crate provides:
//!
//! - an SVG 1.1 subset parser/normalizer/emitter ([`svg`]),
//! - deterministic hard-edged rasterization and raster diffing ([`raster`]),
//! - ground-truth occlusion analysis over layered geometry ([`occlusion`]),
//! - the layer-graph representation used to describe occlusion to
//!   vision-language backends ([`graph`]),
//! - joint attention mask planning for region-constrained editing
//!   ([`attention`]),
//! - raster-to-vector contour tracing and layered SVG assembly
//!   ([`vectorize`]),
//! - the autoregressive peel loop with pluggable annotator/remover
//!   backends and deterministic oracle backends ([`peel`]),
//! - training-triplet dataset construction ([`dataset`]),
//! - evaluation metrics ([`metrics`]),
//! - wire protocols and prompt templates for remote model services
//!   ([`gateway`]).
//!
//! Batch-level operations use rayon when the default `parallel` feature
//! is enabled and fall back to sequential iteration otherwise.

pub mod attention;
pub mod caption;
pub mod color;
pub mod dataset;
pub mod exec;
pub mod gateway;
pub mod geom;
pub mod graph;
pub mod mask;
pub mod metrics;
pub mod occlusion;
pub mod peel;
pub mod raster;
pub mod svg;
pub mod synth;
pub mod vectorize;

pub use color::ColorRgba;
pub use mask::BitMask;
pub use raster::RasterImage;
pub use svg::{PathShape, SvgDoc, ViewBox};
