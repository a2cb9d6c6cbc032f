//! Spectral-gap laboratory for connected quartic graphs: the block-built
//! family of minimal quartic graphs, their Laplacian spectra and Fiedler
//! structure, replacement arguments, exact root checks, and exhaustive
//! certification at small orders.

pub mod blocks;
pub mod certify;
pub mod cli;
pub mod graph;
pub mod polyroots;
pub mod replace;
pub mod spectra;
pub mod structure;
