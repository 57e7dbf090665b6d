//! Named exchange matrices used by the test suites and the CLI.

use crate::error::{Error, Result};
use crate::matrices::ExchangeMatrix;

pub const NAMES: [&str; 8] = ["a2", "a3", "b2", "g2", "markov", "atilde21", "atilde31", "dtilde4"];

/// Exchange matrix of a named preset.
///
/// * `a2`, `a3`: linearly oriented type A quivers.
/// * `b2`, `g2`: rank-two finite types `[[0,1],[-2,0]]`, `[[0,1],[-3,0]]`.
/// * `markov`: the once-punctured torus, all off-diagonal entries `±2`.
/// * `atilde21`: annulus with two and one marked points (1→2→3, 1→3).
/// * `atilde31`: annulus with three and one marked points (1→2→3→4, 1→4).
/// * `dtilde4`: star with centre 1 as a source to 2, 3, 4, 5.
pub fn preset(name: &str) -> Result<ExchangeMatrix> {
    let b = match name.to_ascii_lowercase().as_str() {
        "a2" => ExchangeMatrix::from_rows(&[[0, 1], [-1, 0]]),
        "a3" => ExchangeMatrix::from_rows(&[[0, 1, 0], [-1, 0, 1], [0, -1, 0]]),
        "b2" => ExchangeMatrix::from_rows(&[[0, 1], [-2, 0]]),
        "g2" => ExchangeMatrix::from_rows(&[[0, 1], [-3, 0]]),
        "markov" => ExchangeMatrix::from_rows(&[[0, 2, -2], [-2, 0, 2], [2, -2, 0]]),
        "atilde21" => ExchangeMatrix::from_rows(&[[0, 1, 1], [-1, 0, 1], [-1, -1, 0]]),
        "atilde31" => ExchangeMatrix::from_rows(&[
            [0, 1, 0, 1],
            [-1, 0, 1, 0],
            [0, -1, 0, 1],
            [-1, 0, -1, 0],
        ]),
        "dtilde4" => ExchangeMatrix::from_rows(&[
            [0, 1, 1, 1, 1],
            [-1, 0, 0, 0, 0],
            [-1, 0, 0, 0, 0],
            [-1, 0, 0, 0, 0],
            [-1, 0, 0, 0, 0],
        ]),
        _ => return Err(Error::Parse(format!("unknown preset {name:?}"))),
    };
    Ok(b.expect("presets are skew-symmetrizable"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_presets_build() {
        for name in NAMES {
            assert!(preset(name).is_ok(), "{name}");
        }
        assert!(preset("e8").is_err());
        assert_eq!(preset("b2").unwrap().symmetrizer(), &[2, 1]);
        assert_eq!(preset("g2").unwrap().symmetrizer(), &[3, 1]);
    }
}
