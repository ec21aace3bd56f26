//! Shared inputs for the criterion benchmarks.

use qaffine_core::affine_base::{AffineType, Family};

/// One representative per family, small enough to build quickly.
pub fn representatives() -> Vec<AffineType> {
    let ranked = [
        (Family::A1, 4),
        (Family::B1, 3),
        (Family::C1, 3),
        (Family::D1, 5),
        (Family::A2_even, 2),
        (Family::A2_odd, 3),
        (Family::D2, 4),
    ];
    let mut out: Vec<AffineType> = ranked
        .iter()
        .map(|&(f, n)| AffineType::new(f, n).unwrap())
        .collect();
    for f in [
        Family::E6_1,
        Family::E7_1,
        Family::E8_1,
        Family::F4_1,
        Family::G2_1,
        Family::E6_2,
        Family::D4_3,
    ] {
        out.push(AffineType::exceptional(f));
    }
    out
}
