//! Published reference values used by the verification suites.

use crate::combinat::SnModule;

/// `dim Jord(x, y)_n` for `n = 1..=20` (reversible elements of the free
/// associative algebra on two letters).
pub const TWO_GENERATOR_DIMS: [u64; 20] = [
    2, 3, 6, 10, 20, 36, 72, 136, 272, 528, 1056, 2080, 4160, 8256, 16512, 32896, 65792, 131328,
    262656, 524800,
];

/// `dim B(Jord(x, y))_n` for `n = 1..=20`.
pub const TWO_GENERATOR_B_DIMS: [u64; 20] = [
    0, 1, 2, 6, 12, 27, 54, 114, 226, 466, 930, 1888, 3780, 7633, 15288, 30774, 61680, 123899,
    248346, 498300,
];

/// Predicted values that differ from the true ones: `(n, a-dimension)` and `(n, b-dimension)`.
pub const TWO_GENERATOR_PREDICTED_A19: u64 = 262658;
pub const TWO_GENERATOR_PREDICTED_B20: u64 = 498303;

/// `dim Jord(n)` for `n = 1..=10`.
pub const MULTILINEAR_DIMS: [u64; 10] = [1, 1, 3, 11, 55, 330, 2345, 19089, 175203, 1785840];

/// Multigraded dimensions of the free Jordan algebra on three generators.
pub const THREE_GENERATOR_MULTIDEGREES: [([usize; 3], u64); 22] = [
    ([9, 1, 1], 55),
    ([8, 2, 1], 250),
    ([7, 3, 1], 660),
    ([6, 4, 1], 1160),
    ([5, 5, 1], 1386),
    ([7, 2, 2], 1000),
    ([6, 3, 2], 2326),
    ([5, 4, 2], 3493),
    ([5, 3, 3], 4651),
    ([4, 4, 3], 5835),
    ([10, 1, 1], 66),
    ([9, 2, 1], 330),
    ([8, 3, 1], 990),
    ([7, 4, 1], 1980),
    ([6, 5, 1], 2772),
    ([8, 2, 2], 1500),
    ([7, 3, 2], 3969),
    ([6, 4, 2], 6982),
    ([5, 5, 2], 8347),
    ([6, 3, 3], 9291),
    ([5, 4, 3], 13961),
    ([4, 4, 4], 17520),
];

const MODULES: [&str; 10] = [
    "1:1",
    "2:1",
    "2,1:1 3:1",
    "2,1^2:1 2^2:2 3,1:1 4:1",
    "2,1^3:1 2^2,1:3 3,1^2:2 3,2:3 4,1:2 5:1",
    "2,1^4:1 2^2,1^2:3 2^3:4 3,1^3:4 3,2,1:8 3^2:1 4,1^2:4 4,2:6 5,1:2 6:1",
    "2,1^5:1 2^2,1^3:4 2^3,1:7 3,1^4:5 3,2,1^2:16 3,2^2:12 3^2,1:9 4,1^3:8 4,2,1:18 4,3:7 5,1^2:6 \
     5,2:8 6,1:3 7:1",
    "2,1^6:1 2^2,1^4:6 2^3,1^2:11 2^4:10 3,1^5:5 3,2,1^3:26 3,2^2,1:34 3^2,1^2:30 3^2,2:19 \
     4,1^4:14 4,2,1^2:41 4,2^2:32 4,3,1:34 4^2:10 5,1^3:16 5,2,1:32 5,3:12 6,1^2:9 6,2:12 7,1:3 8:1",
    "2,1^7:1 2^2,1^5:7 2^3,1^3:18 2^4,1:22 3,1^6:6 3,2,1^4:38 3,2^2,1^2:74 3,2^3:44 3^2,1^3:58 \
     3^2,2,1:85 3^3:20 4,1^5:20 4,2,1^3:84 4,2^2,1:109 4,3,1^2:107 4,3,2:86 4^2,1:44 5,1^4:31 \
     5,2,1^2:91 5,2^2:64 5,3,1:78 5,4:22 6,1^3:25 6,2,1:53 6,3:24 7,1^2:12 7,2:15 8,1:4 9:1",
    "2,1^8:1 2^2,1^6:7 2^3,1^4:26 2^4,1^2:38 2^5:26 3,1^7:8 3,2,1^5:53 3,2^2,1^3:139 3,2^3,1:144 \
     3^2,1^4:93 3^2,2,1^2:226 3^2,2^2:122 3^3,1:114 4,1^6:26 4,2,1^4:151 4,2^2,1^2:272 4,2^3:162 \
     4,3,1^3:257 4,3,2,1:394 4,3^2:105 4^2,1^2:143 4^2,2:138 5,1^5:50 5,2,1^3:212 5,2^2,1:263 \
     5,3,1^2:289 5,3,2:224 5,4,1:144 5,5:16 6,1^4:58 6,2,1^2:168 6,2^2:120 6,3,1:155 6,4:50 \
     7,1^3:40 7,2,1:80 7,3:35 8,1^2:16 8,2:20 9,1:4 10:1",
];

/// The `S_n`-module `Jord(n)` for `1 ≤ n ≤ 10`.
pub fn multilinear_module(n: usize) -> Option<SnModule> {
    let text = MODULES.get(n.checked_sub(1)?)?;
    let pairs: alloc::vec::Vec<(&str, u64)> = text
        .split_whitespace()
        .map(|t| {
            let (lam, k) = t.split_once(':').unwrap();
            (lam, k.parse().unwrap())
        })
        .collect();
    SnModule::from_pairs(n, &pairs).ok()
}
