//! Fixed inputs for the benchmarks, so that runs are comparable.

/// Order vectors whose toric ideals range from trivial to a few hundred
/// binomials.
pub const ORDER_VECTORS: &[&[i64]] = &[&[1, -2, 0], &[1, 1, -1, -1], &[2, 3, -4], &[4, -2, -3, -1, 4], &[3, 1, -1, -4, 3]];

/// Germ expressions of moderate size for the parser.
pub const EXPRESSIONS: &[&str] = &[
    "z",
    "exp(-z)/z^2",
    "(z - 1)^3*(z + 2i)/(z^2 + 1)*exp(z^3 - 2*z)",
    "((z - 1/2)^-2*(3 + z))^2*exp(4i*z)^3/exp(z^2)",
];

pub fn label(ell: &[i64]) -> String {
    ell.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}
