//! Static coefficient table for the genus-4 numerator.
//!
//! The numerator of the genus-4 spinor series is a degree-14 polynomial in
//! `X`. Its coefficient at `X^k` is
//!
//! ```text
//!   sign * x0^k * p^(p_pow) * sum over groups of  c(p) * sum of sym terms
//! ```
//!
//! where each group pairs one integer polynomial `c(p)` with the exponent
//! signatures of the symmetrizations it multiplies. Signatures are written
//! with weakly decreasing entries; `[2,2,1,1]` stands for the symmetrization
//! of `x1^2 x2^2 x3 x4`. Groups whose `c(p)` carries a leading minus sign are
//! subtracted, exactly as the source expressions subtract individual
//! symmetrizations.

pub struct KGroup {
    /// Integer polynomial in `p`, in the text syntax of `poly-core`.
    pub p_coeff: &'static str,
    pub signatures: &'static [[i32; 4]],
}

pub struct KSpec {
    /// Overall sign of the whole coefficient, 0 for a vanishing coefficient.
    pub sign: i64,
    pub x0_pow: i32,
    /// Exponent of the power of `p` in the prefactor; never positive.
    pub p_pow: i32,
    pub groups: &'static [KGroup],
}

const fn g(p_coeff: &'static str, signatures: &'static [[i32; 4]]) -> KGroup {
    KGroup {
        p_coeff,
        signatures,
    }
}

/// Coefficients of `X^0 .. X^14`, in order.
pub const KTABLE_GENUS4: [KSpec; 15] = [
    // k = 0
    KSpec {
        sign: 1,
        x0_pow: 0,
        p_pow: 0,
        groups: &[g("1", &[[0, 0, 0, 0]])],
    },
    // k = 1
    KSpec {
        sign: 0,
        x0_pow: 0,
        p_pow: 0,
        groups: &[],
    },
    // k = 2
    KSpec {
        sign: -1,
        x0_pow: 2,
        p_pow: -2,
        groups: &[
            g("p", &[[2, 2, 1, 1], [2, 1, 1, 0], [1, 1, 0, 0]]),
            g("p^2+p+1", &[[2, 1, 1, 1], [1, 1, 1, 0]]),
            g("2p^2+4p+1", &[[1, 1, 1, 1]]),
        ],
    },
    // k = 3
    KSpec {
        sign: 1,
        x0_pow: 3,
        p_pow: -3,
        groups: &[
            g(
                "p^2+p",
                &[
                    [3, 2, 2, 2],
                    [3, 2, 2, 1],
                    [3, 2, 1, 1],
                    [3, 1, 1, 1],
                    [2, 2, 2, 0],
                    [2, 2, 1, 0],
                    [2, 1, 1, 0],
                    [1, 1, 1, 0],
                ],
            ),
            g(
                "p^3+5p^2+5p+1",
                &[
                    [2, 2, 2, 2],
                    [2, 2, 2, 1],
                    [2, 2, 1, 1],
                    [2, 1, 1, 1],
                    [1, 1, 1, 1],
                ],
            ),
        ],
    },
    // k = 4
    KSpec {
        sign: -1,
        x0_pow: 4,
        p_pow: -4,
        groups: &[
            g("p^2", &[[4, 3, 2, 2], [4, 2, 2, 1], [3, 2, 2, 0], [2, 2, 1, 0]]),
            g(
                "p(p^2+p+1)",
                &[
                    [4, 2, 2, 2],
                    [3, 3, 3, 3],
                    [3, 3, 3, 1],
                    [3, 3, 1, 1],
                    [3, 1, 1, 1],
                    [2, 2, 2, 0],
                    [1, 1, 1, 1],
                ],
            ),
            g(
                "p(p^2+4p+1)",
                &[[3, 3, 3, 2], [3, 3, 2, 1], [3, 2, 1, 1], [2, 1, 1, 1]],
            ),
            g("p(3p^2+6p+4)", &[[3, 3, 2, 2], [3, 2, 2, 1], [2, 2, 1, 1]]),
            g("5p^3+15p^2+6p+1", &[[3, 2, 2, 2], [2, 2, 2, 1]]),
            g("12p^3+22p^2+16p+1", &[[2, 2, 2, 2]]),
        ],
    },
    // k = 5
    KSpec {
        sign: 1,
        x0_pow: 5,
        p_pow: -4,
        groups: &[
            g(
                "p^2+p",
                &[
                    [4, 4, 3, 3],
                    [4, 4, 3, 2],
                    [4, 4, 2, 2],
                    [4, 3, 3, 1],
                    [4, 3, 2, 1],
                    [4, 2, 2, 1],
                    [3, 3, 1, 1],
                    [3, 2, 1, 1],
                    [2, 2, 1, 1],
                ],
            ),
            g(
                "4p^2+5p+1",
                &[
                    [4, 3, 3, 3],
                    [4, 3, 3, 2],
                    [4, 3, 2, 2],
                    [4, 2, 2, 2],
                    [3, 3, 3, 1],
                    [3, 3, 2, 1],
                    [3, 2, 2, 1],
                    [2, 2, 2, 1],
                ],
            ),
            g(
                "-p^4+14p^2+18p+5",
                &[
                    [3, 3, 3, 3],
                    [3, 3, 3, 2],
                    [3, 3, 2, 2],
                    [3, 2, 2, 2],
                    [2, 2, 2, 2],
                ],
            ),
        ],
    },
    // k = 6
    KSpec {
        sign: 1,
        x0_pow: 6,
        p_pow: -6,
        groups: &[
            g(
                "p^2(p^3-5p-4)",
                &[[4, 4, 3, 2], [4, 3, 2, 2], [3, 2, 2, 2], [4, 4, 4, 3]],
            ),
            g("p(p^5+5p^4-17p^2-15p-1)", &[[4, 3, 3, 3], [3, 3, 3, 2]]),
            g(
                "-p^2(p+1)",
                &[[4, 3, 3, 1], [3, 3, 2, 1], [5, 3, 3, 2], [5, 4, 3, 3]],
            ),
            g("p(3p^4-12p^2-6p-1)", &[[4, 3, 3, 2], [3, 3, 2, 2], [4, 4, 3, 3]]),
            g(
                "p^2(p^3-3p-1)",
                &[
                    [4, 2, 2, 2],
                    [3, 3, 3, 1],
                    [2, 2, 2, 2],
                    [4, 4, 2, 2],
                    [4, 4, 4, 2],
                    [4, 4, 4, 4],
                    [5, 3, 3, 3],
                ],
            ),
            g("p^3", &[[6, 3, 3, 3], [3, 3, 3, 0]]),
            g(
                "-p^3",
                &[
                    [5, 4, 4, 3],
                    [5, 4, 3, 2],
                    [5, 3, 2, 2],
                    [4, 4, 3, 1],
                    [4, 3, 2, 1],
                    [3, 2, 2, 1],
                ],
            ),
            g("2p^6+12p^5-32p^3-22p^2-4p+1", &[[3, 3, 3, 3]]),
        ],
    },
    // k = 7
    KSpec {
        sign: -1,
        x0_pow: 7,
        p_pow: -5,
        groups: &[
            g(
                "p(p^2-1)",
                &[
                    [5, 5, 4, 4],
                    [5, 5, 4, 3],
                    [5, 5, 3, 3],
                    [5, 4, 4, 2],
                    [5, 4, 3, 2],
                    [5, 3, 3, 2],
                    [4, 4, 2, 2],
                    [4, 3, 2, 2],
                    [3, 3, 2, 2],
                ],
            ),
            g(
                "p^4+4p^3-4p-1",
                &[
                    [5, 4, 4, 4],
                    [5, 4, 4, 3],
                    [5, 4, 3, 3],
                    [5, 3, 3, 3],
                    [4, 4, 4, 2],
                    [4, 4, 3, 2],
                    [4, 3, 3, 2],
                    [3, 3, 3, 2],
                ],
            ),
            g(
                "5p^4+14p^3-14p-5",
                &[
                    [4, 4, 4, 4],
                    [4, 4, 4, 3],
                    [4, 4, 3, 3],
                    [4, 3, 3, 3],
                    [3, 3, 3, 3],
                ],
            ),
        ],
    },
    // k = 8
    KSpec {
        sign: 1,
        x0_pow: 8,
        p_pow: -6,
        groups: &[
            g("p^5+15p^4+17p^3-5p-1", &[[5, 4, 4, 4], [4, 4, 4, 3]]),
            g("-p^3", &[[7, 4, 4, 4], [4, 4, 4, 1]]),
            g(
                "p^3",
                &[
                    [6, 5, 5, 4],
                    [6, 5, 4, 3],
                    [6, 4, 3, 3],
                    [5, 5, 4, 2],
                    [5, 4, 3, 2],
                    [4, 3, 3, 2],
                ],
            ),
            g(
                "p(4p^3+5p^2-1)",
                &[[5, 5, 5, 4], [5, 5, 4, 3], [5, 4, 3, 3], [4, 3, 3, 3]],
            ),
            g(
                "p^3(p+1)",
                &[[6, 5, 4, 4], [6, 4, 4, 3], [5, 4, 4, 2], [4, 4, 3, 2]],
            ),
            g(
                "p(p^3+3p^2-1)",
                &[
                    [4, 4, 4, 2],
                    [5, 3, 3, 3],
                    [5, 5, 3, 3],
                    [5, 5, 5, 5],
                    [6, 4, 4, 4],
                    [5, 5, 5, 3],
                    [3, 3, 3, 3],
                ],
            ),
            g("-(p^6-4p^5-22p^4-32p^3+12p+2)", &[[4, 4, 4, 4]]),
            g(
                "p(p^4+6p^3+12p^2-3)",
                &[[5, 5, 4, 4], [5, 4, 4, 3], [4, 4, 3, 3]],
            ),
        ],
    },
    // k = 9
    KSpec {
        sign: -1,
        x0_pow: 9,
        p_pow: -6,
        groups: &[
            g(
                "p^2(p+1)",
                &[
                    [6, 6, 5, 5],
                    [6, 6, 5, 4],
                    [6, 6, 4, 4],
                    [6, 5, 5, 3],
                    [6, 5, 4, 3],
                    [6, 4, 4, 3],
                    [5, 5, 3, 3],
                    [5, 4, 3, 3],
                    [4, 4, 3, 3],
                ],
            ),
            g(
                "p^2(p^2+5p+4)",
                &[
                    [6, 5, 5, 5],
                    [6, 5, 5, 4],
                    [6, 5, 4, 4],
                    [6, 4, 4, 4],
                    [5, 5, 5, 3],
                    [5, 5, 4, 3],
                    [5, 4, 4, 3],
                    [4, 4, 4, 3],
                ],
            ),
            g(
                "5p^4+18p^3+14p^2-1",
                &[
                    [5, 5, 5, 5],
                    [5, 5, 5, 4],
                    [5, 5, 4, 4],
                    [5, 4, 4, 4],
                    [4, 4, 4, 4],
                ],
            ),
        ],
    },
    // k = 10
    KSpec {
        sign: 1,
        x0_pow: 10,
        p_pow: -5,
        groups: &[
            g(
                "p^2+p+1",
                &[
                    [4, 4, 4, 4],
                    [5, 5, 5, 3],
                    [6, 4, 4, 4],
                    [6, 6, 4, 4],
                    [6, 6, 6, 4],
                    [6, 6, 6, 6],
                    [7, 5, 5, 5],
                ],
            ),
            g(
                "p^2+4p+1",
                &[[5, 4, 4, 4], [6, 5, 4, 4], [6, 6, 5, 4], [6, 6, 6, 5]],
            ),
            g("p", &[[5, 5, 4, 3], [6, 5, 5, 3], [7, 5, 5, 4], [7, 6, 5, 5]]),
            g("4p^2+6p+3", &[[5, 5, 4, 4], [6, 5, 5, 4], [6, 6, 5, 5]]),
            g("p^3+6p^2+15p+5", &[[5, 5, 5, 4], [6, 5, 5, 5]]),
            g("p^3+16p^2+22p+12", &[[5, 5, 5, 5]]),
        ],
    },
    // k = 11
    KSpec {
        sign: -1,
        x0_pow: 11,
        p_pow: -6,
        groups: &[
            g(
                "p^2+p",
                &[
                    [7, 6, 6, 6],
                    [7, 6, 6, 5],
                    [7, 6, 5, 5],
                    [7, 5, 5, 5],
                    [6, 6, 6, 4],
                    [6, 6, 5, 4],
                    [6, 5, 5, 4],
                    [5, 5, 5, 4],
                ],
            ),
            g(
                "p^3+5p^2+5p+1",
                &[
                    [6, 6, 6, 6],
                    [6, 6, 6, 5],
                    [6, 6, 5, 5],
                    [6, 5, 5, 5],
                    [5, 5, 5, 5],
                ],
            ),
        ],
    },
    // k = 12
    KSpec {
        sign: 1,
        x0_pow: 12,
        p_pow: -6,
        groups: &[
            g("p^2+p+1", &[[6, 6, 6, 5], [7, 6, 6, 6]]),
            g("p^2+4p+2", &[[6, 6, 6, 6]]),
            g("p", &[[7, 6, 6, 5], [7, 7, 6, 6], [6, 6, 5, 5]]),
        ],
    },
    // k = 13
    KSpec {
        sign: 0,
        x0_pow: 0,
        p_pow: 0,
        groups: &[],
    },
    // k = 14
    KSpec {
        sign: -1,
        x0_pow: 14,
        p_pow: -6,
        groups: &[g("1", &[[7, 7, 7, 7]])],
    },
];
