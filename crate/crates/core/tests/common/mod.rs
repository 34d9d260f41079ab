#![allow(dead_code)]

pub mod properties;

/// One acceptance criterion: registry ids run at `(order, xdeg)`, plus named property suites.
pub struct Criterion {
    pub label: &'static str,
    pub summary: &'static str,
    pub runs: &'static [(&'static str, i64, usize)],
    pub properties: &'static [&'static str],
}

// "to q^N" means every exponent up to N, so the truncation order is N + 1.
pub const CRITERIA: &[Criterion] = &[
    Criterion {
        label: "C1",
        summary: "Schur double series equals the enumeration, x^12 q^60",
        runs: &[("theorem1", 61, 12)],
        properties: &[],
    },
    Criterion {
        label: "C2",
        summary: "Schur product identity to q^200",
        runs: &[("schur-product", 201, 0)],
        properties: &[],
    },
    Criterion {
        label: "C3",
        summary: "Gollnitz-Gordon and Gollnitz double series, x^12 q^60; single sum to q^100; R specializations",
        runs: &[
            ("theorem2-gg", 61, 12),
            ("theorem2-g", 61, 12),
            ("gg-single-sum", 101, 12),
            ("r-specializations", 101, 0),
        ],
        properties: &[],
    },
    Criterion {
        label: "C4",
        summary: "Gollnitz-Gordon (t = 1, 3) and Little Gollnitz products to q^150",
        runs: &[
            ("gollnitz-gordon-1", 151, 0),
            ("gollnitz-gordon-3", 151, 0),
            ("little-gollnitz-1", 151, 0),
            ("little-gollnitz-2", 151, 0),
            ("g1-single-sum", 61, 12),
            ("g2-shift", 61, 12),
        ],
        properties: &[],
    },
    Criterion {
        label: "C5",
        summary: "R products: (-q;q^2), (-q^2;q^2), m = 1..6, to q^150",
        runs: &[
            ("euler-odd", 151, 0),
            ("euler-even", 151, 0),
            ("triangular-product", 151, 0),
            ("euler-x", 61, 12),
        ],
        properties: &[],
    },
    Criterion {
        label: "C6",
        summary: "r recurrences on the (l,u,v,w) grid, n <= 12, trunc 40",
        runs: &[
            ("r-recurrence-1", 40, 0),
            ("r-recurrence-2", 40, 0),
            ("r-normalization", 40, 0),
        ],
        properties: &[],
    },
    Criterion {
        label: "C7",
        summary: "q-difference equations, rho systems n <= 12, u_S and u_GG n <= 20, trunc 60",
        runs: &[
            ("qdiff-schur-short", 60, 10),
            ("qdiff-schur-long", 60, 10),
            ("rho-system", 60, 0),
            ("u-schur", 60, 0),
            ("qdiff-gg-long", 60, 10),
            ("qdiff-gg-short", 60, 10),
            ("rho-gg", 60, 0),
            ("u-gg", 60, 0),
            ("qdiff-g-long", 60, 10),
            ("qdiff-g-short", 60, 10),
            ("rho-g", 60, 0),
            ("rho-euler", 60, 0),
            ("qdiff-euler", 60, 10),
        ],
        properties: &[],
    },
    Criterion {
        label: "C8",
        summary: "closed forms of r (n <= 15, trunc 40), bridges, summation formulas, Gauss triangular to q^150",
        runs: &[
            ("r-closed-forms", 40, 0),
            ("pochhammer-bridge", 40, 0),
            ("phi-bridge", 40, 0),
            ("chu-vandermonde", 40, 0),
            ("chu-second", 40, 0),
            ("heine-special", 40, 0),
            ("gauss-triangular", 151, 0),
        ],
        properties: &[],
    },
    Criterion {
        label: "C9",
        summary: "triangle-removal bijections for sizes <= 40 and the worked example",
        runs: &[
            ("bijection-schur", 40, 0),
            ("bijection-gg", 40, 0),
            ("bijection-g", 40, 0),
            ("triangle-example", 1, 0),
            ("schur-image-product", 61, 12),
            ("gg-image-product", 61, 12),
            ("g-image-product", 61, 12),
        ],
        properties: &[],
    },
    Criterion {
        label: "C10",
        summary: "Alladi-Berkovich to w^8 q^80, Capparelli-Sills to q^100",
        runs: &[
            ("alladi-berkovich-1", 81, 8),
            ("alladi-berkovich-2", 81, 8),
            ("capparelli-sills", 101, 0),
        ],
        properties: &[],
    },
    Criterion {
        label: "C11",
        summary: "property suites under fixed seeds",
        runs: &[
            ("qbinomial-theorem", 60, 10),
            ("negative-pochhammer", 60, 0),
            ("t-limit", 60, 0),
        ],
        properties: properties::NAMES,
    },
];
