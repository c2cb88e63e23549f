//! Frozen search results. `examples/regenerate.rs` reruns the searches and
//! the tests check that they still agree with what is stored here.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::gadgets::{GadgetKind, HRule, Template};

const K4: [&[usize]; 4] = [&[1, 2, 3], &[0, 3, 2], &[0, 1, 3], &[0, 2, 1]];

const S_BASE: [&[usize]; 7] = [
    &[3, 5, 1, 2],
    &[5, 4, 2, 0],
    &[3, 0, 1],
    &[4, 6, 5, 0, 2],
    &[6, 3, 1, 5],
    &[3, 6, 4, 1, 0],
    &[3, 4, 5],
];

struct Frozen {
    base: &'static [&'static [usize]],
    splits: &'static [[usize; 3]],
    hsplits: &'static [([usize; 3], usize, i64, i64)],
    labels: &'static [(&'static str, usize)],
}

const PC: Frozen = Frozen {
    base: &K4,
    splits: &[
        [0, 1, 3],
        [1, 2, 3],
        [0, 1, 4],
        [1, 3, 4],
        [3, 0, 4],
        [3, 1, 5],
        [1, 4, 6],
        [4, 0, 6],
        [1, 3, 7],
        [4, 0, 11],
        [0, 6, 11],
        [6, 4, 11],
    ],
    hsplits: &[([0, 1, 6], 6, 4, -3), ([2, 0, 3], 0, 4, 4)],
    labels: &[
        ("a", 0),
        ("b", 1),
        ("c", 2),
        ("d", 3),
        ("u", 4),
        ("v", 6),
        ("w", 11),
        ("x", 15),
    ],
};

const END1: Frozen = Frozen {
    base: &K4,
    splits: &[[1, 2, 3], [2, 3, 4], [3, 1, 4], [2, 3, 5], [3, 4, 5], [4, 2, 5]],
    hsplits: &[([0, 1, 3], 3, 2, 4), ([1, 2, 4], 4, 2, 2), ([2, 0, 3], 3, 2, 3)],
    labels: &[("a", 0), ("b", 1), ("c", 2), ("d", 3), ("v", 4), ("w", 5), ("x", 8)],
};

const END0: Frozen = Frozen {
    base: &K4,
    splits: &[[1, 2, 3], [2, 0, 3], [1, 2, 4], [2, 3, 4], [3, 4, 7]],
    hsplits: &[([0, 1, 3], 3, 1, -11)],
    labels: &[("a", 0), ("b", 1), ("c", 2), ("d", 3), ("wbar", 4)],
};

const END_PRIME: Frozen = Frozen {
    base: &K4,
    splits: &[[1, 2, 3], [2, 0, 3], [1, 2, 4], [2, 3, 4], [3, 1, 4]],
    hsplits: &[([0, 1, 3], 3, 1, -12)],
    labels: &[("a", 0), ("b", 1), ("c", 2), ("d", 3), ("w'", 4)],
};

const S: Frozen = Frozen {
    base: &S_BASE,
    splits: &[],
    hsplits: &[],
    labels: &[
        ("a", 0),
        ("b", 1),
        ("c", 2),
        ("d", 3),
        ("e", 4),
        ("f", 6),
        ("g", 5),
    ],
};

pub(crate) fn template(kind: GadgetKind) -> Template {
    let f = match kind {
        GadgetKind::Pc => &PC,
        GadgetKind::End1 => &END1,
        GadgetKind::End0 => &END0,
        GadgetKind::EndPrime => &END_PRIME,
        GadgetKind::S => &S,
    };
    Template {
        kind,
        base: f.base.iter().map(|r| r.to_vec()).collect(),
        splits: f.splits.to_vec(),
        hsplits: f
            .hsplits
            .iter()
            .map(|&(face, about, slope, intercept)| HRule {
                face,
                about,
                slope,
                intercept,
            })
            .collect(),
        labels: f.labels.iter().map(|&(l, v)| (l.to_string(), v)).collect(),
    }
}

/// Minimal-order witnesses, found by exhaustive search (n <= 7) and by
/// split search (the rest).
const CATALOG: &[(&str, &[&[usize]])] = &[
    (
        "r_3",
        &[
            &[1, 2, 3],
            &[0, 3, 2],
            &[0, 1, 3],
            &[0, 2, 1],
        ],
    ),
    (
        "r_4.1",
        &[
            &[4, 2, 3],
            &[4, 3, 2],
            &[0, 4, 1, 3],
            &[0, 2, 1],
            &[0, 1, 2],
        ],
    ),
    (
        "r_4.2",
        &[
            &[1, 4, 2, 3],
            &[4, 0, 3, 2],
            &[0, 4, 1, 3],
            &[0, 2, 1],
            &[0, 1, 2],
        ],
    ),
    (
        "r_5.1",
        &[
            &[1, 5, 4, 3],
            &[4, 5, 0, 3, 2],
            &[4, 1, 3],
            &[0, 2, 1],
            &[0, 5, 1, 2],
            &[0, 1, 4],
        ],
    ),
    (
        "r_5.2",
        &[
            &[1, 5, 4, 2, 3],
            &[4, 5, 0, 3, 2],
            &[0, 4, 1, 3],
            &[0, 2, 1],
            &[0, 5, 1, 2],
            &[0, 1, 4],
        ],
    ),
    (
        "r_6.1",
        &[
            &[1, 5, 6, 4, 2, 3],
            &[4, 5, 0, 3],
            &[0, 4, 3],
            &[0, 2, 1],
            &[0, 6, 5, 1, 2],
            &[6, 0, 1, 4],
            &[0, 5, 4],
        ],
    ),
    (
        "r_6.2",
        &[
            &[1, 6, 5, 2, 3],
            &[4, 5, 6, 0, 3, 2],
            &[0, 4, 1, 3],
            &[0, 2, 1],
            &[5, 1, 2],
            &[0, 6, 1, 4],
            &[0, 1, 5],
        ],
    ),
    (
        "r_6.3",
        &[
            &[1, 5, 6, 4, 2, 3],
            &[4, 5, 0, 3, 2],
            &[0, 4, 1, 3],
            &[0, 2, 1],
            &[0, 6, 5, 1, 2],
            &[6, 0, 1, 4],
            &[0, 5, 4],
        ],
    ),
    (
        "r_7.1",
        &[
            &[1, 5, 6, 7, 4, 2, 3],
            &[4, 5, 0, 3, 2],
            &[0, 4, 1, 3],
            &[0, 2, 1],
            &[0, 7, 6, 5, 1, 2],
            &[6, 0, 1, 4],
            &[7, 0, 5, 4],
            &[0, 6, 4],
        ],
    ),
    (
        "r_7.2",
        &[
            &[1, 7, 5, 6, 4, 2, 3],
            &[4, 5, 7, 0, 3, 2],
            &[0, 4, 1, 3],
            &[0, 2, 1],
            &[0, 6, 5, 1, 2],
            &[6, 0, 7, 1, 4],
            &[0, 5, 4],
            &[0, 1, 5],
        ],
    ),
    (
        "r_8",
        &[
            &[1, 8, 5, 6, 7, 4, 2, 3],
            &[4, 5, 8, 0, 3, 9, 2],
            &[0, 4, 1, 9, 3],
            &[0, 2, 9, 1],
            &[0, 7, 6, 5, 1, 2],
            &[6, 0, 8, 1, 4],
            &[7, 0, 5, 4],
            &[0, 6, 4],
            &[0, 1, 5],
            &[1, 3, 2],
        ],
    ),
    (
        "r_9",
        &[
            &[1, 8, 5, 6, 7, 4, 9, 2, 3],
            &[4, 10, 5, 8, 0, 3, 2],
            &[0, 9, 4, 1, 3],
            &[0, 2, 1],
            &[9, 0, 7, 6, 5, 10, 1, 2],
            &[6, 0, 8, 1, 10, 4],
            &[7, 0, 5, 4],
            &[0, 6, 4],
            &[0, 1, 5],
            &[0, 4, 2],
            &[1, 4, 5],
        ],
    ),
    (
        "r_10",
        &[
            &[1, 11, 8, 5, 6, 7, 4, 9, 2, 3],
            &[4, 10, 5, 8, 11, 0, 3, 12, 2],
            &[0, 9, 4, 1, 12, 13, 3],
            &[0, 2, 13, 12, 1],
            &[9, 0, 7, 6, 5, 10, 1, 2],
            &[6, 0, 8, 1, 10, 4],
            &[7, 0, 5, 4],
            &[0, 6, 4],
            &[0, 11, 1, 5],
            &[0, 4, 2],
            &[1, 4, 5],
            &[0, 1, 8],
            &[1, 3, 13, 2],
            &[3, 2, 12],
        ],
    ),
    (
        "r_11",
        &[
            &[1, 8, 5, 9, 6, 10, 7, 11, 4, 2, 3],
            &[14, 4, 12, 5, 8, 0, 3, 13, 2],
            &[0, 4, 14, 1, 13, 3],
            &[0, 2, 13, 1],
            &[0, 11, 7, 6, 15, 5, 12, 1, 14, 2],
            &[15, 6, 9, 0, 8, 1, 12, 4],
            &[7, 10, 0, 9, 5, 15, 4],
            &[11, 0, 10, 6, 4],
            &[0, 1, 5],
            &[0, 5, 6],
            &[0, 6, 7],
            &[0, 7, 4],
            &[1, 4, 5],
            &[1, 3, 2],
            &[1, 2, 4],
            &[4, 6, 5],
        ],
    ),
    (
        "r_12",
        &[
            &[1, 8, 5, 9, 6, 16, 10, 7, 11, 4, 2, 3],
            &[14, 4, 12, 5, 8, 0, 3, 13, 2],
            &[0, 4, 14, 1, 13, 3],
            &[0, 2, 13, 1],
            &[0, 11, 7, 17, 6, 15, 5, 12, 1, 14, 2],
            &[15, 6, 9, 0, 8, 1, 12, 4],
            &[17, 7, 18, 10, 16, 0, 9, 5, 15, 4],
            &[11, 0, 10, 18, 6, 17, 4],
            &[0, 1, 5],
            &[0, 5, 6],
            &[0, 16, 6, 18, 7],
            &[0, 7, 4],
            &[1, 4, 5],
            &[1, 3, 2],
            &[1, 2, 4],
            &[4, 6, 5],
            &[0, 6, 10],
            &[4, 7, 6],
            &[6, 7, 10],
        ],
    ),
    (
        "r_13",
        &[
            &[1, 19, 8, 5, 9, 6, 16, 10, 7, 11, 4, 2, 3],
            &[14, 4, 12, 5, 20, 8, 19, 0, 3, 13, 21, 2],
            &[0, 4, 14, 1, 21, 13, 3],
            &[0, 2, 13, 1],
            &[0, 11, 7, 17, 6, 15, 5, 12, 1, 14, 2],
            &[15, 6, 9, 0, 8, 20, 1, 12, 4],
            &[17, 7, 18, 10, 16, 0, 9, 5, 15, 4],
            &[11, 0, 10, 22, 18, 6, 17, 4],
            &[0, 19, 1, 20, 5],
            &[0, 5, 6],
            &[0, 16, 6, 18, 22, 7],
            &[0, 7, 4],
            &[1, 4, 5],
            &[21, 1, 3, 2],
            &[1, 2, 4],
            &[4, 6, 5],
            &[0, 6, 10],
            &[4, 7, 6],
            &[6, 7, 22, 10],
            &[0, 1, 8],
            &[1, 5, 8],
            &[1, 13, 2],
            &[7, 10, 18],
        ],
    ),
    (
        "r_15",
        &[
            &[28, 11, 26, 3, 27, 23, 1, 10, 2],
            &[9, 3, 12, 4, 24, 29, 13, 30, 2, 10, 0],
            &[30, 13, 25, 4, 14, 5, 15, 3, 11, 28, 0, 10, 1],
            &[26, 11, 2, 15, 5, 16, 6, 17, 4, 12, 1, 9, 23, 27, 0],
            &[12, 3, 17, 6, 18, 7, 19, 5, 14, 2, 25, 13, 24, 1],
            &[14, 4, 19, 7, 20, 8, 21, 6, 16, 3, 15, 2],
            &[16, 5, 21, 8, 22, 7, 18, 4, 17, 3],
            &[18, 6, 22, 8, 20, 5, 19, 4],
            &[20, 7, 22, 6, 21, 5],
            &[23, 3, 1],
            &[0, 1, 2],
            &[26, 0, 28, 2, 3],
            &[1, 3, 4],
            &[30, 1, 29, 24, 4, 25, 2],
            &[2, 4, 5],
            &[2, 5, 3],
            &[3, 5, 6],
            &[3, 6, 4],
            &[4, 6, 7],
            &[4, 7, 5],
            &[5, 7, 8],
            &[5, 8, 6],
            &[6, 8, 7],
            &[0, 27, 3, 9],
            &[29, 1, 4, 13],
            &[4, 2, 13],
            &[0, 11, 3],
            &[0, 3, 23],
            &[0, 2, 11],
            &[1, 24, 13],
            &[1, 13, 2],
        ],
    ),
];

pub(crate) fn catalog() -> Vec<(String, Vec<Vec<usize>>)> {
    CATALOG
        .iter()
        .map(|(name, rot)| (String::from(*name), rot.iter().map(|r| r.to_vec()).collect()))
        .collect()
}
