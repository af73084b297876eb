//! Multiplicity four with both genus and Frobenius number fixed.

use std::sync::LazyLock;

use num_rational::Rational64;

use super::piecewise::{eq, ge, le, q, z, Evaluation, Guard, Piece, PiecewiseCount};
use super::Transcription;
use crate::arith::{ceil_div, floor_div};

fn p(label: &'static str, residue: i64, atoms: Vec<super::piecewise::Atom>, value: fn(i64, i64) -> Rational64) -> Piece {
    Piece {
        label,
        guard: Guard::new(Some((4, residue)), atoms),
        value,
    }
}

fn genus_frobenius_pieces(variant: Transcription) -> PiecewiseCount {
    let mut pieces = vec![
        p(
            "F≡1, 5F-8g>=5, 2g-F>=5",
            1,
            vec![ge(-8, 5, 5), ge(2, -1, 5)],
            |g, f| q(f + 3, 2) - z(floor_div(2 * g + f + 5, 6)),
        ),
        p(
            "F≡1, 4g-F>=23, 1<=2g-F<=3",
            1,
            vec![ge(4, -1, 23), ge(2, -1, 1), le(2, -1, 3)],
            |g, f| z(g - floor_div(2 * g + f + 5, 6)),
        ),
        p(
            "F≡1, 5F-8g<=1, 4g-3F<=1, 2g-F>=5",
            1,
            vec![le(-8, 5, 1), le(4, -3, 1), ge(2, -1, 5)],
            |g, f| q(3 * f - 4 * g + 5, 4),
        ),
        p(
            "F≡1, 11<=4g-F<=19, 1<=2g-F<=3",
            1,
            vec![ge(4, -1, 11), le(4, -1, 19), ge(2, -1, 1), le(2, -1, 3)],
            |g, f| q(4 * g - f - 7, 4),
        ),
        p(
            "F≡2, 8g-5F<=2, F>=14, 2g-F>=2",
            2,
            vec![le(8, -5, 2), ge(0, 1, 14), ge(2, -1, 2)],
            |g, f| q(2 * g - f, 2),
        ),
        p(
            "F≡2, 8g-5F>=6, 4g-3F<=2, 2g-F>=6",
            2,
            vec![ge(8, -5, 6), le(4, -3, 2), ge(2, -1, 6)],
            |g, f| q(3 * f - 4 * g + 6, 4),
        ),
        p(
            "F≡2, 8g-5F>=6, F>=6, 2g-F<=4",
            2,
            vec![ge(8, -5, 6), ge(0, 1, 6), le(2, -1, 4)],
            |_, f| q(f - 2, 4),
        ),
        p(
            "F≡2, 8g-5F<=2, F<=10, 2g-F>=2",
            2,
            vec![le(8, -5, 2), le(0, 1, 10), ge(2, -1, 2)],
            |g, f| q(4 * g - f - 2, 4) - z(floor_div(f + 6, 8)),
        ),
        p(
            "F≡3, 8g-5F>=9, 4g-3F<=3, 2g-F>=5",
            3,
            vec![ge(8, -5, 9), le(4, -3, 3), ge(2, -1, 5)],
            |g, f| q(3 * f - 4 * g + 7, 4),
        ),
        p(
            "F≡3, 8g-5F<=5, 2g-F>=5",
            3,
            vec![le(8, -5, 5), ge(2, -1, 5)],
            |g, f| q(f + 3, 2) - z(floor_div(2 * g + f + 5, 6)),
        ),
        p(
            "F≡3, 8g-5F<=5, 4g-F>=9, 1<=2g-F<=3",
            3,
            vec![le(8, -5, 5), ge(4, -1, 9), ge(2, -1, 1), le(2, -1, 3)],
            |g, f| z(g - floor_div(2 * g + f + 5, 6)),
        ),
    ];
    if variant == Transcription::Corrected {
        // <4,5,6,7> has g = F = 3 and no printed branch reaches it
        pieces.push(p("g=3, F=3", 3, vec![eq(1, 0, 3), eq(0, 1, 3)], |_, _| z(1)));
    }
    PiecewiseCount {
        name: "m4_genus_frobenius",
        pieces,
    }
}

fn med_pieces() -> PiecewiseCount {
    PiecewiseCount {
        name: "m4_med_genus_frobenius",
        pieces: vec![
            p(
                "F≡1, 5F-8g>=1, 2g-F<=3",
                1,
                vec![ge(-8, 5, 1), le(2, -1, 3)],
                |g, f| q(f + 1, 2) - z(floor_div(2 * g + f + 1, 6)),
            ),
            p(
                "F≡1, 8g-5F>=3, 4g-F>=15, 4g-3F<=1",
                1,
                vec![ge(8, -5, 3), ge(4, -1, 15), le(4, -3, 1)],
                |g, f| q(3 * f + 5, 4) - z(g),
            ),
            p(
                "F≡2, 8g-5F<=6, 2g-F>=2, 4g-F>=14",
                2,
                vec![le(8, -5, 6), ge(2, -1, 2), ge(4, -1, 14)],
                |g, f| q(f, 2) - z(floor_div(2 * g + f, 6)),
            ),
            p(
                "F≡2, 8g-5F>=10, 4g-3F<=2",
                2,
                vec![ge(8, -5, 10), le(4, -3, 2)],
                |g, f| q(3 * f + 6, 4) - z(g),
            ),
            p(
                "F≡3, 8g-5F<=1, 2g-F>=5",
                3,
                vec![le(8, -5, 1), ge(2, -1, 5)],
                |g, f| q(f + 3, 2) - z(floor_div(2 * g + f + 5, 6)),
            ),
            p(
                "F≡3, 8g-5F<=1, 4g-F>=13, 1<=2g-F<=3",
                3,
                vec![le(8, -5, 1), ge(4, -1, 13), ge(2, -1, 1), le(2, -1, 3)],
                |g, f| z(g - floor_div(2 * g + f + 5, 6)),
            ),
            p(
                "F≡3, 8g-5F>=5, 4g-3F<=3, 2g-F>=5",
                3,
                vec![ge(8, -5, 5), le(4, -3, 3), ge(2, -1, 5)],
                |g, f| q(3 * f + 7, 4) - z(g),
            ),
            Piece {
                label: "F=5, g=7",
                guard: Guard::new(None, vec![eq(0, 1, 5), eq(1, 0, 7)]),
                value: |_, _| z(2),
            },
        ],
    }
}

static GF_PUBLISHED: LazyLock<PiecewiseCount> =
    LazyLock::new(|| genus_frobenius_pieces(Transcription::Published));
static GF_CORRECTED: LazyLock<PiecewiseCount> =
    LazyLock::new(|| genus_frobenius_pieces(Transcription::Corrected));
static MED_PUBLISHED: LazyLock<PiecewiseCount> = LazyLock::new(med_pieces);

pub fn m4_genus_frobenius_formula(variant: Transcription) -> &'static PiecewiseCount {
    match variant {
        Transcription::Published => &GF_PUBLISHED,
        Transcription::Corrected => &GF_CORRECTED,
    }
}

/// The printed MED table. It has no corrected piecewise counterpart; the
/// corrected count is [`count_m4_joint_reduced`].
pub fn m4_med_genus_frobenius_formula() -> &'static PiecewiseCount {
    &MED_PUBLISHED
}

pub fn count_m4_genus_frobenius_with(g: i64, f: i64, variant: Transcription) -> Evaluation {
    m4_genus_frobenius_formula(variant).evaluate(g, f)
}

/// Semigroups of multiplicity 4 with genus `g` and Frobenius number `F`.
pub fn count_m4_genus_frobenius(g: i64, f: i64) -> u64 {
    count_m4_genus_frobenius_with(g, f, Transcription::Corrected)
        .as_count()
        .expect("corrected genus+Frobenius formula is integral")
}

/// Value and, for the published table, the piece that produced it. The
/// corrected value carries no piece label.
pub fn count_m4_med_genus_frobenius_with(g: i64, f: i64, variant: Transcription) -> Evaluation {
    match variant {
        Transcription::Published => MED_PUBLISHED.evaluate(g, f),
        Transcription::Corrected => Evaluation {
            value: z(count_m4_joint_reduced(g, f, true) as i64),
            piece: None,
        },
    }
}

/// MED semigroups of multiplicity 4 with genus `g` and Frobenius number `F`.
pub fn count_m4_med_genus_frobenius(g: i64, f: i64) -> u64 {
    count_m4_joint_reduced(g, f, true)
}

/// Exact count for `m = 4` with `g` and `F` fixed, plain or MED.
///
/// The Frobenius equality pins one coordinate, the genus cut leaves a sum
/// `s` for the other two, and the remaining Kunz rows become an interval for
/// one free coordinate. `delta` is 1 for the MED rows and 0 otherwise.
pub fn count_m4_joint_reduced(g: i64, f: i64, med: bool) -> u64 {
    let d = i64::from(med);
    let (lo, hi) = match f.rem_euclid(4) {
        0 => return 0,
        1 => {
            let a = (f + 3) / 4;
            let s = g - a;
            if s - a < d - 1 {
                return 0;
            }
            (
                1.max(ceil_div(s - a + d, 2)).max(s - a + 1),
                (s - 1).min(2 * a - d).min(floor_div(2 * s - d + 1, 3)).min(a - 1),
            )
        }
        2 => {
            let b = (f + 2) / 4;
            let s = g - b;
            (
                1.max(ceil_div(b + d, 2))
                    .max(ceil_div(s - b + d, 2))
                    .max(s - b + 1),
                (s - 1)
                    .min(floor_div(s + b - d + 1, 2))
                    .min(floor_div(2 * s - b - d + 1, 2))
                    .min(b),
            )
        }
        _ => {
            let c = (f + 1) / 4;
            let s = g - c;
            if s - c < d {
                return 0;
            }
            (
                1.max(ceil_div(s + d, 3)).max(s - 2 * c + d - 1).max(s - c),
                (s - 1).min(floor_div(s + c - d + 1, 2)).min(c),
            )
        }
    };
    (hi - lo + 1).max(0) as u64
}

/// The printed two-branch count of pairs `4 < n_2 < n_3 < F + 4` with
/// `n_2 + n_3 = 4g - F + 2`; an upper bound for the MED count.
pub fn med4_pair_upper_bound(g: i64, f: i64) -> i64 {
    if 2 * g - f <= 2 && 4 * g - f >= 9 {
        2 * g - floor_div(f, 2) - 4
    } else if 2 * g - f >= 3 && 4 * g - 3 * f <= 3 {
        2 * f - 2 * g - floor_div(f, 2) + 2
    } else {
        0
    }
}

/// The same pair count by direct search.
pub fn med4_pairs(g: i64, f: i64) -> Vec<(i64, i64)> {
    let sum = 4 * g - f + 2;
    (5..f + 4)
        .filter_map(|n2| {
            let n3 = sum - n2;
            (n2 < n3 && n3 < f + 4).then_some((n2, n3))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_frobenius_examples() {
        assert_eq!(count_m4_genus_frobenius(4, 5), 1);
        assert_eq!(
            count_m4_genus_frobenius_with(4, 5, Transcription::Corrected).piece,
            Some("F≡1, 11<=4g-F<=19, 1<=2g-F<=3")
        );
        assert_eq!(count_m4_genus_frobenius(4, 7), 1);
        assert_eq!((9..=17).map(|f| count_m4_genus_frobenius(9, f)).sum::<u64>(), 11);
        assert_eq!(count_m4_genus_frobenius(3, 3), 1);
        assert_eq!(count_m4_genus_frobenius_with(3, 3, Transcription::Published).piece, None);
    }

    #[test]
    fn med_examples() {
        let published = |g, f| count_m4_med_genus_frobenius_with(g, f, Transcription::Published);
        assert_eq!(published(7, 5).value, z(2));
        assert_eq!(published(7, 5).piece, Some("F=5, g=7"));
        // no semigroup has F < g
        assert_eq!(count_m4_med_genus_frobenius(7, 5), 0);
        assert_eq!((8..=15).map(|f| count_m4_med_genus_frobenius(8, f)).sum::<u64>(), 5);
        assert_eq!(count_m4_med_genus_frobenius(5, 6), 1);
    }

    #[test]
    fn pair_bound_examples() {
        assert_eq!(med4_pair_upper_bound(7, 9), 2);
        // n_2 + n_3 = 21 with 4 < n_2 < n_3 < 13
        assert_eq!(med4_pairs(7, 9), vec![(9, 12), (10, 11)]);
        assert_eq!(med4_pair_upper_bound(5, 7), 3);
        assert_eq!(med4_pairs(5, 7).len(), 3);
    }

    #[test]
    fn guards_are_disjoint_on_the_grid() {
        for table in [
            m4_genus_frobenius_formula(Transcription::Published),
            m4_genus_frobenius_formula(Transcription::Corrected),
            m4_med_genus_frobenius_formula(),
        ] {
            assert!(table.overlaps(200, 200).is_empty(), "{}", table.name);
        }
    }
}
