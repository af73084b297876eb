//! Multiplicity four: counts by genus and by Frobenius number.

use std::sync::LazyLock;

use num_rational::Rational64;

use super::piecewise::{ge, le, q, z, Evaluation, Guard, Piece, PiecewiseCount};
use super::Transcription;
use crate::arith::{ceil_div, floor_div};
use crate::error::{Error, Result};

fn rfloor(x: Rational64) -> i64 {
    x.floor().to_integer()
}

fn rceil(x: Rational64) -> i64 {
    x.ceil().to_integer()
}

/// Integer points of the box `[a, b] x [c, d]`.
///
/// Corrected form `(floor(b) - ceil(a) + 1)(floor(d) - ceil(c) + 1)`, each
/// factor clamped at 0.
pub fn box_count(a: Rational64, b: Rational64, c: Rational64, d: Rational64) -> i64 {
    let xs = (rfloor(b) - rceil(a) + 1).max(0);
    let ys = (rfloor(d) - rceil(c) + 1).max(0);
    xs * ys
}

/// The box formula as published, `(1 + floor(b) + ceil(a))(1 + floor(d) + ceil(b))`.
pub fn box_count_published(a: Rational64, b: Rational64, _c: Rational64, d: Rational64) -> i64 {
    (1 + rfloor(b) + rceil(a)) * (1 + rfloor(d) + rceil(b))
}

pub fn box_count_with(
    a: Rational64,
    b: Rational64,
    c: Rational64,
    d: Rational64,
    variant: Transcription,
) -> i64 {
    match variant {
        Transcription::Published => box_count_published(a, b, c, d),
        Transcription::Corrected => box_count(a, b, c, d),
    }
}

/// The four planar regions the projected `(m = 4, g)` polytope splits into
/// for `g >= 9` (coordinates `(x, y) = (k_1, k_3)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    /// `3x + y >= g, x <= (2g+1)/8, y <= g/2`
    TA,
    /// `x + 3y >= g - 1, x <= (g+1)/2, y <= (2g-3)/8`
    TB,
    /// `(2g+1)/8 <= x <= (g+1)/2, (2g-3)/8 <= y <= g/2`
    R,
    /// `x + y >= g, x <= (g+1)/2, y <= g/2`
    TC,
}

impl Region {
    pub const ALL: [Region; 4] = [Region::TA, Region::TB, Region::R, Region::TC];

    pub fn contains(self, g: i64, x: i64, y: i64) -> bool {
        match self {
            Region::TA => 3 * x + y >= g && 8 * x <= 2 * g + 1 && 2 * y <= g,
            Region::TB => x + 3 * y >= g - 1 && 2 * x <= g + 1 && 8 * y <= 2 * g - 3,
            Region::R => {
                2 * g < 8 * x && 2 * x <= g + 1 && 2 * g - 3 <= 8 * y && 2 * y <= g
            }
            Region::TC => x + y >= g && 2 * x <= g + 1 && 2 * y <= g,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Region::TA => "T_A",
            Region::TB => "T_B",
            Region::R => "R",
            Region::TC => "T_C",
        }
    }
}

/// Lattice points of a region by scanning the square `[-g, 2g]^2`, which
/// contains every region for `g >= 1`.
pub fn scan_region(region: Region, g: i64) -> u64 {
    let mut count = 0;
    for x in -g..=2 * g {
        for y in -g..=2 * g {
            if region.contains(g, x, y) {
                count += 1;
            }
        }
    }
    count
}

/// Closed-form lattice point counts of the four regions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegionCounts {
    pub t_a: Rational64,
    pub t_b: Rational64,
    pub r: Rational64,
    pub t_c: Rational64,
}

impl RegionCounts {
    /// `T_A + T_B + R - T_C`.
    pub fn total(&self) -> Rational64 {
        self.t_a + self.t_b + self.r - self.t_c
    }

    pub fn get(&self, region: Region) -> Rational64 {
        match region {
            Region::TA => self.t_a,
            Region::TB => self.t_b,
            Region::R => self.r,
            Region::TC => self.t_c,
        }
    }
}

pub fn region_counts_m4(g: i64) -> Result<RegionCounts> {
    if g < 9 {
        return Err(Error::DomainError {
            what: "region_counts_m4",
            value: g,
            domain: "g >= 9",
        });
    }
    let f4 = floor_div(g, 4);
    let f2 = floor_div(g, 2);
    let f56 = floor_div(g + 5, 6);
    let f26 = floor_div(g + 2, 6);
    let f24 = floor_div(g + 2, 4);
    let t_a = q(1, 2) * z(f56 - f4 - 1) * z(2 * g - 3 * f4 - 2 * f2 - 2 - 3 * f56);
    let t_b = q(1, 2) * z(f26 - f24) * z(-3 * f24 + 2 * f2 - 3 * f26 - 1);
    let r = z(box_count(q(2 * g + 1, 8), q(g + 1, 2), q(2 * g - 3, 8), q(g, 2)));
    Ok(RegionCounts {
        t_a,
        t_b,
        r,
        t_c: z(1),
    })
}

/// Semigroups of multiplicity 4 and genus `g >= 3`.
///
/// `g = 3` gives 1; otherwise the quasi-polynomial in `floor(g/4)`,
/// `floor(g/2)`, `floor((g+5)/6)`, `floor((g+2)/6)`, `floor((g+2)/4)`,
/// `floor((g+1)/2)`, `ceil((2g-3)/8)` and `ceil((2g-7)/8)`. The published
/// text shows a doubled `+ +` before `floor(g/2)`; read verbatim as a unary
/// plus it is the same single `+` term, so both transcriptions agree.
pub fn count_m4_genus_with(g: i64, _variant: Transcription) -> Result<Rational64> {
    if g < 3 {
        return Err(Error::DomainError {
            what: "count_m4_genus",
            value: g,
            domain: "g >= 3",
        });
    }
    if g == 3 {
        return Ok(z(1));
    }
    let a = z(floor_div(g, 4));
    let b = z(floor_div(g, 2));
    let c = z(floor_div(g + 5, 6));
    let d = z(floor_div(g + 2, 6));
    let e = z(floor_div(g + 2, 4));
    let f = z(floor_div(g + 1, 2));
    let p = z(ceil_div(2 * g - 3, 8));
    let r = z(ceil_div(2 * g - 7, 8));
    let gg = z(g);
    let half = q(1, 2);
    let three_halves = q(3, 2);
    Ok(-gg + q(5, 2) * a + b + half * c + c * gg - c * b - three_halves * c * c - a * gg
        + three_halves * a * a
        + a * b
        - half * d
        + d * b
        - three_halves * d * d
        + half * e
        + three_halves * e * e
        - e * b
        + f * b
        - f * p
        + f
        - r * b
        + r * p
        - r)
}

pub fn count_m4_genus(g: i64) -> Result<u64> {
    let v = count_m4_genus_with(g, Transcription::Corrected)?;
    Ok(v.to_integer() as u64)
}

fn frobenius_pieces(variant: Transcription) -> PiecewiseCount {
    let f_ge_21: fn(i64, i64) -> Rational64 = match variant {
        Transcription::Published => |_, f| frob_1_mod_4_large(f, q(5, 6)),
        Transcription::Corrected => |_, f| frob_1_mod_4_large(f, q(5, 16)),
    };
    let two_mod_four_guard = match variant {
        Transcription::Published => vec![],
        // below F = 6 no semigroup of multiplicity 4 has F ≡ 2 (mod 4)
        Transcription::Corrected => vec![ge(0, 1, 6)],
    };
    PiecewiseCount {
        name: "m4_frobenius",
        pieces: vec![
            Piece {
                label: "F≡1, 5<=F<=9",
                guard: Guard::new(Some((4, 1)), vec![ge(0, 1, 5), le(0, 1, 9)]),
                value: |_, f| {
                    let t = q(f - 1, 4);
                    t * t
                },
            },
            Piece {
                label: "F≡1, 13<=F<=17",
                guard: Guard::new(Some((4, 1)), vec![ge(0, 1, 13), le(0, 1, 17)]),
                value: |_, f| q(f * f - 14 * f + 141, 16),
            },
            Piece {
                label: "F≡1, F>=21",
                guard: Guard::new(Some((4, 1)), vec![ge(0, 1, 21)]),
                value: f_ge_21,
            },
            Piece {
                label: "F≡2",
                guard: Guard::new(Some((4, 2)), two_mod_four_guard),
                value: |_, f| {
                    (q(f, 4) - z(floor_div(f + 1, 8)) + q(1, 2))
                        * (q(f, 4) - z(floor_div(f + 5, 8)) + q(1, 2))
                },
            },
            Piece {
                label: "F≡3",
                guard: Guard::new(Some((4, 3)), vec![]),
                value: |_, f| {
                    let a = z(floor_div(f + 1, 8));
                    let c = z(floor_div(f, 12));
                    let ff = z(f);
                    q(f * f, 32) + q(7 * f, 16) - q(19, 32) + q(3, 4) * a + a * a
                        + q(1, 4) * c * ff
                        - q(9, 4) * c
                        - q(3, 2) * c * c
                        - q(1, 4) * a * ff
                },
            },
        ],
    }
}

/// The `F ≡ 1 (mod 4), F >= 21` piece; `linear` is the coefficient of `F`
/// (published `5/6`, corrected `5/16`).
fn frob_1_mod_4_large(f: i64, linear: Rational64) -> Rational64 {
    let a = z(floor_div(f + 1, 12));
    let b = z(floor_div(f + 5, 8));
    let ff = z(f);
    q(-3, 2) * a * a + q(1, 4) * a * ff - q(3, 4) * a + b * b - q(1, 4) * b * ff + q(1, 4) * b
        + linear * ff
        - q(11, 32)
        + q(f * f, 32)
}

static FROBENIUS_PUBLISHED: LazyLock<PiecewiseCount> =
    LazyLock::new(|| frobenius_pieces(Transcription::Published));
static FROBENIUS_CORRECTED: LazyLock<PiecewiseCount> =
    LazyLock::new(|| frobenius_pieces(Transcription::Corrected));

pub fn m4_frobenius_formula(variant: Transcription) -> &'static PiecewiseCount {
    match variant {
        Transcription::Published => &FROBENIUS_PUBLISHED,
        Transcription::Corrected => &FROBENIUS_CORRECTED,
    }
}

pub fn count_m4_frobenius_with(f: i64, variant: Transcription) -> Evaluation {
    m4_frobenius_formula(variant).evaluate(0, f)
}

/// Semigroups of multiplicity 4 and Frobenius number `F`.
pub fn count_m4_frobenius(f: i64) -> u64 {
    count_m4_frobenius_with(f, Transcription::Corrected)
        .as_count()
        .expect("corrected Frobenius formula is integral")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid_scan(a: Rational64, b: Rational64, c: Rational64, d: Rational64) -> i64 {
        let mut n = 0;
        for x in -20..=20 {
            for y in -20..=20 {
                let (x, y) = (z(x), z(y));
                if a <= x && x <= b && c <= y && y <= d {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn box_examples() {
        assert_eq!(box_count(z(0), z(2), z(0), z(3)), 12);
        assert_eq!(box_count(q(1, 2), q(5, 2), q(1, 2), q(1, 2)), 0);
        assert_eq!(box_count(q(21, 8), q(11, 2), q(17, 8), z(5)), 9);
        assert_eq!(grid_scan(q(21, 8), q(11, 2), q(17, 8), z(5)), 9);
        // published form disagrees already on the 3x4 grid
        assert_ne!(box_count_published(z(0), z(2), z(0), z(3)), 12);
    }

    #[test]
    fn genus_examples() {
        assert_eq!(count_m4_genus(3).unwrap(), 1);
        assert_eq!(count_m4_genus(4).unwrap(), 3);
        assert_eq!(count_m4_genus(8).unwrap(), 9);
        assert_eq!(count_m4_genus(14).unwrap(), 23);
        assert!(count_m4_genus(2).is_err());
    }

    #[test]
    fn regions_at_nine_and_twelve() {
        let r = region_counts_m4(9).unwrap();
        assert_eq!(r.total(), z(11));
        for region in Region::ALL {
            assert_eq!(r.get(region), z(scan_region(region, 9) as i64), "{region:?}");
        }
        assert_eq!(region_counts_m4(12).unwrap().total(), z(18));
        assert!(region_counts_m4(8).is_err());
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(count_m4_frobenius(5), 1);
        assert_eq!(count_m4_frobenius_with(5, Transcription::Corrected).piece, Some("F≡1, 5<=F<=9"));
        assert_eq!(count_m4_frobenius(6), 2);
        assert_eq!(count_m4_frobenius(8), 0);
        assert_eq!(count_m4_frobenius(3), 1);
        assert_eq!(count_m4_frobenius(1), 0);
        assert_eq!(count_m4_frobenius(2), 0);
    }

    #[test]
    fn published_frobenius_differs_where_expected() {
        let published = |f| count_m4_frobenius_with(f, Transcription::Published).value;
        // F ≡ 1, F >= 21 piece is not even integral with 5F/6
        assert_eq!(published(21), q(447, 16));
        assert_eq!(published(2), z(1));
        assert_eq!(published(25), z(count_m4_frobenius(25) as i64) + q(5, 6) * 25 - q(5, 16) * 25);
    }

    #[test]
    fn frobenius_guards_are_disjoint() {
        for v in [Transcription::Published, Transcription::Corrected] {
            assert!(m4_frobenius_formula(v).overlaps(1, 400).is_empty());
        }
    }
}
