//! Multiplicity three.
//!
//! With `x + y = g` the polytope collapses to a segment, so every count is
//! the number of integers in an interval.

use super::Transcription;
use crate::arith::{ceil_div, floor_div};
use crate::error::{Error, Result};
use crate::semigroup::{self, KunzCoords, SemigroupDescriptor};

fn require_genus(g: i64, min: i64, what: &'static str) -> Result<()> {
    if g < min {
        return Err(Error::DomainError {
            what,
            value: g,
            domain: "g >= 2",
        });
    }
    Ok(())
}

fn require_frobenius(f: i64, what: &'static str) -> Result<()> {
    if f < 1 {
        return Err(Error::DomainError {
            what,
            value: f,
            domain: "F >= 1",
        });
    }
    if f % 3 == 0 {
        return Err(Error::FrobeniusDivisible {
            multiplicity: 3,
            frobenius: f,
        });
    }
    Ok(())
}

/// `ceil((g + 1) / 3)` semigroups of multiplicity 3 and genus `g >= 2`.
pub fn count_m3_genus(g: i64) -> Result<u64> {
    require_genus(g, 2, "count_m3_genus")?;
    Ok(ceil_div(g + 1, 3) as u64)
}

/// `ceil((g - 1) / 3)` MED semigroups of multiplicity 3 and genus `g >= 2`.
pub fn count_m3_med_genus(g: i64) -> Result<u64> {
    require_genus(g, 2, "count_m3_med_genus")?;
    Ok(ceil_div(g - 1, 3) as u64)
}

/// Semigroups of multiplicity 3 and Frobenius number `F`, `3 ∤ F`.
///
/// Published form: `floor((F+1)/3) - ceil((F-1)/6) + 1`. It drops the bound
/// `x_2 >= 1` on the free coordinate, which only binds at `F = 1` (where the
/// published form gives 1 and there is no semigroup). The corrected form
/// keeps that bound: `floor((F+1)/3) - max(1, ceil((F-1)/6)) + 1`, floored
/// at 0.
pub fn count_m3_frobenius_with(f: i64, variant: Transcription) -> Result<i64> {
    require_frobenius(f, "count_m3_frobenius")?;
    let upper = floor_div(f + 1, 3);
    let lower = ceil_div(f - 1, 6);
    Ok(match variant {
        Transcription::Published => upper - lower + 1,
        Transcription::Corrected => (upper - lower.max(1) + 1).max(0),
    })
}

pub fn count_m3_frobenius(f: i64) -> Result<u64> {
    Ok(count_m3_frobenius_with(f, Transcription::Corrected)? as u64)
}

/// `floor((F+1)/3) - ceil((F+2)/6) + 1` MED semigroups of multiplicity 3 and
/// Frobenius number `F`.
pub fn count_m3_med_frobenius(f: i64) -> Result<u64> {
    require_frobenius(f, "count_m3_med_frobenius")?;
    Ok((floor_div(f + 1, 3) - ceil_div(f + 2, 6) + 1) as u64)
}

/// The Kunz point `((F+2)/3, (3g-F-2)/3)` for `F ≡ 1` or
/// `((3g-F-1)/3, (F+1)/3)` for `F ≡ 2 (mod 3)`, when it is integral and
/// satisfies the Kunz system.
pub fn unique_m3_point(g: i64, f: i64) -> Result<Option<[i64; 2]>> {
    if f % 3 == 0 {
        return Err(Error::FrobeniusDivisible {
            multiplicity: 3,
            frobenius: f,
        });
    }
    let (a, b) = if f.rem_euclid(3) == 1 {
        (f + 2, 3 * g - f - 2)
    } else {
        (3 * g - f - 1, f + 1)
    };
    if a % 3 != 0 || b % 3 != 0 {
        return Ok(None);
    }
    let point = [a / 3, b / 3];
    if !semigroup::is_valid_kunz(3, &point)? {
        return Ok(None);
    }
    // the point must realise F as the largest Apéry element
    let top = (3 * point[0] + 1).max(3 * point[1] + 2) - 3;
    if top != f || point[0] + point[1] != g {
        return Ok(None);
    }
    Ok(Some(point))
}

/// The only semigroup of multiplicity 3 with genus `g` and Frobenius number
/// `F`, namely `<3, F + 3, 3g - F>`, or `None` when there is none.
pub fn unique_m3_semigroup(g: i64, f: i64) -> Result<Option<SemigroupDescriptor>> {
    let Some(point) = unique_m3_point(g, f)? else {
        return Ok(None);
    };
    let s = semigroup::from_generators(&[3, (f + 3) as u64, (3 * g - f) as u64])?;
    debug_assert_eq!(
        semigroup::kunz_from_semigroup(&s)?,
        KunzCoords::from_point(3, &point)?
    );
    Ok(Some(s))
}
