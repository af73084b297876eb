use num_rational::Rational64;

use crate::polytope::Relation;

/// `a_g * g + a_f * F REL rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Atom {
    pub a_g: i64,
    pub a_f: i64,
    pub relation: Relation,
    pub rhs: i64,
}

impl Atom {
    pub fn holds(&self, g: i64, f: i64) -> bool {
        self.relation.holds(self.a_g * g + self.a_f * f, self.rhs)
    }
}

pub(crate) fn ge(a_g: i64, a_f: i64, rhs: i64) -> Atom {
    Atom {
        a_g,
        a_f,
        relation: Relation::Ge,
        rhs,
    }
}

pub(crate) fn le(a_g: i64, a_f: i64, rhs: i64) -> Atom {
    Atom {
        a_g,
        a_f,
        relation: Relation::Le,
        rhs,
    }
}

pub(crate) fn eq(a_g: i64, a_f: i64, rhs: i64) -> Atom {
    Atom {
        a_g,
        a_f,
        relation: Relation::Eq,
        rhs,
    }
}

/// Conjunction of an optional congruence on `F` and linear atoms in `(g, F)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Guard {
    /// `(modulus, residue)`: `F ≡ residue (mod modulus)`.
    pub congruence: Option<(i64, i64)>,
    pub atoms: Vec<Atom>,
}

impl Guard {
    pub fn new(congruence: Option<(i64, i64)>, atoms: Vec<Atom>) -> Self {
        Guard { congruence, atoms }
    }

    pub fn holds(&self, g: i64, f: i64) -> bool {
        if let Some((modulus, residue)) = self.congruence {
            if f.rem_euclid(modulus) != residue {
                return false;
            }
        }
        self.atoms.iter().all(|a| a.holds(g, f))
    }
}

pub type PieceValue = fn(i64, i64) -> Rational64;

pub struct Piece {
    pub label: &'static str,
    pub guard: Guard,
    pub value: PieceValue,
}

/// Value of a piecewise formula at a point, with the piece that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Evaluation {
    pub value: Rational64,
    /// `None` when no guard matched and the default 0 applies.
    pub piece: Option<&'static str>,
}

impl Evaluation {
    /// The value as a count, if it is a non-negative integer.
    pub fn as_count(&self) -> Option<u64> {
        if self.value.is_integer() && *self.value.numer() >= 0 {
            Some(*self.value.numer() as u64)
        } else {
            None
        }
    }
}

/// An ordered list of guarded closed-form pieces with default 0.
pub struct PiecewiseCount {
    pub name: &'static str,
    pub pieces: Vec<Piece>,
}

impl PiecewiseCount {
    /// First-match evaluation.
    pub fn evaluate(&self, g: i64, f: i64) -> Evaluation {
        self.pieces
            .iter()
            .find(|p| p.guard.holds(g, f))
            .map(|p| Evaluation {
                value: (p.value)(g, f),
                piece: Some(p.label),
            })
            .unwrap_or(Evaluation {
                value: Rational64::from_integer(0),
                piece: None,
            })
    }

    /// Labels of every piece whose guard holds; disjoint guards give at most one.
    pub fn matching(&self, g: i64, f: i64) -> Vec<&'static str> {
        self.pieces
            .iter()
            .filter(|p| p.guard.holds(g, f))
            .map(|p| p.label)
            .collect()
    }

    /// Points of `[1, g_max] x [1, f_max]` where two or more guards hold.
    pub fn overlaps(&self, g_max: i64, f_max: i64) -> Vec<(i64, i64, Vec<&'static str>)> {
        let mut out = Vec::new();
        for g in 1..=g_max {
            for f in 1..=f_max {
                let hits = self.matching(g, f);
                if hits.len() > 1 {
                    out.push((g, f, hits));
                }
            }
        }
        out
    }
}

pub(crate) fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

pub(crate) fn z(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}
