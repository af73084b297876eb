use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Ge,
    Eq,
    Le,
}

impl Relation {
    pub fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Ge => lhs >= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Le => lhs <= rhs,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Ge => ">=",
            Relation::Eq => "=",
            Relation::Le => "<=",
        })
    }
}

/// `coeffs · x REL rhs` over integer variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearConstraint {
    coeffs: Vec<i64>,
    rhs: i64,
    relation: Relation,
}

impl LinearConstraint {
    /// Panics if every coefficient is zero.
    pub fn new(coeffs: Vec<i64>, relation: Relation, rhs: i64) -> Self {
        assert!(
            coeffs.iter().any(|&c| c != 0),
            "constraint with all-zero coefficients"
        );
        LinearConstraint {
            coeffs,
            rhs,
            relation,
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn rhs(&self) -> i64 {
        self.rhs
    }

    pub fn relation(&self) -> Relation {
        self.relation
    }

    pub fn lhs(&self, x: &[i64]) -> i64 {
        self.coeffs.iter().zip(x).map(|(c, v)| c * v).sum()
    }

    pub fn is_satisfied(&self, x: &[i64]) -> bool {
        self.relation.holds(self.lhs(x), self.rhs)
    }

    /// The single variable this row mentions, with its coefficient.
    pub(crate) fn single_variable(&self) -> Option<(usize, i64)> {
        let mut it = self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0);
        let first = it.next()?;
        match it.next() {
            None => Some((first.0, *first.1)),
            Some(_) => None,
        }
    }
}

impl fmt::Display for LinearConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.coeffs {
            write!(f, "{c} ")?;
        }
        write!(f, "{} {}", self.relation, self.rhs)
    }
}

/// Which base system a [`LinearSystem`] was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SystemKind {
    /// All numerical semigroups of the multiplicity.
    Kunz,
    /// Maximal embedding dimension semigroups.
    Med,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SystemLabel {
    pub kind: SystemKind,
    pub multiplicity: i64,
    pub genus: Option<i64>,
    pub frobenius: Option<i64>,
}

impl fmt::Display for SystemLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            SystemKind::Kunz => "kunz",
            SystemKind::Med => "med",
        };
        write!(f, "{kind} m={}", self.multiplicity)?;
        if let Some(g) = self.genus {
            write!(f, " g={g}")?;
        }
        if let Some(fr) = self.frobenius {
            write!(f, " F={fr}")?;
        }
        Ok(())
    }
}

/// Inequality system over the `m - 1` Kunz variables `x_1, ..., x_{m-1}`
/// (stored at indices `0..m-1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    n: usize,
    constraints: Vec<LinearConstraint>,
    label: SystemLabel,
}

impl LinearSystem {
    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }

    pub fn label(&self) -> SystemLabel {
        self.label
    }

    pub fn multiplicity(&self) -> i64 {
        self.label.multiplicity
    }

    pub fn is_satisfied(&self, x: &[i64]) -> bool {
        x.len() == self.n && self.constraints.iter().all(|c| c.is_satisfied(x))
    }

    fn push(&mut self, coeffs: Vec<i64>, relation: Relation, rhs: i64) {
        debug_assert_eq!(coeffs.len(), self.n);
        self.constraints
            .push(LinearConstraint::new(coeffs, relation, rhs));
    }

    /// Appends `x_1 + ... + x_{m-1} = g`.
    pub fn add_genus_cut(mut self, g: i64) -> Result<Self> {
        if self.label.genus.is_some() {
            return Err(Error::DuplicateCut("genus"));
        }
        self.push(vec![1; self.n], Relation::Eq, g);
        self.label.genus = Some(g);
        Ok(self)
    }

    /// Appends `m x_i + i <= F + m` for every `i` and
    /// `m x_{k*} + k* = F + m` with `k* = F mod m`.
    pub fn add_frobenius_cut(mut self, frobenius: i64) -> Result<Self> {
        if self.label.frobenius.is_some() {
            return Err(Error::DuplicateCut("Frobenius"));
        }
        let m = self.label.multiplicity;
        let k_star = frobenius.rem_euclid(m);
        if k_star == 0 {
            return Err(Error::FrobeniusDivisible {
                multiplicity: m,
                frobenius,
            });
        }
        let top = frobenius
            .checked_add(m)
            .ok_or(Error::Overflow("Frobenius cut"))?;
        for i in 1..m {
            let mut coeffs = vec![0; self.n];
            coeffs[(i - 1) as usize] = m;
            self.push(coeffs, Relation::Le, top - i);
        }
        let mut coeffs = vec![0; self.n];
        coeffs[(k_star - 1) as usize] = m;
        self.push(coeffs, Relation::Eq, top - k_star);
        self.label.frobenius = Some(frobenius);
        Ok(self)
    }
}

impl fmt::Display for LinearSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.constraints {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Rows shared by the Kunz and MED systems, with right-hand sides `local`
/// for pairs `i + j < m` and `wrapped` for pairs `i + j > m`. Pairs with
/// `i + j = m` produce no row.
fn base_system(m: i64, kind: SystemKind, local: i64, wrapped: i64) -> Result<LinearSystem> {
    if m < 2 {
        return Err(Error::BadMultiplicity(m));
    }
    let n = (m - 1) as usize;
    let mut sys = LinearSystem {
        n,
        constraints: Vec::new(),
        label: SystemLabel {
            kind,
            multiplicity: m,
            genus: None,
            frobenius: None,
        },
    };
    for i in 0..n {
        let mut coeffs = vec![0; n];
        coeffs[i] = 1;
        sys.push(coeffs, Relation::Ge, 1);
    }
    let m = m as usize;
    for i in 1..m {
        for j in i..m {
            let s = i + j;
            if s == m {
                continue;
            }
            let (target, rhs) = if s < m { (s, local) } else { (s - m, wrapped) };
            let mut coeffs = vec![0; n];
            coeffs[i - 1] += 1;
            coeffs[j - 1] += 1;
            coeffs[target - 1] -= 1;
            sys.push(coeffs, Relation::Ge, rhs);
        }
    }
    Ok(sys)
}

/// The Kunz system with no cut: lattice points are all semigroups of
/// multiplicity `m`.
pub fn kunz_system(m: i64) -> Result<LinearSystem> {
    base_system(m, SystemKind::Kunz, 0, -1)
}

/// Semigroups of multiplicity `m` and genus `g`.
pub fn genus_system(m: i64, g: i64) -> Result<LinearSystem> {
    kunz_system(m)?.add_genus_cut(g)
}

/// Semigroups of multiplicity `m` and Frobenius number `frobenius`.
pub fn frobenius_system(m: i64, frobenius: i64) -> Result<LinearSystem> {
    kunz_system(m)?.add_frobenius_cut(frobenius)
}

/// Maximal embedding dimension semigroups of multiplicity `m`; unbounded
/// until a cut is added.
pub fn med_system(m: i64) -> Result<LinearSystem> {
    base_system(m, SystemKind::Med, 1, 0)
}
