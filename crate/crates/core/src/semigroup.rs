//! Numerical semigroups, Apéry sets and Kunz coordinates.
//!
//! A numerical semigroup `S` of multiplicity `m` is determined by its Apéry
//! set `Ap(S, m) = {w(0) = 0, w(1), ..., w(m-1)}`, where `w(i)` is the least
//! element of `S` congruent to `i` modulo `m`. Writing `w(i) = k_i * m + i`
//! gives the Kunz coordinates `(k_1, ..., k_{m-1})`, and genus and Frobenius
//! number follow from Selmer's formulas:
//!
//! ```text
//! g(S) = (sum_i w(i)) / m - (m - 1) / 2 = sum_i k_i
//! F(S) = max_i w(i) - m
//! ```

use std::fmt;

use crate::arith::{self, gcd};
use crate::error::{Error, KunzViolation, Result};

/// Largest sieve `from_generators` is willing to allocate.
pub const SIEVE_LIMIT: u64 = 1 << 26;

/// A numerical semigroup with its derived invariants.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemigroupDescriptor {
    generators: Vec<u64>,
    multiplicity: u64,
    apery: Vec<u64>,
    genus: u64,
    frobenius: i64,
}

impl SemigroupDescriptor {
    /// The semigroup `N = <1>`.
    pub fn naturals() -> Self {
        SemigroupDescriptor {
            generators: vec![1],
            multiplicity: 1,
            apery: vec![0],
            genus: 0,
            frobenius: -1,
        }
    }

    /// Minimal generating set, ascending.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// `Ap(S, m)` indexed by residue: `apery()[i] = w(i)`.
    pub fn apery(&self) -> &[u64] {
        &self.apery
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Largest integer not in the semigroup; `-1` for `N`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Maximal embedding dimension: embedding dimension equals multiplicity.
    pub fn is_med(&self) -> bool {
        self.generators.len() as u64 == self.multiplicity
    }

    pub fn contains(&self, x: u64) -> bool {
        let m = self.multiplicity;
        x >= self.apery[(x % m) as usize]
    }

    /// The gaps of the semigroup, ascending.
    pub fn gaps(&self) -> Vec<u64> {
        if self.frobenius < 0 {
            return Vec::new();
        }
        (1..=self.frobenius as u64)
            .filter(|&x| !self.contains(x))
            .collect()
    }
}

impl fmt::Display for SemigroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// Kunz coordinates `(k_1, ..., k_{m-1})` of a semigroup of multiplicity `m`.
///
/// Construction validates every inequality of the Kunz system, so a value of
/// this type always corresponds to exactly one numerical semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KunzCoords {
    m: u64,
    k: Vec<u64>,
}

impl KunzCoords {
    pub fn new(m: u64, k: Vec<u64>) -> Result<Self> {
        let signed: Vec<i64> = k
            .iter()
            .map(|&v| i64::try_from(v).map_err(|_| Error::Overflow("Kunz coordinate")))
            .collect::<Result<_>>()?;
        match check_kunz(m, &signed)? {
            None => Ok(KunzCoords { m, k }),
            Some(v) => Err(Error::InvalidKunz(v)),
        }
    }

    /// Builds coordinates from a lattice point of a Kunz polytope.
    pub fn from_point(m: u64, point: &[i64]) -> Result<Self> {
        match check_kunz(m, point)? {
            None => Ok(KunzCoords {
                m,
                k: point.iter().map(|&v| v as u64).collect(),
            }),
            Some(v) => Err(Error::InvalidKunz(v)),
        }
    }

    pub fn multiplicity(&self) -> u64 {
        self.m
    }

    /// `k_1, ..., k_{m-1}`; index 0 holds `k_1`.
    pub fn coords(&self) -> &[u64] {
        &self.k
    }

    pub fn sum(&self) -> u64 {
        self.k.iter().sum()
    }
}

impl fmt::Display for KunzCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.k.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Checks the Kunz system for multiplicity `m`, returning the first violated
/// inequality (lower bounds first, then pairs `i <= j` in lexicographic order).
pub fn check_kunz(m: u64, k: &[i64]) -> Result<Option<KunzViolation>> {
    if m < 2 {
        return Err(Error::BadMultiplicity(m as i64));
    }
    let n = (m - 1) as usize;
    if k.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: k.len(),
        });
    }
    let m = m as usize;
    // x[i] = k_i with 1-based indexing
    let x = |i: usize| k[i - 1];
    for i in 1..m {
        if x(i) < 1 {
            return Ok(Some(KunzViolation::LowerBound { i, value: x(i) }));
        }
    }
    for i in 1..m {
        for j in i..m {
            let s = i + j;
            if s < m {
                let slack = x(i) + x(j) - x(s);
                if slack < 0 {
                    return Ok(Some(KunzViolation::Additive { i, j, slack }));
                }
            } else if s > m {
                let slack = x(i) + x(j) - x(s - m);
                if slack < -1 {
                    return Ok(Some(KunzViolation::Wrapped { i, j, slack }));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_valid_kunz(m: u64, k: &[i64]) -> Result<bool> {
    Ok(check_kunz(m, k)?.is_none())
}

/// Minimal generators from an Apéry set: `m` together with the nonzero Apéry
/// elements that are not a sum of two nonzero Apéry elements.
fn minimal_generators_from_apery(m: u64, apery: &[u64]) -> Vec<u64> {
    let nonzero: Vec<u64> = apery[1..].to_vec();
    let mut gens = vec![m];
    for &w in &nonzero {
        let decomposable = nonzero
            .iter()
            .any(|&a| a < w && nonzero.iter().any(|&b| a + b == w));
        if !decomposable {
            gens.push(w);
        }
    }
    gens.sort_unstable();
    gens
}

/// Builds the semigroup generated by `gens`.
///
/// Membership is sieved up to `(n_1 - 1)(n_k - 1) + n_1`, which covers the
/// Frobenius number (bounded by `(n_1 - 1)(n_k - 1) - 1`) plus one full
/// residue period, so every Apéry element is reached.
pub fn from_generators(gens: &[u64]) -> Result<SemigroupDescriptor> {
    if gens.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(&z) = gens.iter().find(|&&g| g == 0) {
        return Err(Error::NonPositiveGenerator(z as i64));
    }
    let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
    if d != 1 {
        return Err(Error::NonCofinite(d));
    }
    let mut sorted = gens.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let m = sorted[0];
    if m == 1 {
        return Ok(SemigroupDescriptor::naturals());
    }
    let largest = *sorted.last().expect("non-empty");
    let to_i = |v: u64| i64::try_from(v).map_err(|_| Error::Overflow("generator"));
    let bound = arith::add(
        arith::mul(to_i(m)? - 1, to_i(largest)? - 1, "sieve bound")?,
        to_i(m)?,
        "sieve bound",
    )? as u64;
    if bound > SIEVE_LIMIT {
        return Err(Error::ResourceLimit(format!(
            "membership sieve of length {bound} exceeds {SIEVE_LIMIT}"
        )));
    }
    let len = bound as usize + 1;
    let mut member = vec![false; len];
    member[0] = true;
    for x in 1..len {
        member[x] = sorted
            .iter()
            .take_while(|&&g| g as usize <= x)
            .any(|&g| member[x - g as usize]);
    }
    let genus = member[1..].iter().filter(|&&b| !b).count() as u64;
    let frobenius = (1..len).rev().find(|&x| !member[x]).map_or(-1, |x| x as i64);

    let mut apery = vec![u64::MAX; m as usize];
    let mut found = 0;
    for (x, &is_member) in member.iter().enumerate() {
        let r = x % m as usize;
        if is_member && apery[r] == u64::MAX {
            apery[r] = x as u64;
            found += 1;
            if found == m as usize {
                break;
            }
        }
    }
    debug_assert_eq!(found, m as usize, "sieve too short for the Apéry set");

    let generators = minimal_generators_from_apery(m, &apery);
    Ok(SemigroupDescriptor {
        generators,
        multiplicity: m,
        apery,
        genus,
        frobenius,
    })
}

pub fn kunz_from_semigroup(s: &SemigroupDescriptor) -> Result<KunzCoords> {
    let m = s.multiplicity;
    if m < 2 {
        return Err(Error::MultiplicityOne);
    }
    let k = (1..m as usize)
        .map(|i| (s.apery[i] - i as u64) / m)
        .collect();
    Ok(KunzCoords { m, k })
}

/// Reconstructs `S = <Ap(S, m) ∪ {m}>` from Kunz coordinates; genus and
/// Frobenius number come from Selmer's formulas on the Apéry set.
pub fn semigroup_from_kunz(c: &KunzCoords) -> Result<SemigroupDescriptor> {
    let m = c.m;
    let mi = i64::try_from(m).map_err(|_| Error::Overflow("multiplicity"))?;
    let mut apery = Vec::with_capacity(m as usize);
    apery.push(0u64);
    for (idx, &k) in c.k.iter().enumerate() {
        let i = idx as i64 + 1;
        let k = i64::try_from(k).map_err(|_| Error::Overflow("Kunz coordinate"))?;
        let w = arith::add(arith::mul(k, mi, "Apéry element")?, i, "Apéry element")?;
        apery.push(w as u64);
    }
    let total = apery
        .iter()
        .try_fold(0i64, |acc, &w| arith::add(acc, w as i64, "Apéry sum"))?;
    // g = sum(w)/m - (m-1)/2, computed exactly as (sum(w) - m(m-1)/2) / m
    let shifted = total - mi * (mi - 1) / 2;
    debug_assert_eq!(shifted % mi, 0);
    let genus = (shifted / mi) as u64;
    let frobenius = *apery.iter().max().expect("m >= 2") as i64 - mi;
    let generators = minimal_generators_from_apery(m, &apery);
    Ok(SemigroupDescriptor {
        generators,
        multiplicity: m,
        apery,
        genus,
        frobenius,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Gap set by direct trial of every linear combination below a bound.
    fn brute_gaps(gens: &[u64], bound: u64) -> Vec<u64> {
        let mut reach = vec![false; bound as usize + 1];
        reach[0] = true;
        for x in 0..=bound as usize {
            if reach[x] {
                for &g in gens {
                    if x + g as usize <= bound as usize {
                        reach[x + g as usize] = true;
                    }
                }
            }
        }
        (1..=bound).filter(|&x| !reach[x as usize]).collect()
    }

    #[test]
    fn three_five() {
        let s = from_generators(&[3, 5]).unwrap();
        assert_eq!(s.multiplicity(), 3);
        assert_eq!(s.apery(), &[0, 10, 5]);
        assert_eq!(s.genus(), 4);
        assert_eq!(s.frobenius(), 7);
        assert_eq!(s.embedding_dimension(), 2);
        assert_eq!(s.gaps(), brute_gaps(&[3, 5], 40));
    }

    #[test]
    fn naturals() {
        let s = from_generators(&[1]).unwrap();
        assert_eq!(s.multiplicity(), 1);
        assert_eq!(s.apery(), &[0]);
        assert_eq!(s.genus(), 0);
        assert_eq!(s.frobenius(), -1);
        assert_eq!(s.embedding_dimension(), 1);
        // redundant generators collapse to <1>
        assert_eq!(from_generators(&[1, 5, 7]).unwrap(), s);
    }

    #[test]
    fn four_six_seven_nine() {
        let s = from_generators(&[4, 6, 7, 9]).unwrap();
        assert_eq!((s.multiplicity(), s.genus(), s.frobenius()), (4, 4, 5));
        assert_eq!(s.embedding_dimension(), 4);
        assert_eq!(s.gaps(), vec![1, 2, 3, 5]);
        assert!(s.is_med());
    }

    #[test]
    fn generators_are_minimalized() {
        let s = from_generators(&[3, 8, 4]).unwrap();
        assert_eq!(s.generators(), &[3, 4]);
        let s = from_generators(&[10, 5, 3, 5]).unwrap();
        assert_eq!(s.generators(), &[3, 5]);
    }

    #[test]
    fn from_generators_errors() {
        assert_eq!(from_generators(&[]), Err(Error::EmptyInput));
        assert_eq!(from_generators(&[4, 6]), Err(Error::NonCofinite(2)));
        assert_eq!(from_generators(&[0, 3]), Err(Error::NonPositiveGenerator(0)));
        assert!(matches!(
            from_generators(&[100_000, 100_001]),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn kunz_of_examples() {
        let c = kunz_from_semigroup(&from_generators(&[3, 5]).unwrap()).unwrap();
        assert_eq!((c.multiplicity(), c.coords()), (3, &[3u64, 1][..]));
        // <g+1, ..., 2g+1> with g = 3
        let c = kunz_from_semigroup(&from_generators(&[4, 5, 6, 7]).unwrap()).unwrap();
        assert_eq!(c.coords(), &[1, 1, 1]);
        let c = kunz_from_semigroup(&from_generators(&[4, 6, 7, 9]).unwrap()).unwrap();
        assert_eq!(c.coords(), &[2, 1, 1]);
        assert_eq!(
            kunz_from_semigroup(&SemigroupDescriptor::naturals()),
            Err(Error::MultiplicityOne)
        );
    }

    #[test]
    fn semigroup_of_kunz_examples() {
        let s = semigroup_from_kunz(&KunzCoords::new(3, vec![3, 1]).unwrap()).unwrap();
        assert_eq!(s.generators(), &[3, 5]);
        assert_eq!((s.genus(), s.frobenius()), (4, 7));
        let s = semigroup_from_kunz(&KunzCoords::new(3, vec![1, 1]).unwrap()).unwrap();
        assert_eq!(s.generators(), &[3, 4, 5]);
        assert_eq!((s.genus(), s.frobenius()), (2, 2));
        let s = semigroup_from_kunz(&KunzCoords::new(4, vec![2, 1, 1]).unwrap()).unwrap();
        assert_eq!(s.apery(), &[0, 9, 6, 7]);
        assert_eq!((s.genus(), s.frobenius()), (4, 5));
        assert_eq!(s, from_generators(&[4, 6, 7, 9]).unwrap());
    }

    #[test]
    fn kunz_validity() {
        assert!(is_valid_kunz(4, &[1, 1, 1]).unwrap());
        assert_eq!(
            check_kunz(4, &[1, 3, 1]).unwrap(),
            Some(KunzViolation::Additive { i: 1, j: 1, slack: -1 })
        );
        assert_eq!(
            check_kunz(3, &[0, 5]).unwrap(),
            Some(KunzViolation::LowerBound { i: 1, value: 0 })
        );
        assert_eq!(
            is_valid_kunz(4, &[1, 1]),
            Err(Error::DimensionMismatch { expected: 3, actual: 2 })
        );
        // k_3 + k_3 - k_2 = 1 + 1 - 4 = -2
        assert_eq!(
            check_kunz(4, &[2, 4, 1]).unwrap(),
            Some(KunzViolation::Wrapped { i: 3, j: 3, slack: -2 })
        );
        assert!(matches!(
            KunzCoords::new(4, vec![1, 3, 1]),
            Err(Error::InvalidKunz(KunzViolation::Additive { .. }))
        ));
    }

    #[test]
    fn pairs_summing_to_m_are_unconstrained() {
        // m = 4: (1,3) and (2,2) sum to 4 and carry no inequality;
        // k = (1,3,2) satisfies every printed row
        assert!(is_valid_kunz(4, &[1, 2, 2]).unwrap());
        let s = semigroup_from_kunz(&KunzCoords::new(4, vec![1, 2, 2]).unwrap()).unwrap();
        assert_eq!(s.gaps(), brute_gaps(s.generators(), 60));
    }
}
