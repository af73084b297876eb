//! Count queries and census tables over the three sources.

use std::fmt;

use crate::closed_forms as cf;
use crate::error::{Error, Result};
use crate::oracle::{self, Filter, OracleConfig};
use crate::polytope::{self, LinearSystem};
use crate::semigroup::{self, KunzCoords, SemigroupDescriptor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    /// Closed form when one applies, otherwise the polytope.
    Auto,
    Polytope,
    Formula,
    Oracle,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Auto => "auto",
            Source::Polytope => "polytope",
            Source::Formula => "formula",
            Source::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CountQuery {
    pub multiplicity: i64,
    pub genus: Option<i64>,
    pub frobenius: Option<i64>,
    pub med: bool,
}

impl CountQuery {
    pub fn genus(m: i64, g: i64) -> Self {
        CountQuery {
            multiplicity: m,
            genus: Some(g),
            frobenius: None,
            med: false,
        }
    }

    pub fn frobenius(m: i64, f: i64) -> Self {
        CountQuery {
            multiplicity: m,
            genus: None,
            frobenius: Some(f),
            med: false,
        }
    }

    pub fn with_genus(self, g: i64) -> Self {
        CountQuery {
            genus: Some(g),
            ..self
        }
    }

    pub fn with_frobenius(self, f: i64) -> Self {
        CountQuery {
            frobenius: Some(f),
            ..self
        }
    }

    pub fn med(self) -> Self {
        CountQuery { med: true, ..self }
    }

    /// Multiples of `m` are never Frobenius numbers.
    fn divisible(&self) -> bool {
        self.frobenius
            .is_some_and(|f| self.multiplicity >= 2 && f.rem_euclid(self.multiplicity) == 0)
    }

    pub fn system(&self) -> Result<LinearSystem> {
        let mut sys = if self.med {
            polytope::med_system(self.multiplicity)?
        } else {
            polytope::kunz_system(self.multiplicity)?
        };
        if let Some(g) = self.genus {
            sys = sys.add_genus_cut(g)?;
        }
        if let Some(f) = self.frobenius {
            sys = sys.add_frobenius_cut(f)?;
        }
        Ok(sys)
    }
}

impl fmt::Display for CountQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={}", self.multiplicity)?;
        if let Some(g) = self.genus {
            write!(f, " g={g}")?;
        }
        if let Some(fr) = self.frobenius {
            write!(f, " F={fr}")?;
        }
        if self.med {
            f.write_str(" med")?;
        }
        Ok(())
    }
}

/// Lattice point count of the query's polytope. Frobenius numbers divisible
/// by `m` count 0.
pub fn polytope_count(q: &CountQuery) -> Result<u64> {
    if q.divisible() {
        return Ok(0);
    }
    polytope::count_lattice_points(&q.system()?)
}

/// Closed-form count, or `None` when no formula covers the query.
pub fn formula_count(q: &CountQuery) -> Result<Option<u64>> {
    match closed_form(q) {
        Err(Error::FrobeniusDivisible { .. }) => Ok(Some(0)),
        r => r,
    }
}

fn closed_form(q: &CountQuery) -> Result<Option<u64>> {
    let (m, med) = (q.multiplicity, q.med);
    let v = match (m, q.genus, q.frobenius) {
        (3, Some(g), None) if med => cf::count_m3_med_genus(g)?,
        (3, Some(g), None) => cf::count_m3_genus(g)?,
        (3, None, Some(f)) if med => cf::count_m3_med_frobenius(f)?,
        (3, None, Some(f)) => cf::count_m3_frobenius(f)?,
        (3, Some(g), Some(f)) if !med => {
            if f % 3 == 0 {
                0
            } else {
                u64::from(cf::unique_m3_point(g, f)?.is_some())
            }
        }
        (4, Some(g), None) if !med => cf::count_m4_genus(g)?,
        (4, None, Some(f)) if !med => {
            if f < 1 {
                return Err(Error::DomainError {
                    what: "count_m4_frobenius",
                    value: f,
                    domain: "F >= 1",
                });
            }
            cf::count_m4_frobenius(f)
        }
        (4, Some(g), Some(f)) if g < 3 || f < 3 => {
            return Err(Error::DomainError {
                what: "count_m4_genus_frobenius",
                value: g.min(f),
                domain: "g >= 3 and F >= 3",
            })
        }
        (4, Some(g), Some(f)) if med => cf::count_m4_med_genus_frobenius(g, f),
        (4, Some(g), Some(f)) => cf::count_m4_genus_frobenius(g, f),
        _ => return Ok(None),
    };
    Ok(Some(v))
}

/// Oracle semigroups matching the query, in canonical order.
pub fn oracle_semigroups(q: &CountQuery, config: &OracleConfig) -> Result<Vec<SemigroupDescriptor>> {
    if q.multiplicity < 2 {
        return Err(Error::BadMultiplicity(q.multiplicity));
    }
    let filter = Filter {
        multiplicity: Some(q.multiplicity as u64),
        frobenius: q.frobenius,
        med: q.med,
    };
    // the gaps of S lie in [1, F] and F <= 2g - 1
    let genera: Vec<u64> = match (q.genus, q.frobenius) {
        (Some(g), _) if g < 0 => vec![],
        (Some(g), _) => vec![g as u64],
        (None, Some(f)) if f < 1 => vec![],
        (None, Some(f)) => ((f as u64).div_ceil(2)..=f as u64).collect(),
        (None, None) => return Err(Error::Unbounded),
    };
    let Some(&top) = genera.last() else {
        return Ok(vec![]);
    };
    let levels = oracle::enumerate_by_genus(top, config)?;
    Ok(genera
        .iter()
        .flat_map(|g| levels[g].filtered(&filter).cloned().collect::<Vec<_>>())
        .collect())
}

pub fn oracle_count(q: &CountQuery, config: &OracleConfig) -> Result<u64> {
    Ok(oracle_semigroups(q, config)?.len() as u64)
}

/// Count from the requested source. Returns the source actually used.
pub fn count(q: &CountQuery, source: Source, config: &OracleConfig) -> Result<(u64, Source)> {
    match source {
        Source::Polytope => Ok((polytope_count(q)?, Source::Polytope)),
        Source::Oracle => Ok((oracle_count(q, config)?, Source::Oracle)),
        Source::Formula => match formula_count(q)? {
            Some(v) => Ok((v, Source::Formula)),
            None => Err(Error::DomainError {
                what: "closed form",
                value: q.multiplicity,
                domain: "m = 3 or m = 4 with a covered combination of cuts",
            }),
        },
        Source::Auto => match formula_count(q) {
            Ok(Some(v)) => Ok((v, Source::Formula)),
            _ => Ok((polytope_count(q)?, Source::Polytope)),
        },
    }
}

/// A semigroup with its Kunz coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Listed {
    pub kunz: KunzCoords,
    pub semigroup: SemigroupDescriptor,
}

/// The semigroups of the query in lexicographic Kunz order.
pub fn list(q: &CountQuery, source: Source, config: &OracleConfig) -> Result<Vec<Listed>> {
    match source {
        Source::Oracle => {
            let mut out = oracle_semigroups(q, config)?
                .into_iter()
                .map(|s| {
                    Ok(Listed {
                        kunz: semigroup::kunz_from_semigroup(&s)?,
                        semigroup: s,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            out.sort_by(|a, b| a.kunz.coords().cmp(b.kunz.coords()));
            Ok(out)
        }
        Source::Formula => Err(Error::DomainError {
            what: "list",
            value: q.multiplicity,
            domain: "polytope or oracle source",
        }),
        Source::Auto | Source::Polytope => {
            if q.divisible() {
                return Ok(vec![]);
            }
            let m = q.multiplicity as u64;
            polytope::enumerate_lattice_points(&q.system()?)?
                .map(|p| {
                    let kunz = KunzCoords::from_point(m, &p)?;
                    Ok(Listed {
                        semigroup: semigroup::semigroup_from_kunz(&kunz)?,
                        kunz,
                    })
                })
                .collect()
        }
    }
}

/// One census row: counts for `m = 2..=max_genus+1` (0 where `m > g+1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub g: u64,
    pub counts: Vec<u64>,
    pub total: u64,
}

/// Rows `g = 1..=max_genus` by genus and multiplicity, all or MED only.
pub fn census_table(
    max_genus: u64,
    med: bool,
    source: Source,
    config: &OracleConfig,
) -> Result<Vec<CensusRow>> {
    let width = max_genus as usize;
    match source {
        Source::Oracle => {
            let levels = oracle::enumerate_by_genus(max_genus, config)?;
            Ok((1..=max_genus)
                .map(|g| {
                    let mut counts = vec![0; width];
                    for s in &levels[&g].semigroups {
                        if !med || s.is_med() {
                            counts[s.multiplicity() as usize - 2] += 1;
                        }
                    }
                    let total = counts.iter().sum();
                    CensusRow { g, counts, total }
                })
                .collect())
        }
        Source::Formula => Err(Error::DomainError {
            what: "table",
            value: max_genus as i64,
            domain: "polytope or oracle source",
        }),
        Source::Auto | Source::Polytope => (1..=max_genus)
            .map(|g| {
                let mut counts = vec![0; width];
                for m in 2..=g + 1 {
                    let mut q = CountQuery::genus(m as i64, g as i64);
                    q.med = med;
                    counts[m as usize - 2] = polytope_count(&q)?;
                }
                let total = counts.iter().sum();
                Ok(CensusRow { g, counts, total })
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sources_agree_on_small_queries() {
        let config = OracleConfig::default();
        let q = CountQuery::genus(4, 9);
        assert_eq!(count(&q, Source::Polytope, &config).unwrap(), (11, Source::Polytope));
        assert_eq!(count(&q, Source::Formula, &config).unwrap().0, 11);
        assert_eq!(count(&q, Source::Oracle, &config).unwrap().0, 11);
        assert_eq!(count(&q, Source::Auto, &config).unwrap(), (11, Source::Formula));
        let q = CountQuery::genus(4, 8).med();
        assert_eq!(count(&q, Source::Auto, &config).unwrap(), (5, Source::Polytope));
        assert_eq!(count(&q, Source::Oracle, &config).unwrap().0, 5);
        assert!(count(&q, Source::Formula, &config).is_err());
    }

    #[test]
    fn frobenius_only_oracle() {
        let config = OracleConfig::default();
        for f in 1..=11 {
            let q = CountQuery::frobenius(3, f);
            assert_eq!(
                oracle_count(&q, &config).unwrap(),
                polytope_count(&q).unwrap(),
                "F={f}"
            );
        }
    }

    #[test]
    fn listing() {
        let config = OracleConfig::default();
        let q = CountQuery::frobenius(3, 7);
        let listed = list(&q, Source::Polytope, &config).unwrap();
        let gens: Vec<&[u64]> = listed.iter().map(|l| l.semigroup.generators()).collect();
        assert_eq!(gens, vec![&[3, 5][..], &[3, 8, 10][..]]);
        assert_eq!(list(&q, Source::Oracle, &config).unwrap(), listed);
        assert!(list(&CountQuery::frobenius(3, 6), Source::Polytope, &config)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn small_tables() {
        let config = OracleConfig::default();
        let rows = census_table(3, false, Source::Polytope, &config).unwrap();
        let totals: Vec<u64> = rows.iter().map(|r| r.total).collect();
        assert_eq!(totals, vec![1, 2, 4]);
        assert_eq!(rows[0].counts, vec![1, 0, 0]);
        assert_eq!(census_table(3, false, Source::Oracle, &config).unwrap(), rows);
        let med = census_table(8, true, Source::Polytope, &config).unwrap();
        assert_eq!(med[7].total, 21);
    }
}
