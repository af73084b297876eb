//! Numerical semigroups by genus, from the semigroup tree.
//!
//! The children of `S` are `S \ {n}` for the minimal generators `n > F(S)`.
//! Nodes carry their own membership table; nothing here goes through Kunz
//! coordinates or the polytope search.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::semigroup::{self, SemigroupDescriptor};

pub const CACHE_ENV: &str = "KUNZCOUNT_CACHE";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_genus: u64,
    pub max_level_size: Option<usize>,
    /// Directory of `genus-{g}.txt` level files, read and written when set.
    pub cache_dir: Option<PathBuf>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_genus: 18,
            max_level_size: None,
            cache_dir: None,
        }
    }
}

impl OracleConfig {
    /// Default limits, with the cache directory taken from `KUNZCOUNT_CACHE`.
    pub fn from_env() -> Self {
        OracleConfig {
            cache_dir: std::env::var_os(CACHE_ENV).map(PathBuf::from),
            ..OracleConfig::default()
        }
    }
}

/// All numerical semigroups of genus `g`, sorted by generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusLevel {
    pub g: u64,
    pub semigroups: Vec<SemigroupDescriptor>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Filter {
    pub multiplicity: Option<u64>,
    pub frobenius: Option<i64>,
    /// Keep only semigroups whose embedding dimension equals the multiplicity.
    pub med: bool,
}

impl Filter {
    pub fn matches(&self, s: &SemigroupDescriptor) -> bool {
        self.multiplicity.is_none_or(|m| s.multiplicity() == m)
            && self.frobenius.is_none_or(|f| s.frobenius() == f)
            && (!self.med || s.is_med())
    }
}

impl GenusLevel {
    pub fn len(&self) -> usize {
        self.semigroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.semigroups.is_empty()
    }

    pub fn count_filtered(&self, filter: &Filter) -> u64 {
        self.semigroups.iter().filter(|s| filter.matches(s)).count() as u64
    }

    pub fn filtered<'a>(&'a self, filter: &'a Filter) -> impl Iterator<Item = &'a SemigroupDescriptor> {
        self.semigroups.iter().filter(move |s| filter.matches(s))
    }
}

/// A tree node: membership of `0..=F+m`; everything above is in `S`.
#[derive(Debug, Clone)]
struct Node {
    member: Vec<bool>,
    frobenius: i64,
}

impl Node {
    fn root() -> Self {
        Node {
            member: vec![true, true],
            frobenius: -1,
        }
    }

    fn from_descriptor(s: &SemigroupDescriptor) -> Self {
        let top = (s.frobenius() + s.multiplicity() as i64) as u64;
        Node {
            member: (0..=top).map(|x| s.contains(x)).collect(),
            frobenius: s.frobenius(),
        }
    }

    fn contains(&self, x: usize) -> bool {
        x >= self.member.len() || self.member[x]
    }

    fn is_minimal_generator(&self, n: usize) -> bool {
        self.contains(n) && (1..=n / 2).all(|a| !(self.contains(a) && self.contains(n - a)))
    }

    fn minimal_generators(&self) -> Vec<u64> {
        let m = (1..).find(|&x| self.contains(x)).unwrap();
        // every minimal generator lies in [m, F + m]
        let top = (self.frobenius + m as i64) as usize;
        (m..=top.max(m))
            .filter(|&n| self.is_minimal_generator(n))
            .map(|n| n as u64)
            .collect()
    }

    fn children(&self) -> Vec<Node> {
        let lo = (self.frobenius + 1) as usize;
        let mut out = Vec::new();
        for n in self.minimal_generators() {
            let n = n as usize;
            if n < lo {
                continue;
            }
            let mut member: Vec<bool> = (0..=n).map(|x| self.contains(x)).collect();
            member[n] = false;
            let m = (1..).find(|&x| x > n || member[x]).unwrap();
            member.extend(std::iter::repeat_n(true, m));
            out.push(Node {
                member,
                frobenius: n as i64,
            });
        }
        out
    }

    fn descriptor(&self) -> Result<SemigroupDescriptor> {
        semigroup::from_generators(&self.minimal_generators())
    }
}

/// Children of `s` in the semigroup tree.
pub fn children(s: &SemigroupDescriptor) -> Result<Vec<SemigroupDescriptor>> {
    Node::from_descriptor(s)
        .children()
        .iter()
        .map(Node::descriptor)
        .collect()
}

/// Breadth-first walk of the tree yielding one genus level at a time. Only
/// the current frontier is held in memory.
pub struct SemigroupTree {
    config: OracleConfig,
    next_genus: u64,
    frontier: Vec<Node>,
}

impl SemigroupTree {
    pub fn new(config: OracleConfig) -> Self {
        SemigroupTree {
            config,
            next_genus: 0,
            frontier: vec![Node::root()],
        }
    }

    fn seal(&self, g: u64, nodes: &[Node]) -> Result<GenusLevel> {
        let mut semigroups = nodes
            .par_iter()
            .map(Node::descriptor)
            .collect::<Result<Vec<_>>>()?;
        semigroups.par_sort_unstable_by(|a, b| a.generators().cmp(b.generators()));
        debug_assert!(semigroups.windows(2).all(|w| w[0] != w[1]));
        Ok(GenusLevel { g, semigroups })
    }

    fn advance(&mut self) -> Result<GenusLevel> {
        let g = self.next_genus;
        if g > self.config.max_genus {
            return Err(Error::ResourceLimit(format!(
                "genus {g} exceeds the oracle cap {}",
                self.config.max_genus
            )));
        }
        if g > 0 {
            let cached = match &self.config.cache_dir {
                Some(dir) => read_level(dir, g)?,
                None => None,
            };
            self.frontier = match cached {
                Some(level) => level.semigroups.iter().map(Node::from_descriptor).collect(),
                None => self.frontier.par_iter().flat_map_iter(Node::children).collect(),
            };
        }
        if let Some(cap) = self.config.max_level_size {
            if self.frontier.len() > cap {
                return Err(Error::ResourceLimit(format!(
                    "genus {g} level has {} semigroups, cap is {cap}",
                    self.frontier.len()
                )));
            }
        }
        let level = self.seal(g, &self.frontier)?;
        if let Some(dir) = &self.config.cache_dir {
            if !level_path(dir, g).exists() {
                write_level(dir, &level)?;
            }
        }
        self.next_genus += 1;
        Ok(level)
    }
}

impl Iterator for SemigroupTree {
    type Item = Result<GenusLevel>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next_genus > self.config.max_genus {
            return None;
        }
        Some(self.advance())
    }
}

/// Levels `0..=g_max`.
pub fn enumerate_by_genus(g_max: u64, config: &OracleConfig) -> Result<BTreeMap<u64, GenusLevel>> {
    if g_max > config.max_genus {
        return Err(Error::ResourceLimit(format!(
            "genus {g_max} exceeds the oracle cap {}",
            config.max_genus
        )));
    }
    let config = OracleConfig {
        max_genus: g_max,
        ..config.clone()
    };
    SemigroupTree::new(config)
        .map(|level| level.map(|l| (l.g, l)))
        .collect()
}

/// The single level `g`.
pub fn level(g: u64, config: &OracleConfig) -> Result<GenusLevel> {
    let mut levels = enumerate_by_genus(g, config)?;
    Ok(levels.remove(&g).expect("last level present"))
}

pub fn count_filtered(g: u64, filter: &Filter, config: &OracleConfig) -> Result<u64> {
    Ok(level(g, config)?.count_filtered(filter))
}

fn level_path(dir: &Path, g: u64) -> PathBuf {
    dir.join(format!("genus-{g}.txt"))
}

fn cache_err(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::Cache(format!("{}: {e}", path.display()))
}

/// Writes `g m F n1,n2,...` per semigroup.
pub fn write_level(dir: &Path, level: &GenusLevel) -> Result<()> {
    let path = level_path(dir, level.g);
    fs::create_dir_all(dir).map_err(|e| cache_err(dir, e))?;
    let tmp = path.with_extension("tmp");
    let file = fs::File::create(&tmp).map_err(|e| cache_err(&tmp, e))?;
    let mut out = BufWriter::new(file);
    for s in &level.semigroups {
        let gens: Vec<String> = s.generators().iter().map(u64::to_string).collect();
        writeln!(
            out,
            "{} {} {} {}",
            s.genus(),
            s.multiplicity(),
            s.frobenius(),
            gens.join(",")
        )
        .map_err(|e| cache_err(&tmp, e))?;
    }
    out.flush().map_err(|e| cache_err(&tmp, e))?;
    drop(out);
    fs::rename(&tmp, &path).map_err(|e| cache_err(&path, e))
}

/// Reads a cached level, checking every line against the recomputed
/// invariants. `None` when the file does not exist.
pub fn read_level(dir: &Path, g: u64) -> Result<Option<GenusLevel>> {
    let path = level_path(dir, g);
    let file = match fs::File::open(&path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(cache_err(&path, e)),
    };
    let mut semigroups = Vec::new();
    for (no, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| cache_err(&path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let bad = |what: &str| cache_err(&path, format!("line {}: {what}", no + 1));
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [genus, m, f, gens] = fields[..] else {
            return Err(bad("expected 4 fields"));
        };
        let gens = gens
            .split(',')
            .map(str::parse::<u64>)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad("bad generator list"))?;
        let s = semigroup::from_generators(&gens)?;
        if genus.parse() != Ok(g)
            || s.genus() != g
            || m.parse() != Ok(s.multiplicity())
            || f.parse() != Ok(s.frobenius())
            || s.generators() != gens.as_slice()
        {
            return Err(bad("invariants do not match the generators"));
        }
        semigroups.push(s);
    }
    semigroups.sort_unstable_by(|a, b| a.generators().cmp(b.generators()));
    Ok(Some(GenusLevel { g, semigroups }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(s: &[SemigroupDescriptor]) -> Vec<Vec<u64>> {
        s.iter().map(|s| s.generators().to_vec()).collect()
    }

    #[test]
    fn children_examples() {
        let n = SemigroupDescriptor::naturals();
        assert_eq!(gens(&children(&n).unwrap()), vec![vec![2, 3]]);
        let s = semigroup::from_generators(&[2, 3]).unwrap();
        let mut c = gens(&children(&s).unwrap());
        c.sort();
        assert_eq!(c, vec![vec![2, 5], vec![3, 4, 5]]);
        let s = semigroup::from_generators(&[3, 4, 5]).unwrap();
        let mut c = gens(&children(&s).unwrap());
        c.sort();
        assert_eq!(c, vec![vec![3, 4], vec![3, 5, 7], vec![4, 5, 6, 7]]);
    }

    #[test]
    fn level_sizes() {
        let levels = enumerate_by_genus(7, &OracleConfig::default()).unwrap();
        let sizes: Vec<usize> = levels.values().map(GenusLevel::len).collect();
        assert_eq!(sizes, vec![1, 1, 2, 4, 7, 12, 23, 39]);
        assert_eq!(gens(&levels[&0].semigroups), vec![vec![1]]);
        assert_eq!(gens(&levels[&2].semigroups), vec![vec![2, 5], vec![3, 4, 5]]);
        for (g, level) in &levels {
            assert!(level.semigroups.iter().all(|s| s.genus() == *g));
        }
    }

    #[test]
    fn filters() {
        let config = OracleConfig::default();
        let twelve = level(12, &config).unwrap();
        let m9 = Filter {
            multiplicity: Some(9),
            ..Filter::default()
        };
        assert_eq!(twelve.count_filtered(&m9), 116);
        let med5 = Filter {
            multiplicity: Some(5),
            med: true,
            ..Filter::default()
        };
        assert_eq!(count_filtered(10, &med5, &config).unwrap(), 8);
        let five = level(5, &config).unwrap();
        let f9 = Filter {
            frobenius: Some(9),
            ..Filter::default()
        };
        assert_eq!(
            gens(&five.filtered(&f9).cloned().collect::<Vec<_>>()),
            vec![vec![2, 11], vec![4, 6, 7], vec![5, 6, 7, 8]]
        );
    }

    #[test]
    fn caps() {
        let config = OracleConfig {
            max_genus: 4,
            ..OracleConfig::default()
        };
        assert!(matches!(enumerate_by_genus(5, &config), Err(Error::ResourceLimit(_))));
        let config = OracleConfig {
            max_level_size: Some(10),
            ..OracleConfig::default()
        };
        assert!(matches!(enumerate_by_genus(6, &config), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("kunzcount-oracle-{}", std::process::id()));
        let config = OracleConfig {
            cache_dir: Some(dir.clone()),
            ..OracleConfig::default()
        };
        let first = enumerate_by_genus(6, &config).unwrap();
        assert!(level_path(&dir, 6).exists());
        let again = enumerate_by_genus(6, &config).unwrap();
        assert_eq!(first, again);
        let text = fs::read_to_string(level_path(&dir, 2)).unwrap();
        assert_eq!(text, "2 2 3 2,5\n2 3 2 3,4,5\n");
        fs::write(level_path(&dir, 3), "3 4 9 4,5\n").unwrap();
        assert!(matches!(read_level(&dir, 3), Err(Error::Cache(_))));
        fs::remove_dir_all(&dir).unwrap();
    }
}
