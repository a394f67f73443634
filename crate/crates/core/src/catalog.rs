//! Classification of irreducible representations of simple groups with a
//! free algebra of invariants, with the expected shape of their nullcones.
//!
//! The data lives in `data/catalog.toml` and is embedded at compile time.
//! Families indexed by the rank are instantiated up to a chosen bound.

use std::fmt;
use std::str::FromStr;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::rootsystem::{RootDatum, RootSystemType, Series};
use crate::weightsys::weyl_dim;

/// The catalog file as shipped.
pub const CATALOG_TOML: &str = include_str!("../data/catalog.toml");

/// Rank bound used when none is given.
pub const DEFAULT_MAX_RANK: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Deserialize)]
pub enum ListId {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    Ii,
    #[serde(rename = "iii")]
    Iii,
    #[serde(rename = "iv")]
    Iv,
    #[serde(rename = "v")]
    V,
}

impl fmt::Display for ListId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ListId::I => "i",
            ListId::Ii => "ii",
            ListId::Iii => "iii",
            ListId::Iv => "iv",
            ListId::V => "v",
        })
    }
}

/// Transcendence degree of the invariant algebra, as far as it is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrdegClass {
    Zero,
    One,
    /// Adjoint modules: the rank.
    Rank,
    Other,
}

impl fmt::Display for TrdegClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TrdegClass::Zero => "zero",
            TrdegClass::One => "one",
            TrdegClass::Rank => "rank",
            TrdegClass::Other => "other",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatedDim {
    pub value: u64,
    pub caveat: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub root_type: RootSystemType,
    /// Highest weight in fundamental-weight coordinates.
    pub highest: Vec<i64>,
    /// Lists containing the entry, in order.
    pub lists: Vec<ListId>,
    pub trdeg_class: TrdegClass,
    pub expected_components: u64,
    pub stated_dim_nullcone: Option<StatedDim>,
}

impl CatalogEntry {
    pub fn rank(&self) -> usize {
        self.root_type.rank
    }

    pub fn dim_module(&self) -> Result<u64> {
        let d = RootDatum::build(self.root_type)?;
        weyl_dim(&d, &d.weight(&self.highest)?)
    }

    /// Highest weight written as `2w1+w3`.
    pub fn weight_label(&self) -> String {
        weight_label(&self.highest)
    }

    pub fn lists_label(&self) -> String {
        self.lists.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.root_type, self.weight_label())
    }
}

pub fn weight_label(coords: &[i64]) -> String {
    let terms: Vec<String> = coords
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| if c == 1 { format!("w{}", i + 1) } else { format!("{c}w{}", i + 1) })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// What the nullcone of an entry should look like.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub components: u64,
    /// Required `dim_nullcone`, when determined.
    pub dim_nullcone: Option<u64>,
    /// Stated dimension that is reported but not enforced.
    pub unchecked_dim: Option<StatedDim>,
}

/// Expected component count and nullcone dimension for `e`.
pub fn expected(e: &CatalogEntry) -> Result<Expectation> {
    let dim = e.dim_module()?;
    let from_trdeg = match e.trdeg_class {
        TrdegClass::Zero => Some(dim),
        TrdegClass::One => Some(dim - 1),
        TrdegClass::Rank => Some(dim - e.rank() as u64),
        TrdegClass::Other => None,
    };
    let (stated, unchecked) = match &e.stated_dim_nullcone {
        Some(p) if p.caveat.is_none() => (Some(p.value), None),
        Some(p) => (None, Some(p.clone())),
        None => (None, None),
    };
    if let (Some(a), Some(b)) = (from_trdeg, stated) {
        if a != b {
            return Err(Error::Catalog(format!("{e}: conflicting dimensions {a} and {b}")));
        }
    }
    Ok(Expectation {
        components: e.expected_components,
        dim_nullcone: from_trdeg.or(stated),
        unchecked_dim: unchecked,
    })
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct File {
    version: u32,
    list: Vec<ListRecord>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ListRecord {
    id: ListId,
    #[allow(dead_code)]
    title: String,
    entries: Vec<Record>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Record {
    group: String,
    weight: String,
    ranks: Option<String>,
    components: Option<u64>,
    #[serde(default)]
    trdeg_one: bool,
    stated_dim: Option<u64>,
    caveat: Option<String>,
}

/// Rank of a family member, or a fixed rank.
enum Group {
    Family(Series),
    Fixed(RootSystemType),
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Catalog(format!("bad group {s:?}"));
        let (series, rank) = s.split_once('_').ok_or_else(bad)?;
        let series: Series = series.parse()?;
        if rank == "r" {
            return Ok(Group::Family(series));
        }
        let rank: usize = rank.parse().map_err(|_| bad())?;
        Ok(Group::Fixed(RootSystemType::new(series, rank)?))
    }
}

/// Extra rank condition such as `r>=4 even`.
fn rank_ok(cond: Option<&str>, r: usize) -> Result<bool> {
    let Some(cond) = cond else {
        return Ok(true);
    };
    let bad = || Error::Catalog(format!("bad rank condition {cond:?}"));
    let mut words = cond.split_whitespace();
    let bound = words.next().and_then(|w| w.strip_prefix("r>=")).ok_or_else(bad)?;
    let bound: usize = bound.parse().map_err(|_| bad())?;
    let parity = match words.next() {
        None => true,
        Some("even") => r.is_multiple_of(2),
        Some("odd") => r % 2 == 1,
        Some(_) => return Err(bad()),
    };
    Ok(r >= bound && parity)
}

/// Parses `2w1+wr` for rank `r`.
fn parse_weight(spec: &str, r: usize) -> Result<Vec<i64>> {
    let bad = || Error::Catalog(format!("bad weight {spec:?}"));
    let mut coords = vec![0; r];
    for term in spec.split('+') {
        let (k, idx) = term.split_once('w').ok_or_else(bad)?;
        let k: i64 = if k.is_empty() { 1 } else { k.parse().map_err(|_| bad())? };
        let i = match idx {
            "r" => r,
            "r-1" => r.checked_sub(1).ok_or_else(bad)?,
            n => n.parse().map_err(|_| bad())?,
        };
        if i == 0 || i > r {
            return Err(bad());
        }
        coords[i - 1] += k;
    }
    Ok(coords)
}

fn min_rank(s: Series) -> usize {
    match s {
        Series::A => 1,
        Series::B => 3,
        Series::C => 2,
        Series::D => 4,
        _ => 1,
    }
}

/// Parses a catalog document and instantiates it up to `max_rank`.
pub fn parse(doc: &str, max_rank: usize) -> Result<Vec<CatalogEntry>> {
    let file: File = toml::from_str(doc).map_err(|e| Error::Catalog(e.to_string()))?;
    if file.version != 1 {
        return Err(Error::Catalog(format!("unsupported catalog version {}", file.version)));
    }
    let mut out: Vec<CatalogEntry> = Vec::new();
    for list in &file.list {
        for rec in &list.entries {
            let types: Vec<RootSystemType> = match rec.group.parse::<Group>()? {
                Group::Fixed(t) => vec![t],
                Group::Family(s) => (min_rank(s)..=max_rank)
                    .filter_map(|r| match rank_ok(rec.ranks.as_deref(), r) {
                        Ok(true) => Some(RootSystemType::new(s, r)),
                        Ok(false) => None,
                        Err(e) => Some(Err(e)),
                    })
                    .collect::<Result<_>>()?,
            };
            for t in types.into_iter().filter(|t| t.rank <= max_rank) {
                let highest = parse_weight(&rec.weight, t.rank)?;
                let stated = rec.stated_dim.map(|value| StatedDim { value, caveat: rec.caveat.clone() });
                let trdeg = match list.id {
                    ListId::Iii => TrdegClass::Zero,
                    ListId::Iv => TrdegClass::One,
                    _ if rec.trdeg_one => TrdegClass::One,
                    ListId::I => TrdegClass::Rank,
                    _ => TrdegClass::Other,
                };
                let comps = rec.components.unwrap_or(1);
                match out.iter_mut().find(|e| e.root_type == t && e.highest == highest) {
                    Some(e) => {
                        // Seen in an earlier list: merge.
                        e.lists.push(list.id);
                        if trdeg == TrdegClass::One {
                            e.trdeg_class = TrdegClass::One;
                        }
                        e.expected_components = e.expected_components.max(comps);
                        e.stated_dim_nullcone = e.stated_dim_nullcone.take().or(stated);
                    }
                    None => out.push(CatalogEntry {
                        root_type: t,
                        highest,
                        lists: vec![list.id],
                        trdeg_class: trdeg,
                        expected_components: comps,
                        stated_dim_nullcone: stated,
                    }),
                }
            }
        }
    }
    Ok(out)
}

/// All catalog entries with rank at most `max_rank`.
pub fn entries(max_rank: usize) -> Vec<CatalogEntry> {
    assert!(max_rank >= 1, "max_rank must be positive");
    parse(CATALOG_TOML, max_rank).expect("embedded catalog is well formed")
}

/// The entry for `(ty, highest)`, if catalogued. Dual weights count as the
/// same group.
pub fn lookup(ty: RootSystemType, highest: &[i64]) -> Option<CatalogEntry> {
    let datum = RootDatum::build(ty).ok()?;
    let dual = datum.dual_weight(&datum.weight(highest).ok()?).ok()?.fw_coords;
    entries(ty.rank.max(1))
        .into_iter()
        .find(|e| e.root_type == ty && (e.highest == highest || e.highest == dual))
}

/// Entries sitting in more than one list.
pub fn multi_listed(max_rank: usize) -> Vec<CatalogEntry> {
    entries(max_rank).into_iter().filter(|e| e.lists.len() > 1).collect()
}
