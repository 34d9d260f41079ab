//! Gap-condition partition families, enumerated by brute force.
//!
//! Everything here is purely combinatorial and never touches the series
//! formulas it is used to check.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::LaurentQSeries;
use crate::xseries::XSeries;

/// Weakly decreasing positive parts. Serializes as a JSON array of parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Vec<u64> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        write!(f, "{}", s.join(" + "))
    }
}

/// Condition on consecutive parts `a >= b` of a partition, plus a lower bound on parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GapRule {
    /// `a - b >= min_gap`, strictly when `a` or `b` is congruent to one of `strict_residues`.
    Gap {
        min_gap: u64,
        modulus: u64,
        strict_residues: Vec<u64>,
        min_part: u64,
    },
    /// Parts in `distinct_residues` may not repeat; every other part is unrestricted.
    Multiplicity {
        modulus: u64,
        distinct_residues: Vec<u64>,
        min_part: u64,
    },
}

impl GapRule {
    pub fn gap(min_gap: u64, modulus: u64, strict_residues: &[u64]) -> Self {
        assert!(modulus >= 1);
        GapRule::Gap {
            min_gap,
            modulus,
            strict_residues: reduce(strict_residues, modulus),
            min_part: 1,
        }
    }

    pub fn multiplicity(modulus: u64, distinct_residues: &[u64]) -> Self {
        assert!(modulus >= 1);
        GapRule::Multiplicity {
            modulus,
            distinct_residues: reduce(distinct_residues, modulus),
            min_part: 1,
        }
    }

    /// Schur partitions: gaps at least 3, strict at multiples of 3.
    pub fn schur() -> Self {
        Self::gap(3, 3, &[0])
    }

    /// Göllnitz–Gordon partitions: gaps at least 2, strict at even parts.
    pub fn gollnitz_gordon() -> Self {
        Self::gap(2, 2, &[0])
    }

    /// Göllnitz partitions: gaps at least 2, strict at odd parts.
    pub fn gollnitz() -> Self {
        Self::gap(2, 2, &[1])
    }

    /// Image of Schur partitions under 3-triangle removal: multiples of 3 distinct.
    pub fn schur_image() -> Self {
        Self::multiplicity(3, &[0])
    }

    /// Image of Göllnitz–Gordon partitions under 2-triangle removal: even parts distinct.
    pub fn gollnitz_gordon_image() -> Self {
        Self::multiplicity(2, &[0])
    }

    /// Image of Göllnitz partitions under 2-triangle removal: odd parts distinct.
    pub fn gollnitz_image() -> Self {
        Self::multiplicity(2, &[1])
    }

    /// Parses `S`, `GG`, `G`, `T`, `T-GG`, `T-G`, optionally suffixed `:t` for a minimum part.
    pub fn by_name(name: &str) -> Result<Self> {
        let (base, t) = match name.split_once(':') {
            Some((b, t)) => {
                let t: u64 = t
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad minimum part in `{name}`")))?;
                (b, Some(t))
            }
            None => (name, None),
        };
        let rule = match base {
            "S" => Self::schur(),
            "GG" => Self::gollnitz_gordon(),
            "G" => Self::gollnitz(),
            "T" => Self::schur_image(),
            "T-GG" => Self::gollnitz_gordon_image(),
            "T-G" => Self::gollnitz_image(),
            _ => {
                return Err(Error::InvalidInput(format!(
                    "unknown family `{base}` (expected S, GG, G, T, T-GG or T-G)"
                )))
            }
        };
        match t {
            Some(t) => rule.with_min_part(t),
            None => Ok(rule),
        }
    }

    pub fn with_min_part(self, t: u64) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidInput("minimum part must be at least 1".into()));
        }
        Ok(match self {
            GapRule::Gap {
                min_gap,
                modulus,
                strict_residues,
                ..
            } => GapRule::Gap {
                min_gap,
                modulus,
                strict_residues,
                min_part: t,
            },
            GapRule::Multiplicity {
                modulus,
                distinct_residues,
                ..
            } => GapRule::Multiplicity {
                modulus,
                distinct_residues,
                min_part: t,
            },
        })
    }

    pub fn min_part(&self) -> u64 {
        match self {
            GapRule::Gap { min_part, .. } | GapRule::Multiplicity { min_part, .. } => *min_part,
        }
    }

    /// Whether `b` may directly follow `a` (with `a >= b`).
    pub fn allowed(&self, a: u64, b: u64) -> bool {
        if b > a {
            return false;
        }
        match self {
            GapRule::Gap {
                min_gap,
                modulus,
                strict_residues,
                ..
            } => {
                let strict = strict_residues.contains(&(a % modulus)) || strict_residues.contains(&(b % modulus));
                let gap = a - b;
                if strict {
                    gap > *min_gap
                } else {
                    gap >= *min_gap
                }
            }
            GapRule::Multiplicity {
                modulus,
                distinct_residues,
                ..
            } => a > b || !distinct_residues.contains(&(a % modulus)),
        }
    }

    pub fn admits(&self, p: &Partition) -> bool {
        p.parts().last().is_none_or(|&s| s >= self.min_part()) && p.parts().windows(2).all(|w| self.allowed(w[0], w[1]))
    }
}

fn reduce(residues: &[u64], modulus: u64) -> Vec<u64> {
    let mut r: Vec<u64> = residues.iter().map(|x| x % modulus).collect();
    r.sort_unstable();
    r.dedup();
    r
}

/// All partitions of `size` satisfying `rule`, largest parts first
/// (reverse lexicographic: `[5]` before `[4, 1]`).
pub fn enumerate(rule: &GapRule, size: u64) -> Vec<Partition> {
    fn descend(rule: &GapRule, remaining: u64, prev: Option<u64>, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        let top = prev.map_or(remaining, |p| p.min(remaining));
        let mut part = top;
        while part >= rule.min_part() {
            if prev.is_none_or(|p| rule.allowed(p, part)) {
                cur.push(part);
                descend(rule, remaining - part, Some(part), cur, out);
                cur.pop();
            }
            part -= 1;
        }
    }
    let mut out = Vec::new();
    descend(rule, size, None, &mut Vec::new(), &mut out);
    out
}

/// `sum_{lambda in rule} x^len(lambda) q^|lambda|` below `trunc`, x-degrees up to `xdeg_bound`.
///
/// Counted by dynamic programming over the largest part; agrees with summing
/// [`enumerate`] (tested), but scales to orders where listing every partition would not.
pub fn generating_function(rule: &GapRule, trunc: i64, xdeg_bound: usize) -> XSeries {
    if trunc <= 0 {
        return XSeries::zero(trunc, xdeg_bound);
    }
    let t = trunc as usize;
    let mut by_largest: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(t);
    let mut total = vec![vec![BigInt::zero(); t]; xdeg_bound + 1];
    total[0][0] = BigInt::from(1);
    // by_largest[p][l][s]: valid partitions with largest part p, length l, size s
    for p in 0..t as u64 {
        let mut table = vec![vec![BigInt::zero(); t]; xdeg_bound + 1];
        if p >= rule.min_part() && xdeg_bound >= 1 {
            let p_us = p as usize;
            table[1][p_us] = BigInt::from(1);
            for b in rule.min_part()..p {
                if !rule.allowed(p, b) {
                    continue;
                }
                let tail = &by_largest[b as usize];
                for l in 1..xdeg_bound {
                    for s in 0..t - p_us {
                        if !tail[l][s].is_zero() {
                            let v = tail[l][s].clone();
                            table[l + 1][s + p_us] += v;
                        }
                    }
                }
            }
            if rule.allowed(p, p) {
                // a repeated largest part feeds back into the same table; ascending s sees finished entries
                for l in 1..xdeg_bound {
                    for s in 0..t - p_us {
                        if !table[l][s].is_zero() {
                            let v = table[l][s].clone();
                            table[l + 1][s + p_us] += v;
                        }
                    }
                }
            }
            for l in 0..=xdeg_bound {
                for s in 0..t {
                    if !table[l][s].is_zero() {
                        total[l][s] += &table[l][s];
                    }
                }
            }
        }
        by_largest.push(table);
    }
    let coeffs = total
        .into_iter()
        .map(|row| LaurentQSeries::new(0, row, trunc))
        .collect();
    XSeries::new(coeffs, xdeg_bound)
}

/// The specialization `x = q^x_qpow` of the generating function, with no bound on length.
pub fn specialized_series(rule: &GapRule, x_qpow: u64, trunc: i64) -> LaurentQSeries {
    if trunc <= 0 {
        return LaurentQSeries::zero(trunc);
    }
    let t = trunc as usize;
    let mut by_largest: Vec<Vec<BigInt>> = Vec::with_capacity(t);
    let mut total = vec![BigInt::zero(); t];
    total[0] = BigInt::from(1);
    for p in 0..t as u64 {
        let mut row = vec![BigInt::zero(); t];
        let weight = (p + x_qpow) as usize;
        if p >= rule.min_part() && weight < t {
            row[weight] = BigInt::from(1);
            for b in rule.min_part()..p {
                if !rule.allowed(p, b) {
                    continue;
                }
                let tail = &by_largest[b as usize];
                for s in 0..t - weight {
                    if !tail[s].is_zero() {
                        let v = tail[s].clone();
                        row[s + weight] += v;
                    }
                }
            }
            if rule.allowed(p, p) {
                for s in 0..t - weight {
                    if !row[s].is_zero() {
                        let v = row[s].clone();
                        row[s + weight] += v;
                    }
                }
            }
            for s in 0..t {
                if !row[s].is_zero() {
                    total[s] += &row[s];
                }
            }
        }
        by_largest.push(row);
    }
    LaurentQSeries::new(0, total, trunc)
}

/// One row `d d ... d r` of a d-modular diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramRow {
    /// Number of full cells of value `d`.
    pub full: u64,
    /// Final cell `part mod d`, absent when zero.
    pub remainder: u64,
}

impl DiagramRow {
    /// Cells in the row; a nonzero remainder occupies one cell.
    pub fn len(&self) -> u64 {
        self.full + u64::from(self.remainder > 0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn render(&self, d: u64) -> String {
        let mut s = d.to_string().repeat(self.full as usize);
        if self.remainder > 0 {
            s.push_str(&self.remainder.to_string());
        }
        s
    }
}

pub fn modular_diagram(p: &Partition, d: u64) -> Vec<DiagramRow> {
    assert!(d >= 1, "modulus must be positive");
    p.parts()
        .iter()
        .map(|&part| DiagramRow {
            full: part / d,
            remainder: part % d,
        })
        .collect()
}

pub fn render_diagram(p: &Partition, d: u64) -> String {
    modular_diagram(p, d)
        .iter()
        .map(|r| r.render(d))
        .collect::<Vec<_>>()
        .join("\n")
}

/// `lambda'_i = lambda_i - d (len - i)` (1-indexed): strips a staircase of `d len(len-1)/2` cells.
pub fn remove_triangle(p: &Partition, d: u64) -> Result<Partition> {
    let len = p.len() as u64;
    let mut parts = Vec::with_capacity(p.len());
    for (i, &part) in p.parts().iter().enumerate() {
        let cut = d * (len - 1 - i as u64);
        if part <= cut {
            return Err(Error::InvalidInput(format!(
                "removing the {d}-triangle from {p} leaves a nonpositive part"
            )));
        }
        parts.push(part - cut);
    }
    Partition::new(parts)
        .map_err(|_| Error::InvalidInput(format!("removing the {d}-triangle from {p} breaks the ordering")))
}

/// Inverse of [`remove_triangle`].
pub fn add_triangle(p: &Partition, d: u64) -> Partition {
    let len = p.len() as u64;
    Partition {
        parts: p
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &part)| part + d * (len - 1 - i as u64))
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BijectionFailure {
    RemovalFailed { source: Partition },
    ImageOutsideTarget { source: Partition, image: Partition },
    NotInvertible { source: Partition, image: Partition },
    Collision { image: Partition },
    CountMismatch { source_count: usize, target_count: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionReport {
    pub d: u64,
    pub max_size: u64,
    /// Number of source partitions mapped.
    pub checked: usize,
    /// `(size, length, failure)` of the first failure, if any.
    pub failure: Option<(u64, usize, BijectionFailure)>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Exhaustively checks that [`remove_triangle`] maps `source` bijectively onto
/// `target`, length by length, for every source partition of size `<= max_size`.
///
/// Within a fixed (size, length) class the map must land in `target`, be
/// injective and round-trip through [`add_triangle`]; the class must also have
/// as many members as the target class of size `size - d len(len-1)/2`.
pub fn verify_bijection(source: &GapRule, target: &GapRule, d: u64, max_size: u64) -> BijectionReport {
    let by_length = |parts: Vec<Partition>| {
        let mut m: BTreeMap<usize, Vec<Partition>> = BTreeMap::new();
        for p in parts {
            m.entry(p.len()).or_default().push(p);
        }
        m
    };
    let targets: Vec<BTreeMap<usize, Vec<Partition>>> =
        (0..=max_size).map(|n| by_length(enumerate(target, n))).collect();
    let mut checked = 0;
    let fail = |n, len, f, checked| BijectionReport {
        d,
        max_size,
        checked,
        failure: Some((n, len, f)),
    };
    for n in 0..=max_size {
        for (len, sources) in by_length(enumerate(source, n)) {
            let mut seen = HashSet::new();
            for lambda in &sources {
                checked += 1;
                let Ok(image) = remove_triangle(lambda, d) else {
                    return fail(
                        n,
                        len,
                        BijectionFailure::RemovalFailed { source: lambda.clone() },
                        checked,
                    );
                };
                if !target.admits(&image) {
                    return fail(
                        n,
                        len,
                        BijectionFailure::ImageOutsideTarget {
                            source: lambda.clone(),
                            image,
                        },
                        checked,
                    );
                }
                if add_triangle(&image, d) != *lambda {
                    return fail(
                        n,
                        len,
                        BijectionFailure::NotInvertible {
                            source: lambda.clone(),
                            image,
                        },
                        checked,
                    );
                }
                if !seen.insert(image.clone()) {
                    return fail(n, len, BijectionFailure::Collision { image }, checked);
                }
            }
            let l = len as u64;
            let shift = d * l * l.saturating_sub(1) / 2;
            let target_count = targets[(n - shift) as usize].get(&len).map_or(0, Vec::len);
            if target_count != sources.len() {
                return fail(
                    n,
                    len,
                    BijectionFailure::CountMismatch {
                        source_count: sources.len(),
                        target_count,
                    },
                    checked,
                );
            }
        }
        // Target classes with no source partitions at all must be empty too.
        for (&len, members) in &targets[n as usize] {
            let l = len as u64;
            let lifted = n + d * l * l.saturating_sub(1) / 2;
            if lifted <= max_size {
                let source_count = enumerate(source, lifted).iter().filter(|p| p.len() == len).count();
                if source_count == 0 && !members.is_empty() {
                    return fail(
                        lifted,
                        len,
                        BijectionFailure::CountMismatch {
                            source_count,
                            target_count: members.len(),
                        },
                        checked,
                    );
                }
            }
        }
    }
    BijectionReport {
        d,
        max_size,
        checked,
        failure: None,
    }
}
