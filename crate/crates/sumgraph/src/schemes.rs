//! The explicit edge-coloring constructions for the four removal families,
//! one case per parameter branch.
//!
//! Every class is one generator expression: a fixed list of pairs plus, in
//! the long classes, a [`fan`] — the chain of pairs `(t, K-t)` with `t`
//! ascending to a floor bound. The cases are deliberately not unified into
//! a single formula, so a verifier failure points at one specific class
//! generator.
//!
//! The `H^{-i,2}` and `H^{-i,3}` class lists are the term-by-term label
//! negations of the `H^{-2,s}` and `H^{-3,s}` lists with the two removal
//! parameters swapped, and are generated that way.

use std::fmt;

use crate::coloring::{EdgeColoring, Provenance};
use crate::error::{Error, Result};
use crate::graph::Edge;

/// Which removal family a construction (or a small-case claim) belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeFamily {
    /// `H^{-2,s}_{1,j}` — chromatic index `s`.
    H2s,
    /// `H^{-3,s}_{m,j}` — chromatic index `s+1`.
    H3s,
    /// `H^{-i,2}_{m,1}` — chromatic index `i`.
    Hi2,
    /// `H^{-i,3}_{m,j}` — chromatic index `i+1`.
    Hi3,
}

impl SchemeFamily {
    pub fn tag(&self) -> &'static str {
        match self {
            SchemeFamily::H2s => "H2s",
            SchemeFamily::H3s => "H3s",
            SchemeFamily::Hi2 => "Hi2",
            SchemeFamily::Hi3 => "Hi3",
        }
    }
}

impl fmt::Display for SchemeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Identifies the construction case that covers a parameter choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchemeDescriptor {
    pub family: SchemeFamily,
    pub case: char,
    /// Smallest `s` (for `H2s`/`H3s`) or `i` (for `Hi2`/`Hi3`) the case covers.
    pub min_size: i64,
}

impl SchemeDescriptor {
    pub fn id(&self) -> String {
        format!("{}/{}", self.family.tag(), self.case)
    }
}

/// Looks up the case covering `H^{-i,s}_{m,j}`, if any. Exactly one case
/// applies inside the stated ranges; outside them `None` is returned and
/// callers fall back to the exact solver.
pub fn scheme_descriptor(i: i64, s: i64, m: i64, j: i64) -> Option<SchemeDescriptor> {
    let desc = |family, case, min_size| SchemeDescriptor {
        family,
        case,
        min_size,
    };
    if i == 2 && m == 1 {
        let d = match j {
            1 => desc(SchemeFamily::H2s, 'A', 7),
            2 => desc(SchemeFamily::H2s, 'B', 9),
            3 => desc(SchemeFamily::H2s, 'C', 11),
            _ => return None,
        };
        return (s >= d.min_size).then_some(d);
    }
    if i == 3 && (1..=2).contains(&m) {
        let d = match (m, j) {
            (1, 1) => desc(SchemeFamily::H3s, 'A', 8),
            (2, 1) => desc(SchemeFamily::H3s, 'B', 8),
            (1, 2) => desc(SchemeFamily::H3s, 'C', 10),
            (2, 2) => desc(SchemeFamily::H3s, 'D', 10),
            (1, 3) => desc(SchemeFamily::H3s, 'E', 12),
            (2, 3) => desc(SchemeFamily::H3s, 'F', 12),
            _ => return None,
        };
        return (s >= d.min_size).then_some(d);
    }
    if s == 2 && j == 1 {
        let d = match m {
            1 => desc(SchemeFamily::Hi2, 'A', 7),
            2 => desc(SchemeFamily::Hi2, 'B', 9),
            3 => desc(SchemeFamily::Hi2, 'C', 11),
            _ => return None,
        };
        return (i >= d.min_size).then_some(d);
    }
    if s == 3 && (1..=2).contains(&j) {
        let d = match (m, j) {
            (1, 1) => desc(SchemeFamily::Hi3, 'A', 8),
            (1, 2) => desc(SchemeFamily::Hi3, 'B', 8),
            (2, 1) => desc(SchemeFamily::Hi3, 'C', 10),
            (2, 2) => desc(SchemeFamily::Hi3, 'D', 10),
            (3, 1) => desc(SchemeFamily::Hi3, 'E', 12),
            (3, 2) => desc(SchemeFamily::Hi3, 'F', 12),
            _ => return None,
        };
        return (i >= d.min_size).then_some(d);
    }
    None
}

fn edge(u: i64, v: i64) -> Edge {
    Edge::new(u, v).expect("construction pairs are never loops")
}

/// The chain of pairs `(t, sum - t)` for `t` ascending `from..=to`. The
/// floor bounds in the displays always keep `t` strictly below `sum - t`,
/// so the chain is a matching by construction.
fn fan(sum: i64, from: i64, to: i64) -> impl Iterator<Item = Edge> {
    (from..=to).map(move |t| edge(t, sum - t))
}

fn class(fixed: &[(i64, i64)], tail: impl IntoIterator<Item = Edge>) -> Vec<Edge> {
    fixed
        .iter()
        .map(|&(u, v)| edge(u, v))
        .chain(tail)
        .collect()
}

fn finish(family: SchemeFamily, case: char, classes: Vec<Vec<Edge>>) -> EdgeColoring {
    EdgeColoring::new(
        classes,
        Provenance::PaperScheme {
            case: format!("{}/{}", family.tag(), case),
        },
    )
}

/// Classes for `H^{-2,s}_{1,j}`, `j` in `{1,2,3}`. Count is `s`.
pub fn scheme_h2s(s: i64, j: i64) -> Result<EdgeColoring> {
    let d = scheme_descriptor(2, s, 1, j).ok_or(Error::NoScheme { i: 2, s, m: 1, j })?;
    let k = s;
    let mut classes: Vec<Vec<Edge>> = Vec::with_capacity(s as usize);
    match d.case {
        'A' => {
            classes.push(class(&[(0, -2)], fan(k - 1, 2, (k - 2).div_euclid(2))));
            classes.push(class(&[(0, k - 1)], fan(k, 2, (k - 1).div_euclid(2))));
            classes.push(class(&[(0, k), (-2, 2)], None));
            for kk in 4..=6 {
                classes.push(class(&[(-2, kk), (0, kk - 2)], None));
            }
            for kk in 7..=s {
                classes.push(class(
                    &[(-2, kk), (0, kk - 2)],
                    fan(kk - 2, 2, (kk - 3).div_euclid(2)),
                ));
            }
        }
        'B' => {
            classes.push(class(&[(0, -2), (1, k - 2)], fan(k - 1, 3, (k - 2).div_euclid(2))));
            classes.push(class(&[(0, k), (1, k - 1)], fan(k, 3, (k - 1).div_euclid(2))));
            classes.push(class(&[(0, k - 1)], None));
            classes.push(class(&[(-2, 3), (0, 1)], None));
            classes.push(class(&[(-2, 5), (0, 3)], None));
            for kk in 6..=8 {
                classes.push(class(&[(-2, kk), (0, kk - 2), (1, kk - 3)], None));
            }
            for kk in 9..=s {
                classes.push(class(
                    &[(-2, kk), (0, kk - 2), (1, kk - 3)],
                    fan(kk - 2, 3, (kk - 3).div_euclid(2)),
                ));
            }
        }
        'C' => {
            classes.push(class(
                &[(0, -2), (1, k - 2), (2, k - 3)],
                fan(k - 1, 4, (k - 2).div_euclid(2)),
            ));
            classes.push(class(
                &[(0, k), (1, k - 1), (2, k - 2)],
                fan(k, 4, (k - 1).div_euclid(2)),
            ));
            classes.push(class(&[(0, k - 1), (-2, 2)], None));
            classes.push(class(&[(0, 1)], None));
            classes.push(class(&[(-2, 4), (0, 2)], None));
            classes.push(class(&[(-2, 6), (0, 4)], None));
            classes.push(class(&[(-2, 7), (0, 5), (1, 4)], None));
            for kk in 8..=10 {
                classes.push(class(&[(-2, kk), (0, kk - 2), (1, kk - 3), (2, kk - 4)], None));
            }
            for kk in 11..=s {
                classes.push(class(
                    &[(-2, kk), (0, kk - 2), (1, kk - 3), (2, kk - 4)],
                    fan(kk - 2, 4, (kk - 3).div_euclid(2)),
                ));
            }
        }
        _ => unreachable!(),
    }
    debug_assert_eq!(classes.len() as i64, s);
    Ok(finish(SchemeFamily::H2s, d.case, classes))
}

/// Classes for `H^{-3,s}_{m,j}`, `m` in `{1,2}`, `j` in `{1,2,3}`. Count is `s+1`.
pub fn scheme_h3s(s: i64, m: i64, j: i64) -> Result<EdgeColoring> {
    let d = scheme_descriptor(3, s, m, j).ok_or(Error::NoScheme { i: 3, s, m, j })?;
    let k = s;
    let mut classes: Vec<Vec<Edge>> = Vec::with_capacity((s + 1) as usize);
    match d.case {
        'A' => {
            classes.push(class(&[(0, -3)], fan(k - 2, 2, (k - 3).div_euclid(2))));
            classes.push(class(&[(0, -2)], fan(k - 1, 2, (k - 2).div_euclid(2))));
            classes.push(class(&[(0, k - 1)], fan(k, 2, (k - 1).div_euclid(2))));
            classes.push(class(&[(0, k), (-2, 2), (-3, 3)], None));
            classes.push(class(&[(-2, k), (0, k - 2)], None));
            for kk in 5..=7 {
                classes.push(class(&[(-3, kk), (-2, kk - 1), (0, kk - 3)], None));
            }
            for kk in 8..=s {
                classes.push(class(
                    &[(-3, kk), (-2, kk - 1), (0, kk - 3)],
                    fan(kk - 3, 2, (kk - 4).div_euclid(2)),
                ));
            }
        }
        'B' => {
            classes.push(class(&[(0, -3)], fan(k - 2, 2, (k - 3).div_euclid(2))));
            classes.push(class(
                &[(-1, k - 1), (0, k - 2)],
                fan(k - 1, 2, (k - 2).div_euclid(2)),
            ));
            classes.push(class(&[(0, -1)], fan(k, 2, (k - 1).div_euclid(2))));
            classes.push(class(&[(0, k), (-3, 3)], None));
            classes.push(class(&[(-3, 2), (-1, k), (0, k - 1)], None));
            for kk in 5..=7 {
                classes.push(class(&[(-3, kk), (-1, kk - 2), (0, kk - 3)], None));
            }
            for kk in 8..=s {
                classes.push(class(
                    &[(-3, kk), (-1, kk - 2), (0, kk - 3)],
                    fan(kk - 3, 2, (kk - 4).div_euclid(2)),
                ));
            }
        }
        'C' => {
            classes.push(class(&[(0, -3), (1, k - 3)], fan(k - 2, 3, (k - 3).div_euclid(2))));
            classes.push(class(&[(0, -2), (1, k - 2)], fan(k - 1, 3, (k - 2).div_euclid(2))));
            classes.push(class(&[(0, k), (1, k - 1)], fan(k, 3, (k - 1).div_euclid(2))));
            classes.push(class(&[(0, k - 1), (-3, 3)], None));
            classes.push(class(&[(-3, 1), (-2, k), (0, k - 2)], None));
            classes.push(class(&[(-3, 4), (-2, 3), (0, 1)], None));
            classes.push(class(&[(-3, 6), (-2, 5), (0, 3)], None));
            for kk in 7..=9 {
                classes.push(class(&[(-3, kk), (-2, kk - 1), (0, kk - 3), (1, kk - 4)], None));
            }
            for kk in 10..=s {
                classes.push(class(
                    &[(-3, kk), (-2, kk - 1), (0, kk - 3), (1, kk - 4)],
                    fan(kk - 3, 3, (kk - 4).div_euclid(2)),
                ));
            }
        }
        'D' => {
            classes.push(class(&[(0, -3), (1, k - 3)], fan(k - 2, 3, (k - 3).div_euclid(2))));
            classes.push(class(
                &[(-1, k), (0, k - 1), (1, k - 2)],
                fan(k - 1, 3, (k - 2).div_euclid(2)),
            ));
            classes.push(class(&[(0, -1), (1, k - 1)], fan(k, 3, (k - 1).div_euclid(2))));
            classes.push(class(&[(0, k), (-1, 1), (-3, 3)], None));
            classes.push(class(&[(-1, k - 1), (0, k - 2)], None));
            classes.push(class(&[(-3, 4), (0, 1)], None));
            classes.push(class(&[(-3, 6), (-1, 4), (0, 3)], None));
            for kk in 7..=9 {
                classes.push(class(&[(-3, kk), (-1, kk - 2), (0, kk - 3), (1, kk - 4)], None));
            }
            for kk in 10..=s {
                classes.push(class(
                    &[(-3, kk), (-1, kk - 2), (0, kk - 3), (1, kk - 4)],
                    fan(kk - 3, 3, (kk - 4).div_euclid(2)),
                ));
            }
        }
        'E' => {
            classes.push(class(
                &[(0, -3), (1, k - 3), (2, k - 4)],
                fan(k - 2, 4, (k - 3).div_euclid(2)),
            ));
            classes.push(class(
                &[(0, -2), (1, k - 2), (2, k - 3)],
                fan(k - 1, 4, (k - 2).div_euclid(2)),
            ));
            classes.push(class(
                &[(0, k), (1, k - 1), (2, k - 2)],
                fan(k, 4, (k - 1).div_euclid(2)),
            ));
            classes.push(class(&[(0, k - 1), (-2, 2)], None));
            classes.push(class(&[(-3, 1), (-2, k), (0, k - 2)], None));
            classes.push(class(&[(-3, 4), (0, 1)], None));
            classes.push(class(&[(-3, 5), (-2, 4), (0, 2)], None));
            classes.push(class(&[(-3, 7), (-2, 6), (0, 4)], None));
            classes.push(class(&[(-3, 8), (-2, 7), (0, 5), (1, 4)], None));
            for kk in 9..=11 {
                classes.push(class(
                    &[(-3, kk), (-2, kk - 1), (0, kk - 3), (1, kk - 4), (2, kk - 5)],
                    None,
                ));
            }
            for kk in 12..=s {
                classes.push(class(
                    &[(-3, kk), (-2, kk - 1), (0, kk - 3), (1, kk - 4), (2, kk - 5)],
                    fan(kk - 3, 4, (kk - 4).div_euclid(2)),
                ));
            }
        }
        'F' => {
            classes.push(class(
                &[(0, -3), (1, k - 3), (2, k - 4)],
                fan(k - 2, 4, (k - 3).div_euclid(2)),
            ));
            classes.push(class(
                &[(-1, k - 1), (0, k), (1, k - 2), (2, k - 3)],
                fan(k - 1, 4, (k - 2).div_euclid(2)),
            ));
            classes.push(class(
                &[(0, -1), (1, k - 1), (2, k - 2)],
                fan(k, 4, (k - 1).div_euclid(2)),
            ));
            classes.push(class(&[(0, k - 2), (-1, 1)], None));
            classes.push(class(&[(-3, 2), (-1, k), (0, k - 1)], None));
            classes.push(class(&[(-3, 4), (-1, 2), (0, 1)], None));
            classes.push(class(&[(-3, 5), (0, 2)], None));
            classes.push(class(&[(-3, 7), (-1, 5), (0, 4)], None));
            classes.push(class(&[(-3, 8), (-1, 6), (0, 5), (1, 4)], None));
            for kk in 9..=11 {
                classes.push(class(
                    &[(-3, kk), (-1, kk - 2), (0, kk - 3), (1, kk - 4), (2, kk - 5)],
                    None,
                ));
            }
            for kk in 12..=s {
                classes.push(class(
                    &[(-3, kk), (-1, kk - 2), (0, kk - 3), (1, kk - 4), (2, kk - 5)],
                    fan(kk - 3, 4, (kk - 4).div_euclid(2)),
                ));
            }
        }
        _ => unreachable!(),
    }
    debug_assert_eq!(classes.len() as i64, s + 1);
    Ok(finish(SchemeFamily::H3s, d.case, classes))
}

/// Classes for `H^{-i,2}_{m,1}`, `m` in `{1,2,3}`. Count is `i`.
///
/// The class lists are the label negations of the `H^{-2,s}` lists, so
/// they are generated through the mirror with the removal roles swapped.
pub fn scheme_hi2(i: i64, m: i64) -> Result<EdgeColoring> {
    let d = scheme_descriptor(i, 2, m, 1).ok_or(Error::NoScheme { i, s: 2, m, j: 1 })?;
    let mirrored = scheme_h2s(i, m)?;
    let coloring = EdgeColoring::new(mirrored.negated().classes().to_vec(), Provenance::PaperScheme {
        case: format!("{}/{}", SchemeFamily::Hi2.tag(), d.case),
    });
    Ok(coloring)
}

/// Classes for `H^{-i,3}_{m,j}`, `m` in `{1,2,3}`, `j` in `{1,2}`. Count is `i+1`.
pub fn scheme_hi3(i: i64, m: i64, j: i64) -> Result<EdgeColoring> {
    let d = scheme_descriptor(i, 3, m, j).ok_or(Error::NoScheme { i, s: 3, m, j })?;
    let mirrored = scheme_h3s(i, j, m)?;
    let coloring = EdgeColoring::new(mirrored.negated().classes().to_vec(), Provenance::PaperScheme {
        case: format!("{}/{}", SchemeFamily::Hi3.tag(), d.case),
    });
    Ok(coloring)
}

/// Dispatches to the construction covering `H^{-i,s}_{m,j}`, if any.
pub fn paper_scheme(i: i64, s: i64, m: i64, j: i64) -> Result<EdgeColoring> {
    let d = scheme_descriptor(i, s, m, j).ok_or(Error::NoScheme { i, s, m, j })?;
    match d.family {
        SchemeFamily::H2s => scheme_h2s(s, j),
        SchemeFamily::H3s => scheme_h3s(s, m, j),
        SchemeFamily::Hi2 => scheme_hi2(i, m),
        SchemeFamily::Hi3 => scheme_hi3(i, m, j),
    }
}

/// A chromatic-index claim together with where it comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChiClaim {
    pub chi_prime: usize,
    pub source: ClaimSource,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimSource {
    /// Enumerated small-case claim; no general construction exists below the case thresholds.
    SmallCase,
    /// A case construction covers the parameters.
    Construction(SchemeFamily, char),
}

impl fmt::Display for ClaimSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaimSource::SmallCase => f.write_str("small-case"),
            ClaimSource::Construction(family, case) => write!(f, "{}/{case}", family.tag()),
        }
    }
}

/// The claimed chromatic index for parameters inside one of the enumerated
/// small-case ranges (below the construction thresholds). Only the claim is
/// returned; no classes are generated.
pub fn small_case_expected(
    family: SchemeFamily,
    size: i64,
    m: i64,
    j: i64,
) -> Result<ChiClaim> {
    let claim = |chi_prime: i64| ChiClaim {
        chi_prime: chi_prime as usize,
        source: ClaimSource::SmallCase,
    };
    let covered = match family {
        SchemeFamily::H2s => {
            m == 1
                && match j {
                    1 => (3..=6).contains(&size),
                    2 => (3..=8).contains(&size),
                    3 => (3..=10).contains(&size),
                    _ => false,
                }
        }
        SchemeFamily::H3s => (1..=2).contains(&m) && (1..=3).contains(&j) && {
            match j {
                1 => (4..=7).contains(&size),
                2 => (4..=9).contains(&size),
                3 => (4..=11).contains(&size),
                _ => false,
            }
        },
        SchemeFamily::Hi2 => {
            j == 1
                && match m {
                    1 => (3..=6).contains(&size),
                    2 => (3..=8).contains(&size),
                    3 => (3..=10).contains(&size),
                    _ => false,
                }
        }
        SchemeFamily::Hi3 => (1..=3).contains(&m) && (1..=2).contains(&j) && {
            match m {
                1 => (4..=7).contains(&size),
                2 => (4..=9).contains(&size),
                3 => (4..=11).contains(&size),
                _ => false,
            }
        },
    };
    if !covered {
        return Err(Error::NoSmallCase);
    }
    Ok(match family {
        SchemeFamily::H2s => claim(size),
        SchemeFamily::H3s => claim(size + 1),
        SchemeFamily::Hi2 => claim(size),
        SchemeFamily::Hi3 => claim(size + 1),
    })
}

/// The chromatic-index claim covering `H^{-i,s}_{m,j}`, from either the
/// small-case ranges or a case construction. `None` when the
/// parameters fall outside every claimed range.
pub fn chi_claim(i: i64, s: i64, m: i64, j: i64) -> Option<ChiClaim> {
    if let Some(d) = scheme_descriptor(i, s, m, j) {
        let chi_prime = match d.family {
            SchemeFamily::H2s => s,
            SchemeFamily::H3s => s + 1,
            SchemeFamily::Hi2 => i,
            SchemeFamily::Hi3 => i + 1,
        };
        return Some(ChiClaim {
            chi_prime: chi_prime as usize,
            source: ClaimSource::Construction(d.family, d.case),
        });
    }
    let lookup = |family, size| small_case_expected(family, size, m, j).ok();
    if i == 2 && m == 1 {
        return lookup(SchemeFamily::H2s, s);
    }
    if i == 3 {
        return lookup(SchemeFamily::H3s, s);
    }
    if s == 2 {
        return lookup(SchemeFamily::Hi2, i);
    }
    if s == 3 {
        return lookup(SchemeFamily::Hi3, i);
    }
    None
}

/// The claimed edge-sum chromatic number for `H^{-i,s}_{m,j}`, where one of
/// the four closed forms (`s+1`, `s+2`, `i+1`, `i+2`) applies.
pub fn edge_sum_claim(i: i64, s: i64, m: i64, j: i64) -> Option<usize> {
    if i == 2 && m == 1 && s >= 3 && (1..=3).contains(&j) {
        return Some((s + 1) as usize);
    }
    if i == 3 && s >= 4 && (1..=2).contains(&m) && (1..=3).contains(&j) {
        return Some((s + 2) as usize);
    }
    if s == 2 && j == 1 && i >= 3 && (1..=3).contains(&m) {
        return Some((i + 1) as usize);
    }
    if s == 3 && i >= 4 && (1..=3).contains(&m) && (1..=2).contains(&j) {
        return Some((i + 2) as usize);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_coloring;
    use crate::graph::build_h;

    #[test]
    fn h2s_verifies_at_thresholds() {
        for (s, j) in [(7, 1), (9, 2), (11, 3)] {
            let g = build_h(2, s, 1, j).unwrap();
            let c = scheme_h2s(s, j).unwrap();
            let report = verify_coloring(&g, &c);
            assert!(report.ok(), "H(-2,{s};1,{j}): {:?}", report.violations);
            assert_eq!(c.class_count() as i64, s);
        }
    }

    #[test]
    fn h2s_below_threshold_is_no_scheme() {
        assert!(matches!(scheme_h2s(6, 1), Err(Error::NoScheme { .. })));
        assert!(matches!(scheme_h2s(8, 2), Err(Error::NoScheme { .. })));
        assert!(matches!(scheme_h2s(10, 3), Err(Error::NoScheme { .. })));
        assert!(matches!(scheme_h2s(9, 4), Err(Error::NoScheme { .. })));
    }

    #[test]
    fn h3s_verifies_at_thresholds() {
        for (s, m, j) in [(8, 1, 1), (8, 2, 1), (10, 1, 2), (10, 2, 2), (12, 1, 3), (12, 2, 3)] {
            let g = build_h(3, s, m, j).unwrap();
            let c = scheme_h3s(s, m, j).unwrap();
            let report = verify_coloring(&g, &c);
            assert!(report.ok(), "H(-3,{s};{m},{j}): {:?}", report.violations);
            assert_eq!(c.class_count() as i64, s + 1);
        }
    }

    #[test]
    fn h3s_below_threshold_is_no_scheme() {
        assert!(matches!(scheme_h3s(9, 1, 2), Err(Error::NoScheme { .. })));
        assert!(matches!(scheme_h3s(7, 2, 1), Err(Error::NoScheme { .. })));
    }

    #[test]
    fn hi2_verifies_at_thresholds() {
        for (i, m) in [(7, 1), (9, 2), (11, 3)] {
            let g = build_h(i, 2, m, 1).unwrap();
            let c = scheme_hi2(i, m).unwrap();
            let report = verify_coloring(&g, &c);
            assert!(report.ok(), "H(-{i},2;{m},1): {:?}", report.violations);
            assert_eq!(c.class_count() as i64, i);
        }
    }

    #[test]
    fn hi3_verifies_at_thresholds() {
        for (i, m, j) in [(8, 1, 1), (8, 1, 2), (10, 2, 1), (10, 2, 2), (12, 3, 1), (12, 3, 2)] {
            let g = build_h(i, 3, m, j).unwrap();
            let c = scheme_hi3(i, m, j).unwrap();
            let report = verify_coloring(&g, &c);
            assert!(report.ok(), "H(-{i},3;{m},{j}): {:?}", report.violations);
            assert_eq!(c.class_count() as i64, i + 1);
        }
    }

    #[test]
    fn hi3_below_threshold_is_no_scheme() {
        assert!(matches!(scheme_hi3(7, 1, 1), Err(Error::NoScheme { .. })));
    }

    #[test]
    fn mirror_maps_h2s_onto_hi2() {
        let mirrored = scheme_h2s(11, 1).unwrap().negated();
        let direct = scheme_hi2(11, 1).unwrap();
        assert_eq!(mirrored.as_pairs(), direct.as_pairs());

        let g = build_h(11, 2, 1, 1).unwrap();
        assert!(verify_coloring(&g, &direct).ok());
    }

    #[test]
    fn small_case_table() {
        let chi = |f, size, m, j| small_case_expected(f, size, m, j).unwrap().chi_prime;
        assert_eq!(chi(SchemeFamily::H2s, 3, 1, 2), 3);
        assert_eq!(chi(SchemeFamily::H3s, 4, 2, 1), 5);
        assert_eq!(chi(SchemeFamily::Hi2, 5, 1, 1), 5);
        assert_eq!(chi(SchemeFamily::Hi3, 11, 3, 2), 12);
        assert!(small_case_expected(SchemeFamily::H2s, 7, 1, 1).is_err());
        assert!(small_case_expected(SchemeFamily::H2s, 4, 2, 1).is_err());
        assert!(small_case_expected(SchemeFamily::Hi2, 4, 1, 2).is_err());
    }

    #[test]
    fn claims_tile_the_parameter_ranges() {
        // Below each construction threshold the small cases take over with
        // the same claimed value; above it the construction claims.
        for s in 3..=14 {
            for j in 1..=3 {
                if j >= s {
                    continue;
                }
                let claim = chi_claim(2, s, 1, j).unwrap();
                assert_eq!(claim.chi_prime as i64, s, "H(-2,{s};1,{j})");
            }
        }
        for i in 4..=14 {
            for m in 1..=3 {
                for j in 1..=2 {
                    let claim = chi_claim(i, 3, m, j).unwrap();
                    assert_eq!(claim.chi_prime as i64, i + 1, "H(-{i},3;{m},{j})");
                }
            }
        }
        assert!(chi_claim(2, 2, 1, 1).is_none());
        assert!(chi_claim(4, 4, 1, 1).is_none());
        assert!(chi_claim(2, 9, 1, 4).is_none());
    }

    #[test]
    fn edge_sum_claims() {
        assert_eq!(edge_sum_claim(2, 9, 1, 2), Some(10));
        assert_eq!(edge_sum_claim(3, 8, 2, 3), Some(10));
        assert_eq!(edge_sum_claim(9, 2, 2, 1), Some(10));
        assert_eq!(edge_sum_claim(4, 3, 1, 2), Some(6));
        assert_eq!(edge_sum_claim(4, 4, 1, 1), None);
        assert_eq!(edge_sum_claim(2, 2, 1, 1), None);
    }
}
