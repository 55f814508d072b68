//! Integer arithmetic of plane multiplicity data: the equations of
//! condition, arithmetic quadratic transformations and the Hudson test,
//! doubling of sub-homaloidal sets, enumeration and the closed-form families
//! with a large first multiplicity.

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Largest degree [`enumerate_homaloidal`] accepts.
pub const ENUMERATION_LIMIT: i64 = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("type {0} is not homaloidal")]
    NotHomaloidal(PlaneType),
    #[error("type {0} is not exceptional")]
    NotExceptional(PlaneType),
    #[error("multiplicity set {0} is not sub-homaloidal")]
    NotSubHomaloidal(MultiplicitySet),
    #[error("degree {d} outside the supported range {min}..={max}")]
    DegreeOutOfRange { d: i64, min: i64, max: i64 },
    #[error("no family with gap {0} (expected 1..=4)")]
    UnknownGap(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

fn perr(position: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        position,
        message: message.into(),
    }
}

/// A degree with a non-increasing multiplicity vector, `(d; μ₁,…,μ_r)`.
///
/// Entries may be zero or negative while a transformation chain is running;
/// the number of entries is never changed by [`quadratic_transform`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneType {
    pub degree: i64,
    mults: Vec<i64>,
}

impl PlaneType {
    pub fn new(degree: i64, mut mults: Vec<i64>) -> Self {
        mults.sort_unstable_by(|a, b| b.cmp(a));
        PlaneType { degree, mults }
    }

    pub fn mults(&self) -> &[i64] {
        &self.mults
    }

    pub fn r(&self) -> usize {
        self.mults.len()
    }

    pub fn mu(&self, i: usize) -> i64 {
        self.mults.get(i).copied().unwrap_or(0)
    }

    pub fn sum(&self) -> i64 {
        self.mults.iter().sum()
    }

    pub fn sum_sq(&self) -> i64 {
        self.mults.iter().map(|m| m * m).sum()
    }

    /// The same type with zero entries removed (the external canonical form).
    pub fn stripped(&self) -> PlaneType {
        PlaneType {
            degree: self.degree,
            mults: self.mults.iter().copied().filter(|&m| m != 0).collect(),
        }
    }

    fn padded(&self, n: usize) -> PlaneType {
        let mut t = self.clone();
        if t.mults.len() < n {
            t.mults.resize(n, 0);
            t.mults.sort_unstable_by(|a, b| b.cmp(a));
        }
        t
    }

    /// Positive multiplicities, for building fat schemes.
    pub fn positive_mults(&self) -> Vec<u32> {
        self.mults
            .iter()
            .filter(|&&m| m > 0)
            .map(|&m| m as u32)
            .collect()
    }
}

fn write_runs(f: &mut fmt::Formatter<'_>, v: &[i64]) -> fmt::Result {
    let mut i = 0;
    let mut first = true;
    while i < v.len() {
        let mut j = i;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        if !first {
            f.write_str(",")?;
        }
        first = false;
        if j - i > 1 {
            write!(f, "{}^{}", v[i], j - i)?;
        } else {
            write!(f, "{}", v[i])?;
        }
        i = j;
    }
    Ok(())
}

impl fmt::Display for PlaneType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.degree)?;
        write_runs(f, &self.mults)
    }
}

impl Serialize for PlaneType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_int(s: &str, offset: usize) -> Result<i64, ParseError> {
    let t = s.trim();
    let lead = s.len() - s.trim_start().len();
    t.parse::<i64>()
        .map_err(|_| perr(offset + lead, format!("expected an integer, found {t:?}")))
}

/// Parses `m1,m2^k,...` starting at byte `offset` of the original literal.
fn parse_list(s: &str, offset: usize) -> Result<Vec<i64>, ParseError> {
    if s.trim().is_empty() {
        return Err(perr(offset, "empty multiplicity list"));
    }
    let mut out = Vec::new();
    let mut pos = offset;
    for item in s.split(',') {
        match item.split_once('^') {
            Some((base, exp)) => {
                let b = parse_int(base, pos)?;
                let epos = pos + base.len() + 1;
                let e = parse_int(exp, epos)?;
                if e < 1 {
                    return Err(perr(epos, "exponent must be at least 1"));
                }
                if e > 10_000 {
                    return Err(perr(epos, "exponent too large"));
                }
                out.extend(std::iter::repeat(b).take(e as usize));
            }
            None => out.push(parse_int(item, pos)?),
        }
        pos += item.len() + 1;
    }
    Ok(out)
}

impl FromStr for PlaneType {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim_start_matches('(').trim_end_matches(')');
        let Some((d, rest)) = s.split_once(';') else {
            return Err(perr(s.len(), "expected ';' after the degree"));
        };
        let degree = parse_int(d, 0)?;
        let mults = parse_list(rest, d.len() + 1)?;
        Ok(PlaneType::new(degree, mults))
    }
}

/// A non-increasing list of positive multiplicities without a degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiplicitySet {
    mults: Vec<u32>,
}

impl MultiplicitySet {
    /// Sorts the input; zero entries are dropped.
    pub fn new(mut mults: Vec<u32>) -> Self {
        mults.retain(|&m| m > 0);
        mults.sort_unstable_by(|a, b| b.cmp(a));
        MultiplicitySet { mults }
    }

    pub fn mults(&self) -> &[u32] {
        &self.mults
    }
}

impl fmt::Display for MultiplicitySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<i64> = self.mults.iter().map(|&m| m as i64).collect();
        write_runs(f, &v)
    }
}

impl Serialize for MultiplicitySet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for MultiplicitySet {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let v = parse_list(s, 0)?;
        if let Some(i) = v.iter().position(|&m| m < 1) {
            return Err(perr(0, format!("entry {i} is not positive")));
        }
        Ok(MultiplicitySet::new(
            v.into_iter().map(|m| m as u32).collect(),
        ))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ImproperReason {
    NegativeMultiplicity,
    NonPositiveDegree,
    DegreeNotDecreasing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Proper,
    Improper(ImproperReason),
}

/// Successive quadratic transforms of a type and the resulting verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransformChain {
    pub steps: Vec<PlaneType>,
    pub verdict: Verdict,
}

impl TransformChain {
    pub fn is_proper(&self) -> bool {
        self.verdict == Verdict::Proper
    }

    pub fn last(&self) -> &PlaneType {
        self.steps.last().expect("chain is never empty")
    }
}

impl fmt::Display for TransformChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(" -> ")?;
            }
            write!(f, "({})", t.stripped())?;
        }
        match self.verdict {
            Verdict::Proper => f.write_str(" : proper"),
            Verdict::Improper(r) => write!(f, " : improper ({r:?})"),
        }
    }
}

/// Σμ = 3d−3 and Σμ² = d²−1 with no negative entries and d ≥ 1.
pub fn is_homaloidal(t: &PlaneType) -> bool {
    let d = t.degree;
    d >= 1 && t.mults.iter().all(|&m| m >= 0) && t.sum() == 3 * d - 3 && t.sum_sq() == d * d - 1
}

/// The degree s with Σμ = 3(s−1) and Σμ² = s(s−1), if any.
pub fn is_sub_homaloidal(m: &MultiplicitySet) -> Option<i64> {
    let sum: i64 = m.mults.iter().map(|&x| x as i64).sum();
    let sq: i64 = m.mults.iter().map(|&x| (x as i64).pow(2)).sum();
    if sum % 3 != 0 {
        return None;
    }
    let s = sum / 3 + 1;
    (s >= 2 && sq == s * (s - 1)).then_some(s)
}

/// Σν = 3t−1 and Σν² = t²+1 (the numerical class of a (−1)-curve).
pub fn is_exceptional(t: &PlaneType) -> bool {
    let d = t.degree;
    t.sum() == 3 * d - 1 && t.sum_sq() == d * d + 1
}

/// `(2s−1; 2μ)` for a set sub-homaloidal in degree s.
pub fn double(m: &MultiplicitySet) -> Result<PlaneType, TypeError> {
    let s = is_sub_homaloidal(m).ok_or_else(|| TypeError::NotSubHomaloidal(m.clone()))?;
    Ok(PlaneType::new(
        2 * s - 1,
        m.mults.iter().map(|&x| 2 * x as i64).collect(),
    ))
}

/// Inverse of [`double`]: an odd-degree type with all entries even, halved.
pub fn halve(t: &PlaneType) -> Option<MultiplicitySet> {
    let t = t.stripped();
    if t.degree % 2 != 1 || t.mults.iter().any(|&m| m <= 0 || m % 2 != 0) {
        return None;
    }
    let m = MultiplicitySet::new(t.mults.iter().map(|&x| (x / 2) as u32).collect());
    (is_sub_homaloidal(&m) == Some((t.degree + 1) / 2)).then_some(m)
}

/// Arithmetic quadratic transformation based on the three largest entries.
pub fn quadratic_transform(t: &PlaneType) -> PlaneType {
    let t = t.padded(3);
    let (d, m) = (t.degree, &t.mults);
    let mut out = Vec::with_capacity(m.len());
    out.push(d - m[1] - m[2]);
    out.push(d - m[0] - m[2]);
    out.push(d - m[0] - m[1]);
    out.extend_from_slice(&m[3..]);
    PlaneType::new(2 * d - m[0] - m[1] - m[2], out)
}

fn run_chain(
    t: &PlaneType,
    terminal: impl Fn(&PlaneType) -> bool,
    min_degree: i64,
) -> TransformChain {
    let mut steps = vec![t.clone()];
    let guard = t.degree.max(0) as usize + 1;
    for _ in 0..=guard {
        let cur = steps.last().unwrap();
        if terminal(cur) {
            return TransformChain {
                steps,
                verdict: Verdict::Proper,
            };
        }
        let next = quadratic_transform(cur);
        let reason = if next.degree >= cur.degree {
            Some(ImproperReason::DegreeNotDecreasing)
        } else if next.degree < min_degree {
            Some(ImproperReason::NonPositiveDegree)
        } else if next.mults.iter().any(|&m| m < 0) && !terminal(&next) {
            Some(ImproperReason::NegativeMultiplicity)
        } else {
            None
        };
        steps.push(next);
        if let Some(r) = reason {
            return TransformChain {
                steps,
                verdict: Verdict::Improper(r),
            };
        }
    }
    TransformChain {
        steps,
        verdict: Verdict::Improper(ImproperReason::DegreeNotDecreasing),
    }
}

/// Hudson test: proper iff the chain reaches (1; 0,…,0).
pub fn hudson_test(t: &PlaneType) -> Result<TransformChain, TypeError> {
    if !is_homaloidal(t) {
        return Err(TypeError::NotHomaloidal(t.clone()));
    }
    Ok(run_chain(
        t,
        |c| c.degree == 1 && c.mults.iter().all(|&m| m == 0),
        1,
    ))
}

/// Proper iff the chain reaches (0; −1, 0,…,0).
pub fn exceptional_proper_test(t: &PlaneType) -> Result<TransformChain, TypeError> {
    if !is_exceptional(t) {
        return Err(TypeError::NotExceptional(t.clone()));
    }
    let terminal = |c: &PlaneType| {
        c.degree == 0
            && c.mults.iter().filter(|&&m| m == -1).count() == 1
            && c.mults.iter().all(|&m| m == 0 || m == -1)
    };
    Ok(run_chain(t, terminal, 0))
}

fn extend(prefix: &mut Vec<i64>, max: i64, sum: i64, sq: i64, out: &mut Vec<Vec<i64>>) {
    if sum == 0 {
        if sq == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    // remaining parts in [1, m] need sum <= sq <= m * sum
    for m in (1..=max.min(sum)).rev() {
        let (s2, q2) = (sum - m, sq - m * m);
        if q2 < s2 || q2 > m * s2 {
            continue;
        }
        prefix.push(m);
        extend(prefix, m, s2, q2, out);
        prefix.pop();
    }
}

/// All homaloidal types of degree d (positive entries, μ₁ ≤ d−1), in
/// lexicographically decreasing order; optionally only the proper ones.
pub fn enumerate_homaloidal(d: i64, proper_only: bool) -> Result<Vec<PlaneType>, TypeError> {
    if !(2..=ENUMERATION_LIMIT).contains(&d) {
        return Err(TypeError::DegreeOutOfRange {
            d,
            min: 2,
            max: ENUMERATION_LIMIT,
        });
    }
    let (sum, sq) = (3 * d - 3, d * d - 1);
    let firsts: Vec<i64> = (1..d).rev().collect();
    let types: Vec<PlaneType> = firsts
        .par_iter()
        .flat_map_iter(|&m1| {
            let mut out = Vec::new();
            let (s2, q2) = (sum - m1, sq - m1 * m1);
            if q2 >= s2 && q2 <= m1 * s2 {
                extend(&mut vec![m1], m1, s2, q2, &mut out);
            }
            out.into_iter().map(move |v| PlaneType::new(d, v))
        })
        .filter(|t| !proper_only || hudson_test(t).map(|c| c.is_proper()).unwrap_or(false))
        .collect();
    Ok(types)
}

fn build(d: i64, parts: &[(i64, i64)]) -> PlaneType {
    let mut v = Vec::new();
    for &(m, k) in parts {
        v.extend(std::iter::repeat(m).take(k.max(0) as usize));
    }
    PlaneType::new(d, v)
}

/// Closed-form list of proper types with μ₁ = d − gap, gap ∈ {1,2,3,4}.
pub fn classify_family(d: i64, gap: i64) -> Result<Vec<PlaneType>, TypeError> {
    let min = match gap {
        1 => 2,
        2 => 4,
        3 => 6,
        4 => 7,
        g => return Err(TypeError::UnknownGap(g)),
    };
    if d < min {
        return Err(TypeError::DegreeOutOfRange {
            d,
            min,
            max: i64::MAX,
        });
    }
    let mut out = match gap {
        1 => vec![build(d, &[(d - 1, 1), (1, 2 * d - 2)])],
        2 => vec![build(d, &[(d - 2, 1), (2, d - 2), (1, 3)])],
        3 => {
            // r2 + r1 = 5 and r2 + 3 r3 = 2d − 5 (r_k = number of entries k)
            (0..=5)
                .filter(|r2| (2 * d - 5 - r2) % 3 == 0)
                .map(|r2| {
                    let r3 = (2 * d - 5 - r2) / 3;
                    build(d, &[(d - 3, 1), (3, r3), (2, r2), (1, 5 - r2)])
                })
                .collect()
        }
        _ => {
            let mut v = Vec::new();
            // r1 + r3 + 4 r2 / 3 = 7; r2 = 0 is proper only when d + r3 ≡ 1 mod 4
            for r3 in 0..=7 {
                if (d - 3 - r3) % 2 == 0 && (d + r3) % 4 == 1 {
                    v.push((r3, 0, 7 - r3, (d - 3 - r3) / 2));
                }
            }
            for r3 in 0..=3 {
                if (d - 4 - r3) % 2 == 0 {
                    v.push((r3, 3, 3 - r3, (d - 4 - r3) / 2));
                }
            }
            v.into_iter()
                .filter(|&(_, _, _, r4)| r4 >= 0 && (r4 == 0 || d - 4 >= 4))
                .map(|(r3, r2, r1, r4)| build(d, &[(d - 4, 1), (4, r4), (3, r3), (2, r2), (1, r1)]))
                .collect()
        }
    };
    out.sort_by(|a, b| b.mults.cmp(&a.mults));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> PlaneType {
        s.parse().unwrap()
    }
    fn m(s: &str) -> MultiplicitySet {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let a = t("8;5,3^2,2^5");
        assert_eq!(a.degree, 8);
        assert_eq!(a.mults(), &[5, 3, 3, 2, 2, 2, 2, 2]);
        assert_eq!(a.to_string(), "8;5,3^2,2^5");
        assert_eq!(t("(5; 2, 2,2,2,2,2)").to_string(), "5;2^6");
        let e = "0;".parse::<PlaneType>().unwrap_err();
        assert_eq!(e.position, 2);
        let e = "7;4,x,1".parse::<PlaneType>().unwrap_err();
        assert_eq!(e.position, 4);
        assert!("7".parse::<PlaneType>().is_err());
        assert!("7;3^0".parse::<PlaneType>().is_err());
    }

    #[test]
    fn homaloidal_examples() {
        assert!(is_homaloidal(&t("2;1^3")));
        for d in 3..=8 {
            assert!(is_homaloidal(&build(d, &[(d - 1, 1), (1, 2 * d - 2)])));
        }
        assert!(is_homaloidal(&t("13;8^2,2^10")));
        assert!(!is_homaloidal(&t("7;3^4,1^3")));
        assert!(is_homaloidal(&t("7;3^5,1^3")));
        assert!(is_homaloidal(&t("1;0^4")));
    }

    #[test]
    fn sub_homaloidal_examples() {
        assert_eq!(is_sub_homaloidal(&m("1^6")), Some(3));
        assert_eq!(is_sub_homaloidal(&m("3^8")), Some(9));
        assert_eq!(is_sub_homaloidal(&m("4^2,1^10")), Some(7));
        for s in (3..=15).step_by(2) {
            let h = (s - 1) / 2;
            let set = MultiplicitySet::new(
                std::iter::repeat(h)
                    .take(4)
                    .chain(std::iter::repeat(1).take(s as usize - 1))
                    .collect(),
            );
            assert_eq!(is_sub_homaloidal(&set), Some(s as i64));
        }
        assert_eq!(is_sub_homaloidal(&m("2,1")), None);
    }

    #[test]
    fn doubling() {
        assert_eq!(double(&m("1^6")).unwrap(), t("5;2^6"));
        assert_eq!(double(&m("4^2,1^10")).unwrap(), t("13;8^2,2^10"));
        assert_eq!(double(&m("4,3^6,1^2")).unwrap(), t("17;8,6^6,2^2"));
        assert!(double(&m("2,1")).is_err());
        assert_eq!(halve(&t("17;8,6^6,2^2")), Some(m("4,3^6,1^2")));
        assert_eq!(halve(&t("5;4,1^8")), None);
    }

    #[test]
    fn transforms() {
        assert_eq!(quadratic_transform(&t("8;5,3^2,2^5")), t("5;2^6,0^2"));
        assert_eq!(quadratic_transform(&t("12;8,4,3^7")), t("9;5,3^6,1,0"));
        assert_eq!(quadratic_transform(&t("5;2^6")), t("4;2^3,1^3"));
        assert_eq!(quadratic_transform(&t("1;1,1")), t("0;0,0,-1"));
    }

    #[test]
    fn hudson_examples() {
        let c = hudson_test(&t("5;4,1^8")).unwrap();
        assert!(c.is_proper());
        let degs: Vec<i64> = c.steps.iter().map(|s| s.degree).collect();
        assert_eq!(degs, vec![5, 4, 3, 2, 1]);
        assert_eq!(c.steps[1].stripped(), t("4;3,1^6"));

        let c = hudson_test(&t("12;8,4,3^7")).unwrap();
        assert_eq!(
            c.verdict,
            Verdict::Improper(ImproperReason::NegativeMultiplicity)
        );
        assert_eq!(c.steps[3].stripped(), t("5;3^2,1^6"));
        assert!(c.last().mults().iter().any(|&m| m < 0));

        let c = hudson_test(&t("13;8^2,2^10")).unwrap();
        assert_eq!(c.steps.len(), 2);
        assert!(!c.is_proper());
        assert!(hudson_test(&t("7;3^4,1^3")).is_err());
    }

    #[test]
    fn exceptional_examples() {
        let c = exceptional_proper_test(&t("1;1,1,0")).unwrap();
        assert!(c.is_proper());
        assert_eq!(c.last(), &t("0;0,0,-1"));
        assert!(exceptional_proper_test(&t("4;2^3,1^5"))
            .unwrap()
            .is_proper());
        assert!(exceptional_proper_test(&t("2;1^4,0^2")).is_err());
        assert!(exceptional_proper_test(&t("2;1^5")).unwrap().is_proper());
        assert!(!is_exceptional(&t("2;1^4")));
        assert!(exceptional_proper_test(&t("0;-1")).unwrap().is_proper());
        // numerically exceptional but not a (−1)-curve class
        let c = exceptional_proper_test(&t("5;3^2,1^8")).unwrap();
        assert!(!c.is_proper());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_homaloidal(2, false).unwrap(), vec![t("2;1^3")]);
        assert_eq!(
            enumerate_homaloidal(5, true).unwrap(),
            vec![t("5;4,1^8"), t("5;3,2^3,1^3"), t("5;2^6")]
        );
        let seven = enumerate_homaloidal(7, true).unwrap();
        assert!(seven.contains(&t("7;3^4,2^3")));
        assert!(!seven.contains(&t("7;3^5,1^3")));
        assert!(enumerate_homaloidal(1, false).is_err());
        let counts: Vec<usize> = (2..=12)
            .map(|d| enumerate_homaloidal(d, true).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 4, 5, 9, 10, 17, 19, 29]);
    }

    #[test]
    fn family_examples() {
        assert_eq!(classify_family(6, 2).unwrap(), vec![t("6;4,2^4,1^3")]);
        assert_eq!(
            classify_family(7, 3).unwrap(),
            vec![t("7;4,3^3,1^5"), t("7;4,3^2,2^3,1^2")]
        );
        assert!(classify_family(9, 4).unwrap().contains(&t("9;5,4,3^3,2^3")));
        assert_eq!(classify_family(7, 4).unwrap(), vec![t("7;3^4,2^3")]);
        assert!(classify_family(5, 3).is_err());
        assert!(classify_family(9, 5).is_err());
    }
}
