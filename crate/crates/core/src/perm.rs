//! Permutations on `{0..n-1}` with left-to-right composition and 1-indexed
//! cycle notation for I/O.
//!
//! `a.compose(&b)` means "apply `a`, then `b`": `(a·b)(x) = b(a(x))`. All
//! word products in this crate use this convention unless a routine says
//! otherwise.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::BitXor;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::PermError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_count(count: usize) -> Parity {
        if count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(self) -> bool {
        self == Parity::Even
    }
}

impl BitXor for Parity {
    type Output = Parity;

    fn bitxor(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => f.write_str("even"),
            Parity::Odd => f.write_str("odd"),
        }
    }
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        assert!((1..=256).contains(&n), "degree {n} out of range");
        Perm {
            images: (0..n).map(|i| i as u8).collect(),
        }
    }

    /// Builds a permutation from its image list, checking that it is a
    /// bijection on `{0..n-1}`.
    pub fn from_images(images: &[usize]) -> Result<Perm, PermError> {
        let n = images.len();
        if n == 0 || n > 256 {
            return Err(PermError::BadDegree(n));
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x >= n {
                return Err(PermError::OutOfRange { point: x + 1, n });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(PermError::Repeated(x + 1));
            }
        }
        Ok(Perm {
            images: images.iter().map(|&x| x as u8).collect(),
        })
    }

    /// Builds a permutation of degree `n` from 0-indexed cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Perm, PermError> {
        if n == 0 || n > 256 {
            return Err(PermError::BadDegree(n));
        }
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= n {
                    return Err(PermError::OutOfRange { point: p + 1, n });
                }
                if std::mem::replace(&mut seen[p], true) {
                    return Err(PermError::Repeated(p + 1));
                }
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Perm::from_images(&images)
    }

    /// Parses 1-indexed cycle notation such as `"(1,2)(4,5)"` or `"()"`.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Perm, PermError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(PermError::Malformed("empty cycle text".into()));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| PermError::Malformed(format!("expected '(' at {rest:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| PermError::Malformed("unclosed cycle".into()))?;
            let inner = &body[..close];
            rest = &body[close + 1..];
            if inner.is_empty() {
                continue;
            }
            let mut cycle = Vec::new();
            for token in inner.split(',') {
                let point: usize = token
                    .parse()
                    .map_err(|_| PermError::Malformed(format!("bad point {token:?}")))?;
                if point == 0 || point > n {
                    return Err(PermError::OutOfRange { point, n });
                }
                cycle.push(point - 1);
            }
            cycles.push(cycle);
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Perm::from_cycles(n, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// Apply `self`, then `other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::SizeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then(other))
    }

    // Unchecked variant for callers that already know the degrees agree.
    pub(crate) fn then(&self, other: &Perm) -> Perm {
        Perm {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Perm { images }
    }

    pub fn pow(&self, exp: usize) -> Perm {
        (0..exp).fold(Perm::identity(self.degree()), |acc, _| acc.then(self))
    }

    pub fn order(&self) -> usize {
        let mut power = self.clone();
        let mut k = 1;
        while !power.is_identity() {
            power = power.then(self);
            k += 1;
        }
        k
    }

    /// Non-trivial cycles, 0-indexed, each starting at its smallest point and
    /// sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.apply(p);
            }
        }
        count
    }

    /// Sorted cycle lengths, fixed points excluded.
    pub fn cycle_type(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).sorted().collect()
    }

    pub fn parity(&self) -> Parity {
        Parity::from_count(self.degree() - self.cycle_count())
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.apply(i) != i).collect()
    }

    pub fn format_cycles(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| format!("({})", c.iter().map(|p| p + 1).join(",")))
            .collect()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_cycles())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self.format_cycles())
    }
}

impl FromStr for Perm {
    type Err = PermError;

    /// Parses cycle notation with the degree taken as the largest point
    /// mentioned; use [`Perm::parse_cycles`] to fix the degree.
    fn from_str(s: &str) -> Result<Perm, PermError> {
        let max_point = s
            .split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(1);
        Perm::parse_cycles(s, max_point.max(1))
    }
}

/// Closure of `gens` under composition, found by breadth-first search from
/// the identity. Elements come back in discovery order.
pub fn generate(gens: &[Perm]) -> Result<Vec<Perm>, PermError> {
    let first = gens.first().ok_or(PermError::NoGenerators)?;
    let n = first.degree();
    if let Some(g) = gens.iter().find(|g| g.degree() != n) {
        return Err(PermError::SizeMismatch(n, g.degree()));
    }
    let identity = Perm::identity(n);
    let mut seen: HashSet<Perm> = HashSet::from([identity.clone()]);
    let mut order = vec![identity.clone()];
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(order)
}

/// Every permutation of `n` points, in lexicographic order of image lists.
pub fn all_permutations(n: usize) -> Vec<Perm> {
    (0..n)
        .permutations(n)
        .map(|images| Perm {
            images: images.into_iter().map(|x| x as u8).collect(),
        })
        .collect()
}

/// Brute-force alternating group: filters [`all_permutations`] by parity.
pub fn even_permutations(n: usize) -> Vec<Perm> {
    all_permutations(n)
        .into_iter()
        .filter(|p| p.parity().is_even())
        .collect()
}
