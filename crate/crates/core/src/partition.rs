//! Integer partitions, the labels of irreducible representations of symmetric groups.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts.
///
/// Ordering is lexicographic on the parts, so `[4] > [3,1] > [2,2] > [2,1,1]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn normalized(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_parts_unchecked(parts)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `[n]`, labelling the trivial representation.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_parts_unchecked(vec![n])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i`, or zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Whether the Young diagram of `other` fits inside that of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols).map(|c| self.parts.iter().take_while(|&&p| p > c).count()).collect();
        Self::from_parts_unchecked(parts)
    }

    /// Dimension of the Specht module, by the hook length formula.
    pub fn dim_specht(&self) -> u64 {
        let conj = self.conjugate();
        let mut hooks: Vec<u128> = Vec::with_capacity(self.size);
        for (r, &row) in self.parts.iter().enumerate() {
            for c in 0..row {
                let arm = row - c - 1;
                let leg = conj.parts[c] - r - 1;
                hooks.push((arm + leg + 1) as u128);
            }
        }
        // Interleave multiplication and division so intermediates stay small.
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for k in 1..=self.size as u128 {
            num *= k;
            let h = hooks[k as usize - 1];
            den *= h;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
        debug_assert_eq!(den, 1);
        num as u64
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        Self::all_within(n, None)
    }

    /// All partitions of `n` whose diagram fits inside `bound` (when given),
    /// in decreasing lexicographic order.
    pub fn all_within(n: usize, bound: Option<&Partition>) -> Vec<Partition> {
        fn rec(
            rem: usize,
            max: usize,
            row: usize,
            bound: Option<&Partition>,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if rem == 0 {
                out.push(Partition::from_parts_unchecked(cur.clone()));
                return;
            }
            let cap = match bound {
                Some(b) => b.part(row),
                None => usize::MAX,
            };
            let hi = rem.min(max).min(cap);
            for v in (1..=hi).rev() {
                cur.push(v);
                rec(rem - v, v, row + 1, bound, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, 0, bound, &mut Vec::new(), &mut out);
        out
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Runs of three or more equal parts are written with an exponent, so
/// `[3,2,2,2]` prints as `[3,2^3]` while `[1,1]` stays `[1,1]`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let v = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&p| p == v).count();
            let pieces: Vec<String> = if run >= 3 { vec![format!("{v}^{run}")] } else { vec![v.to_string(); run] };
            for p in pieces {
                if !first {
                    write!(f, ",")?;
                }
                first = false;
                write!(f, "{p}")?;
            }
            i += run;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[5,2^2,1^3]`, `5,2,2` or `[]`; exponents are expanded.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body.strip_prefix('[').and_then(|b| b.strip_suffix(']')).unwrap_or(body).trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in body.split(',') {
            let tok = tok.trim();
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (tok, "1"),
            };
            let base: usize = base.parse().map_err(|_| Error::Parse(format!("bad partition part {tok:?} in {s:?}")))?;
            let exp: usize = exp.parse().map_err(|_| Error::Parse(format!("bad exponent in {tok:?} in {s:?}")))?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn specht_dimensions() {
        assert_eq!(p("[9]").dim_specht(), 1);
        assert_eq!(p("[7,2]").dim_specht(), 27);
        assert_eq!(p("[3,2,2,2]").dim_specht(), 84);
        assert_eq!(p("[5,2,2]").dim_specht(), 120);
        assert_eq!(Partition::empty().dim_specht(), 1);
        assert_eq!(p("[2,1]").dim_specht(), 2);
    }

    #[test]
    fn dimensions_square_sum_to_factorial() {
        let mut fact = 1u64;
        for n in 1..=12 {
            fact *= n as u64;
            let sum: u64 = Partition::all(n).iter().map(|l| l.dim_specht().pow(2)).sum();
            assert_eq!(sum, fact, "n = {n}");
        }
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(p("[5,2^2,1^3]").parts(), &[5, 2, 2, 1, 1, 1]);
        assert_eq!(p("[3,2^3]").to_string(), "[3,2^3]");
        assert_eq!(p("[1,1]").to_string(), "[1,1]");
        assert_eq!(p("[2^2]").to_string(), "[2,2]");
        assert_eq!(p("[]"), Partition::empty());
        assert_eq!(p("4, 1").parts(), &[4, 1]);
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
        assert!("[0]".parse::<Partition>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let all = Partition::all(5);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
        let inside = Partition::all_within(3, Some(&p("[2,2]")));
        assert_eq!(inside, vec![p("[2,1]")]);
    }

    #[test]
    fn conjugation() {
        assert_eq!(p("[4,2,1]").conjugate(), p("[3,2,1,1]"));
        assert_eq!(p("[3,2,1,1]").conjugate(), p("[4,2,1]"));
    }
}
