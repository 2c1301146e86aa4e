//! Integer partitions, Young-diagram geometry and rim-hook removal.
//!
//! Partitions are stored in canonical form: weakly decreasing parts with
//! trailing zeros stripped, so structural equality is partition equality.
//! Rows are indexed from the top, columns from the left, both from 0.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts, rejecting sequences that increase.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// The one-row partition `(k)`.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![k] }
        }
    }

    /// The one-column partition `(1^k)`, i.e. `(k)` transposed.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Length of the first row (0 for the empty partition).
    pub fn width(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part `k`, or 0 beyond the length.
    pub fn part(&self, k: usize) -> u32 {
        self.parts.get(k).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.width() as usize;
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn fits_box(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.width() <= cols
    }

    /// Adds `m` boxes to the first row.
    pub fn add_first_row(&self, m: u32) -> Partition {
        if m == 0 {
            return self.clone();
        }
        let mut parts = self.parts.clone();
        match parts.first_mut() {
            Some(first) => *first += m,
            None => parts.push(m),
        }
        Partition { parts }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|k| self.parts[k] >= other.parts[k])
    }

    /// The border strip of `n` boxes starting at the top-right box, if the
    /// rim has at least `n` boxes. The strip need not leave a partition
    /// behind; see [`RimHook::remainder`].
    pub fn rim_hook(&self, n: usize) -> Option<RimHook> {
        if n == 0 || self.is_empty() {
            return None;
        }
        let mut cells = Vec::with_capacity(n);
        let (mut row, mut col) = (0usize, self.parts[0] as usize - 1);
        loop {
            cells.push((row, col));
            if cells.len() == n {
                break;
            }
            if (self.part(row + 1) as usize) > col {
                row += 1;
            } else if col > 0 {
                col -= 1;
            } else {
                return None;
            }
        }
        Some(RimHook {
            shape: self.clone(),
            cells,
        })
    }

    /// Removes the length-`n` rim hook anchored at the top-right box.
    ///
    /// Returns the remaining partition with sign `(-1)^(h+1)`, `h` the number
    /// of rows the hook meets, or zero when the hook does not exist or its
    /// removal does not leave a partition.
    pub fn remove_rim_hook(&self, n: usize) -> Result<SignedPartition> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "rim-hook length must be positive".into(),
            ));
        }
        Ok(match self.rim_hook(n).and_then(|hook| hook.removal()) {
            Some((partition, height)) => SignedPartition::Term {
                sign: if height % 2 == 1 { 1 } else { -1 },
                partition,
            },
            None => SignedPartition::Zero,
        })
    }

    /// All partitions inside the `rows x cols` box, ordered by size and then
    /// reverse-lexicographically within each size.
    pub fn in_box(rows: usize, cols: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(rows);
        fn rec(rows: usize, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition::from_unsorted(current.clone()));
            if current.len() == rows {
                return;
            }
            for p in 1..=max {
                current.push(p);
                rec(rows, p, current, out);
                current.pop();
            }
        }
        rec(rows, cols, &mut current, &mut out);
        out.sort_by(Partition::graded_cmp);
        out.dedup();
        out
    }

    /// All partitions of `n` with at most `rows` rows.
    pub fn of_size(n: u32, rows: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(left: u32, max: u32, rows: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if cur.len() == rows {
                return;
            }
            for p in (1..=max.min(left)).rev() {
                cur.push(p);
                rec(left - p, p, rows, cur, out);
                cur.pop();
            }
        }
        rec(n, n, rows, &mut current, &mut out);
        out
    }

    /// Size ascending, then reverse-lexicographic: `[], [1], [2], [1,1], ...`.
    pub fn graded_cmp(&self, other: &Partition) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.graded_cmp(other)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `[a,b,c]`; `[]` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |message: String| Error::Parse { column: 1, message };
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| bad(format!("expected [a,b,...], found {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| bad(format!("bad part {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// A border strip of a partition, anchored at the top-right box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHook {
    shape: Partition,
    cells: Vec<(usize, usize)>,
}

impl RimHook {
    /// Cells `(row, col)` from the top-right end downwards.
    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    /// Number of rows the strip meets.
    pub fn height(&self) -> usize {
        let first = self.cells.first().map_or(0, |c| c.0);
        let last = self.cells.last().map_or(0, |c| c.0);
        last - first + 1
    }

    /// Row lengths left after deleting the strip; possibly not a partition.
    pub fn remainder(&self) -> Vec<u32> {
        let mut rows = self.shape.parts.clone();
        for &(r, _) in &self.cells {
            rows[r] -= 1;
        }
        rows
    }

    /// The remaining partition and the height, if the removal exists.
    pub fn removal(&self) -> Option<(Partition, usize)> {
        let rows = self.remainder();
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some((Partition::from_unsorted(rows), self.height()))
    }
}

/// A partition with a sign, or zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SignedPartition {
    Zero,
    Term { sign: i32, partition: Partition },
}

impl SignedPartition {
    pub fn is_zero(&self) -> bool {
        matches!(self, SignedPartition::Zero)
    }
}
