//! Linear algebra over the two-element field.
//!
//! [`BitMatrix`] is a dense column-major matrix with 64-bit packed columns,
//! used for small matrices and as an independent check. Boundary ranks of
//! large complexes go through [`reduce_columns`], a sparse left-to-right
//! column reduction that records the lowest nonzero row of every reduced
//! column (the pivot).

use std::fmt;

use crate::complex::{alternating_sum, Boundary, CellComplex};

/// Dense mod-2 matrix, stored column by column.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = rows.div_ceil(64);
        Self {
            rows,
            cols,
            words,
            data: vec![0; words * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from the row indices of the nonzero entries of each
    /// column. Repeated indices cancel.
    pub fn from_columns<C: AsRef<[u32]>>(rows: usize, columns: &[C]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for &r in col.as_ref() {
                m.flip(r as usize, j);
            }
        }
        m
    }

    /// The boundary map of `c` out of dimension `d`.
    pub fn boundary(c: &CellComplex, d: usize) -> Self {
        let rows = if d == 0 { 0 } else { c.cells(d - 1).len() };
        let cols: Vec<&[u32]> = c.boundary(d).columns().collect();
        let mut m = Self::from_columns(rows, &cols);
        m.cols = c.cells(d).len();
        m.data.resize(m.words * m.cols, 0);
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn column(&self, j: usize) -> &[u64] {
        &self.data[j * self.words..(j + 1) * self.words]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        self.data[c * self.words + r / 64] >> (r % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        if self.get(r, c) != value {
            self.flip(r, c);
        }
    }

    fn flip(&mut self, r: usize, c: usize) {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        self.data[c * self.words + r / 64] ^= 1 << (r % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Matrix product `self * rhs` over the two-element field.
    pub fn mul(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = BitMatrix::zeros(self.rows, rhs.cols);
        for j in 0..rhs.cols {
            let dst = j * out.words;
            for (wi, &word) in rhs.column(j).iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let k = wi * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let src = self.column(k);
                    for (o, s) in out.data[dst..dst + out.words].iter_mut().zip(src) {
                        *o ^= s;
                    }
                }
            }
        }
        out
    }

    /// Rank by Gaussian elimination on columns.
    pub fn rank(&self) -> usize {
        let mut cols: Vec<Vec<u64>> = (0..self.cols).map(|j| self.column(j).to_vec()).collect();
        let mut rank = 0;
        for row in 0..self.rows {
            let (w, bit) = (row / 64, 1u64 << (row % 64));
            let Some(p) = (rank..cols.len()).find(|&j| cols[j][w] & bit != 0) else {
                continue;
            };
            cols.swap(rank, p);
            let (head, tail) = cols.split_at_mut(rank + 1);
            let pivot = &head[rank];
            for col in tail.iter_mut() {
                if col[w] & bit != 0 {
                    for (a, b) in col.iter_mut().zip(pivot) {
                        *a ^= b;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: String = (0..self.cols)
                .map(|c| if self.get(r, c) { '1' } else { '0' })
                .collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Rank of a dense matrix.
pub fn rank(m: &BitMatrix) -> usize {
    m.rank()
}

/// Outcome of a sparse column reduction.
#[derive(Clone, Debug, Default)]
pub struct Reduction {
    pub rank: usize,
    /// `pivot_rows[r]` is true when some reduced column has lowest entry `r`.
    pub pivot_rows: Vec<bool>,
}

const NONE: u32 = u32::MAX;

/// Reduces the columns left to right, adding earlier reduced columns until
/// the lowest entry is new or the column vanishes. Columns flagged in `skip`
/// are known to reduce to zero and are not processed.
pub fn reduce_columns<'a, I>(rows: usize, columns: I, skip: Option<&[bool]>) -> Reduction
where
    I: IntoIterator<Item = &'a [u32]>,
{
    let mut pivot_of = vec![NONE; rows];
    let mut reduced: Vec<Vec<u32>> = Vec::new();
    let mut scratch = Vec::new();
    for (j, col) in columns.into_iter().enumerate() {
        if skip.is_some_and(|s| s[j]) {
            continue;
        }
        let mut cur: Vec<u32> = col.to_vec();
        debug_assert!(cur.windows(2).all(|p| p[0] < p[1]), "column must be sorted");
        while let Some(&low) = cur.last() {
            let p = pivot_of[low as usize];
            if p == NONE {
                pivot_of[low as usize] = reduced.len() as u32;
                reduced.push(cur);
                break;
            }
            symmetric_difference(&cur, &reduced[p as usize], &mut scratch);
            std::mem::swap(&mut cur, &mut scratch);
        }
    }
    Reduction {
        rank: reduced.len(),
        pivot_rows: pivot_of.into_iter().map(|p| p != NONE).collect(),
    }
}

fn symmetric_difference(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    out.clear();
    out.reserve(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
}

/// Rank of a sparse boundary map.
pub fn boundary_rank(b: &Boundary, rows: usize) -> usize {
    reduce_columns(rows, b.columns(), None).rank
}

/// Mod-2 Betti numbers of `cell(n, w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub n: usize,
    pub w: usize,
    pub betti: Vec<u64>,
}

impl BettiTable {
    /// `β_j`, zero above the top dimension.
    pub fn get(&self, j: usize) -> u64 {
        self.betti.get(j).copied().unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.betti)
    }
}

/// Ranks of all boundary maps, `ranks[d] = rank ∂_d` (with `ranks[0] = 0`).
///
/// Dimensions are processed from the top down. A `d`-cell that is the pivot
/// of a reduced column of `∂_{d+1}` is skipped in `∂_d`: that reduced column
/// is a cycle whose lowest cell is the skipped one, so the skipped column is
/// a combination of earlier columns.
pub fn boundary_ranks(c: &CellComplex) -> Vec<usize> {
    let top = c.top_dimension();
    let mut ranks = vec![0; top + 2];
    let mut skip: Option<Vec<bool>> = None;
    for d in (1..=top).rev() {
        let rows = c.cells(d - 1).len();
        let red = reduce_columns(rows, c.boundary(d).columns(), skip.as_deref());
        ranks[d] = red.rank;
        skip = Some(red.pivot_rows);
    }
    ranks
}

/// Ranks computed independently per dimension, without skipping.
pub fn boundary_ranks_plain(c: &CellComplex) -> Vec<usize> {
    let top = c.top_dimension();
    let mut ranks = vec![0; top + 2];
    for d in 1..=top {
        ranks[d] = boundary_rank(c.boundary(d), c.cells(d - 1).len());
    }
    ranks
}

fn betti_from_ranks(c: &CellComplex, ranks: &[usize]) -> BettiTable {
    let betti = (0..=c.top_dimension())
        .map(|d| (c.cells(d).len() - ranks[d] - ranks[d + 1]) as u64)
        .collect();
    BettiTable {
        n: c.n(),
        w: c.w(),
        betti,
    }
}

/// `β_d = f_d - rank ∂_d - rank ∂_{d+1}`.
pub fn betti_numbers(c: &CellComplex) -> BettiTable {
    betti_from_ranks(c, &boundary_ranks(c))
}

/// True iff `∂_d ∘ ∂_{d+1} = 0` for every `d`.
pub fn verify_chain_complex(c: &CellComplex) -> bool {
    use rayon::prelude::*;
    (2..=c.top_dimension()).all(|d| {
        let inner = c.boundary(d - 1);
        let outer = c.boundary(d);
        let rows = c.cells(d - 2).len();
        (0..outer.num_columns()).into_par_iter().all(|j| {
            let mut acc = vec![0u64; rows.div_ceil(64)];
            for &f in outer.column(j) {
                for &g in inner.column(f as usize) {
                    acc[g as usize / 64] ^= 1 << (g % 64);
                }
            }
            acc.iter().all(|&w| w == 0)
        })
    })
}
