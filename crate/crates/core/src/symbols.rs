//! Symbols: permutations of `1..=n` cut into ordered blocks by bars.
//!
//! A symbol with `m` blocks indexes an `(n - m)`-dimensional cell of the
//! Salvetti-type complex. The face order is generated by the cover move
//! "remove a bar and shuffle the two neighbouring blocks together", so the
//! codimension-one faces of a symbol are obtained by splitting one block into
//! two order-preserving pieces.
//!
//! The canonical text form writes labels in decimal separated by one space,
//! with `|` (no surrounding spaces) between blocks, e.g. `3 1|2`. Symbols are
//! totally ordered by that text, byte-wise.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest particle count a [`Symbol`] can hold.
pub const MAX_N: usize = 32;

/// Largest `n` for which [`Symbol::rank`] fits in a `u64`.
pub const MAX_RANK_N: usize = 16;

/// Largest `n` accepted by [`enumerate_symbols`].
pub const MAX_ENUMERATE_N: usize = 10;

type Labels = SmallVec<[u8; 16]>;
type TextBuf = SmallVec<[u8; 96]>;

/// A permutation in one-line notation with bars between some neighbours.
///
/// Bit `i` of the bar mask is set when there is a bar between positions `i`
/// and `i + 1` (0-based).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Symbol {
    labels: Labels,
    bars: u32,
}

impl Symbol {
    /// Builds a symbol from its one-line labels and left-to-right block sizes.
    pub fn new(labels: &[u8], block_sizes: &[usize]) -> Result<Self> {
        let text = || format!("{labels:?} / {block_sizes:?}");
        let n = labels.len();
        if n == 0 || n > MAX_N {
            return Err(Error::Parse {
                text: text(),
                reason: format!("n must be in 1..={MAX_N}"),
            });
        }
        check_permutation(labels).map_err(|reason| Error::Parse {
            text: text(),
            reason,
        })?;
        if block_sizes.contains(&0) {
            return Err(Error::Parse {
                text: text(),
                reason: "empty block".into(),
            });
        }
        if block_sizes.iter().sum::<usize>() != n {
            return Err(Error::Parse {
                text: text(),
                reason: "block sizes do not sum to n".into(),
            });
        }
        let mut bars = 0u32;
        let mut pos = 0;
        for &k in &block_sizes[..block_sizes.len() - 1] {
            pos += k;
            bars |= 1 << (pos - 1);
        }
        Ok(Self::from_raw(labels.iter().copied().collect(), bars))
    }

    /// Builds a symbol from a list of blocks.
    pub fn from_blocks<B: AsRef<[u8]>>(blocks: &[B]) -> Result<Self> {
        let labels: Vec<u8> = blocks
            .iter()
            .flat_map(|b| b.as_ref().iter().copied())
            .collect();
        let sizes: Vec<usize> = blocks.iter().map(|b| b.as_ref().len()).collect();
        Self::new(&labels, &sizes)
    }

    /// The all-singletons symbol (a vertex) for a permutation.
    pub fn vertex(labels: &[u8]) -> Result<Self> {
        Self::new(labels, &vec![1; labels.len()])
    }

    pub(crate) fn from_raw(labels: Labels, bars: u32) -> Self {
        debug_assert!(labels.len() <= MAX_N);
        debug_assert!(labels.len() == 32 || bars >> (labels.len().saturating_sub(1)) == 0);
        Self { labels, bars }
    }

    /// Number of particles.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// The permutation in one-line order.
    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    /// Bar mask: bit `i` set iff a bar follows position `i`.
    pub fn bars(&self) -> u32 {
        self.bars
    }

    pub fn num_blocks(&self) -> usize {
        self.bars.count_ones() as usize + 1
    }

    /// `n - m` where `m` is the number of blocks.
    pub fn dimension(&self) -> usize {
        self.n() - self.num_blocks()
    }

    pub fn blocks(&self) -> Blocks<'_> {
        Blocks {
            labels: &self.labels,
            bars: self.bars,
            start: 0,
        }
    }

    pub fn block_sizes(&self) -> SmallVec<[usize; 16]> {
        self.blocks().map(<[u8]>::len).collect()
    }

    /// Largest block size.
    pub fn width(&self) -> usize {
        self.blocks().map(<[u8]>::len).max().unwrap_or(0)
    }

    /// Canonical text as bytes.
    fn text(&self) -> TextBuf {
        let mut buf = TextBuf::new();
        for (i, &l) in self.labels.iter().enumerate() {
            if l >= 10 {
                buf.push(b'0' + l / 10);
            }
            buf.push(b'0' + l % 10);
            if i + 1 < self.labels.len() {
                buf.push(if self.bars >> i & 1 == 1 { b'|' } else { b' ' });
            }
        }
        buf
    }

    /// Index of the symbol in `0..n!·2^(n-1)`: Lehmer rank of the permutation
    /// times `2^(n-1)` plus the bar mask.
    ///
    /// Panics if `n > MAX_RANK_N`.
    pub fn rank(&self) -> u64 {
        let n = self.n();
        assert!(n <= MAX_RANK_N, "rank is only defined for n <= {MAX_RANK_N}");
        let mut perm_rank = 0u64;
        let mut used = 0u32;
        for (i, &l) in self.labels.iter().enumerate() {
            let smaller_unused = (l as u32 - 1) - (used & ((1u32 << (l - 1)) - 1)).count_ones();
            perm_rank = perm_rank * (n - i) as u64 + smaller_unused as u64;
            used |= 1 << (l - 1);
        }
        (perm_rank << (n - 1)) | self.bars as u64
    }

    /// Codimension-one faces: every block of size `k >= 2` is split, for each
    /// of its `2^k - 2` proper 2-colourings, into (colour-1 subsequence |
    /// colour-2 subsequence).
    pub fn codim1_faces(&self) -> Vec<Symbol> {
        let mut out = Vec::new();
        let mut start = 0;
        for block in self.blocks() {
            let k = block.len();
            if k >= 2 {
                for mask in 1u32..(1 << k) - 1 {
                    let mut labels = self.labels.clone();
                    let mut w = start;
                    for (i, &l) in block.iter().enumerate() {
                        if mask >> i & 1 == 1 {
                            labels[w] = l;
                            w += 1;
                        }
                    }
                    let cut = w;
                    for (i, &l) in block.iter().enumerate() {
                        if mask >> i & 1 == 0 {
                            labels[w] = l;
                            w += 1;
                        }
                    }
                    out.push(Symbol::from_raw(labels, self.bars | 1 << (cut - 1)));
                }
            }
            start += k;
        }
        out
    }

    /// Codimension-one cofaces in the full poset: remove one bar and shuffle
    /// the two adjacent blocks, keeping the order within each.
    pub fn merges(&self) -> Vec<Symbol> {
        let blocks: Vec<&[u8]> = self.blocks().collect();
        let mut out = Vec::new();
        let mut start = 0;
        for pair in blocks.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let k = a.len() + b.len();
            let bar = start + a.len() - 1;
            for mask in 0u32..(1 << k) {
                if mask.count_ones() as usize != a.len() {
                    continue;
                }
                let mut labels = self.labels.clone();
                let (mut ia, mut ib) = (0, 0);
                for i in 0..k {
                    labels[start + i] = if mask >> i & 1 == 1 {
                        ia += 1;
                        a[ia - 1]
                    } else {
                        ib += 1;
                        b[ib - 1]
                    };
                }
                out.push(Symbol::from_raw(labels, self.bars & !(1 << bar)));
            }
            start += a.len();
        }
        out
    }

    /// True iff `self <= other` in the face order.
    ///
    /// The blocks of `self` must split into consecutive runs whose unions are
    /// the blocks of `other`, in order, and inside each block of `other` the
    /// elements coming from one block of `self` keep their relative order.
    pub fn is_face_of(&self, other: &Symbol) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let n = self.n();
        // position of every label inside `other`
        let mut pos = [0u8; MAX_N + 1];
        for (i, &l) in other.labels.iter().enumerate() {
            pos[l as usize] = i as u8;
        }
        // block index of each position in `other`
        let mut block_of = [0u8; MAX_N];
        let mut b = 0u8;
        for (i, slot) in block_of.iter_mut().enumerate().take(n) {
            *slot = b;
            if other.bars >> i & 1 == 1 {
                b += 1;
            }
        }
        let mut last_block = 0u8;
        for block in self.blocks() {
            let target = block_of[pos[block[0] as usize] as usize];
            if target < last_block {
                return false;
            }
            let mut prev: Option<u8> = None;
            for &l in block {
                let p = pos[l as usize];
                if block_of[p as usize] != target {
                    return false;
                }
                if prev.is_some_and(|q| q >= p) {
                    return false;
                }
                prev = Some(p);
            }
            last_block = target;
        }
        // Each of `self`'s blocks lies inside one block of `other` with the
        // targets non-decreasing; because every label is used once, the runs
        // cover `other`'s blocks exactly. Runs must also be contiguous in
        // `self`, which the non-decreasing targets already force.
        true
    }
}

/// Iterator over the blocks of a symbol as label slices.
pub struct Blocks<'a> {
    labels: &'a [u8],
    bars: u32,
    start: usize,
}

impl<'a> Iterator for Blocks<'a> {
    type Item = &'a [u8];

    fn next(&mut self) -> Option<&'a [u8]> {
        let n = self.labels.len();
        if self.start >= n {
            return None;
        }
        let rest = if self.start >= 32 { 0 } else { self.bars >> self.start };
        let len = if rest == 0 {
            n - self.start
        } else {
            (rest.trailing_zeros() as usize + 1).min(n - self.start)
        };
        let block = &self.labels[self.start..self.start + len];
        self.start += len;
        Some(block)
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.text().cmp(&other.text())
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // canonical text is ASCII
        f.write_str(std::str::from_utf8(&self.text()).expect("ascii"))
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Symbol({self})")
    }
}

impl FromStr for Symbol {
    type Err = Error;

    /// Parses a symbol, taking `n` to be the number of labels.
    fn from_str(s: &str) -> Result<Self> {
        parse_blocks(s).and_then(|blocks| Symbol::from_blocks(&blocks).map_err(|e| reword(s, e)))
    }
}

fn reword(text: &str, e: Error) -> Error {
    match e {
        Error::Parse { reason, .. } => Error::Parse {
            text: text.to_string(),
            reason,
        },
        other => other,
    }
}

fn check_permutation(labels: &[u8]) -> std::result::Result<(), String> {
    let n = labels.len();
    let mut seen = 0u64;
    for &l in labels {
        if l == 0 || l as usize > n {
            return Err(format!("label {l} out of range 1..={n}"));
        }
        if seen >> l & 1 == 1 {
            return Err(format!("repeated label {l}"));
        }
        seen |= 1 << l;
    }
    Ok(())
}

fn parse_blocks(text: &str) -> Result<Vec<Vec<u8>>> {
    let err = |reason: &str| Error::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let body = text.trim();
    if body.is_empty() {
        return Err(err("empty text"));
    }
    let mut blocks = Vec::new();
    for part in body.split('|') {
        let part = part.trim_matches(' ');
        if part.is_empty() {
            return Err(err("empty block"));
        }
        let mut block = Vec::new();
        for tok in part.split(' ') {
            if tok.is_empty() {
                return Err(err("elements must be separated by a single space"));
            }
            if !tok.bytes().all(|c| c.is_ascii_digit()) {
                return Err(err(&format!("unexpected token {tok:?}")));
            }
            let v: u32 = tok.parse().map_err(|_| err("label too large"))?;
            if v == 0 || v as usize > MAX_N {
                return Err(err(&format!("label {v} out of range")));
            }
            block.push(v as u8);
        }
        blocks.push(block);
    }
    Ok(blocks)
}

/// Parses a symbol over `1..=n`.
pub fn parse_symbol(text: &str, n: usize) -> Result<Symbol> {
    let blocks = parse_blocks(text)?;
    let count: usize = blocks.iter().map(Vec::len).sum();
    if count != n {
        return Err(Error::Parse {
            text: text.to_string(),
            reason: format!("expected {n} labels, found {count}"),
        });
    }
    Symbol::from_blocks(&blocks).map_err(|e| reword(text, e))
}

/// Number of compositions of `n` with every part at most `w`.
pub fn compositions(n: usize, w: usize) -> u64 {
    let w = w.max(1);
    let mut c = vec![0u64; n + 1];
    c[0] = 1;
    for i in 1..=n {
        c[i] = (1..=w.min(i)).map(|k| c[i - k]).sum();
    }
    c[n]
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Number of symbols of `P(n, w)`, i.e. `n!` times the number of
/// compositions of `n` with parts at most `w`.
pub fn symbol_count(n: usize, w: usize) -> u64 {
    factorial(n) * compositions(n, w)
}

/// Number of `d`-dimensional symbols of `P(n, w)`: `n!` times the number of
/// compositions of `n` into `n - d` parts of size at most `w`.
pub fn symbol_count_in_dim(n: usize, w: usize, d: usize) -> u64 {
    if d >= n {
        return 0;
    }
    let parts = n - d;
    let w = w.max(1);
    // ways[i][p]: compositions of i into p parts bounded by w
    let mut ways = vec![vec![0u64; parts + 1]; n + 1];
    ways[0][0] = 1;
    for i in 1..=n {
        for p in 1..=parts {
            ways[i][p] = (1..=w.min(i)).map(|k| ways[i - k][p - 1]).sum();
        }
    }
    factorial(n) * ways[n][parts]
}

/// Bar masks on `n` positions whose blocks all have size at most `w`.
pub(crate) fn bar_masks(n: usize, w: usize) -> Vec<u32> {
    if n == 1 {
        return vec![0];
    }
    (0u32..1 << (n - 1))
        .filter(|&mask| {
            let mut run = 1;
            for i in 0..n - 1 {
                if mask >> i & 1 == 1 {
                    run = 1;
                } else {
                    run += 1;
                    if run > w {
                        return false;
                    }
                }
            }
            true
        })
        .collect()
}

/// All symbols of `P(n, w)` in canonical-text order.
///
/// `w >= n` behaves as `w = n`. Panics if `n` is 0 or exceeds
/// [`MAX_ENUMERATE_N`].
pub fn enumerate_symbols(n: usize, w: usize) -> Vec<Symbol> {
    assert!(n >= 1, "n must be positive");
    assert!(
        n <= MAX_ENUMERATE_N,
        "enumerating P({n}, {w}) would need {} symbols",
        symbol_count(n.min(20), w)
    );
    let masks = bar_masks(n, w.max(1));
    let mut out = Vec::with_capacity(symbol_count(n, w) as usize);
    let mut perm: Vec<u8> = (1..=n as u8).collect();
    loop {
        let labels: Labels = perm.iter().copied().collect();
        for &mask in &masks {
            out.push(Symbol::from_raw(labels.clone(), mask));
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    if n >= 10 {
        out.sort_unstable();
    } else {
        // single-digit labels: the text order is (σ1, sep1, σ2, sep2, ...)
        // with ' ' < '|', which sorts faster as a packed integer key
        out.sort_unstable_by_key(|s| {
            let mut key = 0u64;
            for (i, &l) in s.labels.iter().enumerate() {
                key = key << 4 | l as u64;
                key = key << 1 | (s.bars >> i & 1) as u64;
            }
            key
        });
    }
    out
}

/// Rearranges into the next permutation in lexicographic order; returns
/// `false` (leaving the slice sorted ascending) after the last one.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
