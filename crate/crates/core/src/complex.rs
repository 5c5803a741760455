//! The regular cell complex `cell(n, w)` as an indexed mod-2 chain complex.
//!
//! Cells are bucketed by dimension; within a dimension they keep the
//! canonical-text order of [`enumerate_symbols`]. A cell is addressed by its
//! `(dimension, index)` pair. Boundaries are stored per dimension in
//! compressed sparse column form: the faces of the `i`-th `d`-cell are the
//! sorted `(d-1)`-cell indices `faces[offsets[i]..offsets[i + 1]]`.

use std::io::{self, Write};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::symbols::{enumerate_symbols, symbol_count, Symbol, MAX_ENUMERATE_N};

/// Default cap on the number of cells a build may allocate.
pub const DEFAULT_MAX_CELLS: u64 = 10_000_000;

const NO_INDEX: u32 = u32::MAX;

/// Boundary map from `d`-cells to `(d-1)`-cells, one sorted face list per
/// `d`-cell.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Boundary {
    offsets: Vec<usize>,
    faces: Vec<u32>,
}

impl Boundary {
    fn from_lists(lists: Vec<Vec<u32>>) -> Self {
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        offsets.push(0);
        let total: usize = lists.iter().map(Vec::len).sum();
        let mut faces = Vec::with_capacity(total);
        for list in lists {
            faces.extend_from_slice(&list);
            offsets.push(faces.len());
        }
        Self { offsets, faces }
    }

    /// Number of columns (cells of the higher dimension).
    pub fn num_columns(&self) -> usize {
        self.offsets.len().saturating_sub(1)
    }

    pub fn column(&self, i: usize) -> &[u32] {
        &self.faces[self.offsets[i]..self.offsets[i + 1]]
    }

    pub fn columns(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (0..self.num_columns()).map(move |i| self.column(i))
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.faces.len()
    }
}

/// `cell(n, w)`: cells of every dimension with their mod-2 boundaries.
#[derive(Clone, Debug)]
pub struct CellComplex {
    n: usize,
    w: usize,
    cells: Vec<Vec<Symbol>>,
    boundaries: Vec<Boundary>,
    /// symbol rank -> index within its dimension
    index: Vec<u32>,
}

/// Cell counts `f_0, f_1, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.0)
    }
}

pub(crate) fn alternating_sum(values: &[u64]) -> i64 {
    values
        .iter()
        .enumerate()
        .map(|(d, &v)| if d % 2 == 0 { v as i64 } else { -(v as i64) })
        .sum()
}

/// Dimension of the top cells of `cell(n, w)`: `n - ceil(n / w)`.
pub fn top_dimension(n: usize, w: usize) -> usize {
    let w = w.clamp(1, n.max(1));
    n - n.div_ceil(w)
}

impl CellComplex {
    /// Builds `cell(n, w)` with the default cell cap.
    pub fn build(n: usize, w: usize) -> Result<Self> {
        Self::build_with_cap(n, w, DEFAULT_MAX_CELLS)
    }

    /// Builds `cell(n, w)`, refusing when the predicted cell count exceeds
    /// `max_cells`.
    pub fn build_with_cap(n: usize, w: usize, max_cells: u64) -> Result<Self> {
        if n == 0 || w == 0 {
            return Err(Error::InvalidParameters(format!(
                "cell(n, w) needs n >= 1 and w >= 1, got n={n} w={w}"
            )));
        }
        let w = w.min(n);
        if n > MAX_ENUMERATE_N {
            return Err(Error::BudgetExceeded {
                n,
                w,
                predicted: symbol_count(n.min(20), w),
                cap: max_cells,
            });
        }
        let predicted = symbol_count(n, w);
        if predicted > max_cells {
            return Err(Error::BudgetExceeded {
                n,
                w,
                predicted,
                cap: max_cells,
            });
        }

        let top = top_dimension(n, w);
        let mut cells: Vec<Vec<Symbol>> = vec![Vec::new(); top + 1];
        let mut index = vec![NO_INDEX; (crate::symbols::factorial(n) << (n - 1)) as usize];
        for s in enumerate_symbols(n, w) {
            let d = s.dimension();
            index[s.rank() as usize] = cells[d].len() as u32;
            cells[d].push(s);
        }

        let mut boundaries = vec![Boundary::default()];
        for d in 1..=top {
            let lists: Vec<Vec<u32>> = cells[d]
                .par_iter()
                .map(|s| {
                    let mut faces: Vec<u32> = s
                        .codim1_faces()
                        .iter()
                        .map(|f| {
                            let i = index[f.rank() as usize];
                            // splitting never enlarges a block
                            assert!(i != NO_INDEX, "face {f} of {s} is not a cell");
                            i
                        })
                        .collect();
                    faces.sort_unstable();
                    faces
                })
                .collect();
            boundaries.push(Boundary::from_lists(lists));
        }

        Ok(Self {
            n,
            w,
            cells,
            boundaries,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn w(&self) -> usize {
        self.w
    }

    /// Highest dimension with cells.
    pub fn top_dimension(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn cells(&self, d: usize) -> &[Symbol] {
        self.cells.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn cell(&self, d: usize, i: usize) -> &Symbol {
        &self.cells[d][i]
    }

    /// Iterates `(dimension, index, symbol)` over every cell.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Symbol)> + '_ {
        self.cells
            .iter()
            .enumerate()
            .flat_map(|(d, cs)| cs.iter().enumerate().map(move |(i, s)| (d, i, s)))
    }

    /// `(dimension, index)` of a symbol, if it is a cell of this complex.
    pub fn index_of(&self, s: &Symbol) -> Option<(usize, usize)> {
        if s.n() != self.n {
            return None;
        }
        let i = *self.index.get(s.rank() as usize)?;
        (i != NO_INDEX).then(|| (s.dimension(), i as usize))
    }

    /// Boundary map out of dimension `d` (empty for `d = 0` or above the top).
    pub fn boundary(&self, d: usize) -> &Boundary {
        static EMPTY: Boundary = Boundary {
            offsets: Vec::new(),
            faces: Vec::new(),
        };
        self.boundaries.get(d).unwrap_or(&EMPTY)
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.cells.iter().map(|c| c.len() as u64).collect())
    }

    pub fn total_cells(&self) -> u64 {
        self.f_vector().total()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    /// A copy with one incidence removed from the boundary of the `cell`-th
    /// `d`-cell. Useful for exercising the chain-complex checks.
    pub fn without_incidence(&self, d: usize, cell: usize, face: u32) -> Self {
        let mut out = self.clone();
        let lists: Vec<Vec<u32>> = self.boundaries[d]
            .columns()
            .enumerate()
            .map(|(i, col)| {
                col.iter()
                    .copied()
                    .filter(|&f| !(i == cell && f == face))
                    .collect()
            })
            .collect();
        out.boundaries[d] = Boundary::from_lists(lists);
        out
    }

    /// Writes the boundary out of dimension `d` in the sparse text format:
    /// a header `d n_rows n_cols`, then one `row col` line per incidence,
    /// sorted by row then column.
    pub fn write_boundary<W: Write + ?Sized>(&self, d: usize, out: &mut W) -> io::Result<()> {
        let rows = if d == 0 { 0 } else { self.cells(d - 1).len() };
        let cols = self.cells(d).len();
        writeln!(out, "{d} {rows} {cols}")?;
        let mut pairs: Vec<(u32, u32)> = self
            .boundary(d)
            .columns()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&r| (r, c as u32)))
            .collect();
        pairs.sort_unstable();
        for (r, c) in pairs {
            writeln!(out, "{r} {c}")?;
        }
        Ok(())
    }
}

/// One vertex link of the cube complex `cell(n, 2)`.
///
/// The link vertices are the edges above the vertex; a set of them spans a
/// simplex when some cube above the vertex contains all of them.
#[derive(Clone, Debug)]
pub struct VertexLink {
    pub vertex: Symbol,
    /// Edges (1-cells) containing the vertex; these are the link's vertices.
    pub edges: Vec<Symbol>,
    /// Link-vertex sets (bitmasks over `edges`) of the cubes above the
    /// vertex; every subset of one of these is a simplex of the link.
    pub cube_masks: Vec<u64>,
    /// Adjacency bitmask per link vertex (from the squares above the vertex).
    pub adjacency: Vec<u64>,
}

impl VertexLink {
    /// True iff the link vertices in `mask` span a simplex.
    pub fn is_filled(&self, mask: u64) -> bool {
        self.cube_masks.iter().any(|&c| c & mask == mask)
    }

    /// True iff the link vertices in `mask` are pairwise adjacent.
    pub fn is_clique(&self, mask: u64) -> bool {
        (0..self.edges.len())
            .filter(|&i| mask >> i & 1 == 1)
            .all(|i| mask & !(1 << i) & !self.adjacency[i] == 0)
    }

    /// Link-vertex mask of a set of edges; `None` if one is not in the link.
    pub fn mask_of(&self, edges: &[Symbol]) -> Option<u64> {
        edges.iter().try_fold(0u64, |m, e| {
            let i = self.edges.iter().position(|x| x == e)?;
            Some(m | 1 << i)
        })
    }

    /// True iff every clique of the link spans a simplex.
    pub fn is_flag(&self) -> bool {
        let k = self.edges.len();
        assert!(k < 63, "link too large for exhaustive clique search");
        (1u64..1 << k).all(|mask| !self.is_clique(mask) || self.is_filled(mask))
    }
}

/// Link of vertex `v` in the cube complex `c`, which must be `cell(n, 2)`.
pub fn vertex_link(c: &CellComplex, v: &Symbol) -> VertexLink {
    assert_eq!(c.w(), 2.min(c.n()), "vertex links are defined for cell(n, 2)");
    let edges: Vec<Symbol> = c
        .cells(1)
        .iter()
        .filter(|e| v.is_face_of(e))
        .cloned()
        .collect();
    let edge_mask = |cube: &Symbol| {
        edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_face_of(cube))
            .fold(0u64, |m, (i, _)| m | 1 << i)
    };
    let mut cube_masks = Vec::new();
    let mut adjacency = vec![0u64; edges.len()];
    for d in 2..=c.top_dimension() {
        for cube in c.cells(d).iter().filter(|cube| v.is_face_of(cube)) {
            let mask = edge_mask(cube);
            if d == 2 {
                for i in (0..edges.len()).filter(|&i| mask >> i & 1 == 1) {
                    adjacency[i] |= mask & !(1 << i);
                }
            }
            cube_masks.push(mask);
        }
    }
    // single link vertices are simplices too
    cube_masks.extend((0..edges.len()).map(|i| 1u64 << i));
    VertexLink {
        vertex: v.clone(),
        edges,
        cube_masks,
        adjacency,
    }
}

/// Gromov's flag condition for every vertex link of `cell(n, 2)`.
pub fn check_links_flag(n: usize) -> Result<bool> {
    let c = CellComplex::build(n, 2)?;
    Ok(c.cells(0)
        .par_iter()
        .all(|v| vertex_link(&c, v).is_flag()))
}
