//! A discrete gradient vector field on `cell(n, w)`.
//!
//! Blocks are scanned left to right. A block is *top-heavy* when its largest
//! element comes first. A block is a *leader* when it is not a follower, has a
//! next block, and its first element exceeds every other element of itself
//! and of the next block; the block after a leader is its *follower*. A cell
//! is critical when every block that is not top-heavy is a follower and every
//! leader/follower pair holds more than `w` elements.
//!
//! Every other cell is matched at the first block where one of these fails:
//! a too-small leader/follower pair is swapped and merged (match-up), and a
//! non-top-heavy non-follower block is cut just before its largest element
//! and the two pieces swapped (match-down). The two moves are inverse to each
//! other, and the lexicographic [`Key`] strictly decreases along gradient
//! paths, so the pairing is acyclic.
//!
//! Critical cells are grouped by [`Skyline`], and [`code`] / [`decode`] give
//! an injection of the critical cells with a fixed skyline into
//! `[n]^z × [b + 1]^n`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::complex::{alternating_sum, CellComplex, DEFAULT_MAX_CELLS};
use crate::error::{Error, Result};
use crate::symbols::{enumerate_symbols, symbol_count, Symbol, MAX_ENUMERATE_N};

/// Role flags of each block, left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockRoles {
    pub top_heavy: Vec<bool>,
    pub leader: Vec<bool>,
    pub follower: Vec<bool>,
}

pub fn block_roles(s: &Symbol) -> BlockRoles {
    let blocks: Vec<&[u8]> = s.blocks().collect();
    let m = blocks.len();
    let mut roles = BlockRoles {
        top_heavy: Vec::with_capacity(m),
        leader: Vec::with_capacity(m),
        follower: Vec::with_capacity(m),
    };
    for k in 0..m {
        let block = blocks[k];
        let first = block[0];
        let top_heavy = block[1..].iter().all(|&x| x < first);
        let follower = k > 0 && roles.leader[k - 1];
        let leader = !follower
            && top_heavy
            && k + 1 < m
            && blocks[k + 1].iter().all(|&x| x < first);
        roles.top_heavy.push(top_heavy);
        roles.follower.push(follower);
        roles.leader.push(leader);
    }
    roles
}

/// Why a cell fails to be critical, at the first offending block (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Failure {
    /// Leader at this block, follower next, combined size at most `w`.
    MatchUp(usize),
    /// This block is neither top-heavy nor a follower.
    MatchDown(usize),
}

fn first_failure(s: &Symbol, w: usize) -> Option<Failure> {
    let sizes = s.block_sizes();
    let roles = block_roles(s);
    (0..sizes.len()).find_map(|k| {
        if roles.follower[k] {
            (sizes[k - 1] + sizes[k] <= w).then_some(Failure::MatchUp(k - 1))
        } else if !roles.top_heavy[k] {
            Some(Failure::MatchDown(k))
        } else {
            None
        }
    })
}

/// True iff `s` is critical for width `w`.
pub fn is_critical(s: &Symbol, w: usize) -> bool {
    first_failure(s, w).is_none()
}

/// The partner of `s` under the matching, or `s` itself when critical.
pub fn match_cell(s: &Symbol, w: usize) -> Symbol {
    let Some(failure) = first_failure(s, w) else {
        return s.clone();
    };
    let mut blocks: Vec<Vec<u8>> = s.blocks().map(<[u8]>::to_vec).collect();
    match failure {
        Failure::MatchUp(k) => {
            let follower = blocks.remove(k + 1);
            let leader = std::mem::replace(&mut blocks[k], follower);
            blocks[k].extend(leader);
        }
        Failure::MatchDown(k) => {
            let block = &blocks[k];
            let cut = (0..block.len()).max_by_key(|&i| block[i]).expect("nonempty block");
            let tail = blocks[k].split_off(cut);
            let head = std::mem::replace(&mut blocks[k], tail);
            blocks.insert(k + 1, head);
        }
    }
    Symbol::from_blocks(&blocks).expect("matching preserves the label set")
}

/// Where a cell goes under the matching.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Partner {
    Critical,
    /// Paired with a coface: index in dimension `d + 1`.
    Up(u32),
    /// Paired with a face: index in dimension `d - 1`.
    Down(u32),
}

/// The pairing on a built complex together with its critical cells.
#[derive(Clone, Debug)]
pub struct MorseMatching {
    pub n: usize,
    pub w: usize,
    /// `pairs[d]` holds `(face, coface)` index pairs, face in dimension `d`.
    pub pairs: Vec<Vec<(u32, u32)>>,
    /// Critical cell indices per dimension.
    pub critical: Vec<Vec<u32>>,
    partner: Vec<Vec<Partner>>,
}

impl MorseMatching {
    pub fn partner(&self, d: usize, i: usize) -> Partner {
        self.partner[d][i]
    }

    pub fn critical_counts(&self) -> Vec<u64> {
        self.critical.iter().map(|c| c.len() as u64).collect()
    }

    pub fn num_pairs(&self) -> usize {
        self.pairs.iter().map(Vec::len).sum()
    }
}

/// Applies the matching to every cell of `c`, checking that it is an
/// involution pairing codimension-one incident cells, and that its fixed
/// points are exactly the cells passing [`is_critical`].
pub fn build_matching(c: &CellComplex) -> Result<MorseMatching> {
    let w = c.w();
    let top = c.top_dimension();
    let mut partner = Vec::with_capacity(top + 1);
    for d in 0..=top {
        let row: Result<Vec<Partner>> = c
            .cells(d)
            .par_iter()
            .map(|s| {
                let t = match_cell(s, w);
                let critical = is_critical(s, w);
                if t == *s {
                    return if critical {
                        Ok(Partner::Critical)
                    } else {
                        Err(Error::InvolutionViolation(format!("{s} fixed but not critical")))
                    };
                }
                if critical || match_cell(&t, w) != *s {
                    return Err(Error::InvolutionViolation(s.to_string()));
                }
                let (td, ti) = c
                    .index_of(&t)
                    .ok_or_else(|| Error::InvolutionViolation(format!("{s} -> {t} leaves the complex")))?;
                if td == d + 1 && s.is_face_of(&t) {
                    Ok(Partner::Up(ti as u32))
                } else if td + 1 == d && t.is_face_of(s) {
                    Ok(Partner::Down(ti as u32))
                } else {
                    Err(Error::InvolutionViolation(format!("{s} -> {t} is not a codim-1 incidence")))
                }
            })
            .collect();
        partner.push(row?);
    }
    let mut pairs = vec![Vec::new(); top + 1];
    let mut critical = vec![Vec::new(); top + 1];
    for (d, row) in partner.iter().enumerate() {
        for (i, p) in row.iter().enumerate() {
            match *p {
                Partner::Critical => critical[d].push(i as u32),
                Partner::Up(j) => pairs[d].push((i as u32, j)),
                Partner::Down(_) => {}
            }
        }
    }
    Ok(MorseMatching {
        n: c.n(),
        w,
        pairs,
        critical,
        partner,
    })
}

/// Lexicographic key: per block, the first element (0 for followers) then
/// the block size.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Key(pub Vec<u32>);

pub fn key(s: &Symbol) -> Key {
    let roles = block_roles(s);
    let mut out = Vec::with_capacity(2 * s.num_blocks());
    for (k, block) in s.blocks().enumerate() {
        out.push(if roles.follower[k] { 0 } else { block[0] as u32 });
        out.push(block.len() as u32);
    }
    // sizes are positive, so there are never trailing zeros to trim
    Key(out)
}

/// A gradient-path step that fails to decrease the key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeyViolation {
    pub face: Symbol,
    pub coface: Symbol,
    pub next: Symbol,
}

/// Every step `α → β = V(α) → α'` of a gradient path, with `α' ≠ α` a face of
/// `β` that is itself matched upward, must satisfy `key(α') < key(α)`.
/// Returns the offending steps.
pub fn key_descent_violations(c: &CellComplex, m: &MorseMatching) -> Vec<KeyViolation> {
    (0..m.pairs.len())
        .flat_map(|d| m.pairs[d].iter().map(move |&p| (d, p)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .flat_map_iter(|(d, (a, b))| {
            let alpha = c.cell(d, a as usize);
            let beta = c.cell(d + 1, b as usize);
            let ka = key(alpha);
            c.boundary(d + 1)
                .column(b as usize)
                .iter()
                .filter(move |&&f| f != a && matches!(m.partner(d, f as usize), Partner::Up(_)))
                .filter_map(move |&f| {
                    let next = c.cell(d, f as usize);
                    (key(next) >= ka).then(|| KeyViolation {
                        face: alpha.clone(),
                        coface: beta.clone(),
                        next: next.clone(),
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

/// True iff the key strictly decreases along every gradient-path step.
pub fn verify_gradient(c: &CellComplex, m: &MorseMatching) -> bool {
    key_descent_violations(c, m).is_empty()
}

/// Independent acyclicity check: topologically sorts, per dimension, the
/// graph with an edge `α → α'` for every gradient-path step.
pub fn is_acyclic(c: &CellComplex, m: &MorseMatching) -> bool {
    (0..m.pairs.len()).all(|d| {
        let cells = c.cells(d).len();
        let mut succ: Vec<Vec<u32>> = vec![Vec::new(); cells];
        let mut indeg = vec![0u32; cells];
        for &(a, b) in &m.pairs[d] {
            for &f in c.boundary(d + 1).column(b as usize) {
                if f != a && matches!(m.partner(d, f as usize), Partner::Up(_)) {
                    succ[a as usize].push(f);
                    indeg[f as usize] += 1;
                }
            }
        }
        let mut stack: Vec<u32> = (0..cells as u32).filter(|&i| indeg[i as usize] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &u in &succ[v as usize] {
                indeg[u as usize] -= 1;
                if indeg[u as usize] == 0 {
                    stack.push(u);
                }
            }
        }
        seen == cells
    })
}

/// Shape of a critical cell: free singletons deleted, leader firsts replaced
/// by 1 and every other label by 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Skyline {
    pub blocks: Vec<Vec<u8>>,
}

impl Skyline {
    /// Number of barriers (leader/follower pairs), i.e. of ones.
    pub fn b(&self) -> usize {
        self.blocks.iter().flatten().filter(|&&x| x == 1).count()
    }

    /// Number of zeros.
    pub fn z(&self) -> usize {
        self.blocks.iter().flatten().filter(|&&x| x == 0).count()
    }

    /// Dimension of the cells with this skyline: digits minus blocks.
    pub fn dimension(&self) -> usize {
        self.b() + self.z() - self.blocks.len()
    }
}

impl fmt::Display for Skyline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (k, d) in block.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{d}")?;
            }
        }
        Ok(())
    }
}

pub fn skyline(s: &Symbol, w: usize) -> Result<Skyline> {
    if !is_critical(s, w) {
        return Err(Error::NotCritical(s.to_string()));
    }
    let roles = block_roles(s);
    let blocks = s
        .blocks()
        .enumerate()
        .filter(|(k, b)| b.len() > 1 || roles.leader[*k] || roles.follower[*k])
        .map(|(k, b)| {
            let mut digits = vec![0u8; b.len()];
            if roles.leader[k] {
                digits[0] = 1;
            }
            digits
        })
        .collect();
    Ok(Skyline { blocks })
}

/// Image of a critical cell under the skyline code.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkylineCode {
    /// Labels standing behind the zeros of the skyline, in symbol order.
    pub zeros_payload: Vec<u8>,
    /// For each label `1..=n`, its interval (1-based) among the `b + 1`
    /// barrier-delimited intervals.
    pub interval_assignment: Vec<u8>,
}

pub fn code(s: &Symbol, w: usize) -> Result<SkylineCode> {
    if !is_critical(s, w) {
        return Err(Error::NotCritical(s.to_string()));
    }
    let roles = block_roles(s);
    let mut zeros_payload = Vec::new();
    let mut interval_assignment = vec![0u8; s.n()];
    let mut interval = 1u8;
    for (k, block) in s.blocks().enumerate() {
        let kept = block.len() > 1 || roles.leader[k] || roles.follower[k];
        if kept {
            let skip = usize::from(roles.leader[k]);
            zeros_payload.extend_from_slice(&block[skip..]);
        }
        for &l in block {
            interval_assignment[l as usize - 1] = interval;
        }
        if roles.follower[k] {
            interval += 1;
        }
    }
    Ok(SkylineCode {
        zeros_payload,
        interval_assignment,
    })
}

/// Inverts [`code`] for a fixed skyline.
pub fn decode(sky: &Skyline, code_s: &SkylineCode, n: usize, w: usize) -> Result<Symbol> {
    let bad = |why: &str| Error::InconsistentCode(format!("{sky} / {code_s:?}: {why}"));
    let b = sky.b();
    if code_s.zeros_payload.len() != sky.z() {
        return Err(bad("payload length differs from the number of zeros"));
    }
    if code_s.interval_assignment.len() != n {
        return Err(bad("assignment length differs from n"));
    }
    if code_s
        .interval_assignment
        .iter()
        .any(|&t| t == 0 || t as usize > b + 1)
    {
        return Err(bad("interval out of range"));
    }
    let mut used = vec![false; n + 1];
    for &l in &code_s.zeros_payload {
        if l == 0 || l as usize > n || used[l as usize] {
            return Err(bad("payload labels must be distinct and in range"));
        }
        used[l as usize] = true;
    }

    // Blocks of the cell per interval: (non-follower blocks, follower block).
    let mut intervals: Vec<(Vec<Vec<u8>>, Option<Vec<u8>>)> = vec![(Vec::new(), None); b + 1];
    let mut payload = code_s.zeros_payload.iter().copied();
    let mut t = 0usize;
    let mut after_leader = false;
    for block in &sky.blocks {
        if block.is_empty() || block[1..].contains(&1) {
            return Err(bad("a 1 may only open a block"));
        }
        if after_leader {
            if block[0] == 1 {
                return Err(bad("a follower cannot lead"));
            }
            intervals[t].1 = Some(payload.by_ref().take(block.len()).collect());
            after_leader = false;
            t += 1;
            continue;
        }
        let mut labels = Vec::with_capacity(block.len());
        if block[0] == 1 {
            let leader = (1..=n as u8)
                .filter(|&l| code_s.interval_assignment[l as usize - 1] as usize == t + 1)
                .max()
                .ok_or_else(|| bad("empty barrier interval"))?;
            if used[leader as usize] {
                return Err(bad("leader label also appears as a zero"));
            }
            used[leader as usize] = true;
            labels.push(leader);
            labels.extend(payload.by_ref().take(block.len() - 1));
            after_leader = true;
        } else {
            if block.len() < 2 {
                return Err(bad("singleton outside a barrier"));
            }
            labels.extend(payload.by_ref().take(block.len()));
        }
        intervals[t].0.push(labels);
    }
    if after_leader {
        return Err(bad("skyline ends with a leader"));
    }

    let mut blocks: Vec<Vec<u8>> = Vec::new();
    for (t, (mut free, follower)) in intervals.into_iter().enumerate() {
        let skyline_firsts: Vec<u8> = free.iter().map(|b| b[0]).collect();
        free.extend(
            (1..=n as u8)
                .filter(|&l| !used[l as usize] && code_s.interval_assignment[l as usize - 1] as usize == t + 1)
                .map(|l| vec![l]),
        );
        free.sort_by_key(|b| b[0]);
        let order: Vec<u8> = free
            .iter()
            .filter(|b| skyline_firsts.contains(&b[0]))
            .map(|b| b[0])
            .collect();
        if order != skyline_firsts {
            return Err(bad("skyline blocks are not in increasing order"));
        }
        blocks.extend(free);
        blocks.extend(follower);
    }
    let s = Symbol::from_blocks(&blocks).map_err(|e| bad(&e.to_string()))?;
    if !is_critical(&s, w) || skyline(&s, w)? != *sky || code(&s, w)? != *code_s {
        return Err(bad("reconstruction does not re-encode to the input"));
    }
    Ok(s)
}

/// `j = q(w - 1) + r` with `0 <= r < w - 1`.
pub fn split_degree(w: usize, j: usize) -> (usize, usize) {
    (j / (w - 1), j % (w - 1))
}

/// A skyline that breaks the barrier or zero-count bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkylineBoundViolation {
    pub dim: usize,
    pub skyline: Skyline,
    pub q: usize,
    pub r: usize,
}

/// Critical cells of `cell(n, w)` by dimension and by skyline.
#[derive(Clone, Debug)]
pub struct CriticalCensus {
    pub n: usize,
    pub w: usize,
    pub by_dim: Vec<u64>,
    pub by_skyline: BTreeMap<Skyline, u64>,
    /// Skylines with `b > q`, or with `b = q` and `z > qw + 2r`, where
    /// `j = q(w - 1) + r` (checked for `w >= 2`).
    pub violations: Vec<SkylineBoundViolation>,
}

impl CriticalCensus {
    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.by_dim)
    }
}

/// Counts critical cells directly from the predicate, without building
/// boundaries.
pub fn critical_census(n: usize, w: usize) -> Result<CriticalCensus> {
    critical_census_with_cap(n, w, DEFAULT_MAX_CELLS)
}

pub fn critical_census_with_cap(n: usize, w: usize, max_cells: u64) -> Result<CriticalCensus> {
    if n == 0 || w == 0 {
        return Err(Error::InvalidParameters(format!("n={n} w={w}")));
    }
    let w = w.min(n);
    let predicted = if n > MAX_ENUMERATE_N { u64::MAX } else { symbol_count(n, w) };
    if predicted > max_cells {
        return Err(Error::BudgetExceeded {
            n,
            w,
            predicted,
            cap: max_cells,
        });
    }
    let critical: Vec<Skyline> = enumerate_symbols(n, w)
        .into_par_iter()
        .filter(|s| is_critical(s, w))
        .map(|s| skyline(&s, w).expect("critical"))
        .collect();
    let top = crate::complex::top_dimension(n, w);
    let mut by_dim = vec![0u64; top + 1];
    let mut by_skyline = BTreeMap::new();
    for sky in critical {
        by_dim[sky.dimension()] += 1;
        *by_skyline.entry(sky).or_insert(0) += 1;
    }
    let mut violations = Vec::new();
    if w >= 2 {
        for sky in by_skyline.keys() {
            let (q, r) = split_degree(w, sky.dimension());
            let b = sky.b();
            if b > q || (b == q && sky.z() > q * w + 2 * r) {
                violations.push(SkylineBoundViolation {
                    dim: sky.dimension(),
                    skyline: sky.clone(),
                    q,
                    r,
                });
            }
        }
    }
    Ok(CriticalCensus {
        n,
        w,
        by_dim,
        by_skyline,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::betti_numbers;
    use crate::symbols::parse_symbol;
    use std::collections::HashMap;

    fn sym(t: &str) -> Symbol {
        t.parse().unwrap()
    }

    #[test]
    fn roles_examples() {
        let r = block_roles(&sym("2|1|3"));
        assert_eq!(r.leader, vec![true, false, false]);
        assert_eq!(r.follower, vec![false, true, false]);
        let r = block_roles(&sym("1|2|3"));
        assert!(r.leader.iter().chain(&r.follower).all(|&x| !x));
        let r = block_roles(&sym("3|1 2"));
        assert_eq!(r.leader, vec![true, false]);
        assert_eq!(r.follower, vec![false, true]);
        assert_eq!(r.top_heavy, vec![true, false]);
    }

    #[test]
    fn last_block_never_leads() {
        for s in enumerate_symbols(4, 4) {
            let r = block_roles(&s);
            assert!(!r.leader[r.leader.len() - 1]);
            for k in 0..r.leader.len() {
                assert!(!(r.leader[k] && r.follower[k]));
                assert_eq!(r.follower[k], k > 0 && r.leader[k - 1]);
            }
        }
    }

    #[test]
    fn criticality_examples() {
        assert!(is_critical(&sym("1|2|3"), 2));
        assert!(is_critical(&sym("3|1 2"), 2));
        assert!(!is_critical(&sym("1|2 3"), 2));
        assert!(!is_critical(&sym("3|1 2"), 3));
    }

    #[test]
    fn match_examples() {
        assert_eq!(match_cell(&sym("2|1|3"), 2), sym("1 2|3"));
        assert_eq!(match_cell(&sym("1 2|3"), 2), sym("2|1|3"));
        assert_eq!(match_cell(&sym("1|2|3"), 2), sym("1|2|3"));
        assert_eq!(match_cell(&sym("3|1 2"), 3), sym("1 2 3"));
        assert_eq!(match_cell(&sym("1 2 3"), 3), sym("3|1 2"));
    }

    #[test]
    fn key_examples() {
        assert_eq!(key(&sym("2|1|3")).0, vec![2, 1, 0, 1, 3, 1]);
        assert_eq!(key(&sym("1|2|3")).0, vec![1, 1, 2, 1, 3, 1]);
        assert_eq!(key(&sym("3 2 1")).0, vec![3, 3]);
    }

    #[test]
    fn matching_examples() {
        let c = CellComplex::build(3, 2).unwrap();
        let m = build_matching(&c).unwrap();
        assert_eq!(m.critical_counts(), vec![1, 7]);

        let c = CellComplex::build(3, 3).unwrap();
        let m = build_matching(&c).unwrap();
        assert_eq!(m.critical[0].len(), 1);
        assert_eq!(c.cell(0, m.critical[0][0] as usize), &sym("1|2|3"));

        let c = CellComplex::build(2, 1).unwrap();
        let m = build_matching(&c).unwrap();
        assert_eq!(m.critical_counts(), vec![2]);
        assert_eq!(m.num_pairs(), 0);
    }

    #[test]
    fn gradient_examples() {
        for (n, w) in [(3, 2), (4, 2), (4, 3)] {
            let c = CellComplex::build(n, w).unwrap();
            let m = build_matching(&c).unwrap();
            assert!(verify_gradient(&c, &m), "n={n} w={w}");
            assert!(is_acyclic(&c, &m), "n={n} w={w}");
        }
    }

    #[test]
    fn cyclic_pairing_is_detected() {
        // Pair both vertices of cell(2, 2) upward into different edges: the
        // walk 1|2 -> "1 2" -> 2|1 -> "2 1" -> 1|2 is closed.
        let c = CellComplex::build(2, 2).unwrap();
        let mut m = build_matching(&c).unwrap();
        m.pairs = vec![vec![(0, 0), (1, 1)], vec![]];
        m.critical = vec![vec![], vec![]];
        m.partner = vec![
            vec![Partner::Up(0), Partner::Up(1)],
            vec![Partner::Down(0), Partner::Down(1)],
        ];
        assert!(!is_acyclic(&c, &m));
        assert!(!verify_gradient(&c, &m));
    }

    #[test]
    fn skyline_examples() {
        let s = skyline(&sym("3|1 2"), 2).unwrap();
        assert_eq!(s.to_string(), "1|0 0");
        assert_eq!((s.b(), s.z()), (1, 2));
        let s = skyline(&sym("2 1|3"), 2).unwrap();
        assert_eq!(s.to_string(), "0 0");
        assert_eq!((s.b(), s.z()), (0, 2));
        let s = skyline(&sym("1|2|3"), 2).unwrap();
        assert!(s.blocks.is_empty());
        assert_eq!((s.b(), s.z()), (0, 0));
        assert!(skyline(&sym("1 2|3"), 2).is_err());
    }

    #[test]
    fn code_examples() {
        let c = code(&sym("3|1 2"), 2).unwrap();
        assert_eq!(c.zeros_payload, vec![1, 2]);
        assert_eq!(c.interval_assignment, vec![1, 1, 1]);
        let c = code(&sym("2 1|3"), 2).unwrap();
        assert_eq!(c.zeros_payload, vec![2, 1]);
        assert_eq!(c.interval_assignment, vec![1, 1, 1]);
        let c = code(&sym("1|2|3"), 2).unwrap();
        assert!(c.zeros_payload.is_empty());
        assert_eq!(c.interval_assignment, vec![1, 1, 1]);
        assert!(code(&sym("1 2|3"), 2).is_err());
    }

    #[test]
    fn decode_examples() {
        let sky = |blocks: Vec<Vec<u8>>| Skyline { blocks };
        let code_of = |z: Vec<u8>, a: Vec<u8>| SkylineCode {
            zeros_payload: z,
            interval_assignment: a,
        };
        let s = decode(&sky(vec![vec![1], vec![0, 0]]), &code_of(vec![1, 2], vec![1, 1, 1]), 3, 2);
        assert_eq!(s.unwrap(), sym("3|1 2"));
        let s = decode(&sky(vec![vec![0, 0]]), &code_of(vec![2, 1], vec![1, 1, 1]), 3, 2);
        assert_eq!(s.unwrap(), sym("2 1|3"));
        let s = decode(&sky(vec![]), &code_of(vec![], vec![1, 1, 1]), 3, 2);
        assert_eq!(s.unwrap(), sym("1|2|3"));
        // 3 as a zero and as the leader at once
        let bad = decode(&sky(vec![vec![1], vec![0, 0]]), &code_of(vec![3, 2], vec![1, 1, 1]), 3, 2);
        assert!(matches!(bad, Err(Error::InconsistentCode(_))));
        let bad = decode(&sky(vec![vec![0, 0]]), &code_of(vec![1, 2], vec![1, 1, 1]), 3, 2);
        assert!(bad.is_err());
    }

    #[test]
    fn code_is_injective_and_decodes() {
        for n in 1..=5 {
            for w in 1..=n {
                let mut seen: HashMap<(Skyline, SkylineCode), Symbol> = HashMap::new();
                for s in enumerate_symbols(n, w).into_iter().filter(|s| is_critical(s, w)) {
                    let sky = skyline(&s, w).unwrap();
                    let cs = code(&s, w).unwrap();
                    assert_eq!(decode(&sky, &cs, n, w).unwrap(), s);
                    assert!(seen.insert((sky, cs), s).is_none());
                }
            }
        }
    }

    #[test]
    fn census_examples() {
        let c = critical_census(3, 2).unwrap();
        assert_eq!(c.by_dim, vec![1, 7]);
        assert_eq!(c.euler_characteristic(), -6);
        assert!(c.violations.is_empty());

        let census = critical_census(4, 2).unwrap();
        let betti = betti_numbers(&CellComplex::build(4, 2).unwrap());
        for (d, &count) in census.by_dim.iter().enumerate() {
            assert!(betti.get(d) <= count);
        }
    }

    #[test]
    fn census_agrees_with_matching() {
        for n in 1..=5 {
            for w in 1..=n {
                let c = CellComplex::build(n, w).unwrap();
                let m = build_matching(&c).unwrap();
                assert_eq!(critical_census(n, w).unwrap().by_dim, m.critical_counts());
            }
        }
    }

    #[test]
    fn involution_on_small_complexes() {
        for n in 1..=5 {
            for w in 1..=n {
                for s in enumerate_symbols(n, w) {
                    let t = match_cell(&s, w);
                    assert_eq!(match_cell(&t, w), s);
                    assert!(t.width() <= w);
                }
            }
        }
        let _ = parse_symbol("1", 1);
    }
}
