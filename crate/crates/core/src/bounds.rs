//! Closed-form quantities: planar Betti numbers, special symbols and their
//! count, liquid-regime exponents, and the gas/liquid/solid classifier.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::complex::top_dimension;
use crate::error::{Error, Result};
use crate::morse::split_degree;
use crate::symbols::{next_permutation, Symbol};

/// Coefficient of `t^j` in `(1 + t)(1 + 2t)...(1 + (n - 1)t)`: the `j`-th
/// Betti number of the configuration space of `n` points in the plane.
/// Zero when `j` is out of range.
pub fn stirling_betti(n: usize, j: usize) -> BigUint {
    if n == 0 || j >= n {
        return BigUint::zero();
    }
    planar_poincare(n).swap_remove(j)
}

/// All coefficients of the planar Poincaré polynomial, degrees `0..n`.
pub fn planar_poincare(n: usize) -> Vec<BigUint> {
    let mut poly = vec![BigUint::one()];
    for k in 1..n {
        let mut next = vec![BigUint::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + 1] += c * BigUint::from(k);
        }
        poly = next;
    }
    poly
}

fn factorial_big(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `q` and `r` with `j = q(w - 1) + r`, `0 <= r < w - 1`.
fn special_shape(n: usize, w: usize, j: usize) -> Result<(usize, usize)> {
    if w < 2 {
        return Err(Error::InvalidParameters(format!("special symbols need w >= 2, got w={w}")));
    }
    let (q, r) = split_degree(w, j);
    if q < 1 {
        return Err(Error::InvalidParameters(format!("j={j} < w-1={}", w - 1)));
    }
    if n < q * w + 2 * r {
        return Err(Error::InvalidParameters(format!(
            "n={n} < qw+2r={} for w={w}, j={j}",
            q * w + 2 * r
        )));
    }
    Ok((q, r))
}

/// Number of special symbols for `(n, w, j)`:
/// `n! / (w^q 2^r r! (n - qw - 2r)!) * (q + 1)^(n - qw - r)`.
///
/// Pick the `q` wide blocks as an ordered sequence with the largest element
/// first (`n! / (w^q ...)` after dividing out), pick the `r` unordered pairs,
/// then drop each of the `n - qw - r` narrow blocks into one of the `q + 1`
/// gaps; inside a gap their order is forced. See [`special_formula`] for the
/// variant that also orders the wide blocks and pairs.
pub fn special_symbol_count(n: usize, w: usize, j: usize) -> Result<BigUint> {
    let (q, r) = special_shape(n, w, j)?;
    let singles = n - q * w - 2 * r;
    let denom = BigUint::from(w).pow(q as u32)
        * BigUint::from(2u32).pow(r as u32)
        * factorial_big(r)
        * factorial_big(singles);
    let gaps = BigUint::from(q + 1).pow((n - q * w - r) as u32);
    Ok(factorial_big(n) / denom * gaps)
}

/// The product `multinomial(n; w^q, 2^r, n - qw - 2r) * q! * ((w - 1)!)^q *
/// (q + 1)^(n - qw - r)`. It exceeds [`special_symbol_count`] by the factor
/// `q! * r!`, since the multinomial already distinguishes the blocks of equal
/// width.
pub fn special_formula(n: usize, w: usize, j: usize) -> Result<BigUint> {
    let (q, r) = special_shape(n, w, j)?;
    let singles = n - q * w - 2 * r;
    let multinomial = factorial_big(n)
        / (factorial_big(w).pow(q as u32) * BigUint::from(2u32).pow(r as u32) * factorial_big(singles));
    Ok(multinomial
        * factorial_big(q)
        * factorial_big(w - 1).pow(q as u32)
        * BigUint::from(q + 1).pow((n - q * w - r) as u32))
}

/// True iff `s` is special for `(w, j)`: `q` blocks of width `w`, `r` of
/// width 2, the rest singletons, every block led by its largest element,
/// and consecutive blocks narrower than `w` with decreasing first elements.
pub fn is_special(s: &Symbol, w: usize, j: usize) -> bool {
    if w < 2 {
        return false;
    }
    let (q, r) = split_degree(w, j);
    let sizes = s.block_sizes();
    let wide = sizes.iter().filter(|&&k| k == w).count();
    let pairs = sizes.iter().filter(|&&k| k == 2).count();
    let shape_ok = if w == 2 {
        wide == q && r == 0 && sizes.iter().all(|&k| k <= 2)
    } else {
        wide == q && pairs == r && sizes.iter().all(|&k| k == w || k <= 2)
    };
    if !shape_ok {
        return false;
    }
    let blocks: Vec<&[u8]> = s.blocks().collect();
    blocks.iter().all(|b| b[1..].iter().all(|&x| x < b[0]))
        && blocks
            .windows(2)
            .all(|p| p[0].len() == w || p[1].len() == w || p[0][0] > p[1][0])
}

fn choose_subsets(items: &[u8], k: usize, f: &mut impl FnMut(&[u8], &[u8])) {
    fn go(items: &[u8], k: usize, start: usize, picked: &mut Vec<u8>, f: &mut impl FnMut(&[u8], &[u8])) {
        if picked.len() == k {
            let rest: Vec<u8> = items.iter().copied().filter(|x| !picked.contains(x)).collect();
            f(picked, &rest);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - picked.len() {
                break;
            }
            picked.push(items[i]);
            go(items, k, i + 1, picked, f);
            picked.pop();
        }
    }
    go(items, k, 0, &mut Vec::with_capacity(k), f);
}

/// Splits `items` into `r` unordered pairs (larger element first) and
/// singletons, in every possible way.
fn pairings(items: &[u8], r: usize, acc: &mut Vec<Vec<u8>>, f: &mut impl FnMut(&[Vec<u8>])) {
    let Some((&first, rest)) = items.split_first() else {
        if r == 0 {
            f(acc);
        }
        return;
    };
    if rest.len() >= 2 * r {
        acc.push(vec![first]);
        pairings(rest, r, acc, f);
        acc.pop();
    }
    if r > 0 {
        for (i, &other) in rest.iter().enumerate() {
            let remaining: Vec<u8> = rest.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &x)| x).collect();
            acc.push(vec![first.max(other), first.min(other)]);
            pairings(&remaining, r - 1, acc, f);
            acc.pop();
        }
    }
}

/// All special symbols for `(n, w, j)` in symbol order; empty when none
/// exist (including `w < 2` or `n < qw + 2r`).
pub fn enumerate_special_symbols(n: usize, w: usize, j: usize) -> Vec<Symbol> {
    if w < 2 {
        return Vec::new();
    }
    let (q, r) = split_degree(w, j);
    if n < q * w + 2 * r {
        return Vec::new();
    }
    let labels: Vec<u8> = (1..=n as u8).collect();
    let mut out = Vec::new();
    wide_blocks(&labels, q, w, &mut Vec::new(), &mut |wide, rest| {
        pairings(rest, r, &mut Vec::new(), &mut |narrow| {
            place_narrow(wide, narrow, &mut out);
        });
    });
    out.sort();
    out
}

fn wide_blocks(items: &[u8], q: usize, w: usize, acc: &mut Vec<Vec<u8>>, f: &mut impl FnMut(&[Vec<u8>], &[u8])) {
    if q == 0 {
        f(acc, items);
        return;
    }
    choose_subsets(items, w, &mut |subset, rest| {
        let (&max, lower) = subset.split_last().expect("w >= 2");
        let mut tail = lower.to_vec();
        loop {
            let mut block = vec![max];
            block.extend_from_slice(&tail);
            acc.push(block);
            wide_blocks(rest, q - 1, w, acc, f);
            acc.pop();
            if !next_permutation(&mut tail) {
                break;
            }
        }
    });
}

fn place_narrow(wide: &[Vec<u8>], narrow: &[Vec<u8>], out: &mut Vec<Symbol>) {
    let gaps = wide.len() + 1;
    let mut choice = vec![0usize; narrow.len()];
    loop {
        let mut buckets: Vec<Vec<&Vec<u8>>> = vec![Vec::new(); gaps];
        for (block, &g) in narrow.iter().zip(&choice) {
            buckets[g].push(block);
        }
        let mut blocks: Vec<&[u8]> = Vec::new();
        for (g, bucket) in buckets.iter_mut().enumerate() {
            bucket.sort_by(|a, b| b[0].cmp(&a[0]));
            blocks.extend(bucket.iter().map(|b| b.as_slice()));
            if g < wide.len() {
                blocks.push(&wide[g]);
            }
        }
        out.push(Symbol::from_blocks(&blocks).expect("blocks partition the labels"));
        // odometer over gap choices
        let mut i = 0;
        loop {
            if i == choice.len() {
                return;
            }
            choice[i] += 1;
            if choice[i] < gaps {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Lower bound on `β_j[cell(n, w)]` in the liquid regime: the number of
/// special symbols when they exist, `n!` for `w = 1, j = 0`, and 0 otherwise.
pub fn liquid_lower_bound(n: usize, w: usize, j: usize) -> BigUint {
    if w == 1 && j == 0 {
        return factorial_big(n);
    }
    special_symbol_count(n, w, j).unwrap_or_default()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LiquidExponents {
    pub q: usize,
    pub r: usize,
    /// Growth base `q + 1`.
    pub base: usize,
    /// Polynomial degree `qw + 2r`.
    pub degree: usize,
}

pub fn liquid_exponents(w: usize, j: usize) -> Result<LiquidExponents> {
    if w < 2 || j + 1 < w {
        return Err(Error::InvalidParameters(format!(
            "liquid exponents need w >= 2 and j >= w-1, got w={w}, j={j}"
        )));
    }
    let (q, r) = split_degree(w, j);
    Ok(LiquidExponents {
        q,
        r,
        base: q + 1,
        degree: q * w + 2 * r,
    })
}

impl LiquidExponents {
    /// `(q + 1)^n n^(qw + 2r)`.
    pub fn scale(&self, n: usize) -> BigUint {
        BigUint::from(self.base).pow(n as u32) * BigUint::from(n).pow(self.degree as u32)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RegimeLabel {
    Gas,
    Liquid,
    Solid,
    Unclassified,
}

impl RegimeLabel {
    pub fn letter(self) -> char {
        match self {
            RegimeLabel::Gas => 'G',
            RegimeLabel::Liquid => 'L',
            RegimeLabel::Solid => 'S',
            RegimeLabel::Unclassified => 'U',
        }
    }
}

impl fmt::Display for RegimeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RegimeLabel::Gas => "gas",
            RegimeLabel::Liquid => "liquid",
            RegimeLabel::Solid => "solid",
            RegimeLabel::Unclassified => "unclassified",
        })
    }
}

/// Classifies `(n, w, j)`. Solid is checked first, then gas (including
/// `w >= n`, where the strip is wide enough to be the plane), then liquid.
pub fn regime(n: usize, w: usize, j: usize) -> RegimeLabel {
    if w == 0 || j > top_dimension(n, w.min(n)) {
        return RegimeLabel::Solid;
    }
    if (w >= 2 && j + 2 <= w) || (w >= n && j < n) {
        return RegimeLabel::Gas;
    }
    if w < n && j + 1 >= w {
        return RegimeLabel::Liquid;
    }
    RegimeLabel::Unclassified
}

/// The `(w, j)` regime grid for fixed `n`: rows `j = n-1 .. 0`, columns
/// `w = 0 ..= n+1`.
pub fn render_portrait(n: usize) -> String {
    let max_w = n + 1;
    let mut out = format!("n={n}\nj\\w");
    for w in 0..=max_w {
        out.push_str(&format!(" {w:>2}"));
    }
    out.push('\n');
    for j in (0..n).rev() {
        out.push_str(&format!("{j:>3}"));
        for w in 0..=max_w {
            out.push_str(&format!("  {}", regime(n, w, j).letter()));
        }
        out.push('\n');
    }
    out
}
