//! Point configurations and the cover of `U(n, w)` by the open sets `U_α`.
//!
//! Two coordinate conventions are used. Membership in `U_α` and chain
//! classification work in the width-1 strip `0 < y < 1`. Torus cycles and
//! `Z*_α` live in the width-`w` strip centred on `y = 0`; [`to_unit_strip`]
//! and [`to_centered_strip`] convert between them.

use std::f64::consts::PI;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bounds::{enumerate_special_symbols, is_special};
use crate::error::{Error, Result};
use crate::symbols::{enumerate_symbols, Symbol};

/// Absolute tolerance for "same x-coordinate" in `Z*_α`.
pub const X_TOLERANCE: f64 = 1e-9;

/// `n` labelled points; label `i` sits at `coords[i - 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConfigurationPoint {
    pub coords: Vec<(f64, f64)>,
}

impl ConfigurationPoint {
    pub fn new(coords: Vec<(f64, f64)>) -> Self {
        ConfigurationPoint { coords }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn x(&self, label: u8) -> f64 {
        self.coords[label as usize - 1].0
    }

    pub fn y(&self, label: u8) -> f64 {
        self.coords[label as usize - 1].1
    }

    pub fn min_pairwise_distance(&self) -> f64 {
        let mut best = f64::INFINITY;
        for (i, a) in self.coords.iter().enumerate() {
            for b in &self.coords[i + 1..] {
                best = best.min((a.0 - b.0).hypot(a.1 - b.1));
            }
        }
        best
    }
}

/// Maps the centred width-`w` strip onto the unit strip.
pub fn to_unit_strip(p: &ConfigurationPoint, w: f64) -> ConfigurationPoint {
    ConfigurationPoint::new(p.coords.iter().map(|&(x, y)| (x / w, y / w + 0.5)).collect())
}

/// Maps the unit strip onto the centred width-`w` strip.
pub fn to_centered_strip(p: &ConfigurationPoint, w: f64) -> ConfigurationPoint {
    ConfigurationPoint::new(p.coords.iter().map(|&(x, y)| (x * w, (y - 0.5) * w)).collect())
}

/// True iff `p` lies in the open set `U_α` of the unit strip.
pub fn u_alpha_contains(p: &ConfigurationPoint, a: &Symbol) -> bool {
    if p.n() != a.n() || p.coords.iter().any(|&(_, y)| !(y > 0.0 && y < 1.0)) {
        return false;
    }
    let blocks: Vec<&[u8]> = a.blocks().collect();
    let mut max_spread = 0.0f64;
    for block in &blocks {
        if block.windows(2).any(|w| p.y(w[0]) <= p.y(w[1])) {
            return false;
        }
        let (lo, hi) = x_range(p, block);
        max_spread = max_spread.max(hi - lo);
    }
    for pair in blocks.windows(2) {
        let (_, left_hi) = x_range(p, pair[0]);
        let (right_lo, _) = x_range(p, pair[1]);
        // the closest cross-block pair is always between adjacent blocks
        if !(left_hi < right_lo) || !(max_spread < right_lo - left_hi) {
            return false;
        }
    }
    true
}

fn x_range(p: &ConfigurationPoint, block: &[u8]) -> (f64, f64) {
    block
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &l| (lo.min(p.x(l)), hi.max(p.x(l))))
}

/// A strictly increasing sequence of symbols in the face order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain(pub Vec<Symbol>);

impl Chain {
    pub fn is_chain(&self) -> bool {
        self.0.windows(2).all(|p| p[0] != p[1] && p[0].is_face_of(&p[1]))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Checks that `p` lies in `U(n, w)`: distinct points in the open unit
/// strip, at most `w` of them on any vertical line.
pub fn check_in_u(p: &ConfigurationPoint, n: usize, w: usize) -> Result<()> {
    if p.n() != n {
        return Err(Error::OutsideDomain(format!("expected {n} points, got {}", p.n())));
    }
    for (i, &(x, y)) in p.coords.iter().enumerate() {
        if !(y > 0.0 && y < 1.0) || !x.is_finite() {
            return Err(Error::OutsideDomain(format!("point {} at ({x}, {y})", i + 1)));
        }
        let same_x = p.coords.iter().filter(|c| c.0 == x).count();
        if same_x > w {
            return Err(Error::OutsideDomain(format!("{same_x} points on the line x = {x}")));
        }
        if p.coords[..i].contains(&(x, y)) {
            return Err(Error::OutsideDomain(format!("point {} repeated", i + 1)));
        }
    }
    Ok(())
}

/// The chain `A_p = {α ∈ P(n, w) : p ∈ U_α}`, finest first.
///
/// Sorting by x, a cluster partition is determined by its smallest cut gap
/// `m`: it must cut exactly the gaps `>= m`, and it qualifies when every
/// cluster spans less than `m`. Such single-linkage levels are checked one by
/// one (ties merge together); each surviving partition is lifted to a symbol
/// by ordering clusters by decreasing y, stopping at the first cluster wider
/// than `w` or containing equal y-values.
pub fn classify_point(p: &ConfigurationPoint, n: usize, w: usize) -> Result<Chain> {
    check_in_u(p, n, w)?;
    let mut order: Vec<u8> = (1..=n as u8).collect();
    order.sort_by(|&a, &b| p.x(a).total_cmp(&p.x(b)));
    let gaps: Vec<f64> = order.windows(2).map(|k| p.x(k[1]) - p.x(k[0])).collect();
    let mut levels: Vec<f64> = gaps.iter().copied().filter(|&g| g > 0.0).collect();
    levels.sort_by(f64::total_cmp);
    levels.dedup();
    levels.push(f64::INFINITY);

    let mut chain = Vec::new();
    for m in levels {
        let mut clusters: Vec<Vec<u8>> = vec![vec![order[0]]];
        for (k, &g) in gaps.iter().enumerate() {
            if g >= m {
                clusters.push(Vec::new());
            }
            clusters.last_mut().expect("nonempty").push(order[k + 1]);
        }
        let spread = clusters
            .iter()
            .map(|c| x_range(p, c))
            .map(|(lo, hi)| hi - lo)
            .fold(0.0, f64::max);
        if !(spread < m) {
            continue;
        }
        if clusters.iter().any(|c| c.len() > w) {
            break;
        }
        for c in &mut clusters {
            c.sort_by(|&a, &b| p.y(b).total_cmp(&p.y(a)));
        }
        if clusters.iter().any(|c| c.windows(2).any(|k| p.y(k[0]) == p.y(k[1]))) {
            break;
        }
        chain.push(Symbol::from_blocks(&clusters).expect("clusters partition the labels"));
    }
    Ok(Chain(chain))
}

/// Brute-force `A_p`: every symbol of `P(n, w)` whose `U_α` contains `p`.
pub fn classify_point_brute_force(p: &ConfigurationPoint, n: usize, w: usize) -> Vec<Symbol> {
    let mut out: Vec<Symbol> = enumerate_symbols(n, w)
        .into_iter()
        .filter(|a| u_alpha_contains(p, a))
        .collect();
    out.sort_by_key(|a| std::cmp::Reverse(a.num_blocks()));
    out
}

/// Every block of `a` split into singletons, in order.
fn vertex_below(a: &Symbol) -> Symbol {
    Symbol::vertex(a.labels()).expect("labels of a symbol form a permutation")
}

/// Merges the left-most adjacent pair of blocks of `from` that lie in the
/// same block of `to`, ordering the union as `to` does.
fn merge_towards(from: &Symbol, to: &Symbol) -> Option<Symbol> {
    let target_block = |l: u8| to.blocks().position(|b| b.contains(&l)).expect("same labels");
    let blocks: Vec<&[u8]> = from.blocks().collect();
    let k = (0..blocks.len().saturating_sub(1)).find(|&k| target_block(blocks[k][0]) == target_block(blocks[k + 1][0]))?;
    let target: &[u8] = to.blocks().nth(target_block(blocks[k][0])).expect("block exists");
    let merged: Vec<u8> = target
        .iter()
        .copied()
        .filter(|l| blocks[k].contains(l) || blocks[k + 1].contains(l))
        .collect();
    let mut out: Vec<&[u8]> = blocks[..k].to_vec();
    out.push(&merged);
    out.extend_from_slice(&blocks[k + 2..]);
    Some(Symbol::from_blocks(&out).expect("merge keeps the labels"))
}

/// Extends a chain downward to a vertex and fills every gap with single
/// merges, so consecutive elements differ in dimension by one.
pub fn saturate_chain(ch: &Chain) -> Chain {
    let Some(first) = ch.0.first() else {
        return Chain(Vec::new());
    };
    let mut out = vec![vertex_below(first)];
    for target in &ch.0 {
        while out.last() != Some(target) {
            let next = merge_towards(out.last().expect("nonempty"), target).expect("target lies above");
            out.push(next);
        }
    }
    Chain(out)
}

/// A point of the unit strip lying in `U_α` for every `α` in the chain.
///
/// The chain is saturated; the gap merged at step `t` is `3^(t+1)` and gaps
/// never merged are `3^(T+2)`, so every cluster at step `s` spans less than
/// `3^(s+2)`. The y-coordinates are evenly spaced, decreasing, inside the
/// blocks of the last element.
pub fn chain_witness(ch: &Chain, n: usize, w: usize) -> Result<ConfigurationPoint> {
    if ch.is_empty() || !ch.is_chain() {
        return Err(Error::InvalidParameters("not a nonempty chain".into()));
    }
    if ch.0.iter().any(|a| a.n() != n || a.width() > w) {
        return Err(Error::InvalidParameters(format!("chain leaves P(n={n}, w={w})")));
    }
    let full = saturate_chain(ch);
    let steps = full.len() - 1;
    let order = full.0[0].labels().to_vec();
    let position: Vec<usize> = {
        let mut pos = vec![0; n + 1];
        for (i, &l) in order.iter().enumerate() {
            pos[l as usize] = i;
        }
        pos
    };
    let mut exponent = vec![steps as i32 + 2; n.saturating_sub(1)];
    for (t, pair) in full.0.windows(2).enumerate() {
        // the new gap sits between the last label of the left block and the
        // first label of the right block, in vertex order
        let before: Vec<&[u8]> = pair[0].blocks().collect();
        let k = before
            .windows(2)
            .position(|b| pair[1].blocks().any(|m| m.contains(&b[0][0]) && m.contains(&b[1][0])))
            .expect("a merge happened");
        let right_first = before[k + 1].iter().map(|&l| position[l as usize]).min().expect("nonempty");
        exponent[right_first - 1] = t as i32 + 2;
    }
    let mut x = vec![0.0; n];
    for i in 1..n {
        x[i] = x[i - 1] + 3f64.powi(exponent[i - 1]);
    }
    let mut coords = vec![(0.0, 0.0); n];
    for (i, &l) in order.iter().enumerate() {
        coords[l as usize - 1].0 = x[i];
    }
    for block in full.0.last().expect("nonempty").blocks() {
        let k = block.len() as f64;
        for (i, &l) in block.iter().enumerate() {
            coords[l as usize - 1].1 = 1.0 - (2.0 * i as f64 + 1.0) / (2.0 * k);
        }
    }
    Ok(ConfigurationPoint::new(coords))
}

/// Largest disk diameter at which `p` is a disk configuration in the unit
/// strip: the minimum of all pairwise distances and twice each distance to
/// the nearer wall.
pub fn tau(p: &ConfigurationPoint) -> f64 {
    let walls = p
        .coords
        .iter()
        .map(|&(_, y)| 2.0 * y.min(1.0 - y))
        .fold(f64::INFINITY, f64::min);
    walls.min(p.min_pairwise_distance())
}

/// [`tau`] for the centred strip of width `w`; `p` is a configuration of
/// unit-diameter disks iff this is at least 1.
pub fn tau_in_strip(p: &ConfigurationPoint, w: f64) -> f64 {
    let walls = p
        .coords
        .iter()
        .map(|&(_, y)| 2.0 * (w / 2.0 - y.abs()))
        .fold(f64::INFINITY, f64::min);
    walls.min(p.min_pairwise_distance())
}

/// One angle per torus factor, in radians.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusAngles(pub Vec<f64>);

/// The point of the torus cycle of the special symbol `a` at the given
/// angles, in the centred width-`w` strip.
///
/// Block `i` sits in an imagined disk of diameter `w(c_i)` centred at
/// `(X_i, 0)`. Inside it the last disk circles the rim at the block's last
/// angle, the remaining disks sit in a disk of diameter one smaller tangent
/// to it, and so on inward.
pub fn torus_point(a: &Symbol, angles: &TorusAngles, w: usize) -> Result<ConfigurationPoint> {
    let j = angles.0.len();
    if a.dimension() != j {
        return Err(Error::InvalidParameters(format!("{a} needs {} angles, got {j}", a.dimension())));
    }
    if !is_special(a, w, j) {
        return Err(Error::InvalidParameters(format!("{a} is not special for w={w}, j={j}")));
    }
    let mut coords = vec![(0.0, 0.0); a.n()];
    let mut left = 0.0;
    let mut used = 0;
    for block in a.blocks() {
        let kk = block.len();
        let center = left + kk as f64 / 2.0;
        left += kk as f64;
        let theta = &angles.0[used..used + kk - 1];
        used += kk - 1;
        let (mut u, mut v) = (center, 0.0);
        for k in 1..kk {
            let t = theta[kk - 1 - k];
            let (c, s) = (t.cos(), t.sin());
            let radius = (kk - k) as f64 / 2.0;
            coords[block[kk - k] as usize - 1] = (u + radius * c, v + radius * s);
            u -= 0.5 * c;
            v -= 0.5 * s;
        }
        coords[block[0] as usize - 1] = (u, v);
    }
    Ok(ConfigurationPoint::new(coords))
}

/// Membership in `Z*_α` (centred width-`w` strip): each block of `α` is
/// vertically aligned with y decreasing in block order, and any two labels
/// in different blocks, one of them in a block of width `w`, keep the block
/// order in x.
pub fn zstar_contains(p: &ConfigurationPoint, a: &Symbol, w: usize) -> bool {
    if p.n() != a.n() {
        return false;
    }
    let blocks: Vec<&[u8]> = a.blocks().collect();
    for block in &blocks {
        for (i, &k) in block.iter().enumerate() {
            for &l in &block[i + 1..] {
                if (p.x(k) - p.x(l)).abs() > X_TOLERANCE || p.y(k) <= p.y(l) {
                    return false;
                }
            }
        }
    }
    for (i, left) in blocks.iter().enumerate() {
        for right in &blocks[i + 1..] {
            if left.len() != w && right.len() != w {
                continue;
            }
            for &k in *left {
                for &l in *right {
                    if p.x(k) >= p.x(l) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// A random point of `U(n, w)` in the unit strip. Roughly a third of the
/// points snap their x onto an earlier point's x when the vertical line has
/// room, so equal x-coordinates are exercised.
pub fn random_point<R: Rng>(rng: &mut R, n: usize, w: usize) -> ConfigurationPoint {
    let scale = rng.gen_range(1.0..(4.0 * n as f64));
    let mut coords: Vec<(f64, f64)> = Vec::with_capacity(n);
    for _ in 0..n {
        let mut x = rng.gen_range(0.0..scale);
        if !coords.is_empty() && rng.gen_bool(0.3) {
            let cand = coords[rng.gen_range(0..coords.len())].0;
            if coords.iter().filter(|c| c.0 == cand).count() < w {
                x = cand;
            }
        }
        let y = loop {
            let y: f64 = rng.gen();
            if y > 0.0 {
                break y;
            }
        };
        coords.push((x, y));
    }
    ConfigurationPoint::new(coords)
}

/// Outcome of a verification sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, what: String) {
        if self.failures.len() < 20 {
            self.failures.push(what);
        }
    }

    pub fn merge(&mut self, other: SweepReport) {
        self.checked += other.checked;
        for f in other.failures {
            self.fail(f);
        }
    }
}

/// Compares [`classify_point`] against the brute-force set on seeded random
/// points, and checks that the result is a chain.
pub fn verify_classification(n: usize, w: usize, samples: usize, seed: u64) -> SweepReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 32) ^ ((w as u64) << 40));
    let mut report = SweepReport::default();
    for _ in 0..samples {
        let p = random_point(&mut rng, n, w);
        report.checked += 1;
        match classify_point(&p, n, w) {
            Ok(chain) => {
                if !chain.is_chain() || chain.0 != classify_point_brute_force(&p, n, w) {
                    report.fail(format!("n={n} w={w} {:?}: got {:?}", p.coords, chain.0));
                }
            }
            Err(e) => report.fail(format!("n={n} w={w} {:?}: {e}", p.coords)),
        }
    }
    report
}

/// All maximal chains of `P(n, w)`: from each vertex, every sequence of
/// single merges until no merge stays within width `w`.
pub fn maximal_chains(n: usize, w: usize) -> Vec<Chain> {
    fn extend(path: &mut Vec<Symbol>, w: usize, out: &mut Vec<Chain>) {
        let ups: Vec<Symbol> = path
            .last()
            .expect("nonempty")
            .merges()
            .into_iter()
            .filter(|s| s.width() <= w)
            .collect();
        if ups.is_empty() {
            out.push(Chain(path.clone()));
            return;
        }
        for up in ups {
            path.push(up);
            extend(path, w, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    for v in enumerate_symbols(n, w).into_iter().filter(|s| s.dimension() == 0) {
        extend(&mut vec![v], w, &mut out);
    }
    out
}

/// Builds a witness for every maximal chain (and every single symbol) of
/// `P(n, w)` and checks membership for each chain element.
pub fn verify_witnesses(n: usize, w: usize) -> SweepReport {
    let mut report = SweepReport::default();
    let singles = enumerate_symbols(n, w).into_iter().map(|s| Chain(vec![s]));
    for chain in maximal_chains(n, w).into_iter().chain(singles) {
        report.checked += 1;
        match chain_witness(&chain, n, w) {
            Ok(p) => {
                if let Some(bad) = chain.0.iter().find(|a| !u_alpha_contains(&p, a)) {
                    report.fail(format!("witness for {:?} misses {bad}", chain.0));
                }
            }
            Err(e) => report.fail(format!("{:?}: {e}", chain.0)),
        }
    }
    report
}

/// Every angle tuple of a grid with `steps` angles per circle factor.
pub fn angle_grid(j: usize, steps: usize) -> impl Iterator<Item = TorusAngles> {
    let total = steps.pow(j as u32);
    (0..total).map(move |mut idx| {
        let mut angles = Vec::with_capacity(j);
        for _ in 0..j {
            angles.push(2.0 * PI * (idx % steps) as f64 / steps as f64);
            idx /= steps;
        }
        TorusAngles(angles)
    })
}

/// Torus-cycle checks for all special symbols of `(n, w)`:
/// every grid point is a disk configuration in the width-`w` strip; exactly
/// one vertical-angle tuple lands in `Z*_α`; and seeded generic points of
/// `Z_α` miss `Z*_α'` for every other special `α'` of the same dimension.
pub fn verify_torus(n: usize, w: usize, steps: usize, samples: usize, seed: u64) -> SweepReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 32) ^ ((w as u64) << 40));
    let mut report = SweepReport::default();
    for j in 0..n {
        let special = enumerate_special_symbols(n, w, j);
        for a in &special {
            for angles in angle_grid(j, steps) {
                report.checked += 1;
                let p = torus_point(a, &angles, w).expect("special symbol");
                let t = tau_in_strip(&p, w as f64);
                if t < 1.0 - 1e-9 {
                    report.fail(format!("{a} at {:?}: tau {t}", angles.0));
                }
            }
            let hits = (0..1usize << j)
                .filter(|mask| {
                    let angles = (0..j)
                        .map(|i| if mask >> i & 1 == 1 { 1.5 * PI } else { 0.5 * PI })
                        .collect();
                    let p = torus_point(a, &TorusAngles(angles), w).expect("special symbol");
                    zstar_contains(&p, a, w)
                })
                .count();
            report.checked += 1;
            if hits != 1 {
                report.fail(format!("{a}: {hits} vertical tuples lie in Z*"));
            }
            for _ in 0..samples {
                let angles = TorusAngles((0..j).map(|_| rng.gen_range(0.0..2.0 * PI)).collect());
                let p = torus_point(a, &angles, w).expect("special symbol");
                for other in special.iter().filter(|o| *o != a) {
                    report.checked += 1;
                    if zstar_contains(&p, other, w) {
                        report.fail(format!("Z_{a} meets Z*_{other} at {:?}", angles.0));
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(t: &str) -> Symbol {
        t.parse().unwrap()
    }

    fn pt(c: &[(f64, f64)]) -> ConfigurationPoint {
        ConfigurationPoint::new(c.to_vec())
    }

    fn texts(ch: &Chain) -> Vec<String> {
        ch.0.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn membership_examples() {
        assert!(u_alpha_contains(&pt(&[(0.0, 0.5), (5.0, 0.5)]), &sym("1|2")));
        assert!(u_alpha_contains(&pt(&[(0.0, 0.8), (0.0, 0.2)]), &sym("1 2")));
        assert!(!u_alpha_contains(&pt(&[(0.0, 0.2), (0.0, 0.8)]), &sym("1 2")));
        assert!(!u_alpha_contains(&pt(&[(0.0, 1.0), (5.0, 0.5)]), &sym("1|2")));
        // spread 2 of "1 2 3" is not below the gap 1.5 to label 4
        let p = pt(&[(0.0, 0.9), (1.0, 0.6), (2.0, 0.3), (3.5, 0.5)]);
        assert!(!u_alpha_contains(&p, &sym("1 2 3|4")));
        assert!(u_alpha_contains(&p, &sym("1|2|3|4")));
    }

    #[test]
    fn classify_examples() {
        let p = pt(&[(0.0, 0.7), (3.0, 0.4)]);
        assert_eq!(texts(&classify_point(&p, 2, 2).unwrap()), vec!["1|2", "1 2"]);
        assert_eq!(texts(&classify_point(&p, 2, 1).unwrap()), vec!["1|2"]);
        let p = pt(&[(0.0, 0.5), (10.0, 0.3), (10.1, 0.6)]);
        let ch = classify_point(&p, 3, 3).unwrap();
        assert_eq!(texts(&ch), vec!["1|2|3", "1|3 2", "3 1 2"]);
        let p = pt(&[(0.0, 0.9), (1.0, 0.6), (2.0, 0.3), (3.5, 0.5)]);
        let ch = classify_point(&p, 4, 4).unwrap();
        assert_eq!(texts(&ch), vec!["1|2|3|4", "1 2 4 3"]);
    }

    #[test]
    fn classify_rejects_points_outside() {
        let p = pt(&[(0.0, 0.7), (0.0, 0.4)]);
        assert!(matches!(classify_point(&p, 2, 1), Err(Error::OutsideDomain(_))));
        assert!(classify_point(&pt(&[(0.0, 0.7), (0.0, 0.7)]), 2, 2).is_err());
        assert!(classify_point(&pt(&[(0.0, 1.5), (1.0, 0.7)]), 2, 2).is_err());
    }

    #[test]
    fn classify_matches_brute_force() {
        for n in 1..=5 {
            for w in 1..=n {
                let r = verify_classification(n, w, 300, 7);
                assert!(r.passed(), "{:?}", r.failures);
            }
        }
    }

    #[test]
    fn witness_examples() {
        let ch = Chain(vec![sym("1|2"), sym("1 2")]);
        let p = chain_witness(&ch, 2, 2).unwrap();
        assert_eq!(p.x(2) - p.x(1), 9.0);
        assert!(p.y(1) > p.y(2));
        assert!(ch.0.iter().all(|a| u_alpha_contains(&p, a)));

        let p = chain_witness(&Chain(vec![sym("2|1")]), 2, 2).unwrap();
        assert!(p.x(2) < p.x(1));
        let p = chain_witness(&Chain(vec![sym("1|2|3")]), 3, 3).unwrap();
        assert!(p.x(1) < p.x(2) && p.x(2) < p.x(3));
        assert!(chain_witness(&Chain(vec![sym("1 2"), sym("1|2")]), 2, 2).is_err());
    }

    #[test]
    fn witness_of_sparse_chain() {
        let ch = Chain(vec![sym("2 1|3|4"), sym("3 2 4 1")]);
        let full = saturate_chain(&ch);
        assert!(full.is_chain());
        assert_eq!(full.len(), 4);
        let p = chain_witness(&ch, 4, 4).unwrap();
        assert!(ch.0.iter().all(|a| u_alpha_contains(&p, a)));
        let classified = classify_point(&p, 4, 4).unwrap();
        assert_eq!(classified, full);
    }

    #[test]
    fn witnesses_small() {
        for n in 1..=3 {
            for w in 1..=n {
                let r = verify_witnesses(n, w);
                assert!(r.passed(), "{:?}", r.failures);
            }
        }
    }

    #[test]
    fn tau_examples() {
        let p = pt(&[(0.0, 0.4), (0.3, 0.4)]);
        assert!((tau(&p) - 0.3).abs() < 1e-12);
        assert!((tau(&pt(&[(0.0, 0.5)])) - 1.0).abs() < 1e-12);
        let p = pt(&[(0.0, 0.5), (5.0, -0.5)]);
        assert!((tau_in_strip(&p, 2.0) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn strip_conversions_round_trip() {
        let p = pt(&[(1.0, 0.25), (3.0, 0.75)]);
        let q = to_unit_strip(&to_centered_strip(&p, 3.0), 3.0);
        for (a, b) in p.coords.iter().zip(&q.coords) {
            assert!((a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12);
        }
    }

    #[test]
    fn torus_examples() {
        let a = sym("2 1");
        let p = torus_point(&a, &TorusAngles(vec![PI / 2.0]), 2).unwrap();
        assert!((p.x(2) - 1.0).abs() < 1e-12 && (p.y(2) + 0.5).abs() < 1e-12);
        assert!((p.x(1) - 1.0).abs() < 1e-12 && (p.y(1) - 0.5).abs() < 1e-12);
        assert!(!zstar_contains(&p, &a, 2));
        let p = torus_point(&a, &TorusAngles(vec![1.5 * PI]), 2).unwrap();
        assert!((p.y(2) - 0.5).abs() < 1e-12 && (p.y(1) + 0.5).abs() < 1e-12);
        assert!(zstar_contains(&p, &a, 2));
        assert!(torus_point(&sym("1 2"), &TorusAngles(vec![0.0]), 2).is_err());
        assert!(torus_point(&a, &TorusAngles(vec![]), 2).is_err());
    }

    #[test]
    fn zstar_examples() {
        let a = sym("2 1");
        assert!(zstar_contains(&pt(&[(0.0, -0.5), (0.0, 0.5)]), &a, 2));
        assert!(!zstar_contains(&pt(&[(0.0, 0.5), (0.0, -0.5)]), &a, 2));
    }

    #[test]
    fn torus_small() {
        for n in 2..=3 {
            for w in 2..=n {
                let r = verify_torus(n, w, 8, 20, 1);
                assert!(r.passed(), "{:?}", r.failures);
            }
        }
    }
}
