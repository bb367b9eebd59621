//! Independent oracles computed straight from multiplication tables and
//! cocycle exponents, without going through the library's derived objects.

#![allow(dead_code)]

use std::io::Write;

use orbitwist_core::{Cochain, Group};

/// Writes past the test harness's output capture so that the line shows up
/// in a plain `cargo test` run.
pub fn report(line: &str) {
    let _ = writeln!(std::io::stderr(), "{line}");
}

/// Exponent of `(δω)(a,b,c,d)`.
pub fn pentagon_defect(omega: &Cochain, a: usize, b: usize, c: usize, d: usize) -> i64 {
    let g = omega.group();
    let w = |x: usize, y: usize, z: usize| omega.at3(x, y, z) as i64;
    let m = omega.modulus() as i64;
    (w(b, c, d) - w(g.mul(a, b), c, d) + w(a, g.mul(b, c), d) - w(a, b, g.mul(c, d)) + w(a, b, c)).rem_euclid(m)
}

/// First tuple where the pentagon identity fails, scanning all of `G⁴`.
pub fn pentagon_counterexample(omega: &Cochain) -> Option<[usize; 4]> {
    let n = omega.group().order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if pentagon_defect(omega, a, b, c, d) != 0 {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

/// `θ_g(x, y)` exponent for arbitrary `g, x, y`.
pub fn theta(omega: &Cochain, g: usize, x: usize, y: usize) -> i64 {
    let grp = omega.group();
    let w = |a: usize, b: usize, c: usize| omega.at3(a, b, c) as i64;
    let xy = grp.mul(x, y);
    let xyi = grp.inv(xy);
    let tail = grp.mul(grp.mul(xyi, g), xy);
    let xi = grp.inv(x);
    let mid = grp.mul(grp.mul(xi, g), x);
    (w(g, x, y) + w(x, y, tail) - w(x, mid, y)).rem_euclid(omega.modulus() as i64)
}

pub fn centralizer(g: &Group, a: usize) -> Vec<usize> {
    g.elements().filter(|&x| g.mul(x, a) == g.mul(a, x)).collect()
}

/// Conjugacy classes of the subgroup `h` (given by its elements).
pub fn classes_within(g: &Group, h: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for &a in h {
        if seen[a] {
            continue;
        }
        let mut class: Vec<usize> = h.iter().map(|&y| g.mul(g.mul(y, a), g.inv(y))).collect();
        class.sort_unstable();
        class.dedup();
        for &c in &class {
            seen[c] = true;
        }
        out.push(class);
    }
    out
}

/// Number of `θ_g`-regular classes of `C(g)`: the number of irreducible
/// projective representations of the sector.
pub fn sector_rank(omega: &Cochain, g: usize) -> usize {
    let grp = omega.group();
    let cg = centralizer(grp, g);
    classes_within(grp, &cg)
        .iter()
        .filter(|class| {
            let h = class[0];
            cg.iter()
                .filter(|&&x| grp.mul(x, h) == grp.mul(h, x))
                .all(|&x| theta(omega, g, h, x) == theta(omega, g, x, h))
        })
        .count()
}

/// Class representatives of `G` (the least element of each class).
pub fn class_representatives(g: &Group) -> Vec<usize> {
    let all: Vec<usize> = g.elements().collect();
    classes_within(g, &all).iter().map(|c| c[0]).collect()
}

/// Total number of simple modules of the twisted double, from the sector
/// ranks.
pub fn simple_count(omega: &Cochain) -> usize {
    class_representatives(omega.group()).iter().map(|&g| sector_rank(omega, g)).sum()
}

/// Parses an abelian group label such as `(1,0,2)`.
pub fn coords(g: &Group, a: usize) -> Vec<u64> {
    g.label(a)
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|s| s.parse().expect("coordinate label"))
        .collect()
}
