//! `H*(B(Z_p)^n; F_p) = F_p[x_1..x_n] ⊗ Λ[y_1..y_n]` (odd `p`), with
//! `|x_i| = 2`, `|y_i| = 1`, the Bockstein `β(y_i) = x_i`, and the
//! polynomial-level inverse transgression `y_i ↦ y_i + a_i z`.
//!
//! A monomial is an exponent vector for the `x`'s and a bitmask of exterior
//! generators taken in increasing index order; bit `n` is the auxiliary
//! degree-1 class `z`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::catalog::{standard_cocycle, StandardType};
use crate::cochain::TransgressedFamily;
use crate::error::{Error, Result};
use crate::group::{is_prime, mixed_radix};
use crate::solver::kernel_mod_prime;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub x: Vec<u32>,
    pub y: u32,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { x: vec![0; n], y: 0 }
    }

    pub fn degree(&self) -> u32 {
        2 * self.x.iter().sum::<u32>() + self.y.count_ones()
    }
}

/// Sign of `y_S · y_T` rewritten in increasing order, or `None` if they share
/// a generator.
fn exterior_sign(s: u32, t: u32) -> Option<i64> {
    if s & t != 0 {
        return None;
    }
    // count pairs (a ∈ S, b ∈ T) with a > b
    let mut inversions = 0;
    let mut rest = t;
    while rest != 0 {
        let b = rest.trailing_zeros();
        rest &= rest - 1;
        inversions += (s >> (b + 1)).count_ones();
    }
    Some(if inversions % 2 == 0 { 1 } else { -1 })
}

/// An element of the (z-extended) cohomology ring with `F_p` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPoly {
    p: u64,
    n: usize,
    terms: BTreeMap<Monomial, u64>,
}

impl GradedPoly {
    pub fn zero(p: u64, n: usize) -> Result<Self> {
        if p == 2 || !is_prime(p as usize) {
            return Err(Error::InvalidArgument(format!("p = {p} must be an odd prime")));
        }
        if n == 0 || n > 30 {
            return Err(Error::InvalidArgument("n must be between 1 and 30".into()));
        }
        Ok(GradedPoly { p, n, terms: BTreeMap::new() })
    }

    pub fn monomial(p: u64, n: usize, m: Monomial, coeff: i64) -> Result<Self> {
        let mut q = Self::zero(p, n)?;
        q.add_term(m, coeff);
        Ok(q)
    }

    pub fn x(p: u64, n: usize, i: usize) -> Result<Self> {
        let mut m = Monomial::one(n);
        m.x[i - 1] = 1;
        Self::monomial(p, n, m, 1)
    }

    pub fn y(p: u64, n: usize, i: usize) -> Result<Self> {
        let mut m = Monomial::one(n);
        m.y = 1 << (i - 1);
        Self::monomial(p, n, m, 1)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, u64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree if homogeneous (`None` for zero or mixed degrees).
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn add_term(&mut self, m: Monomial, coeff: i64) {
        let p = self.p as i64;
        let c = coeff.rem_euclid(p) as u64;
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert(0);
        *entry = (*entry + c) % self.p;
        if *entry == 0 {
            self.terms.remove(&m);
        }
    }

    fn check_same_ring(&self, other: &GradedPoly) {
        assert_eq!((self.p, self.n), (other.p, other.n), "polynomials over different rings");
    }

    pub fn add(&self, other: &GradedPoly) -> GradedPoly {
        self.check_same_ring(other);
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c as i64);
        }
        out
    }

    pub fn scale(&self, c: i64) -> GradedPoly {
        let mut out = GradedPoly { p: self.p, n: self.n, terms: BTreeMap::new() };
        for (m, &v) in &self.terms {
            out.add_term(m.clone(), v as i64 * c);
        }
        out
    }

    pub fn sub(&self, other: &GradedPoly) -> GradedPoly {
        self.add(&other.scale(-1))
    }

    /// Graded-commutative product.
    pub fn mul(&self, other: &GradedPoly) -> GradedPoly {
        self.check_same_ring(other);
        let mut out = GradedPoly { p: self.p, n: self.n, terms: BTreeMap::new() };
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                if let Some(sign) = exterior_sign(a.y, b.y) {
                    let x = a.x.iter().zip(&b.x).map(|(u, v)| u + v).collect();
                    let c = (ca * cb % self.p) as i64 * sign;
                    out.add_term(Monomial { x, y: a.y | b.y }, c);
                }
            }
        }
        out
    }

    pub fn contains_z(&self) -> bool {
        self.terms.keys().any(|m| m.y >> self.n != 0)
    }
}

/// Bockstein: the degree-1 derivation with `β(y_i) = x_i`, `β(x_i) = 0`,
/// `β(uv) = β(u)v + (−1)^{|u|} u β(v)`.
pub fn bockstein(q: &GradedPoly) -> Result<GradedPoly> {
    if q.contains_z() {
        return Err(Error::InvalidArgument("β is only defined here on z-free classes".into()));
    }
    let mut out = GradedPoly { p: q.p, n: q.n, terms: BTreeMap::new() };
    for (m, &c) in &q.terms {
        let mut rest = m.y;
        let mut j = 0;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut x = m.x.clone();
            x[i] += 1;
            let sign = if j % 2 == 0 { 1 } else { -1 };
            out.add_term(Monomial { x, y: m.y & !(1 << i) }, c as i64 * sign);
            j += 1;
        }
    }
    Ok(out)
}

/// `τ̃_g`: substitute `y_i ↦ y_i + a_i z` (the `x`'s are fixed, the
/// degree-2 companion of `z` is discarded), keep the part linear in `z`,
/// move `z` to the right and drop it.
pub fn poly_transgress(q: &GradedPoly, g: &[u64]) -> Result<GradedPoly> {
    if g.len() != q.n {
        return Err(Error::InvalidArgument(format!("g must have {} coordinates", q.n)));
    }
    if q.contains_z() {
        return Err(Error::InvalidArgument("input already contains z".into()));
    }
    let mut out = GradedPoly { p: q.p, n: q.n, terms: BTreeMap::new() };
    for (m, &c) in &q.terms {
        let k = m.y.count_ones() as usize;
        let mut rest = m.y;
        let mut j = 0;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            j += 1;
            let a = g[i] % q.p;
            if a == 0 {
                continue;
            }
            // z sits at position j of k; moving it past the k − j later factors
            let sign = if (k - j) % 2 == 0 { 1 } else { -1 };
            out.add_term(Monomial { x: m.x.clone(), y: m.y & !(1 << i) }, (c * a % q.p) as i64 * sign);
        }
    }
    Ok(out)
}

/// Double inverse transgression: `τ̃_h` is applied first, then `τ̃_g`. With
/// this order the Lemma polynomial maps to `(g × h) · x`.
pub fn double_transgress(q: &GradedPoly, g: &[u64], h: &[u64]) -> Result<GradedPoly> {
    poly_transgress(&poly_transgress(q, h)?, g)
}

/// `x_1 y_2 y_3 − x_2 y_1 y_3 + x_3 y_1 y_2`.
pub fn lemma_polynomial(p: u64) -> Result<GradedPoly> {
    parse_poly(p, 3, "x1 y2 y3 - x2 y1 y3 + x3 y1 y2")
}

pub fn cross(a: &[u64], b: &[u64], p: u64) -> [u64; 3] {
    let f = |i: usize, j: usize| (a[i] * b[j] % p + p - a[j] * b[i] % p) % p;
    [f(1, 2), f(2, 0), f(0, 1)]
}

/// All z-free monomials of a given degree, in canonical order.
pub fn monomial_basis(n: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for y in 0u32..(1 << n) {
        let k = y.count_ones();
        if k > degree || (degree - k) % 2 != 0 {
            continue;
        }
        let total = (degree - k) / 2;
        let mut x = vec![0u32; n];
        compositions(total, 0, &mut x, &mut |x| out.push(Monomial { x: x.to_vec(), y }));
    }
    out.sort();
    out
}

fn compositions(left: u32, i: usize, x: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if i + 1 == x.len() {
        x[i] = left;
        f(x);
        return;
    }
    for v in 0..=left {
        x[i] = v;
        compositions(left - v, i + 1, x, f);
    }
    x[i] = 0;
}

/// An `F_p`-basis of `ker β` in the given degree.
pub fn kernel_beta_basis(p: u64, n: usize, degree: u32) -> Result<Vec<GradedPoly>> {
    let source = monomial_basis(n, degree);
    let target = monomial_basis(n, degree + 1);
    let index: BTreeMap<&Monomial, usize> = target.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = vec![vec![0u64; source.len()]; target.len()];
    for (col, m) in source.iter().enumerate() {
        let image = bockstein(&GradedPoly::monomial(p, n, m.clone(), 1)?)?;
        for (tm, &c) in image.terms() {
            rows[index[tm]][col] = c;
        }
    }
    if rows.is_empty() {
        rows.push(vec![0; source.len()]);
    }
    kernel_mod_prime(&rows, source.len(), p)
        .into_iter()
        .map(|v| {
            let mut q = GradedPoly::zero(p, n)?;
            for (m, c) in source.iter().zip(v) {
                q.add_term(m.clone(), c as i64);
            }
            Ok(q)
        })
        .collect()
}

/// Kernel basis elements with a flag: is `τ̃_g` nonzero for some `g`?
#[derive(Clone, Debug, Serialize)]
pub struct KernelEntry {
    pub polynomial: String,
    pub transgression_nontrivial: bool,
    pub witness_g: Option<Vec<u64>>,
}

pub fn transgression_search(p: u64, n: usize, degree: u32) -> Result<Vec<KernelEntry>> {
    let basis = kernel_beta_basis(p, n, degree)?;
    let total = (p as usize).pow(n as u32);
    basis
        .into_iter()
        .map(|q| {
            let mut witness = None;
            for gi in 0..total {
                let g: Vec<u64> = mixed_radix(gi, &vec![p as usize; n]).into_iter().map(|v| v as u64).collect();
                if !poly_transgress(&q, &g)?.is_zero() {
                    witness = Some(g);
                    break;
                }
            }
            Ok(KernelEntry {
                polynomial: q.to_string(),
                transgression_nontrivial: witness.is_some(),
                witness_g: witness,
            })
        })
        .collect()
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // reverse order puts higher x powers of x1 first, which reads naturally
        for (k, (m, &c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = if c > self.p / 2 { (true, self.p - c) } else { (false, c) };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != 1 {
                factors.push(mag.to_string());
            }
            for (i, &e) in m.x.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{e}", i + 1)),
                }
            }
            for i in 0..=self.n {
                if m.y >> i & 1 == 1 {
                    factors.push(if i == self.n { "z".into() } else { format!("y{}", i + 1) });
                }
            }
            if factors.is_empty() {
                factors.push("1".into());
            }
            write!(f, "{}", factors.join(" "))?;
        }
        Ok(())
    }
}

/// Parses sums of terms like `2 x1^2 y3 y1 - x2 y1`; exterior factors may
/// appear in any order (the sign is adjusted), a repeated `y` gives zero.
pub fn parse_poly(p: u64, n: usize, text: &str) -> Result<GradedPoly> {
    let mut out = GradedPoly::zero(p, n)?;
    let err = |pos: usize, msg: String| Error::Parse { location: format!("column {}", pos + 1), message: msg };
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut sign = 1i64;
    let mut expect_term = true;
    let mut coeff: i64 = 1;
    let mut mono = Monomial::one(n);
    let mut ext_sign = 1i64;
    let mut killed = false;
    let mut have_factor = false;
    let flush = |out: &mut GradedPoly, sign, coeff, mono: &Monomial, ext_sign, killed: bool| {
        if !killed {
            out.add_term(mono.clone(), sign * coeff * ext_sign);
        }
    };
    while i < bytes.len() {
        let ch = bytes[i] as char;
        match ch {
            ' ' | '\t' | '*' => i += 1,
            '+' | '-' => {
                if !expect_term {
                    if !have_factor {
                        return Err(err(i, "empty term".into()));
                    }
                    flush(&mut out, sign, coeff, &mono, ext_sign, killed);
                    coeff = 1;
                    mono = Monomial::one(n);
                    ext_sign = 1;
                    killed = false;
                    have_factor = false;
                    sign = 1;
                }
                if ch == '-' {
                    sign = -sign;
                }
                expect_term = false;
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: i64 = text[start..i].parse().map_err(|_| err(start, "bad number".into()))?;
                coeff *= v;
                have_factor = true;
                expect_term = false;
            }
            'x' | 'y' | 'z' => {
                let start = i;
                i += 1;
                let idx = if ch == 'z' {
                    n + 1
                } else {
                    let ds = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let v: usize = text[ds..i].parse().map_err(|_| err(start, format!("expected an index after '{ch}'")))?;
                    if v == 0 || v > n {
                        return Err(err(start, format!("index {v} outside 1..={n}")));
                    }
                    v
                };
                let mut power = 1u32;
                if i < bytes.len() && bytes[i] == b'^' {
                    let ds = i + 1;
                    i = ds;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    power = text[ds..i].parse().map_err(|_| err(ds, "expected an exponent".into()))?;
                }
                if ch == 'x' {
                    mono.x[idx - 1] += power;
                } else {
                    let bit = 1u32 << (idx - 1);
                    if power > 1 || mono.y & bit != 0 {
                        killed = true;
                    } else {
                        ext_sign *= exterior_sign(mono.y, bit).unwrap();
                        mono.y |= bit;
                    }
                }
                have_factor = true;
                expect_term = false;
            }
            _ => return Err(err(i, format!("unexpected character '{ch}'"))),
        }
    }
    if !have_factor {
        return Err(err(text.len(), "expected a term".into()));
    }
    flush(&mut out, sign, coeff, &mono, ext_sign, killed);
    Ok(out)
}

/// Comparison of the cocycle-level double transgression of `ω_III(1,2,3)`
/// with the polynomial-level prediction `k ↦ ζ_p^{(g×h)·k}`.
#[derive(Clone, Debug, Serialize)]
pub struct ConsistencyReport {
    pub p: u64,
    pub checks: u64,
    pub passed: bool,
    pub first_mismatch: Option<[Vec<u64>; 3]>,
}

pub fn cocycle_consistency_check(p: u64, pairs: Option<&[(usize, usize)]>) -> Result<ConsistencyReport> {
    let moduli = [p as usize; 3];
    let omega = standard_cocycle(&moduli, StandardType::III(1, 2, 3))?;
    let fam = Arc::new(TransgressedFamily::new(&omega)?);
    let n = fam.group().order();
    let coords = |a: usize| -> Vec<u64> { mixed_radix(a, &moduli).into_iter().map(|v| v as u64).collect() };
    let all: Vec<(usize, usize)> = (0..n).flat_map(|g| (0..n).map(move |h| (g, h))).collect();
    let pairs = pairs.unwrap_or(&all);
    let mut checks = 0u64;
    for &(g, h) in pairs {
        let chi = fam.double_transgression(g, h)?;
        let c = cross(&coords(g), &coords(h), p);
        for k in 0..n {
            checks += 1;
            let kc = coords(k);
            let expected = (0..3).map(|i| c[i] * kc[i]).sum::<u64>() % p;
            if chi.at1(k) as u64 % p != expected {
                return Ok(ConsistencyReport {
                    p,
                    checks,
                    passed: false,
                    first_mismatch: Some([coords(g), coords(h), kc]),
                });
            }
        }
    }
    Ok(ConsistencyReport { p, checks, passed: true, first_mismatch: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> GradedPoly {
        parse_poly(3, 3, s).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let q = lemma_polynomial(3).unwrap();
        assert_eq!(parse_poly(3, 3, &q.to_string()).unwrap(), q);
        assert_eq!(poly("y2 y1"), poly("-y1 y2"));
        assert!(poly("y1 y1").is_zero());
        assert_eq!(poly("3 x1"), GradedPoly::zero(3, 3).unwrap());
        assert!(parse_poly(3, 3, "x4").is_err());
        assert!(parse_poly(3, 3, "x1 + ").is_err());
        assert!(parse_poly(3, 3, "q1").is_err());
        assert!(parse_poly(2, 3, "x1").is_err());
    }

    #[test]
    fn bockstein_examples() {
        assert!(bockstein(&poly("x1 x2")).unwrap().is_zero());
        let n2 = |s: &str| parse_poly(3, 2, s).unwrap();
        assert_eq!(bockstein(&n2("x2 y1 y2")).unwrap(), n2("x1 x2 y2 - x2^2 y1"));
        assert!(bockstein(&lemma_polynomial(3).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn bockstein_squares_to_zero() {
        for d in 0..=5 {
            for m in monomial_basis(3, d) {
                let q = GradedPoly::monomial(5, 3, m, 1).unwrap();
                assert!(bockstein(&bockstein(&q).unwrap()).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn transgression_on_generators() {
        let g = [2, 1, 0];
        for i in 1..=3 {
            for j in 1..=3 {
                let xx = poly(&format!("x{i} x{j}"));
                assert!(poly_transgress(&xx, &g).unwrap().is_zero());
                let xy = poly(&format!("x{i} y{j}"));
                assert_eq!(poly_transgress(&xy, &g).unwrap(), poly(&format!("x{i}")).scale(g[j - 1] as i64));
                let yy = poly(&format!("y{i} y{j}"));
                let expected = poly(&format!("y{i}")).scale(g[j - 1] as i64).sub(&poly(&format!("y{j}")).scale(g[i - 1] as i64));
                assert_eq!(poly_transgress(&yy, &g).unwrap(), expected);
            }
        }
    }

    #[test]
    fn lemma_example() {
        let p = lemma_polynomial(3).unwrap();
        assert_eq!(double_transgress(&p, &[1, 0, 0], &[0, 1, 0]).unwrap(), poly("x3"));
        assert!(double_transgress(&p, &[1, 2, 0], &[1, 2, 0]).unwrap().is_zero());
    }

    #[test]
    fn two_variables_have_no_transgression_nontrivial_kernel() {
        for p in [3, 5] {
            let entries = transgression_search(p, 2, 4).unwrap();
            assert!(!entries.is_empty());
            assert!(entries.iter().all(|e| !e.transgression_nontrivial));
        }
    }

    #[test]
    fn lemma_polynomial_lies_in_kernel() {
        let basis = kernel_beta_basis(3, 3, 4).unwrap();
        let target = lemma_polynomial(3).unwrap();
        // membership: adding it does not raise the rank of the span
        let mons = monomial_basis(3, 4);
        let row = |q: &GradedPoly| mons.iter().map(|m| *q.terms().get(m).unwrap_or(&0)).collect::<Vec<u64>>();
        let mut rows: Vec<Vec<u64>> = basis.iter().map(row).collect();
        let r0 = crate::solver::rank_mod_prime(&rows, 3);
        rows.push(row(&target));
        assert_eq!(crate::solver::rank_mod_prime(&rows, 3), r0);
        for i in 1..=3 {
            for j in i..=3 {
                assert!(bockstein(&poly(&format!("x{i} x{j}"))).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn consistency_on_sample_pairs() {
        let r = cocycle_consistency_check(3, Some(&[(9, 3), (9, 9), (3, 1), (0, 5)])).unwrap();
        assert!(r.passed, "{r:?}");
    }
}
