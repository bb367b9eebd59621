//! `U(1)`-valued group cochains with values in `N`-th roots of unity.
//!
//! A cochain of degree `n` on `G` is stored as one exponent per `n`-tuple,
//! row-major over `G^n`; the value at a tuple is `e^{2πi·exponent/N}`.
//! Products of cochains add exponents, lifting to the lcm of the moduli.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::cyclotomic::root_of_unity;
use crate::error::{Error, Result};
use crate::group::{gcd, lcm, ConjugacyData, Group, Subgroup};
use crate::solver::{self, Inconsistency, SparseRow};
use crate::C64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    group: Arc<Group>,
    degree: usize,
    modulus: u32,
    exps: Vec<u32>,
}

impl Cochain {
    pub fn new(group: Arc<Group>, degree: usize, modulus: u32, exps: Vec<u32>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::CochainMismatch("modulus must be positive".into()));
        }
        let expected = group.order().pow(degree as u32);
        if exps.len() != expected {
            return Err(Error::CochainMismatch(format!(
                "degree-{degree} cochain on a group of order {} needs {expected} values, got {}",
                group.order(),
                exps.len()
            )));
        }
        let exps = exps.into_iter().map(|e| e % modulus).collect();
        Ok(Cochain { group, degree, modulus, exps })
    }

    pub fn trivial(group: Arc<Group>, degree: usize) -> Self {
        let len = group.order().pow(degree as u32);
        Cochain { group, degree, modulus: 1, exps: vec![0; len] }
    }

    /// Builds a cochain from an integer exponent function on tuples.
    pub fn from_fn(
        group: Arc<Group>,
        degree: usize,
        modulus: u32,
        f: impl Fn(&[usize]) -> i64,
    ) -> Self {
        let n = group.order();
        let len = n.pow(degree as u32);
        let mut args = vec![0usize; degree];
        let exps = (0..len)
            .map(|idx| {
                decode(idx, n, &mut args);
                f(&args).rem_euclid(modulus as i64) as u32
            })
            .collect();
        Cochain { group, degree, modulus, exps }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn at(&self, args: &[usize]) -> u32 {
        debug_assert_eq!(args.len(), self.degree);
        let n = self.group.order();
        self.exps[args.iter().fold(0, |acc, &a| acc * n + a)]
    }

    #[inline]
    pub fn at1(&self, a: usize) -> u32 {
        self.exps[a]
    }

    #[inline]
    pub fn at2(&self, a: usize, b: usize) -> u32 {
        self.exps[a * self.group.order() + b]
    }

    #[inline]
    pub fn at3(&self, a: usize, b: usize, c: usize) -> u32 {
        let n = self.group.order();
        self.exps[(a * n + b) * n + c]
    }

    pub fn value(&self, args: &[usize]) -> C64 {
        root_of_unity(self.modulus, self.at(args))
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Rewrites exponents over a multiple of the current modulus.
    pub fn lift(&self, modulus: u32) -> Result<Cochain> {
        if modulus % self.modulus != 0 {
            return Err(Error::CochainMismatch(format!(
                "cannot lift modulus {} to {modulus}",
                self.modulus
            )));
        }
        let f = modulus / self.modulus;
        Ok(Cochain {
            group: self.group.clone(),
            degree: self.degree,
            modulus,
            exps: self.exps.iter().map(|e| e * f).collect(),
        })
    }

    /// Smallest modulus that represents the same values.
    pub fn reduced(&self) -> Cochain {
        let g = self.exps.iter().fold(self.modulus, |acc, &e| gcd(acc as usize, e as usize) as u32);
        let g = g.max(1);
        Cochain {
            group: self.group.clone(),
            degree: self.degree,
            modulus: self.modulus / g,
            exps: self.exps.iter().map(|e| e / g).collect(),
        }
    }

    fn check_compatible(&self, other: &Cochain) -> Result<()> {
        if self.degree != other.degree || !self.group.same_table(&other.group) {
            return Err(Error::CochainMismatch(format!(
                "degree {} on {} vs degree {} on {}",
                self.degree,
                self.group.name(),
                other.degree,
                other.group.name()
            )));
        }
        Ok(())
    }

    /// Pointwise product, over the lcm of the moduli.
    pub fn mul(&self, other: &Cochain) -> Result<Cochain> {
        self.check_compatible(other)?;
        let m = lcm(self.modulus as usize, other.modulus as usize) as u32;
        let (a, b) = (self.lift(m)?, other.lift(m)?);
        let exps = a.exps.iter().zip(&b.exps).map(|(x, y)| (x + y) % m).collect();
        Ok(Cochain { group: self.group.clone(), degree: self.degree, modulus: m, exps })
    }

    pub fn inverse(&self) -> Cochain {
        let m = self.modulus;
        Cochain {
            group: self.group.clone(),
            degree: self.degree,
            modulus: m,
            exps: self.exps.iter().map(|e| (m - e) % m).collect(),
        }
    }

    pub fn div(&self, other: &Cochain) -> Result<Cochain> {
        self.mul(&other.inverse())
    }

    /// Values agree as roots of unity (moduli may differ).
    pub fn same_values(&self, other: &Cochain) -> bool {
        self.check_compatible(other).is_ok() && self.div(other).is_ok_and(|q| q.is_trivial())
    }

    /// Simplicial coboundary:
    /// `δf(g₁..g_{n+1}) = f(g₂..) · Π_i f(.., g_i g_{i+1}, ..)^{(-1)^i} · f(g₁..g_n)^{(-1)^{n+1}}`.
    pub fn coboundary(&self) -> Cochain {
        let g = self.group.clone();
        let n = self.degree;
        let m = self.modulus as i64;
        let gr = g.clone();
        Cochain::from_fn(g, n + 1, self.modulus, move |args| {
            coboundary_terms(&gr, args)
                .into_iter()
                .map(|(sign, sub)| sign * self.at(&sub) as i64)
                .sum::<i64>()
                .rem_euclid(m)
        })
    }

    /// Exhaustive cocycle check; returns the first failing `(n+1)`-tuple.
    pub fn is_cocycle(&self) -> std::result::Result<(), Vec<usize>> {
        let n = self.group.order();
        let deg = self.degree;
        let total = n.pow(deg as u32 + 1);
        let m = self.modulus as i64;
        let first_bad = (0..n).into_par_iter().find_map_first(|lead| {
            let block = total / n;
            let mut args = vec![0usize; deg + 1];
            for rest in 0..block {
                decode(lead * block + rest, n, &mut args);
                let v: i64 = coboundary_terms(&self.group, &args)
                    .into_iter()
                    .map(|(s, sub)| s * self.at(&sub) as i64)
                    .sum();
                if v.rem_euclid(m) != 0 {
                    return Some(args.clone());
                }
            }
            None
        });
        match first_bad {
            Some(t) => Err(t),
            None => Ok(()),
        }
    }

    pub fn is_normalized(&self) -> bool {
        let e = self.group.identity();
        let n = self.group.order();
        let mut args = vec![0usize; self.degree];
        (0..self.exps.len()).all(|idx| {
            decode(idx, n, &mut args);
            !args.contains(&e) || self.exps[idx] == 0
        })
    }

    /// Divides a 2- or 3-cocycle by a canonical coboundary so that it takes
    /// the value 1 whenever an argument is the identity.
    pub fn normalize(&self) -> Result<Cochain> {
        let e = self.group.identity();
        match self.degree {
            0 | 1 => Ok(self.clone()),
            2 => {
                let c = self.at2(e, e);
                let m = self.modulus;
                Ok(Cochain {
                    group: self.group.clone(),
                    degree: 2,
                    modulus: m,
                    exps: self.exps.iter().map(|x| (x + m - c) % m).collect(),
                })
            }
            3 => {
                // μ(a, b) = ω(e, e, b) / ω(a, e, e)
                let mu = Cochain::from_fn(self.group.clone(), 2, self.modulus, |t| {
                    self.at3(e, e, t[1]) as i64 - self.at3(t[0], e, e) as i64
                });
                let out = self.div(&mu.coboundary())?;
                if !out.is_normalized() {
                    return Err(Error::NotCocycle(vec![]));
                }
                Ok(out)
            }
            d => Err(Error::InvalidArgument(format!("normalization of degree {d} cochains"))),
        }
    }

    /// Restriction to a subgroup, as a cochain on the subgroup's own table.
    pub fn restrict(&self, sub: &Subgroup) -> Result<Cochain> {
        if !sub.parent().same_table(&self.group) {
            return Err(Error::CochainMismatch("restriction to a subgroup of another group".into()));
        }
        Ok(Cochain::from_fn(sub.group().clone(), self.degree, self.modulus, |t| {
            let pa: Vec<usize> = t.iter().map(|&l| sub.embed(l)).collect();
            self.at(&pa) as i64
        }))
    }

    /// Pull back along a homomorphism `source → self.group` given as a map.
    pub fn pullback(&self, source: Arc<Group>, hom: &[usize]) -> Result<Cochain> {
        if hom.len() != source.order() {
            return Err(Error::InvalidArgument("homomorphism map has wrong length".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                if hom[source.mul(a, b)] != self.group.mul(hom[a], hom[b]) {
                    return Err(Error::InvalidArgument("map is not a homomorphism".into()));
                }
            }
        }
        Ok(Cochain::from_fn(source, self.degree, self.modulus, |t| {
            let img: Vec<usize> = t.iter().map(|&a| hom[a]).collect();
            self.at(&img) as i64
        }))
    }

    /// Stable content hash (group table + modulus + exponents).
    pub fn content_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.group.order() as u64).to_le_bytes());
        for &v in self.group.table() {
            h.update((v as u32).to_le_bytes());
        }
        h.update((self.degree as u32).to_le_bytes());
        h.update(self.modulus.to_le_bytes());
        for &e in &self.exps {
            h.update(e.to_le_bytes());
        }
        hex::encode(h.finalize())
    }
}

pub(crate) fn decode(mut idx: usize, n: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
}

/// Signed faces of the simplicial coboundary for an `(n+1)`-tuple.
fn coboundary_terms(g: &Group, args: &[usize]) -> Vec<(i64, Vec<usize>)> {
    let k = args.len();
    if k == 0 {
        return Vec::new();
    }
    let mut terms = Vec::with_capacity(k + 1);
    terms.push((1, args[1..].to_vec()));
    for i in 0..k - 1 {
        let mut sub = Vec::with_capacity(k - 1);
        sub.extend_from_slice(&args[..i]);
        sub.push(g.mul(args[i], args[i + 1]));
        sub.extend_from_slice(&args[i + 2..]);
        let sign = if (i + 1) % 2 == 1 { -1 } else { 1 };
        terms.push((sign, sub));
    }
    let sign = if k % 2 == 1 { -1 } else { 1 };
    terms.push((sign, args[..k - 1].to_vec()));
    terms
}

/// Outcome of [`solve_coboundary`].
#[derive(Clone, Debug)]
pub enum CoboundarySolution {
    /// `δλ = c`; `λ` has modulus `N·|G|`.
    Trivial(Cochain),
    /// No `U(1)`-valued `λ` exists. The certificate records the modulus the
    /// exact system was solved over and where elimination hit `0 ≡ c ≠ 0`.
    NotTrivial { modulus: u64, inconsistency: Inconsistency },
}

impl CoboundarySolution {
    pub fn is_trivial(&self) -> bool {
        matches!(self, CoboundarySolution::Trivial(_))
    }

    pub fn witness(&self) -> Option<&Cochain> {
        match self {
            CoboundarySolution::Trivial(l) => Some(l),
            _ => None,
        }
    }
}

/// Decides whether `c` is a coboundary of a `U(1)`-valued cochain.
///
/// A `μ_N`-valued coboundary `δλ` always admits a witness with values in
/// `μ_{N|G|}` (positive-degree `U(1)` cohomology is killed by `|G|`), so the
/// exponent system is solved exactly over `Z/(N|G|)`.
pub fn solve_coboundary(c: &Cochain) -> CoboundarySolution {
    let g = c.group().clone();
    let n = g.order();
    let deg = c.degree();
    assert!(deg >= 1, "degree-0 cochains are never coboundaries");
    let big = c.modulus() as u64 * n as u64;
    let scale = (big / c.modulus() as u64) as u64;
    let num_vars = n.pow(deg as u32 - 1);
    let mut rows: Vec<SparseRow> = Vec::with_capacity(c.exps.len());
    let mut rhs = Vec::with_capacity(c.exps.len());
    let mut args = vec![0usize; deg];
    for idx in 0..c.exps.len() {
        decode(idx, n, &mut args);
        let mut row: SparseRow = Vec::new();
        for (sign, sub) in coboundary_terms(&g, &args) {
            let col = sub.iter().fold(0, |acc, &a| acc * n + a);
            match row.iter_mut().find(|(cc, _)| *cc == col) {
                Some(entry) => entry.1 += sign,
                None => row.push((col, sign)),
            }
        }
        row.retain(|&(_, v)| v != 0);
        rows.push(row);
        rhs.push(c.exps[idx] as u64 * scale % big);
    }
    match solver::solve_mod(num_vars, &rows, &rhs, big) {
        Ok(x) => {
            let lambda = Cochain {
                group: g,
                degree: deg - 1,
                modulus: big as u32,
                exps: x.into_iter().map(|v| v as u32).collect(),
            };
            debug_assert!(lambda.coboundary().same_values(c));
            CoboundarySolution::Trivial(lambda)
        }
        Err(inconsistency) => CoboundarySolution::NotTrivial { modulus: big, inconsistency },
    }
}

/// `θ_g(x, y) = ω(g,x,y) ω(x,y,(xy)⁻¹g(xy)) / ω(x, x⁻¹gx, y)`, exponent form.
/// On `x, y ∈ C(g)` this is `ω(g,x,y) ω(x,y,g) / ω(x,g,y)`.
#[inline]
pub fn theta_exponent(omega: &Cochain, g: usize, x: usize, y: usize) -> u32 {
    let grp = omega.group();
    let m = omega.modulus();
    let xy = grp.mul(x, y);
    let z = grp.conj(grp.inv(xy), g);
    let xg = grp.conj(grp.inv(x), g);
    (omega.at3(g, x, y) + omega.at3(x, y, z) + m - omega.at3(x, xg, y)) % m
}

/// `γ_x(h, l) = ω(h,l,x) ω(x, x⁻¹hx, x⁻¹lx) / ω(h, x, x⁻¹lx)`, exponent form.
#[inline]
pub fn gamma_exponent(omega: &Cochain, x: usize, h: usize, l: usize) -> u32 {
    let grp = omega.group();
    let m = omega.modulus();
    let xi = grp.inv(x);
    let hx = grp.conj(xi, h);
    let lx = grp.conj(xi, l);
    (omega.at3(h, l, x) + omega.at3(x, hx, lx) + m - omega.at3(h, x, lx)) % m
}

fn require_degree(c: &Cochain, d: usize) -> Result<()> {
    if c.degree() != d {
        return Err(Error::InvalidArgument(format!(
            "expected a degree-{d} cochain, got degree {}",
            c.degree()
        )));
    }
    Ok(())
}

/// Inverse transgression of a 3-cocycle at `g`: the 2-cocycle `ω_g` on
/// `C(g)` (on the centralizer's own table).
pub fn transgress3to2(omega: &Cochain, g: usize) -> Result<Cochain> {
    require_degree(omega, 3)?;
    omega.is_cocycle().map_err(Error::NotCocycle)?;
    let c = Subgroup::centralizer(omega.group().clone(), g);
    Ok(transgress_on(omega, g, &c))
}

fn transgress_on(omega: &Cochain, g: usize, c: &Subgroup) -> Cochain {
    Cochain::from_fn(c.group().clone(), 2, omega.modulus(), |t| {
        theta_exponent(omega, g, c.embed(t[0]), c.embed(t[1])) as i64
    })
}

/// Second transgression: `β_h(x) = β(h, x) / β(x, h)` on `C(h)`, where `β` is
/// a 2-cocycle on a group `H` and `h ∈ H`. The result is a character of the
/// centralizer of `h` in `H`.
pub fn transgress2to1(beta: &Cochain, h: usize) -> Result<(Subgroup, Cochain)> {
    require_degree(beta, 2)?;
    let c = Subgroup::centralizer(beta.group().clone(), h);
    let m = beta.modulus();
    let chi = Cochain::from_fn(c.group().clone(), 1, m, |t| {
        let x = c.embed(t[0]);
        beta.at2(h, x) as i64 - beta.at2(x, h) as i64
    });
    let cg = c.group();
    for a in cg.elements() {
        for b in cg.elements() {
            if (chi.at1(a) + chi.at1(b)) % m != chi.at1(cg.mul(a, b)) {
                return Err(Error::Internal(format!(
                    "second transgression is not multiplicative at ({}, {}); input is not a cocycle",
                    c.embed(a),
                    c.embed(b)
                )));
            }
        }
    }
    Ok((c, chi))
}

/// Transport of a 2-cochain on `C(g)` to `C(kgk⁻¹)`:
/// `β'(a, b) = β(k⁻¹ak, k⁻¹bk)`.
pub fn conjugate_cocycle(beta: &Cochain, source: &Subgroup, target: &Subgroup, k: usize) -> Result<Cochain> {
    require_degree(beta, 2)?;
    let g = source.parent();
    let ki = g.inv(k);
    for &y in target.elements() {
        if !source.contains(g.conj(ki, y)) {
            return Err(Error::InvalidArgument("target is not the conjugate subgroup".into()));
        }
    }
    Ok(Cochain::from_fn(target.group().clone(), 2, beta.modulus(), |t| {
        let a = source.local(g.conj(ki, target.embed(t[0]))).unwrap();
        let b = source.local(g.conj(ki, target.embed(t[1]))).unwrap();
        beta.at2(a, b) as i64
    }))
}

/// A 3-cocycle together with all of its inverse transgressions and the
/// centralizer data they live on.
pub struct TransgressedFamily {
    omega: Cochain,
    theta: Vec<u32>,
    gamma: Vec<u32>,
    centralizers: Vec<Subgroup>,
    conjugacy: ConjugacyData,
    sector_cocycles: Vec<Cochain>,
    double_cache: Mutex<HashMap<(usize, usize), Cochain>>,
}

impl std::fmt::Debug for TransgressedFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TransgressedFamily({:?}, N={})", self.omega.group(), self.omega.modulus())
    }
}

impl TransgressedFamily {
    /// Validates and normalizes `ω`, then tabulates `θ_g(x,y)` and `γ_x(h,l)`
    /// for all triples.
    pub fn new(omega: &Cochain) -> Result<Self> {
        require_degree(omega, 3)?;
        omega.is_cocycle().map_err(Error::NotCocycle)?;
        let omega = omega.normalize()?;
        let g = omega.group().clone();
        let n = g.order();
        let mut theta = vec![0u32; n * n * n];
        let mut gamma = vec![0u32; n * n * n];
        theta.par_chunks_mut(n * n).zip(gamma.par_chunks_mut(n * n)).enumerate().for_each(
            |(a, (tb, gb))| {
                for b in 0..n {
                    for c in 0..n {
                        tb[b * n + c] = theta_exponent(&omega, a, b, c);
                        gb[b * n + c] = gamma_exponent(&omega, a, b, c);
                    }
                }
            },
        );
        let centralizers: Vec<Subgroup> =
            g.elements().map(|a| Subgroup::centralizer(g.clone(), a)).collect();
        let sector_cocycles = g
            .elements()
            .map(|a| {
                let c = &centralizers[a];
                Cochain::from_fn(c.group().clone(), 2, omega.modulus(), |t| {
                    theta[(a * n + c.embed(t[0])) * n + c.embed(t[1])] as i64
                })
            })
            .collect();
        let conjugacy = g.conjugacy();
        Ok(TransgressedFamily {
            omega,
            theta,
            gamma,
            centralizers,
            conjugacy,
            sector_cocycles,
            double_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn omega(&self) -> &Cochain {
        &self.omega
    }

    pub fn group(&self) -> &Arc<Group> {
        self.omega.group()
    }

    pub fn modulus(&self) -> u32 {
        self.omega.modulus()
    }

    pub fn conjugacy(&self) -> &ConjugacyData {
        &self.conjugacy
    }

    pub fn centralizer(&self, g: usize) -> &Subgroup {
        &self.centralizers[g]
    }

    /// `θ_g(x, y)` for arbitrary `g, x, y ∈ G`.
    #[inline]
    pub fn theta(&self, g: usize, x: usize, y: usize) -> u32 {
        let n = self.group().order();
        self.theta[(g * n + x) * n + y]
    }

    /// `γ_x(h, l)`.
    #[inline]
    pub fn gamma(&self, x: usize, h: usize, l: usize) -> u32 {
        let n = self.group().order();
        self.gamma[(x * n + h) * n + l]
    }

    /// `ω_g` as a 2-cocycle on `C(g)`.
    pub fn sector_cocycle(&self, g: usize) -> &Cochain {
        &self.sector_cocycles[g]
    }

    /// Character `x ↦ ω_g(h,x)/ω_g(x,h)` of `C(g) ∩ C(h)`, for `h ∈ C(g)`,
    /// keyed by elements of `G`.
    pub fn double_transgression(&self, g: usize, h: usize) -> Result<Cochain> {
        if let Some(c) = self.double_cache.lock().unwrap().get(&(g, h)) {
            return Ok(c.clone());
        }
        let cg = &self.centralizers[g];
        let hl = cg
            .local(h)
            .ok_or_else(|| Error::InvalidArgument("h must commute with g".into()))?;
        let (_, chi) = transgress2to1(&self.sector_cocycles[g], hl)?;
        self.double_cache.lock().unwrap().insert((g, h), chi.clone());
        Ok(chi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{standard_cocycle, StandardType};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_cochain(g: &Arc<Group>, degree: usize, modulus: u32, seed: u64) -> Cochain {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let len = g.order().pow(degree as u32);
        Cochain::new(g.clone(), degree, modulus, (0..len).map(|_| rng.random_range(0..modulus)).collect())
            .unwrap()
    }

    #[test]
    fn coboundary_of_constant_is_trivial() {
        let g = Arc::new(Group::symmetric(3).unwrap());
        for d in 1..3 {
            let c = Cochain::from_fn(g.clone(), d, 5, |_| 0);
            assert!(c.coboundary().is_trivial());
        }
    }

    #[test]
    fn coboundary_on_z2() {
        let g = Arc::new(Group::cyclic(2).unwrap());
        let lambda = Cochain::new(g, 1, 2, vec![0, 1]).unwrap();
        // δλ(1,1) = λ(1) λ(1) / λ(0) = 1
        assert_eq!(lambda.coboundary().at2(1, 1), 0);
    }

    #[test]
    fn coboundary_squares_to_zero() {
        let g = Arc::new(Group::symmetric(3).unwrap());
        for d in 1..3 {
            let c = random_cochain(&g, d, 7, d as u64);
            assert!(c.coboundary().coboundary().is_trivial());
            assert!(c.coboundary().is_cocycle().is_ok());
        }
    }

    #[test]
    fn pentagon_detects_garbage() {
        let g = Arc::new(Group::cyclic(3).unwrap());
        let mut exps = vec![0; 27];
        exps[13] = 1;
        let c = Cochain::new(g, 3, 3, exps).unwrap();
        assert!(c.is_cocycle().is_err());
    }

    #[test]
    fn normalization_of_cohomologous_cocycle() {
        let g = Arc::new(Group::symmetric(3).unwrap());
        let mu = random_cochain(&g, 2, 6, 3);
        let omega = standard_cocycle(&[2], StandardType::I(1))
            .unwrap()
            .lift(6)
            .unwrap();
        let sign: Vec<usize> = (0..6).map(|a| crate::group::permutation_sign(3, a)).collect();
        let pulled = omega.pullback(g.clone(), &sign).unwrap();
        let twisted = pulled.mul(&mu.coboundary()).unwrap();
        assert!(!twisted.is_normalized());
        let n = twisted.normalize().unwrap();
        assert!(n.is_normalized());
        assert!(n.is_cocycle().is_ok());
        // normalization changes ω only by a coboundary
        assert!(solve_coboundary(&n.div(&twisted).unwrap()).is_trivial());
    }

    #[test]
    fn transgression_at_identity_is_trivial() {
        let omega = standard_cocycle(&[3, 3, 3], StandardType::III(1, 2, 3)).unwrap();
        let g = omega.group().clone();
        assert!(transgress3to2(&omega, 0).unwrap().is_trivial());
        let triv = Cochain::trivial(g.clone(), 3);
        for a in g.elements() {
            assert!(transgress3to2(&triv, a).unwrap().is_trivial());
        }
    }

    #[test]
    fn transgression_of_type_three() {
        let omega = standard_cocycle(&[3, 3, 3], StandardType::III(1, 2, 3)).unwrap();
        let g = omega.group().clone();
        let e1 = 9; // (1,0,0)
        let wg = transgress3to2(&omega, e1).unwrap();
        let coords = |a: usize| crate::group::mixed_radix(a, &[3, 3, 3]);
        for x in g.elements() {
            for y in g.elements() {
                let (cx, cy) = (coords(x), coords(y));
                assert_eq!(wg.at2(x, y), ((cx[1] * cy[2]) % 3) as u32);
            }
        }
        // x ↦ ζ^{k_3} for h = (0,1,0)
        let (_, chi) = transgress2to1(&wg, 3).unwrap();
        for k in g.elements() {
            assert_eq!(chi.at1(k), coords(k)[2] as u32);
        }
        // identity: trivial character
        assert!(transgress2to1(&wg, 0).unwrap().1.is_trivial());
        // not a coboundary
        assert!(!solve_coboundary(&wg).is_trivial());
    }

    #[test]
    fn symmetric_cocycle_has_trivial_second_transgression() {
        let g = Arc::new(Group::elementary_abelian(2, 2).unwrap());
        let beta = Cochain::from_fn(g.clone(), 2, 2, |t| {
            let (a, b) = (crate::group::mixed_radix(t[0], &[2, 2]), crate::group::mixed_radix(t[1], &[2, 2]));
            (a[0] * b[0]) as i64
        });
        for h in g.elements() {
            assert!(transgress2to1(&beta, h).unwrap().1.is_trivial());
        }
    }

    #[test]
    fn solver_recovers_random_coboundaries() {
        for d in ["symmetric:3", "quaternion", "cyclic:4"] {
            let g = Arc::new(crate::group::build_group(d).unwrap());
            for (deg, seed) in [(1usize, 1u64), (2, 2)] {
                let mu = random_cochain(&g, deg, 4, seed);
                let c = mu.coboundary();
                let sol = solve_coboundary(&c);
                let lambda = sol.witness().expect("coboundary");
                assert!(lambda.coboundary().same_values(&c));
            }
        }
        let g = Arc::new(Group::cyclic(2).unwrap());
        assert!(solve_coboundary(&Cochain::trivial(g, 2)).is_trivial());
    }

    #[test]
    fn u1_trivial_but_not_mu_n_trivial() {
        // c(a,b) = ζ_3^{carry(a+b)} on Z_3 is δ of a μ_9-valued λ
        let g = Arc::new(Group::cyclic(3).unwrap());
        let c = Cochain::from_fn(g, 2, 3, |t| ((t[0] + t[1]) / 3) as i64);
        let sol = solve_coboundary(&c);
        let lambda = sol.witness().expect("H²(Z_3; U(1)) = 0");
        assert!(lambda.coboundary().same_values(&c));
    }

    #[test]
    fn conjugation_round_trip() {
        let g = Arc::new(Group::symmetric(3).unwrap());
        let omega = crate::catalog::Case::by_id("s3-sign").unwrap().cocycle;
        let fam = TransgressedFamily::new(&omega).unwrap();
        let t = (0..6).find(|&a| g.label(a) == "[213]").unwrap();
        for k in g.elements() {
            let t2 = g.conj(k, t);
            let beta = fam.sector_cocycle(t);
            let there =
                conjugate_cocycle(beta, fam.centralizer(t), fam.centralizer(t2), k).unwrap();
            let back = conjugate_cocycle(&there, fam.centralizer(t2), fam.centralizer(t), g.inv(k))
                .unwrap();
            assert_eq!(&back, beta);
            assert!(there.is_cocycle().is_ok());
        }
        let id = conjugate_cocycle(fam.sector_cocycle(t), fam.centralizer(t), fam.centralizer(t), 0)
            .unwrap();
        assert_eq!(&id, fam.sector_cocycle(t));
    }
}
