//! The twisted Drinfeld double `D^ω(G)`.
//!
//! Basis elements `δ_g x̄` are pairs `(g, x)`. With `θ_g` the inverse
//! transgression of `ω` (see [`TransgressedFamily`]):
//!
//! - product: `(δ_g x̄)(δ_h ȳ) = [g = x h x⁻¹] θ_g(x, y) δ_g (xy)‾`
//! - coproduct: `Δ(δ_g x̄) = Σ_{hl=g} γ_x(h, l) δ_h x̄ ⊗ δ_l x̄`
//! - R-matrix: `A = Σ δ_g 1̄ ⊗ δ_h ḡ`
//!
//! Structure constants are exact exponents of `ζ_N`; module matrices are
//! complex floating point.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cochain::{Cochain, TransgressedFamily};
use crate::cyclotomic::{root_of_unity, sums_equal, Cyclotomic, CyclotomicSum};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::projrep::{self, CharacterTable, IrrepBasis, Matrix, ProjectiveRep, CHAR_TOL, MATRIX_TOL};
use crate::C64;

/// `(g, x)` standing for `δ_g x̄`.
pub type Basis = (usize, usize);

/// A basis element scaled by `ζ_N^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Scaled {
    pub element: Basis,
    pub exponent: u32,
}

/// Elements of `D ⊗ D` with exact coefficients.
pub type TensorSum = CyclotomicSum<(Basis, Basis)>;

#[derive(Clone, Debug)]
pub struct DoubleAlgebra {
    family: Arc<TransgressedFamily>,
}

impl DoubleAlgebra {
    pub fn new(omega: &Cochain) -> Result<Self> {
        Ok(Self::from_family(Arc::new(TransgressedFamily::new(omega)?)))
    }

    pub fn from_family(family: Arc<TransgressedFamily>) -> Self {
        DoubleAlgebra { family }
    }

    pub fn family(&self) -> &Arc<TransgressedFamily> {
        &self.family
    }

    pub fn group(&self) -> &Arc<Group> {
        self.family.group()
    }

    pub fn modulus(&self) -> u32 {
        self.family.modulus()
    }

    pub fn dimension(&self) -> usize {
        let n = self.group().order();
        n * n
    }

    pub fn product(&self, a: Basis, b: Basis) -> Option<Scaled> {
        let g = self.group();
        let ((ga, xa), (gb, xb)) = (a, b);
        if ga != g.conj(xa, gb) {
            return None;
        }
        Some(Scaled { element: (ga, g.mul(xa, xb)), exponent: self.family.theta(ga, xa, xb) })
    }

    fn product_scaled(&self, a: Scaled, b: Scaled) -> Option<Scaled> {
        let m = self.modulus();
        self.product(a.element, b.element).map(|s| Scaled {
            element: s.element,
            exponent: (s.exponent + a.exponent + b.exponent) % m,
        })
    }

    /// `(ab)c = a(bc)` for one triple; `Err` carries both sides.
    pub fn associative_at(&self, a: Basis, b: Basis, c: Basis) -> std::result::Result<(), String> {
        let unit = |e| Scaled { element: e, exponent: 0 };
        let left = self.product(a, b).and_then(|ab| self.product_scaled(ab, unit(c)));
        let right = self.product(b, c).and_then(|bc| self.product_scaled(unit(a), bc));
        if left == right {
            Ok(())
        } else {
            Err(format!("(ab)c = {left:?}, a(bc) = {right:?}"))
        }
    }

    /// Exhaustive associativity; returns the first failing triple.
    pub fn check_associativity(&self) -> std::result::Result<u64, (Basis, Basis, Basis)> {
        let n = self.group().order();
        let basis: Vec<Basis> = (0..n).flat_map(|g| (0..n).map(move |x| (g, x))).collect();
        let bad = basis.par_iter().find_map_first(|&a| {
            for &b in &basis {
                for &c in &basis {
                    if self.associative_at(a, b, c).is_err() {
                        return Some((a, b, c));
                    }
                }
            }
            None
        });
        match bad {
            Some(t) => Err(t),
            None => Ok((basis.len() as u64).pow(3)),
        }
    }

    /// Associativity on `count` seeded random triples.
    pub fn check_associativity_sampled(
        &self,
        count: u64,
        seed: u64,
    ) -> std::result::Result<u64, (Basis, Basis, Basis)> {
        let n = self.group().order();
        let chunks = 64u64;
        let per = count.div_ceil(chunks);
        let bad = (0..chunks).into_par_iter().find_map_first(|chunk| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (chunk.wrapping_mul(0x9E37_79B9_7F4A_7C15)));
            let mut pick = || (rng.random_range(0..n), rng.random_range(0..n));
            for _ in 0..per {
                let (a, b0, c) = (pick(), pick(), pick());
                // bias towards nonzero products: make b composable with a
                let b = (self.group().conj(self.group().inv(a.1), a.0), b0.1);
                let c = if chunk % 2 == 0 { (self.group().conj(self.group().inv(b.1), b.0), c.1) } else { c };
                if self.associative_at(a, b, c).is_err() {
                    return Some((a, b, c));
                }
            }
            None
        });
        match bad {
            Some(t) => Err(t),
            None => Ok(per * chunks),
        }
    }

    /// `1 · a = a = a · 1` with `1 = Σ_g δ_g ē`.
    pub fn check_unit(&self) -> std::result::Result<(), Basis> {
        let g = self.group();
        let e = g.identity();
        for a in g.elements().flat_map(|h| g.elements().map(move |x| (h, x))) {
            let expected = Some(Scaled { element: a, exponent: 0 });
            let left: Vec<Scaled> = g.elements().filter_map(|k| self.product((k, e), a)).collect();
            let right: Vec<Scaled> = g.elements().filter_map(|k| self.product(a, (k, e))).collect();
            if left.len() != 1 || right.len() != 1 || Some(left[0]) != expected || Some(right[0]) != expected {
                return Err(a);
            }
        }
        Ok(())
    }

    /// `Δ(δ_g x̄)` as `(h, l, exponent)` with `hl = g`.
    pub fn coproduct(&self, a: Basis) -> Vec<(Basis, Basis, u32)> {
        let grp = self.group();
        let (g, x) = a;
        grp.elements()
            .map(|h| {
                let l = grp.mul(grp.inv(h), g);
                ((h, x), (l, x), self.family.gamma(x, h, l))
            })
            .collect()
    }

    fn coproduct_sum(&self, a: Basis) -> TensorSum {
        let mut s = TensorSum::new();
        for (u, v, e) in self.coproduct(a) {
            add_term(&mut s, (u, v), Cyclotomic::root(self.modulus(), e));
        }
        s
    }

    /// `(A, A⁻¹)` with `A⁻¹ = Σ θ_{ghg⁻¹}(g, g⁻¹)⁻¹ δ_g 1̄ ⊗ δ_h g⁻¹‾`.
    pub fn r_matrix(&self) -> (TensorSum, TensorSum) {
        let grp = self.group();
        let e = grp.identity();
        let m = self.modulus();
        let mut a = TensorSum::new();
        let mut ainv = TensorSum::new();
        for g in grp.elements() {
            for h in grp.elements() {
                add_term(&mut a, ((g, e), (h, g)), Cyclotomic::root(m, 0));
                let t = self.family.theta(grp.conj(g, h), g, grp.inv(g));
                add_term(&mut ainv, ((g, e), (h, grp.inv(g))), Cyclotomic::root(m, (m - t) % m));
            }
        }
        (a, ainv)
    }

    /// Product in `D ⊗ D` (componentwise).
    pub fn tensor_product(&self, a: &TensorSum, b: &TensorSum) -> TensorSum {
        let mut out = TensorSum::new();
        for ((a1, a2), ca) in a {
            for ((b1, b2), cb) in b {
                if let (Some(p1), Some(p2)) = (self.product(*a1, *b1), self.product(*a2, *b2)) {
                    let c = ca.mul(cb).mul_root(p1.exponent + p2.exponent);
                    add_term(&mut out, (p1.element, p2.element), c);
                }
            }
        }
        out
    }

    pub fn tensor_unit(&self) -> TensorSum {
        let grp = self.group();
        let e = grp.identity();
        let mut s = TensorSum::new();
        for g in grp.elements() {
            for h in grp.elements() {
                add_term(&mut s, ((g, e), (h, e)), Cyclotomic::root(self.modulus(), 0));
            }
        }
        s
    }

    /// `A · A⁻¹ = 1 ⊗ 1`, exactly.
    pub fn check_r_inverse(&self) -> bool {
        let (a, ainv) = self.r_matrix();
        sums_equal(&self.tensor_product(&a, &ainv), &self.tensor_unit())
            && sums_equal(&self.tensor_product(&ainv, &a), &self.tensor_unit())
    }

    /// `A Δ(a) A⁻¹ = σ(Δ(a))`, exactly.
    pub fn quasitriangular_at(&self, x: Basis, r: &(TensorSum, TensorSum)) -> bool {
        let delta = self.coproduct_sum(x);
        let lhs = self.tensor_product(&self.tensor_product(&r.0, &delta), &r.1);
        let flipped: TensorSum = delta.into_iter().map(|((u, v), c)| ((v, u), c)).collect();
        sums_equal(&lhs, &flipped)
    }

    pub fn check_quasitriangular(&self) -> std::result::Result<usize, Basis> {
        let r = self.r_matrix();
        let n = self.group().order();
        let basis: Vec<Basis> = (0..n).flat_map(|g| (0..n).map(move |x| (g, x))).collect();
        match basis.par_iter().find_first(|&&a| !self.quasitriangular_at(a, &r)) {
            Some(&a) => Err(a),
            None => Ok(basis.len()),
        }
    }

    /// `Δ(ab) = Δ(a)Δ(b)` for one pair of basis elements.
    pub fn coproduct_multiplicative_at(&self, a: Basis, b: Basis) -> bool {
        let lhs = match self.product(a, b) {
            Some(s) => {
                let mut d = self.coproduct_sum(s.element);
                for c in d.values_mut() {
                    *c = c.mul_root(s.exponent);
                }
                d
            }
            None => TensorSum::new(),
        };
        let rhs = self.tensor_product(&self.coproduct_sum(a), &self.coproduct_sum(b));
        sums_equal(&lhs, &rhs)
    }

    /// The DPR-induced module `Ind_{C(g)}^G(E)`: with transversal `{x_j}` of
    /// `C(g)` and `x x_j = x_s r`,
    /// `π(δ_k x̄)(x_j ⊗ v) = [k = x_s g x_s⁻¹] θ_k(x, x_j)/θ_k(x_s, r) · x_s ⊗ ρ(r)v`.
    pub fn dpr_induce(&self, g: usize, e: &ProjectiveRep) -> Result<DoubleModule> {
        let c = self.family.centralizer(g);
        if !e.group().same_table(c.group()) || !e.cocycle().same_values(self.family.sector_cocycle(g)) {
            return Err(Error::CochainMismatch(format!(
                "representation is not projective for the sector cocycle at {g}"
            )));
        }
        let grp = self.group().clone();
        let n = grp.order();
        let t = c.transversal();
        let d = e.dim();
        let dim = t.len() * d;
        let m = self.modulus();
        let mut actions = vec![Matrix::zeros(dim, dim); n * n];
        for x in grp.elements() {
            for (j, &xj) in t.iter().enumerate() {
                let (s, r) = c.coset_decompose(grp.mul(x, xj));
                let k = grp.conj(t[s], g);
                let ex = (self.family.theta(k, x, xj) + m - self.family.theta(k, t[s], c.embed(r))) % m;
                let block = e.matrix(r) * root_of_unity(m, ex);
                actions[k * n + x].view_mut((s * d, j * d), (d, d)).copy_from(&block);
            }
        }
        Ok(DoubleModule { group: grp, dim, actions })
    }

    /// One simple module per (class representative, irreducible of the sector).
    pub fn simples(&self, seed: u64) -> Result<SimpleModules> {
        let conj = self.family.conjugacy();
        let bases: Vec<(usize, IrrepBasis)> = conj
            .representatives
            .par_iter()
            .map(|&g| {
                let c = self.family.centralizer(g);
                projrep::irreducibles(c.group().clone(), self.family.sector_cocycle(g), seed).map(|b| (g, b))
            })
            .collect::<Result<_>>()?;
        let labels: Vec<(usize, usize)> =
            bases.iter().flat_map(|(g, b)| (0..b.len()).map(move |i| (*g, i))).collect();
        let modules: Vec<DoubleModule> = labels
            .par_iter()
            .map(|&(g, i)| {
                let b = &bases.iter().find(|(h, _)| *h == g).unwrap().1;
                self.dpr_induce(g, b.get(i))
            })
            .collect::<Result<_>>()?;
        let out = SimpleModules {
            labels,
            tables: bases.iter().map(|(g, b)| (*g, b.character_table())).collect(),
            bases: bases.into_iter().collect(),
            modules,
        };
        out.check_distinct(self)?;
        Ok(out)
    }

    /// Left-regular module `D` acting on itself.
    pub fn regular_module(&self) -> DoubleModule {
        let grp = self.group().clone();
        let n = grp.order();
        let dim = n * n;
        let mut actions = vec![Matrix::zeros(dim, dim); dim];
        for g in 0..n {
            for x in 0..n {
                for h in 0..n {
                    for y in 0..n {
                        if let Some(s) = self.product((g, x), (h, y)) {
                            let (g2, xy) = s.element;
                            actions[g * n + x][(g2 * n + xy, h * n + y)] = root_of_unity(self.modulus(), s.exponent);
                        }
                    }
                }
            }
        }
        DoubleModule { group: grp, dim, actions }
    }

    /// `k` with `π(δ_g x̄) = [g = e]`.
    pub fn trivial_module(&self) -> DoubleModule {
        let grp = self.group().clone();
        let n = grp.order();
        let e = grp.identity();
        let actions = (0..n * n)
            .map(|i| if i / n == e { Matrix::identity(1, 1) } else { Matrix::zeros(1, 1) })
            .collect();
        DoubleModule { group: grp, dim: 1, actions }
    }

    /// `π_{U⊗V}(a) = (π_U ⊗ π_V)(Δ(a))`.
    pub fn tensor_modules(&self, u: &DoubleModule, v: &DoubleModule) -> DoubleModule {
        let grp = self.group().clone();
        let n = grp.order();
        let dim = u.dim * v.dim;
        let actions = (0..n * n)
            .into_par_iter()
            .map(|idx| {
                let mut out = Matrix::zeros(dim, dim);
                for ((h, x), (l, _), e) in self.coproduct((idx / n, idx % n)) {
                    let (a, b) = (u.action((h, x)), v.action((l, x)));
                    if a.iter().all(|z| z.norm() == 0.0) || b.iter().all(|z| z.norm() == 0.0) {
                        continue;
                    }
                    out += a.kronecker(b) * root_of_unity(self.modulus(), e);
                }
                out
            })
            .collect();
        DoubleModule { group: grp, dim, actions }
    }

    /// `χ_{U⊗V}(g, x) = Σ_h γ_x(h, h⁻¹g) χ_U(h, x) χ_V(h⁻¹g, x)`.
    pub fn tensor_character(&self, chi_u: &[C64], chi_v: &[C64]) -> Vec<C64> {
        let grp = self.group();
        let n = grp.order();
        (0..n * n)
            .map(|idx| {
                let (g, x) = (idx / n, idx % n);
                grp.elements()
                    .map(|h| {
                        let l = grp.mul(grp.inv(h), g);
                        root_of_unity(self.modulus(), self.family.gamma(x, h, l)) * chi_u[h * n + x] * chi_v[l * n + x]
                    })
                    .sum()
            })
            .collect()
    }

    /// Structure check `π(a)π(b) = π(ab)` on all pairs (or `sample` random
    /// pairs) plus the grading identity `Σ_g π(δ_g ē) = 1`.
    pub fn check_module(&self, v: &DoubleModule, sample: Option<(u64, u64)>) -> Result<f64> {
        let grp = self.group();
        let n = grp.order();
        let e = grp.identity();
        let mut sum = Matrix::zeros(v.dim, v.dim);
        for g in grp.elements() {
            sum += v.action((g, e));
        }
        let dev = max_abs(&(sum - Matrix::identity(v.dim, v.dim)));
        if dev > MATRIX_TOL {
            return Err(Error::NotProjective(format!("Σ_g π(δ_g) deviates from 1 by {dev:.3e}")));
        }
        let pairs: Vec<(Basis, Basis)> = match sample {
            None => (0..n * n).flat_map(|a| (0..n * n).map(move |b| ((a / n, a % n), (b / n, b % n)))).collect(),
            Some((count, seed)) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..count)
                    .map(|_| {
                        let a = (rng.random_range(0..n), rng.random_range(0..n));
                        // half the samples composable
                        let hb = if rng.random_bool(0.5) { grp.conj(grp.inv(a.1), a.0) } else { rng.random_range(0..n) };
                        (a, (hb, rng.random_range(0..n)))
                    })
                    .collect()
            }
        };
        let worst = pairs
            .par_iter()
            .map(|&(a, b)| {
                let lhs = v.action(a) * v.action(b);
                let rhs = match self.product(a, b) {
                    Some(s) => v.action(s.element) * root_of_unity(self.modulus(), s.exponent),
                    None => Matrix::zeros(v.dim, v.dim),
                };
                (max_abs(&(lhs - rhs)), a, b)
            })
            .reduce(|| (0.0, (0, 0), (0, 0)), |p, q| if q.0 > p.0 { q } else { p });
        if worst.0 > MATRIX_TOL {
            return Err(Error::NotProjective(format!(
                "module axiom fails at {:?}·{:?} by {:.3e}",
                worst.1, worst.2, worst.0
            )));
        }
        Ok(worst.0.max(dev))
    }
}

fn add_term<K: Ord>(s: &mut CyclotomicSum<K>, k: K, c: Cyclotomic) {
    match s.get_mut(&k) {
        Some(v) => v.add(&c),
        None => {
            s.insert(k, c);
        }
    }
}

fn max_abs(m: &Matrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// A finite-dimensional `D^ω(G)`-module: one matrix per basis element.
#[derive(Clone, Debug)]
pub struct DoubleModule {
    group: Arc<Group>,
    dim: usize,
    actions: Vec<Matrix>,
}

impl DoubleModule {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, (g, x): Basis) -> &Matrix {
        &self.actions[g * self.group.order() + x]
    }

    /// `χ(g, x) = tr π(δ_g x̄)`, indexed `g·|G| + x`.
    pub fn character(&self) -> Vec<C64> {
        self.actions.iter().map(|m| m.trace()).collect()
    }
}

/// The canonical list of simple modules with their sector labels.
#[derive(Clone, Debug)]
pub struct SimpleModules {
    /// `(class representative g, index of the irreducible of C(g))`.
    pub labels: Vec<(usize, usize)>,
    pub modules: Vec<DoubleModule>,
    pub bases: BTreeMap<usize, IrrepBasis>,
    pub tables: BTreeMap<usize, CharacterTable>,
}

impl SimpleModules {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.modules.iter().map(DoubleModule::dim).collect()
    }

    pub fn index_of(&self, class_rep: usize, irrep: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == (class_rep, irrep))
    }

    fn check_distinct(&self, alg: &DoubleAlgebra) -> Result<()> {
        let n = alg.group().order();
        let commuting: Vec<usize> =
            (0..n * n).filter(|&i| alg.group().commutes(i / n, i % n)).collect();
        let chars: Vec<Vec<C64>> = self
            .modules
            .iter()
            .map(|m| {
                let c = m.character();
                commuting.iter().map(|&i| c[i]).collect()
            })
            .collect();
        for i in 0..chars.len() {
            for j in 0..i {
                if chars[i].iter().zip(&chars[j]).all(|(a, b)| (a - b).norm() < CHAR_TOL) {
                    return Err(Error::Internal(format!(
                        "simples {:?} and {:?} have equal characters",
                        self.labels[j], self.labels[i]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Multiplicities of the simples in a module with character `chi`
    /// (indexed `g·|G| + x`), read off sector by sector: on `C(g)` the
    /// function `x ↦ χ(g, x)` is an `ω_g`-character.
    pub fn decompose_character(&self, group: &Group, chi: &[C64], dim: usize) -> Result<DoubleRingElement> {
        let n = group.order();
        let mut mult = vec![0i64; self.len()];
        for (&g, table) in &self.tables {
            let c = self.bases[&g].group();
            let sub: Vec<usize> = group.centralizer_elements(g);
            debug_assert_eq!(sub.len(), c.order());
            let psi: Vec<C64> = sub.iter().map(|&x| chi[g * n + x]).collect();
            for (i, m) in table.decompose_character(&psi)?.into_iter().enumerate() {
                mult[self.index_of(g, i).unwrap()] = m;
            }
        }
        let total: i64 = mult.iter().zip(self.dims()).map(|(m, d)| m * d as i64).sum();
        if total != dim as i64 {
            return Err(Error::Internal(format!(
                "multiplicities account for dimension {total}, module has {dim}"
            )));
        }
        Ok(DoubleRingElement { mult })
    }

    pub fn decompose(&self, group: &Group, v: &DoubleModule) -> Result<DoubleRingElement> {
        self.decompose_character(group, &v.character(), v.dim())
    }
}

/// An element of `R(D^ω(G))` over the canonical simple list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DoubleRingElement {
    pub mult: Vec<i64>,
}

impl DoubleRingElement {
    pub fn basis(len: usize, i: usize) -> Self {
        let mut mult = vec![0; len];
        mult[i] = 1;
        DoubleRingElement { mult }
    }

    pub fn dim(&self, simples: &SimpleModules) -> i64 {
        self.mult.iter().zip(simples.dims()).map(|(m, d)| m * d as i64).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Case;

    fn algebra(id: &str) -> DoubleAlgebra {
        DoubleAlgebra::new(&Case::by_id(id).unwrap().cocycle).unwrap()
    }

    #[test]
    fn idempotents_and_kronecker_factor() {
        let d = algebra("s3-sign");
        for g in 0..6 {
            assert_eq!(d.product((g, 0), (g, 0)), Some(Scaled { element: (g, 0), exponent: 0 }));
            for h in (0..6).filter(|&h| h != g) {
                assert_eq!(d.product((g, 0), (h, 0)), None);
            }
        }
        assert!(d.check_unit().is_ok());
    }

    #[test]
    fn untwisted_coproduct_and_r_matrix() {
        let d = algebra("z2-trivial");
        for (_, _, e) in d.coproduct((1, 1)) {
            assert_eq!(e, 0);
        }
        let (a, _) = d.r_matrix();
        assert_eq!(a.len(), 4);
        assert!(d.check_r_inverse());
    }

    #[test]
    fn gamma_at_identity_is_trivial() {
        let d = algebra("q8-pullback");
        for h in 0..8 {
            for l in 0..8 {
                assert_eq!(d.family().gamma(0, h, l), 0);
            }
        }
    }

    #[test]
    fn small_twisted_doubles_are_quasitriangular_algebras() {
        for id in ["z2-typeI", "s3-sign", "d4-pullback"] {
            let d = algebra(id);
            assert!(d.check_associativity().is_ok(), "{id}");
            assert!(d.check_quasitriangular().is_ok(), "{id}");
            assert!(d.check_r_inverse(), "{id}");
        }
    }

    #[test]
    fn s3_simples() {
        let d = algebra("s3-trivial");
        let s = d.simples(1).unwrap();
        assert_eq!(s.len(), 8);
        let mut dims = s.dims();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 1, 2, 2, 2, 2, 3, 3]);
        assert_eq!(dims.iter().map(|d| d * d).sum::<usize>(), 36);
        for m in &s.modules {
            d.check_module(m, None).unwrap();
        }
        // regular module: every simple occurs with multiplicity equal to its dimension
        let reg = d.regular_module();
        d.check_module(&reg, Some((2000, 3))).unwrap();
        let dec = s.decompose(d.group(), &reg).unwrap();
        assert_eq!(dec.mult, s.dims().iter().map(|&x| x as i64).collect::<Vec<_>>());
    }

    #[test]
    fn tensor_character_matches_matrices() {
        let d = algebra("s3-sign");
        let s = d.simples(2).unwrap();
        let triv = d.trivial_module();
        d.check_module(&triv, None).unwrap();
        for u in &s.modules {
            let ut = d.tensor_modules(u, &triv);
            let chi = ut.character();
            assert!(chi.iter().zip(u.character()).all(|(a, b)| (a - b).norm() < CHAR_TOL));
            for v in &s.modules {
                let uv = d.tensor_modules(u, v);
                d.check_module(&uv, Some((300, 9))).unwrap();
                let formula = d.tensor_character(&u.character(), &v.character());
                assert!(uv.character().iter().zip(&formula).all(|(a, b)| (a - b).norm() < CHAR_TOL));
                let vu = d.tensor_modules(v, u);
                assert_eq!(s.decompose(d.group(), &uv).unwrap(), s.decompose(d.group(), &vu).unwrap());
            }
        }
    }

    #[test]
    fn cohomologous_twists_give_same_dimensions() {
        let case = Case::by_id("d4-pullback").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let beta = Cochain::new(case.group().clone(), 2, 4, (0..64).map(|_| rng.random_range(0..4)).collect()).unwrap();
        let twisted = case.cocycle.mul(&beta.coboundary()).unwrap();
        let d1 = DoubleAlgebra::new(&case.cocycle).unwrap().simples(0).unwrap();
        let d2 = DoubleAlgebra::new(&twisted).unwrap().simples(0).unwrap();
        let (mut a, mut b) = (d1.dims(), d2.dims());
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }
}
