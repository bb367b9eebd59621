//! Projective (cocycle-twisted) complex representations of finite groups.
//!
//! A representation is one dense matrix per group element satisfying
//! `ρ(x)ρ(y) = α(x,y)ρ(xy)`. Matrices are floating point; the cocycle they
//! are checked against is exact.

use std::cmp::Ordering;
use std::sync::Arc;

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cochain::Cochain;
use crate::cyclotomic::root_of_unity;
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::C64;

/// Entry-wise tolerance for representation identities.
pub const MATRIX_TOL: f64 = 1e-9;
/// Tolerance for character comparisons and rounded multiplicities.
pub const CHAR_TOL: f64 = 1e-6;

const SPLIT_ATTEMPTS: usize = 8;

pub type Matrix = DMatrix<C64>;

#[derive(Clone, Debug)]
pub struct ProjectiveRep {
    group: Arc<Group>,
    alpha: Cochain,
    dim: usize,
    mats: Vec<Matrix>,
}

fn max_abs(m: &Matrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

impl ProjectiveRep {
    /// Wraps matrices after checking the projectivity identity.
    pub fn new(group: Arc<Group>, alpha: Cochain, mats: Vec<Matrix>) -> Result<Self> {
        let rep = Self::new_unchecked(group, alpha, mats)?;
        rep.check_projective(MATRIX_TOL)?;
        Ok(rep)
    }

    pub(crate) fn new_unchecked(group: Arc<Group>, alpha: Cochain, mats: Vec<Matrix>) -> Result<Self> {
        if alpha.degree() != 2 || !alpha.group().same_table(&group) {
            return Err(Error::CochainMismatch("representation needs a 2-cochain on its group".into()));
        }
        if mats.len() != group.order() {
            return Err(Error::InvalidArgument("one matrix per group element required".into()));
        }
        let dim = mats.first().map_or(0, |m| m.nrows());
        if mats.iter().any(|m| m.nrows() != dim || m.ncols() != dim) {
            return Err(Error::InvalidArgument("matrices must be square of equal size".into()));
        }
        Ok(ProjectiveRep { group, alpha, dim, mats })
    }

    /// The 1-dimensional trivial representation of an untwisted group.
    pub fn trivial(group: Arc<Group>) -> Self {
        let alpha = Cochain::trivial(group.clone(), 2);
        let mats = vec![Matrix::identity(1, 1); group.order()];
        ProjectiveRep { group, alpha, dim: 1, mats }
    }

    /// `ρ(x) e_y = α(x, y) e_{xy}`.
    pub fn regular(group: Arc<Group>, alpha: Cochain) -> Result<Self> {
        let n = group.order();
        let mats = group
            .elements()
            .map(|x| {
                let mut m = Matrix::zeros(n, n);
                for y in group.elements() {
                    m[(group.mul(x, y), y)] = root_of_unity(alpha.modulus(), alpha.at2(x, y));
                }
                m
            })
            .collect();
        Self::new_unchecked(group, alpha, mats)
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn cocycle(&self) -> &Cochain {
        &self.alpha
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, x: usize) -> &Matrix {
        &self.mats[x]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn character(&self) -> Vec<C64> {
        self.mats.iter().map(|m| m.trace()).collect()
    }

    /// Maximum entry deviation of `ρ(x)ρ(y) - α(x,y)ρ(xy)` over all pairs;
    /// fails with the first pair exceeding `tol`.
    pub fn check_projective(&self, tol: f64) -> Result<f64> {
        let mut worst = 0.0f64;
        for x in self.group.elements() {
            for y in self.group.elements() {
                let lhs = &self.mats[x] * &self.mats[y];
                let a = root_of_unity(self.alpha.modulus(), self.alpha.at2(x, y));
                let dev = max_abs(&(lhs - &self.mats[self.group.mul(x, y)] * a));
                if dev > tol {
                    return Err(Error::NotProjective(format!(
                        "ρ({x})ρ({y}) differs from α({x},{y})ρ({}) by {dev:.3e}",
                        self.group.mul(x, y)
                    )));
                }
                worst = worst.max(dev);
            }
        }
        Ok(worst)
    }

    pub fn restrict(&self, k: &Subgroup) -> Result<ProjectiveRep> {
        if !k.parent().same_table(&self.group) {
            return Err(Error::InvalidArgument("restriction to a subgroup of another group".into()));
        }
        let alpha = self.alpha.restrict(k)?;
        let mats = k.elements().iter().map(|&x| self.mats[x].clone()).collect();
        Self::new_unchecked(k.group().clone(), alpha, mats)
    }

    /// Induction from `K` (this representation lives on `k.group()`) to the
    /// parent, for a parent cocycle `alpha` restricting to ours. With the
    /// transversal `{x_j}` and `h x_j = x_s r`, block `(s, j)` is
    /// `α(h, x_j) / α(x_s, r) · ρ(r)`.
    pub fn induce(&self, k: &Subgroup, alpha: &Cochain) -> Result<ProjectiveRep> {
        if !k.group().same_table(&self.group) {
            return Err(Error::InvalidArgument("representation does not live on the subgroup".into()));
        }
        if !alpha.restrict(k)?.same_values(&self.alpha) {
            return Err(Error::CochainMismatch("cocycle does not restrict to the representation's".into()));
        }
        let h = k.parent().clone();
        let t = k.transversal();
        let d = self.dim;
        let m = alpha.modulus();
        let mats = h
            .elements()
            .map(|x| {
                let mut out = Matrix::zeros(t.len() * d, t.len() * d);
                for (j, &xj) in t.iter().enumerate() {
                    let (s, r) = k.coset_decompose(h.mul(x, xj));
                    let e = (alpha.at2(x, xj) + m - alpha.at2(t[s], k.embed(r))) % m;
                    let block = &self.mats[r] * root_of_unity(m, e);
                    out.view_mut((s * d, j * d), (d, d)).copy_from(&block);
                }
                out
            })
            .collect();
        let rep = Self::new_unchecked(h, alpha.clone(), mats)?;
        debug_assert!(rep.check_projective(MATRIX_TOL).is_ok());
        Ok(rep)
    }

    /// Kronecker product; cocycles multiply.
    pub fn tensor(&self, other: &ProjectiveRep) -> Result<ProjectiveRep> {
        let alpha = self.alpha.mul(&other.alpha)?;
        let mats = self.mats.iter().zip(&other.mats).map(|(a, b)| a.kronecker(b)).collect();
        Self::new_unchecked(self.group.clone(), alpha, mats)
    }

    /// `ρ'(x) = λ(x) ρ(x)`, projective for `α · δλ`.
    pub fn twist(&self, lambda: &Cochain) -> Result<ProjectiveRep> {
        if lambda.degree() != 1 {
            return Err(Error::InvalidArgument("twisting needs a 1-cochain".into()));
        }
        let alpha = self.alpha.mul(&lambda.coboundary())?;
        let mats = self
            .mats
            .iter()
            .enumerate()
            .map(|(x, m)| m * root_of_unity(lambda.modulus(), lambda.at1(x)))
            .collect();
        Self::new_unchecked(self.group.clone(), alpha, mats)
    }

    /// Entry-wise conjugate: for unitary matrices, the dual, projective for
    /// `α⁻¹`.
    pub fn conjugate(&self) -> ProjectiveRep {
        ProjectiveRep {
            group: self.group.clone(),
            alpha: self.alpha.inverse(),
            dim: self.dim,
            mats: self.mats.iter().map(|m| m.conjugate()).collect(),
        }
    }

    /// Change of basis `ρ'(x) = P⁻¹ ρ(x) P` for an invertible `P`.
    pub fn conjugate_by(&self, p: &Matrix) -> Result<ProjectiveRep> {
        let pinv = p
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::InvalidArgument("change of basis is singular".into()))?;
        let mats = self.mats.iter().map(|m| &pinv * m * p).collect();
        Self::new_unchecked(self.group.clone(), self.alpha.clone(), mats)
    }

    /// Sub-representation on the column span of an isometry `q`.
    fn compress(&self, q: &Matrix) -> ProjectiveRep {
        let qa = q.adjoint();
        ProjectiveRep {
            group: self.group.clone(),
            alpha: self.alpha.clone(),
            dim: q.ncols(),
            mats: self.mats.iter().map(|m| &qa * m * q).collect(),
        }
    }

    /// `⟨χ, χ⟩`; equals 1 exactly for irreducibles.
    pub fn character_norm(&self) -> f64 {
        let chi = self.character();
        inner_product(&chi, &chi).re
    }
}

/// `(1/|H|) Σ_h χ(h) conj(ψ(h))`.
pub fn inner_product(chi: &[C64], psi: &[C64]) -> C64 {
    let s: C64 = chi.iter().zip(psi).map(|(a, b)| a * b.conj()).sum();
    s / chi.len() as f64
}

fn chars_close(a: &[C64], b: &[C64]) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).norm() < CHAR_TOL)
}

fn cmp_chars(a: &[C64], b: &[C64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        for (u, v) in [(x.re, y.re), (x.im, y.im)] {
            if (u - v).abs() > CHAR_TOL {
                return u.partial_cmp(&v).unwrap_or(Ordering::Equal).reverse();
            }
        }
    }
    Ordering::Equal
}

/// Classes (indices into the conjugacy data) whose elements are α-regular:
/// `α(h, x) = α(x, h)` for all `x ∈ C(h)`.
pub fn alpha_regular_classes(group: &Group, alpha: &Cochain) -> Vec<usize> {
    let conj = group.conjugacy();
    conj.representatives
        .iter()
        .enumerate()
        .filter(|&(_, &h)| is_alpha_regular(group, alpha, h))
        .map(|(i, _)| i)
        .collect()
}

pub fn is_alpha_regular(group: &Group, alpha: &Cochain, h: usize) -> bool {
    group
        .elements()
        .filter(|&x| group.commutes(h, x))
        .all(|x| alpha.at2(h, x) == alpha.at2(x, h))
}

/// The complete list of irreducible α-representations of `H`, ordered by
/// dimension and then by character values.
#[derive(Clone, Debug)]
pub struct IrrepBasis {
    group: Arc<Group>,
    alpha: Cochain,
    irreps: Vec<ProjectiveRep>,
    characters: Vec<Vec<C64>>,
}

/// Dimensions and characters only (what the on-disk cache stores).
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterTable {
    pub dims: Vec<usize>,
    pub characters: Vec<Vec<C64>>,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn sum_of_squares(&self) -> usize {
        self.dims.iter().map(|d| d * d).sum()
    }

    /// Multiplicities of an α-character in this basis; errors if any
    /// multiplicity is not a nonnegative integer within tolerance.
    pub fn decompose_character(&self, chi: &[C64]) -> Result<Vec<i64>> {
        self.characters
            .iter()
            .enumerate()
            .map(|(i, psi)| {
                let m = inner_product(chi, psi);
                let r = m.re.round();
                if (m - C64::new(r, 0.0)).norm() > CHAR_TOL || r < 0.0 {
                    Err(Error::NonIntegralMultiplicity { index: i, value: format!("{m:.6}") })
                } else {
                    Ok(r as i64)
                }
            })
            .collect()
    }
}

impl IrrepBasis {
    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn cocycle(&self) -> &Cochain {
        &self.alpha
    }

    pub fn len(&self) -> usize {
        self.irreps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreps.is_empty()
    }

    pub fn irreps(&self) -> &[ProjectiveRep] {
        &self.irreps
    }

    pub fn get(&self, i: usize) -> &ProjectiveRep {
        &self.irreps[i]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.irreps.iter().map(ProjectiveRep::dim).collect()
    }

    pub fn characters(&self) -> &[Vec<C64>] {
        &self.characters
    }

    pub fn character_table(&self) -> CharacterTable {
        CharacterTable { dims: self.dims(), characters: self.characters.clone() }
    }

    /// Index of the irreducible with this character, if any.
    pub fn find(&self, chi: &[C64]) -> Option<usize> {
        self.characters.iter().position(|c| chars_close(c, chi))
    }

    pub fn decompose_character(&self, chi: &[C64]) -> Result<RepRingElement> {
        let mult = self.character_table().decompose_character(chi)?;
        let elem = RepRingElement::new(self.group.clone(), self.alpha.clone(), mult);
        // reconstruction check: the multiplicities account for the whole character
        let back = elem.character(self);
        if !chars_close(&back, chi) {
            return Err(Error::NotProjective(
                "character is not an α-character: multiplicities do not reconstruct it".into(),
            ));
        }
        Ok(elem)
    }

    pub fn decompose(&self, v: &ProjectiveRep) -> Result<RepRingElement> {
        if !v.cocycle().same_values(&self.alpha) {
            return Err(Error::CochainMismatch("representation has a different cocycle".into()));
        }
        self.decompose_character(&v.character())
    }
}

/// Computes all irreducible α-representations by splitting the twisted
/// regular representation with averaged random Hermitian operators.
pub fn irreducibles(group: Arc<Group>, alpha: &Cochain, seed: u64) -> Result<IrrepBasis> {
    if alpha.degree() != 2 {
        return Err(Error::InvalidArgument("irreducibles need a 2-cocycle".into()));
    }
    alpha.is_cocycle().map_err(Error::NotCocycle)?;
    if !alpha.is_normalized() {
        return Err(Error::InvalidArgument("irreducibles need a normalized 2-cocycle".into()));
    }
    let regular = ProjectiveRep::regular(group.clone(), alpha.clone())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found: Vec<ProjectiveRep> = Vec::new();
    let mut found_chars: Vec<Vec<C64>> = Vec::new();
    let mut pending = vec![regular];
    while let Some(v) = pending.pop() {
        let chi = v.character();
        if found_chars.iter().any(|c| {
            // already have an irreducible occurring here with the same isotype
            let m = inner_product(&chi, c).re;
            m > 0.5 && (inner_product(&chi, &chi).re - m * m).abs() < CHAR_TOL
        }) {
            continue;
        }
        if (v.character_norm() - 1.0).abs() < CHAR_TOL {
            found_chars.push(chi);
            found.push(v);
            continue;
        }
        pending.extend(split(&v, &mut rng)?);
    }
    let mut order: Vec<usize> = (0..found.len()).collect();
    order.sort_by(|&a, &b| {
        found[a].dim().cmp(&found[b].dim()).then_with(|| cmp_chars(&found_chars[a], &found_chars[b]))
    });
    let irreps: Vec<ProjectiveRep> = order.iter().map(|&i| found[i].clone()).collect();
    let characters: Vec<Vec<C64>> = order.iter().map(|&i| found_chars[i].clone()).collect();
    for r in &irreps {
        r.check_projective(MATRIX_TOL)?;
    }
    let total: usize = irreps.iter().map(|r| r.dim() * r.dim()).sum();
    let regular_count = alpha_regular_classes(&group, alpha).len();
    if total != group.order() || irreps.len() != regular_count {
        return Err(Error::Internal(format!(
            "irreducible census mismatch: Σd² = {total} (|H| = {}), {} irreducibles vs {regular_count} regular classes",
            group.order(),
            irreps.len()
        )));
    }
    Ok(IrrepBasis { group, alpha: alpha.clone(), irreps, characters })
}

/// Splits a reducible unitary representation into invariant pieces.
fn split(v: &ProjectiveRep, rng: &mut ChaCha8Rng) -> Result<Vec<ProjectiveRep>> {
    let d = v.dim();
    for _ in 0..SPLIT_ATTEMPTS {
        let x = Matrix::from_fn(d, d, |_, _| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
        let herm = (&x + x.adjoint()) * C64::new(0.5, 0.0);
        let mut avg = Matrix::zeros(d, d);
        for m in v.matrices() {
            avg += m * &herm * m.adjoint();
        }
        avg /= C64::new(v.group().order() as f64, 0.0);
        // symmetrize away rounding before the Hermitian solver
        let avg = (&avg + avg.adjoint()) * C64::new(0.5, 0.0);
        let eig = SymmetricEigen::new(avg);
        let mut idx: Vec<usize> = (0..d).collect();
        idx.sort_by(|&a, &b| eig.eigenvalues[a].partial_cmp(&eig.eigenvalues[b]).unwrap());
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for &i in &idx {
            match groups.last_mut() {
                Some(g) if (eig.eigenvalues[i] - eig.eigenvalues[*g.last().unwrap()]).abs() < 1e-7 => g.push(i),
                _ => groups.push(vec![i]),
            }
        }
        if groups.len() < 2 {
            continue;
        }
        return Ok(groups
            .into_iter()
            .map(|g| {
                let q = Matrix::from_columns(&g.iter().map(|&i| eig.eigenvectors.column(i)).collect::<Vec<_>>());
                v.compress(&q)
            })
            .collect());
    }
    Err(Error::SplittingFailed(SPLIT_ATTEMPTS))
}

/// An element of `R_α(H)`: integer multiplicities over an [`IrrepBasis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepRingElement {
    group: Arc<Group>,
    alpha: Cochain,
    mult: Vec<i64>,
}

impl RepRingElement {
    pub fn new(group: Arc<Group>, alpha: Cochain, mult: Vec<i64>) -> Self {
        RepRingElement { group, alpha, mult }
    }

    pub fn zero(basis: &IrrepBasis) -> Self {
        Self::new(basis.group.clone(), basis.alpha.clone(), vec![0; basis.len()])
    }

    pub fn basis_element(basis: &IrrepBasis, i: usize) -> Self {
        let mut z = Self::zero(basis);
        z.mult[i] = 1;
        z
    }

    pub fn multiplicities(&self) -> &[i64] {
        &self.mult
    }

    pub fn cocycle(&self) -> &Cochain {
        &self.alpha
    }

    pub fn add(&self, other: &RepRingElement) -> Result<RepRingElement> {
        if self.mult.len() != other.mult.len() || !self.alpha.same_values(&other.alpha) {
            return Err(Error::CochainMismatch("adding elements of different rings".into()));
        }
        let mult = self.mult.iter().zip(&other.mult).map(|(a, b)| a + b).collect();
        Ok(Self::new(self.group.clone(), self.alpha.clone(), mult))
    }

    pub fn dim(&self, basis: &IrrepBasis) -> i64 {
        self.mult.iter().zip(basis.dims()).map(|(m, d)| m * d as i64).sum()
    }

    pub fn character(&self, basis: &IrrepBasis) -> Vec<C64> {
        let mut chi = vec![C64::new(0.0, 0.0); self.group.order()];
        for (m, c) in self.mult.iter().zip(basis.characters()) {
            for (a, b) in chi.iter_mut().zip(c) {
                *a += b * *m as f64;
            }
        }
        chi
    }
}

/// Character of `Ind_K^H` of an α|_K-character `chi` (indexed by local
/// elements of `K`), without building matrices:
/// `χ(h) = Σ_{j : x_j⁻¹ h x_j ∈ K} α(h, x_j) / α(x_j, x_j⁻¹ h x_j) · χ(x_j⁻¹ h x_j)`.
pub fn induced_character(k: &Subgroup, alpha: &Cochain, chi: &[C64]) -> Vec<C64> {
    let h = k.parent();
    let m = alpha.modulus();
    h.elements()
        .map(|x| {
            k.transversal()
                .iter()
                .filter_map(|&xj| {
                    let r = h.conj(h.inv(xj), x);
                    k.local(r).map(|rl| {
                        let e = (alpha.at2(x, xj) + m - alpha.at2(xj, r)) % m;
                        chi[rl] * root_of_unity(m, e)
                    })
                })
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::mixed_radix;

    fn heisenberg_alpha(g: &Arc<Group>) -> Cochain {
        Cochain::from_fn(g.clone(), 2, 3, |t| {
            let (a, b) = (mixed_radix(t[0], &[3, 3]), mixed_radix(t[1], &[3, 3]));
            (a[0] * b[1]) as i64
        })
    }

    #[test]
    fn z2_has_two_characters() {
        let g = Arc::new(Group::cyclic(2).unwrap());
        let b = irreducibles(g.clone(), &Cochain::trivial(g, 2), 1).unwrap();
        assert_eq!(b.dims(), vec![1, 1]);
    }

    #[test]
    fn symmetric_three_dimensions() {
        let g = Arc::new(Group::symmetric(3).unwrap());
        let b = irreducibles(g.clone(), &Cochain::trivial(g, 2), 7).unwrap();
        assert_eq!(b.dims(), vec![1, 1, 2]);
    }

    #[test]
    fn nondegenerate_cocycle_on_z3_squared() {
        let g = Arc::new(Group::elementary_abelian(3, 2).unwrap());
        let alpha = heisenberg_alpha(&g);
        assert_eq!(alpha_regular_classes(&g, &alpha), vec![0]);
        let b = irreducibles(g.clone(), &alpha, 3).unwrap();
        assert_eq!(b.dims(), vec![3]);
        // E ⊗ conj(E) is an honest representation containing every character once
        let e = b.get(0);
        let t = e.tensor(&e.conjugate()).unwrap();
        assert!(t.cocycle().is_trivial());
        let plain = irreducibles(g.clone(), &Cochain::trivial(g.clone(), 2), 3).unwrap();
        let d = plain.decompose_character(&t.character()).unwrap();
        assert_eq!(d.multiplicities(), &[1; 9]);
        // χ vanishes off the regular elements
        for h in 1..9 {
            assert!(e.character()[h].norm() < CHAR_TOL);
        }
    }

    #[test]
    fn regular_representation_multiplicities_are_dimensions() {
        let g = Arc::new(Group::quaternion().unwrap());
        let alpha = Cochain::trivial(g.clone(), 2);
        let b = irreducibles(g.clone(), &alpha, 11).unwrap();
        let reg = ProjectiveRep::regular(g, alpha).unwrap();
        let d = b.decompose(&reg).unwrap();
        assert_eq!(d.multiplicities().iter().map(|&m| m as usize).collect::<Vec<_>>(), b.dims());
        for i in 0..b.len() {
            assert_eq!(b.decompose(b.get(i)).unwrap(), RepRingElement::basis_element(&b, i));
        }
    }

    #[test]
    fn restriction_of_s3_standard_to_a3() {
        let g = Arc::new(Group::symmetric(3).unwrap());
        let b = irreducibles(g.clone(), &Cochain::trivial(g.clone(), 2), 5).unwrap();
        let a3: Vec<usize> = g.elements().filter(|&a| crate::group::permutation_sign(3, a) == 0).collect();
        let k = Subgroup::new(g.clone(), a3).unwrap();
        let res = b.get(2).restrict(&k).unwrap();
        let kb = irreducibles(k.group().clone(), &Cochain::trivial(k.group().clone(), 2), 5).unwrap();
        let d = kb.decompose(&res).unwrap();
        // two distinct nontrivial characters, trivial one absent
        let triv = kb.find(&vec![C64::new(1.0, 0.0); 3]).unwrap();
        assert_eq!(d.multiplicities()[triv], 0);
        assert_eq!(d.multiplicities().iter().sum::<i64>(), 2);
        assert!(d.multiplicities().iter().all(|&m| m <= 1));
        // inducing the trivial character gives trivial ⊕ sign
        let ind = ProjectiveRep::trivial(k.group().clone()).induce(&k, &Cochain::trivial(g.clone(), 2)).unwrap();
        let di = b.decompose(&ind).unwrap();
        assert_eq!(di.multiplicities(), &[1, 1, 0]);
        assert!(chars_close(&ind.character(), &induced_character(&k, &Cochain::trivial(g, 2), &[C64::new(1.0, 0.0); 3])));
    }

    #[test]
    fn twisting_changes_cocycle_by_coboundary() {
        let g = Arc::new(Group::elementary_abelian(3, 2).unwrap());
        let alpha = heisenberg_alpha(&g);
        let b = irreducibles(g.clone(), &alpha, 3).unwrap();
        let lambda = Cochain::from_fn(g.clone(), 1, 9, |t| (t[0] * t[0]) as i64);
        let tw = b.get(0).twist(&lambda).unwrap();
        tw.check_projective(MATRIX_TOL).unwrap();
        let back = tw.twist(&lambda.inverse()).unwrap();
        assert!(back.cocycle().same_values(&alpha));
        for x in g.elements() {
            assert!(max_abs(&(back.matrix(x) - b.get(0).matrix(x))) < MATRIX_TOL);
        }
    }

    #[test]
    fn rejects_unnormalized_or_non_cocycles() {
        let g = Arc::new(Group::cyclic(3).unwrap());
        let bad = Cochain::new(g.clone(), 2, 3, vec![0, 0, 0, 0, 1, 0, 0, 0, 0]).unwrap();
        assert!(bad.is_cocycle().is_err());
        assert!(irreducibles(g.clone(), &bad, 0).is_err());
        let shifted = Cochain::new(g.clone(), 2, 3, vec![1; 9]).unwrap();
        assert!(irreducibles(g, &shifted, 0).is_err());
    }
}
