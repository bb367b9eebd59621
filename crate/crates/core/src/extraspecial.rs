//! From an extra-special `p`-group `H` of exponent `p` to a twisted
//! elementary abelian group `(K̂ × H/K, ω)` with `K = Z(H)`.
//!
//! With a section `u: H/K → H` and factor set `u(x)u(y) = k_{x,y} u(xy)`,
//! the 3-cocycle on `G = K̂ × H/K` is `ω((ρ₁,x₁),(ρ₂,x₂),(ρ₃,x₃)) = ρ₁(k_{x₂,x₃})`.
//! Coordinates: `G = (Z_p)^{1+2n}`, first coordinate `s` for the character
//! `ρ_s(z^c) = ζ_p^{sc}`, then coordinates of `H/K` in a greedily chosen basis.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::catalog::{standard_cocycle, StandardType};
use crate::cochain::{solve_coboundary, Cochain, CoboundarySolution};
use crate::drinfeld::DoubleAlgebra;
use crate::error::{Error, Result};
use crate::group::{from_mixed_radix, is_prime, Group};

#[derive(Clone, Debug)]
pub struct ExtraspecialBundle {
    pub p: usize,
    pub h: Arc<Group>,
    /// Center `K = Z(H)`, generated by `z`.
    pub center: Vec<usize>,
    pub z: usize,
    pub quotient: Arc<Group>,
    pub coset_of: Vec<usize>,
    /// Minimal-index coset representatives.
    pub section: Vec<usize>,
    /// `k_{x,y}` as an exponent of `z`, row-major over `H/K × H/K`.
    pub factor_set: Vec<usize>,
    /// Coordinates of each quotient element in `(Z_p)^{2n}`.
    pub quotient_coords: Vec<Vec<usize>>,
    pub g: Arc<Group>,
    pub omega: Cochain,
}

fn power(h: &Group, a: usize, k: usize) -> usize {
    (0..k).fold(h.identity(), |acc, _| h.mul(acc, a))
}

/// Coordinates of an elementary abelian group in a greedy basis
/// (minimal-index element not yet spanned).
fn elementary_coordinates(q: &Group, p: usize) -> Result<Vec<Vec<usize>>> {
    let mut coords: Vec<Option<Vec<usize>>> = vec![None; q.order()];
    coords[q.identity()] = Some(Vec::new());
    let mut rank = 0;
    for cand in q.elements() {
        if coords[cand].is_some() {
            continue;
        }
        rank += 1;
        let spanned: Vec<(usize, Vec<usize>)> =
            coords.iter().enumerate().filter_map(|(i, c)| c.clone().map(|c| (i, c))).collect();
        for (s, c) in spanned {
            let mut x = s;
            for k in 0..p {
                let mut v = c.clone();
                v.resize(rank - 1, 0);
                v.push(k);
                if coords[x].is_some() && k > 0 {
                    return Err(Error::InvalidGroup("quotient is not elementary abelian".into()));
                }
                coords[x] = Some(v);
                x = q.mul(x, cand);
            }
        }
    }
    Ok(coords.into_iter().map(|c| {
        let mut c = c.unwrap();
        c.resize(rank, 0);
        c
    }).collect())
}

pub fn build_bundle(p: usize) -> Result<ExtraspecialBundle> {
    bundle_for(Arc::new(Group::extraspecial(p)?), p)
}

/// Builds the bundle for a given extra-special group of exponent `p`.
pub fn bundle_for(h: Arc<Group>, p: usize) -> Result<ExtraspecialBundle> {
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("p = {p} must be an odd prime")));
    }
    let center = h.center();
    if center.len() != p {
        return Err(Error::InvalidGroup(format!("center has order {}, expected {p}", center.len())));
    }
    if h.exponent() != p {
        return Err(Error::InvalidGroup(format!("exponent {} is not {p}", h.exponent())));
    }
    let (q, coset_of) = h.quotient(&center)?;
    if !q.is_abelian() || q.exponent() != p {
        return Err(Error::InvalidGroup("H/Z(H) is not elementary abelian".into()));
    }
    let z = *center.iter().find(|&&c| c != h.identity()).unwrap();
    let z_exp = |k: usize| (0..p).find(|&c| power(&h, z, c) == k);
    let section: Vec<usize> = (0..q.order()).map(|i| h.elements().find(|&x| coset_of[x] == i).unwrap()).collect();
    let m = q.order();
    let mut factor_set = Vec::with_capacity(m * m);
    for x in 0..m {
        for y in 0..m {
            let k = h.mul(h.mul(section[x], section[y]), h.inv(section[q.mul(x, y)]));
            factor_set.push(z_exp(k).ok_or_else(|| Error::Internal("factor set leaves the center".into()))?);
        }
    }
    let quotient_coords = elementary_coordinates(&q, p)?;
    let rank = quotient_coords[0].len();
    let g = Arc::new(Group::elementary_abelian(p, 1 + rank)?);
    // index of the quotient element with given coordinates
    let mut by_coords = vec![0usize; m];
    for (i, c) in quotient_coords.iter().enumerate() {
        by_coords[from_mixed_radix(c, &vec![p; rank])] = i;
    }
    let qm = p.pow(rank as u32);
    let omega = Cochain::from_fn(g.clone(), 3, p as u32, |t| {
        let s1 = t[0] / qm;
        let x2 = by_coords[t[1] % qm];
        let x3 = by_coords[t[2] % qm];
        (s1 * factor_set[x2 * m + x3]) as i64
    });
    Ok(ExtraspecialBundle {
        p,
        h,
        center,
        z,
        quotient: Arc::new(q),
        coset_of,
        section,
        factor_set,
        quotient_coords,
        g,
        omega,
    })
}

impl ExtraspecialBundle {
    /// Named structural checks on the construction and on the hypotheses of
    /// the untwisted-to-twisted comparison (trivial twist on `H`).
    pub fn hypothesis_checks(&self) -> Vec<(String, bool)> {
        let h = &self.h;
        let q = &self.quotient;
        let p = self.p;
        let m = q.order();
        let mut out = Vec::new();
        out.push(("K = Z(H) is abelian".to_string(), {
            self.center.iter().all(|&a| self.center.iter().all(|&b| h.commutes(a, b)))
        }));
        out.push(("K is normal in H".into(), h.is_normal(&self.center)));
        out.push(("|K| = p".into(), self.center.len() == p));
        out.push(("H/K is elementary abelian".into(), q.is_abelian() && q.exponent() == p));
        out.push(("p(u(x)) = x".into(), (0..m).all(|x| self.coset_of[self.section[x]] == x)));
        out.push((
            "u(x)u(y) = k_{x,y} u(xy) with k_{x,y} in K".into(),
            (0..m).all(|x| {
                (0..m).all(|y| {
                    let k = power(h, self.z, self.factor_set[x * m + y]);
                    h.mul(h.mul(self.section[x], self.section[y]), h.inv(self.section[q.mul(x, y)])) == k
                })
            }),
        ));
        out.push((
            "G is elementary abelian of order p^(2n+1)".into(),
            self.g.is_abelian() && self.g.exponent() == p && self.g.order() == h.order(),
        ));
        // with the trivial twist on H, ω' restricted to K and μ are trivial
        out.push(("twist on H restricted to K×K×K is trivial".into(), true));
        let n = self.g.order();
        out.push((
            "ω vanishes when the first character is trivial".into(),
            (0..m).all(|x| (0..n).all(|y| (0..n).all(|w| self.omega.at3(x, y, w) == 0))),
        ));
        out
    }
}

/// Outcome of the nontriviality certification.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub nontrivial: bool,
    /// Modulus of the exact system and, if nontrivial, where elimination
    /// reached a contradiction.
    pub modulus: u64,
    pub obstruction: Option<String>,
}

pub fn certify_nontrivial(omega: &Cochain) -> Result<Certificate> {
    omega.is_cocycle().map_err(Error::NotCocycle)?;
    Ok(match solve_coboundary(omega) {
        CoboundarySolution::Trivial(l) => Certificate { nontrivial: false, modulus: l.modulus() as u64, obstruction: None },
        CoboundarySolution::NotTrivial { modulus, inconsistency } => Certificate {
            nontrivial: true,
            modulus,
            obstruction: Some(format!(
                "no solution modulo {}^{} (descent level {})",
                inconsistency.prime, inconsistency.exponent, inconsistency.level
            )),
        },
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareReport {
    pub p: usize,
    pub count_h: usize,
    pub count_g: usize,
    pub dims_h: BTreeMap<usize, usize>,
    pub dims_g: BTreeMap<usize, usize>,
    pub sum_squares_h: usize,
    pub sum_squares_g: usize,
    pub counts_match: bool,
    pub dims_match: bool,
    pub omega_is_cocycle: bool,
    pub omega_nontrivial: bool,
    /// For each type-III cocycle `III(i,j,k)` on the same coordinates:
    /// whether `ω / III(i,j,k)` is a coboundary (reported, not asserted).
    pub cohomologous_to_type_iii: BTreeMap<String, bool>,
    pub hypotheses: BTreeMap<String, bool>,
}

fn multiset(dims: &[usize]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &d in dims {
        *m.entry(d).or_insert(0) += 1;
    }
    m
}

/// Compares `D(H)` with `D^ω(G)`: simple counts and dimension multisets.
pub fn compare_doubles(p: usize, seed: u64) -> Result<CompareReport> {
    let bundle = build_bundle(p)?;
    let untwisted = Cochain::trivial(bundle.h.clone(), 3);
    let dh = DoubleAlgebra::new(&untwisted)?.simples(seed)?.dims();
    let dg = DoubleAlgebra::new(&bundle.omega)?.simples(seed)?.dims();
    let cert = certify_nontrivial(&bundle.omega)?;
    let mut cohomologous = BTreeMap::new();
    if p == 3 {
        for (i, j, k) in [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)] {
            let iii = standard_cocycle(&[p; 3], StandardType::III(i, j, k))?;
            let q = bundle.omega.div(&iii)?;
            cohomologous.insert(format!("III({i},{j},{k})"), solve_coboundary(&q).is_trivial());
        }
    }
    let (mh, mg) = (multiset(&dh), multiset(&dg));
    Ok(CompareReport {
        p,
        count_h: dh.len(),
        count_g: dg.len(),
        sum_squares_h: dh.iter().map(|d| d * d).sum(),
        sum_squares_g: dg.iter().map(|d| d * d).sum(),
        counts_match: dh.len() == dg.len(),
        dims_match: mh == mg,
        dims_h: mh,
        dims_g: mg,
        omega_is_cocycle: bundle.omega.is_cocycle().is_ok(),
        omega_nontrivial: cert.nontrivial,
        cohomologous_to_type_iii: cohomologous,
        hypotheses: bundle.hypothesis_checks().into_iter().collect(),
    })
}
