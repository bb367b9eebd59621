//! Built-in `(G, ω)` test cases and the standard abelian 3-cocycles.

use std::sync::Arc;

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::group::{mixed_radix, permutation_sign, Group};

/// Standard 3-cocycles on `(Z_m)^n`, coordinates 1-based:
///
/// - `I(i)`:   `ζ_m^{a_i · ⌊(b_i + c_i)/m⌋}`
/// - `II(i,j)`: `ζ_m^{a_i · ⌊(b_j + c_j)/m⌋}`
/// - `III(i,j,k)`: `ζ_m^{a_i b_j c_k}`
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardType {
    I(usize),
    II(usize, usize),
    III(usize, usize, usize),
}

impl StandardType {
    fn coordinates(&self) -> Vec<usize> {
        match *self {
            StandardType::I(i) => vec![i],
            StandardType::II(i, j) => vec![i, j],
            StandardType::III(i, j, k) => vec![i, j, k],
        }
    }
}

/// `Z_m` for one factor, `Z_p^n` for equal factors, `Z_a x Z_b …` otherwise.
pub fn abelian_group(moduli: &[usize]) -> Result<Group> {
    match moduli {
        [m] => Group::cyclic(*m),
        [m, rest @ ..] if rest.iter().all(|r| r == m) => Group::elementary_abelian(*m, moduli.len()),
        _ => Group::abelian(moduli),
    }
}

pub fn standard_cocycle(moduli: &[usize], kind: StandardType) -> Result<Cochain> {
    let coords = kind.coordinates();
    if coords.iter().any(|&c| c == 0 || c > moduli.len()) {
        return Err(Error::InvalidArgument(format!(
            "{kind:?} refers to a coordinate outside 1..={}",
            moduli.len()
        )));
    }
    let m = moduli[coords[0] - 1];
    if coords.iter().any(|&c| moduli[c - 1] != m) {
        return Err(Error::InvalidArgument(format!("{kind:?} needs equal cyclic factors")));
    }
    let g = Arc::new(abelian_group(moduli)?);
    Ok(Cochain::from_fn(g, 3, m as u32, |t| {
        let (a, b, c) = (mixed_radix(t[0], moduli), mixed_radix(t[1], moduli), mixed_radix(t[2], moduli));
        let v = match kind {
            StandardType::I(i) => a[i - 1] * ((b[i - 1] + c[i - 1]) / m),
            StandardType::II(i, j) => a[i - 1] * ((b[j - 1] + c[j - 1]) / m),
            StandardType::III(i, j, k) => a[i - 1] * b[j - 1] * c[k - 1],
        };
        v as i64
    }))
}

/// A built-in verification case.
#[derive(Clone, Debug)]
pub struct Case {
    pub id: &'static str,
    pub description: &'static str,
    pub cocycle: Cochain,
}

impl Case {
    pub fn group(&self) -> &Arc<Group> {
        self.cocycle.group()
    }

    pub fn by_id(id: &str) -> Result<Case> {
        build_case(id)
    }

    /// `|G| ≤ 8`: exhaustive checks are affordable.
    pub fn is_small(&self) -> bool {
        self.group().order() <= 8
    }
}

pub const CASE_IDS: &[&str] = &[
    "d4-pullback",
    "d4-trivial",
    "extraspecial3-trivial",
    "q8-pullback",
    "q8-trivial",
    "s3-sign",
    "s3-trivial",
    "z2-trivial",
    "z2-typeI",
    "z2sq-trivial",
    "z2sq-typeII",
    "z3cube-extraspecial",
    "z3cube-trivial",
    "z3cube-typeI",
    "z3cube-typeII",
    "z3cube-typeIII",
    "z4-trivial",
    "z4-typeI",
];

/// All cases ordered by id.
pub fn all_cases() -> Result<Vec<Case>> {
    CASE_IDS.iter().map(|id| build_case(id)).collect()
}

fn trivial(g: Group) -> Cochain {
    Cochain::trivial(Arc::new(g), 3)
}

/// Pull the generator of `H³(Z_2; U(1))` back along `q: G → Z_2`.
fn z2_pullback(g: Group, q: impl Fn(usize) -> usize) -> Result<Cochain> {
    let omega = standard_cocycle(&[2], StandardType::I(1))?;
    let map: Vec<usize> = g.elements().map(q).collect();
    omega.pullback(Arc::new(g), &map)
}

fn build_case(id: &str) -> Result<Case> {
    let (description, cocycle) = match id {
        "z2-trivial" => ("Z2, trivial", trivial(Group::cyclic(2)?)),
        "z2-typeI" => ("Z2, type I generator", standard_cocycle(&[2], StandardType::I(1))?),
        "z4-trivial" => ("Z4, trivial", trivial(Group::cyclic(4)?)),
        "z4-typeI" => ("Z4, type I generator", standard_cocycle(&[4], StandardType::I(1))?),
        "z2sq-trivial" => ("Z2 x Z2, trivial", trivial(Group::elementary_abelian(2, 2)?)),
        "z2sq-typeII" => ("Z2 x Z2, type II(1,2)", standard_cocycle(&[2, 2], StandardType::II(1, 2))?),
        "s3-trivial" => ("S3, trivial", trivial(Group::symmetric(3)?)),
        "s3-sign" => (
            "S3, type I of Z2 pulled back along the sign",
            z2_pullback(Group::symmetric(3)?, |a| permutation_sign(3, a))?,
        ),
        "d4-trivial" => ("dihedral group of order 8, trivial", trivial(Group::dihedral(4)?)),
        "d4-pullback" => (
            "dihedral group of order 8, type I of Z2 pulled back along r^i s^j -> j",
            z2_pullback(Group::dihedral(4)?, |a| a / 4)?,
        ),
        "q8-trivial" => ("Q8, trivial", trivial(Group::quaternion()?)),
        "q8-pullback" => ("Q8, pulled back from Z2 x Z2 along Q8/{±1}", q8_pullback()?),
        "z3cube-trivial" => ("(Z3)^3, trivial", trivial(Group::elementary_abelian(3, 3)?)),
        "z3cube-typeI" => ("(Z3)^3, type I(1)", standard_cocycle(&[3, 3, 3], StandardType::I(1))?),
        "z3cube-typeII" => ("(Z3)^3, type II(1,2)", standard_cocycle(&[3, 3, 3], StandardType::II(1, 2))?),
        "z3cube-typeIII" => (
            "(Z3)^3, type III(1,2,3)",
            standard_cocycle(&[3, 3, 3], StandardType::III(1, 2, 3))?,
        ),
        "extraspecial3-trivial" => (
            "extra-special group of order 27 and exponent 3, trivial",
            trivial(Group::extraspecial(3)?),
        ),
        "z3cube-extraspecial" => (
            "(Z3)^3 with the 3-cocycle built from the extra-special group of order 27",
            crate::extraspecial::build_bundle(3)?.omega,
        ),
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown case '{other}'; known cases: {}",
                CASE_IDS.join(", ")
            )))
        }
    };
    let id = CASE_IDS.iter().find(|c| **c == id).copied().unwrap();
    Ok(Case { id, description, cocycle })
}

/// Q8 → Z2 x Z2 with `±i ↦ (1,0)`, `±j ↦ (0,1)`; pull back `I(1)·II(1,2)·I(2)`,
/// which is cohomologically nontrivial on Q8.
fn q8_pullback() -> Result<Cochain> {
    let q8 = Group::quaternion()?;
    // index 2u + s, u ∈ {1, i, j, k}; (a, b) ↦ 2a + b in Z2 x Z2
    let map: Vec<usize> = q8.elements().map(|x| [0, 2, 1, 3][x / 2]).collect();
    let a = standard_cocycle(&[2, 2], StandardType::I(1))?;
    let b = standard_cocycle(&[2, 2], StandardType::I(2))?;
    let c = standard_cocycle(&[2, 2], StandardType::II(1, 2))?;
    a.mul(&b)?.mul(&c)?.pullback(Arc::new(q8), &map)
}
