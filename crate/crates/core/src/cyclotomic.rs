//! Exact elements of `Z[ζ_N]`, used where several root-of-unity terms can
//! land on the same basis element (tensor-square identities).

use std::collections::BTreeMap;

use crate::C64;

/// An element `Σ c_j ζ_N^j`. Equality is decided modulo the cyclotomic
/// polynomial `Φ_N`, so different representatives of the same number compare
/// equal.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    modulus: u32,
    coeffs: Vec<i64>,
}

impl Cyclotomic {
    pub fn zero(modulus: u32) -> Self {
        Cyclotomic { modulus, coeffs: vec![0; modulus as usize] }
    }

    pub fn root(modulus: u32, exponent: u32) -> Self {
        let mut z = Self::zero(modulus);
        z.coeffs[(exponent % modulus) as usize] = 1;
        z
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn add_root(&mut self, exponent: u32, coeff: i64) {
        self.coeffs[(exponent % self.modulus) as usize] += coeff;
    }

    pub fn add(&mut self, other: &Cyclotomic) {
        assert_eq!(self.modulus, other.modulus);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.modulus, other.modulus);
        let n = self.modulus as usize;
        let mut out = Self::zero(self.modulus);
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| **a != 0) {
            for (j, b) in other.coeffs.iter().enumerate().filter(|(_, b)| **b != 0) {
                out.coeffs[(i + j) % n] += a * b;
            }
        }
        out
    }

    pub fn mul_root(&self, exponent: u32) -> Cyclotomic {
        let n = self.modulus as usize;
        let mut out = Self::zero(self.modulus);
        for (i, a) in self.coeffs.iter().enumerate() {
            out.coeffs[(i + exponent as usize) % n] += a;
        }
        out
    }

    /// Canonical remainder modulo `Φ_N` (degree `< φ(N)`).
    pub fn reduced(&self) -> Vec<i64> {
        let phi = cyclotomic_polynomial(self.modulus);
        let d = phi.len() - 1;
        let mut r = self.coeffs.clone();
        for top in (d..r.len()).rev() {
            let c = r[top];
            if c == 0 {
                continue;
            }
            // Φ is monic
            for (k, &pk) in phi.iter().enumerate() {
                r[top - d + k] -= c * pk;
            }
        }
        r.truncate(d);
        r
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().iter().all(|&c| c == 0)
    }

    pub fn to_complex(&self) -> C64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, &c)| root_of_unity(self.modulus, j as u32) * c as f64)
            .sum()
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.reduced() == other.reduced()
    }
}

/// `e^{2πi k / n}`
pub fn root_of_unity(n: u32, k: u32) -> C64 {
    let t = 2.0 * std::f64::consts::PI * (k % n) as f64 / n as f64;
    C64::new(t.cos(), t.sin())
}

/// Integer coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for proper divisors d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        num = poly_div_exact(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = r[i + dd] / den[dd];
        q[i] = c;
        for (k, &dk) in den.iter().enumerate() {
            r[i + k] -= c * dk;
        }
    }
    debug_assert!(r.iter().all(|&v| v == 0));
    q
}

/// Sparse formal sums keyed by basis labels with cyclotomic coefficients.
pub type CyclotomicSum<K> = BTreeMap<K, Cyclotomic>;

pub fn sums_equal<K: Ord>(a: &CyclotomicSum<K>, b: &CyclotomicSum<K>) -> bool {
    let nonzero_a = a.iter().filter(|(_, v)| !v.is_zero());
    let nonzero_b = b.iter().filter(|(_, v)| !v.is_zero());
    let (va, vb): (Vec<_>, Vec<_>) = (nonzero_a.collect(), nonzero_b.collect());
    va.len() == vb.len() && va.iter().zip(&vb).all(|((ka, xa), (kb, xb))| ka == kb && xa == xb)
}
