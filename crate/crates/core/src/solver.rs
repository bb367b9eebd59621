//! Exact linear systems `A x ≡ b (mod M)` for sparse integer matrices.
//!
//! The modulus is split into prime powers and the pieces are recombined by
//! CRT. Over `Z/p^k` the system is eliminated with unit pivots only; rows that
//! reduce to multiples of `p` are divided by `p` and solved one level down
//! over the remaining free columns. This yields the same solvability verdict
//! as a Smith normal form over the local ring without materialising the
//! unimodular transforms, which matters for the `|G|³ × |G|²` coboundary
//! matrices of degree-3 cochains.

/// Sparse row: `(column, coefficient)` pairs; coefficients may be negative.
pub type SparseRow = Vec<(usize, i64)>;

/// Why a system has no solution: the prime-power component and the descent
/// level at which a contradictory equation `0 ≡ c` was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inconsistency {
    pub prime: u64,
    pub exponent: u32,
    pub level: u32,
}

pub fn solve_mod(
    num_vars: usize,
    rows: &[SparseRow],
    rhs: &[u64],
    modulus: u64,
) -> Result<Vec<u64>, Inconsistency> {
    assert_eq!(rows.len(), rhs.len());
    assert!(modulus >= 1);
    let mut solution = vec![0u64; num_vars];
    let mut acc_mod = 1u64;
    for (p, k) in factorize(modulus) {
        let q = p.pow(k);
        let dense_rows: Vec<Vec<u64>> = rows.iter().map(|r| densify(r, num_vars, q)).collect();
        let local_rhs: Vec<u64> = rhs.iter().map(|&c| c % q).collect();
        let part = solve_prime_power(num_vars, dense_rows, local_rhs, p, k, 0)?;
        // CRT merge
        for (x, y) in solution.iter_mut().zip(&part) {
            *x = crt(*x, acc_mod, *y, q);
        }
        acc_mod *= q;
    }
    Ok(solution)
}

fn densify(row: &SparseRow, n: usize, q: u64) -> Vec<u64> {
    let mut out = vec![0u64; n];
    for &(c, v) in row {
        out[c] = (out[c] + v.rem_euclid(q as i64) as u64) % q;
    }
    out
}

struct Echelon {
    q: u64,
    p: u64,
    pivots: Vec<(usize, Vec<u64>, u64)>,
    pivot_of_col: Vec<Option<usize>>,
    residual: Vec<(Vec<u64>, u64)>,
}

impl Echelon {
    fn reduce(&self, row: &mut [u64], rhs: &mut u64) {
        let q = self.q;
        for (col, prow, prhs) in &self.pivots {
            let f = row[*col];
            if f == 0 {
                continue;
            }
            let neg = q - f;
            for (x, y) in row.iter_mut().zip(prow) {
                if *y != 0 {
                    *x = (*x + neg * y) % q;
                }
            }
            *rhs = (*rhs + neg * prhs) % q;
        }
    }

    fn eliminate_column(row: &mut [u64], rhs: &mut u64, col: usize, prow: &[u64], prhs: u64, q: u64) {
        let f = row[col];
        if f == 0 {
            return;
        }
        let neg = q - f;
        for (x, y) in row.iter_mut().zip(prow) {
            if *y != 0 {
                *x = (*x + neg * y) % q;
            }
        }
        *rhs = (*rhs + neg * prhs) % q;
    }

    /// Returns false on a contradictory zero row.
    fn insert(&mut self, mut row: Vec<u64>, mut rhs: u64) -> bool {
        let (q, p) = (self.q, self.p);
        self.reduce(&mut row, &mut rhs);
        match row.iter().position(|&v| v % p != 0) {
            Some(col) => {
                let inv = mod_inverse(row[col], q).expect("unit");
                for v in row.iter_mut() {
                    *v = *v * inv % q;
                }
                rhs = rhs * inv % q;
                for (_, prow, prhs) in self.pivots.iter_mut() {
                    Self::eliminate_column(prow, prhs, col, &row, rhs, q);
                }
                for (rrow, rrhs) in self.residual.iter_mut() {
                    Self::eliminate_column(rrow, rrhs, col, &row, rhs, q);
                }
                self.pivot_of_col[col] = Some(self.pivots.len());
                self.pivots.push((col, row, rhs));
                true
            }
            None if row.iter().all(|&v| v == 0) => rhs == 0,
            None => {
                self.residual.push((row, rhs));
                true
            }
        }
    }
}

fn solve_prime_power(
    num_vars: usize,
    rows: Vec<Vec<u64>>,
    rhs: Vec<u64>,
    p: u64,
    k: u32,
    level: u32,
) -> Result<Vec<u64>, Inconsistency> {
    let fail = Inconsistency { prime: p, exponent: k + level, level };
    if k == 0 {
        return Ok(vec![0; num_vars]);
    }
    let q = p.pow(k);
    let mut ech = Echelon {
        q,
        p,
        pivots: Vec::new(),
        pivot_of_col: vec![None; num_vars],
        residual: Vec::new(),
    };
    for (row, c) in rows.into_iter().zip(rhs) {
        if !ech.insert(row, c) {
            return Err(fail);
        }
    }
    let free: Vec<usize> = (0..num_vars).filter(|&c| ech.pivot_of_col[c].is_none()).collect();
    let mut sub_rows = Vec::new();
    let mut sub_rhs = Vec::new();
    for (row, c) in &ech.residual {
        if c % p != 0 {
            return Err(fail);
        }
        sub_rows.push(free.iter().map(|&j| (row[j] / p) % (q / p)).collect::<Vec<_>>());
        sub_rhs.push((c / p) % (q / p));
    }
    let mut x = vec![0u64; num_vars];
    if !sub_rows.is_empty() {
        if k == 1 {
            // every residual row is zero mod p and its rhs was checked above
        } else {
            let sub = solve_prime_power(free.len(), sub_rows, sub_rhs, p, k - 1, level + 1)?;
            for (j, v) in free.iter().zip(sub) {
                x[*j] = v;
            }
        }
    }
    for (col, prow, prhs) in &ech.pivots {
        let mut v = *prhs;
        for &j in &free {
            if prow[j] != 0 {
                v = (v + (q - prow[j]) * x[j]) % q;
            }
        }
        x[*col] = v;
    }
    Ok(x)
}

pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut k = 0;
        while n % d == 0 {
            n /= d;
            k += 1;
        }
        if k > 0 {
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (g, x, _) = ext_gcd(a as i128, m as i128);
    (g == 1).then(|| x.rem_euclid(m as i128) as u64)
}

fn crt(a: u64, m: u64, b: u64, n: u64) -> u64 {
    if m == 1 {
        return b % n;
    }
    // x ≡ a (m), x ≡ b (n), gcd(m, n) = 1
    let inv = mod_inverse(m % n, n).expect("coprime moduli");
    let diff = (b as i128 - a as i128).rem_euclid(n as i128) as u64;
    let t = (diff as u128 * inv as u128 % n as u128) as u64;
    a + m * t
}

/// Rank of a dense matrix over `F_p`.
pub fn rank_mod_prime(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|v| v % p).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = mod_inverse(m[rank][c], p).unwrap();
        for v in m[rank].iter_mut() {
            *v = *v * inv % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                let pivot_row = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Basis of the kernel `{x : A x = 0}` over `F_p` for a dense matrix.
pub fn kernel_mod_prime(rows: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|v| v % p).collect()).collect();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = mod_inverse(m[rank][c], p).unwrap();
        for v in m[rank].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        pivot_cols.push(c);
        rank += 1;
    }
    let mut basis = Vec::new();
    for f in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![0u64; cols];
        v[f] = 1;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = (p - m[r][f]) % p;
        }
        basis.push(v);
    }
    basis
}
