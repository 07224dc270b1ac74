//! Univariate polynomials over a prime field, with Berlekamp factorization.
//! Used by the meataxe to find irreducible factors of minimal polynomials.

use super::field::{FpElt, Scalar};
use super::mat::{FMat, Mat};
use crate::linalg::gauss;

/// Coefficients low-to-high, normalized (no trailing zeros).
#[derive(Debug, Clone, PartialEq)]
pub struct FpPoly {
    pub ell: u64,
    pub coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(ell: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= ell;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { ell, coeffs }
    }

    pub fn zero(ell: u64) -> Self {
        FpPoly { ell, coeffs: vec![] }
    }

    pub fn one(ell: u64) -> Self {
        FpPoly { ell, coeffs: vec![1] }
    }

    pub fn x(ell: u64) -> Self {
        FpPoly { ell, coeffs: vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![0u64; n];
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            c[i] = (a + b) % self.ell;
        }
        FpPoly::new(self.ell, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![0u64; n];
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            c[i] = (a + self.ell - b) % self.ell;
        }
        FpPoly::new(self.ell, c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero(self.ell);
        }
        let mut c = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) % self.ell;
            }
        }
        FpPoly::new(self.ell, c)
    }

    pub fn scale(&self, k: u64) -> Self {
        FpPoly::new(self.ell, self.coeffs.iter().map(|&c| c * k % self.ell).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = FpElt { value: self.lead(), ell: self.ell }.inv().unwrap().value;
        self.scale(inv)
    }

    /// Euclidean division: (quotient, remainder).
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero());
        let ell = self.ell;
        let dd = divisor.degree();
        if self.is_zero() || self.degree() < dd {
            return (FpPoly::zero(ell), self.clone());
        }
        let dlead_inv = FpElt { value: divisor.lead(), ell }.inv().unwrap().value;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.degree() - dd + 1];
        for i in (dd..rem.len()).rev() {
            let c = rem[i] % ell;
            if c == 0 {
                continue;
            }
            let q = c * dlead_inv % ell;
            quot[i - dd] = q;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                let sub = q * dc % ell;
                rem[i - dd + j] = (rem[i - dd + j] + ell - sub) % ell;
            }
        }
        (FpPoly::new(ell, quot), FpPoly::new(ell, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divrem(divisor).1
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// x^e mod self, by square and multiply.
    pub fn powmod_x(&self, e: u64) -> Self {
        let mut acc = FpPoly::one(self.ell);
        let mut base = FpPoly::x(self.ell).rem(self);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(self);
            }
            base = base.mul(&base).rem(self);
            e >>= 1;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return FpPoly::zero(self.ell);
        }
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| (i as u64 % self.ell) * a % self.ell)
            .collect();
        FpPoly::new(self.ell, c)
    }

    /// Evaluate a polynomial at a square matrix.
    pub fn eval_matrix(&self, m: &FMat) -> FMat {
        let model = m.model();
        let mut acc = FMat::zero(m.rows, m.cols, &model);
        // Horner from the top coefficient.
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..m.rows {
                let cur = acc.at(i, i).clone();
                *acc.at_mut(i, i) = cur.add(&FpElt { value: c, ell: self.ell });
            }
        }
        acc
    }
}

/// Full factorization into monic irreducibles with multiplicities
/// (Berlekamp; deterministic, fine for the small fields used here).
pub fn factor(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    assert!(!f.is_zero());
    let mut out: Vec<(FpPoly, usize)> = Vec::new();
    let mut stack = vec![f.monic()];
    while let Some(g) = stack.pop() {
        if g.degree() == 0 {
            continue;
        }
        match berlekamp_split(&g) {
            None => {
                // g is a power of an irreducible or irreducible itself;
                // first strip repeated factors via gcd with derivative.
                let d = g.derivative();
                if d.is_zero() {
                    // g(x) = h(x^ell); take ell-th root (coefficients are
                    // already ell-th powers over F_ell).
                    let ell = g.ell as usize;
                    let mut c = Vec::new();
                    let mut i = 0;
                    while i < g.coeffs.len() {
                        c.push(g.coeffs[i]);
                        i += ell;
                    }
                    let root = FpPoly::new(g.ell, c);
                    let sub = factor(&root);
                    for (p, m) in sub {
                        push_factor(&mut out, p, m * ell);
                    }
                    continue;
                }
                let sq = g.gcd(&d);
                if sq.degree() > 0 {
                    let (reduced, rem) = g.divrem(&sq);
                    debug_assert!(rem.is_zero());
                    stack.push(sq);
                    stack.push(reduced);
                } else {
                    push_factor(&mut out, g.monic(), 1);
                }
            }
            Some((a, b)) => {
                stack.push(a);
                stack.push(b);
            }
        }
    }
    out.sort_by(|x, y| (x.0.degree(), &x.0.coeffs).cmp(&(y.0.degree(), &y.0.coeffs)));
    out
}

fn push_factor(out: &mut Vec<(FpPoly, usize)>, p: FpPoly, mult: usize) {
    for (q, m) in out.iter_mut() {
        if *q == p {
            *m += mult;
            return;
        }
    }
    out.push((p, mult));
}

/// One Berlekamp splitting step: returns two proper factors, or None when f
/// is irreducible or a repeated power (Berlekamp nullity 1 after squarefree
/// reduction is handled by the caller).
fn berlekamp_split(f: &FpPoly) -> Option<(FpPoly, FpPoly)> {
    let n = f.degree();
    if n <= 1 {
        return None;
    }
    let ell = f.ell;
    if f.derivative().is_zero() {
        return None;
    }
    // Matrix of Frobenius minus identity acting on F_ell[x]/(f).
    let model = FpElt { value: 0, ell };
    let mut q = Mat::zero(n, n, &model);
    for j in 0..n {
        // x^(ell*j) mod f
        let mut e = FpPoly::one(ell);
        let xl = f.powmod_x(ell);
        for _ in 0..j {
            e = e.mul(&xl).rem(f);
        }
        for i in 0..n {
            let v = e.coeffs.get(i).copied().unwrap_or(0);
            *q.at_mut(i, j) = FpElt { value: v, ell };
        }
        let cur = q.at(j, j).clone();
        *q.at_mut(j, j) = cur.sub(&FpElt { value: 1, ell });
    }
    let kern = gauss::kernel(&q);
    // Kernel always contains the constants; a second vector splits f.
    for v in &kern {
        let poly = FpPoly::new(ell, v.iter().map(|e| e.value).collect());
        if poly.degree() == 0 {
            continue;
        }
        for c in 0..ell {
            let shifted = poly.sub(&FpPoly::new(ell, vec![c]));
            let g = f.gcd(&shifted);
            if g.degree() > 0 && g.degree() < n {
                let (h, rem) = f.divrem(&g);
                debug_assert!(rem.is_zero());
                return Some((g, h));
            }
        }
    }
    None
}

/// Minimal polynomial of a square matrix over F_ell via Krylov dependence.
pub fn minimal_polynomial(m: &FMat) -> FpPoly {
    let n = m.rows;
    let ell = m.ell();
    let model = FpElt { value: 0, ell };
    // Stack I, m, m^2, ... as vectors until linearly dependent.
    let mut powers: Vec<FMat> = vec![FMat::identity(n, &model)];
    loop {
        let next = powers.last().unwrap().mul(m);
        let k = powers.len();
        // Solve sum_i c_i m^i = next over the flattened vectors.
        let rows: Vec<Vec<FpElt>> = powers.iter().map(|p| p.data.clone()).collect();
        if let Some(coords) = gauss::coordinates_in_basis(&rows, &next.data) {
            let mut coeffs: Vec<u64> = coords.iter().map(|c| (ell - c.value) % ell).collect();
            coeffs.push(1);
            let _ = k;
            return FpPoly::new(ell, coeffs);
        }
        powers.push(next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(ell: u64, c: &[u64]) -> FpPoly {
        FpPoly::new(ell, c.to_vec())
    }

    #[test]
    fn divrem_roundtrip() {
        let f = p(5, &[1, 0, 3, 2]); // 2x^3+3x^2+1
        let g = p(5, &[2, 1]); // x+2
        let (q, r) = f.divrem(&g);
        assert_eq!(q.mul(&g).add(&r), f);
    }

    #[test]
    fn factor_x2_plus_1_mod_5() {
        // x^2+1 = (x+2)(x+3) mod 5
        let f = p(5, &[1, 0, 1]);
        let fs = factor(&f);
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(q, m)| q.degree() == 1 && *m == 1));
    }

    #[test]
    fn factor_irreducible_mod_2() {
        // x^2+x+1 irreducible mod 2
        let f = p(2, &[1, 1, 1]);
        let fs = factor(&f);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].1, 1);
        assert_eq!(fs[0].0, f);
    }

    #[test]
    fn factor_with_multiplicity() {
        // (x+1)^2 (x^2+x+1) mod 2 = x^4 + x^3 + x + 1
        let f = p(2, &[1, 1, 0, 1, 1]);
        let fs = factor(&f);
        let total: usize = fs.iter().map(|(q, m)| q.degree() * m).sum();
        assert_eq!(total, 4);
        assert!(fs.contains(&(p(2, &[1, 1]), 2)));
        assert!(fs.contains(&(p(2, &[1, 1, 1]), 1)));
    }

    #[test]
    fn minpoly_of_companion() {
        // companion matrix of x^2+1 mod 3
        let m = FMat::from_u64_rows(3, &[vec![0, 2], vec![1, 0]]);
        let mp = minimal_polynomial(&m);
        assert_eq!(mp, p(3, &[1, 0, 1]));
    }

    #[test]
    fn eval_matrix_kills_minpoly() {
        let m = FMat::from_u64_rows(3, &[vec![1, 1], vec![0, 1]]);
        let mp = minimal_polynomial(&m);
        assert!(mp.eval_matrix(&m).is_zero_matrix());
    }
}
