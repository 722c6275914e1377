//! Sparse multivariate polynomials over ℚ, just enough for branch elimination
//! on quadratic systems.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::linalg::{fmt_q, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: Rational) {
        assert_eq!(exps.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn is_linear(&self) -> bool {
        self.degree() <= 1
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Variables occurring in some monomial of degree ≥ 2.
    pub fn nonlinear_vars(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .terms
            .keys()
            .filter(|e| e.iter().sum::<u32>() >= 2)
            .flat_map(|e| (0..self.nvars).filter(move |&v| e[v] > 0))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Sets the listed variables to zero.
    pub fn substitute_zero(&self, vars: &[usize]) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if vars.iter().all(|&v| e[v] == 0) {
                p.add_term(e.clone(), c.clone());
            }
        }
        p
    }

    /// Divides out the largest monomial in `vars` dividing every term.
    pub fn strip_monomial_content(&self, vars: &[usize]) -> Poly {
        let mut min = vec![0u32; self.nvars];
        for &v in vars {
            min[v] = self.terms.keys().map(|e| e[v]).min().unwrap_or(0);
        }
        let mut p = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let reduced: Vec<u32> = e.iter().zip(&min).map(|(a, b)| a - b).collect();
            p.add_term(reduced, c.clone());
        }
        p
    }

    /// `(coefficients, constant)` of a linear polynomial, as `a·t + c`.
    pub fn linear_parts(&self) -> Option<(Vec<Rational>, Rational)> {
        if !self.is_linear() {
            return None;
        }
        let mut coeffs = vec![Rational::zero(); self.nvars];
        let mut constant = Rational::zero();
        for (e, c) in &self.terms {
            match e.iter().position(|&k| k == 1) {
                Some(v) => coeffs[v] += c,
                None => constant += c,
            }
        }
        Some((coeffs, constant))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(v, &k)| {
                        if k == 1 {
                            format!("t{v}")
                        } else {
                            format!("t{v}^{k}")
                        }
                    })
                    .collect();
                if mono.is_empty() {
                    fmt_q(c)
                } else {
                    format!("{}*{}", fmt_q(c), mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Recovers the coefficients of polynomials of degree ≤ 2 in `r` variables from
/// values at `0`, `e_i`, `2e_i` and `e_i + e_j`. `f` returns one value per
/// output coordinate.
pub fn interpolate_quadratic<F>(r: usize, mut f: F) -> Vec<Poly>
where
    F: FnMut(&[Rational]) -> Vec<Rational>,
{
    let point = |idx: &[(usize, i64)]| {
        let mut p = vec![Rational::zero(); r];
        for &(i, k) in idx {
            p[i] += Rational::from_integer(k.into());
        }
        p
    };
    let f0 = f(&point(&[]));
    let n = f0.len();
    let mut polys: Vec<Poly> = f0.iter().map(|c| Poly::constant(r, c.clone())).collect();
    let mut f1 = Vec::with_capacity(r);
    for i in 0..r {
        let a = f(&point(&[(i, 1)]));
        let b = f(&point(&[(i, 2)]));
        for out in 0..n {
            let quad = (&b[out] - &a[out] * Rational::from_integer(2.into()) + &f0[out])
                / Rational::from_integer(2.into());
            let lin = &a[out] - &f0[out] - &quad;
            let mut e = vec![0; r];
            e[i] = 2;
            polys[out].add_term(e.clone(), quad);
            e[i] = 1;
            polys[out].add_term(e, lin);
        }
        f1.push(a);
    }
    for i in 0..r {
        for j in i + 1..r {
            let v = f(&point(&[(i, 1), (j, 1)]));
            for out in 0..n {
                let c = &v[out] - &f1[i][out] - &f1[j][out] + &f0[out];
                let mut e = vec![0; r];
                e[i] = 1;
                e[j] = 1;
                polys[out].add_term(e, c);
            }
        }
    }
    polys
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat};

    #[test]
    fn interpolation_recovers_quadratic() {
        // 3 + 2t0 − t0·t1 + (1/2)t1²
        let f = |t: &[Rational]| {
            vec![int(3) + int(2) * &t[0] - &t[0] * &t[1] + rat(1, 2) * &t[1] * &t[1]]
        };
        let p = interpolate_quadratic(2, f).remove(0);
        assert_eq!(p.degree(), 2);
        assert_eq!(p.eval(&[int(5), int(-2)]), f(&[int(5), int(-2)])[0]);
        assert_eq!(p.nonlinear_vars(), vec![0, 1]);
    }

    #[test]
    fn strip_and_linearize() {
        let mut p = Poly::zero(2);
        p.add_term(vec![1, 1], int(2));
        p.add_term(vec![1, 0], int(-4));
        // 2·t0·t1 − 4·t0 = t0·(2·t1 − 4)
        let q = p.strip_monomial_content(&[0]);
        let (coeffs, c) = q.linear_parts().unwrap();
        assert_eq!(coeffs, vec![int(0), int(2)]);
        assert_eq!(c, int(-4));
        assert!(p.substitute_zero(&[0]).is_zero());
    }
}
