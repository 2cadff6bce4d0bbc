//! `H^*(B(Z_p x Z_p); Z_p) = Z_p[t1, t2] (x) Λ(s1, s2)` with `|s_i| = 1`,
//! `|t_i| = 2`, and its monomial bases.

use std::collections::HashMap;
use std::fmt;

use super::linalg::Fp;

/// `s1^e1 s2^e2 t1^a t2^b` with `e_i` in `{0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub s1: bool,
    pub s2: bool,
    pub t1: u8,
    pub t2: u8,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        s1: false,
        s2: false,
        t1: 0,
        t2: 0,
    };

    pub fn degree(self) -> usize {
        self.s1 as usize + self.s2 as usize + 2 * (self.t1 as usize + self.t2 as usize)
    }

    /// Graded-commutative product; `None` when an exterior generator
    /// repeats. The flag is set when the product picks up a sign.
    pub fn mul(self, other: Monomial) -> Option<(bool, Monomial)> {
        if (self.s1 && other.s1) || (self.s2 && other.s2) {
            return None;
        }
        // other's s1 moves past self's s2
        let negative = self.s2 && other.s1;
        Some((
            negative,
            Monomial {
                s1: self.s1 || other.s1,
                s2: self.s2 || other.s2,
                t1: self.t1 + other.t1,
                t2: self.t2 + other.t2,
            },
        ))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.s1 {
            parts.push("s1".to_string());
        }
        if self.s2 {
            parts.push("s2".to_string());
        }
        for (name, e) in [("t1", self.t1), ("t2", self.t2)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("·"))
        }
    }
}

/// Monomials of degree `k`, ordered by exterior part (none, `s1`, `s2`,
/// `s1 s2`) and then by descending power of `t1`.
pub fn monomial_basis(k: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for (s1, s2) in [(false, false), (true, false), (false, true), (true, true)] {
        let ext = s1 as usize + s2 as usize;
        if ext > k || !(k - ext).is_multiple_of(2) {
            continue;
        }
        let q = (k - ext) / 2;
        for a in (0..=q).rev() {
            out.push(Monomial {
                s1,
                s2,
                t1: a as u8,
                t2: (q - a) as u8,
            });
        }
    }
    out
}

/// Monomial bases up to a fixed degree.
#[derive(Debug, Clone)]
pub struct BaseAlgebra {
    bases: Vec<Vec<Monomial>>,
    index: HashMap<Monomial, usize>,
}

impl BaseAlgebra {
    pub fn new(max_deg: usize) -> Self {
        let bases: Vec<Vec<Monomial>> = (0..=max_deg).map(monomial_basis).collect();
        let index = bases
            .iter()
            .flat_map(|b| b.iter().enumerate().map(|(i, &m)| (m, i)))
            .collect();
        BaseAlgebra { bases, index }
    }

    pub fn basis(&self, k: usize) -> &[Monomial] {
        &self.bases[k]
    }

    pub fn dim(&self, k: usize) -> usize {
        self.bases.get(k).map_or(0, Vec::len)
    }

    /// `±b·v` for a monomial `b` and a vector `v` in degree `m`.
    pub fn mul_vec(&self, f: &Fp, b: Monomial, v: &[u8], m: usize, negate: bool) -> Vec<u8> {
        let target = m + b.degree();
        let mut out = vec![0u8; self.dim(target)];
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if let Some((neg, prod)) = b.mul(self.bases[m][i]) {
                let j = self.index[&prod];
                let c = if neg != negate { f.neg(c) } else { c };
                out[j] = f.add(out[j], c);
            }
        }
        out
    }
}

impl BaseAlgebra {
    /// `v·w` for `v` in degree `i` and `w` in degree `j`.
    pub fn mul(&self, f: &Fp, v: &[u8], i: usize, w: &[u8], j: usize) -> Vec<u8> {
        let mut out = vec![0u8; self.dim(i + j)];
        for (k, &c) in v.iter().enumerate() {
            if c != 0 {
                f.axpy(&mut out, c, &self.mul_vec(f, self.bases[i][k], w, j, false));
            }
        }
        out
    }

    /// Matrix of the ring automorphism induced by `g` in `GL_2(F_p)` in
    /// degree `m`: `s_i -> sum_j g_ij s_j` and likewise for `t_i`. Entry
    /// `[k]` is the image of the `k`-th basis monomial.
    pub fn substitution(&self, f: &Fp, g: [[u8; 2]; 2], m: usize) -> Vec<Vec<u8>> {
        let s = [vec![g[0][0], g[0][1]], vec![g[1][0], g[1][1]]];
        let t = [vec![g[0][0], g[0][1], 0], vec![g[1][0], g[1][1], 0]];
        self.bases[m]
            .iter()
            .map(|mono| {
                let mut acc = vec![1u8];
                let mut deg = 0;
                let times = |acc: &mut Vec<u8>, deg: &mut usize, v: &[u8], d: usize| {
                    *acc = self.mul(f, acc, *deg, v, d);
                    *deg += d;
                };
                if mono.s1 {
                    times(&mut acc, &mut deg, &s[0], 1);
                }
                if mono.s2 {
                    times(&mut acc, &mut deg, &s[1], 1);
                }
                for _ in 0..mono.t1 {
                    times(&mut acc, &mut deg, &t[0], 2);
                }
                for _ in 0..mono.t2 {
                    times(&mut acc, &mut deg, &t[1], 2);
                }
                acc
            })
            .collect()
    }
}
