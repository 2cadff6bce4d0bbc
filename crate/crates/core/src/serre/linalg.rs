//! Dense linear algebra over a small prime field.

/// Arithmetic in `Z/p` for a prime `p < 256`.
#[derive(Debug, Clone)]
pub struct Fp {
    p: u16,
    inv: Vec<u8>,
}

impl Fp {
    pub fn new(p: u8) -> Self {
        let p16 = p as u16;
        let mut inv = vec![0u8; p as usize];
        for a in 1..p16 {
            inv[a as usize] = (1..p16).find(|b| a * b % p16 == 1).expect("p is prime") as u8;
        }
        Fp { p: p16, inv }
    }

    pub fn p(&self) -> u8 {
        self.p as u8
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.p) as u8
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        ((a as u16 + self.p - b as u16) % self.p) as u8
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        (a as u16 * b as u16 % self.p) as u8
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.sub(0, a)
    }

    pub fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0);
        self.inv[a as usize]
    }

    /// `x += c * y`
    pub fn axpy(&self, x: &mut [u8], c: u8, y: &[u8]) {
        if c == 0 {
            return;
        }
        for (a, &b) in x.iter_mut().zip(y) {
            *a = ((*a as u16 + c as u16 * b as u16) % self.p) as u8;
        }
    }

    pub fn scale(&self, x: &mut [u8], c: u8) {
        for a in x.iter_mut() {
            *a = self.mul(*a, c);
        }
    }
}

pub fn is_zero(v: &[u8]) -> bool {
    v.iter().all(|&a| a == 0)
}

fn pivot(v: &[u8]) -> Option<usize> {
    v.iter().position(|&a| a != 0)
}

/// A subspace of `F_p^n` stored as its reduced row echelon basis, so equal
/// subspaces have equal representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<u8>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: (0..ambient)
                .map(|i| {
                    let mut v = vec![0; ambient];
                    v[i] = 1;
                    v
                })
                .collect(),
        }
    }

    pub fn span<'a>(f: &Fp, ambient: usize, vecs: impl IntoIterator<Item = &'a Vec<u8>>) -> Self {
        let mut s = Subspace::zero(ambient);
        for v in vecs {
            s.insert(f, v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Residue of `v` after clearing every pivot column of the basis.
    pub fn reduce(&self, f: &Fp, v: &[u8]) -> Vec<u8> {
        let mut out = v.to_vec();
        for row in &self.rows {
            let pc = pivot(row).expect("basis rows are nonzero");
            let c = out[pc];
            if c != 0 {
                f.axpy(&mut out, f.neg(c), row);
            }
        }
        out
    }

    pub fn contains(&self, f: &Fp, v: &[u8]) -> bool {
        is_zero(&self.reduce(f, v))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, f: &Fp, v: &[u8]) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        let mut r = self.reduce(f, v);
        let Some(pc) = pivot(&r) else {
            return false;
        };
        let inv = f.inv(r[pc]);
        f.scale(&mut r, inv);
        for row in &mut self.rows {
            let c = row[pc];
            if c != 0 {
                f.axpy(row, f.neg(c), &r);
            }
        }
        let at = self
            .rows
            .iter()
            .position(|row| pivot(row).unwrap() > pc)
            .unwrap_or(self.rows.len());
        self.rows.insert(at, r);
        true
    }

    pub fn sum(&self, f: &Fp, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(f, v);
        }
        s
    }

    pub fn is_subspace_of(&self, f: &Fp, other: &Subspace) -> bool {
        self.rows.iter().all(|v| other.contains(f, v))
    }
}

/// Incremental elimination that remembers how each reduced vector was
/// combined from the inputs.
struct TrackedEchelon {
    done: Vec<(usize, Vec<u8>, Vec<u8>)>,
}

impl TrackedEchelon {
    fn new() -> Self {
        TrackedEchelon { done: Vec::new() }
    }

    /// Reduces `(v, comb)`; if `v` becomes zero returns the combination,
    /// otherwise stores it as a new pivot row.
    fn push(&mut self, f: &Fp, mut v: Vec<u8>, mut comb: Vec<u8>) -> Option<Vec<u8>> {
        for (pc, dv, dc) in &self.done {
            let c = v[*pc];
            if c != 0 {
                let nc = f.neg(c);
                f.axpy(&mut v, nc, dv);
                f.axpy(&mut comb, nc, dc);
            }
        }
        match pivot(&v) {
            None => Some(comb),
            Some(pc) => {
                let inv = f.inv(v[pc]);
                f.scale(&mut v, inv);
                f.scale(&mut comb, inv);
                self.done.push((pc, v, comb));
                None
            }
        }
    }
}

fn unit(k: usize, i: usize) -> Vec<u8> {
    let mut v = vec![0u8; k];
    v[i] = 1;
    v
}

/// Basis of `{c : sum_i c_i vecs[i] = 0}`.
pub fn relations(f: &Fp, vecs: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let k = vecs.len();
    let mut ech = TrackedEchelon::new();
    vecs.iter()
        .enumerate()
        .filter_map(|(i, v)| ech.push(f, v.clone(), unit(k, i)))
        .collect()
}

/// Coefficients expressing `target` in terms of `vecs`, if it lies in their span.
pub fn express(f: &Fp, vecs: &[Vec<u8>], target: &[u8]) -> Option<Vec<u8>> {
    let k = vecs.len();
    let mut ech = TrackedEchelon::new();
    for (i, v) in vecs.iter().enumerate() {
        ech.push(f, v.clone(), unit(k, i));
    }
    let mut t = target.to_vec();
    let mut coeffs = vec![0u8; k];
    for (pc, dv, dc) in &ech.done {
        let c = t[*pc];
        if c != 0 {
            f.axpy(&mut t, f.neg(c), dv);
            f.axpy(&mut coeffs, c, dc);
        }
    }
    is_zero(&t).then_some(coeffs)
}

/// Basis of the null space `{x : A x = 0}` for `A` given by rows over
/// `ncols` unknowns. The basis vector for free column `j` has a 1 there.
pub fn null_space(f: &Fp, rows: &[Vec<u8>], ncols: usize) -> Vec<Vec<u8>> {
    let echelon = Subspace::span(f, ncols, rows);
    let pivots: Vec<usize> = echelon.basis().iter().map(|r| pivot(r).unwrap()).collect();
    (0..ncols)
        .filter(|j| !pivots.contains(j))
        .map(|j| {
            let mut v = unit(ncols, j);
            for (row, &pc) in echelon.basis().iter().zip(&pivots) {
                v[pc] = f.neg(row[j]);
            }
            v
        })
        .collect()
}

/// Solves `A x = b` with the free unknowns set to zero.
pub fn solve(f: &Fp, rows: &[Vec<u8>], rhs: &[u8], ncols: usize) -> Option<Vec<u8>> {
    let augmented: Vec<Vec<u8>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, &b)| {
            let mut v = r.clone();
            v.push(b);
            v
        })
        .collect();
    let echelon = Subspace::span(f, ncols + 1, &augmented);
    let mut x = vec![0u8; ncols];
    for row in echelon.basis() {
        let pc = pivot(row).unwrap();
        if pc == ncols {
            return None;
        }
        x[pc] = row[ncols];
    }
    Some(x)
}

/// Splits a linear map given by the images of domain vectors: returns a
/// basis of the kernel (as vectors of the domain's ambient space) and a
/// basis of the image, with images compared modulo `modulo`.
pub fn kernel_and_image(
    f: &Fp,
    domain: &[Vec<u8>],
    images: &[Vec<u8>],
    modulo: &Subspace,
) -> (Vec<Vec<u8>>, Vec<Vec<u8>>) {
    let mut ech = TrackedEchelon::new();
    let kernel = domain
        .iter()
        .zip(images)
        .filter_map(|(src, img)| ech.push(f, modulo.reduce(f, img), src.clone()))
        .collect();
    (kernel, ech.done.into_iter().map(|(_, i, _)| i).collect())
}

/// Number of subspaces of `F_p^n`.
#[cfg(test)]
pub fn subspace_count(p: u64, n: usize) -> u128 {
    (0..=n).map(|k| gaussian_binomial(p as u128, n, k)).sum()
}

#[cfg(test)]
fn gaussian_binomial(q: u128, n: usize, k: usize) -> u128 {
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// Every subspace of `F_p^n`, listed by enumerating reduced row echelon
/// forms.
pub fn all_subspaces(f: &Fp, n: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    for k in 0..=n {
        let mut pivots: Vec<usize> = (0..k).collect();
        loop {
            // free entries: column j > pivot i that is not itself a pivot
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|i| {
                    let pv = &pivots;
                    ((pv[i] + 1)..n)
                        .filter(move |j| !pv.contains(j))
                        .map(move |j| (i, j))
                })
                .collect();
            let mut vals = vec![0u8; free.len()];
            loop {
                let mut rows = vec![vec![0u8; n]; k];
                for (i, &pc) in pivots.iter().enumerate() {
                    rows[i][pc] = 1;
                }
                for (&(i, j), &v) in free.iter().zip(&vals) {
                    rows[i][j] = v;
                }
                out.push(Subspace { ambient: n, rows });
                let mut idx = 0;
                while idx < vals.len() {
                    vals[idx] += 1;
                    if vals[idx] < f.p() {
                        break;
                    }
                    vals[idx] = 0;
                    idx += 1;
                }
                if idx == vals.len() {
                    break;
                }
            }
            // next pivot combination
            let mut i = k;
            while i > 0 && pivots[i - 1] == n - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            pivots[i - 1] += 1;
            for j in i..k {
                pivots[j] = pivots[j - 1] + 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_inverses() {
        for p in [2u8, 3, 5, 7] {
            let f = Fp::new(p);
            for a in 1..p {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
    }

    #[test]
    fn rref_is_canonical() {
        let f = Fp::new(5);
        let a = Subspace::span(&f, 3, &[vec![1, 2, 3], vec![0, 1, 4]]);
        let c = Subspace::span(&f, 3, &[vec![0, 1, 4], vec![1, 2, 3]]);
        let d = Subspace::span(&f, 3, &[vec![1, 3, 2], vec![2, 0, 1]]);
        assert_eq!(a.dim(), 2);
        assert_eq!(a, c);
        assert!(a.is_subspace_of(&f, &c));
        assert_eq!(a == d, a.is_subspace_of(&f, &d) && d.is_subspace_of(&f, &a));
    }

    #[test]
    fn null_space_and_solve() {
        let f = Fp::new(3);
        let rows = vec![vec![1, 1, 0], vec![0, 1, 1]];
        let ns = null_space(&f, &rows, 3);
        assert_eq!(ns.len(), 1);
        for r in &rows {
            let dot: u32 = r
                .iter()
                .zip(&ns[0])
                .map(|(a, b)| (*a as u32) * (*b as u32))
                .sum();
            assert_eq!(dot % 3, 0);
        }
        let x = solve(&f, &rows, &[1, 2], 3).unwrap();
        assert_eq!((x[0] + x[1]) % 3, 1);
        assert_eq!((x[1] + x[2]) % 3, 2);
        assert!(solve(&f, &[vec![1, 0], vec![1, 0]], &[1, 2], 2).is_none());
    }

    #[test]
    fn subspace_enumeration() {
        for (p, n) in [(2u8, 3usize), (3, 3), (5, 2), (3, 4)] {
            let f = Fp::new(p);
            let all = all_subspaces(&f, n);
            assert_eq!(all.len() as u128, subspace_count(p as u64, n));
            let distinct: std::collections::HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            for s in &all {
                assert_eq!(*s, Subspace::span(&f, n, s.basis()));
            }
        }
    }

    #[test]
    fn kernel_image_split() {
        let f = Fp::new(3);
        let domain = vec![vec![1, 0], vec![0, 1]];
        let images = vec![vec![1, 1], vec![2, 2]];
        let (k, i) = kernel_and_image(&f, &domain, &images, &Subspace::zero(2));
        assert_eq!((k.len(), i.len()), (1, 1));
        let line = Subspace::span(&f, 2, &[vec![1, 1]]);
        let (k, i) = kernel_and_image(&f, &domain, &images, &line);
        assert_eq!((k.len(), i.len()), (2, 0));
        assert_eq!(relations(&f, &images).len(), 1);
        assert!(express(&f, &images, &[2, 2]).is_some());
        assert!(express(&f, &images, &[1, 0]).is_none());
    }
}
