//! Constructors for the named groups the toolkit works with.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primes::{multiplicative_order, pow_mod, prime_divisors};

use super::{GroupTable, Subgroup, MAX_ORDER};

pub fn cyclic(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidArgument("cyclic group of order 0".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    GroupTable::from_operation((0..n).collect(), |a, b| (a + b) % n)
}

/// Direct product of cyclic groups of the given orders.
pub fn abelian(factors: &[usize]) -> Result<GroupTable> {
    let mut g = cyclic(1)?;
    for &f in factors {
        g = g.direct_product(&cyclic(f)?)?;
    }
    Ok(g)
}

/// `Z_m ⋊ Z_n` with `B A B^-1 = A^r`, on pairs `(i, j)` with product
/// `(i, j)(i', j') = (i + r^j i', j + j')`. Needs `r^n = 1 mod m` and `r`
/// a unit; no coprimality between `m` and `n` is required.
pub fn metacyclic(m: u64, n: u64, r: u64) -> Result<GroupTable> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(
            "metacyclic orders must be positive".into(),
        ));
    }
    if (m * n) as usize > MAX_ORDER {
        return Err(Error::OrderTooLarge((m * n) as usize));
    }
    if num_integer::gcd(r % m.max(1), m) != 1 && m > 1 {
        return Err(Error::InvalidArgument(format!("{r} is not a unit mod {m}")));
    }
    if pow_mod(r, n, m) != 1 % m {
        return Err(Error::InvalidArgument(format!("{r}^{n} is not 1 mod {m}")));
    }
    let powers: Vec<u64> = (0..n).map(|j| pow_mod(r, j, m)).collect();
    let elements: Vec<(u64, u64)> = (0..n).flat_map(|j| (0..m).map(move |i| (i, j))).collect();
    GroupTable::from_operation(elements, |&(i, j), &(i2, j2)| {
        ((i + powers[j as usize] * i2) % m, (j + j2) % n)
    })
}

/// Upper unitriangular 3x3 matrices over `Z_3`, as triples `(x, y, z)`
/// for the entries above the diagonal (`x` at (1,2), `y` at (2,3), `z` at (1,3)).
pub fn u33() -> GroupTable {
    let mut elements = Vec::with_capacity(27);
    for z in 0..3u8 {
        for y in 0..3u8 {
            for x in 0..3u8 {
                elements.push((x, y, z));
            }
        }
    }
    GroupTable::from_operation(elements, |&(x, y, z), &(x2, y2, z2)| {
        ((x + x2) % 3, (y + y2) % 3, (z + z2 + x * y2) % 3)
    })
    .expect("unitriangular matrices form a group")
}

/// `Z_9 ⋊ Z_3` with `b a b^-1 = a^4`.
pub fn z9_semi_z3() -> GroupTable {
    metacyclic(9, 3, 4).expect("4^3 = 1 mod 9")
}

/// The symmetric group on three letters, as permutations of `[0, 1, 2]`.
pub fn s3() -> GroupTable {
    let perms: Vec<[u8; 3]> = vec![
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
    ];
    GroupTable::from_operation(perms, |a, b| {
        [a[b[0] as usize], a[b[1] as usize], a[b[2] as usize]]
    })
    .expect("permutations compose")
}

/// Parameters of `<A, B | A^m = B^n = 1, B A B^-1 = A^r>` with
/// `gcd((r-1) n, m) = 1` and `r^n = 1 mod m`.
///
/// The case `r = 1 mod m` is also accepted when `gcd(n, m) = 1`; the group
/// is then cyclic of order `m n` and `d = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BurnsideParams {
    pub m: u64,
    pub n: u64,
    pub r: u64,
}

impl BurnsideParams {
    pub fn new(m: u64, n: u64, r: u64) -> Result<Self> {
        let invalid = |condition: String| Error::InvalidBurnside { m, n, r, condition };
        if m == 0 || n == 0 {
            return Err(invalid("m and n must be positive".into()));
        }
        let rm = r % m;
        if m > 1 && rm == 1 {
            // A central: Z_m x Z_n, cyclic exactly when gcd(n, m) = 1
            let g = num_integer::gcd(n, m);
            if g != 1 {
                return Err(invalid(format!(
                    "r = 1 mod {m} needs gcd({n}, {m}) = 1, got {g}"
                )));
            }
        } else {
            let g = num_integer::gcd((rm + m - 1) % m * n, m);
            if g != 1 {
                return Err(invalid(format!("gcd(({r}-1)*{n}, {m}) = {g} != 1")));
            }
        }
        if pow_mod(r, n, m) != 1 % m {
            return Err(invalid(format!("{r}^{n} != 1 mod {m}")));
        }
        Ok(BurnsideParams { m, n, r })
    }

    pub fn order(&self) -> u64 {
        self.m * self.n
    }

    /// Order of `r` in the units mod `m`.
    pub fn class_d(&self) -> u64 {
        multiplicative_order(self.r, self.m).expect("validated parameters make r a unit")
    }

    /// Every valid parameter triple with `m n <= max_order`, `r` reduced mod `m`.
    pub fn all_up_to(max_order: u64) -> Vec<BurnsideParams> {
        let mut out = Vec::new();
        for m in 1..=max_order {
            for n in 1..=(max_order / m) {
                for r in 0..m.max(1) {
                    if let Ok(p) = BurnsideParams::new(m, n, r) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for BurnsideParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Burnside({},{},{})", self.m, self.n, self.r)
    }
}

/// A metacyclic group built from validated Burnside parameters. Element
/// `(i, j)` stands for `A^i B^j`.
#[derive(Debug, Clone)]
pub struct BurnsideGroup {
    pub params: BurnsideParams,
    pub table: GroupTable,
}

impl BurnsideGroup {
    fn index_of(&self, i: u64, j: u64) -> usize {
        (j * self.params.m + i) as usize
    }

    pub fn a(&self) -> usize {
        self.index_of(1 % self.params.m, 0)
    }

    pub fn b(&self) -> usize {
        self.index_of(0, 1 % self.params.n)
    }

    pub fn class_d(&self) -> u64 {
        self.params.class_d()
    }

    /// `<A, B^d>` where `d` is the order of `r` mod `m`.
    pub fn normal_cyclic_core(&self) -> Subgroup<'_> {
        let bd = self.table.pow(self.b(), self.class_d());
        Subgroup::generated(&self.table, &[self.a(), bd])
    }
}

pub fn build_burnside(params: BurnsideParams) -> Result<BurnsideGroup> {
    // re-validate: the fields are public
    let params = BurnsideParams::new(params.m, params.n, params.r)?;
    let table = metacyclic(params.m, params.n, params.r)?;
    Ok(BurnsideGroup { params, table })
}

/// All abelian groups of order `n` up to isomorphism, each as a list of
/// prime-power cyclic factors (one partition per prime).
pub fn abelian_groups_of_order(n: u64) -> Vec<Vec<u64>> {
    fn partitions(k: u32, max: u32) -> Vec<Vec<u32>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=k.min(max)).rev() {
            for mut rest in partitions(k - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let mut acc: Vec<Vec<u64>> = vec![vec![]];
    for p in prime_divisors(n) {
        let mut e = 0;
        let mut t = n;
        while t.is_multiple_of(p) {
            t /= p;
            e += 1;
        }
        let mut next = Vec::new();
        for base in &acc {
            for part in partitions(e, e) {
                let mut f = base.clone();
                f.extend(part.iter().map(|&k| p.pow(k)));
                next.push(f);
            }
        }
        acc = next;
    }
    acc
}

/// Named groups accepted by [`build_standard`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StandardGroup {
    Cyclic(u64),
    U33,
    Z9SemiZ3,
    S3,
    Burnside(BurnsideParams),
    Product(Vec<StandardGroup>),
}

impl StandardGroup {
    /// Parses names such as `Z12`, `Z_9xZ_3`, `U33`, `Z9semiZ3`, `S3`,
    /// `Burnside(7,3,2)` and `x`-separated direct products of these.
    pub fn parse(name: &str) -> Result<Self> {
        let unknown = || Error::UnknownGroup(name.to_string());
        let cleaned: String = name.chars().filter(|c| !c.is_whitespace()).collect();
        let cleaned = cleaned.replace('×', "x").replace('⋊', "semi");
        let mut factors = Vec::new();
        let mut depth = 0;
        let mut start = 0;
        for (i, c) in cleaned.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                'x' if depth == 0 => {
                    factors.push(&cleaned[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        factors.push(&cleaned[start..]);
        let parsed = factors
            .into_iter()
            .map(|f| Self::parse_factor(f).ok_or_else(unknown))
            .collect::<Result<Vec<_>>>()?;
        Ok(if parsed.len() == 1 {
            parsed.into_iter().next().unwrap()
        } else {
            StandardGroup::Product(parsed)
        })
    }

    fn parse_factor(f: &str) -> Option<StandardGroup> {
        match f {
            "U33" | "U(3,3)" => return Some(StandardGroup::U33),
            "Z9semiZ3" | "Z_9semiZ_3" => return Some(StandardGroup::Z9SemiZ3),
            "S3" | "S_3" => return Some(StandardGroup::S3),
            _ => {}
        }
        if let Some(args) = f
            .strip_prefix("Burnside(")
            .and_then(|s| s.strip_suffix(')'))
        {
            let v: Vec<u64> = args
                .split(',')
                .map(|t| t.parse().ok())
                .collect::<Option<_>>()?;
            let [m, n, r] = v[..] else { return None };
            return Some(StandardGroup::Burnside(BurnsideParams { m, n, r }));
        }
        let digits = f.strip_prefix("Z_").or_else(|| f.strip_prefix('Z'))?;
        let n: u64 = digits.parse().ok()?;
        (n >= 1).then_some(StandardGroup::Cyclic(n))
    }

    pub fn build(&self) -> Result<GroupTable> {
        match self {
            StandardGroup::Cyclic(n) => cyclic(*n as usize),
            StandardGroup::U33 => Ok(u33()),
            StandardGroup::Z9SemiZ3 => Ok(z9_semi_z3()),
            StandardGroup::S3 => Ok(s3()),
            StandardGroup::Burnside(p) => Ok(build_burnside(*p)?.table),
            StandardGroup::Product(parts) => {
                let mut g = cyclic(1)?;
                for part in parts {
                    g = g.direct_product(&part.build()?)?;
                }
                Ok(g)
            }
        }
    }
}

pub fn build_standard(name: &str) -> Result<GroupTable> {
    StandardGroup::parse(name)?.build()
}
