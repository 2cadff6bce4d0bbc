use std::collections::HashMap;
use std::fmt::Write as _;
use std::hash::Hash;

use crate::error::{Error, Result};

use super::MAX_ORDER;

/// A finite group given by its full multiplication table. Element `0` is the
/// identity. Tables are validated (Latin square, identity row and column,
/// associativity) when they are built and are immutable afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    element_order: Vec<u32>,
}

impl GroupTable {
    /// Builds a table from rows of element indices.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::MalformedTable(format!(
                        "entry {x} out of range in row {i}"
                    )));
                }
                table.push(x as u16);
            }
        }
        Self::from_flat(n, table)
    }

    /// Builds the table of `elements` under `op`. The first element must be
    /// the identity and the set must be closed under `op`.
    pub fn from_operation<T, F>(elements: Vec<T>, op: F) -> Result<Self>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let n = elements.len();
        if n == 0 {
            return Err(Error::MalformedTable("no elements".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let index: HashMap<T, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        if index.len() != n {
            return Err(Error::MalformedTable("repeated element".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                let c = op(a, b);
                let &k = index.get(&c).ok_or_else(|| {
                    Error::MalformedTable("set not closed under the operation".into())
                })?;
                table.push(k as u16);
            }
        }
        Self::from_flat(n, table)
    }

    fn from_flat(n: usize, table: Vec<u16>) -> Result<Self> {
        let mut g = GroupTable {
            order: n,
            table,
            inverse: Vec::new(),
            element_order: Vec::new(),
        };
        g.check_identity()?;
        g.check_latin()?;
        g.check_associative()?;
        g.inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| g.mul(a, b) == 0)
                    .expect("latin rows contain the identity") as u16
            })
            .collect();
        g.element_order = (0..n)
            .map(|a| {
                let mut x = a;
                let mut k = 1;
                while x != 0 {
                    x = g.mul(x, a);
                    k += 1;
                }
                k
            })
            .collect();
        Ok(g)
    }

    fn check_identity(&self) -> Result<()> {
        for a in 0..self.order {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::MalformedTable(format!(
                    "element 0 is not the identity (fails at {a})"
                )));
            }
        }
        Ok(())
    }

    fn check_latin(&self) -> Result<()> {
        let n = self.order;
        let mut seen = vec![0usize; n];
        for (stamp, a) in (1..).zip(0..n) {
            for b in 0..n {
                let c = self.mul(a, b);
                if seen[c] == stamp {
                    return Err(Error::MalformedTable(format!("row {a} repeats {c}")));
                }
                seen[c] = stamp;
            }
        }
        seen.iter_mut().for_each(|s| *s = 0);
        for (stamp, b) in (1..).zip(0..n) {
            for a in 0..n {
                let c = self.mul(a, b);
                if seen[c] == stamp {
                    return Err(Error::MalformedTable(format!("column {b} repeats {c}")));
                }
                seen[c] = stamp;
            }
        }
        Ok(())
    }

    /// Light's test: the elements `a` with `(x a) y = x (a y)` for all `x, y`
    /// form a submagma, so checking a generating set suffices.
    fn check_associative(&self) -> Result<()> {
        for a in self.magma_generators() {
            for x in 0..self.order {
                let xa = self.mul(x, a);
                for y in 0..self.order {
                    if self.mul(xa, y) != self.mul(x, self.mul(a, y)) {
                        return Err(Error::MalformedTable(format!(
                            "not associative: ({x}*{a})*{y} != {x}*({a}*{y})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// A set of elements whose left-associated words reach every element.
    fn magma_generators(&self) -> Vec<usize> {
        let n = self.order;
        let mut gens = Vec::new();
        let mut reached = vec![false; n];
        reached[0] = true;
        let mut count = 1;
        while count < n {
            let g = (0..n).find(|&i| !reached[i]).unwrap();
            gens.push(g);
            reached.iter_mut().for_each(|r| *r = false);
            reached[0] = true;
            let mut stack = vec![0];
            count = 1;
            while let Some(x) = stack.pop() {
                for &s in &gens {
                    let y = self.mul(x, s);
                    if !reached[y] {
                        reached[y] = true;
                        count += 1;
                        stack.push(y);
                    }
                }
            }
        }
        gens
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    #[inline]
    pub fn element_order(&self, a: usize) -> u64 {
        u64::from(self.element_order[a])
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let k = k % self.element_order(a);
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn max_element_order(&self) -> u64 {
        self.elements()
            .map(|a| self.element_order(a))
            .max()
            .unwrap_or(1)
    }

    pub fn exponent(&self) -> u64 {
        self.elements()
            .map(|a| self.element_order(a))
            .fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.commute(a, b)))
    }

    pub fn center_size(&self) -> usize {
        self.elements()
            .filter(|&a| self.elements().all(|b| self.commute(a, b)))
            .count()
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.elements().map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    pub fn direct_product(&self, other: &GroupTable) -> Result<GroupTable> {
        let (n1, n2) = (self.order, other.order);
        if n1 * n2 > MAX_ORDER {
            return Err(Error::OrderTooLarge(n1 * n2));
        }
        let elements: Vec<(usize, usize)> =
            (0..n1).flat_map(|a| (0..n2).map(move |b| (a, b))).collect();
        GroupTable::from_operation(elements, |&(a, b), &(c, d)| {
            (self.mul(a, c), other.mul(b, d))
        })
    }

    /// Serializes to the text format: `order n` followed by `n` rows.
    pub fn to_text(&self) -> String {
        let mut s = format!("order {}\n", self.order);
        for a in 0..self.order {
            let row: Vec<String> = (0..self.order)
                .map(|b| self.mul(a, b).to_string())
                .collect();
            let _ = writeln!(s, "{}", row.join(" "));
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::MalformedTable("missing header".into()))?;
        let n: usize = header
            .strip_prefix("order")
            .map(str::trim)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::MalformedTable(format!("bad header `{header}`")))?;
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let rows: Vec<Vec<usize>> = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|t| {
                        t.parse()
                            .map_err(|_| Error::MalformedTable(format!("bad entry `{t}`")))
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<_>>()?;
        if rows.len() != n {
            return Err(Error::MalformedTable(format!(
                "header says {n} rows, found {}",
                rows.len()
            )));
        }
        GroupTable::from_rows(&rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> GroupTable {
        GroupTable::from_operation((0..n).collect(), |a, b| (a + b) % n).unwrap()
    }

    #[test]
    fn cyclic_basics() {
        let g = cyclic(12);
        assert_eq!(g.order(), 12);
        assert_eq!(g.element_order(1), 12);
        assert_eq!(g.element_order(4), 3);
        assert_eq!(g.inv(5), 7);
        assert!(g.is_abelian());
        assert_eq!(g.exponent(), 12);
    }

    #[test]
    fn rejects_non_latin() {
        let rows = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(
            GroupTable::from_rows(&rows),
            Err(Error::MalformedTable(_))
        ));
    }

    #[test]
    fn rejects_non_associative_loop() {
        // a Latin square with identity that is not a group (smallest loop of order 5)
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = GroupTable::from_rows(&rows).unwrap_err();
        assert!(err.to_string().contains("associative"), "{err}");
    }

    #[test]
    fn rejects_wrong_identity() {
        let rows = vec![vec![1, 0], vec![0, 1]];
        assert!(GroupTable::from_rows(&rows).is_err());
    }

    #[test]
    fn text_round_trip() {
        let g = cyclic(6).direct_product(&cyclic(2)).unwrap();
        let back = GroupTable::parse_text(&g.to_text()).unwrap();
        assert_eq!(g, back);
        assert!(GroupTable::parse_text("order 2\n0 1\n").is_err());
        assert!(GroupTable::parse_text("ord 2\n0 1\n1 0\n").is_err());
    }
}
