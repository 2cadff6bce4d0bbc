use std::fmt;

use super::GroupTable;

/// A subgroup of a parent table, stored as the sorted list of its elements.
#[derive(Clone, PartialEq, Eq)]
pub struct Subgroup<'g> {
    parent: &'g GroupTable,
    elements: Vec<usize>,
}

impl fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("parent_order", &self.parent.order())
            .field("elements", &self.elements)
            .finish()
    }
}

impl<'g> Subgroup<'g> {
    /// The subgroup generated by `gens`.
    pub fn generated(parent: &'g GroupTable, gens: &[usize]) -> Self {
        let mut member = vec![false; parent.order()];
        member[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = parent.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    stack.push(y);
                }
            }
        }
        Self::from_membership(parent, &member)
    }

    pub fn trivial(parent: &'g GroupTable) -> Self {
        Subgroup {
            parent,
            elements: vec![0],
        }
    }

    pub fn whole(parent: &'g GroupTable) -> Self {
        Subgroup {
            parent,
            elements: parent.elements().collect(),
        }
    }

    /// Wraps a set of elements, returning `None` unless it is a subgroup.
    pub fn from_elements(parent: &'g GroupTable, mut elements: Vec<usize>) -> Option<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) || elements.iter().any(|&x| x >= parent.order()) {
            return None;
        }
        let mut member = vec![false; parent.order()];
        for &x in &elements {
            member[x] = true;
        }
        let closed = elements
            .iter()
            .all(|&a| elements.iter().all(|&b| member[parent.mul(a, b)]));
        closed.then_some(Subgroup { parent, elements })
    }

    fn from_membership(parent: &'g GroupTable, member: &[bool]) -> Self {
        Subgroup {
            parent,
            elements: (0..member.len()).filter(|&i| member[i]).collect(),
        }
    }

    pub fn parent(&self) -> &'g GroupTable {
        self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn contains_all(&self, other: &Subgroup<'_>) -> bool {
        other.elements.iter().all(|&x| self.contains(x))
    }

    /// Subgroup generated by this one and `extra`.
    pub fn join(&self, extra: &[usize]) -> Subgroup<'g> {
        let mut gens = self.elements.clone();
        gens.extend_from_slice(extra);
        Subgroup::generated(self.parent, &gens)
    }

    pub fn is_normal(&self) -> bool {
        self.parent.elements().all(|g| {
            self.elements
                .iter()
                .all(|&h| self.contains(self.parent.conj(g, h)))
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.elements
            .iter()
            .all(|&a| self.elements.iter().all(|&b| self.parent.commute(a, b)))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u64;
        self.elements
            .iter()
            .any(|&x| self.parent.element_order(x) == n)
    }

    /// True when no cyclic subgroup of the parent strictly contains this one.
    ///
    /// A cyclic group has exactly one subgroup of each order, so `H` sits in
    /// `<c>` iff `|H|` divides `ord(c)` and `c^(ord(c)/|H|)` generates `H`.
    pub fn is_maximal_cyclic(&self) -> bool {
        if !self.is_cyclic() {
            return true;
        }
        let h = self.order() as u64;
        !self.parent.elements().any(|c| {
            let oc = self.parent.element_order(c);
            oc > h && oc.is_multiple_of(h) && {
                let y = self.parent.pow(c, oc / h);
                self.contains(y) && self.parent.element_order(y) == h
            }
        })
    }

    pub fn intersection(&self, other: &Subgroup<'_>) -> Subgroup<'g> {
        Subgroup {
            parent: self.parent,
            elements: self
                .elements
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        }
    }

    /// Re-indexes the subgroup as a standalone table.
    pub fn to_table(&self) -> GroupTable {
        GroupTable::from_operation(self.elements.clone(), |&a, &b| self.parent.mul(a, b))
            .expect("a subgroup is closed and contains the identity first")
    }
}
