//! Mod-`p` Serre spectral sequence of the Borel fibration
//! `M -> M_G -> BG` for `G = Z_p x Z_p` acting on a space with the mod-`p`
//! cohomology of `S^2 x S^3`, searched exhaustively over all differential
//! choices compatible with the module structure and the Leibniz rule.

mod algebra;
mod engine;
mod linalg;
mod search;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primes::is_prime;

pub use algebra::{monomial_basis, Monomial};
use engine::{active_rows, analyze, apply, Layout, PageState};
pub use engine::{FIBER_ROWS, LAST_PAGE, WINDOW};

/// Dimensions of `H^k(B(Z_p x Z_p); Z_p)` for `k = 0..=max_deg`.
pub fn bg_dims(p: u64, max_deg: usize) -> Result<Vec<u64>> {
    require_odd_prime(p)?;
    Ok((0..=max_deg)
        .map(|k| monomial_basis(k).len() as u64)
        .collect())
}

fn require_odd_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::UnsupportedPrime {
            p,
            reason: "the engine works with odd primes only",
        });
    }
    if p > 251 {
        return Err(Error::UnsupportedPrime {
            p,
            reason: "field elements are stored in a byte",
        });
    }
    Ok(())
}

/// Fiber cohomology of `S^2 x S^3`.
pub fn fiber_dim(n: usize) -> u64 {
    u64::from(FIBER_ROWS.contains(&n))
}

/// Dimensions `E_r^{m,n}` inside the window `m + n <= WINDOW`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedPage {
    /// Page index; `None` for `E_infinity`.
    pub page: Option<usize>,
    pub dims: BTreeMap<(usize, usize), u64>,
}

impl BigradedPage {
    pub fn get(&self, m: usize, n: usize) -> u64 {
        self.dims.get(&(m, n)).copied().unwrap_or(0)
    }

    /// Sum of the dimensions on the antidiagonal `m + n = k`.
    pub fn total_degree(&self, k: usize) -> u64 {
        self.dims
            .iter()
            .filter(|((m, n), _)| m + n == k)
            .map(|(_, d)| d)
            .sum()
    }

    fn from_state(layout: &Layout, state: &PageState, page: Option<usize>) -> Self {
        let mut dims = BTreeMap::new();
        for n in 0..=5 {
            for m in 0..=WINDOW - n {
                dims.insert((m, n), 0);
            }
        }
        for (i, &pos) in layout.positions.iter().enumerate() {
            dims.insert(pos, state.dim(i) as u64);
        }
        BigradedPage { page, dims }
    }
}

#[derive(Serialize)]
struct PageEntry {
    m: usize,
    n: usize,
    dim: u64,
}

impl Serialize for BigradedPage {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            page: Option<usize>,
            entries: &'a [PageEntry],
        }
        let entries: Vec<PageEntry> = self
            .dims
            .iter()
            .filter(|(_, &d)| d > 0)
            .map(|(&(m, n), &dim)| PageEntry { m, n, dim })
            .collect();
        Repr {
            page: self.page,
            entries: &entries,
        }
        .serialize(s)
    }
}

impl fmt::Display for BigradedPage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.page {
            Some(r) => writeln!(f, "E_{r}")?,
            None => writeln!(f, "E_inf")?,
        }
        for n in (0..=5).rev() {
            write!(f, "{n} |")?;
            for m in 0..=WINDOW - n {
                write!(f, " {:>2}", self.get(m, n))?;
            }
            writeln!(f)?;
        }
        write!(f, "  +")?;
        for m in 0..=WINDOW {
            write!(f, " {m:>2}")?;
        }
        Ok(())
    }
}

/// The `E_2` page: `H^m(BG) (x) H^n(S^2 x S^3)`.
pub fn e2_page(p: u64) -> Result<BigradedPage> {
    require_odd_prime(p)?;
    let layout = Layout::new(p as u8);
    Ok(BigradedPage::from_state(
        &layout,
        &layout.initial_state(),
        Some(2),
    ))
}

/// Value of `d_r` on one module generator of `E_r`, as coordinates in the
/// page's basis of the target position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorValue {
    pub page: usize,
    pub source: (usize, usize),
    pub index: usize,
    pub value: Vec<u32>,
}

/// One choice of differentials. `d2_x` gives `d_2(x) = a1 t1 y + a2 t2 y +
/// a3 s1 s2 y`; `d3_y` gives `d_3(y)` in the basis `s1 t1, s1 t2, s2 t1,
/// s2 t2`; `later` fixes any other generator. Unlisted generators take the
/// value forced by the constraints, or zero when free.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialChoice {
    pub d2_x: [u32; 3],
    pub d3_y: [u32; 4],
    #[serde(default)]
    pub later: Vec<GeneratorValue>,
}

impl DifferentialChoice {
    fn values(&self) -> Vec<GeneratorValue> {
        let mut out = vec![
            GeneratorValue {
                page: 2,
                source: engine::X,
                index: 0,
                value: self.d2_x.to_vec(),
            },
            GeneratorValue {
                page: 3,
                source: engine::Y,
                index: 0,
                value: self.d3_y.to_vec(),
            },
        ];
        out.extend(self.later.iter().cloned());
        out
    }
}

/// Rank of one differential on one page.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DifferentialRank {
    pub page: usize,
    pub source: (usize, usize),
    pub target: (usize, usize),
    pub rank: usize,
}

/// Pages `E_2, .., E_LAST_PAGE` followed by `E_infinity`, with the ranks
/// of the differentials between them.
#[derive(Debug, Clone)]
pub struct ChoiceTrace {
    pub pages: Vec<BigradedPage>,
    pub ranks: Vec<DifferentialRank>,
}

impl ChoiceTrace {
    pub fn e_infinity(&self) -> &BigradedPage {
        self.pages.last().expect("trace is never empty")
    }
}

/// Runs one choice through every page and returns `E_infinity`.
pub fn run_choice(p: u64, choice: &DifferentialChoice) -> Result<BigradedPage> {
    Ok(run_choice_trace(p, choice)?.e_infinity().clone())
}

pub fn run_choice_trace(p: u64, choice: &DifferentialChoice) -> Result<ChoiceTrace> {
    require_odd_prime(p)?;
    let layout = Layout::new(p as u8);
    let f = &layout.f;
    let values = choice.values();
    for v in &values {
        if !(2..=LAST_PAGE).contains(&v.page) {
            return Err(Error::InconsistentChoice(format!(
                "page {} has no differentials",
                v.page
            )));
        }
    }
    let mut used = vec![false; values.len()];
    let mut state = layout.initial_state();
    let mut pages = vec![BigradedPage::from_state(&layout, &state, Some(2))];
    let mut ranks = Vec::new();
    for r in 2..=LAST_PAGE {
        if !active_rows(r).is_empty() {
            let a = analyze(&layout, &state, r);
            let mut known = vec![false; a.nl];
            let mut lambda = vec![0u8; a.nl];
            for (vi, v) in values.iter().enumerate().filter(|(_, v)| v.page == r) {
                let is_zero = v.value.iter().all(|&c| (c as u64).is_multiple_of(p));
                let gen = layout.index_of(v.source).and_then(|pos| {
                    a.gens
                        .iter()
                        .find(|g| g.pos == pos && g.local_index == v.index)
                });
                let Some(g) = gen else {
                    if is_zero {
                        used[vi] = true;
                        continue;
                    }
                    return Err(Error::InconsistentChoice(format!(
                        "no generator {} at {:?} on page {r}",
                        v.index, v.source
                    )));
                };
                if v.value.len() != g.len && !(is_zero && g.len == 0) {
                    return Err(Error::InconsistentChoice(format!(
                        "generator at {:?} on page {r} takes {} coordinates, got {}",
                        v.source,
                        g.len,
                        v.value.len()
                    )));
                }
                for (j, &c) in v.value.iter().enumerate().take(g.len) {
                    known[g.offset + j] = true;
                    lambda[g.offset + j] = (c as u64 % p) as u8;
                }
                used[vi] = true;
            }
            let unknown: Vec<usize> = (0..a.nl).filter(|&l| !known[l]).collect();
            let rows: Vec<Vec<u8>> = a
                .constraints
                .iter()
                .map(|row| unknown.iter().map(|&l| row[l]).collect())
                .collect();
            let rhs: Vec<u8> = a
                .constraints
                .iter()
                .map(|row| {
                    let s = row
                        .iter()
                        .zip(&lambda)
                        .fold(0u8, |acc, (&x, &l)| f.add(acc, f.mul(x, l)));
                    f.neg(s)
                })
                .collect();
            let solution = linalg::solve(f, &rows, &rhs, unknown.len()).ok_or_else(|| {
                Error::InconsistentChoice(format!(
                    "values on page {r} violate well-definedness or the Leibniz rule"
                ))
            })?;
            for (&l, &x) in unknown.iter().zip(&solution) {
                lambda[l] = x;
            }
            debug_assert!(engine::admissible(&layout, &a, &lambda));
            let step = apply(
                &layout,
                &a,
                &state,
                &engine::images_for_lambda(&layout, &a, &lambda),
            );
            for (src, tgt, rank) in step.ranks {
                ranks.push(DifferentialRank {
                    page: r,
                    source: layout.positions[src],
                    target: layout.positions[tgt],
                    rank,
                });
            }
            state = step.next;
        }
        pages.push(BigradedPage::from_state(
            &layout,
            &state,
            if r < LAST_PAGE { Some(r + 1) } else { None },
        ));
    }
    if let Some(vi) = used.iter().position(|u| !u) {
        let v = &values[vi];
        return Err(Error::InconsistentChoice(format!(
            "no generator {} at {:?} on page {}",
            v.index, v.source, v.page
        )));
    }
    Ok(ChoiceTrace { pages, ranks })
}

/// Summary of an exhaustive search over all differential choices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub p: u64,
    /// Number of complete choices (one value for every page) covered.
    pub choices_examined: u128,
    /// Distinct intermediate pages met during the search.
    pub states_explored: usize,
    /// Smallest `sum_{m+n=6} dim E_inf^{m,n}` over all choices.
    pub min_deg6_survivors: u64,
    pub min_e_inf_6_0: u64,
    /// True when every choice leaves something in total degree 6.
    pub verdict: bool,
}

/// Largest prime the exhaustive search accepts.
pub const MAX_SEARCH_PRIME: u64 = 7;

/// Searches every admissible differential choice mod `p` and reports
/// whether some choice empties total degree 6.
pub fn exhaustive_verdict(p: u64) -> Result<VerdictReport> {
    require_odd_prime(p)?;
    if p > MAX_SEARCH_PRIME {
        return Err(Error::UnsupportedPrime {
            p,
            reason: "exhaustive search is capped at p = 7",
        });
    }
    let layout = Layout::new(p as u8);
    let mut search = search::Search::new(&layout);
    let o = search.outcome(2, layout.initial_state());
    Ok(VerdictReport {
        p,
        choices_examined: o.leaves,
        states_explored: search.states_explored(),
        min_deg6_survivors: o.min_total6,
        min_e_inf_6_0: o.min_e60,
        verdict: o.min_total6 >= 1,
    })
}

/// Degree above which `H^*(M_G)` vanishes for a free action on a closed
/// manifold of dimension `manifold_dim`.
pub fn free_quotient_ceiling(manifold_dim: u64) -> Result<u64> {
    if manifold_dim == 0 {
        return Err(Error::InvalidArgument(
            "manifold dimension must be at least 1".into(),
        ));
    }
    Ok(manifold_dim)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_dimensions() {
        let d = bg_dims(3, 6).unwrap();
        assert_eq!((d[0], d[1], d[2], d[3], d[6]), (1, 2, 3, 4, 7));
        assert!(bg_dims(2, 3).is_err());
        assert!(bg_dims(9, 3).is_err());
    }

    #[test]
    fn second_page() {
        let e2 = e2_page(5).unwrap();
        assert_eq!(e2.get(6, 0), 7);
        assert_eq!(e2.get(2, 2), 3);
        assert!((0..=6).all(|m| e2.get(m, 1) == 0 && e2.get(m, 4) == 0));
        assert_eq!(e2.total_degree(6), 18);
    }

    #[test]
    fn zero_choice_changes_nothing() {
        let e = run_choice(3, &DifferentialChoice::default()).unwrap();
        let mut e2 = e2_page(3).unwrap();
        e2.page = None;
        assert_eq!(e, e2);
    }

    #[test]
    fn nonzero_d2_on_x() {
        let c = DifferentialChoice {
            d2_x: [1, 0, 0],
            ..Default::default()
        };
        let t = run_choice_trace(3, &c).unwrap();
        let e3 = &t.pages[1];
        assert_eq!(e3.get(1, 3), 0);
        assert_eq!(e3.get(3, 2), 2);
    }

    #[test]
    fn d3_on_y_has_a_kernel() {
        let c = DifferentialChoice {
            d3_y: [1, 0, 0, 0],
            ..Default::default()
        };
        let t = run_choice_trace(3, &c).unwrap();
        let rank = t
            .ranks
            .iter()
            .find(|d| d.page == 3 && d.source == (3, 2))
            .unwrap()
            .rank;
        assert!(rank <= 3);
        assert_eq!(t.pages[1].get(3, 2), 4);
        assert_eq!(t.pages[2].get(3, 2), 4 - rank as u64);
    }

    #[test]
    fn rejects_bad_values() {
        let c = DifferentialChoice {
            later: vec![GeneratorValue {
                page: 3,
                source: (0, 5),
                index: 0,
                value: vec![1, 0, 0, 0],
            }],
            ..Default::default()
        };
        // x and y survive with d3(y) = 0, so the Leibniz rule forces d3(xy) = 0
        assert!(matches!(
            run_choice(3, &c),
            Err(Error::InconsistentChoice(_))
        ));
        let c = DifferentialChoice {
            later: vec![GeneratorValue {
                page: 5,
                source: (0, 5),
                index: 0,
                value: vec![1],
            }],
            ..Default::default()
        };
        assert!(run_choice(3, &c).is_err());
    }

    #[test]
    fn ceiling() {
        assert_eq!(free_quotient_ceiling(5).unwrap(), 5);
        assert_eq!(free_quotient_ceiling(13).unwrap(), 13);
        assert!(free_quotient_ceiling(0).is_err());
    }
}
