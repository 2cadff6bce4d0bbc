//! Exhaustive search over differential choices.
//!
//! Choices on one page form a vector space `V`. A page's effect splits into
//! independent source blocks, so `V` is split as `N + sum_b K_b + C` where
//! `N` changes nothing, `K_b` changes only block `b` and `C` is the rest;
//! only `C` is enumerated jointly. Blocks whose target is forgotten on the
//! next page are resolved by counting kernels instead of enumerating.
//!
//! Automorphisms of the group and rescalings of `x`, `y` map admissible
//! choices to admissible choices, so pages in one orbit share an outcome.
//! On the first pages children are merged into orbits before recursing.

use rustc_hash::FxHashMap as HashMap;

use super::engine::{
    self, active_rows, analyze, BlockResult, ChoiceSpace, Layout, PageAnalysis, PageState,
    Transform,
};
use super::linalg::{self, Fp, Subspace};
use super::LAST_PAGE;

/// Children of pages up to this one are merged into symmetry orbits.
/// Deeper pages have small stabilizers and rarely gain anything.
const MAX_SYMMETRY_PAGE: usize = 3;

/// Largest `Z_r` dimension for which kernel counting is used.
const MAX_COUNTED_DIM: usize = 4;

#[derive(Debug, Clone, Copy)]
pub struct Outcome {
    pub min_total6: u64,
    pub min_e60: u64,
    pub leaves: u128,
}

impl Outcome {
    fn shifted(self, frozen: u64) -> Self {
        Outcome {
            min_total6: self.min_total6 + frozen,
            ..self
        }
    }
}

/// What one block's effect leaves behind after projection.
#[derive(Debug, PartialEq, Eq, Hash)]
struct BlockKey {
    z: Option<Subspace>,
    b: Option<Subspace>,
    z_dim: usize,
    b_dim: usize,
}

struct Split {
    null_dim: usize,
    own: Vec<Vec<Vec<u8>>>,
    shared: Vec<Vec<u8>>,
}

fn decompose(f: &Fp, rows: &[Vec<Vec<u8>>], k: usize) -> Split {
    let all: Vec<Vec<u8>> = rows.iter().flatten().cloned().collect();
    let null = linalg::null_space(f, &all, k);
    let mut span = Subspace::span(f, k, &null);
    let own: Vec<Vec<Vec<u8>>> = (0..rows.len())
        .map(|b| {
            let others: Vec<Vec<u8>> = rows
                .iter()
                .enumerate()
                .filter(|&(o, _)| o != b)
                .flat_map(|(_, r)| r.iter().cloned())
                .collect();
            linalg::null_space(f, &others, k)
                .into_iter()
                .filter(|v| span.insert(f, v))
                .collect()
        })
        .collect();
    let shared = (0..k)
        .map(|i| {
            let mut e = vec![0u8; k];
            e[i] = 1;
            e
        })
        .filter(|e| span.insert(f, e))
        .collect();
    debug_assert_eq!(span.dim(), k);
    Split {
        null_dim: null.len(),
        own,
        shared,
    }
}

fn combine(f: &Fp, basis: &[Vec<u8>], coeffs: &[u8], k: usize) -> Vec<u8> {
    let mut out = vec![0u8; k];
    for (v, &c) in basis.iter().zip(coeffs) {
        f.axpy(&mut out, c, v);
    }
    out
}

/// Steps through `F_p^n`; false after the last vector.
fn odometer(coeffs: &mut [u8], p: u8) -> bool {
    for c in coeffs.iter_mut() {
        *c += 1;
        if *c < p {
            return true;
        }
        *c = 0;
    }
    false
}

/// Steps through one vector per line of `F_p^n` (first nonzero entry 1),
/// starting from zero. Scaling a whole choice by a unit changes no kernel
/// or image, so one representative per line is enough.
fn next_projective(coeffs: &mut [u8], p: u8) -> bool {
    loop {
        if !odometer(coeffs, p) {
            return false;
        }
        if coeffs.iter().find(|&&c| c != 0) == Some(&1) {
            return true;
        }
    }
}

/// Number of choices a representative from [`next_projective`] stands for.
fn projective_weight(coeffs: &[u8], p: u8) -> u128 {
    if coeffs.iter().all(|&c| c == 0) {
        1
    } else {
        p as u128 - 1
    }
}

/// Steps through the mixed-radix tuples `pick[i] < sizes[i]`.
fn next_pick(pick: &mut [usize], sizes: &[usize]) -> bool {
    for (c, &n) in pick.iter_mut().zip(sizes) {
        *c += 1;
        if *c < n {
            return true;
        }
        *c = 0;
    }
    false
}

/// Blocks whose effects are computed together.
struct Group {
    blocks: Vec<usize>,
    /// Resolved by kernel counting rather than enumeration.
    counted: bool,
}

pub struct Search<'a> {
    layout: &'a Layout,
    memo: HashMap<(usize, PageState), Outcome>,
    /// `live[r]`: positions that page `r` and later can still read.
    live: Vec<Vec<bool>>,
    subspaces: Vec<Vec<Subspace>>,
    i6: Vec<usize>,
    i60: usize,
    /// Generators of the symmetry group.
    symmetries: Vec<Transform>,
}

impl<'a> Search<'a> {
    pub fn new(layout: &'a Layout) -> Self {
        let i6 = (0..layout.positions.len())
            .filter(|&i| {
                let (m, n) = layout.positions[i];
                m + n == 6
            })
            .collect();
        Search {
            layout,
            memo: HashMap::default(),
            live: (0..=LAST_PAGE + 1)
                .map(|r| layout.live_positions(r))
                .collect(),
            subspaces: (0..=MAX_COUNTED_DIM)
                .map(|n| linalg::all_subspaces(&layout.f, n))
                .collect(),
            i6,
            i60: layout.index_of((6, 0)).expect("window position"),
            symmetries: generators(layout),
        }
    }

    pub fn states_explored(&self) -> usize {
        self.memo.len()
    }

    /// Forgets positions no later page reads, returning how much they add
    /// to the degree-6 total.
    fn project(&self, r: usize, mut state: PageState) -> (PageState, u64) {
        let mut frozen = 0;
        for (i, &live) in self.live[r].iter().enumerate() {
            if !live && state.z[i].dim() > 0 {
                if self.i6.contains(&i) {
                    frozen += state.dim(i) as u64;
                }
                let ambient = state.z[i].ambient();
                state.z[i] = Subspace::zero(ambient);
                state.b[i] = Subspace::zero(ambient);
            }
        }
        (state, frozen)
    }

    pub fn outcome(&mut self, r: usize, state: PageState) -> Outcome {
        if r > LAST_PAGE {
            return Outcome {
                min_total6: self.i6.iter().map(|&i| state.dim(i) as u64).sum(),
                min_e60: state.dim(self.i60) as u64,
                leaves: 1,
            };
        }
        if active_rows(r).is_empty() {
            return self.outcome(r + 1, state);
        }
        let (state, frozen) = self.project(r, state);
        let key = (r, state);
        if let Some(o) = self.memo.get(&key) {
            return o.shifted(frozen);
        }
        let state = &key.1;
        let a = analyze(self.layout, state, r);
        let space = ChoiceSpace::new(self.layout, &a);
        let o = if (r + 1..=LAST_PAGE).all(|q| active_rows(q).is_empty()) {
            self.final_page(state, &a, &space)
        } else {
            let mut total = Outcome {
                min_total6: u64::MAX,
                min_e60: u64::MAX,
                leaves: 0,
            };
            let kids: Vec<((PageState, u64), u128)> =
                self.children(r, state, &a, &space).into_iter().collect();
            let roots = if r <= MAX_SYMMETRY_PAGE {
                self.orbits(&kids)
            } else {
                (0..kids.len()).collect()
            };
            let mut seen: HashMap<usize, Outcome> = HashMap::default();
            for (i, (_, mult)) in kids.iter().enumerate() {
                let o = match seen.get(&roots[i]) {
                    Some(&o) => o,
                    None => {
                        let (rep, rc) = &kids[roots[i]].0;
                        let o = self.outcome(r + 1, rep.clone()).shifted(*rc);
                        seen.insert(roots[i], o);
                        o
                    }
                };
                total.min_total6 = total.min_total6.min(o.min_total6);
                total.min_e60 = total.min_e60.min(o.min_e60);
                total.leaves += mult * o.leaves;
            }
            total
        };
        self.memo.insert(key, o);
        o.shifted(frozen)
    }

    /// For each child, the index of a representative of its orbit. Two
    /// children are merged when a generator maps one onto the other; they
    /// then have the same outcome.
    fn orbits(&self, kids: &[((PageState, u64), u128)]) -> Vec<usize> {
        let index: HashMap<&(PageState, u64), usize> =
            kids.iter().enumerate().map(|(i, (k, _))| (k, i)).collect();
        let mut parent: Vec<usize> = (0..kids.len()).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for (i, ((state, c), _)) in kids.iter().enumerate() {
            for t in &self.symmetries {
                let image = (self.layout.act(t, state), *c);
                if let Some(&j) = index.get(&image) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri.max(rj)] = ri.min(rj);
                    }
                }
            }
        }
        (0..kids.len()).map(|i| find(&mut parent, i)).collect()
    }

    /// Splits the blocks of a page into groups: every block whose target
    /// the next page forgets, and whose `Z_r` is small, goes into one
    /// counted group; each remaining block is enumerated on its own.
    fn groups(&self, a: &PageAnalysis, keep: &[(bool, bool)]) -> Vec<Group> {
        let mut counted = Vec::new();
        let mut out = Vec::new();
        for (b, s) in a.sources.iter().enumerate() {
            if !keep[b].1 && s.zbasis.len() <= MAX_COUNTED_DIM {
                counted.push(b);
            } else {
                out.push(Group {
                    blocks: vec![b],
                    counted: false,
                });
            }
        }
        if !counted.is_empty() {
            out.push(Group {
                blocks: counted,
                counted: true,
            });
        }
        out
    }

    /// Distinct joint effects of a group over the choices `base + span(own)`,
    /// one result per block of the group, with how many choices give each.
    #[allow(clippy::too_many_arguments)]
    fn group_effects(
        &self,
        state: &PageState,
        a: &PageAnalysis,
        space: &ChoiceSpace,
        group: &Group,
        base: &[u8],
        own: &[Vec<u8>],
        keep: &[(bool, bool)],
    ) -> Vec<(Vec<BlockKey>, Vec<BlockResult>, u128)> {
        let key_of = |b: usize, res: &BlockResult| BlockKey {
            z: keep[b].0.then(|| res.z.clone()),
            b: keep[b].1.then(|| res.b.clone()),
            z_dim: res.z.dim(),
            b_dim: res.b.dim(),
        };
        // counting walks tuples of subspaces; enumerating walks the choices
        let worth_counting = group.counted && {
            let lattice: u128 = group
                .blocks
                .iter()
                .map(|&b| self.subspaces[a.sources[b].zbasis.len()].len() as u128)
                .product();
            let p = self.layout.f.p() as u128;
            p.checked_pow(own.len() as u32).is_none_or(|n| n > lattice)
        };
        let results: Vec<(Vec<BlockResult>, u128)> = if worth_counting {
            self.kernel_effects(state, a, space, &group.blocks, base, own)
        } else {
            self.enumerate_effects(state, a, space, &group.blocks, base, own)
        };
        let mut seen: HashMap<Vec<BlockKey>, usize> = HashMap::default();
        let mut out: Vec<(Vec<BlockResult>, u128)> = Vec::new();
        for (res, c) in results {
            let keys: Vec<BlockKey> = group
                .blocks
                .iter()
                .zip(&res)
                .map(|(&b, r)| key_of(b, r))
                .collect();
            match seen.get(&keys) {
                Some(&i) => out[i].1 += c,
                None => {
                    seen.insert(keys, out.len());
                    out.push((res, c));
                }
            }
        }
        let mut keys: Vec<Option<Vec<BlockKey>>> = (0..out.len()).map(|_| None).collect();
        for (k, i) in seen {
            keys[i] = Some(k);
        }
        keys.into_iter()
            .zip(out)
            .map(|(k, (res, c))| (k.expect("every effect has a key"), res, c))
            .collect()
    }

    fn enumerate_effects(
        &self,
        state: &PageState,
        a: &PageAnalysis,
        space: &ChoiceSpace,
        blocks: &[usize],
        base: &[u8],
        own: &[Vec<u8>],
    ) -> Vec<(Vec<BlockResult>, u128)> {
        let f = &self.layout.f;
        let mut out = Vec::new();
        let mut k_coeffs = vec![0u8; own.len()];
        loop {
            let mut coeffs = combine(f, own, &k_coeffs, space.dim());
            for (x, y) in coeffs.iter_mut().zip(base) {
                *x = f.add(*x, *y);
            }
            let res = blocks
                .iter()
                .map(|&b| {
                    engine::apply_block(
                        self.layout,
                        a,
                        state,
                        b,
                        &space.block_images(f, b, &coeffs),
                    )
                })
                .collect();
            out.push((res, 1));
            if !odometer(&mut k_coeffs, f.p()) {
                break;
            }
        }
        out
    }

    /// Joint kernel distribution of `blocks` over `base + span(own)`. For a
    /// tuple of subspaces `K_i` of each block's `Z_r`, the choices killing
    /// every `K_i` form an affine space; Moebius inversion over the product
    /// of subspace lattices turns those counts into exact-kernel counts.
    /// The new `B` at each target is only correct in dimension.
    fn kernel_effects(
        &self,
        state: &PageState,
        a: &PageAnalysis,
        space: &ChoiceSpace,
        blocks: &[usize],
        base: &[u8],
        own: &[Vec<u8>],
    ) -> Vec<(Vec<BlockResult>, u128)> {
        let f = &self.layout.f;
        let p = f.p() as i128;
        let d = own.len();
        // per block: reduced images of the base choice and of each own vector
        let data: Vec<(Vec<Vec<u8>>, Vec<Vec<Vec<u8>>>)> = blocks
            .iter()
            .map(|&b| {
                let modulo = &state.b[a.sources[b].target];
                let reduce = |imgs: Vec<Vec<u8>>| -> Vec<Vec<u8>> {
                    imgs.iter().map(|v| modulo.reduce(f, v)).collect()
                };
                let img0 = reduce(space.block_images(f, b, base));
                let imgs = own
                    .iter()
                    .map(|v| reduce(space.block_images(f, b, v)))
                    .collect();
                (img0, imgs)
            })
            .collect();

        // depth-first over tuples, pruning as soon as the system is inconsistent
        let mut containing: Vec<(Vec<usize>, i128)> = Vec::new();
        let mut stack: Vec<(Vec<usize>, Vec<Vec<u8>>, Vec<u8>)> =
            vec![(Vec::new(), Vec::new(), Vec::new())];
        while let Some((tuple, rows, rhs)) = stack.pop() {
            let i = tuple.len();
            if i == blocks.len() {
                let rank = Subspace::span(f, d, &rows).dim();
                containing.push((tuple, p.pow((d - rank) as u32)));
                continue;
            }
            let dz = a.sources[blocks[i]].zbasis.len();
            let (img0, imgs) = &data[i];
            let tdim = state.b[a.sources[blocks[i]].target].ambient();
            for (si, k) in self.subspaces[dz].iter().enumerate() {
                let mut rows = rows.clone();
                let mut rhs = rhs.clone();
                for w in k.basis() {
                    for t in 0..tdim {
                        let lin = |img: &Vec<Vec<u8>>| {
                            w.iter()
                                .zip(img)
                                .fold(0u8, |acc, (&c, v)| f.add(acc, f.mul(c, v[t])))
                        };
                        let row: Vec<u8> = imgs.iter().map(lin).collect();
                        let r = f.neg(lin(img0));
                        if linalg::is_zero(&row) && r == 0 {
                            continue;
                        }
                        rows.push(row);
                        rhs.push(r);
                    }
                }
                if linalg::solve(f, &rows, &rhs, d).is_some() {
                    let mut t = tuple.clone();
                    t.push(si);
                    stack.push((t, rows, rhs));
                }
            }
        }

        let mu = |lo: &Subspace, hi: &Subspace| -> Option<i128> {
            if !lo.is_subspace_of(f, hi) {
                return None;
            }
            let j = (hi.dim() - lo.dim()) as u32;
            let m = p.pow(j * j.saturating_sub(1) / 2);
            Some(if j.is_multiple_of(2) { m } else { -m })
        };
        let sub = |i: usize, si: usize| &self.subspaces[a.sources[blocks[i]].zbasis.len()][si];
        let mut out = Vec::new();
        for (tuple, _) in &containing {
            let mut exact: i128 = 0;
            for (upper, c) in &containing {
                let factor = (0..blocks.len()).try_fold(1i128, |acc, i| {
                    mu(sub(i, tuple[i]), sub(i, upper[i])).map(|m| acc * m)
                });
                if let Some(m) = factor {
                    exact += m * c;
                }
            }
            debug_assert!(exact >= 0);
            if exact == 0 {
                continue;
            }
            let res = blocks
                .iter()
                .enumerate()
                .map(|(i, &b)| {
                    let s = &a.sources[b];
                    let k = sub(i, tuple[i]);
                    let ambient = self.layout.dim_at(s.pos);
                    let kernel: Vec<Vec<u8>> = k
                        .basis()
                        .iter()
                        .map(|w| combine(f, &s.zbasis, w, ambient))
                        .collect();
                    let z = Subspace::span(f, ambient, &kernel);
                    let rank = s.zbasis.len() - k.dim();
                    let modulo = &state.b[s.target];
                    let mut bsp = modulo.clone();
                    let mut extra = state.z[s.target].basis().iter();
                    while bsp.dim() < modulo.dim() + rank {
                        bsp.insert(f, extra.next().expect("image lies in Z_r"));
                    }
                    BlockResult { z, b: bsp, rank }
                })
                .collect();
            out.push((res, exact as u128));
        }
        out
    }

    /// Every next page reachable from `state`, projected, with the number
    /// of choices leading to it.
    fn children(
        &self,
        r: usize,
        state: &PageState,
        a: &PageAnalysis,
        space: &ChoiceSpace,
    ) -> HashMap<(PageState, u64), u128> {
        let f = &self.layout.f;
        let p = f.p();
        let overlapping = a
            .sources
            .iter()
            .any(|s| a.sources.iter().any(|t| t.target == s.pos));
        if overlapping {
            return self.children_brute(r, state, a, space);
        }
        let live = &self.live[r + 1];
        let keep: Vec<(bool, bool)> = a
            .sources
            .iter()
            .map(|s| (live[s.pos], live[s.target]))
            .collect();
        let groups = self.groups(a, &keep);
        let rows: Vec<Vec<Vec<u8>>> = groups
            .iter()
            .map(|g| {
                g.blocks
                    .iter()
                    .flat_map(|&b| space.block_rows(f, a, state, b))
                    .collect()
            })
            .collect();
        let split = decompose(f, &rows, space.dim());
        let null_mult = (p as u128).pow(split.null_dim as u32);

        let mut interned: Vec<(HashMap<Vec<BlockKey>, u32>, Vec<Vec<BlockResult>>)> = (0..groups
            .len())
            .map(|_| (HashMap::default(), Vec::new()))
            .collect();
        let mut combos: HashMap<Vec<u32>, u128> = HashMap::default();
        let mut c_coeffs = vec![0u8; split.shared.len()];
        loop {
            let base = combine(f, &split.shared, &c_coeffs, space.dim());
            let per_group: Vec<Vec<(u32, u128)>> = groups
                .iter()
                .zip(&split.own)
                .zip(interned.iter_mut())
                .map(|((g, own), (ids, store))| {
                    self.group_effects(state, a, space, g, &base, own, &keep)
                        .into_iter()
                        .map(|(key, res, c)| {
                            let id = *ids.entry(key).or_insert_with(|| {
                                store.push(res);
                                store.len() as u32 - 1
                            });
                            (id, c)
                        })
                        .collect()
                })
                .collect();
            let sizes: Vec<usize> = per_group.iter().map(Vec::len).collect();
            let mut pick = vec![0usize; groups.len()];
            loop {
                let mut mult = null_mult * projective_weight(&c_coeffs, p);
                let ids: Vec<u32> = pick
                    .iter()
                    .zip(&per_group)
                    .map(|(&i, effects)| {
                        mult *= effects[i].1;
                        effects[i].0
                    })
                    .collect();
                *combos.entry(ids).or_insert(0) += mult;
                if !next_pick(&mut pick, &sizes) {
                    break;
                }
            }
            if !next_projective(&mut c_coeffs, p) {
                break;
            }
        }

        let mut children: HashMap<(PageState, u64), u128> = HashMap::default();
        for (ids, mult) in combos {
            let mut next = state.clone();
            for ((g, &id), (_, store)) in groups.iter().zip(&ids).zip(&interned) {
                for (&b, res) in g.blocks.iter().zip(&store[id as usize]) {
                    next.z[a.sources[b].pos] = res.z.clone();
                    next.b[a.sources[b].target] = res.b.clone();
                }
            }
            *children.entry(self.project(r + 1, next)).or_insert(0) += mult;
        }
        children
    }

    /// Reference enumeration: one full page update per choice.
    fn children_brute(
        &self,
        r: usize,
        state: &PageState,
        a: &PageAnalysis,
        space: &ChoiceSpace,
    ) -> HashMap<(PageState, u64), u128> {
        let f = &self.layout.f;
        let mut children = HashMap::default();
        let mut coeffs = vec![0u8; space.dim()];
        loop {
            let step = engine::apply(self.layout, a, state, &space.images_for(f, &coeffs));
            *children.entry(self.project(r + 1, step.next)).or_insert(0) += 1;
            if !odometer(&mut coeffs, f.p()) {
                break;
            }
        }
        children
    }

    /// The last page with differentials: only the ranks matter, so every
    /// block is counted and the best ranks are read off per shared choice.
    fn final_page(&self, state: &PageState, a: &PageAnalysis, space: &ChoiceSpace) -> Outcome {
        let f = &self.layout.f;
        let p = f.p();
        let pos = &self.layout.positions;
        let deg6 = |i: usize| pos[i].0 + pos[i].1 == 6;
        let base6: u64 = self.i6.iter().map(|&i| state.dim(i) as u64).sum();
        let base60 = state.dim(self.i60) as u64;
        // weight of each block's rank in the degree-6 total and in E^{6,0}
        let w6: Vec<u64> = a
            .sources
            .iter()
            .map(|s| u64::from(deg6(s.pos)) + u64::from(deg6(s.target)))
            .collect();
        let w60: Vec<u64> = a
            .sources
            .iter()
            .map(|s| u64::from(s.target == self.i60))
            .collect();
        let bounds = space.rank_bounds(f, a, state);
        let dot = |ranks: &[usize], w: &[u64]| -> u64 {
            ranks.iter().zip(w).map(|(&k, &w)| k as u64 * w).sum()
        };
        let (best6, best60) = (dot(&bounds, &w6), dot(&bounds, &w60));

        let keep = vec![(false, false); a.sources.len()];
        let groups = self.groups(a, &keep);
        let rows: Vec<Vec<Vec<u8>>> = groups
            .iter()
            .map(|g| {
                g.blocks
                    .iter()
                    .flat_map(|&b| space.block_rows(f, a, state, b))
                    .collect()
            })
            .collect();
        let split = decompose(f, &rows, space.dim());
        let (mut got6, mut got60) = (0u64, 0u64);
        let mut c_coeffs = vec![0u8; split.shared.len()];
        loop {
            let base = combine(f, &split.shared, &c_coeffs, space.dim());
            let (mut here6, mut here60) = (0u64, 0u64);
            for (g, own) in groups.iter().zip(&split.own) {
                let effects = self.group_effects(state, a, space, g, &base, own, &keep);
                let score = |w: &[u64]| {
                    effects
                        .iter()
                        .map(|(_, res, _)| {
                            g.blocks
                                .iter()
                                .zip(res)
                                .map(|(&b, r)| r.rank as u64 * w[b])
                                .sum::<u64>()
                        })
                        .max()
                        .unwrap_or(0)
                };
                here6 += score(&w6);
                here60 += score(&w60);
            }
            got6 = got6.max(here6);
            got60 = got60.max(here60);
            if (got6 == best6 && got60 == best60) || !next_projective(&mut c_coeffs, p) {
                break;
            }
        }
        Outcome {
            min_total6: base6 - got6,
            min_e60: base60 - got60,
            leaves: (p as u128).pow(space.dim() as u32),
        }
    }
}

/// Generators of `GL_2(F_p)` together with the rescalings of `x` and `y`.
fn generators(layout: &Layout) -> Vec<Transform> {
    let f = &layout.f;
    let p = f.p();
    let omega = (2..p)
        .find(|&w| (1..p - 1).all(|k| (0..k).fold(1u8, |acc, _| f.mul(acc, w)) != 1))
        .unwrap_or(1);
    vec![
        layout.transform([[1, 1], [0, 1]], 1, 1),
        layout.transform([[1, 0], [1, 1]], 1, 1),
        layout.transform([[omega, 0], [0, 1]], 1, 1),
        layout.transform([[1, 0], [0, omega]], 1, 1),
        layout.transform([[1, 0], [0, 1]], omega, 1),
        layout.transform([[1, 0], [0, 1]], 1, omega),
    ]
}
