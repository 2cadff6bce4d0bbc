//! Page-by-page evaluation of the spectral sequence of `B(Z_p x Z_p)` with
//! fiber cohomology `1, y, x, xy` in degrees 0, 2, 3, 5.
//!
//! Every position `(m, n)` of the window is a copy of `H^m(BG)`. A page is
//! recorded as a pair of subspaces `B_r ⊆ Z_r` of each position, so that
//! `E_r = Z_r / B_r`. On page `r` the differential is a module map over the
//! base ring: it is fixed by its values on a minimal set of module
//! generators of `E_r` in each active row, subject to
//!
//! - well-definedness: every linear relation among the spanning products
//!   `b·g` (and `B_r`) maps into `B_r` of the target,
//! - images lying in `Z_r` of the target,
//! - the Leibniz rule `d(xy) = d(x) y - x d(y)` whenever `x`, `y` and `xy`
//!   all survive to the page.
//!
//! The admissible generator values form a vector space `V`; every element
//! of `V` is one differential choice.

use std::collections::HashMap;

use super::algebra::{BaseAlgebra, Monomial};
use super::linalg::{self, kernel_and_image, null_space, relations, Fp, Subspace};

/// Largest total degree tracked.
pub const WINDOW: usize = 7;
/// Fiber degrees with nonzero cohomology.
pub const FIBER_ROWS: [usize; 4] = [0, 2, 3, 5];
/// Last page on which a differential can start and end inside the window.
pub const LAST_PAGE: usize = 7;

pub const X: (usize, usize) = (0, 3);
pub const Y: (usize, usize) = (0, 2);
pub const XY: (usize, usize) = (0, 5);

#[derive(Debug)]
pub struct Layout {
    pub f: Fp,
    pub alg: BaseAlgebra,
    pub positions: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl Layout {
    pub fn new(p: u8) -> Self {
        let positions: Vec<(usize, usize)> = FIBER_ROWS
            .iter()
            .flat_map(|&n| (0..=WINDOW - n).map(move |m| (m, n)))
            .collect();
        let index = positions
            .iter()
            .enumerate()
            .map(|(i, &pos)| (pos, i))
            .collect();
        Layout {
            f: Fp::new(p),
            alg: BaseAlgebra::new(WINDOW),
            positions,
            index,
        }
    }

    pub fn index_of(&self, pos: (usize, usize)) -> Option<usize> {
        self.index.get(&pos).copied()
    }

    pub fn dim_at(&self, i: usize) -> usize {
        self.alg.dim(self.positions[i].0)
    }

    pub fn initial_state(&self) -> PageState {
        PageState {
            z: (0..self.positions.len())
                .map(|i| Subspace::full(self.dim_at(i)))
                .collect(),
            b: (0..self.positions.len())
                .map(|i| Subspace::zero(self.dim_at(i)))
                .collect(),
        }
    }

    /// Target of `d_r` from `(m, n)` when it lies in a nonzero row of the window.
    pub fn target(&self, pos: (usize, usize), r: usize) -> Option<usize> {
        let (m, n) = pos;
        let nt = (n + 1).checked_sub(r)?;
        self.index_of((m + r, nt))
    }
}

impl Layout {
    /// Positions whose subspaces can still influence page `r` or later:
    /// sources and targets of the remaining differentials, plus the classes
    /// the Leibniz tie inspects.
    pub fn live_positions(&self, r: usize) -> Vec<bool> {
        let mut live = vec![false; self.positions.len()];
        for q in r..=LAST_PAGE {
            for (n, _) in active_rows(q) {
                for m in 0..=WINDOW - n {
                    if let Some(t) = self.target((m, n), q) {
                        live[self.index_of((m, n)).expect("window position")] = true;
                        live[t] = true;
                    }
                }
            }
        }
        for pos in [X, Y, XY] {
            live[self.index_of(pos).expect("window position")] = true;
        }
        live
    }
}

/// A symmetry of the search: an automorphism of `Z_p x Z_p` acting on the
/// base, together with rescalings `x -> alpha x`, `y -> beta y` of the
/// fiber classes.
#[derive(Debug, Clone)]
pub struct Transform {
    /// Per base degree, the images of the basis monomials.
    mats: Vec<Vec<Vec<u8>>>,
    alpha: u8,
    beta: u8,
}

impl Layout {
    pub fn transform(&self, g: [[u8; 2]; 2], alpha: u8, beta: u8) -> Transform {
        Transform {
            mats: (0..=WINDOW)
                .map(|m| self.alg.substitution(&self.f, g, m))
                .collect(),
            alpha,
            beta,
        }
    }

    /// Image of a page under a symmetry.
    pub fn act(&self, t: &Transform, state: &PageState) -> PageState {
        let f = &self.f;
        let map = |i: usize, s: &Subspace| -> Subspace {
            let (m, n) = self.positions[i];
            let mut scale = 1u8;
            if n == 3 || n == 5 {
                scale = f.mul(scale, t.alpha);
            }
            if n == 2 || n == 5 {
                scale = f.mul(scale, t.beta);
            }
            let rows: Vec<Vec<u8>> = s
                .basis()
                .iter()
                .map(|v| {
                    let mut out = vec![0u8; v.len()];
                    for (c, col) in v.iter().zip(&t.mats[m]) {
                        f.axpy(&mut out, f.mul(*c, scale), col);
                    }
                    out
                })
                .collect();
            Subspace::span(f, s.ambient(), &rows)
        };
        PageState {
            z: state.z.iter().enumerate().map(|(i, s)| map(i, s)).collect(),
            b: state.b.iter().enumerate().map(|(i, s)| map(i, s)).collect(),
        }
    }
}

/// `E_r = Z_r / B_r` at every window position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PageState {
    pub z: Vec<Subspace>,
    pub b: Vec<Subspace>,
}

impl PageState {
    pub fn dim(&self, i: usize) -> usize {
        self.z[i].dim() - self.b[i].dim()
    }
}

/// A linear function of the unknowns with values in a target position:
/// column `l` is the image of the `l`-th unit unknown.
type Form = Vec<Vec<u8>>;

fn zero_form(nl: usize, dim: usize) -> Form {
    vec![vec![0u8; dim]; nl]
}

fn form_axpy(f: &Fp, acc: &mut Form, c: u8, other: &Form) {
    for (a, o) in acc.iter_mut().zip(other) {
        f.axpy(a, c, o);
    }
}

fn eval_form(f: &Fp, form: &Form, lambda: &[u8], dim: usize) -> Vec<u8> {
    let mut out = vec![0u8; dim];
    for (col, &c) in form.iter().zip(lambda) {
        f.axpy(&mut out, c, col);
    }
    out
}

/// Constraint rows saying the form's values lie in `s`.
fn membership_rows(f: &Fp, form: &Form, s: &Subspace, nl: usize, rows: &mut Vec<Vec<u8>>) {
    if nl == 0 {
        return;
    }
    let reduced: Vec<Vec<u8>> = form.iter().map(|col| s.reduce(f, col)).collect();
    let dim = s.ambient();
    for a in 0..dim {
        let row: Vec<u8> = (0..nl).map(|l| reduced[l][a]).collect();
        if !linalg::is_zero(&row) {
            rows.push(row);
        }
    }
}

#[derive(Debug, Clone)]
pub struct Generator {
    pub pos: usize,
    /// Index among the generators chosen at the same position.
    pub local_index: usize,
    pub vec: Vec<u8>,
    pub target: usize,
    pub offset: usize,
    pub len: usize,
}

#[derive(Debug, Clone)]
pub struct SourceBlock {
    pub pos: usize,
    pub target: usize,
    pub zbasis: Vec<Vec<u8>>,
    pub z_forms: Vec<Form>,
}

/// Everything needed to evaluate `d_r` on one state for any admissible
/// choice of generator values.
#[derive(Debug, Clone)]
pub struct PageAnalysis {
    pub gens: Vec<Generator>,
    pub nl: usize,
    pub constraints: Vec<Vec<u8>>,
    pub sources: Vec<SourceBlock>,
}

/// `(source row, target row)` pairs for page `r`.
pub fn active_rows(r: usize) -> Vec<(usize, usize)> {
    FIBER_ROWS
        .iter()
        .filter_map(|&n| {
            let nt = (n + 1).checked_sub(r)?;
            FIBER_ROWS.contains(&nt).then_some((n, nt))
        })
        .collect()
}

fn unit_vec() -> Vec<u8> {
    vec![1]
}

pub fn analyze(layout: &Layout, state: &PageState, r: usize) -> PageAnalysis {
    let f = &layout.f;
    let alg = &layout.alg;
    let mut gens: Vec<Generator> = Vec::new();
    let mut quotient: HashMap<usize, Vec<Vec<u8>>> = HashMap::new();
    let mut nl = 0;

    // spanning products per source position: (monomial, generator index, vector)
    let mut spans: Vec<(usize, usize, Vec<(Monomial, usize)>, Vec<Vec<u8>>)> = Vec::new();

    for (n, _) in active_rows(r) {
        let mut row_gens: Vec<usize> = Vec::new();
        for m in 0..=WINDOW - n {
            let pos = layout.index_of((m, n)).expect("window position");
            let Some(target) = layout.target((m, n), r) else {
                continue;
            };
            let mut labels = Vec::new();
            let mut vecs = Vec::new();
            for &gi in &row_gens {
                let g = &gens[gi];
                let gm = layout.positions[g.pos].0;
                for &b in alg.basis(m - gm) {
                    vecs.push(alg.mul_vec(f, b, &g.vec, gm, false));
                    labels.push((b, gi));
                }
            }
            let mut covered = Subspace::span(f, layout.dim_at(pos), &vecs).sum(f, &state.b[pos]);
            let mut local_index = 0;
            for z in state.z[pos].basis() {
                if covered.insert(f, z) {
                    let q = quotient.entry(target).or_insert_with(|| {
                        let mut acc = state.b[target].clone();
                        state.z[target]
                            .basis()
                            .iter()
                            .filter(|v| acc.insert(f, v))
                            .cloned()
                            .collect()
                    });
                    let len = q.len();
                    let gi = gens.len();
                    gens.push(Generator {
                        pos,
                        local_index,
                        vec: z.clone(),
                        target,
                        offset: nl,
                        len,
                    });
                    nl += len;
                    local_index += 1;
                    row_gens.push(gi);
                    vecs.push(z.clone());
                    labels.push((Monomial::ONE, gi));
                }
            }
            spans.push((pos, target, labels, vecs));
        }
    }

    let gen_form = |g: &Generator| -> Form {
        let tdim = layout.dim_at(g.target);
        let mut form = zero_form(nl, tdim);
        for (j, q) in quotient[&g.target].iter().enumerate() {
            form[g.offset + j] = q.clone();
        }
        form
    };

    let mut constraints = Vec::new();
    let mut sources = Vec::new();
    for (pos, target, labels, vecs) in spans {
        let tdim = layout.dim_at(target);
        // d(b·g) = (-1)^|b| b·d(g)
        let forms: Vec<Form> = labels
            .iter()
            .map(|&(b, gi)| {
                let g = &gens[gi];
                let gt = layout.positions[g.target].0;
                let negate = b.degree() % 2 == 1;
                gen_form(g)
                    .iter()
                    .map(|col| alg.mul_vec(f, b, col, gt, negate))
                    .collect()
            })
            .collect();
        debug_assert!(forms.iter().all(|fm| fm.iter().all(|c| c.len() == tdim)));
        for fm in &forms {
            membership_rows(f, fm, &state.z[target], nl, &mut constraints);
        }
        let mut all = vecs.clone();
        all.extend(state.b[pos].basis().iter().cloned());
        for rel in relations(f, &all) {
            let mut acc = zero_form(nl, tdim);
            for (c, fm) in rel.iter().zip(&forms) {
                form_axpy(f, &mut acc, *c, fm);
            }
            membership_rows(f, &acc, &state.b[target], nl, &mut constraints);
        }
        let zbasis: Vec<Vec<u8>> = state.z[pos].basis().to_vec();
        let z_forms = zbasis
            .iter()
            .map(|z| {
                let coeffs = linalg::express(f, &all, z).expect("generators span Z_r");
                let mut acc = zero_form(nl, tdim);
                for (c, fm) in coeffs.iter().zip(&forms) {
                    form_axpy(f, &mut acc, *c, fm);
                }
                acc
            })
            .collect();
        sources.push(SourceBlock {
            pos,
            target,
            zbasis,
            z_forms,
        });
    }

    // Leibniz tie on the product class
    let idx = |pos| layout.index_of(pos).expect("window position");
    let (ix, iy, ixy) = (idx(X), idx(Y), idx(XY));
    let survives = |i: usize| state.z[i].contains(f, &unit_vec());
    let gen_at = |i: usize| gens.iter().find(|g| g.pos == i && g.local_index == 0);
    if survives(ix) && survives(iy) && survives(ixy) {
        if let Some(gxy) = gen_at(ixy) {
            let target = gxy.target;
            let tdim = layout.dim_at(target);
            let mut tie = gen_form(gxy);
            // d(x)·y contributes when d(x) lands in the bottom row
            if let Some(gx) = gen_at(ix) {
                if layout.positions[gx.target].1 == 0 {
                    form_axpy(f, &mut tie, f.neg(1), &gen_form(gx));
                }
            }
            // x·d(y) = (-1)^(3r) d(y)·x when d(y) lands in the bottom row
            if let Some(gy) = gen_at(iy) {
                if layout.positions[gy.target].1 == 0 {
                    let sign = if (3 * r) % 2 == 1 { f.neg(1) } else { 1 };
                    // tie = v_xy - (d(x) y - x d(y)) = v_xy - d(x) y + sign d(y) x
                    form_axpy(f, &mut tie, sign, &gen_form(gy));
                }
            }
            debug_assert!(tie.iter().all(|c| c.len() == tdim));
            membership_rows(f, &tie, &state.b[target], nl, &mut constraints);
        }
    }

    PageAnalysis {
        gens,
        nl,
        constraints,
        sources,
    }
}

/// Precomputed images of every `Z_r` basis vector under each basis
/// element of the admissible space `V`.
pub struct ChoiceSpace {
    pub basis: Vec<Vec<u8>>,
    /// Per source block: target dimension and, for each `Z_r` basis vector,
    /// its image under each basis vector of the space.
    images: Vec<(usize, Vec<Vec<Vec<u8>>>)>,
}

impl ChoiceSpace {
    pub fn new(layout: &Layout, a: &PageAnalysis) -> Self {
        let f = &layout.f;
        let basis = null_space(f, &a.constraints, a.nl);
        let images = a
            .sources
            .iter()
            .map(|s| {
                let tdim = layout.dim_at(s.target);
                let per_z = s
                    .z_forms
                    .iter()
                    .map(|fm| basis.iter().map(|v| eval_form(f, fm, v, tdim)).collect())
                    .collect();
                (tdim, per_z)
            })
            .collect();
        ChoiceSpace { basis, images }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Images of each source block's `Z_r` basis for the choice with
    /// coordinates `coeffs` in this basis.
    /// Upper bound on the rank of each block's differential: the smaller
    /// of the source dimension and the span of every possible image.
    pub fn rank_bounds(&self, f: &Fp, a: &PageAnalysis, state: &PageState) -> Vec<usize> {
        self.images
            .iter()
            .zip(&a.sources)
            .map(|((tdim, block), s)| {
                let modulo = &state.b[s.target];
                let mut span = Subspace::zero(*tdim);
                for v in block.iter().flatten() {
                    span.insert(f, &modulo.reduce(f, v));
                }
                span.dim().min(s.zbasis.len())
            })
            .collect()
    }

    pub fn images_for(&self, f: &Fp, coeffs: &[u8]) -> Vec<Vec<Vec<u8>>> {
        (0..self.images.len())
            .map(|b| self.block_images(f, b, coeffs))
            .collect()
    }

    /// Images of block `b`'s `Z_r` basis for the choice `coeffs`.
    pub fn block_images(&self, f: &Fp, b: usize, coeffs: &[u8]) -> Vec<Vec<u8>> {
        let (tdim, block) = &self.images[b];
        block
            .iter()
            .map(|per_basis| {
                let mut out = vec![0u8; *tdim];
                for (c, v) in coeffs.iter().zip(per_basis) {
                    f.axpy(&mut out, *c, v);
                }
                out
            })
            .collect()
    }

    /// Block `b`'s images modulo `B_r` of the target as a matrix whose
    /// columns are the basis vectors of the space.
    pub fn block_rows(
        &self,
        f: &Fp,
        a: &PageAnalysis,
        state: &PageState,
        b: usize,
    ) -> Vec<Vec<u8>> {
        let (tdim, block) = &self.images[b];
        let modulo = &state.b[a.sources[b].target];
        let k = self.dim();
        let reduced: Vec<Vec<Vec<u8>>> = block
            .iter()
            .map(|per_basis| per_basis.iter().map(|v| modulo.reduce(f, v)).collect())
            .collect();
        let mut rows = Vec::new();
        for per_basis in &reduced {
            for t in 0..*tdim {
                let row: Vec<u8> = (0..k).map(|j| per_basis[j][t]).collect();
                if !linalg::is_zero(&row) {
                    rows.push(row);
                }
            }
        }
        rows
    }
}

/// Effect of `d_r` on one source block: new `Z` at the source, new `B` at
/// the target and the rank.
#[derive(Debug, Clone)]
pub struct BlockResult {
    pub z: Subspace,
    pub b: Subspace,
    pub rank: usize,
}

pub fn apply_block(
    layout: &Layout,
    a: &PageAnalysis,
    state: &PageState,
    block: usize,
    images: &[Vec<u8>],
) -> BlockResult {
    let f = &layout.f;
    let s = &a.sources[block];
    let (kernel, image) = kernel_and_image(f, &s.zbasis, images, &state.b[s.target]);
    let z = Subspace::span(f, layout.dim_at(s.pos), &kernel).sum(f, &state.b[s.pos]);
    let mut b = state.b[s.target].clone();
    for v in &image {
        b.insert(f, v);
    }
    BlockResult {
        z,
        b,
        rank: image.len(),
    }
}

/// Rank of `d_r` on one source block together with the state after it.
pub struct Step {
    pub next: PageState,
    pub ranks: Vec<(usize, usize, usize)>,
}

pub fn apply(
    layout: &Layout,
    a: &PageAnalysis,
    state: &PageState,
    images: &[Vec<Vec<u8>>],
) -> Step {
    let mut next = state.clone();
    let mut ranks = Vec::with_capacity(a.sources.len());
    for (i, (s, imgs)) in a.sources.iter().zip(images).enumerate() {
        let res = apply_block(layout, a, state, i, imgs);
        next.z[s.pos] = res.z;
        next.b[s.target] = res.b;
        ranks.push((s.pos, s.target, res.rank));
    }
    debug_assert!(next
        .b
        .iter()
        .zip(&next.z)
        .all(|(b, z)| b.is_subspace_of(&layout.f, z)));
    Step { next, ranks }
}

/// Images for an explicit unknown vector `lambda` (not necessarily in `V`).
pub fn images_for_lambda(layout: &Layout, a: &PageAnalysis, lambda: &[u8]) -> Vec<Vec<Vec<u8>>> {
    a.sources
        .iter()
        .map(|s| {
            let tdim = layout.dim_at(s.target);
            s.z_forms
                .iter()
                .map(|fm| eval_form(&layout.f, fm, lambda, tdim))
                .collect()
        })
        .collect()
}

/// Whether `lambda` satisfies every constraint of the page.
pub fn admissible(layout: &Layout, a: &PageAnalysis, lambda: &[u8]) -> bool {
    let f = &layout.f;
    a.constraints.iter().all(|row| {
        row.iter()
            .zip(lambda)
            .fold(0u8, |acc, (&x, &l)| f.add(acc, f.mul(x, l)))
            == 0
    })
}
