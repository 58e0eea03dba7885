//! Seeded random generators of valid inputs: associative supercommutative
//! seeds, Hom-supercommutative algebras with derivations, Hom-Novikov
//! superalgebras from several recipes, Rota-Baxter operators, quadratic
//! Hom-Novikov superalgebras and valid truncated deformations.
//!
//! Random Hom-Novikov tensors are far too sparse to find by rejection, so every
//! generator starts from a structured family and then applies constructions and
//! a random even change of basis.

use std::sync::Arc;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cohomology::{cochain_basis, Cochain};
use crate::constructions::{derivation_product, rota_baxter_product, twisted_derivation_product, xi_family, yau_square_twist};
use crate::deformation::{apply_equivalence, EquivalenceTransform, TruncatedDeformation};
use crate::exactlin::{
    frac, height, int, kernel_basis, sub_vec, zeros, GradedSpace, Matrix, Parity, Scalar, Vector,
};
use crate::superalgebra::{bilinear, BilinearForm, EvenMap, SuperAlgebra};

/// Largest numerator or denominator accepted in generated structure constants and twisting maps.
pub const ENTRY_BOUND: i64 = 5;

/// How a sampled Hom-Novikov superalgebra was built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Recipe {
    ZeroProduct,
    DerivationProduct,
    XiFamily,
    TwistedDerivationProduct,
    YauSquare,
    DirectSum,
    RotaBaxter,
}

/// An algebra with a Rota-Baxter operator commuting with its twist.
#[derive(Clone, Debug)]
pub struct RotaBaxterSetup {
    pub algebra: SuperAlgebra,
    pub operator: EvenMap,
    pub weight: Scalar,
}

/// Deterministic sampler over a ChaCha stream.
pub struct Sampler {
    rng: ChaCha8Rng,
    max_dim: usize,
}

fn basis_tensor(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Vec<Scalar> {
    let mut mul = zeros(dim * dim * dim);
    for &(i, j, k, c) in entries {
        mul[(i * dim + j) * dim + k] = int(c);
    }
    mul
}

/// Solutions of a homogeneous linear system given by the residual of each unknown's unit vector.
fn linear_solutions(unknowns: usize, residual: impl Fn(usize) -> Vector) -> Vec<Vector> {
    if unknowns == 0 {
        return Vec::new();
    }
    let columns: Vec<Vector> = (0..unknowns).map(residual).collect();
    let rows = columns[0].len();
    if rows == 0 {
        return (0..unknowns).map(|i| crate::exactlin::unit(unknowns, i)).collect();
    }
    kernel_basis(&Matrix::from_columns(rows, &columns).expect("residuals share a length"))
}

/// Positions `(row, col)` of the even blocks of an `n × n` map on `space`.
fn even_slots(space: &GradedSpace) -> Vec<(usize, usize)> {
    let n = space.dim();
    (0..n)
        .flat_map(|r| (0..n).map(move |c| (r, c)))
        .filter(|&(r, c)| space.parity(r) == space.parity(c))
        .collect()
}

fn map_from_slots(n: usize, slots: &[(usize, usize)], v: &[Scalar]) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for (&(r, c), x) in slots.iter().zip(v) {
        m[(r, c)] = x.clone();
    }
    m
}

fn commutator_residual(alpha: &Matrix, m: &Matrix) -> Vector {
    alpha.mul(m).sub(&m.mul(alpha)).entries().to_vec()
}

/// Even maps commuting with the twist of `a`.
pub fn alpha_commutant(a: &SuperAlgebra) -> Vec<Matrix> {
    let n = a.dim();
    let slots = even_slots(a.space());
    linear_solutions(slots.len(), |s| {
        let m = map_from_slots(n, &slots, &crate::exactlin::unit(slots.len(), s));
        commutator_residual(a.alpha(), &m)
    })
    .iter()
    .map(|v| map_from_slots(n, &slots, v))
    .collect()
}

/// Even derivations of `a` commuting with its twist.
pub fn alpha_derivations(a: &SuperAlgebra) -> Vec<Matrix> {
    let n = a.dim();
    let slots = even_slots(a.space());
    linear_solutions(slots.len(), |s| {
        let d = map_from_slots(n, &slots, &crate::exactlin::unit(slots.len(), s));
        let mut r = commutator_residual(a.alpha(), &d);
        for i in 0..n {
            for j in 0..n {
                let lhs = d.mul_vec(a.basis_product(i, j));
                let rhs1 = a.mul(&d.column(i), &a.basis(j));
                let rhs2 = a.mul(&a.basis(i), &d.column(j));
                r.extend(sub_vec(&sub_vec(&lhs, &rhs1), &rhs2));
            }
        }
        r
    })
    .iter()
    .map(|v| map_from_slots(n, &slots, v))
    .collect()
}

fn within_bound(a: &SuperAlgebra) -> bool {
    let h = height(a.structure_tensor().iter().chain(a.alpha().entries()));
    h <= ENTRY_BOUND.into()
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), max_dim: 4 }
    }

    /// Upper bound on the dimension of sampled algebras (at least 1).
    pub fn with_max_dim(mut self, max_dim: usize) -> Self {
        self.max_dim = max_dim.max(1);
        self
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    /// `p/q` with `|p| ≤ bound` and `q ∈ {1, 2}`, mostly integers.
    pub fn scalar(&mut self, bound: i64) -> Scalar {
        let p = self.int_in(-bound, bound);
        let q = if self.coin(0.25) { 2 } else { 1 };
        frac(p, q)
    }

    fn nonzero_scalar(&mut self, bound: i64) -> Scalar {
        loop {
            let s = self.scalar(bound);
            if !s.is_zero() {
                return s;
            }
        }
    }

    pub fn graded_space(&mut self, max_dim: usize) -> GradedSpace {
        let dim = self.rng.gen_range(1..=max_dim.max(1));
        let even = self.rng.gen_range(0..=dim);
        GradedSpace::from_counts(even, dim - even)
    }

    /// Random even map with small entries.
    pub fn even_matrix(&mut self, space: &GradedSpace, bound: i64) -> Matrix {
        let n = space.dim();
        let mut m = Matrix::zeros(n, n);
        for (r, c) in even_slots(space) {
            m[(r, c)] = self.scalar(bound);
        }
        m
    }

    /// Invertible even map: unit upper and lower triangular factors times a diagonal of ±1, ±2.
    pub fn invertible_even_matrix(&mut self, space: &GradedSpace) -> Matrix {
        let n = space.dim();
        let mut upper = Matrix::identity(n);
        for (r, c) in even_slots(space) {
            if r < c && self.coin(0.4) {
                upper[(r, c)] = int(self.int_in(-1, 1));
            }
        }
        let mut lower = Matrix::identity(n);
        for (r, c) in even_slots(space) {
            if r > c && self.coin(0.3) {
                lower[(r, c)] = int(self.int_in(-1, 1));
            }
        }
        let diag: Vec<Scalar> = (0..n)
            .map(|_| {
                let v = *[1, -1, 2, 1, -1].get(self.rng.gen_range(0..5)).unwrap();
                int(v)
            })
            .collect();
        upper.mul(&lower).mul(&Matrix::diagonal(&diag))
    }

    fn small_combination(&mut self, basis: &[Matrix], n: usize, bound: i64) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for b in basis {
            let c = int(self.int_in(-bound, bound));
            if !c.is_zero() {
                m = m.add(&b.scale(&c));
            }
        }
        m
    }

    /// Associative supercommutative algebra with a multiplicative even twist,
    /// as a unital family or its augmentation ideal.
    pub fn seed_algebra(&mut self) -> SuperAlgebra {
        loop {
            let a = self.seed_candidate();
            if a.dim() <= self.max_dim && within_bound(&a) {
                return a;
            }
        }
    }

    fn seed_candidate(&mut self) -> SuperAlgebra {
        let unital = match self.rng.gen_range(0..5) {
            0 => self.exterior_one(),
            1 => self.exterior_two(),
            2 => self.truncated_polynomial(),
            3 => self.dual_numbers_exterior(),
            _ => return self.zero_product(),
        };
        if unital.dim() > 1 && self.coin(0.3) {
            return augmentation_ideal(&unital);
        }
        if self.coin(0.2) {
            let other = self.exterior_one();
            return SuperAlgebra::direct_sum(&unital, &other).0;
        }
        unital
    }

    /// Zero product with a random even twist.
    pub fn zero_product(&mut self) -> SuperAlgebra {
        let sp = self.graded_space(self.max_dim);
        let alpha = self.even_matrix(&sp, 2);
        SuperAlgebra::zero(sp).with_alpha(alpha).expect("even twist")
    }

    /// `[1 | θ]`, `α(θ) = bθ`.
    fn exterior_one(&mut self) -> SuperAlgebra {
        let sp = GradedSpace::from_counts(1, 1);
        let b = self.scalar(2);
        SuperAlgebra::new(sp, basis_tensor(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]), Matrix::diagonal(&[int(1), b]))
            .expect("exterior algebra on one generator")
    }

    /// `[1, θ₁θ₂ | θ₁, θ₂]`, `α(θ) = Bθ`, `α(θ₁θ₂) = det B · θ₁θ₂`.
    fn exterior_two(&mut self) -> SuperAlgebra {
        let sp = GradedSpace::from_counts(2, 2);
        let mul = basis_tensor(
            4,
            &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (0, 2, 2, 1), (2, 0, 2, 1), (0, 3, 3, 1), (3, 0, 3, 1), (2, 3, 1, 1), (3, 2, 1, -1)],
        );
        let b: Vec<Scalar> = (0..4).map(|_| int(self.int_in(-1, 2))).collect();
        let det = &b[0] * &b[3] - &b[1] * &b[2];
        let mut alpha = Matrix::zeros(4, 4);
        alpha[(0, 0)] = int(1);
        alpha[(1, 1)] = det;
        alpha[(2, 2)] = b[0].clone();
        alpha[(2, 3)] = b[1].clone();
        alpha[(3, 2)] = b[2].clone();
        alpha[(3, 3)] = b[3].clone();
        SuperAlgebra::new(sp, mul, alpha).expect("exterior algebra on two generators")
    }

    /// `k[x]/xⁿ`, `α(x) = q(x)` with `q(0) = 0`.
    fn truncated_polynomial(&mut self) -> SuperAlgebra {
        let n = self.rng.gen_range(1..=self.max_dim.min(4));
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i + j < n {
                    entries.push((i, j, i + j, 1));
                }
            }
        }
        let q: Vec<Scalar> = (0..n).map(|k| if k == 0 { int(0) } else { int(self.int_in(-1, 2)) }).collect();
        // column k of α holds the coefficients of q(x)^k mod xⁿ
        let mut alpha = Matrix::zeros(n, n);
        let mut power = zeros(n);
        power[0] = int(1);
        for k in 0..n {
            for (r, c) in power.iter().enumerate() {
                alpha[(r, k)] = c.clone();
            }
            let mut next = zeros(n);
            for (i, a) in power.iter().enumerate() {
                for (j, b) in q.iter().enumerate() {
                    if i + j < n {
                        next[i + j] += a * b;
                    }
                }
            }
            power = next;
        }
        SuperAlgebra::new(GradedSpace::even(n), basis_tensor(n, &entries), alpha).expect("truncated polynomial algebra")
    }

    /// `k[x]/x² ⊗ Λ(θ)` on `[1, x | θ, xθ]`, `α(x) = ax`, `α(θ) = bθ + c·xθ`.
    fn dual_numbers_exterior(&mut self) -> SuperAlgebra {
        let sp = GradedSpace::from_counts(2, 2);
        let mul = basis_tensor(
            4,
            &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (0, 2, 2, 1), (2, 0, 2, 1), (0, 3, 3, 1), (3, 0, 3, 1), (1, 2, 3, 1), (2, 1, 3, 1)],
        );
        let (a, b, c) = (int(self.int_in(-1, 2)), int(self.int_in(-1, 2)), int(self.int_in(-1, 1)));
        let mut alpha = Matrix::zeros(4, 4);
        alpha[(0, 0)] = int(1);
        alpha[(1, 1)] = a.clone();
        alpha[(2, 2)] = b.clone();
        alpha[(3, 2)] = c;
        alpha[(3, 3)] = a * b;
        SuperAlgebra::new(sp, mul, alpha).expect("dual numbers tensor exterior algebra")
    }

    /// `(A, α∘μ, α)` for an associative supercommutative seed: Hom-associative and supercommutative.
    pub fn hom_supercommutative(&mut self) -> SuperAlgebra {
        loop {
            let seed = self.seed_algebra();
            let mul: Vec<Scalar> = twisted_tensor(&seed);
            let a = seed.with_product(mul).expect("twisting preserves the grading");
            if within_bound(&a) {
                return a;
            }
        }
    }

    /// Random even derivation commuting with the twist (possibly zero).
    pub fn derivation(&mut self, a: &SuperAlgebra) -> EvenMap {
        let basis = alpha_derivations(a);
        let mut m = self.small_combination(&basis, a.dim(), 2);
        for _ in 0..4 {
            if !m.is_zero() {
                break;
            }
            m = self.small_combination(&basis, a.dim(), 2);
        }
        EvenMap::new(a.space().clone(), m).expect("derivations are even")
    }

    /// Random even map commuting with the twist.
    pub fn commuting_map(&mut self, a: &SuperAlgebra) -> EvenMap {
        let basis = alpha_commutant(a);
        let m = self.small_combination(&basis, a.dim(), 1);
        EvenMap::new(a.space().clone(), m).expect("commutant maps are even")
    }

    /// Applies a random even change of basis, keeping the original if the entries grow too large.
    pub fn conjugate(&mut self, a: &SuperAlgebra) -> SuperAlgebra {
        for _ in 0..8 {
            let t = self.invertible_even_matrix(a.space());
            let b = a.change_basis(&t).expect("invertible even change of basis");
            if within_bound(&b) {
                return b;
            }
        }
        a.clone()
    }

    pub fn hom_novikov(&mut self) -> SuperAlgebra {
        self.hom_novikov_with_recipe().1
    }

    pub fn hom_novikov_with_recipe(&mut self) -> (Recipe, SuperAlgebra) {
        loop {
            let recipe = match self.rng.gen_range(0..10) {
                0 => Recipe::ZeroProduct,
                1 | 2 => Recipe::DerivationProduct,
                3 | 4 => Recipe::XiFamily,
                5 => Recipe::TwistedDerivationProduct,
                6 => Recipe::YauSquare,
                7 => Recipe::DirectSum,
                _ => Recipe::RotaBaxter,
            };
            let a = self.build(recipe, 2);
            if recipe != Recipe::ZeroProduct && a.is_zero_product() && self.coin(0.85) {
                continue;
            }
            if a.dim() <= self.max_dim && within_bound(&a) {
                let a = if self.coin(0.5) { self.conjugate(&a) } else { a };
                return (recipe, a);
            }
        }
    }

    /// A Hom-Novikov superalgebra from the given recipe; `depth` bounds nesting.
    pub fn build(&mut self, recipe: Recipe, depth: usize) -> SuperAlgebra {
        let inner = |s: &mut Sampler| {
            if depth == 0 {
                s.zero_product()
            } else {
                let r = match s.rng.gen_range(0..4) {
                    0 => Recipe::ZeroProduct,
                    1 => Recipe::DerivationProduct,
                    2 => Recipe::XiFamily,
                    _ => Recipe::TwistedDerivationProduct,
                };
                s.build(r, depth - 1)
            }
        };
        match recipe {
            Recipe::ZeroProduct => self.zero_product(),
            Recipe::DerivationProduct => {
                let a = self.hom_supercommutative();
                let d = self.derivation(&a);
                derivation_product(&a, &d).expect("hypotheses hold by construction")
            }
            Recipe::XiFamily => {
                let a = self.hom_supercommutative();
                let d = self.derivation(&a);
                let xi = self.scalar(2);
                xi_family(&a, &d, &xi).expect("hypotheses hold by construction")
            }
            Recipe::TwistedDerivationProduct => {
                let seed = self.seed_algebra();
                let d = self.derivation(&seed);
                twisted_derivation_product(&seed, &d).expect("hypotheses hold by construction")
            }
            Recipe::YauSquare => {
                let a = inner(self);
                yau_square_twist(&a).expect("input is Hom-Novikov")
            }
            Recipe::DirectSum => {
                let a = inner(self);
                let b = inner(self);
                SuperAlgebra::direct_sum(&a, &b).0
            }
            Recipe::RotaBaxter => {
                let s = self.rota_baxter_setup();
                rota_baxter_product(&s.algebra, &s.operator, &s.weight).expect("hypotheses hold by construction")
            }
        }
    }

    /// A Hom-Novikov superalgebra with a Rota-Baxter operator commuting with its twist:
    /// `0`, `−λ·id`, the projection onto one summand of a direct sum (weight `−1`)
    /// scaled by `s` (weight `−s`), or the complement `−λ·id − P` of any of these.
    pub fn rota_baxter_setup(&mut self) -> RotaBaxterSetup {
        let (algebra, operator, weight) = match self.rng.gen_range(0..3) {
            0 => {
                let a = self.inner_hom_novikov();
                let w = self.scalar(2);
                (a.clone(), Matrix::zeros(a.dim(), a.dim()), w)
            }
            1 => {
                let a = self.inner_hom_novikov();
                let w = self.scalar(2);
                (a.clone(), Matrix::scalar(a.dim(), &-w.clone()), w)
            }
            _ => {
                let a1 = self.inner_hom_novikov();
                let a2 = self.inner_hom_novikov();
                let (sum, origin) = SuperAlgebra::direct_sum(&a1, &a2);
                let s = self.nonzero_scalar(2);
                let diag: Vec<Scalar> = origin.iter().map(|&from_first| if from_first { s.clone() } else { int(0) }).collect();
                (sum, Matrix::diagonal(&diag), -s)
            }
        };
        let operator = if self.coin(0.3) {
            Matrix::scalar(algebra.dim(), &-weight.clone()).sub(&operator)
        } else {
            operator
        };
        RotaBaxterSetup {
            operator: EvenMap::new(algebra.space().clone(), operator).expect("diagonal and scalar maps are even"),
            algebra,
            weight,
        }
    }

    fn inner_hom_novikov(&mut self) -> SuperAlgebra {
        let saved = self.max_dim;
        self.max_dim = (saved / 2).max(1);
        let r = match self.rng.gen_range(0..3) {
            0 => Recipe::ZeroProduct,
            1 => Recipe::DerivationProduct,
            _ => Recipe::XiFamily,
        };
        let a = self.build(r, 0);
        self.max_dim = saved;
        a
    }

    /// A quadratic Hom-Novikov superalgebra `(A, μ, α, B)` with `α` invertible and
    /// `B(α(x), y) = B(x, α(y))`. `A = V ⊕ V*` with `B` the canonical pairing,
    /// products `V × V → V*` and `V*` annihilating.
    pub fn quadratic_hom_novikov(&mut self) -> (SuperAlgebra, BilinearForm) {
        loop {
            let (a, b) = self.quadratic_candidate();
            if within_bound(&a) && height(b.gram().entries()) <= ENTRY_BOUND.into() {
                return (a, b);
            }
        }
    }

    fn quadratic_candidate(&mut self) -> (SuperAlgebra, BilinearForm) {
        let half = (self.max_dim / 2).max(1);
        let v_dim = self.rng.gen_range(1..=half);
        let v_even = self.rng.gen_range(0..=v_dim);
        let v_odd = v_dim - v_even;
        let space = GradedSpace::from_counts(2 * v_even, 2 * v_odd);
        let n = space.dim();
        // canonical order [V₀, W₀, V₁, W₁]; partner[i] is the dual basis vector
        let mut in_v = vec![false; n];
        let mut partner = vec![0; n];
        for (start, count) in [(0, v_even), (2 * v_even, v_odd)] {
            for i in 0..count {
                in_v[start + i] = true;
                partner[start + i] = start + count + i;
                partner[start + count + i] = start + i;
            }
        }
        let mut gram = Matrix::zeros(n, n);
        for i in 0..n {
            if in_v[i] {
                let w = partner[i];
                gram[(i, w)] = int(1);
                gram[(w, i)] = if space.parity(i).is_odd() { int(-1) } else { int(1) };
            }
        }
        // α = T on V, its B-adjoint on W, plus a self-adjoint part V → W
        let t_v = self.quadratic_twist_on_v(&space, &in_v);
        let alpha = self.self_adjoint_twist(&space, &gram, &in_v, &partner, &t_v);
        let slots: Vec<(usize, usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| in_v[i] && in_v[j])
            .flat_map(|(i, j)| {
                let target = space.parity(i) + space.parity(j);
                space.block(target).filter(|&k| !in_v[k]).map(move |k| (i, j, k)).collect::<Vec<_>>()
            })
            .collect();
        let form = BilinearForm::new(space.clone(), gram).expect("square Gram matrix");
        let residual = |s: usize| {
            let (i, j, k) = slots[s];
            let mut mul = zeros(n * n * n);
            mul[(i * n + j) * n + k] = int(1);
            quadratic_residual(&space, &mul, &alpha, &form)
        };
        let sols = linear_solutions(slots.len(), residual);
        let mut mul = zeros(n * n * n);
        for sol in &sols {
            let c = int(self.int_in(-2, 2));
            for (&(i, j, k), x) in slots.iter().zip(sol) {
                mul[(i * n + j) * n + k] += &c * x;
            }
        }
        let a = SuperAlgebra::new(space, mul, alpha).expect("products respect the grading");
        if self.coin(0.5) {
            let t = self.invertible_even_matrix(a.space());
            let a2 = a.change_basis(&t).expect("invertible");
            let b2 = form.change_basis(&t).expect("invertible");
            return (a2, b2);
        }
        (a, form)
    }

    fn quadratic_twist_on_v(&mut self, space: &GradedSpace, in_v: &[bool]) -> Matrix {
        let n = space.dim();
        let mut t = Matrix::zeros(n, n);
        let choice = self.rng.gen_range(0..3);
        for r in 0..n {
            for c in 0..n {
                if !(in_v[r] && in_v[c]) || space.parity(r) != space.parity(c) {
                    continue;
                }
                t[(r, c)] = match choice {
                    0 => if r == c { int(1) } else { int(0) },
                    1 => if r == c { int(if self.coin(0.5) { 1 } else { -1 }) } else { int(0) },
                    _ => if r == c { int(if self.coin(0.5) { 1 } else { 2 }) } else if r < c { int(self.int_in(0, 1)) } else { int(0) },
                };
            }
        }
        t
    }

    /// Even `α` with `αᵀG = Gα`, `α(W) ⊆ W`, and `V → V` block equal to `t_v`.
    fn self_adjoint_twist(
        &mut self,
        space: &GradedSpace,
        gram: &Matrix,
        in_v: &[bool],
        partner: &[usize],
        t_v: &Matrix,
    ) -> Matrix {
        let n = space.dim();
        // particular solution: T on V, Tᵀ on W (in the dual basis)
        let mut base = t_v.clone();
        for r in 0..n {
            for c in 0..n {
                if in_v[r] && in_v[c] {
                    base[(partner[c], partner[r])] = t_v[(r, c)].clone();
                }
            }
        }
        // homogeneous part: free V → W entries subject to self-adjointness
        let slots: Vec<(usize, usize)> = even_slots(space).into_iter().filter(|&(r, c)| in_v[c] && !in_v[r]).collect();
        let sols = linear_solutions(slots.len(), |s| {
            let m = map_from_slots(n, &slots, &crate::exactlin::unit(slots.len(), s));
            m.transpose().mul(gram).sub(&gram.mul(&m)).entries().to_vec()
        });
        let mut alpha = base;
        for sol in sols {
            let c = int(self.int_in(-1, 1));
            alpha = alpha.add(&map_from_slots(n, &slots, &sol).scale(&c));
        }
        alpha
    }

    /// A random valid truncated deformation of the given order:
    /// `G_i(x, y) = x·D_i(y) + a_i·x·y` over the base `x·D₀(y)`, with every `D_i`
    /// an α-commuting derivation, optionally transported by a random equivalence.
    pub fn deformation(&mut self, order: usize) -> TruncatedDeformation {
        if self.coin(0.15) {
            return self.line_deformation(order);
        }
        let a = self.hom_supercommutative();
        let basis = alpha_derivations(&a);
        let n = a.dim();
        let d0 = self.small_combination(&basis, n, 2);
        let base = Arc::new(a.with_product(derivation_tensor(&a, &d0, &Scalar::zero())).expect("graded"));
        let terms = (0..order)
            .map(|_| {
                let di = self.small_combination(&basis, n, 1);
                let ai = self.scalar(1);
                let coeffs = derivation_tensor(&a, &di, &ai);
                Cochain::new(base.clone(), 2, Parity::Even, coeffs).expect("even products")
            })
            .collect();
        let d = TruncatedDeformation::new(base.clone(), terms).expect("even 2-cochains");
        if self.coin(0.5) {
            let phi = self.equivalence(&base, order);
            return apply_equivalence(&d, &phi).expect("same base and order");
        }
        d
    }

    /// `e·e = e` with `G_i(e, e) = c_i e`.
    fn line_deformation(&mut self, order: usize) -> TruncatedDeformation {
        let base = Arc::new(SuperAlgebra::new(GradedSpace::even(1), vec![int(1)], Matrix::identity(1)).expect("unit line"));
        let terms = (0..order)
            .map(|_| {
                let c = self.scalar(2);
                Cochain::new(base.clone(), 2, Parity::Even, vec![c]).expect("even")
            })
            .collect();
        TruncatedDeformation::new(base, terms).expect("even 2-cochains")
    }

    pub fn equivalence(&mut self, base: &Arc<SuperAlgebra>, order: usize) -> EquivalenceTransform {
        let maps = (0..order).map(|_| self.commuting_map(base)).collect();
        EquivalenceTransform::new(base.clone(), maps).expect("maps commute with alpha")
    }

    /// Random α-compatible cochain of the given arity and parity.
    pub fn cochain(&mut self, a: &Arc<SuperAlgebra>, arity: usize, parity: Parity) -> Cochain {
        let basis = cochain_basis(a, arity, parity).expect("arity in range");
        let mut out = Cochain::zero(a.clone(), arity, parity);
        for f in basis {
            let c = int(self.int_in(-2, 2));
            if !c.is_zero() {
                out = out.add(&f.scale(&c)).expect("same algebra");
            }
        }
        out
    }
}

/// `α(e_i e_j)` for every basis pair.
fn twisted_tensor(a: &SuperAlgebra) -> Vec<Scalar> {
    let n = a.dim();
    let mut mul = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            mul.extend(a.apply_alpha(a.basis_product(i, j)));
        }
    }
    mul
}

/// Tensor of `x ∗ y = x·D(y) + ξ·x·y`.
fn derivation_tensor(a: &SuperAlgebra, d: &Matrix, xi: &Scalar) -> Vec<Scalar> {
    let n = a.dim();
    let mut mul = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            let mut r = a.mul(&a.basis(i), &d.column(j));
            crate::exactlin::axpy(&mut r, xi, a.basis_product(i, j));
            mul.extend(r);
        }
    }
    mul
}

/// Spans the non-unit basis vectors (indices `1..`) of a unital seed whose twist preserves them.
fn augmentation_ideal(a: &SuperAlgebra) -> SuperAlgebra {
    let n = a.dim();
    let keep: Vec<usize> = (1..n).collect();
    let m = keep.len();
    let parities = keep.iter().map(|&i| a.parity(i)).collect();
    let space = GradedSpace::new(parities).expect("removing the unit keeps canonical order");
    let mut mul = zeros(m * m * m);
    for (ii, &i) in keep.iter().enumerate() {
        for (jj, &j) in keep.iter().enumerate() {
            for (kk, &k) in keep.iter().enumerate() {
                mul[(ii * m + jj) * m + kk] = a.structure_constant(i, j, k).clone();
            }
        }
    }
    let alpha = Matrix::from_fn(m, m, |r, c| a.alpha()[(keep[r], keep[c])].clone());
    SuperAlgebra::new(space, mul, alpha).expect("ideal is a graded subalgebra")
}

/// Residuals of multiplicativity and `B(α(x), yz) = B(xy, α(z))` for a candidate tensor.
fn quadratic_residual(space: &GradedSpace, mul: &[Scalar], alpha: &Matrix, form: &BilinearForm) -> Vector {
    let n = space.dim();
    let cols: Vec<Vector> = (0..n).map(|i| alpha.column(i)).collect();
    let prod = |i: usize, j: usize| mul[(i * n + j) * n..(i * n + j + 1) * n].to_vec();
    let mut r = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = alpha.mul_vec(&prod(i, j));
            let rhs = bilinear(mul, n, &cols[i], &cols[j]);
            r.extend(sub_vec(&lhs, &rhs));
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = form.eval(&cols[x], &prod(y, z));
                let rhs = form.eval(&prod(x, y), &cols[z]);
                r.push(lhs - rhs);
            }
        }
    }
    r
}
