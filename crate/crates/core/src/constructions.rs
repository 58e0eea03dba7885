//! Algebras built from other algebras: sub-adjacent brackets, twists,
//! derivation and Rota-Baxter products, twisted forms, centers and the lower
//! central series.
//!
//! Every construction re-checks its hypotheses and returns
//! [`Error::Precondition`] naming the first one that fails.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{
    add_signed, axpy, frac, invert, kernel_graded, scale_vec, zeros, Matrix, Scalar, Subspace, Vector,
};
use crate::superalgebra::{
    commutes_with_alpha, is_derivation, is_hom_associative, is_hom_lie, is_hom_novikov, is_involutive,
    is_multiplicative, is_rota_baxter, is_supercommutative, BilinearForm, EvenMap, SuperAlgebra, Verdict,
};

/// A superalgebra whose product is read as a Hom-Lie bracket.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomLieAlgebra(SuperAlgebra);

impl HomLieAlgebra {
    /// Wraps `bracket` after checking the Hom-Lie axioms.
    pub fn new(bracket: SuperAlgebra) -> Result<Self> {
        require("hom-lie algebra", "hom-lie", is_hom_lie(&bracket))?;
        Ok(HomLieAlgebra(bracket))
    }

    pub fn algebra(&self) -> &SuperAlgebra {
        &self.0
    }

    pub fn into_algebra(self) -> SuperAlgebra {
        self.0
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.0.multiply(x, y)
    }
}

fn require(op: &'static str, predicate: &str, verdict: Verdict) -> Result<()> {
    match verdict {
        Verdict::Holds => Ok(()),
        Verdict::Fails(v) => Err(Error::Precondition {
            op,
            predicate: predicate.to_string(),
            detail: v.to_string(),
        }),
    }
}

/// Structure tensor of the product given on basis pairs.
fn tensor_from(a: &SuperAlgebra, mut product: impl FnMut(usize, usize) -> Vector) -> Vec<Scalar> {
    let n = a.dim();
    let mut mul = zeros(n * n * n);
    for i in 0..n {
        for j in 0..n {
            mul[(i * n + j) * n..(i * n + j + 1) * n].clone_from_slice(&product(i, j));
        }
    }
    mul
}

fn build(a: &SuperAlgebra, mul: Vec<Scalar>, alpha: Matrix) -> Result<SuperAlgebra> {
    SuperAlgebra::new(a.space().clone(), mul, alpha)
}

/// `[e_i, e_j] = e_i e_j − (−1)^{|i||j|} e_j e_i`
fn commutator(a: &SuperAlgebra, i: usize, j: usize) -> Vector {
    let mut r = a.basis_product(i, j).to_vec();
    add_signed(&mut r, !a.parity(i).koszul(a.parity(j)), a.basis_product(j, i));
    r
}

/// The sub-adjacent bracket `[x,y] = xy − (−1)^{|x||y|} yx` of a Hom-Novikov superalgebra, same twist.
pub fn sub_adjacent_hom_lie(a: &SuperAlgebra) -> Result<HomLieAlgebra> {
    require("sub_adjacent_hom_lie", "hom-novikov", is_hom_novikov(a))?;
    let mul = tensor_from(a, |i, j| commutator(a, i, j));
    let bracket = build(a, mul, a.alpha().clone())?;
    match is_hom_lie(&bracket) {
        Verdict::Holds => Ok(HomLieAlgebra(bracket)),
        Verdict::Fails(v) => Err(Error::Invariant(format!("sub-adjacent bracket: {v}"))),
    }
}

/// `x ∗ y = α(xy)` with the identity twist; requires `α² = id`.
pub fn involutive_untwist(a: &SuperAlgebra) -> Result<SuperAlgebra> {
    if !is_involutive(a) {
        return Err(Error::precondition("involutive_untwist", "alpha^2 = id"));
    }
    let mul = tensor_from(a, |i, j| a.apply_alpha(a.basis_product(i, j)));
    build(a, mul, Matrix::identity(a.dim()))
}

/// `[x,y]_{α⁻¹} = α⁻¹([x,y])` of the sub-adjacent bracket, with the identity twist; requires `α` invertible.
pub fn alpha_inverse_bracket(a: &SuperAlgebra) -> Result<SuperAlgebra> {
    let inv = invert(a.alpha()).ok_or_else(|| Error::precondition("alpha_inverse_bracket", "alpha invertible"))?;
    let mul = tensor_from(a, |i, j| inv.mul_vec(&commutator(a, i, j)));
    build(a, mul, Matrix::identity(a.dim()))
}

/// `(A, α∘μ, α²)` of a Hom-Novikov superalgebra.
pub fn yau_square_twist(a: &SuperAlgebra) -> Result<SuperAlgebra> {
    require("yau_square_twist", "hom-novikov", is_hom_novikov(a))?;
    let mul = tensor_from(a, |i, j| a.apply_alpha(a.basis_product(i, j)));
    build(a, mul, a.alpha().pow(2))
}

fn require_derivation_setup(op: &'static str, a: &SuperAlgebra, d: &EvenMap) -> Result<()> {
    require(op, "hom-associative", is_hom_associative(a))?;
    require(op, "supercommutative", is_supercommutative(a))?;
    require(op, "derivation", is_derivation(a, d)?)?;
    require(op, "commutes with alpha", commutes_with_alpha(a, d)?)
}

/// `x ∗ y = x D(y)` on a Hom-supercommutative superalgebra with an even derivation `D` commuting with `α`.
pub fn derivation_product(a: &SuperAlgebra, d: &EvenMap) -> Result<SuperAlgebra> {
    xi_product("derivation_product", a, d, &Scalar::zero())
}

/// `x ∗_ξ y = x D(y) + ξ xy`, under the same hypotheses as [`derivation_product`].
pub fn xi_family(a: &SuperAlgebra, d: &EvenMap, xi: &Scalar) -> Result<SuperAlgebra> {
    xi_product("xi_family", a, d, xi)
}

fn xi_product(op: &'static str, a: &SuperAlgebra, d: &EvenMap, xi: &Scalar) -> Result<SuperAlgebra> {
    require_derivation_setup(op, a, d)?;
    let mul = tensor_from(a, |i, j| {
        let mut r = a.mul(&a.basis(i), &d.matrix().column(j));
        axpy(&mut r, xi, a.basis_product(i, j));
        r
    });
    build(a, mul, a.alpha().clone())
}

/// `x ∗ y = α(x D(y))` where the product of `a` is associative and supercommutative,
/// `α` is an even algebra morphism and `D` an even derivation commuting with `α`.
pub fn twisted_derivation_product(a: &SuperAlgebra, d: &EvenMap) -> Result<SuperAlgebra> {
    const OP: &str = "twisted_derivation_product";
    let untwisted = a.with_alpha(Matrix::identity(a.dim()))?;
    require(OP, "associative", is_hom_associative(&untwisted))?;
    require(OP, "supercommutative", is_supercommutative(a))?;
    require(OP, "alpha multiplicative", is_multiplicative(a))?;
    require(OP, "derivation", is_derivation(a, d)?)?;
    require(OP, "commutes with alpha", commutes_with_alpha(a, d)?)?;
    let mul = tensor_from(a, |i, j| a.apply_alpha(&a.mul(&a.basis(i), &d.matrix().column(j))));
    build(a, mul, a.alpha().clone())
}

/// `x ∘ y = P(x)y + xP(y) + λxy` for a Rota-Baxter operator `P` of weight `λ` commuting with `α`.
pub fn rota_baxter_product(a: &SuperAlgebra, p: &EvenMap, lambda: &Scalar) -> Result<SuperAlgebra> {
    const OP: &str = "rota_baxter_product";
    require(OP, "hom-novikov", is_hom_novikov(a))?;
    require(OP, "rota-baxter", is_rota_baxter(a, p, lambda)?)?;
    require(OP, "commutes with alpha", commutes_with_alpha(a, p)?)?;
    let mul = tensor_from(a, |i, j| {
        let (pi, pj) = (p.matrix().column(i), p.matrix().column(j));
        let mut r = a.mul(&pi, &a.basis(j));
        add_signed(&mut r, false, &a.mul(&a.basis(i), &pj));
        axpy(&mut r, lambda, a.basis_product(i, j));
        r
    });
    build(a, mul, a.alpha().clone())
}

/// `B_{αⁿ}(x, y) = B(αⁿ(x), y)`, Gram matrix `(αⁿ)ᵀ G`.
pub fn form_twist(b: &BilinearForm, alpha: &EvenMap, n: u32) -> Result<BilinearForm> {
    if alpha.space() != b.space() {
        return Err(Error::Dimension("form and map live on different graded spaces".into()));
    }
    if n == 0 {
        return Err(Error::Input("form twist power must be positive".into()));
    }
    BilinearForm::new(b.space().clone(), alpha.matrix().pow(n).transpose().mul(b.gram()))
}

/// Common kernel of the maps `x ↦ op(x, e_j)` for every basis vector `e_j`.
fn annihilator(a: &SuperAlgebra, both_sides: bool) -> Subspace {
    let n = a.dim();
    let mut rows = Vec::new();
    for j in 0..n {
        // column i of the right multiplication by e_j is e_i·e_j
        let right = Matrix::from_fn(n, n, |k, i| a.structure_constant(i, j, k).clone());
        rows.extend(right.to_rows());
        if both_sides {
            let left = Matrix::from_fn(n, n, |k, i| a.structure_constant(j, i, k).clone());
            rows.extend(left.to_rows());
        }
    }
    let m = if rows.is_empty() { Matrix::zeros(0, n) } else { Matrix::from_rows(rows).expect("rows share width n") };
    kernel_graded(a.space(), &m).expect("multiplication by basis vectors is homogeneous")
}

/// `Z(A) = {x | xy = yx = 0 for all y}`
pub fn center(a: &SuperAlgebra) -> Subspace {
    annihilator(a, true)
}

/// `C(L) = {x | [x, y] = 0 for all y}`
pub fn lie_center(l: &HomLieAlgebra) -> Subspace {
    annihilator(l.algebra(), false)
}

/// `[L, S] = span{[x, s] | x ∈ L, s ∈ S}`.
fn bracket_with(l: &SuperAlgebra, s: &Subspace) -> Subspace {
    let mut vectors = Vec::new();
    for i in 0..l.dim() {
        for v in s.basis() {
            vectors.push(l.mul(&l.basis(i), v));
        }
    }
    Subspace::span(l.space(), &vectors)
}

/// `A⁰ = A, Aⁱ = [A, Aⁱ⁻¹]` for `i ≤ max_i`. The chain ends at the first zero term,
/// or before the first term equal to its predecessor.
pub fn lower_central_series(l: &HomLieAlgebra, max_i: usize) -> Vec<Subspace> {
    let mut chain = vec![Subspace::whole(l.algebra().space())];
    while chain.len() <= max_i {
        let last = chain.last().expect("chain starts non-empty");
        if last.is_zero() {
            break;
        }
        let next = bracket_with(l.algebra(), last);
        if next.same_as(last) {
            break;
        }
        chain.push(next);
    }
    chain
}

/// `A² = [A, [A, A]] = 0`; abelian brackets qualify.
pub fn is_two_step_nilpotent(l: &HomLieAlgebra) -> bool {
    let a = l.algebra();
    let a1 = bracket_with(a, &Subspace::whole(a.space()));
    bracket_with(a, &a1).is_zero()
}

/// Smallest `i` with `Aⁱ = 0`, if the series reaches zero.
pub fn nilpotency_step(l: &HomLieAlgebra) -> Option<usize> {
    let chain = lower_central_series(l, l.algebra().dim() + 1);
    let last = chain.last().expect("chain starts non-empty");
    last.is_zero().then(|| chain.len() - 1)
}

/// `xy = ½[x, y]` on a 2-step nilpotent Hom-Lie superalgebra, same twist.
pub fn half_bracket_algebra(l: &HomLieAlgebra) -> Result<SuperAlgebra> {
    if !is_two_step_nilpotent(l) {
        return Err(Error::precondition("half_bracket_algebra", "two-step nilpotent"));
    }
    let a = l.algebra();
    let half = frac(1, 2);
    let mul = tensor_from(a, |i, j| scale_vec(&half, a.basis_product(i, j)));
    build(a, mul, a.alpha().clone())
}
