//! Structure-constant superalgebras with an even twisting map, and the axiom
//! predicates for Hom-Lie, Hom-associative, Hom-left-symmetric and Hom-Novikov
//! superalgebras, derivations, Rota-Baxter operators and bilinear forms.
//!
//! Every identity involved is multilinear in its arguments, so checking it on
//! all tuples of basis vectors is equivalent to checking it on all tuples of
//! homogeneous vectors. The Koszul signs are then read off the basis parities.
//! Tuples are visited in lexicographic order and the first failure is reported
//! with its exact residual.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{
    add_signed, axpy, invert, is_even_map, is_zero_vec, rank, sub_vec, unit, zeros, GradedSpace,
    Matrix, Parity, Scalar, Vector,
};

/// `(A, μ, α)`: graded space, structure tensor `e_i·e_j = Σ_k c[i][j][k] e_k`,
/// and an even linear twisting map.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperAlgebra {
    space: GradedSpace,
    mul: Vec<Scalar>,
    alpha: Matrix,
}

impl SuperAlgebra {
    /// Validates the tensor size, grading compatibility of the product and evenness of `alpha`.
    pub fn new(space: GradedSpace, mul: Vec<Scalar>, alpha: Matrix) -> Result<Self> {
        let n = space.dim();
        if mul.len() != n * n * n {
            return Err(Error::Dimension(format!(
                "structure tensor has {} entries, expected {}",
                mul.len(),
                n * n * n
            )));
        }
        if !is_even_map(&space, &alpha)? {
            return Err(Error::Input("twisting map is not even".into()));
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !mul[(i * n + j) * n + k].is_zero()
                        && space.parity(k) != space.parity(i) + space.parity(j)
                    {
                        return Err(Error::Input(format!(
                            "structure constant c[{i}][{j}][{k}] breaks the grading: e_{i}·e_{j} has parity {} but e_{k} is {}",
                            space.parity(i) + space.parity(j),
                            space.parity(k)
                        )));
                    }
                }
            }
        }
        Ok(SuperAlgebra { space, mul, alpha })
    }

    pub fn from_entries(
        space: GradedSpace,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        alpha: Matrix,
    ) -> Result<Self> {
        let n = space.dim();
        let mut mul = zeros(n * n * n);
        for (i, j, k, c) in entries {
            if i >= n || j >= n || k >= n {
                return Err(Error::Dimension(format!(
                    "structure constant index ({i}, {j}, {k}) out of range for dimension {n}"
                )));
            }
            mul[(i * n + j) * n + k] += c;
        }
        Self::new(space, mul, alpha)
    }

    /// Zero product with identity twist.
    pub fn zero(space: GradedSpace) -> Self {
        let n = space.dim();
        SuperAlgebra {
            mul: zeros(n * n * n),
            alpha: Matrix::identity(n),
            space,
        }
    }

    pub fn with_alpha(&self, alpha: Matrix) -> Result<Self> {
        Self::new(self.space.clone(), self.mul.clone(), alpha)
    }

    pub fn with_product(&self, mul: Vec<Scalar>) -> Result<Self> {
        Self::new(self.space.clone(), mul, self.alpha.clone())
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    /// Flattened structure tensor, index `(i·n + j)·n + k`.
    pub fn structure_tensor(&self) -> &[Scalar] {
        &self.mul
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.mul[(i * n + j) * n + k]
    }

    /// Coordinates of `e_i·e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim();
        &self.mul[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// Number of nonzero structure constants.
    pub fn nonzero_constants(&self) -> usize {
        self.mul.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn is_zero_product(&self) -> bool {
        is_zero_vec(&self.mul)
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit(self.dim(), i)
    }

    /// Bilinear extension of the structure tensor.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        if x.len() != self.dim() || y.len() != self.dim() {
            return Err(Error::Dimension(format!(
                "vectors of length {} and {} in an algebra of dimension {}",
                x.len(),
                y.len(),
                self.dim()
            )));
        }
        Ok(self.mul(x, y))
    }

    pub(crate) fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        bilinear(&self.mul, self.dim(), x, y)
    }

    pub fn apply_alpha(&self, x: &[Scalar]) -> Vector {
        self.alpha.mul_vec(x)
    }

    /// The algebra in the basis `e'_j = Σ_i t[i][j] e_i`; `t` must be even and invertible.
    pub fn change_basis(&self, t: &Matrix) -> Result<SuperAlgebra> {
        let t_inv = basis_change_inverse(&self.space, t)?;
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| t.column(j)).collect();
        let mut mul = zeros(n * n * n);
        for i in 0..n {
            for j in 0..n {
                let prod = t_inv.mul_vec(&self.mul(&cols[i], &cols[j]));
                mul[(i * n + j) * n..(i * n + j + 1) * n].clone_from_slice(&prod);
            }
        }
        let alpha = t_inv.mul(&self.alpha).mul(t);
        SuperAlgebra::new(self.space.clone(), mul, alpha)
    }

    /// Direct sum `A ⊕ B` with the basis reordered canonically (evens of `A`,
    /// evens of `B`, odds of `A`, odds of `B`). Also returns, for each basis
    /// vector of the sum, whether it came from `A`.
    pub fn direct_sum(a: &SuperAlgebra, b: &SuperAlgebra) -> (SuperAlgebra, Vec<bool>) {
        let mut slots: Vec<(bool, usize)> = Vec::new();
        for p in Parity::BOTH {
            slots.extend(a.space.block(p).map(|i| (true, i)));
            slots.extend(b.space.block(p).map(|i| (false, i)));
        }
        let pos = |from_a: bool, i: usize| slots.iter().position(|&s| s == (from_a, i)).unwrap();
        let space = GradedSpace::new(
            slots
                .iter()
                .map(|&(fa, i)| if fa { a.parity(i) } else { b.parity(i) })
                .collect(),
        )
        .expect("blocks are emitted in canonical order");
        let n = space.dim();
        let mut mul = zeros(n * n * n);
        let mut alpha = Matrix::zeros(n, n);
        for (alg, fa) in [(a, true), (b, false)] {
            let m = alg.dim();
            for i in 0..m {
                for j in 0..m {
                    alpha[(pos(fa, i), pos(fa, j))] = alg.alpha[(i, j)].clone();
                    for k in 0..m {
                        mul[(pos(fa, i) * n + pos(fa, j)) * n + pos(fa, k)] =
                            alg.structure_constant(i, j, k).clone();
                    }
                }
            }
        }
        let origin = slots.iter().map(|s| s.0).collect();
        (
            SuperAlgebra::new(space, mul, alpha).expect("summands are valid superalgebras"),
            origin,
        )
    }
}

impl fmt::Display for SuperAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        let parities: Vec<&str> = self.space.parities().iter().map(|p| p.name()).collect();
        writeln!(f, "dim {n}, parities [{}]", parities.join(", "))?;
        for i in 0..n {
            for j in 0..n {
                let v = self.basis_product(i, j);
                if !is_zero_vec(v) {
                    writeln!(f, "  e{i}·e{j} = {}", format_combination(v))?;
                }
            }
        }
        write!(f, "  alpha =\n{}", self.alpha)
    }
}

/// Human-readable linear combination of basis vectors, e.g. `e0 - 3/2 e2`.
pub fn format_combination(v: &[Scalar]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Scalar::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            out.push_str(&crate::exactlin::format_scalar(&abs));
            out.push(' ');
        }
        out.push_str(&format!("e{i}"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub(crate) fn bilinear(tensor: &[Scalar], n: usize, x: &[Scalar], y: &[Scalar]) -> Vector {
    let mut out = zeros(n);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let c = xi * yj;
            axpy(&mut out, &c, &tensor[(i * n + j) * n..(i * n + j + 1) * n]);
        }
    }
    out
}

pub(crate) fn basis_change_inverse(space: &GradedSpace, t: &Matrix) -> Result<Matrix> {
    if !is_even_map(space, t)? {
        return Err(Error::Input("change of basis must be even".into()));
    }
    invert(t).ok_or_else(|| Error::Input("change of basis is singular".into()))
}

/// An even linear self-map (derivation, Rota-Baxter operator, equivalence component).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvenMap {
    space: GradedSpace,
    matrix: Matrix,
}

impl EvenMap {
    pub fn new(space: GradedSpace, matrix: Matrix) -> Result<Self> {
        if !is_even_map(&space, &matrix)? {
            return Err(Error::Input("map is not even".into()));
        }
        Ok(EvenMap { space, matrix })
    }

    pub fn zero(space: &GradedSpace) -> Self {
        EvenMap {
            matrix: Matrix::zeros(space.dim(), space.dim()),
            space: space.clone(),
        }
    }

    pub fn identity(space: &GradedSpace) -> Self {
        EvenMap {
            matrix: Matrix::identity(space.dim()),
            space: space.clone(),
        }
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Scalar]) -> Vector {
        self.matrix.mul_vec(x)
    }

    pub fn change_basis(&self, t: &Matrix) -> Result<EvenMap> {
        let t_inv = basis_change_inverse(&self.space, t)?;
        EvenMap::new(self.space.clone(), t_inv.mul(&self.matrix).mul(t))
    }
}

/// Bilinear form with Gram matrix `gram[i][j] = B(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    space: GradedSpace,
    gram: Matrix,
}

impl BilinearForm {
    pub fn new(space: GradedSpace, gram: Matrix) -> Result<Self> {
        if gram.rows() != space.dim() || gram.cols() != space.dim() {
            return Err(Error::Dimension(format!(
                "Gram matrix is {}x{} but the space has dimension {}",
                gram.rows(),
                gram.cols(),
                space.dim()
            )));
        }
        Ok(BilinearForm { space, gram })
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let gy = self.gram.mul_vec(y);
        x.iter().zip(&gy).map(|(a, b)| a * b).sum()
    }

    /// Gram matrix `tᵀ G t` in the basis given by the columns of `t`.
    pub fn change_basis(&self, t: &Matrix) -> Result<BilinearForm> {
        basis_change_inverse(&self.space, t)?;
        BilinearForm::new(self.space.clone(), t.transpose().mul(&self.gram).mul(t))
    }
}

/// First basis tuple at which an identity fails, with the exact residual
/// `lhs - rhs` (a vector, or a single scalar for scalar-valued identities).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: String,
    pub tuple: Vec<usize>,
    pub residual: Vector,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tuple: Vec<String> = self.tuple.iter().map(|i| format!("e{i}")).collect();
        let residual: Vec<String> = self.residual.iter().map(crate::exactlin::format_scalar).collect();
        write!(
            f,
            "{} fails at ({}); residual [{}]",
            self.identity,
            tuple.join(", "),
            residual.join(", ")
        )
    }
}

/// Outcome of an axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
#[must_use]
pub enum Verdict {
    Holds,
    Fails(Violation),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(v) => Some(v),
        }
    }

    /// Conjunction that stops at the first failure.
    pub fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Holds => next(),
            fail => fail,
        }
    }

    pub(crate) fn fail(identity: &str, tuple: Vec<usize>, residual: Vector) -> Verdict {
        Verdict::Fails(Violation {
            identity: identity.to_string(),
            tuple,
            residual,
        })
    }
}

pub(crate) fn over_pairs(n: usize, identity: &str, mut residual: impl FnMut(usize, usize) -> Vector) -> Verdict {
    for i in 0..n {
        for j in 0..n {
            let r = residual(i, j);
            if !is_zero_vec(&r) {
                return Verdict::fail(identity, vec![i, j], r);
            }
        }
    }
    Verdict::Holds
}

pub(crate) fn over_triples(
    n: usize,
    identity: &str,
    mut residual: impl FnMut(usize, usize, usize) -> Vector,
) -> Verdict {
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let r = residual(i, j, k);
                if !is_zero_vec(&r) {
                    return Verdict::fail(identity, vec![i, j, k], r);
                }
            }
        }
    }
    Verdict::Holds
}

fn check_map_space(a: &SuperAlgebra, m: &EvenMap) -> Result<()> {
    if m.space() != a.space() {
        return Err(Error::Dimension("map and algebra live on different graded spaces".into()));
    }
    Ok(())
}

fn check_form_space(a: &SuperAlgebra, b: &BilinearForm) -> Result<()> {
    if b.space() != a.space() {
        return Err(Error::Dimension("form and algebra live on different graded spaces".into()));
    }
    Ok(())
}

/// `α(xy) = α(x)α(y)`
pub fn is_multiplicative(a: &SuperAlgebra) -> Verdict {
    over_pairs(a.dim(), "multiplicativity", |i, j| {
        let lhs = a.apply_alpha(a.basis_product(i, j));
        let rhs = a.mul(&a.alpha.column(i), &a.alpha.column(j));
        sub_vec(&lhs, &rhs)
    })
}

/// `(xy)α(z) − α(x)(yz) = (−1)^{|x||y|}((yx)α(z) − α(y)(xz))`
pub fn is_hom_left_symmetric(a: &SuperAlgebra) -> Verdict {
    over_triples(a.dim(), "hom-left-symmetry", |x, y, z| {
        let mut r = hom_associator(a, x, y, z);
        let swapped = hom_associator(a, y, x, z);
        add_signed(&mut r, !a.parity(x).koszul(a.parity(y)), &swapped);
        r
    })
}

/// `(xy)α(z) − α(x)(yz)` on basis vectors.
fn hom_associator(a: &SuperAlgebra, x: usize, y: usize, z: usize) -> Vector {
    let left = a.mul(a.basis_product(x, y), &a.alpha.column(z));
    let right = a.mul(&a.alpha.column(x), a.basis_product(y, z));
    sub_vec(&left, &right)
}

/// `(xy)α(z) = (−1)^{|y||z|}(xz)α(y)`
pub fn satisfies_hom_novikov_identity(a: &SuperAlgebra) -> Verdict {
    over_triples(a.dim(), "hom-novikov identity", |x, y, z| {
        let mut r = a.mul(a.basis_product(x, y), &a.alpha.column(z));
        let other = a.mul(a.basis_product(x, z), &a.alpha.column(y));
        add_signed(&mut r, !a.parity(y).koszul(a.parity(z)), &other);
        r
    })
}

/// Multiplicativity, Hom-left-symmetry and the Hom-Novikov identity.
pub fn is_hom_novikov(a: &SuperAlgebra) -> Verdict {
    is_multiplicative(a)
        .and_then(|| is_hom_left_symmetric(a))
        .and_then(|| satisfies_hom_novikov_identity(a))
}

/// Multiplicativity and `(xy)α(z) = α(x)(yz)`.
pub fn is_hom_associative(a: &SuperAlgebra) -> Verdict {
    is_multiplicative(a).and_then(|| {
        over_triples(a.dim(), "hom-associativity", |x, y, z| hom_associator(a, x, y, z))
    })
}

/// `xy = (−1)^{|x||y|} yx`
pub fn is_supercommutative(a: &SuperAlgebra) -> Verdict {
    over_pairs(a.dim(), "supercommutativity", |i, j| {
        let mut r = a.basis_product(i, j).to_vec();
        add_signed(&mut r, !a.parity(i).koszul(a.parity(j)), a.basis_product(j, i));
        r
    })
}

/// Multiplicativity, super-skew-symmetry and the super Hom-Jacobi identity
/// `(−1)^{|x||z|}[α(x),[y,z]] + (−1)^{|y||x|}[α(y),[z,x]] + (−1)^{|z||y|}[α(z),[x,y]] = 0`,
/// reading the product of `a` as the bracket.
pub fn is_hom_lie(a: &SuperAlgebra) -> Verdict {
    is_multiplicative(a)
        .and_then(|| {
            over_pairs(a.dim(), "super-skew-symmetry", |i, j| {
                let mut r = a.basis_product(i, j).to_vec();
                add_signed(&mut r, a.parity(i).koszul(a.parity(j)), a.basis_product(j, i));
                r
            })
        })
        .and_then(|| {
            over_triples(a.dim(), "super hom-jacobi", |x, y, z| {
                let (px, py, pz) = (a.parity(x), a.parity(y), a.parity(z));
                let mut r = zeros(a.dim());
                let terms = [(x, y, z, px.koszul(pz)), (y, z, x, py.koszul(px)), (z, x, y, pz.koszul(py))];
                for (u, v, w, negate) in terms {
                    let t = a.mul(&a.alpha.column(u), a.basis_product(v, w));
                    add_signed(&mut r, negate, &t);
                }
                r
            })
        })
}

/// `D(xy) = D(x)y + xD(y)` for an even map `D`.
pub fn is_derivation(a: &SuperAlgebra, d: &EvenMap) -> Result<Verdict> {
    check_map_space(a, d)?;
    Ok(over_pairs(a.dim(), "derivation rule", |i, j| {
        let lhs = d.apply(a.basis_product(i, j));
        let mut r = sub_vec(&lhs, &a.mul(&d.matrix.column(i), &a.basis(j)));
        add_signed(&mut r, true, &a.mul(&a.basis(i), &d.matrix.column(j)));
        r
    }))
}

/// `Mα = αM`; a failure reports the column `j` where `(αM − Mα)e_j ≠ 0`.
pub fn commutes_with_alpha(a: &SuperAlgebra, m: &EvenMap) -> Result<Verdict> {
    check_map_space(a, m)?;
    let comm = a.alpha.mul(&m.matrix).sub(&m.matrix.mul(&a.alpha));
    for j in 0..a.dim() {
        let col = comm.column(j);
        if !is_zero_vec(&col) {
            return Ok(Verdict::fail("commutation with alpha", vec![j], col));
        }
    }
    Ok(Verdict::Holds)
}

/// `P(x)P(y) = P(P(x)y + xP(y) + λxy)`
pub fn is_rota_baxter(a: &SuperAlgebra, p: &EvenMap, lambda: &Scalar) -> Result<Verdict> {
    check_map_space(a, p)?;
    Ok(over_pairs(a.dim(), "rota-baxter identity", |i, j| {
        let (pi, pj) = (p.matrix.column(i), p.matrix.column(j));
        let lhs = a.mul(&pi, &pj);
        let mut inner = a.mul(&pi, &a.basis(j));
        add_signed(&mut inner, false, &a.mul(&a.basis(i), &pj));
        axpy(&mut inner, lambda, a.basis_product(i, j));
        sub_vec(&lhs, &p.apply(&inner))
    }))
}

/// `B(x,y) = (−1)^{|x||y|} B(y,x)`
pub fn form_is_supersymmetric(b: &BilinearForm) -> Verdict {
    let sp = b.space();
    over_pairs(sp.dim(), "supersymmetry", |i, j| {
        let other = &b.gram[(j, i)];
        let r = if sp.parity(i).koszul(sp.parity(j)) {
            &b.gram[(i, j)] + other
        } else {
            &b.gram[(i, j)] - other
        };
        vec![r]
    })
}

/// `B(A_0, A_1) = B(A_1, A_0) = 0`
pub fn form_is_even(b: &BilinearForm) -> Verdict {
    let sp = b.space();
    over_pairs(sp.dim(), "evenness", |i, j| {
        if sp.parity(i) != sp.parity(j) {
            vec![b.gram[(i, j)].clone()]
        } else {
            vec![Scalar::zero()]
        }
    })
}

/// Full rank Gram matrix. A failure carries a nonzero vector of the left radical.
pub fn form_is_nondegenerate(b: &BilinearForm) -> Verdict {
    if rank(b.gram()) == b.space().dim() {
        return Verdict::Holds;
    }
    let radical = crate::exactlin::kernel_basis(&b.gram.transpose());
    Verdict::fail("nondegeneracy", Vec::new(), radical.into_iter().next().unwrap_or_default())
}

/// `B(α(x), yz) = B(xy, α(z))`
pub fn form_is_novikov_invariant(a: &SuperAlgebra, b: &BilinearForm) -> Result<Verdict> {
    check_form_space(a, b)?;
    Ok(over_triples(a.dim(), "novikov invariance", |x, y, z| {
        let lhs = b.eval(&a.alpha.column(x), a.basis_product(y, z));
        let rhs = b.eval(a.basis_product(x, y), &a.alpha.column(z));
        vec![lhs - rhs]
    }))
}

/// `B([x,y], z) = B(x, [y,z])`, with the product of `a` as the bracket.
pub fn form_is_lie_invariant(a: &SuperAlgebra, b: &BilinearForm) -> Result<Verdict> {
    check_form_space(a, b)?;
    Ok(over_triples(a.dim(), "invariance", |x, y, z| {
        let lhs = b.eval(a.basis_product(x, y), &a.basis(z));
        let rhs = b.eval(&a.basis(x), a.basis_product(y, z));
        vec![lhs - rhs]
    }))
}

/// `B(α(x), y) = B(x, α(y))`, i.e. `αᵀG = Gα`.
pub fn form_alpha_symmetric(a: &SuperAlgebra, b: &BilinearForm) -> Result<Verdict> {
    check_form_space(a, b)?;
    let lhs = a.alpha.transpose().mul(&b.gram);
    let rhs = b.gram.mul(&a.alpha);
    Ok(over_pairs(a.dim(), "alpha-symmetry", |i, j| vec![&lhs[(i, j)] - &rhs[(i, j)]]))
}

/// `(A, μ, α, B)` is a quadratic Hom-Novikov superalgebra: Hom-Novikov, with `B`
/// even, supersymmetric, nondegenerate and `B(α(x),yz) = B(xy,α(z))`.
pub fn is_quadratic_hom_novikov(a: &SuperAlgebra, b: &BilinearForm) -> Result<Verdict> {
    let invariant = form_is_novikov_invariant(a, b)?;
    Ok(is_hom_novikov(a)
        .and_then(|| form_is_even(b))
        .and_then(|| form_is_supersymmetric(b))
        .and_then(|| form_is_nondegenerate(b))
        .and_then(|| invariant))
}

/// `(L, [·,·], α, B)` is a quadratic Hom-Lie superalgebra: Hom-Lie, with `B` even,
/// supersymmetric, nondegenerate, invariant and `B(α(x),y) = B(x,α(y))`.
pub fn is_quadratic_hom_lie(l: &SuperAlgebra, b: &BilinearForm) -> Result<Verdict> {
    let invariant = form_is_lie_invariant(l, b)?;
    let symmetric = form_alpha_symmetric(l, b)?;
    Ok(is_hom_lie(l)
        .and_then(|| form_is_even(b))
        .and_then(|| form_is_supersymmetric(b))
        .and_then(|| form_is_nondegenerate(b))
        .and_then(|| invariant)
        .and_then(|| symmetric))
}

/// Whether `α² = id`.
pub fn is_involutive(a: &SuperAlgebra) -> bool {
    a.alpha.mul(&a.alpha) == Matrix::identity(a.dim())
}

/// Whether `α` is invertible (and hence, when multiplicative, an automorphism).
pub fn is_regular(a: &SuperAlgebra) -> bool {
    invert(&a.alpha).is_some()
}
