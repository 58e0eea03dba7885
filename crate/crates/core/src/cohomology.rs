//! Hom-cochains with values in the adjoint module, the coboundaries `δ¹`, `δ²`,
//! the circle product `∘_α`, and the second cohomology `H²` split by cochain parity.
//!
//! A cochain of arity `n` stores `f(e_{i₁},…,e_{iₙ}) = Σ_k t[i₁…iₙ][k] e_k` as a
//! flattened tensor with index `((i₁·d + i₂)·d + …)·d + k`.

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{
    add_signed, axpy, kernel_basis, rank, scale_vec, solve, sub_vec, zeros, Matrix, Parity, Scalar, Vector,
};
use crate::superalgebra::{is_hom_novikov, SuperAlgebra, Verdict};

/// A parity-homogeneous multilinear map `Aⁿ → A` over a fixed algebra.
#[derive(Clone, Debug)]
pub struct Cochain {
    algebra: Arc<SuperAlgebra>,
    arity: usize,
    parity: Parity,
    coeffs: Vec<Scalar>,
}

impl PartialEq for Cochain {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity
            && self.parity == other.parity
            && self.coeffs == other.coeffs
            && same_algebra(&self.algebra, &other.algebra)
    }
}

impl Eq for Cochain {}

fn same_algebra(a: &Arc<SuperAlgebra>, b: &Arc<SuperAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Basis tuples of length `arity` in lexicographic order.
fn tuples(dim: usize, arity: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = dim.pow(arity as u32);
    (0..total).map(move |mut idx| {
        let mut t = vec![0; arity];
        for slot in t.iter_mut().rev() {
            *slot = idx % dim;
            idx /= dim;
        }
        t
    })
}

fn flat_index(dim: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &i| acc * dim + i)
}

fn tuple_parity(a: &SuperAlgebra, tuple: &[usize]) -> Parity {
    tuple.iter().fold(Parity::Even, |p, &i| p + a.parity(i))
}

impl Cochain {
    /// Validates the tensor size and parity homogeneity.
    pub fn new(algebra: Arc<SuperAlgebra>, arity: usize, parity: Parity, coeffs: Vec<Scalar>) -> Result<Self> {
        let n = algebra.dim();
        let expected = n.pow(arity as u32 + 1);
        if coeffs.len() != expected {
            return Err(Error::Dimension(format!(
                "{arity}-cochain tensor has {} entries, expected {expected}",
                coeffs.len()
            )));
        }
        for t in tuples(n, arity) {
            let target = tuple_parity(&algebra, &t) + parity;
            let base = flat_index(n, &t) * n;
            for k in 0..n {
                if algebra.parity(k) != target && !coeffs[base + k].is_zero() {
                    return Err(Error::Input(format!(
                        "{} cochain has a component on e{k} at {:?}, which has the wrong parity",
                        parity.name(),
                        t
                    )));
                }
            }
        }
        Ok(Cochain { algebra, arity, parity, coeffs })
    }

    pub fn zero(algebra: Arc<SuperAlgebra>, arity: usize, parity: Parity) -> Self {
        let len = algebra.dim().pow(arity as u32 + 1);
        Cochain { algebra, arity, parity, coeffs: zeros(len) }
    }

    /// Builds a cochain from `(input tuple, output index, coefficient)` entries; repeated entries add up.
    pub fn from_entries(
        algebra: Arc<SuperAlgebra>,
        arity: usize,
        parity: Parity,
        entries: impl IntoIterator<Item = (Vec<usize>, usize, Scalar)>,
    ) -> Result<Self> {
        let n = algebra.dim();
        let mut coeffs = zeros(n.pow(arity as u32 + 1));
        for (t, k, c) in entries {
            if t.len() != arity || t.iter().chain(std::iter::once(&k)).any(|&i| i >= n) {
                return Err(Error::Dimension(format!("cochain entry {t:?} -> e{k} does not fit arity {arity}, dimension {n}")));
            }
            coeffs[flat_index(n, &t) * n + k] += c;
        }
        Cochain::new(algebra, arity, parity, coeffs)
    }

    /// The product of the algebra as an even 2-cochain.
    pub fn product(algebra: Arc<SuperAlgebra>) -> Self {
        let coeffs = algebra.structure_tensor().to_vec();
        Cochain { algebra, arity: 2, parity: Parity::Even, coeffs }
    }

    pub fn algebra(&self) -> &SuperAlgebra {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> &Arc<SuperAlgebra> {
        &self.algebra
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `f(e_{i₁}, …, e_{iₙ})`
    pub fn eval_basis(&self, tuple: &[usize]) -> &[Scalar] {
        let n = self.algebra.dim();
        let base = flat_index(n, tuple) * n;
        &self.coeffs[base..base + n]
    }

    /// Multilinear evaluation on coordinate vectors.
    pub fn eval(&self, args: &[&[Scalar]]) -> Result<Vector> {
        let n = self.algebra.dim();
        if args.len() != self.arity || args.iter().any(|v| v.len() != n) {
            return Err(Error::Dimension(format!(
                "{}-cochain on dimension {n} evaluated at {} arguments of lengths {:?}",
                self.arity,
                args.len(),
                args.iter().map(|v| v.len()).collect::<Vec<_>>()
            )));
        }
        Ok(self.eval_unchecked(args))
    }

    fn eval_unchecked(&self, args: &[&[Scalar]]) -> Vector {
        let n = self.algebra.dim();
        let mut out = zeros(n);
        for t in tuples(n, self.arity) {
            let mut c = Scalar::from_integer(1.into());
            for (slot, &i) in t.iter().enumerate() {
                if args[slot][i].is_zero() {
                    c = Scalar::zero();
                    break;
                }
                c *= &args[slot][i];
            }
            if !c.is_zero() {
                axpy(&mut out, &c, self.eval_basis(&t));
            }
        }
        out
    }

    pub(crate) fn eval2(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.eval_unchecked(&[x, y])
    }

    fn compatible(&self, other: &Cochain, op: &str) -> Result<()> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(Error::Input(format!("{op}: cochains over different algebras")));
        }
        if self.arity != other.arity || self.parity != other.parity {
            return Err(Error::Input(format!(
                "{op}: cochains of arity/parity {}/{} and {}/{}",
                self.arity, self.parity, other.arity, other.parity
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.compatible(other, "add")?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Cochain { coeffs, ..self.clone() })
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.compatible(other, "sub")?;
        Ok(Cochain { coeffs: sub_vec(&self.coeffs, &other.coeffs), ..self.clone() })
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        Cochain { coeffs: scale_vec(c, &self.coeffs), ..self.clone() }
    }

    /// Same coefficients over another algebra with the same graded space.
    pub fn rebind(&self, algebra: Arc<SuperAlgebra>) -> Result<Cochain> {
        if algebra.space() != self.algebra.space() {
            return Err(Error::Dimension("cannot move a cochain to a different graded space".into()));
        }
        Ok(Cochain { algebra, ..self.clone() })
    }
}

/// `α(f(x₁,…,xₙ)) = f(α(x₁),…,α(xₙ))` over all basis tuples.
pub fn is_hom_cochain(f: &Cochain) -> Verdict {
    let a = f.algebra();
    let n = a.dim();
    let alpha_cols: Vec<Vector> = (0..n).map(|i| a.alpha().column(i)).collect();
    for t in tuples(n, f.arity) {
        let lhs = a.apply_alpha(f.eval_basis(&t));
        let args: Vec<&[Scalar]> = t.iter().map(|&i| alpha_cols[i].as_slice()).collect();
        let r = sub_vec(&lhs, &f.eval_unchecked(&args));
        if r.iter().any(|c| !c.is_zero()) {
            return Verdict::fail("alpha-compatibility", t, r);
        }
    }
    Verdict::Holds
}

fn require_cochain(op: &'static str, f: &Cochain, arity: usize) -> Result<()> {
    if f.arity != arity {
        return Err(Error::Input(format!("{op} expects a {arity}-cochain, got arity {}", f.arity)));
    }
    match is_hom_cochain(f) {
        Verdict::Holds => Ok(()),
        Verdict::Fails(v) => Err(Error::Precondition {
            op,
            predicate: "hom-cochain".into(),
            detail: v.to_string(),
        }),
    }
}

fn cochain_from_basis_values(
    f: &Cochain,
    arity: usize,
    parity: Parity,
    mut value: impl FnMut(&[usize]) -> Vector,
) -> Cochain {
    let n = f.algebra.dim();
    let mut coeffs = Vec::with_capacity(n.pow(arity as u32 + 1));
    for t in tuples(n, arity) {
        coeffs.extend(value(&t));
    }
    Cochain { algebra: f.algebra.clone(), arity, parity, coeffs }
}

/// `δ¹f(x₁,x₂) = (−1)^{|x₁||f|} x₁ f(x₂) + f(x₁) x₂ − f(x₁x₂)`
pub fn delta1(f: &Cochain) -> Result<Cochain> {
    require_cochain("delta1", f, 1)?;
    Ok(delta1_unchecked(f))
}

pub(crate) fn delta1_unchecked(f: &Cochain) -> Cochain {
    let a = f.algebra.clone();
    cochain_from_basis_values(f, 2, f.parity, |t| {
        let (i, j) = (t[0], t[1]);
        let mut r = a.mul(&a.basis(i), f.eval_basis(&[j]));
        if a.parity(i).koszul(f.parity) {
            r = scale_vec(&Scalar::from_integer((-1).into()), &r);
        }
        add_signed(&mut r, false, &a.mul(f.eval_basis(&[i]), &a.basis(j)));
        add_signed(&mut r, true, &f.eval_unchecked(&[a.basis_product(i, j)]));
        r
    })
}

/// The eight-term coboundary of a 2-cochain:
///
/// `δ²f(x₁,x₂,x₃) = f(α(x₁), x₂x₃) − s₁₂ f(α(x₂), x₁x₃) + s₁₂ f(x₂x₁, α(x₃))
///   + (−1)^{|x₁||f|} α(x₁) f(x₂,x₃) − s₁₂ (−1)^{|x₂||f|} α(x₂) f(x₁,x₃)
///   + s₁₂ f(x₂,x₁) α(x₃) − s₂₃ f(x₁x₃, α(x₂)) − s₂₃ f(x₁,x₃) α(x₂)`
///
/// with `sᵢⱼ = (−1)^{|xᵢ||xⱼ|}`.
pub fn delta2(f: &Cochain) -> Result<Cochain> {
    require_cochain("delta2", f, 2)?;
    Ok(delta2_unchecked(f))
}

pub(crate) fn delta2_unchecked(f: &Cochain) -> Cochain {
    let a = f.algebra.clone();
    let alpha: Vec<Vector> = (0..a.dim()).map(|i| a.alpha().column(i)).collect();
    cochain_from_basis_values(f, 3, f.parity, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let (px, py, pz, pf) = (a.parity(x), a.parity(y), a.parity(z), f.parity);
        let s12 = px.koszul(py);
        let s23 = py.koszul(pz);
        let mut r = f.eval2(&alpha[x], a.basis_product(y, z));
        add_signed(&mut r, !s12, &f.eval2(&alpha[y], a.basis_product(x, z)));
        add_signed(&mut r, s12, &f.eval2(a.basis_product(y, x), &alpha[z]));
        add_signed(&mut r, px.koszul(pf), &a.mul(&alpha[x], f.eval_basis(&[y, z])));
        add_signed(&mut r, !(s12 ^ py.koszul(pf)), &a.mul(&alpha[y], f.eval_basis(&[x, z])));
        add_signed(&mut r, s12, &a.mul(f.eval_basis(&[y, x]), &alpha[z]));
        add_signed(&mut r, !s23, &f.eval2(a.basis_product(x, z), &alpha[y]));
        add_signed(&mut r, !s23, &a.mul(f.eval_basis(&[x, z]), &alpha[y]));
        r
    })
}

/// `f ∘_α g(x,y,z) = f(α(x), g(y,z)) − s_xy f(α(y), g(x,z)) + s_xy f(g(y,x), α(z)) − s_yz f(g(x,z), α(y))`
pub fn circle_alpha(f: &Cochain, g: &Cochain) -> Result<Cochain> {
    require_cochain("circle_alpha", f, 2)?;
    require_cochain("circle_alpha", g, 2)?;
    if !same_algebra(&f.algebra, &g.algebra) {
        return Err(Error::Input("circle_alpha: cochains over different algebras".into()));
    }
    Ok(circle_unchecked(f, g))
}

pub(crate) fn circle_unchecked(f: &Cochain, g: &Cochain) -> Cochain {
    let a = f.algebra.clone();
    let alpha: Vec<Vector> = (0..a.dim()).map(|i| a.alpha().column(i)).collect();
    cochain_from_basis_values(f, 3, f.parity + g.parity, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let sxy = a.parity(x).koszul(a.parity(y));
        let syz = a.parity(y).koszul(a.parity(z));
        let mut r = f.eval2(&alpha[x], g.eval_basis(&[y, z]));
        add_signed(&mut r, !sxy, &f.eval2(&alpha[y], g.eval_basis(&[x, z])));
        add_signed(&mut r, sxy, &f.eval2(g.eval_basis(&[y, x]), &alpha[z]));
        add_signed(&mut r, !syz, &f.eval2(g.eval_basis(&[x, z]), &alpha[y]));
        r
    })
}

/// Basis of the α-compatible parity-homogeneous `arity`-cochains (`arity ≤ 3`).
pub fn cochain_basis(a: &Arc<SuperAlgebra>, arity: usize, parity: Parity) -> Result<Vec<Cochain>> {
    if !(1..=3).contains(&arity) {
        return Err(Error::Input(format!("cochain arity must be 1, 2 or 3, got {arity}")));
    }
    let n = a.dim();
    let slots: Vec<(Vec<usize>, usize)> = tuples(n, arity)
        .flat_map(|t| {
            let target = tuple_parity(a, &t) + parity;
            a.space().block(target).map(move |k| (t.clone(), k)).collect::<Vec<_>>()
        })
        .collect();
    if slots.is_empty() {
        return Ok(Vec::new());
    }
    // Row (I, k) of the constraint α(f(e_I)) − f(α e_I) = 0, column = slot (J, m).
    let alpha = a.alpha();
    let inputs: Vec<Vec<usize>> = tuples(n, arity).collect();
    let mut m = Matrix::zeros(inputs.len() * n, slots.len());
    for (col, (jt, mm)) in slots.iter().enumerate() {
        for (ii, it) in inputs.iter().enumerate() {
            if it == jt {
                for k in 0..n {
                    m[(ii * n + k, col)] += &alpha[(k, *mm)];
                }
            }
            let mut prod = Scalar::from_integer(1.into());
            for (&j, &i) in jt.iter().zip(it) {
                prod *= &alpha[(j, i)];
                if prod.is_zero() {
                    break;
                }
            }
            if !prod.is_zero() {
                m[(ii * n + mm, col)] -= prod;
            }
        }
    }
    let total = n.pow(arity as u32 + 1);
    Ok(kernel_basis(&m)
        .into_iter()
        .map(|v| {
            let mut coeffs = zeros(total);
            for ((t, k), c) in slots.iter().zip(v) {
                coeffs[flat_index(n, t) * n + k] = c;
            }
            Cochain { algebra: a.clone(), arity, parity, coeffs }
        })
        .collect())
}

/// Dimensions of the second cohomology in one cochain parity.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CohomologyReport {
    pub parity: Parity,
    pub dim_cochains: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_h2: usize,
}

fn columns_matrix(rows: usize, columns: &[Vector]) -> Matrix {
    Matrix::from_columns(rows, columns).expect("columns share the tensor length")
}

fn require_hom_novikov(op: &'static str, a: &SuperAlgebra) -> Result<()> {
    match is_hom_novikov(a) {
        Verdict::Holds => Ok(()),
        Verdict::Fails(v) => Err(Error::Precondition {
            op,
            predicate: "hom-novikov".into(),
            detail: v.to_string(),
        }),
    }
}

/// `Z² = ker δ² ∩ C²`, `B² = δ¹(C¹)`, `H² = Z²/B²` in cochain parity `parity`.
pub fn h2(a: &Arc<SuperAlgebra>, parity: Parity) -> Result<CohomologyReport> {
    require_hom_novikov("h2", a)?;
    let n = a.dim();
    let c1 = cochain_basis(a, 1, parity)?;
    let c2 = cochain_basis(a, 2, parity)?;
    let b2 = rank(&columns_matrix(n.pow(3), &c1.iter().map(|f| delta1_unchecked(f).coeffs).collect::<Vec<_>>()));
    let d2_rank = rank(&columns_matrix(n.pow(4), &c2.iter().map(|f| delta2_unchecked(f).coeffs).collect::<Vec<_>>()));
    let z2 = c2.len() - d2_rank;
    let dim_h2 = z2
        .checked_sub(b2)
        .ok_or_else(|| Error::Invariant(format!("coboundaries ({b2}) exceed cocycles ({z2})")))?;
    Ok(CohomologyReport {
        parity,
        dim_cochains: c2.len(),
        dim_cocycles: z2,
        dim_coboundaries: b2,
        dim_h2,
    })
}

/// Basis of `Z² = ker δ²` inside the α-compatible 2-cochains of the given parity.
pub fn two_cocycles(a: &Arc<SuperAlgebra>, parity: Parity) -> Result<Vec<Cochain>> {
    let c2 = cochain_basis(a, 2, parity)?;
    combine_kernel(a, &c2, |f| delta2_unchecked(f).coeffs, a.dim().pow(4))
}

/// Basis of `Z¹ = ker δ¹` inside the α-compatible 1-cochains of the given parity.
pub fn one_cocycles(a: &Arc<SuperAlgebra>, parity: Parity) -> Result<Vec<Cochain>> {
    let c1 = cochain_basis(a, 1, parity)?;
    combine_kernel(a, &c1, |f| delta1_unchecked(f).coeffs, a.dim().pow(3))
}

fn combine_kernel(
    a: &Arc<SuperAlgebra>,
    basis: &[Cochain],
    image: impl Fn(&Cochain) -> Vector,
    image_len: usize,
) -> Result<Vec<Cochain>> {
    let Some(first) = basis.first() else {
        return Ok(Vec::new());
    };
    let m = columns_matrix(image_len, &basis.iter().map(image).collect::<Vec<_>>());
    Ok(kernel_basis(&m)
        .into_iter()
        .map(|v| linear_combination(a, first.arity, first.parity, basis, &v))
        .collect())
}

fn linear_combination(a: &Arc<SuperAlgebra>, arity: usize, parity: Parity, basis: &[Cochain], coeffs: &[Scalar]) -> Cochain {
    let mut out = Cochain::zero(a.clone(), arity, parity);
    for (f, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            axpy(&mut out.coeffs, c, &f.coeffs);
        }
    }
    out
}

/// An α-compatible 1-cochain `f` with `δ¹f = g`, if one exists. Among solutions,
/// the one whose coordinates in the canonical 1-cochain basis vanish on free variables.
pub fn coboundary_preimage(g: &Cochain) -> Result<Option<Cochain>> {
    if g.arity != 2 {
        return Err(Error::Input(format!("coboundary_preimage expects a 2-cochain, got arity {}", g.arity)));
    }
    let a = g.algebra.clone();
    let c1 = cochain_basis(&a, 1, g.parity)?;
    let n = a.dim();
    let m = columns_matrix(n.pow(3), &c1.iter().map(|f| delta1_unchecked(f).coeffs).collect::<Vec<_>>());
    Ok(solve(&m, &g.coeffs)?.map(|sol| linear_combination(&a, 1, g.parity, &c1, &sol)))
}

/// A cochain that need not be parity-homogeneous, stored as its even and odd parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainPair {
    pub even: Cochain,
    pub odd: Cochain,
}

impl CochainPair {
    /// Splits an arbitrary tensor into its homogeneous components.
    pub fn split(algebra: Arc<SuperAlgebra>, arity: usize, coeffs: &[Scalar]) -> Result<Self> {
        let n = algebra.dim();
        if coeffs.len() != n.pow(arity as u32 + 1) {
            return Err(Error::Dimension(format!("{arity}-cochain tensor has {} entries", coeffs.len())));
        }
        let mut even = zeros(coeffs.len());
        let mut odd = zeros(coeffs.len());
        for t in tuples(n, arity) {
            let p = tuple_parity(&algebra, &t);
            let base = flat_index(n, &t) * n;
            for (k, c) in coeffs[base..base + n].iter().enumerate() {
                let target = if algebra.parity(k) == p { &mut even } else { &mut odd };
                target[base + k] = c.clone();
            }
        }
        Ok(CochainPair {
            even: Cochain { algebra: algebra.clone(), arity, parity: Parity::Even, coeffs: even },
            odd: Cochain { algebra, arity, parity: Parity::Odd, coeffs: odd },
        })
    }

    /// Full tensor `even + odd`.
    pub fn coeffs(&self) -> Vector {
        self.even.coeffs.iter().zip(&self.odd.coeffs).map(|(a, b)| a + b).collect()
    }

    pub fn delta1(&self) -> Result<CochainPair> {
        Ok(CochainPair { even: delta1(&self.even)?, odd: delta1(&self.odd)? })
    }

    pub fn delta2(&self) -> Result<CochainPair> {
        Ok(CochainPair { even: delta2(&self.even)?, odd: delta2(&self.odd)? })
    }
}
