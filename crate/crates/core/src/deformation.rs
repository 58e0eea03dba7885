//! One-parameter formal deformations `g_t = G₀ + G₁t + … + G_N t^N` truncated
//! at order `N`, formal equivalences `φ_t = id + φ₁t + … + φ_N t^N`, and the
//! reduction of a deformation to the trivial one when its leading terms are
//! coboundaries.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::cohomology::{coboundary_preimage, delta1_unchecked, delta2_unchecked, is_hom_cochain, Cochain};
use crate::error::{Error, Result};
use crate::exactlin::{add_signed, axpy, is_zero_vec, zeros, Matrix, Parity, Scalar, Vector};
use crate::superalgebra::{commutes_with_alpha, over_triples, EvenMap, SuperAlgebra, Verdict, Violation};

/// Truncation order used when none is given.
pub const DEFAULT_ORDER: usize = 4;

/// `g_t = G₀ + Σ_{i=1}^{N} G_i tⁱ` with `G₀` the product of `base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedDeformation {
    base: Arc<SuperAlgebra>,
    /// `terms[0]` is the base product.
    terms: Vec<Cochain>,
}

impl TruncatedDeformation {
    /// `terms` are `G₁, …, G_N`: even 2-cochains over `base`.
    pub fn new(base: Arc<SuperAlgebra>, terms: Vec<Cochain>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Input("a deformation needs order at least 1".into()));
        }
        let mut all = vec![Cochain::product(base.clone())];
        for (i, g) in terms.into_iter().enumerate() {
            if g.arity() != 2 || g.parity() != Parity::Even {
                return Err(Error::Input(format!(
                    "deformation term G{} must be an even 2-cochain, got a {} {}-cochain",
                    i + 1,
                    g.parity().name(),
                    g.arity()
                )));
            }
            all.push(g.rebind(base.clone())?);
        }
        Ok(TruncatedDeformation { base, terms: all })
    }

    /// All `G_i = 0`.
    pub fn null(base: Arc<SuperAlgebra>, order: usize) -> Result<Self> {
        let terms = (0..order).map(|_| Cochain::zero(base.clone(), 2, Parity::Even)).collect();
        Self::new(base, terms)
    }

    pub fn base(&self) -> &Arc<SuperAlgebra> {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    /// `G_i` for `0 ≤ i ≤ N`.
    pub fn term(&self, i: usize) -> &Cochain {
        &self.terms[i]
    }

    /// `G₁, …, G_N`.
    pub fn terms(&self) -> &[Cochain] {
        &self.terms[1..]
    }

    pub fn is_null(&self) -> bool {
        self.terms().iter().all(Cochain::is_zero)
    }

    /// Smallest `n ≥ 1` with `G_n ≠ 0`.
    pub fn leading_order(&self) -> Option<usize> {
        (1..=self.order()).find(|&n| !self.terms[n].is_zero())
    }
}

/// `φ_t = id + Σ_{i=1}^{N} φ_i tⁱ` with every `φ_i` even and commuting with `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceTransform {
    base: Arc<SuperAlgebra>,
    /// `maps[0]` is the identity.
    maps: Vec<Matrix>,
}

impl EquivalenceTransform {
    pub fn new(base: Arc<SuperAlgebra>, maps: Vec<EvenMap>) -> Result<Self> {
        if maps.is_empty() {
            return Err(Error::Input("an equivalence needs order at least 1".into()));
        }
        let mut all = vec![Matrix::identity(base.dim())];
        for (i, m) in maps.into_iter().enumerate() {
            if let Verdict::Fails(v) = commutes_with_alpha(&base, &m)? {
                return Err(Error::Precondition {
                    op: "equivalence transform",
                    predicate: format!("phi{} commutes with alpha", i + 1),
                    detail: v.to_string(),
                });
            }
            all.push(m.matrix().clone());
        }
        Ok(EquivalenceTransform { base, maps: all })
    }

    pub fn identity(base: Arc<SuperAlgebra>, order: usize) -> Result<Self> {
        let maps = (0..order).map(|_| EvenMap::zero(base.space())).collect();
        Self::new(base, maps)
    }

    pub fn base(&self) -> &Arc<SuperAlgebra> {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.maps.len() - 1
    }

    /// Matrix of `φ_i` for `0 ≤ i ≤ N`.
    pub fn map(&self, i: usize) -> &Matrix {
        &self.maps[i]
    }

    /// `φ_t⁻¹` mod `t^{N+1}`: `ψ₀ = id`, `ψ_n = −Σ_{i=1}^{n} φ_i ψ_{n−i}`.
    pub fn inverse(&self) -> EquivalenceTransform {
        let n = self.base.dim();
        let mut psi = vec![Matrix::identity(n)];
        for k in 1..self.maps.len() {
            let mut acc = Matrix::zeros(n, n);
            for i in 1..=k {
                acc = acc.sub(&self.maps[i].mul(&psi[k - i]));
            }
            psi.push(acc);
        }
        EquivalenceTransform { base: self.base.clone(), maps: psi }
    }
}

/// Where a deformation first fails: the order `n` and the failing identity at that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationFailure {
    pub order: usize,
    pub violation: Violation,
}

impl fmt::Display for DeformationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "order {}: {}", self.order, self.violation)
    }
}

/// `G_i(α(x), G_j(y,z)) − G_i(G_j(x,y), α(z)) − s_xy G_i(α(y), G_j(x,z)) + s_xy G_i(G_j(y,x), α(z))`
fn left_symmetry_term(a: &SuperAlgebra, alpha: &[Vector], gi: &Cochain, gj: &Cochain, t: (usize, usize, usize)) -> Vector {
    let (x, y, z) = t;
    let sxy = a.parity(x).koszul(a.parity(y));
    let mut r = gi.eval2(&alpha[x], gj.eval_basis(&[y, z]));
    add_signed(&mut r, true, &gi.eval2(gj.eval_basis(&[x, y]), &alpha[z]));
    add_signed(&mut r, !sxy, &gi.eval2(&alpha[y], gj.eval_basis(&[x, z])));
    add_signed(&mut r, sxy, &gi.eval2(gj.eval_basis(&[y, x]), &alpha[z]));
    r
}

/// `G_i(G_j(x,y), α(z)) − s_yz G_i(G_j(x,z), α(y))`
fn novikov_term(a: &SuperAlgebra, alpha: &[Vector], gi: &Cochain, gj: &Cochain, t: (usize, usize, usize)) -> Vector {
    let (x, y, z) = t;
    let syz = a.parity(y).koszul(a.parity(z));
    let mut r = gi.eval2(gj.eval_basis(&[x, y]), &alpha[z]);
    add_signed(&mut r, !syz, &gi.eval2(gj.eval_basis(&[x, z]), &alpha[y]));
    r
}

type Term = fn(&SuperAlgebra, &[Vector], &Cochain, &Cochain, (usize, usize, usize)) -> Vector;

/// `Σ_{i+j=n} term(G_i, G_j)` on every basis triple.
fn order_sum(terms: &[Cochain], n: usize, identity: &str, term: Term) -> Verdict {
    let a = terms[0].algebra();
    let alpha: Vec<Vector> = (0..a.dim()).map(|i| a.alpha().column(i)).collect();
    over_triples(a.dim(), identity, |x, y, z| {
        let mut r = zeros(a.dim());
        for i in 0..=n {
            add_signed(&mut r, false, &term(a, &alpha, &terms[i], &terms[n - i], (x, y, z)));
        }
        r
    })
}

fn order_verdict(terms: &[Cochain], n: usize) -> Verdict {
    order_sum(terms, n, "left-symmetry combination", left_symmetry_term)
        .and_then(|| order_sum(terms, n, "novikov combination", novikov_term))
}

/// Checks, for each order `n = 0, 1, …, N` in turn, that `G_n` is α-compatible
/// and that the order-`n` deformation equations hold. A failure at order `n`
/// means every lower order passed.
pub fn check_deformation(d: &TruncatedDeformation) -> std::result::Result<(), DeformationFailure> {
    for n in 0..=d.order() {
        if let Verdict::Fails(violation) = is_hom_cochain(&d.terms[n]).and_then(|| order_verdict(&d.terms, n)) {
            return Err(DeformationFailure { order: n, violation });
        }
    }
    Ok(())
}

fn require_even_two_cochain(op: &str, base: &Arc<SuperAlgebra>, g: &Cochain) -> Result<Cochain> {
    if g.arity() != 2 || g.parity() != Parity::Even {
        return Err(Error::Input(format!("{op} expects an even 2-cochain")));
    }
    g.rebind(base.clone())
}

/// Whether `G₁` satisfies the order-1 equations over `base`: it is
/// α-compatible, `δ²G₁ = 0`, and the order-1 Novikov combination vanishes.
pub fn is_infinitesimal(base: &Arc<SuperAlgebra>, g1: &Cochain) -> Result<Verdict> {
    let g1 = require_even_two_cochain("is_infinitesimal", base, g1)?;
    let terms = [Cochain::product(base.clone()), g1];
    Ok(is_hom_cochain(&terms[1])
        .and_then(|| cocycle_verdict(&terms[1]))
        .and_then(|| order_sum(&terms, 1, "novikov combination", novikov_term)))
}

fn cocycle_verdict(g: &Cochain) -> Verdict {
    let d = delta2_unchecked(g);
    let n = g.algebra().dim();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let v = d.eval_basis(&[x, y, z]);
                if !is_zero_vec(v) {
                    return Verdict::fail("2-cocycle condition", vec![x, y, z], v.to_vec());
                }
            }
        }
    }
    Verdict::Holds
}

/// `δ²G₁ = 0` for an α-compatible even 2-cochain.
pub fn is_two_cocycle(base: &Arc<SuperAlgebra>, g1: &Cochain) -> Result<Verdict> {
    let g1 = require_even_two_cochain("is_two_cocycle", base, g1)?;
    Ok(is_hom_cochain(&g1).and_then(|| cocycle_verdict(&g1)))
}

/// `Σ_{i+j=n, i,j≥1} G_i ∘_α G_j`, which equals `−δ²G_n` on a valid deformation.
pub fn obstruction(d: &TruncatedDeformation, n: usize) -> Result<Cochain> {
    if n == 0 || n > d.order() {
        return Err(Error::Input(format!("order {n} outside 1..={}", d.order())));
    }
    let mut acc = Cochain::zero(d.base.clone(), 3, Parity::Even);
    for i in 1..n {
        acc = acc.add(&crate::cohomology::circle_unchecked(&d.terms[i], &d.terms[n - i]))?;
    }
    Ok(acc)
}

/// The deformation `g'_t` with `φ_t(g_t(x,y)) = g'_t(φ_t(x), φ_t(y))`, that is
/// `G'_n = Σ_{i+j+k+l=n} φ_i(G_j(ψ_k x, ψ_l y))` with `ψ = φ⁻¹`.
pub fn apply_equivalence(d: &TruncatedDeformation, phi: &EquivalenceTransform) -> Result<TruncatedDeformation> {
    if d.base != phi.base {
        return Err(Error::precondition("apply_equivalence", "same base algebra"));
    }
    if d.order() != phi.order() {
        return Err(Error::Precondition {
            op: "apply_equivalence",
            predicate: "same truncation order".into(),
            detail: format!("deformation order {}, transform order {}", d.order(), phi.order()),
        });
    }
    let dim = d.base.dim();
    let order = d.order();
    let psi = phi.inverse();
    let psi_cols: Vec<Vec<Vector>> = psi.maps.iter().map(|m| (0..dim).map(|a| m.column(a)).collect()).collect();
    let mut out = Vec::with_capacity(order);
    for n in 1..=order {
        let mut coeffs = zeros(dim * dim * dim);
        for a in 0..dim {
            for b in 0..dim {
                let mut value = zeros(dim);
                for j in 0..=n {
                    for k in 0..=n - j {
                        for l in 0..=n - j - k {
                            let inner = d.terms[j].eval2(&psi_cols[k][a], &psi_cols[l][b]);
                            if is_zero_vec(&inner) {
                                continue;
                            }
                            let i = n - j - k - l;
                            axpy(&mut value, &Scalar::one(), &phi.maps[i].mul_vec(&inner));
                        }
                    }
                }
                coeffs[(a * dim + b) * dim..(a * dim + b + 1) * dim].clone_from_slice(&value);
            }
        }
        let g = Cochain::new(d.base.clone(), 2, Parity::Even, coeffs)
            .map_err(|e| Error::Invariant(format!("transported term G{n}: {e}")))?;
        out.push(g);
    }
    TruncatedDeformation::new(d.base.clone(), out)
}

fn require_valid(op: &'static str, d: &TruncatedDeformation) -> Result<()> {
    check_deformation(d).map_err(|f| Error::Precondition {
        op,
        predicate: "deformation equations".into(),
        detail: f.to_string(),
    })
}

/// Removes the leading term `G_n` when it is a coboundary `δ¹f`, by transporting
/// along `φ_t = Σ_k f^k t^{kn}`. Returns `None` when `G_n` is not a coboundary,
/// and the input itself when it is already null.
pub fn trivialize_step(d: &TruncatedDeformation) -> Result<Option<TruncatedDeformation>> {
    require_valid("trivialize_step", d)?;
    step_unchecked(d)
}

fn step_unchecked(d: &TruncatedDeformation) -> Result<Option<TruncatedDeformation>> {
    let Some(n) = d.leading_order() else {
        return Ok(Some(d.clone()));
    };
    let Some(f) = coboundary_preimage(&d.terms[n])? else {
        return Ok(None);
    };
    let dim = d.base.dim();
    let f_matrix = Matrix::from_fn(dim, dim, |k, i| f.eval_basis(&[i])[k].clone());
    let mut maps = vec![EvenMap::zero(d.base.space()); d.order()];
    let mut power = Matrix::identity(dim);
    for k in 1..=d.order() / n {
        power = power.mul(&f_matrix);
        maps[k * n - 1] = EvenMap::new(d.base.space().clone(), power.clone())?;
    }
    let phi = EquivalenceTransform::new(d.base.clone(), maps)?;
    let reduced = apply_equivalence(d, &phi)?;
    if !reduced.terms[1..=n].iter().all(Cochain::is_zero) {
        return Err(Error::Invariant(format!("trivialize_step left a nonzero term at order ≤ {n}")));
    }
    Ok(Some(reduced))
}

/// Applies [`trivialize_step`] until the deformation is null or a leading term
/// is not a coboundary. The flag reports whether the result is null.
pub fn rigidity_reduce(d: &TruncatedDeformation) -> Result<(TruncatedDeformation, bool)> {
    require_valid("rigidity_reduce", d)?;
    let mut current = d.clone();
    loop {
        if current.is_null() {
            return Ok((current, true));
        }
        match step_unchecked(&current)? {
            Some(next) => current = next,
            None => return Ok((current, false)),
        }
    }
}

/// `G₁ − G'₁` for `d' = apply_equivalence(d, φ)`; always equals `δ¹φ₁`.
pub fn cohomology_class_delta(
    d: &TruncatedDeformation,
    d_prime: &TruncatedDeformation,
    phi: &EquivalenceTransform,
) -> Result<Cochain> {
    if &apply_equivalence(d, phi)? != d_prime {
        return Err(Error::precondition("cohomology_class_delta", "d' = apply_equivalence(d, phi)"));
    }
    let diff = d.terms[1].sub(&d_prime.terms[1])?;
    let phi1 = Cochain::new(
        d.base.clone(),
        1,
        Parity::Even,
        (0..d.base.dim()).flat_map(|i| phi.maps[1].column(i)).collect(),
    )?;
    if delta1_unchecked(&phi1) != diff {
        return Err(Error::Invariant("G1 - G1' differs from the coboundary of phi1".into()));
    }
    if coboundary_preimage(&diff)?.is_none() {
        return Err(Error::Invariant("G1 - G1' is not a coboundary".into()));
    }
    Ok(diff)
}

impl fmt::Display for TruncatedDeformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "deformation of order {}", self.order())?;
        for (i, g) in self.terms().iter().enumerate() {
            let nz = g.coeffs().iter().filter(|c| !c.is_zero()).count();
            write!(f, "; G{} has {nz} nonzero coefficients", i + 1)?;
        }
        Ok(())
    }
}
