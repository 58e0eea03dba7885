//! Shared fixtures and an independent reference implementation.
//!
//! The reference code below works on plain nested vectors of rationals and is
//! written directly from the defining formulas, without calling any of the
//! library's algebra, cohomology or linear-algebra routines. Tests compare the
//! library against it.

#![allow(dead_code)]

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use homnov::exactlin::{frac, int};
use homnov::samples::Sampler;
use homnov::{GradedSpace, Matrix, Parity, SuperAlgebra};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

// ---------------------------------------------------------------- fixtures

/// `E1`: `[1 | θ]` with `1·1 = 1`, `1·θ = θ·1 = θ`, `θ·θ = 0`.
pub fn e1() -> SuperAlgebra {
    e1_with_alpha(Matrix::identity(2))
}

pub fn e1_with_alpha(alpha: Matrix) -> SuperAlgebra {
    SuperAlgebra::from_entries(
        GradedSpace::from_counts(1, 1),
        [(0, 0, 0, int(1)), (0, 1, 1, int(1)), (1, 0, 1, int(1))],
        alpha,
    )
    .unwrap()
}

pub fn diag(entries: &[i64]) -> Matrix {
    Matrix::diagonal(&entries.iter().map(|&e| int(e)).collect::<Vec<_>>())
}

/// `e·e = e` on one even vector.
pub fn unit_line() -> SuperAlgebra {
    SuperAlgebra::from_entries(GradedSpace::even(1), [(0, 0, 0, int(1))], Matrix::identity(1)).unwrap()
}

/// Zero product on one even vector.
pub fn zero_line() -> SuperAlgebra {
    SuperAlgebra::zero(GradedSpace::even(1))
}

/// `[x, y] = z` on three even vectors.
pub fn heisenberg() -> SuperAlgebra {
    SuperAlgebra::from_entries(
        GradedSpace::even(3),
        [(0, 1, 2, int(1)), (1, 0, 2, int(-1))],
        Matrix::identity(3),
    )
    .unwrap()
}

/// A random graded algebra with arbitrary structure constants and an arbitrary
/// even twist: most samples satisfy no axiom, some satisfy several.
pub fn arbitrary_algebra(s: &mut Sampler, max_dim: usize) -> SuperAlgebra {
    let space = s.graded_space(max_dim);
    let n = space.dim();
    let sparse = s.int_in(0, 2) == 0;
    let mut mul = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let allowed = space.parity(k) == space.parity(i) + space.parity(j);
                let keep = !sparse || s.int_in(0, 3) == 0;
                mul.push(if allowed && keep { int(s.int_in(-2, 2)) } else { int(0) });
            }
        }
    }
    let alpha = match s.int_in(0, 2) {
        0 => Matrix::identity(n),
        1 => s.even_matrix(&space, 2),
        _ => Matrix::scalar(n, &frac(s.int_in(-2, 2), 1)),
    };
    SuperAlgebra::new(space, mul, alpha).unwrap()
}

pub fn arc(a: SuperAlgebra) -> Arc<SuperAlgebra> {
    Arc::new(a)
}

// ---------------------------------------------------------------- reference algebra

/// Dense copy of an algebra: `c[i][j][k]`, twist `al[row][col]`, parity bits.
#[derive(Clone, Debug)]
pub struct RefAlg {
    pub n: usize,
    pub par: Vec<u8>,
    pub c: Vec<Vec<Vec<Q>>>,
    pub al: Vec<Vec<Q>>,
}

impl RefAlg {
    pub fn new(par: Vec<u8>, entries: &[(usize, usize, usize, Q)], al: Vec<Vec<Q>>) -> Self {
        let n = par.len();
        let mut c = vec![vec![vec![q(0); n]; n]; n];
        for (i, j, k, v) in entries {
            c[*i][*j][*k] = v.clone();
        }
        RefAlg { n, par, c, al }
    }

    pub fn identity_twist(n: usize) -> Vec<Vec<Q>> {
        (0..n).map(|r| (0..n).map(|c| if r == c { q(1) } else { q(0) }).collect()).collect()
    }

    /// Reads the library algebra through its public accessors only.
    pub fn of(a: &SuperAlgebra) -> Self {
        let n = a.dim();
        let par = (0..n).map(|i| a.parity(i).bit()).collect();
        let c = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| a.structure_constant(i, j, k).clone()).collect()).collect())
            .collect();
        let al = (0..n).map(|r| (0..n).map(|col| a.alpha()[(r, col)].clone()).collect()).collect();
        RefAlg { n, par, c, al }
    }

    pub fn e(&self, i: usize) -> Vec<Q> {
        (0..self.n).map(|k| if k == i { q(1) } else { q(0) }).collect()
    }

    #[allow(clippy::needless_range_loop)]
    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![q(0); self.n];
        for i in 0..self.n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..self.n {
                    out[k] += &xy * &self.c[i][j][k];
                }
            }
        }
        out
    }

    pub fn alpha(&self, x: &[Q]) -> Vec<Q> {
        (0..self.n).map(|r| (0..self.n).map(|c| &self.al[r][c] * &x[c]).sum()).collect()
    }

    fn sign(&self, a: usize, b: usize) -> Q {
        if self.par[a] == 1 && self.par[b] == 1 {
            q(-1)
        } else {
            q(1)
        }
    }

    fn triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.n;
        (0..n).flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z)))).collect()
    }

    pub fn multiplicative(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let (x, y) = (self.e(i), self.e(j));
                self.alpha(&self.mul(&x, &y)) == self.mul(&self.alpha(&x), &self.alpha(&y))
            })
        })
    }

    /// `(xy)α(z) − α(x)(yz) = s_xy ((yx)α(z) − α(y)(xz))`
    pub fn left_symmetric(&self) -> bool {
        self.triples().into_iter().all(|(i, j, k)| {
            let (x, y, z) = (self.e(i), self.e(j), self.e(k));
            let lhs = sub(&self.mul(&self.mul(&x, &y), &self.alpha(&z)), &self.mul(&self.alpha(&x), &self.mul(&y, &z)));
            let rhs = sub(&self.mul(&self.mul(&y, &x), &self.alpha(&z)), &self.mul(&self.alpha(&y), &self.mul(&x, &z)));
            lhs == scale(&self.sign(i, j), &rhs)
        })
    }

    /// `(xy)α(z) = s_yz (xz)α(y)`
    pub fn novikov_identity(&self) -> bool {
        self.triples().into_iter().all(|(i, j, k)| {
            let (x, y, z) = (self.e(i), self.e(j), self.e(k));
            self.mul(&self.mul(&x, &y), &self.alpha(&z)) == scale(&self.sign(j, k), &self.mul(&self.mul(&x, &z), &self.alpha(&y)))
        })
    }

    pub fn hom_novikov(&self) -> bool {
        self.multiplicative() && self.left_symmetric() && self.novikov_identity()
    }

    /// `α(x)(yz) = (xy)α(z)`
    pub fn hom_associative(&self) -> bool {
        self.multiplicative()
            && self.triples().into_iter().all(|(i, j, k)| {
                let (x, y, z) = (self.e(i), self.e(j), self.e(k));
                self.mul(&self.alpha(&x), &self.mul(&y, &z)) == self.mul(&self.mul(&x, &y), &self.alpha(&z))
            })
    }

    pub fn supercommutative(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.mul(&self.e(i), &self.e(j)) == scale(&self.sign(i, j), &self.mul(&self.e(j), &self.e(i)))))
    }

    /// Super-skew-symmetry and `s_zx [α(x),[y,z]] + s_xy [α(y),[z,x]] + s_yz [α(z),[x,y]] = 0`.
    pub fn hom_lie(&self) -> bool {
        let skew = (0..self.n)
            .all(|i| (0..self.n).all(|j| self.mul(&self.e(i), &self.e(j)) == scale(&-self.sign(i, j), &self.mul(&self.e(j), &self.e(i)))));
        skew && self.multiplicative()
            && self.triples().into_iter().all(|(i, j, k)| {
                let (x, y, z) = (self.e(i), self.e(j), self.e(k));
                let t1 = scale(&self.sign(k, i), &self.mul(&self.alpha(&x), &self.mul(&y, &z)));
                let t2 = scale(&self.sign(i, j), &self.mul(&self.alpha(&y), &self.mul(&z, &x)));
                let t3 = scale(&self.sign(j, k), &self.mul(&self.alpha(&z), &self.mul(&x, &y)));
                add(&add(&t1, &t2), &t3).iter().all(Zero::is_zero)
            })
    }
}

pub fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Q, a: &[Q]) -> Vec<Q> {
    a.iter().map(|x| c * x).collect()
}

// ---------------------------------------------------------------- reference cochains

/// A multilinear map given by its values on basis tuples (tuples in lexicographic order).
#[derive(Clone, Debug, PartialEq)]
pub struct RefCochain {
    pub n: usize,
    pub arity: usize,
    pub parity: u8,
    pub values: Vec<Vec<Q>>,
}

pub fn tuple_index(n: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &i| acc * n + i)
}

pub fn tuples(n: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..arity {
        out = out.into_iter().flat_map(|t| (0..n).map(move |i| [t.clone(), vec![i]].concat())).collect();
    }
    out
}

impl RefCochain {
    pub fn from_fn(n: usize, arity: usize, parity: u8, mut f: impl FnMut(&[usize]) -> Vec<Q>) -> Self {
        let values = tuples(n, arity).iter().map(|t| f(t)).collect();
        RefCochain { n, arity, parity, values }
    }

    pub fn of(f: &homnov::cohomology::Cochain) -> Self {
        let n = f.algebra().dim();
        RefCochain::from_fn(n, f.arity(), f.parity().bit(), |t| f.eval_basis(t).to_vec())
    }

    pub fn product(a: &RefAlg) -> Self {
        RefCochain::from_fn(a.n, 2, 0, |t| a.c[t[0]][t[1]].clone())
    }

    pub fn at(&self, t: &[usize]) -> &[Q] {
        &self.values[tuple_index(self.n, t)]
    }

    /// Multilinear extension to arbitrary vectors.
    pub fn eval(&self, args: &[Vec<Q>]) -> Vec<Q> {
        let mut out = vec![q(0); self.n];
        for t in tuples(self.n, self.arity) {
            let coeff: Q = t.iter().zip(args).map(|(&i, v)| v[i].clone()).product();
            if !coeff.is_zero() {
                for (o, v) in out.iter_mut().zip(self.at(&t)) {
                    *o += &coeff * v;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().flatten().all(Zero::is_zero)
    }

    pub fn flat(&self) -> Vec<Q> {
        self.values.iter().flatten().cloned().collect()
    }
}

fn sgn(odd: bool) -> Q {
    if odd {
        q(-1)
    } else {
        q(1)
    }
}

/// `δ¹f(x₁,x₂) = (−1)^{|x₁||f|} x₁ f(x₂) + f(x₁) x₂ − f(x₁x₂)`
pub fn ref_delta1(a: &RefAlg, f: &RefCochain) -> RefCochain {
    RefCochain::from_fn(a.n, 2, f.parity, |t| {
        let (x1, x2) = (a.e(t[0]), a.e(t[1]));
        let s = sgn(a.par[t[0]] == 1 && f.parity == 1);
        let first = scale(&s, &a.mul(&x1, &f.eval(std::slice::from_ref(&x2))));
        let second = a.mul(&f.eval(std::slice::from_ref(&x1)), &x2);
        let third = f.eval(&[a.mul(&x1, &x2)]);
        sub(&add(&first, &second), &third)
    })
}

/// The eight-term coboundary of a 2-cochain, term by term.
pub fn ref_delta2(a: &RefAlg, f: &RefCochain) -> RefCochain {
    RefCochain::from_fn(a.n, 3, f.parity, |t| {
        let (p1, p2, p3, pf) = (a.par[t[0]] == 1, a.par[t[1]] == 1, a.par[t[2]] == 1, f.parity == 1);
        let (x1, x2, x3) = (a.e(t[0]), a.e(t[1]), a.e(t[2]));
        let s12 = sgn(p1 && p2);
        let s23 = sgn(p2 && p3);
        let terms = [
            f.eval(&[a.alpha(&x1), a.mul(&x2, &x3)]),
            scale(&-s12.clone(), &f.eval(&[a.alpha(&x2), a.mul(&x1, &x3)])),
            scale(&s12, &f.eval(&[a.mul(&x2, &x1), a.alpha(&x3)])),
            scale(&sgn(p1 && pf), &a.mul(&a.alpha(&x1), &f.eval(&[x2.clone(), x3.clone()]))),
            scale(&-(&s12 * sgn(p2 && pf)), &a.mul(&a.alpha(&x2), &f.eval(&[x1.clone(), x3.clone()]))),
            scale(&s12, &a.mul(&f.eval(&[x2.clone(), x1.clone()]), &a.alpha(&x3))),
            scale(&-s23.clone(), &f.eval(&[a.mul(&x1, &x3), a.alpha(&x2)])),
            scale(&-s23, &a.mul(&f.eval(&[x1.clone(), x3.clone()]), &a.alpha(&x2))),
        ];
        terms.iter().fold(vec![q(0); a.n], |acc, v| add(&acc, v))
    })
}

/// `f∘g(x,y,z) = f(α(x), g(y,z)) − s_xy f(α(y), g(x,z)) + s_xy f(g(y,x), α(z)) − s_yz f(g(x,z), α(y))`
pub fn ref_circle(a: &RefAlg, f: &RefCochain, g: &RefCochain) -> RefCochain {
    RefCochain::from_fn(a.n, 3, (f.parity + g.parity) % 2, |t| {
        let (x, y, z) = (a.e(t[0]), a.e(t[1]), a.e(t[2]));
        let sxy = sgn(a.par[t[0]] == 1 && a.par[t[1]] == 1);
        let syz = sgn(a.par[t[1]] == 1 && a.par[t[2]] == 1);
        let t1 = f.eval(&[a.alpha(&x), g.eval(&[y.clone(), z.clone()])]);
        let t2 = scale(&-sxy.clone(), &f.eval(&[a.alpha(&y), g.eval(&[x.clone(), z.clone()])]));
        let t3 = scale(&sxy, &f.eval(&[g.eval(&[y.clone(), x.clone()]), a.alpha(&z)]));
        let t4 = scale(&-syz, &f.eval(&[g.eval(&[x.clone(), z.clone()]), a.alpha(&y)]));
        add(&add(&t1, &t2), &add(&t3, &t4))
    })
}

/// `α(f(x₁,…)) = f(α(x₁),…)` on all basis tuples.
pub fn ref_alpha_compatible(a: &RefAlg, f: &RefCochain) -> bool {
    tuples(a.n, f.arity).iter().all(|t| {
        let args: Vec<Vec<Q>> = t.iter().map(|&i| a.alpha(&a.e(i))).collect();
        a.alpha(f.at(t)) == f.eval(&args)
    })
}

// ---------------------------------------------------------------- reference linear algebra

/// Row-reduced echelon form in place; returns pivot columns.
pub fn rref(rows: &mut [Vec<Q>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Q::one() / &rows[r][c];
        rows[r] = scale(&inv, &rows[r]);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                rows[i] = sub(&rows[i], &scale(&f, &pivot_row));
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn ref_rank(rows: &[Vec<Q>]) -> usize {
    rref(&mut rows.to_vec()).len()
}

/// Basis of `{v : rows·v = 0}` for `ncols` unknowns.
pub fn ref_nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![q(0); ncols];
            v[free] = q(1);
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][free].clone();
            }
            v
        })
        .collect()
}

/// Basis of the α-compatible cochains of the given arity and parity, as coefficient vectors.
pub fn ref_cochain_space(a: &RefAlg, arity: usize, parity: u8) -> Vec<RefCochain> {
    let n = a.n;
    let ts = tuples(n, arity);
    let slots: Vec<(usize, usize)> = ts
        .iter()
        .enumerate()
        .flat_map(|(ti, t)| {
            let p = (t.iter().map(|&i| a.par[i]).sum::<u8>() + parity) % 2;
            (0..n).filter(move |&k| a.par[k] == p).map(move |k| (ti, k))
        })
        .collect();
    let unit = |s: usize| {
        let mut values = vec![vec![q(0); n]; ts.len()];
        values[slots[s].0][slots[s].1] = q(1);
        RefCochain { n, arity, parity, values }
    };
    // residual of the α-compatibility identity, linear in the unknown coefficients
    let residual = |f: &RefCochain| -> Vec<Q> {
        ts.iter()
            .flat_map(|t| {
                let args: Vec<Vec<Q>> = t.iter().map(|&i| a.alpha(&a.e(i))).collect();
                sub(&a.alpha(f.at(t)), &f.eval(&args))
            })
            .collect()
    };
    let columns: Vec<Vec<Q>> = (0..slots.len()).map(|s| residual(&unit(s))).collect();
    let nrows = columns.first().map_or(0, Vec::len);
    let rows: Vec<Vec<Q>> = (0..nrows).map(|r| columns.iter().map(|col| col[r].clone()).collect()).collect();
    let kernel = if rows.is_empty() {
        (0..slots.len()).map(|s| (0..slots.len()).map(|c| if c == s { q(1) } else { q(0) }).collect()).collect()
    } else {
        ref_nullspace(&rows, slots.len())
    };
    kernel
        .into_iter()
        .map(|v| {
            let mut values = vec![vec![q(0); n]; ts.len()];
            for (s, c) in v.into_iter().enumerate() {
                values[slots[s].0][slots[s].1] = c;
            }
            RefCochain { n, arity, parity, values }
        })
        .collect()
}

/// `(dim C², dim Z², dim B², dim H²)` in one parity.
pub fn ref_h2(a: &RefAlg, parity: u8) -> (usize, usize, usize, usize) {
    let c2 = ref_cochain_space(a, 2, parity);
    let c1 = ref_cochain_space(a, 1, parity);
    let images: Vec<Vec<Q>> = c2.iter().map(|f| ref_delta2(a, f).flat()).collect();
    let z2 = c2.len() - ref_rank(&images);
    let b2 = ref_rank(&c1.iter().map(|f| ref_delta1(a, f).flat()).collect::<Vec<_>>());
    (c2.len(), z2, b2, z2 - b2)
}

pub fn max_height(values: &[Q]) -> BigInt {
    values
        .iter()
        .map(|v| v.numer().abs().max(v.denom().abs()))
        .max()
        .unwrap_or_else(BigInt::zero)
}

pub fn parity_bit(p: Parity) -> u8 {
    p.bit()
}
