//! Property tests for the invariants of every module.

mod common;

use std::sync::Arc;

use common::*;
use homnov::cohomology::{circle_alpha, delta1, delta2, h2, is_hom_cochain, Cochain};
use homnov::constructions::{form_twist, involutive_untwist};
use homnov::deformation::{
    apply_equivalence, check_deformation, cohomology_class_delta, is_two_cocycle, obstruction, rigidity_reduce,
    TruncatedDeformation,
};
use homnov::exactlin::{int, invert, is_even_map, kernel_basis, kernel_graded, rank, solve};
use homnov::samples::Sampler;
use homnov::superalgebra::*;
use homnov::{BilinearForm, EvenMap, GradedSpace, Matrix, Parity, SuperAlgebra};
use num_traits::Zero;
use proptest::prelude::*;

fn matrix_strategy(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-3i64..=3, r * c)
            .prop_map(move |v| Matrix::from_fn(r, c, |i, j| int(v[i * c + j])))
    })
}

fn square_strategy(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(-3i64..=3, n * n).prop_map(move |v| Matrix::from_fn(n, n, |i, j| int(v[i * n + j])))
    })
}

fn verdicts(a: &SuperAlgebra) -> Vec<bool> {
    vec![
        is_multiplicative(a).holds(),
        is_hom_left_symmetric(a).holds(),
        satisfies_hom_novikov_identity(a).holds(),
        is_hom_novikov(a).holds(),
        is_hom_associative(a).holds(),
        is_supercommutative(a).holds(),
        is_hom_lie(a).holds(),
        is_involutive(a),
        is_regular(a),
    ]
}

// ---------------------------------------------------------------- exact linear algebra

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_plus_nullity_is_column_count(m in matrix_strategy(6)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + k.len(), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn solutions_solve(m in matrix_strategy(5), seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let x0: Vec<_> = (0..m.cols()).map(|_| int(s.int_in(-3, 3))).collect();
        let b = m.mul_vec(&x0);
        let x = solve(&m, &b).unwrap().expect("consistent by construction");
        prop_assert_eq!(m.mul_vec(&x), b);
        let c: Vec<_> = (0..m.rows()).map(|_| int(s.int_in(-3, 3))).collect();
        let augmented = Matrix::from_fn(m.rows(), m.cols() + 1, |i, j| if j < m.cols() { m[(i, j)].clone() } else { c[i].clone() });
        match solve(&m, &c).unwrap() {
            Some(x) => prop_assert_eq!(m.mul_vec(&x), c),
            None => prop_assert_eq!(rank(&augmented), rank(&m) + 1),
        }
    }

    #[test]
    fn inverses_invert(m in square_strategy(5)) {
        match invert(&m) {
            Some(inv) => {
                prop_assert_eq!(inv.mul(&m), Matrix::identity(m.rows()));
                prop_assert_eq!(m.mul(&inv), Matrix::identity(m.rows()));
            }
            None => prop_assert!(rank(&m) < m.rows()),
        }
    }

    #[test]
    fn graded_kernels_are_homogeneous(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let space = s.graded_space(6);
        let m = s.even_matrix(&space, 1);
        let k = kernel_graded(&space, &m).unwrap();
        prop_assert_eq!(k.dim(), kernel_basis(&m).len());
        for v in k.basis() {
            prop_assert!(space.parity_of(v).is_some());
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }
}

// ---------------------------------------------------------------- superalgebras

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn grading_violations_are_rejected(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let space = s.graded_space(4);
        prop_assume!(space.odd_dim() > 0);
        let n = space.dim();
        let (i, j) = (s.int_in(0, n as i64 - 1) as usize, s.int_in(0, n as i64 - 1) as usize);
        let wrong = space.parity(i) + space.parity(j) + Parity::Odd;
        let k = space.block(wrong).start;
        prop_assume!(k < n && space.parity(k) == wrong);
        let mut mul = vec![int(0); n * n * n];
        mul[(i * n + j) * n + k] = int(1);
        prop_assert!(SuperAlgebra::new(space, mul, Matrix::identity(n)).is_err());
    }

    #[test]
    fn hom_novikov_is_the_conjunction(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let a = if seed % 2 == 0 { arbitrary_algebra(&mut s, 4) } else { s.hom_novikov() };
        let parts = is_multiplicative(&a).holds() && is_hom_left_symmetric(&a).holds() && satisfies_hom_novikov_identity(&a).holds();
        prop_assert_eq!(is_hom_novikov(&a).holds(), parts);
        if is_hom_novikov(&a).holds() {
            prop_assert!(is_hom_left_symmetric(&a).holds() && satisfies_hom_novikov_identity(&a).holds());
        }
    }

    #[test]
    fn supercommutative_odd_squares_vanish(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let a = if seed % 2 == 0 { s.hom_supercommutative() } else { arbitrary_algebra(&mut s, 4) };
        if is_supercommutative(&a).holds() {
            for i in a.space().block(Parity::Odd) {
                prop_assert!(a.basis_product(i, i).iter().all(Zero::is_zero));
            }
        }
    }

    #[test]
    fn nondegenerate_supersymmetric_even_forms_have_even_odd_block(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let space = s.graded_space(5);
        let n = space.dim();
        let mut gram = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                if space.parity(i) != space.parity(j) {
                    continue;
                }
                let v = int(s.int_in(-2, 2));
                if space.parity(i) == Parity::Odd {
                    if i != j {
                        gram[(i, j)] = v.clone();
                        gram[(j, i)] = -v;
                    }
                } else {
                    gram[(i, j)] = v.clone();
                    gram[(j, i)] = v;
                }
            }
        }
        let b = BilinearForm::new(space.clone(), gram).unwrap();
        prop_assert!(form_is_supersymmetric(&b).holds() && form_is_even(&b).holds());
        if form_is_nondegenerate(&b).holds() {
            prop_assert_eq!(space.odd_dim() % 2, 0);
        }
        if space.odd_dim() % 2 == 1 {
            prop_assert!(!form_is_nondegenerate(&b).holds());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn predicates_are_basis_independent(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let a = match seed % 3 {
            0 => arbitrary_algebra(&mut s, 3),
            1 => s.hom_novikov(),
            _ => s.hom_supercommutative(),
        };
        let t = s.invertible_even_matrix(a.space());
        let b = a.change_basis(&t).unwrap();
        prop_assert_eq!(verdicts(&a), verdicts(&b));

        let d = s.derivation(&a);
        let m = s.commuting_map(&a);
        let raw = EvenMap::new(a.space().clone(), s.even_matrix(a.space(), 1)).unwrap();
        for map in [&d, &m, &raw] {
            let moved = map.change_basis(&t).unwrap();
            prop_assert_eq!(is_derivation(&a, map).unwrap().holds(), is_derivation(&b, &moved).unwrap().holds());
            prop_assert_eq!(commutes_with_alpha(&a, map).unwrap().holds(), commutes_with_alpha(&b, &moved).unwrap().holds());
            for lambda in [int(0), int(-1)] {
                prop_assert_eq!(is_rota_baxter(&a, map, &lambda).unwrap().holds(), is_rota_baxter(&b, &moved, &lambda).unwrap().holds());
            }
        }

        let (q, form) = s.quadratic_hom_novikov();
        let t = s.invertible_even_matrix(q.space());
        let (q2, form2) = (q.change_basis(&t).unwrap(), form.change_basis(&t).unwrap());
        prop_assert!(is_quadratic_hom_novikov(&q, &form).unwrap().holds());
        prop_assert!(is_quadratic_hom_novikov(&q2, &form2).unwrap().holds());
        prop_assert_eq!(form_is_lie_invariant(&q, &form).unwrap().holds(), form_is_lie_invariant(&q2, &form2).unwrap().holds());
        let skewed = BilinearForm::new(q.space().clone(), s.even_matrix(q.space(), 1)).unwrap();
        let skewed2 = skewed.change_basis(&t).unwrap();
        prop_assert_eq!(form_is_supersymmetric(&skewed).holds(), form_is_supersymmetric(&skewed2).holds());
        prop_assert_eq!(form_is_nondegenerate(&skewed).holds(), form_is_nondegenerate(&skewed2).holds());
        prop_assert_eq!(form_is_novikov_invariant(&q, &skewed).unwrap().holds(), form_is_novikov_invariant(&q2, &skewed2).unwrap().holds());
        prop_assert_eq!(form_alpha_symmetric(&q, &skewed).unwrap().holds(), form_alpha_symmetric(&q2, &skewed2).unwrap().holds());
    }
}

// ---------------------------------------------------------------- constructions

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn form_twist_powers_compose(seed in any::<u64>(), a in 1u32..=3, b in 1u32..=3) {
        let mut s = Sampler::new(seed);
        let (alg, form) = if seed % 2 == 0 {
            s.quadratic_hom_novikov()
        } else {
            let space = s.graded_space(4);
            let gram = s.even_matrix(&space, 2);
            (SuperAlgebra::zero(space.clone()).with_alpha(s.even_matrix(&space, 2)).unwrap(), BilinearForm::new(space, gram).unwrap())
        };
        let alpha = EvenMap::new(alg.space().clone(), alg.alpha().clone()).unwrap();
        let once = form_twist(&form, &alpha, a + b).unwrap();
        let twice = form_twist(&form_twist(&form, &alpha, a).unwrap(), &alpha, b).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn untwisting_twice_restores_the_product(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let base = arbitrary_algebra(&mut s, 4);
        let space = base.space().clone();
        // an involution: conjugate of a ±1 diagonal by an even change of basis
        let signs: Vec<_> = (0..space.dim()).map(|_| int(if s.int_in(0, 1) == 0 { 1 } else { -1 })).collect();
        let t = s.invertible_even_matrix(&space);
        let alpha = t.mul(&Matrix::diagonal(&signs)).mul(&invert(&t).unwrap());
        let a = base.with_alpha(alpha).unwrap();
        prop_assert!(is_involutive(&a));
        let once = involutive_untwist(&a).unwrap();
        let twice = involutive_untwist(&once.with_alpha(a.alpha().clone()).unwrap()).unwrap();
        prop_assert_eq!(twice.structure_tensor(), a.structure_tensor());
    }
}

// ---------------------------------------------------------------- cohomology

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn coboundaries_are_hom_cochains(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let a = Arc::new(s.hom_novikov());
        for p in Parity::BOTH {
            let f1 = s.cochain(&a, 1, p);
            let f2 = s.cochain(&a, 2, p);
            prop_assert!(is_hom_cochain(&delta1(&f1).unwrap()).holds());
            prop_assert!(is_hom_cochain(&delta2(&f2).unwrap()).holds());
            prop_assert!(delta2(&delta1(&f1).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn even_coboundary_is_a_symmetric_composite(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let a = Arc::new(s.hom_novikov());
        let g0 = Cochain::product(a.clone());
        let f = s.cochain(&a, 2, Parity::Even);
        let composite = circle_alpha(&f, &g0).unwrap().add(&circle_alpha(&g0, &f).unwrap()).unwrap();
        prop_assert_eq!(delta2(&f).unwrap(), composite);
    }

    #[test]
    fn operators_are_linear(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let a = Arc::new(s.hom_novikov());
        let c = s.scalar(5);
        for p in Parity::BOTH {
            let (f, g) = (s.cochain(&a, 1, p), s.cochain(&a, 1, p));
            prop_assert_eq!(delta1(&f.add(&g).unwrap()).unwrap(), delta1(&f).unwrap().add(&delta1(&g).unwrap()).unwrap());
            prop_assert_eq!(delta1(&f.scale(&c)).unwrap(), delta1(&f).unwrap().scale(&c));
            let (f, g) = (s.cochain(&a, 2, p), s.cochain(&a, 2, p));
            prop_assert_eq!(delta2(&f.add(&g).unwrap()).unwrap(), delta2(&f).unwrap().add(&delta2(&g).unwrap()).unwrap());
            prop_assert_eq!(delta2(&f.scale(&c)).unwrap(), delta2(&f).unwrap().scale(&c));
            let h = s.cochain(&a, 2, p);
            let left = circle_alpha(&f.add(&g).unwrap(), &h).unwrap();
            prop_assert_eq!(left, circle_alpha(&f, &h).unwrap().add(&circle_alpha(&g, &h).unwrap()).unwrap());
            let right = circle_alpha(&h, &f.add(&g).unwrap()).unwrap();
            prop_assert_eq!(right, circle_alpha(&h, &f).unwrap().add(&circle_alpha(&h, &g).unwrap()).unwrap());
            prop_assert_eq!(circle_alpha(&f.scale(&c), &h).unwrap(), circle_alpha(&f, &h).unwrap().scale(&c));
            prop_assert_eq!(circle_alpha(&h, &f.scale(&c)).unwrap(), circle_alpha(&h, &f).unwrap().scale(&c));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn second_cohomology_is_basis_independent(seed in any::<u64>()) {
        let mut s = Sampler::new(seed).with_max_dim(3);
        let a = s.hom_novikov();
        let t = s.invertible_even_matrix(a.space());
        let b = a.change_basis(&t).unwrap();
        let (a, b) = (Arc::new(a), Arc::new(b));
        for p in Parity::BOTH {
            prop_assert_eq!(h2(&a, p).unwrap().dim_h2, h2(&b, p).unwrap().dim_h2);
        }
    }
}

// ---------------------------------------------------------------- deformations

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn equivalence_preserves_validity(seed in any::<u64>(), order in 1usize..=3) {
        let mut s = Sampler::new(seed).with_max_dim(3);
        let d = s.deformation(order);
        prop_assert!(check_deformation(&d).is_ok());
        let phi = s.equivalence(d.base(), order);
        let moved = apply_equivalence(&d, &phi).unwrap();
        prop_assert!(check_deformation(&moved).is_ok());
        prop_assert_eq!(apply_equivalence(&moved, &phi.inverse()).unwrap(), d.clone());
        let difference = cohomology_class_delta(&d, &moved, &phi).unwrap();
        let expected = delta1(&map_cochain(d.base(), phi.map(1))).unwrap();
        prop_assert_eq!(difference, expected);
    }

    #[test]
    fn valid_deformations_satisfy_the_order_equations(seed in any::<u64>(), order in 1usize..=4) {
        let mut s = Sampler::new(seed).with_max_dim(3);
        let d = s.deformation(order);
        prop_assert!(check_deformation(&d).is_ok());
        prop_assert!(is_two_cocycle(d.base(), d.term(1)).unwrap().holds());
        for n in 1..=order {
            let lhs = delta2(d.term(n)).unwrap().scale(&int(-1));
            let mut rhs = Cochain::zero(d.base().clone(), 3, Parity::Even);
            for i in 1..n {
                rhs = rhs.add(&circle_alpha(d.term(i), d.term(n - i)).unwrap()).unwrap();
            }
            prop_assert_eq!(&lhs, &rhs);
            prop_assert_eq!(obstruction(&d, n).unwrap(), rhs);
        }
    }
}

/// The 1-cochain `x ↦ M x`.
fn map_cochain(a: &Arc<SuperAlgebra>, m: &Matrix) -> Cochain {
    let n = a.dim();
    let coeffs = (0..n).flat_map(|i| m.column(i)).collect();
    Cochain::new(a.clone(), 1, Parity::Even, coeffs).unwrap()
}

#[test]
fn rigid_bases_reduce_every_deformation() {
    // e·e = e: any G_i(e,e) = c_i e gives the commutative associative product (1 + Σ c_i tⁱ) e·e.
    let base = arc(unit_line());
    for p in Parity::BOTH {
        assert_eq!(h2(&base, p).unwrap().dim_h2, 0);
    }
    let mut s = Sampler::new(77);
    for _ in 0..20 {
        let order = s.int_in(1, 4) as usize;
        let terms = (0..order).map(|_| Cochain::new(base.clone(), 2, Parity::Even, vec![s.scalar(3)]).unwrap()).collect();
        let d = TruncatedDeformation::new(base.clone(), terms).unwrap();
        let (reduced, ok) = rigidity_reduce(&d).unwrap();
        assert!(ok && reduced.is_null());
    }

    // sampled bases with vanishing H², deformed by transporting the null deformation
    let mut found = 0;
    let mut s = Sampler::new(78).with_max_dim(3);
    while found < 5 {
        let a = Arc::new(s.hom_novikov());
        if Parity::BOTH.iter().any(|&p| h2(&a, p).unwrap().dim_h2 != 0) {
            continue;
        }
        found += 1;
        for order in 1..=3 {
            let phi = s.equivalence(&a, order);
            let d = apply_equivalence(&TruncatedDeformation::null(a.clone(), order).unwrap(), &phi).unwrap();
            let (reduced, ok) = rigidity_reduce(&d).unwrap();
            assert!(ok && reduced.is_null());
        }
    }
}

#[test]
fn even_maps_are_even() {
    let mut s = Sampler::new(3);
    for _ in 0..50 {
        let space: GradedSpace = s.graded_space(5);
        assert!(is_even_map(&space, &s.even_matrix(&space, 3)).unwrap());
    }
}
