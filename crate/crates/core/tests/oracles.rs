//! Counting identities checked against closed forms and brute force.

use perihall::matrix::{enumerate_subspaces, gaussian_binomial, FqMatrix, Subspace};
use perihall::rep::RepCat;
use perihall::{Budget, Coeff, KClass, Quiver};
use proptest::prelude::*;

/// `[n k]_q` from the product formula, independent of the library.
fn binom_q(n: u32, k: u32, q: u64) -> u64 {
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

fn gl_order(n: u32, q: u64) -> u64 {
    (0..n).map(|i| q.pow(n) - q.pow(i)).product()
}

fn cat(n: usize, q: u32) -> RepCat {
    RepCat::new(Quiver::a_n(n), q, Budget::default()).unwrap()
}

proptest! {
    #[test]
    fn subspace_count_is_gaussian_binomial(q in prop::sample::select(vec![2u8, 3, 5]), n in 0usize..=4, k in 0usize..=4) {
        prop_assume!(k <= n);
        let subs = enumerate_subspaces(q, n, k, Budget::default()).unwrap();
        let oracle = binom_q(n as u32, k as u32, q as u64);
        prop_assert_eq!(subs.len() as u64, oracle);
        prop_assert_eq!(gaussian_binomial(n, k, q as u64) as u64, oracle);
        prop_assert!(subs.iter().all(|s| s.dim() == k));
    }

    #[test]
    fn rank_nullity(q in prop::sample::select(vec![2u8, 3, 5]), rows in 1usize..5, cols in 1usize..5, seed in any::<Vec<u8>>()) {
        let data: Vec<u8> = (0..rows * cols).map(|i| seed.get(i).copied().unwrap_or(0) % q).collect();
        let m = FqMatrix::new(q, rows, cols, data);
        let ker = m.kernel();
        prop_assert_eq!(m.rank() + ker.len(), cols);
        for v in &ker {
            prop_assert!(m.apply(v).iter().all(|&x| x == 0));
        }
        prop_assert_eq!(Subspace::image(&m).dim(), m.rank());
    }

    #[test]
    fn inverse_is_two_sided(q in prop::sample::select(vec![2u8, 3, 5]), n in 1usize..5, seed in any::<Vec<u8>>()) {
        let data: Vec<u8> = (0..n * n).map(|i| seed.get(i).copied().unwrap_or(0) % q).collect();
        let m = FqMatrix::new(q, n, n, data);
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv), FqMatrix::identity(q, n));
                prop_assert_eq!(inv.mul(&m), FqMatrix::identity(q, n));
            }
            None => prop_assert!(m.rank() < n),
        }
    }

    #[test]
    fn t_powers_multiply(q in prop::sample::select(vec![2u32, 3, 5]), a in -6i64..6, b in -6i64..6) {
        let prod = &Coeff::t_pow(a, q) * &Coeff::t_pow(b, q);
        prop_assert_eq!(prod, Coeff::t_pow(a + b, q));
        prop_assert_eq!(&Coeff::t(q) * &Coeff::t(q), Coeff::from_int(q as i64, q));
    }
}

#[test]
fn hall_numbers_of_semisimple_a1() {
    for q in [2u32, 3] {
        let c = cat(1, q);
        for n in 0..=3usize {
            let l = c.enumerate_reps_of_dims(&[n]).unwrap().remove(0);
            for b in 0..=n {
                let m = c.enumerate_reps_of_dims(&[n - b]).unwrap().remove(0);
                let s = c.enumerate_reps_of_dims(&[b]).unwrap().remove(0);
                assert_eq!(
                    c.hall_number(&l, &m, &s).unwrap(),
                    binom_q(n as u32, b as u32, q as u64),
                    "q={q} n={n} b={b}"
                );
            }
            assert_eq!(c.aut_count(&l).unwrap(), gl_order(n as u32, q as u64));
        }
    }
}

/// Brute force: all pairs `(U_1, U_2)` of subspaces with `f(U_1) ⊆ U_2`.
fn subrep_count_a2(c: &RepCat, key: &perihall::rep::RepKey) -> u64 {
    let rep = c.rep(key);
    let (d1, d2) = (rep.dims()[0], rep.dims()[1]);
    let q = c.q();
    let f = rep.mat(0);
    let mut count = 0;
    for k1 in 0..=d1 {
        for u1 in enumerate_subspaces(q, d1, k1, Budget::default()).unwrap() {
            let image = u1.map(f);
            for k2 in 0..=d2 {
                for u2 in enumerate_subspaces(q, d2, k2, Budget::default()).unwrap() {
                    if image.is_subspace_of(&u2) {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

#[test]
fn subobject_tables_count_every_subrepresentation() {
    for q in [2u32, 3] {
        let c = cat(2, q);
        for l in c.enumerate_reps(&[2, 2]).unwrap() {
            let total: u64 = c.subobject_table(&l).unwrap().values().sum();
            assert_eq!(total, subrep_count_a2(&c, &l), "q={q} L={l}");
        }
    }
}

#[test]
fn indecomposables_of_a2() {
    let c = cat(2, 2);
    // the indecomposables are S_1, S_2 and P_1
    let indec: Vec<_> = c
        .enumerate_reps(&[1, 1])
        .unwrap()
        .into_iter()
        .filter(|k| !k.is_zero() && c.indecomposable_summands(&c.rep(k)).unwrap().len() == 1)
        .collect();
    assert_eq!(indec.len(), 3);
}

#[test]
fn euler_form_pairs_projectives_with_simples() {
    let quiver = Quiver::a_n(3);
    for i in 0..3 {
        let p = KClass::from_dims(&quiver.projective_dims(i));
        for j in 0..3 {
            assert_eq!(quiver.euler(&p, &KClass::unit(3, j)), (i == j) as i64);
        }
    }
}

#[test]
fn ext_and_hom_match_euler_form() {
    let c = cat(2, 3);
    let keys = c.enumerate_reps(&[1, 2]).unwrap();
    for a in &keys {
        for b in &keys {
            let (x, y) = (c.rep(a), c.rep(b));
            let lhs = c.hom_dim(&x, &y) as i64 - c.ext_dim(&x, &y) as i64;
            assert_eq!(lhs, c.euler(&a.class(), &b.class()), "{a} {b}");
        }
    }
}

/// Brute-force extension enumeration against `q^{dim Ext¹}`.
#[test]
fn extension_enumeration_matches_ext_dimension() {
    for q in [2u32, 3] {
        let c = cat(2, q);
        let keys = c.enumerate_reps(&[1, 1]).unwrap();
        for m in &keys {
            for n in &keys {
                let total: u64 = c.ext_classes(m, n).unwrap().values().sum();
                let ext = c.ext_dim(&c.rep(m), &c.rep(n));
                assert_eq!(total, (q as u64).pow(ext as u32), "q={q} {m} {n}");
                for (l, &count) in c.ext_classes(m, n).unwrap().iter() {
                    assert_eq!(c.ext_count_with_middle(m, n, l).unwrap(), count, "q={q} {m} {n} {l}");
                }
            }
        }
    }
}
