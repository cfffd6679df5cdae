use perihall::chi::ChiMap;
use perihall::complex::ComplexCat;
use perihall::dh::{Dh, DhElem};
use perihall::rep::RepCat;
use perihall::verify::{Session, SessionConfig, Status};
use perihall::{Budget, Coeff, KClass, Quiver};
use serde_json::Value;

fn dh(n: usize, q: u32) -> Dh {
    Dh::new(ComplexCat::new(RepCat::new(Quiver::a_n(n), q, Budget::default()).unwrap()))
}

fn small_elements(d: &Dh) -> Vec<DhElem> {
    let reps = d.reps().enumerate_reps(&[1, 1]).unwrap();
    let mut out = Vec::new();
    for a in &reps {
        for b in &reps {
            out.push(d.core_element(a.clone(), b.clone()));
        }
    }
    out.push(d.k_element(KClass(vec![1, 0])));
    out.push(d.k_star_element(KClass(vec![0, 1])));
    out
}

#[test]
fn unit_and_star() {
    let d = dh(2, 2);
    let one = d.unit();
    for x in small_elements(&d) {
        assert_eq!(d.mul(&one, &x).unwrap(), x);
        assert_eq!(d.mul(&x, &one).unwrap(), x);
        assert_eq!(d.star(&d.star(&x)), x);
    }
}

#[test]
fn star_is_multiplicative() {
    let d = dh(2, 2);
    let xs = small_elements(&d);
    for x in &xs {
        for y in &xs {
            let lhs = d.star(&d.mul(x, y).unwrap());
            let rhs = d.mul(&d.star(x), &d.star(y)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn k_elements_are_invertible() {
    let d = dh(2, 3);
    let a = KClass(vec![1, 1]);
    let prod = d.mul(&d.k_element(a.clone()), &d.k_element(-&a)).unwrap();
    assert_eq!(prod, d.unit());
    let prod = d.mul(&d.k_star_element(a.clone()), &d.k_star_element(-&a)).unwrap();
    assert_eq!(prod, d.unit());
}

#[test]
fn coproducts_are_counital() {
    let d = dh(2, 2);
    for chi in [ChiMap::euler(d.reps().quiver()), ChiMap::chi0(d.reps().quiver())] {
        for x in small_elements(&d) {
            let dx = d.delta_prime(&x, &chi).unwrap();
            let mut left = DhElem::zero(2);
            let mut right = DhElem::zero(2);
            for ((l, r), c) in dx.iter() {
                left.add_scaled(&d.basis(r.clone()), &(&d.counit(&d.basis(l.clone())) * c));
                right.add_scaled(&d.basis(l.clone()), &(&d.counit(&d.basis(r.clone())) * c));
            }
            assert_eq!(left, x, "{}", chi.name);
            assert_eq!(right, x, "{}", chi.name);
        }
    }
}

#[test]
fn e_and_f_are_exchanged_by_star() {
    let d = dh(2, 2);
    for a in d.reps().enumerate_reps(&[1, 1]).unwrap() {
        let e = d.e_element(&a).unwrap();
        assert_eq!(d.f_element(&a).unwrap(), d.star(&e));
        assert_eq!(d.counit(&e), if a.is_zero() { Coeff::one(2) } else { Coeff::zero(2) });
    }
}

fn report(n: usize, q: u32, bound: &[usize], id: &str) -> perihall::verify::CheckReport {
    let mut cfg = SessionConfig::new(Quiver::a_n(n), q, bound.to_vec());
    cfg.deterministic = true;
    Session::new(cfg).unwrap().run(id).unwrap()
}

/// The identities relating `C_A` to resolutions hold on `A_1`, where every
/// short exact sequence has additive minimal resolutions.
#[test]
fn resolution_identities_hold_on_a1() {
    for q in [2, 3] {
        for id in ["lemma-ggt", "lemma-dcca", "thm-embedding", "thm-embedding2"] {
            assert_eq!(report(1, q, &[3], id).status, Status::Pass, "{id} q={q}");
        }
    }
}

/// On `A_2` they break, and only on representations `A` admitting a
/// sequence `D → A → B` with `cl P_A ≠ cl P_B + cl P_D`, such as
/// `S_2 → P_1 → S_1`.
#[test]
fn resolution_identities_fail_only_on_nonadditive_sequences() {
    for id in ["lemma-ggt", "lemma-dcca", "thm-embedding", "thm-embedding2"] {
        let r = report(2, 2, &[2, 2], id);
        assert_eq!(r.status, Status::Fail, "{id}");
        let cex = r.counterexample.unwrap();
        assert_eq!(cex["all_failures_have_nonadditive_resolutions"], Value::Bool(true), "{id}");
        assert_eq!(cex["first"]["A"], "1,1:1", "{id}");
    }
}

/// On `A_1` the only failing generator pairs mix an `E` with an `F`.
#[test]
fn bialgebra_failures_on_a1_are_mixed_pairs() {
    let r = report(1, 2, &[3], "thm-bialgebra");
    assert_eq!(r.status, Status::Fail);
    let pairs = r.counterexample.unwrap()["failing_pairs"].as_array().unwrap().clone();
    assert_eq!(pairs.len(), 18);
    for p in pairs {
        let p = p.as_str().unwrap();
        assert!(p.contains("E[") && p.contains("F["), "{p}");
    }
}

#[test]
fn deterministic_reports_are_byte_identical() {
    let a = serde_json::to_string(&report(2, 2, &[1, 1], "coassoc-E0")).unwrap();
    let b = serde_json::to_string(&report(2, 2, &[1, 1], "coassoc-E0")).unwrap();
    assert_eq!(a, b);
}
