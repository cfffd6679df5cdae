//! The localized algebra `DH(A)` in the normal form
//! `[C_A ⊕ C_B^*] ∗ K_α ∗ K_β^*`, its coproducts and the embeddings of the
//! extended Hall algebra.

use std::collections::HashMap;
use std::fmt;

use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use crate::chi::ChiMap;
use crate::complex::{ComplexCat, ComplexKey};
use crate::error::Result;
use crate::field::Coeff;
use crate::hall::{ExtKey, LinComb, Tensor};
use crate::quiver::KClass;
use crate::rep::{RepCat, RepKey};

/// Normal-form key `[C_A ⊕ C_B^*] ∗ K_α ∗ K_β^*`; ordered by `(A, B, α, β)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DhKey {
    #[serde(rename = "A")]
    pub a: RepKey,
    #[serde(rename = "B")]
    pub b: RepKey,
    pub alpha: KClass,
    pub beta: KClass,
}

impl DhKey {
    pub fn star(&self) -> DhKey {
        DhKey { a: self.b.clone(), b: self.a.clone(), alpha: self.beta.clone(), beta: self.alpha.clone() }
    }

    /// `cl(C_A ⊕ C_B^*) = cl A − cl B`.
    pub fn class(&self) -> KClass {
        &self.a.class() - &self.b.class()
    }

    pub fn has_trivial_core(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl fmt::Display for DhKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[C({})+C*({})]K{}K*{}", self.a, self.b, self.alpha, self.beta)
    }
}

pub type DhElem = LinComb<DhKey>;
pub type DhTensor = Tensor<DhKey>;

/// The localized Hall algebra `DH(A)` of a complex category, with coproduct caches.
pub struct Dh {
    cx: ComplexCat,
    e0_legs: RwLock<HashMap<(ComplexKey, String, bool), DhTensor>>,
}

impl fmt::Debug for Dh {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Dh").field("cx", &self.cx).finish()
    }
}

impl Dh {
    pub fn new(cx: ComplexCat) -> Self {
        Self { cx, e0_legs: Default::default() }
    }

    pub fn cx(&self) -> &ComplexCat {
        &self.cx
    }

    pub fn reps(&self) -> &RepCat {
        self.cx.reps()
    }

    fn qq(&self) -> u32 {
        self.cx.q() as u32
    }

    fn t(&self, n: i64) -> Coeff {
        Coeff::t_pow(n, self.qq())
    }

    fn nv(&self) -> usize {
        self.reps().nv()
    }

    pub fn key(&self, a: RepKey, b: RepKey, alpha: KClass, beta: KClass) -> DhKey {
        DhKey { a, b, alpha, beta }
    }

    pub fn unit_key(&self) -> DhKey {
        let z = self.reps().zero_key();
        let k = KClass::zero(self.nv());
        DhKey { a: z.clone(), b: z, alpha: k.clone(), beta: k }
    }

    pub fn unit(&self) -> DhElem {
        LinComb::basis(self.unit_key(), self.qq())
    }

    pub fn basis(&self, key: DhKey) -> DhElem {
        LinComb::basis(key, self.qq())
    }

    pub fn k_element(&self, alpha: KClass) -> DhElem {
        self.basis(DhKey { alpha, ..self.unit_key() })
    }

    pub fn k_star_element(&self, beta: KClass) -> DhElem {
        self.basis(DhKey { beta, ..self.unit_key() })
    }

    /// `[C_A ⊕ C_B^*]`.
    pub fn core_element(&self, a: RepKey, b: RepKey) -> DhElem {
        self.basis(DhKey { a, b, ..self.unit_key() })
    }

    /// Class of the projective with the given multiplicities.
    fn pclass(&self, mult: &[i64]) -> KClass {
        self.reps().quiver().projective_class(mult)
    }

    /// Rewrites `[L' ⊕ K_P ⊕ K_Q^*] = t^{⟨L̂, cl P − cl Q⟩} [L'] ∗ K_{cl P} ∗ K^*_{cl Q}`.
    pub fn normalize(&self, m: &ComplexKey) -> (DhKey, Coeff) {
        let p = self.pclass(&m.p);
        let q = self.pclass(&m.q);
        let e = self.reps().euler(&m.class(), &(&p - &q));
        (DhKey { a: m.a.clone(), b: m.b.clone(), alpha: p, beta: q }, self.t(e))
    }

    pub fn from_complexes(&self, x: &LinComb<ComplexKey>) -> DhElem {
        let mut out = LinComb::zero(self.qq());
        for (k, c) in x.iter() {
            let (key, tw) = self.normalize(k);
            out.add_term(key, c * &tw);
        }
        out
    }

    fn core_key(&self, k: &DhKey) -> ComplexKey {
        ComplexKey { a: k.a.clone(), b: k.b.clone(), ..self.cx.zero_key() }
    }

    /// Product of normal-form keys: move `K_α K_β^*` of `x` past the core of
    /// `y`, multiply the cores in `H_tw(C(P))`, rewrite acyclic summands.
    pub fn mul_basis(&self, x: &DhKey, y: &DhKey) -> Result<DhElem> {
        let yhat = y.class();
        let e = self.reps().sym_euler(&(&x.alpha - &x.beta), &yhat);
        let tw = self.t(e);
        let alpha = &x.alpha + &y.alpha;
        let beta = &x.beta + &y.beta;
        let prod = self.cx.twisted_mul_basis(&self.core_key(x), &self.core_key(y))?;
        let mut out = LinComb::zero(self.qq());
        for (l, c) in prod.iter() {
            let (k, c2) = self.normalize(l);
            let key = DhKey { alpha: &k.alpha + &alpha, beta: &k.beta + &beta, ..k };
            out.add_term(key, &(c * &c2) * &tw);
        }
        Ok(out)
    }

    pub fn mul(&self, x: &DhElem, y: &DhElem) -> Result<DhElem> {
        x.bilinear(y, |a, b| self.mul_basis(a, b))
    }

    /// `K_γ ∗ x`.
    pub fn left_k(&self, gamma: &KClass, x: &DhElem) -> DhElem {
        let mut out = LinComb::zero(self.qq());
        for (k, c) in x.iter() {
            let e = self.reps().sym_euler(gamma, &k.class());
            out.add_term(DhKey { alpha: &k.alpha + gamma, ..k.clone() }, c * &self.t(e));
        }
        out
    }

    /// `K^*_γ ∗ x`.
    pub fn left_k_star(&self, gamma: &KClass, x: &DhElem) -> DhElem {
        let mut out = LinComb::zero(self.qq());
        for (k, c) in x.iter() {
            let e = self.reps().sym_euler(gamma, &k.class());
            out.add_term(DhKey { beta: &k.beta + gamma, ..k.clone() }, c * &self.t(-e));
        }
        out
    }

    /// `x ∗ K_α ∗ K^*_β`.
    pub fn right_k(&self, x: &DhElem, alpha: &KClass, beta: &KClass) -> DhElem {
        let mut out = LinComb::zero(self.qq());
        for (k, c) in x.iter() {
            out.add_term(DhKey { alpha: &k.alpha + alpha, beta: &k.beta + beta, ..k.clone() }, c.clone());
        }
        out
    }

    /// The involution on keys: `(A, B, α, β) ↦ (B, A, β, α)`.
    pub fn star(&self, x: &DhElem) -> DhElem {
        let mut out = LinComb::zero(self.qq());
        for (k, c) in x.iter() {
            out.add_term(k.star(), c.clone());
        }
        out
    }

    /// `E_A = t^{⟨P_A,A⟩} K_{−P_A} ∗ [C_A] = t^{−⟨A,P_A⟩} [C_A] ∗ K_{−P_A}`.
    pub fn e_element(&self, a: &RepKey) -> Result<DhElem> {
        let res = self.reps().minimal_resolution(a)?;
        let pa = KClass::from_dims(res.p.dims());
        let e = -self.reps().euler(&a.class(), &pa);
        let key = DhKey { a: a.clone(), alpha: -&pa, ..self.unit_key() };
        Ok(LinComb::term(key, self.t(e)))
    }

    /// `F_A = E_A^*`.
    pub fn f_element(&self, a: &RepKey) -> Result<DhElem> {
        Ok(self.star(&self.e_element(a)?))
    }

    /// `ε([N] ∗ K_α ∗ K^*_β) = δ_{N,0}`.
    pub fn counit(&self, x: &DhElem) -> Coeff {
        let mut out = Coeff::zero(self.qq());
        for (k, c) in x.iter() {
            if k.has_trivial_core() {
                out += c;
            }
        }
        out
    }

    fn chi_of(&self, chi: &ChiMap, m: &ComplexKey, n: &ComplexKey) -> i64 {
        let (m1, m0) = self.cx.graded_classes(m);
        let (n1, n0) = self.cx.graded_classes(n);
        chi.eval((&m1, &m0), (&n1, &n0))
    }

    /// `Δ'_{χ}` on `H(C(P))`: `Σ t^{χ(M,N)} g [M] ⊗ [N]` over all conflations
    /// of `L` (or only those in `E_0`).
    pub fn complex_coproduct(&self, l: &ComplexKey, chi: &ChiMap, e0_only: bool) -> Result<Tensor<ComplexKey>> {
        let mut out = LinComb::zero(self.qq());
        for ((m, n), &(all, e0)) in self.cx.subobjects(l)?.by_pair.iter() {
            let count = if e0_only { e0 } else { all };
            if count > 0 {
                let c = self.t(self.chi_of(chi, m, n)).scale_int(count as i64);
                out.add_term((m.clone(), n.clone()), c);
            }
        }
        Ok(out)
    }

    fn normalized(&self, m: &ComplexKey) -> DhElem {
        let (k, c) = self.normalize(m);
        LinComb::term(k, c)
    }

    /// `Δ'_χ([N] ∗ K_α ∗ K^*_β) = Δ'_{χ,E_0}([N]) (K_α ⊗ K_α)(K^*_β ⊗ K^*_β)`.
    pub fn delta_prime_basis(&self, x: &DhKey, chi: &ChiMap) -> Result<DhTensor> {
        let naive = self.complex_coproduct(&self.core_key(x), chi, true)?;
        let mut out = LinComb::zero(self.qq());
        for ((m, n), c) in naive.iter() {
            let left = self.right_k(&self.normalized(m), &x.alpha, &x.beta);
            let right = self.right_k(&self.normalized(n), &x.alpha, &x.beta);
            out.add_scaled(&LinComb::tensor(&left, &right), c);
        }
        Ok(out)
    }

    pub fn delta_prime(&self, x: &DhElem, chi: &ChiMap) -> Result<DhTensor> {
        x.map_linear(|k| self.delta_prime_basis(k, chi))
    }

    /// `Δ_{χ,E_0}([L])` with legs `(K_{N_0} ∗ [M]) ⊗ ([N] ∗ K_{M_1})`, or for
    /// `op` the legs `(K^*_{N_1} ∗ [M]) ⊗ ([N] ∗ K^*_{M_0})`.
    pub fn delta_e0_legs(&self, l: &ComplexKey, chi: &ChiMap, op: bool) -> Result<DhTensor> {
        let ck = (l.clone(), chi.name.clone(), op);
        if let Some(t) = self.e0_legs.read().get(&ck) {
            return Ok(t.clone());
        }
        let zero = KClass::zero(self.nv());
        let naive = self.complex_coproduct(l, chi, true)?;
        let mut out = LinComb::zero(self.qq());
        for ((m, n), c) in naive.iter() {
            let (m1, m0) = self.cx.graded_classes(m);
            let (n1, n0) = self.cx.graded_classes(n);
            let (left, right) = if op {
                (self.left_k_star(&n1, &self.normalized(m)), self.right_k(&self.normalized(n), &zero, &m0))
            } else {
                (self.left_k(&n0, &self.normalized(m)), self.right_k(&self.normalized(n), &m1, &zero))
            };
            out.add_scaled(&LinComb::tensor(&left, &right), c);
        }
        self.e0_legs.write().insert(ck, out.clone());
        Ok(out)
    }

    /// `(x ⊗ y)(z ⊗ w) = (x ∗ z) ⊗ (y ∗ w)`.
    pub fn tensor_mul(&self, u: &DhTensor, v: &DhTensor) -> Result<DhTensor> {
        u.bilinear(v, |(a, b), (c, d)| Ok(LinComb::tensor(&self.mul_basis(a, c)?, &self.mul_basis(b, d)?)))
    }

    /// `Δ_χ([C_A ⊕ C_B^*] ∗ K_α ∗ K^*_β) = Δ_{χ,E_0}([C_A]) Δ^{op}_{χ,E_0}([C_B^*])
    /// (K_α ⊗ K_α)(K^*_β ⊗ K^*_β)`.
    pub fn delta_basis(&self, x: &DhKey, chi: &ChiMap) -> Result<DhTensor> {
        let ca = self.cx.ca_key(&x.a);
        let cb_star = self.cx.ca_key(&x.b).star();
        let d1 = self.delta_e0_legs(&ca, chi, false)?;
        let d2 = self.delta_e0_legs(&cb_star, chi, true)?;
        let prod = if x.b.is_zero() {
            d1
        } else if x.a.is_zero() {
            d2
        } else {
            self.tensor_mul(&d1, &d2)?
        };
        let mut out = LinComb::zero(self.qq());
        for ((l, r), c) in prod.iter() {
            let left = self.right_k(&self.basis(l.clone()), &x.alpha, &x.beta);
            let right = self.right_k(&self.basis(r.clone()), &x.alpha, &x.beta);
            out.add_scaled(&LinComb::tensor(&left, &right), c);
        }
        Ok(out)
    }

    pub fn delta(&self, x: &DhElem, chi: &ChiMap) -> Result<DhTensor> {
        x.map_linear(|k| self.delta_basis(k, chi))
    }

    /// `I^e_+`: `[B] ∗ K_γ ↦ E_B ∗ K_γ`.
    pub fn embed_plus_basis(&self, x: &ExtKey) -> Result<DhElem> {
        let e = self.e_element(&x.rep)?;
        Ok(self.right_k(&e, &x.k, &KClass::zero(self.nv())))
    }

    /// `I^e_-`: `[B] ∗ K_γ ↦ F_B ∗ K^*_γ`.
    pub fn embed_minus_basis(&self, x: &ExtKey) -> Result<DhElem> {
        let f = self.f_element(&x.rep)?;
        Ok(self.right_k(&f, &KClass::zero(self.nv()), &x.k))
    }

    pub fn embed_plus(&self, x: &LinComb<ExtKey>) -> Result<DhElem> {
        x.map_linear(|k| self.embed_plus_basis(k))
    }

    pub fn embed_minus(&self, x: &LinComb<ExtKey>) -> Result<DhElem> {
        x.map_linear(|k| self.embed_minus_basis(k))
    }

    /// Rewrites a normal-form element in terms of `E_A ∗ K_α ∗ K^*_β ∗ F_B`
    /// products, for display: returns the coefficient of `[C_A ⊕ C_B^*]`
    /// inside `E_A ∗ F_B` for the key's core.
    pub fn fact_basis_leading(&self, k: &DhKey) -> Result<Coeff> {
        let prod = self.mul(&self.e_element(&k.a)?, &self.f_element(&k.b)?)?;
        let pa = KClass::from_dims(self.reps().minimal_resolution(&k.a)?.p.dims());
        let pb = KClass::from_dims(self.reps().minimal_resolution(&k.b)?.p.dims());
        let key = DhKey { a: k.a.clone(), b: k.b.clone(), alpha: -&pa, beta: -&pb };
        Ok(prod.get(&key))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Budget;
    use crate::quiver::Quiver;

    fn a2() -> Dh {
        Dh::new(ComplexCat::new(RepCat::new(Quiver::a_n(2), 2, Budget::default()).unwrap()))
    }

    #[test]
    fn unit_laws() {
        let dh = a2();
        let s1 = dh.reps().parse_key("S1").unwrap();
        let e = dh.e_element(&s1).unwrap();
        assert_eq!(dh.mul(&dh.unit(), &e).unwrap(), e);
        assert_eq!(dh.mul(&e, &dh.unit()).unwrap(), e);
    }

    #[test]
    fn e_of_projective_is_plain_class() {
        let dh = a2();
        let p1 = dh.reps().parse_key("P1").unwrap();
        assert_eq!(dh.e_element(&p1).unwrap(), dh.core_element(p1, dh.reps().zero_key()));
    }

    #[test]
    fn k_relations() {
        let dh = a2();
        let a = KClass(vec![1, -1]);
        let b = KClass(vec![0, 2]);
        let ka = dh.k_element(a.clone());
        let kb = dh.k_element(b.clone());
        assert_eq!(dh.mul(&ka, &kb).unwrap(), dh.k_element(&a + &b));
        let ksb = dh.k_star_element(b);
        assert_eq!(dh.mul(&ka, &ksb).unwrap(), dh.mul(&ksb, &ka).unwrap());
    }

    #[test]
    fn e_products_match_rep_products() {
        // E_{S1} E_{S2} = t^{-1}(E_{S1⊕S2} + E_{P1})
        let dh = a2();
        let r = dh.reps();
        let [s1, s2, s12, p1] = ["S1", "S2", "S1+S2", "P1"].map(|s| r.parse_key(s).unwrap());
        let lhs = dh.mul(&dh.e_element(&s1).unwrap(), &dh.e_element(&s2).unwrap()).unwrap();
        let rhs = dh.e_element(&s12).unwrap().add(&dh.e_element(&p1).unwrap()).scale(&Coeff::t_pow(-1, 2));
        assert_eq!(lhs, rhs);
    }
}
