//! Sparse linear combinations and the Hall algebras of representations:
//! `H(A)` with `⋄`, the twisted `H_tw(A)` with `∗`, the extended algebra with
//! the symbols `K_α`, Green's coproduct and the counit.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::field::Coeff;
use crate::quiver::KClass;
use crate::rep::{RepCat, RepKey};

/// A finite linear combination of basis keys with coefficients in `Q(t)`;
/// zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct LinComb<K: Ord> {
    q: u32,
    terms: BTreeMap<K, Coeff>,
}

/// Elements of a tensor square.
pub type Tensor<K> = LinComb<(K, K)>;

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero(q: u32) -> Self {
        Self { q, terms: BTreeMap::new() }
    }

    pub fn basis(key: K, q: u32) -> Self {
        Self::term(key, Coeff::one(q))
    }

    pub fn term(key: K, c: Coeff) -> Self {
        let q = c.q();
        let mut out = Self::zero(q);
        out.add_term(key, c);
        out
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn add_term(&mut self, key: K, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &Coeff) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Coeff::one(self.q));
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Coeff::from_int(-1, self.q));
        out
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut out = Self::zero(self.q);
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, key: &K) -> Coeff {
        self.terms.get(key).cloned().unwrap_or_else(|| Coeff::zero(self.q))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Coeff)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Applies a linear map given on basis keys.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Result<LinComb<L>>) -> Result<LinComb<L>> {
        let mut out = LinComb::zero(self.q);
        for (k, c) in &self.terms {
            out.add_scaled(&f(k)?, c);
        }
        Ok(out)
    }

    /// Extends a bilinear map given on pairs of basis keys.
    pub fn bilinear<L: Ord + Clone, M: Ord + Clone>(
        &self,
        other: &LinComb<L>,
        mut f: impl FnMut(&K, &L) -> Result<LinComb<M>>,
    ) -> Result<LinComb<M>> {
        let mut out = LinComb::zero(self.q);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_scaled(&f(a, b)?, &(ca * cb));
            }
        }
        Ok(out)
    }
}

impl<K: Ord + Clone> LinComb<(K, K)> {
    /// `a ⊗ b` for two elements.
    pub fn tensor(a: &LinComb<K>, b: &LinComb<K>) -> Self {
        let mut out = Self::zero(a.q);
        for (x, cx) in &a.terms {
            for (y, cy) in &b.terms {
                out.add_term((x.clone(), y.clone()), cx * cy);
            }
        }
        out
    }

    pub fn flip(&self) -> Self {
        let mut out = Self::zero(self.q);
        for ((a, b), c) in &self.terms {
            out.add_term((b.clone(), a.clone()), c.clone());
        }
        out
    }

    /// `(f ⊗ g)(self)` for linear maps given on basis keys.
    pub fn map_each<L: Ord + Clone>(
        &self,
        mut f: impl FnMut(&K) -> Result<LinComb<L>>,
        mut g: impl FnMut(&K) -> Result<LinComb<L>>,
    ) -> Result<LinComb<(L, L)>> {
        let mut out = LinComb::zero(self.q);
        for ((a, b), c) in &self.terms {
            out.add_scaled(&LinComb::tensor(&f(a)?, &g(b)?), c);
        }
        Ok(out)
    }
}

impl<K: Ord + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})[{k}]")?;
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(k, c)| (k, c.to_string()))).finish()
    }
}

/// Trilinear tensors, for coassociativity.
pub type Tensor3<K> = LinComb<(K, K, K)>;

/// `(Δ ⊗ id)` and `(id ⊗ Δ)` applied to a tensor.
pub fn coassoc_sides<K: Ord + Clone>(
    x: &K,
    mut delta: impl FnMut(&K) -> Result<Tensor<K>>,
) -> Result<(Tensor3<K>, Tensor3<K>)> {
    let d = delta(x)?;
    let mut left = LinComb::zero(d.q());
    let mut right = LinComb::zero(d.q());
    for ((a, b), c) in d.iter() {
        for ((a1, a2), c1) in delta(a)?.iter() {
            left.add_term((a1.clone(), a2.clone(), b.clone()), c * c1);
        }
        for ((b1, b2), c2) in delta(b)?.iter() {
            right.add_term((a.clone(), b1.clone(), b2.clone()), c * c2);
        }
    }
    Ok((left, right))
}

/// Basis key of the extended algebra: `[A] ∗ K_α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ExtKey {
    pub rep: RepKey,
    pub k: KClass,
}

/// The Hall algebras attached to a representation category.
pub struct HallAlgebra<'a> {
    cat: &'a RepCat,
}

impl<'a> HallAlgebra<'a> {
    pub fn new(cat: &'a RepCat) -> Self {
        Self { cat }
    }

    pub fn cat(&self) -> &RepCat {
        self.cat
    }

    fn qq(&self) -> u32 {
        self.cat.q() as u32
    }

    fn t(&self, n: i64) -> Coeff {
        Coeff::t_pow(n, self.qq())
    }

    pub fn unit(&self) -> LinComb<RepKey> {
        LinComb::basis(self.cat.zero_key(), self.qq())
    }

    pub fn basis(&self, key: RepKey) -> LinComb<RepKey> {
        LinComb::basis(key, self.qq())
    }

    /// `[A] ⋄ [B] = Σ_C |Ext¹(A,B)_C| / |Hom(A,B)| [C]`, from an enumeration
    /// of extension classes.
    pub fn mul_basis(&self, a: &RepKey, b: &RepKey) -> Result<LinComb<RepKey>> {
        let q = self.qq();
        let hom = self.cat.hom_dim(&self.cat.rep(a), &self.cat.rep(b)) as i64;
        let scale = Coeff::t_pow(-2 * hom, q);
        let mut out = LinComb::zero(q);
        for (c, &n) in self.cat.ext_classes(a, b)?.iter() {
            out.add_term(c.clone(), scale.scale_int(n as i64));
        }
        Ok(out)
    }

    /// The same product through Hall numbers:
    /// `[A] ⋄ [B] = Σ_C g^C_{A,B} a_A a_B / a_C [C]`.
    pub fn mul_basis_via_g(&self, a: &RepKey, b: &RepKey) -> Result<LinComb<RepKey>> {
        let q = self.qq();
        let target = &a.class() + &b.class();
        let dims = target.to_dims().expect("non-negative");
        let mut out = LinComb::zero(q);
        let ab = self.cat.aut_count(a)? as i64 * self.cat.aut_count(b)? as i64;
        for c in self.cat.enumerate_reps_of_dims(&dims)? {
            let g = self.cat.hall_number(&c, a, b)? as i64;
            if g != 0 {
                let ac = self.cat.aut_count(&c)? as i64;
                out.add_term(c, Coeff::from_ratio(g * ab, ac, q));
            }
        }
        Ok(out)
    }

    pub fn mul(&self, x: &LinComb<RepKey>, y: &LinComb<RepKey>) -> Result<LinComb<RepKey>> {
        x.bilinear(y, |a, b| self.mul_basis(a, b))
    }

    /// `[A] ∗ [B] = t^{⟨A,B⟩} [A] ⋄ [B]`.
    pub fn twisted_mul_basis(&self, a: &RepKey, b: &RepKey) -> Result<LinComb<RepKey>> {
        let e = self.cat.euler(&a.class(), &b.class());
        Ok(self.mul_basis(a, b)?.scale(&self.t(e)))
    }

    pub fn twisted_mul(&self, x: &LinComb<RepKey>, y: &LinComb<RepKey>) -> Result<LinComb<RepKey>> {
        x.bilinear(y, |a, b| self.twisted_mul_basis(a, b))
    }

    /// Green's coproduct `Δ'([A]) = Σ t^{⟨B,C⟩} g^A_{B,C} [B] ⊗ [C]`.
    pub fn green_coproduct_basis(&self, a: &RepKey) -> Result<Tensor<RepKey>> {
        let mut out = LinComb::zero(self.qq());
        for ((b, c), &g) in self.cat.subobject_table(a)?.iter() {
            let e = self.cat.euler(&b.class(), &c.class());
            out.add_term((b.clone(), c.clone()), self.t(e).scale_int(g as i64));
        }
        Ok(out)
    }

    pub fn green_coproduct(&self, x: &LinComb<RepKey>) -> Result<Tensor<RepKey>> {
        x.map_linear(|a| self.green_coproduct_basis(a))
    }

    pub fn counit(&self, x: &LinComb<RepKey>) -> Coeff {
        x.get(&self.cat.zero_key())
    }

    /// `(x ⊗ y)(z ⊗ w) = (x ∗ z) ⊗ (y ∗ w)`, for a given product on keys.
    pub fn tensor_mul_plain(
        &self,
        u: &Tensor<RepKey>,
        v: &Tensor<RepKey>,
        mul: impl Fn(&RepKey, &RepKey) -> Result<LinComb<RepKey>>,
    ) -> Result<Tensor<RepKey>> {
        u.bilinear(v, |(a, b), (c, d)| Ok(LinComb::tensor(&mul(a, c)?, &mul(b, d)?)))
    }

    /// `([a] ⊗ [b])([c] ⊗ [d]) = t^{(cl b, cl c)} (a ∗ c) ⊗ (b ∗ d)`.
    pub fn tensor_mul_green_twisted(
        &self,
        u: &Tensor<RepKey>,
        v: &Tensor<RepKey>,
        mul: impl Fn(&RepKey, &RepKey) -> Result<LinComb<RepKey>>,
    ) -> Result<Tensor<RepKey>> {
        u.bilinear(v, |(a, b), (c, d)| {
            let e = self.cat.sym_euler(&b.class(), &c.class());
            Ok(LinComb::tensor(&mul(a, c)?, &mul(b, d)?).scale(&self.t(e)))
        })
    }

    // Extended algebra.

    pub fn ext_unit(&self) -> LinComb<ExtKey> {
        self.ext_basis(self.cat.zero_key(), KClass::zero(self.cat.nv()))
    }

    pub fn ext_basis(&self, rep: RepKey, k: KClass) -> LinComb<ExtKey> {
        LinComb::basis(ExtKey { rep, k }, self.qq())
    }

    pub fn k_element(&self, alpha: KClass) -> LinComb<ExtKey> {
        self.ext_basis(self.cat.zero_key(), alpha)
    }

    /// `([A] K_α)([B] K_β) = t^{(α,B)} ([A] ∗ [B]) K_{α+β}`.
    pub fn extended_mul_basis(&self, x: &ExtKey, y: &ExtKey) -> Result<LinComb<ExtKey>> {
        let e = self.cat.sym_euler(&x.k, &y.rep.class());
        let k = &x.k + &y.k;
        let prod = self.twisted_mul_basis(&x.rep, &y.rep)?;
        let mut out = LinComb::zero(self.qq());
        let tw = self.t(e);
        for (c, v) in prod.iter() {
            out.add_term(ExtKey { rep: c.clone(), k: k.clone() }, v * &tw);
        }
        Ok(out)
    }

    pub fn extended_mul(&self, x: &LinComb<ExtKey>, y: &LinComb<ExtKey>) -> Result<LinComb<ExtKey>> {
        x.bilinear(y, |a, b| self.extended_mul_basis(a, b))
    }

    /// `Δ([A] K_α) = Σ t^{⟨B,C⟩} g^A_{B,C} ([B] K_{Ĉ+α}) ⊗ ([C] K_α)`.
    pub fn extended_coproduct_basis(&self, x: &ExtKey) -> Result<Tensor<ExtKey>> {
        let mut out = LinComb::zero(self.qq());
        for ((b, c), v) in self.green_coproduct_basis(&x.rep)?.iter() {
            let left = ExtKey { rep: b.clone(), k: &c.class() + &x.k };
            let right = ExtKey { rep: c.clone(), k: x.k.clone() };
            out.add_term((left, right), v.clone());
        }
        Ok(out)
    }

    pub fn extended_coproduct(&self, x: &LinComb<ExtKey>) -> Result<Tensor<ExtKey>> {
        x.map_linear(|a| self.extended_coproduct_basis(a))
    }

    /// `ε([A] K_α) = δ_{A,0}`.
    pub fn extended_counit(&self, x: &LinComb<ExtKey>) -> Coeff {
        let mut out = Coeff::zero(self.qq());
        for (k, c) in x.iter() {
            if k.rep.is_zero() {
                out += c;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Budget;
    use crate::quiver::Quiver;

    #[test]
    fn a1_square_of_simple() {
        let cat = RepCat::new(Quiver::a_n(1), 2, Budget::default()).unwrap();
        let h = HallAlgebra::new(&cat);
        let k = cat.parse_key("1").unwrap();
        let k2 = cat.parse_key("2").unwrap();
        let prod = h.mul_basis(&k, &k).unwrap();
        assert_eq!(prod, LinComb::term(k2.clone(), Coeff::from_ratio(1, 2, 2)));
        assert_eq!(h.mul_basis_via_g(&k, &k).unwrap(), prod);
        let d = h.green_coproduct_basis(&k2).unwrap();
        assert_eq!(d.get(&(k.clone(), k.clone())), Coeff::t(2).scale_int(3));
    }

    #[test]
    fn a2_twisted_products() {
        let cat = RepCat::new(Quiver::a_n(2), 2, Budget::default()).unwrap();
        let h = HallAlgebra::new(&cat);
        let s1 = cat.parse_key("S1").unwrap();
        let s2 = cat.parse_key("S2").unwrap();
        let s12 = cat.parse_key("S1+S2").unwrap();
        let p1 = cat.parse_key("P1").unwrap();
        let tinv = Coeff::t_pow(-1, 2);
        let mut want = LinComb::term(s12.clone(), tinv.clone());
        want.add_term(p1, tinv);
        assert_eq!(h.twisted_mul_basis(&s1, &s2).unwrap(), want);
        assert_eq!(h.twisted_mul_basis(&s2, &s1).unwrap(), h.basis(s12));
    }
}
