//! Two-periodic complexes of projective representations, modelled as
//! representations of the doubled quiver with the relations `d∘d = 0` and
//! `d` commuting with the arrows.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use crate::diagram::{self, Morphism, Rep};
use crate::error::{Budget, Error, Result};
use crate::field::Coeff;
use crate::hall::LinComb;
use crate::matrix::{FqMatrix, Subspace};
use crate::quiver::{KClass, Shape};
use crate::rep::{RepCat, RepKey};

/// Iso-class key `(A, B, P, Q)` of `C_A ⊕ C_B^* ⊕ K_P ⊕ K_Q^*`, where `P`, `Q`
/// are given by multiplicities of the indecomposable projectives.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ComplexKey {
    #[serde(rename = "A")]
    pub a: RepKey,
    #[serde(rename = "B")]
    pub b: RepKey,
    #[serde(rename = "P")]
    pub p: Vec<i64>,
    #[serde(rename = "Q")]
    pub q: Vec<i64>,
}

impl ComplexKey {
    pub fn is_acyclic(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.is_acyclic() && self.p.iter().chain(&self.q).all(|&m| m == 0)
    }

    /// The key of `M^*`.
    pub fn star(&self) -> ComplexKey {
        ComplexKey { a: self.b.clone(), b: self.a.clone(), p: self.q.clone(), q: self.p.clone() }
    }

    /// `cl(M) = cl(H_0) − cl(H_1)`.
    pub fn class(&self) -> KClass {
        &self.a.class() - &self.b.class()
    }

    /// The non-acyclic part `C_A ⊕ C_B^*`.
    pub fn core(&self) -> ComplexKey {
        let n = self.p.len();
        ComplexKey { a: self.a.clone(), b: self.b.clone(), p: vec![0; n], q: vec![0; n] }
    }
}

impl fmt::Display for ComplexKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C[{}]+C*[{}]", self.a, self.b)?;
        if self.p.iter().any(|&m| m != 0) {
            write!(f, "+K{:?}", self.p)?;
        }
        if self.q.iter().any(|&m| m != 0) {
            write!(f, "+K*{:?}", self.q)?;
        }
        Ok(())
    }
}

/// A complex `M_1 ⇄ M_0` with `d_1: M_1 → M_0`, `d_0: M_0 → M_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    rep: Rep,
}

impl Complex {
    pub fn rep(&self) -> &Rep {
        &self.rep
    }

    pub fn total_dim(&self) -> usize {
        self.rep.total_dim()
    }
}

/// How the subobjects of a complex `L` split up by the iso classes of
/// quotient and subobject.
#[derive(Clone, Debug, Default)]
pub struct SubobjectCounts {
    /// `(M, N) ↦ (all subobjects, subobjects whose sequence lies in E_0)`
    /// for quotients with projective components.
    pub by_pair: BTreeMap<(ComplexKey, ComplexKey), (u64, u64)>,
    /// Subobjects whose quotient has a non-projective component.
    pub non_projective: u64,
}

/// The category `C(P)` over a quiver, with caches.
pub struct ComplexCat {
    reps: RepCat,
    shape: Shape,
    decompositions: RwLock<HashMap<Vec<u8>, ComplexKey>>,
    representatives: RwLock<HashMap<ComplexKey, Arc<Complex>>>,
    auts: RwLock<HashMap<ComplexKey, u64>>,
    subobjects: RwLock<HashMap<ComplexKey, Arc<SubobjectCounts>>>,
    products: RwLock<HashMap<(ComplexKey, ComplexKey), LinComb<ComplexKey>>>,
}

impl fmt::Debug for ComplexCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ComplexCat").field("reps", &self.reps).finish()
    }
}

impl ComplexCat {
    pub fn new(reps: RepCat) -> Self {
        let shape = reps.quiver().doubled_shape();
        Self {
            reps,
            shape,
            decompositions: Default::default(),
            representatives: Default::default(),
            auts: Default::default(),
            subobjects: Default::default(),
            products: Default::default(),
        }
    }

    pub fn reps(&self) -> &RepCat {
        &self.reps
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn q(&self) -> u8 {
        self.reps.q()
    }

    fn qq(&self) -> u32 {
        self.reps.q() as u32
    }

    fn budget(&self) -> Budget {
        self.reps.budget()
    }

    fn nv(&self) -> usize {
        self.reps.nv()
    }

    fn narrows(&self) -> usize {
        self.reps.quiver().arrows().len()
    }

    /// Assembles `M_1 ⇄ M_0`; fails unless `d` is a pair of morphisms with
    /// `d∘d = 0`.
    pub fn from_parts(&self, m1: &Rep, m0: &Rep, d1: &Morphism, d0: &Morphism) -> Result<Complex> {
        let rshape = self.reps.shape();
        if !diagram::is_morphism(rshape, m1, m0, d1) || !diagram::is_morphism(rshape, m0, m1, d0) {
            return Err(Error::DimensionMismatch("differentials are not morphisms of representations".into()));
        }
        let mut dims = m0.dims().to_vec();
        dims.extend_from_slice(m1.dims());
        let mut mats: Vec<FqMatrix> = m0.mats().to_vec();
        mats.extend(m1.mats().iter().cloned());
        mats.extend(d1.iter().cloned());
        mats.extend(d0.iter().cloned());
        Ok(Complex { rep: Rep::new(&self.shape, self.q(), dims, mats)? })
    }

    /// Wraps a representation of the doubled shape.
    pub fn from_rep(&self, rep: Rep) -> Result<Complex> {
        if rep.dims().len() != self.shape.nv || !rep.satisfies_relations(&self.shape) {
            return Err(Error::DimensionMismatch("not a complex over this quiver".into()));
        }
        Ok(Complex { rep })
    }

    /// The graded piece `M_deg`.
    pub fn piece(&self, c: &Complex, deg: usize) -> Rep {
        let n = self.nv();
        let m = self.narrows();
        let dims = c.rep.dims()[deg * n..(deg + 1) * n].to_vec();
        let mats = c.rep.mats()[deg * m..(deg + 1) * m].to_vec();
        Rep::from_parts(self.q(), dims, mats)
    }

    /// `d_deg: M_deg → M_{deg+1}`.
    pub fn differential(&self, c: &Complex, deg: usize) -> Morphism {
        let n = self.nv();
        let off = 2 * self.narrows() + if deg == 1 { 0 } else { n };
        c.rep.mats()[off..off + n].to_vec()
    }

    pub fn zero(&self) -> Complex {
        Complex { rep: Rep::zero(&self.shape, self.q()) }
    }

    fn zero_morphism(&self, x: &Rep, y: &Rep) -> Morphism {
        x.dims().iter().zip(y.dims()).map(|(&a, &b)| FqMatrix::zeros(self.q(), b, a)).collect()
    }

    /// `K_P = (P ⇄ P)` with `d_1 = 1`, `d_0 = 0`.
    pub fn k_p(&self, p: &Rep) -> Result<Complex> {
        if !self.reps.is_projective(p) {
            return Err(Error::NotProjective(format!("{:?}", p.dims())));
        }
        self.from_parts(p, p, &p.identity(), &self.zero_morphism(p, p))
    }

    /// `K_P^* = (P ⇄ P)` with `d_1 = 0`, `d_0 = −1`.
    pub fn k_p_star(&self, p: &Rep) -> Result<Complex> {
        Ok(self.star(&self.k_p(p)?))
    }

    /// Swaps the graded pieces and negates both differentials.
    pub fn star(&self, c: &Complex) -> Complex {
        let neg = |f: Morphism| f.iter().map(|m| m.neg()).collect::<Morphism>();
        let m1 = self.piece(c, 1);
        let m0 = self.piece(c, 0);
        let d1 = self.differential(c, 1);
        let d0 = self.differential(c, 0);
        self.from_parts(&m0, &m1, &neg(d0), &neg(d1)).expect("star of a complex is a complex")
    }

    pub fn direct_sum(&self, x: &Complex, y: &Complex) -> Complex {
        Complex { rep: x.rep.direct_sum(&y.rep) }
    }

    /// `H_deg = ker d_deg / im d_{deg+1}` as a representation.
    pub fn homology_rep(&self, c: &Complex, deg: usize) -> Rep {
        let rshape = self.reps.shape();
        let m = self.piece(c, deg);
        let ker = diagram::kernel(&self.differential(c, deg));
        let img = diagram::image(&self.differential(c, 1 - deg));
        let krep = diagram::sub_rep(rshape, &m, &ker);
        let img_in_ker: Vec<Subspace> = ker
            .iter()
            .zip(&img)
            .map(|(k, i)| {
                let coords: Vec<Vec<u8>> = i.basis().iter().map(|b| k.coords(b)).collect();
                Subspace::span(self.q(), k.dim(), &coords)
            })
            .collect();
        diagram::quotient_rep(rshape, &krep, &img_in_ker)
    }

    /// `(H_0, H_1)` as iso-class keys.
    pub fn homology(&self, c: &Complex) -> Result<(RepKey, RepKey)> {
        Ok((self.reps.key(&self.homology_rep(c, 0))?, self.reps.key(&self.homology_rep(c, 1))?))
    }

    pub fn in_cp(&self, c: &Complex) -> bool {
        self.reps.is_projective(&self.piece(c, 0)) && self.reps.is_projective(&self.piece(c, 1))
    }

    /// `C_A = (P_A ⇄ Q_A)` with `d_1 = f_A`, `d_0 = 0`.
    pub fn make_ca(&self, a: &RepKey) -> Result<Complex> {
        let res = self.reps.minimal_resolution(a)?;
        self.from_parts(&res.p, &res.q, &res.f, &self.zero_morphism(&res.q, &res.p))
    }

    /// Iso-class key of a complex in `C(P)` (cached).
    pub fn decompose(&self, c: &Complex) -> Result<ComplexKey> {
        let enc = c.rep.encode();
        if let Some(k) = self.decompositions.read().get(&enc) {
            return Ok(k.clone());
        }
        let key = self.decompose_uncached(c)?;
        self.decompositions.write().insert(enc, key.clone());
        Ok(key)
    }

    fn decompose_uncached(&self, c: &Complex) -> Result<ComplexKey> {
        if !self.in_cp(c) {
            return Err(Error::NotProjective("complex has a non-projective component".into()));
        }
        let (a, b) = self.homology(c)?;
        let quiver = self.reps.quiver();
        // cl(im d_1) = cl(P_A) + cl(P) and cl(im d_0) = cl(P_B) + cl(Q).
        let acyclic_part = |deg: usize, h: &RepKey| -> Result<Vec<i64>> {
            let img: Vec<usize> = diagram::image(&self.differential(c, deg)).iter().map(|s| s.dim()).collect();
            let total = quiver.projective_multiplicities(&KClass::from_dims(&img));
            let top = self.reps.top(&self.reps.rep(h));
            let h_mult = quiver.projective_multiplicities(&h.class());
            let out: Vec<i64> = (0..self.nv()).map(|v| total[v] - top[v] as i64 + h_mult[v]).collect();
            if out.iter().any(|&m| m < 0) {
                return Err(Error::Internal(format!("negative multiplicity {out:?} in decomposition")));
            }
            Ok(out)
        };
        let p = acyclic_part(1, &a)?;
        let q = acyclic_part(0, &b)?;
        Ok(ComplexKey { a, b, p, q })
    }

    /// A fixed representative `C_A ⊕ C_B^* ⊕ K_P ⊕ K_Q^*` of a key (cached).
    pub fn complex_of(&self, key: &ComplexKey) -> Result<Arc<Complex>> {
        if let Some(c) = self.representatives.read().get(key) {
            return Ok(c.clone());
        }
        let to_usize = |m: &[i64]| m.iter().map(|&x| x.max(0) as usize).collect::<Vec<_>>();
        let ca = self.make_ca(&key.a)?;
        let cb = self.star(&self.make_ca(&key.b)?);
        let kp = self.k_p(&self.reps.projective_sum(&to_usize(&key.p)))?;
        let kq = self.k_p_star(&self.reps.projective_sum(&to_usize(&key.q)))?;
        let c = Arc::new(self.direct_sum(&self.direct_sum(&ca, &cb), &self.direct_sum(&kp, &kq)));
        self.representatives.write().insert(key.clone(), c.clone());
        Ok(c)
    }

    /// `cl(M_1)` and `cl(M_0)` of the complexes with this key.
    pub fn graded_classes(&self, key: &ComplexKey) -> (KClass, KClass) {
        let quiver = self.reps.quiver();
        let q_of = |h: &RepKey| -> KClass {
            let top: Vec<i64> = self.reps.top(&self.reps.rep(h)).iter().map(|&t| t as i64).collect();
            quiver.projective_class(&top)
        };
        let (qa, qb) = (q_of(&key.a), q_of(&key.b));
        let pa = &qa - &key.a.class();
        let pb = &qb - &key.b.class();
        let acyc = &quiver.projective_class(&key.p) + &quiver.projective_class(&key.q);
        (&(&pa + &qb) + &acyc, &(&qa + &pb) + &acyc)
    }

    /// `⟨M,N⟩' = ⟨M_0,N_0⟩ + ⟨M_1,N_1⟩`.
    pub fn euler_dash(&self, m: &ComplexKey, n: &ComplexKey) -> i64 {
        let (m1, m0) = self.graded_classes(m);
        let (n1, n0) = self.graded_classes(n);
        self.reps.euler(&m0, &n0) + self.reps.euler(&m1, &n1)
    }

    pub fn zero_key(&self) -> ComplexKey {
        let z = self.reps.zero_key();
        ComplexKey { a: z.clone(), b: z, p: vec![0; self.nv()], q: vec![0; self.nv()] }
    }

    /// Key of `C_A`.
    pub fn ca_key(&self, a: &RepKey) -> ComplexKey {
        ComplexKey { a: a.clone(), ..self.zero_key() }
    }

    /// Keys of all complexes in `C(P)` whose graded pieces `M_1`, `M_0` have
    /// dimension vectors bounded by `bound`, sorted.
    pub fn enumerate_keys(&self, bound: &[usize]) -> Result<Vec<ComplexKey>> {
        let quiver = self.reps.quiver();
        let fits = |c: &KClass| c.0.iter().zip(bound).all(|(&x, &b)| x >= 0 && x as usize <= b);
        let maxb = bound.iter().copied().max().unwrap_or(0);
        let mults: Vec<Vec<i64>> = crate::rep::dim_vectors_below(&vec![maxb; self.nv()])
            .into_iter()
            .map(|m| m.into_iter().map(|x| x as i64).collect::<Vec<i64>>())
            .filter(|m| fits(&quiver.projective_class(m)))
            .collect();
        let reps = self.reps.enumerate_reps(bound)?;
        let zero = vec![0i64; self.nv()];
        let mut out = Vec::new();
        for a in &reps {
            for b in &reps {
                let core = ComplexKey { a: a.clone(), b: b.clone(), p: zero.clone(), q: zero.clone() };
                let (c1, c0) = self.graded_classes(&core);
                if !fits(&c1) || !fits(&c0) {
                    continue;
                }
                for p in &mults {
                    for q in &mults {
                        let key = ComplexKey { p: p.clone(), q: q.clone(), ..core.clone() };
                        let (m1, m0) = self.graded_classes(&key);
                        if fits(&m1) && fits(&m0) {
                            out.push(key);
                        }
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn hom_dim(&self, x: &Complex, y: &Complex) -> usize {
        diagram::hom_dim(&self.shape, &x.rep, &y.rep)
    }

    pub fn aut_count(&self, key: &ComplexKey) -> Result<u64> {
        if let Some(&a) = self.auts.read().get(key) {
            return Ok(a);
        }
        let c = self.complex_of(key)?;
        let a = diagram::aut_count(&self.shape, &c.rep, self.budget())?;
        self.auts.write().insert(key.clone(), a);
        Ok(a)
    }

    /// Exhaustive isomorphism test.
    pub fn complexes_iso(&self, x: &Complex, y: &Complex) -> Result<bool> {
        Ok(diagram::find_iso(&self.shape, &x.rep, &y.rep, self.budget())?.is_some())
    }

    /// All pairs of subrepresentations `U_1 ⊆ L_1`, `U_0 ⊆ L_0` stable under
    /// both differentials.
    pub fn enumerate_subcomplexes(&self, l: &Complex) -> Result<Vec<Vec<Subspace>>> {
        diagram::enumerate_subreps(&self.shape, &l.rep, None, self.budget())
    }

    pub fn subcomplex(&self, l: &Complex, sub: &[Subspace]) -> Complex {
        Complex { rep: diagram::sub_rep(&self.shape, &l.rep, sub) }
    }

    pub fn quotient(&self, l: &Complex, sub: &[Subspace]) -> Complex {
        Complex { rep: diagram::quotient_rep(&self.shape, &l.rep, sub) }
    }

    /// `H_i(M) ≠ 0 ⟹ H_{i+1}(N) = 0` for `i = 0, 1`, for a conflation
    /// `N → L → M`.
    pub fn is_e0(m: &ComplexKey, n: &ComplexKey) -> bool {
        !(!m.a.is_zero() && !n.b.is_zero()) && !(!m.b.is_zero() && !n.a.is_zero())
    }

    /// Subobject counts of the representative of `l` (cached).
    pub fn subobjects(&self, l: &ComplexKey) -> Result<Arc<SubobjectCounts>> {
        if let Some(s) = self.subobjects.read().get(l) {
            return Ok(s.clone());
        }
        let c = self.complex_of(l)?;
        let mut counts = SubobjectCounts::default();
        for sub in self.enumerate_subcomplexes(&c)? {
            let quot = self.quotient(&c, &sub);
            if !self.in_cp(&quot) {
                counts.non_projective += 1;
                continue;
            }
            let n = self.decompose(&self.subcomplex(&c, &sub))?;
            let m = self.decompose(&quot)?;
            let e0 = Self::is_e0(&m, &n);
            let entry = counts.by_pair.entry((m, n)).or_insert((0, 0));
            entry.0 += 1;
            if e0 {
                entry.1 += 1;
            }
        }
        let counts = Arc::new(counts);
        self.subobjects.write().insert(l.clone(), counts.clone());
        Ok(counts)
    }

    /// `g^L_{M,N}` for complexes.
    pub fn hall_number(&self, l: &ComplexKey, m: &ComplexKey, n: &ComplexKey) -> Result<u64> {
        Ok(self.subobjects(l)?.by_pair.get(&(m.clone(), n.clone())).map_or(0, |c| c.0))
    }

    /// `w^L_{M,N}`: subobjects `N' ≅ N` with `L/N' ≅ M` whose conflation lies in `E_0`.
    pub fn w_number(&self, l: &ComplexKey, m: &ComplexKey, n: &ComplexKey) -> Result<u64> {
        Ok(self.subobjects(l)?.by_pair.get(&(m.clone(), n.clone())).map_or(0, |c| c.1))
    }

    /// `|W^L_{M,N}|` counted as pairs (inflation, deflation): every
    /// subobject accounts for `a_M · a_N` such pairs.
    pub fn conflation_pair_count(&self, l: &ComplexKey, m: &ComplexKey, n: &ComplexKey) -> Result<u64> {
        Ok(self.w_number(l, m, n)? * self.aut_count(m)? * self.aut_count(n)?)
    }

    /// `[X] ⋄ [Y] = Σ_L |Ext¹(X,Y)_L| / |Hom(X,Y)| [L]` in `H(C(P))`.
    pub fn mul_basis(&self, x: &ComplexKey, y: &ComplexKey) -> Result<LinComb<ComplexKey>> {
        let k = (x.clone(), y.clone());
        if let Some(p) = self.products.read().get(&k) {
            return Ok(p.clone());
        }
        let cx = self.complex_of(x)?;
        let cy = self.complex_of(y)?;
        let ext = diagram::extensions(&self.shape, &cx.rep, &cy.rep, self.budget())?;
        let q = self.qq();
        let scale = Coeff::t_pow(-2 * ext.hom_dim as i64, q);
        let mut out = LinComb::zero(q);
        for l in ext.middles {
            out.add_term(self.decompose(&Complex { rep: l })?, scale.clone());
        }
        self.products.write().insert(k, out.clone());
        Ok(out)
    }

    /// `[X] ∗ [Y] = t^{⟨X,Y⟩'} [X] ⋄ [Y]`.
    pub fn twisted_mul_basis(&self, x: &ComplexKey, y: &ComplexKey) -> Result<LinComb<ComplexKey>> {
        let e = self.euler_dash(x, y);
        Ok(self.mul_basis(x, y)?.scale(&Coeff::t_pow(e, self.qq())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn a2() -> ComplexCat {
        ComplexCat::new(RepCat::new(Quiver::a_n(2), 2, Budget::default()).unwrap())
    }

    #[test]
    fn c_s1_homology_and_key() {
        let cx = a2();
        let s1 = cx.reps().parse_key("S1").unwrap();
        let c = cx.make_ca(&s1).unwrap();
        assert_eq!(cx.piece(&c, 1).dims(), &[0, 1]);
        assert_eq!(cx.piece(&c, 0).dims(), &[1, 1]);
        let (h0, h1) = cx.homology(&c).unwrap();
        assert_eq!(h0, s1);
        assert!(h1.is_zero());
        assert_eq!(cx.decompose(&c).unwrap(), cx.ca_key(&s1));
        let st = cx.star(&c);
        assert_eq!(cx.homology(&st).unwrap(), (cx.reps().zero_key(), s1));
    }

    #[test]
    fn acyclic_complexes() {
        let cx = a2();
        let p1 = cx.reps().projective(0);
        let k = cx.k_p(&p1).unwrap();
        let key = cx.decompose(&k).unwrap();
        assert!(key.is_acyclic());
        assert_eq!(key.p, vec![1, 0]);
        let ks = cx.k_p_star(&cx.reps().projective(1)).unwrap();
        assert_eq!(cx.decompose(&ks).unwrap().q, vec![0, 1]);
        assert!(!cx.complexes_iso(&k, &cx.k_p_star(&p1).unwrap()).unwrap());
        assert!(cx.k_p(&cx.reps().simple(0)).is_err());
    }

    #[test]
    fn subcomplexes_of_kp() {
        let cx = ComplexCat::new(RepCat::new(Quiver::a_n(1), 2, Budget::default()).unwrap());
        let k = cx.k_p(&cx.reps().projective(0)).unwrap();
        assert_eq!(cx.enumerate_subcomplexes(&k).unwrap().len(), 3);
    }
}
