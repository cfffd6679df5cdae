//! Exhaustive desk-scale checks of the algebraic identities, with
//! deterministic JSON reports.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::path::PathBuf;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::chi::ChiMap;
use crate::complex::{ComplexCat, ComplexKey};
use crate::dh::{Dh, DhElem, DhKey};
use crate::diagram::{self, Morphism};
use crate::error::{Budget, Error, Result};
use crate::field::{check_prime, Coeff};
use crate::hall::{coassoc_sides, ExtKey, HallAlgebra, LinComb, Tensor};
use crate::json;
use crate::matrix::{FqMatrix, Subspace};
use crate::quiver::{KClass, Quiver};
use crate::rep::{RepCat, RepKey};

/// Check ids with their anchors.
pub const CHECKS: [(&str, &str); 18] = [
    ("assoc-hall", "Σ_Q g^Q_{M,N} g^R_{Q,P} = Σ_S g^R_{M,S} g^S_{N,P}"),
    ("assoc-dh", "(x ∗ y) ∗ z = x ∗ (y ∗ z) in DH(A)"),
    ("coassoc-naive", "(Δ'_χ ⊗ 1)Δ'_χ = (1 ⊗ Δ'_χ)Δ'_χ on H(C(P)), all conflations"),
    ("coassoc-E0", "(Δ'_χ ⊗ 1)Δ'_χ = (1 ⊗ Δ'_χ)Δ'_χ on DH(A), E_0-conflations"),
    ("coideal", "H_*(L) = 0 ⟹ every term of Δ'_{χ,E_0}([L]) has acyclic legs"),
    ("naive-failure", "H_*(L) = 0 and H_*(M) ≠ 0 for a conflation N → L → M"),
    ("exact-axioms", "Ex0, Ex1, Ex1^op, Ex2, Ex2^op for (C(P), E_0)"),
    ("lemma-ncm", "E_0-conflations N → C_A → M have M = C_B, N = C_D and w = g"),
    ("lemma-aa", "a_{C_A} = a_A |Hom(Q_A,P_A)|, |Hom(C_A,C_B)| = |Hom(Q_A,P_B)| |Hom(A,B)|"),
    ("lemma-ggt", "g^{C_A}_{C_B,C_D} = t^{2⟨Q_D,P_B⟩} g^A_{B,D}"),
    ("lemma-dcca", "Δ_{χ_0}([C_A]) = Σ t^{⟨D,P_B⟩−⟨Q_D,B⟩} g^A_{B,D} (K_{Q_D} ∗ [C_B]) ⊗ ([C_D] ∗ K_{P_B})"),
    ("thm-embedding", "(I^e_+ ⊗ I^e_+) Δ([A]) = Δ_{χ_0}(E_A)"),
    ("thm-embedding2", "(I^e_- ⊗ I^e_-) Δ([B]) = Δ_{χ_0}(F_B)"),
    ("thm-bialgebra", "Δ_{χ_0}(x ∗ y) = Δ_{χ_0}(x) Δ_{χ_0}(y) with (x⊗y)(z⊗w) = (x∗z)⊗(y∗w)"),
    ("green-bialgebra", "Δ'([A] ∗ [B]) = Δ'([A]) Δ'([B]), plain or t^{(b,c)}-twisted tensor product"),
    ("km-kk-relations", "K_α ∗ [M] = t^{(α,M̂)} [M] ∗ K_α, K_α ∗ K_β = K_{α+β}, [K_α, K_β^*] = 0"),
    ("ext-hom-bridge", "|Ext¹_{C(A)}(M,N)| = |Hom_{Ho(A)}(M,N^*)|"),
    ("serre-sanity", "E_1²E_2 − (t+t⁻¹)E_1E_2E_1 + E_2E_1² = 0 in H_tw(A)"),
];

pub fn anchor(id: &str) -> Option<&'static str> {
    CHECKS.iter().find(|(c, _)| *c == id).map(|(_, a)| *a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedBudget,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub status: Status,
    pub anchor: String,
    pub counterexample: Option<Value>,
    pub ms: u64,
    /// Human-readable notes (witnesses, exponents); not part of the JSON.
    #[serde(skip)]
    pub detail: Option<String>,
}

#[derive(Clone, Debug)]
pub struct SessionConfig {
    pub quiver: Quiver,
    pub quiver_path: Option<PathBuf>,
    pub q: u32,
    pub dim_bound: Vec<usize>,
    pub budget: Budget,
    pub chi: ChiMap,
    pub checks: Vec<String>,
    /// Zero the timings so that reports are byte-identical across runs.
    pub deterministic: bool,
}

impl Default for SessionConfig {
    /// `A_2`, `q = 2`, bound `(2,2)`, budget `2^20`, `χ_0`.
    fn default() -> Self {
        let quiver = Quiver::a_n(2);
        let chi = ChiMap::chi0(&quiver);
        Self {
            quiver,
            quiver_path: None,
            q: 2,
            dim_bound: vec![2, 2],
            budget: Budget::default(),
            chi,
            checks: vec!["all".into()],
            deterministic: false,
        }
    }
}

impl SessionConfig {
    pub fn new(quiver: Quiver, q: u32, dim_bound: Vec<usize>) -> Self {
        let chi = ChiMap::chi0(&quiver);
        Self { quiver, q, dim_bound, chi, ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        check_prime(self.q)?;
        let n = self.quiver.num_vertices();
        if self.dim_bound.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "dimension bound has {} entries, quiver has {n} vertices",
                self.dim_bound.len()
            )));
        }
        if self.budget.0 == 0 {
            return Err(Error::Parse("budget must be positive".into()));
        }
        if self.chi.n() != n {
            return Err(Error::DimensionMismatch(format!("χ is defined for {} vertices", self.chi.n())));
        }
        if !self.chi.check_condition(1) {
            return Err(Error::Parse(format!("χ map {:?} violates the cocycle condition", self.chi.name)));
        }
        self.check_ids()?;
        Ok(())
    }

    /// The requested ids with `all` expanded, in canonical order.
    pub fn check_ids(&self) -> Result<Vec<String>> {
        if self.checks.iter().any(|c| c == "all") {
            return Ok(CHECKS.iter().map(|(c, _)| c.to_string()).collect());
        }
        for c in &self.checks {
            if anchor(c).is_none() {
                return Err(Error::Parse(format!("unknown check {c:?}")));
            }
        }
        Ok(self.checks.clone())
    }
}

enum Verdict {
    Pass(Option<String>),
    Fail(Value, Option<String>),
}

fn fail(cex: Value) -> Result<Verdict> {
    Ok(Verdict::Fail(cex, None))
}

fn fits(c: &KClass, bound: &[usize]) -> bool {
    c.0.iter().zip(bound).all(|(&x, &b)| x >= 0 && x as usize <= b)
}

/// A session: the category caches shared by all checks.
pub struct Session {
    cfg: SessionConfig,
    dh: Dh,
}

impl Session {
    pub fn new(cfg: SessionConfig) -> Result<Self> {
        cfg.validate()?;
        let reps = RepCat::new(cfg.quiver.clone(), cfg.q, cfg.budget)?;
        Ok(Self { dh: Dh::new(ComplexCat::new(reps)), cfg })
    }

    pub fn config(&self) -> &SessionConfig {
        &self.cfg
    }

    pub fn dh(&self) -> &Dh {
        &self.dh
    }

    fn cx(&self) -> &ComplexCat {
        self.dh.cx()
    }

    fn reps(&self) -> &RepCat {
        self.dh.reps()
    }

    fn hall(&self) -> HallAlgebra<'_> {
        HallAlgebra::new(self.reps())
    }

    fn bound(&self) -> &[usize] {
        &self.cfg.dim_bound
    }

    fn nv(&self) -> usize {
        self.reps().nv()
    }

    fn t(&self, n: i64) -> Coeff {
        Coeff::t_pow(n, self.cfg.q)
    }

    fn rep_keys(&self) -> Result<Vec<RepKey>> {
        self.reps().enumerate_reps(self.bound())
    }

    fn nonzero_rep_keys(&self) -> Result<Vec<RepKey>> {
        Ok(self.rep_keys()?.into_iter().filter(|k| !k.is_zero()).collect())
    }

    fn complex_keys(&self) -> Result<Vec<ComplexKey>> {
        self.cx().enumerate_keys(self.bound())
    }

    fn graded_sum_fits(&self, keys: &[&ComplexKey]) -> bool {
        let n = self.nv();
        let (mut s1, mut s0) = (KClass::zero(n), KClass::zero(n));
        for k in keys {
            let (m1, m0) = self.cx().graded_classes(k);
            s1 = &s1 + &m1;
            s0 = &s0 + &m0;
        }
        fits(&s1, self.bound()) && fits(&s0, self.bound())
    }

    fn core_dh_keys(&self) -> Result<Vec<DhKey>> {
        let z = KClass::zero(self.nv());
        Ok(self
            .complex_keys()?
            .into_iter()
            .filter(|k| k.p.iter().chain(&k.q).all(|&m| m == 0))
            .map(|k| DhKey { a: k.a, b: k.b, alpha: z.clone(), beta: z.clone() })
            .collect())
    }

    fn dh_as_complex(&self, k: &DhKey) -> ComplexKey {
        ComplexKey { a: k.a.clone(), b: k.b.clone(), ..self.cx().zero_key() }
    }

    fn chis(&self) -> Vec<ChiMap> {
        let quiver = self.reps().quiver();
        let mut out = vec![ChiMap::euler(quiver), ChiMap::chi0(quiver)];
        if !out.contains(&self.cfg.chi) {
            out.push(self.cfg.chi.clone());
        }
        out
    }

    fn chi0(&self) -> ChiMap {
        ChiMap::chi0(self.reps().quiver())
    }

    /// Runs every requested check, concurrently, in canonical order.
    pub fn run_all(&self) -> Result<Vec<CheckReport>> {
        let ids = self.cfg.check_ids()?;
        std::thread::scope(|s| {
            let handles: Vec<_> = ids.iter().map(|id| s.spawn(move || self.run(id))).collect();
            handles.into_iter().map(|h| h.join().expect("check thread panicked")).collect()
        })
    }

    pub fn run(&self, id: &str) -> Result<CheckReport> {
        let anchor = anchor(id).ok_or_else(|| Error::Parse(format!("unknown check {id:?}")))?;
        let start = Instant::now();
        let verdict = match id {
            "assoc-hall" => self.assoc_hall(),
            "assoc-dh" => self.assoc_dh(),
            "coassoc-naive" => self.coassoc_naive(),
            "coassoc-E0" => self.coassoc_e0(),
            "coideal" => self.coideal(),
            "naive-failure" => self.naive_failure(),
            "exact-axioms" => self.exact_axioms(),
            "lemma-ncm" => self.lemma_ncm(),
            "lemma-aa" => self.lemma_aa(),
            "lemma-ggt" => self.lemma_ggt(),
            "lemma-dcca" => self.lemma_dcca(),
            "thm-embedding" => self.thm_embedding(false),
            "thm-embedding2" => self.thm_embedding(true),
            "thm-bialgebra" => self.thm_bialgebra(),
            "green-bialgebra" => self.green_bialgebra(),
            "km-kk-relations" => self.km_kk(),
            "ext-hom-bridge" => self.ext_hom_bridge(),
            "serre-sanity" => self.serre(),
            _ => unreachable!(),
        };
        let ms = if self.cfg.deterministic { 0 } else { start.elapsed().as_millis() as u64 };
        let (status, counterexample, detail) = match verdict {
            Ok(Verdict::Pass(d)) => (Status::Pass, None, d),
            Ok(Verdict::Fail(c, d)) => (Status::Fail, Some(c), d),
            Err(e) if e.is_budget() => (Status::SkippedBudget, None, Some(e.to_string())),
            Err(e) => (Status::Fail, Some(json!({ "error": e.to_string() })), None),
        };
        Ok(CheckReport { check: id.into(), status, anchor: anchor.into(), counterexample, ms, detail })
    }

    // Hall algebra of representations.

    fn assoc_hall(&self) -> Result<Verdict> {
        let hall = self.hall();
        let keys = self.rep_keys()?;
        let b = self.bound();
        let basis = |k: &RepKey| hall.basis(k.clone());
        for x in &keys {
            for y in &keys {
                let xy = &x.class() + &y.class();
                if !fits(&xy, b) {
                    continue;
                }
                let via_ext = hall.mul_basis(x, y)?;
                let via_g = hall.mul_basis_via_g(x, y)?;
                if via_ext != via_g {
                    return fail(json!({ "x": x, "y": y, "ext": json::element(&via_ext), "g": json::element(&via_g) }));
                }
                for z in &keys {
                    if !fits(&(&xy + &z.class()), b) {
                        continue;
                    }
                    for twisted in [false, true] {
                        let m = |u: &LinComb<RepKey>, v: &LinComb<RepKey>| {
                            if twisted {
                                hall.twisted_mul(u, v)
                            } else {
                                hall.mul(u, v)
                            }
                        };
                        let lhs = m(&m(&basis(x), &basis(y))?, &basis(z))?;
                        let rhs = m(&basis(x), &m(&basis(y), &basis(z))?)?;
                        if lhs != rhs {
                            return fail(json!({
                                "triple": [x, y, z], "twisted": twisted,
                                "lhs": json::element(&lhs), "rhs": json::element(&rhs),
                            }));
                        }
                    }
                }
            }
        }
        Ok(Verdict::Pass(None))
    }

    fn green_bialgebra(&self) -> Result<Verdict> {
        let hall = self.hall();
        let keys = self.rep_keys()?;
        let mul = |a: &RepKey, b: &RepKey| hall.twisted_mul_basis(a, b);
        let (mut plain_ok, mut twisted_ok) = (true, true);
        let mut first = None;
        for a in &keys {
            for b in &keys {
                if !fits(&(&a.class() + &b.class()), self.bound()) {
                    continue;
                }
                let lhs = hall.green_coproduct(&hall.twisted_mul_basis(a, b)?)?;
                let da = hall.green_coproduct_basis(a)?;
                let db = hall.green_coproduct_basis(b)?;
                let plain = hall.tensor_mul_plain(&da, &db, mul)?;
                let twisted = hall.tensor_mul_green_twisted(&da, &db, mul)?;
                if plain != lhs || twisted != lhs {
                    first.get_or_insert_with(|| {
                        json!({
                            "a": a, "b": b, "lhs": json::tensor(&lhs),
                            "plain": json::tensor(&plain), "twisted": json::tensor(&twisted),
                        })
                    });
                }
                plain_ok &= plain == lhs;
                twisted_ok &= twisted == lhs;
            }
        }
        match (plain_ok, twisted_ok) {
            (false, true) => {
                Ok(Verdict::Pass(Some("the t^{(b,c)}-twisted tensor product is the compatible one".into())))
            }
            (true, false) => Ok(Verdict::Pass(Some("the plain tensor product is the compatible one".into()))),
            _ => Ok(Verdict::Fail(
                json!({ "plain": plain_ok, "twisted": twisted_ok, "witness": first }),
                Some(format!("plain holds: {plain_ok}, twisted holds: {twisted_ok}")),
            )),
        }
    }

    fn serre(&self) -> Result<Verdict> {
        let hall = self.hall();
        let r = self.reps();
        let n = self.nv();
        let q = self.cfg.q;
        let s: Vec<LinComb<RepKey>> =
            (0..n).map(|v| r.key(&r.simple(v)).map(|k| hall.basis(k))).collect::<Result<_>>()?;
        let pow = |x: &LinComb<RepKey>, k: usize| -> Result<LinComb<RepKey>> {
            let mut out = hall.unit();
            for _ in 0..k {
                out = hall.twisted_mul(&out, x)?;
            }
            Ok(out)
        };
        // [m]_t = (t^m − t^{−m}) / (t − t^{−1}) = Σ t^{m−1−2i}.
        let qint = |m: usize| (0..m).fold(Coeff::zero(q), |acc, i| acc + Coeff::t_pow(m as i64 - 1 - 2 * i as i64, q));
        let qfact = |m: usize| (1..=m).fold(Coeff::one(q), |acc, i| &acc * &qint(i));
        let mut checked = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let arrows = r.quiver().arrows().iter().filter(|&&(a, b)| (a, b) == (i, j) || (a, b) == (j, i)).count();
                let m = 1 + arrows;
                let mut total = LinComb::zero(q);
                for k in 0..=m {
                    let binom = &qfact(m) * &(&qfact(k) * &qfact(m - k)).inv().expect("nonzero");
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    let term = hall.twisted_mul(&hall.twisted_mul(&pow(&s[i], m - k)?, &s[j])?, &pow(&s[i], k)?)?;
                    total.add_scaled(&term, &binom.scale_int(sign));
                }
                if !total.is_zero() {
                    return fail(json!({ "i": i, "j": j, "value": json::element(&total) }));
                }
                checked.push(format!("({},{})", r.quiver().names()[i], r.quiver().names()[j]));
            }
        }
        Ok(Verdict::Pass(Some(format!("checked vertex pairs {}", checked.join(" ")))))
    }

    // Complexes and the naive coproduct.

    fn coassoc_naive(&self) -> Result<Verdict> {
        let chi = self.cfg.chi.clone();
        let zero = self.cx().zero_key();
        for l in self.complex_keys()? {
            let delta = |k: &ComplexKey| self.dh.complex_coproduct(k, &chi, false);
            let (lhs, rhs) = coassoc_sides(&l, delta)?;
            if lhs != rhs {
                return fail(json!({ "L": l, "chi": chi.name, "lhs": lhs.len(), "rhs": rhs.len() }));
            }
            // Counit on both sides.
            let d = self.dh.complex_coproduct(&l, &chi, false)?;
            let mut left = LinComb::zero(self.cfg.q);
            let mut right = LinComb::zero(self.cfg.q);
            for ((m, n), c) in d.iter() {
                if *m == zero {
                    left.add_term(n.clone(), c.clone());
                }
                if *n == zero {
                    right.add_term(m.clone(), c.clone());
                }
            }
            let id = LinComb::basis(l.clone(), self.cfg.q);
            if left != id || right != id {
                return fail(json!({ "L": l, "counit": [json::element(&left), json::element(&right)] }));
            }
        }
        Ok(Verdict::Pass(None))
    }

    fn coassoc_e0(&self) -> Result<Verdict> {
        let mut keys = self.core_dh_keys()?;
        let shifted: Vec<DhKey> = keys
            .iter()
            .map(|k| DhKey {
                alpha: KClass::unit(self.nv(), 0),
                beta: KClass::unit(self.nv(), self.nv() - 1),
                ..k.clone()
            })
            .collect();
        keys.extend(shifted);
        for chi in self.chis() {
            for k in &keys {
                let (lhs, rhs) = coassoc_sides(k, |x| self.dh.delta_prime_basis(x, &chi))?;
                if lhs != rhs {
                    return fail(json!({ "key": k, "chi": chi.name, "lhs_terms": lhs.len(), "rhs_terms": rhs.len() }));
                }
                let d = self.dh.delta_prime_basis(k, &chi)?;
                let x = self.dh.basis(k.clone());
                let (l, r) = self.counit_sides(&d);
                if l != x || r != x {
                    return fail(
                        json!({ "key": k, "chi": chi.name, "counit": [json::dh_element(&l), json::dh_element(&r)] }),
                    );
                }
            }
        }
        Ok(Verdict::Pass(None))
    }

    /// `(ε ⊗ 1)t` and `(1 ⊗ ε)t`.
    fn counit_sides(&self, t: &Tensor<DhKey>) -> (DhElem, DhElem) {
        let mut left = LinComb::zero(self.cfg.q);
        let mut right = LinComb::zero(self.cfg.q);
        for ((a, b), c) in t.iter() {
            if a.has_trivial_core() {
                left.add_term(b.clone(), c.clone());
            }
            if b.has_trivial_core() {
                right.add_term(a.clone(), c.clone());
            }
        }
        (left, right)
    }

    fn acyclic_keys(&self) -> Result<Vec<ComplexKey>> {
        Ok(self.complex_keys()?.into_iter().filter(|k| k.is_acyclic() && !k.is_zero()).collect())
    }

    fn coideal(&self) -> Result<Verdict> {
        let mut acyclic_ends = 0u64;
        for chi in self.chis() {
            for l in self.acyclic_keys()? {
                let d = self.dh.complex_coproduct(&l, &chi, true)?;
                for ((m, n), c) in d.iter() {
                    if !m.is_acyclic() || !n.is_acyclic() {
                        return fail(json!({ "L": l, "M": m, "N": n, "chi": chi.name, "coeff": json::coeff(c) }));
                    }
                    if !m.is_zero() && !n.is_zero() {
                        acyclic_ends += 1;
                    }
                }
            }
        }
        Ok(Verdict::Pass(Some(format!(
            "{acyclic_ends} E_0-conflations with nonzero acyclic ends occur (allowed: they keep the span of acyclic classes a coideal)"
        ))))
    }

    fn naive_failure(&self) -> Result<Verdict> {
        for l in self.acyclic_keys()? {
            for ((m, n), &(all, _)) in self.cx().subobjects(&l)?.by_pair.iter() {
                if all > 0 && (!m.is_acyclic() || !n.is_acyclic()) {
                    if ComplexCat::is_e0(m, n) {
                        return fail(json!({ "L": l, "M": m, "N": n, "reason": "non-acyclic end inside E_0" }));
                    }
                    let (h0, h1) = (&m.a, &m.b);
                    return Ok(Verdict::Pass(Some(format!(
                        "N = {n} → L = {l} → M = {m} with g = {all}; H_0(M) = {h0}, H_1(M) = {h1}; not in E_0"
                    ))));
                }
            }
        }
        fail(json!({ "reason": "every conflation of an acyclic complex has acyclic ends" }))
    }

    fn exact_axioms(&self) -> Result<Verdict> {
        let cx = self.cx();
        let shape = cx.shape();
        let keys = self.complex_keys()?;
        let mut failures: BTreeMap<&str, (u64, Value)> = BTreeMap::new();
        let mut record = |axiom: &'static str, w: Value| {
            failures.entry(axiom).or_insert((0, w)).0 += 1;
        };
        // Ex0: identities are conflations 0 → X → X and X → X → 0.
        let zero = cx.zero_key();
        for x in &keys {
            if !ComplexCat::is_e0(x, &zero) || !ComplexCat::is_e0(&zero, x) {
                record("Ex0", json!({ "X": x }));
            }
        }
        for lk in &keys {
            let l = cx.complex_of(lk)?;
            let mut subs: Vec<(Vec<Subspace>, ComplexKey, ComplexKey)> = Vec::new();
            for s in cx.enumerate_subcomplexes(&l)? {
                let quot = cx.quotient(&l, &s);
                if cx.in_cp(&quot) {
                    let m = cx.decompose(&quot)?;
                    let n = cx.decompose(&cx.subcomplex(&l, &s))?;
                    subs.push((s, m, n));
                }
            }
            // Ex1 and Ex1^op on chains U ⊆ V ⊆ L.
            for (u, lu, uk) in &subs {
                for (v, lv, vk) in &subs {
                    if u == v || !u.iter().zip(v).all(|(a, b)| a.is_subspace_of(b)) {
                        continue;
                    }
                    let vrep = cx.subcomplex(&l, v);
                    let u_in_v: Vec<Subspace> = u
                        .iter()
                        .zip(v)
                        .map(|(a, b)| {
                            let coords: Vec<Vec<u8>> = a.basis().iter().map(|x| b.coords(x)).collect();
                            Subspace::span(b.q(), b.dim(), &coords)
                        })
                        .collect();
                    let vu = cx.decompose(&cx.quotient(&vrep, &u_in_v))?;
                    let w = || json!({ "L": lk, "U": uk, "V": vk, "L/U": lu, "L/V": lv, "V/U": vu });
                    // Deflations L → L/U → L/V; kernel of the composite is V.
                    if ComplexCat::is_e0(lu, uk) && ComplexCat::is_e0(lv, &vu) && !ComplexCat::is_e0(lv, vk) {
                        record("Ex1", w());
                    }
                    // Inflations U → V → L; the composite has cokernel L/U.
                    if ComplexCat::is_e0(&vu, uk) && ComplexCat::is_e0(lv, vk) && !ComplexCat::is_e0(lu, uk) {
                        record("Ex1^op", w());
                    }
                }
            }
            // Ex2 (pullbacks) and Ex2^op (pushouts) along 0 and the Hom basis.
            for (s, mk, nk) in &subs {
                if !ComplexCat::is_e0(mk, nk) {
                    continue;
                }
                let m = cx.quotient(&l, s);
                let u = cx.subcomplex(&l, s);
                let proj = projection(s);
                let incl = diagram::inclusion(s);
                for xk in &keys {
                    let x = cx.complex_of(xk)?;
                    let mut maps = vec![zero_morphism(x.rep(), m.rep())];
                    maps.extend(diagram::hom_basis(shape, x.rep(), m.rep()));
                    for f in &maps {
                        let g: Morphism = proj.iter().zip(f).map(|(p, fv)| hcat(p, &fv.neg())).collect();
                        let sum = l.rep().direct_sum(x.rep());
                        let pb = cx.from_rep(diagram::sub_rep(shape, &sum, &diagram::kernel(&g)))?;
                        let pbk = cx.decompose(&pb)?;
                        if !ComplexCat::is_e0(xk, nk) {
                            record(
                                "Ex2",
                                json!({ "L": lk, "M": mk, "N": nk, "X": xk, "pullback": pbk, "map_is_zero": f.iter().all(|a| a.is_zero()) }),
                            );
                        }
                    }
                    let mut maps = vec![zero_morphism(u.rep(), x.rep())];
                    maps.extend(diagram::hom_basis(shape, u.rep(), x.rep()));
                    for f in &maps {
                        let g: Morphism = incl.iter().zip(f).map(|(i, fv)| vcat(i, &fv.neg())).collect();
                        let sum = l.rep().direct_sum(x.rep());
                        let po = cx.from_rep(diagram::quotient_rep(shape, &sum, &diagram::image(&g)))?;
                        let pok = cx.decompose(&po)?;
                        if !ComplexCat::is_e0(mk, xk) {
                            record(
                                "Ex2^op",
                                json!({ "L": lk, "M": mk, "N": nk, "Y": xk, "pushout": pok, "map_is_zero": f.iter().all(|a| a.is_zero()) }),
                            );
                        }
                    }
                }
            }
        }
        if failures.is_empty() {
            return Ok(Verdict::Pass(None));
        }
        let summary: Vec<String> = failures.iter().map(|(a, (c, _))| format!("{a}: {c} violations")).collect();
        let cex: serde_json::Map<String, Value> =
            failures.into_iter().map(|(a, (c, w))| (a.to_string(), json!({ "violations": c, "first": w }))).collect();
        Ok(Verdict::Fail(Value::Object(cex), Some(summary.join(", "))))
    }

    fn ext_hom_bridge(&self) -> Result<Verdict> {
        let cx = self.cx();
        let shape = cx.shape();
        let rshape = self.reps().shape();
        let q = self.cfg.q as u128;
        let budget = self.cfg.budget;
        let keys = self.complex_keys()?;
        let mut pairs = 0;
        for mk in &keys {
            for nk in &keys {
                if !self.graded_sum_fits(&[mk, nk]) {
                    continue;
                }
                pairs += 1;
                let m = cx.complex_of(mk)?;
                let n = cx.complex_of(nk)?;
                // Left side: Σ_L |Ext¹(M,N)_L| from Hall numbers, against q^{dim Ext¹}.
                let ext = diagram::extensions(shape, m.rep(), n.rep(), budget)?;
                let mut middles = BTreeSet::new();
                for l in ext.middles {
                    middles.insert(cx.decompose(&cx.from_rep(l)?)?);
                }
                let hom_mn = q.pow(ext.hom_dim as u32);
                let (am, an) = (cx.aut_count(mk)? as u128, cx.aut_count(nk)? as u128);
                let mut lhs = 0u128;
                for lk in &middles {
                    let num = cx.hall_number(lk, mk, nk)? as u128 * hom_mn * am * an;
                    let al = cx.aut_count(lk)? as u128;
                    if !num.is_multiple_of(al) {
                        return fail(json!({ "M": mk, "N": nk, "L": lk, "reason": "non-integral extension count" }));
                    }
                    lhs += num / al;
                }
                if lhs != q.pow(ext.ext_dim as u32) {
                    return fail(
                        json!({ "M": mk, "N": nk, "sum_over_L": lhs.to_string(), "q^ext": q.pow(ext.ext_dim as u32).to_string() }),
                    );
                }
                // Right side: chain maps M → N^* modulo null-homotopic ones.
                let s = cx.star(&n);
                let hom = cx.hom_dim(&m, &s);
                let (m1, m0, s1, s0) = (cx.piece(&m, 1), cx.piece(&m, 0), cx.piece(&s, 1), cx.piece(&s, 0));
                let (dm1, dm0, ds1, ds0) =
                    (cx.differential(&m, 1), cx.differential(&m, 0), cx.differential(&s, 1), cx.differential(&s, 0));
                let mut images: Vec<Vec<u8>> = Vec::new();
                for h1 in diagram::hom_basis(rshape, &m1, &s0) {
                    let f1 = diagram::compose(&ds0, &h1);
                    let f0 = diagram::compose(&h1, &dm0);
                    images.push(chain_vector(&f0, &f1));
                }
                for h0 in diagram::hom_basis(rshape, &m0, &s1) {
                    let f1 = diagram::compose(&h0, &dm1);
                    let f0 = diagram::compose(&ds1, &h0);
                    images.push(chain_vector(&f0, &f1));
                }
                let q8 = self.cfg.q as u8;
                budget.check("homotopies", q.pow(images.len() as u32))?;
                let mut null = HashSet::new();
                let mut coeffs = vec![0u8; images.len()];
                loop {
                    let len = images.first().map_or(0, |v| v.len());
                    let mut v = vec![0u8; len];
                    for (c, img) in coeffs.iter().zip(&images) {
                        if *c != 0 {
                            for (a, b) in v.iter_mut().zip(img) {
                                *a = ((*a as u16 + *c as u16 * *b as u16) % q8 as u16) as u8;
                            }
                        }
                    }
                    null.insert(v);
                    // Next coefficient vector in base q.
                    let mut i = 0;
                    while i < coeffs.len() {
                        coeffs[i] += 1;
                        if coeffs[i] < q8 {
                            break;
                        }
                        coeffs[i] = 0;
                        i += 1;
                    }
                    if i == coeffs.len() {
                        break;
                    }
                }
                let rhs_num = q.pow(hom as u32);
                let null_count = null.len() as u128;
                if !rhs_num.is_multiple_of(null_count) || rhs_num / null_count != lhs {
                    return fail(json!({
                        "M": mk, "N": nk, "ext": lhs.to_string(),
                        "hom_chain_maps": rhs_num.to_string(), "null_homotopic": null_count.to_string(),
                    }));
                }
            }
        }
        Ok(Verdict::Pass(Some(format!("{pairs} pairs of complexes"))))
    }

    // Lemmas on C_A.

    fn lemma_ncm(&self) -> Result<Verdict> {
        for a in self.nonzero_rep_keys()? {
            let ca = self.cx().ca_key(&a);
            for ((m, n), &(all, e0)) in self.cx().subobjects(&ca)?.by_pair.iter() {
                if e0 == 0 {
                    continue;
                }
                let is_c = |k: &ComplexKey| k.b.is_zero() && k.p.iter().chain(&k.q).all(|&x| x == 0);
                if !is_c(m) || !is_c(n) || e0 != all {
                    return fail(json!({ "A": a, "M": m, "N": n, "w": e0, "g": all }));
                }
            }
        }
        Ok(Verdict::Pass(None))
    }

    fn lemma_aa(&self) -> Result<Verdict> {
        let r = self.reps();
        let q = self.cfg.q as u128;
        let keys = self.rep_keys()?;
        for a in &keys {
            let ra = r.minimal_resolution(a)?;
            let lhs = self.cx().aut_count(&self.cx().ca_key(a))? as u128;
            let rhs = r.aut_count(a)? as u128 * q.pow(r.hom_dim(&ra.q, &ra.p) as u32);
            if lhs != rhs {
                return fail(json!({ "A": a, "a_CA": lhs.to_string(), "a_A|Hom(Q_A,P_A)|": rhs.to_string() }));
            }
            let ca = self.cx().complex_of(&self.cx().ca_key(a))?;
            for b in &keys {
                let rb = r.minimal_resolution(b)?;
                let cb = self.cx().complex_of(&self.cx().ca_key(b))?;
                let lhs = self.cx().hom_dim(&ca, &cb);
                let rhs = r.hom_dim(&ra.q, &rb.p) + r.hom_dim(&r.rep(a), &r.rep(b));
                if lhs != rhs {
                    return fail(
                        json!({ "A": a, "B": b, "dim Hom(C_A,C_B)": lhs, "dim Hom(Q_A,P_B) + dim Hom(A,B)": rhs }),
                    );
                }
            }
        }
        Ok(Verdict::Pass(None))
    }

    fn p_and_q(&self, a: &RepKey) -> Result<(KClass, KClass)> {
        let res = self.reps().minimal_resolution(a)?;
        Ok((KClass::from_dims(res.p.dims()), KClass::from_dims(res.q.dims())))
    }

    /// Whether `cl P_A = cl P_B + cl P_D`, i.e. the minimal resolutions of
    /// `D → A → B` assemble into the minimal resolution of `A`.
    fn additive(&self, a: &RepKey, b: &RepKey, d: &RepKey) -> Result<bool> {
        let (pa, _) = self.p_and_q(a)?;
        let (pb, _) = self.p_and_q(b)?;
        let (pd, _) = self.p_and_q(d)?;
        Ok(pa == &pb + &pd)
    }

    fn all_additive(&self, a: &RepKey) -> Result<bool> {
        for (b, d) in self.reps().subobject_table(a)?.keys() {
            if !self.additive(a, b, d)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn lemma_ggt(&self) -> Result<Verdict> {
        let r = self.reps();
        let mut triples = 0;
        let mut failing = Vec::new();
        let mut first = None;
        let mut all_non_additive = true;
        for a in self.nonzero_rep_keys()? {
            for ((b, d), &g) in r.subobject_table(&a)?.iter() {
                let (pb, _) = self.p_and_q(b)?;
                let (_, qd) = self.p_and_q(d)?;
                let e = r.euler(&qd, &pb);
                let gc = self.cx().hall_number(&self.cx().ca_key(&a), &self.cx().ca_key(b), &self.cx().ca_key(d))?;
                let lhs = Coeff::from_int(gc as i64, self.cfg.q);
                let rhs = self.t(2 * e).scale_int(g as i64);
                triples += 1;
                if lhs != rhs {
                    all_non_additive &= !self.additive(&a, b, d)?;
                    failing.push(format!("({a}; {b}, {d})"));
                    first.get_or_insert_with(
                        || json!({ "A": a, "B": b, "D": d, "g_complex": gc, "g": g, "<Q_D,P_B>": e }),
                    );
                }
            }
        }
        match first {
            None => Ok(Verdict::Pass(Some(format!("{triples} triples (A, B, D)")))),
            Some(w) => Ok(Verdict::Fail(
                json!({ "failing": failing, "first": w, "all_failures_have_nonadditive_resolutions": all_non_additive }),
                Some(format!(
                    "{} of {triples} triples fail; cl P_A ≠ cl P_B + cl P_D for every failure: {all_non_additive}",
                    failing.len()
                )),
            )),
        }
    }

    fn lemma_dcca(&self) -> Result<Verdict> {
        let r = self.reps();
        let chi0 = self.chi0();
        let z = KClass::zero(self.nv());
        let mut collect = Failures::default();
        for a in self.rep_keys()? {
            let key = DhKey { a: a.clone(), b: r.zero_key(), alpha: z.clone(), beta: z.clone() };
            let lhs = self.dh.delta_basis(&key, &chi0)?;
            let mut rhs = LinComb::zero(self.cfg.q);
            for ((b, d), &g) in r.subobject_table(&a)?.iter() {
                let (pb, _) = self.p_and_q(b)?;
                let (_, qd) = self.p_and_q(d)?;
                let e = r.euler(&d.class(), &pb) - r.euler(&qd, &b.class());
                let left = self.dh.left_k(&qd, &self.dh.core_element(b.clone(), r.zero_key()));
                let right = self.dh.right_k(&self.dh.core_element(d.clone(), r.zero_key()), &pb, &z);
                rhs.add_scaled(&LinComb::tensor(&left, &right), &self.t(e).scale_int(g as i64));
            }
            if lhs != rhs {
                let additive = self.all_additive(&a)?;
                collect.add(&a, additive, || json!({ "A": a, "lhs": json::tensor(&lhs), "rhs": json::tensor(&rhs) }));
            }
        }
        Ok(collect.verdict())
    }

    // Identities on DH(A).

    fn thm_embedding(&self, minus: bool) -> Result<Verdict> {
        let hall = self.hall();
        let chi0 = self.chi0();
        let z = KClass::zero(self.nv());
        let mut collect = Failures::default();
        for a in self.rep_keys()? {
            let x = hall.ext_basis(a.clone(), z.clone());
            let dx = hall.extended_coproduct(&x)?;
            let (lhs, rhs) = if minus {
                let e = |k: &ExtKey| self.dh.embed_minus_basis(k);
                (dx.map_each(e, e)?, self.dh.delta(&self.dh.f_element(&a)?, &chi0)?)
            } else {
                let e = |k: &ExtKey| self.dh.embed_plus_basis(k);
                (dx.map_each(e, e)?, self.dh.delta(&self.dh.e_element(&a)?, &chi0)?)
            };
            if lhs != rhs {
                let additive = self.all_additive(&a)?;
                collect.add(
                    &a,
                    additive,
                    || json!({ "A": a, "embedded_coproduct": json::tensor(&lhs), "delta_chi0": json::tensor(&rhs) }),
                );
            }
        }
        Ok(collect.verdict())
    }

    fn generators(&self) -> Result<Vec<(String, DhElem)>> {
        let mut out = Vec::new();
        for a in self.nonzero_rep_keys()? {
            out.push((format!("E[{a}]"), self.dh.e_element(&a)?));
            out.push((format!("F[{a}]"), self.dh.f_element(&a)?));
        }
        for v in 0..self.nv() {
            let u = KClass::unit(self.nv(), v);
            out.push((format!("K{u}"), self.dh.k_element(u.clone())));
            out.push((format!("K*{u}"), self.dh.k_star_element(u)));
        }
        Ok(out)
    }

    fn thm_bialgebra(&self) -> Result<Verdict> {
        let chi0 = self.chi0();
        let gens = self.generators()?;
        let mut failing = Vec::new();
        let mut first = None;
        let mut total = 0;
        for (nx, x) in &gens {
            for (ny, y) in &gens {
                total += 1;
                let lhs = self.dh.delta(&self.dh.mul(x, y)?, &chi0)?;
                let rhs = self.dh.tensor_mul(&self.dh.delta(x, &chi0)?, &self.dh.delta(y, &chi0)?)?;
                if lhs != rhs {
                    failing.push(format!("({nx}, {ny})"));
                    first.get_or_insert_with(|| {
                        json!({ "x": nx, "y": ny, "delta(xy)": json::tensor(&lhs), "delta(x)delta(y)": json::tensor(&rhs) })
                    });
                }
            }
        }
        match first {
            None => Ok(Verdict::Pass(Some(format!("{total} generator pairs")))),
            Some(w) => Ok(Verdict::Fail(
                json!({ "failing_pairs": failing, "first": w }),
                Some(format!("{} of {total} pairs fail: {}", failing.len(), failing.join(" "))),
            )),
        }
    }

    fn assoc_dh(&self) -> Result<Verdict> {
        let nv = self.nv();
        let mut basis: Vec<(DhKey, ComplexKey)> = self
            .core_dh_keys()?
            .into_iter()
            .map(|k| {
                let c = self.dh_as_complex(&k);
                (k, c)
            })
            .collect();
        let zero = self.cx().zero_key();
        for v in 0..nv {
            let u = KClass::unit(nv, v);
            let base = self.dh.unit_key();
            basis.push((DhKey { alpha: u.clone(), ..base.clone() }, zero.clone()));
            basis.push((DhKey { alpha: -&u, ..base.clone() }, zero.clone()));
            basis.push((DhKey { beta: u, ..base }, zero.clone()));
        }
        let mut triples = 0;
        for (x, cxk) in &basis {
            for (y, cyk) in &basis {
                if !self.graded_sum_fits(&[cxk, cyk]) {
                    continue;
                }
                let xy = self.dh.mul_basis(x, y)?;
                for (z, czk) in &basis {
                    if !self.graded_sum_fits(&[cxk, cyk, czk]) {
                        continue;
                    }
                    triples += 1;
                    let lhs = self.dh.mul(&xy, &self.dh.basis(z.clone()))?;
                    let rhs = self.dh.mul(&self.dh.basis(x.clone()), &self.dh.mul_basis(y, z)?)?;
                    if lhs != rhs {
                        return fail(
                            json!({ "triple": [x, y, z], "lhs": json::dh_element(&lhs), "rhs": json::dh_element(&rhs) }),
                        );
                    }
                }
            }
        }
        Ok(Verdict::Pass(Some(format!("{triples} triples"))))
    }

    fn km_kk(&self) -> Result<Verdict> {
        let cx = self.cx();
        let r = self.reps();
        let nv = self.nv();
        let keys = self.complex_keys()?;
        let cores: Vec<&ComplexKey> = keys.iter().filter(|k| k.p.iter().chain(&k.q).all(|&m| m == 0)).collect();
        let acyclic: Vec<&ComplexKey> = keys.iter().filter(|k| k.is_acyclic() && !k.is_zero()).collect();
        let mut note = None;
        // Localization relations inside H(C(P)), from complex products alone.
        for kp in &acyclic {
            let star = kp.p.iter().all(|&m| m == 0);
            let single =
                |k: &ComplexKey| k.p.iter().filter(|&&m| m != 0).count() + k.q.iter().filter(|&&m| m != 0).count();
            if single(kp) != 1 {
                continue;
            }
            let pcl = r.quiver().projective_class(if star { &kp.q } else { &kp.p });
            for m in &cores {
                if !self.graded_sum_fits(&[kp, m]) {
                    continue;
                }
                let mhat = m.class();
                let sum = ComplexKey { p: kp.p.clone(), q: kp.q.clone(), ..(*m).clone() };
                let left = cx.twisted_mul_basis(kp, m)?;
                let right = cx.twisted_mul_basis(m, kp)?;
                let (el, er) = if star {
                    (-r.euler(&pcl, &mhat), r.euler(&mhat, &pcl))
                } else {
                    (r.euler(&pcl, &mhat), -r.euler(&mhat, &pcl))
                };
                let want_l = LinComb::term(sum.clone(), self.t(el));
                let want_r = LinComb::term(sum.clone(), self.t(er));
                if left != want_l || right != want_r {
                    return fail(json!({
                        "K": kp, "M": m, "K*M": json::element(&left), "M*K": json::element(&right),
                        "expected_exponents": [el, er],
                    }));
                }
                // Hence K ∗ [M] = t^{±(α,M̂)} [M] ∗ K with α = cl P.
                let sym = r.sym_euler(&pcl, &mhat);
                if el - er != if star { -sym } else { sym } {
                    return fail(json!({ "K": kp, "M": m, "exponent": el - er, "(α,M̂)": sym }));
                }
                if !star
                    && note.is_none()
                    && m.b.is_zero()
                    && m.a.dims() == r.simple(0).dims()
                    && pcl == KClass::from_dims(r.projective(0).dims())
                {
                    note = Some(format!("α = cl P_1 = {pcl}, M = C[{}]: (α,M̂) = {sym}", m.a));
                }
            }
        }
        // The same relations in DH(A), with K_α taken from the image of [K_P].
        let dh = &self.dh;
        for kp in &acyclic {
            let kelem = dh.from_complexes(&LinComb::basis((*kp).clone(), self.cfg.q));
            for m in &cores {
                let mel = dh.core_element(m.a.clone(), m.b.clone());
                let mhat = m.class();
                let (alpha, beta) = (r.quiver().projective_class(&kp.p), r.quiver().projective_class(&kp.q));
                let e = r.sym_euler(&alpha, &mhat) - r.sym_euler(&beta, &mhat);
                let lhs = dh.mul(&kelem, &mel)?;
                let rhs = dh.mul(&mel, &kelem)?.scale(&self.t(e));
                if lhs != rhs {
                    return fail(
                        json!({ "K": kp, "M": m, "KM": json::dh_element(&lhs), "t^e MK": json::dh_element(&rhs) }),
                    );
                }
            }
        }
        // K_α K_β = K_{α+β}, starred likewise, [K_α, K_β^*] = 0, K_α K_{−α} = 1.
        let units: Vec<KClass> = (0..nv).flat_map(|v| [KClass::unit(nv, v), -&KClass::unit(nv, v)]).collect();
        for a in &units {
            for b in &units {
                let (ka, kb) = (dh.k_element(a.clone()), dh.k_element(b.clone()));
                let (sa, sb) = (dh.k_star_element(a.clone()), dh.k_star_element(b.clone()));
                let ok = dh.mul(&ka, &kb)? == dh.k_element(a + b)
                    && dh.mul(&sa, &sb)? == dh.k_star_element(a + b)
                    && dh.mul(&ka, &sb)? == dh.mul(&sb, &ka)?;
                if !ok {
                    return fail(json!({ "alpha": a, "beta": b }));
                }
            }
        }
        // Products of acyclic complexes land on K-elements.
        for x in &acyclic {
            for y in &acyclic {
                if !self.graded_sum_fits(&[x, y]) {
                    continue;
                }
                let prod = dh.from_complexes(&cx.twisted_mul_basis(x, y)?);
                let q = r.quiver();
                let want = dh.mul(
                    &dh.k_element(&q.projective_class(&x.p) + &q.projective_class(&y.p)),
                    &dh.k_star_element(&q.projective_class(&x.q) + &q.projective_class(&y.q)),
                )?;
                if prod != want {
                    return fail(
                        json!({ "X": x, "Y": y, "product": json::dh_element(&prod), "expected": json::dh_element(&want) }),
                    );
                }
            }
        }
        // H_tw(C(P)) → DH(A) is multiplicative on all pairs within the bound.
        for x in &keys {
            for y in &keys {
                if !self.graded_sum_fits(&[x, y]) {
                    continue;
                }
                let lhs = dh.from_complexes(&cx.twisted_mul_basis(x, y)?);
                let rhs = dh.mul(
                    &dh.from_complexes(&LinComb::basis(x.clone(), self.cfg.q)),
                    &dh.from_complexes(&LinComb::basis(y.clone(), self.cfg.q)),
                )?;
                if lhs != rhs {
                    return fail(
                        json!({ "X": x, "Y": y, "in_complexes": json::dh_element(&lhs), "in_dh": json::dh_element(&rhs) }),
                    );
                }
            }
        }
        Ok(Verdict::Pass(note))
    }
}

/// Failing representations of a per-`A` identity, with whether each one
/// admits a short exact sequence whose minimal resolutions do not add up.
#[derive(Default)]
struct Failures {
    failing: Vec<String>,
    first: Option<Value>,
    all_non_additive: bool,
    count: usize,
}

impl Failures {
    fn add(&mut self, a: &RepKey, additive: bool, witness: impl FnOnce() -> Value) {
        if self.count == 0 {
            self.all_non_additive = true;
        }
        self.count += 1;
        self.all_non_additive &= !additive;
        self.failing.push(a.to_string());
        self.first.get_or_insert_with(witness);
    }

    fn verdict(self) -> Verdict {
        match self.first {
            None => Verdict::Pass(None),
            Some(w) => Verdict::Fail(
                json!({
                    "failing": self.failing, "first": w,
                    "all_failures_have_nonadditive_resolutions": self.all_non_additive,
                }),
                Some(format!(
                    "fails for A in {{{}}}; each has a sequence D → A → B with cl P_A ≠ cl P_B + cl P_D: {}",
                    self.failing.join(", "),
                    self.all_non_additive
                )),
            ),
        }
    }
}

/// Runs one check in a fresh session.
pub fn run_check(id: &str, cfg: &SessionConfig) -> Result<CheckReport> {
    Session::new(cfg.clone())?.run(id)
}

/// The projection `L → L/U` in the canonical coset bases.
fn projection(sub: &[Subspace]) -> Morphism {
    sub.iter()
        .map(|s| {
            let free = diagram::coset_coords(s);
            let n = s.ambient_dim();
            let cols: Vec<Vec<u8>> = (0..n)
                .map(|j| {
                    let mut e = vec![0u8; n];
                    e[j] = 1;
                    let r = s.reduce(&e);
                    free.iter().map(|&i| r[i]).collect()
                })
                .collect();
            FqMatrix::from_columns(s.q(), free.len(), &cols)
        })
        .collect()
}

fn zero_morphism(x: &diagram::Rep, y: &diagram::Rep) -> Morphism {
    x.dims().iter().zip(y.dims()).map(|(&c, &r)| FqMatrix::zeros(x.q(), r, c)).collect()
}

/// `[a | b]`.
fn hcat(a: &FqMatrix, b: &FqMatrix) -> FqMatrix {
    let mut m = FqMatrix::zeros(a.q(), a.rows(), a.cols() + b.cols());
    m.paste(0, 0, a);
    m.paste(0, a.cols(), b);
    m
}

/// `[a; b]`.
fn vcat(a: &FqMatrix, b: &FqMatrix) -> FqMatrix {
    let mut m = FqMatrix::zeros(a.q(), a.rows() + b.rows(), a.cols());
    m.paste(0, 0, a);
    m.paste(a.rows(), 0, b);
    m
}

/// Flattened chain map with components `f_0` then `f_1`.
fn chain_vector(f0: &Morphism, f1: &Morphism) -> Vec<u8> {
    let mut v = diagram::flatten_morphism(f0);
    v.extend(diagram::flatten_morphism(f1));
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_ids_expand() {
        let cfg = SessionConfig::default();
        assert_eq!(cfg.check_ids().unwrap().len(), CHECKS.len());
        let bad = SessionConfig { checks: vec!["nope".into()], ..SessionConfig::default() };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn report_schema() {
        let cfg = SessionConfig {
            q: 2,
            dim_bound: vec![1],
            deterministic: true,
            ..SessionConfig::new(Quiver::a_n(1), 2, vec![1])
        };
        let rep = run_check("lemma-aa", &cfg).unwrap();
        let v = serde_json::to_value(&rep).unwrap();
        assert_eq!(v["status"], "pass");
        assert_eq!(v["ms"], 0);
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["anchor", "check", "counterexample", "ms", "status"]);
    }
}
