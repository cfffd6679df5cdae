//! The category of representations of a quiver over `F_q`: canonical
//! iso-class keys, counting (Hom, Aut, Hall numbers, extensions),
//! projectives and minimal projective resolutions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use parking_lot::RwLock;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagram::{self, Morphism, Rep};
use crate::error::{Budget, Error, Result};
use crate::field::check_prime;
use crate::matrix::{FqMatrix, Subspace};
use crate::quiver::{KClass, Quiver, Shape};

/// Canonical iso-class key of a quiver representation: the dimension vector
/// and the lexicographically least arrow data over the `∏ GL(d_v)` orbit.
///
/// Text form: dimensions joined by `,`, then one `:`-separated block of
/// row-major digits per arrow, e.g. `1,1:1` for `P_1` on `1 → 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RepKey {
    dims: Vec<usize>,
    mats: Vec<Vec<u8>>,
}

impl RepKey {
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn class(&self) -> KClass {
        KClass::from_dims(&self.dims)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn zero(nv: usize, arrows: usize) -> Self {
        RepKey { dims: vec![0; nv], mats: vec![Vec::new(); arrows] }
    }
}

impl fmt::Display for RepKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", dims.join(","))?;
        for m in &self.mats {
            write!(f, ":")?;
            for d in m {
                write!(f, "{d}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for RepKey {
    type Err = Error;

    /// Parses the raw text form; the result still has to be validated and
    /// canonicalized against a category with [`RepCat::parse_key`].
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.trim().split(':');
        let head = parts.next().unwrap_or("");
        let dims = if head.is_empty() {
            Vec::new()
        } else {
            head.split(',')
                .map(|d| d.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad dimension in {s:?}"))))
                .collect::<Result<Vec<_>>>()?
        };
        let mats = parts
            .map(|p| {
                p.chars()
                    .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| Error::Parse(format!("bad digit in {s:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RepKey { dims, mats })
    }
}

impl Serialize for RepKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RepKey {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `0 → P → Q → A → 0` with `P, Q` projective.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub p: Rep,
    pub q: Rep,
    /// The inclusion `P → Q`.
    pub f: Morphism,
    /// The cover `Q → A`.
    pub cover: Morphism,
    /// Multiplicities of the indecomposable projectives in `P` and `Q`.
    pub p_mult: Vec<usize>,
    pub q_mult: Vec<usize>,
}

type GlList = Arc<Vec<(FqMatrix, FqMatrix)>>;
type Table = Arc<BTreeMap<(RepKey, RepKey), u64>>;

/// A quiver, a prime field and an enumeration budget, with shared caches.
pub struct RepCat {
    quiver: Quiver,
    shape: Shape,
    q: u8,
    budget: Budget,
    gl: RwLock<HashMap<usize, GlList>>,
    keys: RwLock<HashMap<Vec<u8>, RepKey>>,
    auts: RwLock<HashMap<RepKey, u64>>,
    subobjects: RwLock<HashMap<RepKey, Table>>,
    ext_classes: RwLock<HashMap<(RepKey, RepKey), Arc<BTreeMap<RepKey, u64>>>>,
    resolutions: RwLock<HashMap<RepKey, Arc<Resolution>>>,
}

impl fmt::Debug for RepCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RepCat").field("quiver", &self.quiver).field("q", &self.q).finish()
    }
}

impl RepCat {
    pub fn new(quiver: Quiver, q: u32, budget: Budget) -> Result<Self> {
        let q = check_prime(q)?;
        let shape = quiver.shape();
        Ok(Self {
            quiver,
            shape,
            q,
            budget,
            gl: Default::default(),
            keys: Default::default(),
            auts: Default::default(),
            subobjects: Default::default(),
            ext_classes: Default::default(),
            resolutions: Default::default(),
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn nv(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn zero(&self) -> Rep {
        Rep::zero(&self.shape, self.q)
    }

    pub fn zero_key(&self) -> RepKey {
        RepKey::zero(self.nv(), self.quiver.arrows().len())
    }

    pub fn class(&self, x: &Rep) -> KClass {
        KClass::from_dims(x.dims())
    }

    pub fn euler(&self, a: &KClass, b: &KClass) -> i64 {
        self.quiver.euler(a, b)
    }

    pub fn sym_euler(&self, a: &KClass, b: &KClass) -> i64 {
        self.quiver.sym_euler(a, b)
    }

    /// The representation stored in a key.
    pub fn rep(&self, key: &RepKey) -> Rep {
        let mats = self
            .quiver
            .arrows()
            .iter()
            .zip(&key.mats)
            .map(|(&(s, t), m)| FqMatrix::new(self.q, key.dims[t], key.dims[s], m.clone()))
            .collect();
        Rep::from_parts(self.q, key.dims.clone(), mats)
    }

    pub fn simple(&self, v: usize) -> Rep {
        let mut dims = vec![0; self.nv()];
        dims[v] = 1;
        let mats = self.quiver.arrows().iter().map(|&(s, t)| FqMatrix::zeros(self.q, dims[t], dims[s])).collect();
        Rep::from_parts(self.q, dims, mats)
    }

    /// The indecomposable projective `P_v`, with the paths out of `v` as basis.
    pub fn projective(&self, v: usize) -> Rep {
        let n = self.nv();
        let arrows = self.quiver.arrows();
        // paths[w] lists the paths v ⇝ w, each as its sequence of arrows.
        let mut paths: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
        let mut stack = vec![(v, Vec::new())];
        while let Some((w, p)) = stack.pop() {
            for (a, &(s, t)) in arrows.iter().enumerate() {
                if s == w {
                    let mut np = p.clone();
                    np.push(a);
                    stack.push((t, np));
                }
            }
            paths[w].push(p);
        }
        for ps in &mut paths {
            ps.sort();
        }
        let dims: Vec<usize> = paths.iter().map(|p| p.len()).collect();
        let mats = arrows
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| {
                let mut m = FqMatrix::zeros(self.q, dims[t], dims[s]);
                for (j, p) in paths[s].iter().enumerate() {
                    let mut np = p.clone();
                    np.push(a);
                    let i = paths[t].iter().position(|x| *x == np).expect("extended path exists");
                    m.set(i, j, 1);
                }
                m
            })
            .collect();
        Rep::from_parts(self.q, dims, mats)
    }

    pub fn projectives(&self) -> Vec<Rep> {
        (0..self.nv()).map(|v| self.projective(v)).collect()
    }

    /// `⊕_v P_v^{m_v}`, summands ordered by vertex.
    pub fn projective_sum(&self, mult: &[usize]) -> Rep {
        let mut out = self.zero();
        for (v, &m) in mult.iter().enumerate() {
            for _ in 0..m {
                out = out.direct_sum(&self.projective(v));
            }
        }
        out
    }

    /// Parses either a key (`1,1:1`) or a `+`-separated sum of the tokens
    /// `0`, `S<vertex>` and `P<vertex>`, and returns the canonical key.
    pub fn parse_key(&self, text: &str) -> Result<RepKey> {
        let rep = self.parse_rep(text)?;
        self.key(&rep)
    }

    pub fn parse_rep(&self, text: &str) -> Result<Rep> {
        let text = text.trim();
        let symbolic = text.starts_with(['S', 'P']) || text == "0" && self.nv() > 1;
        if !symbolic {
            let mut raw: RepKey = text.parse()?;
            let arrows = self.quiver.arrows();
            if raw.dims.len() != self.nv() {
                return Err(Error::Parse(format!(
                    "key {text:?} has {} dimensions, expected {}",
                    raw.dims.len(),
                    self.nv()
                )));
            }
            if raw.mats.is_empty() && arrows.iter().all(|&(s, t)| raw.dims[s] * raw.dims[t] == 0) {
                raw.mats = vec![Vec::new(); arrows.len()];
            }
            if raw.mats.len() != arrows.len()
                || arrows.iter().zip(&raw.mats).any(|(&(s, t), m)| m.len() != raw.dims[s] * raw.dims[t])
                || raw.mats.iter().flatten().any(|&d| d >= self.q)
            {
                return Err(Error::Parse(format!("key {text:?} does not fit the quiver over F_{}", self.q)));
            }
            return Ok(self.rep(&raw));
        }
        let mut out = self.zero();
        for tok in text.split('+') {
            let tok = tok.trim();
            if tok == "0" {
                continue;
            }
            let (kind, name) = tok.split_at(1);
            let v = self
                .quiver
                .names()
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::Parse(format!("unknown vertex in token {tok:?}")))?;
            let summand = match kind {
                "S" => self.simple(v),
                "P" => self.projective(v),
                _ => return Err(Error::Parse(format!("unknown token {tok:?}"))),
            };
            out = out.direct_sum(&summand);
        }
        Ok(out)
    }

    fn gl(&self, d: usize) -> Result<GlList> {
        if let Some(g) = self.gl.read().get(&d) {
            return Ok(g.clone());
        }
        let q = self.q;
        let total = self.budget.check_pow("general linear group enumeration", q, d * d)?;
        let mut list = Vec::new();
        for code in 0..total {
            let mut c = code;
            let data = (0..d * d)
                .map(|_| {
                    let x = (c % q as u64) as u8;
                    c /= q as u64;
                    x
                })
                .collect();
            let m = FqMatrix::new(q, d, d, data);
            if let Some(inv) = m.inverse() {
                list.push((m, inv));
            }
        }
        let list = Arc::new(list);
        self.gl.write().insert(d, list.clone());
        Ok(list)
    }

    /// Canonical iso-class key (cached).
    pub fn key(&self, x: &Rep) -> Result<RepKey> {
        let enc = x.encode();
        if let Some(k) = self.keys.read().get(&enc) {
            return Ok(k.clone());
        }
        let key = self.canonicalize(x)?;
        self.keys.write().insert(enc, key.clone());
        Ok(key)
    }

    fn canonicalize(&self, x: &Rep) -> Result<RepKey> {
        let arrows = self.quiver.arrows();
        let dims = x.dims();
        let live: Vec<bool> = arrows.iter().map(|&(s, t)| dims[s] > 0 && dims[t] > 0).collect();
        // Only vertices touching a nonempty arrow carry a nontrivial action.
        let active: Vec<usize> =
            (0..self.nv()).filter(|&v| arrows.iter().zip(&live).any(|(&(s, t), &l)| l && (s == v || t == v))).collect();
        let groups = active.iter().map(|&v| self.gl(dims[v])).collect::<Result<Vec<_>>>()?;
        let size: u128 = groups.iter().map(|g| g.len() as u128).product();
        self.budget.check("orbit canonicalization", size)?;

        let mut slot = vec![usize::MAX; self.nv()];
        for (i, &v) in active.iter().enumerate() {
            slot[v] = i;
        }
        let mut best: Option<Vec<Vec<u8>>> = None;
        let mut idx = vec![0usize; active.len()];
        'outer: loop {
            let mut cand: Vec<Vec<u8>> = Vec::with_capacity(arrows.len());
            let mut less = best.is_none();
            for (a, &(s, t)) in arrows.iter().enumerate() {
                let m = if live[a] {
                    let gt = &groups[slot[t]][idx[slot[t]]].0;
                    let gs_inv = &groups[slot[s]][idx[slot[s]]].1;
                    gt.mul(x.mat(a)).mul(gs_inv).data().to_vec()
                } else {
                    x.mat(a).data().to_vec()
                };
                if !less {
                    match m.cmp(&best.as_ref().expect("set")[a]) {
                        std::cmp::Ordering::Less => less = true,
                        std::cmp::Ordering::Greater => {
                            cand.clear();
                            break;
                        }
                        std::cmp::Ordering::Equal => {}
                    }
                }
                cand.push(m);
            }
            if less && cand.len() == arrows.len() {
                best = Some(cand);
            }
            for (i, g) in groups.iter().enumerate() {
                idx[i] += 1;
                if idx[i] < g.len() {
                    continue 'outer;
                }
                idx[i] = 0;
            }
            break;
        }
        let mats = best.unwrap_or_else(|| x.mats().iter().map(|m| m.data().to_vec()).collect());
        Ok(RepKey { dims: dims.to_vec(), mats })
    }

    /// Iso-class representatives of every dimension vector `≤ bound`, sorted by key.
    pub fn enumerate_reps(&self, bound: &[usize]) -> Result<Vec<RepKey>> {
        if bound.len() != self.nv() {
            return Err(Error::DimensionMismatch(format!("bound has {} entries, expected {}", bound.len(), self.nv())));
        }
        let mut out = Vec::new();
        for dims in dim_vectors_below(bound) {
            out.extend(self.enumerate_reps_of_dims(&dims)?);
        }
        out.sort();
        Ok(out)
    }

    pub fn enumerate_reps_of_dims(&self, dims: &[usize]) -> Result<Vec<RepKey>> {
        let arrows = self.quiver.arrows();
        let sizes: Vec<usize> = arrows.iter().map(|&(s, t)| dims[s] * dims[t]).collect();
        let total = self.budget.check_pow("representation enumeration", self.q, sizes.iter().sum())?;
        let mut seen = std::collections::BTreeSet::new();
        let q = self.q as u64;
        for code in 0..total {
            let mut c = code;
            let mats = arrows
                .iter()
                .zip(&sizes)
                .map(|(&(s, t), &n)| {
                    let data = (0..n)
                        .map(|_| {
                            let x = (c % q) as u8;
                            c /= q;
                            x
                        })
                        .collect();
                    FqMatrix::new(self.q, dims[t], dims[s], data)
                })
                .collect();
            seen.insert(self.key(&Rep::from_parts(self.q, dims.to_vec(), mats))?);
        }
        Ok(seen.into_iter().collect())
    }

    pub fn hom_dim(&self, x: &Rep, y: &Rep) -> usize {
        diagram::hom_dim(&self.shape, x, y)
    }

    /// `(dim Hom(x,y), |Hom(x,y)|)`.
    pub fn hom_count(&self, x: &Rep, y: &Rep) -> (usize, u128) {
        let d = self.hom_dim(x, y);
        (d, (self.q as u128).pow(d as u32))
    }

    /// `dim Ext¹(x,y) = dim Hom(x,y) − ⟨x,y⟩` (the category is hereditary).
    pub fn ext_dim(&self, x: &Rep, y: &Rep) -> usize {
        let e = self.hom_dim(x, y) as i64 - self.euler(&self.class(x), &self.class(y));
        debug_assert!(e >= 0);
        e as usize
    }

    pub fn aut_count(&self, key: &RepKey) -> Result<u64> {
        if let Some(&a) = self.auts.read().get(key) {
            return Ok(a);
        }
        let a = diagram::aut_count(&self.shape, &self.rep(key), self.budget)?;
        self.auts.write().insert(key.clone(), a);
        Ok(a)
    }

    /// For every subrepresentation `N' ⊆ L`: the count of pairs
    /// `(key(L/N'), key(N'))`.
    pub fn subobject_table(&self, l: &RepKey) -> Result<Table> {
        if let Some(t) = self.subobjects.read().get(l) {
            return Ok(t.clone());
        }
        let rep = self.rep(l);
        let mut table = BTreeMap::new();
        for sub in diagram::enumerate_subreps(&self.shape, &rep, None, self.budget)? {
            let n = self.key(&diagram::sub_rep(&self.shape, &rep, &sub))?;
            let m = self.key(&diagram::quotient_rep(&self.shape, &rep, &sub))?;
            *table.entry((m, n)).or_insert(0) += 1;
        }
        let table = Arc::new(table);
        self.subobjects.write().insert(l.clone(), table.clone());
        Ok(table)
    }

    /// `g^L_{M,N}`: subrepresentations `N' ⊆ L` with `N' ≅ N`, `L/N' ≅ M`.
    pub fn hall_number(&self, l: &RepKey, m: &RepKey, n: &RepKey) -> Result<u64> {
        if l.class() != &m.class() + &n.class() {
            return Ok(0);
        }
        Ok(self.subobject_table(l)?.get(&(m.clone(), n.clone())).copied().unwrap_or(0))
    }

    /// Middle terms of `Ext¹(m, n)` counted by iso class, by enumerating
    /// cocycles modulo coboundaries.
    pub fn ext_classes(&self, m: &RepKey, n: &RepKey) -> Result<Arc<BTreeMap<RepKey, u64>>> {
        let k = (m.clone(), n.clone());
        if let Some(t) = self.ext_classes.read().get(&k) {
            return Ok(t.clone());
        }
        let ext = diagram::extensions(&self.shape, &self.rep(m), &self.rep(n), self.budget)?;
        let mut counts = BTreeMap::new();
        for l in &ext.middles {
            *counts.entry(self.key(l)?).or_insert(0) += 1;
        }
        let counts = Arc::new(counts);
        self.ext_classes.write().insert(k, counts.clone());
        Ok(counts)
    }

    /// `|Ext¹(M,N)_L| = g^L_{M,N} · |Hom(M,N)| · a_M a_N / a_L`.
    pub fn ext_count_with_middle(&self, m: &RepKey, n: &RepKey, l: &RepKey) -> Result<u64> {
        let g = self.hall_number(l, m, n)? as u128;
        let (_, hom) = self.hom_count(&self.rep(m), &self.rep(n));
        let num = g * hom * self.aut_count(m)? as u128 * self.aut_count(n)? as u128;
        let den = self.aut_count(l)? as u128;
        if !num.is_multiple_of(den) {
            return Err(Error::Internal(format!("|Ext¹({m},{n})_{l}| = {num}/{den} is not an integer")));
        }
        Ok((num / den) as u64)
    }

    /// The radical: at each vertex, the sum of the images of incoming arrows.
    pub fn radical(&self, x: &Rep) -> Vec<Subspace> {
        (0..self.nv())
            .map(|w| {
                let mut r = Subspace::zero(self.q, x.dims()[w]);
                for (a, &(_, t)) in self.quiver.arrows().iter().enumerate() {
                    if t == w {
                        r = r.sum(&Subspace::image(x.mat(a)));
                    }
                }
                r
            })
            .collect()
    }

    /// Dimension vector of `x / rad x`.
    pub fn top(&self, x: &Rep) -> Vec<usize> {
        self.radical(x).iter().zip(x.dims()).map(|(r, &d)| d - r.dim()).collect()
    }

    /// A representation is projective iff it has the dimension of the
    /// projective cover of its top.
    pub fn is_projective(&self, x: &Rep) -> bool {
        let top = self.top(x);
        let cover = self.quiver.projective_class(&top.iter().map(|&t| t as i64).collect::<Vec<_>>());
        cover == self.class(x)
    }

    /// The projective cover `⊕ P_v^{top_v} → x`, sending each generator to a
    /// chosen basis vector of a complement of the radical.
    pub fn projective_cover(&self, x: &Rep) -> (Rep, Morphism, Vec<usize>) {
        let rad = self.radical(x);
        let mut gens: Vec<(usize, Vec<u8>)> = Vec::new();
        for (v, r) in rad.iter().enumerate() {
            for b in r.complement_in(&Subspace::full(self.q, x.dims()[v])) {
                gens.push((v, b));
            }
        }
        let mut mult = vec![0usize; self.nv()];
        for (v, _) in &gens {
            mult[*v] += 1;
        }
        gens.sort_by_key(|(v, _)| *v);
        let cover_rep = self.projective_sum(&mult);
        // Columns of the cover at w: the images of the paths, summand by summand.
        let mut cols: Vec<Vec<Vec<u8>>> = vec![Vec::new(); self.nv()];
        for (v, x0) in &gens {
            let pv = self.projective(*v);
            // A vector in (P_v)_w is a path; push x0 along that path.
            for (w, col) in cols.iter_mut().enumerate() {
                for j in 0..pv.dims()[w] {
                    col.push(self.push_along_path(x, *v, x0, &pv, w, j));
                }
            }
        }
        let cover = cols.iter().enumerate().map(|(w, c)| FqMatrix::from_columns(self.q, x.dims()[w], c)).collect();
        (cover_rep, cover, mult)
    }

    /// Image of `x0 ∈ x_v` under the path indexed `j` in `(P_v)_w`: the
    /// unique morphism `P_v → x` with `e_v ↦ x0`, evaluated on that path.
    fn push_along_path(&self, x: &Rep, v: usize, x0: &[u8], pv: &Rep, w: usize, j: usize) -> Vec<u8> {
        // Walk back from the basis vector at w to e_v through the arrows of P_v.
        let arrows = self.quiver.arrows();
        if w == v {
            return x0.to_vec();
        }
        for (a, &(s, t)) in arrows.iter().enumerate() {
            if t != w {
                continue;
            }
            let m = pv.mat(a);
            for i in 0..pv.dims()[s] {
                if m.get(j, i) == 1 {
                    let prev = self.push_along_path(x, v, x0, pv, s, i);
                    return x.mat(a).apply(&prev);
                }
            }
        }
        unreachable!("every path out of v other than e_v ends with an arrow")
    }

    /// The minimal projective resolution `0 → P_A → Q_A → A → 0` (cached).
    pub fn minimal_resolution(&self, a: &RepKey) -> Result<Arc<Resolution>> {
        if let Some(r) = self.resolutions.read().get(a) {
            return Ok(r.clone());
        }
        let x = self.rep(a);
        let (q_rep, cover, q_mult) = self.projective_cover(&x);
        let ker = diagram::kernel(&cover);
        let p_rep = diagram::sub_rep(&self.shape, &q_rep, &ker);
        let f = diagram::inclusion(&ker);
        let p_mult = self.top(&p_rep);
        if !self.is_projective(&p_rep) {
            return Err(Error::Internal(format!("kernel of the cover of {a} is not projective")));
        }
        let res = Arc::new(Resolution { p: p_rep, q: q_rep, f, cover, p_mult, q_mult });
        self.resolutions.write().insert(a.clone(), res.clone());
        Ok(res)
    }

    /// Minimality: the image of `P_A → Q_A` lies in the radical of `Q_A`.
    pub fn is_minimal(&self, res: &Resolution) -> bool {
        let rad = self.radical(&res.q);
        diagram::image(&res.f).iter().zip(&rad).all(|(i, r)| i.is_subspace_of(r))
    }

    /// Splits `x` into indecomposables via idempotent endomorphisms; returns
    /// the sorted multiset of summand keys.
    pub fn indecomposable_summands(&self, x: &Rep) -> Result<Vec<RepKey>> {
        let mut out = Vec::new();
        self.split_rec(x, &mut out)?;
        out.sort();
        Ok(out)
    }

    fn split_rec(&self, x: &Rep, out: &mut Vec<RepKey>) -> Result<()> {
        if x.is_zero() {
            return Ok(());
        }
        match diagram::nontrivial_idempotent(&self.shape, x, self.budget)? {
            None => out.push(self.key(x)?),
            Some(e) => {
                let (a, b) = self.split_by(x, &e);
                self.split_rec(&a, out)?;
                self.split_rec(&b, out)?;
            }
        }
        Ok(())
    }

    fn split_by(&self, x: &Rep, e: &Morphism) -> (Rep, Rep) {
        let id = x.identity();
        let comp: Morphism = id.iter().zip(e).map(|(i, m)| i.sub(m)).collect();
        let a = diagram::sub_rep(&self.shape, x, &diagram::image(e));
        let b = diagram::sub_rep(&self.shape, x, &diagram::image(&comp));
        (a, b)
    }

    /// Checks that every splitting `x = im e ⊕ im(1−e)` by an idempotent
    /// leads to the same multiset of indecomposable summands.
    pub fn krull_schmidt_unique(&self, x: &Rep) -> Result<bool> {
        let reference = self.indecomposable_summands(x)?;
        let basis = diagram::hom_basis(&self.shape, x, x);
        let id = x.identity();
        let mut ok = true;
        let mut err = None;
        diagram::for_each_in_span(x, x, &basis, self.budget, |e| {
            if diagram::compose(e, e) == *e && *e != id {
                let (a, b) = self.split_by(x, e);
                match (self.indecomposable_summands(&a), self.indecomposable_summands(&b)) {
                    (Ok(mut sa), Ok(sb)) => {
                        sa.extend(sb);
                        sa.sort();
                        if sa != reference {
                            ok = false;
                        }
                    }
                    (Err(e), _) | (_, Err(e)) => {
                        err = Some(e);
                        return false;
                    }
                }
            }
            ok
        })?;
        match err {
            Some(e) => Err(e),
            None => Ok(ok),
        }
    }
}

/// All dimension vectors `d` with `0 ≤ d ≤ bound` componentwise, in
/// lexicographic order.
pub fn dim_vectors_below(bound: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=b).map(move |d| {
                    let mut v = p.clone();
                    v.push(d);
                    v
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2(q: u32) -> RepCat {
        RepCat::new(Quiver::a_n(2), q, Budget::default()).unwrap()
    }

    #[test]
    fn enumerate_small_categories() {
        let a1 = RepCat::new(Quiver::a_n(1), 2, Budget::default()).unwrap();
        assert_eq!(a1.enumerate_reps(&[2]).unwrap().len(), 3);
        let cat = a2(2);
        assert_eq!(cat.enumerate_reps(&[1, 1]).unwrap().len(), 5);
        assert_eq!(cat.enumerate_reps(&[0, 0]).unwrap(), vec![cat.zero_key()]);
    }

    #[test]
    fn key_text_round_trip() {
        let cat = a2(2);
        let p1 = cat.key(&cat.projective(0)).unwrap();
        assert_eq!(p1.to_string(), "1,1:1");
        assert_eq!(cat.parse_key("1,1:1").unwrap(), p1);
        assert_eq!(cat.parse_key("P1").unwrap(), p1);
        assert_eq!(cat.parse_key("S1+S2").unwrap().to_string(), "1,1:0");
        assert_eq!(cat.parse_key("0,0").unwrap(), cat.zero_key());
        assert!(cat.parse_key("1,1:2").is_err());
        assert!(cat.parse_key("Q1").is_err());
    }

    #[test]
    fn projectives_of_a2() {
        let cat = a2(2);
        let p1 = cat.projective(0);
        assert_eq!(p1.dims(), &[1, 1]);
        assert_eq!(p1.mat(0), &FqMatrix::identity(2, 1));
        assert_eq!(cat.projective(1).dims(), &[0, 1]);
        assert!(cat.is_projective(&p1));
        assert!(!cat.is_projective(&cat.simple(0)));
    }

    #[test]
    fn resolution_of_s1() {
        let cat = a2(2);
        let s1 = cat.key(&cat.simple(0)).unwrap();
        let res = cat.minimal_resolution(&s1).unwrap();
        assert_eq!(res.p_mult, vec![0, 1]);
        assert_eq!(res.q_mult, vec![1, 0]);
        assert!(cat.is_minimal(&res));
        let p1 = cat.key(&cat.projective(0)).unwrap();
        let res = cat.minimal_resolution(&p1).unwrap();
        assert!(res.p.is_zero());
    }

    #[test]
    fn hall_numbers() {
        let a1 = RepCat::new(Quiver::a_n(1), 2, Budget::default()).unwrap();
        let k = a1.parse_key("1").unwrap();
        let k2 = a1.parse_key("2").unwrap();
        assert_eq!(a1.hall_number(&k2, &k, &k).unwrap(), 3);
        let cat = a2(2);
        let s1 = cat.parse_key("S1").unwrap();
        let s2 = cat.parse_key("S2").unwrap();
        let s12 = cat.parse_key("S1+S2").unwrap();
        let p1 = cat.parse_key("P1").unwrap();
        assert_eq!(cat.hall_number(&s12, &s1, &s2).unwrap(), 1);
        assert_eq!(cat.ext_count_with_middle(&s1, &s2, &p1).unwrap(), 1);
        assert_eq!(cat.ext_count_with_middle(&s1, &s2, &s12).unwrap(), 1);
    }

    #[test]
    fn krull_schmidt_on_a2() {
        let cat = a2(2);
        for k in cat.enumerate_reps(&[2, 2]).unwrap() {
            assert!(cat.krull_schmidt_unique(&cat.rep(&k)).unwrap(), "{k}");
        }
        let s = cat.parse_rep("P1+S1+S1").unwrap();
        let parts = cat.indecomposable_summands(&s).unwrap();
        assert_eq!(parts.len(), 3);
    }
}
