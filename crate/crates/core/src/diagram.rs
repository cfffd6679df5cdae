//! Representations of a [`Shape`] over `F_q`: morphisms, subobjects,
//! quotients and extensions. Quiver representations and two-periodic
//! complexes are both handled here.

use crate::error::{Budget, Error, Result};
use crate::matrix::{enumerate_between, FqMatrix, Subspace};
use crate::quiver::Shape;

/// A representation: one vector space per vertex, one matrix per edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rep {
    q: u8,
    dims: Vec<usize>,
    mats: Vec<FqMatrix>,
}

/// A morphism of representations: one matrix per vertex.
pub type Morphism = Vec<FqMatrix>;

impl Rep {
    pub fn new(shape: &Shape, q: u8, dims: Vec<usize>, mats: Vec<FqMatrix>) -> Result<Self> {
        if dims.len() != shape.nv || mats.len() != shape.edges.len() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} dims and {} matrices, got {} and {}",
                shape.nv,
                shape.edges.len(),
                dims.len(),
                mats.len()
            )));
        }
        for (e, (&(s, t), m)) in shape.edges.iter().zip(&mats).enumerate() {
            if m.rows() != dims[t] || m.cols() != dims[s] || m.q() != q {
                return Err(Error::DimensionMismatch(format!(
                    "edge {e} needs a {}x{} matrix over F_{q}, got {}x{} over F_{}",
                    dims[t],
                    dims[s],
                    m.rows(),
                    m.cols(),
                    m.q()
                )));
            }
        }
        let rep = Self { q, dims, mats };
        if !rep.satisfies_relations(shape) {
            return Err(Error::DimensionMismatch("representation violates the shape relations".into()));
        }
        Ok(rep)
    }

    pub(crate) fn from_parts(q: u8, dims: Vec<usize>, mats: Vec<FqMatrix>) -> Self {
        Self { q, dims, mats }
    }

    pub fn zero(shape: &Shape, q: u8) -> Self {
        let mats = shape.edges.iter().map(|_| FqMatrix::zeros(q, 0, 0)).collect();
        Self { q, dims: vec![0; shape.nv], mats }
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn mats(&self) -> &[FqMatrix] {
        &self.mats
    }

    pub fn mat(&self, e: usize) -> &FqMatrix {
        &self.mats[e]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn satisfies_relations(&self, shape: &Shape) -> bool {
        shape.relations.iter().all(|rel| {
            let (s, _) = shape.edges[rel.terms[0].1];
            let (_, t) = shape.edges[rel.terms[0].2];
            let mut acc = FqMatrix::zeros(self.q, self.dims[t], self.dims[s]);
            for &(c, e1, e2) in &rel.terms {
                let p = self.mats[e2].mul(&self.mats[e1]);
                acc = acc.add(&p.scale(c.rem_euclid(self.q as i8) as u8));
            }
            acc.is_zero()
        })
    }

    /// `self ⊕ other`, with `self` in the leading coordinates.
    pub fn direct_sum(&self, other: &Rep) -> Rep {
        assert_eq!(self.dims.len(), other.dims.len());
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let mats = self.mats.iter().zip(&other.mats).map(|(a, b)| a.block_diag(b)).collect();
        Rep { q: self.q, dims, mats }
    }

    pub fn identity(&self) -> Morphism {
        self.dims.iter().map(|&d| FqMatrix::identity(self.q, d)).collect()
    }

    /// Compact byte encoding used as a cache key.
    pub fn encode(&self) -> Vec<u8> {
        let mut out: Vec<u8> = self.dims.iter().map(|&d| d as u8).collect();
        for m in &self.mats {
            out.extend_from_slice(m.data());
        }
        out
    }
}

pub fn is_morphism(shape: &Shape, x: &Rep, y: &Rep, f: &Morphism) -> bool {
    f.len() == shape.nv
        && f.iter().enumerate().all(|(v, m)| m.rows() == y.dims[v] && m.cols() == x.dims[v])
        && shape.edges.iter().enumerate().all(|(e, &(s, t))| f[t].mul(x.mat(e)) == y.mat(e).mul(&f[s]))
}

/// `g ∘ f`.
pub fn compose(g: &Morphism, f: &Morphism) -> Morphism {
    g.iter().zip(f).map(|(a, b)| a.mul(b)).collect()
}

pub fn is_iso(f: &Morphism) -> bool {
    f.iter().all(|m| m.is_invertible())
}

/// `Σ c_i f_i`, for a basis `fs` of a morphism space between `x` and `y`.
pub fn combine(x: &Rep, y: &Rep, fs: &[Morphism], coeffs: &[u8]) -> Morphism {
    let q = x.q;
    let mut out: Morphism = x.dims.iter().zip(&y.dims).map(|(&dx, &dy)| FqMatrix::zeros(q, dy, dx)).collect();
    for (f, &c) in fs.iter().zip(coeffs) {
        if c != 0 {
            for (o, m) in out.iter_mut().zip(f) {
                *o = o.add(&m.scale(c));
            }
        }
    }
    out
}

/// Offsets of per-vertex `dy × dx` blocks inside a flattened morphism vector.
fn block_offsets(x: &Rep, y: &Rep) -> (Vec<usize>, usize) {
    let mut offs = Vec::with_capacity(x.dims.len());
    let mut total = 0;
    for (&dx, &dy) in x.dims.iter().zip(&y.dims) {
        offs.push(total);
        total += dx * dy;
    }
    (offs, total)
}

fn unflatten(x: &Rep, y: &Rep, offs: &[usize], v: &[u8]) -> Morphism {
    x.dims
        .iter()
        .zip(&y.dims)
        .zip(offs)
        .map(|((&dx, &dy), &o)| FqMatrix::new(x.q, dy, dx, v[o..o + dx * dy].to_vec()))
        .collect()
}

fn flatten(f: &Morphism) -> Vec<u8> {
    f.iter().flat_map(|m| m.data().iter().copied()).collect()
}

/// A basis of `Hom(x, y)`.
pub fn hom_basis(shape: &Shape, x: &Rep, y: &Rep) -> Vec<Morphism> {
    let q = x.q;
    let (offs, n) = block_offsets(x, y);
    if n == 0 {
        return Vec::new();
    }
    // One column per unknown entry; rows are the commutativity equations.
    let mut columns = Vec::with_capacity(n);
    for i in 0..n {
        let mut v = vec![0u8; n];
        v[i] = 1;
        let f = unflatten(x, y, &offs, &v);
        let mut eq = Vec::new();
        for (e, &(s, t)) in shape.edges.iter().enumerate() {
            eq.extend_from_slice(f[t].mul(x.mat(e)).sub(&y.mat(e).mul(&f[s])).data());
        }
        columns.push(eq);
    }
    let rows = columns[0].len();
    let sys = FqMatrix::from_columns(q, rows, &columns);
    sys.kernel().iter().map(|k| unflatten(x, y, &offs, k)).collect()
}

pub fn hom_dim(shape: &Shape, x: &Rep, y: &Rep) -> usize {
    hom_basis(shape, x, y).len()
}

/// Calls `f` on every element of the span of `basis`, stopping early when it
/// returns `false`.
pub fn for_each_in_span(
    x: &Rep,
    y: &Rep,
    basis: &[Morphism],
    budget: Budget,
    mut f: impl FnMut(&Morphism) -> bool,
) -> Result<()> {
    let q = x.q;
    let total = budget.check_pow("morphism space enumeration", q, basis.len())?;
    let mut coeffs = vec![0u8; basis.len()];
    for _ in 0..total {
        if !f(&combine(x, y, basis, &coeffs)) {
            break;
        }
        for c in coeffs.iter_mut() {
            *c += 1;
            if *c < q {
                break;
            }
            *c = 0;
        }
    }
    Ok(())
}

/// Number of automorphisms, by exhaustive search over the endomorphisms.
pub fn aut_count(shape: &Shape, x: &Rep, budget: Budget) -> Result<u64> {
    let basis = hom_basis(shape, x, x);
    let mut n = 0u64;
    for_each_in_span(x, x, &basis, budget, |f| {
        if is_iso(f) {
            n += 1;
        }
        true
    })?;
    Ok(n)
}

/// An isomorphism `x → y` if one exists.
pub fn find_iso(shape: &Shape, x: &Rep, y: &Rep, budget: Budget) -> Result<Option<Morphism>> {
    if x.dims != y.dims {
        return Ok(None);
    }
    let basis = hom_basis(shape, x, y);
    let mut found = None;
    for_each_in_span(x, y, &basis, budget, |f| {
        if is_iso(f) {
            found = Some(f.clone());
            false
        } else {
            true
        }
    })?;
    Ok(found)
}

pub fn image(f: &Morphism) -> Vec<Subspace> {
    f.iter().map(Subspace::image).collect()
}

pub fn kernel(f: &Morphism) -> Vec<Subspace> {
    f.iter().map(Subspace::kernel).collect()
}

pub fn is_subrep(shape: &Shape, x: &Rep, sub: &[Subspace]) -> bool {
    shape
        .edges
        .iter()
        .enumerate()
        .all(|(e, &(s, t))| sub[s].basis().iter().all(|b| sub[t].contains(&x.mat(e).apply(b))))
}

/// The subrepresentation on `sub`, in the echelon bases of its subspaces.
pub fn sub_rep(shape: &Shape, x: &Rep, sub: &[Subspace]) -> Rep {
    let dims: Vec<usize> = sub.iter().map(|s| s.dim()).collect();
    let mats = shape
        .edges
        .iter()
        .enumerate()
        .map(|(e, &(s, t))| {
            let cols: Vec<Vec<u8>> = sub[s].basis().iter().map(|b| sub[t].coords(&x.mat(e).apply(b))).collect();
            FqMatrix::from_columns(x.q, dims[t], &cols)
        })
        .collect();
    Rep { q: x.q, dims, mats }
}

/// The inclusion `sub_rep(sub) → x`.
pub fn inclusion(sub: &[Subspace]) -> Morphism {
    sub.iter().map(|s| FqMatrix::from_columns(s.q(), s.ambient_dim(), s.basis())).collect()
}

/// Indices of the coset basis of `ambient / sub`: the non-pivot coordinates.
pub fn coset_coords(s: &Subspace) -> Vec<usize> {
    (0..s.ambient_dim()).filter(|c| !s.pivots().contains(c)).collect()
}

/// The quotient `x / sub` in the canonical coset bases.
pub fn quotient_rep(shape: &Shape, x: &Rep, sub: &[Subspace]) -> Rep {
    let free: Vec<Vec<usize>> = sub.iter().map(coset_coords).collect();
    let dims: Vec<usize> = free.iter().map(|f| f.len()).collect();
    let mats = shape
        .edges
        .iter()
        .enumerate()
        .map(|(e, &(s, t))| {
            let cols: Vec<Vec<u8>> = free[s]
                .iter()
                .map(|&j| {
                    let r = sub[t].reduce(&x.mat(e).column(j));
                    free[t].iter().map(|&i| r[i]).collect()
                })
                .collect();
            FqMatrix::from_columns(x.q, dims[t], &cols)
        })
        .collect();
    Rep { q: x.q, dims, mats }
}

/// All subrepresentations of `x`, optionally restricted to a dimension vector.
pub fn enumerate_subreps(shape: &Shape, x: &Rep, dims: Option<&[usize]>, budget: Budget) -> Result<Vec<Vec<Subspace>>> {
    let mut out = Vec::new();
    let mut chosen: Vec<Option<Subspace>> = vec![None; shape.nv];
    subreps_rec(shape, x, dims, budget, 0, &mut chosen, &mut out)?;
    Ok(out)
}

fn subreps_rec(
    shape: &Shape,
    x: &Rep,
    dims: Option<&[usize]>,
    budget: Budget,
    v: usize,
    chosen: &mut Vec<Option<Subspace>>,
    out: &mut Vec<Vec<Subspace>>,
) -> Result<()> {
    if v == shape.nv {
        budget.check("subrepresentation enumeration", out.len() as u128 + 1)?;
        out.push(chosen.iter().map(|s| s.clone().expect("all chosen")).collect());
        return Ok(());
    }
    let n = x.dims[v];
    let mut low = Subspace::zero(x.q, n);
    let mut high = Subspace::full(x.q, n);
    for (e, &(s, t)) in shape.edges.iter().enumerate() {
        if t == v {
            if let Some(us) = &chosen[s] {
                low = low.sum(&us.map(x.mat(e)));
            }
        }
        if s == v {
            if let Some(ut) = &chosen[t] {
                high = high.intersect(&ut.preimage(x.mat(e)));
            }
        }
    }
    let target = dims.map(|d| d[v]);
    for u in enumerate_between(&low, &high, target, budget)? {
        chosen[v] = Some(u);
        subreps_rec(shape, x, dims, budget, v + 1, chosen, out)?;
    }
    chosen[v] = None;
    Ok(())
}

/// Extension data of `0 → sub → L → quot → 0`.
pub struct Extensions {
    /// One middle term per class in `Ext¹(quot, sub)`.
    pub middles: Vec<Rep>,
    pub hom_dim: usize,
    pub ext_dim: usize,
}

/// Enumerates `Ext¹(quot, sub)` through cocycles modulo coboundaries. A
/// cocycle is a family `h_e: quot_{s(e)} → sub_{t(e)}`; the middle term has
/// edge matrices `[[sub_e, h_e], [0, quot_e]]` and must satisfy the shape
/// relations.
pub fn extensions(shape: &Shape, quot: &Rep, sub: &Rep, budget: Budget) -> Result<Extensions> {
    let q = quot.q;
    // Layout of the cocycle vector.
    let mut offs = Vec::with_capacity(shape.edges.len());
    let mut n = 0;
    for &(s, t) in &shape.edges {
        offs.push(n);
        n += sub.dims[t] * quot.dims[s];
    }
    let h_of = |v: &[u8], e: usize| {
        let (s, t) = shape.edges[e];
        FqMatrix::new(q, sub.dims[t], quot.dims[s], v[offs[e]..offs[e] + sub.dims[t] * quot.dims[s]].to_vec())
    };
    let cocycle_eqs = |v: &[u8]| {
        let mut eq = Vec::new();
        for rel in &shape.relations {
            let (s, _) = shape.edges[rel.terms[0].1];
            let (_, t) = shape.edges[rel.terms[0].2];
            let mut acc = FqMatrix::zeros(q, sub.dims[t], quot.dims[s]);
            for &(c, e1, e2) in &rel.terms {
                let block = sub.mat(e2).mul(&h_of(v, e1)).add(&h_of(v, e2).mul(quot.mat(e1)));
                acc = acc.add(&block.scale(c.rem_euclid(q as i8) as u8));
            }
            eq.extend_from_slice(acc.data());
        }
        eq
    };

    let cocycles = if n == 0 {
        Subspace::zero(q, 0)
    } else if shape.relations.is_empty() {
        Subspace::full(q, n)
    } else {
        let columns: Vec<Vec<u8>> = (0..n)
            .map(|i| {
                let mut v = vec![0u8; n];
                v[i] = 1;
                cocycle_eqs(&v)
            })
            .collect();
        let rows = columns[0].len();
        Subspace::span(q, n, &FqMatrix::from_columns(q, rows, &columns).kernel())
    };

    // Coboundaries of graded maps s_v: quot_v → sub_v.
    let (soffs, sn) = block_offsets(quot, sub);
    let mut cobs = Vec::with_capacity(sn);
    for i in 0..sn {
        let mut sv = vec![0u8; sn];
        sv[i] = 1;
        let s = unflatten(quot, sub, &soffs, &sv);
        let mut h = vec![0u8; n];
        for (e, &(a, b)) in shape.edges.iter().enumerate() {
            let block = sub.mat(e).mul(&s[a]).sub(&s[b].mul(quot.mat(e)));
            h[offs[e]..offs[e] + block.data().len()].copy_from_slice(block.data());
        }
        cobs.push(h);
    }
    let coboundaries = Subspace::span(q, n, &cobs);
    debug_assert!(coboundaries.is_subspace_of(&cocycles));
    let hom_dim = sn - coboundaries.dim();
    let comp = coboundaries.complement_in(&cocycles);
    let ext_dim = comp.len();
    let total = budget.check_pow("extension enumeration", q, ext_dim)?;

    let dims: Vec<usize> = sub.dims.iter().zip(&quot.dims).map(|(a, b)| a + b).collect();
    let mut middles = Vec::with_capacity(total as usize);
    let mut coeffs = vec![0u8; ext_dim];
    for _ in 0..total {
        let mut h = vec![0u8; n];
        for (c, b) in coeffs.iter().zip(&comp) {
            if *c != 0 {
                for (x, y) in h.iter_mut().zip(b) {
                    *x = ((*x as u16 + *c as u16 * *y as u16) % q as u16) as u8;
                }
            }
        }
        let mats = shape
            .edges
            .iter()
            .enumerate()
            .map(|(e, &(s, t))| {
                let mut m = FqMatrix::zeros(q, dims[t], dims[s]);
                m.paste(0, 0, sub.mat(e));
                m.paste(sub.dims[t], sub.dims[s], quot.mat(e));
                m.paste(0, sub.dims[s], &h_of(&h, e));
                m
            })
            .collect();
        middles.push(Rep { q, dims: dims.clone(), mats });
        for c in coeffs.iter_mut() {
            *c += 1;
            if *c < q {
                break;
            }
            *c = 0;
        }
    }
    Ok(Extensions { middles, hom_dim, ext_dim })
}

/// An endomorphism `e` with `e² = e`, `e ≠ 0, 1`, if one exists.
pub fn nontrivial_idempotent(shape: &Shape, x: &Rep, budget: Budget) -> Result<Option<Morphism>> {
    let basis = hom_basis(shape, x, x);
    let id = x.identity();
    let zero = combine(x, x, &[], &[]);
    let mut found = None;
    for_each_in_span(x, x, &basis, budget, |e| {
        if *e != id && *e != zero && compose(e, e) == *e {
            found = Some(e.clone());
            false
        } else {
            true
        }
    })?;
    Ok(found)
}

/// Flattened form of a morphism, for linear algebra on morphism spaces.
pub fn flatten_morphism(f: &Morphism) -> Vec<u8> {
    flatten(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn a2_rep(q: u8, d1: usize, d2: usize, m: &[&[i64]]) -> Rep {
        let shape = Quiver::a_n(2).shape();
        let mat = if m.is_empty() { FqMatrix::zeros(q, d2, d1) } else { FqMatrix::from_rows(q, m) };
        Rep::new(&shape, q, vec![d1, d2], vec![mat]).unwrap()
    }

    #[test]
    fn hom_between_simples() {
        let shape = Quiver::a_n(2).shape();
        let s1 = a2_rep(2, 1, 0, &[]);
        let s2 = a2_rep(2, 0, 1, &[]);
        assert_eq!(hom_dim(&shape, &s1, &s2), 0);
        assert_eq!(hom_dim(&shape, &s1, &s1), 1);
        assert_eq!(hom_dim(&shape, &Rep::zero(&shape, 2), &s2), 0);
    }

    #[test]
    fn aut_counts() {
        let a1 = Quiver::a_n(1).shape();
        let k2 = Rep::new(&a1, 2, vec![2], vec![]).unwrap();
        assert_eq!(aut_count(&a1, &k2, Budget::default()).unwrap(), 6);
        let shape = Quiver::a_n(2).shape();
        let s12 = a2_rep(2, 1, 1, &[&[0]]);
        assert_eq!(aut_count(&shape, &s12, Budget::default()).unwrap(), 1);
        let p1 = a2_rep(2, 1, 1, &[&[1]]);
        assert_eq!(aut_count(&shape, &p1, Budget::default()).unwrap(), 1);
    }

    #[test]
    fn subreps_of_p1() {
        let shape = Quiver::a_n(2).shape();
        let p1 = a2_rep(3, 1, 1, &[&[1]]);
        // 0, S_2 and P_1 itself
        assert_eq!(enumerate_subreps(&shape, &p1, None, Budget::default()).unwrap().len(), 3);
        let s12 = a2_rep(3, 1, 1, &[&[0]]);
        assert_eq!(enumerate_subreps(&shape, &s12, None, Budget::default()).unwrap().len(), 4);
    }

    #[test]
    fn quotient_of_p1_by_s2() {
        let shape = Quiver::a_n(2).shape();
        let p1 = a2_rep(2, 1, 1, &[&[1]]);
        let sub = vec![Subspace::zero(2, 1), Subspace::full(2, 1)];
        assert!(is_subrep(&shape, &p1, &sub));
        let quot = quotient_rep(&shape, &p1, &sub);
        assert_eq!(quot.dims(), &[1, 0]);
        assert_eq!(sub_rep(&shape, &p1, &sub).dims(), &[0, 1]);
    }

    #[test]
    fn ext_of_simples() {
        let shape = Quiver::a_n(2).shape();
        let s1 = a2_rep(2, 1, 0, &[]);
        let s2 = a2_rep(2, 0, 1, &[]);
        let ext = extensions(&shape, &s1, &s2, Budget::default()).unwrap();
        assert_eq!((ext.ext_dim, ext.hom_dim), (1, 0));
        assert_eq!(ext.middles.len(), 2);
        let back = extensions(&shape, &s2, &s1, Budget::default()).unwrap();
        assert_eq!(back.ext_dim, 0);
    }

    #[test]
    fn idempotents_split_sums() {
        let shape = Quiver::a_n(2).shape();
        let p1 = a2_rep(2, 1, 1, &[&[1]]);
        assert!(nontrivial_idempotent(&shape, &p1, Budget::default()).unwrap().is_none());
        let s = p1.direct_sum(&a2_rep(2, 1, 0, &[]));
        assert!(nontrivial_idempotent(&shape, &s, Budget::default()).unwrap().is_some());
    }
}
