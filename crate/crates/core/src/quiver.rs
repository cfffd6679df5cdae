//! Quivers, their Grothendieck classes and the diagram shapes used to model
//! representations and two-periodic complexes uniformly.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A class in the Grothendieck group, i.e. an integer dimension vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct KClass(pub Vec<i64>);

impl KClass {
    pub fn zero(n: usize) -> Self {
        KClass(vec![0; n])
    }

    pub fn unit(n: usize, v: usize) -> Self {
        let mut c = vec![0; n];
        c[v] = 1;
        KClass(c)
    }

    pub fn from_dims(dims: &[usize]) -> Self {
        KClass(dims.iter().map(|&d| d as i64).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn scale(&self, k: i64) -> KClass {
        KClass(self.0.iter().map(|x| x * k).collect())
    }

    /// Dimension vector, if every coordinate is non-negative.
    pub fn to_dims(&self) -> Option<Vec<usize>> {
        self.is_nonnegative().then(|| self.0.iter().map(|&x| x as usize).collect())
    }
}

impl Add for &KClass {
    type Output = KClass;
    fn add(self, rhs: &KClass) -> KClass {
        assert_eq!(self.len(), rhs.len());
        KClass(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &KClass {
    type Output = KClass;
    fn sub(self, rhs: &KClass) -> KClass {
        assert_eq!(self.len(), rhs.len());
        KClass(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &KClass {
    type Output = KClass;
    fn neg(self) -> KClass {
        KClass(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// One linear relation on a diagram: `Σ c · (second ∘ first) = 0` over
/// composable pairs of edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(i8, usize, usize)>,
}

/// A finite diagram shape: vertices, directed edges and quadratic relations.
/// Quiver representations use a shape without relations; complexes use the
/// doubled shape of their quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shape {
    pub nv: usize,
    pub edges: Vec<(usize, usize)>,
    pub relations: Vec<Relation>,
}

/// A finite quiver without oriented cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    names: Vec<String>,
    arrows: Vec<(usize, usize)>,
    /// `paths[u][v]` = number of paths from `u` to `v`.
    paths: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct QuiverFile {
    vertices: Vec<String>,
    arrows: Vec<(String, String)>,
}

impl Quiver {
    pub fn new(names: Vec<String>, arrows: Vec<(usize, usize)>) -> Result<Self> {
        let n = names.len();
        if let Some(&(s, t)) = arrows.iter().find(|&&(s, t)| s >= n || t >= n) {
            return Err(Error::InvalidQuiver(format!("arrow ({s},{t}) has an unknown endpoint")));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {a:?}")));
            }
        }
        let order = topological_order(n, &arrows)
            .ok_or_else(|| Error::InvalidQuiver("the quiver has an oriented cycle".into()))?;
        // Count paths by dynamic programming along the reverse topological order.
        let mut paths = vec![vec![0usize; n]; n];
        for &u in order.iter().rev() {
            paths[u][u] = 1;
            for &(s, t) in &arrows {
                if s == u {
                    for v in 0..n {
                        paths[u][v] += paths[t][v];
                    }
                }
            }
        }
        Ok(Self { names, arrows, paths })
    }

    /// The linearly oriented `A_n` quiver `1 → 2 → … → n`.
    pub fn a_n(n: usize) -> Self {
        let names = (1..=n).map(|i| i.to_string()).collect();
        let arrows = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(names, arrows).expect("A_n is acyclic")
    }

    /// `n` vertices and no arrows.
    pub fn discrete(n: usize) -> Self {
        let names = (1..=n).map(|i| i.to_string()).collect();
        Self::new(names, Vec::new()).expect("no arrows")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: QuiverFile = serde_json::from_str(text)?;
        let index = |name: &str| {
            file.vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::InvalidQuiver(format!("arrow endpoint {name:?} is not a vertex")))
        };
        let arrows = file.arrows.iter().map(|(s, t)| Ok((index(s)?, index(t)?))).collect::<Result<Vec<_>>>()?;
        Self::new(file.vertices.clone(), arrows)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        let file = QuiverFile {
            vertices: self.names.clone(),
            arrows: self.arrows.iter().map(|&(s, t)| (self.names[s].clone(), self.names[t].clone())).collect(),
        };
        serde_json::to_string(&file).expect("quiver serializes")
    }

    pub fn num_vertices(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn path_count(&self, from: usize, to: usize) -> usize {
        self.paths[from][to]
    }

    /// Dimension vector of the indecomposable projective `P_v` (paths out of `v`).
    pub fn projective_dims(&self, v: usize) -> Vec<usize> {
        self.paths[v].clone()
    }

    /// `⟨a,b⟩ = Σ_i a_i b_i − Σ_{s→t} a_s b_t`.
    pub fn euler(&self, a: &KClass, b: &KClass) -> i64 {
        let diag: i64 = a.0.iter().zip(&b.0).map(|(x, y)| x * y).sum();
        let off: i64 = self.arrows.iter().map(|&(s, t)| a.0[s] * b.0[t]).sum();
        diag - off
    }

    /// `(a,b) = ⟨a,b⟩ + ⟨b,a⟩`.
    pub fn sym_euler(&self, a: &KClass, b: &KClass) -> i64 {
        self.euler(a, b) + self.euler(b, a)
    }

    /// Class of `⊕ P_v^{m_v}`.
    pub fn projective_class(&self, mult: &[i64]) -> KClass {
        let n = self.num_vertices();
        let mut c = vec![0i64; n];
        for (v, &m) in mult.iter().enumerate() {
            for (w, cw) in c.iter_mut().enumerate() {
                *cw += m * self.paths[v][w] as i64;
            }
        }
        KClass(c)
    }

    /// Inverse of [`Quiver::projective_class`]: the unique integer vector `m`
    /// with `Σ m_v cl(P_v) = c` (the path matrix is unitriangular).
    pub fn projective_multiplicities(&self, c: &KClass) -> Vec<i64> {
        let n = self.num_vertices();
        let order = topological_order(n, &self.arrows).expect("acyclic");
        // cl(P_v) is supported on vertices reachable from v, so solve from sinks up.
        let mut m = vec![0i64; n];
        let mut rest = c.0.clone();
        for &v in &order {
            m[v] = rest[v];
            for (w, r) in rest.iter_mut().enumerate() {
                *r -= m[v] * self.paths[v][w] as i64;
            }
        }
        debug_assert!(rest.iter().all(|&x| x == 0));
        m
    }

    /// Shape for plain representations.
    pub fn shape(&self) -> Shape {
        Shape { nv: self.num_vertices(), edges: self.arrows.clone(), relations: Vec::new() }
    }

    /// Shape whose representations are two-periodic complexes of
    /// representations. Vertex `(v, i)` has index `i·n + v`. Edges: arrows in
    /// degree 0, arrows in degree 1, then `d_1: (v,1) → (v,0)` and
    /// `d_0: (v,0) → (v,1)`.
    pub fn doubled_shape(&self) -> Shape {
        let n = self.num_vertices();
        let m = self.arrows.len();
        let mut edges = Vec::with_capacity(2 * m + 2 * n);
        for deg in 0..2 {
            for &(s, t) in &self.arrows {
                edges.push((deg * n + s, deg * n + t));
            }
        }
        for v in 0..n {
            edges.push((n + v, v));
        }
        for v in 0..n {
            edges.push((v, n + v));
        }
        let d1 = |v: usize| 2 * m + v;
        let d0 = |v: usize| 2 * m + n + v;
        let mut relations = Vec::new();
        for (a, &(s, t)) in self.arrows.iter().enumerate() {
            // d_1 ∘ a^(1) = a^(0) ∘ d_1 and d_0 ∘ a^(0) = a^(1) ∘ d_0
            relations.push(Relation { terms: vec![(1, m + a, d1(t)), (-1, d1(s), a)] });
            relations.push(Relation { terms: vec![(1, a, d0(t)), (-1, d0(s), m + a)] });
        }
        for v in 0..n {
            relations.push(Relation { terms: vec![(1, d1(v), d0(v))] });
            relations.push(Relation { terms: vec![(1, d0(v), d1(v))] });
        }
        Shape { nv: 2 * n, edges, relations }
    }
}

/// Kahn's algorithm; `None` if there is a cycle. Sources come first.
fn topological_order(n: usize, arrows: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    for &(_, t) in arrows {
        indeg[t] += 1;
    }
    let mut stack: Vec<usize> = (0..n).rev().filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(u) = stack.pop() {
        order.push(u);
        for &(s, t) in arrows {
            if s == u {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    stack.push(t);
                }
            }
        }
    }
    (order.len() == n).then_some(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_cycles() {
        let names = vec!["a".to_string(), "b".to_string()];
        assert!(Quiver::new(names.clone(), vec![(0, 1), (1, 0)]).is_err());
        assert!(Quiver::new(names, vec![(0, 0)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let q = Quiver::from_json(r#"{"vertices": ["1","2"], "arrows": [["1","2"]]}"#).unwrap();
        assert_eq!(q, Quiver::a_n(2));
        assert_eq!(Quiver::from_json(&q.to_json()).unwrap(), q);
        assert!(Quiver::from_json(r#"{"vertices": ["1"], "arrows": [["1","3"]]}"#).is_err());
    }

    #[test]
    fn euler_form_on_a2() {
        let q = Quiver::a_n(2);
        let s1 = KClass(vec![1, 0]);
        let s2 = KClass(vec![0, 1]);
        assert_eq!(q.euler(&s1, &s2), -1);
        assert_eq!(q.euler(&s2, &s1), 0);
        assert_eq!(q.sym_euler(&s1, &s2), -1);
        assert_eq!(Quiver::a_n(1).euler(&KClass(vec![1]), &KClass(vec![1])), 1);
    }

    #[test]
    fn projective_classes_invert() {
        let q = Quiver::a_n(3);
        assert_eq!(q.projective_dims(0), vec![1, 1, 1]);
        assert_eq!(q.projective_dims(2), vec![0, 0, 1]);
        let c = KClass(vec![2, -1, 4]);
        assert_eq!(q.projective_class(&q.projective_multiplicities(&c)), c);
    }
}
