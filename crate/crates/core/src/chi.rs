//! Bilinear twisting maps `χ` on pairs of complexes, read off the graded
//! classes `(M_1, M_0)` and `(N_1, N_0)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{KClass, Quiver};

/// `χ(M,N) = u^T C v` with `u = (cl M_1, cl M_0)`, `v = (cl N_1, cl N_0)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiMap {
    pub name: String,
    /// `2n × 2n`, row-major.
    pub matrix: Vec<Vec<i64>>,
}

impl ChiMap {
    pub fn new(name: impl Into<String>, matrix: Vec<Vec<i64>>) -> Result<Self> {
        let n2 = matrix.len();
        if !n2.is_multiple_of(2) || matrix.iter().any(|r| r.len() != n2) {
            return Err(Error::DimensionMismatch("χ needs a square matrix of even size".into()));
        }
        Ok(Self { name: name.into(), matrix })
    }

    fn euler_matrix(quiver: &Quiver) -> Vec<Vec<i64>> {
        let n = quiver.num_vertices();
        (0..n).map(|i| (0..n).map(|j| quiver.euler(&KClass::unit(n, i), &KClass::unit(n, j))).collect()).collect()
    }

    fn blocks(n: usize, b11: &[Vec<i64>], b00: &[Vec<i64>], sign: i64) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..n {
                m[i][j] = sign * b11[i][j];
                m[n + i][n + j] = sign * b00[i][j];
            }
        }
        m
    }

    /// `⟨M,N⟩' = ⟨M_0,N_0⟩ + ⟨M_1,N_1⟩`.
    pub fn euler(quiver: &Quiver) -> Self {
        let e = Self::euler_matrix(quiver);
        let n = quiver.num_vertices();
        Self { name: "euler".into(), matrix: Self::blocks(n, &e, &e, 1) }
    }

    /// `χ_0(M,N) = −⟨N,M⟩' = −⟨N_0,M_0⟩ − ⟨N_1,M_1⟩`.
    pub fn chi0(quiver: &Quiver) -> Self {
        let e = Self::euler_matrix(quiver);
        let n = quiver.num_vertices();
        let et: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| e[j][i]).collect()).collect();
        Self { name: "chi0".into(), matrix: Self::blocks(n, &et, &et, -1) }
    }

    pub fn builtin(name: &str, quiver: &Quiver) -> Result<Self> {
        match name {
            "euler" => Ok(Self::euler(quiver)),
            "chi0" => Ok(Self::chi0(quiver)),
            _ => Err(Error::Parse(format!("unknown χ map {name:?}; expected euler or chi0"))),
        }
    }

    pub fn n(&self) -> usize {
        self.matrix.len() / 2
    }

    /// Evaluates `χ` on graded classes `(M_1, M_0)`, `(N_1, N_0)`.
    pub fn eval(&self, m: (&KClass, &KClass), n: (&KClass, &KClass)) -> i64 {
        let u: Vec<i64> = m.0 .0.iter().chain(&m.1 .0).copied().collect();
        let v: Vec<i64> = n.0 .0.iter().chain(&n.1 .0).copied().collect();
        let mut s = 0;
        for (i, ui) in u.iter().enumerate() {
            if *ui != 0 {
                for (j, vj) in v.iter().enumerate() {
                    s += ui * self.matrix[i][j] * vj;
                }
            }
        }
        s
    }

    /// Checks the cocycle-type condition
    /// `χ(P+Q, N) + χ(P, Q) = χ(P, Q+N) + χ(Q, N)` on every triple of graded
    /// classes with coordinates in `0..=bound`.
    pub fn check_condition(&self, bound: i64) -> bool {
        let n = self.n();
        let classes = graded_classes(n, bound);
        let add = |a: &(KClass, KClass), b: &(KClass, KClass)| (&a.0 + &b.0, &a.1 + &b.1);
        let ev = |a: &(KClass, KClass), b: &(KClass, KClass)| self.eval((&a.0, &a.1), (&b.0, &b.1));
        for p in &classes {
            for q in &classes {
                let m = add(p, q);
                for nn in &classes {
                    let r = add(q, nn);
                    if ev(&m, nn) + ev(p, q) != ev(p, &r) + ev(q, nn) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn graded_classes(n: usize, bound: i64) -> Vec<(KClass, KClass)> {
    let mut out = vec![Vec::new()];
    for _ in 0..2 * n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..=bound).map(move |x| {
                    let mut v = p.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(|v| (KClass(v[..n].to_vec()), KClass(v[n..].to_vec()))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_satisfy_condition() {
        let q = Quiver::a_n(2);
        assert!(ChiMap::euler(&q).check_condition(1));
        assert!(ChiMap::chi0(&q).check_condition(1));
        assert!(ChiMap::builtin("other", &q).is_err());
    }

    #[test]
    fn chi0_is_minus_transposed_euler() {
        let q = Quiver::a_n(2);
        let s1 = KClass(vec![1, 0]);
        let s2 = KClass(vec![0, 1]);
        let z = KClass::zero(2);
        let chi0 = ChiMap::chi0(&q);
        // χ_0(M,N) = −⟨N_0,M_0⟩ with M_0 = S_1, N_0 = S_2: −⟨S_2,S_1⟩ = 0
        assert_eq!(chi0.eval((&z, &s1), (&z, &s2)), 0);
        assert_eq!(chi0.eval((&z, &s2), (&z, &s1)), 1);
        assert_eq!(ChiMap::euler(&q).eval((&s1, &z), (&s2, &z)), -1);
    }
}
