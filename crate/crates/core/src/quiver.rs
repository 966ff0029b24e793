//! Acyclic quivers and dimension vectors.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

/// A finite acyclic quiver. Vertices and arrows keep their declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    topological: Vec<usize>,
}

impl Quiver {
    /// `arrows` are `(id, source, target)` with endpoints given by vertex id.
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::InvalidInput(format!("duplicate vertex id {v}")));
            }
        }
        let lookup = |v: &str| {
            vertices
                .iter()
                .position(|w| w == v)
                .ok_or_else(|| Error::InvalidInput(format!("arrow endpoint {v} is not a vertex")))
        };
        let mut out: Vec<Arrow> = Vec::new();
        for (id, s, t) in arrows {
            if out.iter().any(|a| a.id == id) {
                return Err(Error::InvalidInput(format!("duplicate arrow id {id}")));
            }
            out.push(Arrow {
                source: lookup(&s)?,
                target: lookup(&t)?,
                id,
            });
        }
        let topological = topological_order(vertices.len(), &out)
            .map_err(|v| Error::Cyclic(vertices[v].clone()))?;
        Ok(Quiver {
            vertices,
            arrows: out,
            topological,
        })
    }

    /// Vertices named `1..=n`, arrows `a1, a2, …` given by 1-based endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Quiver::new(
            (1..=n).map(|i| i.to_string()),
            edges
                .iter()
                .enumerate()
                .map(|(k, &(s, t))| (format!("a{}", k + 1), s.to_string(), t.to_string())),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    /// Every arrow goes from an earlier to a later vertex in this order.
    pub fn topological_order(&self) -> &[usize] {
        &self.topological
    }

    /// `A[i][j]` = number of arrows `i → j`.
    pub fn arrow_counts(&self) -> Vec<Vec<i64>> {
        let n = self.vertex_count();
        let mut a = vec![vec![0i64; n]; n];
        for arrow in &self.arrows {
            a[arrow.source][arrow.target] += 1;
        }
        a
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: self.vertex_count(),
                found: len,
            });
        }
        Ok(())
    }

    /// `⟨x, y⟩ = Σᵢ xᵢyᵢ − Σ_{a: i→j} xᵢyⱼ` on integer vectors.
    pub fn euler_form_int(&self, x: &[i64], y: &[i64]) -> Result<i64> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        let diag: i64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
        let off: i64 = self.arrows.iter().map(|a| x[a.source] * y[a.target]).sum();
        Ok(diag - off)
    }
}

/// Kahn's algorithm, ties broken by vertex index. On a cycle, reports a vertex on it.
fn topological_order(n: usize, arrows: &[Arrow]) -> core::result::Result<Vec<usize>, usize> {
    let mut indegree = vec![0usize; n];
    for a in arrows {
        indegree[a.target] += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut done = vec![false; n];
    while order.len() < n {
        let Some(v) = (0..n).find(|&v| !done[v] && indegree[v] == 0) else {
            return Err((0..n).find(|&v| !done[v]).expect("unfinished vertex"));
        };
        done[v] = true;
        order.push(v);
        for a in arrows.iter().filter(|a| a.source == v) {
            indegree[a.target] -= 1;
        }
    }
    Ok(order)
}

/// One nonnegative integer per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector(pub Vec<usize>);

impl DimVector {
    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn to_i64(&self) -> Vec<i64> {
        self.0.iter().map(|&x| x as i64).collect()
    }

    /// `None` if some entry is negative.
    pub fn from_i64(v: &[i64]) -> Option<Self> {
        v.iter()
            .map(|&x| usize::try_from(x).ok())
            .collect::<Option<Vec<_>>>()
            .map(DimVector)
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &Self) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self − other`, `None` unless `other ≤ self`.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        other
            .le(self)
            .then(|| DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn add(&self, other: &Self) -> Self {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All `e` with `0 ≤ e ≤ self`, in lexicographic order.
    pub fn sub_vectors(&self) -> Vec<DimVector> {
        let mut out = Vec::new();
        let mut current = vec![0usize; self.len()];
        loop {
            out.push(DimVector(current.clone()));
            let Some(i) = (0..current.len()).rev().find(|&i| current[i] < self.0[i]) else {
                break;
            };
            current[i] += 1;
            for x in &mut current[i + 1..] {
                *x = 0;
            }
        }
        out
    }
}

impl Index<usize> for DimVector {
    type Output = usize;
    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

impl From<Vec<usize>> for DimVector {
    fn from(v: Vec<usize>) -> Self {
        DimVector(v)
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// The Euler form `⟨d, e⟩` of the quiver on dimension vectors.
pub fn euler_form(quiver: &Quiver, d: &DimVector, e: &DimVector) -> Result<i64> {
    quiver.euler_form_int(&d.to_i64(), &e.to_i64())
}
