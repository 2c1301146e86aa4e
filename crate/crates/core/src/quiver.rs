//! Quivers with dimension vectors, their rank invariants and abelianization.
//!
//! Vertices are numbered `0..=rho` in the caller's order, `0` being the
//! unique source with rank 1. Arrows only run from lower to higher vertex
//! numbers. Inputs are assumed graph-reduced: the Fano test below is the
//! criterion `s_i - s'_i > 0`, which is only meaningful for such quivers.

use std::fmt;

use crate::error::{Error, Result};

/// Incoming and outgoing rank of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexRanks {
    /// `s_i`: sum of `r_{s(a)}` over arrows into the vertex.
    pub incoming: u64,
    /// `s'_i`: sum of `r_{t(a)}` over arrows out of the vertex.
    pub outgoing: u64,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Quiver {
    /// `r_0 = 1, r_1, ..., r_rho`.
    ranks: Vec<usize>,
    /// Dense `(rho+1) x (rho+1)` table, nonzero only above the diagonal.
    mult: Vec<Vec<u32>>,
    vertex_ranks: Vec<VertexRanks>,
}

impl Quiver {
    /// Builds and validates a quiver from the ranks `r_1..r_rho` and arrow
    /// triples `(from, to, multiplicity)`. Repeated pairs accumulate.
    pub fn new(dims: &[usize], arrows: &[(usize, usize, u32)]) -> Result<Self> {
        let rho = dims.len();
        if rho == 0 {
            return Err(Error::EmptyQuiver);
        }
        if let Some(pos) = dims.iter().position(|&d| d == 0) {
            return Err(Error::ZeroDimension(pos + 1));
        }
        let mut mult = vec![vec![0u32; rho + 1]; rho + 1];
        for &(from, to, m) in arrows {
            for v in [from, to] {
                if v > rho {
                    return Err(Error::ArrowOutOfRange { vertex: v, rho });
                }
            }
            if from >= to {
                return Err(Error::ArrowOrder { from, to });
            }
            mult[from][to] += m;
        }
        let mut ranks = Vec::with_capacity(rho + 1);
        ranks.push(1);
        ranks.extend_from_slice(dims);

        let mut vertex_ranks = Vec::with_capacity(rho);
        for i in 1..=rho {
            if (0..i).all(|j| mult[j][i] == 0) {
                return Err(Error::NoIncomingArrows(i));
            }
            let incoming: u64 = (0..i).map(|j| mult[j][i] as u64 * ranks[j] as u64).sum();
            let outgoing: u64 = (i + 1..=rho).map(|j| mult[i][j] as u64 * ranks[j] as u64).sum();
            if incoming <= ranks[i] as u64 {
                return Err(Error::DegenerateVertex {
                    vertex: i,
                    incoming,
                    rank: ranks[i] as u64,
                });
            }
            vertex_ranks.push(VertexRanks { incoming, outgoing });
        }
        Ok(Quiver {
            ranks,
            mult,
            vertex_ranks,
        })
    }

    /// The Grassmannian `Gr(n, r)` of `r`-dimensional quotients of `C^n`.
    pub fn grassmannian(n: u32, r: usize) -> Result<Self> {
        Self::new(&[r], &[(0, 1, n)])
    }

    /// The flag variety of quotients `Fl(n; r_1, ..., r_rho)`.
    pub fn flag(n: u32, dims: &[usize]) -> Result<Self> {
        let mut arrows = vec![(0, 1, n)];
        arrows.extend((1..dims.len()).map(|i| (i, i + 1, 1)));
        Self::new(dims, &arrows)
    }

    /// Number of vertices excluding the source.
    pub fn rho(&self) -> usize {
        self.ranks.len() - 1
    }

    /// `r_i`, with `r_0 = 1`.
    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i]
    }

    /// `r_1..r_rho`.
    pub fn dims(&self) -> &[usize] {
        &self.ranks[1..]
    }

    /// Number of arrows `i -> j`.
    pub fn mult(&self, i: usize, j: usize) -> u32 {
        self.mult[i][j]
    }

    /// `(from, to, multiplicity)` for every nonzero entry, sorted.
    pub fn arrow_triples(&self) -> Vec<(usize, usize, u32)> {
        let rho = self.rho();
        let mut out = Vec::new();
        for i in 0..=rho {
            for j in i + 1..=rho {
                if self.mult[i][j] > 0 {
                    out.push((i, j, self.mult[i][j]));
                }
            }
        }
        out
    }

    /// Ranks of vertex `i >= 1`.
    pub fn vertex_ranks(&self, i: usize) -> VertexRanks {
        self.vertex_ranks[i - 1]
    }

    /// Ranks of every vertex `1..=rho`.
    pub fn validate(&self) -> &[VertexRanks] {
        &self.vertex_ranks
    }

    /// `s_i`.
    pub fn incoming(&self, i: usize) -> usize {
        self.vertex_ranks[i - 1].incoming as usize
    }

    /// `s'_i`.
    pub fn outgoing(&self, i: usize) -> usize {
        self.vertex_ranks[i - 1].outgoing as usize
    }

    /// Width of the basis box at vertex `i`: `s_i - r_i`.
    pub fn box_width(&self, i: usize) -> u32 {
        (self.incoming(i) - self.rank(i)) as u32
    }

    /// Source vertex of every individual arrow into `i`, repeated by multiplicity.
    pub fn arrows_into(&self, i: usize) -> Vec<usize> {
        (0..i)
            .flat_map(|j| std::iter::repeat(j).take(self.mult[j][i] as usize))
            .collect()
    }

    /// Target vertex of every individual arrow out of `i`, repeated by multiplicity.
    pub fn arrows_out_of(&self, i: usize) -> Vec<usize> {
        (i + 1..=self.rho())
            .flat_map(|j| std::iter::repeat(j).take(self.mult[i][j] as usize))
            .collect()
    }

    /// `s_i - s'_i > 0` at every vertex.
    pub fn is_fano(&self) -> bool {
        self.vertex_ranks.iter().all(|v| v.incoming > v.outgoing)
    }

    /// The first vertex violating the Fano condition, as an error.
    pub fn require_fano(&self) -> Result<()> {
        match self.vertex_ranks.iter().position(|v| v.incoming <= v.outgoing) {
            None => Ok(()),
            Some(pos) => {
                let v = self.vertex_ranks[pos];
                Err(Error::NotFano {
                    vertex: pos + 1,
                    excess: v.incoming as i64 - v.outgoing as i64,
                })
            }
        }
    }

    /// Degree of `q_i`: `s_i - s'_i`.
    pub fn q_degree(&self, i: usize) -> i64 {
        let v = self.vertex_ranks(i);
        v.incoming as i64 - v.outgoing as i64
    }

    /// `prod_i C(s_i, r_i)`.
    pub fn basis_count(&self) -> u128 {
        (1..=self.rho())
            .map(|i| binomial(self.incoming(i) as u128, self.rank(i) as u128))
            .product()
    }

    /// `sum_i r_i (s_i - r_i)`.
    pub fn dimension(&self) -> usize {
        (1..=self.rho())
            .map(|i| self.rank(i) * (self.incoming(i) - self.rank(i)))
            .sum()
    }

    /// Whether all ranks are 1.
    pub fn is_toric(&self) -> bool {
        self.dims().iter().all(|&d| d == 1)
    }

    pub fn abelianize(&self) -> AbelianizedQuiver {
        let mut vertices = vec![AbVertex { vertex: 0, copy: 1 }];
        for i in 1..=self.rho() {
            vertices.extend((1..=self.rank(i)).map(|copy| AbVertex { vertex: i, copy }));
        }
        let mut arrows = Vec::new();
        for (i, j, m) in self.arrow_triples() {
            for to_copy in 1..=self.rank(j) {
                for from_copy in 1..=self.rank(i) {
                    for label in 0..m {
                        arrows.push(AbArrow {
                            from: AbVertex { vertex: i, copy: from_copy },
                            to: AbVertex { vertex: j, copy: to_copy },
                            label,
                        });
                    }
                }
            }
        }
        arrows.sort();
        AbelianizedQuiver { vertices, arrows }
    }
}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Quiver")
            .field("dims", &self.dims())
            .field("arrows", &self.arrow_triples())
            .finish()
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Vertex `(i, j)` of the abelianized quiver; the source is `(0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbVertex {
    pub vertex: usize,
    pub copy: usize,
}

impl fmt::Display for AbVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.vertex, self.copy)
    }
}

/// One arrow of the abelianized quiver. `label` distinguishes parallel
/// arrows coming from the same arrow multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbArrow {
    pub to: AbVertex,
    pub from: AbVertex,
    pub label: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianizedQuiver {
    vertices: Vec<AbVertex>,
    arrows: Vec<AbArrow>,
}

impl AbelianizedQuiver {
    /// All vertices, source first.
    pub fn vertices(&self) -> &[AbVertex] {
        &self.vertices
    }

    /// All arrows, sorted by target then source.
    pub fn arrows(&self) -> &[AbArrow] {
        &self.arrows
    }

    pub fn arrows_into(&self, v: AbVertex) -> impl Iterator<Item = &AbArrow> {
        self.arrows.iter().filter(move |a| a.to == v)
    }

    pub fn arrows_out_of(&self, v: AbVertex) -> impl Iterator<Item = &AbArrow> {
        self.arrows.iter().filter(move |a| a.from == v)
    }

    /// Number of arrows between two vertices.
    pub fn arrow_count(&self, from: AbVertex, to: AbVertex) -> usize {
        self.arrows.iter().filter(|a| a.from == from && a.to == to).count()
    }

    /// Incoming rank; every vertex has rank 1, so this counts arrows.
    pub fn incoming_rank(&self, v: AbVertex) -> usize {
        self.arrows_into(v).count()
    }
}
