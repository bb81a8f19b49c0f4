//! Edge and vertex ideals as explicit generator sets, with exact graded dimensions.

mod closed;
mod construct;

use std::collections::HashMap;
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

pub use closed::{
    dim_edge_ideal_boundary_closed, dim_edge_ideal_closed, dim_vertex_star_ideal_closed,
    vertex_socle_params, SocleParams,
};
pub use construct::{edge_ideal, point_power_ideal, vertex_ideal, EdgeIdealSpec, VertexIdealKind};

use crate::error::{Error, Result};
use crate::polyring::{graded_monomial_basis, monomial_count, HomogeneousPolynomial};
use crate::ratlinalg::{integer_row, EchelonBasis, RatMatrix};

/// Homogeneous ideal given by generators, with a per-degree dimension cache.
#[derive(Debug)]
pub struct GradedIdeal {
    generators: Vec<HomogeneousPolynomial>,
    dims: RwLock<HashMap<u32, usize>>,
}

impl Clone for GradedIdeal {
    fn clone(&self) -> Self {
        GradedIdeal {
            generators: self.generators.clone(),
            dims: RwLock::new(self.dims.read().expect("cache lock").clone()),
        }
    }
}

impl PartialEq for GradedIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl GradedIdeal {
    pub fn new(generators: Vec<HomogeneousPolynomial>) -> Result<Self> {
        if generators.iter().any(|g| g.is_zero()) {
            return Err(Error::InvalidArgument("zero generator".into()));
        }
        Ok(GradedIdeal {
            generators,
            dims: RwLock::new(HashMap::new()),
        })
    }

    pub fn zero() -> Self {
        GradedIdeal {
            generators: Vec::new(),
            dims: RwLock::new(HashMap::new()),
        }
    }

    pub fn generators(&self) -> &[HomogeneousPolynomial] {
        &self.generators
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.generators.iter().map(|g| g.degree()).min()
    }

    /// Ideal generated by the union of both generator lists.
    pub fn sum(&self, other: &GradedIdeal) -> GradedIdeal {
        let mut generators = self.generators.clone();
        for g in &other.generators {
            if !generators.contains(g) {
                generators.push(g.clone());
            }
        }
        GradedIdeal {
            generators,
            dims: RwLock::new(HashMap::new()),
        }
    }

    /// Echelon basis of the degree-`d` piece, in coordinates of `graded_monomial_basis(d)`.
    pub fn piece(&self, d: u32) -> EchelonBasis {
        let mut basis = EchelonBasis::new(monomial_count(d));
        for g in self.generators.iter().filter(|g| g.degree() <= d) {
            for mu in graded_monomial_basis(d - g.degree()) {
                basis.insert(integer_row(&g.mul_monomial(&mu).coefficient_vector()));
                if basis.rank() == basis.ncols() {
                    return basis;
                }
            }
        }
        basis
    }

    /// Degree-`d` piece as a matrix whose rows span it.
    pub fn piece_matrix(&self, d: u32) -> RatMatrix {
        let rows = self
            .piece(d)
            .rows()
            .map(|r| r.iter().map(|(c, v)| (*c, v.clone().into())).collect())
            .collect();
        RatMatrix::from_sparse_rows(monomial_count(d), rows)
    }

    pub fn graded_dim(&self, d: u32) -> usize {
        if self.min_degree().is_none_or(|m| m > d) {
            return 0;
        }
        if let Some(&n) = self.dims.read().expect("cache lock").get(&d) {
            return n;
        }
        let n = self.piece(d).rank();
        self.dims.write().expect("cache lock").insert(d, n);
        n
    }

    pub fn contains(&self, p: &HomogeneousPolynomial) -> bool {
        p.is_zero() || self.piece(p.degree()).contains(integer_row(&p.coefficient_vector()))
    }
}

#[derive(Serialize, Deserialize)]
struct IdealDoc {
    generators: Vec<HomogeneousPolynomial>,
}

impl Serialize for GradedIdeal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        IdealDoc {
            generators: self.generators.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GradedIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = IdealDoc::deserialize(deserializer)?;
        GradedIdeal::new(doc.generators).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Monomial3;
    use crate::ratlinalg::Rational;

    pub(super) fn monomial_ideal(exps: &[[u32; 3]]) -> GradedIdeal {
        GradedIdeal::new(
            exps.iter()
                .map(|e| HomogeneousPolynomial::monomial(Monomial3::new(e[0], e[1], e[2]), Rational::one()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn graded_dim_examples() {
        let a = monomial_ideal(&[[3, 0, 0], [2, 1, 1]]);
        assert_eq!(a.graded_dim(5), 8);
        let b = monomial_ideal(&[[3, 0, 0], [2, 1, 0]]);
        assert_eq!(b.graded_dim(5), 9);
        assert_eq!(b.graded_dim(2), 0);
        assert_eq!(GradedIdeal::zero().graded_dim(4), 0);
    }

    #[test]
    fn monomial_ideals_count_divisible_monomials() {
        let gens = [[2, 0, 1], [0, 3, 0], [1, 1, 1]];
        let ideal = monomial_ideal(&gens);
        for d in 0..9 {
            let count = graded_monomial_basis(d)
                .iter()
                .filter(|m| gens.iter().any(|g| Monomial3::new(g[0], g[1], g[2]).divides(m)))
                .count();
            assert_eq!(ideal.graded_dim(d), count, "d={d}");
        }
    }

    #[test]
    fn graded_dim_is_monotone() {
        let ideal = monomial_ideal(&[[3, 0, 0], [0, 2, 2]]);
        for d in 0..10 {
            assert!(ideal.graded_dim(d) <= ideal.graded_dim(d + 1));
        }
    }

    #[test]
    fn cache_is_consistent_across_threads() {
        let ideal = monomial_ideal(&[[2, 0, 0], [0, 2, 0]]);
        let dims: Vec<usize> = std::thread::scope(|s| {
            let hs: Vec<_> = (0..4).map(|_| s.spawn(|| ideal.graded_dim(6))).collect();
            hs.into_iter().map(|h| h.join().unwrap()).collect()
        });
        assert!(dims.iter().all(|&n| n == dims[0]));
        assert_eq!(dims[0], 24);
    }

    #[test]
    fn json_round_trip() {
        let ideal = monomial_ideal(&[[3, 0, 0], [2, 1, 1]]);
        let text = serde_json::to_string(&ideal).unwrap();
        let back: GradedIdeal = serde_json::from_str(&text).unwrap();
        assert_eq!(back, ideal);
    }
}
