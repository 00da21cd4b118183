//! Per-algebra data shared by the complexes over `k[g x g]`.

use std::sync::OnceLock;

use crate::charmod::EpsBasis;
use crate::error::Result;
use crate::exact::{MPoly, Universe};
use crate::invariants::{invariant_generators, GVector, PolFamily};
use crate::lie::{build_simple, LieAlgebra, Series};

use super::exterior::{top_wedge, PolyMultivector};

/// An algebra with its invariants, the maps `eps_i^(m)`, and lazily computed
/// top wedge and commutator pairings.
#[derive(Debug)]
pub struct AlgebraContext {
    pub alg: LieAlgebra,
    pub fam: PolFamily,
    pub eps: EpsBasis,
    top: OnceLock<PolyMultivector>,
    pairings: OnceLock<Vec<MPoly>>,
}

impl AlgebraContext {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        Self::from_algebra(build_simple(series, rank)?)
    }

    pub fn from_algebra(alg: LieAlgebra) -> Result<Self> {
        let fam = invariant_generators(&alg)?;
        let eps = EpsBasis::new(&alg, &fam)?;
        Ok(AlgebraContext { alg, fam, eps, top: OnceLock::new(), pairings: OnceLock::new() })
    }

    pub fn universe(&self) -> Universe {
        Universe::bigraded(self.alg.dim())
    }

    /// `eps = ^_{(i,m) in I_0} eps_i^(m)`, a `b_g`-multivector.
    pub fn top_wedge(&self) -> &PolyMultivector {
        self.top.get_or_init(|| top_wedge(self.universe(), &self.eps.maps))
    }

    /// `<e_v, [x, y]>` for every basis index `v`, in basis order.
    pub fn pairings(&self) -> &[MPoly] {
        self.pairings.get_or_init(|| {
            let u = self.universe();
            let xy = GVector::tautological_x(u).bracket(&self.alg, &GVector::tautological_y(u));
            (0..self.alg.dim()).map(|v| xy.pair_const(&self.alg, &self.alg.basis_vector(v))).collect()
        })
    }
}
