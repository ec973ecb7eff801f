//! Classification of region pairs in any orthocomplemented lattice carrying a
//! compatible contact relation. Both the dyadic model and the interval model
//! plug in through [`ContactAlgebra`].

use thiserror::Error;

use crate::relalg::{BaseRel, RelSet};

pub trait ContactAlgebra {
    type Region: Clone + PartialEq;

    fn meet(&self, a: &Self::Region, b: &Self::Region) -> Self::Region;
    fn join(&self, a: &Self::Region, b: &Self::Region) -> Self::Region;
    fn complement(&self, a: &Self::Region) -> Self::Region;
    fn is_zero(&self, a: &Self::Region) -> bool;
    fn is_one(&self, a: &Self::Region) -> bool;
    fn contact(&self, a: &Self::Region, b: &Self::Region) -> bool;

    fn le(&self, a: &Self::Region, b: &Self::Region) -> bool {
        self.meet(a, b) == *a
    }

    fn lt(&self, a: &Self::Region, b: &Self::Region) -> bool {
        a != b && self.le(a, b)
    }

    fn overlaps(&self, a: &Self::Region, b: &Self::Region) -> bool {
        !self.is_zero(&self.meet(a, b))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("region is the zero or unit element")]
    Degenerate,
    #[error("characterizations select {0:?}, expected exactly one relation")]
    NotExclusive(RelSet),
}

/// Every base relation whose characterization holds for `(x, y)`.
pub fn matching<A: ContactAlgebra>(alg: &A, x: &A::Region, y: &A::Region) -> RelSet {
    let xc = alg.complement(x);
    let yc = alg.complement(y);
    let c = |a: &A::Region, b: &A::Region| alg.contact(a, b);
    let mut out = RelSet::EMPTY;
    let mut put = |r: BaseRel, holds: bool| {
        if holds {
            out.insert(r);
        }
    };
    put(BaseRel::Eq, x == y);
    put(BaseRel::Tpp, alg.lt(x, y) && c(x, &yc));
    put(BaseRel::Ntpp, alg.lt(x, y) && !c(x, &yc));
    put(BaseRel::Tppi, alg.lt(y, x) && c(y, &xc));
    put(BaseRel::Ntppi, alg.lt(y, x) && !c(y, &xc));
    put(
        BaseRel::Pon,
        alg.overlaps(x, y)
            && !alg.is_one(&alg.join(x, y))
            && alg.overlaps(x, &yc)
            && alg.overlaps(&xc, y),
    );
    put(BaseRel::Pody, alg.lt(&yc, x) && c(&xc, &yc));
    put(BaseRel::Podz, alg.lt(&yc, x) && !c(&xc, &yc));
    put(BaseRel::Ecn, alg.lt(x, &yc) && c(x, y));
    put(BaseRel::Ecd, *x == yc);
    put(BaseRel::Dc, !c(x, y));
    out
}

/// The unique base relation between two regions of `U = L \ {0, 1}`.
pub fn classify<A: ContactAlgebra>(
    alg: &A,
    x: &A::Region,
    y: &A::Region,
) -> Result<BaseRel, ClassifyError> {
    for r in [x, y] {
        if alg.is_zero(r) || alg.is_one(r) {
            return Err(ClassifyError::Degenerate);
        }
    }
    let m = matching(alg, x, y);
    m.as_single().ok_or(ClassifyError::NotExclusive(m))
}
