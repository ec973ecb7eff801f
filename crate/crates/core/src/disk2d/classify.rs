use std::cmp::Ordering;

use serde::Serialize;

use super::geometry::{cmp_dist, parts_meet, Part};
use super::{nine_matrix, Config, DiskRegion, NineMatrix, Polarity};
use crate::relalg::{BaseRel, RelSet};

/// Relation between two regions given their polarities and circle
/// configuration.
pub fn lookup(pa: Polarity, pb: Polarity, c: Config) -> BaseRel {
    use BaseRel::*;
    use Config::*;
    use Polarity::*;
    match (pa, pb) {
        (Disk, Disk) => match c {
            Separate => Dc,
            External => Ecn,
            Crossing => Pon,
            InnerTangentIn => Tpp,
            InnerTangentOut => Tppi,
            Same => Eq,
            NestedIn => Ntpp,
            NestedOut => Ntppi,
        },
        (Disk, Codisk) => match c {
            Separate => Ntpp,
            External => Tpp,
            Crossing => Pon,
            InnerTangentIn => Ecn,
            InnerTangentOut => Pody,
            Same => Ecd,
            NestedIn => Dc,
            NestedOut => Podz,
        },
        (Codisk, Disk) => match c {
            Separate => Ntppi,
            External => Tppi,
            Crossing => Pon,
            InnerTangentIn => Pody,
            InnerTangentOut => Ecn,
            Same => Ecd,
            NestedIn => Podz,
            NestedOut => Dc,
        },
        (Codisk, Codisk) => match c {
            Separate => Podz,
            External => Pody,
            Crossing => Pon,
            InnerTangentIn => Tppi,
            InnerTangentOut => Tpp,
            Same => Eq,
            NestedIn => Ntppi,
            NestedOut => Ntpp,
        },
    }
}

/// The RCC11 relation between `a` and `b`.
pub fn classify(a: &DiskRegion, b: &DiskRegion) -> BaseRel {
    lookup(a.polarity, b.polarity, Config::of(a, b))
}

/// The reference nine-intersection matrix of each relation.
pub fn relation_matrix(r: BaseRel) -> NineMatrix {
    let bits = match r {
        BaseRel::Eq => "100010001",
        BaseRel::Tpp => "100110111",
        BaseRel::Tppi => "111011001",
        BaseRel::Ntpp => "100100111",
        BaseRel::Ntppi => "111001001",
        BaseRel::Pon => "111111111",
        BaseRel::Pody => "111110100",
        BaseRel::Podz => "111100100",
        BaseRel::Ecn => "001011111",
        BaseRel::Ecd => "001010100",
        BaseRel::Dc => "001001111",
    };
    NineMatrix::from_bits(bits).expect("nine bits")
}

/// The relation whose reference matrix equals the computed one.
pub fn classify_by_matrix(a: &DiskRegion, b: &DiskRegion) -> Option<BaseRel> {
    let m = nine_matrix(a, b);
    BaseRel::ALL.into_iter().find(|&r| relation_matrix(r) == m)
}

struct SetFacts {
    equal: bool,
    a_in_b: bool,
    b_in_a: bool,
    interiors_meet: bool,
    closed_meet: bool,
    boundaries_meet: bool,
    union_is_plane: bool,
}

fn set_facts(a: &DiskRegion, b: &DiskRegion) -> SetFacts {
    use Polarity::*;
    let d2 = a.center_dist2(b);
    let (ra, rb) = (&a.r, &b.r);
    let le = |x: super::Rational| cmp_dist(&d2, &x) != Ordering::Greater;
    let ge = |x: super::Rational| cmp_dist(&d2, &x) != Ordering::Less;
    let subset = |p: Polarity, q: Polarity, rp: &super::Rational, rq: &super::Rational| match (p, q)
    {
        (Disk, Disk) => le(rq - rp),
        (Disk, Codisk) => ge(rp + rq),
        (Codisk, Disk) => false,
        (Codisk, Codisk) => le(rp - rq),
    };
    let (pa, pb) = (a.polarity, b.polarity);
    let interiors_meet = match (pa, pb) {
        (Disk, Disk) => !ge(ra + rb),
        (Disk, Codisk) => !le(rb - ra),
        (Codisk, Disk) => !le(ra - rb),
        (Codisk, Codisk) => true,
    };
    let closed_meet = match (pa, pb) {
        (Disk, Disk) => le(ra + rb),
        (Disk, Codisk) => ge(rb - ra),
        (Codisk, Disk) => ge(ra - rb),
        (Codisk, Codisk) => true,
    };
    let union_is_plane = match (pa, pb) {
        (Disk, Disk) => false,
        (Disk, Codisk) => le(ra - rb),
        (Codisk, Disk) => le(rb - ra),
        (Codisk, Codisk) => ge(ra + rb),
    };
    SetFacts {
        equal: a == b,
        a_in_b: subset(pa, pb, ra, rb),
        b_in_a: subset(pb, pa, rb, ra),
        interiors_meet,
        closed_meet,
        boundaries_meet: parts_meet(Part::Circle, Part::Circle, &d2, ra, rb),
        union_is_plane,
    }
}

/// Every relation whose set-theoretic characterization holds; a singleton
/// on well-formed input.
pub fn clause_matches(a: &DiskRegion, b: &DiskRegion) -> RelSet {
    let f = set_facts(a, b);
    let mut out = RelSet::EMPTY;
    let mut put = |r, holds: bool| {
        if holds {
            out.insert(r);
        }
    };
    use BaseRel::*;
    put(Eq, f.equal);
    put(Tpp, f.a_in_b && !f.equal && f.boundaries_meet);
    put(Tppi, f.b_in_a && !f.equal && f.boundaries_meet);
    put(Ntpp, f.a_in_b && !f.equal && !f.boundaries_meet);
    put(Ntppi, f.b_in_a && !f.equal && !f.boundaries_meet);
    put(
        Pon,
        f.interiors_meet && !f.a_in_b && !f.b_in_a && !f.union_is_plane,
    );
    put(
        Pody,
        f.interiors_meet && f.boundaries_meet && f.union_is_plane,
    );
    put(
        Podz,
        f.interiors_meet && !f.boundaries_meet && f.union_is_plane,
    );
    put(Ecn, !f.interiors_meet && f.closed_meet && !f.union_is_plane);
    put(Ecd, !f.interiors_meet && f.closed_meet && f.union_is_plane);
    put(Dc, !f.closed_meet);
    out
}

/// Classification from the set-theoretic characterization alone.
pub fn classify_by_clauses(a: &DiskRegion, b: &DiskRegion) -> Option<BaseRel> {
    clause_matches(a, b).as_single()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub a: String,
    pub b: String,
    pub lookup: BaseRel,
    pub clauses: RelSet,
    pub matrix: NineMatrix,
}

/// Classifies by the configuration lookup and checks it against both the
/// clause route and the matrix route.
pub fn classify_checked(a: &DiskRegion, b: &DiskRegion) -> Result<BaseRel, Box<Disagreement>> {
    let r = classify(a, b);
    let clauses = clause_matches(a, b);
    let m = nine_matrix(a, b);
    if clauses == RelSet::singleton(r) && relation_matrix(r) == m {
        Ok(r)
    } else {
        Err(Box::new(Disagreement {
            a: a.to_string(),
            b: b.to_string(),
            lookup: r,
            clauses,
            matrix: m,
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk2d::{rat, ratio, Rational};
    use BaseRel::*;

    fn d(cx: i64, cy: i64, r: i64) -> DiskRegion {
        DiskRegion::disk(cx, cy, r)
    }

    #[test]
    fn reference_matrices_are_distinct() {
        let ms: std::collections::HashSet<_> =
            BaseRel::ALL.iter().map(|&r| relation_matrix(r)).collect();
        assert_eq!(ms.len(), 11);
        for r in BaseRel::ALL {
            assert_eq!(
                relation_matrix(r).transpose(),
                relation_matrix(r.converse())
            );
            // exteriors are disjoint exactly when the union is the plane
            let outside = relation_matrix(r).0[2][2];
            assert_eq!(!outside, matches!(r, Pody | Podz | Ecd), "{r}");
        }
    }

    #[test]
    fn examples() {
        assert_eq!(classify(&d(0, 0, 1), &d(3, 0, 1)), Dc);
        assert_eq!(classify(&d(0, 0, 1), &d(1, 0, 2)), Tpp);
        assert_eq!(classify(&d(0, 0, 2), &DiskRegion::codisk(1, 0, 1)), Pody);
        let a = d(2, -1, 3);
        assert_eq!(classify(&a, &a.complement()), Ecd);
    }

    #[test]
    fn lookup_is_exhaustive_and_respects_laws() {
        use Polarity::*;
        for c in Config::ALL {
            for pa in [Disk, Codisk] {
                for pb in [Disk, Codisk] {
                    let r = lookup(pa, pb, c);
                    assert_eq!(lookup(pb, pa, c.swap()), r.converse());
                    assert_eq!(lookup(pa, pb.flip(), c), r.right_dual());
                    assert_eq!(lookup(pa.flip(), pb, c), r.left_dual());
                }
            }
        }
        // a complement disk is never part of a closed disk
        for c in Config::ALL {
            let r = lookup(Codisk, Disk, c);
            assert!(!matches!(r, Eq | Tpp | Ntpp));
        }
    }

    /// One representative per (polarity pair, configuration), built from
    /// small radii on the x-axis.
    fn representatives() -> Vec<(DiskRegion, DiskRegion)> {
        let mut out = Vec::new();
        let shapes: [(i64, i64, Rational); 8] = [
            (1, 1, rat(3)),
            (1, 1, rat(2)),
            (1, 1, rat(1)),
            (1, 2, rat(1)),
            (2, 1, rat(1)),
            (1, 1, rat(0)),
            (1, 3, ratio(1, 2)),
            (3, 1, ratio(1, 2)),
        ];
        for (ra, rb, dist) in shapes {
            for pa in [Polarity::Disk, Polarity::Codisk] {
                for pb in [Polarity::Disk, Polarity::Codisk] {
                    let a = DiskRegion::new(pa, rat(0), rat(0), rat(ra)).unwrap();
                    let b = DiskRegion::new(pb, dist.clone(), rat(0), rat(rb)).unwrap();
                    out.push((a, b));
                }
            }
        }
        out
    }

    #[test]
    fn three_routes_agree_on_every_case() {
        let reps = representatives();
        let configs: std::collections::HashSet<_> =
            reps.iter().map(|(a, b)| Config::of(a, b)).collect();
        assert_eq!(configs.len(), 8);
        for (a, b) in &reps {
            let r = classify_checked(a, b).unwrap();
            assert_eq!(classify_by_clauses(a, b), Some(r));
            assert_eq!(classify_by_matrix(a, b), Some(r));
        }
        let rels: RelSet = reps.iter().map(|(a, b)| classify(a, b)).collect();
        assert_eq!(rels, RelSet::FULL);
    }
}
