//! Cross-checks `classify_pair` on random triangle pairs against a clipping oracle.
//!
//! The oracle computes the closed intersection `I = P ∩ Q` by half-space clipping, then uses the
//! fact that for convex sets the relative interiors meet iff the relative interior of `I` lies in
//! both. Locations come from barycentric signs, independent of the classifier's ray casting.

use polycontact::geom::{classify_pair, PairKind, Point3, Polygon3, Scalar, ViolationReason, Q};
use proptest::prelude::*;

type P = Point3<Q>;

fn pt(c: (i64, i64, i64)) -> P {
    Point3::from_i64(c.0, c.1, c.2)
}

fn dedup(v: Vec<P>) -> Vec<P> {
    let mut out: Vec<P> = Vec::new();
    for p in v {
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Keeps the part of a convex point loop with `n·x <= d`.
fn clip(poly: &[P], n: &P, d: &Q) -> Vec<P> {
    let k = poly.len();
    if k == 1 {
        return if n.dot(&poly[0]) <= *d { poly.to_vec() } else { Vec::new() };
    }
    let mut out = Vec::new();
    for i in 0..k {
        let (a, b) = (&poly[i], &poly[(i + 1) % k]);
        let (da, db) = (n.dot(a) - d.clone(), n.dot(b) - d.clone());
        let zero = Q::zero();
        if da <= zero {
            out.push(a.clone());
        }
        if (da < zero && db > zero) || (da > zero && db < zero) {
            let t = da.clone() / (da - db);
            out.push(a.lerp(b, &t));
        }
    }
    dedup(out)
}

fn normal(t: &[P; 3]) -> P {
    t[1].sub(&t[0]).cross(&t[2].sub(&t[0]))
}

fn intersect(p: &[P; 3], q: &[P; 3]) -> Vec<P> {
    let nq = normal(q);
    let dq = nq.dot(&q[0]);
    let mut cur = clip(p, &nq, &dq);
    cur = clip(&cur, &nq.scale(&-Q::one()), &-dq);
    for i in 0..3 {
        let (a, b, c) = (&q[i], &q[(i + 1) % 3], &q[(i + 2) % 3]);
        let mut m = nq.cross(&b.sub(a));
        if m.dot(&c.sub(a)) > Q::zero() {
            m = m.scale(&-Q::one());
        }
        // Inside of Q is m·x <= m·a.
        let d = m.dot(a);
        cur = clip(&cur, &m, &d);
        if cur.is_empty() {
            break;
        }
    }
    cur
}

#[derive(Debug, PartialEq, Clone, Copy)]
enum L {
    Out,
    Corner,
    Edge,
    In,
}

fn bary(t: &[P; 3], x: &P) -> L {
    let n = normal(t);
    if n.dot(&x.sub(&t[0])) != Q::zero() {
        return L::Out;
    }
    let lam: Vec<i8> = (0..3).map(|i| n.dot(&t[(i + 1) % 3].sub(x).cross(&t[(i + 2) % 3].sub(x))).sign(0.0)).collect();
    if lam.iter().any(|&s| s < 0) {
        return L::Out;
    }
    match lam.iter().filter(|&&s| s == 0).count() {
        0 => L::In,
        1 => L::Edge,
        _ => L::Corner,
    }
}

fn oracle(p: &[P; 3], q: &[P; 3]) -> (PairKind, Option<ViolationReason>) {
    let i1 = intersect(p, q);
    let i2 = intersect(q, p);
    assert_eq!(i1.is_empty(), i2.is_empty(), "oracle clipping asymmetric");
    if i1.is_empty() {
        return (PairKind::Disjoint, None);
    }
    let mut c = Point3::origin();
    for x in &i1 {
        c = c.add(x);
    }
    let c = c.scale(&Q::from_ratio(1, i1.len() as i64));
    if bary(p, &c) == L::In && bary(q, &c) == L::In {
        return (PairKind::Violation, Some(ViolationReason::InteriorOverlap));
    }
    let corner_locs: Vec<L> = p.iter().map(|x| bary(q, x)).chain(q.iter().map(|x| bary(p, x))).collect();
    if corner_locs.contains(&L::In) {
        return (PairKind::Violation, Some(ViolationReason::CornerInsideOther));
    }
    let corner_on_edge = p.iter().any(|x| bary(q, x) == L::Edge) || q.iter().any(|x| bary(p, x) == L::Edge);
    if corner_on_edge {
        return (PairKind::Violation, Some(ViolationReason::CornerOnEdge));
    }
    let mut probes = i1.clone();
    probes.push(c);
    for k in 0..i1.len() {
        probes.push(i1[k].midpoint(&i1[(k + 1) % i1.len()]));
    }
    let mut touch = false;
    let mut contact = false;
    for x in &probes {
        match (bary(p, x), bary(q, x)) {
            (L::Edge, L::Edge) => touch = true,
            (L::Corner, L::Corner) => contact = true,
            _ => {}
        }
    }
    if touch {
        (PairKind::BoundaryTouch, None)
    } else if contact {
        (PairKind::CornerContact, None)
    } else {
        (PairKind::Disjoint, None)
    }
}

fn coord() -> impl Strategy<Value = i64> {
    -2i64..=2
}

fn corner() -> impl Strategy<Value = (i64, i64, i64)> {
    (coord(), coord(), coord())
}

fn tri_pair() -> impl Strategy<Value = ([P; 3], [P; 3])> {
    (prop::array::uniform3(corner()), prop::array::uniform3(corner()), 0u8..4).prop_filter_map("degenerate triangle", |(a, b, mode)| {
        let mut p = a.map(pt);
        let mut q = b.map(pt);
        match mode {
            // Shared corner.
            1 => q[0] = p[0].clone(),
            // Coplanar in z = 0.
            2 => {
                for x in p.iter_mut().chain(q.iter_mut()) {
                    x.z = Q::zero();
                }
            }
            // Shared edge.
            3 => {
                q[0] = p[0].clone();
                q[1] = p[1].clone();
            }
            _ => {}
        }
        if normal(&p).is_zero(0.0) || normal(&q).is_zero(0.0) {
            None
        } else {
            Some((p, q))
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn classifier_matches_clipping_oracle((p, q) in tri_pair()) {
        let got = classify_pair(&Polygon3::new(p.to_vec()), &Polygon3::new(q.to_vec()), 0.0);
        let want = oracle(&p, &q);
        prop_assert_eq!((got.kind, got.reason()), want, "p={:?} q={:?}", p, q);
    }

    #[test]
    fn classification_is_symmetric((p, q) in tri_pair()) {
        let a = classify_pair(&Polygon3::new(p.to_vec()), &Polygon3::new(q.to_vec()), 0.0);
        let b = classify_pair(&Polygon3::new(q.to_vec()), &Polygon3::new(p.to_vec()), 0.0);
        prop_assert_eq!(a.kind, b.kind);
        prop_assert_eq!(a.reasons, b.reasons);
    }

    #[test]
    fn corner_contact_witnesses_are_common_corners((p, q) in tri_pair()) {
        let r = classify_pair(&Polygon3::new(p.to_vec()), &Polygon3::new(q.to_vec()), 0.0);
        if r.kind == PairKind::CornerContact {
            for w in &r.witnesses {
                prop_assert!(p.contains(w) && q.contains(w));
            }
        }
        if r.kind == PairKind::Violation {
            prop_assert!(!r.witnesses.is_empty());
        }
    }
}
