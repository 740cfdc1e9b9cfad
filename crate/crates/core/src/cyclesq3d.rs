//! Squares of cycles `C_n²` by quadrilaterals.
//!
//! For even `n` the contact points `P_{i,i+1}` form a regular `n`-gon with unit sides at `z = 0`
//! and the points `P_{i,i+2}` form two regular `n/2`-gons at `z = ±h`, odd `i` on top. Each
//! `Q_i` is the rectangle spanned by its middle edge and the ring edge above or below it. With
//! unit ring sides the inward offset between the two edges is `d = 1 / (2 sin(2π/n))`, so the
//! rectangles are unit squares exactly when `d < 1`, that is for `n ∈ {6, 8, 10}`. At `n = 12`
//! the squares would be flat and overlap, so from there on the rectangles have height `√(d² + 1)`.
//!
//! Odd `n` starts from `n - 1` and separates the contacts `T = P_{1,n-2}` and `B = P_{2,n-1}` into
//! the new quadrilateral `Q_n`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::error::{precondition, Error, Result};
use crate::geom::{convex_hull_planar, Point3};
use crate::graph::families;
use crate::scene::{Scene, Structure};

/// Largest fraction of the way from `T` (or `B`) toward the opposite diagonal of `Q_1` (or
/// `Q_{n-1}`) at which the moved contact may stop. Reaching the diagonal would flatten the corner.
pub const SPLIT_STOP: f64 = 0.99;

/// Bookkeeping of the odd-`n` vertex split.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleSplit {
    pub t: Point3<f64>,
    pub b: Point3<f64>,
    /// Unit normal of the split plane through `T` and `B`. For `n = 7` it also contains the centers
    /// of the two split quadrilaterals.
    pub plane_normal: Point3<f64>,
    /// New contact of `Q_1` with `Q_n`.
    pub p_first: Point3<f64>,
    /// New contact of `Q_{n-1}` with `Q_n`.
    pub p_last: Point3<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CycleSquareLayout {
    pub n: usize,
    /// Circumradius of the middle ring.
    pub middle_radius: f64,
    /// Circumradius of the top and bottom rings.
    pub ring_radius: f64,
    pub height: f64,
    pub unit_squares: bool,
    pub split: Option<CycleSplit>,
    /// Contact points keyed by the 1-based vertex pair `(i, j)`, `i < j`.
    pub points: BTreeMap<(usize, usize), Point3<f64>>,
}

fn key(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

fn even_layout(n: usize) -> CycleSquareLayout {
    let nf = n as f64;
    let middle_radius = 1.0 / (2.0 * (PI / nf).sin());
    let ring_radius = 1.0 / (2.0 * (2.0 * PI / nf).sin());
    // Apothem difference of the two rings.
    let d = 1.0 / (2.0 * (2.0 * PI / nf).sin());
    let unit_squares = d < 1.0 - 1e-12;
    let height = if unit_squares { (1.0 - d * d).sqrt() } else { 1.0 };
    let mut points = BTreeMap::new();
    let wrap = |i: usize| (i - 1) % n + 1;
    for i in 1..=n {
        let psi = 2.0 * PI * i as f64 / nf;
        points.insert(key(i, wrap(i + 1)), Point3::new(middle_radius * psi.cos(), middle_radius * psi.sin(), 0.0));
        let phi = psi + PI / nf;
        let z = if i % 2 == 1 { height } else { -height };
        points.insert(key(i, wrap(i + 2)), Point3::new(ring_radius * phi.cos(), ring_radius * phi.sin(), z));
    }
    CycleSquareLayout { n, middle_radius, ring_radius, height, unit_squares, split: None, points }
}

/// Contact-point layout for `C_n²`, `n ≥ 6`.
pub fn cycle_square_layout(n: usize) -> Result<CycleSquareLayout> {
    if n == 5 {
        return precondition("C_5² = K_5 has no construction here");
    }
    if n < 6 {
        return precondition(format!("squares of cycles need n >= 6, got {n}"));
    }
    if n.is_multiple_of(2) {
        return Ok(even_layout(n));
    }
    let m = n - 1;
    let mut layout = even_layout(m);
    let t = layout.points[&key(1, m - 1)].clone();
    let b = layout.points[&key(2, m)].clone();
    // The half-turn about the line through the origin and P_{1,m} swaps Q_1 with Q_m and T with
    // B. The plane through T and B perpendicular to that line is invariant under it.
    let axis = layout.points[&key(1, m)].clone();
    let normal = axis.scale(&(1.0 / axis.dot(&axis).sqrt()));
    if normal.dot(&t.sub(&b)).abs() > 1e-9 {
        return Err(Error::Construction("T and B are not symmetric".into()));
    }
    let p_first = slide(&layout, 1, &t, &b, &normal)?;
    let p_last = slide(&layout, m, &b, &t, &normal)?;
    layout.points.remove(&key(1, m - 1));
    layout.points.remove(&key(2, m));
    layout.points.insert(key(m - 1, n), t.clone());
    layout.points.insert(key(2, n), b.clone());
    layout.points.insert(key(1, n), p_first.clone());
    layout.points.insert(key(m, n), p_last.clone());
    layout.n = n;
    layout.split = Some(CycleSplit { t, b, plane_normal: normal, p_first, p_last });
    Ok(layout)
}

/// Moves corner `from` of `Q_v` inside the plane `normal`, toward the diagonal joining its two
/// neighbouring corners. The stop, at most [`SPLIT_STOP`] of the way, maximizes the shortest
/// edge touching the moved point; `other` is the opposite corner of the new quadrilateral.
fn slide(layout: &CycleSquareLayout, v: usize, from: &Point3<f64>, other: &Point3<f64>, normal: &Point3<f64>) -> Result<Point3<f64>> {
    let pts: Vec<Point3<f64>> = layout.points.iter().filter(|(k, _)| k.0 == v || k.1 == v).map(|(_, p)| p.clone()).collect();
    let q = convex_hull_planar(&pts, false, 1e-9)?;
    let k = q.corners.iter().position(|c| c.same(from, 1e-12)).expect("corner of Q_v");
    let (a, c) = (&q.corners[(k + 3) % 4], &q.corners[(k + 1) % 4]);
    let dir = normal.cross(&q.newell_normal());
    let e = c.sub(a);
    let de = dir.cross(&e);
    let den = de.dot(&de);
    if den < 1e-18 {
        return Err(Error::Construction(format!("split plane is parallel to the diagonal of Q_{v}")));
    }
    let u = a.sub(from).cross(&e).dot(&de) / den;
    let hit = from.add(&dir.scale(&u));
    let along = hit.sub(a).dot(&e) / e.dot(&e);
    if !(1e-6..=1.0 - 1e-6).contains(&along) {
        return Err(Error::Construction(format!("split line misses the diagonal of Q_{v}")));
    }
    let dist = |p: &Point3<f64>, q: &Point3<f64>| {
        let d = p.sub(q);
        d.dot(&d).sqrt()
    };
    let shortest = |s: f64| {
        let x = from.lerp(&hit, &s);
        [a, c, from, other].iter().map(|p| dist(&x, p)).fold(f64::MAX, f64::min)
    };
    let best =
        (50..=99).map(|k| (k as f64 / 100.0).min(SPLIT_STOP)).max_by(|&s, &t| shortest(s).total_cmp(&shortest(t))).expect("nonempty range");
    Ok(from.lerp(&hit, &best))
}

/// Float scene for `C_n²` on labels `1..=n`.
pub fn represent_cycle_square(n: usize) -> Result<Scene<f64>> {
    let layout = cycle_square_layout(n)?;
    let g = families::cycle_square(n);
    let name = if layout.unit_squares && n.is_multiple_of(2) { "cycle-square" } else { "cycle-square-rect" };
    let mut scene: Scene<f64> = Scene::new(Structure::Graph(g), if n % 2 == 1 { "cycle-square-split" } else { name });
    let eps = scene.meta.epsilon;
    for v in 1..=n {
        let pts: Vec<Point3<f64>> = layout.points.iter().filter(|(k, _)| k.0 == v || k.1 == v).map(|(_, p)| p.clone()).collect();
        let hull = convex_hull_planar(&pts, false, eps)?;
        if hull.len() != 4 {
            return Err(Error::Construction(format!("Q_{v} has {} corners", hull.len())));
        }
        scene.push_polygon(v.to_string(), hull);
    }
    scene.declare_graph_contacts()?;
    Ok(scene)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::polygon_properties;
    use crate::verify::verify_scene;

    fn dist(p: &Point3<f64>, q: &Point3<f64>) -> f64 {
        let d = p.sub(q);
        d.dot(&d).sqrt()
    }

    fn edges(s: &Scene<f64>) -> Vec<f64> {
        s.polygons
            .iter()
            .flat_map(|p| {
                let c = &p.polygon.corners;
                (0..c.len()).map(move |i| dist(&c[i], &c[(i + 1) % c.len()]))
            })
            .collect()
    }

    #[test]
    fn hexagon_height() {
        let l = cycle_square_layout(6).unwrap();
        assert!((l.height - (2.0f64 / 3.0).sqrt()).abs() < 1e-12);
        assert!((l.middle_radius - 1.0).abs() < 1e-12);
        assert!((l.ring_radius - 1.0 / 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn even_unit_squares() {
        for n in [6, 8, 10] {
            let s = represent_cycle_square(n).unwrap();
            let r = verify_scene(&s, 1e-9);
            assert!(r.pass, "n={n}: {}", r.to_text());
            assert_eq!(s.contacts.len(), 2 * n);
            for p in &s.polygons {
                let c = &p.polygon.corners;
                for i in 0..4 {
                    assert!((dist(&c[i], &c[(i + 1) % 4]) - 1.0).abs() < 1e-9);
                }
                assert!((dist(&c[0], &c[2]) - 2f64.sqrt()).abs() < 1e-9);
                assert!((dist(&c[1], &c[3]) - 2f64.sqrt()).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn twelve_cannot_use_unit_squares() {
        let l = cycle_square_layout(12).unwrap();
        assert!(!l.unit_squares);
        let s = represent_cycle_square(12).unwrap();
        assert!(verify_scene(&s, 1e-9).pass);
    }

    #[test]
    fn odd_split() {
        for n in [7, 9, 11, 13] {
            let s = represent_cycle_square(n).unwrap();
            let r = verify_scene(&s, 1e-9);
            assert!(r.pass, "n={n}: {}", r.to_text());
            assert_eq!(s.contacts.len(), 2 * n);
            for p in &s.polygons {
                assert!(polygon_properties(&p.polygon, 1e-9).strictly_convex);
            }
            let e = edges(&s);
            let (lo, hi) = e.iter().fold((f64::MAX, 0.0f64), |(a, b), &x| (a.min(x), b.max(x)));
            if n <= 11 {
                assert!(hi / lo <= 3.0, "n={n}: {lo} {hi}");
            }
            if n == 7 {
                assert!(hi < 2.0 && lo > 0.69, "n={n}: {lo} {hi}");
            }
        }
    }

    #[test]
    fn rejects_small() {
        assert!(represent_cycle_square(5).is_err());
        assert!(represent_cycle_square(4).is_err());
    }
}
