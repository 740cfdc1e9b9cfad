use super::scalar::{Scalar, Q};

/// Point or vector in 3D.
#[derive(Debug, Clone, PartialEq)]
pub struct Point3<S> {
    pub x: S,
    pub y: S,
    pub z: S,
}

impl<S: Scalar> Point3<S> {
    pub fn new(x: S, y: S, z: S) -> Self {
        Self { x, y, z }
    }

    pub fn origin() -> Self {
        Self::new(S::zero(), S::zero(), S::zero())
    }

    pub fn from_i64(x: i64, y: i64, z: i64) -> Self {
        Self::new(S::from_i64(x), S::from_i64(y), S::from_i64(z))
    }

    pub fn coord(&self, axis: usize) -> &S {
        match axis {
            0 => &self.x,
            1 => &self.y,
            _ => &self.z,
        }
    }

    pub fn coords(&self) -> [&S; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.x.clone() + o.x.clone(), self.y.clone() + o.y.clone(), self.z.clone() + o.z.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.x.clone() - o.x.clone(), self.y.clone() - o.y.clone(), self.z.clone() - o.z.clone())
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(self.x.clone() * s.clone(), self.y.clone() * s.clone(), self.z.clone() * s.clone())
    }

    pub fn dot(&self, o: &Self) -> S {
        self.x.clone() * o.x.clone() + self.y.clone() * o.y.clone() + self.z.clone() * o.z.clone()
    }

    pub fn cross(&self, o: &Self) -> Self {
        Self::new(
            self.y.clone() * o.z.clone() - self.z.clone() * o.y.clone(),
            self.z.clone() * o.x.clone() - self.x.clone() * o.z.clone(),
            self.x.clone() * o.y.clone() - self.y.clone() * o.x.clone(),
        )
    }

    pub fn norm2(&self) -> S {
        self.dot(self)
    }

    /// `self + t (o - self)`.
    pub fn lerp(&self, o: &Self, t: &S) -> Self {
        self.add(&o.sub(self).scale(t))
    }

    pub fn midpoint(&self, o: &Self) -> Self {
        self.lerp(o, &S::from_ratio(1, 2))
    }

    pub fn is_zero(&self, eps: f64) -> bool {
        self.x.sign(eps) == 0 && self.y.sign(eps) == 0 && self.z.sign(eps) == 0
    }

    /// Coordinate-wise equality up to `eps` (exact for rationals).
    pub fn same(&self, o: &Self, eps: f64) -> bool {
        if S::EXACT {
            return self == o;
        }
        self.sub(o).is_zero(eps)
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [self.x.to_f64(), self.y.to_f64(), self.z.to_f64()]
    }

    /// 2D coordinates after dropping `axis`.
    pub fn project(&self, axis: usize) -> (S, S) {
        match axis {
            0 => (self.y.clone(), self.z.clone()),
            1 => (self.z.clone(), self.x.clone()),
            _ => (self.x.clone(), self.y.clone()),
        }
    }
}

impl Point3<Q> {
    pub fn to_float(&self) -> Point3<f64> {
        let [x, y, z] = self.to_f64();
        Point3::new(x, y, z)
    }
}

impl Point3<f64> {
    pub fn dist(&self, o: &Self) -> f64 {
        self.sub(o).norm2().sqrt()
    }
}

/// Sign of `det(b - a, c - a, d - a)`.
pub fn orient3d<S: Scalar>(a: &Point3<S>, b: &Point3<S>, c: &Point3<S>, d: &Point3<S>, eps: f64) -> i8 {
    let u = b.sub(a);
    let v = c.sub(a);
    let w = d.sub(a);
    u.dot(&v.cross(&w)).sign(eps)
}

/// Sign of the 2D cross product `(b - a) × (c - a)`.
pub fn orient2d<S: Scalar>(a: &(S, S), b: &(S, S), c: &(S, S), eps: f64) -> i8 {
    let det = (b.0.clone() - a.0.clone()) * (c.1.clone() - a.1.clone()) - (b.1.clone() - a.1.clone()) * (c.0.clone() - a.0.clone());
    det.sign(eps)
}

/// True when `a`, `b`, `c` lie on a common line.
pub fn collinear<S: Scalar>(a: &Point3<S>, b: &Point3<S>, c: &Point3<S>, eps: f64) -> bool {
    b.sub(a).cross(&c.sub(a)).is_zero(eps)
}

/// Index of the coordinate with the largest absolute value.
pub fn dominant_axis<S: Scalar>(n: &Point3<S>) -> usize {
    let ax = n.x.abs();
    let ay = n.y.abs();
    let az = n.z.abs();
    if (ax.clone() - az.clone()).sign(0.0) > 0 && (ax.clone() - ay.clone()).sign(0.0) >= 0 {
        0
    } else if (ay - az).sign(0.0) > 0 {
        1
    } else {
        2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::scalar::qi;

    fn p(x: i64, y: i64, z: i64) -> Point3<Q> {
        Point3::new(qi(x), qi(y), qi(z))
    }

    #[test]
    fn unit_tetrahedron_is_positive() {
        assert_eq!(orient3d(&p(0, 0, 0), &p(1, 0, 0), &p(0, 1, 0), &p(0, 0, 1), 0.0), 1);
    }

    #[test]
    fn coplanar_is_zero() {
        assert_eq!(orient3d(&p(0, 0, 0), &p(1, 0, 0), &p(0, 1, 0), &p(5, -3, 0), 0.0), 0);
    }

    #[test]
    fn swap_flips_sign() {
        let (a, b, c, d) = (p(0, 0, 0), p(1, 0, 0), p(0, 1, 0), p(0, 0, 1));
        assert_eq!(orient3d(&a, &c, &b, &d, 0.0), -1);
        assert_eq!(orient3d(&b, &a, &c, &d, 0.0), -1);
    }

    #[test]
    fn dominant_axis_picks_largest() {
        assert_eq!(dominant_axis(&p(0, 0, 1)), 2);
        assert_eq!(dominant_axis(&p(-3, 1, 1)), 0);
        assert_eq!(dominant_axis(&p(1, -4, 2)), 1);
    }
}
