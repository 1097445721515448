//! Shapes, placements, regions and the geometric predicates of the
//! semantics: shape composition, occupancy, overlap, containment and random
//! translation.

use nalgebra::{UnitQuaternion, Vector3};
use rand::Rng;

/// Penetration depths at or below this tolerance do not count as overlap,
/// so tangent entities are legal neighbours.
pub const GEOM_EPSILON: f64 = 1e-9;

pub type Vec3 = Vector3<f64>;
pub type Quat = UnitQuaternion<f64>;

/// A shape: empty, a primitive, or a multiset of primitives obtained by
/// juxtaposition. Composite parts are kept sorted by a canonical key so the
/// composition operator is commutative and associative by construction.
#[derive(Clone, Debug, PartialEq)]
pub enum Shape {
    Empty,
    Sphere { radius: f64 },
    Box { half_extents: Vec3 },
    Composite(Vec<Shape>),
}

impl Shape {
    pub fn sphere(radius: f64) -> Self {
        Shape::Sphere { radius }
    }

    pub fn cuboid(hx: f64, hy: f64, hz: f64) -> Self {
        Shape::Box {
            half_extents: Vec3::new(hx, hy, hz),
        }
    }

    pub fn is_primitive(&self) -> bool {
        matches!(self, Shape::Sphere { .. } | Shape::Box { .. })
    }

    /// The primitive parts of this shape, in canonical order.
    pub fn parts(&self) -> Vec<Shape> {
        match self {
            Shape::Empty => Vec::new(),
            Shape::Composite(parts) => parts.clone(),
            prim => vec![prim.clone()],
        }
    }

    /// Extent along the local x axis, used by the juxtaposition layout.
    fn width(&self) -> f64 {
        match self {
            Shape::Empty | Shape::Composite(_) => 0.0,
            Shape::Sphere { radius } => 2.0 * radius,
            Shape::Box { half_extents } => 2.0 * half_extents.x,
        }
    }
}

fn key_bits(v: f64) -> u64 {
    // Normalize -0.0 so equal values sort equally.
    if v == 0.0 { 0.0f64 } else { v }.to_bits()
}

/// Total order on primitives; drives the deterministic composite layout.
pub(crate) fn primitive_key(s: &Shape) -> (u8, u64, u64, u64) {
    match s {
        Shape::Sphere { radius } => (0, key_bits(*radius), 0, 0),
        Shape::Box { half_extents } => (
            1,
            key_bits(half_extents.x),
            key_bits(half_extents.y),
            key_bits(half_extents.z),
        ),
        Shape::Empty | Shape::Composite(_) => (2, 0, 0, 0),
    }
}

/// Juxtaposition of two shapes: the multiset union of their primitive
/// parts. `Empty` is the neutral element.
pub fn compose_shapes(s1: &Shape, s2: &Shape) -> Shape {
    let mut parts = s1.parts();
    parts.extend(s2.parts());
    parts.sort_by_key(primitive_key);
    match parts.len() {
        0 => Shape::Empty,
        1 => parts.pop().unwrap(),
        _ => Shape::Composite(parts),
    }
}

/// Locates a shape in the global frame: barycentre at `origin`, rotated by
/// `orientation`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Placement {
    pub origin: Vec3,
    pub orientation: Quat,
}

impl Placement {
    pub fn at(origin: Vec3) -> Self {
        Placement {
            origin,
            orientation: Quat::identity(),
        }
    }

    pub fn identity() -> Self {
        Placement::at(Vec3::zeros())
    }
}

/// A set of global coordinates an entity may occupy.
#[derive(Clone, Debug, PartialEq)]
pub enum Region {
    All,
    Box { min: Vec3, max: Vec3 },
    Union(Vec<Region>),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlacedSphere {
    pub center: Vec3,
    pub radius: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlacedBox {
    pub center: Vec3,
    pub half_extents: Vec3,
    pub orientation: Quat,
}

impl PlacedBox {
    /// Per-axis extent of the axis-aligned bounding box.
    fn aabb_extent(&self) -> Vec3 {
        let r = self.orientation.to_rotation_matrix();
        let m = r.matrix();
        let h = self.half_extents;
        Vec3::new(
            m[(0, 0)].abs() * h.x + m[(0, 1)].abs() * h.y + m[(0, 2)].abs() * h.z,
            m[(1, 0)].abs() * h.x + m[(1, 1)].abs() * h.y + m[(1, 2)].abs() * h.z,
            m[(2, 0)].abs() * h.x + m[(2, 1)].abs() * h.y + m[(2, 2)].abs() * h.z,
        )
    }
}

/// One positioned primitive.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Primitive {
    Sphere(PlacedSphere),
    Box(PlacedBox),
}

impl Primitive {
    pub fn aabb(&self) -> (Vec3, Vec3) {
        match self {
            Primitive::Sphere(s) => {
                let r = Vec3::new(s.radius, s.radius, s.radius);
                (s.center - r, s.center + r)
            }
            Primitive::Box(b) => {
                let e = b.aabb_extent();
                (b.center - e, b.center + e)
            }
        }
    }
}

/// The space occupied by placed shapes in the global frame. Union is list
/// concatenation.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SpaceOccupancy {
    pub spheres: Vec<PlacedSphere>,
    pub boxes: Vec<PlacedBox>,
}

impl SpaceOccupancy {
    pub fn is_empty(&self) -> bool {
        self.spheres.is_empty() && self.boxes.is_empty()
    }

    pub fn len(&self) -> usize {
        self.spheres.len() + self.boxes.len()
    }

    pub fn merge(&mut self, other: SpaceOccupancy) {
        self.spheres.extend(other.spheres);
        self.boxes.extend(other.boxes);
    }

    pub fn primitives(&self) -> impl Iterator<Item = Primitive> + '_ {
        self.spheres
            .iter()
            .map(|s| Primitive::Sphere(*s))
            .chain(self.boxes.iter().map(|b| Primitive::Box(*b)))
    }

    fn push(&mut self, p: Primitive) {
        match p {
            Primitive::Sphere(s) => self.spheres.push(s),
            Primitive::Box(b) => self.boxes.push(b),
        }
    }
}

/// Deterministic juxtaposition layout: primitive parts sorted by their
/// canonical key, laid out tangentially along the placement's local x axis
/// and recentered so the barycentre sits at the placement origin.
///
/// Returns one placement per primitive part, in canonical part order.
pub fn layout(mu: &Placement, shape: &Shape) -> Vec<(Shape, Placement)> {
    let mut parts = shape.parts();
    parts.sort_by_key(primitive_key);
    if parts.is_empty() {
        return Vec::new();
    }
    if parts.len() == 1 {
        return vec![(parts.pop().unwrap(), *mu)];
    }
    let mut cursor = 0.0;
    let mut local_x: Vec<f64> = Vec::with_capacity(parts.len());
    for part in &parts {
        let w = part.width();
        local_x.push(cursor + 0.5 * w);
        cursor += w;
    }
    let barycentre: f64 = local_x.iter().sum::<f64>() / local_x.len() as f64;
    parts
        .into_iter()
        .zip(local_x)
        .map(|(part, x)| {
            let local = Vec3::new(x - barycentre, 0.0, 0.0);
            let origin = mu.origin + mu.orientation * local;
            (
                part,
                Placement {
                    origin,
                    orientation: mu.orientation,
                },
            )
        })
        .collect()
}

/// Computes the space occupied by `shape` under placement `mu`.
pub fn place(mu: &Placement, shape: &Shape) -> SpaceOccupancy {
    let mut occ = SpaceOccupancy::default();
    for (part, part_mu) in layout(mu, shape) {
        match part {
            Shape::Sphere { radius } => occ.push(Primitive::Sphere(PlacedSphere {
                center: part_mu.origin,
                radius,
            })),
            Shape::Box { half_extents } => occ.push(Primitive::Box(PlacedBox {
                center: part_mu.origin,
                half_extents,
                orientation: part_mu.orientation,
            })),
            Shape::Empty | Shape::Composite(_) => {}
        }
    }
    occ
}

/// Euclidean distance between placement origins.
pub fn distance(mu1: &Placement, mu2: &Placement) -> f64 {
    (mu1.origin - mu2.origin).norm()
}

/// Randomly displaces a placement by exactly `omega` in a uniformly
/// distributed direction (Marsaglia's method). Orientation is unchanged.
pub fn translate<R: Rng + ?Sized>(omega: f64, mu: &Placement, rng: &mut R) -> Placement {
    let dir = loop {
        let u1: f64 = rng.random::<f64>() * 2.0 - 1.0;
        let u2: f64 = rng.random::<f64>() * 2.0 - 1.0;
        let s = u1 * u1 + u2 * u2;
        if s < 1.0 {
            let t = 2.0 * (1.0 - s).sqrt();
            break Vec3::new(u1 * t, u2 * t, 1.0 - 2.0 * s);
        }
    };
    Placement {
        origin: mu.origin + omega * dir,
        orientation: mu.orientation,
    }
}

// --- overlap tests ---------------------------------------------------------

fn sphere_sphere_depth(a: &PlacedSphere, b: &PlacedSphere) -> f64 {
    a.radius + b.radius - (a.center - b.center).norm()
}

fn sphere_box_depth(s: &PlacedSphere, b: &PlacedBox) -> f64 {
    // Sphere center in the box's local frame.
    let local = b.orientation.inverse() * (s.center - b.center);
    let h = b.half_extents;
    let clamped = Vec3::new(
        local.x.clamp(-h.x, h.x),
        local.y.clamp(-h.y, h.y),
        local.z.clamp(-h.z, h.z),
    );
    let delta = local - clamped;
    let outside = delta.norm();
    if outside > 0.0 {
        s.radius - outside
    } else {
        // Center inside the box: depth is the radius plus the distance to
        // the nearest face (minimal translation to separate).
        let slack = Vec3::new(h.x - local.x.abs(), h.y - local.y.abs(), h.z - local.z.abs());
        s.radius + slack.x.min(slack.y).min(slack.z)
    }
}

fn box_box_depth(a: &PlacedBox, b: &PlacedBox) -> f64 {
    // Separating-axis test over the 15 candidate axes of two oriented boxes.
    let ra = a.orientation.to_rotation_matrix();
    let rb = b.orientation.to_rotation_matrix();
    let axes_a: [Vec3; 3] = [
        ra * Vec3::x(),
        ra * Vec3::y(),
        ra * Vec3::z(),
    ];
    let axes_b: [Vec3; 3] = [
        rb * Vec3::x(),
        rb * Vec3::y(),
        rb * Vec3::z(),
    ];
    let d = b.center - a.center;

    let mut min_depth = f64::INFINITY;
    let mut test = |axis: Vec3| -> bool {
        let len = axis.norm();
        if len < 1e-12 {
            return true; // degenerate cross product, covered by face axes
        }
        let axis = axis / len;
        let proj_a = a.half_extents.x * axes_a[0].dot(&axis).abs()
            + a.half_extents.y * axes_a[1].dot(&axis).abs()
            + a.half_extents.z * axes_a[2].dot(&axis).abs();
        let proj_b = b.half_extents.x * axes_b[0].dot(&axis).abs()
            + b.half_extents.y * axes_b[1].dot(&axis).abs()
            + b.half_extents.z * axes_b[2].dot(&axis).abs();
        let depth = proj_a + proj_b - d.dot(&axis).abs();
        min_depth = min_depth.min(depth);
        depth > 0.0
    };

    for axis in axes_a {
        if !test(axis) {
            return min_depth;
        }
    }
    for axis in axes_b {
        if !test(axis) {
            return min_depth;
        }
    }
    for ax_a in axes_a {
        for ax_b in axes_b {
            if !test(ax_a.cross(&ax_b)) {
                return min_depth;
            }
        }
    }
    min_depth
}

/// True iff the two primitives interpenetrate by more than [`GEOM_EPSILON`].
pub fn primitives_overlap(a: &Primitive, b: &Primitive) -> bool {
    let depth = match (a, b) {
        (Primitive::Sphere(x), Primitive::Sphere(y)) => sphere_sphere_depth(x, y),
        (Primitive::Sphere(s), Primitive::Box(bx)) | (Primitive::Box(bx), Primitive::Sphere(s)) => {
            sphere_box_depth(s, bx)
        }
        (Primitive::Box(x), Primitive::Box(y)) => box_box_depth(x, y),
    };
    depth > GEOM_EPSILON
}

/// True iff any primitive of `a` overlaps any primitive of `b`.
pub fn overlap(a: &SpaceOccupancy, b: &SpaceOccupancy) -> bool {
    for pa in a.primitives() {
        for pb in b.primitives() {
            if primitives_overlap(&pa, &pb) {
                return true;
            }
        }
    }
    false
}

// --- containment -----------------------------------------------------------

fn primitive_in_box(p: &Primitive, min: &Vec3, max: &Vec3) -> bool {
    let (lo, hi) = p.aabb();
    lo.x >= min.x && lo.y >= min.y && lo.z >= min.z && hi.x <= max.x && hi.y <= max.y && hi.z <= max.z
}

fn primitive_in_region(p: &Primitive, region: &Region) -> bool {
    match region {
        Region::All => true,
        Region::Box { min, max } => primitive_in_box(p, min, max),
        // A primitive straddling two union parts is treated as outside;
        // each primitive must fit in a single part.
        Region::Union(parts) => parts.iter().any(|r| primitive_in_region(p, r)),
    }
}

/// True iff every primitive of `occ` lies entirely inside `region`.
pub fn contains(region: &Region, occ: &SpaceOccupancy) -> bool {
    occ.primitives().all(|p| primitive_in_region(&p, region))
}

/// Uniform sample inside a region. Unbounded regions fall back to the
/// given sampling box.
pub fn sample_point<R: Rng + ?Sized>(
    region: &Region,
    fallback: (&Vec3, &Vec3),
    rng: &mut R,
) -> Vec3 {
    match region {
        Region::All => {
            let (min, max) = fallback;
            uniform_in_box(min, max, rng)
        }
        Region::Box { min, max } => uniform_in_box(min, max, rng),
        Region::Union(parts) if !parts.is_empty() => {
            // Parts weighted by volume (unbounded part wins outright).
            let volumes: Vec<f64> = parts.iter().map(region_volume).collect();
            let total: f64 = volumes.iter().sum();
            if !total.is_finite() || total <= 0.0 {
                let idx = rng.random_range(0..parts.len());
                return sample_point(&parts[idx], fallback, rng);
            }
            let mut pick = rng.random::<f64>() * total;
            for (part, v) in parts.iter().zip(&volumes) {
                if pick < *v || std::ptr::eq(part, parts.last().unwrap()) {
                    return sample_point(part, fallback, rng);
                }
                pick -= v;
            }
            unreachable!()
        }
        Region::Union(_) => {
            let (min, max) = fallback;
            uniform_in_box(min, max, rng)
        }
    }
}

fn region_volume(region: &Region) -> f64 {
    match region {
        Region::All => f64::INFINITY,
        Region::Box { min, max } => (max.x - min.x) * (max.y - min.y) * (max.z - min.z),
        Region::Union(parts) => parts.iter().map(region_volume).sum(),
    }
}

fn uniform_in_box<R: Rng + ?Sized>(min: &Vec3, max: &Vec3, rng: &mut R) -> Vec3 {
    Vec3::new(
        min.x + rng.random::<f64>() * (max.x - min.x),
        min.y + rng.random::<f64>() * (max.y - min.y),
        min.z + rng.random::<f64>() * (max.z - min.z),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sphere_occ(x: f64, y: f64, z: f64, r: f64) -> SpaceOccupancy {
        place(&Placement::at(Vec3::new(x, y, z)), &Shape::sphere(r))
    }

    #[test]
    fn compose_empty_is_identity() {
        let s = Shape::sphere(1.0);
        assert_eq!(compose_shapes(&Shape::Empty, &s), s);
        assert_eq!(compose_shapes(&s, &Shape::Empty), s);
        assert_eq!(compose_shapes(&Shape::Empty, &Shape::Empty), Shape::Empty);
    }

    #[test]
    fn compose_is_commutative() {
        let a = Shape::sphere(1.0);
        let b = Shape::sphere(2.0);
        let ab = compose_shapes(&a, &b);
        assert_eq!(ab, compose_shapes(&b, &a));
        assert_eq!(
            ab,
            Shape::Composite(vec![Shape::sphere(1.0), Shape::sphere(2.0)])
        );
    }

    #[test]
    fn compose_is_associative() {
        let a = Shape::sphere(1.0);
        let b = Shape::cuboid(1.0, 2.0, 3.0);
        let c = Shape::sphere(0.5);
        let left = compose_shapes(&compose_shapes(&a, &b), &c);
        let right = compose_shapes(&a, &compose_shapes(&b, &c));
        assert_eq!(left, right);
    }

    #[test]
    fn place_single_sphere_at_origin() {
        let occ = sphere_occ(0.0, 0.0, 0.0, 1.0);
        assert_eq!(occ.spheres.len(), 1);
        assert_eq!(occ.spheres[0].center, Vec3::zeros());
        assert_eq!(occ.spheres[0].radius, 1.0);
    }

    #[test]
    fn place_translates_with_origin() {
        let occ = sphere_occ(5.0, 0.0, 0.0, 1.0);
        assert_eq!(occ.spheres[0].center, Vec3::new(5.0, 0.0, 0.0));
    }

    #[test]
    fn place_two_unit_spheres_tangent_about_barycentre() {
        // Tangency plus barycentre constraint puts the centers at (±1,0,0).
        let composite = compose_shapes(&Shape::sphere(1.0), &Shape::sphere(1.0));
        let occ = place(&Placement::identity(), &composite);
        assert_eq!(occ.spheres.len(), 2);
        let mut xs: Vec<f64> = occ.spheres.iter().map(|s| s.center.x).collect();
        xs.sort_by(f64::total_cmp);
        assert_eq!(xs, vec![-1.0, 1.0]);
        assert!(occ.spheres.iter().all(|s| s.center.y == 0.0 && s.center.z == 0.0));
    }

    #[test]
    fn place_preserves_primitive_count() {
        let shape = compose_shapes(
            &compose_shapes(&Shape::sphere(1.0), &Shape::cuboid(1.0, 1.0, 1.0)),
            &Shape::sphere(2.0),
        );
        let occ = place(&Placement::at(Vec3::new(1.0, 2.0, 3.0)), &shape);
        assert_eq!(occ.len(), 3);
    }

    #[test]
    fn overlap_far_spheres_false() {
        assert!(!overlap(
            &sphere_occ(0.0, 0.0, 0.0, 1.0),
            &sphere_occ(3.0, 0.0, 0.0, 1.0)
        ));
    }

    #[test]
    fn overlap_close_spheres_true() {
        assert!(overlap(
            &sphere_occ(0.0, 0.0, 0.0, 1.0),
            &sphere_occ(1.0, 0.0, 0.0, 1.0)
        ));
    }

    #[test]
    fn tangency_is_not_overlap() {
        assert!(!overlap(
            &sphere_occ(0.0, 0.0, 0.0, 1.0),
            &sphere_occ(2.0, 0.0, 0.0, 1.0)
        ));
    }

    #[test]
    fn sphere_box_overlap() {
        let bx = SpaceOccupancy {
            spheres: vec![],
            boxes: vec![PlacedBox {
                center: Vec3::zeros(),
                half_extents: Vec3::new(1.0, 1.0, 1.0),
                orientation: Quat::identity(),
            }],
        };
        assert!(overlap(&sphere_occ(1.5, 0.0, 0.0, 1.0), &bx));
        assert!(!overlap(&sphere_occ(3.0, 0.0, 0.0, 1.0), &bx));
        // Tangent: box face at x=1, sphere reaches back to x=1.
        assert!(!overlap(&sphere_occ(2.0, 0.0, 0.0, 1.0), &bx));
        // Point sphere inside a solid box counts as overlap.
        assert!(overlap(&sphere_occ(0.5, 0.0, 0.0, 0.0), &bx));
    }

    #[test]
    fn box_box_separating_axis() {
        let mk = |x: f64, yaw: f64| PlacedBox {
            center: Vec3::new(x, 0.0, 0.0),
            half_extents: Vec3::new(1.0, 1.0, 1.0),
            orientation: Quat::from_euler_angles(0.0, 0.0, yaw),
        };
        let a = Primitive::Box(mk(0.0, 0.0));
        assert!(primitives_overlap(&a, &Primitive::Box(mk(1.5, 0.0))));
        assert!(!primitives_overlap(&a, &Primitive::Box(mk(2.5, 0.0))));
        // A 45°-rotated cube reaches sqrt(2) along x: overlaps at 2.2, not at 2.5.
        let rot = std::f64::consts::FRAC_PI_4;
        assert!(primitives_overlap(&a, &Primitive::Box(mk(2.2, rot))));
        assert!(!primitives_overlap(&a, &Primitive::Box(mk(2.5, rot))));
    }

    #[test]
    fn distance_examples() {
        let a = Placement::at(Vec3::zeros());
        let b = Placement::at(Vec3::new(3.0, 4.0, 0.0));
        assert_eq!(distance(&a, &a), 0.0);
        assert_eq!(distance(&a, &b), 5.0);
        assert_eq!(distance(&a, &b), distance(&b, &a));
    }

    #[test]
    fn translate_zero_step_keeps_placement() {
        let mu = Placement::at(Vec3::new(1.0, 2.0, 3.0));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let moved = translate(0.0, &mu, &mut rng);
        assert_eq!(moved.origin, mu.origin);
    }

    #[test]
    fn translate_displacement_is_exact() {
        let mu = Placement::at(Vec3::new(1.0, 2.0, 3.0));
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..1000 {
            let moved = translate(1.0, &mu, &mut rng);
            let d = (moved.origin - mu.origin).norm();
            assert!((d - 1.0).abs() < 1e-12, "displacement {d}");
        }
    }

    #[test]
    fn translate_is_reproducible() {
        let mu = Placement::at(Vec3::zeros());
        let mut a = ChaCha8Rng::seed_from_u64(9);
        let mut b = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            assert_eq!(translate(0.5, &mu, &mut a), translate(0.5, &mu, &mut b));
        }
    }

    #[test]
    fn translate_direction_uniform_over_octants() {
        // Chi-square on octant counts; 7 dof, p > 0.001 ⇒ chi2 < 24.32.
        let mu = Placement::at(Vec3::zeros());
        let mut rng = ChaCha8Rng::seed_from_u64(1234);
        let n = 100_000;
        let mut counts = [0u64; 8];
        for _ in 0..n {
            let p = translate(1.0, &mu, &mut rng).origin;
            let idx = ((p.x > 0.0) as usize) | (((p.y > 0.0) as usize) << 1)
                | (((p.z > 0.0) as usize) << 2);
            counts[idx] += 1;
        }
        let expected = n as f64 / 8.0;
        let chi2: f64 = counts
            .iter()
            .map(|&c| {
                let d = c as f64 - expected;
                d * d / expected
            })
            .sum();
        assert!(chi2 < 24.32, "chi2 = {chi2}, octants {counts:?}");
    }

    #[test]
    fn contains_all_is_universal() {
        let occ = sphere_occ(1e9, -1e9, 0.0, 5.0);
        assert!(contains(&Region::All, &occ));
    }

    #[test]
    fn contains_box_examples() {
        let region = Region::Box {
            min: Vec3::new(-2.0, -2.0, -2.0),
            max: Vec3::new(2.0, 2.0, 2.0),
        };
        assert!(contains(&region, &sphere_occ(0.0, 0.0, 0.0, 1.0)));
        // Reaches x = 2.5 > 2.
        assert!(!contains(&region, &sphere_occ(1.5, 0.0, 0.0, 1.0)));
        // Tangent to the boundary still counts as inside.
        assert!(contains(&region, &sphere_occ(1.0, 0.0, 0.0, 1.0)));
    }

    #[test]
    fn contains_is_monotone_under_box_nesting() {
        let inner = Region::Box {
            min: Vec3::new(-2.0, -2.0, -2.0),
            max: Vec3::new(2.0, 2.0, 2.0),
        };
        let outer = Region::Box {
            min: Vec3::new(-4.0, -4.0, -4.0),
            max: Vec3::new(4.0, 4.0, 4.0),
        };
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let occ = sphere_occ(
                rng.random::<f64>() * 6.0 - 3.0,
                rng.random::<f64>() * 6.0 - 3.0,
                rng.random::<f64>() * 6.0 - 3.0,
                rng.random::<f64>(),
            );
            if contains(&inner, &occ) {
                assert!(contains(&outer, &occ));
            }
        }
    }

    #[test]
    fn overlap_symmetric_and_self_overlapping() {
        let a = sphere_occ(0.0, 0.0, 0.0, 1.0);
        let b = sphere_occ(1.0, 0.5, 0.0, 1.0);
        assert_eq!(overlap(&a, &b), overlap(&b, &a));
        assert!(overlap(&a, &a), "a nonempty occupancy overlaps itself");
    }
}
