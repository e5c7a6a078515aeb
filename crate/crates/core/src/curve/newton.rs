//! Newton polygon of a bivariate support: convex hull, interior lattice
//! points and the diminished polygon.

use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub support: BTreeSet<(i64, i64)>,
    /// Counter-clockwise, without collinear points.
    pub hull_vertices: Vec<(i64, i64)>,
    pub interior: Vec<(i64, i64)>,
    /// Interior shifted by `(-1, -1)`, sorted lexicographically.
    pub diminished: Vec<(i64, i64)>,
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Andrew's monotone chain; drops collinear points.
pub fn convex_hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut pts: Vec<_> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

impl NewtonPolygon {
    pub fn new(support: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let support: BTreeSet<_> = support.into_iter().collect();
        let pts: Vec<_> = support.iter().copied().collect();
        let hull = convex_hull(&pts);
        let mut interior = Vec::new();
        if hull.len() >= 3 {
            let (xmin, xmax) = (hull.iter().map(|p| p.0).min().unwrap(), hull.iter().map(|p| p.0).max().unwrap());
            let (ymin, ymax) = (hull.iter().map(|p| p.1).min().unwrap(), hull.iter().map(|p| p.1).max().unwrap());
            for i in xmin + 1..xmax {
                for j in ymin + 1..ymax {
                    let inside = (0..hull.len()).all(|k| cross(hull[k], hull[(k + 1) % hull.len()], (i, j)) > 0);
                    if inside {
                        interior.push((i, j));
                    }
                }
            }
        }
        interior.sort();
        let diminished = interior.iter().map(|&(i, j)| (i - 1, j - 1)).collect();
        NewtonPolygon { support, hull_vertices: hull, interior, diminished }
    }

    pub fn genus(&self) -> usize {
        self.interior.len()
    }
}
