use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::real::Real;
use crate::vec2::Vec2;

use super::PhaseError;

/// A polyline trajectory. Closed paths connect the last vertex back to the
/// first implicitly; the first vertex must not be repeated at the end.
#[derive(Debug, Clone, PartialEq)]
pub struct PolylinePath<T> {
    vertices: Vec<Vec2<T>>,
    closed: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PathFile<T> {
    closed: bool,
    vertices: Vec<[T; 2]>,
}

impl<T: Real> PolylinePath<T> {
    pub fn new(vertices: Vec<Vec2<T>>, closed: bool) -> Result<Self, PhaseError> {
        let needed = if closed { 3 } else { 2 };
        if vertices.len() < needed {
            return Err(PhaseError::TooFewVertices {
                got: vertices.len(),
                needed,
            });
        }
        if let Some(index) = vertices.iter().position(|v| !v.is_finite()) {
            return Err(PhaseError::NonFiniteVertex { index });
        }
        if closed && vertices.first() == vertices.last() {
            return Err(PhaseError::DuplicatedClosingVertex);
        }
        Ok(Self { vertices, closed })
    }

    pub fn closed(vertices: Vec<Vec2<T>>) -> Result<Self, PhaseError> {
        Self::new(vertices, true)
    }

    pub fn open(vertices: Vec<Vec2<T>>) -> Result<Self, PhaseError> {
        Self::new(vertices, false)
    }

    /// Regular `n`-gon inscribed in the circle of radius `radius` about `center`,
    /// counter-clockwise when `ccw`.
    pub fn regular_polygon(center: Vec2<T>, radius: T, n: usize, ccw: bool) -> Result<Self, PhaseError> {
        let step = T::TAU() / T::from_count(n.max(1));
        let sign = if ccw { T::one() } else { -T::one() };
        let vertices = (0..n)
            .map(|k| {
                let a = sign * step * T::from_count(k);
                center + Vec2::new(a.cos(), a.sin()) * radius
            })
            .collect();
        Self::closed(vertices)
    }

    pub fn vertices(&self) -> &[Vec2<T>] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn start(&self) -> Vec2<T> {
        self.vertices[0]
    }

    /// Last point reached: the last vertex, or the first one for closed paths.
    pub fn end(&self) -> Vec2<T> {
        if self.closed {
            self.vertices[0]
        } else {
            self.vertices[self.vertices.len() - 1]
        }
    }

    pub fn segment_count(&self) -> usize {
        if self.closed {
            self.vertices.len()
        } else {
            self.vertices.len() - 1
        }
    }

    pub fn segments(&self) -> impl Iterator<Item = (Vec2<T>, Vec2<T>)> + '_ {
        let n = self.vertices.len();
        (0..self.segment_count()).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Same curve traversed backwards. Closed paths keep their first vertex.
    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        if self.closed {
            vertices[1..].reverse();
        } else {
            vertices.reverse();
        }
        Self {
            vertices,
            closed: self.closed,
        }
    }

    /// Largest vertex-to-vertex distance.
    pub fn diameter(&self) -> T {
        let mut d = T::zero();
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                d = d.max((*a - *b).norm());
            }
        }
        d
    }

    /// Closed loop that runs `self` and then `other` backwards. Both must be
    /// open with the same start and end points.
    pub fn loop_with_reverse_of(&self, other: &Self) -> Result<Self, PhaseError> {
        if self.closed || other.closed {
            return Err(PhaseError::ExpectedOpenPath);
        }
        if self.start() != other.start() || self.end() != other.end() {
            return Err(PhaseError::EndpointMismatch);
        }
        let mut vertices = self.vertices.clone();
        let back = &other.vertices[1..other.vertices.len() - 1];
        vertices.extend(back.iter().rev().copied());
        Self::closed(vertices)
    }
}

impl<T: Real + DeserializeOwned> PolylinePath<T> {
    /// Parses `{"closed": <bool>, "vertices": [[x, y], ...]}`.
    pub fn from_json(text: &str) -> Result<Self, PhaseError> {
        let file: PathFile<T> = serde_json::from_str(text).map_err(|e| PhaseError::Parse(e.to_string()))?;
        Self::new(file.vertices.into_iter().map(Vec2::from).collect(), file.closed)
    }
}

impl<T: Real + Serialize> PolylinePath<T> {
    pub fn to_json(&self) -> String {
        let file = PathFile {
            closed: self.closed,
            vertices: self.vertices.iter().map(|&v| v.into()).collect(),
        };
        serde_json::to_string(&file).expect("vertices always serialize")
    }
}
