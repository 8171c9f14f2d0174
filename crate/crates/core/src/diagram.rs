//! Trapezoid diagrams: validation, rank normalization, random generation,
//! point lookup and the intersection graph.
//!
//! Trapezoid `i` (1-based) spans `[a, b]` on the upper line and `[c, d]` on
//! the lower line. In a valid diagram of `n` trapezoids each line carries
//! every label `1..=2n` exactly once.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::batch;
use crate::error::{Line, NormalizeError, ValidationReport, Violation};
use crate::graph::IntersectionGraph;

// Below this size the graph rows are built on the calling thread.
const PARALLEL_ROWS: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Trapezoid {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl Trapezoid {
    pub fn new(a: usize, b: usize, c: usize, d: usize) -> Self {
        Self { a, b, c, d }
    }

    /// Entirely left of `other`: `b < other.a` and `d < other.c`.
    pub fn precedes(&self, other: &Trapezoid) -> bool {
        self.b < other.a && self.d < other.c
    }

    pub fn intersects(&self, other: &Trapezoid) -> bool {
        !self.precedes(other) && !other.precedes(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TrapezoidDiagram {
    traps: Vec<Trapezoid>,
}

impl TrapezoidDiagram {
    /// Checks a candidate diagram given as `[a, b, c, d]` rows.
    ///
    /// The report lists every violated invariant, not just the first.
    pub fn validate(raw: &[[i64; 4]]) -> Result<Self, ValidationReport> {
        let n = raw.len();
        let mut violations = Vec::new();
        if n == 0 {
            violations.push(Violation::Empty);
        }
        let max = 2 * n;
        for (line, (left, right)) in [(Line::Upper, (0, 1)), (Line::Lower, (2, 3))] {
            let mut seen = vec![0u32; max + 1];
            let mut reported = vec![false; max + 1];
            for (k, row) in raw.iter().enumerate() {
                for label in [row[left], row[right]] {
                    if label < 1 || label > max as i64 {
                        violations.push(Violation::LabelOutOfRange {
                            line,
                            trapezoid: k + 1,
                            label,
                            max,
                        });
                        continue;
                    }
                    let slot = label as usize;
                    seen[slot] += 1;
                    if seen[slot] > 1 && !reported[slot] {
                        reported[slot] = true;
                        violations.push(Violation::DuplicateLabel { line, label });
                    }
                }
                if row[left] >= row[right] {
                    violations.push(Violation::Inverted { line, trapezoid: k + 1 });
                }
            }
        }
        if !violations.is_empty() {
            return Err(ValidationReport { violations });
        }
        let traps = raw
            .iter()
            .map(|r| Trapezoid::new(r[0] as usize, r[1] as usize, r[2] as usize, r[3] as usize))
            .collect();
        Ok(Self { traps })
    }

    /// Replaces each line's coordinates by their ranks `1..=2n`.
    ///
    /// Coordinates must be finite and pairwise distinct per line, with the
    /// left corner strictly left of the right corner.
    pub fn normalize(raw: &[[f64; 4]]) -> Result<Self, NormalizeError> {
        let n = raw.len();
        if n == 0 {
            return Err(NormalizeError::Empty);
        }
        let mut ranked = vec![[0usize; 4]; n];
        for (line, (left, right)) in [(Line::Upper, (0, 1)), (Line::Lower, (2, 3))] {
            let mut points = Vec::with_capacity(2 * n);
            for (k, row) in raw.iter().enumerate() {
                if !row[left].is_finite() || !row[right].is_finite() {
                    return Err(NormalizeError::NonFinite { trapezoid: k + 1 });
                }
                if row[left] >= row[right] {
                    return Err(NormalizeError::Inverted { line, trapezoid: k + 1 });
                }
                points.push((row[left], k, left));
                points.push((row[right], k, right));
            }
            points.sort_by(|p, q| p.0.total_cmp(&q.0));
            for pair in points.windows(2) {
                if pair[0].0 == pair[1].0 {
                    let (first, second) = (pair[0].1.min(pair[1].1), pair[0].1.max(pair[1].1));
                    return Err(NormalizeError::Tie {
                        line,
                        first: first + 1,
                        second: second + 1,
                        value: pair[0].0,
                    });
                }
            }
            for (rank, &(_, k, corner)) in points.iter().enumerate() {
                ranked[k][corner] = rank + 1;
            }
        }
        Ok(Self {
            traps: ranked.iter().map(|r| Trapezoid::new(r[0], r[1], r[2], r[3])).collect(),
        })
    }

    /// Uniform random perfect matching of `1..=2n` on each line; pair `k`
    /// of both lines becomes trapezoid `k`. Deterministic in `(n, seed)`.
    pub fn random(n: usize, seed: u64) -> Self {
        assert!(n >= 1, "random diagram needs n >= 1");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let matching = |rng: &mut ChaCha8Rng| {
            let mut points: Vec<usize> = (1..=2 * n).collect();
            points.shuffle(rng);
            points
                .chunks_exact(2)
                .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
                .collect::<Vec<_>>()
        };
        let upper = matching(&mut rng);
        let lower = matching(&mut rng);
        let traps = upper
            .into_iter()
            .zip(lower)
            .map(|((a, b), (c, d))| Trapezoid::new(a, b, c, d))
            .collect();
        Self { traps }
    }

    pub fn n(&self) -> usize {
        self.traps.len()
    }

    /// Trapezoid `i`, 1-based.
    pub fn get(&self, i: usize) -> &Trapezoid {
        &self.traps[i - 1]
    }

    pub fn trapezoids(&self) -> &[Trapezoid] {
        &self.traps
    }

    /// `[a, b, c, d]` rows, the inverse of [`TrapezoidDiagram::validate`].
    pub fn rows(&self) -> Vec<[i64; 4]> {
        self.traps
            .iter()
            .map(|t| [t.a as i64, t.b as i64, t.c as i64, t.d as i64])
            .collect()
    }

    /// `i ≪ j`: trapezoid `i` lies entirely left of trapezoid `j`.
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.get(i).precedes(self.get(j))
    }

    /// Adjacency test for two distinct trapezoids.
    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        assert!(i != j, "adjacency of trapezoid {i} with itself");
        self.get(i).intersects(self.get(j))
    }

    pub fn point_index(&self) -> PointIndex {
        PointIndex::new(self)
    }

    /// All-pairs intersection graph, `O(n^2)`.
    pub fn intersection_graph(&self) -> IntersectionGraph {
        let traps = &self.traps;
        let row = |i: usize| {
            let t = &traps[i];
            traps
                .iter()
                .enumerate()
                .filter(|&(j, u)| j != i && t.intersects(u))
                .map(|(j, _)| j + 1)
                .collect::<Vec<_>>()
        };
        let adjacency = if traps.len() >= PARALLEL_ROWS {
            batch::map_range(traps.len(), row)
        } else {
            (0..traps.len()).map(row).collect()
        };
        IntersectionGraph::from_unsorted(adjacency)
    }
}

/// Label-to-trapezoid lookup for both lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointIndex {
    // Slot 0 unused so the arrays index by label.
    up: Vec<usize>,
    bottom: Vec<usize>,
}

impl PointIndex {
    pub fn new(dg: &TrapezoidDiagram) -> Self {
        let len = 2 * dg.n() + 1;
        let mut up = vec![0; len];
        let mut bottom = vec![0; len];
        for (k, t) in dg.trapezoids().iter().enumerate() {
            up[t.a] = k + 1;
            up[t.b] = k + 1;
            bottom[t.c] = k + 1;
            bottom[t.d] = k + 1;
        }
        Self { up, bottom }
    }

    /// Trapezoid owning label `j` on the upper line.
    pub fn up(&self, j: usize) -> usize {
        self.up[j]
    }

    /// Trapezoid owning label `j` on the lower line.
    pub fn bottom(&self, j: usize) -> usize {
        self.bottom[j]
    }

    pub fn up_slice(&self) -> &[usize] {
        &self.up[1..]
    }

    pub fn bottom_slice(&self) -> &[usize] {
        &self.bottom[1..]
    }
}
