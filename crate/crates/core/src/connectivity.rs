//! Vertex connectivity of a trapezoid graph by cut-line minimization.
//!
//! A cut line `(x, y)` passes through the gap `(x, x + 1)` on the upper line
//! and `(y, y + 1)` on the lower line. Relative to it a trapezoid is *left*
//! (`b <= x` and `d <= y`), *right* (`a >= x + 1` and `c >= y + 1`) or
//! crossing. The line is separating when both a left and a right trapezoid
//! exist, and then the crossing trapezoids form a vertex cut. For a graph
//! that is not complete, the connectivity is the minimum number of crossing
//! trapezoids over all separating lines.
//!
//! Two sweeps over `x` compute that minimum:
//!
//! * [`kappa_quadratic`] scans every lower coordinate for each `x`, `O(n^2)`;
//! * [`kappa_fast`] keeps the per-`y` running counts in a
//!   [`MinPrefixTree`] and answers each `x` with one minimum-prefix query,
//!   `O(n log n)` overall.
//!
//! [`n_xy`] is the direct `O(n)` count for a single line and serves as the
//! reference semantics for both.

use crate::diagram::{PointIndex, TrapezoidDiagram};
use crate::mbit::{MinPrefixTree, Value};

/// Vertical line through upper gap `(x, x + 1)` and lower gap `(y, y + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CutLine {
    pub x: usize,
    pub y: usize,
}

impl CutLine {
    pub fn new(x: usize, y: usize) -> Self {
        Self { x, y }
    }

    fn check(&self, dg: &TrapezoidDiagram) {
        let max = 2 * dg.n() - 1;
        assert!(
            (1..=max).contains(&self.x) && (1..=max).contains(&self.y),
            "cut line ({}, {}) outside 1..={max}",
            self.x,
            self.y
        );
    }

    fn is_left(&self, dg: &TrapezoidDiagram, i: usize) -> bool {
        let t = dg.get(i);
        t.b <= self.x && t.d <= self.y
    }

    fn is_right(&self, dg: &TrapezoidDiagram, i: usize) -> bool {
        let t = dg.get(i);
        t.a > self.x && t.c > self.y
    }

    /// At least one trapezoid entirely on each side.
    pub fn is_separating(&self, dg: &TrapezoidDiagram) -> bool {
        self.check(dg);
        (1..=dg.n()).any(|i| self.is_left(dg, i)) && (1..=dg.n()).any(|i| self.is_right(dg, i))
    }

    /// Trapezoids with points on both sides of the line, ascending.
    pub fn crossing(&self, dg: &TrapezoidDiagram) -> Vec<usize> {
        self.check(dg);
        (1..=dg.n())
            .filter(|&i| !self.is_left(dg, i) && !self.is_right(dg, i))
            .collect()
    }
}

/// Number of trapezoids crossing `line`, or `None` (infinite) when the line
/// does not separate. Direct `O(n)` scan.
pub fn n_xy(dg: &TrapezoidDiagram, line: CutLine) -> Option<usize> {
    line.is_separating(dg).then(|| line.crossing(dg).len())
}

/// Per upper gap `x`: the finished trapezoid (`b <= x`) with the smallest
/// `d`, and the unstarted one (`a >= x + 1`) with the largest `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryArrays {
    // Slot 0 unused; entries for x = 1..=2n.
    leftmost: Vec<Option<usize>>,
    rightmost: Vec<Option<usize>>,
}

impl BoundaryArrays {
    pub fn new(dg: &TrapezoidDiagram, pi: &PointIndex) -> Self {
        Self {
            leftmost: compute_leftmost(dg, pi),
            rightmost: compute_rightmost(dg, pi),
        }
    }

    pub fn leftmost(&self, x: usize) -> Option<usize> {
        self.leftmost[x]
    }

    pub fn rightmost(&self, x: usize) -> Option<usize> {
        self.rightmost[x]
    }

    /// Entries for `x = 1..=2n` with `-1` for "none".
    pub fn leftmost_signed(&self) -> Vec<i64> {
        signed(&self.leftmost[1..])
    }

    pub fn rightmost_signed(&self) -> Vec<i64> {
        signed(&self.rightmost[1..])
    }
}

fn signed(entries: &[Option<usize>]) -> Vec<i64> {
    entries.iter().map(|e| e.map_or(-1, |i| i as i64)).collect()
}

/// Leftmost array indexed by `x` (slot 0 unused), one left-to-right pass.
pub fn compute_leftmost(dg: &TrapezoidDiagram, pi: &PointIndex) -> Vec<Option<usize>> {
    let len = 2 * dg.n();
    let mut leftmost = vec![None; len + 1];
    for j in 2..=len {
        let i = pi.up(j);
        let mut best = leftmost[j - 1];
        if dg.get(i).b == j && best.is_none_or(|l: usize| dg.get(l).d > dg.get(i).d) {
            best = Some(i);
        }
        leftmost[j] = best;
    }
    leftmost
}

/// Rightmost array indexed by `x` (slot 0 unused), one right-to-left pass.
pub fn compute_rightmost(dg: &TrapezoidDiagram, pi: &PointIndex) -> Vec<Option<usize>> {
    let len = 2 * dg.n();
    let mut rightmost = vec![None; len + 1];
    for j in (1..len).rev() {
        let i = pi.up(j + 1);
        let mut best = rightmost[j + 1];
        if dg.get(i).a == j + 1 && best.is_none_or(|r: usize| dg.get(r).c < dg.get(i).c) {
            best = Some(i);
        }
        rightmost[j] = best;
    }
    rightmost
}

/// Position of a trapezoid relative to the current upper gap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// `b <= x`.
    Left,
    /// `a <= x < b`: contains the gap.
    Cut,
    /// `a >= x + 1`.
    Right,
}

/// Roles of all trapezoids for the upper gap `(x, x + 1)`, advanced one
/// label at a time.
#[derive(Debug, Clone)]
pub struct SweepState {
    x: usize,
    roles: Vec<Role>,
    left: usize,
    right: usize,
}

impl SweepState {
    /// State before the first label: every trapezoid is right.
    pub fn new(dg: &TrapezoidDiagram) -> Self {
        Self {
            x: 0,
            roles: vec![Role::Right; dg.n()],
            left: 0,
            right: dg.n(),
        }
    }

    /// State for gap `x`.
    pub fn at(dg: &TrapezoidDiagram, pi: &PointIndex, x: usize) -> Self {
        let mut state = Self::new(dg);
        while state.x < x {
            state.advance(dg, pi);
        }
        state
    }

    /// Moves to gap `x + 1`; returns the trapezoid owning the new label.
    pub fn advance(&mut self, dg: &TrapezoidDiagram, pi: &PointIndex) -> usize {
        self.x += 1;
        let i = pi.up(self.x);
        if dg.get(i).a == self.x {
            self.roles[i - 1] = Role::Cut;
            self.right -= 1;
        } else {
            self.roles[i - 1] = Role::Left;
            self.left += 1;
        }
        i
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn role(&self, i: usize) -> Role {
        self.roles[i - 1]
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn cut(&self) -> usize {
        self.roles.len() - self.left - self.right
    }
}

/// Minimum of `N(x, y)` over separating `y` at the state's gap `x`, with
/// the smallest minimizing `y`. `None` when no line through this upper gap
/// separates. `O(n)`.
pub fn min_nxy_for_x(
    dg: &TrapezoidDiagram,
    pi: &PointIndex,
    bounds: &BoundaryArrays,
    state: &SweepState,
) -> Option<(usize, usize)> {
    let x = state.x();
    assert!(x >= 1 && x < 2 * dg.n(), "sweep state at gap {x}");
    let (lm, rm) = (bounds.leftmost(x)?, bounds.rightmost(x)?);
    // Separating y: some left trapezoid has d <= y, and the right one with
    // the largest c still has c >= y + 1.
    let (lo, hi) = (dg.get(lm).d, dg.get(rm).c - 1);
    if lo > hi {
        return None;
    }
    let cut = state.cut() as isize;
    let mut sum = state.left() as isize;
    let mut best: Option<(usize, usize)> = None;
    for y in 1..=hi {
        let i = pi.bottom(y);
        let t = dg.get(i);
        match state.role(i) {
            Role::Left if t.d == y => sum -= 1,
            Role::Right if t.c == y => sum += 1,
            _ => {}
        }
        if y >= lo {
            let value = (cut + sum) as usize;
            if best.is_none_or(|(b, _)| value < b) {
                best = Some((value, y));
            }
        }
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WitnessMode {
    #[default]
    Skip,
    Extract,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityResult {
    pub kappa: usize,
    /// Crossing set of `achieved_cut`; absent for complete graphs or when
    /// not requested.
    pub witness: Option<Vec<usize>>,
    pub achieved_cut: Option<CutLine>,
}

impl ConnectivityResult {
    fn complete(n: usize) -> Self {
        Self {
            kappa: n - 1,
            witness: None,
            achieved_cut: None,
        }
    }

    fn from_line(dg: &TrapezoidDiagram, kappa: usize, line: CutLine, mode: WitnessMode) -> Self {
        let witness = (mode == WitnessMode::Extract).then(|| line.crossing(dg));
        debug_assert!(witness.as_ref().is_none_or(|w| w.len() == kappa));
        Self {
            kappa,
            witness,
            achieved_cut: Some(line),
        }
    }
}

/// Connectivity by a per-`x` scan of all lower coordinates, `O(n^2)`.
pub fn kappa_quadratic(dg: &TrapezoidDiagram, mode: WitnessMode) -> ConnectivityResult {
    let n = dg.n();
    let pi = dg.point_index();
    let bounds = BoundaryArrays::new(dg, &pi);
    let mut state = SweepState::new(dg);
    let mut best: Option<(usize, CutLine)> = None;
    for x in 1..2 * n {
        state.advance(dg, &pi);
        if let Some((value, y)) = min_nxy_for_x(dg, &pi, &bounds, &state) {
            if best.is_none_or(|(b, _)| value < b) {
                best = Some((value, CutLine::new(x, y)));
            }
        }
    }
    match best {
        Some((kappa, line)) => ConnectivityResult::from_line(dg, kappa, line, mode),
        None => ConnectivityResult::complete(n),
    }
}

/// Connectivity in `O(n log n)` with a [`MinPrefixTree`] over lower
/// coordinates.
///
/// For gap `x` the tree holds `+1` at `c` of every right trapezoid, `-1` at
/// `d` of every left trapezoid and `0` elsewhere, so that
/// `N(x, y) = (n - right) + prefix_sum(y)`. The `d` of the current leftmost
/// trapezoid carries `-n^2 - 1` instead of `-1`: every `y` below it then
/// yields a candidate above `n`, and the single query
/// `min_prefix(c[rightmost]) + n^2 + (n - right)` is the minimum over the
/// separating range.
pub fn kappa_fast(dg: &TrapezoidDiagram, mode: WitnessMode) -> ConnectivityResult {
    let n = dg.n();
    let pi = dg.point_index();
    let bounds = BoundaryArrays::new(dg, &pi);
    let big = (n as Value) * (n as Value);
    let sentinel = -big - 1;

    let mut tree = MinPrefixTree::new(2 * n).expect("diagram is non-empty");
    for t in dg.trapezoids() {
        tree.update(t.c, 1);
    }
    let mut right = n;
    let mut previous: Option<usize> = None;
    let mut best: Option<(usize, usize)> = None;

    for x in 1..2 * n {
        let i = pi.up(x);
        let t = dg.get(i);
        tree.update(t.c, 0);
        if t.a == x {
            right -= 1;
            tree.update(t.d, 0);
        } else {
            tree.update(t.d, -1);
        }

        let leftmost = bounds.leftmost(x);
        // Restore-then-plant is a no-op when the leftmost did not change.
        if leftmost != previous {
            if let Some(p) = previous {
                tree.update(dg.get(p).d, -1);
            }
            if let Some(l) = leftmost {
                tree.update(dg.get(l).d, sentinel);
            }
            previous = leftmost;
        }

        if let (Some(l), Some(r)) = (leftmost, bounds.rightmost(x)) {
            let c_r = dg.get(r).c;
            let candidate = tree.min_prefix(c_r) + big + (n - right) as Value;
            debug_assert!(
                dg.get(l).d < c_r || candidate > n as Value,
                "non-separating gap {x} produced candidate {candidate}"
            );
            if candidate <= n as Value {
                let candidate = candidate as usize;
                if best.is_none_or(|(b, _)| candidate < b) {
                    best = Some((candidate, x));
                }
            }
        }
    }

    match best {
        None => ConnectivityResult::complete(n),
        Some((kappa, _)) if mode == WitnessMode::Skip => ConnectivityResult {
            kappa,
            witness: None,
            achieved_cut: None,
        },
        Some((kappa, x)) => {
            let state = SweepState::at(dg, &pi, x);
            let (value, y) = min_nxy_for_x(dg, &pi, &bounds, &state)
                .expect("minimizing gap has a separating line");
            assert_eq!(value, kappa, "tree sweep and direct scan disagree at gap {x}");
            ConnectivityResult::from_line(dg, kappa, CutLine::new(x, y), mode)
        }
    }
}
