//! Two multicurve families superposed in generic position on the torus.
//!
//! Copies are straight lines on `R²/Z²`. Copy `i` of the over family with
//! primitive direction `P` is the line `{x : det(P, x) ≡ i/(2n)}`, copy `j`
//! of the under family with direction `R` is `{x : det(R, x) ≡ j/(2m)}`, so
//! copy 0 sits innermost and the rest ascend outward in a fixed order.
//! Line parameters of every crossing are exact rationals with the common
//! denominator `scale = 4·n·m·|det(P,R)|`, stored as scaled integers.

use crate::error::{Error, Result};
use crate::torus::{det2, split_vec, unimodular_partner, IntVec2};

/// Ports of a crossing: the four ends of the two strands meeting there.
/// `*_IN` is the end reached by travelling along the family's reference
/// direction, `*_OUT` the end leaving in that direction.
pub const U_IN: u8 = 0;
pub const U_OUT: u8 = 1;
pub const V_IN: u8 = 2;
pub const V_OUT: u8 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub u_copy: u32,
    pub v_copy: u32,
    /// Parameter along the over copy, in `[0, scale)`.
    pub t: i64,
    /// Parameter along the under copy, in `[0, scale)`.
    pub s: i64,
}

#[derive(Clone, Debug)]
pub struct Arrangement {
    u: IntVec2,
    v: IntVec2,
    u_prim: IntVec2,
    v_prim: IntVec2,
    u_copies: u64,
    v_copies: u64,
    scale: i64,
    crossings: Vec<Crossing>,
    u_next: Vec<usize>,
    u_prev: Vec<usize>,
    v_next: Vec<usize>,
    v_prev: Vec<usize>,
    /// Scaled displacement of the over arc from `c` to `u_next[c]`.
    u_arc: Vec<IntVec2>,
    /// Scaled displacement of the under arc from `c` to `v_next[c]`.
    v_arc: Vec<IntVec2>,
}

pub const DEFAULT_BUDGET: u32 = 24;

impl Arrangement {
    /// Superposes the multicurve of class `u` over that of class `v`.
    pub fn build(u: IntVec2, v: IntVec2, budget: u32) -> Result<Self> {
        let d = det2(u, v);
        if d == 0 {
            return Err(Error::ParallelClasses { u, v });
        }
        let count = d.unsigned_abs();
        if count > budget as u64 {
            return Err(Error::BudgetExceeded {
                crossings: count,
                budget,
            });
        }
        let (n, p) = split_vec(u).expect("non-zero");
        let (m, r) = split_vec(v).expect("non-zero");
        let t_u = unimodular_partner(p);
        let t_v = unimodular_partner(r);
        let d_rp = det2(r, p);
        let c_ru = det2(r, t_u);
        let (ni, mi) = (n as i64, m as i64);
        let scale = 4 * ni * mi * d_rp.abs();
        let sgn = d_rp.signum();

        let mut crossings = Vec::with_capacity(count as usize);
        for i in 0..ni {
            for j in 0..mi {
                for k in 0..d_rp.abs() {
                    let t = (sgn * (2 * ni * j - 2 * mi * i * c_ru + 4 * ni * mi * k)).rem_euclid(scale);
                    // Scaled point on copy i, then its coordinates in the (R, T_v) frame.
                    let a_i = 2 * mi * d_rp.abs() * i;
                    let b_j = 2 * ni * d_rp.abs() * j;
                    let x = IntVec2::new(a_i * t_u.a + t * p.a, a_i * t_u.b + t * p.b);
                    let rel = x - b_j * t_v;
                    if det2(r, rel).rem_euclid(scale) != 0 {
                        return Err(Error::Internal(format!(
                            "crossing {i},{j},{k} is off the under copy"
                        )));
                    }
                    let s = det2(rel, t_v).rem_euclid(scale);
                    crossings.push(Crossing {
                        u_copy: i as u32,
                        v_copy: j as u32,
                        t,
                        s,
                    });
                }
            }
        }

        let (u_next, u_prev, u_arc) = link(&crossings, ni, p, scale, |c| (c.u_copy, c.t));
        let (v_next, v_prev, v_arc) = link(&crossings, mi, r, scale, |c| (c.v_copy, c.s));
        let arr = Arrangement {
            u,
            v,
            u_prim: p,
            v_prim: r,
            u_copies: n,
            v_copies: m,
            scale,
            crossings,
            u_next,
            u_prev,
            v_next,
            v_prev,
            u_arc,
            v_arc,
        };
        arr.check()?;
        Ok(arr)
    }

    /// Re-validates the structural invariants; `build` already calls this.
    pub fn check(&self) -> Result<()> {
        let k = self.crossings.len();
        if k as u64 != det2(self.u, self.v).unsigned_abs() {
            return Err(Error::Internal("crossing count differs from |det|".into()));
        }
        let mut on_over = std::collections::HashSet::new();
        let mut on_under = std::collections::HashSet::new();
        for c in &self.crossings {
            if !on_over.insert((c.u_copy, c.t)) || !on_under.insert((c.v_copy, c.s)) {
                return Err(Error::Internal("two crossings share a position".into()));
            }
        }
        for (next, arc, prim, copies) in [
            (&self.u_next, &self.u_arc, self.u_prim, self.u_copies),
            (&self.v_next, &self.v_arc, self.v_prim, self.v_copies),
        ] {
            let mut visited = vec![false; k];
            let mut cycles = 0;
            for start in 0..k {
                if visited[start] {
                    continue;
                }
                cycles += 1;
                let mut total = IntVec2::ZERO;
                let mut c = start;
                while !visited[c] {
                    visited[c] = true;
                    total = total + arc[c];
                    c = next[c];
                }
                if c != start || total != self.scale * prim {
                    return Err(Error::Internal(format!(
                        "component through crossing {start} does not close up to {prim}"
                    )));
                }
            }
            if cycles != copies {
                return Err(Error::Internal("family has the wrong number of components".into()));
            }
        }
        Ok(())
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn over(&self) -> IntVec2 {
        self.u
    }

    pub fn under(&self) -> IntVec2 {
        self.v
    }

    pub fn over_primitive(&self) -> IntVec2 {
        self.u_prim
    }

    pub fn under_primitive(&self) -> IntVec2 {
        self.v_prim
    }

    pub fn over_copies(&self) -> u64 {
        self.u_copies
    }

    pub fn under_copies(&self) -> u64 {
        self.v_copies
    }

    /// Common denominator of arc displacements.
    pub fn scale(&self) -> i64 {
        self.scale
    }

    /// Sign of `det(P, R)` for the reference directions; fixes the chart.
    pub fn chart_sign(&self) -> i64 {
        det2(self.u_prim, self.v_prim).signum()
    }

    pub fn over_successor(&self, c: usize) -> usize {
        self.u_next[c]
    }

    pub fn under_successor(&self, c: usize) -> usize {
        self.v_next[c]
    }

    /// Number of arcs (crossings) on the component of the over family
    /// through the given copy.
    pub fn arcs_per_over_copy(&self) -> usize {
        self.crossings.len() / self.u_copies as usize
    }

    pub fn arcs_per_under_copy(&self) -> usize {
        self.crossings.len() / self.v_copies as usize
    }

    /// Scaled displacement of the over arc leaving `c`.
    pub fn over_arc(&self, c: usize) -> IntVec2 {
        self.u_arc[c]
    }

    pub fn under_arc(&self, c: usize) -> IntVec2 {
        self.v_arc[c]
    }

    /// Leaves crossing `c` through `port` and follows the arc to the next
    /// crossing: returns the arrival crossing and port and the scaled
    /// displacement travelled.
    pub(crate) fn follow(&self, c: usize, port: u8) -> (usize, u8, IntVec2) {
        match port {
            U_OUT => (self.u_next[c], U_IN, self.u_arc[c]),
            U_IN => {
                let b = self.u_prev[c];
                (b, U_OUT, -self.u_arc[b])
            }
            V_OUT => (self.v_next[c], V_IN, self.v_arc[c]),
            V_IN => {
                let b = self.v_prev[c];
                (b, V_OUT, -self.v_arc[b])
            }
            _ => unreachable!("port {port}"),
        }
    }

    /// Direction of travel when leaving a crossing through `port`.
    pub(crate) fn leave_direction(&self, port: u8) -> IntVec2 {
        match port {
            U_OUT => self.u_prim,
            U_IN => -self.u_prim,
            V_OUT => self.v_prim,
            V_IN => -self.v_prim,
            _ => unreachable!("port {port}"),
        }
    }
}

type Links = (Vec<usize>, Vec<usize>, Vec<IntVec2>);

fn link(
    crossings: &[Crossing],
    copies: i64,
    prim: IntVec2,
    scale: i64,
    key: impl Fn(&Crossing) -> (u32, i64),
) -> Links {
    let k = crossings.len();
    let mut next = vec![0; k];
    let mut prev = vec![0; k];
    let mut arc = vec![IntVec2::ZERO; k];
    for copy in 0..copies as u32 {
        let mut on_copy: Vec<(i64, usize)> = crossings
            .iter()
            .enumerate()
            .filter(|(_, c)| key(c).0 == copy)
            .map(|(idx, c)| (key(c).1, idx))
            .collect();
        on_copy.sort_unstable();
        for w in 0..on_copy.len() {
            let (t0, a) = on_copy[w];
            let (t1, b) = on_copy[(w + 1) % on_copy.len()];
            let mut dt = (t1 - t0).rem_euclid(scale);
            if dt == 0 {
                dt = scale;
            }
            next[a] = b;
            prev[b] = a;
            arc[a] = dt * prim;
        }
    }
    (next, prev, arc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(a: i64, b: i64) -> IntVec2 {
        IntVec2::new(a, b)
    }

    #[test]
    fn single_crossing() {
        let arr = Arrangement::build(v(1, 0), v(0, 1), DEFAULT_BUDGET).unwrap();
        assert_eq!(arr.crossing_count(), 1);
        assert_eq!(arr.over_copies(), 1);
        assert_eq!(arr.over_arc(0), arr.scale() * v(1, 0));
        assert_eq!(arr.under_arc(0), arr.scale() * v(0, 1));
    }

    #[test]
    fn two_copies_over_one() {
        let arr = Arrangement::build(v(2, 0), v(0, 1), DEFAULT_BUDGET).unwrap();
        assert_eq!(arr.crossing_count(), 2);
        assert_eq!(arr.over_copies(), 2);
        assert_eq!(arr.arcs_per_over_copy(), 1);
        for c in 0..2 {
            assert_eq!(arr.over_successor(c), c);
        }
        assert_eq!(arr.arcs_per_under_copy(), 2);
    }

    #[test]
    fn three_arc_components() {
        let arr = Arrangement::build(v(1, 2), v(2, 1), DEFAULT_BUDGET).unwrap();
        assert_eq!(arr.crossing_count(), 3);
        assert_eq!(arr.arcs_per_over_copy(), 3);
        assert_eq!(arr.arcs_per_under_copy(), 3);
        // Equally spaced along a single copy: each arc is a third of (1,2).
        for c in 0..3 {
            assert_eq!(3 * arr.over_arc(c), arr.scale() * v(1, 2));
        }
    }

    #[test]
    fn counts_match_determinant() {
        for a in -3..=3 {
            for b in -3..=3 {
                for c in -3..=3 {
                    for d in -3..=3 {
                        let (u, w) = (v(a, b), v(c, d));
                        let det = det2(u, w);
                        if det == 0 || det.abs() > 12 {
                            continue;
                        }
                        let arr = Arrangement::build(u, w, DEFAULT_BUDGET).unwrap();
                        assert_eq!(arr.crossing_count() as i64, det.abs(), "{u} over {w}");
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_parallel_and_over_budget() {
        assert!(matches!(
            Arrangement::build(v(1, 2), v(2, 4), DEFAULT_BUDGET),
            Err(Error::ParallelClasses { .. })
        ));
        assert_eq!(
            Arrangement::build(v(5, 0), v(0, 5), 24).unwrap_err(),
            Error::BudgetExceeded { crossings: 25, budget: 24 }
        );
    }
}
