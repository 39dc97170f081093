//! Following arcs through resolved crossings.

use super::arrangement::{Arrangement, U_IN, U_OUT, V_IN, V_OUT};
use crate::error::{Error, Result};
use crate::torus::{det2, IntVec2};

/// How one crossing is resolved: which port is glued to which.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Resolution {
    /// `U_IN–V_OUT`, `V_IN–U_OUT`: the smoothing that follows the reference
    /// directions of both families.
    Along,
    /// `U_IN–V_IN`, `U_OUT–V_OUT`.
    Against,
}

impl Resolution {
    pub(crate) fn partner(self, port: u8) -> u8 {
        match (self, port) {
            (Resolution::Along, U_IN) => V_OUT,
            (Resolution::Along, V_OUT) => U_IN,
            (Resolution::Along, V_IN) => U_OUT,
            (Resolution::Along, U_OUT) => V_IN,
            (Resolution::Against, U_IN) => V_IN,
            (Resolution::Against, V_IN) => U_IN,
            (Resolution::Against, U_OUT) => V_OUT,
            (Resolution::Against, V_OUT) => U_OUT,
            _ => unreachable!("port {port}"),
        }
    }
}

/// A closed component after resolving every crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TracedComponent {
    /// Homology class, in the traversal direction.
    pub homology: IntVec2,
    /// Turning number relative to the constant framing of the torus.
    pub winding: i64,
    pub arc_count: usize,
}

impl TracedComponent {
    pub fn is_trivial(&self) -> bool {
        self.homology.is_zero()
    }
}

/// Traces every component of the resolved diagram.
///
/// If `starts` is given, tracing only begins at those `(crossing, port)`
/// pairs, which lets oriented callers traverse each component in its own
/// orientation. Every port must still be covered.
pub fn trace(
    arr: &Arrangement,
    resolution: &[Resolution],
    starts: Option<&dyn Fn(usize) -> [u8; 2]>,
) -> Result<Vec<TracedComponent>> {
    let k = arr.crossing_count();
    if resolution.len() != k {
        return Err(Error::Internal(format!(
            "state has {} entries for {k} crossings",
            resolution.len()
        )));
    }
    let mut visited = vec![[false; 4]; k];
    let mut out = Vec::new();
    for c0 in 0..k {
        let ports = match starts {
            Some(f) => f(c0).to_vec(),
            None => vec![U_IN, U_OUT, V_IN, V_OUT],
        };
        for p0 in ports {
            if visited[c0][p0 as usize] {
                continue;
            }
            out.push(trace_one(arr, resolution, &mut visited, c0, p0)?);
        }
    }
    if visited.iter().flatten().any(|v| !v) {
        return Err(Error::Internal("tracing left ports unvisited".into()));
    }
    Ok(out)
}

fn trace_one(
    arr: &Arrangement,
    resolution: &[Resolution],
    visited: &mut [[bool; 4]],
    c0: usize,
    p0: u8,
) -> Result<TracedComponent> {
    let scale = arr.scale();
    let (mut c, mut p) = (c0, p0);
    let mut total = IntVec2::ZERO;
    let mut quarter_turns = 0i64;
    let mut arcs = 0usize;
    loop {
        visited[c][p as usize] = true;
        let heading = arr.leave_direction(p);
        let (c2, p2, disp) = arr.follow(c, p);
        total = total + disp;
        arcs += 1;
        if visited[c2][p2 as usize] {
            return Err(Error::Internal("arc end visited twice".into()));
        }
        visited[c2][p2 as usize] = true;
        let q = resolution[c2].partner(p2);
        quarter_turns += det2(heading, arr.leave_direction(q)).signum();
        c = c2;
        p = q;
        if (c, p) == (c0, p0) {
            break;
        }
        if visited[c][p as usize] {
            return Err(Error::Internal("component re-entered mid-way".into()));
        }
    }
    if total.a % scale != 0 || total.b % scale != 0 {
        return Err(Error::Internal(format!("non-integral homology {total}/{scale}")));
    }
    if quarter_turns % 4 != 0 {
        return Err(Error::Internal(format!("turn sum {quarter_turns} is not a full turn")));
    }
    let comp = TracedComponent {
        homology: IntVec2::new(total.a / scale, total.b / scale),
        winding: quarter_turns / 4,
        arc_count: arcs,
    };
    let ok = if comp.is_trivial() {
        comp.winding.abs() == 1
    } else {
        comp.winding == 0 && comp.homology.is_primitive()
    };
    if !ok {
        return Err(Error::Internal(format!(
            "component with homology {} has winding {}",
            comp.homology, comp.winding
        )));
    }
    Ok(comp)
}
