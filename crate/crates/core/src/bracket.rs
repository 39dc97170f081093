//! Kauffman bracket of planar link diagrams given as PD codes.
//!
//! A crossing `X(i,j,k,l)` lists its four edge labels counterclockwise,
//! starting from the incoming under-strand. The `A`-smoothing joins `i` with
//! `j` and `k` with `l`; the `B`-smoothing joins `i` with `l` and `j` with
//! `k`. Every circle contributes `δ = -A^2 - A^-2`, including the last one.
//!
//! Crossingless components cannot be named by edge labels, so a diagram also
//! carries a count of free loops, written `O` in text and `"loops"` in JSON.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::text::Cursor;

pub const DEFAULT_BUDGET: u32 = 24;

/// A position on the diagram: crossing index and slot `0..4`.
pub type Slot = (usize, u8);

/// A planar diagram in PD notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdCode {
    crossings: Vec<[u32; 4]>,
    loops: u32,
    /// `incoming[c][p]` is true when the edge at slot `p` enters crossing `c`.
    incoming: Vec<[bool; 4]>,
}

/// One step of a face walk: leave `from` along `label`, arrive at `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Traversal {
    pub label: u32,
    pub from: Slot,
    pub to: Slot,
}

impl PdCode {
    pub fn new(crossings: Vec<[u32; 4]>, loops: u32) -> Result<Self> {
        let slots = slot_map(&crossings)?;
        let incoming = orient(&crossings, &slots)?;
        Ok(PdCode {
            crossings,
            loops,
            incoming,
        })
    }

    pub fn unknot() -> Self {
        PdCode {
            crossings: Vec::new(),
            loops: 1,
            incoming: Vec::new(),
        }
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn loops(&self) -> u32 {
        self.loops
    }

    pub fn is_incoming(&self, (c, p): Slot) -> bool {
        self.incoming[c][p as usize]
    }

    fn max_label(&self) -> u32 {
        self.crossings.iter().flatten().copied().max().unwrap_or(0)
    }

    fn slots(&self) -> HashMap<u32, [Slot; 2]> {
        slot_map(&self.crossings).expect("validated on construction")
    }

    /// Sum of crossing signs. A crossing is positive when the over-strand
    /// enters at slot 3.
    pub fn writhe(&self) -> i64 {
        self.incoming
            .iter()
            .map(|inc| if inc[3] { 1 } else { -1 })
            .sum()
    }

    /// The boundary walks of the complementary regions, each keeping its
    /// region on the left.
    pub fn faces(&self) -> Vec<Vec<Traversal>> {
        let slots = self.slots();
        let other = |(c, p): Slot| -> Slot {
            let [s, t] = slots[&self.crossings[c][p as usize]];
            if s == (c, p) {
                t
            } else {
                s
            }
        };
        let mut seen = vec![[false; 4]; self.crossings.len()];
        let mut faces = Vec::new();
        for c0 in 0..self.crossings.len() {
            for p0 in 0..4u8 {
                if seen[c0][p0 as usize] {
                    continue;
                }
                let mut walk = Vec::new();
                let mut from = (c0, p0);
                while !seen[from.0][from.1 as usize] {
                    seen[from.0][from.1 as usize] = true;
                    let to = other(from);
                    walk.push(Traversal {
                        label: self.crossings[from.0][from.1 as usize],
                        from,
                        to,
                    });
                    from = (to.0, (to.1 + 3) % 4);
                }
                faces.push(walk);
            }
        }
        faces
    }

    /// Number of connected pieces that contain at least one crossing.
    fn crossing_components(&self) -> usize {
        let n = self.crossings.len();
        let mut uf = UnionFind::<usize>::new(n);
        for [s, t] in self.slots().values() {
            uf.union(s.0, t.0);
        }
        let mut roots: Vec<usize> = (0..n).map(|c| uf.find(c)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }

    /// Euler characteristic check: every piece with crossings must be a
    /// sphere diagram.
    pub fn is_planar(&self) -> bool {
        let n = self.crossings.len();
        n == 0 || self.faces().len() == n + 2 * self.crossing_components()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let mut crossings = Vec::new();
        let mut loops = 0;
        while !cur.at_end() {
            if cur.eat(b'O') {
                loops += 1;
            } else if cur.eat(b'X') {
                cur.expect(b'(')?;
                let mut x = [0u32; 4];
                for (i, slot) in x.iter_mut().enumerate() {
                    if i > 0 {
                        cur.expect(b',')?;
                    }
                    let pos = cur.pos();
                    let v = cur.signed_i64()?;
                    *slot = u32::try_from(v)
                        .ok()
                        .filter(|&v| v > 0)
                        .ok_or_else(|| Error::parse(pos, "edge labels must be positive"))?;
                }
                cur.expect(b')')?;
                crossings.push(x);
            } else {
                return Err(cur.error("expected 'X(i,j,k,l)' or 'O'"));
            }
            cur.eat(b',');
        }
        Self::new(crossings, loops)
    }

    pub fn to_json(&self) -> Value {
        json!({ "crossings": self.crossings, "loops": self.loops })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Json(format!("PD code: {m}"));
        let list = v
            .get("crossings")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"crossings\" array"))?;
        let mut crossings = Vec::with_capacity(list.len());
        for x in list {
            let labels = x
                .as_array()
                .filter(|a| a.len() == 4)
                .ok_or_else(|| bad("each crossing needs four labels"))?;
            let mut out = [0u32; 4];
            for (o, l) in out.iter_mut().zip(labels) {
                *o = l
                    .as_u64()
                    .and_then(|l| u32::try_from(l).ok())
                    .filter(|&l| l > 0)
                    .ok_or_else(|| bad("labels must be positive integers"))?;
            }
            crossings.push(out);
        }
        let loops = match v.get("loops") {
            None => 0,
            Some(l) => l
                .as_u64()
                .and_then(|l| u32::try_from(l).ok())
                .ok_or_else(|| bad("\"loops\" must be a non-negative integer"))?,
        };
        Self::new(crossings, loops)
    }
}

impl FromStr for PdCode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .crossings
            .iter()
            .map(|[i, j, k, l]| format!("X({i},{j},{k},{l})"))
            .collect();
        parts.extend((0..self.loops).map(|_| "O".to_string()));
        write!(f, "{}", parts.join(" "))
    }
}

fn slot_map(crossings: &[[u32; 4]]) -> Result<HashMap<u32, [Slot; 2]>> {
    let mut seen: HashMap<u32, Vec<Slot>> = HashMap::new();
    for (c, x) in crossings.iter().enumerate() {
        for (p, &l) in x.iter().enumerate() {
            if l == 0 {
                return Err(Error::InvalidPd("edge label 0".into()));
            }
            seen.entry(l).or_default().push((c, p as u8));
        }
    }
    seen.into_iter()
        .map(|(l, s)| match s[..] {
            [a, b] => Ok((l, [a, b])),
            _ => Err(Error::InvalidPd(format!(
                "edge {l} occurs {} times, expected twice",
                s.len()
            ))),
        })
        .collect()
}

/// Propagates edge directions from the under-strands. Components that are
/// never under get an arbitrary direction.
fn orient(crossings: &[[u32; 4]], slots: &HashMap<u32, [Slot; 2]>) -> Result<Vec<[bool; 4]>> {
    let n = crossings.len();
    let mut dir: Vec<[Option<bool>; 4]> = vec![[None; 4]; n];
    let mut stack: Vec<(Slot, bool)> = Vec::new();
    for c in 0..n {
        stack.push(((c, 0), true));
        stack.push(((c, 2), false));
    }
    let mut next_free = 0usize;
    loop {
        while let Some(((c, p), inc)) = stack.pop() {
            match dir[c][p as usize] {
                Some(d) if d == inc => continue,
                Some(_) => {
                    return Err(Error::InvalidPd(format!(
                        "inconsistent strand orientation at edge {}",
                        crossings[c][p as usize]
                    )))
                }
                None => dir[c][p as usize] = Some(inc),
            }
            // The strand passes straight through.
            stack.push(((c, (p + 2) % 4), !inc));
            let [s, t] = slots[&crossings[c][p as usize]];
            let far = if s == (c, p) { t } else { s };
            stack.push((far, !inc));
        }
        while next_free < 4 * n && dir[next_free / 4][next_free % 4].is_some() {
            next_free += 1;
        }
        if next_free == 4 * n {
            break;
        }
        stack.push(((next_free / 4, (next_free % 4) as u8), true));
    }
    Ok(dir
        .into_iter()
        .map(|d| d.map(|x| x.expect("every slot oriented")))
        .collect())
}

/// Circles left after smoothing every crossing according to `mask`
/// (bit set means the `B`-smoothing).
pub fn circle_count(d: &PdCode, mask: u64) -> u32 {
    let slots = d.slots();
    let index: HashMap<u32, usize> = slots.keys().enumerate().map(|(i, &l)| (l, i)).collect();
    count_with(d, &index, mask)
}

fn count_with(d: &PdCode, index: &HashMap<u32, usize>, mask: u64) -> u32 {
    let mut uf = UnionFind::<usize>::new(index.len());
    for (c, &[i, j, k, l]) in d.crossings.iter().enumerate() {
        let pairs = if mask >> c & 1 == 0 {
            [(i, j), (k, l)]
        } else {
            [(i, l), (j, k)]
        };
        for (x, y) in pairs {
            uf.union(index[&x], index[&y]);
        }
    }
    let mut roots: Vec<usize> = (0..index.len()).map(|e| uf.find(e)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len() as u32 + d.loops
}

pub fn kauffman_bracket(d: &PdCode) -> Result<LaurentPoly> {
    kauffman_bracket_with_budget(d, DEFAULT_BUDGET)
}

pub fn kauffman_bracket_with_budget(d: &PdCode, budget: u32) -> Result<LaurentPoly> {
    let k = d.crossing_count();
    if k as u64 > budget as u64 || k >= 64 {
        return Err(Error::BudgetExceeded {
            crossings: k as u64,
            budget,
        });
    }
    let index: HashMap<u32, usize> = d.slots().keys().enumerate().map(|(i, &l)| (l, i)).collect();
    let total = 1u64 << k;
    let chunk = 1u64 << 10;
    let tally = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|i| {
            let mut t: BTreeMap<(i64, u32), u64> = BTreeMap::new();
            for mask in i * chunk..((i + 1) * chunk).min(total) {
                let e = k as i64 - 2 * mask.count_ones() as i64;
                *t.entry((e, count_with(d, &index, mask))).or_default() += 1;
            }
            t
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (key, n) in b {
                *a.entry(key).or_default() += n;
            }
            a
        });
    let delta = LaurentPoly::delta();
    let mut out = LaurentPoly::zero();
    for ((e, circles), n) in tally {
        out = out + delta.pow(circles).shift(e).scale(&BigInt::from(n));
    }
    Ok(out)
}

/// Swaps over and under at every crossing.
pub fn mirror(d: &PdCode) -> PdCode {
    let mut crossings = Vec::with_capacity(d.crossings.len());
    let mut incoming = Vec::with_capacity(d.crossings.len());
    for (&[i, j, k, l], inc) in d.crossings.iter().zip(&d.incoming) {
        if inc[1] {
            crossings.push([j, k, l, i]);
            incoming.push([inc[1], inc[2], inc[3], inc[0]]);
        } else {
            crossings.push([l, i, j, k]);
            incoming.push([inc[3], inc[0], inc[1], inc[2]]);
        }
    }
    PdCode {
        crossings,
        loops: d.loops,
        incoming,
    }
}

/// Places `b` beside `a` with no crossings between them.
pub fn disjoint_union(a: &PdCode, b: &PdCode) -> PdCode {
    let shift = a.max_label();
    let mut crossings = a.crossings.clone();
    crossings.extend(b.crossings.iter().map(|x| x.map(|l| l + shift)));
    let mut incoming = a.incoming.clone();
    incoming.extend_from_slice(&b.incoming);
    PdCode {
        crossings,
        loops: a.loops + b.loops,
        incoming,
    }
}

/// Pushes a finger of edge `a` under edge `b`, where both bound the same
/// region and are given as steps of its face walk. Adds two crossings.
pub fn reidemeister_two(d: &PdCode, a: Traversal, b: Traversal) -> Result<PdCode> {
    if a.label == b.label {
        return Err(Error::InvalidPd("a finger move needs two distinct edges".into()));
    }
    if !d.faces().iter().any(|f| f.contains(&a) && f.contains(&b)) {
        return Err(Error::InvalidPd(format!(
            "edges {} and {} do not share a region",
            a.label, b.label
        )));
    }
    let m = d.max_label();
    let [a1, a2, a3, b1, b2, b3] = [m + 1, m + 2, m + 3, m + 4, m + 5, m + 6];
    let mut crossings = d.crossings.clone();
    let mut set = |(c, p): Slot, l: u32| crossings[c][p as usize] = l;
    set(a.from, a1);
    set(a.to, a3);
    set(b.from, b1);
    set(b.to, b3);
    // `a` runs along its walk when it leaves the crossing it is walked from.
    let forward = !d.is_incoming(a.from);
    let (c1, c2) = if forward {
        ([a2, b2, a3, b1], [a1, b2, a2, b3])
    } else {
        ([a3, b1, a2, b2], [a2, b3, a1, b2])
    };
    crossings.push(c1);
    crossings.push(c2);
    PdCode::new(crossings, d.loops)
}

/// `T(2,n)` torus knot or link as the closure of the braid `σ^n`.
pub fn torus_two(n: u32) -> PdCode {
    let m = 2 * n;
    let wrap = |x: u32| (x - 1) % m + 1;
    let crossings = (1..=n)
        .map(|i| [2 * i - 1, wrap(2 * i - 1 + n), 2 * i, wrap(2 * i + n)])
        .collect();
    PdCode::new(crossings, 0).expect("torus closure is a valid diagram")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(s: &str) -> PdCode {
        s.parse().unwrap()
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn hopf() {
        let h = pd("X(1,3,2,4) X(3,1,4,2)");
        assert_eq!(kauffman_bracket(&h).unwrap(), lp("A^6 + A^2 + A^-2 + A^-6"));
        assert_eq!(torus_two(2), h);
    }

    #[test]
    fn kinks_carry_framing() {
        let d = LaurentPoly::delta();
        let pos = kauffman_bracket(&pd("X(1,1,2,2)")).unwrap();
        let neg = kauffman_bracket(&pd("X(1,2,2,1)")).unwrap();
        assert_eq!(pos, &LaurentPoly::monomial(-1, 3) * &d);
        assert_eq!(neg, &LaurentPoly::monomial(-1, -3) * &d);
    }

    #[test]
    fn free_loops() {
        let d = LaurentPoly::delta();
        assert_eq!(kauffman_bracket(&pd("O O")).unwrap(), &d * &d);
        assert_eq!(kauffman_bracket(&pd("")).unwrap(), LaurentPoly::one());
        assert_eq!(kauffman_bracket(&PdCode::unknot()).unwrap(), d);
    }

    #[test]
    fn validation() {
        assert!(matches!(PdCode::parse("X(1,2,3,4)"), Err(Error::InvalidPd(_))));
        assert!(matches!(PdCode::parse("X(0,1,1,0)"), Err(Error::Parse { .. })));
        assert!(matches!(PdCode::parse("X(1,2,3,4) X(1,4,3,2)"), Err(Error::InvalidPd(_))));
        assert!(PdCode::parse("Y(1,1,2,2)").is_err());
    }

    #[test]
    fn text_and_json_round_trip() {
        let h = pd("X(1,3,2,4), X(3,1,4,2) O");
        assert_eq!(h.to_string(), "X(1,3,2,4) X(3,1,4,2) O");
        assert_eq!(pd(&h.to_string()), h);
        assert_eq!(PdCode::from_json(&h.to_json()).unwrap(), h);
        let j: Value = serde_json::from_str(r#"{"crossings":[[1,1,2,2]]}"#).unwrap();
        assert_eq!(PdCode::from_json(&j).unwrap(), pd("X(1,1,2,2)"));
    }

    #[test]
    fn mirror_examples() {
        let h = pd("X(1,3,2,4) X(3,1,4,2)");
        let m = mirror(&h);
        assert_ne!(m, h);
        assert_eq!(mirror(&m), h);
        assert_eq!(kauffman_bracket(&m).unwrap(), kauffman_bracket(&h).unwrap().invert_variable());
        assert_eq!(m.writhe(), -h.writhe());
    }

    #[test]
    fn trefoil_jones() {
        // (-A^3)^{-w} <D> / δ at t = A^-4 is the Jones polynomial, which for
        // the left-handed trefoil is t^-1 + t^-3 - t^-4.
        let t = torus_two(3);
        assert_eq!(t.writhe(), -3);
        let f = &LaurentPoly::monomial(-1, 9) * &kauffman_bracket(&t).unwrap();
        assert_eq!(f, &LaurentPoly::delta() * &lp("A^4 + A^12 - A^16"));
    }

    #[test]
    fn planarity_and_faces() {
        for d in [torus_two(2), torus_two(3), torus_two(5), pd("X(1,1,2,2)")] {
            assert!(d.is_planar(), "{d}");
            let steps: usize = d.faces().iter().map(Vec::len).sum();
            assert_eq!(steps, 4 * d.crossing_count());
        }
    }

    #[test]
    fn finger_move_preserves_bracket() {
        let t = torus_two(3);
        let want = kauffman_bracket(&t).unwrap();
        let mut moves = 0;
        for face in t.faces() {
            for a in &face {
                for b in &face {
                    if a.label == b.label {
                        continue;
                    }
                    let r = reidemeister_two(&t, *a, *b).unwrap();
                    assert!(r.is_planar());
                    assert_eq!(r.crossing_count(), 5);
                    assert_eq!(kauffman_bracket(&r).unwrap(), want);
                    moves += 1;
                }
            }
        }
        assert!(moves > 0);
    }

    #[test]
    fn budget() {
        assert!(matches!(
            kauffman_bracket_with_budget(&torus_two(5), 4),
            Err(Error::BudgetExceeded { crossings: 5, budget: 4 })
        ));
    }
}
