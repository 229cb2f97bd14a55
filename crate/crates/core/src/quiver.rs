//! The McKay quiver of a grading pair and its lattice/toroidal presentations.
//!
//! Vertices are the group elements; each vertex g carries arrows g → a⁻¹g
//! (decorated u) and g → b⁻¹g (decorated v), and one relation identifying the
//! u·u and v·v paths out of g (both end at a⁻²g = b⁻²g).
//!
//! Unfolded onto the quarter-plane with south/east arrows, decorations
//! alternate checkerboard-fashion. The convention is u-first-east at the
//! root: the east arrow at (r, c) is u when r + c is even, v when odd, and
//! south arrows are the opposite. The top row rooted at the identity then
//! reads 1, a⁻¹, b⁻¹a⁻¹, a⁻¹b⁻¹a⁻¹, …, and the labeling is 2m-periodic in
//! both directions where m = |ab|.

use crate::coaction::CoactionPair;
use crate::group::Element;
use serde_json::json;

/// Arrow decoration: the generator of the degree-one part it stands for.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Decoration {
    U,
    V,
}

impl Decoration {
    pub fn as_str(self) -> &'static str {
        match self {
            Decoration::U => "u",
            Decoration::V => "v",
        }
    }

    /// Decoration of the east arrow at lattice position (r, c).
    pub fn east_at(r: usize, c: usize) -> Decoration {
        if (r + c).is_multiple_of(2) {
            Decoration::U
        } else {
            Decoration::V
        }
    }

    /// Decoration of the south arrow at lattice position (r, c).
    pub fn south_at(r: usize, c: usize) -> Decoration {
        match Decoration::east_at(r, c) {
            Decoration::U => Decoration::V,
            Decoration::V => Decoration::U,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub source: Element,
    pub target: Element,
    pub decoration: Decoration,
}

/// The relation at a vertex: the two length-2 paths tracing u² and v².
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuiverRelation {
    pub source: Element,
    pub u_mid: Element,
    pub v_mid: Element,
    pub target: Element,
}

#[derive(Clone, Debug)]
pub struct McKayQuiver {
    pub vertex_count: usize,
    /// Ordered by source vertex, u before v.
    pub arrows: Vec<Arrow>,
    /// One per vertex, in vertex order.
    pub relations: Vec<QuiverRelation>,
}

pub fn build_mckay_quiver(pair: &CoactionPair) -> McKayQuiver {
    let g = pair.group();
    let a_inv = g.inv(pair.a());
    let b_inv = g.inv(pair.b());
    let mut arrows = Vec::with_capacity(2 * g.order());
    let mut relations = Vec::with_capacity(g.order());
    for v in g.elements() {
        let ua = g.mul(a_inv, v);
        let vb = g.mul(b_inv, v);
        arrows.push(Arrow {
            source: v,
            target: ua,
            decoration: Decoration::U,
        });
        arrows.push(Arrow {
            source: v,
            target: vb,
            decoration: Decoration::V,
        });
        let target = g.mul(a_inv, ua);
        debug_assert_eq!(
            target,
            g.mul(b_inv, vb),
            "a^2 = b^2 forces a common endpoint"
        );
        relations.push(QuiverRelation {
            source: v,
            u_mid: ua,
            v_mid: vb,
            target,
        });
    }
    McKayQuiver {
        vertex_count: g.order(),
        arrows,
        relations,
    }
}

/// The group element at position (r, c) of the lattice rooted at `start`,
/// with u-first-east decoration parity at the root. Coordinates may be
/// arbitrary; the labeling is 2m-periodic in both directions.
pub fn lattice_label(pair: &CoactionPair, start: Element, r: usize, c: usize) -> Element {
    let g = pair.group();
    let period = pair.period();
    let a_inv = g.inv(pair.a());
    let b_inv = g.inv(pair.b());
    let r = r % period;
    let c = c % period;
    let mut label = start;
    for t in 0..c {
        let step = match Decoration::east_at(0, t) {
            Decoration::U => a_inv,
            Decoration::V => b_inv,
        };
        label = g.mul(step, label);
    }
    for t in 0..r {
        let step = match Decoration::south_at(t, c) {
            Decoration::U => a_inv,
            Decoration::V => b_inv,
        };
        label = g.mul(step, label);
    }
    label
}

/// The 2m × 2m fundamental domain of the lattice rooted at the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToroidalLattice {
    pub period: usize,
    /// `labels[r][c]` for 0 ≤ r, c < period.
    pub labels: Vec<Vec<Element>>,
}

impl ToroidalLattice {
    pub fn label(&self, r: usize, c: usize) -> Element {
        self.labels[r % self.period][c % self.period]
    }

    pub fn row_contains(&self, r: usize, target: Element) -> bool {
        self.labels[r].contains(&target)
    }

    pub fn column_contains(&self, c: usize, target: Element) -> bool {
        self.labels.iter().any(|row| row[c] == target)
    }
}

pub fn toroidal_grid(pair: &CoactionPair) -> ToroidalLattice {
    let g = pair.group();
    let period = pair.period();
    let a_inv = g.inv(pair.a());
    let b_inv = g.inv(pair.b());
    let mut labels = Vec::with_capacity(period);
    let mut row = Vec::with_capacity(period);
    let mut label = g.identity();
    for c in 0..period {
        row.push(label);
        let step = match Decoration::east_at(0, c) {
            Decoration::U => a_inv,
            Decoration::V => b_inv,
        };
        label = g.mul(step, label);
    }
    labels.push(row);
    for r in 0..period - 1 {
        let prev = &labels[r];
        let mut row = Vec::with_capacity(period);
        for (c, &above) in prev.iter().enumerate() {
            let step = match Decoration::south_at(r, c) {
                Decoration::U => a_inv,
                Decoration::V => b_inv,
            };
            row.push(g.mul(step, above));
        }
        labels.push(row);
    }
    ToroidalLattice { period, labels }
}

/// Grid text: one line per row, names single-space separated, each line
/// newline-terminated, no trailing spaces. With `closed`, the first row and
/// column are repeated at the far side, as in hand-drawn pictures.
pub fn export_grid(t: &ToroidalLattice, names: &[String], closed: bool) -> String {
    let size = if closed { t.period + 1 } else { t.period };
    let mut out = String::new();
    for r in 0..size {
        for c in 0..size {
            if c > 0 {
                out.push(' ');
            }
            out.push_str(&names[t.label(r, c)]);
        }
        out.push('\n');
    }
    out
}

/// JSON form of the toroidal labeling.
pub fn export_torus_json(t: &ToroidalLattice, names: &[String], closed: bool) -> serde_json::Value {
    let size = if closed { t.period + 1 } else { t.period };
    let labels: Vec<Vec<&str>> = (0..size)
        .map(|r| (0..size).map(|c| names[t.label(r, c)].as_str()).collect())
        .collect();
    json!({ "period": t.period, "labels": labels })
}

/// DOT text for the finite quiver: one node statement per vertex, one edge
/// statement per arrow, decorations as edge attributes.
pub fn export_dot(q: &McKayQuiver, names: &[String]) -> String {
    let mut out = String::from("digraph mckay {\n");
    for name in names.iter().take(q.vertex_count) {
        out.push_str(&format!("  \"{name}\";\n"));
    }
    for arrow in &q.arrows {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [decoration=\"{}\"];\n",
            names[arrow.source],
            names[arrow.target],
            arrow.decoration.as_str()
        ));
    }
    out.push_str("}\n");
    out
}

/// Default display names for a pair's group, identity rendered "1".
pub fn display_names(pair: &CoactionPair) -> Vec<String> {
    pair.group()
        .elements()
        .map(|x| pair.group().name(x).to_string())
        .collect()
}
