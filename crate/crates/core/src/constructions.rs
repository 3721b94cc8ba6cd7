//! The constructive rainbow colorings and the structural recognizers that
//! gate them.
//!
//! Each construction colors the power graph of a group family for which an
//! explicit rainbow coloring is known:
//!
//! * [`general_coloring`]: any group of order >= 3, with
//!   k = max(#maximal involutions, 3);
//! * [`cyclic_coloring`]: cyclic groups of non-prime-power order, k = 2;
//! * [`quaternion_product_coloring`]: groups recognized as Q8 x Z_n with n
//!   odd, k = 2;
//! * [`pnq_coloring`]: groups of order p^n * q (p < q) with cyclic Sylow
//!   p-subgroups intersecting in a subgroup of order p^(n-1) >= q, a unique
//!   Sylow q-subgroup, k = 2.
//!
//! All enumeration orders are fixed (element indices ascending, divisors
//! ascending) so that identical inputs always produce identical colorings.

use std::collections::BTreeSet;

use crate::arith;
use crate::coloring::{ColoringError, EdgeColoring};
use crate::group::Group;
use crate::power_graph::PowerGraph;

/// Partial assignment of colors to edges; every constructive coloring fills
/// classified edges first and pours a default color over the rest.
struct Painter<'a> {
    graph: &'a PowerGraph,
    colors: Vec<Option<u32>>,
}

impl<'a> Painter<'a> {
    fn new(graph: &'a PowerGraph) -> Painter<'a> {
        Painter {
            graph,
            colors: vec![None; graph.edge_count()],
        }
    }

    fn paint(&mut self, u: usize, v: usize, color: u32) {
        let edge = self
            .graph
            .edge_index(u, v)
            .unwrap_or_else(|| panic!("({u}, {v}) is not an edge"));
        assert!(
            self.colors[edge].is_none(),
            "edge ({u}, {v}) classified twice"
        );
        self.colors[edge] = Some(color);
    }

    fn finish(self, k: u32, default: u32) -> Result<EdgeColoring, ColoringError> {
        let colors = self
            .colors
            .into_iter()
            .map(|c| c.unwrap_or(default))
            .collect();
        EdgeColoring::new(k, colors)
    }
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// The backbone edge set of a cyclic subgroup: with the generators of <x>
/// listed by ascending index and the proper nontrivial divisors of |x|
/// ascending, the i-th generator is joined to every element of the i-th
/// divisor order. Well-defined because phi(|x|) >= |D(|x|)| - 2.
pub fn cyclic_backbone_edges(
    group: &Group,
    x: usize,
) -> Result<Vec<(usize, usize)>, ColoringError> {
    let d = group.element_order(x);
    let divs = arith::proper_nontrivial_divisors(d);
    if divs.is_empty() {
        return Err(ColoringError::NotApplicable(format!(
            "element order {d} has no proper nontrivial divisors"
        )));
    }
    let subgroup = group.cyclic_subgroup(x);
    let generators = group.generator_class(x);
    assert!(
        generators.len() >= divs.len(),
        "phi(|x|) >= |D(|x|)| - 2 must hold"
    );
    let mut edges = Vec::new();
    for (i, &di) in divs.iter().enumerate() {
        let xi = generators[i];
        for &y in &subgroup {
            if group.element_order(y) == di {
                edges.push(ordered(xi, y));
            }
        }
    }
    Ok(edges)
}

/// Rainbow coloring with k = max(#maximal involutions, 3) for any group of
/// order at least 3. One class representative is chosen per generator class
/// of order >= 3 (minimum index); representative edges at the identity get
/// color 2, the rest of the class color 1; for even orders the unique
/// involution inside the subgroup is wired crosswise; pendant edges get one
/// fresh color each; everything left is color 3.
pub fn general_coloring(
    group: &Group,
    graph: &PowerGraph,
) -> Result<EdgeColoring, ColoringError> {
    let n = group.order();
    if n < 3 {
        return Err(ColoringError::GroupTooSmall(n));
    }
    let e = group.identity();
    let maximal = group.maximal_involutions();
    let k = (maximal.len() as u32).max(3);
    let mut painter = Painter::new(graph);
    for (j, &z) in maximal.iter().enumerate() {
        painter.paint(e, z, j as u32 + 1);
    }
    let mut classified = vec![false; n];
    for x in 0..n {
        if group.element_order(x) < 3 || classified[x] {
            continue;
        }
        let class = group.generator_class(x);
        for &y in &class {
            classified[y] = true;
        }
        painter.paint(e, x, 2);
        for &y in class.iter().filter(|&&y| y != x) {
            painter.paint(e, y, 1);
        }
        if group.element_order(x).is_multiple_of(2) {
            let involution = group
                .cyclic_subgroup(x)
                .into_iter()
                .find(|&y| group.element_order(y) == 2)
                .expect("even-order cyclic subgroup contains an involution");
            painter.paint(involution, x, 1);
            for &y in class.iter().filter(|&&y| y != x) {
                painter.paint(involution, y, 2);
            }
        }
    }
    painter.finish(k, 3)
}

/// Rainbow 2-coloring of a cyclic group of non-prime-power order: the
/// backbone of the full group gets color 1, everything else color 2.
pub fn cyclic_coloring(
    group: &Group,
    graph: &PowerGraph,
) -> Result<EdgeColoring, ColoringError> {
    let n = group.order() as u64;
    if !group.is_cyclic() {
        return Err(ColoringError::NotApplicable("group is not cyclic".into()));
    }
    if arith::is_prime_power(n) {
        return Err(ColoringError::NotApplicable(
            "order is a prime power; the power graph is complete".into(),
        ));
    }
    let x = (0..group.order())
        .find(|&v| group.element_order(v) == n)
        .expect("cyclic group has a generator");
    let backbone = cyclic_backbone_edges(group, x)?;
    let mut painter = Painter::new(graph);
    for (u, v) in backbone {
        painter.paint(u, v, 1);
    }
    painter.finish(2, 2)
}

/// Structural view of a group isomorphic to Q8 x Z_n with n odd.
#[derive(Debug, Clone)]
pub struct QuaternionProductStructure {
    /// The odd n with |G| = 8n.
    pub odd_part: u64,
    /// The three maximal cyclic subgroups, each of order 4n, as sorted
    /// element lists in lexicographic order.
    pub subgroups: [Vec<usize>; 3],
    /// Their pairwise-common subgroup of order 2n.
    pub common: Vec<usize>,
    /// The unique involution.
    pub involution: usize,
}

/// Recognizes groups isomorphic to Q8 x Z_n for odd n (n = 1 gives Q8
/// itself): order 8n with n odd, nilpotent, a unique involution, and exactly
/// three maximal cyclic subgroups, each of order 4n with pairwise
/// intersections of order 2n.
pub fn recognize_quaternion_product(group: &Group) -> Option<QuaternionProductStructure> {
    let size = group.order() as u64;
    if !size.is_multiple_of(8) {
        return None;
    }
    let n = size / 8;
    if n.is_multiple_of(2) {
        return None;
    }
    let involutions: Vec<usize> = (0..group.order())
        .filter(|&x| group.element_order(x) == 2)
        .collect();
    if involutions.len() != 1 {
        return None;
    }
    if !group.is_nilpotent() {
        return None;
    }
    let subs = group.maximal_cyclic_subgroups();
    if subs.len() != 3 || subs.iter().any(|s| s.len() as u64 != 4 * n) {
        return None;
    }
    let common: Vec<usize> = subs[0]
        .iter()
        .copied()
        .filter(|v| subs[1].contains(v) && subs[2].contains(v))
        .collect();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let pairwise: Vec<usize> = subs[i]
            .iter()
            .copied()
            .filter(|v| subs[j].contains(v))
            .collect();
        if pairwise != common || pairwise.len() as u64 != 2 * n {
            return None;
        }
    }
    let [a, b, c] = [subs[0].clone(), subs[1].clone(), subs[2].clone()];
    Some(QuaternionProductStructure {
        odd_part: n,
        subgroups: [a, b, c],
        common,
        involution: involutions[0],
    })
}

/// Rainbow 2-coloring for Q8 x Z_n with n odd. For each divisor d of n, the
/// elements of order 4d in the first maximal cyclic subgroup are wired to
/// the identity and those in the second to the involution; the backbones of
/// all three subgroups join in, except that the third subgroup's unique
/// backbone edge at the involution is withheld. Everything else is color 2.
pub fn quaternion_product_coloring(
    group: &Group,
    graph: &PowerGraph,
) -> Result<EdgeColoring, ColoringError> {
    let st = recognize_quaternion_product(group).ok_or_else(|| {
        ColoringError::NotApplicable("group is not Q8 x Z_n with n odd".into())
    })?;
    let e = group.identity();
    let u = st.involution;
    let full_order = 4 * st.odd_part;
    let mut color_one: BTreeSet<(usize, usize)> = BTreeSet::new();
    for d in arith::divisors(st.odd_part) {
        for &y in &st.subgroups[0] {
            if group.element_order(y) == 4 * d {
                color_one.insert(ordered(e, y));
            }
        }
        for &y in &st.subgroups[1] {
            if group.element_order(y) == 4 * d {
                color_one.insert(ordered(u, y));
            }
        }
    }
    for (idx, sub) in st.subgroups.iter().enumerate() {
        let generator = sub
            .iter()
            .copied()
            .find(|&y| group.element_order(y) == full_order)
            .expect("maximal cyclic subgroup has a generator");
        let mut backbone = cyclic_backbone_edges(group, generator)?;
        if idx == 2 {
            let at_involution: Vec<(usize, usize)> = backbone
                .iter()
                .copied()
                .filter(|&(a, b)| a == u || b == u)
                .collect();
            if at_involution.len() != 1 {
                return Err(ColoringError::Invalid(format!(
                    "expected exactly one backbone edge at the involution, found {}",
                    at_involution.len()
                )));
            }
            backbone.retain(|&edge| edge != at_involution[0]);
        }
        color_one.extend(backbone);
    }
    let mut painter = Painter::new(graph);
    for (a, b) in color_one {
        painter.paint(a, b, 1);
    }
    painter.finish(2, 2)
}

/// Structural view of a group of order p^n * q meeting the hypotheses of
/// the p^n*q construction.
#[derive(Debug, Clone)]
pub struct PnqStructure {
    pub p: u64,
    pub exponent: u32,
    pub q: u64,
    /// The q cyclic Sylow p-subgroups as sorted element lists, ordered
    /// lexicographically.
    pub sylow_p: Vec<Vec<usize>>,
    /// Their common intersection, of order p^(n-1).
    pub core: Vec<usize>,
    /// Minimum-index element of order p^(n-1) * q; its cyclic subgroup is
    /// the product of the core with the Sylow q-subgroup.
    pub long_element: usize,
}

/// Checks the p^n*q hypotheses, naming the first failed condition.
pub fn pnq_structure(group: &Group) -> Result<PnqStructure, String> {
    let size = group.order() as u64;
    let factors = arith::factorize(size);
    if factors.len() != 2 || factors[1].1 != 1 {
        return Err(format!("order {size} is not of the form p^n*q with p < q"));
    }
    let (p, exponent) = factors[0];
    let q = factors[1].0;
    let pn = p.pow(exponent);
    let mut sylow_p: Vec<Vec<usize>> = Vec::new();
    for x in 0..group.order() {
        if group.element_order(x) == pn {
            let s = group.cyclic_subgroup(x);
            if !sylow_p.contains(&s) {
                sylow_p.push(s);
            }
        }
    }
    if sylow_p.is_empty() {
        return Err(format!("Sylow {p}-subgroups are not cyclic"));
    }
    sylow_p.sort();
    if sylow_p.len() as u64 != q {
        return Err(format!(
            "number of Sylow {p}-subgroups is {}, not q={q}",
            sylow_p.len()
        ));
    }
    let s_q = group
        .count_order_p_subgroups(q)
        .expect("q is prime by construction");
    if s_q != 1 {
        return Err(format!("Sylow {q}-subgroup is not unique (s_{q}={s_q})"));
    }
    let core: Vec<usize> = sylow_p[0]
        .iter()
        .copied()
        .filter(|v| sylow_p[1..].iter().all(|s| s.contains(v)))
        .collect();
    let target = p.pow(exponent - 1);
    if core.len() as u64 != target {
        return Err(format!(
            "intersection of Sylow {p}-subgroups has order {}, not p^(n-1)={target}",
            core.len()
        ));
    }
    if target < q {
        return Err(format!("p^(n-1)={target} < q={q}"));
    }
    let long_order = target * q;
    let long_element = (0..group.order())
        .find(|&x| group.element_order(x) == long_order)
        .ok_or_else(|| format!("no element of order p^(n-1)*q={long_order}"))?;
    Ok(PnqStructure {
        p,
        exponent,
        q,
        sylow_p,
        core,
        long_element,
    })
}

/// Rainbow 2-coloring for qualifying groups of order p^n * q: the
/// generators of every Sylow p-subgroup are wired to the identity, the
/// generators of the i-th (i < q) additionally to the i-th smallest
/// nonidentity element of the Sylow intersection, and the backbone of the
/// order-p^(n-1)*q cyclic subgroup joins in. Everything else is color 2.
pub fn pnq_coloring(
    group: &Group,
    graph: &PowerGraph,
) -> Result<EdgeColoring, ColoringError> {
    let st = pnq_structure(group).map_err(ColoringError::NotApplicable)?;
    let e = group.identity();
    let pn = st.p.pow(st.exponent);
    let mut color_one: BTreeSet<(usize, usize)> = BTreeSet::new();
    let anchors: Vec<usize> = st
        .core
        .iter()
        .copied()
        .filter(|&v| v != e)
        .take(st.q as usize - 1)
        .collect();
    assert_eq!(anchors.len() as u64, st.q - 1, "core is large enough by p^(n-1) >= q");
    for (i, sylow) in st.sylow_p.iter().enumerate() {
        for &y in sylow {
            if group.element_order(y) == pn {
                color_one.insert(ordered(e, y));
                if let Some(&anchor) = anchors.get(i) {
                    color_one.insert(ordered(anchor, y));
                }
            }
        }
    }
    color_one.extend(cyclic_backbone_edges(group, st.long_element)?);
    let mut painter = Painter::new(graph);
    for (a, b) in color_one {
        painter.paint(a, b, 1);
    }
    painter.finish(2, 2)
}
