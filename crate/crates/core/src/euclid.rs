//! Euclidean (extended Dynkin) diagrams: the five families, their radical
//! vectors, recognition of a quiver's underlying multigraph, and a direct
//! search for an embedded Euclidean subquiver whose radical vector fits under
//! a dimension vector.
//!
//! Subquivers are images of injective quiver morphisms, so they need not be
//! induced: an embedded cycle may skip chords of the ambient quiver.

use std::fmt;
use std::str::FromStr;

use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::quiver::{Arrow, DimVector, Quiver, QuiverSetting};
use crate::witness::EuclideanWitness;

/// The Euclidean families. `A(n)` has `n + 1` vertices (`A(0)` is a loop,
/// `A(1)` a double edge); `D(n)` has `n + 1` vertices with `n ≥ 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EuclideanType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl EuclideanType {
    pub fn vertex_count(&self) -> usize {
        match *self {
            EuclideanType::A(n) | EuclideanType::D(n) => n + 1,
            EuclideanType::E6 => 7,
            EuclideanType::E7 => 8,
            EuclideanType::E8 => 9,
        }
    }

    pub fn is_valid(&self) -> bool {
        !matches!(*self, EuclideanType::D(n) if n < 4)
    }

    /// Every type with at most `max_vertices` vertices, in preference order.
    pub fn all_up_to(max_vertices: usize) -> Vec<EuclideanType> {
        let mut out: Vec<EuclideanType> = (0..max_vertices).map(EuclideanType::A).collect();
        out.extend((4..max_vertices).map(EuclideanType::D));
        out.extend([EuclideanType::E6, EuclideanType::E7, EuclideanType::E8]);
        out.retain(|t| t.vertex_count() <= max_vertices);
        out
    }

    /// A fixed representative quiver of this type whose vertices are named by
    /// their pattern positions. Tree types are oriented away from the first
    /// vertex, cycles run around.
    pub fn shape(&self) -> Quiver {
        let (names, edges) = self.pattern();
        let arrows = edges.into_iter().map(|(s, t)| Arrow::new(s, t)).collect();
        Quiver::new(names, arrows).expect("pattern shapes are well formed")
    }

    fn pattern(&self) -> (Vec<String>, Vec<(usize, usize)>) {
        match *self {
            EuclideanType::A(0) => (vec!["c0".into()], vec![(0, 0)]),
            EuclideanType::A(n) => {
                let names = (0..=n).map(|i| format!("c{i}")).collect();
                let edges = (0..=n).map(|i| (i, (i + 1) % (n + 1))).collect();
                (names, edges)
            }
            EuclideanType::D(n) => {
                let spine = n - 3;
                let mut names: Vec<String> = vec!["l0".into(), "l1".into()];
                names.extend((0..spine).map(|i| format!("s{i}")));
                names.extend(["l2".to_string(), "l3".to_string()]);
                let first = 2;
                let last = 2 + spine - 1;
                let mut edges = vec![(first, 0), (first, 1)];
                edges.extend((first..last).map(|i| (i, i + 1)));
                edges.extend([(last, last + 1), (last, last + 2)]);
                (names, edges)
            }
            EuclideanType::E6 | EuclideanType::E7 | EuclideanType::E8 => {
                let arms = e_arms(*self);
                let mut names = vec!["z".to_string()];
                let mut edges = Vec::new();
                for (label, arm) in ARM_LABELS.iter().zip(arms.iter()) {
                    let mut prev = 0;
                    for k in 0..arm.len() {
                        names.push(format!("{label}{}", k + 1));
                        let cur = names.len() - 1;
                        edges.push((prev, cur));
                        prev = cur;
                    }
                }
                (names, edges)
            }
        }
    }
}

const ARM_LABELS: [char; 3] = ['a', 'b', 'c'];

/// Radical entries along each arm, outward from the branch vertex.
fn e_arms(t: EuclideanType) -> [&'static [u64]; 3] {
    match t {
        EuclideanType::E6 => [&[2, 1], &[2, 1], &[2, 1]],
        EuclideanType::E7 => [&[3, 2, 1], &[3, 2, 1], &[2]],
        EuclideanType::E8 => [&[5, 4, 3, 2, 1], &[4, 2], &[3]],
        _ => unreachable!("not an exceptional type"),
    }
}

fn e_center(t: EuclideanType) -> u64 {
    match t {
        EuclideanType::E6 => 3,
        EuclideanType::E7 => 4,
        EuclideanType::E8 => 6,
        _ => unreachable!("not an exceptional type"),
    }
}

impl fmt::Display for EuclideanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EuclideanType::A(n) => write!(f, "A~{n}"),
            EuclideanType::D(n) => write!(f, "D~{n}"),
            EuclideanType::E6 => write!(f, "E~6"),
            EuclideanType::E7 => write!(f, "E~7"),
            EuclideanType::E8 => write!(f, "E~8"),
        }
    }
}

impl FromStr for EuclideanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("unknown Euclidean type `{s}`"));
        let (family, n) = s.split_once('~').ok_or_else(bad)?;
        let n: usize = n.parse().map_err(|_| bad())?;
        let t = match (family, n) {
            ("A", n) => EuclideanType::A(n),
            ("D", n) if n >= 4 => EuclideanType::D(n),
            ("E", 6) => EuclideanType::E6,
            ("E", 7) => EuclideanType::E7,
            ("E", 8) => EuclideanType::E8,
            _ => return Err(bad()),
        };
        Ok(t)
    }
}

/// Result of recognizing a Euclidean quiver: its type plus, per vertex, the
/// pattern position label and the radical vector entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    pub kind: EuclideanType,
    pub positions: Vec<String>,
    pub radical: Vec<u64>,
}

/// Type of `quiver` if its whole underlying multigraph is Euclidean.
pub fn recognize_euclidean(quiver: &Quiver) -> Option<EuclideanType> {
    layout(quiver).map(|l| l.kind)
}

/// Radical vector `h` of a quiver of type `kind`, placed by graph structure.
pub fn radical_vector(kind: EuclideanType, shape: &Quiver) -> Result<DimVector> {
    match layout(shape) {
        Some(l) if l.kind == kind => Ok(DimVector::new(l.radical)),
        _ => Err(Error::NotEuclidean(kind.to_string())),
    }
}

pub fn layout(q: &Quiver) -> Option<Layout> {
    let n = q.vertex_count();
    let m = q.arrow_count();
    if n == 0 {
        return None;
    }
    if n == 1 {
        return (m == 1 && q.arrows()[0].is_loop()).then(|| Layout {
            kind: EuclideanType::A(0),
            positions: vec!["c0".into()],
            radical: vec![1],
        });
    }
    if q.arrows().iter().any(Arrow::is_loop) {
        return None;
    }
    if n == 2 {
        return (m == 2 && q.multiplicity(0, 1) == 2).then(|| Layout {
            kind: EuclideanType::A(1),
            positions: vec!["c0".into(), "c1".into()],
            radical: vec![1, 1],
        });
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|x| q.neighbors(x)).collect();
    let simple_edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if simple_edges != m || !q.is_connected() {
        // multiple arrows, or disconnected
        return None;
    }
    let deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    if m == n {
        if deg.iter().all(|&d| d == 2) {
            return Some(cycle_layout(&adj));
        }
        return None;
    }
    if m + 1 != n || deg.iter().any(|&d| d > 4) {
        return None;
    }
    let branch: Vec<usize> = (0..n).filter(|&x| deg[x] >= 3).collect();
    match branch.as_slice() {
        [c] if deg[*c] == 4 => (n == 5).then(|| {
            let mut positions = vec![String::new(); n];
            let mut radical = vec![1; n];
            positions[*c] = "s0".into();
            radical[*c] = 2;
            for (k, &leaf) in adj[*c].iter().enumerate() {
                positions[leaf] = format!("l{k}");
            }
            Layout { kind: EuclideanType::D(4), positions, radical }
        }),
        [c] => exceptional_layout(*c, &adj),
        [b1, b2] if deg[*b1] == 3 && deg[*b2] == 3 => d_layout(*b1, *b2, &adj, &deg),
        _ => None,
    }
}

fn cycle_layout(adj: &[Vec<usize>]) -> Layout {
    let n = adj.len();
    let mut positions = vec![String::new(); n];
    let (mut prev, mut cur) = (usize::MAX, 0);
    for k in 0..n {
        positions[cur] = format!("c{k}");
        let next = adj[cur].iter().copied().find(|&y| y != prev).unwrap();
        prev = cur;
        cur = next;
    }
    Layout { kind: EuclideanType::A(n - 1), positions, radical: vec![1; n] }
}

fn d_layout(b1: usize, b2: usize, adj: &[Vec<usize>], deg: &[usize]) -> Option<Layout> {
    let n = adj.len();
    let leaves_of = |b: usize| -> Vec<usize> { adj[b].iter().copied().filter(|&y| deg[y] == 1).collect() };
    let (l1, l2) = (leaves_of(b1), leaves_of(b2));
    if l1.len() != 2 || l2.len() != 2 {
        return None;
    }
    // walk the spine from b1 to b2
    let mut spine = vec![b1];
    let mut prev = usize::MAX;
    let mut cur = b1;
    while cur != b2 {
        let next = adj[cur].iter().copied().find(|&y| y != prev && deg[y] != 1)?;
        prev = cur;
        cur = next;
        spine.push(cur);
    }
    let mut positions = vec![String::new(); n];
    let mut radical = vec![2; n];
    for (k, &s) in spine.iter().enumerate() {
        positions[s] = format!("s{k}");
    }
    for (k, &leaf) in l1.iter().chain(&l2).enumerate() {
        positions[leaf] = format!("l{k}");
        radical[leaf] = 1;
    }
    (spine.len() + 4 == n).then_some(Layout { kind: EuclideanType::D(n - 1), positions, radical })
}

fn exceptional_layout(center: usize, adj: &[Vec<usize>]) -> Option<Layout> {
    let mut arms: Vec<Vec<usize>> = adj[center]
        .iter()
        .map(|&first| {
            let mut arm = vec![first];
            let (mut prev, mut cur) = (center, first);
            while let Some(next) = adj[cur].iter().copied().find(|&y| y != prev) {
                arm.push(next);
                prev = cur;
                cur = next;
            }
            arm
        })
        .collect();
    // longest arm first; ties keep neighbour order
    arms.sort_by_key(|a| std::cmp::Reverse(a.len()));
    let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
    let kind = match lens.as_slice() {
        [2, 2, 2] => EuclideanType::E6,
        [3, 3, 1] => EuclideanType::E7,
        [5, 2, 1] => EuclideanType::E8,
        _ => return None,
    };
    let n = adj.len();
    let mut positions = vec![String::new(); n];
    let mut radical = vec![0; n];
    positions[center] = "z".into();
    radical[center] = e_center(kind);
    for ((label, arm), values) in ARM_LABELS.iter().zip(&arms).zip(e_arms(kind)) {
        for (k, (&x, &h)) in arm.iter().zip(values.iter()).enumerate() {
            positions[x] = format!("{label}{}", k + 1);
            radical[x] = h;
        }
    }
    Some(Layout { kind, positions, radical })
}

/// Underlying simple graph restricted to vertices with `d ≥ 1`.
struct ActiveGraph<'a> {
    quiver: &'a Quiver,
    dim: &'a [u64],
    adj: Vec<Vec<usize>>,
}

impl<'a> ActiveGraph<'a> {
    fn new(setting: &'a QuiverSetting) -> Self {
        let quiver = setting.quiver();
        let dim = setting.dim().entries();
        let adj = (0..quiver.vertex_count())
            .map(|x| {
                if dim[x] == 0 {
                    Vec::new()
                } else {
                    quiver.neighbors(x).into_iter().filter(|&y| dim[y] > 0).collect()
                }
            })
            .collect();
        ActiveGraph { quiver, dim, adj }
    }

    /// Edge list (first joining arrow per consecutive pair) for a set of
    /// pattern edges.
    fn arrows_for(&self, edges: &[(usize, usize)]) -> Vec<usize> {
        edges.iter().map(|&(x, y)| self.quiver.arrow_between(x, y).expect("edge exists")).collect()
    }
}

/// Searches for a Euclidean subquiver `Q'` with `h_{Q'} ≤ d|_{Q'}`.
///
/// Candidates are tried in a fixed order, so the returned witness does not
/// depend on anything but the input: loops, then double edges, then cycles
/// (smallest root first), then `D̃` (spine by smallest start), then `Ẽ6`,
/// `Ẽ7`, `Ẽ8` (smallest branch vertex first).
pub fn find_euclidean_witness(setting: &QuiverSetting, budget: &Budget) -> Result<Option<EuclideanWitness>> {
    let mut meter = Meter::new("euclidean subquiver search", budget.search_states);
    let g = ActiveGraph::new(setting);
    let found = find_loop(&g)
        .or_else(|| find_double_edge(&g))
        .map(Ok)
        .or_else(|| find_cycle(&g, &mut meter).transpose())
        .or_else(|| find_d(&g, &mut meter).transpose())
        .or_else(|| find_exceptional(&g, &mut meter).transpose())
        .transpose()?;
    match found {
        Some((kind, vertices, arrows)) => Ok(Some(EuclideanWitness::from_parts(setting, kind, &vertices, &arrows)?)),
        None => Ok(None),
    }
}

type Candidate = (EuclideanType, Vec<usize>, Vec<usize>);

fn find_loop(g: &ActiveGraph) -> Option<Candidate> {
    let q = g.quiver;
    (0..q.vertex_count()).filter(|&x| g.dim[x] > 0).find_map(|x| {
        let k = q.arrows().iter().position(|a| a.source == x && a.target == x)?;
        Some((EuclideanType::A(0), vec![x], vec![k]))
    })
}

fn find_double_edge(g: &ActiveGraph) -> Option<Candidate> {
    let q = g.quiver;
    for x in 0..q.vertex_count() {
        for &y in g.adj[x].iter().filter(|&&y| y > x) {
            let joining: Vec<usize> = (0..q.arrow_count()).filter(|&k| q.arrows()[k].joins(x, y)).take(2).collect();
            if joining.len() == 2 {
                return Some((EuclideanType::A(1), vec![x, y], joining));
            }
        }
    }
    None
}

fn find_cycle(g: &ActiveGraph, meter: &mut Meter) -> Result<Option<Candidate>> {
    let n = g.adj.len();
    for r in 0..n {
        let up: Vec<usize> = g.adj[r].iter().copied().filter(|&y| y > r).collect();
        for (i, &a) in up.iter().enumerate() {
            for &b in &up[i + 1..] {
                if let Some(path) = shortest_path_above(g, r, a, b, meter)? {
                    let mut cycle = vec![r];
                    cycle.extend(path);
                    let edges: Vec<(usize, usize)> =
                        (0..cycle.len()).map(|k| (cycle[k], cycle[(k + 1) % cycle.len()])).collect();
                    let arrows = g.arrows_for(&edges);
                    return Ok(Some((EuclideanType::A(cycle.len() - 1), cycle, arrows)));
                }
            }
        }
    }
    Ok(None)
}

/// Breadth-first path from `a` to `b` through vertices greater than `root`.
fn shortest_path_above(
    g: &ActiveGraph,
    root: usize,
    a: usize,
    b: usize,
    meter: &mut Meter,
) -> Result<Option<Vec<usize>>> {
    let n = g.adj.len();
    let mut parent = vec![usize::MAX; n];
    parent[a] = a;
    let mut queue = std::collections::VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        meter.tick()?;
        if x == b {
            let mut path = vec![b];
            let mut cur = b;
            while cur != a {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Ok(Some(path));
        }
        for &y in &g.adj[x] {
            if y > root && parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    Ok(None)
}

fn find_d(g: &ActiveGraph, meter: &mut Meter) -> Result<Option<Candidate>> {
    let n = g.adj.len();
    for s in (0..n).filter(|&s| g.dim[s] >= 2) {
        let mut path = vec![s];
        let mut on_path = vec![false; n];
        on_path[s] = true;
        if let Some(c) = extend_spine(g, &mut path, &mut on_path, meter)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

fn extend_spine(
    g: &ActiveGraph,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    meter: &mut Meter,
) -> Result<Option<Candidate>> {
    meter.tick()?;
    let (first, last) = (path[0], *path.last().unwrap());
    if last >= first {
        if let Some(leaves) = spine_leaves(g, path, on_path) {
            let mut edges: Vec<(usize, usize)> = path.windows(2).map(|w| (w[0], w[1])).collect();
            edges.extend([(first, leaves[0]), (first, leaves[1]), (last, leaves[2]), (last, leaves[3])]);
            let mut vertices = path.clone();
            vertices.extend_from_slice(&leaves);
            let kind = EuclideanType::D(vertices.len() - 1);
            return Ok(Some((kind, vertices, g.arrows_for(&edges))));
        }
    }
    for &y in &g.adj[last] {
        if !on_path[y] && g.dim[y] >= 2 {
            path.push(y);
            on_path[y] = true;
            let found = extend_spine(g, path, on_path, meter)?;
            on_path[y] = false;
            path.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
    }
    Ok(None)
}

/// Two leaves at each spine end, all distinct and off the spine; for a
/// one-vertex spine all four hang off that vertex.
fn spine_leaves(g: &ActiveGraph, path: &[usize], on_path: &[bool]) -> Option<[usize; 4]> {
    let off = |x: usize| -> Vec<usize> { g.adj[x].iter().copied().filter(|&y| !on_path[y]).collect() };
    let (first, last) = (path[0], *path.last().unwrap());
    if path.len() == 1 {
        let c = off(first);
        return (c.len() >= 4).then(|| [c[0], c[1], c[2], c[3]]);
    }
    let (a, b) = (off(first), off(last));
    for (i, &a1) in a.iter().enumerate() {
        for &a2 in &a[i + 1..] {
            let rest: Vec<usize> = b.iter().copied().filter(|&y| y != a1 && y != a2).take(2).collect();
            if rest.len() == 2 {
                return Some([a1, a2, rest[0], rest[1]]);
            }
        }
    }
    None
}

fn find_exceptional(g: &ActiveGraph, meter: &mut Meter) -> Result<Option<Candidate>> {
    let n = g.adj.len();
    for kind in [EuclideanType::E6, EuclideanType::E7, EuclideanType::E8] {
        let need = e_center(kind);
        let arms = e_arms(kind);
        for z in (0..n).filter(|&z| g.dim[z] >= need && g.adj[z].len() >= 3) {
            let mut used = vec![false; n];
            used[z] = true;
            let mut chosen: Vec<Vec<usize>> = Vec::new();
            if place_arms(g, z, &arms, &mut chosen, &mut used, meter)? {
                let mut vertices = vec![z];
                let mut edges = Vec::new();
                for arm in &chosen {
                    let mut prev = z;
                    for &x in arm {
                        vertices.push(x);
                        edges.push((prev, x));
                        prev = x;
                    }
                }
                return Ok(Some((kind, vertices, g.arrows_for(&edges))));
            }
        }
    }
    Ok(None)
}

fn place_arms(
    g: &ActiveGraph,
    center: usize,
    arms: &[&[u64]],
    chosen: &mut Vec<Vec<usize>>,
    used: &mut [bool],
    meter: &mut Meter,
) -> Result<bool> {
    let Some((arm, rest)) = arms.split_first() else {
        return Ok(true);
    };
    let mut current = Vec::with_capacity(arm.len());
    place_arm(g, center, arm, rest, &mut current, chosen, used, meter)
}

#[allow(clippy::too_many_arguments)]
fn place_arm(
    g: &ActiveGraph,
    center: usize,
    arm: &[u64],
    rest: &[&[u64]],
    current: &mut Vec<usize>,
    chosen: &mut Vec<Vec<usize>>,
    used: &mut [bool],
    meter: &mut Meter,
) -> Result<bool> {
    meter.tick()?;
    if current.len() == arm.len() {
        chosen.push(current.clone());
        if place_arms(g, center, rest, chosen, used, meter)? {
            return Ok(true);
        }
        chosen.pop();
        return Ok(false);
    }
    let prev = current.last().copied().unwrap_or(center);
    let need = arm[current.len()];
    for &y in &g.adj[prev] {
        if !used[y] && g.dim[y] >= need {
            used[y] = true;
            current.push(y);
            let ok = place_arm(g, center, arm, rest, current, chosen, used, meter)?;
            current.pop();
            used[y] = false;
            if ok {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setting(q: Quiver, d: &[u64]) -> QuiverSetting {
        QuiverSetting::new(q, d.to_vec().into()).unwrap()
    }

    fn star() -> Quiver {
        Quiver::from_names(&["c", "p", "q", "r", "s"], &[("p", "c"), ("q", "c"), ("c", "r"), ("c", "s")]).unwrap()
    }

    #[test]
    fn shapes_have_the_right_size_and_type() {
        for t in EuclideanType::all_up_to(9) {
            let s = t.shape();
            assert_eq!(s.vertex_count(), t.vertex_count(), "{t}");
            assert_eq!(recognize_euclidean(&s), Some(t), "{t}");
        }
        assert_eq!(EuclideanType::all_up_to(9).len(), 9 + 5 + 3);
    }

    #[test]
    fn radical_vector_examples() {
        let tri = Quiver::with_indices(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(radical_vector(EuclideanType::A(2), &tri).unwrap().entries(), &[1, 1, 1]);
        assert_eq!(radical_vector(EuclideanType::D(4), &star()).unwrap().entries(), &[2, 1, 1, 1, 1]);
        let e8 = EuclideanType::E8.shape();
        // z, a1..a5, b1, b2, c1
        assert_eq!(radical_vector(EuclideanType::E8, &e8).unwrap().entries(), &[6, 5, 4, 3, 2, 1, 4, 2, 3]);
        assert!(radical_vector(EuclideanType::A(2), &star()).is_err());
    }

    #[test]
    fn e_radicals_match_table() {
        let e6 = EuclideanType::E6.shape();
        assert_eq!(radical_vector(EuclideanType::E6, &e6).unwrap().entries(), &[3, 2, 1, 2, 1, 2, 1]);
        let e7 = EuclideanType::E7.shape();
        assert_eq!(radical_vector(EuclideanType::E7, &e7).unwrap().entries(), &[4, 3, 2, 1, 3, 2, 1, 2]);
    }

    #[test]
    fn recognition_examples() {
        let square = Quiver::with_indices(4, &[(0, 1), (2, 1), (2, 3), (3, 0)]).unwrap();
        assert_eq!(recognize_euclidean(&square), Some(EuclideanType::A(3)));
        let path = Quiver::with_indices(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(recognize_euclidean(&path), None);
        let q = Quiver::from_names(
            &["c", "p", "q", "r", "s", "t"],
            &[("p", "c"), ("q", "c"), ("c", "r"), ("c", "s"), ("s", "t")],
        )
        .unwrap();
        assert_eq!(recognize_euclidean(&q), None);
        let lp = Quiver::with_indices(1, &[(0, 0)]).unwrap();
        assert_eq!(recognize_euclidean(&lp), Some(EuclideanType::A(0)));
        let opposite = Quiver::with_indices(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(recognize_euclidean(&opposite), Some(EuclideanType::A(1)));
        assert_eq!(recognize_euclidean(&Quiver::with_indices(1, &[]).unwrap()), None);
        assert_eq!(recognize_euclidean(&Quiver::with_indices(2, &[(0, 1), (0, 1), (0, 1)]).unwrap()), None);
        // triangle with a doubled edge is not Euclidean
        assert_eq!(recognize_euclidean(&Quiver::with_indices(3, &[(0, 1), (0, 1), (1, 2), (2, 0)]).unwrap()), None);
    }

    #[test]
    fn d_family_recognition() {
        // D~5: spine of two, two leaves at each end
        let q = Quiver::with_indices(6, &[(0, 1), (2, 0), (3, 0), (1, 4), (5, 1)]).unwrap();
        assert_eq!(recognize_euclidean(&q), Some(EuclideanType::D(5)));
        assert_eq!(radical_vector(EuclideanType::D(5), &q).unwrap().entries(), &[2, 2, 1, 1, 1, 1]);
        // two branch vertices but one has a long arm: E-ish tree, not D~
        let q = Quiver::with_indices(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (5, 6)]).unwrap();
        assert_eq!(recognize_euclidean(&q), None);
    }

    #[test]
    fn type_names_round_trip() {
        for t in EuclideanType::all_up_to(9) {
            assert_eq!(t.to_string().parse::<EuclideanType>().unwrap(), t);
        }
        assert!("D~3".parse::<EuclideanType>().is_err());
        assert!("E~9".parse::<EuclideanType>().is_err());
    }

    #[test]
    fn witness_examples() {
        let b = Budget::default();
        let s = setting(star(), &[2, 1, 1, 1, 1]);
        let w = find_euclidean_witness(&s, &b).unwrap().unwrap();
        assert_eq!(w.kind(), EuclideanType::D(4));
        assert_eq!(w.embedding().vertex_map().len(), 5);
        w.validate(&s).unwrap();

        let path = setting(Quiver::with_indices(3, &[(0, 1), (1, 2)]).unwrap(), &[9, 9, 9]);
        assert!(find_euclidean_witness(&path, &b).unwrap().is_none());

        let ce = Quiver::from_names(
            &["t1", "t2", "t3", "b1", "b2"],
            &[("t1", "b1"), ("t1", "b2"), ("t2", "b2"), ("t3", "b2")],
        )
        .unwrap();
        assert!(find_euclidean_witness(&setting(ce, &[2, 1, 1, 1, 2]), &b).unwrap().is_none());
    }

    #[test]
    fn cycle_witness_skips_chords() {
        // square with a diagonal: the smallest-root search finds the triangle 0-1-2
        let q = Quiver::with_indices(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let s = setting(q, &[1, 1, 1, 1]);
        let w = find_euclidean_witness(&s, &Budget::default()).unwrap().unwrap();
        assert_eq!(w.kind(), EuclideanType::A(2));
        w.validate(&s).unwrap();
        // zero-dimensional vertices block the cycle
        let s = s.with_dim(vec![1, 0, 1, 1].into()).unwrap();
        let w = find_euclidean_witness(&s, &Budget::default()).unwrap().unwrap();
        assert_eq!(w.embedding().vertex_map(), &[0, 2, 3]);
    }

    #[test]
    fn d_witness_with_long_spine() {
        let q = Quiver::with_indices(7, &[(0, 1), (1, 2), (3, 0), (4, 0), (2, 5), (2, 6)]).unwrap();
        let s = setting(q, &[2, 2, 2, 1, 1, 1, 1]);
        let w = find_euclidean_witness(&s, &Budget::default()).unwrap().unwrap();
        assert_eq!(w.kind(), EuclideanType::D(6));
        w.validate(&s).unwrap();
        let s = s.with_dim(vec![2, 1, 2, 1, 1, 1, 1].into()).unwrap();
        assert!(find_euclidean_witness(&s, &Budget::default()).unwrap().is_none());
    }

    #[test]
    fn exceptional_witnesses_need_the_full_radical() {
        for t in [EuclideanType::E6, EuclideanType::E7, EuclideanType::E8] {
            let shape = t.shape();
            let h = radical_vector(t, &shape).unwrap();
            let s = setting(shape.clone(), h.entries());
            let w = find_euclidean_witness(&s, &Budget::default()).unwrap().unwrap();
            assert_eq!(w.kind(), t);
            w.validate(&s).unwrap();
            for x in 0..shape.vertex_count() {
                let mut d = h.clone().into_inner();
                d[x] -= 1;
                let s = setting(shape.clone(), &d);
                assert!(find_euclidean_witness(&s, &Budget::default()).unwrap().is_none(), "{t} minus e_{x}");
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let q = Quiver::with_indices(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let s = setting(q, &[1, 1, 1, 1]);
        let err = find_euclidean_witness(&s, &Budget::uniform(1)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }
}
