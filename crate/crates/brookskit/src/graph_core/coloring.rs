use super::bitset::VertexSet;
use super::graph::Graph;
use crate::error::{Error, Result};
use serde::ser::{Serialize, SerializeMap, SerializeSeq, Serializer};

/// Colors are positive integers.
pub type Color = u32;

/// Partial or total vertex coloring.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Coloring {
    colors: Vec<Option<Color>>,
}

impl Coloring {
    pub fn empty(n: usize) -> Self {
        Coloring { colors: vec![None; n] }
    }

    pub fn from_colors(colors: Vec<Color>) -> Self {
        Coloring {
            colors: colors.into_iter().map(Some).collect(),
        }
    }

    pub fn from_options(colors: Vec<Option<Color>>) -> Self {
        Coloring { colors }
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    #[inline]
    pub fn get(&self, v: usize) -> Option<Color> {
        self.colors[v]
    }

    #[inline]
    pub fn set(&mut self, v: usize, c: Color) {
        debug_assert!(c >= 1, "colors are positive");
        self.colors[v] = Some(c);
    }

    pub fn unset(&mut self, v: usize) {
        self.colors[v] = None;
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn colored(&self) -> VertexSet {
        VertexSet::from_iter(self.n(), (0..self.n()).filter(|&v| self.colors[v].is_some()))
    }

    /// Largest color in use (0 when nothing is colored).
    pub fn palette_size(&self) -> Color {
        self.colors.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn distinct_colors(&self) -> usize {
        let mut cs: Vec<Color> = self.colors.iter().flatten().copied().collect();
        cs.sort_unstable();
        cs.dedup();
        cs.len()
    }

    /// No edge joins two vertices of the same assigned color.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.n() == g.n()
            && g.edges()
                .iter()
                .all(|&(u, v)| self.colors[u].is_none() || self.colors[u] != self.colors[v])
    }

    pub fn is_proper_total(&self, g: &Graph) -> bool {
        self.is_total() && self.is_proper(g)
    }

    /// Colors present on the neighbors of `v`.
    pub fn neighbor_colors(&self, g: &Graph, v: usize) -> Vec<Color> {
        let mut cs: Vec<Color> = g.neighbors(v).iter().filter_map(|w| self.colors[w]).collect();
        cs.sort_unstable();
        cs.dedup();
        cs
    }

    pub fn class(&self, c: Color) -> VertexSet {
        VertexSet::from_iter(self.n(), (0..self.n()).filter(|&v| self.colors[v] == Some(c)))
    }

    /// Applies `perm` (indexed by old color) to every assigned color.
    pub fn permute_colors(&mut self, perm: impl Fn(Color) -> Color) {
        for c in self.colors.iter_mut().flatten() {
            *c = perm(*c);
        }
    }

    /// Renumbers colors to 1..k in order of first appearance.
    pub fn normalized(&self) -> Coloring {
        let mut map = std::collections::HashMap::new();
        let mut next = 1;
        let colors = self
            .colors
            .iter()
            .map(|c| {
                c.map(|c| {
                    *map.entry(c).or_insert_with(|| {
                        next += 1;
                        next - 1
                    })
                })
            })
            .collect();
        Coloring { colors }
    }

    pub fn respects(&self, lists: &ListAssignment) -> bool {
        (0..self.n()).all(|v| self.colors[v].is_none_or(|c| lists.contains(v, c)))
    }
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.colors.iter().flatten().count()))?;
        for (v, c) in self.colors.iter().enumerate() {
            if let Some(c) = c {
                map.serialize_entry(&v.to_string(), c)?;
            }
        }
        map.end()
    }
}

/// Per-vertex color lists, kept sorted and duplicate-free.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<Color>>) -> Self {
        let lists = lists
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        ListAssignment { lists }
    }

    /// Every vertex gets `1..=k`.
    pub fn uniform(n: usize, k: usize) -> Self {
        ListAssignment {
            lists: vec![(1..=k as Color).collect(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.lists.len()
    }

    #[inline]
    pub fn list(&self, v: usize) -> &[Color] {
        &self.lists[v]
    }

    pub fn contains(&self, v: usize, c: Color) -> bool {
        self.lists[v].binary_search(&c).is_ok()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.lists.iter().map(Vec::len).collect()
    }

    pub fn min_size(&self) -> usize {
        self.lists.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Sorted union of all lists.
    pub fn universe(&self) -> Vec<Color> {
        let mut u: Vec<Color> = self.lists.iter().flatten().copied().collect();
        u.sort_unstable();
        u.dedup();
        u
    }

    /// Lists of the vertices `map[0], map[1], ...`.
    pub fn restrict(&self, map: &[usize]) -> ListAssignment {
        ListAssignment {
            lists: map.iter().map(|&v| self.lists[v].clone()).collect(),
        }
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }
}

impl Serialize for ListAssignment {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.lists.len()))?;
        for l in &self.lists {
            seq.serialize_element(l)?;
        }
        seq.end()
    }
}

/// Colors vertices in `order` with the least admissible free color. Vertices
/// already colored in `partial` keep their colors; without lists the
/// admissible colors are all positive integers.
pub fn greedy_color(g: &Graph, order: &[usize], partial: Option<&Coloring>, lists: Option<&ListAssignment>) -> Result<Coloring> {
    let mut col = partial.cloned().unwrap_or_else(|| Coloring::empty(g.n()));
    if col.n() != g.n() || lists.is_some_and(|l| l.n() != g.n()) {
        return Err(Error::precondition("coloring or lists sized for a different graph"));
    }
    if !col.is_proper(g) {
        return Err(Error::precondition("partial coloring is not proper"));
    }
    if let Some(l) = lists {
        if !col.respects(l) {
            return Err(Error::precondition("partial coloring leaves the lists"));
        }
    }
    for &v in order {
        if col.get(v).is_some() {
            continue;
        }
        let blocked = col.neighbor_colors(g, v);
        let pick = match lists {
            Some(l) => l.list(v).iter().copied().find(|c| blocked.binary_search(c).is_err()),
            None => (1..).find(|c| blocked.binary_search(c).is_err()),
        };
        match pick {
            Some(c) => col.set(v, c),
            None => return Err(Error::Stuck { vertex: v, blocked }),
        }
    }
    Ok(col)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::graph::named;

    #[test]
    fn greedy_examples() {
        let k4 = named::complete(4);
        let c = greedy_color(&k4, &[0, 1, 2, 3], None, None).unwrap();
        assert_eq!(c, Coloring::from_colors(vec![1, 2, 3, 4]));
        let c5 = named::cycle(5);
        let c = greedy_color(&c5, &[0, 1, 2, 3, 4], None, None).unwrap();
        assert_eq!(c, Coloring::from_colors(vec![1, 2, 1, 2, 3]));
    }

    #[test]
    fn greedy_with_lists_reports_stuck_vertex() {
        let k2 = named::complete(2);
        let lists = ListAssignment::new(vec![vec![1], vec![1]]);
        match greedy_color(&k2, &[0, 1], None, Some(&lists)) {
            Err(Error::Stuck { vertex: 1, blocked }) => assert_eq!(blocked, vec![1]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn serialization_shapes() {
        let c = Coloring::from_options(vec![Some(2), None, Some(1)]);
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"0":2,"2":1}"#);
        let l = ListAssignment::new(vec![vec![3, 1], vec![2]]);
        assert_eq!(serde_json::to_string(&l).unwrap(), "[[1,3],[2]]");
    }

    #[test]
    fn normalization() {
        let c = Coloring::from_colors(vec![5, 3, 5, 9]).normalized();
        assert_eq!(c, Coloring::from_colors(vec![1, 2, 1, 3]));
    }
}
