//! Proper edge and vertex colourings.

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    /// Colour of each item (edge or vertex), in `0..color_count`.
    pub colors: Vec<usize>,
    pub color_count: usize,
}

impl Coloring {
    fn from_colors(colors: Vec<usize>) -> Self {
        let color_count = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        Self { colors, color_count }
    }

    /// Items grouped by colour, ascending item index within each group.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.color_count];
        for (item, &c) in self.colors.iter().enumerate() {
            out[c].push(item);
        }
        out
    }

    /// No two edges sharing an endpoint have the same colour.
    pub fn is_proper_edge_coloring(&self, graph: &Graph) -> bool {
        (0..graph.vertex_count()).all(|v| {
            let mut seen = std::collections::HashSet::new();
            graph.incident_out(v).iter().chain(graph.incident_in(v)).all(|&(_, e)| seen.insert(self.colors[e]))
        })
    }

    /// No edge joins two vertices of the same colour.
    pub fn is_proper_vertex_coloring(&self, graph: &Graph) -> bool {
        graph.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("edge colouring needs an undirected graph")]
pub struct DirectedInput;

struct EdgePainter<'g> {
    graph: &'g Graph,
    color: Vec<Option<usize>>,
    // at[v][c]: the edge of colour c at v
    at: Vec<Vec<Option<usize>>>,
}

impl EdgePainter<'_> {
    fn other(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.graph.edge(e);
        if a == v {
            b
        } else {
            a
        }
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v][c].is_none()
    }

    fn free_color(&self, v: usize) -> usize {
        self.at[v].iter().position(Option::is_none).expect("Δ+1 colours leave one free at every vertex")
    }

    fn set(&mut self, e: usize, c: Option<usize>) {
        let (a, b) = self.graph.edge(e);
        if let Some(old) = self.color[e] {
            self.at[a][old] = None;
            self.at[b][old] = None;
        }
        self.color[e] = c;
        if let Some(new) = c {
            self.at[a][new] = Some(e);
            self.at[b][new] = Some(e);
        }
    }

    fn edge_between(&self, u: usize, x: usize) -> usize {
        self.graph.incident_out(u).iter().find(|&&(w, _)| w == x).map(|&(_, e)| e).unwrap()
    }

    /// Maximal fan at `u` starting with the uncoloured edge to `first`.
    fn fan(&self, u: usize, first: usize) -> Vec<usize> {
        let mut fan = vec![first];
        let mut in_fan = std::collections::HashSet::from([first]);
        loop {
            let last = *fan.last().unwrap();
            let next = self
                .graph
                .incident_out(u)
                .iter()
                .find(|&&(x, e)| !in_fan.contains(&x) && self.color[e].is_some_and(|c| self.is_free(last, c)));
            match next {
                Some(&(x, _)) => {
                    fan.push(x);
                    in_fan.insert(x);
                }
                None => return fan,
            }
        }
    }

    /// Swaps colours `c` and `d` along the alternating path leaving `u` on `d`.
    fn invert_path(&mut self, u: usize, c: usize, d: usize) {
        let mut path = Vec::new();
        let (mut x, mut want) = (u, d);
        while let Some(e) = self.at[x][want] {
            path.push((e, want));
            x = self.other(e, x);
            want = if want == d { c } else { d };
        }
        for &(e, _) in &path {
            self.set(e, None);
        }
        for (e, old) in path {
            self.set(e, Some(if old == c { d } else { c }));
        }
    }

    /// Bipartite case: swap along the alternating path at `v` so one colour
    /// among the first Δ is free at both ends.
    fn paint_bipartite(&mut self, e: usize) {
        let (u, v) = self.graph.edge(e);
        let a = self.free_color(u);
        if !self.is_free(v, a) {
            let b = self.free_color(v);
            self.invert_path(v, b, a);
        }
        self.set(e, Some(a));
    }

    fn paint(&mut self, e: usize) {
        let (u, v) = self.graph.edge(e);
        let fan = self.fan(u, v);
        let c = self.free_color(u);
        let d = self.free_color(*fan.last().unwrap());
        if c != d {
            self.invert_path(u, c, d);
        }
        // first vertex of the (still valid) fan prefix with d free
        let mut w_idx = 0;
        for i in 0..fan.len() {
            if i > 0 {
                let prev = fan[i - 1];
                let ci = self.color[self.edge_between(u, fan[i])];
                if !ci.is_some_and(|col| self.is_free(prev, col)) {
                    break;
                }
            }
            if self.is_free(fan[i], d) {
                w_idx = i;
                break;
            }
        }
        // rotate the prefix fan[0..=w_idx]
        for i in 0..w_idx {
            let here = self.edge_between(u, fan[i]);
            let next = self.edge_between(u, fan[i + 1]);
            let col = self.color[next];
            self.set(next, None);
            self.set(here, col);
        }
        let last = self.edge_between(u, fan[w_idx]);
        self.set(last, Some(d));
    }
}

/// Proper edge colouring with at most `Δ + 1` colours (fan rotation and
/// alternating-path inversion). Bipartite graphs get at most `Δ` colours.
pub fn edge_coloring_delta_plus_one(graph: &Graph) -> Result<Coloring, DirectedInput> {
    if graph.is_directed() {
        return Err(DirectedInput);
    }
    let palette = graph.max_degree() + 1;
    let mut painter = EdgePainter {
        graph,
        color: vec![None; graph.edge_count()],
        at: vec![vec![None; palette]; graph.vertex_count()],
    };
    let bipartite = graph.bipartition().is_some();
    for e in 0..graph.edge_count() {
        if bipartite {
            painter.paint_bipartite(e);
        } else {
            painter.paint(e);
        }
    }
    Ok(Coloring::from_colors(painter.color.into_iter().map(|c| c.expect("every edge painted")).collect()))
}

/// Two colours when the graph is bipartite (one when edgeless), otherwise
/// greedy colouring in vertex order.
pub fn color_interaction_graph(h: &Graph) -> Coloring {
    if h.vertex_count() == 0 {
        return Coloring { colors: Vec::new(), color_count: 0 };
    }
    if h.edge_count() == 0 {
        return Coloring { colors: vec![0; h.vertex_count()], color_count: 1 };
    }
    if let Some(side) = h.bipartition() {
        return Coloring { colors: side, color_count: 2 };
    }
    let mut colors = vec![usize::MAX; h.vertex_count()];
    for v in 0..h.vertex_count() {
        let taken: std::collections::HashSet<usize> = h.neighbors(v).map(|w| colors[w]).collect();
        colors[v] = (0..).find(|c| !taken.contains(c)).unwrap();
    }
    Coloring::from_colors(colors)
}
