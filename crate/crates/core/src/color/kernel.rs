//! Backtracking kernel shared by counting and enumeration.
//!
//! Each step colors the uncolored edge with the fewest admissible colors. A
//! vertex with two colored edges leaves exactly one admissible color for its
//! third edge, so forced edges are always taken first and the search grows
//! outward from the colored region. An edge with no admissible color is a
//! dead end.

use super::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

const ALL: u8 = 0b111;

enum Step {
    Complete,
    DeadEnd,
    Branch(usize, u8),
}

struct Kernel<'g> {
    g: &'g Graph,
    vmask: Vec<u8>,
    ecolor: Vec<u8>,
    stack: Vec<(usize, u8)>,
    nodes: u64,
    budget: Option<u64>,
    state: State,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    AtSolution,
    Exhausted,
}

impl<'g> Kernel<'g> {
    fn new(g: &'g Graph, fixed: &[(EdgeId, Color)], budget: Option<u64>) -> Self {
        let mut k = Kernel {
            g,
            vmask: vec![0; g.order()],
            ecolor: vec![0; g.size()],
            stack: Vec::with_capacity(g.size()),
            nodes: 0,
            budget,
            state: State::Fresh,
        };
        for &(e, c) in fixed {
            let (a, b) = g.edge(e);
            let bit = c.bit();
            let clash = match k.ecolor[e.0] {
                0 => (k.vmask[a] | k.vmask[b]) & bit != 0,
                prev => prev != bit,
            };
            if clash {
                k.state = State::Exhausted;
                break;
            }
            if k.ecolor[e.0] == 0 {
                k.paint(e.0, bit);
            }
        }
        k
    }

    fn paint(&mut self, e: usize, bit: u8) {
        let (a, b) = self.g.edge(EdgeId(e));
        self.ecolor[e] = bit;
        self.vmask[a] |= bit;
        self.vmask[b] |= bit;
    }

    fn erase(&mut self, e: usize) {
        let (a, b) = self.g.edge(EdgeId(e));
        let bit = self.ecolor[e];
        self.ecolor[e] = 0;
        self.vmask[a] &= !bit;
        self.vmask[b] &= !bit;
    }

    fn select(&self) -> Step {
        let mut best: Option<(usize, u8)> = None;
        let mut best_count = 4;
        for (i, &(a, b)) in self.g.edges().iter().enumerate() {
            if self.ecolor[i] != 0 {
                continue;
            }
            let allowed = ALL & !(self.vmask[a] | self.vmask[b]);
            let count = allowed.count_ones();
            if count == 0 {
                return Step::DeadEnd;
            }
            if count < best_count {
                best = Some((i, allowed));
                best_count = count;
            }
        }
        match best {
            None => Step::Complete,
            Some((e, allowed)) => Step::Branch(e, allowed),
        }
    }

    /// Colors the top frame's edge with its next untried color.
    fn advance_top(&mut self) -> Result<()> {
        let top = self.stack.last_mut().expect("advance on empty stack");
        let bit = top.1 & top.1.wrapping_neg();
        top.1 &= !bit;
        let e = top.0;
        self.paint(e, bit);
        self.nodes += 1;
        match self.budget {
            Some(limit) if self.nodes > limit => Err(Error::Budget { nodes: limit }),
            _ => Ok(()),
        }
    }

    /// Undoes assignments until some frame has an untried color left.
    fn backtrack(&mut self) -> Result<bool> {
        while let Some(&(e, untried)) = self.stack.last() {
            self.erase(e);
            if untried != 0 {
                self.advance_top()?;
                return Ok(true);
            }
            self.stack.pop();
        }
        Ok(false)
    }

    /// Moves to the next complete coloring; `Ok(false)` once exhausted.
    fn next_solution(&mut self) -> Result<bool> {
        match self.state {
            State::Exhausted => return Ok(false),
            State::AtSolution => {
                if !self.backtrack()? {
                    self.state = State::Exhausted;
                    return Ok(false);
                }
            }
            State::Fresh => {}
        }
        loop {
            match self.select() {
                Step::Complete => {
                    self.state = State::AtSolution;
                    return Ok(true);
                }
                Step::DeadEnd => {
                    if !self.backtrack()? {
                        self.state = State::Exhausted;
                        return Ok(false);
                    }
                }
                Step::Branch(e, allowed) => {
                    self.stack.push((e, allowed));
                    self.advance_top()?;
                }
            }
        }
    }

    fn current(&self) -> Vec<Color> {
        self.ecolor.iter().map(|&b| Color::from_bit(b)).collect()
    }
}

fn check_shape(g: &Graph) -> Result<()> {
    if let Some(v) = (0..g.order()).find(|&v| g.valence(v) > 3) {
        return Err(Error::ValenceTooHigh {
            vertex: v,
            valence: g.valence(v),
        });
    }
    Ok(())
}

/// Configurable exhaustive search over the edge-3-colorings of a graph with
/// maximum valence 3, optionally with some edge colors fixed in advance.
#[derive(Clone, Debug)]
pub struct ColoringSearch<'g> {
    graph: &'g Graph,
    fixed: Vec<(EdgeId, Color)>,
    budget: Option<u64>,
}

impl<'g> ColoringSearch<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        check_shape(graph)?;
        Ok(ColoringSearch {
            graph,
            fixed: Vec::new(),
            budget: None,
        })
    }

    pub fn fix(mut self, e: EdgeId, c: Color) -> Result<Self> {
        self.graph.check_edge(e)?;
        self.fixed.push((e, c));
        Ok(self)
    }

    /// Fixes the three edges at `v` to `a`, `b`, `c` in edge order.
    pub fn fix_vertex(mut self, v: usize) -> Result<Self> {
        self.graph.check_vertex(v)?;
        if self.graph.valence(v) != 3 {
            return Err(Error::NoTrivalentVertex);
        }
        for (&(_, e), c) in self.graph.incident(v).iter().zip(Color::ALL) {
            self.fixed.push((e, c));
        }
        Ok(self)
    }

    /// Caps the number of backtracking nodes; exceeding it is an error.
    pub fn budget(mut self, nodes: Option<u64>) -> Self {
        self.budget = nodes;
        self
    }

    fn kernel(&self) -> Kernel<'g> {
        Kernel::new(self.graph, &self.fixed, self.budget)
    }

    pub fn count(&self) -> Result<u64> {
        let mut k = self.kernel();
        let mut total = 0u64;
        while k.next_solution()? {
            total = total.checked_add(1).ok_or(Error::Overflow)?;
        }
        Ok(total)
    }

    pub fn exists(&self) -> Result<bool> {
        self.kernel().next_solution()
    }

    /// Visits every coloring; the callback sees the colors by edge index.
    pub fn for_each(&self, mut f: impl FnMut(&[Color])) -> Result<()> {
        let mut k = self.kernel();
        let mut buf = Vec::with_capacity(self.graph.size());
        while k.next_solution()? {
            buf.clear();
            buf.extend(k.ecolor.iter().map(|&b| Color::from_bit(b)));
            f(&buf);
        }
        Ok(())
    }

    pub fn iter(&self) -> Colorings<'g> {
        Colorings {
            kernel: self.kernel(),
            failed: false,
        }
    }
}

/// Stream of colorings in search order. A budget overrun surfaces as one
/// `Err` item, after which the stream ends.
pub struct Colorings<'g> {
    kernel: Kernel<'g>,
    failed: bool,
}

impl<'g> Iterator for Colorings<'g> {
    type Item = Result<EdgeColoring<'g>>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        match self.kernel.next_solution() {
            Ok(true) => Some(Ok(EdgeColoring::new_unchecked(
                self.kernel.g,
                self.kernel.current(),
            ))),
            Ok(false) => None,
            Err(e) => {
                self.failed = true;
                Some(Err(e))
            }
        }
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// `|EC(g)|` for a connected graph of maximum valence 3.
pub fn count_colorings(g: &Graph) -> Result<u64> {
    require_connected(g)?;
    ColoringSearch::new(g)?.count()
}

pub fn enumerate_colorings(g: &Graph) -> Result<Colorings<'_>> {
    require_connected(g)?;
    Ok(ColoringSearch::new(g)?.iter())
}

/// `|ED(g)|`, counted as the colorings with the three edges at the first
/// trivalent vertex fixed to `a`, `b`, `c`.
pub fn count_decompositions(g: &Graph) -> Result<u64> {
    check_shape(g)?;
    let v = g.first_trivalent().ok_or(Error::NoTrivalentVertex)?;
    ColoringSearch::new(g)?.fix_vertex(v)?.count()
}
