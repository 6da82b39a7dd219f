//! Edge-3-colorings and everything counted with them.
//!
//! Colors are the three nonzero elements of the Klein four-group
//! `Z2 x Z2`, so sums of colors are meaningful: `x + y + z = 0` for the
//! three distinct colors, and every element is its own inverse.

mod kempe;
mod kernel;
mod orthogonal;
mod psi;

pub use kempe::{kempe_chain, kempe_chain_two_colors, kempe_chains, kempe_swap, parity_residual, ChainKind, KempeChain};
pub use kernel::{
    count_colorings, count_decompositions, enumerate_colorings, ColoringSearch, Colorings,
};
pub use orthogonal::{
    are_orthogonal, color_pair_counts, co_cyclic, even_cycle_covers, kaszonyi_sum_check,
    EvenCover, KaszonyiSum,
};
pub use psi::{psi, psi_with, PsiMode, PsiValue};

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// An element `(z1, z2)` of `Z2 x Z2`, packed as `z1 << 1 | z2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(u8);

impl GroupElement {
    pub const ZERO: GroupElement = GroupElement(0b00);
    pub const A: GroupElement = GroupElement(0b01);
    pub const B: GroupElement = GroupElement(0b10);
    pub const C: GroupElement = GroupElement(0b11);

    pub fn new(z1: bool, z2: bool) -> Self {
        GroupElement((z1 as u8) << 1 | z2 as u8)
    }

    pub fn bits(self) -> (bool, bool) {
        (self.0 & 2 != 0, self.0 & 1 != 0)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn all() -> [GroupElement; 4] {
        [Self::ZERO, Self::A, Self::B, Self::C]
    }
}

impl Add for GroupElement {
    type Output = GroupElement;

    fn add(self, rhs: GroupElement) -> GroupElement {
        GroupElement(self.0 ^ rhs.0)
    }
}

impl std::iter::Sum for GroupElement {
    fn sum<I: Iterator<Item = GroupElement>>(iter: I) -> Self {
        iter.fold(GroupElement::ZERO, Add::add)
    }
}

pub fn group_add(x: GroupElement, y: GroupElement) -> GroupElement {
    x + y
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match Color::try_from(*self) {
            Ok(c) => write!(f, "{c}"),
            Err(_) => write!(f, "0"),
        }
    }
}

/// One of the three edge colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    A,
    B,
    C,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::A, Color::B, Color::C];

    pub fn element(self) -> GroupElement {
        match self {
            Color::A => GroupElement::A,
            Color::B => GroupElement::B,
            Color::C => GroupElement::C,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// The third color, given two distinct ones.
    pub fn third(self, other: Color) -> Color {
        debug_assert_ne!(self, other);
        Color::try_from(self.element() + other.element()).expect("distinct colors sum to a color")
    }

    pub fn letter(self) -> char {
        match self {
            Color::A => 'a',
            Color::B => 'b',
            Color::C => 'c',
        }
    }

    pub(crate) fn bit(self) -> u8 {
        1 << self as u8
    }

    pub(crate) fn from_bit(bit: u8) -> Color {
        match bit {
            1 => Color::A,
            2 => Color::B,
            4 => Color::C,
            _ => unreachable!("not a single color bit: {bit}"),
        }
    }
}

impl TryFrom<GroupElement> for Color {
    type Error = Error;

    fn try_from(g: GroupElement) -> Result<Color> {
        match g {
            GroupElement::A => Ok(Color::A),
            GroupElement::B => Ok(Color::B),
            GroupElement::C => Ok(Color::C),
            _ => Err(Error::hypothesis("zero is not a color")),
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Color {
    type Err = Error;

    fn from_str(s: &str) -> Result<Color> {
        match s {
            "a" => Ok(Color::A),
            "b" => Ok(Color::B),
            "c" => Ok(Color::C),
            _ => Err(Error::parse(0, format!("unknown color {s:?}"))),
        }
    }
}

/// A proper edge-3-coloring of a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring<'g> {
    graph: &'g Graph,
    colors: Vec<Color>,
}

impl<'g> EdgeColoring<'g> {
    /// Validates that every edge is colored and adjacent edges differ.
    pub fn new(graph: &'g Graph, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != graph.size() {
            return Err(Error::hypothesis(format!(
                "coloring has {} entries for {} edges",
                colors.len(),
                graph.size()
            )));
        }
        for v in 0..graph.order() {
            let mut seen = 0u8;
            for &(_, e) in graph.incident(v) {
                let bit = colors[e.0].bit();
                if seen & bit != 0 {
                    return Err(Error::hypothesis(format!(
                        "two edges at vertex {v} share color {}",
                        colors[e.0]
                    )));
                }
                seen |= bit;
            }
        }
        Ok(EdgeColoring { graph, colors })
    }

    pub(crate) fn new_unchecked(graph: &'g Graph, colors: Vec<Color>) -> Self {
        EdgeColoring { graph, colors }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[e.0]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn is_valid(&self) -> bool {
        EdgeColoring::new(self.graph, self.colors.clone()).is_ok()
    }

    /// The coloring with colors renamed by `perm[old.index()]`.
    pub fn permuted(&self, perm: [Color; 3]) -> EdgeColoring<'g> {
        EdgeColoring {
            graph: self.graph,
            colors: self.colors.iter().map(|c| perm[c.index()]).collect(),
        }
    }

    /// One `<edge index> <color>` line per edge.
    pub fn to_text(&self) -> String {
        self.colors
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{i} {c}\n"))
            .collect()
    }

    pub fn from_text(graph: &'g Graph, text: &str) -> Result<Self> {
        let mut colors = vec![None; graph.size()];
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let body = line.trim();
            if !body.is_empty() {
                let mut parts = body.split_whitespace();
                let (Some(idx), Some(col), None) = (parts.next(), parts.next(), parts.next()) else {
                    return Err(Error::parse(offset, "expected `<edge> <color>`"));
                };
                let idx: usize = idx
                    .parse()
                    .map_err(|_| Error::parse(offset, "edge index is not an integer"))?;
                let col: Color = col.parse().map_err(|_| Error::parse(offset, "color must be a, b or c"))?;
                let slot = colors
                    .get_mut(idx)
                    .ok_or_else(|| Error::parse(offset, format!("edge {idx} out of range")))?;
                if slot.replace(col).is_some() {
                    return Err(Error::parse(offset, format!("edge {idx} colored twice")));
                }
            }
            offset += line.len();
        }
        let colors = colors
            .into_iter()
            .enumerate()
            .map(|(i, c)| c.ok_or_else(|| Error::parse(offset, format!("edge {i} has no color"))))
            .collect::<Result<Vec<_>>>()?;
        EdgeColoring::new(graph, colors)
    }
}

/// A 3-edge-decomposition: a partition of the edges into three classes with
/// no two adjacent edges in one class. Class labels are normalized by first
/// occurrence, so equal partitions compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeDecomposition {
    classes: Vec<u8>,
}

impl EdgeDecomposition {
    pub fn from_coloring(coloring: &EdgeColoring<'_>) -> Self {
        let mut relabel = [u8::MAX; 3];
        let mut next = 0;
        let classes = coloring
            .colors()
            .iter()
            .map(|c| {
                let slot = &mut relabel[c.index()];
                if *slot == u8::MAX {
                    *slot = next;
                    next += 1;
                }
                *slot
            })
            .collect();
        EdgeDecomposition { classes }
    }

    pub fn class(&self, e: EdgeId) -> u8 {
        self.classes[e.0]
    }

    pub fn same_class(&self, e: EdgeId, f: EdgeId) -> bool {
        self.classes[e.0] == self.classes[f.0]
    }
}
