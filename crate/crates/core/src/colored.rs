use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ArcColor {
    #[serde(rename = "b")]
    Blue,
    #[serde(rename = "r")]
    Red,
}

impl ArcColor {
    pub fn letter(self) -> char {
        match self {
            ArcColor::Blue => 'b',
            ArcColor::Red => 'r',
        }
    }
}

/// A digraph whose arcs each carry exactly one color. Opposite arcs may
/// differ in color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredDigraph {
    all: Digraph,
    blue: Digraph,
    red: Digraph,
}

impl ColoredDigraph {
    pub fn empty(n: usize) -> Self {
        ColoredDigraph {
            all: Digraph::empty(n),
            blue: Digraph::empty(n),
            red: Digraph::empty(n),
        }
    }

    pub fn from_arcs(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize, ArcColor)>,
    ) -> Result<Self> {
        let mut cd = Self::empty(n);
        for (u, v, c) in arcs {
            cd.add_arc(u, v, c)?;
        }
        Ok(cd)
    }

    pub fn add_arc(&mut self, u: usize, v: usize, color: ArcColor) -> Result<()> {
        self.all.add_arc(u, v)?;
        match color {
            ArcColor::Blue => self.blue.add_arc(u, v),
            ArcColor::Red => self.red.add_arc(u, v),
        }
    }

    pub fn remove_arc(&mut self, u: usize, v: usize) -> Option<ArcColor> {
        let c = self.color(u, v)?;
        self.all.remove_arc(u, v);
        self.blue.remove_arc(u, v);
        self.red.remove_arc(u, v);
        Some(c)
    }

    pub fn vertex_count(&self) -> usize {
        self.all.vertex_count()
    }

    pub fn color(&self, u: usize, v: usize) -> Option<ArcColor> {
        if self.blue.has_arc(u, v) {
            Some(ArcColor::Blue)
        } else if self.red.has_arc(u, v) {
            Some(ArcColor::Red)
        } else {
            None
        }
    }

    /// `u b-> v`
    pub fn blue_arc(&self, u: usize, v: usize) -> bool {
        self.blue.has_arc(u, v)
    }

    /// `u r-> v`
    pub fn red_arc(&self, u: usize, v: usize) -> bool {
        self.red.has_arc(u, v)
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.all.has_arc(u, v)
    }

    pub fn underlying(&self) -> &Digraph {
        &self.all
    }

    pub fn blue(&self) -> &Digraph {
        &self.blue
    }

    pub fn red(&self) -> &Digraph {
        &self.red
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, ArcColor)> + '_ {
        self.all
            .arcs()
            .map(|(u, v)| (u, v, self.color(u, v).expect("every arc is colored")))
    }

    /// Colors every arc of `d` by `color_of`.
    pub fn from_digraph(d: &Digraph, mut color_of: impl FnMut(usize, usize) -> ArcColor) -> Self {
        let mut cd = Self::empty(d.vertex_count());
        for (u, v) in d.arcs() {
            cd.add_arc(u, v, color_of(u, v)).expect("arcs of a digraph are valid");
        }
        cd
    }
}
