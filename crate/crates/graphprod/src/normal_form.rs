//! Expressions over the syllable alphabet and their canonical normal forms.
//!
//! An element of the graph product is represented by a reduced syllable
//! sequence in which no merge or deletion move applies, chosen to be the
//! lexicographically least vertex-id sequence among all reduced expressions
//! reachable by commuting swaps (a Cartier–Foata style representative).
//!
//! The canonical form is maintained incrementally by a right-to-left piling
//! insertion. For each incoming syllable on vertex `v` we scan left past
//! syllables on vertices adjacent to `v`. Meeting a syllable on `v` itself
//! merges the two (deleting the pair when the product is trivial); hitting a
//! non-adjacent vertex stops the scan, and the syllable is placed at the
//! lexicographically minimal admissible position inside the scanned window.
//! One insertion per input syllable yields the canonical form of the whole
//! expression, so reduction is O(n²) syllable operations.

use crate::error::{Error, Result};
use crate::graph::{PresentationGraph, VertexId, VertexSet};
use crate::vertex_group::{GroupElem, IDENTITY};

/// One letter of an expression: a non-trivial element of a vertex group.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Syllable {
    pub vertex: VertexId,
    pub value: GroupElem,
}

impl Syllable {
    /// Validates the syllable against the graph: vertex in range, value a
    /// non-identity element of that vertex's group.
    pub fn new(graph: &PresentationGraph, vertex: VertexId, value: GroupElem) -> Result<Self> {
        graph.check_vertex(vertex)?;
        if !graph.group(vertex).contains(value) {
            return Err(Error::InvalidElement {
                vertex,
                value,
                reason: "not an element of the vertex group".into(),
            });
        }
        if value == IDENTITY {
            return Err(Error::IdentitySyllable {
                token: format!("v{vertex}:{value}"),
            });
        }
        Ok(Syllable { vertex, value })
    }
}

/// A word over the syllable alphabet; possibly unreduced.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expression {
    syllables: Vec<Syllable>,
}

impl Expression {
    pub fn new(graph: &PresentationGraph, syllables: Vec<(VertexId, GroupElem)>) -> Result<Self> {
        let syllables = syllables
            .into_iter()
            .map(|(v, y)| Syllable::new(graph, v, y))
            .collect::<Result<Vec<_>>>()?;
        Ok(Expression { syllables })
    }

    pub fn from_syllables(syllables: Vec<Syllable>) -> Self {
        Expression { syllables }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }
}

/// Canonical reduced expression for a group element, together with its two
/// cached lengths: the syllable length λ and the weighted length ℓ.
///
/// Equality and hashing go through the canonical syllable sequence, so two
/// normal forms over the same graph are equal iff they denote the same
/// group element. All operations that need group structure take the graph
/// explicitly; mixing normal forms across graphs is a caller error.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    syllables: Vec<Syllable>,
    ell: u64,
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm {
            syllables: Vec::new(),
            ell: 0,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// The syllable length λ(g).
    pub fn syllable_length(&self) -> usize {
        self.syllables.len()
    }

    /// The weighted length ℓ(g) = Σ ℓ_{v_j}(y_j).
    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// Vertices that carry a syllable.
    pub fn support(&self) -> VertexSet {
        VertexSet::from_vertices(self.syllables.iter().map(|s| s.vertex))
    }

    /// Textual form `v<i>:<elt>` joined by spaces; empty for the identity.
    pub fn to_text(&self) -> String {
        self.syllables
            .iter()
            .map(|s| format!("v{}:{}", s.vertex, s.value))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl std::fmt::Display for NormalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_identity() {
            write!(f, "1")
        } else {
            write!(f, "{}", self.to_text())
        }
    }
}

impl std::fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl PresentationGraph {
    /// True iff every syllable of `g` lies in `J`, i.e. g ∈ G_J.
    pub fn support_in_clique(&self, g: &NormalForm, clique: &crate::graph::Clique) -> bool {
        g.support().is_subset_of(clique.vertex_set())
    }

    fn recompute_ell(&self, syllables: &[Syllable]) -> u64 {
        syllables
            .iter()
            .map(|s| self.group(s.vertex).length(s.value))
            .sum()
    }

    /// Piling insertion of one syllable at the right end; keeps the pile
    /// canonical. See the module docs for why each branch is safe.
    fn insert_syllable(&self, pile: &mut Vec<Syllable>, syl: Syllable) {
        debug_assert!(syl.value != IDENTITY);
        let v = syl.vertex;
        let mut barrier = pile.len();
        while barrier > 0 {
            let w = pile[barrier - 1].vertex;
            if w == v {
                let merged = self.group(v).multiply(pile[barrier - 1].value, syl.value);
                if merged == IDENTITY {
                    pile.remove(barrier - 1);
                } else {
                    pile[barrier - 1].value = merged;
                }
                return;
            }
            if !self.adjacent(w, v) {
                break;
            }
            barrier -= 1;
        }
        // Insert before the first window element with a larger vertex id:
        // that is the lexicographically least placement reachable by
        // commuting swaps within the window.
        let mut pos = pile.len();
        for (j, s) in pile.iter().enumerate().skip(barrier) {
            if s.vertex > v {
                pos = j;
                break;
            }
        }
        pile.insert(pos, syl);
    }

    fn canonicalize(&self, syllables: impl IntoIterator<Item = Syllable>) -> NormalForm {
        let mut pile: Vec<Syllable> = Vec::new();
        for syl in syllables {
            self.insert_syllable(&mut pile, syl);
        }
        let ell = self.recompute_ell(&pile);
        NormalForm {
            syllables: pile,
            ell,
        }
    }

    /// Canonical normal form of the element represented by `e`. Idempotent;
    /// two expressions denote the same element iff they reduce identically.
    pub fn reduce(&self, e: &Expression) -> NormalForm {
        self.canonicalize(e.syllables().iter().copied())
    }

    /// Canonical form of `g·y` for a single syllable `y`.
    pub(crate) fn append_syllable(&self, g: &NormalForm, syl: Syllable) -> NormalForm {
        let mut pile = g.syllables.clone();
        self.insert_syllable(&mut pile, syl);
        let ell = self.recompute_ell(&pile);
        NormalForm {
            syllables: pile,
            ell,
        }
    }

    /// Canonical form of the product `gh`.
    pub fn multiply(&self, g: &NormalForm, h: &NormalForm) -> NormalForm {
        let mut pile = g.syllables.clone();
        for &syl in &h.syllables {
            self.insert_syllable(&mut pile, syl);
        }
        let ell = self.recompute_ell(&pile);
        NormalForm {
            syllables: pile,
            ell,
        }
    }

    /// Canonical form of g⁻¹: reverse the syllables, invert each value,
    /// re-canonicalize. λ and ℓ are preserved.
    pub fn invert(&self, g: &NormalForm) -> NormalForm {
        self.canonicalize(g.syllables.iter().rev().map(|s| Syllable {
            vertex: s.vertex,
            value: self.group(s.vertex).invert(s.value),
        }))
    }

    /// Left-divisor test by the defining equation
    /// λ(g) = λ(h) + λ(h⁻¹ g).
    pub fn is_left_divisor(&self, h: &NormalForm, g: &NormalForm) -> bool {
        if h.syllable_length() > g.syllable_length() {
            return false;
        }
        let rest = self.multiply(&self.invert(h), g);
        g.syllable_length() == h.syllable_length() + rest.syllable_length()
    }

    /// Right-divisor test: λ(g) = λ(g h⁻¹) + λ(h).
    pub fn is_right_divisor(&self, h: &NormalForm, g: &NormalForm) -> bool {
        if h.syllable_length() > g.syllable_length() {
            return false;
        }
        let rest = self.multiply(g, &self.invert(h));
        g.syllable_length() == rest.syllable_length() + h.syllable_length()
    }

    /// Parses whitespace-separated `v<i>:<elt>` tokens into an expression;
    /// the empty string denotes the identity.
    pub fn parse_expression(&self, text: &str) -> Result<Expression> {
        let mut syllables = Vec::new();
        for token in text.split_whitespace() {
            let rest = token.strip_prefix('v').ok_or_else(|| Error::ParseElement {
                token: token.into(),
                reason: "expected `v<i>:<elt>`".into(),
            })?;
            let (vtx, val) = rest.split_once(':').ok_or_else(|| Error::ParseElement {
                token: token.into(),
                reason: "missing `:`".into(),
            })?;
            let vertex: usize = vtx.parse().map_err(|_| Error::ParseElement {
                token: token.into(),
                reason: "bad vertex id".into(),
            })?;
            let value: i64 = val.parse().map_err(|_| Error::ParseElement {
                token: token.into(),
                reason: "bad element value".into(),
            })?;
            syllables.push(Syllable::new(self, vertex, value)?);
        }
        Ok(Expression::from_syllables(syllables))
    }

    /// Parses and reduces in one step.
    pub fn parse_normal_form(&self, text: &str) -> Result<NormalForm> {
        Ok(self.reduce(&self.parse_expression(text)?))
    }

    /// Checks that `g` is structurally valid over this graph (vertex ids in
    /// range, values in their groups, non-identity). Useful at API
    /// boundaries where a normal form may come from elsewhere.
    pub fn check_normal_form(&self, g: &NormalForm) -> Result<()> {
        for s in &g.syllables {
            Syllable::new(self, s.vertex, s.value)?;
        }
        Ok(())
    }
}
