//! Plane trees: rooted trees whose children are ordered.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlaneParseError {
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected character {0:?} at byte {1}")]
    Unexpected(char, usize),
    #[error("label {0:?} is not a positive integer")]
    BadLabel(String),
    #[error("label {0} appears more than once")]
    DuplicateLabel(u32),
    #[error("trailing input after byte {0}")]
    Trailing(usize),
}

/// A node label with an ordered sequence of child subtrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneTree {
    pub label: u32,
    pub children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn leaf(label: u32) -> Self {
        PlaneTree { label, children: Vec::new() }
    }

    pub fn new(label: u32, children: Vec<PlaneTree>) -> Self {
        PlaneTree { label, children }
    }

    pub fn len(&self) -> usize {
        1 + self.children.iter().map(PlaneTree::len).sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All labels in preorder.
    pub fn labels(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len());
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels(&self, out: &mut Vec<u32>) {
        out.push(self.label);
        for c in &self.children {
            c.collect_labels(out);
        }
    }

    pub fn min_label(&self) -> u32 {
        self.children.iter().map(PlaneTree::min_label).fold(self.label, u32::min)
    }

    /// Whether every child label exceeds its parent label.
    pub fn is_increasing(&self) -> bool {
        self.children.iter().all(|c| c.label > self.label && c.is_increasing())
    }

    /// Whether no label repeats.
    pub fn has_distinct_labels(&self) -> bool {
        let mut labels = self.labels();
        labels.sort_unstable();
        labels.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        if !self.children.is_empty() {
            write!(f, "(")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn node(&mut self) -> Result<PlaneTree, PlaneParseError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.peek() {
                None => Err(PlaneParseError::UnexpectedEnd),
                Some(b) => Err(PlaneParseError::Unexpected(b as char, self.pos)),
            };
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let label: u32 = match text.parse() {
            Ok(l) if l > 0 => l,
            _ => return Err(PlaneParseError::BadLabel(text.to_string())),
        };
        let mut children = Vec::new();
        self.skip_ws();
        if self.peek() == Some(b'(') {
            self.pos += 1;
            loop {
                self.skip_ws();
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    None => return Err(PlaneParseError::UnexpectedEnd),
                    _ => children.push(self.node()?),
                }
            }
        }
        Ok(PlaneTree { label, children })
    }
}

impl FromStr for PlaneTree {
    type Err = PlaneParseError;

    /// Parses `label(child child ...)`; a leaf is a bare label.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let tree = p.node()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(PlaneParseError::Trailing(p.pos));
        }
        let mut labels = tree.labels();
        labels.sort_unstable();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(PlaneParseError::DuplicateLabel(w[0]));
        }
        Ok(tree)
    }
}

/// All increasing plane trees on `[n]`, built by inserting `i` into each of
/// the `2i - 3` slots of every tree on `[i - 1]`.
pub fn increasing_plane_trees(n: usize) -> Vec<PlaneTree> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![PlaneTree::leaf(1)];
    for label in 2..=n as u32 {
        let mut next = Vec::new();
        for t in &level {
            for slot in 0..insertion_slots(t) {
                let mut copy = t.clone();
                insert_at(&mut copy, slot, label);
                next.push(copy);
            }
        }
        level = next;
    }
    level
}

fn insertion_slots(t: &PlaneTree) -> usize {
    t.children.len() + 1 + t.children.iter().map(insertion_slots).sum::<usize>()
}

/// Inserts a new leaf in the `slot`-th gap (preorder over nodes, left to right
/// within a node's child list). Returns the number of slots consumed if the
/// slot was not found in this subtree.
fn insert_at(t: &mut PlaneTree, slot: usize, label: u32) -> Option<usize> {
    let gaps = t.children.len() + 1;
    if slot < gaps {
        t.children.insert(slot, PlaneTree::leaf(label));
        return None;
    }
    let mut rest = slot - gaps;
    for c in &mut t.children {
        rest -= insert_at(c, rest, label)?;
    }
    Some(slot - rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn parse_and_print_round_trip() {
        let text = "1(5(8(9)) 2(6) 3(7 4))";
        let t: PlaneTree = text.parse().unwrap();
        assert_eq!(t.to_string(), text);
        assert_eq!(t.len(), 9);
        assert_eq!(t.children.len(), 3);
        assert!(t.is_increasing());
    }

    #[test]
    fn increasing_check() {
        let bad: PlaneTree = "2(1)".parse().unwrap();
        assert!(!bad.is_increasing());
        let good: PlaneTree = "1(2 3(4))".parse().unwrap();
        assert!(good.is_increasing());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("1(2".parse::<PlaneTree>(), Err(PlaneParseError::UnexpectedEnd)));
        assert!(matches!("1(2 2)".parse::<PlaneTree>(), Err(PlaneParseError::DuplicateLabel(2))));
        assert!(matches!("1 2".parse::<PlaneTree>(), Err(PlaneParseError::Trailing(_))));
        assert!(matches!("0".parse::<PlaneTree>(), Err(PlaneParseError::BadLabel(_))));
        assert!("".parse::<PlaneTree>().is_err());
    }

    #[test]
    fn enumeration_counts_are_double_factorials() {
        let mut expected = 1usize;
        for n in 1..=7 {
            if n >= 2 {
                expected *= 2 * n - 3;
            }
            let all = increasing_plane_trees(n);
            assert_eq!(all.len(), expected, "n = {n}");
            let distinct: HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), expected);
            assert!(all.iter().all(|t| t.is_increasing() && t.len() == n));
        }
    }
}
