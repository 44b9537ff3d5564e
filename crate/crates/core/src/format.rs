//! Line-oriented text formats for trees.
//!
//! * A tree on `[n]` is one line `p_1 ... p_n`, where `p_i` is the parent of
//!   label `i` and `0` marks the root.
//! * A tree over any other label set is two lines: `labels: l_1 ... l_m`
//!   followed by the parent of each listed label (`0` for the root).
//! * A colored tree is a tree followed by a line `black: c_1 ... c_j` naming
//!   the black children of the minimum label (the list may be empty).

use thiserror::Error;

use crate::tree::{RootedTree, TreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("no tree found in input")]
    Empty,
    #[error("{0:?} is not a non-negative integer")]
    BadNumber(String),
    #[error("expected a parent line after the labels line")]
    MissingParents,
    #[error("expected a line starting with {0:?}")]
    MissingLine(&'static str),
    #[error("unexpected extra input: {0:?}")]
    Trailing(String),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

fn numbers(line: &str) -> Result<Vec<u32>, FormatError> {
    line.split_whitespace().map(|w| w.parse::<u32>().map_err(|_| FormatError::BadNumber(w.to_string()))).collect()
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty())
}

/// Reads one tree from the front of `lines`.
fn read_tree<'a>(lines: &mut impl Iterator<Item = &'a str>) -> Result<RootedTree, FormatError> {
    let first = lines.next().ok_or(FormatError::Empty)?;
    if let Some(rest) = first.strip_prefix("labels:") {
        let labels = numbers(rest)?;
        let parents = numbers(lines.next().ok_or(FormatError::MissingParents)?)?;
        Ok(RootedTree::from_labels_and_parents(&labels, &parents)?)
    } else {
        Ok(RootedTree::from_parent_array(&numbers(first)?)?)
    }
}

/// Parses exactly one tree.
pub fn parse_tree(text: &str) -> Result<RootedTree, FormatError> {
    let mut lines = content_lines(text);
    let t = read_tree(&mut lines)?;
    match lines.next() {
        None => Ok(t),
        Some(extra) => Err(FormatError::Trailing(extra.to_string())),
    }
}

/// Parses every tree in a multi-tree listing, one after another.
pub fn parse_trees(text: &str) -> Result<Vec<RootedTree>, FormatError> {
    let mut lines = content_lines(text).peekable();
    let mut out = Vec::new();
    while lines.peek().is_some() {
        out.push(read_tree(&mut lines)?);
    }
    Ok(out)
}

fn join(values: impl IntoIterator<Item = u32>) -> String {
    values.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// Serializes a tree: one line on `[n]`, two lines otherwise. No trailing newline.
pub fn format_tree(t: &RootedTree) -> String {
    if t.is_standard() {
        join(t.parent_labels())
    } else {
        format!("labels: {}\n{}", join(t.labels().iter().copied()), join(t.parent_labels()))
    }
}

/// Parses a tree followed by its `black:` line.
pub fn parse_colored(text: &str) -> Result<(RootedTree, Vec<u32>), FormatError> {
    let mut lines = content_lines(text);
    let t = read_tree(&mut lines)?;
    let line = lines.next().ok_or(FormatError::MissingLine("black:"))?;
    let rest = line.strip_prefix("black:").ok_or(FormatError::MissingLine("black:"))?;
    let black = numbers(rest)?;
    match lines.next() {
        None => Ok((t, black)),
        Some(extra) => Err(FormatError::Trailing(extra.to_string())),
    }
}

/// Parses a sequence of colored trees, each a tree followed by its `black:` line.
pub fn parse_colored_trees(text: &str) -> Result<Vec<(RootedTree, Vec<u32>)>, FormatError> {
    let mut lines = content_lines(text).peekable();
    let mut out = Vec::new();
    while lines.peek().is_some() {
        let t = read_tree(&mut lines)?;
        let line = lines.next().ok_or(FormatError::MissingLine("black:"))?;
        let rest = line.strip_prefix("black:").ok_or(FormatError::MissingLine("black:"))?;
        out.push((t, numbers(rest)?));
    }
    Ok(out)
}

pub fn format_colored(t: &RootedTree, black: &[u32]) -> String {
    let list = join(black.iter().copied());
    if list.is_empty() {
        format!("{}\nblack:", format_tree(t))
    } else {
        format!("{}\nblack: {}", format_tree(t), list)
    }
}
