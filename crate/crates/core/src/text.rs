//! Canonical text forms for keys, key lists and trees, used for witnesses in
//! check reports. Each renderer has a parser so witnesses can be replayed;
//! round-tripping is a checked property.
//!
//! Grammar (whitespace between tree tokens is flexible, renders use single
//! spaces):
//!
//! ```text
//! key       := '-'? digit+                  ; 64-bit signed
//! list      := '[' (key (',' key)*)? ']'
//! node-tree := '.'                          ; empty
//!            | '(' key node-tree node-tree ')'
//! leaf-tree := '_'                          ; empty leaf
//!            | key                          ; leaf
//!            | '(' leaf-tree leaf-tree ')'  ; branch
//! ```

use crate::trees::{Key, LeafTree, NodeTree};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset the parse failed at.
    pub at: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.at, self.msg)
    }
}

impl std::error::Error for ParseError {}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

pub fn render_list(l: &[Key]) -> String {
    let mut out = String::from("[");
    for (i, k) in l.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&k.to_string());
    }
    out.push(']');
    out
}

pub fn render_node_tree(t: &NodeTree) -> String {
    // Iterative pre-order print; right child pushed first.
    enum Item<'t> {
        Tree(&'t NodeTree),
        Text(&'static str),
    }
    let mut out = String::new();
    let mut stack = vec![Item::Tree(t)];
    while let Some(item) = stack.pop() {
        match item {
            Item::Text(s) => out.push_str(s),
            Item::Tree(NodeTree::Empty) => out.push('.'),
            Item::Tree(NodeTree::Node(k, l, r)) => {
                out.push('(');
                out.push_str(&k.to_string());
                out.push(' ');
                stack.push(Item::Text(")"));
                stack.push(Item::Tree(r));
                stack.push(Item::Text(" "));
                stack.push(Item::Tree(l));
            }
        }
    }
    out
}

pub fn render_leaf_tree(t: &LeafTree) -> String {
    enum Item<'t> {
        Tree(&'t LeafTree),
        Text(&'static str),
    }
    let mut out = String::new();
    let mut stack = vec![Item::Tree(t)];
    while let Some(item) = stack.pop() {
        match item {
            Item::Text(s) => out.push_str(s),
            Item::Tree(LeafTree::Leaf(None)) => out.push('_'),
            Item::Tree(LeafTree::Leaf(Some(k))) => out.push_str(&k.to_string()),
            Item::Tree(LeafTree::Branch(l, r)) => {
                out.push('(');
                stack.push(Item::Text(")"));
                stack.push(Item::Tree(r));
                stack.push(Item::Text(" "));
                stack.push(Item::Tree(l));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

struct Cursor<'s> {
    bytes: &'s [u8],
    pos: usize,
}

impl<'s> Cursor<'s> {
    fn new(s: &'s str) -> Self {
        Cursor { bytes: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(got) if got == b => {
                self.pos += 1;
                Ok(())
            }
            got => Err(self.err(format!(
                "expected '{}', found {}",
                b as char,
                got.map_or_else(|| "end of input".to_string(), |g| format!("'{}'", g as char))
            ))),
        }
    }

    fn err(&self, msg: String) -> ParseError {
        ParseError { at: self.pos, msg }
    }

    fn key(&mut self) -> Result<Key, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii slice");
        text.parse::<Key>()
            .map_err(|e| ParseError { at: start, msg: format!("bad key '{text}': {e}") })
    }

    fn done(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(b) => Err(self.err(format!("trailing input starting with '{}'", b as char))),
        }
    }
}

pub fn parse_list(s: &str) -> Result<Vec<Key>, ParseError> {
    let mut c = Cursor::new(s);
    c.expect(b'[')?;
    let mut out = Vec::new();
    if c.peek() != Some(b']') {
        loop {
            out.push(c.key()?);
            match c.peek() {
                Some(b',') => {
                    c.pos += 1;
                }
                Some(b']') => break,
                _ => return Err(c.err("expected ',' or ']'".to_string())),
            }
        }
    }
    c.expect(b']')?;
    c.done()?;
    Ok(out)
}

pub fn parse_node_tree(s: &str) -> Result<NodeTree, ParseError> {
    let mut c = Cursor::new(s);
    let t = node_tree(&mut c)?;
    c.done()?;
    Ok(t)
}

fn node_tree(c: &mut Cursor) -> Result<NodeTree, ParseError> {
    match c.peek() {
        Some(b'.') => {
            c.pos += 1;
            Ok(NodeTree::Empty)
        }
        Some(b'(') => {
            c.pos += 1;
            let key = c.key()?;
            let l = node_tree(c)?;
            let r = node_tree(c)?;
            c.expect(b')')?;
            Ok(NodeTree::node(key, l, r))
        }
        _ => Err(c.err("expected '.' or '('".to_string())),
    }
}

pub fn parse_leaf_tree(s: &str) -> Result<LeafTree, ParseError> {
    let mut c = Cursor::new(s);
    let t = leaf_tree(&mut c)?;
    c.done()?;
    Ok(t)
}

fn leaf_tree(c: &mut Cursor) -> Result<LeafTree, ParseError> {
    match c.peek() {
        Some(b'_') => {
            c.pos += 1;
            Ok(LeafTree::Leaf(None))
        }
        Some(b'(') => {
            c.pos += 1;
            let l = leaf_tree(c)?;
            let r = leaf_tree(c)?;
            c.expect(b')')?;
            Ok(LeafTree::branch(l, r))
        }
        Some(b) if b == b'-' || b.is_ascii_digit() => Ok(LeafTree::Leaf(Some(c.key()?))),
        _ => Err(c.err("expected '_', '(' or a key".to_string())),
    }
}
