//! Target graphs for `gen --model edges`: either an edge list of 0-based ids
//! (`u v` per line, `#` comments) or a small subset of Graphviz DOT.

use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphInput {
    /// Vertex names for DOT input, `None` for edge lists.
    pub names: Option<Vec<String>>,
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

pub fn parse_graph(text: &str) -> Result<GraphInput, String> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with("//"));
    match first {
        Some(line) if line.starts_with("graph") || line.starts_with("strict") => parse_dot(text),
        _ => parse_edge_list(text),
    }
}

pub fn parse_edge_list(text: &str) -> Result<GraphInput, String> {
    let mut edges = Vec::new();
    let mut vertices = 0;
    for (index, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = fields.as_slice() else {
            return Err(format!("line {}: expected `u v`", index + 1));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| format!("line {}: {s:?} is not a vertex id", index + 1))
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u == v {
            return Err(format!("line {}: self-loop on {u}", index + 1));
        }
        vertices = vertices.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    Ok(GraphInput {
        names: None,
        vertices,
        edges,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Id(String),
    Edge,
    Open,
    Close,
    End,
}

fn tokenize(text: &str) -> Result<Vec<Token>, String> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    let mut depth = 0usize; // inside [attribute lists]
    while let Some(c) = chars.next() {
        if depth > 0 {
            match c {
                '[' => depth += 1,
                ']' => depth -= 1,
                _ => {}
            }
            continue;
        }
        match c {
            c if c.is_whitespace() => {}
            '[' => depth = 1,
            '{' => tokens.push(Token::Open),
            '}' => tokens.push(Token::Close),
            ';' | ',' => tokens.push(Token::End),
            '#' => {
                while chars.next_if(|&c| c != '\n').is_some() {}
            }
            '/' if chars.peek() == Some(&'/') => {
                while chars.next_if(|&c| c != '\n').is_some() {}
            }
            '-' if chars.peek() == Some(&'-') => {
                chars.next();
                tokens.push(Token::Edge);
            }
            '-' if chars.peek() == Some(&'>') => {
                return Err("directed edges (`->`) are not supported".into());
            }
            '"' => {
                let mut name = String::new();
                loop {
                    match chars.next() {
                        Some('\\') => name.extend(chars.next()),
                        Some('"') => break,
                        Some(c) => name.push(c),
                        None => return Err("unterminated string".into()),
                    }
                }
                tokens.push(Token::Id(name));
            }
            c if c.is_alphanumeric() || c == '_' || c == '.' => {
                let mut name = String::from(c);
                while let Some(c) = chars.next_if(|c| c.is_alphanumeric() || *c == '_' || *c == '.') {
                    name.push(c);
                }
                tokens.push(Token::Id(name));
            }
            '=' => {
                // graph-level attribute such as `rankdir=LR`: drop the value
                if let Some(Token::Id(_)) = tokens.last() {
                    tokens.pop();
                }
                while chars.next_if(|c| c.is_whitespace()).is_some() {}
                if chars.next_if_eq(&'"').is_some() {
                    while chars.next_if(|&c| c != '"').is_some() {}
                    chars.next();
                } else {
                    while chars.next_if(|c| c.is_alphanumeric() || *c == '_' || *c == '.').is_some() {}
                }
            }
            other => return Err(format!("unexpected character {other:?}")),
        }
    }
    Ok(tokens)
}

/// Undirected DOT: `graph [name] { stmt; ... }` where each statement is a
/// node id or a chain `a -- b -- c`. Attributes are ignored. Vertex ids are
/// assigned in order of first appearance.
pub fn parse_dot(text: &str) -> Result<GraphInput, String> {
    let tokens = tokenize(text)?;
    let open = tokens
        .iter()
        .position(|t| *t == Token::Open)
        .ok_or("missing `{`")?;
    match &tokens[..open] {
        [Token::Id(g)] | [Token::Id(g), Token::Id(_)] if g == "graph" => {}
        [Token::Id(s), Token::Id(g), ..] if s == "strict" && g == "graph" => {}
        _ => return Err("expected `graph {`".into()),
    }
    let close = tokens
        .iter()
        .rposition(|t| *t == Token::Close)
        .filter(|&c| c > open)
        .ok_or("missing `}`")?;

    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut names = Vec::new();
    let mut edges = Vec::new();
    let mut id_of = |name: &str| {
        *ids.entry(name.to_owned()).or_insert_with(|| {
            names.push(name.to_owned());
            names.len() - 1
        })
    };

    for statement in tokens[open + 1..close].split(|t| *t == Token::End) {
        match statement {
            [] => {}
            [Token::Id(kw)] | [Token::Id(kw), ..] if kw == "node" || kw == "edge" || kw == "graph" => {}
            [Token::Id(name)] => {
                id_of(name);
            }
            [Token::Id(first), rest @ ..] => {
                let mut prev = id_of(first);
                for pair in rest.chunks(2) {
                    match pair {
                        [Token::Edge, Token::Id(next)] => {
                            let next = id_of(next);
                            if next == prev {
                                return Err(format!("self-loop on {first:?}"));
                            }
                            edges.push((prev, next));
                            prev = next;
                        }
                        _ => return Err("malformed edge statement".into()),
                    }
                }
            }
            _ => return Err("unsupported statement".into()),
        }
    }
    let vertices = names.len();
    Ok(GraphInput {
        names: Some(names),
        vertices,
        edges,
    })
}
