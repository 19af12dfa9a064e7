//! Plain edge-list text: a header line `n m` followed by `m` lines `u v`
//! with 0-based vertex labels.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, message: String| Error::Parse {
        position: line,
        message,
    };
    let (hl, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing header line \"n m\"".into()))?;
    let [n, m] = numbers::<2>(header).map_err(|m| err(hl, m))?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let [u, v] = numbers::<2>(text).map_err(|m| err(line, m))?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(
            hl,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, &edges)
}

pub fn render(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

fn numbers<const N: usize>(line: &str) -> std::result::Result<[usize; N], String> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != N {
        return Err(format!("expected {N} integers, got {:?}", line));
    }
    let mut out = [0; N];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p.parse().map_err(|_| format!("not a vertex count/label: {p:?}"))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let g = parse("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(render(&g), "3 2\n0 1\n1 2\n");
        assert_eq!(parse(&render(&Graph::cycle(5).unwrap())).unwrap(), Graph::cycle(5).unwrap());
        assert_eq!(parse("0 0").unwrap().order(), 0);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(parse("3 2\n0 1\n"), Err(Error::Parse { position: 1, .. })));
        assert!(matches!(parse("3 1\n0 x\n"), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
        assert!(matches!(parse("2 1\n0 4"), Err(Error::VertexOutOfRange { .. })));
    }
}
