//! Text pictures of braid words.
//!
//! The ASCII form draws strands as columns two characters apart and spends
//! one row per letter, read top to bottom in word order. A letter `±i` draws
//! `\ /` across strands `i` and `i+1` and is tagged with the letter on the
//! right; `+i` is strand `i` passing over strand `i+1`.

use actop_core::braid::BraidWord;

fn strands_row(n: usize) -> String {
    vec!["|"; n].join(" ")
}

pub fn ascii(w: &BraidWord) -> String {
    let n = w.strands();
    if n == 0 {
        return String::from("(no strands)\n");
    }
    let mut out = strands_row(n);
    out.push('\n');
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize;
        let mut row: Vec<char> = strands_row(n).chars().collect();
        row[2 * (i - 1)] = '\\';
        row[2 * i] = '/';
        let row: String = row.into_iter().collect();
        out.push_str(&format!("{row}  {l}\n"));
    }
    out.push_str(&strands_row(n));
    out.push('\n');
    out
}

/// A Graphviz digraph: one node per strand end and per crossing, edges along
/// the strands.
pub fn dot(w: &BraidWord) -> String {
    let n = w.strands();
    let mut out = String::from("digraph braid {\n  rankdir=TB;\n");
    for k in 1..=n {
        out.push_str(&format!("  top{k} [label=\"{k}\", shape=plaintext];\n"));
    }
    let mut last: Vec<String> = (1..=n).map(|k| format!("top{k}")).collect();
    let mut edges = Vec::new();
    for (c, &l) in w.letters().iter().enumerate() {
        let i = l.unsigned_abs() as usize;
        let node = format!("x{}", c + 1);
        out.push_str(&format!("  {node} [label=\"{l}\", shape=circle];\n"));
        edges.push(format!("  {} -> {node};", last[i - 1]));
        edges.push(format!("  {} -> {node};", last[i]));
        last[i - 1] = node.clone();
        last[i] = node;
    }
    for k in 1..=n {
        out.push_str(&format!("  bottom{k} [label=\"{k}\", shape=plaintext];\n"));
        edges.push(format!("  {} -> bottom{k};", last[k - 1]));
    }
    for e in edges {
        out.push_str(&e);
        out.push('\n');
    }
    out.push_str("}\n");
    out
}
