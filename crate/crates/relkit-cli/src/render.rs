//! Text rendering of relations and operation tables.
//!
//! The matrix style prints one header row of target labels and one line per
//! source element, `1` for related pairs and `.` (or `0` in dense style) for
//! unrelated ones.  The sets style prints each source element with its image
//! set.  Output is deterministic: the same relation renders to the same bytes.

use relkit_core::{BinOp, Relation};

/// Labeled incidence matrix, one trailing newline.
pub fn matrix(r: &Relation, dense: bool) -> String {
    let row_labels = r.src().labels();
    let col_labels = r.tgt().labels();
    let left_w = row_labels.iter().map(|l| l.len()).max().unwrap_or(0);
    let col_ws: Vec<usize> = col_labels.iter().map(|l| l.len().max(1)).collect();
    let empty = if dense { "0" } else { "." };
    let mut out = String::new();
    out.push_str(&format!("{:left_w$} ", ""));
    for (l, w) in col_labels.iter().zip(&col_ws) {
        out.push_str(&format!(" {l:>w$}"));
    }
    out.push('\n');
    for (i, label) in row_labels.iter().enumerate() {
        out.push_str(&format!("{label:>left_w$} "));
        for (j, w) in col_ws.iter().enumerate() {
            let cell = if r.get(i, j) { "1" } else { empty };
            out.push_str(&format!(" {cell:>w$}"));
        }
        out.push('\n');
    }
    out
}

/// Image sets, one `source: {targets}` line per source element.
pub fn sets(r: &Relation) -> String {
    let mut out = String::new();
    for (i, label) in r.src().labels().iter().enumerate() {
        let images: Vec<String> = r
            .row_ones(i)
            .map(|j| r.tgt().element_label(j).expect("index in range"))
            .collect();
        out.push_str(&format!("{label}: {{{}}}\n", images.join(", ")));
    }
    out
}

/// Composition table of a binary operation, carrier labels on both axes.
pub fn cayley(op: &BinOp) -> String {
    let labels = op.carrier().labels();
    let w = labels.iter().map(|l| l.len()).max().unwrap_or(0).max(1);
    let mut out = String::new();
    out.push_str(&format!("{:w$} |", ""));
    for l in &labels {
        out.push_str(&format!(" {l:>w$}"));
    }
    out.push('\n');
    out.push_str(&format!("{:-<w$}-+{:-<rest$}\n", "", "", rest = (w + 1) * labels.len()));
    for (i, l) in labels.iter().enumerate() {
        out.push_str(&format!("{l:>w$} |"));
        for k in 0..labels.len() {
            out.push_str(&format!(" {:>w$}", labels[op.apply(i, k)]));
        }
        out.push('\n');
    }
    out
}
