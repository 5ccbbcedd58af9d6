//! Sidecar files mapping vertex ids of an expanded graph to their words,
//! one `id<TAB>label` line per vertex.

use std::fmt::Write;

use sierpinski_core::sierpinski::{PolymericLabel, PolymericLayout};
use sierpinski_core::word::WordCodec;
use sierpinski_core::Vertex;

fn word(letters: &[Vertex]) -> String {
    letters.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(".")
}

/// Labels of `S(G,t)`: the word, letters separated by `.`.
pub fn sierpinski_labels(n: u32, t: u32) -> String {
    let codec = WordCodec::new(n, t);
    let mut out = String::new();
    for id in 1..=codec.count().expect("order fits in u64") {
        writeln!(out, "{id}\t{}", word(&codec.decode(id))).unwrap();
    }
    out
}

/// Labels of `P(G,t)`: `a<level>:<index>` for hubs, `v<level>:<word>` for
/// the vertices of each level's `S(G, level)`.
pub fn polymeric_labels(layout: &PolymericLayout) -> String {
    let mut out = String::new();
    for id in 1..=layout.order() {
        let label = match layout.label(id as Vertex) {
            PolymericLabel::Hub { level, index } => format!("a{level}:{index}"),
            PolymericLabel::Word { level, word: w } => format!("v{level}:{}", word(&w)),
        };
        writeln!(out, "{id}\t{label}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_label_files() {
        assert_eq!(sierpinski_labels(2, 2), "1\t1.1\n2\t1.2\n3\t2.1\n4\t2.2\n");
        let p = polymeric_labels(&PolymericLayout::new(2, 2));
        let lines: Vec<&str> = p.lines().collect();
        assert_eq!(lines.len(), 9);
        assert_eq!(lines[0], "1\ta1:1");
        assert_eq!(lines[1], "2\tv1:1");
        assert_eq!(lines[3], "4\ta2:1");
        assert_eq!(lines[8], "9\tv2:2.2");
    }
}
