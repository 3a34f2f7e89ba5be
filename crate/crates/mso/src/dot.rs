use std::fmt::Write;

use mso_core::Tree;

/// Undirected DOT rendering.
pub fn to_dot(t: &Tree, name: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph \"{}\" {{", name.replace('"', "\\\""));
    for v in 0..t.order() {
        let _ = writeln!(s, "  {v};");
    }
    for (u, v) in t.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3() {
        assert_eq!(
            to_dot(&Tree::path(3), "p"),
            "graph \"p\" {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n"
        );
    }
}
