//! Text tables recomputed from the library. Parametric families are
//! computed at a witness rank and compressed to symbolic rows.

use std::collections::BTreeSet;
use std::fmt::Write;

use shimura::rootsys::{Family, RootSystem, RootSystemType};
use shimura::symclass::SpecialPair;

pub const WITNESS_RANK: usize = 6;

const CLASSICAL: [Family; 4] = [Family::A, Family::B, Family::C, Family::D];

fn ty(f: Family, n: usize) -> RootSystemType {
    RootSystemType::new(f, n).expect("rank in range")
}

fn family_label(f: Family) -> String {
    format!("{f}_n")
}

/// Index `k` of a rank-`n` witness written relative to `n`: `1`, `2`, then
/// `n−2`, `n−1`, `n`.
fn sym_index(k: usize, n: usize) -> String {
    if k <= 2 && n - k > 2 {
        k.to_string()
    } else if k == n {
        "n".into()
    } else {
        format!("n−{}", n - k)
    }
}

fn subscript(k: usize, n: Option<usize>) -> String {
    match n {
        None => k.to_string(),
        Some(n) => {
            let s = sym_index(k, n);
            if s.len() > 1 && s != "n" {
                format!("({s})")
            } else {
                s
            }
        }
    }
}

fn term(c: i64, k: usize, n: Option<usize>) -> String {
    let sub = subscript(k, n);
    if c == 1 {
        format!("α{sub}")
    } else {
        format!("{c}α{sub}")
    }
}

/// `Σ c_k α_k`, collapsing runs of three or more equal coefficients into
/// `cα_a+…+cα_b` when rendering symbolically.
fn render_root(coeffs: &[i64], n: Option<usize>) -> String {
    let mut parts = Vec::new();
    let mut k = 0;
    while k < coeffs.len() {
        let mut end = k;
        while end + 1 < coeffs.len() && coeffs[end + 1] == coeffs[k] {
            end += 1;
        }
        if n.is_some() && end - k >= 2 {
            parts.push(format!("{}+…+{}", term(coeffs[k], k + 1, n), term(coeffs[k], end + 1, n)));
        } else {
            parts.extend((k..=end).map(|j| term(coeffs[j], j + 1, n)));
        }
        k = end + 1;
    }
    parts.join("+")
}

/// A set of nodes as `symbol1,symbol2,…`, collapsing runs of three or more
/// consecutive nodes when rendering symbolically.
fn render_nodes(symbol: &str, nodes: &BTreeSet<usize>, n: Option<usize>) -> String {
    if nodes.is_empty() {
        return "none".into();
    }
    let v: Vec<usize> = nodes.iter().copied().collect();
    let mut parts = Vec::new();
    let mut k = 0;
    while k < v.len() {
        let mut end = k;
        while end + 1 < v.len() && v[end + 1] == v[end] + 1 {
            end += 1;
        }
        if n.is_some() && end - k >= 2 {
            parts.push(format!("{symbol}{},…,{symbol}{}", subscript(v[k], n), subscript(v[end], n)));
        } else {
            parts.extend((k..=end).map(|j| format!("{symbol}{}", subscript(v[j], n))));
        }
        k = end + 1;
    }
    parts.join(",")
}

/// A group of special nodes: `s=k`, `1<s<n` or `s∈{…}`.
fn render_node_group(group: &BTreeSet<usize>, n: Option<usize>) -> String {
    let bare = |k: usize| n.map_or(k.to_string(), |n| sym_index(k, n));
    if group.len() == 1 {
        return format!("s={}", bare(*group.iter().next().unwrap()));
    }
    if let Some(n) = n {
        if *group == (2..n).collect::<BTreeSet<_>>() {
            return "1<s<n".into();
        }
    }
    format!("s∈{{{}}}", group.iter().map(|&k| bare(k)).collect::<Vec<_>>().join(","))
}

fn coefficients(rs: &RootSystem) -> Vec<i64> {
    rs.highest_root().coords().iter().map(|c| i64::try_from(c.to_integer()).expect("integral")).collect()
}

fn section2_row(label: &str, rs: &RootSystem, symbolic: Option<usize>, count: String) -> String {
    format!(
        "{label} | {} | {} | {count}",
        render_root(&coefficients(rs), symbolic),
        render_nodes("α", &rs.special_nodes(), symbolic)
    )
}

fn section2() -> String {
    let mut out = String::from("type | highest root | special roots | #\n");
    let n = WITNESS_RANK;
    for f in CLASSICAL {
        let rs = RootSystem::build(ty(f, n));
        let next = RootSystem::build(ty(f, n + 1)).special_nodes().len();
        let here = rs.special_nodes().len();
        let count = if here == n && next == n + 1 { "n".to_string() } else { here.to_string() };
        writeln!(out, "{}", section2_row(&family_label(f), &rs, Some(n), count)).unwrap();
    }
    for t in ["E6", "E7", "E8", "F4", "G2"] {
        let rs = RootSystem::build(t.parse().unwrap());
        let count = rs.special_nodes().len().to_string();
        writeln!(out, "{}", section2_row(t, &rs, None, count)).unwrap();
    }
    writeln!(out, "\nwitness rank {n}:").unwrap();
    for f in CLASSICAL {
        let rs = RootSystem::build(ty(f, n));
        let count = rs.special_nodes().len().to_string();
        writeln!(out, "{}", section2_row(&format!("{f}{n}"), &rs, None, count)).unwrap();
    }
    out
}

struct SymplecticRow {
    special: usize,
    weights: BTreeSet<usize>,
    kernel_index: u64,
}

fn symplectic_rows(rs: &RootSystem) -> Vec<SymplecticRow> {
    rs.special_nodes()
        .into_iter()
        .map(|s| {
            let v = SpecialPair::new(rs.clone(), s).expect("special node").symplectic_nodes();
            SymplecticRow { special: s, weights: v.nodes, kernel_index: v.kernel_index }
        })
        .collect()
}

fn weights_cell(row: &SymplecticRow, n: Option<usize>) -> String {
    let w = render_nodes("ϖ", &row.weights, n);
    if row.kernel_index > 1 && !row.weights.is_empty() {
        format!("{w} (index {})", row.kernel_index)
    } else {
        w
    }
}

/// Rows grouped by identical rendered output, in order of the first node.
fn grouped_rows(label: &str, rs: &RootSystem, n: Option<usize>) -> Vec<String> {
    let mut groups: Vec<(String, BTreeSet<usize>)> = Vec::new();
    for row in symplectic_rows(rs) {
        let cell = weights_cell(&row, n);
        match groups.iter_mut().find(|(c, _)| *c == cell) {
            Some((_, g)) => {
                g.insert(row.special);
            }
            None => groups.push((cell, [row.special].into())),
        }
    }
    groups.into_iter().map(|(cell, g)| format!("{label} | {} | {cell}", render_node_group(&g, n))).collect()
}

fn section10() -> String {
    let mut out = String::from("type | special node | symplectic weights\n");
    let n = WITNESS_RANK;
    for f in CLASSICAL {
        for line in grouped_rows(&family_label(f), &RootSystem::build(ty(f, n)), Some(n)) {
            writeln!(out, "{line}").unwrap();
        }
    }
    for t in ["E6", "E7"] {
        for line in grouped_rows(t, &RootSystem::build(t.parse().unwrap()), None) {
            writeln!(out, "{line}").unwrap();
        }
    }
    writeln!(out, "\nD4:").unwrap();
    let d4 = RootSystem::build(ty(Family::D, 4));
    for row in symplectic_rows(&d4) {
        writeln!(out, "D4 | s={} | {}", row.special, weights_cell(&row, None)).unwrap();
    }
    writeln!(out, "\nwitness rank {n}:").unwrap();
    for f in CLASSICAL {
        let rs = RootSystem::build(ty(f, n));
        for row in symplectic_rows(&rs) {
            writeln!(out, "{f}{n} | s={} | {}", row.special, weights_cell(&row, None)).unwrap();
        }
    }
    out
}

pub fn emit_tables(section: u8) -> Option<String> {
    match section {
        2 => Some(section2()),
        10 => Some(section10()),
        _ => None,
    }
}
