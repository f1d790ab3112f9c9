use std::fmt::Write;

use num_bigint::BigInt;
use serde_json::Value;

use crate::report::{LinkReport, PlumbingSection, SmaleReport, SmaleValue, TableRowReport};

fn vector(xs: &[BigInt]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn class_of(wu: &[BigInt], smale_type: impl std::fmt::Display) -> String {
    let wu = if wu.iter().all(|x| x == &BigInt::from(0)) { "0".to_string() } else { vector(wu) };
    format!("({wu}, {smale_type})")
}

pub fn table(rows: &[TableRowReport]) -> String {
    let mut s = String::new();
    writeln!(s, "| type | n | H²(K; Z) | σ(F) | α(K) | i(f) |").unwrap();
    writeln!(s, "|---|---|---|---|---|---|").unwrap();
    for r in rows {
        writeln!(
            s,
            "| {} | {} | {} | {} | {} | {} |",
            r.label.label, r.label.n, r.h2, r.signature, r.alpha, r.smale_type
        )
        .unwrap();
    }
    s
}

pub fn plumbing(p: &PlumbingSection, heading: &str) -> String {
    let mut s = String::new();
    writeln!(s, "{heading} Plumbing").unwrap();
    writeln!(s).unwrap();
    let kind = match &p.recognized {
        Some(l) => format!("Dynkin diagram {l}"),
        None => "not an A-D-E diagram (formal)".to_string(),
    };
    writeln!(s, "- graph: {kind}").unwrap();
    let ids: Vec<String> = p.vertex_ids.iter().map(|i| i.to_string()).collect();
    writeln!(s, "- vertices: {}", ids.join(", ")).unwrap();
    writeln!(s, "- intersection matrix:").unwrap();
    writeln!(s).unwrap();
    writeln!(s, "```").unwrap();
    for row in &p.intersection_matrix {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        writeln!(s, "{}", cells.join(" ")).unwrap();
    }
    writeln!(s, "```").unwrap();
    writeln!(s).unwrap();
    writeln!(s, "- Smith diagonal: {}", vector(&p.smith_diagonal)).unwrap();
    writeln!(s, "- H²(M; Z) = {}", p.h2).unwrap();
    writeln!(
        s,
        "- H¹(M; Z₂) basis: {}",
        if p.h1_mod2_basis.is_empty() { "none".into() } else { p.h1_mod2_basis.join(", ") }
    )
    .unwrap();
    writeln!(s, "- α = {}", p.alpha).unwrap();
    writeln!(s, "- σ(X) = {}", p.signature).unwrap();
    writeln!(s, "- χ(X) = {}", p.euler_characteristic).unwrap();
    let g2: Vec<String> = p.gamma2_zero.iter().map(|c| vector(c)).collect();
    writeln!(s, "- Γ₂(0) = {{{}}}", g2.join(", ")).unwrap();
    let tag = if p.formal { " (formal)" } else { "" };
    let note = if p.class.integral { "" } else { ", not integral" };
    let i = match &p.class.smale_type {
        Value::String(q) => q.clone(),
        v => v.to_string(),
    };
    writeln!(s, "- class (c, i) = {}{tag}{note}", class_of(&p.class.wu, i)).unwrap();
    writeln!(s).unwrap();
    s.push_str(&bockstein(p, heading));
    s
}

pub fn bockstein(p: &PlumbingSection, heading: &str) -> String {
    let mut s = String::new();
    writeln!(s, "{heading} Bockstein").unwrap();
    writeln!(s).unwrap();
    if p.bockstein.is_empty() {
        writeln!(s, "H¹(M; Z₂) = 0").unwrap();
        return s;
    }
    writeln!(s, "| x | β(x) in {} |", p.h2).unwrap();
    writeln!(s, "|---|---|").unwrap();
    for row in &p.bockstein {
        writeln!(s, "| {} | {} |", row.x, vector(&row.beta)).unwrap();
    }
    s
}

pub fn link(r: &LinkReport) -> String {
    let mut s = String::new();
    writeln!(s, "## {} (n = {})", r.label.label, r.label.n).unwrap();
    writeln!(s).unwrap();
    writeln!(s, "- germ: {}", r.germ).unwrap();
    writeln!(s, "- group: {} (order {})", r.group, r.group_order).unwrap();
    writeln!(s, "- #V(G) = {}", r.vertex_count).unwrap();
    writeln!(s, "- H²(K; Z) = {}", r.h2).unwrap();
    writeln!(s, "- σ(F) = {}", r.signature).unwrap();
    writeln!(s, "- α(K) = {}", r.alpha).unwrap();
    writeln!(
        s,
        "- inclusion K ⊂ R⁵: (c, i) = {}, parallelization {}",
        class_of(&r.link_inclusion.wu, &r.link_inclusion.smale_type),
        r.link_inclusion.parallelization
    )
    .unwrap();
    writeln!(
        s,
        "- Kinjo pushforward j ∘ g_G: (c, i) = {}",
        class_of(&r.kinjo_pushforward.wu, &r.kinjo_pushforward.smale_type)
    )
    .unwrap();
    writeln!(s, "- regularly homotopic: {}", if r.regularly_homotopic { "yes" } else { "no" }).unwrap();
    writeln!(s, "- Ω(ḡ_G ∘ p) = {}", r.kinjo).unwrap();
    writeln!(s, "- Ω(g_G ∘ p) = {}", r.kinjo_reversed).unwrap();
    writeln!(s, "- Ω(Φ|_S) = {}", r.np_smale).unwrap();
    writeln!(s).unwrap();
    s.push_str(&plumbing(&r.plumbing, "###"));
    s
}

pub fn smale(reports: &[SmaleReport]) -> String {
    let mut s = String::new();
    let pushforward = reports.iter().any(|r| matches!(r.class, SmaleValue::Pushforward { .. }));
    if pushforward {
        writeln!(s, "| type | n | immersion | j₊ Ω(g_G ∘ p) | Ω(Φ\\|_S) | verdict |").unwrap();
        writeln!(s, "|---|---|---|---|---|---|").unwrap();
    } else {
        writeln!(s, "| type | n | immersion | Smale invariant |").unwrap();
        writeln!(s, "|---|---|---|---|").unwrap();
    }
    for r in reports {
        let cells = match &r.class {
            SmaleValue::R4(c) => c.to_string(),
            SmaleValue::R5(c) => c.to_string(),
            SmaleValue::Pushforward { value, np, verdict } => format!("{value} | {np} | {verdict}"),
        };
        writeln!(s, "| {} | {} | {} | {cells} |", r.label.label, r.label.n, r.immersion).unwrap();
    }
    s
}
