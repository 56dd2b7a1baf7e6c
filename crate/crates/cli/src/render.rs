use std::fmt::Write;

use ellblock_core::blocks::BlockPartition;
use ellblock_core::isometry::IsometryReport;
use ellblock_core::table::CharacterTable;
use serde::Serialize;

/// Left-aligned columns separated by two spaces, no trailing blanks.
pub fn grid(rows: &[Vec<String>]) -> String {
    let ncol = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncol)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if c + 1 < row.len() {
                line.extend(std::iter::repeat(' ').take(widths[c] - cell.chars().count()));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn table_text(t: &CharacterTable) -> String {
    let mut rows = Vec::new();
    let mut head = vec!["class".to_string()];
    head.extend(t.class_labels().iter().map(ToString::to_string));
    rows.push(head);
    let mut cent = vec!["|C(g)|".to_string()];
    cent.extend(t.centralizers().iter().map(ToString::to_string));
    rows.push(cent);
    for (i, lab) in t.char_labels().iter().enumerate() {
        let mut row = vec![lab.to_string()];
        row.extend(t.row(i).iter().map(ToString::to_string));
        rows.push(row);
    }
    grid(&rows)
}

#[derive(Serialize)]
pub struct TableRow {
    pub label: String,
    pub values: Vec<String>,
}

#[derive(Serialize)]
pub struct TableJson {
    pub group: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub order: String,
    pub classes: Vec<String>,
    pub centralizers: Vec<String>,
    pub rows: Vec<TableRow>,
}

pub fn table_json(group: String, t: &CharacterTable) -> TableJson {
    TableJson {
        n: group.strip_prefix("sym:").and_then(|n| n.parse().ok()),
        group,
        order: t.order().to_string(),
        classes: t.class_labels().iter().map(ToString::to_string).collect(),
        centralizers: t.centralizers().iter().map(ToString::to_string).collect(),
        rows: t
            .char_labels()
            .iter()
            .enumerate()
            .map(|(i, l)| TableRow {
                label: l.to_string(),
                values: t.row(i).iter().map(ToString::to_string).collect(),
            })
            .collect(),
    }
}

#[derive(Serialize)]
pub struct BlocksJson {
    pub group: String,
    pub ell: u64,
    pub singular_classes: Vec<String>,
    pub blocks: Vec<Vec<String>>,
    pub principal: usize,
}

pub fn blocks_json(group: String, ell: u64, t: &CharacterTable, singular: &[usize], b: &BlockPartition) -> BlocksJson {
    BlocksJson {
        group,
        ell,
        singular_classes: singular.iter().map(|&c| t.class_labels()[c].to_string()).collect(),
        blocks: b
            .blocks
            .iter()
            .map(|blk| blk.iter().map(|&i| t.char_labels()[i].to_string()).collect())
            .collect(),
        principal: b.principal,
    }
}

pub fn blocks_text(j: &BlocksJson) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}, ell = {}: {} blocks, linking across {} singular classes",
        j.group,
        j.ell,
        j.blocks.len(),
        j.singular_classes.len()
    );
    for (k, blk) in j.blocks.iter().enumerate() {
        let tag = if k == j.principal { " (principal)" } else { "" };
        let _ = writeln!(out, "block {}{tag}: {}", k + 1, blk.join(" "));
    }
    out
}

pub fn report_text(rep: &IsometryReport) -> String {
    let p = &rep.params;
    let mut out = String::new();
    let _ = write!(out, "{} isometry, ell = {}, w = {}, r = {}", p.kind, p.ell, p.w, p.r);
    if let Some(pairing) = &p.pairing {
        let _ = write!(out, ", pairing {pairing:?}");
    }
    out.push('\n');
    let mut rows = vec![vec![
        "lambda".to_string(),
        "mu".to_string(),
        "lhs".to_string(),
        "rhs".to_string(),
        "".to_string(),
    ]];
    for pc in &rep.pairs {
        rows.push(vec![
            pc.row.clone(),
            pc.col.clone(),
            pc.lhs.to_string(),
            pc.rhs.to_string(),
            if pc.ok { "ok" } else { "MISMATCH" }.to_string(),
        ]);
    }
    out.push_str(&grid(&rows));
    for c in &rep.checks {
        let status = match (c.ok, c.gating) {
            (true, _) => "ok",
            (false, true) => "FAILED",
            (false, false) => "fails (not required)",
        };
        let _ = write!(out, "check: {}: {status}", c.name);
        if !c.detail.is_empty() {
            let _ = write!(out, " [{}]", c.detail);
        }
        out.push('\n');
    }
    let bad = rep.failures().count();
    let _ = writeln!(
        out,
        "{}: {} of {} entries agree",
        if rep.pass { "PASS" } else { "FAIL" },
        rep.pairs.len() - bad,
        rep.pairs.len()
    );
    out
}
