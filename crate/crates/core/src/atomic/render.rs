//! Text, CSV and JSON forms of a [`TableGrid`].

use std::fmt::Write as _;

use serde::Serialize;

use super::{Layout, TableGrid};
use crate::particles::Registry;

pub const CSV_HEADER: [&str; 9] = ["row", "col", "Z", "symbol", "n", "l", "two_j", "two_mj", "subblock"];

fn label(registry: Option<&Registry>, z: u32) -> String {
    registry.map_or_else(|| z.to_string(), |r| r.cell_label(z))
}

/// One cell in the flat form shared by the CSV and JSON outputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellRecord {
    pub row: u32,
    pub col: u32,
    #[serde(rename = "Z")]
    pub z: u32,
    pub symbol: String,
    pub n: u32,
    pub l: u32,
    pub two_j: i32,
    pub two_mj: i32,
    pub subblock: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockRecord {
    pub shell: String,
    pub n: u32,
    pub l: u32,
    /// `[n + l, n]`.
    pub key: [u32; 2],
    pub cells: Vec<CellRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridDocument {
    pub layout: Layout,
    pub zmax: u32,
    pub blocks: Vec<BlockRecord>,
}

pub fn records(grid: &TableGrid, registry: Option<&Registry>) -> Vec<CellRecord> {
    grid.cells
        .iter()
        .map(|c| CellRecord {
            row: c.row,
            col: c.col,
            z: c.z,
            symbol: label(registry, c.z),
            n: c.address.n,
            l: c.address.l,
            two_j: c.address.j.twice(),
            two_mj: c.address.mj.twice(),
            subblock: c.subblock.as_str().to_string(),
        })
        .collect()
}

pub fn document(grid: &TableGrid, registry: Option<&Registry>) -> GridDocument {
    let mut all = records(grid, registry).into_iter();
    let blocks = grid
        .blocks()
        .into_iter()
        .map(|(shell, cells)| BlockRecord {
            shell: shell.to_string(),
            n: shell.n(),
            l: shell.l(),
            key: [shell.n() + shell.l(), shell.n()],
            cells: all.by_ref().take(cells.len()).collect(),
        })
        .collect();
    GridDocument { layout: grid.layout, zmax: grid.zmax, blocks }
}

pub fn to_csv(grid: &TableGrid, registry: Option<&Registry>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("writing to memory");
    for r in records(grid, registry) {
        w.write_record([
            r.row.to_string(),
            r.col.to_string(),
            r.z.to_string(),
            r.symbol,
            r.n.to_string(),
            r.l.to_string(),
            r.two_j.to_string(),
            r.two_mj.to_string(),
            r.subblock,
        ])
        .expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is UTF-8")
}

pub fn to_json(grid: &TableGrid, registry: Option<&Registry>) -> String {
    serde_json::to_string_pretty(&document(grid, registry)).expect("grid serializes")
}

pub fn to_text(grid: &TableGrid, registry: Option<&Registry>) -> String {
    match grid.layout {
        Layout::MadelungSkeleton => skeleton_text(grid),
        _ => grid_text(grid, registry),
    }
}

/// Rows `n`, columns `l`, entries written as `{first to last}`.
fn skeleton_text(grid: &TableGrid) -> String {
    let blocks = grid.blocks();
    let rows = blocks.iter().map(|(s, _)| s.n()).max().unwrap_or(0);
    let cols = blocks.iter().map(|(s, _)| s.l()).max().map_or(0, |l| l + 1);
    let mut table = vec![vec![String::new(); cols as usize]; rows as usize];
    for (shell, cells) in &blocks {
        let first = cells.first().map(|c| c.z).unwrap_or_default();
        let last = cells.last().map(|c| c.z).unwrap_or_default();
        table[shell.n() as usize - 1][shell.l() as usize] = match last - first {
            0 => format!("{{{first}}}"),
            1 => format!("{{{first} {last}}}"),
            _ => format!("{{{first} to {last}}}"),
        };
    }
    let width = table.iter().flatten().map(String::len).max().unwrap_or(1).max(3);
    let mut out = String::new();
    let _ = write!(out, "{:>3} ", "n\\l");
    for l in 0..cols {
        let _ = write!(out, " {l:<width$}");
    }
    out = out.trim_end().to_string();
    out.push('\n');
    for (i, row) in table.iter().enumerate() {
        let mut line = format!("{:>3} ", i + 1);
        for entry in row {
            let _ = write!(line, " {entry:<width$}");
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn grid_text(grid: &TableGrid, registry: Option<&Registry>) -> String {
    let labels: Vec<String> = grid.cells.iter().map(|c| label(registry, c.z)).collect();
    let width = labels.iter().map(String::len).max().unwrap_or(1).max(3);
    let (rows, cols) = (grid.rows() as usize, grid.cols() as usize);
    let mut table = vec![vec![None; cols]; rows];
    for (c, label) in grid.cells.iter().zip(&labels) {
        table[c.row as usize - 1][c.col as usize - 1] = Some(label.as_str());
    }
    let mut out = String::new();
    for (i, row) in table.iter().enumerate() {
        let mut line = format!("{:>3} |", i + 1);
        for cell in row {
            let _ = write!(line, " {:>width$}", cell.unwrap_or(""));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atomic::build_table;

    #[test]
    fn csv_header_and_first_row() {
        let grid = build_table(Layout::So42, 2).unwrap();
        let csv = to_csv(&grid, Some(&Registry::bundled()));
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("row,col,Z,symbol,n,l,two_j,two_mj,subblock"));
        assert_eq!(lines.next(), Some("1,1,1,H,1,0,1,-1,ONLY"));
        assert_eq!(lines.next(), Some("1,2,2,He,1,0,1,1,ONLY"));
    }

    #[test]
    fn skeleton_text_matches_block_notation() {
        let grid = build_table(Layout::MadelungSkeleton, 20).unwrap();
        let text = to_text(&grid, None);
        assert!(text.contains("{1 2}"));
        assert!(text.contains("{5 to 10}"));
        let row4 = text.lines().find(|l| l.trim_start().starts_with('4')).unwrap();
        assert!(row4.contains("{19 20}"));
    }

    #[test]
    fn json_nests_cells_by_block() {
        let grid = build_table(Layout::So42, 10).unwrap();
        let doc = document(&grid, None);
        let shells: Vec<&str> = doc.blocks.iter().map(|b| b.shell.as_str()).collect();
        assert_eq!(shells, ["1s", "2s", "2p"]);
        assert_eq!(doc.blocks[2].cells.iter().map(|c| c.z).collect::<Vec<_>>(), (5..=10).collect::<Vec<_>>());
        assert_eq!(doc.blocks[2].cells[0].subblock, "FIRST");
    }

    #[test]
    fn grid_text_places_labels() {
        let grid = build_table(Layout::So42, 4).unwrap();
        let text = to_text(&grid, Some(&Registry::bundled()));
        assert_eq!(text, "  1 |   H  He\n  2 |  Li  Be\n");
    }
}
