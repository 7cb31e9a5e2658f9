use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::address::z_to_address;
use super::{Address, AtomicError, Shell, SubBlock, ZMAX};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Layout {
    /// Rows `n`, columns `l`, each `[n + l, n]` entry filled in Z order.
    #[serde(rename = "madelung")]
    MadelungSkeleton,
    /// The skeleton with every `l > 0` entry split into its `j = l - 1/2`
    /// and `j = l + 1/2` multiplets.
    So42,
    /// SO42 mirrored left-right, then every `l`-block lowered by `l` rows.
    Scerri,
    /// The familiar 18-column chart with f (and g) rows set apart.
    Conventional18,
}

impl Layout {
    pub const ALL: [Layout; 4] = [Layout::MadelungSkeleton, Layout::So42, Layout::Scerri, Layout::Conventional18];

    pub fn as_str(self) -> &'static str {
        match self {
            Layout::MadelungSkeleton => "madelung",
            Layout::So42 => "so42",
            Layout::Scerri => "scerri",
            Layout::Conventional18 => "conventional18",
        }
    }
}

impl fmt::Display for Layout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Layout {
    type Err = AtomicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "madelung" | "madelung_skeleton" | "skeleton" => Ok(Layout::MadelungSkeleton),
            "so42" => Ok(Layout::So42),
            "scerri" => Ok(Layout::Scerri),
            "conventional18" | "conventional" => Ok(Layout::Conventional18),
            _ => Err(AtomicError::UnknownLayout(s.to_string())),
        }
    }
}

/// One placed element. Rows and columns are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
    pub z: u32,
    pub address: Address,
    pub subblock: SubBlock,
    /// 0-based index inside the `[n + l, n]` entry.
    pub offset: u32,
}

impl Cell {
    pub fn shell(&self) -> Shell {
        self.address.shell()
    }

    pub fn block_key(&self) -> (u32, u32) {
        self.shell().block_key()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableGrid {
    pub layout: Layout,
    pub zmax: u32,
    /// Sorted by `z`.
    pub cells: Vec<Cell>,
}

impl TableGrid {
    pub fn cell(&self, z: u32) -> Option<&Cell> {
        z.checked_sub(1).and_then(|i| self.cells.get(i as usize))
    }

    pub fn rows(&self) -> u32 {
        self.cells.iter().map(|c| c.row).max().unwrap_or(0)
    }

    pub fn cols(&self) -> u32 {
        self.cells.iter().map(|c| c.col).max().unwrap_or(0)
    }

    /// Cells grouped by their `[n + l, n]` entry, entries in Madelung order.
    pub fn blocks(&self) -> Vec<(Shell, Vec<&Cell>)> {
        let mut map: BTreeMap<(u32, u32), (Shell, Vec<&Cell>)> = BTreeMap::new();
        for c in &self.cells {
            map.entry(c.block_key()).or_insert_with(|| (c.shell(), Vec::new())).1.push(c);
        }
        map.into_values().collect()
    }
}

/// Column offset of the `l`-block in the SO42 layout. Blocks with `l > 0`
/// carry one spacer column between their two multiplets.
fn so42_block_offset(l: u32) -> u32 {
    (0..l).map(|k| if k == 0 { 2 } else { 4 * k + 3 }).sum()
}

fn so42_col(address: &Address, offset: u32) -> u32 {
    let gap = u32::from(address.subblock() == SubBlock::Second);
    1 + so42_block_offset(address.l) + offset + gap
}

/// Period of a shell in the 18-column chart: `ns`/`np` sit in period `n`,
/// `(n-1)d` in `n`, `(n-2)f` in `n`, and so on.
fn conventional_period(shell: Shell) -> u32 {
    if shell.l() <= 1 {
        shell.n()
    } else {
        shell.n() + shell.l() - 1
    }
}

pub fn build_table(layout: Layout, zmax: u32) -> Result<TableGrid, AtomicError> {
    if zmax == 0 || zmax > ZMAX {
        return Err(AtomicError::ZOutOfRange(zmax));
    }
    let mut cells = Vec::with_capacity(zmax as usize);
    let mut block_first = 1;
    let mut current: Option<Shell> = None;
    for z in 1..=zmax {
        let address = z_to_address(z)?;
        if current != Some(address.shell()) {
            current = Some(address.shell());
            block_first = z;
        }
        let offset = z - block_first;
        let l = address.l;
        let (row, col) = match layout {
            Layout::MadelungSkeleton => (address.n, 1 + 2 * l * l + offset),
            Layout::So42 | Layout::Scerri => (address.n, so42_col(&address, offset)),
            // placed in a second pass
            Layout::Conventional18 => (0, 0),
        };
        cells.push(Cell { row, col, z, address, subblock: address.subblock(), offset });
    }

    match layout {
        Layout::Scerri => {
            let lmax = cells.iter().map(|c| c.address.l).max().unwrap_or(0);
            let width = so42_block_offset(lmax + 1);
            for c in &mut cells {
                c.col = width + 1 - c.col;
                c.row += c.address.l;
            }
        }
        Layout::Conventional18 => place_conventional(&mut cells),
        _ => {}
    }
    Ok(TableGrid { layout, zmax, cells })
}

fn place_conventional(cells: &mut [Cell]) {
    let main_rows =
        cells.iter().filter(|c| c.address.l <= 2).map(|c| conventional_period(c.shell())).max().unwrap_or(0);
    let mut appendix: Vec<Shell> = Vec::new();
    for c in cells.iter_mut() {
        let shell = c.shell();
        let (row, col) = match shell.l() {
            0 if shell.n() == 1 && c.offset == 1 => (1, 18),
            0 => (shell.n(), 1 + c.offset),
            1 => (shell.n(), 13 + c.offset),
            2 => (conventional_period(shell), 3 + c.offset),
            l => {
                if appendix.last() != Some(&shell) {
                    appendix.push(shell);
                }
                let row = main_rows + 1 + appendix.len() as u32;
                let first = if l == 3 { 3 } else { 1 };
                (row, first + c.offset)
            }
        };
        c.row = row;
        c.col = col;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn coordinates_are_unique_in_every_layout() {
        for layout in Layout::ALL {
            for zmax in [1, 20, 118, 170, 218] {
                let grid = build_table(layout, zmax).unwrap();
                let coords: HashSet<(u32, u32)> = grid.cells.iter().map(|c| (c.row, c.col)).collect();
                assert_eq!(coords.len(), zmax as usize, "{layout} zmax={zmax}");
                assert!(grid.cells.iter().all(|c| c.row >= 1 && c.col >= 1));
            }
        }
    }

    #[test]
    fn so42_row_four() {
        let grid = build_table(Layout::So42, 20).unwrap();
        let row4: Vec<u32> = grid.cells.iter().filter(|c| c.row == 4).map(|c| c.z).collect();
        assert_eq!(row4, vec![19, 20]);
        assert!(grid.cells.iter().filter(|c| c.row == 4).all(|c| c.address.l == 0));
    }

    #[test]
    fn skeleton_entry_four_two() {
        let grid = build_table(Layout::MadelungSkeleton, 48).unwrap();
        let zs: Vec<u32> = grid.cells.iter().filter(|c| c.address.n == 4 && c.address.l == 2).map(|c| c.z).collect();
        assert_eq!(zs, (39..=48).collect::<Vec<_>>());
    }

    #[test]
    fn scerri_drops_p_blocks_one_row() {
        let so42 = build_table(Layout::So42, 10).unwrap();
        let scerri = build_table(Layout::Scerri, 10).unwrap();
        for (a, b) in so42.cells.iter().zip(&scerri.cells) {
            assert_eq!(b.row, a.row + a.address.l);
        }
        assert_eq!(scerri.cell(5).unwrap().row, so42.cell(5).unwrap().row + 1);
    }

    #[test]
    fn conventional_landmarks() {
        let grid = build_table(Layout::Conventional18, 118).unwrap();
        let at = |z: u32| {
            let c = grid.cell(z).unwrap();
            (c.row, c.col)
        };
        assert_eq!(at(1), (1, 1));
        assert_eq!(at(2), (1, 18));
        assert_eq!(at(21), (4, 3));
        assert_eq!(at(71), (6, 3));
        assert_eq!(at(86), (6, 18));
        assert_eq!(at(118), (7, 18));
        // La and Ac start the appendage rows
        assert_eq!(at(57), (9, 3));
        assert_eq!(at(89), (10, 3));
    }

    #[test]
    fn layout_errors() {
        assert!(matches!("hexagonal".parse::<Layout>(), Err(AtomicError::UnknownLayout(_))));
        assert!(build_table(Layout::So42, 0).is_err());
        assert!(build_table(Layout::So42, 219).is_err());
    }
}
