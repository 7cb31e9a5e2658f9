use serde::Serialize;

use super::address::{block_of, z_to_address};
use super::{Address, AtomicError, Shell, SubBlock, KNOWN_ZMAX};
use crate::particles::Registry;

/// Named rows of the table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Series {
    IronGroup,
    PalladiumGroup,
    PlatinumGroup,
    Lanthanides,
    Actinides,
    /// 5g, Z = 121..138.
    GFamily,
    /// 6f, Z = 139..152.
    Superactinides,
}

impl Series {
    fn of(shell: Shell) -> Option<Series> {
        match (shell.n(), shell.l()) {
            (3, 2) => Some(Series::IronGroup),
            (4, 2) => Some(Series::PalladiumGroup),
            (5, 2) => Some(Series::PlatinumGroup),
            (4, 3) => Some(Series::Lanthanides),
            (5, 3) => Some(Series::Actinides),
            (5, 4) => Some(Series::GFamily),
            (6, 3) => Some(Series::Superactinides),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    #[serde(rename = "Z")]
    pub z: u32,
    pub symbol: Option<String>,
    pub address: Address,
    pub shell: Shell,
    pub subblock: SubBlock,
    pub position: u32,
    pub subblock_length: u32,
    /// Column family in the SO(4,2)xSU(2) table.
    pub family: String,
    pub series: Option<Series>,
    /// Whether a known element (Z <= 118) shares the column.
    pub has_homologue: bool,
    pub notes: Vec<String>,
}

const S_FAMILIES: [&str; 2] = ["alkali metals", "alkaline earth metals"];
const P_FAMILIES: [&str; 6] = ["boron group", "carbon group", "pnictogens", "chalcogens", "halogens", "noble gases"];

fn column_family(l: u32, offset: u32) -> String {
    match l {
        0 => S_FAMILIES[offset as usize].to_string(),
        1 => P_FAMILIES[offset as usize].to_string(),
        2 => format!("group {}", 3 + offset),
        _ => format!("{}-block column {}", Shell::new_unchecked(l + 1, l).letter(), offset + 1),
    }
}

/// Column index inside the `[n + l, n]` entry, 0-based.
fn column_offset(a: &Address) -> u32 {
    let in_multiplet = ((a.mj + a.j).twice() / 2) as u32;
    if a.subblock() == SubBlock::Second {
        2 * a.l + in_multiplet
    } else {
        in_multiplet
    }
}

pub fn family_report(z: u32, registry: Option<&Registry>) -> Result<FamilyReport, AtomicError> {
    let address = z_to_address(z)?;
    let block = block_of(z)?;
    let offset = column_offset(&address);
    let has_homologue = (1..=KNOWN_ZMAX).filter(|&other| other != z).any(|other| {
        let a = z_to_address(other).expect("known range is inside the table");
        a.l == address.l && column_offset(&a) == offset
    });

    let mut notes = Vec::new();
    match z {
        1 => notes.push("hydrogen heads the alkali-metal column".to_string()),
        2 => notes.push("helium heads the alkaline-earth column".to_string()),
        _ => {}
    }
    if !has_homologue {
        notes.push("new family with no homologue among the known elements".to_string());
    }
    if block.subblock == SubBlock::First && block.position == block.length {
        notes.push(format!("closes the j = {} sub-block of {}", address.j, block.shell));
        if z == 62 {
            notes.push(
                "Sm2+ keeps six f electrons, a completely filled first f sub-block, matching its valence 2".to_string(),
            );
        }
    }

    Ok(FamilyReport {
        z,
        symbol: registry.and_then(|r| r.element(z).ok()).map(|e| e.symbol.clone()).filter(|s| s != "/"),
        address,
        shell: block.shell,
        subblock: block.subblock,
        position: block.position,
        subblock_length: block.length,
        family: column_family(address.l, offset),
        series: Series::of(block.shell),
        has_homologue,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn light_elements() {
        assert_eq!(family_report(1, None).unwrap().family, "alkali metals");
        assert_eq!(family_report(3, None).unwrap().family, "alkali metals");
        assert_eq!(family_report(2, None).unwrap().family, "alkaline earth metals");
        assert_eq!(family_report(10, None).unwrap().family, "noble gases");
        assert_eq!(family_report(21, None).unwrap().family, "group 3");
    }

    #[test]
    fn series_membership() {
        for (z, series) in [
            (57, Series::Lanthanides),
            (70, Series::Lanthanides),
            (89, Series::Actinides),
            (102, Series::Actinides),
            (121, Series::GFamily),
            (138, Series::GFamily),
            (139, Series::Superactinides),
            (152, Series::Superactinides),
            (71, Series::PlatinumGroup),
        ] {
            assert_eq!(family_report(z, None).unwrap().series, Some(series), "Z={z}");
        }
        assert_eq!(family_report(103, None).unwrap().series, None);
    }

    #[test]
    fn g_family_has_no_homologue() {
        for z in 121..=138 {
            assert!(!family_report(z, None).unwrap().has_homologue);
        }
        assert!(family_report(139, None).unwrap().has_homologue);
        assert!(family_report(168, None).unwrap().has_homologue);
        let r = family_report(125, None).unwrap();
        assert_eq!(r.family, "g-block column 5");
    }

    #[test]
    fn samarium_note() {
        let r = family_report(62, Some(&Registry::bundled())).unwrap();
        assert_eq!(r.symbol.as_deref(), Some("Sm"));
        assert!(r.notes.iter().any(|n| n.starts_with("Sm2+")));
    }
}
