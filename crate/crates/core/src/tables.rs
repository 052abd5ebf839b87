//! The two worked expansions (B4 and D4) as fixed-order text tables.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::richardson::{expansion_degree, structure_constant_for_word};
use crate::weyl::{elements_of_length, LieType, SignedPermutation, Word};

const GOLDEN_1: &str = include_str!("../data/table1.txt");
const GOLDEN_2: &str = include_str!("../data/table2.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExampleTable {
    /// `u = -2,-3,-4,1`, `v = 2,3,4,1` in B4.
    B4,
    /// `u = -2,-3,4,1`, `v = 2,3,1,4` in D4.
    D4,
}

impl ExampleTable {
    pub fn from_number(k: u8) -> Result<Self> {
        match k {
            1 => Ok(Self::B4),
            2 => Ok(Self::D4),
            _ => Err(Error::Parse(k.to_string(), "table number must be 1 or 2".into())),
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Self::B4 => 1,
            Self::D4 => 2,
        }
    }

    pub fn lie_type(self) -> LieType {
        match self {
            Self::B4 => LieType::B,
            Self::D4 => LieType::D,
        }
    }

    pub fn pair(self) -> (SignedPermutation, SignedPermutation) {
        let t = self.lie_type();
        let (u, v): (&[i32], &[i32]) = match self {
            Self::B4 => (&[-2, -3, -4, 1], &[2, 3, 4, 1]),
            Self::D4 => (&[-2, -3, 4, 1], &[2, 3, 1, 4]),
        };
        let mk = |x: &[i32]| SignedPermutation::new(x.to_vec(), t, 4).expect("valid element");
        (mk(u), mk(v))
    }

    pub fn golden(self) -> &'static str {
        match self {
            Self::B4 => GOLDEN_1,
            Self::D4 => GOLDEN_2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    #[serde(serialize_with = "crate::serialize_display")]
    pub word: Word,
    pub clan: String,
    pub constant: u8,
}

/// One row per `w` of the expansion degree, acting by the canonical
/// reduced word; rows sorted by reversed word.
pub fn generate_table(table: ExampleTable) -> Result<Vec<TableRow>> {
    let (u, v) = table.pair();
    let degree = expansion_degree(&u, &v)?;
    let mut rows = elements_of_length(4, table.lie_type(), degree)
        .iter()
        .map(|w| {
            let word = w.reduced_word();
            let r = structure_constant_for_word(&u, &v, &word)?;
            Ok(TableRow {
                word,
                clan: r.action.result.to_string(),
                constant: r.value,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| a.word.letters().iter().rev().cmp(b.word.letters().iter().rev()));
    Ok(rows)
}

pub fn render_table(rows: &[TableRow]) -> String {
    rows.iter()
        .map(|r| format!("{}\t{}\t{}\n", r.word, r.clan, r.constant))
        .collect()
}

/// Lines that differ from the golden copy: (1-based line, golden, generated).
pub fn check_table(table: ExampleTable) -> Result<Vec<(usize, String, String)>> {
    let generated = render_table(&generate_table(table)?);
    let golden = table.golden();
    if generated == golden {
        return Ok(Vec::new());
    }
    let (g, r): (Vec<&str>, Vec<&str>) = (golden.lines().collect(), generated.lines().collect());
    let mut diffs: Vec<(usize, String, String)> = (0..g.len().max(r.len()))
        .filter(|&k| g.get(k) != r.get(k))
        .map(|k| {
            (
                k + 1,
                g.get(k).unwrap_or(&"").to_string(),
                r.get(k).unwrap_or(&"").to_string(),
            )
        })
        .collect();
    if diffs.is_empty() {
        // Same lines, different trailing bytes.
        diffs.push((g.len() + 1, format!("{} bytes", golden.len()), format!("{} bytes", generated.len())));
    }
    Ok(diffs)
}
