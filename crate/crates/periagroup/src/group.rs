//! Vertex groups: finite cyclic, infinite cyclic, or an explicit table.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{PeriagroupError, Result};

/// Group elements. Finite groups use indices `0..order` with the identity at
/// 0; the infinite cyclic group uses the integers.
pub type Element = i64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    Infinite,
    /// `table[a][b]` is the index of `a * b`.
    Table(Vec<Vec<usize>>),
}

impl GroupSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            GroupSpec::Cyclic(n) if *n < 2 => Err(PeriagroupError::BadOrder(*n)),
            GroupSpec::Cyclic(_) | GroupSpec::Infinite => Ok(()),
            GroupSpec::Table(t) => validate_table(t),
        }
    }

    pub fn order(&self) -> Option<u64> {
        match self {
            GroupSpec::Cyclic(n) => Some(*n),
            GroupSpec::Infinite => None,
            GroupSpec::Table(t) => Some(t.len() as u64),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    pub fn has_order_two(&self) -> bool {
        self.order() == Some(2)
    }

    pub fn contains(&self, e: Element) -> bool {
        match self.order() {
            Some(n) => e >= 0 && (e as u64) < n,
            None => true,
        }
    }

    pub fn is_identity(&self, e: Element) -> bool {
        e == 0
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        match self {
            GroupSpec::Cyclic(n) => (a + b).rem_euclid(*n as i64),
            GroupSpec::Infinite => a + b,
            GroupSpec::Table(t) => t[a as usize][b as usize] as Element,
        }
    }

    pub fn inv(&self, a: Element) -> Element {
        match self {
            GroupSpec::Cyclic(n) => (-a).rem_euclid(*n as i64),
            GroupSpec::Infinite => -a,
            GroupSpec::Table(t) => t[a as usize].iter().position(|&x| x == 0).expect("validated table") as Element,
        }
    }

    /// Nontrivial elements in index order; `None` for infinite groups.
    pub fn nontrivial(&self) -> Option<Vec<Element>> {
        self.order().map(|n| (1..n as Element).collect())
    }

    /// Total order on elements used by canonical forms: indices for finite
    /// groups, `(|n|, sign)` with negatives first for the integers.
    pub fn sort_key(&self, e: Element) -> (u64, bool) {
        match self {
            GroupSpec::Infinite => (e.unsigned_abs(), e > 0),
            _ => (e as u64, false),
        }
    }

    /// The multiplication table of a finite group.
    pub fn table(&self) -> Option<Vec<Vec<usize>>> {
        match self {
            GroupSpec::Cyclic(n) => Some(cyclic_table(*n as usize)),
            GroupSpec::Infinite => None,
            GroupSpec::Table(t) => Some(t.clone()),
        }
    }

    pub fn name(&self) -> String {
        match self {
            GroupSpec::Cyclic(n) => format!("Z/{n}"),
            GroupSpec::Infinite => "Z".into(),
            GroupSpec::Table(t) => format!("table of order {}", t.len()),
        }
    }
}

fn validate_table(t: &[Vec<usize>]) -> Result<()> {
    let n = t.len();
    let bad = |msg: String| Err(PeriagroupError::BadTable(msg));
    if n < 2 {
        return bad(format!("order must be at least 2, got {n}"));
    }
    for (a, row) in t.iter().enumerate() {
        if row.len() != n {
            return bad(format!("row {a} has {} entries, expected {n}", row.len()));
        }
        if let Some(&x) = row.iter().find(|&&x| x >= n) {
            return bad(format!("entry {x} in row {a} is out of range"));
        }
        let mut seen = vec![false; n];
        for &x in row {
            if std::mem::replace(&mut seen[x], true) {
                return bad(format!("row {a} repeats {x}"));
            }
        }
    }
    for a in 0..n {
        if t[0][a] != a || t[a][0] != a {
            return bad("index 0 is not the identity".into());
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if t[t[a][b]][c] != t[a][t[b][c]] {
                    return bad(format!("({a}*{b})*{c} != {a}*({b}*{c})"));
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = PeriagroupError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Z" {
            return Ok(GroupSpec::Infinite);
        }
        let order = s
            .strip_prefix("Z/")
            .and_then(|n| n.parse::<u64>().ok())
            .ok_or_else(|| PeriagroupError::UnknownGroup(s.to_string()))?;
        let g = GroupSpec::Cyclic(order);
        g.validate()?;
        Ok(g)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum GroupRepr {
    Name(String),
    Table { table: Vec<Vec<usize>> },
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            GroupSpec::Table(t) => GroupRepr::Table { table: t.clone() },
            other => GroupRepr::Name(other.name()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let g = match GroupRepr::deserialize(d)? {
            GroupRepr::Name(name) => name.parse().map_err(serde::de::Error::custom)?,
            GroupRepr::Table { table } => GroupSpec::Table(table),
        };
        g.validate().map_err(serde::de::Error::custom)?;
        Ok(g)
    }
}

/// Multiplication table of `Z/n`, handy for tests and table round trips.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let z3 = GroupSpec::Cyclic(3);
        assert_eq!(z3.mul(2, 2), 1);
        assert_eq!(z3.inv(1), 2);
        assert_eq!(z3.nontrivial(), Some(vec![1, 2]));
        let z = GroupSpec::Infinite;
        assert_eq!(z.mul(3, -5), -2);
        assert_eq!(z.inv(4), -4);
        assert!(z.nontrivial().is_none());
        let mut keys: Vec<i64> = vec![2, -1, 1, -2, 3];
        keys.sort_by_key(|&e| z.sort_key(e));
        assert_eq!(keys, vec![-1, 1, -2, 2, 3]);
        let t = GroupSpec::Table(cyclic_table(4));
        assert_eq!(t.inv(1), 3);
        assert!(t.validate().is_ok());
    }

    #[test]
    fn tables_are_checked() {
        assert!(GroupSpec::Table(vec![vec![0, 1], vec![1, 1]]).validate().is_err());
        assert!(GroupSpec::Table(vec![vec![1, 0], vec![0, 1]]).validate().is_err());
        assert!(GroupSpec::Table(vec![vec![0]]).validate().is_err());
        // a Latin square that is not associative
        let quasi = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            GroupSpec::Table(quasi).validate(),
            Err(PeriagroupError::BadTable(_))
        ));
        assert_eq!(GroupSpec::Cyclic(1).validate(), Err(PeriagroupError::BadOrder(1)));
    }

    #[test]
    fn json() {
        let specs = [
            GroupSpec::Cyclic(2),
            GroupSpec::Infinite,
            GroupSpec::Table(cyclic_table(3)),
        ];
        let text = serde_json::to_string(&specs).unwrap();
        assert_eq!(text, r#"["Z/2","Z",{"table":[[0,1,2],[1,2,0],[2,0,1]]}]"#);
        let back: Vec<GroupSpec> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, specs);
        assert!(serde_json::from_str::<GroupSpec>("\"Q8\"").is_err());
        assert!(serde_json::from_str::<GroupSpec>("\"Z/1\"").is_err());
    }
}
