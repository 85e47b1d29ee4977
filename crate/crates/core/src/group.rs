//! Finite groups given by multiplication tables.

use serde::Serialize;

use crate::error::HopfError;
use crate::linalg::FieldSpec;
use crate::report::{AxiomResult, VerificationReport, Witness};

/// A finite group on the indices `0..order`. The table is the single source of truth;
/// the zoo constructors always put the identity at index 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FiniteGroup {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
    #[serde(rename = "names")]
    pub element_names: Vec<String>,
}

impl FiniteGroup {
    /// Builds a group from its table, locating the identity and inverses, and
    /// rejects tables that are not group laws.
    pub fn new(table: Vec<Vec<usize>>, element_names: Vec<String>) -> Result<Self, HopfError> {
        let order = table.len();
        if order == 0 {
            return Err(HopfError::Shape("a group needs at least one element".into()));
        }
        if element_names.len() != order {
            return Err(HopfError::Shape(format!(
                "{} names for a group of order {order}",
                element_names.len()
            )));
        }
        if table
            .iter()
            .any(|row| row.len() != order || row.iter().any(|&x| x >= order))
        {
            return Err(HopfError::Shape(format!(
                "table is not {order}x{order} over 0..{order}"
            )));
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e][x] == x && table[x][e] == x))
            .unwrap_or(0);
        let inverse = (0..order)
            .map(|x| (0..order).find(|&y| table[x][y] == identity).unwrap_or(0))
            .collect();
        let group = FiniteGroup {
            order,
            table,
            identity,
            inverse,
            element_names,
        };
        check_group(&group).into_result()?;
        Ok(group)
    }

    /// Builds a group value from a table and a declared identity, checking only shapes.
    /// Use [`check_group`] to test the group law.
    pub fn from_table_unchecked(
        table: Vec<Vec<usize>>,
        identity: usize,
        element_names: Vec<String>,
    ) -> Result<Self, HopfError> {
        let order = table.len();
        if order == 0 || element_names.len() != order || identity >= order {
            return Err(HopfError::Shape(format!(
                "group of order {order} with {} names and identity {identity}",
                element_names.len()
            )));
        }
        if table
            .iter()
            .any(|row| row.len() != order || row.iter().any(|&x| x >= order))
        {
            return Err(HopfError::Shape(format!(
                "table is not {order}x{order} over 0..{order}"
            )));
        }
        let inverse = (0..order)
            .map(|x| (0..order).find(|&y| table[x][y] == identity).unwrap_or(0))
            .collect();
        Ok(FiniteGroup {
            order,
            table,
            identity,
            inverse,
            element_names,
        })
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.element_names.iter().position(|n| n == name)
    }

    /// ℤ/n written additively, elements named `0..n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup {
            order: n,
            table,
            identity: 0,
            inverse: (0..n).map(|a| (n - a) % n).collect(),
            element_names: (0..n).map(|a| a.to_string()).collect(),
        }
    }

    pub fn trivial() -> Self {
        FiniteGroup {
            element_names: vec!["e".into()],
            ..FiniteGroup::cyclic(1)
        }
    }

    /// Sₙ on permutations in lexicographic order of their one-line notation (so the
    /// identity is first), composed as `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Self {
        assert!(n >= 1, "symmetric group on 0 points");
        let perms = permutations(n);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&(0..n).map(|i| s[t[i]]).collect()))
                    .collect()
            })
            .collect();
        let inverse = perms
            .iter()
            .map(|s| {
                let mut inv = vec![0; n];
                for (i, &si) in s.iter().enumerate() {
                    inv[si] = i;
                }
                index(&inv)
            })
            .collect();
        let element_names = perms
            .iter()
            .map(|p| p.iter().map(|i| (i + 1).to_string()).collect())
            .collect();
        FiniteGroup {
            order: perms.len(),
            table,
            identity: 0,
            inverse,
            element_names,
        }
    }

    /// Parses the CLI shorthand `z<N>`, `s<N>` or `trivial`.
    pub fn from_shorthand(text: &str) -> Result<Self, HopfError> {
        let lower = text.to_ascii_lowercase();
        if lower == "trivial" || lower == "1" {
            return Ok(FiniteGroup::trivial());
        }
        let parse = |digits: &str| {
            digits
                .parse::<usize>()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| HopfError::Parse(format!("bad group `{text}`")))
        };
        if let Some(d) = lower.strip_prefix('z') {
            return Ok(FiniteGroup::cyclic(parse(d)?));
        }
        if let Some(d) = lower.strip_prefix('s') {
            let n = parse(d)?;
            if n > 5 {
                return Err(HopfError::Unsupported(format!("S{n} is too large")));
            }
            return Ok(FiniteGroup::symmetric(n));
        }
        Err(HopfError::Parse(format!(
            "unknown group `{text}` (use zN, sN or trivial)"
        )))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn index_witness(inputs: Vec<usize>, lhs: usize, rhs: usize) -> Witness {
    let q = FieldSpec::Rationals;
    Witness {
        context: Some(format!("element {lhs} vs element {rhs}")),
        inputs,
        outputs: Vec::new(),
        lhs: q.from_i64(lhs as i64),
        rhs: q.from_i64(rhs as i64),
    }
}

/// Closure, associativity, identity and inverse laws. Witness coefficients are the
/// two element indices that should agree.
pub fn check_group(g: &FiniteGroup) -> VerificationReport {
    let mut report = VerificationReport::new("group");
    let n = g.order;
    let closed = g.table.len() == n
        && g.table.iter().all(|r| r.len() == n && r.iter().all(|&x| x < n))
        && g.identity < n
        && g.inverse.len() == n
        && g.inverse.iter().all(|&x| x < n);
    if !closed {
        report.push(AxiomResult {
            name: "closure".into(),
            passed: false,
            witness: None,
        });
        return report;
    }
    report.push(AxiomResult::pass("closure"));

    let mut assoc = AxiomResult::pass("associativity");
    'outer: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let l = g.mul(g.mul(a, b), c);
                let r = g.mul(a, g.mul(b, c));
                if l != r {
                    assoc = AxiomResult::fail("associativity", index_witness(vec![a, b, c], l, r));
                    break 'outer;
                }
            }
        }
    }
    report.push(assoc);

    let e = g.identity;
    let bad_identity = (0..n).find_map(|x| {
        if g.mul(e, x) != x {
            Some(index_witness(vec![e, x], g.mul(e, x), x))
        } else if g.mul(x, e) != x {
            Some(index_witness(vec![x, e], g.mul(x, e), x))
        } else {
            None
        }
    });
    report.push(match bad_identity {
        None => AxiomResult::pass("identity"),
        Some(w) => AxiomResult::fail("identity", w),
    });

    let bad_inverse = (0..n).find_map(|x| {
        let y = g.inv(x);
        if g.mul(x, y) != e {
            Some(index_witness(vec![x, y], g.mul(x, y), e))
        } else if g.mul(y, x) != e {
            Some(index_witness(vec![y, x], g.mul(y, x), e))
        } else {
            None
        }
    });
    report.push(match bad_inverse {
        None => AxiomResult::pass("inverses"),
        Some(w) => AxiomResult::fail("inverses", w),
    });
    report
}
