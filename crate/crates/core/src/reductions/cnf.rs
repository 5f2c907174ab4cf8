use std::fmt;

use crate::error::{Error, ParseCode, ParseError, Result};

/// A 3-CNF formula. Literals are signed 1-based variable indices; a clause
/// may repeat a variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<[i32; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[i32; 3]>) -> Result<Self> {
        for (j, c) in clauses.iter().enumerate() {
            if let Some(&l) = c
                .iter()
                .find(|&&l| l == 0 || l.unsigned_abs() as usize > num_vars)
            {
                return Err(Error::InvalidInstance(format!(
                    "clause {} has literal {l} outside 1..={num_vars}",
                    j + 1
                )));
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[i32; 3]] {
        &self.clauses
    }

    /// `assignment[i]` is the value of `x_{i+1}`.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars
            && self.clauses.iter().all(|c| {
                c.iter()
                    .any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
            })
    }

    /// Occurrences of `x_i` and of `¬x_i` over all clauses, with
    /// multiplicity.
    pub fn occurrences(&self, var: usize) -> (usize, usize) {
        let lits = self.clauses.iter().flatten();
        let pos = lits.clone().filter(|&&l| l == var as i32).count();
        let neg = lits.filter(|&&l| l == -(var as i32)).count();
        (pos, neg)
    }

    /// DIMACS: `c` comment lines, a `p cnf <vars> <clauses>` header, then
    /// zero-terminated clauses of exactly three literals.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut pending: Vec<i32> = Vec::new();
        let mut last_line = 0;
        for (k, raw) in text.lines().enumerate() {
            let lno = k + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            last_line = lno;
            if line.starts_with('p') {
                let toks: Vec<&str> = line.split_whitespace().collect();
                let parsed = match toks[..] {
                    ["p", "cnf", v, c] => v.parse().ok().zip(c.parse().ok()),
                    _ => None,
                };
                if header.is_some() || parsed.is_none() {
                    return Err(ParseError::new(
                        ParseCode::Header,
                        lno,
                        format!("malformed header {line:?}"),
                    )
                    .into());
                }
                header = parsed;
                continue;
            }
            let (num_vars, _) = header.ok_or_else(|| {
                ParseError::new(ParseCode::Header, lno, "clause before `p cnf` header")
            })?;
            for tok in line.split_whitespace() {
                let lit: i32 = tok.parse().map_err(|_| {
                    ParseError::new(ParseCode::Token, lno, format!("bad literal {tok:?}"))
                })?;
                if lit == 0 {
                    let clause: [i32; 3] =
                        std::mem::take(&mut pending)
                            .try_into()
                            .map_err(|c: Vec<i32>| {
                                ParseError::new(
                                    ParseCode::Arity,
                                    lno,
                                    format!("clause has {} literals, expected 3", c.len()),
                                )
                            })?;
                    clauses.push(clause);
                } else if lit.unsigned_abs() as usize > num_vars {
                    return Err(ParseError::new(
                        ParseCode::Range,
                        lno,
                        format!("literal {lit} outside 1..={num_vars}"),
                    )
                    .into());
                } else {
                    pending.push(lit);
                }
            }
        }
        let (num_vars, num_clauses) = header
            .ok_or_else(|| ParseError::new(ParseCode::Header, 1, "missing `p cnf` header"))?;
        if !pending.is_empty() {
            return Err(ParseError::new(
                ParseCode::Arity,
                last_line,
                "last clause is not terminated by 0",
            )
            .into());
        }
        if clauses.len() != num_clauses {
            return Err(ParseError::new(
                ParseCode::Count,
                last_line,
                format!(
                    "header declares {num_clauses} clauses, found {}",
                    clauses.len()
                ),
            )
            .into());
        }
        CnfFormula::new(num_vars, clauses)
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p cnf {} {}", self.num_vars, self.clauses.len())?;
        for [a, b, c] in &self.clauses {
            writeln!(f, "{a} {b} {c} 0")?;
        }
        Ok(())
    }
}
