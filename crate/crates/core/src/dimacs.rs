//! DIMACS CNF text: `c ` comment lines, a `p cnf <vars> <clauses>` header,
//! then one zero-terminated clause per line.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::cnf::{Clause, CnfFormula};
use crate::lit::Lit;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct DimacsError {
    pub line: usize,
    pub kind: DimacsErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DimacsErrorKind {
    #[error("missing `p cnf` header")]
    MissingHeader,
    #[error("malformed header")]
    MalformedHeader,
    #[error("duplicate header")]
    DuplicateHeader,
    #[error("clause before header")]
    ClauseBeforeHeader,
    #[error("invalid literal `{0}`")]
    BadLiteral(String),
    #[error("literal {lit} exceeds declared variable count {num_vars}")]
    LiteralOutOfRange { lit: i64, num_vars: u32 },
    #[error("clause is not terminated by 0")]
    MissingTerminator,
    #[error("empty clause")]
    EmptyClause,
    #[error("header declares {declared} clauses, body has {found}")]
    ClauseCountMismatch { declared: usize, found: usize },
}

/// Writes `f` in DIMACS form. Comments come first, then the header.
pub fn write_dimacs<W: fmt::Write>(f: &CnfFormula, out: &mut W) -> fmt::Result {
    for c in f.comments() {
        if c.is_empty() {
            out.write_str("c\n")?;
        } else {
            writeln!(out, "c {c}")?;
        }
    }
    writeln!(out, "p cnf {} {}", f.num_vars(), f.num_clauses())?;
    for clause in f.clauses() {
        for l in clause.lits() {
            write!(out, "{} ", l.to_dimacs())?;
        }
        out.write_str("0\n")?;
    }
    Ok(())
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_dimacs(self, f)
    }
}

pub fn parse_dimacs(text: &str) -> Result<CnfFormula, DimacsError> {
    let mut comments = Vec::new();
    let mut header: Option<(u32, usize)> = None;
    let mut clauses = Vec::new();
    let mut found = 0usize;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let err = |kind| DimacsError {
            line: line_no,
            kind,
        };
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line == "%" {
            // SATLIB end-of-body marker
            break;
        }
        if let Some(rest) = line.strip_prefix('c') {
            if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                let text = raw.trim_start().strip_prefix('c').unwrap_or("");
                comments.push(
                    text.strip_prefix(' ')
                        .unwrap_or(text)
                        .trim_end()
                        .to_string(),
                );
                continue;
            }
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(err(DimacsErrorKind::DuplicateHeader));
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["p", "cnf", v, c] => {
                    let v: u32 = v
                        .parse()
                        .map_err(|_| err(DimacsErrorKind::MalformedHeader))?;
                    let c: usize = c
                        .parse()
                        .map_err(|_| err(DimacsErrorKind::MalformedHeader))?;
                    if v > crate::lit::Var::MAX_ID {
                        return Err(err(DimacsErrorKind::MalformedHeader));
                    }
                    header = Some((v, c));
                }
                _ => return Err(err(DimacsErrorKind::MalformedHeader)),
            }
            continue;
        }
        let Some((num_vars, _)) = header else {
            return Err(err(DimacsErrorKind::ClauseBeforeHeader));
        };
        let mut lits = Vec::new();
        let mut terminated = false;
        for tok in line.split_whitespace() {
            if terminated {
                // something after the 0
                return Err(err(DimacsErrorKind::MissingTerminator));
            }
            let v: i64 = tok
                .parse()
                .map_err(|_| err(DimacsErrorKind::BadLiteral(tok.to_string())))?;
            if v == 0 {
                terminated = true;
                continue;
            }
            if v.unsigned_abs() > u64::from(num_vars) {
                return Err(err(DimacsErrorKind::LiteralOutOfRange { lit: v, num_vars }));
            }
            lits.push(Lit::from_dimacs(v as i32).expect("nonzero and in range"));
        }
        if !terminated {
            return Err(err(DimacsErrorKind::MissingTerminator));
        }
        found += 1;
        match Clause::new(&lits) {
            Ok(Some(c)) => clauses.push(c),
            Ok(None) => {}
            Err(_) => return Err(err(DimacsErrorKind::EmptyClause)),
        }
    }

    let Some((num_vars, declared)) = header else {
        return Err(DimacsError {
            line: last_line.max(1),
            kind: DimacsErrorKind::MissingHeader,
        });
    };
    if declared != found {
        return Err(DimacsError {
            line: last_line.max(1),
            kind: DimacsErrorKind::ClauseCountMismatch { declared, found },
        });
    }
    Ok(CnfFormula::new(num_vars, clauses, comments).expect("literals were range-checked"))
}
