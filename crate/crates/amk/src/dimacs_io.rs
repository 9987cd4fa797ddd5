use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::Path;

use amk_core::dimacs::parse_dimacs;
use amk_core::{CnfFormula, DimacsError};

#[derive(Debug, thiserror::Error)]
pub enum ReadError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Parse(#[from] DimacsError),
}

pub fn write_dimacs<W: Write>(f: &CnfFormula, out: W) -> io::Result<()> {
    let mut out = BufWriter::new(out);
    write!(out, "{f}")?;
    out.flush()
}

pub fn read_dimacs<R: Read>(mut input: R) -> Result<CnfFormula, ReadError> {
    let mut text = String::new();
    input.read_to_string(&mut text)?;
    Ok(parse_dimacs(&text)?)
}

pub fn write_dimacs_file(f: &CnfFormula, path: impl AsRef<Path>) -> io::Result<()> {
    write_dimacs(f, File::create(path)?)
}

pub fn read_dimacs_file(path: impl AsRef<Path>) -> Result<CnfFormula, ReadError> {
    read_dimacs(BufReader::new(File::open(path)?))
}
