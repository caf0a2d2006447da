//! Serialization of connection fields.
//!
//! Binary layout (little-endian): four `u64` axis sizes, `u64` matrix
//! dimension `n`, `f64` spacing `h`, then for every node in row-major order
//! (axis 3 fastest) and every `a` in `0..4`, the `n×n` matrix `α_a` in
//! row-major order as `(re, im)` pairs of `f64`.

use std::io::{Read, Write};

use byteorder::{LittleEndian, ReadBytesExt, WriteBytesExt};
use nalgebra::DMatrix;

use super::field::ConnectionField;
use super::grid::Grid4;
use crate::error::{Error, Result};
use crate::scalar::{Cx, Real};

pub fn write_binary<T: Real, W: Write>(field: &ConnectionField<T>, mut w: W) -> Result<()> {
    for d in field.grid.dims {
        w.write_u64::<LittleEndian>(d as u64)?;
    }
    w.write_u64::<LittleEndian>(field.n as u64)?;
    w.write_f64::<LittleEndian>(field.grid.h.to_f64_lossy())?;
    for m in &field.data {
        for r in 0..field.n {
            for c in 0..field.n {
                w.write_f64::<LittleEndian>(m[(r, c)].re.to_f64_lossy())?;
                w.write_f64::<LittleEndian>(m[(r, c)].im.to_f64_lossy())?;
            }
        }
    }
    Ok(())
}

pub fn read_binary<T: Real, R: Read>(mut r: R) -> Result<ConnectionField<T>> {
    let mut dims = [0usize; 4];
    for d in &mut dims {
        *d = usize::try_from(r.read_u64::<LittleEndian>()?)
            .map_err(|_| Error::Format("axis size overflows usize".into()))?;
    }
    let n = usize::try_from(r.read_u64::<LittleEndian>()?)
        .map_err(|_| Error::Format("matrix dimension overflows usize".into()))?;
    if n == 0 || n > 64 {
        return Err(Error::Format(format!("unsupported matrix dimension {n}")));
    }
    let h = r.read_f64::<LittleEndian>()?;
    let grid = Grid4::new(dims, T::lit(h))?;
    let mut data = Vec::with_capacity(4 * grid.len());
    for _ in 0..4 * grid.len() {
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let re = r.read_f64::<LittleEndian>()?;
                let im = r.read_f64::<LittleEndian>()?;
                m[(i, j)] = Cx::new(T::lit(re), T::lit(im));
            }
        }
        data.push(m);
    }
    let mut rest = [0u8; 1];
    if r.read(&mut rest)? != 0 {
        return Err(Error::Format("trailing bytes after grid body".into()));
    }
    Ok(ConnectionField { grid, n, data })
}

pub fn to_json<T: Real + serde::Serialize + for<'a> serde::Deserialize<'a>>(field: &ConnectionField<T>) -> Result<String> {
    Ok(serde_json::to_string(field)?)
}

pub fn from_json<T: Real + serde::Serialize + for<'a> serde::Deserialize<'a>>(s: &str) -> Result<ConnectionField<T>> {
    let f: ConnectionField<T> = serde_json::from_str(s)?;
    if f.data.len() != 4 * f.grid.len() || f.data.iter().any(|m| m.nrows() != f.n || m.ncols() != f.n) {
        return Err(Error::GridMismatch);
    }
    Ok(f)
}
