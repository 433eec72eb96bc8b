//! Dataset containers and the bit-exact binary/CSV file formats shared by
//! all pipeline stages.
//!
//! Tensors are stored on disk in the `LDT1` format: little-endian, magic
//! `"LDT1"`, `u32` rank, one `u32` per dimension, then the `f64` payload in
//! row-major order (last index fastest).

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

const MAGIC: &[u8; 4] = b"LDT1";

/// Dense row-major tensor of finite 64-bit floats.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    dims: Vec<usize>,
    data: Vec<f64>,
}

impl Tensor {
    /// Builds a tensor, checking the shape/payload agreement and finiteness.
    pub fn new(dims: Vec<usize>, data: Vec<f64>) -> Result<Self> {
        if dims.iter().any(|&d| d == 0) {
            return Err(Error::Data("tensor dimensions must be positive".into()));
        }
        let expect: usize = dims.iter().product();
        if expect != data.len() {
            return Err(Error::Data(format!(
                "dims {:?} imply {} values, got {}",
                dims,
                expect,
                data.len()
            )));
        }
        if !data.iter().all(|v| v.is_finite()) {
            return Err(Error::Data("tensor contains non-finite values".into()));
        }
        Ok(Tensor { dims, data })
    }

    pub fn rank(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn into_data(self) -> Vec<f64> {
        self.data
    }
}

/// Reads a tensor from an `LDT1` file.
pub fn read_tensor<P: AsRef<Path>>(path: P) -> Result<Tensor> {
    let mut r = BufReader::new(File::open(path.as_ref())?);
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic)
        .map_err(|_| Error::Format("file too short for LDT1 header".into()))?;
    if &magic != MAGIC {
        return Err(Error::Format(format!(
            "bad magic {:?}, expected \"LDT1\"",
            String::from_utf8_lossy(&magic)
        )));
    }
    let rank = read_u32(&mut r)? as usize;
    if rank == 0 || rank > 32 {
        return Err(Error::Format(format!("unreasonable tensor rank {rank}")));
    }
    let mut dims = Vec::with_capacity(rank);
    for _ in 0..rank {
        dims.push(read_u32(&mut r)? as usize);
    }
    if dims.iter().any(|&d| d == 0) {
        return Err(Error::Format("zero-sized tensor dimension".into()));
    }
    let count: usize = dims.iter().product();
    let mut data = vec![0f64; count];
    let mut buf = [0u8; 8];
    for v in data.iter_mut() {
        r.read_exact(&mut buf)
            .map_err(|_| Error::Format("payload shorter than dims imply".into()))?;
        *v = f64::from_le_bytes(buf);
    }
    // Trailing bytes mean the header lied about the shape.
    let mut probe = [0u8; 1];
    if r.read(&mut probe)? != 0 {
        return Err(Error::Format("payload longer than dims imply".into()));
    }
    if !data.iter().all(|v| v.is_finite()) {
        return Err(Error::Data("tensor file contains non-finite values".into()));
    }
    Ok(Tensor { dims, data })
}

/// Writes a tensor to an `LDT1` file.
pub fn write_tensor<P: AsRef<Path>>(t: &Tensor, path: P) -> Result<()> {
    let mut w = BufWriter::new(File::create(path.as_ref())?);
    w.write_all(MAGIC)?;
    w.write_all(&(t.rank() as u32).to_le_bytes())?;
    for &d in t.dims() {
        w.write_all(&(d as u32).to_le_bytes())?;
    }
    for v in t.data() {
        w.write_all(&v.to_le_bytes())?;
    }
    w.flush()?;
    Ok(())
}

fn read_u32<R: Read>(r: &mut R) -> Result<u32> {
    let mut buf = [0u8; 4];
    r.read_exact(&mut buf)
        .map_err(|_| Error::Format("file too short for LDT1 header".into()))?;
    Ok(u32::from_le_bytes(buf))
}

/// `N` trials of two simultaneously recorded multivariate time series.
///
/// Region tensors have shape `[N, T, d_k]`.
#[derive(Debug, Clone)]
pub struct PairedDataset {
    pub region1: Tensor,
    pub region2: Tensor,
    pub sample_rate_hz: f64,
}

impl PairedDataset {
    pub fn new(region1: Tensor, region2: Tensor, sample_rate_hz: f64) -> Result<Self> {
        let ds = PairedDataset {
            region1,
            region2,
            sample_rate_hz,
        };
        ds.validate()?;
        Ok(ds)
    }

    fn validate(&self) -> Result<()> {
        for (name, t) in [("region1", &self.region1), ("region2", &self.region2)] {
            if t.rank() != 3 {
                return Err(Error::Data(format!(
                    "{name} must have shape [N, T, d], got rank {}",
                    t.rank()
                )));
            }
        }
        let (d1, d2) = (self.region1.dims(), self.region2.dims());
        if d1[0] != d2[0] || d1[1] != d2[1] {
            return Err(Error::Data(format!(
                "regions disagree on trials/times: {:?} vs {:?}",
                d1, d2
            )));
        }
        if d1[0] < 2 {
            return Err(Error::Data("need at least 2 trials".into()));
        }
        if !(self.sample_rate_hz > 0.0) {
            return Err(Error::Data("sample rate must be positive".into()));
        }
        Ok(())
    }

    pub fn n_trials(&self) -> usize {
        self.region1.dims()[0]
    }

    pub fn n_times(&self) -> usize {
        self.region1.dims()[1]
    }

    /// Channel counts `[d1, d2]`.
    pub fn channels(&self) -> [usize; 2] {
        [self.region1.dims()[2], self.region2.dims()[2]]
    }

    fn region(&self, k: usize) -> &Tensor {
        match k {
            0 => &self.region1,
            1 => &self.region2,
            _ => panic!("region index must be 0 or 1"),
        }
    }

    /// Channel slice for region `k`, trial `n`, time `t`.
    pub fn at(&self, k: usize, n: usize, t: usize) -> &[f64] {
        let tensor = self.region(k);
        let (t_len, d) = (tensor.dims()[1], tensor.dims()[2]);
        let base = (n * t_len + t) * d;
        &tensor.data()[base..base + d]
    }

    /// Time series of channel `c` in region `k`, trial `n`.
    pub fn channel_series(&self, k: usize, n: usize, c: usize) -> Vec<f64> {
        let tensor = self.region(k);
        let (t_len, d) = (tensor.dims()[1], tensor.dims()[2]);
        (0..t_len)
            .map(|t| tensor.data()[(n * t_len + t) * d + c])
            .collect()
    }

    /// Rebuilds the dataset with region `k`'s trials reordered by `perm`.
    pub fn permute_region(&self, k: usize, perm: &[usize]) -> PairedDataset {
        let tensor = self.region(k);
        let (t_len, d) = (tensor.dims()[1], tensor.dims()[2]);
        let stride = t_len * d;
        let mut data = Vec::with_capacity(tensor.data().len());
        for &src in perm {
            data.extend_from_slice(&tensor.data()[src * stride..(src + 1) * stride]);
        }
        let permuted = Tensor {
            dims: tensor.dims().to_vec(),
            data,
        };
        match k {
            0 => PairedDataset {
                region1: permuted,
                region2: self.region2.clone(),
                sample_rate_hz: self.sample_rate_hz,
            },
            _ => PairedDataset {
                region1: self.region1.clone(),
                region2: permuted,
                sample_rate_hz: self.sample_rate_hz,
            },
        }
    }
}

/// Writes a real matrix as headerless CSV, one row per line.
///
/// Values render with Rust's shortest round-trip `f64` formatting ('.'
/// decimal separator, up to 17 significant digits), so files are bit-exact
/// across platforms.
pub fn write_matrix_csv<P: AsRef<Path>>(rows: &[Vec<f64>], path: P) -> Result<()> {
    for row in rows {
        if !row.iter().all(|v| v.is_finite()) {
            return Err(Error::Data("matrix contains non-finite values".into()));
        }
    }
    let mut w = BufWriter::new(File::create(path.as_ref())?);
    let mut line = String::new();
    for row in rows {
        line.clear();
        for (i, v) in row.iter().enumerate() {
            if i > 0 {
                line.push(',');
            }
            line.push_str(&format!("{v}"));
        }
        line.push('\n');
        w.write_all(line.as_bytes())?;
    }
    w.flush()?;
    Ok(())
}

/// Convenience wrapper for nalgebra matrices.
pub fn write_dmatrix_csv<P: AsRef<Path>>(m: &nalgebra::DMatrix<f64>, path: P) -> Result<()> {
    let rows: Vec<Vec<f64>> = (0..m.nrows())
        .map(|r| (0..m.ncols()).map(|c| m[(r, c)]).collect())
        .collect();
    write_matrix_csv(&rows, path)
}
