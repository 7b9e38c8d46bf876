//! Dense complex matrices and the matrix exponential by scaling and squaring
//! with Padé approximants (Higham, SIAM J. Matrix Anal. Appl. 26, 2005).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalars::ComplexF;

/// Square complex matrix stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        CMatrix { dim, data: vec![Complex64::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for k in 0..dim {
            m[(k, k)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Structural("complex matrix rows must form a square".into()));
        }
        Ok(CMatrix { dim, data: rows.iter().flatten().copied().collect() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> Vec<Vec<ComplexF>> {
        self.data.chunks(self.dim.max(1)).take(self.dim).map(|r| r.iter().map(|&z| ComplexF(z)).collect()).collect()
    }

    pub fn scale(&self, f: Complex64) -> Self {
        CMatrix { dim: self.dim, data: self.data.iter().map(|z| z * f).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        CMatrix { dim: self.dim, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        CMatrix { dim: self.dim, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    /// Largest absolute column sum.
    pub fn norm1(&self) -> f64 {
        let n = self.dim;
        (0..n).map(|j| (0..n).map(|i| self.data[i * n + j].norm()).sum::<f64>()).fold(0.0, f64::max)
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Solves `self · X = rhs` by LU factorisation with partial pivoting.
    pub fn solve(&self, rhs: &Self) -> Result<Self> {
        let n = self.dim;
        let mut a = self.data.clone();
        let mut b = rhs.data.clone();
        for col in 0..n {
            let piv = (col..n)
                .max_by(|&x, &y| a[x * n + col].norm().total_cmp(&a[y * n + col].norm()))
                .expect("nonempty range");
            if a[piv * n + col].norm() == 0.0 {
                return Err(Error::Numeric("singular matrix in Padé solve".into()));
            }
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                    b.swap(piv * n + j, col * n + j);
                }
            }
            let d = a[col * n + col];
            for r in col + 1..n {
                let f = a[r * n + col] / d;
                if f == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in col..n {
                    let v = a[col * n + j];
                    a[r * n + j] -= f * v;
                }
                for j in 0..n {
                    let v = b[col * n + j];
                    b[r * n + j] -= f * v;
                }
            }
        }
        for col in (0..n).rev() {
            let d = a[col * n + col];
            for j in 0..n {
                let mut acc = b[col * n + j];
                for k in col + 1..n {
                    acc -= a[col * n + k] * b[k * n + j];
                }
                b[col * n + j] = acc / d;
            }
        }
        Ok(CMatrix { dim: n, data: b })
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

const THETA: [(usize, f64); 4] = [
    (3, 1.495585217958292e-2),
    (5, 2.539398330063230e-1),
    (7, 9.504178996162932e-1),
    (9, 2.097847961257068e0),
];
const THETA_13: f64 = 5.371920351148152;

fn pade_coefficients(m: usize) -> &'static [f64] {
    match m {
        3 => &[120.0, 60.0, 12.0, 1.0],
        5 => &[30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0],
        7 => &[17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0],
        9 => &[
            17643225600.0,
            8821612800.0,
            2075673600.0,
            302702400.0,
            30270240.0,
            2162160.0,
            110880.0,
            3960.0,
            90.0,
            1.0,
        ],
        13 => &[
            64764752532480000.0,
            32382376266240000.0,
            7771770303897600.0,
            1187353796428800.0,
            129060195264000.0,
            10559470521600.0,
            670442572800.0,
            33522128640.0,
            1323241920.0,
            40840800.0,
            960960.0,
            16380.0,
            182.0,
            1.0,
        ],
        _ => unreachable!("no Padé table for degree {m}"),
    }
}

fn c(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

fn pade_low(a: &CMatrix, m: usize) -> (CMatrix, CMatrix) {
    let b = pade_coefficients(m);
    let id = CMatrix::identity(a.dim);
    let a2 = a.matmul(a);
    let mut pow = id.clone();
    let mut u = CMatrix::zeros(a.dim);
    let mut v = CMatrix::zeros(a.dim);
    for k in (0..=m).step_by(2) {
        v = v.add(&pow.scale(c(b[k])));
        u = u.add(&pow.scale(c(b[k + 1])));
        pow = pow.matmul(&a2);
    }
    (a.matmul(&u), v)
}

fn pade_13(a: &CMatrix) -> (CMatrix, CMatrix) {
    let b = pade_coefficients(13);
    let id = CMatrix::identity(a.dim);
    let a2 = a.matmul(a);
    let a4 = a2.matmul(&a2);
    let a6 = a4.matmul(&a2);
    let inner_u = a6.scale(c(b[13])).add(&a4.scale(c(b[11]))).add(&a2.scale(c(b[9])));
    let u = a6
        .matmul(&inner_u)
        .add(&a6.scale(c(b[7])))
        .add(&a4.scale(c(b[5])))
        .add(&a2.scale(c(b[3])))
        .add(&id.scale(c(b[1])));
    let inner_v = a6.scale(c(b[12])).add(&a4.scale(c(b[10]))).add(&a2.scale(c(b[8])));
    let v = a6
        .matmul(&inner_v)
        .add(&a6.scale(c(b[6])))
        .add(&a4.scale(c(b[4])))
        .add(&a2.scale(c(b[2])))
        .add(&id.scale(c(b[0])));
    (a.matmul(&u), v)
}

/// `exp(a)`.
pub fn expm(a: &CMatrix) -> Result<CMatrix> {
    if !a.is_finite() {
        return Err(Error::Numeric("matrix exponential of a non-finite matrix".into()));
    }
    if a.dim == 0 {
        return Ok(a.clone());
    }
    let norm = a.norm1();
    let (mut result, squarings) = match THETA.iter().find(|(_, t)| norm <= *t) {
        Some(&(m, _)) => {
            let (u, v) = pade_low(a, m);
            (v.sub(&u).solve(&v.add(&u))?, 0)
        }
        None => {
            let s = (norm / THETA_13).log2().ceil().max(0.0) as i32;
            let scaled = a.scale(c(0.5f64.powi(s)));
            let (u, v) = pade_13(&scaled);
            (v.sub(&u).solve(&v.add(&u))?, s)
        }
    };
    for _ in 0..squarings {
        result = result.matmul(&result);
    }
    if !result.is_finite() {
        return Err(Error::Numeric("matrix exponential overflowed".into()));
    }
    Ok(result)
}
