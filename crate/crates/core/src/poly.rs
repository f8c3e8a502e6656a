//! Small polynomial utilities: real quadratic roots, Sylvester matrices and
//! determinants.

/// Real roots of `c2 x^2 + c1 x + c0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RealRoots {
    /// Negative discriminant.
    Complex,
    Double(f64),
    /// Two distinct roots, ascending.
    Distinct(f64, f64),
    /// `c2 == 0`, `c1 != 0`.
    Linear(f64),
    /// `c2 == c1 == 0`; `zero` tells whether the constant term vanishes too.
    Constant { zero: bool },
}

impl RealRoots {
    pub fn to_vec(self) -> Vec<f64> {
        match self {
            RealRoots::Double(r) | RealRoots::Linear(r) => vec![r],
            RealRoots::Distinct(a, b) => vec![a, b],
            RealRoots::Complex | RealRoots::Constant { .. } => Vec::new(),
        }
    }
}

/// Solves `c2 x^2 + c1 x + c0 = 0` given its discriminant `disc = c1^2 - 4 c2 c0`.
///
/// The discriminant is passed in so callers can supply an algebraically
/// factored, cancellation-free value. Uses the sign-matched form
/// `q = -(c1 + sign(c1) sqrt(disc)) / 2`, roots `q / c2` and `c0 / q`.
pub fn solve_quadratic(c2: f64, c1: f64, c0: f64, disc: f64) -> RealRoots {
    if c2 == 0.0 {
        if c1 == 0.0 {
            return RealRoots::Constant { zero: c0 == 0.0 };
        }
        return RealRoots::Linear(-c0 / c1);
    }
    if disc < 0.0 {
        return RealRoots::Complex;
    }
    if disc == 0.0 {
        return RealRoots::Double(-c1 / (2.0 * c2));
    }
    let sq = disc.sqrt();
    let q = -0.5 * (c1 + sq.copysign(c1));
    let (a, b) = if q == 0.0 {
        let r = 0.5 * sq / c2.abs();
        (-r, r)
    } else {
        (q / c2, c0 / q)
    };
    if a <= b {
        RealRoots::Distinct(a, b)
    } else {
        RealRoots::Distinct(b, a)
    }
}

/// Sylvester matrix of `f` and `g`, coefficients given highest degree first.
///
/// The formal degrees are `f.len() - 1` and `g.len() - 1`; leading zeros are
/// kept, so the result is the formal resultant matrix.
pub fn sylvester_matrix(f: &[f64], g: &[f64]) -> Vec<Vec<f64>> {
    assert!(!f.is_empty() && !g.is_empty());
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![0.0; size];
        row[i..i + f.len()].copy_from_slice(f);
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![0.0; size];
        row[i..i + g.len()].copy_from_slice(g);
        rows.push(row);
    }
    rows
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn determinant(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        if a[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        let (top, bottom) = a.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in bottom.iter_mut() {
            let factor = row[col] / p;
            if factor != 0.0 {
                for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= factor * y;
                }
            }
        }
    }
    det
}

/// Resultant of two polynomials (highest degree first) via the Sylvester
/// determinant.
pub fn resultant(f: &[f64], g: &[f64]) -> f64 {
    determinant(sylvester_matrix(f, g))
}

/// Hadamard bound of the Sylvester determinant, `|f|^n |g|^m`.
pub fn resultant_scale(f: &[f64], g: &[f64]) -> f64 {
    let nf = f.iter().map(|c| c * c).sum::<f64>().sqrt();
    let ng = g.iter().map(|c| c * c).sum::<f64>().sqrt();
    nf.powi(g.len() as i32 - 1) * ng.powi(f.len() as i32 - 1)
}
