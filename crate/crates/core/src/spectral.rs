//! Exact characteristic polynomials, permanents and the Moore-Penrose
//! witness for line digraphs of regular digraphs.
//!
//! Everything here is exact: integer polynomials are compared coefficient by
//! coefficient and the pseudo-inverse is checked over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::line::{debruijn, line_digraph};
use crate::matrix::{IntMatrix, RatMatrix};

/// Largest dimension accepted by [`permanent`].
pub const PERMANENT_LIMIT: usize = 20;

/// Largest `d^k` accepted by [`debruijn_spectrum_check`].
pub const DEBRUIJN_SPECTRUM_LIMIT: usize = 512;

/// Integer polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        IntPoly { coeffs: c }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Multiplication by `x^k`.
    pub fn shifted(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs: c }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return IntPoly::new(Vec::new());
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Multiplicity of the root 0.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Space-free form with the power of `x` factored out, e.g. `x^7*(x-2)`.
    pub fn to_factored_string(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let v = self.zero_root_multiplicity();
        let rest = IntPoly::new(self.coeffs[v..].to_vec());
        let power = match v {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{v}"),
        };
        let rest_str = rest.compact();
        match (v, rest.degree()) {
            (0, _) => rest_str,
            (_, Some(0)) if rest.coeffs[0].is_one() => power,
            (_, Some(0)) => format!("{rest_str}*{power}"),
            _ => format!("{power}*({rest_str})"),
        }
    }

    fn terms(&self, sep_plus: &str, sep_minus: &str) -> String {
        let mut s = String::new();
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { sep_minus } else { sep_plus });
            }
            let var = match e {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{e}"),
            };
            if e == 0 || !mag.is_one() {
                s.push_str(&mag.to_string());
            }
            s.push_str(&var);
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    fn compact(&self) -> String {
        self.terms("+", "-")
    }

    /// Ascending coefficient list, e.g. `[0, 0, -4, 0, 1]`.
    pub fn to_coefficient_list(&self) -> String {
        let c: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        format!("[{}]", c.join(", "))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.terms(" + ", " - "))
    }
}

// Ring operations that may overflow; the machine-integer instance bails out
// with `None` and the caller retries with big integers.
trait Exact: Clone + Sized {
    fn nil() -> Self;
    fn from_big(x: &BigInt) -> Option<Self>;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn div_exact(&self, k: i64) -> Option<Self>;
    fn is_nil(&self) -> bool;
    fn to_big(&self) -> BigInt;
}

impl Exact for i128 {
    fn nil() -> Self {
        0
    }
    fn from_big(x: &BigInt) -> Option<Self> {
        x.to_i128()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn div_exact(&self, k: i64) -> Option<Self> {
        let k = i128::from(k);
        (self % k == 0).then(|| self / k)
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Exact for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn from_big(x: &BigInt) -> Option<Self> {
        Some(x.clone())
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div_exact(&self, k: i64) -> Option<Self> {
        let k = BigInt::from(k);
        (self % &k).is_zero().then(|| self / k)
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

// Non-zero entries of each row of a square matrix.
fn sparse_rows<T: Exact>(m: &IntMatrix) -> Option<Vec<Vec<(usize, T)>>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .enumerate()
                .filter(|(_, x)| !Zero::is_zero(*x))
                .map(|(j, x)| T::from_big(x).map(|v| (j, v)))
                .collect()
        })
        .collect()
}

// Faddeev-LeVerrier: B_1 = I, c_{n-k} = -tr(A B_k)/k, B_{k+1} = A B_k + c_{n-k} I.
fn faddeev_leverrier<T: Exact>(m: &IntMatrix) -> Option<Vec<BigInt>> {
    let n = m.rows();
    let rows = sparse_rows::<T>(m)?;
    let one = T::from_big(&BigInt::one())?;
    let mut b = vec![T::nil(); n * n];
    for i in 0..n {
        b[i * n + i] = one.clone();
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    for k in 1..=n {
        let mut ab = vec![T::nil(); n * n];
        for (i, row) in rows.iter().enumerate() {
            for (l, a) in row {
                for j in 0..n {
                    let x = &b[l * n + j];
                    if !x.is_nil() {
                        let prod = a.mul(x)?;
                        ab[i * n + j] = ab[i * n + j].add(&prod)?;
                    }
                }
            }
        }
        let mut trace = T::nil();
        for i in 0..n {
            trace = trace.add(&ab[i * n + i])?;
        }
        let c = T::nil().sub(&trace)?.div_exact(k as i64)?;
        coeffs[n - k] = c.to_big();
        for i in 0..n {
            ab[i * n + i] = ab[i * n + i].add(&c)?;
        }
        b = ab;
    }
    Some(coeffs)
}

/// `det(xI - M)` with exact integer coefficients.
pub fn char_poly(m: &IntMatrix) -> Result<IntPoly> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let coeffs = faddeev_leverrier::<i128>(m)
        .or_else(|| faddeev_leverrier::<BigInt>(m))
        .expect("big-integer arithmetic does not overflow");
    Ok(IntPoly::new(coeffs))
}

pub fn digraph_char_poly(d: &Digraph) -> IntPoly {
    char_poly(&d.adjacency()).expect("adjacency is square")
}

/// Both sides of the line digraph identity: `(P(L D, x), x^(m-n) P(D, x))`.
pub fn line_charpoly_sides(d: &Digraph) -> Result<(IntPoly, IntPoly)> {
    let (n, m) = (d.vertex_count(), d.arc_count());
    if m < n {
        return Err(Error::ExponentNegative {
            arcs: m,
            vertices: n,
        });
    }
    let rhs = digraph_char_poly(d).shifted(m - n);
    let lhs = if m == 0 {
        IntPoly::monomial(0)
    } else {
        digraph_char_poly(&line_digraph(d)?.graph)
    };
    Ok((lhs, rhs))
}

/// Exact check of `P(L D, x) = x^(|A| - |V|) P(D, x)`.
pub fn verify_line_charpoly(d: &Digraph) -> Result<bool> {
    let (lhs, rhs) = line_charpoly_sides(d)?;
    Ok(lhs == rhs)
}

/// `x^(d^k - 1) (x - d)`.
pub fn expected_debruijn_charpoly(d: usize, k: usize) -> IntPoly {
    let size = d.pow(k as u32);
    IntPoly::from_i64(&[-(d as i64), 1]).shifted(size - 1)
}

/// The characteristic polynomial of `B(d,k)` is exactly `x^(d^k-1)(x-d)`.
pub fn debruijn_spectrum_check(d: usize, k: usize) -> Result<bool> {
    let b = debruijn_charpoly(d, k)?;
    Ok(b == expected_debruijn_charpoly(d, k))
}

pub fn debruijn_charpoly(d: usize, k: usize) -> Result<IntPoly> {
    let size = u32::try_from(k)
        .ok()
        .and_then(|k| d.checked_pow(k))
        .unwrap_or(usize::MAX);
    if size > DEBRUIJN_SPECTRUM_LIMIT {
        return Err(Error::SizeLimitExceeded {
            size,
            limit: DEBRUIJN_SPECTRUM_LIMIT,
        });
    }
    Ok(digraph_char_poly(&debruijn(d, k)?.graph))
}

// Ryser with a Gray-code walk over column subsets; row sums are updated one
// column at a time.
fn ryser<T: Exact>(m: &IntMatrix) -> Option<BigInt> {
    let n = m.rows();
    if n == 0 {
        return Some(BigInt::one());
    }
    let a: Vec<Vec<T>> = (0..n)
        .map(|i| m.row(i).iter().map(T::from_big).collect::<Option<Vec<T>>>())
        .collect::<Option<_>>()?;
    let mut sums = vec![T::nil(); n];
    let mut total = T::nil();
    let mut gray: u64 = 0;
    for step in 1u64..1 << n {
        let col = step.trailing_zeros() as usize;
        let adding = gray >> col & 1 == 0;
        gray ^= 1 << col;
        for i in 0..n {
            sums[i] = if adding {
                sums[i].add(&a[i][col])?
            } else {
                sums[i].sub(&a[i][col])?
            };
        }
        let mut prod = sums[0].clone();
        for s in &sums[1..] {
            if prod.is_nil() {
                break;
            }
            prod = prod.mul(s)?;
        }
        // sign (-1)^(n - |S|)
        let odd = (n as u32 - gray.count_ones()) % 2 == 1;
        total = if odd {
            total.sub(&prod)?
        } else {
            total.add(&prod)?
        };
    }
    Some(total.to_big())
}

/// Exact permanent by Ryser's inclusion-exclusion formula.
pub fn permanent(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() > PERMANENT_LIMIT {
        return Err(Error::TooLarge {
            size: m.rows(),
            limit: PERMANENT_LIMIT,
        });
    }
    Ok(ryser::<i128>(m)
        .or_else(|| ryser::<BigInt>(m))
        .expect("big-integer arithmetic does not overflow"))
}

/// Outcome of comparing `per(M(L D)) > 0` with the component condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermanentCheck {
    pub permanent: BigInt,
    pub components_eulerian: bool,
}

impl PermanentCheck {
    pub fn positive(&self) -> bool {
        self.permanent.is_positive()
    }

    pub fn agrees(&self) -> bool {
        self.positive() == self.components_eulerian
    }
}

/// Permanent of the line digraph adjacency versus "every weak component of
/// `D` is eulerian".
pub fn permanent_positivity_check(d: &Digraph) -> Result<PermanentCheck> {
    let m = d.arc_count();
    if m > PERMANENT_LIMIT {
        return Err(Error::TooLarge {
            size: m,
            limit: PERMANENT_LIMIT,
        });
    }
    let permanent = if m == 0 {
        BigInt::one()
    } else {
        permanent(&line_digraph(d)?.graph.adjacency())?
    };
    let components_eulerian = d
        .connected_components()
        .iter()
        .all(|c| d.induced(c).is_eulerian());
    Ok(PermanentCheck {
        permanent,
        components_eulerian,
    })
}

/// The four Penrose conditions for a candidate `p` of `m`:
/// `MPM = M`, `PMP = P`, `MP` symmetric, `PM` symmetric.
pub fn penrose_conditions(m: &RatMatrix, p: &RatMatrix) -> Result<[bool; 4]> {
    let mp = m.try_mul(p)?;
    let pm = p.try_mul(m)?;
    Ok([
        mp.try_mul(m)? == *m,
        pm.try_mul(p)? == *p,
        mp.is_symmetric(),
        pm.is_symmetric(),
    ])
}

/// `M^T / k^2` for `M = M(L D)` with `D` `k`-regular, verified exactly.
pub fn penrose_witness_regular(d: &Digraph) -> Result<RatMatrix> {
    let k = match d.regularity() {
        Some(k) if k >= 1 => k,
        _ => return Err(Error::NotRegular),
    };
    let m = RatMatrix::from(&line_digraph(d)?.graph.adjacency());
    let scale = BigRational::new(BigInt::one(), BigInt::from(k * k));
    let p = m.transpose().scaled(&scale);
    let labels = ["i", "ii", "iii", "iv"];
    for (ok, label) in penrose_conditions(&m, &p)?.into_iter().zip(labels) {
        if !ok {
            return Err(Error::PenroseViolation(label));
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::families::*;

    #[test]
    fn zero_matrix_charpoly() {
        assert_eq!(
            char_poly(&IntMatrix::zeros(3, 3)).unwrap(),
            IntPoly::monomial(3)
        );
    }

    #[test]
    fn two_cube_charpoly() {
        // x^4 - 4x^2, from the 4x4 determinant expansion
        assert_eq!(
            digraph_char_poly(&two_cube()),
            IntPoly::from_i64(&[0, 0, -4, 0, 1])
        );
    }

    #[test]
    fn cycle_charpoly() {
        for n in 2..8 {
            let mut c = vec![0i64; n + 1];
            c[0] = -1;
            c[n] = 1;
            assert_eq!(digraph_char_poly(&dicycle(n)), IntPoly::from_i64(&c));
        }
    }

    #[test]
    fn non_square_rejected() {
        assert!(matches!(
            char_poly(&IntMatrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
        assert!(matches!(
            permanent(&IntMatrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn big_entries_fall_back_to_bigint() {
        let big: BigInt = BigInt::from(1u8) << 100usize;
        let mut m = IntMatrix::zeros(2, 2);
        m.set(0, 1, big.clone());
        m.set(1, 0, big.clone());
        // det(xI - M) = x^2 - 2^200
        let p = char_poly(&m).unwrap();
        assert_eq!(p.coefficients()[0], -(&big * &big));
        assert_eq!(permanent(&m).unwrap(), &big * &big);
    }

    #[test]
    fn polynomial_formatting() {
        let p = IntPoly::from_i64(&[0, 0, 0, 0, 0, 0, 0, -2, 1]);
        assert_eq!(p.to_factored_string(), "x^7*(x-2)");
        assert_eq!(
            IntPoly::from_i64(&[0, 0, -4, 0, 1]).to_string(),
            "x^4 - 4x^2"
        );
        assert_eq!(
            IntPoly::from_i64(&[0, 0, -4, 0, 1]).to_factored_string(),
            "x^2*(x^2-4)"
        );
        assert_eq!(IntPoly::monomial(3).to_factored_string(), "x^3");
        assert_eq!(IntPoly::from_i64(&[-1, 0, 1]).to_factored_string(), "x^2-1");
        assert_eq!(
            IntPoly::from_i64(&[0, -2, 1]).to_coefficient_list(),
            "[0, -2, 1]"
        );
    }

    #[test]
    fn line_charpoly_on_two_cube() {
        let (lhs, rhs) = line_charpoly_sides(&two_cube()).unwrap();
        // x^6 (x^2 - 4)
        assert_eq!(lhs, IntPoly::from_i64(&[0, 0, 0, 0, 0, 0, -4, 0, 1]));
        assert_eq!(lhs, rhs);
        assert!(verify_line_charpoly(&dicycle(5)).unwrap());
        assert!(matches!(
            verify_line_charpoly(&dipath(3)),
            Err(Error::ExponentNegative {
                arcs: 2,
                vertices: 3
            })
        ));
    }

    #[test]
    fn debruijn_small_cases() {
        assert_eq!(
            debruijn_charpoly(2, 1).unwrap(),
            IntPoly::from_i64(&[0, -2, 1])
        );
        assert!(debruijn_spectrum_check(2, 3).unwrap());
        assert!(debruijn_spectrum_check(3, 2).unwrap());
        assert!(matches!(
            debruijn_spectrum_check(3, 6),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn permanent_examples() {
        assert_eq!(permanent(&IntMatrix::identity(4)).unwrap(), BigInt::from(1));
        let ones = IntMatrix::from_rows(&vec![vec![1; 4]; 4]).unwrap();
        assert_eq!(permanent(&ones).unwrap(), BigInt::from(24));
        assert_eq!(permanent(&IntMatrix::zeros(0, 0)).unwrap(), BigInt::from(1));
        assert!(matches!(
            permanent(&IntMatrix::zeros(21, 21)),
            Err(Error::TooLarge {
                size: 21,
                limit: 20
            })
        ));
    }

    #[test]
    fn permanent_positivity_examples() {
        let c5 = permanent_positivity_check(&dicycle(5)).unwrap();
        assert!(c5.positive() && c5.agrees());
        let p3 = permanent_positivity_check(&dipath(3)).unwrap();
        assert!(p3.permanent.is_zero() && p3.agrees());
        let two = permanent_positivity_check(&dicycle(3).disjoint_union(&dicycle(3))).unwrap();
        assert!(two.positive() && two.components_eulerian);
    }

    #[test]
    fn penrose_for_cycle_is_inverse() {
        let p = penrose_witness_regular(&dicycle(4)).unwrap();
        let m = RatMatrix::from(&line_digraph(&dicycle(4)).unwrap().graph.adjacency());
        assert_eq!(p, m.transpose());
        assert_eq!(penrose_witness_regular(&dipath(3)), Err(Error::NotRegular));
    }
}
