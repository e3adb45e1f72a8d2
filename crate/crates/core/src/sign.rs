//! Sign rules: Koszul signs for permutations and operator passing, the
//! suspension isomorphism signs, the Stasheff identity sign and the
//! example's periodic sign `s_n`.
//!
//! Every sign is computed from the parity of an integer exponent. Exponents
//! can be negative once desuspended degrees are involved; parity is taken
//! with `rem_euclid`, so `(-1)^(-3) = -1`.

use std::fmt;
use std::ops::{Mul, MulAssign, Neg};

use crate::error::{Error, Result};
use crate::graded::{scalar, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^exponent`.
    pub fn from_exponent(exponent: i64) -> Sign {
        if exponent.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn to_scalar(self) -> Scalar {
        scalar(self.to_i64())
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl MulAssign for Sign {
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => f.write_str("+1"),
            Sign::Minus => f.write_str("-1"),
        }
    }
}

fn check_permutation(sigma: &[usize]) -> Result<()> {
    let mut seen = vec![false; sigma.len()];
    for &s in sigma {
        if s >= sigma.len() || seen[s] {
            return Err(Error::Input(format!("{sigma:?} is not a permutation")));
        }
        seen[s] = true;
    }
    Ok(())
}

/// Koszul sign of rearranging `y_0 ⊗ … ⊗ y_{n-1}` into
/// `y_{σ(0)} ⊗ … ⊗ y_{σ(n-1)}`.
///
/// Each pair of inputs whose relative order is reversed contributes
/// `(-1)^(p·q)`, with `p` and `q` read from the unpermuted `degrees`.
pub fn koszul_permutation_sign(degrees: &[i64], sigma: &[usize]) -> Result<Sign> {
    if degrees.len() != sigma.len() {
        return Err(Error::Input(format!(
            "permutation of length {} applied to {} degrees",
            sigma.len(),
            degrees.len()
        )));
    }
    check_permutation(sigma)?;
    let mut exponent = 0i64;
    for a in 0..sigma.len() {
        for b in a + 1..sigma.len() {
            if sigma[a] > sigma[b] {
                exponent += degrees[sigma[a]] * degrees[sigma[b]];
            }
        }
    }
    Ok(Sign::from_exponent(exponent))
}

/// Sign picked up when an operator of degree `op_degree` moves past an
/// element of degree `passed_degree`.
pub fn pass_operator_sign(op_degree: i64, passed_degree: i64) -> Sign {
    Sign::from_exponent(op_degree * passed_degree)
}

/// `↑^{⊗n} ∘ ↓^{⊗n} = (-1)^{n(n-1)/2} id`.
pub fn susp_iso_sign(n: usize) -> Result<Sign> {
    if n < 1 {
        return Err(Error::Input("arity must be at least 1".into()));
    }
    let n = n as i64;
    Ok(Sign::from_exponent(n * (n - 1) / 2))
}

/// Sign relating `↓x_1 ⊗ … ⊗ ↓x_n` to `↓^{⊗n}(x_1 ⊗ … ⊗ x_n)`:
/// `(-1)^{Σ (n-i)|x_i|}` for 1-based `i`.
pub fn desusp_word_sign(degrees: &[i64]) -> Result<Sign> {
    if degrees.is_empty() {
        return Err(Error::Input("empty degree sequence".into()));
    }
    let n = degrees.len() as i64;
    let exponent: i64 = degrees
        .iter()
        .enumerate()
        .map(|(i, d)| (n - (i as i64 + 1)) * d)
        .sum();
    Ok(Sign::from_exponent(exponent))
}

/// Sign of the term `m_{n-k+1}(x_1..x_λ ⊗ m_k(..) ⊗ ..)` in the Stasheff
/// identity: `(-1)^{k + λ + kλ + kn + k(|x_1| + … + |x_λ|)}`.
pub fn alpha_sign(k: usize, lambda: usize, n: usize, prefix_degree_sum: i64) -> Result<Sign> {
    if n < 1 || lambda > n - 1 || k < 1 || k > n - lambda {
        return Err(Error::Input(format!(
            "alpha sign out of range: k={k}, lambda={lambda}, n={n}"
        )));
    }
    let (k, l, n) = (k as i64, lambda as i64, n as i64);
    Ok(Sign::from_exponent(k + l + k * l + k * n + k * prefix_degree_sum))
}

/// `s_n = (-1)^{(n+1)(n+2)/2}`.
pub fn s_sign(n: usize) -> Result<Sign> {
    if n < 1 {
        return Err(Error::Input("arity must be at least 1".into()));
    }
    let n = n as i64;
    Ok(Sign::from_exponent((n + 1) * (n + 2) / 2))
}
