//! Truncated power series with zero constant term, and the Koszul test for
//! pairs of operadic generating series.

use std::fmt;

use num::{One, Signed, Zero};

use crate::error::Error;
use crate::linalg::{int, parse_rational, Rational};

/// `c₁t + … + c_N t^N`, everything beyond `t^N` discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// `coeffs[0]` is the coefficient of `t`.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self, Error> {
        if coeffs.is_empty() {
            return Err(Error::Series("order must be at least 1".into()));
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// The series `t` to order `n`.
    pub fn t(n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n.max(1)];
        coeffs[0] = Rational::one();
        TruncatedSeries { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); n.max(1)],
        }
    }

    /// Comma-separated `c₁,…,c_N`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let coeffs = s
            .split(',')
            .map(|p| parse_rational(p.trim()).map_err(|e| Error::Series(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        TruncatedSeries::new(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `t^k`; zero for `k = 0` and `k > N`.
    pub fn coeff(&self, k: usize) -> Rational {
        if k == 0 || k > self.order() {
            Rational::zero()
        } else {
            self.coeffs[k - 1].clone()
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn truncate(&self, n: usize) -> Self {
        let coeffs = (1..=n.max(1)).map(|k| self.coeff(k)).collect();
        TruncatedSeries { coeffs }
    }

    pub fn add(&self, o: &Self) -> Result<Self, Error> {
        self.same_order(o)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&o.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn sub(&self, o: &Self) -> Result<Self, Error> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// `f(−t)`.
    pub fn reflect(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { -c } else { c.clone() })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// `−f(−t)`.
    pub fn conjugate(&self) -> Self {
        self.reflect().neg()
    }

    pub fn mul(&self, o: &Self) -> Result<Self, Error> {
        self.same_order(o)?;
        Ok(TruncatedSeries {
            coeffs: product(&self.coeffs, &o.coeffs, self.order()),
        })
    }

    fn same_order(&self, o: &Self) -> Result<(), Error> {
        if self.order() == o.order() {
            Ok(())
        } else {
            Err(Error::Series(format!(
                "order mismatch: {} vs {}",
                self.order(),
                o.order()
            )))
        }
    }

    /// Renders as a polynomial in `t`, e.g. `-t + 1/2 t^2`.
    pub fn polynomial(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let k = i + 1;
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if !mag.is_one() {
                out.push_str(&format!("{mag} "));
            }
            out.push('t');
            if k > 1 {
                out.push_str(&format!("^{k}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(", "))
    }
}

/// Truncated product of coefficient lists indexed from `t¹`.
fn product(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate() {
            // t^(i+1) * t^(j+1) = t^(i+j+2), stored at i+j+1
            if i + j + 1 < n {
                out[i + j + 1] += x * y;
            }
        }
    }
    out
}

/// `g(f(t))` to the common order.
pub fn compose(g: &TruncatedSeries, f: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
    g.same_order(f)?;
    let n = g.order();
    let mut out = vec![Rational::zero(); n];
    let mut power = f.coeffs.clone();
    for k in 1..=n {
        let c = g.coeff(k);
        if !c.is_zero() {
            for (o, p) in out.iter_mut().zip(&power) {
                *o += &c * p;
            }
        }
        if k < n {
            power = product(&power, &f.coeffs, n);
        }
    }
    Ok(TruncatedSeries { coeffs: out })
}

/// The series `h` with `f(h(t)) = t = h(f(t))`.
///
/// Solves for `h` one coefficient at a time: the `t^k` coefficient of `f(h)`
/// is `c₁ h_k` plus terms involving only `h₁..h_{k−1}`.
pub fn comp_inverse(f: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
    let c1 = f.coeff(1);
    if c1.is_zero() {
        return Err(Error::Series("linear coefficient is zero".into()));
    }
    let n = f.order();
    let mut h = TruncatedSeries::zero(n);
    h.coeffs[0] = c1.recip();
    for k in 2..=n {
        let current = compose(f, &h)?.coeff(k);
        h.coeffs[k - 1] = -current / &c1;
    }
    Ok(h)
}

/// `Σ_k (−1)^k dims[k]/k! t^k`, with `dims[0]` the dimension in arity 1.
pub fn gen_series(dims: &[u64], n: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(n.max(1));
    let mut fact = int(1);
    for k in 1..=n.max(1) {
        fact *= int(k as i64);
        let d = dims.get(k - 1).copied().unwrap_or(0);
        let mut c = Rational::from_integer(d.into()) / &fact;
        if k % 2 == 1 {
            c = -c;
        }
        coeffs.push(c);
    }
    TruncatedSeries { coeffs }
}

/// Orientation of the generating series handed to [`koszul_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// Leading term `−t`, coefficients `(−1)^k dim/k!`.
    /// Koszul duality reads `g_P(g_{P!}(t)) = t`.
    Signed,
    /// Leading term `+t`, coefficients `dim/k!`.
    /// Koszul duality reads `f_P(−f_{P!}(−t)) = t`.
    Unsigned,
}

/// The first coefficient where two criteria detect a failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulFailure {
    pub order: usize,
    /// Coefficient of `t^order` in the functional-equation residual.
    pub residual: Rational,
    /// Coefficient of `t^order` in the compositional inverse of `g_P`.
    pub inverse: Rational,
    /// Coefficient of `t^order` in the series the inverse should equal.
    pub expected: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulReport {
    pub convention: Convention,
    pub order: usize,
    /// Residual of the functional equation, `g_P(dual) − t`.
    pub residual: TruncatedSeries,
    /// First order with a nonzero residual.
    pub residual_failure: Option<usize>,
    /// First order where `comp_inverse(g_P)` differs from the dual side.
    pub inverse_failure: Option<usize>,
    pub failure: Option<KoszulFailure>,
}

impl KoszulReport {
    pub fn is_clean(&self) -> bool {
        self.failure.is_none()
    }

    /// Orders `1..passes_to_order` agree.
    pub fn passes_to_order(&self) -> usize {
        self.failure.as_ref().map_or(self.order, |f| f.order - 1)
    }
}

impl fmt::Display for KoszulReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "clean to order {}", self.order),
            Some(x) => write!(
                f,
                "fails at order {}: residual {}, inverse coefficient {} vs {}",
                x.order, x.residual, x.inverse, x.expected
            ),
        }
    }
}

/// Tests the functional equation between an operad's series and its dual's.
///
/// Both criteria are evaluated independently: the residual of the functional
/// equation and a coefficientwise comparison of `comp_inverse(g_P)` with the
/// dual side. They must fail at the same order; a disagreement is an error.
pub fn koszul_check(
    gp: &TruncatedSeries,
    gdual: &TruncatedSeries,
    convention: Convention,
) -> Result<KoszulReport, Error> {
    gp.same_order(gdual)?;
    let lead = match convention {
        Convention::Signed => -int(1),
        Convention::Unsigned => int(1),
    };
    if gp.coeff(1) != lead || gdual.coeff(1) != lead {
        return Err(Error::Series(format!(
            "both series must have linear coefficient {lead} in the {convention:?} convention"
        )));
    }
    let dual_side = match convention {
        Convention::Signed => gdual.clone(),
        Convention::Unsigned => gdual.conjugate(),
    };
    let n = gp.order();
    let residual = compose(gp, &dual_side)?.sub(&TruncatedSeries::t(n))?;
    let inverse = comp_inverse(gp)?;
    let residual_failure = (1..=n).find(|&k| !residual.coeff(k).is_zero());
    let inverse_failure = (1..=n).find(|&k| inverse.coeff(k) != dual_side.coeff(k));
    if residual_failure != inverse_failure {
        return Err(Error::Series(format!(
            "criteria disagree: residual fails at {residual_failure:?}, inverse at {inverse_failure:?}"
        )));
    }
    let failure = residual_failure.map(|k| KoszulFailure {
        order: k,
        residual: residual.coeff(k),
        inverse: inverse.coeff(k),
        expected: dual_side.coeff(k),
    });
    Ok(KoszulReport {
        convention,
        order: n,
        residual,
        residual_failure,
        inverse_failure,
        failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn s(v: &[i64]) -> TruncatedSeries {
        TruncatedSeries::new(v.iter().map(|&x| int(x)).collect()).unwrap()
    }

    #[test]
    fn compose_squares() {
        let sq = s(&[0, 1, 0, 0]);
        assert_eq!(compose(&sq, &s(&[1, 1, 0, 0])).unwrap(), s(&[0, 1, 2, 1]));
        let g = s(&[3, -1, 2, 5]);
        assert_eq!(compose(&g, &TruncatedSeries::t(4)).unwrap(), g);
        assert!(compose(&g, &TruncatedSeries::t(3)).is_err());
    }

    #[test]
    fn inverse_of_cubic() {
        let h = comp_inverse(&s(&[1, 1, 1, 0, 0])).unwrap();
        assert_eq!(h, s(&[1, -1, 1, 0, -4]));
        assert!(comp_inverse(&s(&[0, 1])).is_err());
    }

    #[test]
    fn jj_series() {
        let g = gen_series(&[1, 1, 2, 5], 4);
        assert_eq!(g, TruncatedSeries::parse("-1,1/2,-1/3,5/24").unwrap());
        let a = comp_inverse(&g).unwrap();
        assert_eq!(&a.coeffs()[..3], &[int(-1), rat(1, 2), rat(-1, 6)]);
        assert_eq!(
            gen_series(&[1, 1, 3], 3),
            TruncatedSeries::parse("-1,1/2,-1/2").unwrap()
        );
        assert_eq!(gen_series(&[1], 3), s(&[-1, 0, 0]));
    }

    #[test]
    fn koszul_examples() {
        let assoc = gen_series(&[1, 2, 6, 24, 120, 720], 6);
        assert!(koszul_check(&assoc, &assoc, Convention::Signed)
            .unwrap()
            .is_clean());

        let jj = gen_series(&[1, 1, 2], 3);
        let jj_dual = gen_series(&[1, 1, 3], 3);
        let r = koszul_check(&jj, &jj_dual, Convention::Signed).unwrap();
        let f = r.failure.unwrap();
        assert_eq!(
            (f.order, f.inverse, f.expected),
            (3, rat(-1, 6), rat(-1, 2))
        );

        let aass = gen_series(&[1, 2, 6], 5);
        let r = koszul_check(&aass, &aass, Convention::Signed).unwrap();
        assert_eq!(r.failure.unwrap().order, 5);
        let plus = s(&[1, 1, 1, 0, 0]);
        let r = koszul_check(&plus, &plus, Convention::Unsigned).unwrap();
        assert_eq!(r.failure.unwrap().order, 5);
        let assoc_plus = s(&[1, 1, 1, 1, 1]);
        assert!(koszul_check(&assoc_plus, &assoc_plus, Convention::Unsigned)
            .unwrap()
            .is_clean());
        assert!(koszul_check(&assoc_plus, &assoc_plus, Convention::Signed).is_err());
    }

    #[test]
    fn aass_reflected_composition() {
        let g = gen_series(&[1, 2, 6], 4);
        let c = compose(&g, &g.conjugate()).unwrap();
        assert!(!c.coeff(2).is_zero());
    }

    #[test]
    fn polynomial_rendering() {
        let g = TruncatedSeries::parse("-1,1/2,0,5/24").unwrap();
        assert_eq!(g.polynomial(), "-t + 1/2 t^2 + 5/24 t^4");
        assert_eq!(g.to_string(), "-1, 1/2, 0, 5/24");
    }
}
