//! Correction terms of dihedral manifolds, the blocked d-invariant profile of
//! `M_{a,b}`, and Casson-Walker-Lescop invariants.

use std::fmt;

use num_rational::Ratio;
use serde_json::{json, Value};

use crate::cobordism::ParityCase;
use crate::error::{Error, Result};
use crate::manifolds::{DihedralManifold, SolManifold};
use crate::scalar::Scalar;

/// Exact rational; every d-invariant here has denominator dividing 4.
pub type Quarter<Z> = Ratio<Z>;

pub fn quarter<Z: Scalar>(numerator: Z) -> Quarter<Z> {
    Ratio::new(numerator, Z::of(4))
}

pub fn is_quarter<Z: Scalar>(q: &Quarter<Z>) -> bool {
    Z::of(4).is_multiple_of(q.denom())
}

/// Rationals serialize as `"p/q"` strings (`"p"` when integral).
pub fn rational_to_json<Z: Scalar>(q: &Ratio<Z>) -> Value {
    Value::String(q.to_string())
}

pub fn multiset_to_json<Z: Scalar>(values: &[Ratio<Z>]) -> Value {
    Value::Array(values.iter().map(rational_to_json).collect())
}

fn sorted<Z: Scalar>(mut v: Vec<Ratio<Z>>) -> Vec<Ratio<Z>> {
    v.sort();
    v
}

/// `d(D_n) = {0, 0, (n+2)/4, (n-2)/4}`.
pub fn d_dihedral<Z: Scalar>(n: &Z) -> [Quarter<Z>; 4] {
    let zero = Ratio::from_integer(Z::zero());
    [zero.clone(), zero, quarter(n.clone() + Z::of(2)), quarter(n.clone() - Z::of(2))]
}

/// `{v, v, w, w}` with `v = (n+2)/4`, `w = (n-2)/4`: the four values carried
/// by the classes whose extensions restrict to the non-zero-d structures.
fn doubled_pair<Z: Scalar>(n: &Z) -> Vec<Quarter<Z>> {
    let p = quarter(n.clone() + Z::of(2));
    let m = quarter(n.clone() - Z::of(2));
    sorted(vec![p.clone(), p, m.clone(), m])
}

/// The sixteen d-invariants of `M_{a,b}` grouped by spin^c class; the four
/// values on `S_empty` are unknown and only their sum is recorded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DInvariantProfile<Z: Scalar> {
    pub a: Z,
    pub b: Z,
    pub s_ba: Vec<Quarter<Z>>,
    pub s_b: Vec<Quarter<Z>>,
    pub s_a: Vec<Quarter<Z>>,
    pub q_sum: Quarter<Z>,
    pub total_sum: Quarter<Z>,
    pub degenerate: bool,
}

impl<Z: Scalar> DInvariantProfile<Z> {
    pub fn known_sum(&self) -> Quarter<Z> {
        self.s_ba.iter().chain(&self.s_b).chain(&self.s_a).cloned().sum()
    }

    pub fn block(&self, label: &str) -> Option<&[Quarter<Z>]> {
        match label {
            "S_ba" => Some(&self.s_ba),
            "S_b" => Some(&self.s_b),
            "S_a" => Some(&self.s_a),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a": self.a.to_string(),
            "b": self.b.to_string(),
            "S_ba": multiset_to_json(&self.s_ba),
            "S_b": multiset_to_json(&self.s_b),
            "S_a": multiset_to_json(&self.s_a),
            "S_empty": "unknown",
            "q_sum": rational_to_json(&self.q_sum),
            "total": rational_to_json(&self.total_sum),
            "degenerate": self.degenerate,
        })
    }
}

impl<Z: Scalar> fmt::Display for DInvariantProfile<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[Quarter<Z>]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        let flag = if self.degenerate { " [degenerate]" } else { "" };
        writeln!(f, "d-invariants of M_{{{},{}}}{flag}", self.a, self.b)?;
        writeln!(f, "  S_ba    {{{}}}", show(&self.s_ba))?;
        writeln!(f, "  S_b     {{{}}}", show(&self.s_b))?;
        writeln!(f, "  S_a     {{{}}}", show(&self.s_a))?;
        writeln!(f, "  S_empty {{q1, q2, q3, q4}} with sum {}", self.q_sum)?;
        write!(f, "  total   {}", self.total_sum)
    }
}

/// Profile of `M_{a,b}`. The `(odd, even)` case must first be moved to
/// `(-b, -a)`.
pub fn d_sol_profile<Z: Scalar>(a: &Z, b: &Z) -> Result<DInvariantProfile<Z>> {
    ParityCase::of(a, b)?;
    let zero = Ratio::from_integer(Z::zero());
    let s_ba = vec![zero; 4];
    let s_b = doubled_pair(&-b.clone());
    let s_a = doubled_pair(a);
    let total_sum = d_sum_sol(a, b);
    let known: Quarter<Z> = s_b.iter().chain(&s_a).cloned().sum();
    let q_sum = total_sum.clone() - known;
    Ok(DInvariantProfile {
        a: a.clone(),
        b: b.clone(),
        s_ba,
        s_b,
        s_a,
        q_sum,
        total_sum,
        degenerate: SolManifold::m_ab(a.clone(), b.clone()).is_degenerate(),
    })
}

/// `sum_s d(M_{a,b}, s) = -2 lambda_L(M_{a,b})`.
pub fn d_sum_sol<Z: Scalar>(a: &Z, b: &Z) -> Quarter<Z> {
    -lescop_sol(a, b) * Z::of(2)
}

/// `lambda_L(D_n) = -1/2 sum d(D_n)`.
pub fn lescop_dihedral<Z: Scalar>(n: &Z) -> Quarter<Z> {
    let total: Quarter<Z> = d_dihedral(n).into_iter().sum();
    -total / Z::of(2)
}

/// Splice additivity of `lambda_W` with `|H1(M_{a,b})| = 16`,
/// `|H1(D_n)| = 4`: `lambda_L(M_{a,b}) = 4 lambda_L(D_a) + 4 lambda_L(D_{-b})`.
pub fn lescop_sol<Z: Scalar>(a: &Z, b: &Z) -> Quarter<Z> {
    (lescop_dihedral(a) + lescop_dihedral(&-b.clone())) * Z::of(4)
}

/// A manifold accepted by [`lescop`] and [`casson_walker`].
#[derive(Clone, Debug)]
pub enum Manifold<Z> {
    Sol(SolManifold<Z>),
    Dihedral(DihedralManifold<Z>),
}

pub fn lescop<Z: Scalar>(m: &Manifold<Z>) -> Result<Quarter<Z>> {
    match m {
        Manifold::Sol(s) => {
            let (a, b) = s.ab().ok_or_else(|| Error::Invalid("lescop needs c = 1".into()))?;
            Ok(lescop_sol(&a, &b))
        }
        Manifold::Dihedral(d) => {
            let n = d.index().ok_or_else(|| Error::Invalid("lescop needs c = 1".into()))?;
            Ok(lescop_dihedral(&n))
        }
    }
}

/// `lambda_W = lambda_L / |H1|`, with `|H1|` from the cokernel.
pub fn casson_walker<Z: Scalar>(m: &Manifold<Z>) -> Result<Quarter<Z>> {
    let l = lescop(m)?;
    let h1 = match m {
        Manifold::Sol(s) => s.h1(),
        Manifold::Dihedral(d) => d.h1(),
    };
    let order = h1.order().ok_or(Error::InfiniteGroup { free_rank: h1.free_rank() })?;
    Ok(l / order)
}

/// Consistency of the profile with the Lescop sum formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DSumReport<Z: Scalar> {
    pub total: Quarter<Z>,
    pub minus_two_lescop: Quarter<Z>,
    pub expected_total: Quarter<Z>,
    pub known_sum: Quarter<Z>,
    pub q_sum: Quarter<Z>,
    pub degenerate: bool,
    pub passed: bool,
}

impl<Z: Scalar> fmt::Display for DSumReport<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flag = if self.degenerate { " [degenerate]" } else { "" };
        let verdict = if self.passed { "pass" } else { "FAIL" };
        write!(
            f,
            "{verdict}{flag}: total {} = -2 lambda_L = {}, known blocks {} + q_sum {}",
            self.total, self.minus_two_lescop, self.known_sum, self.q_sum
        )
    }
}

pub fn d_sum_check<Z: Scalar>(a: &Z, b: &Z) -> Result<DSumReport<Z>> {
    let p = d_sol_profile(a, b)?;
    let minus_two_lescop = -lescop_sol(a, b) * Z::of(2);
    let expected_total = Ratio::from_integer(Z::of(2) * (a.clone() - b.clone()));
    let known_sum = p.known_sum();
    let passed = p.total_sum == minus_two_lescop
        && p.total_sum == expected_total
        && known_sum == Ratio::from_integer(a.clone() - b.clone())
        && known_sum.clone() + p.q_sum.clone() == p.total_sum;
    Ok(DSumReport {
        total: p.total_sum,
        minus_two_lescop,
        expected_total,
        known_sum,
        q_sum: p.q_sum,
        degenerate: p.degenerate,
        passed,
    })
}
