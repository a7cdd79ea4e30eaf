//! Dihedral manifolds `D_{-b/c}` and Sol torus semi-bundles `S_phi`.

use std::fmt;

use num_rational::Ratio;
use serde_json::{json, Value};

use crate::abelian::json::scalar_to_json;
use crate::abelian::{cokernel, FinAbGroup, Matrix};
use crate::contfrac::{splice_chain, SpliceChain};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A cokernel computation alongside the closed form it should equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Computation<Z> {
    pub computed: FinAbGroup<Z>,
    pub closed_form: FinAbGroup<Z>,
}

impl<Z: Scalar> H1Computation<Z> {
    pub fn agrees(&self) -> bool {
        self.computed == self.closed_form
    }
}

/// `D_{-b/c} = S^2(0; (2,1), (2,-1), (b,-c))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DihedralManifold<Z> {
    b: Z,
    c: Z,
}

impl<Z: Scalar> DihedralManifold<Z> {
    pub fn new(b: Z, c: Z) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::Invalid(format!("c = {c} must be positive")));
        }
        if !b.gcd(&c).is_one() {
            return Err(Error::Invalid(format!("b = {b} and c = {c} must be coprime")));
        }
        Ok(DihedralManifold { b, c })
    }

    /// `D_n`, i.e. `D_{-b/c}` with `-b/c = n`. `D_0` stands for
    /// `RP^3 # -RP^3`.
    pub fn d_n(n: Z) -> Self {
        DihedralManifold { b: -n, c: Z::one() }
    }

    pub fn b(&self) -> &Z {
        &self.b
    }

    pub fn c(&self) -> &Z {
        &self.c
    }

    /// `n` with `self = D_n`, when `c = 1`.
    pub fn index(&self) -> Option<Z> {
        self.c.is_one().then(|| -self.b.clone())
    }

    /// Lens spaces (`|b| = 1`) and `D_0` are kept as degenerate members.
    pub fn is_degenerate(&self) -> bool {
        self.b.abs() <= Z::one()
    }

    /// Seifert presentation of `H1`.
    pub fn presentation(&self) -> Matrix<Z> {
        let (b, c) = (self.b.clone(), self.c.clone());
        let z = Z::zero;
        Matrix::from_rows(vec![
            vec![Z::one(), Z::one(), Z::one(), z()],
            vec![Z::of(2), z(), z(), Z::one()],
            vec![z(), Z::of(-2), z(), Z::one()],
            vec![z(), z(), -b, c],
        ])
        .expect("4x4")
    }

    /// `Z/2 + Z/2c` for even `b`, `Z/4c` otherwise.
    pub fn h1_closed_form(&self) -> FinAbGroup<Z> {
        let c = self.c.clone();
        if self.b.is_even() {
            FinAbGroup::from_cyclic_orders(&[Z::of(2), Z::of(2) * c])
        } else {
            FinAbGroup::from_cyclic_orders(&[Z::of(4) * c])
        }
    }

    pub fn h1(&self) -> FinAbGroup<Z> {
        cokernel(&self.presentation())
    }

    /// `e = c/b`.
    pub fn euler_number(&self) -> Result<Ratio<Z>> {
        if self.b.is_zero() {
            return Err(Error::ZeroFiber);
        }
        Ok(Ratio::new(self.c.clone(), self.b.clone()))
    }
}

impl<Z: Scalar> fmt::Display for DihedralManifold<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index() {
            Some(n) => write!(f, "D_{n}"),
            None => write!(f, "D_{{{}/{}}}", -self.b.clone(), self.c),
        }
    }
}

pub fn h1_dihedral<Z: Scalar>(m: &DihedralManifold<Z>) -> H1Computation<Z> {
    H1Computation { computed: m.h1(), closed_form: m.h1_closed_form() }
}

pub fn euler_number<Z: Scalar>(m: &DihedralManifold<Z>) -> Result<Ratio<Z>> {
    m.euler_number()
}

/// Torus semi-bundle glued by `A_phi = [[a, c], [d, b]]`, `det A_phi = -1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolManifold<Z> {
    a: Z,
    b: Z,
    c: Z,
    d: Z,
}

impl<Z: Scalar> SolManifold<Z> {
    pub fn new(a: Z, b: Z, c: Z, d: Z) -> Result<Self> {
        let det = a.clone() * b.clone() - c.clone() * d.clone();
        if det != Z::of(-1) {
            return Err(Error::Determinant { det: det.to_string() });
        }
        Ok(SolManifold { a, b, c, d })
    }

    /// `M_{a,b}`: `c = 1`, `d = ab + 1`.
    pub fn m_ab(a: Z, b: Z) -> Self {
        let d = a.clone() * b.clone() + Z::one();
        SolManifold { a, b, c: Z::one(), d }
    }

    pub fn a(&self) -> &Z {
        &self.a
    }

    pub fn b(&self) -> &Z {
        &self.b
    }

    pub fn c(&self) -> &Z {
        &self.c
    }

    pub fn d(&self) -> &Z {
        &self.d
    }

    pub fn params(&self) -> [Z; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }

    /// Some entry of `A_phi` vanishes, so the gluing preserves a fibration
    /// and the result is Seifert fibered rather than Sol.
    pub fn is_degenerate(&self) -> bool {
        self.params().iter().any(Z::is_zero)
    }

    pub fn gluing_matrix(&self) -> Matrix<Z> {
        crate::contfrac::gluing_matrix(&self.a, &self.b, &self.c, &self.d)
    }

    /// Mayer-Vietoris presentation on generators `(y1, l1, y2, l2)`.
    pub fn presentation(&self) -> Matrix<Z> {
        let [a, b, c, d] = self.params();
        let z = Z::zero;
        let two = Z::of(2);
        Matrix::from_rows(vec![
            vec![z(), z(), -two.clone() * a, -two.clone() * c],
            vec![two.clone(), z(), d, b],
            vec![z(), z(), -two.clone(), z()],
            vec![z(), two, z(), Z::one()],
        ])
        .expect("4x4")
    }

    /// `Z/2 + Z/2 + Z/4c` for even `d`, `Z/4 + Z/4c` otherwise.
    pub fn h1_closed_form(&self) -> FinAbGroup<Z> {
        let four_c = Z::of(4) * self.c.clone();
        if self.d.is_even() {
            FinAbGroup::from_cyclic_orders(&[Z::of(2), Z::of(2), four_c])
        } else {
            FinAbGroup::from_cyclic_orders(&[Z::of(4), four_c])
        }
    }

    pub fn h1(&self) -> FinAbGroup<Z> {
        cokernel(&self.presentation())
    }

    /// The at most four parameter sets describing the same oriented manifold:
    /// `A_phi`, `-A_phi`, `A_phi^{-1}` and `-A_phi^{-1}`.
    pub fn orbit(&self) -> Vec<SolManifold<Z>> {
        let [a, b, c, d] = self.params();
        let mut out = vec![
            SolManifold { a: a.clone(), b: b.clone(), c: c.clone(), d: d.clone() },
            SolManifold { a: -a.clone(), b: -b.clone(), c: -c.clone(), d: -d.clone() },
            SolManifold { a: -b.clone(), b: -a.clone(), c: c.clone(), d: d.clone() },
            SolManifold { a: b, b: a, c: -c, d: -d },
        ];
        out.sort_by_key(|x| x.key());
        out.dedup();
        out
    }

    fn key(&self) -> [Z; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }

    /// Lexicographically smallest orbit member with `c >= 0`.
    pub fn normalize(&self) -> SolManifold<Z> {
        self.orbit()
            .into_iter()
            .filter(|m| !m.c.is_negative())
            .min_by(|x, y| x.key().cmp(&y.key()))
            .expect("c or -c is nonnegative")
    }

    pub fn splice_presentation(&self) -> Result<PlumbingGraph<Z>> {
        PlumbingGraph::splice(self)
    }

    /// `(a, b)` when `c = 1`.
    pub fn ab(&self) -> Option<(Z, Z)> {
        self.c.is_one().then(|| (self.a.clone(), self.b.clone()))
    }
}

impl<Z: Scalar> fmt::Display for SolManifold<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ab() {
            Some((a, b)) => write!(f, "M_{{{a},{b}}}"),
            None => write!(f, "S[[{}, {}], [{}, {}]]", self.a, self.c, self.d, self.b),
        }
    }
}

pub fn h1_sol<Z: Scalar>(m: &SolManifold<Z>) -> H1Computation<Z> {
    H1Computation { computed: m.h1(), closed_form: m.h1_closed_form() }
}

pub fn normalize<Z: Scalar>(m: &SolManifold<Z>) -> SolManifold<Z> {
    m.normalize()
}

/// Normal form of `M_{a,b}` as a pair: the smaller of `(a, b)`, `(-b, -a)`.
pub fn normalize_ab<Z: Scalar>(a: &Z, b: &Z) -> (Z, Z) {
    let alt = (-b.clone(), -a.clone());
    if alt < (a.clone(), b.clone()) {
        alt
    } else {
        (a.clone(), b.clone())
    }
}

/// Weighted plumbing graph of a Sol manifold as a splice of two dihedral
/// pieces: each end is a weight-0 vertex carrying a `2` and a `-2` pendant,
/// and the chain `B, x1, ..., xn, A` runs between them.
#[derive(Clone, Debug)]
pub struct PlumbingGraph<Z> {
    pub weights: Vec<Z>,
    pub edges: Vec<(usize, usize)>,
    pub chain: SpliceChain<Z>,
}

impl<Z: Scalar> PlumbingGraph<Z> {
    pub fn splice(m: &SolManifold<Z>) -> Result<Self> {
        let chain = splice_chain(&m.a, &m.b, &m.c, &m.d)?;
        let central = chain.chain_weights();
        let mut weights = vec![Z::of(2), Z::of(-2), Z::zero()];
        weights.extend(central.iter().cloned());
        let right = weights.len();
        weights.extend([Z::zero(), Z::of(2), Z::of(-2)]);

        let mut edges = vec![(0, 2), (1, 2)];
        edges.extend((2..right).map(|i| (i, i + 1)));
        edges.extend([(right, right + 1), (right, right + 2)]);
        Ok(PlumbingGraph { weights, edges, chain })
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(x, y)| match (x == v, y == v) {
                (true, _) => Some(y),
                (_, true) => Some(x),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    /// Indices of the two weight-0 junctions.
    pub fn junctions(&self) -> (usize, usize) {
        (2, self.weights.len() - 3)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph plumbing {\n  node [shape=circle];\n");
        for (i, w) in self.weights.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"{w}\"];\n"));
        }
        for (x, y) in &self.edges {
            out.push_str(&format!("  v{x} -- v{y};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        let vertices: Vec<Value> = self
            .weights
            .iter()
            .enumerate()
            .map(|(i, w)| json!({"id": i, "weight": scalar_to_json(w), "neighbors": self.neighbors(i)}))
            .collect();
        json!({
            "vertices": vertices,
            "chain": self.chain.chain_weights().iter().map(scalar_to_json).collect::<Vec<_>>(),
            "framing": scalar_to_json(&self.chain.framing),
            "closed_formula_agrees": self.chain.closed_formula_agrees,
        })
    }
}

pub fn splice_presentation<Z: Scalar>(m: &SolManifold<Z>) -> Result<PlumbingGraph<Z>> {
    PlumbingGraph::splice(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[i64]) -> FinAbGroup<i64> {
        FinAbGroup::from_cyclic_orders(orders)
    }

    #[test]
    fn dihedral_h1() {
        for (b, c, expected) in [(2, 1, g(&[2, 2])), (3, 1, g(&[4])), (4, 3, g(&[2, 6]))] {
            let h = h1_dihedral(&DihedralManifold::new(b, c).unwrap());
            assert!(h.agrees());
            assert_eq!(h.computed, expected);
        }
        assert_eq!(DihedralManifold::d_n(0i64).h1(), g(&[2, 2]));
    }

    #[test]
    fn euler_numbers() {
        let e = |b: i64, c: i64| DihedralManifold::new(b, c).unwrap().euler_number();
        assert_eq!(e(4, 1).unwrap(), Ratio::new(1, 4));
        assert_eq!(e(6, 5).unwrap(), Ratio::new(5, 6));
        assert_eq!(e(0, 1), Err(Error::ZeroFiber));
    }

    #[test]
    fn sol_h1() {
        let h = h1_sol(&SolManifold::new(1i64, 1, 1, 2).unwrap());
        assert!(h.agrees());
        assert_eq!(h.computed, g(&[2, 2, 4]));
        assert_eq!(SolManifold::m_ab(2i64, 2).h1(), g(&[4, 4]));
        assert_eq!(SolManifold::m_ab(0i64, 0).h1(), g(&[4, 4]));
        assert!(matches!(SolManifold::new(1i64, 1, 1, 1), Err(Error::Determinant { .. })));
    }

    #[test]
    fn normal_forms() {
        let m = SolManifold::m_ab(3i64, 5).normalize();
        assert_eq!(m, SolManifold::m_ab(-5i64, -3).normalize());
        assert_eq!(m.ab(), Some((-5, -3)));
        assert_eq!(SolManifold::m_ab(2i64, 2).normalize(), SolManifold::m_ab(-2, -2));
        let neg = SolManifold::new(-1i64, -1, -1, -2).unwrap();
        assert!(!neg.normalize().c().is_negative());
        assert_eq!(neg.normalize().h1(), neg.h1());
        assert_eq!(normalize_ab(&3i64, &5), (-5, -3));
    }

    #[test]
    fn splice_graph_shape() {
        let graph = SolManifold::m_ab(1i64, 2).splice_presentation().unwrap();
        assert_eq!(graph.weights, vec![2, -2, 0, -2, 1, 0, 2, -2]);
        let (l, r) = graph.junctions();
        assert_eq!((graph.degree(l), graph.degree(r)), (3, 3));
        assert!(graph.to_dot().contains("v2 -- v3;"));
        assert!(matches!(SolManifold::m_ab(0i64, 2).splice_presentation(), Err(Error::Degenerate(_))));
    }
}
