//! Splice diagrams of iterated torus links.
//!
//! A diagram is a tree whose arrowheads are the link components. Nodes (valence at
//! least three) carry an integer weight on every incident edge. From the weights one
//! reads linking numbers `l_ij`, multiplicities `m_i`, and the Conway potential.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::LaurentPolynomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    Arrowhead,
    #[serde(alias = "node", alias = "leaf", alias = "vertex")]
    Plain,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: usize,
    pub kind: VertexKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight_at_a: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight_at_b: Option<i64>,
}

impl Edge {
    fn other(&self, v: usize) -> usize {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }

    fn weight_at(&self, v: usize) -> Option<i64> {
        if self.a == v {
            self.weight_at_a
        } else {
            self.weight_at_b
        }
    }

    fn set_weight_at(&mut self, v: usize, w: Option<i64>) {
        if self.a == v {
            self.weight_at_a = w;
        } else {
            self.weight_at_b = w;
        }
    }
}

/// A validated splice diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDiagram", into = "RawDiagram")]
pub struct SpliceDiagram {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct RawDiagram {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

impl TryFrom<RawDiagram> for SpliceDiagram {
    type Error = Error;
    fn try_from(r: RawDiagram) -> Result<Self> {
        SpliceDiagram::new(r.vertices, r.edges)
    }
}

impl From<SpliceDiagram> for RawDiagram {
    fn from(d: SpliceDiagram) -> Self {
        RawDiagram { vertices: d.vertices, edges: d.edges }
    }
}

impl SpliceDiagram {
    pub fn new(mut vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self> {
        vertices.sort_by_key(|v| v.id);
        for pair in vertices.windows(2) {
            if pair[0].id == pair[1].id {
                return Err(Error::Diagram(format!("duplicate vertex id {}", pair[0].id)));
            }
        }
        let d = Self { vertices, edges };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        let nv = self.vertices.len();
        if nv < 2 {
            return Err(Error::Diagram("a diagram needs at least two vertices".into()));
        }
        if self.edges.len() + 1 != nv {
            return Err(Error::Diagram("edge count does not match a tree".into()));
        }
        for e in &self.edges {
            self.index(e.a)?;
            self.index(e.b)?;
            if e.a == e.b {
                return Err(Error::Diagram("loop edge".into()));
            }
        }
        // connectivity
        let mut seen = vec![false; nv];
        let mut stack = vec![self.vertices[0].id];
        while let Some(v) = stack.pop() {
            let i = self.index(v)?;
            if seen[i] {
                continue;
            }
            seen[i] = true;
            stack.extend(self.incident(v).map(|e| e.other(v)));
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Diagram("not connected".into()));
        }
        for v in &self.vertices {
            let val = self.valence(v.id);
            match v.kind {
                VertexKind::Arrowhead => {
                    if val != 1 {
                        return Err(Error::Diagram(format!("arrowhead {} has valence {val}", v.id)));
                    }
                    if !matches!(v.sign, Some(1) | Some(-1)) {
                        return Err(Error::Diagram(format!("arrowhead {} needs sign +1 or -1", v.id)));
                    }
                }
                VertexKind::Plain => {
                    if val == 2 {
                        return Err(Error::Diagram(format!("vertex {} has valence 2", v.id)));
                    }
                }
            }
            let node = v.kind == VertexKind::Plain && val >= 3;
            let weights: Vec<Option<i64>> = self.incident(v.id).map(|e| e.weight_at(v.id)).collect();
            if node {
                if weights.iter().any(|w| w.is_none()) {
                    return Err(Error::Diagram(format!("node {} lacks an edge weight", v.id)));
                }
                let ws: Vec<i64> = weights.into_iter().flatten().collect();
                for i in 0..ws.len() {
                    for j in i + 1..ws.len() {
                        if ws[i].gcd(&ws[j]) != 1 {
                            return Err(Error::Diagram(format!(
                                "weights {} and {} at node {} are not coprime",
                                ws[i], ws[j], v.id
                            )));
                        }
                    }
                }
            } else if weights.iter().any(|w| w.is_some()) {
                return Err(Error::Diagram(format!("vertex {} is not a node but carries a weight", v.id)));
            }
        }
        Ok(())
    }

    fn index(&self, id: usize) -> Result<usize> {
        self.vertices.binary_search_by_key(&id, |v| v.id).map_err(|_| Error::NoVertex(id))
    }

    pub fn vertex(&self, id: usize) -> Result<&Vertex> {
        Ok(&self.vertices[self.index(id)?])
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    fn incident(&self, v: usize) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter().filter(move |e| e.a == v || e.b == v)
    }

    pub fn valence(&self, v: usize) -> usize {
        self.incident(v).count()
    }

    fn is_node(&self, v: &Vertex) -> bool {
        v.kind == VertexKind::Plain && self.valence(v.id) >= 3
    }

    /// Arrowhead ids in increasing order; these index the link components.
    pub fn arrowheads(&self) -> Vec<usize> {
        self.vertices.iter().filter(|v| v.kind == VertexKind::Arrowhead).map(|v| v.id).collect()
    }

    fn sign_of(&self, id: usize) -> i64 {
        self.vertex(id).ok().and_then(|v| v.sign).unwrap_or(1) as i64
    }

    fn path(&self, from: usize, to: usize) -> Vec<usize> {
        // parent pointers from a DFS rooted at `from`
        let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
        let mut stack = vec![from];
        parent.insert(from, from);
        while let Some(v) = stack.pop() {
            if v == to {
                break;
            }
            for e in self.incident(v) {
                let w = e.other(v);
                if let std::collections::btree_map::Entry::Vacant(slot) = parent.entry(w) {
                    slot.insert(v);
                    stack.push(w);
                }
            }
        }
        let mut out = vec![to];
        let mut v = to;
        while v != from {
            v = parent[&v];
            out.push(v);
        }
        out.reverse();
        out
    }

    /// `l_ij`: the product, over nodes v on the path from i to j, of the weights at v
    /// on edges leaving the path.
    pub fn linking_ell(&self, i: usize, j: usize) -> Result<i64> {
        self.index(i)?;
        self.index(j)?;
        if i == j {
            return Err(Error::InvalidParams("linking_ell needs two distinct vertices".into()));
        }
        let path = self.path(i, j);
        let mut prod: i64 = 1;
        for (pos, &v) in path.iter().enumerate() {
            let vert = self.vertex(v)?;
            if !self.is_node(vert) {
                continue;
            }
            let prev = if pos > 0 { Some(path[pos - 1]) } else { None };
            let next = path.get(pos + 1).copied();
            for e in self.incident(v) {
                let w = e.other(v);
                if Some(w) != prev && Some(w) != next {
                    prod = prod
                        .checked_mul(e.weight_at(v).expect("validated node weight"))
                        .ok_or_else(|| Error::Diagram("linking product overflow".into()))?;
                }
            }
        }
        Ok(prod)
    }

    /// `m_i = sum_j l_ij eps_j` for every non-arrowhead vertex, with the fiberability verdict.
    pub fn m_values(&self) -> Result<(BTreeMap<usize, i64>, bool)> {
        let arrows = self.arrowheads();
        let mut m = BTreeMap::new();
        for v in &self.vertices {
            if v.kind == VertexKind::Arrowhead {
                continue;
            }
            let mut s = 0i64;
            for &a in &arrows {
                s += self.linking_ell(v.id, a)? * self.sign_of(a);
            }
            m.insert(v.id, s);
        }
        let fiberable = m.values().all(|&x| x != 0);
        Ok((m, fiberable))
    }

    /// Conway potential by the one-variable Eisenbud-Neumann product.
    pub fn omega_en(&self) -> Result<LaurentPolynomial> {
        let (m, _) = self.m_values()?;
        let sign: i64 = self.arrowheads().iter().map(|&a| self.sign_of(a)).product();
        let mut num = LaurentPolynomial::sym_binomial(1).scale(&BigInt::from(sign));
        let mut den = LaurentPolynomial::one();
        for (&id, &mi) in &m {
            let delta = self.valence(id) as i64;
            if delta == 1 && mi == 0 {
                return Err(Error::EnInapplicable(id));
            }
        }
        for (&id, &mi) in &m {
            let delta = self.valence(id) as i64;
            let f = LaurentPolynomial::sym_binomial(mi);
            if delta >= 3 {
                num = &num * &f.pow((delta - 2) as u32);
            } else {
                den = &den * &f;
            }
        }
        if num.is_zero() {
            return Ok(num);
        }
        num.checked_div(&den).ok_or_else(|| Error::Diagram("EN quotient is not a Laurent polynomial".into()))
    }

    /// Cimasoni's multivariable potential as a formal product of factors.
    pub fn nabla_multivariable(&self) -> Result<FactorProduct> {
        let arrows = self.arrowheads();
        let sign: i64 = arrows.iter().map(|&a| self.sign_of(a)).product();
        let mut raw: Vec<(Vec<i64>, i64)> = Vec::new();
        for v in &self.vertices {
            if v.kind == VertexKind::Arrowhead {
                continue;
            }
            let delta = self.valence(v.id) as i64;
            let exps = arrows
                .iter()
                .map(|&a| Ok(self.linking_ell(v.id, a)? * self.sign_of(a)))
                .collect::<Result<Vec<i64>>>()?;
            raw.push((exps, delta - 2));
        }
        Ok(FactorProduct::new(sign, arrows, raw))
    }

    /// Replaces an arrowhead by a `(dp, dq)`-cable along it.
    pub fn cable(&self, arrowhead: usize, d: u32, p: i64, q: i64, core: Core) -> Result<Self> {
        if p.gcd(&q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        if d == 0 {
            return Err(Error::InvalidParams("cable multiplicity must be positive".into()));
        }
        let av = self.vertex(arrowhead)?.clone();
        if av.kind != VertexKind::Arrowhead {
            return Err(Error::NotArrowhead(arrowhead));
        }
        let eps = av.sign.unwrap_or(1);
        let mut vertices: Vec<Vertex> = self.vertices.clone();
        let mut edges = self.edges.clone();
        let next_id = vertices.iter().map(|v| v.id).max().unwrap_or(0) + 1;
        let node = next_id;
        // the old arrowhead vertex becomes the new node
        for e in edges.iter_mut() {
            if e.a == arrowhead || e.b == arrowhead {
                e.set_weight_at(arrowhead, Some(q));
                if e.a == arrowhead {
                    e.a = node;
                } else {
                    e.b = node;
                }
            }
        }
        vertices.retain(|v| v.id != arrowhead);
        vertices.push(Vertex { id: node, kind: VertexKind::Plain, sign: None });
        let mut fresh = node + 1;
        match core {
            Core::Removed => {
                vertices.push(Vertex { id: fresh, kind: VertexKind::Plain, sign: None });
            }
            Core::Remained => {
                vertices.push(Vertex { id: arrowhead, kind: VertexKind::Arrowhead, sign: Some(eps) });
            }
        }
        let core_id = if core == Core::Removed { fresh } else { arrowhead };
        edges.push(Edge { a: node, b: core_id, weight_at_a: Some(p), weight_at_b: None });
        if core == Core::Removed {
            fresh += 1;
        }
        for _ in 0..d {
            vertices.push(Vertex { id: fresh, kind: VertexKind::Arrowhead, sign: Some(eps) });
            edges.push(Edge { a: node, b: fresh, weight_at_a: Some(1), weight_at_b: None });
            fresh += 1;
        }
        Self::new(vertices, edges)
    }

    /// Reverses the orientation of one component.
    pub fn reverse(&self, arrowhead: usize) -> Result<Self> {
        let mut out = self.clone();
        let i = out.index(arrowhead)?;
        if out.vertices[i].kind != VertexKind::Arrowhead {
            return Err(Error::NotArrowhead(arrowhead));
        }
        out.vertices[i].sign = out.vertices[i].sign.map(|s| -s);
        Ok(out)
    }

    /// The arrowhead most recently attached at `node` other than `core`, for builders.
    fn newest_arrow_at(&self, node: usize, core: usize) -> usize {
        self.incident(node)
            .map(|e| e.other(node))
            .filter(|&w| w != core && self.vertex(w).map(|v| v.kind == VertexKind::Arrowhead).unwrap_or(false))
            .max()
            .expect("cable produced an arrowhead")
    }

    fn node_of(&self, arrow: usize) -> usize {
        self.incident(arrow).next().map(|e| e.other(arrow)).expect("arrowhead has a neighbour")
    }

    pub fn unknot() -> Self {
        Self::new(
            vec![
                Vertex { id: 0, kind: VertexKind::Plain, sign: None },
                Vertex { id: 1, kind: VertexKind::Arrowhead, sign: Some(1) },
            ],
            vec![Edge { a: 0, b: 1, weight_at_a: None, weight_at_b: None }],
        )
        .expect("unknot diagram")
    }
}

/// Whether the core survives a cabling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Core {
    Removed,
    Remained,
}

/// `eps_1...eps_n * prod (t^v - t^-v)^power` over exponent vectors `v`, kept formal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorProduct {
    pub sign: i64,
    /// Arrowhead ids, in the order of the exponent-vector coordinates.
    pub variables: Vec<usize>,
    /// Normalized factors: the first nonzero coordinate of each vector is positive,
    /// equal vectors are merged, and the zero vector never appears.
    pub factors: Vec<(Vec<i64>, i64)>,
    /// Net power of the formal factor `t^0 - t^0` left after cancellation.
    pub zero_power: i64,
}

impl FactorProduct {
    fn new(sign: i64, variables: Vec<usize>, raw: Vec<(Vec<i64>, i64)>) -> Self {
        let mut sign = sign;
        let mut merged: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        let mut zero_power = 0i64;
        for (mut v, pw) in raw {
            if pw == 0 {
                continue;
            }
            match v.iter().find(|&&x| x != 0) {
                None => zero_power += pw,
                Some(&first) => {
                    if first < 0 {
                        v.iter_mut().for_each(|x| *x = -*x);
                        if pw % 2 != 0 {
                            sign = -sign;
                        }
                    }
                    *merged.entry(v).or_insert(0) += pw;
                }
            }
        }
        let factors = merged.into_iter().filter(|(_, p)| *p != 0).collect();
        Self { sign, variables, factors, zero_power }
    }

    /// True when the product vanishes identically (a surviving zero factor in the numerator).
    pub fn is_zero(&self) -> bool {
        self.zero_power > 0
    }

    /// `Omega(t) = (t - t^-1) * nabla(t, ..., t)`.
    ///
    /// Factors whose exponents sum to zero vanish on the diagonal; their ratio is
    /// taken as the limit along `t_j = t * x^(c_j)` for a generic integer vector c.
    pub fn omega(&self) -> Result<LaurentPolynomial> {
        if self.zero_power < 0 {
            return Err(Error::Diagram("uncancelled zero factor in a denominator".into()));
        }
        if self.zero_power > 0 {
            return Ok(LaurentPolynomial::zero());
        }
        let bound: i64 = self.factors.iter().flat_map(|(v, _)| v.iter()).map(|x| x.abs()).max().unwrap_or(0);
        let base = BigInt::from(2 * bound + 1);
        let dirs: Vec<BigInt> = (0..self.variables.len()).map(|j| num_traits::pow(base.clone(), j)).collect();
        let mut vanishing = 0i64;
        let mut ratio = BigRational::one();
        let mut num = LaurentPolynomial::sym_binomial(1).scale(&BigInt::from(self.sign));
        let mut den = LaurentPolynomial::one();
        for (v, pw) in &self.factors {
            let s: i64 = v.iter().sum();
            if s == 0 {
                let c: BigInt = v.iter().zip(&dirs).map(|(x, d)| BigInt::from(*x) * d).sum();
                let c = BigRational::from_integer(c);
                vanishing += pw;
                ratio *= if *pw > 0 { num_traits::pow(c, *pw as usize) } else { num_traits::pow(c.recip(), (-pw) as usize) };
            } else {
                let f = LaurentPolynomial::sym_binomial(s).pow(pw.unsigned_abs() as u32);
                if *pw > 0 {
                    num = &num * &f;
                } else {
                    den = &den * &f;
                }
            }
        }
        if vanishing > 0 {
            return Ok(LaurentPolynomial::zero());
        }
        if vanishing < 0 {
            return Err(Error::Diagram("potential has a pole on the diagonal".into()));
        }
        if !ratio.is_integer() {
            // keep exact: fold the denominator of the ratio into the polynomial division
            num = num.scale(ratio.numer());
            den = den.scale(ratio.denom());
        } else {
            num = num.scale(&ratio.to_integer());
        }
        num.checked_div(&den).ok_or_else(|| Error::Diagram("diagonal specialization is not a Laurent polynomial".into()))
    }
}

impl fmt::Display for FactorProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "{}", if self.sign < 0 { "-" } else { "" })?;
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(v, p)| {
                let mono: Vec<String> = v
                    .iter()
                    .zip(&self.variables)
                    .filter(|(x, _)| **x != 0)
                    .map(|(x, a)| format!("t{a}^{x}"))
                    .collect();
                let m = mono.join("*");
                format!("({m} - 1/({m}))^{p}")
            })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// Diagrams with a fixed canonical shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedDiagram {
    /// Closure of Delta^n in B_{2k+1}.
    TorusDelta { n: u32, k: u32 },
    /// Closure of b^J_{n,k}(1,...,1).
    BFamily { n: u32, k: u32, j: u32 },
    /// Closure of c^J_{n,k}(1,...,1), k >= 2.
    CFamily { n: u32, k: u32, j: u32 },
    /// Closure of b^2_{n,k}(1,0), n even.
    BFamily10 { n: u32, k: u32 },
    /// The (2,q)-cable of an axis together with components winding p_j times around it.
    AxisCable { q: i64, p: Vec<i64> },
    /// The (dp, dq) torus link.
    Torus { d: u32, p: i64, q: i64 },
    /// The (2,2p) torus link with one component reversed: a node with a leaf of weight p.
    ReversedTorus { p: i64 },
}

fn cable_with_pairs(d: &SpliceDiagram, core: usize, pairs: u32, n: u32) -> Result<SpliceDiagram> {
    if pairs == 0 {
        return Ok(d.clone());
    }
    if n % 2 == 1 {
        d.cable(core, pairs, 2, n as i64, Core::Remained)
    } else {
        d.cable(core, 2 * pairs, 1, (n / 2) as i64, Core::Remained)
    }
}

/// Adds a `(1, s)` cable around `core`, returning the diagram and the new component.
fn cable_once(d: &SpliceDiagram, core: usize, s: i64) -> Result<(SpliceDiagram, usize)> {
    let out = d.cable(core, 1, 1, s, Core::Remained)?;
    let node = out.node_of(core);
    let fresh = out.newest_arrow_at(node, core);
    Ok((out, fresh))
}

pub fn build_named(which: &NamedDiagram) -> Result<SpliceDiagram> {
    let unknot = SpliceDiagram::unknot();
    let k_arrow = 1usize;
    match which {
        NamedDiagram::TorusDelta { n, k } => {
            if *n == 0 || *k == 0 {
                return Err(Error::InvalidParams("n and k must be positive".into()));
            }
            cable_with_pairs(&unknot, k_arrow, *k, *n)
        }
        NamedDiagram::BFamily { n, k, j } => {
            check_family(*n, *k, *j, 1)?;
            let d = cable_with_pairs(&unknot, k_arrow, k - 1, *n)?;
            let s1 = (*n as i64 - *j as i64) / 2;
            let s2 = (*n as i64 + *j as i64) / 2;
            let (d, c1) = cable_once(&d, k_arrow, s1)?;
            let (d, _) = cable_once(&d, c1, s2)?;
            Ok(d)
        }
        NamedDiagram::CFamily { n, k, j } => {
            check_family(*n, *k, *j, 2)?;
            let d = cable_with_pairs(&unknot, k_arrow, k - 2, *n)?;
            let s1 = (*n as i64 - *j as i64) / 2;
            let s2 = (*n as i64 + *j as i64) / 2;
            let (d, c1) = cable_once(&d, k_arrow, s1)?;
            let (d, _) = cable_once(&d, c1, s2)?;
            cable_with_pairs(&d, c1, 1, *n)
        }
        NamedDiagram::BFamily10 { n, k } => {
            if *n == 0 || n % 2 != 0 || *k == 0 {
                return Err(Error::InvalidParams("b^2(1,0) needs n even and positive, k positive".into()));
            }
            let d = unknot.cable(k_arrow, 2 * k - 1, 1, (*n / 2) as i64, Core::Remained)?;
            d.cable(k_arrow, 1, 2, *n as i64 - 1, Core::Removed)
        }
        NamedDiagram::AxisCable { q, p } => axis_cable(*q, p),
        NamedDiagram::Torus { d, p, q } => unknot.cable(k_arrow, *d, *p, *q, Core::Removed),
        NamedDiagram::ReversedTorus { p } => SpliceDiagram::new(
            vec![
                Vertex { id: 0, kind: VertexKind::Plain, sign: None },
                Vertex { id: 1, kind: VertexKind::Plain, sign: None },
                Vertex { id: 2, kind: VertexKind::Arrowhead, sign: Some(1) },
                Vertex { id: 3, kind: VertexKind::Arrowhead, sign: Some(-1) },
            ],
            vec![
                Edge { a: 0, b: 1, weight_at_a: Some(*p), weight_at_b: None },
                Edge { a: 0, b: 2, weight_at_a: Some(1), weight_at_b: None },
                Edge { a: 0, b: 3, weight_at_a: Some(1), weight_at_b: None },
            ],
        ),
    }
}

fn check_family(n: u32, k: u32, j: u32, kmin: u32) -> Result<()> {
    if n == 0 || j == 0 || k < kmin {
        return Err(Error::InvalidParams(format!("need n, J >= 1 and k >= {kmin}")));
    }
    if (n + j) % 2 != 0 {
        return Err(Error::Parity { n, j: j as usize });
    }
    Ok(())
}

fn axis_cable(q: i64, p: &[i64]) -> Result<SpliceDiagram> {
    if p.is_empty() {
        return Err(Error::InvalidParams("at least one winding component is required".into()));
    }
    if p.iter().any(|&x| x == 0) {
        return Err(Error::InvalidParams("a component with p_j = 0 splits off".into()));
    }
    // keychain: axis S with meridians M_1..M_n
    let n = p.len();
    let s_id = 0usize;
    let mut vertices = vec![Vertex { id: s_id, kind: VertexKind::Arrowhead, sign: Some(1) }];
    let mut edges = Vec::new();
    if n == 1 {
        vertices.push(Vertex { id: 1, kind: VertexKind::Arrowhead, sign: Some(1) });
        edges.push(Edge { a: s_id, b: 1, weight_at_a: None, weight_at_b: None });
    } else {
        let u = n + 1;
        vertices.push(Vertex { id: u, kind: VertexKind::Plain, sign: None });
        edges.push(Edge { a: u, b: s_id, weight_at_a: Some(0), weight_at_b: None });
        for j in 1..=n {
            vertices.push(Vertex { id: j, kind: VertexKind::Arrowhead, sign: Some(1) });
            edges.push(Edge { a: u, b: j, weight_at_a: Some(1), weight_at_b: None });
        }
    }
    let mut d = SpliceDiagram::new(vertices, edges)?;
    for (j, &pj) in p.iter().enumerate() {
        d = d.cable(j + 1, 1, pj, 1, Core::Removed)?;
    }
    if q % 2 != 0 {
        d.cable(s_id, 1, 2, q, Core::Removed)
    } else {
        d.cable(s_id, 2, 1, q / 2, Core::Removed)
    }
}

/// Determinant of the axis-cable link through the crossing-change recursion in q:
/// `det L_{q+1} - det L_{q-1} = 2i det L_q`, used when the EN product degenerates.
pub fn axis_cable_det_by_skein(q: i64, p: &[i64]) -> Result<crate::algebra::GaussianInteger> {
    use crate::algebra::GaussianInteger;
    let eval = |qq: i64| -> Result<Option<GaussianInteger>> {
        match build_named(&NamedDiagram::AxisCable { q: qq, p: p.to_vec() })?.omega_en() {
            Ok(o) => Ok(Some(o.eval_at_i())),
            Err(Error::EnInapplicable(_)) => Ok(None),
            Err(e) => Err(e),
        }
    };
    if let Some(d) = eval(q)? {
        return Ok(d);
    }
    let plus = eval(q + 1)?.ok_or_else(|| Error::Diagram("neighbouring link also degenerate".into()))?;
    let minus = eval(q - 1)?.ok_or_else(|| Error::Diagram("neighbouring link also degenerate".into()))?;
    (&plus - &minus)
        .checked_div(&GaussianInteger::new(0, 2))
        .ok_or_else(|| Error::Diagram("skein quotient is not a Gaussian integer".into()))
}
