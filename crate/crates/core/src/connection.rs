//! Linear connections on a chart with polynomial Christoffel symbols.
//!
//! `Γ^c_{ab}` is stored with the upper index first. The covariant derivative
//! of a form puts the differentiating direction in the leading slot:
//! `(∇a)_{b; a₁…a_k} = ∂_b a_{a₁…a_k} − Σ_j Γ^c_{b a_j} a_{a₁…c…a_k}`.
//! Connections may have torsion.

use std::fmt;

use crate::exterior::sort_with_sign;
use crate::polyforms::{parse_poly, Chart, Poly, PolyError, PolyForm};

/// Components of a tensor on a chart, upper indices first, then lower, in
/// row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorField {
    chart: Chart,
    upper: usize,
    lower: usize,
    components: Vec<Poly>,
}

impl TensorField {
    pub fn zero(chart: &Chart, upper: usize, lower: usize) -> Self {
        let n = chart.dim();
        let len = n.pow((upper + lower) as u32);
        TensorField {
            chart: chart.clone(),
            upper,
            lower,
            components: vec![Poly::zero(n); len],
        }
    }

    fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.upper + self.lower, "tensor index count");
        let n = self.chart.dim();
        idx.iter().fold(0, |acc, &i| {
            assert!(i < n, "tensor index out of range");
            acc * n + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &Poly {
        &self.components[self.offset(idx)]
    }

    fn set(&mut self, idx: &[usize], value: Poly) {
        let o = self.offset(idx);
        self.components[o] = value;
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn upper(&self) -> usize {
        self.upper
    }

    pub fn lower(&self) -> usize {
        self.lower
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    /// Nonzero components with their index tuples.
    pub fn nonzero(&self) -> Vec<(Vec<usize>, &Poly)> {
        let n = self.chart.dim();
        let rank = self.upper + self.lower;
        self.components
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mut o, c)| {
                let mut idx = vec![0; rank];
                for slot in idx.iter_mut().rev() {
                    *slot = o % n;
                    o /= n;
                }
                (idx, c)
            })
            .collect()
    }
}

impl fmt::Display for TensorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.chart.names();
        let entries = self.nonzero();
        if entries.is_empty() {
            return write!(f, "0");
        }
        let lines: Vec<String> = entries
            .iter()
            .map(|(idx, c)| {
                let up: Vec<&str> = idx[..self.upper]
                    .iter()
                    .map(|&i| names[i].as_str())
                    .collect();
                let low: Vec<&str> = idx[self.upper..]
                    .iter()
                    .map(|&i| names[i].as_str())
                    .collect();
                format!(
                    "[{}|{}] = {}",
                    up.join(" "),
                    low.join(" "),
                    c.display_with(names)
                )
            })
            .collect();
        write!(f, "{}", lines.join("; "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    christoffel: TensorField,
}

/// One Christoffel symbol in text form: `Γ^upper_{lower[0] lower[1]} = value`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChristoffelEntry {
    pub upper: String,
    pub lower: [String; 2],
    pub value: String,
}

impl Connection {
    /// All Christoffel symbols zero.
    pub fn flat(chart: &Chart) -> Self {
        Connection {
            christoffel: TensorField::zero(chart, 1, 2),
        }
    }

    /// From named entries; absent entries are zero, repeated entries add.
    pub fn from_entries(chart: &Chart, entries: &[ChristoffelEntry]) -> Result<Self, PolyError> {
        let mut conn = Connection::flat(chart);
        let idx = |name: &str| {
            chart
                .index(name)
                .ok_or_else(|| PolyError::BadChart(format!("unknown coordinate `{name}`")))
        };
        for e in entries {
            let key = [idx(&e.upper)?, idx(&e.lower[0])?, idx(&e.lower[1])?];
            let value = parse_poly(chart, &e.value)?;
            let sum = conn.christoffel.get(&key).add(&value);
            conn.christoffel.set(&key, sum);
        }
        Ok(conn)
    }

    pub fn set(&mut self, c: usize, a: usize, b: usize, value: Poly) {
        self.christoffel.set(&[c, a, b], value);
    }

    /// `Γ^c_{ab}`.
    pub fn gamma(&self, c: usize, a: usize, b: usize) -> &Poly {
        self.christoffel.get(&[c, a, b])
    }

    pub fn chart(&self) -> &Chart {
        &self.christoffel.chart
    }

    pub fn christoffel(&self) -> &TensorField {
        &self.christoffel
    }

    fn n(&self) -> usize {
        self.chart().dim()
    }
}

/// All index tuples of length `k` over `0..n`.
fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| (0..n).map(move |i| [t.clone(), vec![i]].concat()))
            .collect();
    }
    out
}

/// Component `a_{i₁…i_k}` of a form for any index order.
fn component(a: &PolyForm, idx: &[usize]) -> Poly {
    let mut sorted = idx.to_vec();
    match sort_with_sign(&mut sorted) {
        None => Poly::zero(a.chart().dim()),
        Some(neg) => {
            let c = a.coefficient(&sorted);
            if neg {
                c.neg()
            } else {
                c
            }
        }
    }
}

/// `∇a` as a covariant tensor of rank `k+1`, differentiating slot first.
pub fn covariant_derivative_form(
    conn: &Connection,
    a: &PolyForm,
) -> Result<TensorField, PolyError> {
    conn.chart().same(a.chart())?;
    let n = conn.n();
    let k = a.degree();
    let mut out = TensorField::zero(conn.chart(), 0, k + 1);
    for idx in tuples(n, k + 1) {
        let (b, rest) = (idx[0], &idx[1..]);
        let mut value = component(a, rest).derivative(b);
        for j in 0..k {
            for c in 0..n {
                let g = conn.gamma(c, b, rest[j]);
                if g.is_zero() {
                    continue;
                }
                let mut swapped = rest.to_vec();
                swapped[j] = c;
                value = value.sub(&g.mul(&component(a, &swapped)));
            }
        }
        out.set(&idx, value);
    }
    Ok(out)
}

pub fn is_parallel(conn: &Connection, a: &PolyForm) -> Result<bool, PolyError> {
    Ok(covariant_derivative_form(conn, a)?.is_zero())
}

/// `T^c_{ab} = Γ^c_{ab} − Γ^c_{ba}`.
pub fn torsion(conn: &Connection) -> TensorField {
    let n = conn.n();
    let mut t = TensorField::zero(conn.chart(), 1, 2);
    for idx in tuples(n, 3) {
        let (c, a, b) = (idx[0], idx[1], idx[2]);
        t.set(&idx, conn.gamma(c, a, b).sub(conn.gamma(c, b, a)));
    }
    t
}

/// `R^d_{cab} = ∂_a Γ^d_{bc} − ∂_b Γ^d_{ac} + Γ^d_{ae} Γ^e_{bc} − Γ^d_{be} Γ^e_{ac}`.
pub fn curvature(conn: &Connection) -> TensorField {
    let n = conn.n();
    let mut r = TensorField::zero(conn.chart(), 1, 3);
    for idx in tuples(n, 4) {
        let (d, c, a, b) = (idx[0], idx[1], idx[2], idx[3]);
        let mut value = conn
            .gamma(d, b, c)
            .derivative(a)
            .sub(&conn.gamma(d, a, c).derivative(b));
        for e in 0..n {
            value = value
                .add(&conn.gamma(d, a, e).mul(conn.gamma(e, b, c)))
                .sub(&conn.gamma(d, b, e).mul(conn.gamma(e, a, c)));
        }
        r.set(&idx, value);
    }
    r
}

pub fn is_flat(conn: &Connection) -> bool {
    curvature(conn).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyforms::parse_form;

    fn chart(names: &[&str]) -> Chart {
        Chart::new(names.iter().copied()).unwrap()
    }

    fn contact() -> (Chart, Connection) {
        let c = chart(&["t", "x", "p"]);
        let entry = ChristoffelEntry {
            upper: "t".into(),
            lower: ["p".into(), "x".into()],
            value: "-1".into(),
        };
        let conn = Connection::from_entries(&c, &[entry]).unwrap();
        (c, conn)
    }

    #[test]
    fn parallel_forms() {
        let qp = chart(&["q", "p"]);
        let flat = Connection::flat(&qp);
        assert!(is_parallel(&flat, &parse_form(&qp, "dq∧dp").unwrap()).unwrap());
        let pw = parse_form(&qp, "p*dq∧dp").unwrap();
        let nabla = covariant_derivative_form(&flat, &pw).unwrap();
        // (∇a)_{p; q p} = ∂_p p = 1
        assert_eq!(
            nabla.get(&[1, 0, 1]).as_constant(),
            Some(crate::linalg::int(1))
        );
        assert!(!is_parallel(&flat, &pw).unwrap());

        let (c, conn) = contact();
        let eta = parse_form(&c, "dt - p*dx").unwrap();
        assert!(is_parallel(&conn, &eta).unwrap());
        assert!(!eta.is_closed());
    }

    #[test]
    fn torsion_examples() {
        let (c, conn) = contact();
        let t = torsion(&conn);
        let (ti, xi, pi) = (0, 1, 2);
        assert_eq!(
            t.get(&[ti, xi, pi]).as_constant(),
            Some(crate::linalg::int(1))
        );
        assert_eq!(
            t.get(&[ti, pi, xi]).as_constant(),
            Some(crate::linalg::int(-1))
        );
        assert_eq!(t.nonzero().len(), 2);
        assert!(torsion(&Connection::flat(&c)).is_zero());

        let mut sym = Connection::flat(&c);
        let x = c.var("x").unwrap();
        sym.set(0, 1, 2, x.clone());
        sym.set(0, 2, 1, x);
        assert!(torsion(&sym).is_zero());
    }

    #[test]
    fn curvature_examples() {
        let (c, conn) = contact();
        assert!(is_flat(&conn));
        assert!(is_flat(&Connection::flat(&c)));

        let xy = chart(&["x", "y"]);
        let mut conn = Connection::flat(&xy);
        conn.set(0, 0, 0, xy.var("y").unwrap());
        let r = curvature(&conn);
        assert!(!is_flat(&conn));
        // R^x_{x y x} = ∂_y Γ^x_{xx} = 1, and its antisymmetric partner.
        let nz = r.nonzero();
        assert_eq!(nz.len(), 2);
        assert_eq!(
            r.get(&[0, 0, 1, 0]).as_constant(),
            Some(crate::linalg::int(1))
        );
        assert_eq!(
            r.get(&[0, 0, 0, 1]).as_constant(),
            Some(crate::linalg::int(-1))
        );
    }

    #[test]
    fn display_and_errors() {
        let (_, conn) = contact();
        assert_eq!(torsion(&conn).to_string(), "[t|x p] = 1; [t|p x] = -1");
        let c = chart(&["a"]);
        let bad = ChristoffelEntry {
            upper: "z".into(),
            lower: ["a".into(), "a".into()],
            value: "1".into(),
        };
        assert!(Connection::from_entries(&c, &[bad]).is_err());
    }
}
