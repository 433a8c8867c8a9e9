//! Clique census over irreducible triangulations of a surface, and the
//! explicit asymptotic bounds on the maximum clique counts.
//!
//! For `s ∈ {3, 4}` the maximum over `n`-vertex graphs on a surface is a
//! linear form `a·n + b` whose offset is the largest excess of an
//! irreducible triangulation; for `s ≥ 5` it is the largest count found on
//! the list. Completeness of the list is the caller's assertion.

use std::fmt::{self, Write as _};

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::Serialize;

use crate::counting::count_cliques;
use crate::embedding::EmbeddedGraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Excess {
    pub phi: i64,
    /// Indices into the input list attaining `phi`.
    pub argmax: Vec<usize>,
}

fn excess_of(counts: &[BigUint], n: usize, s: usize) -> i64 {
    let c = i64::try_from(counts[s].clone()).expect("clique counts of irreducible triangulations are small");
    match s {
        3 => c - 3 * n as i64,
        4 => c - n as i64,
        _ => unreachable!(),
    }
}

/// Clique counts `C(K_s)` for `s = 0..=max` of every list member.
fn clique_profiles(list: &[EmbeddedGraph]) -> Vec<Vec<BigUint>> {
    list.par_iter()
        .map(|e| {
            let g = e.graph();
            let mut out = Vec::new();
            for s in 0.. {
                let c = count_cliques(&g, s);
                if s > 0 && c == BigUint::ZERO {
                    break;
                }
                out.push(c);
            }
            out
        })
        .collect()
}

fn common_genus(list: &[EmbeddedGraph]) -> Result<usize> {
    let first = list
        .first()
        .ok_or_else(|| Error::pre("triangulation list is empty"))?;
    let g = first.euler_genus()?;
    for (i, e) in list.iter().enumerate().skip(1) {
        let h = e.euler_genus()?;
        if h != g {
            return Err(Error::pre(format!(
                "mixed genera: list member 0 has genus {g}, member {i} has genus {h}"
            )));
        }
    }
    Ok(g)
}

/// Maximum excess `C(K₃) − 3n` (s = 3) or `C(K₄) − n` (s = 4) over the list.
pub fn max_excess(list: &[EmbeddedGraph], s: usize) -> Result<Excess> {
    if s != 3 && s != 4 {
        return Err(Error::pre(format!("excess is defined for s = 3 or 4, not {s}")));
    }
    common_genus(list)?;
    let profiles = clique_profiles(list);
    Ok(excess_from(list, &profiles, s))
}

fn excess_from(list: &[EmbeddedGraph], profiles: &[Vec<BigUint>], s: usize) -> Excess {
    let values: Vec<i64> = list
        .iter()
        .zip(profiles)
        .map(|(e, p)| {
            if p.len() > s {
                excess_of(p, e.n(), s)
            } else {
                -((if s == 3 { 3 } else { 1 }) * e.n() as i64)
            }
        })
        .collect();
    let phi = *values.iter().max().expect("non-empty");
    Excess {
        phi,
        argmax: (0..values.len()).filter(|&i| values[i] == phi).collect(),
    }
}

/// A validated census input: triangulations of one surface, each checked to
/// be a triangulation of the declared genus with no contractible edge.
#[derive(Debug, Clone)]
pub struct CensusInput {
    pub surface: String,
    pub genus: usize,
    pub list: Vec<EmbeddedGraph>,
    pub complete: bool,
}

impl CensusInput {
    pub fn new(surface: impl Into<String>, genus: usize, list: Vec<EmbeddedGraph>, complete: bool) -> Result<Self> {
        if list.is_empty() {
            return Err(Error::pre("triangulation list is empty"));
        }
        for (i, e) in list.iter().enumerate() {
            if !e.is_triangulation() {
                return Err(Error::pre(format!("list member {i} is not a triangulation")));
            }
            let g = e.euler_genus()?;
            if g != genus {
                return Err(Error::pre(format!(
                    "list member {i} has Euler genus {g}, declared {genus}"
                )));
            }
            if !e.is_irreducible()? {
                return Err(Error::pre(format!("list member {i} is reducible")));
            }
        }
        Ok(CensusInput {
            surface: surface.into(),
            genus,
            list,
            complete,
        })
    }

    /// The sphere, whose only irreducible triangulation is K₄.
    pub fn sphere() -> Self {
        Self::new("sphere", 0, vec![EmbeddedGraph::tetrahedron()], true).expect("K4 is valid")
    }

    /// The projective plane with its two irreducible triangulations.
    pub fn projective_plane() -> Self {
        Self::new(
            "N1",
            1,
            vec![
                EmbeddedGraph::k6_projective(),
                EmbeddedGraph::k7_minus_triangle_projective(),
            ],
            true,
        )
        .expect("bundled triangulations are valid")
    }
}

/// `a·n + b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Linear {
    pub a: i64,
    pub b: i64,
}

impl Linear {
    pub fn at(&self, n: usize) -> i64 {
        self.a * n as i64 + self.b
    }
}

impl fmt::Display for Linear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.a {
            0 => return write!(f, "{}", self.b),
            1 => write!(f, "n")?,
            a => write!(f, "{a}n")?,
        }
        match self.b {
            0 => Ok(()),
            b if b > 0 => write!(f, "+{b}"),
            b => write!(f, "-{}", -b),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Entry {
    Constant(u64),
    Linear(Linear),
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Constant(c) => write!(f, "{c}"),
            Entry::Linear(l) => write!(f, "{l}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceCensus {
    pub surface: String,
    pub genus: usize,
    /// False when the list is not asserted complete: entries are then lower bounds.
    pub complete: bool,
    /// `entries[s]` is the maximum number of copies of `K_s`.
    pub entries: Vec<Entry>,
    pub phi3: i64,
    pub phi4: i64,
    /// Smallest `n` at which the s = 3 and s = 4 forms are attained.
    pub threshold3: usize,
    pub threshold4: usize,
    pub total: Linear,
}

fn threshold(list: &[EmbeddedGraph], ex: &Excess) -> usize {
    ex.argmax.iter().map(|&i| list[i].n()).min().expect("non-empty argmax")
}

/// The census row for a surface.
pub fn surface_table(input: &CensusInput) -> SurfaceCensus {
    let list = &input.list;
    let g = input.genus as i64;
    let profiles = clique_profiles(list);
    let e3 = excess_from(list, &profiles, 3);
    let e4 = excess_from(list, &profiles, 4);
    let mut entries = vec![
        Entry::Constant(1),
        Entry::Linear(Linear { a: 1, b: 0 }),
        Entry::Linear(Linear { a: 3, b: 3 * (g - 2) }),
        Entry::Linear(Linear { a: 3, b: e3.phi }),
        Entry::Linear(Linear { a: 1, b: e4.phi }),
    ];
    let top = profiles.iter().map(Vec::len).max().unwrap_or(0);
    for s in 5..top {
        let best = profiles
            .iter()
            .filter_map(|p| p.get(s))
            .max()
            .map(|c| u64::try_from(c).expect("small constant"))
            .unwrap_or_default();
        entries.push(Entry::Constant(best));
    }
    let mut total = Linear { a: 0, b: 0 };
    for e in &entries {
        match e {
            Entry::Linear(l) => {
                total.a += l.a;
                total.b += l.b;
            }
            Entry::Constant(c) => {
                total.b += *c as i64;
            }
        }
    }
    SurfaceCensus {
        surface: input.surface.clone(),
        genus: input.genus,
        complete: input.complete,
        entries,
        phi3: e3.phi,
        phi4: e4.phi,
        threshold3: threshold(list, &e3),
        threshold4: threshold(list, &e4),
        total,
    }
}

impl SurfaceCensus {
    /// Maximum number of copies of `K_s` in an `n`-vertex graph on the surface.
    pub fn extremal_count(&self, s: usize, n: usize) -> Result<BigInt> {
        let need = match s {
            3 => self.threshold3,
            4 => self.threshold4,
            _ => 0,
        };
        if n < need {
            return Err(Error::pre(format!(
                "the s = {s} form is attained only from n = {need}, got n = {n}"
            )));
        }
        Ok(match self.entries.get(s) {
            Some(Entry::Constant(c)) => BigInt::from(*c),
            Some(Entry::Linear(l)) => BigInt::from(l.at(n)),
            None => BigInt::ZERO,
        })
    }

    /// Aligned text row under a header, one column per `s` plus the total.
    pub fn render(&self) -> String {
        let mut head = vec!["surface".to_string()];
        let mut row = vec![self.surface.clone()];
        for (s, e) in self.entries.iter().enumerate() {
            head.push(format!("s={s}"));
            row.push(e.to_string());
        }
        head.push("total".into());
        row.push(self.total.to_string());
        let widths: Vec<usize> = head.iter().zip(&row).map(|(a, b)| a.len().max(b.len())).collect();
        let line = |cells: &[String]| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        let mut out = String::new();
        let _ = writeln!(out, "{}", line(&head));
        let _ = writeln!(out, "{}", line(&row));
        let _ = writeln!(
            out,
            "genus={} phi3={} phi4={} attained from n={} (s=3), n={} (s=4)",
            self.genus, self.phi3, self.phi4, self.threshold3, self.threshold4
        );
        if !self.complete {
            out.push_str("list not asserted complete: entries are lower bounds\n");
        }
        out
    }
}

/// Explicit bounds on the maximum number of copies of `K_s` in an
/// `n`-vertex graph of Euler genus `g`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bounds {
    pub lower: f64,
    pub upper: f64,
    /// Whether `lower` is a proven finite bound at these parameters. The
    /// s = 3 lower constant is asymptotic and overshoots the projective
    /// plane value 3n + 2 at g = 1, so it is flagged below g = 4.
    pub lower_valid: bool,
}

pub fn bounds(g: usize, s: usize, n: usize) -> Result<Bounds> {
    let gf = g as f64;
    let nf = n as f64;
    let g_log = if g == 0 { 0.0 } else { gf * (13.0 * gf).ln() };
    let out = match s {
        3 => Bounds {
            lower: 3.0 * nf + 6f64.sqrt() * gf.powf(1.5),
            upper: 3.0 * nf + 10.5 * gf.powf(1.5) + 270.0 * gf + 36.0 * g_log,
            lower_valid: g >= 4,
        },
        4 => Bounds {
            lower: nf + 1.5 * gf * gf,
            upper: nf
                + 283.0 / 24.0 * gf * gf
                + 27.0 * gf.powf(1.5)
                + 108.0 * (g_log + gf)
                + 468.0 * gf,
            lower_valid: g >= 1,
        },
        s if s >= 5 => {
            let root = (6.0 * gf).sqrt();
            if nf < root {
                return Err(Error::pre(format!("n = {n} is below sqrt(6g) = {root:.3}")));
            }
            let sf = s as f64;
            Bounds {
                lower: (root / sf).powi(s as i32),
                upper: (300.0 * gf.sqrt() / sf).powi(s as i32),
                lower_valid: g >= 1 && root >= sf,
            }
        }
        _ => return Err(Error::pre(format!("bounds are given for s >= 3, not {s}"))),
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(a: i64, b: i64) -> Entry {
        Entry::Linear(Linear { a, b })
    }

    fn c(v: u64) -> Entry {
        Entry::Constant(v)
    }

    #[test]
    fn excess_examples() {
        let k4 = [EmbeddedGraph::tetrahedron()];
        assert_eq!(max_excess(&k4, 3).unwrap().phi, -8);
        assert_eq!(max_excess(&k4, 4).unwrap().phi, -3);
        let n1 = CensusInput::projective_plane().list;
        let e = max_excess(&n1, 3).unwrap();
        assert_eq!(e.phi, 2);
        assert_eq!(e.argmax, [0]);
        assert!(max_excess(&[], 3).is_err());
        let mixed = [EmbeddedGraph::tetrahedron(), EmbeddedGraph::k6_projective()];
        assert!(max_excess(&mixed, 3).is_err());
    }

    #[test]
    fn sphere_row() {
        let t = surface_table(&CensusInput::sphere());
        assert_eq!(t.entries, [c(1), lin(1, 0), lin(3, -6), lin(3, -8), lin(1, -3)]);
        assert_eq!(t.total, Linear { a: 8, b: -16 });
        assert_eq!(t.extremal_count(3, 10).unwrap(), 22.into());
    }

    #[test]
    fn projective_row() {
        let t = surface_table(&CensusInput::projective_plane());
        assert_eq!(
            t.entries,
            [c(1), lin(1, 0), lin(3, -3), lin(3, 2), lin(1, 9), c(6), c(1)]
        );
        assert_eq!(t.total, Linear { a: 8, b: 16 });
        assert_eq!(t.extremal_count(5, 40).unwrap(), 6.into());
        assert_eq!(t.extremal_count(6, 40).unwrap(), 1.into());
        assert_eq!(t.threshold3, 6);
        assert!(t.extremal_count(3, 5).is_err());
    }

    #[test]
    fn render_layout() {
        let text = surface_table(&CensusInput::sphere()).render();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "surface  s=0  s=1  s=2   s=3   s=4  total");
        assert_eq!(lines.next().unwrap(), "sphere   1    n    3n-6  3n-8  n-3  8n-16");
    }

    #[test]
    fn census_input_validation() {
        let oct = EmbeddedGraph::tetrahedron().split_triangle(0, 1, 2).unwrap();
        assert!(CensusInput::new("sphere", 0, vec![oct], true).is_err());
        assert!(CensusInput::new("x", 1, vec![EmbeddedGraph::tetrahedron()], true).is_err());
    }

    #[test]
    fn bound_examples() {
        let b = bounds(1, 3, 100).unwrap();
        assert!((b.lower - (300.0 + 6f64.sqrt())).abs() < 1e-9);
        assert!((b.upper - (300.0 + 10.5 + 270.0 + 36.0 * 13f64.ln())).abs() < 1e-9);
        assert!(!b.lower_valid);
        let b = bounds(1, 5, 10).unwrap();
        assert!((b.lower - (6f64.sqrt() / 5.0).powi(5)).abs() < 1e-12);
        assert!((b.upper - 60f64.powi(5)).abs() < 1e-3);
        assert!(bounds(1, 2, 10).is_err());
        assert!(bounds(100, 5, 3).is_err());
    }
}
