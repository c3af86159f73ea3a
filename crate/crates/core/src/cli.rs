//! Command implementations behind the `lie-meet` binary.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::obstruction::{
    e6_obstruction, e7_obstruction, root_string_obstruction, HullSummary, ObstructionCertificate,
};
use crate::rootsys::{RootSystem, TypeLabel, Weight};
use crate::witness::{classical_minuscule_witness, Witness};

/// Default bound on the rank accepted by `classify` and `report`.
pub const DEFAULT_MAX_RANK: usize = 8;

/// A highest weight: `w<i>` for `ϖ_i`, or `a_1,…,a_r` for `Σ a_i ϖ_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightSpec {
    Fundamental(usize),
    Coefficients(Vec<i64>),
}

impl FromStr for WeightSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix(['w', 'W']) {
            return match rest.parse::<usize>() {
                Ok(i) if i >= 1 => Ok(WeightSpec::Fundamental(i)),
                _ => Err(Error::Parse(format!("bad fundamental weight {s:?}"))),
            };
        }
        let coeffs = s
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<i64>()
                    .ok()
                    .filter(|&a| a >= 0)
                    .ok_or_else(|| Error::Parse(format!("bad coefficient {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<i64>>>()?;
        Ok(WeightSpec::Coefficients(coeffs))
    }
}

impl WeightSpec {
    pub fn resolve(&self, rs: &RootSystem) -> Result<Weight> {
        match self {
            WeightSpec::Fundamental(i) if *i > rs.rank => {
                Err(Error::Parse(format!("{} has no ϖ{i}", rs.name())))
            }
            WeightSpec::Fundamental(i) => rs.fundamental_weight(*i),
            WeightSpec::Coefficients(c) if c.len() != rs.rank => Err(Error::Parse(format!(
                "{} needs {} coefficients, got {}",
                rs.name(),
                rs.rank,
                c.len()
            ))),
            WeightSpec::Coefficients(c) => rs.weight_from_labels(c),
        }
    }
}

pub fn parse_type(s: &str) -> Result<TypeLabel> {
    let mut chars = s.trim().chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => TypeLabel::from_letter(c),
        _ => None,
    }
    .ok_or_else(|| Error::Parse(format!("unknown type {s:?}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    Witness(Box<Witness>),
    Obstruction(Box<ObstructionCertificate>),
}

impl Certificate {
    pub fn verified(&self) -> bool {
        match self {
            Certificate::Witness(w) => w.verified(),
            Certificate::Obstruction(o) => o.verified,
        }
    }

    /// Re-runs every check from the certificate's own data.
    pub fn recheck(&self) -> bool {
        match self {
            Certificate::Witness(w) => w.verified(),
            Certificate::Obstruction(o) => o.recheck().unwrap_or(false),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub type_label: TypeLabel,
    pub rank: usize,
    pub labels: Vec<i64>,
    pub highest_weight: Weight,
    pub minuscule: bool,
    pub classical: bool,
    pub intersection_nonempty: bool,
    pub certificate: Certificate,
}

impl Verdict {
    pub fn render(&self) -> String {
        let mut s = String::new();
        let labels: Vec<String> = self.labels.iter().map(i64::to_string).collect();
        let _ = writeln!(s, "group        {}{}", self.type_label, self.rank);
        let _ = writeln!(s, "labels       [{}]", labels.join(", "));
        let _ = writeln!(s, "weight       {}", self.highest_weight);
        let _ = writeln!(s, "minuscule    {}", self.minuscule);
        let _ = writeln!(s, "classical    {}", self.classical);
        let _ = writeln!(s, "G ∩ 𝔤 ≠ ∅    {}", self.intersection_nonempty);
        match &self.certificate {
            Certificate::Witness(w) => {
                let _ = writeln!(s, "certificate  witness: {}", w.case);
                let _ = writeln!(s, "  weights    {}", w.weights.len());
                let _ = writeln!(s, "  relations  {}", w.relations.len());
                let _ = writeln!(
                    s,
                    "  checks     entrywise={} trace_zero={} relations={}",
                    w.checks.entrywise_equal, w.checks.trace_zero, w.checks.relations_ok
                );
            }
            Certificate::Obstruction(o) => {
                let kind = serde_json::to_value(o.kind).unwrap_or_default();
                let _ = writeln!(
                    s,
                    "certificate  {}: {}",
                    kind.as_str().unwrap_or("?"),
                    o.case
                );
            }
        }
        let _ = writeln!(s, "verified     {}", self.certificate.verified());
        s
    }
}

/// Decides `G ∩ 𝔤 ≠ ∅` for `(type, rank, λ)` and attaches a certificate.
pub fn classify(type_label: TypeLabel, rank: usize, spec: &WeightSpec) -> Result<Verdict> {
    let rs = RootSystem::build(type_label, rank)?;
    let lambda = spec.resolve(&rs)?;
    let labels = rs.dominant_labels(&lambda)?;
    if lambda.is_zero() {
        return Err(Error::InvalidInput(
            "the trivial representation is excluded".into(),
        ));
    }
    let minuscule = rs.is_minuscule(&lambda)?;
    let classical = type_label.is_classical();
    let certificate = match (minuscule, type_label, rank) {
        (true, _, _) if classical => Certificate::Witness(Box::new(classical_minuscule_witness(
            type_label, rank, &lambda,
        )?)),
        (true, TypeLabel::E, 6) => {
            let ws = rs.weight_system(&lambda)?;
            let mut cert = e6_obstruction(&ws)?;
            cert.case = format!("{} λ={lambda} (27)", rs.name());
            Certificate::Obstruction(Box::new(cert))
        }
        (true, TypeLabel::E, 7) => Certificate::Obstruction(Box::new(e7_obstruction(&rs)?)),
        (true, _, _) => {
            return Err(Error::Inconsistent(format!(
                "unexpected minuscule weight for {}",
                rs.name()
            )))
        }
        (false, _, _) => Certificate::Obstruction(Box::new(root_string_obstruction(&rs, &lambda)?)),
    };
    Ok(Verdict {
        type_label,
        rank,
        labels,
        highest_weight: lambda,
        minuscule,
        classical,
        intersection_nonempty: minuscule && classical,
        certificate,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub type_label: TypeLabel,
    pub rank: usize,
    /// 1-based index of the fundamental weight.
    pub index: usize,
    /// `⟨ϖ_i, α∨⟩` for the highest dual root.
    pub s: i64,
    pub minuscule: bool,
    pub intersection_nonempty: bool,
}

/// Every fundamental weight of every type with rank at most `max_rank`.
pub fn report(max_rank: usize) -> Result<Vec<ReportRow>> {
    let mut rows = Vec::new();
    for t in TypeLabel::ALL {
        for r in t.legal_ranks(max_rank) {
            let rs = RootSystem::build(t, r)?;
            for i in 1..=r {
                let w = rs.fundamental_weight(i)?;
                let minuscule = rs.is_minuscule(&w)?;
                rows.push(ReportRow {
                    type_label: t,
                    rank: r,
                    index: i,
                    s: rs.string_length(&w)?,
                    minuscule,
                    intersection_nonempty: minuscule && t.is_classical(),
                });
            }
        }
    }
    Ok(rows)
}

pub fn render_report(rows: &[ReportRow]) -> String {
    let mut s = String::from("type rank weight   s  minuscule  nonempty\n");
    for row in rows {
        let _ = writeln!(
            s,
            "{:<4} {:<4} ϖ{:<6} {:<2} {:<10} {}",
            row.type_label,
            row.rank,
            row.index,
            row.s,
            if row.minuscule { "yes" } else { "no" },
            if row.intersection_nonempty {
                "yes"
            } else {
                "no"
            },
        );
    }
    s
}

/// Parses one point per line, coordinates `p/q` or `p` separated by
/// whitespace. Blank lines and lines starting with `#` are skipped.
pub fn parse_points(text: &str) -> Result<Vec<Vec<Rational>>> {
    let mut points: Vec<Vec<Rational>> = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let p = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Rational>()
                    .map_err(|_| Error::Parse(format!("line {}: bad number {tok:?}", n + 1)))
            })
            .collect::<Result<Vec<Rational>>>()?;
        if let Some(first) = points.first() {
            if first.len() != p.len() {
                return Err(Error::Parse(format!(
                    "line {}: expected {} coordinates, found {}",
                    n + 1,
                    first.len(),
                    p.len()
                )));
            }
        }
        points.push(p);
    }
    if points.is_empty() {
        return Err(Error::Parse("no points".into()));
    }
    Ok(points)
}

/// Facets of the convex hull of a point file.
pub fn facets(text: &str) -> Result<HullSummary> {
    HullSummary::from_points(&parse_points(text)?)
}

pub fn render_facets(h: &HullSummary) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "points     {}", h.vertex_count);
    let _ = writeln!(s, "dimension  {}", h.dim);
    let _ = writeln!(s, "facets     {}", h.facet_count);
    let hist: Vec<String> = h
        .histogram
        .iter()
        .map(|(k, v)| format!("{k}: {v}"))
        .collect();
    let _ = writeln!(s, "histogram  {{{}}}", hist.join(", "));
    let _ = writeln!(s, "verified   {}", h.check.all());
    for f in &h.facets {
        let normal: Vec<String> = f.normal.iter().map(Rational::to_string).collect();
        let verts: Vec<String> = f.vertices.iter().map(usize::to_string).collect();
        let _ = writeln!(
            s,
            "[{}] <= {}  on {{{}}}",
            normal.join(" "),
            f.offset,
            verts.join(" ")
        );
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn weight_spec_parsing() {
        assert_eq!(
            "w2".parse::<WeightSpec>().unwrap(),
            WeightSpec::Fundamental(2)
        );
        assert_eq!(
            "1, 0,2".parse::<WeightSpec>().unwrap(),
            WeightSpec::Coefficients(vec![1, 0, 2])
        );
        assert!("w0".parse::<WeightSpec>().is_err());
        assert!("1,-1".parse::<WeightSpec>().is_err());
        assert!("x".parse::<WeightSpec>().is_err());
    }

    #[test]
    fn classify_examples() {
        let v = classify(TypeLabel::A, 3, &WeightSpec::Fundamental(2)).unwrap();
        assert!(v.intersection_nonempty && v.certificate.verified());
        assert!(matches!(v.certificate, Certificate::Witness(_)));

        let v = classify(TypeLabel::A, 1, &"2".parse().unwrap()).unwrap();
        assert!(!v.intersection_nonempty && v.certificate.verified());
        let Certificate::Obstruction(o) = &v.certificate else {
            panic!()
        };
        let crate::obstruction::Facts::RootString(f) = &o.facts else {
            panic!()
        };
        assert_eq!(f.s, 2);
    }

    #[test]
    fn classify_rejects_bad_input() {
        assert!(classify(TypeLabel::A, 3, &WeightSpec::Fundamental(4)).is_err());
        assert!(classify(TypeLabel::A, 3, &WeightSpec::Coefficients(vec![1])).is_err());
        assert!(classify(TypeLabel::E, 5, &WeightSpec::Fundamental(1)).is_err());
        assert!(classify(TypeLabel::A, 2, &WeightSpec::Coefficients(vec![0, 0])).is_err());
    }

    #[test]
    fn report_rows() {
        let rows = report(3).unwrap();
        let b3 = rows
            .iter()
            .find(|r| r.type_label == TypeLabel::B && r.rank == 3 && r.index == 3)
            .unwrap();
        assert!(b3.minuscule && b3.intersection_nonempty);
        let c2 = rows
            .iter()
            .find(|r| r.type_label == TypeLabel::C && r.rank == 2 && r.index == 2)
            .unwrap();
        assert!(!c2.minuscule);
        assert_eq!(render_report(&rows), render_report(&report(3).unwrap()));
    }

    #[test]
    fn point_parsing() {
        let pts = parse_points("# square\n0 0\n1 0\n\n0 1\n1/1 1\n").unwrap();
        assert_eq!(pts.len(), 4);
        let err = parse_points("0 0\n1 x\n").unwrap_err();
        assert!(err.to_string().contains("line 2"));
        let err = parse_points("0 0\n1 0 0\n").unwrap_err();
        assert!(err.to_string().contains("line 2"));
        let h = facets("0 0\n1 0\n0 1\n1 1\n").unwrap();
        assert_eq!(h.histogram, BTreeMap::from([(2, 4)]));
    }
}
