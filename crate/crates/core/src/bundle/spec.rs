//! Symbolic bundle descriptions and their text syntax.
//!
//! ```text
//! O(1)+O(2)            O(-1)^3           Omega(3)         Sym2Omega1(0)
//! case:4a@P2           O(1)+O(2)@P3
//! coker{n=2; F1=[-1]; F0=[2,0,0]; A=[[x2^3],[x1],[-x0]]}
//! coker{n=2; F2=[..]; F1=[..]; F0=[..]; A=[[..]]; B=[[..]]}
//! ```
//! The ambient space defaults to `P^2`.

use std::fmt;
use std::str::FromStr;

use super::catalog::{omega_twist, presentation, CaseId};
use super::presentation::{FormMatrix, FreePresentation};
use crate::algebra::Form;
use crate::chow::{chern_sym2_omega_twist, ChernData};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BundleSpec {
    LineSum {
        n: usize,
        degrees: Vec<i64>,
    },
    /// `Omega(k)` on the plane.
    OmegaTwist {
        k: i64,
    },
    /// `S^2(Omega(1)) (k)` on the plane; Chern data only.
    Sym2OmegaTwist {
        k: i64,
    },
    Coker(FreePresentation),
    NamedCase(CaseId),
    Sum(Vec<BundleSpec>),
    /// Cokernel of an injective map from the bundle `source` to `sum O(f0)`,
    /// given on the generators of the source's presentation.
    CokerOf {
        source: Box<BundleSpec>,
        f0: Vec<i64>,
        map: FormMatrix,
    },
}

impl BundleSpec {
    pub fn line_sum(n: usize, degrees: &[i64]) -> Self {
        BundleSpec::LineSum {
            n,
            degrees: degrees.to_vec(),
        }
    }

    pub fn ambient(&self) -> usize {
        match self {
            BundleSpec::LineSum { n, .. } => *n,
            BundleSpec::OmegaTwist { .. } | BundleSpec::Sym2OmegaTwist { .. } => 2,
            BundleSpec::Coker(p) => p.n(),
            BundleSpec::NamedCase(id) => id.n,
            BundleSpec::Sum(parts) => parts.first().map(|p| p.ambient()).unwrap_or(2),
            BundleSpec::CokerOf { source, .. } => source.ambient(),
        }
    }

    pub fn rank(&self) -> Result<usize> {
        match self {
            BundleSpec::Sym2OmegaTwist { .. } => Ok(3),
            BundleSpec::Sum(parts) => parts.iter().map(|p| p.rank()).sum(),
            other => Ok(other.expand()?.rank()),
        }
    }

    pub fn chern(&self) -> Result<ChernData> {
        chern_of(self)
    }

    pub fn expand(&self) -> Result<FreePresentation> {
        expand_to_presentation(self)
    }

    /// Case id when the spec is a named case.
    pub fn case_id(&self) -> Option<CaseId> {
        match self {
            BundleSpec::NamedCase(id) => Some(*id),
            _ => None,
        }
    }
}

pub fn expand_to_presentation(spec: &BundleSpec) -> Result<FreePresentation> {
    match spec {
        BundleSpec::LineSum { n, degrees } => Ok(FreePresentation::split(*n, degrees)),
        BundleSpec::OmegaTwist { k } => omega_twist(*k),
        BundleSpec::Sym2OmegaTwist { .. } => Err(Error::NotPresentable(format!("{spec}"))),
        BundleSpec::Coker(p) => Ok(p.clone()),
        BundleSpec::NamedCase(id) => presentation(*id),
        BundleSpec::Sum(parts) => {
            let mut it = parts.iter();
            let first = it
                .next()
                .ok_or_else(|| Error::InvalidPresentation("empty sum".into()))?;
            let mut acc = first.expand()?;
            for p in it {
                acc = direct_sum(&acc, &p.expand()?)?;
            }
            Ok(acc)
        }
        BundleSpec::CokerOf { source, f0, map } => {
            let g = source.expand()?;
            if g.length() > 1 {
                return Err(Error::UnsupportedResolutionLength(g.length() + 1));
            }
            FreePresentation::new(
                g.n(),
                g.f1().to_vec(),
                g.f0().to_vec(),
                f0.clone(),
                map.clone(),
                g.a1().clone(),
            )
        }
    }
}

fn direct_sum(a: &FreePresentation, b: &FreePresentation) -> Result<FreePresentation> {
    if a.n() != b.n() {
        return Err(Error::AmbientMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let cat = |x: &[i64], y: &[i64]| [x, y].concat();
    FreePresentation::unchecked(
        a.n(),
        cat(a.f2(), b.f2()),
        cat(a.f1(), b.f1()),
        cat(a.f0(), b.f0()),
        a.a1().block_diag(b.a1()),
        a.a2().block_diag(b.a2()),
    )
}

pub fn chern_of(spec: &BundleSpec) -> Result<ChernData> {
    match spec {
        BundleSpec::Sym2OmegaTwist { k } => {
            Ok(ChernData::from_class(3, &chern_sym2_omega_twist(*k)))
        }
        BundleSpec::Sum(parts)
            if parts
                .iter()
                .any(|p| matches!(p, BundleSpec::Sym2OmegaTwist { .. })) =>
        {
            let mut rank = 0;
            let mut c = crate::chow::ChowClass::one(spec.ambient());
            for p in parts {
                let (r, cp) = match p {
                    BundleSpec::Sym2OmegaTwist { k } => (3, chern_sym2_omega_twist(*k)),
                    other => {
                        let e = other.expand()?;
                        (e.rank(), e.chern_class())
                    }
                };
                rank += r;
                c = crate::chow::chow_mul(&c, &cp)?;
            }
            Ok(ChernData::from_class(rank, &c))
        }
        other => Ok(other.expand()?.chern_data()),
    }
}

impl fmt::Display for BundleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BundleSpec::LineSum { n, degrees } => {
                let parts: Vec<String> = degrees.iter().map(|d| format!("O({d})")).collect();
                write!(f, "{}@P{n}", parts.join("+"))
            }
            BundleSpec::OmegaTwist { k } => write!(f, "Omega({k})"),
            BundleSpec::Sym2OmegaTwist { k } => write!(f, "Sym2Omega1({k})"),
            BundleSpec::Coker(p) => write!(f, "{p}"),
            BundleSpec::NamedCase(id) => write!(f, "case:{id}"),
            BundleSpec::Sum(parts) => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", s.join(" + "))
            }
            BundleSpec::CokerOf { source, f0, map } => {
                write!(f, "coker({source} -> {f0:?} by {map})")
            }
        }
    }
}

/// Splits on `sep` outside brackets and braces.
fn split_top(s: &str, sep: char) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            _ => {}
        }
        if ch == sep && depth == 0 {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(ch);
        }
    }
    out.push(cur);
    out
}

fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [..], got {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(vec![]);
    }
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad degree {t:?}")))
        })
        .collect()
}

/// Parses `[[f, g], [h, k]]` with entry `(i, j)` of degree `tgt[i] - src[j]`.
fn parse_form_matrix(s: &str, n: usize, src: &[i64], tgt: &[i64]) -> Result<FormMatrix> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [[..]], got {s:?}")))?;
    let mut rows = Vec::new();
    if !inner.trim().is_empty() {
        for (i, row) in split_top(inner, ',').iter().enumerate() {
            let r = row
                .trim()
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("bad matrix row {row:?}")))?;
            let mut forms = Vec::new();
            for (j, entry) in r.split(',').enumerate() {
                let want = match (tgt.get(i), src.get(j)) {
                    (Some(t), Some(s)) => (t - s).max(0) as u32,
                    _ => return Err(Error::Parse(format!("matrix entry ({i},{j}) out of range"))),
                };
                forms.push(Form::parse(entry, n + 1, Some(want))?);
            }
            rows.push(forms);
        }
    }
    if rows.is_empty() {
        return Ok(FormMatrix::zeros(tgt.len(), src.len(), n + 1));
    }
    FormMatrix::from_rows(n + 1, rows)
}

fn parse_coker(body: &str, default_n: usize) -> Result<FreePresentation> {
    let mut n = default_n;
    let mut f2 = Vec::new();
    let mut f1 = Vec::new();
    let mut f0 = Vec::new();
    let mut a_text = None;
    let mut b_text = None;
    for field in split_top(body, ';') {
        let field = field.trim();
        if field.is_empty() {
            continue;
        }
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got {field:?}")))?;
        match key.trim() {
            "n" => {
                n = value
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad ambient {value:?}")))?
            }
            "F2" => f2 = parse_int_list(value)?,
            "F1" => f1 = parse_int_list(value)?,
            "F0" => f0 = parse_int_list(value)?,
            "A" => a_text = Some(value.to_string()),
            "B" => b_text = Some(value.to_string()),
            other => return Err(Error::Parse(format!("unknown coker field {other:?}"))),
        }
    }
    let a1 = match a_text {
        Some(t) => parse_form_matrix(&t, n, &f1, &f0)?,
        None => FormMatrix::zeros(f0.len(), f1.len(), n + 1),
    };
    let a2 = match b_text {
        Some(t) => parse_form_matrix(&t, n, &f2, &f1)?,
        None => FormMatrix::zeros(f1.len(), f2.len(), n + 1),
    };
    FreePresentation::new(n, f2, f1, f0, a1, a2)
}

fn parse_summand(s: &str, n: usize) -> Result<BundleSpec> {
    let s = s.trim();
    let bad = || Error::Parse(format!("cannot read bundle {s:?}"));
    let arg =
        |prefix: &str| -> Option<&str> { s.strip_prefix(prefix).and_then(|t| t.strip_suffix(')')) };
    if let Some(body) = s.strip_prefix("coker{").and_then(|t| t.strip_suffix('}')) {
        return Ok(BundleSpec::Coker(parse_coker(body, n)?));
    }
    if let Some(label) = s.strip_prefix("case:") {
        let id = if label.contains('@') {
            label.parse()?
        } else {
            format!("{label}@P{n}").parse()?
        };
        return Ok(BundleSpec::NamedCase(id));
    }
    if s == "O" {
        return Ok(BundleSpec::line_sum(n, &[0]));
    }
    if let Ok(id) = format!("{s}@P{n}").parse::<CaseId>() {
        return Ok(BundleSpec::NamedCase(id));
    }
    if let Some(k) = arg("Sym2Omega1(") {
        if n != 2 {
            return Err(Error::Parse("Sym2Omega1 lives on P2".into()));
        }
        return Ok(BundleSpec::Sym2OmegaTwist {
            k: k.trim().parse().map_err(|_| bad())?,
        });
    }
    if let Some(k) = arg("Omega(") {
        if n != 2 {
            return Err(Error::Parse("Omega(k) is available on P2 only".into()));
        }
        return Ok(BundleSpec::OmegaTwist {
            k: k.trim().parse().map_err(|_| bad())?,
        });
    }
    if let Some(rest) = s.strip_prefix("O(") {
        let (d, tail) = rest.split_once(')').ok_or_else(bad)?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        let times = match tail.trim() {
            "" => 1,
            t => t
                .strip_prefix('^')
                .and_then(|e| e.trim().parse::<usize>().ok())
                .ok_or_else(bad)?,
        };
        return Ok(BundleSpec::line_sum(n, &vec![d; times]));
    }
    Err(bad())
}

/// Reads the bundle syntax; `@Pn` at the very end sets the ambient space.
pub fn parse_spec(text: &str) -> Result<BundleSpec> {
    let t = text.trim();
    let (body, n) = match t.rsplit_once('@') {
        Some((b, amb)) if amb.trim().starts_with('P') && !b.contains("case:") => {
            let n = amb.trim()[1..]
                .parse()
                .map_err(|_| Error::Parse(format!("bad ambient {amb:?}")))?;
            (b, n)
        }
        _ => (t, 2),
    };
    let parts: Vec<BundleSpec> = split_top(body, '+')
        .iter()
        .map(|p| match p.trim() {
            "" => Err(Error::Parse(format!("empty summand in {text:?}"))),
            p => parse_summand(p, n),
        })
        .collect::<Result<_>>()?;
    if parts
        .iter()
        .all(|p| matches!(p, BundleSpec::LineSum { .. }))
    {
        let degrees = parts
            .iter()
            .flat_map(|p| match p {
                BundleSpec::LineSum { degrees, .. } => degrees.clone(),
                _ => unreachable!(),
            })
            .collect::<Vec<_>>();
        return Ok(BundleSpec::line_sum(n, &degrees));
    }
    if parts.len() == 1 {
        return Ok(parts.into_iter().next().unwrap());
    }
    Ok(BundleSpec::Sum(parts))
}

impl FromStr for BundleSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_spec(s)
    }
}
