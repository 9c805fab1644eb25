use std::path::Path;

use fano_lines::bounds::{bound_table, uniform_bound_derivation, BoundTable};
use fano_lines::covering::{total_inflections_with_budget, PlaneCurve};
use fano_lines::exact::Ring;
use fano_lines::p1::{BinaryForm, GroupTag};
use fano_lines::plucker::{build_stratum_system, count_lines, count_stratum, stratum_lines, CountOptions};
use fano_lines::separable::{build_form, count_and_emit, SeparableSurface};
use fano_lines::skew::{rams_family, skew_bounds, verify_skew_set};
use fano_lines::{parse_poly, print_poly, Budget, Catalog, Error, SurfaceForm};
use serde_json::{json, Map, Value};

use crate::args::{Global, LinesCmd, SkewCmd};
use crate::output::{float, line, lines, rational};

/// Failures split by exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad input or violated precondition (exit 1).
    User(String),
    /// Budget exhausted or numerics failed (exit 2).
    Compute(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::User(_) => 1,
            Failure::Compute(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::User(m) | Failure::Compute(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        use fano_lines::covering::CoveringError as C;
        use fano_lines::p1::P1Error as P;
        use fano_lines::plucker::PluckerError as K;
        use fano_lines::separable::SeparableError as S;
        let compute = match &e {
            Error::Poly(_) => true,
            Error::P1(p) | Error::Separable(S::P1(p)) => matches!(p, P::NoConvergence { .. } | P::NotAGroup | P::UnrecognizedOrder(_)),
            Error::Separable(s) => matches!(s, S::ScalarMismatch { .. } | S::Containment { .. } | S::Unrealized { .. }),
            Error::Plucker(k) => matches!(k, K::Stratum { .. } | K::Smoothness(_) | K::Eigen(_)),
            Error::Covering(c) => matches!(c, C::IllConditioned(_) | C::Poly(_)),
            _ => false,
        };
        if compute {
            Failure::Compute(e.to_string())
        } else {
            Failure::User(e.to_string())
        }
    }
}

macro_rules! lib {
    ($e:expr) => {
        $e.map_err(|e| Failure::from(Error::from(e)))
    };
}

pub type Body = Result<Map<String, Value>, Failure>;

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("json! object literal"),
    }
}

fn budget(g: &Global) -> Budget {
    Budget::pairs(g.budget)
}

pub fn catalog(g: &Global) -> Result<Catalog, Failure> {
    match &g.catalog {
        Some(p) => lib!(Catalog::load(Path::new(p))),
        None => Ok(Catalog::bundled()),
    }
}

fn binary(text: &str, vars: [&str; 2]) -> Result<BinaryForm, Failure> {
    let p = lib!(parse_poly(text, &Ring::new(&vars)))?;
    lib!(BinaryForm::from_poly(&p))
}

pub fn lines_cmd(g: &Global, cmd: &LinesCmd) -> Body {
    match cmd {
        LinesCmd::Separable { phi, psi, real, emit } => {
            let phi_form = binary(phi, ["x", "y"])?;
            let psi_form = match psi {
                None => phi_form.clone(),
                Some(text) => binary(text, ["z", "t"]).or_else(|_| binary(text, ["x", "y"]))?,
            };
            let s = lib!(SeparableSurface::new(phi_form, psi_form))?;
            let r = lib!(count_and_emit(&s, g.tol))?;
            let mut body = object(json!({
                "degree": r.degree,
                "grid": r.grid_lines.len(),
                "alpha": r.alpha,
                "total": r.total,
                "rulings": r.rulings.len(),
                "group": r.group.map(|t| t.to_string()),
                "max_residual": float(r.max_residual),
                "surface": print_poly(s.to_surface().poly()),
            }));
            if *real {
                body.insert("real".into(), json!({ "count": r.real_count, "all_zeros_real": r.real_zeros }));
            }
            if *emit {
                body.insert("lines".into(), lines(&r.lines()));
            }
            Ok(body)
        }
        LinesCmd::Plucker { surface, emit, skip_smooth_check, strata } => {
            let cat = catalog(g)?;
            let s = match cat.surface(surface) {
                Ok(s) => s,
                Err(fano_lines::catalog::CatalogError::Unknown(_)) => lib!(SurfaceForm::parse(surface))?,
                Err(e) => return Err(Failure::from(Error::from(e))),
            };
            plucker(g, &s, *emit, !*skip_smooth_check, strata.as_deref())
        }
    }
}

fn plucker(g: &Global, s: &SurfaceForm, emit: bool, check_smooth: bool, only: Option<&[u8]>) -> Body {
    let opts = CountOptions {
        budget: budget(g),
        check_smooth,
        emit,
        seed: g.seed,
    };
    let (counts, found, certified) = match only {
        None => {
            let c = lib!(count_lines(s, &opts))?;
            (c.strata, c.lines.unwrap_or_default(), c.certified_reduced)
        }
        Some(ks) => {
            if check_smooth && !lib!(fano_lines::plucker::is_smooth(s, opts.budget))? {
                return Err(Failure::User("surface is singular".into()));
            }
            let mut ks = ks.to_vec();
            ks.sort_unstable();
            ks.dedup();
            let mut counts = Vec::new();
            let mut found = Vec::new();
            for k in ks {
                let sys = lib!(build_stratum_system(s, k))?;
                let c = lib!(count_stratum(&sys, opts.budget))?;
                if emit {
                    found.extend(lib!(stratum_lines(&sys, &c, g.seed))?);
                }
                counts.push(c);
            }
            let certified = counts.iter().all(|c| c.certified_reduced);
            (counts, found, certified)
        }
    };
    let strata: Map<String, Value> = counts.iter().map(|c| (c.stratum.to_string(), json!(c.count))).collect();
    let detail: Map<String, Value> = counts
        .iter()
        .map(|c| {
            (
                c.stratum.to_string(),
                json!({
                    "certified_reduced": c.certified_reduced,
                    "eliminant_degrees": c.eliminant_degrees,
                    "pairs_processed": c.pairs_processed,
                    "basis_size": c.basis_size,
                }),
            )
        })
        .collect();
    let mut body = object(json!({
        "degree": s.degree(),
        "total": counts.iter().map(|c| c.count).sum::<usize>(),
        "strata": strata,
        "stratum_detail": detail,
        "certified_reduced": certified,
        "partial": only.is_some(),
    }));
    if emit {
        let mut found = found;
        fano_lines::line::sort_lines(&mut found);
        let residual = found.iter().map(|l| s.line_residual(l)).fold(0.0, f64::max);
        body.insert("max_residual".into(), float(residual));
        body.insert("lines".into(), lines(&found));
    }
    Ok(body)
}

pub fn covering(g: &Global, curve: &str, emit: bool) -> Body {
    let c = match curve.strip_prefix("fermat:") {
        Some(d) => {
            let d: u32 = d.parse().map_err(|_| Failure::User(format!("invalid degree in `{curve}`")))?;
            lib!(PlaneCurve::fermat(d))?
        }
        None => lib!(PlaneCurve::parse(curve))?,
    };
    let r = lib!(total_inflections_with_budget(&c, g.tol, g.seed, budget(g)))?;
    if r.max_residual > g.tol {
        return Err(Failure::Compute(format!("emitted line residual {:.3e} exceeds tolerance", r.max_residual)));
    }
    let mut body = object(json!({
        "degree": r.degree,
        "beta": r.beta,
        "lines_count": r.beta * r.degree as usize,
        "undetermined": r.undetermined,
        "candidates": r.candidates.len(),
        "max_residual": float(r.max_residual),
        "curve": print_poly(c.poly()),
    }));
    if emit {
        body.insert("lines".into(), lines(&r.lines));
    }
    Ok(body)
}

pub fn skew(g: &Global, cmd: &SkewCmd) -> Body {
    let SkewCmd::Rams { d, emit } = cmd;
    let fam = lib!(rams_family(*d))?;
    let check = verify_skew_set(&fam.surface, &fam.lines, g.tol, 1e-6);
    let b = lib!(skew_bounds(*d))?;
    let mut body = object(json!({
        "d": d,
        "count": fam.lines.len(),
        "claimed": fam.claimed_size,
        "disjoint": check.ok,
        "min_pairing": float(check.min_pairing),
        "max_residual": float(check.max_residual),
        "surface": print_poly(fam.surface.poly()),
        "bounds": {
            "miyaoka": b.miyaoka,
            "previous_family": b.rams_old,
            "family": b.family,
            "known_max": b.known_max,
        },
    }));
    if let Some(v) = check.violation {
        body.insert("violation".into(), Value::String(format!("{v:?}")));
    }
    if *emit {
        body.insert("lines".into(), Value::Array(fam.lines.iter().map(line).collect()));
    }
    Ok(body)
}

fn bound_row(t: &BoundTable) -> Result<Value, Failure> {
    let u = lib!(uniform_bound_derivation(t.d))?;
    Ok(json!({
        "d": t.d,
        "segre": t.segre,
        "uniform": t.uniform,
        "per_line": t.per_line,
        "off_plane_per_line": u.off_plane_per_line,
        "separable_max": t.separable_max,
        "best_known": t.best_known,
        "miyaoka": t.miyaoka,
    }))
}

pub const PUBLISHED_DEGREES: [u64; 10] = [4, 5, 6, 7, 8, 9, 10, 11, 12, 20];

pub fn bounds(d: Option<u64>) -> Body {
    let ds: Vec<u64> = match d {
        Some(d) => vec![d],
        None => PUBLISHED_DEGREES.to_vec(),
    };
    let rows = ds
        .into_iter()
        .map(|d| lib!(bound_table(d)).and_then(|t| bound_row(&t)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(object(json!({ "rows": rows })))
}

pub fn construct(g: &Global, degree: usize, group: &str) -> Body {
    let tag = GroupTag::parse(group).ok_or_else(|| Failure::User(format!("unknown group `{group}`")))?;
    let form = lib!(build_form(degree, tag, g.seed))?;
    let s = lib!(SeparableSurface::symmetric(form.clone()))?;
    let r = lib!(count_and_emit(&s, g.tol))?;
    Ok(object(json!({
        "degree": degree,
        "requested": tag.to_string(),
        "group": r.group.map(|t| t.to_string()),
        "form": form.to_string(),
        "coefficients": form.coeffs().iter().map(rational).collect::<Vec<_>>(),
        "alpha": r.alpha,
        "total": r.total,
    })))
}

pub fn list_catalog(g: &Global) -> Body {
    let cat = catalog(g)?;
    let entries: Vec<Value> = cat
        .entries()
        .iter()
        .map(|e| {
            json!({
                "name": if e.parametric { format!("{}:d", e.name) } else { e.name.clone() },
                "expression": e.template,
            })
        })
        .collect();
    Ok(object(json!({ "surfaces": entries })))
}
