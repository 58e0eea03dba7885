use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Value};

use super::{Action, Cli, Command, Kind, MapOptions, Outcome, ParityChoice, Subject};
use crate::cohomology::{delta1, delta2, h2, CohomologyReport};
use crate::constructions::{
    alpha_inverse_bracket, derivation_product, form_twist, half_bracket_algebra, involutive_untwist, rota_baxter_product,
    sub_adjacent_hom_lie, twisted_derivation_product, xi_family, yau_square_twist, HomLieAlgebra,
};
use crate::deformation::{check_deformation, is_infinitesimal, rigidity_reduce, TruncatedDeformation, DEFAULT_ORDER};
use crate::document::{AlgebraDocument, DeformationDocument};
use crate::error::{Error, Result};
use crate::exactlin::{format_scalar, parse_scalar, Parity, Scalar};
use crate::samples::Sampler;
use crate::superalgebra::{
    is_derivation, is_hom_associative, is_hom_lie, is_hom_novikov, is_quadratic_hom_novikov, is_rota_baxter,
    is_supercommutative, EvenMap, SuperAlgebra, Verdict, Violation,
};

pub(super) fn dispatch(cli: &Cli) -> Result<Outcome> {
    let machine = cli.machine;
    match &cli.command {
        Command::Check { subject, file, opts } => check(*subject, &load_algebra(file)?, opts, machine),
        Command::Construct { kind, file, opts, xi, power } => {
            construct(*kind, &load_algebra(file)?, opts, xi.as_deref(), *power, machine)
        }
        Command::Cohomology { file, parity } => cohomology(&load_algebra(file)?, *parity, machine),
        Command::Deform { action, algebra, deformation, order } => {
            let doc = load_algebra(algebra)?;
            let base = Arc::new(doc.algebra);
            let d = load_deformation(&base, deformation.as_deref(), *order)?;
            deform(*action, &d, machine)
        }
        Command::Selftest { seed, count } => Ok(selftest(*seed, *count, machine)),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { location, message } => Error::Parse { location: format!("{}: {location}", path.display()), message },
        other => other,
    }
}

fn load_algebra(path: &Path) -> Result<AlgebraDocument> {
    AlgebraDocument::parse(&read(path)?).map_err(|e| in_file(path, e))
}

fn load_deformation(base: &Arc<SuperAlgebra>, path: Option<&Path>, order: Option<usize>) -> Result<TruncatedDeformation> {
    let Some(path) = path else {
        let order = order.unwrap_or(DEFAULT_ORDER);
        if order == 0 {
            return Err(Error::Input("--order must be at least 1".into()));
        }
        return TruncatedDeformation::null(base.clone(), order);
    };
    let mut doc = DeformationDocument::parse(&read(path)?).map_err(|e| in_file(path, e))?;
    if let Some(n) = order {
        if n == 0 || n > doc.order {
            return Err(Error::Input(format!("--order {n} is outside 1..={} for this document", doc.order)));
        }
        doc.terms.truncate(n);
        doc.order = n;
    }
    doc.bind(base).map_err(|e| in_file(path, e))
}

fn scalar_flag(flag: &str, text: Option<&str>, fallback: Option<&Scalar>) -> Result<Scalar> {
    match (text, fallback) {
        (Some(t), _) => parse_scalar(t).map_err(|e| Error::Input(format!("--{flag}: {e}"))),
        (None, Some(v)) => Ok(v.clone()),
        (None, None) => Err(Error::Input(format!("no {flag} given: pass --{flag} or set \"{flag}\" in the document"))),
    }
}

fn map_named(doc: &AlgebraDocument, opts: &MapOptions, default: &str) -> Result<EvenMap> {
    doc.map(opts.map.as_deref().unwrap_or(default))
}

fn violation_json(v: &Violation) -> Value {
    json!({
        "identity": v.identity,
        "tuple": v.tuple,
        "residual": v.residual.iter().map(format_scalar).collect::<Vec<_>>(),
    })
}

fn verdict_outcome(label: &str, verdict: &Verdict, machine: bool) -> Outcome {
    let code = if verdict.holds() { 0 } else { 1 };
    let text = if machine {
        let value = json!({
            "subject": label,
            "holds": verdict.holds(),
            "violation": verdict.violation().map(violation_json),
        });
        format!("{value}\n")
    } else {
        match verdict.violation() {
            None => format!("{label}: pass\n"),
            Some(v) => format!("{label}: fail\n  {v}\n"),
        }
    };
    Outcome::report(code, text)
}

fn check(subject: Subject, doc: &AlgebraDocument, opts: &MapOptions, machine: bool) -> Result<Outcome> {
    let a = &doc.algebra;
    let (label, verdict) = match subject {
        Subject::HomNovikov => ("hom-novikov", is_hom_novikov(a)),
        Subject::HomLie => ("hom-lie", is_hom_lie(a)),
        Subject::HomAssoc => ("hom-assoc", is_hom_associative(a)),
        Subject::Supercomm => ("supercomm", is_supercommutative(a)),
        Subject::Derivation => ("derivation", is_derivation(a, &map_named(doc, opts, "D")?)?),
        Subject::RotaBaxter => {
            let p = map_named(doc, opts, "P")?;
            let weight = scalar_flag("weight", opts.weight.as_deref(), doc.weight.as_ref())?;
            ("rota-baxter", is_rota_baxter(a, &p, &weight)?)
        }
        Subject::Quadratic => {
            let form = doc.form.as_ref().ok_or_else(|| Error::Input("document has no \"form\"".into()))?;
            ("quadratic", is_quadratic_hom_novikov(a, form)?)
        }
    };
    Ok(verdict_outcome(label, &verdict, machine))
}

fn construct(
    kind: Kind,
    doc: &AlgebraDocument,
    opts: &MapOptions,
    xi: Option<&str>,
    power: u32,
    machine: bool,
) -> Result<Outcome> {
    let a = &doc.algebra;
    let out = match kind {
        Kind::SubAdjacent => AlgebraDocument::new(sub_adjacent_hom_lie(a)?.into_algebra()),
        Kind::Untwist => AlgebraDocument::new(involutive_untwist(a)?),
        Kind::AlphaInvBracket => AlgebraDocument::new(alpha_inverse_bracket(a)?),
        Kind::YauSquare => AlgebraDocument::new(yau_square_twist(a)?),
        Kind::DerivProduct => AlgebraDocument::new(derivation_product(a, &map_named(doc, opts, "D")?)?),
        Kind::TwistedDerivProduct => AlgebraDocument::new(twisted_derivation_product(a, &map_named(doc, opts, "D")?)?),
        Kind::XiFamily => {
            let d = map_named(doc, opts, "D")?;
            let xi = scalar_flag("xi", xi, doc.xi.as_ref())?;
            AlgebraDocument::new(xi_family(a, &d, &xi)?)
        }
        Kind::RotaBaxter => {
            let p = map_named(doc, opts, "P")?;
            let weight = scalar_flag("weight", opts.weight.as_deref(), doc.weight.as_ref())?;
            AlgebraDocument::new(rota_baxter_product(a, &p, &weight)?)
        }
        Kind::FormTwist => {
            let form = doc.form.as_ref().ok_or_else(|| Error::Input("document has no \"form\"".into()))?;
            let alpha = EvenMap::new(a.space().clone(), a.alpha().clone())?;
            let mut out = AlgebraDocument::new(a.clone());
            out.form = Some(form_twist(form, &alpha, power)?);
            out
        }
        Kind::HalfBracket => AlgebraDocument::new(half_bracket_algebra(&HomLieAlgebra::new(a.clone())?)?),
    };
    let text = out.emit();
    let stdout = if machine {
        let value: Value = serde_json::from_str(&text).map_err(|e| Error::Invariant(format!("emitted document is not JSON: {e}")))?;
        format!("{value}\n")
    } else {
        text
    };
    Ok(Outcome::report(0, stdout))
}

fn cohomology(doc: &AlgebraDocument, choice: ParityChoice, machine: bool) -> Result<Outcome> {
    let parities = match choice {
        ParityChoice::Even => vec![Parity::Even],
        ParityChoice::Odd => vec![Parity::Odd],
        ParityChoice::Both => vec![Parity::Even, Parity::Odd],
    };
    let a = Arc::new(doc.algebra.clone());
    let reports = parities.into_iter().map(|p| h2(&a, p)).collect::<Result<Vec<CohomologyReport>>>()?;
    let stdout = if machine {
        format!("{}\n", serde_json::to_string(&reports).map_err(|e| Error::Invariant(e.to_string()))?)
    } else {
        let mut s = String::new();
        for r in &reports {
            let p = r.parity.name();
            s.push_str(&format!(
                "C2({p})={}\nZ2({p})={}\nB2({p})={}\nH2({p})={}\n",
                r.dim_cochains, r.dim_cocycles, r.dim_coboundaries, r.dim_h2
            ));
        }
        s
    };
    Ok(Outcome::report(0, stdout))
}

fn deform(action: Action, d: &TruncatedDeformation, machine: bool) -> Result<Outcome> {
    match action {
        Action::Check => {
            let failure = check_deformation(d).err();
            let last_passed = failure.as_ref().map_or(d.order() + 1, |f| f.order);
            if machine {
                let value = json!({
                    "order": d.order(),
                    "holds": failure.is_none(),
                    "passed_orders": (0..last_passed).collect::<Vec<_>>(),
                    "failure": failure.as_ref().map(|f| json!({"order": f.order, "violation": violation_json(&f.violation)})),
                });
                return Ok(Outcome::report(i32::from(failure.is_some()), format!("{value}\n")));
            }
            let mut s = String::new();
            for n in 0..last_passed {
                s.push_str(&format!("order {n}: pass\n"));
            }
            if let Some(f) = &failure {
                s.push_str(&format!("order {}: fail\n  {}\n", f.order, f.violation));
            }
            Ok(Outcome::report(i32::from(failure.is_some()), s))
        }
        Action::Infinitesimal => {
            let verdict = is_infinitesimal(d.base(), d.term(1))?;
            Ok(verdict_outcome("infinitesimal", &verdict, machine))
        }
        Action::Trivialize => {
            let (reduced, trivialized) = rigidity_reduce(d)?;
            let doc = DeformationDocument::from_deformation(&reduced);
            let code = i32::from(!trivialized);
            let summary = if trivialized {
                "trivialized: the deformation is equivalent to the null deformation".to_string()
            } else {
                let n = reduced.leading_order().unwrap_or(0);
                format!("not reducible: G{n} is not a coboundary")
            };
            if machine {
                let deformation: Value =
                    serde_json::from_str(&doc.emit()).map_err(|e| Error::Invariant(format!("emitted document is not JSON: {e}")))?;
                let value = json!({
                    "trivialized": trivialized,
                    "leading_order": reduced.leading_order(),
                    "deformation": deformation,
                });
                return Ok(Outcome::report(code, format!("{value}\n")));
            }
            Ok(Outcome { code, stdout: doc.emit(), stderr: format!("{summary}\n") })
        }
    }
}

/// δ²δ¹f = 0 for random cochains of both parities, and the sub-adjacent bracket is Hom-Lie.
fn selftest(seed: u64, count: usize, machine: bool) -> Outcome {
    let mut sampler = Sampler::new(seed);
    let mut checks = 0usize;
    let mut failures = Vec::new();
    for n in 0..count {
        let a = Arc::new(sampler.hom_novikov());
        for parity in Parity::BOTH {
            let f = sampler.cochain(&a, 1, parity);
            checks += 1;
            match delta1(&f).and_then(|g| delta2(&g)) {
                Ok(g) if g.is_zero() => {}
                Ok(_) => failures.push(format!("sample {n}: delta2(delta1 f) is nonzero for a {} cochain", parity.name())),
                Err(e) => failures.push(format!("sample {n}: {e}")),
            }
        }
        checks += 1;
        match sub_adjacent_hom_lie(&a) {
            Ok(l) if is_hom_lie(l.algebra()).holds() => {}
            Ok(_) => failures.push(format!("sample {n}: sub-adjacent bracket is not Hom-Lie")),
            Err(e) => failures.push(format!("sample {n}: {e}")),
        }
    }
    let code = i32::from(!failures.is_empty());
    let stdout = if machine {
        format!("{}\n", json!({"seed": seed, "samples": count, "checks": checks, "failures": failures}))
    } else {
        let mut s = format!("selftest seed={seed}: {count} algebras, {checks} checks, {} failures\n", failures.len());
        for f in &failures {
            s.push_str(&format!("  {f}\n"));
        }
        s
    };
    Outcome::report(code, stdout)
}
