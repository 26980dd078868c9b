//! Command implementations. Every command returns its rendered output and
//! an exit code under the stable contract: 0 all checks hold, 1 a
//! mathematical check failed, 2 input or configuration error.

use crate::document::{Provenance, WorkspaceDocument};
use crate::output::{render, OutputFormat};
use aplkit::coalg::{
    apl_coalgebra_suite, aplp_coalgebra_suite, cocomm_coassoc_suite, dual_presentation,
};
use aplkit::*;
use std::path::{Path, PathBuf};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_MATH_FAIL: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

pub struct Outcome {
    pub exit_code: i32,
    pub output: String,
}

fn input_error(msg: impl Into<String>) -> Outcome {
    Outcome {
        exit_code: EXIT_INPUT_ERROR,
        output: format!("error: {}\n", msg.into()),
    }
}

fn math_failure(msg: &str, reports: &[IdentityReport]) -> Outcome {
    let mut output = format!("precondition failed: {msg}\n");
    for r in reports.iter().filter(|r| !r.holds) {
        output.push_str(&format!("  [FAIL] {}\n", r.identity_id));
    }
    Outcome {
        exit_code: EXIT_MATH_FAIL,
        output,
    }
}

fn from_kernel_error(e: KernelError) -> Outcome {
    match e {
        KernelError::Precondition { message, reports } => math_failure(&message, &reports),
        other => input_error(other.to_string()),
    }
}

macro_rules! doc_try {
    ($expr:expr) => {
        match $expr {
            Ok(v) => v,
            Err(e) => return input_error(e.to_string()),
        }
    };
}

macro_rules! kernel_try {
    ($expr:expr) => {
        match $expr {
            Ok(v) => v,
            Err(e) => return from_kernel_error(e),
        }
    };
}

fn require<'a>(opt: &'a Option<String>, what: &str) -> std::result::Result<&'a str, Outcome> {
    opt.as_deref()
        .ok_or_else(|| input_error(format!("this suite requires {what}")))
}

pub struct VerifyArgs {
    pub file: PathBuf,
    pub object: String,
    pub suite: String,
    pub algebra: Option<String>,
    pub delta: Option<String>,
    pub comul: Option<String>,
    pub map: Option<String>,
    pub product: Option<String>,
    pub r: Option<String>,
    pub split: Option<usize>,
    pub format: OutputFormat,
}

pub fn cmd_verify(args: &VerifyArgs) -> Outcome {
    let doc = doc_try!(WorkspaceDocument::load(&args.file));
    let subject = format!("{} ({})", args.object, args.suite);

    // class suites on algebras
    if let Some(class) = ClassId::parse(&args.suite) {
        let algebra = doc_try!(doc.algebra(&args.object));
        let reports = kernel_try!(check_class(algebra, class));
        let labels = algebra.basis_labels().to_vec();
        return finish(args.format, "verify", &subject, &reports, Some(&labels));
    }
    // form predicates
    if let Some(predicate) = FormPredicate::parse(&args.suite) {
        let form = doc_try!(doc.form(&args.object));
        let algebra_name = match require(&args.algebra, "--algebra") {
            Ok(n) => n,
            Err(o) => return o,
        };
        let algebra = doc_try!(doc.algebra(algebra_name));
        let report = kernel_try!(check_form(algebra, form, predicate));
        let labels = algebra.basis_labels().to_vec();
        return finish(args.format, "verify", &subject, &[report], Some(&labels));
    }
    match args.suite.as_str() {
        "derivation" => {
            let algebra = doc_try!(doc.algebra(&args.object));
            let map_name = match require(&args.map, "--map") {
                Ok(n) => n,
                Err(o) => return o,
            };
            let map = doc_try!(doc.linear_map(map_name));
            let product = match args.product.as_deref().and_then(ProductName::parse) {
                Some(p) => p,
                None => return input_error("--product must name a product"),
            };
            let report = kernel_try!(check_derivation(algebra, product, map));
            let labels = algebra.basis_labels().to_vec();
            finish(args.format, "verify", &subject, &[report], Some(&labels))
        }
        "apl-coalgebra" => {
            let cop = doc_try!(doc.coproduct(&args.object));
            let reports = apl_coalgebra_suite(cop).run();
            finish(args.format, "verify", &subject, &reports, None)
        }
        "cocomm-coassoc" => {
            let cop = doc_try!(doc.coproduct(&args.object));
            let reports = cocomm_coassoc_suite(cop).run();
            finish(args.format, "verify", &subject, &reports, None)
        }
        "aplp-coalgebra" => {
            let delta = doc_try!(doc.coproduct(&args.object));
            let comul_name = match require(&args.comul, "--comul") {
                Ok(n) => n,
                Err(o) => return o,
            };
            let comul = doc_try!(doc.coproduct(comul_name));
            let reports = kernel_try!(aplp_coalgebra_suite(comul, delta)).run();
            finish(args.format, "verify", &subject, &reports, None)
        }
        "apl-bialgebra" | "comm-cocomm-inf" | "aplp-bialgebra" => {
            let algebra = doc_try!(doc.algebra(&args.object));
            let kind = match args.suite.as_str() {
                "apl-bialgebra" => BialgebraKind::Apl,
                "comm-cocomm-inf" => BialgebraKind::CommCocommInf,
                _ => BialgebraKind::Aplp,
            };
            let delta = match &args.delta {
                Some(n) => Some(doc_try!(doc.coproduct(n)).clone()),
                None => None,
            };
            let comul = match &args.comul {
                Some(n) => Some(doc_try!(doc.coproduct(n)).clone()),
                None => None,
            };
            let reports = kernel_try!(check_bialgebra(
                algebra,
                delta.as_ref(),
                comul.as_ref(),
                kind
            ));
            let labels = algebra.basis_labels().to_vec();
            finish(args.format, "verify", &subject, &reports, Some(&labels))
        }
        "one-cocycle" => {
            let algebra = doc_try!(doc.algebra(&args.object));
            let delta_name = match require(&args.delta, "--delta") {
                Ok(n) => n,
                Err(o) => return o,
            };
            let delta = doc_try!(doc.coproduct(delta_name));
            let report = kernel_try!(check_one_cocycle(algebra, delta));
            let labels = algebra.basis_labels().to_vec();
            finish(args.format, "verify", &subject, &[report], Some(&labels))
        }
        "manin-lie" | "manin-tpa" => {
            let algebra = doc_try!(doc.algebra(&args.object));
            let half = match args.split {
                Some(n) => n,
                None => return input_error("--split must give the dimension of the first half"),
            };
            let kind = if args.suite == "manin-lie" {
                ManinKind::Lie2Cocycle
            } else {
                ManinKind::Tpa
            };
            let reports = kernel_try!(check_manin_triple(
                algebra,
                (half, algebra.dim().saturating_sub(half)),
                kind
            ));
            let labels = algebra.basis_labels().to_vec();
            finish(args.format, "verify", &subject, &reports, Some(&labels))
        }
        "o-operator-forms" => {
            let algebra = doc_try!(doc.algebra(&args.object));
            let r_name = match require(&args.r, "--r") {
                Ok(n) => n,
                Err(o) => return o,
            };
            let r = doc_try!(doc.two_tensor(r_name));
            let reports = kernel_try!(check_o_operator_forms(algebra, r));
            let labels = algebra.basis_labels().to_vec();
            finish(args.format, "verify", &subject, &reports, Some(&labels))
        }
        "coboundary-apl" | "coboundary-aplp" => {
            let algebra = doc_try!(doc.algebra(&args.object));
            let r_name = match require(&args.r, "--r") {
                Ok(n) => n,
                Err(o) => return o,
            };
            let r = doc_try!(doc.two_tensor(r_name));
            let kind = if args.suite == "coboundary-apl" {
                CoboundaryKind::Apl
            } else {
                CoboundaryKind::Aplp
            };
            let reports = kernel_try!(check_coboundary_conditions(algebra, r, kind));
            let labels = algebra.basis_labels().to_vec();
            finish(args.format, "verify", &subject, &reports, Some(&labels))
        }
        other => input_error(format!("unknown suite {other:?}")),
    }
}

fn finish(
    format: OutputFormat,
    command: &str,
    subject: &str,
    reports: &[IdentityReport],
    labels: Option<&[String]>,
) -> Outcome {
    let rendered = render(format, command, subject, reports, labels, None);
    Outcome {
        exit_code: if rendered.ok {
            EXIT_PASS
        } else {
            EXIT_MATH_FAIL
        },
        output: rendered.text,
    }
}

pub struct ConstructArgs {
    pub file: PathBuf,
    pub recipe: String,
    pub name: String,
    pub algebra: Option<String>,
    pub dual: Option<String>,
    pub map: Option<String>,
    pub form: Option<String>,
    pub r: Option<String>,
    pub kind: Option<String>,
    pub rep: Option<String>,
    pub variant: Option<String>,
    pub product: Option<String>,
    pub coproduct: Option<String>,
    pub out: PathBuf,
    pub format: OutputFormat,
}

fn parse_rep_kind(s: &str) -> Option<RepKind> {
    match s {
        "lie" => Some(RepKind::Lie),
        "comm-assoc" => Some(RepKind::CommAssoc),
        "apl" => Some(RepKind::Apl),
        "tpa" => Some(RepKind::Tpa),
        "aplp" => Some(RepKind::Aplp),
        _ => None,
    }
}

pub fn cmd_construct(args: &ConstructArgs) -> Outcome {
    let mut doc = doc_try!(WorkspaceDocument::load(&args.file));
    let mut provenance_inputs: Vec<String> = Vec::new();
    let mut collect = |name: &str| provenance_inputs.push(name.to_string());
    let mut summary: Vec<String> = Vec::new();

    macro_rules! algebra_arg {
        ($field:expr, $flag:literal) => {{
            let name = match require($field, $flag) {
                Ok(n) => n,
                Err(o) => return o,
            };
            collect(name);
            doc_try!(doc.algebra(name)).clone()
        }};
    }

    match args.recipe.as_str() {
        "witt-lie" | "apl-from-derivation" | "pre-apl-from-zinbiel" | "pre-aplp-from-zinbiel" => {
            let algebra = algebra_arg!(&args.algebra, "--algebra");
            let map_name = match require(&args.map, "--map") {
                Ok(n) => n,
                Err(o) => return o,
            };
            collect(map_name);
            let map = doc_try!(doc.linear_map(map_name)).clone();
            let result = match args.recipe.as_str() {
                "witt-lie" => witt_lie(&algebra, &map),
                "apl-from-derivation" => apl_from_derivation(&algebra, &map),
                "pre-apl-from-zinbiel" => pre_apl_from_zinbiel(&algebra, &map),
                _ => pre_aplp_from_zinbiel(&algebra, &map),
            };
            let out = kernel_try!(result);
            summary.push(format!("algebra {} (dim {})", args.name, out.dim()));
            doc.algebras.insert(
                args.name.clone(),
                (out, Some(prov(&args.recipe, &provenance_inputs))),
            );
        }
        "commutator" | "pre-apl-sum" | "zinbiel-symmetrization" => {
            let algebra = algebra_arg!(&args.algebra, "--algebra");
            let out = kernel_try!(match args.recipe.as_str() {
                "commutator" => commutator(&algebra),
                "pre-apl-sum" => pre_apl_sum(&algebra),
                _ => zinbiel_symmetrization(&algebra),
            });
            summary.push(format!("algebra {} (dim {})", args.name, out.dim()));
            doc.algebras.insert(
                args.name.clone(),
                (out, Some(prov(&args.recipe, &provenance_inputs))),
            );
        }
        "induce-from-2cocycle" => {
            let algebra = algebra_arg!(&args.algebra, "--algebra");
            let form_name = match require(&args.form, "--form") {
                Ok(n) => n,
                Err(o) => return o,
            };
            collect(form_name);
            let form = doc_try!(doc.form(form_name)).clone();
            let out = kernel_try!(induce_anti_pre_lie(&algebra, &form));
            summary.push(format!("algebra {} (dim {})", args.name, out.dim()));
            doc.algebras.insert(
                args.name.clone(),
                (out, Some(prov(&args.recipe, &provenance_inputs))),
            );
        }
        "semidirect" => {
            let algebra = algebra_arg!(&args.algebra, "--algebra");
            let kind = match args.kind.as_deref().and_then(parse_rep_kind) {
                Some(k) => k,
                None => return input_error("--kind must be lie|comm-assoc|apl|tpa|aplp"),
            };
            let representation = kernel_try!(adjoint(&algebra, kind));
            let representation = match args.rep.as_deref().unwrap_or("adjoint") {
                "adjoint" => representation,
                "dual-adjoint" => kernel_try!(dualize(&representation)),
                other => return input_error(format!("unknown --rep {other:?}")),
            };
            let out = kernel_try!(semidirect_product(&representation));
            summary.push(format!("algebra {} (dim {})", args.name, out.dim()));
            doc.algebras.insert(
                args.name.clone(),
                (out, Some(prov(&args.recipe, &provenance_inputs))),
            );
        }
        "double-from-matched-pair" => {
            let algebra = algebra_arg!(&args.algebra, "--algebra");
            let dual = algebra_arg!(&args.dual, "--dual");
            let kind = match args.kind.as_deref().and_then(parse_rep_kind) {
                Some(k) => k,
                None => return input_error("--kind must be lie|comm-assoc|apl|tpa|aplp"),
            };
            let mp = kernel_try!(standard_pair_from_dual(&algebra, &dual, kind));
            let out = kernel_try!(build_double(&mp));
            summary.push(format!("algebra {} (dim {})", args.name, out.dim()));
            doc.algebras.insert(
                args.name.clone(),
                (out, Some(prov(&args.recipe, &provenance_inputs))),
            );
        }
        "canonical-r" => {
            let algebra = algebra_arg!(&args.algebra, "--algebra");
            let variant = args.variant.as_deref().unwrap_or("from-pre-apl");
            let source = match variant {
                "from-pre-apl" => CanonicalSource::FromPreApl(&algebra),
                "from-pre-aplp" => CanonicalSource::FromPreAplp(&algebra),
                other => return input_error(format!("unknown --variant {other:?}")),
            };
            let (ambient, r) = kernel_try!(canonical_r(source));
            let r_name = format!("{}-r", args.name);
            summary.push(format!(
                "algebra {} (dim {}), two-tensor {r_name}",
                args.name,
                ambient.dim()
            ));
            let meta = prov(&args.recipe, &provenance_inputs);
            doc.algebras
                .insert(args.name.clone(), (ambient, Some(meta.clone())));
            doc.two_tensors.insert(r_name, (r, Some(meta)));
        }
        "coboundary-coproducts" => {
            let algebra = algebra_arg!(&args.algebra, "--algebra");
            let r_name = match require(&args.r, "--r") {
                Ok(n) => n,
                Err(o) => return o,
            };
            collect(r_name);
            let r = doc_try!(doc.two_tensor(r_name)).clone();
            let (delta, comul) = kernel_try!(coboundary_coproducts(&algebra, &r));
            let meta = prov(&args.recipe, &provenance_inputs);
            if let Some(d) = delta {
                let name = format!("{}-delta", args.name);
                summary.push(format!("coproduct {name}"));
                doc.coproducts.insert(name, (d, Some(meta.clone())));
            }
            if let Some(c) = comul {
                let name = format!("{}-comul", args.name);
                summary.push(format!("coproduct {name}"));
                doc.coproducts.insert(name, (c, Some(meta)));
            }
        }
        "dualize" => {
            let meta = |inputs: &[String]| Some(prov("dualize", inputs));
            match (&args.algebra, &args.coproduct) {
                (Some(algebra_name), None) => {
                    collect(algebra_name);
                    let algebra = doc_try!(doc.algebra(algebra_name));
                    let product = match args.product.as_deref().and_then(ProductName::parse) {
                        Some(p) => p,
                        None => return input_error("--product must name the product to dualize"),
                    };
                    let tensor = kernel_try!(algebra.product(product)).clone();
                    let cop = kernel_try!(product_to_coproduct(&tensor));
                    summary.push(format!("coproduct {}", args.name));
                    doc.coproducts
                        .insert(args.name.clone(), (cop, meta(&provenance_inputs)));
                }
                (None, Some(cop_name)) => {
                    collect(cop_name);
                    let cop = doc_try!(doc.coproduct(cop_name)).clone();
                    let product = match args.product.as_deref().and_then(ProductName::parse) {
                        Some(p) => p,
                        None => return input_error("--product names the dual product slot"),
                    };
                    let algebra = kernel_try!(dual_presentation(cop.dim(), &[(product, &cop)]));
                    summary.push(format!("algebra {} (dim {})", args.name, algebra.dim()));
                    doc.algebras
                        .insert(args.name.clone(), (algebra, meta(&provenance_inputs)));
                }
                _ => {
                    return input_error(
                        "dualize needs exactly one of --algebra (with --product) or --coproduct",
                    )
                }
            }
        }
        other => return input_error(format!("unknown recipe {other:?}")),
    }

    doc_try!(doc.save(&args.out));
    let output = match args.format {
        OutputFormat::Text => format!(
            "constructed: {}\nwrote {}\n",
            summary.join(", "),
            args.out.display()
        ),
        OutputFormat::Structured => {
            serde_json::to_string_pretty(&serde_json::json!({
                "schema_version": crate::output::REPORT_SCHEMA_VERSION,
                "command": "construct",
                "recipe": args.recipe,
                "constructed": summary,
                "out": args.out.display().to_string(),
            }))
            .unwrap()
                + "\n"
        }
    };
    Outcome {
        exit_code: EXIT_PASS,
        output,
    }
}

fn prov(recipe: &str, inputs: &[String]) -> Provenance {
    Provenance {
        recipe: recipe.to_string(),
        inputs: inputs.to_vec(),
    }
}

pub struct CheckYbeArgs {
    pub file: PathBuf,
    pub algebra: String,
    pub r: String,
    pub kind: String,
    pub format: OutputFormat,
}

pub fn cmd_check_ybe(args: &CheckYbeArgs) -> Outcome {
    let doc = doc_try!(WorkspaceDocument::load(&args.file));
    let algebra = doc_try!(doc.algebra(&args.algebra));
    let r = doc_try!(doc.two_tensor(&args.r));
    let tensors: Vec<(&str, aplkit::Tensor)> = match args.kind.as_str() {
        "apl" => vec![("T(r)", kernel_try!(compute_t(algebra, r)))],
        "aybe" => vec![("A(r)", kernel_try!(compute_a(algebra, r)))],
        "aplp" => vec![
            ("T(r)", kernel_try!(compute_t(algebra, r))),
            ("A(r)", kernel_try!(compute_a(algebra, r))),
        ],
        other => return input_error(format!("unknown kind {other:?} (apl|aybe|aplp)")),
    };
    let mut all_vanish = true;
    let mut lines = Vec::new();
    let mut details = Vec::new();
    for (label, tensor) in &tensors {
        match tensor.first_nonzero() {
            None => {
                lines.push(format!("{label} vanishes"));
                details.push(serde_json::json!({
                    "tensor": label, "vanishes": true, "first_nonzero": null
                }));
            }
            Some((idx, value)) => {
                all_vanish = false;
                lines.push(format!("{label} is nonzero at {idx:?}: {value}"));
                details.push(serde_json::json!({
                    "tensor": label,
                    "vanishes": false,
                    "first_nonzero": {"index": idx, "value": value.to_string()},
                }));
            }
        }
    }
    let output = match args.format {
        OutputFormat::Text => format!(
            "check-ybe {} ({} against {})\n{}\nresult: {}\n",
            args.kind,
            args.r,
            args.algebra,
            lines.join("\n"),
            if all_vanish { "PASS" } else { "FAIL" }
        ),
        OutputFormat::Structured => {
            serde_json::to_string_pretty(&serde_json::json!({
                "schema_version": crate::output::REPORT_SCHEMA_VERSION,
                "command": "check-ybe",
                "kind": args.kind,
                "algebra": args.algebra,
                "r": args.r,
                "ok": all_vanish,
                "tensors": details,
            }))
            .unwrap()
                + "\n"
        }
    };
    Outcome {
        exit_code: if all_vanish {
            EXIT_PASS
        } else {
            EXIT_MATH_FAIL
        },
        output,
    }
}

pub fn cmd_report(file: &Path, format: OutputFormat) -> Outcome {
    let doc = doc_try!(WorkspaceDocument::load(file));
    let inventory = doc.inventory();
    let output = match format {
        OutputFormat::Text => {
            let mut s = format!("workspace {} (format_version 1)\n", file.display());
            for line in &inventory {
                s.push_str(&format!("  {line}\n"));
            }
            s
        }
        OutputFormat::Structured => {
            serde_json::to_string_pretty(&serde_json::json!({
                "schema_version": crate::output::REPORT_SCHEMA_VERSION,
                "command": "report",
                "file": file.display().to_string(),
                "objects": inventory,
            }))
            .unwrap()
                + "\n"
        }
    };
    Outcome {
        exit_code: EXIT_PASS,
        output,
    }
}
