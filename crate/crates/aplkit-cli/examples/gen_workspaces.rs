//! Regenerates the workspace files shipped under `workspaces/`.
//!
//! Usage: `cargo run -p aplkit-cli --example gen_workspaces [DIR]`

use aplkit::{catalog, AlgebraPresentation, ProductName, Scalar, Tensor};
use aplkit_cli::document::{Provenance, WorkspaceDocument};
use std::path::PathBuf;

fn main() {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("workspaces"));
    std::fs::create_dir_all(&dir).expect("create output dir");

    // truncated polynomial algebras with their derivations and pairing
    let mut doc = WorkspaceDocument::default();
    for n in 2..=5 {
        let name = format!("A{n}");
        doc.algebras.insert(
            name.clone(),
            (catalog::truncated_polynomial_algebra(n), None),
        );
        doc.linear_maps
            .insert(format!("P_euler_{n}"), (catalog::euler_derivation(n), None));
        doc.linear_maps.insert(
            format!("P_nilpotent_{n}"),
            (catalog::nilpotent_derivation(n), None),
        );
        doc.forms
            .insert(format!("frobenius_{n}"), (catalog::frobenius_form(n), None));
    }
    // a deliberately broken copy of A3: one structure constant perturbed
    let mut broken = catalog::truncated_polynomial_algebra(3);
    let mut t = broken.product(ProductName::Dot).unwrap().clone();
    t.set(&[1, 1, 0], Scalar::one());
    broken.set_product(ProductName::Dot, t).unwrap();
    doc.algebras.insert(
        "A3_broken".into(),
        (
            broken,
            Some(Provenance {
                recipe: "perturbation".into(),
                inputs: vec!["A3".into()],
            }),
        ),
    );
    // a zero two-tensor and a simple skew one on dimension 3
    doc.two_tensors
        .insert("r_zero_3".into(), (aplkit::TwoTensor::zero(3), None));
    let mut skew = aplkit::TwoTensor::zero(3);
    skew.set(0, 1, Scalar::one());
    skew.set(1, 0, Scalar::from_int(-1));
    doc.two_tensors.insert("r_skew_3".into(), (skew, None));
    doc.save(&dir.join("truncated.toml")).unwrap();
    println!("wrote {}", dir.join("truncated.toml").display());

    // Zinbiel examples with their gradings
    let mut doc = WorkspaceDocument::default();
    doc.algebras
        .insert("Z2".into(), (catalog::two_dim_zinbiel(), None));
    doc.linear_maps.insert(
        "P_grading_2".into(),
        (catalog::two_dim_zinbiel_grading(), None),
    );
    doc.algebras
        .insert("Z3".into(), (catalog::half_shuffle_zinbiel(3), None));
    doc.linear_maps
        .insert("P_grading_3".into(), (catalog::grading_derivation(3), None));
    for (zin, grading, out) in [
        ("Z2", "P_grading_2", "preapl2"),
        ("Z3", "P_grading_3", "preapl3"),
    ] {
        let z = doc.algebra(zin).unwrap().clone();
        let p = doc.linear_map(grading).unwrap().clone();
        let pre = aplkit::pre_aplp_from_zinbiel(&z, &p).unwrap();
        doc.algebras.insert(
            out.into(),
            (
                pre,
                Some(Provenance {
                    recipe: "pre-aplp-from-zinbiel".into(),
                    inputs: vec![zin.into(), grading.into()],
                }),
            ),
        );
    }
    doc.save(&dir.join("zinbiel.toml")).unwrap();
    println!("wrote {}", dir.join("zinbiel.toml").display());

    // a tiny hand-written template showing the format
    let mut doc = WorkspaceDocument::default();
    let mut dot = Tensor::zeros(&[2, 2, 2]);
    dot.set(&[0, 0, 0], Scalar::one());
    dot.set(&[0, 1, 1], Scalar::one());
    dot.set(&[1, 0, 1], Scalar::one());
    let a2 = AlgebraPresentation::new(2, Some(vec!["1".into(), "t".into()]))
        .unwrap()
        .with_product(ProductName::Dot, dot)
        .unwrap();
    doc.algebras.insert("example".into(), (a2, None));
    doc.save(&dir.join("template.toml")).unwrap();
    println!("wrote {}", dir.join("template.toml").display());
}
