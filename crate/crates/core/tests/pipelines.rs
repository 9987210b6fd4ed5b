use llvkit::graded::{exterior_algebra, invariants, surface_ring, tensor, truncated_polynomial, GroupActionOnAlgebra};
use llvkit::groupalg::{central_idempotents, FiniteGroup};
use llvkit::involution::{group_algebra_factor, skew_and_derived, InvolutionType};
use llvkit::lie::{killing_semisimple, minimal_ideals, orthogonal_algebra};
use llvkit::llv::{is_jordan_lefschetz, llv_algebra, llv_pre_g, restrict, verify_tensor_llv, LefschetzSampler};
use llvkit::quadform::mukai;
use llvkit::spinor::{sh_embedding_check, sym_dim};
use llvkit::{qi, Mat};

fn sampler() -> LefschetzSampler {
    LefschetzSampler::with_seed(5)
}

#[test]
fn abelian_surface_llv_is_so8() {
    let r = exterior_algebra(4);
    let res = llv_algebra(&r, &sampler()).unwrap();
    assert_eq!(res.algebra.dim(), 28);
    assert!(is_jordan_lefschetz(&res.algebra).unwrap());
    assert!(killing_semisimple(&res.algebra).1);
}

#[test]
fn surface_ring_llv_matches_mukai_orthogonal_algebra() {
    let b = Mat::diag(&[qi(1), qi(1), qi(-1), qi(-1)]);
    let r = surface_ring(&b).unwrap();
    let g = llv_algebra(&r, &sampler()).unwrap().algebra;
    assert_eq!(g.dim(), 15);
    let m = mukai(&b).unwrap();
    let so = orthogonal_algebra(m.space.gram());
    assert_eq!(so.dim(), 15);
    assert!(g.basis().iter().all(|x| {
        let f = m.space.gram();
        x.transpose().mul(f).add(&f.mul(x)).is_zero()
    }));
}

#[test]
fn tensor_of_truncated_rings_is_block_sum() {
    let x = truncated_polynomial(2);
    let rep = verify_tensor_llv(&x, &x, &sampler()).unwrap();
    assert!(rep.block_equal);
    assert_eq!((rep.dim_r, rep.dim_s, rep.dim_tensor), (3, 3, 6));
    let t = tensor(&x, &x);
    assert_eq!(t.dim(), 9);
}

#[test]
fn swap_quotient_of_four_dimensional_exterior_algebra() {
    let r = exterior_algebra(4);
    let g = FiniteGroup::cyclic(2);
    let swap = Mat::from_i64(4, 4, &[0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0]);
    let act = GroupActionOnAlgebra::on_exterior(g, &[Mat::identity(4), swap], &r).unwrap();
    let pre = llv_pre_g(&r, &act, &sampler()).unwrap();
    let (rg, inc) = invariants(&r, &act).unwrap();
    assert_eq!(rg.dim(), 8);
    let restricted = restrict(&pre.algebra, &inc).unwrap();
    let d = minimal_ideals(&restricted).unwrap();
    assert!(d.verify(&restricted));
    let mut dims = d.dims();
    dims.sort();
    assert_eq!(dims, vec![3, 3]);
}

#[test]
fn s3_group_algebra_factors() {
    let g = FiniteGroup::symmetric(3);
    let set = central_idempotents(&g);
    let mut seen = Vec::new();
    for i in 0..set.len() {
        let a = group_algebra_factor(&g, &set, i).unwrap();
        let (skew, _) = skew_and_derived(&a).unwrap();
        seen.push((a.dim(), skew.dim(), a.classify_type().unwrap()));
    }
    seen.sort_by_key(|s| s.0);
    assert_eq!(seen[0].0, 1);
    assert_eq!(seen[1].0, 1);
    // M₂(ℚ) with the transpose-like involution of an orthogonal form.
    assert_eq!(seen[2], (4, 1, InvolutionType::Orthogonal));
}

#[test]
fn sh_embedding_dimensions() {
    let b = Mat::diag(&[qi(1), qi(1), qi(-1)]);
    let r = sh_embedding_check(&b, 2).unwrap();
    assert!(r.passed());
    assert_eq!(r.sym_dim, sym_dim(5, 2));
    assert_eq!(r.harmonic_dim, sym_dim(5, 2) - 1);
}
