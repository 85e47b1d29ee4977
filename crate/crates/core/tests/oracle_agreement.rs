mod common;

use hopflab::{
    dagger, dual_hopf, g_indecomposables, g_primitives, group_michaelis_verify, indecomposables, left_integrals,
    michaelis_verify, primitives, zoo, FieldSpec, FiniteGroup,
};
use proptest::prelude::*;

fn group(kind: u8, n: usize) -> FiniteGroup {
    match kind {
        0 => FiniteGroup::cyclic(n),
        _ => FiniteGroup::symmetric(n.min(3)),
    }
}

fn field(p: u64) -> FieldSpec {
    if p == 0 {
        FieldSpec::Rationals
    } else {
        FieldSpec::prime(p).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn group_and_function_algebras(kind in 0u8..2, n in 1usize..6, p in prop_oneof![Just(0u64), Just(2), Just(3), Just(5)]) {
        let g = group(kind, n);
        let f = field(p);
        for h in [zoo::group_algebra(&g, f), zoo::function_hopf(&g, f)] {
            let prim = primitives(&h).unwrap();
            prop_assert_eq!(common::subspace_rows(&prim.space), common::primitives(&h));
            let q = indecomposables(&h).unwrap();
            prop_assert_eq!(common::subspace_rows(&q.quotient.subspace), common::indecomposable_kernel(&h));
            let ints = left_integrals(&h).unwrap();
            prop_assert_eq!(common::subspace_rows(&ints), common::left_integrals(&h));
            let cert = michaelis_verify(&h).unwrap();
            prop_assert!(cert.passed);
            let dual = dual_hopf(&h).unwrap();
            prop_assert_eq!(cert.dim_primitives_of_dual, common::primitives(&dual).len());
        }
    }

    #[test]
    fn diagonal_group_algebras(kind in 0u8..2, n in 1usize..5, p in prop_oneof![Just(0u64), Just(2), Just(3)]) {
        let g = group(kind, n);
        let h = zoo::diagonal_group_algebra(&g, field(p));
        let hd = dagger(&h).unwrap();
        let gi = g_indecomposables(&h).unwrap();
        let kernel = common::indecomposable_kernel(&gi.total);
        let z = common::zero_of(&gi.total.mult);
        for x in g.elements() {
            let pg = g_primitives(&hd, x).unwrap();
            prop_assert_eq!(common::subspace_rows(&pg.space), common::g_primitives(&hd, x));
            let expected = common::kernel_plus_block(&kernel, gi.offsets[x], 1, gi.total.carrier.dim, &z);
            prop_assert_eq!(common::preimage(&gi.q.pi, &gi.per_g[x]), expected);
        }
        prop_assert!(group_michaelis_verify(&h).unwrap().passed);
    }
}

#[test]
fn truncated_polynomials_and_super_examples() {
    let mut objects: Vec<_> = [2, 3, 5, 7]
        .into_iter()
        .map(|p| zoo::truncated_poly(p).unwrap())
        .collect();
    objects.push(zoo::exterior_super(1));
    objects.push(zoo::exterior_super(2));
    objects.push(zoo::exterior_super(3));
    objects.push(zoo::sweedler4(FieldSpec::prime(3).unwrap()).unwrap());
    for h in objects {
        let prim = primitives(&h).unwrap();
        assert_eq!(common::subspace_rows(&prim.space), common::primitives(&h));
        assert_eq!(common::indecomposables_dim(&h), indecomposables(&h).unwrap().dim());
        assert!(michaelis_verify(&h).unwrap().passed);
    }
}

#[test]
fn cyclic_prime_order_over_its_own_field() {
    // the dimensions of Q_g for F_p[Z/p] viewed diagonally: 0 at the identity, 1 elsewhere
    for p in [2u64, 3, 5, 7] {
        let h = zoo::diagonal_group_algebra(&FiniteGroup::cyclic(p as usize), FieldSpec::prime(p).unwrap());
        let gi = g_indecomposables(&h).unwrap();
        let kernel = common::indecomposable_kernel(&gi.total);
        let oracle_dims: Vec<usize> = (0..p as usize)
            .map(|g| {
                let z = common::zero_of(&gi.total.mult);
                common::kernel_plus_block(&kernel, g, 1, p as usize, &z).len() - kernel.len()
            })
            .collect();
        let cert = group_michaelis_verify(&h).unwrap();
        assert_eq!(cert.dims_q, oracle_dims);
        assert_eq!(cert.dims_p, oracle_dims);
    }
}
