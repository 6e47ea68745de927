use std::collections::BTreeSet;

use fc_core::arith::{delta_div, euler_phi, square_root, tri, triangle_root};
use fc_core::diagrams::{affine_diagram, automorphism_group, twisted_local_index};
use fc_core::endoscopy::{Base, ExtensionShape};
use fc_core::*;
use proptest::prelude::*;
use proptest::sample::select;

const PRIMES: [u64; 16] = [61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 137, 151, 179];

fn diagrams() -> Vec<AffineDiagram> {
    let mut out: Vec<AffineDiagram> = DynkinType::all_up_to(8).into_iter().map(affine_diagram).collect();
    for t in DynkinType::all_up_to(8) {
        for e in [2, 3] {
            out.extend(twisted_local_index(t, e).ok().filter(|d| d.twist() == e));
        }
    }
    out
}

/// A case that exists at the chosen q, with n drawn from its admissible ranks.
fn case() -> impl Strategy<Value = (GroupCase, QParam)> {
    (select(CaseId::ALL.to_vec()), 0usize..40, select(PRIMES.to_vec())).prop_filter_map(
        "case absent at q",
        |(id, k, p)| {
            let n = id.info().rank.ranks(200).nth(k)?;
            let q = QParam::new(p).ok()?;
            id.exists(q).then(|| (GroupCase::new(id, n).unwrap(), q))
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn order_is_antisymmetric((c, q) in case()) {
        let xs = enumerate_X(c, q).unwrap();
        let pts: BTreeSet<_> = xs.iter().filter_map(|x| x.label.ab()).collect();
        for &(b, k, h) in &pts {
            for &(b2, k2, h2) in pts.iter().filter(|p| p.0 == b) {
                let (x, y) = (Label::pair(b, k, h), Label::pair(b2, k2, h2));
                prop_assert!(order_le(&x, &y) || order_le(&y, &x));
                if order_le(&x, &y) && order_le(&y, &x) {
                    prop_assert_eq!((k, h), (k2, h2));
                }
            }
        }
    }

    #[test]
    fn phi_preserves_dimension((c, q) in case()) {
        let ys = enumerate_Y(c, q).unwrap();
        for x in enumerate_X(c, q).unwrap() {
            let y = phi(c, q, &x.label).unwrap();
            prop_assert!(ys.iter().any(|e| e.label == y && e.dim == x.mult));
        }
    }

    #[test]
    fn stable_part_is_bounded((c, q) in case()) {
        prop_assume!(c.info().is_quasi_split());
        prop_assert!(dim_fc_st(c, q).unwrap() <= dim_fc(c, q).unwrap());
    }

    #[test]
    fn depth_point_satisfies_affine_relation(
        pick in any::<prop::sample::Index>(),
        v in any::<prop::sample::Index>(),
        mask in any::<u16>(),
    ) {
        let all = diagrams();
        let d = pick.get(&all);
        let v = v.index(d.len());
        let parabolic: Vec<&str> = (0..d.len())
            .filter(|&i| i != v && mask >> i & 1 == 1)
            .map(|i| d.nodes()[i].as_str())
            .collect();
        let point = depth_point(&DepthQuery::new(d.clone(), &d.nodes()[v], &parabolic)).unwrap();
        let total: Rational = d.nodes().iter().enumerate().map(|(i, n)| Rational::from(d.mark(i)) * point[n]).sum();
        prop_assert_eq!(total, Rational::from(1));
    }

    #[test]
    fn automorphisms_preserve_marks(pick in any::<prop::sample::Index>()) {
        let all = diagrams();
        let d = pick.get(&all);
        for p in automorphism_group(d).elements {
            prop_assert!((0..d.len()).all(|i| d.mark(p[i]) == d.mark(i)));
        }
    }

    #[test]
    fn extension_bit_matches_count(
        base in select(vec![Base::F, Base::E0, Base::ERam]),
        shape in select(vec![
            ExtensionShape::CyclicN,
            ExtensionShape::DihedralOverQuadratic,
            ExtensionShape::Biquadratic,
            ExtensionShape::Cyclic4ContainingE,
        ]),
        n in 1u64..16,
        q in 2u64..2000,
    ) {
        let q = QParam::new(q).unwrap();
        if let Ok((bit, count)) = extension_exists(ExtensionQuery { base, shape, n, q }) {
            prop_assert!(bit <= 1);
            prop_assert_eq!(bit == 1, count > 0);
        }
    }

    #[test]
    fn q_minus_is_divisibility(q in 2u64..100_000, n in 1u64..60) {
        let q = QParam::new(q).unwrap();
        prop_assert_eq!(q.minus(n), delta_div(n, q.get() as i64 - 1).unwrap());
        prop_assert_eq!(q.plus(n), delta_div(n, q.get() as i64 + 1).unwrap());
    }

    #[test]
    fn triangle_roots_invert(i in 0u64..100_000) {
        prop_assert_eq!(triangle_root(tri(i)), Some(i));
        prop_assert_eq!(square_root(i * i), Some(i));
        if i > 0 {
            prop_assert_eq!(triangle_root(tri(i) + 1), None);
        }
    }

    #[test]
    fn euler_phi_counts_units(n in 1u64..500) {
        let units = (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count() as u64;
        prop_assert_eq!(euler_phi(n).unwrap(), units);
    }
}
