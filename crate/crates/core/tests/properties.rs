use proptest::prelude::*;

use sorklie::clique::{clique_number, max_clique, Graph};
use sorklie::groups::{
    nu_eval, parse_group_expr, ExtensionMode, FiniteOrder, GroupExpr, SolvableKind,
};
use sorklie::matrixcheck::{bracket_split_check, kronecker_sum, IntMatrix};
use sorklie::realforms::{catalog, complexification_type, nu_simple_value, RealForm};
use sorklie::roots::{build_root_system, inner_product, Family, Root, RootSystemType};
use sorklie::sork::{sork_exact, sork_formula, OrthogonalityGraph};

fn small_type() -> impl Strategy<Value = RootSystemType> {
    let types: Vec<RootSystemType> = RootSystemType::all_up_to(6);
    prop::sample::select(types)
}

fn root_pair() -> impl Strategy<Value = (RootSystemType, usize, usize)> {
    small_type().prop_flat_map(|t| {
        let n = build_root_system(t).len();
        (Just(t), 0..n, 0..n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn strong_orthogonality_ignores_sign((t, i, j) in root_pair()) {
        let phi = build_root_system(t);
        let (a, b) = (&phi.roots()[i], &phi.roots()[j]);
        let so = phi.is_strongly_orthogonal(a, b).unwrap();
        prop_assert_eq!(so, phi.is_strongly_orthogonal(&-a, b).unwrap());
        prop_assert_eq!(so, phi.is_strongly_orthogonal(a, &-b).unwrap());
        prop_assert_eq!(so, phi.is_strongly_orthogonal(b, a).unwrap());
    }

    #[test]
    fn cartan_integers((t, i, j) in root_pair()) {
        let phi = build_root_system(t);
        let (a, b) = (&phi.roots()[i], &phi.roots()[j]);
        let c = inner_product(a, b).unwrap() * 2 / inner_product(b, b).unwrap();
        prop_assert!(c.is_integer());
        prop_assert!((-3..=3).contains(c.numer()));
    }

    #[test]
    fn sums_and_differences((t, i, j) in root_pair()) {
        // a - b is a root whenever (a, b) > 0 and a != b
        let phi = build_root_system(t);
        let (a, b) = (&phi.roots()[i], &phi.roots()[j]);
        let ip = inner_product(a, b).unwrap();
        if a != b && ip > 0.into() {
            prop_assert!(phi.contains(&(a - b)));
        }
    }

    #[test]
    fn clique_solver_matches_brute_force(
        n in 1usize..=12,
        edges in prop::collection::vec(any::<bool>(), 66),
    ) {
        let mut g = Graph::new(n);
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if edges[k] {
                    g.add_edge(u, v);
                }
                k += 1;
            }
        }
        let best = (0u32..1 << n)
            .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>())
            .filter(|s| g.is_clique(s))
            .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)))
            .unwrap();
        prop_assert_eq!(max_clique(&g), best);
    }

    #[test]
    fn kronecker_trace(
        g in prop::collection::vec(-20i64..=20, 9),
        k in prop::collection::vec(-20i64..=20, 16),
    ) {
        let g = IntMatrix::from_rows(g.chunks(3).map(<[i64]>::to_vec).collect()).unwrap();
        let k = IntMatrix::from_rows(k.chunks(4).map(<[i64]>::to_vec).collect()).unwrap();
        let sum = kronecker_sum(&g, &k).unwrap();
        prop_assert_eq!(sum.trace().unwrap(), 4 * g.trace().unwrap() + 3 * k.trace().unwrap());
    }

    #[test]
    fn bracket_splits(
        s in 1usize..=4,
        t in 1usize..=4,
        entries in prop::collection::vec(-9i64..=9, 64),
    ) {
        let take = |offset: usize, n: usize| {
            IntMatrix::from_rows(
                (0..n).map(|i| entries[offset + i * n..offset + (i + 1) * n].to_vec()).collect(),
            )
            .unwrap()
        };
        let (g, g2) = (take(0, s), take(16, s));
        let (k, k2) = (take(32, t), take(48, t));
        prop_assert!(bracket_split_check(&g, &g2, &k, &k2).unwrap());
    }
}

#[test]
fn full_and_antipodal_graphs_agree() {
    for t in RootSystemType::all_up_to(4) {
        let phi = build_root_system(t);
        let full = clique_number(&OrthogonalityGraph::full(&phi).graph);
        let reduced = clique_number(&OrthogonalityGraph::antipodal(&phi).graph);
        assert_eq!(full, reduced, "{t}");
    }
}

#[test]
fn root_counts_and_positive_halves() {
    for t in RootSystemType::all_up_to(12) {
        let phi = build_root_system(t);
        let expected = match t.family() {
            Family::A => t.rank() * (t.rank() + 1),
            Family::B | Family::C => 2 * t.rank() * t.rank(),
            Family::D => 2 * t.rank() * (t.rank() - 1),
            Family::E => [72, 126, 240][t.rank() - 6],
            Family::F => 48,
            Family::G => 12,
        };
        assert_eq!(phi.len(), expected, "{t}");
        assert_eq!(phi.positive_roots().len() * 2, expected, "{t}");
    }
}

#[test]
fn simple_coordinates_have_one_sign() {
    for t in RootSystemType::all_up_to(8) {
        let phi = build_root_system(t);
        for r in phi.roots() {
            let c = phi
                .simple_coordinates(r)
                .expect("roots lie in the root lattice");
            assert!(
                c.iter().all(|&x| x >= 0) || c.iter().all(|&x| x <= 0),
                "{t}: {r}"
            );
        }
    }
}

#[test]
fn e8_inner_products() {
    let phi = build_root_system("E8".parse().unwrap());
    let allowed: Vec<_> = [-2, -1, 0, 1, 2]
        .map(num_rational::Rational64::from_integer)
        .into();
    for a in phi.roots() {
        for b in phi.roots() {
            assert!(allowed.contains(&inner_product(a, b).unwrap()));
        }
    }
}

#[test]
fn search_is_deterministic() {
    for name in ["E7", "D6", "F4", "A7"] {
        let phi = build_root_system(name.parse().unwrap());
        assert_eq!(sork_exact(&phi), sork_exact(&phi), "{name}");
    }
}

#[test]
fn strong_orthogonality_of_short_roots() {
    // e1, e2 in B2 are orthogonal but their sum is a root
    let phi = build_root_system("B2".parse().unwrap());
    let e1 = Root::from_coords(&[1, 0]);
    let e2 = Root::from_coords(&[0, 1]);
    assert!(!phi.is_strongly_orthogonal(&e1, &e2).unwrap());
}

#[test]
fn catalog_invariants() {
    for d in catalog() {
        let r = nu_simple_value(d).unwrap();
        let t = complexification_type(d).unwrap();
        assert!(r.nu >= 1, "{d}");
        assert!(r.nu <= sork_formula(t), "{d}");
        match d {
            RealForm::Compact(t) | RealForm::Split(t) => assert_eq!(r.nu, sork_formula(t), "{d}"),
            RealForm::So { p, q } => assert!(r.nu >= p / 2 + q / 2, "{d}"),
            _ => {}
        }
    }
}

fn atom() -> impl Strategy<Value = GroupExpr> {
    let forms = catalog();
    prop_oneof![
        prop::sample::select(forms).prop_map(GroupExpr::SimpleLie),
        (0usize..5).prop_map(|n| GroupExpr::Solvable(SolvableKind::Euclidean(n))),
        Just(GroupExpr::Solvable(SolvableKind::Integers)),
        Just(GroupExpr::Solvable(SolvableKind::Generic)),
        (1u64..10).prop_map(|n| GroupExpr::Finite(FiniteOrder::Known(n))),
        Just(GroupExpr::Finite(FiniteOrder::AtLeast3)),
    ]
}

fn expr() -> impl Strategy<Value = GroupExpr> {
    atom().prop_recursive(4, 24, 4, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 1..4).prop_map(GroupExpr::DirectProduct),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| GroupExpr::FreeProduct(Box::new(a), Box::new(b))),
            (
                inner.clone(),
                inner.clone(),
                prop::sample::select(vec![
                    ExtensionMode::Split,
                    ExtensionMode::Central,
                    ExtensionMode::General
                ])
            )
                .prop_map(|(k, q, mode)| GroupExpr::Extension {
                    kernel: Box::new(k),
                    quotient: Box::new(q),
                    mode,
                }),
            inner.prop_map(|e| GroupExpr::FiniteIndex(Box::new(e))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn printing_round_trips(e in expr()) {
        let text = e.to_string();
        let back = parse_group_expr(&text).unwrap();
        prop_assert_eq!(&back, &e, "{}", text);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn direct_products_add(a in expr(), b in expr(), n in 1usize..4) {
        if let (Ok(x), Ok(y)) = (nu_eval(&a), nu_eval(&b)) {
            let product = GroupExpr::DirectProduct(vec![a.clone(), b]);
            prop_assert_eq!(nu_eval(&product).unwrap(), x + y);
            let power = parse_group_expr(&format!("({a})^{n}")).unwrap();
            prop_assert_eq!(nu_eval(&power).unwrap(), n * x);
        }
    }

    #[test]
    fn finite_index_is_transparent(e in expr()) {
        let wrapped = GroupExpr::FiniteIndex(Box::new(e.clone()));
        prop_assert_eq!(nu_eval(&wrapped), nu_eval(&e));
    }
}
