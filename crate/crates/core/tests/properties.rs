use morpholattice::logic::{parse_formula, Formula};
use morpholattice::{
    dilate, erode, make_lattice, ForgetMode, Graph, Hypergraph, Lattice, StructuringElement,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph(n: usize, mask: u32) -> Graph {
    let vs: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut es = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                es.push((vs[i].clone(), vs[j].clone()));
            }
            bit += 1;
        }
    }
    Graph::undirected(vs, es).unwrap()
}

fn lattice_strategy() -> impl Strategy<Value = Lattice> {
    prop_oneof![
        (1usize..5, any::<u32>(), any::<bool>()).prop_map(|(n, mask, edges)| {
            let mode = if edges { ForgetMode::Edges } else { ForgetMode::Vertices };
            make_lattice(graph(n, mask), mode).unwrap()
        }),
        (1usize..5, prop::collection::vec(prop::collection::btree_set(0usize..4, 1..3), 0..3), any::<bool>())
            .prop_map(|(n, edges, by_edges)| {
                let vs: Vec<String> = (0..n).map(|i| i.to_string()).collect();
                let mut seen = std::collections::BTreeSet::new();
                let hs: Vec<(String, Vec<String>)> = edges
                    .into_iter()
                    .map(|s| s.into_iter().filter(|&x| x < n).map(|x| x.to_string()).collect::<Vec<_>>())
                    .filter(|m| !m.is_empty() && seen.insert(m.clone()))
                    .enumerate()
                    .map(|(i, m)| (format!("h{i}"), m))
                    .collect();
                let mode = if by_edges { ForgetMode::Hyperedges } else { ForgetMode::Vertices };
                make_lattice(Hypergraph::new(vs, hs).unwrap(), mode).unwrap()
            }),
    ]
}

fn formula_strategy() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        Just(Formula::Top),
        Just(Formula::Bot),
        "[pqr]".prop_map(Formula::prop),
    ];
    leaf.prop_recursive(6, 64, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            inner.clone().prop_map(Formula::boxed),
            inner.clone().prop_map(Formula::diamond),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::implies(a, b)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adjunction_on_random_structures(l in lattice_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = StructuringElement::random(&l, &mut rng);
        for _ in 0..16 {
            let d = l.random_subobject(&mut rng);
            let e = l.random_subobject(&mut rng);
            let lhs = l.leq(&dilate(&l, &b, &d).unwrap(), &e).unwrap();
            let rhs = l.leq(&d, &erode(&l, &b, &e).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn heyting_laws(l in lattice_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..16 {
            let a = l.random_subobject(&mut rng);
            let b = l.random_subobject(&mut rng);
            let c = l.random_subobject(&mut rng);
            let imp = l.exponential(&b, &a).unwrap();
            prop_assert!(l.leq(&l.meet(&a, &imp).unwrap(), &b).unwrap());
            prop_assert_eq!(
                l.leq(&c, &imp).unwrap(),
                l.leq(&l.meet(&c, &a).unwrap(), &b).unwrap()
            );
            let na = l.complement(&a).unwrap();
            prop_assert_eq!(l.meet(&a, &na).unwrap(), l.bottom());
            if l.is_boolean() {
                prop_assert_eq!(l.join(&a, &na).unwrap(), l.top());
            }
        }
    }

    #[test]
    fn opening_and_closing_bracket(l in lattice_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = StructuringElement::random(&l, &mut rng);
        let d = l.random_subobject(&mut rng);
        let open = dilate(&l, &b, &erode(&l, &b, &d).unwrap()).unwrap();
        let close = erode(&l, &b, &dilate(&l, &b, &d).unwrap()).unwrap();
        prop_assert!(l.leq(&open, &d).unwrap());
        prop_assert!(l.leq(&d, &close).unwrap());
    }

    #[test]
    fn cover_gives_extensivity(l in lattice_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sgt = StructuringElement::identity(&l);
        let b = StructuringElement::random(&l, &mut rng);
        let b = match sgt {
            Ok(s) => StructuringElement::sup(&l, &[&b, &s]).unwrap(),
            Err(_) => b,
        };
        if b.is_covered() {
            let d = l.random_subobject(&mut rng);
            prop_assert!(l.leq(&erode(&l, &b, &d).unwrap(), &d).unwrap());
            prop_assert!(l.leq(&d, &dilate(&l, &b, &d).unwrap()).unwrap());
        }
    }

    #[test]
    fn formulas_round_trip(f in formula_strategy()) {
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
    }
}
