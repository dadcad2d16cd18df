use std::collections::HashMap;

use flatcert::hilbert::{chi_graph, hilbert_polynomial, tabulate};
use flatcert::quadfam::{
    evaluate_family_at, family_ideal_j, gauss_graph_ideal, laksov_diagonal_matrices, random_rational,
    torus_action_check,
};
use flatcert::{BiPolynomial, ChartPoint, HilbertMethod, Ideal, Rational, TorusElement};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn same_ideal(a: &Ideal, b: &Ideal) -> bool {
    a.generators().iter().all(|g| b.contains(g).unwrap()) && b.generators().iter().all(|g| a.contains(g).unwrap())
}

/// Values for every variable of `f`'s ring: x/y from `xy`, parameters from `params`.
fn point_for(f: &BiPolynomial, xy: &HashMap<String, Rational>, params: &HashMap<String, Rational>) -> Vec<Rational> {
    f.universe().names().iter().map(|name| xy.get(name).or_else(|| params.get(name)).cloned().unwrap()).collect()
}

#[test]
fn nondegenerate_fibers_are_gauss_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=3 {
        let j = family_ideal_j(n);
        for _ in 0..2 {
            let p = ChartPoint::random(n, &vec![false; n], &mut rng);
            let fiber = evaluate_family_at(&j, &p).unwrap();
            let graph = gauss_graph_ideal(&p.quadric()).unwrap();
            assert!(same_ideal(&fiber, &graph), "n={n} point {p:?}");
        }
    }
}

#[test]
fn first_laksov_matrix_is_the_quadric_diagonal() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 1..=4 {
        let p = ChartPoint::random(n, &vec![false; n], &mut rng);
        let first = &laksov_diagonal_matrices(n)[0];
        assert_eq!(first.evaluate(p.d()).unwrap(), p.d1_diagonal());
    }
}

#[test]
fn specialization_commutes_with_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 1..=2 {
        let j = family_ideal_j(n);
        for mask in [vec![false; n], vec![true; n]] {
            let p = ChartPoint::random(n, &mask, &mut rng);
            let fiber = evaluate_family_at(&j, &p).unwrap();
            assert_eq!(fiber.generators().len(), j.generators().len());
            let params: HashMap<String, Rational> = p.param_values().into_iter().collect();
            for _ in 0..3 {
                let mut xy = HashMap::new();
                for k in 1..=n + 1 {
                    xy.insert(format!("x{k}"), random_rational(&mut rng, 7, 4));
                    xy.insert(format!("y{k}"), random_rational(&mut rng, 7, 4));
                }
                for (g, f) in j.generators().iter().zip(fiber.generators()) {
                    let lhs = g.eval(&point_for(g, &xy, &params)).unwrap();
                    let rhs = f.eval(&point_for(f, &xy, &params)).unwrap();
                    assert_eq!(lhs, rhs, "n={n} generator {g}");
                }
            }
        }
    }
}

#[test]
fn degenerate_fibers_keep_the_generic_polynomial() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let j = family_ideal_j(3);
    for mask in [[false, true, false], [true, true, true]] {
        let p = ChartPoint::random(3, &mask, &mut rng);
        let fiber = evaluate_family_at(&j, &p).unwrap();
        let poly = hilbert_polynomial(&fiber, 2, HilbertMethod::InitialIdealCount).unwrap();
        assert_eq!(poly, chi_graph(3), "point {p:?}");
    }
}

#[test]
fn torus_translates_have_equal_hilbert_functions() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let j = family_ideal_j(2);
    for mask in [[false, false], [false, true], [true, true]] {
        let p = ChartPoint::random(2, &mask, &mut rng);
        let c = TorusElement::random(2, &mut rng);
        let report = torus_action_check(&p, &c).unwrap();
        assert!(report.holds, "{report:?}");

        let cp = c.act(&p).unwrap();
        let a = tabulate(&evaluate_family_at(&j, &p).unwrap(), 0..=5, HilbertMethod::RankOracle).unwrap();
        let b = tabulate(&evaluate_family_at(&j, &cp).unwrap(), 0..=5, HilbertMethod::RankOracle).unwrap();
        assert_eq!(a.values, b.values);
    }
}
