use flatcert::groebner::{buchberger, is_groebner_basis};
use flatcert::hilbert::{diagonal_hilbert_function, hilbert_polynomial, tabulate};
use flatcert::polyring::monomials_of_bidegree;
use flatcert::{
    BiPolynomial, HilbertMethod, HilbertPolynomialQ, Ideal, MonomialOrderSpec, OrderKind, Rational, VariableUniverse,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// A bihomogeneous form of bidegree `(a, b)` from a coefficient stream.
fn form(n: usize, a: u32, b: u32, coeffs: &[i64]) -> BiPolynomial {
    let u = VariableUniverse::new(n);
    let monos = monomials_of_bidegree(&u, a, b);
    BiPolynomial::from_terms(
        &u,
        monos.into_iter().zip(coeffs.iter().cycle()).map(|(m, &c)| (m, Rational::from_integer(BigInt::from(c)))),
    )
}

fn ideal_strategy() -> impl Strategy<Value = Ideal> {
    // dense forms in P^2 x P^2 get expensive quickly, so n = 2 gets fewer
    (1usize..=2)
        .prop_flat_map(|n| {
            let gens = if n == 1 { 1..4 } else { 1..3 };
            (Just(n), proptest::collection::vec((0u32..=2, 0u32..=2, proptest::collection::vec(-3i64..=3, 1..6)), gens))
        })
        .prop_filter_map("needs a nonzero generator", |(n, specs)| {
            let u = VariableUniverse::new(n);
            let gens: Vec<BiPolynomial> = specs
                .iter()
                .filter(|(a, b, _)| a + b > 0)
                .map(|(a, b, c)| form(n, *a, *b, c))
                .filter(|f| !f.is_zero())
                .collect();
            if gens.is_empty() {
                None
            } else {
                Ideal::new(&u, gens).ok()
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 40,
        rng_seed: proptest::test_runner::RngSeed::Fixed(7),
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn methods_agree_on_random_ideals(ideal in ideal_strategy()) {
        let a = tabulate(&ideal, 0..=4, HilbertMethod::InitialIdealCount).unwrap();
        let b = tabulate(&ideal, 0..=4, HilbertMethod::RankOracle).unwrap();
        prop_assert_eq!(a.values, b.values);
    }

    #[test]
    fn buchberger_output_is_certified(ideal in ideal_strategy(), seed in 0u64..1000) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let order = MonomialOrderSpec::random(OrderKind::Grevlex, ideal.n(), &mut rng);
        let gb = buchberger(ideal.generators(), &order).unwrap();
        if !gb.is_unit() {
            prop_assert!(is_groebner_basis(&gb.basis, &order).unwrap().holds);
        }
        for g in ideal.generators() {
            prop_assert!(gb.reduce(g).unwrap().is_zero());
        }
    }
}

#[test]
fn hypersurface_hilbert_polynomial() {
    // dim S_{t,t} - dim S_{t-a,t-b} for a form of bidegree (a, b) in P^n x P^n
    for (n, a, b) in [(1usize, 1u32, 1u32), (1, 2, 1), (2, 1, 1), (2, 2, 1), (2, 3, 2)] {
        let f = form(n, a, b, &[1, -2, 3, 1, 5, -1, 2]);
        let ideal = Ideal::new(f.universe(), vec![f.clone()]).unwrap();
        let ni = n as i64;
        for t in 0..=5u32 {
            let t = t as i64;
            let expect = binomial(t + ni, ni).pow(2) - binomial(t - a as i64 + ni, ni) * binomial(t - b as i64 + ni, ni);
            for method in [HilbertMethod::InitialIdealCount, HilbertMethod::RankOracle] {
                let got = diagonal_hilbert_function(&ideal, t as u32, method).unwrap();
                assert_eq!(got as i64, expect, "n={n} ({a},{b}) t={t} {}", method.name());
            }
        }
    }
}

#[test]
fn reduced_basis_ignores_generator_order() {
    let u = VariableUniverse::new(2);
    let gens = ["x1*y2 - x2*y1 + x3*y3", "x1^2*y1 - x2*x3*y2", "x2*y3 - 2*x3*y1"];
    let forward: Vec<BiPolynomial> = gens.iter().map(|s| BiPolynomial::parse(&u, s).unwrap()).collect();
    let backward: Vec<BiPolynomial> = forward.iter().rev().cloned().collect();
    for order in [MonomialOrderSpec::lex(2), MonomialOrderSpec::grevlex(2), MonomialOrderSpec::block(2)] {
        let a = buchberger(&forward, &order).unwrap();
        let b = buchberger(&backward, &order).unwrap();
        assert_eq!(a.basis, b.basis, "{}", order.label());
    }
}

#[test]
fn interpolation_recovers_the_segre_polynomial() {
    for n in 1..=3usize {
        let u = VariableUniverse::new(n);
        let ideal = Ideal::new(&u, Vec::new()).unwrap();
        let poly = hilbert_polynomial(&ideal, 2 * n, HilbertMethod::InitialIdealCount).unwrap();
        let expect = &HilbertPolynomialQ::binomial(n as i64, n) * &HilbertPolynomialQ::binomial(n as i64, n);
        assert_eq!(poly, expect, "n={n}");
    }
}
