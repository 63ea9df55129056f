use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use penney_core::oracle::gen::{bias_menu, random_pattern, random_spec};
use penney_core::polyalg::is_normalized;
use penney_core::solver::{column_determinants, rhs_column};
use penney_core::{
    build_matrix_a, build_matrix_b, conway_number, game_distribution, int, overlap_indicator, pattern_probability,
    rat, single_pattern_expected_time, two_player_odds, validate_pattern_set, winning_pgf, winning_probabilities,
    GameSpec, PolyMatrix, Polynomial, Rational, RationalFunction,
};

/// Laplace expansion along the first row; independent of the elimination code.
fn cofactor_det(rows: &[Vec<Polynomial>]) -> Polynomial {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = Polynomial::zero();
    for j in 0..n {
        let minor: Vec<Vec<Polynomial>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &rows[0][j] * &cofactor_det(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

fn small_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(small_rational(), 0..=4).prop_map(Polynomial::from_coeffs)
}

fn poly_rows() -> impl Strategy<Value = Vec<Vec<Polynomial>>> {
    (1usize..=4).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(small_poly(), n), n))
}

fn spec_from_seed(seed: u64) -> GameSpec {
    random_spec(&mut ChaCha8Rng::seed_from_u64(seed))
}

fn all_normalized(p: &Polynomial) -> bool {
    p.coeffs().iter().all(is_normalized)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bareiss_equals_cofactor(rows in poly_rows()) {
        let m = PolyMatrix::from_rows(rows.clone()).unwrap();
        let det = m.determinant();
        prop_assert!(all_normalized(&det));
        prop_assert_eq!(det, cofactor_det(&rows));
    }

    #[test]
    fn determinant_multilinear_in_columns(
        rows in poly_rows(),
        u in prop::collection::vec(small_poly(), 4),
        v in prop::collection::vec(small_poly(), 4),
        j in 0usize..4,
    ) {
        let m = PolyMatrix::from_rows(rows).unwrap();
        let n = m.dim();
        let j = j % n;
        let (u, v) = (&u[..n], &v[..n]);
        let sum: Vec<Polynomial> = u.iter().zip(v).map(|(a, b)| a + b).collect();
        let lhs = m.replace_column(j, &sum).unwrap().determinant();
        let rhs = &m.replace_column(j, u).unwrap().determinant() + &m.replace_column(j, v).unwrap().determinant();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_recomposes(numer in small_poly(), denom in small_poly(), d0 in 1i64..=5, n in 0usize..15) {
        let mut dc = denom.coeffs().to_vec();
        if dc.is_empty() { dc.push(Rational::zero()); }
        dc[0] = int(d0);
        let f = RationalFunction::new(numer.clone(), Polynomial::from_coeffs(dc)).unwrap();
        let c = f.series_coefficients(n).unwrap();
        prop_assert!(c.iter().all(is_normalized));
        let prod = &Polynomial::from_coeffs(c) * f.denom();
        for k in 0..=n {
            prop_assert_eq!(prod.coeff(k), numer.coeff(k));
        }
    }

    #[test]
    fn arithmetic_stays_normalized(a in small_poly(), b in small_poly(), c in small_rational()) {
        prop_assert!(all_normalized(&(&a + &b)));
        prop_assert!(all_normalized(&(&a - &b)));
        prop_assert!(all_normalized(&(&a * &b)));
        prop_assert!(all_normalized(&a.scale(&c)));
        prop_assert!(is_normalized(&a.eval(&c)));
    }

    #[test]
    fn matrix_identities(seed in any::<u64>()) {
        let spec = spec_from_seed(seed);
        let m = spec.players() as u32;
        let one_minus = Polynomial::one_minus_var();
        let b = build_matrix_b(&spec);
        let a = build_matrix_a(&spec);
        let cols = column_determinants(&spec);
        let rhs = rhs_column(&spec);

        prop_assert_eq!(b.map(|w| w.eval(&int(0))), penney_core::RationalMatrix::identity(m as usize));
        prop_assert_eq!(a.determinant().eval(&int(0)), int(1));

        let sum = cols.iter().fold(Polynomial::zero(), |acc, d| &acc + d);
        let expected = &(&one_minus.pow(m) * &b.determinant()) + &(&one_minus.pow(m - 1) * &sum);
        prop_assert_eq!(a.determinant(), expected);
        for (j, col) in cols.iter().enumerate() {
            let aj = a.replace_column(j, &rhs).unwrap().determinant();
            prop_assert_eq!(aj, &one_minus.pow(m - 1) * col);
        }
    }

    #[test]
    fn cramer_residual(seed in any::<u64>()) {
        let spec = spec_from_seed(seed);
        let a = build_matrix_a(&spec);
        let rhs = rhs_column(&spec);
        let pgfs: Vec<RationalFunction> = (0..spec.players()).map(|i| winning_pgf(&spec, i).unwrap()).collect();
        for (i, target) in rhs.iter().enumerate() {
            // all pgfs share a denominator, so the row sum is (sum_j N_j a_ij) / D
            let numer = pgfs.iter().enumerate()
                .fold(Polynomial::zero(), |acc, (j, g)| &acc + &(g.numer() * a.get(i, j)));
            prop_assert_eq!(numer, target * pgfs[0].denom());
        }
    }

    #[test]
    fn probabilities_normalized_and_series_nonnegative(seed in any::<u64>()) {
        let spec = spec_from_seed(seed);
        let probs = winning_probabilities(&spec).unwrap();
        prop_assert_eq!(probs.iter().sum::<Rational>(), Rational::one());
        prop_assert!(probs.iter().all(|p| *p >= Rational::zero() && *p <= Rational::one() && is_normalized(p)));
        for row in game_distribution(&spec, 50).unwrap() {
            prop_assert!(row.iter().all(|c| *c >= Rational::zero()));
        }
    }

    #[test]
    fn conway_formulas_agree(seed in any::<u64>(), li in 1usize..=6, lj in 1usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let model = &bias_menu()[(seed % 4) as usize];
        let a = random_pattern(&mut rng, li, 2);
        let b = random_pattern(&mut rng, lj, 2);
        prop_assert_eq!(
            conway_number(&b, &a, model),
            penney_core::solver::conway_number_via_correlation(&b, &a, model)
        );
        prop_assert_eq!(single_pattern_expected_time(&a, model), conway_number(&a, &a, model));
    }

    #[test]
    fn overlap_structure(seed in any::<u64>()) {
        let spec = spec_from_seed(seed);
        let ps = spec.patterns();
        for (i, a) in ps.iter().enumerate() {
            prop_assert!(overlap_indicator(a, a, a.len()).unwrap());
            for (j, b) in ps.iter().enumerate() {
                if i != j && a.len() <= b.len() {
                    prop_assert!(!overlap_indicator(a, b, a.len()).unwrap());
                }
            }
        }
    }

    #[test]
    fn probability_multiplicative(seed in any::<u64>(), la in 1usize..=6, lb in 1usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let model = &bias_menu()[(seed % 4) as usize];
        let a = random_pattern(&mut rng, la, 2);
        let b = random_pattern(&mut rng, lb, 2);
        prop_assert_eq!(
            pattern_probability(&a.concat(&b), model),
            pattern_probability(&a, model) * pattern_probability(&b, model)
        );
    }
}

#[test]
fn two_player_odds_agree_with_determinant_ratio() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    while checked < 50 {
        let model = bias_menu()[checked % 4].clone();
        let a = random_pattern(&mut rng, 1 + checked % 5, 2);
        let b = random_pattern(&mut rng, 1 + (checked / 5) % 5, 2);
        let Ok(spec) = validate_pattern_set(vec![a.clone(), b.clone()], model.clone()) else { continue };
        let p = winning_probabilities(&spec).unwrap();
        assert_eq!(two_player_odds(&a, &b, &model).unwrap(), &p[0] / &p[1]);
        checked += 1;
    }
}

#[test]
fn symmetric_pair_has_even_odds() {
    let coin = penney_core::SourceModel::fair_coin();
    for (a, b) in [("HHT", "TTH"), ("HTHH", "THTT"), ("H", "T")] {
        let a = penney_core::parse_pattern(a, &coin).unwrap();
        let b = penney_core::parse_pattern(b, &coin).unwrap();
        assert_eq!(two_player_odds(&a, &b, &coin).unwrap(), int(1));
    }
}

#[test]
fn single_player_duration_is_solovev() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for k in 0..50 {
        let model = bias_menu()[k % 4].clone();
        let a = random_pattern(&mut rng, 1 + k % 7, 2);
        let spec = validate_pattern_set(vec![a.clone()], model.clone()).unwrap();
        assert_eq!(
            penney_core::expected_duration(&spec).unwrap(),
            single_pattern_expected_time(&a, &model)
        );
        assert_eq!(
            penney_core::conditional_expected_duration(&spec, 0).unwrap(),
            single_pattern_expected_time(&a, &model)
        );
    }
}
