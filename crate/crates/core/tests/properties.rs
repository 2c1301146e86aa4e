mod common;

use proptest::prelude::*;
use qflag::expr::{parse, render_with};
use qflag::poly::Poly;
use qflag::schur::{lr_multiply, monomial_expansion, pieri_vertical};
use qflag::{
    ClassicalRing, Mode, Partition, PrintOrder, QMonomial, QuantumClass, QuantumRing, Rational,
    RewriteSystem, SchurTuple, SignedPartition,
};

use common::*;

fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #[test]
    fn transpose_is_an_involution(lambda in partition(6, 6)) {
        let t = lambda.transpose();
        prop_assert_eq!(t.size(), lambda.size());
        prop_assert_eq!(t.transpose(), lambda.clone());
        prop_assert_eq!(t.len() as u32, lambda.width());
    }

    #[test]
    fn rim_hook_removal_shrinks(lambda in partition(5, 6), n in 1usize..10) {
        match lambda.remove_rim_hook(n).unwrap() {
            SignedPartition::Zero => {
                if let Some(hook) = lambda.rim_hook(n) {
                    prop_assert!(hook.removal().is_none());
                }
            }
            SignedPartition::Term { sign, partition } => {
                prop_assert_eq!(partition.size() + n as u32, lambda.size());
                prop_assert!(lambda.contains(&partition));
                let h = lambda.rim_hook(n).unwrap().height();
                prop_assert_eq!(sign, if h % 2 == 1 { 1 } else { -1 });
            }
        }
    }

    #[test]
    fn box_enumeration(rows in 0usize..5, cols in 0u32..5) {
        let all = Partition::in_box(rows, cols);
        prop_assert_eq!(all.len() as u64, binomial(rows as u64 + cols as u64, rows as u64));
        prop_assert!(all.iter().all(|l| l.fits_box(rows, cols)));
        prop_assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn text_round_trip(lambda in partition(6, 9)) {
        let parsed: Partition = lambda.to_string().parse().unwrap();
        prop_assert_eq!(parsed, lambda);
    }

    /// `s_λ * a_δ = a_{λ+δ}`.
    #[test]
    fn schur_polynomials_are_bialternant_quotients(r in 1usize..=4, lambda in partition(4, 3)) {
        prop_assume!(lambda.len() <= r);
        let delta: Vec<u16> = (0..r).map(|j| (r - 1 - j) as u16).collect();
        let shifted: Vec<u16> = (0..r).map(|j| lambda.part(j) as u16 + delta[j]).collect();
        let lhs = &monomial_expansion(&lambda, r) * &alternant(&delta);
        prop_assert_eq!(lhs, alternant(&shifted));
    }

    #[test]
    fn littlewood_richardson_matches_polynomial_product(
        r in 1usize..=3,
        lambda in partition(3, 3),
        mu in partition(3, 3),
    ) {
        prop_assume!(lambda.len() <= r && mu.len() <= r);
        let lr = lr_multiply(&lambda, &mu, r).unwrap();
        let product = &monomial_expansion(&lambda, r) * &monomial_expansion(&mu, r);
        prop_assert_eq!(lr.to_poly(), product);
        prop_assert_eq!(lr, lr_multiply(&mu, &lambda, r).unwrap());
    }

    #[test]
    fn vertical_pieri_is_a_column_product(r in 1usize..=4, lambda in partition(4, 4), k in 0usize..=4) {
        prop_assume!(lambda.len() <= r && k <= r);
        prop_assert_eq!(
            pieri_vertical(&lambda, k, r).unwrap(),
            lr_multiply(&lambda, &Partition::column(k), r).unwrap()
        );
    }
}

fn basis_of(name: &str) -> (qflag::Quiver, Vec<SchurTuple>) {
    let quiver = load(name);
    let basis = ClassicalRing::new(quiver.clone()).basis();
    (quiver, basis)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Lifts are symmetric within each vertex; `ω` changes sign under a swap.
    #[test]
    fn weyl_invariance(which in 0usize..3, k in 0usize..64) {
        let name = ["fl531", "sinks", "gr63"][which];
        let (quiver, basis) = basis_of(name);
        let sys = RewriteSystem::new(&quiver, Mode::Classical).unwrap();
        let lift = sys.lift_tuple(&basis[k % basis.len()]);
        let omega = sys.omega();
        for i in 1..=quiver.rho() {
            if quiver.rank(i) < 2 {
                continue;
            }
            let mut perm: Vec<usize> = (0..sys.nvars()).collect();
            perm.swap(sys.x(i, 1), sys.x(i, 2));
            prop_assert_eq!(lift.permute(&perm), lift.clone());
            prop_assert_eq!(omega.permute(&perm), -&omega);
        }
    }

    #[test]
    fn printed_classes_reparse(
        which in 0usize..3,
        terms in prop::collection::vec((0usize..64, 0u32..3, 0u32..2, -5i64..=5), 0..6),
        lex in any::<bool>(),
    ) {
        let name = ["fl421", "sinks", "ex3"][which];
        let (quiver, basis) = basis_of(name);
        let mut class = QuantumClass::zero();
        for (k, d1, d2, c) in terms {
            let mut q = vec![0; quiver.rho()];
            q[0] = d1;
            q[quiver.rho() - 1] += d2;
            class.add_term(QMonomial::new(q), basis[k % basis.len()].clone(), int(c));
        }
        let order = if lex { PrintOrder::Lex } else { PrintOrder::Degree };
        let text = render_with(&class, order, Some(&quiver));
        let back = QuantumClass::from_raw(parse(&text).unwrap().to_raw(&quiver).unwrap());
        prop_assert_eq!(back, class);
    }

    #[test]
    fn quantum_product_is_bilinear(
        a in 0usize..64, b in 0usize..64, c in 0usize..64, x in -3i64..=3, y in -3i64..=3,
    ) {
        let quiver = load("fl531");
        let ring = QuantumRing::new(quiver).unwrap();
        let basis = ring.basis();
        let pick = |k: usize| QuantumClass::basis(basis[k % basis.len()].clone());
        let (a, b, c) = (pick(a), pick(b), pick(c));
        let sum = b.scale(&int(x)).add(&c.scale(&int(y)));
        let lhs = ring.multiply(&a, &sum).unwrap();
        let rhs = ring
            .multiply(&a, &b)
            .unwrap()
            .scale(&int(x))
            .add(&ring.multiply(&a, &c).unwrap().scale(&int(y)));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(ring.multiply(&ring.one(), &a).unwrap(), a);
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(
        exps in prop::collection::vec(0u16..7, 3),
        more in prop::collection::vec(0u16..7, 3),
        c in -4i64..=4,
    ) {
        let quiver = load("fl421");
        let sys = RewriteSystem::new(&quiver, Mode::Quantum).unwrap();
        let mono = |e: &[u16]| {
            let mut full = e.to_vec();
            full.resize(sys.nvars(), 0);
            Poly::monomial(qflag::poly::Monomial::from_exponents(full), Rational::from_integer(1.into()))
        };
        let f = mono(&exps);
        let g = mono(&more);
        let nf = sys.normal_form(&f);
        prop_assert!(sys.is_normal(&nf));
        prop_assert_eq!(sys.normal_form(&nf), nf.clone());
        let combo = &f + &g.scale(&int(c));
        let split = &nf + &sys.normal_form(&g).scale(&int(c));
        prop_assert_eq!(sys.normal_form(&combo), split);
    }

    #[test]
    fn basis_tuples_are_already_reduced(k in 0usize..64) {
        let (quiver, basis) = basis_of("ex2");
        let ring = QuantumRing::new(quiver).unwrap();
        let t = basis[k % basis.len()].clone();
        let mut raw = qflag::ring::RawClass::new();
        raw.insert((QMonomial::one(t.rho()), t.clone()), int(1));
        prop_assert_eq!(ring.reduce(&raw).unwrap(), QuantumClass::basis(t));
    }
}

#[test]
fn zero_is_absorbing() {
    let ring = QuantumRing::new(load("fl421")).unwrap();
    let a = ring.schur(1, p(&[2, 1])).unwrap();
    assert!(ring.multiply(&a, &QuantumClass::zero()).unwrap().is_zero());
}
