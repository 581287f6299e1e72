use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use qtbounds::concat::jensen_bound;
use qtbounds::context::{BoundConfig, BoundContext};
use qtbounds::galois::{build_tower, Elem, FieldTower, Gf};
use qtbounds::lally::lally_bound;
use qtbounds::linalg::{LinearCode, Mat, Strategy, DEFAULT_BUDGET};
use qtbounds::par::Execution;
use qtbounds::polyring::{Poly, PolyRing};
use qtbounds::qtcode::QtCode;
use qtbounds::spectral::{shift_spectral_bound, spectral_bound};

fn fields() -> &'static [Gf] {
    static F: OnceLock<Vec<Gf>> = OnceLock::new();
    F.get_or_init(|| {
        [(2, 1), (2, 3), (3, 2), (5, 1), (2, 4), (3, 3), (5, 2)]
            .map(|(p, n)| Gf::new(p, n).unwrap())
            .to_vec()
    })
}

fn contexts() -> &'static [Arc<BoundContext>] {
    static C: OnceLock<Vec<Arc<BoundContext>>> = OnceLock::new();
    C.get_or_init(|| {
        [
            (2, 3, 1),
            (2, 5, 1),
            (2, 7, 1),
            (3, 4, 1),
            (3, 4, 2),
            (3, 5, 2),
            (4, 3, 1),
            (4, 5, 1),
        ]
        .map(|(q, m, l)| {
            let cfg = BoundConfig {
                exec: Execution::Sequential,
                ..BoundConfig::default()
            };
            Arc::new(BoundContext::new(
                Arc::new(build_tower(q, m, l).unwrap()),
                cfg,
            ))
        })
        .to_vec()
    })
}

fn elem(f: &Gf, x: u32) -> Elem {
    Elem(x % f.order())
}

fn poly(f: &Gf, xs: &[u32]) -> Poly {
    Poly::new(xs.iter().map(|&x| elem(f, x)).collect())
}

fn qt(t: &Arc<FieldTower>, ell: usize, raw: &[Vec<u32>]) -> QtCode {
    let q = t.q();
    let m = t.m();
    let gens: Vec<Vec<Poly>> = raw
        .chunks(ell)
        .filter(|c| c.len() == ell)
        .map(|c| {
            c.iter()
                .map(|xs| Poly::new(xs.iter().take(m).map(|&x| Elem(x % q)).collect()))
                .collect()
        })
        .collect();
    QtCode::new(t.clone(), ell, gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(i in 0..7usize, a: u32, b: u32, c: u32) {
        let f = &fields()[i];
        let (a, b, c) = (elem(f, a), elem(f, b), elem(f, c));
        prop_assert_eq!(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
        prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a)), Elem::ONE);
            prop_assert_eq!(f.pow(a, f.order() as u64 - 1), Elem::ONE);
        }
        let p = f.characteristic() as u64;
        prop_assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
    }

    #[test]
    fn division_with_remainder(i in 0..7usize, a in prop::collection::vec(any::<u32>(), 0..9), b in prop::collection::vec(any::<u32>(), 1..6)) {
        let f = &fields()[i];
        let r = PolyRing::new(f);
        let (a, b) = (poly(f, &a), poly(f, &b));
        prop_assume!(!b.is_zero());
        let (quo, rem) = r.divmod(&a, &b).unwrap();
        prop_assert_eq!(r.add(&r.mul(&quo, &b), &rem), a.clone());
        prop_assert!(rem.degree().is_none_or(|d| d < b.degree().unwrap()));
        let (g, s, t) = r.xgcd(&a, &b);
        prop_assert_eq!(r.add(&r.mul(&s, &a), &r.mul(&t, &b)), g.clone());
        prop_assert!(r.rem(&a, &g).unwrap().is_zero() && r.rem(&b, &g).unwrap().is_zero());
    }

    #[test]
    fn rank_nullity(i in 0..7usize, rows in 1..5usize, cols in 1..7usize, raw in prop::collection::vec(any::<u32>(), 36)) {
        let f = &fields()[i];
        let data: Vec<Elem> = raw.iter().take(rows * cols).map(|&x| elem(f, x)).collect();
        let a = Mat::new(rows, cols, data).unwrap();
        let k = a.right_kernel(f);
        prop_assert_eq!(a.rank(f) + k.rows(), cols);
        prop_assert!(a.mul(&k.transpose(), f).unwrap().is_zero());
        prop_assert_eq!(a.rref(f).rref(f), a.rref(f));
    }

    #[test]
    fn reduced_basis_is_stable(i in 0..8usize, ell in 1..4usize, raw in prop::collection::vec(prop::collection::vec(any::<u32>(), 0..7), 1..7)) {
        let ctx = &contexts()[i];
        let code = qt(ctx.tower(), ell, &raw);
        let again = QtCode::new(ctx.tower().clone(), ell, code.reduced().rows().to_vec()).unwrap();
        prop_assert_eq!(again.reduced().rows(), code.reduced().rows());
        prop_assert_eq!(again.dimension(), code.dimension());
        prop_assert_eq!(code.scalar_code().dim(), code.dimension());
        prop_assert!(code.shift_invariant());
    }

    #[test]
    fn distance_strategies_agree(i in 0..7usize, k in 1..4usize, n in 2..9usize, raw in prop::collection::vec(any::<u32>(), 32)) {
        let f = Arc::new(fields()[i].clone());
        prop_assume!(f.order() <= 9);
        let data: Vec<Elem> = raw.iter().take(k * n).map(|&x| elem(&f, x)).collect();
        let code = LinearCode::new(f, &Mat::new(k.min(raw.len() / n), n, data).unwrap());
        let e = code.min_distance(Strategy::Enumerate, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(code.min_distance(Strategy::SupportRank, DEFAULT_BUDGET).unwrap(), e);
        prop_assert_eq!(code.min_distance(Strategy::InformationSet, DEFAULT_BUDGET).unwrap(), e);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn bounds_never_exceed_distance(i in 0..8usize, ell in 1..4usize, raw in prop::collection::vec(prop::collection::vec(any::<u32>(), 0..7), 1..7)) {
        let ctx = &contexts()[i];
        let code = qt(ctx.tower(), ell, &raw);
        let d = code.exact_min_distance(Strategy::Auto, DEFAULT_BUDGET).unwrap();
        prop_assert!(lally_bound(&code, Strategy::Auto, DEFAULT_BUDGET).unwrap().value <= d);
        prop_assert!(jensen_bound(&code, ctx).unwrap().value <= d);
        prop_assert!(spectral_bound(&code, ctx, &ctx.config().union).unwrap().value <= d);
        prop_assert!(shift_spectral_bound(&code, ctx).unwrap().value <= d);
    }
}
