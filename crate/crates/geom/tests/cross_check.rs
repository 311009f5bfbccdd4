//! Planar maps against the algebraic label action, plus support and
//! bijectivity on the sample set.

use gammakit_core::dsl::parse;
use gammakit_core::labels::WedgeLabel;
use gammakit_core::Model;
use gammakit_geom::{
    apply_word, eval_alpha1, eval_alpha1r, eval_r, eval_sigma, probe_grid, support_violations,
    DiskConfig, MapExpr, MapGen, MapStep, Point, SampleSet, Sense,
};
use proptest::prelude::*;

const CAP: usize = 100_000;

fn setup(cfg: &DiskConfig) -> SampleSet {
    SampleSet::build(cfg).unwrap()
}

fn geometric(text: &str, cfg: &DiskConfig, samples: &SampleSet) -> gammakit_core::labels::LabelAction {
    let expr = MapExpr::from_expr(&parse(text).unwrap(), CAP).unwrap();
    apply_word(&expr, samples, cfg).unwrap_or_else(|e| panic!("{text}: {e}")).labels
}

fn algebraic(text: &str) -> gammakit_core::labels::LabelAction {
    let model = Model::default();
    model.wedge_label_action(&model.eval(&parse(text).unwrap()).unwrap())
}

const WORDS: [&str; 16] = [
    "s1", "s2", "s3", "s4", "s5", "s6", "R", "R^-1", "rho", "a1", "a2", "s1 s1", "a1^-1",
    "s6^-1 rho^-1", "a2^5", "(s1 s2^-1 R^7 a1)^3",
];

#[test]
fn label_actions_agree_with_the_model() {
    let cfg = DiskConfig::default();
    let samples = setup(&cfg);
    for w in WORDS {
        assert_eq!(geometric(w, &cfg, &samples), algebraic(w), "{w}");
    }
}

#[test]
fn rotation_shifts_every_branch() {
    let cfg = DiskConfig::default();
    let samples = setup(&cfg);
    let act = geometric("R", &cfg, &samples);
    for l in WedgeLabel::all() {
        assert_eq!(act.apply(l), WedgeLabel::new(l.disk, l.branch as i64 + 1));
    }
    let full = MapExpr(vec![MapStep { gen: MapGen::R(30), inverse: false }]);
    let orbit = apply_word(&full, &samples, &cfg).unwrap();
    for (i, q) in orbit.moved.iter().enumerate() {
        assert!(q.dist(samples.points[i].position) < cfg.tolerance);
    }
}

#[test]
fn alpha2_has_order_five_and_fixes_disk_six() {
    let cfg = DiskConfig::default();
    let samples = setup(&cfg);
    let act = geometric("a2", &cfg, &samples);
    assert_eq!(act.order(), 5);
    assert_eq!(act.fixed_disks(), vec![6]);
    assert_eq!(act.apply(WedgeLabel::new(6, 0)), WedgeLabel::new(6, 6));
    // Samples of disk 6 stay in disk 6 as a set.
    let orbit = apply_word(&MapExpr::from_expr(&parse("a2").unwrap(), CAP).unwrap(), &samples, &cfg).unwrap();
    for (i, &j) in orbit.target.iter().enumerate() {
        assert_eq!(samples.points[i].label.disk == 6, samples.points[j].label.disk == 6);
    }
}

#[test]
fn clockwise_alpha1_fails_the_cross_check() {
    let cfg = DiskConfig { alpha1_sense: Sense::Clockwise, ..DiskConfig::default() };
    let samples = setup(&cfg);
    assert_ne!(geometric("a1", &cfg, &samples), algebraic("a1"));
    assert_eq!(geometric("a1", &cfg, &samples), algebraic("a1^-1"));
}

#[test]
fn sigma_sense_does_not_change_labels() {
    let cfg = DiskConfig { sigma_sense: Sense::Counterclockwise, ..DiskConfig::default() };
    let samples = setup(&cfg);
    for i in 1..=6 {
        let w = format!("s{i}");
        assert_eq!(geometric(&w, &cfg, &samples), algebraic(&w));
    }
}

fn all_steps() -> Vec<MapStep> {
    let mut steps = Vec::new();
    for inverse in [false, true] {
        for i in 1..=6 {
            steps.push(MapStep { gen: MapGen::Sigma(i), inverse });
        }
        steps.push(MapStep { gen: MapGen::A1, inverse });
        steps.push(MapStep { gen: MapGen::A1r, inverse });
    }
    steps.push(MapStep { gen: MapGen::R(1), inverse: false });
    steps.push(MapStep { gen: MapGen::R(-4), inverse: false });
    steps
}

#[test]
fn generators_are_identity_off_their_support() {
    let cfg = DiskConfig::default();
    let probes = probe_grid(50, 20.0);
    for step in all_steps() {
        assert!(support_violations(&step, &cfg, &probes).is_empty(), "{step}");
    }
    assert!(eval_alpha1(false, Point::ORIGIN, &cfg).dist(Point::ORIGIN) == 0.0);
}

#[test]
fn every_generator_is_a_bijection_on_samples() {
    let cfg = DiskConfig::default();
    let samples = setup(&cfg);
    for step in all_steps() {
        apply_word(&MapExpr(vec![step]), &samples, &cfg).unwrap_or_else(|e| panic!("{step}: {e}"));
    }
}

#[test]
fn sigma_keeps_branch_directions() {
    let cfg = DiskConfig::default();
    let samples = setup(&cfg);
    for i in 1..=6usize {
        let act = geometric(&format!("s{i}"), &cfg, &samples);
        let j = i % 6 + 1;
        for b in 0..30 {
            assert_eq!(act.apply(WedgeLabel::new(i, b)), WedgeLabel::new(j, b));
            assert_eq!(act.apply(WedgeLabel::new(j, b)), WedgeLabel::new(i, b));
        }
    }
}

#[test]
fn too_coarse_tolerance_is_reported() {
    let cfg = DiskConfig { tolerance: 0.5, ..DiskConfig::default() };
    let samples = setup(&cfg);
    let expr = MapExpr::from_expr(&parse("R").unwrap(), CAP).unwrap();
    assert!(apply_word(&expr, &samples, &cfg).is_err());
}

fn point() -> impl Strategy<Value = Point> {
    (-20.0..20.0f64, -20.0..20.0f64).prop_map(|(x, y)| Point::new(x, y))
}

proptest! {
    #[test]
    fn inverses_undo_each_map(p in point(), i in 1usize..=6, m in -40i64..40) {
        let cfg = DiskConfig::default();
        let back = eval_sigma(i, true, eval_sigma(i, false, p, &cfg), &cfg);
        prop_assert!(back.dist(p) < 1e-9);
        let back = eval_alpha1r(true, eval_alpha1r(false, p, &cfg), &cfg);
        prop_assert!(back.dist(p) < 1e-9);
        prop_assert!(eval_r(-m, eval_r(m, p, &cfg), &cfg).dist(p) < 1e-9);
    }

    #[test]
    fn alpha1_has_order_six(p in point()) {
        let cfg = DiskConfig::default();
        let q = (0..6).fold(p, |q, _| eval_alpha1(false, q, &cfg));
        prop_assert!(q.dist(p) < 1e-9);
    }

    #[test]
    fn random_words_agree_with_the_model(seed in any::<u64>()) {
        use gammakit_core::testkit::{random_word, to_expr};
        use rand::SeedableRng;
        let cfg = DiskConfig { depth: 1, ..DiskConfig::default() };
        let samples = setup(&cfg);
        let w = random_word(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed), 8);
        let e = to_expr(&w);
        let model = Model::default();
        let geo = apply_word(&MapExpr::from_expr(&e, CAP).unwrap(), &samples, &cfg).unwrap().labels;
        prop_assert_eq!(geo, model.wedge_label_action(&model.eval(&e).unwrap()));
    }
}
