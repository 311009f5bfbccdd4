//! The quotient model against random relation rewriting, hand-built label
//! actions and an independent certificate checker.

use gammakit_core::dsl::parse;
use gammakit_core::labels::{LabelAction, WedgeLabel};
use gammakit_core::testkit::{
    self, check_certificate, label_action_by_atoms, random_rewrite, random_word, to_expr, Relation,
    Token, CENTRALIZER_WITNESSES,
};
use gammakit_core::{Atom, Expr, FramingTransport, Model, ModelConfig, ModelElement};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const WORDS: usize = 500;
const REWRITES: usize = 4;

fn eval(model: &Model, tokens: &[Token]) -> ModelElement {
    model.eval(&to_expr(tokens)).unwrap()
}

fn el(model: &Model, text: &str) -> ModelElement {
    model.eval(&parse(text).unwrap()).unwrap()
}

/// Label permutations of the atoms written out by hand: disk map and
/// branch shift per disk.
fn hand_action(atom: Atom) -> LabelAction {
    let next = |d: usize| d % 6 + 1;
    LabelAction::from_fn(|l| match atom {
        Atom::Id => l,
        Atom::R => WedgeLabel::new(l.disk, l.branch as i64 + 1),
        Atom::Rho => WedgeLabel::new(next(l.disk), l.branch as i64),
        Atom::A1 => WedgeLabel::new(next(l.disk), l.branch as i64 + 5),
        Atom::Sigma(i) => {
            let (a, b) = (i as usize, next(i as usize));
            let d = if l.disk == a { b } else if l.disk == b { a } else { l.disk };
            WedgeLabel::new(d, l.branch as i64)
        }
        Atom::A2 => {
            // R, then σ5, then α1.
            let d = match l.disk {
                5 => 6,
                6 => 5,
                d => d,
            };
            WedgeLabel::new(next(d), l.branch as i64 + 6)
        }
    })
    .unwrap()
}

#[test]
fn atom_label_actions_match_hand_tables() {
    let model = Model::default();
    for atom in Atom::ALL {
        let g = model.named(atom).unwrap();
        assert_eq!(model.wedge_label_action(&g), hand_action(atom), "{atom}");
    }
    let a2 = hand_action(Atom::A2);
    assert_eq!(a2.fixed_disks(), vec![6]);
    assert_eq!(a2.apply(WedgeLabel::new(6, 0)), WedgeLabel::new(6, 6));
    assert_eq!(a2.order(), 5);
}

#[test]
fn rewriting_by_relations_preserves_elements() {
    let model = Model::default();
    let free = Model::new(ModelConfig { central_relation: false, ..ModelConfig::default() });
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..WORDS {
        let w = random_word(&mut rng, 20);
        let a = eval(&model, &w);
        let la = label_action_by_atoms(&model, &w);
        let mut v = w.clone();
        let mut used_central = false;
        for _ in 0..REWRITES {
            let (next, kind) = random_rewrite(&mut rng, &v);
            used_central |= kind == Relation::CentralRelation;
            v = next;
        }
        let b = eval(&model, &v);
        let ev = model.equal(&a, &b).unwrap();
        assert!(ev.is_equal(), "{} vs {}: {ev:?}", to_expr(&w), to_expr(&v));
        assert_eq!(model.joint_invariant(&a), model.joint_invariant(&b));
        assert_eq!(label_action_by_atoms(&model, &v), la);
        assert_eq!(model.wedge_label_action(&b), la);
        if !used_central {
            assert!(free.is_equal(&eval(&free, &w), &eval(&free, &v)).unwrap());
        }
    }
}

#[test]
fn equality_is_a_congruence() {
    let model = Model::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let w = random_word(&mut rng, 12);
        let (v, _) = random_rewrite(&mut rng, &w);
        let (u, t) = (random_word(&mut rng, 6), random_word(&mut rng, 6));
        let wrap = |x: &[Token]| [u.as_slice(), x, t.as_slice()].concat();
        assert!(model.is_equal(&eval(&model, &wrap(&w)), &eval(&model, &wrap(&v))).unwrap());
    }
}

#[test]
fn inequality_certificates_are_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut seen = std::collections::BTreeSet::new();
    for transport in [FramingTransport::Left, FramingTransport::Right] {
        let model = Model::new(ModelConfig { transport, ..ModelConfig::default() });
        for _ in 0..WORDS {
            let a_t = random_word(&mut rng, 10);
            // Mostly near-misses: a small perturbation of the same word.
            let b_t = if rng.gen_bool(0.7) {
                let mut b = a_t.clone();
                let pos = rng.gen_range(0..=b.len());
                let extra = random_word(&mut rng, 2);
                b.splice(pos..pos, extra);
                b
            } else {
                random_word(&mut rng, 10)
            };
            let (a, b) = (eval(&model, &a_t), eval(&model, &b_t));
            let ev = model.equal(&a, &b).unwrap();
            seen.insert(ev.certificate());
            if !ev.is_equal() {
                check_certificate(&model, &a, &b, &a_t, &b_t, &ev)
                    .unwrap_or_else(|e| panic!("{}: {e}", ev.certificate()));
            }
        }
    }
    for kind in ["permutation", "joint-invariant", "central-power"] {
        assert!(seen.contains(kind), "never produced {kind}: {seen:?}");
    }
}

#[test]
fn deep_certificates_are_sound() {
    let model = Model::default();
    let cases = [
        ("s1^2 s2^-2", "id", "non-central-braid"),
        ("(s1 s2)^3", "(s2 s1)^3 s1 s2 s1^-1 s2^-1 s2 s1", "permutation"),
        ("R^2 s1^2", "id", "label-action"),
        ("rho^6", "R^-30", "central-power"),
    ];
    for (x, y, want) in cases {
        let (a, b) = (el(&model, x), el(&model, y));
        let ev = model.equal(&a, &b).unwrap();
        assert_eq!(ev.certificate(), want, "{x} vs {y}");
        if !ev.is_equal() {
            let ta = parse(x).unwrap().expand(1 << 20).unwrap();
            let tb = parse(y).unwrap().expand(1 << 20).unwrap();
            check_certificate(&model, &a, &b, &ta, &tb, &ev).unwrap();
        }
    }
    // Named generators only carry uniform framings, so a framing residual
    // needs a hand-built element.
    let twist = el(&model, "rho^6");
    let skewed = ModelElement {
        framing: gammakit_core::FramingVector([0, 0, 0, 0, -45, 45]),
        braid: twist.braid.clone(),
    };
    let ev = model.equal(&skewed, &el(&model, "R^-30")).unwrap();
    assert_eq!(ev.certificate(), "label-action");
    let skewed = ModelElement {
        framing: gammakit_core::FramingVector([30, 30, 30, 30, 0, 60]),
        ..skewed
    };
    let ev = model.equal(&skewed, &ModelElement::identity()).unwrap();
    assert_eq!(ev.certificate(), "framing-residual");
    check_certificate(&model, &skewed, &ModelElement::identity(), &[], &[], &ev).unwrap();
}

#[test]
fn centralizer_witnesses_close_under_a1() {
    let model = Model::default();
    let a1 = model.named(Atom::A1).unwrap();
    for (text, j) in CENTRALIZER_WITNESSES {
        let c = el(&model, text);
        let z = model.pow(&a1, j as i64).unwrap();
        assert!(model.commutes(&c, &z).unwrap().is_equal(), "{text} in C(a1^{j})");
        let mut conj = c.clone();
        for _ in 0..6 {
            conj = model.conjugate(&conj, &a1).unwrap();
            assert!(model.commutes(&conj, &z).unwrap().is_equal());
        }
        assert!(model.is_equal(&conj, &c).unwrap());
    }
    let s3 = el(&model, "s3");
    for j in [2, 3] {
        let z = model.pow(&a1, j).unwrap();
        assert!(!model.commutes(&s3, &z).unwrap().is_equal());
    }
}

#[test]
fn rotation_has_no_small_order() {
    let model = Model::default();
    assert_eq!(model.element_order(&model.named(Atom::R).unwrap(), 10_000).unwrap(), None);
    assert_eq!(model.element_order(&model.named(Atom::A1).unwrap(), 100).unwrap(), Some(6));
    assert_eq!(model.element_order(&model.named(Atom::A2).unwrap(), 100).unwrap(), Some(5));
    assert_eq!(model.element_order(&model.named(Atom::Rho).unwrap(), 100).unwrap(), None);
}

#[test]
fn transports_agree_on_the_relation_suite() {
    let right = Model::new(ModelConfig { transport: FramingTransport::Right, ..ModelConfig::default() });
    let report = gammakit_core::lemma::verify_lemma_comp(&right).unwrap();
    assert!(report.passed, "{:?}", report.failures().map(|c| &c.name).collect::<Vec<_>>());
}

fn expr_strategy() -> impl Strategy<Value = Expr> {
    any::<u64>().prop_map(|seed| testkit::random_expr(&mut ChaCha8Rng::seed_from_u64(seed), 5))
}

proptest! {
    #[test]
    fn dsl_round_trips(e in expr_strategy()) {
        let text = e.to_string();
        let back = parse(&text).unwrap();
        prop_assert_eq!(back.to_string(), text.clone());
        let model = Model::default();
        prop_assert!(model.is_equal(&model.eval(&e).unwrap(), &model.eval(&back).unwrap()).unwrap());
    }

    #[test]
    fn label_action_is_a_homomorphism(seed in any::<u64>()) {
        let model = Model::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = random_word(&mut rng, 15);
        let by_hand = w.iter().fold(LabelAction::identity(), |acc, &(a, inv)| {
            let h = hand_action(a);
            // Inverse of a permutation of 180 labels, by search.
            let h = if inv {
                LabelAction::from_fn(|l| WedgeLabel::all().find(|&m| h.apply(m) == l).unwrap()).unwrap()
            } else {
                h
            };
            acc.compose(&h)
        });
        prop_assert_eq!(model.wedge_label_action(&eval(&model, &w)), by_hand);
    }
}
