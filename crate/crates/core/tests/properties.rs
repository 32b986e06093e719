//! Property tests for the invariants of each module.

use proptest::prelude::*;

use ilkit::calculus::{check_proof, logic, proof_corpus};
use ilkit::decision::{certify, prec, ranks, realized_types, Phi};
use ilkit::fixedpoint::{fixed_point, non_fpp_search, fixed_point_equation, verify_fixed_point, FixedPointVerdict};
use ilkit::semantics::{check_condition, frames_up_to, valid_in_frame, Evaluator, FrameKind, Model, WorldSet};
use ilkit::syntax::AdequateSet;
use ilkit::{parse, print, Formula};

fn var(names: &'static [&'static str]) -> impl Strategy<Value = Formula> {
    prop::sample::select(names).prop_map(Formula::var)
}

/// Binary formulas over `p`, `q`.
fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![Just(Formula::bot()), var(&["p", "q"])];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            inner.clone().prop_map(Formula::boxed),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::rhd(a, b)),
        ]
    })
}

/// Unary formulas over `p`, `q`.
fn unary() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![Just(Formula::bot()), var(&["p", "q"])];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            inner.clone().prop_map(Formula::not),
            inner.clone().prop_map(Formula::boxed),
            inner.prop_map(Formula::unary),
        ]
    })
}

/// Unary formulas with every `p` under a modality.
fn modalized() -> impl Strategy<Value = Formula> {
    let component = || (unary(), any::<bool>())
        .prop_map(|(a, boxed)| if boxed { Formula::boxed(a) } else { Formula::unary(a) });
    (unary(), component(), component()).prop_map(|(b, m1, m2)| {
        Formula::implies(b.substitute("p", &Formula::bot()), Formula::implies(m1, m2))
    })
}

fn veltman_frames() -> std::sync::Arc<Vec<ilkit::semantics::Frame>> {
    frames_up_to(3, FrameKind::Veltman, &[])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn print_parse_round_trip(f in formula()) {
        prop_assert_eq!(parse(&print(&f)).unwrap(), f);
    }

    #[test]
    fn tilde_is_a_classical_negation(f in formula()) {
        prop_assert!(ilkit::calculus::is_tautology(&Formula::iff(f.tilde(), Formula::not(f.clone()))));
    }

    #[test]
    fn adequate_closure_is_closed(f in unary()) {
        let set = AdequateSet::closure([&f]);
        prop_assert!(set.contains(&f));
        prop_assert!(set.contains(&Formula::unary(Formula::bot())));
        prop_assert_eq!(set.check(), Ok(()));
        prop_assert!(set.formulas().iter().all(|g| set.contains(&g.tilde())));
    }

    #[test]
    fn compiled_evaluation_matches_the_model(f in formula(), ix in 0usize..3515, pv in 0u64..8, qv in 0u64..8) {
        let frames = veltman_frames();
        let frame = frames[ix % frames.len()].clone();
        let mask = (1u64 << frame.len()) - 1;
        let val = [("p", pv & mask), ("q", qv & mask)]
            .into_iter()
            .map(|(v, m)| (v.to_string(), WorldSet::from_mask(m)))
            .collect();
        let model = Model::new(frame.clone(), val);
        let ev = Evaluator::new([&f]);
        let ext: Vec<WorldSet> = ev.vars().iter().map(|v| model.val[v].clone()).collect();
        let truth = ev.evaluate(&frame, &ext);
        prop_assert_eq!(&truth[ev.index_of(&f).unwrap()], &model.truth_set(&f).unwrap());
    }

    #[test]
    fn corpus_goals_hold_on_frames_of_their_logic(ix in 0usize..3515) {
        let frames = veltman_frames();
        let frame = &frames[ix % frames.len()];
        for e in proof_corpus() {
            let l = logic(e.logic).unwrap();
            let Ok(partner) = ilkit::calculus::semantic_partner(l) else { continue };
            if partner.frame_class != Some(FrameKind::Veltman) {
                continue;
            }
            let hyp_free = e.proof.steps.iter().all(|s| s.just != ilkit::calculus::Justification::Hyp);
            if hyp_free && partner.conditions.iter().all(|&c| check_condition(frame, c).unwrap()) {
                prop_assert!(valid_in_frame(frame, &e.goal), "{} fails on a frame of {}", e.name, l.id);
            }
        }
    }

    #[test]
    fn certificates_check(f in unary()) {
        let l = logic("IL-(J2+,J5)").unwrap();
        if let Some(p) = certify(l, &f) {
            prop_assert!(check_proof(l, &p, &f).is_accepted());
        }
    }

    #[test]
    fn prec_and_rank(f in unary()) {
        let phi = Phi::closure([&f]);
        prop_assume!(phi.vars().len() <= 2);
        let k = realized_types(logic("il-").unwrap(), &phi, 2);
        let m = k.members();
        let r = ranks(m);
        for (i, g) in m.iter().enumerate() {
            prop_assert!(!prec(g, g));
            for (j, d) in m.iter().enumerate() {
                if prec(g, d) {
                    prop_assert!(r[i] > r[j]);
                    prop_assert!(!prec(d, g));
                }
            }
        }
    }

    #[test]
    fn computed_fixed_points_survive(a in modalized()) {
        let r = fixed_point(&a, "p").unwrap();
        prop_assert!(r.var_condition_ok);
        let l = logic("IL-(J2+,J5)").unwrap();
        let v = verify_fixed_point(l, &a, "p", &r.output, 3, None).unwrap();
        prop_assert!(
            matches!(v, FixedPointVerdict::SemanticallyConsistent),
            "{} for {}: {}", r.output, a, fixed_point_equation(&a, "p", &r.output)
        );
    }
}

/// Surviving candidates are interchangeable on the frames searched.
#[test]
fn surviving_candidates_are_equivalent() {
    let l = logic("IL-(J2+,J5)").unwrap();
    let frames = frames_up_to(3, FrameKind::Veltman, &l.conditions);
    for a in ["I p", "[]~p", "[](p -> q)"] {
        let rep = non_fpp_search(l, &parse(a).unwrap(), "p", 2, 3).unwrap();
        let survivors = rep.survivors();
        assert!(!survivors.is_empty(), "{a}");
        for (i, x) in survivors.iter().enumerate() {
            for y in &survivors[i + 1..] {
                let eq = Formula::iff((*x).clone(), (*y).clone());
                assert!(frames.iter().all(|fr| valid_in_frame(fr, &eq)), "{a}: {x} vs {y}");
            }
        }
    }
}
