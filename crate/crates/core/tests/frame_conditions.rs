//! Frame conditions against schema validity on exhaustively enumerated
//! small frames.

use ilkit::parse;
use ilkit::semantics::{
    check_condition, check_condition_with, enumerate_frames, schema_valid_in_frame, Frame, FrameCondition,
    FrameKind, UnionReading,
};

fn schema(text: &str) -> ilkit::Formula {
    parse(text).unwrap()
}

fn discrepancies(frames: &[Frame], cond: FrameCondition, pattern: &str) -> usize {
    let f = schema(pattern);
    frames
        .iter()
        .filter(|fr| check_condition(fr, cond).unwrap() != schema_valid_in_frame(fr, &f))
        .count()
}

#[test]
fn veltman_conditions_match_schemata_up_to_three_worlds() {
    let frames: Vec<Frame> = (1..=3).flat_map(|n| enumerate_frames(n, FrameKind::Veltman, &[])).collect();
    assert_eq!(frames.len(), 1 + 9 + 3505);
    for (c, s) in [
        (FrameCondition::FcJ1, "[](A -> B) -> A |> B"),
        (FrameCondition::FcJ4Plus, "[](A -> B) -> (C |> A -> C |> B)"),
        (FrameCondition::FcJ5, "<>A |> A"),
        (FrameCondition::FcJ2Plus, "(A |> (B | C)) & (B |> C) -> A |> C"),
    ] {
        assert_eq!(discrepancies(&frames, c, s), 0, "{c}");
    }
}

#[test]
fn verbrugge_conditions_match_schemata_up_to_two_worlds() {
    let frames: Vec<Frame> = (1..=2).flat_map(|n| enumerate_frames(n, FrameKind::Verbrugge, &[])).collect();
    for (c, s) in [
        (FrameCondition::GfcJ1, "[](A -> B) -> A |> B"),
        (FrameCondition::GfcJ2, "(A |> B) & (B |> C) -> A |> C"),
        (FrameCondition::GfcJ4, "A |> B -> (<>A -> <>B)"),
        (FrameCondition::GfcJ4Plus, "[](A -> B) -> (C |> A -> C |> B)"),
        (FrameCondition::GfcJ5, "<>A |> A"),
    ] {
        assert_eq!(discrepancies(&frames, c, s), 0, "{c}");
    }
}

#[test]
fn verbrugge_conditions_match_schemata_on_sampled_three_world_frames() {
    let frames: Vec<Frame> = enumerate_frames(3, FrameKind::Verbrugge, &[]).step_by(97).collect();
    assert!(frames.len() > 400);
    for (c, s) in [
        (FrameCondition::GfcJ1, "[](A -> B) -> A |> B"),
        (FrameCondition::GfcJ2, "(A |> B) & (B |> C) -> A |> C"),
        (FrameCondition::GfcJ4, "A |> B -> (<>A -> <>B)"),
        (FrameCondition::GfcJ4Plus, "[](A -> B) -> (C |> A -> C |> B)"),
        (FrameCondition::GfcJ5, "<>A |> A"),
    ] {
        assert_eq!(discrepancies(&frames, c, s), 0, "{c}");
    }
}

/// Counts frames where the two readings of the union condition differ from
/// schema validity of J2.
#[test]
fn union_readings_compared() {
    let j2 = schema("(A |> B) & (B |> C) -> A |> C");
    let frames: Vec<Frame> = (1..=3)
        .flat_map(|n| enumerate_frames(n, FrameKind::Verbrugge, &[]))
        .step_by(7)
        .collect();
    let mut restricted = 0;
    let mut all_of_v = 0;
    for fr in &frames {
        let valid = schema_valid_in_frame(fr, &j2);
        restricted += usize::from(check_condition_with(fr, FrameCondition::GfcJ2, UnionReading::Restricted).unwrap() != valid);
        all_of_v += usize::from(check_condition_with(fr, FrameCondition::GfcJ2, UnionReading::AllOfV).unwrap() != valid);
    }
    println!("GFC-J2 mismatches: restricted={restricted} all-of-V={all_of_v} over {} frames", frames.len());
    assert_eq!(restricted, 0);
}
