//! Count small frames per class and check frame conditions against schema
//! validity on every one of them.

use ilkit::parse;
use ilkit::semantics::{check_condition, count_frames, enumerate_frames, schema_valid_in_frame, FrameCondition, FrameKind};

fn main() {
    for kind in [FrameKind::Veltman, FrameKind::Verbrugge] {
        let counts: Vec<usize> = (1..=3).map(|n| count_frames(n, kind, &[])).collect();
        println!("{kind} frames on 1..3 worlds: {counts:?}");
    }
    let j5 = parse("<>A |> A").unwrap();
    let frames: Vec<_> = (1..=3).flat_map(|n| enumerate_frames(n, FrameKind::Veltman, &[])).collect();
    let with_cond = frames.iter().filter(|f| check_condition(f, FrameCondition::FcJ5).unwrap()).count();
    let valid = frames.iter().filter(|f| schema_valid_in_frame(f, &j5)).count();
    println!("FC-J5 holds on {with_cond} of {} Veltman frames; J5 valid on {valid}", frames.len());
}
