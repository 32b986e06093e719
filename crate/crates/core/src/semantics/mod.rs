//! Finite Veltman and Verbrugge frames, satisfaction, validity, frame
//! conditions and exhaustive enumeration of small frames.

mod conditions;
mod eval;
mod enumerate;
mod frame;
mod io;
mod model;
mod worldset;

pub use conditions::{check_condition, check_condition_with, holds_at, holds_at_with, FrameCondition, UnionReading};
pub use eval::Evaluator;
pub use enumerate::{count_frames, enumerate_frames, frames_up_to, FrameStream};
pub use frame::{FrameKind, Frame, Neighbourhood, SRelation};
pub use io::{model_from_json, model_to_dot, model_to_json, model_to_json_value};
pub use model::{schema_valid_in_frame, truth_set_in, valid_in_frame, Model};
pub use worldset::WorldSet;
