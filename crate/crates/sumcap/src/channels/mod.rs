//! Channel representation (Kraus and Choi), CPTP validation, constructors
//! and the channel compositions used by the verification harness.

pub mod channel;
pub mod choi;
pub mod constructors;
pub mod io;

pub use channel::Channel;
pub use choi::{apply_via_choi, kraus_from_choi, ChoiMatrix};
pub use constructors::{
    constant_channel, dephasing, depolarizing, identity_channel, mixed_unitary,
    partial_trace_channel, random_channel, unitary_channel, werner_holevo, Factor,
};
pub use io::{channel_from_json, channel_to_json, load_channel, save_channel};
