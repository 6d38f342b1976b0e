//! Amphi-terminal objects, slices and comma categories, completions and
//! injectivity.

mod amphi;
mod comma;
mod completion;
mod injective;

pub use amphi::{
    amphi_limit, amphi_terminal_objects, amphi_terminals_isomorphic, cone_category, find_amphi_terminal,
    is_amphi_initial, is_amphi_terminal, ConeCategory,
};
pub use comma::{coslice_monopole, slice_monopole, CommaCategory, Slice};
pub use completion::{
    comma_objects, comma_terminal_check, completion, completion_wrt_functor, completions, completions_agree, is_complete,
    is_completion, relative_completion, terminal_in_comma, CompletionResult, WitnessCounts,
};
pub use injective::{has_enough_injectives, injective_objects, is_injective_monopole, is_injective_polarity};
