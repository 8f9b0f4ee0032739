//! Runs every example so they stay in sync with the library.

#[allow(dead_code)]
#[path = "../examples/worked_game.rs"]
mod worked_game;

#[allow(dead_code)]
#[path = "../examples/two_pathless_forms.rs"]
mod two_pathless_forms;

#[allow(dead_code)]
#[path = "../examples/t_unique_sweep.rs"]
mod t_unique_sweep;

#[allow(dead_code)]
#[path = "../examples/forkless_normal_form.rs"]
mod forkless_normal_form;

#[allow(dead_code)]
#[path = "../examples/a_kills_j.rs"]
mod a_kills_j;

#[allow(dead_code)]
#[path = "../examples/series_identity.rs"]
mod series_identity;

#[allow(dead_code)]
#[path = "../examples/forkless_counts.rs"]
mod forkless_counts;

#[allow(dead_code)]
#[path = "../examples/symmetry.rs"]
mod symmetry;

#[test]
fn worked_game() {
    worked_game::run_example().unwrap();
}

#[test]
fn two_pathless_forms() {
    two_pathless_forms::run_example().unwrap();
}

#[test]
fn t_unique_sweep() {
    t_unique_sweep::run_example().unwrap();
}

#[test]
fn forkless_normal_form() {
    forkless_normal_form::run_example().unwrap();
}

#[test]
fn a_kills_j() {
    a_kills_j::run_example().unwrap();
}

#[test]
fn series_identity() {
    series_identity::run_example().unwrap();
}

#[test]
fn forkless_counts() {
    forkless_counts::run_example().unwrap();
}

#[test]
fn symmetry() {
    symmetry::run_example().unwrap();
}
