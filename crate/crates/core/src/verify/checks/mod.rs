pub(super) mod brackets;
pub(super) mod examples;
pub(super) mod gauge;
pub(super) mod numbers;
pub(super) mod operators;
