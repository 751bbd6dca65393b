// benchmark-only crate; see benches/engines.rs
