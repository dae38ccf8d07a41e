//! The mdbook guide chapters, included as doc modules so that `cargo test`
//! runs every code snippet in the book (populated alongside `book/src`).
