pub mod algebra;
pub mod hilb;
pub mod monoid;
