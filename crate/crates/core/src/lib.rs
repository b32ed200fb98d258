pub mod algebra;
pub mod bounds;
pub mod certifier;
pub mod diagonal;
pub mod elliptic;
pub mod exclusion;
pub mod surface;
