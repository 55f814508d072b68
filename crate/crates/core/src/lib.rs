//! Plane homaloidal types, ideals of fat points and base ideals of plane
//! Cremona maps, computed exactly over a prime field.

pub mod fat;
pub mod field;
pub mod forms;
pub mod ideal;
pub mod linalg;
pub mod net;
pub mod points;
pub mod report;
pub mod syzygy;
pub mod types;
