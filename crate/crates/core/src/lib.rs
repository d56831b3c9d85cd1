//! Orbits of symmetric subgroups on flag varieties: clans, involutions,
//! closure order, Bruhat graphs and singularities of orbit closures.

pub mod clan;
pub mod descent;
pub mod error;
pub mod family;
pub mod graph;
pub mod moves;
pub mod oracle;
pub mod order;
pub mod perm;
pub mod poset;
pub mod rank;
pub mod richardson;
pub mod singularity;
pub mod verify;

pub use clan::{all_clans, Clan, Entry};
pub use error::{Error, Result};
pub use family::{enumerate, open_orbit, validate_family, validate_param, Family, FamilyTag, Param};
pub use order::{compare, leq_family, Comparison};
pub use perm::{Involution, Perm, SignedPerm};
pub use poset::{hasse, OrbitPoset};
pub use rank::{rank, rank_info, RankInfo};
pub use richardson::{is_grassmannian, richardson_pair, u_of_clan, v_of_clan, RichardsonPair};
