pub mod arith;
pub mod bsgs;
pub mod checks;
pub mod config;
pub mod corpus;
pub mod embedding;
pub mod error;
pub mod formation;
pub mod fp;
pub mod gmodule;
pub mod groupfile;
pub mod iso;
pub mod normal;
pub mod perm;
pub mod quotient;
pub mod report;
pub mod subgroup;
pub mod suite;
pub mod table;
pub mod theorems;
