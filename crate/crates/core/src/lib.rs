//! Exact computational workbench for Griess algebras generated by Ising
//! vectors, their Miyamoto involution groups, and their realisation inside
//! the lattice vertex algebra of E8 ⊕ E8 ⊕ E8.

pub mod axial;
pub mod cocycle;
pub mod fock;
pub mod lattice;
pub mod numerics;
pub mod scenarios;
