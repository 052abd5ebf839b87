use thiserror::Error;

use crate::weyl::LieType;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0:?} is not a signed permutation of 1..{1}")]
    NotAPermutation(Vec<i32>, usize),
    #[error("type D elements need an even number of sign changes, got {0:?}")]
    OddSignCountInTypeD(Vec<i32>),
    #[error("rank must be at least {min} for type {lie_type}, got {rank}")]
    RankTooSmall {
        lie_type: LieType,
        rank: usize,
        min: usize,
    },
    #[error("operands differ in type or rank ({0} vs {1})")]
    TypeMismatch(String, String),
    #[error("letter {letter} is not a simple reflection index for rank {rank}")]
    InvalidLetter { letter: usize, rank: usize },
    #[error("word {0} is not reduced")]
    NotReduced(String),
    #[error("position {position} is outside 1..={rank}")]
    InvalidPosition { position: usize, rank: usize },
    #[error("{0} is not a {1}-length coset representative")]
    NotCosetRepresentative(String, &'static str),
    #[error("writing output: {0}")]
    Output(String),
    #[error("clan number {0} does not occur exactly twice")]
    UnmatchedNumber(u32),
    #[error("clan {0} fits none of the symmetric (2,q) descriptions")]
    NotClassifiable(String),
    #[error("clan {0} is not symmetric")]
    NotSymmetric(String),
    #[error("clan {clan} has signature or length unsuited to {lie_type}{rank}")]
    WrongSignature {
        clan: String,
        lie_type: LieType,
        rank: usize,
    },
    #[error("v = {0} represents a negative coset; only positive v are supported")]
    NegativeVNotSupported(String),
    #[error("u = {u} and v = {v} are not Bruhat comparable")]
    IncomparablePair { u: String, v: String },
    #[error("the case v^-1(1) = u^-1(-1) = n does not occur in type D")]
    TypeDCase5Excluded,
    #[error("structure constant {0} is not a nonnegative integer")]
    NonIntegerResult(String),
    #[error("l(u) + l(v) = {expected} but l(w) = {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("connected clan {source_clan} raises to disconnected clan {target} under s{letter}")]
    ForbiddenSplitPattern {
        source_clan: String,
        target: String,
        letter: usize,
    },
    #[error("oracle self-check failed: {0}")]
    OracleMiscalibrated(String),
    #[error("cannot parse {0:?}: {1}")]
    Parse(String, String),
}
