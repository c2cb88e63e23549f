use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    VertexOutOfRange { vertex: usize, order: usize },
    Loop(usize),
    RepeatedNeighbor { vertex: usize, neighbor: usize },
    Asymmetric { u: usize, v: usize },
    Disconnected,
    TooSmall { order: usize, min: usize },
    NotPolytopal,
    NotAFace,
    NotTriangle(usize),
    NotOnFace(usize),
    /// A numeric argument outside the domain of an operation.
    Domain { what: &'static str, value: i64 },
    Glue(String),
    SearchExhausted(String),
    CapExceeded { cap: usize, requested: usize },
    Infeasible(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            Error::Loop(v) => write!(f, "loop at vertex {v}"),
            Error::RepeatedNeighbor { vertex, neighbor } => {
                write!(f, "neighbor {neighbor} repeated in rotation of {vertex}")
            }
            Error::Asymmetric { u, v } => {
                write!(f, "{v} is in the rotation of {u} but not conversely")
            }
            Error::Disconnected => f.write_str("graph is disconnected"),
            Error::TooSmall { order, min } => {
                write!(f, "order {order} is below the minimum {min}")
            }
            Error::NotPolytopal => f.write_str("graph is not polytopal"),
            Error::NotAFace => f.write_str("cycle is not a face of the embedding"),
            Error::NotTriangle(len) => write!(f, "face has length {len}, expected 3"),
            Error::NotOnFace(v) => write!(f, "vertex {v} does not lie on the face"),
            Error::Domain { what, value } => write!(f, "{what} = {value} is out of range"),
            Error::Glue(msg) => write!(f, "glue rejected: {msg}"),
            Error::SearchExhausted(msg) => write!(f, "search exhausted: {msg}"),
            Error::CapExceeded { cap, requested } => {
                write!(f, "requested {requested} exceeds the cap {cap}")
            }
            Error::Infeasible(msg) => write!(f, "infeasible: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
