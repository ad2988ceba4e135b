use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("image list is not a bijection on 0..{0}")]
    NotBijection(usize),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} repeated in cycle notation")]
    RepeatedPoint(usize),
    #[error("malformed cycle notation: {0}")]
    Syntax(String),
    #[error("a permutation group needs a positive degree")]
    ZeroDegree,
    #[error("element is not in the group")]
    NotInGroup,
    #[error("line {line}: {msg}")]
    GroupFile { line: usize, msg: String },
    #[error("declared order {declared} but the generators give {computed}")]
    OrderMismatch { declared: u128, computed: u128 },
}
