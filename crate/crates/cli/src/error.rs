use fibdense::algebra::AlgebraError;
use fibdense::bounds::BoundError;
use fibdense::certifier::CertifyError;
use fibdense::diagonal::DiagonalError;
use fibdense::exclusion::ExclusionError;
use fibdense::surface::SurfaceError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("{0}")]
    BadArgument(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Exclusion(#[from] ExclusionError),
    #[error(transparent)]
    Certify(#[from] CertifyError),
    #[error(transparent)]
    Diagonal(#[from] DiagonalError),
}

fn surface_code(e: &SurfaceError) -> &'static str {
    match e {
        SurfaceError::Invalid { .. } => "invalid_surface",
        SurfaceError::NotOnSurface => "not_on_surface",
        SurfaceError::BadAxis(_) => "bad_argument",
        SurfaceError::SingularPosition => "singular_position",
        SurfaceError::Malformed(_) => "malformed_input",
        _ => "arithmetic",
    }
}

impl CliError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Io(_) => "io",
            CliError::Json(_) => "malformed_input",
            CliError::BadArgument(_) | CliError::Bound(_) => "bad_argument",
            CliError::Algebra(_) => "malformed_input",
            CliError::Surface(e) => surface_code(e),
            CliError::Exclusion(e) => match e {
                ExclusionError::SingularFiber => "singular_fiber",
                ExclusionError::BadR(..) => "bad_argument",
                ExclusionError::Budget(_) => "resource_limit",
                ExclusionError::Internal(_) => "internal",
                ExclusionError::Surface(s) => surface_code(s),
                _ => "arithmetic",
            },
            CliError::Certify(e) => match e {
                CertifyError::NotOnSurface(_) => "not_on_surface",
                CertifyError::ConstantJ(_) => "constant_j_map",
                CertifyError::Bound(_) => "bad_argument",
                CertifyError::Surface(s) => surface_code(s),
                CertifyError::Exclusion(ExclusionError::Surface(s)) => surface_code(s),
                CertifyError::Exclusion(_) => "arithmetic",
            },
            CliError::Diagonal(e) => match e {
                DiagonalError::NotOnSurface => "not_on_surface",
                DiagonalError::NotSquare(_) | DiagonalError::ZeroCoefficient(_) => "invalid_quartic",
                _ => "bad_argument",
            },
        }
    }
}
