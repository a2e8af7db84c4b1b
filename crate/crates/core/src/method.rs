use std::fmt;
use std::str::FromStr;

/// The coding methods compared throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    /// Samples are entropy coded as they are.
    Direct,
    /// Residuals against the previous sample are coded.
    Predictive,
    /// Integer Haar (S-transform) subbands are coded.
    Haar,
    /// Reversible LeGall 5/3 subbands are coded.
    LeGall,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Direct,
        Method::Predictive,
        Method::Haar,
        Method::LeGall,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Predictive => "predictive",
            Method::Haar => "haar",
            Method::LeGall => "legall",
        }
    }

    pub fn wavelet(self) -> Option<Wavelet> {
        match self {
            Method::Haar => Some(Wavelet::Haar),
            Method::LeGall => Some(Wavelet::LeGall),
            Method::Direct | Method::Predictive => None,
        }
    }

    pub(crate) fn to_byte(self) -> u8 {
        self as u8
    }

    pub(crate) fn from_byte(b: u8) -> Option<Self> {
        Self::ALL.get(b as usize).copied()
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownMethod(pub String);

impl fmt::Display for UnknownMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown method '{}' (expected direct, predictive, haar or legall)",
            self.0
        )
    }
}

impl std::error::Error for UnknownMethod {}

impl FromStr for Method {
    type Err = UnknownMethod;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownMethod(s.to_string()))
    }
}

/// Reversible integer wavelets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Wavelet {
    Haar,
    LeGall,
}

impl Wavelet {
    pub(crate) fn to_byte(self) -> u8 {
        match self {
            Wavelet::Haar => 1,
            Wavelet::LeGall => 2,
        }
    }
}
