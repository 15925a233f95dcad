use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// How a statistic is computed and what it returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StatKind {
    /// Integer-valued, computed by a prime/composite recursion.
    Scalar,
    /// Narumi-Katayama and the multiplicative Zagreb indices; recursions
    /// divide, so they run over exact rationals.
    Multiplicative,
    /// Parameterized by an exponent `alpha`.
    Alpha,
    /// Polynomial-valued.
    Polynomial,
    /// Read off one of the polynomial statistics.
    Derived,
}

macro_rules! stat_names {
    ($( $variant:ident => ($symbol:literal, $kind:ident, $oeis:expr, $description:literal), )*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum StatName {
            $( $variant, )*
        }

        impl StatName {
            pub const ALL: &'static [StatName] = &[$( StatName::$variant, )*];

            /// Upper-case symbol accepted on the command line, e.g. `"LLL"`.
            pub fn symbol(self) -> &'static str {
                match self { $( StatName::$variant => $symbol, )* }
            }

            pub fn kind(self) -> StatKind {
                match self { $( StatName::$variant => StatKind::$kind, )* }
            }

            /// OEIS sequence holding this statistic indexed by Matula number,
            /// where one exists. For the alpha statistics it is the `alpha = 1`
            /// sequence.
            pub fn oeis(self) -> Option<&'static str> {
                match self { $( StatName::$variant => $oeis, )* }
            }

            pub fn description(self) -> &'static str {
                match self { $( StatName::$variant => $description, )* }
            }
        }
    };
}

stat_names! {
    V => ("V", Scalar, Some("A061775"), "number of vertices"),
    E => ("E", Scalar, Some("A196050"), "number of edges"),
    H => ("H", Scalar, Some("A109082"), "height"),
    Lll => ("LLL", Scalar, Some("A184166"), "level of the lowest leaf (0 for the 1-vertex tree by convention)"),
    Lv => ("LV", Scalar, Some("A109129"), "number of leaves"),
    Md => ("MD", Scalar, Some("A196046"), "maximum vertex degree"),
    Dm => ("DM", Scalar, Some("A196058"), "diameter"),
    Pl => ("PL", Scalar, Some("A196047"), "path length"),
    Epl => ("EPL", Scalar, Some("A196048"), "external path length"),
    Bv => ("BV", Scalar, Some("A196049"), "number of branching vertices"),
    Pv => ("PV", Scalar, Some("A196067"), "number of pendant vertices"),
    Sp => ("SP", Scalar, Some("A196057"), "number of sibling pairs"),
    Vl => ("VL", Scalar, Some("A196068"), "visitation length"),
    Rst => ("RST", Scalar, Some("A184160"), "number of root subtrees"),
    St => ("ST", Scalar, Some("A184161"), "number of subtrees"),
    W => ("W", Scalar, Some("A196051"), "Wiener index"),
    Tw => ("TW", Scalar, Some("A196055"), "terminal Wiener index"),
    Z1 => ("Z1", Scalar, Some("A196053"), "first Zagreb index"),
    Z2 => ("Z2", Scalar, Some("A196054"), "second Zagreb index"),
    Nk => ("NK", Multiplicative, Some("A196063"), "Narumi-Katayama index"),
    Mz1 => ("MZ1", Multiplicative, Some("A196065"), "first multiplicative Zagreb index"),
    Mz2 => ("MZ2", Multiplicative, Some("A196064"), "second multiplicative Zagreb index"),
    AAlpha => ("A_ALPHA", Alpha, Some("A196052"), "sum of deg^alpha over the vertices at level 1"),
    RAlpha => ("R_ALPHA", Alpha, None, "general Randic index, sum of (deg*deg)^alpha over edges"),
    Pwp => ("PWP", Polynomial, Some("A196056"), "partial Wiener polynomial with respect to the root"),
    Wp => ("WP", Polynomial, Some("A196059"), "Wiener polynomial"),
    Dsp => ("DSP", Polynomial, Some("A182907"), "degree sequence polynomial"),
    Edp => ("EDP", Polynomial, Some("A184167"), "exit-distance polynomial"),
    HyperW => ("HYPER_W", Derived, Some("A196060"), "hyper-Wiener index"),
    MultW => ("MULT_W", Derived, Some("A196061"), "multiplicative Wiener index"),
    Polarity => ("POLARITY", Derived, Some("A184156"), "pairs at distance k (Wiener polarity for k = 3)"),
    SumEven => ("SUM_EVEN", Derived, Some("A184157"), "sum of the even distances"),
    SumOdd => ("SUM_ODD", Derived, Some("A184158"), "sum of the odd distances"),
    ExitSum => ("EXIT_SUM", Derived, Some("A184168"), "sum of the exit distances"),
    ExitMax => ("EXIT_MAX", Derived, Some("A184169"), "largest exit distance"),
    ExitMaxCount => ("EXIT_MAX_COUNT", Derived, Some("A184170"), "number of vertices with the largest exit distance"),
    LevelCount => ("LEVEL_COUNT", Derived, None, "number of vertices at level k"),
}

impl fmt::Display for StatName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Case-insensitive; `-` is accepted for `_`.
impl FromStr for StatName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        StatName::ALL
            .iter()
            .copied()
            .find(|name| name.symbol() == wanted)
            .ok_or_else(|| Error::InvalidInput(format!("unknown statistic {s:?}")))
    }
}
