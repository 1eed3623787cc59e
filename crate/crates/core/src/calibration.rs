//! Conventions the construction leaves implicit.
//!
//! Each flag has a value selected by the calibration gate in
//! [`crate::verify::calibration_gate`]; the alternatives stay available so
//! the gate (and the `--flip` debug switch of the CLI) can show that every
//! one of them breaks something.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Scalar in front of the matrix product of two base 1-forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductFactor {
    I,
    One,
}

/// Global sign of the Hodge operator on even degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HodgeEvenSign {
    Plus,
    Minus,
}

/// Which side of the horizontal form the connection term of `D^ω` acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConnectionSide {
    /// `(η⊗g⁽¹⁾)·ω(π(g⁽²⁾))`
    Right,
    /// `ω(π(g⁽²⁾))·(η⊗g⁽¹⁾)`
    Left,
}

/// Involution on the graded tensor product: `a*⊗θ*` or `(−1)^{|a||θ|} a*⊗θ*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TensorStar {
    Plain,
    Koszul,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Calibration {
    pub product_factor: ProductFactor,
    pub hodge_even_sign: HodgeEvenSign,
    pub connection_side: ConnectionSide,
    pub tensor_star: TensorStar,
}

/// Names of the individual flags, for `--flip`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flag {
    ProductFactor,
    HodgeEvenSign,
    ConnectionSide,
    TensorStar,
}

impl Flag {
    pub const ALL: [Flag; 4] = [
        Flag::ProductFactor,
        Flag::HodgeEvenSign,
        Flag::ConnectionSide,
        Flag::TensorStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Flag::ProductFactor => "product-factor",
            Flag::HodgeEvenSign => "hodge-even-sign",
            Flag::ConnectionSide => "connection-side",
            Flag::TensorStar => "tensor-star",
        }
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Flag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Flag::ALL
            .into_iter()
            .find(|f| f.name() == s || f.name().replace('-', "_") == s)
            .ok_or_else(|| Error::Parse(format!("unknown calibration flag '{s}'")))
    }
}

impl Calibration {
    /// The combination selected by the calibration gate.
    pub const SELECTED: Calibration = Calibration {
        product_factor: ProductFactor::I,
        hodge_even_sign: HodgeEvenSign::Plus,
        connection_side: ConnectionSide::Right,
        tensor_star: TensorStar::Plain,
    };

    /// All 16 combinations, selected one first.
    pub fn all() -> Vec<Calibration> {
        let mut out = Vec::with_capacity(16);
        for pf in [ProductFactor::I, ProductFactor::One] {
            for hs in [HodgeEvenSign::Plus, HodgeEvenSign::Minus] {
                for cs in [ConnectionSide::Right, ConnectionSide::Left] {
                    for ts in [TensorStar::Plain, TensorStar::Koszul] {
                        out.push(Calibration {
                            product_factor: pf,
                            hodge_even_sign: hs,
                            connection_side: cs,
                            tensor_star: ts,
                        });
                    }
                }
            }
        }
        out
    }

    pub fn flip(mut self, flag: Flag) -> Calibration {
        match flag {
            Flag::ProductFactor => {
                self.product_factor = match self.product_factor {
                    ProductFactor::I => ProductFactor::One,
                    ProductFactor::One => ProductFactor::I,
                }
            }
            Flag::HodgeEvenSign => {
                self.hodge_even_sign = match self.hodge_even_sign {
                    HodgeEvenSign::Plus => HodgeEvenSign::Minus,
                    HodgeEvenSign::Minus => HodgeEvenSign::Plus,
                }
            }
            Flag::ConnectionSide => {
                self.connection_side = match self.connection_side {
                    ConnectionSide::Right => ConnectionSide::Left,
                    ConnectionSide::Left => ConnectionSide::Right,
                }
            }
            Flag::TensorStar => {
                self.tensor_star = match self.tensor_star {
                    TensorStar::Plain => TensorStar::Koszul,
                    TensorStar::Koszul => TensorStar::Plain,
                }
            }
        }
        self
    }

    /// Flags on which `self` differs from [`Calibration::SELECTED`].
    pub fn flipped(&self) -> Vec<Flag> {
        Flag::ALL
            .into_iter()
            .filter(|&f| Calibration::SELECTED.flip(f).get(f) == self.get(f))
            .collect()
    }

    fn get(&self, flag: Flag) -> u8 {
        match flag {
            Flag::ProductFactor => (self.product_factor == ProductFactor::One) as u8,
            Flag::HodgeEvenSign => (self.hodge_even_sign == HodgeEvenSign::Minus) as u8,
            Flag::ConnectionSide => (self.connection_side == ConnectionSide::Left) as u8,
            Flag::TensorStar => (self.tensor_star == TensorStar::Koszul) as u8,
        }
    }
}

impl Default for Calibration {
    fn default() -> Self {
        Calibration::SELECTED
    }
}

impl fmt::Display for Calibration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "product={} hodge_even={} connection_side={} tensor_star={}",
            match self.product_factor {
                ProductFactor::I => "i",
                ProductFactor::One => "1",
            },
            match self.hodge_even_sign {
                HodgeEvenSign::Plus => "+",
                HodgeEvenSign::Minus => "-",
            },
            match self.connection_side {
                ConnectionSide::Right => "right",
                ConnectionSide::Left => "left",
            },
            match self.tensor_star {
                TensorStar::Plain => "plain",
                TensorStar::Koszul => "koszul",
            },
        )
    }
}
