use std::fmt;

/// The four sorts of the two-level foundation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sort {
    PropS,
    Prop,
    Set,
    Col,
}

impl Sort {
    /// The subsumption order: `prop_s <= prop <= col` and
    /// `prop_s <= set <= col`; `set` and `prop` are incomparable.
    pub fn leq(self, other: Sort) -> bool {
        use Sort::*;
        match (self, other) {
            (a, b) if a == b => true,
            (PropS, _) => true,
            (_, Col) => true,
            _ => false,
        }
    }

    /// Least upper bound in the subsumption order.
    pub fn lub(self, other: Sort) -> Sort {
        use Sort::*;
        if self.leq(other) {
            other
        } else if other.leq(self) {
            self
        } else {
            Col
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Sort::Col => "col",
            Sort::Set => "set",
            Sort::Prop => "prop",
            Sort::PropS => "props",
        }
    }

    pub fn from_name(s: &str) -> Option<Sort> {
        match s {
            "col" => Some(Sort::Col),
            "set" => Some(Sort::Set),
            "prop" => Some(Sort::Prop),
            "props" | "prop_s" => Some(Sort::PropS),
            _ => None,
        }
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
