//! Edge labels.

use std::fmt;

/// An edge value: an integer, or one of three sentinel values that match no
/// integer and only their own kind.
///
/// The derived ordering is the canonical label order used everywhere tiles
/// are sorted: `Num(k)` ascending by `k`, then `Top`, `Left`, `Right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Num(i64),
    Top,
    Left,
    Right,
}

impl Label {
    /// Text token: the decimal integer, or `T`/`L`/`R` for the sentinels.
    pub fn token(&self) -> String {
        match self {
            Label::Num(k) => k.to_string(),
            Label::Top => "T".to_string(),
            Label::Left => "L".to_string(),
            Label::Right => "R".to_string(),
        }
    }

    /// Inverse of [`Label::token`]. Returns `None` on anything else.
    pub fn from_token(tok: &str) -> Option<Label> {
        match tok {
            "T" => Some(Label::Top),
            "L" => Some(Label::Left),
            "R" => Some(Label::Right),
            _ => tok.parse::<i64>().ok().map(Label::Num),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

impl From<i64> for Label {
    fn from(k: i64) -> Self {
        Label::Num(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sentinels_equal_only_themselves() {
        assert_ne!(Label::Top, Label::Num(0));
        assert_ne!(Label::Left, Label::Num(0));
        assert_ne!(Label::Right, Label::Num(0));
        assert_ne!(Label::Top, Label::Left);
        assert_eq!(Label::Num(3), Label::Num(3));
        assert_ne!(Label::Num(3), Label::Num(-3));
    }

    #[test]
    fn canonical_order() {
        let mut labels = vec![Label::Right, Label::Num(5), Label::Top, Label::Num(-2), Label::Left];
        labels.sort();
        assert_eq!(
            labels,
            vec![Label::Num(-2), Label::Num(5), Label::Top, Label::Left, Label::Right]
        );
    }

    #[test]
    fn tokens_round_trip() {
        for l in [Label::Num(-17), Label::Num(0), Label::Top, Label::Left, Label::Right] {
            assert_eq!(Label::from_token(&l.token()), Some(l));
        }
        assert_eq!(Label::from_token("x"), None);
        assert_eq!(Label::from_token(""), None);
        assert_eq!(Label::from_token("1.5"), None);
    }
}
