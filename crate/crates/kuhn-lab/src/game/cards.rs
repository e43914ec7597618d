//! Cards, seats and deal enumeration.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Four-card deck with the strict order A > K > Q > J.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Card {
    Jack,
    Queen,
    King,
    Ace,
}

impl Card {
    pub const ALL: [Card; 4] = [Card::Ace, Card::King, Card::Queen, Card::Jack];

    pub fn letter(self) -> char {
        match self {
            Card::Ace => 'A',
            Card::King => 'K',
            Card::Queen => 'Q',
            Card::Jack => 'J',
        }
    }

    pub fn from_letter(c: char) -> Option<Card> {
        match c {
            'A' => Some(Card::Ace),
            'K' => Some(Card::King),
            'Q' => Some(Card::Queen),
            'J' => Some(Card::Jack),
            _ => None,
        }
    }
}

impl fmt::Display for Card {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Seat at the table. Payoff arrays are indexed `[P1, P2, P3]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Seat {
    Player1,
    Player2,
    Player3,
}

impl Seat {
    pub const ALL: [Seat; 3] = [Seat::Player1, Seat::Player2, Seat::Player3];

    /// Index into per-player arrays.
    pub fn index(self) -> usize {
        match self {
            Seat::Player1 => 0,
            Seat::Player2 => 1,
            Seat::Player3 => 2,
        }
    }
}

/// One deal of three distinct cards, written in the order
/// (Player 3's card, Player 1's card, Player 2's card), e.g. "AJQ".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Deal {
    pub p3: Card,
    pub p1: Card,
    pub p2: Card,
}

impl Deal {
    pub fn new(p3: Card, p1: Card, p2: Card) -> Deal {
        assert!(p3 != p1 && p3 != p2 && p1 != p2, "deal cards must be distinct");
        Deal { p3, p1, p2 }
    }

    pub fn card(&self, seat: Seat) -> Card {
        match seat {
            Seat::Player1 => self.p1,
            Seat::Player2 => self.p2,
            Seat::Player3 => self.p3,
        }
    }

    /// Seat holding the best card; wins the pot at a hypothetical showdown
    /// of all three hands.
    pub fn best_seat(&self) -> Seat {
        let mut best = Seat::Player3;
        for seat in [Seat::Player1, Seat::Player2] {
            if self.card(seat) > self.card(best) {
                best = seat;
            }
        }
        best
    }

    pub fn parse(text: &str) -> Option<Deal> {
        let mut chars = text.chars();
        let p3 = Card::from_letter(chars.next()?)?;
        let p1 = Card::from_letter(chars.next()?)?;
        let p2 = Card::from_letter(chars.next()?)?;
        if chars.next().is_some() || p3 == p1 || p3 == p2 || p1 == p2 {
            return None;
        }
        Some(Deal { p3, p1, p2 })
    }
}

impl fmt::Display for Deal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.p3, self.p1, self.p2)
    }
}

/// Deal families used by the different experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DealSet {
    /// All 24 ordered deals; the analytic expectations average over these.
    Full24,
    /// The 12 deals where Player 3 holds A or J; deals where Player 3 holds
    /// K or Q are check-downs with no decisions and are skipped by the
    /// simulation. Ordered as the ten meaningful deals followed by the two
    /// decision-free deals AJK and AQK.
    Sim12,
    /// The ten deals that carry information, D1..D10, in canonical order.
    Meaningful10,
}

/// D1..D10: the ten simulation deals in which at least one decision is made.
const MEANINGFUL: [&str; 10] = [
    "AJQ", "AQJ", "AKQ", "AKJ", "JAK", "JAQ", "JKA", "JQA", "JKQ", "JQK",
];

pub fn enumerate_deals(set: DealSet) -> Vec<Deal> {
    match set {
        DealSet::Full24 => {
            let mut deals = Vec::with_capacity(24);
            for &p3 in &Card::ALL {
                for &p1 in &Card::ALL {
                    for &p2 in &Card::ALL {
                        if p3 != p1 && p3 != p2 && p1 != p2 {
                            deals.push(Deal { p3, p1, p2 });
                        }
                    }
                }
            }
            deals
        }
        DealSet::Sim12 => {
            let mut deals = enumerate_deals(DealSet::Meaningful10);
            deals.push(Deal::parse("AJK").unwrap());
            deals.push(Deal::parse("AQK").unwrap());
            deals
        }
        DealSet::Meaningful10 => MEANINGFUL
            .iter()
            .map(|s| Deal::parse(s).unwrap())
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn card_order_is_a_k_q_j() {
        assert!(Card::Ace > Card::King);
        assert!(Card::King > Card::Queen);
        assert!(Card::Queen > Card::Jack);
    }

    #[test]
    fn full_set_has_24_distinct_deals() {
        let deals = enumerate_deals(DealSet::Full24);
        assert_eq!(deals.len(), 24);
        let unique: std::collections::HashSet<_> = deals.iter().map(|d| d.to_string()).collect();
        assert_eq!(unique.len(), 24);
    }

    #[test]
    fn sim_set_excludes_king_and_queen_for_player3() {
        let deals = enumerate_deals(DealSet::Sim12);
        assert_eq!(deals.len(), 12);
        assert!(deals
            .iter()
            .all(|d| d.p3 == Card::Ace || d.p3 == Card::Jack));
        assert!(deals.contains(&Deal::parse("AJK").unwrap()));
        assert!(deals.contains(&Deal::parse("AQK").unwrap()));
    }

    #[test]
    fn meaningful_order_matches_canonical_listing() {
        let deals = enumerate_deals(DealSet::Meaningful10);
        assert_eq!(deals.len(), 10);
        assert_eq!(deals[0].to_string(), "AJQ");
        assert_eq!(deals[8].to_string(), "JKQ");
        assert_eq!(deals[9].to_string(), "JQK");
    }

    #[test]
    fn best_seat_picks_highest_card() {
        let d = Deal::parse("JKA").unwrap();
        assert_eq!(d.best_seat(), Seat::Player2);
        let d = Deal::parse("AJQ").unwrap();
        assert_eq!(d.best_seat(), Seat::Player3);
    }
}
