//! The on-disk game format: a JSON document listing the player count and
//! sparse coalition worths as exact rational strings.
//!
//! ```json
//! {
//!   "n": 3,
//!   "worth": [
//!     { "coalition": [1], "value": "1" },
//!     { "coalition": [1, 2, 3], "value": "5/3" }
//!   ]
//! }
//! ```
//!
//! Coalition lists must be strictly increasing subsets of `1..=n`; missing
//! coalitions default to worth 0; the empty coalition may be listed only
//! with value 0; duplicates are rejected. Values are rational literals
//! (`"p/q"` or an integer string) — never floats.

use serde::{Deserialize, Serialize};

use tug_core::coalition::{Coalition, PlayerId};
use tug_core::game::Game;
use tug_core::rational::{format_rat, parse_rat};

use crate::CliError;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GameDoc {
    pub n: usize,
    #[serde(default)]
    pub worth: Vec<WorthEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WorthEntry {
    pub coalition: Vec<usize>,
    pub value: String,
}

fn coalition_from_list(list: &[usize], n: usize) -> Result<Coalition, CliError> {
    let mut prev = 0usize;
    for &index in list {
        if index <= prev {
            return Err(CliError::usage(format!(
                "coalition {list:?} is not strictly increasing"
            )));
        }
        if index > n {
            return Err(CliError::usage(format!(
                "coalition {list:?} mentions player {index}, but n = {n}"
            )));
        }
        prev = index;
    }
    let players = list
        .iter()
        .map(|&i| PlayerId::new(i).map_err(|e| CliError::usage(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Coalition::from_players(players))
}

pub fn game_from_doc(doc: &GameDoc) -> Result<Game, CliError> {
    let assignments = doc
        .worth
        .iter()
        .map(|entry| {
            let coalition = coalition_from_list(&entry.coalition, doc.n)?;
            let value = parse_rat(&entry.value).map_err(|e| CliError::usage(e.to_string()))?;
            Ok((coalition, value))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Game::from_assignments(doc.n, assignments).map_err(|e| CliError::usage(e.to_string()))
}

pub fn doc_from_game(game: &Game) -> GameDoc {
    let worth = game
        .nonzero_worths()
        .map(|(s, w)| WorthEntry {
            coalition: s.members().map(PlayerId::index).collect(),
            value: format_rat(w),
        })
        .collect();
    GameDoc { n: game.n(), worth }
}

pub fn parse_game_file(contents: &str) -> Result<Game, CliError> {
    let doc: GameDoc = serde_json::from_str(contents)
        .map_err(|e| CliError::usage(format!("malformed game file: {e}")))?;
    game_from_doc(&doc)
}

pub fn load_game(path: &std::path::Path) -> Result<Game, CliError> {
    let contents = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    parse_game_file(&contents)
}
