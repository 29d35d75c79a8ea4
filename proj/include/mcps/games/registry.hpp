#pragma once

#include <string_view>
#include <vector>

#include "mcps/games/atarigo.hpp"
#include "mcps/games/breakthrough.hpp"
#include "mcps/games/gomoku.hpp"
#include "mcps/games/hex.hpp"
#include "mcps/games/investment.hpp"
#include "mcps/games/knightthrough.hpp"
#include "mcps/games/nogo.hpp"
#include "mcps/games/videogame.hpp"
#include "mcps/games/wargame.hpp"

namespace mcps::games {

inline const std::vector<std::string_view>& game_names() {
    static const std::vector<std::string_view> names = {
        "atarigo6",  "breakthrough8", "gomoku9",    "hex7",      "knightthrough8",
        "nogo5",     "nogo5-3p",      "wargame-10", "wargame-20", "wargame-3p",
        "invest-11", "invest-21",     "invest-3p",  "videogame"};
    return names;
}

// Invokes fn with the game registered under `name`. Returns false for an
// unknown name.
template <typename Fn>
bool with_game(std::string_view name, Fn&& fn) {
    if (name == "atarigo6") { fn(Atarigo(6)); return true; }
    if (name == "breakthrough8") { fn(Breakthrough(8)); return true; }
    if (name == "gomoku9") { fn(Gomoku(9)); return true; }
    if (name == "hex7") { fn(Hex(7)); return true; }
    if (name == "knightthrough8") { fn(Knightthrough(8)); return true; }
    if (name == "nogo5") { fn(Nogo(5, 2)); return true; }
    if (name == "nogo5-3p") { fn(Nogo(5, 3)); return true; }
    if (name == "wargame-10") { fn(Wargame(10, 2)); return true; }
    if (name == "wargame-20") { fn(Wargame(20, 2)); return true; }
    if (name == "wargame-3p") { fn(Wargame(10, 3)); return true; }
    if (name == "invest-11") { fn(Investment(11, 2)); return true; }
    if (name == "invest-21") { fn(Investment(21, 2)); return true; }
    if (name == "invest-3p") { fn(Investment(10, 3)); return true; }
    if (name == "videogame") { fn(VideoGame()); return true; }
    return false;
}

}  // namespace mcps::games
