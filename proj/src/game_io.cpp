#include "recgame/game_io.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace recgame {

namespace {

// Insertion-ordered so the item order in the file is the item order of the
// game (and serialization round-trips byte-identically).
using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path + ": " + message);
}

const Json& require(const Json& obj, const std::string& path, const std::string& key) {
  if (!obj.is_object() || !obj.contains(key)) fail(path.empty() ? key : path + "." + key, "missing field");
  return obj.at(key);
}

template <typename T>
T parse_value(const Json& v, const std::string& path);

template <>
Rational parse_value<Rational>(const Json& v, const std::string& path) {
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

template <>
double parse_value<double>(const Json& v, const std::string& path) {
  if (v.is_string()) return parse_value<Rational>(v, path).to_double();
  if (!v.is_number()) fail(path, "expected a number or numeric string");
  return v.get<double>();
}

template <typename T>
Game<T> parse_typed(const Json& root, GameMode mode) {
  Game<T> game;
  game.mode = mode;

  const Json& users = require(root, "", "users");
  if (!users.is_array() || users.empty()) fail("users", "expected a non-empty array of user names");
  for (std::size_t i = 0; i < users.size(); ++i) {
    if (!users[i].is_string()) fail("users[" + std::to_string(i) + "]", "expected a string");
    game.users.push_back(users[i].get<std::string>());
  }
  if (std::set<std::string>(game.users.begin(), game.users.end()).size() != game.users.size())
    fail("users", "duplicate user name");

  const Json& items = require(root, "", "items");
  if (!items.is_object() || items.empty()) fail("items", "expected a non-empty object of items");
  game.sat.resize(game.users.size());
  for (const auto& [item_name, row] : items.items()) {
    game.items.push_back(item_name);
    const std::string item_path = "items." + item_name;
    if (!row.is_object()) fail(item_path, "expected an object mapping user to satisfaction");
    for (const auto& [user_name, v] : row.items()) {
      if (std::find(game.users.begin(), game.users.end(), user_name) == game.users.end())
        fail(item_path + "." + user_name, "unknown user");
    }
    for (std::size_t u = 0; u < game.users.size(); ++u) {
      const std::string path = item_path + "." + game.users[u];
      if (!row.contains(game.users[u])) fail(path, "missing satisfaction value");
      T value = parse_value<T>(row.at(game.users[u]), path);
      if (value < numeric_traits<T>::zero() || value > numeric_traits<T>::one())
        fail(path, "satisfaction outside [0,1]");
      game.sat[u].push_back(value);
    }
  }

  const Json& players = require(root, "", "players");
  if (!players.is_array() || players.empty()) fail("players", "expected a non-empty array of players");
  for (std::size_t j = 0; j < players.size(); ++j) {
    const std::string path = "players[" + std::to_string(j) + "]";
    const Json& p = players[j];
    typename Game<T>::Player player;
    const Json& name = require(p, path, "name");
    if (!name.is_string()) fail(path + ".name", "expected a string");
    player.name = name.get<std::string>();

    const Json& menu = require(p, path, "menu");
    if (!menu.is_array() || menu.empty()) fail(path + ".menu", "empty menu");
    for (const Json& entry : menu) {
      if (!entry.is_string()) fail(path + ".menu", "expected item names");
      const std::string item = entry.get<std::string>();
      auto it = std::find(game.items.begin(), game.items.end(), item);
      if (it == game.items.end()) fail(path + ".menu", "unknown item reference \"" + item + "\"");
      player.menu.push_back(static_cast<ItemIndex>(it - game.items.begin()));
    }
    std::sort(player.menu.begin(), player.menu.end());
    if (std::adjacent_find(player.menu.begin(), player.menu.end()) != player.menu.end())
      fail(path + ".menu", "duplicate item reference");

    // Budgets only constrain personalized offers; in single mode exactly one
    // item is shown regardless, so any budget field is ignored.
    if (mode == GameMode::Personalized) {
      if (p.contains("budget")) {
        const Json& b = p.at("budget");
        if (!b.is_number_integer()) fail(path + ".budget", "expected an integer");
        player.budget = b.get<int>();
        if (player.budget < 1 || player.budget > static_cast<int>(player.menu.size()))
          fail(path + ".budget", "out of range (must be in [1, menu size])");
      } else {
        player.budget = static_cast<int>(player.menu.size());
      }
    } else {
      player.budget = 1;
    }
    game.players.push_back(std::move(player));
  }
  std::set<std::string> names;
  for (const auto& p : game.players)
    if (!names.insert(p.name).second) fail("players", "duplicate player name \"" + p.name + "\"");
  return game;
}

template <typename T>
std::string serialize_typed(const Game<T>& game) {
  Json root;
  root["mode"] = game.mode == GameMode::Single ? "single" : "personalized";
  root["users"] = game.users;
  Json items = Json::object();
  for (std::size_t l = 0; l < game.items.size(); ++l) {
    Json row = Json::object();
    for (std::size_t u = 0; u < game.users.size(); ++u) {
      if constexpr (numeric_traits<T>::exact) {
        row[game.users[u]] = game.sat[u][l].fraction_str();
      } else {
        row[game.users[u]] = game.sat[u][l];
      }
    }
    items[game.items[l]] = std::move(row);
  }
  root["items"] = std::move(items);
  Json players = Json::array();
  for (const auto& p : game.players) {
    Json jp;
    jp["name"] = p.name;
    Json menu = Json::array();
    for (ItemIndex l : p.menu) menu.push_back(game.items[static_cast<std::size_t>(l)]);
    jp["menu"] = std::move(menu);
    jp["budget"] = p.budget;
    players.push_back(std::move(jp));
  }
  root["players"] = std::move(players);
  return root.dump(2) + "\n";
}

}  // namespace

AnyGame parse_game(std::string_view text) {
  Json root = Json::parse(text, nullptr, false);
  if (root.is_discarded()) throw ParseError("document: not valid JSON");
  if (!root.is_object()) throw ParseError("document: expected a JSON object");

  const Json& mode_field = require(root, "", "mode");
  GameMode mode;
  if (mode_field == "single") {
    mode = GameMode::Single;
  } else if (mode_field == "personalized") {
    mode = GameMode::Personalized;
  } else {
    fail("mode", "expected \"single\" or \"personalized\"");
  }

  // Satisfaction entries written as strings parse exactly; any JSON number
  // makes the whole game floating point.
  bool exact = true;
  const Json& items = require(root, "", "items");
  if (items.is_object()) {
    for (const auto& [item_name, row] : items.items()) {
      (void)item_name;
      if (!row.is_object()) continue;
      for (const auto& [user_name, v] : row.items()) {
        (void)user_name;
        if (!v.is_string()) exact = false;
      }
    }
  }
  if (exact) return parse_typed<Rational>(root, mode);
  return parse_typed<double>(root, mode);
}

std::string serialize_game(const Game<Rational>& game) { return serialize_typed(game); }
std::string serialize_game(const Game<double>& game) { return serialize_typed(game); }
std::string serialize_game(const AnyGame& game) {
  return std::visit([](const auto& g) { return serialize_typed(g); }, game);
}

}  // namespace recgame
