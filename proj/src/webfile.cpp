#include "websym/webfile.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "websym/error.hpp"

namespace websym {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& body, const std::string& where) {
  // Comma split at paren depth 0.
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : body) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  for (const std::string& s : out)
    if (s.empty()) throw ValidationError(where + ": empty list element");
  return out;
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
  throw ValidationError(origin + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace

Web parse_web_file(std::istream& in, const std::string& origin) {
  std::map<std::string, std::pair<std::string, int>> kv;  // key -> (value, line)
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = line;
    std::size_t hash = s.find('#');
    if (hash != std::string::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    std::size_t eq = s.find('=');
    if (eq == std::string::npos) fail(origin, lineno, "expected 'key = value'");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key.empty() || value.empty()) fail(origin, lineno, "empty key or value");
    if (kv.count(key)) fail(origin, lineno, "duplicate key '" + key + "'");
    kv[key] = {value, lineno};
  }

  auto take = [&](const std::string& key) -> std::optional<std::pair<std::string, int>> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    auto v = it->second;
    kv.erase(it);
    return v;
  };

  CoordPair coords = CoordPair::xy;
  if (auto v = take("variables")) {
    std::string flat;
    for (char c : v->first)
      if (!std::isspace(static_cast<unsigned char>(c))) flat += c;
    if (flat == "x,y") coords = CoordPair::xy;
    else if (flat == "u,v") coords = CoordPair::uv;
    else fail(origin, v->second, "variables must be 'x,y' or 'u,v'");
  }
  std::string label;
  if (auto v = take("label")) label = v->first;
  std::optional<int> degree;
  if (auto v = take("degree")) {
    try {
      degree = std::stoi(v->first);
    } catch (...) {
      fail(origin, v->second, "degree must be an integer");
    }
  }
  bool allow_vertical = false;
  if (auto v = take("allow_vertical")) {
    if (v->first == "true") allow_vertical = true;
    else if (v->first == "false") allow_vertical = false;
    else fail(origin, v->second, "allow_vertical must be true or false");
  }

  auto parse_list = [&](const std::pair<std::string, int>& v) {
    const std::string& body = v.first;
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
      fail(origin, v.second, "expected a bracketed list [ ... ]");
    std::vector<Expr> exprs;
    for (const std::string& s : split_list(body.substr(1, body.size() - 2), origin)) {
      try {
        exprs.push_back(parse_expr(s));
      } catch (const ParseError& e) {
        fail(origin, v.second, std::string("in '") + s + "': " + e.what());
      }
    }
    return exprs;
  };

  auto slopes = take("slopes");
  auto coefficients = take("coefficients");
  auto foliations = take("foliations");
  int given = (slopes ? 1 : 0) + (coefficients ? 1 : 0) + (foliations ? 1 : 0);
  if (given != 1)
    throw ValidationError(origin +
                          ": exactly one of slopes / coefficients / foliations required");
  if (!kv.empty())
    fail(origin, kv.begin()->second.second, "unknown key '" + kv.begin()->first + "'");

  Web w = [&] {
    if (slopes) return Web::from_slopes(parse_list(*slopes), coords, label);
    if (coefficients) {
      std::vector<MPoly> a;
      for (const Expr& e : parse_list(*coefficients)) {
        auto p = to_mpoly(e);
        if (!p) fail(origin, coefficients->second, "coefficients must be polynomial");
        a.push_back(std::move(*p));
      }
      return Web::from_coefficients(std::move(a), coords, label);
    }
    return allow_vertical ? Web::from_foliations_numeric(parse_list(*foliations), coords, label)
                          : Web::from_foliations(parse_list(*foliations), coords, label);
  }();
  if (degree && *degree != w.degree())
    throw ValidationError(origin + ": declared degree " + std::to_string(*degree) +
                          " does not match the definition (d = " +
                          std::to_string(w.degree()) + ")");
  return w;
}

Web load_web_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open web file '" + path + "'");
  return parse_web_file(in, path);
}

std::string render_web_file(const Web& w) {
  std::ostringstream os;
  if (!w.label().empty()) os << "label = " << w.label() << "\n";
  os << "variables = " << coord_pair_name(w.coords()) << "\n";
  os << "degree = " << w.degree() << "\n";
  auto list = [&](const char* key, const std::vector<std::string>& items) {
    os << key << " = [";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) os << ", ";
      os << items[i];
    }
    os << "]\n";
  };
  if (w.has_foliations()) {
    std::vector<std::string> items;
    for (const Expr& f : w.foliations()) items.push_back(render(f));
    if (!w.has_slopes()) os << "allow_vertical = true\n";
    list("foliations", items);
  } else if (w.has_slopes()) {
    std::vector<std::string> items;
    for (const Slope& s : w.slopes()) items.push_back(render(s.expr));
    list("slopes", items);
  } else {
    std::vector<std::string> items;
    for (const MPoly& a : w.coefficients()) items.push_back(a.render());
    list("coefficients", items);
  }
  return os.str();
}

}  // namespace websym
