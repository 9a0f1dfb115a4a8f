#include "gali/scene.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace gali {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view v) {
  while (!v.empty() && is_blank(v.front())) v.remove_prefix(1);
  while (!v.empty() && is_blank(v.back())) v.remove_suffix(1);
  return v;
}

struct Section {
  bool is_curve = false;
  std::string name;
  std::size_t offset = 0;
  // key -> (value text, offset of value)
  std::map<std::string, std::pair<std::string, std::size_t>> entries;
};

Interval parse_interval(std::string_view value, std::size_t offset) {
  double bounds[2];
  std::size_t pos = 0;
  for (double& b : bounds) {
    while (pos < value.size() && is_blank(value[pos])) ++pos;
    std::size_t end = pos;
    while (end < value.size() && !is_blank(value[end])) ++end;
    if (end == pos) throw ParseError(offset + pos, "expected two numbers LO HI");
    auto [ptr, ec] = std::from_chars(value.data() + pos, value.data() + end, b);
    if (ec != std::errc() || ptr != value.data() + end || !std::isfinite(b)) {
      throw ParseError(offset + pos, "malformed number in domain");
    }
    pos = end;
  }
  while (pos < value.size() && is_blank(value[pos])) ++pos;
  if (pos != value.size()) throw ParseError(offset + pos, "unexpected text after domain bounds");
  if (!(bounds[0] < bounds[1])) {
    throw BadDomain("domain at offset " + std::to_string(offset) + " is empty: lo must be < hi");
  }
  return {bounds[0], bounds[1]};
}

Expr parse_entry(const Section& sec, const std::string& key, Variables vars) {
  auto it = sec.entries.find(key);
  if (it == sec.entries.end()) {
    throw ParseError(sec.offset, "section '" + sec.name + "' is missing key '" + key + "'");
  }
  const auto& [text, offset] = it->second;
  try {
    return parse_expr(text, vars);
  } catch (const ParseError& e) {
    throw ParseError(offset + e.offset(), "in '" + sec.name + "." + key + "': " + e.what());
  }
}

Interval domain_entry(const Section& sec, const std::string& key) {
  auto it = sec.entries.find(key);
  if (it == sec.entries.end()) {
    throw ParseError(sec.offset, "section '" + sec.name + "' is missing key '" + key + "'");
  }
  return parse_interval(it->second.first, it->second.second);
}

}  // namespace

const CurveDef* Scene::find_curve(std::string_view name) const noexcept {
  for (const auto& c : curves) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const SurfaceDef* Scene::find_surface(std::string_view name) const noexcept {
  for (const auto& s : surfaces) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

Scene parse_scene(std::string_view text) {
  std::vector<Section> sections;
  std::set<std::string> names;

  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t lead = 0;
    while (lead < line.size() && is_blank(line[lead])) ++lead;
    std::string_view body = trim(line);
    std::size_t body_offset = line_start + lead;

    if (!body.empty()) {
      if (body.front() == '[') {
        if (body.back() != ']') throw ParseError(body_offset + body.size(), "expected ']'");
        std::string_view inner = trim(body.substr(1, body.size() - 2));
        std::size_t space = inner.find_first_of(" \t");
        std::string_view kind = inner.substr(0, space);
        std::string_view name =
            space == std::string_view::npos ? std::string_view{} : trim(inner.substr(space));
        if (kind != "curve" && kind != "surface") {
          throw ParseError(body_offset + 1, "expected section kind 'curve' or 'surface'");
        }
        if (name.empty() || name.find_first_of(" \t") != std::string_view::npos) {
          throw ParseError(body_offset + 1, "expected a single section name");
        }
        if (!names.insert(std::string(name)).second) throw DuplicateName(std::string(name));
        Section sec;
        sec.is_curve = kind == "curve";
        sec.name = std::string(name);
        sec.offset = body_offset;
        sections.push_back(std::move(sec));
      } else {
        std::size_t eq = body.find('=');
        if (eq == std::string_view::npos) throw ParseError(body_offset, "expected 'key = value'");
        if (sections.empty()) throw ParseError(body_offset, "key outside of a section");
        auto& sec = sections.back();
        std::string key(trim(body.substr(0, eq)));
        static const std::set<std::string> curve_keys{"x", "y", "z", "domain"};
        static const std::set<std::string> surface_keys{"x", "y", "z", "domain_s", "domain_t"};
        const auto& allowed = sec.is_curve ? curve_keys : surface_keys;
        if (!allowed.count(key)) {
          throw ParseError(body_offset, "unknown key '" + key + "' in section '" + sec.name + "'");
        }
        std::string_view raw_value = body.substr(eq + 1);
        std::size_t value_lead = 0;
        while (value_lead < raw_value.size() && is_blank(raw_value[value_lead])) ++value_lead;
        std::string_view value = trim(raw_value);
        if (!sec.entries.emplace(key, std::pair{std::string(value), body_offset + eq + 1 + value_lead})
                 .second) {
          throw ParseError(body_offset, "key '" + key + "' repeated in section '" + sec.name + "'");
        }
      }
    }
    line_start = line_end + 1;
  }

  Scene scene;
  for (const auto& sec : sections) {
    if (sec.is_curve) {
      scene.curves.push_back({sec.name, parse_entry(sec, "x", Variables::S),
                              parse_entry(sec, "y", Variables::S),
                              parse_entry(sec, "z", Variables::S), domain_entry(sec, "domain")});
    } else {
      scene.surfaces.push_back({sec.name, parse_entry(sec, "x", Variables::ST),
                                parse_entry(sec, "y", Variables::ST),
                                parse_entry(sec, "z", Variables::ST),
                                domain_entry(sec, "domain_s"), domain_entry(sec, "domain_t")});
    }
  }
  return scene;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open scene file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

}  // namespace gali
