#include "striptopo/document.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "striptopo/error.hpp"

namespace striptopo {

using nlohmann::json;

namespace {

struct Position {
  std::size_t line = 0;
  std::size_t column = 0;
};

Position position_at(std::string_view text, std::size_t offset) {
  Position p{1, 1};
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

// Start offset of every value in an already well-formed document, keyed by JSON pointer.
class OffsetIndex {
 public:
  explicit OffsetIndex(std::string_view text) : text_(text) {
    skip_ws();
    value("");
  }

  std::size_t at(const std::string& pointer) const {
    auto it = offsets_.find(pointer);
    return it == offsets_.end() ? 0 : it->second;
  }

 private:
  void skip_ws() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  std::string string_token() {
    std::string out;
    ++i_;  // opening quote
    while (i_ < text_.size() && text_[i_] != '"') {
      if (text_[i_] == '\\') ++i_;
      if (i_ < text_.size()) out += text_[i_++];
    }
    ++i_;
    return out;
  }

  static std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
      if (c == '~') out += "~0";
      else if (c == '/') out += "~1";
      else out += c;
    }
    return out;
  }

  void value(const std::string& pointer) {
    offsets_[pointer] = i_;
    if (i_ >= text_.size()) return;
    const char c = text_[i_];
    if (c == '{') {
      ++i_;
      skip_ws();
      while (i_ < text_.size() && text_[i_] != '}') {
        const std::string key = string_token();
        skip_ws();
        ++i_;  // colon
        skip_ws();
        value(pointer + "/" + escape(key));
        skip_ws();
        if (i_ < text_.size() && text_[i_] == ',') ++i_;
        skip_ws();
      }
      ++i_;
    } else if (c == '[') {
      ++i_;
      skip_ws();
      for (std::size_t k = 0; i_ < text_.size() && text_[i_] != ']'; ++k) {
        value(pointer + "/" + std::to_string(k));
        skip_ws();
        if (i_ < text_.size() && text_[i_] == ',') ++i_;
        skip_ws();
      }
      ++i_;
    } else if (c == '"') {
      string_token();
    } else {
      while (i_ < text_.size() && text_[i_] != ',' && text_[i_] != ']' && text_[i_] != '}' &&
             !std::isspace(static_cast<unsigned char>(text_[i_]))) {
        ++i_;
      }
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  std::map<std::string, std::size_t> offsets_;
};

class Reader {
 public:
  Reader(std::string_view text, const OffsetIndex& index) : text_(text), index_(index) {}

  [[noreturn]] void fail(const std::string& pointer, const std::string& what) const {
    const Position p = position_at(text_, index_.at(pointer));
    throw ParseError(what + " at " + (pointer.empty() ? "/" : pointer), p.line, p.column);
  }

  const json& member(const json& obj, const std::string& pointer, const char* key) const {
    if (!obj.is_object()) fail(pointer, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(pointer, std::string("missing field \"") + key + "\"");
    return *it;
  }

  std::string text_of(const json& v, const std::string& pointer) const {
    if (!v.is_string()) fail(pointer, "expected a string");
    const std::string s = v.get<std::string>();
    if (s.empty()) fail(pointer, "expected a non-empty id");
    return s;
  }

  const json& array_of(const json& v, const std::string& pointer) const {
    if (!v.is_array()) fail(pointer, "expected an array");
    return v;
  }

  ExtRational endpoint(const json& v, const std::string& pointer) const {
    try {
      if (v.is_number_integer()) return ExtRational(v.get<std::int64_t>());
      if (v.is_number_float()) return ExtRational::parse(v.dump());
      if (v.is_string()) return ExtRational::parse(v.get<std::string>());
    } catch (const Error& e) {
      fail(pointer, std::string("bad endpoint: ") + e.what());
    }
    fail(pointer, "expected a number or a string endpoint");
  }

 private:
  std::string_view text_;
  const OffsetIndex& index_;
};

void check_keys(const Reader& r, const json& obj, const std::string& pointer, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) r.fail(pointer, "expected an object");
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) r.fail(pointer + "/" + key, "unknown field \"" + key + "\"");
  }
}

}  // namespace

StripedSurface parse_surface(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    const Position p = position_at(text, byte);
    throw ParseError(std::string("malformed JSON: ") + e.what(), p.line, p.column);
  }
  const OffsetIndex index(text);
  const Reader r(text, index);

  check_keys(r, doc, "", {"strips", "gluings"});
  std::vector<ModelStripSpec> strips;
  std::map<std::string, std::string> owner_pointer;  // interval id -> pointer of its record
  const json& js = r.array_of(r.member(doc, "", "strips"), "/strips");
  for (std::size_t i = 0; i < js.size(); ++i) {
    const std::string sp = "/strips/" + std::to_string(i);
    check_keys(r, js[i], sp, {"id", "lower", "upper"});
    ModelStripSpec strip;
    strip.id = r.text_of(r.member(js[i], sp, "id"), sp + "/id");
    owner_pointer.emplace(strip.id, sp);
    for (Side side : {Side::Lower, Side::Upper}) {
      const char* key = side == Side::Lower ? "lower" : "upper";
      const std::string lp = sp + "/" + key;
      const json& list = r.array_of(r.member(js[i], sp, key), lp);
      for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string ip = lp + "/" + std::to_string(k);
        check_keys(r, list[k], ip, {"id", "endpoints"});
        Interval iv;
        iv.id = r.text_of(r.member(list[k], ip, "id"), ip + "/id");
        iv.side = side;
        iv.index = k;
        if (list[k].contains("endpoints")) {
          const json& e = list[k]["endpoints"];
          if (!e.is_array() || e.size() != 2) r.fail(ip + "/endpoints", "endpoints must be a pair [x0, x1]");
          iv.endpoints = Endpoints{r.endpoint(e[0], ip + "/endpoints/0"), r.endpoint(e[1], ip + "/endpoints/1")};
        }
        owner_pointer.emplace(iv.id, ip);
        strip.side(side).push_back(std::move(iv));
      }
    }
    strips.push_back(std::move(strip));
  }

  std::vector<GluingSpec> gluings;
  const json& jg = r.array_of(r.member(doc, "", "gluings"), "/gluings");
  for (std::size_t g = 0; g < jg.size(); ++g) {
    const std::string gp = "/gluings/" + std::to_string(g);
    check_keys(r, jg[g], gp, {"id", "a", "b", "orientation"});
    GluingSpec spec;
    if (jg[g].contains("id")) spec.id = r.text_of(jg[g]["id"], gp + "/id");
    spec.first = r.text_of(r.member(jg[g], gp, "a"), gp + "/a");
    spec.second = r.text_of(r.member(jg[g], gp, "b"), gp + "/b");
    const std::string o = r.text_of(r.member(jg[g], gp, "orientation"), gp + "/orientation");
    if (o == "preserving") {
      spec.orientation = Orientation::Preserving;
    } else if (o == "reversing") {
      spec.orientation = Orientation::Reversing;
    } else {
      r.fail(gp + "/orientation", "orientation must be \"preserving\" or \"reversing\"");
    }
    if (!spec.id.empty()) owner_pointer.emplace(spec.id, gp);
    gluings.push_back(std::move(spec));
  }

  try {
    return build_surface(std::move(strips), std::move(gluings));
  } catch (const Error& e) {
    std::string where;
    for (const std::string& id : e.ids()) {
      auto it = owner_pointer.find(id);
      if (it == owner_pointer.end()) continue;
      where = it->second;
      break;
    }
    // Gluing problems are reported at the gluing record rather than the interval.
    if (e.code() == ErrorCode::SameSideGluing || e.code() == ErrorCode::SelfGluing ||
        e.code() == ErrorCode::DoubleGluing || e.code() == ErrorCode::UnknownIntervalRef) {
      for (std::size_t g = 0; g < jg.size(); ++g) {
        for (const std::string& id : e.ids()) {
          if (jg[g].value("a", "") == id || jg[g].value("b", "") == id) {
            where = "/gluings/" + std::to_string(g);
            break;
          }
        }
        if (where.rfind("/gluings", 0) == 0) break;
      }
    }
    if (where.empty()) throw;
    const Position p = position_at(text, index.at(where));
    throw Error(e.code(),
                "line " + std::to_string(p.line) + ", column " + std::to_string(p.column) + " (" + where + "): " + e.what(),
                e.ids());
  }
}

StripedSurface load_surface(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string(), 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_surface(buf.str());
}

namespace {

nlohmann::ordered_json endpoint_json(const ExtRational& v) {
  if (v.is_finite() && v.den() == 1) return v.num();
  return v.to_string();
}

}  // namespace

nlohmann::ordered_json surface_to_json(const StripedSurface& surface) {
  nlohmann::ordered_json doc;
  doc["strips"] = nlohmann::ordered_json::array();
  for (const ModelStripSpec& st : surface.strips()) {
    nlohmann::ordered_json js;
    js["id"] = st.id;
    for (Side side : {Side::Lower, Side::Upper}) {
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (const Interval& iv : st.side(side)) {
        nlohmann::ordered_json ji;
        ji["id"] = iv.id;
        if (iv.endpoints) {
          ji["endpoints"] = nlohmann::ordered_json::array(
              {endpoint_json(iv.endpoints->first), endpoint_json(iv.endpoints->second)});
        }
        list.push_back(std::move(ji));
      }
      js[side == Side::Lower ? "lower" : "upper"] = std::move(list);
    }
    doc["strips"].push_back(std::move(js));
  }
  doc["gluings"] = nlohmann::ordered_json::array();
  for (const GluingSpec& g : surface.gluings()) {
    nlohmann::ordered_json jg;
    jg["id"] = g.id;
    jg["a"] = g.first;
    jg["b"] = g.second;
    jg["orientation"] = std::string(to_string(g.orientation));
    doc["gluings"].push_back(std::move(jg));
  }
  return doc;
}

std::string serialize_surface(const StripedSurface& surface) { return surface_to_json(surface).dump(2) + "\n"; }

}  // namespace striptopo
