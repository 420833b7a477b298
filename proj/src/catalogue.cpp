#include "tourlink/catalogue.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tourlink/errors.hpp"

#ifndef TOURLINK_DEFAULT_DATA_DIR
#define TOURLINK_DEFAULT_DATA_DIR "data"
#endif

namespace tourlink {

namespace {

CyclePattern parse_component(std::string_view s, std::string_view whole) {
  if (s.size() < 3) throw ParseError("component '" + std::string(s) + "' of '" + std::string(whole) + "' is shorter than 3");
  std::vector<Vertex> verts;
  for (char c : s) {
    if (c < '1' || c > '9') throw ParseError("unexpected character in '" + std::string(whole) + "'");
    const Vertex v = c - '1';
    if (std::find(verts.begin(), verts.end(), v) != verts.end())
      throw ParseError("repeated vertex " + std::string(1, c) + " in '" + std::string(whole) + "'");
    verts.push_back(v);
  }
  return CyclePattern(std::move(verts));
}

std::vector<Vertex> canonical_pair(const LinkEntry& l) {
  auto a = l.first.canonical();
  auto b = l.second.canonical();
  if (b < a) std::swap(a, b);
  a.push_back(-1);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

CompactEntry parse_compact(std::string_view s) {
  const auto hyphen = s.find('-');
  CompactEntry e;
  if (hyphen == std::string_view::npos) {
    e.components.push_back(parse_component(s, s));
    return e;
  }
  if (s.find('-', hyphen + 1) != std::string_view::npos) throw ParseError("more than one hyphen in '" + std::string(s) + "'");
  e.components.push_back(parse_component(s.substr(0, hyphen), s));
  e.components.push_back(parse_component(s.substr(hyphen + 1), s));
  return e;
}

std::string to_compact(const CyclePattern& p) {
  std::string s;
  for (Vertex v : p.verts()) {
    if (v > 8) throw DomainError("compact notation only covers labels 1..9");
    s.push_back(static_cast<char>('1' + v));
  }
  return s;
}

std::string to_compact(const LinkEntry& link) { return to_compact(link.first) + "-" + to_compact(link.second); }

EmbeddingCatalogue::EmbeddingCatalogue(std::string name, int n, std::vector<LinkEntry> links,
                                       std::vector<CyclePattern> knots)
    : name_(std::move(name)), n_(n) {
  auto check_labels = [&](const CyclePattern& p) {
    for (Vertex v : p.verts())
      if (v >= n_) throw DomainError("catalogue " + name_ + ": label " + std::to_string(v + 1) + " exceeds n");
  };
  std::vector<std::vector<Vertex>> seen;
  for (auto& l : links) {
    check_labels(l.first);
    check_labels(l.second);
    if (!l.first.disjoint_from(l.second))
      throw DomainError("catalogue " + name_ + ": link " + to_compact(l) + " has overlapping components");
    auto key = canonical_pair(l);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(std::move(key));
    links_.push_back(std::move(l));
  }
  for (auto& k : knots) {
    check_labels(k);
    if (std::find(knots_.begin(), knots_.end(), k) != knots_.end()) continue;
    knots_.push_back(std::move(k));
  }
}

EmbeddingCatalogue EmbeddingCatalogue::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("catalogue JSON: ") + e.what());
  }
  if (!j.contains("name") || !j.contains("n")) throw ParseError("catalogue JSON needs \"name\" and \"n\"");
  std::vector<LinkEntry> links;
  std::vector<CyclePattern> knots;
  for (const auto& s : j.value("links", nlohmann::json::array())) {
    auto e = parse_compact(s.get<std::string>());
    if (!e.is_link()) throw ParseError("link entry '" + s.get<std::string>() + "' has one component");
    links.push_back({e.components[0], e.components[1]});
  }
  for (const auto& s : j.value("knots", nlohmann::json::array())) {
    auto e = parse_compact(s.get<std::string>());
    if (e.is_link()) throw ParseError("knot entry '" + s.get<std::string>() + "' has two components");
    knots.push_back(e.components[0]);
  }
  return EmbeddingCatalogue(j.at("name").get<std::string>(), j.at("n").get<int>(), std::move(links), std::move(knots));
}

EmbeddingCatalogue EmbeddingCatalogue::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open catalogue " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

std::string EmbeddingCatalogue::to_json_text() const {
  nlohmann::json j;
  j["name"] = name_;
  j["n"] = n_;
  j["links"] = nlohmann::json::array();
  for (const auto& l : links_) j["links"].push_back(to_compact(l));
  j["knots"] = nlohmann::json::array();
  for (const auto& k : knots_) j["knots"].push_back(to_compact(k));
  return j.dump(2);
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("TOURLINK_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return TOURLINK_DEFAULT_DATA_DIR;
}

EmbeddingCatalogue fmellor_k7() { return EmbeddingCatalogue::load(data_dir() / "catalogues" / "fmellor_k7.json"); }
EmbeddingCatalogue amt_k8() { return EmbeddingCatalogue::load(data_dir() / "catalogues" / "amt_k8.json"); }
EmbeddingCatalogue conway_gordon_k7() {
  return EmbeddingCatalogue::load(data_dir() / "catalogues" / "conway_gordon_k7.json");
}

}  // namespace tourlink
