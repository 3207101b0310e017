#include "coauth/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <istream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "coauth/error.hpp"
#include "coauth/report_io.hpp"

namespace coauth {

namespace {

using nlohmann::json;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

const json& require(const json& obj, const char* key, std::size_t line_no) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(line_no, std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const json& obj, const char* key, std::size_t line_no) {
  const json& v = require(obj, key, line_no);
  if (!v.is_string()) throw ParseError(line_no, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const json& v, const char* key) {
  if (!v.is_array()) throw ValidationError(std::string("'") + key + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw ValidationError(std::string("'") + key + "' must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

bool contains_token(const std::vector<std::string>& tokens, const std::string& needle_lower) {
  return std::find(tokens.begin(), tokens.end(), needle_lower) != tokens.end();
}

}  // namespace

std::string_view to_string(Provenance p) noexcept {
  return p == Provenance::seed ? "seed" : "expanded";
}

void RelevanceSpec::validate() const {
  if (keywords.empty() && acronyms.empty())
    throw ValidationError("relevance spec needs at least one keyword or acronym");
}

void SeedSpec::validate() const {
  if (window.start > window.end) throw ValidationError("seed window start is after its end");
}

PaperRecord parse_record(std::string_view line, std::size_t line_no) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) throw ParseError(line_no, "record must be an object");
  static const std::unordered_set<std::string> known{"id", "title", "venue", "year", "authors"};
  for (const auto& [key, _] : obj.items())
    if (!known.contains(key)) throw ParseError(line_no, "unknown field '" + key + "'");

  PaperRecord rec;
  rec.id = require_string(obj, "id", line_no);
  rec.title = require_string(obj, "title", line_no);
  rec.venue = require_string(obj, "venue", line_no);
  const json& year = require(obj, "year", line_no);
  if (!year.is_number_integer()) throw ParseError(line_no, "field 'year' must be an integer");
  rec.year = year.get<int>();
  const json& authors = require(obj, "authors", line_no);
  if (!authors.is_array() || authors.empty())
    throw ParseError(line_no, "field 'authors' must be a non-empty array");
  std::unordered_set<std::string> seen;
  for (const auto& a : authors) {
    if (!a.is_string()) throw ParseError(line_no, "author names must be strings");
    auto name = a.get<std::string>();
    if (name.empty()) throw ParseError(line_no, "empty author name");
    if (!seen.insert(name).second) throw ParseError(line_no, "duplicate author '" + name + "'");
    rec.authors.push_back(std::move(name));
  }
  if (rec.id.empty()) throw ParseError(line_no, "empty id");
  return rec;
}

std::vector<PaperRecord> parse_corpus(std::istream& in) {
  std::vector<PaperRecord> out;
  std::unordered_map<std::string, std::size_t> first_line;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    PaperRecord rec = parse_record(line, line_no);
    auto [it, inserted] = first_line.emplace(rec.id, line_no);
    if (!inserted)
      throw ValidationError("line " + std::to_string(line_no) + ": duplicate id '" + rec.id +
                            "' (first seen on line " + std::to_string(it->second) + ")");
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<PaperRecord> parse_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus " + path.string());
  return parse_corpus(in);
}

std::string serialize_record(const PaperRecord& rec) {
  nlohmann::ordered_json obj;
  obj["id"] = rec.id;
  obj["title"] = rec.title;
  obj["venue"] = rec.venue;
  obj["year"] = rec.year;
  obj["authors"] = rec.authors;
  return obj.dump();
}

void write_corpus(std::span<const PaperRecord> records, const std::filesystem::path& path) {
  std::string text;
  for (const auto& r : records) {
    text += serialize_record(r);
    text += '\n';
  }
  write_file(path, text);
}

RunSpec parse_run_spec(std::string_view text) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("spec file: invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) throw ValidationError("spec file must hold one object");
  static const std::unordered_set<std::string> known{"keywords", "acronyms", "seed_venues",
                                                     "window_start", "window_end"};
  for (const auto& [key, _] : obj.items())
    if (!known.contains(key)) throw ValidationError("spec file: unknown field '" + key + "'");

  RunSpec spec;
  if (obj.contains("keywords")) spec.relevance.keywords = string_list(obj["keywords"], "keywords");
  if (obj.contains("acronyms")) spec.relevance.acronyms = string_list(obj["acronyms"], "acronyms");
  if (obj.contains("seed_venues"))
    spec.seeds.seed_venues = string_list(obj["seed_venues"], "seed_venues");
  for (const char* key : {"window_start", "window_end"})
    if (!obj.contains(key) || !obj[key].is_number_integer())
      throw ValidationError(std::string("spec file: '") + key + "' must be an integer");
  spec.seeds.window = {obj["window_start"].get<int>(), obj["window_end"].get<int>()};
  spec.relevance.validate();
  spec.seeds.validate();
  return spec;
}

RunSpec load_run_spec(const std::filesystem::path& path) { return parse_run_spec(read_file(path)); }

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      cur += static_cast<char>(std::tolower(c));
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

bool is_relevant(const PaperRecord& rec, const RelevanceSpec& spec) {
  const std::string title = lower(rec.title);
  const std::string venue = lower(rec.venue);
  for (const auto& kw : spec.keywords) {
    const std::string needle = lower(kw);
    if (needle.empty()) continue;
    if (title.find(needle) != std::string::npos || venue.find(needle) != std::string::npos)
      return true;
  }
  if (spec.acronyms.empty()) return false;
  const auto title_tokens = tokenize(rec.title);
  const auto venue_tokens = tokenize(rec.venue);
  for (const auto& ac : spec.acronyms) {
    const std::string needle = lower(ac);
    if (contains_token(title_tokens, needle) || contains_token(venue_tokens, needle)) return true;
  }
  return false;
}

std::set<std::string> seed_authors(std::span<const PaperRecord> corpus, const SeedSpec& seeds) {
  std::vector<std::string> venues;
  for (const auto& v : seeds.seed_venues) venues.push_back(lower(v));
  std::set<std::string> out;
  for (const auto& rec : corpus) {
    if (rec.year < seeds.window.start || rec.year > seeds.window.end) continue;
    const auto tokens = tokenize(rec.venue);
    const bool at_seed_venue = std::any_of(venues.begin(), venues.end(), [&](const std::string& v) {
      return contains_token(tokens, v);
    });
    if (at_seed_venue) out.insert(rec.authors.begin(), rec.authors.end());
  }
  return out;
}

CorpusSelection expand(std::span<const PaperRecord> corpus, const std::set<std::string>& seeds,
                       const RelevanceSpec& spec) {
  std::unordered_map<std::string, std::vector<std::size_t>> relevant_by_author;
  std::unordered_set<std::string> known_authors;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const bool relevant = is_relevant(corpus[i], spec);
    for (const auto& a : corpus[i].authors) {
      known_authors.insert(a);
      if (relevant) relevant_by_author[a].push_back(i);
    }
  }

  CorpusSelection sel;
  std::unordered_set<std::string> visited;
  std::deque<std::string> frontier;
  for (const auto& s : seeds) {
    if (!known_authors.contains(s)) {
      ++sel.missing_seeds;
      continue;
    }
    visited.insert(s);
    frontier.push_back(s);
  }

  std::vector<bool> taken(corpus.size(), false);
  while (!frontier.empty()) {
    const std::string author = std::move(frontier.front());
    frontier.pop_front();
    auto it = relevant_by_author.find(author);
    if (it == relevant_by_author.end()) continue;
    for (std::size_t idx : it->second) {
      if (taken[idx]) continue;
      taken[idx] = true;
      sel.papers.insert(corpus[idx].id);
      for (const auto& co : corpus[idx].authors) {
        if (visited.insert(co).second) frontier.push_back(co);
      }
    }
  }

  // Signatories of selected papers; a seed with no relevant paper drops out.
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!taken[i]) continue;
    for (const auto& a : corpus[i].authors)
      sel.authors.emplace(a, seeds.contains(a) ? Provenance::seed : Provenance::expanded);
  }
  return sel;
}

std::vector<PaperRecord> selected_records(std::span<const PaperRecord> corpus,
                                          const CorpusSelection& selection) {
  std::vector<PaperRecord> out;
  for (const auto& rec : corpus)
    if (selection.papers.contains(rec.id)) out.push_back(rec);
  if (out.size() != selection.papers.size())
    throw ValidationError("selection references paper ids absent from the corpus");
  return out;
}

CorpusSelection selection_from_records(std::span<const PaperRecord> records,
                                       const std::set<std::string>& seeds) {
  CorpusSelection sel;
  for (const auto& rec : records) {
    sel.papers.insert(rec.id);
    for (const auto& a : rec.authors)
      sel.authors.emplace(a, seeds.contains(a) ? Provenance::seed : Provenance::expanded);
  }
  return sel;
}

void write_selection(const CorpusSelection& selection, const std::filesystem::path& ids_file,
                     const std::filesystem::path& manifest_file) {
  std::string ids;
  for (const auto& id : selection.papers) ids += id + '\n';
  write_file(ids_file, ids);

  std::string manifest = "author,provenance\n";
  for (const auto& [name, prov] : selection.authors)
    manifest += csv_field(name) + ',' + std::string(to_string(prov)) + '\n';
  write_file(manifest_file, manifest);
}

}  // namespace coauth
