#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coauth {

/// One bibliographic entry. Authors are canonical name keys; identity is
/// exact string equality.
struct PaperRecord {
  std::string id;
  std::string title;
  std::string venue;
  int year = 0;
  std::vector<std::string> authors;

  bool operator==(const PaperRecord&) const = default;
};

/// Relevance predicate over title and venue. Keywords match as
/// case-insensitive substrings, acronyms as case-insensitive whole tokens
/// (tokens are maximal ASCII-alphanumeric runs).
struct RelevanceSpec {
  std::vector<std::string> keywords;
  std::vector<std::string> acronyms;

  void validate() const;
};

struct YearWindow {
  int start = 0;
  int end = 0;  // inclusive
};

struct SeedSpec {
  std::vector<std::string> seed_venues;
  YearWindow window;

  void validate() const;
};

/// Relevance and seed configuration as read from a spec file.
struct RunSpec {
  RelevanceSpec relevance;
  SeedSpec seeds;
};

enum class Provenance { seed, expanded };

std::string_view to_string(Provenance p) noexcept;

struct CorpusSelection {
  std::set<std::string> papers;
  std::map<std::string, Provenance> authors;
  /// Seeds that sign no paper of the corpus at all; ignored during expansion.
  std::size_t missing_seeds = 0;
};

PaperRecord parse_record(std::string_view line, std::size_t line_no);

/// Reads line-delimited JSON records. Blank lines are skipped; malformed
/// lines raise ParseError, repeated ids raise ValidationError.
std::vector<PaperRecord> parse_corpus(std::istream& in);
std::vector<PaperRecord> parse_corpus(const std::filesystem::path& path);

std::string serialize_record(const PaperRecord& rec);
void write_corpus(std::span<const PaperRecord> records, const std::filesystem::path& path);

RunSpec parse_run_spec(std::string_view text);
RunSpec load_run_spec(const std::filesystem::path& path);

/// Lowercased ASCII-alphanumeric tokens of `text`.
std::vector<std::string> tokenize(std::string_view text);

bool is_relevant(const PaperRecord& rec, const RelevanceSpec& spec);

/// Authors of papers held at a seed venue within the year window.
std::set<std::string> seed_authors(std::span<const PaperRecord> corpus, const SeedSpec& seeds);

/// Recursive co-author expansion from `seeds` over relevant papers.
CorpusSelection expand(std::span<const PaperRecord> corpus, const std::set<std::string>& seeds,
                       const RelevanceSpec& spec);

/// The selected records, in corpus order.
std::vector<PaperRecord> selected_records(std::span<const PaperRecord> corpus,
                                          const CorpusSelection& selection);

/// Rebuilds a selection from an already-filtered record list. Every author
/// is marked expanded unless listed in `seeds`.
CorpusSelection selection_from_records(std::span<const PaperRecord> records,
                                       const std::set<std::string>& seeds = {});

void write_selection(const CorpusSelection& selection, const std::filesystem::path& ids_file,
                     const std::filesystem::path& manifest_file);

}  // namespace coauth
