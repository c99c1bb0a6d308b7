#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wythoff/grundy.hpp"

namespace wythoff {

inline constexpr int kTableSchemaVersion = 1;

// Table file: one JSON header line
//   {"N":...,"family":"...","k":...,"l":...,"schema_version":1}
// followed by one "a,b,g" line per position in lexicographic order.
void write_table(std::ostream& os, const GrundyTable& table);
std::string table_to_string(const GrundyTable& table);
/// Throws std::runtime_error on malformed input.
GrundyTable read_table(std::istream& is);

/// Cache file name for (ruleset, bound), e.g. "wkl-k3-l5-n200.tbl".
std::string table_file_name(const RulesetSpec& rs, Pile bound);

/// Builds tables on demand and keeps them for reuse. With a cache directory,
/// tables are loaded from disk when present and written there otherwise
/// (through a temporary file and rename, so readers never see partial
/// files). Safe to share between threads.
class TableStore {
 public:
  TableStore() = default;
  explicit TableStore(std::optional<std::filesystem::path> cache_dir);

  std::shared_ptr<const GrundyTable> get(const RulesetSpec& rs, Pile bound);

  /// All tables built or loaded so far, in key order.
  std::vector<std::shared_ptr<const GrundyTable>> tables() const;

 private:
  std::shared_ptr<const GrundyTable> load_or_build(const RulesetSpec& rs, Pile bound);

  std::optional<std::filesystem::path> cache_dir_;
  mutable std::mutex mu_;
  std::map<std::pair<RulesetSpec, Pile>, std::shared_ptr<const GrundyTable>> tables_;
};

}  // namespace wythoff
