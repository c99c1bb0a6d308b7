#include "wythoff/table_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <thread>

#include <unistd.h>

#include <json.hpp>

namespace wythoff {

namespace {

nlohmann::json header_json(const RulesetSpec& rs, Pile bound) {
  return {{"schema_version", kTableSchemaVersion},
          {"family", std::string(rs.family_name())},
          {"k", rs.k()},
          {"l", rs.l()},
          {"N", bound}};
}

Pile parse_field(std::string_view text, std::size_t line_no) {
  Pile v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw std::runtime_error("table line " + std::to_string(line_no) + ": bad integer '" +
                             std::string(text) + "'");
  }
  return v;
}

}  // namespace

void write_table(std::ostream& os, const GrundyTable& table) {
  os << header_json(table.ruleset(), table.bound()).dump() << '\n';
  table.for_each_lex([&](Position p, NimValue v) {
    os << p.a() << ',' << p.b() << ',' << v << '\n';
  });
}

std::string table_to_string(const GrundyTable& table) {
  std::ostringstream os;
  write_table(os, table);
  return os.str();
}

GrundyTable read_table(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("table file is empty");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("table header is not JSON: ") + e.what());
  }
  if (header.value("schema_version", 0) != kTableSchemaVersion) {
    throw std::runtime_error("unsupported table schema version");
  }
  RulesetSpec rs = RulesetSpec::wythoff();
  Pile bound = 0;
  try {
    rs = RulesetSpec::parse(header.at("family").get<std::string>(), header.at("k").get<Pile>(),
                            header.at("l").get<Pile>());
    bound = header.at("N").get<Pile>();
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("bad table header: ") + e.what());
  }
  if (bound > kMaxTableBound) throw std::runtime_error("table bound exceeds limit");

  std::vector<NimValue> values(GrundyTable::entries(bound));
  std::size_t line_no = 1;
  std::size_t rows = 0;
  Position expected{0, 0};
  while (std::getline(is, line)) {
    ++line_no;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string::npos) {
      throw std::runtime_error("table line " + std::to_string(line_no) + ": expected a,b,g");
    }
    const std::string_view view(line);
    const Pile a = parse_field(view.substr(0, c1), line_no);
    const Pile b = parse_field(view.substr(c1 + 1, c2 - c1 - 1), line_no);
    const NimValue g = parse_field(view.substr(c2 + 1), line_no);
    if (rows >= values.size() || a != expected.a() || b != expected.b()) {
      throw std::runtime_error("table line " + std::to_string(line_no) +
                               ": rows out of lexicographic order");
    }
    values[GrundyTable::index(Position{a, b})] = g;
    ++rows;
    expected = b < bound ? Position{a, b + 1} : Position{a + 1, a + 1};
  }
  if (rows != values.size()) {
    throw std::runtime_error("table has " + std::to_string(rows) + " rows, expected " +
                             std::to_string(values.size()));
  }
  return GrundyTable(rs, bound, std::move(values));
}

std::string table_file_name(const RulesetSpec& rs, Pile bound) {
  return std::string(rs.family_name()) + "-k" + std::to_string(rs.k()) + "-l" +
         std::to_string(rs.l()) + "-n" + std::to_string(bound) + ".tbl";
}

TableStore::TableStore(std::optional<std::filesystem::path> cache_dir)
    : cache_dir_(std::move(cache_dir)) {}

std::shared_ptr<const GrundyTable> TableStore::get(const RulesetSpec& rs, Pile bound) {
  {
    std::lock_guard lock(mu_);
    auto it = tables_.find({rs, bound});
    if (it != tables_.end()) return it->second;
  }
  auto table = load_or_build(rs, bound);
  std::lock_guard lock(mu_);
  return tables_.emplace(std::make_pair(rs, bound), table).first->second;
}

std::shared_ptr<const GrundyTable> TableStore::load_or_build(const RulesetSpec& rs, Pile bound) {
  if (!cache_dir_) return std::make_shared<const GrundyTable>(grundy_table(rs, bound));

  const auto path = *cache_dir_ / table_file_name(rs, bound);
  if (std::ifstream in(path); in) {
    try {
      auto table = read_table(in);
      if (table.ruleset() == rs && table.bound() == bound) {
        return std::make_shared<const GrundyTable>(std::move(table));
      }
    } catch (const std::runtime_error&) {
      // unreadable cache entries are rebuilt and overwritten below
    }
  }

  auto table = std::make_shared<const GrundyTable>(grundy_table(rs, bound));
  std::filesystem::create_directories(*cache_dir_);
  std::ostringstream tmp_name;
  tmp_name << path.filename().string() << ".tmp." << ::getpid() << '.'
           << std::this_thread::get_id();
  const auto tmp = *cache_dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    write_table(out, *table);
  }
  std::filesystem::rename(tmp, path);
  return table;
}

std::vector<std::shared_ptr<const GrundyTable>> TableStore::tables() const {
  std::lock_guard lock(mu_);
  std::vector<std::shared_ptr<const GrundyTable>> out;
  out.reserve(tables_.size());
  for (const auto& [key, table] : tables_) out.push_back(table);
  return out;
}

}  // namespace wythoff
