#include "cyclemine/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "cyclemine/error.hpp"

namespace cyclemine {

namespace {

constexpr const char* kStateMagic = "CYCLEMINE-STATE";
constexpr const char* kStateVersion = "v1";

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

std::optional<long long> parse_int(const std::string& token) {
  long long value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

bool is_skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;  // all whitespace
}

}  // namespace

std::vector<std::vector<Item>> parse_transactions(std::istream& in) {
  std::vector<std::vector<Item>> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    std::vector<Item> items;
    for (const auto& token : split_ws(line)) {
      auto value = parse_int(token);
      if (!value.has_value() || *value < 0 ||
          *value > static_cast<long long>(UINT32_MAX)) {
        fail(ErrorCode::MalformedTransaction,
             "bad item '" + token + "' on line " + std::to_string(line_no),
             line_no);
      }
      items.push_back(static_cast<Item>(*value));
    }
    records.push_back(std::move(items));
  }
  return records;
}

std::vector<std::vector<Item>> load_transactions(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoFailure, "cannot open " + path);
  return parse_transactions(in);
}

void write_transactions(std::ostream& out,
                        const std::vector<std::vector<Item>>& records) {
  for (const auto& record : records) {
    for (std::size_t i = 0; i < record.size(); ++i) {
      if (i) out << ' ';
      out << record[i];
    }
    out << '\n';
  }
}

void write_transactions_file(const std::string& path,
                             const std::vector<std::vector<Item>>& records) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoFailure, "cannot open " + path + " for writing");
  write_transactions(out, records);
  if (!out) fail(ErrorCode::IoFailure, "write to " + path + " failed");
}

void save_state(std::ostream& out, const MiningState& state) {
  out << kStateMagic << ' ' << kStateVersion << '\n';
  out << "units=" << state.db_units << " l=" << state.cycle.length
      << " min_sup=" << state.min_sup << " min_conf=" << state.min_conf.str()
      << " literal=" << (state.literal_floor ? 1 : 0)
      << " entries=" << state.entries.size() << '\n';
  for (const auto& [items, entry] : state.entries) {
    for (Item item : items.items()) out << item << ' ';
    out << status_name(entry.status) << ' ' << entry.weight.str() << ' '
        << entry.abs_support << ' ' << entry.history_units << '\n';
  }
}

void save_state_file(const std::string& path, const MiningState& state) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoFailure, "cannot open " + path + " for writing");
  save_state(out, state);
  if (!out) fail(ErrorCode::IoFailure, "write to " + path + " failed");
}

namespace {

// key=value header field; missing or non-numeric fields are corruption.
std::string header_field(const std::vector<std::string>& tokens,
                         const std::string& key) {
  const std::string prefix = key + "=";
  for (const auto& token : tokens) {
    if (token.rfind(prefix, 0) == 0) return token.substr(prefix.size());
  }
  fail(ErrorCode::CorruptState, "state header missing field '" + key + "'");
}

long long header_int(const std::vector<std::string>& tokens,
                     const std::string& key) {
  auto value = parse_int(header_field(tokens, key));
  if (!value.has_value()) {
    fail(ErrorCode::CorruptState, "state header field '" + key + "' is not a number");
  }
  return *value;
}

}  // namespace

MiningState load_state(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    fail(ErrorCode::VersionMismatch, "empty state input, expected magic line");
  }
  {
    auto tokens = split_ws(line);
    if (tokens.size() != 2 || tokens[0] != kStateMagic) {
      fail(ErrorCode::VersionMismatch, "not a mining-state file");
    }
    if (tokens[1] != kStateVersion) {
      fail(ErrorCode::VersionMismatch,
           "unsupported state version '" + tokens[1] + "'");
    }
  }

  if (!std::getline(in, line)) {
    fail(ErrorCode::CorruptState, "state file ends before header");
  }
  auto header = split_ws(line);
  MiningState state;
  state.format_version = 1;
  const long long units = header_int(header, "units");
  const long long cycle_length = header_int(header, "l");
  const long long min_sup = header_int(header, "min_sup");
  const long long literal = header_int(header, "literal");
  const long long entry_count = header_int(header, "entries");
  if (units < 0 || cycle_length < 1 || min_sup < 1 || entry_count < 0 ||
      (literal != 0 && literal != 1)) {
    fail(ErrorCode::CorruptState, "state header fields out of range");
  }
  state.db_units = static_cast<std::uint64_t>(units);
  state.cycle.length = static_cast<unsigned>(cycle_length);
  state.min_sup = min_sup;
  state.literal_floor = literal == 1;
  try {
    state.min_conf = Fraction::parse(header_field(header, "min_conf"));
  } catch (const Error&) {
    fail(ErrorCode::CorruptState, "state header min_conf is not a fraction");
  }

  for (long long record = 1; record <= entry_count; ++record) {
    if (!std::getline(in, line)) {
      fail(ErrorCode::CorruptState,
           "state file ends at record " + std::to_string(record) + " of " +
               std::to_string(entry_count),
           static_cast<std::size_t>(record));
    }
    auto tokens = split_ws(line);
    // Layout: <item>... <status> <weight> <abs> <hist>. The status token is
    // the first non-integer; everything before it is the itemset.
    std::size_t status_pos = tokens.size();
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (!parse_int(tokens[i]).has_value()) {
        status_pos = i;
        break;
      }
    }
    if (status_pos == 0 || status_pos + 4 != tokens.size()) {
      fail(ErrorCode::CorruptState,
           "state record " + std::to_string(record) + " is malformed",
           static_cast<std::size_t>(record));
    }
    std::vector<Item> items;
    for (std::size_t i = 0; i < status_pos; ++i) {
      auto value = parse_int(tokens[i]);
      if (!value.has_value() || *value < 0 ||
          *value > static_cast<long long>(UINT32_MAX)) {
        fail(ErrorCode::CorruptState,
             "state record " + std::to_string(record) + " has a bad item",
             static_cast<std::size_t>(record));
      }
      items.push_back(static_cast<Item>(*value));
    }
    ItemsetStateEntry entry;
    entry.itemset = Itemset::canonical(std::move(items));
    auto status = status_from_name(tokens[status_pos]);
    if (!status.has_value() || *status == ItemsetStatus::NFC) {
      fail(ErrorCode::CorruptState,
           "state record " + std::to_string(record) + " has bad status '" +
               tokens[status_pos] + "'",
           static_cast<std::size_t>(record));
    }
    entry.status = *status;
    try {
      entry.weight = Fraction::parse(tokens[status_pos + 1]);
    } catch (const Error&) {
      fail(ErrorCode::CorruptState,
           "state record " + std::to_string(record) + " has a bad weight",
           static_cast<std::size_t>(record));
    }
    auto abs_support = parse_int(tokens[status_pos + 2]);
    auto history = parse_int(tokens[status_pos + 3]);
    if (!abs_support.has_value() || !history.has_value() || *abs_support < 0 ||
        *history < 1 || *abs_support > *history) {
      fail(ErrorCode::CorruptState,
           "state record " + std::to_string(record) + " has bad counts",
           static_cast<std::size_t>(record));
    }
    entry.abs_support = *abs_support;
    entry.history_units = static_cast<std::uint64_t>(*history);
    if (state.entries.count(entry.itemset)) {
      fail(ErrorCode::CorruptState,
           "state record " + std::to_string(record) + " duplicates " +
               entry.itemset.str(),
           static_cast<std::size_t>(record));
    }
    state.entries.emplace(entry.itemset, std::move(entry));
  }
  while (std::getline(in, line)) {
    if (!is_skippable(line)) {
      fail(ErrorCode::CorruptState, "trailing content after declared records");
    }
  }
  return state;
}

MiningState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoFailure, "cannot open " + path);
  return load_state(in);
}

std::vector<std::vector<Item>> generate_transactions(const GeneratorConfig& config) {
  if (config.units == 0) {
    fail(ErrorCode::InvalidArgument, "generator needs at least one unit");
  }
  if (config.alphabet_size == 0) {
    fail(ErrorCode::InvalidArgument, "generator alphabet must be non-empty");
  }
  if (config.noise_rate < 0.0) {
    fail(ErrorCode::InvalidArgument, "noise rate must be non-negative");
  }
  for (const auto& pattern : config.patterns) {
    if (pattern.length == 0) {
      fail(ErrorCode::InvalidArgument, "pattern cycle length must be positive");
    }
    if (pattern.offset >= pattern.length) {
      fail(ErrorCode::InvalidArgument, "pattern offset must be below its length");
    }
    if (pattern.itemset.empty()) {
      fail(ErrorCode::InvalidArgument, "pattern itemset must be non-empty");
    }
    if (pattern.probability < 0.0 || pattern.probability > 1.0) {
      fail(ErrorCode::InvalidArgument, "pattern probability must be in [0, 1]");
    }
  }

  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::uint32_t> pick_item(0, config.alphabet_size - 1);
  std::poisson_distribution<int> noise_count(config.noise_rate > 0.0 ? config.noise_rate
                                                                   : 1.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  std::vector<std::vector<Item>> records;
  records.reserve(config.units);
  for (std::uint64_t unit = 0; unit < config.units; ++unit) {
    std::vector<Item> items;
    for (const auto& pattern : config.patterns) {
      if (unit % pattern.length != pattern.offset) continue;
      if (pattern.probability < 1.0 && coin(rng) >= pattern.probability) continue;
      for (Item item : pattern.itemset.items()) items.push_back(item);
    }
    if (config.noise_rate > 0.0) {
      int extra = noise_count(rng);
      for (int i = 0; i < extra; ++i) items.push_back(pick_item(rng));
    }
    if (items.empty()) items.push_back(pick_item(rng));
    auto canonical = Itemset::canonical(std::move(items));
    records.push_back(canonical.items());
  }
  return records;
}

}  // namespace cyclemine
