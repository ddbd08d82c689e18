#include "simphom/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <string_view>

#include <fmt/format.h>
#include <fmt/os.h>

#include "simphom/errors.hpp"

namespace simphom {
namespace {

namespace fs = std::filesystem;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t j = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > j) out.push_back(s.substr(j, i - j));
  }
  return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
  T value{};
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return value;
}

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> read_lines(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file", path.string());
  std::vector<Line> out;
  std::string text;
  for (std::size_t n = 1; std::getline(in, text); ++n) out.push_back({n, std::move(text)});
  return out;
}

bool skippable(std::string_view t) { return t.empty() || t.front() == '#'; }

// One number per line; blank lines are skipped.
template <typename T>
std::vector<std::pair<T, std::size_t>> read_column(const fs::path& path) {
  std::vector<std::pair<T, std::size_t>> out;
  for (const Line& line : read_lines(path)) {
    const auto t = trim(line.text);
    if (t.empty()) continue;
    const auto v = parse_number<T>(t);
    if (!v) throw ParseError("expected a number, got '" + std::string(t) + "'", path.string(), line.number);
    out.emplace_back(*v, line.number);
  }
  return out;
}

struct LabelTable {
  std::map<std::int64_t, std::string> by_id;
};

LabelTable read_labels(const fs::path& path) {
  LabelTable table;
  const auto lines = read_lines(path);
  int columns = 0;
  for (const Line& line : lines) {
    const auto t = trim(line.text);
    if (skippable(t)) continue;
    const auto tokens = split_ws(t);
    if (columns == 0) columns = static_cast<int>(tokens.size());
    if (tokens.size() != static_cast<std::size_t>(columns) || columns > 2) {
      throw ParseError("expected " + std::to_string(std::min(columns, 2)) + " column(s), got " +
                           std::to_string(tokens.size()),
                       path.string(), line.number);
    }
    std::int64_t id = 0;
    std::string_view label;
    if (columns == 1) {
      id = static_cast<std::int64_t>(line.number);
      label = tokens[0];
    } else {
      const auto parsed = parse_number<std::int64_t>(tokens[0]);
      if (!parsed) throw ParseError("bad node id '" + std::string(tokens[0]) + "'", path.string(), line.number);
      id = *parsed;
      label = tokens[1];
    }
    if (!table.by_id.emplace(id, std::string(label)).second) {
      throw ParseError("node " + std::to_string(id) + " is labeled twice", path.string(), line.number);
    }
  }
  return table;
}

struct RawRecord {
  std::vector<std::int64_t> ids;
  double time = 0;
};

DatasetBundle assemble(std::string name, std::vector<RawRecord> records, bool timed, const LabelTable& table,
                       const fs::path& label_path) {
  std::set<std::int64_t> unlabeled;
  for (const auto& r : records)
    for (auto id : r.ids)
      if (!table.by_id.contains(id)) unlabeled.insert(id);
  if (!unlabeled.empty()) {
    std::string list;
    std::size_t shown = 0;
    for (auto id : unlabeled) {
      if (shown++ == 20) {
        list += fmt::format(" and {} more", unlabeled.size() - 20);
        break;
      }
      list += (list.empty() ? "" : ", ") + std::to_string(id);
    }
    throw MissingLabel(fmt::format("{}: {} node(s) without a label: {}", label_path.string(), unlabeled.size(), list));
  }

  std::vector<std::string> names;
  for (const auto& [id, label] : table.by_id) names.push_back(label);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  const bool numeric = std::all_of(names.begin(), names.end(),
                                   [](const std::string& n) { return parse_number<std::int64_t>(n).has_value(); });
  if (numeric) {
    std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
      return *parse_number<std::int64_t>(a) < *parse_number<std::int64_t>(b);
    });
  }
  std::map<std::string, ClassId> class_of;
  for (std::size_t c = 0; c < names.size(); ++c) class_of[names[c]] = static_cast<ClassId>(c);

  DatasetBundle b;
  b.name = std::move(name);
  b.timed = timed;
  std::map<std::int64_t, NodeId> dense;
  std::vector<ClassId> labels;
  for (const auto& [id, label] : table.by_id) {
    dense[id] = static_cast<NodeId>(b.external_ids.size());
    b.external_ids.push_back(id);
    labels.push_back(class_of[label]);
  }
  b.labeling = ClassLabeling(std::move(labels), names.size(), names);

  b.stream.reserve(records.size());
  for (auto& r : records) {
    std::vector<NodeId> v;
    v.reserve(r.ids.size());
    for (auto id : r.ids) v.push_back(dense[id]);
    b.stream.push_back({Simplex(std::move(v)), r.time});
  }
  if (timed) {
    std::stable_sort(b.stream.begin(), b.stream.end(),
                     [](const TimestampedSimplex& x, const TimestampedSimplex& y) { return x.time < y.time; });
  }
  return b;
}

std::string default_name(const std::string& prefix) { return fs::path(prefix).filename().string(); }

}  // namespace

std::vector<Simplex> DatasetBundle::simplices() const {
  std::vector<Simplex> out;
  out.reserve(stream.size());
  for (const auto& r : stream) out.push_back(r.simplex);
  return out;
}

Hypergraph DatasetBundle::hypergraph() const { return Hypergraph::from_records(simplices(), num_nodes()); }

SimplicialComplex DatasetBundle::complex(int max_dimension) const {
  BuildOptions options;
  options.num_nodes = num_nodes();
  options.max_dimension = max_dimension;
  return build_complex(simplices(), options);
}

SimplexDatasetPaths SimplexDatasetPaths::from_prefix(const std::string& prefix) {
  SimplexDatasetPaths p;
  p.nverts = prefix + "-nverts.txt";
  p.simplices = prefix + "-simplices.txt";
  p.labels = prefix + "-node-labels.txt";
  if (fs::exists(prefix + "-times.txt")) p.times = prefix + "-times.txt";
  return p;
}

DatasetBundle load_simplex_dataset(const SimplexDatasetPaths& paths, std::string name) {
  const auto nverts = read_column<std::int64_t>(paths.nverts);
  const auto ids = read_column<std::int64_t>(paths.simplices);
  std::vector<std::pair<double, std::size_t>> times;
  if (paths.times) {
    times = read_column<double>(*paths.times);
    if (times.size() != nverts.size()) {
      const std::size_t line = std::min(times.size(), nverts.size());
      throw ParseError(fmt::format("{} timestamps for {} simplices", times.size(), nverts.size()),
                       paths.times->string(),
                       line < times.size() ? times[line].second : (times.empty() ? 1 : times.back().second + 1));
    }
  }

  std::vector<RawRecord> records;
  records.reserve(nverts.size());
  std::size_t cursor = 0;
  for (std::size_t r = 0; r < nverts.size(); ++r) {
    const auto [k, line] = nverts[r];
    if (k < 1) throw ParseError("simplex size must be positive", paths.nverts.string(), line);
    if (cursor + static_cast<std::size_t>(k) > ids.size()) {
      throw ParseError(fmt::format("simplex needs {} vertices but only {} remain in {}", k, ids.size() - cursor,
                                   paths.simplices.filename().string()),
                       paths.nverts.string(), line);
    }
    RawRecord rec;
    for (std::int64_t i = 0; i < k; ++i) rec.ids.push_back(ids[cursor++].first);
    std::vector<std::int64_t> sorted = rec.ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError("simplex repeats a vertex", paths.nverts.string(), line);
    }
    rec.time = paths.times ? times[r].first : static_cast<double>(r);
    records.push_back(std::move(rec));
  }
  if (cursor != ids.size()) {
    throw ParseError(fmt::format("{} vertex ids left over after the last simplex", ids.size() - cursor),
                     paths.simplices.string(), ids[cursor].second);
  }
  if (name.empty()) {
    name = paths.nverts.filename().string();
    const auto dash = name.rfind("-nverts");
    if (dash != std::string::npos) name.resize(dash);
  }
  return assemble(std::move(name), std::move(records), paths.times.has_value(), read_labels(paths.labels),
                  paths.labels);
}

DatasetBundle load_edge_list_with_labels(const fs::path& edges, const fs::path& labels, std::string name) {
  std::vector<RawRecord> records;
  int columns = 0;
  for (const Line& line : read_lines(edges)) {
    const auto t = trim(line.text);
    if (skippable(t)) continue;
    const auto tokens = split_ws(t);
    if (columns == 0) columns = static_cast<int>(tokens.size());
    if ((columns != 2 && columns != 3) || tokens.size() != static_cast<std::size_t>(columns)) {
      throw ParseError(fmt::format("expected \"u v\" or \"u v time\", got {} field(s)", tokens.size()),
                       edges.string(), line.number);
    }
    const auto u = parse_number<std::int64_t>(tokens[0]);
    const auto v = parse_number<std::int64_t>(tokens[1]);
    if (!u || !v) throw ParseError("bad node id", edges.string(), line.number);
    if (*u == *v) throw ParseError("self-loop", edges.string(), line.number);
    RawRecord rec{{*u, *v}, static_cast<double>(records.size())};
    if (columns == 3) {
      const auto time = parse_number<double>(tokens[2]);
      if (!time) throw ParseError("bad timestamp", edges.string(), line.number);
      rec.time = *time;
    }
    records.push_back(std::move(rec));
  }
  if (name.empty()) name = edges.stem().string();
  return assemble(std::move(name), std::move(records), columns == 3, read_labels(labels), labels);
}

void write_simplex_dataset(const DatasetBundle& bundle, const std::string& prefix) {
  const auto paths = SimplexDatasetPaths::from_prefix(prefix);
  auto nverts = fmt::output_file(paths.nverts.string());
  auto simplices = fmt::output_file(paths.simplices.string());
  for (const auto& r : bundle.stream) {
    nverts.print("{}\n", r.simplex.size());
    for (NodeId v : r.simplex.vertices()) simplices.print("{}\n", bundle.external_ids[v]);
  }
  if (bundle.timed) {
    auto times = fmt::output_file(prefix + "-times.txt");
    for (const auto& r : bundle.stream) times.print("{}\n", r.time);
  } else if (fs::exists(prefix + "-times.txt")) {
    fs::remove(prefix + "-times.txt");
  }
  auto labels = fmt::output_file(paths.labels.string());
  for (std::size_t v = 0; v < bundle.external_ids.size(); ++v) {
    labels.print("{} {}\n", bundle.external_ids[v], bundle.labeling.class_name(bundle.labeling.label(static_cast<NodeId>(v))));
  }
}

DatasetStats dataset_stats(const DatasetBundle& bundle) {
  DatasetStats s;
  s.name = bundle.name;
  s.nodes = bundle.num_nodes();
  s.classes = bundle.labeling.num_classes();
  const SimplicialComplex x = bundle.complex(2);
  s.edges = x.count(1);
  s.triangles = x.count(2);
  s.records = bundle.stream.size();
  if (bundle.timed) {
    std::vector<double> t;
    for (const auto& r : bundle.stream) t.push_back(r.time);
    std::sort(t.begin(), t.end());
    s.time_steps = static_cast<std::size_t>(std::unique(t.begin(), t.end()) - t.begin());
  }
  return s;
}

}  // namespace simphom
