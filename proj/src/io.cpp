#include "sdym/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace sdym::io {

using nlohmann::json;

namespace {

int slots_for_rank(int rank) {
  switch (rank) {
    case 0: return 1;
    case 1: return 4;
    case 2: return 6;
    default: throw MalformedFileError("rank", "rank must be 0, 1 or 2, got " + std::to_string(rank));
  }
}

template <int Slots>
json encode_data(const Cochain<double, Slots>& c) {
  json data = json::array();
  for (const auto& m : c.data()) {
    // row-major entries
    for (int r = 0; r < 2; ++r)
      for (int col = 0; col < 2; ++col) data.push_back(json::array({m(r, col).real(), m(r, col).imag()}));
  }
  return data;
}

template <int Slots>
Cochain<double, Slots> decode_data(const json& data, const Window& w, AlgebraKind kind) {
  Cochain<double, Slots> c(w, kind);
  const std::size_t expected = c.data().size() * 4;
  if (data.size() != expected) {
    throw DimensionMismatchError("data", "'data' holds " + std::to_string(data.size()) + " entries but 'dims' and 'rank' require " +
                                             std::to_string(expected));
  }
  std::size_t n = 0;
  for (auto& m : c.data()) {
    for (int r = 0; r < 2; ++r) {
      for (int col = 0; col < 2; ++col, ++n) {
        const json& e = data[n];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
          throw MalformedFileError("data", "'data' entry " + std::to_string(n) + " is not a [re, im] pair");
        m(r, col) = {e[0].get<double>(), e[1].get<double>()};
      }
    }
  }
  return c;
}

template <typename T>
T required(const json& doc, const char* key) {
  if (!doc.contains(key)) throw MalformedFileError(key, std::string("missing key '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw MalformedFileError(key, std::string("key '") + key + "' has the wrong type");
  }
}

}  // namespace

std::string serialize(const FieldFile& f) {
  json doc;
  doc["format_version"] = f.meta.format_version;
  doc["rank"] = f.meta.rank;
  doc["dims"] = f.meta.dims;
  doc["boundary"] = std::string(to_string(f.meta.boundary));
  doc["metric"] = f.meta.metric;
  doc["algebra"] = std::string(to_string(f.meta.algebra));
  doc["data"] = std::visit([](const auto& c) { return encode_data(c); }, f.field);
  return doc.dump() + "\n";
}

FieldFile deserialize(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedFileError("", std::string("not a JSON document: ") + e.what());
  }
  if (!doc.is_object()) throw MalformedFileError("", "field file must be a JSON object");

  FieldFile f;
  f.meta.format_version = required<int>(doc, "format_version");
  if (f.meta.format_version != kFormatVersion)
    throw VersionError("format_version", "unsupported format_version " + std::to_string(f.meta.format_version));

  f.meta.rank = required<int>(doc, "rank");
  const int slots = slots_for_rank(f.meta.rank);

  const auto dims = required<std::vector<std::int64_t>>(doc, "dims");
  if (dims.size() != 4) throw DimensionMismatchError("dims", "'dims' must list 4 extents");
  for (std::size_t a = 0; a < 4; ++a) {
    if (dims[a] < 1) throw DimensionMismatchError("dims", "'dims' entries must be positive");
    f.meta.dims[a] = dims[a];
  }

  try {
    f.meta.boundary = parse_boundary(required<std::string>(doc, "boundary"));
  } catch (const std::invalid_argument& e) {
    throw MalformedFileError("boundary", e.what());
  }
  f.meta.metric = required<std::string>(doc, "metric");
  if (f.meta.metric != "euclid" && f.meta.metric != "mink" && f.meta.metric != "none")
    throw MalformedFileError("metric", "unknown metric '" + f.meta.metric + "'");
  try {
    f.meta.algebra = parse_algebra_kind(required<std::string>(doc, "algebra"));
  } catch (const std::invalid_argument& e) {
    throw MalformedFileError("algebra", e.what());
  }

  if (!doc.contains("data")) throw MalformedFileError("data", "missing key 'data'");
  const json& data = doc["data"];
  if (!data.is_array()) throw MalformedFileError("data", "'data' must be an array");

  const Window w(f.meta.dims, f.meta.boundary);
  switch (slots) {
    case 1: f.field = decode_data<1>(data, w, f.meta.algebra); break;
    case 4: f.field = decode_data<4>(data, w, f.meta.algebra); break;
    default: f.field = decode_data<6>(data, w, f.meta.algebra); break;
  }
  return f;
}

void save(const FieldFile& f, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("", "cannot open '" + path.string() + "' for writing");
  out << serialize(f);
  if (!out) throw IoError("", "write to '" + path.string() + "' failed");
}

FieldFile load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("", "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return deserialize(ss.str());
}

}  // namespace sdym::io
