#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "sdym/cochain.hpp"

namespace sdym::io {

inline constexpr int kFormatVersion = 1;

/// Field file header. `metric` is provenance only: "euclid", "mink" or "none".
struct FieldMetadata {
  int format_version = kFormatVersion;
  int rank = 1;
  Window::Dims dims{1, 1, 1, 1};
  Boundary boundary = Boundary::periodic;
  std::string metric = "none";
  AlgebraKind algebra = AlgebraKind::su2;
};

using AnyField = std::variant<GaugeField<double>, ConnectionField<double>, CurvatureField<double>>;

struct FieldFile {
  FieldMetadata meta;
  AnyField field;
};

/// Base of every load/save failure. `key()` names the offending metadata key.
class IoError : public std::runtime_error {
 public:
  IoError(std::string key, const std::string& what) : std::runtime_error(what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

class MalformedFileError : public IoError {
  using IoError::IoError;
};

class VersionError : public IoError {
  using IoError::IoError;
};

class DimensionMismatchError : public IoError {
  using IoError::IoError;
};

template <int Slots>
constexpr int rank_of() {
  static_assert(Slots == 1 || Slots == 4 || Slots == 6);
  return Slots == 1 ? 0 : Slots == 4 ? 1 : 2;
}

/// Wrap a field with metadata taken from the field itself.
template <int Slots>
FieldFile make_file(const Cochain<double, Slots>& c, std::string metric = "none") {
  FieldFile f;
  f.meta.rank = rank_of<Slots>();
  f.meta.dims = c.window().dims();
  f.meta.boundary = c.window().boundary();
  f.meta.metric = std::move(metric);
  f.meta.algebra = c.kind();
  f.field = c;
  return f;
}

std::string serialize(const FieldFile& f);
FieldFile deserialize(std::string_view text);

void save(const FieldFile& f, const std::filesystem::path& path);
FieldFile load(const std::filesystem::path& path);

/// Extract a field of the requested rank or throw MalformedFileError naming `rank`.
template <int Slots>
const Cochain<double, Slots>& get(const FieldFile& f) {
  if (const auto* c = std::get_if<Cochain<double, Slots>>(&f.field)) return *c;
  throw MalformedFileError("rank", "expected a rank-" + std::to_string(rank_of<Slots>()) + " field, file has rank " +
                                       std::to_string(f.meta.rank));
}

}  // namespace sdym::io
