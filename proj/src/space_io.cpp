#include "steenrod/space_io.hpp"

#include <cctype>
#include <charconv>
#include <cstring>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace steenrod {

namespace {

using nlohmann::json;

int parse_int(const std::string& s, const std::string& what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("bad " + what + ": '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out(1);
  for (char c : s) {
    if (c == sep) out.emplace_back();
    else out.back() += c;
  }
  return out;
}

Space space_from_cells(const json& doc) {
  const Geometry geometry = parse_geometry(doc.at("geometry").get<std::string>());
  const json& cells = doc.at("cells");
  const json& faces = doc.contains("faces") ? doc.at("faces") : json::object();
  if (!cells.is_array()) throw ValidationError("'cells' must be a list of per-degree name lists");
  Space out(geometry);
  for (std::size_t n = 0; n < cells.size(); ++n) {
    for (const auto& name_json : cells[n]) {
      const std::string name = name_json.get<std::string>();
      if (out.find_cell(static_cast<int>(n), name)) throw ValidationError("duplicate cell name '" + name + "'");
      std::vector<FaceRef> refs;
      if (n > 0) {
        if (!faces.contains(name)) throw ValidationError("cell '" + name + "' has no faces");
        for (const auto& f : faces.at(name)) {
          FaceRef ref;
          if (f.contains("degeneracies")) ref.degeneracies = f.at("degeneracies").get<std::vector<int>>();
          const int k = static_cast<int>(n) - 1 - static_cast<int>(ref.degeneracies.size());
          const json& target = f.at("target");
          if (target.is_string()) {
            const auto id = out.find_cell(k, target.get<std::string>());
            if (!id)
              throw ValidationError("cell '" + name + "': face target '" + target.get<std::string>() +
                                    "' not found in degree " + std::to_string(k));
            ref.target = *id;
          } else {
            ref.target = target.get<int>();
          }
          refs.push_back(std::move(ref));
        }
      }
      out.add_cell(static_cast<int>(n), name, std::move(refs));
    }
  }
  out.validate();
  return out;
}

}  // namespace

Space parse_space_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("space file is not valid JSON: ") + e.what());
  }
  try {
    if (doc.contains("facets")) {
      if (doc.contains("geometry") && doc.at("geometry").get<std::string>() != "simplicial")
        throw ValidationError("'facets' shorthand is simplicial only");
      return from_facets(doc.at("facets").get<std::vector<std::vector<int>>>());
    }
    return space_from_cells(doc);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed space file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
}

Space builtin_space(const std::string& name) {
  const auto parts = split(name, ':');
  const std::string& kind = parts[0];
  if (kind == "rp2" && parts.size() == 1) return rp2();
  if (kind == "torus2" && parts.size() == 1) return torus2();
  if (kind == "klein2" && parts.size() == 1) return klein2();
  if (kind == "boundary-simplex" && parts.size() == 2) return boundary_simplex(parse_int(parts[1], "dimension"));
  if (kind == "simplex" && parts.size() == 2) return standard_simplex(parse_int(parts[1], "dimension"));
  if (kind == "bc" && parts.size() == 3)
    return classifying_space_skeleton(parse_int(parts[1], "prime"), parse_int(parts[2], "skeleton degree"));
  throw std::invalid_argument("unknown builtin space '" + name + "'");
}

namespace {

template <class Cell, class Parse>
FreeModule<Cell> parse_combination(const std::string& text, Ring ring, Parse parse_cell) {
  FreeModule<Cell> out(ring);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size()) throw std::invalid_argument("empty chain");
  while (i < text.size()) {
    Coefficient sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip();
    }
    // A coefficient needs an explicit `*`, since cube words may start with 0 or 1.
    Coefficient scale = 1;
    const std::size_t star = text.find('*', i);
    if (star != std::string::npos && text.find_first_of("[+-", i) > star) {
      std::string digits = text.substr(i, star - i);
      while (!digits.empty() && std::isspace(static_cast<unsigned char>(digits.back()))) digits.pop_back();
      scale = parse_int(digits, "coefficient");
      i = star + 1;
      skip();
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != '+' && text[j] != '-') ++j;
    std::string cell = text.substr(i, j - i);
    while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.back()))) cell.pop_back();
    out.add_term(parse_cell(cell), ring.normalize(sign * scale));
    i = j;
    skip();
  }
  return out;
}

}  // namespace

SimplexChain parse_simplex_chain(const std::string& text, Ring ring) {
  return parse_combination<Simplex>(text, ring, parse_simplex);
}

CubeChain parse_cube_chain(const std::string& text, Ring ring) {
  return parse_combination<Cube>(text, ring, parse_cube);
}

// ---- memo persistence -----------------------------------------------------

namespace {

constexpr char kMagic[8] = {'S', 'T', 'P', 'S', 'I', 'C', 'A', 'C'};
constexpr std::uint32_t kVersion = 1;
constexpr const char* kFile = "psi_surjection.v1.bin";

template <class T>
void put(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
bool get(std::istream& is, T& v) {
  return static_cast<bool>(is.read(reinterpret_cast<char*>(&v), sizeof v));
}

}  // namespace

std::size_t psi_cache_load(const std::string& dir) {
  std::ifstream in(std::filesystem::path(dir) / kFile, std::ios::binary);
  if (!in) return 0;
  char magic[8];
  std::uint32_t version = 0, count = 0;
  if (!in.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0 || !get(in, version) || version != kVersion ||
      !get(in, count))
    return 0;
  // Parse everything first so a truncated file seeds nothing.
  std::vector<PsiCacheEntry> entries;
  for (std::uint32_t e = 0; e < count; ++e) {
    std::int32_t arity = 0, degree = 0;
    std::uint32_t terms = 0;
    if (!get(in, arity) || !get(in, degree) || !get(in, terms) || arity < 1 || arity > 255 || degree < 0) return 0;
    SurjectionChain value;
    for (std::uint32_t t = 0; t < terms; ++t) {
      std::int64_t coef = 0;
      std::uint32_t len = 0;
      if (!get(in, coef) || !get(in, len) || len != static_cast<std::uint32_t>(arity + degree)) return 0;
      Surjection s;
      for (std::uint32_t k = 0; k < len; ++k) {
        std::uint8_t v = 0;
        if (!get(in, v)) return 0;
        s.values.push_back(v);
      }
      if (is_degenerate(s.values, arity)) return 0;
      value.add_term(s, coef);
    }
    entries.push_back({arity, degree, std::move(value)});
  }
  for (auto& e : entries) psi_sj_seed(e.arity, e.degree, std::move(e.value));
  return entries.size();
}

std::size_t psi_cache_save(const std::string& dir) {
  const auto entries = psi_sj_cached_entries();
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / kFile;
  const auto tmp = std::filesystem::path(dir) / (std::string(kFile) + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(kMagic, 8);
    put(out, kVersion);
    put(out, static_cast<std::uint32_t>(entries.size()));
    for (const auto& e : entries) {
      put(out, static_cast<std::int32_t>(e.arity));
      put(out, static_cast<std::int32_t>(e.degree));
      put(out, static_cast<std::uint32_t>(e.value.size()));
      for (const auto& [s, c] : e.value) {
        put(out, static_cast<std::int64_t>(c));
        put(out, static_cast<std::uint32_t>(s.values.size()));
        for (int v : s.values) put(out, static_cast<std::uint8_t>(v));
      }
    }
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
  return entries.size();
}

}  // namespace steenrod
