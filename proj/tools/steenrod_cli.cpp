// Command-line front end. Everything here goes through the C interface;
// the commands only parse flags, call the library and print.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "steenrod/steenrod_c.h"

using nlohmann::ordered_json;

namespace {

// Raised for library failures; carries the status so main can pick the exit code.
struct ApiError : std::runtime_error {
  st_status status;
  ApiError(st_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(st_status s) {
  if (s != ST_OK) {
    std::string msg = st_last_error();
    throw ApiError(s, msg.empty() ? st_status_name(s) : msg);
  }
}

// Small RAII owners for the opaque handles.
template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { if (p) Free(p); }
  T** out() { return &p; }
  T* get() const { return p; }
};
using Element = Handle<st_element, st_element_free>;
using SpaceH = Handle<st_space, st_space_free>;
using ClassH = Handle<st_class, st_class_free>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ApiError(ST_ERR_IO, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A file path if one exists, else a builtin name.
void load_space(const std::string& spec, SpaceH& out) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) check(st_space_from_json(read_file(spec).c_str(), out.out()));
  else check(st_space_builtin(spec.c_str(), out.out()));
}

struct Selector {
  int degree = 0;
  std::size_t index = 0;
};

Selector parse_selector(const std::string& text) {
  Selector s;
  const auto colon = text.find(':');
  if (text.size() < 4 || text[0] != 'H' || colon == std::string::npos)
    throw ApiError(ST_ERR_ARGUMENT, "class selector must look like H<degree>:<index>, got '" + text + "'");
  try {
    std::size_t used = 0;
    s.degree = std::stoi(text.substr(1, colon - 1), &used);
    if (used != colon - 1) throw std::invalid_argument("");
    const std::string idx = text.substr(colon + 1);
    s.index = std::stoul(idx, &used);
    if (used != idx.size() || idx[0] == '-') throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ApiError(ST_ERR_ARGUMENT, "class selector must look like H<degree>:<index>, got '" + text + "'");
  }
  return s;
}

ordered_json class_json(const st_space* space, const st_class* c, bool with_rep) {
  ordered_json j;
  j["degree"] = st_class_degree(c);
  const int64_t* coords = st_class_coordinates(c);
  j["coordinates"] = std::vector<int64_t>(coords, coords + st_class_rank(c));
  bool zero = true;
  for (std::size_t k = 0; k < st_class_rank(c); ++k) zero = zero && coords[k] == 0;
  j["zero"] = zero;
  if (with_rep) {
    ordered_json rep = ordered_json::array();
    const int64_t* v = st_class_representative(c);
    for (std::size_t k = 0; k < st_class_representative_size(c); ++k)
      if (v[k] != 0) rep.push_back({{"cell", st_space_cell_name(space, st_class_degree(c), k)}, {"value", v[k]}});
    j["representative"] = rep;
  }
  return j;
}

std::string coords_text(const ordered_json& cls) {
  std::string out = "[";
  for (std::size_t k = 0; k < cls["coordinates"].size(); ++k) {
    if (k) out += ",";
    out += std::to_string(cls["coordinates"][k].get<int64_t>());
  }
  return out + "]";
}

std::string rep_text(const ordered_json& cls) {
  std::string out;
  for (const auto& t : cls["representative"]) {
    out += "    " + t["cell"].get<std::string>() + " -> " + std::to_string(t["value"].get<int64_t>()) + "\n";
  }
  return out.empty() ? "    (zero cochain)\n" : out;
}

// Human rendering reads the same JSON document that --json prints.
std::string render_human(const ordered_json& doc) {
  const std::string cmd = doc["command"];
  std::ostringstream out;
  if (cmd == "psi") {
    if (doc.contains("count")) out << doc["count"].get<std::size_t>() << "\n";
    else out << doc["text"].get<std::string>() << "\n";
  } else if (cmd == "cup") {
    out << doc["value"].get<int64_t>() << "\n";
  } else if (cmd == "steenrod") {
    const auto& in = doc["input"];
    const auto& res = doc["output"];
    out << doc["operation"].get<std::string>() << "(H" << in["degree"].get<int>() << coords_text(in) << ") = H"
        << res["degree"].get<int>() << coords_text(res) << (res["zero"].get<bool>() ? "  (zero)" : "") << "\n";
    if (res.contains("representative")) out << "  representative:\n" << rep_text(res);
  } else if (cmd == "cohomology") {
    out << doc["space"].get<std::string>() << " over F_" << doc["prime"].get<int64_t>() << "\n";
    for (const auto& r : doc["ranks"])
      out << "  H" << r["degree"].get<int>() << ": " << r["rank"].get<std::size_t>() << "\n";
  } else if (cmd == "validate") {
    out << "valid " << doc["geometry"].get<std::string>() << " complex of dimension "
        << doc["dimension"].get<int>() << ", cells per degree:";
    for (const auto& n : doc["cells"]) out << " " << n.get<std::size_t>();
    out << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steenrod operations from E-infinity structures on cochains"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  int threads = 1;
  app.add_flag("--json", json, "print machine-readable JSON");
  app.add_option("--threads", threads, "worker threads for evaluation")->check(CLI::PositiveNumber);

  std::string family;
  int r = 0, n = 0;
  bool count_only = false;
  auto* psi = app.add_subcommand("psi", "image of e_n under the Steenrod structure map");
  psi->add_option("family", family, "barratt-eccles or surjection")->required();
  psi->add_option("r", r, "arity")->required();
  psi->add_option("n", n, "degree")->required();
  psi->add_flag("--count", count_only, "print only the number of terms");

  std::string geometry = "simplicial", chain;
  int dim = 0, arity = 2, index = 0;
  int64_t cup_prime = 0;
  std::vector<std::string> cochains;
  auto* cup = app.add_subcommand("cup", "evaluate a cup-(r,i) product on a chain of a standard cell");
  cup->add_option("--geometry", geometry, "simplicial or cubical");
  cup->add_option("--dim", dim, "dimension of the standard cell")->required();
  cup->add_option("--arity", arity, "number of cochain factors r");
  cup->add_option("--index", index, "product index i")->required();
  cup->add_option("--prime", cup_prime, "coefficients F_p (0 for the integers)");
  cup->add_option("--chain", chain, "chain, e.g. '[0,1,2]' or '[01][0]'")->required();
  cup->add_option("--cochain", cochains, "one per factor, same syntax as chains")->required()->allow_extra_args(false);

  std::string space_spec, selector;
  int64_t prime = 2;
  int power = 0;
  bool bockstein = false, representative = false;
  auto* sq = app.add_subcommand("steenrod", "apply P^s or βP^s to a cohomology class");
  sq->add_option("--space", space_spec, "builtin name or JSON file")->required();
  sq->add_option("--prime", prime, "prime p")->required();
  sq->add_option("--power", power, "s in P^s")->required();
  sq->add_flag("--bockstein", bockstein, "apply βP^s");
  sq->add_option("--class", selector, "basis class H<degree>:<index>")->required();
  sq->add_flag("--representative", representative, "also dump a representing cocycle");

  int only_degree = -1;
  auto* coh = app.add_subcommand("cohomology", "mod p cohomology ranks");
  coh->add_option("--space", space_spec, "builtin name or JSON file")->required();
  coh->add_option("--prime", prime, "prime p")->required();
  coh->add_option("--degree", only_degree, "a single degree");

  std::string file;
  auto* val = app.add_subcommand("validate", "check a space file against the face identities");
  val->add_option("file", file, "space JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  const char* cache_env = std::getenv("STEENROD_CACHE_DIR");
  const std::string cache_dir = cache_env ? cache_env : "";

  try {
    st_set_threads(threads);
    if (!cache_dir.empty()) check(st_cache_load(cache_dir.c_str(), nullptr));

    ordered_json doc;
    if (*psi) {
      Element e;
      check(st_psi(family.c_str(), r, n, e.out()));
      doc["command"] = "psi";
      doc["family"] = family;
      doc["arity"] = r;
      doc["degree"] = n;
      if (count_only) {
        doc["count"] = st_element_size(e.get());
      } else {
        ordered_json terms = ordered_json::array();
        for (std::size_t k = 0; k < st_element_size(e.get()); ++k) {
          int64_t c = 0;
          const char* key = nullptr;
          check(st_element_term(e.get(), k, &c, &key));
          terms.push_back({{"coefficient", c}, {"key", key}});
        }
        doc["terms"] = terms;
        doc["text"] = st_element_text(e.get());
      }
    } else if (*cup) {
      std::vector<const char*> ptrs;
      for (const auto& c : cochains) ptrs.push_back(c.c_str());
      int64_t value = 0;
      check(st_cup(geometry.c_str(), dim, cup_prime, arity, index, chain.c_str(), ptrs.data(), ptrs.size(), &value));
      doc["command"] = "cup";
      doc["geometry"] = geometry;
      doc["dimension"] = dim;
      doc["prime"] = cup_prime;
      doc["arity"] = arity;
      doc["index"] = index;
      doc["value"] = value;
    } else if (*sq) {
      SpaceH space;
      load_space(space_spec, space);
      const Selector s = parse_selector(selector);
      ClassH in, out;
      check(st_class_basis(space.get(), prime, s.degree, s.index, in.out()));
      check(st_steenrod(space.get(), in.get(), power, bockstein ? 1 : 0, out.out()));
      doc["command"] = "steenrod";
      doc["space"] = space_spec;
      doc["prime"] = prime;
      doc["operation"] = std::string(bockstein ? "βP^" : (prime == 2 ? "Sq^" : "P^")) + std::to_string(power);
      doc["input"] = class_json(space.get(), in.get(), representative);
      doc["output"] = class_json(space.get(), out.get(), representative);
    } else if (*coh) {
      SpaceH space;
      load_space(space_spec, space);
      doc["command"] = "cohomology";
      doc["space"] = space_spec;
      doc["prime"] = prime;
      ordered_json ranks = ordered_json::array();
      const int top = st_space_dimension(space.get());
      for (int d = 0; d <= top; ++d) {
        if (only_degree >= 0 && d != only_degree) continue;
        std::size_t rank = 0;
        check(st_cohomology_rank(space.get(), prime, d, &rank));
        ranks.push_back({{"degree", d}, {"rank", rank}});
      }
      doc["ranks"] = ranks;
    } else if (*val) {
      SpaceH space;
      check(st_space_from_json(read_file(file).c_str(), space.out()));
      doc["command"] = "validate";
      doc["valid"] = true;
      doc["geometry"] = st_space_geometry(space.get());
      doc["dimension"] = st_space_dimension(space.get());
      ordered_json cells = ordered_json::array();
      for (int d = 0; d <= st_space_dimension(space.get()); ++d) cells.push_back(st_space_cell_count(space.get(), d));
      doc["cells"] = cells;
    }

    if (!cache_dir.empty()) check(st_cache_save(cache_dir.c_str(), nullptr));
    if (json) std::cout << doc.dump(2) << "\n";
    else std::cout << render_human(doc);
    return 0;
  } catch (const ApiError& e) {
    const int code = e.status == ST_ERR_VALIDATION ? 2 : 1;
    if (json) {
      ordered_json err{{"error", st_status_name(e.status)}, {"message", e.what()}};
      std::cout << err.dump(2) << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return code;
  }
}
