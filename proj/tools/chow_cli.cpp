// Command-line front end for Chow-ring computations on G/P.
//
// Subcommands: hasse, multiply, preimage, cfunc, table, cache.  Standard
// output carries only the requested artifact; progress goes to stderr.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chow/chowring.hpp"
#include "chow/labels_e7p7.hpp"
#include "chow/multtable.hpp"
#include "chow/preimage.hpp"
#include "chow/seeds.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;
using namespace chow;

namespace {

struct JobConfig {
  std::string type = "A2";
  std::string parabolic = "1";
  std::string variant = "auto";
  std::string cache_dir;
  std::string format = "text";
  int threads = 0;
};

int parse_parabolic(const std::string& s, int rank) {
  std::string t = s;
  if (!t.empty() && (t[0] == 'P' || t[0] == 'p')) t = t.substr(1);
  int p = std::stoi(t);
  if (p < 1 || p > rank) throw CLI::ValidationError("--parabolic index out of range");
  return p - 1;  // 0-based omitted node
}

PreimageVariant resolve_variant(const std::string& v, int rank) {
  PreimageVariant pv = parse_variant(v);
  // The invariance conditions are enforced directly in small rank; for the
  // large exceptional cases the same constraints are realized through the
  // invariant-subalgebra ansatz.
  if (pv == PreimageVariant::kInvariance && rank > 4) return PreimageVariant::kAnsatz;
  return pv;
}

std::unique_ptr<ChowRing> make_ring(const JobConfig& cfg, DynkinSpec& spec, int& omitted) {
  spec = DynkinSpec::parse(cfg.type);
  omitted = parse_parabolic(cfg.parabolic, spec.rank);
  return std::make_unique<ChowRing>(spec, omitted, standard_label_words(spec, omitted));
}

// Resolves "g5,1" / "5,1" labels (or a comma-separated reduced word of the
// minimal representative prefixed with "w:") to a class id.
int resolve_class(const ChowRing& R, std::string s) {
  if (s.rfind("w:", 0) == 0) {
    std::vector<int> word;
    std::stringstream ss(s.substr(2));
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) word.push_back(std::stoi(tok) - 1);
    for (int id = 0; id < R.num_classes(); ++id)
      if (R.cls(id).word == word) return id;
    // Retry through the Weyl element in case a non-canonical word was given.
    throw CLI::ValidationError("word does not name a basis class: " + s);
  }
  if (!s.empty() && (s[0] == 'g' || s[0] == 'G')) s = s.substr(1);
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("class labels look like g<codim>,<index>");
  int codim = std::stoi(s.substr(0, comma));
  int index = std::stoi(s.substr(comma + 1));
  if (codim < 0 || codim > R.dim() || index < 1 ||
      index > static_cast<int>(R.classes_at(codim).size()))
    throw CLI::ValidationError("no such class: g" + s);
  return R.class_id(codim, index);
}

std::string word_string(const std::vector<int>& word) {
  std::string out;
  for (size_t k = 0; k < word.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(word[k] + 1);
  }
  return out;
}

ordered_json class_json(const ChowRing& R, const ChowClass& x) {
  ordered_json terms = ordered_json::array();
  for (const auto& [id, c] : x.coeff)
    terms.push_back({{"class", R.label(id)}, {"coeff", to_string(c)}});
  return terms;
}

std::string class_text(const ChowRing& R, const ChowClass& x) {
  if (x.coeff.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [id, c] : x.coeff) {
    if (!first) out += " + ";
    first = false;
    if (c != 1) out += to_string(c) + "*";
    out += R.label(id);
  }
  return out;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// --- hasse ---------------------------------------------------------------

ordered_json hasse_json(const ChowRing& R, const DynkinSpec& spec, int omitted) {
  ordered_json j;
  j["type"] = spec.name();
  j["parabolic"] = omitted + 1;
  j["dim"] = R.dim();
  ordered_json nodes = ordered_json::array();
  for (int id = 0; id < R.num_classes(); ++id) {
    const SchubertClass& s = R.cls(id);
    nodes.push_back({{"label", R.label(id)},
                     {"codim", s.codim},
                     {"index", s.index},
                     {"word", word_string(s.word)}});
  }
  j["nodes"] = std::move(nodes);
  ordered_json edges = ordered_json::array();
  for (const auto& e : R.pieri_edges())
    edges.push_back(
        {{"from", R.label(e.from)}, {"to", R.label(e.to)}, {"mult", to_string(e.mult)}});
  j["edges"] = std::move(edges);
  return j;
}

std::string hasse_dot(const ChowRing& R) {
  std::string out = "digraph pieri {\n  rankdir=RL;\n";
  for (int c = 0; c <= R.dim(); ++c) {
    out += "  { rank=same;";
    for (int id : R.classes_at(c)) out += " \"" + R.label(id) + "\";";
    out += " }\n";
  }
  for (const auto& e : R.pieri_edges()) {
    out += "  \"" + R.label(e.from) + "\" -> \"" + R.label(e.to) + "\"";
    if (e.mult != 1) out += " [label=\"" + to_string(e.mult) + "\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

void cmd_hasse(const JobConfig& cfg) {
  DynkinSpec spec;
  int omitted = 0;
  auto R = make_ring(cfg, spec, omitted);
  if (cfg.format == "dot") {
    std::cout << hasse_dot(*R);
    return;
  }
  ordered_json j = hasse_json(*R, spec, omitted);
  if (cfg.format == "json") {
    emit(j);
    return;
  }
  std::cout << spec.name() << "/P" << omitted + 1 << ": " << R->num_classes()
            << " classes, dim " << R->dim() << "\n";
  for (const auto& e : R->pieri_edges())
    std::cout << R->label(e.from) << " -> " << R->label(e.to) << "  x" << to_string(e.mult)
              << "\n";
}

// --- multiply ------------------------------------------------------------

void cmd_multiply(const JobConfig& cfg, const std::string& left, const std::string& right) {
  DynkinSpec spec;
  int omitted = 0;
  auto R = make_ring(cfg, spec, omitted);
  int a = resolve_class(*R, left), b = resolve_class(*R, right);
  if (R->cls(a).codim + R->cls(b).codim > R->dim())
    std::fprintf(stderr, "chow: codimensions exceed dim %d; product is 0\n", R->dim());
  MultTable::PinSeed seed = standard_pin_seed(*R);
  MultTable T(*R, cfg.threads, seed.empty() ? nullptr : &seed);
  const ChowClass& p = T.product(a, b);
  if (cfg.format == "json") {
    ordered_json j;
    j["type"] = spec.name();
    j["parabolic"] = omitted + 1;
    j["left"] = R->label(a);
    j["right"] = R->label(b);
    j["terms"] = class_json(*R, p);
    emit(j);
    return;
  }
  std::cout << R->label(a) << " * " << R->label(b) << " = " << class_text(*R, p) << "\n";
  for (const auto& [id, c] : p.coeff)
    std::cout << "  " << R->label(id) << " = [" << word_string(R->cls(id).word) << "]\n";
}

// --- preimage / cfunc ----------------------------------------------------

void cmd_preimage(const JobConfig& cfg, const std::string& cls) {
  DynkinSpec spec;
  int omitted = 0;
  auto R = make_ring(cfg, spec, omitted);
  int id = resolve_class(*R, cls);
  PreimageSolver solver(*R);
  ChowClass x;
  x.add(id, Rational(1));
  PreimageResult res =
      solver.preimage(x, R->cls(id).codim, resolve_variant(cfg.variant, spec.rank));
  if (cfg.format == "json") {
    ordered_json j;
    j["type"] = spec.name();
    j["parabolic"] = omitted + 1;
    j["class"] = R->label(id);
    j["variant"] = to_string(res.variant);
    j["polynomial"] = res.polynomial.to_string(spec.rank);
    emit(j);
    return;
  }
  std::cout << res.polynomial.to_string(spec.rank) << "\n";
}

void cmd_cfunc(const JobConfig& cfg, const std::string& poly_text) {
  DynkinSpec spec;
  int omitted = 0;
  auto R = make_ring(cfg, spec, omitted);
  Polynomial p = Polynomial::parse(poly_text, spec.rank);
  if (!p.is_zero() && !p.is_homogeneous())
    throw CLI::ValidationError("polynomial must be homogeneous");
  ChowClass out = p.is_zero() ? ChowClass{} : R->c_restricted(p);
  if (cfg.format == "json") {
    ordered_json j;
    j["type"] = spec.name();
    j["parabolic"] = omitted + 1;
    j["polynomial"] = p.to_string(spec.rank);
    j["terms"] = class_json(*R, out);
    emit(j);
    return;
  }
  std::cout << class_text(*R, out) << "\n";
}

// --- table / cache -------------------------------------------------------

ordered_json table_json(const ChowRing& R, const DynkinSpec& spec, int omitted, int threads) {
  MultTable::PinSeed seed = standard_pin_seed(R);
  MultTable T(R, threads, seed.empty() ? nullptr : &seed);
  {
    std::string gaps;
    for (int c : T.gap_codims()) gaps += (gaps.empty() ? "" : ", ") + std::to_string(c);
    std::fprintf(stderr, "chow: preimages required in codimensions {%s}\n", gaps.c_str());
  }
  ordered_json j;
  j["type"] = spec.name();
  j["parabolic"] = omitted + 1;
  j["dim"] = R.dim();
  ordered_json basis = ordered_json::array();
  for (int id = 0; id < R.num_classes(); ++id) {
    const SchubertClass& s = R.cls(id);
    basis.push_back({{"codim", s.codim}, {"index", s.index}, {"word", word_string(s.word)}});
  }
  j["basis"] = std::move(basis);
  ordered_json products = ordered_json::array();
  int done = 0, total = 0;
  for (int a = 0; a < R.num_classes(); ++a)
    for (int b = a; b < R.num_classes(); ++b)
      if (R.cls(a).codim + R.cls(b).codim <= R.dim()) ++total;
  for (int a = 0; a < R.num_classes(); ++a) {
    for (int b = a; b < R.num_classes(); ++b) {
      if (R.cls(a).codim + R.cls(b).codim > R.dim()) continue;
      const ChowClass& p = T.product(a, b);
      for (const auto& [id, c] : p.coeff) {
        if (!is_integer(c) || c <= 0)
          throw std::logic_error("non-integral structure constant in " + R.label(a) + " * " +
                                 R.label(b));
        if (R.cls(id).codim != R.cls(a).codim + R.cls(b).codim)
          throw std::logic_error("grading violation in " + R.label(a) + " * " + R.label(b));
      }
      products.push_back(
          {{"left", R.label(a)}, {"right", R.label(b)}, {"terms", class_json(R, p)}});
      if (++done % 2000 == 0)
        std::fprintf(stderr, "chow: %d / %d products\n", done, total);
    }
  }
  j["products"] = std::move(products);
  return j;
}

fs::path cache_file(const JobConfig& cfg, const DynkinSpec& spec, int omitted) {
  return fs::path(cfg.cache_dir) /
         ("table-" + spec.name() + "-P" + std::to_string(omitted + 1) + ".json");
}

void atomic_write(const fs::path& path, const std::string& bytes) {
  fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << bytes;
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

void cmd_table(const JobConfig& cfg) {
  DynkinSpec spec = DynkinSpec::parse(cfg.type);
  int omitted = parse_parabolic(cfg.parabolic, spec.rank);
  if (!cfg.cache_dir.empty()) {
    fs::path f = cache_file(cfg, spec, omitted);
    if (fs::exists(f)) {
      std::fprintf(stderr, "chow: serving cached table %s\n", f.string().c_str());
      std::ifstream in(f, std::ios::binary);
      std::cout << in.rdbuf();
      return;
    }
  }
  ChowRing R(spec, omitted, standard_label_words(spec, omitted));
  ordered_json j = table_json(R, spec, omitted, cfg.threads);
  std::string bytes = j.dump(2) + "\n";
  if (!cfg.cache_dir.empty()) atomic_write(cache_file(cfg, spec, omitted), bytes);
  std::cout << bytes;
}

void cmd_cache(const JobConfig& cfg, const std::string& action) {
  if (cfg.cache_dir.empty()) throw CLI::ValidationError("cache commands need --cache-dir");
  fs::path dir(cfg.cache_dir);
  if (action == "status") {
    if (!fs::exists(dir)) {
      std::cout << "cache empty\n";
      return;
    }
    for (const auto& e : fs::directory_iterator(dir))
      if (e.is_regular_file())
        std::cout << e.path().filename().string() << "  " << fs::file_size(e.path())
                  << " bytes\n";
    return;
  }
  if (action == "clear") {
    if (fs::exists(dir))
      for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().filename().string().rfind("table-", 0) == 0)
          fs::remove(e.path());
    std::cout << "cache cleared\n";
    return;
  }
  if (action == "build") {
    DynkinSpec spec = DynkinSpec::parse(cfg.type);
    int omitted = parse_parabolic(cfg.parabolic, spec.rank);
    ChowRing R(spec, omitted, standard_label_words(spec, omitted));
    ordered_json j = table_json(R, spec, omitted, cfg.threads);
    atomic_write(cache_file(cfg, spec, omitted), j.dump(2) + "\n");
    std::cout << cache_file(cfg, spec, omitted).string() << "\n";
    return;
  }
  throw CLI::ValidationError("cache action must be build, clear, or status");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chow rings of projective homogeneous varieties G/P"};
  app.require_subcommand(1);
  app.fallthrough();  // allow global options after the subcommand name

  JobConfig cfg;
  if (const char* env = std::getenv("CHOW_CACHE_DIR")) cfg.cache_dir = env;
  app.add_option("--type", cfg.type, "Dynkin type, e.g. A3, F4, E8")->required();
  app.add_option("--parabolic", cfg.parabolic, "maximal parabolic, e.g. 7 or P7")->required();
  app.add_option("--variant", cfg.variant, "preimage variant: delta|invariance|auto")
      ->check(CLI::IsMember({"delta", "invariance", "ansatz", "auto"}));
  app.add_option("--cache-dir", cfg.cache_dir, "cache directory (env CHOW_CACHE_DIR)");
  app.add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));

  auto* hasse = app.add_subcommand("hasse", "weighted Pieri graph");
  auto* multiply = app.add_subcommand("multiply", "product of two basis classes");
  std::string left, right;
  multiply->add_option("left", left, "class label, e.g. g5,1")->required();
  multiply->add_option("right", right, "class label, e.g. g9,1")->required();
  auto* preimage = app.add_subcommand("preimage", "polynomial preimage of a class");
  std::string cls;
  preimage->add_option("class", cls, "class label, e.g. g4,1")->required();
  auto* cfunc = app.add_subcommand("cfunc", "characteristic map of a polynomial");
  std::string poly;
  cfunc->add_option("polynomial", poly, "e.g. \"w[1]^2 + 2*w[2]*w[3]\"")->required();
  auto* table = app.add_subcommand("table", "full multiplication table (JSON)");
  auto* cache = app.add_subcommand("cache", "manage the table cache");
  std::string action;
  cache->add_option("action", action, "build|clear|status")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (hasse->parsed()) cmd_hasse(cfg);
    if (multiply->parsed()) cmd_multiply(cfg, left, right);
    if (preimage->parsed()) cmd_preimage(cfg, cls);
    if (cfunc->parsed()) cmd_cfunc(cfg, poly);
    if (table->parsed()) cmd_table(cfg);
    if (cache->parsed()) cmd_cache(cfg, action);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "chow: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "chow: %s\n", e.what());
    return 1;
  }
  return 0;
}
