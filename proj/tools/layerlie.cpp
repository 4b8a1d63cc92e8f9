// Command-line interface for the layerlie library.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "layerlie/charcalc.hpp"
#include "layerlie/layercalc.hpp"
#include "layerlie/multipoly.hpp"
#include "layerlie/reference_tables.hpp"
#include "layerlie/rootsystem.hpp"
#include "layerlie/weylgroup.hpp"

namespace {

using json = nlohmann::json;
using namespace layerlie;

constexpr const char* kToolVersion = "0.1.0";

// ---------------------------------------------------------------------------
// Small helpers

Weight parse_labels(const std::string& text, int rank, bool require_dominant) {
  Weight out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad label '" + item + "' in '" + text + "'");
    }
    if (pos != item.size())
      throw std::invalid_argument("bad label '" + item + "' in '" + text + "'");
    out.push_back(v);
  }
  if (static_cast<int>(out.size()) != rank)
    throw std::invalid_argument("expected " + std::to_string(rank) +
                                " labels, got " + std::to_string(out.size()));
  if (require_dominant && !is_dominant(out))
    throw std::invalid_argument("labels must be non-negative: " + text);
  return out;
}

std::string labels_to_text(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

json labels_to_json(const Weight& w) {
  json a = json::array();
  for (Int x : w) a.push_back(x);
  return a;
}

std::string rat_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_str();
}

// ---------------------------------------------------------------------------
// Document emitters

std::string integer_doc(const mpz_class& v, const std::string& format) {
  if (format == "json") {
    json j;
    j["value"] = v.get_str();
    return j.dump() + "\n";
  }
  return v.get_str() + "\n";  // text, csv, latex coincide for a scalar
}

std::string poly_doc(const MultiPoly& p, const std::string& format) {
  if (format == "json") return poly_to_json(p) + "\n";
  if (format == "latex") return poly_to_latex(p) + "\n";
  if (format == "csv") {
    std::string out;
    for (const auto& [exp, coef] : p.terms) {
      for (int e : exp) out += std::to_string(e) + ",";
      out += rat_to_string(coef) + "\n";
    }
    return out;
  }
  return poly_to_text(p) + "\n";
}

template <typename MapT>
std::string expansion_doc(const MapT& m, const std::string& format) {
  if (format == "json") {
    json j;
    j["weights"] = json::array();
    j["coeffs"] = json::array();
    for (const auto& [w, c] : m) {
      j["weights"].push_back(labels_to_json(w));
      j["coeffs"].push_back(c);
    }
    return j.dump() + "\n";
  }
  if (format == "csv") {
    std::string out;
    for (const auto& [w, c] : m) {
      for (Int x : w) out += std::to_string(x) + ",";
      out += std::to_string(c) + "\n";
    }
    return out;
  }
  if (format == "latex") {
    std::string out;
    bool first = true;
    for (const auto& [w, c] : m) {
      if (!first) out += c >= 0 ? " + " : " - ";
      else if (c < 0) out += "-";
      first = false;
      Int a = c < 0 ? -c : c;
      if (a != 1) out += std::to_string(a) + "\\,";
      out += "m_{" + labels_to_text(w) + "}";
    }
    if (first) out = "0";
    return out + "\n";
  }
  std::string out;
  for (const auto& [w, c] : m)
    out += labels_to_text(w) + ": " + std::to_string(c) + "\n";
  return out;
}

std::string matrix_doc(const OrderedWeightList& order,
                       const UnitriangularMatrix& mat,
                       const std::string& format) {
  if (format == "json") {
    json j;
    j["order"] = json::array();
    for (const Weight& w : order.weights) j["order"].push_back(labels_to_json(w));
    j["rows"] = json::array();
    for (const auto& row : mat.rows) {
      json r = json::array();
      for (Int x : row) r.push_back(x);
      j["rows"].push_back(r);
    }
    return j.dump() + "\n";
  }
  if (format == "latex") {
    std::string out = "\\begin{pmatrix}\n";
    for (size_t i = 0; i < mat.rows.size(); ++i) {
      for (size_t k = 0; k < order.size(); ++k) {
        if (k) out += " & ";
        out += k < mat.rows[i].size() ? std::to_string(mat.rows[i][k]) : "0";
      }
      out += " \\\\\n";
    }
    return out + "\\end{pmatrix}\n";
  }
  if (format == "text") {
    std::string out = "order:";
    for (const Weight& w : order.weights) out += " " + labels_to_text(w);
    out += "\n";
    for (const auto& row : mat.rows) {
      for (size_t k = 0; k < order.size(); ++k) {
        if (k) out += " ";
        out += k < row.size() ? std::to_string(row[k]) : "0";
      }
      out += "\n";
    }
    return out;
  }
  // csv (default for matrices): header row of weights, then padded rows
  std::string out;
  for (size_t k = 0; k < order.size(); ++k) {
    if (k) out += ",";
    std::string t = labels_to_text(order.weights[k]);
    for (char& ch : t)
      if (ch == ',') ch = ' ';
    out += t;
  }
  out += "\n";
  for (const auto& row : mat.rows) {
    for (size_t k = 0; k < order.size(); ++k) {
      if (k) out += ",";
      out += k < row.size() ? std::to_string(row[k]) : "0";
    }
    out += "\n";
  }
  return out;
}

std::string report_doc(const std::vector<CheckResult>& checks,
                       const std::string& format) {
  if (format == "json") {
    json j;
    j["checks"] = json::array();
    for (const CheckResult& c : checks) {
      json e;
      e["name"] = c.name;
      e["status"] = c.pass ? "pass" : "fail";
      if (!c.pass) e["witness"] = c.witness;
      j["checks"].push_back(e);
    }
    return j.dump() + "\n";
  }
  if (format == "csv") {
    std::string out;
    for (const CheckResult& c : checks)
      out += c.name + "," + (c.pass ? "pass" : "fail") +
             (c.pass ? "" : "," + c.witness) + "\n";
    return out;
  }
  std::string out;
  for (const CheckResult& c : checks) {
    out += (c.pass ? "PASS " : "FAIL ") + c.name;
    if (!c.pass) out += "  [" + c.witness + "]";
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Result cache: content-addressed JSON files under $LAYERLIE_CACHE_DIR.

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

class Cache {
 public:
  Cache() {
    const char* dir = std::getenv("LAYERLIE_CACHE_DIR");
    if (dir && *dir) dir_ = dir;
  }

  bool enabled() const { return !dir_.empty(); }

  std::optional<std::string> get(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    json j;
    try {
      in >> j;
      if (j.at("key").get<std::string>() != key) return std::nullopt;
      std::string payload = j.at("payload").get<std::string>();
      if (j.at("checksum").get<std::string>() != hex64(fnv1a64(payload)))
        return std::nullopt;  // corrupted entry: treat as miss
      return payload;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  void put(const std::string& key, const std::string& payload) {
    if (!enabled()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    std::ofstream out(path_for(key));
    if (!out) {
      std::cerr << "warning: cache directory not writable, caching disabled\n";
      dir_.clear();
      return;
    }
    json j;
    j["key"] = key;
    j["checksum"] = hex64(fnv1a64(payload));
    j["payload"] = payload;
    out << j.dump() << "\n";
  }

 private:
  std::string path_for(const std::string& key) const {
    return dir_ + "/" + hex64(fnv1a64(key)) + ".json";
  }

  std::string dir_;
};

// ---------------------------------------------------------------------------
// verify

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

bool check_selected(const std::vector<std::string>& sel, const std::string& name) {
  for (const std::string& s : sel)
    if (s == "all" || s == name) return true;
  // The partial-sum identities accompany the main selections.
  if (name == "multiplicity-sum" || name == "orbit-dim-sum" ||
      name == "layer-dim-sum")
    for (const std::string& s : sel)
      if (s == "all" || s == "integrality") return true;
  return false;
}

int run_verify(const AlgebraContext& ctx, const Weight& upto,
               const std::vector<std::string>& checks, const std::string& format,
               std::string& doc) {
  std::vector<CheckResult> results;

  if (check_selected(checks, "fixtures")) {
    auto ref = reference_entry(ctx.rs.type.name());
    CheckResult c;
    c.name = "fixtures:" + ctx.rs.type.name();
    if (!ref) {
      c.pass = true;  // no tabulated data for this algebra
    } else {
      bool rho_ok = true;
      for (int i = 0; i < ctx.rs.rank; ++i)
        if (ctx.rs.rho_prime_root[i] * 2 != ref->two_rho_prime_root[i])
          rho_ok = false;
      MultiPoly expected = parse_poly(ctx.rs.rank, ref->layer_poly);
      bool poly_ok = (expected == ctx.R);
      c.pass = rho_ok && poly_ok;
      if (!c.pass)
        c.witness = std::string(rho_ok ? "" : "reduced Weyl vector mismatch ") +
                    (poly_ok ? "" : "layer polynomial mismatch");
    }
    results.push_back(c);
  }

  VerifyWorkspace ws(ctx, upto);
  std::vector<Weight> sweep = dominant_weights_below(ctx.rs, upto);
  std::sort(sweep.begin(), sweep.end(), [&](const Weight& a, const Weight& b) {
    return ws.order().position.at(a) < ws.order().position.at(b);
  });

  for (const Weight& mu : sweep) {
    if (check_selected(checks, "sumW")) {
      CheckResult c;
      c.name = "sumW:" + labels_to_text(mu);
      mpz_class s = weyl_alternating_dim_sum(ctx.rs, mu, ctx.group);
      c.pass = (s == mpz_class(static_cast<long>(ctx.group.order)));
      if (!c.pass)
        c.witness = "sum " + s.get_str() + " != |W| " +
                    std::to_string(ctx.group.order);
      results.push_back(c);
    }
    try {
      Report rep = ws.report_for(mu);
      for (const CheckResult& c : rep.checks) {
        if (!check_selected(checks, c.name)) continue;
        CheckResult tagged = c;
        tagged.name = c.name + ":" + labels_to_text(mu);
        results.push_back(tagged);
      }
    } catch (const ConjectureViolation& v) {
      CheckResult c;
      c.name = v.check + ":" + labels_to_text(v.lambda);
      c.pass = false;
      c.witness = v.detail;
      results.push_back(c);
    }
  }

  doc = report_doc(results, format);
  for (const CheckResult& c : results)
    if (!c.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with layers of weights in simple Lie algebras"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string algebra;
  std::string labels_text;
  std::string matrix_kind = "m";
  std::string upto_text;
  std::string checks_text = "all";
  bool brute = false;

  auto add_common = [&](CLI::App* sub, bool with_labels) {
    sub->add_option("algebra", algebra, "Algebra token, e.g. G2 or b3")->required();
    if (with_labels)
      sub->add_option("labels", labels_text, "Comma-separated Dynkin labels")
          ->required();
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv", "latex"}));
  };

  CLI::App* cmd_dim = app.add_subcommand("dim", "Dimension of L(lambda)");
  add_common(cmd_dim, true);
  CLI::App* cmd_dimpoly = app.add_subcommand("dimpoly", "Dimension polynomial D");
  add_common(cmd_dimpoly, false);
  CLI::App* cmd_layerpoly = app.add_subcommand("layerpoly", "Layer polynomial R");
  add_common(cmd_layerpoly, false);
  CLI::App* cmd_count =
      app.add_subcommand("count", "Number of distinct weights of L(lambda)");
  add_common(cmd_count, true);
  cmd_count->add_flag("--brute", brute,
                      "Cross-check against orbit enumeration");
  CLI::App* cmd_orbit =
      app.add_subcommand("orbit-sum", "Orbit-sum expansion row for lambda");
  add_common(cmd_orbit, true);
  CLI::App* cmd_layer =
      app.add_subcommand("layer-sum", "Layer-sum expansion row for lambda");
  add_common(cmd_layer, true);
  CLI::App* cmd_char =
      app.add_subcommand("char", "Dominant weight multiplicities of L(lambda)");
  add_common(cmd_char, true);
  CLI::App* cmd_dec =
      app.add_subcommand("decompose", "Layer decomposition of ch_lambda");
  add_common(cmd_dec, true);
  CLI::App* cmd_table =
      app.add_subcommand("table", "Matrix over the ordered weights up to lambda");
  add_common(cmd_table, true);
  cmd_table->add_option("--matrix", matrix_kind, "Which matrix to print")
      ->check(CLI::IsMember({"m", "c", "minv", "cinv", "dominance"}));
  CLI::App* cmd_verify = app.add_subcommand("verify", "Run identity checks");
  cmd_verify->add_option("algebra", algebra, "Algebra token")->required();
  cmd_verify->add_option("--upto", upto_text,
                         "Run checks for every dominant mu below this weight");
  cmd_verify->add_option("--checks", checks_text,
                         "Comma list: sumW,triangular,integrality,nonneg,"
                         "freudenthal,brute-count,dominance,fixtures,all");
  cmd_verify->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "latex"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string verb = sub->get_name();
    if (sub == cmd_table && sub->count("--format") == 0) format = "csv";

    Cache cache;
    std::string key = std::string(kToolVersion) + "|" + verb + "|" + algebra +
                      "|" + labels_text + "|" + format + "|" + matrix_kind +
                      "|" + (brute ? "brute" : "");
    if (verb != "verify" && cache.enabled()) {
      if (auto hit = cache.get(key)) {
        std::cout << *hit;
        return 0;
      }
    }

    LieType type = parse_lie_type(algebra);
    std::string doc;
    int status = 0;

    if (verb == "dim") {
      RootSystem rs = build_root_system(type);
      Weight lambda = parse_labels(labels_text, rs.rank, true);
      Rat d = dim_eval(rs, lambda);
      doc = integer_doc(d.get_num(), format);
    } else if (verb == "dimpoly") {
      RootSystem rs = build_root_system(type);
      doc = poly_doc(dim_polynomial(rs), format);
    } else if (verb == "layerpoly") {
      RootSystem rs = build_root_system(type);
      doc = poly_doc(layer_polynomial(rs), format);
    } else if (verb == "count") {
      RootSystem rs = build_root_system(type);
      Weight lambda = parse_labels(labels_text, rs.rank, true);
      MultiPoly R = layer_polynomial(rs);
      Rat v = poly_eval(R, to_rational(lambda));
      doc = integer_doc(v.get_num(), format);
      if (brute) {
        mpz_class b = count_weights_bruteforce(rs, lambda);
        if (b != v.get_num()) {
          std::cerr << "counterexample: polynomial gives " << v.get_num().get_str()
                    << " but enumeration gives " << b.get_str() << "\n";
          status = 1;
        }
      }
    } else if (verb == "orbit-sum" || verb == "layer-sum" || verb == "char" ||
               verb == "decompose") {
      AlgebraContext ctx = make_context(type);
      Weight lambda = parse_labels(labels_text, ctx.rs.rank, true);
      if (verb == "orbit-sum")
        doc = expansion_doc(orbit_sum_expansion(ctx, lambda), format);
      else if (verb == "layer-sum")
        doc = expansion_doc(layer_sum_expansion(ctx, lambda), format);
      else if (verb == "char")
        doc = expansion_doc(character_in_orbit_basis(ctx, lambda), format);
      else
        doc = expansion_doc(layer_decomposition(ctx, lambda), format);
    } else if (verb == "table") {
      AlgebraContext ctx = make_context(type);
      Weight lambda = parse_labels(labels_text, ctx.rs.rank, true);
      VerifyWorkspace ws(ctx, lambda);
      const UnitriangularMatrix* mat = &ws.m_matrix();
      if (matrix_kind == "c") mat = &ws.c_matrix();
      else if (matrix_kind == "minv") mat = &ws.m_inverse();
      else if (matrix_kind == "cinv") mat = &ws.c_inverse();
      else if (matrix_kind == "dominance") mat = &ws.dominance();
      doc = matrix_doc(ws.order(), *mat, format);
    } else {  // verify
      AlgebraContext ctx = make_context(type);
      Weight upto = upto_text.empty()
                        ? Weight(ctx.rs.rank, 1)
                        : parse_labels(upto_text, ctx.rs.rank, true);
      status = run_verify(ctx, upto, split_csv(checks_text), format, doc);
    }

    std::cout << doc;
    if (verb != "verify" && status == 0) cache.put(key, doc);
    return status;
  } catch (const layerlie::ConjectureViolation& v) {
    std::cerr << "counterexample in check '" << v.check << "' at "
              << labels_to_text(v.lambda) << ": " << v.detail << "\n";
    return 1;
  } catch (const layerlie::GroupTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
