/**
 * @file ischur_cli.cpp
 * @brief Command-line front end: enumeration of the index-matrix sets,
 *        products in the rescaled basis under either engine, canonical-basis
 *        tables, and the named verification suite, all as deterministic
 *        JSON.  Exit codes: 0 success, 1 verification failure, 2 usage
 *        error.
 */
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ischur/checks.hpp"

using nlohmann::ordered_json;
using namespace ischur;

namespace {

struct RunConfig {
  int m = 0;
  int n = 0;
  long d = 1;
  std::string ring = "laurent";
  bool variant = false;
  std::string out = "-";
  int jobs = 1;
  bool force_large = false;
};

/// Register the shared flags on one subcommand.
void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--m", cfg.m, "even block size m")->check(CLI::NonNegativeNumber);
  cmd->add_option("--n", cfg.n, "odd block size n")->check(CLI::NonNegativeNumber);
  cmd->add_option("--d", cfg.d, "degree d (at least 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--ring", cfg.ring,
                  "coefficient ring label recorded in the payload; both "
                  "selections run the same division-free exact arithmetic")
      ->check(CLI::IsMember({"laurent", "ratfunc"}));
  cmd->add_flag("--variant", cfg.variant,
                "restrict to matrices with unit central margins");
  cmd->add_option("--out", cfg.out, "output path, '-' for stdout");
  cmd->add_option("--jobs", cfg.jobs, "parallel workers for verify")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--force-large", cfg.force_large,
                "lift the d <= 4, m+n <= 3 guardrail");
}

/// Size guardrail: refuse accidentally huge runs unless overridden.
bool guardrail_ok(const RunConfig& cfg, std::string& msg) {
  if (cfg.force_large) return true;
  if (cfg.d > 4 || cfg.m + cfg.n > 3) {
    msg = "refusing d > 4 or m+n > 3 without --force-large";
    return false;
  }
  return true;
}

int emit(const RunConfig& cfg, const ordered_json& payload) {
  const std::string text = payload.dump(2) + "\n";
  if (cfg.out == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output path " << cfg.out << "\n";
    return 2;
  }
  f << text;
  return 0;
}

ordered_json header(const RunConfig& cfg, const std::string& command) {
  ordered_json j;
  j["schema"] = "ischur/1";
  j["command"] = command;
  j["m"] = cfg.m;
  j["n"] = cfg.n;
  j["d"] = cfg.d;
  j["ring"] = cfg.ring;
  return j;
}

ordered_json entries_json(const IndexMatrix& A) {
  const int r = A.radius();
  ordered_json rows = ordered_json::array();
  for (int i = -r; i <= r; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = -r; j <= r; ++j) row.push_back(A.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json parts_json(const Composition& c) {
  ordered_json j = ordered_json::array();
  for (long p : c.parts) j.push_back(p);
  return j;
}

/// Parse a matrix from inline JSON (or @path) as a full (2r+1) x (2r+1)
/// integer array with rows and columns running from -r to r.
std::optional<IndexMatrix> parse_matrix(const std::string& arg,
                                        const RunConfig& cfg,
                                        std::string& msg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream f(arg.substr(1));
    if (!f) {
      msg = "cannot read matrix file " + arg.substr(1);
      return std::nullopt;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    msg = "matrix argument is not valid JSON";
    return std::nullopt;
  }
  if (j.is_object() && j.contains("entries")) j = j["entries"];
  const int r = cfg.m + cfg.n;
  const int side = 2 * r + 1;
  if (!j.is_array() || static_cast<int>(j.size()) != side) {
    msg = "matrix must be a " + std::to_string(side) + "x" +
          std::to_string(side) + " integer array";
    return std::nullopt;
  }
  IndexMatrix A(cfg.m, cfg.n);
  for (int i = 0; i < side; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != side) {
      msg = "matrix row " + std::to_string(i) + " has the wrong length";
      return std::nullopt;
    }
    for (int k = 0; k < side; ++k) {
      if (!j[i][k].is_number_integer()) {
        msg = "matrix entries must be integers";
        return std::nullopt;
      }
      A.at(i - r, k - r) = j[i][k].get<long>();
    }
  }
  if (!A.is_valid() || A.d() != cfg.d) {
    msg = "matrix is not a valid degree-" + std::to_string(cfg.d) +
          " index matrix (nonnegative, centro-symmetric, odd centre, "
          "parity cap)";
    return std::nullopt;
  }
  return A;
}

/// The tabulated matrix list for enumerate/canonical: the full set or the
/// unit-central-margin subset, in the deterministic linear extension.
std::vector<IndexMatrix> tabulated_set(const RunConfig& cfg) {
  std::vector<IndexMatrix> xs = enumerate_Xi(cfg.m, cfg.n, cfg.d);
  if (cfg.variant) {
    std::vector<IndexMatrix> sub;
    for (const auto& A : xs)
      if (is_variant_matrix(A)) sub.push_back(A);
    xs = std::move(sub);
  }
  return linear_extension(xs);
}

int cmd_enumerate(const RunConfig& cfg) {
  const auto xs = tabulated_set(cfg);
  const Int formula = cfg.variant ? xi_variant_count_formula(cfg.m, cfg.n, cfg.d)
                                  : xi_count_formula(cfg.m, cfg.n, cfg.d);
  ordered_json j = header(cfg, "enumerate");
  j["variant"] = cfg.variant;
  j["count"] = xs.size();
  j["formula"] = formula.get_str();
  const int r = cfg.m + cfg.n;
  ordered_json idx = ordered_json::array();
  for (int i = -r; i <= r; ++i) idx.push_back(i);
  j["indices"] = idx;
  ordered_json mats = ordered_json::array();
  for (size_t i = 0; i < xs.size(); ++i) {
    const IndexMatrix& A = xs[i];
    ordered_json row;
    row["index"] = i;
    row["entries"] = entries_json(A);
    row["row"] = parts_json(A.row());
    row["col"] = parts_json(A.col());
    row["length"] = ell(A);
    row["combined_length"] = ell_hat(A);
    row["odd_crossings"] = a_hat(A);
    row["parity"] = parity_of(A);
    row["variant"] = is_variant_matrix(A);
    mats.push_back(std::move(row));
  }
  j["matrices"] = std::move(mats);
  return emit(cfg, j);
}

ordered_json element_json(const SchurElt& f) {
  ordered_json terms = ordered_json::array();
  const auto& ts = f.terms();
  for (const auto& [B, c] : ts) {
    ordered_json t;
    t["entries"] = entries_json(B);
    t["coeff"] = c.str();
    terms.push_back(std::move(t));
  }
  return terms;
}

int cmd_multiply(const RunConfig& cfg, const std::string& left_arg,
                 const std::string& right_arg, const std::string& engine) {
  std::string msg;
  const auto left = parse_matrix(left_arg, cfg, msg);
  if (!left) {
    std::cerr << "error: left: " << msg << "\n";
    return 2;
  }
  const auto right = parse_matrix(right_arg, cfg, msg);
  if (!right) {
    std::cerr << "error: right: " << msg << "\n";
    return 2;
  }
  const bool chev = chevalley_form(*left).has_value();
  if (engine != "generic" && !chev) {
    std::cerr << "error: engine '" << engine
              << "' needs a one-band or diagonal left factor\n";
    return 2;
  }
  SchurAlgebra S(cfg.m, cfg.n, cfg.d);
  const bool mismatch = !(left->col() == right->row());
  ordered_json j = header(cfg, "multiply");
  j["engine"] = engine;
  j["left"] = entries_json(*left);
  j["right"] = entries_json(*right);
  j["margin_mismatch"] = mismatch;
  if (engine == "both") {
    const SchurElt gen = S.mul_bracket_exact(*left, *right);
    const SchurElt clo = S.mul_bracket_closed(*left, *right);
    j["generic"] = element_json(gen);
    j["closed"] = element_json(clo);
    j["equal"] = gen == clo;
  } else {
    const SchurElt res = engine == "closed" ? S.mul_bracket_closed(*left, *right)
                                            : S.mul_bracket_exact(*left, *right);
    j["result"] = element_json(res);
  }
  return emit(cfg, j);
}

int cmd_canonical(const RunConfig& cfg) {
  const auto xs = tabulated_set(cfg);
  SchurAlgebra S(cfg.m, cfg.n, cfg.d);
  // position of each tabulated matrix, for compact support references
  std::map<std::vector<long>, size_t> pos;
  for (size_t i = 0; i < xs.size(); ++i) pos.emplace(xs[i].key(), i);

  ordered_json j = header(cfg, "canonical");
  j["variant"] = cfg.variant;
  j["count"] = xs.size();
  const int r = cfg.m + cfg.n;
  ordered_json idx = ordered_json::array();
  for (int i = -r; i <= r; ++i) idx.push_back(i);
  j["indices"] = idx;
  ordered_json mats = ordered_json::array();
  for (size_t i = 0; i < xs.size(); ++i) {
    ordered_json row;
    row["index"] = i;
    row["entries"] = entries_json(xs[i]);
    mats.push_back(std::move(row));
  }
  j["matrices"] = std::move(mats);

  ordered_json table = ordered_json::array();
  for (size_t i = 0; i < xs.size(); ++i) {
    const SchurElt c = S.canonical_basis(xs[i]);
    std::vector<std::pair<size_t, ordered_json>> indexed;
    ordered_json inline_terms = ordered_json::array();
    const auto& ts = c.terms();
    for (const auto& [B, f] : ts) {
      auto it = pos.find(B.key());
      if (it != pos.end()) {
        ordered_json t;
        t["index"] = it->second;
        t["coeff"] = f.str();
        indexed.emplace_back(it->second, std::move(t));
      } else {
        ordered_json t;
        t["entries"] = entries_json(B);
        t["coeff"] = f.str();
        inline_terms.push_back(std::move(t));
      }
    }
    std::sort(indexed.begin(), indexed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    ordered_json elem = ordered_json::array();
    for (auto& [p, t] : indexed) elem.push_back(std::move(t));
    for (auto& t : inline_terms) elem.push_back(std::move(t));
    ordered_json row;
    row["index"] = i;
    row["element"] = std::move(elem);
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return emit(cfg, j);
}

int cmd_verify(const RunConfig& cfg) {
  const int m = cfg.m, n = cfg.n;
  const long d = cfg.d;
  const int di = static_cast<int>(d);
  std::vector<std::function<CheckResult()>> tasks = {
      [=] { return check_rank_formulas(m, n, d); },
      [=] { return check_coordinate_bijection(m, n, d); },
      [=] { return check_engine_agreement(m, n, d); },
      [=] { return check_coset_factorials(m, n, d); },
      [=] { return check_length_statistics(m, n, d); },
      [=] { return check_bar_and_canonical(m, n, d); },
      [=] { return check_tensor_relations(m, n, std::min(di, 3)); },
      [=] { return check_tensor_isomorphism(m, n, di); },
      [=] { return check_transport(m, n, d); },
      [=] { return check_split_relations(di); },
      [=] { return check_split_vectors(m, n, di); },
      [=] { return check_split_isomorphism(m, n, di); },
      [=] { return check_dimension_identities(m, n, d); },
  };
  if (cfg.variant) {
    tasks.push_back([=] { return check_variant_counts(m, n, d); });
    tasks.push_back([=] { return check_variant_algebra(m, n, d); });
    tasks.push_back([=] { return check_variant_bases(m, n, d); });
  }

  std::vector<CheckResult> results(tasks.size());
  if (cfg.jobs <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (size_t i; (i = next.fetch_add(1)) < tasks.size();)
        results[i] = tasks[i]();
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < cfg.jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ordered_json j = header(cfg, "verify");
  j["variant"] = cfg.variant;
  ordered_json checks = ordered_json::array();
  long passed = 0;
  for (const auto& res : results) {
    ordered_json c;
    c["name"] = res.name;
    c["description"] = res.description;
    c["pass"] = res.pass;
    ordered_json notes = ordered_json::array();
    for (const auto& note : res.notes) notes.push_back(note);
    c["notes"] = std::move(notes);
    checks.push_back(std::move(c));
    if (res.pass) ++passed;
  }
  j["checks"] = std::move(checks);
  j["passed"] = passed;
  j["failed"] = static_cast<long>(results.size()) - passed;
  j["all_pass"] = passed == static_cast<long>(results.size());
  const int rc = emit(cfg, j);
  if (rc != 0) return rc;
  return passed == static_cast<long>(results.size()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the signed q-Schur algebra"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list the index-matrix set with statistics and counts");
  add_common_flags(enumerate, cfg);

  CLI::App* multiply = app.add_subcommand(
      "multiply", "expand a product of two basis elements");
  add_common_flags(multiply, cfg);
  std::string left_arg, right_arg, engine = "generic";
  multiply->add_option("--left", left_arg,
                       "left factor: entries as JSON rows, or @file")
      ->required();
  multiply->add_option("--right", right_arg,
                       "right factor: entries as JSON rows, or @file")
      ->required();
  multiply->add_option("--engine", engine, "generic | closed | both")
      ->check(CLI::IsMember({"generic", "closed", "both"}));

  CLI::App* canonical = app.add_subcommand(
      "canonical", "tabulate the canonical basis");
  add_common_flags(canonical, cfg);

  CLI::App* verify = app.add_subcommand(
      "verify", "run the named verification suite");
  add_common_flags(verify, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string msg;
  if (!guardrail_ok(cfg, msg)) {
    std::cerr << "error: " << msg << "\n";
    return 2;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(cfg);
    if (multiply->parsed()) return cmd_multiply(cfg, left_arg, right_arg, engine);
    if (canonical->parsed()) return cmd_canonical(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
