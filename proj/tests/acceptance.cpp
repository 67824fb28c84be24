/**
 * @file acceptance.cpp
 * @brief Acceptance runner: the ten top-level correctness criteria, one
 *        verdict line each, nonzero exit when any of them fails.
 */
#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "ischur/checks.hpp"

using namespace ischur;

namespace {

int g_failures = 0;

/// Print the verdict line for one criterion followed by its witness notes.
void report(int idx, const std::string& title, bool pass,
            const std::vector<std::string>& notes) {
  std::cout << (pass ? "PASS" : "FAIL") << " " << idx << ". " << title
            << "\n";
  for (const auto& note : notes) std::cout << "      " << note << "\n";
  if (!pass) ++g_failures;
}

/// Combine several check results into one criterion verdict.
struct Combined {
  bool pass = true;
  std::vector<std::string> notes;
  void add(const CheckResult& r) {
    pass = pass && r.pass;
    for (const auto& note : r.notes)
      notes.push_back((r.pass ? "" : "[failed] ") + note);
  }
};

struct RunOut {
  int code = -1;
  std::string out;
};

RunOut run_cli(const std::string& args) {
  const std::string cmd =
      std::string(ISCHUR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  RunOut r;
  if (p == nullptr) return r;
  char buf[4096];
  size_t nr;
  while ((nr = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, nr);
  const int rc = pclose(p);
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

}  // namespace

int main() {
  struct P {
    int m, n;
    long d;
  };
  const std::vector<P> all_five = {
      {1, 0, 2}, {0, 1, 2}, {1, 1, 2}, {1, 1, 3}, {2, 1, 2}};

  {
    Combined c;
    for (const auto& p : all_five) c.add(check_rank_formulas(p.m, p.n, p.d));
    report(1, "rank formulas: enumerated set sizes equal the closed counts",
           c.pass, c.notes);
  }
  {
    Combined c;
    c.add(check_coordinate_bijection(1, 1, 2));
    c.add(check_coordinate_bijection(1, 1, 3));
    report(2, "matrix coordinates biject double-coset triples onto the set",
           c.pass, c.notes);
  }
  {
    Combined c;
    c.add(check_engine_agreement(1, 1, 2));
    c.add(check_engine_agreement(2, 1, 2));
    c.add(check_engine_agreement(1, 1, 3));
    report(3,
           "closed products equal brute-force products in both bases on "
           "every legal pair",
           c.pass, c.notes);
  }
  {
    Combined c;
    c.add(check_coset_factorials(1, 1, 2));
    report(4,
           "factorial weights equal signed Poincare sums and sandwiched "
           "products reduce",
           c.pass, c.notes);
  }
  {
    Combined c;
    c.add(check_length_statistics(1, 1, 2));
    c.add(check_length_statistics(1, 1, 3));
    report(5, "length statistics match the representative lengths", c.pass,
           c.notes);
  }
  {
    Combined c;
    c.add(check_bar_and_canonical(1, 1, 2));
    report(6,
           "bar involution, monomial triangularity and canonical basis "
           "properties hold",
           c.pass, c.notes);
  }
  {
    Combined c;
    c.add(check_tensor_relations(1, 1, 3));
    c.add(check_tensor_isomorphism(1, 1, 2));
    c.add(check_tensor_isomorphism(1, 1, 3));
    c.add(check_transport(1, 1, 2));
    report(7,
           "tensor model: action relations, module isomorphism and "
           "transported endomorphisms",
           c.pass, c.notes);
  }
  {
    Combined c;
    c.add(check_split_relations(2));
    c.add(check_split_vectors(1, 1, 2));
    c.add(check_split_isomorphism(1, 1, 2));
    c.add(check_dimension_identities(1, 1, 2));
    c.add(check_dimension_identities(1, 1, 3));
    c.add(check_dimension_identities(2, 1, 2));
    report(8,
           "splitting layer: central elements, weighted vectors, split "
           "bijections and dimension identities",
           c.pass, c.notes);
  }
  {
    Combined c;
    c.add(check_variant_counts(1, 1, 2));
    c.add(check_variant_algebra(1, 1, 2));
    c.add(check_variant_bases(1, 1, 2));
    report(9,
           "restricted subalgebra: closure, monomial membership and "
           "canonical support",
           c.pass, c.notes);
  }
  {
    Combined c;
    const RunOut a = run_cli("canonical --m 1 --n 1 --d 2");
    const RunOut b = run_cli("canonical --m 1 --n 1 --d 2");
    const bool stable =
        a.code == 0 && b.code == 0 && !a.out.empty() && a.out == b.out;
    c.pass = c.pass && stable;
    c.notes.push_back(std::string("canonical output byte-identical: ") +
                      (stable ? "yes" : "no") + " (" +
                      std::to_string(a.out.size()) + " bytes)");
    const RunOut v = run_cli("verify --m 1 --n 1 --d 2");
    c.pass = c.pass && v.code == 0;
    c.notes.push_back("verify default suite exit code: " +
                      std::to_string(v.code));
    report(10, "command-line tool is deterministic and its suite passes",
           c.pass, c.notes);
  }

  if (g_failures == 0) {
    std::cout << "ALL CRITERIA PASS\n";
    return 0;
  }
  std::cout << g_failures << " CRITERIA FAILED\n";
  return 1;
}
