// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if
// any criterion fails. Time limits are wall-clock and include setup.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "golden_cases.hpp"
#include "support.hpp"

using namespace multiring;
using namespace testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0: no time limit
  std::function<Outcome()> body;
};

std::string seconds(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << s << "s";
  return s >= 0 ? out.str() : "?";
}

Outcome subspace_sweep() {
  const auto m = z4z6();
  std::size_t selections = 0, disagreements = 0, holds = 0;
  for_each_selection(m, [&](const SubsetSelection& s) {
    ++selections;
    const bool d = is_subspace_direct(m, s);
    const bool a = is_subspace_t21(m, s);
    const bool b = is_subspace_t22(m, s);
    if (d != a || d != b || d != space_oracle::subspace(m, s)) ++disagreements;
    holds += d;
  });
  return {selections == 3 * 1024 && disagreements == 0,
          std::to_string(selections) + " selections, " + std::to_string(holds) +
              " subspaces, " + std::to_string(disagreements) + " disagreements"};
}

Outcome ideal_sweep() {
  const auto m = z4z6();
  std::size_t selections = 0, disagreements = 0, holds = 0;
  for_each_selection(m, [&](const SubsetSelection& s) {
    ++selections;
    const bool d = is_ideal_subspace_direct(m, s);
    const bool t = is_ideal_subspace_t23(m, s);
    if (d != t || d != space_oracle::ideal_subspace(m, s)) ++disagreements;
    holds += d;
  });
  return {selections == 3 * 1024 && disagreements == 0,
          std::to_string(selections) + " selections, " + std::to_string(holds) +
              " ideal subspaces, " + std::to_string(disagreements) + " disagreements"};
}

Outcome z6_facts() {
  const auto r = make_cyclic_ring(6);
  const auto ideals = enumerate_ideals(r);
  const auto oracle_ideals = oracle::ideals(r);
  const auto maximal = maximal_ideals(r);
  const bool ok =
      ideals.size() == 4 && oracle_ideals.size() == 4 &&
      std::set<ElementList>(ideals.begin(), ideals.end()) ==
          std::set<ElementList>(oracle_ideals.begin(), oracle_ideals.end()) &&
      maximal == std::vector<ElementList>{make_list({0, 2, 4}), make_list({0, 3})} &&
      oracle::maximal_ideals(r).size() == 2 && idempotents(r) == make_list({0, 1, 3, 4}) &&
      oracle::idempotents(r) == make_list({0, 1, 3, 4}) && decompose_unit(r) == make_list({3, 4});
  return {ok, "4 ideals, maximal {0,2,4} {0,3}, idempotents {0,1,3,4}, unit split {3,4}"};
}

Outcome chain_z4z6() {
  const auto m = z4z6();
  const auto& u = m.universe();
  auto set = [&](std::initializer_list<const char*> ls) {
    ElementList out;
    for (auto l : ls) out.push_back(u.at(l));
    return normalized(out);
  };
  const std::vector<ElementList> expected = {
      m.carrier().to_list(),
      set({"a0", "a2", "b0", "b1", "b2", "b3", "b4", "b5"}),
      set({"a0", "b0", "b1", "b2", "b3", "b4", "b5"}),
      set({"a0", "b0", "b2", "b4"}),
      set({"a0", "b0"}),
  };
  const auto chain = ideal_subspace_chain(m, OperationOrder::identity(2));
  std::vector<ElementList> got;
  for (const auto& t : chain.terms) got.push_back(t.elements.to_list());
  bool deletions_caught = true;
  for (std::size_t t = 1; t + 1 < chain.terms.size(); ++t) {
    auto broken = chain;
    broken.terms.erase(broken.terms.begin() + static_cast<std::ptrdiff_t>(t));
    deletions_caught = deletions_caught && !chain_is_valid(m, broken);
  }
  const bool valid = chain_is_valid(m, chain);
  return {got == expected && valid && deletions_caught,
          "5 terms " + std::string(got == expected ? "match" : "differ") + ", valid " +
              (valid ? "yes" : "no") + ", interior deletions rejected " +
              (deletions_caught ? "yes" : "no")};
}

Outcome chain_bounds() {
  std::size_t spaces = 0, chains = 0, violations = 0;
  std::vector<std::size_t> sizes;
  std::function<void(std::size_t)> recurse = [&](std::size_t from) {
    if (!sizes.empty()) {
      const auto m = disjoint_cyclic(sizes);
      ++spaces;
      std::size_t bound = 1;
      for (auto n : sizes) {
        std::size_t log = 0;
        while (n >>= 1) ++log;
        bound += log;
      }
      std::vector<RingIndex> order(sizes.size());
      std::iota(order.begin(), order.end(), 0);
      do {
        ++chains;
        const auto chain = ideal_subspace_chain(m, OperationOrder::from(order, sizes.size()));
        if (chain.terms.size() > bound || !chain_is_valid(m, chain)) ++violations;
      } while (std::next_permutation(order.begin(), order.end()));
    }
    if (sizes.size() == 3) return;
    for (std::size_t n = from; n <= 12; ++n) {
      sizes.push_back(n);
      recurse(n);
      sizes.pop_back();
    }
  };
  recurse(2);
  return {violations == 0, std::to_string(spaces) + " spaces, " + std::to_string(chains) +
                               " chains, " + std::to_string(violations) +
                               " over the bound or invalid"};
}

Outcome decomposition_replay() {
  struct Case {
    std::string name;
    MultiRingSpace m;
  };
  std::vector<Case> cases;
  cases.push_back({"Z6", single(6)});
  cases.push_back({"Z10", single(10)});
  cases.push_back({"Z12", single(12)});
  cases.push_back({"Z4+Z6", z4z6()});
  std::string notes;
  bool ok = true;
  for (const auto& c : cases) {
    const auto d = decompose_artin(c.m);
    bool good = verify_decomposition(c.m, d).ok;
    for (const auto& comp : d.components) good = good && is_non_reducible(c.m, comp);
    if (c.m.ring_count() == 1) {
      const auto& r = c.m.ring(0);
      const auto es = decompose_unit(r);
      good = good && es.size() == d.components.size();
      for (std::size_t k = 0; good && k < es.size(); ++k) {
        good = d.components[k].elements.to_list() == idempotent_component(r, es[k]);
      }
    }
    ok = ok && good;
    notes += (notes.empty() ? "" : ", ") + c.name + " " + std::to_string(d.components.size()) +
             (good ? " ok" : " BAD");
  }
  const auto z10 = decompose_artin(single(10));
  ok = ok && z10.components.size() == 2 &&
       z10.components[0].elements.to_list() == make_list({0, 5}) &&
       z10.components[1].elements.to_list() == make_list({0, 2, 4, 6, 8});
  return {ok, notes};
}

Outcome mutation_robustness() {
  const auto labels = numbered("", 6);
  std::vector<std::vector<std::string>> add(6, std::vector<std::string>(6)), mul = add;
  for (std::size_t x = 0; x < 6; ++x) {
    for (std::size_t y = 0; y < 6; ++y) {
      add[x][y] = std::to_string((x + y) % 6);
      mul[x][y] = std::to_string(x * y % 6);
    }
  }
  std::size_t mutants = 0, false_accepts = 0, bad_witnesses = 0;
  for (int table = 0; table < 2; ++table) {
    for (std::size_t x = 0; x < 6; ++x) {
      for (std::size_t y = 0; y < 6; ++y) {
        for (const auto& v : labels) {
          auto a = add, m = mul;
          auto& cell = (table ? m : a)[x][y];
          if (cell == v) continue;
          cell = v;
          ++mutants;
          RingTables t;
          t.carrier = ids(0, 6);
          for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j < 6; ++j) {
              t.add.push_back(element(static_cast<std::uint32_t>(std::stoul(a[i][j]))));
              t.mul.push_back(element(static_cast<std::uint32_t>(std::stoul(m[i][j]))));
            }
          }
          try {
            make_ring_from_tables(labels, a, m);
            ++false_accepts;
          } catch (const AxiomViolationError& e) {
            for (const auto& f : e.report().failures) bad_witnesses += !replays(t, f);
          }
        }
      }
    }
  }
  return {mutants == 2 * 36 * 5 && false_accepts == 0 && bad_witnesses == 0,
          std::to_string(mutants) + " mutants, " + std::to_string(false_accepts) +
              " false accepts, " + std::to_string(bad_witnesses) + " witnesses failing replay"};
}

std::vector<FiniteRing> cyclic_rings_of(const io::SpaceDocument& doc) {
  const auto u = Universe::from_labels(doc.universe);
  std::vector<FiniteRing> rings;
  for (const auto& r : doc.rings) {
    std::vector<ElementId> carrier;
    for (const auto& l : r.elements) carrier.push_back(u.at(l));
    rings.push_back(make_cyclic_ring(*r.cyclic, carrier));
  }
  return rings;
}

Outcome mixed_law_validator() {
  const auto overlap = io::parse_spec(read_text(fixture_path("overlap.spec")));
  bool rejected = false, replayed = false;
  std::string witness = "none";
  try {
    io::build(overlap);
  } catch (const MixedLawError& e) {
    rejected = true;
    replayed = replays(cyclic_rings_of(overlap), e.violation());
    const auto u = Universe::from_labels(overlap.universe);
    const auto& v = e.violation();
    witness = v.law + " (" + u.label(v.x) + ", " + u.label(v.y) + ", " + u.label(v.z) + ")";
  }
  bool dup_ok = false;
  try {
    dup_ok = io::build(io::parse_spec(read_text(fixture_path("dup_z2.spec")))).ring_count() == 2;
  } catch (const Error&) {
  }
  return {rejected && replayed && dup_ok,
          "overlap rejected with " + witness + (replayed ? " (replays)" : " (no replay)") +
              ", shared Z2 pair " + (dup_ok ? "accepted" : "rejected")};
}

std::string run_binary(const std::string& args) {
  const std::string cmd = std::string(MULTIRING_CLI_BINARY) + " " + args + " 2>/dev/null";
  std::string out;
  if (FILE* p = popen(cmd.c_str(), "r")) {
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    pclose(p);
  }
  return out;
}

Outcome cli_contract() {
  std::set<std::string> commands;
  std::size_t mismatches = 0, unstable = 0;
  for (const auto& g : golden_cases()) {
    commands.insert(g.args[0] == "--json" ? g.args[1] : g.args[0]);
    auto args = g.args;
    for (auto& a : args) {
      if (a.size() > 5 && a.substr(a.size() - 5) == ".spec") a = fixture_path(a);
    }
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    const auto golden = read_text(std::string(MULTIRING_GOLDEN_DIR) + "/" + g.name);
    if (code != g.exit_code || out.str() != golden || golden.empty()) ++mismatches;

    std::string line = "--json";
    for (const auto& a : args) {
      if (a != "--json") line += " '" + a + "'";
    }
    const auto first = run_binary(line);
    if (first.empty() || first != run_binary(line)) ++unstable;
  }
  const bool all_nine = commands.size() == 9;
  return {all_nine && mismatches == 0 && unstable == 0,
          std::to_string(golden_cases().size()) + " golden cases over " +
              std::to_string(commands.size()) + " subcommands, " + std::to_string(mismatches) +
              " mismatches, " + std::to_string(unstable) + " unstable --json runs"};
}

}  // namespace

int main(int argc, char** argv) {
  // Optional argument: run a single criterion by number.
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  const std::vector<Criterion> criteria = {
      {1, "subspace criteria agree on Z4+Z6, all 2^10 subsets x 3 op sets", 30, subspace_sweep},
      {2, "ideal-subspace criteria agree on the same sweep", 30, ideal_sweep},
      {3, "Z6 ideals, maximal ideals, idempotents, unit split (exact)", 0, z6_facts},
      {4, "Z4+Z6 chain in order (1,2), validity and deletion check", 5, chain_z4z6},
      {5, "chain length bound over Z_n families (n 2..12, up to 3 rings, every order)", 60,
       chain_bounds},
      {6, "decompositions of Z6, Z10, Z12, Z4+Z6 replay", 10, decomposition_replay},
      {7, "every single-cell mutation of Z6 rejected with replayable witness", 60,
       mutation_robustness},
      {8, "mixed-law validator: overlap rejected, shared Z2 pair accepted", 5,
       mixed_law_validator},
      {9, "CLI golden files for all nine subcommands, --json byte-stable", 0, cli_contract},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0 || elapsed < c.limit_seconds;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  AC" << c.id << "  " << c.title << ": " << o.detail
              << " [" << seconds(elapsed);
    if (c.limit_seconds > 0) std::cout << " / limit " << seconds(c.limit_seconds);
    std::cout << "]\n";
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed\n"
                       : std::string("acceptance: all criteria passed\n"));
  return failed ? 1 : 0;
}
