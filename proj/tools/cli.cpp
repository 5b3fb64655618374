#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "multiring/chains.hpp"
#include "multiring/decomposition.hpp"
#include "multiring/ideals.hpp"
#include "multiring/io.hpp"
#include "multiring/multispace.hpp"

namespace multiring::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::size_t max_ring_size = Limits{}.max_ring_size;
  std::uint64_t subset_budget = Limits{}.subset_budget;
  std::optional<std::uint64_t> seed;  // reserved: every algorithm is deterministic

  std::string file;
  std::vector<std::string> elements;
  std::vector<std::size_t> ops;
  std::vector<std::size_t> order;
  std::size_t ring = 0;
  std::string criterion;

  Limits limits() const { return Limits{max_ring_size, subset_budget}; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kSyntaxError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MultiRingSpace load(const Options& o) {
  return io::build(io::parse_spec(read_file(o.file)), o.limits());
}

std::vector<std::string> labels(const Universe& u, const ElementList& list) {
  std::vector<std::string> out;
  for (auto e : list) out.push_back(u.label(e));
  return out;
}

std::vector<std::size_t> one_based(const std::vector<RingIndex>& ops) {
  std::vector<std::size_t> out;
  for (auto k : ops) out.push_back(k + 1);
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out;
}

std::vector<RingIndex> zero_based(const std::vector<std::size_t>& v, std::size_t rings,
                                  const char* what) {
  std::vector<RingIndex> out;
  for (auto k : v) {
    if (k == 0 || k > rings) {
      throw Error(ErrorCode::kForeignElement, std::string(what) + " " + std::to_string(k) +
                                                  " out of range 1.." + std::to_string(rings));
    }
    out.push_back(k - 1);
  }
  return out;
}

RingIndex ring_arg(const Options& o, const MultiRingSpace& m) {
  return zero_based({o.ring}, m.ring_count(), "ring").front();
}

Json selection_json(const MultiRingSpace& m, const SubsetSelection& s) {
  Json j;
  j["elements"] = labels(m.universe(), s.elements.to_list());
  j["ops"] = one_based(s.ops);
  return j;
}

std::string selection_text(const MultiRingSpace& m, const SubsetSelection& s) {
  return format_set(m.universe(), s.elements.to_list()) + " ops " + join(one_based(s.ops));
}

std::string ring_title(const MultiRingSpace& m, RingIndex k) {
  return "ring " + std::to_string(k + 1) + " " + m.ring(k).name();
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// --- subcommands -----------------------------------------------------------

int cmd_validate(const Options& o, std::ostream& out) {
  const auto doc = io::parse_spec(read_file(o.file));
  Json j;
  j["command"] = "validate";
  try {
    const auto m = io::build(doc, o.limits());
    const auto& u = m.universe();
    const bool disjoint = m.carriers_disjoint();
    const auto instances = m.mixed_law_instances();
    std::string status = instances > 0 ? "hold" : "vacuous";
    std::string detail = disjoint ? "disjoint carriers"
                         : instances > 0 ? std::to_string(instances) + " instances checked"
                                         : "no fully defined instance";
    j["valid"] = true;
    j["carrier_size"] = m.carrier().count();
    Json rings = Json::array();
    for (RingIndex k = 0; k < m.ring_count(); ++k) {
      const auto& r = m.ring(k);
      Json rj;
      rj["index"] = k + 1;
      rj["name"] = r.name();
      rj["size"] = r.size();
      rj["zero"] = u.label(r.zero());
      rj["unit"] = r.unit() ? Json(u.label(*r.unit())) : Json(nullptr);
      rings.push_back(std::move(rj));
    }
    j["rings"] = std::move(rings);
    j["mixed_laws"] = {{"status", status}, {"disjoint", disjoint}, {"instances", instances}};
    if (o.json) {
      emit(out, j);
      return kHolds;
    }
    out << m.ring_count() << (m.ring_count() == 1 ? " ring" : " rings")
        << ", mixed laws: " << status << " (" << detail << ")\n";
    for (RingIndex k = 0; k < m.ring_count(); ++k) {
      const auto& r = m.ring(k);
      out << ring_title(m, k) << ": " << r.size() << " elements, zero " << u.label(r.zero())
          << ", unit " << (r.unit() ? u.label(*r.unit()) : std::string("none")) << '\n';
    }
    out << "carrier: " << m.carrier().count() << " elements\n";
    return kHolds;
  } catch (const RingInvalidError& e) {
    const auto& f = e.report().failures.front();
    const auto universe = Universe::from_labels(doc.universe);
    j["valid"] = false;
    j["failure"] = {{"kind", "ring-axiom"},
                    {"ring", e.ring_index() + 1},
                    {"axiom", f.axiom},
                    {"witness", labels(universe, f.witness)}};
    if (o.json) {
      emit(out, j);
    } else {
      out << "invalid: ring " << e.ring_index() + 1 << " fails " << f.axiom << '\n'
          << "witness: (" << [&] {
               std::string s;
               for (std::size_t k = 0; k < f.witness.size(); ++k)
                 s += (k ? ", " : "") + universe.label(f.witness[k]);
               return s;
             }()
          << ")\n";
    }
    return kFails;
  } catch (const MixedLawError& e) {
    const auto& v = e.violation();
    const auto universe = Universe::from_labels(doc.universe);
    const std::vector<std::string> w = {universe.label(v.x), universe.label(v.y),
                                        universe.label(v.z)};
    j["valid"] = false;
    j["failure"] = {{"kind", "mixed-law"},
                    {"law", v.law},
                    {"ops", {v.i + 1, v.j + 1}},
                    {"witness", w}};
    if (o.json) {
      emit(out, j);
    } else {
      out << "invalid: " << v.law << " fails for operations (" << v.i + 1 << ", " << v.j + 1
          << ")\nwitness: (x, y, z) = (" << w[0] << ", " << w[1] << ", " << w[2] << ")\n";
    }
    return kFails;
  }
}

int report_verdict(const Options& o, std::ostream& out, const char* command,
                   const char* noun, const MultiRingSpace& m, const SubsetSelection& s,
                   const Verdict& v, const std::string& criterion) {
  if (o.json) {
    Json j;
    j["command"] = command;
    j["criterion"] = criterion;
    j["selection"] = selection_json(m, s);
    j["holds"] = v.holds;
    j["reason"] = v.holds ? Json(nullptr) : Json(v.reason);
    emit(out, j);
  } else {
    out << noun << ": " << (v.holds ? "yes" : "no") << " (criterion " << criterion << ")\n";
    if (!v.holds) out << "witness: " << v.reason << '\n';
  }
  return v.holds ? kHolds : kFails;
}

int cmd_subspace(const Options& o, std::ostream& out) {
  const auto m = load(o);
  const auto s = make_selection(m, o.elements, zero_based(o.ops, m.ring_count(), "operation"));
  const auto criterion = o.criterion.empty() ? std::string("t21") : o.criterion;
  const auto c = criterion == "direct" ? SubspaceCriterion::kDirect
                 : criterion == "t22"  ? SubspaceCriterion::kT22
                                       : SubspaceCriterion::kT21;
  return report_verdict(o, out, "subspace", "subspace", m, s, subspace_verdict(m, s, c),
                        criterion);
}

int cmd_ideal(const Options& o, std::ostream& out) {
  const auto m = load(o);
  const auto s = make_selection(m, o.elements, zero_based(o.ops, m.ring_count(), "operation"));
  const auto criterion = o.criterion.empty() ? std::string("t23") : o.criterion;
  const auto c = criterion == "direct" ? IdealCriterion::kDirect : IdealCriterion::kT23;
  return report_verdict(o, out, "ideal", "ideal subspace", m, s,
                        ideal_subspace_verdict(m, s, c), criterion);
}

int cmd_ideals(const Options& o, std::ostream& out) {
  const auto m = load(o);
  const auto k = ring_arg(o, m);
  const auto& u = m.universe();
  const auto all = enumerate_ideals(m.ring(k), IdealMethod::kAuto, o.limits());
  const auto maximal = maximal_ideals(m.ring(k), o.limits());
  if (o.json) {
    Json j;
    j["command"] = "ideals";
    j["ring"] = k + 1;
    j["name"] = m.ring(k).name();
    Json list = Json::array();
    for (const auto& i : all) list.push_back(labels(u, i));
    j["ideals"] = std::move(list);
    Json max = Json::array();
    for (const auto& i : maximal) max.push_back(labels(u, i));
    j["maximal"] = std::move(max);
    emit(out, j);
    return kHolds;
  }
  out << ring_title(m, k) << ": " << all.size() << (all.size() == 1 ? " ideal\n" : " ideals\n");
  for (const auto& i : all) out << "  " << format_set(u, i) << '\n';
  out << "maximal:";
  for (const auto& i : maximal) out << ' ' << format_set(u, i);
  out << '\n';
  return kHolds;
}

Json chain_json(const MultiRingSpace& m, const IdealChain& chain) {
  Json terms = Json::array();
  for (std::size_t t = 0; t < chain.terms.size(); ++t) {
    auto tj = selection_json(m, chain.terms[t]);
    std::size_t stage = 0;
    for (std::size_t k = 0; k < chain.stage_boundaries.size(); ++k) {
      if (t >= chain.stage_boundaries[k]) stage = k + 1;
    }
    Json entry;
    entry["index"] = t + 1;
    entry["stage"] = t == 0 ? 0 : stage;
    entry["elements"] = tj["elements"];
    entry["ops"] = tj["ops"];
    terms.push_back(std::move(entry));
  }
  return terms;
}

void chain_text(std::ostream& out, const MultiRingSpace& m, const IdealChain& chain) {
  for (std::size_t t = 0; t < chain.terms.size(); ++t) {
    for (std::size_t k = 0; k < chain.stage_boundaries.size(); ++k) {
      if (chain.stage_boundaries[k] == t) {
        out << "stage " << k + 1 << ": descend ring " << chain.order.order[k] + 1 << '\n';
      }
    }
    out << "  term " << t + 1 << ": " << selection_text(m, chain.terms[t]) << '\n';
  }
}

std::vector<std::size_t> one_based_boundaries(const IdealChain& chain) {
  std::vector<std::size_t> out;
  for (auto b : chain.stage_boundaries) out.push_back(b + 1);
  return out;
}

int cmd_chain(const Options& o, std::ostream& out) {
  const auto m = load(o);
  const auto order = o.order.empty()
                         ? OperationOrder::identity(m.ring_count())
                         : OperationOrder::from(zero_based(o.order, m.ring_count(), "operation"),
                                                m.ring_count());
  try {
    const auto chain = ideal_subspace_chain(m, order, ChainOptions{o.limits(), false});
    const bool valid = chain_is_valid(m, chain, o.limits());
    if (o.json) {
      Json j;
      j["command"] = "chain";
      j["order"] = one_based(order.order);
      j["terms"] = chain_json(m, chain);
      j["stage_starts"] = one_based_boundaries(chain);
      j["valid"] = valid;
      emit(out, j);
    } else {
      out << "ideal subspace chain, order " << join(one_based(order.order)) << ": "
          << chain.terms.size() << " terms\n";
      chain_text(out, m, chain);
      out << "valid: " << (valid ? "yes" : "no") << '\n';
    }
    return valid ? kHolds : kFails;
  } catch (const StepInvalidError& e) {
    if (o.json) {
      Json j;
      j["command"] = "chain";
      j["order"] = one_based(order.order);
      j["error"] = e.what();
      j["offending_term"] = selection_json(m, e.term());
      emit(out, j);
    } else {
      out << "chain construction failed: " << e.what() << '\n'
          << "witness: " << selection_text(m, e.term()) << '\n';
    }
    return kFails;
  }
}

int cmd_artin(const Options& o, std::ostream& out) {
  const auto m = load(o);
  const auto report = is_artin(m, o.limits());
  if (o.json) {
    Json j;
    j["command"] = "artin";
    j["artin"] = report.artin;
    j["ring_chain_lengths"] = report.ring_chain_lengths;
    j["witness"] = {{"order", one_based(report.witness.order.order)},
                    {"terms", chain_json(m, report.witness)}};
    emit(out, j);
  } else {
    out << "artin: " << (report.artin ? "yes" : "no") << '\n';
    for (RingIndex k = 0; k < m.ring_count(); ++k) {
      out << ring_title(m, k) << ": maximal ideal chain of length "
          << report.ring_chain_lengths[k] << '\n';
    }
    out << "witness chain, order " << join(one_based(report.witness.order.order)) << ": "
        << report.witness.terms.size() << " terms\n";
    chain_text(out, m, report.witness);
  }
  return report.artin ? kHolds : kFails;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const auto m = load(o);
  const auto& u = m.universe();
  DirectedSumDecomposition d;
  try {
    d = decompose_artin(m, o.limits());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoDecomposition) throw;
    if (o.json) {
      Json j;
      j["command"] = "decompose";
      j["error"] = e.what();
      emit(out, j);
    } else {
      out << "no decomposition: " << e.what() << '\n';
    }
    return kFails;
  }
  if (o.json) {
    Json j;
    j["command"] = "decompose";
    Json rings = Json::array();
    for (RingIndex k = 0; k < m.ring_count(); ++k) {
      Json rj;
      rj["ring"] = k + 1;
      rj["route"] = to_string(d.routes[k]);
      auto it = d.per_ring_idempotents.find(k);
      rj["idempotents"] =
          it == d.per_ring_idempotents.end() ? Json(nullptr) : Json(labels(u, it->second));
      rings.push_back(std::move(rj));
    }
    j["rings"] = std::move(rings);
    Json comps = Json::array();
    for (std::size_t c = 0; c < d.components.size(); ++c) {
      comps.push_back({{"ring", d.component_ring[c] + 1},
                       {"elements", labels(u, d.components[c].elements.to_list())}});
    }
    j["components"] = std::move(comps);
    Json joins = Json::array();
    for (auto mode : d.joins) joins.push_back(to_string(mode));
    j["joins"] = std::move(joins);
    emit(out, j);
    return kHolds;
  }
  out << "directed sum of " << d.components.size() << " non-reducible components\n";
  for (RingIndex k = 0; k < m.ring_count(); ++k) {
    out << ring_title(m, k) << " (" << to_string(d.routes[k]) << " route)";
    if (auto it = d.per_ring_idempotents.find(k); it != d.per_ring_idempotents.end()) {
      out << ": idempotents " << format_set(u, it->second);
    }
    out << '\n';
    for (std::size_t c = 0; c < d.components.size(); ++c) {
      if (d.component_ring[c] == k) {
        out << "  component " << c + 1 << ": " << format_set(u, d.components[c].elements.to_list())
            << '\n';
      }
    }
  }
  if (!d.joins.empty()) {
    out << "joins:";
    for (std::size_t k = 0; k < d.joins.size(); ++k) out << (k ? ", " : " ") << to_string(d.joins[k]);
    out << '\n';
  }
  return kHolds;
}

int cmd_idempotents(const Options& o, std::ostream& out) {
  const auto m = load(o);
  const auto k = ring_arg(o, m);
  const auto& u = m.universe();
  const auto& r = m.ring(k);
  const auto all = idempotents(r);
  std::optional<ElementList> split;
  if (r.unit()) split = decompose_unit(r);
  if (o.json) {
    Json j;
    j["command"] = "idempotents";
    j["ring"] = k + 1;
    j["name"] = r.name();
    j["idempotents"] = labels(u, all);
    j["unit_decomposition"] = split ? Json(labels(u, *split)) : Json(nullptr);
    emit(out, j);
    return kHolds;
  }
  out << ring_title(m, k) << ": idempotents " << format_set(u, all) << '\n';
  if (split) {
    out << "unit decomposition: " << format_set(u, *split) << '\n';
  } else {
    out << "unit decomposition: none (no unit)\n";
  }
  return kHolds;
}

int cmd_multifield(const Options& o, std::ostream& out) {
  const auto m = load(o);
  const bool holds = is_multi_field(m);
  std::optional<RingIndex> witness;
  for (RingIndex k = 0; k < m.ring_count() && !witness; ++k) {
    if (!is_field(m.ring(k))) witness = k;
  }
  if (o.json) {
    Json j;
    j["command"] = "multifield";
    j["multi_field"] = holds;
    j["non_field_ring"] = witness ? Json(*witness + 1) : Json(nullptr);
    emit(out, j);
  } else {
    out << "multi-field: " << (holds ? "yes" : "no") << '\n';
    if (witness) out << "witness: " << ring_title(m, *witness) << " is not a field\n";
  }
  return holds ? kHolds : kFails;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite multi-ring spaces: validation, subspaces, ideal chains, decompositions",
               "multiring"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--max-ring-size", o.max_ring_size, "Largest ring handled")
      ->check(CLI::Range(std::size_t{1}, kMaxRingSizeCeiling));
  app.add_option("--subset-budget", o.subset_budget, "Largest exhaustive enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Reserved; all algorithms are deterministic");

  auto file_arg = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Space description")->required();
  };
  auto selection_args = [&](CLI::App* sub) {
    sub->add_option("--elements", o.elements, "Comma-separated element labels")
        ->delimiter(',')
        ->required();
    sub->add_option("--ops", o.ops, "Comma-separated 1-based ring indices")
        ->delimiter(',')
        ->required();
  };

  auto* validate = app.add_subcommand("validate", "Check ring axioms and mixed laws");
  file_arg(validate);
  auto* subspace = app.add_subcommand("subspace", "Decide whether a selection is a subspace");
  file_arg(subspace);
  selection_args(subspace);
  subspace->add_option("--criterion", o.criterion, "t21 (default), t22 or direct")
      ->check(CLI::IsMember({"t21", "t22", "direct"}));
  auto* ideal = app.add_subcommand("ideal", "Decide whether a selection is an ideal subspace");
  file_arg(ideal);
  selection_args(ideal);
  ideal->add_option("--criterion", o.criterion, "t23 (default) or direct")
      ->check(CLI::IsMember({"t23", "direct"}));
  auto* ideals = app.add_subcommand("ideals", "List the ideals of one ring");
  file_arg(ideals);
  ideals->add_option("--ring", o.ring, "1-based ring index")->required();
  auto* chain = app.add_subcommand("chain", "Build the ideal subspace chain for an order");
  file_arg(chain);
  chain->add_option("--order", o.order, "Comma-separated 1-based ring indices")->delimiter(',');
  auto* artin = app.add_subcommand("artin", "Artin check with a witness chain");
  file_arg(artin);
  auto* decompose = app.add_subcommand("decompose", "Directed-sum decomposition");
  file_arg(decompose);
  auto* idem = app.add_subcommand("idempotents", "Idempotents and unit decomposition of a ring");
  file_arg(idem);
  idem->add_option("--ring", o.ring, "1-based ring index")->required();
  auto* multifield = app.add_subcommand("multifield", "Check whether every ring is a field");
  file_arg(multifield);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kInvalidInput;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (subspace->parsed()) return cmd_subspace(o, out);
    if (ideal->parsed()) return cmd_ideal(o, out);
    if (ideals->parsed()) return cmd_ideals(o, out);
    if (chain->parsed()) return cmd_chain(o, out);
    if (artin->parsed()) return cmd_artin(o, out);
    if (decompose->parsed()) return cmd_decompose(o, out);
    if (idem->parsed()) return cmd_idempotents(o, out);
    if (multifield->parsed()) return cmd_multifield(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kCapExceeded ? kBudgetExceeded : kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace multiring::cli
