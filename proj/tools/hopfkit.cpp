// hopfkit: batch driver over the core library.
//
// Exit codes: 0 all checks hold, 1 usage, 2 bad input (parse or axiom
// failure, unmet precondition), 3 a structural invariant failed.

#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hopfkit/canonical_maps.hpp"
#include "hopfkit/cofree.hpp"
#include "hopfkit/convolution.hpp"
#include "hopfkit/document.hpp"
#include "hopfkit/envelope.hpp"
#include "hopfkit/fixtures.hpp"
#include "hopfkit/suite.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace hopfkit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

struct Options {
  std::string field;
  std::string format = "text";
  bool matrices = false;
};

// Raised after a failed axiom check; carries the full report.
struct RejectedInput {
  Json report;
};

struct Outcome {
  Json report;
  int code = kExitOk;
};

struct Input {
  std::string name;
  std::optional<Bialgebra> bialgebra;
  std::optional<FiniteMonoid> monoid;
};

std::optional<Field> field_override(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  return Field::parse(o.field);
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> pair_labels(const Bialgebra& b) {
  std::vector<std::string> out;
  for (const auto& x : b.labels())
    for (const auto& y : b.labels()) out.push_back(x + "⊗" + y);
  return out;
}

std::vector<std::string> triple_labels(const Bialgebra& b) {
  std::vector<std::string> out;
  for (const auto& xy : pair_labels(b))
    for (const auto& z : b.labels()) out.push_back(xy + "⊗" + z);
  return out;
}

Json subspace_json(const Subspace& s, const std::vector<std::string>& labels) {
  Json basis = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) basis.push_back(format_combination(s.basis_vector(i), labels));
  return basis;
}

Json labels_of(const FiniteMonoid& m, const std::vector<std::size_t>& elements) {
  Json out = Json::array();
  for (auto e : elements) out.push_back(m.labels.empty() ? std::to_string(e) : m.labels[e]);
  return out;
}

Json axiom_json(const Bialgebra& b, const AxiomReport& r) {
  Json checks = Json::object();
  for (const AxiomCheck* c : r.checks()) {
    Json entry;
    entry["ok"] = c->ok;
    entry["failures"] = c->failures;
    if (!c->ok) {
      entry["witness"] = c->witness;
      const std::size_t d = b.dim();
      const std::size_t n = c->residual.size();
      const auto labels = n == d ? b.labels() : n == d * d ? pair_labels(b) : triple_labels(b);
      entry["residual"] = format_combination(c->residual, labels);
    }
    checks[c->name] = std::move(entry);
  }
  return checks;
}

const Bialgebra& require_verified(const Input& in) {
  if (!in.bialgebra) throw PreconditionError(in.name + " is not a bialgebra input");
  const AxiomReport r = verify_axioms(*in.bialgebra);
  if (!r.all_ok()) {
    Json report;
    report["input"] = in.name;
    report["status"] = "verification-failure";
    report["failed"] = r.first_failure()->name;
    report["witness"] = r.first_failure()->witness;
    report["axioms"] = axiom_json(*in.bialgebra, r);
    throw RejectedInput{std::move(report)};
  }
  return *in.bialgebra;
}

const FiniteMonoid& require_monoid_input(const Input& in) {
  if (!in.monoid) throw PreconditionError(in.name + " is not a monoid input");
  require_monoid(*in.monoid);
  return *in.monoid;
}

Input load_input(const std::string& source, const Options& o) {
  const auto field = field_override(o);
  Input in;
  in.name = source;
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) {
    Fixture f = builtin_fixture(source.substr(prefix.size()), field.value_or(Field::rationals()));
    in.bialgebra = std::move(f.bialgebra);
    in.monoid = std::move(f.monoid);
    return in;
  }
  Document doc = load_document(source, field);
  if (doc.kind == Document::Kind::monoid) {
    require_monoid(*doc.monoid);
    in.bialgebra = monoid_bialgebra(*doc.monoid, field.value_or(Field::rationals()));
    in.monoid = std::move(doc.monoid);
  } else {
    in.bialgebra = std::move(doc.bialgebra);
  }
  return in;
}

Json header(const std::string& command, const Input& in) {
  Json r;
  r["command"] = command;
  r["input"] = in.name;
  if (in.bialgebra) {
    r["field"] = in.bialgebra->field().name();
    r["dim"] = in.bialgebra->dim();
  }
  return r;
}

// ---------------------------------------------------------------------------

Outcome cmd_verify(const Input& in, const Options&) {
  if (!in.bialgebra) throw PreconditionError(in.name + " is not a bialgebra input");
  const Bialgebra& b = *in.bialgebra;
  Outcome out{header("verify", in)};
  const AxiomReport r = verify_axioms(b);
  out.report["axioms"] = axiom_json(b, r);
  if (r.all_ok()) {
    out.report["commutative"] = is_commutative(b);
    out.report["cocommutative"] = is_cocommutative(b);
    out.report["primitives_dim"] = primitives(b).dim();
  } else {
    out.report["failed"] = r.first_failure()->name;
    out.report["witness"] = r.first_failure()->witness;
    out.code = kExitInput;
  }
  out.report["status"] = r.all_ok() ? "ok" : "verification-failure";
  return out;
}

Outcome cmd_oslash(const Input& in, const Options& o) {
  const Bialgebra& b = require_verified(in);
  const OslashSpace os = build_oslash(b);
  Outcome out{header("oslash", in)};
  out.report["relations_dim"] = os.relations.dim();
  out.report["oslash_dim"] = os.quotient_dim;
  out.report["ker_i_dim"] = os.ker_i.dim();
  out.report["ker_i"] = subspace_json(os.ker_i, b.labels());
  out.report["i_surjective"] = os.surjective;
  out.report["i_injective"] = os.injective;
  const auto as_bialgebra = oslash_bialgebra(os);
  out.report["quotient_bialgebra"] = as_bialgebra.has_value();
  if (const auto flip = oslash_flip_antipode(os)) out.report["flip_is_antipode"] = *flip;
  if (o.matrices) {
    out.report["i_matrix"] = matrix_json(os.i_matrix);
    out.report["projection"] = matrix_json(os.projection);
  }
  out.report["status"] = "ok";
  return out;
}

Outcome cmd_boxslash(const Input& in, const Options& o) {
  const Bialgebra& b = require_verified(in);
  const BoxslashSpace bs = build_boxslash(b);
  Outcome out{header("boxslash", in)};
  out.report["boxslash_dim"] = bs.dim();
  out.report["basis"] = subspace_json(bs.subspace, pair_labels(b));
  out.report["im_p_dim"] = bs.im_p.dim();
  out.report["im_p"] = subspace_json(bs.im_p, b.labels());
  out.report["p_injective"] = bs.injective;
  out.report["p_surjective"] = bs.surjective;
  out.report["sub_bialgebra"] = boxslash_bialgebra(bs).has_value();
  if (const auto flip = boxslash_flip_antipode(bs)) out.report["flip_is_antipode"] = *flip;
  if (o.matrices) {
    out.report["inclusion"] = matrix_json(bs.inclusion);
    out.report["p_matrix"] = matrix_json(bs.p_matrix);
  }
  out.report["status"] = "ok";
  return out;
}

Outcome cmd_frobenius(const Input& in, const Options& o) {
  const Bialgebra& b = require_verified(in);
  const FrobeniusReport f = frobenius_report(b);
  Outcome out{header("frobenius", in)};
  out.report["i_bijective"] = f.i_bijective;
  out.report["p_bijective"] = f.p_bijective;
  out.report["right_antipode"] = f.right_antipode.has_value();
  out.report["consistent"] = f.consistent;
  out.report["can_surjective"] = f.can_surjective;
  out.report["can_prime_injective"] = f.can_prime_injective;
  if (o.matrices && f.right_antipode) out.report["antipode"] = matrix_json(*f.right_antipode);
  const bool agree = f.consistent && f.i_bijective == f.p_bijective && f.i_bijective == f.right_antipode.has_value();
  out.report["status"] = agree ? "ok" : "invariant-violation";
  out.code = agree ? kExitOk : kExitInvariant;
  return out;
}

Outcome cmd_nantipode(const Input& in, const Options& o) {
  const Bialgebra& b = require_verified(in);
  const NAntipodeResult left = minimal_left_n_antipode(b);
  const NAntipodeResult right = minimal_right_n_antipode(b);
  const NAntipodeResult central = central_n_antipode(b);
  const AntipodeShape shape = antipode_shape_check(b, central.s);
  Outcome out{header("nantipode", in)};
  out.report["left_index"] = left.n;
  out.report["right_index"] = right.n;
  out.report["central_index"] = central.n;
  out.report["indices_agree"] = left.n == central.n && right.n == central.n;
  Json images = Json::array();
  for (std::size_t k = 0; k < b.dim(); ++k) {
    images.push_back(b.labels()[k] + " -> " + format_combination(central.s.column(k), b.labels()));
  }
  out.report["witness"] = images;
  out.report["anti_algebra"] = shape.anti_algebra;
  out.report["anti_coalgebra"] = shape.anti_coalgebra;
  if (o.matrices) out.report["witness_matrix"] = matrix_json(central.s);
  const bool agree = out.report["indices_agree"].get<bool>();
  out.report["status"] = agree ? "ok" : "invariant-violation";
  out.code = agree ? kExitOk : kExitInvariant;
  return out;
}

Outcome cmd_envelope(const Input& in, const Options& o) {
  const Bialgebra& b = require_verified(in);
  const OslashSpace os = build_oslash(b);
  const HopfResult h = hopf_envelope(os);
  Outcome out{header("envelope", in)};
  out.report["envelope_dim"] = h.hopf.dim();
  out.report["ker_i_dim"] = os.ker_i.dim();
  out.report["ker_i"] = subspace_json(os.ker_i, b.labels());
  out.report["antipode"] = antipode_identities(h.hopf, h.antipode);
  out.report["structure_map_is_bialgebra_map"] = h.structure_map.is_bialgebra_map();
  out.report["oslash_iso"] = oslash_iso_report(os, h).ok();
  out.report["iterate_steps"] = iterate_Q(b).steps;
  Json images = Json::array();
  const Matrix& q = h.structure_map.matrix;
  for (std::size_t k = 0; k < b.dim(); ++k) {
    images.push_back(b.labels()[k] + " -> " + format_combination(q.column(k), h.hopf.labels()));
  }
  out.report["structure_map"] = images;
  if (o.matrices) {
    out.report["structure_matrix"] = matrix_json(q);
    out.report["antipode_matrix"] = matrix_json(h.antipode);
  }
  out.report["status"] = "ok";
  return out;
}

Outcome cmd_cofree(const Input& in, const Options& o) {
  const Bialgebra& b = require_verified(in);
  const BoxslashSpace bs = build_boxslash(b);
  const HopfResult c = cofree_hopf(bs);
  Outcome out{header("cofree", in)};
  out.report["cofree_dim"] = c.hopf.dim();
  out.report["boxslash_dim"] = bs.dim();
  out.report["basis"] = subspace_json(c.defining_subspace, b.labels());
  out.report["antipode"] = antipode_identities(c.hopf, c.antipode);
  out.report["structure_map_is_bialgebra_map"] = c.structure_map.is_bialgebra_map();
  out.report["iterate_steps"] = iterate_K(b).steps;
  if (o.matrices) {
    out.report["inclusion"] = matrix_json(c.structure_map.matrix);
    out.report["antipode_matrix"] = matrix_json(c.antipode);
  }
  out.report["status"] = "ok";
  return out;
}

Outcome cmd_cocofree(const Input& in, const Options& o) {
  const Bialgebra& b = require_verified(in);
  const HopfResult c = cocommutative_cofree(b);
  Outcome out{header("cocofree", in)};
  out.report["cocofree_dim"] = c.hopf.dim();
  out.report["antipode"] = antipode_identities(c.hopf, c.antipode);
  out.report["structure_map_is_bialgebra_map"] = c.structure_map.is_bialgebra_map();
  if (o.matrices) out.report["antipode_matrix"] = matrix_json(c.antipode);
  out.report["status"] = "ok";
  return out;
}

Outcome cmd_dualcheck(const Input& in, const Options&) {
  const Bialgebra& b = require_verified(in);
  const DualityReport d = duality_report(b);
  Outcome out{header("dualcheck", in)};
  out.report["envelope_dim"] = d.envelope_dim;
  out.report["cofree_dual_dim"] = d.cofree_dual_dim;
  out.report["transpose_is_morphism"] = d.transpose_is_morphism;
  out.report["transpose_injective"] = d.transpose_injective;
  out.report["image_matches"] = d.image_matches;
  out.report["status"] = d.ok() ? "ok" : "invariant-violation";
  out.code = d.ok() ? kExitOk : kExitInvariant;
  return out;
}

Outcome cmd_units(const Input& in, const Options& o) {
  const FiniteMonoid& m = require_monoid_input(in);
  const Field field = field_override(o).value_or(Field::rationals());
  const UnitsReport u = units_and_left_units(m);
  const CancellativityReport c = cancellativity_cross_check(m, field);
  Outcome out{header("monoid units", in)};
  out.report["size"] = m.size;
  out.report["units"] = labels_of(m, u.units);
  out.report["left_units"] = labels_of(m, u.left_units);
  out.report["regulars"] = labels_of(m, u.regulars);
  Json pseudo = Json::array();
  for (std::size_t g = 0; g < m.size; ++g) {
    if (u.pseudoinverse[g]) pseudo.push_back(labels_of(m, {g})[0].get<std::string>() + " -> " +
                                             labels_of(m, {*u.pseudoinverse[g]})[0].get<std::string>());
  }
  out.report["pseudoinverse"] = pseudo;
  out.report["right_cancellative"] = c.right_cancellative;
  out.report["unique_right_inverses"] = c.unique_right_inverses;
  out.report["is_group"] = c.is_group;
  out.report["status"] = "ok";
  return out;
}

Outcome cmd_envgroup(const Input& in, const Options& o) {
  const FiniteMonoid& m = require_monoid_input(in);
  const Field field = field_override(o).value_or(Field::rationals());
  const EnvelopingGroup g = enveloping_group(m, field);
  Outcome out{header("monoid envgroup", in)};
  out.report["size"] = m.size;
  out.report["group_order"] = g.group.size;
  Json map = Json::array();
  for (std::size_t x = 0; x < m.size; ++x) {
    map.push_back(labels_of(m, {x})[0].get<std::string>() + " -> " +
                  labels_of(g.group, {g.quotient_map[x]})[0].get<std::string>());
  }
  out.report["quotient_map"] = map;
  Json table = Json::array();
  for (const auto& row : g.group.table) table.push_back(labels_of(g.group, row));
  out.report["table"] = table;
  const auto cyclic = find_isomorphism(g.group, cyclic_group(g.group.size));
  out.report["cyclic"] = cyclic.has_value();
  out.report["status"] = "ok";
  return out;
}

Json suite_json(const std::string& name, const SuiteReport& s) {
  Json r;
  r["name"] = name;
  r["dim"] = s.dim;
  r["oslash_dim"] = s.oslash_dim;
  r["boxslash_dim"] = s.boxslash_dim;
  r["envelope_dim"] = s.envelope_dim;
  r["cofree_dim"] = s.cofree_dim;
  r["n_antipode_index"] = s.central_index;
  r["ok"] = s.ok();
  if (!s.ok()) r["failures"] = s.failures;
  return r;
}

Outcome cmd_corpus(const Options& o, std::size_t random_count, std::uint64_t seed, std::size_t max_size) {
  const Field field = field_override(o).value_or(Field::rationals());
  Outcome out;
  out.report["command"] = "corpus";
  out.report["field"] = field.name();
  Json entries = Json::array();
  std::size_t failed = 0;
  auto run = [&](const std::string& name, const Bialgebra& b, const std::optional<FiniteMonoid>& m) {
    const SuiteReport s = run_suite(b, m);
    if (!s.ok()) ++failed;
    entries.push_back(suite_json(name, s));
  };
  for (const Fixture& f : builtin_corpus(field)) run(f.name, f.bialgebra, f.monoid);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) {
    const FiniteMonoid m = random_monoid(rng, max_size);
    run("random-" + std::to_string(i), monoid_bialgebra(m, field), m);
  }
  out.report["fixtures"] = entries;
  out.report["failed"] = failed;
  out.report["status"] = failed == 0 ? "ok" : "invariant-violation";
  out.code = failed == 0 ? kExitOk : kExitInvariant;
  return out;
}

// ---------------------------------------------------------------------------

void render_text(std::ostream& os, const Json& j, const std::string& prefix) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      render_text(os, value, name);
    } else if (value.is_array() && !value.empty() && (value[0].is_array() || value[0].is_object())) {
      os << name << ":\n";
      for (const auto& item : value) {
        if (item.is_object()) {
          std::string line;
          for (const auto& [k, v] : item.items()) {
            line += (line.empty() ? "" : " ") + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
          }
          os << "  " << line << "\n";
        } else {
          os << "  " << item.dump() << "\n";
        }
      }
    } else if (value.is_array()) {
      os << name << ":";
      for (const auto& item : value) os << "\n  " << (item.is_string() ? item.get<std::string>() : item.dump());
      os << "\n";
    } else {
      os << name << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

void emit(const Json& report, const Options& o) {
  if (o.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    render_text(std::cout, report, "");
  }
}

int fail_with(const Options& o, const std::string& status, const std::string& message, int code) {
  Json report;
  report["status"] = status;
  report["error"] = message;
  emit(report, o);
  std::cerr << "error: " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical Hopf objects of finite-dimensional bialgebras"};
  app.require_subcommand(1);
  Options opts;
  app.add_option("--field", opts.field, "Field override: Q, F2, F3, ...")
      ->check(CLI::Validator(
          [](std::string& text) {
            try {
              Field::parse(text);
              return std::string();
            } catch (const Error& e) {
              return std::string(e.what());
            }
          },
          "FIELD"));
  app.add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--matrices", opts.matrices, "Include full matrices in reports");
  app.fallthrough();

  std::string input;
  std::function<Outcome()> action;
  std::function<std::string()> exported;
  auto input_command = [&](const std::string& name, const std::string& help,
                           Outcome (*fn)(const Input&, const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "Document path or builtin:<name>")->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(load_input(input, opts), opts); }; });
    return sub;
  };
  input_command("verify", "Check the bialgebra axioms", cmd_verify);
  input_command("oslash", "Quotient B⊘B and the map i_B", cmd_oslash);
  input_command("boxslash", "Subspace B⊠B and the map p_B", cmd_boxslash);
  input_command("frobenius", "Compare bijectivity of i_B, p_B and antipode existence", cmd_frobenius);
  input_command("nantipode", "Minimal n-antipode indices and a witness", cmd_nantipode);
  input_command("envelope", "Hopf envelope as a quotient of B", cmd_envelope);
  input_command("cofree", "Cofree Hopf algebra as a sub-bialgebra of B", cmd_cofree);
  input_command("cocofree", "Cofree cocommutative Hopf object inside B⊠B", cmd_cocofree);
  input_command("dualcheck", "Compare H(B) with C(B*) through the transpose", cmd_dualcheck);

  CLI::App* monoid = app.add_subcommand("monoid", "Monoid table commands");
  monoid->require_subcommand(1);
  auto monoid_command = [&](const std::string& name, const std::string& help,
                            Outcome (*fn)(const Input&, const Options&)) {
    CLI::App* sub = monoid->add_subcommand(name, help);
    sub->add_option("input", input, "Monoid document path or builtin:<name>")->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(load_input(input, opts), opts); }; });
  };
  {
    CLI::App* sub = monoid->add_subcommand("export", "Print the canonical monoid document");
    sub->add_option("input", input, "Monoid document path or builtin:<name>")->required();
    sub->callback([&] { exported = [&] { return to_json(require_monoid_input(load_input(input, opts))); }; });
  }
  monoid_command("units", "Units, one-sided units and pseudoinverses", cmd_units);
  monoid_command("envgroup", "Enveloping group read off the Hopf envelope", cmd_envgroup);

  CLI::App* exp = app.add_subcommand("export", "Print the canonical bialgebra document");
  exp->add_option("input", input, "Document path or builtin:<name>")->required();
  exp->callback([&] { exported = [&] { return to_json(require_verified(load_input(input, opts))); }; });

  std::size_t random_count = 0;
  std::uint64_t seed = 1;
  std::size_t max_size = 6;
  CLI::App* corpus = app.add_subcommand("corpus", "Run the invariant suite over the built-in fixtures");
  corpus->add_option("--random", random_count, "Additional random monoid bialgebras");
  corpus->add_option("--seed", seed, "Seed for random monoids");
  corpus->add_option("--max-size", max_size, "Largest random monoid")->check(CLI::Range(1, 12));
  corpus->callback([&] { action = [&] { return cmd_corpus(opts, random_count, seed, max_size); }; });

  CLI::App* list = app.add_subcommand("fixtures", "List built-in fixture names");
  list->callback([&] {
    action = [] {
      Outcome out;
      out.report["fixtures"] = builtin_fixture_names();
      return out;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (exported) {
      std::cout << exported();
      return kExitOk;
    }
    const Outcome out = action();
    emit(out.report, opts);
    return out.code;
  } catch (const RejectedInput& r) {
    emit(r.report, opts);
    std::cerr << "error: " << r.report["failed"].get<std::string>() << " fails at basis indices "
              << r.report["witness"].dump() << "\n";
    return kExitInput;
  } catch (const InvariantViolation& e) {
    return fail_with(opts, "invariant-violation", e.what(), kExitInvariant);
  } catch (const ParseError& e) {
    return fail_with(opts, "parse-error", e.what(), kExitInput);
  } catch (const Error& e) {
    return fail_with(opts, "rejected-input", e.what(), kExitInput);
  }
}
