// Command-line front end. Every subcommand writes one JSON document to stdout.
// Exit status: 0 ok, 1 invalid input, 2 a verification reported failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "gusvd/admissibility.hpp"
#include "gusvd/brute_oracle.hpp"
#include "gusvd/counting.hpp"
#include "gusvd/errors.hpp"
#include "gusvd/io.hpp"
#include "gusvd/linalg.hpp"
#include "gusvd/orbit_invariant.hpp"

using namespace gusvd;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitVerifyFailed = 2;

Json read_document(const std::string& file) {
  std::string text;
  if (file.empty() || file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(file);
    if (!in) throw ValidationError("cannot open --file '" + file + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("input is not valid JSON: ") + e.what());
  }
}

FieldPtr field_arg(std::uint32_t p, std::uint32_t e) { return make_field(p, e); }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbits of GU_m(q) x GU_n(q) on m x n matrices over GF(q^2)"};
  app.require_subcommand(1);

  std::string file;
  std::uint64_t seed = 0;
  int m = 0, n = 0, d = 0;
  std::uint64_t q = 2;
  std::uint32_t p = 2, e = 1;
  std::string alpha_text, beta_text;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("--file", file, "Read the JSON document from this file instead of stdin");
  };

  auto* invariant_cmd = app.add_subcommand("invariant", "Orbit invariant of a matrix document");
  add_file(invariant_cmd);

  auto* same_cmd = app.add_subcommand("same-orbit", "Compare {\"a\": matrix, \"b\": matrix}");
  add_file(same_cmd);

  auto* realize_cmd = app.add_subcommand("realize", "Matrix with the given invariant");
  add_file(realize_cmd);
  realize_cmd->add_option("--seed", seed);

  auto* jordan_cmd = app.add_subcommand("jordan-pair", "Jordan types of AA* and A*A for A*A nilpotent");
  add_file(jordan_cmd);

  auto* count_cmd = app.add_subcommand("count", "Orbit and class counts");
  count_cmd->require_subcommand(1);
  auto* count_total = count_cmd->add_subcommand("total", "Number of orbits on m x n matrices");
  count_total->add_option("--m", m)->required()->check(CLI::Range(0, 64));
  count_total->add_option("--n", n)->required()->check(CLI::Range(0, 64));
  count_total->add_option("--q", q)->required();
  auto* count_nil = count_cmd->add_subcommand("nilpotent", "f(m, n), the nilpotent orbit count");
  count_nil->add_option("--m", m)->required()->check(CLI::Range(0, 64));
  count_nil->add_option("--n", n)->required()->check(CLI::Range(0, 64));
  count_nil->add_option("--q", q, "Ignored; f does not depend on q");
  auto* count_kgl = count_cmd->add_subcommand("kgl", "Number of conjugacy classes of GL_n(q)");
  count_kgl->add_option("--n", n)->required()->check(CLI::Range(0, 64));
  count_kgl->add_option("--q", q)->required();
  auto* count_parts = count_cmd->add_subcommand("partitions", "Number of partitions of d");
  count_parts->add_option("--d", d)->required()->check(CLI::Range(0, 400));

  auto* adm_cmd = app.add_subcommand("admissible", "Admissibility of a pair of partitions");
  adm_cmd->require_subcommand(1);
  for (const char* name : {"star", "flanders", "transpose"}) {
    auto* sub = adm_cmd->add_subcommand(name);
    sub->add_option("--alpha", alpha_text, "Comma-separated, weakly decreasing")->required();
    sub->add_option("--beta", beta_text, "Comma-separated, weakly decreasing")->required();
  }

  auto* wit_cmd = app.add_subcommand("witness", "Explicit matrices realizing a pair or a class");
  wit_cmd->require_subcommand(1);
  for (const char* name : {"star", "flanders"}) {
    auto* sub = wit_cmd->add_subcommand(name);
    sub->add_option("--alpha", alpha_text)->required();
    sub->add_option("--beta", beta_text)->required();
    sub->add_option("--p", p, "Characteristic (field GF(p^{2e}))");
    sub->add_option("--e", e);
    sub->add_option("--seed", seed);
  }
  auto* wit_inv = wit_cmd->add_subcommand("invertible", "T with T*T similar to an invertible matrix over GF(q)");
  add_file(wit_inv);
  wit_inv->add_option("--seed", seed);

  auto* verify_cmd = app.add_subcommand("verify", "Brute-force checks against the literal orbits");
  verify_cmd->require_subcommand(1);
  for (const char* name : {"counts", "completeness"}) {
    auto* sub = verify_cmd->add_subcommand(name);
    sub->add_option("--m", m)->required()->check(CLI::Range(0, 8));
    sub->add_option("--n", n)->required()->check(CLI::Range(0, 8));
    sub->add_option("--q", q)->required();
  }

  auto* field_cmd = app.add_subcommand("field-info", "Pinned model of GF(q^2) for q = p^e");
  field_cmd->add_option("--p", p)->required();
  field_cmd->add_option("--e", e)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*invariant_cmd) {
      const Matrix a = matrix_from_json(read_document(file));
      emit(invariant_to_json(orbit_invariant(a), a.field()));
    } else if (*same_cmd) {
      const Json doc = read_document(file);
      if (!doc.is_object() || !doc.contains("a") || !doc.contains("b")) {
        throw ValidationError("missing field 'a' or 'b'");
      }
      const Matrix a = matrix_from_json(doc["a"]);
      const Matrix b = matrix_from_json(doc["b"]);
      if (!(*a.field_ptr() == *b.field_ptr()) || a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ValidationError("fields 'a' and 'b' must share p, e, m and n");
      }
      const auto ia = orbit_invariant(a), ib = orbit_invariant(b);
      emit({{"same_orbit", ia == ib},
            {"a", canonical_invariant_string(ia)},
            {"b", canonical_invariant_string(ib)}});
    } else if (*realize_cmd) {
      auto [inv, field] = invariant_from_json(read_document(file));
      emit(matrix_to_json(realize(inv, field, seed)));
    } else if (*jordan_cmd) {
      const Matrix a = matrix_from_json(read_document(file));
      if (!is_nilpotent(conj_transpose(a) * a)) throw ValidationError("A*A is not nilpotent");
      auto [alpha, beta] = jordan_pair(a);
      emit({{"alpha", partition_to_json(alpha)}, {"beta", partition_to_json(beta)}});
    } else if (*count_cmd) {
      if (*count_total) {
        emit({{"m", m}, {"n", n}, {"q", q}, {"count", total_orbits(m, n, q)}});
      } else if (*count_nil) {
        emit({{"m", m}, {"n", n}, {"count", f_nilpotent(m, n)}});
      } else if (*count_kgl) {
        emit({{"n", n}, {"q", q}, {"count", k_gl(n, q)}});
      } else {
        emit({{"d", d}, {"count", partition_count(d)}});
      }
    } else if (*adm_cmd) {
      const Partition alpha = parse_partition(alpha_text, "--alpha");
      const Partition beta = parse_partition(beta_text, "--beta");
      const std::string which = adm_cmd->get_subcommands().front()->get_name();
      bool ok = which == "star"       ? star_admissible(alpha, beta)
                : which == "flanders" ? flanders_admissible(alpha, beta)
                                      : transpose_admissible(alpha, beta);
      Json out{{"alpha", partition_to_json(alpha)}, {"beta", partition_to_json(beta)}, {"admissible", ok}};
      if (which == "transpose") out["necessary_only"] = true;
      emit(out);
    } else if (*wit_cmd) {
      const std::string which = wit_cmd->get_subcommands().front()->get_name();
      if (which == "invertible") {
        const Matrix b = matrix_from_json(read_document(file));
        emit(matrix_to_json(invertible_witness(b, seed)));
      } else {
        const Partition alpha = parse_partition(alpha_text, "--alpha");
        const Partition beta = parse_partition(beta_text, "--beta");
        const FieldPtr field = field_arg(p, e);
        if (which == "star") {
          if (!star_admissible(alpha, beta)) throw ValidationError("pair is not admissible for A A*");
          Json out = matrix_to_json(star_witness(alpha, beta, field, seed));
          Json labels = Json::array();
          for (const auto& l : star_labels(alpha, beta)) labels.push_back(label_to_json(l));
          out["labels"] = labels;
          emit(out);
        } else {
          if (!flanders_admissible(alpha, beta)) throw ValidationError("pair fails Flanders' condition");
          auto [a, b] = flanders_witness(alpha, beta, field);
          emit({{"a", matrix_to_json(a)}, {"b", matrix_to_json(b)}});
        }
      }
    } else if (*verify_cmd) {
      const std::string which = verify_cmd->get_subcommands().front()->get_name();
      if (which == "counts") {
        const CountReport r = verify_counts(m, n, q);
        emit(count_report_to_json(r));
        return r.pass ? kExitOk : kExitVerifyFailed;
      }
      const CompletenessReport r = verify_invariant_completeness(m, n, q);
      emit(completeness_report_to_json(r));
      return r.pass ? kExitOk : kExitVerifyFailed;
    } else if (*field_cmd) {
      const FieldPtr f = field_arg(p, e);
      emit({{"p", f->p()},
            {"e", f->e()},
            {"q", f->q()},
            {"order", f->order()},
            {"modulus", f->modulus()},
            {"generator", f->generator().code}});
    }
  } catch (const InvariantViolation& ex) {
    std::cerr << Json{{"error", ex.what()}, {"kind", "internal"}}.dump() << "\n";
    return kExitVerifyFailed;
  } catch (const std::exception& ex) {
    std::cerr << Json{{"error", ex.what()}}.dump() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}
