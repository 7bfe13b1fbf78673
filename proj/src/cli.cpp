#include "linfty/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "linfty/checker.hpp"
#include "linfty/document.hpp"

namespace linfty {

namespace {

Document load_document(const std::string& ref) {
  if (auto builtin = builtin_document(ref)) return *builtin;
  std::ifstream file(ref);
  if (!file) throw ValidationError("no builtin or readable file named '" + ref + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_document(buffer.str());
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw ValidationError("cannot open '" + path + "' for writing");
  file << text;
}

std::string tuple_str(const HomotopyAlgebra& a, const std::vector<int>& tuple) {
  std::string s = "(";
  for (size_t p = 0; p < tuple.size(); ++p) s += (p ? " " : "") + a.basis.label(tuple[p]);
  return s + ")";
}

int run_check(const std::string& ref, int max_n, const std::string& type_override, bool json,
              int max_witnesses, std::ostream& out) {
  Document doc = load_document(ref);
  HomotopyAlgebra algebra = algebra_from_doc(doc);
  if (!type_override.empty()) {
    if (type_override != "linfty" && type_override != "ainfty")
      throw ValidationError("--type must be linfty or ainfty");
    if (type_override != algebra_kind_name(algebra.brackets.kind))
      throw ValidationError("document is of type " + algebra_kind_name(algebra.brackets.kind) +
                            ", not " + type_override);
  }
  if (max_n == 0) max_n = sufficient_max_n(algebra);
  auto reports = algebra.brackets.kind == AlgebraKind::linfty ? check_linfty(algebra, max_n)
                                                              : check_ainfty(algebra, max_n);
  bool ok = all_passed(reports);
  if (json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      nlohmann::ordered_json item;
      item["type"] = algebra_kind_name(r.kind);
      item["n"] = r.n;
      item["status"] = r.passed() ? "pass" : "fail";
      auto witnesses = nlohmann::ordered_json::array();
      auto residuals = nlohmann::ordered_json::array();
      int shown = 0;
      for (const auto& v : r.violations) {
        if (shown++ >= max_witnesses) break;
        auto labels = nlohmann::ordered_json::array();
        for (int idx : v.tuple) labels.push_back(algebra.basis.label(idx));
        witnesses.push_back(labels);
        residuals.push_back(v.residual.str(algebra.basis));
      }
      item["witnesses"] = witnesses;
      item["residuals"] = residuals;
      arr.push_back(item);
    }
    out << arr.dump(2) << "\n";
  } else {
    out << "checking " << ref << ": type=" << algebra_kind_name(algebra.brackets.kind)
        << " dim=" << algebra.basis.size() << " max-n=" << max_n << "\n";
    for (const auto& r : reports) {
      if (r.passed()) {
        out << "n=" << r.n << ": pass\n";
      } else {
        out << "n=" << r.n << ": FAIL (" << r.violations.size() << " violation"
            << (r.violations.size() == 1 ? "" : "s") << ")\n";
        int shown = 0;
        for (const auto& v : r.violations) {
          if (shown++ >= max_witnesses) break;
          out << "  " << tuple_str(algebra, v.tuple) << " -> " << v.residual.str(algebra.basis)
              << "\n";
        }
      }
    }
    out << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

// Input for the extension/contraction commands: a bracket algebra given as
// initial data, i.e. a degree-0 basis with a single 2-bracket (or none).
std::pair<HomotopyAlgebra, MultiBracket> load_initial_bracket(const std::string& ref) {
  HomotopyAlgebra algebra = algebra_from_doc(load_document(ref));
  if (algebra.brackets.kind != AlgebraKind::linfty)
    throw ValidationError("initial data must be an linfty document");
  for (const auto& [arity, op] : algebra.brackets.ops) {
    if (arity != 2)
      throw ValidationError("initial data may only carry a 2-bracket (found l" +
                            std::to_string(arity) + ")");
  }
  const MultiBracket* b = algebra.brackets.bracket(2);
  MultiBracket bracket = b ? *b : MultiBracket(algebra.basis, 2, true);
  return {std::move(algebra), std::move(bracket)};
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact construction and verification of finite-dimensional "
               "L-infinity and A-infinity algebras"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "run the generalized Jacobi / fundamental identities");
  std::string check_ref, check_type;
  int check_max_n = 0, check_witnesses = 5;
  bool check_json = false;
  check->add_option("input", check_ref, "algebra file or builtin name")->required();
  check->add_option("--max-n", check_max_n, "highest relation order (default: 2*max_arity-1)");
  check->add_option("--type", check_type, "expected family: linfty or ainfty");
  check->add_flag("--json", check_json, "machine-readable report");
  check->add_option("--max-witnesses", check_witnesses, "witness tuples shown per relation");

  // jacobiator
  auto* jac = app.add_subcommand("jacobiator", "evaluate Jac(a, b, c) on basis labels");
  std::string jac_ref, jac_a, jac_b, jac_c;
  jac->add_option("input", jac_ref)->required();
  jac->add_option("a", jac_a)->required();
  jac->add_option("b", jac_b)->required();
  jac->add_option("c", jac_c)->required();

  // extend1
  auto* ext1 = app.add_subcommand("extend1", "double an antisymmetric bracket to a 2-term algebra");
  std::string ext1_ref, ext1_out = "-";
  ext1->add_option("input", ext1_ref)->required();
  ext1->add_option("-o,--output", ext1_out, "output file ('-' for stdout)");

  // extend2
  auto* ext2 = app.add_subcommand("extend2", "build the 3-term extension along a map D: U -> V");
  std::string ext2_ref, ext2_map, ext2_f, ext2_action, ext2_out = "-";
  ext2->add_option("input", ext2_ref)->required();
  ext2->add_option("--map", ext2_map, "dmap document for D")->required();
  ext2->add_option("--f", ext2_f, "fmap document overriding the section f");
  ext2->add_option("--action", ext2_action, "actionmap document overriding v(alpha)");
  ext2->add_option("-o,--output", ext2_out, "output file ('-' for stdout)");

  // contract
  auto* ctr = app.add_subcommand("contract", "scaling limit mu -> 0 under a weights table");
  std::string ctr_ref, ctr_weights, ctr_out = "-";
  ctr->add_option("input", ctr_ref)->required();
  ctr->add_option("--weights", ctr_weights, "weights document or builtin")->required();
  ctr->add_option("-o,--output", ctr_out, "output file ('-' for stdout)");

  // ainfty-double
  auto* adbl = app.add_subcommand("ainfty-double", "A-infinity doubling of a star product");
  std::string adbl_ref, adbl_out = "-";
  adbl->add_option("input", adbl_ref)->required();
  adbl->add_option("-o,--output", adbl_out, "output file ('-' for stdout)");

  // builtin
  auto* bi = app.add_subcommand("builtin", "list or export built-in fixtures");
  bool bi_list = false;
  std::string bi_dump, bi_out = "-";
  bi->add_flag("--list", bi_list, "print the builtin names");
  bi->add_option("--dump", bi_dump, "serialize one builtin");
  bi->add_option("-o,--output", bi_out, "output file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed())
      return run_check(check_ref, check_max_n, check_type, check_json, check_witnesses, out);

    if (jac->parsed()) {
      HomotopyAlgebra algebra = algebra_from_doc(load_document(jac_ref));
      if (algebra.brackets.kind != AlgebraKind::linfty)
        throw ValidationError("jacobiator needs an linfty document");
      const MultiBracket* l2 = algebra.brackets.bracket(2);
      if (!l2) throw ValidationError("document has no 2-bracket");
      Vec result = jacobiator(*l2, Vec::unit(algebra.basis.require(jac_a)),
                              Vec::unit(algebra.basis.require(jac_b)),
                              Vec::unit(algebra.basis.require(jac_c)));
      out << result.str(algebra.basis) << "\n";
      return 0;
    }

    if (ext1->parsed()) {
      auto [algebra, bracket] = load_initial_bracket(ext1_ref);
      HomotopyAlgebra doubled = two_term_extension(algebra.ring, algebra.basis, bracket);
      write_output(serialize(doc_from_algebra(doubled)), ext1_out, out);
      return 0;
    }

    if (ext2->parsed()) {
      auto [algebra, bracket] = load_initial_bracket(ext2_ref);
      LinearMap D = linear_map_from_doc(load_document(ext2_map), algebra.basis);
      FOverrides f_over;
      ActionOverrides action_over;
      if (!ext2_f.empty())
        f_over = f_overrides_from_doc(load_document(ext2_f), algebra.basis, D.source);
      if (!ext2_action.empty())
        action_over =
            action_overrides_from_doc(load_document(ext2_action), algebra.basis, D.source);
      ThreeTermData data =
          prepare_three_term(algebra.ring, algebra.basis, bracket, std::move(D), f_over,
                             action_over);
      write_output(serialize(doc_from_algebra(three_term_extension(data))), ext2_out, out);
      return 0;
    }

    if (ctr->parsed()) {
      HomotopyAlgebra algebra = algebra_from_doc(load_document(ctr_ref));
      ScalingWeights weights = weights_from_doc(load_document(ctr_weights));
      write_output(serialize(doc_from_algebra(contract(algebra, weights))), ctr_out, out);
      return 0;
    }

    if (adbl->parsed()) {
      StarProduct p = star_from_doc(load_document(adbl_ref));
      write_output(serialize(doc_from_algebra(ainfty_double(p))), adbl_out, out);
      return 0;
    }

    if (bi->parsed()) {
      if (bi_list == !bi_dump.empty())
        throw ValidationError("builtin needs exactly one of --list or --dump <name>");
      if (bi_list) {
        for (const auto& name : builtin_names()) out << name << "\n";
        return 0;
      }
      auto doc = builtin_document(bi_dump);
      if (!doc) throw ValidationError("no builtin named '" + bi_dump + "'");
      write_output(serialize(*doc), bi_out, out);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace linfty
