#include "grk/cli/app.hpp"

#include "grk/cli/catalog.hpp"
#include "grk/errors.hpp"
#include "grk/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

namespace grk::cli {

namespace {

constexpr std::int64_t kSampleBound = 2;
constexpr std::size_t kSampleCount = 6;
const Integer kCrossCheckOrder = 10'000;

std::string join(std::span<const Integer> xs) {
  if (xs.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].get_str();
  return out;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out;
}

Json optional_integer(const std::optional<Integer>& x) { return x ? integer_to_json(*x) : Json(nullptr); }

std::string index_text(const std::optional<Integer>& idx) { return idx ? idx->get_str() : "infinite"; }

GroupElement parse_element(const std::string& text) {
  GroupElement e;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer x;
    if (item.empty() || x.set_str(item, 10) != 0) throw ParseError("not an integer vector: \"" + text + "\"");
    e.coordinates.push_back(x);
  }
  if (e.coordinates.empty()) throw ParseError("empty element");
  return e;
}

std::vector<GroupElement> parse_elements(const std::vector<std::string>& texts) {
  std::vector<GroupElement> out;
  for (const auto& t : texts) {
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, ';'))
      if (!part.empty()) out.push_back(parse_element(part));
  }
  return out;
}

// Objects with every multiplicity <= bound, first coordinate fastest.
std::vector<Multiplicities> small_objects(std::size_t n, std::int64_t bound) {
  std::vector<Multiplicities> out;
  Multiplicities v(n, 0);
  for (;;) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && v[i] == bound) v[i++] = 0;
    if (i == n) return out;
    ++v[i];
  }
}

Json verification_json(const VerificationReport& r) {
  Json out;
  out["bound"] = r.bound;
  out["passed"] = r.passed();
  out["roundtrip_checked"] = r.roundtrip_checked;
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json j;
    j["subgroup"] = to_json(c.subgroup);
    j["members"] = c.members.size();
    j["ses_closure"] = c.ses_closure;
    j["sum_closure"] = c.sum_closure;
    j["density"] = c.density;
    j["f_of_g"] = c.f_of_g;
    j["g_of_f"] = c.g_of_f;
    j["maximal"] = c.maximal;
    j["failures"] = c.failures;
    classes.push_back(j);
  }
  out["classes"] = classes;
  out["injective"] = r.injective;
  out["failures"] = r.failures;
  return out;
}

void print_verification(std::ostream& out, const VerificationReport& r) {
  auto ok = [](bool b) { return b ? "ok" : "FAILED"; };
  out << "verification with multiplicities <= " << r.bound << ": " << (r.passed() ? "PASS" : "FAIL") << '\n';
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const auto& c = r.classes[i];
    out << "  [" << i + 1 << "] " << c.members.size() << " members; SES closure " << ok(c.ses_closure)
        << ", sum closure " << ok(c.sum_closure) << ", density " << ok(c.density);
    if (r.roundtrip_checked) out << ", f(g(H)) = H " << ok(c.f_of_g) << ", g(f(S)) = S " << ok(c.g_of_f);
    out << ", maximality " << ok(c.maximal) << '\n';
    for (const auto& f : c.failures) out << "      " << f << '\n';
  }
  if (r.roundtrip_checked) {
    out << "  injectivity " << ok(r.injective) << '\n';
  } else {
    out << "  round trip and injectivity need multiplicities up to " << r.roundtrip_threshold
        << "; not checked\n";
  }
  for (const auto& f : r.failures) out << "      " << f << '\n';
}

struct Context {
  std::ostream& out;
  bool json = false;
  void emit(const Json& j) const { out << j.dump(2) << '\n'; }
};

int cmd_snf(const Context& ctx, const std::string& file) {
  const IntMatrix a = matrix_from_json(read_json_file(file));
  const SmithForm f = snf(a);
  if (ctx.json) {
    Json j;
    j["invariant_factors"] = to_json(f.invariant_factors);
    j["rank"] = f.rank;
    j["S"] = to_json(f.S);
    j["U"] = to_json(f.U);
    j["V"] = to_json(f.V);
    ctx.emit(j);
    return kSuccess;
  }
  ctx.out << "matrix: " << a.rows() << " x " << a.cols() << '\n'
          << "invariant factors: " << join(f.invariant_factors) << '\n'
          << "rank: " << f.rank << '\n'
          << "S = " << to_string(f.S) << '\n'
          << "U = " << to_string(f.U) << '\n'
          << "V = " << to_string(f.V) << '\n';
  return kSuccess;
}

int cmd_group(const Context& ctx, const std::string& file, bool list_subgroups) {
  const GroupSpec spec = group_from_json(read_json_file(file));
  const GroupStructure s = spec.group.structure();
  std::optional<Subgroup> generated;
  if (!spec.generators.empty()) generated = subgroup_generated(spec.group, spec.generators);

  std::optional<std::vector<Subgroup>> subgroups;
  if (list_subgroups && s.is_finite()) subgroups = enumerate_subgroups(spec.group);

  if (ctx.json) {
    Json j;
    j["structure"] = to_json(s);
    j["finitely_many_subgroups"] = has_finitely_many_subgroups(spec.group);
    if (generated) {
      j["generated"] = to_json(*generated);
      j["generated_index"] = optional_integer(index(spec.group, *generated));
    }
    if (list_subgroups) {
      Json list = nullptr;
      if (subgroups) {
        list = Json::array();
        for (const auto& h : *subgroups) list.push_back(to_json(h));
      }
      j["subgroups"] = list;
    }
    ctx.emit(j);
    return kSuccess;
  }
  ctx.out << "group: " << to_string(s) << '\n'
          << "invariant factors: " << join(s.torsion) << '\n'
          << "free rank: " << s.free_rank << '\n'
          << "order: " << index_text(s.order()) << '\n'
          << "finitely many subgroups: " << (has_finitely_many_subgroups(spec.group) ? "yes" : "no") << '\n';
  if (generated) {
    ctx.out << "generated subgroup: " << to_string(generated->lattice()) << ", index "
            << index_text(index(spec.group, *generated)) << '\n';
  }
  if (list_subgroups) {
    if (!subgroups) {
      ctx.out << "subgroups: infinitely many\n";
    } else {
      ctx.out << subgroups->size() << " subgroups\n";
      for (std::size_t i = 0; i < subgroups->size(); ++i)
        ctx.out << "  [" << i + 1 << "] " << to_string((*subgroups)[i].lattice()) << ", index "
                << index_text(index(spec.group, (*subgroups)[i])) << '\n';
    }
  }
  return kSuccess;
}

int cmd_classify(const Context& ctx, const std::string& file, Variant variant, std::optional<std::int64_t> bound) {
  const ExactCatPresentation p = presentation_from_json(read_json_file(file));
  const K0Result k = k0(p);
  const Subgroup image = generator_image(p, k);
  const GroupStructure quotient_structure = quotient(k.group, image).structure();

  std::optional<std::vector<DenseClass>> classes;
  if (quotient_structure.is_finite()) classes = classify(p, variant);

  std::optional<VerificationReport> report;
  if (bound && classes) report = verify_bijection(p, *bound);

  std::vector<Multiplicities> samples;
  if (p.rank() <= 8) samples = small_objects(p.rank(), kSampleBound);

  auto sample_members = [&](const DenseClass& c) {
    std::vector<Multiplicities> out;
    for (const auto& v : samples) {
      if (out.size() == kSampleCount) break;
      if (g_membership(k, c, v)) out.push_back(v);
    }
    return out;
  };

  if (ctx.json) {
    Json j;
    j["indecomposables"] = p.indecomposables;
    j["k0"] = to_json(k.group.structure());
    j["generator_image"] = to_json(image);
    j["generator_image_index"] = optional_integer(index(k.group, image));
    j["quotient"] = to_json(quotient_structure);
    j["infinitely_many"] = !classes.has_value();
    j["count"] = classes ? Json(classes->size()) : Json(nullptr);
    Json list = Json::array();
    if (classes) {
      for (const auto& c : *classes) {
        Json e;
        e["subgroup"] = to_json(c.subgroup);
        e["index"] = optional_integer(index(k.group, c.subgroup));
        Json members = Json::array();
        for (const auto& v : sample_members(c)) members.push_back(describe_object(p, v));
        e["sample_members"] = members;
        list.push_back(e);
      }
    }
    j["classes"] = list;
    if (report) j["verification"] = verification_json(*report);
    ctx.emit(j);
  } else {
    ctx.out << "indecomposables: " << join(p.indecomposables) << '\n'
            << "K0: " << to_string(k.group.structure()) << '\n'
            << "generator image: " << to_string(image.lattice()) << ", index "
            << index_text(index(k.group, image)) << '\n'
            << "K0 / image(G): " << to_string(quotient_structure) << '\n';
    if (!classes) {
      ctx.out << "infinitely many dense resolving subcategories (K0 / image(G) has free rank "
              << quotient_structure.free_rank << ")\n";
    } else {
      ctx.out << classes->size() << " dense resolving subcategories\n"
              << "dense resolving and dense coresolving subcategories coincide; the list serves both\n";
      for (std::size_t i = 0; i < classes->size(); ++i) {
        const auto& c = (*classes)[i];
        ctx.out << "[" << i + 1 << "] H = " << to_string(c.subgroup.lattice()) << ", index "
                << index_text(index(k.group, c.subgroup)) << " in K0\n";
        if (samples.empty()) continue;
        std::vector<std::string> names;
        for (const auto& v : sample_members(c)) names.push_back(describe_object(p, v));
        ctx.out << "    members with multiplicities <= " << kSampleBound << ": " << join(names) << ", ...\n";
      }
    }
    if (report) print_verification(ctx.out, *report);
  }
  return report && !report->passed() ? kVerificationFailed : kSuccess;
}

int cmd_verify(const Context& ctx, const std::string& file, std::int64_t bound) {
  const ExactCatPresentation p = presentation_from_json(read_json_file(file));
  const bool generator_ok = verify_generator(p);
  const VerificationReport report = verify_bijection(p, bound);
  const bool passed = generator_ok && report.passed();
  if (ctx.json) {
    Json j;
    j["generator"] = generator_ok;
    j["verification"] = verification_json(report);
    j["passed"] = passed;
    ctx.emit(j);
  } else {
    ctx.out << "generator check with multiplicities <= " << *p.ses_complete_bound << ": "
            << (generator_ok ? "PASS" : "FAIL") << '\n';
    print_verification(ctx.out, report);
  }
  return passed ? kSuccess : kVerificationFailed;
}

int cmd_cartan(const Context& ctx, const std::string& file) {
  const QuiverAlgebra q = quiver_from_json(read_json_file(file));
  const CartanReport r = dense_resolving_count(q);
  const GroupStructure cok = r.cokernel.structure();
  std::optional<Integer> cross_check;
  if (cok.is_finite() && *cok.order() <= kCrossCheckOrder)
    cross_check = static_cast<unsigned long>(enumerate_subgroups(r.cokernel).size());
  const bool consistent = !cross_check || cross_check == r.count;

  if (ctx.json) {
    Json j;
    j["vertices"] = q.vertices;
    j["matrix"] = to_json(r.matrix);
    j["determinant"] = integer_to_json(r.determinant);
    j["invariant_factors"] = to_json(r.invariant_factors);
    j["cokernel"] = to_json(cok);
    j["count"] = optional_integer(r.count);
    j["infinite"] = !r.count.has_value();
    j["divisor_product"] = optional_integer(r.divisor_product);
    j["cross_check"] = optional_integer(cross_check);
    ctx.emit(j);
  } else {
    ctx.out << "vertices: " << join(q.vertices) << '\n'
            << "Cartan matrix: " << to_string(r.matrix) << '\n'
            << "determinant: " << r.determinant << '\n'
            << "invariant factors: " << join(r.invariant_factors) << '\n'
            << "cokernel: " << to_string(cok) << '\n';
    if (!r.count) {
      ctx.out << "dense resolving subcategories: INFINITE (determinant is 0)\n";
    } else {
      ctx.out << "dense resolving subcategories: " << *r.count << '\n'
              << "divisor formula d(m_1)...d(m_n): " << *r.divisor_product;
      if (*r.divisor_product != *r.count) ctx.out << " (counts only product subgroups; cokernel is not cyclic)";
      ctx.out << '\n';
    }
    if (cross_check) ctx.out << "cross-check by subgroup enumeration: " << *cross_check << '\n';
  }
  return consistent ? kSuccess : kVerificationFailed;
}

int cmd_singularity(const Context& ctx, const std::string& type, std::optional<long> n, bool all, long max_n) {
  std::vector<SingularityEntry> rows;
  if (all) {
    rows = singularity_table(max_n);
  } else {
    if (type.empty()) throw std::invalid_argument("singularity needs --type or --all");
    rows.push_back(singularity(type, n));
  }
  bool consistent = true;
  Json list = Json::array();
  for (const auto& e : rows) {
    const Integer count = recompute(e);
    const bool match = count == e.expected_count;
    consistent = consistent && match;
    if (ctx.json) {
      Json j;
      j["type"] = e.type_tag;
      j["n"] = e.parameter ? Json(*e.parameter) : Json(nullptr);
      j["k0"] = to_json(e.k0.structure());
      j["count"] = integer_to_json(count);
      j["expected"] = integer_to_json(e.expected_count);
      j["expected_text"] = e.expected_text;
      j["match"] = match;
      list.push_back(j);
    } else {
      ctx.out << e.label() << ": K0 = " << to_string(e.k0.structure()) << ", dense resolving subcategories "
              << count << " (expected " << e.expected_text;
      if (e.expected_text != e.expected_count.get_str()) ctx.out << " = " << e.expected_count;
      ctx.out << ")" << (match ? "" : " MISMATCH") << '\n';
    }
  }
  if (ctx.json) ctx.emit(list);
  return consistent ? kSuccess : kVerificationFailed;
}

int cmd_quotient_classify(const Context& ctx, const std::string& file, const std::vector<std::string>& designated) {
  const GroupSpec spec = group_from_json(read_json_file(file));
  std::vector<GroupElement> elements = parse_elements(designated);
  if (designated.empty()) elements = spec.generators;
  const Subgroup n = subgroup_generated(spec.group, elements);
  const GroupStructure q = quotient(spec.group, n).structure();

  std::optional<std::vector<Subgroup>> subgroups;
  if (q.is_finite()) subgroups = subgroups_containing(spec.group, n);

  if (ctx.json) {
    Json j;
    j["group"] = to_json(spec.group.structure());
    j["designated"] = to_json(n);
    j["quotient"] = to_json(q);
    j["infinitely_many"] = !subgroups.has_value();
    j["count"] = subgroups ? Json(subgroups->size()) : Json(nullptr);
    Json list = Json::array();
    if (subgroups)
      for (const auto& h : *subgroups) list.push_back(to_json(h));
    j["subgroups"] = list;
    ctx.emit(j);
    return kSuccess;
  }
  ctx.out << "group: " << to_string(spec.group.structure()) << '\n'
          << "designated subgroup: " << to_string(n.lattice()) << '\n'
          << "quotient: " << to_string(q) << '\n';
  if (!subgroups) {
    ctx.out << "infinitely many subgroups contain the designated elements (quotient has free rank "
            << q.free_rank << ")\n";
    return kSuccess;
  }
  ctx.out << subgroups->size() << " subgroups contain the designated elements\n";
  for (std::size_t i = 0; i < subgroups->size(); ++i)
    ctx.out << "  [" << i + 1 << "] " << to_string((*subgroups)[i].lattice()) << ", index "
            << index_text(index(spec.group, (*subgroups)[i])) << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grothendieck groups, dense resolving subcategories and Cartan matrices", "grk"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print machine-readable JSON");

  std::string file;
  auto add_file = [&file](CLI::App* sub, const char* what) {
    sub->add_option("file", file, what)->required()->check(CLI::ExistingFile);
  };

  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  add_file(snf_cmd, "JSON matrix");

  bool list_subgroups = false;
  auto* group_cmd = app.add_subcommand("group", "Structure of a finitely generated abelian group");
  add_file(group_cmd, "JSON group presentation");
  group_cmd->add_flag("--subgroups", list_subgroups, "List all subgroups of a finite group");

  std::string variant_name = "resolving";
  std::optional<std::int64_t> bound;
  auto* classify_cmd = app.add_subcommand("classify", "Dense G-resolving subcategories of a presented category");
  add_file(classify_cmd, "JSON exact category presentation");
  classify_cmd->add_option("--variant", variant_name, "resolving or coresolving")
      ->check(CLI::IsMember({"resolving", "coresolving"}));
  classify_cmd->add_option("--bound", bound, "Also verify the correspondence up to this multiplicity")
      ->check(CLI::NonNegativeNumber);

  std::int64_t verify_bound = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Bounded check of the generator and of the correspondence");
  add_file(verify_cmd, "JSON exact category presentation");
  verify_cmd->add_option("--bound", verify_bound, "Largest multiplicity to check")
      ->required()
      ->check(CLI::NonNegativeNumber);

  auto* cartan_cmd = app.add_subcommand("cartan", "Cartan matrix and dense resolving count of a monomial algebra");
  add_file(cartan_cmd, "JSON quiver with monomial relations");

  std::string type;
  std::optional<long> n;
  bool all = false;
  long max_n = 20;
  auto* sing_cmd = app.add_subcommand("singularity", "Simple surface singularities");
  auto* type_opt = sing_cmd->add_option("--type", type, "a_n, d_n, e6, e7 or e8");
  sing_cmd->add_option("--n", n, "Parameter n for a_n and d_n");
  auto* all_flag = sing_cmd->add_flag("--all", all, "Every type with n up to --max-n");
  sing_cmd->add_option("--max-n", max_n, "Largest n for --all")->check(CLI::PositiveNumber);
  type_opt->excludes(all_flag);

  std::vector<std::string> designated;
  auto* qc_cmd = app.add_subcommand("quotient-classify", "Subgroups containing designated elements");
  add_file(qc_cmd, "JSON group presentation");
  qc_cmd->add_option("--designated", designated,
                     "Element as comma-separated coordinates; repeat the flag or separate with ';'");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  const Context ctx{out, json};
  try {
    if (*snf_cmd) return cmd_snf(ctx, file);
    if (*group_cmd) return cmd_group(ctx, file, list_subgroups);
    if (*classify_cmd)
      return cmd_classify(ctx, file, variant_name == "coresolving" ? Variant::coresolving : Variant::resolving,
                          bound);
    if (*verify_cmd) return cmd_verify(ctx, file, verify_bound);
    if (*cartan_cmd) return cmd_cartan(ctx, file);
    if (*sing_cmd) return cmd_singularity(ctx, type, n, all, max_n);
    if (*qc_cmd) return cmd_quotient_classify(ctx, file, designated);
  } catch (const InfiniteDimensional& e) {
    if (json) {
      Json j;
      j["error"] = e.what();
      j["infinite_dimensional"] = true;
      j["cycle"] = e.cycle();
      ctx.emit(j);
    }
    err << "error: " << e.what() << '\n';
    return kInfiniteDimensional;
  } catch (const std::exception& e) {
    // Parse errors, malformed presentations, dimension mismatches, bounds.
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace grk::cli
