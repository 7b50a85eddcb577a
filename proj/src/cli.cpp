// Copyright 2026 The skewlat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skewlat/cli.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>

#include "skewlat/census.hpp"
#include "skewlat/completeness.hpp"
#include "skewlat/errors.hpp"
#include "skewlat/format.hpp"
#include "skewlat/frames.hpp"
#include "skewlat/models.hpp"

namespace skewlat::cli {

namespace {

// Exit code for errors detected after argument parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string join_labels(const FiniteSkewLattice& s, const std::vector<ElementId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ", ";
    out += ids[i] < s.order() ? s.label(ids[i]) : std::to_string(ids[i]);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FiniteSkewLattice load(const std::string& path) {
  try {
    return parse_structure(read_file(path)).to_lattice();
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

FiniteSkewLattice load_validated(const std::string& path) {
  FiniteSkewLattice s = load(path);
  const Certificate c = validate_skew_axioms(s);
  if (!c) throw UsageError(path + ": not a skew lattice: " + describe(c, s));
  return validated(std::move(s));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

std::size_t to_size(const std::string& text, const char* what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(std::string("invalid ") + what + " '" + text + "'");
  }
  return v;
}

// Accepts element ids or labels.
ElementId resolve_element(const FiniteSkewLattice& s, const std::string& token) {
  for (ElementId a = 0; a < s.order(); ++a) {
    if (!s.labels().empty() && s.labels()[a] == token) return a;
  }
  const std::size_t v = to_size(token, "element");
  if (v >= s.order()) throw UsageError("element " + token + " out of range");
  return static_cast<ElementId>(v);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_analysis(std::ostream& out, const Certificate& c) {
  if (const auto* a = std::get_if<CaseAnalysis>(&c.witness)) {
    for (const CaseCheck& check : a->checks) out << (check.holds ? "  [ok]   " : "  [FAIL] ") << check.claim << "\n";
  }
}

int cmd_check(const std::string& path, std::ostream& out) {
  const FiniteSkewLattice s = load(path);
  const Certificate c = validate_skew_axioms(s);
  if (c) {
    out << "valid skew lattice of order " << s.order() << "\n";
    return kExitTrue;
  }
  out << "not a skew lattice: " << describe(c, s) << "\n";
  return kExitFalse;
}

int cmd_classify(const std::string& path, std::ostream& out) {
  const FiniteSkewLattice s = load_validated(path);
  auto id = [&](Identity i) { return check_identity(s, i).verdict; };
  const bool normal = id(Identity::kNormal);
  const bool symmetric = check_symmetric(s).verdict;
  out << "order: " << s.order() << "\n";
  out << "regular: " << yes_no(id(Identity::kRegular)) << "\n";
  out << "normal: " << yes_no(normal) << "\n";
  out << "symmetric: " << yes_no(symmetric) << "\n";
  out << "distributive: " << yes_no(id(Identity::kDistributive)) << "\n";
  out << "strongly-distributive: " << yes_no(id(Identity::kStronglyDistributive)) << "\n";
  out << "left-handed: " << yes_no(id(Identity::kLeftHanded)) << "\n";
  out << "right-handed: " << yes_no(id(Identity::kRightHanded)) << "\n";
  out << "commutative: " << yes_no(is_commutative(s)) << "\n";
  const auto zero = effective_zero(s);
  out << "zero: " << (zero ? s.label(*zero) : std::string("none")) << "\n";
  out << "D-classes: " << green_D(s).size() << "\n";
  const bool applicable = normal && symmetric && s.order() <= kMaxEnumerationOrder;
  auto prop = [&](const char* name, Certificate (*check)(const FiniteSkewLattice&)) {
    out << name << ": " << (applicable ? yes_no(check(s).verdict) : "n/a") << "\n";
  };
  prop("JC", check_JC);
  prop("BA", check_BA);
  prop("EX", check_EX);
  prop("LS", check_LS);
  return kExitTrue;
}

int cmd_quotient(const std::string& path, const std::string& output, std::ostream& out) {
  const FiniteSkewLattice s = load_validated(path);
  const QuotientLattice q = quotient(s);
  std::vector<std::string> labels;
  const DPartition d = green_D(s);
  for (const auto& members : d.classes) labels.push_back("[" + join_labels(s, members) + "]");
  const std::string text = emit_structure(q.lattice.with_labels(labels));
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + output + "'");
    file << text;
  }
  return kExitTrue;
}

int cmd_sup(const std::string& path, const std::string& elements, std::ostream& out) {
  const FiniteSkewLattice s = load_validated(path);
  std::vector<ElementId> c;
  for (const std::string& tok : split(elements, ',')) c.push_back(resolve_element(s, tok));
  if (c.empty()) throw UsageError("--elements must name at least one element");
  const auto sup = sup_natural(s, c);
  const auto inf = inf_natural(s, c);
  out << "subset: {" << join_labels(s, c) << "}\n";
  out << "commuting: " << yes_no(is_commuting(s, c)) << "\n";
  out << "sup: " << (sup ? s.label(*sup) : std::string("none")) << "\n";
  out << "inf: " << (inf ? s.label(*inf) : std::string("none")) << "\n";
  return sup ? kExitTrue : kExitFalse;
}

int cmd_sections(const std::string& path, std::ostream& out) {
  const FiniteSkewLattice s = load_validated(path);
  require_normal_symmetric(s);
  const auto sections = lattice_sections(s);
  out << sections.size() << " lattice section(s)\n";
  for (const LatticeSection& sec : sections) out << "{" << join_labels(s, sec.members) << "}\n";
  return sections.empty() ? kExitFalse : kExitTrue;
}

int cmd_census(std::size_t order, const std::string& filter_text, bool count_only, unsigned workers,
               std::ostream& out) {
  const CensusFilter filter = CensusFilter::parse(filter_text);
  CensusOptions options;
  options.workers = workers;
  const auto found = enumerate(order, filter, options);
  out << found.size() << " structure(s) of order " << order << "\n";
  if (count_only) return kExitTrue;
  for (std::size_t i = 0; i < found.size(); ++i) {
    out << "\n# structure " << i + 1 << "\n" << emit_structure(found[i]);
  }
  return kExitTrue;
}

int cmd_paper_pfn(const std::string& sizes, bool verify, std::ostream& out) {
  std::size_t m = 2, b = 2;
  if (!sizes.empty()) {
    const auto parts = split(sizes, ',');
    if (parts.size() != 2) throw UsageError("--sizes expects A,B");
    m = to_size(parts[0], "size");
    b = to_size(parts[1], "size");
  }
  const FiniteSkewLattice s = build_pfn_algebra(m, b);
  if (!verify) {
    out << emit_structure(s);
    return kExitTrue;
  }
  out << "partial functions from a " << m << "-set to a " << b << "-set, order " << s.order() << "\n";
  const Certificate c = verify_pfn_algebra(s, m, b);
  print_analysis(out, c);
  out << (c ? "verified" : "FAILED") << "\n";
  return c ? kExitTrue : kExitFalse;
}

int cmd_paper_omega(std::size_t window, bool verify, std::ostream& out) {
  if (!verify) {
    out << emit_structure(om_window(window));
    return kExitTrue;
  }
  const Certificate no_join = om_verify_no_join_of_naturals(window);
  const Certificate no_inf = om_verify_no_infimum_of_infs(window);
  auto count = [](const Certificate& c) {
    const auto& a = std::get<CaseAnalysis>(c.witness);
    return std::to_string(a.checks.size() - a.failures()) + "/" + std::to_string(a.checks.size());
  };
  out << "naturals have no join (window " << window << "): " << (no_join ? "verified" : "FAILED") << ", "
      << count(no_join) << " checks hold\n";
  if (!no_join) out << "  " << describe(no_join, om_window(0)) << "\n";
  out << "{inf_a, inf_b} has no infimum (window " << window << "): " << (no_inf ? "verified" : "FAILED") << ", "
      << count(no_inf) << " checks hold\n";
  if (!no_inf) out << "  " << describe(no_inf, om_window(0)) << "\n";
  return no_join && no_inf ? kExitTrue : kExitFalse;
}

int cmd_paper_finimg(std::size_t window, bool verify, std::ostream& out) {
  if (!verify) throw UsageError("paper finimg has no finite carrier to emit; use --verify");
  const auto chain = fi_one_point_chain(window);
  bool increasing = true;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    out << "step " << chain[i].first << ": image size " << chain[i].second << "\n";
    if (i > 0 && chain[i].second <= chain[i - 1].second) increasing = false;
  }
  out << "image sizes strictly increasing over " << chain.size() << " step(s): " << (increasing ? "verified" : "FAILED")
      << "\n";
  return increasing ? kExitTrue : kExitFalse;
}

int cmd_theorem(const std::string& path, std::ostream& out) {
  const FiniteSkewLattice s = load_validated(path);
  const Certificate c = check_theorem_ncframes(s);
  print_analysis(out, c);
  out << (c ? "both sides agree" : "the two sides disagree") << "\n";
  return c ? kExitTrue : kExitFalse;
}

}  // namespace

std::string describe(const Certificate& c, const FiniteSkewLattice& s) {
  std::string text = std::visit(
      [&](const auto& w) -> std::string {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, Violation>) {
          std::string t = w.law + " fails at (" + join_labels(s, w.tuple) + ")";
          if (!w.subset.empty()) t += " with subset {" + join_labels(s, w.subset) + "}";
          return t;
        } else if constexpr (std::is_same_v<W, ElementWitness>) {
          return "element " + join_labels(s, {w.element});
        } else if constexpr (std::is_same_v<W, SectionWitness>) {
          return "section {" + join_labels(s, w.members) + "}";
        } else if constexpr (std::is_same_v<W, SubsetWitness>) {
          return w.reason + ": {" + join_labels(s, w.members) + "}";
        } else if constexpr (std::is_same_v<W, CaseAnalysis>) {
          std::string t = std::to_string(w.checks.size()) + " checks, " + std::to_string(w.failures()) + " failed";
          for (const CaseCheck& check : w.checks) {
            if (!check.holds) return t + "; first failure: " + check.claim;
          }
          return t;
        } else {
          return {};
        }
      },
      c.witness);
  if (!c.note.empty()) text = text.empty() ? c.note : text + " (" + c.note + ")";
  return text;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite skew lattice checker"};
  app.name("skewlat");
  app.require_subcommand(1);

  std::string file, output, elements, filter, sizes;
  std::size_t order = 0, window = 10;
  unsigned workers = 0;
  bool count_only = false, verify = false;

  auto* check = app.add_subcommand("check", "Validate the skew lattice axioms");
  check->add_option("FILE", file)->required();
  auto* classify = app.add_subcommand("classify", "Print the predicate table");
  classify->add_option("FILE", file)->required();
  auto* quot = app.add_subcommand("quotient", "Emit the quotient by the D-relation");
  quot->add_option("FILE", file)->required();
  quot->add_option("-o,--output", output, "Write to this file instead of standard output");
  auto* sup = app.add_subcommand("sup", "Supremum and infimum of a subset in the natural order");
  sup->add_option("FILE", file)->required();
  sup->add_option("--elements", elements, "Comma-separated element ids or labels")->required();
  auto* sections = app.add_subcommand("sections", "List the lattice sections");
  sections->add_option("FILE", file)->required();
  auto* census = app.add_subcommand("census", "Enumerate skew lattices up to isomorphism");
  census->add_option("--order", order)->required();
  census->add_option("--filter", filter, "Flags such as zero,left_handed,!commutative");
  census->add_flag("--count-only", count_only);
  census->add_option("--workers", workers, "Worker threads (0 = all cores)");
  auto* paper = app.add_subcommand("paper", "Build or verify a named model");
  std::string model;
  paper->add_option("MODEL", model)->required()->check(CLI::IsMember({"pfn", "omega", "finimg"}));
  paper->add_option("--window", window, "Truncation window");
  paper->add_option("--sizes", sizes, "Domain and codomain sizes A,B");
  paper->add_flag("--verify", verify);
  auto* theorem = app.add_subcommand("theorem", "Compare the noncommutative frame test with the frame test on S/D");
  theorem->add_option("FILE", file)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitTrue : kExitUsage;
  }

  try {
    if (*check) return cmd_check(file, out);
    if (*classify) return cmd_classify(file, out);
    if (*quot) return cmd_quotient(file, output, out);
    if (*sup) return cmd_sup(file, elements, out);
    if (*sections) return cmd_sections(file, out);
    if (*census) return cmd_census(order, filter, count_only, workers, out);
    if (*theorem) return cmd_theorem(file, out);
    if (model == "pfn") return cmd_paper_pfn(sizes, verify, out);
    if (model == "omega") return cmd_paper_omega(window, verify, out);
    return cmd_paper_finimg(window, verify, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace skewlat::cli
