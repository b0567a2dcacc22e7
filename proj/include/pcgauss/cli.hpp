#pragma once

#include "pcgauss/collect.hpp"
#include "pcgauss/errors.hpp"
#include "pcgauss/igs.hpp"
#include "pcgauss/oracle.hpp"
#include "pcgauss/presentation.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace pcgauss::cli {

inline constexpr std::array<std::string_view, 8> commands{
    "collect", "igs",   "order",     "index",
    "member",  "equal", "canonical", "verify"};

struct Request {
  std::string command;
  std::string presentation_path;
  std::vector<std::string> words;         // before `--`
  std::vector<std::string> second_words;  // after `--` (member, equal)
  bool machine = false;
  std::size_t bound = oracle::default_bound;
};

enum ExitStatus : int { ok = 0, input_error = 1, oracle_mismatch = 2 };

namespace detail {

inline std::vector<Element> parse_elements(const Presentation& pres,
                                           const std::vector<std::string>& ws) {
  std::vector<Element> out;
  for (const auto& w : ws) out.push_back(collect(pres, parse_word(w, pres->size())));
  return out;
}

inline void print_igs(std::ostream& out, const Igs& igs, bool machine) {
  if (igs.empty() && !machine) {
    out << "trivial subgroup\n";
    return;
  }
  for (const auto& u : igs) {
    auto s = stats(u);
    if (machine) {
      out << s.depth + 1 << ' ' << *s.leading_exponent << ' '
          << *s.relative_order << ' ' << u << '\n';
    } else {
      out << u << "  (depth " << s.depth + 1 << ", lead "
          << *s.leading_exponent << ", relorder " << *s.relative_order
          << ")\n";
    }
  }
}

class Report {
 public:
  Report(std::ostream& out, bool machine) : out_(out), machine_(machine) {}
  void check(bool passed, const std::string& what) {
    all_ = all_ && passed;
    if (!machine_) out_ << (passed ? "PASS " : "FAIL ") << what << '\n';
  }
  void note(const std::string& what) {
    if (!machine_) out_ << "note " << what << '\n';
  }
  int finish() {
    out_ << (all_ ? "PASS" : "FAIL") << '\n';
    return all_ ? ok : oracle_mismatch;
  }

 private:
  std::ostream& out_;
  bool machine_;
  bool all_ = true;
};

inline int verify(const Request& req, const Presentation& pres,
                  const std::vector<Element>& gens, std::ostream& out) {
  Report rep(out, req.machine);
  const Igs igs = igs_by_generators(pres, gens);
  const Igs canon = canonical_igs(igs);
  rep.check(validate_inverse_tails(pres).empty(),
            "inverse-conjugate tails consistent");
  rep.check(verify_igs(igs), "igs closure conditions");
  rep.check(verify_igs(canon), "canonical igs closure conditions");
  rep.check(canonical_igs(canon) == canon, "canonical igs idempotent");
  bool sifted = true;
  for (const auto& g : gens) sifted = sifted && sift(igs, g).member;
  rep.check(sifted, "input generators sift into the igs");

  const Cardinal order = subgroup_order(igs);
  const Cardinal index = subgroup_index(igs);
  if (pres->is_finite()) {
    if (pres->group_order().value() > req.bound) {
      rep.note("group order exceeds --bound; enumeration skipped");
      return rep.finish();
    }
    oracle::FiniteGroupTable table(pres, req.bound);
    const oracle::ElementSet expected =
        oracle::enumerate_subgroup(pres, gens, req.bound);
    bool membership = true;
    for (const auto& g : table.elements())
      membership = membership && (sift(igs, g).member ==
                                  (expected.count(g.exponents()) == 1));
    rep.check(membership, "sift membership matches enumeration");
    rep.check(order == Cardinal::finite(expected.size()),
              "order " + order.to_string() + " matches enumeration");
    rep.check(order * index == pres->group_order(),
              "order * index = |G|");
  } else if (pres->is_free_abelian()) {
    oracle::Matrix rows;
    for (const auto& g : gens) rows.push_back(g.exponents());
    const auto hnf = oracle::hermite_normal_form(rows);
    oracle::Matrix got;
    for (const auto& u : canon) got.push_back(u.exponents());
    rep.check(got == hnf.rows, "canonical igs equals Hermite normal form");
    rep.check(index == oracle::lattice_index(hnf, pres->size()),
              "index " + index.to_string() + " matches pivot product");
  } else {
    rep.note("infinite non-abelian group; no oracle comparison");
  }
  return rep.finish();
}

inline int dispatch(const Request& req, std::ostream& out) {
  const Presentation pres = load_presentation_file(req.presentation_path);
  const auto first = parse_elements(pres, req.words);
  const auto second = parse_elements(pres, req.second_words);
  const std::string& cmd = req.command;

  if (cmd == "collect") {
    if (first.empty()) throw PreconditionError("collect needs a word");
    for (const auto& e : first) out << e << '\n';
    return ok;
  }
  if (cmd == "member") {
    if (first.size() != 1)
      throw PreconditionError("member needs: <word> -- <generators...>");
    out << (sift(igs_by_generators(pres, second), first[0]).member ? "true"
                                                                   : "false")
        << '\n';
    return ok;
  }
  if (cmd == "equal") {
    out << (subgroups_equal(pres, first, second) ? "true" : "false") << '\n';
    return ok;
  }
  if (!req.second_words.empty())
    throw PreconditionError(cmd + " takes a single generator list");
  if (cmd == "verify") return verify(req, pres, first, out);

  const Igs igs = igs_by_generators(pres, first);
  if (cmd == "igs") {
    print_igs(out, igs, req.machine);
  } else if (cmd == "canonical") {
    print_igs(out, canonical_igs(igs), req.machine);
  } else if (cmd == "order") {
    out << subgroup_order(igs) << '\n';
  } else if (cmd == "index") {
    out << subgroup_index(igs) << '\n';
  } else {
    throw PreconditionError("unknown command '" + cmd + "'");
  }
  return ok;
}

}  // namespace detail

/// Executes one request. Exit status 1 on input errors, 2 when `verify`
/// finds a mismatch against the oracle.
inline int run(const Request& req, std::ostream& out, std::ostream& err) {
  try {
    return detail::dispatch(req, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
}

/// Splits raw arguments at the first `--` into the two word lists.
inline std::pair<std::vector<std::string>, std::vector<std::string>>
split_lists(const std::vector<std::string>& args) {
  auto sep = std::find(args.begin(), args.end(), "--");
  std::vector<std::string> a(args.begin(), sep);
  std::vector<std::string> b;
  if (sep != args.end()) b.assign(sep + 1, args.end());
  return {std::move(a), std::move(b)};
}

}  // namespace pcgauss::cli
