#include "grk/excat.hpp"

#include "grk/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grk {

namespace {

constexpr std::size_t kMaxBoxSize = 4'000'000;

// The box [0, bound]^n of objects, indexed in mixed radix with the first
// coordinate varying fastest.
class ObjectBox {
 public:
  ObjectBox(std::size_t n, std::int64_t bound) : n_(n), side_(static_cast<std::size_t>(bound) + 1) {
    size_ = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      if (size_ > kMaxBoxSize / side_) {
        throw BoundExceeded("object box [0," + std::to_string(bound) + "]^" + std::to_string(n) +
                            " is too large to scan");
      }
      size_ *= side_;
    }
  }

  std::size_t size() const noexcept { return size_; }

  Multiplicities at(std::size_t index) const {
    Multiplicities v(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      v[i] = static_cast<std::int64_t>(index % side_);
      index /= side_;
    }
    return v;
  }

  /// Index of v, or size() when v falls outside the box.
  std::size_t index_of(std::span<const std::int64_t> v) const {
    std::size_t idx = 0;
    for (std::size_t i = n_; i-- > 0;) {
      if (v[i] < 0 || static_cast<std::size_t>(v[i]) >= side_) return size_;
      idx = idx * side_ + static_cast<std::size_t>(v[i]);
    }
    return idx;
  }

 private:
  std::size_t n_;
  std::size_t side_;
  std::size_t size_;
};

Multiplicities add(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  Multiplicities out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool dominates(std::span<const std::int64_t> u, std::span<const std::int64_t> v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] < v[i]) return false;
  return true;
}

bool is_zero_object(std::span<const std::int64_t> v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

// Every object of the box reachable from 0 by adding the given summands
// without leaving the box.
std::vector<char> additive_closure(const ObjectBox& box, const std::vector<Multiplicities>& summands) {
  std::vector<char> reached(box.size(), 0);
  std::vector<std::size_t> stack;
  const std::size_t origin = 0;
  reached[origin] = 1;
  stack.push_back(origin);
  while (!stack.empty()) {
    auto v = box.at(stack.back());
    stack.pop_back();
    for (const auto& s : summands) {
      if (is_zero_object(s)) continue;
      std::size_t w = box.index_of(add(v, s));
      if (w == box.size() || reached[w]) continue;
      reached[w] = 1;
      stack.push_back(w);
    }
  }
  return reached;
}

void require_complete(const ExactCatPresentation& p, std::int64_t bound) {
  if (!p.ses_complete_bound) {
    throw IncompleteSes("presentation does not assert a completeness bound for its SES list");
  }
  if (*p.ses_complete_bound < bound) {
    throw IncompleteSes("SES list is complete only up to multiplicity " +
                        std::to_string(*p.ses_complete_bound) + ", requested bound " +
                        std::to_string(bound));
  }
}

std::string object_text(const ExactCatPresentation& p, std::span<const std::int64_t> v) {
  return describe_object(p, v);
}

}  // namespace

void ExactCatPresentation::validate() const {
  const std::size_t n = rank();
  std::set<std::string> names;
  for (const auto& name : indecomposables) {
    if (name.empty()) throw MalformedInput("indecomposable with an empty name");
    if (!names.insert(name).second) throw MalformedInput("duplicate indecomposable '" + name + "'");
  }
  auto check = [n](const Multiplicities& v, const std::string& where) {
    if (v.size() != n) {
      throw MalformedInput(where + ": expected " + std::to_string(n) + " multiplicities, got " +
                           std::to_string(v.size()));
    }
    for (auto x : v)
      if (x < 0) throw MalformedInput(where + ": negative multiplicity " + std::to_string(x));
  };
  for (std::size_t i = 0; i < ses.size(); ++i) {
    const std::string where = "ses[" + std::to_string(i) + "]";
    check(ses[i].sub, where + ".sub");
    check(ses[i].mid, where + ".mid");
    check(ses[i].ext, where + ".ext");
  }
  for (std::size_t i = 0; i < generators.size(); ++i)
    check(generators[i], "generators[" + std::to_string(i) + "]");
  if (ses_complete_bound && *ses_complete_bound < 0)
    throw MalformedInput("ses_complete_bound must be nonnegative");
}

void append_split_sequences(ExactCatPresentation& p, std::int64_t bound) {
  if (bound < 0) throw MalformedInput("split-sequence bound must be nonnegative");
  const std::size_t n = p.rank();
  // Per coordinate, every pair (a_i, c_i) with a_i + c_i <= bound.
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t a = 0; a <= bound; ++a)
    for (std::int64_t c = 0; a + c <= bound; ++c) pairs.emplace_back(a, c);
  std::vector<std::size_t> digit(n, 0);
  for (;;) {
    ShortExactSequence s{Multiplicities(n), Multiplicities(n), Multiplicities(n)};
    for (std::size_t i = 0; i < n; ++i) {
      s.sub[i] = pairs[digit[i]].first;
      s.ext[i] = pairs[digit[i]].second;
      s.mid[i] = s.sub[i] + s.ext[i];
    }
    p.ses.push_back(std::move(s));
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++digit[i] < pairs.size()) break;
      digit[i] = 0;
    }
    if (i == n) break;
  }
}

std::string describe_object(const ExactCatPresentation& p, std::span<const std::int64_t> object) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < object.size(); ++i) {
    if (object[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << (i < p.indecomposables.size() ? p.indecomposables[i] : "e" + std::to_string(i));
    if (object[i] != 1) os << '^' << object[i];
  }
  if (first) os << '0';
  return os.str();
}

GroupElement K0Result::class_of(std::span<const std::int64_t> object) const {
  if (object.size() != group.ambient_rank()) {
    throw DimensionMismatch("object has " + std::to_string(object.size()) +
                            " multiplicities, expected " + std::to_string(group.ambient_rank()));
  }
  GroupElement e;
  e.coordinates.reserve(object.size());
  for (auto x : object) e.coordinates.emplace_back(static_cast<long>(x));
  return e;
}

K0Result k0(const ExactCatPresentation& p) {
  p.validate();
  const std::size_t n = p.rank();
  IntMatrix relations(0, n);
  IntVector row(n);
  for (const auto& s : p.ses) {
    for (std::size_t i = 0; i < n; ++i) row[i] = Integer(static_cast<long>(s.sub[i] - s.mid[i] + s.ext[i]));
    relations.append_row(row);
  }
  return {FgAbelianGroup(n, relations)};
}

Subgroup generator_image(const ExactCatPresentation& p, const K0Result& k) {
  std::vector<GroupElement> classes;
  classes.reserve(p.generators.size());
  for (const auto& g : p.generators) classes.push_back(k.class_of(g));
  return subgroup_generated(k.group, classes);
}

std::vector<DenseClass> classify(const ExactCatPresentation& p, Variant /*variant*/,
                                 const EnumerationLimits& limits) {
  const K0Result k = k0(p);
  const Subgroup image = generator_image(p, k);
  std::vector<DenseClass> out;
  for (auto& h : subgroups_containing(k.group, image, limits)) out.push_back({std::move(h)});
  return out;
}

bool g_membership(const K0Result& k, const DenseClass& cls, std::span<const std::int64_t> object) {
  return contains(cls.subgroup, k.class_of(object));
}

bool g_membership(const ExactCatPresentation& p, const DenseClass& cls,
                  std::span<const std::int64_t> object) {
  return g_membership(k0(p), cls, object);
}

Subgroup f_subgroup(const ExactCatPresentation& p, std::span<const Multiplicities> objects) {
  const K0Result k = k0(p);
  std::vector<GroupElement> classes;
  classes.reserve(objects.size());
  for (const auto& x : objects) classes.push_back(k.class_of(x));
  return subgroup_generated(k.group, classes);
}

bool VerificationReport::passed() const noexcept {
  return injective && failures.empty() &&
         std::all_of(classes.begin(), classes.end(), [](const ClassCheck& c) { return c.passed(); });
}

VerificationReport verify_classes(const ExactCatPresentation& p, std::int64_t bound,
                                  std::span<const Subgroup> candidates) {
  if (bound < 0) throw MalformedInput("verification bound must be nonnegative");
  require_complete(p, bound);
  const K0Result k = k0(p);
  const std::size_t n = p.rank();
  const ObjectBox box(n, bound);
  const ObjectBox half_box(n, bound / 2);
  constexpr std::size_t kMaxReported = 5;

  VerificationReport report;
  report.bound = bound;
  for (const auto& g : p.generators)
    for (auto x : g) report.roundtrip_threshold = std::max(report.roundtrip_threshold, 2 * x);
  report.roundtrip_checked = bound >= report.roundtrip_threshold;
  std::vector<std::vector<char>> memberships;

  for (const auto& h : candidates) {
    ClassCheck chk;
    chk.subgroup = h;
    auto fail = [&chk](bool& flag, const std::string& msg) {
      if (flag || chk.failures.size() < kMaxReported) chk.failures.push_back(msg);
      flag = false;
    };

    std::vector<char> in(box.size(), 0);
    for (std::size_t idx = 0; idx < box.size(); ++idx) {
      auto v = box.at(idx);
      if (contains(h, k.class_of(v))) {
        in[idx] = 1;
        chk.members.push_back(std::move(v));
      }
    }

    // (a) any two terms of a sequence inside the box force the third.
    for (const auto& s : p.ses) {
      const std::size_t a = box.index_of(s.sub), b = box.index_of(s.mid), c = box.index_of(s.ext);
      if (a == box.size() || b == box.size() || c == box.size()) continue;
      if (in[a] + in[b] + in[c] == 2) {
        fail(chk.ses_closure, "not closed under " + object_text(p, s.sub) + " >-> " +
                                  object_text(p, s.mid) + " ->> " + object_text(p, s.ext));
      }
    }

    // (b) direct sums that stay in the box.
    for (std::size_t i = 0; i < chk.members.size(); ++i) {
      for (std::size_t j = i; j < chk.members.size(); ++j) {
        auto sum = add(chk.members[i], chk.members[j]);
        const std::size_t idx = box.index_of(sum);
        if (idx != box.size() && !in[idx]) {
          fail(chk.sum_closure, "not closed under the sum " + object_text(p, chk.members[i]) +
                                    " (+) " + object_text(p, chk.members[j]));
        }
      }
    }

    // (c) every object of the half box is a summand of a member.
    for (std::size_t idx = 0; idx < half_box.size(); ++idx) {
      auto v = half_box.at(idx);
      bool covered = std::any_of(chk.members.begin(), chk.members.end(),
                                 [&](const Multiplicities& u) { return dominates(u, v); });
      if (!covered) fail(chk.density, "no member has " + object_text(p, v) + " as a summand");
    }

    // (d) f(S) = H, then g(f(S)) = S on the box and maximality of S.
    const Subgroup fs = f_subgroup(p, chk.members);
    if (report.roundtrip_checked && fs != h) {
      fail(chk.f_of_g, "f(S) = " + to_string(fs.lattice()) + " differs from H = " +
                           to_string(h.lattice()));
    }
    for (std::size_t idx = 0; idx < box.size(); ++idx) {
      auto v = box.at(idx);
      const bool back = contains(fs, k.class_of(v));
      if (report.roundtrip_checked && back != static_cast<bool>(in[idx])) {
        fail(chk.g_of_f, "g(f(S)) and S disagree on " + object_text(p, v));
      }
      if (!in[idx]) {
        IntMatrix rows = fs.lattice();
        rows.append_row(k.class_of(v).coordinates);
        if (Subgroup(n, rows) == h) {
          fail(chk.maximal, "adding " + object_text(p, v) + " to S still generates H");
        }
      }
    }

    memberships.push_back(std::move(in));
    report.classes.push_back(std::move(chk));
  }

  // (e) distinct subgroups must cut out distinct bounded sets.
  for (std::size_t i = 0; report.roundtrip_checked && i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (candidates[i] != candidates[j] && memberships[i] == memberships[j]) {
        report.injective = false;
        report.failures.push_back("classes " + std::to_string(i + 1) + " and " +
                                  std::to_string(j + 1) + " have the same bounded members");
      }
    }
  }
  return report;
}

VerificationReport verify_bijection(const ExactCatPresentation& p, std::int64_t bound,
                                    const EnumerationLimits& limits) {
  if (bound < 0) throw MalformedInput("verification bound must be nonnegative");
  require_complete(p, bound);
  std::vector<Subgroup> subgroups;
  for (auto& c : classify(p, Variant::resolving, limits)) subgroups.push_back(std::move(c.subgroup));
  return verify_classes(p, bound, subgroups);
}

bool verify_generator(const ExactCatPresentation& p) {
  p.validate();
  if (!p.ses_complete_bound) {
    throw IncompleteSes("verify_generator needs ses_complete_bound");
  }
  const std::int64_t complete = *p.ses_complete_bound;
  std::int64_t largest = 0;
  for (const auto& g : p.generators)
    for (auto x : g) largest = std::max(largest, x);
  const std::int64_t limit = complete - largest;
  if (limit < 0) return true;

  const std::size_t n = p.rank();
  const ObjectBox full(n, complete);
  const auto in_add_g = additive_closure(full, p.generators);

  // End terms of listed sequences whose middle term is a sum of generators.
  std::vector<Multiplicities> covered_ends;
  for (const auto& s : p.ses) {
    const std::size_t mid = full.index_of(s.mid);
    if (mid != full.size() && in_add_g[mid]) covered_ends.push_back(s.ext);
  }
  // Direct sums of covering sequences cover the direct sum of their end terms.
  const ObjectBox target(n, limit);
  const auto coverable = additive_closure(target, covered_ends);
  return std::all_of(coverable.begin(), coverable.end(), [](char c) { return c != 0; });
}

}  // namespace grk
