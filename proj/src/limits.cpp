#include "diho/limits.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "diho/error.hpp"

namespace diho::limits {

int FiniteSystem::object_index(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return -1;
  return static_cast<int>(it - names_.begin());
}

bool FiniteSystem::has_hom(int src, int dst) const {
  return homs_.count({src, dst}) > 0;
}

const std::vector<int>& FiniteSystem::hom(int src, int dst) const {
  auto it = homs_.find({src, dst});
  if (it == homs_.end())
    throw Error(ErrorCode::UnknownLabel,
                "no morphism " + object_name(src) + " -> " + object_name(dst));
  return it->second;
}

SystemBuilder& SystemBuilder::add_object(const std::string& name,
                                         std::vector<std::string> tokens) {
  objects_.emplace_back(name, std::move(tokens));
  return *this;
}

SystemBuilder& SystemBuilder::add_morphism(
    const std::string& src, const std::string& dst,
    const std::map<std::string, std::string>& fn) {
  mors_.emplace_back(src, dst, fn);
  return *this;
}

FiniteSystem SystemBuilder::build() const {
  FiniteSystem s;
  for (const auto& [name, toks] : objects_) s.names_.push_back(name);
  std::sort(s.names_.begin(), s.names_.end());
  if (std::adjacent_find(s.names_.begin(), s.names_.end()) != s.names_.end())
    throw Error(ErrorCode::PreconditionFailed, "duplicate object name");
  s.tokens_.resize(s.names_.size());
  for (const auto& [name, toks] : objects_) {
    auto sorted = toks;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    s.tokens_[static_cast<size_t>(s.object_index(name))] = std::move(sorted);
  }

  for (int i = 0; i < s.object_count(); ++i) {
    std::vector<int> id(s.tokens(i).size());
    for (size_t k = 0; k < id.size(); ++k) id[k] = static_cast<int>(k);
    s.homs_[{i, i}] = std::move(id);
  }

  for (const auto& [src, dst, fn] : mors_) {
    int a = s.object_index(src), b = s.object_index(dst);
    if (a < 0 || b < 0)
      throw Error(ErrorCode::UnknownLabel,
                  "morphism names unknown object " + (a < 0 ? src : dst));
    std::vector<int> table(s.tokens(a).size(), -1);
    for (const auto& [from, to] : fn) {
      auto& ta = s.tokens_[static_cast<size_t>(a)];
      auto& tb = s.tokens_[static_cast<size_t>(b)];
      auto ia = std::lower_bound(ta.begin(), ta.end(), from);
      auto ib = std::lower_bound(tb.begin(), tb.end(), to);
      if (ia == ta.end() || *ia != from)
        throw Error(ErrorCode::UnknownLabel, "unknown token " + from + " in " + src);
      if (ib == tb.end() || *ib != to)
        throw Error(ErrorCode::UnknownLabel, "unknown token " + to + " in " + dst);
      table[static_cast<size_t>(ia - ta.begin())] = static_cast<int>(ib - tb.begin());
    }
    for (int t : table)
      if (t < 0)
        throw Error(ErrorCode::AssignmentIncomplete,
                    "morphism " + src + " -> " + dst + " misses a token");
    if (a == b) {
      for (size_t k = 0; k < table.size(); ++k)
        if (table[k] != static_cast<int>(k))
          throw Error(ErrorCode::PreconditionFailed,
                      "self-morphism on " + src + " must be the identity");
      continue;
    }
    if (s.homs_.count({a, b}))
      throw Error(ErrorCode::PreconditionFailed,
                  "duplicate morphism " + src + " -> " + dst);
    s.homs_[{a, b}] = std::move(table);
  }

  /* Composition closure: composable homs must compose inside the table. */
  for (const auto& [xy, f] : s.homs_) {
    for (const auto& [yz, g] : s.homs_) {
      if (xy.second != yz.first) continue;
      auto it = s.homs_.find({xy.first, yz.second});
      if (it == s.homs_.end())
        throw Error(ErrorCode::PreconditionFailed,
                    "missing composite " + s.object_name(xy.first) + " -> " +
                        s.object_name(yz.second));
      for (size_t k = 0; k < f.size(); ++k)
        if (it->second[k] != g[static_cast<size_t>(f[k])])
          throw Error(ErrorCode::PreconditionFailed,
                      "composition mismatch through " + s.object_name(xy.second));
    }
  }
  return s;
}

SystemReport validate_system(const FiniteSystem& s) {
  SystemReport r;
  for (int x = 0; x < s.object_count(); ++x)
    for (int y = x + 1; y < s.object_count(); ++y) {
      bool dominated = false;
      for (int z = 0; z < s.object_count() && !dominated; ++z)
        dominated = s.has_hom(z, x) && s.has_hom(z, y);
      if (!dominated) {
        r.common_sources = false;
        r.missing_sources.emplace_back(s.object_name(x), s.object_name(y));
      }
    }
  for (const auto& [pair, fn] : s.homs()) {
    if (pair.first == pair.second) continue;
    std::set<int> image(fn.begin(), fn.end());
    if (image.size() != s.tokens(pair.second).size()) {
      r.all_surjective = false;
      r.non_surjective.emplace_back(s.object_name(pair.first),
                                    s.object_name(pair.second));
    }
  }
  for (int x = 0; x < s.object_count(); ++x)
    if (s.tokens(x).empty()) {
      r.all_nonempty = false;
      r.empty_objects.push_back(s.object_name(x));
    }
  return r;
}

std::vector<LimitElement> inverse_limit(const FiniteSystem& s) {
  const int n = s.object_count();
  std::vector<LimitElement> out;
  LimitElement cur(static_cast<size_t>(n), -1);
  std::function<void(int)> go = [&](int obj) {
    if (obj == n) {
      out.push_back(cur);
      return;
    }
    for (int t = 0; t < static_cast<int>(s.tokens(obj).size()); ++t) {
      bool ok = true;
      for (int other = 0; other < obj && ok; ++other) {
        if (s.has_hom(obj, other) &&
            s.hom(obj, other)[static_cast<size_t>(t)] != cur[static_cast<size_t>(other)])
          ok = false;
        if (s.has_hom(other, obj) &&
            s.hom(other, obj)[static_cast<size_t>(cur[static_cast<size_t>(other)])] != t)
          ok = false;
      }
      if (!ok) continue;
      cur[static_cast<size_t>(obj)] = t;
      go(obj + 1);
    }
    cur[static_cast<size_t>(obj)] = -1;
  };
  go(0);
  return out;
}

void require_subsystem(const FiniteSystem& sub, const FiniteSystem& s) {
  for (int i = 0; i < sub.object_count(); ++i) {
    int j = s.object_index(sub.object_name(i));
    if (j < 0)
      throw Error(ErrorCode::NotSubcategory,
                  "object " + sub.object_name(i) + " is not in the system");
    if (sub.tokens(i) != s.tokens(j))
      throw Error(ErrorCode::NotSubcategory,
                  "object " + sub.object_name(i) + " has different tokens");
  }
  for (const auto& [pair, fn] : sub.homs()) {
    int a = s.object_index(sub.object_name(pair.first));
    int b = s.object_index(sub.object_name(pair.second));
    if (!s.has_hom(a, b) || s.hom(a, b) != fn)
      throw Error(ErrorCode::NotSubcategory,
                  "morphism " + sub.object_name(pair.first) + " -> " +
                      sub.object_name(pair.second) + " is not in the system");
  }
}

bool is_cofinal(const FiniteSystem& sub, const FiniteSystem& s) {
  require_subsystem(sub, s);
  for (int x = 0; x < s.object_count(); ++x) {
    bool reached = false;
    for (int i = 0; i < sub.object_count() && !reached; ++i)
      reached = s.has_hom(s.object_index(sub.object_name(i)), x);
    if (!reached) return false;
  }
  return true;
}

RestrictionReport restriction_check(const FiniteSystem& sub,
                                    const FiniteSystem& s) {
  RestrictionReport r;
  r.cofinal = is_cofinal(sub, s);
  auto whole = inverse_limit(s);
  auto small = inverse_limit(sub);
  r.whole_count = whole.size();
  r.sub_count = small.size();

  std::vector<int> keep;  // s object index per sub object
  for (int i = 0; i < sub.object_count(); ++i)
    keep.push_back(s.object_index(sub.object_name(i)));

  std::set<LimitElement> image;
  bool injective = true;
  for (const auto& e : whole) {
    LimitElement proj;
    for (int j : keep) proj.push_back(e[static_cast<size_t>(j)]);
    if (!image.insert(proj).second) injective = false;
  }
  r.injective = injective;
  /* Restricted elements always satisfy sub's homs, so image <= target. */
  std::set<LimitElement> target(small.begin(), small.end());
  r.surjective = image == target;
  return r;
}

LimitElement sequence_limit_witness(const FiniteSystem& s) {
  const int n = s.object_count();
  if (n == 0) throw Error(ErrorCode::PreconditionFailed, "empty system");

  /* Rank objects by how many objects they map into; a chain has all ranks
   * distinct and homs exactly downward. */
  std::vector<std::pair<int, int>> rank;  // (#targets, object)
  for (int x = 0; x < n; ++x) {
    int r = 0;
    for (int y = 0; y < n; ++y)
      if (s.has_hom(x, y)) ++r;
    rank.emplace_back(r, x);
  }
  std::sort(rank.begin(), rank.end());
  std::vector<int> chain;  // chain[0] = bottom
  for (int i = 0; i < n; ++i) {
    if (rank[static_cast<size_t>(i)].first != i + 1)
      throw Error(ErrorCode::PreconditionFailed,
                  "system is not a linear chain");
    chain.push_back(rank[static_cast<size_t>(i)].second);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool expect = i >= j;
      if (s.has_hom(chain[static_cast<size_t>(i)], chain[static_cast<size_t>(j)]) != expect)
        throw Error(ErrorCode::PreconditionFailed,
                    "system is not a linear chain");
    }
  for (int i = 0; i < n; ++i)
    if (s.tokens(i).empty())
      throw Error(ErrorCode::PreconditionFailed,
                  "empty object " + s.object_name(i));
  for (int i = 1; i < n; ++i) {
    const auto& step = s.hom(chain[static_cast<size_t>(i)], chain[static_cast<size_t>(i - 1)]);
    std::set<int> image(step.begin(), step.end());
    if (image.size() != s.tokens(chain[static_cast<size_t>(i - 1)]).size())
      throw Error(ErrorCode::PreconditionFailed,
                  "chain step is not surjective");
  }

  LimitElement e(static_cast<size_t>(n), -1);
  e[static_cast<size_t>(chain[0])] = 0;  // least token at the bottom
  for (int i = 1; i < n; ++i) {
    const auto& step = s.hom(chain[static_cast<size_t>(i)], chain[static_cast<size_t>(i - 1)]);
    int want = e[static_cast<size_t>(chain[static_cast<size_t>(i - 1)])];
    for (size_t t = 0; t < step.size(); ++t)
      if (step[t] == want) {
        e[static_cast<size_t>(chain[static_cast<size_t>(i)])] = static_cast<int>(t);
        break;
      }
  }
  return e;
}

ClosureResult closure_category(const FiniteSystem& s) {
  SystemReport base = validate_system(s);
  if (!base.common_sources)
    throw Error(ErrorCode::PreconditionFailed,
                "closure needs every object pair dominated by a common source");
  if (!base.all_surjective)
    throw Error(ErrorCode::PreconditionFailed,
                "closure needs surjective morphisms");

  ClosureResult out;
  const int n = s.object_count();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::vector<std::vector<int>> found;
      for (int z = 0; z < n; ++z) {
        if (!s.has_hom(z, x) || !s.has_hom(z, y)) continue;
        const auto& a = s.hom(z, x);
        const auto& b = s.hom(z, y);
        std::vector<int> f(s.tokens(x).size(), -1);
        bool ok = true;
        for (size_t t = 0; t < a.size() && ok; ++t) {
          int& slot = f[static_cast<size_t>(a[t])];
          if (slot < 0)
            slot = b[t];
          else if (slot != b[t])
            ok = false;
        }
        if (!ok) continue;
        for (int v : f)
          if (v < 0) ok = false;  // a not onto cannot happen, guarded anyway
        if (!ok) continue;
        if (std::find(found.begin(), found.end(), f) == found.end())
          found.push_back(f);
      }
      if (found.empty()) continue;
      std::sort(found.begin(), found.end());
      if (found.size() > 1) out.at_most_one = false;
      for (const auto& f : found) {
        std::set<int> image(f.begin(), f.end());
        if (image.size() != s.tokens(y).size()) out.all_onto = false;
      }
      if (s.has_hom(x, y) &&
          std::find(found.begin(), found.end(), s.hom(x, y)) == found.end())
        out.base_embeds = false;
      out.homs[{x, y}] = std::move(found);
    }
  out.common_sources = base.common_sources;
  return out;
}

}  // namespace diho::limits
