#include "psl2z/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace psl2z {

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return u < v;
}

Word RewriteSystem::reduce(const Word& w) const {
  Word cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lhs, rhs] : rules) {
      auto pos = cur.find(lhs);
      if (pos != Word::npos) {
        cur.replace(pos, lhs.size(), rhs);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

bool RewriteSystem::irreducible(const Word& w) const {
  return std::none_of(rules.begin(), rules.end(), [&](const Relation& r) { return w.find(r.first) != Word::npos; });
}

namespace {

bool orient(Word u, Word v, Relation& out) {
  if (u == v) return false;
  if (shortlex_less(u, v)) std::swap(u, v);
  out = {std::move(u), std::move(v)};
  return true;
}

// Drop rules whose lhs contains another lhs and normalize right-hand sides.
void interreduce(RewriteSystem& sys) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < sys.rules.size(); ++i) {
      RewriteSystem others;
      for (std::size_t j = 0; j < sys.rules.size(); ++j)
        if (j != i) others.rules.push_back(sys.rules[j]);
      if (!others.irreducible(sys.rules[i].first)) {
        Word l = others.reduce(sys.rules[i].first);
        Word r = others.reduce(sys.rules[i].second);
        Relation rel;
        bool keep = orient(l, r, rel);
        sys.rules = std::move(others.rules);
        if (keep) sys.rules.push_back(rel);
        changed = true;
        break;
      }
      Word r = others.reduce(sys.rules[i].second);
      if (r != sys.rules[i].second) sys.rules[i].second = r;
    }
  }
}

}  // namespace

RewriteSystem complete(const std::vector<Relation>& relations, std::size_t rule_cap) {
  RewriteSystem sys;
  for (const auto& [u, v] : relations) {
    for (char c : u + v)
      if (c != 'a' && c != 'b') throw std::invalid_argument("relation uses a letter outside {a, b}");
    Relation rel;
    if (orient(sys.reduce(u), sys.reduce(v), rel)) {
      sys.rules.push_back(rel);
      interreduce(sys);
    }
  }

  while (true) {
    std::vector<Relation> pending;
    auto add_pair = [&](const Word& x, const Word& y) {
      Word rx = sys.reduce(x), ry = sys.reduce(y);
      Relation rel;
      if (orient(rx, ry, rel)) pending.push_back(rel);
    };
    for (std::size_t i = 0; i < sys.rules.size(); ++i) {
      for (std::size_t j = 0; j < sys.rules.size(); ++j) {
        const auto& [l1, r1] = sys.rules[i];
        const auto& [l2, r2] = sys.rules[j];
        // suffix of l1 equal to a prefix of l2
        std::size_t kmax = std::min(l1.size(), l2.size()) - (i == j ? 1 : 0);
        for (std::size_t k = 1; k <= kmax; ++k) {
          if (l1.compare(l1.size() - k, k, l2, 0, k) != 0) continue;
          add_pair(r1 + l2.substr(k), l1.substr(0, l1.size() - k) + r2);
        }
        if (i != j) {
          auto pos = l1.find(l2);
          if (pos != Word::npos) add_pair(r1, l1.substr(0, pos) + r2 + l1.substr(pos + l2.size()));
        }
      }
    }
    if (pending.empty()) {
      sys.confluent = true;
      return sys;
    }
    std::sort(pending.begin(), pending.end(), [](const Relation& x, const Relation& y) {
      return shortlex_less(x.first, y.first) || (x.first == y.first && shortlex_less(x.second, y.second));
    });
    for (const auto& rel : pending) {
      Relation r2;
      if (orient(sys.reduce(rel.first), sys.reduce(rel.second), r2)) {
        sys.rules.push_back(r2);
        interreduce(sys);
      }
    }
    if (sys.rules.size() > rule_cap) return sys;
  }
}

std::string to_string(MonoidPreset p) {
  switch (p) {
    case MonoidPreset::case234_cube: return "case234_cube";
    case MonoidPreset::case234_cube_mod_center: return "case234_cube_mod_center";
    case MonoidPreset::case4_square: return "case4_square";
    case MonoidPreset::trivial: return "trivial";
  }
  return "?";
}

MonoidPreset parse_monoid_preset(const std::string& name) {
  for (auto p : {MonoidPreset::case234_cube, MonoidPreset::case234_cube_mod_center, MonoidPreset::case4_square,
                 MonoidPreset::trivial})
    if (to_string(p) == name) return p;
  throw std::invalid_argument("unknown monoid preset: " + name);
}

std::vector<Relation> preset_relations(MonoidPreset p) {
  switch (p) {
    case MonoidPreset::case234_cube: return {{"aaa", "bbb"}, {"aba", "bab"}, {"aaaaaa", ""}, {"bbbbbb", ""}};
    case MonoidPreset::case234_cube_mod_center: return {{"aaa", ""}, {"bbb", ""}, {"aba", "bab"}};
    case MonoidPreset::case4_square: return {{"aa", "bb"}, {"aba", "bab"}, {"aaaaaa", ""}, {"bbbbbb", ""}};
    case MonoidPreset::trivial: return {{"a", ""}, {"b", ""}};
  }
  throw std::invalid_argument("unknown monoid preset");
}

MonoidBound monoid_span_bound(const std::vector<Relation>& relations, std::size_t max_len) {
  RewriteSystem sys = complete(relations);
  MonoidBound out;
  out.confluent = sys.confluent;
  out.rule_count = sys.rules.size();
  // Irreducible words are closed under prefixes, so extending only irreducible words finds them all.
  std::vector<Word> level{""};
  for (std::size_t len = 0; !level.empty(); ++len) {
    out.normal_forms.insert(out.normal_forms.end(), level.begin(), level.end());
    if (len == max_len) {
      out.finite = false;
      break;
    }
    std::vector<Word> next;
    for (const Word& w : level)
      for (char c : {'a', 'b'}) {
        Word e = w + c;
        if (sys.irreducible(e)) next.push_back(std::move(e));
      }
    level = std::move(next);
  }
  out.bound = out.normal_forms.size();
  return out;
}

MonoidBound monoid_span_bound(MonoidPreset preset, std::size_t max_len) {
  return monoid_span_bound(preset_relations(preset), max_len);
}

}  // namespace psl2z
