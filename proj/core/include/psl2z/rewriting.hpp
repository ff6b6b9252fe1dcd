#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace psl2z {

// Words over {a, b}; the empty string is the identity.
using Word = std::string;
using Relation = std::pair<Word, Word>;

struct RewriteSystem {
  std::vector<Relation> rules;  // lhs -> rhs with lhs > rhs in shortlex order
  bool confluent = false;

  Word reduce(const Word& w) const;
  bool irreducible(const Word& w) const;
};

bool shortlex_less(const Word& u, const Word& v);

// Knuth-Bendix completion; stops once the rule count exceeds rule_cap.
RewriteSystem complete(const std::vector<Relation>& relations, std::size_t rule_cap = 256);

enum class MonoidPreset { case234_cube, case234_cube_mod_center, case4_square, trivial };
std::string to_string(MonoidPreset p);
MonoidPreset parse_monoid_preset(const std::string& name);  // throws std::invalid_argument
std::vector<Relation> preset_relations(MonoidPreset p);

struct MonoidBound {
  std::size_t bound = 0;    // irreducible words of length <= max_len
  bool confluent = false;   // normal forms are unique
  bool finite = true;       // no irreducible word reached max_len
  std::size_t rule_count = 0;
  std::vector<Word> normal_forms;

  bool exact() const { return confluent && finite; }
};

MonoidBound monoid_span_bound(MonoidPreset preset, std::size_t max_len = 24);
MonoidBound monoid_span_bound(const std::vector<Relation>& relations, std::size_t max_len = 24);

}  // namespace psl2z
