#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace subshift {

enum class FactorKind { Free, Lattice };

struct FactorSpec {
  FactorKind kind = FactorKind::Free;
  int rank = 1;  // free rank or lattice dimension
  bool operator==(const FactorSpec&) const = default;
};

// A finite direct product of free groups and integer lattices.
struct GroupSpec {
  std::vector<FactorSpec> factors;
  bool operator==(const GroupSpec&) const = default;
};

GroupSpec f2();
GroupSpec f2xf2();
GroupSpec free_times_z(int rank);

// Free-factor component: a freely reduced word over 'a'..'z' with 'A'..'Z'
// as the formal inverses. Lattice component: an integer vector.
using FactorElement = std::variant<std::string, std::vector<long long>>;

struct GroupElement {
  GroupSpec spec;
  std::vector<FactorElement> parts;
  bool operator==(const GroupElement&) const = default;
};

struct ElementHash {
  std::size_t operator()(const GroupElement& x) const;
};

GroupElement identity(const GroupSpec& spec);
bool is_identity(const GroupElement& x);

// Word-level helpers for a single free factor; the paradox and mirror
// modules do their arithmetic directly on reduced words.
std::string reduce_word(const std::string& word);
std::string invert_word(const std::string& word);
std::string word_mul(const std::string& x, const std::string& y);

// Parses factor texts joined by '|': free words as letter strings, lattice
// vectors as comma-separated integers (empty segment = zero vector).
// Whitespace is ignored. Free parts come back freely reduced, so this
// doubles as reduce().
GroupElement parse_element(const GroupSpec& spec, const std::string& text);
std::string format_element(const GroupElement& x);

inline GroupElement reduce(const GroupSpec& spec, const std::string& word) {
  return parse_element(spec, word);
}

GroupElement mul(const GroupElement& x, const GroupElement& y);
GroupElement inv(const GroupElement& x);

// Per free factor: a, A, b, B, ...; per lattice factor: +/- unit vectors.
std::vector<GroupElement> standard_generators(const GroupSpec& spec);

// Every product of at most r generators, in BFS layer order from the
// identity; deterministic for a fixed generator order.
std::vector<GroupElement> ball(const GroupSpec& spec,
                               const std::vector<GroupElement>& gens, int r);

struct PatternCoding {
  std::vector<std::pair<std::string, std::string>> entries;  // word -> symbol
};

// True iff no two domain words reducing to the same element carry different
// symbols.
bool coding_consistent(const PatternCoding& c, const GroupSpec& spec);

}  // namespace subshift
