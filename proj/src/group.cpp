#include "subshift/group.hpp"

#include <cctype>
#include <charconv>
#include <unordered_set>

#include "subshift/errors.hpp"

namespace subshift {

GroupSpec f2() { return GroupSpec{{FactorSpec{FactorKind::Free, 2}}}; }

GroupSpec f2xf2() {
  return GroupSpec{
      {FactorSpec{FactorKind::Free, 2}, FactorSpec{FactorKind::Free, 2}}};
}

GroupSpec free_times_z(int rank) {
  return GroupSpec{
      {FactorSpec{FactorKind::Free, rank}, FactorSpec{FactorKind::Lattice, 1}}};
}

static bool inverse_letters(char x, char y) {
  return x != y && std::toupper(static_cast<unsigned char>(x)) ==
                       std::toupper(static_cast<unsigned char>(y));
}

std::string reduce_word(const std::string& word) {
  std::string out;
  out.reserve(word.size());
  for (char c : word) {
    if (!out.empty() && inverse_letters(out.back(), c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string invert_word(const std::string& word) {
  std::string out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    unsigned char c = static_cast<unsigned char>(*it);
    out.push_back(std::islower(c) ? static_cast<char>(std::toupper(c))
                                  : static_cast<char>(std::tolower(c)));
  }
  return out;
}

std::string word_mul(const std::string& x, const std::string& y) {
  return reduce_word(x + y);
}

GroupElement identity(const GroupSpec& spec) {
  if (spec.factors.empty()) throw InputError("group spec has no factors");
  GroupElement out{spec, {}};
  out.parts.reserve(spec.factors.size());
  for (const FactorSpec& f : spec.factors) {
    if (f.rank < 1) throw InputError("factor rank must be at least 1");
    if (f.kind == FactorKind::Free) {
      out.parts.emplace_back(std::string());
    } else {
      out.parts.emplace_back(std::vector<long long>(f.rank, 0));
    }
  }
  return out;
}

bool is_identity(const GroupElement& x) {
  for (const FactorElement& p : x.parts) {
    if (const auto* w = std::get_if<std::string>(&p)) {
      if (!w->empty()) return false;
    } else {
      for (long long v : std::get<std::vector<long long>>(p)) {
        if (v != 0) return false;
      }
    }
  }
  return true;
}

static std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out(1);
  for (char c : text) {
    if (c == sep) {
      out.emplace_back();
    } else {
      out.back().push_back(c);
    }
  }
  return out;
}

static long long parse_int(const std::string& text) {
  long long value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("bad integer \"" + text + "\" in lattice coordinate");
  }
  return value;
}

GroupElement parse_element(const GroupSpec& spec, const std::string& text) {
  if (spec.factors.empty()) throw InputError("group spec has no factors");
  std::vector<std::string> segs = split(text, '|');
  if (segs.size() != spec.factors.size()) {
    throw InputError("element text \"" + text + "\" has " +
                     std::to_string(segs.size()) + " factor segment(s), spec has " +
                     std::to_string(spec.factors.size()));
  }
  GroupElement out{spec, {}};
  out.parts.reserve(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const FactorSpec& f = spec.factors[i];
    std::string seg;
    for (char c : segs[i]) {
      if (!std::isspace(static_cast<unsigned char>(c))) seg.push_back(c);
    }
    if (f.kind == FactorKind::Free) {
      for (char c : seg) {
        unsigned char uc = static_cast<unsigned char>(c);
        if (!std::isalpha(uc)) {
          throw InputError("unknown letter '" + std::string(1, c) +
                           "' in free-factor word");
        }
        int idx = std::islower(uc) ? c - 'a' : c - 'A';
        if (idx >= f.rank) {
          throw InputError("letter '" + std::string(1, c) +
                           "' outside free rank " + std::to_string(f.rank));
        }
      }
      out.parts.emplace_back(reduce_word(seg));
    } else {
      std::vector<long long> v;
      if (!seg.empty()) {
        for (const std::string& piece : split(seg, ',')) {
          v.push_back(parse_int(piece));
        }
      }
      if (v.empty()) v.assign(f.rank, 0);
      if (static_cast<int>(v.size()) != f.rank) {
        throw InputError("lattice segment \"" + seg + "\" has " +
                         std::to_string(v.size()) + " coordinate(s), expected " +
                         std::to_string(f.rank));
      }
      out.parts.emplace_back(std::move(v));
    }
  }
  return out;
}

std::string format_element(const GroupElement& x) {
  std::string out;
  for (std::size_t i = 0; i < x.parts.size(); ++i) {
    if (i > 0) out.push_back('|');
    if (const auto* w = std::get_if<std::string>(&x.parts[i])) {
      out += *w;
    } else {
      const auto& v = std::get<std::vector<long long>>(x.parts[i]);
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (j > 0) out.push_back(',');
        out += std::to_string(v[j]);
      }
    }
  }
  return out;
}

GroupElement mul(const GroupElement& x, const GroupElement& y) {
  if (x.spec != y.spec) throw InputError("element spec mismatch in mul");
  GroupElement out{x.spec, {}};
  out.parts.reserve(x.parts.size());
  for (std::size_t i = 0; i < x.parts.size(); ++i) {
    if (const auto* w = std::get_if<std::string>(&x.parts[i])) {
      out.parts.emplace_back(word_mul(*w, std::get<std::string>(y.parts[i])));
    } else {
      auto v = std::get<std::vector<long long>>(x.parts[i]);
      const auto& u = std::get<std::vector<long long>>(y.parts[i]);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += u[j];
      out.parts.emplace_back(std::move(v));
    }
  }
  return out;
}

GroupElement inv(const GroupElement& x) {
  GroupElement out{x.spec, {}};
  out.parts.reserve(x.parts.size());
  for (const FactorElement& p : x.parts) {
    if (const auto* w = std::get_if<std::string>(&p)) {
      out.parts.emplace_back(invert_word(*w));
    } else {
      auto v = std::get<std::vector<long long>>(p);
      for (long long& c : v) c = -c;
      out.parts.emplace_back(std::move(v));
    }
  }
  return out;
}

static std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t ElementHash::operator()(const GroupElement& x) const {
  std::size_t h = x.parts.size();
  for (const FactorElement& p : x.parts) {
    if (const auto* w = std::get_if<std::string>(&p)) {
      h = mix(h, std::hash<std::string>{}(*w));
    } else {
      for (long long v : std::get<std::vector<long long>>(p)) {
        h = mix(h, std::hash<long long>{}(v));
      }
      h = mix(h, 0x5bd1e995ULL);
    }
  }
  return h;
}

std::vector<GroupElement> standard_generators(const GroupSpec& spec) {
  std::vector<GroupElement> out;
  GroupElement id = identity(spec);
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    const FactorSpec& f = spec.factors[i];
    for (int j = 0; j < f.rank; ++j) {
      if (f.kind == FactorKind::Free) {
        GroupElement g = id;
        g.parts[i] = std::string(1, static_cast<char>('a' + j));
        out.push_back(g);
        g.parts[i] = std::string(1, static_cast<char>('A' + j));
        out.push_back(std::move(g));
      } else {
        GroupElement g = id;
        auto v = std::get<std::vector<long long>>(g.parts[i]);
        v[j] = 1;
        g.parts[i] = v;
        out.push_back(g);
        v[j] = -1;
        g.parts[i] = std::move(v);
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

std::vector<GroupElement> ball(const GroupSpec& spec,
                               const std::vector<GroupElement>& gens, int r) {
  std::vector<GroupElement> out{identity(spec)};
  std::unordered_set<GroupElement, ElementHash> seen{out[0]};
  std::size_t layer_begin = 0;
  for (int step = 0; step < r; ++step) {
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const GroupElement& s : gens) {
        GroupElement t = mul(out[i], s);
        if (seen.insert(t).second) out.push_back(std::move(t));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

bool coding_consistent(const PatternCoding& c, const GroupSpec& spec) {
  std::unordered_map<GroupElement, std::string, ElementHash> seen;
  for (const auto& [word, sym] : c.entries) {
    GroupElement g = parse_element(spec, word);
    auto [it, fresh] = seen.emplace(std::move(g), sym);
    if (!fresh && it->second != sym) return false;
  }
  return true;
}

}  // namespace subshift
