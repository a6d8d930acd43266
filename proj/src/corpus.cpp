#include "hypc/corpus.hpp"

#include <map>
#include <string>

namespace hypc {

namespace {

std::string key_of(const L1Vector& v) {
  std::string k;
  for (const auto& c : v.coeffs()) {
    k += format_rational(c);
    k += ',';
  }
  return k;
}

void signs_rec(const std::vector<unsigned>& parts, std::size_t pos, unsigned q,
               std::vector<Rational>& cur,
               std::map<std::string, L1Functional>& out) {
  if (pos == parts.size()) {
    L1Vector v{std::vector<Rational>(cur)};
    out.emplace(key_of(v), L1Functional(v));
    return;
  }
  if (parts[pos] == 0) {
    cur.push_back(Rational(0));
    signs_rec(parts, pos + 1, q, cur, out);
    cur.pop_back();
    return;
  }
  for (int s : {1, -1}) {
    cur.push_back(Rational(s * static_cast<int>(parts[pos]), q));
    signs_rec(parts, pos + 1, q, cur, out);
    cur.pop_back();
  }
}

void parts_rec(unsigned remaining, std::size_t slots, std::vector<unsigned>& parts,
               unsigned q, std::map<std::string, L1Functional>& out) {
  if (slots == 1) {
    parts.push_back(remaining);
    std::vector<Rational> cur;
    signs_rec(parts, 0, q, cur, out);
    parts.pop_back();
    return;
  }
  for (unsigned a = 0; a <= remaining; ++a) {
    parts.push_back(a);
    parts_rec(remaining - a, slots - 1, parts, q, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<L1Functional> functional_grid(unsigned max_den, unsigned max_support) {
  std::map<std::string, L1Functional> uniq;
  for (unsigned q = 1; q <= max_den; ++q) {
    std::vector<unsigned> parts;
    parts_rec(q, max_support, parts, q, uniq);
  }
  std::vector<L1Functional> out;
  out.reserve(uniq.size());
  for (auto& [k, f] : uniq) out.push_back(std::move(f));
  return out;
}

}  // namespace hypc
