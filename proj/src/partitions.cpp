#include "partzeta/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace pz {

unsigned long Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0UL); }

BigInt Partition::norm() const {
  BigInt n = 1;
  for (auto p : parts) n *= p;
  return n;
}

namespace {

unsigned long parse_ulong(const std::string& s, const std::string& whole) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw DomainError("bad number '" + s + "' in part set '" + whole + "'");
  return std::stoul(s);
}

}  // namespace

PartSet PartSet::congruence(unsigned long a, unsigned long m) {
  if (m == 0) throw DomainError("congruence class modulus must be positive");
  PartSet p;
  p.classes.emplace_back(a, m);
  return p;
}

PartSet PartSet::parse(const std::string& text) {
  PartSet out;
  if (text.empty()) throw DomainError("empty part set");
  std::stringstream ss(text);
  std::string term;
  while (std::getline(ss, term, '|')) {
    if (term == "distinct") {
      out.distinct = true;
    } else if (term.rfind("geq:", 0) == 0) {
      out.min_part = std::max(1UL, parse_ulong(term.substr(4), text));
    } else if (term.rfind("ones:", 0) == 0) {
      out.max_ones = parse_ulong(term.substr(5), text);
    } else if (term.rfind("finite:", 0) == 0) {
      std::string body = term.substr(7);
      if (body.size() < 2 || body.front() != '{' || body.back() != '}')
        throw DomainError("finite parts must be written finite:{p,q,...} in '" + text + "'");
      body = body.substr(1, body.size() - 2);
      std::stringstream bs(body);
      std::string item;
      while (std::getline(bs, item, ',')) {
        unsigned long v = parse_ulong(item, text);
        if (v == 0) throw DomainError("parts must be positive in '" + text + "'");
        out.explicit_parts.insert(v);
      }
    } else {
      std::string cls = term;
      if (cls.rfind("a+mN:", 0) == 0) cls = cls.substr(5);
      if (cls.empty() || cls.back() != 'N') throw DomainError("unrecognized part-set term '" + term + "'");
      cls.pop_back();
      unsigned long a = 0, m = 1;
      auto plus = cls.find('+');
      if (plus != std::string::npos) {
        a = parse_ulong(cls.substr(0, plus), text);
        m = parse_ulong(cls.substr(plus + 1), text);
      } else if (!cls.empty()) {
        m = parse_ulong(cls, text);
      }
      if (m == 0) throw DomainError("congruence class modulus must be positive in '" + text + "'");
      out.classes.emplace_back(a, m);
    }
  }
  return out;
}

std::string PartSet::to_string() const {
  std::vector<std::string> terms;
  for (auto [a, m] : classes) terms.push_back(std::to_string(a) + "+" + std::to_string(m) + "N");
  if (!explicit_parts.empty()) {
    std::string s = "finite:{";
    bool first = true;
    for (auto p : explicit_parts) {
      s += (first ? "" : ",") + std::to_string(p);
      first = false;
    }
    terms.push_back(s + "}");
  }
  if (min_part > 1) terms.push_back("geq:" + std::to_string(min_part));
  if (max_ones) terms.push_back("ones:" + std::to_string(*max_ones));
  if (distinct) terms.push_back("distinct");
  if (terms.empty()) return "N";
  std::string out = terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) out += "|" + terms[i];
  return out;
}

bool PartSet::contains(unsigned long n) const {
  if (n == 0 || n < min_part) return false;
  if (classes.empty() && explicit_parts.empty()) return true;
  if (explicit_parts.count(n)) return true;
  for (auto [a, m] : classes)
    if (n > a && (n - a) % m == 0) return true;
  return false;
}

bool PartSet::divergent() const { return contains(1) && !distinct && !max_ones; }

unsigned long PartSet::ones_limit() const {
  if (!contains(1)) return 0;
  if (distinct) return max_ones ? std::min(1UL, *max_ones) : 1UL;
  if (!max_ones) throw DomainError("part 1 has unbounded multiplicity");
  return *max_ones;
}

unsigned long PartSet::period() const {
  unsigned long l = 1;
  for (auto [a, m] : classes) l = std::lcm(l, m);
  return l;
}

unsigned long PartSet::periodic_start() const {
  unsigned long s = std::max(1UL, min_part);
  if (!explicit_parts.empty()) s = std::max(s, *explicit_parts.rbegin() + 1);
  for (auto [a, m] : classes) s = std::max(s, a + m);
  return s;
}

std::vector<unsigned long> PartSet::progression_heads(unsigned long start) const {
  if (start < periodic_start()) throw DomainError("progression_heads: start lies before the periodic range");
  std::vector<unsigned long> heads;
  const unsigned long l = period();
  for (unsigned long r = start; r < start + l; ++r)
    if (contains(r)) heads.push_back(r);
  return heads;
}

std::vector<unsigned long> PartSet::members_upto(unsigned long bound) const {
  std::vector<unsigned long> v;
  for (unsigned long n = 1; n <= bound; ++n)
    if (contains(n)) v.push_back(n);
  return v;
}

bool PartSet::empty_set() const {
  if (classes.empty() && explicit_parts.empty()) return false;
  return progression_heads(periodic_start()).empty() &&
         std::none_of(explicit_parts.begin(), explicit_parts.end(), [&](unsigned long p) { return contains(p); }) &&
         members_upto(periodic_start()).empty();
}

namespace {

void enumerate_rec(unsigned long remaining, unsigned long max_part, const PartSet& c, std::optional<std::size_t> length,
                   std::vector<unsigned long>& cur, unsigned long ones_used, std::vector<Partition>& out) {
  if (remaining == 0) {
    if (!length || cur.size() == *length) out.push_back({cur});
    return;
  }
  if (length && cur.size() >= *length) return;
  for (unsigned long p = std::min(remaining, max_part); p >= 1; --p) {
    if (!c.contains(p)) continue;
    if (p == 1) {
      const bool bounded = c.distinct || c.max_ones;
      unsigned long cap = c.distinct ? 1UL : (c.max_ones ? *c.max_ones : 0UL);
      if (c.distinct && c.max_ones) cap = std::min(cap, *c.max_ones);
      if (bounded && ones_used + remaining > cap) continue;  // the rest must all be ones
    }
    cur.push_back(p);
    enumerate_rec(remaining - p, c.distinct ? p - 1 : p, c, length, cur, ones_used + (p == 1), out);
    cur.pop_back();
    if (p == 1) break;
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(unsigned long n, const PartSet& constraints,
                                            std::optional<std::size_t> length) {
  std::vector<Partition> out;
  std::vector<unsigned long> cur;
  enumerate_rec(n, n, constraints, length, cur, 0, out);
  return out;
}

TruncatedSeries<Rational> product_sum_expand(const std::function<Rational(unsigned long)>& f, unsigned order) {
  TruncatedSeries<Rational> prod = TruncatedSeries<Rational>::one(order);
  for (unsigned long n = 1; n <= order; ++n) {
    const Rational fn = f(n);
    if (fn == 0) continue;
    // Multiply by 1 / (1 - fn q^n): c_j += fn * c_(j-n), increasing j.
    for (unsigned long j = n; j <= order; ++j) prod[j] += fn * prod[j - n];
  }
  TruncatedSeries<Rational> direct(order);
  for (unsigned long n = 0; n <= order; ++n) {
    Rational acc = 0;
    for (const auto& lam : enumerate_partitions(n)) {
      Rational t = 1;
      for (auto p : lam.parts) t *= f(p);
      acc += t;
    }
    direct[n] = acc;
  }
  if (!(prod == direct)) throw InternalDefect("product_sum_expand: product and enumeration disagree");
  return prod;
}

BruteZeta brute_zeta(const PartSet& c, const HPReal& s, unsigned long part_bound, unsigned long length_bound) {
  if (c.divergent()) throw DomainError("brute_zeta: part 1 has unbounded multiplicity (divergent part set)");
  if (!(s > 1)) throw DomainError("brute_zeta requires s > 1");
  std::vector<HPReal> by_len(length_bound + 1, HPReal(0));
  by_len[0] = 1;
  for (unsigned long k = 2; k <= part_bound; ++k) {
    if (!c.contains(k)) continue;
    const HPReal x = pow(HPReal(k), -s);
    if (c.distinct) {
      for (unsigned long l = length_bound; l >= 1; --l) by_len[l] += by_len[l - 1] * x;
    } else {
      // Unbounded multiplicity: forward sweep realizes the geometric series.
      for (unsigned long l = 1; l <= length_bound; ++l) by_len[l] += by_len[l - 1] * x;
    }
  }
  HPReal total = 0;
  for (const auto& v : by_len) total += v;
  if (part_bound >= 1 && c.contains(1)) total *= HPReal(c.ones_limit() + 1);
  std::ostringstream note;
  note << "parts <= " << part_bound << ", at most " << length_bound
       << " parts other than 1; lower bound for the full sum";
  return {total, note.str()};
}

BigInt multiplicative_partition_count(unsigned long n, const PartSet& c) {
  if (n == 0) throw DomainError("multiplicative_partition_count needs n >= 1");
  if (c.divergent()) throw DomainError("multiplicative_partition_count: part 1 with unbounded multiplicity gives infinite counts");
  std::map<std::pair<unsigned long, unsigned long>, BigInt> memo;
  // Factorizations of r into members in [2, cap], nonincreasing (strictly if distinct).
  std::function<BigInt(unsigned long, unsigned long)> count = [&](unsigned long r, unsigned long cap) -> BigInt {
    if (r == 1) return 1;
    auto key = std::make_pair(r, cap);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = 0;
    for (unsigned long d = std::min(r, cap); d >= 2; --d) {
      if (r % d || !c.contains(d)) continue;
      total += count(r / d, c.distinct ? d - 1 : d);
    }
    memo.emplace(key, total);
    return total;
  };
  BigInt base = count(n, n);
  return base * BigInt(c.ones_limit() + 1);
}

std::vector<HPReal> weighted_multiplicative_coefficients(const PartSet& c, unsigned long bound,
                                                         const std::function<HPReal(unsigned long)>& weight) {
  if (c.divergent()) throw DomainError("part 1 with unbounded multiplicity gives divergent coefficients");
  std::vector<HPReal> a(bound + 1, HPReal(0));
  if (bound == 0) return a;
  a[1] = 1;
  for (unsigned long j = 2; j <= bound; ++j) {
    if (!c.contains(j)) continue;
    const HPReal w = weight(j);
    if (w == 0) continue;
    if (c.distinct) {
      for (unsigned long n = (bound / j) * j; n >= j; n -= j) a[n] += w * a[n / j];
    } else {
      for (unsigned long n = j; n <= bound; n += j) a[n] += w * a[n / j];
    }
  }
  if (c.contains(1)) {
    HPReal factor = 0, wp = 1;
    const HPReal w1 = weight(1);
    for (unsigned long i = 0; i <= c.ones_limit(); ++i, wp *= w1) factor += wp;
    for (auto& v : a) v *= factor;
  }
  return a;
}

}  // namespace pz
