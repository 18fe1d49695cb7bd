#include "codes.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>

#include "errors.hpp"

namespace meshperm {

SubexceedantFunction::SubexceedantFunction(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  for (int i = 1; i <= n; ++i) {
    const int s = entries_[i - 1];
    if (s < 0 || s > n - i) {
      throw InvalidInput("entry " + std::to_string(i) + " of code is " + std::to_string(s) +
                         ", outside 0.." + std::to_string(n - i));
    }
  }
}

SubexceedantFunction SubexceedantFunction::parse(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') cleaned.push_back(c);
  }
  std::vector<int> entries;
  std::size_t i = 0;
  while (i < cleaned.size()) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(cleaned.data() + i, cleaned.data() + cleaned.size(), value);
    if (ec != std::errc()) throw ParseError("expected an integer in code", i);
    entries.push_back(value);
    i = static_cast<std::size_t>(ptr - cleaned.data());
    if (i < cleaned.size()) {
      if (cleaned[i] != ',') throw ParseError("expected ',' in code", i);
      ++i;
    }
  }
  return SubexceedantFunction(std::move(entries));
}

std::string SubexceedantFunction::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(entries_[i]);
  }
  out.push_back(')');
  return out;
}

Permutation phi(const Permutation& p) {
  if (p.empty()) throw DomainError("phi is undefined on the empty permutation");
  const int one = p.position_of(1);
  std::vector<int> values(p.values().begin(), p.values().end());
  const std::vector<int> tail = generalized_complement(p.values().subspan(one));
  std::copy(tail.begin(), tail.end(), values.begin() + one);
  return Permutation(std::move(values));
}

ActiveZone active_zone(const Permutation& p) {
  const int n = p.size();
  if (n == 0 || p[n] == 1) return {};
  int j = 1;
  while (p[j] >= p[n]) ++j;
  const int a = p[j] + 1;
  int b = n;
  if (j > 1) {
    int smallest = n + 1;
    for (int i = 1; i < j; ++i) smallest = std::min(smallest, p[i]);
    b = smallest - 1;
  }
  return {std::pair{a, b}};
}

Permutation psi(const Permutation& p) {
  const ActiveZone zone = active_zone(p);
  if (zone.empty()) return p;
  const auto [a, b] = *zone.interval;
  std::vector<int> values(p.values().begin(), p.values().end());
  for (int& v : values) {
    if (a <= v && v <= b) v = a + b - v;
  }
  return Permutation(std::move(values));
}

SubexceedantFunction lehmer(const Permutation& p) {
  const int n = p.size();
  std::vector<int> code(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) code[i - 1] += p[j] < p[i];
  }
  return SubexceedantFunction(std::move(code));
}

Permutation unlehmer(const SubexceedantFunction& code) {
  const int n = code.size();
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::vector<int> values;
  values.reserve(n);
  for (int i = 1; i <= n; ++i) {
    const auto index = static_cast<std::ptrdiff_t>(code[i]);
    values.push_back(pool[index]);
    pool.erase(pool.begin() + index);
  }
  return Permutation(std::move(values));
}

namespace {

std::vector<int> interior_indices_with(const SubexceedantFunction& code, int wanted) {
  const auto entries = code.entries();
  const auto first = std::find(entries.begin(), entries.end(), 0);
  const auto last = std::find(entries.rbegin(), entries.rend(), 0);
  std::vector<int> out;
  if (first == entries.end()) return out;
  const int lo = static_cast<int>(first - entries.begin()) + 1;
  const int hi = code.size() - static_cast<int>(last - entries.rbegin());
  for (int j = lo + 1; j < hi; ++j) {
    if (code[j] == wanted) out.push_back(j);
  }
  return out;
}

}  // namespace

std::vector<int> m0_set(const SubexceedantFunction& code) { return interior_indices_with(code, 0); }
std::vector<int> m1_set(const SubexceedantFunction& code) { return interior_indices_with(code, 1); }

SubexceedantFunction theta_code(const SubexceedantFunction& code) {
  std::vector<int> t(code.entries().begin(), code.entries().end());
  for (int j : m0_set(code)) t[j - 1] = 1;
  for (int j : m1_set(code)) t[j - 1] = 0;
  // Flipped indices lie before the rightmost zero, so j < n and 1 <= n - j.
  assert(std::all_of(t.begin(), t.end(), [&, i = 0](int s) mutable {
    ++i;
    return s <= code.size() - i;
  }));
  return SubexceedantFunction(std::move(t));
}

Permutation big_theta(const Permutation& p) { return unlehmer(theta_code(lehmer(p))); }

Involution parse_involution(std::string_view name) {
  std::string key(name);
  for (char& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (key == "phi") return Involution::Phi;
  if (key == "psi") return Involution::Psi;
  if (key == "theta") return Involution::Theta;
  throw DomainError("unknown involution '" + std::string(name) + "' (expected phi, psi or theta)");
}

std::string_view involution_name(Involution which) {
  switch (which) {
    case Involution::Phi: return "phi";
    case Involution::Psi: return "psi";
    case Involution::Theta: return "theta";
  }
  return "?";
}

Permutation apply(Involution which, const Permutation& p) {
  switch (which) {
    case Involution::Phi: return phi(p);
    case Involution::Psi: return psi(p);
    case Involution::Theta: return big_theta(p);
  }
  throw DomainError("unknown involution");
}

}  // namespace meshperm
