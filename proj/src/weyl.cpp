#include "hwcc/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hwcc {

namespace {

void require_same_rank(const SignedPermutation& y, const SignedPermutation& w) {
  if (y.rank() != w.rank()) {
    throw std::invalid_argument("rank mismatch: " + std::to_string(y.rank()) + " vs " +
                                std::to_string(w.rank()));
  }
}

void require_script_w(const SignedPermutation& w) {
  if (!in_script_w(w)) {
    throw std::invalid_argument("(" + w.to_string() + ") is not in the highest weight set");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Sign of the image of c1*e_i + c2*e_j (i != j) under w.
bool image_is_negative(const SignedPermutation& w, int i, int c1, int j, int c2) {
  const int wi = w.entry(i);
  const int wj = w.entry(j);
  const int pi = std::abs(wi);
  const int pj = std::abs(wj);
  const int ci = wi > 0 ? c1 : -c1;
  const int cj = wj > 0 ? c2 : -c2;
  return (pi < pj ? ci : cj) < 0;
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const auto n = entries_.size();
  std::vector<bool> seen(n + 1, false);
  for (int e : entries_) {
    const auto a = static_cast<std::size_t>(std::abs(e));
    if (e == 0 || a > n || seen[a]) {
      throw std::invalid_argument("not a signed permutation: (" + to_string() + ")");
    }
    seen[a] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return SignedPermutation(std::move(e));
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') {
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<int> e;
  if (!text.empty()) {
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      auto token = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
      if (!token.empty() && token.front() == '+') token.remove_prefix(1);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw std::invalid_argument("bad signed permutation entry '" + std::string(token) + "'");
      }
      e.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return SignedPermutation(std::move(e));
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(entries_.size());
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    const int e = entries_[j];
    const int image = static_cast<int>(j) + 1;
    inv[static_cast<std::size_t>(std::abs(e) - 1)] = e > 0 ? image : -image;
  }
  return SignedPermutation(std::move(inv));
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& rhs) const {
  if (rank() != rhs.rank()) throw std::invalid_argument("rank mismatch in compose");
  std::vector<int> out(entries_.size());
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    const int r = rhs.entries_[j];
    const int l = entries_[static_cast<std::size_t>(std::abs(r) - 1)];
    out[j] = r > 0 ? l : -l;
  }
  return SignedPermutation(std::move(out));
}

SignedPermutation SignedPermutation::times_simple(int j) const {
  const int n = rank();
  if (j < 1 || j > n) throw std::invalid_argument("simple index out of range");
  auto e = entries_;
  if (j < n) {
    std::swap(e[static_cast<std::size_t>(j - 1)], e[static_cast<std::size_t>(j)]);
  } else {
    e[static_cast<std::size_t>(n - 1)] = -e[static_cast<std::size_t>(n - 1)];
  }
  return SignedPermutation(std::move(e));
}

std::string SignedPermutation::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(entries_[j]);
  }
  return s;
}

Root::Root(std::vector<int> coefficients) : coefficients_(std::move(coefficients)) {
  int nonzero = 0;
  int abs_sum = 0;
  for (int c : coefficients_) {
    if (c != 0) ++nonzero;
    abs_sum += std::abs(c);
    if (std::abs(c) > 2) throw std::invalid_argument("not a root: " + to_string());
  }
  const bool ok = (nonzero == 2 && abs_sum == 2) || (nonzero == 1 && abs_sum == 2);
  if (!ok) throw std::invalid_argument("not a root: " + to_string());
}

Root Root::difference(int n, int i, int j) {
  if (i == j) throw std::invalid_argument("e_i - e_i is not a root");
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  c.at(static_cast<std::size_t>(i - 1)) = 1;
  c.at(static_cast<std::size_t>(j - 1)) = -1;
  return Root(std::move(c));
}

Root Root::sum(int n, int i, int j) {
  if (i == j) return long_root(n, i);
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  c.at(static_cast<std::size_t>(i - 1)) = 1;
  c.at(static_cast<std::size_t>(j - 1)) = 1;
  return Root(std::move(c));
}

Root Root::long_root(int n, int i) {
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  c.at(static_cast<std::size_t>(i - 1)) = 2;
  return Root(std::move(c));
}

Root Root::simple(int n, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("simple index out of range");
  return j < n ? difference(n, j, j + 1) : long_root(n, n);
}

bool Root::is_positive() const {
  for (int c : coefficients_) {
    if (c != 0) return c > 0;
  }
  return false;
}

bool Root::is_noncompact() const {
  int total = 0;
  for (int c : coefficients_) total += c;
  return total != 0;
}

Root Root::operator-() const {
  auto c = coefficients_;
  for (int& x : c) x = -x;
  return Root(std::move(c));
}

std::string Root::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const int c = coefficients_[i];
    if (c == 0) continue;
    if (c < 0) {
      s += '-';
    } else if (!s.empty()) {
      s += '+';
    }
    if (std::abs(c) != 1) s += std::to_string(std::abs(c));
    s += 'e' + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

std::vector<Root> positive_roots(int n) {
  std::vector<Root> roots;
  roots.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) roots.push_back(Root::difference(n, i, j));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) roots.push_back(Root::sum(n, i, j));
  }
  return roots;
}

Root act(const SignedPermutation& w, const Root& beta) {
  if (w.rank() != beta.rank()) throw std::invalid_argument("rank mismatch in act");
  std::vector<int> image(static_cast<std::size_t>(w.rank()), 0);
  const auto coeffs = beta.coefficients();
  for (int j = 1; j <= w.rank(); ++j) {
    const int c = coeffs[static_cast<std::size_t>(j - 1)];
    if (c == 0) continue;
    const int wj = w.entry(j);
    image[static_cast<std::size_t>(std::abs(wj) - 1)] += wj > 0 ? c : -c;
  }
  return Root(std::move(image));
}

int length(const SignedPermutation& w) {
  const int n = w.rank();
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    if (w.entry(i) < 0) ++count;  // 2e_i
    for (int j = i + 1; j <= n; ++j) {
      if (image_is_negative(w, i, 1, j, -1)) ++count;
      if (image_is_negative(w, i, 1, j, 1)) ++count;
    }
  }
  return count;
}

bool in_script_w(const SignedPermutation& w) {
  const int n = w.rank();
  int next_negative = -1;
  int negatives = 0;
  for (int e : w.entries()) {
    if (e < 0) ++negatives;
  }
  int next_positive = n;
  for (int e : w.entries()) {
    if (e < 0) {
      if (e != next_negative) return false;
      --next_negative;
    } else {
      if (e != next_positive) return false;
      --next_positive;
    }
  }
  return next_positive == negatives;
}

std::vector<SignedPermutation> script_w_elements(int n) {
  if (n < 0 || n > 30) throw std::invalid_argument("rank out of range for enumeration");
  std::vector<SignedPermutation> out;
  out.reserve(std::size_t{1} << n);
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    std::vector<int> e(static_cast<std::size_t>(n));
    int neg = 0;
    int pos = n;
    for (int j = 0; j < n; ++j) {
      e[static_cast<std::size_t>(j)] = (mask >> j) & 1UL ? -(++neg) : pos--;
    }
    out.emplace_back(std::move(e));
  }
  return out;
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
  if (n < 0 || n > 6) throw std::invalid_argument("rank out of range for full enumeration");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      auto e = perm;
      for (int j = 0; j < n; ++j) {
        if ((mask >> j) & 1U) e[static_cast<std::size_t>(j)] = -e[static_cast<std::size_t>(j)];
      }
      out.emplace_back(std::move(e));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

TauSet tau(const SignedPermutation& w) {
  const int n = w.rank();
  TauSet out;
  for (int j = 1; j < n; ++j) {
    if (image_is_negative(w, j, 1, j + 1, -1)) out.push_back(j);
  }
  if (n > 0 && w.entry(n) < 0) out.push_back(n);
  return out;
}

LongForm long_form(const SignedPermutation& w) {
  const int n = w.rank();
  LongForm lf;
  lf.u.resize(static_cast<std::size_t>(2 * n));
  for (int j = 1; j <= n; ++j) {
    const int wj = w.entry(j);
    const int u = wj > 0 ? wj : 2 * n + wj + 1;
    lf.u[static_cast<std::size_t>(j - 1)] = u;
    lf.u[static_cast<std::size_t>(2 * n - j)] = 2 * n + 1 - u;
  }
  return lf;
}

SignedPermutation short_form(const LongForm& lf) {
  const auto size = lf.u.size();
  if (size % 2 != 0) throw std::invalid_argument("long form must have even length");
  const int n = static_cast<int>(size / 2);
  std::vector<bool> seen(size + 1, false);
  for (int u : lf.u) {
    if (u < 1 || u > 2 * n || seen[static_cast<std::size_t>(u)]) {
      throw std::invalid_argument("long form is not a permutation of 1..2n");
    }
    seen[static_cast<std::size_t>(u)] = true;
  }
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const int u = lf.u[static_cast<std::size_t>(j - 1)];
    if (u + lf.u[static_cast<std::size_t>(2 * n - j)] != 2 * n + 1) {
      throw std::invalid_argument("long form violates u_j + u_{2n-j+1} = 2n+1 at j=" +
                                  std::to_string(j));
    }
    e[static_cast<std::size_t>(j - 1)] = u <= n ? u : u - 2 * n - 1;
  }
  return SignedPermutation(std::move(e));
}

std::string LongForm::to_string() const {
  std::ostringstream os;
  const auto n = u.size() / 2;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (j) os << ' ';
    if (j == n) os << "| ";
    os << u[j];
  }
  return os.str();
}

bool bruhat_leq_longform(const SignedPermutation& y, const SignedPermutation& w) {
  require_same_rank(y, w);
  const auto uy = long_form(y).u;
  const auto uw = long_form(w).u;
  std::vector<int> py;
  std::vector<int> pw;
  for (std::size_t k = 0; k < uy.size(); ++k) {
    py.insert(std::upper_bound(py.begin(), py.end(), uy[k]), uy[k]);
    pw.insert(std::upper_bound(pw.begin(), pw.end(), uw[k]), uw[k]);
    for (std::size_t i = 0; i <= k; ++i) {
      if (py[i] > pw[i]) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> b_table(const SignedPermutation& w) {
  const auto u = long_form(w).u;
  const auto m = u.size();
  std::vector<std::vector<int>> b(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const int prev = i ? b[i - 1][j] : 0;
      b[i][j] = prev + (u[i] <= static_cast<int>(j + 1) ? 1 : 0);
    }
  }
  return b;
}

std::vector<std::vector<int>> b_matrix(const SignedPermutation& w) {
  auto full = b_table(w);
  const auto n = static_cast<std::size_t>(w.rank());
  full.resize(n);
  for (auto& row : full) row.resize(n);
  return full;
}

bool bruhat_leq_bmatrix(const SignedPermutation& y, const SignedPermutation& w) {
  require_same_rank(y, w);
  const auto by = b_matrix(y);
  const auto bw = b_matrix(w);
  for (std::size_t i = 0; i < by.size(); ++i) {
    for (std::size_t j = 0; j < by.size(); ++j) {
      if (by[i][j] < bw[i][j]) return false;
    }
  }
  return true;
}

std::vector<int> a_vector(const SignedPermutation& w) {
  require_script_w(w);
  std::vector<int> a;
  a.reserve(static_cast<std::size_t>(w.rank()));
  int count = 0;
  for (int e : w.entries()) {
    if (e > 0) ++count;
    a.push_back(count);
  }
  return a;
}

bool bruhat_leq_avector(const SignedPermutation& y, const SignedPermutation& w) {
  require_same_rank(y, w);
  const auto ay = a_vector(y);
  const auto aw = a_vector(w);
  for (std::size_t i = 0; i < ay.size(); ++i) {
    if (ay[i] < aw[i]) return false;
  }
  return true;
}

std::string to_string(const TauSet& tau) {
  std::string s;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(tau[i]);
  }
  return s;
}

}  // namespace hwcc
