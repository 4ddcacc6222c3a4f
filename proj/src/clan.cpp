#include "hwcc/clan.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace hwcc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<int> relabel(std::vector<int> slots) {
  int next = 0;
  for (int& s : slots) {
    if (s != Clan::kPlus) s = ++next;
  }
  return slots;
}

}  // namespace

Clan Clan::from_slots(std::vector<int> slots) {
  int expected = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const int s = slots[i];
    if (s == kPlus) continue;
    const int slot = static_cast<int>(i) + 1;
    if (s < 0) throw ClanError("slot " + std::to_string(slot) + ": negative entry", slot);
    if (s != expected) {
      throw ClanError("slot " + std::to_string(slot) + ": expected number " +
                          std::to_string(expected) + " but found " + std::to_string(s) +
                          " (numbers must read 1,2,...,k left to right)",
                      slot);
    }
    ++expected;
  }
  return Clan(std::move(slots));
}

Clan Clan::canonical(std::span<const int> raw) {
  return Clan(relabel(std::vector<int>(raw.begin(), raw.end())));
}

Clan Clan::from_mask(int n, std::uint64_t mask) {
  if (n < 0 || n > 64) throw std::invalid_argument("mask form supports n <= 64");
  std::vector<int> s(static_cast<std::size_t>(n), kPlus);
  for (int j = 0; j < n; ++j) {
    if ((mask >> j) & 1U) s[static_cast<std::size_t>(j)] = 1;
  }
  return Clan(relabel(std::move(s)));
}

Clan Clan::all_plus(int n) { return Clan(std::vector<int>(static_cast<std::size_t>(n), kPlus)); }

Clan Clan::all_numbers(int n) {
  return Clan(relabel(std::vector<int>(static_cast<std::size_t>(n), 1)));
}

Clan Clan::parse(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') {
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<int> slots;
  auto bad = [&](std::string_view token) {
    const int slot = static_cast<int>(slots.size()) + 1;
    return ClanError("slot " + std::to_string(slot) + ": unexpected symbol '" + std::string(token) +
                         "' (only '+' and positive numbers are allowed)",
                     slot);
  };
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      const auto token =
          trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
      if (token == "+") {
        slots.push_back(kPlus);
      } else {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value <= 0) {
          throw bad(token);
        }
        slots.push_back(value);
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (char ch : text) {
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (ch == '+') {
        slots.push_back(kPlus);
      } else if (ch >= '1' && ch <= '9') {
        slots.push_back(ch - '0');
      } else {
        throw bad(std::string_view(&ch, 1));
      }
    }
  }
  return from_slots(std::move(slots));
}

int Clan::number_count() const {
  return static_cast<int>(std::count_if(slots_.begin(), slots_.end(), [](int s) { return s != kPlus; }));
}

std::string Clan::to_token_string() const {
  std::string s;
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (i) s += ',';
    s += slots_[i] == kPlus ? std::string("+") : std::to_string(slots_[i]);
  }
  return s;
}

std::string Clan::to_compact_string() const {
  if (number_count() > 9) throw std::logic_error("compact clan form needs numbers <= 9");
  std::string s;
  for (int v : slots_) s += v == kPlus ? '+' : static_cast<char>('0' + v);
  return s;
}

std::string Clan::to_string() const { return size() <= 9 ? to_compact_string() : to_token_string(); }

std::size_t ClanHash::operator()(const Clan& c) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int s : c.slots()) {
    h ^= static_cast<std::size_t>(s) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h ^ static_cast<std::size_t>(c.size());
}

FullClan to_full(const Clan& c) {
  const auto n = static_cast<std::size_t>(c.size());
  FullClan f;
  f.symbols.resize(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const int s = c.slots()[i];
    f.symbols[i] = s;
    f.symbols[2 * n - 1 - i] = s == Clan::kPlus ? -1 : s;
  }
  return f;
}

std::string FullClan::to_string() const {
  std::string s;
  const auto n = symbols.size() / 2;
  const bool tokens = std::any_of(symbols.begin(), symbols.end(), [](int v) { return v > 9; });
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i == n) s += '|';
    else if (i && tokens) s += ',';
    const int v = symbols[i];
    s += v == 0 ? std::string("+") : v < 0 ? std::string("-") : std::to_string(v);
  }
  return s;
}

Clan from_full(const FullClan& full) {
  const auto m = full.symbols.size();
  if (m % 2 != 0) throw ClanError("full clan must have even length", 0);
  const auto n = m / 2;
  int plus = 0;
  int minus = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const int v = full.symbols[i];
    const int slot = static_cast<int>(i) + 1;
    if (v == 0) ++plus;
    if (v == -1) ++minus;
    if (v < -1) throw ClanError("symbol out of range", slot);
    if (v > 0) {
      const auto partners = std::count(full.symbols.begin(), full.symbols.end(), v);
      if (partners != 2) throw ClanError("number without exactly one partner", slot);
    }
    const int mirror = full.symbols[m - 1 - i];
    if (v == 0 && mirror != -1) throw ClanError("'+' not mirrored by '-'", slot);
    if (v == -1 && mirror != 0) throw ClanError("'-' not mirrored by '+'", slot);
    if (v > 0) {
      std::size_t j = 0;
      while (j < m && (j == i || full.symbols[j] != v)) ++j;
      const int mi = full.symbols[m - 1 - i];
      const int mj = full.symbols[m - 1 - j];
      if (mi <= 0 || mi != mj) throw ClanError("number pairs are not symmetric", slot);
    }
  }
  if (plus != minus) throw ClanError("unequal numbers of '+' and '-'", 0);
  std::vector<int> left(full.symbols.begin(), full.symbols.begin() + static_cast<std::ptrdiff_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (left[i] == -1) {
      throw ClanError("'-' in the left half is not a highest weight clan", static_cast<int>(i) + 1);
    }
    // Mirror-paired numbers are required: the partner of slot i must be 2n-i+1.
    if (left[i] > 0 && full.symbols[m - 1 - i] != left[i]) {
      throw ClanError("number paired inside the left half is not a highest weight clan",
                      static_cast<int>(i) + 1);
    }
  }
  return Clan::canonical(left);
}

std::vector<Clan> all_clans(int n) {
  if (n < 0 || n > 30) throw std::invalid_argument("rank out of range for enumeration");
  std::vector<Clan> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    out.push_back(Clan::from_mask(n, mask));
  }
  return out;
}

Clan clan_from_w(const SignedPermutation& w) {
  if (!in_script_w(w)) {
    throw std::invalid_argument("(" + w.to_string() + ") is not in the highest weight set");
  }
  std::vector<int> slots;
  slots.reserve(static_cast<std::size_t>(w.rank()));
  for (int e : w.entries()) slots.push_back(e > 0 ? Clan::kPlus : -e);
  return Clan::from_slots(std::move(slots));
}

SignedPermutation w_from_clan(const Clan& c) {
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(c.size()));
  int next_plus = c.size();
  for (int s : c.slots()) e.push_back(s == Clan::kPlus ? next_plus-- : -s);
  return SignedPermutation(std::move(e));
}

TauSet tau_clan(const Clan& c) {
  const int n = c.size();
  TauSet out;
  for (int j = 1; j < n; ++j) {
    const bool a = c.is_plus(j);
    const bool b = c.is_plus(j + 1);
    if (b || (!a && c.number(j + 1) == c.number(j) + 1)) out.push_back(j);
  }
  if (n > 0 && !c.is_plus(n)) out.push_back(n);
  return out;
}

std::vector<int> plus_prefix_counts(const Clan& c) {
  std::vector<int> a;
  a.reserve(static_cast<std::size_t>(c.size()));
  int count = 0;
  for (int s : c.slots()) {
    if (s == Clan::kPlus) ++count;
    a.push_back(count);
  }
  return a;
}

std::optional<Clan> s_op(const Clan& c, int j) {
  const int n = c.size();
  if (j < 1 || j > n) throw std::invalid_argument("simple index out of range");
  std::vector<int> s(c.slots().begin(), c.slots().end());
  if (j < n) {
    if (!c.is_plus(j) || c.is_plus(j + 1)) return std::nullopt;
    std::swap(s[static_cast<std::size_t>(j - 1)], s[static_cast<std::size_t>(j)]);
  } else {
    if (!c.is_plus(n)) return std::nullopt;
    s[static_cast<std::size_t>(n - 1)] = 1;
  }
  return Clan::canonical(s);
}

bool closure_leq(const Clan& c1, const Clan& c) {
  if (c1.size() != c.size()) throw std::invalid_argument("clan size mismatch");
  const auto a1 = plus_prefix_counts(c1);
  const auto a = plus_prefix_counts(c);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a1[i] < a[i]) return false;
  }
  return true;
}

int dim(const Clan& c) { return length(w_from_clan(c)); }

std::optional<std::vector<Clan>> t_op(const Clan& c, int j, int k) {
  const int n = c.size();
  if (std::abs(j - k) != 1 || std::min(j, k) < 1 || std::max(j, k) > n) {
    throw std::invalid_argument("T operator needs adjacent simple indices in 1..n");
  }
  const auto in_tau = [&](int i) {
    const auto t = tau_clan(c);
    return std::binary_search(t.begin(), t.end(), i);
  };
  if (in_tau(j) || !in_tau(k)) return std::nullopt;

  std::vector<int> s(c.slots().begin(), c.slots().end());
  const auto at = [&](int slot) -> int& { return s[static_cast<std::size_t>(slot - 1)]; };
  std::vector<Clan> out;

  if (std::max(j, k) < n) {
    // Equal root lengths; slots p, p+1, p+2 with p = min(j, k).
    const int p = std::min(j, k);
    if (k == j + 1) {
      // (+ m +) -> (+ + m) and (+ m m+1) -> (m + m+1)
      if (c.is_plus(p + 2)) {
        std::swap(at(p + 1), at(p + 2));
      } else {
        std::swap(at(p), at(p + 1));
      }
    } else {
      // (+ + m) -> (+ m +) and (m + m+1) -> (+ m m+1)
      if (c.is_plus(p)) {
        std::swap(at(p + 1), at(p + 2));
      } else {
        std::swap(at(p), at(p + 1));
      }
    }
    out.push_back(Clan::canonical(s));
  } else if (j == n) {
    // T_{n,n-1}: (.. + +) -> (.. + k+1) and (.. m +) -> (.. + m)
    if (c.is_plus(n - 1)) {
      at(n) = 1;
    } else {
      std::swap(at(n - 1), at(n));
    }
    out.push_back(Clan::canonical(s));
  } else {
    // T_{n-1,n}: (.. + m) -> {(.. m +), (.. + +)}
    auto swapped = s;
    std::swap(swapped[static_cast<std::size_t>(n - 2)], swapped[static_cast<std::size_t>(n - 1)]);
    out.push_back(Clan::canonical(swapped));
    at(n) = Clan::kPlus;
    out.push_back(Clan::canonical(s));
  }
  return out;
}

Decomposition decompose(const Clan& c) {
  if (c.empty()) throw std::invalid_argument("cannot decompose the empty clan");
  const auto slots = c.slots();
  return {c.is_plus(1) ? Head::Plus : Head::One, Clan::canonical(slots.subspan(1))};
}

Clan compose(Head head, const Clan& tail) {
  std::vector<int> s;
  s.reserve(static_cast<std::size_t>(tail.size()) + 1);
  s.push_back(head == Head::Plus ? Clan::kPlus : 1);
  s.insert(s.end(), tail.slots().begin(), tail.slots().end());
  return Clan::canonical(s);
}

SignedPermutation embed_fixing_one(const SignedPermutation& tail_w) {
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(tail_w.rank()) + 1);
  e.push_back(1);
  for (int x : tail_w.entries()) e.push_back(x > 0 ? x + 1 : x - 1);
  return SignedPermutation(std::move(e));
}

SignedPermutation lift_w(Head head, const SignedPermutation& w_prime) {
  const int n = w_prime.rank();
  if (n < 1 || w_prime.entry(1) != 1) {
    throw std::invalid_argument("lift_w needs w' with w'(1) = 1, got (" + w_prime.to_string() + ")");
  }
  std::vector<int> left(static_cast<std::size_t>(n));
  if (head == Head::One) {
    // s_{2e_1}: negate e_1.
    for (int i = 1; i <= n; ++i) left[static_cast<std::size_t>(i - 1)] = i == 1 ? -1 : i;
  } else {
    // sigma = s_{n-1}...s_1: e_1 -> e_n, e_i -> e_{i-1}.
    for (int i = 1; i <= n; ++i) left[static_cast<std::size_t>(i - 1)] = i == 1 ? n : i - 1;
  }
  return SignedPermutation(std::move(left)).compose(w_prime);
}

std::string to_string(Head head) { return head == Head::Plus ? "+" : "1"; }

}  // namespace hwcc
