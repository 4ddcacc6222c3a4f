#include "hwcc/cc.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "hwcc/geometry.hpp"

namespace hwcc {

int CharacteristicCycle::multiplicity(const Clan& c) const {
  const auto it = terms_.find(c);
  return it == terms_.end() ? 0 : it->second;
}

std::vector<Clan> CharacteristicCycle::display_order() const {
  std::vector<std::pair<int, Clan>> keyed;
  keyed.reserve(terms_.size());
  for (const auto& [clan, m] : terms_) keyed.emplace_back(dim(clan), clan);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<Clan> out;
  out.reserve(keyed.size());
  for (auto& [d, clan] : keyed) out.push_back(std::move(clan));
  return out;
}

int CcEngine::recursion_case(const Clan& c) {
  const int n = c.size();
  if (n < 1) throw std::invalid_argument("characteristic cycles need n >= 1");
  if (n == 1) return 0;
  const auto [head, tail] = decompose(c);
  if (head == Head::Plus) return 1;
  return (n % 2 == 0 && rank_recursive(tail) == n - 1) ? 3 : 2;
}

std::optional<Clan> CcEngine::annihilator_partner(const Clan& c) {
  if (c.size() < 2 || recursion_case(c) != 3) return std::nullopt;
  return compose(Head::Plus, decompose(c).tail);
}

CcEngine::Terms CcEngine::terms_for(const Clan& c) {
  {
    std::shared_lock lock(mutex_);
    const auto it = memo_.find(c);
    if (it != memo_.end()) return it->second;
  }
  std::map<Clan, int> terms;
  const int kase = recursion_case(c);
  if (kase == 0) {
    terms.emplace(c, 1);
  } else {
    const auto tail = decompose(c).tail;
    const auto lower = terms_for(tail);
    const auto add = [&](Head head) {
      for (const auto& [t, m] : *lower) terms[compose(head, t)] += m;
    };
    add(kase == 1 ? Head::Plus : Head::One);
    if (kase == 3) add(Head::Plus);
  }
  auto shared = std::make_shared<const std::map<Clan, int>>(std::move(terms));
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(c, std::move(shared)).first->second;
}

CharacteristicCycle CcEngine::cc(const Clan& c) { return CharacteristicCycle(c, *terms_for(c)); }

CharacteristicCycle CcEngine::ltc(const Clan& c) {
  const auto full = terms_for(c);
  const int k = hc_cell_index(c);
  std::map<Clan, int> leading;
  for (const auto& [t, m] : *full) {
    if (rank_recursive(t) == k) leading.emplace(t, m);
  }
  return CharacteristicCycle(c, std::move(leading));
}

std::size_t CcEngine::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

void CcEngine::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

CcEngine& default_engine() {
  static CcEngine engine;
  return engine;
}

CharacteristicCycle cc(const Clan& c) { return default_engine().cc(c); }
CharacteristicCycle ltc(const Clan& c) { return default_engine().ltc(c); }
OrbitIndex av(const Clan& c) { return hc_cell_index(c); }
std::optional<Clan> annihilator_partner(const Clan& c) { return CcEngine::annihilator_partner(c); }

}  // namespace hwcc
