#include "grot/order.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "grot/error.hpp"

namespace grot {

std::vector<ElementaryOp> elementary_ops(const Multisegment& ms) {
  std::vector<ElementaryOp> out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      if (!linked(ms[i], ms[j])) continue;
      auto [uni, inter] = union_inter(ms[i], ms[j]);
      out.push_back({i, j, ms[i], ms[j], ms.replaced(i, j, uni, inter)});
    }
  }
  return out;
}

OrderResult leq(const Multisegment& a, const Multisegment& b) {
  if (a.side() != b.side()) throw DomainError("leq: multisegments on different sides");
  if (a == b) return {true, OrderCertificate{}};
  if (a.degree() != b.degree() || a.rank() <= b.rank() || support(a) != support(b))
    return {false, std::nullopt};

  const auto target_rank = a.rank();
  // parent[x] = (predecessor, step into x)
  std::map<Multisegment, std::optional<CertificateStep>> parent;
  std::map<Multisegment, Multisegment> pred;
  std::deque<Multisegment> queue{b};
  parent.emplace(b, std::nullopt);
  while (!queue.empty()) {
    Multisegment cur = std::move(queue.front());
    queue.pop_front();
    for (auto& op : elementary_ops(cur)) {
      if (op.result.rank() > target_rank) continue;
      if (parent.contains(op.result)) continue;
      parent.emplace(op.result, CertificateStep{op.first, op.second, op.result});
      pred.emplace(op.result, cur);
      if (op.result == a) {
        OrderCertificate cert;
        Multisegment at = a;
        while (!(at == b)) {
          cert.chain.push_back(*parent.at(at));
          at = pred.at(at);
        }
        std::reverse(cert.chain.begin(), cert.chain.end());
        return {true, std::move(cert)};
      }
      queue.push_back(std::move(op.result));
    }
  }
  return {false, std::nullopt};
}

bool replay(const OrderCertificate& cert, const Multisegment& source, const Multisegment& target) {
  Multisegment cur = source;
  for (const auto& step : cert.chain) {
    const auto ops = elementary_ops(cur);
    auto it = std::find_if(ops.begin(), ops.end(), [&](const ElementaryOp& op) {
      return op.first == step.first && op.second == step.second && op.result == step.result;
    });
    if (it == ops.end()) return false;
    cur = it->result;
  }
  return cur == target;
}

std::set<Multisegment> down_set(const Multisegment& ms) {
  std::set<Multisegment> seen{ms};
  std::deque<Multisegment> queue{ms};
  while (!queue.empty()) {
    Multisegment cur = std::move(queue.front());
    queue.pop_front();
    for (auto& op : elementary_ops(cur))
      if (seen.insert(op.result).second) queue.push_back(std::move(op.result));
  }
  return seen;
}

DownSetPoset::DownSetPoset(const Multisegment& top) {
  auto all = down_set(top);
  elements_.assign(all.begin(), all.end());
  // Higher rank first: a < b implies rank(a) > rank(b).
  std::stable_sort(elements_.begin(), elements_.end(),
                   [](const Multisegment& x, const Multisegment& y) { return x.rank() > y.rank(); });
  const std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i], i);
  below_.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    below_[i][i] = 1;
    for (const auto& op : elementary_ops(elements_[i])) {
      const std::size_t c = *index_of(op.result);
      for (std::size_t k = 0; k < n; ++k)
        if (below_[k][c]) below_[k][i] = 1;
    }
  }
}

std::optional<std::size_t> DownSetPoset::index_of(const Multisegment& ms) const {
  auto it = index_.find(ms);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace grot
